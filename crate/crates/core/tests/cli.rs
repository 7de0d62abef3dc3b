//! The command line driven through `ppdimer::cli::run`.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use ppdimer::cli::{run, SeriesOutput};
use ppdimer::doublebox::{BoxTyping, DoubleBoxClass};
use ppdimer::planepart::Cell;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn ppdimer(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("ppdimer").chain(args.iter().copied()), &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).expect("utf-8"),
        stderr: String::from_utf8(err).expect("utf-8"),
    }
}

fn classes_of<'a>(svg: &'a roxmltree::Document, tag: &str) -> Vec<&'a str> {
    svg.descendants()
        .filter(|n| n.has_tag_name(tag))
        .filter_map(|n| n.attribute("class"))
        .collect()
}

#[test]
fn macmahon_as_csv() {
    let r = ppdimer(&["series", "macmahon", "--trunc", "5", "--format", "csv"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, "0,1\n1,1\n2,3\n3,6\n4,13\n5,24\n");
}

#[test]
fn box_series_as_json() {
    let r = ppdimer(&["series", "box", "-a", "1", "-b", "1", "-c", "1", "--trunc", "3"]);
    assert_eq!(r.code, 0);
    let out: SeriesOutput = serde_json::from_str(&r.stdout).expect("json");
    assert_eq!(out.params, Some([1, 1, 1]));
    assert_eq!(out.series.to_i64s(), Some(vec![1, 1, 0, 0]));
}

#[test]
fn verification_exit_codes() {
    assert_eq!(ppdimer(&["verify", "main", "-a", "1", "-b", "1", "-c", "1", "--trunc", "3"]).code, 0);
    assert_eq!(ppdimer(&["verify", "bijection", "--window", "2"]).code, 0);
    assert_eq!(ppdimer(&["verify", "stabilization", "-a", "1", "-b", "1", "-c", "1", "--trunc", "2"]).code, 0);
    let swapped = ppdimer(&["verify", "recurrence", "--grid", "2", "--trunc", "8", "--form", "swapped"]);
    assert_eq!(swapped.code, 0);
    let stated = ppdimer(&["verify", "recurrence", "--grid", "2", "--trunc", "8"]);
    assert_eq!(stated.code, 1);
    assert!(stated.stderr.contains("recurrence fails"), "{}", stated.stderr);
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(ppdimer(&["series", "nonsense"]).code, 2);
    assert_eq!(ppdimer(&["series", "zddc", "-a", "3", "--window", "2"]).code, 2);
    assert_eq!(ppdimer(&["dump", "pp", "1;2"]).code, 2);
}

#[test]
fn ceiling_exits_3_with_partial_windows() {
    let r = ppdimer(&["series", "zddc", "-a", "1", "-b", "1", "-c", "1", "--trunc", "4", "--n-ceiling", "3"]);
    assert_eq!(r.code, 3);
    let partial: Vec<SeriesOutput> = serde_json::from_str(&r.stdout).expect("partial windows");
    let ns: Vec<_> = partial.iter().map(|w| w.n).collect();
    assert_eq!(ns, vec![Some(1), Some(2), Some(3)]);
}

#[test]
fn cache_hit_equals_fresh_computation() {
    let dir = tempfile::tempdir().expect("temp dir");
    let cache = dir.path().to_str().expect("utf-8 path");
    let args = ["series", "zdbc", "-a", "1", "-b", "2", "-c", "1", "--trunc", "3", "--cache-dir", cache];
    let first = ppdimer(&args);
    let entries = || fs::read_dir(dir.path()).expect("cache dir").count();
    assert_eq!(entries(), 1);
    let second = ppdimer(&args);
    let fresh = ppdimer(&[&args[..10], &["--no-cache"]].concat());
    assert_eq!(entries(), 1);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, fresh.stdout);
}

#[test]
fn cache_serves_stored_entries() {
    let dir = tempfile::tempdir().expect("temp dir");
    let cache = dir.path().to_str().expect("utf-8 path");
    let args = ["series", "x", "-a", "1", "-b", "1", "-c", "1", "--trunc", "2", "--format", "csv", "--cache-dir", cache];
    assert_eq!(ppdimer(&args).stdout, "0,1\n1,3\n2,9\n");
    // a stored entry is read back, not recomputed
    let entry = fs::read_dir(dir.path()).expect("dir").next().expect("entry").expect("entry").path();
    let forged = r#"{"kind":"x","params":[1,1,1],"series":{"trunc_order":2,"coeffs":["7","7","7"]}}"#;
    fs::write(&entry, forged).expect("write");
    assert_eq!(ppdimer(&args).stdout, "0,7\n1,7\n2,7\n");
}

fn render(kind: &str, json: &str, dir: &Path) -> String {
    let path = dir.join(format!("{kind}.json"));
    fs::write(&path, json).expect("write");
    let r = ppdimer(&["render", kind, path.to_str().expect("utf-8")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    r.stdout
}

#[test]
fn plane_partition_renders_one_lozenge_per_visible_face() {
    let dir = tempfile::tempdir().expect("temp dir");
    let pp = ppdimer(&["dump", "pp", "2,1;1"]);
    assert_eq!(pp.code, 0);
    let svg = render("pp", &pp.stdout, dir.path());
    let doc = roxmltree::Document::parse(&svg).expect("well-formed SVG");
    let lozenges = classes_of(&doc, "polygon");
    // window 2 fits the partition: 3 n^2 lozenges
    assert_eq!(lozenges.len(), 12);
    for axis in ["z", "x", "y"] {
        assert_eq!(lozenges.iter().filter(|c| **c == format!("lozenge {axis}")).count(), 4);
    }
}

#[test]
fn double_dimer_render_shows_the_nodes() {
    let dir = tempfile::tempdir().expect("temp dir");
    let dump = ppdimer(&["dump", "ddc", "-a", "2", "-b", "3", "-c", "1", "--window", "5"]);
    assert_eq!(dump.code, 0, "{}", dump.stderr);
    let svg = render("ddc", &dump.stdout, dir.path());
    let doc = roxmltree::Document::parse(&svg).expect("well-formed SVG");
    let nodes = classes_of(&doc, "circle");
    let count = |c: &str| nodes.iter().filter(|n| **n == format!("node {c}")).count();
    // red a + c, green c + b, blue b + a
    assert_eq!((count("red"), count("green"), count("blue")), (3, 4, 5));
}

#[test]
fn class_render_marks_box_types() {
    let set = |v: &[Cell]| v.iter().copied().collect::<BTreeSet<Cell>>();
    let typing = BoxTyping {
        params: [1, 1, 1],
        type1: [set(&[[0, 1, 1]]), set(&[[1, 0, 1], [2, 0, 1], [1, 0, 2]]), set(&[[1, 1, 0]])],
        type2: set(&[[2, 1, 1], [1, 1, 2]]),
        type3: set(&[[1, 1, 1]]),
    };
    let cls = DoubleBoxClass::from_typing(typing).expect("realizable");
    let dir = tempfile::tempdir().expect("temp dir");
    let svg = render("dbc", &serde_json::to_string(&cls.dump()).expect("json"), dir.path());
    let doc = roxmltree::Document::parse(&svg).expect("well-formed SVG");
    let groups = classes_of(&doc, "g");
    assert_eq!(groups.iter().filter(|c| c.contains("type-3")).count(), 1);
    assert_eq!(groups.iter().filter(|c| c.contains("type-2")).count(), 2);
    assert_eq!(groups.iter().filter(|c| c.contains("type-1")).count(), 5);
    assert!(!groups.iter().any(|c| c.contains("moveable")));
}

#[test]
fn malformed_dump_names_the_offending_field() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"n":2,"params":[0,0,0],"edges":[["x"]],"loops":0,"excess":0,"pairing":[]}"#).expect("write");
    let r = ppdimer(&["render", "ddc", path.to_str().expect("utf-8")]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("edges[0]"), "{}", r.stderr);
}

#[test]
fn output_file_option() {
    let dir = tempfile::tempdir().expect("temp dir");
    let out = dir.path().join("m.csv");
    let r = ppdimer(&["series", "macmahon", "--trunc", "2", "--format", "csv", "--out", out.to_str().expect("utf-8")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    assert_eq!(fs::read_to_string(out).expect("written"), "0,1\n1,1\n2,3\n");
}
