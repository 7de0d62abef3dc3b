//! The `ppdimer` command line: series, verification runs, JSON dumps and
//! SVG rendering.
//!
//! Exit codes: 0 pass, 1 verified mismatch, 2 usage or input error, 3 a
//! resource ceiling was hit (no stabilization within `--n-ceiling`).

pub mod cache;
pub mod render;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::condense::{recurrence_grid, verify_main, x_series, Form, MainReport, Orientation};
use crate::doublebox::{enumerate_classes, zdbc, ClassDump};
use crate::doubledimer::{dbc_to_ddc, minimal_config, zddc, zddc_window, ConfigDump, DoubleDimerError};
use crate::hexlattice::{Edge, HexGraph, NodeSpec, Tri};
use crate::planepart::{enumerate_boxed, from_matching, to_matching, PlanePartition};
use crate::qseries::{macmahon, macmahon_box, QSeries};

use cache::Cache;

#[derive(Debug, Parser)]
#[command(name = "ppdimer", version, about = "Double-box and double-dimer generating functions")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cache directory; caching is off when neither this nor the
    /// environment variable is set
    #[arg(long, global = true, env = "PPDIMER_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    no_cache: bool,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the result here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, Args)]
struct Params {
    #[arg(short = 'a', default_value_t = 0)]
    a: usize,
    #[arg(short = 'b', default_value_t = 0)]
    b: usize,
    #[arg(short = 'c', default_value_t = 0)]
    c: usize,
}

impl Params {
    fn triple(self) -> [usize; 3] {
        [self.a, self.b, self.c]
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute one generating function
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 4)]
        trunc: usize,
        /// Single window `H(n)` instead of stabilization (zddc only)
        #[arg(long)]
        window: Option<usize>,
        #[arg(long, default_value_t = 10)]
        n_ceiling: usize,
    },
    /// Run a verification and exit 0 only if it passes
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Draw a JSON dump as SVG
    Render {
        #[arg(value_enum)]
        object: RenderObject,
        input: PathBuf,
        /// Window size for plane partitions (default: smallest that fits)
        #[arg(long)]
        window: Option<usize>,
    },
    /// Write JSON dumps of classes, configurations or the lattice
    Dump {
        #[command(subcommand)]
        target: DumpTarget,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    Macmahon,
    Box,
    Zdbc,
    Zddc,
    X,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderObject {
    Pp,
    Dbc,
    Ddc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Stated,
    Swapped,
}

#[derive(Debug, Subcommand)]
enum VerifyTarget {
    /// zdbc, the product side and zddc agree
    Main {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 3)]
        trunc: usize,
        #[arg(long, default_value_t = 10)]
        n_ceiling: usize,
    },
    /// The condensation recurrence on a parameter grid
    Recurrence {
        #[arg(long, default_value_t = 4)]
        grid: usize,
        #[arg(long, default_value_t = 20)]
        trunc: usize,
        #[arg(long, value_enum, default_value_t = FormArg::Stated)]
        form: FormArg,
    },
    /// Round trip and weight transport of the folklore bijection
    Bijection {
        #[arg(long, default_value_t = 3)]
        window: usize,
    },
    /// Stabilization of the double-dimer windows for every truncation up to
    /// `--trunc`
    Stabilization {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 3)]
        trunc: usize,
        #[arg(long, default_value_t = 10)]
        n_ceiling: usize,
    },
}

#[derive(Debug, Subcommand)]
enum DumpTarget {
    /// Every double-box class up to a weight
    Classes {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 2)]
        trunc: usize,
    },
    /// The image of a class on `H(n)`; without `--class`, the minimal
    /// configuration
    Ddc {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        window: usize,
        /// Index into the class list of `dump classes --trunc`
        #[arg(long)]
        class: Option<usize>,
        #[arg(long, default_value_t = 0)]
        rep: usize,
        #[arg(long, default_value_t = 4)]
        trunc: usize,
    },
    /// A plane partition given by rows of heights, e.g. "3,1;2"
    Pp {
        heights: String,
    },
    /// Vertices, edges and nodes of `H(n)`
    Graph {
        #[arg(long)]
        window: usize,
        #[command(flatten)]
        params: Params,
    },
}

/// Why a run did not succeed, with its exit code.
#[derive(Debug)]
enum Failure {
    Mismatch(String),
    Usage(String),
    /// message, and the partial results as JSON for standard output
    Ceiling(String, String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Ceiling(..) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Mismatch(m) | Failure::Usage(m) | Failure::Ceiling(m, _) => m,
        }
    }
}

/// Output of a run: the text to emit and, for verifications, a failure to
/// report after emitting it.
struct Outcome {
    text: String,
    failure: Option<Failure>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, failure: None }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let result = pool.install(|| execute(&cli));
    let outcome = match result {
        Ok(o) => o,
        Err(f) => Outcome {
            text: match &f {
                Failure::Ceiling(_, partial) => partial.clone(),
                _ => String::new(),
            },
            failure: Some(f),
        },
    };
    if !outcome.text.is_empty() {
        let written = match &cli.out {
            Some(path) => fs::write(path, &outcome.text),
            None => stdout.write_all(outcome.text.as_bytes()),
        };
        if let Err(e) = written {
            let _ = writeln!(stderr, "error: cannot write output: {e}");
            return 2;
        }
    }
    match outcome.failure {
        None => 0,
        Some(f) => {
            let _ = writeln!(stderr, "{}", f.message());
            f.code()
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let cache = match (&cli.cache_dir, cli.no_cache) {
        (Some(dir), false) => {
            Some(Cache::open(dir).map_err(|e| Failure::Usage(format!("error: cache directory {dir:?}: {e}")))?)
        }
        _ => None,
    };
    match &cli.command {
        Command::Series {
            kind,
            params,
            trunc,
            window,
            n_ceiling,
        } => cmd_series(cli.format, cache.as_ref(), *kind, *params, *trunc, *window, *n_ceiling),
        Command::Verify { target } => cmd_verify(cli.format, target),
        Command::Render { object, input, window } => cmd_render(*object, input, *window),
        Command::Dump { target } => cmd_dump(target),
    }
}

/// A computed series as emitted by `series`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesOutput {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<[usize; 3]>,
    pub series: QSeries,
    /// window used, or the stabilization window for zddc
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn series_csv(s: &QSeries) -> String {
    let mut out = String::new();
    for (k, c) in s.coeffs().iter().enumerate() {
        let _ = writeln!(out, "{k},{c}");
    }
    out
}

fn series_table(header: &str, s: &QSeries) -> String {
    let mut out = format!("{header}\n");
    let width = s.coeffs().iter().map(|c| c.to_string().len()).max().unwrap_or(1).max(11);
    let _ = writeln!(out, "{:>3}  {:>width$}", "k", "coefficient");
    for (k, c) in s.coeffs().iter().enumerate() {
        let _ = writeln!(out, "{k:>3}  {:>width$}", c.to_string());
    }
    out
}

fn stabilization_failure(e: DoubleDimerError) -> Failure {
    match e {
        DoubleDimerError::NoStabilization { ceiling, partial } => {
            let dump: Vec<SeriesOutput> = partial
                .into_iter()
                .map(|(n, series)| SeriesOutput {
                    kind: "zddc_window".into(),
                    params: None,
                    series,
                    n: Some(n),
                })
                .collect();
            Failure::Ceiling(
                format!("error: no stabilization up to n = {ceiling}; partial windows written to the output"),
                json(&dump),
            )
        }
        other => Failure::Usage(format!("error: {other}")),
    }
}

fn cmd_series(
    format: Format,
    cache: Option<&Cache>,
    kind: SeriesKind,
    params: Params,
    trunc: usize,
    window: Option<usize>,
    n_ceiling: usize,
) -> Result<Outcome, Failure> {
    let [a, b, c] = params.triple();
    let name = format!("{kind:?}").to_lowercase();
    let request = format!("{a},{b},{c};{trunc};{window:?};{n_ceiling}");
    let key = Cache::key(&name, &request);
    let cached = cache.and_then(|c| c.get::<SeriesOutput>(&key));
    let out = match cached {
        Some(hit) => hit,
        None => {
            let with_params = |series, n| SeriesOutput {
                kind: name.clone(),
                params: Some([a, b, c]),
                series,
                n,
            };
            let fresh = match kind {
                SeriesKind::Macmahon => SeriesOutput {
                    kind: name.clone(),
                    params: None,
                    series: macmahon(trunc),
                    n: None,
                },
                SeriesKind::Box => with_params(macmahon_box(a, b, c, trunc), None),
                SeriesKind::X => with_params(x_series(a, b, c, trunc), None),
                SeriesKind::Zdbc => with_params(zdbc(a, b, c, trunc), None),
                SeriesKind::Zddc => match window {
                    Some(n) => with_params(
                        zddc_window(a, b, c, n, trunc).map_err(|e| Failure::Usage(format!("error: {e}")))?,
                        Some(n),
                    ),
                    None => {
                        let s = zddc(a, b, c, trunc, n_ceiling).map_err(stabilization_failure)?;
                        with_params(s.series, Some(s.n))
                    }
                },
            };
            if let Some(c) = cache {
                // a failed cache write only costs a recomputation later
                let _ = c.put(&key, &fresh);
            }
            fresh
        }
    };
    Ok(Outcome::ok(match format {
        Format::Json => json(&out),
        Format::Csv => series_csv(&out.series),
        Format::Table => {
            let mut header = out.kind.clone();
            if let Some([a, b, c]) = out.params {
                let _ = write!(header, " ({a},{b},{c})");
            }
            if let Some(n) = out.n {
                let _ = write!(header, " n = {n}");
            }
            series_table(&header, &out.series)
        }
    }))
}

#[derive(Debug, Serialize)]
struct RecurrenceRow {
    params: [usize; 3],
    orientation: Orientation,
    x_pass: bool,
    m_pass: bool,
    x_first_mismatch: Option<usize>,
    m_first_mismatch: Option<usize>,
}

#[derive(Debug, Serialize)]
struct RecurrenceSummary {
    grid: usize,
    trunc_order: usize,
    form: Form,
    pass: bool,
    forms_agree: bool,
    failures: usize,
    rows: Vec<RecurrenceRow>,
}

#[derive(Debug, Serialize)]
struct BijectionReport {
    n: usize,
    partitions: usize,
    round_trip_failures: usize,
    weight_failures: usize,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct StabilizationReport {
    params: [usize; 3],
    /// `(N, least stable n)` for each truncation order
    stable_n: Vec<(usize, usize)>,
    monotone: bool,
    series: QSeries,
    product: QSeries,
    pass: bool,
}

fn cmd_verify(format: Format, target: &VerifyTarget) -> Result<Outcome, Failure> {
    match *target {
        VerifyTarget::Main { params, trunc, n_ceiling } => {
            let [a, b, c] = params.triple();
            let r = verify_main(a, b, c, trunc, n_ceiling).map_err(stabilization_failure)?;
            let failure = (!r.pass).then(|| {
                Failure::Mismatch(format!(
                    "mismatch at ({a},{b},{c}): zdbc/x first differ at q^{:?}, zdbc/zddc at q^{:?}, x/zddc at q^{:?}",
                    r.mismatch_dbc_x, r.mismatch_dbc_ddc, r.mismatch_x_ddc
                ))
            });
            Ok(Outcome {
                text: main_text(format, &r),
                failure,
            })
        }
        VerifyTarget::Recurrence { grid, trunc, form } => {
            let form = match form {
                FormArg::Stated => Form::Stated,
                FormArg::Swapped => Form::Swapped,
            };
            let reports = recurrence_grid(grid, trunc, form);
            let rows: Vec<RecurrenceRow> = reports
                .iter()
                .map(|(x, m)| RecurrenceRow {
                    params: x.params,
                    orientation: x.orientation,
                    x_pass: x.pass,
                    m_pass: m.pass,
                    x_first_mismatch: x.first_mismatch,
                    m_first_mismatch: m.first_mismatch,
                })
                .collect();
            let failures = rows.iter().filter(|r| !(r.x_pass && r.m_pass)).count();
            let forms_agree = rows
                .iter()
                .all(|r| r.x_pass == r.m_pass && r.x_first_mismatch == r.m_first_mismatch);
            let summary = RecurrenceSummary {
                grid,
                trunc_order: trunc,
                form,
                pass: failures == 0 && forms_agree,
                forms_agree,
                failures,
                rows,
            };
            let failure = (!summary.pass).then(|| {
                let first = summary.rows.iter().find(|r| !(r.x_pass && r.m_pass));
                Failure::Mismatch(match first {
                    Some(r) => format!(
                        "recurrence fails at {} of {} points; first at {:?} ({:?}), coefficient q^{}",
                        failures,
                        summary.rows.len(),
                        r.params,
                        r.orientation,
                        r.x_first_mismatch.or(r.m_first_mismatch).unwrap_or(0)
                    ),
                    None => "the X and M recurrences disagree".to_string(),
                })
            });
            let text = match format {
                Format::Json => json(&summary),
                Format::Csv => {
                    let mut s = String::from("a,b,c,orientation,x_pass,m_pass,first_mismatch\n");
                    for r in &summary.rows {
                        let [a, b, c] = r.params;
                        let fm = r.x_first_mismatch.map_or(String::new(), |k| k.to_string());
                        let _ = writeln!(s, "{a},{b},{c},{:?},{},{},{fm}", r.orientation, r.x_pass, r.m_pass);
                    }
                    s
                }
                Format::Table => format!(
                    "recurrence ({:?} form), grid {grid}, N = {trunc}: {} of {} points pass, X and M agree: {}\n",
                    form,
                    summary.rows.len() - failures,
                    summary.rows.len(),
                    forms_agree
                ),
            };
            Ok(Outcome { text, failure })
        }
        VerifyTarget::Bijection { window } => {
            let g = HexGraph::build(window).map_err(|e| Failure::Usage(format!("error: {e}")))?;
            let base = g.matching_exponent(&to_matching(&PlanePartition::empty([0, 0, 0]), &g).expect("empty fits"));
            let mut report = BijectionReport {
                n: window,
                partitions: 0,
                round_trip_failures: 0,
                weight_failures: 0,
                pass: false,
            };
            for pp in enumerate_boxed(window, window, window) {
                report.partitions += 1;
                let m = to_matching(&pp, &g).expect("boxed partition fits");
                if from_matching(&m, &g).ok().as_ref() != Some(&pp) {
                    report.round_trip_failures += 1;
                }
                if g.matching_exponent(&m) - base != pp.volume() as u64 {
                    report.weight_failures += 1;
                }
            }
            report.pass = report.round_trip_failures == 0 && report.weight_failures == 0;
            let failure = (!report.pass).then(|| {
                Failure::Mismatch(format!(
                    "bijection on H({window}): {} round-trip and {} weight failures",
                    report.round_trip_failures, report.weight_failures
                ))
            });
            let text = match format {
                Format::Json => json(&report),
                Format::Csv => format!(
                    "n,partitions,round_trip_failures,weight_failures\n{},{},{},{}\n",
                    report.n, report.partitions, report.round_trip_failures, report.weight_failures
                ),
                Format::Table => format!(
                    "bijection on H({}): {} partitions, pass: {}\n",
                    report.n, report.partitions, report.pass
                ),
            };
            Ok(Outcome { text, failure })
        }
        VerifyTarget::Stabilization { params, trunc, n_ceiling } => {
            let [a, b, c] = params.triple();
            let mut stable_n = Vec::new();
            let mut last = None;
            for n_trunc in 0..=trunc {
                let s = zddc(a, b, c, n_trunc, n_ceiling).map_err(stabilization_failure)?;
                stable_n.push((n_trunc, s.n));
                last = Some(s.series);
            }
            let series = last.expect("at least one truncation order");
            let product = x_series(a, b, c, trunc);
            let monotone = stable_n.windows(2).all(|w| w[0].1 <= w[1].1);
            let report = StabilizationReport {
                params: [a, b, c],
                pass: monotone && series == product,
                stable_n,
                monotone,
                series,
                product,
            };
            let failure = (!report.pass).then(|| {
                Failure::Mismatch(format!(
                    "stabilization at ({a},{b},{c}): monotone {}, first difference from the product at q^{:?}",
                    report.monotone,
                    report.series.first_mismatch(&report.product).expect("same order")
                ))
            });
            let text = match format {
                Format::Json => json(&report),
                Format::Csv => {
                    let mut s = String::from("trunc_order,stable_n\n");
                    for (k, n) in &report.stable_n {
                        let _ = writeln!(s, "{k},{n}");
                    }
                    s
                }
                Format::Table => {
                    let mut s = format!("stabilization at ({a},{b},{c})\n  N  n\n");
                    for (k, n) in &report.stable_n {
                        let _ = writeln!(s, "{k:>3}  {n}");
                    }
                    let _ = writeln!(s, "series {}\nproduct {}", report.series, report.product);
                    s
                }
            };
            Ok(Outcome { text, failure })
        }
    }
}

fn main_text(format: Format, r: &MainReport) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let mut s = String::from("k,zdbc,x,zddc\n");
            for k in 0..=r.trunc_order {
                let _ = writeln!(s, "{k},{},{},{}", r.zdbc.coeff(k), r.x.coeff(k), r.zddc.coeff(k));
            }
            s
        }
        Format::Table => {
            let [a, b, c] = r.params;
            format!(
                "main identity at ({a},{b},{c}), N = {}\n  zdbc {}\n  x    {}\n  zddc {} (stable from n = {})\n  {}\n",
                r.trunc_order,
                r.zdbc,
                r.x,
                r.zddc,
                r.stable_n,
                if r.pass { "pass" } else { "FAIL" }
            )
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("error: cannot read {path:?}: {e}")))?;
    parse_json(&text)
}

/// Deserializes with the JSON path of the first schema violation in the
/// error message.
pub fn parse_json_path<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, String> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| format!("schema violation at {}: {}", e.path(), e.inner()))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    parse_json_path(text).map_err(|e| Failure::Usage(format!("error: {e}")))
}

fn cmd_render(object: RenderObject, input: &PathBuf, window: Option<usize>) -> Result<Outcome, Failure> {
    let svg = match object {
        RenderObject::Pp => {
            let pp: PlanePartition = read_json(input)?;
            let n = window.unwrap_or_else(|| render::fitting_window(&pp));
            render::render_pp(&pp, n).map_err(|e| Failure::Usage(format!("error: {e}")))?
        }
        RenderObject::Dbc => render::render_dbc(&read_json::<ClassDump>(input)?),
        RenderObject::Ddc => {
            render::render_ddc(&read_json::<ConfigDump>(input)?).map_err(|e| Failure::Usage(format!("error: {e}")))?
        }
    };
    Ok(Outcome::ok(svg))
}

#[derive(Debug, Serialize)]
struct GraphDump {
    n: usize,
    vertices: Vec<Tri>,
    edges: Vec<Edge>,
    nodes: Option<NodeSpec>,
}

fn cmd_dump(target: &DumpTarget) -> Result<Outcome, Failure> {
    let usage = |e: &dyn std::fmt::Display| Failure::Usage(format!("error: {e}"));
    match target {
        DumpTarget::Classes { params, trunc } => {
            let [a, b, c] = params.triple();
            let dumps: Vec<ClassDump> = enumerate_classes(a, b, c, *trunc).iter().map(|c| c.dump()).collect();
            Ok(Outcome::ok(json(&dumps)))
        }
        DumpTarget::Ddc {
            params,
            window,
            class,
            rep,
            trunc,
        } => {
            let [a, b, c] = params.triple();
            let g = HexGraph::build(*window).map_err(|e| usage(&e))?;
            let e0 = minimal_config(&g, a, b, c).map_err(|e| usage(&e))?.exponent(&g);
            let cfg = match class {
                None => minimal_config(&g, a, b, c).map_err(|e| usage(&e))?,
                Some(k) => {
                    let classes = enumerate_classes(a, b, c, *trunc);
                    let cls = classes
                        .get(*k)
                        .ok_or_else(|| usage(&format!("class {k} out of range ({} classes)", classes.len())))?;
                    let assignment = cls
                        .representatives
                        .get(*rep)
                        .ok_or_else(|| usage(&format!("representative {rep} out of range")))?;
                    dbc_to_ddc(&cls.typing, assignment, &g).map_err(|e| usage(&e))?
                }
            };
            Ok(Outcome::ok(json(&cfg.dump(&g, [a, b, c], e0))))
        }
        DumpTarget::Pp { heights } => {
            let rows: Result<Vec<Vec<u32>>, _> = heights
                .split(';')
                .filter(|r| !r.trim().is_empty())
                .map(|r| r.split(',').map(|h| h.trim().parse::<u32>()).collect())
                .collect();
            let rows = rows.map_err(|e| usage(&e))?;
            let pp = PlanePartition::from_heights([0, 0, 0], &rows).map_err(|e| usage(&e))?;
            Ok(Outcome::ok(json(&pp)))
        }
        DumpTarget::Graph { window, params } => {
            let g = HexGraph::build(*window).map_err(|e| usage(&e))?;
            let [a, b, c] = params.triple();
            let dump = GraphDump {
                n: *window,
                vertices: g.tris().to_vec(),
                edges: g.edges().to_vec(),
                nodes: g.place_nodes(a, b, c).ok(),
            };
            Ok(Outcome::ok(json(&dump)))
        }
    }
}
