//! Writes SVG pictures of a plane partition, a double-box class and a
//! double-dimer configuration into a directory.
//!
//! Usage: cargo run --release --example render_gallery -- [DIR]

use std::path::PathBuf;

use ppdimer::cli::render::{render_dbc, render_ddc, render_pp};
use ppdimer::doublebox::enumerate_classes;
use ppdimer::doubledimer::{dbc_to_ddc, minimal_config};
use ppdimer::hexlattice::HexGraph;
use ppdimer::planepart::PlanePartition;

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "gallery".into()));
    std::fs::create_dir_all(&dir).expect("writable directory");

    let pp = PlanePartition::from_heights([0, 0, 0], &[vec![3, 2, 2], vec![2, 1], vec![1]]).expect("valid");
    std::fs::write(dir.join("pp.svg"), render_pp(&pp, 4).expect("fits")).expect("write");

    let classes = enumerate_classes(1, 1, 1, 4);
    let cls = classes.iter().find(|c| !c.moveable.is_empty()).expect("a class with a moveable box");
    std::fs::write(dir.join("dbc.svg"), render_dbc(&cls.dump())).expect("write");

    let g = HexGraph::build(5).expect("n >= 1");
    let e0 = minimal_config(&g, 1, 1, 1).expect("frozen configuration").exponent(&g);
    let cfg = dbc_to_ddc(&cls.typing, &cls.representatives[0], &g).expect("fits");
    std::fs::write(dir.join("ddc.svg"), render_ddc(&cfg.dump(&g, [1, 1, 1], e0)).expect("valid")).expect("write");

    let frozen = minimal_config(&HexGraph::build(5).expect("n >= 1"), 2, 3, 1).expect("frozen configuration");
    let g5 = HexGraph::build(5).expect("n >= 1");
    let e5 = frozen.exponent(&g5);
    std::fs::write(dir.join("ddc_231.svg"), render_ddc(&frozen.dump(&g5, [2, 3, 1], e5)).expect("valid"))
        .expect("write");
    println!("wrote pp.svg, dbc.svg, ddc.svg, ddc_231.svg to {}", dir.display());
}
