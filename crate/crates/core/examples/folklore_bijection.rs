//! Plane partitions in the n-box as perfect matchings of the hexagon graph,
//! with an SVG of one tiling.
//!
//! Usage: cargo run --example folklore_bijection -- [N] [OUT.svg]

use ppdimer::cli::render::render_pp;
use ppdimer::hexlattice::HexGraph;
use ppdimer::planepart::{enumerate_boxed, from_matching, to_matching, PlanePartition};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(3, |s| s.parse().expect("numeric argument"));
    let out = args.next();
    let g = HexGraph::build(n).expect("n >= 1");
    println!("H({n}): {} vertices, {} edges, {} faces", g.vertex_count(), g.edge_count(), g.faces().len());

    let empty = to_matching(&PlanePartition::empty([0, 0, 0]), &g).expect("fits");
    let base = g.matching_exponent(&empty);
    let mut by_exponent = std::collections::BTreeMap::new();
    for pp in enumerate_boxed(n, n, n) {
        let m = to_matching(&pp, &g).expect("fits");
        assert_eq!(from_matching(&m, &g).expect("perfect matching"), pp);
        *by_exponent.entry(g.matching_exponent(&m) - base).or_insert(0u32) += 1;
    }
    println!("matchings by excess exponent: {by_exponent:?}");
    println!("all matchings: {}", g.perfect_matchings().len());

    let staircase = PlanePartition::from_heights([0, 0, 0], &[vec![3, 2, 1], vec![2, 1], vec![1]]).expect("valid");
    if let Some(path) = out {
        let svg = render_pp(&staircase, n.max(3)).expect("fits");
        std::fs::write(&path, svg).expect("writable output");
        println!("wrote {path}");
    }
}
