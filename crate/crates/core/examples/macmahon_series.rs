//! MacMahon's generating functions as truncated series, next to brute-force
//! counts of plane partitions.
//!
//! Usage: cargo run --example macmahon_series -- [N]

use ppdimer::planepart::{enumerate_boxed, enumerate_by_volume};
use ppdimer::qseries::{macmahon, macmahon_box};

fn main() {
    let n: usize = std::env::args().nth(1).map_or(10, |s| s.parse().expect("numeric argument"));
    let m = macmahon(n);
    println!("M(q) = {m}");
    let mut counts = vec![0u64; n + 1];
    for pp in enumerate_by_volume(n) {
        counts[pp.volume()] += 1;
    }
    println!("counted by volume: {counts:?}");

    let inv = m.inverse().expect("constant term is 1");
    println!("1/M(q) = {inv}");
    println!("M * 1/M = {}", &m * &inv);

    for (a, b, c) in [(1, 1, 1), (2, 2, 2), (2, 3, 1), (3, 3, 3)] {
        let top = a * b * c;
        let poly = macmahon_box(a, b, c, top);
        let boxed = enumerate_boxed(a, b, c).count();
        println!("M_{{{a},{b},{c}}} = {poly}   at q=1: {}, boxed count {boxed}", poly.eval_at_one());
    }
}
