//! Brute-force double-box generating function next to the product formula.
//!
//! Usage: cargo run --release --example zdbc_vs_product -- A B C N

use std::time::Instant;

use ppdimer::condense::x_series;
use ppdimer::doublebox::zdbc;

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("numeric argument"))
        .collect();
    let [a, b, c, n] = match args.as_slice() {
        [] => [1, 1, 1, 4],
        [a, b, c, n] => [*a, *b, *c, *n],
        _ => panic!("expected A B C N"),
    };
    let start = Instant::now();
    let brute = zdbc(a, b, c, n);
    let elapsed = start.elapsed();
    let product = x_series(a, b, c, n);
    println!("(a,b,c) = ({a},{b},{c}), N = {n}");
    println!("Z_DBC         = {brute}   [{elapsed:.2?}]");
    println!("M(q)^2 M_abc  = {product}");
    println!("{}", if brute == product { "agree" } else { "DIFFER" });
}
