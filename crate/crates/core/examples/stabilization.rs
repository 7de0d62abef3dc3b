//! Windows of the double-dimer series until they stop changing.
//!
//! Usage: cargo run --release --example stabilization -- A B C N [CEILING]

use std::time::Instant;

use ppdimer::condense::x_series;
use ppdimer::doubledimer::zddc_window;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (a, b, c, n) = match args.as_slice() {
        [a, b, c, n, ..] => (*a, *b, *c, *n),
        _ => (1, 1, 1, 3),
    };
    let ceiling = args.get(4).copied().unwrap_or(8);
    println!("target X({a},{b},{c}) = {}", x_series(a, b, c, n));
    let mut prev = None;
    for w in (a + b + c).max(1)..=ceiling {
        let t = Instant::now();
        let z = zddc_window(a, b, c, w, n).expect("window");
        println!("n = {w:2}  {z}  ({:.2?})", t.elapsed());
        if prev.as_ref() == Some(&z) {
            println!("stable from n = {}", w - 1);
            return;
        }
        prev = Some(z);
    }
    println!("no stabilization up to n = {ceiling}");
}
