//! Maps every double-box class to double-dimer configurations and compares
//! the contributions on both sides, image by image.
//!
//! Usage: cargo run --release --example class_images -- [A B C W N]

use std::collections::{BTreeMap, BTreeSet};

use ppdimer::doublebox::enumerate_classes;
use ppdimer::doubledimer::{dbc_to_ddc, minimal_config};
use ppdimer::hexlattice::HexGraph;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|s| s.parse().expect("numeric argument")).collect();
    let [a, b, c, w, n] = match args.as_slice() {
        [] => [1, 1, 1, 4, 6],
        [a, b, c, w, n] => [*a, *b, *c, *w, *n],
        _ => panic!("expected A B C W N"),
    };
    let g = HexGraph::build(n).expect("n >= 1");
    let e0 = minimal_config(&g, a, b, c).expect("frozen configuration").exponent(&g);
    // image -> (loops, chi of the classes mapping only there)
    let mut fibers: BTreeMap<Vec<u8>, (usize, u64)> = BTreeMap::new();
    let mut split = 0;
    let mut weight_errors = 0;
    let classes = enumerate_classes(a, b, c, w);
    for cls in &classes {
        let mut images = BTreeSet::new();
        for rep in &cls.representatives {
            let cfg = dbc_to_ddc(&cls.typing, rep, &g).expect("window large enough");
            if cfg.exponent(&g) - e0 != cls.weight as u64 {
                weight_errors += 1;
            }
            let loops = cfg.loops_count(&g);
            images.insert(cfg.multiplicities().to_vec());
            fibers.entry(cfg.multiplicities().to_vec()).or_insert((loops, 0));
        }
        if images.len() == 1 {
            let img = images.into_iter().next().expect("one image");
            fibers.get_mut(&img).expect("inserted").1 += cls.chi;
        } else {
            split += 1;
        }
    }
    println!("{} classes, {} distinct images, {weight_errors} weight errors", classes.len(), fibers.len());
    println!("{split} classes whose representatives have different images");
    let matching = fibers.values().filter(|(l, chi)| *chi == 1 << l).count();
    println!("{matching} images where the summed chi equals 2^loops");
    let mut by_loops: BTreeMap<usize, usize> = BTreeMap::new();
    for (loops, _) in fibers.values() {
        *by_loops.entry(*loops).or_insert(0) += 1;
    }
    println!("images by loop count: {by_loops:?}");
}
