//! Red, green and blue nodes on the boundary of H(n) and their tripartite
//! pairing.
//!
//! Usage: cargo run --example tripartite_nodes -- [A B C N]

use ppdimer::doubledimer::node_colors;
use ppdimer::hexlattice::HexGraph;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|s| s.parse().expect("numeric argument")).collect();
    let [a, b, c, n] = match args.as_slice() {
        [] => [2, 3, 1, 5],
        [a, b, c, n] => [*a, *b, *c, *n],
        _ => panic!("expected A B C N"),
    };
    let g = HexGraph::build(n).expect("n >= 1");
    let spec = g.place_nodes(a, b, c).expect("window large enough");
    println!("({a},{b},{c}) on H({n}): {} red, {} green, {} blue", spec.red.len(), spec.green.len(), spec.blue.len());
    for (v, color) in node_colors(&g, &spec) {
        let t = g.tri(v);
        println!("  {color:?}\t{:?}({}, {})\ton {:?}", t.orient, t.x, t.y, g.side_of(v).expect("boundary"));
    }
    let sigma = g.tripartite_pairing(&spec).expect("a bichromatic noncrossing pairing exists");
    for (u, v) in &sigma.pairs {
        println!("  pair {:?} -- {:?}", g.tri(*u), g.tri(*v));
    }
}
