//! Lists the double-box configurations of small weight with their moveable
//! boxes and contributions.
//!
//! Usage: cargo run --release --example double_box_classes -- [A B C W]

use ppdimer::doublebox::enumerate_classes;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|s| s.parse().expect("numeric argument")).collect();
    let [a, b, c, w] = match args.as_slice() {
        [] => [1, 1, 1, 4],
        [a, b, c, w] => [*a, *b, *c, *w],
        _ => panic!("expected A B C W"),
    };
    let classes = enumerate_classes(a, b, c, w);
    println!("{} classes of weight <= {w} at ({a},{b},{c})", classes.len());
    for cls in classes.iter().filter(|c| !c.moveable.is_empty()) {
        let t = &cls.typing;
        println!(
            "weight {}  chi {}  reps {}  type1 {:?}  type2 {:?}  type3 {:?}  moveable {:?}",
            cls.weight,
            cls.chi,
            cls.representatives.len(),
            t.type1,
            t.type2,
            t.type3,
            cls.moveable
        );
    }
    let mut series = vec![0u64; w + 1];
    for cls in &classes {
        series[cls.weight] += cls.chi;
    }
    println!("sum chi q^weight: {series:?}");
}
