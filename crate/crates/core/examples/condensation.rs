//! The condensation recurrence for `M(q)^2 M_{a,b,c}(q)` in both placements
//! of the factor `q^c`.
//!
//! Usage: cargo run --example condensation -- [GRID N]

use ppdimer::condense::{check_m_recurrence, recurrence_grid, Form, Orientation};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|s| s.parse().expect("numeric argument")).collect();
    let [grid, n] = match args.as_slice() {
        [] => [4, 20],
        [g, n] => [*g, *n],
        _ => panic!("expected GRID N"),
    };
    for form in [Form::Stated, Form::Swapped] {
        let rows = recurrence_grid(grid, n, form);
        let pass = rows.iter().filter(|(x, m)| x.pass && m.pass).count();
        let agree = rows.iter().all(|(x, m)| x.pass == m.pass);
        println!("{form:?}: {pass} of {} points pass; X and M agree everywhere: {agree}", rows.len());
    }
    let r = check_m_recurrence(1, 1, 1, 6, Orientation::C, Form::Stated);
    println!("at (1,1,1): lhs {}  rhs {}", r.lhs, r.rhs);
}
