//! Independent oracles for the integration tests. Nothing here calls the
//! product formulas or the transfer-matrix search of the library.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::io::Write;

use ppdimer::hexlattice::{HexGraph, Matching, Pairing};
use ppdimer::qseries::QSeries;

/// One result line that shows up even when the harness captures output.
pub fn report(criterion: usize, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "criterion {criterion}: {verdict} {detail}");
}

/// Number of plane partitions of each volume `0..=max`, by walking the
/// nonincreasing height arrays row by row.
pub fn pp_counts(max: usize) -> Vec<u64> {
    let mut counts = vec![0u64; max + 1];
    // each row is a partition bounded by the row above it
    fn rows(above: &[usize], used: usize, max: usize, counts: &mut [u64]) {
        counts[used] += 1;
        let mut row = Vec::new();
        fill(above, &mut row, used, max, counts);
    }
    fn fill(above: &[usize], row: &mut Vec<usize>, used: usize, max: usize, counts: &mut [u64]) {
        let j = row.len();
        let cap = above.get(j).copied().unwrap_or(0).min(row.last().copied().unwrap_or(usize::MAX));
        for v in 1..=cap.min(max - used) {
            row.push(v);
            // a finished nonempty row starts a new row below it
            let r = row.clone();
            rows(&r, used + v, max, counts);
            fill(above, row, used + v, max, counts);
            row.pop();
        }
    }
    rows(&[usize::MAX; 64], 0, max, &mut counts);
    counts
}

/// Volume polynomial of the plane partitions in an `a x b x c` box, as
/// counts per volume.
pub fn boxed_counts(a: usize, b: usize, c: usize) -> Vec<u64> {
    let mut counts = vec![0u64; a * b * c + 1];
    let mut h = vec![0usize; a * b];
    fn go(h: &mut [usize], pos: usize, a: usize, b: usize, c: usize, vol: usize, counts: &mut [u64]) {
        if pos == a * b {
            counts[vol] += 1;
            return;
        }
        let (i, j) = (pos / b, pos % b);
        let mut cap = c;
        if i > 0 {
            cap = cap.min(h[pos - b]);
        }
        if j > 0 {
            cap = cap.min(h[pos - 1]);
        }
        for v in 0..=cap {
            h[pos] = v;
            go(h, pos + 1, a, b, c, vol + v, counts);
        }
        h[pos] = 0;
    }
    go(&mut h, 0, a, b, c, 0, &mut counts);
    counts
}

/// `prod_{i,j,k} (i+j+k-1)/(i+j+k-2)` over the box, in exact integers.
pub fn boxed_total(a: usize, b: usize, c: usize) -> u128 {
    let mut num: Vec<u128> = Vec::new();
    let mut den: Vec<u128> = Vec::new();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                num.push((i + j + k - 1) as u128);
                den.push((i + j + k - 2) as u128);
            }
        }
    }
    let gcd = |mut x: u128, mut y: u128| {
        while y != 0 {
            (x, y) = (y, x % y);
        }
        x
    };
    let (mut n, mut d) = (1u128, 1u128);
    for (p, q) in num.into_iter().zip(den) {
        n *= p;
        d *= q;
        let g = gcd(n, d);
        n /= g;
        d /= g;
    }
    assert_eq!(d, 1);
    n
}

/// Schoolbook product truncated to `len` coefficients.
pub fn mul(p: &[i128], q: &[i128], len: usize) -> Vec<i128> {
    let mut out = vec![0i128; len];
    for (i, &x) in p.iter().enumerate().take(len) {
        for (j, &y) in q.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn padded(v: &[u64], len: usize) -> Vec<i128> {
    (0..len).map(|i| v.get(i).copied().unwrap_or(0) as i128).collect()
}

/// `M(q)^2 M_{a,b,c}(q)` up to `q^trunc`, from the enumeration oracles.
pub fn x_oracle(a: usize, b: usize, c: usize, trunc: usize) -> Vec<i128> {
    let len = trunc + 1;
    let m = padded(&pp_counts(trunc), len);
    let bx = padded(&boxed_counts(a, b, c), len);
    mul(&mul(&m, &m, len), &bx, len)
}

pub fn coeffs(s: &QSeries) -> Vec<i128> {
    s.to_i64s().expect("small coefficients").into_iter().map(i128::from).collect()
}

pub fn matching_exponent(g: &HexGraph, m: &Matching) -> u64 {
    m.edges().iter().map(|&e| u64::from(g.edge(e).exponent)).sum()
}

/// Covers every vertex outside `excluded` exactly once and nothing else.
pub fn is_perfect_avoiding(g: &HexGraph, m: &Matching, excluded: &BTreeSet<usize>) -> bool {
    let mut deg = vec![0u32; g.vertex_count()];
    for &e in m.edges() {
        let edge = g.edge(e);
        deg[edge.east] += 1;
        deg[edge.west] += 1;
    }
    (0..g.vertex_count()).all(|v| deg[v] == if excluded.contains(&v) { 0 } else { 1 })
}

/// Superposition of two matchings: edge multiplicities, the node pairs
/// joined by its paths and its number of loops.
pub struct Overlay {
    pub mult: Vec<u8>,
    pub pairs: Vec<(usize, usize)>,
    pub loops: usize,
}

pub fn overlay(g: &HexGraph, m1: &Matching, m2: &Matching, nodes: &BTreeSet<usize>) -> Overlay {
    let mut mult = vec![0u8; g.edge_count()];
    for &e in m1.edges().iter().chain(m2.edges()) {
        mult[e] += 1;
    }
    let mut used = vec![false; g.edge_count()];
    let mut seen = vec![false; g.vertex_count()];
    let single = |v: usize, used: &[bool]| -> Option<usize> {
        g.incident(v).iter().copied().find(|&e| mult[e] == 1 && !used[e])
    };
    let walk = |start: usize, used: &mut Vec<bool>, seen: &mut Vec<bool>| -> usize {
        let mut v = start;
        seen[v] = true;
        while let Some(e) = single(v, used) {
            used[e] = true;
            v = g.edge(e).other(v);
            seen[v] = true;
        }
        v
    };
    let mut pairs = Vec::new();
    for &s in nodes {
        if !seen[s] {
            let t = walk(s, &mut used, &mut seen);
            pairs.push((s.min(t), s.max(t)));
        }
    }
    let mut loops = 0;
    for v in 0..g.vertex_count() {
        if !seen[v] && single(v, &used).is_some() {
            walk(v, &mut used, &mut seen);
            loops += 1;
        }
    }
    Overlay { mult, pairs, loops }
}

/// `sum q^(e - e_min)` over ordered pairs `(M1, M2)` with `M1` a perfect
/// matching of `g` and `M2` one of `g` minus the nodes, whose paths realize
/// `sigma`. Each configuration with `l` loops comes from `2^l` pairs.
pub fn ordered_pair_series(g: &HexGraph, nodes: &BTreeSet<usize>, sigma: &Pairing) -> Vec<i128> {
    let full = g.perfect_matchings();
    let cut = g.perfect_matchings_avoiding(nodes);
    let mut exps = Vec::new();
    for m1 in &full {
        for m2 in &cut {
            let o = overlay(g, m1, m2, nodes);
            if o.pairs.iter().all(|&(u, v)| sigma.contains(u, v)) {
                exps.push(matching_exponent(g, m1) + matching_exponent(g, m2));
            }
        }
    }
    let Some(&lo) = exps.iter().min() else {
        return Vec::new();
    };
    let hi = *exps.iter().max().expect("nonempty");
    let mut out = vec![0i128; (hi - lo) as usize + 1];
    for e in exps {
        out[(e - lo) as usize] += 1;
    }
    out
}

/// Vertex degrees of an edge multiset.
pub fn degrees(g: &HexGraph, mult: &[u8]) -> Vec<u32> {
    let mut deg = vec![0u32; g.vertex_count()];
    for (e, &m) in mult.iter().enumerate() {
        let edge = g.edge(e);
        deg[edge.east] += u32::from(m);
        deg[edge.west] += u32::from(m);
    }
    deg
}

pub fn obeys_degree_law(g: &HexGraph, mult: &[u8], nodes: &BTreeSet<usize>) -> bool {
    degrees(g, mult)
        .iter()
        .enumerate()
        .all(|(v, &d)| d == if nodes.contains(&v) { 1 } else { 2 })
}
