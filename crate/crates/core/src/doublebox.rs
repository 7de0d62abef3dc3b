//! Double-box configurations: triples of plane partitions based at
//! `(0,b,c)`, `(a,0,c)`, `(a,b,0)`, grouped into classes by the multiset of
//! boxes they contain.
//!
//! A class is keyed by its [`BoxTyping`]. Which two partitions hold each
//! type-II box is not part of the key; the possible choices are the class's
//! [`valid_assignments`].

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::planepart::{enumerate_by_volume, BoxTriple, Cell, PlanePartition};
use crate::qseries::QSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DoubleBoxError {
    #[error("typing admits no valid triple")]
    Unrealizable,
}

/// The box multiset of a triple, split by type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxTyping {
    pub params: [usize; 3],
    /// Boxes in exactly one partition, by index.
    pub type1: [BTreeSet<Cell>; 3],
    /// Boxes in exactly two partitions.
    pub type2: BTreeSet<Cell>,
    /// Boxes in all three.
    pub type3: BTreeSet<Cell>,
}

impl BoxTyping {
    pub fn empty(params: [usize; 3]) -> Self {
        BoxTyping {
            params,
            type1: Default::default(),
            type2: BTreeSet::new(),
            type3: BTreeSet::new(),
        }
    }

    /// `|type1| + |type2| + 2 |type3|`.
    pub fn weight(&self) -> usize {
        self.type1.iter().map(BTreeSet::len).sum::<usize>() + self.type2.len() + 2 * self.type3.len()
    }

    pub fn in_intersection_space(&self, b: &Cell) -> bool {
        in_intersection_space(self.params, b)
    }
}

fn in_intersection_space(params: [usize; 3], b: &Cell) -> bool {
    (0..3).all(|ax| b[ax] >= params[ax] as i32)
}

/// Types the boxes of three raw box sets. No order-ideal check is made, so
/// this also accepts hand-written box lists.
pub fn classify_boxes(params: [usize; 3], etas: [&BTreeSet<Cell>; 3]) -> BoxTyping {
    let mut typing = BoxTyping::empty(params);
    let all: BTreeSet<Cell> = etas.iter().flat_map(|e| e.iter().copied()).collect();
    for b in all {
        let holders: Vec<usize> = (0..3).filter(|&m| etas[m].contains(&b)).collect();
        match holders.as_slice() {
            [m] => {
                typing.type1[*m].insert(b);
            }
            [_, _] => {
                typing.type2.insert(b);
            }
            _ => {
                typing.type3.insert(b);
            }
        }
    }
    typing
}

pub fn classify(t: &BoxTriple) -> BoxTyping {
    let [e1, e2, e3] = t.etas();
    let typing = classify_boxes(t.params(), [e1.boxes(), e2.boxes(), e3.boxes()]);
    // the three octants only overlap in the intersection space
    debug_assert!(typing
        .type2
        .iter()
        .chain(&typing.type3)
        .all(|b| typing.in_intersection_space(b)));
    typing
}

/// Every box of the triple inside the intersection space lies in at least
/// two of the partitions.
pub fn criterion1_boxes(params: [usize; 3], etas: [&BTreeSet<Cell>; 3]) -> bool {
    etas.iter().enumerate().all(|(m, eta)| {
        eta.iter()
            .filter(|b| in_intersection_space(params, b))
            .all(|b| (0..3).any(|l| l != m && etas[l].contains(b)))
    })
}

pub fn criterion1(t: &BoxTriple) -> bool {
    let [e1, e2, e3] = t.etas();
    criterion1_boxes(t.params(), [e1.boxes(), e2.boxes(), e3.boxes()])
}

/// For each type-II box (in sorted order), the index `1..=3` of the
/// partition that does not contain it.
pub type Assignment = Vec<u8>;

/// Every assignment that turns the typing back into three valid plane
/// partitions, in lexicographic order. Empty when the typing is not
/// realizable.
pub fn valid_assignments(typing: &BoxTyping) -> Vec<Assignment> {
    let bases = BoxTriple::basepoints(typing.params);
    // type-I boxes never have predecessors in the intersection space, so
    // they can be checked once
    for (set, base) in typing.type1.iter().zip(bases) {
        for b in set {
            for p in predecessors(*b, base) {
                if !set.contains(&p) {
                    return Vec::new();
                }
            }
        }
    }
    // type-II and type-III boxes together, in lexicographic order, so every
    // predecessor is decided before the box itself
    let mut order: Vec<(Cell, bool)> = typing
        .type2
        .iter()
        .map(|&b| (b, true))
        .chain(typing.type3.iter().map(|&b| (b, false)))
        .collect();
    order.sort();
    let type2_index: HashMap<Cell, usize> = typing.type2.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let mut search = AssignmentSearch {
        typing,
        bases,
        order,
        type2_index,
        current: vec![0; typing.type2.len()],
        out: Vec::new(),
    };
    search.run(0);
    search.out
}

fn predecessors(b: Cell, base: Cell) -> impl Iterator<Item = Cell> {
    (0..3).filter(move |&ax| b[ax] > base[ax]).map(move |ax| {
        let mut p = b;
        p[ax] -= 1;
        p
    })
}

struct AssignmentSearch<'a> {
    typing: &'a BoxTyping,
    bases: [Cell; 3],
    order: Vec<(Cell, bool)>,
    type2_index: HashMap<Cell, usize>,
    current: Vec<u8>,
    out: Vec<Assignment>,
}

impl AssignmentSearch<'_> {
    /// Whether `b` is in partition `m` (0-based) given the decisions so far.
    fn holds(&self, m: usize, b: &Cell) -> bool {
        if self.typing.type1[m].contains(b) || self.typing.type3.contains(b) {
            return true;
        }
        match self.type2_index.get(b) {
            Some(&i) => self.current[i] != 0 && self.current[i] as usize != m + 1,
            None => false,
        }
    }

    fn run(&mut self, pos: usize) {
        if pos == self.order.len() {
            self.out.push(self.current.clone());
            return;
        }
        let (b, is_type2) = self.order[pos];
        let supported = |s: &Self, m: usize| predecessors(b, s.bases[m]).all(|p| s.holds(m, &p));
        if !is_type2 {
            if (0..3).all(|m| supported(self, m)) {
                self.run(pos + 1);
            }
            return;
        }
        let i = self.type2_index[&b];
        for missing in 1..=3u8 {
            let ok = (0..3)
                .filter(|&m| m + 1 != missing as usize)
                .all(|m| supported(self, m));
            if ok {
                self.current[i] = missing;
                self.run(pos + 1);
                self.current[i] = 0;
            }
        }
    }
}

/// Rebuilds the triple a valid assignment describes.
pub fn realize(typing: &BoxTyping, assignment: &Assignment) -> BoxTriple {
    let bases = BoxTriple::basepoints(typing.params);
    let etas = std::array::from_fn(|m| {
        let boxes = typing.type1[m]
            .iter()
            .chain(&typing.type3)
            .copied()
            .chain(
                typing
                    .type2
                    .iter()
                    .zip(assignment)
                    .filter(|&(_, &missing)| missing as usize != m + 1)
                    .map(|(&b, _)| b),
            );
        PlanePartition::new(bases[m], boxes).expect("assignment is valid")
    });
    BoxTriple::new(typing.params, etas).expect("basepoints match")
}

/// Type-II boxes whose missing index differs between assignments.
pub fn moveable_boxes(typing: &BoxTyping) -> Result<BTreeSet<Cell>, DoubleBoxError> {
    let assignments = valid_assignments(typing);
    moveable_from(typing, &assignments)
}

fn moveable_from(typing: &BoxTyping, assignments: &[Assignment]) -> Result<BTreeSet<Cell>, DoubleBoxError> {
    let first = assignments.first().ok_or(DoubleBoxError::Unrealizable)?;
    Ok(typing
        .type2
        .iter()
        .enumerate()
        .filter(|&(i, _)| assignments.iter().any(|a| a[i] != first[i]))
        .map(|(_, &b)| b)
        .collect())
}

/// Number of connected components of a box set under face adjacency.
pub fn face_components(boxes: &BTreeSet<Cell>) -> usize {
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut count = 0;
    for &start in boxes {
        if !seen.insert(start) {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        while let Some(b) = stack.pop() {
            for ax in 0..3 {
                for d in [-1, 1] {
                    let mut nb = b;
                    nb[ax] += d;
                    if boxes.contains(&nb) && seen.insert(nb) {
                        stack.push(nb);
                    }
                }
            }
        }
    }
    count
}

/// `2^m` with `m` the number of face-connected components of moveable boxes.
pub fn contribution(typing: &BoxTyping) -> Result<u64, DoubleBoxError> {
    Ok(1 << face_components(&moveable_boxes(typing)?))
}

pub fn weight(typing: &BoxTyping) -> usize {
    typing.weight()
}

/// One double-box configuration with its derived data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleBoxClass {
    pub typing: BoxTyping,
    pub weight: usize,
    pub moveable: BTreeSet<Cell>,
    pub components: usize,
    pub chi: u64,
    pub representatives: Vec<Assignment>,
}

impl DoubleBoxClass {
    pub fn from_typing(typing: BoxTyping) -> Result<Self, DoubleBoxError> {
        let representatives = valid_assignments(&typing);
        let moveable = moveable_from(&typing, &representatives)?;
        let components = face_components(&moveable);
        Ok(DoubleBoxClass {
            weight: typing.weight(),
            typing,
            moveable,
            components,
            chi: 1 << components,
            representatives,
        })
    }

    pub fn dump(&self) -> ClassDump {
        ClassDump {
            params: self.typing.params,
            type1: self.typing.type1.clone(),
            type2: self.typing.type2.clone(),
            type3: self.typing.type3.clone(),
            weight: self.weight,
            moveable: self.moveable.clone(),
            components: self.components,
            chi: self.chi,
            representatives: self.representatives.len(),
        }
    }
}

/// JSON form of a class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDump {
    pub params: [usize; 3],
    pub type1: [BTreeSet<Cell>; 3],
    pub type2: BTreeSet<Cell>,
    pub type3: BTreeSet<Cell>,
    pub weight: usize,
    pub moveable: BTreeSet<Cell>,
    pub components: usize,
    pub chi: u64,
    pub representatives: usize,
}

impl ClassDump {
    pub fn typing(&self) -> BoxTyping {
        BoxTyping {
            params: self.params,
            type1: self.type1.clone(),
            type2: self.type2.clone(),
            type3: self.type3.clone(),
        }
    }
}

/// Plane partitions of volume at most `max` moved to `base`.
fn partitions_at(base: Cell, max: usize) -> Vec<PlanePartition> {
    enumerate_by_volume(max).map(|pp| pp.rebased(base)).collect()
}

/// Typings of all Criterion-1 triples of weight at most `max_weight`, each
/// with the number of triples realizing it.
///
/// Any triple of weight `w` has `|eta_m| <= w` and
/// `|eta_1| + |eta_2| + |eta_3| = w + |eta_int| <= 2w`, which bounds the search.
pub fn enumerate_typings(params: [usize; 3], max_weight: usize) -> BTreeMap<BoxTyping, usize> {
    let bases = BoxTriple::basepoints(params);
    let [p1, p2, p3] = bases.map(|b| partitions_at(b, max_weight));
    p1.par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<BoxTyping, usize>, e1| {
            for e2 in &p2 {
                if e1.volume() + e2.volume() > 2 * max_weight {
                    continue;
                }
                for e3 in &p3 {
                    if e1.volume() + e2.volume() + e3.volume() > 2 * max_weight {
                        continue;
                    }
                    let sets = [e1.boxes(), e2.boxes(), e3.boxes()];
                    if !criterion1_boxes(params, sets) {
                        continue;
                    }
                    let typing = classify_boxes(params, sets);
                    if typing.weight() <= max_weight {
                        *acc.entry(typing).or_insert(0) += 1;
                    }
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

/// Every double-box configuration of weight at most `max_weight`, sorted by
/// weight and then by typing.
pub fn enumerate_classes(a: usize, b: usize, c: usize, max_weight: usize) -> Vec<DoubleBoxClass> {
    let mut classes: Vec<DoubleBoxClass> = enumerate_typings([a, b, c], max_weight)
        .into_keys()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|t| DoubleBoxClass::from_typing(t).expect("enumerated typing has a realizing triple"))
        .collect();
    classes.sort_by(|x, y| (x.weight, &x.typing).cmp(&(y.weight, &y.typing)));
    classes
}

/// `sum chi(eta) q^|eta|` over double-box configurations.
pub fn zdbc(a: usize, b: usize, c: usize, trunc_order: usize) -> QSeries {
    let mut coeffs = vec![0u64; trunc_order + 1];
    for cls in enumerate_classes(a, b, c, trunc_order) {
        coeffs[cls.weight] += cls.chi;
    }
    QSeries::from_coeffs(coeffs, trunc_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(boxes: &[Cell]) -> BTreeSet<Cell> {
        boxes.iter().copied().collect()
    }

    #[test]
    fn criterion1_small_cases() {
        let e = BTreeSet::new();
        let outside = set(&[[0, 1, 1]]);
        assert!(criterion1_boxes([1, 1, 1], [&outside, &e, &e]));
        let lonely = set(&[[1, 1, 1]]);
        assert!(!criterion1_boxes([1, 1, 1], [&lonely, &e, &e]));
        assert!(criterion1_boxes([1, 1, 1], [&lonely, &lonely, &e]));
    }

    #[test]
    fn empty_typing() {
        let t = BoxTyping::empty([1, 2, 3]);
        assert_eq!(valid_assignments(&t), vec![Vec::<u8>::new()]);
        assert_eq!(t.weight(), 0);
        assert_eq!(contribution(&t), Ok(1));
    }

    #[test]
    fn face_components_counts() {
        assert_eq!(face_components(&set(&[[1, 1, 1], [2, 1, 1]])), 1);
        assert_eq!(face_components(&set(&[[1, 1, 1], [2, 2, 1]])), 2);
        assert_eq!(face_components(&set(&[[1, 1, 1], [2, 2, 2]])), 2);
        assert_eq!(face_components(&BTreeSet::new()), 0);
    }

    #[test]
    fn single_moveable_box() {
        let mut t = BoxTyping::empty([1, 1, 1]);
        t.type1 = [set(&[[0, 1, 1]]), set(&[[1, 0, 1]]), set(&[[1, 1, 0]])];
        t.type2 = set(&[[1, 1, 1]]);
        assert_eq!(valid_assignments(&t), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(moveable_boxes(&t).unwrap(), set(&[[1, 1, 1]]));
        assert_eq!(contribution(&t), Ok(2));
        assert_eq!(t.weight(), 4);
        // without eta_2's support the box can only sit in eta_1 and eta_3
        t.type1[1].clear();
        assert_eq!(valid_assignments(&t), vec![vec![2]]);
        assert_eq!(contribution(&t), Ok(1));
    }

    #[test]
    fn unsupported_typing_is_unrealizable() {
        let mut t = BoxTyping::empty([1, 1, 1]);
        t.type3 = set(&[[1, 1, 1]]);
        assert!(valid_assignments(&t).is_empty());
        assert_eq!(moveable_boxes(&t), Err(DoubleBoxError::Unrealizable));
    }

    #[test]
    fn zdbc_origin_is_macmahon_squared() {
        let m = crate::qseries::macmahon(3);
        assert_eq!(zdbc(0, 0, 0, 3), &m * &m);
    }

    #[test]
    fn assignment_counts_match_triple_counts() {
        for (typing, triples) in enumerate_typings([1, 1, 1], 3) {
            let reps = valid_assignments(&typing);
            assert_eq!(reps.len(), triples, "{typing:?}");
            for r in &reps {
                let t = realize(&typing, r);
                assert!(criterion1(&t));
                assert_eq!(classify(&t), typing);
            }
        }
    }
}
