//! Plane partitions as finite sets of unit boxes, their enumeration, and the
//! folklore bijection with perfect matchings of `H(n)`.
//!
//! The box `(i, j, k)` is the unit cube `[i, i+1] x [j, j+1] x [k, k+1]`. A
//! plane partition based at `p` is a finite set of boxes in the octant
//! `p + N^3` that is closed under moving towards `p` along any axis.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::hexlattice::{Axis, CubeFace, EdgeDir, HexGraph, Matching};

pub type Cell = [i32; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanePartitionError {
    #[error("box {0:?} lies outside the octant of basepoint {1:?}")]
    OutsideOctant(Cell, Cell),
    #[error("box {0:?} is present but its neighbour {1:?} towards the basepoint is not")]
    NotOrderIdeal(Cell, Cell),
    #[error("plane partition does not fit in the {0}-box")]
    DoesNotFit(usize),
    #[error("not a perfect matching of H({0})")]
    NotPerfectMatching(usize),
    #[error("partition is based at {0:?}, expected {1:?}")]
    WrongBasepoint(Cell, Cell),
    #[error("matching has no consistent top face over column ({0}, {1})")]
    NoTopFace(i32, i32),
}

const AXES: [Cell; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

fn sub(p: Cell, q: Cell) -> Cell {
    [p[0] - q[0], p[1] - q[1], p[2] - q[2]]
}

fn add(p: Cell, q: Cell) -> Cell {
    [p[0] + q[0], p[1] + q[1], p[2] + q[2]]
}

/// A finite order ideal of boxes in the octant at `basepoint`. Boxes are
/// stored in absolute coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    basepoint: Cell,
    boxes: BTreeSet<Cell>,
}

impl PlanePartition {
    pub fn new(
        basepoint: Cell,
        boxes: impl IntoIterator<Item = Cell>,
    ) -> Result<Self, PlanePartitionError> {
        let pp = PlanePartition {
            basepoint,
            boxes: boxes.into_iter().collect(),
        };
        pp.validate()?;
        Ok(pp)
    }

    pub fn empty(basepoint: Cell) -> Self {
        PlanePartition {
            basepoint,
            boxes: BTreeSet::new(),
        }
    }

    /// From a height array: `heights[i][j]` boxes stacked over `(i, j)`,
    /// relative to the basepoint.
    pub fn from_heights(basepoint: Cell, heights: &[Vec<u32>]) -> Result<Self, PlanePartitionError> {
        let mut boxes = Vec::new();
        for (i, row) in heights.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                for k in 0..h as i32 {
                    boxes.push(add(basepoint, [i as i32, j as i32, k]));
                }
            }
        }
        Self::new(basepoint, boxes)
    }

    fn validate(&self) -> Result<(), PlanePartitionError> {
        for &b in &self.boxes {
            let r = sub(b, self.basepoint);
            if r.iter().any(|&x| x < 0) {
                return Err(PlanePartitionError::OutsideOctant(b, self.basepoint));
            }
            for (ax, e) in AXES.iter().enumerate() {
                if r[ax] > 0 {
                    let pred = sub(b, *e);
                    if !self.boxes.contains(&pred) {
                        return Err(PlanePartitionError::NotOrderIdeal(b, pred));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn basepoint(&self) -> Cell {
        self.basepoint
    }

    pub fn boxes(&self) -> &BTreeSet<Cell> {
        &self.boxes
    }

    pub fn volume(&self) -> usize {
        self.boxes.len()
    }

    pub fn contains(&self, b: &Cell) -> bool {
        self.boxes.contains(b)
    }

    /// Boxes relative to the basepoint.
    pub fn relative_boxes(&self) -> impl Iterator<Item = Cell> + '_ {
        self.boxes.iter().map(move |&b| sub(b, self.basepoint))
    }

    /// The same shape moved to another basepoint.
    pub fn rebased(&self, basepoint: Cell) -> Self {
        let shift = sub(basepoint, self.basepoint);
        PlanePartition {
            basepoint,
            boxes: self.boxes.iter().map(|&b| add(b, shift)).collect(),
        }
    }

    /// Height array relative to the basepoint (rows indexed by the first
    /// coordinate, trailing zeros dropped).
    pub fn heights(&self) -> Vec<Vec<u32>> {
        let mut h: Vec<Vec<u32>> = Vec::new();
        for r in self.relative_boxes() {
            let (i, j) = (r[0] as usize, r[1] as usize);
            if h.len() <= i {
                h.resize(i + 1, Vec::new());
            }
            if h[i].len() <= j {
                h[i].resize(j + 1, 0);
            }
            h[i][j] += 1;
        }
        h
    }

    /// Whether every box lies in the `n x n x n` cube at the basepoint.
    pub fn fits_in(&self, n: usize) -> bool {
        self.relative_boxes()
            .all(|r| r.iter().all(|&x| (x as usize) < n))
    }

    /// Boxes `(i, j, k)` above column `(i, j)`, relative to the basepoint.
    pub(crate) fn column_height(&self, i: i32, j: i32) -> i32 {
        let base = self.basepoint;
        let mut h = 0;
        while self.boxes.contains(&add(base, [i, j, h])) {
            h += 1;
        }
        h
    }

    pub(crate) fn depth(&self, axis: usize, u: i32, v: i32) -> i32 {
        let base = self.basepoint;
        let mut d = 0;
        loop {
            let mut r = [0; 3];
            r[axis] = d;
            r[(axis + 1) % 3] = u;
            r[(axis + 2) % 3] = v;
            if !self.boxes.contains(&add(base, r)) {
                return d;
            }
            d += 1;
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PlanePartitionJson {
    basepoint: Cell,
    boxes: Vec<Cell>,
}

impl Serialize for PlanePartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PlanePartitionJson {
            basepoint: self.basepoint,
            boxes: self.boxes.iter().copied().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlanePartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PlanePartitionJson::deserialize(d)?;
        PlanePartition::new(raw.basepoint, raw.boxes).map_err(serde::de::Error::custom)
    }
}

/// Every plane partition at the origin of volume at most `max_volume`, each
/// exactly once, in lexicographic order of sorted box lists.
///
/// Boxes are added in increasing lexicographic order; since that order
/// extends the box order, every partition has exactly one such build
/// sequence and no deduplication is needed.
pub fn enumerate_by_volume(max_volume: usize) -> ByVolume {
    ByVolume {
        max_volume,
        boxes: Vec::new(),
        present: HashSet::new(),
        stack: Vec::new(),
        started: false,
    }
}

pub struct ByVolume {
    max_volume: usize,
    boxes: Vec<Cell>,
    present: HashSet<Cell>,
    stack: Vec<(Vec<Cell>, usize)>,
    started: bool,
}

impl ByVolume {
    fn candidates(&self) -> Vec<Cell> {
        if self.boxes.len() >= self.max_volume {
            return Vec::new();
        }
        let last = self.boxes.last().copied();
        let mut cands: BTreeSet<Cell> = BTreeSet::new();
        let seeds = std::iter::once([0, 0, 0])
            .chain(self.boxes.iter().flat_map(|&b| AXES.iter().map(move |&e| add(b, e))));
        for c in seeds {
            if self.present.contains(&c) || last.is_some_and(|l| c <= l) {
                continue;
            }
            let ok = (0..3).all(|ax| c[ax] == 0 || self.present.contains(&sub(c, AXES[ax])));
            if ok {
                cands.insert(c);
            }
        }
        cands.into_iter().collect()
    }

    fn current(&self) -> PlanePartition {
        PlanePartition {
            basepoint: [0, 0, 0],
            boxes: self.boxes.iter().copied().collect(),
        }
    }
}

impl Iterator for ByVolume {
    type Item = PlanePartition;

    fn next(&mut self) -> Option<PlanePartition> {
        if !self.started {
            self.started = true;
            let c = self.candidates();
            self.stack.push((c, 0));
            return Some(self.current());
        }
        loop {
            let (cands, next) = self.stack.last_mut()?;
            if *next < cands.len() {
                let c = cands[*next];
                *next += 1;
                self.boxes.push(c);
                self.present.insert(c);
                let nc = self.candidates();
                self.stack.push((nc, 0));
                return Some(self.current());
            }
            self.stack.pop();
            if self.stack.is_empty() {
                return None;
            }
            let b = self.boxes.pop().expect("frame owns a box");
            self.present.remove(&b);
        }
    }
}

/// Every plane partition at the origin inside the `a x b x c` box.
pub fn enumerate_boxed(a: usize, b: usize, c: usize) -> impl Iterator<Item = PlanePartition> {
    let mut out = Vec::new();
    let mut heights = vec![vec![0u32; b]; a];
    fill_heights(&mut heights, 0, c as u32, &mut out);
    out.into_iter()
}

fn fill_heights(h: &mut Vec<Vec<u32>>, pos: usize, cap: u32, out: &mut Vec<PlanePartition>) {
    let rows = h.len();
    let cols = h.first().map_or(0, Vec::len);
    if pos == rows * cols {
        out.push(PlanePartition::from_heights([0, 0, 0], h).expect("monotone heights"));
        return;
    }
    let (i, j) = (pos / cols, pos % cols);
    let mut bound = cap;
    if i > 0 {
        bound = bound.min(h[i - 1][j]);
    }
    if j > 0 {
        bound = bound.min(h[i][j - 1]);
    }
    for v in 0..=bound {
        h[i][j] = v;
        fill_heights(h, pos + 1, cap, out);
    }
    h[i][j] = 0;
}

/// The perfect matching of `H(n)` that the lozenge tiling of a plane
/// partition in the `n`-box corresponds to.
///
/// Each of the `3 n^2` visible unit squares of the stacked boxes together
/// with the floor and the two back walls becomes a lozenge, and each lozenge
/// is an edge joining its two triangles.
pub fn to_matching(pp: &PlanePartition, g: &HexGraph) -> Result<Matching, PlanePartitionError> {
    let n = g.n();
    if !pp.fits_in(n) {
        return Err(PlanePartitionError::DoesNotFit(n));
    }
    let ni = n as i32;
    let mut edges = Vec::with_capacity(3 * n * n);
    for u in 0..ni {
        for v in 0..ni {
            let faces = [
                CubeFace {
                    normal: Axis::Z,
                    at: [u, v, pp.column_height(u, v)].map(i64::from),
                },
                CubeFace {
                    normal: Axis::X,
                    at: [pp.depth(0, u, v), u, v].map(i64::from),
                },
                CubeFace {
                    normal: Axis::Y,
                    at: [v, pp.depth(1, u, v), u].map(i64::from),
                },
            ];
            for f in faces {
                edges.push(g.lozenge(f).expect("visible face projects inside the hexagon"));
            }
        }
    }
    Ok(Matching::from_edges(edges))
}

/// Inverse of [`to_matching`]: the plane partition (at the origin) whose
/// tiling is the given perfect matching.
pub fn from_matching(m: &Matching, g: &HexGraph) -> Result<PlanePartition, PlanePartitionError> {
    let n = g.n();
    if !g.is_perfect_matching(m) {
        return Err(PlanePartitionError::NotPerfectMatching(n));
    }
    let ni = n as i32;
    let mut heights = vec![vec![0u32; n]; n];
    // Tops over the columns (i, j) with i - j = d sit on the lattice line
    // X - Y = d, at X = i - h(i, j). Heights are nonincreasing along the
    // diagonal, so X increases strictly with i and the tops can be read off
    // in order.
    for d in -(ni - 1)..ni {
        let mut xs: Vec<i32> = m
            .edges()
            .iter()
            .filter_map(|&e| {
                let edge = g.edge(e);
                let t = g.tri(edge.east);
                (edge.dir == EdgeDir::Horizontal && t.x - t.y == d).then_some(t.x)
            })
            .collect();
        xs.sort_unstable();
        let columns: Vec<(i32, i32)> = (0..ni).map(|j| (j + d, j)).filter(|&(i, _)| (0..ni).contains(&i)).collect();
        if xs.len() != columns.len() {
            let (i, j) = columns.first().copied().unwrap_or((d, 0));
            return Err(PlanePartitionError::NoTopFace(i, j));
        }
        for (&(i, j), &x) in columns.iter().zip(&xs) {
            let h = i - x;
            if !(0..=ni).contains(&h) {
                return Err(PlanePartitionError::NoTopFace(i, j));
            }
            heights[i as usize][j as usize] = h as u32;
        }
    }
    let pp = PlanePartition::from_heights([0, 0, 0], &heights)?;
    if to_matching(&pp, g)? != *m {
        return Err(PlanePartitionError::NotPerfectMatching(n));
    }
    Ok(pp)
}

/// Three plane partitions based at `(0,b,c)`, `(a,0,c)` and `(a,b,0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxTriple {
    params: [usize; 3],
    etas: [PlanePartition; 3],
}

impl BoxTriple {
    pub fn basepoints([a, b, c]: [usize; 3]) -> [Cell; 3] {
        let (a, b, c) = (a as i32, b as i32, c as i32);
        [[0, b, c], [a, 0, c], [a, b, 0]]
    }

    /// Fails if some partition is not based where its index requires.
    pub fn new(params: [usize; 3], etas: [PlanePartition; 3]) -> Result<Self, PlanePartitionError> {
        for (eta, base) in etas.iter().zip(Self::basepoints(params)) {
            if eta.basepoint() != base {
                return Err(PlanePartitionError::WrongBasepoint(eta.basepoint(), base));
            }
        }
        Ok(BoxTriple { params, etas })
    }

    pub fn params(&self) -> [usize; 3] {
        self.params
    }

    pub fn etas(&self) -> &[PlanePartition; 3] {
        &self.etas
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_ideal_is_enforced() {
        assert!(PlanePartition::new([0, 0, 0], [[0, 0, 0], [1, 0, 0]]).is_ok());
        assert_eq!(
            PlanePartition::new([0, 0, 0], [[1, 0, 0]]).unwrap_err(),
            PlanePartitionError::NotOrderIdeal([1, 0, 0], [0, 0, 0])
        );
        assert!(matches!(
            PlanePartition::new([0, 1, 1], [[0, 0, 0]]),
            Err(PlanePartitionError::OutsideOctant(..))
        ));
        // based elsewhere
        assert!(PlanePartition::new([0, 1, 1], [[0, 1, 1], [0, 1, 2]]).is_ok());
    }

    #[test]
    fn volume_enumeration_small_cases() {
        let all: Vec<_> = enumerate_by_volume(0).collect();
        assert_eq!(all, vec![PlanePartition::empty([0, 0, 0])]);
        let per_volume = |max: usize| {
            let mut counts = vec![0usize; max + 1];
            for pp in enumerate_by_volume(max) {
                counts[pp.volume()] += 1;
            }
            counts
        };
        assert_eq!(per_volume(2), vec![1, 1, 3]);
        assert_eq!(enumerate_by_volume(6).count(), 96);
    }

    #[test]
    fn volume_enumeration_is_sorted_and_unique() {
        let all: Vec<Vec<Cell>> = enumerate_by_volume(5)
            .map(|p| p.boxes().iter().copied().collect())
            .collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
    }

    #[test]
    fn boxed_counts() {
        assert_eq!(enumerate_boxed(1, 1, 1).count(), 2);
        assert_eq!(enumerate_boxed(2, 2, 2).count(), 20);
        assert_eq!(enumerate_boxed(3, 3, 3).count(), 980);
        assert_eq!(enumerate_boxed(0, 2, 2).count(), 1);
    }

    #[test]
    fn heights_round_trip() {
        let h = vec![vec![3, 1], vec![2]];
        let pp = PlanePartition::from_heights([0, 0, 0], &h).unwrap();
        assert_eq!(pp.volume(), 6);
        assert_eq!(pp.heights(), h);
        assert!(PlanePartition::from_heights([0, 0, 0], &[vec![1, 2]]).is_err());
    }

    #[test]
    fn folklore_on_h1() {
        let g = HexGraph::build(1).unwrap();
        let empty = to_matching(&PlanePartition::empty([0, 0, 0]), &g).unwrap();
        let one = to_matching(&PlanePartition::new([0, 0, 0], [[0, 0, 0]]).unwrap(), &g).unwrap();
        assert_eq!(empty.len(), 3);
        assert_ne!(empty, one);
        assert_eq!(g.matching_exponent(&one), g.matching_exponent(&empty) + 1);
        let mut all = g.perfect_matchings();
        all.sort();
        let mut ours = vec![empty, one];
        ours.sort();
        assert_eq!(all, ours);
    }

    #[test]
    fn full_box_is_maximal() {
        let g = HexGraph::build(2).unwrap();
        let full = PlanePartition::from_heights([0, 0, 0], &[vec![2, 2], vec![2, 2]]).unwrap();
        let m = to_matching(&full, &g).unwrap();
        let best = g
            .perfect_matchings()
            .into_iter()
            .max_by_key(|m| g.matching_exponent(m))
            .unwrap();
        assert_eq!(m, best);
    }

    #[test]
    fn bijection_round_trip_n2() {
        let g = HexGraph::build(2).unwrap();
        for pp in enumerate_boxed(2, 2, 2) {
            let m = to_matching(&pp, &g).unwrap();
            assert!(g.is_perfect_matching(&m));
            assert_eq!(from_matching(&m, &g).unwrap(), pp);
        }
    }

    #[test]
    fn too_big_for_window() {
        let g = HexGraph::build(1).unwrap();
        let pp = PlanePartition::new([0, 0, 0], [[0, 0, 0], [0, 0, 1]]).unwrap();
        assert_eq!(
            to_matching(&pp, &g).unwrap_err(),
            PlanePartitionError::DoesNotFit(1)
        );
        assert!(from_matching(&Matching::from_edges([0]), &g).is_err());
    }

    #[test]
    fn json_is_sorted() {
        let pp = PlanePartition::new([1, 0, 0], [[1, 0, 1], [1, 0, 0]]).unwrap();
        let j = serde_json::to_string(&pp).unwrap();
        assert_eq!(j, r#"{"basepoint":[1,0,0],"boxes":[[1,0,0],[1,0,1]]}"#);
        let bad = r#"{"basepoint":[0,0,0],"boxes":[[0,0,1]]}"#;
        assert!(serde_json::from_str::<PlanePartition>(bad).is_err());
    }
}
