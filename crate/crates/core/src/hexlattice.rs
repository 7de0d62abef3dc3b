//! The hexagon graph `H(n)`.
//!
//! Vertices are the unit triangles of the side-`n` hexagon cut from the
//! triangular lattice; edges join triangles sharing a side. The hexagon is the
//! projection of the cube `[0, n]^3` along `(1, 1, 1)`, drawn with the
//! `z` axis pointing north, so it has a corner at the top (`C`), a vertical
//! side on the west and on the east, and corners `A` (southwest) and `B`
//! (southeast).
//!
//! Lattice points are written `(X, Y)`, standing for `X x + Y y` with
//! `x = (sqrt3/2, -1/2)` and `y = (-sqrt3/2, -1/2)`; the 3D point `(i, j, k)`
//! projects to `(i - k, j - k)`. Every triangle is one of
//!
//! * `East(X, Y)` with corners `(X, Y)`, `(X+1, Y)`, `(X+1, Y+1)`: it has a
//!   vertical side on its west and its apex points east;
//! * `West(X, Y)` with corners `(X, Y)`, `(X, Y+1)`, `(X+1, Y+1)`.
//!
//! The three edge directions correspond to the three lozenge orientations:
//! a horizontal edge joins `East(X,Y)` and `West(X,Y)` (the top face of a
//! box), an `Ne` edge joins `East(X,Y)` and `West(X,Y-1)` (a face normal to
//! the `x` axis) and an `Nw` edge joins `East(X,Y)` and `West(X+1,Y)` (normal
//! to the `y` axis).

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("hexagon side length must be at least 1, got {0}")]
    BadSize(i64),
    #[error("face {0} is not flippable in this matching")]
    NotFlippable(usize),
    #[error("edge set is not a perfect matching: {0}")]
    NotPerfect(String),
    #[error("node parameters ({a},{b},{c}) need n >= {need}, got n = {n}")]
    TooSmallForNodes {
        a: usize,
        b: usize,
        c: usize,
        n: usize,
        need: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orient {
    East,
    West,
}

/// A unit triangle of the lattice, i.e. a vertex of `H(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tri {
    pub x: i32,
    pub y: i32,
    pub orient: Orient,
}

impl Tri {
    pub const fn east(x: i32, y: i32) -> Self {
        Tri {
            x,
            y,
            orient: Orient::East,
        }
    }

    pub const fn west(x: i32, y: i32) -> Self {
        Tri {
            x,
            y,
            orient: Orient::West,
        }
    }

    /// Corners as lattice points.
    pub fn corners(&self) -> [(i32, i32); 3] {
        let (x, y) = (self.x, self.y);
        match self.orient {
            Orient::East => [(x, y), (x + 1, y), (x + 1, y + 1)],
            Orient::West => [(x, y), (x, y + 1), (x + 1, y + 1)],
        }
    }

    /// Centroid in the plane (unit lattice spacing, north is `+y`).
    pub fn centroid(&self) -> (f64, f64) {
        let mut cx = 0.0;
        let mut cy = 0.0;
        for p in self.corners() {
            let (px, py) = plane_point(p);
            cx += px;
            cy += py;
        }
        (cx / 3.0, cy / 3.0)
    }

    /// Vertical strip index: the strip between the vertical lattice lines
    /// `X - Y = s` and `X - Y = s + 1`.
    pub fn strip(&self) -> i32 {
        match self.orient {
            Orient::East => self.x - self.y,
            Orient::West => self.x - self.y - 1,
        }
    }
}

/// Lattice point to plane coordinates.
pub fn plane_point((x, y): (i32, i32)) -> (f64, f64) {
    let s3 = 3f64.sqrt() / 2.0;
    (s3 * f64::from(x - y), -0.5 * f64::from(x + y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeDir {
    Horizontal,
    Ne,
    Nw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub east: usize,
    pub west: usize,
    pub dir: EdgeDir,
    /// Gauge exponent: the edge weighs `q^exponent`.
    pub exponent: u32,
}

impl Edge {
    pub fn other(&self, v: usize) -> usize {
        if v == self.east {
            self.west
        } else {
            debug_assert_eq!(v, self.west);
            self.east
        }
    }
}

/// A hexagonal face of `H(n)` around an interior lattice point.
///
/// `lower` holds the alternating triple whose horizontal edge lies below the
/// center; replacing it with `upper` adds one box and raises the gauge
/// exponent by one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub center: (i32, i32),
    pub lower: [usize; 3],
    pub upper: [usize; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
}

impl Side {
    pub const ALL: [Side; 6] = [Side::L1, Side::L2, Side::L3, Side::L4, Side::L5, Side::L6];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Axis normal to a unit square face of the cubic lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Unit square `{at + s e_u + t e_v}` normal to `normal`, with `s, t` in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeFace {
    pub normal: Axis,
    pub at: [i64; 3],
}

impl CubeFace {
    /// The two triangles forming the projected lozenge.
    pub fn triangles(&self) -> (Tri, Tri) {
        let [i, j, k] = self.at;
        let t = |v: i64| i32::try_from(v).expect("lattice coordinate fits in i32");
        match self.normal {
            Axis::Z => (Tri::east(t(i - k), t(j - k)), Tri::west(t(i - k), t(j - k))),
            Axis::X => (
                Tri::east(t(i - k - 1), t(j - k)),
                Tri::west(t(i - k - 1), t(j - k - 1)),
            ),
            Axis::Y => (
                Tri::east(t(i - k - 1), t(j - k - 1)),
                Tri::west(t(i - k), t(j - k - 1)),
            ),
        }
    }
}

/// A set of edges of `H(n)`, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<usize>,
}

impl Matching {
    pub fn from_edges(edges: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = edges.into_iter().collect();
        Matching {
            edges: set.into_iter().collect(),
        }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Colored node sets on the boundary of `H(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeSpec {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub red: Vec<usize>,
    pub green: Vec<usize>,
    pub blue: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeColor {
    Red,
    Green,
    Blue,
}

impl NodeSpec {
    pub fn empty() -> Self {
        NodeSpec {
            a: 0,
            b: 0,
            c: 0,
            red: vec![],
            green: vec![],
            blue: vec![],
        }
    }

    pub fn len(&self) -> usize {
        self.red.len() + self.green.len() + self.blue.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn color_of(&self, v: usize) -> Option<NodeColor> {
        if self.red.contains(&v) {
            Some(NodeColor::Red)
        } else if self.green.contains(&v) {
            Some(NodeColor::Green)
        } else if self.blue.contains(&v) {
            Some(NodeColor::Blue)
        } else {
            None
        }
    }

    pub fn all(&self) -> BTreeSet<usize> {
        self.red
            .iter()
            .chain(&self.green)
            .chain(&self.blue)
            .copied()
            .collect()
    }
}

/// A perfect matching of the node set, pairs stored as `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pairing {
    pub pairs: Vec<(usize, usize)>,
}

impl Pairing {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut pairs: Vec<_> = pairs
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        Pairing { pairs }
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(p, q)| {
            if p == v {
                Some(q)
            } else if q == v {
                Some(p)
            } else {
                None
            }
        })
    }
}

#[derive(Debug, Clone)]
pub struct HexGraph {
    n: usize,
    tris: Vec<Tri>,
    index: HashMap<Tri, usize>,
    edges: Vec<Edge>,
    edge_index: HashMap<(usize, usize), usize>,
    incident: Vec<Vec<usize>>,
    faces: Vec<Face>,
    side_of: Vec<Option<Side>>,
    /// Boundary vertices of each side, in counterclockwise order.
    sides: [Vec<usize>; 6],
}

fn in_hexagon(n: i32, (x, y): (i32, i32)) -> bool {
    x.abs() <= n && y.abs() <= n && (x - y).abs() <= n
}

impl HexGraph {
    pub fn build(n: usize) -> Result<Self, LatticeError> {
        Self::build_with_shift(n, 0)
    }

    /// Like [`HexGraph::build`], with every horizontal exponent raised by `shift`.
    pub fn build_with_shift(n: usize, shift: u32) -> Result<Self, LatticeError> {
        if n == 0 || n > 1000 {
            return Err(LatticeError::BadSize(n as i64));
        }
        let ni = n as i32;
        let mut tris = Vec::new();
        for x in -ni..=ni {
            for y in -ni..=ni {
                for t in [Tri::east(x, y), Tri::west(x, y)] {
                    if t.corners().iter().all(|&p| in_hexagon(ni, p)) {
                        tris.push(t);
                    }
                }
            }
        }
        tris.sort_unstable();
        let index: HashMap<Tri, usize> = tris.iter().enumerate().map(|(i, &t)| (t, i)).collect();

        let mut edges = Vec::new();
        let mut edge_index = HashMap::new();
        let mut incident = vec![Vec::new(); tris.len()];
        for (ei, &t) in tris.iter().enumerate() {
            if t.orient != Orient::East {
                continue;
            }
            let (x, y) = (t.x, t.y);
            for (w, dir) in [
                (Tri::west(x, y), EdgeDir::Horizontal),
                (Tri::west(x, y - 1), EdgeDir::Ne),
                (Tri::west(x + 1, y), EdgeDir::Nw),
            ] {
                if let Some(&wi) = index.get(&w) {
                    let exponent = match dir {
                        EdgeDir::Horizontal => {
                            // rows counted from the bottom boundary
                            u32::try_from((2 * ni - 2 - x - y).div_euclid(2)).expect("row >= 0")
                                + shift
                        }
                        _ => 0,
                    };
                    let id = edges.len();
                    edges.push(Edge {
                        east: ei,
                        west: wi,
                        dir,
                        exponent,
                    });
                    edge_index.insert((ei, wi), id);
                    incident[ei].push(id);
                    incident[wi].push(id);
                }
            }
        }

        let mut g = HexGraph {
            n,
            tris,
            index,
            edges,
            edge_index,
            incident,
            faces: Vec::new(),
            side_of: Vec::new(),
            sides: Default::default(),
        };
        g.faces = g.collect_faces();
        g.classify_boundary();
        Ok(g)
    }

    fn collect_faces(&self) -> Vec<Face> {
        let ni = self.n as i32;
        let mut faces = Vec::new();
        for x in -ni + 1..ni {
            for y in -ni + 1..ni {
                if (x - y).abs() >= ni {
                    continue;
                }
                let e = |a: Tri, b: Tri| self.edge_of(a, b).expect("interior face edge");
                let e1 = e(Tri::east(x, y), Tri::west(x, y));
                let e2 = e(Tri::east(x - 1, y), Tri::west(x, y));
                let e3 = e(Tri::east(x - 1, y), Tri::west(x - 1, y - 1));
                let e4 = e(Tri::east(x - 1, y - 1), Tri::west(x - 1, y - 1));
                let e5 = e(Tri::east(x - 1, y - 1), Tri::west(x, y - 1));
                let e6 = e(Tri::east(x, y), Tri::west(x, y - 1));
                faces.push(Face {
                    center: (x, y),
                    lower: [e1, e3, e5],
                    upper: [e2, e4, e6],
                });
            }
        }
        faces
    }

    fn classify_boundary(&mut self) {
        let mut side_of = vec![None; self.tris.len()];
        let mut sides: [Vec<usize>; 6] = Default::default();
        for (v, &t) in self.tris.iter().enumerate() {
            let (x, y) = (t.x, t.y);
            let missing = match t.orient {
                Orient::East => [
                    (Tri::west(x, y), Side::L1),
                    (Tri::west(x, y - 1), Side::L5),
                    (Tri::west(x + 1, y), Side::L3),
                ],
                Orient::West => [
                    (Tri::east(x, y), Side::L4),
                    (Tri::east(x, y + 1), Side::L2),
                    (Tri::east(x - 1, y), Side::L6),
                ],
            };
            let outside: Vec<Side> = missing
                .iter()
                .filter(|(u, _)| !self.index.contains_key(u))
                .map(|&(_, s)| s)
                .collect();
            debug_assert!(outside.len() <= 1);
            if let Some(&s) = outside.first() {
                side_of[v] = Some(s);
                sides[s.index()].push(v);
            }
        }
        // counterclockwise: L1 runs NW->SW, L2 SW->S, L3 S->SE, L4 SE->NE,
        // L5 NE->N, L6 N->NW
        for (si, list) in sides.iter_mut().enumerate() {
            let tris = &self.tris;
            list.sort_by_key(|&v| {
                let t = tris[v];
                match si {
                    0 => t.x,
                    1 => t.x,
                    2 => -t.y,
                    3 => -t.x,
                    4 => -t.x,
                    _ => t.y,
                }
            });
        }
        self.side_of = side_of;
        self.sides = sides;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.tris.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn tri(&self, v: usize) -> Tri {
        self.tris[v]
    }

    pub fn tris(&self) -> &[Tri] {
        &self.tris
    }

    pub fn vertex_of(&self, t: Tri) -> Option<usize> {
        self.index.get(&t).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Edge joining two triangles, in either order.
    pub fn edge_of(&self, a: Tri, b: Tri) -> Option<usize> {
        let (e, w) = if a.orient == Orient::East { (a, b) } else { (b, a) };
        let ei = *self.index.get(&e)?;
        let wi = *self.index.get(&w)?;
        self.edge_index.get(&(ei, wi)).copied()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_of(self.tris[u], self.tris[v])
    }

    /// The edge of the lozenge a cube face projects to, if it lies inside.
    pub fn lozenge(&self, face: CubeFace) -> Option<usize> {
        let (a, b) = face.triangles();
        self.edge_of(a, b)
    }

    pub fn side_of(&self, v: usize) -> Option<Side> {
        self.side_of[v]
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.side_of[v].is_some()
    }

    /// Boundary vertices of one side, counterclockwise.
    pub fn side(&self, s: Side) -> &[usize] {
        &self.sides[s.index()]
    }

    /// All boundary vertices in counterclockwise order starting at the
    /// northwest corner.
    pub fn boundary_cycle(&self) -> Vec<usize> {
        self.sides.iter().flatten().copied().collect()
    }

    /// Sum of the exponents of the given edges, each counted with multiplicity.
    pub fn exponent_of<'a>(&self, edges: impl IntoIterator<Item = &'a usize>) -> u64 {
        edges
            .into_iter()
            .map(|&e| u64::from(self.edges[e].exponent))
            .sum()
    }

    pub fn matching_exponent(&self, m: &Matching) -> u64 {
        self.exponent_of(m.edges())
    }

    pub fn is_perfect_matching(&self, m: &Matching) -> bool {
        self.check_perfect(m, &BTreeSet::new()).is_ok()
    }

    /// Checks that `m` covers every vertex outside `excluded` exactly once and
    /// touches no excluded vertex.
    pub fn check_perfect(&self, m: &Matching, excluded: &BTreeSet<usize>) -> Result<(), LatticeError> {
        let mut cover = vec![0u8; self.tris.len()];
        for &e in m.edges() {
            let edge = self
                .edges
                .get(e)
                .ok_or_else(|| LatticeError::NotPerfect(format!("edge {e} out of range")))?;
            cover[edge.east] += 1;
            cover[edge.west] += 1;
        }
        for (v, &c) in cover.iter().enumerate() {
            let want = u8::from(!excluded.contains(&v));
            if c != want {
                return Err(LatticeError::NotPerfect(format!(
                    "vertex {:?} covered {c} times",
                    self.tris[v]
                )));
            }
        }
        Ok(())
    }

    /// Replaces whichever alternating triple of face `f` the matching
    /// contains by the other one.
    pub fn face_flip(&self, m: &Matching, f: usize) -> Result<Matching, LatticeError> {
        let face = &self.faces[f];
        let has = |t: &[usize; 3]| t.iter().all(|&e| m.contains(e));
        let (from, to) = if has(&face.lower) {
            (face.lower, face.upper)
        } else if has(&face.upper) {
            (face.upper, face.lower)
        } else {
            return Err(LatticeError::NotFlippable(f));
        };
        Ok(Matching::from_edges(
            m.edges()
                .iter()
                .copied()
                .filter(|e| !from.contains(e))
                .chain(to),
        ))
    }

    /// Every perfect matching, by exhaustive search. Only sensible for small `n`.
    pub fn perfect_matchings(&self) -> Vec<Matching> {
        self.perfect_matchings_avoiding(&BTreeSet::new())
    }

    /// Perfect matchings of the graph with `excluded` vertices deleted.
    pub fn perfect_matchings_avoiding(&self, excluded: &BTreeSet<usize>) -> Vec<Matching> {
        let mut used = vec![false; self.tris.len()];
        for &v in excluded {
            used[v] = true;
        }
        let mut chosen = Vec::new();
        let mut out = Vec::new();
        self.matchings_rec(&mut used, &mut chosen, &mut out);
        out
    }

    fn matchings_rec(&self, used: &mut [bool], chosen: &mut Vec<usize>, out: &mut Vec<Matching>) {
        let Some(v) = used.iter().position(|&u| !u) else {
            out.push(Matching::from_edges(chosen.iter().copied()));
            return;
        };
        used[v] = true;
        for &e in &self.incident[v] {
            let w = self.edges[e].other(v);
            if used[w] {
                continue;
            }
            used[w] = true;
            chosen.push(e);
            self.matchings_rec(used, chosen, out);
            chosen.pop();
            used[w] = false;
        }
        used[v] = false;
    }

    /// Number of horizontal edges of each vertical lattice line `X - Y = m`
    /// that a configuration with the given vertex degrees must use (counted
    /// with multiplicity). Every horizontal edge crosses exactly one such line
    /// and every other edge stays inside a strip, so the counts follow from
    /// the degrees strip by strip.
    pub fn horizontal_line_counts(&self, degree: impl Fn(usize) -> i64) -> BTreeMap<i32, i64> {
        let mut balance: BTreeMap<i32, i64> = BTreeMap::new();
        for (v, t) in self.tris.iter().enumerate() {
            let d = degree(v);
            let s = t.strip();
            // east triangles send their horizontal edge across the left line
            // of their strip, west triangles across the right line
            match t.orient {
                Orient::East => *balance.entry(s).or_default() += d,
                Orient::West => *balance.entry(s).or_default() -= d,
            }
        }
        // crossing(s + 1) = crossing(s) - balance(s)
        let ni = self.n as i32;
        let mut counts = BTreeMap::new();
        let mut crossing = 0i64;
        for s in -ni - 1..=ni {
            counts.insert(s, crossing);
            crossing -= balance.get(&s).copied().unwrap_or(0);
        }
        // left line of strip s is the line X - Y = s
        counts.retain(|_, c| *c != 0);
        counts
    }

    /// Places the red, green and blue nodes for parameters `(a, b, c)`.
    ///
    /// Red: the `a` boundary triangles of `L1` nearest `A` and the `c` of `L2`
    /// nearest `A`. Green: the `c` of `L3` and the `b` of `L4` nearest `B`.
    /// Blue: the `b` of `L5` and the `a` of `L6` nearest `C`. Every side
    /// carries `n` boundary triangles of a single orientation, so each run
    /// needs `n >= max(a, b, c)`. The runs start right at the corner.
    pub fn place_nodes(&self, a: usize, b: usize, c: usize) -> Result<NodeSpec, LatticeError> {
        let need = a.max(b).max(c).max(1);
        if self.n < need {
            return Err(LatticeError::TooSmallForNodes {
                a,
                b,
                c,
                n: self.n,
                need,
            });
        }
        // sides are stored counterclockwise; A ends L1 and starts L2, B ends
        // L3 and starts L4, C ends L5 and starts L6
        let near_end = |s: Side, k: usize| -> Vec<usize> {
            let list = self.side(s);
            list[list.len() - k..].iter().rev().copied().collect()
        };
        let near_start = |s: Side, k: usize| -> Vec<usize> { self.side(s)[..k].to_vec() };
        let offset = NODE_CORNER_OFFSET;
        let skip_end = |s: Side, k: usize| -> Vec<usize> {
            near_end(s, k + offset)[offset..].to_vec()
        };
        let skip_start = |s: Side, k: usize| -> Vec<usize> {
            near_start(s, k + offset)[offset..].to_vec()
        };
        let mut red = skip_end(Side::L1, a);
        red.extend(skip_start(Side::L2, c));
        let mut green = skip_end(Side::L3, c);
        green.extend(skip_start(Side::L4, b));
        let mut blue = skip_end(Side::L5, b);
        blue.extend(skip_start(Side::L6, a));
        Ok(NodeSpec {
            a,
            b,
            c,
            red,
            green,
            blue,
        })
    }

    /// The unique non-crossing pairing of the nodes in which every pair joins
    /// two different colors.
    pub fn tripartite_pairing(&self, spec: &NodeSpec) -> Option<Pairing> {
        let order: Vec<(usize, NodeColor)> = self
            .boundary_cycle()
            .into_iter()
            .filter_map(|v| spec.color_of(v).map(|c| (v, c)))
            .collect();
        noncrossing_bichromatic_pairing(&order)
    }
}

/// Which boundary triangles next to a corner are skipped before the node runs
/// start; fixed by the double-box construction (see `doubledimer`).
pub const NODE_CORNER_OFFSET: usize = 0;

/// Stack scan for a non-crossing bichromatic perfect matching of colored
/// points on a circle. Tries every rotation as the starting point.
pub fn noncrossing_bichromatic_pairing(cycle: &[(usize, NodeColor)]) -> Option<Pairing> {
    if cycle.is_empty() {
        return Some(Pairing::new([]));
    }
    if cycle.len() % 2 == 1 {
        return None;
    }
    for start in 0..cycle.len() {
        let mut stack: Vec<(usize, NodeColor)> = Vec::new();
        let mut pairs = Vec::new();
        for k in 0..cycle.len() {
            let cur = cycle[(start + k) % cycle.len()];
            match stack.last() {
                Some(&top) if top.1 != cur.1 => {
                    stack.pop();
                    pairs.push((top.0, cur.0));
                }
                _ => stack.push(cur),
            }
        }
        if stack.is_empty() {
            return Some(Pairing::new(pairs));
        }
    }
    None
}

/// Whether a pairing of points listed in cyclic order is non-crossing.
pub fn is_noncrossing(cycle: &[usize], pairing: &Pairing) -> bool {
    let pos: HashMap<usize, usize> = cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let spans: Vec<(usize, usize)> = pairing
        .pairs
        .iter()
        .map(|&(u, v)| {
            let (p, q) = (pos[&u], pos[&v]);
            (p.min(q), p.max(q))
        })
        .collect();
    for (i, &(a, b)) in spans.iter().enumerate() {
        for &(c, d) in &spans[i + 1..] {
            let c_in = a < c && c < b;
            let d_in = a < d && d < b;
            if c_in != d_in {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for (n, v, e) in [(1, 6, 6), (2, 24, 30), (3, 54, 72)] {
            let g = HexGraph::build(n).unwrap();
            assert_eq!(g.vertex_count(), v);
            assert_eq!(g.edge_count(), e);
            assert_eq!(g.faces().len(), 3 * n * n - 3 * n + 1);
        }
        assert_eq!(HexGraph::build(0).unwrap_err(), LatticeError::BadSize(0));
    }

    #[test]
    fn matching_counts() {
        assert_eq!(HexGraph::build(1).unwrap().perfect_matchings().len(), 2);
        assert_eq!(HexGraph::build(2).unwrap().perfect_matchings().len(), 20);
        assert_eq!(HexGraph::build(3).unwrap().perfect_matchings().len(), 980);
    }

    #[test]
    fn degrees() {
        let g = HexGraph::build(3).unwrap();
        for v in 0..g.vertex_count() {
            let d = g.incident(v).len();
            assert_eq!(d == 2, g.is_boundary(v));
            assert!(d == 2 || d == 3);
        }
        for s in Side::ALL {
            assert_eq!(g.side(s).len(), 3);
        }
    }

    #[test]
    fn faces_have_one_horizontal_edge_per_triple() {
        let g = HexGraph::build(3).unwrap();
        for f in g.faces() {
            let horiz = |t: &[usize; 3]| {
                t.iter()
                    .filter(|&&e| g.edge(e).dir == EdgeDir::Horizontal)
                    .copied()
                    .collect::<Vec<_>>()
            };
            let (lo, up) = (horiz(&f.lower), horiz(&f.upper));
            assert_eq!((lo.len(), up.len()), (1, 1));
            let sum = |t: &[usize; 3]| t.iter().map(|&e| g.edge(e).exponent).sum::<u32>();
            assert_eq!(sum(&f.upper), sum(&f.lower) + 1);
        }
    }

    #[test]
    fn flips_on_h1() {
        let g = HexGraph::build(1).unwrap();
        let ms = g.perfect_matchings();
        let min = ms.iter().min_by_key(|m| g.matching_exponent(m)).unwrap();
        let up = g.face_flip(min, 0).unwrap();
        assert_eq!(g.matching_exponent(&up), g.matching_exponent(min) + 1);
        assert_eq!(&g.face_flip(&up, 0).unwrap(), min);
    }

    #[test]
    fn non_flippable_face() {
        let g = HexGraph::build(2).unwrap();
        let m = g.perfect_matchings()[0].clone();
        let stuck = (0..g.faces().len()).find(|&f| g.face_flip(&m, f).is_err());
        assert!(stuck.is_some());
    }

    #[test]
    fn pairing_on_six_alternating_colors() {
        use NodeColor::*;
        let cyc = [(0, Red), (1, Red), (2, Green), (3, Green), (4, Blue), (5, Blue)];
        let p = noncrossing_bichromatic_pairing(&cyc).unwrap();
        assert_eq!(p.pairs.len(), 3);
        for &(u, v) in &p.pairs {
            assert_ne!(cyc[u].1, cyc[v].1);
        }
        assert!(is_noncrossing(&[0, 1, 2, 3, 4, 5], &p));
        assert!(noncrossing_bichromatic_pairing(&[(0, Red), (1, Red)]).is_none());
    }
}
