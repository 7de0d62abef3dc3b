//! Double-dimer configurations on `H(n)` with tripartite nodes.
//!
//! A configuration is an edge multiset in which every node has degree one
//! and every other vertex degree two. It splits into doubled edges, closed
//! loops and node-to-node paths; the paths pair up the nodes.
//!
//! [`zddc_window`] sums `2^loops q^excess` over all configurations whose
//! pairing is the tripartite pairing, by a transfer-matrix sweep over the
//! vertical strips of the hexagon. [`enumerate_ddc`] lists the same
//! configurations one by one and is meant for small windows and tests.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::doublebox::{realize, Assignment, BoxTyping};
use crate::hexlattice::{EdgeDir, HexGraph, LatticeError, NodeColor, NodeSpec, Orient, Pairing, Tri};
use crate::planepart::{BoxTriple, Cell, PlanePartition};
use crate::qseries::QSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DoubleDimerError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("degree law violated at vertex {0:?}: degree {1}")]
    DegreeLaw(Tri, u32),
    #[error("edge multiplicity {0} out of range")]
    Multiplicity(i32),
    #[error("window H({0}) too small for this configuration")]
    WindowTooSmall(usize),
    #[error("node convention invalid for (n,a,b,c) = ({0},{1},{2},{3})")]
    NodeConvention(usize, usize, usize, usize),
    #[error("no stabilization up to n = {ceiling}; last windows: {partial:?}")]
    NoStabilization {
        ceiling: usize,
        partial: Vec<(usize, QSeries)>,
    },
}

/// Edge multiset on `H(n)` together with its node set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoubleDimerConfig {
    n: usize,
    mult: Vec<u8>,
    nodes: BTreeSet<usize>,
}

/// Doubled edges, loops and paths of a configuration. Loops and paths are
/// vertex sequences; a path runs from its smaller node to its larger one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub doubled: Vec<usize>,
    pub loops: Vec<Vec<usize>>,
    pub paths: Vec<Vec<usize>>,
}

impl DoubleDimerConfig {
    /// Checks the degree law: nodes have degree one, all other vertices two.
    pub fn new(g: &HexGraph, mult: Vec<u8>, nodes: BTreeSet<usize>) -> Result<Self, DoubleDimerError> {
        assert_eq!(mult.len(), g.edge_count());
        let mut deg = vec![0u32; g.vertex_count()];
        for (e, &m) in mult.iter().enumerate() {
            if m > 2 {
                return Err(DoubleDimerError::Multiplicity(i32::from(m)));
            }
            deg[g.edge(e).east] += u32::from(m);
            deg[g.edge(e).west] += u32::from(m);
        }
        for (v, &d) in deg.iter().enumerate() {
            let want = if nodes.contains(&v) { 1 } else { 2 };
            if d != want {
                return Err(DoubleDimerError::DegreeLaw(g.tri(v), d));
            }
        }
        Ok(DoubleDimerConfig { n: g.n(), mult, nodes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicities(&self) -> &[u8] {
        &self.mult
    }

    pub fn multiplicity(&self, e: usize) -> u8 {
        self.mult[e]
    }

    pub fn nodes(&self) -> &BTreeSet<usize> {
        &self.nodes
    }

    /// `sum r(e)` over edges with multiplicity.
    pub fn exponent(&self, g: &HexGraph) -> u64 {
        self.mult
            .iter()
            .enumerate()
            .map(|(e, &m)| u64::from(m) * u64::from(g.edge(e).exponent))
            .sum()
    }

    pub fn decompose(&self, g: &HexGraph) -> Decomposition {
        let doubled: Vec<usize> = (0..self.mult.len()).filter(|&e| self.mult[e] == 2).collect();
        let mut single: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
        for (e, &m) in self.mult.iter().enumerate() {
            if m == 1 {
                let edge = g.edge(e);
                single[edge.east].push(edge.west);
                single[edge.west].push(edge.east);
            }
        }
        let mut seen = vec![false; g.vertex_count()];
        let walk = |start: usize, seen: &mut Vec<bool>| {
            let mut seq = vec![start];
            seen[start] = true;
            let mut prev = usize::MAX;
            let mut cur = start;
            loop {
                let next = single[cur].iter().copied().find(|&w| w != prev && !(seen[w] && w != start));
                match next {
                    Some(w) if w == start => break,
                    Some(w) => {
                        seen[w] = true;
                        seq.push(w);
                        prev = cur;
                        cur = w;
                    }
                    None => break,
                }
            }
            seq
        };
        let mut paths = Vec::new();
        for &v in &self.nodes {
            if !seen[v] {
                paths.push(walk(v, &mut seen));
            }
        }
        let mut loops = Vec::new();
        for v in 0..g.vertex_count() {
            if !seen[v] && !single[v].is_empty() {
                loops.push(walk(v, &mut seen));
            }
        }
        Decomposition { doubled, loops, paths }
    }

    pub fn loops_count(&self, g: &HexGraph) -> usize {
        self.decompose(g).loops.len()
    }

    /// The node pairing made by the paths.
    pub fn pairing(&self, g: &HexGraph) -> Pairing {
        Pairing::new(
            self.decompose(g)
                .paths
                .iter()
                .map(|p| (p[0], *p.last().expect("paths are nonempty"))),
        )
    }

    pub fn dump(&self, g: &HexGraph, params: [usize; 3], min_exponent: u64) -> ConfigDump {
        let d = self.decompose(g);
        ConfigDump {
            n: self.n,
            params,
            edges: (0..self.mult.len())
                .filter(|&e| self.mult[e] > 0)
                .map(|e| {
                    let edge = g.edge(e);
                    (g.tri(edge.east), g.tri(edge.west), self.mult[e])
                })
                .collect(),
            loops: d.loops.len(),
            excess: self.exponent(g) as i64 - min_exponent as i64,
            pairing: d
                .paths
                .iter()
                .map(|p| (g.tri(p[0]), g.tri(*p.last().expect("nonempty"))))
                .collect(),
        }
    }
}

/// JSON form of a configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDump {
    pub n: usize,
    pub params: [usize; 3],
    /// `(east, west, multiplicity)` for every used edge.
    pub edges: Vec<(Tri, Tri, u8)>,
    pub loops: usize,
    pub excess: i64,
    pub pairing: Vec<(Tri, Tri)>,
}

impl ConfigDump {
    /// Rebuilds the configuration on `H(n)`, checking the degree law against
    /// the nodes placed for `params`.
    pub fn config(&self) -> Result<(HexGraph, NodeSpec, DoubleDimerConfig), DoubleDimerError> {
        let g = HexGraph::build(self.n)?;
        let [a, b, c] = self.params;
        let spec = g.place_nodes(a, b, c)?;
        let mut mult = vec![0u8; g.edge_count()];
        for &(e, w, m) in &self.edges {
            let id = g.edge_of(e, w).ok_or(DoubleDimerError::WindowTooSmall(self.n))?;
            mult[id] = m;
        }
        let cfg = DoubleDimerConfig::new(&g, mult, spec.all())?;
        Ok((g, spec, cfg))
    }
}

/// A plane partition seen as the infinite stepped surface of its room: the
/// two walls and the floor through the basepoint, with the boxes on top.
/// Coordinates are shifted by `origin`, which then projects to the center of
/// the window.
struct Surface {
    base: Cell,
    boxes: HashSet<Cell>,
    reach: i32,
}

impl Surface {
    fn new(pp: &PlanePartition, origin: Cell) -> Self {
        let shift = |c: Cell| [c[0] - origin[0], c[1] - origin[1], c[2] - origin[2]];
        let reach = pp
            .relative_boxes()
            .flat_map(|r| r.into_iter())
            .max()
            .map_or(0, |m| m + 1);
        Surface {
            base: shift(pp.basepoint()),
            boxes: pp.boxes().iter().map(|&c| shift(c)).collect(),
            reach,
        }
    }

    /// Length of the run of boxes leaving the wall along `axis` over the cell
    /// `(u, v)` of the two following coordinates. `None` inside a wall.
    fn depth(&self, axis: usize, u: i32, v: i32) -> Option<i32> {
        let (a1, a2) = ((axis + 1) % 3, (axis + 2) % 3);
        if u < self.base[a1] || v < self.base[a2] {
            return None;
        }
        let mut r = [0; 3];
        r[a1] = u;
        r[a2] = v;
        let mut d = 0;
        loop {
            r[axis] = self.base[axis] + d;
            if !self.boxes.contains(&r) {
                return Some(d);
            }
            d += 1;
        }
    }

    /// Whether the lozenge of the edge of direction `dir` at the east
    /// triangle `(x, y)` is a visible face. The cube faces projecting onto it
    /// are parametrized by `t` along the line of sight.
    fn has(&self, dir: EdgeDir, x: i32, y: i32) -> bool {
        let lo = match dir {
            EdgeDir::Horizontal => self.base[2],
            EdgeDir::Ne => self.base[0] - x - 1,
            EdgeDir::Nw => self.base[1] - y - 1,
        };
        (lo..=lo + self.reach).any(|t| match dir {
            // top face at (x+t, y+t, t)
            EdgeDir::Horizontal => self.depth(2, x + t, y + t).is_some_and(|d| self.base[2] + d == t),
            // face normal to x at (x+t+1, y+t, t)
            EdgeDir::Ne => self.depth(0, y + t, t).is_some_and(|d| self.base[0] + d == x + t + 1),
            // face normal to y at (x+t+1, y+t+1, t)
            EdgeDir::Nw => self.depth(1, t, x + t + 1).is_some_and(|d| self.base[1] + d == y + t + 1),
        })
    }
}

/// Edge multiplicities `sum sign [edge is a visible face]` over `H(n)`.
fn superpose(g: &HexGraph, parts: &[(&PlanePartition, i32)], origin: Cell) -> Vec<i32> {
    let surfaces: Vec<(Surface, i32)> = parts.iter().map(|&(pp, s)| (Surface::new(pp, origin), s)).collect();
    g.edges()
        .iter()
        .map(|e| {
            let t = g.tri(e.east);
            debug_assert_eq!(t.orient, Orient::East);
            surfaces
                .iter()
                .filter(|(s, _)| s.has(e.dir, t.x, t.y))
                .map(|(_, sign)| sign)
                .sum()
        })
        .collect()
}

/// Whether every box lies strictly inside the window once `origin` is moved
/// to its center.
fn boxes_inside(pp: &PlanePartition, origin: Cell, n: usize) -> bool {
    let n = n as i32;
    pp.boxes().iter().all(|b| {
        let r = [b[0] - origin[0], b[1] - origin[1], b[2] - origin[2]];
        // projected corners of the box
        [[0, 0, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1]]
            .iter()
            .all(|d| {
                let (x, y) = (r[0] + d[0] - r[2] - d[2], r[1] + d[1] - r[2] - d[2]);
                x.abs() < n && y.abs() < n && (x - y).abs() < n
            })
    })
}

/// The double-dimer configuration of a triple: the three tilings laid over
/// each other with `(a, b, c)` at the center, minus the tiling of the
/// intersection-space partition.
pub fn triple_to_ddc(t: &BoxTriple, g: &HexGraph) -> Result<DoubleDimerConfig, DoubleDimerError> {
    let params = t.params();
    let origin = params.map(|v| v as i32);
    let n = g.n();
    let [e1, e2, e3] = t.etas();
    let int = PlanePartition::new(
        origin,
        t.etas()
            .iter()
            .flat_map(|e| e.boxes().iter().copied())
            .filter(|b| (0..3).all(|ax| b[ax] >= origin[ax])),
    )
    .map_err(|_| DoubleDimerError::WindowTooSmall(n))?;
    if ![e1, e2, e3, &int].iter().all(|pp| boxes_inside(pp, origin, n)) {
        return Err(DoubleDimerError::WindowTooSmall(n));
    }
    let raw = superpose(g, &[(e1, 1), (e2, 1), (e3, 1), (&int, -1)], origin);
    let mult = raw
        .into_iter()
        .map(|m| u8::try_from(m).ok().filter(|&m| m <= 2).ok_or(DoubleDimerError::Multiplicity(m)))
        .collect::<Result<Vec<u8>, _>>()?;
    let [a, b, c] = params;
    let spec = g.place_nodes(a, b, c)?;
    DoubleDimerConfig::new(g, mult, spec.all()).map_err(|e| match e {
        DoubleDimerError::DegreeLaw(..) => DoubleDimerError::NodeConvention(n, a, b, c),
        other => other,
    })
}

/// [`triple_to_ddc`] for the triple an assignment picks out of a class.
pub fn dbc_to_ddc(
    typing: &BoxTyping,
    assignment: &Assignment,
    g: &HexGraph,
) -> Result<DoubleDimerConfig, DoubleDimerError> {
    triple_to_ddc(&realize(typing, assignment), g)
}

/// The image of the empty double-box configuration: the frozen
/// configuration of least weight.
pub fn minimal_config(g: &HexGraph, a: usize, b: usize, c: usize) -> Result<DoubleDimerConfig, DoubleDimerError> {
    let typing = BoxTyping::empty([a, b, c]);
    dbc_to_ddc(&typing, &Vec::new(), g)
}

/// The tripartite pairing of the nodes for `(a, b, c)`.
pub fn sigma(g: &HexGraph, spec: &NodeSpec) -> Result<Pairing, DoubleDimerError> {
    g.tripartite_pairing(spec)
        .ok_or(DoubleDimerError::NodeConvention(g.n(), spec.a, spec.b, spec.c))
}

/// Vertex order for both searches: strips left to right, each strip bottom
/// to top. Edges are taken in order of their later endpoint.
struct Sweep {
    /// edges in processing order, each as (edge, earlier endpoint, later endpoint)
    order: Vec<(usize, usize, usize)>,
    /// step after which each vertex has no pending edge
    last_step: Vec<usize>,
    /// step at which each vertex first appears
    first_step: Vec<usize>,
    /// lower bound on the exponent of horizontal edges on lines strictly
    /// after the strip of step `k`
    future: Vec<u64>,
    /// strip of the later endpoint at each step
    strip_at: Vec<i32>,
}

impl Sweep {
    fn new(g: &HexGraph, target: &[u8]) -> Result<Self, DoubleDimerError> {
        let mut verts: Vec<usize> = (0..g.vertex_count()).collect();
        verts.sort_by_key(|&v| {
            let t = g.tri(v);
            (t.strip(), -(t.x + t.y), t.orient)
        });
        let mut pos = vec![0usize; g.vertex_count()];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut order: Vec<(usize, usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, edge)| {
                let (u, v) = if pos[edge.east] < pos[edge.west] {
                    (edge.east, edge.west)
                } else {
                    (edge.west, edge.east)
                };
                (e, u, v)
            })
            .collect();
        order.sort_by_key(|&(_, u, v)| (pos[v], pos[u]));
        let mut last_step = vec![0usize; g.vertex_count()];
        let mut first_step = vec![usize::MAX; g.vertex_count()];
        for (k, &(_, u, v)) in order.iter().enumerate() {
            for w in [u, v] {
                last_step[w] = k;
                first_step[w] = first_step[w].min(k);
            }
        }
        let strip_at: Vec<i32> = order.iter().map(|&(_, _, v)| g.tri(v).strip()).collect();

        // least exponent each vertical line can carry given its forced count
        let counts = g.horizontal_line_counts(|v| i64::from(target[v]));
        let mut per_line: BTreeMap<i32, Vec<u64>> = BTreeMap::new();
        for e in g.edges() {
            if e.dir == EdgeDir::Horizontal {
                let line = g.tri(e.east).strip();
                per_line.entry(line).or_default().extend([u64::from(e.exponent); 2]);
            }
        }
        let mut min_line: BTreeMap<i32, u64> = BTreeMap::new();
        for (&line, &count) in &counts {
            let mut rs = per_line.get(&line).cloned().unwrap_or_default();
            rs.sort_unstable();
            let count = usize::try_from(count).map_err(|_| DoubleDimerError::NodeConvention(g.n(), 0, 0, 0))?;
            if count > rs.len() {
                return Err(DoubleDimerError::NodeConvention(g.n(), 0, 0, 0));
            }
            min_line.insert(line, rs[..count].iter().sum());
        }
        let future = strip_at
            .iter()
            .map(|&s| min_line.range(s + 1..).map(|(_, &v)| v).sum())
            .collect();
        Ok(Sweep {
            order,
            last_step,
            first_step,
            future,
            strip_at,
        })
    }
}

fn targets(g: &HexGraph, spec: &NodeSpec) -> Vec<u8> {
    let nodes = spec.all();
    (0..g.vertex_count())
        .map(|v| if nodes.contains(&v) { 1 } else { 2 })
        .collect()
}

/// Every configuration on `g` with the given nodes, pairing `sigma` and
/// exponent at most `max_exponent`, by plain depth-first search.
pub fn enumerate_ddc(
    g: &HexGraph,
    spec: &NodeSpec,
    sigma: &Pairing,
    max_exponent: u64,
) -> Result<Vec<DoubleDimerConfig>, DoubleDimerError> {
    let target = targets(g, spec);
    let sweep = Sweep::new(g, &target)?;
    let mut dfs = Dfs {
        g,
        sweep: &sweep,
        target: &target,
        nodes: spec.all(),
        sigma,
        cap: max_exponent,
        deg: vec![0; g.vertex_count()],
        mult: vec![0; g.edge_count()],
        out: Vec::new(),
    };
    dfs.run(0, 0);
    Ok(dfs.out)
}

struct Dfs<'a> {
    g: &'a HexGraph,
    sweep: &'a Sweep,
    target: &'a [u8],
    nodes: BTreeSet<usize>,
    sigma: &'a Pairing,
    cap: u64,
    deg: Vec<u8>,
    mult: Vec<u8>,
    out: Vec<DoubleDimerConfig>,
}

impl Dfs<'_> {
    fn run(&mut self, k: usize, acc: u64) {
        if acc + self.sweep.future.get(k).copied().unwrap_or(0) > self.cap {
            return;
        }
        let Some(&(e, u, v)) = self.sweep.order.get(k) else {
            let cfg = DoubleDimerConfig::new(self.g, self.mult.clone(), self.nodes.clone())
                .expect("search keeps the degree law");
            if cfg.pairing(self.g) == *self.sigma {
                self.out.push(cfg);
            }
            return;
        };
        let r = u64::from(self.g.edge(e).exponent);
        for m in 0..=2u8 {
            if self.deg[u] + m > self.target[u] || self.deg[v] + m > self.target[v] {
                break;
            }
            self.deg[u] += m;
            self.deg[v] += m;
            self.mult[e] = m;
            let done = |w: usize, s: &Self| s.sweep.last_step[w] != k || s.deg[w] == s.target[w];
            if done(u, self) && done(v, self) {
                self.run(k + 1, acc + u64::from(m) * r);
            }
            self.deg[u] -= m;
            self.deg[v] -= m;
            self.mult[e] = 0;
        }
    }
}

/// Truncated polynomial with offset: `sum c[i] q^(lo + i)`.
#[derive(Debug, Clone)]
struct Poly {
    lo: u64,
    c: Vec<u128>,
}

impl Poly {
    fn one() -> Self {
        Poly { lo: 0, c: vec![1] }
    }

    /// `self += factor * q^shift * other`, dropping exponents above `cap`.
    fn add_scaled(&mut self, other: &Poly, shift: u64, factor: u128, cap: u64) {
        for (i, &x) in other.c.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let e = other.lo + i as u64 + shift;
            if e > cap {
                break;
            }
            if self.c.is_empty() {
                self.lo = e;
            }
            if e < self.lo {
                let pad = (self.lo - e) as usize;
                self.c.splice(0..0, std::iter::repeat_n(0, pad));
                self.lo = e;
            }
            let idx = (e - self.lo) as usize;
            if idx >= self.c.len() {
                self.c.resize(idx + 1, 0);
            }
            self.c[idx] += x * factor;
        }
    }

    fn empty() -> Self {
        Poly { lo: 0, c: Vec::new() }
    }
}

/// Per frontier vertex: degree so far, and for a path end the other end of
/// its path. Packed as `deg | mate << 2`, `mate` being 0 (none),
/// `1 + vertex` or `NODE + node index`.
type Slot = u32;
const NODE: u32 = 1 << 20;

fn slot(deg: u8, mate: u32) -> Slot {
    u32::from(deg) | (mate << 2)
}

fn deg_of(s: Slot) -> u8 {
    (s & 3) as u8
}

fn mate_of(s: Slot) -> u32 {
    s >> 2
}

/// `sum 2^loops q^exponent` over configurations with pairing `sigma` and
/// exponent at most `cap`, as absolute exponents.
fn transfer(g: &HexGraph, spec: &NodeSpec, sigma: &Pairing, cap: u64) -> Result<Poly, DoubleDimerError> {
    let target = targets(g, spec);
    let sweep = Sweep::new(g, &target)?;
    let node_list: Vec<usize> = spec.all().into_iter().collect();
    let node_index: HashMap<usize, u32> = node_list.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
    let paired = |k1: u32, k2: u32| sigma.contains(node_list[k1 as usize], node_list[k2 as usize]);
    // pending horizontal edge of a vertex, for the forced part of the bound
    let horizontal_of: Vec<Option<usize>> = (0..g.vertex_count())
        .map(|v| g.incident(v).iter().copied().find(|&e| g.edge(e).dir == EdgeDir::Horizontal))
        .collect();

    let mut frontier: Vec<usize> = Vec::new();
    let mut states: HashMap<Vec<Slot>, Poly> = HashMap::new();
    states.insert(Vec::new(), Poly::one());

    for (k, &(e, u, v)) in sweep.order.iter().enumerate() {
        for w in [u, v] {
            if sweep.first_step[w] == k {
                frontier.push(w);
                states = states
                    .into_iter()
                    .map(|(mut key, p)| {
                        key.push(slot(0, 0));
                        (key, p)
                    })
                    .collect();
            }
        }
        let iu = frontier.iter().position(|&w| w == u).expect("u in frontier");
        let iv = frontier.iter().position(|&w| w == v).expect("v in frontier");
        let r = u64::from(g.edge(e).exponent);
        let leaving: Vec<usize> = [u, v].into_iter().filter(|&w| sweep.last_step[w] == k).collect();
        let strip = sweep.strip_at[k];
        let future = sweep.future[k];

        let mut next: HashMap<Vec<Slot>, Poly> = HashMap::new();
        for (key, poly) in &states {
            for m in 0..=2u8 {
                let Some((mut nk, loops)) = step(key, iu, iv, u, v, m, &target, &frontier, &node_index, &paired)
                else {
                    continue;
                };
                // vertices without pending edges must be saturated
                if leaving.iter().any(|&w| {
                    let i = frontier.iter().position(|&x| x == w).expect("in frontier");
                    deg_of(nk[i]) != target[w]
                }) {
                    continue;
                }
                let mut remaining: Vec<usize> = Vec::new();
                for (i, &w) in frontier.iter().enumerate() {
                    if !leaving.contains(&w) {
                        remaining.push(i);
                    }
                }
                if !leaving.is_empty() {
                    nk = remaining.iter().map(|&i| nk[i]).collect();
                }
                // forced remainder: vertices of earlier strips only wait for
                // their horizontal edge, whose multiplicity is their deficit
                let forced: u64 = remaining
                    .iter()
                    .zip(&nk)
                    .filter(|&(&i, _)| g.tri(frontier[i]).strip() < strip)
                    .map(|(&i, &s)| {
                        let w = frontier[i];
                        let deficit = u64::from(target[w] - deg_of(s));
                        horizontal_of[w].map_or(0, |h| deficit * u64::from(g.edge(h).exponent))
                    })
                    .sum();
                let bound = forced + future;
                if bound > cap {
                    continue;
                }
                let entry = next.entry(nk).or_insert_with(Poly::empty);
                entry.add_scaled(poly, u64::from(m) * r, 1u128 << loops, cap - bound);
            }
        }
        next.retain(|_, p| p.c.iter().any(|&x| x != 0));
        frontier.retain(|w| !leaving.contains(w));
        states = next;
    }
    Ok(states.remove(&Vec::new()).unwrap_or_else(Poly::empty))
}

/// Applies multiplicity `m` to the edge `u`-`v`. Returns the new slots and
/// the number of loops closed, or `None` if the choice is infeasible.
#[allow(clippy::too_many_arguments)]
fn step(
    key: &[Slot],
    iu: usize,
    iv: usize,
    u: usize,
    v: usize,
    m: u8,
    target: &[u8],
    frontier: &[usize],
    node_index: &HashMap<usize, u32>,
    paired: &impl Fn(u32, u32) -> bool,
) -> Option<(Vec<Slot>, u32)> {
    let mut nk = key.to_vec();
    if m == 0 {
        return Some((nk, 0));
    }
    let (du, dv) = (deg_of(key[iu]), deg_of(key[iv]));
    if du + m > target[u] || dv + m > target[v] {
        return None;
    }
    if m == 2 {
        // a doubled edge is a closed piece of its own
        if du != 0 || dv != 0 {
            return None;
        }
        nk[iu] = slot(2, 0);
        nk[iv] = slot(2, 0);
        return Some((nk, 0));
    }
    let index_of = |w: usize| frontier.iter().position(|&x| x == w).expect("mate in frontier");
    // the far end of the path through w after this edge: a node index or a vertex
    let end_beyond = |i: usize, w: usize| -> u32 {
        match node_index.get(&w) {
            Some(&k) => NODE + k,
            None if deg_of(key[i]) == 0 => 1 + w as u32,
            None => mate_of(key[i]),
        }
    };
    let eu = end_beyond(iu, u);
    let ev = end_beyond(iv, v);
    let mut loops = 0;
    nk[iu] = slot(du + 1, 0);
    nk[iv] = slot(dv + 1, 0);
    if eu == 1 + v as u32 && ev == 1 + u as u32 && du == 1 && dv == 1 {
        // u and v were the two ends of one path
        loops = 1;
    } else {
        match (eu >= NODE, ev >= NODE) {
            (true, true) => {
                if !paired(eu - NODE, ev - NODE) {
                    return None;
                }
            }
            _ => {
                // record each open end's new partner
                for (e_self, e_other) in [(eu, ev), (ev, eu)] {
                    if e_self < NODE && e_self != 0 {
                        let w = (e_self - 1) as usize;
                        let i = index_of(w);
                        nk[i] = slot(deg_of(nk[i]), e_other);
                    }
                }
            }
        }
    }
    Some((nk, loops))
}

/// `Z^n` for `(a, b, c)`: `sum 2^loops q^excess` over configurations on
/// `H(n)` with the tripartite pairing, the excess measured from the least
/// exponent.
pub fn zddc_window(a: usize, b: usize, c: usize, n: usize, trunc_order: usize) -> Result<QSeries, DoubleDimerError> {
    zddc_window_shifted(a, b, c, n, trunc_order, 0)
}

/// [`zddc_window`] with every horizontal exponent raised by `shift`.
pub fn zddc_window_shifted(
    a: usize,
    b: usize,
    c: usize,
    n: usize,
    trunc_order: usize,
    shift: u32,
) -> Result<QSeries, DoubleDimerError> {
    let g = HexGraph::build_with_shift(n, shift)?;
    let spec = g.place_nodes(a, b, c)?;
    let sigma = sigma(&g, &spec)?;
    let e0 = minimal_config(&g, a, b, c)?.exponent(&g);
    let mut cap = e0 + trunc_order as u64;
    loop {
        let poly = transfer(&g, &spec, &sigma, cap)?;
        let first = poly.c.iter().position(|&x| x != 0);
        let Some(first) = first else {
            return Err(DoubleDimerError::NodeConvention(n, a, b, c));
        };
        let least = poly.lo + first as u64;
        if least + trunc_order as u64 > cap {
            // the frozen configuration is not the least one; widen
            cap = least + trunc_order as u64;
            continue;
        }
        let coeffs = (0..=trunc_order as u64).map(|i| {
            let e = least + i;
            let idx = e.checked_sub(poly.lo).map(|d| d as usize);
            idx.and_then(|d| poly.c.get(d)).copied().unwrap_or(0)
        });
        return Ok(QSeries::from_coeffs(coeffs.map(num_bigint::BigInt::from), trunc_order));
    }
}

/// Result of the search for a stable window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stabilized {
    pub series: QSeries,
    /// least `n` whose window agrees with the window `n + 1`
    pub n: usize,
    pub windows: Vec<(usize, QSeries)>,
}

/// Windows `n = max(1, a, b, c), ...` until two consecutive ones agree.
pub fn zddc(a: usize, b: usize, c: usize, trunc_order: usize, n_ceiling: usize) -> Result<Stabilized, DoubleDimerError> {
    let mut windows: Vec<(usize, QSeries)> = Vec::new();
    let start = a.max(b).max(c).max(1);
    for n in start..=n_ceiling {
        let z = zddc_window(a, b, c, n, trunc_order)?;
        if let Some((prev_n, prev)) = windows.last() {
            if *prev == z {
                let (prev_n, series) = (*prev_n, prev.clone());
                windows.push((n, z));
                return Ok(Stabilized {
                    series,
                    n: prev_n,
                    windows,
                });
            }
        }
        windows.push((n, z));
    }
    Err(DoubleDimerError::NoStabilization {
        ceiling: n_ceiling,
        partial: windows,
    })
}

/// Color of each node along the boundary, counterclockwise from the
/// northwest corner.
pub fn node_colors(g: &HexGraph, spec: &NodeSpec) -> Vec<(usize, NodeColor)> {
    g.boundary_cycle()
        .into_iter()
        .filter_map(|v| spec.color_of(v).map(|c| (v, c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublebox::enumerate_classes;

    fn s(c: &[i64], n: usize) -> QSeries {
        QSeries::from_coeffs(c.iter().copied(), n)
    }

    #[test]
    fn empty_images_sit_on_placed_nodes() {
        for (params, n) in [([0, 0, 0], 2), ([1, 0, 0], 2), ([0, 0, 1], 3), ([1, 1, 1], 3), ([2, 3, 1], 6), ([2, 1, 3], 6)] {
            let g = HexGraph::build(n).unwrap();
            let [a, b, c] = params;
            let cfg = minimal_config(&g, a, b, c).unwrap();
            let spec = g.place_nodes(a, b, c).unwrap();
            assert_eq!(cfg.nodes(), &spec.all());
            let d = cfg.decompose(&g);
            assert!(d.loops.is_empty());
            assert_eq!(cfg.pairing(&g), sigma(&g, &spec).unwrap(), "{params:?}");
        }
    }

    #[test]
    fn h1_without_nodes() {
        let g = HexGraph::build(1).unwrap();
        let spec = g.place_nodes(0, 0, 0).unwrap();
        let all = enumerate_ddc(&g, &spec, &Pairing::new([]), 100).unwrap();
        assert_eq!(all.len(), 3);
        let loops: Vec<usize> = all.iter().map(|c| c.loops_count(&g)).collect();
        assert_eq!(loops.iter().filter(|&&l| l == 1).count(), 1);
        assert_eq!(zddc_window(0, 0, 0, 1, 3).unwrap(), s(&[1, 2, 1], 3));
    }

    #[test]
    fn window_origin_is_boxed_square() {
        for n in 1..=3 {
            let m = crate::qseries::macmahon_box(n, n, n, 4);
            assert_eq!(zddc_window(0, 0, 0, n, 4).unwrap(), &m * &m, "n = {n}");
        }
    }

    #[test]
    fn transfer_matches_dfs() {
        for (params, n) in [([1, 0, 0], 2), ([1, 1, 0], 2), ([1, 1, 1], 3)] {
            let [a, b, c] = params;
            let g = HexGraph::build(n).unwrap();
            let spec = g.place_nodes(a, b, c).unwrap();
            let sig = sigma(&g, &spec).unwrap();
            let e0 = minimal_config(&g, a, b, c).unwrap().exponent(&g);
            let n_trunc = 3;
            let mut coeffs = vec![0u64; n_trunc + 1];
            for cfg in enumerate_ddc(&g, &spec, &sig, e0 + n_trunc as u64).unwrap() {
                coeffs[(cfg.exponent(&g) - e0) as usize] += 1 << cfg.loops_count(&g);
            }
            assert_eq!(zddc_window(a, b, c, n, n_trunc).unwrap(), QSeries::from_coeffs(coeffs, n_trunc), "{params:?}");
        }
    }

    #[test]
    fn class_images_preserve_weight() {
        let n = 5;
        let g = HexGraph::build(n).unwrap();
        let e0 = minimal_config(&g, 1, 1, 1).unwrap().exponent(&g);
        let spec = g.place_nodes(1, 1, 1).unwrap();
        let sig = sigma(&g, &spec).unwrap();
        for cls in enumerate_classes(1, 1, 1, 3) {
            for rep in &cls.representatives {
                let cfg = dbc_to_ddc(&cls.typing, rep, &g).unwrap();
                assert_eq!(cfg.exponent(&g) - e0, cls.weight as u64);
                assert_eq!(cfg.pairing(&g), sig);
            }
        }
    }
}
