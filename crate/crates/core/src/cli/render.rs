//! Static SVG pictures of plane partitions, double-box classes and
//! double-dimer configurations.

use std::fmt::Write;

use crate::doublebox::ClassDump;
use crate::doubledimer::{ConfigDump, DoubleDimerError};
use crate::hexlattice::{plane_point, EdgeDir, HexGraph};
use crate::planepart::{to_matching, Cell, PlanePartition, PlanePartitionError};

const SCALE: f64 = 40.0;

/// Accumulates shapes and the bounding box they need.
struct Svg {
    body: String,
    min: (f64, f64),
    max: (f64, f64),
}

impl Svg {
    fn new() -> Self {
        Svg {
            body: String::new(),
            min: (f64::INFINITY, f64::INFINITY),
            max: (f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    /// Plane point to SVG coordinates (y pointing down).
    fn at(&mut self, (x, y): (f64, f64)) -> (f64, f64) {
        let p = (x * SCALE, -y * SCALE);
        self.min = (self.min.0.min(p.0), self.min.1.min(p.1));
        self.max = (self.max.0.max(p.0), self.max.1.max(p.1));
        p
    }

    fn polygon(&mut self, class: &str, pts: &[(f64, f64)]) {
        let coords: Vec<String> = pts
            .iter()
            .map(|&p| {
                let (x, y) = self.at(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(self.body, r#"<polygon class="{class}" points="{}"/>"#, coords.join(" "));
    }

    fn line(&mut self, class: &str, a: (f64, f64), b: (f64, f64)) {
        let (x1, y1) = self.at(a);
        let (x2, y2) = self.at(b);
        let _ = writeln!(
            self.body,
            r#"<line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
        );
    }

    fn circle(&mut self, class: &str, c: (f64, f64), r: f64) {
        let (x, y) = self.at(c);
        let _ = writeln!(self.body, r#"<circle class="{class}" cx="{x:.2}" cy="{y:.2}" r="{r:.2}"/>"#);
    }

    fn raw(&mut self, s: &str) {
        self.body.push_str(s);
    }

    fn finish(self, title: &str, style: &str) -> String {
        let pad = SCALE / 2.0;
        let (x0, y0) = (self.min.0 - pad, self.min.1 - pad);
        let (w, h) = (self.max.0 - self.min.0 + 2.0 * pad, self.max.1 - self.min.1 + 2.0 * pad);
        format!(
            concat!(
                r#"<?xml version="1.0" encoding="UTF-8"?>"#,
                "\n",
                r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.2} {:.2} {:.2} {:.2}" width="{:.0}" height="{:.0}">"#,
                "\n<title>{}</title>\n<style>{}</style>\n{}</svg>\n"
            ),
            x0, y0, w, h, w, h, title, style, self.body
        )
    }
}

fn lattice(x: i32, y: i32) -> (f64, f64) {
    plane_point((x, y))
}

/// The four corners of the lozenge of an edge, in order around it.
fn lozenge_corners(g: &HexGraph, e: usize) -> Vec<(f64, f64)> {
    let edge = g.edge(e);
    let mut pts: Vec<(i32, i32)> = g.tri(edge.east).corners().to_vec();
    for p in g.tri(edge.west).corners() {
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let mut pts: Vec<(f64, f64)> = pts.into_iter().map(plane_point).collect();
    let cx = pts.iter().map(|p| p.0).sum::<f64>() / pts.len() as f64;
    let cy = pts.iter().map(|p| p.1).sum::<f64>() / pts.len() as f64;
    pts.sort_by(|a, b| (a.1 - cy).atan2(a.0 - cx).total_cmp(&(b.1 - cy).atan2(b.0 - cx)));
    pts
}

fn face_class(dir: EdgeDir) -> &'static str {
    match dir {
        EdgeDir::Horizontal => "lozenge z",
        EdgeDir::Ne => "lozenge x",
        EdgeDir::Nw => "lozenge y",
    }
}

/// Lozenge tiling of the plane partition in `H(n)`. The partition is moved
/// to the origin first.
pub fn render_pp(pp: &PlanePartition, n: usize) -> Result<String, PlanePartitionError> {
    let g = HexGraph::build(n.max(1)).map_err(|_| PlanePartitionError::DoesNotFit(n))?;
    let pp = pp.rebased([0, 0, 0]);
    let m = to_matching(&pp, &g)?;
    let mut svg = Svg::new();
    for &e in m.edges() {
        let pts = lozenge_corners(&g, e);
        svg.polygon(face_class(g.edge(e).dir), &pts);
    }
    Ok(svg.finish(
        &format!("plane partition of volume {} in H({n})", pp.volume()),
        ".lozenge{stroke:#333;stroke-width:1}.z{fill:#f4e3b5}.x{fill:#9fb7d9}.y{fill:#cfd9a0}",
    ))
}

/// Visible faces of a unit cube viewed along `(1,1,1)`.
fn cube_faces([i, j, k]: Cell) -> [(&'static str, [(f64, f64); 4]); 3] {
    let p = |a: i32, b: i32, c: i32| lattice(a - c, b - c);
    [
        ("top", [p(i, j, k + 1), p(i + 1, j, k + 1), p(i + 1, j + 1, k + 1), p(i, j + 1, k + 1)]),
        ("side-x", [p(i + 1, j, k), p(i + 1, j + 1, k), p(i + 1, j + 1, k + 1), p(i + 1, j, k + 1)]),
        ("side-y", [p(i, j + 1, k), p(i + 1, j + 1, k), p(i + 1, j + 1, k + 1), p(i, j + 1, k + 1)]),
    ]
}

/// Box diagram of a class: type-I boxes colored by partition, type-II light,
/// type-III dark, moveable boxes outlined.
pub fn render_dbc(cls: &ClassDump) -> String {
    let mut boxes: Vec<(Cell, String)> = Vec::new();
    for (m, set) in cls.type1.iter().enumerate() {
        boxes.extend(set.iter().map(|&b| (b, format!("box type-1 eta-{}", m + 1))));
    }
    boxes.extend(cls.type2.iter().map(|&b| {
        let mv = if cls.moveable.contains(&b) { " moveable" } else { "" };
        (b, format!("box type-2{mv}"))
    }));
    boxes.extend(cls.type3.iter().map(|&b| (b, "box type-3".to_string())));
    // far boxes first
    boxes.sort_by_key(|&(b, _)| (b[0] + b[1] + b[2], b));
    let mut svg = Svg::new();
    // dashed outline of the floor at the room corner
    let [a, b, c] = cls.params.map(|v| v as i32);
    svg.polygon("floor", &[lattice(a, b), lattice(a + 3, b), lattice(a + 3, b + 3), lattice(a, b + 3)]);
    for (cell, class) in &boxes {
        let _ = writeln!(svg.body, r#"<g class="{class}" data-cell="{},{},{}">"#, cell[0], cell[1], cell[2]);
        for (face, pts) in cube_faces(*cell) {
            svg.polygon(face, &pts);
        }
        svg.raw("</g>\n");
    }
    svg.finish(
        &format!(
            "double-box class at ({a},{b},{c}), weight {}, chi {}",
            cls.weight, cls.chi
        ),
        concat!(
            ".floor{fill:none;stroke:#bbb;stroke-dasharray:4 3}",
            ".box polygon{stroke:#222;stroke-width:1}",
            ".type-1 polygon{fill:#cfe3f7}.eta-2 polygon{fill:#d7f0cf}.eta-3 polygon{fill:#f7dccf}",
            ".type-2 polygon{fill:#c8c8c8}.type-3 polygon{fill:#555}",
            ".moveable polygon{stroke:#d11;stroke-width:3}",
            ".side-x{filter:brightness(0.85)}.side-y{filter:brightness(0.7)}"
        ),
    )
}

/// `H(n)` with the configuration drawn on the dual edges: doubled edges,
/// loops and paths, and the nodes in their colors.
pub fn render_ddc(dump: &ConfigDump) -> Result<String, DoubleDimerError> {
    let (g, spec, cfg) = dump.config()?;
    let d = cfg.decompose(&g);
    let mut svg = Svg::new();
    for t in g.tris() {
        let pts: Vec<(f64, f64)> = t.corners().iter().map(|&p| plane_point(p)).collect();
        svg.polygon("tri", &pts);
    }
    let center = |v: usize| g.tri(v).centroid();
    for &e in &d.doubled {
        let edge = g.edge(e);
        svg.line("edge doubled", center(edge.east), center(edge.west));
    }
    let draw_walk = |svg: &mut Svg, class: &str, seq: &[usize], closed: bool| {
        let mut pairs: Vec<(usize, usize)> = seq.windows(2).map(|w| (w[0], w[1])).collect();
        if closed {
            pairs.push((*seq.last().expect("loops are nonempty"), seq[0]));
        }
        for (u, v) in pairs {
            svg.line(class, center(u), center(v));
        }
    };
    for l in &d.loops {
        draw_walk(&mut svg, "edge loop", l, true);
    }
    for p in &d.paths {
        draw_walk(&mut svg, "edge path", p, false);
    }
    let colored: [(&str, &Vec<usize>); 3] = [("red", &spec.red), ("green", &spec.green), ("blue", &spec.blue)];
    for (name, list) in colored {
        for &v in list {
            svg.circle(&format!("node {name}"), center(v), 6.0);
        }
    }
    let [a, b, c] = dump.params;
    Ok(svg.finish(
        &format!(
            "double-dimer configuration on H({}) for ({a},{b},{c}): {} loops, excess {}",
            dump.n,
            d.loops.len(),
            dump.excess
        ),
        concat!(
            ".tri{fill:none;stroke:#ddd;stroke-width:1}",
            ".edge{stroke-linecap:round}.doubled{stroke:#888;stroke-width:7}",
            ".loop{stroke:#7a3fb0;stroke-width:3}.path{stroke:#111;stroke-width:3}",
            ".node{stroke:#000;stroke-width:1}.red{fill:#e22}.green{fill:#2a2}.blue{fill:#23e}"
        ),
    ))
}

/// Smallest `n` whose box holds the partition once moved to the origin.
pub fn fitting_window(pp: &PlanePartition) -> usize {
    pp.relative_boxes()
        .flat_map(|r| r.into_iter())
        .max()
        .map_or(1, |m| m as usize + 1)
}
