//! Doubly-connected edge list of a line arrangement clipped to a box.
//!
//! Half-edges are allocated in twin pairs, so the edge id of a half-edge is
//! `h / 2` and its twin is `h ^ 1`. Face 0 is the outer face beyond the box;
//! every other face is (the boxed part of) a face of the arrangement.

mod components;
mod depth;
mod svg;

use std::collections::HashMap;

use serde::Serialize;

use crate::geom::{crossing, Line, Point};
use crate::rational::Rational;

pub use components::{components_of, CellSet, Components};
pub use depth::{depth_labels, DepthLabels};
pub use svg::{render_svg, SvgOptions};

pub type VertexId = usize;
pub type HalfEdgeId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;
pub type LineId = usize;

pub const OUTER_FACE: FaceId = 0;

#[derive(Clone, Debug)]
pub struct Vertex {
    pub point: Point,
    /// Some half-edge leaving this vertex.
    pub edge: HalfEdgeId,
    /// Lies on the bounding box rather than being a crossing of input lines.
    pub on_box: bool,
}

#[derive(Clone, Debug)]
pub struct HalfEdge {
    pub target: VertexId,
    pub twin: HalfEdgeId,
    /// Face to the left.
    pub face: FaceId,
    pub next: HalfEdgeId,
    pub prev: HalfEdgeId,
    /// Supporting line; `None` for box sides.
    pub line: Option<LineId>,
}

#[derive(Clone, Debug)]
pub struct Face {
    pub edge: HalfEdgeId,
    pub outer: bool,
    /// Touches the bounding box, i.e. the unclipped face is unbounded.
    pub unbounded: bool,
}

/// A distinct input line with the indices of the input lines equal to it.
#[derive(Clone, Debug)]
pub struct ArrLine {
    pub line: Line,
    pub sources: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundingBox {
    pub xmin: Rational,
    pub xmax: Rational,
    pub ymin: Rational,
    pub ymax: Rational,
}

/// A cell of the arrangement: interior face, line edge, or line crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Face(FaceId),
    Edge(EdgeId),
    Vertex(VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrangementStats {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub component_count: usize,
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    vertices: Vec<Vertex>,
    half_edges: Vec<HalfEdge>,
    faces: Vec<Face>,
    lines: Vec<ArrLine>,
    input: Vec<Line>,
    bbox: BoundingBox,
}

/// Builds the arrangement of `lines`; see [`Arrangement::build`].
pub fn build_arrangement(lines: &[Line]) -> Arrangement {
    Arrangement::build(lines)
}

fn extreme_crossing_x(lines: &[&Line], leftmost: bool) -> Option<Rational> {
    // The extreme crossing is formed by two lines adjacent in the order at
    // x = -inf (resp. +inf).
    let mut sorted: Vec<&Line> = lines.to_vec();
    if leftmost {
        sorted.sort_by(|p, q| q.a.cmp(&p.a).then(p.b.cmp(&q.b)));
    } else {
        sorted.sort_by(|p, q| p.a.cmp(&q.a).then(p.b.cmp(&q.b)));
    }
    let mut best: Option<Rational> = None;
    for w in sorted.windows(2) {
        if let Some(p) = crossing(w[0], w[1]) {
            best = Some(match best {
                None => p.x,
                Some(b) if leftmost => b.min(p.x),
                Some(b) => b.max(p.x),
            });
        }
    }
    best
}

fn bounding_box(lines: &[&Line]) -> BoundingBox {
    let one = Rational::one();
    let zero = Rational::zero();
    let lo = extreme_crossing_x(lines, true).map_or(zero.clone(), |x| x.min(zero.clone()));
    let hi = extreme_crossing_x(lines, false).map_or(zero.clone(), |x| x.max(zero.clone()));
    let xmin = &lo - &one;
    let xmax = &hi + &one;
    let mut ymin = zero.clone();
    let mut ymax = zero;
    for l in lines {
        for x in [&xmin, &xmax] {
            let y = l.eval(x);
            if y < ymin {
                ymin = y.clone();
            }
            if y > ymax {
                ymax = y;
            }
        }
    }
    BoundingBox {
        xmin,
        xmax,
        ymin: &ymin - &one,
        ymax: &ymax + &one,
    }
}

impl Arrangement {
    /// Incremental construction: each line enters through the left box side
    /// and walks its zone face by face until it leaves through the right side.
    /// Coincident input lines are merged into one [`ArrLine`].
    pub fn build(input: &[Line]) -> Arrangement {
        let mut index: HashMap<&Line, usize> = HashMap::new();
        let mut lines: Vec<ArrLine> = Vec::new();
        for (i, l) in input.iter().enumerate() {
            match index.get(l) {
                Some(&id) => lines[id].sources.push(i),
                None => {
                    index.insert(l, lines.len());
                    lines.push(ArrLine {
                        line: l.clone(),
                        sources: vec![i],
                    });
                }
            }
        }
        let distinct: Vec<&Line> = lines.iter().map(|l| &l.line).collect();
        let bbox = bounding_box(&distinct);
        let mut arr = Arrangement {
            vertices: Vec::new(),
            half_edges: Vec::new(),
            faces: Vec::new(),
            lines,
            input: input.to_vec(),
            bbox,
        };
        arr.init_box();
        for id in 0..arr.lines.len() {
            arr.insert_line(id);
        }
        for f in 0..arr.faces.len() {
            let unbounded =
                f == OUTER_FACE || arr.boundary(f).any(|h| arr.half_edges[h].line.is_none());
            arr.faces[f].unbounded = unbounded;
        }
        arr
    }

    fn init_box(&mut self) {
        let b = &self.bbox;
        let corners = [
            Point::new(b.xmin.clone(), b.ymin.clone()),
            Point::new(b.xmax.clone(), b.ymin.clone()),
            Point::new(b.xmax.clone(), b.ymax.clone()),
            Point::new(b.xmin.clone(), b.ymax.clone()),
        ];
        for (i, c) in corners.into_iter().enumerate() {
            self.vertices.push(Vertex {
                point: c,
                edge: 2 * i,
                on_box: true,
            });
        }
        self.faces.push(Face {
            edge: 1,
            outer: true,
            unbounded: true,
        });
        self.faces.push(Face {
            edge: 0,
            outer: false,
            unbounded: true,
        });
        // inner half-edge 2i runs corner i -> i+1 (counter-clockwise), its
        // twin 2i+1 runs back along the outer face
        for i in 0..4 {
            let j = (i + 1) % 4;
            self.half_edges.push(HalfEdge {
                target: j,
                twin: 2 * i + 1,
                face: 1,
                next: 2 * j,
                prev: 2 * ((i + 3) % 4),
                line: None,
            });
            self.half_edges.push(HalfEdge {
                target: i,
                twin: 2 * i,
                face: OUTER_FACE,
                next: 2 * ((i + 3) % 4) + 1,
                prev: 2 * j + 1,
                line: None,
            });
        }
    }

    fn origin_of(&self, h: HalfEdgeId) -> VertexId {
        self.half_edges[h ^ 1].target
    }

    /// Splits the edge of `h` at `p`, which must lie strictly inside it.
    /// Afterwards `h` ends at the new vertex and `next(h)` leaves it.
    fn split_edge(&mut self, h: HalfEdgeId, p: Point) -> VertexId {
        let t = h ^ 1;
        let x = self.half_edges[h].target;
        let hn = self.half_edges[h].next;
        let tp = self.half_edges[t].prev;
        let line = self.half_edges[h].line;
        let v = self.vertices.len();
        let h2 = self.half_edges.len();
        let t2 = h2 + 1;
        self.vertices.push(Vertex {
            point: p,
            edge: h2,
            on_box: line.is_none(),
        });
        // h: u -> v, t: v -> u, h2: v -> x, t2: x -> v
        self.half_edges.push(HalfEdge {
            target: x,
            twin: t2,
            face: self.half_edges[h].face,
            next: hn,
            prev: h,
            line,
        });
        self.half_edges.push(HalfEdge {
            target: v,
            twin: h2,
            face: self.half_edges[t].face,
            next: t,
            prev: tp,
            line,
        });
        self.half_edges[h].target = v;
        self.half_edges[h].next = h2;
        self.half_edges[hn].prev = h2;
        self.half_edges[tp].next = t2;
        self.half_edges[t].prev = t2;
        if self.vertices[x].edge == t {
            self.vertices[x].edge = t2;
        }
        v
    }

    /// Connects the targets of `hv` and `hw`, both on the boundary of the
    /// same face, by a new edge on `line`. Returns the half-edge running from
    /// target(hv) to target(hw); it keeps the old face id.
    fn split_face(&mut self, hv: HalfEdgeId, hw: HalfEdgeId, line: LineId) -> HalfEdgeId {
        let f = self.half_edges[hv].face;
        let v = self.half_edges[hv].target;
        let w = self.half_edges[hw].target;
        let nv = self.half_edges[hv].next;
        let nw = self.half_edges[hw].next;
        let a = self.half_edges.len();
        let b = a + 1;
        let g = self.faces.len();
        self.half_edges.push(HalfEdge {
            target: w,
            twin: b,
            face: f,
            next: nw,
            prev: hv,
            line: Some(line),
        });
        self.half_edges.push(HalfEdge {
            target: v,
            twin: a,
            face: g,
            next: nv,
            prev: hw,
            line: Some(line),
        });
        self.half_edges[hv].next = a;
        self.half_edges[nw].prev = a;
        self.half_edges[hw].next = b;
        self.half_edges[nv].prev = b;
        self.faces[f].edge = a;
        self.faces.push(Face {
            edge: b,
            outer: false,
            unbounded: false,
        });
        let mut h = nv;
        while h != b {
            self.half_edges[h].face = g;
            h = self.half_edges[h].next;
        }
        a
    }

    fn crossing_on_edge(&self, h: HalfEdgeId, l: &Line) -> Point {
        match self.half_edges[h].line {
            Some(id) => crossing(l, &self.lines[id].line).expect("edge line crosses"),
            None => {
                let o = &self.vertices[self.origin_of(h)].point;
                let t = &self.vertices[self.half_edges[h].target].point;
                if o.x == t.x {
                    l.point_at(&o.x)
                } else {
                    Point::new(
                        l.x_at(&o.y).expect("horizontal line inside box"),
                        o.y.clone(),
                    )
                }
            }
        }
    }

    fn insert_line(&mut self, id: LineId) {
        let l = self.lines[id].line.clone();
        let entry = l.point_at(&self.bbox.xmin);
        // locate the left box side edge on the outer face
        let mut h = self.faces[OUTER_FACE].edge;
        loop {
            let o = &self.vertices[self.origin_of(h)].point;
            let t = &self.vertices[self.half_edges[h].target].point;
            if o.x == self.bbox.xmin && t.x == self.bbox.xmin && o.y < entry.y && entry.y < t.y {
                break;
            }
            h = self.half_edges[h].next;
        }
        self.split_edge(h, entry);
        // incoming half-edge at the entry vertex on the inner side
        let mut hv = self.half_edges[self.half_edges[h].next].twin;
        loop {
            let v = self.half_edges[hv].target;
            let (hw, split_at) = self.find_exit(hv, &l);
            let crossed = split_at.is_some();
            if let Some(p) = split_at {
                self.split_edge(hw, p);
            }
            let w = self.half_edges[hw].target;
            debug_assert_ne!(v, w);
            // across a split edge the next face is the twin's
            let across = self.half_edges[hw].next ^ 1;
            self.split_face(hv, hw, id);
            if self.vertices[w].point.x == self.bbox.xmax {
                return;
            }
            hv = if crossed {
                across
            } else {
                self.sector_incoming(w, &l)
            };
        }
    }

    /// Walks the face left of `hv` from its target `v` and returns the
    /// boundary half-edge where `l` leaves the face: either ending at an
    /// existing vertex on `l`, or crossed in its interior at the returned
    /// point.
    fn find_exit(&self, hv: HalfEdgeId, l: &Line) -> (HalfEdgeId, Option<Point>) {
        let v = self.half_edges[hv].target;
        let mut h = self.half_edges[hv].next;
        let mut s_o = 0;
        loop {
            let t = self.half_edges[h].target;
            let s_t = l.side(&self.vertices[t].point);
            if s_o * s_t < 0 {
                return (h, Some(self.crossing_on_edge(h, l)));
            }
            if s_t == 0 && t != v {
                return (h, None);
            }
            s_o = s_t;
            h = self.half_edges[h].next;
            assert_ne!(h, hv, "line does not leave the face");
        }
    }

    /// At an interior vertex `w` on `l`, returns the half-edge entering `w`
    /// on the boundary of the face that `l` enters when continuing rightward.
    fn sector_incoming(&self, w: VertexId, l: &Line) -> HalfEdgeId {
        let d = (Rational::one(), l.a.clone());
        let dir = |h: HalfEdgeId| {
            let o = &self.vertices[w].point;
            let t = &self.vertices[self.half_edges[h].target].point;
            (&t.x - &o.x, &t.y - &o.y)
        };
        let cross = |p: &(Rational, Rational), q: &(Rational, Rational)| {
            (&p.0 * &q.1).cmp(&(&p.1 * &q.0)) as i32
        };
        let start = self.vertices[w].edge;
        let mut e = start;
        loop {
            let prev = self.half_edges[e].prev;
            let e_next = prev ^ 1;
            if cross(&dir(e), &d) > 0 && cross(&d, &dir(e_next)) > 0 {
                return prev;
            }
            e = e_next;
            assert_ne!(e, start, "no sector contains the line direction");
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn half_edges(&self) -> &[HalfEdge] {
        &self.half_edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn lines(&self) -> &[ArrLine] {
        &self.lines
    }

    /// The lines the arrangement was built from, in input order.
    pub fn input_lines(&self) -> &[Line] {
        &self.input
    }

    pub fn bbox(&self) -> &BoundingBox {
        &self.bbox
    }

    pub fn num_edges(&self) -> usize {
        self.half_edges.len() / 2
    }

    pub fn origin(&self, h: HalfEdgeId) -> VertexId {
        self.origin_of(h)
    }

    /// Half-edges of the boundary cycle of `f`, starting at its anchor.
    pub fn boundary(&self, f: FaceId) -> impl Iterator<Item = HalfEdgeId> + '_ {
        let start = self.faces[f].edge;
        let mut h = Some(start);
        std::iter::from_fn(move || {
            let cur = h?;
            let nx = self.half_edges[cur].next;
            h = (nx != start).then_some(nx);
            Some(cur)
        })
    }

    /// Half-edges leaving `v`, in counter-clockwise order.
    pub fn outgoing(&self, v: VertexId) -> impl Iterator<Item = HalfEdgeId> + '_ {
        let start = self.vertices[v].edge;
        let mut h = Some(start);
        std::iter::from_fn(move || {
            let cur = h?;
            let nx = self.half_edges[self.half_edges[cur].prev].twin;
            h = (nx != start).then_some(nx);
            Some(cur)
        })
    }

    pub fn edge_line(&self, e: EdgeId) -> Option<LineId> {
        self.half_edges[2 * e].line
    }

    pub fn edge_endpoints(&self, e: EdgeId) -> (&Point, &Point) {
        (
            &self.vertices[self.half_edges[2 * e + 1].target].point,
            &self.vertices[self.half_edges[2 * e].target].point,
        )
    }

    /// Point strictly inside face `f`: centroid of the triangle spanned by
    /// the endpoints of the lowest-id boundary half-edge and the first
    /// boundary vertex not collinear with them.
    pub fn face_sample(&self, f: FaceId) -> Point {
        assert!(f != OUTER_FACE, "the outer face has no sample point");
        let h0 = self.boundary(f).min().expect("faces have boundaries");
        let a = &self.vertices[self.origin_of(h0)].point;
        let b = &self.vertices[self.half_edges[h0].target].point;
        let mut h = self.half_edges[h0].next;
        loop {
            let c = &self.vertices[self.half_edges[h].target].point;
            if crate::geom::orientation(a, b, c) != 0 {
                let three = Rational::from_integer(3);
                return Point {
                    x: &(&(&a.x + &b.x) + &c.x) / &three,
                    y: &(&(&a.y + &b.y) + &c.y) / &three,
                };
            }
            h = self.half_edges[h].next;
        }
    }

    pub fn edge_midpoint(&self, e: EdgeId) -> Point {
        let (p, q) = self.edge_endpoints(e);
        p.midpoint(q)
    }

    /// Whether the cell is part of the arrangement (not the outer face, a box
    /// side, or a vertex on the box).
    pub fn is_cell(&self, c: Cell) -> bool {
        match c {
            Cell::Face(f) => f != OUTER_FACE && f < self.faces.len(),
            Cell::Edge(e) => e < self.num_edges() && self.edge_line(e).is_some(),
            Cell::Vertex(v) => v < self.vertices.len() && !self.vertices[v].on_box,
        }
    }

    /// All cells: faces, then edges, then vertices, each by increasing id.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let faces = (1..self.faces.len()).map(Cell::Face);
        let edges = (0..self.num_edges())
            .filter(|&e| self.edge_line(e).is_some())
            .map(Cell::Edge);
        let verts = (0..self.vertices.len())
            .filter(|&v| !self.vertices[v].on_box)
            .map(Cell::Vertex);
        faces.chain(edges).chain(verts)
    }

    /// A representative point in the relative interior of the cell.
    pub fn cell_point(&self, c: Cell) -> Point {
        match c {
            Cell::Face(f) => self.face_sample(f),
            Cell::Edge(e) => self.edge_midpoint(e),
            Cell::Vertex(v) => self.vertices[v].point.clone(),
        }
    }

    /// Lines through vertex `v`.
    pub fn vertex_lines(&self, v: VertexId) -> Vec<LineId> {
        let mut ids: Vec<LineId> = self
            .outgoing(v)
            .filter_map(|h| self.half_edges[h].line)
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// Cell counts of the line arrangement; the box and the outer face are
    /// not counted.
    pub fn stats(&self, component_count: usize) -> ArrangementStats {
        let (mut vertices, mut edges, mut faces) = (0, 0, 0);
        for c in self.cells() {
            match c {
                Cell::Face(_) => faces += 1,
                Cell::Edge(_) => edges += 1,
                Cell::Vertex(_) => vertices += 1,
            }
        }
        ArrangementStats {
            vertices,
            edges,
            faces,
            component_count,
        }
    }

    /// Full structural audit: twin and next/prev consistency, face labels,
    /// vertex anchors, Euler's relation and convexity of interior faces.
    pub fn audit(&self) -> Result<(), String> {
        let n = self.half_edges.len();
        for (h, he) in self.half_edges.iter().enumerate() {
            if he.twin != h ^ 1 || self.half_edges[he.twin].twin != h {
                return Err(format!("twin mismatch at half-edge {h}"));
            }
            if he.next >= n || self.half_edges[he.next].prev != h {
                return Err(format!("next/prev mismatch at half-edge {h}"));
            }
            if self.half_edges[he.next].face != he.face {
                return Err(format!("face label changes along cycle at half-edge {h}"));
            }
            if self.origin_of(he.next) != he.target {
                return Err(format!("cycle is not connected at half-edge {h}"));
            }
            if he.line != self.half_edges[he.twin].line {
                return Err(format!("twins disagree on line at half-edge {h}"));
            }
        }
        let mut seen = vec![false; n];
        for f in 0..self.faces.len() {
            for h in self.boundary(f) {
                if self.half_edges[h].face != f || seen[h] {
                    return Err(format!("face {f} boundary is inconsistent"));
                }
                seen[h] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err("some half-edge lies on no face cycle".into());
        }
        for (v, vx) in self.vertices.iter().enumerate() {
            if self.origin_of(vx.edge) != v {
                return Err(format!("vertex {v} anchor does not leave it"));
            }
        }
        let euler = self.vertices.len() as i64 - self.num_edges() as i64 + self.faces.len() as i64;
        if euler != 2 {
            return Err(format!("Euler characteristic is {euler}"));
        }
        for f in 1..self.faces.len() {
            let pts: Vec<&Point> = self
                .boundary(f)
                .map(|h| &self.vertices[self.half_edges[h].target].point)
                .collect();
            for i in 0..pts.len() {
                let (a, b, c) = (pts[i], pts[(i + 1) % pts.len()], pts[(i + 2) % pts.len()]);
                if crate::geom::orientation(a, b, c) < 0 {
                    return Err(format!("face {f} is not convex"));
                }
            }
        }
        Ok(())
    }
}
