use std::collections::VecDeque;

use super::{Arrangement, FaceId, LineId, OUTER_FACE};
use crate::error::{Error, Result};
use crate::geom::{DoubleWedge, Point};

/// Per-cell counts of containing wedges, indexed by face, edge and vertex
/// id. Box sides, box vertices and the outer face carry 0.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DepthLabels {
    pub face_depth: Vec<usize>,
    pub edge_depth: Vec<usize>,
    pub vertex_depth: Vec<usize>,
    pub face_bowtie: Vec<usize>,
    pub face_hourglass: Vec<usize>,
    pub edge_bowtie: Vec<usize>,
    pub edge_hourglass: Vec<usize>,
    pub vertex_bowtie: Vec<usize>,
    pub vertex_hourglass: Vec<usize>,
}

/// `(bowtie count, hourglass count)` of the given wedges containing `p`.
fn count<'a>(wedges: impl Iterator<Item = &'a DoubleWedge>, p: &Point) -> (usize, usize) {
    let mut c = (0, 0);
    for d in wedges {
        if d.contains(p) {
            if d.is_bowtie() {
                c.0 += 1;
            } else {
                c.1 += 1;
            }
        }
    }
    c
}

fn owners<'a>(
    arr: &'a Arrangement,
    wedges: &'a [DoubleWedge],
    lines: &'a [LineId],
) -> impl Iterator<Item = &'a DoubleWedge> + 'a {
    let mut ws: Vec<usize> = lines
        .iter()
        .flat_map(|&l| arr.lines()[l].sources.iter().map(|s| s / 2))
        .collect();
    ws.sort_unstable();
    ws.dedup();
    ws.into_iter().map(move |w| &wedges[w])
}

/// Depth of every cell of `arr` with respect to `wedges`, whose bounding
/// lines `l1, l2, l1, l2, ...` must be exactly the lines `arr` was built from.
///
/// Face depths: one full count at a seed face, then breadth-first across
/// line edges, re-evaluating only the wedges that own the crossed line.
/// Edge and vertex depths are derived from an incident face the same way.
pub fn depth_labels(arr: &Arrangement, wedges: &[DoubleWedge]) -> Result<DepthLabels> {
    let expected = wedges.iter().flat_map(|d| [d.l1(), d.l2()]);
    if arr.input_lines().len() != 2 * wedges.len()
        || !arr.input_lines().iter().zip(expected).all(|(a, b)| a == b)
    {
        return Err(Error::ArrangementMismatch);
    }
    let nf = arr.faces().len();
    let ne = arr.num_edges();
    let nv = arr.vertices().len();
    let samples: Vec<Option<Point>> = (0..nf)
        .map(|f| (f != OUTER_FACE).then(|| arr.face_sample(f)))
        .collect();
    let sample = |f: FaceId| samples[f].as_ref().expect("interior face");

    let mut fb = vec![0usize; nf];
    let mut fh = vec![0usize; nf];
    let mut seen = vec![false; nf];
    let seed: FaceId = 1;
    (fb[seed], fh[seed]) = count(wedges.iter(), sample(seed));
    seen[seed] = true;
    let mut queue = VecDeque::from([seed]);
    while let Some(f) = queue.pop_front() {
        for h in arr.boundary(f) {
            let Some(l) = arr.half_edges()[h].line else {
                continue;
            };
            let g = arr.half_edges()[h ^ 1].face;
            if seen[g] {
                continue;
            }
            let (ob, oh) = count(owners(arr, wedges, &[l]), sample(f));
            let (nb, nh) = count(owners(arr, wedges, &[l]), sample(g));
            fb[g] = fb[f] - ob + nb;
            fh[g] = fh[f] - oh + nh;
            seen[g] = true;
            queue.push_back(g);
        }
    }

    let mut eb = vec![0usize; ne];
    let mut eh = vec![0usize; ne];
    for e in 0..ne {
        let Some(l) = arr.edge_line(e) else { continue };
        let f = arr.half_edges()[2 * e].face;
        let (ob, oh) = count(owners(arr, wedges, &[l]), sample(f));
        let (nb, nh) = count(owners(arr, wedges, &[l]), &arr.edge_midpoint(e));
        eb[e] = fb[f] - ob + nb;
        eh[e] = fh[f] - oh + nh;
    }

    let mut vb = vec![0usize; nv];
    let mut vh = vec![0usize; nv];
    for v in 0..nv {
        if arr.vertices()[v].on_box {
            continue;
        }
        let lines = arr.vertex_lines(v);
        let f = arr.half_edges()[arr.vertices()[v].edge].face;
        let (ob, oh) = count(owners(arr, wedges, &lines), sample(f));
        let (nb, nh) = count(owners(arr, wedges, &lines), &arr.vertices()[v].point);
        vb[v] = fb[f] - ob + nb;
        vh[v] = fh[f] - oh + nh;
    }

    let sum = |a: &[usize], b: &[usize]| a.iter().zip(b).map(|(x, y)| x + y).collect();
    Ok(DepthLabels {
        face_depth: sum(&fb, &fh),
        edge_depth: sum(&eb, &eh),
        vertex_depth: sum(&vb, &vh),
        face_bowtie: fb,
        face_hourglass: fh,
        edge_bowtie: eb,
        edge_hourglass: eh,
        vertex_bowtie: vb,
        vertex_hourglass: vh,
    })
}

impl DepthLabels {
    /// `(bowtie, hourglass)` depth of a cell.
    pub fn split(&self, c: super::Cell) -> (usize, usize) {
        match c {
            super::Cell::Face(f) => (self.face_bowtie[f], self.face_hourglass[f]),
            super::Cell::Edge(e) => (self.edge_bowtie[e], self.edge_hourglass[e]),
            super::Cell::Vertex(v) => (self.vertex_bowtie[v], self.vertex_hourglass[v]),
        }
    }

    pub fn depth(&self, c: super::Cell) -> usize {
        let (b, h) = self.split(c);
        b + h
    }
}
