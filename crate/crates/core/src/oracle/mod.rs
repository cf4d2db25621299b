//! Brute-force ground truth: sample every cell of a line arrangement,
//! test membership point by point, and search piercing lines exhaustively.
//!
//! Nothing here uses the DCEL or the sweep code, so the results can be
//! compared against the fast algorithms.

mod piercing;
mod report;

use std::collections::HashSet;

use serde::Serialize;

use crate::algorithms::{Algorithm, IntersectionResult};
use crate::arrangement::Arrangement;
use crate::geom::{DoubleWedge, Line, Point};
use crate::rational::Rational;

pub use piercing::{
    element_pool, open_question_experiment, pierces, piercing_with_lines, triple_pierceable_all,
    ExperimentSummary, Piercing, PiercingStats, TripleCheck,
};
pub use report::{Outcome, VerifierReport};

/// Sample points hitting every face, edge and vertex of an arrangement of
/// non-vertical lines, plus x-values for vertical primal lines.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CandidatePool {
    pub points: Vec<Point>,
    pub vertical_candidates: Vec<Rational>,
}

impl CandidatePool {
    /// Pool for the arrangement of `lines`. Along each line the breakpoints
    /// are its crossings with the other lines plus every x in `split_xs`;
    /// the pool takes the breakpoints, one x strictly between consecutive
    /// ones, an x beyond each end, and points just above and below the line
    /// at each of those x. The vertical offset stays below the gap to the
    /// nearest other line at that x, so it never leaves the face. Chosen
    /// coordinates are the simplest rationals in their intervals.
    ///
    /// No sample other than the breakpoints themselves has an x in
    /// `split_xs`.
    pub fn for_lines(lines: &[Line], split_xs: &[Rational]) -> CandidatePool {
        let lines = distinct_lines(lines);
        let mut points = Vec::new();
        if lines.is_empty() {
            points.push(Point::new(0, 0));
        }
        let one = Rational::one();
        for (i, l) in lines.iter().enumerate() {
            let mut xs: Vec<Rational> = lines
                .iter()
                .enumerate()
                .filter(|&(j, m)| j != i && m.a != l.a)
                .map(|(_, m)| &(&m.b - &l.b) / &(&l.a - &m.a))
                .chain(split_xs.iter().cloned())
                .collect();
            xs.sort();
            xs.dedup();
            let mut open_xs = Vec::with_capacity(xs.len() + 1);
            match (xs.first(), xs.last()) {
                (Some(lo), Some(hi)) => {
                    open_xs.push(&lo.floor_rational() - &one);
                    open_xs.extend(
                        xs.windows(2)
                            .map(|w| Rational::simplest_between(&w[0], &w[1])),
                    );
                    open_xs.push(&hi.floor_rational() + &one);
                }
                _ => open_xs.push(Rational::zero()),
            }
            points.extend(xs.iter().map(|x| l.point_at(x)));
            for x in open_xs {
                let y = l.eval(&x);
                let gap = lines
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, m)| (&m.eval(&x) - &y).abs())
                    .min()
                    .unwrap_or(one.clone());
                points.push(Point::new(
                    x.clone(),
                    Rational::simplest_between(&y, &(&y + &gap)),
                ));
                points.push(Point::new(
                    x.clone(),
                    Rational::simplest_between(&(&y - &gap), &y),
                ));
                points.push(Point::new(x, y));
            }
        }
        points.sort();
        points.dedup();
        CandidatePool {
            points,
            vertical_candidates: Vec::new(),
        }
    }

    /// Pool for the bounding lines of `wedges`.
    pub fn for_wedges(wedges: &[DoubleWedge]) -> CandidatePool {
        let lines: Vec<Line> = wedges
            .iter()
            .flat_map(|d| [d.l1().clone(), d.l2().clone()])
            .collect();
        CandidatePool::for_lines(&lines, &[])
    }
}

/// Sorted, deduplicated lines.
pub(crate) fn distinct_lines(lines: &[Line]) -> Vec<Line> {
    let mut out = lines.to_vec();
    out.sort();
    out.dedup();
    out
}

/// Position of `p` relative to each line: `-1` below, `0` on, `1` above.
/// Two points have equal sign vectors iff they lie in the same cell.
pub fn sign_vector(lines: &[Line], p: &Point) -> Vec<i8> {
    lines.iter().map(|l| l.side(p) as i8).collect()
}

/// Whether cell `a` lies in the closure of cell `b`.
fn in_closure(a: &[i8], b: &[i8]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || x == y)
}

/// Answer of [`oracle_intersect`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub nonempty: bool,
    /// First pool point, in sorted order, inside every wedge.
    pub witness: Option<Point>,
    pub component_count: usize,
    /// One pool point per component.
    pub witnesses: Vec<Point>,
}

/// Common intersection of `wedges` by testing every pool point. Cells are
/// identified by sign vectors; two selected cells are joined when one lies
/// in the closure of the other. Roughly cubic in the number of wedges.
pub fn oracle_intersect(wedges: &[DoubleWedge]) -> OracleResult {
    let pool = CandidatePool::for_wedges(wedges);
    let lines = distinct_lines(
        &wedges
            .iter()
            .flat_map(|d| [d.l1().clone(), d.l2().clone()])
            .collect::<Vec<_>>(),
    );
    let mut cells: Vec<(Vec<i8>, Point)> = Vec::new();
    let mut seen: HashSet<Vec<i8>> = HashSet::new();
    for p in &pool.points {
        if !wedges.iter().all(|d| d.contains(p)) {
            continue;
        }
        let sv = sign_vector(&lines, p);
        if seen.insert(sv.clone()) {
            cells.push((sv, p.clone()));
        }
    }
    let dim = |sv: &[i8]| sv.iter().filter(|&&s| s == 0).count();
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            let (a, b) = (&cells[i].0, &cells[j].0);
            let (da, db) = (dim(a), dim(b));
            let touch = (da > db && in_closure(a, b)) || (db > da && in_closure(b, a));
            if touch {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut first_of_root: Vec<Option<Point>> = vec![None; cells.len()];
    let mut order = Vec::new();
    for (i, (_, p)) in cells.iter().enumerate() {
        let r = find(&mut parent, i);
        if first_of_root[r].is_none() {
            first_of_root[r] = Some(p.clone());
            order.push(r);
        }
    }
    let mut witnesses: Vec<Point> = order
        .into_iter()
        .filter_map(|r| first_of_root[r].clone())
        .collect();
    witnesses.sort();
    let witness = witnesses.first().cloned();
    OracleResult {
        nonempty: witness.is_some(),
        witness,
        component_count: witnesses.len(),
        witnesses,
    }
}

/// [`oracle_intersect`] in the common result shape.
pub fn oracle_result(wedges: &[DoubleWedge]) -> IntersectionResult {
    let r = oracle_intersect(wedges);
    IntersectionResult {
        algorithm: Algorithm::Oracle,
        component_count: r.component_count,
        witnesses: r.witnesses,
        cells: None,
        convex_regions: None,
    }
}

/// Checks that the pool samples exactly the cells of `arr`: every DCEL cell
/// has a pool point with the same sign vector and vice versa. Returns a
/// description of the first mismatch.
pub fn audit_pool(arr: &Arrangement, pool: &CandidatePool) -> Result<(), String> {
    let lines: Vec<Line> = arr.lines().iter().map(|l| l.line.clone()).collect();
    let pool_cells: HashSet<Vec<i8>> = pool.points.iter().map(|p| sign_vector(&lines, p)).collect();
    let mut dcel_cells = HashSet::new();
    for c in arr.cells() {
        let sv = sign_vector(&lines, &arr.cell_point(c));
        if !pool_cells.contains(&sv) {
            return Err(format!("cell {c:?} has no pool point"));
        }
        dcel_cells.insert(sv);
    }
    match pool_cells.difference(&dcel_cells).next() {
        Some(sv) => Err(format!("pool cell {sv:?} missing from the arrangement")),
        None => Ok(()),
    }
}
