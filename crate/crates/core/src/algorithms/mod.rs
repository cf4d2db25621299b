//! Intersection of double-wedges: bowtie-only envelopes, the general
//! arrangement algorithm, the hourglass-parameterized overlay, and the
//! segment stabbing problem built on them.

mod coverage;
mod envelope;
mod sas;
mod sweep;

use serde::{Deserialize, Serialize};

use crate::arrangement::{components_of, depth_labels, Arrangement, CellSet};
use crate::error::{Error, Result};
use crate::geom::{shear_to_bowties, unshear_point, DoubleWedge, Line, Point};
use crate::rational::Rational;

pub use coverage::{coverage_at, find_uncovered_slope, CoverageVerdict, SlopeCoverage};
pub(crate) use sas::vertical_candidates;
pub use sas::{solve_sas, SasInstance};

use envelope::{Envelope, Side};
use sweep::Region;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Bowtie,
    General,
    Parameterized,
    Oracle,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Bowtie => "bowtie",
            Algorithm::General => "general",
            Algorithm::Parameterized => "parameterized",
            Algorithm::Oracle => "oracle",
        }
    }
}

/// Closure of the part of a bowtie intersection lying in one vertical slab
/// between consecutive bowtie origins. `None` bounds are unbounded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexRegion {
    pub x_min: Option<Rational>,
    pub x_max: Option<Rational>,
    /// Vertices of the lower boundary chain, left to right.
    pub lower: Vec<Point>,
    /// Vertices of the upper boundary chain, left to right.
    pub upper: Vec<Point>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionResult {
    pub algorithm: Algorithm,
    pub component_count: usize,
    /// One point of each component.
    pub witnesses: Vec<Point>,
    /// Selected arrangement cells (arrangement-based algorithms only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cells: Option<CellSet>,
    /// Convex pieces (bowtie algorithm only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convex_regions: Option<Vec<ConvexRegion>>,
}

impl IntersectionResult {
    pub fn is_empty(&self) -> bool {
        self.component_count == 0
    }
}

/// The bounding lines `l1, l2` of every wedge, in order.
pub fn bounding_lines(wedges: &[DoubleWedge]) -> Vec<Line> {
    wedges
        .iter()
        .flat_map(|d| [d.l1().clone(), d.l2().clone()])
        .collect()
}

/// Builds the arrangement of all bounding lines, labels depths and selects
/// the cells contained in every wedge. `O(n^2)`.
pub fn intersect_general(wedges: &[DoubleWedge]) -> IntersectionResult {
    let arr = Arrangement::build(&bounding_lines(wedges));
    let (cells, comps) = select_cells(&arr, wedges, |b, h| b + h == wedges.len());
    IntersectionResult {
        algorithm: Algorithm::General,
        component_count: comps.count,
        witnesses: comps.witnesses,
        cells: Some(cells),
        convex_regions: None,
    }
}

fn select_cells(
    arr: &Arrangement,
    wedges: &[DoubleWedge],
    keep: impl Fn(usize, usize) -> bool,
) -> (CellSet, crate::arrangement::Components) {
    let depth = depth_labels(arr, wedges).expect("arrangement built from these wedges");
    let cells = CellSet::from_cells(arr.cells().filter(|&c| {
        let (b, h) = depth.split(c);
        keep(b, h)
    }));
    let comps = components_of(arr, &cells);
    (cells, comps)
}

/// Cells lying in at least `b` bowties and at least `h` hourglasses, with
/// their connected components.
pub fn threshold_cells(
    wedges: &[DoubleWedge],
    b: usize,
    h: usize,
) -> Result<(Arrangement, CellSet, crate::arrangement::Components)> {
    let nb = wedges.iter().filter(|d| d.is_bowtie()).count();
    if b > nb || h > wedges.len() - nb {
        return Err(Error::InvalidArgument(format!(
            "thresholds ({b}, {h}) exceed the wedge counts ({nb}, {})",
            wedges.len() - nb
        )));
    }
    let arr = Arrangement::build(&bounding_lines(wedges));
    let (cells, comps) = select_cells(&arr, wedges, |cb, ch| cb >= b && ch >= h);
    Ok((arr, cells, comps))
}

/// Intersection of bowties through their lower and upper envelopes,
/// `O(n log n)` plus the output size.
pub fn intersect_bowties(wedges: &[DoubleWedge]) -> Result<IntersectionResult> {
    if let Some(i) = wedges.iter().position(|d| d.is_hourglass()) {
        return Err(Error::HourglassInput(i));
    }
    let lo = Envelope::of_bowties(wedges, Side::Lower);
    let up = Envelope::of_bowties(wedges, Side::Upper);
    let region = Region {
        lo: lo.as_ref(),
        up: up.as_ref(),
        bowties: wedges,
        others: &[],
    };
    let res = region.sweep();
    let convex = convex_regions(wedges, lo.as_ref(), up.as_ref(), &region.events());
    Ok(IntersectionResult {
        algorithm: Algorithm::Bowtie,
        component_count: res.count,
        witnesses: res.witnesses,
        cells: None,
        convex_regions: Some(convex),
    })
}

fn convex_regions(
    wedges: &[DoubleWedge],
    lo: Option<&Envelope>,
    up: Option<&Envelope>,
    events: &[Rational],
) -> Vec<ConvexRegion> {
    let (Some(lo), Some(up)) = (lo, up) else {
        return Vec::new();
    };
    let mut origins: Vec<Rational> = wedges.iter().map(|d| d.origin().x).collect();
    origins.sort();
    origins.dedup();
    let mut out = Vec::new();
    for s in 0..=origins.len() {
        let a = s.checked_sub(1).map(|i| &origins[i]);
        let b = origins.get(s);
        // Inside the slab Lo is convex and U concave, both linear between
        // consecutive events, so Lo - U is convex and linear between them.
        let mut xs: Vec<&Rational> = events
            .iter()
            .filter(|x| a.is_none_or(|a| a <= *x) && b.is_none_or(|b| *x <= b))
            .collect();
        xs.extend(a);
        xs.extend(b);
        xs.sort();
        xs.dedup();
        let diff = |x: &Rational| &lo.eval(x).0 - &up.eval(x).0;
        let ok: Vec<&Rational> = xs
            .iter()
            .copied()
            .filter(|x| diff(x).signum() <= 0)
            .collect();
        // Lo - U on an unbounded end is linear; it stays <= 0 iff it does
        // not increase outward.
        let one = Rational::one();
        let left_open = a.is_none()
            && match xs.first() {
                Some(x0) => diff(x0).signum() <= 0 && diff(&(*x0 - &one)) <= diff(x0),
                None => diff(&Rational::zero()).signum() <= 0,
            };
        let right_open = b.is_none()
            && match xs.last() {
                Some(x1) => diff(x1).signum() <= 0 && diff(&(*x1 + &one)) <= diff(x1),
                None => diff(&Rational::zero()).signum() <= 0,
            };
        if ok.is_empty() {
            continue;
        }
        let chain = |e: &Envelope| -> Vec<Point> {
            ok.iter()
                .map(|x| Point::new((*x).clone(), e.eval(x).0))
                .collect()
        };
        out.push(ConvexRegion {
            x_min: if left_open {
                None
            } else {
                ok.first().map(|x| (*x).clone())
            },
            x_max: if right_open {
                None
            } else {
                ok.last().map(|x| (*x).clone())
            },
            lower: chain(lo),
            upper: chain(up),
        });
    }
    out
}

/// Splits the wedges, intersects the bowties by envelopes and the
/// hourglasses by the general algorithm, then overlays the two.
pub fn intersect_parameterized(wedges: &[DoubleWedge]) -> IntersectionResult {
    let (bowties, hourglasses): (Vec<DoubleWedge>, Vec<DoubleWedge>) =
        wedges.iter().cloned().partition(|d| d.is_bowtie());
    let ih = intersect_general(&hourglasses);
    if ih.is_empty() {
        return IntersectionResult {
            algorithm: Algorithm::Parameterized,
            component_count: 0,
            witnesses: Vec::new(),
            cells: None,
            convex_regions: None,
        };
    }
    let lo = Envelope::of_bowties(&bowties, Side::Lower);
    let up = Envelope::of_bowties(&bowties, Side::Upper);
    let res = Region {
        lo: lo.as_ref(),
        up: up.as_ref(),
        bowties: &bowties,
        others: &hourglasses,
    }
    .sweep();
    IntersectionResult {
        algorithm: Algorithm::Parameterized,
        component_count: res.count,
        witnesses: res.witnesses,
        cells: None,
        convex_regions: None,
    }
}

/// The bowtie algorithm, after shearing by an uncovered slope when the input
/// has hourglasses. Witnesses are mapped back; convex regions are kept only
/// when no shear was needed. Fails when every slope is covered.
pub fn intersect_bowtie_path(wedges: &[DoubleWedge]) -> Result<IntersectionResult> {
    match find_uncovered_slope(wedges).verdict {
        CoverageVerdict::AllBowties => intersect_bowties(wedges),
        CoverageVerdict::Uncovered(a) => {
            let sheared = shear_to_bowties(wedges, &a)?;
            let mut res = intersect_bowties(&sheared)?;
            res.witnesses = res.witnesses.iter().map(|p| unshear_point(p, &a)).collect();
            res.convex_regions = None;
            Ok(res)
        }
        CoverageVerdict::FullyCovered => Err(Error::HourglassInput(
            wedges
                .iter()
                .position(|d| d.is_hourglass())
                .expect("covered slopes need hourglasses"),
        )),
    }
}

/// Bowtie path when some slope is uncovered; otherwise the parameterized
/// algorithm if there are at most `sqrt(n)` hourglasses, else the general
/// one.
pub fn intersect_auto(wedges: &[DoubleWedge]) -> IntersectionResult {
    if let Ok(res) = intersect_bowtie_path(wedges) {
        return res;
    }
    let h = wedges.iter().filter(|d| d.is_hourglass()).count();
    if h * h <= wedges.len() {
        intersect_parameterized(wedges)
    } else {
        intersect_general(wedges)
    }
}

/// Runs the named algorithm; `None` picks one with [`intersect_auto`].
pub fn intersect_with(
    algo: Option<Algorithm>,
    wedges: &[DoubleWedge],
) -> Result<IntersectionResult> {
    Ok(match algo {
        None => intersect_auto(wedges),
        Some(Algorithm::Bowtie) => intersect_bowtie_path(wedges)?,
        Some(Algorithm::General) => intersect_general(wedges),
        Some(Algorithm::Parameterized) => intersect_parameterized(wedges),
        Some(Algorithm::Oracle) => crate::oracle::oracle_result(wedges),
    })
}

/// A point in every wedge, or `None` when the intersection is empty.
pub fn decide_intersection(wedges: &[DoubleWedge]) -> Option<Point> {
    intersect_auto(wedges).witnesses.into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    fn bowtie(a1: i64, b1: i64, a2: i64, b2: i64, closed: bool) -> DoubleWedge {
        DoubleWedge::bowtie(Line::new(a1, b1), Line::new(a2, b2), closed).unwrap()
    }

    #[test]
    fn empty_input_is_the_plane() {
        let r = intersect_general(&[]);
        assert_eq!(r.component_count, 1);
        let r = intersect_bowties(&[]).unwrap();
        assert_eq!(r.component_count, 1);
        assert_eq!(intersect_parameterized(&[]).component_count, 1);
    }

    #[test]
    fn single_closed_bowtie() {
        let w = vec![bowtie(1, 0, -1, 0, true)];
        let r = intersect_bowties(&w).unwrap();
        assert_eq!(r.component_count, 1);
        let regions = r.convex_regions.unwrap();
        assert_eq!(regions.len(), 2);
        assert_eq!(regions[0].x_max, Some(qi(0)));
        assert_eq!(regions[1].x_min, Some(qi(0)));
        assert_eq!(intersect_general(&w).component_count, 1);
        let open = vec![bowtie(1, 0, -1, 0, false)];
        assert_eq!(intersect_bowties(&open).unwrap().component_count, 2);
        assert_eq!(intersect_general(&open).component_count, 2);
    }

    #[test]
    fn complement_pair() {
        let b = bowtie(1, 0, -1, 0, true);
        let h = DoubleWedge::hourglass(Line::new(1, 0), Line::new(-1, 0), true).unwrap();
        let both = vec![b.clone(), h.clone()];
        assert_eq!(intersect_general(&both).component_count, 1);
        assert_eq!(intersect_parameterized(&both).component_count, 1);
        let open = vec![b.complement(), b.complement().complement()];
        assert!(intersect_general(&open).is_empty());
        let open2 = vec![
            bowtie(1, 0, -1, 0, false),
            DoubleWedge::hourglass(Line::new(1, 0), Line::new(-1, 0), false).unwrap(),
        ];
        assert!(intersect_general(&open2).is_empty());
        assert!(intersect_parameterized(&open2).is_empty());
    }

    #[test]
    fn hourglass_rejected_by_bowtie_path() {
        let h = DoubleWedge::hourglass(Line::new(1, 0), Line::new(-1, 0), true).unwrap();
        assert_eq!(intersect_bowties(&[h]), Err(Error::HourglassInput(0)));
    }

    #[test]
    fn decide_single_wedge() {
        let h = DoubleWedge::hourglass(Line::new(1, 0), Line::new(-1, 0), true).unwrap();
        let p = decide_intersection(std::slice::from_ref(&h)).unwrap();
        assert!(h.contains(&p));
    }
}
