use serde::{Deserialize, Serialize};

use super::decide_intersection;
use crate::geom::{
    dual_avoided_segment_to_hourglass, dual_point_to_line, dual_segment_to_bowtie, DoubleWedge,
    Segment, Transversal,
};
use crate::rational::Rational;

/// Find a line meeting every `stab` segment and missing every `avoid`
/// segment.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SasInstance {
    pub stab: Vec<Segment>,
    #[serde(default)]
    pub avoid: Vec<Segment>,
}

impl SasInstance {
    pub fn accepts(&self, t: &Transversal) -> bool {
        self.stab.iter().all(|s| t.meets_segment(s))
            && self.avoid.iter().all(|s| !t.meets_segment(s))
    }

    /// Dual wedges: a bowtie per stabbed segment, an hourglass per avoided
    /// one. A point lies in all of them iff its dual line is a solution.
    pub fn dual_wedges(&self) -> Vec<DoubleWedge> {
        self.stab
            .iter()
            .map(dual_segment_to_bowtie)
            .chain(self.avoid.iter().map(dual_avoided_segment_to_hourglass))
            .collect()
    }

    /// Endpoint x-coordinates, midpoints between consecutive ones, and one
    /// unit beyond each extreme: a vertical line through any other x meets
    /// the same segments as one of these.
    pub fn vertical_candidates(&self) -> Vec<Rational> {
        vertical_candidates(self.stab.iter().chain(&self.avoid))
    }
}

pub(crate) fn vertical_candidates<'a>(segs: impl Iterator<Item = &'a Segment>) -> Vec<Rational> {
    let mut xs: Vec<Rational> = segs.flat_map(|s| [s.p.x.clone(), s.q.x.clone()]).collect();
    xs.sort();
    xs.dedup();
    let mut out = Vec::with_capacity(2 * xs.len() + 1);
    let one = Rational::one();
    match (xs.first(), xs.last()) {
        (Some(a), Some(_)) => out.push(a - &one),
        _ => out.push(Rational::zero()),
    }
    for (i, x) in xs.iter().enumerate() {
        out.push(x.clone());
        match xs.get(i + 1) {
            Some(y) => out.push(Rational::midpoint(x, y)),
            None => out.push(x + &one),
        }
    }
    out
}

/// Solves the stabbing-and-avoiding problem. Non-vertical solutions come
/// from intersecting the dual wedges; vertical ones from a scan over
/// [`SasInstance::vertical_candidates`]. Every returned line is re-checked
/// against the instance; non-vertical answers are preferred.
pub fn solve_sas(inst: &SasInstance) -> Option<Transversal> {
    if let Some(p) = decide_intersection(&inst.dual_wedges()) {
        let t = Transversal::Line(dual_point_to_line(&p));
        if inst.accepts(&t) {
            return Some(t);
        }
    }
    inst.vertical_candidates()
        .into_iter()
        .map(|x| Transversal::Vertical { vertical: x })
        .find(|t| inst.accepts(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    #[test]
    fn single_segment() {
        let inst = SasInstance {
            stab: vec![Segment::closed(Point::new(0, 0), Point::new(1, 1)).unwrap()],
            avoid: vec![],
        };
        let t = solve_sas(&inst).unwrap();
        assert!(matches!(t, Transversal::Line(_)));
        assert!(inst.accepts(&t));
    }

    #[test]
    fn line_through_gap_in_wall() {
        let seg = |a: (i64, i64), b: (i64, i64)| {
            Segment::closed(Point::new(a.0, a.1), Point::new(b.0, b.1)).unwrap()
        };
        let inst = SasInstance {
            stab: vec![seg((-1, 0), (1, 0)), seg((-1, 100), (1, 100))],
            avoid: vec![
                seg((-50, 50), (-1, 50)),
                seg((1, 50), (50, 50)),
                seg((-1, 50), (0, 51)),
            ],
        };
        let t = solve_sas(&inst);
        assert!(t.as_ref().is_some_and(|t| inst.accepts(t)), "{t:?}");
    }
}
