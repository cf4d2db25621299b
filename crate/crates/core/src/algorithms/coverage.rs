use crate::geom::DoubleWedge;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverageVerdict {
    AllBowties,
    /// A slope contained in no wedge; shearing by it leaves only bowties.
    Uncovered(Rational),
    FullyCovered,
}

/// Sorted distinct bounding slopes, each with the change in coverage when
/// the slope is passed from below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeCoverage {
    pub events: Vec<(Rational, i64)>,
    pub verdict: CoverageVerdict,
}

/// Sweeps the sorted bounding slopes and reports the midpoint of the first
/// gap between consecutive slopes that no wedge covers.
///
/// A bowtie with slopes `a1 < a2` covers `[a1, a2]`; an hourglass covers the
/// rest of the slopes and the vertical direction. Below the smallest slope
/// every hourglass covers, so the coverage there is the hourglass count.
pub fn find_uncovered_slope(wedges: &[DoubleWedge]) -> SlopeCoverage {
    let mut marks: Vec<(Rational, i64)> = Vec::with_capacity(2 * wedges.len());
    let mut hourglasses = 0i64;
    for d in wedges {
        let (lo, hi) = d.slopes();
        if d.is_bowtie() {
            marks.push((lo.clone(), 1));
            marks.push((hi.clone(), -1));
        } else {
            hourglasses += 1;
            marks.push((lo.clone(), -1));
            marks.push((hi.clone(), 1));
        }
    }
    marks.sort();
    let mut events: Vec<(Rational, i64)> = Vec::new();
    for (s, delta) in marks {
        match events.last_mut() {
            Some((last, acc)) if *last == s => *acc += delta,
            _ => events.push((s, delta)),
        }
    }
    let verdict = if hourglasses == 0 {
        CoverageVerdict::AllBowties
    } else {
        let mut coverage = hourglasses;
        let mut found = None;
        for w in events.windows(2) {
            coverage += w[0].1;
            if coverage == 0 {
                found = Some(Rational::midpoint(&w[0].0, &w[1].0));
                break;
            }
        }
        match found {
            Some(a) => CoverageVerdict::Uncovered(a),
            None => CoverageVerdict::FullyCovered,
        }
    };
    SlopeCoverage { events, verdict }
}

/// Number of wedges containing a line of slope `a` (`None` is vertical).
pub fn coverage_at(wedges: &[DoubleWedge], a: Option<&Rational>) -> usize {
    wedges
        .iter()
        .filter(|d| {
            let (lo, hi) = d.slopes();
            match a {
                None => d.is_hourglass(),
                Some(a) => {
                    let inside = lo <= a && a <= hi;
                    if d.is_bowtie() {
                        inside
                    } else {
                        !(lo < a && a < hi)
                    }
                }
            }
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Line;
    use crate::rational::{q, qi};

    #[test]
    fn examples() {
        let b = DoubleWedge::bowtie(Line::new(1, 0), Line::new(2, 0), true).unwrap();
        assert_eq!(
            find_uncovered_slope(&[b]).verdict,
            CoverageVerdict::AllBowties
        );
        let h = DoubleWedge::hourglass(Line::new(-1, 0), Line::new(1, 0), true).unwrap();
        assert_eq!(
            find_uncovered_slope(&[h]).verdict,
            CoverageVerdict::Uncovered(qi(0))
        );
        let g = vec![
            DoubleWedge::bowtie(Line::new(2, 0), Line::new(-2, 0), true).unwrap(),
            DoubleWedge::hourglass(Line::new(q(1, 2), 0), Line::new(q(-1, 2), 0), true).unwrap(),
        ];
        assert_eq!(
            find_uncovered_slope(&g).verdict,
            CoverageVerdict::FullyCovered
        );
    }

    #[test]
    fn first_gap_wins() {
        let w = vec![
            DoubleWedge::hourglass(Line::new(0, 0), Line::new(10, 0), true).unwrap(),
            DoubleWedge::bowtie(Line::new(2, 0), Line::new(4, 0), true).unwrap(),
        ];
        let c = find_uncovered_slope(&w);
        assert_eq!(c.verdict, CoverageVerdict::Uncovered(qi(1)));
        assert_eq!(coverage_at(&w, Some(&qi(1))), 0);
        assert_eq!(coverage_at(&w, Some(&qi(3))), 1);
        assert_eq!(coverage_at(&w, None), 1);
    }
}
