//! Double-wedges: bowties and hourglasses.

use serde::{Deserialize, Serialize};

use super::{crossing, Line, Point};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Which wedge pair of the two bounding lines is selected.
///
/// A point strictly inside has `side(l1) * side(l2) == parity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    /// The pair between the lines; contains no vertical line.
    Bowtie,
    /// The pair above and below both lines; contains a vertical line.
    Hourglass,
}

impl Parity {
    pub fn sign(self) -> i32 {
        match self {
            Parity::Bowtie => -1,
            Parity::Hourglass => 1,
        }
    }

    pub fn from_sign(s: i32) -> Option<Parity> {
        match s {
            -1 => Some(Parity::Bowtie),
            1 => Some(Parity::Hourglass),
            _ => None,
        }
    }

    pub fn flipped(self) -> Parity {
        match self {
            Parity::Bowtie => Parity::Hourglass,
            Parity::Hourglass => Parity::Bowtie,
        }
    }
}

impl Serialize for Parity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i32(self.sign())
    }
}

impl<'de> Deserialize<'de> for Parity {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = i32::deserialize(d)?;
        Parity::from_sign(v).ok_or_else(|| serde::de::Error::custom("parity must be 1 or -1"))
    }
}

/// Boundary membership. Points on exactly one bounding line use that line's
/// bit; the origin (on both) uses `origin`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Boundary {
    pub l1: bool,
    pub l2: bool,
    pub origin: bool,
}

impl Boundary {
    pub fn uniform(closed: bool) -> Self {
        Boundary {
            l1: closed,
            l2: closed,
            origin: closed,
        }
    }

    pub fn is_uniform(&self) -> bool {
        self.l1 == self.l2 && self.l2 == self.origin
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WhichLine {
    L1,
    L2,
}

/// A double-wedge bounded by two non-parallel, non-vertical lines.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWedge", into = "RawWedge")]
pub struct DoubleWedge {
    l1: Line,
    l2: Line,
    parity: Parity,
    boundary: Boundary,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawWedge {
    l1: Line,
    l2: Line,
    parity: Parity,
    closed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    boundary: Option<Boundary>,
}

impl TryFrom<RawWedge> for DoubleWedge {
    type Error = Error;
    fn try_from(r: RawWedge) -> Result<Self> {
        let boundary = r.boundary.unwrap_or(Boundary::uniform(r.closed));
        DoubleWedge::with_boundary(r.l1, r.l2, r.parity, boundary)
    }
}

impl From<DoubleWedge> for RawWedge {
    fn from(d: DoubleWedge) -> Self {
        let uniform = d.boundary.is_uniform();
        RawWedge {
            closed: d.is_closed(),
            boundary: (!uniform).then_some(d.boundary),
            l1: d.l1,
            l2: d.l2,
            parity: d.parity,
        }
    }
}

/// A ray of a bounding line starting at the wedge origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub start: Point,
    pub line: Line,
    pub which: WhichLine,
    /// Points towards increasing x.
    pub rightward: bool,
}

impl Ray {
    fn spans(&self, x: &Rational) -> bool {
        if self.rightward {
            x >= &self.start.x
        } else {
            x <= &self.start.x
        }
    }
}

/// The four bounding rays split by the mean-slope line through the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Traces {
    pub origin: Point,
    pub mean_slope: Rational,
    pub upper: [Ray; 2],
    pub lower: [Ray; 2],
}

impl DoubleWedge {
    pub fn new(l1: Line, l2: Line, parity: Parity, closed: bool) -> Result<Self> {
        Self::with_boundary(l1, l2, parity, Boundary::uniform(closed))
    }

    pub fn with_boundary(l1: Line, l2: Line, parity: Parity, boundary: Boundary) -> Result<Self> {
        if l1.a == l2.a {
            return Err(Error::Degenerate(format!(
                "bounding lines {l1:?} and {l2:?} are parallel"
            )));
        }
        Ok(DoubleWedge {
            l1,
            l2,
            parity,
            boundary,
        })
    }

    pub fn bowtie(l1: Line, l2: Line, closed: bool) -> Result<Self> {
        Self::new(l1, l2, Parity::Bowtie, closed)
    }

    pub fn hourglass(l1: Line, l2: Line, closed: bool) -> Result<Self> {
        Self::new(l1, l2, Parity::Hourglass, closed)
    }

    pub fn l1(&self) -> &Line {
        &self.l1
    }

    pub fn l2(&self) -> &Line {
        &self.l2
    }

    pub fn line(&self, which: WhichLine) -> &Line {
        match which {
            WhichLine::L1 => &self.l1,
            WhichLine::L2 => &self.l2,
        }
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_bowtie(&self) -> bool {
        self.parity == Parity::Bowtie
    }

    pub fn is_hourglass(&self) -> bool {
        self.parity == Parity::Hourglass
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn is_closed(&self) -> bool {
        self.boundary == Boundary::uniform(true)
    }

    pub fn origin(&self) -> Point {
        crossing(&self.l1, &self.l2).expect("bounding lines are not parallel")
    }

    /// Bounding slopes in increasing order.
    pub fn slopes(&self) -> (&Rational, &Rational) {
        if self.l1.a < self.l2.a {
            (&self.l1.a, &self.l2.a)
        } else {
            (&self.l2.a, &self.l1.a)
        }
    }

    /// Membership given the two side signs of a point.
    pub fn contains_signs(&self, s1: i32, s2: i32) -> bool {
        match (s1, s2) {
            (0, 0) => self.boundary.origin,
            (0, _) => self.boundary.l1,
            (_, 0) => self.boundary.l2,
            _ => s1 * s2 == self.parity.sign(),
        }
    }

    /// Sign-product membership test.
    pub fn contains(&self, p: &Point) -> bool {
        self.contains_signs(self.l1.side(p), self.l2.side(p))
    }

    /// Strict interior membership, ignoring the boundary convention.
    pub fn contains_interior(&self, p: &Point) -> bool {
        self.l1.side(p) * self.l2.side(p) == self.parity.sign()
    }

    pub fn traces(&self) -> Traces {
        let origin = self.origin();
        let mean_slope = Rational::midpoint(&self.l1.a, &self.l2.a);
        let (steep, flat) = if self.l1.a > self.l2.a {
            ((&self.l1, WhichLine::L1), (&self.l2, WhichLine::L2))
        } else {
            ((&self.l2, WhichLine::L2), (&self.l1, WhichLine::L1))
        };
        let ray = |(line, which): (&Line, WhichLine), rightward| Ray {
            start: origin.clone(),
            line: line.clone(),
            which,
            rightward,
        };
        // Right of the origin the steeper line is above the mean line,
        // left of it the flatter one is.
        Traces {
            upper: [ray(steep, true), ray(flat, false)],
            lower: [ray(flat, true), ray(steep, false)],
            origin,
            mean_slope,
        }
    }

    /// Membership through the upper/lower trace characterization; an
    /// independent route to the same predicate as [`DoubleWedge::contains`].
    pub fn contains_by_traces(&self, p: &Point) -> bool {
        let t = self.traces();
        if p == &t.origin {
            return self.boundary.origin;
        }
        for r in t.upper.iter().chain(t.lower.iter()) {
            if r.spans(&p.x) && r.line.eval(&p.x) == p.y {
                return match r.which {
                    WhichLine::L1 => self.boundary.l1,
                    WhichLine::L2 => self.boundary.l2,
                };
            }
        }
        let below_upper = t
            .upper
            .iter()
            .any(|r| r.spans(&p.x) && r.line.eval(&p.x) > p.y);
        let above_lower = t
            .lower
            .iter()
            .any(|r| r.spans(&p.x) && r.line.eval(&p.x) < p.y);
        match self.parity {
            Parity::Bowtie => below_upper && above_lower,
            Parity::Hourglass => !below_upper || !above_lower,
        }
    }

    /// The same wedge with the other pair selected and the boundary bits
    /// inverted: the set-theoretic complement.
    pub fn complement(&self) -> DoubleWedge {
        DoubleWedge {
            l1: self.l1.clone(),
            l2: self.l2.clone(),
            parity: self.parity.flipped(),
            boundary: Boundary {
                l1: !self.boundary.l1,
                l2: !self.boundary.l2,
                origin: !self.boundary.origin,
            },
        }
    }

    /// A point strictly inside one of the selected wedges.
    pub fn interior_point(&self) -> Point {
        let o = self.origin();
        match self.parity {
            Parity::Bowtie => {
                let m = Rational::midpoint(&self.l1.a, &self.l2.a);
                Point {
                    x: &o.x + &Rational::one(),
                    y: &o.y + &m,
                }
            }
            Parity::Hourglass => Point {
                x: o.x.clone(),
                y: &o.y + &Rational::one(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    fn cross(closed: bool, parity: Parity) -> DoubleWedge {
        DoubleWedge::new(Line::new(1, 0), Line::new(-1, 0), parity, closed).unwrap()
    }

    #[test]
    fn sign_product_examples() {
        let d = cross(true, Parity::Bowtie);
        assert!(d.contains(&Point::new(1, 0)));
        assert!(!d.contains(&Point::new(0, 1)));
        assert!(d.contains(&Point::new(0, 0)));
        assert!(!cross(false, Parity::Bowtie).contains(&Point::new(0, 0)));
    }

    #[test]
    fn trace_example() {
        let t = cross(true, Parity::Bowtie).traces();
        assert_eq!(t.origin, Point::new(0, 0));
        assert_eq!(t.mean_slope, qi(0));
        // y = x for x >= 0 and y = -x for x <= 0
        assert_eq!(t.upper[0].line, Line::new(1, 0));
        assert!(t.upper[0].rightward);
        assert_eq!(t.upper[1].line, Line::new(-1, 0));
        assert!(!t.upper[1].rightward);
    }

    #[test]
    fn hourglass_flips_membership() {
        let b = cross(false, Parity::Bowtie);
        let h = cross(false, Parity::Hourglass);
        for p in [
            Point::new(1, 0),
            Point::new(0, 1),
            Point::new(-3, 1),
            Point::new(2, -7),
        ] {
            assert_ne!(b.contains(&p), h.contains(&p));
            assert_eq!(h.contains(&p), h.contains_by_traces(&p));
        }
    }

    #[test]
    fn parallel_lines_rejected() {
        assert!(DoubleWedge::bowtie(Line::new(1, 0), Line::new(1, 3), true).is_err());
    }

    #[test]
    fn json_round_trip_keeps_mixed_boundary() {
        let d = DoubleWedge::with_boundary(
            Line::new(2, 1),
            Line::new(-1, 0),
            Parity::Hourglass,
            Boundary {
                l1: true,
                l2: false,
                origin: true,
            },
        )
        .unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert!(s.contains("\"boundary\""));
        assert_eq!(serde_json::from_str::<DoubleWedge>(&s).unwrap(), d);
        let plain = cross(true, Parity::Bowtie);
        let v = serde_json::to_value(&plain).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"l1": {"a": "1", "b": "0"}, "l2": {"a": "-1", "b": "0"}, "parity": -1, "closed": true})
        );
    }
}
