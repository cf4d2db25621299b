//! Points, non-vertical lines, segments and anti-segments.

mod duality;
mod transform;
mod wedge;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub use duality::{
    dual_antisegment_to_hourglass, dual_avoided_segment_to_hourglass, dual_element_to_wedge,
    dual_line_to_point, dual_point_to_line, dual_segment_to_bowtie,
};
pub use transform::{shear_point, shear_to_bowties, shear_wedge, unshear_point, LinearMap};
pub use wedge::{Boundary, DoubleWedge, Parity, Ray, Traces, WhichLine};

/// A point with exact coordinates. Serialized as `[x, y]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(Rational, Rational)", into = "(Rational, Rational)")]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: impl Into<Rational>, y: impl Into<Rational>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        Point {
            x: Rational::midpoint(&self.x, &other.x),
            y: Rational::midpoint(&self.y, &other.y),
        }
    }

    /// `self + t * (dx, dy)`.
    pub fn offset(&self, dx: &Rational, dy: &Rational, t: &Rational) -> Point {
        Point {
            x: &self.x + &(dx * t),
            y: &self.y + &(dy * t),
        }
    }
}

impl From<(Rational, Rational)> for Point {
    fn from((x, y): (Rational, Rational)) -> Self {
        Point { x, y }
    }
}

impl From<Point> for (Rational, Rational) {
    fn from(p: Point) -> Self {
        (p.x, p.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the orientation determinant of `(a, b, c)`: 1 for a left turn.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> i32 {
    let lhs = &(&b.x - &a.x) * &(&c.y - &a.y);
    let rhs = &(&b.y - &a.y) * &(&c.x - &a.x);
    lhs.cmp(&rhs) as i32
}

/// The non-vertical line `y = a*x + b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Line {
    pub a: Rational,
    pub b: Rational,
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y = {}x + {}", self.a, self.b)
    }
}

/// Result of intersecting two non-vertical lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineIntersection {
    Point(Point),
    Parallel { coincident: bool },
}

impl Line {
    pub fn new(a: impl Into<Rational>, b: impl Into<Rational>) -> Self {
        Line {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn slope(&self) -> &Rational {
        &self.a
    }

    pub fn intercept(&self) -> &Rational {
        &self.b
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        &(&self.a * x) + &self.b
    }

    pub fn point_at(&self, x: &Rational) -> Point {
        Point {
            x: x.clone(),
            y: self.eval(x),
        }
    }

    /// Sign of `p.y - (a*p.x + b)`: 1 above, -1 below, 0 on the line.
    pub fn side(&self, p: &Point) -> i32 {
        if self.a.is_zero() {
            return p.y.cmp(&self.b) as i32;
        }
        p.y.cmp(&self.eval(&p.x)) as i32
    }

    /// The line through two points with distinct x-coordinates.
    pub fn through(p: &Point, q: &Point) -> Result<Line> {
        if p.x == q.x {
            return Err(Error::Degenerate(format!(
                "points {p:?} and {q:?} span a vertical line"
            )));
        }
        let a = &(&q.y - &p.y) / &(&q.x - &p.x);
        let b = &p.y - &(&a * &p.x);
        Ok(Line { a, b })
    }

    /// x-coordinate where the line reaches height `y`; `None` when horizontal.
    pub fn x_at(&self, y: &Rational) -> Option<Rational> {
        if self.a.is_zero() {
            None
        } else {
            Some(&(y - &self.b) / &self.a)
        }
    }

    /// Whether this line meets `s`, honoring its endpoint inclusion flags.
    pub fn meets_segment(&self, s: &Segment) -> bool {
        let sp = self.side(&s.p);
        let sq = self.side(&s.q);
        match (sp, sq) {
            (0, 0) => true,
            (0, _) => s.include_p,
            (_, 0) => s.include_q,
            _ => sp != sq,
        }
    }
}

/// Exact intersection of two non-vertical lines.
pub fn line_intersection(l1: &Line, l2: &Line) -> LineIntersection {
    if l1.a == l2.a {
        return LineIntersection::Parallel {
            coincident: l1.b == l2.b,
        };
    }
    let x = &(&l2.b - &l1.b) / &(&l1.a - &l2.a);
    let y = l1.eval(&x);
    LineIntersection::Point(Point { x, y })
}

/// Intersection point when the lines are not parallel.
pub fn crossing(l1: &Line, l2: &Line) -> Option<Point> {
    match line_intersection(l1, l2) {
        LineIntersection::Point(p) => Some(p),
        LineIntersection::Parallel { .. } => None,
    }
}

/// A non-vertical segment with per-endpoint inclusion. Always stored with
/// `p.x < q.x`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSegment")]
pub struct Segment {
    pub p: Point,
    pub q: Point,
    pub include_p: bool,
    pub include_q: bool,
}

#[derive(Deserialize)]
struct RawSegment {
    p: Point,
    q: Point,
    #[serde(default = "yes")]
    include_p: bool,
    #[serde(default = "yes")]
    include_q: bool,
}

fn yes() -> bool {
    true
}

impl TryFrom<RawSegment> for Segment {
    type Error = Error;
    fn try_from(r: RawSegment) -> Result<Segment> {
        Segment::new(r.p, r.q, r.include_p, r.include_q)
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.include_p { '[' } else { '(' };
        let r = if self.include_q { ']' } else { ')' };
        write!(f, "{l}{:?} -- {:?}{r}", self.p, self.q)
    }
}

impl Segment {
    /// Orders the endpoints by x; rejects zero-length and vertical segments.
    pub fn new(p: Point, q: Point, include_p: bool, include_q: bool) -> Result<Segment> {
        if p == q {
            return Err(Error::Degenerate(format!("zero-length segment at {p:?}")));
        }
        if p.x == q.x {
            return Err(Error::Degenerate(format!(
                "vertical segment {p:?} -- {q:?}"
            )));
        }
        Ok(if p.x < q.x {
            Segment {
                p,
                q,
                include_p,
                include_q,
            }
        } else {
            Segment {
                p: q,
                q: p,
                include_p: include_q,
                include_q: include_p,
            }
        })
    }

    pub fn closed(p: Point, q: Point) -> Result<Segment> {
        Segment::new(p, q, true, true)
    }

    pub fn open(p: Point, q: Point) -> Result<Segment> {
        Segment::new(p, q, false, false)
    }

    pub fn carrier(&self) -> Line {
        Line::through(&self.p, &self.q).expect("segment is non-vertical")
    }

    /// Whether `pt` belongs to the segment, honoring inclusion flags.
    pub fn contains_point(&self, pt: &Point) -> bool {
        if orientation(&self.p, &self.q, pt) != 0 {
            return false;
        }
        if pt == &self.p {
            return self.include_p;
        }
        if pt == &self.q {
            return self.include_q;
        }
        self.p.x < pt.x && pt.x < self.q.x
    }

    /// Whether `x` lies in the segment's x-projection, honoring flags.
    pub fn covers_x(&self, x: &Rational) -> bool {
        if x == &self.p.x {
            self.include_p
        } else if x == &self.q.x {
            self.include_q
        } else {
            &self.p.x < x && x < &self.q.x
        }
    }
}

/// A line minus a segment. The removed part is stored as `complement`;
/// an endpoint excluded from the complement belongs to the anti-segment.
/// Serialized as `{"anti": true, "complement": segment}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawAnti", into = "RawAnti")]
pub struct AntiSegment {
    pub complement: Segment,
}

#[derive(Serialize, Deserialize)]
struct RawAnti {
    #[serde(default = "yes")]
    anti: bool,
    complement: Segment,
}

impl From<RawAnti> for AntiSegment {
    fn from(r: RawAnti) -> Self {
        AntiSegment {
            complement: r.complement,
        }
    }
}

impl From<AntiSegment> for RawAnti {
    fn from(a: AntiSegment) -> Self {
        RawAnti {
            anti: true,
            complement: a.complement,
        }
    }
}

impl fmt::Debug for AntiSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "anti{:?}", self.complement)
    }
}

impl AntiSegment {
    pub fn new(complement: Segment) -> Self {
        AntiSegment { complement }
    }

    pub fn carrier(&self) -> Line {
        self.complement.carrier()
    }
}

/// A member of a piercing family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Segment(Segment),
    Anti(AntiSegment),
}

impl Element {
    /// The endpoints of the segment or of the anti-segment's complement.
    pub fn endpoints(&self) -> [&Point; 2] {
        let s = match self {
            Element::Segment(s) => s,
            Element::Anti(a) => &a.complement,
        };
        [&s.p, &s.q]
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawElement {
    Anti { anti: bool, complement: Segment },
    Segment(Segment),
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Element::Segment(seg) => seg.serialize(s),
            Element::Anti(a) => a.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match RawElement::deserialize(d)? {
            RawElement::Anti {
                anti: true,
                complement,
            } => Element::Anti(AntiSegment { complement }),
            RawElement::Anti { complement, .. } => Element::Segment(complement),
            RawElement::Segment(s) => Element::Segment(s),
        })
    }
}

/// Any line of the plane, vertical ones included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Transversal {
    Vertical { vertical: Rational },
    Line(Line),
}

impl Transversal {
    /// Whether this line meets a closed/open segment.
    pub fn meets_segment(&self, s: &Segment) -> bool {
        match self {
            Transversal::Line(l) => l.meets_segment(s),
            Transversal::Vertical { vertical } => s.covers_x(vertical),
        }
    }

    /// Whether this line pierces `e`. A line parallel to an anti-segment's
    /// carrier (and distinct from it) never pierces it.
    pub fn pierces(&self, e: &Element) -> bool {
        match e {
            Element::Segment(s) => self.meets_segment(s),
            Element::Anti(a) => {
                let c = &a.complement;
                match self {
                    Transversal::Vertical { vertical } => !c.covers_x(vertical),
                    Transversal::Line(l) => {
                        let carrier = c.carrier();
                        if l.a == carrier.a {
                            return l.b == carrier.b;
                        }
                        !l.meets_segment(c)
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn intersections() {
        let p = |a: i64, b: i64| Line::new(qi(a), qi(b));
        assert_eq!(
            line_intersection(&p(1, 0), &p(-1, 0)),
            LineIntersection::Point(Point::new(0, 0))
        );
        assert_eq!(
            line_intersection(&p(2, 1), &p(2, 3)),
            LineIntersection::Parallel { coincident: false }
        );
        assert_eq!(
            line_intersection(&p(2, 1), &p(2, 1)),
            LineIntersection::Parallel { coincident: true }
        );
        // hand-solved: x - 2 = 3x - 8  =>  x = 3, y = 1
        assert_eq!(
            line_intersection(&p(1, -2), &p(3, -8)),
            LineIntersection::Point(Point::new(3, 1))
        );
    }

    #[test]
    fn segment_rejects_degenerate() {
        assert!(Segment::closed(Point::new(1, 1), Point::new(1, 1)).is_err());
        assert!(Segment::closed(Point::new(1, 1), Point::new(1, 2)).is_err());
        let s = Segment::new(Point::new(3, 0), Point::new(1, 0), true, false).unwrap();
        assert_eq!(s.p, Point::new(1, 0));
        assert!(!s.include_p && s.include_q);
    }

    #[test]
    fn piercing_examples() {
        let seg = Segment::closed(Point::new(-1, -1), Point::new(1, 1)).unwrap();
        let horizontal = Transversal::Line(Line::new(0, 0));
        assert!(horizontal.pierces(&Element::Segment(seg.clone())));

        let anti = Element::Anti(AntiSegment::new(
            Segment::open(Point::new(-1, -1), Point::new(1, 1)).unwrap(),
        ));
        assert!(!Transversal::Line(Line::new(1, 5)).pierces(&anti));
        assert!(Transversal::Line(Line::new(1, 0)).pierces(&anti));
        assert!(!Transversal::Vertical { vertical: qi(0) }.pierces(&anti));
        assert!(Transversal::Vertical { vertical: q(3, 2) }.pierces(&anti));
        // open complement: its endpoints belong to the anti-segment
        assert!(Transversal::Vertical { vertical: qi(1) }.pierces(&anti));
    }

    #[test]
    fn json_shapes() {
        let s = Segment::new(Point::new(0, 0), Point::new(q(1, 2), 1), true, false).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"p": ["0", "0"], "q": ["1/2", "1"], "include_p": true, "include_q": false})
        );
        let e: Element =
            serde_json::from_value(serde_json::json!({"anti": true, "complement": v})).unwrap();
        assert!(matches!(e, Element::Anti(_)));
        let t: Transversal = serde_json::from_str(r#"{"vertical": "5"}"#).unwrap();
        assert_eq!(t, Transversal::Vertical { vertical: qi(5) });
        let l: Transversal = serde_json::from_str(r#"{"a": "1", "b": "-2"}"#).unwrap();
        assert_eq!(l, Transversal::Line(Line::new(1, -2)));
    }
}
