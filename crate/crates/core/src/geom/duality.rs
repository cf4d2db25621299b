//! The point-line duality `(px, py) <-> y = px*x - py`.
//!
//! Incidence and above/below relations are preserved: `p` lies above the
//! dual line of `x` exactly when `x` lies above the dual line of `p`. A
//! segment therefore dualizes to the bowtie of lines whose duals meet it,
//! and an anti-segment to the complementary hourglass.

use super::{AntiSegment, Boundary, DoubleWedge, Element, Line, Parity, Point, Segment};

pub fn dual_point_to_line(p: &Point) -> Line {
    Line {
        a: p.x.clone(),
        b: -&p.y,
    }
}

pub fn dual_line_to_point(l: &Line) -> Point {
    Point {
        x: l.a.clone(),
        y: -&l.b,
    }
}

/// Bowtie of the points whose dual lines meet `s`.
///
/// Each bounding line carries the inclusion flag of its endpoint. The origin
/// is dual to the carrier of `s`, which always meets `s`, so it is included.
pub fn dual_segment_to_bowtie(s: &Segment) -> DoubleWedge {
    DoubleWedge::with_boundary(
        dual_point_to_line(&s.p),
        dual_point_to_line(&s.q),
        Parity::Bowtie,
        Boundary {
            l1: s.include_p,
            l2: s.include_q,
            origin: true,
        },
    )
    .expect("segment endpoints have distinct x")
}

/// Hourglass of the points whose dual lines meet the anti-segment.
///
/// Membership is projective: dual lines parallel to the carrier (the
/// vertical line through the origin) are inside, although in the affine
/// plane they never reach the anti-segment.
pub fn dual_antisegment_to_hourglass(a: &AntiSegment) -> DoubleWedge {
    let c = &a.complement;
    DoubleWedge::with_boundary(
        dual_point_to_line(&c.p),
        dual_point_to_line(&c.q),
        Parity::Hourglass,
        Boundary {
            l1: !c.include_p,
            l2: !c.include_q,
            origin: true,
        },
    )
    .expect("segment endpoints have distinct x")
}

/// Hourglass of the points whose dual lines avoid `s`. Unlike
/// [`dual_antisegment_to_hourglass`] the origin is excluded, since the
/// carrier of `s` does not avoid it.
pub fn dual_avoided_segment_to_hourglass(s: &Segment) -> DoubleWedge {
    DoubleWedge::with_boundary(
        dual_point_to_line(&s.p),
        dual_point_to_line(&s.q),
        Parity::Hourglass,
        Boundary {
            l1: !s.include_p,
            l2: !s.include_q,
            origin: false,
        },
    )
    .expect("segment endpoints have distinct x")
}

pub fn dual_element_to_wedge(e: &Element) -> DoubleWedge {
    match e {
        Element::Segment(s) => dual_segment_to_bowtie(s),
        Element::Anti(a) => dual_antisegment_to_hourglass(a),
    }
}
