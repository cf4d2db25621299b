//! Rational linear maps of the plane, including the shear that turns lines
//! of a chosen slope vertical.

use super::{DoubleWedge, Line, Parity, Point};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `(x, y) -> (y - a*x, x)`. Lines of slope `a` become vertical.
pub fn shear_point(p: &Point, a: &Rational) -> Point {
    Point {
        x: &p.y - &(a * &p.x),
        y: p.x.clone(),
    }
}

/// Inverse of [`shear_point`].
pub fn unshear_point(p: &Point, a: &Rational) -> Point {
    Point {
        x: p.y.clone(),
        y: &p.x + &(a * &p.y),
    }
}

fn shear_line(l: &Line, a: &Rational) -> Result<Line> {
    let d = &l.a - a;
    if d.is_zero() {
        return Err(Error::VerticalImage(a.to_string()));
    }
    // y = m x + c maps to Y = (X - c) / (m - a)
    Ok(Line {
        a: d.recip(),
        b: -&(&l.b / &d),
    })
}

/// Image of a double-wedge under [`shear_point`].
///
/// The side of a point relative to `y = m x + c` transforms by the factor
/// `-sign(m - a)`, so the parity picks up `sign(m1 - a) * sign(m2 - a)`.
pub fn shear_wedge(d: &DoubleWedge, a: &Rational) -> Result<DoubleWedge> {
    let l1 = shear_line(d.l1(), a)?;
    let l2 = shear_line(d.l2(), a)?;
    let flip = (&d.l1().a - a).signum() * (&d.l2().a - a).signum();
    let parity = Parity::from_sign(d.parity().sign() * flip).expect("sign is +-1");
    DoubleWedge::with_boundary(l1, l2, parity, d.boundary())
}

/// Shears every wedge by an uncovered slope `a`; all images are bowties.
pub fn shear_to_bowties(wedges: &[DoubleWedge], a: &Rational) -> Result<Vec<DoubleWedge>> {
    wedges
        .iter()
        .map(|d| {
            let img = shear_wedge(d, a)?;
            if img.is_hourglass() {
                return Err(Error::InvalidArgument(format!(
                    "slope {a} is covered by wedge {d:?}"
                )));
            }
            Ok(img)
        })
        .collect()
}

/// An invertible 2x2 rational matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub m: [[Rational; 2]; 2],
}

impl LinearMap {
    pub fn new(m00: Rational, m01: Rational, m10: Rational, m11: Rational) -> Result<Self> {
        let map = LinearMap {
            m: [[m00, m01], [m10, m11]],
        };
        if map.det().is_zero() {
            return Err(Error::Degenerate("singular linear map".into()));
        }
        Ok(map)
    }

    /// `(x, y) -> (-y, x)`.
    pub fn quarter_turn() -> Self {
        let (z, o) = (Rational::zero(), Rational::one());
        LinearMap::new(z.clone(), -&o, o, z).unwrap()
    }

    /// `(x, y) -> (sx * x, sy * y)`.
    pub fn scale(sx: Rational, sy: Rational) -> Result<Self> {
        LinearMap::new(sx, Rational::zero(), Rational::zero(), sy)
    }

    pub fn det(&self) -> Rational {
        &(&self.m[0][0] * &self.m[1][1]) - &(&self.m[0][1] * &self.m[1][0])
    }

    pub fn inverse(&self) -> LinearMap {
        let d = self.det();
        let m = &self.m;
        LinearMap {
            m: [
                [&m[1][1] / &d, -&(&m[0][1] / &d)],
                [-&(&m[1][0] / &d), &m[0][0] / &d],
            ],
        }
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point {
            x: &(&self.m[0][0] * &p.x) + &(&self.m[0][1] * &p.y),
            y: &(&self.m[1][0] * &p.x) + &(&self.m[1][1] * &p.y),
        }
    }

    pub fn map_line(&self, l: &Line) -> Result<Line> {
        let p = l.point_at(&Rational::zero());
        let q = l.point_at(&Rational::one());
        Line::through(&self.apply(&p), &self.apply(&q))
    }

    /// Image of a wedge; the parity is read off an interior sample point.
    pub fn map_wedge(&self, d: &DoubleWedge) -> Result<DoubleWedge> {
        let l1 = self.map_line(d.l1())?;
        let l2 = self.map_line(d.l2())?;
        let sample = self.apply(&d.interior_point());
        let parity = Parity::from_sign(l1.side(&sample) * l2.side(&sample))
            .expect("interior point maps off the bounding lines");
        DoubleWedge::with_boundary(l1, l2, parity, d.boundary())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn zero_shear_swaps_hourglass_to_bowtie() {
        let h = DoubleWedge::hourglass(Line::new(1, 0), Line::new(-1, 0), true).unwrap();
        let b = shear_wedge(&h, &qi(0)).unwrap();
        assert!(b.is_bowtie());
        assert_eq!(b.l1(), &Line::new(1, 0));
        assert_eq!(b.l2(), &Line::new(-1, 0));
    }

    #[test]
    fn shear_rejects_bounding_slope() {
        let h = DoubleWedge::hourglass(Line::new(1, 0), Line::new(-1, 0), true).unwrap();
        assert!(matches!(
            shear_wedge(&h, &qi(1)),
            Err(Error::VerticalImage(_))
        ));
        // 2 lies outside [-1, 1], so the hourglass covers it
        assert!(shear_to_bowties(&[h], &qi(2)).is_err());
    }

    #[test]
    fn shear_round_trip() {
        let p = Point::new(q(3, 7), q(-5, 2));
        let a = q(2, 3);
        assert_eq!(unshear_point(&shear_point(&p, &a), &a), p);
        let m = LinearMap::new(qi(2), qi(1), qi(1), qi(1)).unwrap();
        assert_eq!(m.inverse().apply(&m.apply(&p)), p);
    }

    #[test]
    fn quarter_turn_maps_bowtie_to_hourglass() {
        let b = DoubleWedge::bowtie(Line::new(2, 0), Line::new(-2, 0), true).unwrap();
        let h = LinearMap::quarter_turn().map_wedge(&b).unwrap();
        assert!(h.is_hourglass());
        assert_eq!(h.slopes(), (&q(-1, 2), &q(1, 2)));
    }
}
