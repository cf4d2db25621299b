use serde::{Deserialize, Serialize};

use crate::algorithms::SasInstance;
use crate::geom::{LinearMap, Point, Segment, Transversal};
use crate::rational::Rational;

/// Integer points on the rows `y = 0, 1, 2`, serialized as `[[x, row], ...]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeomBaseInstance {
    pub points: Vec<(i64, u8)>,
}

impl GeomBaseInstance {
    /// Sorted, deduplicated, translated so that the smallest x is 1.
    pub fn normalized(&self) -> GeomBaseInstance {
        let mut pts = self.points.clone();
        pts.sort_by_key(|&(x, r)| (r, x));
        pts.dedup();
        if let Some(min) = pts.iter().map(|p| p.0).min() {
            for p in &mut pts {
                p.0 += 1 - min;
            }
        }
        GeomBaseInstance { points: pts }
    }

    /// Brute force: three points, one per row, on a common line.
    pub fn has_collinear_triple(&self) -> bool {
        let row = |r: u8| self.points.iter().filter(move |p| p.1 == r).map(|p| p.0);
        let middle: std::collections::HashSet<i64> = row(1).map(|x| 2 * x).collect();
        row(0).any(|a| row(2).any(|c| middle.contains(&(a + c))))
    }
}

/// Each value `v` becomes `(2v, 0)`, `(2v, 2)` and `(-v, 1)`; three of the
/// points are collinear iff `a + b + c = 0` for values `a, b, c` of the
/// input, repetitions allowed.
pub fn geombase_from_3sum(numbers: &[i64]) -> GeomBaseInstance {
    let points = numbers
        .iter()
        .flat_map(|&v| [(2 * v, 0), (2 * v, 2), (-v, 1)])
        .collect();
    GeomBaseInstance { points }.normalized()
}

/// Cubic brute-force 3SUM with repetitions allowed.
pub fn brute_3sum(numbers: &[i64]) -> bool {
    numbers.iter().any(|a| {
        numbers
            .iter()
            .any(|b| numbers.iter().any(|c| a + b + c == 0))
    })
}

/// Shear parameter of the near-identity map applied to the reduction.
pub fn reduction_epsilon() -> Rational {
    Rational::new(1, 1_000_000)
}

/// `(x, y) -> (x + e*y, y + e*x)`: turns the axis-parallel rectangle sides
/// into non-vertical segments without changing which lines meet what.
pub fn reduction_map() -> LinearMap {
    let e = reduction_epsilon();
    LinearMap::new(Rational::one(), e.clone(), e, Rational::one()).expect("det = 1 - e^2")
}

/// Maps a line of the reduced instance back to the unperturbed plane.
pub fn unmap_transversal(t: &Transversal) -> Transversal {
    let inv = reduction_map().inverse();
    let (p, q) = match t {
        Transversal::Line(l) => (l.point_at(&Rational::zero()), l.point_at(&Rational::one())),
        Transversal::Vertical { vertical } => (
            Point::new(vertical.clone(), 0),
            Point::new(vertical.clone(), 1),
        ),
    };
    let (p, q) = (inv.apply(&p), inv.apply(&q));
    match crate::geom::Line::through(&p, &q) {
        Ok(l) => Transversal::Line(l),
        Err(_) => Transversal::Vertical { vertical: p.x },
    }
}

/// The stabbing instance of a GeomBase instance: one segment to stab across
/// the rectangle `(0,0)-(X+1,2)`, and its sides plus the middle row to
/// avoid, each with a gap of radius 1/4 around every input point on it.
pub fn sas_from_geombase(u: &GeomBaseInstance) -> SasInstance {
    let u = u.normalized();
    let xmax = u.points.iter().map(|p| p.0).max().unwrap_or(1);
    let q = |n: i64, d: i64| Rational::new(n, d);
    let right = Rational::from_integer(xmax + 1);
    let gap = q(1, 4);
    let map = reduction_map();
    let seg = |a: Point, b: Point| {
        Segment::closed(map.apply(&a), map.apply(&b)).expect("mapped sides are not vertical")
    };
    let mut avoid = Vec::new();
    for row in 0..=2u8 {
        let y = Rational::from_integer(row as i64);
        let mut start = Rational::zero();
        for &(x, _) in u.points.iter().filter(|p| p.1 == row) {
            let x = Rational::from_integer(x);
            avoid.push(seg(
                Point::new(start.clone(), y.clone()),
                Point::new(&x - &gap, y.clone()),
            ));
            start = &x + &gap;
        }
        avoid.push(seg(
            Point::new(start, y.clone()),
            Point::new(right.clone(), y),
        ));
    }
    for x in [Rational::zero(), right.clone()] {
        avoid.push(seg(Point::new(x.clone(), 0), Point::new(x, 2)));
    }
    let stab = vec![seg(
        Point::new(gap.clone(), q(1, 2)),
        Point::new(&right - &gap, q(1, 2)),
    )];
    SasInstance { stab, avoid }
}

/// For a solution line of the reduced instance, the three input points
/// whose gaps it passes, when those are collinear.
pub fn snap_to_points(u: &GeomBaseInstance, t: &Transversal) -> Option<[(i64, u8); 3]> {
    let u = u.normalized();
    let t = unmap_transversal(t);
    let mut hit = Vec::new();
    for row in 0..=2u8 {
        let y = Rational::from_integer(row as i64);
        let x = match &t {
            Transversal::Vertical { vertical } => vertical.clone(),
            Transversal::Line(l) => l.x_at(&y)?,
        };
        let xi = (&x + &Rational::new(1, 2)).floor();
        let xi: i64 = xi.try_into().ok()?;
        if !u.points.contains(&(xi, row)) {
            return None;
        }
        hit.push((xi, row));
    }
    (hit[0].0 + hit[2].0 == 2 * hit[1].0).then(|| [hit[0], hit[1], hit[2]])
}
