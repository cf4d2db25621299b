use crate::algorithms::intersect_general;
use crate::error::{Error, Result};
use crate::geom::{DoubleWedge, Line, LinearMap, Point};
use crate::rational::Rational;

/// Parameters of the grating with `k` bowties and `k` hourglasses.
///
/// Bowties have origins `(d*i, 0)` and bounding slopes `+-2`. The
/// hourglasses are a quarter-turn copy of a unit-spaced bowtie grating,
/// stretched horizontally by `lambda` and moved so that its origins sit on
/// the vertical line through the middle of the bowtie grating.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GratingSpec {
    pub k: usize,
    pub bowtie_slope: Rational,
    pub spacing: Rational,
    pub hourglass_spacing: Rational,
    pub stretch: Rational,
    /// x-coordinate of the hourglass origins.
    pub center_x: Rational,
    /// y-coordinate of the lowest hourglass origin.
    pub base_y: Rational,
}

impl GratingSpec {
    pub fn new(k: usize) -> Result<GratingSpec> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "grating size k must be positive".into(),
            ));
        }
        let kr = Rational::from_integer(k as i64);
        let spacing = kr.clone();
        let km1 = Rational::from_integer(k as i64 - 1);
        let two = Rational::from_integer(2);
        Ok(GratingSpec {
            k,
            bowtie_slope: two.clone(),
            center_x: &(&spacing * &km1) / &two,
            spacing,
            hourglass_spacing: Rational::one(),
            stretch: &kr * &kr,
            base_y: -&(&km1 / &two),
        })
    }

    /// Slope magnitude of the hourglass bounding lines, `1 / (2 * lambda)`.
    pub fn hourglass_slope(&self) -> Rational {
        (&self.bowtie_slope * &self.stretch).recip()
    }

    /// The `2k` wedges: bowties first, then hourglasses. All are open, so
    /// the `(k+1)^2` regions are separated by the bounding lines and do not
    /// touch at wedge origins.
    pub fn wedges(&self) -> Vec<DoubleWedge> {
        let s = &self.bowtie_slope;
        let unit = |origin: &Point| {
            let through = |m: &Rational| Line {
                a: m.clone(),
                b: &origin.y - &(m * &origin.x),
            };
            DoubleWedge::bowtie(through(s), through(&-s), false).expect("slopes differ")
        };
        let mut out: Vec<DoubleWedge> = (0..self.k)
            .map(|i| {
                unit(&Point::new(
                    &self.spacing * &Rational::from_integer(i as i64),
                    0,
                ))
            })
            .collect();
        let turn = LinearMap::quarter_turn();
        let stretch = LinearMap::scale(self.stretch.clone(), Rational::one()).expect("nonzero");
        for j in 0..self.k {
            let along = &self.hourglass_spacing * &Rational::from_integer(j as i64);
            let d = unit(&Point::new(along, 0));
            let d = stretch
                .map_wedge(&turn.map_wedge(&d).expect("invertible"))
                .expect("invertible");
            out.push(translate(&d, &self.center_x, &self.base_y));
        }
        out
    }
}

/// Translates a wedge by `(dx, dy)`.
pub fn translate(d: &DoubleWedge, dx: &Rational, dy: &Rational) -> DoubleWedge {
    let shift = |l: &Line| Line {
        a: l.a.clone(),
        b: &(&l.b - &(&l.a * dx)) + dy,
    };
    DoubleWedge::with_boundary(shift(d.l1()), shift(d.l2()), d.parity(), d.boundary())
        .expect("translation keeps slopes")
}

/// The grating with `k` bowties and `k` hourglasses whose intersection has
/// `(k+1)^2` components. The count is checked with the general algorithm;
/// if it falls short the stretch is doubled and the check repeated.
pub fn make_grating(k: usize) -> Result<Vec<DoubleWedge>> {
    let mut spec = GratingSpec::new(k)?;
    let want = (k + 1) * (k + 1);
    for _ in 0..8 {
        let wedges = spec.wedges();
        let got = intersect_general(&wedges).component_count;
        if got == want {
            return Ok(wedges);
        }
        spec.stretch = &spec.stretch * &Rational::from_integer(2);
    }
    Err(Error::Validation(format!(
        "grating k = {k} does not reach {want} components"
    )))
}
