use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{crossing, orientation, AntiSegment, Element, Line, Point, Segment};
use crate::rational::Rational;

/// Family of 9 segments and 27 anti-segments on a rationalized regular
/// 9-gon in which any three members have a common piercing line but no two
/// lines pierce all members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonagonFamily {
    #[serde(skip)]
    pub precision: u32,
    /// Horizontal shear `(x, y) -> (x + shear * y, y)` applied after
    /// rounding, which keeps every chord of the 9-gon non-vertical.
    #[serde(skip)]
    pub shear: Rational,
    #[serde(skip)]
    pub points: Vec<Point>,
    #[serde(skip)]
    pub w: Vec<Point>,
    /// `g_k = [p_k, p_{k+3}]`.
    pub greens: Vec<Segment>,
    /// `r_k`: the line through `p_k, p_{k+4}` minus the open segment
    /// between them.
    pub reds: Vec<AntiSegment>,
    /// `q_0, q~_0, q_1, q~_1, ...` with closed complements.
    pub purples: Vec<AntiSegment>,
}

impl NonagonFamily {
    /// All 36 members: greens, reds, purples.
    pub fn elements(&self) -> Vec<Element> {
        self.greens
            .iter()
            .cloned()
            .map(Element::Segment)
            .chain(self.reds.iter().cloned().map(Element::Anti))
            .chain(self.purples.iter().cloned().map(Element::Anti))
            .collect()
    }

    /// The green segments as elements.
    pub fn green_elements(&self) -> Vec<Element> {
        self.greens.iter().cloned().map(Element::Segment).collect()
    }
}

/// `v` rounded to `digits` decimals.
fn round_decimal(v: f64, digits: u32) -> Rational {
    let s = format!("{:.*}", digits as usize, v);
    let negative = s.starts_with('-');
    let mantissa: i64 = s.replace(['-', '.'], "").parse().expect("formatted float");
    Rational::from_decimal_digits(if negative { -mantissa } else { mantissa }, digits)
}

/// Vertices of the regular 9-gon rounded to `precision` decimals.
pub fn nonagon_points(precision: u32) -> Vec<Point> {
    (0..9)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / 9.0;
            Point {
                x: round_decimal(t.cos(), precision),
                y: round_decimal(t.sin(), precision),
            }
        })
        .collect()
}

fn line(p: &Point, q: &Point) -> Result<Line> {
    Line::through(p, q)
}

fn meet(a: &Line, b: &Line) -> Result<Point> {
    crossing(a, b).ok_or_else(|| Error::Validation("parallel construction lines".into()))
}

/// Builds the family. `precision` (decimal digits, 4..=15) controls the
/// rounding of the 9-gon; the rounded points must have the order type of
/// the regular 9-gon.
pub fn make_nonagon_family(precision: u32) -> Result<NonagonFamily> {
    if !(4..=15).contains(&precision) {
        return Err(Error::InvalidArgument(format!(
            "precision {precision} outside 4..=15"
        )));
    }
    let rounded = nonagon_points(precision);
    for i in 0..9 {
        for j in i + 1..9 {
            for k in j + 1..9 {
                if orientation(&rounded[i], &rounded[j], &rounded[k]) != 1 {
                    return Err(Error::Validation(format!(
                        "points {i}, {j}, {k} lost convex position at precision {precision}"
                    )));
                }
            }
        }
    }
    for den in 4..64 {
        let shear = Rational::new(1, den);
        let points: Vec<Point> = rounded
            .iter()
            .map(|p| Point {
                x: &p.x + &(&shear * &p.y),
                y: p.y.clone(),
            })
            .collect();
        if let Ok(f) = assemble(precision, shear, points) {
            return Ok(f);
        }
    }
    Err(Error::Validation(
        "no shear keeps the family non-vertical".into(),
    ))
}

fn assemble(precision: u32, shear: Rational, p: Vec<Point>) -> Result<NonagonFamily> {
    let at = |i: usize| &p[i % 9];
    let greens: Vec<Segment> = (0..9)
        .map(|k| Segment::closed(at(k).clone(), at(k + 3).clone()))
        .collect::<Result<_>>()?;
    let reds: Vec<AntiSegment> = (0..9)
        .map(|k| Segment::open(at(k).clone(), at(k + 4).clone()).map(AntiSegment::new))
        .collect::<Result<_>>()?;
    let green_line = |k: usize| greens[k % 9].carrier();
    let mut w = Vec::with_capacity(9);
    let mut purples = Vec::with_capacity(18);
    for k in 0..9 {
        let wk = meet(&line(at(k + 8), at(k))?, &line(at(k + 1), at(k + 2))?)?;
        let e1 = meet(&green_line(k + 2), &green_line(k + 4))?;
        let e2 = meet(&green_line(k + 3), &green_line(k + 5))?;
        purples.push(AntiSegment::new(Segment::closed(wk.clone(), e1)?));
        purples.push(AntiSegment::new(Segment::closed(wk.clone(), e2)?));
        w.push(wk);
    }
    Ok(NonagonFamily {
        precision,
        shear,
        points: p,
        w,
        greens,
        reds,
        purples,
    })
}
