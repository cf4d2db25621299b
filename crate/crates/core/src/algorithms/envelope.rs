//! Piecewise-linear lower and upper envelopes of bowties.
//!
//! A bowtie meets the vertical line at `x` in the interval between
//! `min(l1(x), l2(x))` and `max(l1(x), l2(x))`, so a family of bowties meets
//! it in `[Lo(x), U(x)]` where `Lo` is the maximum of the lower functions and
//! `U` the minimum of the upper ones. Each envelope records, on every piece
//! and at every breakpoint, the wedges attaining it; those are the only
//! wedges whose boundary convention matters for points on the envelope.

use std::cmp::Ordering;

use crate::geom::{crossing, DoubleWedge, Line};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    /// Maximum of the lower functions.
    Lower,
    /// Minimum of the upper functions.
    Upper,
}

impl Side {
    /// Whether `a` is the better (envelope-forming) value compared to `b`.
    fn cmp_better(self, a: &Rational, b: &Rational) -> Ordering {
        match self {
            Side::Lower => a.cmp(b),
            Side::Upper => b.cmp(a),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Piece {
    pub line: Line,
    pub owners: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Break {
    pub x: Rational,
    pub y: Rational,
    pub tight: Vec<u32>,
}

/// `pieces[i]` is valid between `breaks[i - 1].x` and `breaks[i].x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Envelope {
    pub side: Side,
    pub pieces: Vec<Piece>,
    pub breaks: Vec<Break>,
}

fn union(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    out
}

/// Some x strictly inside the interval `(lo, hi)`.
fn sample(lo: Option<&Rational>, hi: Option<&Rational>) -> Rational {
    match (lo, hi) {
        (Some(a), Some(b)) => Rational::midpoint(a, b),
        (None, Some(b)) => b - &Rational::one(),
        (Some(a), None) => a + &Rational::one(),
        (None, None) => Rational::zero(),
    }
}

impl Envelope {
    /// The lower or upper function of bowtie `id`.
    pub fn of_bowtie(d: &DoubleWedge, id: u32, side: Side) -> Envelope {
        let (steep, flat) = if d.l1().a > d.l2().a {
            (d.l1(), d.l2())
        } else {
            (d.l2(), d.l1())
        };
        // left of the origin the steeper line is the lower one
        let (left, right) = match side {
            Side::Lower => (steep, flat),
            Side::Upper => (flat, steep),
        };
        let o = d.origin();
        Envelope {
            side,
            pieces: vec![
                Piece {
                    line: left.clone(),
                    owners: vec![id],
                },
                Piece {
                    line: right.clone(),
                    owners: vec![id],
                },
            ],
            breaks: vec![Break {
                x: o.x,
                y: o.y,
                tight: vec![id],
            }],
        }
    }

    /// Envelope of all bowties by pairwise merging; `None` when empty.
    pub fn of_bowties(wedges: &[DoubleWedge], side: Side) -> Option<Envelope> {
        let mut level: Vec<Envelope> = wedges
            .iter()
            .enumerate()
            .map(|(i, d)| Envelope::of_bowtie(d, i as u32, side))
            .collect();
        while level.len() > 1 {
            let mut next = Vec::with_capacity(level.len().div_ceil(2));
            let mut it = level.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(Envelope::merge(&a, &b)),
                    None => next.push(a),
                }
            }
            level = next;
        }
        level.pop()
    }

    /// Index of the piece containing `x` in its open interval, or the index
    /// of the breakpoint at `x`.
    fn locate(&self, x: &Rational) -> Result<usize, usize> {
        match self.breaks.binary_search_by(|b| b.x.cmp(x)) {
            Ok(i) => Err(i),
            Err(i) => Ok(i),
        }
    }

    /// Envelope value at `x` and the wedges attaining it.
    pub fn eval(&self, x: &Rational) -> (Rational, &[u32]) {
        match self.locate(x) {
            Ok(p) => (self.pieces[p].line.eval(x), &self.pieces[p].owners),
            Err(b) => (self.breaks[b].y.clone(), &self.breaks[b].tight),
        }
    }

    /// Pushes a piece, dropping the preceding breakpoint when it carries no
    /// information.
    fn push_piece(pieces: &mut Vec<Piece>, breaks: &mut Vec<Break>, p: Piece) {
        if let (Some(last), Some(b)) = (pieces.last(), breaks.last()) {
            if pieces.len() == breaks.len() + 1 {
                unreachable!("piece pushed without a breakpoint");
            }
            if last.line == p.line && last.owners == p.owners && b.tight == p.owners {
                breaks.pop();
                return;
            }
        }
        pieces.push(p);
    }

    pub fn merge(a: &Envelope, b: &Envelope) -> Envelope {
        let side = a.side;
        debug_assert_eq!(side, b.side);
        let mut xs: Vec<&Rational> = a.breaks.iter().chain(&b.breaks).map(|br| &br.x).collect();
        xs.sort();
        xs.dedup();
        let mut pieces: Vec<Piece> = Vec::new();
        let mut breaks: Vec<Break> = Vec::new();
        let (mut ia, mut ib) = (0usize, 0usize);
        for j in 0..=xs.len() {
            let lo = if j == 0 { None } else { Some(xs[j - 1]) };
            let hi = xs.get(j).copied();
            let pa = &a.pieces[ia];
            let pb = &b.pieces[ib];
            if pa.line == pb.line {
                Self::push_piece(
                    &mut pieces,
                    &mut breaks,
                    Piece {
                        line: pa.line.clone(),
                        owners: union(&pa.owners, &pb.owners),
                    },
                );
            } else {
                let inside = crossing(&pa.line, &pb.line)
                    .filter(|c| lo.is_none_or(|l| l < &c.x) && hi.is_none_or(|h| &c.x < h));
                let better = |lo: Option<&Rational>, hi: Option<&Rational>| {
                    let x = sample(lo, hi);
                    match side.cmp_better(&pa.line.eval(&x), &pb.line.eval(&x)) {
                        Ordering::Less => pb.clone(),
                        _ => pa.clone(),
                    }
                };
                match inside {
                    Some(c) => {
                        Self::push_piece(&mut pieces, &mut breaks, better(lo, Some(&c.x)));
                        breaks.push(Break {
                            tight: union(&pa.owners, &pb.owners),
                            x: c.x.clone(),
                            y: c.y,
                        });
                        Self::push_piece(&mut pieces, &mut breaks, better(Some(&c.x), hi));
                    }
                    None => Self::push_piece(&mut pieces, &mut breaks, better(lo, hi)),
                }
            }
            let Some(x) = hi else { break };
            let (va, ta) = match a.breaks.get(ia) {
                Some(br) if &br.x == x => {
                    ia += 1;
                    (br.y.clone(), &br.tight)
                }
                _ => (pa.line.eval(x), &pa.owners),
            };
            let (vb, tb) = match b.breaks.get(ib) {
                Some(br) if &br.x == x => {
                    ib += 1;
                    (br.y.clone(), &br.tight)
                }
                _ => (pb.line.eval(x), &pb.owners),
            };
            let (y, tight) = match side.cmp_better(&va, &vb) {
                Ordering::Greater => (va, ta.clone()),
                Ordering::Less => (vb, tb.clone()),
                Ordering::Equal => (va, union(ta, tb)),
            };
            breaks.push(Break {
                x: x.clone(),
                y,
                tight,
            });
        }
        Envelope {
            side,
            pieces,
            breaks,
        }
    }
}
