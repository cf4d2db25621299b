use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::geom::{DoubleWedge, Line, Parity};

/// Seeded random wedges with integer slopes and intercepts in
/// `[-range, range]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub n: usize,
    /// Number of hourglasses among the `n` wedges (placed first).
    pub hourglasses: usize,
    pub seed: u64,
    pub range: i64,
    /// `Some(c)` makes every wedge closed (`true`) or open (`false`);
    /// `None` flips a coin per wedge.
    pub closed: Option<bool>,
    /// Keep slope 0 uncovered: bowtie slopes share a sign and hourglass
    /// slopes straddle 0.
    pub uncovered: bool,
}

impl RandomSpec {
    pub fn new(n: usize, hourglasses: usize, seed: u64) -> RandomSpec {
        RandomSpec {
            n,
            hourglasses: hourglasses.min(n),
            seed,
            range: 10,
            closed: Some(true),
            uncovered: false,
        }
    }
}

pub fn random_wedges(spec: &RandomSpec) -> Vec<DoubleWedge> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let r = spec.range.max(1);
    let mut out = Vec::with_capacity(spec.n);
    while out.len() < spec.n {
        let parity = if out.len() < spec.hourglasses {
            Parity::Hourglass
        } else {
            Parity::Bowtie
        };
        let (mut a1, mut a2) = (rng.gen_range(-r..=r), rng.gen_range(-r..=r));
        if spec.uncovered {
            (a1, a2) = (a1.abs().max(1), a2.abs().max(1));
            match parity {
                Parity::Hourglass => a1 = -a1,
                Parity::Bowtie if rng.gen_bool(0.5) => (a1, a2) = (-a1, -a2),
                Parity::Bowtie => {}
            }
        }
        let l1 = Line::new(a1, rng.gen_range(-r..=r));
        let l2 = Line::new(a2, rng.gen_range(-r..=r));
        let closed = spec.closed.unwrap_or_else(|| rng.gen_bool(0.5));
        if let Ok(d) = DoubleWedge::new(l1, l2, parity, closed) {
            out.push(d);
        }
    }
    out
}
