use std::fmt::Write;
use std::time::Instant;

use double_wedge::algorithms::intersect_with;
use double_wedge::constructions::{random_wedges, RandomSpec};

use crate::args::AlgoArg;
use crate::Failure;

/// `1k..64k` (doubling from the first to the last) or `100,200,400`.
pub fn parse_sizes(s: &str) -> anyhow::Result<Vec<usize>> {
    let one = |t: &str| -> anyhow::Result<usize> {
        let t = t.trim();
        let (digits, mult) = match t.strip_suffix(['k', 'K']) {
            Some(d) => (d, 1000),
            None => (t, 1),
        };
        let v: usize = digits
            .parse()
            .map_err(|_| anyhow::anyhow!("bad size {t:?}"))?;
        anyhow::ensure!(v > 0, "sizes must be positive");
        Ok(v * mult)
    };
    if let Some((lo, hi)) = s.split_once("..") {
        let (mut n, hi) = (one(lo)?, one(hi)?);
        anyhow::ensure!(n <= hi, "empty size range {s:?}");
        let mut out = Vec::new();
        while n <= hi {
            out.push(n);
            n *= 2;
        }
        Ok(out)
    } else {
        s.split(',').map(one).collect()
    }
}

/// Random instance of `n` wedges for the algorithm: bowties only for the
/// bowtie path, `floor(sqrt(n))` hourglasses for the parameterized one, a
/// quarter hourglasses otherwise.
fn instance(algo: AlgoArg, n: usize, seed: u64) -> RandomSpec {
    let h = match algo {
        AlgoArg::Bowtie => 0,
        AlgoArg::Parameterized => (n as f64).sqrt() as usize,
        _ => n / 4,
    };
    RandomSpec {
        range: (4 * n as i64).max(10),
        ..RandomSpec::new(n, h, seed)
    }
}

pub fn run(algo: AlgoArg, sizes: &[usize], seed: u64) -> Result<String, Failure> {
    let mut csv = String::from("n,algorithm,seconds\n");
    for &n in sizes {
        let wedges = random_wedges(&instance(algo, n, seed));
        let start = Instant::now();
        intersect_with(algo.algorithm(), &wedges)?;
        let secs = start.elapsed().as_secs_f64();
        writeln!(csv, "{n},{},{secs:.6}", algo.name()).expect("string write");
    }
    Ok(csv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(parse_sizes("1k..8k").unwrap(), vec![1000, 2000, 4000, 8000]);
        assert_eq!(parse_sizes("3,5").unwrap(), vec![3, 5]);
        assert!(parse_sizes("8..1").is_err());
        assert!(parse_sizes("x").is_err());
    }
}
