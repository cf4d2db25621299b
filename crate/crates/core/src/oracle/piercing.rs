use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::CandidatePool;
use crate::algorithms::decide_intersection;
use crate::algorithms::vertical_candidates;
use crate::error::{Error, Result};
use crate::geom::{
    dual_element_to_wedge, dual_point_to_line, Element, Line, Point, Segment, Transversal,
};
use crate::rational::Rational;

/// Whether `t` pierces `e`, honoring inclusion flags.
pub fn pierces(t: &Transversal, e: &Element) -> bool {
    t.pierces(e)
}

fn complement_or_segment(e: &Element) -> &Segment {
    match e {
        Element::Segment(s) => s,
        Element::Anti(a) => &a.complement,
    }
}

/// Candidate pool for primal piercing problems: the dual arrangement of all
/// endpoints, split at the dual x of every anti-segment carrier (where the
/// primal line turns parallel to it), plus vertical candidates.
pub fn element_pool<'a>(family: impl IntoIterator<Item = &'a Element> + Clone) -> CandidatePool {
    let lines: Vec<Line> = family
        .clone()
        .into_iter()
        .flat_map(|e| e.endpoints())
        .map(dual_point_to_line)
        .collect();
    let mut split: Vec<Rational> = family
        .clone()
        .into_iter()
        .filter_map(|e| match e {
            Element::Anti(a) => Some(a.carrier().a),
            Element::Segment(_) => None,
        })
        .collect();
    split.sort();
    split.dedup();
    let mut pool = CandidatePool::for_lines(&lines, &split);
    pool.vertical_candidates = vertical_candidates(family.into_iter().map(complement_or_segment));
    pool
}

fn pool_transversals(pool: &CandidatePool) -> impl Iterator<Item = Transversal> + '_ {
    pool.points
        .iter()
        .map(|p| Transversal::Line(dual_point_to_line(p)))
        .chain(
            pool.vertical_candidates
                .iter()
                .map(|x| Transversal::Vertical {
                    vertical: x.clone(),
                }),
        )
}

/// Lines through two endpoints, and vertical lines through one.
fn endpoint_lines(elems: &[&Element]) -> Vec<Transversal> {
    let pts: Vec<&Point> = elems.iter().flat_map(|e| e.endpoints()).collect();
    let mut out = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        out.push(Transversal::Vertical {
            vertical: p.x.clone(),
        });
        for q in &pts[i + 1..] {
            if let Ok(l) = Line::through(p, q) {
                out.push(Transversal::Line(l));
            }
        }
    }
    out
}

/// A line piercing all of `elems`. Lines through endpoints are tried as
/// quick certificates; then the dual wedges are intersected, and the
/// candidate pool is scanned when that answer does not certify.
fn pierce_all(elems: &[&Element]) -> Option<Transversal> {
    if let Some(t) = endpoint_lines(elems)
        .into_iter()
        .find(|t| elems.iter().all(|e| t.pierces(e)))
    {
        return Some(t);
    }
    let wedges: Vec<_> = elems.iter().map(|e| dual_element_to_wedge(e)).collect();
    if let Some(p) = decide_intersection(&wedges) {
        let t = Transversal::Line(dual_point_to_line(&p));
        if elems.iter().all(|e| t.pierces(e)) {
            return Some(t);
        }
    }
    let pool = element_pool(elems.iter().copied());
    let found = pool_transversals(&pool).find(|t| elems.iter().all(|e| t.pierces(e)));
    found
}

/// Result of [`triple_pierceable_all`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleCheck {
    pub all_pierceable: bool,
    /// Indices of the first triple, in lexicographic order, with no
    /// common piercing line.
    pub failing: Option<[usize; 3]>,
    pub triples_checked: usize,
}

/// Whether every three members of `family` have a common piercing line.
/// Vacuously true for fewer than three members.
pub fn triple_pierceable_all(family: &[Element]) -> TripleCheck {
    let n = family.len();
    let mut checked = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                checked += 1;
                if pierce_all(&[&family[i], &family[j], &family[k]]).is_none() {
                    return TripleCheck {
                        all_pierceable: false,
                        failing: Some([i, j, k]),
                        triples_checked: checked,
                    };
                }
            }
        }
    }
    TripleCheck {
        all_pierceable: true,
        failing: None,
        triples_checked: checked,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "lines", rename_all = "lowercase")]
pub enum Piercing {
    /// At most `p` lines that together pierce every member, certified.
    Found(Vec<Transversal>),
    Impossible,
}

/// Size of the search behind a [`Piercing`] answer.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PiercingStats {
    pub candidates: usize,
    pub signatures: usize,
    pub maximal: usize,
}

type Sig = Vec<u64>;

fn has(s: &Sig, i: usize) -> bool {
    s[i / 64] >> (i % 64) & 1 == 1
}

fn subset(a: &Sig, b: &Sig) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn union(a: &Sig, b: &Sig) -> Sig {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

fn first_missing(s: &Sig, n: usize) -> Option<usize> {
    (0..n).find(|&i| !has(s, i))
}

/// Searches for at most `p` lines (1 to 3) piercing every member of
/// `family`.
///
/// Every candidate line is scored by the set of members it pierces; only
/// inclusion-maximal sets are kept, and a cover is searched by branching on
/// the first uncovered member. With `prune_set` (segments that any solution
/// has to pierce between its lines) and `p = 2`, the first line must pierce
/// at least half of them.
pub fn piercing_with_lines(
    family: &[Element],
    p: usize,
    prune_set: Option<&[Segment]>,
) -> Result<(Piercing, PiercingStats)> {
    if !(1..=3).contains(&p) {
        return Err(Error::InvalidArgument(format!("p = {p} outside 1..=3")));
    }
    let n = family.len();
    if n == 0 {
        return Ok((Piercing::Found(Vec::new()), PiercingStats::default()));
    }
    let prune: Vec<Element> = prune_set
        .unwrap_or(&[])
        .iter()
        .cloned()
        .map(Element::Segment)
        .collect();
    let m = prune.len();
    let words = (n + m).div_ceil(64);
    let pool = element_pool(family.iter().chain(&prune));
    let mut stats = PiercingStats::default();
    let mut by_sig: std::collections::HashMap<Sig, Transversal> = std::collections::HashMap::new();
    let mut order: Vec<Sig> = Vec::new();
    for t in pool_transversals(&pool) {
        stats.candidates += 1;
        let mut sig = vec![0u64; words];
        for (i, e) in family.iter().chain(&prune).enumerate() {
            if t.pierces(e) {
                sig[i / 64] |= 1 << (i % 64);
            }
        }
        if let std::collections::hash_map::Entry::Vacant(slot) = by_sig.entry(sig) {
            order.push(slot.key().clone());
            slot.insert(t);
        }
    }
    stats.signatures = order.len();
    let pop = |s: &Sig| s.iter().map(|w| w.count_ones()).sum::<u32>();
    let mut sorted = order.clone();
    sorted.sort_by_key(|s| std::cmp::Reverse(pop(s)));
    let mut maximal: Vec<Sig> = Vec::new();
    for s in sorted {
        if !maximal.iter().any(|t| subset(&s, t)) {
            maximal.push(s);
        }
    }
    maximal.sort_by_key(|s| order.iter().position(|o| o == s));
    stats.maximal = maximal.len();

    let prune_hits = |s: &Sig| (n..n + m).filter(|&i| has(s, i)).count();
    let covers = |s: &Sig| first_missing(s, n).is_none();
    let chosen: Option<Vec<&Sig>> = if p == 2 && m > 0 {
        let need = m.div_ceil(2);
        maximal
            .iter()
            .filter(|a| prune_hits(a) >= need)
            .find_map(|a| {
                if covers(a) {
                    return Some(vec![a]);
                }
                maximal
                    .iter()
                    .find(|b| covers(&union(a, b)))
                    .map(|b| vec![a, b])
            })
    } else {
        cover(&maximal, &vec![0u64; words], n, p)
    };
    let Some(chosen) = chosen else {
        return Ok((Piercing::Impossible, stats));
    };
    let lines: Vec<Transversal> = chosen.iter().map(|s| by_sig[*s].clone()).collect();
    if let Some(e) = family
        .iter()
        .position(|e| !lines.iter().any(|t| t.pierces(e)))
    {
        return Err(Error::Validation(format!(
            "member {e} not pierced by the returned lines"
        )));
    }
    Ok((Piercing::Found(lines), stats))
}

fn cover<'a>(sigs: &'a [Sig], covered: &Sig, n: usize, left: usize) -> Option<Vec<&'a Sig>> {
    let Some(e) = first_missing(covered, n) else {
        return Some(Vec::new());
    };
    if left == 0 {
        return None;
    }
    sigs.iter().filter(|s| has(s, e)).find_map(|s| {
        let mut rest = cover(sigs, &union(covered, s), n, left - 1)?;
        rest.insert(0, s);
        Some(rest)
    })
}

/// Outcome counts of [`open_question_experiment`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExperimentSummary {
    pub trials: usize,
    pub triple_pierceable: usize,
    pub two_line_pierceable: usize,
    /// Trials whose family is triple-pierceable but needs three lines.
    pub needs_three: Vec<usize>,
}

/// Random families of `size` closed segments with small integer endpoints:
/// among those where every three are pierceable, how many are pierced by
/// two lines. Reports counts only.
pub fn open_question_experiment(trials: usize, size: usize, seed: u64) -> ExperimentSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = ExperimentSummary {
        trials,
        ..ExperimentSummary::default()
    };
    for trial in 0..trials {
        let mut family = Vec::with_capacity(size);
        while family.len() < size {
            let mut pt = || Point::new(rng.gen_range(-8..=8i64), rng.gen_range(-8..=8i64));
            if let Ok(s) = Segment::closed(pt(), pt()) {
                family.push(Element::Segment(s));
            }
        }
        if !triple_pierceable_all(&family).all_pierceable {
            continue;
        }
        out.triple_pierceable += 1;
        match piercing_with_lines(&family, 2, None) {
            Ok((Piercing::Found(_), _)) => out.two_line_pierceable += 1,
            _ => out.needs_three.push(trial),
        }
    }
    out
}
