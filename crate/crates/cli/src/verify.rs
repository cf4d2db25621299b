use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use double_wedge::algorithms::{bounding_lines, intersect_general, solve_sas};
use double_wedge::arrangement::Arrangement;
use double_wedge::constructions::{
    brute_3sum, geombase_from_3sum, make_grating, make_nonagon_family, random_wedges,
    sas_from_geombase, snap_to_points, RandomSpec,
};
use double_wedge::geom::{DoubleWedge, Element, Point};
use double_wedge::io::to_json;
use double_wedge::oracle::{
    audit_pool, oracle_intersect, piercing_with_lines, triple_pierceable_all, CandidatePool,
    Piercing, VerifierReport,
};

use crate::args::Verify;
use crate::commands::write_output;
use crate::Failure;

pub fn run(v: Verify) -> Result<(), Failure> {
    let reports = match v {
        Verify::Grating { k } => grating(k)?,
        Verify::Nonagon { precision } => nonagon(precision)?,
        Verify::Reduction { numbers, seed, n } => {
            let sets = match numbers {
                Some(s) => vec![s],
                None => random_sets(seed, n),
            };
            vec![reduction(&sets)]
        }
        Verify::Oracle { seed, n } => oracle(seed, n),
    };
    write_output(None, &to_json(&reports))?;
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.check.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(failed.join(", ")))
    }
}

fn all_inside(wedges: &[DoubleWedge], pts: &[Point]) -> bool {
    pts.iter().all(|p| wedges.iter().all(|d| d.contains(p)))
}

fn grating(k: usize) -> Result<Vec<VerifierReport>, Failure> {
    if k == 0 {
        return Err(Failure::Input(anyhow::anyhow!("--k must be positive")));
    }
    let want = (k + 1) * (k + 1);
    let wedges = match make_grating(k) {
        Ok(w) => w,
        Err(e) => {
            return Ok(vec![VerifierReport::fail(
                "grating",
                json!({"k": k, "error": e.to_string()}),
            )])
        }
    };
    let res = intersect_general(&wedges);
    let mut out = vec![VerifierReport::from_bool(
        "grating",
        res.component_count == want && all_inside(&wedges, &res.witnesses),
        json!({"k": k, "components": res.component_count, "expected": want}),
    )];
    if k <= 3 {
        let o = oracle_intersect(&wedges);
        out.push(VerifierReport::from_bool(
            "grating-oracle",
            o.component_count == want,
            json!({"k": k, "components": o.component_count, "expected": want}),
        ));
    }
    Ok(out)
}

fn nonagon(precision: u32) -> Result<Vec<VerifierReport>, Failure> {
    if !(4..=15).contains(&precision) {
        return Err(Failure::Input(anyhow::anyhow!(
            "--precision must be in 4..=15"
        )));
    }
    let fam = match make_nonagon_family(precision) {
        Ok(f) => f,
        Err(e) => {
            return Ok(vec![VerifierReport::fail(
                "nonagon-order-type",
                json!({"precision": precision, "error": e.to_string()}),
            )])
        }
    };
    let all = fam.elements();
    let mut out = vec![VerifierReport::pass(
        "nonagon-order-type",
        json!({"precision": precision, "shear": fam.shear}),
    )];
    let t = triple_pierceable_all(&all);
    out.push(VerifierReport::from_bool(
        "triple-pierceable",
        t.all_pierceable,
        json!(t),
    ));
    let (g1, _) = piercing_with_lines(&fam.green_elements(), 1, None)?;
    out.push(VerifierReport::from_bool(
        "greens-need-two-lines",
        g1 == Piercing::Impossible,
        json!(g1),
    ));
    let (p2, stats) = piercing_with_lines(&all, 2, Some(&fam.greens))?;
    out.push(VerifierReport::from_bool(
        "two-lines-impossible",
        p2 == Piercing::Impossible,
        json!({"answer": p2, "search": stats}),
    ));
    let (p3, stats) = piercing_with_lines(&all, 3, None)?;
    let certified = matches!(&p3, Piercing::Found(l) if all.iter().all(|e: &Element| l.iter().any(|t| t.pierces(e))));
    out.push(VerifierReport::from_bool(
        "three-lines-found",
        certified,
        json!({"answer": p3, "search": stats}),
    ));
    Ok(out)
}

fn random_sets(seed: u64, n: usize) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let len = rng.gen_range(1..=12);
            (0..len).map(|_| rng.gen_range(-20..=20)).collect()
        })
        .collect()
}

fn reduction(sets: &[Vec<i64>]) -> VerifierReport {
    let mut mismatches = Vec::new();
    let (mut yes, mut no) = (0, 0);
    for s in sets {
        let g = geombase_from_3sum(s);
        let answer = solve_sas(&sas_from_geombase(&g));
        let expected = brute_3sum(s);
        let snapped = answer.as_ref().and_then(|t| snap_to_points(&g, t));
        if answer.is_some() != expected || (expected && snapped.is_none()) {
            mismatches.push(json!({"numbers": s, "expected": expected, "line": answer}));
        }
        if expected {
            yes += 1;
        } else {
            no += 1;
        }
    }
    if mismatches.is_empty() {
        VerifierReport::pass(
            "reduction",
            json!({"sets": sets.len(), "yes": yes, "no": no}),
        )
    } else {
        VerifierReport::fail("reduction", json!(mismatches))
    }
}

fn oracle(seed: u64, n: usize) -> Vec<VerifierReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagreements = Vec::new();
    let mut audit_failures = Vec::new();
    for i in 0..n {
        let size = rng.gen_range(1..=12);
        let spec = RandomSpec {
            closed: None,
            ..RandomSpec::new(size, rng.gen_range(0..=size), rng.gen())
        };
        let w = random_wedges(&spec);
        let g = intersect_general(&w);
        let o = oracle_intersect(&w);
        if g.component_count != o.component_count
            || !all_inside(&w, &g.witnesses)
            || !all_inside(&w, &o.witnesses)
        {
            disagreements.push(json!({"instance": i, "seed": spec.seed, "general": g.component_count, "oracle": o.component_count}));
        }
        if size <= 4 {
            let lines = bounding_lines(&w);
            if let Err(e) = audit_pool(
                &Arrangement::build(&lines),
                &CandidatePool::for_lines(&lines, &[]),
            ) {
                audit_failures.push(json!({"instance": i, "seed": spec.seed, "error": e}));
            }
        }
    }
    vec![
        if disagreements.is_empty() {
            VerifierReport::pass("oracle-agreement", json!({"instances": n}))
        } else {
            VerifierReport::fail("oracle-agreement", json!(disagreements))
        },
        if audit_failures.is_empty() {
            VerifierReport::pass("pool-audit", json!({"instances": n}))
        } else {
            VerifierReport::fail("pool-audit", json!(audit_failures))
        },
    ]
}
