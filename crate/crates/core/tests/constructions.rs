use double_wedge::algorithms::{
    find_uncovered_slope, intersect_general, solve_sas, CoverageVerdict,
};
use double_wedge::constructions::*;
use double_wedge::geom::{orientation, Element, Line, Point, Transversal};
use double_wedge::oracle::{piercing_with_lines, triple_pierceable_all, Piercing};

#[test]
fn grating_invariants() {
    for k in 1..=4 {
        let w = make_grating(k).unwrap();
        assert_eq!(w.len(), 2 * k);
        assert_eq!(w.iter().filter(|d| d.is_bowtie()).count(), k);
        assert_eq!(
            find_uncovered_slope(&w).verdict,
            CoverageVerdict::FullyCovered
        );
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                assert_ne!(w[i], w[j]);
            }
        }
        assert_eq!(intersect_general(&w).component_count, (k + 1) * (k + 1));
    }
    assert!(make_grating(0).is_err());
}

#[test]
fn nonagon_shape() {
    let f = make_nonagon_family(6).unwrap();
    assert_eq!(f.elements().len(), 36);
    assert_eq!(f.points[0], Point::new(1, 0));
    for i in 0..9 {
        for j in i + 1..9 {
            for k in j + 1..9 {
                assert_eq!(orientation(&f.points[i], &f.points[j], &f.points[k]), 1);
            }
        }
    }
    for (k, g) in f.greens.iter().enumerate() {
        let ends = [&g.p, &g.q];
        assert!(ends.contains(&&f.points[k]) && ends.contains(&&f.points[(k + 3) % 9]));
    }
    for r in &f.reds {
        assert!(!r.complement.include_p && !r.complement.include_q);
    }
    for q in &f.purples {
        assert!(q.complement.include_p && q.complement.include_q);
    }
}

/// Lines through `p4, p6` and through `p1, p3` cut off single vertices.
/// Together they meet every green segment, and no red or purple complement
/// is crossed by both, so two lines pierce the whole family.
#[test]
fn two_vertex_chords_pierce_the_family() {
    let f = make_nonagon_family(6).unwrap();
    let p = &f.points;
    let lines = [
        Transversal::Line(Line::through(&p[4], &p[6]).unwrap()),
        Transversal::Line(Line::through(&p[1], &p[3]).unwrap()),
    ];
    let missed: Vec<usize> = (0..36)
        .filter(|&i| !lines.iter().any(|t| t.pierces(&f.elements()[i])))
        .collect();
    assert_eq!(missed, Vec::<usize>::new());
}

#[test]
fn nonagon_verdicts_are_stable_under_precision() {
    let verdicts = |prec: u32| {
        let f = make_nonagon_family(prec).unwrap();
        let all: Vec<Element> = f.elements();
        let triples = triple_pierceable_all(&all).all_pierceable;
        let two = matches!(
            piercing_with_lines(&all, 2, Some(&f.greens)).unwrap().0,
            Piercing::Found(_)
        );
        (triples, two)
    };
    let v6 = verdicts(6);
    let v8 = verdicts(8);
    let v10 = verdicts(10);
    assert_eq!(v6, v8);
    assert_eq!(v8, v10);
}

#[test]
fn greens_need_two_lines() {
    let f = make_nonagon_family(6).unwrap();
    assert_eq!(
        piercing_with_lines(&f.green_elements(), 1, None).unwrap().0,
        Piercing::Impossible
    );
}

#[test]
fn three_sum_to_geombase() {
    assert!(geombase_from_3sum(&[1, 2, -3]).has_collinear_triple());
    assert!(!geombase_from_3sum(&[1, 2, 3]).has_collinear_triple());
    assert!(geombase_from_3sum(&[0]).has_collinear_triple());
    for set in [vec![4, -7, 9, 3], vec![5, 5, -10], vec![-1, -2, 6, 8]] {
        assert_eq!(
            geombase_from_3sum(&set).has_collinear_triple(),
            brute_3sum(&set),
            "{set:?}"
        );
    }
}

#[test]
fn reduction_witnesses_snap_to_collinear_points() {
    for set in [
        vec![1, 2, -3],
        vec![0],
        vec![7, -3, -4, 11],
        vec![5, -10, 2],
    ] {
        let g = geombase_from_3sum(&set);
        let inst = sas_from_geombase(&g);
        assert_eq!(inst.avoid.len(), 5 + g.points.len());
        let t = solve_sas(&inst).expect("yes instance");
        let [a, b, c] = snap_to_points(&g, &t).expect("snaps to three points");
        assert_eq!((a.1, b.1, c.1), (0, 1, 2));
        assert_eq!(a.0 + c.0, 2 * b.0);
    }
}

#[test]
fn random_generator_is_seeded() {
    let s = RandomSpec::new(20, 5, 99);
    assert_eq!(random_wedges(&s), random_wedges(&s));
    assert_ne!(
        random_wedges(&s),
        random_wedges(&RandomSpec::new(20, 5, 100))
    );
}
