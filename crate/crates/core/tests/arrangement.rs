use double_wedge::algorithms::bounding_lines;
use double_wedge::arrangement::{
    build_arrangement, components_of, depth_labels, render_svg, Arrangement, Cell, CellSet,
    SvgOptions,
};
use double_wedge::geom::{DoubleWedge, Line, Parity};
use double_wedge::oracle::{audit_pool, CandidatePool};
use double_wedge::rational::q;
use proptest::prelude::*;

fn small_line() -> impl Strategy<Value = Line> {
    (-4i64..=4, 1i64..=2, -6i64..=6).prop_map(|(a, d, b)| Line::new(q(a, d), b))
}

fn wedges() -> impl Strategy<Value = Vec<DoubleWedge>> {
    prop::collection::vec(
        (small_line(), small_line(), any::<bool>(), any::<bool>()),
        0..8,
    )
    .prop_map(|v| {
        v.into_iter()
            .filter(|(l1, l2, ..)| l1.a != l2.a)
            .map(|(l1, l2, bowtie, closed)| {
                let parity = if bowtie {
                    Parity::Bowtie
                } else {
                    Parity::Hourglass
                };
                DoubleWedge::new(l1, l2, parity, closed).unwrap()
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dcel_is_consistent(lines in prop::collection::vec(small_line(), 0..12)) {
        let arr = build_arrangement(&lines);
        prop_assert_eq!(arr.audit(), Ok(()));
    }

    #[test]
    fn depths_match_a_recount(w in wedges()) {
        let arr = Arrangement::build(&bounding_lines(&w));
        let depth = depth_labels(&arr, &w).unwrap();
        for c in arr.cells() {
            let p = arr.cell_point(c);
            let b = w.iter().filter(|d| d.is_bowtie() && d.contains(&p)).count();
            let h = w.iter().filter(|d| d.is_hourglass() && d.contains(&p)).count();
            prop_assert_eq!(depth.split(c), (b, h), "cell {:?}", c);
        }
    }

    #[test]
    fn pool_samples_every_cell(lines in prop::collection::vec(small_line(), 0..8)) {
        let arr = build_arrangement(&lines);
        prop_assert_eq!(audit_pool(&arr, &CandidatePool::for_lines(&lines, &[])), Ok(()));
    }
}

#[test]
fn components_glue_at_shared_vertices() {
    // two closed opposite quadrants touching at the origin form one piece
    let arr = build_arrangement(&[Line::new(1, 0), Line::new(-1, 0)]);
    let inside = |c: Cell| {
        let p = arr.cell_point(c);
        let (u, v) = (Line::new(1, 0).side(&p), Line::new(-1, 0).side(&p));
        u >= 0 && v >= 0 || u <= 0 && v <= 0
    };
    let quads = CellSet::from_cells(arr.cells().filter(|&c| inside(c)));
    assert_eq!(components_of(&arr, &quads).count, 1);
    let open = CellSet::from_cells(arr.cells().filter(|&c| {
        let p = arr.cell_point(c);
        Line::new(1, 0).side(&p) * Line::new(-1, 0).side(&p) == 1
    }));
    assert_eq!(components_of(&arr, &open).count, 2);
}

#[test]
fn statistics_and_svg_are_stable() {
    let lines = [Line::new(1, 0), Line::new(-1, 0), Line::new(0, 1)];
    let arr = build_arrangement(&lines);
    let all = CellSet::from_cells(arr.cells());
    let stats = arr.stats(components_of(&arr, &all).count);
    assert_eq!((stats.vertices, stats.edges, stats.faces), (3, 9, 7));
    assert_eq!(stats.component_count, 1);
    let a = render_svg(&arr, &all, &SvgOptions::default());
    let b = render_svg(&build_arrangement(&lines), &all, &SvgOptions::default());
    assert_eq!(a, b);
    assert!(a.starts_with("<svg"));
}
