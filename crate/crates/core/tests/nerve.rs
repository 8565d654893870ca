use std::time::Instant;

use complicial::cat2::*;
use complicial::msset::*;
use complicial::nerve::*;

fn rs() -> MarkingPolicy {
    MarkingPolicy::RobertsStreet
}

#[test]
fn nerve_of_interval() {
    let n = duskin_nerve(&interval2(), rs(), 4).unwrap();
    assert!(n.validate().is_empty());
    assert_eq!(n.census(), vec![2, 1, 0, 0, 0]);
    let d1 = make_generator(GeneratorShape::Standard(1), 4).unwrap();
    assert!(isomorphic(&n, &d1));
}

#[test]
fn suspension_of_interval_two_simplices() {
    let n = duskin_nerve(&suspend2(&FinCategory::interval(1)), rs(), 2).unwrap();
    assert_eq!(n.count(2), 2);
    assert_eq!(n.marked_census()[2], 0);
}

#[test]
fn rs_marks_identity_fillers() {
    // in the oriental O[2] the 2-simplex with filler {0,2} <= {0,1,2} is not thin, the one
    // through {0,1,2} = {0,1,2} is
    let o = oriental2(2);
    let m = duskin_model(&o, rs(), 2).unwrap();
    for id in m.complex.cell_ids(2) {
        let s = m.simplex(id);
        assert_eq!(m.complex.is_cell_marked(id), o.is_id2(s.triangles[0]));
    }
    assert!(m.complex.marked_census()[2] > 0);
}

#[test]
fn coskeletal_in_dims_four_and_five() {
    for c in [suspend2(&FinCategory::interval(1)), oriental2(2), suspend2(&FinCategory::walking_iso())] {
        let m = DuskinModel::new(std::sync::Arc::new(c), rs(), 5).unwrap();
        for d in [4, 5] {
            coskeletal_check(&m, d).unwrap();
        }
    }
}

#[test]
fn grid_criterion_matches_reindex() {
    let p = FinCategory::rect(1, 1);
    let model = MatrixModel { base: std::sync::Arc::new(p.clone()), policy: rs() };
    for k in 0..3 {
        for l in 0..3 {
            for g in model.grids(k, l, false) {
                let by_reindex = (0..g.dim()).any(|t| g.reindex(&p, &complicial::ordinal::collapse_idempotent(g.dim(), t)) == g);
                assert_eq!(!model.grid_nondegenerate(&g), by_reindex);
            }
        }
    }
}

#[test]
fn matrix_model_is_duskin_nerve() {
    let start = Instant::now();
    for p in [FinCategory::interval(0), FinCategory::interval(1), FinCategory::walking_iso()] {
        let mat = matrix_model(&p, 5);
        let n = duskin_nerve(&suspend2(&p), rs(), 5).unwrap();
        assert_eq!(mat.census(), n.census());
        assert_eq!(mat.marked_census(), n.marked_census());
        assert!(mat.validate().is_empty());
        let f = find_isomorphism(&mat, &n, false).expect("isomorphic");
        assert!(f.is_valid() && f.is_bijective());
        let direct = matrix_duskin_map(&p, rs(), 5).unwrap();
        assert!(direct.is_valid() && direct.is_bijective() && direct.is_regular());
    }
    eprintln!("matrix vs duskin: {:?}", start.elapsed());
}

#[test]
fn natural_marking_in_matrix_coordinates() {
    let p = FinCategory::walking_iso();
    let f = matrix_duskin_map(&p, MarkingPolicy::Natural, 4).unwrap();
    assert!(f.is_valid() && f.is_bijective() && f.is_regular());
    let rs_nerve = duskin_nerve(&suspend2(&p), rs(), 4).unwrap();
    let nat = duskin_nerve(&suspend2(&p), MarkingPolicy::Natural, 4).unwrap();
    assert_eq!(rs_nerve.census(), nat.census());
    for id in rs_nerve.all_cell_ids() {
        assert!(!rs_nerve.is_cell_marked(id) || nat.is_cell_marked(id));
    }
}

#[test]
fn suspension_comparison() {
    for p in [FinCategory::interval(0), FinCategory::interval(2), FinCategory::walking_iso()] {
        let (mat, f) = susp_comparison(&p, rs(), 4).unwrap();
        assert!(f.is_valid(), "{:?}", f.check());
        assert!(f.is_injective() && f.is_regular());
        for id in f.source.all_cell_ids() {
            let g = mat.realize(f.image(id));
            assert!(g.cols() <= 1 || g.rows() == 0);
        }
    }
    let (_, f) = susp_comparison(&FinCategory::interval(0), rs(), 4).unwrap();
    assert!(f.is_bijective());
}

fn pres(a: &[usize], b: &[usize]) -> WedgePresentation {
    WedgePresentation::ends(theta2(a), theta2(b)).unwrap()
}

#[test]
fn wedge_pairs_small() {
    let wn = wedge_nerve_pairs(&pres(&[0], &[0]), rs(), 3).unwrap();
    let n2 = make_generator(GeneratorShape::Standard(2), 3).unwrap();
    assert_eq!(wn.pairs.complex.census(), n2.census());
    assert!(wn.comparison.is_valid() && wn.comparison.is_injective() && wn.comparison.is_regular());
}

#[test]
fn wedge_pairs_cross_check() {
    let start = Instant::now();
    for (a, b) in [(&[1][..], &[0][..]), (&[1], &[1]), (&[0, 0], &[1])] {
        let wn = wedge_nerve_pairs(&pres(a, b), rs(), 4).unwrap();
        assert!(wn.pairs.complex.validate().is_empty());
        let f = &wn.comparison;
        assert!(f.is_valid() && f.is_injective() && f.is_regular());
    }
    eprintln!("wedge cross-checks: {:?}", start.elapsed());
}

#[test]
fn rs_preserves_products() {
    let a = suspend2(&FinCategory::interval(1));
    let b = interval2();
    let lhs = duskin_nerve(&product2(&a, &b), rs(), 3).unwrap();
    let rhs = product(&duskin_nerve(&a, rs(), 3).unwrap(), &duskin_nerve(&b, rs(), 3).unwrap());
    assert!(isomorphic(&lhs, &rhs));
}
