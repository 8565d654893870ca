use std::time::Instant;

use complicial::anodyne::*;
use complicial::cat2::{suspend2, theta2, FinCategory, WedgePresentation};
use complicial::msset::{find_isomorphism, SimplexModel};
use complicial::nerve::{
    duskin_nerve, matrix_model_complex, matrix_to_duskin, MarkingPolicy, MatrixModel, MatrixSimplex,
};

fn wedge_of(k1: usize, k2: usize) -> WedgePresentation {
    WedgePresentation::ends(suspend2(&FinCategory::interval(k1)), suspend2(&FinCategory::interval(k2))).unwrap()
}

/// A grid in a poset given by its objects; arrows are the unique ones.
fn poset_grid(p: &FinCategory, rows: usize, cols: usize, objects: &[usize]) -> MatrixSimplex {
    let at = |i: usize, c: usize| objects[i * cols + c];
    let arrow = |a: usize, b: usize| p.hom(a, b)[0];
    let mut vertical = Vec::new();
    for i in 0..rows - 1 {
        for c in 0..cols {
            vertical.push(arrow(at(i, c), at(i + 1, c)));
        }
    }
    let mut horizontal = Vec::new();
    for i in 0..rows {
        for c in 1..cols {
            horizontal.push(arrow(at(i, c), at(i, c - 1)));
        }
    }
    MatrixSimplex { k: rows as isize - 1, l: cols as isize - 1, objects: objects.to_vec(), vertical, horizontal }
}

#[test]
fn worked_example_classifies() {
    // objects of [3]×[2]^op are (i, j) at index i*3 + j
    let p = FinCategory::rect(3, 2);
    let o = |i: usize, j: usize| i * 3 + j;
    let model = MatrixModel { base: p.clone().into(), policy: MarkingPolicy::RobertsStreet };
    let suspect_grid = poset_grid(
        &p,
        4,
        3,
        &[o(0, 0), o(0, 1), o(0, 2), o(1, 0), o(1, 1), o(1, 2), o(1, 0), o(1, 0), o(1, 0), o(3, 0), o(3, 0), o(3, 0)],
    );
    let plain_grid = poset_grid(
        &p,
        4,
        3,
        &[o(0, 0), o(0, 1), o(0, 2), o(1, 0), o(1, 1), o(1, 2), o(2, 0), o(2, 0), o(2, 0), o(3, 0), o(3, 0), o(3, 0)],
    );
    assert_eq!(suspect_grid.dim(), 6);
    assert_eq!(classify_susp(&model, &suspect_grid), SuspClassification { k: 3, r: 2, suspect: true });
    assert_eq!(classify_susp(&model, &plain_grid), SuspClassification { k: 3, r: 2, suspect: false });
    assert!(!model.is_degenerate(&suspect_grid));

    let faces: Vec<_> = (0..=6).map(|a| classify_susp(&model, &model.face(&suspect_grid, a))).collect();
    assert!(faces[0].suspect);
    assert!(faces[1].r <= 1);
    assert_eq!((faces[2].k, faces[2].r), (2, 2));
    assert!(faces[3].suspect);
    for f in &faces[4..] {
        assert_eq!(f.k, 3);
    }
}

#[test]
fn face_tables_suspension() {
    for p in [FinCategory::interval(1), FinCategory::interval(2)] {
        let mat = matrix_model_complex(&p, MarkingPolicy::RobertsStreet, 5);
        let report = check_face_tables_susp(&mat, 5);
        assert!(report.is_clean(), "{:?}", &report.violations[..report.violations.len().min(3)]);
        assert!(report.checked > 0);
    }
}

#[test]
fn face_tables_wedge() {
    for (a, b) in [(0, 0), (1, 0), (1, 1)] {
        let wn = wedge_context(&wedge_of(a, b), 4).unwrap();
        let report = check_face_tables_wedge(&wn.pairs, 5);
        assert!(report.is_clean(), "{:?}", &report.violations[..report.violations.len().min(3)]);
        // only a right factor with nontrivial 2-cells into its bottom object needs the corrected row
        assert_eq!(report.corrected > 0, b > 0, "({a},{b})");
    }
}

#[test]
fn suspension_replays_both_modes() {
    for p in [FinCategory::interval(0), FinCategory::interval(1), FinCategory::walking_iso()] {
        let ctx = SuspensionContext::new(&p, 4).unwrap();
        for mode in [Mode::Marked, Mode::Unmarked] {
            let cert = build_cert_suspension(&ctx, mode, "p").unwrap();
            let summary = replay(&cert, &ctx.comparison, mode).unwrap_or_else(|e| panic!("{e}"));
            assert_eq!(summary.steps, cert.steps.len());
        }
        let marked = build_cert_suspension(&ctx, Mode::Marked, "p").unwrap();
        replay(&marked, &ctx.comparison, Mode::Unmarked).unwrap();
    }
}

#[test]
fn marked_suspension_faces_keep_their_two_cell() {
    let p = FinCategory::walking_iso();
    let ctx = SuspensionContext::new(&p, 4).unwrap();
    let cert = build_cert_suspension(&ctx, Mode::Marked, "iso").unwrap();
    let mat = &ctx.matrix;
    let low: Vec<_> = cert.steps.iter().filter(|s| s.horn_dim == 3).collect();
    assert!(!low.is_empty());
    for step in low {
        let filler = mat.simplex(step.filler);
        let tau = mat.simplex(step.face);
        let second = mat.model.face(filler, 2);
        assert_eq!(matrix_to_duskin(&second, &p).triangles, matrix_to_duskin(tau, &p).triangles);
    }
    // every marked step has its outer faces marked in the target
    let mut marked_steps = 0;
    for step in cert.steps.iter().filter(|s| s.variant == Variant::Marked) {
        marked_steps += 1;
        let filler = mat.simplex(step.filler);
        for a in [step.horn_index - 1, step.horn_index + 1] {
            assert!(mat.complex.is_marked(&mat.locate(&mat.model.face(filler, a)).unwrap()));
        }
    }
    assert!(marked_steps > 0);
}

#[test]
fn wedge_replays_both_modes() {
    for (a, b) in [(0, 0), (1, 0), (1, 1)] {
        let wn = wedge_context(&wedge_of(a, b), 4).unwrap();
        for mode in [Mode::Marked, Mode::Unmarked] {
            let cert = build_cert_wedge(&wn, 4, mode, "w").unwrap();
            replay(&cert, &wn.comparison, mode).unwrap_or_else(|e| panic!("({a},{b}) {mode:?}: {e}"));
        }
    }
}

#[test]
fn spine_is_a_single_step() {
    let wn = wedge_context(&wedge_of(0, 0), 5).unwrap();
    let cert = build_cert_wedge(&wn, 5, Mode::Marked, "spine").unwrap();
    assert_eq!(cert.steps.len(), 1);
    let step = &cert.steps[0];
    assert_eq!((step.horn_dim, step.horn_index), (2, 1));
    assert!(matches!(step.stage, Stage::Wedge { d: 1, r: 1, .. }));
}

#[test]
fn chained_spine() {
    let chain = chain_wedge_certificates(&[0, 0, 0], 3, Mode::Marked).unwrap();
    replay_from(&chain.certificate, &chain.initial, &chain.target, Mode::Marked).unwrap();
    let direct = duskin_nerve(&theta2(&[0, 0, 0]), MarkingPolicy::RobertsStreet, 4).unwrap();
    assert!(find_isomorphism(&chain.target, &direct, false).is_some());
}

#[test]
fn chained_wedge_of_two_cells() {
    let start = Instant::now();
    let chain = chain_wedge_certificates(&[1, 1, 0], 3, Mode::Marked).unwrap();
    replay_from(&chain.certificate, &chain.initial, &chain.target, Mode::Marked).unwrap();
    eprintln!("chain [1,1,0] through 3 in {:?}", start.elapsed());
}

#[test]
fn tampered_certificates_fail() {
    let ctx = SuspensionContext::new(&FinCategory::interval(2), 3).unwrap();
    let cert = build_cert_suspension(&ctx, Mode::Marked, "p").unwrap();
    assert!(cert.steps.len() > 2);

    let mut dropped = cert.clone();
    dropped.steps.remove(0);
    assert!(replay(&dropped, &ctx.comparison, Mode::Marked).is_err());

    let mut swapped = cert.clone();
    let last = swapped.steps.len() - 1;
    swapped.steps.swap(0, last);
    assert!(replay(&swapped, &ctx.comparison, Mode::Marked).is_err());

    let mut outer = cert.clone();
    outer.steps[0].horn_index = 0;
    assert!(replay(&outer, &ctx.comparison, Mode::Marked).is_err());

    let mut doubled = cert.clone();
    let first = doubled.steps[0].clone();
    doubled.steps.insert(1, first);
    assert!(replay(&doubled, &ctx.comparison, Mode::Marked).is_err());
}

#[test]
fn lambda_prime_needs_thinness() {
    for (m, k) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
        let (cert, source) = decompose_lambda_prime(m, k).unwrap();
        assert_eq!(cert.steps.len(), 2);
        replay_with_thinness(&cert, &source).unwrap_or_else(|e| panic!("({m},{k}): {e}"));
        assert!(replay(&cert, &source, Mode::Marked).is_err());
    }
}

#[test]
fn certificates_are_deterministic() {
    let ctx = SuspensionContext::new(&FinCategory::walking_iso(), 3).unwrap();
    let a = build_cert_suspension(&ctx, Mode::Marked, "iso").unwrap();
    let ctx2 = SuspensionContext::new(&FinCategory::walking_iso(), 3).unwrap();
    let b = build_cert_suspension(&ctx2, Mode::Marked, "iso").unwrap();
    assert_eq!(a, b);
}
