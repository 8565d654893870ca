use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use complicial::msset::*;
use proptest::prelude::*;

/// The subcomplex of `Δ[n]` generated by `tops`, with the listed cells marked.
fn subcomplex(n: usize, tops: &[u64], marks: &[u64], truncation: usize) -> MarkedSimplicialSet {
    let mut family: BTreeSet<u64> = BTreeSet::new();
    for &t in tops {
        let t = t & ((1 << (n + 1)) - 1);
        let mut sub = t;
        // all nonempty submasks
        while sub > 0 {
            family.insert(sub);
            sub = (sub - 1) & t;
        }
    }
    let mut x = MarkedSimplicialSet::new(truncation);
    let mut ids: HashMap<u64, CellId> = HashMap::new();
    for dim in 0..=n.min(truncation) {
        for &mask in family.iter().filter(|m| m.count_ones() as usize == dim + 1) {
            let vertices: Vec<u64> = (0..=n as u64).filter(|&v| mask >> v & 1 == 1).collect();
            let faces = if dim == 0 {
                Vec::new()
            } else {
                vertices.iter().map(|v| SimplexRef::nondegenerate(ids[&(mask & !(1 << v))])).collect()
            };
            let marked = dim > 0 && marks.contains(&mask);
            ids.insert(mask, x.push_cell(dim, faces, marked, None));
        }
    }
    x
}

fn small_complex() -> impl Strategy<Value = MarkedSimplicialSet> {
    (1usize..=4)
        .prop_flat_map(|n| {
            let top = 1u64 << (n + 1);
            (Just(n), prop::collection::vec(1..top, 1..4), prop::collection::vec(1..top, 0..6))
        })
        .prop_map(|(n, tops, marks)| subcomplex(n, &tops, &marks, 4))
}

fn standard(m: usize) -> MarkedSimplicialSet {
    make_generator(GeneratorShape::Standard(m), m).unwrap()
}

#[test]
fn join_with_a_point_is_the_next_simplex() {
    for l in 0..=4 {
        let j = join(&standard(l), &standard(0).with_truncation(l));
        assert!(j.validate().is_empty());
        let target = make_generator(GeneratorShape::Standard(l + 1), j.truncation()).unwrap();
        assert!(find_isomorphism(&j, &target, false).is_some(), "Δ[{l}]⋆Δ[0]");
    }
}

#[test]
fn join_unit() {
    let empty = make_generator(GeneratorShape::Empty, 3).unwrap();
    for x in [standard(2), make_generator(GeneratorShape::Complicial(3, 1), 3).unwrap()] {
        let left = join(&empty, &x);
        let right = join(&x, &empty);
        let t = x.truncation();
        assert!(find_isomorphism(&left.truncate(t).unwrap(), &x, false).is_some());
        assert!(find_isomorphism(&right.truncate(t).unwrap(), &x, false).is_some());
    }
}

#[test]
fn join_edge_count() {
    let j = join(&standard(1).with_truncation(2), &standard(1).with_truncation(2));
    assert_eq!(j.total_count(1), 10);
    assert!(find_isomorphism(&j, &make_generator(GeneratorShape::Standard(3), 3).unwrap(), false).is_some());
}

/// `|X_k|` with `|X_{-1}| = 1`.
fn augmented(x: &MarkedSimplicialSet, k: isize) -> u128 {
    if k < 0 {
        1
    } else {
        x.total_count(k as usize)
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, ..ProptestConfig::default() })]

    #[test]
    fn join_count_formula(x in small_complex(), y in small_complex()) {
        let j = join_model(&x, &y);
        prop_assert!(j.complex.validate().is_empty());
        for m in 0..=j.truncation() {
            let expected: u128 = (-1..=m as isize).map(|k| augmented(&x, k) * augmented(&y, m as isize - 1 - k)).sum();
            prop_assert_eq!(j.complex.total_count(m), expected, "dimension {}", m);
        }
        for id in j.complex.all_cell_ids().filter(|id| id.dim > 0) {
            let s = j.simplex(id);
            let marked = s.left.as_ref().is_some_and(|r| x.is_marked(r)) || s.right.as_ref().is_some_and(|r| y.is_marked(r));
            prop_assert_eq!(j.complex.is_cell_marked(id), marked);
        }
    }

    #[test]
    fn suspension_census(x in small_complex()) {
        let s = suspend(&x);
        prop_assert!(s.validate().is_empty());
        prop_assert_eq!(s.truncation(), x.truncation() + 1);
        for m in 0..=5 {
            let expected: u128 = 2 + (0..m).map(|j| x.total_count(j)).sum::<u128>();
            prop_assert_eq!(s.total_count(m), expected, "dimension {}", m);
        }
        for m in 1..=5 {
            prop_assert_eq!(s.count(m), x.count(m - 1));
            prop_assert_eq!(s.marked_census()[m], if m >= 2 { x.marked_census()[m - 1] } else { 0 });
        }
    }
}

#[test]
fn suspension_of_a_point() {
    let s = suspend(&standard(0));
    assert!(find_isomorphism(&s, &standard(1).with_truncation(1), false).is_some());
    assert!(s.basepoint(BOTTOM).is_some() && s.basepoint(TOP).is_some());
    assert_eq!(suspend(&standard(2)).truncate(2).unwrap().count(2), 3);
}

#[test]
fn suspension_commutes_with_wedges() {
    let cases = [
        (standard(1), 1usize, standard(1), 0usize),
        (standard(2), 2, standard(1), 0),
        (make_generator(GeneratorShape::Complicial(2, 1), 2).unwrap(), 0, standard(2), 1),
    ];
    for (x, xv, y, yv) in cases {
        let t = x.truncation().min(y.truncation());
        let (x, y) = (x.with_truncation(t), y.with_truncation(t));
        let wedge = wedge_ss(&x, CellId::new(0, xv), &y, CellId::new(0, yv)).unwrap();
        let lhs = suspend(&wedge);
        // ΣΔ[0] → ΣX and ΣΔ[0] → ΣY, induced by the wedge points
        let px = point_map(&Arc::new(x.clone()), CellId::new(0, xv), t).unwrap();
        let py = point_map(&Arc::new(y.clone()), CellId::new(0, yv), t).unwrap();
        let rhs = pushout(&suspend_map(&px), &suspend_map(&py)).unwrap();
        assert!(rhs.object.validate().is_empty());
        assert!(find_isomorphism(&lhs, &rhs.object, false).is_some());
    }
}

#[test]
fn wedge_of_edges() {
    let w = wedge_ss(&standard(1), CellId::new(0, 1), &standard(1), CellId::new(0, 0)).unwrap();
    assert_eq!(w.census()[..2], [3, 2]);
    let unit = wedge_ss(&standard(2), CellId::new(0, 0), &standard(0).with_truncation(2), CellId::new(0, 0)).unwrap();
    assert!(find_isomorphism(&unit, &standard(2), false).is_some());
}

#[test]
fn product_of_edges() {
    let p = product_model(&standard(1).with_truncation(2), &standard(1).with_truncation(2));
    assert_eq!(p.model.complex.census()[..3], [4, 5, 2]);
    assert!(p.left_projection.is_valid() && p.right_projection.is_valid());
}

#[test]
fn generators_validate() {
    use GeneratorShape::*;
    for shape in [Standard(3), Top(2), Complicial(3, 1), ComplicialPrime(3, 2), ComplicialDoublePrime(4, 2), Horn(3, 1), HornPrime(3, 2), ThreeEq, ThreeSharp] {
        let x = make_generator(shape, 4).unwrap();
        assert!(x.validate().is_empty(), "{shape:?}");
    }
}

#[test]
fn lambda_prime_pushout() {
    let a = inclusion(GeneratorShape::Horn(3, 1), GeneratorShape::HornPrime(3, 1), 3).unwrap();
    let b = inclusion(GeneratorShape::Horn(3, 1), GeneratorShape::Complicial(3, 1), 3).unwrap();
    let po = pushout(&a, &b).unwrap();
    let expected = make_generator(GeneratorShape::ComplicialPrime(3, 1), 3).unwrap();
    assert!(find_isomorphism(&po.object, &expected, false).is_some());
}

#[test]
fn isomorphism_search_is_symmetric() {
    let x = join(&standard(1), &standard(0).with_truncation(1));
    let y = standard(2).with_truncation(x.truncation());
    assert_eq!(find_isomorphism(&x, &y, false).is_some(), find_isomorphism(&y, &x, false).is_some());
    let z = make_generator(GeneratorShape::Complicial(2, 1), x.truncation()).unwrap();
    assert!(find_isomorphism(&x, &z, false).is_none() && find_isomorphism(&z, &x, false).is_none());
}
