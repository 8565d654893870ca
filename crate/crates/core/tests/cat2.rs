use complicial::cat2::*;

fn interval(k: usize) -> FinCategory {
    FinCategory::interval(k)
}

#[test]
fn base_category_validates() {
    for c in [interval(0), interval(3), FinCategory::rect(2, 1), FinCategory::walking_iso(), FinCategory::rect(-1, 2)] {
        assert!(c.validate().is_empty());
    }
}

#[test]
fn suspensions_validate() {
    for p in [interval(0), interval(2), FinCategory::walking_iso(), FinCategory::rect(1, 1), FinCategory::rect(-1, 0)] {
        let s = suspend2(&p);
        assert!(validate_2cat(&s).is_empty());
        assert_eq!(s.object_count(), 2);
        assert_eq!(s.hom1(0, 1).len(), p.object_count());
        assert!(s.hom1(1, 0).is_empty());
    }
}

#[test]
fn oriental_homs() {
    let o2 = oriental2(2);
    assert!(validate_2cat(&o2).is_empty());
    let h = o2.hom1(0, 2);
    assert_eq!(h.len(), 2);
    let nonid: usize = h.iter().flat_map(|&f| h.iter().map(move |&g| (f, g))).filter(|&(f, g)| f != g).map(|(f, g)| o2.hom2(f, g).len()).sum();
    assert_eq!(nonid, 1);
    let o3 = oriental2(3);
    assert_eq!(o3.hom1(0, 3).len(), 4);
    let f01 = o3.hom1(0, 1)[0];
    let f13 = o3.hom1(1, 3).iter().copied().find(|&f| oriental_subset(&o3, f) == 0b1010).unwrap();
    assert_eq!(oriental_subset(&o3, o3.hcomp1(f01, f13).unwrap()), 0b1011);
    let o4 = oriental2(4);
    assert!(validate_2cat(&o4).is_empty());
    for i in 0..4usize {
        for j in i + 1..=4 {
            assert_eq!(o4.hom1(i, j).len(), 1 << (j - i - 1));
        }
    }
}

#[test]
fn corrupted_table_is_reported() {
    let mut o = oriental2(2);
    let f = o.hom1(0, 2)[0];
    let g = o.hom1(0, 2)[1];
    let s = o.hom2(f, g)[0];
    let id = o.id2(f);
    o.set_vcomp(id, s, id);
    assert!(!validate_2cat(&o).is_empty());
}

#[test]
fn product_and_sub() {
    let i = interval2();
    let p = product2(&i, &i);
    assert_eq!(p.object_count(), 4);
    assert!(validate_2cat(&p).is_empty());
    let (sub, inc) = full_sub(&p, |x| x != 1);
    assert!(validate_2cat(&sub).is_empty());
    assert!(inc.is_valid(&sub, &p));
}

#[test]
fn sieves() {
    let s = suspend2(&interval(2));
    assert!(check_sieve(&s, 1, SieveKind::Cosieve).is_some());
    assert!(check_sieve(&s, 0, SieveKind::Sieve).is_some());
    assert!(check_sieve(&s, 0, SieveKind::Cosieve).is_none());
    let t = theta2(&[0, 0]);
    assert!(check_sieve(&t, 1, SieveKind::Cosieve).is_none());
    let pt = point2();
    assert!(check_sieve(&pt, 0, SieveKind::Cosieve).is_some());
    assert!(check_sieve(&pt, 0, SieveKind::Sieve).is_some());
}

#[test]
fn classification() {
    let wi = from_category(&FinCategory::walking_iso());
    let c = classify_cells(&wi);
    assert_eq!(c.equivalences.len(), 4);
    let s = suspend2(&FinCategory::walking_iso());
    let c = classify_cells(&s);
    for f in s.hom1(0, 1) {
        assert!(!c.equivalences.contains(f));
    }
    assert_eq!(c.invertible.len(), s.two_count());
    let c = classify_cells(&interval2());
    assert_eq!(c.equivalences.len(), 2);
}

#[test]
fn theta_objects() {
    assert_eq!(find_2iso(&theta2(&[2]), &suspend2(&interval(2))).is_some(), true);
    let t = theta2(&[1, 0]);
    assert!(validate_2cat(&t).is_empty());
    assert_eq!(t.object_count(), 3);
    assert_eq!(t.hom_category(0, 1).object_count(), 2);
    assert_eq!(t.hom_category(1, 2).object_count(), 1);
    assert_eq!(theta2(&[0, 1, 2]).object_count(), 4);
    assert_eq!(theta2(&[]).object_count(), 1);
}

fn wedge_of(a: &[usize], b: &[usize]) -> (WedgePresentation, Wedge) {
    let w = WedgePresentation::ends(theta2(a), theta2(b)).unwrap();
    let x = wedge2(&w).unwrap();
    (w, x)
}

#[test]
fn wedge_of_suspensions() {
    for (k, k2) in [(0, 0), (1, 0), (1, 1), (2, 1)] {
        let (_, w) = wedge_of(&[k], &[k2]);
        assert!(validate_2cat(&w.category).is_empty());
        let target = theta2(&[k, k2]);
        assert!(find_2iso(&w.category, &target).is_some(), "[1|{k}] v [1|{k2}]");
    }
}

#[test]
fn wedge_hom_formula() {
    let (w, x) = wedge_of(&[1], &[2]);
    // Map((x_bot, ·), (x_top, b')) for b' the top of the right side
    let c = &x.category;
    let b = x.right.obj[1];
    assert_eq!(c.hom1(0, b).len(), w.left.hom1(0, 1).len() * w.right.hom1(0, 1).len());
    assert!(c.hom1(b, 0).is_empty());
    assert!(x.left.is_valid(&w.left, c));
    assert!(x.right.is_valid(&w.right, c));
}

#[test]
fn bad_presentation() {
    let s = suspend2(&interval(1));
    assert!(WedgePresentation::new(s.clone(), 0, s, 0).is_err());
}

#[test]
fn wedge_is_pullback() {
    let shapes: [&[usize]; 4] = [&[0], &[1], &[0, 0], &[1, 0]];
    for a in shapes {
        for b in shapes {
            let (w, x) = wedge_of(a, b);
            let q = pullback_over_corner(&w.left, &w.right, &w.chi_left, &w.chi_right);
            assert!(validate_2cat(&q).is_empty());
            assert!(find_2iso(&x.category, &q).is_some(), "{a:?} v {b:?}");
        }
    }
}

#[test]
fn universal_property_small() {
    let (w, x) = wedge_of(&[1], &[0]);
    let n = check_universal_property(&w, &x, &suspend2(&FinCategory::walking_iso())).unwrap();
    assert!(n > 0);
    assert!(check_universal_property(&w, &x, &x.category).is_ok());
}

#[test]
fn collapse_small() {
    let r = collapse_map(0, 0);
    assert!(r.is_clean(), "{:?}", r.problems);
    let r = collapse_map(1, 1);
    assert!(r.is_clean(), "{:?}", r.problems);
    assert_eq!(r.target.hom1(0, 1).len(), 4);
    // f_{0,3} in O[3] goes to (0, 3-1-1) = (0,1)
    let f03 = r.source.hom1(0, 3).iter().copied().find(|&f| oriental_subset(&r.source, f) == 0b1001).unwrap();
    assert_eq!(r.target.one(r.functor.one[f03]).label, "(0,1)");
}

#[test]
fn collapse_all_small() {
    for k in 0..=3 {
        for l in 0..=3 {
            let r = collapse_map(k, l);
            assert!(r.is_clean(), "({k},{l}) {:?}", r.problems);
        }
    }
}

#[test]
fn universal_property_all_pairs() {
    let shapes: [&[usize]; 4] = [&[0], &[1], &[0, 0], &[1, 0]];
    let targets = [theta2(&[1, 1]), suspend2(&FinCategory::walking_iso())];
    for a in shapes {
        for b in shapes {
            let (w, x) = wedge_of(a, b);
            for t in targets.iter().chain([&x.category]) {
                check_universal_property(&w, &x, t).unwrap();
            }
        }
    }
}
