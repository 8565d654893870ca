use std::collections::BTreeMap;

use super::build::{oriental2, oriental_subset, suspend2};
use super::category::FinCategory;
use super::functor::TwoFunctor;
use super::twocat::Fin2Category;

/// Outcome of checking the collapse `O₂[k+1+l] → Σ([k] × [l]^op)`.
#[derive(Clone, Debug)]
pub struct CollapseReport {
    pub k: usize,
    pub l: usize,
    pub source: Fin2Category,
    pub target: Fin2Category,
    pub functor: TwoFunctor,
    pub problems: Vec<String>,
}

impl CollapseReport {
    pub fn is_clean(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Rows and columns of a crossing subset: the largest element at most `k`, and the smallest
/// element above `k` shifted down by `k + 1`.
fn crossing(mask: u64, k: usize) -> (usize, usize) {
    let low = mask & ((1u64 << (k + 1)) - 1);
    let high = mask >> (k + 1);
    (63 - low.leading_zeros() as usize, high.trailing_zeros() as usize)
}

/// Builds the collapse functor and checks that it identifies exactly the two sub-orientals.
pub fn collapse_map(k: usize, l: usize) -> CollapseReport {
    let m = k + 1 + l;
    let source = oriental2(m);
    let rect = FinCategory::rect(k as isize, l as isize);
    let target = suspend2(&rect);
    let cols = l + 1;
    let side = |x: usize| usize::from(x > k);
    let obj: Vec<usize> = (0..=m).map(side).collect();
    let rect_object = |f: usize| {
        let (r, c) = crossing(oriental_subset(&source, f), k);
        r * cols + c
    };
    let one: Vec<usize> = (0..source.one_count())
        .map(|f| {
            let o = source.one(f);
            if side(o.src) == side(o.tgt) {
                target.id1(side(o.src))
            } else {
                2 + rect_object(f)
            }
        })
        .collect();
    let two: Vec<usize> = (0..source.two_count())
        .map(|s| {
            let t = source.two(s);
            let o = source.one(t.src);
            if side(o.src) == side(o.tgt) {
                target.id2(one[t.src])
            } else {
                let h = rect.hom(rect_object(t.src), rect_object(t.tgt));
                2 + h.first().copied().unwrap_or(usize::MAX - 2)
            }
        })
        .collect();
    let functor = TwoFunctor { obj, one, two };
    let mut problems = Vec::new();
    if functor.two.iter().any(|&x| x >= target.two_count()) {
        problems.push("an inclusion is sent outside the target order".into());
    } else {
        problems.extend(functor.check(&source, &target));
    }
    if !problems.is_empty() {
        return CollapseReport { k, l, source, target, functor, problems };
    }

    // the sub-orientals on {0..k} and {k+1..m} go to identities
    for f in 0..source.one_count() {
        let o = source.one(f);
        if side(o.src) == side(o.tgt) && !target.is_id1(functor.one[f]) {
            problems.push(format!("1-cell {} inside a sub-oriental is not collapsed", o.label));
        }
    }
    // canonical crossing representatives {0..i1} ∪ {i2..m}
    let mask_index: BTreeMap<u64, usize> = (0..source.one_count()).map(|f| (oriental_subset(&source, f), f)).collect();
    let canonical = |i1: usize, i2: usize| {
        let low = (1u64 << (i1 + 1)) - 1;
        let high = ((1u64 << (m + 1)) - 1) & !((1u64 << i2) - 1);
        mask_index[&(low | high)]
    };
    let mut ones_hit: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for i1 in 0..=k {
        for i2 in k + 1..=m {
            ones_hit.entry(functor.one[canonical(i1, i2)]).or_default().push((i1, i2));
        }
    }
    let crossing_targets: Vec<usize> = target.hom1(0, 1).to_vec();
    for &g in &crossing_targets {
        match ones_hit.get(&g).map(Vec::len) {
            Some(1) => {}
            n => problems.push(format!("target 1-cell {} has {} canonical preimages", target.one(g).label, n.unwrap_or(0))),
        }
    }
    if ones_hit.len() != crossing_targets.len() {
        problems.push("canonical 1-cells land outside Map(x_bot, x_top)".into());
    }
    // every crossing subset agrees with its canonical representative
    for f in 0..source.one_count() {
        let o = source.one(f);
        if side(o.src) != side(o.tgt) {
            let (r, c) = crossing(oriental_subset(&source, f), k);
            if functor.one[f] != functor.one[canonical(r, c + k + 1)] {
                problems.push(format!("1-cell {} disagrees with its canonical representative", o.label));
            }
        }
    }
    // inclusions between canonical representatives
    let mut twos_hit: BTreeMap<usize, usize> = BTreeMap::new();
    for i1 in 0..=k {
        for i2 in k + 1..=m {
            for j1 in i1..=k {
                for j2 in k + 1..=i2 {
                    let (a, b) = (canonical(i1, i2), canonical(j1, j2));
                    match source.hom2(a, b) {
                        [s] => *twos_hit.entry(functor.two[*s]).or_default() += 1,
                        _ => problems.push(format!("no inclusion between canonical cells ({i1},{i2}) and ({j1},{j2})")),
                    }
                }
            }
        }
    }
    let crossing_twos: Vec<usize> = (0..target.two_count()).filter(|&s| target.one(target.two(s).src).src == 0 && target.one(target.two(s).src).tgt == 1).collect();
    for &s in &crossing_twos {
        if twos_hit.get(&s) != Some(&1) {
            problems.push(format!("target 2-cell {} is not hit exactly once by canonical inclusions", target.two(s).label));
        }
    }
    if twos_hit.len() != crossing_twos.len() {
        problems.push("canonical inclusions land outside the crossing hom".into());
    }
    CollapseReport { k, l, source, target, functor, problems }
}
