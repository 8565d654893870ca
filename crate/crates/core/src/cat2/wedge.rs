use std::collections::HashMap;

use super::build::{check_sieve, interval2, point2, suspend2, SieveKind};
use super::category::FinCategory;
use super::functor::{all_functors, TwoFunctor};
use super::twocat::{Fin2Category, OneCell, TwoCell};
use crate::error::{Error, Result};

/// Two 2-categories to be glued along a cosieve object of the left and a sieve object of the right.
#[derive(Clone, Debug)]
pub struct WedgePresentation {
    pub left: Fin2Category,
    pub top: usize,
    pub right: Fin2Category,
    pub bottom: usize,
    pub chi_left: TwoFunctor,
    pub chi_right: TwoFunctor,
}

impl WedgePresentation {
    /// Computes the characteristic functors; fails if either object is not a (co)sieve.
    pub fn new(left: Fin2Category, top: usize, right: Fin2Category, bottom: usize) -> Result<Self> {
        let chi_left = check_sieve(&left, top, SieveKind::Cosieve)
            .ok_or_else(|| Error::InvalidPresentation(format!("object {top} is not a cosieve object")))?;
        let chi_right = check_sieve(&right, bottom, SieveKind::Sieve)
            .ok_or_else(|| Error::InvalidPresentation(format!("object {bottom} is not a sieve object")))?;
        Ok(WedgePresentation { left, top, right, bottom, chi_left, chi_right })
    }

    /// Glues the last object of `left` to the first object of `right`.
    pub fn ends(left: Fin2Category, right: Fin2Category) -> Result<Self> {
        let top = left.object_count().checked_sub(1).ok_or_else(|| Error::InvalidPresentation("empty left side".into()))?;
        WedgePresentation::new(left, top, right, 0)
    }

    /// Rejects witnesses that are not characteristic functors of the named objects.
    pub fn check(&self) -> Result<()> {
        let i = interval2();
        let fibre = |chi: &TwoFunctor, v: usize| (0..chi.obj.len()).filter(|&x| chi.obj[x] == v).collect::<Vec<_>>();
        if !self.chi_left.is_valid(&self.left, &i) || fibre(&self.chi_left, 1) != vec![self.top] {
            return Err(Error::InvalidPresentation("left witness does not cut out the cosieve object".into()));
        }
        if !self.chi_right.is_valid(&self.right, &i) || fibre(&self.chi_right, 0) != vec![self.bottom] {
            return Err(Error::InvalidPresentation("right witness does not cut out the sieve object".into()));
        }
        if check_sieve(&self.left, self.top, SieveKind::Cosieve).is_none() || check_sieve(&self.right, self.bottom, SieveKind::Sieve).is_none() {
            return Err(Error::InvalidPresentation("hom condition fails at the glued object".into()));
        }
        Ok(())
    }
}

/// The wedge with its two embeddings.
#[derive(Clone, Debug)]
pub struct Wedge {
    pub category: Fin2Category,
    pub left: TwoFunctor,
    pub right: TwoFunctor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Tag {
    Left(usize),
    Right(usize),
    Cross(usize, usize),
}

/// Glues `left` and `right` along the presentation's objects.
///
/// Objects are those of `left` (the glued one included) followed by the remaining objects of
/// `right`. Cells between `(a, a'_⊥)` and `(a_⊤, b')` with `b' ≠ a'_⊥` are pairs of a cell of
/// `Map(a, a_⊤)` and one of `Map(a'_⊥, b')`.
pub fn wedge2(w: &WedgePresentation) -> Result<Wedge> {
    w.check()?;
    let (l, r, top, bot) = (&w.left, &w.right, w.top, w.bottom);
    let nl = l.object_count();
    let mut robj = vec![top; r.object_count()];
    let mut objects: Vec<String> = (0..nl).map(|a| l.object_label(a).to_string()).collect();
    for (b, slot) in robj.iter_mut().enumerate() {
        if b != bot {
            *slot = objects.len();
            objects.push(r.object_label(b).to_string());
        }
    }

    let mut tags1 = Vec::new();
    let mut ones = Vec::new();
    for f in 0..l.one_count() {
        let o = l.one(f);
        tags1.push(Tag::Left(f));
        ones.push(OneCell { src: o.src, tgt: o.tgt, label: o.label.clone() });
    }
    for g in 0..r.one_count() {
        let o = r.one(g);
        if o.src != bot {
            tags1.push(Tag::Right(g));
            ones.push(OneCell { src: robj[o.src], tgt: robj[o.tgt], label: o.label.clone() });
        }
    }
    for a in 0..nl {
        for &f in l.hom1(a, top) {
            for b in (0..r.object_count()).filter(|&b| b != bot) {
                for &g in r.hom1(bot, b) {
                    tags1.push(Tag::Cross(f, g));
                    ones.push(OneCell { src: a, tgt: robj[b], label: format!("({},{})", l.one(f).label, r.one(g).label) });
                }
            }
        }
    }
    let idx1: HashMap<Tag, usize> = tags1.iter().enumerate().map(|(i, &t)| (t, i)).collect();

    let mut tags2 = Vec::new();
    let mut twos = Vec::new();
    for s in 0..l.two_count() {
        let t = l.two(s);
        tags2.push(Tag::Left(s));
        twos.push(TwoCell { src: idx1[&Tag::Left(t.src)], tgt: idx1[&Tag::Left(t.tgt)], label: t.label.clone() });
    }
    for s in 0..r.two_count() {
        let t = r.two(s);
        if r.one(t.src).src != bot {
            tags2.push(Tag::Right(s));
            twos.push(TwoCell { src: idx1[&Tag::Right(t.src)], tgt: idx1[&Tag::Right(t.tgt)], label: t.label.clone() });
        }
    }
    for s in 0..l.two_count() {
        let ts = l.two(s);
        if l.one(ts.src).tgt != top {
            continue;
        }
        for u in 0..r.two_count() {
            let tu = r.two(u);
            let ou = r.one(tu.src);
            if ou.src != bot || ou.tgt == bot {
                continue;
            }
            tags2.push(Tag::Cross(s, u));
            twos.push(TwoCell {
                src: idx1[&Tag::Cross(ts.src, tu.src)],
                tgt: idx1[&Tag::Cross(ts.tgt, tu.tgt)],
                label: format!("({},{})", ts.label, tu.label),
            });
        }
    }
    let idx2: HashMap<Tag, usize> = tags2.iter().enumerate().map(|(i, &t)| (t, i)).collect();

    let id1: Vec<usize> = (0..objects.len())
        .map(|x| if x < nl { idx1[&Tag::Left(l.id1(x))] } else { idx1[&Tag::Right(r.id1(robj.iter().position(|&y| y == x).expect("object")))] })
        .collect();
    let id2: Vec<usize> = tags1
        .iter()
        .map(|&t| match t {
            Tag::Left(f) => idx2[&Tag::Left(l.id2(f))],
            Tag::Right(g) => idx2[&Tag::Right(r.id2(g))],
            Tag::Cross(f, g) => idx2[&Tag::Cross(l.id2(f), r.id2(g))],
        })
        .collect();
    let id_top1 = l.id1(top);
    let id_top2 = l.id2(id_top1);

    // Composition is componentwise once both sides are written as pairs; a missing side is the identity.
    let h1 = |x: usize, y: usize| -> usize {
        let t = match (tags1[x], tags1[y]) {
            (Tag::Left(f), Tag::Left(g)) => Tag::Left(l.hcomp1(f, g).expect("composable")),
            (Tag::Left(f), Tag::Cross(f2, g)) => Tag::Cross(l.hcomp1(f, f2).expect("composable"), g),
            (Tag::Cross(f, g), Tag::Right(g2)) => Tag::Cross(f, r.hcomp1(g, g2).expect("composable")),
            (Tag::Right(g), Tag::Right(g2)) => Tag::Right(r.hcomp1(g, g2).expect("composable")),
            (a, b) => unreachable!("composable pair {a:?} {b:?}"),
        };
        idx1[&t]
    };
    let v = |x: usize, y: usize| -> usize {
        let t = match (tags2[x], tags2[y]) {
            (Tag::Left(s), Tag::Left(u)) => Tag::Left(l.vcomp(s, u).expect("composable")),
            (Tag::Right(s), Tag::Right(u)) => Tag::Right(r.vcomp(s, u).expect("composable")),
            (Tag::Cross(s, u), Tag::Cross(s2, u2)) => Tag::Cross(l.vcomp(s, s2).expect("composable"), r.vcomp(u, u2).expect("composable")),
            (a, b) => unreachable!("composable pair {a:?} {b:?}"),
        };
        idx2[&t]
    };
    let h2 = |x: usize, y: usize| -> usize {
        let t = match (tags2[x], tags2[y]) {
            (Tag::Left(s), Tag::Left(u)) => Tag::Left(l.hcomp2(s, u).expect("composable")),
            (Tag::Left(s), Tag::Cross(s2, u)) => Tag::Cross(l.hcomp2(s, s2).expect("composable"), u),
            (Tag::Cross(s, u), Tag::Right(u2)) => Tag::Cross(s, r.hcomp2(u, u2).expect("composable")),
            (Tag::Right(s), Tag::Right(u)) => Tag::Right(r.hcomp2(s, u).expect("composable")),
            (a, b) => unreachable!("composable pair {a:?} {b:?}"),
        };
        idx2[&t]
    };
    let category = Fin2Category::assemble(objects, ones, id1, twos, id2, v, h1, h2);

    let left = TwoFunctor {
        obj: (0..nl).collect(),
        one: (0..l.one_count()).map(|f| idx1[&Tag::Left(f)]).collect(),
        two: (0..l.two_count()).map(|s| idx2[&Tag::Left(s)]).collect(),
    };
    let right = TwoFunctor {
        obj: robj.clone(),
        one: (0..r.one_count())
            .map(|g| {
                let o = r.one(g);
                if o.src != bot {
                    idx1[&Tag::Right(g)]
                } else if o.tgt == bot {
                    idx1[&Tag::Left(id_top1)]
                } else {
                    idx1[&Tag::Cross(id_top1, g)]
                }
            })
            .collect(),
        two: (0..r.two_count())
            .map(|s| {
                let o = r.one(r.two(s).src);
                if o.src != bot {
                    idx2[&Tag::Right(s)]
                } else if o.tgt == bot {
                    idx2[&Tag::Left(id_top2)]
                } else {
                    idx2[&Tag::Cross(id_top2, s)]
                }
            })
            .collect(),
    };
    Ok(Wedge { category, left, right })
}

/// `[m | k_1, …, k_m]`: the iterated wedge of the suspensions `Σ[k_i]`.
pub fn theta2(widths: &[usize]) -> Fin2Category {
    let mut acc = match widths.first() {
        None => return point2(),
        Some(&k) => suspend2(&FinCategory::interval(k)),
    };
    for &k in &widths[1..] {
        let w = WedgePresentation::ends(acc, suspend2(&FinCategory::interval(k))).expect("ends of a Θ object are (co)sieves");
        acc = wedge2(&w).expect("valid presentation").category;
    }
    acc
}

/// Brute-force check of the universal property on test target `t`: every pair of functors out
/// of the two sides that agree on the glued object factors through the wedge exactly once.
///
/// Returns the number of compatible pairs checked, or a description of the first failure.
pub fn check_universal_property(w: &WedgePresentation, wedge: &Wedge, t: &Fin2Category) -> std::result::Result<usize, String> {
    let mut factorizations: HashMap<(TwoFunctor, TwoFunctor), usize> = HashMap::new();
    for h in all_functors(&wedge.category, t) {
        *factorizations.entry((wedge.left.then(&h), wedge.right.then(&h))).or_default() += 1;
    }
    let lefts = all_functors(&w.left, t);
    let rights = all_functors(&w.right, t);
    let mut checked = 0;
    for f in &lefts {
        for g in &rights {
            if f.obj[w.top] != g.obj[w.bottom] {
                continue;
            }
            checked += 1;
            let n = factorizations.get(&(f.clone(), g.clone())).copied().unwrap_or(0);
            if n != 1 {
                return Err(format!("compatible pair {f:?} / {g:?} has {n} factorizations"));
            }
        }
    }
    let total: usize = factorizations.values().sum();
    if factorizations.len() != checked || total != checked {
        return Err("some functor out of the wedge restricts to an incompatible pair".into());
    }
    Ok(checked)
}
