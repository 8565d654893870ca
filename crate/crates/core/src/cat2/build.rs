use std::collections::{BTreeSet, HashMap};

use super::category::FinCategory;
use super::functor::TwoFunctor;
use super::twocat::{Fin2Category, OneCell, TwoCell};

fn one(src: usize, tgt: usize, label: impl Into<String>) -> OneCell {
    OneCell { src, tgt, label: label.into() }
}

fn two(src: usize, tgt: usize, label: impl Into<String>) -> TwoCell {
    TwoCell { src, tgt, label: label.into() }
}

/// A 1-category as a 2-category with only identity 2-morphisms.
pub fn from_category(p: &FinCategory) -> Fin2Category {
    let objects = (0..p.object_count()).map(|a| p.object_label(a).to_string()).collect();
    let ones = (0..p.morphism_count()).map(|f| {
        let m = p.morphism(f);
        one(m.src, m.tgt, m.label.clone())
    });
    let ones: Vec<OneCell> = ones.collect();
    let twos = ones.iter().enumerate().map(|(f, o)| two(f, f, format!("id_{}", o.label))).collect();
    let id1 = (0..p.object_count()).map(|a| p.identity(a)).collect();
    let id2 = (0..p.morphism_count()).collect();
    let then = |f, g| p.then(f, g).expect("composable");
    Fin2Category::assemble(objects, ones, id1, twos, id2, |a, _| a, then, then)
}

/// The terminal 2-category `[0]`.
pub fn point2() -> Fin2Category {
    from_category(&FinCategory::interval(0))
}

/// The interval `[1]` as a 2-category; target of characteristic functors.
pub fn interval2() -> Fin2Category {
    from_category(&FinCategory::interval(1))
}

/// `ΣP`: objects `x_⊥ = 0`, `x_⊤ = 1` and `Map(x_⊥, x_⊤) = P`.
///
/// 1-cells are `id_⊥, id_⊤` followed by the objects of `P`; 2-cells are the two identities
/// followed by the morphisms of `P`.
pub fn suspend2(p: &FinCategory) -> Fin2Category {
    let objects = vec!["x_bot".to_string(), "x_top".to_string()];
    let mut ones = vec![one(0, 0, "id_x_bot"), one(1, 1, "id_x_top")];
    ones.extend((0..p.object_count()).map(|a| one(0, 1, p.object_label(a))));
    let mut twos = vec![two(0, 0, "id_id_x_bot"), two(1, 1, "id_id_x_top")];
    twos.extend((0..p.morphism_count()).map(|f| {
        let m = p.morphism(f);
        two(m.src + 2, m.tgt + 2, m.label.clone())
    }));
    let mut id2 = vec![0, 1];
    id2.extend((0..p.object_count()).map(|a| p.identity(a) + 2));
    let vcomp = |a: usize, b: usize| if a < 2 { a } else { p.then(a - 2, b - 2).expect("composable") + 2 };
    let hcomp = |a: usize, b: usize| if a < 2 { b } else { a };
    Fin2Category::assemble(objects, ones, vec![0, 1], twos, id2, vcomp, hcomp, hcomp)
}

fn subset_label(mask: u64) -> String {
    let items: Vec<String> = (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Bit mask of the vertex subset carried by a 1-cell of [`oriental2`].
pub fn oriental_subset(o: &Fin2Category, f: usize) -> u64 {
    let label = &o.one(f).label;
    label.trim_matches(|c| c == '{' || c == '}').split(',').map(|s| 1u64 << s.parse::<u32>().expect("subset label")).sum()
}

/// The 2-truncated oriental on `[m]`: 1-cells `i → j` are the subsets of `{i..j}` containing
/// both ends, 2-cells are inclusions, and horizontal composition is union.
pub fn oriental2(m: usize) -> Fin2Category {
    assert!(m < 63, "oriental too large");
    let objects = (0..=m).map(|i| i.to_string()).collect();
    let mut masks = Vec::new();
    for i in 0..=m {
        for j in i..=m {
            let inner = if j > i + 1 { j - i - 1 } else { 0 };
            for mid in 0..(1u64 << inner) {
                let mask = (1u64 << i) | (1u64 << j) | (mid << (i + 1));
                masks.push((i, j, mask));
            }
        }
    }
    let index: HashMap<u64, usize> = masks.iter().enumerate().map(|(n, &(_, _, s))| (s, n)).collect();
    let ones: Vec<OneCell> = masks.iter().map(|&(i, j, s)| one(i, j, subset_label(s))).collect();
    let id1 = (0..=m).map(|i| index[&(1u64 << i)]).collect();
    let mut twos = Vec::new();
    let mut pairs = HashMap::new();
    for (a, &(i, j, s)) in masks.iter().enumerate() {
        for (b, &(i2, j2, t)) in masks.iter().enumerate() {
            if (i, j) == (i2, j2) && s & t == s {
                pairs.insert((s, t), twos.len());
                twos.push(two(a, b, format!("{}<={}", subset_label(s), subset_label(t))));
            }
        }
    }
    let id2 = masks.iter().map(|&(_, _, s)| pairs[&(s, s)]).collect();
    let cells: Vec<(u64, u64)> = twos.iter().map(|t| (masks[t.src].2, masks[t.tgt].2)).collect();
    let vcomp = |a: usize, b: usize| pairs[&(cells[a].0, cells[b].1)];
    let hcomp1 = |f: usize, g: usize| index[&(masks[f].2 | masks[g].2)];
    let hcomp2 = |a: usize, b: usize| pairs[&(cells[a].0 | cells[b].0, cells[a].1 | cells[b].1)];
    Fin2Category::assemble(objects, ones, id1, twos, id2, vcomp, hcomp1, hcomp2)
}

/// Cartesian product; cells of `A × A'` are pairs indexed row-major.
pub fn product2(a: &Fin2Category, b: &Fin2Category) -> Fin2Category {
    let (n0, n1, n2) = (b.object_count(), b.one_count(), b.two_count());
    let objects = (0..a.object_count())
        .flat_map(|x| (0..n0).map(move |y| (x, y)))
        .map(|(x, y)| format!("({},{})", a.object_label(x), b.object_label(y)))
        .collect();
    let ones = (0..a.one_count())
        .flat_map(|f| (0..n1).map(move |g| (f, g)))
        .map(|(f, g)| {
            let (of, og) = (a.one(f), b.one(g));
            one(of.src * n0 + og.src, of.tgt * n0 + og.tgt, format!("({},{})", of.label, og.label))
        })
        .collect();
    let twos = (0..a.two_count())
        .flat_map(|s| (0..n2).map(move |t| (s, t)))
        .map(|(s, t)| {
            let (ts, tt) = (a.two(s), b.two(t));
            two(ts.src * n1 + tt.src, ts.tgt * n1 + tt.tgt, format!("({},{})", ts.label, tt.label))
        })
        .collect();
    let id1 = (0..a.object_count() * n0).map(|x| a.id1(x / n0) * n1 + b.id1(x % n0)).collect();
    let id2 = (0..a.one_count() * n1).map(|f| a.id2(f / n1) * n2 + b.id2(f % n1)).collect();
    let pair2 = |op: fn(&Fin2Category, usize, usize) -> Option<usize>, x: usize, y: usize| {
        op(a, x / n2, y / n2).expect("composable") * n2 + op(b, x % n2, y % n2).expect("composable")
    };
    Fin2Category::assemble(
        objects,
        ones,
        id1,
        twos,
        id2,
        |x, y| pair2(Fin2Category::vcomp, x, y),
        |f, g| a.hcomp1(f / n1, g / n1).expect("composable") * n1 + b.hcomp1(f % n1, g % n1).expect("composable"),
        |x, y| pair2(Fin2Category::hcomp2, x, y),
    )
}

/// Full sub-2-category on the objects satisfying `keep`, with its inclusion.
pub fn full_sub(a: &Fin2Category, keep: impl Fn(usize) -> bool) -> (Fin2Category, TwoFunctor) {
    let obj: Vec<usize> = (0..a.object_count()).filter(|&x| keep(x)).collect();
    let opos: HashMap<usize, usize> = obj.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let ones: Vec<usize> = (0..a.one_count()).filter(|&f| opos.contains_key(&a.one(f).src) && opos.contains_key(&a.one(f).tgt)).collect();
    let fpos: HashMap<usize, usize> = ones.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let twos: Vec<usize> = (0..a.two_count()).filter(|&t| fpos.contains_key(&a.two(t).src)).collect();
    let tpos: HashMap<usize, usize> = twos.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let sub = Fin2Category::assemble(
        obj.iter().map(|&x| a.object_label(x).to_string()).collect(),
        ones.iter().map(|&f| one(opos[&a.one(f).src], opos[&a.one(f).tgt], a.one(f).label.clone())).collect(),
        obj.iter().map(|&x| fpos[&a.id1(x)]).collect(),
        twos.iter().map(|&t| two(fpos[&a.two(t).src], fpos[&a.two(t).tgt], a.two(t).label.clone())).collect(),
        ones.iter().map(|&f| tpos[&a.id2(f)]).collect(),
        |x, y| tpos[&a.vcomp(twos[x], twos[y]).expect("composable")],
        |f, g| fpos[&a.hcomp1(ones[f], ones[g]).expect("composable")],
        |x, y| tpos[&a.hcomp2(twos[x], twos[y]).expect("composable")],
    );
    (sub, TwoFunctor { obj, one: ones, two: twos })
}

/// Which side of a (co)sieve test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SieveKind {
    /// Nothing leaves the object: χ sends it to 1 and everything else to 0.
    Cosieve,
    /// Nothing enters the object: χ sends it to 0 and everything else to 1.
    Sieve,
}

/// Tests whether `x` is a sieve or cosieve object and returns the characteristic functor to `[1]`.
pub fn check_sieve(a: &Fin2Category, x: usize, kind: SieveKind) -> Option<TwoFunctor> {
    for y in 0..a.object_count() {
        let hom = match kind {
            SieveKind::Cosieve => a.hom1(x, y),
            SieveKind::Sieve => a.hom1(y, x),
        };
        if y != x && !hom.is_empty() {
            return None;
        }
    }
    let loops = a.hom1(x, x);
    if loops.len() != 1 || a.hom2(loops[0], loops[0]).len() != 1 {
        return None;
    }
    let i = interval2();
    let (inside, outside) = match kind {
        SieveKind::Cosieve => (1, 0),
        SieveKind::Sieve => (0, 1),
    };
    let obj: Vec<usize> = (0..a.object_count()).map(|y| if y == x { inside } else { outside }).collect();
    // interval2 1-cells: id_0, 0<1, id_1 (poset order)
    let edge = |s: usize, t: usize| i.hom1(s, t)[0];
    let one: Vec<usize> = (0..a.one_count()).map(|f| edge(obj[a.one(f).src], obj[a.one(f).tgt])).collect();
    let two = (0..a.two_count()).map(|t| i.id2(one[a.two(t).src])).collect();
    let chi = TwoFunctor { obj, one, two };
    chi.is_valid(a, &i).then_some(chi)
}

/// Equivalence 1-cells and invertible 2-cells.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CellClasses {
    pub equivalences: BTreeSet<usize>,
    pub invertible: BTreeSet<usize>,
}

/// Brute-force search for inverses.
pub fn classify_cells(a: &Fin2Category) -> CellClasses {
    let mut invertible = BTreeSet::new();
    for s in 0..a.two_count() {
        let t = a.two(s);
        if a.hom2(t.tgt, t.src).iter().any(|&u| a.vcomp(s, u) == Some(a.id2(t.src)) && a.vcomp(u, s) == Some(a.id2(t.tgt))) {
            invertible.insert(s);
        }
    }
    let iso = |f: usize, g: usize| a.hom2(f, g).iter().any(|s| invertible.contains(s));
    let mut equivalences = BTreeSet::new();
    for f in 0..a.one_count() {
        let o = a.one(f);
        let ok = a.hom1(o.tgt, o.src).iter().any(|&g| {
            iso(a.hcomp1(f, g).expect("composable"), a.id1(o.src)) && iso(a.hcomp1(g, f).expect("composable"), a.id1(o.tgt))
        });
        if ok {
            equivalences.insert(f);
        }
    }
    CellClasses { equivalences, invertible }
}

/// The full sub-2-category of `A × A'` on pairs with `χ(a) ≥ χ'(a')`.
pub fn pullback_over_corner(a: &Fin2Category, b: &Fin2Category, chi: &TwoFunctor, chi2: &TwoFunctor) -> Fin2Category {
    let n = b.object_count();
    let p = product2(a, b);
    full_sub(&p, |x| chi.obj[x / n] >= chi2.obj[x % n]).0
}
