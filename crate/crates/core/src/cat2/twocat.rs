use std::collections::HashMap;

use super::category::{FinCategory, Morphism};

/// A 1-morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneCell {
    pub src: usize,
    pub tgt: usize,
    pub label: String,
}

/// A 2-morphism between parallel 1-morphisms `src ⇒ tgt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCell {
    pub src: usize,
    pub tgt: usize,
    pub label: String,
}

/// Finite strict 2-category with explicit composition tables.
///
/// All composites are written in diagrammatic order: `hcomp1(f, g)` is `g ∘ f`,
/// `vcomp(α, β)` is `β ∘_v α`, and `hcomp2(α, β)` is `β ∘_h α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fin2Category {
    objects: Vec<String>,
    ones: Vec<OneCell>,
    twos: Vec<TwoCell>,
    id1: Vec<usize>,
    id2: Vec<usize>,
    vcomp: HashMap<(usize, usize), usize>,
    hcomp1: HashMap<(usize, usize), usize>,
    hcomp2: HashMap<(usize, usize), usize>,
    homs1: HashMap<(usize, usize), Vec<usize>>,
    homs2: HashMap<(usize, usize), Vec<usize>>,
    ones_from: Vec<Vec<usize>>,
    twos_from_object: Vec<Vec<usize>>,
    twos_from_one: Vec<Vec<usize>>,
}

impl Fin2Category {
    /// Assembles a 2-category, filling the composition tables on every composable pair from the
    /// supplied functions. Axioms are checked by [`validate`](Self::validate).
    #[allow(clippy::too_many_arguments)]
    pub fn assemble(
        objects: Vec<String>,
        ones: Vec<OneCell>,
        id1: Vec<usize>,
        twos: Vec<TwoCell>,
        id2: Vec<usize>,
        vcomp: impl Fn(usize, usize) -> usize,
        hcomp1: impl Fn(usize, usize) -> usize,
        hcomp2: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let mut c = Fin2Category::from_tables(objects, ones, id1, twos, id2, HashMap::new(), HashMap::new(), HashMap::new());
        let mut v = HashMap::new();
        let mut h1 = HashMap::new();
        let mut h2 = HashMap::new();
        for (a, ta) in c.twos.iter().enumerate() {
            for &b in &c.twos_from_one[ta.tgt] {
                v.insert((a, b), vcomp(a, b));
            }
        }
        for (f, of) in c.ones.iter().enumerate() {
            for &g in &c.ones_from[of.tgt] {
                h1.insert((f, g), hcomp1(f, g));
            }
        }
        for (a, ta) in c.twos.iter().enumerate() {
            let mid = c.ones[ta.src].tgt;
            for &b in &c.twos_from_object[mid] {
                h2.insert((a, b), hcomp2(a, b));
            }
        }
        c.vcomp = v;
        c.hcomp1 = h1;
        c.hcomp2 = h2;
        c
    }

    /// A 2-category from explicit tables.
    #[allow(clippy::too_many_arguments)]
    pub fn from_tables(
        objects: Vec<String>,
        ones: Vec<OneCell>,
        id1: Vec<usize>,
        twos: Vec<TwoCell>,
        id2: Vec<usize>,
        vcomp: HashMap<(usize, usize), usize>,
        hcomp1: HashMap<(usize, usize), usize>,
        hcomp2: HashMap<(usize, usize), usize>,
    ) -> Self {
        let mut homs1: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut ones_from = vec![Vec::new(); objects.len()];
        for (i, o) in ones.iter().enumerate() {
            homs1.entry((o.src, o.tgt)).or_default().push(i);
            if o.src < objects.len() {
                ones_from[o.src].push(i);
            }
        }
        let mut homs2: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut twos_from_object = vec![Vec::new(); objects.len()];
        let mut twos_from_one = vec![Vec::new(); ones.len()];
        for (i, t) in twos.iter().enumerate() {
            homs2.entry((t.src, t.tgt)).or_default().push(i);
            if t.src < ones.len() {
                twos_from_one[t.src].push(i);
                if ones[t.src].src < objects.len() {
                    twos_from_object[ones[t.src].src].push(i);
                }
            }
        }
        Fin2Category {
            objects,
            ones,
            twos,
            id1,
            id2,
            vcomp,
            hcomp1,
            hcomp2,
            homs1,
            homs2,
            ones_from,
            twos_from_object,
            twos_from_one,
        }
    }

    /// Raw tables, in the order accepted by [`from_tables`](Self::from_tables).
    #[allow(clippy::type_complexity)]
    pub fn tables(
        &self,
    ) -> (
        &[String],
        &[OneCell],
        &[usize],
        &[TwoCell],
        &[usize],
        &HashMap<(usize, usize), usize>,
        &HashMap<(usize, usize), usize>,
        &HashMap<(usize, usize), usize>,
    ) {
        (&self.objects, &self.ones, &self.id1, &self.twos, &self.id2, &self.vcomp, &self.hcomp1, &self.hcomp2)
    }

    /// Overwrites one entry of the vertical table (used to exercise validation).
    pub fn set_vcomp(&mut self, a: usize, b: usize, c: usize) {
        self.vcomp.insert((a, b), c);
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn one_count(&self) -> usize {
        self.ones.len()
    }

    pub fn two_count(&self) -> usize {
        self.twos.len()
    }

    pub fn object_label(&self, a: usize) -> &str {
        &self.objects[a]
    }

    pub fn one(&self, f: usize) -> &OneCell {
        &self.ones[f]
    }

    pub fn two(&self, a: usize) -> &TwoCell {
        &self.twos[a]
    }

    pub fn id1(&self, a: usize) -> usize {
        self.id1[a]
    }

    pub fn id2(&self, f: usize) -> usize {
        self.id2[f]
    }

    pub fn is_id1(&self, f: usize) -> bool {
        self.id1[self.ones[f].src] == f
    }

    pub fn is_id2(&self, a: usize) -> bool {
        self.id2[self.twos[a].src] == a
    }

    /// 1-morphisms `a → b` in index order.
    pub fn hom1(&self, a: usize, b: usize) -> &[usize] {
        self.homs1.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    /// 2-morphisms `f ⇒ g` in index order.
    pub fn hom2(&self, f: usize, g: usize) -> &[usize] {
        self.homs2.get(&(f, g)).map_or(&[], Vec::as_slice)
    }

    pub fn ones_from(&self, a: usize) -> &[usize] {
        &self.ones_from[a]
    }

    /// `f` then `g`.
    pub fn hcomp1(&self, f: usize, g: usize) -> Option<usize> {
        self.hcomp1.get(&(f, g)).copied()
    }

    /// `α` then `β` vertically.
    pub fn vcomp(&self, a: usize, b: usize) -> Option<usize> {
        self.vcomp.get(&(a, b)).copied()
    }

    /// `α` then `β` horizontally.
    pub fn hcomp2(&self, a: usize, b: usize) -> Option<usize> {
        self.hcomp2.get(&(a, b)).copied()
    }

    /// The hom category `Map(a, b)`: 1-morphisms and 2-morphisms with vertical composition.
    pub fn hom_category(&self, a: usize, b: usize) -> FinCategory {
        let ones = self.hom1(a, b).to_vec();
        let pos: HashMap<usize, usize> = ones.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut twos = Vec::new();
        for &f in &ones {
            for &g in &ones {
                twos.extend_from_slice(self.hom2(f, g));
            }
        }
        let tpos: HashMap<usize, usize> = twos.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let morphisms = twos
            .iter()
            .map(|&t| Morphism { src: pos[&self.twos[t].src], tgt: pos[&self.twos[t].tgt], label: self.twos[t].label.clone() })
            .collect();
        let identities = ones.iter().map(|&f| tpos[&self.id2[f]]).collect();
        let mut compose = HashMap::new();
        for &x in &twos {
            for &y in &self.twos_from_one[self.twos[x].tgt] {
                if let Some(z) = self.vcomp(x, y) {
                    compose.insert((tpos[&x], tpos[&y]), tpos[&z]);
                }
            }
        }
        let labels = ones.iter().map(|&f| self.ones[f].label.clone()).collect();
        FinCategory::from_parts(labels, morphisms, identities, compose).expect("hom of a valid 2-category")
    }

    /// Lists violated axioms; empty iff this is a strict 2-category.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let (n0, n1, n2) = (self.objects.len(), self.ones.len(), self.twos.len());
        if self.id1.len() != n0 || self.id2.len() != n1 {
            out.push("identity tables have the wrong length".into());
            return out;
        }
        for (f, o) in self.ones.iter().enumerate() {
            if o.src >= n0 || o.tgt >= n0 {
                out.push(format!("1-cell {f} has unknown endpoints"));
            }
        }
        for (a, t) in self.twos.iter().enumerate() {
            if t.src >= n1 || t.tgt >= n1 || self.ones[t.src].src != self.ones[t.tgt].src || self.ones[t.src].tgt != self.ones[t.tgt].tgt {
                out.push(format!("2-cell {a} is not between parallel 1-cells"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (x, &i) in self.id1.iter().enumerate() {
            if self.ones[i].src != x || self.ones[i].tgt != x {
                out.push(format!("identity 1-cell of {x} is ill-typed"));
            }
        }
        for (f, &i) in self.id2.iter().enumerate() {
            if i >= n2 || self.twos[i].src != f || self.twos[i].tgt != f {
                out.push(format!("identity 2-cell of {f} is ill-typed"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        // totality and typing
        for (a, ta) in self.twos.iter().enumerate() {
            for &b in &self.twos_from_one[ta.tgt] {
                match self.vcomp(a, b) {
                    Some(c) if c < n2 && self.twos[c].src == ta.src && self.twos[c].tgt == self.twos[b].tgt => {}
                    _ => out.push(format!("vertical composite ({a},{b}) missing or ill-typed")),
                }
            }
        }
        for (f, of) in self.ones.iter().enumerate() {
            for &g in &self.ones_from[of.tgt] {
                match self.hcomp1(f, g) {
                    Some(h) if h < n1 && self.ones[h].src == of.src && self.ones[h].tgt == self.ones[g].tgt => {}
                    _ => out.push(format!("horizontal composite of 1-cells ({f},{g}) missing or ill-typed")),
                }
            }
        }
        for (a, ta) in self.twos.iter().enumerate() {
            for &b in &self.twos_from_object[self.ones[ta.src].tgt] {
                let tb = &self.twos[b];
                let ok = match (self.hcomp2(a, b), self.hcomp1(ta.src, tb.src), self.hcomp1(ta.tgt, tb.tgt)) {
                    (Some(c), Some(s), Some(t)) => c < n2 && self.twos[c].src == s && self.twos[c].tgt == t,
                    _ => false,
                };
                if !ok {
                    out.push(format!("horizontal composite of 2-cells ({a},{b}) missing or ill-typed"));
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        // units
        for (f, of) in self.ones.iter().enumerate() {
            if self.hcomp1(self.id1[of.src], f) != Some(f) || self.hcomp1(f, self.id1[of.tgt]) != Some(f) {
                out.push(format!("1-cell unit law fails at {f}"));
            }
        }
        for (a, ta) in self.twos.iter().enumerate() {
            if self.vcomp(self.id2[ta.src], a) != Some(a) || self.vcomp(a, self.id2[ta.tgt]) != Some(a) {
                out.push(format!("vertical unit law fails at {a}"));
            }
            let (s, t) = (self.ones[ta.src].src, self.ones[ta.src].tgt);
            if self.hcomp2(self.id2[self.id1[s]], a) != Some(a) || self.hcomp2(a, self.id2[self.id1[t]]) != Some(a) {
                out.push(format!("horizontal unit law fails at {a}"));
            }
        }
        for (f, of) in self.ones.iter().enumerate() {
            for &g in &self.ones_from[of.tgt] {
                let fg = self.hcomp1(f, g).expect("total");
                if self.hcomp2(self.id2[f], self.id2[g]) != Some(self.id2[fg]) {
                    out.push(format!("identity 2-cells do not compose horizontally at ({f},{g})"));
                }
            }
        }
        // associativity
        for (a, ta) in self.twos.iter().enumerate() {
            for &b in &self.twos_from_one[ta.tgt] {
                let ab = self.vcomp(a, b).expect("total");
                for &c in &self.twos_from_one[self.twos[b].tgt] {
                    if self.vcomp(ab, c) != self.vcomp(a, self.vcomp(b, c).expect("total")) {
                        out.push(format!("vertical associativity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        for (f, of) in self.ones.iter().enumerate() {
            for &g in &self.ones_from[of.tgt] {
                let fg = self.hcomp1(f, g).expect("total");
                for &h in &self.ones_from[self.ones[g].tgt] {
                    if self.hcomp1(fg, h) != self.hcomp1(f, self.hcomp1(g, h).expect("total")) {
                        out.push(format!("1-cell associativity fails at ({f},{g},{h})"));
                    }
                }
            }
        }
        for (a, ta) in self.twos.iter().enumerate() {
            for &b in &self.twos_from_object[self.ones[ta.src].tgt] {
                let ab = self.hcomp2(a, b).expect("total");
                for &c in &self.twos_from_object[self.ones[self.twos[b].src].tgt] {
                    if self.hcomp2(ab, c) != self.hcomp2(a, self.hcomp2(b, c).expect("total")) {
                        out.push(format!("2-cell horizontal associativity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        // interchange: (α;α') ∘h (β;β') = (α∘hβ);(α'∘hβ')
        for (a, ta) in self.twos.iter().enumerate() {
            for &a2 in &self.twos_from_one[ta.tgt] {
                let aa = self.vcomp(a, a2).expect("total");
                for &b in &self.twos_from_object[self.ones[ta.src].tgt] {
                    for &b2 in &self.twos_from_one[self.twos[b].tgt] {
                        let bb = self.vcomp(b, b2).expect("total");
                        let lhs = self.hcomp2(aa, bb);
                        let rhs = self.vcomp(self.hcomp2(a, b).expect("total"), self.hcomp2(a2, b2).expect("total"));
                        if lhs != rhs {
                            out.push(format!("interchange fails at ({a},{a2},{b},{b2})"));
                        }
                    }
                }
            }
        }
        out
    }
}
