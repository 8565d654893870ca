use std::collections::HashMap;

use crate::error::{Error, Result};

/// A morphism of a finite category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub src: usize,
    pub tgt: usize,
    pub label: String,
}

/// Finite category with an explicit composition table.
///
/// `then(f, g)` is the composite "`f` followed by `g`", i.e. `g ∘ f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    homs: HashMap<(usize, usize), Vec<usize>>,
}

/// Named base categories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseSpec {
    /// The poset `[k]`.
    Interval(usize),
    /// `[k] × [l]^op`; either side may be `-1`, giving the empty category.
    Rect(isize, isize),
    /// Two objects and a pair of mutually inverse morphisms.
    WalkingIso,
}

impl FinCategory {
    /// Builds a category from its parts, checking that the table is total on composable pairs.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let mut homs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            if m.src >= objects.len() || m.tgt >= objects.len() {
                return Err(Error::Malformed(format!("morphism {i} has an unknown endpoint")));
            }
            homs.entry((m.src, m.tgt)).or_default().push(i);
        }
        let c = FinCategory { objects, morphisms, identities, compose, homs };
        let problems = c.validate();
        if !problems.is_empty() {
            return Err(Error::Malformed(problems.join("; ")));
        }
        Ok(c)
    }

    /// The category of a finite poset on `labels` with order `leq`.
    pub fn poset(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    index.insert((a, b), morphisms.len());
                    let label = if a == b { format!("id_{}", labels[a]) } else { format!("{}<{}", labels[a], labels[b]) };
                    morphisms.push(Morphism { src: a, tgt: b, label });
                }
            }
        }
        let identities = (0..n).map(|a| index[&(a, a)]).collect();
        let mut compose = HashMap::new();
        for (&(a, b), &f) in &index {
            for c in 0..n {
                if let Some(&g) = index.get(&(b, c)) {
                    compose.insert((f, g), index[&(a, c)]);
                }
            }
        }
        FinCategory::from_parts(labels, morphisms, identities, compose).expect("posets are categories")
    }

    pub fn interval(k: usize) -> Self {
        FinCategory::poset((0..=k).map(|i| i.to_string()).collect(), |a, b| a <= b)
    }

    /// `[k] × [l]^op` with objects `(i, j)` in row-major order.
    pub fn rect(k: isize, l: isize) -> Self {
        let rows = (k + 1).max(0) as usize;
        let cols = (l + 1).max(0) as usize;
        let labels = (0..rows).flat_map(|i| (0..cols).map(move |j| format!("({i},{j})"))).collect();
        FinCategory::poset(labels, |a, b| {
            let (ia, ja) = (a / cols, a % cols);
            let (ib, jb) = (b / cols, b % cols);
            ia <= ib && ja >= jb
        })
    }

    pub fn walking_iso() -> Self {
        let objects = vec!["a".to_string(), "b".to_string()];
        let m = |src, tgt, label: &str| Morphism { src, tgt, label: label.to_string() };
        let morphisms = vec![m(0, 0, "id_a"), m(1, 1, "id_b"), m(0, 1, "f"), m(1, 0, "g")];
        let mut compose = HashMap::new();
        for (f, g, h) in [
            (0, 0, 0),
            (1, 1, 1),
            (0, 2, 2),
            (2, 1, 2),
            (1, 3, 3),
            (3, 0, 3),
            (2, 3, 0),
            (3, 2, 1),
        ] {
            compose.insert((f, g), h);
        }
        FinCategory::from_parts(objects, morphisms, vec![0, 1], compose).expect("walking isomorphism")
    }

    pub fn from_spec(spec: &BaseSpec) -> Self {
        match *spec {
            BaseSpec::Interval(k) => FinCategory::interval(k),
            BaseSpec::Rect(k, l) => FinCategory::rect(k, l),
            BaseSpec::WalkingIso => FinCategory::walking_iso(),
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_label(&self, a: usize) -> &str {
        &self.objects[a]
    }

    pub fn morphism(&self, f: usize) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn identity(&self, a: usize) -> usize {
        self.identities[a]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.morphisms[f].src] == f
    }

    /// Morphisms `a → b` in index order.
    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        self.homs.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    /// `f` followed by `g`, if composable.
    pub fn then(&self, f: usize, g: usize) -> Option<usize> {
        self.compose.get(&(f, g)).copied()
    }

    /// Two-sided inverse of `f`, if any.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let m = &self.morphisms[f];
        self.hom(m.tgt, m.src).iter().copied().find(|&g| {
            self.then(f, g) == Some(self.identity(m.src)) && self.then(g, f) == Some(self.identity(m.tgt))
        })
    }

    /// Unit and associativity laws, and totality of composition.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.identities.len() != self.objects.len() {
            out.push("identity table has the wrong length".into());
            return out;
        }
        for (a, &i) in self.identities.iter().enumerate() {
            if i >= self.morphisms.len() || self.morphisms[i].src != a || self.morphisms[i].tgt != a {
                out.push(format!("identity of object {a} is ill-typed"));
                return out;
            }
        }
        for (f, mf) in self.morphisms.iter().enumerate() {
            for (g, mg) in self.morphisms.iter().enumerate() {
                if mf.tgt != mg.src {
                    continue;
                }
                match self.then(f, g) {
                    Some(h) if h < self.morphisms.len() && self.morphisms[h].src == mf.src && self.morphisms[h].tgt == mg.tgt => {}
                    _ => out.push(format!("composite of {f} and {g} missing or ill-typed")),
                }
            }
            if self.then(self.identity(mf.src), f) != Some(f) || self.then(f, self.identity(mf.tgt)) != Some(f) {
                out.push(format!("unit law fails at {f}"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in 0..self.morphisms.len() {
            let b = self.morphisms[f].tgt;
            for c in 0..self.objects.len() {
                for &g in self.hom(b, c) {
                    for d in 0..self.objects.len() {
                        for &h in self.hom(c, d) {
                            let l = self.then(self.then(f, g).unwrap(), h);
                            let r = self.then(f, self.then(g, h).unwrap());
                            if l != r {
                                out.push(format!("associativity fails at ({f},{g},{h})"));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_one() {
        let c = FinCategory::interval(1);
        assert_eq!((c.object_count(), c.morphism_count()), (2, 3));
    }

    #[test]
    fn rect_one_one() {
        let c = FinCategory::rect(1, 1);
        assert_eq!(c.object_count(), 4);
        // (0,1) is object 1, (1,0) is object 2
        assert_eq!(c.hom(1, 2).len(), 1);
        assert_eq!(c.hom(2, 1).len(), 0);
        assert_eq!(FinCategory::rect(-1, 3).object_count(), 0);
    }

    #[test]
    fn walking_iso_inverses() {
        let c = FinCategory::walking_iso();
        assert_eq!((c.object_count(), c.morphism_count()), (2, 4));
        assert_eq!(c.inverse(2), Some(3));
        assert_eq!(c.inverse(3), Some(2));
    }
}
