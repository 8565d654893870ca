use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use super::complex::{CellId, DegeneracyWord, MarkedSimplicialSet, SimplexRef};
use crate::ordinal;

/// A simplicial set given by explicit simplex values and their simplicial operators.
///
/// `reindex(s, θ)` is `s · θ` for a monotone `θ: [n] → [dim s]`. Degeneracy is detected
/// through `reindex`, so models only need to supply nondegenerate simplices and a marking.
pub trait SimplexModel {
    type Simplex: Clone + Eq + Hash + Ord + Debug;

    fn dim(&self, s: &Self::Simplex) -> usize;

    fn reindex(&self, s: &Self::Simplex, theta: &[usize]) -> Self::Simplex;

    /// Nondegenerate simplices of dimension `n`, in any order.
    fn nondegenerate(&self, n: usize) -> Vec<Self::Simplex>;

    /// Marking of a nondegenerate simplex of positive dimension.
    fn is_marked(&self, s: &Self::Simplex) -> bool;

    fn label(&self, _s: &Self::Simplex) -> Option<String> {
        None
    }

    /// Whether `s` lies in the image of `s_t`.
    fn is_degenerate_at(&self, s: &Self::Simplex, t: usize) -> bool {
        let m = self.dim(s);
        t < m && self.reindex(s, &ordinal::collapse_idempotent(m, t)) == *s
    }

    /// Collapse positions of the Eilenberg–Zilber decomposition of `s`.
    fn collapses(&self, s: &Self::Simplex) -> Vec<usize> {
        (0..self.dim(s)).filter(|&t| self.is_degenerate_at(s, t)).collect()
    }

    fn is_degenerate(&self, s: &Self::Simplex) -> bool {
        (0..self.dim(s)).any(|t| self.is_degenerate_at(s, t))
    }

    /// `d_i s`.
    fn face(&self, s: &Self::Simplex, i: usize) -> Self::Simplex {
        self.reindex(s, &ordinal::coface(self.dim(s), i))
    }

    /// `s_i s`.
    fn degeneracy(&self, s: &Self::Simplex, i: usize) -> Self::Simplex {
        self.reindex(s, &ordinal::codegeneracy(self.dim(s), i))
    }
}

/// A model together with the marked simplicial set it presents and the cell/simplex dictionary.
#[derive(Clone, Debug)]
pub struct ModelComplex<M: SimplexModel> {
    pub model: M,
    pub complex: Arc<MarkedSimplicialSet>,
    cells: Vec<Vec<M::Simplex>>,
    index: HashMap<M::Simplex, CellId>,
}

impl<M: SimplexModel> ModelComplex<M> {
    /// Enumerates nondegenerate simplices through `truncation`, sorted in each dimension.
    pub fn build(model: M, truncation: usize) -> Self {
        let mut complex = MarkedSimplicialSet::new(truncation);
        let mut cells: Vec<Vec<M::Simplex>> = Vec::with_capacity(truncation + 1);
        let mut index = HashMap::new();
        for n in 0..=truncation {
            let mut list = model.nondegenerate(n);
            list.sort();
            list.dedup();
            for (i, s) in list.iter().enumerate() {
                index.insert(s.clone(), CellId::new(n, i));
            }
            cells.push(list);
        }
        let mut mc = ModelComplex { model, complex: Arc::new(MarkedSimplicialSet::new(0)), cells, index };
        for n in 0..=truncation {
            for s in &mc.cells[n] {
                let faces = if n == 0 {
                    Vec::new()
                } else {
                    (0..=n).map(|i| mc.locate(&mc.model.face(s, i)).expect("face of an enumerated simplex")).collect()
                };
                let marked = n > 0 && mc.model.is_marked(s);
                complex.push_cell(n, faces, marked, mc.model.label(s));
            }
        }
        mc.complex = Arc::new(complex);
        mc
    }

    /// Normal form of an arbitrary simplex of the model, if its base was enumerated.
    pub fn locate(&self, s: &M::Simplex) -> Option<SimplexRef> {
        let m = self.model.dim(s);
        let collapses = self.model.collapses(s);
        let base = if collapses.is_empty() {
            s.clone()
        } else {
            self.model.reindex(s, &ordinal::first_section(m, &collapses))
        };
        let id = *self.index.get(&base)?;
        Some(SimplexRef { word: DegeneracyWord::from_collapses(collapses), base: id })
    }

    /// Id of a nondegenerate simplex.
    pub fn id_of(&self, s: &M::Simplex) -> Option<CellId> {
        self.index.get(s).copied()
    }

    pub fn simplex(&self, id: CellId) -> &M::Simplex {
        &self.cells[id.dim][id.index]
    }

    /// The simplex value named by a normal form.
    pub fn realize(&self, r: &SimplexRef) -> M::Simplex {
        let base = self.simplex(r.base);
        if r.word.is_empty() {
            return base.clone();
        }
        self.model.reindex(base, &r.word.surjection(r.dim()))
    }

    pub fn simplices(&self, dim: usize) -> &[M::Simplex] {
        self.cells.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn truncation(&self) -> usize {
        self.complex.truncation()
    }
}
