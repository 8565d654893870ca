use std::collections::HashSet;
use std::sync::Arc;

use super::complex::{CellId, MarkedSimplicialSet, SimplexRef};

/// Map of marked simplicial sets, given on nondegenerate source cells.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    pub source: Arc<MarkedSimplicialSet>,
    pub target: Arc<MarkedSimplicialSet>,
    /// `assignment[d][i]` is the image of cell `(d, i)`.
    pub assignment: Vec<Vec<SimplexRef>>,
}

impl SimplicialMap {
    pub fn new(source: Arc<MarkedSimplicialSet>, target: Arc<MarkedSimplicialSet>, assignment: Vec<Vec<SimplexRef>>) -> Self {
        SimplicialMap { source, target, assignment }
    }

    /// Builds the assignment cell by cell.
    pub fn from_fn(
        source: Arc<MarkedSimplicialSet>,
        target: Arc<MarkedSimplicialSet>,
        mut f: impl FnMut(CellId) -> SimplexRef,
    ) -> Self {
        let assignment = (0..=source.truncation()).map(|d| source.cell_ids(d).map(&mut f).collect()).collect();
        SimplicialMap { source, target, assignment }
    }

    pub fn image(&self, cell: CellId) -> &SimplexRef {
        &self.assignment[cell.dim][cell.index]
    }

    /// Image of an arbitrary source simplex.
    pub fn apply(&self, r: &SimplexRef) -> SimplexRef {
        self.image(r.base).degenerate_by(&r.word.surjection(r.dim()))
    }

    /// Lists every failure of face compatibility, marking preservation or typing.
    pub fn check(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.assignment.len() != self.source.truncation() + 1 {
            out.push("assignment does not cover every source dimension".to_string());
            return out;
        }
        for id in self.source.all_cell_ids() {
            let Some(img) = self.assignment[id.dim].get(id.index) else {
                out.push(format!("cell {id} has no image"));
                continue;
            };
            if !self.target.contains(img.base) || img.dim() != id.dim {
                out.push(format!("cell {id} maps to ill-typed {img}"));
                continue;
            }
            if self.source.is_cell_marked(id) && !self.target.is_marked(img) {
                out.push(format!("marked cell {id} maps to unmarked {img}"));
            }
            if id.dim == 0 {
                continue;
            }
            for (i, f) in self.source.faces(id).iter().enumerate() {
                let lhs = self.target.face(img, i);
                let rhs = self.apply(f);
                if lhs != rhs {
                    out.push(format!("d{i} of cell {id}: image face {lhs} but face image {rhs}"));
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_empty()
    }

    /// Injective on nondegenerate simplices (images nondegenerate and distinct).
    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::new();
        self.assignment.iter().flatten().all(|r| !r.is_degenerate() && seen.insert(r.base))
    }

    /// Injective, and every target cell is hit.
    pub fn is_bijective(&self) -> bool {
        self.is_injective()
            && (0..=self.target.truncation().max(self.source.truncation()))
                .all(|d| self.source.count(d) == self.target.count(d))
    }

    /// A simplex of the image is marked in the source iff it is marked in the target.
    pub fn is_regular(&self) -> bool {
        self.source.all_cell_ids().all(|id| self.source.is_cell_marked(id) == self.target.is_marked(self.image(id)))
    }

    /// Set of target cells hit by nondegenerate source cells.
    pub fn image_cells(&self) -> HashSet<CellId> {
        self.assignment.iter().flatten().filter(|r| !r.is_degenerate()).map(|r| r.base).collect()
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &SimplicialMap) -> SimplicialMap {
        let assignment = self.assignment.iter().map(|row| row.iter().map(|r| g.apply(r)).collect()).collect();
        SimplicialMap { source: self.source.clone(), target: g.target.clone(), assignment }
    }

    /// Identity on `x`.
    pub fn identity(x: Arc<MarkedSimplicialSet>) -> SimplicialMap {
        SimplicialMap::from_fn(x.clone(), x, SimplexRef::nondegenerate)
    }
}
