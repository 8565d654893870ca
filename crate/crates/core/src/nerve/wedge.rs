use std::collections::HashMap;
use std::sync::Arc;

use super::duskin::{duskin_model, DuskinModel, DuskinSimplex, MarkingPolicy};
use crate::cat2::{wedge2, WedgePresentation};
use crate::error::{Error, Result};
use crate::msset::{
    find_isomorphism, wedge_ss_pushout, CellId, DegeneracyWord, MarkedSimplicialSet, ModelComplex, ProductModel, SimplexModel,
    SimplexRef, SimplicialMap,
};

/// `N(A ∨ A')` inside `N A × N A'`: pairs whose characteristic values satisfy `χρ(s) ≥ χ'ρ'(s)`.
#[derive(Clone, Debug)]
pub struct WedgePairModel {
    pub left: Arc<MarkedSimplicialSet>,
    pub right: Arc<MarkedSimplicialSet>,
    /// χ of each vertex of the left nerve, χ' of each vertex of the right nerve.
    chi_left: Vec<usize>,
    chi_right: Vec<usize>,
    /// Vertex cells of each nondegenerate simplex.
    left_vertices: Vec<Vec<Vec<usize>>>,
    right_vertices: Vec<Vec<Vec<usize>>>,
}

fn vertex_table(x: &MarkedSimplicialSet) -> Vec<Vec<Vec<usize>>> {
    (0..=x.truncation()).map(|d| x.cell_ids(d).map(|id| x.vertices(id).iter().map(|v| v.index).collect()).collect()).collect()
}

impl WedgePairModel {
    fn vertex(table: &[Vec<Vec<usize>>], r: &SimplexRef, s: usize) -> usize {
        let surj = r.word.surjection(r.dim());
        table[r.base.dim][r.base.index][surj[s]]
    }

    /// `χρ(s)` for each vertex `s`.
    pub fn chi_profile_left(&self, r: &SimplexRef) -> Vec<usize> {
        (0..=r.dim()).map(|s| self.chi_left[Self::vertex(&self.left_vertices, r, s)]).collect()
    }

    /// `χ'ρ'(s)` for each vertex `s`.
    pub fn chi_profile_right(&self, r: &SimplexRef) -> Vec<usize> {
        (0..=r.dim()).map(|s| self.chi_right[Self::vertex(&self.right_vertices, r, s)]).collect()
    }

    pub fn admissible(&self, s: &(SimplexRef, SimplexRef)) -> bool {
        self.chi_profile_left(&s.0).iter().zip(self.chi_profile_right(&s.1)).all(|(a, b)| *a >= b)
    }

    /// `(k_ρ, k_ρ')`: the last vertex on which each characteristic functor is 0, or −1.
    pub fn type_pair(&self, s: &(SimplexRef, SimplexRef)) -> (isize, isize) {
        let last_zero = |p: Vec<usize>| p.iter().rposition(|&v| v == 0).map_or(-1, |i| i as isize);
        (last_zero(self.chi_profile_left(&s.0)), last_zero(self.chi_profile_right(&s.1)))
    }

    fn product(&self) -> ProductModel {
        ProductModel { left: self.left.clone(), right: self.right.clone() }
    }
}

impl SimplexModel for WedgePairModel {
    type Simplex = (SimplexRef, SimplexRef);

    fn dim(&self, s: &Self::Simplex) -> usize {
        s.0.dim()
    }

    fn reindex(&self, s: &Self::Simplex, theta: &[usize]) -> Self::Simplex {
        (self.left.apply(&s.0, theta), self.right.apply(&s.1, theta))
    }

    fn nondegenerate(&self, n: usize) -> Vec<Self::Simplex> {
        self.product().nondegenerate(n).into_iter().filter(|s| self.admissible(s)).collect()
    }

    fn is_degenerate_at(&self, s: &Self::Simplex, t: usize) -> bool {
        s.0.word.contains(t) && s.1.word.contains(t)
    }

    fn is_marked(&self, s: &Self::Simplex) -> bool {
        self.left.is_marked(&s.0) && self.right.is_marked(&s.1)
    }
}

/// The nerve of a wedge in pair coordinates, with the comparison from the wedge of nerves.
#[derive(Clone, Debug)]
pub struct WedgeNerve {
    pub left: ModelComplex<DuskinModel>,
    pub right: ModelComplex<DuskinModel>,
    pub pairs: ModelComplex<WedgePairModel>,
    /// `N A ∨ N A'`.
    pub wedge: Arc<MarkedSimplicialSet>,
    pub comparison: SimplicialMap,
    pub top_vertex: CellId,
    pub bottom_vertex: CellId,
}

impl WedgeNerve {
    pub fn model(&self) -> &WedgePairModel {
        &self.pairs.model
    }
}

fn vertex_cell(m: &ModelComplex<DuskinModel>, object: usize) -> Result<CellId> {
    m.id_of(&DuskinSimplex { vertices: vec![object], edges: Vec::new(), triangles: Vec::new() })
        .ok_or_else(|| Error::MissingCell(format!("vertex for object {object}")))
}

fn constant(vertex: CellId, m: usize) -> SimplexRef {
    SimplexRef { word: DegeneracyWord::from_collapses(0..m), base: vertex }
}

/// Builds `N(A ∨ A')` through `truncation` in pair coordinates with no cross-check.
pub fn wedge_nerve_pairs_unchecked(w: &WedgePresentation, policy: MarkingPolicy, truncation: usize) -> Result<WedgeNerve> {
    w.check()?;
    let left = duskin_model(&w.left, policy, truncation)?;
    let right = duskin_model(&w.right, policy, truncation)?;
    let chi_of = |m: &ModelComplex<DuskinModel>, chi: &[usize]| -> Vec<usize> {
        m.complex.cell_ids(0).map(|id| chi[m.simplex(id).vertices[0]]).collect()
    };
    let model = WedgePairModel {
        left: left.complex.clone(),
        right: right.complex.clone(),
        chi_left: chi_of(&left, &w.chi_left.obj),
        chi_right: chi_of(&right, &w.chi_right.obj),
        left_vertices: vertex_table(&left.complex),
        right_vertices: vertex_table(&right.complex),
    };
    let pairs = ModelComplex::build(model, truncation);
    let top_vertex = vertex_cell(&left, w.top)?;
    let bottom_vertex = vertex_cell(&right, w.bottom)?;
    let po = wedge_ss_pushout(&left.complex, top_vertex, &right.complex, bottom_vertex)?;
    let mut pair_of: HashMap<CellId, (SimplexRef, SimplexRef)> = HashMap::new();
    for id in po.left_leg.source.all_cell_ids() {
        let r = po.left_leg.image(id);
        if !r.is_degenerate() {
            pair_of.insert(r.base, (SimplexRef::nondegenerate(id), constant(bottom_vertex, id.dim)));
        }
    }
    for id in po.right_leg.source.all_cell_ids() {
        let r = po.right_leg.image(id);
        if !r.is_degenerate() && !pair_of.contains_key(&r.base) {
            pair_of.insert(r.base, (constant(top_vertex, id.dim), SimplexRef::nondegenerate(id)));
        }
    }
    let mut missing = None;
    let comparison = SimplicialMap::from_fn(po.object.clone(), pairs.complex.clone(), |id| {
        pairs.locate(&pair_of[&id]).unwrap_or_else(|| {
            missing = Some(id);
            SimplexRef::nondegenerate(CellId::new(0, 0))
        })
    });
    if let Some(id) = missing {
        return Err(Error::CrossCheck(format!("wedge cell {id} has no pair counterpart")));
    }
    Ok(WedgeNerve { left, right, pairs, wedge: po.object, comparison, top_vertex, bottom_vertex })
}

/// [`wedge_nerve_pairs_unchecked`], followed by an isomorphism search against the Duskin nerve
/// of `wedge2(w)` through dimension `check_dim`.
pub fn wedge_nerve_pairs_checked(w: &WedgePresentation, policy: MarkingPolicy, truncation: usize, check_dim: usize) -> Result<WedgeNerve> {
    let wn = wedge_nerve_pairs_unchecked(w, policy, truncation)?;
    let dim = check_dim.min(truncation);
    let direct = duskin_model(&wedge2(w)?.category, policy, dim)?;
    let ours = wn.pairs.complex.truncate(dim)?;
    if find_isomorphism(&ours, &direct.complex, false).is_none() {
        return Err(Error::CrossCheck(format!("pair model and Duskin nerve of the wedge differ through dimension {dim}")));
    }
    Ok(wn)
}

/// The pair model, cross-checked through its full truncation.
pub fn wedge_nerve_pairs(w: &WedgePresentation, policy: MarkingPolicy, truncation: usize) -> Result<WedgeNerve> {
    wedge_nerve_pairs_checked(w, policy, truncation, truncation)
}
