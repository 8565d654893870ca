use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;

use super::complex::{CellId, DegeneracyWord, MarkedSimplicialSet, SimplexRef};
use super::map::SimplicialMap;
use super::model::{ModelComplex, SimplexModel};
use crate::error::{Error, Result};

pub const BOTTOM: &str = "x_bot";
pub const TOP: &str = "x_top";
pub const WEDGE_POINT: &str = "wedge";

/// A simplex of `X ⋆ Y`; `None` stands for the (−1)-simplex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JoinSimplex {
    pub left: Option<SimplexRef>,
    pub right: Option<SimplexRef>,
}

#[derive(Clone, Debug)]
pub struct JoinModel {
    pub left: Arc<MarkedSimplicialSet>,
    pub right: Arc<MarkedSimplicialSet>,
}

fn opt_dim(r: &Option<SimplexRef>) -> isize {
    r.as_ref().map_or(-1, |r| r.dim() as isize)
}

impl SimplexModel for JoinModel {
    type Simplex = JoinSimplex;

    fn dim(&self, s: &JoinSimplex) -> usize {
        (opt_dim(&s.left) + opt_dim(&s.right) + 1) as usize
    }

    fn reindex(&self, s: &JoinSimplex, theta: &[usize]) -> JoinSimplex {
        let k = opt_dim(&s.left);
        let p = theta.iter().take_while(|&&v| (v as isize) <= k).count();
        let left = (p > 0).then(|| self.left.apply(s.left.as_ref().expect("left part"), &theta[..p]));
        let shift = (k + 1) as usize;
        let right = (p < theta.len()).then(|| {
            let rest: Vec<usize> = theta[p..].iter().map(|v| v - shift).collect();
            self.right.apply(s.right.as_ref().expect("right part"), &rest)
        });
        JoinSimplex { left, right }
    }

    fn nondegenerate(&self, n: usize) -> Vec<JoinSimplex> {
        let cells = |x: &MarkedSimplicialSet, d: isize| -> Vec<Option<SimplexRef>> {
            if d < 0 {
                vec![None]
            } else {
                x.cell_ids(d as usize).map(|c| Some(SimplexRef::nondegenerate(c))).collect()
            }
        };
        let mut out = Vec::new();
        for k in -1..=(n as isize) {
            let l = n as isize - 1 - k;
            for a in cells(&self.left, k) {
                for b in cells(&self.right, l) {
                    out.push(JoinSimplex { left: a.clone(), right: b });
                }
            }
        }
        out
    }

    fn is_marked(&self, s: &JoinSimplex) -> bool {
        s.left.as_ref().is_some_and(|r| self.left.is_marked(r)) || s.right.as_ref().is_some_and(|r| self.right.is_marked(r))
    }
}

/// Join `X ⋆ Y` with truncation `min(trunc X, trunc Y) + 1`.
pub fn join_model(x: &MarkedSimplicialSet, y: &MarkedSimplicialSet) -> ModelComplex<JoinModel> {
    let t = x.truncation().min(y.truncation()) + 1;
    ModelComplex::build(JoinModel { left: Arc::new(x.clone()), right: Arc::new(y.clone()) }, t)
}

pub fn join(x: &MarkedSimplicialSet, y: &MarkedSimplicialSet) -> MarkedSimplicialSet {
    (*join_model(x, y).complex).clone()
}

/// A simplex of `ΣX`, read as a simplex of `X ⋆ Δ[0]` modulo `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuspSimplex {
    /// Degeneracy of `x_⊥` in the given dimension.
    Bottom(usize),
    /// Degeneracy of `x_⊤` in the given dimension.
    Top(usize),
    /// `(σ, s_0^{apex-1} *)` with `σ` a simplex of `X` and `apex ≥ 1` copies of the cone point.
    Cone { base: SimplexRef, apex: usize },
}

#[derive(Clone, Debug)]
pub struct SuspModel {
    pub base: Arc<MarkedSimplicialSet>,
}

impl SimplexModel for SuspModel {
    type Simplex = SuspSimplex;

    fn dim(&self, s: &SuspSimplex) -> usize {
        match s {
            SuspSimplex::Bottom(n) | SuspSimplex::Top(n) => *n,
            SuspSimplex::Cone { base, apex } => base.dim() + apex,
        }
    }

    fn reindex(&self, s: &SuspSimplex, theta: &[usize]) -> SuspSimplex {
        let n = theta.len() - 1;
        match s {
            SuspSimplex::Bottom(_) => SuspSimplex::Bottom(n),
            SuspSimplex::Top(_) => SuspSimplex::Top(n),
            SuspSimplex::Cone { base, .. } => {
                let k = base.dim();
                let p = theta.iter().take_while(|&&v| v <= k).count();
                if p == 0 {
                    SuspSimplex::Top(n)
                } else if p == theta.len() {
                    SuspSimplex::Bottom(n)
                } else {
                    SuspSimplex::Cone { base: self.base.apply(base, &theta[..p]), apex: theta.len() - p }
                }
            }
        }
    }

    fn nondegenerate(&self, n: usize) -> Vec<SuspSimplex> {
        if n == 0 {
            return vec![SuspSimplex::Bottom(0), SuspSimplex::Top(0)];
        }
        self.base.cell_ids(n - 1).map(|c| SuspSimplex::Cone { base: SimplexRef::nondegenerate(c), apex: 1 }).collect()
    }

    fn is_marked(&self, s: &SuspSimplex) -> bool {
        match s {
            SuspSimplex::Cone { base, apex: 1 } => self.base.is_marked(base),
            SuspSimplex::Cone { .. } => true,
            _ => false,
        }
    }

    fn label(&self, s: &SuspSimplex) -> Option<String> {
        match s {
            SuspSimplex::Bottom(_) => Some(BOTTOM.to_string()),
            SuspSimplex::Top(_) => Some(TOP.to_string()),
            SuspSimplex::Cone { base, .. } => self.base.label(base.base).map(|l| format!("Σ{l}")),
        }
    }
}

/// Suspension `ΣX` with truncation `trunc X + 1` and basepoints `x_bot`, `x_top`.
pub fn suspend_model(x: &MarkedSimplicialSet) -> ModelComplex<SuspModel> {
    let mut mc = ModelComplex::build(SuspModel { base: Arc::new(x.clone()) }, x.truncation() + 1);
    let mut c = (*mc.complex).clone();
    c.set_basepoint(BOTTOM, CellId::new(0, 0));
    c.set_basepoint(TOP, CellId::new(0, 1));
    mc.complex = Arc::new(c);
    mc
}

pub fn suspend(x: &MarkedSimplicialSet) -> MarkedSimplicialSet {
    (*suspend_model(x).complex).clone()
}

/// `Σf: ΣX → ΣY`.
pub fn suspend_map(f: &SimplicialMap) -> SimplicialMap {
    let sx = suspend_model(&f.source);
    let sy = suspend_model(&f.target);
    SimplicialMap::from_fn(sx.complex.clone(), sy.complex.clone(), |id| {
        let image = match sx.simplex(id) {
            SuspSimplex::Cone { base, apex } => SuspSimplex::Cone { base: f.apply(base), apex: *apex },
            other => other.clone(),
        };
        sy.locate(&image).expect("suspension contains every cone")
    })
}

/// A simplex of `X × Y`.
#[derive(Clone, Debug)]
pub struct ProductModel {
    pub left: Arc<MarkedSimplicialSet>,
    pub right: Arc<MarkedSimplicialSet>,
}

impl SimplexModel for ProductModel {
    type Simplex = (SimplexRef, SimplexRef);

    fn dim(&self, s: &(SimplexRef, SimplexRef)) -> usize {
        s.0.dim()
    }

    fn reindex(&self, s: &(SimplexRef, SimplexRef), theta: &[usize]) -> (SimplexRef, SimplexRef) {
        (self.left.apply(&s.0, theta), self.right.apply(&s.1, theta))
    }

    fn nondegenerate(&self, n: usize) -> Vec<(SimplexRef, SimplexRef)> {
        let mut out = Vec::new();
        for p in 0..=n {
            for q in (n - p)..=n {
                for a in self.left.cell_ids(p) {
                    for b in self.right.cell_ids(q) {
                        for cx in (0..n).combinations(n - p) {
                            let rest: Vec<usize> = (0..n).filter(|j| !cx.contains(j)).collect();
                            for cy in rest.into_iter().combinations(n - q) {
                                out.push((
                                    SimplexRef { word: DegeneracyWord::from_collapses(cx.clone()), base: a },
                                    SimplexRef { word: DegeneracyWord::from_collapses(cy), base: b },
                                ));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn is_marked(&self, s: &(SimplexRef, SimplexRef)) -> bool {
        self.left.is_marked(&s.0) && self.right.is_marked(&s.1)
    }
}

/// Product with its two projections; truncation is the smaller of the inputs.
pub struct Product {
    pub model: ModelComplex<ProductModel>,
    pub left_projection: SimplicialMap,
    pub right_projection: SimplicialMap,
}

pub fn product_model(x: &MarkedSimplicialSet, y: &MarkedSimplicialSet) -> Product {
    let t = x.truncation().min(y.truncation());
    let left = Arc::new(x.clone());
    let right = Arc::new(y.clone());
    let model = ModelComplex::build(ProductModel { left: left.clone(), right: right.clone() }, t);
    let p = model.complex.clone();
    let left_projection = SimplicialMap::from_fn(p.clone(), left, |id| model.simplex(id).0.clone());
    let right_projection = SimplicialMap::from_fn(p, right, |id| model.simplex(id).1.clone());
    Product { model, left_projection, right_projection }
}

pub fn product(x: &MarkedSimplicialSet, y: &MarkedSimplicialSet) -> MarkedSimplicialSet {
    (*product_model(x, y).model.complex).clone()
}

/// Pushout object with its legs `X → P` and `Y → P`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: Arc<MarkedSimplicialSet>,
    pub left_leg: SimplicialMap,
    pub right_leg: SimplicialMap,
}

/// Pushout of `X ←f– A –g→ Y` with `f` injective.
///
/// The cells of `Y` keep their ids; the cells of `X` outside the image of `f` follow them.
pub fn pushout(f: &SimplicialMap, g: &SimplicialMap) -> Result<Pushout> {
    if f.source != g.source {
        return Err(Error::MismatchedMaps);
    }
    if !f.is_injective() {
        return Err(Error::NotInjective);
    }
    let (x, y) = (&f.target, &g.target);
    let t = x.truncation().min(y.truncation());
    let mut p = y.truncate(t.min(y.truncation()))?;
    let f_inv: HashMap<CellId, CellId> = f
        .source
        .all_cell_ids()
        .filter(|a| a.dim <= t)
        .map(|a| (f.image(a).base, a))
        .collect();
    // marks inherited from representatives in X
    for (&xc, &a) in &f_inv {
        let gy = g.image(a);
        if x.is_cell_marked(xc) && !gy.is_degenerate() && gy.dim() <= t {
            p.set_marked(gy.base, true);
        }
    }
    let mut mapped: Vec<Vec<SimplexRef>> = vec![Vec::new(); t + 1];
    for d in 0..=t {
        for xc in x.cell_ids(d) {
            let image = if let Some(&a) = f_inv.get(&xc) {
                g.image(a).clone()
            } else {
                let faces = x
                    .faces(xc)
                    .iter()
                    .map(|r| mapped[r.base.dim][r.base.index].degenerate_by(&r.word.surjection(r.dim())))
                    .collect();
                let id = p.push_cell(d, faces, x.is_cell_marked(xc), x.label(xc).map(str::to_string));
                SimplexRef::nondegenerate(id)
            };
            mapped[d].push(image);
        }
    }
    for (name, &b) in x.basepoints() {
        let r = &mapped[0][b.index];
        if !p.basepoints().contains_key(name) {
            p.set_basepoint(name.clone(), r.base);
        }
    }
    let object = Arc::new(p);
    let x_src = if x.truncation() == t { x.clone() } else { Arc::new(x.truncate(t)?) };
    let y_src = if y.truncation() == t { y.clone() } else { Arc::new(y.truncate(t)?) };
    let left_leg = SimplicialMap::new(x_src, object.clone(), mapped);
    let right_leg = SimplicialMap::from_fn(y_src, object.clone(), SimplexRef::nondegenerate);
    Ok(Pushout { object, left_leg, right_leg })
}

/// The map `Δ[0] → X` picking a vertex.
pub fn point_map(x: &Arc<MarkedSimplicialSet>, vertex: CellId, point_truncation: usize) -> Result<SimplicialMap> {
    if vertex.dim != 0 || !x.contains(vertex) {
        return Err(Error::MissingCell(format!("vertex {vertex}")));
    }
    let mut pt = MarkedSimplicialSet::new(point_truncation);
    pt.push_cell(0, Vec::new(), false, None);
    Ok(SimplicialMap::from_fn(Arc::new(pt), x.clone(), |_| SimplexRef::nondegenerate(vertex)))
}

/// `X ∨ Y` gluing `x` to `y`; cells of `X` come first. The glued vertex is recorded as `wedge`.
pub fn wedge_ss_pushout(x: &MarkedSimplicialSet, xv: CellId, y: &MarkedSimplicialSet, yv: CellId) -> Result<Pushout> {
    let t = x.truncation().min(y.truncation());
    let xa = Arc::new(x.clone());
    let ya = Arc::new(y.clone());
    let into_y = point_map(&ya, yv, t)?;
    let into_x = point_map(&xa, xv, t)?;
    let mut po = pushout(&into_y, &into_x)?;
    let mut obj = (*po.object).clone();
    obj.set_basepoint(WEDGE_POINT, xv);
    let obj = Arc::new(obj);
    po.left_leg.target = obj.clone();
    po.right_leg.target = obj.clone();
    po.object = obj;
    // legs named by argument order: X first
    std::mem::swap(&mut po.left_leg, &mut po.right_leg);
    Ok(po)
}

pub fn wedge_ss(x: &MarkedSimplicialSet, xv: CellId, y: &MarkedSimplicialSet, yv: CellId) -> Result<MarkedSimplicialSet> {
    Ok((*wedge_ss_pushout(x, xv, y, yv)?.object).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msset::generators::{make_generator, GeneratorShape::*};

    #[test]
    fn join_counts() {
        let d1 = make_generator(Standard(1), 3).unwrap();
        let j = join(&d1, &d1);
        assert!(j.validate().is_empty());
        assert_eq!(j.census()[..4], [4, 6, 4, 1]);
        assert_eq!(j.total_count(1), 10);
    }

    #[test]
    fn suspension_counts() {
        let d2 = make_generator(Standard(2), 2).unwrap();
        let s = suspend(&d2);
        assert!(s.validate().is_empty());
        assert_eq!(s.census(), vec![2, 3, 3, 1]);
        assert_eq!(s.basepoint(TOP), Some(CellId::new(0, 1)));
    }

    #[test]
    fn product_of_intervals() {
        let d1 = make_generator(Standard(1), 2).unwrap();
        let p = product(&d1, &d1);
        assert!(p.validate().is_empty());
        assert_eq!(p.census(), vec![4, 5, 2]);
    }

    #[test]
    fn wedge_of_intervals() {
        let d1 = make_generator(Standard(1), 1).unwrap();
        let w = wedge_ss(&d1, CellId::new(0, 1), &d1, CellId::new(0, 0)).unwrap();
        assert!(w.validate().is_empty());
        assert_eq!(w.census(), vec![3, 2]);
    }
}
