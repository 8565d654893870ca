use std::collections::HashMap;
use std::sync::Arc;

use crate::cat2::{classify_cells, CellClasses, Fin2Category};
use crate::error::{Error, Result};
use crate::msset::{MarkedSimplicialSet, ModelComplex, SimplexModel};

/// Which simplices of a nerve carry marks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MarkingPolicy {
    /// Only degenerate simplices.
    Street,
    /// Simplices whose top cell is an identity, and everything in dimension ≥ 3.
    RobertsStreet,
    /// Equivalences, invertible 2-cells, and everything in dimension ≥ 3.
    Natural,
}

/// An `m`-simplex of the Duskin nerve: vertices, edges `a_ij` (`i < j`) and 2-cells
/// `α_ijk: a_ik ⇒ a_ij ; a_jk` (`i < j < k`).
///
/// Edges and 2-cells are stored in colex order, so the data of a face `d_m` is a prefix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DuskinSimplex {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub triangles: Vec<usize>,
}

pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

pub(crate) fn triple_index(i: usize, j: usize, k: usize) -> usize {
    k * (k - 1) * (k - 2) / 6 + j * (j - 1) / 2 + i
}

impl DuskinSimplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// `a_ij` for `i ≤ j`, with `a_ii` the identity.
    pub fn edge(&self, c: &Fin2Category, i: usize, j: usize) -> usize {
        if i == j {
            c.id1(self.vertices[i])
        } else {
            self.edges[pair_index(i, j)]
        }
    }

    /// `α_ijk` for `i ≤ j ≤ k`, with repeated indices giving identities.
    pub fn triangle(&self, c: &Fin2Category, i: usize, j: usize, k: usize) -> usize {
        if i == j || j == k {
            c.id2(self.edge(c, i, k))
        } else {
            self.triangles[triple_index(i, j, k)]
        }
    }

    pub fn reindex(&self, c: &Fin2Category, theta: &[usize]) -> DuskinSimplex {
        let n = theta.len() - 1;
        let vertices = theta.iter().map(|&t| self.vertices[t]).collect();
        let mut edges = Vec::with_capacity(n * (n + 1) / 2);
        for q in 1..=n {
            for p in 0..q {
                edges.push(self.edge(c, theta[p], theta[q]));
            }
        }
        let mut triangles = Vec::new();
        for r in 2..=n {
            for q in 1..r {
                for p in 0..q {
                    triangles.push(self.triangle(c, theta[p], theta[q], theta[r]));
                }
            }
        }
        DuskinSimplex { vertices, edges, triangles }
    }
}

/// The Duskin nerve of a finite 2-category, presented by its simplices.
#[derive(Clone, Debug)]
pub struct DuskinModel {
    pub category: Arc<Fin2Category>,
    pub policy: MarkingPolicy,
    classes: Arc<CellClasses>,
    all: Arc<Vec<Vec<DuskinSimplex>>>,
}

impl DuskinModel {
    pub fn new(category: Arc<Fin2Category>, policy: MarkingPolicy, truncation: usize) -> Result<Self> {
        let problems = category.validate();
        if !problems.is_empty() {
            return Err(Error::Invalid2Category(problems.join("; ")));
        }
        let classes = Arc::new(classify_cells(&category));
        let mut all: Vec<Vec<DuskinSimplex>> = vec![(0..category.object_count())
            .map(|x| DuskinSimplex { vertices: vec![x], edges: Vec::new(), triangles: Vec::new() })
            .collect()];
        for _ in 1..=truncation {
            let next = all.last().expect("dimension 0").iter().flat_map(|s| extensions(&category, s)).collect();
            all.push(next);
        }
        Ok(DuskinModel { category, policy, classes, all: Arc::new(all) })
    }

    /// All simplices of dimension `n`, degenerate ones included.
    pub fn all_simplices(&self, n: usize) -> &[DuskinSimplex] {
        self.all.get(n).map_or(&[], Vec::as_slice)
    }

    /// Whether the top cell of a simplex of dimension 1 or 2 is an identity.
    pub fn top_is_identity(&self, s: &DuskinSimplex) -> bool {
        match s.dim() {
            1 => self.category.is_id1(s.edges[0]),
            2 => self.category.is_id2(s.triangles[0]),
            _ => false,
        }
    }
}

/// Every `m`-simplex whose face `d_m` is `s`.
fn extensions(c: &Fin2Category, s: &DuskinSimplex) -> Vec<DuskinSimplex> {
    let m = s.dim() + 1;
    let mut out = Vec::new();
    for x in 0..c.object_count() {
        let mut new_edges = vec![usize::MAX; m];
        choose_edges(c, s, x, m, m, &mut new_edges, &mut out);
    }
    out
}

fn choose_edges(c: &Fin2Category, s: &DuskinSimplex, x: usize, m: usize, i: usize, new_edges: &mut Vec<usize>, out: &mut Vec<DuskinSimplex>) {
    if i == 0 {
        let mut base = s.clone();
        base.vertices.push(x);
        base.edges.extend_from_slice(new_edges);
        let pairs: Vec<(usize, usize)> = (0..m).rev().flat_map(|i| (i + 1..m).rev().map(move |j| (i, j))).collect();
        let mut tris: HashMap<(usize, usize), usize> = HashMap::new();
        choose_triangles(c, &base, m, &pairs, 0, &mut tris, out);
        return;
    }
    let i = i - 1;
    for &f in c.hom1(s.vertices[i], x) {
        new_edges[i] = f;
        let feasible = (i + 1..m).all(|j| {
            let via = c.hcomp1(s.edges[pair_index(i, j)], new_edges[j]).expect("composable");
            !c.hom2(f, via).is_empty()
        });
        if feasible {
            choose_edges(c, s, x, m, i, new_edges, out);
        }
    }
}

fn choose_triangles(
    c: &Fin2Category,
    base: &DuskinSimplex,
    m: usize,
    pairs: &[(usize, usize)],
    pos: usize,
    tris: &mut HashMap<(usize, usize), usize>,
    out: &mut Vec<DuskinSimplex>,
) {
    let Some(&(i, j)) = pairs.get(pos) else {
        let mut s = base.clone();
        for j in 1..m {
            for i in 0..j {
                s.triangles.push(tris[&(i, j)]);
            }
        }
        out.push(s);
        return;
    };
    let (a_im, a_ij, a_jm) = (base.edge(c, i, m), base.edge(c, i, j), base.edge(c, j, m));
    let via = c.hcomp1(a_ij, a_jm).expect("composable");
    for &alpha in c.hom2(a_im, via) {
        tris.insert((i, j), alpha);
        let ok = (j + 1..m).all(|k| {
            let a_km = base.edge(c, k, m);
            let lhs = c.vcomp(tris[&(i, k)], c.hcomp2(base.triangle(c, i, j, k), c.id2(a_km)).expect("composable"));
            let rhs = c.vcomp(alpha, c.hcomp2(c.id2(a_ij), tris[&(j, k)]).expect("composable"));
            lhs == rhs
        });
        if ok {
            choose_triangles(c, base, m, pairs, pos + 1, tris, out);
        }
    }
    tris.remove(&(i, j));
}

impl SimplexModel for DuskinModel {
    type Simplex = DuskinSimplex;

    fn dim(&self, s: &DuskinSimplex) -> usize {
        s.dim()
    }

    fn reindex(&self, s: &DuskinSimplex, theta: &[usize]) -> DuskinSimplex {
        s.reindex(&self.category, theta)
    }

    fn nondegenerate(&self, n: usize) -> Vec<DuskinSimplex> {
        self.all_simplices(n).iter().filter(|s| !self.is_degenerate(s)).cloned().collect()
    }

    fn is_degenerate_at(&self, s: &DuskinSimplex, t: usize) -> bool {
        let c = &self.category;
        t < s.dim()
            && s.vertices[t] == s.vertices[t + 1]
            && c.is_id1(s.edges[pair_index(t, t + 1)])
            && s.reindex(c, &crate::ordinal::collapse_idempotent(s.dim(), t)) == *s
    }

    fn is_marked(&self, s: &DuskinSimplex) -> bool {
        match (self.policy, s.dim()) {
            (_, 0) => false,
            (MarkingPolicy::Street, _) => false,
            (_, d) if d >= 3 => true,
            (MarkingPolicy::RobertsStreet, _) => self.top_is_identity(s),
            (MarkingPolicy::Natural, 1) => self.classes.equivalences.contains(&s.edges[0]),
            (MarkingPolicy::Natural, _) => self.classes.invertible.contains(&s.triangles[0]),
        }
    }
}

/// The Duskin nerve through dimension `truncation`, as a model complex.
pub fn duskin_model(d: &Fin2Category, policy: MarkingPolicy, truncation: usize) -> Result<ModelComplex<DuskinModel>> {
    let model = DuskinModel::new(Arc::new(d.clone()), policy, truncation)?;
    Ok(ModelComplex::build(model, truncation))
}

pub fn duskin_nerve(d: &Fin2Category, policy: MarkingPolicy, truncation: usize) -> Result<MarkedSimplicialSet> {
    Ok((*duskin_model(d, policy, truncation)?.complex).clone())
}

/// Checks that every compatible boundary of an `m`-simplex has exactly one filler.
///
/// Returns the number of boundaries examined.
pub fn coskeletal_check(model: &DuskinModel, m: usize) -> std::result::Result<usize, String> {
    let lower = model.all_simplices(m - 1);
    let mut fillers: HashMap<Vec<&DuskinSimplex>, usize> = HashMap::new();
    let faces_of: Vec<Vec<DuskinSimplex>> = model.all_simplices(m).iter().map(|s| (0..=m).map(|i| model.face(s, i)).collect()).collect();
    let index: HashMap<&DuskinSimplex, usize> = lower.iter().enumerate().map(|(i, s)| (s, i)).collect();
    for faces in &faces_of {
        *fillers.entry(faces.iter().map(|f| &lower[index[f]]).collect()).or_default() += 1;
    }
    // spheres, built face by face; candidates for d_j are indexed by their own d_0
    let mut by_d0: HashMap<DuskinSimplex, Vec<&DuskinSimplex>> = HashMap::new();
    for s in lower {
        by_d0.entry(model.face(s, 0)).or_default().push(s);
    }
    let mut count = 0;
    let mut chosen: Vec<&DuskinSimplex> = Vec::with_capacity(m + 1);
    let mut failure = None;
    sphere_search(model, m, lower, &by_d0, &mut chosen, &mut |sphere| {
        count += 1;
        match fillers.get(sphere).copied() {
            Some(1) => true,
            n => {
                failure = Some(format!("a boundary in dimension {m} has {} fillers", n.unwrap_or(0)));
                false
            }
        }
    });
    if let Some(f) = failure {
        return Err(f);
    }
    if count != faces_of.len() {
        return Err(format!("{count} boundaries but {} simplices in dimension {m}", faces_of.len()));
    }
    Ok(count)
}

fn sphere_search<'a>(
    model: &DuskinModel,
    m: usize,
    lower: &'a [DuskinSimplex],
    by_d0: &HashMap<DuskinSimplex, Vec<&'a DuskinSimplex>>,
    chosen: &mut Vec<&'a DuskinSimplex>,
    visit: &mut dyn FnMut(&Vec<&'a DuskinSimplex>) -> bool,
) -> bool {
    let j = chosen.len();
    if j == m + 1 {
        return visit(chosen);
    }
    let cands: Vec<&DuskinSimplex> = if j == 0 {
        lower.iter().collect()
    } else {
        // d_0 d_j = d_{j-1} d_0
        by_d0.get(&model.face(chosen[0], j - 1)).cloned().unwrap_or_default()
    };
    for c in cands {
        let ok = (1..j).all(|i| model.face(c, i) == model.face(chosen[i], j - 1));
        if ok {
            chosen.push(c);
            let go_on = sphere_search(model, m, lower, by_d0, chosen, visit);
            chosen.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}
