use std::sync::Arc;

use super::duskin::{duskin_model, DuskinSimplex, MarkingPolicy};
use crate::cat2::{from_category, suspend2, FinCategory};
use crate::error::Result;
use crate::msset::{suspend_model, CellId, MarkedSimplicialSet, ModelComplex, SimplexModel, SimplicialMap, SuspSimplex, BOTTOM, TOP};

/// A simplex of `N(ΣP)` as a grid `[k] × [l]^op → P`, with `k + l + 1` its dimension.
///
/// Vertices `0..=k` are the rows (sent to `x_⊥`), the rest are the columns (sent to `x_⊤`).
/// `k = -1` or `l = -1` gives the degeneracies of `x_⊤` and `x_⊥`, with an empty grid.
/// Objects are stored row-major; `vertical[i*(l+1)+c]` is `G(i,c) → G(i+1,c)` and
/// `horizontal[i*l+c-1]` is `G(i,c) → G(i,c-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixSimplex {
    pub k: isize,
    pub l: isize,
    pub objects: Vec<usize>,
    pub vertical: Vec<usize>,
    pub horizontal: Vec<usize>,
}

impl MatrixSimplex {
    pub fn dim(&self) -> usize {
        (self.k + self.l + 1) as usize
    }

    pub fn rows(&self) -> usize {
        (self.k + 1).max(0) as usize
    }

    pub fn cols(&self) -> usize {
        (self.l + 1).max(0) as usize
    }

    pub fn object(&self, i: usize, c: usize) -> usize {
        self.objects[i * self.cols() + c]
    }

    pub fn v(&self, i: usize, c: usize) -> usize {
        self.vertical[i * self.cols() + c]
    }

    pub fn h(&self, i: usize, c: usize) -> usize {
        self.horizontal[i * (self.cols() - 1) + c - 1]
    }

    /// The composite `G(i,c) → G(i2,c2)` for `i ≤ i2`, `c ≥ c2`: down column `c`, then along row `i2`.
    pub fn arrow(&self, p: &FinCategory, i: usize, c: usize, i2: usize, c2: usize) -> usize {
        let mut f = p.identity(self.object(i, c));
        for r in i..i2 {
            f = p.then(f, self.v(r, c)).expect("composable");
        }
        for q in (c2 + 1..=c).rev() {
            f = p.then(f, self.h(i2, q)).expect("composable");
        }
        f
    }

    /// `s_0^m x_⊥`.
    pub fn bottom(m: usize) -> Self {
        MatrixSimplex { k: m as isize, l: -1, objects: Vec::new(), vertical: Vec::new(), horizontal: Vec::new() }
    }

    /// `s_0^m x_⊤`.
    pub fn top(m: usize) -> Self {
        MatrixSimplex { k: -1, l: m as isize, objects: Vec::new(), vertical: Vec::new(), horizontal: Vec::new() }
    }

    /// Row `i` is constant: all its horizontal arrows are identities.
    pub fn row_constant(&self, p: &FinCategory, i: usize) -> bool {
        (1..self.cols()).all(|c| p.is_identity(self.h(i, c)))
    }

    pub fn reindex(&self, p: &FinCategory, theta: &[usize]) -> MatrixSimplex {
        let n = theta.len() - 1;
        let rows = theta.iter().take_while(|&&t| (t as isize) <= self.k).count();
        let k2 = rows as isize - 1;
        let l2 = n as isize - rows as isize;
        if rows == 0 {
            return MatrixSimplex::top(n);
        }
        if rows == n + 1 {
            return MatrixSimplex::bottom(n);
        }
        let col = |q: usize| theta[rows + q] - self.rows();
        let cols = n + 1 - rows;
        let mut objects = Vec::with_capacity(rows * cols);
        let mut vertical = Vec::new();
        let mut horizontal = Vec::new();
        for pr in 0..rows {
            for q in 0..cols {
                objects.push(self.object(theta[pr], col(q)));
            }
        }
        for pr in 0..rows - 1 {
            for q in 0..cols {
                vertical.push(self.arrow(p, theta[pr], col(q), theta[pr + 1], col(q)));
            }
        }
        for pr in 0..rows {
            for q in 1..cols {
                horizontal.push(self.arrow(p, theta[pr], col(q), theta[pr], col(q - 1)));
            }
        }
        MatrixSimplex { k: k2, l: l2, objects, vertical, horizontal }
    }
}

/// `N(ΣP)` in matrix coordinates.
#[derive(Clone, Debug)]
pub struct MatrixModel {
    pub base: Arc<FinCategory>,
    pub policy: MarkingPolicy,
}

impl MatrixModel {
    /// Every functor `[k] × [l]^op → P`, rows enumerated top to bottom and each row right to left.
    pub fn grids(&self, k: usize, l: usize, nondegenerate_only: bool) -> Vec<MatrixSimplex> {
        let mut out = Vec::new();
        let (rows, cols) = (k + 1, l + 1);
        let mut s = MatrixSimplex {
            k: k as isize,
            l: l as isize,
            objects: vec![0; rows * cols],
            vertical: vec![0; k * cols],
            horizontal: vec![0; rows * l],
        };
        self.fill(&mut s, 0, nondegenerate_only, &mut out);
        out
    }

    fn fill(&self, s: &mut MatrixSimplex, pos: usize, nondeg: bool, out: &mut Vec<MatrixSimplex>) {
        let (rows, cols) = (s.rows(), s.cols());
        let p = &*self.base;
        if pos == rows * cols {
            if !nondeg || self.grid_nondegenerate(s) {
                out.push(s.clone());
            }
            return;
        }
        let i = pos / cols;
        let c = cols - 1 - pos % cols;
        if nondeg && c == cols - 1 && i >= 2 && (0..cols).all(|q| p.is_identity(s.v(i - 2, q))) {
            return;
        }
        for o in 0..p.object_count() {
            s.objects[i * cols + c] = o;
            let ups: Vec<usize> = if i > 0 { p.hom(s.object(i - 1, c), o).to_vec() } else { vec![usize::MAX] };
            let lefts: Vec<usize> = if c + 1 < cols { p.hom(s.object(i, c + 1), o).to_vec() } else { vec![usize::MAX] };
            for &up in &ups {
                for &left in &lefts {
                    if up != usize::MAX && left != usize::MAX {
                        let a = p.then(s.h(i - 1, c + 1), up).expect("composable");
                        let b = p.then(s.v(i - 1, c + 1), left).expect("composable");
                        if a != b {
                            continue;
                        }
                    }
                    if up != usize::MAX {
                        s.vertical[(i - 1) * cols + c] = up;
                    }
                    if left != usize::MAX {
                        s.horizontal[i * (cols - 1) + c] = left;
                    }
                    self.fill(s, pos + 1, nondeg, out);
                }
            }
        }
    }

    /// No two consecutive rows and no two consecutive columns coincide.
    pub fn grid_nondegenerate(&self, s: &MatrixSimplex) -> bool {
        let p = &*self.base;
        let (rows, cols) = (s.rows(), s.cols());
        let row_repeat = (0..rows.saturating_sub(1)).any(|i| (0..cols).all(|c| p.is_identity(s.v(i, c))));
        let col_repeat = (1..cols).any(|c| (0..rows).all(|i| p.is_identity(s.h(i, c))));
        !row_repeat && !col_repeat
    }

    /// The unique non-identity generator of a nondegenerate 2-simplex.
    fn two_simplex_arrow(&self, s: &MatrixSimplex) -> usize {
        if s.k == 1 {
            s.v(0, 0)
        } else {
            s.h(0, 1)
        }
    }
}

impl SimplexModel for MatrixModel {
    type Simplex = MatrixSimplex;

    fn dim(&self, s: &MatrixSimplex) -> usize {
        s.dim()
    }

    fn reindex(&self, s: &MatrixSimplex, theta: &[usize]) -> MatrixSimplex {
        s.reindex(&self.base, theta)
    }

    fn nondegenerate(&self, n: usize) -> Vec<MatrixSimplex> {
        if n == 0 {
            return vec![MatrixSimplex::bottom(0), MatrixSimplex::top(0)];
        }
        (0..n).flat_map(|k| self.grids(k, n - 1 - k, true)).collect()
    }

    fn is_degenerate_at(&self, s: &MatrixSimplex, t: usize) -> bool {
        let p = &*self.base;
        let (rows, cols) = (s.rows(), s.cols());
        if t >= s.dim() {
            return false;
        }
        if rows == 0 || cols == 0 {
            return true;
        }
        if t + 1 < rows {
            (0..cols).all(|c| p.is_identity(s.v(t, c)))
        } else if t + 1 == rows {
            false
        } else {
            (0..rows).all(|i| p.is_identity(s.h(i, t + 1 - rows)))
        }
    }

    /// The rule derived for the Roberts–Street marking: nondegenerate simplices of dimension 1 and 2
    /// are unmarked, dimension ≥ 3 marked. The natural marking marks 2-simplices whose
    /// generator is invertible.
    fn is_marked(&self, s: &MatrixSimplex) -> bool {
        match (self.policy, s.dim()) {
            (_, 0) | (MarkingPolicy::Street, _) => false,
            (_, d) if d >= 3 => true,
            (MarkingPolicy::RobertsStreet, _) | (MarkingPolicy::Natural, 1) => false,
            (MarkingPolicy::Natural, _) => self.base.inverse(self.two_simplex_arrow(s)).is_some(),
        }
    }
}

/// The matrix model through dimension `truncation`, with basepoints `x_bot`, `x_top`.
pub fn matrix_model_complex(p: &FinCategory, policy: MarkingPolicy, truncation: usize) -> ModelComplex<MatrixModel> {
    let mut mc = ModelComplex::build(MatrixModel { base: Arc::new(p.clone()), policy }, truncation);
    let mut c = (*mc.complex).clone();
    c.set_basepoint(BOTTOM, mc.id_of(&MatrixSimplex::bottom(0)).expect("bottom vertex"));
    c.set_basepoint(TOP, mc.id_of(&MatrixSimplex::top(0)).expect("top vertex"));
    mc.complex = Arc::new(c);
    mc
}

/// `Mat(P)` with Roberts–Street marking.
pub fn matrix_model(p: &FinCategory, truncation: usize) -> MarkedSimplicialSet {
    (*matrix_model_complex(p, MarkingPolicy::RobertsStreet, truncation).complex).clone()
}

/// The Duskin simplex of `ΣP` named by a grid. Cells of `ΣP` are indexed as in `suspend2`.
pub fn matrix_to_duskin(s: &MatrixSimplex, p: &FinCategory) -> DuskinSimplex {
    let m = s.dim();
    let rows = s.rows();
    let side = |x: usize| usize::from(x >= rows);
    let vertices = (0..=m).map(side).collect();
    let edge = |i: usize, j: usize| {
        if side(i) == side(j) {
            side(i)
        } else {
            2 + s.object(i, j - rows)
        }
    };
    let mut edges = Vec::new();
    for j in 1..=m {
        for i in 0..j {
            edges.push(edge(i, j));
        }
    }
    let mut triangles = Vec::new();
    for k in 2..=m {
        for j in 1..k {
            for i in 0..j {
                let t = if side(i) == side(k) {
                    side(i)
                } else if j < rows {
                    // a_ik ⇒ a_jk: down the column of k
                    2 + s.arrow(p, i, k - rows, j, k - rows)
                } else {
                    // a_ik ⇒ a_ij: along the row of i
                    2 + s.arrow(p, i, k - rows, i, j - rows)
                };
                triangles.push(t);
            }
        }
    }
    DuskinSimplex { vertices, edges, triangles }
}

/// Isomorphism `Mat(P) → N(ΣP)` through the direct translation of grids.
pub fn matrix_duskin_map(p: &FinCategory, policy: MarkingPolicy, truncation: usize) -> Result<SimplicialMap> {
    let mat = matrix_model_complex(p, policy, truncation);
    let nerve = duskin_model(&suspend2(p), policy, truncation)?;
    let mut missing = None;
    let map = SimplicialMap::from_fn(mat.complex.clone(), nerve.complex.clone(), |id| {
        let d = matrix_to_duskin(mat.simplex(id), p);
        nerve.locate(&d).unwrap_or_else(|| {
            missing = Some(id);
            crate::msset::SimplexRef::nondegenerate(CellId::new(0, 0))
        })
    });
    if let Some(id) = missing {
        return Err(crate::Error::CrossCheck(format!("grid {id} has no Duskin counterpart")));
    }
    Ok(map)
}

/// `Σ(N P) → N(ΣP)` in matrix coordinates: an `m`-simplex of `N P` becomes a single column.
pub fn susp_comparison(p: &FinCategory, policy: MarkingPolicy, truncation: usize) -> Result<(ModelComplex<MatrixModel>, SimplicialMap)> {
    let np = duskin_model(&from_category(p), policy, truncation.saturating_sub(1))?;
    let sigma = suspend_model(&np.complex);
    let mat = matrix_model_complex(p, policy, truncation);
    let sigma_complex = if truncation == 0 { Arc::new(sigma.complex.truncate(0)?) } else { sigma.complex.clone() };
    let map = SimplicialMap::from_fn(sigma_complex, mat.complex.clone(), |id| {
        let grid = match sigma.simplex(id) {
            SuspSimplex::Bottom(n) => MatrixSimplex::bottom(*n),
            SuspSimplex::Top(n) => MatrixSimplex::top(*n),
            SuspSimplex::Cone { base, apex } => {
                let d = np.realize(base);
                let column = single_column(&d, p);
                column.reindex(p, &cone_map(d.dim(), *apex))
            }
        };
        mat.locate(&grid).expect("single-column grids are simplices")
    });
    Ok((mat, map))
}

fn single_column(d: &DuskinSimplex, p: &FinCategory) -> MatrixSimplex {
    let m = d.dim();
    let c2 = from_category(p);
    MatrixSimplex {
        k: m as isize,
        l: 0,
        objects: d.vertices.clone(),
        vertical: (0..m).map(|i| d.edge(&c2, i, i + 1)).collect(),
        horizontal: Vec::new(),
    }
}

/// `[m + apex] → [m + 1]`, collapsing the cone vertices onto the last.
fn cone_map(m: usize, apex: usize) -> Vec<usize> {
    (0..=m).chain(std::iter::repeat(m + 1).take(apex)).collect()
}
