use crate::cat2::FinCategory;
use crate::msset::{SimplexModel, SimplexRef};
use crate::nerve::{MatrixModel, MatrixSimplex, WedgePairModel};

/// Type, suspect index and suspect flag of a simplex of `N(ΣP)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuspClassification {
    /// Number of rows minus one.
    pub k: isize,
    /// Least `r` such that rows `r..=k` are all constant; `k + 1` if the last row is not.
    pub r: usize,
    pub suspect: bool,
}

/// Least `r ≤ k` such that rows `r..=k` are constant, else `k + 1`.
pub fn suspect_index_susp(p: &FinCategory, s: &MatrixSimplex) -> usize {
    let rows = s.rows();
    let mut r = rows;
    while r > 0 && s.row_constant(p, r - 1) {
        r -= 1;
    }
    r
}

pub fn classify_susp(model: &MatrixModel, s: &MatrixSimplex) -> SuspClassification {
    let p = &model.base;
    let r = suspect_index_susp(p, s);
    let degenerate = model.is_degenerate(s);
    // a zero index means a single row of identities or a single column, which is suspect only when degenerate
    let suspect = degenerate || (r >= 1 && r < s.rows() && p.is_identity(s.v(r - 1, 0)));
    SuspClassification { k: s.k, r, suspect }
}

/// Type pair, suspect index and suspect flag of a simplex of `N(A ∨ A')` in pair coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeClassification {
    pub k_left: isize,
    pub k_right: isize,
    pub r: isize,
    pub in_image: bool,
    pub suspect: bool,
}

/// Largest `r` in `[kρ+1, kρ']` such that `ρ'` collapses at every position in `kρ..r`, else `kρ`.
pub fn suspect_index_wedge(k_left: isize, k_right: isize, right: &SimplexRef) -> isize {
    let mut r = k_left;
    while r < k_right && (r < 0 || right.word.contains(r as usize)) {
        r += 1;
    }
    r
}

pub fn classify_wedge(model: &WedgePairModel, s: &(SimplexRef, SimplexRef)) -> WedgeClassification {
    let m = s.0.dim() as isize;
    let (k_left, k_right) = model.type_pair(s);
    let r = suspect_index_wedge(k_left, k_right, &s.1);
    // the left factor sits at `(σ, s_0^m ⊥')`, the right at `(s_0^m ⊤, σ')`
    let in_image = k_left == -1 || k_right == m;
    let degenerate = model.is_degenerate(s);
    let suspect =
        degenerate || in_image || (r > k_left && r <= k_right && r >= 0 && s.0.word.contains(r as usize));
    WedgeClassification { k_left, k_right, r, in_image, suspect }
}
