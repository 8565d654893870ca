use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ordinal;

/// A nondegenerate simplex: its dimension and its index among the nondegenerate simplices of
/// that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellId {
    pub dim: usize,
    pub index: usize,
}

impl CellId {
    pub fn new(dim: usize, index: usize) -> Self {
        CellId { dim, index }
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.dim, self.index)
    }
}

/// Reduced degeneracy word `s_{i_1} … s_{i_k}` with `i_1 > … > i_k`.
///
/// The indices are exactly the positions `j` where the encoded surjection identifies `j` and `j+1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegeneracyWord(Vec<usize>);

impl DegeneracyWord {
    pub fn identity() -> Self {
        DegeneracyWord(Vec::new())
    }

    /// Word from its indices; they must be strictly descending.
    pub fn from_indices(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Malformed(format!(
                "degeneracy indices {indices:?} are not strictly descending"
            )));
        }
        Ok(DegeneracyWord(indices))
    }

    /// Word from an arbitrary set of collapse positions.
    pub fn from_collapses(collapses: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = collapses.into_iter().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.dedup();
        DegeneracyWord(v)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.0.contains(&position)
    }

    /// The surjection `[n] → [n - len]` this word names, as a value vector.
    pub fn surjection(&self, n: usize) -> Vec<usize> {
        ordinal::surjection_from_collapses(n, &self.0)
    }
}

/// Eilenberg–Zilber normal form `s_{i_1}…s_{i_k} base` of a possibly degenerate simplex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub word: DegeneracyWord,
    pub base: CellId,
}

impl SimplexRef {
    pub fn nondegenerate(base: CellId) -> Self {
        SimplexRef { word: DegeneracyWord::identity(), base }
    }

    pub fn dim(&self) -> usize {
        self.base.dim + self.word.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }

    /// Precompose with a further surjection `π: [n'] → [dim self]`.
    pub fn degenerate_by(&self, surjection: &[usize]) -> SimplexRef {
        let inner = self.word.surjection(self.dim());
        let total = ordinal::compose(&inner, surjection);
        SimplexRef { word: DegeneracyWord::from_collapses(ordinal::collapses_of(&total)), base: self.base }
    }
}

impl fmt::Display for SimplexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.word.indices() {
            write!(f, "s{i} ")?;
        }
        write!(f, "{}", self.base)
    }
}

/// A stored nondegenerate simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub faces: Vec<SimplexRef>,
    pub marked: bool,
    pub label: Option<String>,
}

/// Finite simplicial set with marking, truncated at a dimension.
///
/// Only nondegenerate simplices of dimension `0..=truncation` are stored. Above the truncation
/// the object is read as its skeleton, so every operation is well defined; results that depend
/// on higher cells document their own truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedSimplicialSet {
    truncation: usize,
    cells: Vec<Vec<Cell>>,
    basepoints: BTreeMap<String, CellId>,
}

/// One failed invariant reported by [`MarkedSimplicialSet::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub cell: CellId,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cell {}: {}", self.cell, self.message)
    }
}

impl MarkedSimplicialSet {
    /// Empty object truncated at `truncation`.
    pub fn new(truncation: usize) -> Self {
        MarkedSimplicialSet { truncation, cells: vec![Vec::new(); truncation + 1], basepoints: BTreeMap::new() }
    }

    /// Appends a nondegenerate cell. Consistency is checked by [`validate`](Self::validate).
    pub fn push_cell(&mut self, dim: usize, faces: Vec<SimplexRef>, marked: bool, label: Option<String>) -> CellId {
        assert!(dim <= self.truncation, "cell of dimension {dim} above truncation {}", self.truncation);
        let index = self.cells[dim].len();
        self.cells[dim].push(Cell { faces, marked: marked && dim > 0, label });
        CellId { dim, index }
    }

    pub fn set_basepoint(&mut self, name: impl Into<String>, cell: CellId) {
        self.basepoints.insert(name.into(), cell);
    }

    pub fn set_marked(&mut self, cell: CellId, marked: bool) {
        self.cells[cell.dim][cell.index].marked = marked && cell.dim > 0;
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Number of nondegenerate cells in dimension `dim` (zero above the truncation).
    pub fn count(&self, dim: usize) -> usize {
        self.cells.get(dim).map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(Vec::is_empty)
    }

    /// Largest dimension holding a nondegenerate cell.
    pub fn dimension(&self) -> Option<usize> {
        (0..=self.truncation).rev().find(|&d| !self.cells[d].is_empty())
    }

    pub fn cells(&self, dim: usize) -> &[Cell] {
        self.cells.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn cell_ids(&self, dim: usize) -> impl Iterator<Item = CellId> + '_ {
        (0..self.count(dim)).map(move |index| CellId { dim, index })
    }

    /// All nondegenerate cells, by dimension then index.
    pub fn all_cell_ids(&self) -> impl Iterator<Item = CellId> + '_ {
        (0..=self.truncation).flat_map(move |d| self.cell_ids(d))
    }

    pub fn contains(&self, id: CellId) -> bool {
        id.dim <= self.truncation && id.index < self.cells[id.dim].len()
    }

    pub fn cell(&self, id: CellId) -> &Cell {
        &self.cells[id.dim][id.index]
    }

    pub fn faces(&self, id: CellId) -> &[SimplexRef] {
        &self.cells[id.dim][id.index].faces
    }

    pub fn label(&self, id: CellId) -> Option<&str> {
        self.cell(id).label.as_deref()
    }

    pub fn basepoints(&self) -> &BTreeMap<String, CellId> {
        &self.basepoints
    }

    pub fn basepoint(&self, name: &str) -> Option<CellId> {
        self.basepoints.get(name).copied()
    }

    /// Marking of an arbitrary simplex: degenerate simplices are marked, vertices never are.
    pub fn is_marked(&self, r: &SimplexRef) -> bool {
        if r.is_degenerate() {
            return true;
        }
        r.base.dim > 0 && self.cell(r.base).marked
    }

    pub fn is_cell_marked(&self, id: CellId) -> bool {
        id.dim > 0 && self.cell(id).marked
    }

    /// `r · θ` for a monotone `θ: [n'] → [dim r]`, in normal form.
    pub fn apply(&self, r: &SimplexRef, theta: &[usize]) -> SimplexRef {
        let n = r.dim();
        let pi = r.word.surjection(n);
        let psi = ordinal::compose(&pi, theta);
        let (epi, image) = ordinal::epi_mono(&psi);
        let restricted = self.restrict(r.base, &image);
        restricted.degenerate_by(&epi)
    }

    /// `x · ι` for a nondegenerate `x` and a strictly increasing `ι`.
    fn restrict(&self, cell: CellId, inj: &[usize]) -> SimplexRef {
        if inj.len() == cell.dim + 1 {
            return SimplexRef::nondegenerate(cell);
        }
        let missing = (0..=cell.dim).rev().find(|v| !inj.contains(v)).expect("proper injection");
        let face = &self.faces(cell)[missing];
        let inner: Vec<usize> = inj.iter().map(|&v| if v < missing { v } else { v - 1 }).collect();
        self.apply(face, &inner)
    }

    /// `d_i r`.
    pub fn face(&self, r: &SimplexRef, i: usize) -> SimplexRef {
        self.apply(r, &ordinal::coface(r.dim(), i))
    }

    /// `s_i r`.
    pub fn degeneracy(&self, r: &SimplexRef, i: usize) -> SimplexRef {
        r.degenerate_by(&ordinal::codegeneracy(r.dim(), i))
    }

    /// The vertices of a cell, in order.
    pub fn vertices(&self, id: CellId) -> Vec<CellId> {
        let r = SimplexRef::nondegenerate(id);
        (0..=id.dim).map(|j| self.apply(&r, &[j]).base).collect()
    }

    /// Number of all `m`-simplices, degenerate ones included.
    pub fn total_count(&self, m: usize) -> u128 {
        (0..=m.min(self.truncation)).map(|j| self.count(j) as u128 * binomial(m, j)).sum()
    }

    /// All `m`-simplices as normal forms, ordered by base then word.
    pub fn all_simplices(&self, m: usize) -> Vec<SimplexRef> {
        let mut out = Vec::new();
        for j in 0..=m.min(self.truncation) {
            for base in self.cell_ids(j) {
                for collapses in (0..m).combinations(m - j) {
                    out.push(SimplexRef { word: DegeneracyWord::from_collapses(collapses), base });
                }
            }
        }
        out
    }

    /// Discards cells above `dim`.
    pub fn truncate(&self, dim: usize) -> Result<MarkedSimplicialSet> {
        if dim > self.truncation {
            return Err(Error::TruncationTooSmall { requested: self.truncation, needed: dim });
        }
        let mut out = self.clone();
        out.truncation = dim;
        out.cells.truncate(dim + 1);
        Ok(out)
    }

    /// Same cells with a larger truncation (valid because the object is read as its skeleton).
    pub fn with_truncation(&self, dim: usize) -> MarkedSimplicialSet {
        if dim <= self.truncation {
            return self.truncate(dim).expect("checked");
        }
        let mut out = self.clone();
        out.truncation = dim;
        out.cells.resize(dim + 1, Vec::new());
        out
    }

    /// Checks references, face dimensions, the simplicial identities and marking conventions.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut refs_ok = true;
        for id in self.all_cell_ids() {
            let cell = self.cell(id);
            let expected = if id.dim == 0 { 0 } else { id.dim + 1 };
            if cell.faces.len() != expected {
                out.push(Violation { cell: id, message: format!("has {} faces, expected {expected}", cell.faces.len()) });
                refs_ok = false;
                continue;
            }
            if id.dim == 0 && cell.marked {
                out.push(Violation { cell: id, message: "vertex is marked".into() });
            }
            for (i, f) in cell.faces.iter().enumerate() {
                if !self.contains(f.base) {
                    out.push(Violation { cell: id, message: format!("face {i} refers to missing cell {}", f.base) });
                    refs_ok = false;
                } else if f.dim() + 1 != id.dim {
                    out.push(Violation { cell: id, message: format!("face {i} has dimension {}", f.dim()) });
                    refs_ok = false;
                } else if f.word.indices().iter().any(|&j| j >= f.dim()) {
                    out.push(Violation { cell: id, message: format!("face {i} has an ill-typed degeneracy word") });
                    refs_ok = false;
                }
            }
        }
        for (name, &b) in &self.basepoints {
            if b.dim != 0 || !self.contains(b) {
                out.push(Violation { cell: b, message: format!("basepoint {name} is not a vertex") });
            }
        }
        if !refs_ok {
            return out;
        }
        for d in 2..=self.truncation {
            for id in self.cell_ids(d) {
                let faces = self.faces(id);
                for j in 1..=d {
                    for i in 0..j {
                        let lhs = self.face(&faces[j], i);
                        let rhs = self.face(&faces[i], j - 1);
                        if lhs != rhs {
                            out.push(Violation {
                                cell: id,
                                message: format!("d{i} d{j} = {lhs} differs from d{} d{i} = {rhs}", j - 1),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Per-dimension counts of nondegenerate cells.
    pub fn census(&self) -> Vec<usize> {
        (0..=self.truncation).map(|d| self.count(d)).collect()
    }

    /// Per-dimension counts of marked nondegenerate cells.
    pub fn marked_census(&self) -> Vec<usize> {
        (0..=self.truncation).map(|d| self.cells(d).iter().filter(|c| c.marked).count()).collect()
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
