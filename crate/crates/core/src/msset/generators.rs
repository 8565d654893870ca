use itertools::Itertools;

use super::complex::MarkedSimplicialSet;
use super::model::{ModelComplex, SimplexModel};
use crate::error::{Error, Result};
use crate::ordinal;

/// The named generating objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorShape {
    /// `Δ[-1]`.
    Empty,
    /// `Δ[m]` with only degenerate marks.
    Standard(usize),
    /// `Δ[m]_t`: only the top simplex marked.
    Top(usize),
    /// `Δ^k[m]`.
    Complicial(usize, usize),
    /// `Δ^k[m]'`: also the faces `d_{k-1}` and `d_{k+1}`.
    ComplicialPrime(usize, usize),
    /// `Δ^k[m]''`: also the face `d_k`.
    ComplicialDoublePrime(usize, usize),
    /// `Λ^k[m]` as a regular subobject of `Δ^k[m]`.
    Horn(usize, usize),
    /// `Λ^k[m]'` as a regular subobject of `Δ^k[m]'`.
    HornPrime(usize, usize),
    /// `Δ[3]_eq`.
    ThreeEq,
    /// `Δ[3]^♯`.
    ThreeSharp,
}

impl GeneratorShape {
    /// Dimension of the ambient simplex (`None` for the empty object).
    pub fn ambient_dim(&self) -> Option<usize> {
        use GeneratorShape::*;
        match *self {
            Empty => None,
            Standard(m) | Top(m) | Complicial(m, _) | ComplicialPrime(m, _) | ComplicialDoublePrime(m, _)
            | Horn(m, _) | HornPrime(m, _) => Some(m),
            ThreeEq | ThreeSharp => Some(3),
        }
    }

    fn check(&self) -> Result<()> {
        use GeneratorShape::*;
        let bad = |msg: String| Err(Error::InvalidShape(msg));
        match *self {
            Complicial(m, k) | ComplicialPrime(m, k) | ComplicialDoublePrime(m, k) if k > m => {
                bad(format!("k = {k} exceeds m = {m}"))
            }
            Horn(m, k) if m == 0 || k > m => bad(format!("horn needs 0 ≤ k ≤ m and m ≥ 1, got ({m},{k})")),
            HornPrime(m, k) if !(0 < k && k < m) => bad(format!("primed horn needs 0 < k < m, got ({m},{k})")),
            _ => Ok(()),
        }
    }

    /// Whether the vertex subset `s` (sorted, nonempty) is a simplex of the shape.
    fn contains(&self, s: &[usize]) -> bool {
        use GeneratorShape::*;
        match *self {
            Empty => false,
            Horn(m, k) | HornPrime(m, k) => !(s.len() == m + 1 || (s.len() == m && !s.contains(&k))),
            _ => true,
        }
    }

    /// Marking of the nondegenerate simplex with vertex set `s`.
    fn marks(&self, s: &[usize]) -> bool {
        use GeneratorShape::*;
        let dim = s.len() - 1;
        if dim == 0 {
            return false;
        }
        match *self {
            Empty | Standard(_) => false,
            Top(m) => dim == m,
            Complicial(m, k) | Horn(m, k) => complicial_mark(m, k, s),
            ComplicialPrime(m, k) | HornPrime(m, k) => {
                complicial_mark(m, k, s) || is_face_missing(m, s, k.wrapping_sub(1)) || is_face_missing(m, s, k + 1)
            }
            ComplicialDoublePrime(m, k) => {
                complicial_mark(m, k, s)
                    || is_face_missing(m, s, k.wrapping_sub(1))
                    || is_face_missing(m, s, k + 1)
                    || is_face_missing(m, s, k)
            }
            ThreeEq => dim >= 2 || s == [0, 2] || s == [1, 3],
            ThreeSharp => true,
        }
    }
}

fn complicial_mark(m: usize, k: usize, s: &[usize]) -> bool {
    let lo = k.saturating_sub(1);
    let hi = (k + 1).min(m);
    (lo..=hi).all(|v| s.contains(&v))
}

/// Whether `s` is the codimension-one face of `Δ[m]` opposite vertex `v`.
fn is_face_missing(m: usize, s: &[usize], v: usize) -> bool {
    v <= m && s.len() == m && !s.contains(&v)
}

/// Downward-closed family of vertex subsets of `[m]`, presented as a simplex model.
#[derive(Clone, Debug)]
pub struct SubsetModel {
    pub m: usize,
    pub shape: GeneratorShape,
}

impl SimplexModel for SubsetModel {
    type Simplex = Vec<usize>;

    fn dim(&self, s: &Vec<usize>) -> usize {
        s.len() - 1
    }

    fn reindex(&self, s: &Vec<usize>, theta: &[usize]) -> Vec<usize> {
        ordinal::compose(s, theta)
    }

    fn nondegenerate(&self, n: usize) -> Vec<Vec<usize>> {
        if n > self.m || self.shape == GeneratorShape::Empty {
            return Vec::new();
        }
        (0..=self.m).combinations(n + 1).filter(|s| self.shape.contains(s)).collect()
    }

    fn is_marked(&self, s: &Vec<usize>) -> bool {
        self.shape.marks(s)
    }

    fn label(&self, s: &Vec<usize>) -> Option<String> {
        Some(format!("[{}]", s.iter().join("")))
    }
}

/// Builds a generator shape, keeping the vertex-subset dictionary.
pub fn generator_model(shape: GeneratorShape, truncation: usize) -> Result<ModelComplex<SubsetModel>> {
    shape.check()?;
    let m = shape.ambient_dim().unwrap_or(0);
    if shape != GeneratorShape::Empty && truncation < m {
        return Err(Error::TruncationTooSmall { requested: truncation, needed: m });
    }
    Ok(ModelComplex::build(SubsetModel { m, shape }, truncation))
}

/// The named generating object, truncated at `truncation`.
pub fn make_generator(shape: GeneratorShape, truncation: usize) -> Result<MarkedSimplicialSet> {
    Ok((*generator_model(shape, truncation)?.complex).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeneratorShape::*;

    #[test]
    fn standard_two() {
        let x = make_generator(Standard(2), 2).unwrap();
        assert_eq!(x.census(), vec![3, 3, 1]);
        assert_eq!(x.marked_census(), vec![0, 0, 0]);
        assert!(x.validate().is_empty());
    }

    #[test]
    fn complicial_two_one_marks_only_top() {
        let x = make_generator(Complicial(2, 1), 2).unwrap();
        assert_eq!(x.marked_census(), vec![0, 0, 1]);
    }

    #[test]
    fn three_eq() {
        let x = make_generator(ThreeEq, 3).unwrap();
        assert_eq!(x.marked_census(), vec![0, 2, 4, 1]);
        let marked: Vec<_> = x.cell_ids(1).filter(|&c| x.is_cell_marked(c)).map(|c| x.label(c).unwrap().to_string()).collect();
        assert_eq!(marked, vec!["[02]", "[13]"]);
    }

    #[test]
    fn primes_add_faces() {
        let p = make_generator(ComplicialPrime(3, 1), 3).unwrap();
        let pp = make_generator(ComplicialDoublePrime(3, 1), 3).unwrap();
        let base = make_generator(Complicial(3, 1), 3).unwrap();
        assert_eq!(base.marked_census(), vec![0, 0, 1, 1]);
        assert_eq!(p.marked_census(), vec![0, 0, 3, 1]);
        assert_eq!(pp.marked_census(), vec![0, 0, 4, 1]);
    }

    #[test]
    fn horns() {
        let h = make_generator(Horn(3, 1), 3).unwrap();
        assert_eq!(h.census(), vec![4, 6, 3, 0]);
        assert!(h.validate().is_empty());
        assert!(make_generator(HornPrime(2, 0), 2).is_err());
        assert!(make_generator(Standard(3), 2).is_err());
        assert_eq!(make_generator(Empty, 0).unwrap().census(), vec![0]);
    }
}
