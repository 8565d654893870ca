use super::classify::{classify_susp, classify_wedge};
use crate::msset::{MarkedSimplicialSet, ModelComplex, SimplexModel, SimplexRef};
use crate::nerve::{MatrixModel, WedgePairModel};
use crate::ordinal;

/// Outcome of checking the face tables of every suspect simplex up to some dimension.
#[derive(Clone, Debug, Default)]
pub struct FaceTableReport {
    /// Suspect simplices inspected.
    pub checked: usize,
    /// Faces inspected.
    pub faces: usize,
    /// Faces `d_{kρ}` that are not suspect but carry type `(kρ−1, kρ'−1)`, so an earlier stage adds them.
    pub corrected: usize,
    pub violations: Vec<String>,
}

impl FaceTableReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Face table of suspect simplices of `N(ΣP)` in matrix coordinates.
pub fn check_face_tables_susp(mat: &ModelComplex<MatrixModel>, max_dim: usize) -> FaceTableReport {
    let model = &mat.model;
    let mut report = FaceTableReport::default();
    for n in 1..=max_dim.min(mat.truncation()) {
        for s in mat.simplices(n) {
            let c = classify_susp(model, s);
            let k = c.k;
            let r = c.r;
            if !c.suspect || r == 0 || r as isize > k {
                continue;
            }
            report.checked += 1;
            for a in 0..=n {
                report.faces += 1;
                let f = classify_susp(model, &model.face(s, a));
                let ok = if a + 2 <= r {
                    f.suspect
                } else if a + 1 == r {
                    f.r + 1 <= r
                } else if a == r {
                    f.k == k - 1 && f.r == r
                } else if (a as isize) <= k {
                    f.suspect
                } else {
                    f.k == k
                };
                if !ok {
                    report.violations.push(format!("{s:?} (k={k}, r={r}): face {a} classifies as {f:?}"));
                }
            }
        }
    }
    report
}

/// Applies `s_lo`, then `s_{lo+1}`, …, then `s_hi`.
fn degenerate_run(x: &MarkedSimplicialSet, r: &SimplexRef, lo: isize, hi: isize) -> SimplexRef {
    let mut out = r.clone();
    for j in lo..=hi {
        out = x.degeneracy(&out, j as usize);
    }
    out
}

/// Face table of suspect simplices of `N(A ∨ A')` in pair coordinates, with the explicit face formulas.
pub fn check_face_tables_wedge(pairs: &ModelComplex<WedgePairModel>, max_dim: usize) -> FaceTableReport {
    let model = &pairs.model;
    let (left, right) = (&model.left, &model.right);
    let mut report = FaceTableReport::default();
    for n in 1..=max_dim.min(pairs.truncation()) {
        for s in pairs.simplices(n) {
            let c = classify_wedge(model, s);
            let (kl, kr, r) = (c.k_left, c.k_right, c.r);
            if !c.suspect || c.in_image || r <= kl || r > kr {
                continue;
            }
            report.checked += 1;
            let ru = r as usize;
            let alpha = left.face(&s.0, ru);
            let collapses: Vec<usize> = (kl.max(0) as usize..ru).collect();
            let alpha2 = right.apply(&s.1, &ordinal::first_section(n, &collapses));
            for a in 0..=n {
                report.faces += 1;
                let face = model.face(s, a);
                let f = classify_wedge(model, &face);
                let ai = a as isize;
                let row_ok = if ai == kl && a < ru && !f.suspect && (f.k_left, f.k_right) == (kl - 1, kr - 1) {
                    report.corrected += 1;
                    true
                } else if a < ru {
                    f.suspect
                } else if a == ru {
                    (f.k_left, f.k_right, f.r) == (kl, kr - 1, r - 1)
                } else if a == ru + 1 && ai <= kr {
                    (f.k_left, f.k_right, f.r) == (kl, kr - 1, r)
                } else if a == ru + 1 {
                    (f.k_left, f.k_right) == (kl, kr)
                } else {
                    f.suspect
                };
                if !row_ok {
                    report.violations.push(format!("{s:?} (type ({kl},{kr}), r={r}): face {a} classifies as {f:?}"));
                }
                let expected = if ai < kl {
                    let first = left.degeneracy(&left.face(&alpha, a), ru - 1);
                    (first, degenerate_run(right, &right.face(&alpha2, a), kl - 1, r - 2))
                } else if a < ru {
                    let first = left.degeneracy(&left.face(&alpha, a), ru - 1);
                    (first, degenerate_run(right, &alpha2, kl, r - 2))
                } else if a == ru {
                    (alpha.clone(), degenerate_run(right, &alpha2, kl, r - 2))
                } else if a == ru + 1 {
                    (alpha.clone(), degenerate_run(right, &right.face(&alpha2, (kl + 1) as usize), kl, r - 1))
                } else {
                    let first = left.degeneracy(&left.face(&alpha, a - 1), ru);
                    let second = right.face(&alpha2, (ai - r + kl) as usize);
                    (first, degenerate_run(right, &second, kl, r - 1))
                };
                if expected != face {
                    report.violations.push(format!("{s:?}: face {a} is {face:?}, formula gives {expected:?}"));
                }
            }
        }
    }
    report
}
