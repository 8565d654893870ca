//! Monotone maps between finite ordinals `[n] = {0, …, n}`.
//!
//! A map `θ: [n] → [m]` is stored as the vector of its values, so `θ.len() == n + 1`.

/// Identity on `[n]`.
pub fn identity(n: usize) -> Vec<usize> {
    (0..=n).collect()
}

/// Coface `δ^i: [n-1] → [n]`, skipping `i`.
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    debug_assert!(n >= 1 && i <= n);
    (0..n).map(|j| if j < i { j } else { j + 1 }).collect()
}

/// Codegeneracy `σ^i: [n+1] → [n]`, hitting `i` twice.
pub fn codegeneracy(n: usize, i: usize) -> Vec<usize> {
    debug_assert!(i <= n);
    (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect()
}

/// The idempotent `[m] → [m]` sending `t+1` to `t` and fixing everything else.
///
/// A simplex `x` lies in the image of `s_t` iff `x·η_t = x`.
pub fn collapse_idempotent(m: usize, t: usize) -> Vec<usize> {
    debug_assert!(t < m);
    (0..=m).map(|j| if j == t + 1 { t } else { j }).collect()
}

/// Composite `f ∘ g` (apply `g` first).
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

/// Surjection `[n] → [n - |c|]` with collapse set `c` (positions `j` with `π(j) = π(j+1)`).
pub fn surjection_from_collapses(n: usize, collapses: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(n + 1);
    let mut v = 0;
    for j in 0..=n {
        out.push(v);
        if j < n && !collapses.contains(&j) {
            v += 1;
        }
    }
    out
}

/// Positions `j` with `π(j) = π(j+1)`, ascending.
pub fn collapses_of(map: &[usize]) -> Vec<usize> {
    (0..map.len().saturating_sub(1)).filter(|&j| map[j] == map[j + 1]).collect()
}

/// Epi-mono factorisation of a monotone map: returns `(epi, image)` with `map = image ∘ epi`.
pub fn epi_mono(map: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut image: Vec<usize> = Vec::new();
    let mut epi = Vec::with_capacity(map.len());
    for &v in map {
        if image.last() != Some(&v) {
            image.push(v);
        }
        epi.push(image.len() - 1);
    }
    (epi, image)
}

/// Section of the surjection with the given collapse set, picking the least point of each fibre.
pub fn first_section(n: usize, collapses: &[usize]) -> Vec<usize> {
    (0..=n).filter(|&j| j == 0 || !collapses.contains(&(j - 1))).collect()
}

/// Whether `map` is monotone into `[m]`.
pub fn is_monotone_into(map: &[usize], m: usize) -> bool {
    map.windows(2).all(|w| w[0] <= w[1]) && map.iter().all(|&v| v <= m)
}

/// Vertex subset `bits ⊆ [n]` as the injection it names.
pub fn subset_map(bits: u64) -> Vec<usize> {
    (0..64).filter(|&i| bits >> i & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosimplicial_identity() {
        // δ^j δ^i = δ^i δ^{j-1} for i < j
        for n in 2..6 {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = compose(&coface(n, j), &coface(n - 1, i));
                    let rhs = compose(&coface(n, i), &coface(n - 1, j - 1));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn surjection_round_trip() {
        let s = surjection_from_collapses(5, &[1, 2, 4]);
        assert_eq!(s, vec![0, 1, 1, 1, 2, 2]);
        assert_eq!(collapses_of(&s), vec![1, 2, 4]);
        assert_eq!(first_section(5, &[1, 2, 4]), vec![0, 1, 4]);
    }

    #[test]
    fn epi_mono_factors() {
        let (e, m) = epi_mono(&[0, 2, 2, 5]);
        assert_eq!(e, vec![0, 1, 1, 2]);
        assert_eq!(m, vec![0, 2, 5]);
        assert_eq!(compose(&m, &e), vec![0, 2, 2, 5]);
    }
}
