use std::collections::HashMap;

use super::complex::{CellId, MarkedSimplicialSet, SimplexRef};
use super::generators::{generator_model, GeneratorShape};
use super::map::SimplicialMap;
use crate::error::{Error, Result};

/// The inclusion between two generator shapes on the same ambient simplex, matching vertex sets.
pub fn inclusion(sub: GeneratorShape, ambient: GeneratorShape, truncation: usize) -> Result<SimplicialMap> {
    let a = generator_model(sub, truncation)?;
    let b = generator_model(ambient, truncation)?;
    if sub != GeneratorShape::Empty && sub.ambient_dim() != ambient.ambient_dim() {
        return Err(Error::InvalidShape(format!("{sub:?} does not sit inside {ambient:?}")));
    }
    let mut missing = None;
    let map = SimplicialMap::from_fn(a.complex.clone(), b.complex.clone(), |id| {
        b.locate(a.simplex(id)).unwrap_or_else(|| {
            missing = Some(id);
            SimplexRef::nondegenerate(CellId::new(0, 0))
        })
    });
    if let Some(id) = missing {
        return Err(Error::MissingCell(format!("{id} of {sub:?} in {ambient:?}")));
    }
    let problems = map.check();
    if !problems.is_empty() {
        return Err(Error::InvalidShape(format!("{sub:?} → {ambient:?} is not a map: {}", problems[0])));
    }
    Ok(map)
}

/// Candidate simplices of `X`, indexed by dimension and boundary.
struct Candidates {
    vertices: Vec<SimplexRef>,
    by_boundary: HashMap<Vec<SimplexRef>, Vec<SimplexRef>>,
}

impl Candidates {
    fn new(x: &MarkedSimplicialSet, max_dim: usize) -> Self {
        let vertices = x.all_simplices(0);
        let mut by_boundary: HashMap<Vec<SimplexRef>, Vec<SimplexRef>> = HashMap::new();
        for d in 1..=max_dim {
            for s in x.all_simplices(d) {
                let faces = (0..=d).map(|i| x.face(&s, i)).collect();
                by_boundary.entry(faces).or_default().push(s);
            }
        }
        Candidates { vertices, by_boundary }
    }

    fn for_cell(&self, dim: usize, faces: Vec<SimplexRef>) -> &[SimplexRef] {
        if dim == 0 {
            &self.vertices
        } else {
            self.by_boundary.get(&faces).map_or(&[], Vec::as_slice)
        }
    }
}

/// Depth-first search for an assignment of the free cells of `source` extending `fixed`.
fn search(
    source: &MarkedSimplicialSet,
    x: &MarkedSimplicialSet,
    cands: &Candidates,
    free: &[CellId],
    values: &mut Vec<Vec<Option<SimplexRef>>>,
    visit: &mut dyn FnMut(&Vec<Vec<Option<SimplexRef>>>) -> bool,
) -> bool {
    let Some((&cell, rest)) = free.split_first() else {
        return visit(values);
    };
    let faces: Vec<SimplexRef> = source
        .faces(cell)
        .iter()
        .map(|r| values[r.base.dim][r.base.index].as_ref().expect("face assigned").degenerate_by(&r.word.surjection(r.dim())))
        .collect();
    let marked = source.is_cell_marked(cell);
    for c in cands.for_cell(cell.dim, faces) {
        if marked && !x.is_marked(c) {
            continue;
        }
        values[cell.dim][cell.index] = Some(c.clone());
        if search(source, x, cands, rest, values, visit) {
            values[cell.dim][cell.index] = None;
            return true;
        }
    }
    values[cell.dim][cell.index] = None;
    false
}

/// Whether every marking-preserving map `A → X` extends along `i: A → B`.
pub fn has_extension(i: &SimplicialMap, x: &MarkedSimplicialSet) -> Result<bool> {
    if !i.is_injective() {
        return Err(Error::NotInjective);
    }
    let (a, b) = (&*i.source, &*i.target);
    let dim_b = b.dimension().unwrap_or(0);
    if x.truncation() < dim_b {
        return Err(Error::TruncationTooSmall { requested: x.truncation(), needed: dim_b });
    }
    let cands = Candidates::new(x, dim_b);
    let a_cells: Vec<CellId> = a.all_cell_ids().collect();
    let preimage: HashMap<CellId, CellId> = a.all_cell_ids().map(|c| (i.image(c).base, c)).collect();
    let b_free: Vec<CellId> = b.all_cell_ids().filter(|c| !preimage.contains_key(c)).collect();
    let mut a_values: Vec<Vec<Option<SimplexRef>>> = (0..=a.truncation()).map(|d| vec![None; a.count(d)]).collect();
    let mut all_extend = true;
    search(a, x, &cands, &a_cells, &mut a_values, &mut |f| {
        let mut b_values: Vec<Vec<Option<SimplexRef>>> = (0..=b.truncation()).map(|d| vec![None; b.count(d)]).collect();
        for (&bc, &ac) in &preimage {
            b_values[bc.dim][bc.index] = f[ac.dim][ac.index].clone();
        }
        // a cell marked in B but not in A must already land on a marked simplex
        let marks_ok = preimage
            .keys()
            .all(|&bc| !b.is_cell_marked(bc) || b_values[bc.dim][bc.index].as_ref().is_some_and(|v| x.is_marked(v)));
        let extends = marks_ok && search(b, x, &cands, &b_free, &mut b_values, &mut |_| true);
        if !extends {
            all_extend = false;
        }
        !extends
    });
    Ok(all_extend)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msset::generators::{make_generator, GeneratorShape::*};

    #[test]
    fn point_lifts_against_point() {
        let i = inclusion(Empty, Standard(0), 0).unwrap();
        let pt = make_generator(Standard(0), 0).unwrap();
        assert!(has_extension(&i, &pt).unwrap());
    }

    #[test]
    fn inner_horn_fails_against_horn_itself() {
        let i = inclusion(Horn(2, 1), Standard(2), 2).unwrap();
        let h = make_generator(Horn(2, 1), 2).unwrap();
        assert!(!has_extension(&i, &h).unwrap());
        let d2 = make_generator(Standard(2), 2).unwrap();
        assert!(has_extension(&i, &d2).unwrap());
    }

    #[test]
    fn marked_filler_needs_marked_target() {
        let i = inclusion(Horn(2, 1), Complicial(2, 1), 2).unwrap();
        let d2 = make_generator(Standard(2), 2).unwrap();
        assert!(!has_extension(&i, &d2).unwrap());
        let t2 = make_generator(Top(2), 2).unwrap();
        assert!(has_extension(&i, &t2).unwrap());
    }

    #[test]
    fn marking_an_existing_edge_is_checked() {
        let i = inclusion(Standard(1), Top(1), 1).unwrap();
        assert!(!has_extension(&i, &make_generator(Standard(1), 1).unwrap()).unwrap());
        assert!(has_extension(&i, &make_generator(Top(1), 1).unwrap()).unwrap());
    }
}
