use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use super::complex::{CellId, MarkedSimplicialSet, SimplexRef};
use super::map::SimplicialMap;

/// Per-cell colour after iterated refinement by faces and cofaces, with a palette shared by
/// both inputs so that colours are comparable.
struct Colouring {
    colours: [Vec<Vec<u32>>; 2],
}

fn refine(sides: [&MarkedSimplicialSet; 2], respect_basepoints: bool) -> Option<Colouring> {
    let t = sides[0].truncation();
    // cofaces: for each cell, (coface, face position, word indices)
    let cofaces: Vec<Vec<Vec<Vec<(CellId, usize, Vec<usize>)>>>> = sides
        .iter()
        .map(|x| {
            let mut cf: Vec<Vec<Vec<(CellId, usize, Vec<usize>)>>> =
                (0..=t).map(|d| vec![Vec::new(); x.count(d)]).collect();
            for id in x.all_cell_ids() {
                for (i, f) in x.faces(id).iter().enumerate() {
                    cf[f.base.dim][f.base.index].push((id, i, f.word.indices().to_vec()));
                }
            }
            cf
        })
        .collect();
    let mut palette: HashMap<Vec<u64>, u32> = HashMap::new();
    let mut colours: [Vec<Vec<u32>>; 2] = [Vec::new(), Vec::new()];
    for (s, x) in sides.iter().enumerate() {
        let names: HashMap<CellId, &String> = x.basepoints().iter().map(|(n, &c)| (c, n)).collect();
        colours[s] = (0..=t)
            .map(|d| {
                x.cell_ids(d)
                    .map(|id| {
                        let mut key = vec![d as u64, x.is_cell_marked(id) as u64];
                        if respect_basepoints {
                            if let Some(n) = names.get(&id) {
                                key.extend(n.bytes().map(u64::from));
                            }
                        }
                        let next = palette.len() as u32;
                        *palette.entry(key).or_insert(next)
                    })
                    .collect()
            })
            .collect();
    }
    let mut count = palette.len();
    loop {
        if !same_histogram(&colours) {
            return None;
        }
        let mut palette: HashMap<Vec<u64>, u32> = HashMap::new();
        let mut next: [Vec<Vec<u32>>; 2] = [Vec::new(), Vec::new()];
        for (s, x) in sides.iter().enumerate() {
            let col = &colours[s];
            next[s] = (0..=t)
                .map(|d| {
                    x.cell_ids(d)
                        .map(|id| {
                            let mut key = vec![col[d][id.index] as u64];
                            for f in x.faces(id) {
                                key.push(col[f.base.dim][f.base.index] as u64);
                                key.push(u64::MAX);
                                key.extend(f.word.indices().iter().map(|&j| j as u64));
                            }
                            key.push(u64::MAX - 1);
                            let mut co: Vec<Vec<u64>> = cofaces[s][d][id.index]
                                .iter()
                                .map(|(c, i, w)| {
                                    let mut v = vec![col[c.dim][c.index] as u64, *i as u64];
                                    v.extend(w.iter().map(|&j| j as u64));
                                    v
                                })
                                .collect();
                            co.sort();
                            for v in co {
                                key.extend(v);
                                key.push(u64::MAX - 2);
                            }
                            let n = palette.len() as u32;
                            *palette.entry(key).or_insert(n)
                        })
                        .collect()
                })
                .collect();
        }
        colours = next;
        if palette.len() == count {
            break;
        }
        count = palette.len();
    }
    if !same_histogram(&colours) {
        return None;
    }
    Some(Colouring { colours })
}

fn same_histogram(colours: &[Vec<Vec<u32>>; 2]) -> bool {
    let hist = |c: &Vec<Vec<u32>>| {
        let mut h: HashMap<u32, usize> = HashMap::new();
        for v in c.iter().flatten() {
            *h.entry(*v).or_default() += 1;
        }
        h
    };
    colours[0].len() == colours[1].len() && hist(&colours[0]) == hist(&colours[1])
}

/// Searches for an isomorphism `X → Y` of marked simplicial sets below the smaller truncation.
///
/// Candidates are pruned by a colour refinement over faces and cofaces; the search then assigns
/// vertices one at a time and places every cell as soon as all of its vertices are placed.
pub fn find_isomorphism(x: &MarkedSimplicialSet, y: &MarkedSimplicialSet, respect_basepoints: bool) -> Option<SimplicialMap> {
    let t = x.truncation().min(y.truncation());
    let x = Arc::new(x.truncate(t).expect("min truncation"));
    let y = Arc::new(y.truncate(t).expect("min truncation"));
    if x.census() != y.census() || x.marked_census() != y.marked_census() {
        return None;
    }
    if respect_basepoints && x.basepoints().keys().ne(y.basepoints().keys()) {
        return None;
    }
    let colouring = refine([&x, &y], respect_basepoints)?;
    let cx = &colouring.colours[0];
    let cy = &colouring.colours[1];

    let mut targets: HashMap<(u32, Vec<SimplexRef>), Vec<CellId>> = HashMap::new();
    let mut target_vertices: HashMap<u32, Vec<CellId>> = HashMap::new();
    for id in y.all_cell_ids() {
        let c = cy[id.dim][id.index];
        if id.dim == 0 {
            target_vertices.entry(c).or_default().push(id);
        } else {
            targets.entry((c, y.faces(id).to_vec())).or_default().push(id);
        }
    }

    let order = placement_order(&x, cx);
    let mut assigned: Vec<Vec<Option<CellId>>> = (0..=t).map(|d| vec![None; x.count(d)]).collect();
    let mut used: HashSet<CellId> = HashSet::new();
    let mut stack: Vec<(Vec<CellId>, usize)> = Vec::with_capacity(order.len());
    let mut pos = 0usize;
    loop {
        if pos == order.len() {
            break;
        }
        let cell = order[pos];
        if stack.len() == pos {
            let cands = if cell.dim == 0 {
                target_vertices.get(&cx[0][cell.index]).cloned().unwrap_or_default()
            } else {
                let faces: Vec<SimplexRef> = x
                    .faces(cell)
                    .iter()
                    .map(|r| SimplexRef { word: r.word.clone(), base: assigned[r.base.dim][r.base.index].expect("face placed") })
                    .collect();
                targets.get(&(cx[cell.dim][cell.index], faces)).cloned().unwrap_or_default()
            };
            stack.push((cands, 0));
        }
        if let Some(prev) = assigned[cell.dim][cell.index].take() {
            used.remove(&prev);
        }
        let (cands, i) = stack.last_mut().expect("frame");
        while *i < cands.len() && used.contains(&cands[*i]) {
            *i += 1;
        }
        if *i < cands.len() {
            let choice = cands[*i];
            *i += 1;
            used.insert(choice);
            assigned[cell.dim][cell.index] = Some(choice);
            pos += 1;
        } else {
            stack.pop();
            if pos == 0 {
                return None;
            }
            pos -= 1;
        }
    }
    let assignment = assigned
        .into_iter()
        .map(|row| row.into_iter().map(|c| SimplexRef::nondegenerate(c.expect("complete"))).collect())
        .collect();
    Some(SimplicialMap::new(x, y, assignment))
}

pub fn isomorphic(x: &MarkedSimplicialSet, y: &MarkedSimplicialSet) -> bool {
    find_isomorphism(x, y, false).is_some()
}

/// Vertices grow outward from the rarest colour; each cell follows its last vertex.
fn placement_order(x: &MarkedSimplicialSet, colours: &[Vec<u32>]) -> Vec<CellId> {
    let t = x.truncation();
    let mut class_size: HashMap<u32, usize> = HashMap::new();
    for &c in &colours[0] {
        *class_size.entry(c).or_default() += 1;
    }
    let vertex_sets: Vec<Vec<Vec<usize>>> = (0..=t)
        .map(|d| x.cell_ids(d).map(|id| x.vertices(id).iter().map(|v| v.index).collect()).collect())
        .collect();
    let nv = x.count(0);
    let mut by_vertex: Vec<Vec<CellId>> = vec![Vec::new(); nv];
    let mut neighbours: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nv];
    for d in 1..=t {
        for (i, vs) in vertex_sets[d].iter().enumerate() {
            for &v in vs {
                by_vertex[v].push(CellId::new(d, i));
            }
            if d == 1 {
                neighbours[vs[0]].insert(vs[1]);
                neighbours[vs[1]].insert(vs[0]);
            }
        }
    }
    let mut placed = vec![false; nv];
    let mut touching = vec![false; nv];
    let mut done: Vec<Vec<bool>> = (0..=t).map(|d| vec![false; x.count(d)]).collect();
    let mut order = Vec::new();
    for _ in 0..nv {
        let next = (0..nv)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (!touching[v], class_size[&colours[0][v]], v))
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(CellId::new(0, next));
        for &n in &neighbours[next] {
            touching[n] = true;
        }
        let mut ready: Vec<CellId> = by_vertex[next]
            .iter()
            .copied()
            .filter(|c| !done[c.dim][c.index] && vertex_sets[c.dim][c.index].iter().all(|&v| placed[v]))
            .collect();
        ready.sort();
        ready.dedup();
        for c in ready {
            done[c.dim][c.index] = true;
            order.push(c);
        }
    }
    order
}
