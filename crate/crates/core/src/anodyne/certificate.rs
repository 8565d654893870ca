use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::msset::{CellId, MarkedSimplicialSet, SimplexRef, SimplicialMap};

/// Position of a step in the filtration of a proof.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    Suspension { d: usize, k: usize, r: usize },
    Wedge { d: usize, b: usize, k: usize, r: usize },
    /// A stand-alone step, used by the generator decompositions.
    Single { index: usize },
}

impl Stage {
    /// Steps must appear with non-decreasing keys.
    fn order_key(&self) -> Vec<isize> {
        match *self {
            Stage::Suspension { d, k, r } => vec![0, d as isize, -(k as isize), r as isize],
            Stage::Wedge { d, b, k, r } => vec![1, d as isize, -(b as isize), -(k as isize), -(r as isize)],
            Stage::Single { index } => vec![2, index as isize],
        }
    }

    fn horn(&self) -> Option<(usize, usize)> {
        match *self {
            Stage::Suspension { d, r, .. } | Stage::Wedge { d, r, .. } => Some((d + 1, r)),
            Stage::Single { .. } => None,
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stage::Suspension { d, k, r } => write!(f, "suspension(d={d},k={k},r={r})"),
            Stage::Wedge { d, b, k, r } => write!(f, "wedge(d={d},b={b},k={k},r={r})"),
            Stage::Single { index } => write!(f, "single({index})"),
        }
    }
}

/// Which generating anodyne extension a step is a pushout of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `Λ^r[n] → Δ^r[n]`.
    Plain,
    /// `Λ^r[n]' → Δ^r[n]''`.
    Marked,
    /// `Δ^r[n]' → Δ^r[n]''`: marks the face `d_r` of an already present simplex.
    Thinness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Marked,
    Unmarked,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateStep {
    /// Index of the certificate this step came from when several are chained.
    pub block: usize,
    pub stage: Stage,
    pub variant: Variant,
    pub horn_dim: usize,
    pub horn_index: usize,
    /// Image of each nondegenerate simplex of the horn, keyed by its vertex set as a bitmask.
    pub attach: BTreeMap<u64, SimplexRef>,
    /// The new top simplex.
    pub filler: CellId,
    /// The new face `d_r` of the filler.
    pub face: CellId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnodyneCertificate {
    pub source: String,
    pub target: String,
    /// Cells of dimension at most this are required to be covered.
    pub truncation: usize,
    pub mode: Mode,
    pub steps: Vec<CertificateStep>,
}

/// Why a replay stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayFailure {
    /// Index of the offending step; `None` for failures before the first or after the last step.
    pub step: Option<usize>,
    pub reason: String,
}

impl fmt::Display for ReplayFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(i) => write!(f, "step {i}: {}", self.reason),
            None => write!(f, "{}", self.reason),
        }
    }
}

impl std::error::Error for ReplayFailure {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplaySummary {
    pub steps: usize,
    pub cells_added: usize,
}

fn full_mask(n: usize) -> u64 {
    (1u64 << (n + 1)) - 1
}

/// Vertex sets of the nondegenerate simplices of `Λ^r[n]`.
pub fn horn_masks(n: usize, r: usize) -> Vec<u64> {
    let full = full_mask(n);
    let missing = full & !(1 << r);
    (1..full).filter(|&m| m != missing).collect()
}

/// Whether the simplex with vertex set `mask` is marked in `Δ^r[n]` (plain) or `Δ^r[n]''` (marked).
pub fn model_marked(mask: u64, n: usize, r: usize, variant: Variant) -> bool {
    let triple = 0b111u64 << (r - 1);
    if mask & triple == triple {
        return true;
    }
    let full = full_mask(n);
    match variant {
        Variant::Plain => false,
        Variant::Marked | Variant::Thinness => (r - 1..=r + 1).any(|v| mask == full & !(1 << v)),
    }
}

/// Marks of `Δ^r[n]'`, the premise of a thinness step.
fn thinness_premise(mask: u64, n: usize, r: usize) -> bool {
    let full = full_mask(n);
    model_marked(mask, n, r, Variant::Plain) || mask == full & !(1 << (r - 1)) || mask == full & !(1 << (r + 1))
}

fn drop_position(mask: u64, pos: usize) -> u64 {
    let v = (0..64).filter(|&i| mask >> i & 1 == 1).nth(pos).expect("position inside mask");
    mask & !(1 << v)
}

struct Replayer<'a> {
    target: &'a MarkedSimplicialSet,
    mode: Mode,
    present: HashSet<CellId>,
    /// Tracked marks when thinness steps are allowed; otherwise marks are read from the target.
    marks: Option<HashSet<CellId>>,
    added: usize,
}

impl Replayer<'_> {
    fn is_marked(&self, r: &SimplexRef) -> bool {
        match &self.marks {
            None => self.target.is_marked(r),
            Some(m) => (r.is_degenerate() && r.dim() > 0) || m.contains(&r.base),
        }
    }

    fn simplex_of(&self, step: &CertificateStep, mask: u64) -> Option<SimplexRef> {
        let full = full_mask(step.horn_dim);
        if mask == full {
            Some(SimplexRef::nondegenerate(step.filler))
        } else if mask == full & !(1 << step.horn_index) {
            Some(SimplexRef::nondegenerate(step.face))
        } else {
            step.attach.get(&mask).cloned()
        }
    }

    fn step(&mut self, step: &CertificateStep, thinness_allowed: bool) -> Result<(), String> {
        let (n, r) = (step.horn_dim, step.horn_index);
        if let Some((hn, hr)) = step.stage.horn() {
            if (hn, hr) != (n, r) {
                return Err(format!("stage {} does not match horn Λ^{r}[{n}]", step.stage));
            }
        }
        if n < 2 || r == 0 || r >= n {
            return Err(format!("Λ^{r}[{n}] is not an inner horn"));
        }
        if n > self.target.truncation() {
            return Err(format!("horn dimension {n} exceeds the target truncation"));
        }
        if step.filler.dim != n || !self.target.contains(step.filler) {
            return Err(format!("filler {} is not an {n}-cell of the target", step.filler));
        }
        if step.face.dim + 1 != n || !self.target.contains(step.face) {
            return Err(format!("face {} is not an {}-cell of the target", step.face, n - 1));
        }
        let thin = step.variant == Variant::Thinness;
        if thin && !thinness_allowed {
            return Err("thinness steps are not allowed here".into());
        }
        let expected: Vec<u64> = if thin {
            (1..=full_mask(n)).filter(|&m| m != full_mask(n) && m != full_mask(n) & !(1 << r)).collect()
        } else {
            horn_masks(n, r)
        };
        if step.attach.keys().copied().ne(expected.iter().copied()) {
            return Err("attaching data does not cover exactly the horn".into());
        }
        for (&mask, x) in &step.attach {
            if x.dim() + 1 != mask.count_ones() as usize {
                return Err(format!("horn simplex {mask:#b} sent to {x} of the wrong dimension"));
            }
            if !self.target.contains(x.base) || !self.present.contains(&x.base) {
                return Err(format!("horn simplex {mask:#b} sent to {x}, which is not yet present"));
            }
        }
        let (filler_present, face_present) = (self.present.contains(&step.filler), self.present.contains(&step.face));
        if thin {
            if !filler_present || !face_present {
                return Err("thinness step on a simplex that is not present".into());
            }
        } else if filler_present || face_present {
            return Err(format!("filler {} or face {} is already present", step.filler, step.face));
        }
        // simplicial identities on every simplex of the attached shape
        let full = full_mask(n);
        for mask in 1..=full {
            let x = match self.simplex_of(step, mask) {
                Some(x) => x,
                None => return Err(format!("no image for {mask:#b}")),
            };
            let size = mask.count_ones() as usize;
            if size < 2 {
                continue;
            }
            for pos in 0..size {
                let sub = drop_position(mask, pos);
                let want = self.simplex_of(step, sub).expect("faces of present simplices are present");
                if self.target.face(&x, pos) != want {
                    return Err(format!("face {pos} of the image of {mask:#b} is not the image of {sub:#b}"));
                }
            }
        }
        if self.mode == Mode::Marked {
            for mask in 1..=full {
                let x = self.simplex_of(step, mask).expect("checked above");
                let required_now = if thin { thinness_premise(mask, n, r) } else { mask != full && mask != full & !(1 << r) && model_marked(mask, n, r, step.variant) };
                if required_now && !self.is_marked(&x) {
                    return Err(format!("marked simplex {mask:#b} of the horn lands on the unmarked {x}"));
                }
                if model_marked(mask, n, r, step.variant) && !self.target.is_marked(&x) {
                    return Err(format!("marked simplex {mask:#b} lands on the unmarked {x} of the target"));
                }
            }
        }
        if let Some(marks) = &mut self.marks {
            if self.mode == Mode::Marked {
                for (mask, cell) in [(full, step.filler), (full & !(1 << r), step.face)] {
                    if model_marked(mask, n, r, step.variant) {
                        marks.insert(cell);
                    }
                }
            }
        }
        if !thin {
            self.present.insert(step.filler);
            self.present.insert(step.face);
            self.added += 2;
        }
        Ok(())
    }
}

fn run(
    cert: &AnodyneCertificate,
    initial: &HashSet<CellId>,
    target: &MarkedSimplicialSet,
    mode: Mode,
    initial_marks: Option<HashSet<CellId>>,
) -> Result<ReplaySummary, ReplayFailure> {
    let fail = |step: Option<usize>, reason: String| ReplayFailure { step, reason };
    if cert.truncation > target.truncation() {
        return Err(fail(None, format!("certificate covers dimension {} but the target stops at {}", cert.truncation, target.truncation())));
    }
    if let Some(bad) = initial.iter().find(|c| !target.contains(**c)) {
        return Err(fail(None, format!("source cell {bad} is not in the target")));
    }
    let thinness_allowed = initial_marks.is_some();
    let mut rep = Replayer { target, mode, present: initial.clone(), marks: initial_marks, added: 0 };
    let mut last: Option<Vec<isize>> = None;
    for (i, step) in cert.steps.iter().enumerate() {
        let mut key = vec![step.block as isize];
        key.extend(step.stage.order_key());
        if last.as_ref().is_some_and(|l| *l > key) {
            return Err(fail(Some(i), format!("stage {} is out of order", step.stage)));
        }
        last = Some(key);
        rep.step(step, thinness_allowed).map_err(|e| fail(Some(i), e))?;
    }
    for e in 0..=cert.truncation {
        if let Some(id) = target.cell_ids(e).find(|id| !rep.present.contains(id)) {
            return Err(fail(None, format!("cell {id} is never added")));
        }
    }
    if let (Some(marks), Mode::Marked) = (&rep.marks, mode) {
        for e in 1..=cert.truncation {
            if let Some(id) = target.cell_ids(e).find(|id| target.is_cell_marked(*id) != marks.contains(id)) {
                return Err(fail(None, format!("marking of {id} differs from the target")));
            }
        }
    }
    Ok(ReplaySummary { steps: cert.steps.len(), cells_added: rep.added })
}

/// Replays `cert` starting from the cells in `initial`, checking each step against `target`.
///
/// Marks are inherited from the target, so the intermediate subcomplexes are regular.
pub fn replay_from(
    cert: &AnodyneCertificate,
    initial: &HashSet<CellId>,
    target: &MarkedSimplicialSet,
    mode: Mode,
) -> Result<ReplaySummary, ReplayFailure> {
    run(cert, initial, target, mode, None)
}

/// Replays `cert` on the image of an injective map into the target.
pub fn replay(cert: &AnodyneCertificate, source: &SimplicialMap, mode: Mode) -> Result<ReplaySummary, ReplayFailure> {
    if !source.is_valid() || !source.is_injective() {
        return Err(ReplayFailure { step: None, reason: "source map is not an injective simplicial map".into() });
    }
    if mode == Mode::Marked && !source.is_regular() {
        return Err(ReplayFailure { step: None, reason: "source map is not regular".into() });
    }
    run(cert, &source.image_cells(), &source.target, mode, None)
}

/// Replay that tracks marks explicitly and admits thinness steps.
///
/// The source need not be regular: its marks are the ones carried by `source.source`.
pub fn replay_with_thinness(cert: &AnodyneCertificate, source: &SimplicialMap) -> Result<ReplaySummary, ReplayFailure> {
    if !source.is_valid() || !source.is_injective() {
        return Err(ReplayFailure { step: None, reason: "source map is not an injective simplicial map".into() });
    }
    let marks: HashSet<CellId> = source
        .source
        .all_cell_ids()
        .filter(|id| source.source.is_cell_marked(*id))
        .map(|id| source.image(id).base)
        .collect();
    run(cert, &source.image_cells(), &source.target, cert.mode, Some(marks))
}
