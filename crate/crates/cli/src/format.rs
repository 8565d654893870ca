//! File formats: complexes and maps as JSON documents, certificates as JSON lines.
//!
//! A simplex reference is written `[indices, base]`, with the degeneracy indices in descending
//! order and `base` the index of a cell whose dimension follows from the context.

use std::collections::BTreeMap;
use std::sync::Arc;

use complicial::anodyne::{AnodyneCertificate, CertificateStep, Mode, Stage, Variant};
use complicial::msset::{CellId, DegeneracyWord, MarkedSimplicialSet, SimplexRef, SimplicialMap};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;
const CERTIFICATE_FORMAT: &str = "complicial-certificate";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("schema mismatch: {0}")]
    Schema(String),
    #[error("dangling reference: {0}")]
    Dangling(String),
    #[error("malformed record: {0}")]
    Malformed(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, FormatError>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefRecord(pub Vec<usize>, pub usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexRecord {
    pub id: usize,
    pub dim: usize,
    pub faces: Vec<RefRecord>,
    pub marked: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub schema: u32,
    pub truncation: usize,
    pub simplices: Vec<SimplexRecord>,
    /// Name → `[dim, id]`.
    pub basepoints: BTreeMap<String, (usize, usize)>,
}

fn ref_record(r: &SimplexRef) -> RefRecord {
    RefRecord(r.word.indices().to_vec(), r.base.index)
}

/// Rebuilds a reference of dimension `dim`, checking it against the cells present so far.
fn simplex_ref(rec: &RefRecord, dim: usize, x: &MarkedSimplicialSet, what: &str) -> Result<SimplexRef> {
    let word = DegeneracyWord::from_indices(rec.0.clone()).map_err(|e| FormatError::Malformed(format!("{what}: {e}")))?;
    let base_dim = dim
        .checked_sub(word.len())
        .ok_or_else(|| FormatError::Malformed(format!("{what}: too many degeneracies for dimension {dim}")))?;
    if word.indices().first().is_some_and(|&i| i >= dim) {
        return Err(FormatError::Malformed(format!("{what}: degeneracy index out of range")));
    }
    let base = CellId::new(base_dim, rec.1);
    if base_dim > x.truncation() || !x.contains(base) {
        return Err(FormatError::Dangling(format!("{what}: no cell {base}")));
    }
    Ok(SimplexRef { word, base })
}

pub fn complex_file(x: &MarkedSimplicialSet) -> ComplexFile {
    let mut simplices = Vec::new();
    for dim in 0..=x.truncation() {
        for id in x.cell_ids(dim) {
            let cell = x.cell(id);
            simplices.push(SimplexRecord {
                id: id.index,
                dim,
                faces: cell.faces.iter().map(ref_record).collect(),
                marked: cell.marked,
                label: cell.label.clone(),
            });
        }
    }
    let basepoints = x.basepoints().iter().map(|(k, v)| (k.clone(), (v.dim, v.index))).collect();
    ComplexFile { schema: SCHEMA_VERSION, truncation: x.truncation(), simplices, basepoints }
}

pub fn complex_from_file(f: &ComplexFile) -> Result<MarkedSimplicialSet> {
    if f.schema != SCHEMA_VERSION {
        return Err(FormatError::Schema(format!("complex schema {} (expected {SCHEMA_VERSION})", f.schema)));
    }
    let mut x = MarkedSimplicialSet::new(f.truncation);
    let mut last_dim = 0;
    for rec in &f.simplices {
        if rec.dim > f.truncation {
            return Err(FormatError::Malformed(format!("simplex {}:{} above truncation", rec.dim, rec.id)));
        }
        if rec.dim < last_dim {
            return Err(FormatError::Malformed("simplices are not sorted by dimension".into()));
        }
        last_dim = rec.dim;
        if rec.id != x.count(rec.dim) {
            return Err(FormatError::Malformed(format!("simplex ids in dimension {} are not dense at {}", rec.dim, rec.id)));
        }
        let expected_faces = if rec.dim == 0 { 0 } else { rec.dim + 1 };
        if rec.faces.len() != expected_faces {
            return Err(FormatError::Malformed(format!("simplex {}:{} has {} faces", rec.dim, rec.id, rec.faces.len())));
        }
        let what = format!("face of {}:{}", rec.dim, rec.id);
        let faces = rec.faces.iter().map(|r| simplex_ref(r, rec.dim - 1, &x, &what)).collect::<Result<Vec<_>>>()?;
        if rec.marked && rec.dim == 0 {
            return Err(FormatError::Malformed(format!("vertex {} is marked", rec.id)));
        }
        x.push_cell(rec.dim, faces, rec.marked, rec.label.clone());
    }
    for (name, &(dim, index)) in &f.basepoints {
        let id = CellId::new(dim, index);
        if dim > f.truncation || !x.contains(id) {
            return Err(FormatError::Dangling(format!("basepoint {name} names {id}")));
        }
        x.set_basepoint(name.clone(), id);
    }
    Ok(x)
}

pub fn encode_complex(x: &MarkedSimplicialSet) -> String {
    let mut s = serde_json::to_string_pretty(&complex_file(x)).expect("serializable");
    s.push('\n');
    s
}

pub fn decode_complex(text: &str) -> Result<MarkedSimplicialSet> {
    complex_from_file(&serde_json::from_str(text)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub schema: u32,
    pub source: ComplexFile,
    pub target: ComplexFile,
    /// Image of each source cell, grouped by dimension.
    pub assignment: Vec<Vec<RefRecord>>,
}

pub fn encode_map(f: &SimplicialMap) -> String {
    let file = MapFile {
        schema: SCHEMA_VERSION,
        source: complex_file(&f.source),
        target: complex_file(&f.target),
        assignment: f.assignment.iter().map(|row| row.iter().map(ref_record).collect()).collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    s
}

pub fn decode_map(text: &str) -> Result<SimplicialMap> {
    let file: MapFile = serde_json::from_str(text)?;
    if file.schema != SCHEMA_VERSION {
        return Err(FormatError::Schema(format!("map schema {}", file.schema)));
    }
    let source = Arc::new(complex_from_file(&file.source)?);
    let target = Arc::new(complex_from_file(&file.target)?);
    if file.assignment.len() != source.truncation() + 1 {
        return Err(FormatError::Malformed("assignment does not cover every dimension".into()));
    }
    let mut assignment = Vec::new();
    for (dim, row) in file.assignment.iter().enumerate() {
        if row.len() != source.count(dim) {
            return Err(FormatError::Malformed(format!("assignment in dimension {dim} has {} entries", row.len())));
        }
        let what = format!("image in dimension {dim}");
        assignment.push(row.iter().map(|r| simplex_ref(r, dim, &target, &what)).collect::<Result<Vec<_>>>()?);
    }
    Ok(SimplicialMap::new(source, target, assignment))
}

/// First line of a certificate file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateHeader {
    pub format: String,
    pub schema: u32,
    /// The command that rebuilds source and target, e.g. `["suspension", "interval:1"]`.
    pub context: Vec<String>,
    pub source: String,
    pub target: String,
    pub truncation: usize,
    pub mode: String,
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum StageRecord {
    Suspension { d: usize, k: usize, r: usize },
    Wedge { d: usize, b: usize, k: usize, r: usize },
    Single { index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HornRecord {
    pub dim: usize,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub block: usize,
    pub stage: StageRecord,
    pub variant: String,
    pub horn: HornRecord,
    /// Keyed by the vertex set of the horn simplex, as a bitmask.
    pub attach: BTreeMap<u64, RefRecord>,
    pub filler: usize,
    pub face: usize,
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Marked => "marked",
        Mode::Unmarked => "unmarked",
    }
}

fn parse_mode(s: &str) -> Result<Mode> {
    match s {
        "marked" => Ok(Mode::Marked),
        "unmarked" => Ok(Mode::Unmarked),
        _ => Err(FormatError::Malformed(format!("mode {s:?}"))),
    }
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Plain => "plain",
        Variant::Marked => "marked",
        Variant::Thinness => "thinness",
    }
}

fn parse_variant(s: &str) -> Result<Variant> {
    match s {
        "plain" => Ok(Variant::Plain),
        "marked" => Ok(Variant::Marked),
        "thinness" => Ok(Variant::Thinness),
        _ => Err(FormatError::Malformed(format!("variant {s:?}"))),
    }
}

fn step_record(s: &CertificateStep) -> StepRecord {
    StepRecord {
        block: s.block,
        stage: match s.stage {
            Stage::Suspension { d, k, r } => StageRecord::Suspension { d, k, r },
            Stage::Wedge { d, b, k, r } => StageRecord::Wedge { d, b, k, r },
            Stage::Single { index } => StageRecord::Single { index },
        },
        variant: variant_name(s.variant).into(),
        horn: HornRecord { dim: s.horn_dim, index: s.horn_index },
        attach: s.attach.iter().map(|(m, r)| (*m, ref_record(r))).collect(),
        filler: s.filler.index,
        face: s.face.index,
    }
}

fn step_from_record(rec: &StepRecord, line: usize) -> Result<CertificateStep> {
    let n = rec.horn.dim;
    if n == 0 || n >= 63 {
        return Err(FormatError::Malformed(format!("line {line}: horn dimension {n}")));
    }
    let mut attach = BTreeMap::new();
    for (&mask, r) in &rec.attach {
        if mask == 0 || mask >> (n + 1) != 0 {
            return Err(FormatError::Malformed(format!("line {line}: horn simplex {mask} outside Δ[{n}]")));
        }
        let dim = mask.count_ones() as usize - 1;
        let word = DegeneracyWord::from_indices(r.0.clone()).map_err(|e| FormatError::Malformed(format!("line {line}: {e}")))?;
        let base_dim = dim
            .checked_sub(word.len())
            .ok_or_else(|| FormatError::Malformed(format!("line {line}: too many degeneracies")))?;
        attach.insert(mask, SimplexRef { word, base: CellId::new(base_dim, r.1) });
    }
    Ok(CertificateStep {
        block: rec.block,
        stage: match rec.stage {
            StageRecord::Suspension { d, k, r } => Stage::Suspension { d, k, r },
            StageRecord::Wedge { d, b, k, r } => Stage::Wedge { d, b, k, r },
            StageRecord::Single { index } => Stage::Single { index },
        },
        variant: parse_variant(&rec.variant)?,
        horn_dim: n,
        horn_index: rec.horn.index,
        attach,
        filler: CellId::new(n, rec.filler),
        face: CellId::new(n - 1, rec.face),
    })
}

pub fn encode_certificate(cert: &AnodyneCertificate, context: &[String]) -> String {
    let header = CertificateHeader {
        format: CERTIFICATE_FORMAT.into(),
        schema: SCHEMA_VERSION,
        context: context.to_vec(),
        source: cert.source.clone(),
        target: cert.target.clone(),
        truncation: cert.truncation,
        mode: mode_name(cert.mode).into(),
        steps: cert.steps.len(),
    };
    let mut out = serde_json::to_string(&header).expect("serializable");
    out.push('\n');
    for step in &cert.steps {
        out.push_str(&serde_json::to_string(&step_record(step)).expect("serializable"));
        out.push('\n');
    }
    out
}

/// Parses a certificate file, returning the rebuild context with the certificate.
pub fn decode_certificate(text: &str) -> Result<(Vec<String>, AnodyneCertificate)> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, first) = lines.next().ok_or_else(|| FormatError::Malformed("empty certificate".into()))?;
    let header: CertificateHeader = serde_json::from_str(first)?;
    if header.format != CERTIFICATE_FORMAT || header.schema != SCHEMA_VERSION {
        return Err(FormatError::Schema(format!("{} schema {}", header.format, header.schema)));
    }
    let mut steps = Vec::new();
    for (i, line) in lines {
        let rec: StepRecord = serde_json::from_str(line)?;
        steps.push(step_from_record(&rec, i + 1)?);
    }
    if steps.len() != header.steps {
        return Err(FormatError::Malformed(format!("header announces {} steps, found {}", header.steps, steps.len())));
    }
    let cert = AnodyneCertificate {
        source: header.source,
        target: header.target,
        truncation: header.truncation,
        mode: parse_mode(&header.mode)?,
        steps,
    };
    Ok((header.context, cert))
}
