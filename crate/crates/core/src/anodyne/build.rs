use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use super::certificate::{horn_masks, AnodyneCertificate, CertificateStep, Mode, Stage, Variant};
use super::classify::{classify_susp, classify_wedge, SuspClassification, WedgeClassification};
use crate::cat2::{suspend2, theta2, FinCategory, WedgePresentation};
use crate::error::{Error, Result};
use crate::msset::{
    find_isomorphism, inclusion, CellId, DegeneracyWord, GeneratorShape, MarkedSimplicialSet, ModelComplex, SimplexModel,
    SimplexRef, SimplicialMap,
};
use crate::nerve::{susp_comparison, wedge_nerve_pairs_unchecked, MarkingPolicy, MatrixModel, MatrixSimplex, WedgeNerve};
use crate::ordinal;

/// `Σ(N P) ↪ N(ΣP)` in matrix coordinates, built one dimension past the certified range.
#[derive(Clone, Debug)]
pub struct SuspensionContext {
    pub base: Arc<FinCategory>,
    pub matrix: ModelComplex<MatrixModel>,
    pub comparison: SimplicialMap,
    pub dim: usize,
}

impl SuspensionContext {
    pub fn new(p: &FinCategory, dim: usize) -> Result<Self> {
        let (matrix, comparison) = susp_comparison(p, MarkingPolicy::RobertsStreet, dim + 1)?;
        Ok(SuspensionContext { base: matrix.model.base.clone(), matrix, comparison, dim })
    }
}

fn make_step<M: SimplexModel>(
    mc: &ModelComplex<M>,
    stage: Stage,
    variant: Variant,
    r: usize,
    filler: &M::Simplex,
) -> Result<CertificateStep> {
    let n = mc.model.dim(filler);
    let filler_id = mc.id_of(filler).ok_or_else(|| Error::MissingCell(format!("filler {filler:?} at {stage}")))?;
    let face = mc.model.face(filler, r);
    let face_id = mc.id_of(&face).ok_or_else(|| Error::MissingCell(format!("face {face:?} at {stage}")))?;
    let mut attach = BTreeMap::new();
    for mask in horn_masks(n, r) {
        let s = mc.model.reindex(filler, &ordinal::subset_map(mask));
        let x = mc.locate(&s).ok_or_else(|| Error::MissingCell(format!("horn simplex {s:?} at {stage}")))?;
        attach.insert(mask, x);
    }
    Ok(CertificateStep { block: 0, stage, variant, horn_dim: n, horn_index: r, attach, filler: filler_id, face: face_id })
}

fn variant_for(mode: Mode, marked: bool) -> Variant {
    if mode == Mode::Marked && marked {
        Variant::Marked
    } else {
        Variant::Plain
    }
}

/// `τ` with a constant row inserted at position `r`, copying the first object of row `r − 1`.
pub fn insert_constant_row(p: &FinCategory, tau: &MatrixSimplex, r: usize) -> MatrixSimplex {
    let rows = tau.rows() + 1;
    let cols = tau.cols();
    let old = |i: usize| if i < r { i } else { i - 1 };
    let pivot = tau.object(r - 1, 0);
    let mut objects = Vec::with_capacity(rows * cols);
    let mut vertical = Vec::new();
    let mut horizontal = Vec::new();
    for i in 0..rows {
        for c in 0..cols {
            objects.push(if i == r { pivot } else { tau.object(old(i), c) });
        }
    }
    for i in 0..rows - 1 {
        for c in 0..cols {
            vertical.push(if i + 1 == r {
                tau.arrow(p, r - 1, c, r - 1, 0)
            } else if i == r {
                tau.v(r - 1, 0)
            } else {
                tau.v(old(i), c)
            });
        }
    }
    for i in 0..rows {
        for c in 1..cols {
            horizontal.push(if i == r { p.identity(pivot) } else { tau.h(old(i), c) });
        }
    }
    MatrixSimplex { k: tau.k + 1, l: tau.l, objects, vertical, horizontal }
}

/// Certificate for `Σ(N P) ↪ N(ΣP)` through dimension `ctx.dim`.
pub fn build_cert_suspension(ctx: &SuspensionContext, mode: Mode, name: &str) -> Result<AnodyneCertificate> {
    let mat = &ctx.matrix;
    let p = &ctx.base;
    let mut steps = Vec::new();
    for d in 2..=ctx.dim {
        let mut buckets: BTreeMap<(isize, usize), Vec<&MatrixSimplex>> = BTreeMap::new();
        for s in mat.simplices(d) {
            let c = classify_susp(&mat.model, s);
            if !c.suspect {
                buckets.entry((c.k, c.r)).or_default().push(s);
            }
        }
        for k in (1..d).rev() {
            for r in 1..=k {
                let stage = Stage::Suspension { d, k, r };
                let mut stage_steps = Vec::new();
                for tau in buckets.get(&(k as isize - 1, r)).into_iter().flatten() {
                    let filler = insert_constant_row(p, tau, r);
                    let c = classify_susp(&mat.model, &filler);
                    if c != (SuspClassification { k: k as isize, r, suspect: true }) || mat.model.is_degenerate(&filler) {
                        return Err(Error::CrossCheck(format!("filler of {tau:?} classifies as {c:?}")));
                    }
                    let variant = variant_for(mode, mat.model.is_marked(tau));
                    stage_steps.push(make_step(mat, stage, variant, r, &filler)?);
                }
                stage_steps.sort_by_key(|s| s.filler);
                steps.extend(stage_steps);
            }
        }
    }
    Ok(AnodyneCertificate {
        source: format!("susp-nerve {name}"),
        target: format!("nerve-susp {name}"),
        truncation: ctx.dim,
        mode,
        steps,
    })
}

/// The wedge pair model built one dimension past `dim`.
pub fn wedge_context(w: &WedgePresentation, dim: usize) -> Result<WedgeNerve> {
    wedge_nerve_pairs_unchecked(w, MarkingPolicy::RobertsStreet, dim + 1)
}

/// Certificate for `N A ∨ N A' ↪ N(A ∨ A')` through dimension `dim`.
pub fn build_cert_wedge(wn: &WedgeNerve, dim: usize, mode: Mode, name: &str) -> Result<AnodyneCertificate> {
    if wn.pairs.truncation() < dim + 1 {
        return Err(Error::TruncationTooSmall { requested: wn.pairs.truncation(), needed: dim + 1 });
    }
    let pairs = &wn.pairs;
    let model = &pairs.model;
    let mut steps = Vec::new();
    for d in 1..=dim {
        let mut buckets: BTreeMap<(isize, isize, isize), Vec<&(SimplexRef, SimplexRef)>> = BTreeMap::new();
        for s in pairs.simplices(d) {
            let c = classify_wedge(model, s);
            if !c.suspect {
                buckets.entry((c.k_left, c.k_right, c.r)).or_default().push(s);
            }
        }
        for b in (0..d).rev() {
            for k in (b..d).rev() {
                for r in (k - b + 1..=k + 1).rev() {
                    let stage = Stage::Wedge { d, b, k, r };
                    let key = ((k - b) as isize, k as isize, r as isize - 1);
                    let mut stage_steps = Vec::new();
                    for s in buckets.get(&key).into_iter().flatten() {
                        let filler = (model.left.degeneracy(&s.0, r), model.right.degeneracy(&s.1, r - 1));
                        let c = classify_wedge(model, &filler);
                        let want = (key.0, key.1 + 1, r as isize, true);
                        if (c.k_left, c.k_right, c.r, c.suspect) != want || c.in_image || model.is_degenerate(&filler) {
                            return Err(Error::CrossCheck(format!("filler of {s:?} classifies as {c:?}")));
                        }
                        let variant = variant_for(mode, model.is_marked(s));
                        stage_steps.push(make_step(pairs, stage, variant, r, &filler)?);
                    }
                    stage_steps.sort_by_key(|s| s.filler);
                    steps.extend(stage_steps);
                }
            }
        }
    }
    Ok(AnodyneCertificate {
        source: format!("wedge-of-nerves {name}"),
        target: format!("nerve-of-wedge {name}"),
        truncation: dim,
        mode,
        steps,
    })
}

/// Classification of every nondegenerate simplex of the pair model, for reporting.
pub fn wedge_census(wn: &WedgeNerve, dim: usize) -> Vec<(usize, WedgeClassification)> {
    (0..=dim.min(wn.pairs.truncation()))
        .flat_map(|d| wn.pairs.simplices(d).iter().map(move |s| (d, classify_wedge(&wn.pairs.model, s))))
        .collect()
}

/// `Λ^k[m]' ↪ Δ^k[m]''` as a horn step followed by a thinness step.
///
/// Returns the certificate and the inclusion it replays against.
pub fn decompose_lambda_prime(m: usize, k: usize) -> Result<(AnodyneCertificate, SimplicialMap)> {
    if m < 2 || k == 0 || k >= m {
        return Err(Error::InvalidShape(format!("Λ^{k}[{m}]' is not an inner horn")));
    }
    let source = inclusion(GeneratorShape::HornPrime(m, k), GeneratorShape::ComplicialDoublePrime(m, k), m)?;
    let target = crate::msset::generator_model(GeneratorShape::ComplicialDoublePrime(m, k), m)?;
    let top: Vec<usize> = (0..=m).collect();
    let horn = make_step(&target, Stage::Single { index: 0 }, Variant::Plain, k, &top)?;
    let mut thin = horn.clone();
    thin.stage = Stage::Single { index: 1 };
    thin.variant = Variant::Thinness;
    let cert = AnodyneCertificate {
        source: format!("horn-prime {m} {k}"),
        target: format!("complicial-double-prime {m} {k}"),
        truncation: m,
        mode: Mode::Marked,
        steps: vec![horn, thin],
    };
    Ok((cert, source))
}

/// A chain of wedge certificates transported into the nerve of the final iterated wedge.
#[derive(Clone, Debug)]
pub struct ChainedWedge {
    pub target: Arc<MarkedSimplicialSet>,
    /// Image of `N ΣΔ[k_1] ∨ … ∨ N ΣΔ[k_m]`.
    pub initial: HashSet<CellId>,
    pub certificate: AnodyneCertificate,
}

fn transport(step: &CertificateStep, e: &SimplicialMap, block: usize) -> Result<CertificateStep> {
    let cell = |id: CellId| {
        let x = e.image(id);
        if x.is_degenerate() {
            Err(Error::NotInjective)
        } else {
            Ok(x.base)
        }
    };
    Ok(CertificateStep {
        block,
        attach: step.attach.iter().map(|(m, x)| (*m, e.apply(x))).collect(),
        filler: cell(step.filler)?,
        face: cell(step.face)?,
        ..step.clone()
    })
}

/// Chains the wedge certificates for `Θ[k_1, …, k_m]` built one suspended interval at a time.
pub fn chain_wedge_certificates(widths: &[usize], dim: usize, mode: Mode) -> Result<ChainedWedge> {
    if widths.len() < 2 {
        return Err(Error::InvalidShape("chaining needs at least two factors".into()));
    }
    let mut nerves = Vec::new();
    let mut certs = Vec::new();
    for j in 1..widths.len() {
        let w = WedgePresentation::ends(theta2(&widths[..j]), suspend2(&FinCategory::interval(widths[j])))?;
        let wn = wedge_context(&w, dim)?;
        certs.push(build_cert_wedge(&wn, dim, mode, &format!("{:?}", &widths[..=j]))?);
        nerves.push(wn);
    }
    let last = nerves.last().expect("at least one wedge");
    let target = last.pairs.complex.clone();
    // embeddings of each intermediate target into the final one, innermost last
    let mut embeddings = vec![SimplicialMap::identity(target.clone())];
    for j in (0..nerves.len() - 1).rev() {
        let next = &nerves[j + 1];
        let psi = find_isomorphism(&nerves[j].pairs.complex, &next.left.complex, false)
            .ok_or_else(|| Error::CrossCheck(format!("pair model {j} is not the next left factor")))?;
        let bottom = next.bottom_vertex;
        let left_inclusion = SimplicialMap::from_fn(next.left.complex.clone(), next.pairs.complex.clone(), |id| {
            let constant = SimplexRef { word: DegeneracyWord::from_collapses(0..id.dim), base: bottom };
            next.pairs.locate(&(SimplexRef::nondegenerate(id), constant)).expect("left factor lies in the pair model")
        });
        let e = psi.then(&left_inclusion).then(embeddings.last().expect("nonempty"));
        embeddings.push(e);
    }
    embeddings.reverse();
    let mut initial = HashSet::new();
    let mut steps = Vec::new();
    for (j, ((wn, cert), e)) in nerves.iter().zip(&certs).zip(&embeddings).enumerate() {
        for id in wn.comparison.image_cells() {
            let c = classify_wedge(&wn.pairs.model, wn.pairs.simplex(id));
            if j == 0 || c.k_left == -1 {
                initial.insert(e.image(id).base);
            }
        }
        for step in &cert.steps {
            steps.push(transport(step, e, j)?);
        }
    }
    let certificate = AnodyneCertificate {
        source: format!("wedge-of-nerves {widths:?}"),
        target: format!("nerve-of-theta {widths:?}"),
        truncation: dim,
        mode,
        steps,
    };
    Ok(ChainedWedge { target, initial, certificate })
}
