//! Compact object specifications.
//!
//! Base categories: `[k]`, `interval:k`, `rect:k,l`, `walking_iso`.
//! 2-categories: `theta:m,[k1,…,km]` (or `theta m k1,…,km`), `suspension:<base>`, `oriental:m`.
//! Objects: generator shapes (`standard:m`, `complicial:m,k`, `horn-prime:m,k`, …),
//! `nerve:<base>`, `nerve-suspension:<base>`, `suspended-nerve:<base>`, `nerve2:<2-category>`,
//! `wedge:<2-category>+<2-category>`, and any 2-category spec (read as its nerve).

use std::sync::Arc;

use complicial::anodyne::wedge_context;
use complicial::cat2::{from_category, BaseSpec, oriental2, suspend2, theta2, FinCategory, Fin2Category, WedgePresentation};
use complicial::msset::{generator_model, suspend, GeneratorShape, MarkedSimplicialSet, ModelComplex};
use complicial::nerve::{duskin_nerve, matrix_model_complex, MarkingPolicy, MatrixModel, WedgeNerve};

#[derive(Debug, thiserror::Error)]
#[error("bad object spec {spec:?}: {reason}")]
pub struct SpecError {
    pub spec: String,
    pub reason: String,
}

fn err(spec: &str, reason: impl Into<String>) -> SpecError {
    SpecError { spec: spec.into(), reason: reason.into() }
}

/// Splits `head:rest` or `head rest`.
fn split(spec: &str) -> (&str, &str) {
    let spec = spec.trim();
    match spec.find([':', ' ']) {
        Some(i) => (&spec[..i], spec[i + 1..].trim()),
        None => (spec, ""),
    }
}

fn numbers(spec: &str, s: &str) -> Result<Vec<usize>, SpecError> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| err(spec, format!("{t:?} is not a natural number")))).collect()
}

fn exactly<const N: usize>(spec: &str, s: &str) -> Result<[usize; N], SpecError> {
    let v = numbers(spec, s)?;
    v.try_into().map_err(|_| err(spec, format!("expected {N} parameter(s)")))
}

/// Parses `[k]`, `interval:k`, `rect:k,l` or `walking_iso`.
pub fn parse_base(spec: &str) -> Result<BaseSpec, SpecError> {
    let t = spec.trim();
    if t.starts_with('[') {
        let [k] = exactly::<1>(spec, t)?;
        return Ok(BaseSpec::Interval(k));
    }
    let (head, rest) = split(t);
    match head {
        "interval" => Ok(BaseSpec::Interval(exactly::<1>(spec, rest)?[0])),
        "rect" => {
            let parts: Vec<&str> = rest.split(',').collect();
            let parse = |s: &str| s.trim().parse::<isize>().map_err(|_| err(spec, format!("{s:?} is not an integer")));
            match parts.as_slice() {
                [k, l] => Ok(BaseSpec::Rect(parse(k)?, parse(l)?)),
                _ => Err(err(spec, "rect takes k,l")),
            }
        }
        "walking_iso" | "walking-iso" | "iso" => Ok(BaseSpec::WalkingIso),
        _ => Err(err(spec, "unknown base category")),
    }
}

pub fn base_category(b: &BaseSpec) -> FinCategory {
    FinCategory::from_spec(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoCatSpec {
    Theta(Vec<usize>),
    Suspension(BaseSpec),
    Oriental(usize),
    /// A 1-category viewed as a locally discrete 2-category.
    Base(BaseSpec),
}

impl TwoCatSpec {
    pub fn parse(spec: &str) -> Result<Self, SpecError> {
        let (head, rest) = split(spec);
        match head {
            "theta" => {
                let (m, widths) = match rest.find([',', ' ']) {
                    Some(i) => (&rest[..i], &rest[i + 1..]),
                    None => (rest, ""),
                };
                let m: usize = m.trim().parse().map_err(|_| err(spec, "theta needs m"))?;
                let widths = numbers(spec, widths)?;
                if widths.len() != m {
                    return Err(err(spec, format!("theta:{m} needs {m} widths")));
                }
                Ok(TwoCatSpec::Theta(widths))
            }
            "suspension" | "susp" => Ok(TwoCatSpec::Suspension(parse_base(rest)?)),
            "oriental" => Ok(TwoCatSpec::Oriental(exactly::<1>(spec, rest)?[0])),
            _ => Ok(TwoCatSpec::Base(parse_base(spec)?)),
        }
    }

    pub fn build(&self) -> Fin2Category {
        match self {
            TwoCatSpec::Theta(w) => theta2(w),
            TwoCatSpec::Suspension(b) => suspend2(&base_category(b)),
            TwoCatSpec::Oriental(m) => oriental2(*m),
            TwoCatSpec::Base(b) => from_category(&base_category(b)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObjectSpec {
    Generator(GeneratorShape),
    /// `N^RS P` of a 1-category.
    Nerve(BaseSpec),
    /// `N^RS(ΣP)` in matrix coordinates.
    NerveSuspension(BaseSpec),
    /// `Σ(N^RS P)`.
    SuspendedNerve(BaseSpec),
    /// `N^RS A` of a 2-category.
    Nerve2(TwoCatSpec),
    /// `N^RS(A ∨ A')` in pair coordinates.
    WedgePairs(TwoCatSpec, TwoCatSpec),
}

impl ObjectSpec {
    pub fn parse(spec: &str) -> Result<Self, SpecError> {
        use GeneratorShape::*;
        let (head, rest) = split(spec);
        let shape = match head {
            "empty" => Some(Empty),
            "standard" => Some(Standard(exactly::<1>(spec, rest)?[0])),
            "top" => Some(Top(exactly::<1>(spec, rest)?[0])),
            "complicial" => exactly::<2>(spec, rest).map(|[m, k]| Some(Complicial(m, k)))?,
            "complicial-prime" => exactly::<2>(spec, rest).map(|[m, k]| Some(ComplicialPrime(m, k)))?,
            "complicial-double-prime" => exactly::<2>(spec, rest).map(|[m, k]| Some(ComplicialDoublePrime(m, k)))?,
            "horn" => exactly::<2>(spec, rest).map(|[m, k]| Some(Horn(m, k)))?,
            "horn-prime" => exactly::<2>(spec, rest).map(|[m, k]| Some(HornPrime(m, k)))?,
            "three-eq" => Some(ThreeEq),
            "three-sharp" => Some(ThreeSharp),
            _ => None,
        };
        if let Some(s) = shape {
            return Ok(ObjectSpec::Generator(s));
        }
        match head {
            "nerve" => Ok(ObjectSpec::Nerve(parse_base(rest)?)),
            "nerve-suspension" => Ok(ObjectSpec::NerveSuspension(parse_base(rest)?)),
            "suspended-nerve" => Ok(ObjectSpec::SuspendedNerve(parse_base(rest)?)),
            "nerve2" => Ok(ObjectSpec::Nerve2(TwoCatSpec::parse(rest)?)),
            "wedge" => {
                let (l, r) = rest.split_once('+').ok_or_else(|| err(spec, "wedge takes <left>+<right>"))?;
                Ok(ObjectSpec::WedgePairs(TwoCatSpec::parse(l)?, TwoCatSpec::parse(r)?))
            }
            "theta" | "suspension" | "susp" | "oriental" => Ok(ObjectSpec::Nerve2(TwoCatSpec::parse(spec)?)),
            _ => Err(err(spec, "unknown object kind")),
        }
    }
}

/// A built object, keeping the model when census needs it.
pub enum Built {
    Plain(Arc<MarkedSimplicialSet>),
    Matrix(ModelComplex<MatrixModel>),
    Wedge(Box<WedgeNerve>),
}

impl Built {
    pub fn complex(&self) -> &Arc<MarkedSimplicialSet> {
        match self {
            Built::Plain(x) => x,
            Built::Matrix(m) => &m.complex,
            Built::Wedge(w) => &w.pairs.complex,
        }
    }
}

pub fn ends(left: &TwoCatSpec, right: &TwoCatSpec) -> Result<WedgePresentation, String> {
    WedgePresentation::ends(left.build(), right.build()).map_err(|e| e.to_string())
}

pub fn build_object(spec: &ObjectSpec, dim: usize) -> Result<Built, String> {
    let rs = MarkingPolicy::RobertsStreet;
    let plain = |x: MarkedSimplicialSet| Ok(Built::Plain(Arc::new(x)));
    match spec {
        ObjectSpec::Generator(shape) => {
            let d = shape.ambient_dim().unwrap_or(0).max(dim);
            let m = generator_model(*shape, d).map_err(|e| e.to_string())?;
            Ok(Built::Plain(m.complex.clone()))
        }
        ObjectSpec::Nerve(b) => plain(duskin_nerve(&from_category(&base_category(b)), rs, dim).map_err(|e| e.to_string())?),
        ObjectSpec::NerveSuspension(b) => Ok(Built::Matrix(matrix_model_complex(&base_category(b), rs, dim))),
        ObjectSpec::SuspendedNerve(b) => {
            let n = duskin_nerve(&from_category(&base_category(b)), rs, dim.saturating_sub(1)).map_err(|e| e.to_string())?;
            let s = suspend(&n);
            plain(if dim == 0 { s.truncate(0).map_err(|e| e.to_string())? } else { s })
        }
        ObjectSpec::Nerve2(c) => plain(duskin_nerve(&c.build(), rs, dim).map_err(|e| e.to_string())?),
        ObjectSpec::WedgePairs(l, r) => {
            let w = ends(l, r)?;
            let wn = wedge_context(&w, dim.saturating_sub(1)).map_err(|e| e.to_string())?;
            Ok(Built::Wedge(Box::new(wn)))
        }
    }
}
