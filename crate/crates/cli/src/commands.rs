//! Subcommands. `run` never touches the process; `main` prints its output and exits with its code.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use complicial::anodyne::{
    build_cert_suspension, build_cert_wedge, chain_wedge_certificates, check_face_tables_susp, check_face_tables_wedge,
    decompose_lambda_prime, replay, replay_from, replay_with_thinness, wedge_context, AnodyneCertificate, Mode,
    ReplaySummary, SuspensionContext,
};
use complicial::cat2::{check_universal_property, collapse_map, find_2iso, pullback_over_corner, suspend2, wedge2, FinCategory};
use complicial::msset::{find_isomorphism, has_extension, inclusion, GeneratorShape};
use complicial::nerve::{duskin_nerve, matrix_model, matrix_model_complex, MarkingPolicy};
use serde::Serialize;

use crate::format::{decode_certificate, encode_certificate, encode_complex};
use crate::spec::{base_category, build_object, ends, parse_base, Built, ObjectSpec, TwoCatSpec};

/// Largest truncation any command will build.
pub const MAX_DIM: usize = 7;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "complicial", version, about = "Marked simplicial sets, 2-categorical nerves and anodyne certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Suspension,
    Wedge,
    FaceTables,
    MatrixIso,
    OrientalCollapse,
    WedgePullback,
    LambdaPrime,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build an object and write it as a complex file.
    Build {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Count nondegenerate simplices per dimension.
    Census {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Check one of the comparison theorems at a given truncation.
    Verify {
        theorem: Theorem,
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
        /// Chain wedges of suspended intervals of these widths, e.g. `1,1,0`.
        #[arg(long)]
        widths: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[arg(long)]
        unmarked: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Replay a certificate file against the inclusion named in its header.
    Replay { file: PathBuf },
    /// Decide whether every map out of a generator extends along an inclusion of generators.
    Rlp {
        #[arg(long)]
        sub: String,
        #[arg(long)]
        ambient: String,
        #[arg(long)]
        into: String,
        #[arg(long)]
        dim: Option<usize>,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: msg.into() }
    }

    fn failed(stdout: String, msg: impl Into<String>) -> Self {
        Outcome { code: EXIT_FAILED, stdout, stderr: msg.into() }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(text) } else { Outcome::usage(text) };
        }
    };
    match cli.command {
        Command::Build { spec, dim, out, format } => cmd_build(&spec.join(" "), dim, out, format),
        Command::Census { spec, dim } => cmd_census(&spec.join(" "), dim),
        Command::Verify { theorem, base, left, right, widths, k, l, m, dim, unmarked, out, format } => {
            let params = VerifyParams { base, left, right, widths, k, l, m, dim, unmarked, out, format };
            cmd_verify(theorem, &params)
        }
        Command::Replay { file } => cmd_replay(&file),
        Command::Rlp { sub, ambient, into, dim } => cmd_rlp(&sub, &ambient, &into, dim),
    }
}

fn guard(dim: usize) -> Result<(), Outcome> {
    if dim > MAX_DIM {
        Err(Outcome::usage(format!("--dim {dim} exceeds the supported maximum {MAX_DIM}")))
    } else {
        Ok(())
    }
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<(), Outcome> {
    if let Some(p) = path {
        std::fs::write(p, text).map_err(|e| Outcome::failed(String::new(), format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

fn parse_object(spec: &str, dim: Option<usize>) -> Result<(ObjectSpec, usize), Outcome> {
    let obj = ObjectSpec::parse(spec).map_err(|e| Outcome::usage(e.to_string()))?;
    let dim = match (&obj, dim) {
        (_, Some(d)) => d,
        (ObjectSpec::Generator(shape), None) => shape.ambient_dim().unwrap_or(0),
        (_, None) => 3,
    };
    guard(dim)?;
    Ok((obj, dim))
}

fn cmd_build(spec: &str, dim: Option<usize>, out: Option<PathBuf>, format: OutputFormat) -> Outcome {
    let (obj, dim) = match parse_object(spec, dim) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let built = match build_object(&obj, dim) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(e),
    };
    let x = built.complex();
    let text = match format {
        OutputFormat::Json => encode_complex(x),
        OutputFormat::Text => {
            let mut s = String::new();
            for id in x.all_cell_ids() {
                let cell = x.cell(id);
                let faces: Vec<String> = cell.faces.iter().map(|f| format!("{f:?}")).collect();
                let mark = if cell.marked { " marked" } else { "" };
                let _ = writeln!(s, "{id} [{}]{mark}", faces.join(", "));
            }
            s
        }
    };
    if out.is_some() {
        if let Err(o) = write_out(&out, &text) {
            return o;
        }
        Outcome::ok(format!("wrote {} cells\n", x.all_cell_ids().count()))
    } else {
        Outcome::ok(text)
    }
}

fn cmd_census(spec: &str, dim: Option<usize>) -> Outcome {
    let (obj, dim) = match parse_object(spec, dim) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let built = match build_object(&obj, dim) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(e),
    };
    let x = built.complex();
    let mut split: Vec<BTreeMap<(isize, isize), usize>> = vec![BTreeMap::new(); dim + 1];
    match &built {
        Built::Plain(_) => {}
        Built::Matrix(m) => {
            for d in 0..=dim.min(m.truncation()) {
                for s in m.simplices(d) {
                    *split[d].entry((s.k, s.l)).or_default() += 1;
                }
            }
        }
        Built::Wedge(w) => {
            for d in 0..=dim.min(w.pairs.truncation()) {
                for s in w.pairs.simplices(d) {
                    *split[d].entry(w.pairs.model.type_pair(s)).or_default() += 1;
                }
            }
        }
    }
    let mut s = String::from("dim  cells  marked  types\n");
    for d in 0..=dim.min(x.truncation()) {
        let marked = x.cell_ids(d).filter(|&id| x.is_cell_marked(id)).count();
        let types: Vec<String> = split[d].iter().map(|((a, b), n)| format!("({a},{b}):{n}")).collect();
        let _ = writeln!(s, "{d:<4} {:<6} {marked:<7} {}", x.count(d), types.join(" ").trim_end());
    }
    Outcome::ok(s.lines().map(|l| l.trim_end().to_string() + "\n").collect())
}

pub struct VerifyParams {
    pub base: Option<String>,
    pub left: Option<String>,
    pub right: Option<String>,
    pub widths: Option<String>,
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub m: Option<usize>,
    pub dim: usize,
    pub unmarked: bool,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
}

#[derive(Serialize)]
struct Report {
    theorem: String,
    ok: bool,
    lines: Vec<String>,
}

fn require<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, Outcome> {
    v.as_deref().ok_or_else(|| Outcome::usage(format!("this check needs --{flag}")))
}

fn base_param(p: &VerifyParams) -> Result<(String, FinCategory), Outcome> {
    let s = require(&p.base, "base")?;
    let b = parse_base(s).map_err(|e| Outcome::usage(e.to_string()))?;
    Ok((s.to_string(), base_category(&b)))
}

fn sides(p: &VerifyParams) -> Result<(String, String, TwoCatSpec, TwoCatSpec), Outcome> {
    let (l, r) = (require(&p.left, "left")?, require(&p.right, "right")?);
    let ls = TwoCatSpec::parse(l).map_err(|e| Outcome::usage(e.to_string()))?;
    let rs = TwoCatSpec::parse(r).map_err(|e| Outcome::usage(e.to_string()))?;
    Ok((l.to_string(), r.to_string(), ls, rs))
}

fn mode_of(p: &VerifyParams) -> Mode {
    if p.unmarked {
        Mode::Unmarked
    } else {
        Mode::Marked
    }
}

fn summary_line(cert: &AnodyneCertificate, s: &ReplaySummary) -> String {
    format!("{} -> {} through dimension {}: {} steps, {} cells added", cert.source, cert.target, cert.truncation, s.steps, s.cells_added)
}

pub fn cmd_verify(theorem: Theorem, p: &VerifyParams) -> Outcome {
    if let Err(o) = guard(p.dim) {
        return o;
    }
    let start = Instant::now();
    let result = match theorem {
        Theorem::Suspension => verify_suspension(p),
        Theorem::Wedge => verify_wedge(p),
        Theorem::FaceTables => verify_face_tables(p),
        Theorem::MatrixIso => verify_matrix_iso(p),
        Theorem::OrientalCollapse => verify_collapse(p),
        Theorem::WedgePullback => verify_wedge_pullback(p),
        Theorem::LambdaPrime => verify_lambda_prime(p),
    };
    let (ok, mut lines) = match result {
        Ok(v) => v,
        Err(o) => return o,
    };
    lines.push(format!("elapsed {} ms", start.elapsed().as_millis()));
    let name = format!("{theorem:?}");
    let text = match p.format {
        OutputFormat::Text => {
            let mut s = format!("{} {name}\n", if ok { "OK" } else { "FAILED" });
            for l in &lines {
                s.push_str(l);
                s.push('\n');
            }
            s
        }
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&Report { theorem: name, ok, lines: lines.clone() }).expect("serializable");
            s.push('\n');
            s
        }
    };
    if ok {
        Outcome::ok(text)
    } else {
        let first = lines.first().cloned().unwrap_or_default();
        Outcome::failed(text, first)
    }
}

type Checked = Result<(bool, Vec<String>), Outcome>;

fn finish_certificate(cert: &AnodyneCertificate, context: &[String], replayed: Result<ReplaySummary, String>, out: &Option<PathBuf>) -> Checked {
    match replayed {
        Ok(s) => {
            let mut lines = vec![summary_line(cert, &s)];
            if out.is_some() {
                write_out(out, &encode_certificate(cert, context))?;
                lines.push(format!("certificate written to {}", out.as_ref().expect("checked").display()));
            }
            Ok((true, lines))
        }
        Err(e) => Ok((false, vec![format!("replay failed at {e}")])),
    }
}

fn verify_suspension(p: &VerifyParams) -> Checked {
    let (name, base) = base_param(p)?;
    let ctx = SuspensionContext::new(&base, p.dim).map_err(|e| Outcome::usage(e.to_string()))?;
    let mode = mode_of(p);
    let cert = build_cert_suspension(&ctx, mode, &name).map_err(|e| Outcome::failed(String::new(), e.to_string()))?;
    let replayed = replay(&cert, &ctx.comparison, mode).map_err(|e| e.to_string());
    finish_certificate(&cert, &["suspension".into(), name], replayed, &p.out)
}

fn verify_wedge(p: &VerifyParams) -> Checked {
    let mode = mode_of(p);
    if let Some(widths) = &p.widths {
        let ws = parse_widths(widths)?;
        let chain = chain_wedge_certificates(&ws, p.dim, mode).map_err(|e| Outcome::usage(e.to_string()))?;
        let replayed = replay_from(&chain.certificate, &chain.initial, &chain.target, mode).map_err(|e| e.to_string());
        return finish_certificate(&chain.certificate, &["chain".into(), widths.clone()], replayed, &p.out);
    }
    let (l, r, ls, rs) = sides(p)?;
    let w = ends(&ls, &rs).map_err(Outcome::usage)?;
    let wn = wedge_context(&w, p.dim).map_err(|e| Outcome::usage(e.to_string()))?;
    let cert = build_cert_wedge(&wn, p.dim, mode, &format!("{l} v {r}")).map_err(|e| Outcome::failed(String::new(), e.to_string()))?;
    let replayed = replay(&cert, &wn.comparison, mode).map_err(|e| e.to_string());
    finish_certificate(&cert, &["wedge".into(), l, r], replayed, &p.out)
}

fn parse_widths(s: &str) -> Result<Vec<usize>, Outcome> {
    s.trim_matches(|c| c == '[' || c == ']')
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| Outcome::usage(format!("bad width {t:?}"))))
        .collect()
}

fn verify_face_tables(p: &VerifyParams) -> Checked {
    let report = if p.base.is_some() {
        let (_, base) = base_param(p)?;
        check_face_tables_susp(&matrix_model_complex(&base, MarkingPolicy::RobertsStreet, p.dim), p.dim)
    } else {
        let (_, _, ls, rs) = sides(p)?;
        let w = ends(&ls, &rs).map_err(Outcome::usage)?;
        let wn = wedge_context(&w, p.dim.saturating_sub(1)).map_err(|e| Outcome::usage(e.to_string()))?;
        check_face_tables_wedge(&wn.pairs, p.dim)
    };
    let mut lines = vec![format!(
        "{} suspect simplices, {} faces, {} on the corrected row, {} violations",
        report.checked,
        report.faces,
        report.corrected,
        report.violations.len()
    )];
    lines.extend(report.violations.iter().take(5).cloned());
    Ok((report.is_clean(), lines))
}

fn verify_matrix_iso(p: &VerifyParams) -> Checked {
    let (name, base) = base_param(p)?;
    let m = matrix_model(&base, p.dim);
    let n = duskin_nerve(&suspend2(&base), MarkingPolicy::RobertsStreet, p.dim).map_err(|e| Outcome::usage(e.to_string()))?;
    let census = format!("census {:?} / {:?}", m.census(), n.census());
    match find_isomorphism(&m, &n, false) {
        Some(_) => Ok((true, vec![format!("matrix model of {name} is isomorphic to the nerve of its suspension"), census])),
        None => Ok((false, vec![format!("no isomorphism for {name}"), census])),
    }
}

fn verify_collapse(p: &VerifyParams) -> Checked {
    let pairs: Vec<(usize, usize)> = match (p.k, p.l) {
        (Some(k), Some(l)) => vec![(k, l)],
        (None, None) => (0..=3).flat_map(|k| (0..=3).map(move |l| (k, l))).collect(),
        _ => return Err(Outcome::usage("give both --k and --l, or neither")),
    };
    let mut ok = true;
    let mut lines = Vec::new();
    for (k, l) in pairs {
        let r = collapse_map(k, l);
        ok &= r.is_clean();
        lines.push(format!("({k},{l}): {}", if r.is_clean() { "clean".to_string() } else { r.problems.join("; ") }));
    }
    Ok((ok, lines))
}

fn verify_wedge_pullback(p: &VerifyParams) -> Checked {
    let (l, r, ls, rs) = sides(p)?;
    let w = ends(&ls, &rs).map_err(Outcome::usage)?;
    let x = wedge2(&w).map_err(|e| Outcome::usage(e.to_string()))?;
    let q = pullback_over_corner(&w.left, &w.right, &w.chi_left, &w.chi_right);
    if find_2iso(&x.category, &q).is_none() {
        return Ok((false, vec![format!("{l} v {r} is not isomorphic to the pullback over the corner")]));
    }
    let mut lines = vec![format!("{l} v {r} is isomorphic to the pullback over the corner")];
    for (name, t) in [("itself", x.category.clone()), ("the suspended walking isomorphism", suspend2(&FinCategory::walking_iso()))] {
        match check_universal_property(&w, &x, &t) {
            Ok(n) => lines.push(format!("unique factorizations into {name}: {n} cocones")),
            Err(e) => return Ok((false, vec![format!("universal property into {name}: {e}")])),
        }
    }
    Ok((true, lines))
}

fn verify_lambda_prime(p: &VerifyParams) -> Checked {
    let (m, k) = (p.m.unwrap_or(3), p.k.unwrap_or(1));
    let (cert, source) = decompose_lambda_prime(m, k).map_err(|e| Outcome::usage(e.to_string()))?;
    let replayed = replay_with_thinness(&cert, &source).map_err(|e| e.to_string());
    let context = ["lambda-prime".to_string(), m.to_string(), k.to_string()];
    let (ok, mut lines) = finish_certificate(&cert, &context, replayed, &p.out)?;
    if ok && replay(&cert, &source, Mode::Marked).is_ok() {
        return Ok((false, vec!["the thinness step was not needed".into()]));
    }
    lines.push("the plain horn step alone does not mark the face".into());
    Ok((ok, lines))
}

fn cmd_replay(file: &PathBuf) -> Outcome {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(format!("cannot read {}: {e}", file.display())),
    };
    let (context, cert) = match decode_certificate(&text) {
        Ok(v) => v,
        Err(e) => return Outcome::failed(String::new(), e.to_string()),
    };
    match guard(cert.truncation) {
        Ok(()) => replay_context(&context, &cert),
        Err(o) => o,
    }
}

fn replay_context(context: &[String], cert: &AnodyneCertificate) -> Outcome {
    let usage = |e: String| Outcome::usage(format!("cannot rebuild {context:?}: {e}"));
    let replayed = match context.iter().map(String::as_str).collect::<Vec<_>>().as_slice() {
        ["suspension", base] => {
            let b = match parse_base(base) {
                Ok(b) => base_category(&b),
                Err(e) => return usage(e.to_string()),
            };
            match SuspensionContext::new(&b, cert.truncation) {
                Ok(ctx) => replay(cert, &ctx.comparison, cert.mode),
                Err(e) => return usage(e.to_string()),
            }
        }
        ["wedge", l, r] => {
            let w = match (TwoCatSpec::parse(l), TwoCatSpec::parse(r)) {
                (Ok(ls), Ok(rs)) => ends(&ls, &rs),
                (Err(e), _) | (_, Err(e)) => return usage(e.to_string()),
            };
            match w.and_then(|w| wedge_context(&w, cert.truncation).map_err(|e| e.to_string())) {
                Ok(wn) => replay(cert, &wn.comparison, cert.mode),
                Err(e) => return usage(e),
            }
        }
        ["chain", widths] => {
            let ws = match parse_widths(widths) {
                Ok(w) => w,
                Err(o) => return o,
            };
            match chain_wedge_certificates(&ws, cert.truncation, cert.mode) {
                Ok(chain) => replay_from(cert, &chain.initial, &chain.target, cert.mode),
                Err(e) => return usage(e.to_string()),
            }
        }
        ["lambda-prime", m, k] => {
            let (Ok(m), Ok(k)) = (m.parse(), k.parse()) else {
                return usage("bad horn parameters".into());
            };
            match decompose_lambda_prime(m, k) {
                Ok((_, source)) => replay_with_thinness(cert, &source),
                Err(e) => return usage(e.to_string()),
            }
        }
        _ => return usage("unknown context".into()),
    };
    match replayed {
        Ok(s) => Outcome::ok(format!("OK replay\n{}\n", summary_line(cert, &s))),
        Err(e) => Outcome::failed(format!("FAILED replay\n{e}\n"), e.to_string()),
    }
}

fn generator(spec: &str) -> Result<GeneratorShape, Outcome> {
    match ObjectSpec::parse(spec) {
        Ok(ObjectSpec::Generator(s)) => Ok(s),
        Ok(_) => Err(Outcome::usage(format!("{spec:?} is not a generator shape"))),
        Err(e) => Err(Outcome::usage(e.to_string())),
    }
}

fn cmd_rlp(sub: &str, ambient: &str, into: &str, dim: Option<usize>) -> Outcome {
    let (a, b) = match (generator(sub), generator(ambient)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    let d = dim.unwrap_or_else(|| a.ambient_dim().unwrap_or(0).max(b.ambient_dim().unwrap_or(0)));
    if let Err(o) = guard(d) {
        return o;
    }
    let i = match inclusion(a, b, d) {
        Ok(i) => i,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let (obj, _) = match parse_object(into, Some(d)) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let x = match build_object(&obj, d) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(e),
    };
    match has_extension(&i, x.complex()) {
        Ok(true) => Outcome::ok("extends\n".into()),
        Ok(false) => Outcome::failed("does not extend\n".into(), "some map does not extend"),
        Err(e) => Outcome::usage(e.to_string()),
    }
}
