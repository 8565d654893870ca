//! One line per acceptance criterion; exits nonzero if any fails.
//!
//! Run with `cargo test -p complicial-cli --test acceptance`.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;
use std::time::{Duration, Instant};

use complicial::anodyne::*;
use complicial::cat2::*;
use complicial::msset::*;
use complicial::nerve::*;
use complicial_cli::commands::{run, EXIT_OK};
use complicial_cli::format::*;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

const RS: MarkingPolicy = MarkingPolicy::RobertsStreet;

/// Outcome of one criterion: pass flag and a short note.
type Check = (bool, String);

struct Run {
    /// Objects whose `validate` report was not empty.
    invalid: Vec<String>,
}

impl Run {
    fn valid(&mut self, name: &str, x: &MarkedSimplicialSet) {
        let v = x.validate();
        if !v.is_empty() {
            self.invalid.push(format!("{name}: {:?}", v[0]));
        }
    }
}

fn fail(note: impl Into<String>) -> Check {
    (false, note.into())
}

fn within(elapsed: Duration, limit: Duration, note: String) -> Check {
    if elapsed <= limit {
        (true, note)
    } else {
        (false, format!("{note}; took {elapsed:?}, limit {limit:?}"))
    }
}

fn wedge_of(a: &[usize], b: &[usize]) -> WedgePresentation {
    WedgePresentation::ends(theta2(a), theta2(b)).unwrap()
}

fn standard(m: usize) -> MarkedSimplicialSet {
    make_generator(GeneratorShape::Standard(m), m).unwrap()
}

fn criterion_1(run: &mut Run) -> Check {
    let start = Instant::now();
    let cases = [
        ("[0]", FinCategory::interval(0)),
        ("[1]", FinCategory::interval(1)),
        ("[2]", FinCategory::interval(2)),
        ("walking_iso", FinCategory::walking_iso()),
        ("[1]x[1]^op", FinCategory::rect(1, 1)),
    ];
    for (name, p) in cases {
        let m = matrix_model(&p, 6);
        let n = duskin_nerve(&suspend2(&p), RS, 6).unwrap();
        run.valid(name, &m);
        run.valid(name, &n);
        if m.census() != n.census() || m.marked_census() != n.marked_census() {
            return fail(format!("{name}: census {:?} vs {:?}", m.census(), n.census()));
        }
        if find_isomorphism(&m, &n, false).is_none() {
            return fail(format!("{name}: no isomorphism"));
        }
    }
    within(start.elapsed(), Duration::from_secs(60), "matrix model ≅ nerve of the suspension through dim 6 for 5 bases".into())
}

fn criterion_2() -> Check {
    let start = Instant::now();
    for k in 0..=3 {
        for l in 0..=3 {
            let r = collapse_map(k, l);
            if !r.is_clean() {
                return fail(format!("({k},{l}): {}", r.problems[0]));
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(30), "collapse maps clean for 0 ≤ k,l ≤ 3".into())
}

fn criterion_3() -> Check {
    let shapes: [&[usize]; 4] = [&[0], &[1], &[0, 0], &[1, 0]];
    let targets = [theta2(&[1, 1]), suspend2(&FinCategory::walking_iso())];
    let mut cocones = 0;
    for a in shapes {
        for b in shapes {
            let w = wedge_of(a, b);
            let x = wedge2(&w).unwrap();
            if !validate_2cat(&x.category).is_empty() {
                return fail(format!("{a:?} v {b:?} is not a 2-category"));
            }
            let q = pullback_over_corner(&w.left, &w.right, &w.chi_left, &w.chi_right);
            if find_2iso(&x.category, &q).is_none() {
                return fail(format!("{a:?} v {b:?} is not the pullback"));
            }
            for t in targets.iter().chain([&x.category]) {
                match check_universal_property(&w, &x, t) {
                    Ok(n) => cocones += n,
                    Err(e) => return fail(format!("{a:?} v {b:?}: {e}")),
                }
            }
        }
    }
    (true, format!("16 wedges match the pullback; {cocones} cocones factor uniquely"))
}

fn criterion_4(run: &mut Run) -> Check {
    let mut notes = Vec::new();
    for (name, p) in [("[1]", FinCategory::interval(1)), ("[2]", FinCategory::interval(2)), ("walking_iso", FinCategory::walking_iso())] {
        let start = Instant::now();
        let ctx = SuspensionContext::new(&p, 5).unwrap();
        run.valid(name, &ctx.matrix.complex);
        for mode in [Mode::Marked, Mode::Unmarked] {
            let cert = build_cert_suspension(&ctx, mode, name).unwrap();
            if let Err(e) = replay(&cert, &ctx.comparison, mode) {
                return fail(format!("{name} {mode:?}: {e}"));
            }
        }
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(300) {
            return fail(format!("{name} took {elapsed:?}"));
        }
        notes.push(format!("{name} {:.2}s", elapsed.as_secs_f64()));
    }
    (true, format!("suspension certificates replay through dim 5, both modes ({})", notes.join(", ")))
}

fn criterion_5(run: &mut Run) -> Check {
    let mut steps = Vec::new();
    for (a, b) in [(0, 0), (1, 0), (1, 1)] {
        let start = Instant::now();
        let wn = wedge_context(&wedge_of(&[a], &[b]), 5).unwrap();
        run.valid("wedge nerve", &wn.pairs.complex);
        run.valid("wedge of nerves", &wn.wedge);
        for mode in [Mode::Marked, Mode::Unmarked] {
            let cert = build_cert_wedge(&wn, 5, mode, "w").unwrap();
            if let Err(e) = replay(&cert, &wn.comparison, mode) {
                return fail(format!("([1|{a}],[1|{b}]) {mode:?}: {e}"));
            }
            if mode == Mode::Marked {
                steps.push(cert.steps.len());
            }
        }
        if start.elapsed() > Duration::from_secs(300) {
            return fail(format!("([1|{a}],[1|{b}]) took {:?}", start.elapsed()));
        }
    }
    (true, format!("wedge certificates replay through dim 5, both modes (steps {steps:?})"))
}

fn criterion_6(run: &mut Run) -> Check {
    let chain = chain_wedge_certificates(&[1, 1], 5, Mode::Marked).unwrap();
    run.valid("theta [1,1]", &chain.target);
    if let Err(e) = replay_from(&chain.certificate, &chain.initial, &chain.target, Mode::Marked) {
        return fail(format!("[1,1]: {e}"));
    }
    let direct = duskin_nerve(&theta2(&[1, 1]), RS, 6).unwrap();
    if find_isomorphism(&chain.target, &direct, false).is_none() {
        return fail("chained target is not the nerve of [2|1,1]");
    }
    let wn = wedge_context(&wedge_of(&[0], &[0]), 5).unwrap();
    let spine = build_cert_wedge(&wn, 5, Mode::Marked, "spine").unwrap();
    let single = spine.steps.len() == 1 && matches!(spine.steps[0].stage, Stage::Wedge { d: 1, r: 1, .. });
    if !single || replay(&spine, &wn.comparison, Mode::Marked).is_err() {
        return fail(format!("spine certificate has {} steps", spine.steps.len()));
    }
    (true, format!("N[1|1] v N[1|1] -> N[2|1,1] in {} steps; spine is one step", chain.certificate.steps.len()))
}

/// A grid in a poset given by its objects; arrows are the unique ones.
fn poset_grid(p: &FinCategory, rows: usize, cols: usize, objects: &[usize]) -> MatrixSimplex {
    let at = |i: usize, c: usize| objects[i * cols + c];
    let arrow = |a: usize, b: usize| p.hom(a, b)[0];
    let vertical = (0..rows - 1).flat_map(|i| (0..cols).map(move |c| (i, c))).map(|(i, c)| arrow(at(i, c), at(i + 1, c))).collect();
    let horizontal = (0..rows).flat_map(|i| (1..cols).map(move |c| (i, c))).map(|(i, c)| arrow(at(i, c), at(i, c - 1))).collect();
    MatrixSimplex { k: rows as isize - 1, l: cols as isize - 1, objects: objects.to_vec(), vertical, horizontal }
}

fn criterion_7() -> Check {
    let mut corrected = 0;
    for (name, p) in [("[1]", FinCategory::interval(1)), ("[2]", FinCategory::interval(2))] {
        let report = check_face_tables_susp(&matrix_model_complex(&p, RS, 6), 6);
        if !report.is_clean() || report.checked == 0 {
            return fail(format!("suspension {name}: {:?}", report.violations.first()));
        }
    }
    for (a, b) in [(0, 0), (1, 0)] {
        let wn = wedge_context(&wedge_of(&[a], &[b]), 5).unwrap();
        let report = check_face_tables_wedge(&wn.pairs, 6);
        if !report.is_clean() || report.checked == 0 {
            return fail(format!("wedge ([1|{a}],[1|{b}]): {:?}", report.violations.first()));
        }
        corrected += report.corrected;
    }
    let p = FinCategory::rect(3, 2);
    let o = |i: usize, j: usize| i * 3 + j;
    let model = MatrixModel { base: p.clone().into(), policy: RS };
    let mut objects = vec![o(0, 0), o(0, 1), o(0, 2), o(1, 0), o(1, 1), o(1, 2), o(1, 0), o(1, 0), o(1, 0), o(3, 0), o(3, 0), o(3, 0)];
    let suspect = classify_susp(&model, &poset_grid(&p, 4, 3, &objects));
    objects[6..9].fill(o(2, 0));
    let plain = classify_susp(&model, &poset_grid(&p, 4, 3, &objects));
    if suspect != (SuspClassification { k: 3, r: 2, suspect: true }) || plain != (SuspClassification { k: 3, r: 2, suspect: false }) {
        return fail(format!("worked example classifies as {suspect:?} / {plain:?}"));
    }
    (corrected == 0, format!("face tables clean through dim 6 ({corrected} corrected-row faces); worked example (3,2)"))
}

/// The subcomplex of `Δ[n]` generated by `tops`, with the listed cells marked.
fn subcomplex(n: usize, tops: &[u64], marks: &[u64], truncation: usize) -> MarkedSimplicialSet {
    let mut family = BTreeSet::new();
    for &t in tops {
        let t = t & ((1 << (n + 1)) - 1);
        let mut sub = t;
        while sub > 0 {
            family.insert(sub);
            sub = (sub - 1) & t;
        }
    }
    let mut x = MarkedSimplicialSet::new(truncation);
    let mut ids: HashMap<u64, CellId> = HashMap::new();
    for dim in 0..=n.min(truncation) {
        for &mask in family.iter().filter(|m| m.count_ones() as usize == dim + 1) {
            let vertices: Vec<u64> = (0..=n as u64).filter(|&v| mask >> v & 1 == 1).collect();
            let faces = if dim == 0 {
                Vec::new()
            } else {
                vertices.iter().map(|v| SimplexRef::nondegenerate(ids[&(mask & !(1 << v))])).collect()
            };
            ids.insert(mask, x.push_cell(dim, faces, dim > 0 && marks.contains(&mask), None));
        }
    }
    x
}

fn fuzzed(count: usize) -> Vec<MarkedSimplicialSet> {
    let strategy = (1usize..=4)
        .prop_flat_map(|n| {
            let top = 1u64 << (n + 1);
            (proptest::strategy::Just(n), proptest::collection::vec(1..top, 1..4), proptest::collection::vec(1..top, 0..6))
        })
        .prop_map(|(n, tops, marks)| subcomplex(n, &tops, &marks, 4));
    let mut runner = TestRunner::deterministic();
    (0..count).map(|_| strategy.new_tree(&mut runner).unwrap().current()).collect()
}

fn augmented(x: &MarkedSimplicialSet, k: isize) -> u128 {
    if k < 0 {
        1
    } else {
        x.total_count(k as usize)
    }
}

fn criterion_8(run: &mut Run) -> Check {
    for l in 0..=4 {
        let j = join(&standard(l), &standard(0).with_truncation(l));
        run.valid("join", &j);
        let target = make_generator(GeneratorShape::Standard(l + 1), j.truncation()).unwrap();
        if find_isomorphism(&j, &target, false).is_none() {
            return fail(format!("Δ[{l}]⋆Δ[0] is not Δ[{}]", l + 1));
        }
    }
    let empty = make_generator(GeneratorShape::Empty, 3).unwrap();
    for x in [standard(2), make_generator(GeneratorShape::Complicial(3, 1), 3).unwrap()] {
        let t = x.truncation();
        for j in [join(&empty, &x), join(&x, &empty)] {
            if find_isomorphism(&j.truncate(t).unwrap(), &x, false).is_none() {
                return fail("the empty set is not a unit for join");
            }
        }
    }
    let xs = fuzzed(60);
    for pair in xs.chunks(2) {
        let (x, y) = (&pair[0], &pair[1]);
        let j = join_model(x, y);
        run.valid("fuzzed join", &j.complex);
        for m in 0..=j.truncation() {
            let expected: u128 = (-1..=m as isize).map(|k| augmented(x, k) * augmented(y, m as isize - 1 - k)).sum();
            if j.complex.total_count(m) != expected {
                return fail(format!("join count in dimension {m}: {} vs {expected}", j.complex.total_count(m)));
            }
        }
    }
    (true, "Δ[l]⋆Δ[0] ≅ Δ[l+1] for l ≤ 4; unit; count formula on 30 fuzzed pairs".into())
}

fn criterion_9(run: &mut Run) -> Check {
    for (i, x) in fuzzed(50).iter().enumerate() {
        let s = suspend(x);
        run.valid("fuzzed suspension", &s);
        for m in 0..=5 {
            let expected: u128 = 2 + (0..m).map(|j| x.total_count(j)).sum::<u128>();
            if s.total_count(m) != expected {
                return fail(format!("complex {i}, dimension {m}: {} vs {expected}", s.total_count(m)));
            }
        }
    }
    let cases = [
        (standard(1), 1usize, standard(1), 0usize),
        (standard(2), 2, standard(1), 0),
        (make_generator(GeneratorShape::Complicial(2, 1), 2).unwrap(), 0, standard(2), 1),
    ];
    for (x, xv, y, yv) in cases {
        let t = x.truncation().min(y.truncation());
        let (x, y) = (x.with_truncation(t), y.with_truncation(t));
        let lhs = suspend(&wedge_ss(&x, CellId::new(0, xv), &y, CellId::new(0, yv)).unwrap());
        let px = point_map(&Arc::new(x), CellId::new(0, xv), t).unwrap();
        let py = point_map(&Arc::new(y), CellId::new(0, yv), t).unwrap();
        let rhs = pushout(&suspend_map(&px), &suspend_map(&py)).unwrap();
        run.valid("suspended wedge", &rhs.object);
        if find_isomorphism(&lhs, &rhs.object, false).is_none() {
            return fail("Σ(X v Y) differs from the pushout");
        }
    }
    (true, "suspension census on 50 fuzzed complexes through dim 5; Σ commutes with wedges".into())
}

fn criterion_10(run: &mut Run) -> Check {
    let complexes = [
        matrix_model(&FinCategory::walking_iso(), 5),
        duskin_nerve(&theta2(&[1, 1]), RS, 4).unwrap(),
        make_generator(GeneratorShape::ThreeEq, 3).unwrap(),
        suspend(&standard(2)),
    ];
    for x in &complexes {
        run.valid("round-trip sample", x);
        let text = encode_complex(x);
        match decode_complex(&text) {
            Ok(back) if back == *x && encode_complex(&back) == text => {}
            _ => return fail("complex round-trip is not exact"),
        }
    }
    let f = matrix_duskin_map(&FinCategory::interval(1), RS, 4).unwrap();
    let text = encode_map(&f);
    if decode_map(&text).map(|g| encode_map(&g)).ok().as_deref() != Some(text.as_str()) {
        return fail("map round-trip is not exact");
    }
    let certs: Vec<String> = (0..2)
        .map(|_| {
            let ctx = SuspensionContext::new(&FinCategory::walking_iso(), 5).unwrap();
            encode_certificate(&build_cert_suspension(&ctx, Mode::Marked, "iso").unwrap(), &[])
        })
        .collect();
    if certs[0] != certs[1] {
        return fail("suspension certificates differ between runs");
    }
    match decode_certificate(&certs[0]) {
        Ok((ctx, cert)) if encode_certificate(&cert, &ctx) == certs[0] => {}
        _ => return fail("certificate round-trip is not exact"),
    }
    let dir = std::env::temp_dir().join(format!("complicial-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut files = Vec::new();
    for name in ["a.cert", "b.cert"] {
        let path = dir.join(name);
        let args = ["complicial", "verify", "wedge", "--left", "theta:1,[1]", "--right", "theta:1,[1]", "--dim", "5", "--out", path.to_str().unwrap()];
        if run_cli(&args) != EXIT_OK {
            return fail("verify wedge failed");
        }
        files.push(std::fs::read(&path).unwrap());
    }
    if files[0] != files[1] {
        return fail("certificate files differ between runs");
    }
    if !run.invalid.is_empty() {
        return fail(format!("{} objects fail validation, first {}", run.invalid.len(), run.invalid[0]));
    }
    (true, "every built object validates; round-trips exact; certificates deterministic".into())
}

fn run_cli(args: &[&str]) -> i32 {
    run(args.iter().copied()).code
}

fn main() {
    let mut state = Run { invalid: Vec::new() };
    let mut results = Vec::new();
    let criteria: Vec<(&str, Box<dyn Fn(&mut Run) -> Check>)> = vec![
        ("matrix model", Box::new(criterion_1)),
        ("oriental collapse", Box::new(|_: &mut Run| criterion_2())),
        ("wedge as pullback", Box::new(|_: &mut Run| criterion_3())),
        ("suspension certificates", Box::new(criterion_4)),
        ("wedge certificates", Box::new(criterion_5)),
        ("chained wedges", Box::new(criterion_6)),
        ("face tables", Box::new(|_: &mut Run| criterion_7())),
        ("join laws", Box::new(criterion_8)),
        ("suspension census", Box::new(criterion_9)),
        ("hygiene", Box::new(criterion_10)),
    ];
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, note) = check(&mut state);
        println!("{} criterion {} ({name}): {note} [{:.2}s]", if ok { "PASS" } else { "FAIL" }, i + 1, start.elapsed().as_secs_f64());
        results.push(ok);
    }
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
