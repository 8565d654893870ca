use std::path::PathBuf;

use complicial::anodyne::{build_cert_suspension, build_cert_wedge, wedge_context, Mode, SuspensionContext};
use complicial::cat2::{suspend2, FinCategory, WedgePresentation};
use complicial::msset::{make_generator, GeneratorShape};
use complicial::nerve::{matrix_duskin_map, matrix_model, MarkingPolicy};
use complicial_cli::commands::{run, Outcome, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use complicial_cli::format::*;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("complicial").chain(args.iter().copied()))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("complicial-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn complex_round_trip() {
    for x in [
        make_generator(GeneratorShape::Complicial(2, 1), 2).unwrap(),
        make_generator(GeneratorShape::ThreeSharp, 3).unwrap(),
        matrix_model(&FinCategory::interval(1), 4),
        matrix_model(&FinCategory::walking_iso(), 4),
    ] {
        let text = encode_complex(&x);
        let back = decode_complex(&text).unwrap();
        assert_eq!(back, x);
        assert!(back.validate().is_empty());
        assert_eq!(encode_complex(&back), text);
    }
}

#[test]
fn map_round_trip() {
    let f = matrix_duskin_map(&FinCategory::interval(2), MarkingPolicy::RobertsStreet, 3).unwrap();
    let text = encode_map(&f);
    let back = decode_map(&text).unwrap();
    assert_eq!(back.assignment, f.assignment);
    assert_eq!(*back.source, *f.source);
    assert_eq!(encode_map(&back), text);
}

#[test]
fn certificate_round_trip() {
    let ctx = SuspensionContext::new(&FinCategory::walking_iso(), 3).unwrap();
    let cert = build_cert_suspension(&ctx, Mode::Marked, "iso").unwrap();
    let context = vec!["suspension".to_string(), "walking_iso".to_string()];
    let text = encode_certificate(&cert, &context);
    let (ctx_back, back) = decode_certificate(&text).unwrap();
    assert_eq!((ctx_back, &back), (context.clone(), &cert));
    assert_eq!(encode_certificate(&back, &context), text);

    let w = WedgePresentation::ends(suspend2(&FinCategory::interval(1)), suspend2(&FinCategory::interval(1))).unwrap();
    let wn = wedge_context(&w, 3).unwrap();
    let cert = build_cert_wedge(&wn, 3, Mode::Unmarked, "w").unwrap();
    let text = encode_certificate(&cert, &[]);
    assert_eq!(decode_certificate(&text).unwrap().1, cert);
}

#[test]
fn dangling_face_is_rejected() {
    let x = make_generator(GeneratorShape::Standard(2), 2).unwrap();
    let mut file = complex_file(&x);
    let edge = file.simplices.iter_mut().find(|s| s.dim == 1).unwrap();
    edge.faces[0].1 = 17;
    let text = serde_json::to_string(&file).unwrap();
    assert!(matches!(decode_complex(&text), Err(FormatError::Dangling(_))));

    let mut file = complex_file(&x);
    file.schema = 99;
    assert!(matches!(complex_from_file(&file), Err(FormatError::Schema(_))));
}

#[test]
fn census_examples() {
    let out = cli(&["census", "standard", "2"]);
    assert_eq!(out.code, EXIT_OK);
    let cells: Vec<&str> = out.stdout.lines().skip(1).map(|l| l.split_whitespace().nth(1).unwrap()).collect();
    assert_eq!(cells, ["3", "3", "1"]);

    let out = cli(&["census", "nerve-suspension", "[1]", "--dim", "3"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.lines().count(), 5);
    assert!(out.stdout.contains("(1,1):2"));

    let out = cli(&["census", "theta", "2", "1,1", "--dim", "2"]);
    let same = cli(&["census", "nerve2:theta:2,[1,1]", "--dim", "2"]);
    assert_eq!(out, same);
}

#[test]
fn verify_examples() {
    let cert = scratch("susp.cert");
    let c = cert.to_str().unwrap();
    let out = cli(&["verify", "suspension", "--base", "interval:1", "--dim", "4", "--out", c]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let replayed = cli(&["replay", c]);
    assert_eq!(replayed.code, EXIT_OK, "{}", replayed.stdout);

    let out = cli(&["verify", "wedge", "--left", "theta:1,[1]", "--right", "theta:1,[0]", "--dim", "4"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let out = cli(&["verify", "matrix-iso", "--base", "walking_iso", "--dim", "4"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
}

#[test]
fn certificate_files_are_deterministic() {
    let (a, b) = (scratch("a.cert"), scratch("b.cert"));
    for p in [&a, &b] {
        let out = cli(&["verify", "wedge", "--left", "suspension:[1]", "--right", "suspension:[1]", "--dim", "4", "--out", p.to_str().unwrap()]);
        assert_eq!(out.code, EXIT_OK);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn tampered_file_fails_replay() {
    let path = scratch("tamper.cert");
    let p = path.to_str().unwrap();
    assert_eq!(cli(&["verify", "suspension", "--base", "[2]", "--dim", "3", "--out", p]).code, EXIT_OK);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    lines.remove(1);
    let header = lines[0].replace(&format!("\"steps\":{}", lines.len()), &format!("\"steps\":{}", lines.len() - 1));
    lines[0] = &header;
    std::fs::write(&path, lines.join("\n") + "\n").unwrap();
    let out = cli(&["replay", p]);
    assert_eq!(out.code, EXIT_FAILED, "{}", out.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["census", "no-such-thing"]).code, EXIT_USAGE);
    assert_eq!(cli(&["verify", "suspension"]).code, EXIT_USAGE);
    assert_eq!(cli(&["verify", "suspension", "--base", "[1]", "--dim", "40"]).code, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).code, EXIT_OK);
    assert_eq!(cli(&["rlp", "--sub", "horn:2,1", "--ambient", "complicial:2,1", "--into", "nerve:[1]"]).code, EXIT_OK);
    // the nonidentity edge of [1] is not thin
    assert_eq!(cli(&["rlp", "--sub", "standard:1", "--ambient", "top:1", "--into", "nerve:[1]"]).code, EXIT_FAILED);
}
