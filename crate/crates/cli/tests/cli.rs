use std::path::PathBuf;
use std::process::Command;

use proptest::prelude::*;
use tower_cli::document::*;
use tower_cli::{parse, parse_any, parse_json, run_args};
use tower_core::Word;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["towercheck"];
    full.extend_from_slice(args);
    let code = run_args(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn verify_floor_s4() {
    let path = fixture("s4.tower");
    let (code, out, _) = run(&["verify-floor", "--in", path.to_str().unwrap(), "--name", "s4-moebius-floor"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("s4-moebius-floor: extended hyperbolic floor"), "{out}");
}

#[test]
fn verify_towers_from_documents() {
    for file in ["s4.tower", "zs.tower"] {
        let path = fixture(file);
        let (code, out, err) = run(&["--in", path.to_str().unwrap(), "verify-tower"]);
        assert_eq!(code, 0, "{out}{err}");
        assert!(out.contains("tower over"));
    }
}

#[test]
fn failed_verification_exits_one() {
    let path = fixture("zs.tower");
    let (code, out, _) = run(&["verify-floor", "--in", path.to_str().unwrap(), "--name", "zs-bad-retraction"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("zs-bad-retraction: rejected"));
}

#[test]
fn word_commands() {
    assert_eq!(run(&["word", "is-trivial", "--group", "S4", "d1 d1 d2 d2 d3 d3 d4 d4"]).1.trim(), "true");
    assert_eq!(run(&["word", "is-trivial", "--group", "S4", "d1 d2"]).1.trim(), "false");
    assert_eq!(run(&["word", "reduce", "a b b^-1 c"]).1.trim(), "a c");
    assert_eq!(run(&["word", "equal", "--group", "F2", "a b a^-1", "a b a^-1"]).1.trim(), "true");
    assert_eq!(run(&["word", "commutator-test", "d1 d1 d2 d2"]).1.trim(), "not a commutator");
    assert!(run(&["word", "commutator-test", "a b a^-1 b^-1"]).1.starts_with("commutator"));
}

#[test]
fn surface_commands() {
    let (code, out, _) = run(&["classify", "N4", "O1:1", "surface(orientable, chi=-2, boundary=2)"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].contains("floor-admissible") && !lines[1].contains("not floor-admissible"));
    assert_eq!(run(&["presentation", "chi", "nonorientable", "4", "0"]).1.trim(), "-2");
    assert_eq!(run(&["presentation", "chi", "orientable", "2", "1"]).1.trim(), "-3");
    let (_, out, _) = run(&["presentation", "standard", "N4"]);
    assert!(out.contains("d1 d1 d2 d2 d3 d3 d4 d4"), "{out}");
    let (code, out, _) = run(&["profiles", "N4"]);
    assert_eq!(code, 0);
    assert!(out.contains("profiles"));
}

#[test]
fn whitehead_commands() {
    assert_eq!(run(&["whitehead", "is-primitive", "a a b"]).1.trim(), "true");
    assert_eq!(run(&["whitehead", "is-primitive", "a b a^-1 b^-1"]).1.trim(), "false");
    assert_eq!(run(&["whitehead", "is-basis", "a b", "b"]).1.trim(), "true");
    assert_eq!(run(&["whitehead", "is-basis", "a", "b a b a^-1 b^-1"]).1.trim(), "false");
    let (_, out, _) = run(&["whitehead", "minimize", "a b a b^-1 a^-1"]);
    assert!(out.starts_with("(a) total length 1"), "{out}");
}

#[test]
fn catalog_run_all() {
    let (code, out, _) = run(&["catalog", "run", "--all", "--jobs", "2", "--seed", "9"]);
    assert_eq!(code, 0, "{out}");
    let last = out.lines().last().unwrap();
    let n = tower_core::catalog::list_entries().len();
    assert_eq!(last, format!("{n}/{n} entries passed"));
    let names: Vec<&str> = out.lines().filter(|l| l.starts_with("ok")).map(|l| l.split_whitespace().nth(1).unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn records_are_json_lines() {
    let path = fixture("s4.tower");
    let (code, out, _) = run(&["--format", "records", "--in", path.to_str().unwrap(), "verify-floor"]);
    assert_eq!(code, 0);
    let mut checks = 0;
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        if v.get("clause").is_some() {
            checks += 1;
            assert!(["pass", "fail", "skipped"].contains(&v["status"].as_str().unwrap()));
        } else {
            assert_eq!(v["accepted"], serde_json::Value::Bool(true));
        }
    }
    assert!(checks > 10);
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = std::env::temp_dir().join(format!("towercheck-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.tower");
    std::fs::write(&bad, "presentation P {\n  generators = [a, b]\n  relators = [\"a b\" \"b\"]\n}\n").unwrap();
    let (code, _, err) = run(&["--in", bad.to_str().unwrap(), "verify-floor"]);
    assert_eq!(code, 2);
    assert!(err.contains("3:"), "{err}");
    let dangling = dir.join("dangling.tower");
    std::fs::write(&dangling, "\n\nfloor f { decomposition = nowhere, retraction = r }\n").unwrap();
    let (code, _, err) = run(&["--in", dangling.to_str().unwrap(), "verify-floor"]);
    assert_eq!(code, 2);
    assert!(err.contains("3:1") && err.contains("unknown decomposition"), "{err}");
    assert_eq!(run(&["word", "reduce", "a^x"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn binary_exit_statuses() {
    let bin = env!("CARGO_BIN_EXE_towercheck");
    let s4 = fixture("s4.tower");
    let zs = fixture("zs.tower");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["--in", s4.to_str().unwrap(), "verify-floor"]), Some(0));
    assert_eq!(status(&["--in", zs.to_str().unwrap(), "verify-floor"]), Some(1));
    assert_eq!(status(&["--in", "/nonexistent/file", "verify-floor"]), Some(2));
    let out = Command::new(bin).args(["word", "is-trivial", "--group", "S4", "d1 d1 d2 d2 d3 d3 d4 d4"]).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "true");
}

#[test]
fn fixtures_round_trip() {
    for file in ["s4.tower", "zs.tower"] {
        let doc = parse(&std::fs::read_to_string(fixture(file)).unwrap()).unwrap();
        let printed = doc.to_string();
        assert_eq!(parse(&printed).unwrap(), doc, "{printed}");
        let json = serde_json::to_string_pretty(&doc).unwrap();
        assert_eq!(parse_json(&json).unwrap(), doc);
        assert_eq!(parse_any(&json).unwrap(), doc);
    }
}

const NAMES: &[&str] = &["a", "b", "c", "h", "x1", "t"];

fn name() -> impl Strategy<Value = String> {
    prop::sample::select(NAMES).prop_map(str::to_string)
}

fn decl_name() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_-]{0,6}|\"[A-Za-z ]{1,5}\"".prop_map(|s| s.trim_matches('"').to_string())
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((name(), -2i64..=2), 0..5).prop_map(|parts| {
        let text: Vec<String> = parts.into_iter().filter(|(_, e)| *e != 0).map(|(n, e)| format!("{n}^{e}")).collect();
        Word::parse(&text.join(" ")).unwrap()
    })
}

fn surface() -> impl Strategy<Value = tower_core::SurfaceDatum> {
    (any::<bool>(), 0u32..4, 0u32..3).prop_map(|(o, k, b)| {
        if o {
            tower_core::SurfaceDatum::orientable(k, b)
        } else {
            tower_core::SurfaceDatum::nonorientable(k + 1, b).unwrap()
        }
    })
}

fn document() -> impl Strategy<Value = InputDocument> {
    let presentations = prop::collection::vec(
        (decl_name(), prop::collection::vec(name(), 0..4), prop::collection::vec(word(), 0..3)),
        0..3,
    );
    let surfaces = prop::collection::vec((decl_name(), surface()), 0..3);
    let maps = prop::collection::vec((decl_name(), prop::collection::vec((name(), word()), 0..4)), 1..3);
    let vertices = prop::collection::vec((name(), prop::collection::vec(name(), 1..3), prop::option::of(surface())), 1..3);
    let edges = prop::collection::vec((word(), word(), any::<bool>()), 0..3);
    (presentations, surfaces, maps, vertices, edges, any::<bool>()).prop_map(|(ps, ss, ms, vs, es, with_floor)| {
        let mut doc = InputDocument::default();
        for (n, g, r) in ps {
            if doc.presentation(&n).is_none() {
                doc.presentations.push(PresentationDecl { name: n, generators: g, relators: r });
            }
        }
        for (n, d) in ss {
            if doc.surface(&n).is_none() {
                doc.surfaces.push(SurfaceDecl { name: n, datum: d });
            }
        }
        for (n, pairs) in ms {
            if doc.map(&n).is_none() {
                let mut images: Vec<(String, Word)> = Vec::new();
                for (g, w) in pairs {
                    if !images.iter().any(|(h, _)| *h == g) {
                        images.push((g, w));
                    }
                }
                doc.maps.push(MapDecl { name: n, images });
            }
        }
        let mut vertices: Vec<VertexDecl> = Vec::new();
        for (id, generators, surface) in vs {
            if !vertices.iter().any(|v| v.id == id) {
                vertices.push(VertexDecl { id, generators, relators: vec![], surface });
            }
        }
        let edges = es
            .into_iter()
            .enumerate()
            .map(|(i, (u, v, tree))| EdgeDecl {
                id: format!("e{i}"),
                embeddings: [(vertices[0].id.clone(), u), (vertices[vertices.len() - 1].id.clone(), v)],
                tree,
                stable_letter: (!tree).then(|| format!("s{i}")),
            })
            .collect();
        doc.decompositions.push(DecompositionDecl { name: "dec".into(), vertices, edges });
        if with_floor {
            let m = doc.maps[0].name.clone();
            doc.floors.push(FloorDecl {
                name: "fl".into(),
                decomposition: "dec".into(),
                retraction: m.clone(),
                fill: FillMode::Trivial,
                inclusion: None,
                extension: Some(ExtensionDecl { letter: "x".into(), map: m, fill: FillMode::Required }),
                identification: None,
            });
        }
        doc
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(doc in document()) {
        let printed = doc.to_string();
        let back = parse(&printed);
        prop_assert!(back.is_ok(), "{:?}\n{}", back, printed);
        prop_assert_eq!(back.unwrap(), doc);
    }
}
