//! Acceptance suite: one pass/fail line per criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{commutator_classes, cyclically_reduced_words, gens, reduced_words, relator_bfs};
use tower_core::catalog::{self, Subject};
use tower_core::surfaces::{
    connected_sum, enumerate_subsurface_profiles, euler_from_presentation_data, is_floor_admissible, puncture,
    SurfaceDatum,
};
use tower_core::towers::{sample_retraction, verify_floor, FloorCandidate, Verdict};
use tower_core::whitehead::{is_primitive, orbit_min_length};
use tower_core::word::{is_genus_one_commutator, CyclicWord, Word};
use tower_core::word_problem::{GroupModel, Presentation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let out = match out {
        Ok(msg) if elapsed > limit => Err(format!("{msg}, but took {elapsed:?} (limit {limit:?})")),
        other => other,
    };
    (out, elapsed)
}

fn conformance_matrix() -> Outcome {
    let summary = catalog::run_all();
    if let Some(e) = summary.errors.first() {
        return Err(e.to_string());
    }
    let failed: Vec<String> = summary
        .outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| format!("{} (expected {}, got {})", o.name, o.expected, o.report.verdict))
        .collect();
    if !failed.is_empty() {
        return Err(failed.join("; "));
    }
    let required = [
        "s4-moebius-floor",
        "s4-klein-floor",
        "s4-punctured-klein-obstruction",
        "zs-trivial-tower",
        "zs-h1-tower",
        "zs-h2-tower",
        "p0-template-orientable-2",
        "p0-template-orientable-3",
        "p0-template-orientable-4",
        "p0-template-nonorientable-4",
        "p0-template-nonorientable-5",
        "p0-template-nonorientable-6",
        "p0-template-nonorientable-7",
        "p0-template-nonorientable-8",
        "p0-free-product-variant",
    ];
    for name in required {
        if !summary.outcomes.iter().any(|o| o.name == name) {
            return Err(format!("entry {name} missing"));
        }
    }
    Ok(format!("{}/{} entries match", summary.passed(), summary.outcomes.len()))
}

fn maximality_shadow() -> Outcome {
    let allowed = [SurfaceDatum::orientable(0, 3), SurfaceDatum::cylinder()];
    let mut total = 0;
    for ambient in [SurfaceDatum::punctured_torus(), SurfaceDatum::orientable(0, 4)] {
        let profiles = enumerate_subsurface_profiles(ambient, 4).map_err(|e| e.to_string())?;
        if profiles.is_empty() {
            return Err(format!("no proper subsurfaces found for {ambient}"));
        }
        for p in &profiles {
            if p.pieces.iter().any(|s| is_floor_admissible(*s).unwrap_or(true) || !allowed.contains(s)) {
                return Err(format!("{ambient}: {p}"));
            }
        }
        total += profiles.len();
    }
    Ok(format!("{total} profiles, all thrice-punctured spheres and cylinders"))
}

fn n4_case_analysis() -> Outcome {
    let report = catalog::n4_profiles_report();
    if report.verdict == Verdict::Certified {
        let details: Vec<String> = report.checks.iter().map(|c| c.detail.clone()).collect();
        Ok(details[..4].join(", "))
    } else {
        Err(report.to_string())
    }
}

fn dehn_oracle() -> Outcome {
    let cases = [
        (vec!["d1", "d2", "d3", "d4"], "d1 d1 d2 d2 d3 d3 d4 d4"),
        (vec!["a1", "a2", "a3", "a4"], "a1 a2 a1^-1 a2^-1 a3 a4 a3^-1 a4^-1"),
    ];
    let mut summary = Vec::new();
    for (names, rel) in cases {
        let p = Presentation::parse(&names, &[rel]).map_err(|e| e.to_string())?;
        let model = GroupModel::from_presentation(&p).map_err(|e| e.to_string())?;
        let relator = Word::parse(rel).expect("relator");
        let trivial = relator_bfs(&relator, 16);
        for w in &trivial {
            if !model.is_trivial(w).map_err(|e| e.to_string())? {
                return Err(format!("{w} is a relator consequence but Dehn says nontrivial"));
            }
        }
        let words = reduced_words(&gens(&names), 6);
        let mut hits = 0;
        for w in &words {
            let dehn = model.is_trivial(w).map_err(|e| e.to_string())?;
            if dehn != trivial.contains(w) {
                return Err(format!("{w}: Dehn {dehn}, oracle {}", !dehn));
            }
            hits += dehn as usize;
        }
        summary.push(format!("{rel}: {} words, {hits} trivial, oracle set {}", words.len(), trivial.len()));
    }
    Ok(summary.join("; "))
}

fn wicks_oracle() -> Outcome {
    let g = gens(&["a", "b"]);
    let classes = commutator_classes(&g, 4);
    let words = cyclically_reduced_words(&g, 6);
    let mut commutators = 0;
    for w in &words {
        let witness = is_genus_one_commutator(w);
        let oracle = classes.contains(&CyclicWord::new(w).canonical());
        if witness.is_some() != oracle {
            return Err(format!("{w}: Wicks {}, oracle {oracle}", witness.is_some()));
        }
        if let Some(wit) = witness {
            let (x, y) = wit.commutator_pair();
            if Word::commutator(&x, &y) != *w {
                return Err(format!("witness for {w} does not reconstruct it"));
            }
            commutators += 1;
        }
    }
    Ok(format!("{} words, {commutators} commutators", words.len()))
}

fn whitehead_oracle() -> Outcome {
    let g = gens(&["a", "b"]);
    let words = cyclically_reduced_words(&g, 5);
    let mut primitive = 0;
    for w in &words {
        let fast = is_primitive(w, &g);
        let slow = orbit_min_length(w, &g, 8) == 1;
        if fast != slow {
            return Err(format!("{w}: minimize {fast}, orbit search {slow}"));
        }
        primitive += fast as usize;
    }
    Ok(format!("{} words, {primitive} primitive", words.len()))
}

fn euler_arithmetic() -> Outcome {
    let p2 = SurfaceDatum::projective_plane();
    let mut sum = p2;
    for n in 1..=8i64 {
        if n > 1 {
            sum = connected_sum(sum, p2);
        }
        if sum.euler_char() != 2 - n || sum.is_orientable() {
            return Err(format!("{n} projective planes gave {sum}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let orientable = rng.gen_bool(0.5);
        let k: u32 = if orientable { rng.gen_range(0..6) } else { rng.gen_range(1..10) };
        let r: u32 = rng.gen_range(0..6);
        let formula = euler_from_presentation_data(orientable, k, r).map_err(|e| e.to_string())?;
        let mut s = if orientable {
            (0..k).fold(SurfaceDatum::sphere(), |acc, _| connected_sum(acc, SurfaceDatum::torus()))
        } else {
            (1..k).fold(p2, |acc, _| connected_sum(acc, p2))
        };
        for _ in 0..r {
            s = puncture(s);
        }
        if s.euler_char() != formula || s.boundary_count() != r || s.is_orientable() != orientable {
            return Err(format!("({orientable}, {k}, {r}): formula {formula}, composition {s}"));
        }
    }
    Ok("8 connected sums and 50 random data agree".into())
}

fn accepted_floors() -> Result<Vec<FloorCandidate>, String> {
    let mut floors = Vec::new();
    for entry in catalog::list_entries() {
        match entry.build().map_err(|e| e.to_string())? {
            Subject::Floor(f) => floors.push(*f),
            Subject::Tower(t) => floors.extend(t.floors),
            Subject::Check(_) => {}
        }
    }
    let mut accepted = Vec::new();
    for f in floors {
        if verify_floor(&f).map_err(|e| e.to_string())?.accepted() {
            accepted.push(f);
        }
    }
    Ok(accepted)
}

fn retraction_soundness() -> Outcome {
    let floors = accepted_floors()?;
    for (i, f) in floors.iter().enumerate() {
        let verdict = verify_floor(f).map_err(|e| e.to_string())?.verdict;
        let (r, inclusion) = match (&verdict, &f.extension) {
            (Verdict::ExtendedHyperbolicFloor, Some(ext)) => (
                ext.retraction.clone(),
                f.inclusion.adjoin_free_letter(ext.letter).map_err(|e| e.to_string())?,
            ),
            _ => (f.retraction.clone(), f.inclusion.clone()),
        };
        let seed = 1000 + i as u64;
        if let Some(w) = sample_retraction(&r, &inclusion, 100, 10, seed).map_err(|e| e.to_string())? {
            return Err(format!("{}: r(i({w})) != {w}", f.name));
        }
    }
    Ok(format!("{} accepted floors, 100 words each", floors.len()))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("1 catalog conformance matrix", Duration::from_secs(5), conformance_matrix),
        ("2 maximality shadow", Duration::from_secs(1), maximality_shadow),
        ("3 N4 case analysis", Duration::from_secs(1), n4_case_analysis),
        ("4 Dehn vs relator BFS", Duration::from_secs(60), dehn_oracle),
        ("5 Wicks vs commutator search", Duration::from_secs(30), wicks_oracle),
        ("6 Whitehead vs orbit search", Duration::from_secs(60), whitehead_oracle),
        ("7 Euler arithmetic", Duration::from_secs(5), euler_arithmetic),
        ("8 retraction soundness", Duration::from_secs(30), retraction_soundness),
    ];
    let mut failed = 0;
    for (name, limit, f) in criteria {
        let (outcome, elapsed) = timed(limit, f);
        match outcome {
            Ok(msg) => println!("PASS criterion {name} [{elapsed:.2?}]: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name} [{elapsed:.2?}]: {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
