//! Encoded floor and tower constructions, obstructions and case analyses,
//! each with the verdict it is expected to receive.

use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::gog::{EdgeData, GraphOfGroupsWithSurfaces, VertexData};
use crate::homs::{Fill, GroupMap, Target};
use crate::surfaces::{
    enumerate_floor_profiles, enumerate_subsurface_profiles, FloorProfile, Rejection, SurfaceDatum,
};
use crate::towers::{
    verify_floor_seeded, verify_tower_seeded, BaseWitness, FloorCandidate, GroundFloor, Status, TowerCandidate,
    TowerError, VerificationReport, Verdict,
};
use crate::whitehead::{is_basis, whitehead_generators};
use crate::word::{is_genus_one_commutator, CyclicWord, Generator, Word};
use crate::word_problem::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("entry `{name}` failed to build: {source}")]
    Build { name: String, source: TowerError },
}

/// What an entry builds.
#[derive(Debug, Clone)]
pub enum Subject {
    Floor(Box<FloorCandidate>),
    Tower(TowerCandidate),
    /// A word-level or enumeration check, already evaluated.
    Check(VerificationReport),
}

type Builder = Arc<dyn Fn() -> Result<Subject, TowerError> + Send + Sync>;

#[derive(Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub summary: String,
    pub expected: Verdict,
    builder: Builder,
}

impl CatalogEntry {
    fn new<F>(name: impl Into<String>, summary: impl Into<String>, expected: Verdict, f: F) -> Self
    where
        F: Fn() -> Result<Subject, TowerError> + Send + Sync + 'static,
    {
        CatalogEntry { name: name.into(), summary: summary.into(), expected, builder: Arc::new(f) }
    }

    pub fn build(&self) -> Result<Subject, CatalogError> {
        (self.builder)().map_err(|source| CatalogError::Build { name: self.name.clone(), source })
    }

    pub fn run(&self, seed: u64) -> Result<EntryOutcome, CatalogError> {
        let start = Instant::now();
        let wrap = |source| CatalogError::Build { name: self.name.clone(), source };
        let report = match self.build()? {
            Subject::Floor(c) => verify_floor_seeded(&c, seed).map_err(wrap)?,
            Subject::Tower(t) => verify_tower_seeded(&t, seed).map_err(wrap)?,
            Subject::Check(r) => r,
        };
        Ok(EntryOutcome {
            name: self.name.clone(),
            passed: report.verdict == self.expected,
            expected: self.expected.clone(),
            report,
            elapsed: start.elapsed(),
        })
    }
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("name", &self.name)
            .field("expected", &self.expected)
            .finish()
    }
}

#[derive(Debug, Clone)]
pub struct EntryOutcome {
    pub name: String,
    pub expected: Verdict,
    pub report: VerificationReport,
    pub passed: bool,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct Summary {
    pub outcomes: Vec<EntryOutcome>,
    pub errors: Vec<CatalogError>,
}

impl Summary {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.outcomes.len() - self.passed() + self.errors.len()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

pub fn list_entries() -> Vec<CatalogEntry> {
    let mut out = entries();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

pub fn run_entry(name: &str) -> Result<EntryOutcome, CatalogError> {
    run_entry_seeded(name, 0)
}

pub fn run_entry_seeded(name: &str, seed: u64) -> Result<EntryOutcome, CatalogError> {
    list_entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownEntry(name.to_string()))?
        .run(seed)
}

pub fn run_all() -> Summary {
    run_all_seeded(0)
}

/// Runs every entry in parallel on the current rayon pool; outcomes are
/// sorted by entry name.
pub fn run_all_seeded(seed: u64) -> Summary {
    let results: Vec<Result<EntryOutcome, CatalogError>> = list_entries().par_iter().map(|e| e.run(seed)).collect();
    let mut outcomes = Vec::new();
    let mut errors = Vec::new();
    for r in results {
        match r {
            Ok(o) => outcomes.push(o),
            Err(e) => errors.push(e),
        }
    }
    Summary { outcomes, errors }
}

fn w(s: &str) -> Word {
    Word::parse(s).expect("catalog word")
}

fn gen(s: &str) -> Generator {
    Generator::named(s)
}

fn pres(gens: &[&str], rels: &[&str]) -> Presentation {
    Presentation::parse(gens, rels).expect("catalog presentation")
}

fn wrap<T>(r: Result<T, impl Into<TowerError>>) -> Result<T, TowerError> {
    r.map_err(Into::into)
}

/// Closed non-orientable surface of characteristic −2.
pub fn s4_presentation() -> Presentation {
    pres(&["d1", "d2", "d3", "d4"], &["d1 d1 d2 d2 d3 d3 d4 d4"])
}

/// Closed orientable surface of genus 2.
pub fn genus2_presentation() -> Presentation {
    pres(&["a", "b", "ap", "bp"], &["a b a^-1 b^-1 ap bp ap^-1 bp^-1"])
}

/// `⟨z⟩ ∗ S` with `S` of genus 2.
pub fn zs_presentation() -> Presentation {
    pres(&["a", "b", "ap", "bp", "z"], &["a b a^-1 b^-1 ap bp ap^-1 bp^-1"])
}

/// Named groups understood by the command line.
pub fn builtin_group(name: &str) -> Option<Presentation> {
    Some(match name {
        "S4" => s4_presentation(),
        "S" => genus2_presentation(),
        "ZS" => zs_presentation(),
        "F2" => pres(&["a", "b"], &[]),
        "F3" => pres(&["a", "b", "c"], &[]),
        _ => return None,
    })
}

fn plain(id: &str, gens: &[&str], rels: &[&str]) -> VertexData {
    VertexData::plain(id, pres(gens, rels))
}

/// `⟨h, a, b, c | h² = a²b²c²⟩`: a Moebius band around `h` and a punctured
/// connected sum of three projective planes.
pub fn moebius_decomposition() -> Result<GraphOfGroupsWithSurfaces, TowerError> {
    let s = wrap(VertexData::surface("S", SurfaceDatum::nonorientable(3, 1).expect("q = 3"), &["a", "b", "c"]))?;
    wrap(GraphOfGroupsWithSurfaces::new(
        vec![plain("H", &["h"], &[]), s],
        vec![EdgeData::tree("e", ("H", w("h h")), ("S", w("a a b b c c")))],
    ))
}

pub fn moebius_floor() -> Result<FloorCandidate, TowerError> {
    FloorCandidate::new("s4-moebius-floor", moebius_decomposition()?, &[("h", "h"), ("a", "h")], Fill::Trivial)?
        .with_extension("x", &[("h", "h"), ("a", "h"), ("b", "x"), ("c", "x^-1")], Fill::Required)?
        .with_identification(
            s4_presentation(),
            &[("a", "d1"), ("b", "d2"), ("c", "d3"), ("h", "d4^-1")],
            &[("d1", "a"), ("d2", "b"), ("d3", "c"), ("d4", "h^-1")],
        )
}

/// A cylinder around `h` whose complement is a twice-punctured Klein bottle
/// with boundary words `g` and `g⁻¹a²b²`; the stable letter `t` closes the
/// second boundary up.
pub fn klein_decomposition() -> Result<GraphOfGroupsWithSurfaces, TowerError> {
    let s = wrap(VertexData::surface("S", SurfaceDatum::nonorientable(2, 2).expect("q = 2"), &["a", "b", "g"]))?;
    wrap(GraphOfGroupsWithSurfaces::new(
        vec![plain("H", &["h"], &[]), s],
        vec![
            EdgeData::tree("e1", ("H", w("h")), ("S", w("g"))),
            EdgeData::stable("e2", gen("t"), ("H", w("h")), ("S", w("g^-1 a a b b"))),
        ],
    ))
}

fn klein_base(name: &str, extension: &[(&str, &str)]) -> Result<FloorCandidate, TowerError> {
    FloorCandidate::new(name, klein_decomposition()?, &[("h", "h"), ("g", "h"), ("a", "h")], Fill::Trivial)?
        .with_extension("x", extension, Fill::Required)?
        .with_identification(
            s4_presentation(),
            &[("h", "d1 d2"), ("t", "d2^-1"), ("b", "d3^-1"), ("a", "d4^-1")],
            &[("d1", "h t"), ("d2", "t^-1"), ("d3", "b^-1"), ("d4", "a^-1")],
        )
}

pub fn klein_floor() -> Result<FloorCandidate, TowerError> {
    klein_base(
        "s4-klein-floor",
        &[("h", "h"), ("g", "h"), ("a", "h x"), ("b", "x^-1"), ("t", "x")],
    )
}

/// `a, b⁻¹ ↦ x`, `t ↦ 1`: sends `h·tht⁻¹ a⁻²b⁻²` to `h²`, so it is not a
/// homomorphism.
pub fn klein_literal_floor() -> Result<FloorCandidate, TowerError> {
    klein_base(
        "s4-klein-literal-map",
        &[("h", "h"), ("g", "h"), ("a", "x"), ("b", "x^-1"), ("t", "1")],
    )
}

fn s4_tower(name: &str, floor: FloorCandidate) -> TowerCandidate {
    TowerCandidate {
        name: name.into(),
        ambient: s4_presentation(),
        floors: vec![floor],
        witnesses: vec![BaseWitness { vertex: "H".into(), words: vec![w("h")] }],
        ground: GroundFloor { base: vec![gen("h")], ..Default::default() },
    }
}

pub fn s4_trivial_tower() -> TowerCandidate {
    TowerCandidate {
        name: "s4-trivial-tower".into(),
        ambient: s4_presentation(),
        floors: vec![],
        witnesses: vec![],
        ground: GroundFloor {
            surfaces: vec![(
                SurfaceDatum::nonorientable(4, 0).expect("q = 4"),
                ["d1", "d2", "d3", "d4"].map(gen).to_vec(),
            )],
            ..Default::default()
        },
    }
}

/// `H₁ = ⟨a, b, z⟩` with a punctured torus `⟨a′, b′⟩` glued along `[b, a]`.
pub fn lambda1_decomposition() -> Result<GraphOfGroupsWithSurfaces, TowerError> {
    let s = wrap(VertexData::surface("S", SurfaceDatum::punctured_torus(), &["ap", "bp"]))?;
    wrap(GraphOfGroupsWithSurfaces::new(
        vec![plain("H", &["a", "b", "z"], &[]), s],
        vec![EdgeData::tree("e", ("H", w("b a b^-1 a^-1")), ("S", w("ap bp ap^-1 bp^-1")))],
    ))
}

pub fn lambda1_floor() -> Result<FloorCandidate, TowerError> {
    FloorCandidate::new("zs-h1-floor", lambda1_decomposition()?, &[("ap", "b"), ("bp", "a")], Fill::Identity)
}

pub fn lambda1_bad_floor() -> Result<FloorCandidate, TowerError> {
    FloorCandidate::new("zs-bad-retraction", lambda1_decomposition()?, &[("ap", "a"), ("bp", "a")], Fill::Identity)
}

/// `H₂ = ⟨a, w⟩` (with `w` standing for `z a′ z⁻¹`) and a four-punctured
/// sphere `⟨p1, p2, p3⟩`, one tree edge and three edges with stable letters.
pub fn lambda2_decomposition() -> Result<GraphOfGroupsWithSurfaces, TowerError> {
    let s = wrap(VertexData::surface("S", SurfaceDatum::orientable(0, 4), &["p1", "p2", "p3"]))?;
    wrap(GraphOfGroupsWithSurfaces::new(
        vec![plain("H", &["a", "w"], &[]), s],
        vec![
            EdgeData::tree("e1", ("H", w("a")), ("S", w("p1"))),
            EdgeData::stable("e2", gen("t2"), ("H", w("a^-1")), ("S", w("p2"))),
            EdgeData::stable("e3", gen("t3"), ("H", w("w")), ("S", w("p3"))),
            EdgeData::stable("e4", gen("t4"), ("H", w("w^-1")), ("S", w("p3^-1 p2^-1 p1^-1"))),
        ],
    ))
}

pub fn lambda2_floor() -> Result<FloorCandidate, TowerError> {
    FloorCandidate::new(
        "zs-h2-floor",
        lambda2_decomposition()?,
        &[("a", "a"), ("w", "w"), ("p1", "a"), ("p2", "a^-1"), ("p3", "w")],
        Fill::Trivial,
    )?
    .with_identification(
        zs_presentation(),
        &[("w", "z ap z^-1"), ("t2", "b"), ("t3", "z^-1"), ("t4", "bp z^-1")],
        &[("b", "t2"), ("z", "t3^-1"), ("ap", "t3 w t3^-1"), ("bp", "t4 t3^-1")],
    )
}

pub fn zs_trivial_tower() -> TowerCandidate {
    TowerCandidate {
        name: "zs-trivial-tower".into(),
        ambient: zs_presentation(),
        floors: vec![],
        witnesses: vec![],
        ground: GroundFloor {
            base: vec![],
            free: vec![gen("z")],
            surfaces: vec![(SurfaceDatum::orientable(2, 0), ["a", "b", "ap", "bp"].map(gen).to_vec())],
        },
    }
}

pub fn zs_h1_tower() -> Result<TowerCandidate, TowerError> {
    Ok(TowerCandidate {
        name: "zs-h1-tower".into(),
        ambient: zs_presentation(),
        floors: vec![lambda1_floor()?],
        witnesses: vec![BaseWitness { vertex: "H".into(), words: vec![w("a"), w("b"), w("z")] }],
        ground: GroundFloor { base: ["a", "b", "z"].map(gen).to_vec(), ..Default::default() },
    })
}

pub fn zs_h2_tower() -> Result<TowerCandidate, TowerError> {
    Ok(TowerCandidate {
        name: "zs-h2-tower".into(),
        ambient: zs_presentation(),
        floors: vec![lambda2_floor()?],
        witnesses: vec![BaseWitness { vertex: "H".into(), words: vec![w("a"), w("w")] }],
        ground: GroundFloor { base: ["a", "w"].map(gen).to_vec(), ..Default::default() },
    })
}

/// Genus-`g` closed surface over `⟨a1, b1⟩`: the complement of a punctured
/// torus is a genus-`(g−1)` surface with one boundary component, retracted
/// by `a2 ↦ b1`, `b2 ↦ a1` and every other generator to 1.
pub fn p0_orientable(g: u32) -> Result<FloorCandidate, TowerError> {
    let names: Vec<String> = (2..=g).flat_map(|j| [format!("a{j}"), format!("b{j}")]).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let s = wrap(VertexData::surface("S", SurfaceDatum::orientable(g - 1, 1), &refs))?;
    let boundary = (2..=g).fold(Word::identity(), |acc, j| {
        acc.compose(&Word::commutator(&Word::gen(gen(&format!("a{j}"))), &Word::gen(gen(&format!("b{j}")))))
    });
    let dec = wrap(GraphOfGroupsWithSurfaces::new(
        vec![plain("H", &["a1", "b1"], &[]), s],
        vec![EdgeData::tree("e", ("H", w("b1 a1 b1^-1 a1^-1")), ("S", boundary))],
    ))?;
    FloorCandidate::new(
        format!("p0-template-orientable-{g}"),
        dec,
        &[("a1", "a1"), ("b1", "b1"), ("a2", "b1"), ("b2", "a1")],
        Fill::Trivial,
    )
}

/// `N_p` over `⟨d1, d2⟩`: the complement is `N_{p−2}` with one boundary
/// component, retracted by `d3 ↦ d2⁻¹`, `d4 ↦ d1⁻¹`, the rest to 1.
pub fn p0_nonorientable(p: u32) -> Result<FloorCandidate, TowerError> {
    let names: Vec<String> = (3..=p).map(|j| format!("d{j}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let datum = SurfaceDatum::nonorientable(p - 2, 1).map_err(|e| TowerError::Malformed(e.to_string()))?;
    let s = wrap(VertexData::surface("S", datum, &refs))?;
    let boundary = (3..=p).fold(Word::identity(), |acc, j| acc.compose(&Word::gen(gen(&format!("d{j}"))).pow(2)));
    let dec = wrap(GraphOfGroupsWithSurfaces::new(
        vec![plain("H", &["d1", "d2"], &[]), s],
        vec![EdgeData::tree("e", ("H", w("d2^-2 d1^-2")), ("S", boundary))],
    ))?;
    FloorCandidate::new(
        format!("p0-template-nonorientable-{p}"),
        dec,
        &[("d1", "d1"), ("d2", "d2"), ("d3", "d2^-1"), ("d4", "d1^-1")],
        Fill::Trivial,
    )
}

/// `S₄ ∗ S` with `S` of genus 2: the plain vertex is `⟨h⟩ ∗ S` and
/// `a ↦ h`, `b ↦ s1`, `c ↦ s1⁻¹`.
pub fn p0_free_product_variant() -> Result<FloorCandidate, TowerError> {
    let s = wrap(VertexData::surface("S", SurfaceDatum::nonorientable(3, 1).expect("q = 3"), &["a", "b", "c"]))?;
    let dec = wrap(GraphOfGroupsWithSurfaces::new(
        vec![plain("P", &["h", "s1", "s2", "s3", "s4"], &["s1 s2 s1^-1 s2^-1 s3 s4 s3^-1 s4^-1"]), s],
        vec![EdgeData::tree("e", ("P", w("h h")), ("S", w("a a b b c c")))],
    ))?;
    FloorCandidate::new(
        "p0-free-product-variant",
        dec,
        &[("a", "h"), ("b", "s1"), ("c", "s1^-1")],
        Fill::Identity,
    )
}

/// `⟨α0, β0⟩` with a punctured torus `⟨α1, β1⟩` glued along `[α0, β0]`.
pub fn s2_floor() -> Result<FloorCandidate, TowerError> {
    let s = wrap(VertexData::surface("S", SurfaceDatum::punctured_torus(), &["al1", "be1"]))?;
    let dec = wrap(GraphOfGroupsWithSurfaces::new(
        vec![plain("U", &["al0", "be0"], &[]), s],
        vec![EdgeData::tree("e", ("U", w("al0 be0 al0^-1 be0^-1")), ("S", w("al1 be1 al1^-1 be1^-1")))],
    ))?;
    FloorCandidate::new("s2-punctured-torus-floor", dec, &[("al1", "al0"), ("be1", "be0")], Fill::Identity)
}

fn certified(report: &mut VerificationReport) {
    report.verdict = if report.checks.iter().all(|c| c.status == Status::Pass) {
        Verdict::Certified
    } else {
        Verdict::Rejected
    };
}

/// No retraction of `⟨a, b, d1, d2 | [a,b] = d1²d2²⟩` onto `⟨d1, d2⟩`: it
/// would make `d1²d2²` a commutator in a free group.
pub fn punctured_klein_obstruction() -> VerificationReport {
    let mut report = VerificationReport::new("s4-punctured-klein-obstruction");
    let target = w("d1 d1 d2 d2");
    let witness = is_genus_one_commutator(&target);
    report.check(
        "not-a-commutator",
        witness.is_none(),
        match &witness {
            None => format!("{target} has no Wicks form A B C A^-1 B^-1 C^-1"),
            Some(wit) => format!("{target} = [{}, {}] up to conjugacy", wit.commutator_pair().0, wit.commutator_pair().1),
        },
    );
    let source = pres(&["a", "b", "d1", "d2"], &["a b a^-1 b^-1 d2^-2 d1^-2"]);
    let naive = GroupMap::parse(
        source,
        Target::new(pres(&["d1", "d2"], &[])),
        &[("a", "d1"), ("b", "d2")],
        Fill::Identity,
    )
    .and_then(|m| m.verify_homomorphism());
    report.check(
        "sample-map-fails",
        naive == Ok(false),
        "a -> d1, b -> d2 does not respect the relator",
    );
    certified(&mut report);
    report
}

/// Profile families of `N₄` with four or fewer pieces.
pub fn check_n4_profiles(profiles: &[FloorProfile]) -> VerificationReport {
    let mut report = VerificationReport::new("s4-profiles");
    let pt = SurfaceDatum::punctured_torus();
    let mut counts = [0usize; 4];
    let mut stray = Vec::new();
    for p in profiles {
        let s = &p.surface_pieces;
        let c = &p.complement_pieces;
        if s == &[pt, pt] && c == &[SurfaceDatum::cylinder()] && p.rejection == Some(Rejection::OrientableTreeGluing) {
            counts[0] += 1;
        } else if s == &[pt] && c == &[pt] && p.rejection == Some(Rejection::OrientableTreeGluing) {
            counts[1] += 1;
        } else if s == &[pt]
            && c.len() == 1
            && c[0] == SurfaceDatum::nonorientable(2, 1).expect("q = 2")
            && matches!(p.rejection, Some(Rejection::CommutatorObstruction { .. }))
        {
            counts[2] += 1;
        } else if s.len() == 1
            && s[0].euler_char() == -2
            && c.iter().all(|x| x.euler_char() == 0)
            && p.rejection.is_none()
        {
            counts[3] += 1;
        } else {
            stray.push(p.to_string());
        }
    }
    report.check("two-punctured-tori", counts[0] == 1, format!("{} profile(s), rejected by orientability", counts[0]));
    report.check(
        "punctured-torus-orientable-complement",
        counts[1] == 1,
        format!("{} profile(s), rejected by orientability", counts[1]),
    );
    report.check(
        "punctured-torus-klein-complement",
        counts[2] == 1,
        format!("{} profile(s), rejected by the commutator obstruction", counts[2]),
    );
    report.check(
        "connected-chi-minus-two",
        counts[3] > 0,
        format!("{} profile(s) with cylinder/Moebius complements", counts[3]),
    );
    report.check(
        "no-other-profiles",
        stray.is_empty(),
        if stray.is_empty() { "none".to_string() } else { stray.join("; ") },
    );
    certified(&mut report);
    report
}

pub fn n4_profiles_report() -> VerificationReport {
    let n4 = SurfaceDatum::nonorientable(4, 0).expect("q = 4");
    match enumerate_floor_profiles(n4, 4) {
        Ok(p) => check_n4_profiles(&p),
        Err(e) => {
            let mut r = VerificationReport::new("s4-profiles");
            r.check("enumerate", false, e.to_string());
            r
        }
    }
}

/// Proper subsurfaces of the punctured torus and of the four-punctured
/// sphere contain no floor-admissible piece.
pub fn zs_profiles_report() -> VerificationReport {
    let mut report = VerificationReport::new("zs-profiles");
    let allowed = [SurfaceDatum::orientable(0, 3), SurfaceDatum::cylinder()];
    for (label, ambient) in [
        ("punctured-torus", SurfaceDatum::punctured_torus()),
        ("four-punctured-sphere", SurfaceDatum::orientable(0, 4)),
    ] {
        match enumerate_subsurface_profiles(ambient, 4) {
            Ok(profiles) => {
                let bad: Vec<String> = profiles
                    .iter()
                    .filter(|p| p.has_admissible_piece() || !p.pieces.iter().all(|x| allowed.contains(x)))
                    .map(|p| p.to_string())
                    .collect();
                report.check(
                    label,
                    !profiles.is_empty() && bad.is_empty(),
                    if bad.is_empty() {
                        format!("{} profiles, only thrice-punctured spheres and cylinders", profiles.len())
                    } else {
                        bad.join("; ")
                    },
                );
            }
            Err(e) => {
                report.check(label, false, e.to_string());
            }
        }
    }
    certified(&mut report);
    report
}

pub fn genus2_profiles_report() -> VerificationReport {
    let mut report = VerificationReport::new("genus2-profiles");
    let profiles = enumerate_floor_profiles(SurfaceDatum::orientable(2, 0), 4).unwrap_or_default();
    let pt = SurfaceDatum::punctured_torus();
    report.check(
        "punctured-torus-pair",
        profiles.iter().any(|p| p.surface_pieces == [pt] && p.complement_pieces == [pt] && p.rejection.is_none()),
        "{punctured torus} | {punctured torus}",
    );
    report.check(
        "chi-minus-two-over-cylinder",
        profiles.iter().any(|p| {
            p.surface_pieces.len() == 1
                && p.surface_pieces[0].euler_char() == -2
                && p.complement_pieces == [SurfaceDatum::cylinder()]
        }),
        "{chi = -2 piece} | {cylinder}",
    );
    report.check(
        "orientable-only",
        profiles
            .iter()
            .flat_map(|p| p.surface_pieces.iter().chain(&p.complement_pieces))
            .all(SurfaceDatum::is_orientable),
        "no Moebius band or other non-orientable piece",
    );
    let sphere = enumerate_floor_profiles(SurfaceDatum::sphere(), 4).unwrap_or_default();
    report.check("sphere-empty", sphere.is_empty(), "the sphere has no profiles");
    certified(&mut report);
    report
}

/// In `F₂` the commutators of all bases are conjugate to `[a, b]^{±1}`;
/// checked on the bases reached from `(a, b)` by two Whitehead moves.
pub fn basis_commutators_report() -> VerificationReport {
    let mut report = VerificationReport::new("s2-basis-commutators");
    let basis = [gen("a"), gen("b")];
    let ab = CyclicWord::new(&Word::commutator(&w("a"), &w("b")));
    let autos = whitehead_generators(2);
    let mut tuples = 0;
    let mut bad = Vec::new();
    for f in &autos {
        for g in &autos {
            let pair: Vec<Word> = [w("a"), w("b")].iter().map(|x| g.apply(&basis, &f.apply(&basis, x))).collect();
            if !is_basis(&pair, &basis) {
                bad.push(format!("({}, {}) is not a basis", pair[0], pair[1]));
                continue;
            }
            tuples += 1;
            let c = CyclicWord::new(&Word::commutator(&pair[0], &pair[1]));
            if !c.same_up_to_inverse(&ab) {
                bad.push(format!("[{}, {}] is not conjugate to [a, b]^(+-1)", pair[0], pair[1]));
            }
        }
    }
    report.check(
        "basis-commutators-conjugate",
        bad.is_empty(),
        if bad.is_empty() { format!("{tuples} bases checked") } else { bad.join("; ") },
    );
    let non_basis = [w("a"), w("b b")];
    let c = CyclicWord::new(&Word::commutator(&non_basis[0], &non_basis[1]));
    report.check(
        "non-basis-differs",
        !is_basis(&non_basis, &basis) && !c.same_up_to_inverse(&ab),
        "(a, b^2) is not a basis and [a, b^2] is not conjugate to [a, b]",
    );
    certified(&mut report);
    report
}

fn entries() -> Vec<CatalogEntry> {
    let ext_tower = Verdict::Tower { floors: 1, base_rank: 1, extended: true };
    let mut v = vec![
        CatalogEntry::new(
            "s4-moebius-floor",
            "N4 split along a Moebius band: extended floor over <h>",
            Verdict::ExtendedHyperbolicFloor,
            || Ok(Subject::Floor(Box::new(moebius_floor()?))),
        ),
        CatalogEntry::new(
            "s4-klein-floor",
            "N4 split along a cylinder: extended floor over <h>",
            Verdict::ExtendedHyperbolicFloor,
            || Ok(Subject::Floor(Box::new(klein_floor()?))),
        ),
        CatalogEntry::new(
            "s4-klein-literal-map",
            "a, b^-1 -> x, t -> 1 is not a homomorphism",
            Verdict::Rejected,
            || Ok(Subject::Floor(Box::new(klein_literal_floor()?))),
        ),
        CatalogEntry::new(
            "s4-punctured-klein-obstruction",
            "d1^2 d2^2 is not a commutator, so the punctured Klein bottle complement admits no retraction",
            Verdict::Certified,
            || Ok(Subject::Check(punctured_klein_obstruction())),
        ),
        CatalogEntry::new(
            "s4-profiles",
            "cuts of N4 into floor pieces",
            Verdict::Certified,
            || Ok(Subject::Check(n4_profiles_report())),
        ),
        CatalogEntry::new(
            "s4-moebius-tower",
            "extended tower over <h> through the Moebius floor",
            ext_tower.clone(),
            || Ok(Subject::Tower(s4_tower("s4-moebius-tower", moebius_floor()?))),
        ),
        CatalogEntry::new(
            "s4-klein-tower",
            "extended tower over <h> through the cylinder floor",
            ext_tower,
            || Ok(Subject::Tower(s4_tower("s4-klein-tower", klein_floor()?))),
        ),
        CatalogEntry::new(
            "s4-trivial-tower",
            "N4 is its own ground floor",
            Verdict::Tower { floors: 0, base_rank: 0, extended: false },
            || Ok(Subject::Tower(s4_trivial_tower())),
        ),
        CatalogEntry::new(
            "zs-trivial-tower",
            "<z> * S with no floors",
            Verdict::Tower { floors: 0, base_rank: 0, extended: false },
            || Ok(Subject::Tower(zs_trivial_tower())),
        ),
        CatalogEntry::new(
            "zs-h1-tower",
            "one floor over <a, b, z> with a punctured torus",
            Verdict::Tower { floors: 1, base_rank: 3, extended: false },
            || Ok(Subject::Tower(zs_h1_tower()?)),
        ),
        CatalogEntry::new(
            "zs-h2-tower",
            "one floor over <a, z a' z^-1> with a four-punctured sphere",
            Verdict::Tower { floors: 1, base_rank: 2, extended: false },
            || Ok(Subject::Tower(zs_h2_tower()?)),
        ),
        CatalogEntry::new(
            "zs-bad-retraction",
            "a', b' -> a sends the relator to [a, b]",
            Verdict::Rejected,
            || Ok(Subject::Floor(Box::new(lambda1_bad_floor()?))),
        ),
        CatalogEntry::new(
            "zs-profiles",
            "proper subsurfaces of the floor surfaces are not admissible",
            Verdict::Certified,
            || Ok(Subject::Check(zs_profiles_report())),
        ),
        CatalogEntry::new(
            "genus2-profiles",
            "cuts of the genus-2 surface into floor pieces",
            Verdict::Certified,
            || Ok(Subject::Check(genus2_profiles_report())),
        ),
        CatalogEntry::new(
            "p0-free-product-variant",
            "N4 * S over <h> * S: a -> h, b -> s1, c -> s1^-1",
            Verdict::HyperbolicFloor,
            || Ok(Subject::Floor(Box::new(p0_free_product_variant()?))),
        ),
        CatalogEntry::new(
            "s2-punctured-torus-floor",
            "genus 2 over <al0, be0> with a punctured torus",
            Verdict::HyperbolicFloor,
            || Ok(Subject::Floor(Box::new(s2_floor()?))),
        ),
        CatalogEntry::new(
            "s2-basis-commutators",
            "commutators of bases of F2 are conjugate",
            Verdict::Certified,
            || Ok(Subject::Check(basis_commutators_report())),
        ),
    ];
    for g in 2..=4 {
        v.push(CatalogEntry::new(
            format!("p0-template-orientable-{g}"),
            format!("genus {g} over <a1, b1>"),
            Verdict::HyperbolicFloor,
            move || Ok(Subject::Floor(Box::new(p0_orientable(g)?))),
        ));
    }
    for p in 4..=8 {
        let (expected, summary) = if p == 4 {
            (Verdict::Rejected, "N4 over <d1, d2>: the complement is a once-punctured Klein bottle".to_string())
        } else {
            (Verdict::HyperbolicFloor, format!("N{p} over <d1, d2>"))
        };
        v.push(CatalogEntry::new(
            format!("p0-template-nonorientable-{p}"),
            summary,
            expected,
            move || Ok(Subject::Floor(Box::new(p0_nonorientable(p)?))),
        ));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_sorted() {
        let names: Vec<String> = list_entries().into_iter().map(|e| e.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(names, sorted);
    }

    #[test]
    fn unknown_entry() {
        assert!(matches!(run_entry("nope"), Err(CatalogError::UnknownEntry(_))));
    }

    #[test]
    fn every_entry_matches_expectation() {
        let summary = run_all();
        if let Some(e) = summary.errors.first() {
            panic!("{e}");
        }
        for o in &summary.outcomes {
            assert!(o.passed, "{}: expected {}, got\n{}", o.name, o.expected, o.report);
        }
    }

    #[test]
    fn p0_four_fails_at_admissibility() {
        let o = run_entry("p0-template-nonorientable-4").unwrap();
        assert_eq!(o.report.status("admissibility"), Some(Status::Fail));
    }

    #[test]
    fn klein_literal_map_fails_homomorphism() {
        let o = run_entry("s4-klein-literal-map").unwrap();
        assert_eq!(o.report.status("extended:homomorphism"), Some(Status::Fail), "{}", o.report);
    }
}
