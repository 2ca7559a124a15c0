//! Verification of (extended) hyperbolic floors and towers.
//!
//! Candidates carry all witness data: the decomposition, the retraction and
//! inclusion maps, optional extension data, and for towers the base
//! subgroup witnesses and the ground-floor splitting. Nothing is searched
//! for; every claim is checked.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::gog::{
    induced_presentation, plain_vertex_free_product, plain_vertex_presentation, validate_structure, GogError,
    GraphOfGroupsWithSurfaces, WELL_FORMED_CHECKS,
};
use crate::homs::{nonabelian_image, retraction_failures, Fill, GroupMap, HomError, Target};
use crate::surfaces::{is_floor_admissible, standard_presentation, SurfaceDatum};
use crate::word::{CyclicWord, Generator, Word};
use crate::word_problem::{GroupModel, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    #[error("malformed candidate: {0}")]
    Malformed(String),
    #[error(transparent)]
    Gog(#[from] GogError),
    #[error(transparent)]
    Hom(#[from] HomError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub clause: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    HyperbolicFloor,
    ExtendedHyperbolicFloor,
    Tower { floors: usize, base_rank: usize, extended: bool },
    /// A word-level or enumeration claim holds.
    Certified,
    Rejected,
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        !matches!(self, Verdict::Rejected)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::HyperbolicFloor => f.write_str("hyperbolic floor"),
            Verdict::ExtendedHyperbolicFloor => f.write_str("extended hyperbolic floor"),
            Verdict::Tower { floors, base_rank, extended } => {
                let kind = if *extended { "extended hyperbolic tower" } else { "hyperbolic tower" };
                if *base_rank == 0 {
                    write!(f, "{kind} over the trivial group ({floors} floors)")
                } else {
                    write!(f, "{kind} over a rank-{base_rank} subgroup ({floors} floors)")
                }
            }
            Verdict::Certified => f.write_str("certified"),
            Verdict::Rejected => f.write_str("rejected"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub subject: String,
    pub verdict: Verdict,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport { subject: subject.into(), verdict: Verdict::Rejected, checks: Vec::new() }
    }

    pub fn push(&mut self, clause: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.checks.push(CheckResult { clause: clause.into(), status, detail: detail.into() });
    }

    pub fn check(&mut self, clause: impl Into<String>, ok: bool, detail: impl Into<String>) -> bool {
        self.push(clause, if ok { Status::Pass } else { Status::Fail }, detail);
        ok
    }

    pub fn skip(&mut self, clause: impl Into<String>, why: &str) {
        self.push(clause, Status::Skipped, why);
    }

    pub fn accepted(&self) -> bool {
        self.verdict.is_accepted()
    }

    pub fn status(&self, clause: &str) -> Option<Status> {
        self.checks.iter().find(|c| c.clause == clause).map(|c| c.status)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, self.verdict)?;
        for c in &self.checks {
            writeln!(f, "  [{}] {:<32} {}", c.status, c.clause, c.detail)?;
        }
        Ok(())
    }
}

/// `r′: G ∗ ⟨x⟩ → G′ ∗ ⟨x⟩` for the extended branch.
#[derive(Debug, Clone)]
pub struct Extension {
    pub letter: Generator,
    pub retraction: GroupMap,
}

/// A certificate that the Bass-Serre presentation (after Tietze
/// elimination) presents the same group as `ambient`: mutually inverse
/// free-group maps carrying relators to conjugates of relators.
#[derive(Debug, Clone)]
pub struct Identification {
    pub ambient: Presentation,
    pub forward: GroupMap,
    pub backward: GroupMap,
}

#[derive(Debug, Clone)]
pub struct FloorCandidate {
    pub name: String,
    pub decomposition: GraphOfGroupsWithSurfaces,
    pub retraction: GroupMap,
    pub inclusion: GroupMap,
    pub extension: Option<Extension>,
    pub identification: Option<Identification>,
}

impl FloorCandidate {
    /// Source `G` is the Bass-Serre presentation, target `G′` the free
    /// product of the plain vertex groups, and the inclusion is the
    /// canonical one.
    pub fn new(
        name: impl Into<String>,
        decomposition: GraphOfGroupsWithSurfaces,
        retraction: &[(&str, &str)],
        fill: Fill,
    ) -> Result<Self, TowerError> {
        let g = induced_presentation(&decomposition)?;
        let g_prime = plain_vertex_presentation(&decomposition)?;
        let target = Target::from_model(plain_vertex_free_product(&decomposition)?);
        let retraction = GroupMap::parse(g.clone(), target, retraction, fill)?;
        let inclusion = GroupMap::identity(&g_prime).retarget(Target::new(g))?;
        Ok(FloorCandidate {
            name: name.into(),
            decomposition,
            retraction,
            inclusion,
            extension: None,
            identification: None,
        })
    }

    /// Replaces the inclusion `G′ → G` (missing images default to identity).
    pub fn with_inclusion(mut self, pairs: &[(&str, &str)]) -> Result<Self, TowerError> {
        let src = self.inclusion.source().clone();
        let tgt = self.inclusion.target().clone();
        self.inclusion = GroupMap::parse(src, tgt, pairs, Fill::Identity)?;
        Ok(self)
    }

    /// Adds `r′` on `G ∗ ⟨x⟩`; `x ↦ x` is filled in when not given.
    pub fn with_extension(mut self, letter: &str, pairs: &[(&str, &str)], fill: Fill) -> Result<Self, TowerError> {
        let x = Generator::new(letter).map_err(HomError::from)?;
        let source = self.retraction.source().adjoin_free_letter(x).map_err(HomError::from)?;
        let target = self.retraction.target().adjoin_free_letter(x)?;
        let mut pairs = pairs.to_vec();
        if !pairs.iter().any(|(g, _)| *g == letter) {
            pairs.push((letter, letter));
        }
        let retraction = GroupMap::parse(source, target, &pairs, fill)?;
        self.extension = Some(Extension { letter: x, retraction });
        Ok(self)
    }

    /// Adds an identification of `G` with `ambient`. `forward` maps the
    /// eliminated Bass-Serre presentation to `ambient`, `backward` the other
    /// way; missing images default to identity.
    pub fn with_identification(
        mut self,
        ambient: Presentation,
        forward: &[(&str, &str)],
        backward: &[(&str, &str)],
    ) -> Result<Self, TowerError> {
        let elim = self.retraction.source().eliminate_generators().presentation;
        let forward = GroupMap::parse(elim.clone(), Target::new(ambient.clone()), forward, Fill::Identity)?;
        let backward = GroupMap::parse(ambient.clone(), Target::new(elim), backward, Fill::Identity)?;
        self.identification = Some(Identification { ambient, forward, backward });
        Ok(self)
    }

    /// `G`, the group being split.
    pub fn source(&self) -> &Presentation {
        self.retraction.source()
    }

    /// `G′`, the retract.
    pub fn target(&self) -> &Presentation {
        self.retraction.target().presentation()
    }

    /// The presentation a tower sees for `G`: the identified ambient when
    /// present, else the Bass-Serre presentation.
    pub fn ambient(&self) -> &Presentation {
        self.identification.as_ref().map_or(self.source(), |i| &i.ambient)
    }

    fn check_invariants(&self) -> Result<(), TowerError> {
        let g = induced_presentation(&self.decomposition)?;
        let g_prime = plain_vertex_presentation(&self.decomposition)?;
        let malformed = |what: &str| Err(TowerError::Malformed(format!("{}: {what}", self.name)));
        if !self.retraction.source().same_as(&g) {
            return malformed("retraction source is not the Bass-Serre presentation");
        }
        if !self.retraction.target().presentation().same_as(&g_prime) {
            return malformed("retraction target is not the plain vertex free product");
        }
        if !self.inclusion.source().same_as(&g_prime) || !self.inclusion.target().presentation().same_as(&g) {
            return malformed("inclusion does not map G' into G");
        }
        if let Some(ext) = &self.extension {
            let (src, tgt) = (g.adjoin_free_letter(ext.letter), g_prime.adjoin_free_letter(ext.letter));
            match (src, tgt) {
                (Ok(s), Ok(t)) if ext.retraction.source().same_as(&s) && ext.retraction.target().presentation().same_as(&t) => {}
                _ => return malformed("extension map is not G * <x> -> G' * <x>"),
            }
        }
        Ok(())
    }
}

fn describe_failures<T: fmt::Display, U: fmt::Display>(items: &[(T, U)], what: &str) -> String {
    items
        .iter()
        .map(|(a, b)| format!("{a} {what} {b}"))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Homomorphism, retraction identity and non-abelian images for one map.
/// Returns whether all three hold.
fn retraction_checks(
    report: &mut VerificationReport,
    prefix: &str,
    r: &GroupMap,
    inclusion: &GroupMap,
    surfaces: &[Vec<Word>],
) -> Result<bool, TowerError> {
    let bad = r.homomorphism_failures()?;
    let hom = report.check(
        format!("{prefix}homomorphism"),
        bad.is_empty(),
        if bad.is_empty() { "every relator maps to 1".to_string() } else { describe_failures(&bad, "maps to") },
    );
    let bad_inc = inclusion.homomorphism_failures()?;
    let inc = report.check(
        format!("{prefix}inclusion"),
        bad_inc.is_empty(),
        if bad_inc.is_empty() { "G' relators hold in G".to_string() } else { describe_failures(&bad_inc, "maps to") },
    );
    let bad_id = retraction_failures(r, inclusion)?;
    let id = report.check(
        format!("{prefix}identity-on-retract"),
        bad_id.is_empty(),
        if bad_id.is_empty() { "r restricts to the identity on G'".to_string() } else { describe_failures(&bad_id, "goes to") },
    );
    let mut abelian = Vec::new();
    for gens in surfaces {
        if !nonabelian_image(r, gens)? {
            let names: Vec<String> = gens.iter().map(|w| w.to_string()).collect();
            abelian.push(format!("<{}>", names.join(", ")));
        }
    }
    let nonab = report.check(
        format!("{prefix}nonabelian-images"),
        abelian.is_empty(),
        if abelian.is_empty() {
            "every surface group has non-abelian image".to_string()
        } else {
            format!("abelian image of {}", abelian.join(", "))
        },
    );
    Ok(hom && inc && id && nonab)
}

fn identification_failures(source: &Presentation, ident: &Identification) -> Result<Vec<String>, TowerError> {
    let elim = source.eliminate_generators().presentation;
    let mut bad = Vec::new();
    if !ident.forward.source().same_as(&elim) {
        bad.push(format!("forward map is not defined on {elim}"));
        return Ok(bad);
    }
    for (g, w) in ident.forward.images() {
        if ident.backward.apply(w)? != Word::gen(g) {
            bad.push(format!("backward(forward({g})) != {g}"));
        }
    }
    for (g, w) in ident.backward.images() {
        if ident.forward.apply(w)? != Word::gen(g) {
            bad.push(format!("forward(backward({g})) != {g}"));
        }
    }
    let conjugate_of_relator = |w: &Word, p: &Presentation| {
        let c = CyclicWord::new(w);
        p.relators().iter().any(|r| r.same_up_to_inverse(&c))
    };
    for r in elim.relators() {
        let img = ident.forward.apply(r.representative())?;
        if !conjugate_of_relator(&img, &ident.ambient) {
            bad.push(format!("relator {r} maps to {img}, not a conjugate of an ambient relator"));
        }
    }
    for r in ident.ambient.relators() {
        let img = ident.backward.apply(r.representative())?;
        if !conjugate_of_relator(&img, &elim) {
            bad.push(format!("ambient relator {r} maps to {img}, not a conjugate of a relator"));
        }
    }
    Ok(bad)
}

/// A uniformly random reduced word of length at most `max_len`.
pub fn random_word(rng: &mut impl Rng, gens: &[Generator], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut letters = Vec::with_capacity(len);
    while letters.len() < len {
        let g = gens[rng.gen_range(0..gens.len())];
        let l = if rng.gen_bool(0.5) { g.letter() } else { g.inverse_letter() };
        if letters.last().is_some_and(|&p: &crate::word::Letter| p.cancels(l)) {
            continue;
        }
        letters.push(l);
    }
    Word::from_letters(letters)
}

/// `r(ι(w)) = w` on `samples` random words of length at most `max_len`.
pub fn sample_retraction(r: &GroupMap, inclusion: &GroupMap, samples: usize, max_len: usize, seed: u64) -> Result<Option<Word>, TowerError> {
    let gens = inclusion.source().generators().generators().to_vec();
    if gens.is_empty() {
        return Ok(None);
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..samples {
        let w = random_word(&mut rng, &gens, max_len);
        let back = r.apply(&inclusion.apply(&w)?)?;
        if !r.target().are_equal(&back, &w)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

pub const RETRACTION_SAMPLES: usize = 100;
pub const RETRACTION_SAMPLE_LENGTH: usize = 10;

pub fn verify_floor(c: &FloorCandidate) -> Result<VerificationReport, TowerError> {
    verify_floor_seeded(c, 0)
}

/// Checks, in order: structure, admissibility, bipartism, non-triviality,
/// the non-extended retraction clauses, then (if those fail) the extended
/// branch, the optional ambient identification and a sampled `r ∘ ι = id`.
pub fn verify_floor_seeded(c: &FloorCandidate, seed: u64) -> Result<VerificationReport, TowerError> {
    let mut report = VerificationReport::new(&c.name);
    let structure = validate_structure(&c.decomposition);
    let mut structural_ok = true;
    for name in WELL_FORMED_CHECKS {
        let chk = structure.get(name).expect("check present");
        structural_ok &= report.check(format!("structure:{name}"), chk.passed, chk.detail.clone());
    }
    if structural_ok {
        let bad: Vec<String> = c
            .decomposition
            .surface_vertices()
            .filter_map(|v| {
                let s = v.surface_datum().expect("surface vertex");
                (!is_floor_admissible(s).unwrap_or(false)).then(|| format!("`{}` is a {}", v.id, s.common_name()))
            })
            .collect();
        structural_ok &= report.check(
            "admissibility",
            bad.is_empty(),
            if bad.is_empty() { "surfaces are punctured tori or have chi <= -2".into() } else { bad.join("; ") },
        );
        for name in ["bipartism", "non-triviality"] {
            let chk = structure.get(name).expect("check present");
            structural_ok &= report.check(name, chk.passed, chk.detail.clone());
        }
    }
    if !structural_ok {
        for clause in ["retraction", "extended-branch", "retraction-sampling"] {
            report.skip(clause, "structural failure");
        }
        return Ok(report);
    }
    c.check_invariants()?;

    let surfaces: Vec<Vec<Word>> = c
        .decomposition
        .surface_vertices()
        .map(|v| v.generators().iter().map(Word::gen).collect())
        .collect();
    let plain_ok = retraction_checks(&mut report, "", &c.retraction, &c.inclusion, &surfaces)?;
    let mut accepted = None;
    if plain_ok {
        report.skip("extended-branch", "not needed");
        accepted = Some((Verdict::HyperbolicFloor, c.retraction.clone(), c.inclusion.clone()));
    } else {
        let cyclic = c.retraction.target().model().is_some_and(GroupModel::is_infinite_cyclic);
        let cyclic_ok = report.check(
            "extended:cyclic-retract",
            cyclic,
            if cyclic { "G' is infinite cyclic".to_string() } else { format!("G' = {} is not infinite cyclic", c.target()) },
        );
        match (&c.extension, cyclic_ok) {
            (Some(ext), true) => {
                let fixes = ext.retraction.image(ext.letter) == Some(&Word::gen(ext.letter));
                let data_ok = report.check(
                    "extended:fixes-letter",
                    fixes,
                    format!("r'({0}) = {0}", ext.letter),
                );
                let inclusion = c.inclusion.adjoin_free_letter(ext.letter)?;
                if data_ok && retraction_checks(&mut report, "extended:", &ext.retraction, &inclusion, &surfaces)? {
                    accepted = Some((Verdict::ExtendedHyperbolicFloor, ext.retraction.clone(), inclusion));
                }
            }
            (None, true) => {
                report.check("extended:data", false, "no extension data supplied");
            }
            (_, false) => report.skip("extended:data", "G' is not infinite cyclic"),
        }
    }
    let Some((verdict, r, inclusion)) = accepted else {
        report.skip("retraction-sampling", "no retraction accepted");
        return Ok(report);
    };
    let mut ok = true;
    if let Some(ident) = &c.identification {
        let bad = identification_failures(c.source(), ident)?;
        ok &= report.check(
            "ambient-identification",
            bad.is_empty(),
            if bad.is_empty() { format!("G is isomorphic to {}", ident.ambient) } else { bad.join("; ") },
        );
    }
    let counter = sample_retraction(&r, &inclusion, RETRACTION_SAMPLES, RETRACTION_SAMPLE_LENGTH, seed)?;
    ok &= report.check(
        "retraction-sampling",
        counter.is_none(),
        match &counter {
            None => format!("r(i(w)) = w on {RETRACTION_SAMPLES} random words (seed {seed})"),
            Some(w) => format!("r(i({w})) != {w}"),
        },
    );
    if ok {
        report.verdict = verdict;
    }
    Ok(report)
}

/// `G^m = H ∗ F ∗ S₁ ∗ … ∗ S_p` as a partition of the generators of `G^m`.
#[derive(Debug, Clone, Default)]
pub struct GroundFloor {
    pub base: Vec<Generator>,
    pub free: Vec<Generator>,
    pub surfaces: Vec<(SurfaceDatum, Vec<Generator>)>,
}

/// Words over a plain vertex of floor `k` equal to the generators of `H`.
#[derive(Debug, Clone)]
pub struct BaseWitness {
    pub vertex: String,
    pub words: Vec<Word>,
}

#[derive(Debug, Clone)]
pub struct TowerCandidate {
    pub name: String,
    pub ambient: Presentation,
    pub floors: Vec<FloorCandidate>,
    pub witnesses: Vec<BaseWitness>,
    pub ground: GroundFloor,
}

impl TowerCandidate {
    /// `G^m`, the bottom of the chain.
    pub fn bottom(&self) -> &Presentation {
        self.floors.last().map_or(&self.ambient, |f| f.target())
    }

    fn check_chain(&self) -> Result<(), TowerError> {
        if let Some(first) = self.floors.first() {
            if !first.ambient().same_as(&self.ambient) {
                return Err(TowerError::Malformed(format!(
                    "{}: first floor splits {}, not the ambient {}",
                    self.name,
                    first.ambient(),
                    self.ambient
                )));
            }
        }
        for (k, pair) in self.floors.windows(2).enumerate() {
            if !pair[0].target().same_as(pair[1].source()) {
                return Err(TowerError::Malformed(format!(
                    "{}: floor {k} retracts onto {}, but floor {} splits {}",
                    self.name,
                    pair[0].target(),
                    k + 1,
                    pair[1].source()
                )));
            }
        }
        if self.witnesses.len() != self.floors.len() {
            return Err(TowerError::Malformed(format!(
                "{}: {} floors but {} base witnesses",
                self.name,
                self.floors.len(),
                self.witnesses.len()
            )));
        }
        Ok(())
    }
}

fn ground_failures(bottom: &Presentation, ground: &GroundFloor) -> Vec<String> {
    let mut bad = Vec::new();
    let mut listed: Vec<Generator> = ground.base.iter().chain(&ground.free).copied().collect();
    for (_, gens) in &ground.surfaces {
        listed.extend(gens);
    }
    let mut sorted = listed.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != listed.len() {
        bad.push("a generator is listed twice".to_string());
    }
    let all = bottom.generators();
    if listed.len() != all.rank() || !listed.iter().all(|g| all.contains(*g)) {
        bad.push(format!("parts do not partition the generators of {bottom}"));
    }
    let mut matched = vec![false; bottom.relators().len()];
    for (datum, gens) in &ground.surfaces {
        if !datum.is_closed() || datum.euler_char() > -2 {
            bad.push(format!("{} is not closed with chi <= -2", datum));
            continue;
        }
        let rel = standard_presentation(*datum).and_then(|sp| sp.with_generators(gens));
        let Ok(sp) = rel else {
            bad.push(format!("generator list {gens:?} does not fit {datum}"));
            continue;
        };
        let r = &sp.presentation.relators()[0];
        match bottom.relators().iter().position(|s| s.same_up_to_inverse(r)) {
            Some(i) => matched[i] = true,
            None => bad.push(format!("surface relator {r} is not a relator of {bottom}")),
        }
    }
    for (i, r) in bottom.relators().iter().enumerate() {
        if !matched[i] && !r.representative().generators().all(|g| ground.base.contains(&g)) {
            bad.push(format!("relator {r} is neither a surface relator nor inside the base"));
        }
    }
    bad
}

/// Deficiency at least two forces a first Betti number at least two.
fn certifiably_non_cyclic(p: &Presentation) -> bool {
    let e = p.eliminate_generators().presentation;
    e.generators().rank() >= e.relators().len() + 2
}

pub fn verify_tower(c: &TowerCandidate) -> Result<VerificationReport, TowerError> {
    verify_tower_seeded(c, 0)
}

pub fn verify_tower_seeded(c: &TowerCandidate, seed: u64) -> Result<VerificationReport, TowerError> {
    c.check_chain()?;
    let mut report = VerificationReport::new(&c.name);
    let mut ok = report.check(
        "non-cyclic",
        certifiably_non_cyclic(&c.ambient),
        "deficiency of the ambient presentation is at least 2",
    );
    let m = c.floors.len();
    let mut extended = false;
    for (k, floor) in c.floors.iter().enumerate() {
        let sub = verify_floor_seeded(floor, seed.wrapping_add(k as u64))?;
        let detail = match sub.failures().next() {
            None => format!("{}: {}", floor.name, sub.verdict),
            Some(f) => format!("{}: {} ({}: {})", floor.name, sub.verdict, f.clause, f.detail),
        };
        ok &= report.check(format!("floor-{k}"), sub.accepted(), detail);
        if sub.verdict == Verdict::ExtendedHyperbolicFloor {
            extended = true;
            ok &= report.check(
                format!("floor-{k}:position"),
                k + 1 == m,
                if k + 1 == m { "extended floor is the last one" } else { "only the last floor may be extended" },
            );
        }
    }

    // H lives in G^m; push its generators up to G^{k+1} through the inclusions.
    let base_words: Vec<Word> = c.ground.base.iter().map(|&g| Word::gen(g)).collect();
    let mut pushed = base_words.clone();
    for k in (0..m).rev() {
        let floor = &c.floors[k];
        let witness = &c.witnesses[k];
        let clause = format!("base-witness-{k}");
        let Some(vertex) = floor.decomposition.vertex(&witness.vertex).filter(|v| !v.is_surface()) else {
            ok &= report.check(clause, false, format!("`{}` is not a plain vertex", witness.vertex));
            continue;
        };
        let mut bad = Vec::new();
        if witness.words.len() != pushed.len() {
            bad.push(format!("{} witness words for {} base generators", witness.words.len(), pushed.len()));
        }
        for (h, w) in pushed.iter().zip(&witness.words) {
            if vertex.generators().check(w).is_err() {
                bad.push(format!("{w} is not a word in `{}`", vertex.id));
            } else if !floor.retraction.target().are_equal(h, w)? {
                bad.push(format!("{w} != {h}"));
            }
        }
        ok &= report.check(
            clause,
            bad.is_empty(),
            if bad.is_empty() { format!("H lies in plain vertex `{}`", vertex.id) } else { bad.join("; ") },
        );
        pushed = pushed.iter().map(|w| floor.inclusion.apply(w)).collect::<Result<_, _>>()?;
    }

    let bad = ground_failures(c.bottom(), &c.ground);
    ok &= report.check(
        "ground-floor",
        bad.is_empty(),
        if bad.is_empty() {
            format!(
                "G^{m} = H * F_{} * {} closed surface group(s)",
                c.ground.free.len(),
                c.ground.surfaces.len()
            )
        } else {
            bad.join("; ")
        },
    );
    if ok {
        report.verdict = Verdict::Tower { floors: m, base_rank: c.ground.base.len(), extended };
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gog::{EdgeData, VertexData};

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn moebius() -> FloorCandidate {
        let s = VertexData::surface("S", SurfaceDatum::nonorientable(3, 1).unwrap(), &["a", "b", "c"]).unwrap();
        let h = VertexData::plain("H", Presentation::parse(&["h"], &[]).unwrap());
        let g = GraphOfGroupsWithSurfaces::new(vec![h, s], vec![EdgeData::tree("e", ("H", w("h h")), ("S", w("a a b b c c")))])
            .unwrap();
        FloorCandidate::new("moebius", g, &[("h", "h"), ("a", "h")], Fill::Trivial)
            .unwrap()
            .with_extension("x", &[("h", "h"), ("a", "h"), ("b", "x"), ("c", "x^-1")], Fill::Required)
            .unwrap()
    }

    #[test]
    fn moebius_is_extended_floor() {
        let r = verify_floor(&moebius()).unwrap();
        assert_eq!(r.verdict, Verdict::ExtendedHyperbolicFloor, "{r}");
        assert_eq!(r.status("nonabelian-images"), Some(Status::Fail));
    }

    #[test]
    fn extension_must_fix_letter() {
        let c = moebius()
            .with_extension("x", &[("h", "h"), ("a", "h"), ("b", "x"), ("c", "x^-1"), ("x", "x x")], Fill::Required)
            .unwrap();
        let r = verify_floor(&c).unwrap();
        assert_eq!(r.verdict, Verdict::Rejected);
    }

    #[test]
    fn extended_tower_over_cyclic_base() {
        let t = TowerCandidate {
            name: "s4".into(),
            ambient: moebius().source().clone(),
            floors: vec![moebius()],
            witnesses: vec![BaseWitness { vertex: "H".into(), words: vec![w("h")] }],
            ground: GroundFloor { base: vec![Generator::named("h")], ..Default::default() },
        };
        let r = verify_tower(&t).unwrap();
        assert_eq!(r.verdict, Verdict::Tower { floors: 1, base_rank: 1, extended: true }, "{r}");
    }

    #[test]
    fn ground_surface_chi_bound() {
        let pt = Presentation::parse(&["a1", "a2"], &["a1 a2 a1^-1 a2^-1"]).unwrap();
        let t = TowerCandidate {
            name: "torus".into(),
            ambient: pt,
            floors: vec![],
            witnesses: vec![],
            ground: GroundFloor {
                surfaces: vec![(SurfaceDatum::torus(), vec![Generator::named("a1"), Generator::named("a2")])],
                ..Default::default()
            },
        };
        let r = verify_tower(&t).unwrap();
        assert_eq!(r.verdict, Verdict::Rejected);
    }

    #[test]
    fn random_words_are_reduced_and_bounded() {
        let gens = [Generator::named("a"), Generator::named("b")];
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let w = random_word(&mut rng, &gens, 10);
            assert!(w.len() <= 10);
        }
    }
}
