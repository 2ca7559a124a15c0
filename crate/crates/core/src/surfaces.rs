//! Compact surfaces up to homeomorphism.
//!
//! A compact surface is determined by orientability, Euler characteristic and
//! the number of boundary circles. This module does the arithmetic on those
//! triples, writes down standard presentations, and enumerates the ways a
//! closed surface can be cut into floor pieces and complementary pieces.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{is_genus_one_commutator, Alphabet, Generator, Word};
use crate::word_problem::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("no compact surface has orientable={orientable}, chi={euler_char}, boundary={boundary_count}")]
    Invalid {
        orientable: bool,
        euler_char: i64,
        boundary_count: u32,
    },
    #[error("a non-orientable surface needs at least one crosscap")]
    NoCrosscaps,
    #[error("unsupported surface {0}")]
    Unsupported(SurfaceDatum),
    #[error("{0} is closed; floor admissibility is defined for bounded surfaces")]
    Closed(SurfaceDatum),
    #[error("{0} has boundary; closed ambient surface expected")]
    Bounded(SurfaceDatum),
    #[error("expected {expected} generator names, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("malformed surface literal `{0}`")]
    Syntax(String),
}

/// `(orientable, χ, boundary count)` of a compact connected surface.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceDatum {
    orientable: bool,
    euler_char: i64,
    boundary_count: u32,
}

impl SurfaceDatum {
    pub fn new(orientable: bool, euler_char: i64, boundary_count: u32) -> Result<Self, SurfaceError> {
        let total = euler_char + boundary_count as i64;
        let ok = if orientable {
            total <= 2 && total % 2 == 0
        } else {
            total <= 1
        };
        if !ok {
            return Err(SurfaceError::Invalid { orientable, euler_char, boundary_count });
        }
        Ok(SurfaceDatum { orientable, euler_char, boundary_count })
    }

    /// Genus-`m` orientable surface with `r` boundary circles.
    pub fn orientable(genus: u32, boundary: u32) -> Self {
        let chi = euler_from_presentation_data(true, genus, boundary).expect("orientable");
        SurfaceDatum { orientable: true, euler_char: chi, boundary_count: boundary }
    }

    /// Connected sum of `q ≥ 1` projective planes with `r` boundary circles.
    pub fn nonorientable(crosscaps: u32, boundary: u32) -> Result<Self, SurfaceError> {
        let chi = euler_from_presentation_data(false, crosscaps, boundary)?;
        Ok(SurfaceDatum { orientable: false, euler_char: chi, boundary_count: boundary })
    }

    pub fn sphere() -> Self {
        Self::orientable(0, 0)
    }

    pub fn torus() -> Self {
        Self::orientable(1, 0)
    }

    pub fn projective_plane() -> Self {
        Self::nonorientable(1, 0).expect("q = 1")
    }

    pub fn punctured_torus() -> Self {
        Self::orientable(1, 1)
    }

    pub fn cylinder() -> Self {
        Self::orientable(0, 2)
    }

    pub fn moebius_band() -> Self {
        Self::nonorientable(1, 1).expect("q = 1")
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable
    }

    pub fn euler_char(&self) -> i64 {
        self.euler_char
    }

    pub fn boundary_count(&self) -> u32 {
        self.boundary_count
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_count == 0
    }

    /// Orientable genus `m`, or `None` for a non-orientable surface.
    pub fn genus(&self) -> Option<u32> {
        self.orientable
            .then(|| ((2 - self.euler_char - self.boundary_count as i64) / 2) as u32)
    }

    /// Number of projective-plane summands `q`, or `None` when orientable.
    pub fn crosscaps(&self) -> Option<u32> {
        (!self.orientable).then(|| (2 - self.euler_char - self.boundary_count as i64) as u32)
    }

    /// Rank of the fundamental group when it is free (bounded surfaces).
    pub fn free_rank(&self) -> Option<u32> {
        (!self.is_closed()).then(|| (1 - self.euler_char) as u32)
    }

    pub fn is_punctured_torus(&self) -> bool {
        *self == Self::punctured_torus()
    }

    pub fn common_name(&self) -> String {
        let holes = match self.boundary_count {
            0 => String::new(),
            1 => "once-punctured ".into(),
            2 => "twice-punctured ".into(),
            3 => "thrice-punctured ".into(),
            n => format!("{n}-punctured "),
        };
        match (self.orientable, self.genus(), self.crosscaps(), self.boundary_count) {
            (true, Some(0), _, 1) => "disc".into(),
            (true, Some(0), _, 2) => "cylinder".into(),
            (false, _, Some(1), 1) => "Moebius band".into(),
            (true, Some(0), _, _) => format!("{holes}sphere"),
            (true, Some(1), _, _) => format!("{holes}torus"),
            (true, Some(g), _, _) => format!("{holes}genus-{g} surface"),
            (false, _, Some(1), _) => format!("{holes}projective plane"),
            (false, _, Some(2), _) => format!("{holes}Klein bottle"),
            (false, _, Some(q), _) => format!("{holes}connected sum of {q} projective planes"),
            _ => unreachable!("datum is valid"),
        }
    }
}

impl fmt::Display for SurfaceDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "surface({}, chi={}, boundary={})",
            if self.orientable { "orientable" } else { "nonorientable" },
            self.euler_char,
            self.boundary_count
        )
    }
}

impl fmt::Debug for SurfaceDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SurfaceDatum {
    type Err = SurfaceError;

    /// `surface(orientable|nonorientable, chi=<int>, boundary=<nat>)`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SurfaceError::Syntax(s.to_string());
        let inner = s
            .trim()
            .strip_prefix("surface")
            .map(str::trim_start)
            .and_then(|r| r.strip_prefix('('))
            .and_then(|r| r.trim_end().strip_suffix(')'))
            .ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let [kind, chi, boundary] = parts.as_slice() else {
            return Err(bad());
        };
        let orientable = match *kind {
            "orientable" => true,
            "nonorientable" => false,
            _ => return Err(bad()),
        };
        let value = |part: &str, key: &str| -> Option<String> {
            let (k, v) = part.split_once('=')?;
            (k.trim() == key).then(|| v.trim().to_string())
        };
        let chi: i64 = value(chi, "chi").and_then(|v| v.parse().ok()).ok_or_else(bad)?;
        let boundary: u32 = value(boundary, "boundary").and_then(|v| v.parse().ok()).ok_or_else(bad)?;
        SurfaceDatum::new(orientable, chi, boundary)
    }
}

/// `−(2m − 2 + r)` for orientable surfaces, `−(q − 2 + r)` otherwise.
pub fn euler_from_presentation_data(orientable: bool, handles_or_crosscaps: u32, boundary: u32) -> Result<i64, SurfaceError> {
    let (k, r) = (handles_or_crosscaps as i64, boundary as i64);
    if orientable {
        Ok(-(2 * k - 2 + r))
    } else if k == 0 {
        Err(SurfaceError::NoCrosscaps)
    } else {
        Ok(-(k - 2 + r))
    }
}

pub fn connected_sum(s1: SurfaceDatum, s2: SurfaceDatum) -> SurfaceDatum {
    SurfaceDatum {
        orientable: s1.orientable && s2.orientable,
        euler_char: s1.euler_char + s2.euler_char - 2,
        boundary_count: s1.boundary_count + s2.boundary_count,
    }
}

pub fn puncture(s: SurfaceDatum) -> SurfaceDatum {
    SurfaceDatum {
        orientable: s.orientable,
        euler_char: s.euler_char - 1,
        boundary_count: s.boundary_count + 1,
    }
}

pub fn homeomorphic(s1: SurfaceDatum, s2: SurfaceDatum) -> bool {
    s1 == s2
}

/// `h` handles plus `p ≥ 1` crosscaps equal `2h + p` crosscaps.
pub fn mixed_form_to_crosscaps(handles: u32, crosscaps: u32) -> Result<u32, SurfaceError> {
    if crosscaps == 0 {
        return Err(SurfaceError::NoCrosscaps);
    }
    Ok(2 * handles + crosscaps)
}

/// A presentation of `π₁` of a surface together with one word per boundary
/// circle generating the corresponding maximal boundary subgroup.
#[derive(Debug, Clone)]
pub struct SurfacePresentation {
    pub datum: SurfaceDatum,
    pub presentation: Presentation,
    pub boundary_words: Vec<Word>,
}

impl SurfacePresentation {
    /// Renames the generators, in order, to `names`.
    pub fn with_generators(&self, names: &[Generator]) -> Result<Self, SurfaceError> {
        let old = self.presentation.generators().generators();
        if old.len() != names.len() {
            return Err(SurfaceError::GeneratorCount { expected: old.len(), got: names.len() });
        }
        let rename = |w: &Word| {
            w.substitute(|g| old.iter().position(|&x| x == g).map(|i| Word::gen(names[i])))
        };
        let alpha = Alphabet::new(names.iter().copied()).map_err(|_| SurfaceError::Unsupported(self.datum))?;
        let relators = self
            .presentation
            .relators()
            .iter()
            .map(|r| rename(r.representative()))
            .collect();
        let presentation = Presentation::new(alpha, relators).expect("renaming preserves validity");
        Ok(SurfacePresentation {
            datum: self.datum,
            presentation,
            boundary_words: self.boundary_words.iter().map(rename).collect(),
        })
    }

    pub fn generators(&self) -> &Alphabet {
        self.presentation.generators()
    }
}

fn gens(prefix: &str, n: u32) -> Vec<Generator> {
    (1..=n).map(|i| Generator::named(&format!("{prefix}{i}"))).collect()
}

/// Standard presentation of a surface group.
///
/// Closed surfaces get `⟨a₁..a₂ₘ | [a₁,a₂]…⟩` or `⟨d₁..d_q | d₁²…d_q²⟩`. For
/// bounded surfaces the last boundary generator is eliminated, leaving a free
/// group on `a`/`d` and `g₁..g_{r−1}`, with boundary words `g₁, …, g_{r−1}`
/// and `(g₁…g_{r−1})⁻¹ · [a₁,a₂]…` (resp. `· d₁²…d_q²`).
pub fn standard_presentation(s: SurfaceDatum) -> Result<SurfacePresentation, SurfaceError> {
    let r = s.boundary_count;
    if (s.is_closed() && s.euler_char >= 0 && !matches!(s.genus(), Some(1)) && !matches!(s.crosscaps(), Some(2)))
        || (!s.is_closed() && s.euler_char > 0)
    {
        return Err(SurfaceError::Unsupported(s));
    }
    let (body_gens, body) = match (s.genus(), s.crosscaps()) {
        (Some(m), _) => {
            let g = gens("a", 2 * m);
            let mut w = Word::identity();
            for pair in g.chunks(2) {
                w = w.compose(&Word::commutator(&Word::gen(pair[0]), &Word::gen(pair[1])));
            }
            (g, w)
        }
        (_, Some(q)) => {
            let g = gens("d", q);
            let w = g.iter().fold(Word::identity(), |acc, &d| acc.compose(&Word::gen(d).pow(2)));
            (g, w)
        }
        _ => unreachable!(),
    };
    let alpha_of = |v: Vec<Generator>| Alphabet::new(v).expect("distinct standard names");
    if s.is_closed() {
        let presentation = Presentation::new(alpha_of(body_gens), vec![body]).expect("valid relator");
        return Ok(SurfacePresentation { datum: s, presentation, boundary_words: Vec::new() });
    }
    let boundary = gens("g", r - 1);
    let mut boundary_words: Vec<Word> = boundary.iter().map(|&g| Word::gen(g)).collect();
    let prefix = boundary_words.iter().fold(Word::identity(), |acc, w| acc.compose(w));
    boundary_words.push(prefix.inverse().compose(&body));
    let mut all = body_gens;
    all.extend(boundary);
    let presentation = Presentation::free(alpha_of(all));
    Ok(SurfacePresentation { datum: s, presentation, boundary_words })
}

/// Once-punctured torus or `χ ≤ −2`. Defined for bounded surfaces only.
pub fn is_floor_admissible(s: SurfaceDatum) -> Result<bool, SurfaceError> {
    if s.is_closed() {
        return Err(SurfaceError::Closed(s));
    }
    Ok(s.is_punctured_torus() || s.euler_char <= -2)
}

/// Why a profile cannot come from a floor structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    /// Every piece is orientable and the pieces are glued along a tree, so
    /// the result is orientable; the ambient is not.
    OrientableTreeGluing,
    /// A punctured torus glued along one curve to a piece whose boundary
    /// word is not a commutator: no retraction onto that piece exists.
    CommutatorObstruction { complement: SurfaceDatum, boundary_word: Word },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::OrientableTreeGluing => {
                write!(f, "orientable pieces glued along a tree cannot form a non-orientable surface")
            }
            Rejection::CommutatorObstruction { complement, boundary_word } => write!(
                f,
                "boundary word {boundary_word} of {} is not a commutator",
                complement.common_name()
            ),
        }
    }
}

/// A cut of a closed surface into floor pieces and complementary pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FloorProfile {
    pub surface_pieces: Vec<SurfaceDatum>,
    pub complement_pieces: Vec<SurfaceDatum>,
    pub rejection: Option<Rejection>,
}

impl FloorProfile {
    pub fn curves(&self) -> u32 {
        self.surface_pieces.iter().map(|s| s.boundary_count).sum()
    }

    pub fn euler_sum(&self) -> i64 {
        self.surface_pieces
            .iter()
            .chain(&self.complement_pieces)
            .map(|s| s.euler_char)
            .sum()
    }
}

impl fmt::Display for FloorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |v: &[SurfaceDatum]| v.iter().map(|s| s.common_name()).collect::<Vec<_>>().join(" + ");
        write!(f, "{{{}}} | {{{}}}", names(&self.surface_pieces), names(&self.complement_pieces))?;
        if let Some(r) = &self.rejection {
            write!(f, "  [rejected: {r}]")?;
        }
        Ok(())
    }
}

/// Bounded surfaces with `lo ≤ χ ≤ hi`.
fn bounded_data(lo: i64, hi: i64, orientable_only: bool) -> Vec<SurfaceDatum> {
    let mut out = Vec::new();
    for chi in lo..=hi {
        for b in 1..=(2 - chi).max(0) as u32 {
            for orientable in [true, false] {
                if orientable_only && !orientable {
                    continue;
                }
                if let Ok(s) = SurfaceDatum::new(orientable, chi, b) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Multisets (as sorted index vectors) of size `1..=max_size` from `pool`.
fn multisets(pool_len: usize, max_size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, pool_len: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for i in start..pool_len {
            cur.push(i);
            rec(i, pool_len, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, pool_len, max_size, &mut Vec::new(), &mut out);
    out
}

/// Every way to write a closed surface as floor-admissible pieces glued
/// bipartitely to complementary pieces of `χ ≤ 0`, at the level of
/// homeomorphism data. `piece_bound` caps the total number of pieces.
///
/// The output is a superset of the realisable cuts: gluing-graph
/// connectivity is checked by counting, and profiles that break an
/// ambient-specific rule are tagged rather than dropped.
pub fn enumerate_floor_profiles(ambient: SurfaceDatum, piece_bound: usize) -> Result<Vec<FloorProfile>, SurfaceError> {
    if !ambient.is_closed() {
        return Err(SurfaceError::Bounded(ambient));
    }
    let chi = ambient.euler_char;
    if chi > -1 || piece_bound < 2 {
        return Ok(Vec::new());
    }
    let orientable_only = ambient.is_orientable();
    let surface_pool: Vec<SurfaceDatum> = bounded_data(chi, -1, orientable_only)
        .into_iter()
        .filter(|s| is_floor_admissible(*s).unwrap_or(false))
        .collect();
    let complement_pool = bounded_data(chi + 1, 0, orientable_only);

    let mut out = Vec::new();
    for s_idx in multisets(surface_pool.len(), piece_bound - 1) {
        let surfaces: Vec<SurfaceDatum> = s_idx.iter().map(|&i| surface_pool[i]).collect();
        let s_chi: i64 = surfaces.iter().map(|s| s.euler_char).sum();
        let curves: u32 = surfaces.iter().map(|s| s.boundary_count).sum();
        if s_chi < chi {
            continue;
        }
        for c_idx in multisets(complement_pool.len(), piece_bound - surfaces.len()) {
            let complements: Vec<SurfaceDatum> = c_idx.iter().map(|&i| complement_pool[i]).collect();
            let c_chi: i64 = complements.iter().map(|s| s.euler_char).sum();
            let c_curves: u32 = complements.iter().map(|s| s.boundary_count).sum();
            let pieces = surfaces.len() + complements.len();
            if s_chi + c_chi != chi || c_curves != curves || (curves as usize) + 1 < pieces {
                continue;
            }
            let rejection = profile_rejection(ambient, &surfaces, &complements, curves);
            out.push(FloorProfile {
                surface_pieces: surfaces.clone(),
                complement_pieces: complements,
                rejection,
            });
        }
    }
    Ok(out)
}

fn profile_rejection(ambient: SurfaceDatum, surfaces: &[SurfaceDatum], complements: &[SurfaceDatum], curves: u32) -> Option<Rejection> {
    let pieces = surfaces.len() + complements.len();
    let all_orientable = surfaces.iter().chain(complements).all(|s| s.is_orientable());
    if !ambient.is_orientable() && all_orientable && curves as usize + 1 == pieces {
        return Some(Rejection::OrientableTreeGluing);
    }
    if let ([s], [c]) = (surfaces, complements) {
        if s.is_punctured_torus() && c.boundary_count == 1 {
            // a retraction onto the complement fixes its boundary word, which
            // is then the image of the torus commutator
            let sp = standard_presentation(*c).ok()?;
            let boundary_word = sp.boundary_words[0].clone();
            if is_genus_one_commutator(&boundary_word).is_none() {
                return Some(Rejection::CommutatorObstruction { complement: *c, boundary_word });
            }
        }
    }
    None
}

/// A cut of a bounded surface along `curves ≥ 1` essential, pairwise
/// non-parallel curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsurfaceProfile {
    pub pieces: Vec<SurfaceDatum>,
    pub curves: u32,
}

impl SubsurfaceProfile {
    pub fn has_admissible_piece(&self) -> bool {
        self.pieces.iter().any(|p| is_floor_admissible(*p).unwrap_or(false))
    }
}

impl fmt::Display for SubsurfaceProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.pieces.iter().map(|s| s.common_name()).collect();
        write!(f, "{} curve(s): {}", self.curves, names.join(" + "))
    }
}

/// Proper subsurface decompositions of a bounded surface, at the level of
/// homeomorphism data.
///
/// Pieces have `χ ≤ 0` (no discs) and inherit orientability. Cylinders and
/// Moebius bands may not carry an ambient boundary circle (that curve would
/// be boundary-parallel), every piece meets at least one cut curve, and the
/// gluing graph has enough curves to be connected.
pub fn enumerate_subsurface_profiles(ambient: SurfaceDatum, piece_bound: usize) -> Result<Vec<SubsurfaceProfile>, SurfaceError> {
    if ambient.is_closed() {
        return Err(SurfaceError::Unsupported(ambient));
    }
    let chi = ambient.euler_char;
    let pool = bounded_data(chi, 0, ambient.is_orientable());
    let ambient_b = ambient.boundary_count as i64;
    let mut out = Vec::new();
    for idx in multisets(pool.len(), piece_bound) {
        let pieces: Vec<SurfaceDatum> = idx.iter().map(|&i| pool[i]).collect();
        if pieces.iter().map(|p| p.euler_char).sum::<i64>() != chi {
            continue;
        }
        let sides: i64 = pieces.iter().map(|p| p.boundary_count as i64).sum();
        let doubled = sides - ambient_b;
        if doubled < 2 || doubled % 2 != 0 {
            continue;
        }
        let curves = doubled / 2;
        let n = pieces.len() as i64;
        if curves < n - 1 {
            continue;
        }
        // ambient circles go to non-annular pieces, each keeping a cut side
        let capacity: i64 = pieces
            .iter()
            .filter(|p| p.euler_char < 0)
            .map(|p| p.boundary_count as i64 - 1)
            .sum();
        if ambient_b > capacity {
            continue;
        }
        if n == 1 && pieces[0].boundary_count as i64 - ambient_b < 2 {
            continue;
        }
        out.push(SubsurfaceProfile { pieces, curves: curves as u32 });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n4() -> SurfaceDatum {
        SurfaceDatum::nonorientable(4, 0).unwrap()
    }

    #[test]
    fn euler_formula_examples() {
        assert_eq!(euler_from_presentation_data(true, 2, 0).unwrap(), -2);
        assert_eq!(euler_from_presentation_data(false, 4, 0).unwrap(), -2);
        assert_eq!(euler_from_presentation_data(true, 1, 1).unwrap(), -1);
        assert_eq!(euler_from_presentation_data(false, 0, 1), Err(SurfaceError::NoCrosscaps));
    }

    #[test]
    fn datum_validity() {
        assert!(SurfaceDatum::new(true, -1, 0).is_err());
        assert!(SurfaceDatum::new(true, 3, 0).is_err());
        assert!(SurfaceDatum::new(false, 2, 0).is_err());
        assert!(SurfaceDatum::new(false, 0, 1).is_ok());
        assert_eq!(n4().crosscaps(), Some(4));
        assert_eq!(SurfaceDatum::orientable(2, 0).genus(), Some(2));
    }

    #[test]
    fn sums_and_punctures() {
        let p2 = SurfaceDatum::projective_plane();
        let n3 = connected_sum(connected_sum(p2, p2), p2);
        assert_eq!(n3.euler_char(), -1);
        let n4s = connected_sum(n3, p2);
        assert_eq!(n4s, n4());
        assert_eq!(puncture(SurfaceDatum::torus()), SurfaceDatum::punctured_torus());
    }

    #[test]
    fn homeomorphism_examples() {
        assert_eq!(mixed_form_to_crosscaps(1, 2).unwrap(), 4);
        assert!(mixed_form_to_crosscaps(1, 0).is_err());
        let mixed = SurfaceDatum::nonorientable(mixed_form_to_crosscaps(1, 2).unwrap(), 3).unwrap();
        assert!(homeomorphic(mixed, SurfaceDatum::nonorientable(4, 3).unwrap()));
        assert!(!homeomorphic(SurfaceDatum::sphere(), SurfaceDatum::torus()));
        let k2 = SurfaceDatum::new(false, -2, 2).unwrap();
        let s4 = SurfaceDatum::new(true, -2, 4).unwrap();
        assert!(!homeomorphic(k2, s4));
    }

    #[test]
    fn literal_round_trip() {
        let s: SurfaceDatum = "surface(nonorientable, chi=-2, boundary=1)".parse().unwrap();
        assert_eq!(s, SurfaceDatum::nonorientable(3, 1).unwrap());
        assert_eq!(s.to_string().parse::<SurfaceDatum>().unwrap(), s);
        assert!("surface(orientable, chi=-1, boundary=0)".parse::<SurfaceDatum>().is_err());
        assert!("surf(orientable, chi=0, boundary=0)".parse::<SurfaceDatum>().is_err());
    }

    #[test]
    fn standard_presentation_examples() {
        let sp = standard_presentation(n4()).unwrap();
        assert_eq!(sp.presentation.generators().rank(), 4);
        assert!(sp.presentation.has_relator(&Word::parse("d1 d1 d2 d2 d3 d3 d4 d4").unwrap()));
        assert!(sp.boundary_words.is_empty());

        let sp = standard_presentation(SurfaceDatum::new(true, -2, 4).unwrap()).unwrap();
        assert!(sp.presentation.is_free());
        assert_eq!(sp.presentation.generators().rank(), 3);
        let expected: Vec<Word> = ["g1", "g2", "g3", "g3^-1 g2^-1 g1^-1"]
            .iter()
            .map(|t| Word::parse(t).unwrap())
            .collect();
        assert_eq!(sp.boundary_words, expected);

        let sp = standard_presentation(SurfaceDatum::punctured_torus()).unwrap();
        assert_eq!(sp.presentation.generators().rank(), 2);
        assert_eq!(sp.boundary_words, vec![Word::parse("a1 a2 a1^-1 a2^-1").unwrap()]);

        assert!(standard_presentation(SurfaceDatum::sphere()).is_err());
        assert!(standard_presentation(SurfaceDatum::projective_plane()).is_err());
        assert!(standard_presentation(SurfaceDatum::orientable(0, 1)).is_err());
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_floor_admissible(SurfaceDatum::punctured_torus()).unwrap());
        assert!(!is_floor_admissible(SurfaceDatum::orientable(0, 3)).unwrap());
        assert!(!is_floor_admissible(SurfaceDatum::nonorientable(2, 1).unwrap()).unwrap());
        assert!(is_floor_admissible(SurfaceDatum::nonorientable(3, 1).unwrap()).unwrap());
        assert!(matches!(is_floor_admissible(n4()), Err(SurfaceError::Closed(_))));
    }

    #[test]
    fn sphere_has_no_profiles() {
        assert!(enumerate_floor_profiles(SurfaceDatum::sphere(), 4).unwrap().is_empty());
        assert!(enumerate_floor_profiles(SurfaceDatum::punctured_torus(), 4).is_err());
    }

    #[test]
    fn genus_two_profiles() {
        let profiles = enumerate_floor_profiles(SurfaceDatum::orientable(2, 0), 4).unwrap();
        let pt = SurfaceDatum::punctured_torus();
        assert!(profiles
            .iter()
            .any(|p| p.surface_pieces == [pt] && p.complement_pieces == [pt] && p.rejection.is_none()));
        assert!(profiles.iter().any(|p| p.surface_pieces.len() == 1
            && p.surface_pieces[0].euler_char() == -2
            && p.complement_pieces == [SurfaceDatum::cylinder()]));
        assert!(profiles
            .iter()
            .flat_map(|p| p.surface_pieces.iter().chain(&p.complement_pieces))
            .all(|s| s.is_orientable()));
    }

    #[test]
    fn subsurfaces_of_punctured_torus() {
        let profiles = enumerate_subsurface_profiles(SurfaceDatum::punctured_torus(), 4).unwrap();
        assert!(!profiles.is_empty());
        for p in &profiles {
            assert!(!p.has_admissible_piece(), "{p}");
        }
    }
}
