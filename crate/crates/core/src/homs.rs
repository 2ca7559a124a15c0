//! Maps between presented groups given by generator images.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::word::{Alphabet, CyclicWord, Generator, Word, WordError};
use crate::word_problem::{GroupModel, ModelError, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("image given for `{0}`, which is not a source generator")]
    ExtraImage(String),
    #[error("word problem in {0} is not supported")]
    Undecidable(String),
    #[error("maps do not compose: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// The codomain of a map: a presentation, with a word-problem model when
/// the presentation falls in a supported class.
#[derive(Debug, Clone)]
pub struct Target {
    presentation: Presentation,
    model: Option<GroupModel>,
}

impl Target {
    pub fn new(presentation: Presentation) -> Self {
        let model = GroupModel::from_presentation(&presentation).ok();
        Target { presentation, model }
    }

    pub fn from_model(model: GroupModel) -> Self {
        Target { presentation: model.presentation(), model: Some(model) }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn model(&self) -> Option<&GroupModel> {
        self.model.as_ref()
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.presentation.generators()
    }

    /// Free triviality, then conjugates of relators, then the model.
    pub fn is_trivial(&self, w: &Word) -> Result<bool, HomError> {
        self.alphabet().check(w)?;
        if w.is_identity() {
            return Ok(true);
        }
        let c = CyclicWord::new(w);
        if c.is_empty() || self.presentation.relators().iter().any(|r| r.same_up_to_inverse(&c)) {
            return Ok(true);
        }
        match &self.model {
            Some(m) => Ok(m.is_trivial(w)?),
            None => Err(HomError::Undecidable(self.presentation.to_string())),
        }
    }

    pub fn are_equal(&self, w1: &Word, w2: &Word) -> Result<bool, HomError> {
        self.is_trivial(&w1.compose(&w2.inverse()))
    }

    pub fn commute(&self, w1: &Word, w2: &Word) -> Result<bool, HomError> {
        self.is_trivial(&Word::commutator(w1, w2))
    }

    pub fn adjoin_free_letter(&self, g: Generator) -> Result<Self, HomError> {
        Ok(Target {
            presentation: self.presentation.adjoin_free_letter(g)?,
            model: self.model.as_ref().map(|m| m.adjoin_free_letter(g)).transpose()?,
        })
    }
}

/// How generators without an explicit image are treated when building a map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fill {
    Required,
    Trivial,
    Identity,
}

/// A homomorphism candidate `source → target` given by generator images.
#[derive(Debug, Clone)]
pub struct GroupMap {
    source: Presentation,
    target: Target,
    images: Vec<Word>,
}

impl GroupMap {
    pub fn new(source: Presentation, target: Target, images: &HashMap<Generator, Word>, fill: Fill) -> Result<Self, HomError> {
        for g in images.keys() {
            if !source.generators().contains(*g) {
                return Err(HomError::ExtraImage(g.name().to_string()));
            }
        }
        let mut out = Vec::with_capacity(source.generators().rank());
        for g in source.generators().iter() {
            let img = match (images.get(&g), fill) {
                (Some(w), _) => w.clone(),
                (None, Fill::Trivial) => Word::identity(),
                (None, Fill::Identity) => Word::gen(g),
                (None, Fill::Required) => return Err(HomError::MissingImage(g.name().to_string())),
            };
            target.alphabet().check(&img)?;
            out.push(img);
        }
        Ok(GroupMap { source, target, images: out })
    }

    /// Images as `(generator, word text)` pairs.
    pub fn parse(source: Presentation, target: Target, pairs: &[(&str, &str)], fill: Fill) -> Result<Self, HomError> {
        let mut images = HashMap::new();
        for (g, w) in pairs {
            images.insert(Generator::new(g)?, Word::parse(w)?);
        }
        Self::new(source, target, &images, fill)
    }

    pub fn identity(p: &Presentation) -> Self {
        GroupMap {
            source: p.clone(),
            target: Target::new(p.clone()),
            images: p.generators().iter().map(Word::gen).collect(),
        }
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Target {
        &self.target
    }

    pub fn image(&self, g: Generator) -> Option<&Word> {
        self.source.generators().index_of(g).map(|i| &self.images[i])
    }

    pub fn images(&self) -> impl Iterator<Item = (Generator, &Word)> {
        self.source.generators().iter().zip(&self.images)
    }

    pub fn apply(&self, w: &Word) -> Result<Word, HomError> {
        self.source.generators().check(w)?;
        Ok(w.substitute(|g| self.image(g).cloned()))
    }

    /// Relators whose image is not trivial in the target.
    pub fn homomorphism_failures(&self) -> Result<Vec<(Word, Word)>, HomError> {
        let mut bad = Vec::new();
        for r in self.source.relators() {
            let img = self.apply(r.representative())?;
            if !self.target.is_trivial(&img)? {
                bad.push((r.representative().clone(), img));
            }
        }
        Ok(bad)
    }

    pub fn verify_homomorphism(&self) -> Result<bool, HomError> {
        Ok(self.homomorphism_failures()?.is_empty())
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &GroupMap) -> Result<GroupMap, HomError> {
        if !same_generators(self.target.alphabet(), next.source.generators()) {
            return Err(HomError::Mismatch(format!(
                "target {} vs source {}",
                self.target.alphabet(),
                next.source.generators()
            )));
        }
        let images = self.images.iter().map(|w| next.apply(w)).collect::<Result<_, _>>()?;
        Ok(GroupMap { source: self.source.clone(), target: next.target.clone(), images })
    }

    /// Both sides extended by a fresh free letter `x ↦ x`.
    pub fn adjoin_free_letter(&self, x: Generator) -> Result<GroupMap, HomError> {
        let mut images = self.images.clone();
        images.push(Word::gen(x));
        Ok(GroupMap {
            source: self.source.adjoin_free_letter(x)?,
            target: self.target.adjoin_free_letter(x)?,
            images,
        })
    }

    /// Replaces the target, keeping images (which must lie in the new one).
    pub fn retarget(&self, target: Target) -> Result<GroupMap, HomError> {
        for w in &self.images {
            target.alphabet().check(w)?;
        }
        Ok(GroupMap { source: self.source.clone(), target, images: self.images.clone() })
    }
}

impl fmt::Display for GroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().map(|(g, w)| format!("{g} -> {w}")).collect();
        write!(f, "{{ {} }}", parts.join(", "))
    }
}

fn same_generators(a: &Alphabet, b: &Alphabet) -> bool {
    a.rank() == b.rank() && a.iter().all(|g| b.contains(g))
}

/// Generators of the retract `G′` whose image under `r ∘ ι` differs from
/// themselves.
pub fn retraction_failures(r: &GroupMap, inclusion: &GroupMap) -> Result<Vec<(Generator, Word)>, HomError> {
    if !same_generators(inclusion.target.alphabet(), r.source.generators()) {
        return Err(HomError::Mismatch("inclusion target is not the retraction source".into()));
    }
    if !same_generators(r.target.alphabet(), inclusion.source.generators()) {
        return Err(HomError::Mismatch("retraction target is not the inclusion source".into()));
    }
    let mut bad = Vec::new();
    for (g, w) in inclusion.images() {
        let back = r.apply(w)?;
        if !r.target.are_equal(&back, &Word::gen(g))? {
            bad.push((g, back));
        }
    }
    Ok(bad)
}

/// `r` and `ι` are homomorphisms and `r ∘ ι` is the identity on `G′`.
pub fn verify_retraction(r: &GroupMap, inclusion: &GroupMap) -> Result<bool, HomError> {
    Ok(r.verify_homomorphism()? && inclusion.verify_homomorphism()? && retraction_failures(r, inclusion)?.is_empty())
}

/// Whether the subgroup generated by the images of `generators` is
/// non-abelian, decided on generator pairs.
pub fn nonabelian_image(m: &GroupMap, generators: &[Word]) -> Result<bool, HomError> {
    let images = generators.iter().map(|w| m.apply(w)).collect::<Result<Vec<_>, _>>()?;
    for (i, x) in images.iter().enumerate() {
        for y in &images[i + 1..] {
            if !m.target.commute(x, y)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn zs() -> Presentation {
        Presentation::parse(&["a", "b", "ap", "bp", "z"], &["a b a^-1 b^-1 ap bp ap^-1 bp^-1"]).unwrap()
    }

    fn f3() -> Presentation {
        Presentation::parse(&["a", "b", "z"], &[]).unwrap()
    }

    #[test]
    fn apply_examples() {
        let h2 = Presentation::parse(&["a", "ap", "z"], &[]).unwrap();
        let r = GroupMap::parse(zs(), Target::new(h2), &[("a", "a"), ("ap", "z ap z^-1")], Fill::Trivial).unwrap();
        assert!(r.apply(&w("a b a^-1 b^-1 ap bp ap^-1 bp^-1")).unwrap().is_identity());

        let id = GroupMap::identity(&zs());
        assert_eq!(id.apply(&w("a b b^-1 z")).unwrap(), w("a z"));

        let r1 = GroupMap::parse(zs(), Target::new(f3()), &[("ap", "b"), ("bp", "a")], Fill::Identity).unwrap();
        assert_eq!(r1.apply(&w("ap bp ap^-1 bp^-1")).unwrap(), w("b a b^-1 a^-1"));
    }

    #[test]
    fn homomorphism_examples() {
        let r1 = GroupMap::parse(zs(), Target::new(f3()), &[("ap", "b"), ("bp", "a")], Fill::Identity).unwrap();
        assert!(r1.verify_homomorphism().unwrap());

        let bad = GroupMap::parse(zs(), Target::new(f3()), &[("ap", "a"), ("bp", "a")], Fill::Identity).unwrap();
        assert!(!bad.verify_homomorphism().unwrap());

        let src = Presentation::parse(&["a", "b", "d1", "d2"], &["a b a^-1 b^-1 d2^-2 d1^-2"]).unwrap();
        let tgt = Presentation::parse(&["d1", "d2"], &[]).unwrap();
        let m = GroupMap::parse(src, Target::new(tgt), &[("a", "d1"), ("b", "d2")], Fill::Identity).unwrap();
        assert!(!m.verify_homomorphism().unwrap());
    }

    #[test]
    fn retraction_examples() {
        let h2 = Presentation::parse(&["a", "w"], &[]).unwrap();
        let iota = GroupMap::parse(h2.clone(), Target::new(zs()), &[("a", "a"), ("w", "z ap z^-1")], Fill::Required).unwrap();
        let r = GroupMap::parse(zs(), Target::new(h2.clone()), &[("a", "a"), ("ap", "w")], Fill::Trivial).unwrap();
        assert!(verify_retraction(&r, &iota).unwrap());

        let id = GroupMap::identity(&h2);
        assert!(verify_retraction(&id, &id).unwrap());

        let h = Presentation::parse(&["a", "z"], &[]).unwrap();
        let iota = GroupMap::identity(&h).retarget(Target::new(zs())).unwrap();
        let r = GroupMap::parse(zs(), Target::new(h), &[("a", "a")], Fill::Trivial).unwrap();
        assert!(!verify_retraction(&r, &iota).unwrap());
    }

    #[test]
    fn nonabelian_examples() {
        let s4 = Presentation::parse(&["h", "a", "b", "c", "x"], &["h^-2 a a b b c c"]).unwrap();
        let hx = Presentation::parse(&["h", "x"], &[]).unwrap();
        let r = GroupMap::parse(s4, Target::new(hx), &[("a", "h"), ("b", "x"), ("c", "x^-1")], Fill::Identity).unwrap();
        assert!(r.verify_homomorphism().unwrap());
        assert!(nonabelian_image(&r, &[w("a"), w("b"), w("c")]).unwrap());

        let r1 = GroupMap::parse(zs(), Target::new(f3()), &[("ap", "b"), ("bp", "a")], Fill::Identity).unwrap();
        assert!(nonabelian_image(&r1, &[w("ap"), w("bp")]).unwrap());

        let p = Presentation::parse(&["a", "b"], &[]).unwrap();
        let q = Presentation::parse(&["x", "y"], &[]).unwrap();
        let m = GroupMap::parse(p, Target::new(q), &[("a", "x x"), ("b", "x^-3")], Fill::Required).unwrap();
        assert!(!nonabelian_image(&m, &[w("a"), w("b")]).unwrap());
    }

    #[test]
    fn adjoin_examples() {
        let h = Target::new(Presentation::parse(&["h"], &[]).unwrap());
        let hx = h.adjoin_free_letter(Generator::named("x")).unwrap();
        assert!(!hx.commute(&w("h"), &w("x")).unwrap());
        assert!(h.adjoin_free_letter(Generator::named("h")).is_err());

        let f2 = Presentation::parse(&["a", "b"], &[]).unwrap();
        let f3 = f2.adjoin_free_letter(Generator::named("c")).unwrap();
        assert_eq!(f3.generators().rank(), 3);
        assert!(f3.is_free());
    }

    #[test]
    fn missing_and_extra_images() {
        let p = Presentation::parse(&["a", "b"], &[]).unwrap();
        let t = Target::new(p.clone());
        assert!(matches!(
            GroupMap::parse(p.clone(), t.clone(), &[("a", "a")], Fill::Required),
            Err(HomError::MissingImage(_))
        ));
        assert!(matches!(
            GroupMap::parse(p.clone(), t.clone(), &[("c", "a")], Fill::Trivial),
            Err(HomError::ExtraImage(_))
        ));
        assert!(GroupMap::parse(p, t, &[("a", "q")], Fill::Trivial).is_err());
    }

    #[test]
    fn undecidable_target_reported() {
        let p = Presentation::parse(&["a", "b"], &["a b a^-1 b^-1", "a a a"]).unwrap();
        let t = Target::new(p);
        assert!(t.is_trivial(&w("a b a^-1 b^-1")).unwrap());
        assert!(matches!(t.is_trivial(&w("a")), Err(HomError::Undecidable(_))));
    }
}
