//! Signed-generator alphabets, freely reduced words and cyclic words.
//!
//! Generator names are interned process-wide so that letters are `Copy` and
//! comparisons in the rewriting loops are integer comparisons. Words are kept
//! freely reduced at all times: every constructor reduces.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;
use std::str::FromStr;
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::RwLock;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("malformed word token `{0}`")]
    Syntax(String),
    #[error("generator `{0}` is not in the alphabet")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}` in alphabet")]
    DuplicateGenerator(String),
}

#[derive(Default)]
struct Interner {
    ids: HashMap<Arc<str>, u32>,
    names: Vec<Arc<str>>,
}

static INTERNER: Lazy<RwLock<Interner>> = Lazy::new(|| RwLock::new(Interner::default()));

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An interned generator name.
///
/// The ordering is by interning order, which is stable within a process but
/// not across processes; sort by [`Generator::name`] when output order matters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(u32);

impl Generator {
    pub fn new(name: &str) -> Result<Self, WordError> {
        if !valid_name(name) {
            return Err(WordError::InvalidName(name.to_string()));
        }
        if let Some(&id) = INTERNER.read().ids.get(name) {
            return Ok(Generator(id));
        }
        let mut interner = INTERNER.write();
        if let Some(&id) = interner.ids.get(name) {
            return Ok(Generator(id));
        }
        let id = interner.names.len() as u32;
        let name: Arc<str> = Arc::from(name);
        interner.names.push(name.clone());
        interner.ids.insert(name, id);
        Ok(Generator(id))
    }

    /// Interns a name known to be valid. Panics on an invalid identifier.
    pub fn named(name: &str) -> Self {
        Self::new(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn name(&self) -> Arc<str> {
        INTERNER.read().names[self.0 as usize].clone()
    }

    pub fn letter(self) -> Letter {
        Letter { gen: self, inverse: false }
    }

    pub fn inverse_letter(self) -> Letter {
        Letter { gen: self, inverse: true }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let name = String::deserialize(d)?;
        Generator::new(&name).map_err(serde::de::Error::custom)
    }
}

/// A generator with a sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn inv(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

/// Freely reduces a raw letter sequence.
pub fn reduce(raw: &[Letter]) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(raw.len());
    for &l in raw {
        match out.last() {
            Some(&last) if last.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Word(out)
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let raw: Vec<Letter> = letters.into_iter().collect();
        reduce(&raw)
    }

    pub fn gen(g: Generator) -> Self {
        Word(vec![g.letter()])
    }

    /// Parses the text syntax without checking an alphabet.
    ///
    /// Symbols are whitespace separated; `a^-1` is an inverse, `a^k` a power,
    /// and `1` the identity.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        let mut raw = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let k: i64 = e.parse().map_err(|_| WordError::Syntax(token.to_string()))?;
                    if k == 0 {
                        return Err(WordError::Syntax(token.to_string()));
                    }
                    (n, k)
                }
                None => (token, 1),
            };
            let g = Generator::new(name).map_err(|_| {
                if name.is_empty() {
                    WordError::Syntax(token.to_string())
                } else {
                    WordError::InvalidName(name.to_string())
                }
            })?;
            let letter = if exp < 0 { g.inverse_letter() } else { g.letter() };
            for _ in 0..exp.unsigned_abs() {
                raw.push(letter);
            }
        }
        Ok(reduce(&raw))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn compose(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &l in &other.0 {
            match out.last() {
                Some(&last) if last.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word(out)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// `g · w · g⁻¹`.
    pub fn conjugate(&self, g: &Word) -> Word {
        g.compose(self).compose(&g.inverse())
    }

    /// `x · y · x⁻¹ · y⁻¹`.
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.compose(y).compose(&x.inverse()).compose(&y.inverse())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.0.iter().map(|l| l.gen)
    }

    pub fn exponent_sum(&self, g: Generator) -> i64 {
        self.0.iter().filter(|l| l.gen == g).map(|l| l.sign()).sum()
    }

    pub fn occurrences(&self, g: Generator) -> usize {
        self.0.iter().filter(|l| l.gen == g).count()
    }

    /// Splits off the longest `c` with `self = c · core · c⁻¹`.
    pub fn cyclic_reduce(&self) -> (CyclicWord, Word) {
        let n = self.0.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.0[k].cancels(self.0[n - 1 - k]) {
            k += 1;
        }
        let core = Word(self.0[k..n - k].to_vec());
        let conj = Word(self.0[..k].to_vec());
        (CyclicWord { rep: core }, conj)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(&f), Some(&l)) if self.0.len() > 1 => !f.cancels(l),
            _ => true,
        }
    }

    /// Replaces each generator by an image word, then reduces.
    pub fn substitute<F>(&self, mut image: F) -> Word
    where
        F: FnMut(Generator) -> Option<Word>,
    {
        let mut raw = Vec::with_capacity(self.0.len());
        for l in &self.0 {
            match image(l.gen) {
                Some(w) if l.inverse => raw.extend(w.inverse().0),
                Some(w) => raw.extend(w.0),
                None => raw.push(*l),
            }
        }
        reduce(&raw)
    }

    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>) -> Word {
        debug_assert!(letters.windows(2).all(|p| !p[0].cancels(p[1])));
        Word(letters)
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.compose(rhs)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Word::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// A conjugacy class representative: a cyclically reduced word, compared up to
/// rotation.
#[derive(Clone)]
pub struct CyclicWord {
    rep: Word,
}

impl CyclicWord {
    pub fn new(w: &Word) -> Self {
        w.cyclic_reduce().0
    }

    pub fn representative(&self) -> &Word {
        &self.rep
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    pub fn rotation(&self, k: usize) -> Word {
        let n = self.rep.len();
        if n == 0 {
            return Word::identity();
        }
        let k = k % n;
        let mut v = Vec::with_capacity(n);
        v.extend_from_slice(&self.rep.0[k..]);
        v.extend_from_slice(&self.rep.0[..k]);
        Word::from_reduced_unchecked(v)
    }

    pub fn rotations(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.rep.len().max(1)).map(move |k| self.rotation(k))
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord { rep: self.rep.inverse() }
    }

    /// The least rotation under the (process-local) letter order.
    pub fn canonical(&self) -> Word {
        let n = self.rep.len();
        if n == 0 {
            return Word::identity();
        }
        let s = &self.rep.0;
        let mut best = 0;
        for k in 1..n {
            for i in 0..n {
                let a = s[(k + i) % n];
                let b = s[(best + i) % n];
                if a != b {
                    if a < b {
                        best = k;
                    }
                    break;
                }
            }
        }
        self.rotation(best)
    }

    /// Equality up to rotation or inversion.
    pub fn same_up_to_inverse(&self, other: &CyclicWord) -> bool {
        self == other || *self == other.inverse()
    }
}

impl PartialEq for CyclicWord {
    fn eq(&self, other: &Self) -> bool {
        if self.rep.len() != other.rep.len() {
            return false;
        }
        let n = self.rep.len();
        if n == 0 {
            return true;
        }
        let a = &self.rep.0;
        let b = &other.rep.0;
        (0..n).any(|k| (0..n).all(|i| a[(k + i) % n] == b[i]))
    }
}

impl Eq for CyclicWord {}

impl Hash for CyclicWord {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.rep)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// `w = conjugator · (A B C A⁻¹ B⁻¹ C⁻¹) · conjugator⁻¹`, with the bracketed
/// product reduced as written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WicksWitness {
    pub a: Word,
    pub b: Word,
    pub c: Word,
    pub conjugator: Word,
}

impl WicksWitness {
    /// A pair `(x, y)` with `w = [x, y]`.
    pub fn commutator_pair(&self) -> (Word, Word) {
        let x = self.a.compose(&self.b);
        let y = self.c.compose(&self.a.inverse());
        (x.conjugate(&self.conjugator), y.conjugate(&self.conjugator))
    }
}

/// Decides whether `w` is a single commutator in the free group on its
/// letters, returning a Wicks-form witness when it is.
pub fn is_genus_one_commutator(w: &Word) -> Option<WicksWitness> {
    let (cyc, conj0) = w.cyclic_reduce();
    let n = cyc.len();
    if n == 0 {
        return Some(WicksWitness {
            a: Word::identity(),
            b: Word::identity(),
            c: Word::identity(),
            conjugator: conj0,
        });
    }
    if n % 2 == 1 {
        return None;
    }
    let half = n / 2;
    let s = &cyc.rep.0;
    for rot in 0..n {
        let at = |i: usize| s[(rot + i) % n];
        for la in 0..=half {
            for lb in 0..=(half - la) {
                let lc = half - la - lb;
                // second half must read A⁻¹ B⁻¹ C⁻¹
                let mut pos = half;
                let mut ok = true;
                for (start, len) in [(0, la), (la, lb), (la + lb, lc)] {
                    for i in 0..len {
                        if at(pos + i) != at(start + len - 1 - i).inv() {
                            ok = false;
                            break;
                        }
                    }
                    if !ok {
                        break;
                    }
                    pos += len;
                }
                if !ok {
                    continue;
                }
                let seg = |start: usize, len: usize| {
                    Word::from_reduced_unchecked((start..start + len).map(at).collect())
                };
                // the rotation starting at `rot` equals u⁻¹ · cyc · u with
                // u the first `rot` letters of the representative
                let shift = Word::from_reduced_unchecked(s[..rot].to_vec());
                return Some(WicksWitness {
                    a: seg(0, la),
                    b: seg(la, lb),
                    c: seg(la + lb, lc),
                    conjugator: conj0.compose(&shift),
                });
            }
        }
    }
    None
}

/// An ordered set of generators.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    gens: Vec<Generator>,
    set: HashSet<Generator>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = Generator>>(gens: I) -> Result<Self, WordError> {
        let mut a = Alphabet::default();
        for g in gens {
            a.push(g)?;
        }
        Ok(a)
    }

    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self, WordError> {
        let gens = names
            .iter()
            .map(|n| Generator::new(n.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(gens)
    }

    pub fn push(&mut self, g: Generator) -> Result<(), WordError> {
        if !self.set.insert(g) {
            return Err(WordError::DuplicateGenerator(g.name().to_string()));
        }
        self.gens.push(g);
        Ok(())
    }

    pub fn contains(&self, g: Generator) -> bool {
        self.set.contains(&g)
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn iter(&self) -> impl Iterator<Item = Generator> + '_ {
        self.gens.iter().copied()
    }

    pub fn index_of(&self, g: Generator) -> Option<usize> {
        self.gens.iter().position(|&x| x == g)
    }

    /// Every generator of `w` belongs to this alphabet.
    pub fn check(&self, w: &Word) -> Result<(), WordError> {
        match w.generators().find(|g| !self.contains(*g)) {
            Some(g) => Err(WordError::UnknownGenerator(g.name().to_string())),
            None => Ok(()),
        }
    }

    /// Freely reduces a raw sequence after checking membership.
    pub fn reduce(&self, raw: &[Letter]) -> Result<Word, WordError> {
        if let Some(l) = raw.iter().find(|l| !self.contains(l.gen)) {
            return Err(WordError::UnknownGenerator(l.gen.name().to_string()));
        }
        Ok(reduce(raw))
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        let w = Word::parse(text)?;
        self.check(&w)?;
        Ok(w)
    }

    pub fn is_disjoint(&self, other: &Alphabet) -> bool {
        self.gens.iter().all(|g| !other.contains(*g))
    }

    /// Disjoint union, failing on a shared generator.
    pub fn disjoint_union(&self, other: &Alphabet) -> Result<Alphabet, WordError> {
        let mut out = self.clone();
        for g in other.iter() {
            out.push(g)?;
        }
        Ok(out)
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    /// Repeatedly scans for an adjacent inverse pair and deletes it.
    fn naive_reduce(raw: &[Letter]) -> Vec<Letter> {
        let mut v = raw.to_vec();
        loop {
            let pos = v.windows(2).position(|p| p[0].cancels(p[1]));
            match pos {
                Some(i) => {
                    v.drain(i..i + 2);
                }
                None => return v,
            }
        }
    }

    fn raw(s: &str) -> Vec<Letter> {
        s.split_whitespace()
            .map(|t| match t.strip_suffix("^-1") {
                Some(n) => Generator::named(n).inverse_letter(),
                None => Generator::named(t).letter(),
            })
            .collect()
    }

    #[test]
    fn reduce_examples() {
        assert!(reduce(&raw("a a^-1")).is_identity());
        assert_eq!(reduce(&raw("a b b^-1 a")), w("a a"));
        let r = raw("b a^-1 a b^-1 c");
        assert_eq!(naive_reduce(&r), w("c").letters());
        assert_eq!(reduce(&r), w("c"));
    }

    #[test]
    fn reduce_rejects_foreign_letters() {
        let alpha = Alphabet::from_names(&["a", "b"]).unwrap();
        assert_eq!(
            alpha.reduce(&raw("a c")),
            Err(WordError::UnknownGenerator("c".into()))
        );
        assert!(alpha.parse_word("a b^-1").is_ok());
        assert!(alpha.parse_word("a q").is_err());
    }

    #[test]
    fn group_operations() {
        let (a, b) = (w("a"), w("b"));
        assert_eq!(Word::commutator(&a, &b), w("a b a^-1 b^-1"));
        assert_eq!(w("ap").conjugate(&w("z")), w("z ap z^-1"));
        let prod = Word::commutator(&a, &b).compose(&Word::commutator(&b, &a));
        assert!(prod.is_identity());
        assert_eq!(w("a b c").inverse().inverse(), w("a b c"));
    }

    #[test]
    fn parse_syntax() {
        assert_eq!(w("h^2 a^-2"), w("h h a^-1 a^-1"));
        assert!(w("1").is_identity());
        assert_eq!(w("1").to_string(), "1");
        assert!(Word::parse("a^0").is_err());
        assert!(Word::parse("a'").is_err());
        assert!(Word::parse("^-1").is_err());
        assert_eq!(w("a b^-1").to_string(), "a b^-1");
    }

    #[test]
    fn cyclic_reduce_examples() {
        let (c, g) = w("b a b^-1").cyclic_reduce();
        assert_eq!(c.representative(), &w("a"));
        assert_eq!(g, w("b"));

        let comm = w("a b a^-1 b^-1");
        let (c, g) = comm.cyclic_reduce();
        assert_eq!(c.representative(), &comm);
        assert!(g.is_identity());

        let x = w("c a a c^-1");
        let (c, g) = x.cyclic_reduce();
        assert_eq!(c.representative(), &w("a a"));
        assert_eq!(g, w("c"));
        assert_eq!(c.representative().conjugate(&g), x);
    }

    #[test]
    fn cyclic_word_equality_is_rotation() {
        let a = CyclicWord::new(&w("a b c"));
        let b = CyclicWord::new(&w("c a b"));
        let c = CyclicWord::new(&w("a c b"));
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.canonical(), b.canonical());
        assert!(a.same_up_to_inverse(&CyclicWord::new(&w("b^-1 a^-1 c^-1"))));
    }

    #[test]
    fn wicks_examples() {
        let wit = is_genus_one_commutator(&w("a b a^-1 b^-1")).expect("commutator");
        let (x, y) = wit.commutator_pair();
        assert_eq!(Word::commutator(&x, &y), w("a b a^-1 b^-1"));
        assert!(is_genus_one_commutator(&w("d1 d1 d2 d2")).is_none());
        assert!(is_genus_one_commutator(&w("a")).is_none());
        assert!(is_genus_one_commutator(&Word::identity()).is_some());
    }

    #[test]
    fn wicks_witness_reconstructs_conjugated_input() {
        let x = w("a b");
        let y = w("b a^-1 b");
        let g = w("c a");
        let target = Word::commutator(&x, &y).conjugate(&g);
        let wit = is_genus_one_commutator(&target).expect("commutator");
        let (p, q) = wit.commutator_pair();
        assert_eq!(Word::commutator(&p, &q), target);
    }

    #[test]
    fn alphabet_rejects_duplicates() {
        assert!(Alphabet::from_names(&["a", "a"]).is_err());
        let a = Alphabet::from_names(&["a", "b"]).unwrap();
        let b = Alphabet::from_names(&["b"]).unwrap();
        assert!(a.disjoint_union(&b).is_err());
    }
}
