//! Presentations and word-problem solvers.
//!
//! Four model classes are supported: free groups, infinite cyclic groups,
//! presentations satisfying the metric condition C'(1/6) (solved by Dehn's
//! algorithm) and free products of these. Models refuse to be built for
//! presentations outside these classes rather than guessing.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::word::{Alphabet, CyclicWord, Generator, Letter, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("word uses generator `{0}` outside the model's alphabet")]
    Alphabet(String),
    #[error("relator {0} is trivial")]
    TrivialRelator(String),
    #[error("unsupported model: {0}")]
    Unsupported(String),
    #[error("presentation fails C'(1/6): piece length {piece} with relator length {relator}")]
    NotSmallCancellation { piece: usize, relator: usize },
    #[error("not a free product model")]
    NotFreeProduct,
}

/// A finite presentation `⟨ generators | relators ⟩`.
#[derive(Clone)]
pub struct Presentation {
    generators: Alphabet,
    relators: Vec<CyclicWord>,
}

impl Presentation {
    pub fn new(generators: Alphabet, relators: Vec<Word>) -> Result<Self, ModelError> {
        let mut rels = Vec::with_capacity(relators.len());
        for r in relators {
            generators.check(&r)?;
            let c = CyclicWord::new(&r);
            if c.is_empty() {
                return Err(ModelError::TrivialRelator(r.to_string()));
            }
            rels.push(c);
        }
        Ok(Presentation { generators, relators: rels })
    }

    pub fn free(generators: Alphabet) -> Self {
        Presentation { generators, relators: Vec::new() }
    }

    /// Builds from generator names and relator texts.
    pub fn parse(names: &[&str], relators: &[&str]) -> Result<Self, ModelError> {
        let generators = Alphabet::from_names(names)?;
        let rels = relators
            .iter()
            .map(|r| generators.parse_word(r))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(generators, rels)
    }

    pub fn generators(&self) -> &Alphabet {
        &self.generators
    }

    pub fn relators(&self) -> &[CyclicWord] {
        &self.relators
    }

    pub fn is_free(&self) -> bool {
        self.relators.is_empty()
    }

    /// Same generator set and the same relators up to rotation, inversion
    /// and order.
    pub fn same_as(&self, other: &Presentation) -> bool {
        if self.generators.rank() != other.generators.rank()
            || !self.generators.iter().all(|g| other.generators.contains(g))
            || self.relators.len() != other.relators.len()
        {
            return false;
        }
        let mut used = vec![false; other.relators.len()];
        'outer: for r in &self.relators {
            for (i, s) in other.relators.iter().enumerate() {
                if !used[i] && r.same_up_to_inverse(s) {
                    used[i] = true;
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    pub fn has_relator(&self, w: &Word) -> bool {
        let c = CyclicWord::new(w);
        self.relators.iter().any(|r| r.same_up_to_inverse(&c))
    }

    /// `self ∗ ⟨g⟩`.
    pub fn adjoin_free_letter(&self, g: Generator) -> Result<Self, ModelError> {
        let mut generators = self.generators.clone();
        generators.push(g)?;
        Ok(Presentation { generators, relators: self.relators.clone() })
    }

    /// Presentation of the free product, requiring disjoint alphabets.
    pub fn free_product(&self, other: &Presentation) -> Result<Self, ModelError> {
        let generators = self.generators.disjoint_union(&other.generators)?;
        let mut relators = self.relators.clone();
        relators.extend(other.relators.iter().cloned());
        Ok(Presentation { generators, relators })
    }

    /// Splits into free factors by relator support: generators sharing a
    /// relator (transitively) land in the same factor. Generators occurring
    /// in no relator are returned separately.
    pub fn relator_components(&self) -> (Vec<Presentation>, Vec<Generator>) {
        let gens = self.generators.generators();
        let index: HashMap<Generator, usize> = gens.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let mut parent: Vec<usize> = (0..gens.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let mut touched = vec![false; gens.len()];
        for r in &self.relators {
            let ids: Vec<usize> = r.representative().generators().map(|g| index[&g]).collect();
            for &i in &ids {
                touched[i] = true;
            }
            for w in ids.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        let mut order: Vec<usize> = Vec::new();
        let mut members: HashMap<usize, Vec<Generator>> = HashMap::new();
        let mut free = Vec::new();
        for (i, &g) in gens.iter().enumerate() {
            if !touched[i] {
                free.push(g);
                continue;
            }
            let root = find(&mut parent, i);
            if !members.contains_key(&root) {
                order.push(root);
            }
            members.entry(root).or_default().push(g);
        }
        let comps = order
            .into_iter()
            .map(|root| {
                let alpha = Alphabet::new(members[&root].iter().copied()).expect("distinct");
                let rels = self
                    .relators
                    .iter()
                    .filter(|r| r.representative().generators().next().map(|g| alpha.contains(g)).unwrap_or(false))
                    .cloned()
                    .collect();
                Presentation { generators: alpha, relators: rels }
            })
            .collect();
        (comps, free)
    }

    /// Tietze elimination: while some relator contains a generator exactly
    /// once, solve for that generator (the latest such in generator order)
    /// and substitute it away.
    pub fn eliminate_generators(&self) -> Elimination {
        let mut gens: Vec<Generator> = self.generators.generators().to_vec();
        let mut rels: Vec<Word> = self.relators.iter().map(|r| r.representative().clone()).collect();
        let mut substitution: Vec<(Generator, Word)> = Vec::new();
        loop {
            let mut pick = None;
            'search: for (ri, r) in rels.iter().enumerate() {
                for &g in gens.iter().rev() {
                    if r.occurrences(g) == 1 {
                        pick = Some((ri, g));
                        break 'search;
                    }
                }
            }
            let Some((ri, g)) = pick else { break };
            let r = rels.remove(ri);
            let pos = r.letters().iter().position(|l| l.gen == g).expect("occurs once");
            let letter = r.letters()[pos];
            // r = u · g^e · v  ⇒  g^e = u⁻¹ v⁻¹
            let u = Word::from_letters(r.letters()[..pos].iter().copied());
            let v = Word::from_letters(r.letters()[pos + 1..].iter().copied());
            let solved = u.inverse().compose(&v.inverse());
            let value = if letter.inverse { solved.inverse() } else { solved };
            let sub = |w: &Word| w.substitute(|x| (x == g).then(|| value.clone()));
            rels = rels
                .iter()
                .map(|w| CyclicWord::new(&sub(w)).representative().clone())
                .filter(|w| !w.is_empty())
                .collect();
            for (_, img) in substitution.iter_mut() {
                *img = sub(img);
            }
            substitution.push((g, value));
            gens.retain(|&x| x != g);
        }
        let generators = Alphabet::new(gens).expect("subset of distinct generators");
        let relators = rels.iter().map(CyclicWord::new).collect();
        Elimination {
            presentation: Presentation { generators, relators },
            substitution,
        }
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.relators == other.relators
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} |", self.generators)?;
        for (i, r) in self.relators.iter().enumerate() {
            write!(f, "{} {}", if i > 0 { "," } else { "" }, r)?;
        }
        write!(f, " >")
    }
}

/// Result of [`Presentation::eliminate_generators`].
#[derive(Debug, Clone)]
pub struct Elimination {
    pub presentation: Presentation,
    /// Each eliminated generator with its value over the surviving ones.
    pub substitution: Vec<(Generator, Word)>,
}

impl Elimination {
    /// Rewrites a word over the original generators into the surviving ones.
    pub fn rewrite(&self, w: &Word) -> Word {
        w.substitute(|g| {
            self.substitution
                .iter()
                .find(|(x, _)| *x == g)
                .map(|(_, img)| img.clone())
        })
    }
}

/// All cyclic rotations of the single relator and of its inverse,
/// deduplicated.
pub fn symmetrize(p: &Presentation) -> Result<Vec<Word>, ModelError> {
    match p.relators() {
        [r] => Ok(symmetrized_set(std::slice::from_ref(r))),
        rels => Err(ModelError::Unsupported(format!(
            "symmetrisation needs exactly one relator, found {}",
            rels.len()
        ))),
    }
}

fn symmetrized_set(relators: &[CyclicWord]) -> Vec<Word> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in relators {
        for c in [r.clone(), r.inverse()] {
            for rot in c.rotations() {
                if seen.insert(rot.clone()) {
                    out.push(rot);
                }
            }
        }
    }
    out
}

fn common_prefix(a: &[Letter], b: &[Letter]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Longest common prefix of two distinct members of a symmetrised set.
pub fn max_piece_length(symmetrized: &[Word]) -> usize {
    let mut best = 0;
    for (i, a) in symmetrized.iter().enumerate() {
        for b in &symmetrized[i + 1..] {
            if a != b {
                best = best.max(common_prefix(a.letters(), b.letters()));
            }
        }
    }
    best
}

fn is_proper_power(r: &Word) -> bool {
    let s = r.letters();
    let n = s.len();
    (1..n).any(|p| n.is_multiple_of(p) && (0..n).all(|i| s[i] == s[i % p]))
}

/// The single relator is not a proper power and every piece is shorter than
/// a sixth of it.
pub fn check_c_prime_sixth(p: &Presentation) -> Result<bool, ModelError> {
    let sym = symmetrize(p)?;
    let r = p.relators()[0].representative();
    if is_proper_power(r) {
        return Ok(false);
    }
    Ok(6 * max_piece_length(&sym) < r.len())
}

/// One-relator presentation verified to satisfy C'(1/6).
#[derive(Debug, Clone)]
pub struct SmallCancellationModel {
    presentation: Presentation,
    symmetrized: Vec<Word>,
    max_piece: usize,
    relator_len: usize,
}

impl SmallCancellationModel {
    pub fn new(presentation: Presentation) -> Result<Self, ModelError> {
        let symmetrized = symmetrize(&presentation)?;
        let relator = presentation.relators()[0].representative().clone();
        let max_piece = max_piece_length(&symmetrized);
        if !check_c_prime_sixth(&presentation)? {
            return Err(ModelError::NotSmallCancellation { piece: max_piece, relator: relator.len() });
        }
        Ok(SmallCancellationModel {
            relator_len: relator.len(),
            presentation,
            symmetrized,
            max_piece,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn symmetrized(&self) -> &[Word] {
        &self.symmetrized
    }

    pub fn max_piece(&self) -> usize {
        self.max_piece
    }

    /// Runs Dehn's algorithm to completion, returning the final word. Each
    /// step replaces a subword `s` with `s t` a symmetrised relator and
    /// `|s| > |r|/2` by `t⁻¹`.
    pub fn dehn_reduce(&self, w: &Word) -> Word {
        let mut cur = w.clone();
        while let Some(next) = self.dehn_step(&cur) {
            debug_assert!(next.len() < cur.len());
            cur = next;
        }
        cur
    }

    /// A single Dehn rewrite, or `None` when no long relator fragment occurs.
    pub fn dehn_step(&self, w: &Word) -> Option<Word> {
        let s = w.letters();
        let len = self.relator_len;
        for p in 0..s.len() {
            for r in &self.symmetrized {
                let rl = r.letters();
                if rl[0] != s[p] {
                    continue;
                }
                let l = common_prefix(&s[p..], rl);
                if 2 * l > len {
                    let mut raw = Vec::with_capacity(s.len());
                    raw.extend_from_slice(&s[..p]);
                    raw.extend(rl[l..].iter().rev().map(|x| x.inv()));
                    raw.extend_from_slice(&s[p + l..]);
                    return Some(crate::word::reduce(&raw));
                }
            }
        }
        None
    }
}

/// A group together with a decision procedure for its word problem.
#[derive(Debug, Clone)]
pub enum GroupModel {
    Free(Alphabet),
    InfiniteCyclic(Generator),
    SmallCancellation(SmallCancellationModel),
    FreeProduct(Vec<GroupModel>),
}

impl GroupModel {
    pub fn free(alphabet: Alphabet) -> Self {
        GroupModel::Free(alphabet)
    }

    pub fn free_product(factors: Vec<GroupModel>) -> Result<Self, ModelError> {
        let mut seen = Alphabet::default();
        for f in &factors {
            seen = seen
                .disjoint_union(&f.alphabet())
                .map_err(|_| ModelError::Unsupported("free product factors share generators".into()))?;
        }
        Ok(GroupModel::FreeProduct(factors))
    }

    /// Classifies a presentation: relator-support components become
    /// C'(1/6) factors, unused generators a free (or cyclic) factor.
    pub fn from_presentation(p: &Presentation) -> Result<Self, ModelError> {
        let (comps, free) = p.relator_components();
        let mut factors = Vec::new();
        match free.len() {
            0 => {}
            1 if comps.is_empty() => return Ok(GroupModel::InfiniteCyclic(free[0])),
            1 => factors.push(GroupModel::InfiniteCyclic(free[0])),
            _ => factors.push(GroupModel::Free(Alphabet::new(free)?)),
        }
        for c in comps {
            if c.relators().len() != 1 {
                return Err(ModelError::Unsupported(format!(
                    "component {} has {} relators",
                    c,
                    c.relators().len()
                )));
            }
            factors.push(GroupModel::SmallCancellation(SmallCancellationModel::new(c)?));
        }
        match factors.len() {
            0 => Ok(GroupModel::Free(Alphabet::default())),
            1 => Ok(factors.pop().expect("one factor")),
            _ => GroupModel::free_product(factors),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            GroupModel::Free(a) => a.clone(),
            GroupModel::InfiniteCyclic(g) => Alphabet::new([*g]).expect("single"),
            GroupModel::SmallCancellation(m) => m.presentation.generators().clone(),
            GroupModel::FreeProduct(fs) => {
                let mut out = Alphabet::default();
                for f in fs {
                    for g in f.alphabet().iter() {
                        let _ = out.push(g);
                    }
                }
                out
            }
        }
    }

    /// A presentation of the modelled group.
    pub fn presentation(&self) -> Presentation {
        match self {
            GroupModel::Free(a) => Presentation::free(a.clone()),
            GroupModel::InfiniteCyclic(g) => Presentation::free(Alphabet::new([*g]).expect("single")),
            GroupModel::SmallCancellation(m) => m.presentation.clone(),
            GroupModel::FreeProduct(fs) => {
                let mut out = Presentation::free(Alphabet::default());
                for f in fs {
                    out = out.free_product(&f.presentation()).expect("disjoint factors");
                }
                out
            }
        }
    }

    pub fn is_infinite_cyclic(&self) -> bool {
        match self {
            GroupModel::InfiniteCyclic(_) => true,
            GroupModel::Free(a) => a.rank() == 1,
            GroupModel::FreeProduct(fs) => fs.len() == 1 && fs[0].is_infinite_cyclic(),
            GroupModel::SmallCancellation(_) => false,
        }
    }

    fn check(&self, w: &Word) -> Result<(), ModelError> {
        let alpha = self.alphabet();
        match w.generators().find(|g| !alpha.contains(*g)) {
            Some(g) => Err(ModelError::Alphabet(g.name().to_string())),
            None => Ok(()),
        }
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool, ModelError> {
        self.check(w)?;
        Ok(self.trivial_unchecked(w))
    }

    fn trivial_unchecked(&self, w: &Word) -> bool {
        match self {
            GroupModel::Free(_) => w.is_identity(),
            GroupModel::InfiniteCyclic(g) => w.exponent_sum(*g) == 0,
            GroupModel::SmallCancellation(m) => m.dehn_reduce(w).is_identity(),
            GroupModel::FreeProduct(fs) => normal_form(fs, w).is_empty(),
        }
    }

    pub fn are_equal(&self, w1: &Word, w2: &Word) -> Result<bool, ModelError> {
        self.is_trivial(&w1.compose(&w2.inverse()))
    }

    pub fn commute(&self, w1: &Word, w2: &Word) -> Result<bool, ModelError> {
        self.is_trivial(&Word::commutator(w1, w2))
    }

    /// Alternating syllables `(factor index, word)`, each nontrivial in its
    /// factor.
    pub fn free_product_normal_form(&self, w: &Word) -> Result<Vec<(usize, Word)>, ModelError> {
        match self {
            GroupModel::FreeProduct(fs) => {
                self.check(w)?;
                Ok(normal_form(fs, w))
            }
            _ => Err(ModelError::NotFreeProduct),
        }
    }

    /// `self ∗ ⟨g⟩`, flattening into an existing free product.
    pub fn adjoin_free_letter(&self, g: Generator) -> Result<Self, ModelError> {
        if self.alphabet().contains(g) {
            return Err(ModelError::Word(WordError::DuplicateGenerator(g.name().to_string())));
        }
        Ok(match self {
            GroupModel::Free(a) => {
                let mut a = a.clone();
                a.push(g)?;
                GroupModel::Free(a)
            }
            GroupModel::FreeProduct(fs) => {
                let mut fs = fs.clone();
                fs.push(GroupModel::InfiniteCyclic(g));
                GroupModel::FreeProduct(fs)
            }
            other => GroupModel::FreeProduct(vec![other.clone(), GroupModel::InfiniteCyclic(g)]),
        })
    }

    /// Short human-readable class name.
    pub fn describe(&self) -> String {
        match self {
            GroupModel::Free(a) => format!("free group of rank {} on {{{}}}", a.rank(), a),
            GroupModel::InfiniteCyclic(g) => format!("infinite cyclic <{g}>"),
            GroupModel::SmallCancellation(m) => {
                format!("C'(1/6) one-relator {} (max piece {})", m.presentation, m.max_piece)
            }
            GroupModel::FreeProduct(fs) => {
                let parts: Vec<String> = fs.iter().map(|f| f.describe()).collect();
                format!("free product [{}]", parts.join(" * "))
            }
        }
    }
}

fn normal_form(factors: &[GroupModel], w: &Word) -> Vec<(usize, Word)> {
    let owner: HashMap<Generator, usize> = factors
        .iter()
        .enumerate()
        .flat_map(|(i, f)| f.alphabet().generators().iter().map(move |&g| (g, i)).collect::<Vec<_>>())
        .collect();
    let mut stack: Vec<(usize, Word)> = Vec::new();
    let letters = w.letters();
    let mut start = 0;
    while start < letters.len() {
        let f = owner[&letters[start].gen];
        let mut end = start + 1;
        while end < letters.len() && owner[&letters[end].gen] == f {
            end += 1;
        }
        let seg = Word::from_letters(letters[start..end].iter().copied());
        start = end;
        match stack.last_mut() {
            Some((top, word)) if *top == f => {
                let merged = word.compose(&seg);
                if factors[f].trivial_unchecked(&merged) {
                    stack.pop();
                } else {
                    *word = merged;
                }
            }
            _ => {
                if !factors[f].trivial_unchecked(&seg) {
                    stack.push((f, seg));
                }
            }
        }
    }
    stack
}

impl fmt::Display for GroupModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn s4() -> Presentation {
        Presentation::parse(&["d1", "d2", "d3", "d4"], &["d1 d1 d2 d2 d3 d3 d4 d4"]).unwrap()
    }

    fn genus2() -> Presentation {
        Presentation::parse(&["a1", "a2", "a3", "a4"], &["a1 a2 a1^-1 a2^-1 a3 a4 a3^-1 a4^-1"]).unwrap()
    }

    /// Prefix pairs over every rotation of r and r⁻¹ (with repetition).
    fn brute_force_piece(r: &Word) -> usize {
        let c = CyclicWord::new(r);
        let mut all: Vec<Word> = c.rotations().collect();
        all.extend(c.inverse().rotations());
        let mut best = 0;
        for a in &all {
            for b in &all {
                if a != b {
                    let l = a.letters().iter().zip(b.letters()).take_while(|(x, y)| x == y).count();
                    best = best.max(l);
                }
            }
        }
        best
    }

    #[test]
    fn symmetrize_counts() {
        let comm = Presentation::parse(&["a", "b"], &["a b a^-1 b^-1"]).unwrap();
        assert_eq!(symmetrize(&comm).unwrap().len(), 8);
        assert_eq!(symmetrize(&s4()).unwrap().len(), 16);
        let aa = Presentation::parse(&["a"], &["a a"]).unwrap();
        let sym = symmetrize(&aa).unwrap();
        assert_eq!(sym.len(), 2);
        assert!(sym.contains(&w("a a")) && sym.contains(&w("a^-1 a^-1")));
        let two = Presentation::parse(&["a", "b"], &["a a", "b b"]).unwrap();
        assert!(matches!(symmetrize(&two), Err(ModelError::Unsupported(_))));
    }

    #[test]
    fn pieces_and_small_cancellation() {
        for p in [genus2(), s4()] {
            let sym = symmetrize(&p).unwrap();
            let r = p.relators()[0].representative();
            assert_eq!(brute_force_piece(r), 1);
            assert_eq!(max_piece_length(&sym), 1);
            assert!(check_c_prime_sixth(&p).unwrap());
        }
        let aa = Presentation::parse(&["a"], &["a a"]).unwrap();
        assert!(!check_c_prime_sixth(&aa).unwrap());
        assert!(SmallCancellationModel::new(aa).is_err());
        // the torus relator has pieces of length 1 but length 4 < 6
        let torus = Presentation::parse(&["a", "b"], &["a b a^-1 b^-1"]).unwrap();
        assert!(!check_c_prime_sixth(&torus).unwrap());
    }

    #[test]
    fn trivial_examples() {
        let m = GroupModel::from_presentation(&s4()).unwrap();
        assert!(m.is_trivial(&w("d1 d1 d2 d2 d3 d3 d4 d4")).unwrap());
        assert!(!m.is_trivial(&w("d1 d1 d2 d2")).unwrap());
        assert!(matches!(m.is_trivial(&w("q")), Err(ModelError::Alphabet(_))));

        let hx = GroupModel::free_product(vec![
            GroupModel::InfiniteCyclic(Generator::named("h")),
            GroupModel::InfiniteCyclic(Generator::named("x")),
        ])
        .unwrap();
        let rel = w("h^-2 a^2 b^2 c^2");
        let image = rel.substitute(|g| match &*g.name() {
            "a" => Some(w("h")),
            "b" => Some(w("x")),
            "c" => Some(w("x^-1")),
            _ => None,
        });
        assert!(hx.is_trivial(&image).unwrap());
        assert!(!hx.commute(&w("h"), &w("x")).unwrap());
        assert_eq!(hx.free_product_normal_form(&Word::commutator(&w("h"), &w("x"))).unwrap().len(), 4);
    }

    #[test]
    fn normal_form_examples() {
        let s = SmallCancellationModel::new(
            Presentation::parse(&["a", "a1", "b1", "a2", "b2"], &["a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1"]).unwrap(),
        )
        .unwrap();
        let zs = GroupModel::free_product(vec![
            GroupModel::InfiniteCyclic(Generator::named("z")),
            GroupModel::SmallCancellation(s),
        ])
        .unwrap();
        let nf = zs.free_product_normal_form(&w("z a z^-1")).unwrap();
        assert_eq!(nf.len(), 3);
        assert_eq!(nf[1], (1, w("a")));
        let nf = zs.free_product_normal_form(&w("z z^-1 a")).unwrap();
        assert_eq!(nf, vec![(1, w("a"))]);
        // middle commutator pair is the relator: trivial by Dehn, then a a^-1 cancels
        let word = w("a a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1 a^-1");
        assert!(zs.free_product_normal_form(&word).unwrap().is_empty());
        let interleaved = w("a z a1 b1 a1^-1 b1^-1 z^-1 a2 b2 a2^-1 b2^-1 a^-1");
        assert_eq!(zs.free_product_normal_form(&interleaved).unwrap().len(), 5);
        assert!(GroupModel::Free(Alphabet::default()).free_product_normal_form(&w("1")).is_err());
    }

    #[test]
    fn dehn_shortens_long_fragments() {
        let m = SmallCancellationModel::new(genus2()).unwrap();
        // five letters of the relator equal the inverse of the other three
        let shortened = m.dehn_reduce(&w("a1 a2 a1^-1 a2^-1 a3"));
        assert_eq!(shortened, w("a4 a3 a4^-1"));
    }

    #[test]
    fn classification_splits_components() {
        let p = Presentation::parse(
            &["h", "s1", "s2", "s3", "s4"],
            &["s1 s2 s1^-1 s2^-1 s3 s4 s3^-1 s4^-1"],
        )
        .unwrap();
        match GroupModel::from_presentation(&p).unwrap() {
            GroupModel::FreeProduct(fs) => {
                assert!(matches!(fs[0], GroupModel::InfiniteCyclic(_)));
                assert!(matches!(fs[1], GroupModel::SmallCancellation(_)));
            }
            other => panic!("unexpected {other}"),
        }
        let free = Presentation::parse(&["a", "b", "z"], &[]).unwrap();
        assert!(matches!(GroupModel::from_presentation(&free).unwrap(), GroupModel::Free(_)));
        let cyc = Presentation::parse(&["h"], &[]).unwrap();
        assert!(GroupModel::from_presentation(&cyc).unwrap().is_infinite_cyclic());
    }

    #[test]
    fn tietze_elimination() {
        let p = Presentation::parse(
            &["h", "a", "b", "g", "t"],
            &["h g^-1", "t h t^-1 b^-2 a^-2 g"],
        )
        .unwrap();
        let e = p.eliminate_generators();
        let expected = Presentation::parse(&["h", "a", "b", "t"], &["h t h t^-1 b^-2 a^-2"]).unwrap();
        assert!(e.presentation.same_as(&expected), "{}", e.presentation);
        assert_eq!(e.rewrite(&w("g")), w("h"));
    }

    #[test]
    fn adjoin_letter() {
        let h = GroupModel::InfiniteCyclic(Generator::named("h"));
        let hx = h.adjoin_free_letter(Generator::named("x")).unwrap();
        assert_eq!(hx.alphabet().rank(), 2);
        assert!(h.adjoin_free_letter(Generator::named("h")).is_err());
        let f2 = GroupModel::Free(Alphabet::from_names(&["a", "b"]).unwrap());
        match f2.adjoin_free_letter(Generator::named("c")).unwrap() {
            GroupModel::Free(a) => assert_eq!(a.rank(), 3),
            other => panic!("{other}"),
        }
        let s4p = s4().adjoin_free_letter(Generator::named("x")).unwrap();
        assert_eq!(s4p.generators().rank(), 5);
        assert_eq!(s4p.relators().len(), 1);
    }
}
