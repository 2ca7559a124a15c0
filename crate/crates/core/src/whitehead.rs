//! Whitehead's algorithm in free groups of finite rank.
//!
//! Tuples of cyclic words are shortened by Whitehead automorphisms until no
//! single automorphism helps; by peak reduction the result has minimal total
//! length in the automorphism orbit. Basis tests use Stallings folding.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::word::{Alphabet, CyclicWord, Generator, Letter, Word};

/// What a type-2 automorphism does to one generator `x` with multiplier `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Fix,
    Right,
    Left,
    Both,
}

const ACTIONS: [Action; 4] = [Action::Fix, Action::Right, Action::Left, Action::Both];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WhiteheadAutomorphism {
    /// `xᵢ ↦ x_{perm[i]}^{±1}`, inverted where `invert[i]`.
    Permutation { perm: Vec<usize>, invert: Vec<bool> },
    /// `x ↦ x`, `x a`, `a⁻¹ x` or `a⁻¹ x a` per generator; `a` is fixed.
    Multiplier { multiplier: (usize, bool), table: Vec<Action> },
}

impl WhiteheadAutomorphism {
    pub fn rank(&self) -> usize {
        match self {
            WhiteheadAutomorphism::Permutation { perm, .. } => perm.len(),
            WhiteheadAutomorphism::Multiplier { table, .. } => table.len(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            WhiteheadAutomorphism::Permutation { perm, invert } => {
                perm.iter().enumerate().all(|(i, &p)| i == p) && invert.iter().all(|&b| !b)
            }
            WhiteheadAutomorphism::Multiplier { table, .. } => table.iter().all(|&a| a == Action::Fix),
        }
    }

    /// Images of the basis `gens` (which must have length `rank`).
    pub fn images(&self, gens: &[Generator]) -> Vec<Word> {
        let letter = |i: usize, inv: bool| {
            let l = gens[i].letter();
            if inv {
                l.inv()
            } else {
                l
            }
        };
        match self {
            WhiteheadAutomorphism::Permutation { perm, invert } => (0..gens.len())
                .map(|i| Word::from_letters([letter(perm[i], invert[i])]))
                .collect(),
            WhiteheadAutomorphism::Multiplier { multiplier: (m, inv), table } => {
                let a = letter(*m, *inv);
                (0..gens.len())
                    .map(|i| {
                        let x = letter(i, false);
                        let letters: Vec<Letter> = match table[i] {
                            Action::Fix => vec![x],
                            Action::Right => vec![x, a],
                            Action::Left => vec![a.inv(), x],
                            Action::Both => vec![a.inv(), x, a],
                        };
                        Word::from_letters(letters)
                    })
                    .collect()
            }
        }
    }

    pub fn apply(&self, gens: &[Generator], w: &Word) -> Word {
        let images = self.images(gens);
        w.substitute(|g| gens.iter().position(|&x| x == g).map(|i| images[i].clone()))
    }

    pub fn inverse(&self) -> WhiteheadAutomorphism {
        match self {
            WhiteheadAutomorphism::Permutation { perm, invert } => {
                let mut p = vec![0; perm.len()];
                let mut s = vec![false; perm.len()];
                for (i, &j) in perm.iter().enumerate() {
                    p[j] = i;
                    s[j] = invert[i];
                }
                WhiteheadAutomorphism::Permutation { perm: p, invert: s }
            }
            WhiteheadAutomorphism::Multiplier { multiplier: (m, inv), table } => {
                WhiteheadAutomorphism::Multiplier { multiplier: (*m, !*inv), table: table.clone() }
            }
        }
    }
}

impl fmt::Display for WhiteheadAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank();
        let gens: Vec<Generator> = (1..=n).map(|i| Generator::named(&format!("x{i}"))).collect();
        let parts: Vec<String> = gens
            .iter()
            .zip(self.images(&gens))
            .map(|(g, w)| format!("{g} -> {w}"))
            .collect();
        write!(f, "{{ {} }}", parts.join(", "))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Signed permutations (type 1, identity included) followed by the
/// non-identity multiplier automorphisms (type 2), in a fixed order.
pub fn whitehead_generators(n: usize) -> Vec<WhiteheadAutomorphism> {
    let mut out = Vec::new();
    for perm in permutations(n) {
        for mask in 0..(1u32 << n) {
            let invert = (0..n).map(|i| mask >> i & 1 == 1).collect();
            out.push(WhiteheadAutomorphism::Permutation { perm: perm.clone(), invert });
        }
    }
    for m in 0..n {
        for inv in [false, true] {
            let others = n - 1;
            for code in 1..4usize.pow(others as u32) {
                let mut table = vec![Action::Fix; n];
                let mut c = code;
                for (i, slot) in table.iter_mut().enumerate() {
                    if i == m {
                        continue;
                    }
                    *slot = ACTIONS[c % 4];
                    c /= 4;
                }
                out.push(WhiteheadAutomorphism::Multiplier { multiplier: (m, inv), table });
            }
        }
    }
    out
}

/// Sum of cyclically reduced lengths.
pub fn total_cyclic_length(t: &[Word]) -> usize {
    t.iter().map(|w| CyclicWord::new(w).len()).sum()
}

fn cyclic_tuple(t: &[Word]) -> Vec<Word> {
    t.iter().map(|w| CyclicWord::new(w).representative().clone()).collect()
}

/// Standard basis `x1..xn` used when a tuple comes without an alphabet.
pub fn standard_basis(n: usize) -> Vec<Generator> {
    (1..=n).map(|i| Generator::named(&format!("x{i}"))).collect()
}

#[derive(Debug, Clone)]
pub struct Minimized {
    pub tuple: Vec<Word>,
    pub steps: Vec<WhiteheadAutomorphism>,
}

impl Minimized {
    pub fn total_length(&self) -> usize {
        total_cyclic_length(&self.tuple)
    }
}

/// Greedy descent: apply the first automorphism giving the largest strict
/// decrease of total cyclic length, until none decreases it.
pub fn minimize(t: &[Word], basis: &[Generator]) -> Minimized {
    let autos: Vec<WhiteheadAutomorphism> = whitehead_generators(basis.len())
        .into_iter()
        .filter(|a| matches!(a, WhiteheadAutomorphism::Multiplier { .. }))
        .collect();
    let mut cur = cyclic_tuple(t);
    let mut len = total_cyclic_length(&cur);
    let mut steps = Vec::new();
    loop {
        let mut best: Option<(usize, Vec<Word>, &WhiteheadAutomorphism)> = None;
        for a in &autos {
            let next = cyclic_tuple(&cur.iter().map(|w| a.apply(basis, w)).collect::<Vec<_>>());
            let l = total_cyclic_length(&next);
            if l < len && best.as_ref().is_none_or(|(bl, _, _)| l < *bl) {
                best = Some((l, next, a));
            }
        }
        match best {
            Some((l, next, a)) => {
                len = l;
                cur = next;
                steps.push(a.clone());
            }
            None => return Minimized { tuple: cur, steps },
        }
    }
}

pub fn is_primitive(w: &Word, basis: &[Generator]) -> bool {
    minimize(std::slice::from_ref(w), basis).total_length() == 1
}

/// Folded Stallings graph of the subgroup generated by `t`.
#[derive(Debug, Clone)]
pub struct StallingsGraph {
    pub vertices: usize,
    pub edges: HashSet<(usize, Letter, usize)>,
}

impl StallingsGraph {
    pub fn new(t: &[Word]) -> Self {
        let mut parent: Vec<usize> = vec![0];
        let mut raw: Vec<(usize, Letter, usize)> = Vec::new();
        for w in t {
            let letters = w.letters();
            let mut at = 0;
            for (i, &l) in letters.iter().enumerate() {
                let to = if i + 1 == letters.len() {
                    0
                } else {
                    parent.push(parent.len());
                    parent.len() - 1
                };
                raw.push((at, l, to));
                at = to;
            }
        }
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        loop {
            let mut out: HashMap<(usize, Letter), usize> = HashMap::new();
            let mut merged = false;
            for &(u, l, v) in &raw {
                let (u, v) = (find(&mut parent, u), find(&mut parent, v));
                for (from, letter, to) in [(u, l, v), (v, l.inv(), u)] {
                    match out.get(&(from, letter)) {
                        Some(&other) => {
                            let (a, b) = (find(&mut parent, other), find(&mut parent, to));
                            if a != b {
                                parent[a.max(b)] = a.min(b);
                                merged = true;
                            }
                        }
                        None => {
                            out.insert((from, letter), to);
                        }
                    }
                }
                if merged {
                    break;
                }
            }
            if !merged {
                break;
            }
        }
        let mut roots: Vec<usize> = (0..parent.len()).map(|i| find(&mut parent, i)).collect();
        roots.sort_unstable();
        roots.dedup();
        let relabel: HashMap<usize, usize> = roots.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let edges = raw
            .iter()
            .map(|&(u, l, v)| (relabel[&find(&mut parent, u)], l, relabel[&find(&mut parent, v)]))
            .collect();
        StallingsGraph { vertices: roots.len(), edges }
    }

    /// The graph is the rose on `basis`, i.e. the subgroup is everything.
    pub fn is_full_rose(&self, basis: &[Generator]) -> bool {
        self.vertices == 1
            && basis.iter().all(|g| {
                self.edges.contains(&(0, g.letter(), 0)) || self.edges.contains(&(0, g.inverse_letter(), 0))
            })
    }
}

/// `t` has `n` entries and generates the whole free group; by the Hopf
/// property it is then a basis.
pub fn is_basis(t: &[Word], basis: &[Generator]) -> bool {
    t.len() == basis.len()
        && t.iter().all(|w| w.generators().all(|g| basis.contains(&g)))
        && StallingsGraph::new(t).is_full_rose(basis)
}

/// Basis from an alphabet.
pub fn basis_of(alpha: &Alphabet) -> Vec<Generator> {
    alpha.generators().to_vec()
}

/// Breadth-first search of the automorphism orbit of `w` through Whitehead
/// generators, keeping cyclic words of length at most `cap`. Returns the
/// shortest cyclic length seen.
pub fn orbit_min_length(w: &Word, basis: &[Generator], cap: usize) -> usize {
    let autos = whitehead_generators(basis.len());
    let start = CyclicWord::new(w);
    let mut best = start.len();
    let mut seen = HashSet::from([start.canonical()]);
    let mut queue = VecDeque::from([start.representative().clone()]);
    while let Some(cur) = queue.pop_front() {
        for a in &autos {
            let next = CyclicWord::new(&a.apply(basis, &cur));
            if next.len() > cap || !seen.insert(next.canonical()) {
                continue;
            }
            best = best.min(next.len());
            queue.push_back(next.representative().clone());
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis2() -> Vec<Generator> {
        vec![Generator::named("a"), Generator::named("b")]
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn generator_counts() {
        let g1 = whitehead_generators(1);
        assert_eq!(g1.len(), 2);
        assert!(g1[0].is_identity());
        let g2 = whitehead_generators(2);
        let type1 = g2.iter().filter(|a| matches!(a, WhiteheadAutomorphism::Permutation { .. })).count();
        assert_eq!(type1, 8);
        assert_eq!(g2.len(), 8 + 4 * 3);
        assert_eq!(whitehead_generators(3).len(), 48 + 6 * 15);
    }

    #[test]
    fn inverses_compose_to_identity() {
        for n in 1..=3 {
            let basis = standard_basis(n);
            for a in whitehead_generators(n) {
                let inv = a.inverse();
                for (g, img) in basis.iter().zip(a.images(&basis)) {
                    assert_eq!(inv.apply(&basis, &img), Word::gen(*g), "{a}");
                }
            }
        }
    }

    #[test]
    fn minimize_examples() {
        let b = basis2();
        assert_eq!(minimize(&[w("a b")], &b).total_length(), 1);
        assert_eq!(minimize(&[w("a a b b")], &b).total_length(), 4);
        let m = minimize(&[w("a"), w("b")], &b);
        assert_eq!(m.total_length(), 2);
        assert!(m.steps.is_empty());
    }

    #[test]
    fn primitivity_and_bases() {
        let b = basis2();
        assert!(is_basis(&[w("a"), w("b")], &b));
        assert!(!is_primitive(&w("a a b b"), &b));
        assert!(is_primitive(&w("a b a"), &b));
        assert!(is_basis(&[w("a"), w("a b a")], &b));
        assert!(!is_basis(&[w("a"), w("b a b a^-1 b^-1")], &b));
        assert!(!is_basis(&[w("a")], &b));
        assert!(!is_basis(&[w("a a"), w("b")], &b));
        assert!(!is_primitive(&Word::identity(), &b));
        assert!(is_basis(&[w("a^-1"), w("b^-1 a")], &b));
    }

    #[test]
    fn orbit_search_matches_on_samples() {
        let b = basis2();
        for s in ["a b", "a a b b", "a b a^-1 b^-1", "a a b", "a b a b^-1"] {
            let word = w(s);
            assert_eq!(orbit_min_length(&word, &b, 8) == 1, is_primitive(&word, &b), "{s}");
        }
    }
}
