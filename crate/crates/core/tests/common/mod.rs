//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use tower_core::word::{reduce, CyclicWord, Generator, Letter, Word};

pub fn gens(names: &[&str]) -> Vec<Generator> {
    names.iter().map(|n| Generator::named(n)).collect()
}

pub fn signed_letters(gens: &[Generator]) -> Vec<Letter> {
    gens.iter().flat_map(|g| [g.letter(), g.inverse_letter()]).collect()
}

/// Every freely reduced word of length at most `max_len`.
pub fn reduced_words(gens: &[Generator], max_len: usize) -> Vec<Word> {
    let letters = signed_letters(gens);
    let mut out = vec![Vec::<Letter>::new()];
    let mut frontier = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                if w.last().is_some_and(|p| p.cancels(l)) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter().map(Word::from_letters).collect()
}

pub fn cyclically_reduced_words(gens: &[Generator], max_len: usize) -> Vec<Word> {
    reduced_words(gens, max_len)
        .into_iter()
        .filter(|w| w.is_cyclically_reduced())
        .collect()
}

/// Naive free reduction: rescan from the start after every cancellation.
pub fn naive_reduce(raw: &[Letter]) -> Vec<Letter> {
    let mut v = raw.to_vec();
    'again: loop {
        for i in 0..v.len().saturating_sub(1) {
            if v[i].cancels(v[i + 1]) {
                v.drain(i..i + 2);
                continue 'again;
            }
        }
        return v;
    }
}

/// Trivial words reachable from the empty word by inserting cyclic
/// conjugates of `r^{±1}` anywhere and freely reducing, never exceeding
/// `cap` letters.
pub fn relator_bfs(relator: &Word, cap: usize) -> HashSet<Word> {
    let c = CyclicWord::new(relator);
    let mut pieces: Vec<Word> = c.rotations().collect();
    pieces.extend(c.inverse().rotations());
    pieces.sort_by_key(|w| w.to_string());
    pieces.dedup();
    let mut seen = HashSet::from([Word::identity()]);
    let mut queue = vec![Word::identity()];
    while let Some(w) = queue.pop() {
        let letters = w.letters();
        for pos in 0..=letters.len() {
            for p in &pieces {
                let mut raw = letters[..pos].to_vec();
                raw.extend_from_slice(p.letters());
                raw.extend_from_slice(&letters[pos..]);
                let next = reduce(&raw);
                if next.len() <= cap && seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
    }
    seen
}

/// Canonical cyclic forms of `[x, y]` for all reduced `x, y` of length at
/// most `max_len`.
pub fn commutator_classes(gens: &[Generator], max_len: usize) -> HashSet<Word> {
    let words = reduced_words(gens, max_len);
    let mut out = HashSet::new();
    for x in &words {
        for y in &words {
            out.insert(CyclicWord::new(&Word::commutator(x, y)).canonical());
        }
    }
    out
}
