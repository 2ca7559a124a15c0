//! Benchmark inputs shared by the criterion targets.

use tower_core::{Presentation, Word};

pub fn n4() -> Presentation {
    Presentation::parse(&["d1", "d2", "d3", "d4"], &["d1 d1 d2 d2 d3 d3 d4 d4"]).expect("valid presentation")
}

/// `(u r u⁻¹)(v r⁻¹ v⁻¹)`-style product of relator conjugates, of length
/// roughly `4 * depth + 16`.
pub fn relator_product(depth: usize) -> Word {
    let r = Word::parse("d1 d1 d2 d2 d3 d3 d4 d4").expect("word");
    let g = Word::parse("d1 d3^-1 d2").expect("word");
    let mut w = Word::identity();
    for k in 0..depth {
        let c = g.pow(k as i64 + 1);
        let rel = if k % 2 == 0 { r.clone() } else { r.inverse() };
        w = w.compose(&rel.conjugate(&c));
    }
    w
}

pub fn commutator_of_length(n: usize) -> Word {
    let x = Word::parse(&"a b ".repeat(n)).expect("word");
    let y = Word::parse(&"b a^-1 ".repeat(n)).expect("word");
    Word::commutator(&x, &y)
}
