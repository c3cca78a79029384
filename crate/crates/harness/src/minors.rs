//! Maximal minors of a 2-row polynomial matrix, for rings presented as
//! determinantal quotients.

use socle_core::monomial::MonomialOrder;
use socle_core::poly::Polynomial;

/// All 2x2 minors of a 2 x l matrix given by its two rows, columns taken
/// in increasing pairs. Zero minors are dropped and the rest are made
/// monic under the default order and deduplicated.
pub fn minors_2x(top: &[Polynomial], bottom: &[Polynomial]) -> Vec<Polynomial> {
    assert_eq!(top.len(), bottom.len(), "minor rows must have equal length");
    assert!(top.len() >= 2, "need at least two columns");
    let mut out: Vec<Polynomial> = Vec::new();
    for i in 0..top.len() {
        for j in (i + 1)..top.len() {
            let minor = top[i].mul(&bottom[j]).sub(&top[j].mul(&bottom[i]));
            if minor.is_zero() {
                continue;
            }
            let monic = minor.monic(MonomialOrder::DegRevLex);
            if !out.contains(&monic) {
                out.push(monic);
            }
        }
    }
    out
}
