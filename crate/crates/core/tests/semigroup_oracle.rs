//! Valuation-set oracle for monomial-curve rings.
//!
//! For the semigroup ring of a numerical semigroup, every ideal generated
//! by monomials in `t` is determined by its valuation set, and lengths,
//! socle dimensions and reduction numbers reduce to counting gaps. That
//! arithmetic is independent of the Groebner path, so it cross-checks the
//! engine on the two curves used throughout: the cusp `<2, 3>` presented
//! by one plane relation, and `<3, 4, 5>` presented by the 2x2 minors of
//! its defining matrix.

use std::sync::Arc;

use socle_core::invariants::{hs_value, ir_value};
use socle_core::localmodel::PresentedRing;
use socle_core::monomial::Monomial;
use socle_core::poly::Polynomial;
use socle_core::scalar::FieldSpec;

const BOUND: usize = 160;

/// A numerical semigroup as a membership table up to `BOUND`.
#[derive(Clone)]
struct Semigroup {
    member: Vec<bool>,
}

impl Semigroup {
    fn generated(gens: &[usize]) -> Semigroup {
        let mut member = vec![false; BOUND];
        member[0] = true;
        for v in 1..BOUND {
            if gens.iter().any(|g| *g <= v && member[v - g]) || gens.contains(&v) {
                member[v] = true;
            }
        }
        Semigroup { member }
    }

    fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter(|(_, m)| **m)
            .map(|(v, _)| v)
    }
}

/// A monomial ideal of the semigroup ring: the union of `v + S` over the
/// generator valuations `v` (the empty set for the zero ideal).
#[derive(Clone, PartialEq)]
struct ValuationSet {
    member: Vec<bool>,
}

impl ValuationSet {
    fn ideal(s: &Semigroup, gens: &[usize]) -> ValuationSet {
        let mut member = vec![false; BOUND];
        for g in gens {
            for v in s.values() {
                if g + v < BOUND {
                    member[g + v] = true;
                }
            }
        }
        ValuationSet { member }
    }

    /// Valuations of `gens_a * gens_b`-generated ideal products.
    fn product(s: &Semigroup, a: &[usize], b: &[usize]) -> ValuationSet {
        let gens: Vec<usize> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| x + y))
            .collect();
        ValuationSet::ideal(s, &gens)
    }

    fn power_gens(base: &[usize], k: usize) -> Vec<usize> {
        let mut gens = vec![0usize];
        for _ in 0..k {
            gens = gens
                .iter()
                .flat_map(|x| base.iter().map(move |y| x + y))
                .collect();
            gens.sort();
            gens.dedup();
        }
        gens
    }

    fn contains(&self, v: usize) -> bool {
        self.member[v]
    }
}

/// Length of `M / I^(n+1) M` where both are valuation sets.
fn oracle_length(module: &ValuationSet, sub: &ValuationSet) -> usize {
    (0..BOUND / 2)
        .filter(|v| module.contains(*v) && !sub.contains(*v))
        .count()
}

/// Socle dimension of `M / N`: monomials of `M` outside `N` pushed into
/// `N` by every maximal-ideal generator.
fn oracle_socle(sgens: &[usize], module: &ValuationSet, sub: &ValuationSet) -> usize {
    (0..BOUND / 2)
        .filter(|v| {
            module.contains(*v)
                && !sub.contains(*v)
                && sgens.iter().all(|g| sub.contains(v + g) || !module.contains(v + g))
        })
        .count()
}

/// Least reduction number of `small` inside `large`, or None.
fn oracle_reduction(
    s: &Semigroup,
    small: &[usize],
    large: &[usize],
    bound: usize,
) -> Option<usize> {
    for r in 0..=bound {
        let lhs = ValuationSet::product(s, small, &ValuationSet::power_gens(large, r));
        let rhs = ValuationSet::ideal(s, &ValuationSet::power_gens(large, r + 1));
        if lhs == rhs {
            return Some(r);
        }
    }
    None
}

const Q: FieldSpec = FieldSpec::Rational;

fn poly(nvars: usize, terms: &[(&[u32], i64)]) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for (exps, c) in terms {
        p = p.add(&Polynomial::monomial(
            nvars,
            Monomial::new(exps.to_vec()),
            Q.from_i64(*c),
        ));
    }
    p
}

/// k[[t^2, t^3]] as k[X1, X2]/(X1^3 - X2^2); x1 has valuation 2, x2 has 3.
fn cusp() -> Arc<PresentedRing> {
    PresentedRing::new(
        Q,
        vec!["X1".into(), "X2".into()],
        vec![poly(2, &[(&[3, 0], 1), (&[0, 2], -1)])],
    )
    .unwrap()
}

/// k[[t^3, t^4, t^5]] by the 2x2 minors of [[X1, X2, X3], [X2, X3, X1^2]].
fn curve_345() -> Arc<PresentedRing> {
    PresentedRing::new(
        Q,
        vec!["X1".into(), "X2".into(), "X3".into()],
        vec![
            poly(3, &[(&[1, 0, 1], 1), (&[0, 2, 0], -1)]),
            poly(3, &[(&[3, 0, 0], 1), (&[0, 1, 1], -1)]),
            poly(3, &[(&[2, 1, 0], 1), (&[0, 0, 2], -1)]),
        ],
    )
    .unwrap()
}

#[test]
fn cusp_lengths_match_valuation_counts() {
    let ring = cusp();
    let free = ring.free_module(1);
    let s = Semigroup::generated(&[2, 3]);
    let whole = ValuationSet::ideal(&s, &[0]);
    // ideals by generator valuations: m = (2, 3), (x1) = (2), (x2) = (3)
    for (gens_val, gens_poly) in [
        (vec![2usize, 3], vec![poly(2, &[(&[1, 0], 1)]), poly(2, &[(&[0, 1], 1)])]),
        (vec![2], vec![poly(2, &[(&[1, 0], 1)])]),
        (vec![3], vec![poly(2, &[(&[0, 1], 1)])]),
    ] {
        let handle = ring.ideal(&gens_poly).unwrap();
        for n in 0..5u32 {
            let powered = ValuationSet::power_gens(&gens_val, n as usize + 1);
            let sub = ValuationSet::ideal(&s, &powered);
            let expect = oracle_length(&whole, &sub) as u64;
            assert_eq!(
                hs_value(&ring, &free, &handle, n, None).unwrap(),
                expect,
                "length mismatch for valuations {gens_val:?} at n = {n}"
            );
            let expect_soc = oracle_socle(&[2, 3], &whole, &sub) as u64;
            assert_eq!(
                ir_value(&ring, &free, &handle, n, None).unwrap(),
                expect_soc,
                "socle mismatch for valuations {gens_val:?} at n = {n}"
            );
        }
    }
}

#[test]
fn cusp_ir_table_for_the_maximal_ideal_is_the_known_one() {
    // frozen from the valuation oracle: (1, 2, 2, 2, 2, 2)
    let s = Semigroup::generated(&[2, 3]);
    let whole = ValuationSet::ideal(&s, &[0]);
    let mut oracle = Vec::new();
    for n in 0..6usize {
        let sub = ValuationSet::ideal(&s, &ValuationSet::power_gens(&[2, 3], n + 1));
        oracle.push(oracle_socle(&[2, 3], &whole, &sub) as u64);
    }
    assert_eq!(oracle, vec![1, 2, 2, 2, 2, 2]);

    let ring = cusp();
    let free = ring.free_module(1);
    let m = ring.maximal_ideal();
    for (n, expect) in oracle.iter().enumerate() {
        assert_eq!(ir_value(&ring, &free, &m, n as u32, None).unwrap(), *expect);
    }
}

#[test]
fn cusp_reduction_numbers_match() {
    let s = Semigroup::generated(&[2, 3]);
    assert_eq!(oracle_reduction(&s, &[2], &[2, 3], 5), Some(1));
    assert_eq!(oracle_reduction(&s, &[3], &[2, 3], 5), None);

    let ring = cusp();
    let m = ring.maximal_ideal();
    let x1 = ring.ideal(&[poly(2, &[(&[1, 0], 1)])]).unwrap();
    let x2 = ring.ideal(&[poly(2, &[(&[0, 1], 1)])]).unwrap();
    assert_eq!(ring.is_reduction(&x1, &m).unwrap(), (true, Some(1)));
    assert_eq!(ring.is_reduction_bounded(&x2, &m, 5).unwrap(), (false, None));
}

#[test]
fn curve_345_ring_invariants_match_the_oracle() {
    let ring = curve_345();
    let free = ring.free_module(1);
    let s = Semigroup::generated(&[3, 4, 5]);
    let whole = ValuationSet::ideal(&s, &[0]);
    let x1 = ring.ideal(&[poly(3, &[(&[1, 0, 0], 1)])]).unwrap();
    for n in 0..4u32 {
        let sub = ValuationSet::ideal(&s, &ValuationSet::power_gens(&[3], n as usize + 1));
        assert_eq!(
            hs_value(&ring, &free, &x1, n, None).unwrap(),
            oracle_length(&whole, &sub) as u64
        );
        assert_eq!(
            ir_value(&ring, &free, &x1, n, None).unwrap(),
            oracle_socle(&[3, 4, 5], &whole, &sub) as u64
        );
    }
    // the type of the curve: socle of R/(t^3) has dimension 2
    assert_eq!(ir_value(&ring, &free, &x1, 0, None).unwrap(), 2);
}

#[test]
fn curve_345_ideal_module_invariants_match_the_oracle() {
    // M = (x1, x3) = (t^3, t^5) as a module over the curve
    let ring = curve_345();
    let module = ring
        .module_from_ideal(&[poly(3, &[(&[1, 0, 0], 1)]), poly(3, &[(&[0, 0, 1], 1)])])
        .unwrap();
    let s = Semigroup::generated(&[3, 4, 5]);
    let m_vals = ValuationSet::ideal(&s, &[3, 5]);
    let x1 = ring.ideal(&[poly(3, &[(&[1, 0, 0], 1)])]).unwrap();
    for n in 0..4u32 {
        let power = ValuationSet::power_gens(&[3], n as usize + 1);
        let sub_gens: Vec<usize> = power
            .iter()
            .flat_map(|p| [p + 3, p + 5])
            .collect();
        let sub = ValuationSet::ideal(&s, &sub_gens);
        assert_eq!(
            hs_value(&ring, &module, &x1, n, None).unwrap(),
            oracle_length(&m_vals, &sub) as u64,
            "module length mismatch at n = {n}"
        );
        assert_eq!(
            ir_value(&ring, &module, &x1, n, None).unwrap(),
            oracle_socle(&[3, 4, 5], &m_vals, &sub) as u64,
            "module socle mismatch at n = {n}"
        );
    }
    // frozen: the type of M is 2 (socle valuations 5 and 7 in M/(t^3)M)
    assert_eq!(ir_value(&ring, &module, &x1, 0, None).unwrap(), 2);
}

#[test]
fn cusp_maximal_ideal_module_matches_the_oracle() {
    // M = m = (t^2, t^3) over the cusp, with I = (t^2)
    let ring = cusp();
    let module = ring
        .module_from_ideal(&[poly(2, &[(&[1, 0], 1)]), poly(2, &[(&[0, 1], 1)])])
        .unwrap();
    let s = Semigroup::generated(&[2, 3]);
    let m_vals = ValuationSet::ideal(&s, &[2, 3]);
    let q = ring.ideal(&[poly(2, &[(&[1, 0], 1)])]).unwrap();
    for n in 0..4u32 {
        let power = ValuationSet::power_gens(&[2], n as usize + 1);
        let sub_gens: Vec<usize> = power.iter().flat_map(|p| [p + 2, p + 3]).collect();
        let sub = ValuationSet::ideal(&s, &sub_gens);
        assert_eq!(
            hs_value(&ring, &module, &q, n, None).unwrap(),
            oracle_length(&m_vals, &sub) as u64
        );
        assert_eq!(
            ir_value(&ring, &module, &q, n, None).unwrap(),
            oracle_socle(&[2, 3], &m_vals, &sub) as u64
        );
    }
    // frozen: l(m / t^2 m) = 2 and the type of m is 2
    assert_eq!(hs_value(&ring, &module, &q, 0, None).unwrap(), 2);
    assert_eq!(ir_value(&ring, &module, &q, 0, None).unwrap(), 2);
}
