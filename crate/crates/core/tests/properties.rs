//! Property tests for the algebraic substrate: ring axioms, order axioms,
//! normal-form compatibility, reduced-basis uniqueness, and module
//! membership against brute-force linear algebra.

use proptest::prelude::*;

use socle_core::groebner::{buchberger, module_buchberger, GroebnerBasis};
use socle_core::linalg::Subspace;
use socle_core::monomial::{ModuleOrder, Monomial, MonomialOrder};
use socle_core::poly::{FreeVector, Polynomial};
use socle_core::scalar::{FieldSpec, Scalar};

fn arb_field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rational),
        Just(FieldSpec::Prime(2)),
        Just(FieldSpec::Prime(3)),
        Just(FieldSpec::Prime(32003)),
    ]
}

fn arb_scalar(field: FieldSpec) -> impl Strategy<Value = Scalar> {
    (-20i64..=20).prop_map(move |n| field.from_i64(n))
}

fn arb_monomial(nvars: usize) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..4, nvars).prop_map(Monomial::new)
}

fn arb_poly(field: FieldSpec, nvars: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((arb_monomial(nvars), arb_scalar(field)), 0..5).prop_map(
        move |terms| {
            let mut p = Polynomial::zero(nvars);
            for (m, c) in terms {
                p = p.add(&Polynomial::monomial(nvars, m, c));
            }
            p
        },
    )
}

fn arb_poly_triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    arb_field().prop_flat_map(|f| (arb_poly(f, 2), arb_poly(f, 2), arb_poly(f, 2)))
}

proptest! {
    #[test]
    fn ring_axioms_hold((p, q, r) in arb_poly_triple()) {
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
    }

    #[test]
    fn scalar_rational_string_round_trip(n in -1000i64..1000, d in 1i64..400) {
        let x = Scalar::Rat(num_rational::BigRational::new(n.into(), d.into()));
        let back = Scalar::parse(FieldSpec::Rational, &x.to_string()).unwrap();
        prop_assert_eq!(x, back);
    }

    #[test]
    fn orders_are_total_and_multiplicative(
        a in arb_monomial(3), b in arb_monomial(3), c in arb_monomial(3), w in arb_monomial(3)
    ) {
        for ord in [MonomialOrder::DegRevLex, MonomialOrder::Lex,
                    MonomialOrder::Elimination { block: 1 }] {
            // antisymmetry / trichotomy
            prop_assert_eq!(ord.compare(&a, &b), ord.compare(&b, &a).reverse());
            prop_assert_eq!(ord.compare(&a, &b) == std::cmp::Ordering::Equal, a == b);
            // transitivity
            use std::cmp::Ordering::*;
            if ord.compare(&a, &b) != Greater && ord.compare(&b, &c) != Greater {
                prop_assert_ne!(ord.compare(&a, &c), Greater);
            }
            // multiplicativity
            prop_assert_eq!(ord.compare(&a, &b), ord.compare(&a.mul(&w), &b.mul(&w)));
            // 1 is minimal for the well-orders
            if ord != (MonomialOrder::Elimination { block: 1 }) {
                prop_assert_ne!(ord.compare(&Monomial::one(3), &a), Greater);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_ring_compatible(
        gens in proptest::collection::vec(arb_poly(FieldSpec::Prime(3), 2), 1..4),
        p in arb_poly(FieldSpec::Prime(3), 2),
        q in arb_poly(FieldSpec::Prime(3), 2),
        r in arb_poly(FieldSpec::Prime(3), 2),
    ) {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let gb = buchberger(&gens, MonomialOrder::DegRevLex);
        let lhs = gb.reduce_poly(&p.mul(&q).add(&r));
        let rhs = gb.reduce_poly(&gb.reduce_poly(&p).mul(&q).add(&r));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduced_basis_is_permutation_invariant(
        gens in proptest::collection::vec(arb_poly(FieldSpec::Prime(3), 2), 2..5),
        seed in 0usize..24,
    ) {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(gens.len() >= 2);
        let gb = buchberger(&gens, MonomialOrder::DegRevLex);
        let mut permuted = gens.clone();
        permuted.rotate_left(seed % gens.len());
        if seed % 2 == 1 {
            permuted.reverse();
        }
        let gb2 = buchberger(&permuted, MonomialOrder::DegRevLex);
        prop_assert_eq!(gb.elements(), gb2.elements());
    }
}

#[test]
fn standard_monomial_count_of_maximal_powers() {
    // k[x, y] / (x, y)^N has N (N + 1) / 2 standard monomials
    let q = FieldSpec::Rational;
    for n in 1u32..=8 {
        let mut gens = Vec::new();
        for i in 0..=n {
            gens.push(Polynomial::monomial(
                2,
                Monomial::new(vec![i, n - i]),
                q.one(),
            ));
        }
        let gb = buchberger(&gens, MonomialOrder::DegRevLex);
        let sb = gb.standard_monomials().unwrap();
        assert_eq!(sb.len() as u32, n * (n + 1) / 2);
    }
}

/// Brute-force membership in a submodule: solve for polynomial cofactors
/// of degree at most `bound` by exact linear algebra.
fn brute_member(v: &FreeVector, gens: &[FreeVector], bound: u32, field: FieldSpec) -> bool {
    let nvars = v.nvars();
    let rank = v.rank();
    let mut mons: Vec<Monomial> = Vec::new();
    collect_upto(&mut vec![0; nvars], 0, bound, &mut mons);
    // coordinates live on (component, monomial) pairs up to a safe degree
    let max_deg = bound
        + gens
            .iter()
            .flat_map(|g| g.components().iter().filter_map(|p| p.total_degree()))
            .max()
            .unwrap_or(0);
    let mut coord_index: std::collections::BTreeMap<(usize, Monomial), usize> =
        std::collections::BTreeMap::new();
    let mut all: Vec<Monomial> = Vec::new();
    collect_upto(&mut vec![0; nvars], 0, max_deg, &mut all);
    for c in 0..rank {
        for m in &all {
            let k = coord_index.len();
            coord_index.insert((c, m.clone()), k);
        }
    }
    let rows = coord_index.len();
    let to_coords = |w: &FreeVector| -> Vec<Scalar> {
        let mut out = vec![field.zero(); rows];
        for ((c, m), s) in w.terms() {
            out[coord_index[&(c, m.clone())]] = s.clone();
        }
        out
    };
    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    for g in gens {
        for u in &mons {
            columns.push(to_coords(&g.mul_term(u, &field.one())));
        }
    }
    let target = to_coords(v);
    // solvable iff the target is in the column space
    let col_space = Subspace::from_vectors(field, rows, columns);
    col_space.contains(&target)
}

fn collect_upto(exps: &mut Vec<u32>, var: usize, bound: u32, out: &mut Vec<Monomial>) {
    if var == exps.len() {
        out.push(Monomial::new(exps.clone()));
        return;
    }
    for e in 0..=bound {
        if exps[..var].iter().sum::<u32>() + e <= bound {
            exps[var] = e;
            collect_upto(exps, var + 1, bound, out);
        }
    }
    exps[var] = 0;
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn module_membership_agrees_with_linear_algebra(
        g1 in arb_poly(FieldSpec::Prime(3), 2),
        g2 in arb_poly(FieldSpec::Prime(3), 2),
        g3 in arb_poly(FieldSpec::Prime(3), 2),
        g4 in arb_poly(FieldSpec::Prime(3), 2),
        h1 in arb_poly(FieldSpec::Prime(3), 2),
        h2 in arb_poly(FieldSpec::Prime(3), 2),
        probe in arb_poly(FieldSpec::Prime(3), 2),
    ) {
        let f3 = FieldSpec::Prime(3);
        let gens = vec![
            FreeVector::new(vec![g1, g2]),
            FreeVector::new(vec![g3, g4]),
        ];
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        let gb: GroebnerBasis = module_buchberger(&gens, ModuleOrder::new(MonomialOrder::DegRevLex));

        // a constructed member is recognized by the basis
        let member = gens[0].mul_poly(&h1).add(&gens[1].mul_poly(&h2));
        prop_assert!(gb.contains_vector(&member));

        // a probe rejected by the basis is rejected by linear algebra too
        let v = FreeVector::new(vec![probe.clone(), probe]);
        if !gb.contains_vector(&v) {
            prop_assert!(!brute_member(&v, &gens, 3, f3));
        } else {
            prop_assert!(brute_member(&v, &gens, 6, f3));
        }
    }
}
