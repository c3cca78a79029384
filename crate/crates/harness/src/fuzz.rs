//! Seed-reproducible random instance generation and the three fuzz
//! suites: inequality-chain checks, colon-lemma oracle runs, and
//! enumeration-oracle agreement.
//!
//! Generation recipe: rings are quotients of up to three variables over
//! F_2 or F_3 by per-variable pure powers (every variable nilpotent of
//! order at most four), a few extra monomials and at most one binomial;
//! modules are free of rank at most two or cokernels of up to two random
//! columns. This guarantees Artinian instances of length at most twelve,
//! inside the enumeration-oracle bounds.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use socle_core::idealization::{idealize, HomogeneousIdeal, IdealizationRing};
use socle_core::invariants::theorem_check_with;
use socle_core::localmodel::{IdealHandle, PresentedModule, PresentedRing};
use socle_core::monomial::Monomial;
use socle_core::poly::{FreeVector, Polynomial};
use socle_core::scalar::FieldSpec;

const MAX_LENGTH: usize = 12;

/// One random `(R, M, I)` instance.
pub struct FuzzInstance {
    pub ring: Arc<PresentedRing>,
    pub module: PresentedModule,
    pub ideal: IdealHandle,
}

fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ case.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, min_deg: u32, max_deg: u32) -> Monomial {
    loop {
        let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_deg)).collect();
        let m = Monomial::new(exps);
        if m.degree() >= min_deg && m.degree() <= max_deg {
            return m;
        }
    }
}

fn random_ring(rng: &mut ChaCha8Rng) -> Arc<PresentedRing> {
    loop {
        let p = if rng.gen_bool(0.5) { 2 } else { 3 };
        let field = FieldSpec::Prime(p);
        let nvars = rng.gen_range(1..=3usize);
        let names: Vec<String> = (0..nvars).map(|i| format!("x{}", i + 1)).collect();
        let mut relations: Vec<Polynomial> = Vec::new();
        for v in 0..nvars {
            let d = rng.gen_range(2..=4u32);
            let mut exps = vec![0u32; nvars];
            exps[v] = d;
            relations.push(Polynomial::monomial(nvars, Monomial::new(exps), field.one()));
        }
        for _ in 0..rng.gen_range(0..=2usize) {
            let m = random_monomial(rng, nvars, 2, 3);
            relations.push(Polynomial::monomial(nvars, m, field.one()));
        }
        if rng.gen_bool(0.5) {
            let a = random_monomial(rng, nvars, 1, 3);
            let b = random_monomial(rng, nvars, 1, 3);
            if a != b {
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                let binom = Polynomial::monomial(nvars, a, field.one()).add(
                    &Polynomial::monomial(nvars, b, field.from_i64(sign)),
                );
                relations.push(binom);
            }
        }
        let Ok(ring) = PresentedRing::new(field, names, relations) else {
            continue;
        };
        let Ok(basis) = ring.relations_basis().standard_monomials() else {
            continue;
        };
        if basis.len() >= 1 && basis.len() <= MAX_LENGTH {
            return ring;
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &PresentedRing, min_deg: u32, max_deg: u32) -> Polynomial {
    let field = ring.field();
    let nvars = ring.nvars();
    let mut p = Polynomial::zero(nvars);
    for _ in 0..rng.gen_range(1..=2usize) {
        let m = random_monomial(rng, nvars, min_deg, max_deg);
        let c = field.from_i64(rng.gen_range(1..=2i64));
        p = p.add(&Polynomial::monomial(nvars, m, c));
    }
    p
}

fn module_length(ring: &Arc<PresentedRing>, module: &PresentedModule) -> Option<usize> {
    let zero = ring.ideal(&[]).ok()?;
    let model = ring.artinian_quotient(module, &zero, 0, None).ok()?;
    Some(model.length())
}

fn random_module(rng: &mut ChaCha8Rng, ring: &Arc<PresentedRing>) -> PresentedModule {
    loop {
        let candidate = match rng.gen_range(0..4u8) {
            0 => ring.free_module(1),
            1 => ring.free_module(2),
            _ => {
                let rank = rng.gen_range(1..=2usize);
                let ncols = rng.gen_range(1..=2usize);
                let columns: Vec<FreeVector> = (0..ncols)
                    .map(|_| {
                        FreeVector::new(
                            (0..rank)
                                .map(|_| {
                                    if rng.gen_bool(0.3) {
                                        Polynomial::zero(ring.nvars())
                                    } else {
                                        random_poly(rng, ring, 1, 2)
                                    }
                                })
                                .collect(),
                        )
                    })
                    .collect();
                ring.module_from_columns(rank, columns)
            }
        };
        if !matches!(ring.module_is_nonzero(&candidate), Ok(true)) {
            continue;
        }
        match module_length(ring, &candidate) {
            Some(len) if len <= MAX_LENGTH => return candidate,
            _ => continue,
        }
    }
}

fn random_ideal(rng: &mut ChaCha8Rng, ring: &Arc<PresentedRing>) -> IdealHandle {
    loop {
        let count = rng.gen_range(0..=2usize);
        let gens: Vec<Polynomial> = (0..count)
            .map(|_| random_poly(rng, ring, 1, 2))
            .collect();
        if let Ok(handle) = ring.ideal(&gens) {
            return handle;
        }
    }
}

pub fn random_instance(seed: u64, case: u64) -> FuzzInstance {
    let mut rng = case_rng(seed, case);
    let ring = random_ring(&mut rng);
    let module = random_module(&mut rng, &ring);
    let ideal = random_ideal(&mut rng, &ring);
    FuzzInstance {
        ring,
        module,
        ideal,
    }
}

/// Aggregate outcome of the inequality-chain fuzz suite. Each instance is
/// checked at every `n <= n_max`; the equality criteria, length
/// additivity and the socle split are asserted inside the engine, so any
/// violation surfaces as a failure message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremFuzzOutcome {
    pub instances: u32,
    pub checks: u32,
    pub lower_equalities: u32,
    pub upper_equalities: u32,
    pub strict_chains: u32,
    pub failures: Vec<String>,
}

pub fn run_theorem_fuzz(seed: u64, cases: u32, n_max: u32) -> TheoremFuzzOutcome {
    let per_case: Vec<Result<(u32, u32, u32, u32), String>> = (0..cases as u64)
        .into_par_iter()
        .map(|case| {
            let instance = random_instance(seed, case);
            let a = idealize(&instance.ring, &instance.module)
                .map_err(|e| format!("case {case}: idealization failed: {e}"))?;
            let mut lower = 0;
            let mut upper = 0;
            let mut strict = 0;
            let mut checks = 0;
            for n in 0..=n_max {
                let verdict = theorem_check_with(&a, &instance.ideal, n, None)
                    .map_err(|e| format!("case {case}, n = {n}: {e}"))?;
                checks += 1;
                if verdict.lower_equality {
                    lower += 1;
                }
                if verdict.upper_equality {
                    upper += 1;
                }
                if verdict.strict_chain() {
                    strict += 1;
                }
            }
            Ok((checks, lower, upper, strict))
        })
        .collect();
    let mut outcome = TheoremFuzzOutcome {
        instances: cases,
        checks: 0,
        lower_equalities: 0,
        upper_equalities: 0,
        strict_chains: 0,
        failures: Vec::new(),
    };
    for r in per_case {
        match r {
            Ok((c, l, u, s)) => {
                outcome.checks += c;
                outcome.lower_equalities += l;
                outcome.upper_equalities += u;
                outcome.strict_chains += s;
            }
            Err(e) => outcome.failures.push(e),
        }
    }
    outcome
}

fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    a: &IdealizationRing,
) -> Result<HomogeneousIdeal, String> {
    let ring = a.source();
    let rank = a.module_rank();
    let count = rng.gen_range(0..=2usize);
    let ring_part: Vec<Polynomial> = (0..count)
        .map(|_| random_poly(rng, ring, 1, 2))
        .collect();
    // the module part must absorb I M; seed it with g e_j and add noise
    let mut module_part: Vec<FreeVector> = Vec::new();
    for g in &ring_part {
        for j in 0..rank {
            module_part.push(FreeVector::from_component(rank, j, g.clone()));
        }
    }
    for _ in 0..rng.gen_range(0..=2usize) {
        let v = FreeVector::new(
            (0..rank)
                .map(|_| {
                    if rng.gen_bool(0.4) {
                        Polynomial::zero(ring.nvars())
                    } else {
                        random_poly(rng, ring, 0, 2)
                    }
                })
                .collect(),
        );
        if !v.is_zero() {
            module_part.push(v);
        }
    }
    a.homogeneous_ideal(&ring_part, &module_part)
        .map_err(|e| format!("homogeneous ideal rejected: {e}"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaFuzzOutcome {
    pub cases: u32,
    pub agreements: u32,
    pub failures: Vec<String>,
}

/// For random homogeneous ideal pairs, the componentwise colon must equal
/// the definitional colon as subspaces of the idealization model, and the
/// output must itself satisfy the homogeneous-ideal condition.
pub fn run_lemma_fuzz(seed: u64, cases: u32) -> LemmaFuzzOutcome {
    let per_case: Vec<Result<(), String>> = (0..cases as u64)
        .into_par_iter()
        .map(|case| {
            let mut rng = case_rng(seed, case.wrapping_add(0x10_0000));
            let ring = random_ring(&mut rng);
            let module = random_module(&mut rng, &ring);
            let a = idealize(&ring, &module).map_err(|e| format!("case {case}: {e}"))?;
            let p = random_homogeneous(&mut rng, &a).map_err(|e| format!("case {case}: {e}"))?;
            let q = random_homogeneous(&mut rng, &a).map_err(|e| format!("case {case}: {e}"))?;
            let zero = ring.ideal(&[]).map_err(|e| format!("case {case}: {e}"))?;
            let trunc_source = ring
                .primary_exponent(&zero)
                .map_err(|e| format!("case {case}: source not Artinian: {e}"))?;
            let zero_a = a.ring().ideal(&[]).map_err(|e| format!("case {case}: {e}"))?;
            let trunc_a = a
                .ring()
                .primary_exponent(&zero_a)
                .map_err(|e| format!("case {case}: idealization not Artinian: {e}"))?;

            let lemma = a
                .colon_via_lemma(&p, &q, trunc_source)
                .map_err(|e| format!("case {case}: lemma colon failed: {e}"))?;
            let direct = a
                .colon_direct(&p, &q, trunc_a)
                .map_err(|e| format!("case {case}: direct colon failed: {e}"))?;
            let lemma_span = a.span_in_model(&direct.model, &lemma);
            if lemma_span != direct.colon {
                return Err(format!(
                    "case {case}: colon mismatch: lemma dim {} vs direct dim {}",
                    lemma_span.dim(),
                    direct.colon.dim()
                ));
            }
            match a.ideal_condition_in_model(&lemma, trunc_source) {
                Ok(true) => {}
                Ok(false) => {
                    return Err(format!("case {case}: colon output is not homogeneous"))
                }
                Err(e) => return Err(format!("case {case}: homogeneity check failed: {e}")),
            }
            Ok(())
        })
        .collect();
    let mut outcome = LemmaFuzzOutcome {
        cases,
        agreements: 0,
        failures: Vec::new(),
    };
    for r in per_case {
        match r {
            Ok(()) => outcome.agreements += 1,
            Err(e) => outcome.failures.push(e),
        }
    }
    outcome
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleOracleOutcome {
    pub cases: u32,
    pub socle_checks: u32,
    pub colon_checks: u32,
    pub faithfulness_checks: u32,
    pub failures: Vec<String>,
}

/// Enumeration-oracle agreement: socle, colon, annihilator and
/// faithfulness on in-bounds fuzz models.
pub fn run_socle_oracle_fuzz(seed: u64, cases: u32) -> SocleOracleOutcome {
    let per_case: Vec<Result<(u32, u32, u32), String>> = (0..cases as u64)
        .into_par_iter()
        .map(|case| {
            let instance = random_instance(seed, case.wrapping_add(0x20_0000));
            let ring = &instance.ring;
            let FieldSpec::Prime(p) = ring.field() else {
                return Err(format!("case {case}: expected a prime field"));
            };
            let mut socle_checks = 0;
            let mut colon_checks = 0;
            let mut faithfulness_checks = 0;
            for n in 0..=1u32 {
                let model = ring
                    .artinian_quotient(&instance.module, &instance.ideal, n, None)
                    .map_err(|e| format!("case {case}, n = {n}: {e}"))?;
                let dim = model.length();
                let in_bounds = (p == 2 && dim <= 12) || (p == 3 && dim <= 8);
                if !in_bounds {
                    continue;
                }
                let brute = crate::oracle::brute_force_socle(&model)
                    .map_err(|e| format!("case {case}, n = {n}: {e}"))?;
                if brute != model.socle().dim() as u64 {
                    return Err(format!(
                        "case {case}, n = {n}: socle mismatch: brute {brute} vs {}",
                        model.socle().dim()
                    ));
                }
                socle_checks += 1;
                let host_in_bounds =
                    (p == 2 && model.host().dim() <= 10) || (p == 3 && model.host().dim() <= 8);
                if host_in_bounds {
                    let zero = socle_core::linalg::Subspace::zero(model.field(), model.length());
                    let brute_colon = crate::oracle::brute_force_colon(
                        &model,
                        &zero,
                        instance.ring.maximal_ideal().generators(),
                    )
                    .map_err(|e| format!("case {case}: {e}"))?;
                    if brute_colon != model.colon_module(ring.maximal_ideal().generators()) {
                        return Err(format!("case {case}, n = {n}: colon mismatch"));
                    }
                    colon_checks += 1;
                    let brute_ann = crate::oracle::brute_force_colon_into_ring(&model, &zero)
                        .map_err(|e| format!("case {case}: {e}"))?;
                    if brute_ann != model.annihilator() {
                        return Err(format!("case {case}, n = {n}: annihilator mismatch"));
                    }
                    let brute_faithful = brute_ann.dim() == 0;
                    if brute_faithful != model.is_faithful() {
                        return Err(format!("case {case}, n = {n}: faithfulness mismatch"));
                    }
                    faithfulness_checks += 1;
                }
            }
            Ok((socle_checks, colon_checks, faithfulness_checks))
        })
        .collect();
    let mut outcome = SocleOracleOutcome {
        cases,
        socle_checks: 0,
        colon_checks: 0,
        faithfulness_checks: 0,
        failures: Vec::new(),
    };
    for r in per_case {
        match r {
            Ok((s, c, f)) => {
                outcome.socle_checks += s;
                outcome.colon_checks += c;
                outcome.faithfulness_checks += f;
            }
            Err(e) => outcome.failures.push(e),
        }
    }
    outcome
}
