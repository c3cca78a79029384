//! Presented local rings and modules, and the bridge from power-series
//! semantics to exact finite computations.
//!
//! A ring is given as polynomial ambient variables plus relation
//! generators; the modeled object is the local ring at the origin. All
//! reported invariants live in quotients by powers of a maximal-primary
//! ideal, and such a quotient contains a power of the maximal ideal, so
//! plain polynomial-ring computation is exact: no local orders are needed.
//! The primary-exponent certificate below is what backs that claim, and
//! the optional truncation exponent re-verifies it empirically.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::artinian::{ArtinianAlgebra, ArtinianModule};
use crate::error::{EngineError, Result};
use crate::groebner::{
    buchberger_in, module_buchberger_with, syzygy_module, truncated_basis, GroebnerBasis,
};
use crate::monomial::{ModuleOrder, Monomial, MonomialOrder};
use crate::poly::{FreeVector, Polynomial};
use crate::scalar::FieldSpec;

/// Highest exponent tried when certifying that an ideal is primary to the
/// maximal ideal.
pub const DEFAULT_PRIMARY_BOUND: u32 = 50;

/// Highest reduction number tried by [`PresentedRing::is_reduction`].
pub const DEFAULT_REDUCTION_BOUND: u32 = 8;

/// A local ring `k[[x_1, ..., x_d]] / a` presented by polynomial relation
/// generators. The maximal ideal is generated by the variable images.
#[derive(Debug)]
pub struct PresentedRing {
    field: FieldSpec,
    vars: Vec<String>,
    relations: Vec<Polynomial>,
    relations_gb: OnceLock<Arc<GroebnerBasis>>,
    power_cache: Mutex<BTreeMap<(Vec<Polynomial>, u32), Arc<Vec<Polynomial>>>>,
    primary_cache: Mutex<BTreeMap<Vec<Polynomial>, u32>>,
    quotient_cache: Mutex<BTreeMap<QuotientKey, Arc<ArtinianModule>>>,
    algebra_cache: Mutex<BTreeMap<AlgebraKey, Arc<ArtinianAlgebra>>>,
}

type AlgebraKey = (Vec<Polynomial>, Option<u32>);
type QuotientKey = (usize, Vec<FreeVector>, Vec<Polynomial>, u32, Option<u32>);

/// An ideal of a [`PresentedRing`], held as normalized generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IdealHandle {
    gens: Vec<Polynomial>,
}

impl IdealHandle {
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }
}

/// A finitely presented module: the cokernel of the presentation columns
/// inside the rank-`s` free module.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PresentedModule {
    rank: usize,
    columns: Vec<FreeVector>,
}

impl PresentedModule {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn columns(&self) -> &[FreeVector] {
        &self.columns
    }

    pub fn is_free(&self) -> bool {
        self.columns.is_empty()
    }
}

impl PresentedRing {
    pub fn new(
        field: FieldSpec,
        vars: Vec<String>,
        relations: Vec<Polynomial>,
    ) -> Result<Arc<PresentedRing>> {
        let nvars = vars.len();
        for (index, r) in relations.iter().enumerate() {
            assert_eq!(r.nvars(), nvars, "relation in wrong ambient ring");
            if r.constant_term().is_some() {
                return Err(EngineError::Internal(format!(
                    "relation generator {index} has a unit term; the quotient would not be local"
                )));
            }
        }
        let relations = relations.into_iter().filter(|p| !p.is_zero()).collect();
        Ok(Arc::new(PresentedRing {
            field,
            vars,
            relations,
            relations_gb: OnceLock::new(),
            power_cache: Mutex::new(BTreeMap::new()),
            primary_cache: Mutex::new(BTreeMap::new()),
            quotient_cache: Mutex::new(BTreeMap::new()),
            algebra_cache: Mutex::new(BTreeMap::new()),
        }))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder::DegRevLex
    }

    /// Reduced basis of the relation ideal, computed once.
    pub fn relations_basis(&self) -> Arc<GroebnerBasis> {
        self.relations_gb
            .get_or_init(|| {
                Arc::new(buchberger_in(self.nvars(), &self.relations, self.order()))
            })
            .clone()
    }

    /// Normal form of a polynomial modulo the relation ideal.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        self.relations_basis().reduce_poly(p)
    }

    /// Build an ideal handle, normalizing generators modulo the relations.
    pub fn ideal(&self, gens: &[Polynomial]) -> Result<IdealHandle> {
        let mut normalized: Vec<Polynomial> = Vec::new();
        for g in gens {
            assert_eq!(g.nvars(), self.nvars(), "generator in wrong ambient ring");
            let r = self.reduce(g);
            if r.is_zero() {
                continue;
            }
            if r.constant_term().is_some() {
                return Err(EngineError::Internal(
                    "ideal generator has a unit term; not a proper ideal".to_string(),
                ));
            }
            if !normalized.contains(&r) {
                normalized.push(r);
            }
        }
        normalized.sort();
        Ok(IdealHandle { gens: normalized })
    }

    /// The maximal ideal, generated by the variable images.
    pub fn maximal_ideal(&self) -> IdealHandle {
        let gens = (0..self.nvars())
            .map(|i| Polynomial::variable(self.nvars(), i, self.field.one()))
            .collect();
        IdealHandle { gens }
    }

    pub fn free_module(&self, rank: usize) -> PresentedModule {
        assert!(rank > 0, "free module rank must be positive");
        PresentedModule {
            rank,
            columns: Vec::new(),
        }
    }

    pub fn module_from_columns(&self, rank: usize, columns: Vec<FreeVector>) -> PresentedModule {
        let columns = columns
            .into_iter()
            .map(|c| {
                assert_eq!(c.rank(), rank, "presentation column rank mismatch");
                assert_eq!(c.nvars(), self.nvars(), "column in wrong ambient ring");
                c
            })
            .filter(|c| !c.is_zero())
            .collect();
        PresentedModule { rank, columns }
    }

    /// The ideal `(gens)` viewed as a module: rank is the generator count
    /// and the presentation columns are its syzygies over the ring.
    /// Generator order is preserved so the module components correspond to
    /// the given generators.
    pub fn module_from_ideal(&self, gens: &[Polynomial]) -> Result<PresentedModule> {
        let mut normalized: Vec<Polynomial> = Vec::new();
        for g in gens {
            assert_eq!(g.nvars(), self.nvars(), "generator in wrong ambient ring");
            let r = self.reduce(g);
            if r.is_zero() {
                continue;
            }
            if r.constant_term().is_some() {
                return Err(EngineError::Internal(
                    "ideal generator has a unit term; not a proper ideal".to_string(),
                ));
            }
            if !normalized.contains(&r) {
                normalized.push(r);
            }
        }
        let gens = normalized;
        if gens.is_empty() {
            return Err(EngineError::ZeroModule);
        }
        let k = gens.len();
        let mut inputs: Vec<FreeVector> = gens
            .iter()
            .map(|g| FreeVector::new(vec![g.clone()]))
            .collect();
        for r in &self.relations {
            inputs.push(FreeVector::new(vec![r.clone()]));
        }
        let syzygies = syzygy_module(&inputs, self.order());
        let relations_gb = self.relations_basis();
        let mut columns: Vec<FreeVector> = Vec::new();
        for s in &syzygies {
            let projected = FreeVector::new(
                (0..k)
                    .map(|i| relations_gb.reduce_poly(s.component(i)))
                    .collect(),
            );
            if !projected.is_zero() && !columns.contains(&projected) {
                columns.push(projected);
            }
        }
        columns.sort();
        Ok(PresentedModule { rank: k, columns })
    }

    /// Least `s` with the `s`-th power of the maximal ideal contained in
    /// the ideal plus the relations; the certificate that the ideal is
    /// primary to the maximal ideal.
    pub fn primary_exponent(&self, ideal: &IdealHandle) -> Result<u32> {
        self.primary_exponent_bounded(ideal, DEFAULT_PRIMARY_BOUND)
    }

    pub fn primary_exponent_bounded(&self, ideal: &IdealHandle, bound: u32) -> Result<u32> {
        if let Some(s) = self.primary_cache.lock().unwrap().get(&ideal.gens) {
            return Ok(*s);
        }
        let mut gens = self.relations.clone();
        gens.extend(ideal.gens.iter().cloned());
        let gb = buchberger_in(self.nvars(), &gens, self.order());
        for s in 1..=bound {
            if self.power_of_maximal_contained(&gb, s) {
                self.primary_cache
                    .lock()
                    .unwrap()
                    .insert(ideal.gens.clone(), s);
                return Ok(s);
            }
        }
        Err(EngineError::NotPrimary { bound })
    }

    fn power_of_maximal_contained(&self, gb: &GroebnerBasis, degree: u32) -> bool {
        let mut all_in = true;
        let mut exps = vec![0u32; self.nvars()];
        degree_monomials(&mut exps, 0, degree, &mut |m| {
            if all_in {
                let p = Polynomial::monomial(self.nvars(), m, self.field.one());
                if !gb.contains_poly(&p) {
                    all_in = false;
                }
            }
        });
        all_in
    }

    /// Generators of the `k`-th power: all `k`-fold products, deduplicated
    /// by normal form and minimalized (generators lying in the ideal of
    /// the others are dropped).
    pub fn ideal_power(&self, ideal: &IdealHandle, k: u32) -> IdealHandle {
        assert!(k > 0, "ideal powers need a positive exponent");
        if ideal.gens.is_empty() {
            return ideal.clone();
        }
        let key = (ideal.gens.clone(), k);
        if let Some(gens) = self.power_cache.lock().unwrap().get(&key) {
            return IdealHandle {
                gens: gens.as_ref().clone(),
            };
        }
        let mut products: Vec<Polynomial> = vec![Polynomial::constant(self.nvars(), self.field.one())];
        for _ in 0..k {
            let mut next = Vec::new();
            for p in &products {
                for g in &ideal.gens {
                    let q = self.reduce(&p.mul(g));
                    if !q.is_zero() && !next.contains(&q) {
                        next.push(q);
                    }
                }
            }
            products = next;
        }
        products.sort();
        let minimal = self.minimalize(products);
        self.power_cache
            .lock()
            .unwrap()
            .insert(key, Arc::new(minimal.clone()));
        IdealHandle { gens: minimal }
    }

    fn minimalize(&self, gens: Vec<Polynomial>) -> Vec<Polynomial> {
        let mut kept = gens;
        let mut i = 0;
        while i < kept.len() {
            let mut others = self.relations.clone();
            others.extend(kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()));
            let gb = buchberger_in(self.nvars(), &others, self.order());
            if gb.contains_poly(&kept[i]) {
                kept.remove(i);
            } else {
                i += 1;
            }
        }
        kept
    }

    /// Membership of a polynomial in `ideal + relations`.
    pub fn ideal_contains(&self, ideal: &IdealHandle, p: &Polynomial) -> bool {
        let mut gens = self.relations.clone();
        gens.extend(ideal.gens.iter().cloned());
        let gb = buchberger_in(self.nvars(), &gens, self.order());
        gb.contains_poly(p)
    }

    /// Equality of two ideals of the ring, by double containment.
    pub fn ideals_equal(&self, a: &IdealHandle, b: &IdealHandle) -> bool {
        a.gens.iter().all(|g| self.ideal_contains(b, g))
            && b.gens.iter().all(|g| self.ideal_contains(a, g))
    }

    /// Whether `smaller` is a reduction of `larger`: the least `r` with
    /// `smaller * larger^r = larger^(r+1)`, searched up to the bound.
    pub fn is_reduction(
        &self,
        smaller: &IdealHandle,
        larger: &IdealHandle,
    ) -> Result<(bool, Option<u32>)> {
        self.is_reduction_bounded(smaller, larger, DEFAULT_REDUCTION_BOUND)
    }

    pub fn is_reduction_bounded(
        &self,
        smaller: &IdealHandle,
        larger: &IdealHandle,
        bound: u32,
    ) -> Result<(bool, Option<u32>)> {
        for (index, g) in smaller.gens.iter().enumerate() {
            if !self.ideal_contains(larger, g) {
                return Err(EngineError::NotContained { index });
            }
        }
        for r in 0..=bound {
            let lhs = if r == 0 {
                smaller.clone()
            } else {
                let power = self.ideal_power(larger, r);
                let mut gens = Vec::new();
                for a in &smaller.gens {
                    for b in &power.gens {
                        let q = self.reduce(&a.mul(b));
                        if !q.is_zero() && !gens.contains(&q) {
                            gens.push(q);
                        }
                    }
                }
                gens.sort();
                IdealHandle { gens }
            };
            let rhs = self.ideal_power(larger, r + 1);
            if self.ideals_equal(&lhs, &rhs) {
                return Ok((true, Some(r)));
            }
        }
        Ok((false, None))
    }

    /// The model of the ring modulo `ideal^(n+1)`, exact by the primary
    /// certificate. `truncation` adds the given power of the maximal ideal
    /// to the defining generators; when the certificate holds this changes
    /// nothing, which is what the truncation-independence regression
    /// verifies.
    pub fn artinian_algebra(
        &self,
        ideal: &IdealHandle,
        n: u32,
        truncation: Option<u32>,
    ) -> Result<Arc<ArtinianAlgebra>> {
        self.primary_exponent(ideal)?;
        let power = self.ideal_power_or_unit(ideal, n + 1);
        let key: AlgebraKey = (power.clone(), truncation);
        if let Some(hit) = self.algebra_cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let mut gens = self.relations.clone();
        gens.extend(power.iter().cloned());
        let mut gb = buchberger_in(self.nvars(), &gens, self.order());
        if let Some(t) = truncation {
            gb = truncated_basis(&gb, t);
        }
        let alg = Arc::new(ArtinianAlgebra::build(self.field, gb)?);
        self.algebra_cache.lock().unwrap().insert(key, alg.clone());
        Ok(alg)
    }

    fn ideal_power_or_unit(&self, ideal: &IdealHandle, k: u32) -> Vec<Polynomial> {
        if ideal.gens.is_empty() {
            return Vec::new();
        }
        self.ideal_power(ideal, k).gens
    }

    /// The exact model of `module / ideal^(n+1) module` together with its
    /// host algebra.
    pub fn artinian_quotient(
        &self,
        module: &PresentedModule,
        ideal: &IdealHandle,
        n: u32,
        truncation: Option<u32>,
    ) -> Result<Arc<ArtinianModule>> {
        let key: QuotientKey = (
            module.rank,
            module.columns.clone(),
            self.ideal_power_or_unit(ideal, n + 1),
            n,
            truncation,
        );
        if let Some(hit) = self.quotient_cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let host = self.artinian_algebra(ideal, n, truncation)?;
        let model = if module.is_free() && module.rank == 1 {
            host.as_module()
        } else {
            let rank = module.rank;
            let mut gens: Vec<FreeVector> = module.columns.clone();
            let power = self.ideal_power_or_unit(ideal, n + 1);
            for c in 0..rank {
                for p in self.relations.iter().chain(power.iter()) {
                    gens.push(FreeVector::from_component(rank, c, p.clone()));
                }
            }
            let ord = ModuleOrder::new(self.order());
            let mut gb = module_buchberger_with(rank, self.nvars(), &gens, ord);
            if let Some(t) = truncation {
                gb = truncated_basis(&gb, t);
            }
            ArtinianModule::build(Arc::clone(&host), gb)?
        };
        let model = Arc::new(model);
        self.quotient_cache.lock().unwrap().insert(key, model.clone());
        Ok(model)
    }

    /// Nonzero detection for a presented module: by Nakayama the module is
    /// nonzero iff its quotient by the maximal ideal has positive length.
    pub fn module_is_nonzero(&self, module: &PresentedModule) -> Result<bool> {
        let m = self.maximal_ideal();
        let model = self.artinian_quotient(module, &m, 0, None)?;
        Ok(model.length() > 0)
    }
}

fn degree_monomials(
    exps: &mut Vec<u32>,
    var: usize,
    remaining: u32,
    emit: &mut impl FnMut(Monomial),
) {
    if exps.is_empty() {
        return;
    }
    if var + 1 == exps.len() {
        exps[var] = remaining;
        emit(Monomial::new(exps.clone()));
        exps[var] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[var] = e;
        degree_monomials(exps, var + 1, remaining - e, emit);
    }
    exps[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

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

    /// k[[t^2, t^3]] presented as k[X1, X2]/(X1^3 - X2^2).
    fn cusp() -> Arc<PresentedRing> {
        PresentedRing::new(
            Q,
            vec!["X1".into(), "X2".into()],
            vec![poly(2, &[(&[3, 0], 1), (&[0, 2], -1)])],
        )
        .unwrap()
    }

    #[test]
    fn maximal_ideal_has_exponent_one() {
        let r = cusp();
        let m = r.maximal_ideal();
        assert_eq!(r.primary_exponent(&m).unwrap(), 1);
    }

    #[test]
    fn primary_exponent_of_parameter_x1() {
        let r = cusp();
        let i = r.ideal(&[poly(2, &[(&[1, 0], 1)])]).unwrap();
        assert_eq!(r.primary_exponent(&i).unwrap(), 2);
    }

    #[test]
    fn primary_exponent_of_parameter_x2() {
        let r = cusp();
        let i = r.ideal(&[poly(2, &[(&[0, 1], 1)])]).unwrap();
        assert_eq!(r.primary_exponent(&i).unwrap(), 3);
    }

    #[test]
    fn primary_exponent_rejects_non_primary() {
        // (x) in k[x, y]: no power of (x, y) fits inside
        let r = PresentedRing::new(Q, vec!["x".into(), "y".into()], vec![]).unwrap();
        let i = r.ideal(&[poly(2, &[(&[1, 0], 1)])]).unwrap();
        match r.primary_exponent_bounded(&i, 6) {
            Err(EngineError::NotPrimary { bound: 6 }) => {}
            other => panic!("expected primary failure, got {other:?}"),
        }
    }

    #[test]
    fn square_of_maximal_ideal_minimalizes() {
        // in k[[t^2, t^3]]: m^2 = (t^4, t^5, t^6) minimalizes to (t^4, t^5)
        let r = cusp();
        let m = r.maximal_ideal();
        let m2 = r.ideal_power(&m, 2);
        assert_eq!(
            m2.generators(),
            &[
                poly(2, &[(&[1, 1], 1)]), // x1 x2 = t^5
                poly(2, &[(&[2, 0], 1)]), // x1^2 = t^4
            ]
        );
    }

    #[test]
    fn first_power_is_identity() {
        let r = cusp();
        let i = r.ideal(&[poly(2, &[(&[1, 0], 1)])]).unwrap();
        assert_eq!(r.ideal_power(&i, 1), i);
    }

    #[test]
    fn principal_power_is_principal() {
        let r = cusp();
        let i = r.ideal(&[poly(2, &[(&[1, 0], 1)])]).unwrap();
        let i2 = r.ideal_power(&i, 2);
        assert_eq!(i2.generators(), &[poly(2, &[(&[2, 0], 1)])]);
    }

    #[test]
    fn x1_is_a_reduction_of_the_maximal_ideal() {
        let r = cusp();
        let j = r.ideal(&[poly(2, &[(&[1, 0], 1)])]).unwrap();
        let m = r.maximal_ideal();
        assert_eq!(r.is_reduction(&j, &m).unwrap(), (true, Some(1)));
    }

    #[test]
    fn ideal_is_a_reduction_of_itself() {
        let r = cusp();
        let m = r.maximal_ideal();
        assert_eq!(r.is_reduction(&m, &m).unwrap(), (true, Some(0)));
    }

    #[test]
    fn x2_is_not_a_reduction_of_the_maximal_ideal() {
        // valuation picture: (t^3) m^r has no element of valuation 2r + 2
        let r = cusp();
        let j = r.ideal(&[poly(2, &[(&[0, 1], 1)])]).unwrap();
        let m = r.maximal_ideal();
        assert_eq!(r.is_reduction_bounded(&j, &m, 5).unwrap(), (false, None));
    }

    #[test]
    fn reduction_containment_is_checked() {
        let r = cusp();
        let j = r.ideal(&[poly(2, &[(&[1, 0], 1)])]).unwrap();
        let m2 = r.ideal_power(&r.maximal_ideal(), 2);
        match r.is_reduction(&j, &m2) {
            Err(EngineError::NotContained { .. }) => {}
            other => panic!("expected containment failure, got {other:?}"),
        }
    }

    #[test]
    fn cusp_lengths_along_maximal_powers() {
        // l(R / m^(n+1)) = 2n + 1: valuations {0, 2, 3, ..., 2n+1}
        let r = cusp();
        let m = r.maximal_ideal();
        let free = r.free_module(1);
        for (n, expect) in [(0u32, 1usize), (1, 3), (2, 5)] {
            let model = r.artinian_quotient(&free, &m, n, None).unwrap();
            assert_eq!(model.length(), expect);
        }
    }

    #[test]
    fn cusp_lengths_along_parameter_powers() {
        // l(R / (x1)^(n+1)) = 2(n + 1)
        let r = cusp();
        let i = r.ideal(&[poly(2, &[(&[1, 0], 1)])]).unwrap();
        let free = r.free_module(1);
        for (n, expect) in [(0u32, 2usize), (1, 4), (2, 6)] {
            let model = r.artinian_quotient(&free, &i, n, None).unwrap();
            assert_eq!(model.length(), expect);
        }
    }

    #[test]
    fn residue_field_model() {
        let r = cusp();
        let m = r.maximal_ideal();
        let model = r.artinian_quotient(&r.free_module(1), &m, 0, None).unwrap();
        assert_eq!(model.length(), 1);
        assert!(model.is_faithful());
    }

    #[test]
    fn truncation_does_not_change_certified_quotients() {
        let r = cusp();
        let m = r.maximal_ideal();
        let free = r.free_module(1);
        for n in 0..3u32 {
            let s = r.primary_exponent(&m).unwrap();
            let plain = r.artinian_quotient(&free, &m, n, None).unwrap();
            let trunc = r
                .artinian_quotient(&free, &m, n, Some(s * (n + 1)))
                .unwrap();
            let trunc2 = r
                .artinian_quotient(&free, &m, n, Some(s * (n + 1) + 2))
                .unwrap();
            assert_eq!(plain.length(), trunc.length());
            assert_eq!(plain.length(), trunc2.length());
            assert_eq!(plain.socle().dim(), trunc.socle().dim());
            assert_eq!(plain.socle().dim(), trunc2.socle().dim());
        }
    }

    #[test]
    fn syzygy_presentation_of_the_maximal_ideal() {
        // m = (x1, x2) in the cusp: columns span (x2, -x1) and (x1^2, -x2)
        let r = cusp();
        let module = r
            .module_from_ideal(&[poly(2, &[(&[1, 0], 1)]), poly(2, &[(&[0, 1], 1)])])
            .unwrap();
        assert_eq!(module.rank(), 2);
        let ord = ModuleOrder::new(r.order());
        let gb = module_buchberger_with(2, 2, module.columns(), ord);
        let koszul = FreeVector::new(vec![
            poly(2, &[(&[0, 1], 1)]),
            poly(2, &[(&[1, 0], -1)]),
        ]);
        let second = FreeVector::new(vec![
            poly(2, &[(&[2, 0], 1)]),
            poly(2, &[(&[0, 1], -1)]),
        ]);
        assert!(gb.contains_vector(&koszul));
        assert!(gb.contains_vector(&second));
    }

    #[test]
    fn maximal_ideal_as_module_has_expected_lengths() {
        // l(m / m^(n+1) m): valuations {2, 3} at n = 0 give length 2
        let r = cusp();
        let module = r
            .module_from_ideal(&[poly(2, &[(&[1, 0], 1)]), poly(2, &[(&[0, 1], 1)])])
            .unwrap();
        let m = r.maximal_ideal();
        let model = r.artinian_quotient(&module, &m, 0, None).unwrap();
        assert_eq!(model.length(), 2);
        assert!(r.module_is_nonzero(&module).unwrap());
    }

    #[test]
    fn zero_module_is_detected() {
        // coker of the identity column is zero
        let r = cusp();
        let one = Polynomial::constant(2, Q.one());
        let module = r.module_from_columns(1, vec![FreeVector::new(vec![one])]);
        assert!(!r.module_is_nonzero(&module).unwrap());
    }

    #[test]
    fn zero_variable_ring_is_the_field() {
        let r = PresentedRing::new(Q, vec![], vec![]).unwrap();
        let m = r.maximal_ideal();
        assert!(m.is_zero());
        assert_eq!(r.primary_exponent(&m).unwrap(), 1);
        let model = r.artinian_quotient(&r.free_module(1), &m, 0, None).unwrap();
        assert_eq!(model.length(), 1);
        assert_eq!(model.socle().dim(), 1);
    }
}
