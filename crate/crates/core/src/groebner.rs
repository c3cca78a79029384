//! Buchberger's algorithm for ideals and for submodules of free modules,
//! normal forms, standard monomials of zero-dimensional quotients, and
//! syzygy computation.
//!
//! Ideals are handled as rank-1 free modules throughout, with the product
//! criterion enabled only there (it is not valid for higher rank). Pair
//! selection follows the normal strategy (smallest lcm first) and the
//! output is always the unique reduced basis for the given order, so runs
//! are reproducible byte for byte.

use std::collections::BTreeSet;

use crate::error::{EngineError, Result};
use crate::monomial::{ModuleOrder, Monomial, MonomialOrder};
use crate::poly::{FreeVector, Polynomial};

/// A reduced Groebner basis of a submodule of a free module (rank 1 for
/// ideals). Elements are monic, interreduced, and sorted ascending by
/// leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    rank: usize,
    nvars: usize,
    order: ModuleOrder,
    elems: Vec<FreeVector>,
    leads: Vec<(usize, Monomial)>,
}

impl GroebnerBasis {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn elements(&self) -> &[FreeVector] {
        &self.elems
    }

    pub fn leading_terms(&self) -> &[(usize, Monomial)] {
        &self.leads
    }

    pub fn is_reduced(&self) -> bool {
        true
    }

    /// Rank-1 elements as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        assert_eq!(self.rank, 1, "polynomial view requires a rank-1 basis");
        self.elems.iter().map(|v| v.component(0).clone()).collect()
    }

    /// Full normal form of a free vector: no remaining term is divisible
    /// by any leading term of the basis.
    pub fn reduce_vector(&self, v: &FreeVector) -> FreeVector {
        normal_form(v, &self.elems, &self.leads, self.order)
    }

    pub fn reduce_poly(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(self.rank, 1, "polynomial reduction requires a rank-1 basis");
        self.reduce_vector(&FreeVector::new(vec![p.clone()]))
            .component(0)
            .clone()
    }

    pub fn contains_vector(&self, v: &FreeVector) -> bool {
        self.reduce_vector(v).is_zero()
    }

    pub fn contains_poly(&self, p: &Polynomial) -> bool {
        self.reduce_poly(p).is_zero()
    }

    /// Monomials (with component tags) outside the leading-term module.
    /// Errors unless the quotient is a finite-dimensional vector space.
    pub fn standard_monomials(&self) -> Result<StandardBasis> {
        let mut entries: Vec<(usize, Monomial)> = Vec::new();
        for c in 0..self.rank {
            let lts: Vec<&Monomial> = self
                .leads
                .iter()
                .filter(|(lc, _)| *lc == c)
                .map(|(_, m)| m)
                .collect();
            if lts.iter().any(|m| m.is_one()) {
                continue; // the whole component is in the submodule
            }
            // zero-dimensionality: every variable needs a pure power
            let mut bounds = vec![0u32; self.nvars];
            for v in 0..self.nvars {
                let bound = lts
                    .iter()
                    .filter(|m| m.pure_power_var() == Some(v))
                    .map(|m| m.exponent(v))
                    .min();
                match bound {
                    Some(b) => bounds[v] = b,
                    None => {
                        return Err(EngineError::NotZeroDimensional { var: v, component: c })
                    }
                }
            }
            let mut exps = vec![0u32; self.nvars];
            enumerate_box(&mut exps, 0, &bounds, &lts, &mut |m| {
                entries.push((c, m));
            });
        }
        entries.sort_by(|a, b| self.order.compare(a, b));
        Ok(StandardBasis {
            rank: self.rank,
            entries,
        })
    }
}

fn enumerate_box(
    exps: &mut Vec<u32>,
    var: usize,
    bounds: &[u32],
    lts: &[&Monomial],
    emit: &mut impl FnMut(Monomial),
) {
    if var == bounds.len() {
        let m = Monomial::new(exps.clone());
        if !lts.iter().any(|lt| lt.divides(&m)) {
            emit(m);
        }
        return;
    }
    for e in 0..bounds[var] {
        exps[var] = e;
        enumerate_box(exps, var + 1, bounds, lts, emit);
    }
    exps[var] = 0;
}

/// The standard-monomial basis of a zero-dimensional quotient: monomials
/// (tagged with their free-module component) not divisible by any leading
/// monomial of the defining basis. Closed under monomial division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardBasis {
    rank: usize,
    entries: Vec<(usize, Monomial)>,
}

impl StandardBasis {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Monomial)] {
        &self.entries
    }

    pub fn position(&self, entry: &(usize, Monomial)) -> Option<usize> {
        self.entries.iter().position(|e| e == entry)
    }
}

/// Full normal form with respect to a set of monic reducers.
fn normal_form(
    v: &FreeVector,
    basis: &[FreeVector],
    leads: &[(usize, Monomial)],
    order: ModuleOrder,
) -> FreeVector {
    let rank = v.rank();
    let nvars = v.nvars();
    let mut rem = FreeVector::zero(nvars, rank);
    let mut work = v.clone();
    while let Some(((c, m), coef)) = work.leading_term(order) {
        let reducer = leads
            .iter()
            .position(|(lc, lm)| *lc == c && lm.divides(&m));
        match reducer {
            Some(k) => {
                let q = leads[k].1.quotient_into(&m);
                work = work.sub(&basis[k].mul_term(&q, &coef));
            }
            None => {
                let t = FreeVector::from_component(rank, c, Polynomial::monomial(nvars, m, coef));
                rem = rem.add(&t);
                work = work.sub(&t);
            }
        }
    }
    rem
}

struct Pair {
    i: usize,
    j: usize,
    lcm: (usize, Monomial),
}

struct Engine {
    rank: usize,
    nvars: usize,
    order: ModuleOrder,
    basis: Vec<FreeVector>,
    leads: Vec<(usize, Monomial)>,
    single_term: Vec<bool>,
    pairs: Vec<Pair>,
    pending: BTreeSet<(usize, usize)>,
}

impl Engine {
    fn new(rank: usize, nvars: usize, order: ModuleOrder) -> Self {
        Engine {
            rank,
            nvars,
            order,
            basis: Vec::new(),
            leads: Vec::new(),
            single_term: Vec::new(),
            pairs: Vec::new(),
            pending: BTreeSet::new(),
        }
    }

    fn push(&mut self, v: FreeVector) {
        let v = v.monic(self.order);
        let (lead, _) = v.leading_term(self.order).expect("nonzero element");
        let single = v.terms().count() == 1;
        let idx = self.basis.len();
        for k in 0..idx {
            if self.leads[k].0 != lead.0 {
                continue;
            }
            // S-vector of two monomials is identically zero
            if single && self.single_term[k] {
                continue;
            }
            // product criterion, valid for ideals only
            if self.rank == 1 && self.leads[k].1.is_coprime_with(&lead.1) {
                continue;
            }
            let lcm = (lead.0, self.leads[k].1.lcm(&lead.1));
            self.pairs.push(Pair { i: k, j: idx, lcm });
            self.pending.insert((k, idx));
        }
        self.basis.push(v);
        self.leads.push(lead);
        self.single_term.push(single);
    }

    fn pop_min(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let ord = self
                .order
                .compare(&self.pairs[k].lcm, &self.pairs[best].lcm)
                .then_with(|| {
                    (self.pairs[k].i, self.pairs[k].j).cmp(&(self.pairs[best].i, self.pairs[best].j))
                });
            if ord == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let pair = self.pairs.swap_remove(best);
        self.pending.remove(&(pair.i, pair.j));
        Some(pair)
    }

    /// Chain criterion: skip `(i, j)` if some other element's lead divides
    /// the pair lcm and both side pairs have already been handled.
    fn chain_superfluous(&self, pair: &Pair) -> bool {
        for k in 0..self.basis.len() {
            if k == pair.i || k == pair.j {
                continue;
            }
            if self.leads[k].0 != pair.lcm.0 || !self.leads[k].1.divides(&pair.lcm.1) {
                continue;
            }
            let a = (pair.i.min(k), pair.i.max(k));
            let b = (pair.j.min(k), pair.j.max(k));
            if !self.pending.contains(&a) && !self.pending.contains(&b) {
                return true;
            }
        }
        false
    }

    fn s_vector(&self, pair: &Pair) -> FreeVector {
        let (ci, mi) = &self.leads[pair.i];
        let (_, mj) = &self.leads[pair.j];
        let one = self.basis[pair.i]
            .leading_term(self.order)
            .map(|(_, c)| c.field().one())
            .expect("nonzero");
        let ui = mi.quotient_into(&pair.lcm.1);
        let uj = mj.quotient_into(&pair.lcm.1);
        debug_assert_eq!(*ci, pair.lcm.0);
        self.basis[pair.i]
            .mul_term(&ui, &one)
            .sub(&self.basis[pair.j].mul_term(&uj, &one))
    }

    fn run(mut self) -> GroebnerBasis {
        while let Some(pair) = self.pop_min() {
            if self.chain_superfluous(&pair) {
                continue;
            }
            let s = self.s_vector(&pair);
            let r = normal_form(&s, &self.basis, &self.leads, self.order);
            if !r.is_zero() {
                self.push(r);
            }
        }
        self.finish()
    }

    fn finish(self) -> GroebnerBasis {
        let order = self.order;
        // minimize: drop elements whose lead is divisible by another lead
        let mut keep: Vec<usize> = Vec::new();
        for i in 0..self.basis.len() {
            let (ci, mi) = &self.leads[i];
            let redundant = (0..self.basis.len()).any(|j| {
                if i == j {
                    return false;
                }
                let (cj, mj) = &self.leads[j];
                cj == ci && mj.divides(mi) && (mj != mi || j < i)
            });
            if !redundant {
                keep.push(i);
            }
        }
        let mut elems: Vec<FreeVector> = keep.iter().map(|&i| self.basis[i].clone()).collect();
        // tail-reduce until stable
        loop {
            let leads: Vec<(usize, Monomial)> = elems
                .iter()
                .map(|v| v.leading_term(order).unwrap().0)
                .collect();
            let mut changed = false;
            for i in 0..elems.len() {
                let others: Vec<FreeVector> = elems
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, v)| v.clone())
                    .collect();
                let other_leads: Vec<(usize, Monomial)> = leads
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, l)| l.clone())
                    .collect();
                let reduced =
                    normal_form(&elems[i], &others, &other_leads, order).monic(order);
                if reduced != elems[i] {
                    assert!(!reduced.is_zero(), "minimal element reduced to zero");
                    elems[i] = reduced;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        elems.sort_by(|a, b| {
            order.compare(
                &a.leading_term(order).unwrap().0,
                &b.leading_term(order).unwrap().0,
            )
        });
        let leads = elems
            .iter()
            .map(|v| v.leading_term(order).unwrap().0)
            .collect();
        GroebnerBasis {
            rank: self.rank,
            nvars: self.nvars,
            order,
            elems,
            leads,
        }
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], ord: MonomialOrder) -> GroebnerBasis {
    assert!(!gens.is_empty(), "use buchberger_in for the zero ideal");
    buchberger_in(gens[0].nvars(), gens, ord)
}

/// Like [`buchberger`] but with the ambient variable count given, so the
/// zero ideal (empty generator list) is representable.
pub fn buchberger_in(nvars: usize, gens: &[Polynomial], ord: MonomialOrder) -> GroebnerBasis {
    let vectors: Vec<FreeVector> = gens
        .iter()
        .map(|p| FreeVector::new(vec![p.clone()]))
        .collect();
    module_buchberger_in(1, nvars, &vectors, ModuleOrder::new(ord))
}

/// Reduced Groebner basis of the submodule generated by `vectors`.
pub fn module_buchberger(vectors: &[FreeVector], ord: ModuleOrder) -> GroebnerBasis {
    assert!(!vectors.is_empty(), "use module_buchberger_in for the zero submodule");
    let rank = vectors[0].rank();
    let nvars = vectors[0].nvars();
    module_buchberger_in(rank, nvars, vectors, ord)
}

/// Like [`module_buchberger`] with rank and variable count given, so the
/// zero submodule is representable.
pub fn module_buchberger_with(
    rank: usize,
    nvars: usize,
    vectors: &[FreeVector],
    ord: ModuleOrder,
) -> GroebnerBasis {
    module_buchberger_in(rank, nvars, vectors, ord)
}

fn module_buchberger_in(
    rank: usize,
    nvars: usize,
    vectors: &[FreeVector],
    ord: ModuleOrder,
) -> GroebnerBasis {
    let mut engine = Engine::new(rank, nvars, ord);
    for v in vectors {
        assert_eq!(v.rank(), rank, "free module rank mismatch");
        assert_eq!(v.nvars(), nvars, "ambient ring mismatch");
        let r = normal_form(v, &engine.basis, &engine.leads, ord);
        if !r.is_zero() {
            engine.push(r);
        }
    }
    engine.run()
}

/// Basis of the submodule plus the `degree`-th power of the maximal ideal
/// (all monomials of that degree, in every component).
///
/// When the power is already contained in the submodule the result is the
/// input basis unchanged; otherwise the missing monomial generators are
/// appended and the basis recomputed.
pub fn truncated_basis(gb: &GroebnerBasis, degree: u32) -> GroebnerBasis {
    let mut missing: Vec<FreeVector> = Vec::new();
    let field = gb
        .elems
        .iter()
        .flat_map(|v| v.terms().map(|(_, c)| c.field()))
        .next();
    let Some(field) = field else {
        // empty basis: the truncation is the whole power of the maximal ideal,
        // but with no coefficients to borrow a field from there is nothing to
        // build; callers always hold nonempty bases here.
        return gb.clone();
    };
    for c in 0..gb.rank {
        let mut exps = vec![0u32; gb.nvars];
        collect_degree_monomials(&mut exps, 0, degree, &mut |m| {
            let v = FreeVector::from_component(
                gb.rank,
                c,
                Polynomial::monomial(gb.nvars, m, field.one()),
            );
            if !gb.contains_vector(&v) {
                missing.push(v);
            }
        });
    }
    if missing.is_empty() {
        return gb.clone();
    }
    let mut gens = gb.elems.clone();
    gens.extend(missing);
    module_buchberger_in(gb.rank, gb.nvars, &gens, gb.order)
}

fn collect_degree_monomials(
    exps: &mut Vec<u32>,
    var: usize,
    remaining: u32,
    emit: &mut impl FnMut(Monomial),
) {
    if var + 1 == exps.len() {
        exps[var] = remaining;
        emit(Monomial::new(exps.clone()));
        exps[var] = 0;
        return;
    }
    if exps.is_empty() {
        return; // no variables: no positive-degree monomials
    }
    for e in 0..=remaining {
        exps[var] = e;
        collect_degree_monomials(exps, var + 1, remaining - e, emit);
    }
    exps[var] = 0;
}

/// Generators of the syzygy module of `vectors`: all `(a_1, ..., a_k)`
/// with `sum a_i vectors_i = 0`, computed by eliminating the original
/// components from the graph module.
pub fn syzygy_module(vectors: &[FreeVector], ord: MonomialOrder) -> Vec<FreeVector> {
    assert!(!vectors.is_empty());
    let rank = vectors[0].rank();
    let nvars = vectors[0].nvars();
    let k = vectors.len();
    let graph_rank = rank + k;
    let one = vectors
        .iter()
        .flat_map(|v| v.terms().map(|(_, c)| c.field().one()))
        .next()
        .expect("syzygies of all-zero inputs are not meaningful");
    let graphs: Vec<FreeVector> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut comps: Vec<Polynomial> = v.components().to_vec();
            for j in 0..k {
                comps.push(if j == i {
                    Polynomial::constant(nvars, one.clone())
                } else {
                    Polynomial::zero(nvars)
                });
            }
            FreeVector::new(comps)
        })
        .collect();
    // position-over-term with top priority makes components 0..rank dominate,
    // so basis elements whose lead lies in the tracking block have zero
    // vector part: their tails generate the syzygy module.
    let gb = module_buchberger_in(graph_rank, nvars, &graphs, ModuleOrder::new(ord));
    let mut syzygies = Vec::new();
    for e in gb.elements() {
        if e.components()[..rank].iter().all(|p| p.is_zero()) {
            syzygies.push(FreeVector::new(e.components()[rank..].to_vec()));
        }
    }
    syzygies
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn poly(field: FieldSpec, nvars: usize, terms: &[(&[u32], i64)]) -> Polynomial {
        let mut p = Polynomial::zero(nvars);
        for (exps, c) in terms {
            p = p.add(&Polynomial::monomial(
                nvars,
                Monomial::new(exps.to_vec()),
                field.from_i64(*c),
            ));
        }
        p
    }

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn buchberger_lex_textbook_example() {
        // {x^2 - y, x y - 1} under lex(x > y) has reduced basis {x - y^2, y^3 - 1}
        let gens = vec![
            poly(Q, 2, &[(&[2, 0], 1), (&[0, 1], -1)]),
            poly(Q, 2, &[(&[1, 1], 1), (&[0, 0], -1)]),
        ];
        let gb = buchberger(&gens, MonomialOrder::Lex);
        let expect = vec![
            poly(Q, 2, &[(&[0, 3], 1), (&[0, 0], -1)]),
            poly(Q, 2, &[(&[1, 0], 1), (&[0, 2], -1)]),
        ];
        assert_eq!(gb.polynomials(), expect);
        // every input reduces to zero
        for g in &gens {
            assert!(gb.contains_poly(g));
        }
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let gens = vec![
            poly(Q, 2, &[(&[2, 0], 1)]),
            poly(Q, 2, &[(&[1, 1], 1)]),
            poly(Q, 2, &[(&[0, 2], 1)]),
        ];
        let gb = buchberger(&gens, MonomialOrder::DegRevLex);
        // already reduced; elements come back sorted ascending by lead
        let expect = vec![gens[2].clone(), gens[1].clone(), gens[0].clone()];
        assert_eq!(gb.polynomials(), expect);
    }

    #[test]
    fn principal_ideal_normalizes_monic() {
        let gens = vec![poly(Q, 2, &[(&[1, 0], 3), (&[0, 1], -6)])];
        let gb = buchberger(&gens, MonomialOrder::DegRevLex);
        assert_eq!(
            gb.polynomials(),
            vec![poly(Q, 2, &[(&[1, 0], 1), (&[0, 1], -2)])]
        );
    }

    #[test]
    fn normal_form_examples() {
        let gb = buchberger(
            &[
                poly(Q, 2, &[(&[2, 0], 1), (&[0, 1], -1)]),
                poly(Q, 2, &[(&[1, 1], 1), (&[0, 0], -1)]),
            ],
            MonomialOrder::Lex,
        );
        // x^2 y -> y^2
        let r = gb.reduce_poly(&poly(Q, 2, &[(&[2, 1], 1)]));
        assert_eq!(r, poly(Q, 2, &[(&[0, 2], 1)]));
        // idempotent
        assert_eq!(gb.reduce_poly(&r), r);
        // members reduce to zero
        for g in gb.polynomials() {
            assert!(gb.contains_poly(&g));
        }
        // 1 is not in the proper monomial ideal (x^2, x y, y^2)
        let gbm = buchberger(
            &[
                poly(Q, 2, &[(&[2, 0], 1)]),
                poly(Q, 2, &[(&[1, 1], 1)]),
                poly(Q, 2, &[(&[0, 2], 1)]),
            ],
            MonomialOrder::DegRevLex,
        );
        let one = poly(Q, 2, &[(&[0, 0], 1)]);
        assert_eq!(gbm.reduce_poly(&one), one);
    }

    #[test]
    fn standard_monomials_of_monomial_ideal() {
        let gb = buchberger(
            &[
                poly(Q, 2, &[(&[2, 0], 1)]),
                poly(Q, 2, &[(&[1, 1], 1)]),
                poly(Q, 2, &[(&[0, 2], 1)]),
            ],
            MonomialOrder::DegRevLex,
        );
        let sb = gb.standard_monomials().unwrap();
        let mons: Vec<Monomial> = sb.entries().iter().map(|(_, m)| m.clone()).collect();
        // ascending under degrevlex: 1 < y < x
        assert_eq!(
            mons,
            vec![
                Monomial::new(vec![0, 0]),
                Monomial::new(vec![0, 1]),
                Monomial::new(vec![1, 0]),
            ]
        );
    }

    #[test]
    fn standard_monomials_after_lex_elimination() {
        let gb = buchberger(
            &[
                poly(Q, 2, &[(&[2, 0], 1), (&[0, 1], -1)]),
                poly(Q, 2, &[(&[1, 1], 1), (&[0, 0], -1)]),
            ],
            MonomialOrder::Lex,
        );
        // leading terms x and y^3: standard monomials {1, y, y^2}
        let sb = gb.standard_monomials().unwrap();
        let mons: Vec<Monomial> = sb.entries().iter().map(|(_, m)| m.clone()).collect();
        assert_eq!(
            mons,
            vec![
                Monomial::new(vec![0, 0]),
                Monomial::new(vec![0, 1]),
                Monomial::new(vec![0, 2]),
            ]
        );
    }

    #[test]
    fn standard_monomials_univariate_power() {
        let gb = buchberger(&[poly(Q, 1, &[(&[3], 1)])], MonomialOrder::DegRevLex);
        let sb = gb.standard_monomials().unwrap();
        assert_eq!(sb.len(), 3);
    }

    #[test]
    fn not_zero_dimensional_is_reported() {
        let gb = buchberger(&[poly(Q, 2, &[(&[2, 0], 1)])], MonomialOrder::DegRevLex);
        match gb.standard_monomials() {
            Err(EngineError::NotZeroDimensional { var: 1, component: 0 }) => {}
            other => panic!("expected non-zero-dimensional error, got {other:?}"),
        }
    }

    #[test]
    fn module_basis_of_diagonal_is_itself() {
        let x = poly(Q, 1, &[(&[1], 1)]);
        let zero = Polynomial::zero(1);
        let v1 = FreeVector::new(vec![x.clone(), zero.clone()]);
        let v2 = FreeVector::new(vec![zero.clone(), x.clone()]);
        let gb = module_buchberger(
            &[v1.clone(), v2.clone()],
            ModuleOrder::new(MonomialOrder::DegRevLex),
        );
        // ascending under the position-over-term order: component 1 first
        assert_eq!(gb.elements(), &[v2, v1]);
    }

    #[test]
    fn module_basis_covers_both_components() {
        // presentation columns (X2, -X1), (X1^2, -X2) over k[X1, X2]
        let c1 = FreeVector::new(vec![
            poly(Q, 2, &[(&[0, 1], 1)]),
            poly(Q, 2, &[(&[1, 0], -1)]),
        ]);
        let c2 = FreeVector::new(vec![
            poly(Q, 2, &[(&[2, 0], 1)]),
            poly(Q, 2, &[(&[0, 1], -1)]),
        ]);
        let gb = module_buchberger(
            &[c1.clone(), c2.clone()],
            ModuleOrder::new(MonomialOrder::DegRevLex),
        );
        let lead_components: BTreeSet<usize> =
            gb.leading_terms().iter().map(|(c, _)| *c).collect();
        assert_eq!(lead_components, BTreeSet::from([0, 1]));
        assert!(gb.contains_vector(&c1));
        assert!(gb.contains_vector(&c2));
    }

    #[test]
    fn single_vector_module_basis_is_monic() {
        let f = poly(Q, 1, &[(&[2], 2), (&[1], 4)]);
        let v = FreeVector::new(vec![f, Polynomial::zero(1)]);
        let gb = module_buchberger(&[v], ModuleOrder::new(MonomialOrder::DegRevLex));
        assert_eq!(gb.elements().len(), 1);
        let lead = gb.elements()[0].leading_term(gb.order()).unwrap();
        assert!(lead.1.is_one());
        assert_eq!(
            gb.elements()[0].component(0),
            &poly(Q, 1, &[(&[2], 1), (&[1], 2)])
        );
    }

    #[test]
    fn truncation_certified_case_is_identity() {
        // (x^2, x y, y^2) contains every degree-2 monomial
        let gb = buchberger(
            &[
                poly(Q, 2, &[(&[2, 0], 1)]),
                poly(Q, 2, &[(&[1, 1], 1)]),
                poly(Q, 2, &[(&[0, 2], 1)]),
            ],
            MonomialOrder::DegRevLex,
        );
        let t = truncated_basis(&gb, 2);
        assert_eq!(t, gb);
    }

    #[test]
    fn truncation_cuts_when_power_is_missing() {
        // (x^2 - y) + m^2 contains y; the truncated basis must expose it
        let gb = buchberger(
            &[poly(Q, 2, &[(&[2, 0], 1), (&[0, 1], -1)])],
            MonomialOrder::DegRevLex,
        );
        let t = truncated_basis(&gb, 2);
        assert!(t.contains_poly(&poly(Q, 2, &[(&[0, 1], 1)])));
        let sb = t.standard_monomials().unwrap();
        assert_eq!(sb.len(), 2); // {1, x}
    }

    #[test]
    fn syzygies_of_cusp_maximal_ideal_generators() {
        // syzygies of (x1, x2) modulo (x1^3 - x2^2): expect relations
        // equivalent to columns (x2, -x1) and (x1^2, -x2)
        let x1 = poly(Q, 2, &[(&[1, 0], 1)]);
        let x2 = poly(Q, 2, &[(&[0, 1], 1)]);
        let rel = poly(Q, 2, &[(&[3, 0], 1), (&[0, 2], -1)]);
        let inputs = vec![
            FreeVector::new(vec![x1.clone()]),
            FreeVector::new(vec![x2.clone()]),
            FreeVector::new(vec![rel.clone()]),
        ];
        let syz = syzygy_module(&inputs, MonomialOrder::DegRevLex);
        assert!(!syz.is_empty());
        // every syzygy really annihilates the inputs
        for s in &syz {
            let mut acc = Polynomial::zero(2);
            acc = acc.add(&s.component(0).mul(&x1));
            acc = acc.add(&s.component(1).mul(&x2));
            acc = acc.add(&s.component(2).mul(&rel));
            assert!(acc.is_zero());
        }
        // projecting away the relation coordinate, the syzygy module must
        // contain (x2, -x1): x2*x1 - x1*x2 = 0
        let projected: Vec<FreeVector> = syz
            .iter()
            .map(|s| FreeVector::new(s.components()[..2].to_vec()))
            .collect();
        let gb = module_buchberger(&projected, ModuleOrder::new(MonomialOrder::DegRevLex));
        let koszul = FreeVector::new(vec![x2.clone(), x1.neg()]);
        assert!(gb.contains_vector(&koszul));
        // and (x1^2, -x2): x1^2*x1 - x2*x2 = rel
        let tschirnhaus = FreeVector::new(vec![x1.mul(&x1), x2.neg()]);
        assert!(gb.contains_vector(&tschirnhaus));
    }
}
