//! Exact multivariate polynomials and elements of free modules over the
//! ambient polynomial ring.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::monomial::{ModuleOrder, Monomial, MonomialOrder};
use crate::scalar::Scalar;

/// A multivariate polynomial, stored as a sparse map from monomials to
/// nonzero coefficients. The zero polynomial has an empty term map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn variable(nvars: usize, i: usize, one: Scalar) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.terms.insert(Monomial::var(nvars, i), one);
        p
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Scalar) -> Self {
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            assert_eq!(m.nvars(), nvars);
            p.terms.insert(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Constant term, if any.
    pub fn constant_term(&self) -> Option<&Scalar> {
        self.terms.get(&Monomial::one(self.nvars))
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "ambient ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "ambient ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "ambient ring mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (m1, c1) in &self.terms {
            out.terms.insert(m1.mul(m), c1.mul(c));
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(self.nvars), c)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out: Option<Polynomial> = None;
        for _ in 0..k {
            out = Some(match out {
                None => self.clone(),
                Some(acc) => acc.mul(self),
            });
        }
        out.unwrap_or_else(|| {
            // p^0 = 1; the scalar field comes from an existing coefficient
            let one = self
                .terms
                .values()
                .next()
                .map(|c| c.field().one())
                .expect("0^0 is undefined");
            Polynomial::constant(self.nvars, one)
        })
    }

    /// The order-maximal term, or `None` for the zero polynomial.
    pub fn leading_term(&self, ord: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.compare(a, b))
    }

    /// Terms in strictly decreasing order under `ord`.
    pub fn terms_sorted(&self, ord: MonomialOrder) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| ord.compare(b, a));
        v
    }

    /// Divide by the leading coefficient under `ord`.
    pub fn monic(&self, ord: MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv();
                self.scale(&inv)
            }
        }
    }

    /// Render with the given variable names, terms descending under `ord`.
    pub fn display_with(&self, names: &[String], ord: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms_sorted(ord).into_iter().enumerate() {
            let coeff = c.to_string();
            let (sign, mag) = match coeff.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", coeff),
            };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || m.is_one() {
                factors.push(mag);
            }
            for (v, e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[v].clone()),
                    _ => factors.push(format!("{}^{}", names[v], e)),
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }
}

/// An element of a free module `R^s` over the ambient polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeVector {
    comps: Vec<Polynomial>,
}

impl FreeVector {
    pub fn new(comps: Vec<Polynomial>) -> Self {
        assert!(!comps.is_empty(), "free module rank must be positive");
        let nvars = comps[0].nvars();
        assert!(comps.iter().all(|p| p.nvars() == nvars));
        FreeVector { comps }
    }

    pub fn zero(nvars: usize, rank: usize) -> Self {
        FreeVector {
            comps: vec![Polynomial::zero(nvars); rank],
        }
    }

    /// The `c`-th standard basis vector scaled by `p`.
    pub fn from_component(rank: usize, c: usize, p: Polynomial) -> Self {
        let mut v = FreeVector::zero(p.nvars(), rank);
        v.comps[c] = p;
        v
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn nvars(&self) -> usize {
        self.comps[0].nvars()
    }

    pub fn component(&self, c: usize) -> &Polynomial {
        &self.comps[c]
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &FreeVector) -> FreeVector {
        assert_eq!(self.rank(), other.rank(), "free module rank mismatch");
        FreeVector {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FreeVector) -> FreeVector {
        assert_eq!(self.rank(), other.rank(), "free module rank mismatch");
        FreeVector {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> FreeVector {
        FreeVector {
            comps: self.comps.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> FreeVector {
        FreeVector {
            comps: self.comps.iter().map(|q| q.mul(p)).collect(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, &Monomial), &Scalar)> {
        self.comps
            .iter()
            .enumerate()
            .flat_map(|(c, p)| p.terms().map(move |(m, s)| ((c, m), s)))
    }

    /// The order-maximal term `((component, monomial), coefficient)`.
    pub fn leading_term(&self, ord: ModuleOrder) -> Option<((usize, Monomial), Scalar)> {
        self.terms()
            .max_by(|((c1, m1), _), ((c2, m2), _)| {
                ord.compare(&(*c1, (*m1).clone()), &(*c2, (*m2).clone()))
            })
            .map(|((c, m), s)| ((c, m.clone()), s.clone()))
    }

    pub fn monic(&self, ord: ModuleOrder) -> FreeVector {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv();
                FreeVector {
                    comps: self.comps.iter().map(|p| p.scale(&inv)).collect(),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn poly_from(field: FieldSpec, nvars: usize, terms: &[(&[u32], i64)]) -> Polynomial {
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

    #[test]
    fn binomial_square_over_q() {
        let q = FieldSpec::Rational;
        let xy = poly_from(q, 2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let sq = xy.mul(&xy);
        let expect = poly_from(q, 2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn binomial_square_over_f2() {
        let f2 = FieldSpec::Prime(2);
        let xy = poly_from(f2, 2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let sq = xy.mul(&xy);
        let expect = poly_from(f2, 2, &[(&[2, 0], 1), (&[0, 2], 1)]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn additive_inverse_gives_empty_term_map() {
        let q = FieldSpec::Rational;
        let p = poly_from(q, 2, &[(&[1, 0], 3), (&[0, 2], -7)]);
        let z = p.add(&p.neg());
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn leading_term_of_constant() {
        let q = FieldSpec::Rational;
        let p = poly_from(q, 1, &[(&[0], 5)]);
        let (m, c) = p.leading_term(MonomialOrder::DegRevLex).unwrap();
        assert!(m.is_one());
        assert_eq!(c, &q.from_i64(5));
    }

    #[test]
    fn leading_term_degree_dominates() {
        // X1^3 - X2^2 under degrevlex: degree 3 beats degree 2
        let q = FieldSpec::Rational;
        let p = poly_from(q, 2, &[(&[3, 0], 1), (&[0, 2], -1)]);
        let (m, c) = p.leading_term(MonomialOrder::DegRevLex).unwrap();
        assert_eq!(m, &Monomial::new(vec![3, 0]));
        assert!(c.is_one());
    }

    #[test]
    fn leading_term_zero_polynomial_is_none() {
        let p = Polynomial::zero(2);
        assert!(p.leading_term(MonomialOrder::DegRevLex).is_none());
    }

    #[test]
    fn degrevlex_leading_term_of_hankel_minor() {
        // X1*X3 - X2^2: equal degree, X2^2 wins under degrevlex
        let q = FieldSpec::Rational;
        let p = poly_from(q, 3, &[(&[1, 0, 1], 1), (&[0, 2, 0], -1)]);
        let (m, c) = p.leading_term(MonomialOrder::DegRevLex).unwrap();
        assert_eq!(m, &Monomial::new(vec![0, 2, 0]));
        assert_eq!(c, &q.from_i64(-1));
    }

    #[test]
    fn display_is_readable() {
        let q = FieldSpec::Rational;
        let p = poly_from(q, 2, &[(&[3, 0], 1), (&[0, 2], -1)]);
        let names = vec!["X1".to_string(), "X2".to_string()];
        assert_eq!(p.display_with(&names, MonomialOrder::DegRevLex), "X1^3 - X2^2");
    }
}
