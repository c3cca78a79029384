//! Finite-dimensional models of Artinian quotients.
//!
//! An [`ArtinianAlgebra`] is a zero-dimensional quotient of the ambient
//! polynomial ring, represented by its standard-monomial basis and one
//! multiplication matrix per variable. An [`ArtinianModule`] is the same
//! thing for a quotient of a free module. Socles, colon submodules,
//! annihilators and faithfulness all reduce to exact kernel computations
//! on these matrices.

use std::sync::Arc;

use crate::error::Result;
use crate::groebner::{GroebnerBasis, StandardBasis};
use crate::linalg::{Matrix, Subspace};
use crate::monomial::Monomial;
use crate::poly::{FreeVector, Polynomial};
use crate::scalar::{FieldSpec, Scalar};

/// Above this dimension the constructor skips the O(dim^3) commutation
/// and relation checks; every scenario in scope stays well below it.
const VALIDATE_DIM_LIMIT: usize = 96;

/// A finite-dimensional model of an Artinian local quotient ring.
#[derive(Debug, Clone)]
pub struct ArtinianAlgebra {
    field: FieldSpec,
    nvars: usize,
    basis: StandardBasis,
    mult: Vec<Matrix>,
    unit: Vec<Scalar>,
    gb: GroebnerBasis,
}

impl ArtinianAlgebra {
    /// Build the model from a zero-dimensional defining basis.
    pub fn build(field: FieldSpec, gb: GroebnerBasis) -> Result<ArtinianAlgebra> {
        assert_eq!(gb.rank(), 1, "algebra model needs a rank-1 basis");
        let nvars = gb.nvars();
        let basis = gb.standard_monomials()?;
        let dim = basis.len();
        let mut mult = Vec::with_capacity(nvars);
        for v in 0..nvars {
            let mut m = Matrix::zeros(field, dim, dim);
            for (j, (_, b)) in basis.entries().iter().enumerate() {
                let shifted = Polynomial::monomial(
                    nvars,
                    b.mul(&Monomial::var(nvars, v)),
                    field.one(),
                );
                let nf = gb.reduce_poly(&shifted);
                for (i, c) in coords_of_poly(&basis, &nf) {
                    m.set(i, j, c);
                }
            }
            mult.push(m);
        }
        let unit_poly = gb.reduce_poly(&Polynomial::constant(nvars, field.one()));
        let mut unit = vec![field.zero(); dim];
        for (i, c) in coords_of_poly(&basis, &unit_poly) {
            unit[i] = c;
        }
        let alg = ArtinianAlgebra {
            field,
            nvars,
            basis,
            mult,
            unit,
            gb,
        };
        if dim <= VALIDATE_DIM_LIMIT {
            alg.assert_commutation();
        }
        Ok(alg)
    }

    fn assert_commutation(&self) {
        for a in 0..self.nvars {
            for b in (a + 1)..self.nvars {
                let ab = self.mult[a].mul(&self.mult[b]);
                let ba = self.mult[b].mul(&self.mult[a]);
                assert_eq!(ab, ba, "multiplication matrices must commute");
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &StandardBasis {
        &self.basis
    }

    pub fn defining_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Multiplication matrix of the image of variable `v`.
    pub fn variable_action(&self, v: usize) -> &Matrix {
        &self.mult[v]
    }

    pub fn coords(&self, p: &Polynomial) -> Vec<Scalar> {
        let nf = self.gb.reduce_poly(p);
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, c) in coords_of_poly(&self.basis, &nf) {
            out[i] = c;
        }
        out
    }

    /// The polynomial with the given coordinates in the standard basis.
    pub fn lift(&self, coords: &[Scalar]) -> Polynomial {
        let mut p = Polynomial::zero(self.nvars);
        for (i, (_, m)) in self.basis.entries().iter().enumerate() {
            if !coords[i].is_zero() {
                p = p.add(&Polynomial::monomial(self.nvars, m.clone(), coords[i].clone()));
            }
        }
        p
    }

    /// View the algebra as a rank-1 free module over itself.
    pub fn as_module(self: &Arc<Self>) -> ArtinianModule {
        ArtinianModule {
            host: Arc::clone(self),
            rank: 1,
            basis: self.basis.clone(),
            action: self.mult.clone(),
            gens: vec![self.unit.clone()],
            gb: self.gb.clone(),
        }
    }
}

/// A finite-dimensional model of an Artinian quotient of a module.
#[derive(Debug, Clone)]
pub struct ArtinianModule {
    host: Arc<ArtinianAlgebra>,
    rank: usize,
    basis: StandardBasis,
    action: Vec<Matrix>,
    /// Coordinates of the images of the free-module generators.
    gens: Vec<Vec<Scalar>>,
    gb: GroebnerBasis,
}

impl ArtinianModule {
    /// Build the model of a quotient of a rank-`s` free module from a
    /// zero-dimensional module basis over the host's ambient ring.
    pub fn build(host: Arc<ArtinianAlgebra>, gb: GroebnerBasis) -> Result<ArtinianModule> {
        let field = host.field();
        let nvars = host.nvars();
        assert_eq!(gb.nvars(), nvars, "ambient ring mismatch");
        let rank = gb.rank();
        let basis = gb.standard_monomials()?;
        let dim = basis.len();
        let mut action = Vec::with_capacity(nvars);
        for v in 0..nvars {
            let mut m = Matrix::zeros(field, dim, dim);
            for (j, (c, b)) in basis.entries().iter().enumerate() {
                let shifted = FreeVector::from_component(
                    rank,
                    *c,
                    Polynomial::monomial(nvars, b.mul(&Monomial::var(nvars, v)), field.one()),
                );
                let nf = gb.reduce_vector(&shifted);
                for (i, s) in coords_of_vector(&basis, &nf) {
                    m.set(i, j, s);
                }
            }
            action.push(m);
        }
        let mut gens = Vec::with_capacity(rank);
        for c in 0..rank {
            let e = FreeVector::from_component(
                rank,
                c,
                Polynomial::constant(nvars, field.one()),
            );
            let nf = gb.reduce_vector(&e);
            let mut coords = vec![field.zero(); dim];
            for (i, s) in coords_of_vector(&basis, &nf) {
                coords[i] = s;
            }
            gens.push(coords);
        }
        let model = ArtinianModule {
            host,
            rank,
            basis,
            action,
            gens,
            gb,
        };
        if dim <= VALIDATE_DIM_LIMIT {
            model.assert_compatible();
        }
        Ok(model)
    }

    fn assert_compatible(&self) {
        let n = self.host.nvars();
        for a in 0..n {
            for b in (a + 1)..n {
                let ab = self.action[a].mul(&self.action[b]);
                let ba = self.action[b].mul(&self.action[a]);
                assert_eq!(ab, ba, "module action matrices must commute");
            }
        }
        // every defining relation of the host acts as zero
        for rel in self.host.defining_basis().elements() {
            let m = self.poly_action(rel.component(0));
            assert!(m.is_zero(), "host relation must annihilate the module");
        }
    }

    pub fn host(&self) -> &Arc<ArtinianAlgebra> {
        &self.host
    }

    pub fn field(&self) -> FieldSpec {
        self.host.field()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Length of the modeled module, i.e. its vector-space dimension.
    pub fn length(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &StandardBasis {
        &self.basis
    }

    pub fn defining_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn generator_images(&self) -> &[Vec<Scalar>] {
        &self.gens
    }

    pub fn variable_action(&self, v: usize) -> &Matrix {
        &self.action[v]
    }

    pub fn coords(&self, v: &FreeVector) -> Vec<Scalar> {
        let nf = self.gb.reduce_vector(v);
        let mut out = vec![self.field().zero(); self.length()];
        for (i, s) in coords_of_vector(&self.basis, &nf) {
            out[i] = s;
        }
        out
    }

    /// The free vector with the given coordinates in the standard basis.
    pub fn lift(&self, coords: &[Scalar]) -> FreeVector {
        let nvars = self.host.nvars();
        let mut v = FreeVector::zero(nvars, self.rank);
        for (i, (c, m)) in self.basis.entries().iter().enumerate() {
            if !coords[i].is_zero() {
                v = v.add(&FreeVector::from_component(
                    self.rank,
                    *c,
                    Polynomial::monomial(nvars, m.clone(), coords[i].clone()),
                ));
            }
        }
        v
    }

    /// Action of a monomial in the ambient variables.
    pub fn monomial_action(&self, m: &Monomial) -> Matrix {
        let mut out = Matrix::identity(self.field(), self.length());
        for v in 0..self.host.nvars() {
            for _ in 0..m.exponent(v) {
                out = self.action[v].mul(&out);
            }
        }
        out
    }

    /// Action of an ambient polynomial.
    pub fn poly_action(&self, p: &Polynomial) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.length(), self.length());
        for (m, c) in p.terms() {
            out = out.add(&self.monomial_action(m).scale(c));
        }
        out
    }

    /// Action of a host element given by coordinates in the host basis.
    pub fn host_action(&self, coords: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.length(), self.length());
        for (i, (_, m)) in self.host.basis().entries().iter().enumerate() {
            if !coords[i].is_zero() {
                out = out.add(&self.monomial_action(m).scale(&coords[i]));
            }
        }
        out
    }

    /// The socle: the intersection of the kernels of all maximal-ideal
    /// generator actions (nonzero modules over a local algebra have
    /// socle dimension at least one).
    pub fn socle(&self) -> Subspace {
        if self.host.nvars() == 0 {
            return Subspace::full(self.field(), self.length());
        }
        let stacked = Matrix::vstack(&self.action);
        stacked.nullspace()
    }

    /// `{v in the model : g v in target for every g in gens}`, the colon
    /// of `target` by the ideal generated by `gens`, inside the model.
    pub fn colon_in_module(&self, target: &Subspace, gens: &[Polynomial]) -> Subspace {
        if gens.is_empty() {
            return Subspace::full(self.field(), self.length());
        }
        let blocks: Vec<Matrix> = gens
            .iter()
            .map(|g| {
                let a = self.poly_action(g);
                reduce_columns(&a, target)
            })
            .collect();
        Matrix::vstack(&blocks).nullspace()
    }

    /// Colon of the baked-in quotient: `{v : g v = 0 for all g}`.
    pub fn colon_module(&self, gens: &[Polynomial]) -> Subspace {
        let zero = Subspace::zero(self.field(), self.length());
        self.colon_in_module(&zero, gens)
    }

    /// `{r in the host : r e in target for every e in elements}`, as a
    /// subspace of the host algebra.
    pub fn colon_into_host(&self, target: &Subspace, elements: &[Vec<Scalar>]) -> Subspace {
        let host_dim = self.host.dim();
        if elements.is_empty() {
            return Subspace::full(self.field(), host_dim);
        }
        let mut blocks: Vec<Matrix> = Vec::new();
        for el in elements {
            let mut m = Matrix::zeros(self.field(), self.length(), host_dim);
            for (j, (_, u)) in self.host.basis().entries().iter().enumerate() {
                let col = self.monomial_action(u).apply(el);
                let col = target.reduce(col);
                for (i, s) in col.into_iter().enumerate() {
                    m.set(i, j, s);
                }
            }
            blocks.push(m);
        }
        Matrix::vstack(&blocks).nullspace()
    }

    /// `{r : r M is contained in N}` for a submodule subspace `N`; with
    /// `N = 0` this is the annihilator.
    pub fn colon_into_ring(&self, submodule: &Subspace) -> Subspace {
        self.colon_into_host(submodule, &self.gens)
    }

    pub fn annihilator(&self) -> Subspace {
        let zero = Subspace::zero(self.field(), self.length());
        self.colon_into_ring(&zero)
    }

    /// True iff the annihilator in the host algebra is zero.
    pub fn is_faithful(&self) -> bool {
        self.annihilator().dim() == 0
    }

    /// The submodule generated by the given elements, as a subspace.
    pub fn span_submodule(&self, elements: &[Vec<Scalar>]) -> Subspace {
        let mut out = Subspace::zero(self.field(), self.length());
        for el in elements {
            for (_, u) in self.host.basis().entries() {
                out.insert(self.monomial_action(u).apply(el));
            }
        }
        out
    }

    /// The image of `ideal_gens * model`, as a subspace.
    pub fn ideal_image(&self, ideal_gens: &[Polynomial]) -> Subspace {
        let mut out = Subspace::zero(self.field(), self.length());
        for g in ideal_gens {
            let a = self.poly_action(g);
            for el in &self.gens {
                let v = a.apply(el);
                let sub = self.span_submodule(&[v]);
                out = out.sum(&sub);
            }
        }
        out
    }
}

fn reduce_columns(a: &Matrix, target: &Subspace) -> Matrix {
    let mut out = Matrix::zeros(a.field(), a.rows, a.cols);
    for j in 0..a.cols {
        let col = target.reduce(a.column(j));
        for (i, s) in col.into_iter().enumerate() {
            out.set(i, j, s);
        }
    }
    out
}

fn coords_of_poly<'a>(
    basis: &'a StandardBasis,
    p: &'a Polynomial,
) -> impl Iterator<Item = (usize, Scalar)> + 'a {
    p.terms().map(move |(m, c)| {
        let pos = basis
            .position(&(0, m.clone()))
            .expect("normal form landed outside the standard basis");
        (pos, c.clone())
    })
}

fn coords_of_vector<'a>(
    basis: &'a StandardBasis,
    v: &'a FreeVector,
) -> impl Iterator<Item = (usize, Scalar)> + 'a {
    v.terms().map(move |((c, m), s)| {
        let pos = basis
            .position(&(c, m.clone()))
            .expect("normal form landed outside the standard basis");
        (pos, s.clone())
    })
}
