//! The idealization (trivial extension) of a ring by a module, built as an
//! honest presented ring so that all Groebner and Artinian machinery
//! applies to it unchanged.
//!
//! For `R = S/a` and `M` the cokernel of presentation columns `U` inside
//! `R^s`, the idealization lives on the ambient variables plus one new
//! square-zero variable per module generator, with relations
//!
//! - the lifted relations of `a`,
//! - one linear relation `sum_j U[j][i] e_j` per presentation column,
//! - all products `e_i e_j`.
//!
//! The constant part then models `R`, the linear part models `M`, and an
//! ideal of the form `I x N` is realized by lifting `I` and mapping module
//! elements to their `e`-linear images. Colons of homogeneous ideals are
//! computed twice: once componentwise in `R` and `M`, and once
//! definitionally in a finite model of the idealization; each side serves
//! as the other's oracle.

use std::sync::Arc;

use crate::artinian::ArtinianModule;
use crate::error::{EngineError, Result};
use crate::groebner::module_buchberger_with;
use crate::linalg::Subspace;
use crate::localmodel::{IdealHandle, PresentedModule, PresentedRing};
use crate::monomial::{ModuleOrder, Monomial};
use crate::poly::{FreeVector, Polynomial};
use crate::scalar::Scalar;

/// The idealization of a module over a presented ring, with back
/// references to the sources.
#[derive(Debug, Clone)]
pub struct IdealizationRing {
    ring: Arc<PresentedRing>,
    source: Arc<PresentedRing>,
    module: PresentedModule,
}

/// An ideal of the idealization of the form `I x N`, held by its two
/// parts: ring generators in the source ring and module generators in the
/// source module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousIdeal {
    pub ring_part: Vec<Polynomial>,
    pub module_part: Vec<FreeVector>,
}

/// Result of the definitional colon computation in a finite model of the
/// idealization.
#[derive(Debug, Clone)]
pub struct DirectColon {
    /// The truncated model of the idealization over itself.
    pub model: Arc<ArtinianModule>,
    /// The colon ideal as a subspace of the model.
    pub colon: Subspace,
    /// The span of the divided ideal in the same model.
    pub ideal_span: Subspace,
}

/// Build the idealization of `module` over `source`. The module must be
/// nonzero for the construction to be a local ring extension worth having.
pub fn idealize(
    source: &Arc<PresentedRing>,
    module: &PresentedModule,
) -> Result<IdealizationRing> {
    if !source.module_is_nonzero(module)? {
        return Err(EngineError::ZeroModule);
    }
    let d = source.nvars();
    let s = module.rank();
    let mut names: Vec<String> = source.var_names().to_vec();
    for j in 0..s {
        let mut candidate = format!("e{}", j + 1);
        while names.contains(&candidate) {
            candidate.insert(0, 'e');
        }
        names.push(candidate);
    }
    let total = d + s;
    let one = source.field().one();
    let mut relations: Vec<Polynomial> = source
        .relations()
        .iter()
        .map(|p| lift_poly(p, total))
        .collect();
    for col in module.columns() {
        let mut rel = Polynomial::zero(total);
        for (j, entry) in col.components().iter().enumerate() {
            let e_j = Polynomial::variable(total, d + j, one.clone());
            rel = rel.add(&lift_poly(entry, total).mul(&e_j));
        }
        if !rel.is_zero() {
            relations.push(rel);
        }
    }
    for i in 0..s {
        for j in i..s {
            let mut exps = vec![0u32; total];
            exps[d + i] += 1;
            exps[d + j] += 1;
            relations.push(Polynomial::monomial(total, Monomial::new(exps), one.clone()));
        }
    }
    let ring = PresentedRing::new(source.field(), names, relations)?;
    Ok(IdealizationRing {
        ring,
        source: Arc::clone(source),
        module: module.clone(),
    })
}

fn lift_poly(p: &Polynomial, total: usize) -> Polynomial {
    let mut out = Polynomial::zero(total);
    for (m, c) in p.terms() {
        let mut exps = m.exponents().to_vec();
        exps.resize(total, 0);
        out = out.add(&Polynomial::monomial(total, Monomial::new(exps), c.clone()));
    }
    out
}

impl IdealizationRing {
    /// The idealization as an ordinary presented ring.
    pub fn ring(&self) -> &Arc<PresentedRing> {
        &self.ring
    }

    pub fn source(&self) -> &Arc<PresentedRing> {
        &self.source
    }

    pub fn module(&self) -> &PresentedModule {
        &self.module
    }

    pub fn module_rank(&self) -> usize {
        self.module.rank()
    }

    /// Lift a source-ring polynomial into the idealization.
    pub fn lift(&self, p: &Polynomial) -> Polynomial {
        lift_poly(p, self.ring.nvars())
    }

    /// The `e`-linear image of a module element.
    pub fn module_image(&self, v: &FreeVector) -> Polynomial {
        let d = self.source.nvars();
        let total = self.ring.nvars();
        let one = self.source.field().one();
        let mut out = Polynomial::zero(total);
        for (j, entry) in v.components().iter().enumerate() {
            let e_j = Polynomial::variable(total, d + j, one.clone());
            out = out.add(&lift_poly(entry, total).mul(&e_j));
        }
        out
    }

    /// The extension `I (R x M) = I x I M`, generated by lifts of the
    /// ideal generators.
    pub fn extend_ideal(&self, ideal: &IdealHandle) -> Result<IdealHandle> {
        let lifted: Vec<Polynomial> = ideal
            .generators()
            .iter()
            .map(|g| self.lift(g))
            .collect();
        self.ring.ideal(&lifted)
    }

    /// A homogeneous ideal `I x N`, after verifying `I M` is contained in
    /// `N` (the condition for the pair to be an ideal).
    pub fn homogeneous_ideal(
        &self,
        ring_part: &[Polynomial],
        module_part: &[FreeVector],
    ) -> Result<HomogeneousIdeal> {
        let h = HomogeneousIdeal {
            ring_part: ring_part
                .iter()
                .map(|p| self.source.reduce(p))
                .filter(|p| !p.is_zero())
                .collect(),
            module_part: module_part.to_vec(),
        };
        if !self.ideal_condition_holds(&h) {
            return Err(EngineError::NotHomogeneousIdeal);
        }
        Ok(h)
    }

    /// Exact membership check of `I M` inside the submodule generated by
    /// the module part, over the source ring.
    fn ideal_condition_holds(&self, h: &HomogeneousIdeal) -> bool {
        let s = self.module.rank();
        let nvars = self.source.nvars();
        let mut gens: Vec<FreeVector> = h.module_part.clone();
        gens.extend(self.module.columns().iter().cloned());
        for c in 0..s {
            for r in self.source.relations() {
                gens.push(FreeVector::from_component(s, c, r.clone()));
            }
        }
        let ord = ModuleOrder::new(self.source.order());
        let gb = module_buchberger_with(s, nvars, &gens, ord);
        for g in &h.ring_part {
            for j in 0..s {
                let v = FreeVector::from_component(s, j, g.clone());
                if !gb.contains_vector(&v) {
                    return false;
                }
            }
        }
        true
    }

    /// The realization of a homogeneous ideal inside the idealization:
    /// lifts of the ring part plus `e`-linear images of the module part.
    pub fn realize(&self, h: &HomogeneousIdeal) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = h.ring_part.iter().map(|p| self.lift(p)).collect();
        for v in &h.module_part {
            let img = self.module_image(v);
            if !img.is_zero() {
                out.push(img);
            }
        }
        out
    }

    /// The colon `(I x N) : (I' x N')` computed componentwise in the
    /// source ring and module: ring part `(I : I') meet (N : N')`, module
    /// part `N : I'`. Models are taken at the given power of the source
    /// maximal ideal, which must be large enough that the subspaces are
    /// faithful images (for Artinian sources any exponent at or beyond
    /// the nilpotency index is exact).
    pub fn colon_via_lemma(
        &self,
        p: &HomogeneousIdeal,
        q: &HomogeneousIdeal,
        truncation: u32,
    ) -> Result<HomogeneousIdeal> {
        assert!(truncation >= 1, "truncation exponent must be positive");
        let maximal = self.source.maximal_ideal();
        let free = self.source.free_module(1);
        let model_r = self
            .source
            .artinian_quotient(&free, &maximal, truncation - 1, None)?;
        let model_m = self
            .source
            .artinian_quotient(&self.module, &maximal, truncation - 1, None)?;

        let i_span = model_r.ideal_image(&p.ring_part);
        let n_span = model_m.span_submodule(&coords_of_vectors(&model_m, &p.module_part));
        let q_module_coords = coords_of_vectors(&model_m, &q.module_part);

        // (I : I') as a subspace of the ring model
        let a = model_r.colon_in_module(&i_span, &q.ring_part);
        // (N : N') as a subspace of the ring model
        let b = model_m.colon_into_host(&n_span, &q_module_coords);
        let ring_sub = a.intersect(&b);
        // (N : I') as a subspace of the module model
        let module_sub = model_m.colon_in_module(&n_span, &q.ring_part);

        let ring_part: Vec<Polynomial> = ring_sub
            .basis()
            .iter()
            .map(|v| model_r.host().lift(v))
            .collect();
        let module_part: Vec<FreeVector> = module_sub
            .basis()
            .iter()
            .map(|v| model_m.lift(v))
            .collect();
        Ok(HomogeneousIdeal {
            ring_part,
            module_part,
        })
    }

    /// The definitional colon `{a : a (I' x N') contained in (I x N)}`,
    /// computed by linear algebra inside the model of the idealization
    /// modulo the given power of its maximal ideal.
    pub fn colon_direct(
        &self,
        p: &HomogeneousIdeal,
        q: &HomogeneousIdeal,
        truncation: u32,
    ) -> Result<DirectColon> {
        assert!(truncation >= 1, "truncation exponent must be positive");
        let maximal = self.ring.maximal_ideal();
        let free = self.ring.free_module(1);
        let model = self
            .ring
            .artinian_quotient(&free, &maximal, truncation - 1, None)?;
        let p_real = self.realize(p);
        let q_real = self.realize(q);
        let ideal_span = model.ideal_image(&p_real);
        let colon = model.colon_in_module(&ideal_span, &q_real);
        Ok(DirectColon {
            model,
            colon,
            ideal_span,
        })
    }

    /// The span of a homogeneous ideal's realization in a model of the
    /// idealization, for comparing against [`IdealizationRing::colon_direct`].
    pub fn span_in_model(&self, model: &ArtinianModule, h: &HomogeneousIdeal) -> Subspace {
        model.ideal_image(&self.realize(h))
    }

    /// Model-level check of the homogeneous-ideal condition for a colon
    /// output: the ring part must multiply the whole module into the span
    /// of the module part.
    pub fn ideal_condition_in_model(
        &self,
        h: &HomogeneousIdeal,
        truncation: u32,
    ) -> Result<bool> {
        let maximal = self.source.maximal_ideal();
        let model_m = self
            .source
            .artinian_quotient(&self.module, &maximal, truncation - 1, None)?;
        let n_span = model_m.span_submodule(&coords_of_vectors(&model_m, &h.module_part));
        let image = model_m.ideal_image(&h.ring_part);
        Ok(n_span.contains_subspace(&image))
    }
}

fn coords_of_vectors(model: &ArtinianModule, vectors: &[FreeVector]) -> Vec<Vec<Scalar>> {
    vectors.iter().map(|v| model.coords(v)).collect()
}
