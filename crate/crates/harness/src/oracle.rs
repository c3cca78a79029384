//! Exhaustive enumeration oracles over small prime fields.
//!
//! These deliberately avoid the engine's kernel computations: socles,
//! colons, annihilators and faithfulness are recomputed by running over
//! every element of a small model and checking the defining condition
//! pointwise. Agreement with the linear-algebra paths is part of the
//! acceptance suite.

use socle_core::artinian::ArtinianModule;
use socle_core::linalg::Subspace;
use socle_core::scalar::{FieldSpec, Scalar};

const MAX_ENUMERATION: u64 = 600_000;

fn enumeration_space(model: &ArtinianModule, dim: usize) -> Result<(u64, u64), String> {
    let FieldSpec::Prime(p) = model.field() else {
        return Err("enumeration oracle needs a prime field".to_string());
    };
    if p > 3 {
        return Err(format!("enumeration oracle bound exceeded: p = {p} > 3"));
    }
    if dim > 12 {
        return Err(format!("enumeration oracle bound exceeded: dim = {dim} > 12"));
    }
    let total = (p as u64).checked_pow(dim as u32).unwrap_or(u64::MAX);
    if total > MAX_ENUMERATION {
        return Err(format!(
            "enumeration oracle bound exceeded: {p}^{dim} elements"
        ));
    }
    Ok((p, total))
}

fn vector_from_index(field: FieldSpec, p: u64, dim: usize, mut idx: u64) -> Vec<Scalar> {
    (0..dim)
        .map(|_| {
            let digit = idx % p;
            idx /= p;
            field.from_i64(digit as i64)
        })
        .collect()
}

/// Socle dimension by full enumeration: the span of all vectors killed by
/// every maximal-ideal generator action.
pub fn brute_force_socle(model: &ArtinianModule) -> Result<u64, String> {
    let dim = model.length();
    let (p, total) = enumeration_space(model, dim)?;
    let field = model.field();
    let nvars = model.host().nvars();
    let mut span = Subspace::zero(field, dim);
    for idx in 0..total {
        let v = vector_from_index(field, p, dim, idx);
        let killed = (0..nvars).all(|var| {
            model
                .variable_action(var)
                .apply(&v)
                .iter()
                .all(|x| x.is_zero())
        });
        if killed {
            span.insert(v);
        }
    }
    Ok(span.dim() as u64)
}

/// `{v : g v in target for all g}` by full enumeration.
pub fn brute_force_colon(
    model: &ArtinianModule,
    target: &Subspace,
    gens: &[socle_core::poly::Polynomial],
) -> Result<Subspace, String> {
    let dim = model.length();
    let (p, total) = enumeration_space(model, dim)?;
    let field = model.field();
    let actions: Vec<_> = gens.iter().map(|g| model.poly_action(g)).collect();
    let mut span = Subspace::zero(field, dim);
    for idx in 0..total {
        let v = vector_from_index(field, p, dim, idx);
        if actions.iter().all(|a| target.contains(&a.apply(&v))) {
            span.insert(v);
        }
    }
    Ok(span)
}

/// `{r in the host : r g_j in target for every generator image}` by full
/// enumeration of the host algebra.
pub fn brute_force_colon_into_ring(
    model: &ArtinianModule,
    target: &Subspace,
) -> Result<Subspace, String> {
    let host_dim = model.host().dim();
    let (p, total) = enumeration_space(model, host_dim)?;
    let field = model.field();
    let mut span = Subspace::zero(field, host_dim);
    for idx in 0..total {
        let r = vector_from_index(field, p, host_dim, idx);
        let action = model.host_action(&r);
        if model
            .generator_images()
            .iter()
            .all(|g| target.contains(&action.apply(g)))
        {
            span.insert(r);
        }
    }
    Ok(span)
}

pub fn brute_force_is_faithful(model: &ArtinianModule) -> Result<bool, String> {
    let zero = Subspace::zero(model.field(), model.length());
    Ok(brute_force_colon_into_ring(model, &zero)?.dim() == 0)
}
