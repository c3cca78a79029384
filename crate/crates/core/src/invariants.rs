//! The headline invariants: index-of-reducibility tables, Hilbert-type
//! tables and their exact binomial-basis polynomials, Cohen-Macaulay
//! checks and types, and the full inequality-chain verdicts over the
//! idealization.
//!
//! Everything here is exact integer arithmetic: tables are socle
//! dimensions and lengths of certified Artinian models, dimensions come
//! from finite differences, and polynomial coefficients from integer
//! linear solves in the alternating binomial basis. A non-integer solve is
//! an error, never a rounding.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{EngineError, Result};
use crate::idealization::{idealize, IdealizationRing};
use crate::localmodel::{IdealHandle, PresentedModule, PresentedRing};

/// Knobs shared by the table-driven operations.
#[derive(Debug, Clone, Copy)]
pub struct InvariantOptions {
    /// Tables run over `n = 0 ..= n_max`.
    pub n_max: u32,
    /// Width of the stabilization window for difference and fit checks.
    pub window: usize,
    /// When set, every Artinian model is built with an explicit truncation
    /// exponent `s (n + 1) + margin`, where `s` is the certified primary
    /// exponent of the ideal at hand. The certificate makes the truncation
    /// a no-op, so results must not depend on the margin.
    pub truncation_margin: Option<u32>,
    /// Declared dimension; conflicts with detection are hard errors.
    pub assert_dimension: Option<usize>,
}

impl Default for InvariantOptions {
    fn default() -> Self {
        InvariantOptions {
            n_max: 6,
            window: 3,
            truncation_margin: None,
            assert_dimension: None,
        }
    }
}

/// The effective truncation exponent for one quotient, or None.
fn truncation_for(
    ring: &Arc<PresentedRing>,
    ideal: &IdealHandle,
    n: u32,
    margin: Option<u32>,
) -> Result<Option<u32>> {
    match margin {
        None => Ok(None),
        Some(m) => {
            let s = ring.primary_exponent(ideal)?;
            Ok(Some(s * (n + 1) + m))
        }
    }
}

/// The sequence `n -> ir(I^(n+1) M)` for `n = 0 ..= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrTable {
    pub values: Vec<u64>,
}

/// The sequence `n -> length(M / I^(n+1) M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    pub values: Vec<u64>,
}

/// An integer polynomial in the alternating binomial basis
/// `sum_k (-1)^k c_k C(n + d - k, d - k)` with `d = coefficients.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialPolynomial {
    pub coefficients: Vec<i64>,
    /// Least `n` from which the fitted table agrees with the polynomial.
    pub stable_from: u32,
}

impl BinomialPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.coefficients.first().copied().unwrap_or(0)
    }

    pub fn evaluate(&self, n: u32) -> i128 {
        let d = self.degree() as i64;
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let top = d - k as i64;
                let sign = if k % 2 == 0 { 1 } else { -1 };
                sign * (*c as i128) * binomial(n as i64 + top, top)
            })
            .sum()
    }
}

/// `C(n, k)` for small arguments, zero when `n < k` or `k < 0`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let mut out: i128 = 1;
    for i in 0..k {
        out = out * (n - i) as i128 / (i + 1) as i128;
    }
    out
}

/// Index of reducibility of `I^(n+1) M`: the socle dimension of the exact
/// model of `M / I^(n+1) M`. Recomputed definitionally as a colon by the
/// maximal-ideal generators; the two paths must agree.
pub fn ir_value(
    ring: &Arc<PresentedRing>,
    module: &PresentedModule,
    ideal: &IdealHandle,
    n: u32,
    margin: Option<u32>,
) -> Result<u64> {
    let truncation = truncation_for(ring, ideal, n, margin)?;
    let model = ring.artinian_quotient(module, ideal, n, truncation)?;
    let socle = model.socle();
    let colon = model.colon_module(ring.maximal_ideal().generators());
    if socle != colon {
        return Err(EngineError::Internal(
            "socle and maximal-ideal colon disagree".to_string(),
        ));
    }
    Ok(socle.dim() as u64)
}

/// Length of `M / I^(n+1) M`.
pub fn hs_value(
    ring: &Arc<PresentedRing>,
    module: &PresentedModule,
    ideal: &IdealHandle,
    n: u32,
    margin: Option<u32>,
) -> Result<u64> {
    let truncation = truncation_for(ring, ideal, n, margin)?;
    let model = ring.artinian_quotient(module, ideal, n, truncation)?;
    Ok(model.length() as u64)
}

pub fn ir_table(
    ring: &Arc<PresentedRing>,
    module: &PresentedModule,
    ideal: &IdealHandle,
    opts: &InvariantOptions,
) -> Result<IrTable> {
    let values = (0..=opts.n_max)
        .map(|n| ir_value(ring, module, ideal, n, opts.truncation_margin))
        .collect::<Result<Vec<_>>>()?;
    Ok(IrTable { values })
}

pub fn hs_table(
    ring: &Arc<PresentedRing>,
    module: &PresentedModule,
    ideal: &IdealHandle,
    opts: &InvariantOptions,
) -> Result<HilbertTable> {
    let values = (0..=opts.n_max)
        .map(|n| hs_value(ring, module, ideal, n, opts.truncation_margin))
        .collect::<Result<Vec<_>>>()?;
    Ok(HilbertTable { values })
}

/// The degree of the eventual polynomial of a table, detected as the least
/// `d` whose `(d+1)`-st finite differences vanish on the trailing window.
/// For a Hilbert table this is the dimension `t`.
pub fn detect_dimension(table: &[u64], window: usize) -> Result<usize> {
    let len = table.len();
    let mut diffs: Vec<i128> = table.iter().map(|v| *v as i128).collect();
    for d in 0..len {
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        if diffs.len() < window {
            break;
        }
        if diffs[diffs.len() - window..].iter().all(|x| *x == 0) {
            return Ok(d);
        }
    }
    Err(EngineError::NotStabilized { window, len })
}

/// Fit the trailing window of a table by an integer polynomial of degree
/// `dimension - 1` in the alternating binomial basis. The solve is exact;
/// a non-integer solution or a window mismatch is an error.
pub fn fit_binomial(
    table: &[u64],
    dimension: usize,
    window: usize,
) -> Result<BinomialPolynomial> {
    assert!(dimension >= 1, "binomial fits need dimension at least one");
    fit_alternating(table, dimension, window)
}

/// Shared fitting kernel: `num_coeffs` alternating binomial coefficients
/// of degrees `num_coeffs - 1` down to `0`.
fn fit_alternating(table: &[u64], num_coeffs: usize, window: usize) -> Result<BinomialPolynomial> {
    let len = table.len();
    if len < num_coeffs + window {
        return Err(EngineError::NotStabilized { window, len });
    }
    let d = num_coeffs as i64 - 1;
    // solve on the last `num_coeffs` points
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for point in (len - num_coeffs)..len {
        let n = point as i64;
        let mut row: Vec<BigRational> = (0..num_coeffs)
            .map(|k| {
                let top = d - k as i64;
                let sign: i128 = if k % 2 == 0 { 1 } else { -1 };
                BigRational::from_integer((sign * binomial(n + top, top)).into())
            })
            .collect();
        row.push(BigRational::from_integer((table[point] as i128).into()));
        rows.push(row);
    }
    let solution = solve_square(rows).ok_or(EngineError::NonIntegerFit)?;
    let mut coefficients = Vec::with_capacity(num_coeffs);
    for c in &solution {
        if !c.is_integer() {
            return Err(EngineError::NonIntegerFit);
        }
        let as_int = c.to_integer();
        let value = as_int.to_i64().ok_or(EngineError::NonIntegerFit)?;
        coefficients.push(value);
    }
    let poly = BinomialPolynomial {
        coefficients,
        stable_from: 0,
    };
    // the trailing window must agree exactly
    for point in (len - num_coeffs - window)..len {
        if poly.evaluate(point as u32) != table[point] as i128 {
            if point >= len - num_coeffs {
                return Err(EngineError::Internal(
                    "fit does not reproduce its own sample points".to_string(),
                ));
            }
            return Err(EngineError::NotStabilized { window, len });
        }
    }
    let mut stable_from = len as u32;
    for n in (0..len).rev() {
        if poly.evaluate(n as u32) == table[n] as i128 {
            stable_from = n as u32;
        } else {
            break;
        }
    }
    Ok(BinomialPolynomial {
        stable_from,
        ..poly
    })
}

/// Exact Gaussian elimination for a small square system in augmented form.
fn solve_square(mut rows: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let n = rows.len();
    for col in 0..n {
        let pivot = (col..n).find(|r| !rows[*r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..=n {
                    let sub = &f * &rows[col][c];
                    rows[r][c] -= sub;
                }
            }
        }
    }
    Some(rows.into_iter().map(|r| r[n].clone()).collect())
}

/// Outcome of the Cohen-Macaulay multiplicity criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmCheck {
    pub cohen_macaulay: bool,
    /// Detected dimension of the module.
    pub dimension: usize,
    /// `length(M / Q M)`.
    pub colength: u64,
    /// Leading normalized Hilbert coefficient of `Q` on the module.
    pub multiplicity: u64,
}

/// Multiplicity criterion: the module is Cohen-Macaulay with respect to
/// the parameter ideal iff `length(M/QM)` equals the multiplicity.
pub fn cm_check(
    ring: &Arc<PresentedRing>,
    module: &PresentedModule,
    parameter: &IdealHandle,
    opts: &InvariantOptions,
) -> Result<CmCheck> {
    let table = hs_table(ring, module, parameter, opts)?;
    let dimension = detect_dimension(&table.values, opts.window)?;
    if let Some(declared) = opts.assert_dimension {
        if declared != dimension {
            return Err(EngineError::DimensionMismatch {
                declared,
                detected: dimension,
            });
        }
    }
    let generators = parameter.generators().len();
    if generators != dimension {
        return Err(EngineError::NotParameterIdeal {
            generators,
            dimension,
        });
    }
    let colength = table.values[0];
    let multiplicity = if dimension == 0 {
        *table.values.last().expect("nonempty table")
    } else {
        let fit = fit_alternating(&table.values, dimension + 1, opts.window)?;
        let lead = fit.leading();
        if lead <= 0 {
            return Err(EngineError::Internal(
                "multiplicity must be positive".to_string(),
            ));
        }
        lead as u64
    };
    Ok(CmCheck {
        cohen_macaulay: colength == multiplicity,
        dimension,
        colength,
        multiplicity,
    })
}

/// Cohen-Macaulay type: the socle dimension of `M / Q M` for a parameter
/// ideal `Q`, defined only when the multiplicity criterion passes.
pub fn cm_type(
    ring: &Arc<PresentedRing>,
    module: &PresentedModule,
    parameter: &IdealHandle,
    opts: &InvariantOptions,
) -> Result<u64> {
    let check = cm_check(ring, module, parameter, opts)?;
    if !check.cohen_macaulay {
        return Err(EngineError::NotCohenMacaulay {
            colength: check.colength,
            multiplicity: check.multiplicity,
        });
    }
    ir_value(ring, module, parameter, 0, opts.truncation_margin)
}

/// Everything needed to report the inequality chain
/// `ir_M <= ir_{RxM} <= ir_R + ir_M` and its two equality criteria for one
/// `(R, M, I, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub n: u32,
    pub ir_module: u64,
    pub ir_ring: u64,
    pub ir_idealization: u64,
    pub length_ring: u64,
    pub length_module: u64,
    pub length_idealization: u64,
    /// `ir_M = ir_{RxM}` (lower equality).
    pub lower_equality: bool,
    /// `M / I^(n+1) M` is a faithful module over `R / I^(n+1)`.
    pub faithful: bool,
    /// `ir_{RxM} = ir_R + ir_M` (upper equality).
    pub upper_equality: bool,
    /// `(I^(n+1) : m) M = I^(n+1) M`.
    pub colon_collapses: bool,
    /// Dimension of the extra socle summand in the idealization.
    pub socle_split: u64,
}

impl TheoremVerdict {
    pub fn chain_holds(&self) -> bool {
        self.ir_module <= self.ir_idealization
            && self.ir_idealization <= self.ir_ring + self.ir_module
    }

    pub fn strict_chain(&self) -> bool {
        self.ir_module < self.ir_idealization
            && self.ir_idealization < self.ir_ring + self.ir_module
    }
}

/// Full verdict for one `(R, M, I, n)`, building the idealization on the
/// fly. Use [`theorem_check_with`] to share one idealization across `n`.
pub fn theorem_check(
    ring: &Arc<PresentedRing>,
    module: &PresentedModule,
    ideal: &IdealHandle,
    n: u32,
    margin: Option<u32>,
) -> Result<TheoremVerdict> {
    let a = idealize(ring, module)?;
    theorem_check_with(&a, ideal, n, margin)
}

pub fn theorem_check_with(
    a: &IdealizationRing,
    ideal: &IdealHandle,
    n: u32,
    margin: Option<u32>,
) -> Result<TheoremVerdict> {
    let ring = a.source();
    let module = a.module();
    let trunc_source = truncation_for(ring, ideal, n, margin)?;
    let model_m = ring.artinian_quotient(module, ideal, n, trunc_source)?;
    let model_r = ring.artinian_quotient(&ring.free_module(1), ideal, n, trunc_source)?;
    let extended = a.extend_ideal(ideal)?;
    let trunc_ext = truncation_for(a.ring(), &extended, n, margin)?;
    let model_a = a
        .ring()
        .artinian_quotient(&a.ring().free_module(1), &extended, n, trunc_ext)?;

    let ir_module = model_m.socle().dim() as u64;
    let ir_ring = model_r.socle().dim() as u64;
    let ir_idealization = model_a.socle().dim() as u64;
    let length_ring = model_r.length() as u64;
    let length_module = model_m.length() as u64;
    let length_idealization = model_a.length() as u64;

    if length_idealization != length_ring + length_module {
        return Err(EngineError::Internal(format!(
            "length additivity fails: {length_idealization} != {length_ring} + {length_module}"
        )));
    }

    let faithful = model_m.is_faithful();
    let lower_equality = ir_module == ir_idealization;
    if lower_equality != faithful {
        return Err(EngineError::Internal(
            "lower-equality criterion disagrees with faithfulness".to_string(),
        ));
    }

    // (I^(n+1) : m) M = I^(n+1) M iff every socle element of the ring
    // model annihilates the module model
    let ring_socle = model_r.socle();
    let mut colon_collapses = true;
    'outer: for r in ring_socle.basis() {
        let action = model_m.host_action(r);
        for g in model_m.generator_images() {
            if !action.apply(g).iter().all(|x| x.is_zero()) {
                colon_collapses = false;
                break 'outer;
            }
        }
    }
    let upper_equality = ir_idealization == ir_ring + ir_module;
    if upper_equality != colon_collapses {
        return Err(EngineError::Internal(
            "upper-equality criterion disagrees with the colon test".to_string(),
        ));
    }

    let annihilator = model_m.annihilator();
    let socle_split = ring_socle.intersect(&annihilator).dim() as u64;
    if ir_idealization != ir_module + socle_split {
        return Err(EngineError::Internal(
            "socle of the idealization does not split as expected".to_string(),
        ));
    }

    let verdict = TheoremVerdict {
        n,
        ir_module,
        ir_ring,
        ir_idealization,
        length_ring,
        length_module,
        length_idealization,
        lower_equality,
        faithful,
        upper_equality,
        colon_collapses,
        socle_split,
    };
    if !verdict.chain_holds() {
        return Err(EngineError::Internal(
            "inequality chain violated".to_string(),
        ));
    }
    Ok(verdict)
}

/// Type-level verdict over a parameter ideal for a maximal Cohen-Macaulay
/// module: the three types and the equality criteria at `n = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryReport {
    pub type_ring: u64,
    pub type_module: u64,
    pub type_idealization: u64,
    pub faithful: bool,
    pub colon_collapses: bool,
    pub lower_equality: bool,
    pub upper_equality: bool,
}

impl CorollaryReport {
    pub fn chain_holds(&self) -> bool {
        self.type_module <= self.type_idealization
            && self.type_idealization <= self.type_ring + self.type_module
    }

    pub fn strict_chain(&self) -> bool {
        self.type_module < self.type_idealization
            && self.type_idealization < self.type_ring + self.type_module
    }
}

pub fn corollary_check(
    ring: &Arc<PresentedRing>,
    module: &PresentedModule,
    parameter: &IdealHandle,
    opts: &InvariantOptions,
) -> Result<CorollaryReport> {
    let free = ring.free_module(1);
    let cm_ring = cm_check(ring, &free, parameter, opts)?;
    if !cm_ring.cohen_macaulay {
        return Err(EngineError::NotCohenMacaulay {
            colength: cm_ring.colength,
            multiplicity: cm_ring.multiplicity,
        });
    }
    let plain_opts = InvariantOptions {
        assert_dimension: None,
        ..*opts
    };
    let cm_module = cm_check(ring, module, parameter, &plain_opts)?;
    if !cm_module.cohen_macaulay {
        return Err(EngineError::NotCohenMacaulay {
            colength: cm_module.colength,
            multiplicity: cm_module.multiplicity,
        });
    }
    if cm_module.dimension != cm_ring.dimension {
        return Err(EngineError::DimensionMismatch {
            declared: cm_ring.dimension,
            detected: cm_module.dimension,
        });
    }

    let a = idealize(ring, module)?;
    let extended = a.extend_ideal(parameter)?;
    let cm_a = cm_check(a.ring(), &a.ring().free_module(1), &extended, &plain_opts)?;
    if !cm_a.cohen_macaulay {
        return Err(EngineError::NotCohenMacaulay {
            colength: cm_a.colength,
            multiplicity: cm_a.multiplicity,
        });
    }

    let type_ring = ir_value(ring, &free, parameter, 0, opts.truncation_margin)?;
    let type_module = ir_value(ring, module, parameter, 0, opts.truncation_margin)?;
    let type_idealization = ir_value(
        a.ring(),
        &a.ring().free_module(1),
        &extended,
        0,
        opts.truncation_margin,
    )?;

    let verdict = theorem_check_with(&a, parameter, 0, opts.truncation_margin)?;
    if verdict.ir_ring != type_ring
        || verdict.ir_module != type_module
        || verdict.ir_idealization != type_idealization
    {
        return Err(EngineError::Internal(
            "type-level and index-level computations disagree at n = 0".to_string(),
        ));
    }

    Ok(CorollaryReport {
        type_ring,
        type_module,
        type_idealization,
        faithful: verdict.faithful,
        colon_collapses: verdict.colon_collapses,
        lower_equality: verdict.lower_equality,
        upper_equality: verdict.upper_equality,
    })
}

/// Exactness of the parameter-ideal ir polynomial: in the Cohen-Macaulay
/// case the table must equal `f0 C(n + t - 1, t - 1)` for every `n`, not
/// just eventually.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrExactness {
    pub holds: bool,
    pub leading: u64,
    pub dimension: usize,
    pub table: IrTable,
}

pub fn ir_exactness_check(
    ring: &Arc<PresentedRing>,
    module: &PresentedModule,
    parameter: &IdealHandle,
    opts: &InvariantOptions,
) -> Result<IrExactness> {
    let leading = cm_type(ring, module, parameter, opts)?;
    let check = cm_check(ring, module, parameter, opts)?;
    let dimension = check.dimension;
    if dimension == 0 {
        return Err(EngineError::NotParameterIdeal {
            generators: parameter.generators().len(),
            dimension,
        });
    }
    let table = ir_table(ring, module, parameter, opts)?;
    let t = dimension as i64;
    let holds = table.values.iter().enumerate().all(|(n, v)| {
        (*v as i128) == (leading as i128) * binomial(n as i64 + t - 1, t - 1)
    });
    Ok(IrExactness {
        holds,
        leading,
        dimension,
        table,
    })
}
