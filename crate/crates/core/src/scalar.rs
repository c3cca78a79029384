//! Exact coefficient arithmetic over the rationals and over prime fields.
//!
//! Every quantity in the engine is a length or a socle dimension, so no
//! floating point appears anywhere. Rationals are arbitrary precision and
//! always kept in lowest terms; prime-field values are kept reduced to
//! `[0, p)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Which coefficient field a scenario computes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldSpec {
    /// Arbitrary-precision rational numbers.
    Rational,
    /// The prime field `F_p` for a machine-word prime `p`.
    Prime(u64),
}

/// Default prime used when a scenario asks for a "fast" field without
/// naming one. Large enough that no scenario-scale length computation can
/// collide with the characteristic.
pub const DEFAULT_PRIME: u64 = 32003;

impl FieldSpec {
    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Fp { val: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Fp { val: 1, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let p_big = BigInt::from(*p);
                let mut r = n % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                let (_, digits) = r.to_u64_digits();
                Scalar::Fp {
                    val: digits.first().copied().unwrap_or(0),
                    p: *p,
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact field element: a rational or a prime-field value.
///
/// Arithmetic between elements of different fields is a programming error
/// and panics; the harness fixes one field per scenario at parse time.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { val: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rational,
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) => {
                assert_eq!(p, q, "scalar arithmetic across different prime fields");
                Scalar::Fp {
                    val: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => panic!("scalar arithmetic across different fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) => {
                assert_eq!(p, q, "scalar arithmetic across different prime fields");
                Scalar::Fp {
                    val: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => panic!("scalar arithmetic across different fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: if *val == 0 { 0 } else { p - val },
                p: *p,
            },
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Fp { val, p } => {
                assert!(*val != 0, "inverse of zero");
                // extended Euclid on (val, p)
                let (mut r0, mut r1) = (*val as i128, *p as i128);
                let (mut s0, mut s1) = (1i128, 0i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1, "modulus must be prime");
                let mut s = s0 % *p as i128;
                if s < 0 {
                    s += *p as i128;
                }
                Scalar::Fp { val: s as u64, p: *p }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Round-trips through [`Scalar::to_string`] for the same field.
    pub fn parse(field: FieldSpec, src: &str) -> Option<Scalar> {
        match field {
            FieldSpec::Rational => {
                let rat: BigRational = if let Some((num, den)) = src.split_once('/') {
                    let n: BigInt = num.trim().parse().ok()?;
                    let d: BigInt = den.trim().parse().ok()?;
                    if d.is_zero() {
                        return None;
                    }
                    BigRational::new(n, d)
                } else {
                    BigRational::from_integer(src.trim().parse().ok()?)
                };
                Some(Scalar::Rat(rat))
            }
            FieldSpec::Prime(_) => {
                let n: BigInt = src.trim().parse().ok()?;
                Some(field.from_bigint(&n))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_stays_reduced_with_positive_denominator() {
        let a = Scalar::parse(FieldSpec::Rational, "4/-6").unwrap();
        match &a {
            Scalar::Rat(r) => {
                assert_eq!(r.numer().to_string(), "-2");
                assert_eq!(r.denom().to_string(), "3");
            }
            _ => unreachable!(),
        }
        assert_eq!(a.to_string(), "-2/3");
    }

    #[test]
    fn prime_field_reduces_negatives_into_range() {
        let f = FieldSpec::Prime(7);
        assert_eq!(f.from_i64(-1), Scalar::Fp { val: 6, p: 7 });
        assert_eq!(f.from_i64(21), Scalar::Fp { val: 0, p: 7 });
    }

    #[test]
    fn inverse_against_extended_euclid() {
        let f = FieldSpec::Prime(32003);
        for v in [1u64, 2, 5, 17, 32002] {
            let x = Scalar::Fp { val: v, p: 32003 };
            assert!(x.mul(&x.inv()).is_one());
        }
        let half = f.from_i64(2).inv();
        assert!(half.mul(&f.from_i64(2)).is_one());
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "-5", "7/3", "-22/7"] {
            let x = Scalar::parse(FieldSpec::Rational, s).unwrap();
            let y = Scalar::parse(FieldSpec::Rational, &x.to_string()).unwrap();
            assert_eq!(x, y);
        }
    }
}
