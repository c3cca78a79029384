//! Monomials with dense exponent vectors and the monomial orders used by
//! the Groebner engine.
//!
//! All ambient rings in scope have at most a dozen variables, so exponent
//! vectors are dense. The derived `Ord` on [`Monomial`] (degree, then
//! exponents) is only a canonical storage order for term maps; comparisons
//! that matter mathematically go through [`MonomialOrder`].

use std::cmp::Ordering;

/// A power product of the ambient variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    /// The single variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial::new(
            other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True when the monomial is a power of a single variable (or 1).
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut var = None;
        for (i, e) in self.exps.iter().enumerate() {
            if *e > 0 {
                if var.is_some() {
                    return None;
                }
                var = Some(i);
            }
        }
        var
    }
}

// Canonical storage order: degree first, then exponents lexicographically.
impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

/// A term order on monomials of a fixed ambient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic; the engine default.
    DegRevLex,
    /// Pure lexicographic with `x_0 > x_1 > ...`.
    Lex,
    /// Block elimination order: degrevlex on the first `block` variables,
    /// ties broken by degrevlex on the rest. Eliminates the first block.
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.nvars(), b.nvars(), "variable count mismatch");
        match self {
            MonomialOrder::DegRevLex => degrevlex(a.exponents(), b.exponents()),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Elimination { block } => {
                let (a1, a2) = a.exponents().split_at((*block).min(a.nvars()));
                let (b1, b2) = b.exponents().split_at((*block).min(b.nvars()));
                degrevlex(a1, b1).then_with(|| degrevlex(a2, b2))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        // equal degree: smaller exponent on the *last* differing variable wins
        for (x, y) in a.iter().zip(b.iter()).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    })
}

/// Position-over-term order on `(component, monomial)` pairs for free
/// modules, with top-position priority: a lower component index is greater.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
}

impl ModuleOrder {
    pub fn new(base: MonomialOrder) -> Self {
        ModuleOrder { base }
    }

    pub fn compare(&self, a: &(usize, Monomial), b: &(usize, Monomial)) -> Ordering {
        // component 0 dominates everything in component 1, and so on
        b.0.cmp(&a.0).then_with(|| self.base.compare(&a.1, &b.1))
    }
}
