//! Exact orders of classical groups and the bracketing bounds used to bound
//! them from both sides. All comparisons are exact integer arithmetic.

use super::arith::gcd_u128;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalKind {
    Gl,
    Psl,
    Gu,
    Psu,
    Sp,
}

impl ClassicalKind {
    pub fn all() -> [ClassicalKind; 5] {
        [
            ClassicalKind::Gl,
            ClassicalKind::Psl,
            ClassicalKind::Gu,
            ClassicalKind::Psu,
            ClassicalKind::Sp,
        ]
    }

    /// Smallest dimension the order formula (and Table of bounds) covers.
    pub fn min_dimension(&self) -> u32 {
        match self {
            ClassicalKind::Gl | ClassicalKind::Psl | ClassicalKind::Gu => 2,
            ClassicalKind::Psu => 3,
            ClassicalKind::Sp => 4,
        }
    }

    fn validate(&self, n: u32) -> Result<()> {
        if n < self.min_dimension() {
            return Err(Error::InvalidArgument(format!(
                "{self:?} requires n >= {}",
                self.min_dimension()
            )));
        }
        if *self == ClassicalKind::Sp && !n.is_multiple_of(2) {
            return Err(Error::InvalidArgument("Sp requires even n".into()));
        }
        Ok(())
    }
}

fn pow(q: u128, e: u32) -> Result<u128> {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(q).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

fn mul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Exact order by the standard product formulas, e.g.
/// |GL(n,q)| = q^{n(n-1)/2} prod_{i=1..n} (q^i - 1).
pub fn classical_order(kind: ClassicalKind, n: u32, q: u64) -> Result<u128> {
    kind.validate(n)?;
    let q = q as u128;
    if q < 2 {
        return Err(Error::InvalidArgument("q must be at least 2".into()));
    }
    match kind {
        ClassicalKind::Gl => {
            let mut acc = pow(q, n * (n - 1) / 2)?;
            for i in 1..=n {
                acc = mul(acc, pow(q, i)? - 1)?;
            }
            Ok(acc)
        }
        ClassicalKind::Psl => {
            let gl = classical_order(ClassicalKind::Gl, n, q as u64)?;
            let d = gcd_u128(n as u128, q - 1);
            Ok(gl / (q - 1) / d)
        }
        ClassicalKind::Gu => {
            let mut acc = pow(q, n * (n - 1) / 2)?;
            for i in 1..=n {
                let factor = if i % 2 == 0 {
                    pow(q, i)? - 1
                } else {
                    pow(q, i)? + 1
                };
                acc = mul(acc, factor)?;
            }
            Ok(acc)
        }
        ClassicalKind::Psu => {
            let gu = classical_order(ClassicalKind::Gu, n, q as u64)?;
            let d = gcd_u128(n as u128, q + 1);
            Ok(gu / (q + 1) / d)
        }
        ClassicalKind::Sp => {
            let m = n / 2;
            let mut acc = pow(q, m * m)?;
            for i in 1..=m {
                acc = mul(acc, pow(q, 2 * i)? - 1)?;
            }
            Ok(acc)
        }
    }
}

/// One side of a bound: coeff * q^exponent with a possibly negative exponent,
/// compared exactly by moving q powers across the inequality.
struct Bound {
    coeff: u128,
    exponent: i64,
    strict: bool,
}

fn bound_holds_below(order: u128, q: u128, b: &Bound) -> Result<bool> {
    // is `order` above the lower bound?
    let (lhs, rhs) = if b.exponent >= 0 {
        (order, mul(b.coeff, pow(q, b.exponent as u32)?)?)
    } else {
        (mul(order, pow(q, (-b.exponent) as u32)?)?, b.coeff)
    };
    Ok(if b.strict { lhs > rhs } else { lhs >= rhs })
}

fn bound_holds_above(order: u128, q: u128, b: &Bound) -> Result<bool> {
    // is `order` below the upper bound?
    let (lhs, rhs) = if b.exponent >= 0 {
        (order, mul(b.coeff, pow(q, b.exponent as u32)?)?)
    } else {
        (mul(order, pow(q, (-b.exponent) as u32)?)?, b.coeff)
    };
    Ok(if b.strict { lhs < rhs } else { lhs <= rhs })
}

/// Checks that the exact order lies within its bracketing bounds:
///
/// | group   | lower                                | upper                                       |
/// |---------|--------------------------------------|---------------------------------------------|
/// | GL(n,q) | > (1-1/q-1/q^2) q^{n^2}              | <= (1-1/q)(1-1/q^2) q^{n^2}                 |
/// | PSL     | > q^{n^2-2}                          | <= (1-1/q^2) q^{n^2-1}                      |
/// | GU      | >= (1+1/q)(1-1/q^2) q^{n^2}          | <= (1+1/q)(1-1/q^2)(1+1/q^3) q^{n^2}        |
/// | PSU     | > (1-1/q) q^{n^2-2}                  | <= (1-1/q^2)(1+1/q^3) q^{n^2-1}             |
/// | Sp      | > (1-1/q^2-1/q^4) q^{n(n+1)/2}       | <= (1-1/q^2)(1-1/q^4) q^{n(n+1)/2}          |
pub fn check_order_bounds(kind: ClassicalKind, n: u32, q: u64) -> Result<bool> {
    let order = classical_order(kind, n, q)?;
    let q = q as u128;
    let nn = (n as i64) * (n as i64);
    let (lower, upper) = match kind {
        ClassicalKind::Gl => (
            Bound {
                coeff: q * q - q - 1,
                exponent: nn - 2,
                strict: true,
            },
            Bound {
                coeff: (q - 1) * (q * q - 1),
                exponent: nn - 3,
                strict: false,
            },
        ),
        ClassicalKind::Psl => (
            Bound {
                coeff: 1,
                exponent: nn - 2,
                strict: true,
            },
            Bound {
                coeff: q * q - 1,
                exponent: nn - 3,
                strict: false,
            },
        ),
        ClassicalKind::Gu => (
            Bound {
                coeff: (q + 1) * (q * q - 1),
                exponent: nn - 3,
                strict: false,
            },
            Bound {
                coeff: (q + 1) * (q * q - 1) * (q * q * q + 1),
                exponent: nn - 6,
                strict: false,
            },
        ),
        ClassicalKind::Psu => (
            Bound {
                coeff: q - 1,
                exponent: nn - 3,
                strict: true,
            },
            Bound {
                coeff: (q * q - 1) * (q * q * q + 1),
                exponent: nn - 6,
                strict: false,
            },
        ),
        ClassicalKind::Sp => {
            let big_n = (n as i64) * (n as i64 + 1) / 2;
            (
                Bound {
                    coeff: q * q * q * q - q * q - 1,
                    exponent: big_n - 4,
                    strict: true,
                },
                Bound {
                    coeff: (q * q - 1) * (q * q * q * q - 1),
                    exponent: big_n - 6,
                    strict: false,
                },
            )
        }
    };
    Ok(bound_holds_below(order, q, &lower)? && bound_holds_above(order, q, &upper)?)
}
