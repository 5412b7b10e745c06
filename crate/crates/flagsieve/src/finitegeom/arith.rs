//! Exact counting and gcd identities used by the parameter analysis.

use super::field::factor_prime_power;
use crate::error::{Error, Result};

pub fn gcd_u128(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    gcd_u128(a as u128, b as u128) as u64
}

pub fn lcm_u128(a: u128, b: u128) -> u128 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd_u128(a, b) * b
    }
}

fn checked_pow(q: u128, e: u32) -> Result<u128> {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(q).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// Number of i-dimensional subspaces of an m-dimensional space over GF(q):
/// prod_{j=1..i} (q^{m-i+j} - 1) / (q^j - 1), computed with exact stepwise
/// division (every prefix is itself a Gaussian binomial).
pub fn gaussian_binomial(m: u32, i: u32, q: u64) -> Result<u128> {
    if i > m {
        return Err(Error::InvalidArgument(format!(
            "subspace dimension {i} exceeds ambient dimension {m}"
        )));
    }
    let q = q as u128;
    let mut acc: u128 = 1;
    for j in 1..=i {
        let numerator = checked_pow(q, m - i + j)? - 1;
        let denominator = checked_pow(q, j)? - 1;
        acc = acc.checked_mul(numerator).ok_or(Error::Overflow)? / denominator;
    }
    Ok(acc)
}

/// An exact nonnegative rational, kept reduced. Only what the gcd identities
/// need: construction, reduction, equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    num: u128,
    den: u128,
}

impl Rational {
    pub fn new(num: u128, den: u128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd_u128(num, den).max(1);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn integer(n: u128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn num(&self) -> u128 {
        self.num
    }

    pub fn den(&self) -> u128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// gcd of rationals: gcd(a/b, c/d) = gcd(ad, cb)/(bd); lcm dually.
fn rational_gcd(a: Rational, b: Rational) -> Rational {
    Rational::new(gcd_u128(a.num * b.den, b.num * a.den), a.den * b.den)
}

fn rational_div(a: Rational, b: Rational) -> Rational {
    assert!(b.num != 0);
    Rational::new(a.num * b.den, a.den * b.num)
}

fn rational_lcm(a: Rational, b: Rational) -> Rational {
    Rational::new(lcm_u128(a.num * b.den, b.num * a.den), a.den * b.den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcdVariant {
    I,
    II,
    III,
}

/// Evaluates both sides of the gcd/lcm identity for q0 = p^e, q = p^f:
///
/// (i)   (q-1)  / lcm(q0-1, (q-1)/gcd(n,q-1)) = gcd(n, (q-1)/(q0-1))
/// (ii)  (q+1)  / lcm(q0+1, (q+1)/gcd(n,q+1)) = gcd(n, (q+1)/(q0+1))
/// (iii) f even: (q-1) / lcm(sqrt(q)+1, (q-1)/gcd(n,q-1)) = gcd(n, sqrt(q)-1)
///
/// Variant (ii) can take non-integral values when f/e is even, so both sides
/// are returned as exact rationals; they must be equal. For variant (iii) the
/// parameter `e` is ignored (sqrt(q) plays its role).
pub fn gcd_identity(
    variant: GcdVariant,
    n: u64,
    p: u64,
    e: u32,
    f: u32,
) -> Result<(Rational, Rational)> {
    if n <= 1 {
        return Err(Error::InvalidArgument("n must exceed 1".into()));
    }
    if e == 0 || f == 0 || !f.is_multiple_of(e) {
        return Err(Error::InvalidArgument(
            "need positive e, f with e dividing f".into(),
        ));
    }
    if variant == GcdVariant::III && !f.is_multiple_of(2) {
        return Err(Error::InvalidArgument("variant iii requires even f".into()));
    }
    let q = checked_pow(p as u128, f)?;
    let n = n as u128;
    match variant {
        GcdVariant::I => {
            let q0 = checked_pow(p as u128, e)?;
            let lhs = Rational::new(q - 1, lcm_u128(q0 - 1, (q - 1) / gcd_u128(n, q - 1)));
            let rhs = Rational::integer(gcd_u128(n, (q - 1) / (q0 - 1)));
            Ok((lhs, rhs))
        }
        GcdVariant::II => {
            let q0 = checked_pow(p as u128, e)?;
            let inner = Rational::new(q + 1, gcd_u128(n, q + 1));
            let lhs = rational_div(
                Rational::integer(q + 1),
                rational_lcm(Rational::integer(q0 + 1), inner),
            );
            let rhs = rational_gcd(Rational::integer(n), Rational::new(q + 1, q0 + 1));
            Ok((lhs, rhs))
        }
        GcdVariant::III => {
            let root = checked_pow(p as u128, f / 2)?;
            let lhs = Rational::new(q - 1, lcm_u128(root + 1, (q - 1) / gcd_u128(n, q - 1)));
            let rhs = Rational::integer(gcd_u128(n, root - 1));
            Ok((lhs, rhs))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParabolicKind {
    Psl,
    Psp,
    Psu,
}

/// Index of the maximal parabolic subgroup P_i in the given group, by the
/// closed-form subspace counts:
/// - PSL(n,q), node i: the Gaussian binomial [n choose i]_q;
/// - PSp(4,q), nodes 1, 2: (q+1)(q^2+1);
/// - PSp(6,q), nodes 1..3: (q^3+1)(q^2+q+1), (q^3+1)(q^2+q+1)(q^2+1),
///   (q^3+1)(q^2+1)(q+1);
/// - PSU(3,q0): q0^3+1; PSU(4,q0): (q0^2+1)(q0^3+1) or (q0+1)(q0^3+1);
///   PSU(5,q0): (q0^2+1)(q0^5+1) or (q0^3+1)(q0^5+1), node = isotropic
///   subspace dimension.
pub fn parabolic_index(kind: ParabolicKind, n: u32, q: u64, node: u32) -> Result<u128> {
    let q = q as u128;
    let bad = || {
        Error::InvalidArgument(format!(
            "unsupported parabolic ({kind:?}, n={n}, node={node})"
        ))
    };
    match kind {
        ParabolicKind::Psl => {
            if node == 0 || node >= n {
                return Err(bad());
            }
            gaussian_binomial(n, node, q as u64)
        }
        ParabolicKind::Psp => match (n, node) {
            (4, 1) | (4, 2) => Ok((q + 1) * (q * q + 1)),
            (6, 1) => Ok((q * q * q + 1) * (q * q + q + 1)),
            (6, 2) => Ok((q * q * q + 1) * (q * q + q + 1) * (q * q + 1)),
            (6, 3) => Ok((q * q * q + 1) * (q * q + 1) * (q + 1)),
            _ => Err(bad()),
        },
        ParabolicKind::Psu => match (n, node) {
            (3, 1) => Ok(q * q * q + 1),
            (4, 1) => Ok((q * q + 1) * (q * q * q + 1)),
            (4, 2) => Ok((q + 1) * (q * q * q + 1)),
            (5, 1) => Ok((q * q + 1) * (q * q * q * q * q + 1)),
            (5, 2) => Ok((q * q * q + 1) * (q * q * q * q * q + 1)),
            _ => Err(bad()),
        },
    }
}

/// Validates that q = p^f and returns p.
pub fn prime_of(q: u64, f: u32) -> Result<u64> {
    let (p, f_actual) = factor_prime_power(q)
        .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
    if f_actual != f {
        return Err(Error::InvalidArgument(format!(
            "{q} is p^{f_actual}, not p^{f}"
        )));
    }
    Ok(p)
}
