//! GF(p^f) in polynomial basis.
//!
//! Elements are encoded as integers: the element with coefficients
//! `c_0 + c_1 x + ... + c_{f-1} x^{f-1}` is stored as `sum c_i p^i`. The
//! modulus is the irreducible monic polynomial of degree f whose non-leading
//! coefficients have the least such encoding; irreducibility is verified by
//! trial division by all lower-degree monic polynomials at build time.

use crate::error::{Error, Result};

/// An element of GF(p^f), encoded base p (see module docs).
pub type FieldElement = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    f: u32,
    q: u32,
    /// Coefficients of the modulus, low degree first, length f+1, monic.
    modulus: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn new(p: u32, f: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if f == 0 {
            return Err(Error::InvalidArgument("f must be positive".into()));
        }
        let q = (p as u64)
            .checked_pow(f)
            .filter(|&q| q <= 1 << 16)
            .ok_or(Error::InvalidArgument(format!("q = {p}^{f} exceeds 2^16")))?
            as u32;
        let modulus = Self::least_irreducible(p, f)?;
        Ok(FieldSpec { p, f, q, modulus })
    }

    /// GF(q) for a prime power q, factoring q as p^f.
    pub fn from_order(q: u32) -> Result<Self> {
        let (p, f) = factor_prime_power(q as u64)
            .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        FieldSpec::new(p as u32, f)
    }

    fn least_irreducible(p: u32, f: u32) -> Result<Vec<u32>> {
        if f == 1 {
            return Ok(vec![0, 1]);
        }
        let total = (p as u64).pow(f);
        for enc in 0..total {
            let mut coeffs: Vec<u32> = (0..f)
                .map(|i| ((enc / (p as u64).pow(i)) % p as u64) as u32)
                .collect();
            coeffs.push(1);
            if poly_is_irreducible(p, &coeffs) {
                return Ok(coeffs);
            }
        }
        Err(Error::InvalidArgument(format!(
            "no irreducible degree-{f} polynomial over GF({p})"
        )))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        0
    }

    pub fn one(&self) -> FieldElement {
        1
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        0..self.q
    }

    fn decode(&self, a: FieldElement) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.f as usize);
        let mut rest = a;
        for _ in 0..self.f {
            out.push(rest % self.p);
            rest /= self.p;
        }
        out
    }

    fn encode(&self, coeffs: &[u32]) -> FieldElement {
        let mut out = 0u32;
        for &c in coeffs.iter().rev() {
            out = out * self.p + c % self.p;
        }
        out
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (ca, cb) = (self.decode(a), self.decode(b));
        let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let coeffs: Vec<u32> = self
            .decode(a)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.encode(&coeffs)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (ca, cb) = (self.decode(a), self.decode(b));
        let f = self.f as usize;
        let mut prod = vec![0u64; 2 * f - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] += x as u64 * y as u64;
            }
        }
        // reduce modulo the monic modulus: x^f = -(m_0 + m_1 x + ... + m_{f-1} x^{f-1})
        let p64 = self.p as u64;
        for i in (f..prod.len()).rev() {
            let c = prod[i] % p64;
            if c != 0 {
                for (j, &m) in self.modulus.iter().enumerate().take(f) {
                    prod[i - f + j] += c * ((p64 - m as u64 % p64) % p64);
                }
            }
            prod[i] = 0;
        }
        let coeffs: Vec<u32> = prod[..f]
            .iter()
            .map(|&x| (x % self.p as u64) as u32)
            .collect();
        self.encode(&coeffs)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a == 0 {
            return Err(Error::InvalidArgument("inverse of zero".into()));
        }
        // a^(q-2); q <= 2^16 so repeated squaring keeps this cheap
        Ok(self.pow(a, self.q as u64 - 2))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// x -> x^p, the Frobenius automorphism.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p as u64)
    }

    /// The least primitive element (generator of the multiplicative group).
    pub fn primitive_element(&self) -> FieldElement {
        if self.q == 2 {
            return 1;
        }
        'outer: for g in 2..self.q {
            let mut x = self.one();
            for _ in 0..self.q - 2 {
                x = self.mul(x, g);
                if x == 1 {
                    continue 'outer;
                }
            }
            return g;
        }
        unreachable!("every finite field has a primitive element")
    }
}

/// Writes q as p^f with p prime, if possible.
pub fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut n = q;
    let mut p = 0u64;
    for d in 2..=q {
        if d * d > n {
            break;
        }
        if n.is_multiple_of(d) {
            p = d;
            break;
        }
    }
    if p == 0 {
        p = n; // q itself is prime
    }
    let mut f = 0u32;
    while n.is_multiple_of(p) {
        n /= p;
        f += 1;
    }
    if n == 1 {
        Some((p, f))
    } else {
        None
    }
}

fn poly_is_irreducible(p: u32, poly: &[u32]) -> bool {
    let f = poly.len() - 1;
    for deg in 1..=f / 2 {
        let total = (p as u64).pow(deg as u32);
        for enc in 0..total {
            let mut divisor: Vec<u32> = (0..deg)
                .map(|i| ((enc / (p as u64).pow(i as u32)) % p as u64) as u32)
                .collect();
            divisor.push(1);
            if poly_divides(p, &divisor, poly) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(p: u32, divisor: &[u32], poly: &[u32]) -> bool {
    let d = divisor.len() - 1;
    let mut rem: Vec<u32> = poly.to_vec();
    for i in (d..rem.len()).rev() {
        let c = rem[i];
        if c != 0 {
            for (j, &m) in divisor.iter().enumerate() {
                let idx = i - d + j;
                rem[idx] = (rem[idx] + c * (p - m % p)) % p;
            }
        }
    }
    rem[..d].iter().all(|&x| x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_modulus_is_x2_x_1() {
        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.q(), 4);
    }

    #[test]
    fn gf4_multiplication_table() {
        let f = FieldSpec::new(2, 2).unwrap();
        // elements: 0, 1, w (=2), w+1 (=3) with w^2 = w + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.mul(3, 3), 2);
        assert_eq!(f.add(2, 3), 1);
    }

    #[test]
    fn field_axioms_small_fields() {
        for (p, f) in [(2, 1), (2, 2), (3, 1), (2, 3), (3, 2), (5, 1)] {
            let field = FieldSpec::new(p, f).unwrap();
            let q = field.q();
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(field.add(a, b), field.add(b, a));
                    assert_eq!(field.mul(a, b), field.mul(b, a));
                    for c in 0..q.min(8) {
                        assert_eq!(
                            field.mul(a, field.add(b, c)),
                            field.add(field.mul(a, b), field.mul(a, c))
                        );
                        assert_eq!(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c)));
                    }
                }
                if a != 0 {
                    let inv = field.inv(a).unwrap();
                    assert_eq!(field.mul(a, inv), 1);
                }
                assert_eq!(field.add(a, field.neg(a)), 0);
            }
        }
    }

    #[test]
    fn frobenius_fixes_prime_field() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        for a in 0..3 {
            assert_eq!(f9.frobenius(a), a);
        }
        // Frobenius is an automorphism of order f
        for a in f9.elements() {
            assert_eq!(f9.frobenius(f9.frobenius(a)), a);
        }
    }

    #[test]
    fn prime_power_factoring() {
        assert_eq!(factor_prime_power(32), Some((2, 5)));
        assert_eq!(factor_prime_power(27), Some((3, 3)));
        assert_eq!(factor_prime_power(7), Some((7, 1)));
        assert_eq!(factor_prime_power(12), None);
        assert_eq!(factor_prime_power(1), None);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FieldSpec::new(4, 1).is_err());
        assert!(FieldSpec::new(2, 0).is_err());
        assert!(FieldSpec::new(2, 17).is_err());
    }
}
