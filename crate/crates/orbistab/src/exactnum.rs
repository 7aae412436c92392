//! Exact arithmetic in cyclotomic fields `Q(zeta_n)`.
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^{phi(n)-1}`
//! modulo the n-th cyclotomic polynomial, so equality of coefficient vectors
//! is equality of field elements. Mixed orders are embedded eagerly into
//! `Q(zeta_lcm)` before combining. Inversion runs the extended Euclidean
//! algorithm against `Phi_n` over `Q[x]`; no factorization, no floating
//! point.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rat, Result};

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

fn cyclo_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The n-th cyclotomic polynomial `Phi_n` as little-endian integer
/// coefficients (monic), computed by exact division
/// `Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = cyclo_cache().lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let poly = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^n - 1
        let mut p = vec![BigInt::zero(); n as usize + 1];
        p[0] = BigInt::from(-1);
        p[n as usize] = BigInt::one();
        for d in 1..n {
            if n.is_multiple_of(d) {
                p = int_poly_div_exact(&p, &cyclotomic_polynomial(d));
            }
        }
        p
    };
    let arc = Arc::new(poly);
    cyclo_cache()
        .lock()
        .unwrap()
        .insert(n, Arc::clone(&arc));
    arc
}

/// Euler totient, read off as `deg Phi_n`.
pub fn euler_phi(n: u64) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

// Exact division of integer polynomials; divisor must be monic and divide
// the dividend exactly (both guaranteed for cyclotomic factors).
fn int_poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut rem[i], BigInt::zero());
        let shift = i - db;
        for (j, bj) in b.iter().enumerate().take(db) {
            let t = &c * bj;
            rem[shift + j] -= t;
        }
        quot[shift] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    quot
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers (little-endian coefficient vectors)
// ---------------------------------------------------------------------------

fn poly_deg(p: &[Rat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_sub_scaled(p: &mut Vec<Rat>, q: &[Rat], c: &Rat, shift: usize) {
    if p.len() < q.len() + shift {
        p.resize(q.len() + shift, Rat::zero());
    }
    for (j, qj) in q.iter().enumerate() {
        if !qj.is_zero() {
            p[shift + j] -= c * qj;
        }
    }
}

// Division with remainder by an arbitrary nonzero polynomial over Q.
fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    let mut quot = vec![Rat::zero(); a.len().saturating_sub(db)];
    while let Some(dr) = poly_deg(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] / &lead;
        let shift = dr - db;
        poly_sub_scaled(&mut rem, b, &c, shift);
        rem[dr] = Rat::zero();
        quot[shift] = c;
    }
    (quot, rem)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

// Rescales a nonzero polynomial to primitive integer form and returns the
// factor applied; keeps Euclidean remainders from blowing up.
fn normalize_content(p: &mut [Rat]) -> Rat {
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for c in p.iter() {
        if !c.is_zero() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
    }
    if num_gcd.is_zero() {
        return Rat::one();
    }
    let factor = Rat::new(den_lcm, num_gcd);
    for c in p.iter_mut() {
        if !c.is_zero() {
            *c *= &factor;
        }
    }
    factor
}

// Inverse of `a` modulo the monic polynomial `m` (as rationals), via the
// extended Euclidean algorithm with content normalization at every step.
// Returns None when gcd(a, m) has positive degree, which cannot happen for
// nonzero elements when m is irreducible.
fn poly_inverse_mod(a: &[Rat], m: &[Rat]) -> Option<Vec<Rat>> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    let (mut s0, mut s1) = (vec![], vec![Rat::one()]);
    loop {
        let d1 = poly_deg(&r1)?;
        if d1 == 0 {
            break;
        }
        let (q, mut r) = poly_divmod(&r0, &r1);
        let qs1 = poly_mul(&q, &s1);
        let mut s_new = s0.clone();
        if s_new.len() < qs1.len() {
            s_new.resize(qs1.len(), Rat::zero());
        }
        for (i, c) in qs1.iter().enumerate() {
            s_new[i] -= c;
        }
        let factor = normalize_content(&mut r);
        for c in s_new.iter_mut() {
            *c *= &factor;
        }
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s_new);
    }
    let g = r1[poly_deg(&r1)?].clone();
    Some(s1.into_iter().map(|c| c / &g).collect())
}

// ---------------------------------------------------------------------------
// CycloNumber
// ---------------------------------------------------------------------------

/// An element of `Q(zeta_n)` in canonical power-basis form: exactly
/// `phi(n)` rational coefficients, reduced modulo `Phi_n`.
#[derive(Clone, Debug)]
pub struct CycloNumber {
    order: u64,
    coeffs: Vec<Rat>,
}

impl CycloNumber {
    /// Canonicalizes a raw coefficient vector: exponents are first wrapped
    /// cyclically using `zeta^n = 1`, then reduced modulo `Phi_n`.
    fn reduce(order: u64, mut raw: Vec<Rat>) -> Self {
        let n = order as usize;
        if raw.len() > n {
            for i in (n..raw.len()).rev() {
                let c = std::mem::replace(&mut raw[i], Rat::zero());
                if !c.is_zero() {
                    raw[i % n] += c;
                }
            }
            raw.truncate(n);
        }
        let phi_poly = cyclotomic_polynomial(order);
        let phi = phi_poly.len() - 1;
        for i in (phi..raw.len()).rev() {
            let c = std::mem::replace(&mut raw[i], Rat::zero());
            if c.is_zero() {
                continue;
            }
            let shift = i - phi;
            for (j, pj) in phi_poly.iter().enumerate().take(phi) {
                if !pj.is_zero() {
                    raw[shift + j] -= &c * &Rat::from_integer(pj.clone());
                }
            }
        }
        raw.truncate(phi);
        raw.resize(phi, Rat::zero());
        CycloNumber { order, coeffs: raw }
    }

    /// `zeta_order^exponent` in canonical form; the exponent is reduced
    /// modulo the order, so negative exponents are fine.
    pub fn root(order: u64, exponent: i64) -> Self {
        assert!(order >= 1, "order must be positive");
        let e = exponent.rem_euclid(order as i64) as usize;
        let mut raw = vec![Rat::zero(); e + 1];
        raw[e] = Rat::one();
        Self::reduce(order, raw)
    }

    /// Embeds a rational into `Q(zeta_1) = Q`.
    pub fn rational(q: Rat) -> Self {
        CycloNumber { order: 1, coeffs: vec![q] }
    }

    /// Canonicalizing constructor: interprets `raw[i]` as the coefficient
    /// of `zeta_order^i` and reduces.
    pub fn from_coeffs(order: u64, raw: Vec<Rat>) -> Self {
        assert!(order >= 1, "order must be positive");
        Self::reduce(order, raw)
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(crate::rat_int(n))
    }

    pub fn zero() -> Self {
        Self::rational(Rat::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rat::one())
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Power-basis coefficients, length `phi(order)`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Image under the embedding `Q(zeta_n) -> Q(zeta_l)`, `n | l`,
    /// `zeta_n = zeta_l^{l/n}`.
    fn embed(&self, l: u64) -> CycloNumber {
        if l == self.order {
            return self.clone();
        }
        debug_assert_eq!(l % self.order, 0);
        let m = (l / self.order) as usize;
        let mut raw = vec![Rat::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[i * m] = c.clone();
            }
        }
        Self::reduce(l, raw)
    }

    fn binop(a: &CycloNumber, b: &CycloNumber, f: impl Fn(&Rat, &Rat) -> Rat) -> CycloNumber {
        let l = a.order.lcm(&b.order);
        let (ea, eb) = (a.embed(l), b.embed(l));
        let coeffs = ea
            .coeffs
            .iter()
            .zip(eb.coeffs.iter())
            .map(|(x, y)| f(x, y))
            .collect();
        CycloNumber { order: l, coeffs }
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, q: &Rat) -> CycloNumber {
        CycloNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Exact multiplicative inverse. Errors on zero.
    pub fn invert(&self) -> Result<CycloNumber> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus: Vec<Rat> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        let inv = poly_inverse_mod(&self.coeffs, &modulus).ok_or(Error::DivisionByZero)?;
        Ok(Self::reduce(self.order, inv))
    }

    /// The Galois map `zeta -> zeta^k`; requires `gcd(k, n) = 1`.
    pub fn galois(&self, k: u64) -> Result<CycloNumber> {
        let n = self.order;
        if BigInt::from(k).gcd(&BigInt::from(n)) != BigInt::one() {
            return Err(Error::NotAGaloisMap { k, n });
        }
        let mut raw = vec![Rat::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(i as u64 * k % n) as usize] += c;
            }
        }
        Ok(Self::reduce(n, raw))
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conjugate(&self) -> CycloNumber {
        if self.order == 1 {
            return self.clone();
        }
        self.galois(self.order - 1).expect("n-1 is coprime to n")
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Rat::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Floating approximation `(re, im)`. For display and CSV output only;
    /// never consulted by any exact decision. Supported precision is
    /// `1..=12` decimal digits of absolute error at desk-scale coefficient
    /// sizes.
    pub fn approx_complex(&self, precision: u32) -> (f64, f64) {
        assert!(
            (1..=12).contains(&precision),
            "supported precision range is 1..=12 digits"
        );
        let n = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = rat_to_f64(c);
            let theta = 2.0 * std::f64::consts::PI * (i as f64) / n;
            re += x * theta.cos();
            im += x * theta.sin();
        }
        (re, im)
    }

    /// True when the element equals its own conjugate.
    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    /// Fused evaluation of `sum_k w_k a_k b_k` in one pass: products are
    /// accumulated as exponent convolutions in a single raw buffer at the
    /// common order and reduced once. This is what keeps character-table
    /// sums (orthogonality, tensor multiplicities, correction coefficients)
    /// cheap for large cyclic groups, where every factor is a monomial.
    pub fn dot_products(terms: &[(Rat, &CycloNumber, &CycloNumber)]) -> CycloNumber {
        let mut l = 1u64;
        for (_, a, b) in terms {
            l = l.lcm(&a.order).lcm(&b.order);
        }
        let mut raw = vec![Rat::zero(); l as usize];
        for (w, a, b) in terms {
            if w.is_zero() {
                continue;
            }
            let sa = (l / a.order) as usize;
            let sb = (l / b.order) as usize;
            for (ia, ca) in a.coeffs.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                let wa = w * ca;
                for (ib, cb) in b.coeffs.iter().enumerate() {
                    if !cb.is_zero() {
                        raw[(ia * sa + ib * sb) % l as usize] += &wa * cb;
                    }
                }
            }
        }
        Self::reduce(l, raw)
    }
}

pub(crate) fn rat_to_f64(q: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        // Extremely large entries: fall back on a scaled division.
        let scaled = (q * Rat::from_integer(BigInt::from(1u64 << 53))).trunc();
        scaled.numer().to_f64().unwrap_or(f64::NAN) / (1u64 << 53) as f64
    })
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let l = self.order.lcm(&other.order);
        self.embed(l).coeffs == other.embed(l).coeffs
    }
}

impl Eq for CycloNumber {}

impl std::ops::Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        CycloNumber::binop(self, rhs, |a, b| a + b)
    }
}

impl std::ops::Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        CycloNumber::binop(self, rhs, |a, b| a - b)
    }
}

impl std::ops::Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        let l = self.order.lcm(&rhs.order);
        let a = self.embed(l);
        let b = rhs.embed(l);
        // Monomial fast path: a single-term factor is a shift.
        let single = |p: &CycloNumber| -> Option<(usize, Rat)> {
            let mut it = p.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
            match (it.next(), it.next()) {
                (Some((i, c)), None) => Some((i, c.clone())),
                _ => None,
            }
        };
        if let Some((e, c)) = single(&a).or_else(|| single(&b)) {
            let dense = if single(&a).is_some() { &b } else { &a };
            let mut raw = vec![Rat::zero(); dense.coeffs.len() + e];
            for (i, d) in dense.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    raw[i + e] = d * &c;
                }
            }
            return CycloNumber::reduce(l, raw);
        }
        CycloNumber::reduce(l, poly_mul(&a.coeffs, &b.coeffs))
    }
}

impl fmt::Display for CycloNumber {
    /// Symbolic rendering: rationals as `num/den`, monomials as
    /// `[-]{q*}z{n}^{k}`, everything else as a polynomial in `z{n}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{}", crate::rat_to_string(&q));
        }
        // Try +/- a monomial.
        for k in 1..self.order {
            let z = CycloNumber::root(self.order, k as i64);
            for sign in [1i64, -1] {
                let cand = z.scale(&crate::rat_int(sign));
                if *self == cand {
                    let s = if sign < 0 { "-" } else { "" };
                    return if k == 1 {
                        write!(f, "{s}z{}", self.order)
                    } else {
                        write!(f, "{s}z{}^{k}", self.order)
                    };
                }
            }
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sep = if first {
                if c.is_negative() { "-" } else { "" }
            } else if c.is_negative() {
                " - "
            } else {
                " + "
            };
            first = false;
            write!(f, "{sep}")?;
            if i == 0 {
                write!(f, "{}", crate::rat_to_string(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", crate::rat_to_string(&mag))?;
                }
                if i == 1 {
                    write!(f, "z{}", self.order)?;
                } else {
                    write!(f, "z{}^{}", self.order, i)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int};
    use proptest::prelude::*;

    fn zeta(n: u64, e: i64) -> CycloNumber {
        CycloNumber::root(n, e)
    }

    #[test]
    fn root_canonical_forms() {
        assert_eq!(zeta(4, 2), CycloNumber::from_int(-1));
        assert_eq!(&zeta(3, 1) + &zeta(3, 2), CycloNumber::from_int(-1));
        assert_eq!(&zeta(8, 3) * &zeta(8, 5), CycloNumber::one());
        // negative exponents reduce modulo the order
        assert_eq!(zeta(5, -1), zeta(5, 4));
    }

    #[test]
    fn cyclotomic_polynomials_divide_x_n_minus_one() {
        for n in 1..=60u64 {
            let phi = cyclotomic_polynomial(n);
            let mut xn1 = vec![Rat::zero(); n as usize + 1];
            xn1[0] = -Rat::one();
            xn1[n as usize] = Rat::one();
            let q: Vec<Rat> = phi.iter().map(|c| Rat::from_integer(c.clone())).collect();
            let (_, rem) = poly_divmod(&xn1, &q);
            assert!(poly_deg(&rem).is_none(), "Phi_{n} does not divide x^{n}-1");
            // deg Phi_n = phi(n), via the multiplicative formula
            let mut expected = 1u64;
            let mut m = n;
            let mut p = 2u64;
            while p * p <= m {
                if m % p == 0 {
                    expected *= p - 1;
                    m /= p;
                    while m % p == 0 {
                        expected *= p;
                        m /= p;
                    }
                }
                p += 1;
            }
            if m > 1 {
                expected *= m - 1;
            }
            assert_eq!(euler_phi(n) as u64, expected);
        }
    }

    #[test]
    fn inversion_examples() {
        // 2 - zeta_3 - zeta_3^2 = 3
        let a = &(&CycloNumber::from_int(2) - &zeta(3, 1)) - &zeta(3, 2);
        assert_eq!(a.invert().unwrap(), CycloNumber::rational(rat(1, 3)));
        // extended-Euclid inverse checked by multiplication
        let b = &(&CycloNumber::from_int(2) - &zeta(5, 1)) - &zeta(5, 4);
        assert_eq!(&b.invert().unwrap() * &b, CycloNumber::one());
        assert!(matches!(
            CycloNumber::zero().invert(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn conjugation() {
        assert_eq!(zeta(8, 1).conjugate(), zeta(8, 7));
        assert_eq!(CycloNumber::rational(rat(3, 7)).conjugate(), CycloNumber::rational(rat(3, 7)));
        assert!((&zeta(5, 1) + &zeta(5, 4)).is_real());
        assert!(!zeta(5, 1).is_real());
    }

    #[test]
    fn rationality_extraction() {
        assert_eq!(
            (&zeta(3, 1) + &zeta(3, 2)).as_rational(),
            Some(rat_int(-1))
        );
        assert_eq!(zeta(5, 1).as_rational(), None);
        // single-term sum 1/(2 - zeta_2 - zeta_2^{-1}) = 1/4
        let den = &(&CycloNumber::from_int(2) - &zeta(2, 1)) - &zeta(2, -1);
        assert_eq!(den.invert().unwrap().as_rational(), Some(rat(1, 4)));
    }

    #[test]
    fn mixed_order_arithmetic_embeds() {
        // zeta_6^3 = -1 = zeta_2
        assert_eq!(zeta(6, 3), zeta(2, 1));
        let s = &zeta(4, 1) * &zeta(6, 1); // = zeta_12^5, lives in Q(zeta_12)
        assert_eq!(s.order(), 12);
        assert_eq!(s, zeta(12, 5));
        assert_eq!(&s * &zeta(12, 7), CycloNumber::one());
    }

    #[test]
    fn floating_approximation() {
        let (re, im) = zeta(4, 1).approx_complex(12);
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
        let (re, im) = CycloNumber::from_int(-1).approx_complex(12);
        assert_eq!((re, im), (-1.0, 0.0));
        let (re, im) = zeta(3, 1).approx_complex(12);
        assert!((re + 0.5).abs() < 1e-12);
        assert!((im - 0.75f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn symbolic_display() {
        assert_eq!(zeta(3, 2).to_string(), "z3^2");
        assert_eq!((-&zeta(8, 1)).to_string(), "-z8");
        assert_eq!(CycloNumber::rational(rat(-5, 3)).to_string(), "-5/3");
        let sqrt2 = &zeta(8, 1) + &zeta(8, 7);
        assert_eq!(sqrt2.to_string(), "z8 - z8^3");
    }

    // Rationality holds exactly when every Galois map fixes the element.
    #[test]
    fn rationality_iff_galois_fixed() {
        let samples = [
            &zeta(12, 1) + &zeta(12, 11),
            zeta(7, 3).clone(),
            &(&zeta(9, 3) + &zeta(9, 6)) + &CycloNumber::one(), // = 0 in Q
            CycloNumber::rational(rat(22, 7)),
            &zeta(8, 2) + &zeta(8, 6),
        ];
        for a in &samples {
            let n = a.order();
            let fixed = (1..n)
                .filter(|k| BigInt::from(*k).gcd(&BigInt::from(n)) == BigInt::one())
                .all(|k| a.galois(k).unwrap() == *a);
            assert_eq!(a.as_rational().is_some(), fixed, "sample {a}");
        }
    }

    fn to_cyclo(order: u64, cs: Vec<(i64, i64)>) -> CycloNumber {
        CycloNumber::reduce(order, cs.into_iter().map(|(n, d)| rat(n, d)).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn add_sub_round_trip(
            n in 1u64..=24,
            ac in proptest::collection::vec((-9i64..=9, 1i64..=6), 8),
            bc in proptest::collection::vec((-9i64..=9, 1i64..=6), 8),
        ) {
            let (a, b) = (to_cyclo(n, ac), to_cyclo(n, bc));
            let sum = &a + &b;
            prop_assert_eq!(&sum - &b, a);
        }

        #[test]
        fn multiplicative_inverse(
            n in 1u64..=24,
            ac in proptest::collection::vec((-5i64..=5, 1i64..=4), 6),
        ) {
            let a = to_cyclo(n, ac);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.invert().unwrap(), CycloNumber::one());
            }
        }

        #[test]
        fn conjugate_involution(
            n in 1u64..=24,
            ac in proptest::collection::vec((-9i64..=9, 1i64..=5), 8),
        ) {
            let a = to_cyclo(n, ac);
            prop_assert_eq!(a.conjugate().conjugate(), a);
        }
    }
}
