//! Exact arithmetic in the rationals and in cyclotomic fields `Q(zeta_n)`.
//!
//! A [`CycloField`] is `Q[x]` modulo the n-th cyclotomic polynomial; a
//! [`Scalar`] is an element of such a field, held as a dense coefficient
//! vector of length `phi(n)`. Everything is exact: no floating point is
//! involved anywhere, so equality of scalars is decidable and meaningful.
//!
//! The conventions used by the rest of the crate live here too: for a level
//! `r` the ambient field is `Q(zeta_{8r})` with `epsilon = zeta^2`
//! (a primitive 4r-th root of unity), `q = zeta^4`, `q^{1/2} = epsilon`, and
//! `sqrt(2) = zeta^r + zeta^{-r}`.

mod poly;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use num_bigint::BigInt as Integer;
pub use num_rational::BigRational as Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("scalars live in different fields (conductors {0} and {1})")]
    FieldMismatch(u64, u64),
    #[error("conductor {0} is not divisible by 8")]
    ConductorNotDivisibleBy8(u64),
    #[error("q^2 = 1, quantum integers are undefined")]
    DegenerateQ,
}

/// Euler's totient, by trial-division factorization. Desk-scale inputs only.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            ds.push(d);
        }
    }
    ds
}

/// The n-th cyclotomic polynomial as an integer coefficient vector
/// (ascending degree, monic, degree `phi(n)`).
///
/// Computed by the recursive identity `x^n - 1 = prod_{d | n} Phi_d(x)`:
/// divide `x^n - 1` exactly by the product of `Phi_d` over proper divisors.
pub fn cyclotomic_polynomial(n: u64) -> Result<Vec<BigInt>, FieldError> {
    if n == 0 {
        return Err(FieldError::ZeroConductor);
    }
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Ok(p.clone());
    }
    let mut acc = vec![BigInt::one()];
    for d in divisors(n) {
        if d < n {
            let phi_d = cyclotomic_polynomial(d)?;
            acc = poly::int_mul(&acc, &phi_d);
        }
    }
    let num = poly::x_pow_minus_one(n as usize);
    let p = poly::int_div_exact(&num, &acc)
        .expect("x^n - 1 is divisible by the product of proper cyclotomic factors");
    cache.lock().unwrap().insert(n, p.clone());
    Ok(p)
}

/// The cyclotomic field `Q(zeta_n)`, i.e. `Q[x]` modulo `Phi_n(x)`.
///
/// Fields are shared behind `Arc`; two fields are interchangeable exactly
/// when their conductors agree.
#[derive(Debug)]
pub struct CycloField {
    conductor: u64,
    /// `Phi_n` as a monic rational polynomial, ascending degree.
    modulus: Vec<BigRational>,
    degree: usize,
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}
impl Eq for CycloField {}

impl CycloField {
    pub fn new(conductor: u64) -> Result<Arc<Self>, FieldError> {
        let phi = cyclotomic_polynomial(conductor)?;
        let modulus: Vec<BigRational> = phi
            .into_iter()
            .map(|c| BigRational::from_integer(c))
            .collect();
        let degree = modulus.len() - 1;
        debug_assert_eq!(degree as u64, euler_phi(conductor));
        Ok(Arc::new(CycloField {
            conductor,
            modulus,
            degree,
        }))
    }

    /// The rationals, as the degenerate case `Q(zeta_1)`.
    pub fn rationals() -> Arc<Self> {
        Self::new(1).expect("conductor 1 is valid")
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Degree `phi(n)` of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The minimal polynomial `Phi_n` with integer coefficients.
    pub fn minimal_polynomial(&self) -> Vec<BigInt> {
        self.modulus.iter().map(|c| c.to_integer()).collect()
    }

    fn reduce(&self, coeffs: Vec<BigRational>) -> Vec<BigRational> {
        let mut r = poly::rat_rem_monic(&coeffs, &self.modulus);
        r.resize(self.degree, BigRational::zero());
        r
    }
}

/// An element of a cyclotomic field: a polynomial in `zeta` of degree
/// `< phi(n)`, always kept reduced modulo `Phi_n`.
#[derive(Clone)]
pub struct Scalar {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}
impl Eq for Scalar {}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Scalar {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        Scalar {
            field: field.clone(),
            coeffs: vec![BigRational::zero(); field.degree],
        }
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: &Arc<CycloField>, r: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); field.degree];
        // conductor 1 has degree 1 with modulus x - 1, so the constant slot
        // exists for every conductor
        coeffs[0] = r;
        let coeffs = field.reduce(coeffs);
        Scalar {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_integer(field: &Arc<CycloField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(field: &Arc<CycloField>, num: i64, den: i64) -> Self {
        Self::from_rational(
            field,
            BigRational::new(BigInt::from(num), BigInt::from(den)),
        )
    }

    /// The root of unity `zeta` itself (equals 1 when the conductor is 1).
    pub fn zeta(field: &Arc<CycloField>) -> Self {
        Self::zeta_pow(field, 1)
    }

    /// `zeta^k`, with negative exponents taken modulo the conductor.
    pub fn zeta_pow(field: &Arc<CycloField>, k: i64) -> Self {
        let n = field.conductor as i64;
        let k = k.rem_euclid(n) as usize;
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        let coeffs = field.reduce(coeffs);
        Scalar {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True when the scalar lies in the prime field `Q`.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_field(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.field.conductor != other.field.conductor {
            return Err(FieldError::FieldMismatch(
                self.field.conductor,
                other.field.conductor,
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.checked_add(other).expect("field mismatch in add")
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check_field(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Scalar {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.checked_sub(other).expect("field mismatch in sub")
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check_field(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Scalar {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.checked_mul(other).expect("field mismatch in mul")
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check_field(other)?;
        // rational factors avoid the full polynomial product; structure
        // constants are overwhelmingly 0 and +-1 so this is the hot path
        if let Some(r) = self.as_rational() {
            if r.is_zero() {
                return Ok(Scalar::zero(&self.field));
            }
            if r.is_one() {
                return Ok(other.clone());
            }
            return Ok(Scalar {
                field: self.field.clone(),
                coeffs: other.coeffs.iter().map(|c| c * r).collect(),
            });
        }
        if let Some(r) = other.as_rational() {
            if r.is_zero() {
                return Ok(Scalar::zero(&self.field));
            }
            if r.is_one() {
                return Ok(self.clone());
            }
            return Ok(Scalar {
                field: self.field.clone(),
                coeffs: self.coeffs.iter().map(|c| c * r).collect(),
            });
        }
        let prod = poly::rat_mul(&self.coeffs, &other.coeffs);
        Ok(Scalar {
            field: self.field.clone(),
            coeffs: self.field.reduce(prod),
        })
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Scalar::from_rational(
                &self.field,
                BigRational::one() / r.clone(),
            ));
        }
        let (g, u, _) = poly::rat_ext_gcd(&self.coeffs, &self.field.modulus);
        // Phi_n is irreducible over Q, so any nonzero element is a unit
        debug_assert!(g.len() == 1 && g[0].is_one());
        Ok(Scalar {
            field: self.field.clone(),
            coeffs: self.field.reduce(u),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check_field(other)?;
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: i64) -> Result<Scalar, FieldError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Scalar::one(&self.field);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        Ok(acc)
    }
}

/// Binary operation selector for [`scalar_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked scalar arithmetic: rejects field mismatches and division by zero.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, FieldError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => {
            a.check_field(b)?;
            a.div(b)
        }
    }
}

/// The quantum integer `[[n]] = (q^n - q^{-n}) / (q - q^{-1})`.
///
/// Rejects `q^2 = 1`, where the denominator vanishes.
pub fn quantum_integer(n: i64, q: &Scalar) -> Result<Scalar, FieldError> {
    let q_inv = q.inv()?;
    let den = q.sub(&q_inv);
    if den.is_zero() {
        return Err(FieldError::DegenerateQ);
    }
    let num = q.pow(n)?.sub(&q.pow(-n)?);
    num.div(&den)
}

/// A square root of 2 inside `Q(zeta_{8r})`: `zeta^r + zeta^{-r}`.
///
/// The sign convention is fixed by this formula; both roots square to 2.
pub fn sqrt_two(field: &Arc<CycloField>) -> Result<Scalar, FieldError> {
    let n = field.conductor();
    if n % 8 != 0 {
        return Err(FieldError::ConductorNotDivisibleBy8(n));
    }
    let r = (n / 8) as i64;
    Ok(Scalar::zeta_pow(field, r).add(&Scalar::zeta_pow(field, -r)))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "z^{k}")?;
            } else {
                write!(f, "{mag}*z^{k}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    conductor: u64,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| [c.numer().to_string(), c.denom().to_string()])
            .collect();
        ScalarRepr {
            conductor: self.field.conductor,
            coeffs,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        let field = CycloField::new(repr.conductor).map_err(D::Error::custom)?;
        if repr.coeffs.len() != field.degree() {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for conductor {}, got {}",
                field.degree(),
                repr.conductor,
                repr.coeffs.len()
            )));
        }
        let mut coeffs = Vec::with_capacity(repr.coeffs.len());
        for [n, d] in &repr.coeffs {
            let num: BigInt = n.parse().map_err(D::Error::custom)?;
            let den: BigInt = d.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.push(BigRational::new(num, den));
        }
        Ok(Scalar { field, coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fld(n: u64) -> Arc<CycloField> {
        CycloField::new(n).unwrap()
    }

    fn int_poly(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn cyclotomic_small_cases() {
        // n = 1 -> x - 1 by definition
        assert_eq!(cyclotomic_polynomial(1).unwrap(), int_poly(&[-1, 1]));
        // oracle for n = 8: divide x^8 - 1 by Phi_1 Phi_2 Phi_4 computed recursively
        assert_eq!(cyclotomic_polynomial(8).unwrap(), int_poly(&[1, 0, 0, 0, 1]));
        assert_eq!(
            cyclotomic_polynomial(12).unwrap(),
            int_poly(&[1, 0, -1, 0, 1])
        );
        assert!(cyclotomic_polynomial(0).is_err());
    }

    #[test]
    fn cyclotomic_product_reconstruction() {
        for n in 1..=64u64 {
            let mut acc = vec![BigInt::one()];
            for d in 1..=n {
                if n % d == 0 {
                    acc = poly::int_mul(&acc, &cyclotomic_polynomial(d).unwrap());
                }
            }
            assert_eq!(acc, poly::x_pow_minus_one(n as usize), "n = {n}");
        }
    }

    #[test]
    fn arithmetic_in_small_fields() {
        let f4 = fld(4);
        let z = Scalar::zeta(&f4);
        assert_eq!(z.mul(&z), Scalar::from_integer(&f4, -1));

        let f8 = fld(8);
        let z8 = Scalar::zeta(&f8);
        let inv = z8.inv().unwrap();
        assert_eq!(inv, Scalar::zeta_pow(&f8, 3).neg());
        assert!(z8.mul(&inv).is_one());

        let one = Scalar::one(&f8);
        let a = one.add(&z8);
        let b = one.sub(&z8);
        assert_eq!(a.add(&b), Scalar::from_integer(&f8, 2));
    }

    #[test]
    fn field_mismatch_rejected() {
        let a = Scalar::one(&fld(4));
        let b = Scalar::one(&fld(8));
        assert!(matches!(
            scalar_arith(&a, &b, ArithOp::Add),
            Err(FieldError::FieldMismatch(4, 8))
        ));
        assert!(matches!(
            scalar_arith(&a, &Scalar::zero(&fld(4)), ArithOp::Div),
            Err(FieldError::DivisionByZero)
        ));
    }

    #[test]
    fn quantum_integers() {
        let f = fld(12);
        let q = Scalar::zeta_pow(&f, 2); // primitive 6th root
        assert!(quantum_integer(0, &q).unwrap().is_zero());
        assert!(quantum_integer(1, &q).unwrap().is_one());
        // oracle: direct polynomial arithmetic mod Phi_12
        let two = quantum_integer(2, &q).unwrap();
        assert_eq!(two, q.add(&q.inv().unwrap()));
        let diff = q.mul(&q).sub(&q.pow(-2).unwrap());
        assert_eq!(two.mul(&q.sub(&q.inv().unwrap())), diff);
        // [-n] = -[n]
        let m3 = quantum_integer(-3, &q).unwrap();
        assert_eq!(m3, quantum_integer(3, &q).unwrap().neg());

        let one = Scalar::one(&f);
        assert!(matches!(
            quantum_integer(2, &one),
            Err(FieldError::DegenerateQ)
        ));
    }

    #[test]
    fn sqrt_two_squares_to_two() {
        for r in 1..=4u64 {
            let f = fld(8 * r);
            let s = sqrt_two(&f).unwrap();
            assert_eq!(s.mul(&s), Scalar::from_integer(&f, 2), "r = {r}");
        }
        assert!(sqrt_two(&fld(12)).is_err());
    }

    #[test]
    fn quantum_integer_vanishing_at_level() {
        // q = zeta_{8r}^4 is a primitive 2r-th root: [[n]] != 0 below r, [[r]] = 0
        for r in [3u64, 4, 5] {
            let f = fld(8 * r);
            let q = Scalar::zeta_pow(&f, 4);
            for n in 1..r {
                assert!(!quantum_integer(n as i64, &q).unwrap().is_zero());
            }
            assert!(quantum_integer(r as i64, &q).unwrap().is_zero());
        }
    }

    #[test]
    fn serde_round_trip() {
        let f = fld(8);
        let s = Scalar::zeta(&f)
            .add(&Scalar::ratio(&f, -7, 3))
            .mul(&Scalar::zeta_pow(&f, 3));
        let json = serde_json::to_string(&s).unwrap();
        let back: Scalar = serde_json::from_str(&json).unwrap();
        assert_eq!(s, back);
    }
}
