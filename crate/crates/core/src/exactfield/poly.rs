//! Dense univariate polynomial helpers over `BigInt` and `BigRational`.
//!
//! Coefficients are stored in ascending degree order. These are internal
//! building blocks for cyclotomic fields; the zero polynomial is the empty
//! vector and the last coefficient of a nonzero polynomial is nonzero.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn int_trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    int_trim(out)
}

/// Exact division of integer polynomials. Returns `None` when the division
/// leaves a remainder or the quotient is not integral.
pub fn int_div_exact(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let den = int_trim(den.to_vec());
    if den.is_empty() {
        return None;
    }
    let mut rem = int_trim(num.to_vec());
    if rem.is_empty() {
        return Some(Vec::new());
    }
    if rem.len() < den.len() {
        return None;
    }
    let lead = den.last().unwrap().clone();
    let mut quot = vec![BigInt::zero(); rem.len() - den.len() + 1];
    while rem.len() >= den.len() {
        let r_lead = rem.last().unwrap().clone();
        if (&r_lead % &lead) != BigInt::zero() {
            return None;
        }
        let c = &r_lead / &lead;
        let shift = rem.len() - den.len();
        quot[shift] = c.clone();
        for (i, d) in den.iter().enumerate() {
            let v = &rem[shift + i] - &c * d;
            rem[shift + i] = v;
        }
        rem = int_trim(rem);
        if rem.is_empty() {
            break;
        }
        if rem.len() < den.len() {
            return None;
        }
    }
    if rem.is_empty() {
        Some(int_trim(quot))
    } else {
        None
    }
}

/// `x^n - 1` as an integer polynomial.
pub fn x_pow_minus_one(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = -BigInt::one();
    p[n] = BigInt::one();
    p
}

pub fn rat_trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    rat_trim(out)
}

/// Remainder of `a` modulo a monic polynomial `m`.
pub fn rat_rem_monic(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    debug_assert!(m.last().map_or(false, |c| c.is_one()));
    let mut rem = rat_trim(a.to_vec());
    while rem.len() >= m.len() {
        let c = rem.last().unwrap().clone();
        let shift = rem.len() - m.len();
        for (i, d) in m.iter().enumerate() {
            let v = &rem[shift + i] - &c * d;
            rem[shift + i] = v;
        }
        rem = rat_trim(rem);
    }
    rem
}

fn rat_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = rat_trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let lead = b.last().unwrap().clone();
    let mut rem = rat_trim(a.to_vec());
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(b.len()) + 1];
    while rem.len() >= b.len() {
        let c = rem.last().unwrap() / &lead;
        let shift = rem.len() - b.len();
        quot[shift] = c.clone();
        for (i, d) in b.iter().enumerate() {
            let v = &rem[shift + i] - &c * d;
            rem[shift + i] = v;
        }
        rem = rat_trim(rem);
    }
    (rat_trim(quot), rem)
}

/// Extended Euclid over `Q[x]`: returns `(g, u, v)` with `u*a + v*b = g`,
/// `g` monic (or zero).
pub fn rat_ext_gcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = rat_trim(a.to_vec());
    let mut r1 = rat_trim(b.to_vec());
    let mut u0 = vec![BigRational::one()];
    let mut u1: Vec<BigRational> = Vec::new();
    let mut v0: Vec<BigRational> = Vec::new();
    let mut v1 = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = rat_divmod(&r0, &r1);
        let qu = rat_mul(&q, &u1);
        let qv = rat_mul(&q, &v1);
        let nu = rat_sub(&u0, &qu);
        let nv = rat_sub(&v0, &qv);
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = nu;
        v0 = v1;
        v1 = nv;
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = BigRational::one() / lead;
        for c in r0.iter_mut().chain(u0.iter_mut()).chain(v0.iter_mut()) {
            *c *= &inv;
        }
    }
    (r0, u0, v0)
}

pub fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    let zero = BigRational::zero();
    for i in 0..len {
        let ca = a.get(i).unwrap_or(&zero);
        let cb = b.get(i).unwrap_or(&zero);
        out.push(ca - cb);
    }
    rat_trim(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn ip(v: &[i64]) -> Vec<BigInt> {
        int_trim(v.iter().map(|&c| BigInt::from_i64(c).unwrap()).collect())
    }

    fn rp(v: &[i64]) -> Vec<BigRational> {
        rat_trim(
            v.iter()
                .map(|&c| BigRational::from_i64(c).unwrap())
                .collect(),
        )
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = ip(&[-1, 0, 0, 0, 0, 0, 1]); // x^6 - 1
        let b = ip(&[-1, 1]); // x - 1
        let q = int_div_exact(&a, &b).unwrap();
        assert_eq!(int_mul(&q, &b), a);
        assert_eq!(int_div_exact(&ip(&[1, 1]), &ip(&[1, 0, 1])), None);
    }

    #[test]
    fn ext_gcd_inverts_mod_monic() {
        // invert x + 2 modulo x^2 + 1
        let a = rp(&[2, 1]);
        let m = rp(&[1, 0, 1]);
        let (g, u, _) = rat_ext_gcd(&a, &m);
        assert_eq!(g, rp(&[1]));
        let prod = rat_rem_monic(&rat_mul(&u, &a), &m);
        assert_eq!(prod, rp(&[1]));
    }
}
