//! Dual-precision scalars: exact big rationals as the source of truth,
//! doubles for the search loop.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Scalar mode of a matrix. Carried by the containing matrix, not per entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

/// A single value in either scalar mode.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

/// Default denominator cap for rationalizing float candidates.
pub const DEFAULT_MAX_DENOM: u64 = 1_000_000;

impl Scalar {
    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(_) => Mode::Exact,
            Scalar::Float(_) => Mode::Float,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => rat_to_f64(r),
            Scalar::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(x) => *x == 0.0,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{}", format_rational(r)),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

/// "p/q" in lowest terms, or plain "p" for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rational from a small numerator/denominator pair.
pub fn brat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    })
}

pub fn factorial(m: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=m {
        acc *= BigInt::from(i);
    }
    acc
}

/// Nearest rational to `x` with denominator at most `max_den`, found by
/// walking the continued fraction of the exact binary value of `x`.
///
/// Exact throughout: `x` is first converted to its exact dyadic rational, so
/// the result depends only on the bits of `x`. Returns `None` for non-finite
/// input.
pub fn best_rational(x: f64, max_den: u64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let max_den = max_den.max(1);
    let target = BigRational::from_float(x)?;
    let dmax = BigInt::from(max_den);
    if *target.denom() <= dmax {
        return Some(target);
    }

    // Convergent recurrence h_i = a_i h_{i-1} + h_{i-2}, same for k.
    let (mut h2, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k2, mut k1) = (BigInt::one(), BigInt::zero());
    let mut frac = target.clone();
    loop {
        let a = frac.floor().to_integer();
        let h = &a * &h1 + &h2;
        let k = &a * &k1 + &k2;
        if k > dmax {
            // Largest semiconvergent still under the cap; the best
            // approximation is that or the previous convergent.
            let a_cap = (&dmax - &k2) / &k1;
            let semi = BigRational::new(&a_cap * &h1 + &h2, &a_cap * &k1 + &k2);
            let prev = BigRational::new(h1, k1);
            let d_semi = (&target - &semi).abs();
            let d_prev = (&target - &prev).abs();
            return Some(if d_semi < d_prev { semi } else { prev });
        }
        let rem = &frac - BigRational::from_integer(a);
        h2 = std::mem::replace(&mut h1, h.clone());
        k2 = std::mem::replace(&mut k1, k.clone());
        if rem.is_zero() {
            return Some(BigRational::new(h, k));
        }
        frac = rem.recip();
    }
}
