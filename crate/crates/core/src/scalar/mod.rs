//! Exact scalars: the field ℚ(v), its specializations `v ↦ p/q`, and
//! polynomials in the spectral variable `u` over either.

mod parse;
mod qpoly;
mod ratfunc;
mod upoly;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use ratfunc::RatFunc;
pub use upoly::{exp_neg_power_sums, poly_ratio_if_polynomial, PlusMinusSeries, UPoly};

use crate::error::Error;

/// Canonical element of ℚ(v).
pub type FieldElem = RatFunc;

/// An exact field of characteristic zero.
///
/// Equality must be representation equality; both implementations keep a
/// canonical reduced form.
pub trait Field:
    Clone
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: BigRational) -> Self;
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(k.into()))
    }

    /// Integer power; `None` for a negative power of zero.
    fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.clone() * &sq;
            }
        }
        Some(acc)
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn from_rational(q: BigRational) -> Self {
        RatFunc::from_rational(q)
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self)
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(q: BigRational) -> Self {
        q
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// The quantum parameter `v` inside a coefficient field, with the derived
/// constants used throughout the algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumParam<F> {
    v: F,
    v_inv: F,
    v2: F,
}

impl QuantumParam<RatFunc> {
    /// `v` as a transcendental over ℚ.
    pub fn generic() -> Self {
        Self::new(RatFunc::v()).expect("v is a unit with v^2 != 1")
    }
}

impl QuantumParam<BigRational> {
    /// Specialize `v` to a rational number; it must not be `0` or `±1`, so
    /// that it is not a root of unity.
    pub fn specialized(q: BigRational) -> Result<Self, Error> {
        Self::new(q)
    }
}

impl<F: Field> QuantumParam<F> {
    pub fn new(v: F) -> Result<Self, Error> {
        let v_inv = v
            .inv()
            .ok_or_else(|| Error::InvalidInput("quantum parameter must be nonzero".into()))?;
        let v2 = v.clone() * &v;
        if v2.is_one() {
            return Err(Error::InvalidInput(
                "quantum parameter must not be a root of unity".into(),
            ));
        }
        Ok(Self { v, v_inv, v2 })
    }

    pub fn v(&self) -> &F {
        &self.v
    }

    pub fn v_inv(&self) -> &F {
        &self.v_inv
    }

    /// `v²`.
    pub fn v2(&self) -> &F {
        &self.v2
    }

    pub fn v_pow(&self, k: i64) -> F {
        if k >= 0 {
            self.v.pow(k).expect("nonnegative power")
        } else {
            self.v_inv.pow(-k).expect("nonnegative power")
        }
    }

    /// The symmetric quantum integer `[s] = (v^s − v^{−s}) / (v − v^{−1})`.
    pub fn quantum_integer(&self, s: i64) -> F {
        // Sum v^{s-1} + v^{s-3} + ... + v^{1-s}, avoiding a field division.
        let m = s.abs();
        let sum = (0..m).fold(F::zero(), |acc, j| acc + self.v_pow(m - 1 - 2 * j));
        if s < 0 {
            -sum
        } else {
            sum
        }
    }

    /// Gaussian binomial `∏_{s=1}^{a} (v^{c−s+1} − v^{−c+s−1}) / (v^s − v^{−s})`.
    pub fn quantum_binomial(&self, c: i64, a: i64) -> Result<F, Error> {
        if a < 0 {
            return Err(Error::InvalidInput(format!(
                "quantum binomial needs a >= 0, got a = {a}"
            )));
        }
        let mut acc = F::one();
        for s in 1..=a {
            let num = self.v_pow(c - s + 1) - self.v_pow(-c + s - 1);
            if num.is_zero() {
                return Ok(F::zero());
            }
            let den = self.v_pow(s) - self.v_pow(-s);
            acc = acc * &num / den;
        }
        Ok(acc)
    }

    /// Bring a rational function of `v` into this field by evaluating at `v`.
    pub fn embed(&self, x: &RatFunc) -> Result<F, Error> {
        x.evaluate(&self.v).ok_or_else(|| {
            Error::Domain(format!("{x} has a pole at the chosen value of v"))
        })
    }

    /// Parse a field element written as a rational expression in `v`.
    pub fn parse(&self, s: &str) -> Result<F, Error> {
        self.embed(&s.parse::<RatFunc>()?)
    }
}
