//! Dense univariate polynomials in `v` with rational coefficients.
//!
//! Only what the fraction field needs: ring operations, Euclidean division,
//! monic gcd and the `v`-adic valuation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct QPoly {
    /// Coefficients by ascending power; no trailing zeros.
    c: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(q: BigRational) -> Self {
        Self::from_coeffs(vec![q])
    }

    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Self { c }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&BigRational> {
        self.c.last()
    }

    /// Number of leading zero coefficients, i.e. the largest `k` with `v^k | self`.
    pub fn valuation(&self) -> usize {
        self.c.iter().take_while(|x| x.is_zero()).count()
    }

    pub fn shift_down(&self, k: usize) -> Self {
        Self { c: self.c[k.min(self.c.len())..].to_vec() }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigRational::zero(); k];
        c.extend(self.c.iter().cloned());
        Self { c }
    }

    pub fn add(&self, o: &Self) -> Self {
        let (long, short) = if self.c.len() >= o.c.len() { (self, o) } else { (o, self) };
        let mut c = long.c.clone();
        for (x, y) in c.iter_mut().zip(&short.c) {
            *x += y;
        }
        Self::from_coeffs(c)
    }

    pub fn neg(&self) -> Self {
        Self { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self { c: self.c.iter().map(|x| x * q).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.c.len() == 1 {
            return self.scale(&o.c[0]);
        }
        if self.c.len() == 1 {
            return o.scale(&self.c[0]);
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Self::from_coeffs(c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv_lc = d.c[dd].recip();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] * &inv_lc;
            if t.is_zero() {
                continue;
            }
            for (j, y) in d.c.iter().enumerate() {
                r[k + j] -= &t * y;
            }
            q[k] = t;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.monic(), b.monic());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Self::one();
            }
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.c.iter().fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()))
    }

    /// Gcd of the numerators of the coefficients (all assumed integral).
    pub fn content(&self) -> BigInt {
        self.c
            .iter()
            .fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x.numer()))
    }

    pub fn lc_is_negative(&self) -> bool {
        self.lc().is_some_and(|x| x.is_negative())
    }
}
