//! The field ℚ(v) of rational functions in the quantum parameter.
//!
//! Every value is stored as `v^val · num / den` where `num` and `den` are
//! coprime, neither is divisible by `v`, and `den` is monic. That form is
//! unique, so structural equality is field equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::qpoly::QPoly;
use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
    val: i64,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: QPoly::zero(), den: QPoly::one(), val: 0 }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    /// The indeterminate `v`.
    pub fn v() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::monomial(q, 0)
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(k.into()))
    }

    /// `c · v^k`.
    pub fn monomial(c: BigRational, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: QPoly::constant(c), den: QPoly::one(), val: k }
    }

    /// Laurent polynomial from `(exponent, coefficient)` pairs.
    pub fn laurent<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (k, c)| acc + Self::monomial(c, k))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Build `v^val · num / den` from arbitrary (nonzero `den`) data and normalize.
    fn normalize(num: QPoly, den: QPoly, mut val: i64) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = (num, den);
        let k = num.valuation();
        if k > 0 {
            num = num.shift_down(k);
            val += k as i64;
        }
        let k = den.valuation();
        if k > 0 {
            den = den.shift_down(k);
            val -= k as i64;
        }
        if !den.is_one() && den.degree() != Some(0) {
            let g = QPoly::gcd(&num, &den);
            if !g.is_one() {
                num = num.exact_div(&g);
                den = den.exact_div(&g);
            }
        }
        let lc = den.lc().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den, val }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let inv_lc = self.num.lc().expect("nonzero").recip();
        Some(Self {
            num: self.den.scale(&inv_lc),
            den: self.num.scale(&inv_lc),
            val: -self.val,
        })
    }

    /// `v^k · p` as an aligned pair of ordinary polynomials with a common shift.
    fn align(a: &QPoly, va: i64, b: &QPoly, vb: i64) -> (QPoly, QPoly, i64) {
        let m = va.min(vb);
        (a.shift_up((va - m) as usize), b.shift_up((vb - m) as usize), m)
    }

    /// Evaluate at `v = x` inside any field containing ℚ.
    pub fn evaluate<F: super::Field>(&self, x: &F) -> Option<F> {
        let horner = |p: &QPoly| {
            p.coeffs()
                .iter()
                .rev()
                .fold(F::zero(), |acc, c| acc * x + &F::from_rational(c.clone()))
        };
        let den = horner(&self.den);
        if den.is_zero() {
            return None;
        }
        let xv = x.pow(self.val)?;
        Some(horner(&self.num) * &xv / den)
    }

    /// Integer-coefficient Laurent numerator and polynomial denominator with
    /// joint content removed and positive leading denominator coefficient.
    fn integral_parts(&self) -> (QPoly, QPoly) {
        let scale = BigRational::from_integer(num_integer::Integer::lcm(
            &self.num.denominator_lcm(),
            &self.den.denominator_lcm(),
        ));
        let n = self.num.scale(&scale);
        let d = self.den.scale(&scale);
        let g = num_integer::Integer::gcd(&n.content(), &d.content());
        let mut g = BigRational::from_integer(g);
        if d.lc_is_negative() {
            g = -g;
        }
        (n.scale(&g.recip()), d.scale(&g.recip()))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self;
        }
        if self.den == o.den {
            let (a, b, m) = Self::align(&self.num, self.val, &o.num, o.val);
            if self.den.is_one() {
                // Laurent + Laurent: only the v-valuation can change.
                return Self::normalize(a.add(&b), QPoly::one(), m);
            }
            return Self::normalize(a.add(&b), self.den, m);
        }
        let g = QPoly::gcd(&self.den, &o.den);
        let (d1, d2) = if g.is_one() {
            (self.den.clone(), o.den.clone())
        } else {
            (self.den.exact_div(&g), o.den.exact_div(&g))
        };
        let (a, b, m) = Self::align(&self.num.mul(&d2), self.val, &o.num.mul(&d1), o.val);
        Self::normalize(a.add(&b), self.den.mul(&d2), m)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        self + &o
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        Self { num: self.num.neg(), den: self.den, val: self.val }
    }
}

impl Sub<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o.clone())
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let val = self.val + o.val;
        if self.den.is_one() && o.den.is_one() {
            return Self { num: self.num.mul(&o.num), den: QPoly::one(), val };
        }
        let g1 = QPoly::gcd(&self.num, &o.den);
        let g2 = QPoly::gcd(&o.num, &self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num, o.den.clone())
        } else {
            (self.num.exact_div(&g1), o.den.exact_div(&g1))
        };
        let (n2, d1) = if g2.is_one() {
            (o.num.clone(), self.den)
        } else {
            (o.num.exact_div(&g2), self.den.exact_div(&g2))
        };
        // Both quotients of monic polynomials by monic gcds are monic.
        let den = d1.mul(&d2);
        debug_assert!(den.lc().is_some_and(One::is_one));
        Self { num: n1.mul(&n2), den, val }
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        self * &o
    }
}

impl Div<&RatFunc> for RatFunc {
    type Output = RatFunc;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inv().expect("division by zero in Q(v)")
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, o: RatFunc) -> RatFunc {
        self / &o
    }
}

fn fmt_laurent(p: &QPoly, shift: i64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let k = i as i64 + shift;
        let neg = c.is_negative();
        let a = c.abs();
        if neg {
            write!(f, "-")?;
        } else if !first {
            write!(f, "+")?;
        }
        first = false;
        let power = match k {
            0 => String::new(),
            1 => "v".to_string(),
            _ => format!("v^{k}"),
        };
        if power.is_empty() {
            write!(f, "{a}")?;
        } else if a.is_one() {
            write!(f, "{power}")?;
        } else {
            write!(f, "{a}*{power}")?;
        }
    }
    Ok(())
}

impl fmt::Display for RatFunc {
    /// `N` or `(N)/(D)` with integer coefficients; `N` is a Laurent polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.integral_parts();
        if d.is_one() {
            fmt_laurent(&n, self.val, f)
        } else {
            write!(f, "(")?;
            fmt_laurent(&n, self.val, f)?;
            write!(f, ")/(")?;
            fmt_laurent(&d, 0, f)?;
            write!(f, ")")
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        super::parse::parse_ratfunc(s)
    }
}

impl From<i64> for RatFunc {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

impl From<BigInt> for RatFunc {
    fn from(k: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_makes_equal_values_equal() {
        // (v^2-1)/(v-1) = v+1
        assert_eq!(r("(v^2-1)/(v-1)"), r("v+1"));
        // (v^2-1)/v = v - v^-1
        assert_eq!(r("(v^2-1)/(v)"), r("v-v^-1"));
        assert_eq!(r("(2*v)/(4*v^3)"), r("1/2*v^-2"));
    }

    #[test]
    fn display_is_integral_and_reparses() {
        for s in ["0", "1", "v+v^-1", "(1)/(2)", "(v)/(v^2+3)", "(-3*v^-2+1)/(2*v+1)"] {
            let x = r(s);
            let shown = x.to_string();
            assert_eq!(r(&shown), x, "{s} -> {shown}");
        }
        assert_eq!(r("v^-1+v").to_string(), "v+v^-1");
        assert_eq!(r("1/2").to_string(), "(1)/(2)");
        assert_eq!(r("(v^2-1)/(v+1)").to_string(), "v-1");
    }

    #[test]
    fn inverse_and_division() {
        let x = r("(v^3-2)/(v^2+v+1)");
        assert_eq!(x.clone() * &x.inv().unwrap(), RatFunc::one());
        assert!(RatFunc::zero().inv().is_none());
        assert_eq!(r("v^2-1") / r("v-1"), r("v+1"));
    }

    #[test]
    fn evaluate_at_rational() {
        let x = r("(v^2+1)/(v-3)");
        let two = BigRational::from_integer(2.into());
        let got = x.evaluate(&two).unwrap();
        assert_eq!(got, BigRational::new((-5).into(), 1.into()));
        assert!(r("1/(v-2)").evaluate(&two).is_none());
    }
}
