//! Polynomials in the spectral variable `u` over an exact field.

use std::fmt;

use super::Field;
use crate::error::Error;

/// Polynomial `Σ c_k u^k`; coefficients by ascending power, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![F::one()] }
    }

    /// `1 − a·u`.
    pub fn linear_factor(a: &F) -> Self {
        Self::new(vec![F::one(), -a.clone()])
    }

    /// `∏ (1 − a_i u)`.
    pub fn from_inverse_roots<'a, I: IntoIterator<Item = &'a F>>(roots: I) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, a| acc.mul(&Self::linear_factor(a)))
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + &o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - &o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].clone() + &(x.clone() * y);
            }
        }
        Self::new(c)
    }

    /// The polynomial `u ↦ p(s·u)`.
    pub fn rescale(&self, s: &F) -> Self {
        let mut pow = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.clone() * &pow);
            pow = pow * s;
        }
        Self::new(out)
    }

    /// Drop every power `u^k` with `k > max_deg`.
    pub fn truncate(&self, max_deg: usize) -> Self {
        Self::new(self.coeffs.iter().take(max_deg + 1).cloned().collect())
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn divrem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let inv_lc = d.coeffs[dd].inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = r[k + dd].clone() * &inv_lc;
            if t.is_zero() {
                continue;
            }
            for (j, y) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - &(t.clone() * y);
            }
            q[k] = t;
        }
        r.truncate(dd);
        Some((Self::new(q), Self::new(r)))
    }
}

impl<F: Field> fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Exact quotient `num / den` if `den` divides `num`, `None` otherwise.
///
/// Both inputs must have constant term 1 (the normalization used for
/// Drinfeld polynomials).
pub fn poly_ratio_if_polynomial<F: Field>(
    num: &UPoly<F>,
    den: &UPoly<F>,
) -> Result<Option<UPoly<F>>, Error> {
    for (name, p) in [("numerator", num), ("denominator", den)] {
        if !p.constant_term().is_one() {
            return Err(Error::InvalidInput(format!(
                "{name} must have constant term 1, got {}",
                p.constant_term()
            )));
        }
    }
    let (q, r) = num.divrem(den).expect("denominator has constant term 1");
    Ok(r.is_zero().then_some(q))
}

/// A multiset of nonzero `a_i` defining `g^±(u) = ∏ (1 − a_i^{±1} u^{±1})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlusMinusSeries<F> {
    roots: Vec<F>,
}

impl<F: Field> PlusMinusSeries<F> {
    pub fn new(roots: Vec<F>) -> Result<Self, Error> {
        if roots.iter().any(Field::is_zero) {
            return Err(Error::InvalidInput("series roots must be nonzero".into()));
        }
        Ok(Self { roots })
    }

    pub fn roots(&self) -> &[F] {
        &self.roots
    }

    /// `∏ (1 − a_i u)`.
    pub fn expand_plus(&self) -> UPoly<F> {
        UPoly::from_inverse_roots(&self.roots)
    }

    /// `∏ (1 − a_i^{-1} u^{-1})`, returned with index = power of `u^{-1}`.
    pub fn expand_minus(&self) -> UPoly<F> {
        let inv: Vec<F> = self
            .roots
            .iter()
            .map(|a| a.inv().expect("roots are nonzero"))
            .collect();
        UPoly::from_inverse_roots(&inv)
    }
}

/// Truncated `exp(−Σ_{t≥1} ζ_t u^t / t)` through `u^{zeta.len()}`.
///
/// Uses Newton's recurrence `k f_k = −Σ_{j=1}^{k} ζ_j f_{k−j}`; `zeta[t-1]` is `ζ_t`.
pub fn exp_neg_power_sums<F: Field>(zeta: &[F]) -> Vec<F> {
    let mut f = vec![F::one()];
    for k in 1..=zeta.len() {
        let s = (1..=k).fold(F::zero(), |acc, j| acc + &(zeta[j - 1].clone() * &f[k - j]));
        f.push(-s / F::from_i64(k as i64));
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{QuantumParam, RatFunc};
    use proptest::prelude::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn ratio_examples() {
        let (a, b) = (r("2*v"), r("3"));
        let pa = UPoly::linear_factor(&a);
        let pb = UPoly::linear_factor(&b);
        let prod = pa.mul(&pb);
        assert_eq!(poly_ratio_if_polynomial(&prod, &pa).unwrap(), Some(pb.clone()));
        assert_eq!(poly_ratio_if_polynomial(&pa, &pb).unwrap(), None);
        let one_plus_u = UPoly::new(vec![RatFunc::one(), RatFunc::one()]);
        let sq = one_plus_u.mul(&one_plus_u);
        assert_eq!(poly_ratio_if_polynomial(&sq, &one_plus_u).unwrap(), Some(one_plus_u.clone()));
        let bad = UPoly::new(vec![RatFunc::from_int(2), RatFunc::one()]);
        assert!(poly_ratio_if_polynomial(&bad, &one_plus_u).is_err());
        assert!(poly_ratio_if_polynomial(&one_plus_u, &bad).is_err());
    }

    #[test]
    fn series_examples() {
        let a = r("5*v^2");
        let s = PlusMinusSeries::new(vec![a.clone()]).unwrap();
        assert_eq!(s.expand_plus(), UPoly::new(vec![RatFunc::one(), -a.clone()]));
        assert_eq!(s.expand_minus(), UPoly::new(vec![RatFunc::one(), -a.inv().unwrap()]));
        let e = PlusMinusSeries::<RatFunc>::new(vec![]).unwrap();
        assert_eq!(e.expand_plus(), UPoly::one());
        assert_eq!(e.expand_minus(), UPoly::one());
        let d = PlusMinusSeries::new(vec![a.clone(), a.clone()]).unwrap();
        let two_a = RatFunc::from_int(2) * &a;
        assert_eq!(
            d.expand_plus(),
            UPoly::new(vec![RatFunc::one(), -two_a, a.clone() * &a])
        );
        assert!(PlusMinusSeries::new(vec![RatFunc::zero()]).is_err());
    }

    #[test]
    fn exp_of_power_sums_is_elementary_symmetric() {
        // exp(-Σ p_t(a) u^t / t) = ∏ (1 - a_i u)
        let roots = [r("2*v"), r("3*v^-1"), r("5")];
        let zeta: Vec<RatFunc> = (1..=4)
            .map(|t| roots.iter().fold(RatFunc::zero(), |acc, a| acc + a.pow(t).unwrap()))
            .collect();
        let series = exp_neg_power_sums(&zeta);
        let prod = UPoly::from_inverse_roots(&roots);
        for k in 0..=4 {
            assert_eq!(series[k], prod.coeff(k), "k = {k}");
        }
    }

    #[test]
    fn product_of_q_series_matches_central_exponential() {
        // With θ_t = −(1/[t]) Σ_i g_{i,t} and z_t = t v^t (Σ_i g_{i,t}) / [t]
        // (the image of z_t^+), the product over i of
        // exp(−Σ_t g_{i,t} (v u)^t / [t]) equals exp(−Σ_t z_t u^t / t).
        // Checked on arbitrary values of the g_{i,t}.
        let q = QuantumParam::generic();
        let tmax = 3usize;
        let g = [
            [r("1"), r("v+2"), r("3*v^-1")],
            [r("-2*v"), r("1/3"), r("v^2")],
            [r("7"), r("-v^-2"), r("(1)/(v+1)")],
        ];
        let series_of = |c: &[RatFunc]| {
            // exp(−Σ c_t u^t) through Newton: treat c_t = ζ_t / t.
            let zeta: Vec<RatFunc> = c
                .iter()
                .enumerate()
                .map(|(i, x)| x.clone() * &RatFunc::from_int(i as i64 + 1))
                .collect();
            exp_neg_power_sums(&zeta)
        };
        let mut lhs = UPoly::one();
        for gi in &g {
            let c: Vec<RatFunc> = (1..=tmax)
                .map(|t| {
                    gi[t - 1].clone() * &q.v_pow(t as i64) / q.quantum_integer(t as i64)
                })
                .collect();
            lhs = lhs.mul(&UPoly::new(series_of(&c))).truncate(tmax);
        }
        let zeta: Vec<RatFunc> = (1..=tmax)
            .map(|t| {
                let theta = -(g.iter().fold(RatFunc::zero(), |acc, gi| acc + &gi[t - 1])
                    / q.quantum_integer(t as i64));
                // z_t^+ ↦ −t v^t θ_t
                -(RatFunc::from_int(t as i64) * &q.v_pow(t as i64) * &theta)
            })
            .collect();
        let rhs = exp_neg_power_sums(&zeta);
        for k in 0..=tmax {
            assert_eq!(lhs.coeff(k), rhs[k], "k = {k}");
        }
    }

    proptest! {
        #[test]
        fn expand_plus_is_multiplicative(
            a in prop::collection::vec((1i64..6, -2i64..=2), 0..4),
            b in prop::collection::vec((1i64..6, -2i64..=2), 0..4),
        ) {
            let q = QuantumParam::generic();
            let mk = |xs: &[(i64, i64)]| -> Vec<RatFunc> {
                xs.iter().map(|&(c, k)| RatFunc::from_int(c) * &q.v_pow(k)).collect()
            };
            let (ra, rb) = (mk(&a), mk(&b));
            let mut both = ra.clone();
            both.extend(rb.iter().cloned());
            let sa = PlusMinusSeries::new(ra).unwrap();
            let sb = PlusMinusSeries::new(rb).unwrap();
            let sab = PlusMinusSeries::new(both).unwrap();
            prop_assert_eq!(sab.expand_plus(), sa.expand_plus().mul(&sb.expand_plus()));
            prop_assert_eq!(sab.expand_minus(), sa.expand_minus().mul(&sb.expand_minus()));
        }
    }
}
