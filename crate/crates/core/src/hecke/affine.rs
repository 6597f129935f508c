use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::FiniteHeckeElem;
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::linalg::{add_term, axpy, SparseVec};
use crate::scalar::{Field, QuantumParam};

/// Exponent vector `λ` of `X^λ = X_1^{λ_1} ⋯ X_r^{λ_r}`.
pub type XExp = Vec<i64>;

/// An element `Σ c · T_w X^λ` of the extended affine Hecke algebra `H_Δ(r)`,
/// always in normal form with the `X` factors on the right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineHeckeElem<F> {
    r: usize,
    terms: SparseVec<(Permutation, XExp), F>,
}

/// `X^μ T_k = T_k X^{s_k μ} + Σ c X^ν`; returns `(s_k μ, [(ν, c)])`.
///
/// With `a = μ_k`, `b = μ_{k+1}` and `t = X_k X_{k+1}⁻¹` the correction is
/// `(v²−1) X^μ|_{a,b→0} X_{k+1}^{a+b} (t^a − t^b)/(1 − t)`.
pub fn commute_x_past_t<F: Field>(mu: &[i64], k: usize, q: &QuantumParam<F>) -> (XExp, Vec<(XExp, F)>) {
    let (a, b) = (mu[k - 1], mu[k]);
    let mut swapped = mu.to_vec();
    swapped.swap(k - 1, k);
    let c = q.v2().clone() - F::one();
    let (range, coeff) = match a.cmp(&b) {
        std::cmp::Ordering::Equal => return (swapped, Vec::new()),
        std::cmp::Ordering::Less => (a..b, c),
        std::cmp::Ordering::Greater => (b..a, -c),
    };
    let corr = range
        .map(|m| {
            let mut nu = mu.to_vec();
            nu[k - 1] = m;
            nu[k] = a + b - m;
            (nu, coeff.clone())
        })
        .collect();
    (swapped, corr)
}

impl<F: Field> AffineHeckeElem<F> {
    pub fn zero(r: usize) -> Self {
        Self { r, terms: BTreeMap::new() }
    }

    pub fn one(r: usize) -> Self {
        Self::monomial(Permutation::identity(r), vec![0; r])
    }

    /// `T_w X^λ`.
    pub fn monomial(w: Permutation, lambda: XExp) -> Self {
        assert_eq!(w.rank(), lambda.len());
        Self { r: w.rank(), terms: BTreeMap::from([((w, lambda), F::one())]) }
    }

    pub fn x_power(lambda: XExp) -> Self {
        Self::monomial(Permutation::identity(lambda.len()), lambda)
    }

    /// `X_j^e`.
    pub fn x(j: usize, e: i64, r: usize) -> Self {
        let mut lambda = vec![0; r];
        lambda[j - 1] = e;
        Self::x_power(lambda)
    }

    /// `T_i`.
    pub fn t(i: usize, r: usize) -> Self {
        Self::monomial(Permutation::simple(i, r), vec![0; r])
    }

    pub fn from_finite(h: &FiniteHeckeElem<F>) -> Self {
        let r = h.rank();
        let terms = h
            .terms()
            .iter()
            .map(|(w, c)| ((w.clone(), vec![0; r]), c.clone()))
            .collect();
        Self { r, terms }
    }

    /// The finite part if no `X` occurs.
    pub fn to_finite(&self) -> Option<FiniteHeckeElem<F>> {
        self.terms
            .keys()
            .all(|(_, l)| l.iter().all(|&e| e == 0))
            .then(|| {
                FiniteHeckeElem::from_terms(
                    self.r,
                    self.terms.iter().map(|((w, _), c)| (w.clone(), c.clone())).collect(),
                )
            })
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> &SparseVec<(Permutation, XExp), F> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        axpy(&mut terms, &F::one(), &other.terms);
        Self { r: self.r, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        axpy(&mut terms, &-F::one(), &other.terms);
        Self { r: self.r, terms }
    }

    pub fn scale(&self, c: &F) -> Self {
        Self { r: self.r, terms: crate::linalg::scale(&self.terms, c) }
    }

    /// `self · T_k`.
    pub fn right_mul_generator(&self, k: usize, q: &QuantumParam<F>) -> Self {
        assert!(k >= 1 && k < self.r, "T_{k} not in H_Δ({})", self.r);
        let mut out = SparseVec::new();
        let v2m1 = q.v2().clone() - F::one();
        for ((w, lambda), c) in &self.terms {
            let (swapped, corr) = commute_x_past_t(lambda, k, q);
            let sw = w.right_mul_simple(k);
            if w.has_right_descent(k) {
                add_term(&mut out, (w.clone(), swapped.clone()), c.clone() * &v2m1);
                add_term(&mut out, (sw, swapped), c.clone() * q.v2());
            } else {
                add_term(&mut out, (sw, swapped), c.clone());
            }
            for (nu, d) in corr {
                add_term(&mut out, (w.clone(), nu), d * c);
            }
        }
        Self { r: self.r, terms: out }
    }

    /// `self · X^μ`.
    pub fn right_mul_x(&self, mu: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|((w, l), c)| {
                let l = l.iter().zip(mu).map(|(a, b)| a + b).collect();
                ((w.clone(), l), c.clone())
            })
            .collect();
        Self { r: self.r, terms }
    }

    /// `self · T_u` along a reduced word of `u`.
    pub fn right_mul_t(&self, u: &Permutation, q: &QuantumParam<F>) -> Self {
        u.reduced_word()
            .into_iter()
            .fold(self.clone(), |acc, i| acc.right_mul_generator(i, q))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parse the textual format `(c) * T[w] * X[λ] + …`, with coefficients in
    /// the field of `q`.
    pub fn parse(s: &str, q: &QuantumParam<F>) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Err(Error::Parse("the zero element needs an explicit rank".into()));
        }
        let mut r = None;
        let mut terms = SparseVec::new();
        for summand in split_top_level(s)? {
            let (coeff, w, lambda) = parse_summand(summand, q)?;
            if *r.get_or_insert(w.rank()) != w.rank() || lambda.len() != w.rank() {
                return Err(Error::Parse(format!("inconsistent rank in `{summand}`")));
            }
            add_term(&mut terms, (w, lambda), coeff);
        }
        Ok(Self { r: r.expect("at least one summand"), terms })
    }
}

fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b'+' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced brackets in `{s}`")));
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in `{s}`")));
    }
    parts.push(s[start..].trim());
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse(format!("empty summand in `{s}`")));
    }
    Ok(parts)
}

fn parse_summand<F: Field>(s: &str, q: &QuantumParam<F>) -> Result<(F, Permutation, XExp)> {
    let err = || Error::Parse(format!("expected `(c) * T[w] * X[λ]`, got `{s}`"));
    let t_at = s.rfind("T[").ok_or_else(err)?;
    let head = s[..t_at].trim_end();
    let coeff_text = head.strip_suffix('*').ok_or_else(err)?.trim();
    let rest = &s[t_at + 2..];
    let close = rest.find(']').ok_or_else(err)?;
    let window: Vec<usize> = parse_list(&rest[..close]).map_err(|_| err())?;
    let w = Permutation::from_window(&window).ok_or_else(err)?;
    let rest = rest[close + 1..].trim_start();
    let rest = rest.strip_prefix('*').ok_or_else(err)?.trim_start();
    let rest = rest.strip_prefix("X[").ok_or_else(err)?;
    let lam_text = rest.strip_suffix(']').ok_or_else(err)?;
    let lambda: XExp = parse_list(lam_text).map_err(|_| err())?;
    Ok((q.parse(coeff_text)?, w, lambda))
}

fn parse_list<T: FromStr>(s: &str) -> std::result::Result<Vec<T>, T::Err> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse()).collect()
}

impl<F: Field> fmt::Display for AffineHeckeElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let s = self
            .terms
            .iter()
            .map(|((w, l), c)| format!("({c}) * T{w} * X[{}]", l.iter().join(",")))
            .join(" + ");
        write!(f, "{s}")
    }
}

/// Product in `H_Δ(r)`: `(T_w X^λ)(T_u X^μ)` is computed by pushing `X^λ`
/// through a reduced word of `u`, then appending `X^μ`.
pub fn affine_mul<F: Field>(
    h1: &AffineHeckeElem<F>,
    h2: &AffineHeckeElem<F>,
    q: &QuantumParam<F>,
) -> AffineHeckeElem<F> {
    assert_eq!(h1.r, h2.r);
    let mut out = SparseVec::new();
    for ((u, mu), c) in &h2.terms {
        let prod = h1.right_mul_t(u, q).right_mul_x(mu);
        axpy(&mut out, c, &prod.terms);
    }
    AffineHeckeElem { r: h1.r, terms: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RatFunc;
    use proptest::prelude::*;

    type A = AffineHeckeElem<RatFunc>;

    fn q() -> QuantumParam<RatFunc> {
        QuantumParam::generic()
    }

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    /// `X^μ T_k` by peeling one `X_j^{±1}` at a time off the right of `X^μ`
    /// and applying the single-variable rules
    /// `X_{k+1} T = T X_k + (v²−1) X_{k+1}`, `X_k T = T X_{k+1} − (v²−1) X_{k+1}`,
    /// `X_{k+1}⁻¹ T = T X_k⁻¹ − (v²−1) X_k⁻¹`, `X_k⁻¹ T = T X_{k+1}⁻¹ + (v²−1) X_k⁻¹`.
    fn iterative_x_t(mu: &[i64], k: usize, q: &QuantumParam<RatFunc>) -> A {
        let rank = mu.len();
        let Some(j) = (0..rank).rev().find(|&j| mu[j] != 0) else {
            return A::t(k, rank);
        };
        let e = mu[j].signum();
        let mut rest = mu.to_vec();
        rest[j] -= e;
        let c = q.v2().clone() - RatFunc::one();
        let pos = j + 1;
        // X_pos^e T_k = T_k X_{pos'}^e + d X_m^e
        let (swapped, corr) = if pos == k {
            if e > 0 { (k + 1, Some((-c, k + 1))) } else { (k + 1, Some((c, k))) }
        } else if pos == k + 1 {
            if e > 0 { (k, Some((c, k + 1))) } else { (k, Some((-c, k))) }
        } else {
            (pos, None)
        };
        // X^rest (T X_swapped^e) + d X^rest X_m^e
        let mut out = affine_mul(&iterative_x_t(&rest, k, q), &A::x(swapped, e, rank), q);
        if let Some((d, m)) = corr {
            let mut nu = rest.clone();
            nu[m - 1] += e;
            out = out.add(&A::x_power(nu).scale(&d));
        }
        out
    }

    #[test]
    fn spec_examples() {
        let q = q();
        let lhs = affine_mul(&A::x(2, 1, 2), &A::t(1, 2), &q);
        let rhs = affine_mul(&A::t(1, 2), &A::x(1, 1, 2), &q).add(&A::x(2, 1, 2).scale(&r("v^2-1")));
        assert_eq!(lhs, rhs);
        let sym = A::x_power(vec![1, 1]);
        assert_eq!(affine_mul(&sym, &A::t(1, 2), &q), affine_mul(&A::t(1, 2), &sym, &q));
        let x3 = A::x(3, 1, 3);
        assert_eq!(affine_mul(&x3, &A::t(1, 3), &q), affine_mul(&A::t(1, 3), &x3, &q));
    }

    #[test]
    fn defining_relation_t_x_t() {
        let q = q();
        for n in 2..=3 {
            for i in 1..n {
                let t = A::t(i, n);
                let lhs = affine_mul(&affine_mul(&t, &A::x(i, 1, n), &q), &t, &q);
                assert_eq!(lhs, A::x(i + 1, 1, n).scale(q.v2()));
            }
        }
    }

    #[test]
    fn closed_form_matches_iterated_rule() {
        let q = q();
        for mu in (0..3).map(|_| -2i64..=2).multi_cartesian_product() {
            for k in 1..3 {
                let (swapped, corr) = commute_x_past_t(&mu, k, &q);
                let mut closed = A::monomial(Permutation::simple(k, 3), swapped);
                for (nu, c) in corr {
                    closed = closed.add(&A::x_power(nu).scale(&c));
                }
                assert_eq!(closed, iterative_x_t(&mu, k, &q), "mu={mu:?} k={k}");
            }
        }
    }

    #[test]
    fn x_commute_and_inverse() {
        let q = q();
        let a = A::x(1, 1, 3);
        let b = A::x(2, -1, 3);
        assert_eq!(affine_mul(&a, &b, &q), affine_mul(&b, &a, &q));
        assert_eq!(affine_mul(&A::x(2, 1, 3), &A::x(2, -1, 3), &q), A::one(3));
    }

    #[test]
    fn agrees_with_finite_mul() {
        let q = q();
        for u in Permutation::all(3) {
            for w in Permutation::all(3) {
                let (hu, hw) = (FiniteHeckeElem::basis(u.clone()), FiniteHeckeElem::basis(w.clone()));
                let fin = super::super::finite_mul(&hu, &hw, &q);
                let aff = affine_mul(&A::from_finite(&hu), &A::from_finite(&hw), &q);
                assert_eq!(aff.to_finite().unwrap(), fin);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let q = q();
        let h = affine_mul(&A::x_power(vec![2, -1, 0]), &A::t(1, 3), &q)
            .add(&A::t(2, 3).scale(&r("(v^2+1)/(v-2)")));
        let text = h.to_text();
        assert_eq!(A::parse(&text, &q).unwrap(), h);
        assert_eq!(
            A::parse("(v) * T[2,1] * X[0,1] + (1) * T[1,2] * X[0,0]", &q).unwrap(),
            A::t(1, 2).right_mul_x(&[0, 1]).scale(&r("v")).add(&A::one(2))
        );
        assert!(A::parse("(v) * T[1,1] * X[0,0]", &q).is_err());
        assert!(A::parse("(v) * T[1,2] * X[0]", &q).is_err());
        assert!(A::parse("v * T[1,2]", &q).is_err());
    }

    fn monomial(rank: usize) -> impl Strategy<Value = A> {
        let perms = Permutation::all(rank);
        (0..perms.len(), prop::collection::vec(-1i64..=1, rank), -2i64..=2)
            .prop_filter("|λ| ≤ 2", |(_, l, _)| l.iter().map(|x| x.abs()).sum::<i64>() <= 2)
            .prop_map(move |(w, l, c)| {
                A::monomial(perms[w].clone(), l).scale(&RatFunc::from(if c == 0 { 1 } else { c }))
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn associativity(a in monomial(3), b in monomial(3), c in monomial(3)) {
            let q = q();
            let lhs = affine_mul(&affine_mul(&a, &b, &q), &c, &q);
            let rhs = affine_mul(&a, &affine_mul(&b, &c, &q), &q);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
