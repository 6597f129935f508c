use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::combinatorics::{Composition, Permutation};
use crate::error::{Error, Result};
use crate::linalg::{add_term, axpy, SparseVec};
use crate::scalar::{Field, QuantumParam};

/// An element `Σ c_w T_w` of the finite Hecke algebra `H(r)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteHeckeElem<F> {
    r: usize,
    terms: SparseVec<Permutation, F>,
}

impl<F: Field> FiniteHeckeElem<F> {
    pub fn zero(r: usize) -> Self {
        Self { r, terms: BTreeMap::new() }
    }

    pub fn one(r: usize) -> Self {
        Self::basis(Permutation::identity(r))
    }

    pub fn basis(w: Permutation) -> Self {
        Self { r: w.rank(), terms: BTreeMap::from([(w, F::one())]) }
    }

    /// `T_i`.
    pub fn generator(i: usize, r: usize) -> Self {
        Self::basis(Permutation::simple(i, r))
    }

    /// `T_i⁻¹ = v⁻² T_i + (v⁻² − 1)`.
    pub fn generator_inverse(i: usize, r: usize, q: &QuantumParam<F>) -> Self {
        let vm2 = q.v_pow(-2);
        let mut h = Self::generator(i, r).scale(&vm2);
        add_term(&mut h.terms, Permutation::identity(r), vm2 - F::one());
        h
    }

    pub fn from_terms(r: usize, terms: SparseVec<Permutation, F>) -> Self {
        debug_assert!(terms.keys().all(|w| w.rank() == r));
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Self { r, terms }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> &SparseVec<Permutation, F> {
        &self.terms
    }

    pub fn into_terms(self) -> SparseVec<Permutation, F> {
        self.terms
    }

    pub fn coeff(&self, w: &Permutation) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
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

    /// `T_i · self`.
    pub fn left_mul_generator(&self, i: usize, q: &QuantumParam<F>) -> Self {
        self.mul_generator(i, q, true)
    }

    /// `self · T_i`.
    pub fn right_mul_generator(&self, i: usize, q: &QuantumParam<F>) -> Self {
        self.mul_generator(i, q, false)
    }

    fn mul_generator(&self, i: usize, q: &QuantumParam<F>, left: bool) -> Self {
        assert!(i >= 1 && i < self.r, "T_{i} not in H({})", self.r);
        let mut out = SparseVec::new();
        let v2m1 = q.v2().clone() - F::one();
        for (w, c) in &self.terms {
            let (sw, down) = if left {
                (w.left_mul_simple(i), w.has_left_descent(i))
            } else {
                (w.right_mul_simple(i), w.has_right_descent(i))
            };
            if down {
                add_term(&mut out, w.clone(), c.clone() * &v2m1);
                add_term(&mut out, sw, c.clone() * q.v2());
            } else {
                add_term(&mut out, sw, c.clone());
            }
        }
        Self { r: self.r, terms: out }
    }
}

impl<F: Field> fmt::Display for FiniteHeckeElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let s = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c}) * T{w}"))
            .join(" + ");
        write!(f, "{s}")
    }
}

/// Product in `H(r)`, expanding `T_u` along a reduced word.
pub fn finite_mul<F: Field>(
    h1: &FiniteHeckeElem<F>,
    h2: &FiniteHeckeElem<F>,
    q: &QuantumParam<F>,
) -> FiniteHeckeElem<F> {
    assert_eq!(h1.r, h2.r);
    let mut out = SparseVec::new();
    for (u, c) in &h2.terms {
        let prod = u
            .reduced_word()
            .into_iter()
            .fold(h1.clone(), |acc, i| acc.right_mul_generator(i, q));
        axpy(&mut out, c, &prod.terms);
    }
    FiniteHeckeElem { r: h1.r, terms: out }
}

/// `y_μ = Σ_{w ∈ 𝔖_μ} (−v²)^{−ℓ(w)} T_w`.
pub fn y_mu<F: Field>(mu: &Composition, q: &QuantumParam<F>) -> FiniteHeckeElem<F> {
    let base = -q.v_pow(-2);
    let terms = mu
        .young_subgroup()
        .into_iter()
        .map(|w| {
            let c = base.pow(w.length() as i64).expect("nonzero base");
            (w, c)
        })
        .collect();
    FiniteHeckeElem { r: mu.size(), terms }
}

/// `C_i = v⁻¹ T_i − v` in `H(r)`.
pub fn c_element<F: Field>(i: usize, r: usize, q: &QuantumParam<F>) -> Result<FiniteHeckeElem<F>> {
    if i < 1 || i >= r {
        return Err(Error::InvalidInput(format!("C_{i} needs 1 <= i < r = {r}")));
    }
    let mut h = FiniteHeckeElem::generator(i, r).scale(q.v_inv());
    add_term(&mut h.terms, Permutation::identity(r), -q.v().clone());
    Ok(h)
}
