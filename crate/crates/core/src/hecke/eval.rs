use super::{AffineHeckeElem, FiniteHeckeElem, HGenerator};
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::linalg::{axpy, SparseVec};
use crate::scalar::{Field, QuantumParam};

/// The evaluation module `M_a = H_Δ(r) / Σ H_Δ(r)(X_j − a_j)`, with basis
/// `{T̄_w}`; elements are written as finite Hecke elements.
#[derive(Clone, Debug)]
pub struct EvalModule<F> {
    q: QuantumParam<F>,
    a: Vec<F>,
    a_inv: Vec<F>,
}

impl<F: Field> EvalModule<F> {
    pub fn new(a: Vec<F>, q: QuantumParam<F>) -> Result<Self> {
        let a_inv = a
            .iter()
            .map(|x| x.inv().ok_or_else(|| Error::Domain("evaluation parameters must be nonzero".into())))
            .collect::<Result<_>>()?;
        Ok(Self { q, a, a_inv })
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn params(&self) -> &[F] {
        &self.a
    }

    pub fn quantum(&self) -> &QuantumParam<F> {
        &self.q
    }

    /// `a^λ = ∏ a_t^{λ_t}`.
    pub fn eval_x(&self, lambda: &[i64]) -> F {
        lambda.iter().enumerate().fold(F::one(), |acc, (t, &e)| {
            let base = if e >= 0 { &self.a[t] } else { &self.a_inv[t] };
            acc * &base.pow(e.abs()).expect("nonnegative power")
        })
    }

    /// Image `h̄` of `h` in `M_a`: substitute `X^λ ↦ a^λ` in the normal form.
    pub fn project(&self, h: &AffineHeckeElem<F>) -> FiniteHeckeElem<F> {
        let mut out = SparseVec::new();
        for ((w, lambda), c) in h.terms() {
            crate::linalg::add_term(&mut out, w.clone(), c.clone() * &self.eval_x(lambda));
        }
        FiniteHeckeElem::from_terms(self.rank(), out)
    }

    /// `h · m`.
    pub fn act(&self, h: &AffineHeckeElem<F>, m: &FiniteHeckeElem<F>) -> FiniteHeckeElem<F> {
        let mut out = SparseVec::new();
        for (w, c) in m.terms() {
            let img = self.project(&h.right_mul_t(w, &self.q));
            axpy(&mut out, c, img.terms());
        }
        FiniteHeckeElem::from_terms(self.rank(), out)
    }

    /// Action of a single generator `T_i` or `X_j^{±1}`.
    pub fn eval_action(&self, g: HGenerator, m: &FiniteHeckeElem<F>) -> FiniteHeckeElem<F> {
        let r = self.rank();
        match g {
            HGenerator::T(i) => m.left_mul_generator(i, &self.q),
            HGenerator::X(j) => self.act(&AffineHeckeElem::x(j, 1, r), m),
            HGenerator::XInv(j) => self.act(&AffineHeckeElem::x(j, -1, r), m),
        }
    }

    pub fn basis_vector(&self, w: Permutation) -> FiniteHeckeElem<F> {
        FiniteHeckeElem::basis(w)
    }
}
