//! The finite Hecke algebra `H(r)` and the extended affine Hecke algebra
//! `H_Δ(r)` with generators `T_i`, `X_j^{±1}` and quadratic relation
//! `(T_i + 1)(T_i − v²) = 0`.

mod affine;
mod eval;
mod finite;
mod ideals;

pub use affine::{affine_mul, commute_x_past_t, AffineHeckeElem, XExp};
pub use eval::EvalModule;
pub use finite::{c_element, finite_mul, y_mu, FiniteHeckeElem};
pub use ideals::{ideal_i, ideal_j, HeckeSubspace, MAX_HECKE_RANK};

use std::fmt;

use serde::{Deserialize, Serialize};

/// A generator of `H_Δ(r)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum HGenerator {
    T(usize),
    X(usize),
    XInv(usize),
}

impl HGenerator {
    /// All generators of `H_Δ(r)`.
    pub fn all(r: usize) -> Vec<Self> {
        (1..r)
            .map(Self::T)
            .chain((1..=r).map(Self::X))
            .chain((1..=r).map(Self::XInv))
            .collect()
    }

    pub fn as_element<F: crate::scalar::Field>(&self, r: usize) -> AffineHeckeElem<F> {
        match *self {
            Self::T(i) => AffineHeckeElem::t(i, r),
            Self::X(j) => AffineHeckeElem::x(j, 1, r),
            Self::XInv(j) => AffineHeckeElem::x(j, -1, r),
        }
    }
}

impl fmt::Display for HGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::T(i) => write!(f, "T{i}"),
            Self::X(j) => write!(f, "X{j}"),
            Self::XInv(j) => write!(f, "X{j}^-1"),
        }
    }
}
