use super::{c_element, finite_mul, y_mu, FiniteHeckeElem};
use crate::combinatorics::{Composition, Permutation};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::scalar::{Field, QuantumParam};

/// Largest `r` for which `𝔖_r` is enumerated.
pub const MAX_HECKE_RANK: usize = 6;

pub type HeckeSubspace<F> = Subspace<Permutation, F>;

fn check_rank(r: usize) -> Result<()> {
    if r > MAX_HECKE_RANK {
        return Err(Error::Resource(format!(
            "r = {r} exceeds the enumeration bound r <= {MAX_HECKE_RANK}"
        )));
    }
    Ok(())
}

/// `I_μ = H(r) y_μ`.
pub fn ideal_i<F: Field>(mu: &Composition, q: &QuantumParam<F>) -> Result<HeckeSubspace<F>> {
    let r = mu.size();
    check_rank(r)?;
    let y = y_mu(mu, q);
    Ok(left_ideal(&y, r, q))
}

/// `J_μ = ∩_{s_i ∈ 𝔖_μ} H(r) C_i`.
pub fn ideal_j<F: Field>(mu: &Composition, q: &QuantumParam<F>) -> Result<HeckeSubspace<F>> {
    let r = mu.size();
    check_rank(r)?;
    let mut acc: Option<HeckeSubspace<F>> = None;
    for i in mu.young_generators() {
        let ideal = left_ideal(&c_element(i, r, q)?, r, q);
        acc = Some(match acc {
            None => ideal,
            Some(a) => a.intersect(&ideal),
        });
    }
    Ok(acc.unwrap_or_else(|| {
        Subspace::spanned_by(Permutation::all(r).into_iter().map(|w| FiniteHeckeElem::<F>::basis(w).into_terms()))
    }))
}

/// `H(r) h`, spanned by `T_w h`.
fn left_ideal<F: Field>(h: &FiniteHeckeElem<F>, r: usize, q: &QuantumParam<F>) -> HeckeSubspace<F> {
    Subspace::spanned_by(
        Permutation::all(r)
            .into_iter()
            .map(|w| finite_mul(&FiniteHeckeElem::basis(w), h, q).into_terms()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions;
    use crate::scalar::RatFunc;

    #[test]
    fn examples() {
        let q = QuantumParam::<RatFunc>::generic();
        let i2 = ideal_i(&Composition(vec![2]), &q).unwrap();
        assert_eq!(i2.dim(), 1);
        assert_eq!(i2, ideal_j(&Composition(vec![2]), &q).unwrap());
        assert_eq!(ideal_i(&Composition(vec![1, 1]), &q).unwrap().dim(), 2);
        assert_eq!(ideal_i(&Composition(vec![2, 1]), &q).unwrap().dim(), 3);
        assert!(matches!(ideal_i(&Composition(vec![7]), &q), Err(Error::Resource(_))));
    }

    #[test]
    fn rogawski_equality() {
        let q = QuantumParam::<RatFunc>::generic();
        for r in 1..=4 {
            for mu in partitions(r) {
                let mu = mu.as_composition();
                let i = ideal_i(&mu, &q).unwrap();
                assert_eq!(i, ideal_j(&mu, &q).unwrap(), "mu = {mu}");
                let stab: usize = mu.parts().iter().map(|&m| (1..=m).product::<usize>()).product();
                assert_eq!(i.dim() * stab, (1..=r).product::<usize>());
            }
        }
    }
}
