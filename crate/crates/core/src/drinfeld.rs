//! Dominant tuples of Drinfeld polynomials, the bijection `∂_{n,r}` from
//! multisegments, the padding `Q ↦ Q̃`, and the idempotent `e` cutting the
//! `N`-window tensor space down to the `n`-window.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::combinatorics::{Composition, Multisegment, Segment};
use crate::error::{Error, Result};
use crate::linalg::{add_term, Subspace};
use crate::scalar::{poly_ratio_if_polynomial, Field, QuantumParam, UPoly};
use crate::schur_functor::{schur_image, SpannedModule};
use crate::tensor_space::{weight_of, TensorVector, UGenerator};

/// `n` polynomials `Q_i(u) = ∏_a (1 − a u)`, each stored by its multiset of
/// `a`'s (sorted by their text form).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DominantTuple<F> {
    roots: Vec<Vec<F>>,
}

impl<F: Field> DominantTuple<F> {
    /// Does not check dominance; see [`DominantTuple::is_dominant`].
    pub fn new(roots: Vec<Vec<F>>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidInput("a tuple needs at least one polynomial".into()));
        }
        if roots.iter().flatten().any(Field::is_zero) {
            return Err(Error::InvalidInput("roots must be nonzero".into()));
        }
        let roots = roots
            .into_iter()
            .map(|mut r| {
                r.sort_by_cached_key(|a| a.to_string());
                r
            })
            .collect();
        Ok(Self { roots })
    }

    /// `(1, …, 1)`.
    pub fn trivial(n: usize) -> Self {
        Self { roots: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Vec<F>] {
        &self.roots
    }

    pub fn polys(&self) -> Vec<UPoly<F>> {
        self.roots.iter().map(|r| UPoly::from_inverse_roots(r)).collect()
    }

    /// `(deg Q_1, …, deg Q_n)`.
    pub fn degrees(&self) -> Composition {
        Composition(self.roots.iter().map(Vec::len).collect())
    }

    /// `Σ deg Q_i`.
    pub fn degree(&self) -> usize {
        self.roots.iter().map(Vec::len).sum()
    }

    /// `∏_i Q_i(u)`.
    pub fn product(&self) -> UPoly<F> {
        UPoly::from_inverse_roots(self.roots.iter().flatten())
    }

    pub fn is_dominant(&self, q: &QuantumParam<F>) -> bool {
        is_dominant(&self.polys(), q).expect("constant terms are 1")
    }

    pub fn to_spec(&self) -> Vec<Vec<String>> {
        self.roots
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }

    pub fn from_spec(spec: &[Vec<String>], q: &QuantumParam<F>) -> Result<Self> {
        Self::new(
            spec.iter()
                .map(|r| r.iter().map(|a| q.parse(a)).collect::<Result<_>>())
                .collect::<Result<_>>()?,
        )
    }
}

impl<F: Field> fmt::Display for DominantTuple<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let polys = self.roots.iter().map(|r| {
            if r.is_empty() {
                "1".to_string()
            } else {
                r.iter().map(|a| format!("(1 - ({a})u)")).join("")
            }
        });
        write!(f, "({})", polys.format(", "))
    }
}

/// Whether `Q_i(v^{i−1}u) / Q_{i+1}(v^{i+1}u)` is a polynomial for `1 ≤ i < n`.
pub fn is_dominant<F: Field>(polys: &[UPoly<F>], q: &QuantumParam<F>) -> Result<bool> {
    for (i, pair) in polys.windows(2).enumerate() {
        let i = i as i64 + 1;
        let num = pair[0].rescale(&q.v_pow(i - 1));
        let den = pair[1].rescale(&q.v_pow(i + 1));
        if poly_ratio_if_polynomial(&num, &den)?.is_none() {
            return Ok(false);
        }
    }
    if let [only] = polys {
        poly_ratio_if_polynomial(only, &UPoly::one())?;
    }
    Ok(true)
}

/// `∂_{n,r}(s)`: a segment `(a, k)` with `k < n` puts `a v^{k−2i+1}` into
/// `Q_i` for `i ≤ k`; a segment `(b, n)` puts `b v^{n+1−2i}` into every `Q_i`.
pub fn pa<F: Field>(n: usize, r: usize, s: &Multisegment<F>, q: &QuantumParam<F>) -> Result<DominantTuple<F>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    if s.size() != r {
        return Err(Error::InvalidInput(format!("{s} has size {}, expected r = {r}", s.size())));
    }
    let mut roots = vec![Vec::new(); n];
    for seg in s.segments() {
        let k = seg.length();
        if k > n {
            return Err(Error::Domain(format!("segment {seg} is longer than n = {n}")));
        }
        for i in 1..=k {
            let e = if k < n { k as i64 - 2 * i as i64 + 1 } else { n as i64 + 1 - 2 * i as i64 };
            roots[i - 1].push(seg.center().clone() * &q.v_pow(e));
        }
    }
    DominantTuple::new(roots)
}

/// `∂_{n,r}^{−1}(Q)`: the roots of `P_j(u) = Q_j(v^{j−1}u)/Q_{j+1}(v^{j+1}u)`
/// are the centers of the length-`j` segments, and each root `b` of `Q_n`
/// gives the segment `(b v^{n−1}, n)`.
pub fn pa_inverse<F: Field>(
    n: usize,
    r: usize,
    big_q: &DominantTuple<F>,
    q: &QuantumParam<F>,
) -> Result<Multisegment<F>> {
    if big_q.n() != n {
        return Err(Error::Domain(format!("tuple has {} polynomials, expected n = {n}", big_q.n())));
    }
    if big_q.degree() != r {
        return Err(Error::Domain(format!("degrees sum to {}, expected r = {r}", big_q.degree())));
    }
    let roots = big_q.roots();
    let mut segments = Vec::new();
    for j in 1..n {
        let shift_num = q.v_pow(j as i64 - 1);
        let shift_den = q.v_pow(j as i64 + 1);
        // Q(cu) has roots a·c.
        let mut p: Vec<F> = roots[j - 1].iter().map(|a| a.clone() * &shift_num).collect();
        for b in &roots[j] {
            let b = b.clone() * &shift_den;
            let pos = p.iter().position(|a| *a == b).ok_or_else(|| {
                Error::Domain(format!("tuple {big_q} is not dominant at i = {j}"))
            })?;
            p.swap_remove(pos);
        }
        for a in p {
            segments.push(Segment::new(a, j)?);
        }
    }
    let top = q.v_pow(n as i64 - 1);
    for b in &roots[n - 1] {
        segments.push(Segment::new(b.clone() * &top, n)?);
    }
    Ok(Multisegment::new(segments))
}

/// `Q̃ = (Q_1, …, Q_n, 1, …, 1)` with `N` entries.
pub fn tilde<F: Field>(big_q: &DominantTuple<F>, big_n: usize) -> Result<DominantTuple<F>> {
    if big_n < big_q.n() {
        return Err(Error::InvalidInput(format!("N = {big_n} is smaller than n = {}", big_q.n())));
    }
    let mut roots = big_q.roots.clone();
    roots.resize(big_n, Vec::new());
    Ok(DominantTuple { roots })
}

/// Eigenvalue of `e = Σ_{λ ∈ Λ(n,r)} k_λ` on a vector of weight `α`, where
/// `k_λ` acts by `∏_i [α_i choose λ_i]`.
pub fn e_eigenvalue<F: Field>(alpha: &Composition, n: usize, q: &QuantumParam<F>) -> Result<F> {
    let r = alpha.size();
    let big_n = alpha.len();
    if n > big_n {
        return Err(Error::InvalidInput(format!("n = {n} exceeds the weight length {big_n}")));
    }
    let mut total = F::zero();
    for lambda in crate::combinatorics::compositions(n, r) {
        let mut term = F::one();
        for i in 0..big_n {
            let l = lambda.parts().get(i).copied().unwrap_or(0);
            term = term * &q.quantum_binomial(alpha.parts()[i] as i64, l as i64)?;
            if term.is_zero() {
                break;
            }
        }
        total = total + term;
    }
    Ok(total)
}

/// Generators of the `n`-window subalgebra: `E_i, F_i` (`i < n`) and `K_i^{±1}` (`i ≤ n`).
pub fn n_window_generators(n: usize) -> Vec<UGenerator> {
    (1..n)
        .map(UGenerator::E)
        .chain((1..n).map(UGenerator::F))
        .chain((1..=n).map(UGenerator::K))
        .chain((1..=n).map(UGenerator::KInv))
        .collect()
}

/// `e` applied to a vector of `W`, term by term on weight vectors.
pub fn apply_e<F: Field>(w: &SpannedModule<F>, n: usize, x: &TensorVector<F>) -> Result<TensorVector<F>> {
    let mut out = TensorVector::new();
    let mut cache: BTreeMap<Composition, F> = BTreeMap::new();
    for (i, c) in x {
        let alpha = weight_of(i, w.n());
        let ev = match cache.get(&alpha) {
            Some(ev) => ev.clone(),
            None => {
                let ev = e_eigenvalue(&alpha, n, w.quantum())?;
                cache.insert(alpha, ev.clone());
                ev
            }
        };
        add_term(&mut out, i.clone(), c.clone() * &ev);
    }
    Ok(out)
}

/// `𝒢(W) = eW` with the induced action of the `n`-window generators.
pub fn g_projection<F: Field>(big_n: usize, n: usize, w: &SpannedModule<F>) -> Result<SpannedModule<F>> {
    if w.n() != big_n {
        return Err(Error::InvalidInput(format!("module is built over N = {}, not {big_n}", w.n())));
    }
    if n == 0 || n > big_n {
        return Err(Error::InvalidInput(format!("need 1 <= n <= N, got n = {n}, N = {big_n}")));
    }
    let q = w.quantum();
    let mut kept = Vec::new();
    for (row, alpha) in w.basis().rows().iter().zip(w.row_weights()) {
        let ev = e_eigenvalue(alpha, n, q)?;
        if ev.is_one() {
            kept.push(row.clone());
        } else if !ev.is_zero() {
            return Err(Error::Domain(format!("e acts on weight {alpha} by {ev}, not by 0 or 1")));
        }
    }
    let basis = Subspace::spanned_by(kept);
    let mut actions = BTreeMap::new();
    for g in n_window_generators(n) {
        let mat = basis
            .restrict(|x| w.act(g, x))
            .map_err(|j| Error::NotClosed(format!("{g} (projected basis vector {j})")))?;
        actions.insert(g, mat);
    }
    Ok(SpannedModule::with_actions(
        n,
        w.params().to_vec(),
        w.inverse_params().to_vec(),
        basis,
        actions,
        q,
    ))
}

/// Comparison of `e F_{N,r}(Ī_μ)` with `F_{n,r}(Ī_μ)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GFunctorReport {
    pub projected_weights: BTreeMap<Composition, usize>,
    pub target_weights: BTreeMap<Composition, usize>,
    pub subspace_equal: bool,
    pub actions_equal: bool,
    pub idempotent: bool,
    pub commutes: bool,
    /// `∂_{N,r}(s) = ∂_{n,r}(s)~`.
    pub tilde_compatible: bool,
}

impl GFunctorReport {
    pub fn passed(&self) -> bool {
        self.projected_weights == self.target_weights
            && self.subspace_equal
            && self.actions_equal
            && self.idempotent
            && self.commutes
            && self.tilde_compatible
    }
}

pub fn g_functor_check<F: Field>(
    big_n: usize,
    n: usize,
    s: &Multisegment<F>,
    q: &QuantumParam<F>,
    tmax: usize,
) -> Result<GFunctorReport> {
    let r = s.size();
    let big = schur_image(big_n, s, q, tmax)?;
    let small = schur_image(n, s, q, tmax)?;
    let projected = g_projection(big_n, n, &big)?;
    let gens = n_window_generators(n);
    let mut idempotent = true;
    let mut commutes = true;
    for x in big.basis().rows() {
        let ex = apply_e(&big, n, x)?;
        idempotent &= apply_e(&big, n, &ex)? == ex;
        for &g in &gens {
            commutes &= apply_e(&big, n, &big.act(g, x))? == big.act(g, &ex);
        }
    }
    let actions_equal = gens.iter().all(|&g| projected.action_matrix(g) == small.action_matrix(g));
    let tilde_compatible = if s.is_in_srn(n) {
        pa(big_n, r, s, q)? == tilde(&pa(n, r, s, q)?, big_n)?
    } else {
        true
    };
    Ok(GFunctorReport {
        projected_weights: projected.weight_dimension_report(),
        target_weights: small.weight_dimension_report(),
        subspace_equal: projected.basis() == small.basis(),
        actions_equal,
        idempotent,
        commutes,
        tilde_compatible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_multisegments, residue};
    use crate::scalar::RatFunc;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn q() -> QuantumParam<RatFunc> {
        QuantumParam::generic()
    }

    fn ms(segs: &[(&str, usize)]) -> Multisegment<RatFunc> {
        Multisegment::new(segs.iter().map(|(c, k)| Segment::new(r(c), *k).unwrap()).collect())
    }

    fn tuple(roots: &[&[&str]]) -> DominantTuple<RatFunc> {
        DominantTuple::new(roots.iter().map(|rs| rs.iter().map(|a| r(a)).collect()).collect()).unwrap()
    }

    fn grid() -> Vec<RatFunc> {
        [2, 3, 5]
            .iter()
            .flat_map(|p| (-2..=2).map(move |k| r(&format!("{p}*v^{k}"))))
            .collect()
    }

    #[test]
    fn dominance_examples() {
        let q = q();
        assert!(tuple(&[&["2*v"], &["2*v^-1"]]).is_dominant(&q));
        assert!(!tuple(&[&[], &["2"]]).is_dominant(&q));
        assert!(DominantTuple::<RatFunc>::trivial(3).is_dominant(&q));
        let bad = UPoly::new(vec![r("2"), r("1")]);
        assert!(is_dominant(&[bad, UPoly::one()], &q).is_err());
    }

    #[test]
    fn pa_examples() {
        let q = q();
        assert!(matches!(pa(2, 2, &Multisegment::empty(), &q), Err(Error::InvalidInput(_))));
        assert_eq!(pa(2, 2, &ms(&[("7", 2)]), &q).unwrap(), tuple(&[&["7*v"], &["7*v^-1"]]));
        assert_eq!(pa(2, 2, &ms(&[("7", 1), ("11", 1)]), &q).unwrap(), tuple(&[&["7", "11"], &[]]));
        assert_eq!(pa(3, 1, &ms(&[("7", 1)]), &q).unwrap(), tuple(&[&["7"], &[], &[]]));
        assert!(matches!(pa(2, 3, &ms(&[("7", 3)]), &q), Err(Error::Domain(_))));
        // Both forms of the length-n case agree.
        let q2 = pa(2, 2, &ms(&[("7", 2)]), &q).unwrap().polys();
        assert_eq!(q2[1], UPoly::linear_factor(&r("7*v^-1")));
    }

    #[test]
    fn pa_inverse_examples() {
        let q = q();
        assert_eq!(pa_inverse(2, 2, &tuple(&[&["7*v"], &["7*v^-1"]]), &q).unwrap(), ms(&[("7", 2)]));
        assert_eq!(pa_inverse(2, 2, &tuple(&[&["7", "11"], &[]]), &q).unwrap(), ms(&[("7", 1), ("11", 1)]));
        assert_eq!(pa_inverse(2, 0, &DominantTuple::trivial(2), &q).unwrap(), Multisegment::empty());
        assert!(pa_inverse(2, 1, &tuple(&[&[], &["2"]]), &q).is_err());
        assert!(pa_inverse(2, 3, &tuple(&[&["7", "11"], &[]]), &q).is_err());
        assert!(pa_inverse(3, 2, &tuple(&[&["7", "11"], &[]]), &q).is_err());
    }

    #[test]
    fn tilde_examples() {
        let q = q();
        let a = tuple(&[&["7"], &[]]);
        assert_eq!(tilde(&a, 2).unwrap(), a);
        assert_eq!(tilde(&a, 3).unwrap(), tuple(&[&["7"], &[], &[]]));
        assert!(tilde(&a, 1).is_err());
        let s = ms(&[("7", 1)]);
        assert_eq!(pa(3, 1, &s, &q).unwrap(), tilde(&pa(2, 1, &s, &q).unwrap(), 3).unwrap());
    }

    /// Round trips, the degree law, dominance, and tilde compatibility over
    /// the grid `{p v^k : p ∈ {2,3,5}, |k| ≤ 2}`.
    #[test]
    fn bijection_on_grid() {
        let q = q();
        let grid = grid();
        for n in 1..=3 {
            for rank in 0..=4 {
                for s in enumerate_multisegments(&grid, rank, Some(n)) {
                    let t = pa(n, rank, &s, &q).unwrap();
                    assert!(t.is_dominant(&q), "{s}");
                    assert_eq!(Some(t.degrees()), s.wp().dual().padded(n), "{s}");
                    let back = pa_inverse(n, rank, &t, &q).unwrap();
                    assert_eq!(back, s);
                    assert_eq!(pa(n, rank, &back, &q).unwrap(), t);
                    for big_n in n..=3 {
                        assert_eq!(pa(big_n, rank, &s, &q).unwrap(), tilde(&t, big_n).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn spec_round_trip() {
        let q = q();
        let t = tuple(&[&["7*v", "3"], &["7*v^-1"]]);
        assert_eq!(DominantTuple::from_spec(&t.to_spec(), &q).unwrap(), t);
        assert_eq!(t.to_string(), "((1 - (3)u)(1 - (7*v)u), (1 - (7*v^-1)u))");
    }

    /// `e` is 1 exactly on weights whose support lies in `[1, n]`.
    #[test]
    fn e_eigenvalue_is_the_window_indicator() {
        let q = q();
        for big_n in 1..=3 {
            for n in 1..=big_n {
                for rank in 0..=3 {
                    for alpha in crate::combinatorics::compositions(big_n, rank) {
                        let inside = alpha.parts()[n..].iter().all(|&x| x == 0);
                        let expected = if inside { RatFunc::one() } else { RatFunc::zero() };
                        assert_eq!(e_eigenvalue(&alpha, n, &q).unwrap(), expected, "{alpha} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn g_projection_examples() {
        let q = q();
        let w = schur_image(3, &ms(&[("7", 2)]), &q, 1).unwrap();
        assert_eq!(w.dim(), 3);
        let ew = g_projection(3, 2, &w).unwrap();
        assert_eq!(ew.dim(), 1);
        assert!(ew
            .basis()
            .rows()
            .iter()
            .flat_map(|row| row.keys())
            .all(|i| i.iter().all(|&x| residue(x, 3) <= 2)));
        let same = g_projection(3, 3, &w).unwrap();
        assert_eq!(same.basis(), w.basis());
        let rep = g_functor_check(3, 2, &ms(&[("7", 1), ("11*v", 1)]), &q, 1).unwrap();
        assert_eq!(rep.projected_weights, rep.target_weights);
        assert!(rep.passed(), "{rep:?}");
        assert!(g_projection(2, 3, &w).is_err());
    }
}
