//! Sparse vectors and subspaces in reduced row echelon form.

use std::collections::BTreeMap;

use crate::scalar::Field;

/// Sparse vector keyed by basis labels.
pub type SparseVec<K, F> = BTreeMap<K, F>;

/// `acc += c · v`, dropping zero coefficients.
pub fn axpy<K: Ord + Clone, F: Field>(acc: &mut SparseVec<K, F>, c: &F, v: &SparseVec<K, F>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        add_term(acc, k.clone(), c.clone() * x);
    }
}

/// `acc[k] += x`, dropping the entry if it cancels.
pub fn add_term<K: Ord, F: Field>(acc: &mut SparseVec<K, F>, k: K, x: F) {
    if x.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match acc.entry(k) {
        Entry::Vacant(e) => {
            e.insert(x);
        }
        Entry::Occupied(mut e) => {
            let s = e.get().clone() + x;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

pub fn scale<K: Ord + Clone, F: Field>(v: &SparseVec<K, F>, c: &F) -> SparseVec<K, F> {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(k, x)| (k.clone(), c.clone() * x)).collect()
}

/// Tagged union for stacking two key spaces; every `L` key sorts before every `R` key.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Aug<A, B> {
    L(A),
    R(B),
}

/// A subspace held as a fully reduced echelon basis: each row has leading
/// coefficient 1 at its pivot, and no other row has a nonzero entry there.
/// Rows are sorted by pivot, so the basis is canonical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<K: Ord, F> {
    rows: Vec<SparseVec<K, F>>,
}

impl<K: Ord + Clone, F: Field> Default for Subspace<K, F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone, F: Field> Subspace<K, F> {
    pub fn new() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn spanned_by<I: IntoIterator<Item = SparseVec<K, F>>>(vs: I) -> Self {
        let mut s = Self::new();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<K, F>] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.iter().map(|r| r.keys().next().expect("zero row"))
    }

    /// Remainder of `v` after clearing every pivot of `self`.
    pub fn reduce(&self, mut v: SparseVec<K, F>) -> SparseVec<K, F> {
        for row in &self.rows {
            let p = row.keys().next().expect("zero row");
            if let Some(c) = v.get(p).cloned() {
                axpy(&mut v, &-c, row);
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVec<K, F>) -> bool {
        let mut v = self.reduce(v);
        let Some((p, lead)) = v.iter().next().map(|(k, x)| (k.clone(), x.clone())) else {
            return false;
        };
        if !lead.is_one() {
            v = scale(&v, &lead.inv().expect("nonzero pivot"));
        }
        for row in &mut self.rows {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &-c, &v);
            }
        }
        let at = self
            .rows
            .partition_point(|r| r.keys().next().expect("zero row") < &p);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &SparseVec<K, F>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v ∉ self`.
    pub fn coordinates(&self, v: &SparseVec<K, F>) -> Option<Vec<F>> {
        let coords: Vec<F> = self
            .pivots()
            .map(|p| v.get(p).cloned().unwrap_or_else(F::zero))
            .collect();
        let mut rest = v.clone();
        for (c, row) in coords.iter().zip(&self.rows) {
            axpy(&mut rest, &-c.clone(), row);
        }
        rest.is_empty().then_some(coords)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Sum of subspaces.
    pub fn join(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    /// Intersection via the Zassenhaus algorithm.
    pub fn intersect(&self, other: &Self) -> Self {
        let mut z: Subspace<Aug<K, K>, F> = Subspace::new();
        for r in &self.rows {
            let mut v: SparseVec<_, _> = r.iter().map(|(k, x)| (Aug::L(k.clone()), x.clone())).collect();
            v.extend(r.iter().map(|(k, x)| (Aug::R(k.clone()), x.clone())));
            z.insert(v);
        }
        for r in &other.rows {
            z.insert(r.iter().map(|(k, x)| (Aug::L(k.clone()), x.clone())).collect());
        }
        Self::spanned_by(z.rows.into_iter().filter_map(|row| match row.keys().next() {
            Some(Aug::R(_)) => Some(
                row.into_iter()
                    .map(|(k, x)| match k {
                        Aug::R(k) => (k, x),
                        Aug::L(_) => unreachable!("pivot is the least key"),
                    })
                    .collect(),
            ),
            _ => None,
        }))
    }

    /// Matrix of a linear map `g` restricted to `self`, in the echelon
    /// basis: column `j` holds the coordinates of `g(row_j)`. Returns
    /// `Err(j)` if `g(row_j)` leaves the subspace.
    pub fn restrict<G>(&self, mut g: G) -> Result<Vec<Vec<F>>, usize>
    where
        G: FnMut(&SparseVec<K, F>) -> SparseVec<K, F>,
    {
        let cols: Vec<Vec<F>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(j, r)| self.coordinates(&g(r)).ok_or(j))
            .collect::<Result<_, _>>()?;
        let d = self.dim();
        Ok((0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect())
    }

    /// Linear combination of the echelon basis rows.
    pub fn combine(&self, coeffs: &[F]) -> SparseVec<K, F> {
        let mut out = SparseVec::new();
        for (c, r) in coeffs.iter().zip(&self.rows) {
            axpy(&mut out, c, r);
        }
        out
    }
}

/// Basis of `{ c : Σ_j c_j · images[j] = 0 }`, as dense coefficient vectors.
pub fn kernel<K: Ord + Clone, F: Field>(images: &[SparseVec<K, F>]) -> Vec<Vec<F>> {
    let m = images.len();
    let mut s: Subspace<Aug<K, usize>, F> = Subspace::new();
    for (j, img) in images.iter().enumerate() {
        let mut v: SparseVec<_, _> = img.iter().map(|(k, x)| (Aug::L(k.clone()), x.clone())).collect();
        v.insert(Aug::R(j), F::one());
        s.insert(v);
    }
    s.rows
        .into_iter()
        .filter(|row| matches!(row.keys().next(), Some(Aug::R(_))))
        .map(|row| {
            let mut c = vec![F::zero(); m];
            for (k, x) in row {
                match k {
                    Aug::R(j) => c[j] = x,
                    Aug::L(_) => unreachable!("pivot is the least key"),
                }
            }
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn vecq(xs: &[i64]) -> SparseVec<usize, Q> {
        xs.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(k, &x)| (k, q(x)))
            .collect()
    }

    #[test]
    fn echelon_form_is_canonical() {
        let a = Subspace::spanned_by([vecq(&[1, 2, 3]), vecq(&[0, 1, 1])]);
        let b = Subspace::spanned_by([vecq(&[1, 3, 4]), vecq(&[2, 4, 6])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.rows()[0], vecq(&[1, 0, 1]));
        assert!(a.contains(&vecq(&[3, 5, 8])));
        assert!(!a.contains(&vecq(&[0, 0, 1])));
        assert_eq!(a.coordinates(&vecq(&[3, 5, 8])), Some(vec![q(3), q(5)]));
    }

    #[test]
    fn intersection_example() {
        let a = Subspace::spanned_by([vecq(&[1, 0, 0]), vecq(&[0, 1, 0])]);
        let b = Subspace::spanned_by([vecq(&[1, 1, 1]), vecq(&[1, -1, 0])]);
        let c = a.intersect(&b);
        assert_eq!(c, Subspace::spanned_by([vecq(&[1, -1, 0])]));
    }

    #[test]
    fn kernel_example() {
        let imgs = [vecq(&[1, 1]), vecq(&[2, 2]), vecq(&[0, 1])];
        let k = kernel(&imgs);
        assert_eq!(k, vec![vec![q(1), Q::new((-1).into(), 2.into()), q(0)]]);
    }

    #[test]
    fn restriction_matrix() {
        let s = Subspace::spanned_by([vecq(&[1, 0, 0]), vecq(&[0, 1, 0])]);
        let swap = |v: &SparseVec<usize, Q>| {
            v.iter().map(|(&k, x)| (if k < 2 { 1 - k } else { k }, x.clone())).collect()
        };
        assert_eq!(s.restrict(swap).unwrap(), vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
        let shift = |v: &SparseVec<usize, Q>| v.iter().map(|(&k, x)| (k + 1, x.clone())).collect();
        assert_eq!(s.restrict(shift), Err(1));
    }

    fn small_vecs() -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 0..5)
    }

    proptest! {
        #[test]
        fn grassmann_formula(a in small_vecs(), b in small_vecs()) {
            let sa = Subspace::spanned_by(a.iter().map(|v| vecq(v)));
            let sb = Subspace::spanned_by(b.iter().map(|v| vecq(v)));
            let meet = sa.intersect(&sb);
            let join = sa.join(&sb);
            prop_assert_eq!(meet.dim() + join.dim(), sa.dim() + sb.dim());
            prop_assert!(meet.is_subspace_of(&sa) && meet.is_subspace_of(&sb));
        }

        #[test]
        fn kernel_vectors_annihilate(a in small_vecs()) {
            let imgs: Vec<_> = a.iter().map(|v| vecq(v)).collect();
            let k = kernel(&imgs);
            let rank = Subspace::spanned_by(imgs.iter().cloned()).dim();
            prop_assert_eq!(k.len() + rank, imgs.len());
            for c in k {
                let mut acc = SparseVec::new();
                for (x, v) in c.iter().zip(&imgs) {
                    axpy(&mut acc, x, v);
                }
                prop_assert!(acc.is_empty());
            }
        }
    }
}
