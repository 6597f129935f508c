use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::Permutation;

/// An element of `Λ(p, r)`: `p` non-negative parts summing to `r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<usize>);

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_in(&self, p: usize, r: usize) -> bool {
        self.len() == p && self.size() == r
    }

    /// The blocks `[start, end)` (0-based positions) of the Young subgroup `𝔖_μ`.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.0
            .iter()
            .map(|&m| {
                let b = start..start + m;
                start += m;
                b
            })
            .collect()
    }

    /// Indices `i` with `s_i ∈ 𝔖_μ`.
    pub fn young_generators(&self) -> Vec<usize> {
        self.blocks()
            .into_iter()
            .flat_map(|b| (b.start + 1)..b.end)
            .collect()
    }

    pub fn in_young_subgroup(&self, w: &Permutation) -> bool {
        self.blocks()
            .iter()
            .all(|b| b.clone().all(|k| b.contains(&(w.apply(k + 1) - 1))))
    }

    /// All elements of the standard Young subgroup `𝔖_μ ⊂ 𝔖_r`.
    pub fn young_subgroup(&self) -> Vec<Permutation> {
        Permutation::all(self.size())
            .into_iter()
            .filter(|w| self.in_young_subgroup(w))
            .collect()
    }

    /// Distinguished right coset representatives
    /// `𝒟_μ = { d : ℓ(wd) = ℓ(w) + ℓ(d) for all w ∈ 𝔖_μ }`.
    pub fn min_coset_reps(&self) -> Vec<Permutation> {
        let sub = self.young_subgroup();
        Permutation::all(self.size())
            .into_iter()
            .filter(|d| {
                let ld = d.length();
                sub.iter().all(|w| w.compose(d).length() == w.length() + ld)
            })
            .collect()
    }

    /// Partition obtained by sorting the nonzero parts.
    pub fn to_partition(&self) -> Partition {
        Partition::new(self.0.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl Partition {
    /// Sorts the parts and discards zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Conjugate partition: `λ'_j = #{ i : λ_i ≥ j }`.
    pub fn dual(&self) -> Partition {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&x| x >= j).count()).collect())
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Pad with zeros to an element of `Λ(n, r)`; `None` if too long.
    pub fn padded(&self, n: usize) -> Option<Composition> {
        (self.len() <= n).then(|| {
            let mut p = self.0.clone();
            p.resize(n, 0);
            Composition(p)
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// `Λ(p, r)` in reverse lexicographic order.
pub fn compositions(p: usize, r: usize) -> Vec<Composition> {
    fn rec(p: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if p == 1 {
            prefix.push(r);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=r).rev() {
            prefix.push(first);
            rec(p - 1, r - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    match p {
        0 if r == 0 => out.push(Composition(Vec::new())),
        0 => {}
        _ => rec(p, r, &mut Vec::new(), &mut out),
    }
    out
}

/// `Λ⁺(r)`, the partitions of `r`, in reverse lexicographic order.
pub fn partitions(r: usize) -> Vec<Partition> {
    fn rec(r: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if r == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=r.min(max)).rev() {
            prefix.push(first);
            rec(r - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, &mut Vec::new(), &mut out);
    out
}
