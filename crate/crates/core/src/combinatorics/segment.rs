use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};
use crate::scalar::{Field, QuantumParam};

/// A segment `(a v^{−k+1}, a v^{−k+3}, …, a v^{k−1})` with center `a` and length `k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Segment<F> {
    center: F,
    length: usize,
}

/// JSON shape of a segment: the center as field-element text.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentSpec {
    pub center: String,
    pub length: usize,
}

impl<F: Field> Segment<F> {
    pub fn new(center: F, length: usize) -> Result<Self> {
        if center.is_zero() {
            return Err(Error::InvalidInput("segment center must be nonzero".into()));
        }
        if length == 0 {
            return Err(Error::InvalidInput("segment length must be positive".into()));
        }
        Ok(Self { center, length })
    }

    pub fn center(&self) -> &F {
        &self.center
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// The geometric sequence with ratio `v²` centered at `a`.
    pub fn expand(&self, q: &QuantumParam<F>) -> Vec<F> {
        let k = self.length as i64;
        (0..k)
            .map(|j| self.center.clone() * &q.v_pow(-k + 1 + 2 * j))
            .collect()
    }

    pub fn to_spec(&self) -> SegmentSpec {
        SegmentSpec { center: self.center.to_string(), length: self.length }
    }

    pub fn from_spec(spec: &SegmentSpec, q: &QuantumParam<F>) -> Result<Self> {
        Self::new(q.parse(&spec.center)?, spec.length)
    }
}

impl<F: Field> fmt::Display for Segment<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.center, self.length)
    }
}

/// An unordered multiset of segments, stored in canonical order:
/// length descending, then center text ascending.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multisegment<F> {
    segments: Vec<Segment<F>>,
}

impl<F: Field> Multisegment<F> {
    pub fn new(mut segments: Vec<Segment<F>>) -> Self {
        segments.sort_by_cached_key(|s| (std::cmp::Reverse(s.length), s.center.to_string()));
        Self { segments }
    }

    pub fn empty() -> Self {
        Self { segments: Vec::new() }
    }

    pub fn segments(&self) -> &[Segment<F>] {
        &self.segments
    }

    /// Total length `r = Σ |s_i|`.
    pub fn size(&self) -> usize {
        self.segments.iter().map(|s| s.length).sum()
    }

    /// `wp(s)`: the segment lengths as a partition.
    pub fn wp(&self) -> Partition {
        Partition::new(self.segments.iter().map(|s| s.length).collect())
    }

    /// Membership in `𝒮_r^{(n)}`: every segment has length at most `n`.
    pub fn is_in_srn(&self, n: usize) -> bool {
        self.segments.iter().all(|s| s.length <= n)
    }

    /// Concatenate the segment expansions in the given order (a permutation
    /// of segment indices).
    pub fn juxtapose_in(&self, order: &[usize], q: &QuantumParam<F>) -> Result<Vec<F>> {
        let mut seen = vec![false; self.segments.len()];
        if order.len() != seen.len() {
            return Err(Error::InvalidInput("order must list every segment once".into()));
        }
        for &i in order {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInput("order must list every segment once".into()));
            }
        }
        Ok(order.iter().flat_map(|&i| self.segments[i].expand(q)).collect())
    }

    /// `a(s)` in canonical order; the block lengths are then `wp(s)`.
    pub fn juxtapose(&self, q: &QuantumParam<F>) -> Vec<F> {
        self.segments.iter().flat_map(|s| s.expand(q)).collect()
    }

    pub fn to_spec(&self) -> Vec<SegmentSpec> {
        self.segments.iter().map(Segment::to_spec).collect()
    }

    pub fn from_spec(spec: &[SegmentSpec], q: &QuantumParam<F>) -> Result<Self> {
        Ok(Self::new(
            spec.iter()
                .map(|s| Segment::from_spec(s, q))
                .collect::<Result<_>>()?,
        ))
    }
}

impl<F: Field> fmt::Display for Multisegment<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.segments.iter().join(", "))
    }
}

/// The centers `p·v^k` for `p` in `bases` and `|k| ≤ max_exp`, ordered by `p` then `k`.
pub fn center_grid<F: Field>(bases: &[i64], max_exp: i64, q: &QuantumParam<F>) -> Vec<F> {
    bases
        .iter()
        .flat_map(|&p| (-max_exp..=max_exp).map(move |k| F::from_i64(p) * &q.v_pow(k)))
        .collect()
}

/// Every multisegment of total length `r` with centers drawn (with
/// repetition) from `grid` and lengths at most `max_len`.
///
/// The grid is deduplicated first; output order is deterministic.
pub fn enumerate_multisegments<F: Field>(
    grid: &[F],
    r: usize,
    max_len: Option<usize>,
) -> Vec<Multisegment<F>> {
    let grid: Vec<F> = grid.iter().cloned().unique().collect();
    let mut out = Vec::new();
    for mu in super::partitions(r) {
        if max_len.is_some_and(|n| mu.parts().first().is_some_and(|&m| m > n)) {
            continue;
        }
        // For each distinct length, choose a multiset of centers.
        let groups: Vec<(usize, usize)> = mu
            .parts()
            .iter()
            .copied()
            .dedup_with_count()
            .map(|(c, len)| (len, c))
            .collect();
        let choices: Vec<Vec<Vec<F>>> = groups
            .iter()
            .map(|&(_, mult)| {
                grid.iter()
                    .cloned()
                    .combinations_with_replacement(mult)
                    .collect()
            })
            .collect();
        for pick in choices.iter().multi_cartesian_product() {
            let segs = groups
                .iter()
                .zip(pick)
                .flat_map(|(&(len, _), centers)| {
                    centers
                        .iter()
                        .map(move |c| Segment { center: c.clone(), length: len })
                })
                .collect();
            out.push(Multisegment::new(segs));
        }
    }
    out
}
