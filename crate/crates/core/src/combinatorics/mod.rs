//! Partitions, compositions, the symmetric group, index tuples and
//! segment combinatorics.

mod partition;
mod permutation;
mod segment;

pub use partition::{compositions, partitions, Composition, Partition};
pub use permutation::{place_permutation, Permutation};
pub use segment::{center_grid, enumerate_multisegments, Multisegment, Segment, SegmentSpec};

/// Residue weight of an index tuple: `λ_j = #{ k : i_k ≡ j (mod n) }`
/// with representatives `j ∈ [1, n]`.
pub fn residue_weight(i: &[i64], n: usize) -> Composition {
    let mut w = vec![0; n];
    for &x in i {
        w[residue(x, n) - 1] += 1;
    }
    Composition(w)
}

/// Representative of `x mod n` in `[1, n]`.
pub fn residue(x: i64, n: usize) -> usize {
    ((x - 1).rem_euclid(n as i64) + 1) as usize
}

/// Whether every entry lies in `[1, n]`, i.e. `i ∈ I(n, r)`.
pub fn in_finite_window(i: &[i64], n: usize) -> bool {
    i.iter().all(|&x| x >= 1 && x <= n as i64)
}

/// `I(n, r)` in lexicographic order.
pub fn finite_index_tuples(n: usize, r: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(r)];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=n as i64).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}
