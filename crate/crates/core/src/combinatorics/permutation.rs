use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// A permutation of `{1, …, r}` in one-line (window) notation.
///
/// Products compose as functions: `(w·u)(k) = w(u(k))`. The simple
/// transposition `s_i` swaps `i` and `i+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// 0-based images: `img[k] = w(k+1) - 1`.
    img: Vec<u8>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Self { img: (0..r as u8).collect() }
    }

    /// Simple transposition `s_i` in `𝔖_r`, `1 ≤ i < r`.
    pub fn simple(i: usize, r: usize) -> Self {
        assert!(i >= 1 && i < r, "s_{i} not in S_{r}");
        let mut w = Self::identity(r);
        w.img.swap(i - 1, i);
        w
    }

    /// From a 1-based window; `None` unless it is a bijection of `{1..r}`.
    pub fn from_window(window: &[usize]) -> Option<Self> {
        let r = window.len();
        let mut seen = vec![false; r];
        for &x in window {
            if x == 0 || x > r || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
        }
        Some(Self { img: window.iter().map(|&x| (x - 1) as u8).collect() })
    }

    /// Product of simple transpositions `s_{i_1} ⋯ s_{i_m}`.
    pub fn from_word(word: &[usize], r: usize) -> Self {
        word.iter()
            .fold(Self::identity(r), |w, &i| w.right_mul_simple(i))
    }

    pub fn window(&self) -> Vec<usize> {
        self.img.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn rank(&self) -> usize {
        self.img.len()
    }

    /// `w(k)` for 1-based `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.img[k - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(k, &x)| k == x as usize)
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        self.img
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count()
    }

    pub fn inverse(&self) -> Self {
        let mut img = vec![0u8; self.img.len()];
        for (k, &x) in self.img.iter().enumerate() {
            img[x as usize] = k as u8;
        }
        Self { img }
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank());
        Self { img: other.img.iter().map(|&k| self.img[k as usize]).collect() }
    }

    /// `w·s_i` (swaps window positions `i`, `i+1`).
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.img.swap(i - 1, i);
        w
    }

    /// `s_i·w` (swaps the values `i`, `i+1`).
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let (a, b) = ((i - 1) as u8, i as u8);
        Self {
            img: self
                .img
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        }
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.img[i - 1] > self.img[i]
    }

    /// `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.img[i - 1] > inv.img[i]
    }

    /// A reduced word `(i_1, …, i_m)` with `w = s_{i_1} ⋯ s_{i_m}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        // Strip right descents; they come off the end of the word.
        'outer: while !w.is_identity() {
            for i in 1..w.rank() {
                if w.has_right_descent(i) {
                    word.push(i);
                    w = w.right_mul_simple(i);
                    continue 'outer;
                }
            }
            unreachable!("non-identity permutation without descent");
        }
        word.reverse();
        word
    }

    /// All of `𝔖_r` in lexicographic window order.
    pub fn all(r: usize) -> Vec<Self> {
        (0..r as u8)
            .permutations(r)
            .map(|img| Self { img })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window().iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.window().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Vec::<usize>::deserialize(d)?;
        Self::from_window(&w).ok_or_else(|| serde::de::Error::custom("not a permutation window"))
    }
}

/// Place permutation `i·w = (i_{w(1)}, …, i_{w(r)})`, a right action.
pub fn place_permutation<T: Clone>(i: &[T], w: &Permutation) -> Vec<T> {
    assert_eq!(i.len(), w.rank());
    (1..=w.rank()).map(|k| i[w.apply(k) - 1].clone()).collect()
}
