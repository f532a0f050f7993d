//! Permutations of `{0, …, m-1}` and reduced words in simple transpositions.
//!
//! All indices are zero-based: the simple transposition `s_c` swaps `c` and
//! `c + 1`.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation stored by its images: `σ(a) = images[a]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm((0..m).collect())
    }

    /// Validated construction from zero-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// From one-line notation with one-based entries, e.g. `[2, 1, 3]`.
    pub fn from_one_line(entries: &[usize]) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{entries:?}")));
        }
        Self::from_images(entries.iter().map(|x| x - 1).collect())
    }

    /// The simple transposition `s_c` in `S_m`.
    pub fn simple(m: usize, c: usize) -> Self {
        assert!(c + 1 < m, "s_{c} does not exist in S_{m}");
        let mut v: Vec<usize> = (0..m).collect();
        v.swap(c, c + 1);
        Perm(v)
    }

    /// The transposition of `a` and `b`.
    pub fn transposition(m: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..m).collect();
        v.swap(a, b);
        Perm(v)
    }

    /// `s_{w_0} ∘ s_{w_1} ∘ …`.
    pub fn from_word(m: usize, word: &[usize]) -> Self {
        word.iter()
            .fold(Self::identity(m), |acc, &c| acc.compose(&Self::simple(m, c)))
    }

    pub fn longest(m: usize) -> Self {
        Perm((0..m).rev().collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, a: usize) -> usize {
        self.0[a]
    }

    /// `(self ∘ other)(a) = self(other(a))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.size(), other.size(), "composing permutations of different size");
        Perm(other.0.iter().map(|&a| self.0[a]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.size()];
        for (a, &b) in self.0.iter().enumerate() {
            v[b] = a;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(a, &b)| a == b)
    }

    /// Pairs `a < b` with `σ(a) > σ(b)`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let m = self.size();
        let mut out = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                if self.0[a] > self.0[b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn length(&self) -> usize {
        self.inversions().len()
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Relabels a sequence: `(σ·x)_{σ(a)} = x_a`, i.e. `(σ·x)_a = x_{σ^{-1}(a)}`.
    pub fn act_on<T: Clone>(&self, labels: &[T]) -> Vec<T> {
        let inv = self.inverse();
        (0..self.size()).map(|a| labels[inv.0[a]].clone()).collect()
    }

    /// Indices `c` with `ℓ(s_c σ) < ℓ(σ)`, i.e. `c + 1` precedes `c` in the
    /// one-line notation.
    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (0..self.size().saturating_sub(1))
            .filter(|&c| inv.0[c] > inv.0[c + 1])
            .collect()
    }

    /// The lexicographically smallest reduced word `[c_1, …, c_K]` with
    /// `σ = s_{c_1} ∘ … ∘ s_{c_K}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let m = self.size();
        let mut word = Vec::new();
        let mut cur = self.clone();
        while let Some(&c) = cur.left_descents().first() {
            word.push(c);
            cur = Perm::simple(m, c).compose(&cur);
        }
        word
    }

    /// Every reduced word, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        let m = self.size();
        let descents = self.left_descents();
        if descents.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for c in descents {
            for tail in Perm::simple(m, c).compose(self).reduced_words() {
                let mut w = vec![c];
                w.extend(tail);
                out.push(w);
            }
        }
        out
    }

    /// All permutations of `m` letters in lexicographic order of images.
    pub fn all(m: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..m).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    /// One-based one-line notation, e.g. `[2,1,3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Sign of the permutation sorting `items` into increasing order (items
/// must be distinct).
pub fn sorting_sign(items: &[usize]) -> i64 {
    let mut inv = 0usize;
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if items[i] > items[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}
