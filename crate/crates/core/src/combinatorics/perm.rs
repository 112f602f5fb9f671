use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// A permutation of `{1..n}` acting on the right, stored in one-line form.
///
/// `apply(j)` is `j·w`, and composition follows `j·(wv) = (j·w)·v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    img: Vec<u8>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = crate::error::Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line()
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { img: (0..n as u8).collect() }
    }

    /// Builds from 1-based one-line notation `[1·w, 2·w, ..., n·w]`.
    pub fn from_one_line(line: &[usize]) -> Result<Self> {
        let n = line.len();
        if n > 255 {
            return invalid("permutations are limited to 255 letters");
        }
        let mut seen = vec![false; n];
        for &v in line {
            if v == 0 || v > n || seen[v - 1] {
                return invalid(format!("{line:?} is not a permutation of 1..{n}"));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { img: line.iter().map(|&v| (v - 1) as u8).collect() })
    }

    pub(crate) fn from_zero_based(img: Vec<u8>) -> Self {
        Permutation { img }
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    /// Product `s_{i_1} s_{i_2} ... s_{i_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p = Permutation::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return invalid(format!("s_{i} is not a simple transposition of S_{n}"));
            }
            p.right_mul_simple(i);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, j: usize) -> usize {
        self.img[j - 1] as usize + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[u8] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(j, &v)| j == v as usize)
    }

    /// `self · other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation { img: self.img.iter().map(|&v| other.img[v as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (j, &v) in self.img.iter().enumerate() {
            inv[v as usize] = j as u8;
        }
        Permutation { img: inv }
    }

    /// Replaces `w` by `w·s_i`, which swaps the values `i` and `i+1` in one-line form.
    pub fn right_mul_simple(&mut self, i: usize) {
        let (a, b) = ((i - 1) as u8, i as u8);
        for v in self.img.iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }

    /// Number of inversions, which equals the Coxeter length.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for j in 0..self.img.len() {
            for k in j + 1..self.img.len() {
                if self.img[j] > self.img[k] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The inversion set `N(w) = {(j,k) : j < k, j·w > k·w}`, 1-based.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.img.len() {
            for k in j + 1..self.img.len() {
                if self.img[j] > self.img[k] {
                    out.push((j + 1, k + 1));
                }
            }
        }
        out
    }

    /// A reduced word `[i_1, ..., i_k]` with `w = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut w = self.clone();
        let mut pos = vec![0usize; n];
        let mut rev = Vec::with_capacity(self.length());
        loop {
            for (j, &v) in w.img.iter().enumerate() {
                pos[v as usize] = j;
            }
            // right descent: value i+1 sits left of value i
            match (1..n).find(|&i| pos[i - 1] > pos[i]) {
                Some(i) => {
                    w.right_mul_simple(i);
                    rev.push(i);
                }
                None => break,
            }
        }
        rev.reverse();
        rev
    }

    /// Disjoint cycle notation, omitting fixed points; the identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.img[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cyc.push((j + 1).to_string());
                j = self.img[j] as usize;
            }
            out.push('(');
            out.push_str(&cyc.join(","));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// All permutations of `{1..n}` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Permutation { img: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}
