use crate::combinatorics::Permutation;

/// Maximum `n` supported by the packed representation.
pub const MAX_N: usize = 16;
/// Maximum `r` supported by the packed representation.
pub const MAX_R: usize = 8;

/// A basis label `L_1^{a_1}⋯L_n^{a_n} T_w`, packed four bits per position: `l` holds the
/// exponents and `w` the zero-based one-line form of `w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Label {
    pub(crate) l: u64,
    pub(crate) w: u64,
}

#[inline]
pub(crate) fn nib(x: u64, j: usize) -> u8 {
    ((x >> (4 * j)) & 0xf) as u8
}

#[inline]
pub(crate) fn set_nib(x: u64, j: usize, v: u8) -> u64 {
    (x & !(0xf << (4 * j))) | ((v as u64) << (4 * j))
}

#[inline]
pub(crate) fn swap_nibs(x: u64, i: usize, j: usize) -> u64 {
    let a = nib(x, i);
    let b = nib(x, j);
    set_nib(set_nib(x, i, b), j, a)
}

pub(crate) fn identity_w(n: usize) -> u64 {
    (0..n).fold(0, |acc, j| set_nib(acc, j, j as u8))
}

/// Position of value `v` in a packed one-line form.
#[inline]
pub(crate) fn pos_of(w: u64, v: u8, n: usize) -> usize {
    (0..n).find(|&j| nib(w, j) == v).expect("value present in permutation")
}

pub(crate) fn pack(v: &[u8]) -> u64 {
    v.iter().enumerate().fold(0, |acc, (j, &x)| set_nib(acc, j, x))
}

pub(crate) fn unpack(x: u64, n: usize) -> Vec<u8> {
    (0..n).map(|j| nib(x, j)).collect()
}

pub(crate) fn w_perm(w: u64, n: usize) -> Permutation {
    Permutation::from_zero_based(unpack(w, n))
}

pub(crate) fn perm_w(p: &Permutation) -> u64 {
    pack(p.zero_based())
}

pub(crate) fn w_inverse(w: u64, n: usize) -> u64 {
    (0..n).fold(0, |acc, j| set_nib(acc, nib(w, j) as usize, j as u8))
}

impl Label {
    pub fn new(exps: &[u8], w: &Permutation) -> Self {
        Label { l: pack(exps), w: perm_w(w) }
    }

    pub(crate) fn raw(l: u64, w: u64) -> Self {
        Label { l, w }
    }

    /// Exponent of `L_k`, `k` 1-indexed.
    pub fn exponent(&self, k: usize) -> u8 {
        nib(self.l, k - 1)
    }

    pub fn exponents(&self, n: usize) -> Vec<u8> {
        unpack(self.l, n)
    }

    pub fn perm(&self, n: usize) -> Permutation {
        w_perm(self.w, n)
    }

    pub fn l_degree(&self, n: usize) -> usize {
        (0..n).map(|j| nib(self.l, j) as usize).sum()
    }

    pub fn is_pure_t(&self) -> bool {
        self.l == 0
    }
}
