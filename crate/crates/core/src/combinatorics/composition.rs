use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// An `r`-multicomposition of `n`: a sequence of `r` compositions.
///
/// Components and rows are addressed 1-indexed. Trailing zero rows are kept
/// as stored but ignored by equality, hashing, ordering and dominance.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Multicomposition {
    comps: Vec<Vec<usize>>,
}

/// A multicomposition whose components are all partitions. Kept as an alias:
/// the predicate [`Multicomposition::is_multipartition`] is checked where it
/// matters.
pub type Multipartition = Multicomposition;

/// A node `(row, col, comp)` of a diagram, all 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Node { comp, row, col }
    }
}

impl TryFrom<Vec<Vec<usize>>> for Multicomposition {
    type Error = Error;
    fn try_from(comps: Vec<Vec<usize>>) -> Result<Self> {
        Multicomposition::new(comps)
    }
}

impl From<Multicomposition> for Vec<Vec<usize>> {
    fn from(m: Multicomposition) -> Self {
        m.comps
    }
}

impl Multicomposition {
    pub fn new(comps: Vec<Vec<usize>>) -> Result<Self> {
        if comps.is_empty() {
            return invalid("a multicomposition needs at least one component");
        }
        Ok(Multicomposition { comps })
    }

    /// Single-component convenience constructor.
    pub fn from_composition(parts: Vec<usize>) -> Self {
        Multicomposition { comps: vec![parts] }
    }

    pub fn r(&self) -> usize {
        self.comps.len()
    }

    pub fn size(&self) -> usize {
        self.comps.iter().flatten().sum()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.comps
    }

    /// Component `k` (1-indexed) as stored.
    pub fn component(&self, k: usize) -> &[usize] {
        &self.comps[k - 1]
    }

    /// `|λ^{(k)}|`; zero for `k = 0` or `k > r`.
    pub fn comp_size(&self, k: usize) -> usize {
        if k == 0 || k > self.r() {
            0
        } else {
            self.comps[k - 1].iter().sum()
        }
    }

    /// `λ^{(k)}_i`, zero outside the stored range.
    pub fn part(&self, k: usize, i: usize) -> usize {
        if k == 0 || i == 0 || k > self.r() {
            return 0;
        }
        self.comps[k - 1].get(i - 1).copied().unwrap_or(0)
    }

    /// `ρ_k(λ)`, the number of rows of component `k` once trailing zeros are dropped.
    pub fn rows(&self, k: usize) -> usize {
        if k == 0 || k > self.r() {
            return 0;
        }
        let c = &self.comps[k - 1];
        c.len() - c.iter().rev().take_while(|&&p| p == 0).count()
    }

    /// `λ̄_{(s)}`: total size of the components before `s`.
    pub fn prefix(&self, s: usize) -> usize {
        (1..s).map(|j| self.comp_size(j)).sum()
    }

    /// `λ̄_{(k,s)}`: size of the components before `s` plus the first `k` rows of `s`.
    pub fn prefix_row(&self, k: usize, s: usize) -> usize {
        self.prefix(s) + (1..=k).map(|i| self.part(s, i)).sum::<usize>()
    }

    pub fn is_multipartition(&self) -> bool {
        self.comps.iter().all(|c| c.windows(2).all(|w| w[0] >= w[1]))
    }

    /// Copy with trailing zero rows removed from every component.
    pub fn normalized(&self) -> Multicomposition {
        let comps = (1..=self.r())
            .map(|k| self.comps[k - 1][..self.rows(k)].to_vec())
            .collect();
        Multicomposition { comps }
    }

    fn key(&self) -> Vec<&[usize]> {
        (1..=self.r()).map(|k| &self.comps[k - 1][..self.rows(k)]).collect()
    }

    /// Iterates the nodes in reading order: component, then row, then column.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.comps.iter().enumerate().flat_map(|(k, c)| {
            c.iter().enumerate().flat_map(move |(i, &len)| {
                (1..=len).map(move |j| Node::new(i + 1, j, k + 1))
            })
        })
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.part(node.comp, node.row)
    }

    /// `λ ⊴ μ` with `self = λ`. Both must have the same size and `r`.
    pub fn is_dominated_by(&self, mu: &Multicomposition) -> bool {
        debug_assert_eq!(self.r(), mu.r());
        let mut before_l = 0usize;
        let mut before_m = 0usize;
        for l in 1..=self.r() {
            let depth = self.rows(l).max(mu.rows(l));
            let (mut sl, mut sm) = (before_l, before_m);
            for j in 1..=depth {
                sl += self.part(l, j);
                sm += mu.part(l, j);
                if sl > sm {
                    return false;
                }
            }
            before_l += self.comp_size(l);
            before_m += mu.comp_size(l);
            if before_l > before_m {
                return false;
            }
        }
        true
    }

    /// `λ ◁ μ`.
    pub fn is_strictly_dominated_by(&self, mu: &Multicomposition) -> bool {
        self != mu && self.is_dominated_by(mu)
    }

    /// `α(λ)`: the rows of all components stacked into one composition.
    pub fn stack(&self) -> Vec<usize> {
        (1..=self.r())
            .flat_map(|k| self.comps[k - 1][..self.rows(k)].iter().copied())
            .collect()
    }

    /// Number of stacked rows above component `v`, i.e. `ρ_1 + ... + ρ_{v-1}`.
    pub fn stacked_offset(&self, v: usize) -> usize {
        (1..v).map(|k| self.rows(k)).sum()
    }

    /// The index sets `def(λ, 𝔡)` and `def(λ, 𝔩)`.
    pub fn def_sets(&self) -> (Vec<(usize, usize, usize)>, Vec<usize>) {
        let mut d = Vec::new();
        for s in 1..=self.r() {
            for dd in 1..self.rows(s) {
                for t in 1..=self.part(s, dd + 1) {
                    d.push((s, dd, t));
                }
            }
        }
        let l = (1..self.r()).filter(|&s| self.comp_size(s + 1) > 0).collect();
        (d, l)
    }

    /// `λ·𝔡^{(s)}_{d,t}`: raise the last `t` nodes of row `d+1` of component `s` to row `d`.
    pub fn shape_after_d(&self, s: usize, d: usize, t: usize) -> Result<Multicomposition> {
        if !self.def_sets().0.contains(&(s, d, t)) {
            return Err(Error::InvalidIndex(format!("({s},{d},{t}) is not in def({self},𝔡)")));
        }
        let mut out = self.clone();
        out.comps[s - 1][d - 1] += t;
        out.comps[s - 1][d] -= t;
        Ok(out)
    }

    /// `λ·𝔩^{(s')}`: move the last node of the first row of component `s'+1` to a new
    /// single-node row at the bottom of component `s'`.
    pub fn shape_after_l(&self, sp: usize) -> Result<Multicomposition> {
        if !self.def_sets().1.contains(&sp) {
            return Err(Error::InvalidIndex(format!("{sp} is not in def({self},𝔩)")));
        }
        let mut out = self.normalized();
        out.comps[sp - 1].push(1);
        out.comps[sp][0] -= 1;
        Ok(out)
    }

    /// All `r`-multipartitions of `n`, sorted.
    pub fn multipartitions(n: usize, r: usize) -> Vec<Multipartition> {
        let mut out = Vec::new();
        let mut cur = vec![Vec::new(); r];
        fill_components(n, 0, &mut cur, &mut out);
        out.sort();
        out
    }
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn fill_components(
    remaining: usize,
    k: usize,
    cur: &mut Vec<Vec<usize>>,
    out: &mut Vec<Multipartition>,
) {
    if k + 1 == cur.len() {
        for p in partitions(remaining, remaining) {
            cur[k] = p;
            out.push(Multicomposition { comps: cur.clone() });
        }
        return;
    }
    for size in 0..=remaining {
        for p in partitions(size, size) {
            cur[k] = p;
            fill_components(remaining - size, k + 1, cur, out);
        }
    }
}

/// `dominates(λ, μ)`: true when `λ ⊴ μ`.
pub fn dominates(lambda: &Multicomposition, mu: &Multicomposition) -> Result<bool> {
    if lambda.r() != mu.r() || lambda.size() != mu.size() {
        return invalid(format!("cannot compare {lambda} and {mu}: size or r differs"));
    }
    Ok(lambda.is_dominated_by(mu))
}

impl PartialEq for Multicomposition {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Multicomposition {}

impl Hash for Multicomposition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl PartialOrd for Multicomposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Multicomposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Multicomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.comps.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Multicomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand used heavily in tests: `mc(&[&[2, 2], &[2, 1]])`.
pub fn mc(comps: &[&[usize]]) -> Multicomposition {
    Multicomposition::new(comps.iter().map(|c| c.to_vec()).collect()).expect("non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominance_examples() {
        assert!(dominates(&mc(&[&[2, 2], &[2, 1]]), &mc(&[&[5], &[2]])).unwrap());
        assert!(dominates(&mc(&[&[2, 1]]), &mc(&[&[2, 1]])).unwrap());
        assert!(dominates(&mc(&[&[1, 1], &[1]]), &mc(&[&[3], &[]])).unwrap());
        assert!(!dominates(&mc(&[&[3], &[]]), &mc(&[&[1, 1], &[1]])).unwrap());
        assert!(dominates(&mc(&[&[3]]), &mc(&[&[2], &[1]])).is_err());
    }

    #[test]
    fn def_sets_match_definitions() {
        let lambda = mc(&[&[2, 2], &[2, 1]]);
        let (d, l) = lambda.def_sets();
        assert_eq!(d, vec![(1, 1, 1), (1, 1, 2), (2, 1, 1)]);
        assert_eq!(l, vec![1]);
        let (d, l) = mc(&[&[4]]).def_sets();
        assert!(d.is_empty() && l.is_empty());
        let big = mc(&[&[3, 1], &[2, 2], &[2, 1, 1]]);
        let (d, l) = big.def_sets();
        assert_eq!(d, vec![(1, 1, 1), (2, 1, 1), (2, 1, 2), (3, 1, 1), (3, 2, 1)]);
        assert_eq!(l, vec![1, 2]);
    }

    #[test]
    fn shape_moves() {
        let lambda = mc(&[&[3, 1], &[2, 2], &[2, 1, 1]]);
        assert_eq!(lambda.shape_after_d(2, 1, 2).unwrap(), mc(&[&[3, 1], &[4], &[2, 1, 1]]));
        let moved = lambda.shape_after_l(1).unwrap();
        assert_eq!(moved, mc(&[&[3, 1, 1], &[1, 2], &[2, 1, 1]]));
        assert_eq!(moved.component(2), &[1, 2]);
        assert_eq!(mc(&[&[1, 1]]).shape_after_d(1, 1, 1).unwrap(), mc(&[&[2]]));
        assert!(matches!(lambda.shape_after_d(1, 1, 0), Err(Error::InvalidIndex(_))));
        assert!(matches!(lambda.shape_after_l(3), Err(Error::InvalidIndex(_))));
    }

    #[test]
    fn stacking_and_prefixes() {
        let mu = mc(&[&[3, 2], &[2, 1, 1]]);
        assert_eq!(mu.stack(), vec![3, 2, 2, 1, 1]);
        let nu = mc(&[&[3, 1], &[2, 2], &[2, 1, 1]]);
        assert_eq!(nu.prefix(1), 0);
        assert_eq!(nu.prefix(3), 8);
        assert_eq!(nu.prefix_row(1, 2), 6);
        assert_eq!(nu.prefix_row(0, 2), 4);
    }

    #[test]
    fn multipartition_counts() {
        // bipartitions of 3: sum_{k} p(k) p(3-k) = 3 + 2 + 2 + 3
        assert_eq!(Multicomposition::multipartitions(3, 2).len(), 10);
        assert_eq!(Multicomposition::multipartitions(4, 1).len(), 5);
        assert_eq!(Multicomposition::multipartitions(2, 3).len(), 9);
    }

    #[test]
    fn trailing_zeros_ignored_by_equality() {
        let a = Multicomposition::new(vec![vec![2, 0], vec![1]]).unwrap();
        assert_eq!(a, mc(&[&[2], &[1]]));
        assert_eq!(a.rows(1), 1);
        assert_eq!(a.component(1), &[2, 0]);
    }
}
