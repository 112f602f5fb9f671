//! Exact linear algebra: Bareiss elimination, nullspaces, echelon reports for parametric
//! systems and an incremental sparse echelon basis with combination tracking.

use std::hash::Hash;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rustc_hash::FxHashMap;

use super::poly::MultiPoly;
use super::ratfunc::RatFunc;
use super::scalar::Scalar;

/// Brings `m` to row echelon form in place by fraction-free (Bareiss) elimination and
/// returns the pivot positions `(row, col)`.
///
/// Every division performed is exact in an integral domain; a failed exact division is a
/// bug in the coefficient ring and panics.
pub fn bareiss_echelon<S: Scalar>(m: &mut [Vec<S>]) -> Vec<(usize, usize)> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut prev = S::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].weight()) else {
            continue;
        };
        m.swap(r, p);
        let (head, tail) = m.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let v = prow[c].mul_ref(&row[j]) - f.mul_ref(&prow[j]);
                row[j] = v.exact_div(&prev).expect("inexact Bareiss division");
            }
            row[c] = S::zero();
        }
        // rows above keep their entries; rows below the pivot are now zero in column c
        prev = m[r][c].clone();
        pivots.push((r, c));
        r += 1;
    }
    pivots
}

pub fn rank<S: Scalar>(m: &[Vec<S>]) -> usize {
    let mut w = m.to_vec();
    bareiss_echelon(&mut w).len()
}

/// A basis of the right nullspace `{v : m·v = 0}` over a field, one vector per free
/// column with that column set to 1.
pub fn nullspace<S: Scalar>(m: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    let mut w = m.to_vec();
    let pivots = bareiss_echelon(&mut w);
    let pivot_cols: Vec<usize> = pivots.iter().map(|p| p.1).collect();
    let mut out = Vec::new();
    for f in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![S::zero(); ncols];
        v[f] = S::one();
        for &(r, c) in pivots.iter().rev() {
            let mut acc = S::zero();
            for j in c + 1..ncols {
                if !v[j].is_zero() && !w[r][j].is_zero() {
                    acc += &w[r][j].mul_ref(&v[j]);
                }
            }
            v[c] = (-acc).exact_div(&w[r][c]).expect("nullspace requires a field");
        }
        out.push(v);
    }
    out
}

pub fn mat_vec<S: Scalar>(m: &[Vec<S>], v: &[S]) -> Vec<S> {
    m.iter()
        .map(|row| {
            let mut acc = S::zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc += &a.mul_ref(b);
                }
            }
            acc
        })
        .collect()
}

/// Positive rational gcd of the contents of a row of polynomials.
fn row_content(row: &[MultiPoly]) -> Option<BigRational> {
    let mut acc: Option<BigRational> = None;
    for p in row.iter().filter(|p| !p.is_zero()) {
        let c = p.content().abs();
        acc = Some(match acc {
            None => c,
            Some(a) => {
                use num_integer::Integer;
                let n = a.numer().gcd(c.numer());
                let d = a.denom().lcm(c.denom());
                BigRational::new(n, d)
            }
        });
    }
    acc
}

/// Divides a polynomial row by its rational content and by the largest power of `q`
/// dividing every entry. Both are units, so the zero set of the row is unchanged.
pub fn strip_row(row: &mut [MultiPoly]) {
    let Some(c) = row_content(row) else { return };
    let lo = row.iter().filter_map(|p| p.q_range()).map(|r| r.0).min().unwrap_or(0);
    let inv = c.recip();
    for p in row.iter_mut() {
        *p = p.scale(&inv).shift_q(-lo);
    }
}

/// Row echelon form of a parametric system with denominators cleared and rows stripped of
/// content, together with the pivot entries.
#[derive(Clone, Debug)]
pub struct EchelonReport {
    pub rows: Vec<Vec<MultiPoly>>,
    pub pivots: Vec<(usize, usize)>,
    pub ncols: usize,
}

impl EchelonReport {
    pub fn pivot_polys(&self) -> Vec<MultiPoly> {
        self.pivots.iter().map(|&(r, c)| self.rows[r][c].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Multiplies a row of rational functions by the product of its distinct denominators.
pub fn clear_denominators(row: &[RatFunc]) -> Vec<MultiPoly> {
    let mut dens: Vec<MultiPoly> = Vec::new();
    let idx: Vec<usize> = row
        .iter()
        .map(|x| match dens.iter().position(|d| d == x.den()) {
            Some(i) => i,
            None => {
                dens.push(x.den().clone());
                dens.len() - 1
            }
        })
        .collect();
    row.iter()
        .zip(idx)
        .map(|(x, i)| {
            let mut p = x.num().clone();
            for (k, d) in dens.iter().enumerate() {
                if k != i {
                    p = p * d;
                }
            }
            p
        })
        .collect()
}

pub fn echelon_report(m: &[Vec<RatFunc>], ncols: usize) -> EchelonReport {
    let mut rows: Vec<Vec<MultiPoly>> = m.iter().map(|r| clear_denominators(r)).collect();
    for r in rows.iter_mut() {
        strip_row(r);
    }
    let pivots = bareiss_echelon(&mut rows);
    rows.truncate(pivots.len());
    for r in rows.iter_mut() {
        strip_row(r);
    }
    EchelonReport { rows, pivots, ncols }
}

/// One stored row: its sparse entries and, optionally, its expression in the inserted
/// vectors.
#[derive(Clone, Debug)]
struct Row<K, S> {
    entries: FxHashMap<K, S>,
    comb: FxHashMap<usize, S>,
}

/// Incrementally maintained basis of a span of sparse vectors in reduced echelon form:
/// every pivot key occurs in exactly one stored row.
///
/// Over a field every pivot is a unit. Over a ring the pivot with the smallest weight among
/// units is preferred, and otherwise elimination is fraction-free.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K, S> {
    rows: Vec<Row<K, S>>,
    pivots: FxHashMap<K, usize>,
    track: bool,
    inputs: usize,
}

/// Result of expressing a vector in the inserted vectors: `scale·v = Σ comb_i·input_i`.
#[derive(Clone, Debug)]
pub struct Expression<S> {
    pub scale: S,
    pub comb: Vec<(usize, S)>,
}

fn axpy<K: Hash + Eq + Clone, S: Scalar>(v: &mut FxHashMap<K, S>, f: &S, x: &FxHashMap<K, S>) {
    for (k, c) in x {
        let t = f.mul_ref(c);
        match v.get_mut(k) {
            Some(e) => {
                *e -= &t;
                if e.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                v.insert(k.clone(), -t);
            }
        }
    }
}

fn scale_map<K: Hash + Eq + Clone, S: Scalar>(v: &mut FxHashMap<K, S>, f: &S) {
    for e in v.values_mut() {
        *e = f.mul_ref(e);
    }
}

impl<K: Hash + Eq + Clone, S: Scalar> SparseEchelon<K, S> {
    pub fn new(track: bool) -> Self {
        SparseEchelon { rows: Vec::new(), pivots: FxHashMap::default(), track, inputs: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    /// `v ← p·v − c·R` or `v ← v − (c/p)·R`, applied alongside the combination.
    fn eliminate(&self, v: &mut FxHashMap<K, S>, comb: &mut FxHashMap<usize, S>, scale: &mut S, key: &K) {
        let ri = self.pivots[key];
        let row = &self.rows[ri];
        let Some(c) = v.get(key).cloned() else { return };
        let p = &row.entries[key];
        match p.try_inv() {
            Some(pinv) => {
                let f = c * &pinv;
                axpy(v, &f, &row.entries);
                if self.track {
                    axpy(comb, &(-f), &row.comb);
                }
            }
            None => {
                scale_map(v, p);
                axpy(v, &c, &row.entries);
                if self.track {
                    scale_map(comb, p);
                    axpy(comb, &(-c), &row.comb);
                }
                *scale = p.mul_ref(scale);
            }
        }
        v.remove(key);
    }

    fn reduce_full(&self, mut v: FxHashMap<K, S>) -> (FxHashMap<K, S>, FxHashMap<usize, S>, S) {
        let mut comb = FxHashMap::default();
        let mut scale = S::one();
        let keys: Vec<K> = v.keys().filter(|k| self.pivots.contains_key(*k)).cloned().collect();
        for k in keys {
            self.eliminate(&mut v, &mut comb, &mut scale, &k);
        }
        (v, comb, scale)
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: impl IntoIterator<Item = (K, S)>) -> bool {
        let v: FxHashMap<K, S> = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        self.reduce_full(v).0.is_empty()
    }

    /// Inserts `v` as input number `self.inputs()`; returns whether the rank grew.
    pub fn insert(&mut self, v: impl IntoIterator<Item = (K, S)>) -> bool {
        let id = self.inputs;
        self.inputs += 1;
        let v: FxHashMap<K, S> = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let (mut res, comb, scale) = self.reduce_full(v);
        if res.is_empty() {
            return false;
        }
        let mut comb = if self.track {
            let mut c: FxHashMap<usize, S> = comb.into_iter().map(|(k, x)| (k, -x)).collect();
            c.insert(id, scale);
            c
        } else {
            FxHashMap::default()
        };
        let key = res
            .iter()
            .min_by_key(|(_, c)| (!c.is_unit(), c.weight()))
            .map(|(k, _)| k.clone())
            .expect("nonempty residual");
        if let Some(inv) = res[&key].try_inv() {
            scale_map(&mut res, &inv);
            if self.track {
                scale_map(&mut comb, &inv);
            }
        }
        let new = Row { entries: res, comb };
        // keep the echelon reduced: clear the new pivot from every older row
        for i in 0..self.rows.len() {
            let Some(c) = self.rows[i].entries.get(&key).cloned() else { continue };
            let p = &new.entries[&key];
            let row = &mut self.rows[i];
            match p.try_inv() {
                Some(pinv) => {
                    let f = c * &pinv;
                    axpy(&mut row.entries, &f, &new.entries);
                    if self.track {
                        axpy(&mut row.comb, &f, &new.comb);
                    }
                }
                None => {
                    scale_map(&mut row.entries, p);
                    axpy(&mut row.entries, &c, &new.entries);
                    if self.track {
                        scale_map(&mut row.comb, p);
                        axpy(&mut row.comb, &c, &new.comb);
                    }
                }
            }
            row.entries.remove(&key);
        }
        self.pivots.insert(key.clone(), self.rows.len());
        self.rows.push(new);
        true
    }

    /// Expresses `v` in the inserted vectors, or `None` when it lies outside the span.
    /// Requires combination tracking.
    pub fn express(&self, v: impl IntoIterator<Item = (K, S)>) -> Option<Expression<S>> {
        assert!(self.track, "express requires combination tracking");
        let v: FxHashMap<K, S> = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let (res, comb, scale) = self.reduce_full(v);
        if !res.is_empty() {
            return None;
        }
        let mut comb: Vec<(usize, S)> = comb.into_iter().collect();
        comb.sort_by_key(|x| x.0);
        Some(Expression { scale, comb })
    }

    /// Stored basis rows as sparse vectors.
    pub fn basis(&self) -> Vec<Vec<(K, S)>> {
        self.rows.iter().map(|r| r.entries.iter().map(|(k, c)| (k.clone(), c.clone())).collect()).collect()
    }
}
