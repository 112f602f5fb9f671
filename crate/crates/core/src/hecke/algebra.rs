use std::collections::hash_map::Entry;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use rustc_hash::FxHashMap;

use super::label::{identity_w, nib, pack, perm_w, pos_of, set_nib, swap_nibs, w_inverse, w_perm, Label, MAX_N, MAX_R};
use crate::coeff::{Mode, Scalar};
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

pub(crate) type Terms<S> = FxHashMap<Label, S>;

/// L-exponent vectors with room for the temporary overflow met during reduction.
type Exps = [u8; MAX_N];

#[inline]
pub(crate) fn acc<S: Scalar>(m: &mut Terms<S>, k: Label, c: S) {
    if c.is_zero() {
        return;
    }
    match m.entry(k) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

fn acc_scaled<S: Scalar>(m: &mut Terms<S>, src: &Terms<S>, f: &S) {
    for (k, c) in src {
        acc(m, *k, f.mul_ref(c));
    }
}

fn exps_of(l: u64) -> Exps {
    let mut e = [0u8; MAX_N];
    for (j, x) in e.iter_mut().enumerate() {
        *x = nib(l, j);
    }
    e
}

/// An element of the algebra: a finite combination of basis labels `L^a T_w`.
#[derive(Clone)]
pub struct Element<S> {
    pub(crate) ctx: u64,
    pub(crate) n: usize,
    pub(crate) terms: Terms<S>,
}

impl<S: Scalar> Element<S> {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn context(&self) -> u64 {
        self.ctx
    }

    pub fn coeff(&self, k: &Label) -> S {
        self.terms.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Label, &S)> {
        self.terms.iter()
    }

    /// Terms in a deterministic order: by the length of `w`, then `w`, then the L-part.
    pub fn sorted_terms(&self) -> Vec<(Label, S)> {
        let mut v: Vec<(Label, S)> = self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        let n = self.n;
        v.sort_by_cached_key(|(k, _)| {
            let p = k.perm(n);
            (p.length(), p.reduced_word(), std::cmp::Reverse(k.l_degree(n)), std::cmp::Reverse(k.exponents(n)))
        });
        v
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = FxHashMap::default();
        acc_scaled(&mut out, &self.terms, c);
        Element { ctx: self.ctx, n: self.n, terms: out }
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.ctx != o.ctx {
            return Err(Error::InvalidInput("elements belong to different algebras".into()));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let mut t = self.terms.clone();
        for (k, c) in &o.terms {
            acc(&mut t, *k, c.clone());
        }
        Ok(Element { ctx: self.ctx, n: self.n, terms: t })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let mut t = self.terms.clone();
        for (k, c) in &o.terms {
            acc(&mut t, *k, -c.clone());
        }
        Ok(Element { ctx: self.ctx, n: self.n, terms: t })
    }

    /// `self += f·o`.
    pub fn add_scaled(&mut self, f: &S, o: &Self) {
        assert_eq!(self.ctx, o.ctx, "elements belong to different algebras");
        acc_scaled(&mut self.terms, &o.terms, f);
    }

    /// Whether every term is some `T_w` with no L-part.
    pub fn is_pure_t(&self) -> bool {
        self.terms.keys().all(|k| k.l == 0)
    }
}

impl<S: Scalar> PartialEq for Element<S> {
    fn eq(&self, o: &Self) -> bool {
        self.ctx == o.ctx && self.terms == o.terms
    }
}

impl<S: Scalar> std::fmt::Debug for Element<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.n;
        f.debug_map()
            .entries(self.sorted_terms().into_iter().map(|(k, c)| ((k.exponents(n), k.perm(n).reduced_word()), c.to_string())))
            .finish()
    }
}

impl<S: Scalar> std::ops::Add for Element<S> {
    type Output = Element<S>;
    fn add(self, o: Self) -> Self {
        self.try_add(&o).expect("elements belong to different algebras")
    }
}

impl<S: Scalar> std::ops::Sub for Element<S> {
    type Output = Element<S>;
    fn sub(self, o: Self) -> Self {
        self.try_sub(&o).expect("elements belong to different algebras")
    }
}

impl<S: Scalar> std::ops::Neg for Element<S> {
    type Output = Element<S>;
    fn neg(self) -> Self {
        self.scale(&-S::one())
    }
}

/// The algebra `ℋ_{r,n}` over a coefficient ring `S`, with parameters `q` (a unit) and
/// `Q_1..Q_r`.
///
/// Normal forms are combinations of `L^a T_w` with `0 ≤ a_i < r`. The memo tables are
/// filled lazily; no lock is held while a missing entry is computed.
pub struct Algebra<S: Scalar> {
    id: u64,
    r: usize,
    n: usize,
    mode: Mode,
    q: S,
    q_inv: S,
    qm1: S,
    big_q: Vec<S>,
    /// `∏_j (X − Q_j) = X^r + Σ_{c<r} sigma[c]·X^c`.
    sigma: Vec<S>,
    lpow: RwLock<FxHashMap<usize, Arc<Terms<S>>>>,
    lnf: RwLock<FxHashMap<Exps, Arc<Terms<S>>>>,
    moves: RwLock<FxHashMap<(u64, u64), Arc<Terms<S>>>>,
}

impl<S: Scalar> Algebra<S> {
    pub fn with_params(n: usize, q: S, big_q: Vec<S>, mode: Mode) -> Result<Self> {
        let r = big_q.len();
        if r == 0 || r > MAX_R {
            return Err(Error::InvalidInput(format!("r = {r} is outside 1..={MAX_R}")));
        }
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidInput(format!("n = {n} is outside 1..={MAX_N}")));
        }
        let q_inv = q.try_inv().ok_or_else(|| Error::InvalidInput("q must be invertible".into()))?;
        let qm1 = q.clone() - S::one();
        if qm1.is_zero() {
            return Err(Error::InvalidInput("q = 1 is not allowed".into()));
        }
        let mut sigma = vec![S::one()];
        for qj in &big_q {
            // multiply by (X − Q_j)
            let mut next = vec![S::zero(); sigma.len() + 1];
            for (c, s) in sigma.iter().enumerate() {
                next[c + 1] += s;
                next[c] -= &s.mul_ref(qj);
            }
            sigma = next;
        }
        sigma.pop();
        Ok(Algebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            r,
            n,
            mode,
            q,
            q_inv,
            qm1,
            big_q,
            sigma,
            lpow: RwLock::default(),
            lnf: RwLock::default(),
            moves: RwLock::default(),
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn q(&self) -> &S {
        &self.q
    }

    pub fn q_inv(&self) -> &S {
        &self.q_inv
    }

    /// `Q_i`, 1-indexed.
    pub fn big_q(&self, i: usize) -> &S {
        &self.big_q[i - 1]
    }

    pub fn params(&self) -> &[S] {
        &self.big_q
    }

    pub(crate) fn wrap(&self, terms: Terms<S>) -> Element<S> {
        Element { ctx: self.id, n: self.n, terms }
    }

    pub fn check(&self, x: &Element<S>) -> Result<()> {
        if x.ctx != self.id {
            return Err(Error::InvalidInput("element belongs to a different algebra".into()));
        }
        Ok(())
    }

    pub fn zero(&self) -> Element<S> {
        self.wrap(FxHashMap::default())
    }

    pub fn scalar(&self, c: S) -> Element<S> {
        let mut t = FxHashMap::default();
        acc(&mut t, Label::raw(0, identity_w(self.n)), c);
        self.wrap(t)
    }

    pub fn one(&self) -> Element<S> {
        self.scalar(S::one())
    }

    /// The element `c·L^a T_w` for a normal-form label.
    pub fn basis(&self, k: Label, c: S) -> Element<S> {
        let mut t = FxHashMap::default();
        acc(&mut t, k, c);
        self.wrap(t)
    }

    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Label, S)>) -> Result<Element<S>> {
        let mut t = FxHashMap::default();
        for (k, c) in terms {
            if (0..self.n).any(|j| nib(k.l, j) as usize >= self.r) || k.l >> (4 * self.n) != 0 {
                return Err(Error::InvalidInput("label exponents must lie in 0..r".into()));
            }
            let img: Vec<u8> = (0..self.n).map(|j| nib(k.w, j)).collect();
            let mut seen = img.clone();
            seen.sort_unstable();
            if seen != (0..self.n as u8).collect::<Vec<_>>() || k.w >> (4 * self.n) != 0 {
                return Err(Error::InvalidInput("label permutation is not a permutation of 1..n".into()));
            }
            acc(&mut t, k, c);
        }
        Ok(self.wrap(t))
    }

    pub fn t_perm(&self, w: &Permutation) -> Result<Element<S>> {
        if w.n() != self.n {
            return Err(Error::InvalidInput(format!("permutation of {} letters in an algebra with n = {}", w.n(), self.n)));
        }
        Ok(self.basis(Label::raw(0, perm_w(w)), S::one()))
    }

    /// `T_i` for `0 ≤ i < n`, with `T_0 = L_1`.
    pub fn t(&self, i: usize) -> Result<Element<S>> {
        if i >= self.n {
            return Err(Error::InvalidIndex(format!("T_{i} does not exist for n = {}", self.n)));
        }
        if i == 0 {
            return self.jucys_l(1);
        }
        Ok(self.wrap(self.right_t_terms(&self.one().terms, i)))
    }

    /// `T_{i_1}⋯T_{i_k}` for indices in `0..n`.
    pub fn t_word(&self, word: &[usize]) -> Result<Element<S>> {
        let mut x = self.one();
        for &i in word {
            if i >= self.n {
                return Err(Error::InvalidIndex(format!("T_{i} does not exist for n = {}", self.n)));
            }
            x = self.right_mul_t(&x, i);
        }
        Ok(x)
    }

    /// The Jucys-Murphy element `L_k`, 1 ≤ k ≤ n.
    pub fn jucys_l(&self, k: usize) -> Result<Element<S>> {
        if k == 0 || k > self.n {
            return Err(Error::InvalidIndex(format!("L_{k} does not exist for n = {}", self.n)));
        }
        let mut e = [0u8; MAX_N];
        e[k - 1] = 1;
        Ok(self.wrap(self.nf(&e).as_ref().clone()))
    }

    /// `L_1^{a_1}⋯L_n^{a_n}` with arbitrary exponents, reduced to normal form.
    pub fn l_mono(&self, exps: &[u8]) -> Result<Element<S>> {
        if exps.len() != self.n {
            return Err(Error::InvalidInput(format!("expected {} exponents", self.n)));
        }
        if exps.iter().any(|&e| e > 64) {
            return Err(Error::InvalidInput("exponent too large".into()));
        }
        let mut e = [0u8; MAX_N];
        e[..self.n].copy_from_slice(exps);
        Ok(self.wrap(self.nf(&e).as_ref().clone()))
    }

    // ---- term-level kernels ----

    /// `x·T_i` for `i ≥ 1`.
    pub(crate) fn right_t_terms(&self, x: &Terms<S>, i: usize) -> Terms<S> {
        let n = self.n;
        let mut out = FxHashMap::with_capacity_and_hasher(x.len() * 2, Default::default());
        for (k, c) in x {
            let a = pos_of(k.w, (i - 1) as u8, n);
            let b = pos_of(k.w, i as u8, n);
            let w2 = swap_nibs(k.w, a, b);
            if a < b {
                acc(&mut out, Label::raw(k.l, w2), c.clone());
            } else {
                acc(&mut out, Label::raw(k.l, w2), self.q.mul_ref(c));
                acc(&mut out, *k, self.qm1.mul_ref(c));
            }
        }
        out
    }

    /// `T_i·x` for `i ≥ 1`, pushing `T_i` through the L-part with
    /// `T_i g = (s_i g) T_i + (q−1)·L_{i+1}·(g − s_i g)/(L_{i+1} − L_i)`.
    pub(crate) fn left_t_terms(&self, i: usize, x: &Terms<S>) -> Terms<S> {
        let p = i - 1;
        let mut out = FxHashMap::with_capacity_and_hasher(x.len() * 2, Default::default());
        for (k, c) in x {
            let ea = nib(k.l, p);
            let eb = nib(k.l, p + 1);
            let ls = swap_nibs(k.l, p, p + 1);
            let w2 = swap_nibs(k.w, p, p + 1);
            if nib(k.w, p) < nib(k.w, p + 1) {
                acc(&mut out, Label::raw(ls, w2), c.clone());
            } else {
                acc(&mut out, Label::raw(ls, w2), self.q.mul_ref(c));
                acc(&mut out, Label::raw(ls, k.w), self.qm1.mul_ref(c));
            }
            if ea != eb {
                let mut f = self.qm1.mul_ref(c);
                if ea > eb {
                    f = -f;
                }
                let (lo, hi) = (ea.min(eb), ea.max(eb));
                for j in 0..hi - lo {
                    let l2 = set_nib(set_nib(k.l, p, lo + j), p + 1, hi - j);
                    acc(&mut out, Label::raw(l2, k.w), f.clone());
                }
            }
        }
        out
    }

    /// `T_w·L^b` in normal form, memoized.
    pub(crate) fn moves(&self, w: u64, b: u64) -> Arc<Terms<S>> {
        if let Some(v) = self.moves.read().unwrap().get(&(w, b)) {
            return v.clone();
        }
        let n = self.n;
        let desc = (0..n - 1).find(|&p| nib(w, p) > nib(w, p + 1));
        let val = match desc {
            None => {
                let mut t = FxHashMap::default();
                acc(&mut t, Label::raw(b, w), S::one());
                Arc::new(t)
            }
            Some(p) => {
                let inner = self.moves(swap_nibs(w, p, p + 1), b);
                Arc::new(self.left_t_terms(p + 1, &inner))
            }
        };
        self.moves.write().unwrap().entry((w, b)).or_insert(val).clone()
    }

    /// Normal form of `L_k^r`.
    fn lpow(&self, k: usize) -> Arc<Terms<S>> {
        if let Some(v) = self.lpow.read().unwrap().get(&k) {
            return v.clone();
        }
        let n = self.n;
        let r = self.r;
        let id = identity_w(n);
        let mut t: Terms<S> = FxHashMap::default();
        if k == 1 {
            for (c, s) in self.sigma.iter().enumerate() {
                acc(&mut t, Label::raw(set_nib(0, 0, c as u8), id), -s.clone());
            }
        } else {
            // L_k^r = q⁻¹T_{k−1}L_{k−1}^r T_{k−1} + q⁻¹(q−1)Σ_{a+b=r−2} L_{k−1}^{a+1}L_k^{b+1}T_{k−1}
            let prev = self.lpow(k - 1);
            let conj = self.right_t_terms(&self.left_t_terms(k - 1, &prev), k - 1);
            acc_scaled(&mut t, &conj, &self.q_inv);
            if r >= 2 {
                let f = self.q_inv.mul_ref(&self.qm1);
                let wt = swap_nibs(id, k - 2, k - 1);
                for a in 0..=r - 2 {
                    let b = r - 2 - a;
                    let l = set_nib(set_nib(0, k - 2, (a + 1) as u8), k - 1, (b + 1) as u8);
                    acc(&mut t, Label::raw(l, wt), f.clone());
                }
            }
        }
        let val = Arc::new(t);
        self.lpow.write().unwrap().entry(k).or_insert(val).clone()
    }

    /// Normal form of `L^e` for an exponent vector that may exceed `r − 1`.
    fn nf(&self, e: &Exps) -> Arc<Terms<S>> {
        let r = self.r as u8;
        let Some(j) = (0..self.n).rev().find(|&j| e[j] >= r) else {
            let mut t = FxHashMap::default();
            acc(&mut t, Label::raw(pack(&e[..self.n]), identity_w(self.n)), S::one());
            return Arc::new(t);
        };
        if let Some(v) = self.lnf.read().unwrap().get(e) {
            return v.clone();
        }
        let mut rest = *e;
        rest[j] -= r;
        let base = self.lpow(j + 1);
        let val = Arc::new(self.left_lpoly(&[(rest, S::one())], &base));
        self.lnf.write().unwrap().entry(*e).or_insert(val).clone()
    }

    /// `P·x` for a polynomial `P = Σ c_e L^e` in the Jucys-Murphy elements.
    pub(crate) fn left_lpoly(&self, p: &[(Exps, S)], x: &Terms<S>) -> Terms<S> {
        let n = self.n;
        let r = self.r as u8;
        let mut out: Terms<S> = FxHashMap::default();
        let mut over: FxHashMap<u64, FxHashMap<Exps, S>> = FxHashMap::default();
        for (k, c) in x {
            let a = exps_of(k.l);
            for (e, d) in p {
                let mut s = [0u8; MAX_N];
                let mut fits = true;
                for j in 0..n {
                    s[j] = a[j] + e[j];
                    fits &= s[j] < r;
                }
                let cd = c.mul_ref(d);
                if fits {
                    acc(&mut out, Label::raw(pack(&s[..n]), k.w), cd);
                } else {
                    let m = over.entry(k.w).or_default();
                    match m.entry(s) {
                        Entry::Occupied(mut o) => *o.get_mut() += &cd,
                        Entry::Vacant(v) => {
                            v.insert(cd);
                        }
                    }
                }
            }
        }
        for (w, polys) in over {
            let mut y: Terms<S> = FxHashMap::default();
            for (s, c) in polys {
                if !c.is_zero() {
                    acc_scaled(&mut y, &self.nf(&s), &c);
                }
            }
            let y = self.right_t_word(y, &w_perm(w, n).reduced_word());
            for (k, c) in y {
                acc(&mut out, k, c);
            }
        }
        out
    }

    fn right_t_word(&self, mut y: Terms<S>, word: &[usize]) -> Terms<S> {
        for &i in word {
            y = self.right_t_terms(&y, i);
        }
        y
    }

    /// `Σ_w c_w·(x·T_w)` sharing common prefixes of reduced words.
    fn right_tsum(&self, x: Terms<S>, q: &[(u64, S)], out: &mut Terms<S>) {
        let mut words: Vec<(Vec<usize>, &S)> = q.iter().map(|(w, c)| (w_perm(*w, self.n).reduced_word(), c)).collect();
        words.sort_by(|a, b| a.0.cmp(&b.0));
        self.tsum_rec(x, &words, 0, out, false);
    }

    /// `Σ_w c_w·(T_w·x)`.
    fn left_tsum(&self, q: &[(u64, S)], x: &Terms<S>, out: &mut Terms<S>) {
        let mut words: Vec<(Vec<usize>, &S)> = q
            .iter()
            .map(|(w, c)| {
                let mut word = w_perm(*w, self.n).reduced_word();
                word.reverse();
                (word, c)
            })
            .collect();
        words.sort_by(|a, b| a.0.cmp(&b.0));
        self.tsum_rec(x.clone(), &words, 0, out, true);
    }

    /// Walks the trie of words; the working set of a node is dropped before its last
    /// child is visited, so only one chain of ancestors is alive at a time.
    fn tsum_rec(&self, cur: Terms<S>, words: &[(Vec<usize>, &S)], depth: usize, out: &mut Terms<S>, left: bool) {
        let mut i = 0;
        while i < words.len() && words[i].0.len() == depth {
            acc_scaled(out, &cur, words[i].1);
            i += 1;
        }
        let mut cur = Some(cur);
        while i < words.len() {
            let letter = words[i].0[depth];
            let mut j = i;
            while j < words.len() && words[j].0[depth] == letter {
                j += 1;
            }
            let c = cur.as_ref().expect("working set present");
            let next = if left { self.left_t_terms(letter, c) } else { self.right_t_terms(c, letter) };
            if j == words.len() {
                cur = None;
            }
            self.tsum_rec(next, &words[i..j], depth + 1, out, left);
            i = j;
        }
    }

    // ---- public multiplication ----

    /// `x·T_i`, with `T_0 = L_1`.
    pub fn right_mul_t(&self, x: &Element<S>, i: usize) -> Element<S> {
        if i == 0 {
            return self.right_mul_l(x, 1);
        }
        self.wrap(self.right_t_terms(&x.terms, i))
    }

    /// `T_i·x`, with `T_0 = L_1`.
    pub fn left_mul_t(&self, i: usize, x: &Element<S>) -> Element<S> {
        if i == 0 {
            let mut e = [0u8; MAX_N];
            e[0] = 1;
            return self.wrap(self.left_lpoly(&[(e, S::one())], &x.terms));
        }
        self.wrap(self.left_t_terms(i, &x.terms))
    }

    /// `x·L_k`.
    pub fn right_mul_l(&self, x: &Element<S>, k: usize) -> Element<S> {
        let mut e = [0u8; MAX_N];
        e[k - 1] = 1;
        self.wrap(self.right_lmono_terms(&x.terms, pack(&e[..self.n])))
    }

    fn group_by_w(x: &Terms<S>) -> FxHashMap<u64, Vec<(Exps, S)>> {
        let mut g: FxHashMap<u64, Vec<(Exps, S)>> = FxHashMap::default();
        for (k, c) in x {
            g.entry(k.w).or_default().push((exps_of(k.l), c.clone()));
        }
        g
    }

    fn right_lmono_terms(&self, x: &Terms<S>, b: u64) -> Terms<S> {
        let mut out = FxHashMap::default();
        for (v, poly) in Self::group_by_w(x) {
            let mv = self.moves(v, b);
            let part = self.left_lpoly(&poly, &mv);
            for (k, c) in part {
                acc(&mut out, k, c);
            }
        }
        out
    }

    /// The product `x·y` in normal form.
    pub fn mul(&self, x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &Element<S>, y: &Element<S>) -> Element<S> {
        let id = identity_w(self.n);
        let mut out = FxHashMap::default();
        if x.is_pure_t() {
            let q: Vec<(u64, S)> = x.terms.iter().map(|(k, c)| (k.w, c.clone())).collect();
            self.left_tsum(&q, &y.terms, &mut out);
            return self.wrap(out);
        }
        if x.terms.keys().all(|k| k.w == id) {
            let p: Vec<(Exps, S)> = x.terms.iter().map(|(k, c)| (exps_of(k.l), c.clone())).collect();
            return self.wrap(self.left_lpoly(&p, &y.terms));
        }
        let mut by_l: FxHashMap<u64, Vec<(u64, S)>> = FxHashMap::default();
        for (k, c) in &y.terms {
            by_l.entry(k.l).or_default().push((k.w, c.clone()));
        }
        for (b, q) in by_l {
            let z = if b == 0 { x.terms.clone() } else { self.right_lmono_terms(&x.terms, b) };
            self.right_tsum(z, &q, &mut out);
        }
        self.wrap(out)
    }

    /// Product of several elements, left to right.
    pub fn product(&self, xs: &[&Element<S>]) -> Result<Element<S>> {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// The anti-involution `T_w ↦ T_{w⁻¹}`, which fixes every `T_i` and `L_k`.
    pub fn star(&self, x: &Element<S>) -> Element<S> {
        let mut out = FxHashMap::default();
        for (k, c) in &x.terms {
            let mv = self.moves(w_inverse(k.w, self.n), k.l);
            acc_scaled(&mut out, &mv, c);
        }
        self.wrap(out)
    }

    /// Left multiplication by a combination of `T_w`'s, which avoids the L-reduction path.
    pub fn left_mul_pure(&self, x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
        self.check(x)?;
        self.check(y)?;
        if !x.is_pure_t() {
            return Err(Error::InvalidInput("left factor has an L-part".into()));
        }
        Ok(self.mul_unchecked(x, y))
    }

    /// Sizes of the memo tables `(moves, L-powers, L-normal forms)`.
    pub fn cache_sizes(&self) -> (usize, usize, usize) {
        (self.moves.read().unwrap().len(), self.lpow.read().unwrap().len(), self.lnf.read().unwrap().len())
    }
}
