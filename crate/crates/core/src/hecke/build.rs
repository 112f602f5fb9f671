//! The structural elements: `x_λ`, `u⁺_λ`, `m_λ`, `C(m;η)`, `D(t,s)`, the generators
//! `𝔡` and `𝔩`, and the cellular elements `m_{𝔰𝔱}` and `m_{𝚂𝔱}`.

use rustc_hash::FxHashMap;

use super::algebra::{acc, Algebra, Element, Terms};
use super::label::{identity_w, nib, pack, perm_w, set_nib, Label, MAX_N};
use crate::coeff::Scalar;
use crate::combinatorics::{combinations, Multicomposition, Permutation, Tableau, TypedTableau};
use crate::error::{invalid, Error, Result};

type Exps = [u8; MAX_N];

/// All permutations of `0..n` (packed) preserving each block of consecutive positions
/// given by `blocks`.
fn young_subgroup(n: usize, blocks: &[usize]) -> Vec<u64> {
    let mut out = vec![identity_w(n)];
    let mut start = 0;
    for &len in blocks {
        let letters: Vec<usize> = (start..start + len).collect();
        let perms = permutations(&letters);
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for w in &out {
            for p in &perms {
                let mut x = *w;
                for (j, &v) in letters.iter().zip(p) {
                    x = set_nib(x, *j, v as u8);
                }
                next.push(x);
            }
        }
        out = next;
        start += len;
    }
    out
}

fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Packed `w·d` under the right action: `j·(wd) = (j·w)·d`.
fn compose_w(w: u64, d: u64, n: usize) -> u64 {
    (0..n).fold(0, |acc, j| set_nib(acc, j, nib(d, nib(w, j) as usize)))
}

impl<S: Scalar> Algebra<S> {
    fn check_shape(&self, lambda: &Multicomposition) -> Result<()> {
        if lambda.size() != self.n() {
            return invalid(format!("{lambda} has size {} but n = {}", lambda.size(), self.n()));
        }
        if lambda.r() != self.r() {
            return invalid(format!("{lambda} has {} components but r = {}", lambda.r(), self.r()));
        }
        Ok(())
    }

    fn check_tableau(&self, t: &Tableau) -> Result<()> {
        self.check_shape(t.shape())?;
        if !t.is_standard() {
            return invalid(format!("tableau {:?} is not standard", t.rows()));
        }
        Ok(())
    }

    fn pure(&self, ws: impl IntoIterator<Item = (u64, S)>) -> Element<S> {
        let mut t: Terms<S> = FxHashMap::default();
        for (w, c) in ws {
            acc(&mut t, Label::raw(0, w), c);
        }
        self.wrap(t)
    }

    fn young_sum(&self, lambda: &Multicomposition) -> Vec<u64> {
        young_subgroup(self.n(), &lambda.stack())
    }

    /// `x_λ`: the sum of `T_w` over the row stabilizer of `𝔱^λ`.
    pub fn x_of(&self, lambda: &Multicomposition) -> Result<Element<S>> {
        self.check_shape(lambda)?;
        Ok(self.pure(self.young_sum(lambda).into_iter().map(|w| (w, S::one()))))
    }

    /// `u⁺_λ = ∏_{s=2}^r ∏_{i=1}^{|λ^{(1)}|+⋯+|λ^{(s−1)}|} (L_i − Q_s)` as a polynomial in the
    /// L's. Every exponent stays below `r`, so no reduction is needed.
    pub(crate) fn u_plus_poly(&self, lambda: &Multicomposition) -> Vec<(Exps, S)> {
        let mut poly: FxHashMap<Exps, S> = FxHashMap::default();
        poly.insert([0; MAX_N], S::one());
        for s in 2..=self.r() {
            let qs = self.big_q(s).clone();
            for i in 1..=lambda.prefix(s) {
                let mut next: FxHashMap<Exps, S> = FxHashMap::default();
                for (e, c) in &poly {
                    let mut e2 = *e;
                    e2[i - 1] += 1;
                    *next.entry(e2).or_insert_with(S::zero) += c;
                    *next.entry(*e).or_insert_with(S::zero) -= &c.mul_ref(&qs);
                }
                next.retain(|_, c| !c.is_zero());
                poly = next;
            }
        }
        let mut v: Vec<(Exps, S)> = poly.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn u_plus(&self, lambda: &Multicomposition) -> Result<Element<S>> {
        self.check_shape(lambda)?;
        let id = identity_w(self.n());
        let mut t: Terms<S> = FxHashMap::default();
        for (e, c) in self.u_plus_poly(lambda) {
            acc(&mut t, Label::raw(pack(&e[..self.n()]), id), c);
        }
        Ok(self.wrap(t))
    }

    /// `u⁺·y` for an element `y` without L-part: a plain outer product.
    fn u_plus_times(&self, lambda: &Multicomposition, y: &Element<S>) -> Element<S> {
        let up = self.u_plus_poly(lambda);
        self.wrap(self.left_lpoly(&up, &y.terms))
    }

    /// `m_λ = u⁺_λ x_λ`.
    pub fn m_of(&self, lambda: &Multicomposition) -> Result<Element<S>> {
        let x = self.x_of(lambda)?;
        Ok(self.u_plus_times(lambda, &x))
    }

    /// `C(m;η)`: the sum of `T_w` over permutations `w` of the letters `m+1..m+|η|` for
    /// which `𝔱^η·w` is row standard, with `𝔱^η` filled by `m+1, m+2, …` along its rows.
    pub fn c_sum(&self, m: usize, eta: &[usize]) -> Result<Element<S>> {
        let k: usize = eta.iter().sum();
        if m + k > self.n() {
            return Err(Error::InvalidIndex(format!("C({m};{eta:?}) needs m + |η| ≤ n = {}", self.n())));
        }
        let mut out = Vec::new();
        let letters: Vec<usize> = (m..m + k).collect();
        deal_rows(&letters, eta, 0, &mut Vec::new(), &mut out);
        let id = identity_w(self.n());
        let ws = out.into_iter().map(|img| {
            let w = img.iter().enumerate().fold(id, |acc, (j, &v)| set_nib(acc, m + j, v as u8));
            (w, S::one())
        });
        Ok(self.pure(ws))
    }

    /// `D(t,s) = T_{t−1}T_{t−2}⋯T_s`, with `D(t,t) = 1`.
    pub fn d_elem(&self, t: usize, s: usize) -> Result<Element<S>> {
        if s == 0 || s > t || t > self.n() {
            return Err(Error::InvalidIndex(format!("D({t},{s}) needs 1 ≤ s ≤ t ≤ n")));
        }
        let word: Vec<usize> = (s..t).rev().collect();
        let w = Permutation::from_word(self.n(), &word)?;
        self.t_perm(&w)
    }

    /// `𝔡^{(s)}_{d,t} = C(ν̄_{(d−1,s)}; (ν^{(s)}_d, t))`.
    pub fn frak_d(&self, nu: &Multicomposition, s: usize, d: usize, t: usize) -> Result<Element<S>> {
        self.check_shape(nu)?;
        if !nu.def_sets().0.contains(&(s, d, t)) {
            return Err(Error::InvalidIndex(format!("({s},{d},{t}) is not in def({nu},𝔡)")));
        }
        self.c_sum(nu.prefix_row(d - 1, s), &[nu.part(s, d), t])
    }

    /// `𝔩^{(s')} = L_{ν̄_{(s'+1)}+1} − Q_{s'+1}`.
    pub fn frak_l(&self, nu: &Multicomposition, sp: usize) -> Result<Element<S>> {
        self.check_shape(nu)?;
        if !nu.def_sets().1.contains(&sp) {
            return Err(Error::InvalidIndex(format!("{sp} is not in def({nu},𝔩)")));
        }
        let l = self.jucys_l(nu.prefix(sp + 1) + 1)?;
        Ok(l - self.scalar(self.big_q(sp + 1).clone()))
    }

    /// `m_μ T_{d(𝔱)}` computed as `u⁺_μ Σ_{w ∈ 𝔖_μ} T_{w·d(𝔱)}`, which is length additive.
    fn m_times_d(&self, t: &Tableau) -> Element<S> {
        let n = self.n();
        let d = perm_w(&t.d_of());
        let xs = self.young_sum(t.shape()).into_iter().map(|w| (compose_w(w, d, n), S::one()));
        let y = self.pure(xs);
        self.u_plus_times(t.shape(), &y)
    }

    /// `m_{𝔰𝔱} = T*_{d(𝔰)} m_μ T_{d(𝔱)}` for standard tableaux of a common shape.
    pub fn m_st(&self, s: &Tableau, t: &Tableau) -> Result<Element<S>> {
        self.check_tableau(s)?;
        self.check_tableau(t)?;
        if s.shape() != t.shape() {
            return invalid("m_st needs tableaux of the same shape");
        }
        let right = self.m_times_d(t);
        let left = self.pure([(perm_w(&s.d_of().inverse()), S::one())]);
        Ok(self.mul_unchecked(&left, &right))
    }

    /// `m_{𝚂𝔱} = Σ_{λ(𝔰)=𝚂} m_{𝔰𝔱}` for a semistandard `𝚂` of shape `μ` and `𝔱 ∈ Std(μ)`.
    pub fn m_stab(&self, big_s: &TypedTableau, t: &Tableau) -> Result<Element<S>> {
        if !big_s.is_semistandard() {
            return invalid("m_St needs a semistandard tableau");
        }
        self.check_tableau(t)?;
        if big_s.shape() != t.shape() {
            return invalid("tableau shapes differ");
        }
        self.check_shape(big_s.ty())?;
        let right = self.m_times_d(t);
        let left = self.pure(big_s.row_standard_preimages().iter().map(|s| (perm_w(&s.d_of().inverse()), S::one())));
        Ok(self.mul_unchecked(&left, &right))
    }

    /// `T_𝚂 = T_w` where `𝔱_𝚂 = 𝔱^λ·w`.
    pub fn t_s(&self, big_s: &TypedTableau) -> Result<Element<S>> {
        self.check_shape(big_s.ty())?;
        self.t_perm(&big_s.t_s_perm())
    }

    /// The factors `C(ν̄_{(x−1,y)} : Γ_{(x,y)})` in component-then-row order.
    pub fn stabilizer_factors(&self, big_s: &TypedTableau) -> Result<Vec<Element<S>>> {
        let nu = big_s.shape();
        let mut out = Vec::new();
        for y in 1..=nu.r() {
            for x in 1..=nu.rows(y) {
                out.push(self.c_sum(nu.prefix_row(x - 1, y), &big_s.gamma(x, y))?);
            }
        }
        Ok(out)
    }

    /// The right-hand side `x_λ T_𝚂 u⁺_ν ∏_{x,y} C(ν̄_{(x−1,y)} : Γ_{(x,y)})`.
    pub fn stabilizer_product(&self, big_s: &TypedTableau) -> Result<Element<S>> {
        let lambda = big_s.ty();
        let nu = big_s.shape();
        self.check_shape(lambda)?;
        self.check_shape(nu)?;
        let mut c = self.one();
        for f in self.stabilizer_factors(big_s)? {
            c = self.mul_unchecked(&c, &f);
        }
        let tail = self.u_plus_times(nu, &c);
        let head = self.mul_unchecked(&self.x_of(lambda)?, &self.t_s(big_s)?);
        Ok(self.mul_unchecked(&head, &tail))
    }

    /// `res_{𝔱^ν}(i) = q^{y−x} Q_z` where `i` sits in row `x`, column `y` of component `z`.
    pub fn residue(&self, nu: &Multicomposition, i: usize) -> Result<S> {
        self.check_shape(nu)?;
        let node = Tableau::initial(nu)
            .positions()
            .get(i.wrapping_sub(1))
            .copied()
            .ok_or_else(|| Error::InvalidIndex(format!("{i} is not in 1..={}", self.n())))?;
        let e = node.col as i64 - node.row as i64;
        let qp = if e >= 0 { self.q().clone() } else { self.q_inv().clone() };
        let mut v = self.big_q(node.comp).clone();
        for _ in 0..e.unsigned_abs() {
            v = v * &qp;
        }
        Ok(v)
    }
}

/// Deals `letters` (in increasing order) into rows of sizes `eta`, each row increasing.
fn deal_rows(letters: &[usize], eta: &[usize], row: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if row == eta.len() {
        out.push(cur.clone());
        return;
    }
    let rest: Vec<usize> = letters.iter().copied().filter(|l| !cur.contains(l)).collect();
    for pick in combinations(rest.len(), eta[row]) {
        let len = cur.len();
        cur.extend(pick.iter().map(|&i| rest[i]));
        deal_rows(letters, eta, row + 1, cur, out);
        cur.truncate(len);
    }
}
