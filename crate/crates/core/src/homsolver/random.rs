use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{Scalar, Specialization};
use crate::hecke::{Algebra, Element};

fn small_rational<R: Rng>(rng: &mut R) -> BigRational {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=5);
        if n != 0 {
            return BigRational::new(BigInt::from(n), BigInt::from(d));
        }
    }
}

/// Whether `a/b = ±q^k` for some `|k| < n`. Such a ratio makes some factor `L_i − Q_s`
/// act by zero on a permutation module of degree `n`.
fn degenerate_ratio(a: &BigRational, b: &BigRational, q: &BigRational, n: usize) -> bool {
    let ratio = (a / b).abs();
    let mut p = BigRational::one();
    for _ in 0..n {
        if ratio == p || ratio == p.recip() {
            return true;
        }
        p = &p * q.abs();
    }
    false
}

/// Rational parameters that avoid the small degenerate loci: `q ∉ {0, ±1}` and the `Q_i`
/// nonzero, pairwise distinct and not related by `±q^k` with `|k| < n`.
pub fn random_rational_spec<R: Rng>(rng: &mut R, r: usize, n: usize) -> Specialization {
    loop {
        let q = small_rational(rng);
        if q.is_zero() || q.abs().is_one() {
            continue;
        }
        let big_q: Vec<BigRational> = (0..r).map(|_| small_rational(rng)).collect();
        let clash = (0..r).any(|i| (0..i).any(|j| degenerate_ratio(&big_q[i], &big_q[j], &q, n)));
        if clash {
            continue;
        }
        return Specialization::rational(q, big_q).expect("q is neither 0 nor 1");
    }
}

/// `count` specializations drawn from a stream seeded by `seed`.
pub fn random_specializations(seed: u64, r: usize, n: usize, count: usize) -> Vec<Specialization> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_rational_spec(&mut rng, r, n)).collect()
}

/// A sum of `terms` random basis monomials `c·L^a T_w` with small integer coefficients.
pub fn random_element<S: Scalar, R: Rng>(alg: &Algebra<S>, rng: &mut R, terms: usize) -> Element<S> {
    let n = alg.n();
    let r = alg.r();
    let mut x = alg.zero();
    for _ in 0..terms {
        let exps: Vec<u8> = (0..n).map(|_| if rng.gen_bool(0.3) { rng.gen_range(0..r) as u8 } else { 0 }).collect();
        let len = rng.gen_range(0..=n);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3..=3);
        }
        let l = alg.l_mono(&exps).expect("exponents below r");
        let t = alg.t_word(&word).expect("indices below n");
        let term = alg.mul(&l, &t).expect("same algebra");
        x.add_scaled(&S::from_int(c), &term);
    }
    x
}
