#![allow(dead_code)]

use akspecht::coeff::{rat, MultiPoly, Rational, Scalar};
use akspecht::hecke::{Algebra, Element};
use akspecht::{GenericAlgebra, RationalAlgebra};
use akspecht::coeff::Specialization;
use num_rational::BigRational;

pub fn generic(r: usize, n: usize) -> GenericAlgebra {
    Algebra::generic(r, n).unwrap()
}

/// A rational algebra at fixed, nondegenerate parameters.
pub fn rational(r: usize, n: usize) -> RationalAlgebra {
    let qs: Vec<BigRational> = [3, -5, 7, 11, -13].iter().take(r).map(|&x| rat(x, 2)).collect();
    let spec = Specialization::rational(rat(5, 3), qs).unwrap();
    Algebra::rational(n, &spec).unwrap()
}

pub fn word<S: Scalar>(a: &Algebra<S>, w: &[usize]) -> Element<S> {
    a.t_word(w).unwrap()
}

pub fn mul<S: Scalar>(a: &Algebra<S>, x: &Element<S>, y: &Element<S>) -> Element<S> {
    a.mul(x, y).unwrap()
}

pub fn prod<S: Scalar>(a: &Algebra<S>, xs: &[&Element<S>]) -> Element<S> {
    a.product(xs).unwrap()
}

/// Checks every defining relation, the three Jucys-Murphy properties and the `T_iL_i`
/// rule; returns the first failure.
pub fn relation_suite<S: Scalar>(a: &Algebra<S>) -> Result<usize, String> {
    let n = a.n();
    let r = a.r();
    let mut checked = 0usize;
    let t: Vec<Element<S>> = (0..n).map(|i| a.t(i).unwrap()).collect();
    let l: Vec<Element<S>> = (1..=n).map(|k| a.jucys_l(k).unwrap()).collect();
    let q = a.scalar(a.q().clone());
    let one = a.one();
    let qm1 = a.scalar(a.q().clone() - S::one());
    let mut check = |name: String, lhs: Element<S>, rhs: Element<S>| -> Result<(), String> {
        checked += 1;
        if lhs == rhs {
            Ok(())
        } else {
            Err(format!("{name}: {} ≠ {}", a.format(&lhs), a.format(&rhs)))
        }
    };
    // cyclotomic relation
    let mut cyc = a.one();
    for j in 1..=r {
        cyc = mul(a, &cyc, &(t[0].clone() - a.scalar(a.big_q(j).clone())));
    }
    check("∏(T_0 − Q_j)".into(), cyc, a.zero())?;
    for i in 1..n {
        let lhs = mul(a, &(t[i].clone() - q.clone()), &(t[i].clone() + one.clone()));
        check(format!("(T_{i} − q)(T_{i} + 1)"), lhs, a.zero())?;
    }
    if n >= 2 {
        let lhs = prod(a, &[&t[0], &t[1], &t[0], &t[1]]);
        let rhs = prod(a, &[&t[1], &t[0], &t[1], &t[0]]);
        check("T_0T_1T_0T_1 = T_1T_0T_1T_0".into(), lhs, rhs)?;
    }
    for i in 1..n.saturating_sub(1) {
        let lhs = prod(a, &[&t[i], &t[i + 1], &t[i]]);
        let rhs = prod(a, &[&t[i + 1], &t[i], &t[i + 1]]);
        check(format!("braid {i}"), lhs, rhs)?;
    }
    for i in 0..n {
        for j in i + 2..n {
            check(format!("T_{i}T_{j} = T_{j}T_{i}"), mul(a, &t[i], &t[j]), mul(a, &t[j], &t[i]))?;
        }
    }
    // the definition of L_k
    for k in 1..=n {
        let mut w: Vec<usize> = (0..k).rev().collect();
        w.extend(1..k);
        let mut x = word(a, &w);
        for _ in 1..k {
            x = x.scale(a.q_inv());
        }
        check(format!("L_{k} from its definition"), x, l[k - 1].clone())?;
    }
    // L's commute
    for i in 0..n {
        for j in i + 1..n {
            check(format!("L_{}L_{} = L_{}L_{}", i + 1, j + 1, j + 1, i + 1), mul(a, &l[i], &l[j]), mul(a, &l[j], &l[i]))?;
        }
    }
    // T_j commutes with ∏_{i≤k}(L_i − Q_s) for j ≠ k
    for s in 1..=r {
        let mut pk = a.one();
        for k in 1..=n {
            pk = mul(a, &pk, &(l[k - 1].clone() - a.scalar(a.big_q(s).clone())));
            for j in 1..n {
                if j != k {
                    check(format!("T_{j} and ∏_{{i≤{k}}}(L_i − Q_{s})"), mul(a, &t[j], &pk), mul(a, &pk, &t[j]))?;
                }
            }
        }
    }
    // L_i T_j = T_j L_i for j ≠ i, i−1
    for i in 1..=n {
        for j in 1..n {
            if j != i && j + 1 != i {
                check(format!("L_{i}T_{j} = T_{j}L_{i}"), mul(a, &l[i - 1], &t[j]), mul(a, &t[j], &l[i - 1]))?;
            }
        }
    }
    // T_i L_i = L_{i+1} T_i − (q−1) L_{i+1}
    for i in 1..n {
        let lhs = mul(a, &t[i], &l[i - 1]);
        let rhs = mul(a, &l[i], &t[i]) - mul(a, &qm1, &l[i]);
        check(format!("T_{i}L_{i} rule"), lhs, rhs)?;
    }
    Ok(checked)
}

/// A small pseudo-random element with coefficients in a short range.
pub fn random_element(a: &RationalAlgebra, seed: u64, terms: usize) -> Element<Rational> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut x = a.zero();
    for _ in 0..terms {
        let len = rng.gen_range(0..4);
        let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..a.n())).collect();
        let c = Rational::new(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        x = x + word(a, &w).scale(&c);
    }
    x
}

pub fn poly(s: &str) -> MultiPoly {
    akspecht::coeff::parse_poly(s).unwrap()
}
