mod common;

use akspecht::coeff::{rat, MultiPoly, Scalar};
use num_traits::One;
use akspecht::combinatorics::{mc, Multicomposition, Tableau, TypedTableau};
use akspecht::hecke::Algebra;
use common::*;

#[test]
fn quadratic_relation_rearranged() {
    let a = generic(2, 3);
    let t1 = a.t(1).unwrap();
    let lhs = mul(&a, &t1, &t1);
    let rhs = t1.scale(&(MultiPoly::q() - MultiPoly::one())) + a.scalar(MultiPoly::q());
    assert_eq!(lhs, rhs);
}

#[test]
fn relations_generic_small() {
    for (r, n) in [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3)] {
        let a = generic(r, n);
        relation_suite(&a).unwrap_or_else(|e| panic!("r={r} n={n}: {e}"));
    }
}

#[test]
fn relations_rational_n4() {
    let a = rational(3, 4);
    relation_suite(&a).unwrap();
}

#[test]
fn jucys_murphy_l1_is_t0_and_rule() {
    let a = generic(2, 3);
    assert_eq!(a.jucys_l(1).unwrap(), a.t(0).unwrap());
    assert_eq!(a.format(&a.jucys_l(2).unwrap()), "L_2");
    assert!(a.jucys_l(4).is_err());
}

#[test]
fn star_examples() {
    let a = generic(2, 4);
    assert_eq!(a.star(&word(&a, &[1, 2])), word(&a, &[2, 1]));
    for k in 1..=4 {
        let l = a.jucys_l(k).unwrap();
        assert_eq!(a.star(&l), l);
    }
    let b = generic(2, 3);
    let m = b.m_of(&mc(&[&[2], &[1]])).unwrap();
    assert_eq!(b.star(&m), m);
}

#[test]
fn star_is_an_anti_involution() {
    let a = rational(2, 3);
    for seed in 0..6 {
        let x = random_element(&a, seed, 4);
        let y = random_element(&a, seed + 100, 4);
        assert_eq!(a.star(&a.star(&x)), x);
        assert_eq!(a.star(&mul(&a, &x, &y)), mul(&a, &a.star(&y), &a.star(&x)));
    }
}

#[test]
fn multiplication_is_associative() {
    let a = rational(2, 3);
    for seed in 0..6 {
        let x = random_element(&a, seed, 3);
        let y = random_element(&a, seed + 10, 3);
        let z = random_element(&a, seed + 20, 3);
        assert_eq!(mul(&a, &mul(&a, &x, &y), &z), mul(&a, &x, &mul(&a, &y, &z)));
    }
}

#[test]
fn length_additive_products() {
    let a = generic(2, 4);
    // s1·s2s3 is length additive
    assert_eq!(mul(&a, &word(&a, &[1]), &word(&a, &[2, 3])), a.t_perm(&akspecht::combinatorics::Permutation::from_word(4, &[1, 2, 3]).unwrap()).unwrap());
}

#[test]
fn u_plus_and_m() {
    let a = generic(1, 3);
    assert_eq!(a.u_plus(&mc(&[&[2, 1]])).unwrap(), a.one());
    let b = generic(2, 4);
    for lam in Multicomposition::multipartitions(4, 2) {
        let x = b.x_of(&lam).unwrap();
        let u = b.u_plus(&lam).unwrap();
        let m = b.m_of(&lam).unwrap();
        assert_eq!(mul(&b, &x, &u), mul(&b, &u, &x), "{lam}");
        assert_eq!(m, mul(&b, &x, &u));
    }
}

#[test]
fn u_plus_of_target_shape() {
    // λ = ((4,2,1),(2,1)): u⁺ = (L_1 − Q_2)⋯(L_7 − Q_2)
    let a = rational(2, 10);
    let mu = mc(&[&[4, 2, 1], &[2, 1]]);
    let mut expect = a.one();
    for i in 1..=7 {
        expect = mul(&a, &expect, &(a.jucys_l(i).unwrap() - a.scalar(a.big_q(2).clone())));
    }
    assert_eq!(a.u_plus(&mu).unwrap(), expect);
}

#[test]
fn c_sums() {
    let a = generic(2, 7);
    assert_eq!(a.format(&a.c_sum(0, &[1, 1]).unwrap()), "1 + T_1");
    assert_eq!(a.format(&a.c_sum(0, &[2, 1]).unwrap()), "1 + T_2 + T_{2,1}");
    assert_eq!(a.format(&a.c_sum(4, &[2, 1]).unwrap()), "1 + T_6 + T_{6,5}");
    assert!(a.c_sum(6, &[1, 1]).is_err());
    assert_eq!(a.d_elem(3, 3).unwrap(), a.one());
    assert_eq!(a.format(&a.d_elem(5, 2).unwrap()), "T_{4,3,2}");
}

/// `C(m,a,b) = Σ_𝐢 ∏_k D(m+a+k, i_k)` over strictly increasing `m < i_1 < ⋯ < i_b` with
/// `i_k ≤ m+a+k`.
#[test]
fn c_sum_factorizes_through_d() {
    for m in 0..=2usize {
        for x in 0..=2usize {
            for b in 0..=2usize {
                let n = m + x + b;
                if n == 0 {
                    continue;
                }
                let a = generic(1, n);
                let lhs = a.c_sum(m, &[x, b]).unwrap();
                let mut rhs = a.zero();
                let mut stack = vec![(Vec::<usize>::new(), m)];
                while let Some((seq, last)) = stack.pop() {
                    let k = seq.len() + 1;
                    if seq.len() == b {
                        let mut p = a.one();
                        for (j, &i) in seq.iter().enumerate() {
                            p = mul(&a, &p, &a.d_elem(m + x + j + 1, i).unwrap());
                        }
                        rhs = rhs + p;
                        continue;
                    }
                    for i in last + 1..=m + x + k {
                        let mut s = seq.clone();
                        s.push(i);
                        stack.push((s, i));
                    }
                }
                assert_eq!(lhs, rhs, "C({m},{x},{b})");
            }
        }
    }
}

#[test]
fn generators_of_worked_example() {
    let lam = mc(&[&[3, 1], &[2, 2], &[2, 1, 1]]);
    let a = generic(3, 12);
    assert_eq!(a.format(&a.frak_d(&lam, 1, 1, 1).unwrap()), "1 + T_3 + T_{3,2} + T_{3,2,1}");
    assert_eq!(a.format(&a.frak_l(&lam, 1).unwrap()), "L_5 - Q_2");
    assert_eq!(a.format(&a.frak_l(&lam, 2).unwrap()), "L_9 - Q_3");
    let b = generic(2, 7);
    let lam2 = mc(&[&[2, 2], &[2, 1]]);
    assert_eq!(b.format(&b.frak_l(&lam2, 1).unwrap()), "L_5 - Q_2");
    assert_eq!(b.format(&b.frak_d(&lam2, 2, 1, 1).unwrap()), "1 + T_6 + T_{6,5}");
    assert!(b.frak_d(&lam2, 1, 2, 1).is_err());
}

#[test]
fn m_st_of_initial_is_m() {
    let a = rational(2, 4);
    for mu in Multicomposition::multipartitions(4, 2) {
        let t = Tableau::initial(&mu);
        assert_eq!(a.m_st(&t, &t).unwrap(), a.m_of(&mu).unwrap());
    }
}

#[test]
fn m_st_star_swaps() {
    let a = rational(2, 4);
    for mu in [mc(&[&[2, 1], &[1]]), mc(&[&[1], &[2, 1]])] {
        let std = Tableau::enumerate_standard(&mu);
        for s in std.iter().step_by(2) {
            for t in std.iter().skip(1).step_by(3) {
                assert_eq!(a.star(&a.m_st(s, t).unwrap()), a.m_st(t, s).unwrap());
            }
        }
    }
}

#[test]
fn m_st_matches_definition() {
    let a = rational(2, 4);
    let mu = mc(&[&[2], &[1, 1]]);
    for s in Tableau::enumerate_standard(&mu) {
        for t in Tableau::enumerate_standard(&mu).iter().take(3) {
            let lhs = a.m_st(&s, t).unwrap();
            let ts = a.t_perm(&s.d_of().inverse()).unwrap();
            let tt = a.t_perm(&t.d_of()).unwrap();
            let rhs = prod(&a, &[&ts, &a.m_of(&mu).unwrap(), &tt]);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn stabilizer_factorization_small_cases() {
    let a = rational(2, 5);
    let mut count = 0;
    for nu in Multicomposition::multipartitions(5, 2) {
        for lam in Multicomposition::multipartitions(5, 2) {
            if !lam.is_strictly_dominated_by(&nu) {
                continue;
            }
            for s in TypedTableau::enumerate_semistandard(&nu, &lam) {
                let lhs = a.m_stab(&s, &Tableau::initial(&nu)).unwrap();
                let rhs = a.stabilizer_product(&s).unwrap();
                assert!(lhs == rhs, "λ={lam} ν={nu}");
                count += 1;
            }
        }
    }
    assert!(count > 50);
}

#[test]
fn json_round_trip() {
    let a = generic(2, 3);
    let x = mul(&a, &a.frak_l(&mc(&[&[1], &[2]]), 1).unwrap(), &word(&a, &[1, 0, 2]));
    let v = a.to_json(&x);
    assert_eq!(a.from_json(&v, None).unwrap(), x);
    let b = rational(2, 3);
    let y = random_element(&b, 7, 5);
    let spec = akspecht::coeff::Specialization::rational(rat(5, 3), vec![rat(3, 2), rat(-5, 2)]).unwrap();
    assert_eq!(b.from_json(&b.to_json(&y), Some(&spec)).unwrap(), y);
}

#[test]
fn context_mismatch_is_an_error() {
    let a = generic(2, 3);
    let b = generic(2, 3);
    assert!(a.mul(&a.one(), &b.one()).is_err());
    let _ = Algebra::<MultiPoly>::generic(2, 3).unwrap().q().clone() * &MultiPoly::one();
    assert!(MultiPoly::one().is_unit());
}

fn worked_example_s() -> TypedTableau {
    let rows: &[&[&[(usize, usize)]]] = &[
        &[&[(1, 1), (1, 1), (1, 1), (1, 2)], &[(2, 1), (2, 1), (3, 1)], &[(3, 1), (3, 2)], &[(2, 2)]],
        &[&[(1, 2), (1, 2)]],
    ];
    TypedTableau::from_filling(rows.iter().map(|c| c.iter().map(|r| r.to_vec()).collect()).collect()).unwrap()
}

#[test]
fn stabilizer_factors_of_worked_example() {
    let a = generic(2, 12);
    let s = worked_example_s();
    let names: Vec<String> = a.stabilizer_factors(&s).unwrap().iter().map(|f| a.format(f)).filter(|f| f != "1").collect();
    assert_eq!(names, ["1 + T_3 + T_{3,2} + T_{3,2,1}", "1 + T_6 + T_{6,5}", "1 + T_8"]);
    assert_eq!(a.t_s(&s).unwrap(), word(&a, &[7, 6, 5, 4, 11, 10, 9, 11, 10]));
}
