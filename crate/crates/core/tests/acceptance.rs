//! One PASS/FAIL line per acceptance criterion. Every comparison is exact; there are no
//! numerical tolerances anywhere.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};

use akspecht::cells::{m_basis_indices, SpechtModule};
use akspecht::coeff::linalg::SparseEchelon;
use akspecht::coeff::{CoeffElem, Cyclotomic, MultiPoly, Rational, Scalar, Specialization};
use akspecht::combinatorics::{mc, Multicomposition, Tableau, TypedTableau};
use akspecht::hecke::{Algebra, Element, Label};
use akspecht::homsolver::{
    condition_system, condition_system_in, ideal_equal, random_element, random_rational_spec,
    random_specializations, solve, ConditionSystem, GeneratorKind, Preimage,
};
use common::*;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(id: u32, name: &str, f: impl FnOnce() -> Check) -> bool {
    let t0 = std::time::Instant::now();
    let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let secs = t0.elapsed().as_secs_f64();
    match &out {
        Ok(d) => println!("criterion {id} PASS [{name}] tolerance=exact ({secs:.1}s) {d}"),
        Err(d) => println!("criterion {id} FAIL [{name}] tolerance=exact ({secs:.1}s) {d}"),
    }
    out.is_ok()
}

fn relations() -> Check {
    let mut total = 0;
    for r in 1..=3 {
        for n in 1..=4 {
            total += relation_suite(&generic(r, n)).map_err(|e| format!("r={r} n={n}: {e}"))?;
        }
    }
    Ok(format!("{total} identities over r<=3, n<=4"))
}

fn vec_of<S: Scalar>(x: &Element<S>) -> Vec<(Label, S)> {
    x.terms().map(|(k, c)| (*k, c.clone())).collect()
}

fn dimensions() -> Check {
    for (r, n) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
        let a = generic(r, n);
        let target = r.pow(n as u32) * (1..=n).product::<usize>();
        // span of all words in the generators, grown from 1
        let mut span: SparseEchelon<Label, MultiPoly> = SparseEchelon::new(false);
        let mut frontier = vec![a.one()];
        let mut labels = std::collections::HashSet::new();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in frontier {
                for (k, _) in x.terms() {
                    ensure((1..=n).all(|i| (k.exponent(i) as usize) < r), || format!("label exponent ≥ r in {k:?}"))?;
                    labels.insert(*k);
                }
                if span.insert(vec_of(&x)) {
                    next.extend((0..n).map(|g| a.right_mul_t(&x, g)));
                }
            }
            frontier = next;
        }
        ensure(span.rank() == target, || format!("r={r} n={n}: closure has dimension {}", span.rank()))?;
        ensure(labels.len() <= target, || format!("r={r} n={n}: {} labels", labels.len()))?;
        let mut rng = ChaCha8Rng::seed_from_u64(r as u64 * 100 + n as u64);
        for _ in 0..10 {
            let x = random_element(&a, &mut rng, 4);
            let y = random_element(&a, &mut rng, 4);
            for (k, _) in a.mul(&x, &y).unwrap().terms() {
                ensure((1..=n).all(|i| (k.exponent(i) as usize) < r), || format!("product escaped to {k:?}"))?;
            }
        }
        let sq: usize =
            Multicomposition::multipartitions(n, r).iter().map(|nu| Tableau::enumerate_standard(nu).len().pow(2)).sum();
        ensure(sq == target, || format!("r={r} n={n}: Σ|Std|² = {sq}, expected {target}"))?;
    }
    Ok("closure rank and Σ|Std(ν)|² equal rⁿn! for (1,3),(2,2),(2,3),(3,2)".into())
}

fn golden_generators() -> Check {
    let a = generic(3, 12);
    let lam = mc(&[&[3, 1], &[2, 2], &[2, 1, 1]]);
    let w = |ws: &[&[usize]]| ws.iter().fold(a.zero(), |acc, x| acc + word(&a, x));
    let expected: Vec<(GeneratorKind, Element<MultiPoly>)> = vec![
        (GeneratorKind::D { s: 1, d: 1, t: 1 }, w(&[&[], &[3], &[3, 2], &[3, 2, 1]])),
        (GeneratorKind::D { s: 2, d: 1, t: 1 }, w(&[&[], &[6], &[6, 5]])),
        (GeneratorKind::D { s: 2, d: 1, t: 2 }, w(&[&[], &[6], &[6, 5], &[6, 7], &[6, 7, 5], &[6, 7, 5, 6]])),
        (GeneratorKind::D { s: 3, d: 1, t: 1 }, w(&[&[], &[10], &[10, 9]])),
        (GeneratorKind::D { s: 3, d: 2, t: 1 }, w(&[&[], &[11]])),
        (GeneratorKind::L { s: 1 }, a.jucys_l(5).unwrap() - a.scalar(MultiPoly::big_q(2))),
        (GeneratorKind::L { s: 2 }, a.jucys_l(9).unwrap() - a.scalar(MultiPoly::big_q(3))),
    ];
    let (ds, ls) = lam.def_sets();
    ensure(ds.len() == 5 && ls.len() == 2, || format!("def sets {ds:?} {ls:?}"))?;
    for (kind, exp) in &expected {
        let got = match *kind {
            GeneratorKind::D { s, d, t } => a.frak_d(&lam, s, d, t).unwrap(),
            GeneratorKind::L { s } => a.frak_l(&lam, s).unwrap(),
        };
        ensure(&got == exp, || format!("{kind}: {} ≠ {}", a.format(&got), a.format(exp)))?;
    }
    Ok("five 𝔡 and two 𝔩 elements match term by term".into())
}

fn worked_stabilizer_s() -> TypedTableau {
    let rows: &[&[&[(usize, usize)]]] = &[
        &[&[(1, 1), (1, 1), (1, 1), (1, 2)], &[(2, 1), (2, 1), (3, 1)], &[(3, 1), (3, 2)], &[(2, 2)]],
        &[&[(1, 2), (1, 2)]],
    ];
    TypedTableau::from_filling(rows.iter().map(|c| c.iter().map(|r| r.to_vec()).collect()).collect()).unwrap()
}

fn stabilizer_factorization() -> Check {
    let a = generic(2, 5);
    let mut count = 0;
    for nu in Multicomposition::multipartitions(5, 2) {
        for lam in Multicomposition::multipartitions(5, 2).iter().filter(|l| l.is_strictly_dominated_by(&nu)) {
            for s in TypedTableau::enumerate_semistandard(&nu, lam) {
                let lhs = a.m_stab(&s, &Tableau::initial(&nu)).unwrap();
                ensure(lhs == a.stabilizer_product(&s).unwrap(), || format!("λ={lam} ν={nu} S={s}"))?;
                count += 1;
            }
        }
    }
    let s = worked_stabilizer_s();
    ensure(s.ty() == &mc(&[&[3, 2, 2], &[3, 1, 1]]) && s.shape() == &mc(&[&[4, 3, 2, 1], &[2]]), || "example shape".into())?;
    let g = generic(2, 12);
    let names: Vec<String> = g.stabilizer_factors(&s).unwrap().iter().map(|f| g.format(f)).filter(|f| f != "1").collect();
    ensure(names == ["1 + T_3 + T_{3,2} + T_{3,2,1}", "1 + T_6 + T_{6,5}", "1 + T_8"], || format!("factors {names:?}"))?;
    ensure(g.t_s(&s).unwrap() == word(&g, &[7, 6, 5, 4, 11, 10, 9, 11, 10]), || "T_S".into())?;
    drop(g);
    let b = rational(2, 12);
    let lhs = b.m_stab(&s, &Tableau::initial(s.shape())).unwrap();
    let terms = lhs.len();
    let rhs = b.stabilizer_product(&s).unwrap();
    ensure(lhs == rhs, || "n=12 example differs".into())?;
    Ok(format!("{count} generic cases with n=5; n=12 example equal in rational mode ({terms} terms)"))
}

fn ideal() -> Check {
    let mut checked = 0;
    for n in 1..=4 {
        for (i, spec) in random_specializations(2024 + n as u64, 2, n, 3).iter().enumerate() {
            let a: Algebra<Rational> = Algebra::rational(n, spec).unwrap();
            for lam in Multicomposition::multipartitions(n, 2) {
                let rep = ideal_equal(&a, &lam, 200).map_err(|e| format!("λ={lam}: {e}"))?;
                let expect = m_basis_indices(&lam, true).len();
                ensure(rep.equal && rep.contained, || format!("λ={lam} spec #{i} ({spec}): {rep:?}"))?;
                ensure(rep.intersection_dim == expect, || format!("λ={lam}: dim {} vs count {expect}", rep.intersection_dim))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (λ, specialization) pairs with r=2, n<=4"))
}

/// Multiplicity of `f` in `p`, assuming `p ≠ 0`.
fn multiplicity(p: &MultiPoly, f: &MultiPoly) -> usize {
    let mut k = 0;
    let mut cur = p.clone();
    while let Some(d) = cur.div_exact(f) {
        cur = d;
        k += 1;
    }
    k
}

/// Whether the rational function `x` is divisible by `f` in the localization away from `f`.
fn divisible(x: &CoeffElem, f: &MultiPoly) -> bool {
    let CoeffElem::Generic(x) = x else { return false };
    x.is_zero() || multiplicity(x.num(), f) > multiplicity(x.den(), f)
}

fn column(sys: &ConditionSystem, g: &GeneratorKind, j: usize) -> Vec<CoeffElem> {
    sys.block(g).iter().map(|r| r[j].clone()).collect()
}

fn proportional(sys: &ConditionSystem, g: &GeneratorKind, a: &str, b: &str) -> Result<(), String> {
    let (pa, pb) = (CoeffElem::Generic(poly(a).into()), CoeffElem::Generic(poly(b).into()));
    let (c0, c1) = (column(sys, g, 0), column(sys, g, 1));
    ensure(c0.iter().chain(&c1).any(|c| !c.is_zero()), || format!("{g} block is zero"))?;
    for (x, y) in c0.iter().zip(&c1) {
        let ok = x.try_mul(&pb).unwrap().try_eq(&y.try_mul(&pa).unwrap()).unwrap();
        ensure(ok, || format!("{g} block is not (α₁({a}) + α₂({b}))·w"))?;
    }
    Ok(())
}

fn worked_example() -> Check {
    let lam = mc(&[&[2, 2], &[2, 1]]);
    let nu = mc(&[&[5], &[2]]);
    let mut failures = Vec::new();
    // (a) generic rows
    let a = generic(2, 7);
    let sys = condition_system(&a, &lam, &nu).map_err(|e| e.to_string())?;
    let d111 = GeneratorKind::D { s: 1, d: 1, t: 1 };
    let d112 = GeneratorKind::D { s: 1, d: 1, t: 2 };
    let d211 = GeneratorKind::D { s: 2, d: 1, t: 1 };
    let l1 = GeneratorKind::L { s: 1 };
    ensure(sys.generators == [d111, d112, d211, l1], || format!("generators {:?}", sys.generators))?;
    let checks: [(&GeneratorKind, &[&str]); 2] = [(&d111, &["1 + q + q^2"]), (&d112, &["1 + q", "1 + q + q^2"])];
    for (g, factors) in checks {
        ensure(!sys.block_is_zero(g), || format!("{g} block is zero"))?;
        for f in factors {
            let fp = poly(f);
            if !sys.block(g).iter().flat_map(|r| r.iter()).all(|c| divisible(c, &fp)) {
                failures.push(format!("(a) {g} block is not divisible by {f}"));
            }
        }
    }
    if let Err(e) = proportional(&sys, &d211, "1 + q", "q^2") {
        failures.push(format!("(a) {e}"));
    }
    if let Err(e) = proportional(&sys, &l1, "q^4*Q1 - q*Q2", "-q^2*Q2 + q*Q2") {
        failures.push(format!("(a) {e}"));
    }
    // (b) e = 3 with Q2 = q^5 Q1
    let spec = Specialization::cyclotomic(3, vec![MultiPoly::one(), MultiPoly::q_pow(5)]).unwrap();
    let c = Algebra::cyclotomic(7, &spec).unwrap();
    let sys3 = condition_system(&c, &lam, &nu).map_err(|e| e.to_string())?;
    if !(sys3.block_is_zero(&d111) && sys3.block_is_zero(&d112)) {
        failures.push("(b) 𝔡-rows do not vanish at e=3".into());
    }
    let rep = solve(sys3).map_err(|e| e.to_string())?;
    let q = c.q().clone();
    let qi = q.try_inv().unwrap();
    let alpha2 = -(qi.clone() * &qi) * &(Cyclotomic::one() + q);
    match rep.nullspace.as_slice() {
        [v] if !v.coeffs[0].1.is_zero() && v.coeffs[1].1.try_div(&v.coeffs[0].1).unwrap().try_eq(&alpha2.to_coeff()).unwrap() => {}
        ns => failures.push(format!("(b) nullspace {:?}", ns.iter().map(|v| v.to_string()).collect::<Vec<_>>())),
    }
    // (c) rational specializations away from e = 3
    for spec in random_specializations(77, 2, 7, 2) {
        let b: Algebra<Rational> = Algebra::rational(7, &spec).unwrap();
        let rep = solve(condition_system(&b, &lam, &nu).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        if !rep.nullspace.is_empty() {
            failures.push(format!("(c) nonzero solution at {spec}"));
        }
    }
    if failures.is_empty() {
        Ok("(a) generic factors, (b) e=3 one-dimensional solution (1, -q^-2(1+q)), (c) zero at rational q".into())
    } else {
        Err(failures.join("; "))
    }
}

fn residues() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut shapes = Vec::new();
    while shapes.len() < 5 {
        let r = rng.gen_range(1..=3);
        let n = if r == 3 { rng.gen_range(2..=4) } else { rng.gen_range(2..=5) };
        let all = Multicomposition::multipartitions(n, r);
        shapes.push((r, n, all[rng.gen_range(0..all.len())].clone()));
    }
    let mut checked = 0;
    for (r, n, nu) in &shapes {
        let spec = random_rational_spec(&mut rng, *r, *n);
        let (q, _, qs) = spec.rational_params().unwrap();
        let a: Algebra<Rational> = Algebra::rational(*n, &spec).unwrap();
        let sm = SpechtModule::new(&a, nu).unwrap();
        let m = a.m_of(nu).unwrap();
        // walk the initial tableau: entries fill rows left to right, component by component
        let mut i = 0;
        for (z, comp) in nu.components().iter().enumerate() {
            for (x, &len) in comp.iter().enumerate() {
                for y in 0..len {
                    i += 1;
                    let e = y as i32 - x as i32;
                    let qe = if e >= 0 { q.clone() } else { q.recip() };
                    let res: BigRational = (0..e.abs()).fold(qs[z].clone(), |acc, _| acc * &qe);
                    let v = sm.reduce(&a.mul(&m, &a.jucys_l(i).unwrap()).unwrap()).unwrap();
                    let ok = v.coords().len() == 1
                        && v.coords()[0].0 == Tableau::initial(nu)
                        && v.coords()[0].1.try_eq(&CoeffElem::Rational(res.clone())).unwrap();
                    ensure(ok, || format!("ν={nu} i={i}: {v} vs {res}"))?;
                    checked += 1;
                }
            }
        }
    }
    let names: Vec<String> = shapes.iter().map(|s| s.2.to_string()).collect();
    Ok(format!("{checked} residues on {}", names.join(" ")))
}

fn cross_validation() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut pairs = 0;
    let mut nonzero = 0;
    let mut samples = 0;
    while pairs < 10 {
        let n = rng.gen_range(2..=4);
        let parts = Multicomposition::multipartitions(n, 2);
        let lam = parts[rng.gen_range(0..parts.len())].clone();
        let nus: Vec<_> = parts
            .iter()
            .filter(|v| lam.is_dominated_by(v) && !TypedTableau::enumerate_semistandard(v, &lam).is_empty())
            .collect();
        let nu = nus[rng.gen_range(0..nus.len())].clone();
        let (n_ok, k_ok) = if rng.gen_bool(0.5) {
            let e = rng.gen_range(2..=3u32);
            let k = rng.gen_range(0..e as i16);
            let spec = Specialization::cyclotomic(e, vec![MultiPoly::one(), MultiPoly::q_pow(k)]).unwrap();
            let a = Algebra::cyclotomic(n, &spec).unwrap();
            check_pair(&a, &lam, &nu, &mut rng)?
        } else {
            let spec = random_rational_spec(&mut rng, 2, n);
            let a: Algebra<Rational> = Algebra::rational(n, &spec).unwrap();
            check_pair(&a, &lam, &nu, &mut rng)?
        };
        nonzero += n_ok;
        samples += k_ok;
        pairs += 1;
    }
    ensure(nonzero > 0, || "every sampled nullspace was zero".into())?;
    Ok(format!("{pairs} pairs, {nonzero} nullspace vectors, {samples} vanishing evaluations"))
}

/// Returns the number of nullspace vectors and of evaluations checked.
fn check_pair<S: Scalar>(a: &Algebra<S>, lam: &Multicomposition, nu: &Multicomposition, rng: &mut ChaCha8Rng) -> Result<(usize, usize), String> {
    let sm = SpechtModule::new(a, nu).map_err(|e| e.to_string())?;
    let rep = solve(condition_system_in(&sm, lam).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let inter = akspecht::cells::intersection_basis(a, lam).map_err(|e| e.to_string())?;
    if rep.nullspace.is_empty() || inter.is_empty() {
        return Ok((rep.nullspace.len(), 0));
    }
    let pre = Preimage::new(a, lam).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for _ in 0..20 {
        let mut x = a.zero();
        for _ in 0..2 {
            let (_, b) = &inter[rng.gen_range(0..inter.len())];
            x = x + a.mul(b, &random_element(a, rng, 3)).unwrap();
        }
        let h = pre.solve(&x).map_err(|e| format!("λ={lam}: preimage {e}"))?;
        for theta in &rep.nullspace {
            let v = theta.apply(&sm, &h).map_err(|e| e.to_string())?;
            ensure(v.is_zero(), || format!("λ={lam} ν={nu}: Θ={theta} gives {v}"))?;
            checked += 1;
        }
    }
    Ok((rep.nullspace.len(), checked))
}

#[test]
fn acceptance() {
    let results = [
        run(1, "relation suite", relations),
        run(2, "dimension oracle", dimensions),
        run(3, "golden generators", golden_generators),
        run(4, "stabilizer factorization", stabilizer_factorization),
        run(5, "ideal equality", ideal),
        run(6, "worked homomorphism example", worked_example),
        run(7, "residue action", residues),
        run(8, "cross-validation", cross_validation),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
