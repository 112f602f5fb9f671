//! Recomputes the homomorphism example λ=((2,2),(2,1)), ν=((5),(2)) and compares each
//! reference value with the computed one.

use akspecht::coeff::{parse_poly, CoeffElem, MultiPoly, RatFunc, Scalar, Specialization};
use akspecht::combinatorics::mc;
use akspecht::error::Result;
use akspecht::hecke::Algebra;
use akspecht::homsolver::{condition_system, random_specializations, solve, ConditionSystem, GeneratorKind};
use akspecht::{CyclotomicAlgebra, GenericAlgebra, RationalAlgebra};
use num_traits::One;
use serde_json::{json, Value};

use crate::Output;

struct Check {
    name: String,
    claimed: String,
    observed: String,
    ok: bool,
}

const CYCLOTOMIC: [(u32, &str); 5] = [(2, "1 + q"), (3, "1 + q + q^2"), (4, "1 + q^2"), (5, "1 + q + q^2 + q^3 + q^4"), (6, "1 - q + q^2")];

fn poly(s: &str) -> MultiPoly {
    parse_poly(s).expect("constant polynomial text")
}

fn multiplicity(p: &MultiPoly, f: &MultiPoly) -> usize {
    let mut k = 0;
    let mut cur = p.clone();
    while let Some(d) = cur.div_exact(f) {
        cur = d;
        k += 1;
    }
    k
}

/// Exponent of `f` in a nonzero rational function.
fn order(x: &RatFunc, f: &MultiPoly) -> isize {
    multiplicity(x.num(), f) as isize - multiplicity(x.den(), f) as isize
}

fn generic_entries(sys: &ConditionSystem, g: &GeneratorKind) -> Vec<RatFunc> {
    sys.block(g)
        .iter()
        .flat_map(|r| r.iter())
        .filter(|c| !c.is_zero())
        .filter_map(|c| match c {
            CoeffElem::Generic(x) => Some(x.clone()),
            _ => None,
        })
        .collect()
}

/// Cyclotomic polynomials in `q` dividing every entry of a block, with multiplicity.
fn common_factors(sys: &ConditionSystem, g: &GeneratorKind) -> Vec<(u32, isize)> {
    let entries = generic_entries(sys, g);
    if entries.is_empty() {
        return Vec::new();
    }
    CYCLOTOMIC
        .iter()
        .filter_map(|(k, s)| {
            let f = poly(s);
            let m = entries.iter().map(|x| order(x, &f)).min().unwrap_or(0);
            (m > 0).then_some((*k, m))
        })
        .collect()
}

fn factor_text(fs: &[(u32, isize)]) -> String {
    if fs.is_empty() {
        return "none".into();
    }
    fs.iter()
        .map(|(k, m)| {
            let s = CYCLOTOMIC.iter().find(|c| c.0 == *k).map(|c| c.1).unwrap_or("?");
            if *m == 1 {
                format!("({s})")
            } else {
                format!("({s})^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join("")
}

fn factor_check(sys: &ConditionSystem, g: &GeneratorKind, claimed: &[u32]) -> Check {
    let found = common_factors(sys, g);
    let ok = claimed.iter().all(|k| found.iter().any(|(j, m)| j == k && *m >= 1));
    let claimed_list: Vec<(u32, isize)> = claimed.iter().map(|k| (*k, 1)).collect();
    Check {
        name: format!("{g} row factor"),
        claimed: factor_text(&claimed_list),
        observed: factor_text(&found),
        ok: ok && !sys.block_is_zero(g),
    }
}

/// The block has the form `(α₁·a + α₂·b)·w` for a common vector `w`, so the second column
/// is `b/a` times the first.
fn ratio_check(sys: &ConditionSystem, g: &GeneratorKind, a: &str, b: &str) -> Check {
    let claimed = CoeffElem::Generic(RatFunc::from(poly(b))).try_div(&CoeffElem::Generic(RatFunc::from(poly(a)))).expect("nonzero");
    let block = sys.block(g);
    let mut observed: Option<CoeffElem> = None;
    let mut ok = block.iter().any(|r| !r[0].is_zero() || !r[1].is_zero());
    for r in &block {
        match (r[0].is_zero(), r[1].is_zero()) {
            (true, true) => {}
            (false, _) => {
                let q = r[1].try_div(&r[0]).expect("nonzero");
                match &observed {
                    None => observed = Some(q),
                    Some(o) => ok &= o.try_eq(&q).unwrap_or(false),
                }
            }
            (true, false) => ok = false,
        }
    }
    let observed_text = observed.as_ref().map(|o| o.to_string()).unwrap_or_else(|| "undefined".into());
    ok &= observed.map(|o| o.try_eq(&claimed).unwrap_or(false)).unwrap_or(false);
    Check {
        name: format!("{g} row shape α₁({a}) + α₂({b})"),
        claimed: format!("column ratio {claimed}"),
        observed: format!("column ratio {observed_text}"),
        ok,
    }
}

fn kinds() -> [GeneratorKind; 4] {
    [
        GeneratorKind::D { s: 1, d: 1, t: 1 },
        GeneratorKind::D { s: 1, d: 1, t: 2 },
        GeneratorKind::D { s: 2, d: 1, t: 1 },
        GeneratorKind::L { s: 1 },
    ]
}

pub fn reproduce(seed: u64) -> Result<Output> {
    let lam = mc(&[&[2, 2], &[2, 1]]);
    let nu = mc(&[&[5], &[2]]);
    let [d111, d112, d211, l1] = kinds();
    let mut checks = Vec::new();

    let g: GenericAlgebra = Algebra::generic(2, 7)?;
    let sys = condition_system(&g, &lam, &nu)?;
    checks.push(Check {
        name: "generators in order".into(),
        claimed: format!("{d111}, {d112}, {d211}, {l1}"),
        observed: sys.generators.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(", "),
        ok: sys.generators == kinds(),
    });
    checks.push(factor_check(&sys, &d111, &[3]));
    checks.push(factor_check(&sys, &d112, &[2, 3]));
    checks.push(ratio_check(&sys, &d211, "1 + q", "q^2"));
    checks.push(ratio_check(&sys, &l1, "q^4*Q1 - q*Q2", "-q^2*Q2 + q*Q2"));
    let generic_rank = solve(sys)?.rank;
    checks.push(Check {
        name: "generic solution".into(),
        claimed: "zero".into(),
        observed: format!("rank {generic_rank} of 2"),
        ok: generic_rank == 2,
    });

    let spec = Specialization::cyclotomic(3, vec![MultiPoly::one(), MultiPoly::q_pow(5)])?;
    let c: CyclotomicAlgebra = Algebra::cyclotomic(7, &spec)?;
    let sys3 = condition_system(&c, &lam, &nu)?;
    let vanish = [d111, d112].iter().filter(|k| sys3.block_is_zero(k)).count();
    checks.push(Check {
        name: "d rows at e=3".into(),
        claimed: "both vanish".into(),
        observed: format!("{vanish} of 2 vanish"),
        ok: vanish == 2,
    });
    let rep = solve(sys3)?;
    let q = c.q().clone();
    let qi = q.try_inv().expect("q is a unit");
    let alpha2 = (-(qi.clone() * &qi) * &(akspecht::coeff::Cyclotomic::one() + q)).to_coeff();
    let (observed, ok) = match rep.nullspace.as_slice() {
        [v] if !v.coeffs[0].1.is_zero() => {
            let ratio = v.coeffs[1].1.try_div(&v.coeffs[0].1)?;
            (format!("dimension 1, α₂/α₁ = {ratio}"), ratio.try_eq(&alpha2)?)
        }
        ns => (format!("dimension {}", ns.len()), false),
    };
    checks.push(Check {
        name: "solution at e=3, Q2 = q^5 Q1".into(),
        claimed: format!("dimension 1, α₂/α₁ = -q^-2(1 + q) = {alpha2}"),
        observed,
        ok,
    });

    for spec in random_specializations(seed, 2, 7, 2) {
        let b: RationalAlgebra = Algebra::rational(7, &spec)?;
        let dim = solve(condition_system(&b, &lam, &nu)?)?.nullspace.len();
        checks.push(Check {
            name: format!("solution at {spec}"),
            claimed: "zero".into(),
            observed: format!("dimension {dim}"),
            ok: dim == 0,
        });
    }

    let mismatch = checks.iter().any(|c| !c.ok);
    let json_checks: Vec<Value> =
        checks.iter().map(|c| json!({ "name": c.name, "claimed": c.claimed, "observed": c.observed, "match": c.ok })).collect();
    let mut text = format!("λ = {lam}, ν = {nu}\n");
    for c in &checks {
        let mark = if c.ok { "ok" } else { "MISMATCH" };
        text += &format!("{mark:>8}  {}: claimed {}, observed {}\n", c.name, c.claimed, c.observed);
    }
    Ok(Output {
        json: json!({ "lambda": lam, "nu": nu, "checks": json_checks, "all_match": !mismatch }),
        text: text.trim_end().to_string(),
        mismatch,
    })
}
