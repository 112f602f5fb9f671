use akspecht::combinatorics::{enumerate_semistandard, enumerate_standard, Multicomposition};
use akspecht::error::{Error, Result};
use akspecht::hecke::Algebra;
use akspecht::homsolver::{condition_system, generator_families, ideal_equal, solve as solve_system, Generator};
use akspecht::coeff::Scalar;
use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use crate::config::{parse_shape, AnyAlgebra, RunConfig};
use crate::{with_algebra, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Named {
    /// x_λ, the row stabilizer sum.
    X,
    /// u⁺_λ.
    UPlus,
    /// m_λ = u⁺_λ x_λ.
    M,
}

/// Exactly one of the element sources must be given.
#[derive(Args, Debug)]
pub struct ElementArgs {
    /// A word in the generators, e.g. `0,1,2` for T_0 T_1 T_2; empty for the identity.
    #[arg(long, allow_hyphen_values = true)]
    word: Option<String>,
    /// The Jucys-Murphy element L_k.
    #[arg(long)]
    jucys: Option<usize>,
    /// One of the elements attached to `--lambda`.
    #[arg(long, value_enum)]
    name: Option<Named>,
    /// 𝔡^{(s)}_{d,t} for `--lambda`, written `s,d,t`.
    #[arg(long)]
    frak_d: Option<String>,
    /// 𝔩^{(s)} for `--lambda`.
    #[arg(long)]
    frak_l: Option<usize>,
    /// C(m;η) with η given by `--eta`.
    #[arg(long)]
    c_sum: Option<usize>,
    #[arg(long)]
    eta: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
}

/// Parses `1,2,3` into integers, reporting the byte offset of a bad entry.
pub fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    akspecht::coeff::split_list(s)
        .into_iter()
        .filter(|(_, t)| !t.trim().is_empty())
        .map(|(off, t)| {
            let lead = t.len() - t.trim_start().len();
            t.trim().parse::<usize>().map_err(|e| Error::Parse { pos: off + lead, msg: format!("`{}`: {e}", t.trim()) })
        })
        .collect()
}

fn with_shape_json<T: serde::Serialize>(items: &[T]) -> Value {
    serde_json::to_value(items).expect("tableaux serialize")
}

pub fn tableaux(shape: &str, ty: Option<&str>) -> Result<Output> {
    let shape = parse_shape(shape)?;
    if !shape.is_multipartition() {
        return Err(Error::InvalidInput(format!("{shape} is not a multipartition")));
    }
    match ty {
        None => {
            let ts = enumerate_standard(&shape);
            let text = ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n");
            Ok(Output {
                json: json!({ "shape": shape, "kind": "standard", "count": ts.len(), "tableaux": with_shape_json(&ts) }),
                text: format!("{} standard tableaux of shape {shape}\n{text}", ts.len()),
                mismatch: false,
            })
        }
        Some(ty) => {
            let ty = parse_shape(ty)?;
            if ty.size() != shape.size() {
                return Err(Error::InvalidInput(format!("{ty} and {shape} have different sizes")));
            }
            let ts = enumerate_semistandard(&shape, &ty);
            let text = ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n");
            Ok(Output {
                json: json!({ "shape": shape, "type": ty, "kind": "semistandard", "count": ts.len(), "tableaux": with_shape_json(&ts) }),
                text: format!("{} semistandard tableaux of shape {shape} and type {ty}\n{text}", ts.len()),
                mismatch: false,
            })
        }
    }
}

fn lambda_arg(args: &ElementArgs, what: &str) -> Result<Multicomposition> {
    match &args.lambda {
        Some(s) => parse_shape(s),
        None => Err(Error::InvalidInput(format!("{what} needs --lambda"))),
    }
}

fn build<S: Scalar>(a: &Algebra<S>, args: &ElementArgs, lambda: Option<&Multicomposition>) -> Result<(String, akspecht::hecke::Element<S>)> {
    let lam = || lambda.ok_or_else(|| Error::InvalidInput("this element needs --lambda".into()));
    if let Some(w) = &args.word {
        let word = parse_usize_list(w)?;
        return Ok((format!("T word {word:?}"), a.t_word(&word)?));
    }
    if let Some(k) = args.jucys {
        return Ok((format!("L_{k}"), a.jucys_l(k)?));
    }
    if let Some(name) = args.name {
        let l = lam()?;
        return Ok(match name {
            Named::X => (format!("x_{l}"), a.x_of(l)?),
            Named::UPlus => (format!("u+_{l}"), a.u_plus(l)?),
            Named::M => (format!("m_{l}"), a.m_of(l)?),
        });
    }
    if let Some(sdt) = &args.frak_d {
        let v = parse_usize_list(sdt)?;
        let [s, d, t] = v[..] else {
            return Err(Error::InvalidInput("--frak-d takes three integers s,d,t".into()));
        };
        return Ok((format!("d^({s})_{{{d},{t}}} for {}", lam()?), a.frak_d(lam()?, s, d, t)?));
    }
    if let Some(s) = args.frak_l {
        return Ok((format!("l^({s}) for {}", lam()?), a.frak_l(lam()?, s)?));
    }
    if let Some(m) = args.c_sum {
        let eta = parse_usize_list(args.eta.as_deref().unwrap_or(""))?;
        return Ok((format!("C({m};{eta:?})"), a.c_sum(m, &eta)?));
    }
    Err(Error::InvalidInput("give one of --word, --jucys, --name, --frak-d, --frak-l, --c-sum".into()))
}

pub fn element(cfg: &RunConfig, args: &ElementArgs) -> Result<Output> {
    let sources = [args.word.is_some(), args.jucys.is_some(), args.name.is_some(), args.frak_d.is_some(), args.frak_l.is_some(), args.c_sum.is_some()];
    if sources.iter().filter(|b| **b).count() > 1 {
        return Err(Error::InvalidInput("give only one element source".into()));
    }
    let needs_lambda = args.name.is_some() || args.frak_d.is_some() || args.frak_l.is_some();
    let lambda = if needs_lambda { Some(lambda_arg(args, "this element")?) } else { None };
    let any = cfg.algebra(lambda.as_ref())?;
    let params = any.describe();
    with_algebra!(&any, a => {
        let (label, x) = build(a, args, lambda.as_ref())?;
        let text = a.format(&x);
        Ok(Output {
            json: json!({ "r": a.r(), "n": a.n(), "parameters": params, "element": label, "text": text, "terms": a.to_json(&x) }),
            text: format!("{label} = {text}"),
            mismatch: false,
        })
    })
}

fn generator_json<S: Scalar>(a: &Algebra<S>, lambda: &Multicomposition, g: &Generator<S>) -> Result<Value> {
    Ok(json!({
        "generator": g.kind.to_json(),
        "name": g.kind.to_string(),
        "target_shape": g.kind.target_shape(lambda)?,
        "h": a.format(&g.h),
        "h_terms": a.to_json(&g.h),
        "m_lambda_h_size": g.element.len(),
    }))
}

pub fn generators(cfg: &RunConfig, lambda: &str) -> Result<Output> {
    let lambda = parse_shape(lambda)?;
    let any = cfg.algebra(Some(&lambda))?;
    with_algebra!(&any, a => {
        let fam = generator_families(a, &lambda)?;
        let d = fam.d.iter().map(|g| generator_json(a, &lambda, g)).collect::<Result<Vec<_>>>()?;
        let l = fam.l.iter().map(|g| generator_json(a, &lambda, g)).collect::<Result<Vec<_>>>()?;
        let mut text = format!("generators of {lambda}: {} of type d, {} of type l\n", d.len(), l.len());
        for g in fam.all() {
            text += &format!("{} = {}\n", g.kind, a.format(&g.h));
        }
        Ok(Output { json: json!({ "lambda": lambda, "d": d, "l": l }), text: text.trim_end().to_string(), mismatch: false })
    })
}

pub fn solve(cfg: &RunConfig, lambda: &str, nu: &str) -> Result<Output> {
    let lambda = parse_shape(lambda)?;
    let nu = parse_shape(nu)?;
    let any = cfg.algebra(Some(&lambda))?;
    let params = any.describe();
    let report = with_algebra!(&any, a => solve_system(condition_system(a, &lambda, &nu)?)?);
    let mut json = report.to_json();
    json["parameters"] = json!(params);
    Ok(Output { json, text: format!("parameters: {params}\n{}", report.pretty().trim_end()), mismatch: false })
}

pub fn verify_ideal(cfg: &RunConfig, lambda: &str, max_iter: usize) -> Result<Output> {
    let lambda = parse_shape(lambda)?;
    let any: AnyAlgebra = cfg.algebra(Some(&lambda))?;
    let params = any.describe();
    let rep = with_algebra!(&any, a => ideal_equal(a, &lambda, max_iter)?);
    let mut json = rep.to_json();
    json["parameters"] = json!(params);
    let verdict = if rep.equal { "equal" } else { "not equal" };
    let text = format!(
        "λ = {}, parameters: {params}\nideal from {} generators: dimension {}\nM^λ ∩ Ȟ^λ: dimension {}\ncontained: {}, {verdict}, {} rounds",
        rep.lambda, rep.generators, rep.ideal_dim, rep.intersection_dim, rep.contained, rep.iterations
    );
    Ok(Output { json, text, mismatch: false })
}
