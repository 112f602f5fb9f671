//! The generator families `𝐃` and `𝐋` of `M^λ ∩ Ȟ^λ`, the linear conditions they impose on
//! a combination `Θ = Σ a_𝚃 φ_𝚃` of semistandard homomorphisms, and a direct check that
//! the right ideal they generate is all of `M^λ ∩ Ȟ^λ`.

mod random;

use std::fmt;

use serde_json::{json, Value};

pub use random::{random_element, random_rational_spec, random_specializations};

use crate::cells::{element_vector, intersection_basis, SpechtModule, SpechtVector};
use crate::coeff::linalg::{bareiss_echelon, echelon_report, nullspace, EchelonReport};
use crate::coeff::{poly_to_json, CoeffElem, Cyclotomic, Mode, RatFunc, Rational, Scalar};
use crate::combinatorics::{Multicomposition, Multipartition, Permutation, Tableau, TypedTableau};
use crate::error::{invalid, Error, Result};
use crate::hecke::{Algebra, Element, Label};

/// What the solver claims about its output.
pub const SCOPE: &str = "homomorphisms constructed from the generator conditions; not necessarily all homomorphisms";

/// Index of a generator: `𝔡^{(s)}_{d,t}` or `𝔩^{(s)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    D { s: usize, d: usize, t: usize },
    L { s: usize },
}

impl GeneratorKind {
    /// The shape `λ·𝔡` or `λ·𝔩` reached by moving the corresponding nodes.
    pub fn target_shape(&self, lambda: &Multicomposition) -> Result<Multicomposition> {
        match *self {
            GeneratorKind::D { s, d, t } => lambda.shape_after_d(s, d, t),
            GeneratorKind::L { s } => lambda.shape_after_l(s),
        }
    }

    pub fn to_json(&self) -> Value {
        match *self {
            GeneratorKind::D { s, d, t } => json!({ "kind": "d", "s": s, "d": d, "t": t }),
            GeneratorKind::L { s } => json!({ "kind": "l", "s": s }),
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorKind::D { s, d, t } => write!(f, "d^({s})_{{{d},{t}}}"),
            GeneratorKind::L { s } => write!(f, "l^({s})"),
        }
    }
}

/// A generator `m_λ h` of the ideal, with `h` an element `𝔡` or `𝔩`.
#[derive(Clone, Debug)]
pub struct Generator<S: Scalar> {
    pub kind: GeneratorKind,
    pub h: Element<S>,
    pub element: Element<S>,
}

/// `𝐃` and `𝐋` for one `λ`.
#[derive(Clone, Debug)]
pub struct GeneratorFamilies<S: Scalar> {
    pub d: Vec<Generator<S>>,
    pub l: Vec<Generator<S>>,
}

impl<S: Scalar> GeneratorFamilies<S> {
    /// `𝐃` followed by `𝐋`.
    pub fn all(&self) -> impl Iterator<Item = &Generator<S>> {
        self.d.iter().chain(&self.l)
    }

    pub fn len(&self) -> usize {
        self.d.len() + self.l.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn generator_families<S: Scalar>(alg: &Algebra<S>, lambda: &Multipartition) -> Result<GeneratorFamilies<S>> {
    if !lambda.is_multipartition() {
        return invalid(format!("{lambda} is not a multipartition"));
    }
    let m = alg.m_of(lambda)?;
    let (ds, ls) = lambda.def_sets();
    let mut d = Vec::with_capacity(ds.len());
    for (s, dd, t) in ds {
        let h = alg.frak_d(lambda, s, dd, t)?;
        let element = alg.mul(&m, &h)?;
        d.push(Generator { kind: GeneratorKind::D { s, d: dd, t }, h, element });
    }
    let mut l = Vec::with_capacity(ls.len());
    for s in ls {
        let h = alg.frak_l(lambda, s)?;
        let element = alg.mul(&m, &h)?;
        l.push(Generator { kind: GeneratorKind::L { s }, h, element });
    }
    Ok(GeneratorFamilies { d, l })
}

/// `Θ = Σ a_𝚃 φ_𝚃 : M^λ → S^ν`.
#[derive(Clone, Debug)]
pub struct HomCandidate {
    pub lambda: Multipartition,
    pub nu: Multipartition,
    pub coeffs: Vec<(TypedTableau, CoeffElem)>,
}

impl HomCandidate {
    /// `Θ(m_λ h)`.
    pub fn apply<S: Scalar>(&self, sm: &SpechtModule<'_, S>, h: &Element<S>) -> Result<SpechtVector> {
        if sm.shape() != &self.nu {
            return invalid("candidate and Specht module have different shapes");
        }
        let mut acc = SpechtVector::zero(&self.nu, S::zero().to_coeff());
        for (t, a) in self.coeffs.iter().filter(|(_, a)| !a.is_zero()) {
            acc = acc.try_add(&sm.phi_t(t, h)?.try_scale(a)?)?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|(_, a)| a.is_zero())
    }

    pub fn to_json(&self) -> Value {
        let r = self.lambda.r();
        let coeffs: Vec<Value> = self.coeffs.iter().map(|(t, a)| json!([t, a.to_json(r)])).collect();
        json!({ "lambda": self.lambda, "nu": self.nu, "coeffs": coeffs })
    }
}

impl fmt::Display for HomCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.coeffs.iter().filter(|(_, a)| !a.is_zero()).map(|(t, a)| format!("({a})*phi[{t}]")).collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// One condition row: the coefficient of the basis vector `basis` in `Θ(m_λ h)` for the
/// generator `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowLabel {
    pub generator: GeneratorKind,
    pub basis: Tableau,
}

/// The linear system `M·a = 0` cut out by the generators: column `𝚃` of the block of a
/// generator `h` is `φ_𝚃(m_λ h)` in Specht coordinates.
#[derive(Clone, Debug)]
pub struct ConditionSystem {
    pub lambda: Multipartition,
    pub nu: Multipartition,
    pub mode: Mode,
    pub tableaux: Vec<TypedTableau>,
    pub generators: Vec<GeneratorKind>,
    pub labels: Vec<RowLabel>,
    pub rows: Vec<Vec<CoeffElem>>,
    pub notes: Vec<String>,
}

impl ConditionSystem {
    pub fn ncols(&self) -> usize {
        self.tableaux.len()
    }

    /// The rows contributed by one generator.
    pub fn block(&self, g: &GeneratorKind) -> Vec<&[CoeffElem]> {
        self.labels.iter().zip(&self.rows).filter(|(l, _)| &l.generator == g).map(|(_, r)| r.as_slice()).collect()
    }

    /// Whether every entry of the block of `g` vanishes.
    pub fn block_is_zero(&self, g: &GeneratorKind) -> bool {
        self.block(g).iter().all(|r| r.iter().all(|c| c.is_zero()))
    }

    pub fn to_json(&self) -> Value {
        let r = self.lambda.r();
        let rows: Vec<Value> = self.rows.iter().map(|row| Value::Array(row.iter().map(|c| c.to_json(r)).collect())).collect();
        let labels: Vec<Value> =
            self.labels.iter().map(|l| json!({ "generator": l.generator.to_json(), "basis": l.basis })).collect();
        json!({
            "lambda": self.lambda,
            "nu": self.nu,
            "mode": self.mode.to_string(),
            "tableaux": self.tableaux,
            "generators": self.generators.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
            "row_labels": labels,
            "conditions": rows,
            "notes": self.notes,
        })
    }
}

fn def_set_notes(lambda: &Multipartition) -> Vec<String> {
    let (ds, _) = lambda.def_sets();
    if lambda.components() != [vec![2, 2], vec![2, 1]] {
        return Vec::new();
    }
    let list: Vec<String> = ds.iter().map(|(s, d, t)| format!("({s},{d},{t})")).collect();
    vec![format!(
        "def(λ,𝔡) = {{{}}}; an index (1,2,1) would need a third row in the first component, so it is not used",
        list.join(",")
    )]
}

pub fn condition_system<S: Scalar>(alg: &Algebra<S>, lambda: &Multipartition, nu: &Multipartition) -> Result<ConditionSystem> {
    let sm = SpechtModule::new(alg, nu)?;
    condition_system_in(&sm, lambda)
}

/// [`condition_system`] against an already factored `S^ν`.
pub fn condition_system_in<S: Scalar>(sm: &SpechtModule<'_, S>, lambda: &Multipartition) -> Result<ConditionSystem> {
    let nu = sm.shape();
    if !lambda.is_multipartition() || lambda.size() != nu.size() || lambda.r() != nu.r() {
        return invalid(format!("{lambda} and {nu} are not multipartitions of the same size"));
    }
    if !lambda.is_dominated_by(nu) {
        return invalid(format!("{lambda} is not dominated by {nu}"));
    }
    let tableaux = TypedTableau::enumerate_semistandard(nu, lambda);
    if tableaux.is_empty() {
        return Err(Error::NoCandidates { lambda: lambda.to_string(), nu: nu.to_string() });
    }
    let alg = sm.algebra();
    let fam = generator_families(alg, lambda)?;
    let mut labels = Vec::new();
    let mut rows = Vec::new();
    for g in fam.all() {
        let cols = tableaux.iter().map(|t| Ok(sm.phi_t(t, &g.h)?.dense(sm.standard()))).collect::<Result<Vec<_>>>()?;
        for (i, basis) in sm.standard().iter().enumerate() {
            labels.push(RowLabel { generator: g.kind, basis: basis.clone() });
            rows.push(cols.iter().map(|c| c[i].clone()).collect());
        }
    }
    Ok(ConditionSystem {
        lambda: lambda.clone(),
        nu: nu.clone(),
        mode: alg.mode(),
        tableaux,
        generators: fam.all().map(|g| g.kind).collect(),
        labels,
        rows,
        notes: def_set_notes(lambda),
    })
}

/// The solutions of a condition system.
#[derive(Clone, Debug)]
pub struct SolutionReport {
    pub system: ConditionSystem,
    /// A basis of the solution space.
    pub nullspace: Vec<HomCandidate>,
    pub rank: usize,
    pub pivots: Vec<CoeffElem>,
    /// Generic mode only: the cleared, content-stripped echelon form.
    pub echelon: Option<EchelonReport>,
}

impl SolutionReport {
    pub fn to_json(&self) -> Value {
        let r = self.system.lambda.r();
        let mut v = self.system.to_json();
        let o = v.as_object_mut().expect("object");
        o.insert("scope".into(), json!(SCOPE));
        o.insert("rank".into(), json!(self.rank));
        o.insert("pivots".into(), Value::Array(self.pivots.iter().map(|c| c.to_json(r)).collect()));
        o.insert("nullspace".into(), Value::Array(self.nullspace.iter().map(|c| c.to_json()).collect()));
        let ech = self.echelon.as_ref().map(|e| {
            let rows: Vec<Value> = e.rows.iter().map(|row| Value::Array(row.iter().map(|p| poly_to_json(p, r)).collect())).collect();
            json!({ "rows": rows, "pivot_columns": e.pivots.iter().map(|p| p.1).collect::<Vec<_>>() })
        });
        o.insert("echelon".into(), ech.unwrap_or(Value::Null));
        v
    }

    /// A short human-readable summary.
    pub fn pretty(&self) -> String {
        let s = &self.system;
        let mut out = format!("λ = {}, ν = {}, mode {}\n", s.lambda, s.nu, s.mode);
        out += &format!("candidates: {}\n", s.tableaux.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", "));
        for g in &s.generators {
            let nonzero: Vec<String> = s
                .block(g)
                .iter()
                .filter(|r| r.iter().any(|c| !c.is_zero()))
                .map(|r| format!("[{}]", r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")))
                .collect();
            if nonzero.is_empty() {
                out += &format!("{g}: 0\n");
            } else {
                out += &format!("{g}: {}\n", nonzero.join(" "));
            }
        }
        if let Some(e) = &self.echelon {
            out += "pivots:\n";
            for p in e.pivot_polys() {
                out += &format!("  {p}\n");
            }
        }
        out += &format!("{} ({}):\n", SCOPE, self.nullspace.len());
        for c in &self.nullspace {
            out += &format!("  {c}\n");
        }
        for n in &s.notes {
            out += &format!("note: {n}\n");
        }
        out
    }
}

fn convert<S: Scalar>(rows: &[Vec<CoeffElem>]) -> Result<Vec<Vec<S>>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|c| S::from_coeff(c).ok_or_else(|| Error::InvalidMode(format!("unexpected {} coefficient", c.mode()))))
                .collect()
        })
        .collect()
}

/// Echelon pivots and nullspace over a field.
fn field_solve<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> (Vec<S>, Vec<Vec<S>>) {
    let mut w = rows.to_vec();
    let piv = bareiss_echelon(&mut w);
    let pivots = piv.iter().map(|&(r, c)| w[r][c].clone()).collect();
    (pivots, nullspace(rows, ncols))
}

fn candidates<S: Scalar>(sys: &ConditionSystem, vecs: Vec<Vec<S>>) -> Vec<HomCandidate> {
    vecs.into_iter()
        .map(|v| HomCandidate {
            lambda: sys.lambda.clone(),
            nu: sys.nu.clone(),
            coeffs: sys.tableaux.iter().cloned().zip(v.iter().map(|c| c.to_coeff())).collect(),
        })
        .collect()
}

/// Solves the conditions. A specialized system gets an exact nullspace; a generic one gets
/// its echelon form with pivot polynomials and the nullspace over `ℚ(q, Q_1..Q_r)`.
pub fn solve(system: ConditionSystem) -> Result<SolutionReport> {
    let ncols = system.ncols();
    let (pivots, nullspace, echelon) = match system.mode {
        Mode::Generic => {
            let rows: Vec<Vec<RatFunc>> = convert(&system.rows)?;
            let report = echelon_report(&rows, ncols);
            let reduced: Vec<Vec<RatFunc>> =
                report.rows.iter().map(|r| r.iter().cloned().map(RatFunc::from).collect()).collect();
            let ns = candidates(&system, nullspace(&reduced, ncols));
            let piv: Vec<CoeffElem> = report.pivot_polys().into_iter().map(|p| CoeffElem::Generic(p.into())).collect();
            (piv, ns, Some(report))
        }
        Mode::Rational => {
            let (p, ns) = field_solve::<Rational>(&convert(&system.rows)?, ncols);
            (p.iter().map(|c| c.to_coeff()).collect(), candidates(&system, ns), None)
        }
        Mode::Cyclotomic(_) => {
            let (p, ns) = field_solve::<Cyclotomic>(&convert(&system.rows)?, ncols);
            (p.iter().map(|c| c.to_coeff()).collect(), candidates(&system, ns), None)
        }
    };
    let rank = pivots.len();
    Ok(SolutionReport { system, nullspace, rank, pivots, echelon })
}

/// Outcome of comparing the ideal generated by `𝐃 ∪ 𝐋` with `M^λ ∩ Ȟ^λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReport {
    pub lambda: Multipartition,
    pub generators: usize,
    pub ideal_dim: usize,
    pub intersection_dim: usize,
    /// Every vector met during the closure lies in `M^λ ∩ Ȟ^λ`.
    pub contained: bool,
    pub equal: bool,
    /// Rounds of multiplication by `T_0..T_{n−1}` until the span stopped growing.
    pub iterations: usize,
}

impl IdealReport {
    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda,
            "generators": self.generators,
            "ideal_dim": self.ideal_dim,
            "intersection_dim": self.intersection_dim,
            "contained": self.contained,
            "equal": self.equal,
            "iterations": self.iterations,
        })
    }
}

/// Closes `𝐃 ∪ 𝐋` under right multiplication by `T_0..T_{n−1}` and compares the result with
/// the span of `{m_{𝚂𝔱} : μ ⊳ λ}`.
pub fn ideal_equal<S: Scalar>(alg: &Algebra<S>, lambda: &Multipartition, max_iter: usize) -> Result<IdealReport> {
    use crate::coeff::linalg::SparseEchelon;
    let fam = generator_families(alg, lambda)?;
    let mut inter: SparseEchelon<Label, S> = SparseEchelon::new(false);
    for (_, x) in intersection_basis(alg, lambda)? {
        inter.insert(element_vector(&x));
    }
    let mut ideal: SparseEchelon<Label, S> = SparseEchelon::new(false);
    let mut contained = true;
    let mut frontier: Vec<Element<S>> = fam.all().map(|g| g.element.clone()).collect();
    let mut iterations = 0;
    while !frontier.is_empty() {
        if iterations == max_iter {
            return Err(Error::NonConvergence(max_iter));
        }
        iterations += 1;
        let mut grown = Vec::new();
        for x in frontier {
            if ideal.insert(element_vector(&x)) {
                contained &= inter.contains(element_vector(&x));
                grown.push(x);
            }
        }
        frontier = grown.iter().flat_map(|x| (0..alg.n()).map(move |g| alg.right_mul_t(x, g))).collect();
        if grown.is_empty() {
            frontier.clear();
        }
    }
    let ideal_dim = ideal.rank();
    let intersection_dim = inter.rank();
    Ok(IdealReport {
        lambda: lambda.clone(),
        generators: fam.len(),
        ideal_dim,
        intersection_dim,
        contained,
        equal: contained && ideal_dim == intersection_dim,
        iterations,
    })
}

/// Every basis label `L^a T_w` of the algebra.
pub fn all_labels(n: usize, r: usize) -> Vec<Label> {
    let perms = Permutation::all(n);
    let mut out = Vec::with_capacity(perms.len() * r.pow(n as u32));
    let mut exps = vec![0u8; n];
    loop {
        for w in &perms {
            out.push(Label::new(&exps, w));
        }
        let mut i = 0;
        while i < n && exps[i] as usize + 1 == r {
            exps[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
        exps[i] += 1;
    }
}

/// Solves `m_λ h = x` for `h` over a field.
pub struct Preimage<'a, S: Scalar> {
    alg: &'a Algebra<S>,
    labels: Vec<Label>,
    echelon: crate::coeff::linalg::SparseEchelon<Label, S>,
}

impl<'a, S: Scalar> Preimage<'a, S> {
    pub fn new(alg: &'a Algebra<S>, lambda: &Multipartition) -> Result<Self> {
        let m = alg.m_of(lambda)?;
        let labels = all_labels(alg.n(), alg.r());
        let mut echelon = crate::coeff::linalg::SparseEchelon::new(true);
        for k in &labels {
            let y = alg.mul(&m, &alg.basis(*k, S::one()))?;
            echelon.insert(element_vector(&y));
        }
        Ok(Preimage { alg, labels, echelon })
    }

    /// `dim M^λ`.
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn solve(&self, x: &Element<S>) -> Result<Element<S>> {
        self.alg.check(x)?;
        let e = self.echelon.express(element_vector(x)).ok_or_else(|| Error::NotInModule("λ".into()))?;
        let inv = e.scale.try_inv().ok_or_else(|| Error::Arithmetic("preimages need a field".into()))?;
        self.alg.from_terms(e.comb.into_iter().map(|(i, c)| (self.labels[i], c * &inv)))
    }
}
