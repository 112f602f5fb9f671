use akspecht::coeff::{parse_poly_list, parse_rational, split_list, MultiPoly, Specialization};
use akspecht::combinatorics::Multicomposition;
use akspecht::error::{Error, Result};
use akspecht::hecke::Algebra;
use akspecht::homsolver::random_rational_spec;
use akspecht::{CyclotomicAlgebra, GenericAlgebra, RationalAlgebra};
use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Generic,
    Rational,
    Cyclotomic,
}

/// Coefficient settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub r: Option<usize>,
    pub n: Option<usize>,
    pub mode: ModeArg,
    pub q: Option<String>,
    pub big_q: Option<String>,
    pub e: Option<u32>,
    pub seed: u64,
}

pub enum AnyAlgebra {
    Generic(GenericAlgebra),
    Rational(RationalAlgebra, Specialization),
    Cyclotomic(CyclotomicAlgebra, Specialization),
}

/// Runs `$body` with `$a` bound to the concrete algebra.
#[macro_export]
macro_rules! with_algebra {
    ($any:expr, $a:ident => $body:expr) => {
        match $any {
            $crate::config::AnyAlgebra::Generic($a) => $body,
            $crate::config::AnyAlgebra::Rational($a, _) => $body,
            $crate::config::AnyAlgebra::Cyclotomic($a, _) => $body,
        }
    };
}

impl AnyAlgebra {
    pub fn spec(&self) -> Option<&Specialization> {
        match self {
            AnyAlgebra::Generic(_) => None,
            AnyAlgebra::Rational(_, s) | AnyAlgebra::Cyclotomic(_, s) => Some(s),
        }
    }

    pub fn describe(&self) -> String {
        match self.spec() {
            None => "generic".into(),
            Some(s) => format!("{} ({s})", s.mode_name()),
        }
    }
}

/// Parses a shape written as nested JSON arrays, e.g. `[[2,2],[2,1]]`.
pub fn parse_shape(s: &str) -> Result<Multicomposition> {
    let v: Vec<Vec<usize>> = serde_json::from_str(s).map_err(|e| Error::Parse { pos: e.column().saturating_sub(1), msg: e.to_string() })?;
    Multicomposition::new(v)
}

fn shift(e: Error, off: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + off, msg },
        other => other,
    }
}

impl RunConfig {
    /// `r` and `n` from the flags, falling back to the given shape.
    pub fn dims(&self, shape: Option<&Multicomposition>) -> Result<(usize, usize)> {
        let r = self.r.or(shape.map(|s| s.r()));
        let n = self.n.or(shape.map(|s| s.size()));
        match (r, n) {
            (Some(r), Some(n)) if r >= 1 && n >= 1 => Ok((r, n)),
            _ => Err(Error::InvalidInput("r and n must be given, either as flags or through a shape".into())),
        }
    }

    pub fn specialization(&self, r: usize, n: usize) -> Result<Option<Specialization>> {
        match self.mode {
            ModeArg::Generic => {
                if self.q.is_some() || self.big_q.is_some() || self.e.is_some() {
                    return Err(Error::InvalidMode("--q, --Q and --e need a specialized mode".into()));
                }
                Ok(None)
            }
            ModeArg::Rational => {
                if self.e.is_some() {
                    return Err(Error::InvalidMode("--e needs --mode cyclotomic".into()));
                }
                match (&self.q, &self.big_q) {
                    (None, None) => {
                        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                        Ok(Some(random_rational_spec(&mut rng, r, n)))
                    }
                    (Some(q), Some(qs)) => {
                        let q = parse_rational(q)?;
                        let vals = split_list(qs)
                            .into_iter()
                            .map(|(off, s)| parse_rational(s).map_err(|e| shift(e, off)))
                            .collect::<Result<Vec<_>>>()?;
                        check_count(vals.len(), r)?;
                        Specialization::rational(q, vals).map(Some)
                    }
                    _ => Err(Error::InvalidInput("give both --q and --Q, or neither to draw them from --seed".into())),
                }
            }
            ModeArg::Cyclotomic => {
                if self.q.is_some() {
                    return Err(Error::InvalidMode("in cyclotomic mode q is the root of unity; use --e".into()));
                }
                let e = self.e.ok_or_else(|| Error::InvalidInput("--mode cyclotomic needs --e".into()))?;
                let vals = match &self.big_q {
                    Some(s) => parse_poly_list(s)?,
                    None => (0..r).map(|i| MultiPoly::q_pow(i as i16)).collect(),
                };
                check_count(vals.len(), r)?;
                Specialization::cyclotomic(e, vals).map(Some)
            }
        }
    }

    pub fn algebra(&self, shape: Option<&Multicomposition>) -> Result<AnyAlgebra> {
        let (r, n) = self.dims(shape)?;
        if let Some(s) = shape {
            if s.r() != r || s.size() != n {
                return Err(Error::InvalidInput(format!("{s} does not match r = {r}, n = {n}")));
            }
        }
        Ok(match self.specialization(r, n)? {
            None => AnyAlgebra::Generic(Algebra::generic(r, n)?),
            Some(spec @ Specialization::Rational { .. }) => AnyAlgebra::Rational(Algebra::rational(n, &spec)?, spec),
            Some(spec) => AnyAlgebra::Cyclotomic(Algebra::cyclotomic(n, &spec)?, spec),
        })
    }
}

fn check_count(got: usize, r: usize) -> Result<()> {
    if got == r {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("expected {r} values for --Q, got {got}")))
    }
}
