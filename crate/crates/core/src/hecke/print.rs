use serde_json::{json, Value};

use super::algebra::{Algebra, Element};
use super::label::Label;
use crate::coeff::{coeff_from_json, Scalar, Specialization};
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

/// Rewrites `Q3` as `Q_3` for the printer.
pub fn subscript_coeff(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 4);
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == 'Q' && chars.peek().is_some_and(|d| d.is_ascii_digit()) {
            out.push('_');
        }
    }
    out
}

/// Whether a printed coefficient is a sum at the top level and needs brackets.
fn is_sum(s: &str) -> bool {
    let mut depth = 0i32;
    let b = s.as_bytes();
    for i in 0..b.len() {
        match b[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > 0 && b[i - 1] == b' ' => return true,
            b'/' if depth == 0 => return true,
            _ => {}
        }
    }
    false
}

/// `T_3`, `T_{11}` or `T_{3,2,1}`.
pub fn t_name(word: &[usize]) -> String {
    match word {
        [] => String::new(),
        [i] if *i < 10 => format!("T_{i}"),
        _ => {
            let parts: Vec<String> = word.iter().map(|i| i.to_string()).collect();
            format!("T_{{{}}}", parts.join(","))
        }
    }
}

fn label_name(k: &Label, n: usize) -> String {
    let mut parts = Vec::new();
    for j in 1..=n {
        match k.exponent(j) {
            0 => {}
            1 => parts.push(format!("L_{j}")),
            e => parts.push(format!("L_{j}^{e}")),
        }
    }
    let t = t_name(&k.perm(n).reduced_word());
    if !t.is_empty() {
        parts.push(t);
    }
    parts.join("*")
}

impl<S: Scalar> Algebra<S> {
    /// Subscripted text such as `1 + T_3 + T_{3,2}` or `L_5 - Q_2`.
    pub fn format(&self, x: &Element<S>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let one = S::one();
        let minus_one = -S::one();
        let mut out = String::new();
        for (i, (k, c)) in x.sorted_terms().into_iter().enumerate() {
            let name = label_name(&k, self.n());
            let term = if name.is_empty() {
                let cs = subscript_coeff(&c.to_string());
                if is_sum(&cs) && x.len() > 1 {
                    format!("({cs})")
                } else {
                    cs
                }
            } else if c == one {
                name
            } else if c == minus_one {
                format!("-{name}")
            } else {
                let cs = subscript_coeff(&c.to_string());
                if is_sum(&cs) {
                    format!("({cs})*{name}")
                } else {
                    format!("{cs}*{name}")
                }
            };
            if i == 0 {
                out.push_str(&term);
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }

    /// JSON term list `[{"L": [...], "w": [...], "c": ...}, ...]` in a fixed order.
    pub fn to_json(&self, x: &Element<S>) -> Value {
        let n = self.n();
        let rows: Vec<Value> = x
            .sorted_terms()
            .into_iter()
            .map(|(k, c)| json!({ "L": k.exponents(n), "w": k.perm(n).one_line(), "c": c.to_coeff().to_json(self.r()) }))
            .collect();
        Value::Array(rows)
    }

    /// Inverse of [`Algebra::to_json`]; `spec` names the specialization of a non-generic
    /// algebra.
    pub fn from_json(&self, v: &Value, spec: Option<&Specialization>) -> Result<Element<S>> {
        let rows = v.as_array().ok_or_else(|| Error::InvalidInput("expected an array of terms".into()))?;
        let mut terms = Vec::with_capacity(rows.len());
        for row in rows {
            let exps: Vec<u8> = serde_json::from_value(row["L"].clone()).map_err(|e| Error::InvalidInput(e.to_string()))?;
            let line: Vec<usize> = serde_json::from_value(row["w"].clone()).map_err(|e| Error::InvalidInput(e.to_string()))?;
            if exps.len() != self.n() {
                return Err(Error::InvalidInput(format!("expected {} exponents", self.n())));
            }
            let w = Permutation::from_one_line(&line)?;
            let c = coeff_from_json(&row["c"], spec)?;
            let c = S::from_coeff(&c).ok_or_else(|| Error::InvalidMode("coefficient does not fit this algebra".into()))?;
            terms.push((Label::new(&exps, &w), c));
        }
        self.from_terms(terms)
    }
}
