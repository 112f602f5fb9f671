use std::fmt;

use serde_json::{json, Value};

use crate::coeff::{coeff_from_json, CoeffElem, Specialization};
use crate::combinatorics::{Multipartition, Tableau};
use crate::error::{invalid, Error, Result};

/// An element of `S^ν` in the standard basis, stored sparsely.
#[derive(Clone, Debug)]
pub struct SpechtVector {
    shape: Multipartition,
    coords: Vec<(Tableau, CoeffElem)>,
    zero: CoeffElem,
}

impl SpechtVector {
    /// From coordinates aligned with `std`; zero entries are dropped.
    pub fn from_dense(shape: &Multipartition, std: &[Tableau], coords: Vec<CoeffElem>, zero: CoeffElem) -> Result<Self> {
        if std.len() != coords.len() {
            return invalid(format!("expected {} coordinates, got {}", std.len(), coords.len()));
        }
        if let Some(t) = std.iter().find(|t| t.shape() != shape) {
            return invalid(format!("tableau {t} does not have shape {shape}"));
        }
        let coords = std.iter().cloned().zip(coords).filter(|(_, c)| !c.is_zero()).collect();
        Ok(SpechtVector { shape: shape.clone(), coords, zero })
    }

    pub fn zero(shape: &Multipartition, zero: CoeffElem) -> Self {
        SpechtVector { shape: shape.clone(), coords: Vec::new(), zero }
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Nonzero coordinates in basis order.
    pub fn coords(&self) -> &[(Tableau, CoeffElem)] {
        &self.coords
    }

    pub fn coord(&self, t: &Tableau) -> CoeffElem {
        self.coords.iter().find(|(s, _)| s == t).map_or_else(|| self.zero.clone(), |(_, c)| c.clone())
    }

    /// All coordinates aligned with `std`.
    pub fn dense(&self, std: &[Tableau]) -> Vec<CoeffElem> {
        std.iter().map(|t| self.coord(t)).collect()
    }

    /// Same shape and equal coordinates.
    pub fn try_eq(&self, o: &SpechtVector) -> Result<bool> {
        if self.shape != o.shape || self.coords.len() != o.coords.len() {
            return Ok(false);
        }
        for (t, a) in &self.coords {
            if !a.try_eq(&o.coord(t))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn try_add(&self, o: &SpechtVector) -> Result<SpechtVector> {
        self.combine(o, |a, b| a.try_add(b))
    }

    pub fn try_sub(&self, o: &SpechtVector) -> Result<SpechtVector> {
        self.combine(o, |a, b| a.try_sub(b))
    }

    fn combine(&self, o: &SpechtVector, f: impl Fn(&CoeffElem, &CoeffElem) -> Result<CoeffElem>) -> Result<SpechtVector> {
        if self.shape != o.shape {
            return invalid("vectors live in different Specht modules");
        }
        let mut keys: Vec<&Tableau> = self.coords.iter().map(|x| &x.0).collect();
        for (t, _) in &o.coords {
            if !keys.contains(&t) {
                keys.push(t);
            }
        }
        let mut coords = Vec::new();
        for t in keys {
            let c = f(&self.coord(t), &o.coord(t))?;
            if !c.is_zero() {
                coords.push((t.clone(), c));
            }
        }
        Ok(SpechtVector { shape: self.shape.clone(), coords, zero: self.zero.clone() })
    }

    pub fn try_scale(&self, c: &CoeffElem) -> Result<SpechtVector> {
        let mut coords = Vec::with_capacity(self.coords.len());
        for (t, x) in &self.coords {
            let y = x.try_mul(c)?;
            if !y.is_zero() {
                coords.push((t.clone(), y));
            }
        }
        Ok(SpechtVector { shape: self.shape.clone(), coords, zero: self.zero.clone() })
    }

    /// `{"shape": [[...], ...], "coords": [[tableau, coeff], ...]}`.
    pub fn to_json(&self) -> Value {
        let r = self.shape.r();
        let coords: Vec<Value> = self.coords.iter().map(|(t, c)| json!([t, c.to_json(r)])).collect();
        json!({ "shape": self.shape, "coords": coords })
    }

    pub fn from_json(v: &Value, spec: Option<&Specialization>, zero: CoeffElem) -> Result<SpechtVector> {
        let parse = |e: serde_json::Error| Error::InvalidInput(e.to_string());
        let shape: Multipartition = serde_json::from_value(v["shape"].clone()).map_err(parse)?;
        let rows = v["coords"].as_array().ok_or_else(|| Error::InvalidInput("coords must be an array".into()))?;
        let mut coords = Vec::with_capacity(rows.len());
        for row in rows {
            let t: Tableau = serde_json::from_value(row[0].clone()).map_err(parse)?;
            if t.shape() != &shape {
                return invalid(format!("tableau {t} does not have shape {shape}"));
            }
            coords.push((t, coeff_from_json(&row[1], spec)?));
        }
        Ok(SpechtVector { shape, coords, zero })
    }
}

impl fmt::Display for SpechtVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*m[{t}]")?;
        }
        Ok(())
    }
}
