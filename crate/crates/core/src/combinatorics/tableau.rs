use std::fmt;

use serde::{Deserialize, Serialize};

use super::composition::{Multicomposition, Node};
use super::perm::Permutation;
use super::typed::TypedTableau;
use crate::error::{invalid, Error, Result};

/// A bijective filling of `[λ]` by `1..n`, stored as component → rows → entries.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Vec<usize>>>", into = "Vec<Vec<Vec<usize>>>")]
pub struct Tableau {
    shape: Multicomposition,
    rows: Vec<Vec<Vec<usize>>>,
}

impl TryFrom<Vec<Vec<Vec<usize>>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<Vec<usize>>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl Tableau {
    /// Builds a tableau from its filling; the shape is read off the row lengths.
    pub fn new(rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let shape = Multicomposition::new(
            rows.iter().map(|c| c.iter().map(Vec::len).collect()).collect(),
        )?;
        let n = shape.size();
        let mut seen = vec![false; n];
        for &e in rows.iter().flatten().flatten() {
            if e == 0 || e > n || seen[e - 1] {
                return invalid(format!("filling is not a bijection onto 1..{n}"));
            }
            seen[e - 1] = true;
        }
        Ok(Tableau { shape, rows })
    }

    /// `𝔱^λ`: entries `1..n` in order along the rows.
    pub fn initial(shape: &Multicomposition) -> Self {
        let mut next = 1;
        let rows = shape
            .components()
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&len| {
                        let row: Vec<usize> = (next..next + len).collect();
                        next += len;
                        row
                    })
                    .collect()
            })
            .collect();
        Tableau { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &Multicomposition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<Vec<usize>>] {
        &self.rows
    }

    pub fn entry(&self, node: Node) -> usize {
        self.rows[node.comp - 1][node.row - 1][node.col - 1]
    }

    /// Node occupied by each entry, indexed by `entry - 1`.
    pub fn positions(&self) -> Vec<Node> {
        let mut pos = vec![Node::new(0, 0, 0); self.n()];
        for (k, c) in self.rows.iter().enumerate() {
            for (i, row) in c.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    pos[e - 1] = Node::new(i + 1, j + 1, k + 1);
                }
            }
        }
        pos
    }

    /// `𝔱·w`: every entry `j` replaced by `j·w`.
    pub fn act(&self, w: &Permutation) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|c| c.iter().map(|r| r.iter().map(|&e| w.apply(e)).collect()).collect())
            .collect();
        Tableau { shape: self.shape.clone(), rows }
    }

    /// `d(𝔱)`, the permutation with `𝔱 = 𝔱^λ · d(𝔱)`.
    pub fn d_of(&self) -> Permutation {
        let init = Tableau::initial(&self.shape);
        let mut line = vec![0usize; self.n()];
        for (a, b) in init.reading_word().into_iter().zip(self.reading_word()) {
            line[a - 1] = b;
        }
        Permutation::from_one_line(&line).expect("tableau filling is a bijection")
    }

    /// Entries in component, row, column order.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().flatten().copied().collect()
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows.iter().flatten().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        if !self.shape.is_multipartition() || !self.is_row_standard() {
            return false;
        }
        self.rows.iter().all(|c| {
            c.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(lo, hi)| hi < lo))
        })
    }

    /// The stacked single-component tableau of shape `α(λ)`.
    pub fn stack(&self) -> Tableau {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(k, c)| c[..self.shape.rows(k + 1)].iter().cloned())
            .collect();
        Tableau::new(vec![rows]).expect("stacking preserves bijectivity")
    }

    /// `λ(𝔱)`: each entry replaced by `(i,k)` where it sits in row `i` of component `k`
    /// of `𝔱^λ`.
    pub fn lambda_of(&self, lambda: &Multicomposition) -> Result<TypedTableau> {
        if lambda.size() != self.n() {
            return invalid(format!("type {lambda} has size {} but the tableau has {}", lambda.size(), self.n()));
        }
        let pos = Tableau::initial(lambda).positions();
        let filling = self
            .rows
            .iter()
            .map(|c| {
                c.iter()
                    .map(|r| r.iter().map(|&e| (pos[e - 1].row, pos[e - 1].comp)).collect())
                    .collect()
            })
            .collect();
        TypedTableau::new(self.shape.clone(), lambda.clone(), filling)
    }

    /// All standard `λ`-tableaux, sorted lexicographically by stacked reading word.
    pub fn enumerate_standard(lambda: &Multicomposition) -> Vec<Tableau> {
        if !lambda.is_multipartition() {
            return Vec::new();
        }
        let lambda = lambda.normalized();
        let n = lambda.size();
        let mut rows: Vec<Vec<Vec<usize>>> =
            lambda.components().iter().map(|c| c.iter().map(|_| Vec::new()).collect()).collect();
        let mut out = Vec::new();
        place_standard(&lambda, 1, n, &mut rows, &mut out);
        out.sort_by_key(|t| t.reading_word());
        out
    }
}

fn place_standard(
    shape: &Multicomposition,
    next: usize,
    n: usize,
    rows: &mut Vec<Vec<Vec<usize>>>,
    out: &mut Vec<Tableau>,
) {
    if next > n {
        out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
        return;
    }
    for k in 0..rows.len() {
        for i in 0..rows[k].len() {
            let len = rows[k][i].len();
            let addable = len < shape.part(k + 1, i + 1) && (i == 0 || rows[k][i - 1].len() > len);
            if addable {
                rows[k][i].push(next);
                place_standard(shape, next + 1, n, rows, out);
                rows[k][i].pop();
            }
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .rows
            .iter()
            .map(|c| {
                let rows: Vec<String> = c
                    .iter()
                    .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
                    .collect();
                format!("[{}]", rows.join(" / "))
            })
            .collect();
        write!(f, "({})", comps.join(", "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
