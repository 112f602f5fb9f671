use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::composition::Multicomposition;
use super::perm::Permutation;
use super::tableau::Tableau;
use crate::error::{invalid, Result};

/// An entry `(i, k)` of a tableau of type `λ`: row `i` of component `k`.
pub type Entry = (usize, usize);

/// The total order `⪯` on entries: component first, then row.
pub fn entry_cmp(a: Entry, b: Entry) -> Ordering {
    (a.1, a.0).cmp(&(b.1, b.0))
}

/// A `μ`-tableau of type `λ`, stored as component → rows → entries. Serialized as its
/// filling; the type is recovered from the content.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Vec<Entry>>>", into = "Vec<Vec<Vec<Entry>>>")]
pub struct TypedTableau {
    shape: Multicomposition,
    ty: Multicomposition,
    filling: Vec<Vec<Vec<Entry>>>,
}

impl TryFrom<Vec<Vec<Vec<Entry>>>> for TypedTableau {
    type Error = crate::error::Error;

    fn try_from(filling: Vec<Vec<Vec<Entry>>>) -> Result<Self> {
        TypedTableau::from_filling(filling)
    }
}

impl From<TypedTableau> for Vec<Vec<Vec<Entry>>> {
    fn from(t: TypedTableau) -> Self {
        t.filling
    }
}

impl TypedTableau {
    /// Validates the shape and the content condition.
    pub fn new(shape: Multicomposition, ty: Multicomposition, filling: Vec<Vec<Vec<Entry>>>) -> Result<Self> {
        if filling.len() != shape.r() {
            return invalid("filling has the wrong number of components");
        }
        for (k, c) in filling.iter().enumerate() {
            let lens: Vec<usize> = c.iter().map(Vec::len).collect();
            if &lens[..] != shape.component(k + 1) {
                return invalid(format!("filling does not have shape {shape}"));
            }
        }
        let mut counts = content_counts(&ty);
        for &(i, k) in filling.iter().flatten().flatten() {
            if k == 0 || k > ty.r() || i == 0 || i > counts[k - 1].len() || counts[k - 1][i - 1] == 0 {
                return invalid(format!("entry ({i},{k}) violates the content of {ty}"));
            }
            counts[k - 1][i - 1] -= 1;
        }
        if counts.iter().flatten().any(|&c| c != 0) {
            return invalid(format!("filling does not have content {ty}"));
        }
        Ok(TypedTableau { shape, ty, filling })
    }

    /// Infers the type from the content; `r` is taken from the shape.
    pub fn from_filling(filling: Vec<Vec<Vec<Entry>>>) -> Result<Self> {
        let shape = Multicomposition::new(filling.iter().map(|c| c.iter().map(Vec::len).collect()).collect())?;
        let mut comps = vec![Vec::new(); shape.r()];
        for &(i, k) in filling.iter().flatten().flatten() {
            if k == 0 || k > shape.r() || i == 0 {
                return invalid(format!("entry ({i},{k}) is out of range"));
            }
            let c: &mut Vec<usize> = &mut comps[k - 1];
            if c.len() < i {
                c.resize(i, 0);
            }
            c[i - 1] += 1;
        }
        TypedTableau::new(shape, Multicomposition::new(comps)?, filling)
    }

    /// `𝚃^λ`: row `i` of component `k` filled with `(i,k)`.
    pub fn initial(lambda: &Multicomposition) -> Self {
        let filling = lambda
            .components()
            .iter()
            .enumerate()
            .map(|(k, c)| c.iter().enumerate().map(|(i, &len)| vec![(i + 1, k + 1); len]).collect())
            .collect();
        TypedTableau { shape: lambda.clone(), ty: lambda.clone(), filling }
    }

    pub fn shape(&self) -> &Multicomposition {
        &self.shape
    }

    pub fn ty(&self) -> &Multicomposition {
        &self.ty
    }

    pub fn filling(&self) -> &[Vec<Vec<Entry>>] {
        &self.filling
    }

    pub fn reading_word(&self) -> Vec<Entry> {
        self.filling.iter().flatten().flatten().copied().collect()
    }

    pub fn is_row_semistandard(&self) -> bool {
        self.filling
            .iter()
            .flatten()
            .all(|r| r.windows(2).all(|w| entry_cmp(w[0], w[1]) != Ordering::Greater))
    }

    pub fn is_semistandard(&self) -> bool {
        if !self.is_row_semistandard() {
            return false;
        }
        for (c, comp) in self.filling.iter().enumerate() {
            if comp.iter().flatten().any(|&(_, k)| c + 1 > k) {
                return false;
            }
            for pair in comp.windows(2) {
                if pair[1].iter().zip(&pair[0]).any(|(lo, hi)| entry_cmp(*hi, *lo) != Ordering::Less) {
                    return false;
                }
            }
        }
        true
    }

    /// `𝚂^{(i,j)}_{(k,l)}`: how many entries of row `k` in component `l` equal `(i,j)`.
    pub fn count(&self, entry: Entry, row: usize, comp: usize) -> usize {
        self.filling
            .get(comp - 1)
            .and_then(|c| c.get(row - 1))
            .map_or(0, |r| r.iter().filter(|&&e| e == entry).count())
    }

    /// `Γ_{(x,y)}`: counts in row `x` of component `y` of the entries from `(x,y)` onwards
    /// in `⪯` order.
    pub fn gamma(&self, x: usize, y: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for j in y..=self.ty.r() {
            let first = if j == y { x } else { 1 };
            for i in first..=self.ty.rows(j) {
                out.push(self.count((i, j), x, y));
            }
        }
        out
    }

    /// `𝔱_𝚂`: the row-standard `λ`-tableau holding `i` in row `u` of component `v`
    /// whenever `i`'s node in `𝔱^μ` carries `(u,v)`.
    pub fn t_s(&self) -> Tableau {
        let mut rows: Vec<Vec<Vec<usize>>> =
            self.ty.components().iter().map(|c| c.iter().map(|_| Vec::new()).collect()).collect();
        for (pos, (i, k)) in self.reading_word().into_iter().enumerate() {
            rows[k - 1][i - 1].push(pos + 1);
        }
        for r in rows.iter_mut().flatten() {
            r.sort_unstable();
        }
        Tableau::new(rows).expect("content condition gives a bijective filling")
    }

    /// The permutation `w` with `𝔱_𝚂 = 𝔱^λ·w`, so that `T_𝚂 = T_w`.
    pub fn t_s_perm(&self) -> Permutation {
        self.t_s().d_of()
    }

    /// All `μ`-tableaux `𝔱` with `λ(𝔱) = self` that are row standard, sorted by reading word.
    ///
    /// Each block of `𝔱^λ` is dealt out to the nodes carrying its label; within a row the
    /// entries increase. For semistandard `self` every result is standard.
    pub fn row_standard_preimages(&self) -> Vec<Tableau> {
        let init = Tableau::initial(&self.ty);
        // nodes carrying each label, as (component, row, column) in reading order
        let mut groups: Vec<(Entry, Vec<(usize, usize, usize)>)> = Vec::new();
        for (k, c) in self.filling.iter().enumerate() {
            for (i, r) in c.iter().enumerate() {
                for (j, &e) in r.iter().enumerate() {
                    match groups.iter_mut().find(|(lab, _)| *lab == e) {
                        Some((_, nodes)) => nodes.push((k, i, j)),
                        None => groups.push((e, vec![(k, i, j)])),
                    }
                }
            }
        }
        let mut rows: Vec<Vec<Vec<usize>>> =
            self.filling.iter().map(|c| c.iter().map(|r| vec![0; r.len()]).collect()).collect();
        let mut out = Vec::new();
        deal_groups(&groups, 0, &init, &mut rows, &mut out);
        out.sort_by_key(|t| t.reading_word());
        out
    }

    /// `α(𝚂)`: components stacked, entries relabelled `(u,v) ↦ u + ρ_1(λ) + ... + ρ_{v-1}(λ)`.
    pub fn stack(&self) -> TypedTableau {
        let rows: Vec<Vec<Entry>> = self
            .filling
            .iter()
            .enumerate()
            .flat_map(|(k, c)| c[..self.shape.rows(k + 1)].iter().cloned())
            .map(|r| r.into_iter().map(|(u, v)| (u + self.ty.stacked_offset(v), 1)).collect())
            .collect();
        let shape = Multicomposition::from_composition(self.shape.stack());
        let ty = Multicomposition::from_composition(
            (1..=self.ty.r()).flat_map(|k| self.ty.component(k)[..self.ty.rows(k)].to_vec()).collect(),
        );
        TypedTableau { shape, ty, filling: vec![rows] }
    }

    /// All of `𝒯₀(μ, λ)`, sorted by reading word in `⪯` order.
    pub fn enumerate_semistandard(mu: &Multicomposition, lambda: &Multicomposition) -> Vec<TypedTableau> {
        if mu.size() != lambda.size() || mu.r() != lambda.r() || !mu.is_multipartition() {
            return Vec::new();
        }
        let mu = mu.normalized();
        // available labels in ⪯ order with multiplicities
        let mut labels: Vec<(Entry, usize)> = Vec::new();
        for k in 1..=lambda.r() {
            for i in 1..=lambda.component(k).len() {
                let c = lambda.part(k, i);
                if c > 0 {
                    labels.push(((i, k), c));
                }
            }
        }
        let mut filling: Vec<Vec<Vec<Entry>>> =
            mu.components().iter().map(|c| c.iter().map(|_| Vec::new()).collect()).collect();
        let nodes: Vec<_> = mu.nodes().collect();
        let mut out = Vec::new();
        fill_semistandard(&nodes, 0, &mut labels, &mut filling, &mut |f| {
            out.push(TypedTableau { shape: mu.clone(), ty: lambda.clone(), filling: f.clone() });
        });
        out
    }
}

fn content_counts(ty: &Multicomposition) -> Vec<Vec<usize>> {
    ty.components().to_vec()
}

fn fill_semistandard(
    nodes: &[super::composition::Node],
    idx: usize,
    labels: &mut Vec<(Entry, usize)>,
    filling: &mut Vec<Vec<Vec<Entry>>>,
    emit: &mut dyn FnMut(&Vec<Vec<Vec<Entry>>>),
) {
    let Some(node) = nodes.get(idx) else {
        emit(filling);
        return;
    };
    let (k, i, j) = (node.comp - 1, node.row - 1, node.col - 1);
    let left = if j > 0 { Some(filling[k][i][j - 1]) } else { None };
    let above = if i > 0 { Some(filling[k][i - 1][j]) } else { None };
    for li in 0..labels.len() {
        let (e, c) = labels[li];
        if c == 0 || e.1 < node.comp {
            continue;
        }
        if left.is_some_and(|l| entry_cmp(l, e) == Ordering::Greater) {
            continue;
        }
        if above.is_some_and(|a| entry_cmp(a, e) != Ordering::Less) {
            continue;
        }
        labels[li].1 -= 1;
        filling[k][i].push(e);
        fill_semistandard(nodes, idx + 1, labels, filling, emit);
        filling[k][i].pop();
        labels[li].1 += 1;
    }
}

fn deal_groups(
    groups: &[(Entry, Vec<(usize, usize, usize)>)],
    g: usize,
    init: &Tableau,
    rows: &mut Vec<Vec<Vec<usize>>>,
    out: &mut Vec<Tableau>,
) {
    let Some(((i, k), nodes)) = groups.get(g) else {
        out.push(Tableau::new(rows.clone()).expect("dealt entries form a bijection"));
        return;
    };
    let block = &init.rows()[k - 1][i - 1];
    // split nodes into maximal runs sharing a row
    let mut runs: Vec<&[(usize, usize, usize)]> = Vec::new();
    let mut start = 0;
    for idx in 1..=nodes.len() {
        if idx == nodes.len() || (nodes[idx].0, nodes[idx].1) != (nodes[start].0, nodes[start].1) {
            runs.push(&nodes[start..idx]);
            start = idx;
        }
    }
    let mut used = vec![false; block.len()];
    deal_runs(&runs, 0, block, &mut used, rows, &mut |rows| deal_groups(groups, g + 1, init, rows, out));
}

fn deal_runs(
    runs: &[&[(usize, usize, usize)]],
    r: usize,
    block: &[usize],
    used: &mut Vec<bool>,
    rows: &mut Vec<Vec<Vec<usize>>>,
    next: &mut dyn FnMut(&mut Vec<Vec<Vec<usize>>>),
) {
    let Some(run) = runs.get(r) else {
        next(rows);
        return;
    };
    let free: Vec<usize> = (0..block.len()).filter(|&b| !used[b]).collect();
    for choice in combinations(free.len(), run.len()) {
        for (slot, &c) in run.iter().zip(&choice) {
            used[free[c]] = true;
            rows[slot.0][slot.1][slot.2] = block[free[c]];
        }
        deal_runs(runs, r + 1, block, used, rows, next);
        for &c in &choice {
            used[free[c]] = false;
        }
    }
}

/// All increasing `k`-subsets of `0..n`.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

impl fmt::Display for TypedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .filling
            .iter()
            .map(|c| {
                let rows: Vec<String> = c
                    .iter()
                    .map(|r| r.iter().map(|(i, k)| format!("{i}_{k}")).collect::<Vec<_>>().join(" "))
                    .collect();
                format!("[{}]", rows.join(" / "))
            })
            .collect();
        write!(f, "({})", comps.join(", "))
    }
}

impl fmt::Debug for TypedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::composition::mc;

    fn typed(rows: &[&[&[(usize, usize)]]]) -> TypedTableau {
        TypedTableau::from_filling(rows.iter().map(|c| c.iter().map(|r| r.to_vec()).collect()).collect()).unwrap()
    }

    #[test]
    fn example_pair_of_semistandard_tableaux() {
        let all = TypedTableau::enumerate_semistandard(&mc(&[&[5], &[2]]), &mc(&[&[2, 2], &[2, 1]]));
        let s1 = typed(&[&[&[(1, 1), (1, 1), (2, 1), (2, 1), (1, 2)]], &[&[(1, 2), (2, 2)]]]);
        let s2 = typed(&[&[&[(1, 1), (1, 1), (2, 1), (2, 1), (2, 2)]], &[&[(1, 2), (1, 2)]]]);
        assert_eq!(all, vec![s1, s2]);
    }

    #[test]
    fn displayed_tableau_is_semistandard() {
        let t = typed(&[
            &[&[(1, 1), (1, 1), (1, 1), (2, 1)], &[(2, 1), (3, 1)], &[(1, 2)]],
            &[&[(1, 2), (2, 2)], &[(2, 2)]],
        ]);
        assert_eq!(t.ty(), &mc(&[&[3, 2, 1], &[2, 2]]));
        assert!(t.is_semistandard());
        let all = TypedTableau::enumerate_semistandard(&mc(&[&[4, 2, 1], &[2, 1]]), &mc(&[&[3, 2, 1], &[2, 2]]));
        assert!(all.contains(&t));
    }

    #[test]
    fn initial_is_unique_for_equal_shapes() {
        let lambda = mc(&[&[2, 1], &[2]]);
        let all = TypedTableau::enumerate_semistandard(&lambda, &lambda);
        assert_eq!(all, vec![TypedTableau::initial(&lambda)]);
    }

    #[test]
    fn stacked_example() {
        let s = typed(&[
            &[&[(1, 1), (1, 1), (2, 2)], &[(2, 1), (1, 2)]],
            &[&[(1, 2), (1, 2)], &[(2, 2)], &[(3, 2)]],
        ]);
        assert_eq!(s.ty(), &mc(&[&[2, 1], &[3, 2, 1]]));
        let a = s.stack();
        let rows: Vec<Vec<usize>> = a.filling()[0].iter().map(|r| r.iter().map(|e| e.0).collect()).collect();
        assert_eq!(rows, vec![vec![1, 1, 4], vec![2, 3], vec![3, 3], vec![4], vec![5]]);
        assert!(a.is_row_semistandard());
    }

    #[test]
    fn t_s_and_gamma_of_worked_example() {
        let s = typed(&[
            &[&[(1, 1), (1, 1), (1, 1), (1, 2)], &[(2, 1), (2, 1), (3, 1)], &[(3, 1), (3, 2)], &[(2, 2)]],
            &[&[(1, 2), (1, 2)]],
        ]);
        assert_eq!(s.ty(), &mc(&[&[3, 2, 2], &[3, 1, 1]]));
        assert!(s.is_semistandard());
        let want = Permutation::from_word(12, &[7, 6, 5, 4, 11, 10, 9, 11, 10]).unwrap();
        assert_eq!(s.t_s_perm(), want);
        assert_eq!(want.length(), 9);
        assert_eq!(s.gamma(1, 1), vec![3, 0, 0, 1, 0, 0]);
        assert_eq!(s.gamma(2, 1), vec![2, 1, 0, 0, 0]);
        assert_eq!(s.gamma(3, 1), vec![1, 0, 0, 1]);
        assert_eq!(s.gamma(1, 2), vec![2, 0, 0]);
    }

    #[test]
    fn preimages_of_example_tableaux() {
        let s1 = typed(&[&[&[(1, 1), (1, 1), (2, 1), (2, 1), (1, 2)]], &[&[(1, 2), (2, 2)]]]);
        let pre = s1.row_standard_preimages();
        let words: Vec<Vec<usize>> = pre.iter().map(|t| t.d_of().reduced_word()).collect();
        assert_eq!(words, vec![vec![], vec![5]]);
        let s2 = typed(&[&[&[(1, 1), (1, 1), (2, 1), (2, 1), (2, 2)]], &[&[(1, 2), (1, 2)]]]);
        let words: Vec<Vec<usize>> = s2.row_standard_preimages().iter().map(|t| t.d_of().reduced_word()).collect();
        assert_eq!(words, vec![vec![5, 6]]);
    }
}
