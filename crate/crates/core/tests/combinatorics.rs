use std::collections::BTreeSet;

use akspecht::combinatorics::*;
use akspecht::Error;
use proptest::prelude::*;

fn shapes(n: usize, r: usize) -> Vec<Multipartition> {
    Multicomposition::multipartitions(n, r)
}

/// Prefix sum of the definition: all earlier components, then the first `k` rows of
/// component `l`.
fn prefix(m: &Multicomposition, l: usize, k: usize) -> usize {
    let before: usize = (1..l).map(|i| m.comp_size(i)).sum();
    before + (1..=k).map(|j| m.part(l, j)).sum::<usize>()
}

fn oracle_dominated(a: &Multicomposition, b: &Multicomposition) -> bool {
    let n = a.size();
    (1..=a.r()).all(|l| (0..=n).all(|k| prefix(a, l, k) <= prefix(b, l, k)))
}

/// Every bijective filling of the nodes of `shape`, in node order.
fn all_fillings(shape: &Multicomposition) -> Vec<Tableau> {
    let nodes: Vec<Node> = shape.nodes().collect();
    let n = nodes.len();
    Permutation::all(n)
        .into_iter()
        .map(|w| {
            let line = w.one_line();
            let mut rows: Vec<Vec<Vec<usize>>> = shape.components().iter().map(|c| c.iter().map(|_| Vec::new()).collect()).collect();
            for (node, v) in nodes.iter().zip(line) {
                rows[node.comp - 1][node.row - 1].push(v);
            }
            Tableau::new(rows).unwrap()
        })
        .collect()
}

#[test]
fn dominance_matches_the_prefix_sum_definition() {
    for (n, r) in [(3, 1), (4, 2), (5, 2), (4, 3)] {
        let all = shapes(n, r);
        for a in &all {
            for b in &all {
                assert_eq!(a.is_dominated_by(b), oracle_dominated(a, b), "{a} {b}");
                assert_eq!(dominates(a, b).unwrap(), oracle_dominated(a, b));
            }
        }
    }
    assert!(dominates(&mc(&[&[2, 2], &[2, 1]]), &mc(&[&[5], &[2]])).unwrap());
    assert!(dominates(&mc(&[&[1, 1], &[1]]), &mc(&[&[3], &[]])).unwrap());
    assert!(!dominates(&mc(&[&[3], &[]]), &mc(&[&[1, 1], &[1]])).unwrap());
    assert!(matches!(dominates(&mc(&[&[2]]), &mc(&[&[1], &[1]])), Err(Error::InvalidInput(_))));
}

#[test]
fn dominance_is_a_partial_order() {
    for (n, r) in [(5, 2), (3, 3), (4, 3)] {
        let all = shapes(n, r);
        for a in &all {
            assert!(a.is_dominated_by(a));
            for b in &all {
                if a != b && a.is_dominated_by(b) {
                    assert!(!b.is_dominated_by(a), "{a} {b}");
                }
                if !a.is_dominated_by(b) {
                    continue;
                }
                for c in all.iter().filter(|c| b.is_dominated_by(c)) {
                    assert!(a.is_dominated_by(c), "{a} {b} {c}");
                }
            }
        }
    }
}

#[test]
fn standard_tableaux_match_a_brute_force_filter() {
    for (n, r) in [(4, 1), (6, 1), (5, 2), (6, 2), (4, 3)] {
        for shape in shapes(n, r) {
            let brute: BTreeSet<Vec<usize>> = all_fillings(&shape).into_iter().filter(|t| t.is_standard()).map(|t| t.reading_word()).collect();
            let listed = enumerate_standard(&shape);
            let words: Vec<Vec<usize>> = listed.iter().map(|t| t.reading_word()).collect();
            assert!(words.windows(2).all(|w| w[0] < w[1]), "{shape}: order");
            assert_eq!(words.into_iter().collect::<BTreeSet<_>>(), brute, "{shape}");
        }
    }
    assert_eq!(enumerate_standard(&mc(&[&[1], &[1]])).len(), 2);
    assert_eq!(enumerate_standard(&mc(&[&[5], &[2]])).len(), 21);
}

#[test]
fn semistandard_tableaux_match_images_of_row_standard_ones() {
    for (n, r) in [(4, 2), (5, 2), (3, 3)] {
        let all = shapes(n, r);
        for mu in &all {
            let fills = all_fillings(mu);
            for lam in &all {
                let brute: BTreeSet<String> = fills
                    .iter()
                    .filter(|t| t.is_row_standard())
                    .map(|t| t.lambda_of(lam).unwrap())
                    .filter(|s| s.is_semistandard())
                    .map(|s| s.to_string())
                    .collect();
                let listed = enumerate_semistandard(mu, lam);
                assert_eq!(listed.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>(), brute, "μ={mu} λ={lam}");
                if !listed.is_empty() {
                    assert!(lam.is_dominated_by(mu), "μ={mu} λ={lam}");
                }
            }
            assert_eq!(enumerate_semistandard(mu, mu), vec![TypedTableau::initial(mu)]);
        }
    }
    assert_eq!(enumerate_semistandard(&mc(&[&[5], &[2]]), &mc(&[&[2, 2], &[2, 1]])).len(), 2);
}

#[test]
fn d_of_round_trips_and_types_are_row_semistandard() {
    for (n, r) in [(5, 1), (5, 2), (4, 3)] {
        let all = shapes(n, r);
        for nu in &all {
            let init = Tableau::initial(nu);
            for t in enumerate_standard(nu) {
                assert_eq!(init.act(&t.d_of()), t);
                assert!(t.stack().is_row_standard());
                for lam in all.iter().filter(|l| l.is_dominated_by(nu)) {
                    let s = t.lambda_of(lam).unwrap();
                    assert!(s.is_row_semistandard(), "{t} {lam}");
                }
            }
            assert!(init.d_of().is_identity());
            assert_eq!(init.lambda_of(nu).unwrap(), TypedTableau::initial(nu));
        }
    }
}

#[test]
fn shape_moves_raise_dominance_and_keep_size() {
    for (n, r) in [(5, 2), (6, 2), (4, 3)] {
        for lam in shapes(n, r) {
            let (ds, ls) = lam.def_sets();
            for (s, d, t) in ds {
                let moved = lam.shape_after_d(s, d, t).unwrap();
                assert_eq!(moved.size(), n);
                assert!(lam.is_strictly_dominated_by(&moved), "{lam} d({s},{d},{t}) -> {moved}");
            }
            for s in ls {
                let moved = lam.shape_after_l(s).unwrap();
                assert_eq!(moved.size(), n);
                assert!(lam.is_strictly_dominated_by(&moved), "{lam} l({s}) -> {moved}");
            }
        }
    }
    let lam = mc(&[&[3, 1], &[2, 2], &[2, 1, 1]]);
    assert_eq!(lam.def_sets().0.len(), 5);
    assert!(matches!(lam.shape_after_d(1, 1, 2), Err(Error::InvalidIndex(_))));
    assert!(matches!(mc(&[&[4]]).shape_after_l(1), Err(Error::InvalidIndex(_))));
    assert_eq!(mc(&[&[1, 1]]).shape_after_d(1, 1, 1).unwrap(), mc(&[&[2]]));
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_one_line(&v).unwrap())
}

proptest! {
    #[test]
    fn length_is_the_inversion_count(w in (1usize..=7).prop_flat_map(perm)) {
        let line = w.one_line();
        let inv = (0..line.len()).flat_map(|i| (i + 1..line.len()).map(move |j| (i, j))).filter(|&(i, j)| line[i] > line[j]).count();
        prop_assert_eq!(w.length(), inv);
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), inv);
        prop_assert_eq!(Permutation::from_word(w.n(), &word).unwrap(), w);
    }

    #[test]
    fn composition_acts_on_the_right((a, b) in (1usize..=6).prop_flat_map(|n| (perm(n), perm(n)))) {
        let ab = a.compose(&b);
        for j in 1..=a.n() {
            prop_assert_eq!(ab.apply(j), b.apply(a.apply(j)));
        }
        prop_assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn multipartition_json_round_trips(comps in prop::collection::vec(prop::collection::vec(0usize..4, 0..4), 1..4)) {
        let m = Multicomposition::new(comps).unwrap();
        let text = serde_json::to_string(&m).unwrap();
        let back: Multicomposition = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, m);
    }
}
