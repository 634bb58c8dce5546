//! Brute-force oracles on an independent representation.
//!
//! Trees are handled as parent arrays (`parent[k - 1]` is the parent label of
//! node `k`, 0 for the root) and permutations in one-line form. None of the
//! code below goes through the library's tree grafting or cycle splicing.

use std::collections::HashMap;

use heap_hopf::{
    enumerate_perms, enumerate_trees, heap_product, perm_coproduct, tree_coproduct, tree_product,
    CyclePerm, LabeledTree, StandardTree,
};

type Parents = Vec<usize>;

fn parents_of(t: &StandardTree) -> Parents {
    fn walk(node: &LabeledTree, parent: usize, out: &mut Parents) {
        for child in node.children() {
            let label = child.label().unwrap() as usize;
            out[label - 1] = parent;
            walk(child, label, out);
        }
    }
    let mut out = vec![0; t.degree()];
    walk(t.as_tree(), 0, &mut out);
    out
}

fn all_parent_arrays(n: usize) -> Vec<Parents> {
    // every map {1..n} -> {0..n}, keeping those where parent < child
    let mut out = Vec::new();
    let total = (n + 1).pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let mut par = Vec::with_capacity(n);
        for _ in 0..n {
            par.push(c % (n + 1));
            c /= n + 1;
        }
        if par.iter().enumerate().all(|(i, &p)| p < i + 1) {
            out.push(par);
        }
    }
    out
}

fn oracle_tree_product(a: &Parents, b: &Parents) -> HashMap<Parents, i64> {
    let (m, n) = (a.len(), b.len());
    let roots: Vec<usize> = (1..=m).filter(|&k| a[k - 1] == 0).collect();
    let mut out = HashMap::new();
    for code in 0..(n + 1).pow(roots.len() as u32) {
        let mut c = code;
        let mut target = HashMap::new();
        for &k in &roots {
            target.insert(k, c % (n + 1));
            c /= n + 1;
        }
        let mut par = b.clone();
        for k in 1..=m {
            par.push(if a[k - 1] == 0 {
                target[&k]
            } else {
                a[k - 1] + n
            });
        }
        *out.entry(par).or_insert(0) += 1;
    }
    out
}

fn top_ancestor(par: &Parents, mut k: usize) -> usize {
    while par[k - 1] != 0 {
        k = par[k - 1];
    }
    k
}

fn restrict(par: &Parents, keep: &[usize]) -> Parents {
    // keep is sorted; relabel order-preservingly
    let rank = |l: usize| {
        if l == 0 {
            0
        } else {
            keep.binary_search(&l).unwrap() + 1
        }
    };
    keep.iter().map(|&k| rank(par[k - 1])).collect()
}

fn oracle_tree_coproduct(par: &Parents) -> HashMap<(Parents, Parents), i64> {
    let n = par.len();
    let roots: Vec<usize> = (1..=n).filter(|&k| par[k - 1] == 0).collect();
    let mut out = HashMap::new();
    for mask in 0..(1u32 << roots.len()) {
        let chosen: Vec<usize> = (0..roots.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| roots[i])
            .collect();
        let (left, right): (Vec<usize>, Vec<usize>) =
            (1..=n).partition(|&k| chosen.contains(&top_ancestor(par, k)));
        *out.entry((restrict(par, &left), restrict(par, &right)))
            .or_insert(0) += 1;
    }
    out
}

fn one_line_cycles(images: &[u32]) -> Vec<Vec<u32>> {
    let n = images.len();
    let mut seen = vec![false; n + 1];
    let mut out = Vec::new();
    for s in 1..=n {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            c.push(x as u32);
            x = images[x - 1] as usize;
        }
        out.push(c);
    }
    out
}

fn cycles_to_one_line(cycles: &[Vec<u32>], n: usize) -> Vec<u32> {
    let mut images = vec![0; n];
    for c in cycles {
        for i in 0..c.len() {
            images[c[i] as usize - 1] = c[(i + 1) % c.len()];
        }
    }
    images
}

/// Heap product straight from the description: shift, put the cycles in
/// standard order, attach each to a letter of `tau` or to the extra point.
fn oracle_heap_product(sigma: &[u32], tau: &[u32]) -> HashMap<Vec<u32>, i64> {
    let (m, n) = (sigma.len(), tau.len());
    let mut strings: Vec<Vec<u32>> = one_line_cycles(sigma)
        .into_iter()
        .map(|c| c.into_iter().map(|x| x + n as u32).collect())
        .collect();
    strings.sort_by(|a, b| b[0].cmp(&a[0]));
    let tau_cycles = one_line_cycles(tau);
    let mut out = HashMap::new();
    for code in 0..(n + 1).pow(strings.len() as u32) {
        let mut c = code;
        // point 0 stands for the extra point, point x for letter x
        let mut point = Vec::new();
        for _ in &strings {
            point.push(c % (n + 1));
            c /= n + 1;
        }
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        for tc in &tau_cycles {
            let mut built = Vec::new();
            for &x in tc {
                built.push(x);
                for (s, &p) in strings.iter().zip(&point) {
                    if p == x as usize {
                        built.extend(s);
                    }
                }
            }
            cycles.push(built);
        }
        for (s, &p) in strings.iter().zip(&point) {
            if p == 0 {
                cycles.push(s.clone());
            }
        }
        *out.entry(cycles_to_one_line(&cycles, m + n)).or_insert(0) += 1;
    }
    out
}

fn oracle_perm_coproduct(images: &[u32]) -> HashMap<(Vec<u32>, Vec<u32>), i64> {
    let cycles = one_line_cycles(images);
    let std = |chosen: Vec<&Vec<u32>>| {
        let mut labels: Vec<u32> = chosen.iter().flat_map(|c| c.iter().copied()).collect();
        labels.sort_unstable();
        let relabelled: Vec<Vec<u32>> = chosen
            .iter()
            .map(|c| {
                c.iter()
                    .map(|x| labels.binary_search(x).unwrap() as u32 + 1)
                    .collect()
            })
            .collect();
        cycles_to_one_line(&relabelled, labels.len())
    };
    let mut out = HashMap::new();
    for mask in 0..(1u32 << cycles.len()) {
        let (l, r): (Vec<_>, Vec<_>) = cycles
            .iter()
            .enumerate()
            .partition(|(i, _)| mask >> i & 1 == 1);
        let key = (
            std(l.into_iter().map(|(_, c)| c).collect()),
            std(r.into_iter().map(|(_, c)| c).collect()),
        );
        *out.entry(key).or_insert(0) += 1;
    }
    out
}

fn to_i64(c: &num_bigint::BigInt) -> i64 {
    i64::try_from(c).unwrap()
}

#[test]
fn tree_enumeration_matches_brute_force() {
    for n in 0..=6 {
        let mut got: Vec<Parents> = enumerate_trees(n).unwrap().iter().map(parents_of).collect();
        let mut want = all_parent_arrays(n);
        got.sort();
        want.sort();
        assert_eq!(got, want, "degree {n}");
    }
}

#[test]
fn perm_enumeration_matches_brute_force() {
    for n in 0..=6usize {
        let mut got: Vec<Vec<u32>> = enumerate_perms(n)
            .unwrap()
            .iter()
            .map(CyclePerm::to_one_line)
            .collect();
        let mut want = Vec::new();
        for code in 0..n.pow(n as u32) {
            let mut c = code;
            let images: Vec<u32> = (0..n)
                .map(|_| {
                    let x = c % n + 1;
                    c /= n;
                    x as u32
                })
                .collect();
            let mut sorted = images.clone();
            sorted.sort_unstable();
            if sorted.iter().enumerate().all(|(i, &x)| x as usize == i + 1) {
                want.push(images);
            }
        }
        got.sort();
        want.sort();
        assert_eq!(got, want, "degree {n}");
    }
}

#[test]
fn tree_product_matches_parent_array_oracle() {
    for m in 0..=3 {
        for n in 0..=3 {
            for a in enumerate_trees(m).unwrap() {
                for b in enumerate_trees(n).unwrap() {
                    let got: HashMap<Parents, i64> = tree_product(&a, &b)
                        .iter_unordered()
                        .map(|(t, c)| (parents_of(t), to_i64(c)))
                        .collect();
                    assert_eq!(
                        got,
                        oracle_tree_product(&parents_of(&a), &parents_of(&b)),
                        "{a} . {b}"
                    );
                }
            }
        }
    }
}

#[test]
fn tree_coproduct_matches_parent_array_oracle() {
    for n in 0..=5 {
        for t in enumerate_trees(n).unwrap() {
            let got: HashMap<(Parents, Parents), i64> = tree_coproduct(&t)
                .iter_unordered()
                .map(|(x, c)| ((parents_of(&x.left), parents_of(&x.right)), to_i64(c)))
                .collect();
            assert_eq!(got, oracle_tree_coproduct(&parents_of(&t)), "{t}");
        }
    }
}

#[test]
fn heap_product_matches_one_line_oracle() {
    for m in 0..=3 {
        for n in 0..=3 {
            for a in enumerate_perms(m).unwrap() {
                for b in enumerate_perms(n).unwrap() {
                    let got: HashMap<Vec<u32>, i64> = heap_product(&a, &b)
                        .iter_unordered()
                        .map(|(p, c)| (p.to_one_line(), to_i64(c)))
                        .collect();
                    let want = oracle_heap_product(&a.to_one_line(), &b.to_one_line());
                    assert_eq!(got, want, "{a} # {b}");
                }
            }
        }
    }
}

#[test]
fn perm_coproduct_matches_one_line_oracle() {
    for n in 0..=5 {
        for p in enumerate_perms(n).unwrap() {
            let got: HashMap<(Vec<u32>, Vec<u32>), i64> = perm_coproduct(&p)
                .iter_unordered()
                .map(|(x, c)| ((x.left.to_one_line(), x.right.to_one_line()), to_i64(c)))
                .collect();
            assert_eq!(got, oracle_perm_coproduct(&p.to_one_line()), "{p}");
        }
    }
}

#[test]
fn heap_product_oracle_splices_in_decreasing_order() {
    // sigma = (1)(2)(3) shifted to (4)(5)(6), tau = (1 2 3)
    let got = oracle_heap_product(&[1, 2, 3], &[2, 3, 1]);
    assert_eq!(got.len(), 64);
    assert!(got.values().all(|&c| c == 1));
    for cycles in [
        vec![vec![1, 6, 2, 5, 3, 4]],
        vec![vec![1, 2, 3], vec![4], vec![5], vec![6]],
        vec![vec![1, 4, 5, 6, 2, 3]],
    ] {
        let key = cycles_to_one_line(&cycles, 6);
        let present = got.contains_key(&key);
        // all three strings at one letter are spliced in decreasing order
        let expect = cycles[0] != vec![1, 4, 5, 6, 2, 3];
        assert_eq!(present, expect, "{cycles:?}");
    }
}
