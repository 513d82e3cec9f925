//! Posets up to isomorphism, canonical forms, and seeded random posets.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::poset::{bit, members, ElemSet, Poset};

/// Canonical form of a poset: the lexicographically smallest list of
/// down-set bitmasks over all relabelings. Two posets are isomorphic iff
/// their canonical forms agree. Cost is `n!`, so keep `n` small.
pub fn canonical_form(poset: &Poset) -> Vec<ElemSet> {
    let n = poset.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<ElemSet>> = None;
    permute(&mut perm, 0, &mut |perm| {
        // perm[old] = new
        let mut rows = vec![0; n];
        for old in 0..n {
            rows[perm[old]] = members(poset.down_set(old)).fold(0, |s, q| s | bit(perm[q]));
        }
        if best.as_ref().is_none_or(|b| rows < *b) {
            best = Some(rows);
        }
    });
    best.unwrap_or_default()
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

pub fn is_isomorphic(a: &Poset, b: &Poset) -> bool {
    a.len() == b.len() && a.leq_pairs() == b.leq_pairs() && canonical_form(a) == canonical_form(b)
}

/// One representative of every isomorphism class of `n`-element posets,
/// labeled `p1..pn` along a natural labeling (`pi < pj` implies `i < j`).
pub fn all_posets(n: usize) -> Vec<Poset> {
    assert!((1..=6).contains(&n), "poset catalog supports 1..=6 elements");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let labels: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let rel = |a: usize, b: usize| -> bool {
            a == b || (a < b && mask & (1 << pair_index(n, a, b)) != 0)
        };
        let transitive = pairs.iter().all(|&(a, b)| {
            !rel(a, b) || (b + 1..n).all(|c| !rel(b, c) || rel(a, c))
        });
        if !transitive {
            continue;
        }
        let poset = Poset::from_relation(labels.clone(), rel).expect("natural relation is a partial order");
        if seen.insert(canonical_form(&poset)) {
            out.push(poset);
        }
    }
    out
}

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    // index of (a, b), a < b, in row-major order of the strict upper triangle
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// All posets with `1..=max_n` elements, up to isomorphism.
pub fn all_posets_up_to(max_n: usize) -> Vec<Poset> {
    (1..=max_n).flat_map(all_posets).collect()
}

/// A random poset: each pair of a hidden linear order is related with
/// probability `density` before transitive closure, then labels `p1..pn`
/// are assigned in a random input order.
pub fn random_poset<R: Rng>(n: usize, density: f64, rng: &mut R) -> Poset {
    let mut below: Vec<ElemSet> = (0..n).map(bit).collect();
    // below[a] is final before any b > a reads it
    for b in 0..n {
        for a in 0..b {
            if rng.gen_bool(density) {
                below[b] |= below[a];
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    // hidden element order[k] becomes input position k
    let mut position = vec![0; n];
    for (k, &h) in order.iter().enumerate() {
        position[h] = k;
    }
    let labels: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
    Poset::from_relation(labels, |a, b| {
        let (ha, hb) = (order[a], order[b]);
        below[hb] & bit(ha) != 0
    })
    .expect("closure of a DAG is a partial order")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn catalog_sizes_match_known_counts() {
        // number of unlabeled posets: 1, 2, 5, 16, 63
        let counts: Vec<usize> = (1..=5).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 63]);
    }

    #[test]
    fn isomorphism_ignores_labels_and_order() {
        let a = Poset::new(&["a", "b", "c"], &[("a", "b")]).unwrap();
        let b = Poset::new(&["x", "y", "z"], &[("z", "x")]).unwrap();
        let c = Poset::new(&["x", "y", "z"], &[("z", "x"), ("x", "y")]).unwrap();
        assert!(is_isomorphic(&a, &b));
        assert!(!is_isomorphic(&a, &c));
    }

    #[test]
    fn random_posets_are_reproducible() {
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = random_poset(5, 0.4, &mut r1);
            let b = random_poset(5, 0.4, &mut r2);
            assert_eq!(a, b);
            assert_eq!(a.len(), 5);
        }
    }
}
