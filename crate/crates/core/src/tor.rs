//! Independent computations of the graded Betti numbers of a squarefree
//! monomial ideal, used to cross-check the explicit resolution.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{guard, Result};
use crate::linalg::SparseMatrix;
use crate::monomial::MonomialIdeal;
use crate::resolution::BettiTable;
use crate::scalar::Scalar;
use crate::simplicial::reduced_homology;

/// `Tor_i(I, k)` from the Taylor complex.
///
/// The Taylor complex has one basis element per nonempty subset of the
/// generators, in multidegree the lcm of the subset. After tensoring with the
/// residue field a boundary entry survives as `±1` exactly when dropping the
/// element keeps the lcm, so the complex splits into one block per lcm and
/// homology is computed block by block.
pub fn taylor_tor_oracle<F: Scalar>(ideal: &MonomialIdeal, max_generators: usize) -> Result<BettiTable> {
    let gens = ideal.generators();
    let g = gens.len();
    guard("Taylor complex generators", g, max_generators)?;
    let count = 1usize << g;
    let mut lcm = vec![0u64; count];
    for s in 1..count {
        let low = s.trailing_zeros() as usize;
        lcm[s] = lcm[s & (s - 1)] | gens[low].0;
    }
    let mut blocks: HashMap<u64, Vec<u32>> = HashMap::new();
    for s in 1..count {
        blocks.entry(lcm[s]).or_default().push(s as u32);
    }
    let mut blocks: Vec<(u64, Vec<u32>)> = blocks.into_iter().collect();
    blocks.sort_unstable_by_key(|(m, _)| *m);

    let graded: Vec<(usize, Vec<usize>)> = blocks
        .par_iter()
        .map(|(m, subsets)| (m.count_ones() as usize, taylor_block::<F>(subsets, &lcm, *m, g)))
        .collect();
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (degree, homology) in graded {
        for (i, h) in homology.into_iter().enumerate() {
            if h > 0 {
                *counts.entry((i, degree)).or_insert(0) += h;
            }
        }
    }
    Ok(BettiTable::from_graded(&counts))
}

/// Homology of one lcm block; entry `i` belongs to subsets of size `i + 1`.
fn taylor_block<F: Scalar>(subsets: &[u32], lcm: &[u64], m: u64, g: usize) -> Vec<usize> {
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); g + 1];
    for &s in subsets {
        by_size[s.count_ones() as usize].push(s);
    }
    let mut ranks = vec![0usize; g + 2];
    for k in 2..=g {
        if by_size[k].is_empty() || by_size[k - 1].is_empty() {
            continue;
        }
        let index: HashMap<u32, usize> = by_size[k - 1].iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut mat: SparseMatrix<F> = SparseMatrix::new(by_size[k - 1].len());
        for &s in &by_size[k] {
            let mut col = Vec::new();
            let mut rest = s;
            let mut t = 0;
            while rest != 0 {
                let j = rest.trailing_zeros();
                rest &= rest - 1;
                let face = s & !(1 << j);
                if lcm[face as usize] == m {
                    col.push((index[&face], if t % 2 == 0 { 1 } else { -1 }));
                }
                t += 1;
            }
            mat.push_int_column(col);
        }
        ranks[k] = mat.rank();
    }
    (1..=g)
        .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// `Tor_i(I, k)` from upper Koszul simplicial complexes:
/// `β_{i,b} = dim H̃_{i-1}(K^b)` with `K^b = {W ⊆ b : x^{b∖W} ∈ I}`, over
/// squarefree multidegrees `b`. The cost grows like `3^v` in the number of
/// variables but not with the number of generators.
pub fn koszul_tor_oracle<F: Scalar>(ideal: &MonomialIdeal, max_variables: usize) -> Result<BettiTable> {
    let v = ideal.variables().len();
    guard("Koszul oracle variables", v, max_variables)?;
    let gens = ideal.generators();
    let contains = |b: u64| gens.iter().any(|g| g.0 & !b == 0);
    let graded: Vec<(usize, Vec<usize>)> = (0u64..1 << v)
        .into_par_iter()
        .filter(|&b| contains(b))
        .map(|b| {
            let mut faces = Vec::new();
            let mut w = b;
            loop {
                if contains(b & !w) {
                    faces.push(w);
                }
                if w == 0 {
                    break;
                }
                w = (w - 1) & b;
            }
            (b.count_ones() as usize, reduced_homology::<F>(&faces))
        })
        .collect();
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (degree, homology) in graded {
        // entry 0 is H̃_{-1}, which contributes to Tor_0
        for (i, h) in homology.into_iter().enumerate() {
            if h > 0 {
                *counts.entry((i, degree)).or_insert(0) += h;
            }
        }
    }
    Ok(BettiTable::from_graded(&counts))
}
