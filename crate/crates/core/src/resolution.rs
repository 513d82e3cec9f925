//! The explicit linear resolution of `H_P`.
//!
//! `F_i` has basis `e(I, T)` with `I ∈ J(P)`, `I ∪ T = P`,
//! `I ∩ T ⊆ M(I)` and `|I ∩ T| = i`. The differential is
//!
//! ```text
//! ∂ e(I,T) = Σ_{p ∈ I∩T} (-1)^σ(I∩T, p) (x_p e(I∖p, T) - y_p e(I, T∖p))
//! ```
//!
//! with `σ(Q, p)` the number of elements of `Q` before `p` in a fixed
//! linear extension, and `ε(e(I, P∖I)) = u_I`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{guard, Error, Result};
use crate::linalg::SparseMatrix;
use crate::monomial::{MonomialIdeal, SquarefreeMonomial};
use crate::poset::{binomial, bit, members, DistributiveLattice, ElemSet, Poset};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variable {
    X(usize),
    Y(usize),
}

impl Variable {
    /// Index in the `2n`-variable ring.
    pub fn index(self, n: usize) -> usize {
        match self {
            Variable::X(p) => p,
            Variable::Y(p) => n + p,
        }
    }
}

/// A basis element `e(I, T)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub ideal: ElemSet,
    pub tset: ElemSet,
}

impl BasisElement {
    pub fn homological_degree(&self) -> usize {
        (self.ideal & self.tset).count_ones() as usize
    }

    pub fn internal_degree(&self) -> usize {
        (self.ideal.count_ones() + self.tset.count_ones()) as usize
    }

    /// The multidegree `x_I y_T`.
    pub fn multidegree(&self, n: usize) -> SquarefreeMonomial {
        SquarefreeMonomial::from_parts(self.ideal, self.tset, n)
    }
}

/// A differential entry: `sign * var` in row `row` of the target basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Entry {
    pub row: usize,
    pub sign: i8,
    pub var: Variable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    pub n: usize,
    /// Linear extension used for the signs.
    pub extension: Vec<usize>,
    /// `bases[i]` is the basis of `F_i`.
    pub bases: Vec<Vec<BasisElement>>,
    /// `differentials[i][c]` lists the entries of `∂ e` for the `c`-th basis
    /// element of `F_i`; `differentials[0]` is empty.
    pub differentials: Vec<Vec<Vec<Entry>>>,
    /// `ε` on the basis of `F_0`.
    pub augmentation: Vec<SquarefreeMonomial>,
}

/// `σ(Q, p) = |{q ∈ Q : q before p}|` with respect to `position`.
pub fn sigma(set: ElemSet, p: usize, position: &[usize]) -> usize {
    members(set).filter(|&q| position[q] < position[p]).count()
}

pub fn positions(extension: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; extension.len()];
    for (i, &p) in extension.iter().enumerate() {
        pos[p] = i;
    }
    pos
}

fn subsets_of_size(set: ElemSet, k: usize) -> Vec<ElemSet> {
    let elems: Vec<usize> = members(set).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << elems.len()) {
        if mask.count_ones() as usize == k {
            out.push(members(mask).fold(0, |s, j| s | bit(elems[j])));
        }
    }
    out
}

/// Builds `F` from the poset, its lattice, and a linear extension for signs.
pub fn build_resolution(
    poset: &Poset,
    lattice: &DistributiveLattice,
    extension: &[usize],
    max_basis: usize,
) -> Result<FreeComplex> {
    if !poset.is_linear_extension(extension) {
        return Err(Error::Input("sign order is not a linear extension of the poset".into()));
    }
    let n = poset.len();
    let generator_sets: Vec<ElemSet> = lattice.ideals().iter().map(|i| poset.maximal_in(i.0)).collect();
    let total: u64 = generator_sets.iter().map(|m| 1u64 << m.count_ones()).sum();
    guard("resolution basis size", total as usize, max_basis)?;
    let top = generator_sets.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);

    let mut bases: Vec<Vec<BasisElement>> = Vec::with_capacity(top + 1);
    for i in 0..=top {
        let mut basis = Vec::new();
        for (ideal, &gens) in lattice.ideals().iter().zip(&generator_sets) {
            for s in subsets_of_size(gens, i) {
                basis.push(BasisElement {
                    ideal: ideal.0,
                    tset: (poset.all() & !ideal.0) | s,
                });
            }
        }
        bases.push(basis);
    }
    let index: Vec<HashMap<(ElemSet, ElemSet), usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(k, e)| ((e.ideal, e.tset), k)).collect())
        .collect();

    let pos = positions(extension);
    let mut differentials = vec![Vec::new()];
    for i in 1..=top {
        let cols = bases[i]
            .iter()
            .map(|e| {
                let shared = e.ideal & e.tset;
                let mut entries = Vec::with_capacity(2 * i);
                for p in members(shared) {
                    let sign: i8 = if sigma(shared, p, &pos).is_multiple_of(2) { 1 } else { -1 };
                    let via_x = index[i - 1][&(e.ideal & !bit(p), e.tset)];
                    let via_y = index[i - 1][&(e.ideal, e.tset & !bit(p))];
                    entries.push(Entry { row: via_x, sign, var: Variable::X(p) });
                    entries.push(Entry { row: via_y, sign: -sign, var: Variable::Y(p) });
                }
                entries
            })
            .collect();
        differentials.push(cols);
    }
    let augmentation = bases[0]
        .iter()
        .map(|e| SquarefreeMonomial::from_parts(e.ideal, poset.all() & !e.ideal, n))
        .collect();
    Ok(FreeComplex {
        n,
        extension: extension.to_vec(),
        bases,
        differentials,
        augmentation,
    })
}

impl FreeComplex {
    /// `F` for a poset using its default linear extension.
    pub fn for_poset(poset: &Poset, lattice: &DistributiveLattice, max_basis: usize) -> Result<FreeComplex> {
        build_resolution(poset, lattice, &poset.linear_extension(), max_basis)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.len()).collect()
    }

    /// Length of the complex: the largest `i` with `F_i ≠ 0`.
    pub fn length(&self) -> usize {
        self.bases.len().saturating_sub(1)
    }

    pub fn describe(&self, poset: &Poset, i: usize, k: usize) -> String {
        let e = self.bases[i][k];
        format!("e({}, {})", poset.format_set(e.ideal), poset.format_set(e.tset))
    }
}

/// A polynomial in the `2n` variables, keyed by exponent vector.
type Poly = BTreeMap<Vec<u8>, i64>;
/// An element of a free module: basis index to polynomial coefficient.
type ModuleElement = BTreeMap<usize, Poly>;

fn add_term(v: &mut ModuleElement, row: usize, exps: Vec<u8>, c: i64) {
    let poly = v.entry(row).or_default();
    let slot = poly.entry(exps.clone()).or_insert(0);
    *slot += c;
    if *slot == 0 {
        poly.remove(&exps);
    }
    if poly.is_empty() {
        v.remove(&row);
    }
}

fn squarefree_exps(m: SquarefreeMonomial, n: usize) -> Vec<u8> {
    (0..2 * n).map(|v| u8::from(m.0 & (1 << v) != 0)).collect()
}

fn times(mut exps: Vec<u8>, var: usize) -> Vec<u8> {
    exps[var] += 1;
    exps
}

/// `∂` applied to a module element of `F_i`.
fn apply_differential(complex: &FreeComplex, i: usize, v: &ModuleElement) -> ModuleElement {
    let mut out = ModuleElement::new();
    for (&col, poly) in v {
        for entry in &complex.differentials[i][col] {
            let var = entry.var.index(complex.n);
            for (exps, &c) in poly {
                add_term(&mut out, entry.row, times(exps.clone(), var), c * entry.sign as i64);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexReport {
    pub d_squared_zero: bool,
    pub augmentation_zero: bool,
    /// Every entry is a single variable with the right multidegree.
    pub minimal_and_linear: bool,
    pub taylor_relations_checked: usize,
    pub taylor_relations_in_image: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

const MAX_REPORTED_FAILURES: usize = 10;

/// Symbolic checks: `∂∘∂ = 0`, `ε∘∂ = 0`, minimality, linearity, and that
/// every Taylor relation `r_{I,J}` is an explicit combination of images of
/// `∂_1`.
pub fn verify_complex(complex: &FreeComplex, poset: &Poset, lattice: &DistributiveLattice) -> ComplexReport {
    let n = complex.n;
    let mut failures = Vec::new();
    let note = |failures: &mut Vec<String>, msg: String| {
        if failures.len() < MAX_REPORTED_FAILURES {
            failures.push(msg);
        }
    };

    let mut d_squared_zero = true;
    for i in 2..complex.bases.len() {
        for k in 0..complex.bases[i].len() {
            let unit: ModuleElement = BTreeMap::from([(k, Poly::from([(vec![0u8; 2 * n], 1)]))]);
            let once = apply_differential(complex, i, &unit);
            let twice = apply_differential(complex, i - 1, &once);
            if !twice.is_empty() {
                d_squared_zero = false;
                note(&mut failures, format!("∂∂ {} ≠ 0", complex.describe(poset, i, k)));
            }
        }
    }

    let mut augmentation_zero = true;
    if complex.bases.len() > 1 {
        for (k, col) in complex.differentials[1].iter().enumerate() {
            let mut image = Poly::new();
            for entry in col {
                let exps = times(squarefree_exps(complex.augmentation[entry.row], n), entry.var.index(n));
                *image.entry(exps).or_insert(0) += entry.sign as i64;
            }
            image.retain(|_, c| *c != 0);
            if !image.is_empty() {
                augmentation_zero = false;
                note(&mut failures, format!("ε∂ {} ≠ 0", complex.describe(poset, 1, k)));
            }
        }
    }

    let mut minimal_and_linear = true;
    for i in 1..complex.bases.len() {
        for (k, col) in complex.differentials[i].iter().enumerate() {
            let source = complex.bases[i][k].multidegree(n);
            for entry in col {
                let target = complex.bases[i - 1][entry.row].multidegree(n);
                let var = 1u64 << entry.var.index(n);
                if target.0 & var != 0 || target.0 | var != source.0 || entry.sign.abs() != 1 {
                    minimal_and_linear = false;
                    note(&mut failures, format!("entry of ∂ {} is not homogeneous", complex.describe(poset, i, k)));
                }
            }
        }
    }

    let (checked, taylor_ok, taylor_failures) = check_taylor_relations(complex, poset, lattice);
    for f in taylor_failures {
        note(&mut failures, f);
    }

    ComplexReport {
        passed: d_squared_zero && augmentation_zero && minimal_and_linear && taylor_ok,
        d_squared_zero,
        augmentation_zero,
        minimal_and_linear,
        taylor_relations_checked: checked,
        taylor_relations_in_image: taylor_ok,
        failures,
    }
}

/// `x_A y_B` as an exponent vector.
fn xy_exps(a: ElemSet, b: ElemSet, n: usize) -> Vec<u8> {
    squarefree_exps(SquarefreeMonomial::from_parts(a, b, n), n)
}

fn check_taylor_relations(
    complex: &FreeComplex,
    poset: &Poset,
    lattice: &DistributiveLattice,
) -> (usize, bool, Vec<String>) {
    let n = complex.n;
    let f0: HashMap<ElemSet, usize> = complex.bases[0].iter().enumerate().map(|(k, e)| (e.ideal, k)).collect();
    let f1: HashMap<(ElemSet, ElemSet), usize> = complex
        .bases
        .get(1)
        .map(|b| b.iter().enumerate().map(|(k, e)| ((e.ideal, e.tset), k)).collect())
        .unwrap_or_default();
    let pos = positions(&complex.extension);
    let all = poset.all();

    // r_{A,K} for K ⊆ A as a combination of columns of ∂_1, scaled by `scale`
    let telescoped = |upper: ElemSet, lower: ElemSet, scale: &[u8], sign: i64, acc: &mut ModuleElement| -> bool {
        let mut steps: Vec<usize> = members(upper & !lower).collect();
        steps.sort_by_key(|&p| pos[p]);
        let mut chain = vec![lower];
        for &p in &steps {
            chain.push(chain.last().unwrap() | bit(p));
        }
        let m = steps.len();
        for j in 1..=m {
            let later: ElemSet = steps[j..].iter().fold(0, |s, &p| s | bit(p));
            let earlier: ElemSet = steps[..j - 1].iter().fold(0, |s, &p| s | bit(p));
            let coeff: Vec<u8> = xy_exps(later, earlier, n).iter().zip(scale).map(|(a, b)| a + b).collect();
            let Some(&col) = f1.get(&(chain[j], all & !chain[j - 1])) else {
                return false;
            };
            let unit = ModuleElement::from([(col, Poly::from([(coeff, -sign)]))]);
            for (row, poly) in apply_differential(complex, 1, &unit) {
                for (exps, c) in poly {
                    add_term(acc, row, exps, c);
                }
            }
        }
        true
    };

    let mut failures = Vec::new();
    let mut checked = 0;
    for a in 0..lattice.len() {
        for b in a + 1..lattice.len() {
            let (i, j) = (lattice.ideal(a).0, lattice.ideal(b).0);
            let k = i & j;
            let mut direct = ModuleElement::new();
            add_term(&mut direct, f0[&i], xy_exps(j & !i, i & !j, n), 1);
            add_term(&mut direct, f0[&j], xy_exps(i & !j, j & !i, n), -1);

            let mut combo = ModuleElement::new();
            let ok = telescoped(i, k, &xy_exps(j & !i, 0, n), 1, &mut combo)
                && telescoped(j, k, &xy_exps(i & !j, 0, n), -1, &mut combo);
            checked += 1;
            if !ok || combo != direct {
                failures.push(format!(
                    "Taylor relation r({}, {}) not reproduced from ∂_1",
                    poset.format_set(i),
                    poset.format_set(j)
                ));
            }
        }
    }
    (checked, failures.is_empty(), failures)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub homological_degree: usize,
    pub internal_degree: usize,
    pub rank: usize,
}

/// Graded Betti numbers of a resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn from_complex(complex: &FreeComplex) -> BettiTable {
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (i, basis) in complex.bases.iter().enumerate() {
            for e in basis {
                *counts.entry((i, e.internal_degree())).or_insert(0) += 1;
            }
        }
        Self::from_graded(&counts)
    }

    pub fn from_graded(counts: &BTreeMap<(usize, usize), usize>) -> BettiTable {
        BettiTable {
            entries: counts
                .iter()
                .filter(|(_, &r)| r > 0)
                .map(|(&(i, d), &r)| BettiEntry {
                    homological_degree: i,
                    internal_degree: d,
                    rank: r,
                })
                .collect(),
        }
    }

    /// Total Betti numbers `β_0, β_1, ...`.
    pub fn totals(&self) -> Vec<usize> {
        let len = self.entries.iter().map(|e| e.homological_degree + 1).max().unwrap_or(0);
        let mut t = vec![0; len];
        for e in &self.entries {
            t[e.homological_degree] += e.rank;
        }
        t
    }

    pub fn is_linear(&self) -> bool {
        let shift: Vec<usize> = self
            .entries
            .iter()
            .map(|e| e.internal_degree - e.homological_degree)
            .collect();
        shift.windows(2).all(|w| w[0] == w[1])
    }

    /// Text rendering with one column per homological degree and one row
    /// per degree shift `internal - homological`.
    pub fn render_text(&self) -> String {
        let totals = self.totals();
        let mut shifts: Vec<usize> = self
            .entries
            .iter()
            .map(|e| e.internal_degree - e.homological_degree)
            .collect();
        shifts.sort_unstable();
        shifts.dedup();
        let width = totals.iter().map(|t| t.to_string().len()).max().unwrap_or(1).max(2) + 1;
        let label_width = shifts.iter().map(|s| s.to_string().len() + 1).max().unwrap_or(1).max(6);
        let mut out = String::new();
        let _ = write!(out, "{:>label_width$}", "");
        for i in 0..totals.len() {
            let _ = write!(out, "{i:>width$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>label_width$}", "total:");
        for t in &totals {
            let _ = write!(out, "{t:>width$}");
        }
        out.push('\n');
        for s in shifts {
            let _ = write!(out, "{:>label_width$}", format!("{s}:"));
            for i in 0..totals.len() {
                let r = self
                    .entries
                    .iter()
                    .find(|e| e.homological_degree == i && e.internal_degree == i + s)
                    .map_or(".".to_string(), |e| e.rank.to_string());
                let _ = write!(out, "{r:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    pub table: BettiTable,
    pub betti: Vec<usize>,
    pub boolean_interval_counts: Vec<u64>,
    pub matches_boolean_counts: bool,
    pub linear: bool,
    pub projective_dimension: usize,
    pub sperner: usize,
    pub pd_equals_sperner: bool,
    pub euler_sum: i64,
    pub euler_is_one: bool,
    pub passed: bool,
}

/// Betti numbers from the ranks of `F`, checked against the
/// Boolean-interval counts, the Sperner number, and `Σ(-1)^i β_i = 1`.
pub fn betti_table(
    poset: &Poset,
    lattice: &DistributiveLattice,
    complex: &FreeComplex,
    max_elements: usize,
) -> Result<BettiReport> {
    let table = BettiTable::from_complex(complex);
    let betti = table.totals();
    let counts = crate::poset::boolean_interval_counts(lattice, poset);
    let sperner = poset.antichain_stats(max_elements)?.sperner;
    let pd = betti.len().saturating_sub(1);
    let euler: i64 = betti
        .iter()
        .enumerate()
        .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    let matches = betti.iter().map(|&b| b as u64).eq(counts.iter().copied());
    let linear = table.is_linear()
        && table.entries.iter().all(|e| e.internal_degree == poset.len() + e.homological_degree);
    Ok(BettiReport {
        passed: matches && linear && pd == sperner && euler == 1,
        table,
        betti,
        boolean_interval_counts: counts,
        matches_boolean_counts: matches,
        linear,
        projective_dimension: pd,
        sperner,
        pd_equals_sperner: pd == sperner,
        euler_sum: euler,
        euler_is_one: euler == 1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandEntry {
    /// `-1` stands for `H_P` itself in the augmented complex.
    pub homological_degree: i64,
    pub degree: usize,
    pub dimension: u64,
    pub homology: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandReport {
    pub degree_bound: usize,
    pub field: String,
    pub entries: Vec<StrandEntry>,
    /// `(homological degree, degree)` pairs with nonzero homology.
    pub failures: Vec<(i64, usize)>,
    pub exact: bool,
}

/// Homology of the augmented complex `F → H_P → 0` in the squarefree
/// multidegree `support`: the subcomplex spanned by basis elements whose
/// multidegree divides `support`. Index 0 is `H_P`, index `i + 1` is `F_i`.
fn multidegree_block<F: Scalar>(complex: &FreeComplex, support: u64) -> (Vec<u64>, Vec<i64>) {
    let n = complex.n;
    let mut local: Vec<Vec<usize>> = Vec::with_capacity(complex.bases.len());
    for basis in &complex.bases {
        local.push(
            basis
                .iter()
                .enumerate()
                .filter(|(_, e)| e.multidegree(n).0 & !support == 0)
                .map(|(k, _)| k)
                .collect(),
        );
    }
    let hp_dim = u64::from(complex.augmentation.iter().any(|u| u.0 & !support == 0));
    let mut dims = vec![hp_dim];
    dims.extend(local.iter().map(|l| l.len() as u64));

    // ranks[i] = rank of the map out of position i (position 0 = H_P has none)
    let mut ranks = vec![0usize; dims.len() + 1];
    if hp_dim == 1 && !local[0].is_empty() {
        let mut eps: SparseMatrix<F> = SparseMatrix::new(1);
        for _ in &local[0] {
            eps.push_int_column([(0, 1)]);
        }
        ranks[1] = eps.rank();
    }
    for i in 1..complex.bases.len() {
        if local[i].is_empty() || local[i - 1].is_empty() {
            continue;
        }
        let row_of: HashMap<usize, usize> = local[i - 1].iter().enumerate().map(|(r, &k)| (k, r)).collect();
        let mut m: SparseMatrix<F> = SparseMatrix::new(local[i - 1].len());
        for &k in &local[i] {
            m.push_int_column(
                complex.differentials[i][k]
                    .iter()
                    .filter_map(|e| row_of.get(&e.row).map(|&r| (r, e.sign as i64))),
            );
        }
        ranks[i + 1] = m.rank();
    }
    let homology = (0..dims.len())
        .map(|pos| dims[pos] as i64 - ranks[pos] as i64 - ranks[pos + 1] as i64)
        .collect();
    (dims, homology)
}

/// Number of monomials of degree `d` whose support is exactly a set of
/// `k` variables.
fn support_multiplicity(k: usize, d: usize) -> u64 {
    if k == 0 {
        u64::from(d == 0)
    } else if d < k {
        0
    } else {
        binomial((d - 1) as u64, (k - 1) as u64)
    }
}

/// Exactness of the augmented complex in every total degree up to
/// `degree_bound`.
///
/// `F` is multigraded with squarefree generator degrees, so the degree-`d`
/// strand splits into blocks, one per multidegree `a` of total degree `d`,
/// and the block at `a` depends only on the support of `a`. Each support is
/// computed once and weighted by the number of monomials of degree `d` with
/// that support. [`explicit_strand`] builds a strand directly for
/// cross-checking.
pub fn strand_exactness<F: Scalar>(complex: &FreeComplex, degree_bound: usize) -> Result<StrandReport> {
    let n = complex.n;
    if degree_bound < n {
        return Err(Error::Input(format!("degree bound {degree_bound} is below n = {n}")));
    }
    guard("number of variables for strand blocks", 2 * n, 24)?;
    let blocks: Vec<(usize, Vec<u64>, Vec<i64>)> = (0u64..(1 << (2 * n)))
        .into_par_iter()
        .map(|support| {
            let (dims, hom) = multidegree_block::<F>(complex, support);
            (support.count_ones() as usize, dims, hom)
        })
        .collect();
    let positions = complex.bases.len() + 1;
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for d in 0..=degree_bound {
        for pos in 0..positions {
            let mut dim = 0u64;
            let mut hom = 0i64;
            for (k, dims, h) in &blocks {
                let w = support_multiplicity(*k, d);
                dim += w * dims[pos];
                hom += w as i64 * h[pos];
            }
            let i = pos as i64 - 1;
            if dim > 0 || hom != 0 {
                entries.push(StrandEntry {
                    homological_degree: i,
                    degree: d,
                    dimension: dim,
                    homology: hom,
                });
            }
            if hom != 0 {
                failures.push((i, d));
            }
        }
    }
    Ok(StrandReport {
        degree_bound,
        field: field_name::<F>(),
        exact: failures.is_empty(),
        entries,
        failures,
    })
}

pub(crate) fn field_name<F: Scalar>() -> String {
    match F::characteristic() {
        0 => "rational".into(),
        p => format!("prime:{p}"),
    }
}

/// Exponent vectors of all monomials of degree `d` in `vars` variables.
pub fn monomials_of_degree(vars: usize, d: usize) -> Vec<Vec<u8>> {
    fn go(vars: usize, d: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() + 1 == vars {
            prefix.push(d as u8);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e as u8);
            go(vars, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if vars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(vars, d, &mut Vec::new(), &mut out);
    out
}

/// The degree-`d` strand of the augmented complex built literally, with
/// basis `monomial × e` at each position. Returns `(homological degree,
/// dimension, homology)` with `-1` for `H_P`. Exponential in `d`; meant for
/// small cross-checks.
pub fn explicit_strand<F: Scalar>(complex: &FreeComplex, d: usize) -> Vec<(i64, usize, i64)> {
    let n = complex.n;
    let vars = 2 * n;
    // H_P in degree d: monomials divisible by some generator
    let hp: Vec<Vec<u8>> = monomials_of_degree(vars, d)
        .into_iter()
        .filter(|m| {
            complex
                .augmentation
                .iter()
                .any(|u| (0..vars).all(|v| u.0 & (1 << v) == 0 || m[v] > 0))
        })
        .collect();
    let mut spaces: Vec<Vec<(Vec<u8>, usize)>> = Vec::new();
    for (i, basis) in complex.bases.iter().enumerate() {
        let shift = n + i;
        let mut space = Vec::new();
        if d >= shift {
            for m in monomials_of_degree(vars, d - shift) {
                for k in 0..basis.len() {
                    space.push((m.clone(), k));
                }
            }
        }
        spaces.push(space);
    }
    let mut dims = vec![hp.len()];
    dims.extend(spaces.iter().map(|s| s.len()));
    let mut ranks = vec![0usize; dims.len() + 1];

    let hp_index: HashMap<&Vec<u8>, usize> = hp.iter().enumerate().map(|(r, m)| (m, r)).collect();
    let mut eps: SparseMatrix<F> = SparseMatrix::new(hp.len());
    for (m, k) in &spaces[0] {
        let mut image = m.clone();
        for v in complex.augmentation[*k].variables() {
            image[v] += 1;
        }
        eps.push_int_column([(hp_index[&image], 1)]);
    }
    ranks[1] = eps.rank();
    for i in 1..spaces.len() {
        let target: HashMap<(&Vec<u8>, usize), usize> =
            spaces[i - 1].iter().enumerate().map(|(r, (m, k))| ((m, *k), r)).collect();
        let mut mat: SparseMatrix<F> = SparseMatrix::new(spaces[i - 1].len());
        for (m, k) in &spaces[i] {
            let col: Vec<(usize, i64)> = complex.differentials[i][*k]
                .iter()
                .map(|e| {
                    let mm = times(m.clone(), e.var.index(n));
                    (target[&(&mm, e.row)], e.sign as i64)
                })
                .collect();
            mat.push_int_column(col);
        }
        ranks[i + 1] = mat.rank();
    }
    (0..dims.len())
        .map(|pos| {
            (
                pos as i64 - 1,
                dims[pos],
                dims[pos] as i64 - ranks[pos] as i64 - ranks[pos + 1] as i64,
            )
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityReport {
    pub pairs: usize,
    pub formula_value: i64,
    pub formula_matches: bool,
    pub height: usize,
    pub height_is_two: bool,
    /// `H_P` equals the intersection of the primes `(x_p, y_q)`, `p <= q`.
    pub decomposition_matches: bool,
    /// Minimal primes of minimum height; their number is the multiplicity
    /// of a squarefree quotient.
    pub top_dimensional_components: usize,
    pub components_match_pairs: bool,
    pub passed: bool,
}

/// Checks `e(S/H_P) = #{p <= q}` through the alternating sum
/// `(1/2) Σ (-1)^{i+1} b_i (n+i)^2`, and that `H_P` has height 2 with
/// primary decomposition `∩_{p<=q} (x_p, y_q)`.
pub fn multiplicity_checks(poset: &Poset, hp: &MonomialIdeal, betti: &[usize]) -> Result<MultiplicityReport> {
    let n = poset.len();
    guard("number of variables for decomposition", 2 * n, 24)?;
    let pairs = poset.leq_pairs();
    let twice: i64 = betti
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            sign * b as i64 * ((n + i) as i64).pow(2)
        })
        .sum();
    let formula_value = twice / 2;
    let formula_matches = twice % 2 == 0 && formula_value == pairs as i64;

    let prime_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .filter(|&(p, q)| poset.leq(p, q))
        .collect();
    let in_intersection = |m: u64| prime_pairs.iter().all(|&(p, q)| m & (1 << p) != 0 || m & (1 << (n + q)) != 0);
    let space = 1u64 << (2 * n);
    let members_of_intersection: Vec<u64> = (0..space).filter(|&m| in_intersection(m)).collect();
    let minimal: Vec<SquarefreeMonomial> = members_of_intersection
        .iter()
        .filter(|&&m| members(m).all(|v| !in_intersection(m & !(1 << v))))
        .map(|&m| SquarefreeMonomial(m))
        .collect();
    let decomposition_matches = {
        let mut a = minimal.clone();
        a.sort_unstable();
        a == hp.sorted_generators()
    };

    // minimal transversals of the generator supports = minimal primes
    let gens = hp.generators();
    let hits = |c: u64| gens.iter().all(|g| g.0 & c != 0);
    let transversals: Vec<u64> = (0..space)
        .filter(|&c| hits(c) && members(c).all(|v| !hits(c & !(1 << v))))
        .collect();
    let height = transversals.iter().map(|c| c.count_ones() as usize).min().unwrap_or(0);
    let top = transversals.iter().filter(|c| c.count_ones() as usize == height).count();

    Ok(MultiplicityReport {
        pairs,
        formula_value,
        formula_matches,
        height,
        height_is_two: height == 2,
        decomposition_matches,
        top_dimensional_components: top,
        components_match_pairs: top == pairs,
        passed: formula_matches && height == 2 && decomposition_matches && top == pairs,
    })
}
