//! Finite posets, their poset ideals, and the distributive lattice of ideals.
//!
//! Elements are indexed `0..n` in input order and subsets of a poset are
//! bitmasks ([`ElemSet`]), so posets are limited to 64 elements.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{guard, Error, Result};

/// A subset of poset elements as a bitmask over element indices.
pub type ElemSet = u64;

pub const MAX_ELEMENTS: usize = 64;

/// Iterates the indices set in `set`, ascending.
pub fn members(set: ElemSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

pub(crate) fn bit(i: usize) -> ElemSet {
    1u64 << i
}

pub(crate) fn full_set(n: usize) -> ElemSet {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A finite partially ordered set given by its cover relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    /// `below[p]` is the principal ideal `{q : q <= p}`.
    below: Vec<ElemSet>,
    above: Vec<ElemSet>,
}

/// Serialized form: `{"elements":["a","b"],"covers":[["a","b"]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl Poset {
    /// Builds a poset from labels and pairs `(a, b)` meaning `a < b`.
    ///
    /// The order relation is the reflexive-transitive closure of the pairs;
    /// the stored covers are the transitive reduction, so redundant input
    /// pairs are dropped.
    pub fn new<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Poset> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        if labels.is_empty() {
            return Err(Error::Input("a poset needs at least one element".into()));
        }
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::Input(format!(
                "{} elements; at most {MAX_ELEMENTS} are supported",
                labels.len()
            )));
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::Input(format!("duplicate element label `{l}`")));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::Input(format!("cover mentions unknown element `{s}`")))
        };
        let mut pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::from_index_pairs(labels, &pairs)
    }

    /// Like [`Poset::new`] with covers given as element indices.
    pub fn from_index_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Input(format!("cover ({a},{b}) out of range")));
            }
            if !succ[a].contains(&b) {
                succ[a].push(b);
            }
        }
        if let Some(cycle) = find_cycle(&succ) {
            return Err(Error::Cycle {
                cycle: cycle.into_iter().map(|i| labels[i].clone()).collect(),
            });
        }
        let order = topological_order(&succ);
        let mut below: Vec<ElemSet> = (0..n).map(bit).collect();
        for &a in &order {
            for &b in &succ[a] {
                below[b] |= below[a];
            }
        }
        Ok(Self::from_below(labels, below))
    }

    /// Builds a poset from an arbitrary binary relation, checking that it
    /// is a partial order.
    pub fn from_relation<F>(labels: Vec<String>, leq: F) -> Result<Poset>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        for a in 0..n {
            if !leq(a, a) {
                return Err(Error::Input(format!("relation is not reflexive at `{}`", labels[a])));
            }
            for b in 0..n {
                if a != b && leq(a, b) && leq(b, a) {
                    return Err(Error::Input(format!(
                        "relation is not antisymmetric on `{}`, `{}`",
                        labels[a], labels[b]
                    )));
                }
                for c in 0..n {
                    if leq(a, b) && leq(b, c) && !leq(a, c) {
                        return Err(Error::Input(format!(
                            "relation is not transitive on `{}`, `{}`, `{}`",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let below = (0..n)
            .map(|b| (0..n).filter(|&a| leq(a, b)).fold(0, |s, a| s | bit(a)))
            .collect();
        Ok(Self::from_below(labels, below))
    }

    fn from_below(labels: Vec<String>, below: Vec<ElemSet>) -> Poset {
        let n = labels.len();
        let mut above = vec![0; n];
        for (b, &set) in below.iter().enumerate() {
            for a in members(set) {
                above[a] |= bit(b);
            }
        }
        let mut covers = Vec::new();
        for b in 0..n {
            for a in members(below[b] & !bit(b)) {
                let strictly_between = (above[a] & !bit(a)) & (below[b] & !bit(b));
                if strictly_between == 0 {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();
        Poset {
            labels,
            covers,
            below,
            above,
        }
    }

    pub fn from_json(text: &str) -> Result<Poset> {
        let raw: PosetJson =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("poset JSON: {e}")))?;
        Self::new(
            &raw.elements,
            &raw.covers.iter().map(|(a, b)| (a.clone(), b.clone())).collect::<Vec<_>>(),
        )
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.labels.clone(),
            covers: self
                .covers
                .iter()
                .map(|&(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, p: usize) -> &str {
        &self.labels[p]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Irredundant cover pairs `(a, b)`: `a < b` with nothing in between.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b] & bit(a) != 0
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `{q : q <= p}`.
    pub fn down_set(&self, p: usize) -> ElemSet {
        self.below[p]
    }

    /// `{q : q >= p}`.
    pub fn up_set(&self, p: usize) -> ElemSet {
        self.above[p]
    }

    pub fn all(&self) -> ElemSet {
        full_set(self.len())
    }

    /// Number of pairs `(p, q)` with `p <= q`.
    pub fn leq_pairs(&self) -> usize {
        self.below.iter().map(|s| s.count_ones() as usize).sum()
    }

    pub fn is_down_closed(&self, set: ElemSet) -> bool {
        members(set).all(|p| self.below[p] & !set == 0)
    }

    /// Maximal elements of an arbitrary subset.
    pub fn maximal_in(&self, set: ElemSet) -> ElemSet {
        members(set)
            .filter(|&p| self.above[p] & set == bit(p))
            .fold(0, |s, p| s | bit(p))
    }

    pub fn is_antichain(&self, set: ElemSet) -> bool {
        members(set).all(|p| (self.below[p] | self.above[p]) & set == bit(p))
    }

    /// Checks that `set` is a poset ideal.
    pub fn ideal(&self, set: ElemSet) -> Result<PosetIdeal> {
        if set & !self.all() != 0 {
            return Err(Error::InvalidIdeal("subset mentions elements outside the poset".into()));
        }
        if !self.is_down_closed(set) {
            let p = members(set)
                .find(|&p| self.below[p] & !set != 0)
                .expect("some element witnesses non-closure");
            let q = members(self.below[p] & !set).next().unwrap();
            return Err(Error::InvalidIdeal(format!(
                "{} contains `{}` but not `{}` below it",
                self.format_set(set),
                self.labels[p],
                self.labels[q]
            )));
        }
        Ok(PosetIdeal(set))
    }

    /// The generators `M(I)` of a poset ideal: its maximal elements.
    pub fn generators(&self, ideal: ElemSet) -> Result<ElemSet> {
        self.ideal(ideal)?;
        Ok(self.maximal_in(ideal))
    }

    /// Enumerates `J(P)`, the distributive lattice of poset ideals.
    pub fn enumerate_ideals(&self, max_elements: usize) -> Result<DistributiveLattice> {
        guard("poset size", self.len(), max_elements)?;
        let mut seen: HashSet<ElemSet> = HashSet::new();
        let mut queue = VecDeque::from([0u64]);
        seen.insert(0);
        while let Some(ideal) = queue.pop_front() {
            for p in members(self.all() & !ideal) {
                if self.below[p] & !bit(p) & !ideal == 0 {
                    let next = ideal | bit(p);
                    if seen.insert(next) {
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut sets: Vec<ElemSet> = seen.into_iter().collect();
        let rank = self.label_ranks();
        sets.sort_by_cached_key(|&s| {
            let mut key: Vec<usize> = members(s).map(|p| rank[p]).collect();
            key.sort_unstable();
            (s.count_ones(), key)
        });
        let index = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        Ok(DistributiveLattice {
            ideals: sets.into_iter().map(PosetIdeal).collect(),
            index,
        })
    }

    fn label_ranks(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        let mut rank = vec![0; self.len()];
        for (r, p) in order.into_iter().enumerate() {
            rank[p] = r;
        }
        rank
    }

    /// Sperner number and all inclusion-maximal antichains.
    pub fn antichain_stats(&self, max_elements: usize) -> Result<AntichainStats> {
        guard("poset size", self.len(), max_elements)?;
        let mut maximal = Vec::new();
        let mut sperner = 0;
        self.grow_antichains(0, 0, &mut maximal, &mut sperner);
        maximal.sort_by_cached_key(|&s| members(s).collect::<Vec<_>>());
        Ok(AntichainStats {
            sperner,
            maximal_antichains: maximal,
        })
    }

    fn grow_antichains(&self, start: usize, chain: ElemSet, out: &mut Vec<ElemSet>, best: &mut usize) {
        *best = (*best).max(chain.count_ones() as usize);
        let compatible = |p: usize| (self.below[p] | self.above[p]) & chain == 0;
        for p in start..self.len() {
            if compatible(p) {
                self.grow_antichains(p + 1, chain | bit(p), out, best);
            }
        }
        if (0..self.len()).all(|p| chain & bit(p) != 0 || !compatible(p)) {
            out.push(chain);
        }
    }

    /// A linear extension: Kahn's algorithm taking the smallest available
    /// input index first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut placed: ElemSet = 0;
        let mut order = Vec::with_capacity(self.len());
        while order.len() < self.len() {
            let p = (0..self.len())
                .find(|&p| placed & bit(p) == 0 && self.below[p] & !bit(p) & !placed == 0)
                .expect("acyclic order always has a minimal element");
            placed |= bit(p);
            order.push(p);
        }
        order
    }

    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &p) in order.iter().enumerate() {
            if p >= self.len() || pos[p] != usize::MAX {
                return false;
            }
            pos[p] = i;
        }
        order.len() == self.len() && self.covers.iter().all(|&(a, b)| pos[a] < pos[b])
    }

    pub fn format_set(&self, set: ElemSet) -> String {
        let names: Vec<&str> = members(set).map(|p| self.label(p)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn set_labels(&self, set: ElemSet) -> Vec<String> {
        members(set).map(|p| self.labels[p].clone()).collect()
    }

    /// Parses a list of labels into a subset.
    pub fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElemSet> {
        labels.iter().try_fold(0, |acc, l| {
            let l = l.as_ref();
            self.index_of(l)
                .map(|p| acc | bit(p))
                .ok_or_else(|| Error::Input(format!("unknown element `{l}`")))
        })
    }

    /// Hasse diagram of the poset in DOT, drawn bottom to top.
    pub fn hasse_dot(&self) -> String {
        let mut s = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
        for l in &self.labels {
            let _ = writeln!(s, "  {};", dot_id(l));
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(s, "  {} -> {};", dot_id(&self.labels[a]), dot_id(&self.labels[b]));
        }
        s.push_str("}\n");
        s
    }

    /// The same poset with elements renamed.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Poset> {
        if labels.len() != self.len() {
            return Err(Error::Input("label count mismatch".into()));
        }
        Poset::from_index_pairs(labels, &self.covers)
    }
}

pub(crate) fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn find_cycle(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    fn visit(v: usize, succ: &[Vec<usize>], mark: &mut [Mark], stack: &mut Vec<usize>) -> Option<Vec<usize>> {
        mark[v] = Mark::Active;
        stack.push(v);
        for &w in &succ[v] {
            match mark[w] {
                Mark::Active => {
                    let start = stack.iter().position(|&u| u == w).unwrap();
                    let mut cycle = stack[start..].to_vec();
                    cycle.push(w);
                    return Some(cycle);
                }
                Mark::New => {
                    if let Some(c) = visit(w, succ, mark, stack) {
                        return Some(c);
                    }
                }
                Mark::Done => {}
            }
        }
        stack.pop();
        mark[v] = Mark::Done;
        None
    }
    let mut mark = vec![Mark::New; succ.len()];
    let mut stack = Vec::new();
    (0..succ.len()).find_map(|v| {
        if mark[v] == Mark::New {
            visit(v, succ, &mut mark, &mut stack)
        } else {
            None
        }
    })
}

fn topological_order(succ: &[Vec<usize>]) -> Vec<usize> {
    let n = succ.len();
    let mut indeg = vec![0; n];
    for outs in succ {
        for &w in outs {
            indeg[w] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    order
}

/// A down-closed subset of a poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosetIdeal(pub ElemSet);

impl PosetIdeal {
    pub fn set(self) -> ElemSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, p: usize) -> bool {
        self.0 & bit(p) != 0
    }

    pub fn is_subset(self, other: PosetIdeal) -> bool {
        self.0 & !other.0 == 0
    }
}

/// `J(P)`: all poset ideals, ordered by cardinality and then by their
/// sorted member labels.
#[derive(Clone, Debug)]
pub struct DistributiveLattice {
    ideals: Vec<PosetIdeal>,
    index: HashMap<ElemSet, usize>,
}

impl DistributiveLattice {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[PosetIdeal] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> PosetIdeal {
        self.ideals[i]
    }

    pub fn index_of(&self, set: ElemSet) -> Option<usize> {
        self.index.get(&set).copied()
    }

    pub fn contains(&self, set: ElemSet) -> bool {
        self.index.contains_key(&set)
    }

    /// Index of `I ∧ J = I ∩ J`.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.index[&(self.ideals[i].0 & self.ideals[j].0)]
    }

    /// Index of `I ∨ J = I ∪ J`.
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.index[&(self.ideals[i].0 | self.ideals[j].0)]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.ideals[i].is_subset(self.ideals[j]) || self.ideals[j].is_subset(self.ideals[i])
    }

    /// Cover pairs `(i, j, p)` of the lattice: `ideal(j) = ideal(i) ∪ {p}`.
    pub fn hasse_edges(&self) -> Vec<(usize, usize, usize)> {
        let mut edges = Vec::new();
        for (i, ideal) in self.ideals.iter().enumerate() {
            for p in members(!ideal.0) {
                if let Some(&j) = self.index.get(&(ideal.0 | bit(p))) {
                    edges.push((i, j, p));
                }
            }
        }
        edges
    }

    /// Hasse diagram of `J(P)` in DOT, drawn bottom to top.
    pub fn hasse_dot(&self, poset: &Poset) -> String {
        let mut s = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, ideal) in self.ideals.iter().enumerate() {
            let name = if ideal.is_empty() { "∅".to_string() } else { poset.format_set(ideal.0) };
            let _ = writeln!(s, "  n{i} [label={}];", dot_id(&name));
        }
        for (i, j, _) in self.hasse_edges() {
            let _ = writeln!(s, "  n{i} -> n{j};");
        }
        s.push_str("}\n");
        s
    }
}

/// An interval `[lower, upper]` of `J(P)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lower: PosetIdeal,
    pub upper: PosetIdeal,
}

impl Interval {
    pub fn new(lower: PosetIdeal, upper: PosetIdeal) -> Result<Interval> {
        if !lower.is_subset(upper) {
            return Err(Error::Input("interval lower bound is not below the upper bound".into()));
        }
        Ok(Interval { lower, upper })
    }

    /// Lattice elements of the interval, in lattice order.
    pub fn elements(&self, lattice: &DistributiveLattice) -> Vec<PosetIdeal> {
        lattice
            .ideals()
            .iter()
            .copied()
            .filter(|k| self.lower.is_subset(*k) && k.is_subset(self.upper))
            .collect()
    }

    /// Rank `k` if the interval is isomorphic to the Boolean lattice `B_k`.
    ///
    /// Generic check from the lattice order alone: the atoms of the interval
    /// must induce an order isomorphism onto the subsets of the atoms.
    pub fn boolean_rank(&self, lattice: &DistributiveLattice) -> Option<usize> {
        let elems = self.elements(lattice);
        let strictly_above: Vec<PosetIdeal> = elems.iter().copied().filter(|k| *k != self.lower).collect();
        let atoms: Vec<PosetIdeal> = strictly_above
            .iter()
            .copied()
            .filter(|a| !strictly_above.iter().any(|b| b != a && b.is_subset(*a)))
            .collect();
        let k = atoms.len();
        if k >= 32 || elems.len() != 1usize << k {
            return None;
        }
        let code = |e: PosetIdeal| -> u32 {
            atoms
                .iter()
                .enumerate()
                .filter(|(_, a)| a.is_subset(e))
                .fold(0, |s, (i, _)| s | (1 << i))
        };
        let codes: Vec<u32> = elems.iter().map(|&e| code(e)).collect();
        let distinct: HashSet<u32> = codes.iter().copied().collect();
        if distinct.len() != elems.len() {
            return None;
        }
        for (a, &ca) in elems.iter().zip(&codes) {
            for (b, &cb) in elems.iter().zip(&codes) {
                if a.is_subset(*b) != (ca & !cb == 0) {
                    return None;
                }
            }
        }
        Some(k)
    }
}

/// Sperner number and maximal antichains of a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntichainStats {
    pub sperner: usize,
    pub maximal_antichains: Vec<ElemSet>,
}

/// `b_i` = number of intervals of `J(P)` isomorphic to `B_i`, computed as
/// `sum over I of C(|M(I)|, i)`. Trailing zeros are trimmed.
pub fn boolean_interval_counts(lattice: &DistributiveLattice, poset: &Poset) -> Vec<u64> {
    let mut counts: Vec<u64> = Vec::new();
    for ideal in lattice.ideals() {
        let m = poset.maximal_in(ideal.0).count_ones() as usize;
        if counts.len() <= m {
            counts.resize(m + 1, 0);
        }
        for (i, c) in counts.iter_mut().enumerate().take(m + 1) {
            *c += binomial(m as u64, i as u64);
        }
    }
    counts
}

/// `b_i` by testing every interval of the lattice for Boolean-ness.
pub fn boolean_interval_counts_exhaustive(lattice: &DistributiveLattice) -> Vec<u64> {
    let mut counts: Vec<u64> = Vec::new();
    for &lower in lattice.ideals() {
        for &upper in lattice.ideals() {
            if !lower.is_subset(upper) {
                continue;
            }
            if let Some(k) = (Interval { lower, upper }).boolean_rank(lattice) {
                if counts.len() <= k {
                    counts.resize(k + 1, 0);
                }
                counts[k] += 1;
            }
        }
    }
    counts
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
