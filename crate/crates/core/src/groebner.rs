//! The Rees ideal `W_P` of `H_P`: the block order lex-then-revlex, the
//! quadratic binomial candidate basis, and a Buchberger-criterion check.
//!
//! Monomials live in `K[x, y, z]` with one `z_I` per lattice element.
//! The order compares the `x, y` part lexicographically
//! (`x_1 > ... > x_n > y_1 > ... > y_n`) and breaks ties with graded
//! reverse lexicographic order on the `z` part, where `z_I > z_J` whenever
//! `J ⊊ I` (refined by canonical lattice index).

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{guard, Error, Result};
use crate::monomial::poset_variables;
use crate::poset::{bit, members, DistributiveLattice, Poset};

/// A monomial `x^a y^b z^c` of `K[x, y, z]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReesMonomial {
    /// Exponents of `x_0..x_{n-1}, y_0..y_{n-1}`.
    pub xy: Vec<u32>,
    /// Exponent of `z_I` for each lattice index `I`.
    pub z: Vec<u32>,
}

impl ReesMonomial {
    pub fn one(n: usize, lattice_len: usize) -> Self {
        ReesMonomial {
            xy: vec![0; 2 * n],
            z: vec![0; lattice_len],
        }
    }

    fn n(&self) -> usize {
        self.xy.len() / 2
    }

    pub fn x(n: usize, lattice_len: usize, p: usize) -> Self {
        let mut m = Self::one(n, lattice_len);
        m.xy[p] = 1;
        m
    }

    pub fn y(n: usize, lattice_len: usize, p: usize) -> Self {
        let mut m = Self::one(n, lattice_len);
        m.xy[n + p] = 1;
        m
    }

    pub fn z(n: usize, lattice_len: usize, ideal: usize) -> Self {
        let mut m = Self::one(n, lattice_len);
        m.z[ideal] = 1;
        m
    }

    pub fn same_universe(&self, other: &ReesMonomial) -> bool {
        self.xy.len() == other.xy.len() && self.z.len() == other.z.len()
    }

    pub fn mul(&self, other: &ReesMonomial) -> ReesMonomial {
        ReesMonomial {
            xy: self.xy.iter().zip(&other.xy).map(|(a, b)| a + b).collect(),
            z: self.z.iter().zip(&other.z).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &ReesMonomial) -> bool {
        self.xy.iter().zip(&other.xy).all(|(a, b)| a <= b) && self.z.iter().zip(&other.z).all(|(a, b)| a <= b)
    }

    /// `self / other`; `other` must divide `self`.
    pub fn div(&self, other: &ReesMonomial) -> ReesMonomial {
        ReesMonomial {
            xy: self.xy.iter().zip(&other.xy).map(|(a, b)| a - b).collect(),
            z: self.z.iter().zip(&other.z).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn lcm(&self, other: &ReesMonomial) -> ReesMonomial {
        ReesMonomial {
            xy: self.xy.iter().zip(&other.xy).map(|(a, b)| *a.max(b)).collect(),
            z: self.z.iter().zip(&other.z).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.xy.iter().sum::<u32>() + self.z_degree()
    }

    pub fn z_degree(&self) -> u32 {
        self.z.iter().sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.xy.iter().chain(&self.z).all(|&e| e <= 1)
    }

    /// Image under `x -> x`, `y -> y`, `z_I -> u_I t`: the `x, y` exponent
    /// vector and the power of `t`.
    pub fn phi(&self, poset: &Poset, lattice: &DistributiveLattice) -> (Vec<u32>, u32) {
        let n = self.n();
        let mut xy = self.xy.clone();
        for (i, &e) in self.z.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let ideal = lattice.ideal(i).0;
            for p in 0..n {
                if ideal & bit(p) != 0 {
                    xy[p] += e;
                } else {
                    xy[n + p] += e;
                }
            }
        }
        debug_assert_eq!(n, poset.len());
        (xy, self.z_degree())
    }
}

/// The monomial order `<_lex^#`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexSharpOrder {
    /// Elements from largest `x` variable to smallest.
    x_order: Vec<usize>,
    /// Lattice indices from smallest `z` variable to largest.
    z_order: Vec<usize>,
}

impl LexSharpOrder {
    /// `x` variables in input order; `z` variables by canonical lattice
    /// index, which refines inclusion.
    pub fn new(poset: &Poset, lattice: &DistributiveLattice) -> Self {
        LexSharpOrder {
            x_order: (0..poset.len()).collect(),
            z_order: (0..lattice.len()).collect(),
        }
    }

    /// `x` variables ranked by an explicit element order.
    pub fn with_element_order(order: Vec<usize>, lattice: &DistributiveLattice) -> Self {
        LexSharpOrder {
            x_order: order,
            z_order: (0..lattice.len()).collect(),
        }
    }

    pub fn compare(&self, a: &ReesMonomial, b: &ReesMonomial) -> Result<Ordering> {
        if !a.same_universe(b) || a.xy.len() != 2 * self.x_order.len() || a.z.len() != self.z_order.len() {
            return Err(Error::Input("monomials live in different rings".into()));
        }
        Ok(self.cmp(a, b))
    }

    fn cmp(&self, a: &ReesMonomial, b: &ReesMonomial) -> Ordering {
        let n = self.x_order.len();
        for offset in [0, n] {
            for &p in &self.x_order {
                match a.xy[offset + p].cmp(&b.xy[offset + p]) {
                    Ordering::Equal => {}
                    other => return other,
                }
            }
        }
        match a.z_degree().cmp(&b.z_degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        for &i in &self.z_order {
            match a.z[i].cmp(&b.z[i]) {
                Ordering::Equal => {}
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    }
}

/// A polynomial with integer coefficients, terms sorted by decreasing
/// monomial.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ReesPolynomial {
    terms: Vec<(ReesMonomial, i64)>,
}

impl ReesPolynomial {
    pub fn zero() -> Self {
        ReesPolynomial { terms: Vec::new() }
    }

    pub fn from_terms(terms: Vec<(ReesMonomial, i64)>, order: &LexSharpOrder) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c, order);
        }
        p
    }

    pub fn terms(&self) -> &[(ReesMonomial, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: ReesMonomial, c: i64, order: &LexSharpOrder) {
        if c == 0 {
            return;
        }
        match self.terms.binary_search_by(|(t, _)| order.cmp(&m, t)) {
            Ok(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1 == 0 {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (m, c)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BinomialKind {
    /// `z_I z_J - z_{I∧J} z_{I∨J}` for incomparable lattice indices.
    Hibi { i: usize, j: usize },
    /// `x_p z_I - y_p z_{I ∪ {p}}`.
    Exchange { ideal: usize, element: usize },
}

/// `lead - trail` with `lead` the larger term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binomial {
    pub lead: ReesMonomial,
    pub trail: ReesMonomial,
    pub kind: BinomialKind,
}

impl Binomial {
    fn oriented(a: ReesMonomial, b: ReesMonomial, kind: BinomialKind, order: &LexSharpOrder) -> Binomial {
        match order.cmp(&a, &b) {
            Ordering::Less => Binomial { lead: b, trail: a, kind },
            _ => Binomial { lead: a, trail: b, kind },
        }
    }

    pub fn to_polynomial(&self, order: &LexSharpOrder) -> ReesPolynomial {
        ReesPolynomial::from_terms(vec![(self.lead.clone(), 1), (self.trail.clone(), -1)], order)
    }
}

/// The candidate basis: one Hibi relation per unordered incomparable pair
/// of ideals and one exchange relation per `(I, p)` with `I ∪ {p}` an ideal.
pub fn expected_basis(poset: &Poset, lattice: &DistributiveLattice, order: &LexSharpOrder) -> Vec<Binomial> {
    let (n, len) = (poset.len(), lattice.len());
    let mut basis = Vec::new();
    for i in 0..len {
        for j in i + 1..len {
            if lattice.comparable(i, j) {
                continue;
            }
            let a = ReesMonomial::z(n, len, i).mul(&ReesMonomial::z(n, len, j));
            let b = ReesMonomial::z(n, len, lattice.meet(i, j)).mul(&ReesMonomial::z(n, len, lattice.join(i, j)));
            basis.push(Binomial::oriented(a, b, BinomialKind::Hibi { i, j }, order));
        }
    }
    for i in 0..len {
        let ideal = lattice.ideal(i).0;
        for p in members(poset.all() & !ideal) {
            if let Some(j) = lattice.index_of(ideal | bit(p)) {
                let a = ReesMonomial::x(n, len, p).mul(&ReesMonomial::z(n, len, i));
                let b = ReesMonomial::y(n, len, p).mul(&ReesMonomial::z(n, len, j));
                basis.push(Binomial::oriented(a, b, BinomialKind::Exchange { ideal: i, element: p }, order));
            }
        }
    }
    basis
}

/// Remainder of `f` on division by `basis`: terms are processed from the
/// largest down, each reduced by the first basis element whose lead
/// divides it.
pub fn normal_form(f: &ReesPolynomial, basis: &[Binomial], order: &LexSharpOrder) -> ReesPolynomial {
    let mut work = f.clone();
    let mut remainder = ReesPolynomial::zero();
    while let Some((m, c)) = work.terms.first().cloned() {
        match basis.iter().find(|g| g.lead.divides(&m)) {
            Some(g) => {
                let q = m.div(&g.lead);
                work.add_term(m, -c, order);
                work.add_term(q.mul(&g.trail), c, order);
            }
            None => {
                work.terms.remove(0);
                remainder.add_term(m, c, order);
            }
        }
    }
    remainder
}

pub fn s_polynomial(f: &Binomial, g: &Binomial, order: &LexSharpOrder) -> ReesPolynomial {
    let l = f.lead.lcm(&g.lead);
    ReesPolynomial::from_terms(
        vec![(l.div(&f.lead).mul(&f.trail), -1), (l.div(&g.lead).mul(&g.trail), 1)],
        order,
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroebnerReport {
    pub hibi_relations: usize,
    pub exchange_relations: usize,
    pub s_pairs: usize,
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
}

impl GroebnerReport {
    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_PHI: &str = "phi_membership";
pub const CHECK_S_PAIRS: &str = "s_pairs_reduce_to_zero";
pub const CHECK_LEADS: &str = "leads_quadratic_squarefree";
pub const CHECK_REDUCED: &str = "basis_reduced";
pub const CHECK_RANDOM: &str = "random_members_reduce_to_zero";

/// Runs all five checks on the candidate basis of `W_P`.
pub fn verify_groebner(poset: &Poset, trials: usize, seed: u64, max_z_vars: usize) -> Result<GroebnerReport> {
    let lattice = poset.enumerate_ideals(crate::poset::MAX_ELEMENTS)?;
    guard("number of z variables", lattice.len(), max_z_vars)?;
    let order = LexSharpOrder::new(poset, &lattice);
    let basis = expected_basis(poset, &lattice, &order);
    Ok(verify_basis(poset, &lattice, &order, &basis, trials, seed))
}

/// The five checks for an arbitrary list of binomials.
pub fn verify_basis(
    poset: &Poset,
    lattice: &DistributiveLattice,
    order: &LexSharpOrder,
    basis: &[Binomial],
    trials: usize,
    seed: u64,
) -> GroebnerReport {
    let names = RingNames::new(poset, lattice);
    let mut checks = Vec::new();

    let phi_bad = basis
        .iter()
        .find(|g| g.lead.phi(poset, lattice) != g.trail.phi(poset, lattice));
    checks.push(CheckOutcome {
        name: CHECK_PHI,
        passed: phi_bad.is_none(),
        witness: phi_bad.map(|g| names.binomial(g)),
    });

    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)))
        .collect();
    let s_bad = pairs
        .par_iter()
        .map(|&(i, j)| {
            let s = s_polynomial(&basis[i], &basis[j], order);
            (!normal_form(&s, basis, order).is_zero()).then_some((i, j))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    checks.push(CheckOutcome {
        name: CHECK_S_PAIRS,
        passed: s_bad.is_none(),
        witness: s_bad.map(|(i, j)| format!("S({}, {})", names.binomial(&basis[i]), names.binomial(&basis[j]))),
    });

    let lead_bad = basis.iter().find(|g| g.lead.degree() != 2 || !g.lead.is_squarefree());
    checks.push(CheckOutcome {
        name: CHECK_LEADS,
        passed: lead_bad.is_none(),
        witness: lead_bad.map(|g| names.binomial(g)),
    });

    let mut reduced_bad = None;
    'outer: for (i, g) in basis.iter().enumerate() {
        for (j, h) in basis.iter().enumerate() {
            if i != j && (g.lead.divides(&h.lead) || g.lead.divides(&h.trail)) {
                reduced_bad = Some((i, j));
                break 'outer;
            }
        }
    }
    checks.push(CheckOutcome {
        name: CHECK_REDUCED,
        passed: reduced_bad.is_none(),
        witness: reduced_bad.map(|(i, j)| {
            format!("lead of {} divides a term of {}", names.binomial(&basis[i]), names.binomial(&basis[j]))
        }),
    });

    let samples = random_members(poset, lattice, order, trials, seed);
    let random_bad = samples
        .par_iter()
        .map(|f| (!normal_form(f, basis, order).is_zero()).then(|| names.polynomial(f)))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    checks.push(CheckOutcome {
        name: CHECK_RANDOM,
        passed: random_bad.is_none(),
        witness: random_bad,
    });

    let count = |hibi: bool| {
        basis
            .iter()
            .filter(|g| matches!(g.kind, BinomialKind::Hibi { .. }) == hibi)
            .count()
    };
    GroebnerReport {
        hibi_relations: count(true),
        exchange_relations: count(false),
        s_pairs: pairs.len(),
        trials,
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

/// Random binomials of `W_P`: two `z`-monomials of equal degree, each
/// multiplied by the cofactor that brings its image up to the common lcm,
/// times a shared random squarefree `x, y` factor.
pub fn random_members(
    poset: &Poset,
    lattice: &DistributiveLattice,
    order: &LexSharpOrder,
    trials: usize,
    seed: u64,
) -> Vec<ReesPolynomial> {
    let (n, len) = (poset.len(), lattice.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let k = rng.gen_range(1..=3);
            let mut a = ReesMonomial::one(n, len);
            let mut b = ReesMonomial::one(n, len);
            for _ in 0..k {
                a.z[rng.gen_range(0..len)] += 1;
                b.z[rng.gen_range(0..len)] += 1;
            }
            let (ia, _) = a.phi(poset, lattice);
            let (ib, _) = b.phi(poset, lattice);
            let extra: Vec<u32> = (0..2 * n).map(|_| u32::from(rng.gen_bool(0.2))).collect();
            for v in 0..2 * n {
                let top = ia[v].max(ib[v]);
                a.xy[v] = top - ia[v] + extra[v];
                b.xy[v] = top - ib[v] + extra[v];
            }
            debug_assert_eq!(a.phi(poset, lattice), b.phi(poset, lattice));
            ReesPolynomial::from_terms(vec![(a, 1), (b, -1)], order)
        })
        .collect()
}

/// Human-readable names for `K[x, y, z]`.
pub struct RingNames {
    xy: Vec<String>,
    z: Vec<String>,
}

impl RingNames {
    pub fn new(poset: &Poset, lattice: &DistributiveLattice) -> Self {
        RingNames {
            xy: poset_variables(poset),
            z: lattice
                .ideals()
                .iter()
                .map(|i| format!("z{}", poset.format_set(i.0)))
                .collect(),
        }
    }

    pub fn monomial(&self, m: &ReesMonomial) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.xy.iter().chain(&self.z).zip(m.xy.iter().chain(&m.z)) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn binomial(&self, g: &Binomial) -> String {
        format!("{} - {}", self.monomial(&g.lead), self.monomial(&g.trail))
    }

    pub fn polynomial(&self, f: &ReesPolynomial) -> String {
        let mut s = String::new();
        for (i, (m, c)) in f.terms().iter().enumerate() {
            let sign = if *c < 0 { "-" } else if i > 0 { "+" } else { "" };
            let mag = c.unsigned_abs();
            let coeff = if mag == 1 { String::new() } else { format!("{mag}*") };
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&format!("{sign}{}{coeff}{}", if i > 0 { " " } else { "" }, self.monomial(m)));
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }
}
