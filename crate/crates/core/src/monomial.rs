//! Squarefree monomials, the ideal `H_P`, and linear quotients.
//!
//! For a poset with `n` elements the ambient ring has `2n` variables:
//! index `p` is `x_p` and index `n + p` is `y_p`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{full_set, members, DistributiveLattice, ElemSet, Poset};

/// A squarefree monomial as a bitmask over variable indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SquarefreeMonomial(pub u64);

impl SquarefreeMonomial {
    /// `x_A y_B` in the `2n`-variable ring of a poset.
    pub fn from_parts(x_support: ElemSet, y_support: ElemSet, n: usize) -> Self {
        SquarefreeMonomial(x_support | (y_support << n))
    }

    pub fn x_support(self, n: usize) -> ElemSet {
        self.0 & full_set(n)
    }

    pub fn y_support(self, n: usize) -> ElemSet {
        (self.0 >> n) & full_set(n)
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn divides(self, other: SquarefreeMonomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn lcm(self, other: SquarefreeMonomial) -> Self {
        SquarefreeMonomial(self.0 | other.0)
    }

    pub fn gcd(self, other: SquarefreeMonomial) -> Self {
        SquarefreeMonomial(self.0 & other.0)
    }

    /// `lcm(self, other) / other`.
    pub fn colon(self, other: SquarefreeMonomial) -> Self {
        SquarefreeMonomial(self.0 & !other.0)
    }

    pub fn variables(self) -> impl Iterator<Item = usize> {
        members(self.0)
    }
}

/// `u_I = prod_{p in I} x_p * prod_{p not in I} y_p`.
pub fn monomial_of_ideal(poset: &Poset, ideal: ElemSet) -> Result<SquarefreeMonomial> {
    poset.ideal(ideal)?;
    Ok(SquarefreeMonomial::from_parts(ideal, poset.all() & !ideal, poset.len()))
}

/// Variable names for the `2n`-variable ring of a poset.
///
/// Small posets with single-letter labels use the letters themselves for
/// the `x`s and `u, v, w, x` for the `y`s; otherwise `x_<label>`, `y_<label>`.
pub fn poset_variables(poset: &Poset) -> Vec<String> {
    const Y_LETTERS: [&str; 4] = ["u", "v", "w", "x"];
    let n = poset.len();
    let short = n <= 4
        && poset
            .labels()
            .iter()
            .all(|l| l.len() == 1 && l.chars().all(|c| c.is_ascii_alphabetic()))
        && poset.labels().iter().all(|l| !Y_LETTERS[..n].contains(&l.as_str()));
    if short {
        poset
            .labels()
            .iter()
            .cloned()
            .chain(Y_LETTERS[..n].iter().map(|s| s.to_string()))
            .collect()
    } else {
        poset
            .labels()
            .iter()
            .map(|l| format!("x_{l}"))
            .chain(poset.labels().iter().map(|l| format!("y_{l}")))
            .collect()
    }
}

/// A squarefree monomial ideal with a minimal generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    variables: Vec<String>,
    generators: Vec<SquarefreeMonomial>,
}

/// Serialized form: `{"variables":["x1","y1"],"generators":["x1*y1"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
}

impl MonomialIdeal {
    /// Builds an ideal, dropping duplicates and non-minimal generators.
    /// The order of the surviving generators is preserved.
    pub fn new(variables: Vec<String>, generators: Vec<SquarefreeMonomial>) -> Result<Self> {
        if variables.len() > 64 {
            return Err(Error::Input("at most 64 variables are supported".into()));
        }
        let universe = full_set(variables.len());
        if let Some(g) = generators.iter().find(|g| g.0 & !universe != 0) {
            return Err(Error::Input(format!("generator {:#x} uses undeclared variables", g.0)));
        }
        let mut kept: Vec<SquarefreeMonomial> = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            let redundant = generators.iter().enumerate().any(|(j, h)| {
                (h.divides(*g) && h != g) || (h == g && j < i)
            });
            if !redundant {
                kept.push(*g);
            }
        }
        Ok(MonomialIdeal {
            variables,
            generators: kept,
        })
    }

    pub fn parse<S: AsRef<str>>(variables: Vec<String>, generators: &[S]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| parse_monomial(g.as_ref(), &variables))
            .collect::<Result<Vec<_>>>()?;
        Self::new(variables, gens)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: IdealJson =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("ideal JSON: {e}")))?;
        Self::parse(raw.variables, &raw.generators)
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            variables: self.variables.clone(),
            generators: self.formatted(),
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Ideal membership of a squarefree monomial.
    pub fn contains(&self, m: SquarefreeMonomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn format(&self, m: SquarefreeMonomial) -> String {
        format_monomial(m, &self.variables)
    }

    pub fn formatted(&self) -> Vec<String> {
        self.generators.iter().map(|&g| self.format(g)).collect()
    }

    /// Generators as a sorted list, for order-insensitive comparison.
    pub fn sorted_generators(&self) -> Vec<SquarefreeMonomial> {
        let mut g = self.generators.clone();
        g.sort_unstable();
        g
    }
}

pub fn format_monomial(m: SquarefreeMonomial, variables: &[String]) -> String {
    if m.0 == 0 {
        return "1".into();
    }
    let names: Vec<&str> = m.variables().map(|v| variables[v].as_str()).collect();
    if variables.iter().all(|v| v.chars().count() == 1) {
        names.concat()
    } else {
        names.join("*")
    }
}

/// Parses `"x1*y2"`, `"x1^1*y2"` or, when every variable name is a single
/// character, `"bduw"`. Exponents above 1 are rejected.
pub fn parse_monomial(text: &str, variables: &[String]) -> Result<SquarefreeMonomial> {
    let text = text.trim();
    if text == "1" {
        return Ok(SquarefreeMonomial(0));
    }
    let single_chars = variables.iter().all(|v| v.chars().count() == 1);
    let tokens: Vec<String> = if text.contains('*') || !single_chars {
        text.split('*').map(|t| t.trim().to_string()).collect()
    } else {
        let mut toks: Vec<String> = Vec::new();
        for c in text.chars() {
            if c == '^' || c.is_ascii_digit() {
                match toks.last_mut() {
                    Some(t) => t.push(c),
                    None => return Err(Error::Input(format!("malformed monomial `{text}`"))),
                }
            } else {
                toks.push(c.to_string());
            }
        }
        toks
    };
    let mut bits = 0u64;
    for tok in tokens {
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => (
                n.trim(),
                e.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Input(format!("bad exponent in `{tok}`")))?,
            ),
            None => (tok.as_str(), 1),
        };
        let v = variables
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| Error::Input(format!("unknown variable `{name}` in `{text}`")))?;
        let total = exp + u32::from(bits & (1 << v) != 0);
        if total > 1 {
            return Err(Error::Input(format!("monomial `{text}` is not squarefree")));
        }
        if exp == 1 {
            bits |= 1 << v;
        }
    }
    Ok(SquarefreeMonomial(bits))
}

/// `H_P`, generated by `u_I` for every `I` in `J(P)`, in lattice order.
pub fn build_hp(poset: &Poset, lattice: &DistributiveLattice) -> MonomialIdeal {
    assert!(poset.len() <= 32, "H_P needs 2n <= 64 variables");
    let gens = lattice
        .ideals()
        .iter()
        .map(|i| SquarefreeMonomial::from_parts(i.0, poset.all() & !i.0, poset.len()))
        .collect();
    MonomialIdeal::new(poset_variables(poset), gens).expect("u_I use declared variables")
}

/// One step of a linear-quotients check: the colon of the earlier
/// generators by the `position`-th one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColonStep {
    pub position: usize,
    pub generator: String,
    pub colon_generators: Vec<String>,
    pub linear: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearQuotientsReport {
    pub success: bool,
    pub ordering: Vec<usize>,
    pub steps: Vec<ColonStep>,
    /// First step whose colon needs a generator of degree > 1.
    pub failed_at: Option<usize>,
}

/// Checks that `(u_1, ..., u_{k-1}) : u_k` is generated by variables for
/// each `k >= 2` in the given ordering of the generators.
pub fn verify_linear_quotients(ideal: &MonomialIdeal, ordering: &[usize]) -> Result<LinearQuotientsReport> {
    let g = ideal.len();
    let mut seen = vec![false; g];
    if ordering.len() != g || ordering.iter().any(|&i| i >= g || std::mem::replace(&mut seen[i], true)) {
        return Err(Error::Input("ordering is not a permutation of the generators".into()));
    }
    let gens = ideal.generators();
    let mut steps = Vec::new();
    let mut failed_at = None;
    for k in 1..g {
        let current = gens[ordering[k]];
        let quotients: Vec<SquarefreeMonomial> =
            ordering[..k].iter().map(|&j| gens[j].colon(current)).collect();
        let colon = MonomialIdeal::new(ideal.variables().to_vec(), quotients)?;
        let linear = colon.generators().iter().all(|m| m.degree() == 1);
        if !linear && failed_at.is_none() {
            failed_at = Some(k);
        }
        steps.push(ColonStep {
            position: k,
            generator: ideal.format(current),
            colon_generators: colon.formatted(),
            linear,
        });
    }
    Ok(LinearQuotientsReport {
        success: failed_at.is_none(),
        ordering: ordering.to_vec(),
        steps,
        failed_at,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Poset {
        Poset::new(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("b", "d")]).unwrap()
    }

    #[test]
    fn generators_of_the_worked_example() {
        let p = example();
        let l = p.enumerate_ideals(20).unwrap();
        let h = build_hp(&p, &l);
        assert_eq!(
            h.formatted(),
            ["uvwx", "avwx", "buwx", "abwx", "bduw", "abcx", "abdw", "abcd"]
        );
        assert_eq!(monomial_of_ideal(&p, 0).map(|m| h.format(m)).unwrap(), "uvwx");
        assert_eq!(monomial_of_ideal(&p, p.all()).map(|m| h.format(m)).unwrap(), "abcd");
        let bd = p.set_from_labels(&["b", "d"]).unwrap();
        assert_eq!(monomial_of_ideal(&p, bd).map(|m| h.format(m)).unwrap(), "bduw");
        let c = p.set_from_labels(&["c"]).unwrap();
        assert!(matches!(monomial_of_ideal(&p, c), Err(Error::InvalidIdeal(_))));
    }

    #[test]
    fn small_hp_ideals() {
        let single = Poset::new(&["p"], &[]).unwrap();
        let h = build_hp(&single, &single.enumerate_ideals(20).unwrap());
        assert_eq!(h.variables(), ["p", "u"]);
        assert_eq!(h.formatted(), ["u", "p"]);
        let long = Poset::new(&["p1"], &[]).unwrap();
        let h = build_hp(&long, &long.enumerate_ideals(20).unwrap());
        assert_eq!(h.formatted(), ["y_p1", "x_p1"]);
        let chain = Poset::new(&["1", "2"], &[("1", "2")]).unwrap();
        let h = build_hp(&chain, &chain.enumerate_ideals(20).unwrap());
        assert_eq!(h.formatted(), ["y_1*y_2", "x_1*y_2", "x_1*x_2"]);
    }

    #[test]
    fn parsing() {
        let vars: Vec<String> = ["a", "b", "u", "v"].iter().map(|s| s.to_string()).collect();
        assert_eq!(parse_monomial("bu", &vars).unwrap(), SquarefreeMonomial(0b0110));
        assert_eq!(parse_monomial("a*v", &vars).unwrap(), SquarefreeMonomial(0b1001));
        assert_eq!(parse_monomial("1", &vars).unwrap(), SquarefreeMonomial(0));
        assert!(parse_monomial("a^2", &vars).is_err());
        assert!(parse_monomial("aa", &vars).is_err());
        assert!(parse_monomial("z", &vars).is_err());
        let long: Vec<String> = ["x1", "y1"].iter().map(|s| s.to_string()).collect();
        assert_eq!(parse_monomial("x1*y1", &long).unwrap(), SquarefreeMonomial(0b11));
        assert_eq!(parse_monomial("x1^1", &long).unwrap(), SquarefreeMonomial(0b01));
    }

    #[test]
    fn constructor_minimalizes() {
        let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let i = MonomialIdeal::parse(vars, &["xy", "x", "yz", "x", "xyz"]).unwrap();
        assert_eq!(i.formatted(), ["x", "yz"]);
        assert!(i.contains(SquarefreeMonomial(0b011)));
        assert!(!i.contains(SquarefreeMonomial(0b010)));
    }

    #[test]
    fn linear_quotients_examples() {
        let vars: Vec<String> = ["x_p", "y_p"].iter().map(|s| s.to_string()).collect();
        let i = MonomialIdeal::parse(vars, &["x_p", "y_p"]).unwrap();
        let r = verify_linear_quotients(&i, &[0, 1]).unwrap();
        assert!(r.success);
        assert_eq!(r.steps[0].colon_generators, ["x_p"]);

        let vars: Vec<String> = ["x1", "x2", "y1", "y2"].iter().map(|s| s.to_string()).collect();
        let gap = MonomialIdeal::parse(vars, &["y1*y2", "x1*x2"]).unwrap();
        for ord in [[0, 1], [1, 0]] {
            let r = verify_linear_quotients(&gap, &ord).unwrap();
            assert!(!r.success);
            assert_eq!(r.failed_at, Some(1));
        }
        assert!(verify_linear_quotients(&gap, &[0, 0]).is_err());
    }

    #[test]
    fn worked_example_has_linear_quotients() {
        let p = example();
        let h = build_hp(&p, &p.enumerate_ideals(20).unwrap());
        let order: Vec<usize> = (0..h.len()).collect();
        assert!(verify_linear_quotients(&h, &order).unwrap().success);
    }
}
