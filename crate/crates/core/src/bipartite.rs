//! Bipartite graphs, vertex covers, and recognition of Cohen–Macaulay
//! bipartite graphs by recovering a poset from a perfect matching.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{guard, Error, Result};
use crate::monomial::{MonomialIdeal, SquarefreeMonomial};
use crate::poset::{members, Poset, PosetJson};
use crate::simplicial::{complex_from_ideal, SimplicialComplex};

/// Each side holds at most 32 vertices so that vertex sets fit in a `u64`.
pub const MAX_SIDE: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: Vec<String>,
    right: Vec<String>,
    /// `adjacency[i]` is the set of right neighbours of left vertex `i`.
    adjacency: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl BipartiteGraph {
    pub fn new(left: Vec<String>, right: Vec<String>, edges: &[(usize, usize)]) -> Result<BipartiteGraph> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::Input("both parts must be nonempty".into()));
        }
        if left.len() > MAX_SIDE || right.len() > MAX_SIDE {
            return Err(Error::Input(format!("each part holds at most {MAX_SIDE} vertices")));
        }
        let mut seen = HashSet::new();
        for v in left.iter().chain(&right) {
            if !seen.insert(v) {
                return Err(Error::Input(format!("duplicate vertex {v:?}")));
            }
        }
        let mut adjacency = vec![0u64; left.len()];
        for &(i, j) in edges {
            if i >= left.len() || j >= right.len() {
                return Err(Error::Input(format!("edge ({i}, {j}) out of range")));
            }
            adjacency[i] |= 1 << j;
        }
        let g = BipartiteGraph { left, right, adjacency };
        if let Some(v) = g.isolated_vertex() {
            return Err(Error::Input(format!("vertex {v:?} is isolated")));
        }
        Ok(g)
    }

    pub fn from_json(text: &str) -> Result<BipartiteGraph> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Input(format!("graph JSON: {e}")))?;
        let l: HashMap<&str, usize> = raw.left.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let r: HashMap<&str, usize> = raw.right.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut edges = Vec::new();
        for (a, b) in &raw.edges {
            let e = match (l.get(a.as_str()), r.get(b.as_str())) {
                (Some(&i), Some(&j)) => (i, j),
                _ => match (l.get(b.as_str()), r.get(a.as_str())) {
                    (Some(&i), Some(&j)) => (i, j),
                    _ => return Err(Error::Input(format!("edge ({a}, {b}) does not join the two parts"))),
                },
            };
            edges.push(e);
        }
        BipartiteGraph::new(raw.left, raw.right, &edges)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            left: self.left.clone(),
            right: self.right.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(i, j)| (self.left[i].clone(), self.right[j].clone()))
                .collect(),
        }
    }

    pub fn left(&self) -> &[String] {
        &self.left
    }

    pub fn right(&self) -> &[String] {
        &self.right
    }

    pub fn vertex_count(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i] & (1 << j) != 0
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.left.len())
            .flat_map(|i| members(self.adjacency[i]).map(move |j| (i, j)))
            .collect()
    }

    /// Right neighbours of a set of left vertices.
    pub fn neighbours(&self, left_set: u64) -> u64 {
        members(left_set).fold(0, |s, i| s | self.adjacency[i])
    }

    fn isolated_vertex(&self) -> Option<&str> {
        if let Some(i) = self.adjacency.iter().position(|&a| a == 0) {
            return Some(&self.left[i]);
        }
        let covered = self.neighbours((1u64 << self.left.len()) - 1);
        (0..self.right.len())
            .find(|&j| covered & (1 << j) == 0)
            .map(|j| self.right[j].as_str())
    }

    /// Every vertex has degree one.
    pub fn is_disjoint_union_of_edges(&self) -> bool {
        self.left.len() == self.right.len()
            && self.adjacency.iter().all(|a| a.count_ones() == 1)
            && self.neighbours((1u64 << self.left.len()) - 1).count_ones() as usize == self.right.len()
    }

    /// Vertices in the combined order `left ++ right`.
    pub fn vertex_labels(&self) -> Vec<String> {
        self.left.iter().chain(&self.right).cloned().collect()
    }

    pub fn format_vertices(&self, set: u64) -> Vec<String> {
        let labels = self.vertex_labels();
        members(set).map(|v| labels[v].clone()).collect()
    }

    /// `I(G)` in the variables `left ++ right`.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let l = self.left.len();
        let gens = self
            .edges()
            .into_iter()
            .map(|(i, j)| SquarefreeMonomial((1 << i) | (1 << (l + j))))
            .collect();
        MonomialIdeal::new(self.vertex_labels(), gens).expect("at most 64 vertices")
    }

    pub fn independence_complex(&self) -> Result<SimplicialComplex> {
        complex_from_ideal(&self.edge_ideal())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n  rankdir=LR;\n");
        for side in [&self.left, &self.right] {
            out.push_str("  { rank=same;");
            for v in side {
                let _ = write!(out, " {};", crate::poset::dot_id(v));
            }
            out.push_str(" }\n");
        }
        for (i, j) in self.edges() {
            let _ = writeln!(
                out,
                "  {} -- {};",
                crate::poset::dot_id(&self.left[i]),
                crate::poset::dot_id(&self.right[j])
            );
        }
        out.push_str("}\n");
        out
    }
}

/// `G(P)`: edges `{x_i, y_j}` for `p_i <= p_j`.
pub fn graph_of_poset(poset: &Poset) -> BipartiteGraph {
    let n = poset.len();
    let left = poset.labels().iter().map(|l| format!("x_{l}")).collect();
    let right = poset.labels().iter().map(|l| format!("y_{l}")).collect();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| poset.leq(i, j))
        .collect();
    BipartiteGraph::new(left, right, &edges).expect("reflexivity leaves no vertex isolated")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    /// Minimal vertex covers as label lists, vertices in `left ++ right` order.
    pub minimal_covers: Vec<Vec<String>>,
    pub sizes: Vec<usize>,
    pub unmixed: bool,
}

/// All minimal vertex covers.
///
/// A minimal cover `C` is determined by `A = C ∩ W`: it must contain every
/// neighbour of `W ∖ A`, and nothing more on the right. So it suffices to
/// run over subsets of the left side and keep the minimal results.
pub fn minimal_vertex_covers(graph: &BipartiteGraph, max_vertices: usize) -> Result<Vec<u64>> {
    guard("graph vertices", graph.vertex_count(), max_vertices)?;
    let l = graph.left.len();
    let all_left = (1u64 << l) - 1;
    let edges = graph.edges();
    let is_cover = |c: u64| edges.iter().all(|&(i, j)| c & (1 << i) != 0 || c & (1 << (l + j)) != 0);
    let mut covers = BTreeSet::new();
    for a in 0..=all_left {
        let c = a | (graph.neighbours(all_left & !a) << l);
        if members(c).all(|v| !is_cover(c & !(1 << v))) {
            covers.insert(c);
        }
    }
    let mut out: Vec<u64> = covers.into_iter().collect();
    out.sort_by_cached_key(|&c| (c.count_ones(), members(c).collect::<Vec<_>>()));
    Ok(out)
}

pub fn cover_analysis(graph: &BipartiteGraph, max_vertices: usize) -> Result<CoverReport> {
    let covers = minimal_vertex_covers(graph, max_vertices)?;
    let sizes: Vec<usize> = covers.iter().map(|c| c.count_ones() as usize).collect();
    Ok(CoverReport {
        unmixed: sizes.windows(2).all(|w| w[0] == w[1]),
        minimal_covers: covers.iter().map(|&c| graph.format_vertices(c)).collect(),
        sizes,
    })
}

/// A set `U ⊆ W` with `|N(U)| < |U|`, if any.
pub fn hall_violation(graph: &BipartiteGraph) -> Option<u64> {
    (1u64..1 << graph.left.len()).find(|&u| graph.neighbours(u).count_ones() < u.count_ones())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Cm,
    NotCm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FailureWitness {
    UnequalParts { left: usize, right: usize },
    NoPerfectMatching { hall_violator: Vec<String> },
    /// `p_i <= p_k` and `p_k <= p_i` with `i != k`.
    Antisymmetry { elements: (usize, usize), edges: [(String, String); 2] },
    /// `p_i <= p_j <= p_k` but not `p_i <= p_k`.
    Transitivity {
        elements: (usize, usize, usize),
        edges: [(String, String); 2],
        missing: (String, String),
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionResult {
    pub verdict: Verdict,
    pub poset: Option<Poset>,
    /// The certifying matching when CM; otherwise the last matching tried.
    pub matching: Option<Vec<(String, String)>>,
    pub failure_witness: Option<FailureWitness>,
    pub matchings_tried: u64,
    /// Whether the lexicographically first perfect matching already
    /// yielded a partial order. `None` when there is no perfect matching.
    pub first_matching_succeeded: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecognitionJson {
    pub verdict: Verdict,
    pub poset: Option<PosetJson>,
    pub matching: Option<Vec<(String, String)>>,
    pub failure_witness: Option<FailureWitness>,
    pub matchings_exhausted: bool,
    pub matchings_tried: u64,
    pub first_matching_succeeded: Option<bool>,
}

impl RecognitionResult {
    pub fn to_json(&self) -> RecognitionJson {
        RecognitionJson {
            verdict: self.verdict,
            poset: self.poset.as_ref().map(Poset::to_json),
            matching: self.matching.clone(),
            failure_witness: self.failure_witness.clone(),
            matchings_exhausted: self.verdict == Verdict::NotCm,
            matchings_tried: self.matchings_tried,
            first_matching_succeeded: self.first_matching_succeeded,
        }
    }
}

/// Element name for a matched pair `(x…, y…)`: the shared suffix when the
/// labels differ only in their leading `x`/`y`, else `left/right`.
fn pair_label(left: &str, right: &str) -> String {
    match (left.strip_prefix('x'), right.strip_prefix('y')) {
        (Some(a), Some(b)) if a == b && !a.is_empty() => {
            let trimmed = a.trim_start_matches('_');
            if trimmed.is_empty() { a } else { trimmed }.to_string()
        }
        _ => format!("{left}/{right}"),
    }
}

/// Checks the relation `p_i <= p_k iff {x_i, y_{m(k)}} ∈ E` for a perfect
/// matching `m` given as `m[i]` = right partner of left vertex `i`.
fn relation_witness(graph: &BipartiteGraph, m: &[usize]) -> Option<FailureWitness> {
    let n = m.len();
    let leq = |i: usize, k: usize| graph.has_edge(i, m[k]);
    let edge = |i: usize, k: usize| (graph.left[i].clone(), graph.right[m[k]].clone());
    for i in 0..n {
        for k in i + 1..n {
            if leq(i, k) && leq(k, i) {
                return Some(FailureWitness::Antisymmetry {
                    elements: (i, k),
                    edges: [edge(i, k), edge(k, i)],
                });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j || !leq(i, j) {
                continue;
            }
            for k in 0..n {
                if k != j && k != i && leq(j, k) && !leq(i, k) {
                    return Some(FailureWitness::Transitivity {
                        elements: (i, j, k),
                        edges: [edge(i, j), edge(j, k)],
                        missing: edge(i, k),
                    });
                }
            }
        }
    }
    None
}

/// Decides whether `G` is Cohen–Macaulay. Equal parts are necessary; then
/// perfect matchings are enumerated in lexicographic order and the first
/// one whose induced relation is a partial order certifies CM.
pub fn recognize_cm(graph: &BipartiteGraph, max_matchings: u64) -> Result<RecognitionResult> {
    let n = graph.left.len();
    if n != graph.right.len() {
        return Ok(RecognitionResult {
            verdict: Verdict::NotCm,
            poset: None,
            matching: None,
            failure_witness: Some(FailureWitness::UnequalParts {
                left: n,
                right: graph.right.len(),
            }),
            matchings_tried: 0,
            first_matching_succeeded: None,
        });
    }
    if let Some(u) = hall_violation(graph) {
        return Ok(RecognitionResult {
            verdict: Verdict::NotCm,
            poset: None,
            matching: None,
            failure_witness: Some(FailureWitness::NoPerfectMatching {
                hall_violator: members(u).map(|i| graph.left[i].clone()).collect(),
            }),
            matchings_tried: 0,
            first_matching_succeeded: None,
        });
    }

    struct Search<'a> {
        graph: &'a BipartiteGraph,
        current: Vec<usize>,
        tried: u64,
        limit: u64,
        last_witness: Option<(Vec<usize>, FailureWitness)>,
        found: Option<Vec<usize>>,
    }

    impl Search<'_> {
        fn run(&mut self, used: u64) -> Result<()> {
            let i = self.current.len();
            if i == self.graph.left.len() {
                self.tried += 1;
                if self.tried > self.limit {
                    return Err(Error::Resource {
                        what: "perfect matchings",
                        actual: self.tried,
                        limit: self.limit,
                    });
                }
                match relation_witness(self.graph, &self.current) {
                    None => self.found = Some(self.current.clone()),
                    Some(w) => self.last_witness = Some((self.current.clone(), w)),
                }
                return Ok(());
            }
            for j in members(self.graph.adjacency[i] & !used) {
                self.current.push(j);
                self.run(used | (1 << j))?;
                self.current.pop();
                if self.found.is_some() {
                    break;
                }
            }
            Ok(())
        }
    }

    let mut search = Search {
        graph,
        current: Vec::with_capacity(n),
        tried: 0,
        limit: max_matchings,
        last_witness: None,
        found: None,
    };
    search.run(0)?;
    let pairs = |m: &[usize]| -> Vec<(String, String)> {
        m.iter()
            .enumerate()
            .map(|(i, &j)| (graph.left[i].clone(), graph.right[j].clone()))
            .collect()
    };
    if let Some(m) = search.found {
        let labels: Vec<String> = (0..n).map(|i| pair_label(&graph.left[i], &graph.right[m[i]])).collect();
        let poset = Poset::from_relation(labels, |i, k| graph.has_edge(i, m[k]))?;
        return Ok(RecognitionResult {
            verdict: Verdict::Cm,
            poset: Some(poset),
            matching: Some(pairs(&m)),
            failure_witness: None,
            matchings_tried: search.tried,
            first_matching_succeeded: Some(search.tried == 1),
        });
    }
    let (m, witness) = search.last_witness.expect("a perfect matching exists");
    Ok(RecognitionResult {
        verdict: Verdict::NotCm,
        poset: None,
        matching: Some(pairs(&m)),
        failure_witness: Some(witness),
        matchings_tried: search.tried,
        first_matching_succeeded: Some(false),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinReport {
    pub gorenstein: bool,
    pub cm_type: usize,
    pub poset_is_antichain: bool,
    pub disjoint_union_of_edges: bool,
    /// The three characterizations agree.
    pub consistent: bool,
}

/// CM type = number of maximal antichains of the recovered poset.
pub fn gorenstein_and_type(
    graph: &BipartiteGraph,
    result: &RecognitionResult,
    max_elements: usize,
) -> Result<GorensteinReport> {
    let poset = match (&result.verdict, &result.poset) {
        (Verdict::Cm, Some(p)) => p,
        _ => return Err(Error::Usage("Gorenstein test needs a Cohen-Macaulay recognition result".into())),
    };
    let cm_type = poset.antichain_stats(max_elements)?.maximal_antichains.len();
    let antichain = poset.is_antichain(poset.all());
    let disjoint = graph.is_disjoint_union_of_edges();
    Ok(GorensteinReport {
        gorenstein: cm_type == 1,
        cm_type,
        poset_is_antichain: antichain,
        disjoint_union_of_edges: disjoint,
        consistent: (cm_type == 1) == antichain && antichain == disjoint,
    })
}

fn side_labels(prefix: char, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Uniform random bipartite graph with edge probability `density`,
/// resampled until no vertex is isolated. Vertices are `x1..` and `y1..`.
pub fn random_bipartite<R: Rng>(left: usize, right: usize, density: f64, rng: &mut R) -> BipartiteGraph {
    loop {
        let edges: Vec<(usize, usize)> = (0..left)
            .flat_map(|i| (0..right).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(density))
            .collect();
        if let Ok(g) = BipartiteGraph::new(side_labels('x', left), side_labels('y', right), &edges) {
            return g;
        }
    }
}

/// Every bipartite graph on fixed parts of the given sizes without
/// isolated vertices.
pub fn all_bipartite_graphs(left: usize, right: usize) -> Vec<BipartiteGraph> {
    let slots: Vec<(usize, usize)> = (0..left).flat_map(|i| (0..right).map(move |j| (i, j))).collect();
    (0u64..1 << slots.len())
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = members(mask).map(|k| slots[k]).collect();
            BipartiteGraph::new(side_labels('x', left), side_labels('y', right), &edges).ok()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::is_isomorphic;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn graph(l: usize, r: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(side_labels('x', l), side_labels('y', r), edges).unwrap()
    }

    fn example() -> Poset {
        Poset::new(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("b", "d")]).unwrap()
    }

    #[test]
    fn graphs_of_posets() {
        let chain = Poset::new(&["p1", "p2"], &[("p1", "p2")]).unwrap();
        let g = graph_of_poset(&chain);
        assert_eq!(g.edges(), vec![(0, 0), (0, 1), (1, 1)]);
        let anti = Poset::new(&["p", "q", "r"], &[] as &[(&str, &str)]).unwrap();
        assert!(graph_of_poset(&anti).is_disjoint_union_of_edges());
        assert_eq!(graph_of_poset(&example()).edges().len(), 7);
    }

    #[test]
    fn isolated_vertices_are_rejected() {
        assert!(BipartiteGraph::new(side_labels('x', 2), side_labels('y', 1), &[(0, 0)]).is_err());
        assert!(BipartiteGraph::from_json(r#"{"left":["x1"],"right":["y1"],"edges":[["x1","y1"]]}"#).is_ok());
        assert!(BipartiteGraph::from_json(r#"{"left":["x1"],"right":["y1"],"edges":[["x1","x1"]]}"#).is_err());
    }

    #[test]
    fn covers() {
        let k22 = graph(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        let r = cover_analysis(&k22, 24).unwrap();
        assert_eq!(r.minimal_covers, vec![vec!["x1", "x2"], vec!["y1", "y2"]]);
        assert!(r.unmixed);
        let edge = graph(1, 1, &[(0, 0)]);
        assert_eq!(cover_analysis(&edge, 24).unwrap().minimal_covers, vec![vec!["x1"], vec!["y1"]]);
        let path = graph(1, 2, &[(0, 0), (0, 1)]);
        let r = cover_analysis(&path, 24).unwrap();
        assert_eq!(r.minimal_covers, vec![vec!["x1"], vec!["y1", "y2"]]);
        assert!(!r.unmixed);
        assert!(cover_analysis(&path, 2).is_err());
    }

    #[test]
    fn one_side_cover_enumeration_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_bipartite(rng.gen_range(1..5), rng.gen_range(1..5), 0.5, &mut rng);
            let v = g.vertex_count();
            let l = g.left.len();
            let is_cover = |c: u64| g.edges().iter().all(|&(i, j)| c & (1 << i) != 0 || c & (1 << (l + j)) != 0);
            let mut brute: Vec<u64> = (0u64..1 << v)
                .filter(|&c| is_cover(c) && members(c).all(|x| !is_cover(c & !(1 << x))))
                .collect();
            let mut fast = minimal_vertex_covers(&g, 24).unwrap();
            brute.sort_unstable();
            fast.sort_unstable();
            assert_eq!(brute, fast);
        }
    }

    #[test]
    fn recognition_examples() {
        let k22 = graph(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        let r = recognize_cm(&k22, 100_000).unwrap();
        assert_eq!(r.verdict, Verdict::NotCm);
        assert!(matches!(r.failure_witness, Some(FailureWitness::Antisymmetry { .. })));
        assert_eq!(r.matchings_tried, 2);

        let three = graph(3, 3, &[(0, 0), (1, 1), (2, 2)]);
        let r = recognize_cm(&three, 100_000).unwrap();
        assert_eq!(r.verdict, Verdict::Cm);
        let p = r.poset.as_ref().unwrap();
        assert!(p.is_antichain(p.all()));
        let gor = gorenstein_and_type(&three, &r, 20).unwrap();
        assert!(gor.gorenstein && gor.consistent);
        assert_eq!(gor.cm_type, 1);

        let path = graph(1, 2, &[(0, 0), (0, 1)]);
        let r = recognize_cm(&path, 100_000).unwrap();
        assert!(matches!(r.failure_witness, Some(FailureWitness::UnequalParts { left: 1, right: 2 })));
        assert!(matches!(gorenstein_and_type(&path, &r, 20), Err(Error::Usage(_))));
    }

    #[test]
    fn shuffled_example_round_trip() {
        let p = example();
        let g = graph_of_poset(&p);
        let json = g.to_json();
        // reverse the right side and reorder the edges
        let shuffled = GraphJson {
            left: vec!["x_d", "x_b", "x_a", "x_c"].into_iter().map(String::from).collect(),
            right: json.right.iter().rev().cloned().collect(),
            edges: json.edges.iter().rev().cloned().collect(),
        };
        let h = BipartiteGraph::from_json(&serde_json::to_string(&shuffled).unwrap()).unwrap();
        let r = recognize_cm(&h, 100_000).unwrap();
        assert_eq!(r.verdict, Verdict::Cm);
        let q = r.poset.as_ref().unwrap();
        assert!(is_isomorphic(&p, q));
        assert_eq!(q.labels(), &["d", "b", "a", "c"]);
        let gor = gorenstein_and_type(&h, &r, 20).unwrap();
        assert_eq!(gor.cm_type, 3);
        assert!(!gor.gorenstein && gor.consistent);
    }

    #[test]
    fn chain_of_three_has_type_three() {
        let c = Poset::new(&["1", "2", "3"], &[("1", "2"), ("2", "3")]).unwrap();
        let g = graph_of_poset(&c);
        let r = recognize_cm(&g, 100_000).unwrap();
        let gor = gorenstein_and_type(&g, &r, 20).unwrap();
        assert_eq!(gor.cm_type, 3);
        assert!(!gor.gorenstein);
    }

    #[test]
    fn matching_guard() {
        let k33 = graph(3, 3, &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]);
        assert!(matches!(recognize_cm(&k33, 2), Err(Error::Resource { .. })));
    }

    #[test]
    fn dot_has_ranks() {
        let g = graph(1, 1, &[(0, 0)]);
        let dot = g.to_dot();
        assert!(dot.contains("rank=same"));
        assert!(dot.contains("\"x1\" -- \"y1\""));
    }

    #[test]
    fn enumerated_graphs() {
        // 2x2: 16 edge subsets, 7 without isolated vertices
        assert_eq!(all_bipartite_graphs(2, 2).len(), 7);
        assert_eq!(all_bipartite_graphs(1, 1).len(), 1);
    }
}
