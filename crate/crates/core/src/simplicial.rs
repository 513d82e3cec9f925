//! Simplicial complexes on at most 64 vertices, Stanley–Reisner ideals,
//! Alexander duality and a Reisner-criterion Cohen–Macaulay test.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{guard, Error, Result};
use crate::linalg::SparseMatrix;
use crate::monomial::{MonomialIdeal, SquarefreeMonomial};
use crate::poset::{bit, members, Poset};
use crate::resolution::field_name;
use crate::scalar::Scalar;

pub type VertexSet = u64;

/// A complex given by its facets. Vertices that lie in no facet are allowed
/// (they are nonfaces, as for a Stanley–Reisner ideal with linear
/// generators). An empty facet list is the void complex; `[∅]` is the
/// complex whose only face is the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

fn maximalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable();
    sets.dedup();
    let keep: Vec<VertexSet> = sets
        .iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && s & !t == 0))
        .collect();
    let mut keep = keep;
    keep.sort_by_cached_key(|&s| (std::cmp::Reverse(s.count_ones()), members(s).collect::<Vec<_>>()));
    keep
}

impl SimplicialComplex {
    pub fn new(vertices: Vec<String>, facets: Vec<VertexSet>) -> Result<SimplicialComplex> {
        if vertices.len() > 64 {
            return Err(Error::Input(format!("{} vertices exceed the limit of 64", vertices.len())));
        }
        let mut seen = std::collections::HashSet::new();
        for v in &vertices {
            if !seen.insert(v) {
                return Err(Error::Input(format!("duplicate vertex {v:?}")));
            }
        }
        let all = full(vertices.len());
        if let Some(f) = facets.iter().find(|&&f| f & !all != 0) {
            return Err(Error::Input(format!("facet {f:#x} uses an unknown vertex")));
        }
        Ok(SimplicialComplex {
            vertices,
            facets: maximalize(facets),
        })
    }

    pub fn from_json(text: &str) -> Result<SimplicialComplex> {
        let parsed: ComplexJson = serde_json::from_str(text).map_err(|e| Error::Input(format!("complex JSON: {e}")))?;
        let index: HashMap<&str, usize> = parsed.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut facets = Vec::new();
        for f in &parsed.facets {
            let mut set = 0;
            for v in f {
                let i = index.get(v.as_str()).ok_or_else(|| Error::Input(format!("unknown vertex {v:?} in facet")))?;
                set |= 1 << i;
            }
            facets.push(set);
        }
        SimplicialComplex::new(parsed.vertices, facets)
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            vertices: self.vertices.clone(),
            facets: self.facets.iter().map(|&f| self.labels_of(f)).collect(),
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn labels_of(&self, set: VertexSet) -> Vec<String> {
        members(set).map(|v| self.vertices[v].clone()).collect()
    }

    pub fn format_set(&self, set: VertexSet) -> String {
        format!("{{{}}}", self.labels_of(set).join(","))
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `max |F| - 1`; `-1` for `{∅}` and `-2` for the void complex.
    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.count_ones() as i64 - 1).max().unwrap_or(-2)
    }

    pub fn is_face(&self, set: VertexSet) -> bool {
        self.facets.iter().any(|&f| set & !f == 0)
    }

    /// All faces, sorted by size then bitmask.
    pub fn faces(&self) -> Vec<VertexSet> {
        faces_of(&self.facets)
    }

    pub fn minimal_nonfaces(&self) -> Result<Vec<VertexSet>> {
        guard("complex vertices for nonface enumeration", self.vertices.len(), 24)?;
        let mut out: Vec<VertexSet> = (0..1u64 << self.vertices.len())
            .filter(|&s| !self.is_face(s) && members(s).all(|v| self.is_face(s & !(1 << v))))
            .collect();
        out.sort_by_key(|&s| (s.count_ones(), s));
        Ok(out)
    }

    pub fn stanley_reisner_ideal(&self) -> Result<MonomialIdeal> {
        let gens = self.minimal_nonfaces()?.into_iter().map(SquarefreeMonomial).collect();
        MonomialIdeal::new(self.vertices.clone(), gens)
    }

    /// `Δ^∨ = {V ∖ F : F ∉ Δ}`; its facets are complements of minimal nonfaces.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        let all = full(self.vertices.len());
        let facets = self.minimal_nonfaces()?.into_iter().map(|n| all & !n).collect();
        SimplicialComplex::new(self.vertices.clone(), facets)
    }

    pub fn link(&self, face: VertexSet) -> Vec<VertexSet> {
        maximalize(
            self.facets
                .iter()
                .filter(|&&f| face & !f == 0)
                .map(|&f| f & !face)
                .collect(),
        )
    }
}

fn full(n: usize) -> VertexSet {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn faces_of(facets: &[VertexSet]) -> Vec<VertexSet> {
    let mut faces = Vec::new();
    for &f in facets {
        // enumerate submasks of f
        let mut s = f;
        loop {
            faces.push(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    faces.sort_by_key(|&s| (s.count_ones(), s));
    faces.dedup();
    faces
}

/// Faces are the subsets of the vertex set supporting no generator.
pub fn complex_from_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let v = ideal.variables().len();
    guard("complex vertices for face enumeration", v, 24)?;
    let gens = ideal.generators();
    let is_face = |s: u64| gens.iter().all(|g| g.0 & !s != 0);
    let facets: Vec<VertexSet> = (0..1u64 << v)
        .filter(|&s| is_face(s) && (0..v).all(|x| s & (1 << x) != 0 || !is_face(s | (1 << x))))
        .collect();
    SimplicialComplex::new(ideal.variables().to_vec(), facets)
}

/// Reduced homology of the complex with the given face list (downward
/// closed). Entry `k + 1` is `dim H̃_k`, for `k = -1 ..= dim`.
pub fn reduced_homology<F: Scalar>(faces: &[VertexSet]) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    // rank of ∂ from size k to size k - 1
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let index: HashMap<VertexSet, usize> = by_size[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m: SparseMatrix<F> = SparseMatrix::new(by_size[k - 1].len());
        for &f in &by_size[k] {
            m.push_int_column(
                members(f)
                    .enumerate()
                    .map(|(t, v)| (index[&(f & !(1 << v))], if t % 2 == 0 { 1 } else { -1 })),
            );
        }
        ranks[k] = m.rank();
    }
    (0..=top)
        .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    pub field: String,
    pub links_checked: usize,
    /// A face whose link has homology below its top dimension.
    pub witness: Option<String>,
}

/// Reisner's criterion: `Δ` is Cohen–Macaulay over the field iff every link
/// `lk σ` (including `lk ∅ = Δ`) has `H̃_k = 0` for `k < dim lk σ`.
pub fn reisner_cm_check<F: Scalar>(complex: &SimplicialComplex, max_vertices: usize) -> Result<CmVerdict> {
    guard("complex vertices", complex.vertices.len(), max_vertices)?;
    let faces = complex.faces();
    let bad: Vec<Option<(VertexSet, usize)>> = faces
        .par_iter()
        .map(|&sigma| {
            let link = complex.link(sigma);
            let homology = reduced_homology::<F>(&faces_of(&link));
            let top = homology.len().saturating_sub(1);
            homology[..top].iter().position(|&h| h > 0).map(|k| (sigma, k))
        })
        .collect();
    let witness = bad.into_iter().flatten().next().map(|(sigma, k)| {
        format!(
            "link of {} has reduced homology in degree {}",
            complex.format_set(sigma),
            k as i64 - 1
        )
    });
    Ok(CmVerdict {
        cohen_macaulay: witness.is_none(),
        field: field_name::<F>(),
        links_checked: faces.len(),
        witness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PureStrong {
    pub pure: bool,
    pub strongly_connected: bool,
}

/// Facets are adjacent when they share a face of codimension one in both.
pub fn pure_strong_check(complex: &SimplicialComplex) -> PureStrong {
    let facets = &complex.facets;
    let pure = facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones());
    let mut reached = vec![false; facets.len()];
    let mut stack = Vec::new();
    if !facets.is_empty() {
        reached[0] = true;
        stack.push(0);
    }
    while let Some(i) = stack.pop() {
        for j in 0..facets.len() {
            let (a, b) = (facets[i], facets[j]);
            let adjacent = a.count_ones() == b.count_ones() && (a & b).count_ones() + 1 == a.count_ones();
            if !reached[j] && adjacent {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    PureStrong {
        pure,
        strongly_connected: reached.iter().all(|&r| r),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetDuality {
    /// `Δ_P`, the complex whose Stanley–Reisner ideal is `H_P`.
    pub complex: SimplicialComplex,
    pub dual: SimplicialComplex,
    /// Stanley–Reisner ideal of the dual.
    pub dual_ideal: MonomialIdeal,
    /// `{x_i y_j : p_i <= p_j}`.
    pub expected: MonomialIdeal,
    pub matches: bool,
}

/// `Δ_P`, its Alexander dual, and the comparison of the dual's
/// Stanley–Reisner ideal with the ideal of the comparability pairs.
pub fn poset_duality(poset: &Poset, hp: &MonomialIdeal) -> Result<PosetDuality> {
    let n = poset.len();
    let complex = complex_from_ideal(hp)?;
    if complex.stanley_reisner_ideal()?.sorted_generators() != hp.sorted_generators() {
        return Err(Error::Consistency("Stanley-Reisner ideal of the complex differs from H_P".into()));
    }
    let dual = complex.alexander_dual()?;
    let dual_ideal = dual.stanley_reisner_ideal()?;
    let pairs = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| poset.leq(i, j))
        .map(|(i, j)| SquarefreeMonomial::from_parts(bit(i), bit(j), n))
        .collect();
    let expected = MonomialIdeal::new(hp.variables().to_vec(), pairs)?;
    let matches = dual_ideal.sorted_generators() == expected.sorted_generators();
    Ok(PosetDuality {
        complex,
        dual,
        dual_ideal,
        expected,
        matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, F2, F3};

    fn complex(vertices: &[&str], facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(
            vertices.iter().map(|s| s.to_string()).collect(),
            facets.iter().map(|f| f.iter().fold(0, |s, &v| s | 1 << v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn complexes_from_small_ideals() {
        let i = MonomialIdeal::parse(vec!["x_p".into(), "y_p".into()], &["x_p", "y_p"]).unwrap();
        let c = complex_from_ideal(&i).unwrap();
        assert_eq!(c.facets(), &[0]);
        assert_eq!(c.dimension(), -1);

        let e = MonomialIdeal::parse(vec!["x1".into(), "y1".into()], &["x1*y1"]).unwrap();
        let c = complex_from_ideal(&e).unwrap();
        assert_eq!(c.facets(), &[0b01, 0b10]);
        assert_eq!(c.stanley_reisner_ideal().unwrap().formatted(), vec!["x1*y1"]);
    }

    #[test]
    fn homology_of_small_spaces() {
        // circle: boundary of a triangle
        let circle = complex(&["a", "b", "c"], &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(reduced_homology::<Rational>(&circle.faces()), vec![0, 0, 1]);
        let two_points = complex(&["a", "b"], &[&[0], &[1]]);
        assert_eq!(reduced_homology::<Rational>(&two_points.faces()), vec![0, 1]);
        let empty_face = complex(&["a"], &[&[]]);
        assert_eq!(reduced_homology::<Rational>(&empty_face.faces()), vec![1]);
        // real projective plane: torsion only shows up in characteristic 2
        let rp2: &[&[usize]] = &[
            &[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 4, 5], &[0, 5, 1],
            &[1, 2, 4], &[2, 3, 5], &[3, 4, 1], &[4, 5, 2], &[5, 1, 3],
        ];
        let rp2 = complex(&["0", "1", "2", "3", "4", "5"], rp2);
        assert_eq!(reduced_homology::<Rational>(&rp2.faces()), vec![0, 0, 0, 0]);
        assert_eq!(reduced_homology::<F2>(&rp2.faces()), vec![0, 0, 1, 1]);
        assert!(reisner_cm_check::<Rational>(&rp2, 16).unwrap().cohen_macaulay);
        assert!(!reisner_cm_check::<F2>(&rp2, 16).unwrap().cohen_macaulay);
        assert!(reisner_cm_check::<F3>(&rp2, 16).unwrap().cohen_macaulay);
    }

    #[test]
    fn cm_examples() {
        let k22 = complex(&["x1", "x2", "y1", "y2"], &[&[0, 1], &[2, 3]]);
        let v = reisner_cm_check::<Rational>(&k22, 16).unwrap();
        assert!(!v.cohen_macaulay);
        assert!(v.witness.unwrap().contains("{}"));
        assert_eq!(
            pure_strong_check(&k22),
            PureStrong { pure: true, strongly_connected: false }
        );
        let simplex = complex(&["a", "b", "c"], &[&[0, 1, 2]]);
        assert!(reisner_cm_check::<Rational>(&simplex, 16).unwrap().cohen_macaulay);
        assert_eq!(
            pure_strong_check(&simplex),
            PureStrong { pure: true, strongly_connected: true }
        );
        // path y1-x1-y2-x2: independence complex facets {x1,x2},{x2,y1},{y1,y2}
        let path = complex(&["x1", "x2", "y1", "y2"], &[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(
            pure_strong_check(&path),
            PureStrong { pure: true, strongly_connected: true }
        );
        assert!(reisner_cm_check::<Rational>(&path, 16).unwrap().cohen_macaulay);
        assert!(reisner_cm_check::<Rational>(&path, 3).is_err());
    }

    #[test]
    fn duality_is_an_involution() {
        let c = complex(&["a", "b", "c", "d"], &[&[0, 1], &[1, 2, 3], &[0, 3]]);
        let d = c.alexander_dual().unwrap();
        assert_eq!(d.alexander_dual().unwrap(), c);
        // facets of the dual are complements of the minimal nonfaces
        for n in c.minimal_nonfaces().unwrap() {
            assert!(d.facets().contains(&(0b1111 & !n)));
        }
        let void = SimplicialComplex::new(vec!["a".into()], vec![]).unwrap();
        assert_eq!(void.alexander_dual().unwrap().facets(), &[1]);
        assert_eq!(void.alexander_dual().unwrap().alexander_dual().unwrap(), void);
    }

    #[test]
    fn dual_of_the_worked_example() {
        use crate::monomial::build_hp;
        let p = Poset::new(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("b", "d")]).unwrap();
        let hp = build_hp(&p, &p.enumerate_ideals(20).unwrap());
        let d = poset_duality(&p, &hp).unwrap();
        assert!(d.matches);
        assert_eq!(d.dual_ideal.len(), 7);
        assert_eq!(d.complex.minimal_nonfaces().unwrap().len(), 8);
        assert!(reisner_cm_check::<Rational>(&d.dual, 16).unwrap().cohen_macaulay);

        let single = Poset::new(&["p"], &[] as &[(&str, &str)]).unwrap();
        let hs = build_hp(&single, &single.enumerate_ideals(20).unwrap());
        let d = poset_duality(&single, &hs).unwrap();
        assert_eq!(d.dual_ideal.formatted(), vec!["pu"]);
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices":["a","b","c"],"facets":[["a","b"],["c"]]}"#;
        let c = SimplicialComplex::from_json(text).unwrap();
        assert_eq!(serde_json::to_string(&c.to_json()).unwrap(), text);
        assert!(SimplicialComplex::from_json(r#"{"vertices":["a"],"facets":[["z"]]}"#).is_err());
    }
}
