//! Distributive lattices `J(P)`, the squarefree monomial ideal `H_P`, its
//! explicit linear resolution, the Rees-algebra Gröbner basis, Alexander
//! duality, and recognition of Cohen–Macaulay bipartite graphs.
//!
//! Exact linear algebra is generic over [`Scalar`]; the aliases below name
//! the fields used in practice.

pub mod bipartite;
pub mod catalog;
pub mod error;
pub mod groebner;
pub mod guards;
pub mod linalg;
pub mod monomial;
pub mod poset;
pub mod resolution;
pub mod scalar;
pub mod simplicial;
pub mod tor;

pub use bipartite::{graph_of_poset, recognize_cm, BipartiteGraph, RecognitionResult, Verdict};
pub use error::{Error, Result};
pub use groebner::{verify_groebner, GroebnerReport};
pub use guards::Guards;
pub use linalg::SparseMatrix;
pub use monomial::{build_hp, monomial_of_ideal, verify_linear_quotients, MonomialIdeal, SquarefreeMonomial};
pub use poset::{boolean_interval_counts, DistributiveLattice, ElemSet, Interval, Poset, PosetIdeal};
pub use resolution::{betti_table, build_resolution, strand_exactness, verify_complex, BettiTable, FreeComplex};
pub use scalar::{FieldChoice, Fp, Scalar};
pub use simplicial::{complex_from_ideal, reisner_cm_check, SimplicialComplex};
pub use tor::{koszul_tor_oracle, taylor_tor_oracle};

/// The rational numbers, the default field for rank computations.
pub type Rational = num_rational::BigRational;
/// The field with two elements.
pub type F2 = Fp<2>;
/// The field with three elements.
pub type F3 = Fp<3>;
/// The default fast prime field.
pub type F32003 = Fp<32003>;

pub type RationalMatrix = SparseMatrix<Rational>;
