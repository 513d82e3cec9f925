//! Size limits for the exponential computations.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Guards {
    /// Poset elements for antichain enumeration.
    pub poset_elements: usize,
    /// Elements of `J(P)`.
    pub lattice_ideals: usize,
    /// Total basis size of the resolution.
    pub basis: usize,
    /// Generators for the literal Taylor complex.
    pub taylor_generators: usize,
    /// Variables for the Koszul-complex Tor oracle.
    pub koszul_variables: usize,
    /// `z` variables of the Rees presentation.
    pub z_variables: usize,
    pub complex_vertices: usize,
    pub graph_vertices: usize,
    pub matchings: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            poset_elements: 20,
            lattice_ideals: 1 << 20,
            basis: 1_000_000,
            taylor_generators: 14,
            koszul_variables: 12,
            z_variables: 12,
            complex_vertices: 16,
            graph_vertices: 24,
            matchings: 100_000,
        }
    }
}
