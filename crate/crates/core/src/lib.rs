//! Essential ideal graphs of `Z_n`.
//!
//! Vertices are the nonzero proper ideals of `Z_n`; two ideals are adjacent
//! when their sum is essential. The crate builds these graphs and computes
//! their adjacency spectra (numerically and as exact integer characteristic
//! polynomials), energy, nullity, and Wiener/hyper-Wiener indices, together
//! with the closed forms known for prime powers, two-prime products and
//! squarefree `n`.
//!
//! ```
//! use essgraph::{build_graph, spectral, indices};
//!
//! let g = build_graph(36).unwrap();
//! assert_eq!(g.order(), 7);
//! let d = indices::all_pairs_distances(&g).unwrap();
//! assert_eq!(indices::wiener(&d), 23);
//! assert_eq!(spectral::nullity_exact(&g), 2);
//! ```

pub mod eigen;
pub mod error;
pub mod exact;
pub mod graph;
pub mod indices;
pub mod linalg;
pub mod poly;
pub mod ring;
pub mod spectral;

pub use eigen::{Spectrum, SpectrumEntry};
pub use error::{Error, Result};
pub use graph::{
    adjacent, build_graph, build_graph_capped, equitable_partition, is_essential,
    is_essential_oracle, join_decomposition, universal_vertices, AdjacencyMatrix, IdealGraph,
    JoinDecomposition, VertexPartition,
};
pub use indices::{DistanceMatrix, Rational};
pub use poly::IntPolynomial;
pub use ring::{enumerate_ideals, factorize, ideal_sum, FactoredInteger, IdealId};
