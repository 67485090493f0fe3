//! Exact, desk-scale combinatorics of linear cycles in r-uniform hypergraphs.
//!
//! The crate provides:
//!
//! - [`hypergraph`]: canonical r-uniform hypergraphs with codegree/shadow
//!   indices, induced subgraphs, degree peeling, and distance layers;
//! - [`constructions`]: named families (single edge, linear cycles and paths,
//!   the 9-point triple system), blow-ups, tensor products, seeded random
//!   models, vertex percolation, and a random-greedy high-girth generator;
//! - [`counting`]: exact homomorphism and injective-copy counting, Berge
//!   girth with witnesses, linear-tree enumeration, homomorphic image
//!   profiles, even-cycle enumeration in 2-graphs, automorphism counts;
//! - [`sidorenko`]: homomorphism densities in log space with exact-integer
//!   comparisons, gap estimation, and witness rescaling via blow-up or
//!   percolation;
//! - [`supersat`]: the constructive supersaturation pipeline — transversal
//!   partitioning, dyadic type classification, codegree cleanup, the
//!   codegree dichotomy, greedy cycle expansion, even-cycle extension, and
//!   closed-form exponent algebra;
//! - [`oracles`]: deliberately naive brute-force references used by the
//!   test suite and the `verify` subcommand;
//! - [`textio`]: the plain-text hypergraph file format;
//! - [`report`]: structured, decimal-string report records.
//!
//! All counts are arbitrary-precision; all density comparisons that decide a
//! verdict are done on exact integers, never floats.

pub mod constructions;
pub mod counting;
pub mod hypergraph;
pub mod oracles;
pub mod report;
pub mod sidorenko;
pub mod supersat;
pub mod textio;

pub use constructions::RngSeed;
pub use hypergraph::{Graph2, Hypergraph, HypergraphError, PartitionedHypergraph, ShadowKey};
