//! Pressing dynamics on simple pseudo-graphs (loops allowed, no multi-edges)
//! and exact recognition of the graphs that admit exactly one successful
//! pressing sequence.
//!
//! * [`f2core`]: bit-packed GF(2) rows and matrices.
//! * [`graph`]: the pseudo-graph model, pressing, and text/DOT formats.
//! * [`cholesky`]: instructional Cholesky roots and the greedy pressing order.
//! * [`recognition`]: the four column properties, the cubic-time recognizer,
//!   and brute-force oracles.
//! * [`genesis`]: generation of all connected uniquely pressable graphs,
//!   closed-form counts, and an isomorphism census.
//!
//! ```
//! use unipress::{recognize, PseudoGraph};
//!
//! let g = PseudoGraph::on_range(3, [(1, 1), (1, 2), (1, 3), (3, 3)]).unwrap();
//! let report = recognize(&g);
//! assert!(report.is_yes());
//! assert_eq!(report.sequence.unwrap().vertices(), &[1, 2, 3]);
//! ```

pub mod cholesky;
pub mod error;
pub mod f2core;
pub mod genesis;
pub mod graph;
pub mod recognition;

pub use cholesky::{
    find_pressing_order, graph_root, instructional_root, CholeskyRoot, PressingOrder,
};
pub use error::{Error, Result};
pub use f2core::{
    gf2_dot, leading_principal_minors, principal_submatrix, transpose_mul, BitMatrix, BitRow,
};
pub use genesis::{
    canonical_code, census, census_with_bound, cup_count, extend_left, extend_right, generate_cup,
    random_cup, total_count, CensusResult,
};
pub use graph::{Component, Label, PressingSequence, PseudoGraph};
pub use recognition::{
    check_properties, count_sequences_bruteforce, pressing_length, recognize,
    successful_sequences_bruteforce, PropertyReport, Reason, RecognitionReport, Verdict,
    DEFAULT_ORACLE_BOUND,
};
