//! Finite Jaco graphs `J_n(1)`.
//!
//! A Jaco graph of order 1 has vertices `v_1..v_n` and an arc `(v_i, v_j)`,
//! `i < j`, exactly when `2i - d⁻(v_i) >= j`. This crate builds the graph
//! from that rule and counts its edges four independent ways:
//!
//! * [`graph`]: brute-force construction, the ground truth for everything else;
//! * [`fisher`]: the incremental row engine (`d⁻`, `d⁺`, `Δ`, `ε` per vertex);
//! * [`zeckendorf`]: out-degrees from Zeckendorf index shifting, and `ε` as
//!   `n(n+1)/2 - 1 - Σ d⁺`;
//! * [`reconstruction`]: the degree-sum count anchored at the Jaconian vertex.
//!
//! [`report`] runs the methods side by side and [`cli`] exposes them on the
//! command line.

#![forbid(unsafe_code)]

pub mod cli;
pub mod error;
pub mod fisher;
pub mod graph;
pub mod reconstruction;
pub mod report;
pub mod zeckendorf;

pub use error::{JacoError, Result};
pub use fisher::{edges_recursive, fisher_table, FisherEngine, FisherRow};
pub use graph::{DegreeRecord, HopeView, JacoGraph, Jaconian};
pub use reconstruction::{
    bridging_terms, edges_prop22, edges_reconstruction, expressible_anchor, prop22_degree_sum, Anchor,
    BridgingSum,
};
pub use report::{EdgeCountReport, Method};
pub use zeckendorf::{
    bettina_out_degree, edges_zeckendorf, fib, in_degree_bettina, Zeckendorf,
};
