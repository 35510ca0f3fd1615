//! `hlab` — a desk-scale laboratory for hereditary set systems.
//!
//! The library covers five connected areas:
//!
//! * [`family`] — explicit families of subsets over small ground sets:
//!   downward-closure and exchange checks, greedy versus exact optimization,
//!   separating weight vectors for non-exchange families, and exhaustive
//!   enumeration of all non-empty downward-closed families on up to four
//!   elements.
//! * [`graph`] / [`cnf`] — instance types, DIMACS parsers, seeded
//!   generators, and the canonical eight-vertex instance.
//! * [`oracle`] — instrumented membership and extension predicates for
//!   independent sets, Hamiltonian tour edge sets, and satisfying literal
//!   sets, with honest work counters.
//! * [`cover`] — vertex-disjoint cycle/edge covers through the assignment
//!   relaxation: permutation enumeration, cover extraction, minimum covers,
//!   and an order-driven greedy probe.
//! * [`sequential`] — the element-by-element construction driver, its trace
//!   invariants, growth classification, and the lookahead verdict sheet.
//!
//! ## Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --example matroid_check        # heredity/exchange verdicts and witnesses
//! cargo run --example greedy_vs_exact      # exhaustive greedy-optimality sweep
//! cargo run --example figure1              # the canonical instance end to end
//! cargo run --example cycle_covers         # assignment solutions and minimum covers
//! cargo run --example sequential_traces    # instrumented traces on all three problems
//! cargo run --example growth_probe         # extension-cost growth tables
//! ```
//!
//! The thin `hlab` binary exposes the same reports as subcommands
//! (`matroid`, `greedy`, `figure1`, `mvdccp`, `classify`).

pub mod cli;
pub mod cnf;
pub mod cover;
pub mod error;
pub mod family;
pub mod graph;
pub mod mask;
pub mod oracle;
pub mod sequential;

pub use error::{Error, Result};
pub use mask::Mask;
