//! Randić-type graph indices, inhomogeneous Erdős–Rényi sampling, and the
//! large-n limits that tie them together.
//!
//! The crate covers the full loop of a convergence experiment:
//!
//! 1. [`graph`] — immutable simple graphs with O(1) degree lookup;
//! 2. [`index`] — exact `R_alpha` / `chi_alpha` computation over edges;
//! 3. [`kernel`] — edge-probability structures `f_ij` and their row sums;
//! 4. [`generator`] — seeded, schedule-independent sampling from
//!    `P(edge {i,j}) = p * f_ij`;
//! 5. [`limits`] — exact finite-n limit sums and asymptotic closed forms,
//!    including the exponential-kernel double integral;
//! 6. [`harness`] — Monte Carlo ratio studies, degree-moment checks, and
//!    summary tables;
//! 7. [`io`] — edge-list and kernel-matrix text formats.
//!
//! Everything numerical is deterministic: randomness is counter-based
//! (keyed by coordinates, not by call order) and floating-point reductions
//! run in fixed chunk order, so a seed pins results bit-for-bit regardless
//! of thread count.

pub mod generator;
pub mod graph;
pub mod harness;
pub mod index;
pub mod io;
pub mod kernel;
pub mod limits;
pub mod numeric;
pub mod quad;
pub mod rng;
pub mod threads;

pub use generator::{dense_enough, sample_graph, sample_with, sparsity_bound, SampleConfig};
pub use graph::{BuildDiagnostics, DegreeSequence, Graph, GraphError};
pub use harness::{
    converge_study, degree_moment_check, summarize_network, table_csv, table_text,
    ConvergenceReport, HarnessError, MomentCheckReport, NetworkSummary,
};
pub use index::{
    general_randic, general_sum_connectivity, harmonic, index_suite, modified_second_zagreb,
    IndexFamily, IndexSpec, IndexValue, SUMMARY_SPECS,
};
pub use io::{parse_edge_list, parse_matrix_csv, write_edge_list, EdgeListDocument, ParseError};
pub use kernel::{Kernel, KernelAggregates, KernelDescriptor, KernelError};
pub use limits::{
    limit_chi_exact, limit_closed, limit_er_chi, limit_er_randic, limit_exact, limit_exp_chi,
    limit_exp_randic, limit_randic_exact, quadrature_double, LimitError, LimitMode, LimitResult,
};
