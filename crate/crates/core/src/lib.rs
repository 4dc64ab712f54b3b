//! Von Neumann entropy of Gibbs states derived from graph matrices.
//!
//! The crate builds the adjacency, Laplacian or normalized Laplacian of a
//! graph, computes its full spectrum with a dense symmetric eigensolver, and
//! evaluates the entropy S = tau Tr(H rho) + log Z of the Gibbs state
//! exp(-tau H)/Z across tau sweeps. Closed-form expressions for complete,
//! bipartite, star and cycle graphs, spectral entropy bounds, and the
//! Lambert-W thresholds of the Erdos-Renyi phase transition serve as
//! independent oracles; seeded generators (ER, Chung-Lu, Watts-Strogatz,
//! Barabasi-Albert) and an edge-list ingestion pipeline feed the sweep
//! experiments.
//!
//! The `graph-entropy` binary exposes the same machinery as CSV-emitting
//! subcommands (`spectrum`, `sweep`, `oracle-check`, `bounds-check`).

pub mod cli;
pub mod entropy;
pub mod error;
pub mod generators;
pub mod graph;
pub mod matrices;
pub mod spectral;

pub use entropy::{
    closed_form_entropy, curve_from_spectrum, cycle_asymptotic_offset, ensemble_average_curve,
    ensemble_average_curve_with, entropy_curve, er_phase_transition_thresholds,
    finite_spectrum_entropy_lower_bound, gibbs_entropy, log_spectrum_classification,
    shannon_entropy_of_gibbs_weights, spectral_component_count, ClosedFormClass, CurvePoint,
    EntropyCurve, GibbsEntropyResult, SpectrumClassification, TauGrid,
};
pub use error::{Error, Result};
pub use generators::{
    er_threshold_p, generate, matched_er_spec, GeneratorSpec, Rng, RngSeed,
};
pub use graph::{ComponentLabeling, Graph};
pub use matrices::{
    adjacency_matrix, build_matrix, laplacian, normalized_laplacian, MatrixKind, SymMatrix,
};
pub use spectral::{
    bessel_i, bessel_i0, bessel_i0_scaled, bessel_i1, bessel_i1_scaled, eigenvalues_sym,
    eigenvalues_sym_with_cap, lambert_w, lambert_w0, lambert_w_minus1, Spectrum, DEFAULT_DENSE_CAP,
    DEFAULT_EIG_TOL,
};
