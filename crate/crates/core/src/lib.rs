//! Spectra of the α-distance matrix `D_α = α·Tr + (1 − α)·D` of connected
//! graphs, with closed forms for a few families and a battery of
//! inequalities checked against the computed spectra.

pub mod bounds;
pub mod closed_forms;
pub mod distance;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod linalg;
pub mod report;
pub mod spectrum;
pub mod sweep;

pub use bounds::{BoundId, BoundResult, Polynomial, Side, Tolerance};
pub use distance::{all_pairs_distances, DistanceData};
pub use error::{Error, Result};
pub use graph::{generate_family, generate_random_connected, Family, Graph};
pub use graph6::{encode_graph6, parse_graph6};
pub use linalg::{sym_eigenvalues, QuotientMatrix, SymMatrix};
pub use spectrum::{alpha_spectrum, build_alpha_matrix, GraphInvariants, Spectrum};
pub use sweep::{run_sweep, Corpus, NamedGraph, Report, SweepConfig};
