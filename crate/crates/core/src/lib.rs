//! Eccentricity matrices of trees and their complements.
//!
//! The crate builds trees (named families, Prüfer sequences, exhaustive
//! free-tree enumeration), forms their adjacency, distance and
//! eccentricity matrices, diagonalizes them with a cyclic Jacobi solver and
//! compares the results against explicit spectra and extremal bounds.
//!
//! ```
//! use ecc_spectra::{build_t3, eccentricity_matrix, eigenvalues, energy_t3_complement};
//!
//! let t = build_t3(7, 0, 3)?;
//! let e = eccentricity_matrix(&t.complement())?;
//! let solved = eigenvalues(&e)?.energy();
//! assert!((solved - energy_t3_complement(7, 0, 3)?).abs() < 1e-10);
//! # Ok::<(), ecc_spectra::Error>(())
//! ```

pub mod canon;
pub mod closed_form;
pub mod eigen;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod verify;

pub use canon::CanonicalCode;
pub use closed_form::{
    adjacency_tree_bounds, bounds_diam3, energy_bounds_diam3, energy_t3_complement,
    energy_t4_complement, nordhaus_gaddum_bounds, path_adjacency_energy, path_complement_energy,
    spec_t3_complement, spec_t4_complement, tree_ecc_minima, tree_energy_lower_bound,
    tree_xi2_lower_bound, xi1_path_complement, BoundKind, BoundValue, ClosedFormSpectrum,
    CubicForm, Diam3Bounds,
};
pub use eigen::{eigenvalues, GroupedSpectrum, Spectrum, DEFAULT_GROUP_TOL};
pub use enumerate::{
    enumerate_free_trees, enumerate_with_connected_complement, pruefer_free_trees, FreeTrees,
    TreeStream,
};
pub use error::{Error, Result};
pub use families::{build_dnd, build_t3, path, spider, star, tree_from_pruefer, tree_to_pruefer};
pub use io::{
    format_edge_list, format_pruefer, format_tree_record, parse_edge_list, parse_edge_list_records,
    parse_graph, parse_pruefer,
};
pub use graph::{DistanceMatrix, EccInfo, Graph, Tree, MAX_ORDER};
pub use matrix::{
    adjacency_matrix, complement_ecc_vs_2a, distance_matrix, eccentricity_matrix, quotient,
    t3_partition, t4_partition, EccComparison, ExceedingEntry, Partition, QuotientResult,
    SymMatrix,
};
pub use verify::{
    appendix_table_crosscheck, check, check_all, extremal_table, CheckOptions, ExtremalStatistic,
    RankedTree, TheoremId, TheoremReport, Verdict, Verifier,
};
