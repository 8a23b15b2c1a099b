//! Graded Betti numbers, projective dimension, regularity and depth of path
//! ideals of cycles, by closed form and by brute-force Hochster sums.
//!
//! ```
//! use cyclebetti::{betti_table_facet, build_cycle_complex, closed_form_table, make_params, OracleConfig};
//!
//! let params = make_params(6, 3, 2).unwrap();
//! let oracle = betti_table_facet(&build_cycle_complex(&params), &OracleConfig::default()).unwrap();
//! assert_eq!(oracle.to_string(), "{(0,0):1,(1,3):3,(2,5):3,(3,6):1}");
//! assert_eq!(closed_form_table(&params).unwrap().table.get(3, 6), 1);
//! ```

pub mod betti;
pub mod closed_forms;
pub mod error;
pub mod homology;
pub mod oracle;
pub mod path_ideals;
pub mod simplicial;
pub mod verify;
pub mod vertex_set;

pub use betti::{BettiEntry, BettiTable};
pub use closed_forms::{
    betti_graded_cycle, betti_top, check_bounds, closed_form_table, depth, graded_table,
    homology_cycle_complement, homology_e_profile, homology_e_runs, homology_e_t1,
    homology_single_run, pd_reg, pd_reg_line, BoundClause, BoundsReport, ClosedFormTable,
    GradedCount, HomologyAnswer,
};
pub use error::{Error, Result};
pub use homology::{
    reduced_homology_dims, reduced_homology_with, FieldSpec, HomologyDims, HomologyOptions,
    Strategy,
};
pub use oracle::{
    betti_table_facet, betti_table_sr, pd_from_table, reg_from_table, stanley_reisner_complex,
    OracleConfig,
};
pub use path_ideals::{
    build_cycle_complex, build_e_complex, build_run_complex, build_run_union, facet_ideal,
    make_params, normalize_step, valid_triples, CycleParams, MonomialIdeal, RunProfile,
};
pub use simplicial::{
    complement_complex, connected_components, induced_on, is_cone, is_induced_facet_subset,
    InducedSubcollection, RunDecomposition, SimplicialComplex,
};
pub use vertex_set::VertexSet;
