//! Generating-series layer: R-matrix, RTT relation, principal series.

pub mod evaluation;
pub mod principal;
pub mod rmatrix;

pub use evaluation::{evaluation_t, rtt_sides, verify_rtt, Convention, SeriesMatrix};
pub use principal::{
    check_principal_relation, default_patterns, parse_patterns, pattern_search, principal_series,
    verify_principal_relation, IndexPattern, PatternStatus, SearchResult,
};
pub use rmatrix::{verify_ybe, yang_r_matrix, ybe_sides, SpectralOperator};
