//! Exhaustive search over small connected graphs for the extremal edge
//! counts of k*-dense graphs.
//!
//! Sweeps test every edge count in their window; feasibility is never
//! assumed to be monotone in the number of edges.

mod enumerate;
mod records;
mod tables;

pub use enumerate::{
    enumerate_connected, enumerate_filtered, Budget, Enumeration, SearchConstraints, GUARD_FILTERED, GUARD_UNFILTERED,
    HARD_LIMIT,
};
pub use records::{
    conjecture_check, construction_upper_bound, degree_floor_edges, realization_scan, search_max_edges,
    search_min_edges, ConjectureRow, ExtremalRecord, Method, RecordKind, SearchStatus, SweepOptions, Verdict,
    WITNESS_CAP,
};
pub use tables::{
    bound_comparison, build_tables, construction_rows, records_to_csv, BoundRow, TableOptions, CSV_HEADER,
};
