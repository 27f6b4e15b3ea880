//! Sweep records: determinism under parallelism, witness handling, budgets.

use kdense_core::density::density_index;
use kdense_core::graph::{from_graph6, is_connected};
use kdense_core::search::{
    build_tables, realization_scan, search_max_edges, search_min_edges, Budget, ExtremalRecord, SearchStatus,
    SweepOptions, TableOptions, WITNESS_CAP,
};

fn untimed(mut r: ExtremalRecord) -> ExtremalRecord {
    r.seconds = None;
    r
}

#[test]
fn records_ignore_worker_count() {
    let run = |threads| {
        let o = SweepOptions {
            threads: Some(threads),
            ..Default::default()
        };
        [
            search_min_edges(4, 8, o),
            search_max_edges(3, 8, o),
            realization_scan(3, 7, o),
        ]
        .map(|r| untimed(r.unwrap()))
    };
    let one = run(1);
    assert_eq!(run(2), one);
    assert_eq!(run(8), one);
}

#[test]
fn witnesses_are_valid_and_capped() {
    let r = search_min_edges(3, 8, SweepOptions::default()).unwrap();
    assert!(!r.witnesses.is_empty() && r.witnesses.len() <= WITNESS_CAP);
    for w in &r.witnesses {
        let g = from_graph6(w).unwrap();
        assert_eq!(g.size(), r.value.unwrap());
        assert!(is_connected(&g));
        assert_eq!(density_index(&g).get(), Some(3));
    }
    let scan = realization_scan(2, 8, SweepOptions::default()).unwrap();
    assert_eq!(scan.witnesses.len(), scan.values.len().min(WITNESS_CAP));
    // Trees on 8 vertices: 23 classes, all minimal for k = 2.
    let trees = search_min_edges(2, 8, SweepOptions::default()).unwrap();
    assert_eq!(trees.witnesses.len(), 23);
}

#[test]
fn budget_exhaustion_is_flagged() {
    let o = SweepOptions {
        budget: Budget::nodes(20),
        ..Default::default()
    };
    let r = search_min_edges(3, 8, o).unwrap();
    assert_eq!(r.status, SearchStatus::Inconclusive);
    let rows = build_tables(
        3..=3,
        8..=8,
        TableOptions {
            sweep: o,
            exhaustive_max_n: None,
        },
    )
    .unwrap();
    assert!(rows.iter().all(|r| r.status == SearchStatus::Inconclusive));
}

#[test]
fn forced_search_past_guard() {
    assert!(search_min_edges(4, 10, SweepOptions::default()).is_err());
    let o = SweepOptions {
        force: true,
        budget: Budget::seconds(600.0),
        ..Default::default()
    };
    let r = search_min_edges(4, 10, o).unwrap();
    assert!(r.is_complete());
    assert_eq!(r.value, Some(18));
}
