//! Table assembly and CSV rendering.

use serde::{Deserialize, Serialize};

use super::enumerate::GUARD_FILTERED;
use super::records::{
    realization_scan, search_max_edges, search_min_edges, ExtremalRecord, Method, RecordKind, SearchStatus,
    SweepOptions,
};
use crate::constructions::{
    clique_chain, complement_construction, max_edge_construction, min_edge_construction, realization,
};
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "k,n,kind,value,method,witness_g6,nodes,seconds";

#[derive(Clone, Copy, Debug, Default)]
pub struct TableOptions {
    pub sweep: SweepOptions,
    /// Largest `n` searched exhaustively; larger rows use constructions.
    pub exhaustive_max_n: Option<usize>,
}

/// Min, max and realization-set rows for every `k <= n` in the ranges,
/// ordered by `(k, n, kind)`.
pub fn build_tables(
    ks: impl IntoIterator<Item = usize>,
    ns: impl IntoIterator<Item = usize> + Clone,
    opts: TableOptions,
) -> Result<Vec<ExtremalRecord>> {
    let limit = opts.exhaustive_max_n.unwrap_or(GUARD_FILTERED);
    let mut rows = Vec::new();
    for k in ks {
        if k < 2 {
            return Err(Error::InvalidK(k));
        }
        for n in ns.clone().into_iter().filter(|&n| n >= k) {
            if n <= limit {
                rows.push(search_min_edges(k, n, opts.sweep)?);
                rows.push(search_max_edges(k, n, opts.sweep)?);
                rows.push(realization_scan(k, n, opts.sweep)?);
            } else {
                rows.extend(construction_rows(k, n)?);
            }
        }
    }
    Ok(rows)
}

fn construction_record(
    k: usize,
    n: usize,
    kind: RecordKind,
    values: Vec<usize>,
    witnesses: Vec<String>,
) -> ExtremalRecord {
    ExtremalRecord {
        k,
        n,
        kind,
        value: values.iter().copied().max(),
        values,
        witnesses,
        method: Method::ConstructionOnly,
        status: SearchStatus::Complete,
        nodes: 0,
        seconds: None,
    }
}

/// Rows backed only by verified constructions: the minimum from the best
/// known construction, the maximum, and for `k <= 4` the edge counts the
/// realization builder reaches.
pub fn construction_rows(k: usize, n: usize) -> Result<Vec<ExtremalRecord>> {
    let min = if k <= 4 {
        min_edge_construction(k, n)?
    } else {
        let chain = clique_chain(k, n)?;
        match complement_construction(k, n) {
            Ok(c) if c.graph.size() < chain.graph.size() => c,
            _ => chain,
        }
    };
    let max = max_edge_construction(k, n)?;
    let mut rows = vec![
        construction_record(
            k,
            n,
            RecordKind::Min,
            vec![min.graph.size()],
            vec![crate::graph::to_graph6(&min.graph)],
        ),
        construction_record(
            k,
            n,
            RecordKind::Max,
            vec![max.graph.size()],
            vec![crate::graph::to_graph6(&max.graph)],
        ),
    ];
    if k <= 4 {
        let reached: Vec<usize> = (min.graph.size()..=max.graph.size())
            .filter(|&a| realization(k, n, a).is_ok())
            .collect();
        rows.push(construction_record(k, n, RecordKind::RealizationSet, reached, vec![]));
    }
    Ok(rows)
}

fn csv_value(r: &ExtremalRecord) -> String {
    match r.kind {
        RecordKind::RealizationSet => r.values.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
        _ => r.value.map_or_else(String::new, |v| v.to_string()),
    }
}

/// CSV with [`CSV_HEADER`]. Witnesses are joined with `;`, which never
/// occurs in graph6. The `seconds` column is left empty unless `timings`.
/// Inconclusive rows get `method` suffixed with `:inconclusive`.
pub fn records_to_csv(records: &[ExtremalRecord], timings: bool) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let method = match r.status {
            SearchStatus::Complete => r.method.as_str().to_string(),
            SearchStatus::Inconclusive => format!("{}:inconclusive", r.method.as_str()),
        };
        let seconds = match (timings, r.seconds) {
            (true, Some(s)) => format!("{s:.3}"),
            _ => String::new(),
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.k,
            r.n,
            r.kind.as_str(),
            csv_value(r),
            method,
            r.witnesses.join(";"),
            r.nodes,
            seconds
        ));
    }
    out
}

/// Clique-chain count against the complement construction, where both exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub k: usize,
    pub n: usize,
    pub clique_chain: usize,
    pub complement: Option<usize>,
    /// `clique-chain`, `complement` or `tie`.
    pub smaller: String,
}

/// Both constructions are built and certified, not just counted.
pub fn bound_comparison(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Vec<BoundRow>> {
    let mut rows = Vec::new();
    for (k, n) in pairs {
        let chain = clique_chain(k, n)?.graph.size();
        let comp = if n >= k + 2 {
            Some(complement_construction(k, n)?.graph.size())
        } else {
            None
        };
        let smaller = match comp {
            Some(c) if c < chain => "complement",
            Some(c) if c == chain => "tie",
            _ => "clique-chain",
        };
        rows.push(BoundRow {
            k,
            n,
            clique_chain: chain,
            complement: comp,
            smaller: smaller.into(),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_shape() {
        let rows = build_tables(2..=3, 3..=5, TableOptions::default()).unwrap();
        let csv = records_to_csv(&rows, false);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 1 + 3 * (3 + 3));
        assert!(lines[1].starts_with("2,3,min,2,exhaustive,"));
        assert!(lines.iter().skip(1).all(|l| l.ends_with(',')));
    }

    #[test]
    fn construction_rows_beyond_guard() {
        let rows = construction_rows(4, 12).unwrap();
        assert_eq!(rows[0].value, Some(23));
        assert_eq!(rows[1].value, Some(12 + 4 - 3 + 45));
        assert_eq!(rows[0].method, Method::ConstructionOnly);
    }

    #[test]
    fn crossover() {
        let rows = bound_comparison([(23, 26), (24, 26)]).unwrap();
        assert_eq!((rows[0].clique_chain, rows[0].complement), (316, Some(311)));
        assert_eq!((rows[1].clique_chain, rows[1].complement), (321, Some(312)));
        assert_eq!(rows[0].smaller, "complement");
    }
}
