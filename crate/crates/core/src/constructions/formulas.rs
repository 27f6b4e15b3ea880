//! Closed-form edge counts for the extremal problems.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn binom(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn check_range(k: usize, n: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::InvalidParameters(format!("need 2 <= k <= n, got k={k}, n={n}")));
    }
    Ok(())
}

/// `q C(k,2) + C(r,2) + r(k-r)`.
fn block_count(k: usize, q: usize, r: usize) -> usize {
    q * binom(k, 2) + binom(r, 2) + r * (k - r)
}

/// Edges of the disconnected family: `n = kq + r`.
pub fn disconnected_min_edges(k: usize, n: usize) -> Result<usize> {
    check_range(k, n)?;
    Ok(block_count(k, n / k, n % k))
}

/// Edges of the clique chain: `n - 1 = (k-1)q + r`.
pub fn clique_chain_edges(k: usize, n: usize) -> Result<usize> {
    check_range(k, n)?;
    Ok(block_count(k, (n - 1) / (k - 1), (n - 1) % (k - 1)))
}

/// Edges of the complement of `K_{n-k}` plus a near-perfect matching on `k` vertices.
pub fn complement_edges(k: usize, n: usize) -> Result<usize> {
    if k < 2 || n < k + 2 {
        return Err(Error::InvalidParameters(format!(
            "need k >= 2 and n - k >= 2, got k={k}, n={n}"
        )));
    }
    Ok(binom(n, 2) - binom(n - k, 2) - k / 2)
}

/// Maximum edges of a connected k*-dense graph on `n` vertices.
pub fn max_edges(k: usize, n: usize) -> Result<usize> {
    check_range(k, n)?;
    Ok(n + k - 3 + binom(n - 2, 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaStatus {
    Proven,
    Conjecture,
    /// Known to be only an upper bound on the minimum.
    UpperBoundOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinEdgeFormula {
    pub value: usize,
    pub status: FormulaStatus,
}

/// Minimum edges of a connected k*-dense graph on `n` vertices: exact for
/// `k <= 4`, the clique-chain count otherwise.
pub fn min_edge_formula(k: usize, n: usize) -> Result<MinEdgeFormula> {
    check_range(k, n)?;
    let (value, status) = match k {
        2 => (n - 1, FormulaStatus::Proven),
        3 => ((3 * (n - 1)).div_ceil(2), FormulaStatus::Proven),
        4 => (if n % 3 == 1 { 2 * n - 2 } else { 2 * n - 1 }, FormulaStatus::Proven),
        5..=7 => (clique_chain_edges(k, n)?, FormulaStatus::Conjecture),
        _ => (clique_chain_edges(k, n)?, FormulaStatus::UpperBoundOnly),
    };
    Ok(MinEdgeFormula { value, status })
}
