//! Dense adjacency matrix and its eigendecomposition.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::permgroup::GroupTable;
use crate::subsets::ElementSet;

use super::report::{cluster, Method, SpectrumEntry, SpectrumReport};
use super::SpectrumOptions;

/// Rejects sets that do not define a simple undirected Cayley graph.
pub(crate) fn check_connection_set(g: &GroupTable, s: &ElementSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::Invalid("connection set is empty".into()));
    }
    if s.contains(&0) {
        return Err(Error::Invalid("connection set contains the identity".into()));
    }
    if let Some(&x) = s.iter().find(|&&x| !s.contains(&g.inv(x))) {
        return Err(Error::Invalid(format!(
            "connection set is not symmetric: {} has no inverse in it",
            g.element(x)
        )));
    }
    Ok(())
}

/// Entry `(g, h)` is 1 iff `g⁻¹h ∈ S`, i.e. `h = g·s`.
pub fn adjacency_matrix(g: &GroupTable, s: &ElementSet, oracle_cap: usize) -> Result<DMatrix<f64>> {
    check_connection_set(g, s)?;
    if g.order() > oracle_cap {
        return Err(Error::CapExceeded {
            what: "group order for the direct oracle",
            value: g.order(),
            cap: oracle_cap,
        });
    }
    let n = g.order();
    let mut adj = DMatrix::zeros(n, n);
    for x in 0..n {
        for &t in s {
            adj[(x, g.mul(x, t))] = 1.0;
        }
    }
    Ok(adj)
}

/// Eigenvalues of a symmetric matrix, clustered with minimum gap
/// `gap_factor · tol`.
pub fn spectrum_direct(adj: DMatrix<f64>, opts: &SpectrumOptions) -> Result<SpectrumReport> {
    let n = adj.nrows();
    if adj.ncols() != n || adj != adj.transpose() {
        return Err(Error::Invalid("matrix is not symmetric".into()));
    }
    let eig = SymmetricEigen::try_new(adj, f64::EPSILON, 1000 * n.max(1))
        .ok_or_else(|| Error::Verification("symmetric eigensolver did not converge".into()))?;
    let clusters = cluster(
        eig.eigenvalues.iter().map(|&v| (v, 1)).collect(),
        opts.min_gap(),
    );
    let pairs = clusters
        .into_iter()
        .map(|(value, mult)| SpectrumEntry { value, exact: None, mult })
        .collect();
    Ok(SpectrumReport::numeric(pairs, Method::DirectOracle, opts.tol))
}
