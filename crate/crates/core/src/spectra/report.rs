use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::charpoly::{CharPolyZ, IntegerRoots};

/// Which route produced a spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    CentralCharacters,
    DirectOracle,
}

/// One distinct eigenvalue with its multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub value: f64,
    /// Set when the value is a proven integer eigenvalue.
    pub exact: Option<i64>,
    pub mult: usize,
}

impl SpectrumEntry {
    pub fn distance_to_integer(&self) -> f64 {
        match self.exact {
            Some(_) => 0.0,
            None => (self.value - self.value.round()).abs(),
        }
    }
}

/// The exact part of a certified spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub charpoly: CharPolyZ,
    pub roots: IntegerRoots,
}

impl Certificate {
    pub fn fully_split(&self) -> bool {
        self.roots.fully_split
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    /// Distinct eigenvalues, descending.
    pub pairs: Vec<SpectrumEntry>,
    pub method: Method,
    /// The integrality verdict is backed by an exact certificate.
    pub certified: bool,
    pub integral: bool,
    /// Largest distance from a reported non-exact eigenvalue to the nearest
    /// integer; 0 when every eigenvalue is exact.
    pub residual: f64,
    pub certificate: Option<Certificate>,
}

impl SpectrumReport {
    pub(crate) fn numeric(pairs: Vec<SpectrumEntry>, method: Method, tol: f64) -> Self {
        let residual = pairs
            .iter()
            .map(SpectrumEntry::distance_to_integer)
            .fold(0.0, f64::max);
        SpectrumReport {
            pairs,
            method,
            certified: false,
            integral: residual <= tol,
            residual,
            certificate: None,
        }
    }

    pub fn total_multiplicity(&self) -> usize {
        self.pairs.iter().map(|e| e.mult).sum()
    }

    pub fn top(&self) -> &SpectrumEntry {
        &self.pairs[0]
    }

    /// Eigenvalues with repetition, ascending.
    pub fn expanded(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .pairs
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.exact.map_or(e.value, |x| x as f64), e.mult))
            .collect();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Multiplicity of an exact integer eigenvalue.
    pub fn exact_multiplicity(&self, value: i64) -> usize {
        self.pairs
            .iter()
            .filter(|e| e.exact == Some(value))
            .map(|e| e.mult)
            .sum()
    }

    /// Trace identities of a loop-free `|set_size|`-regular graph on `order`
    /// vertices, plus the Perron property when `components` is given.
    pub fn check_invariants(
        &self,
        order: usize,
        set_size: usize,
        components: Option<usize>,
        tol: f64,
    ) -> Result<()> {
        let fail = |what: String| Err(Error::Verification(what));
        if self.pairs.is_empty() {
            return fail("empty spectrum".into());
        }
        if self.total_multiplicity() != order {
            return fail(format!(
                "multiplicities sum to {} instead of |G| = {order}",
                self.total_multiplicity()
            ));
        }
        let value = |e: &SpectrumEntry| e.exact.map_or(e.value, |x| x as f64);
        let scale = (order * set_size.max(1)) as f64;
        let trace: f64 = self.pairs.iter().map(|e| value(e) * e.mult as f64).sum();
        if trace.abs() > tol * scale {
            return fail(format!("trace {trace} is not 0"));
        }
        let trace2: f64 = self.pairs.iter().map(|e| value(e).powi(2) * e.mult as f64).sum();
        if (trace2 - scale).abs() > tol * scale * set_size.max(1) as f64 {
            return fail(format!("sum of squares {trace2} differs from |S||G| = {scale}"));
        }
        let top = self.top();
        if (value(top) - set_size as f64).abs() > tol {
            return fail(format!("top eigenvalue {} differs from |S| = {set_size}", value(top)));
        }
        if let Some(n) = components {
            if top.mult != n {
                return fail(format!(
                    "top eigenvalue multiplicity {} differs from component count {n}",
                    top.mult
                ));
            }
        }
        Ok(())
    }
}

/// Largest elementwise gap between the sorted eigenvalue multisets;
/// infinite when the total multiplicities differ.
pub fn max_discrepancy(a: &SpectrumReport, b: &SpectrumReport) -> f64 {
    let (x, y) = (a.expanded(), b.expanded());
    if x.len() != y.len() {
        return f64::INFINITY;
    }
    x.iter()
        .zip(&y)
        .map(|(p, q)| (p - q).abs())
        .fold(0.0, f64::max)
}

/// Groups weighted values whose consecutive gaps are at most `min_gap`.
/// Returns `(mean, total weight)` per cluster, descending by value.
pub(crate) fn cluster(mut values: Vec<(f64, usize)>, min_gap: f64) -> Vec<(f64, usize)> {
    values.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut out: Vec<(f64, usize, f64, usize)> = Vec::new(); // (sum, weight, last, count)
    for (v, w) in values {
        match out.last_mut() {
            Some(c) if c.2 - v <= min_gap => {
                c.0 += v;
                c.1 += w;
                c.2 = v;
                c.3 += 1;
            }
            _ => out.push((v, w, v, 1)),
        }
    }
    out.into_iter()
        .map(|(sum, w, _, n)| (sum / n as f64, w))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(value: f64, mult: usize) -> SpectrumEntry {
        SpectrumEntry { value, exact: None, mult }
    }

    #[test]
    fn clustering_by_gap() {
        let c = cluster(vec![(0.0, 1), (3.0, 1), (1e-9, 2), (-3.0, 1), (2.0 * 1e-9, 1)], 1e-5);
        assert_eq!(c.len(), 3);
        assert_eq!(c[0], (3.0, 1));
        assert_eq!(c[1].1, 4);
        assert!(c[1].0.abs() < 1e-8);
        assert_eq!(c[2], (-3.0, 1));
    }

    #[test]
    fn invariants_of_k33() {
        let r = SpectrumReport::numeric(
            vec![entry(3.0, 1), entry(0.0, 4), entry(-3.0, 1)],
            Method::DirectOracle,
            1e-6,
        );
        assert!(r.integral);
        r.check_invariants(6, 3, Some(1), 1e-6).unwrap();
        assert!(r.check_invariants(6, 3, Some(2), 1e-6).is_err());
        assert!(r.check_invariants(7, 3, None, 1e-6).is_err());
        assert!(r.check_invariants(6, 2, None, 1e-6).is_err());
    }

    #[test]
    fn residual_and_discrepancy() {
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        let r = SpectrumReport::numeric(
            vec![entry(2.0, 1), entry(golden, 2), entry(-1.0 - golden, 2)],
            Method::DirectOracle,
            1e-6,
        );
        assert!(!r.integral);
        assert!((r.residual - (1.0 - golden)).abs() < 1e-12);
        let same = r.clone();
        assert_eq!(max_discrepancy(&r, &same), 0.0);
        let short = SpectrumReport::numeric(vec![entry(2.0, 1)], Method::DirectOracle, 1e-6);
        assert!(max_discrepancy(&r, &short).is_infinite());
    }
}
