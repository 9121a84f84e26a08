use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectra::{ComponentsReport, Method, SpectrumEntry, SpectrumReport};
use crate::subsets::SubsetAnalysis;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub spec: String,
    pub degree: usize,
    pub order: usize,
    pub class_count: usize,
    pub class_sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SetInfo {
    pub spec: String,
    pub size: usize,
    pub order_profile: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentsInfo {
    pub count: usize,
    pub size: usize,
    pub lemma_check: bool,
}

impl From<&ComponentsReport> for ComponentsInfo {
    fn from(c: &ComponentsReport) -> Self {
        ComponentsInfo {
            count: c.count,
            size: c.size,
            lemma_check: c.lemma_check,
        }
    }
}

/// One spectrum entry on the wire: exact integers when certified,
/// decimal strings with their distance to the nearest integer otherwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EigenvalueJson {
    Exact { value: i64, mult: usize },
    Approx { value: String, mult: usize, residual: f64 },
}

impl EigenvalueJson {
    pub fn mult(&self) -> usize {
        match self {
            EigenvalueJson::Exact { mult, .. } | EigenvalueJson::Approx { mult, .. } => *mult,
        }
    }

    pub fn value_f64(&self) -> f64 {
        match self {
            EigenvalueJson::Exact { value, .. } => *value as f64,
            EigenvalueJson::Approx { value, .. } => value.parse().unwrap_or(f64::NAN),
        }
    }

    fn display_value(&self) -> String {
        match self {
            EigenvalueJson::Exact { value, .. } => value.to_string(),
            EigenvalueJson::Approx { value, .. } => value.clone(),
        }
    }
}

pub(crate) fn format_decimal(v: f64) -> String {
    let s = format!("{v:.10}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

impl From<&SpectrumEntry> for EigenvalueJson {
    fn from(e: &SpectrumEntry) -> Self {
        match e.exact {
            Some(value) => EigenvalueJson::Exact { value, mult: e.mult },
            None => EigenvalueJson::Approx {
                value: format_decimal(e.value),
                mult: e.mult,
                residual: e.distance_to_integer(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub method: Method,
    pub certified: bool,
    pub integral: bool,
    pub residual: f64,
    /// Characteristic polynomial of the class matrix, coefficients from `x^0` up.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub charpoly: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub oracle_ran: bool,
    pub max_discrepancy: Option<f64>,
}

/// Everything `analyze` reports for one (group, set) pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub group: GroupInfo,
    pub set: SetInfo,
    pub flags: SubsetAnalysis,
    pub components: ComponentsInfo,
    pub verdict: Verdict,
    pub spectrum: Vec<EigenvalueJson>,
    pub cross_check: CrossCheck,
}

impl AnalysisReport {
    pub(crate) fn spectrum_from(report: &SpectrumReport) -> (Verdict, Vec<EigenvalueJson>) {
        let verdict = Verdict {
            method: report.method,
            certified: report.certified,
            integral: report.integral,
            residual: report.residual,
            charpoly: report
                .certificate
                .as_ref()
                .map(|c| c.charpoly.coeffs().iter().map(ToString::to_string).collect()),
        };
        (verdict, report.pairs.iter().map(EigenvalueJson::from).collect())
    }

    /// Spectrum invariants on the serialized form: `Σm = |G|`, `Σλm = 0`,
    /// `Σλ²m = |S||G|`, top eigenvalue `|S|` with multiplicity equal to the
    /// component count.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let fail = |m: String| Err(Error::Verification(m));
        let Some(top) = self.spectrum.first() else {
            return fail("report has an empty spectrum".into());
        };
        let order = self.group.order;
        let size = self.set.size;
        let total: usize = self.spectrum.iter().map(EigenvalueJson::mult).sum();
        if total != order {
            return fail(format!("multiplicities sum to {total}, expected {order}"));
        }
        // decimal strings carry 10 digits
        let tol = tol.max(1e-9);
        let scale = (order * size.max(1)) as f64;
        let trace: f64 = self.spectrum.iter().map(|e| e.value_f64() * e.mult() as f64).sum();
        let trace2: f64 = self
            .spectrum
            .iter()
            .map(|e| e.value_f64().powi(2) * e.mult() as f64)
            .sum();
        if trace.abs() > tol * scale || (trace2 - scale).abs() > tol * scale * size.max(1) as f64 {
            return fail(format!("trace identities fail: Σλm = {trace}, Σλ²m = {trace2}"));
        }
        if (top.value_f64() - size as f64).abs() > tol || top.mult() != self.components.count {
            return fail(format!(
                "top eigenvalue {} (mult {}) does not match |S| = {size} with {} components",
                top.display_value(),
                top.mult(),
                self.components.count
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        self.validate(1e-6)?;
        serde_json::to_string_pretty(self).map_err(|e| Error::Verification(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let f = &self.flags;
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        let _ = writeln!(
            out,
            "group  {}  degree {}  order {}  classes {}",
            self.group.spec, self.group.degree, self.group.order, self.group.class_count
        );
        let profile: Vec<String> = self
            .set
            .order_profile
            .iter()
            .map(|(o, n)| format!("{n}x{o}"))
            .collect();
        let _ = writeln!(
            out,
            "set    {}  size {}  orders [{}]",
            self.set.spec,
            self.set.size,
            profile.join(" ")
        );
        let _ = writeln!(
            out,
            "flags  symmetric {}  normal {}  euler {}",
            yn(f.symmetric),
            yn(f.normal),
            yn(f.euler)
        );
        let _ = writeln!(
            out,
            "graph  components {} of size {}  lemma {}",
            self.components.count,
            self.components.size,
            if self.components.lemma_check { "ok" } else { "FAILED" }
        );
        let v = &self.verdict;
        let method = match v.method {
            Method::CentralCharacters => "central-characters",
            Method::DirectOracle => "direct-oracle",
        };
        let _ = writeln!(
            out,
            "verdict {}  ({}, {})  residual {:.3e}",
            if v.integral { "INTEGRAL" } else { "NOT INTEGRAL" },
            if v.certified { "certified" } else { "numeric" },
            method,
            v.residual
        );
        if let Some(d) = self.cross_check.max_discrepancy {
            let _ = writeln!(out, "oracle max discrepancy {d:.3e}");
        }
        let _ = writeln!(out, "{:>20} {:>8}", "eigenvalue", "mult");
        for e in &self.spectrum {
            let _ = writeln!(out, "{:>20} {:>8}", e.display_value(), e.mult());
        }
        out
    }
}

/// One class-closed, inversion-closed connection set from a census sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub class_index_set: Vec<usize>,
    pub set_size: usize,
    pub normal: bool,
    pub symmetric: bool,
    pub euler: bool,
    pub integral: bool,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub group: GroupInfo,
    /// Nonempty unions of non-identity classes that are not inversion-closed.
    pub skipped_non_symmetric: u128,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Verification(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let yn = |b: bool| if b { "y" } else { "n" };
        let mut out = String::new();
        let _ = writeln!(
            out,
            "group {}  order {}  classes {}  sizes {:?}",
            self.group.spec, self.group.order, self.group.class_count, self.group.class_sizes
        );
        let _ = writeln!(
            out,
            "{:<28} {:>6} {:>5} {:>8} {:>9}",
            "classes", "size", "euler", "integral", "certified"
        );
        for r in &self.rows {
            let classes: Vec<String> = r.class_index_set.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                out,
                "{:<28} {:>6} {:>5} {:>8} {:>9}",
                format!("{{{}}}", classes.join(",")),
                r.set_size,
                yn(r.euler),
                yn(r.integral),
                yn(r.certified)
            );
        }
        let integral = self.rows.iter().filter(|r| r.integral).count();
        let euler = self.rows.iter().filter(|r| r.euler).count();
        let _ = writeln!(
            out,
            "{} rows, {} integral, {} euler, {} non-symmetric unions skipped",
            self.rows.len(),
            integral,
            euler,
            self.skipped_non_symmetric
        );
        out
    }
}

/// Writes to `path`, or to stdout when `path` is `None`.
pub fn write_output(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_formatting() {
        assert_eq!(format_decimal(0.6180339887498949), "0.6180339887");
        assert_eq!(format_decimal(-1e-13), "0.0000000000");
        assert_eq!(format_decimal(-1.618033988749895), "-1.6180339887");
    }

    #[test]
    fn entry_shapes() {
        let exact = EigenvalueJson::from(&SpectrumEntry { value: 3.0, exact: Some(3), mult: 1 });
        assert_eq!(serde_json::to_string(&exact).unwrap(), r#"{"value":3,"mult":1}"#);
        let approx = EigenvalueJson::from(&SpectrumEntry { value: 0.5, exact: None, mult: 2 });
        assert_eq!(
            serde_json::to_string(&approx).unwrap(),
            r#"{"value":"0.5000000000","mult":2,"residual":0.5}"#
        );
        let back: EigenvalueJson = serde_json::from_str(r#"{"value":"0.5000000000","mult":2,"residual":0.5}"#).unwrap();
        assert_eq!(back, approx);
    }
}
