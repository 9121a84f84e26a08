use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::subsets::{analyze_subset, ElementSet};

use super::charpoly::{charpoly_integer, integer_roots};
use super::oracle::{adjacency_matrix, check_connection_set, spectrum_direct};
use super::report::{cluster, Certificate, Method, SpectrumEntry, SpectrumReport};
use super::{subset_class_matrix, CentralCharacterTable, GroupContext, SpectrumOptions};

/// `λ_χ = Σ_{i ∈ classes} ω_χ(K̄_i)` with multiplicity `Σ χ(1)²` over
/// characters sharing the value. Numeric only; see [`certify_integrality`]
/// for the exact path.
pub fn spectrum_via_central_characters(
    table: &CentralCharacterTable,
    classes: &[usize],
    opts: &SpectrumOptions,
) -> Result<SpectrumReport> {
    let values = character_eigenvalues(table, classes, opts)?;
    let clusters = cluster(
        values
            .iter()
            .zip(table.degrees())
            .map(|(&v, &d)| (v, (d * d) as usize))
            .collect(),
        opts.min_gap(),
    );
    let pairs = clusters
        .into_iter()
        .map(|(value, mult)| SpectrumEntry { value, exact: None, mult })
        .collect();
    Ok(SpectrumReport::numeric(pairs, Method::CentralCharacters, opts.tol))
}

/// Real eigenvalue per character; complex values mean `S` was not symmetric.
fn character_eigenvalues(
    table: &CentralCharacterTable,
    classes: &[usize],
    opts: &SpectrumOptions,
) -> Result<Vec<f64>> {
    (0..table.len())
        .map(|chi| {
            let w = table.eigenvalue(chi, classes);
            if w.im.abs() > opts.tol {
                Err(Error::Invalid(format!(
                    "class union {classes:?} has a non-real eigenvalue {w}; it is not symmetric"
                )))
            } else {
                Ok(w.re)
            }
        })
        .collect()
}

/// Exact certificate for a union of classes: characteristic polynomial of
/// `B = Σ M_i` and its integer roots.
pub fn certify_classes(ctx: &GroupContext, classes: &[usize]) -> Result<Certificate> {
    let b = subset_class_matrix(&ctx.constants, classes)?;
    let charpoly = charpoly_integer(&b);
    let roots = integer_roots(&charpoly);
    Ok(Certificate { charpoly, roots })
}

/// Normal `S`: exact verdict from the class-matrix characteristic polynomial,
/// multiplicities from the central characters. Any other `S`: numeric
/// verdict from the dense oracle.
pub fn certify_integrality(
    ctx: &GroupContext,
    s: &ElementSet,
    opts: &SpectrumOptions,
) -> Result<SpectrumReport> {
    check_connection_set(&ctx.group, s)?;
    let analysis = analyze_subset(&ctx.group, &ctx.classes, s);
    let Some(classes) = analysis.class_indices else {
        return spectrum_direct(adjacency_matrix(&ctx.group, s, opts.oracle_cap)?, opts);
    };
    let certificate = certify_classes(ctx, &classes)?;
    let values = character_eigenvalues(&ctx.characters, &classes, opts)?;

    // Snap every λ_χ that lies within tolerance of a certified integer root.
    let mut exact_counts: BTreeMap<i64, usize> = BTreeMap::new();
    let mut exact_mults: BTreeMap<i64, usize> = BTreeMap::new();
    let mut inexact = Vec::new();
    for (chi, &v) in values.iter().enumerate() {
        let d2 = (ctx.characters.degree(chi).pow(2)) as usize;
        let nearest = certificate
            .roots
            .roots
            .iter()
            .map(|&(r, _)| r)
            .min_by(|a, b| (*a as f64 - v).abs().total_cmp(&(*b as f64 - v).abs()));
        match nearest {
            Some(r) if (r as f64 - v).abs() <= opts.tol => {
                *exact_counts.entry(r).or_default() += 1;
                *exact_mults.entry(r).or_default() += d2;
            }
            _ => inexact.push((v, d2)),
        }
    }
    // Each integer root of det(xI − B) is ω_χ(S̄) for exactly as many χ as its multiplicity.
    for &(r, m) in &certificate.roots.roots {
        let found = exact_counts.get(&r).copied().unwrap_or(0);
        if found != m {
            return Err(Error::Verification(format!(
                "eigenvalue {r} has multiplicity {m} in the characteristic polynomial \
                 but {found} central characters take that value"
            )));
        }
    }
    if certificate.fully_split() && !inexact.is_empty() {
        return Err(Error::Verification(format!(
            "characteristic polynomial splits over Z but {} central character values are not integers",
            inexact.len()
        )));
    }

    let mut pairs: Vec<SpectrumEntry> = exact_mults
        .into_iter()
        .map(|(r, mult)| SpectrumEntry { value: r as f64, exact: Some(r), mult })
        .collect();
    pairs.extend(
        cluster(inexact, opts.min_gap())
            .into_iter()
            .map(|(value, mult)| SpectrumEntry { value, exact: None, mult }),
    );
    pairs.sort_by(|a, b| b.value.total_cmp(&a.value));
    let residual = pairs
        .iter()
        .map(SpectrumEntry::distance_to_integer)
        .fold(0.0, f64::max);
    Ok(SpectrumReport {
        pairs,
        method: Method::CentralCharacters,
        certified: true,
        integral: certificate.fully_split(),
        residual,
        certificate: Some(certificate),
    })
}
