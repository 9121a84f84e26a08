//! Commands behind the `cayint` binary: `analyze`, `census` and `verify-cor5`.

mod report;

use num_integer::Integer;
use rayon::prelude::*;

use crate::classalgebra::power_class_map;
use crate::error::{Error, Result};
use crate::permgroup::{GroupSpec, DEFAULT_ORDER_CAP};
use crate::spectra::{
    adjacency_matrix, certify_classes, certify_integrality, components_report, max_discrepancy,
    spectrum_direct, GroupContext, Method, SpectrumOptions,
};
use crate::subsets::{analyze_subset, resolve_set_spec};

pub use report::{
    write_output, AnalysisReport, CensusReport, CensusRow, ComponentsInfo, CrossCheck,
    EigenvalueJson, GroupInfo, SetInfo, Verdict,
};

/// Default limit on inversion-closed class blocks swept by `census`.
pub const DEFAULT_MAX_BLOCKS: usize = 20;

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub spectrum: SpectrumOptions,
    pub order_cap: usize,
    pub run_oracle: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            spectrum: SpectrumOptions::default(),
            order_cap: DEFAULT_ORDER_CAP,
            run_oracle: true,
        }
    }
}

fn group_info(spec: &GroupSpec, ctx: &GroupContext) -> GroupInfo {
    GroupInfo {
        spec: spec.to_string(),
        degree: ctx.group.degree(),
        order: ctx.group.order(),
        class_count: ctx.classes.count(),
        class_sizes: ctx.classes.sizes(),
    }
}

pub fn build_context(group_spec: &str, order_cap: usize) -> Result<(GroupSpec, GroupContext)> {
    let spec: GroupSpec = group_spec.parse()?;
    let ctx = GroupContext::new(spec.build(order_cap)?)?;
    Ok((spec, ctx))
}

/// Classification, certificate, component analysis and (when the group is
/// small enough) the dense-oracle cross-check for one connection set.
pub fn cmd_analyze(group_spec: &str, set_spec: &str, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let (spec, ctx) = build_context(group_spec, opts.order_cap)?;
    analyze_in(&spec, &ctx, set_spec, opts)
}

pub fn analyze_in(
    spec: &GroupSpec,
    ctx: &GroupContext,
    set_spec: &str,
    opts: &AnalyzeOptions,
) -> Result<AnalysisReport> {
    let sopts = &opts.spectrum;
    let s = resolve_set_spec(set_spec, &ctx.group, &ctx.classes)?;
    let flags = analyze_subset(&ctx.group, &ctx.classes, &s);
    let spectrum = certify_integrality(ctx, &s, sopts)?;
    let components = components_report(ctx, &s, &spectrum, sopts)?;
    spectrum.check_invariants(ctx.group.order(), s.len(), Some(components.count), sopts.tol)?;
    if !components.lemma_check {
        return Err(Error::Verification(format!(
            "component lemma check failed (max discrepancy {:e})",
            components.max_discrepancy
        )));
    }

    let oracle_applicable = spectrum.method == Method::CentralCharacters
        && opts.run_oracle
        && ctx.group.order() <= sopts.oracle_cap;
    let cross_check = if oracle_applicable {
        let direct = spectrum_direct(adjacency_matrix(&ctx.group, &s, sopts.oracle_cap)?, sopts)?;
        let gap = max_discrepancy(&spectrum, &direct);
        if gap > sopts.tol {
            return Err(Error::Verification(format!(
                "central-character and direct spectra differ by {gap:e}"
            )));
        }
        CrossCheck { oracle_ran: true, max_discrepancy: Some(gap) }
    } else {
        CrossCheck { oracle_ran: false, max_discrepancy: None }
    };

    let (verdict, entries) = AnalysisReport::spectrum_from(&spectrum);
    let report = AnalysisReport {
        group: group_info(spec, ctx),
        set: SetInfo {
            spec: set_spec.to_string(),
            size: s.len(),
            order_profile: flags.order_profile.clone(),
        },
        flags,
        components: ComponentsInfo::from(&components),
        verdict,
        spectrum: entries,
        cross_check,
    };
    report.validate(sopts.tol)?;
    Ok(report)
}

/// Inversion-closed blocks `{i, ι(i)}` of non-identity classes.
fn inversion_blocks(ctx: &GroupContext) -> Vec<Vec<usize>> {
    let c = &ctx.classes;
    (1..c.count())
        .filter(|&i| i <= c.inverse_class(i))
        .map(|i| {
            let j = c.inverse_class(i);
            if i == j { vec![i] } else { vec![i, j] }
        })
        .collect()
}

/// Euler test on class representatives: for a normal set it suffices that
/// every coprime power of each representative lands in a chosen class.
fn classes_are_euler(ctx: &GroupContext, classes: &[usize]) -> bool {
    classes.iter().all(|&i| {
        let m = ctx.group.element_order(ctx.classes.rep(i));
        (1..m.max(2))
            .filter(|k| k.gcd(&m) == 1)
            .all(|k| classes.contains(&power_class_map(&ctx.group, &ctx.classes, i, k as i64)))
    })
}

/// Sweeps every nonempty inversion-closed union of non-identity classes,
/// certifying each. A Euler row that is not integral aborts with a
/// verification error.
pub fn census_in(spec: &GroupSpec, ctx: &GroupContext, max_blocks: usize) -> Result<CensusReport> {
    let blocks = inversion_blocks(ctx);
    if blocks.len() > max_blocks {
        return Err(Error::CapExceeded {
            what: "inversion-closed class blocks",
            value: blocks.len(),
            cap: max_blocks,
        });
    }
    let rows = (1u64..1 << blocks.len())
        .into_par_iter()
        .map(|mask| {
            let mut classes: Vec<usize> = blocks
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .flat_map(|(_, blk)| blk.iter().copied())
                .collect();
            classes.sort_unstable();
            let cert = certify_classes(ctx, &classes)?;
            let euler = classes_are_euler(ctx, &classes);
            let row = CensusRow {
                set_size: classes.iter().map(|&i| ctx.classes.size(i)).sum(),
                class_index_set: classes,
                normal: true,
                symmetric: true,
                euler,
                integral: cert.fully_split(),
                certified: true,
            };
            if row.euler && !row.integral {
                return Err(Error::Verification(format!(
                    "normal Euler set with classes {:?} has a non-integral spectrum",
                    row.class_index_set
                )));
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    let non_identity = (ctx.classes.count() - 1) as u32;
    let all_unions = 2u128.saturating_pow(non_identity).saturating_sub(1);
    Ok(CensusReport {
        group: group_info(spec, ctx),
        skipped_non_symmetric: all_unions - (rows.len() as u128),
        rows,
    })
}

pub fn cmd_census(group_spec: &str, order_cap: usize, max_blocks: usize) -> Result<CensusReport> {
    let (spec, ctx) = build_context(group_spec, order_cap)?;
    census_in(&spec, &ctx, max_blocks)
}
