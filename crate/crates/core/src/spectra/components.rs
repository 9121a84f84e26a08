use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permgroup::generate_group;
use crate::subsets::{generated_subgroup, ElementSet};

use super::certify::certify_integrality;
use super::oracle::check_connection_set;
use super::report::{max_discrepancy, SpectrumReport};
use super::{GroupContext, SpectrumOptions};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentsReport {
    /// `|G : ⟨S⟩|`.
    pub count: usize,
    /// `|⟨S⟩|`.
    pub size: usize,
    /// Every component has `|⟨S⟩|` vertices, and the spectrum of `Cay(G, S)`
    /// is that of `Cay(⟨S⟩, S)` with all multiplicities scaled by `count`.
    pub lemma_check: bool,
    /// Largest eigenvalue gap found while comparing the two spectra.
    pub max_discrepancy: f64,
}

fn component_sizes(ctx: &GroupContext, s: &ElementSet) -> Vec<usize> {
    let g = &ctx.group;
    let mut comp = vec![usize::MAX; g.order()];
    let mut sizes = Vec::new();
    for start in 0..g.order() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        comp[start] = id;
        let mut queue = vec![start];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &t in s {
                let y = g.mul(x, t);
                if comp[y] == usize::MAX {
                    comp[y] = id;
                    queue.push(y);
                }
            }
            i += 1;
        }
        sizes.push(queue.len());
    }
    sizes
}

/// `true` when `b` scaled by `n` equals `a`: exactly when both are certified
/// integral, otherwise within `tol` on the expanded eigenvalue lists.
fn is_replicated(a: &SpectrumReport, b: &SpectrumReport, n: usize, tol: f64) -> (bool, f64) {
    let mut scaled = b.clone();
    for e in &mut scaled.pairs {
        e.mult *= n;
    }
    let gap = max_discrepancy(a, &scaled);
    if a.certified && a.integral && b.certified && b.integral {
        let exact = a.pairs.len() == scaled.pairs.len()
            && a.pairs.iter().zip(&scaled.pairs).all(|(x, y)| x.exact == y.exact && x.mult == y.mult);
        (exact, gap)
    } else {
        (gap <= tol, gap)
    }
}

/// Component count and size of `Cay(G, S)`, with the spectrum of the whole
/// graph (`spectrum`, as returned by [`certify_integrality`]) checked against
/// the spectrum of `Cay(⟨S⟩, S)`.
pub fn components_report(
    ctx: &GroupContext,
    s: &ElementSet,
    spectrum: &SpectrumReport,
    opts: &SpectrumOptions,
) -> Result<ComponentsReport> {
    check_connection_set(&ctx.group, s)?;
    let g = &ctx.group;
    let h = generated_subgroup(g, s, g.order())?;
    let size = h.len();
    if !g.order().is_multiple_of(size) {
        return Err(Error::Verification(format!(
            "|<S>| = {size} does not divide |G| = {}",
            g.order()
        )));
    }
    let count = g.order() / size;
    let sizes_ok = {
        let sizes = component_sizes(ctx, s);
        sizes.len() == count && sizes.iter().all(|&n| n == size)
    };

    let gens: Vec<_> = s.iter().map(|&x| g.element(x).clone()).collect();
    let sub = GroupContext::new(generate_group(&gens, g.order())?)?;
    let s_in_sub: ElementSet = gens
        .iter()
        .map(|p| sub.group.index_of(p).expect("generator lies in the generated group"))
        .collect();
    let sub_spectrum = certify_integrality(&sub, &s_in_sub, opts)?;
    let (replicated, gap) = is_replicated(spectrum, &sub_spectrum, count, opts.tol);

    Ok(ComponentsReport {
        count,
        size,
        lemma_check: sizes_ok && replicated,
        max_discrepancy: gap,
    })
}
