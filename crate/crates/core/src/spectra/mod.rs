//! Cayley graph spectra: the central-character route with an exact
//! integrality certificate, the dense oracle, component analysis and the
//! group-algebra identity check.

mod algebra;
mod certify;
mod characters;
mod charpoly;
mod components;
mod oracle;
mod report;

use crate::classalgebra::{
    class_matrix, conjugacy_classes, structure_constants, ClassData, IntMatrix,
    StructureConstants,
};
use crate::error::{Error, Result};
use crate::permgroup::GroupTable;

pub use algebra::{verify_cor5_identity, GroupAlgebraVector};
pub use certify::{certify_classes, certify_integrality, spectrum_via_central_characters};
pub use characters::{central_characters, CentralCharacterTable, C64};
pub use charpoly::{charpoly_integer, integer_roots, CharPolyZ, IntegerRoots};
pub use components::{components_report, ComponentsReport};
pub use oracle::{adjacency_matrix, spectrum_direct};
pub use report::{max_discrepancy, Certificate, Method, SpectrumEntry, SpectrumReport};

/// Default direct-oracle cap on `|G|`.
pub const DEFAULT_ORACLE_CAP: usize = 1_500;
/// Default absolute eigenvalue tolerance.
pub const DEFAULT_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumOptions {
    /// Absolute tolerance on eigenvalues.
    pub tol: f64,
    /// Eigenvalues closer than `gap_factor · tol` are merged.
    pub gap_factor: f64,
    pub oracle_cap: usize,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            tol: DEFAULT_TOL,
            gap_factor: 10.0,
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }
}

impl SpectrumOptions {
    pub fn min_gap(&self) -> f64 {
        self.gap_factor * self.tol
    }
}

/// A group with its class data, structure constants and central characters,
/// computed once and shared read-only.
#[derive(Clone, Debug)]
pub struct GroupContext {
    pub group: GroupTable,
    pub classes: ClassData,
    pub constants: StructureConstants,
    pub characters: CentralCharacterTable,
}

impl GroupContext {
    pub fn new(group: GroupTable) -> Result<Self> {
        let classes = conjugacy_classes(&group);
        let constants = structure_constants(&group, &classes);
        let characters = central_characters(group.order(), &classes, &constants)?;
        Ok(GroupContext {
            group,
            classes,
            constants,
            characters,
        })
    }

    pub fn class_matrices(&self) -> Vec<IntMatrix> {
        (0..self.classes.count())
            .map(|i| class_matrix(&self.constants, i))
            .collect()
    }
}

/// `B = Σ_{i ∈ classes} M_i`, the matrix of `S̄` on the class-sum basis.
pub fn subset_class_matrix(a: &StructureConstants, classes: &[usize]) -> Result<IntMatrix> {
    if classes.is_empty() {
        return Err(Error::Invalid("class set is empty".into()));
    }
    if classes.contains(&0) {
        return Err(Error::Invalid("class set contains the identity class".into()));
    }
    let k = a.class_count();
    if let Some(&bad) = classes.iter().find(|&&i| i >= k) {
        return Err(Error::Invalid(format!("class index {bad} out of range")));
    }
    classes.iter().try_fold(IntMatrix::zeros(k), |acc, &i| {
        acc.checked_add(&class_matrix(a, i))
            .ok_or_else(|| Error::Verification("class matrix entry overflow".into()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{builtin_group, Family};

    #[test]
    fn sym3_transposition_matrix() {
        let g = builtin_group(Family::Sym, 3, 100).unwrap();
        let ctx = GroupContext::new(g).unwrap();
        let b = subset_class_matrix(&ctx.constants, &[1]).unwrap();
        assert_eq!(b, IntMatrix::from_rows(&[vec![0, 3, 0], vec![1, 0, 2], vec![0, 3, 0]]));
        assert!(subset_class_matrix(&ctx.constants, &[]).is_err());
        assert!(subset_class_matrix(&ctx.constants, &[0, 1]).is_err());
    }

    #[test]
    fn abelian_class_matrix_is_the_adjacency_matrix() {
        let g = builtin_group(Family::Cyc, 6, 100).unwrap();
        let ctx = GroupContext::new(g).unwrap();
        let classes = [1, ctx.classes.inverse_class(1)];
        let b = subset_class_matrix(&ctx.constants, &classes).unwrap();
        let s = crate::subsets::class_union(&ctx.classes, &classes);
        let adj = adjacency_matrix(&ctx.group, &s, 100).unwrap();
        // classes are singletons {x_i}, so the class basis is the element basis
        for r in 0..6 {
            for j in 0..6 {
                let x = ctx.classes.rep(j);
                let y = ctx.classes.rep(r);
                assert_eq!(b[(r, j)] as f64, adj[(x, y)]);
            }
        }
    }
}
