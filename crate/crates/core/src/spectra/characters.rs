//! Central characters from a simultaneous eigendecomposition of the class matrices.
//!
//! With `D = diag(|K_r|)` the class matrices satisfy `D M_i = M_ι(i)ᵀ D`, so
//! `N_i = D^{1/2} M_i D^{-1/2}` are commuting normal matrices with
//! `N_iᵀ = N_ι(i)`. A combination `Σ c_i N_i` with `c_ι(i) = conj(c_i)` is
//! Hermitian, and for generic `c` its eigenvectors are exactly the common
//! eigenvectors of all `N_i`, one per irreducible character. The eigenvalue
//! of `N_i` on the eigenvector of `χ` is `ω_χ(K̄_i)`.

use nalgebra::{Complex, DMatrix, DVector, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classalgebra::{ClassData, StructureConstants};
use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

const MAX_ATTEMPTS: u64 = 5;
const VERIFY_TOL: f64 = 1e-8;
const DEGREE_TOL: f64 = 1e-6;

/// `ω_χ(K̄_i)` for every irreducible `χ` (rows) and class `i` (columns),
/// with the character degrees `χ(1)`.
#[derive(Clone, Debug)]
pub struct CentralCharacterTable {
    omega: Vec<Vec<C64>>,
    degrees: Vec<u64>,
    homomorphism_residual: f64,
}

impl CentralCharacterTable {
    /// Number of irreducible characters (= number of classes).
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn row(&self, chi: usize) -> &[C64] {
        &self.omega[chi]
    }

    pub fn omega(&self, chi: usize, class: usize) -> C64 {
        self.omega[chi][class]
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.degrees[chi]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Largest relative defect of `ω_i ω_j = Σ_r a_ijr ω_r` over all rows.
    pub fn homomorphism_residual(&self) -> f64 {
        self.homomorphism_residual
    }

    /// `ω_χ(S̄)` for `S` the union of `classes`.
    pub fn eigenvalue(&self, chi: usize, classes: &[usize]) -> C64 {
        classes.iter().map(|&i| self.omega[chi][i]).sum()
    }
}

fn hermitian_combination(
    c: &ClassData,
    a: &StructureConstants,
    rng: &mut ChaCha8Rng,
) -> (DMatrix<C64>, Vec<DMatrix<C64>>) {
    let k = c.count();
    let sizes: Vec<f64> = c.sizes().iter().map(|&s| s as f64).collect();
    let mut coeff = vec![C64::new(0.0, 0.0); k];
    for i in 0..k {
        let j = c.inverse_class(i);
        if j == i {
            coeff[i] = C64::new(rng.gen_range(1.0..2.0), 0.0);
        } else if i < j {
            let z = C64::new(rng.gen_range(1.0..2.0), rng.gen_range(1.0..2.0));
            coeff[i] = z;
            coeff[j] = z.conj();
        }
    }
    let normalised: Vec<DMatrix<C64>> = (0..k)
        .map(|i| {
            DMatrix::from_fn(k, k, |r, j| {
                C64::new(a.get(i, j, r) as f64 * (sizes[r] / sizes[j]).sqrt(), 0.0)
            })
        })
        .collect();
    let mut h = DMatrix::zeros(k, k);
    for (ci, ni) in coeff.iter().zip(&normalised) {
        h += ni * *ci;
    }
    // exact symmetrisation of round-off
    let h = (&h + h.adjoint()) * C64::new(0.5, 0.0);
    (h, normalised)
}

/// One attempt; `None` when the random combination failed to separate characters.
fn try_decompose(
    c: &ClassData,
    a: &StructureConstants,
    seed: u64,
) -> Result<Option<Vec<Vec<C64>>>> {
    let k = c.count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (h, normalised) = hermitian_combination(c, a, &mut rng);
    let eig = SymmetricEigen::try_new(h, f64::EPSILON, 100_000)
        .ok_or_else(|| Error::Verification("Hermitian eigensolver did not converge".into()))?;
    let mut rows = Vec::with_capacity(k);
    for col in 0..k {
        let u: DVector<C64> = eig.eigenvectors.column(col).into_owned();
        let norm2 = u.norm_squared();
        let mut row = Vec::with_capacity(k);
        for (i, ni) in normalised.iter().enumerate() {
            let nu = ni * &u;
            let w = u.dotc(&nu) / C64::new(norm2, 0.0);
            let defect = (&nu - &u * w).norm() / norm2.sqrt();
            if defect > VERIFY_TOL * (c.size(i) as f64).max(1.0) {
                return Ok(None);
            }
            row.push(w);
        }
        rows.push(row);
    }
    Ok(Some(rows))
}

fn homomorphism_defect(row: &[C64], c: &ClassData, a: &StructureConstants) -> f64 {
    let k = row.len();
    let mut worst = 0f64;
    for i in 0..k {
        for j in 0..k {
            let rhs: C64 = (0..k).map(|r| row[r] * a.get(i, j, r) as f64).sum();
            let scale = (c.size(i) * c.size(j)) as f64;
            worst = worst.max((row[i] * row[j] - rhs).norm() / scale);
        }
    }
    worst
}

/// `χ(1) = sqrt(|G| / Σ_i |ω_i|² / |K_i|)`, from first orthogonality.
fn degree_of(row: &[C64], c: &ClassData, order: usize) -> Result<u64> {
    let denom: f64 = row
        .iter()
        .enumerate()
        .map(|(i, w)| w.norm_sqr() / c.size(i) as f64)
        .sum();
    let d = (order as f64 / denom).sqrt();
    let rounded = d.round();
    if rounded < 1.0 || (d - rounded).abs() > DEGREE_TOL {
        return Err(Error::Verification(format!(
            "character degree {d} is not a positive integer"
        )));
    }
    Ok(rounded as u64)
}

/// Rows sorted by degree, then by the rounded values of `ω`; the trivial
/// character comes first.
pub fn central_characters(
    order: usize,
    c: &ClassData,
    a: &StructureConstants,
) -> Result<CentralCharacterTable> {
    let mut rows = None;
    for attempt in 0..MAX_ATTEMPTS {
        if let Some(r) = try_decompose(c, a, 0x5eed_0000 + attempt)? {
            rows = Some(r);
            break;
        }
    }
    let rows = rows.ok_or_else(|| {
        Error::Verification(format!(
            "random class-matrix combination degenerate after {MAX_ATTEMPTS} attempts"
        ))
    })?;

    let mut residual = 0f64;
    let mut table: Vec<(u64, Vec<C64>)> = Vec::with_capacity(rows.len());
    for row in rows {
        residual = residual.max(homomorphism_defect(&row, c, a));
        table.push((degree_of(&row, c, order)?, row));
    }
    if residual > VERIFY_TOL {
        return Err(Error::Verification(format!(
            "central characters violate the homomorphism property (residual {residual:e})"
        )));
    }
    let sum_sq: u64 = table.iter().map(|(d, _)| d * d).sum();
    if sum_sq != order as u64 {
        return Err(Error::Verification(format!(
            "sum of squared degrees {sum_sq} differs from |G| = {order}"
        )));
    }
    let key = |row: &[C64]| -> Vec<(i64, i64)> {
        row.iter()
            .map(|w| (-(w.re * 1e6).round() as i64, -(w.im * 1e6).round() as i64))
            .collect()
    };
    table.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| key(&x.1).cmp(&key(&y.1))));
    let (degrees, omega) = table.into_iter().unzip();
    Ok(CentralCharacterTable {
        omega,
        degrees,
        homomorphism_residual: residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classalgebra::{conjugacy_classes, structure_constants};
    use crate::permgroup::{builtin_group, Family};

    fn table(f: Family, n: usize) -> (CentralCharacterTable, ClassData) {
        let g = builtin_group(f, n, 10_000).unwrap();
        let c = conjugacy_classes(&g);
        let a = structure_constants(&g, &c);
        (central_characters(g.order(), &c, &a).unwrap(), c)
    }

    fn close(w: C64, re: f64, im: f64) -> bool {
        (w.re - re).abs() < 1e-9 && (w.im - im).abs() < 1e-9
    }

    #[test]
    fn sym3() {
        // classes: identity, transpositions, 3-cycles
        let (t, _) = table(Family::Sym, 3);
        let expected = [([1.0, 3.0, 2.0], 1), ([1.0, -3.0, 2.0], 1), ([1.0, 0.0, -1.0], 2)];
        assert_eq!(t.degrees(), &[1, 1, 2]);
        for (chi, (vals, d)) in expected.iter().enumerate() {
            assert_eq!(t.degree(chi), *d);
            for (i, v) in vals.iter().enumerate() {
                assert!(close(t.omega(chi, i), *v, 0.0), "chi {chi} class {i}: {}", t.omega(chi, i));
            }
        }
    }

    #[test]
    fn cyc3_has_cube_roots() {
        let (t, _) = table(Family::Cyc, 3);
        assert_eq!(t.degrees(), &[1, 1, 1]);
        let s = 3f64.sqrt() / 2.0;
        for chi in 0..3 {
            for i in 0..3 {
                let w = t.omega(chi, i);
                assert!((w.norm() - 1.0).abs() < 1e-9);
                assert!((w.powu(3) - C64::new(1.0, 0.0)).norm() < 1e-9);
            }
        }
        let nontrivial: Vec<C64> = (0..3).map(|chi| t.omega(chi, 1)).collect();
        assert!(nontrivial.iter().any(|&w| close(w, -0.5, s)));
        assert!(nontrivial.iter().any(|&w| close(w, -0.5, -s)));
    }

    #[test]
    fn sym4_degrees() {
        let (t, _) = table(Family::Sym, 4);
        assert_eq!(t.degrees(), &[1, 1, 2, 3, 3]);
    }

    #[test]
    fn table_invariants() {
        for (f, n, order) in [
            (Family::Sym, 5, 120),
            (Family::Alt, 5, 60),
            (Family::Alt, 4, 12),
            (Family::Dih, 8, 16),
            (Family::Cyc, 12, 12),
            (Family::Sym, 6, 720),
        ] {
            let (t, c) = table(f, n);
            assert_eq!(t.len(), c.count());
            assert!(t.homomorphism_residual() < 1e-8);
            assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), order);
            for chi in 0..t.len() {
                assert!(close(t.omega(chi, 0), 1.0, 0.0));
            }
            // trivial character first
            for i in 0..c.count() {
                assert!(close(t.omega(0, i), c.size(i) as f64, 0.0));
            }
        }
    }
}
