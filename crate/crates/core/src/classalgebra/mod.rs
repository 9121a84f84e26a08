//! Conjugacy classes and the integer structure constants of the class algebra.
//!
//! With class sums `K̄_i`, the center of the group algebra has the basis
//! `K̄_0 … K̄_{k-1}` and multiplication `K̄_i K̄_j = Σ_r a[i][j][r] K̄_r`.

mod matrix;

use rayon::prelude::*;

use crate::permgroup::GroupTable;

pub use matrix::IntMatrix;

/// Conjugacy class partition of a [`GroupTable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    inverse_class: Vec<usize>,
}

impl ClassData {
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Least element index in the class.
    pub fn rep(&self, class: usize) -> usize {
        self.members[class][0]
    }

    pub fn size(&self, class: usize) -> usize {
        self.members[class].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    /// Element indices of the class, ascending.
    pub fn members(&self, class: usize) -> &[usize] {
        &self.members[class]
    }

    /// `ι(i)`: the class of inverses of elements of class `i`.
    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }
}

/// Orbits of the conjugation action, numbered by least element index.
pub fn conjugacy_classes(g: &GroupTable) -> ClassData {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut members = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let class = members.len();
        class_of[start] = class;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for &s in g.generators() {
                let y = g.conjugate(x, s);
                if class_of[y] == usize::MAX {
                    class_of[y] = class;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        members.push(orbit);
    }
    let inverse_class = members
        .iter()
        .map(|m| class_of[g.inv(m[0])])
        .collect();
    ClassData {
        class_of,
        members,
        inverse_class,
    }
}

/// Class of `rep(class)^k`; `k` may be negative.
pub fn power_class_map(g: &GroupTable, c: &ClassData, class: usize, k: i64) -> usize {
    c.class_of(g.pow(c.rep(class), k))
}

/// `a[i][j][r] = #{(x, y) ∈ K_i × K_j : xy = z}` for a fixed `z ∈ K_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    k: usize,
    data: Vec<u64>,
}

impl StructureConstants {
    pub fn class_count(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize, r: usize) -> u64 {
        self.data[(i * self.k + j) * self.k + r]
    }
}

/// One `O(|G|)` sweep per target class: for the representative `z` of class
/// `r`, every `x ∈ G` contributes the pair `(x, x⁻¹z)`.
pub fn structure_constants(g: &GroupTable, c: &ClassData) -> StructureConstants {
    let k = c.count();
    let slices: Vec<Vec<u64>> = (0..k)
        .into_par_iter()
        .map(|r| {
            let z = c.rep(r);
            let mut slice = vec![0u64; k * k];
            for x in 0..g.order() {
                let y = g.mul(g.inv(x), z);
                let cell = &mut slice[c.class_of(x) * k + c.class_of(y)];
                *cell = cell.checked_add(1).expect("structure constant overflow");
            }
            slice
        })
        .collect();
    let mut data = vec![0u64; k * k * k];
    for (r, slice) in slices.iter().enumerate() {
        for ij in 0..k * k {
            data[ij * k + r] = slice[ij];
        }
    }
    StructureConstants { k, data }
}

/// Matrix of left multiplication by `K̄_i` on the class-sum basis:
/// entry `(r, j)` is `a[i][j][r]`.
pub fn class_matrix(a: &StructureConstants, i: usize) -> IntMatrix {
    let k = a.class_count();
    let mut m = IntMatrix::zeros(k);
    for r in 0..k {
        for j in 0..k {
            m[(r, j)] = i64::try_from(a.get(i, j, r)).expect("structure constant exceeds i64");
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{builtin_group, Family, Permutation};

    fn group(f: Family, n: usize) -> GroupTable {
        builtin_group(f, n, 10_000).unwrap()
    }

    fn class_of_perm(g: &GroupTable, c: &ClassData, text: &str) -> usize {
        let p = Permutation::parse(text, g.degree()).unwrap();
        c.class_of(g.index_of(&p).unwrap())
    }

    fn sorted_sizes(c: &ClassData) -> Vec<usize> {
        let mut s = c.sizes();
        s.sort_unstable();
        s
    }

    /// Orbits by conjugating with every element, not just generators.
    fn brute_force_classes(g: &GroupTable) -> Vec<Vec<usize>> {
        let mut seen = vec![false; g.order()];
        let mut out = Vec::new();
        for x in 0..g.order() {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..g.order()).map(|h| g.conjugate(x, h)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit);
        }
        out
    }

    #[test]
    fn class_examples() {
        let c = conjugacy_classes(&group(Family::Cyc, 5));
        assert_eq!(c.sizes(), vec![1; 5]);
        let c = conjugacy_classes(&group(Family::Sym, 4));
        assert_eq!(sorted_sizes(&c), vec![1, 3, 6, 6, 8]);
        let c = conjugacy_classes(&group(Family::Alt, 4));
        assert_eq!(sorted_sizes(&c), vec![1, 3, 4, 4]);
    }

    #[test]
    fn classes_match_brute_force() {
        for (f, n) in [(Family::Sym, 4), (Family::Alt, 5), (Family::Dih, 6), (Family::Alt, 4)] {
            let g = group(f, n);
            let c = conjugacy_classes(&g);
            let brute = brute_force_classes(&g);
            assert_eq!(brute.len(), c.count());
            for (i, orbit) in brute.iter().enumerate() {
                assert_eq!(c.members(i), orbit.as_slice());
            }
        }
    }

    #[test]
    fn class_data_invariants() {
        for (f, n) in [(Family::Sym, 5), (Family::Alt, 4), (Family::Cyc, 9), (Family::Dih, 7)] {
            let g = group(f, n);
            let c = conjugacy_classes(&g);
            assert_eq!(c.sizes().iter().sum::<usize>(), g.order());
            assert_eq!(c.members(0), &[0]);
            for i in 0..c.count() {
                let j = c.inverse_class(i);
                assert_eq!(c.inverse_class(j), i);
                assert_eq!(c.size(i), c.size(j));
            }
        }
    }

    #[test]
    fn power_maps() {
        let g = group(Family::Alt, 4);
        let c = conjugacy_classes(&g);
        for k in [-3, 0, 1, 2, 7] {
            assert_eq!(power_class_map(&g, &c, 0, k), 0);
        }
        let k123 = class_of_perm(&g, &c, "(1 2 3)");
        let k132 = class_of_perm(&g, &c, "(1 3 2)");
        assert_ne!(k123, k132);
        assert_eq!(power_class_map(&g, &c, k123, 2), k132);
        assert_eq!(power_class_map(&g, &c, k123, -1), k132);
        assert_eq!(c.inverse_class(k123), k132);

        let g = group(Family::Sym, 4);
        let c = conjugacy_classes(&g);
        let four = class_of_perm(&g, &c, "(1 2 3 4)");
        let double = class_of_perm(&g, &c, "(1 3)(2 4)");
        assert_eq!(power_class_map(&g, &c, four, 2), double);
    }

    #[test]
    fn power_map_is_independent_of_representative() {
        let g = group(Family::Sym, 5);
        let c = conjugacy_classes(&g);
        for i in 0..c.count() {
            for k in -4..=6 {
                let expected = power_class_map(&g, &c, i, k);
                for &x in c.members(i) {
                    assert_eq!(c.class_of(g.pow(x, k)), expected);
                }
            }
        }
    }

    #[test]
    fn sym3_constants() {
        let g = group(Family::Sym, 3);
        let c = conjugacy_classes(&g);
        let a = structure_constants(&g, &c);
        let t = class_of_perm(&g, &c, "(1 2)");
        let r = class_of_perm(&g, &c, "(1 2 3)");
        // canonical numbering puts transpositions before 3-cycles here
        assert_eq!((t, r), (1, 2));
        assert_eq!(a.get(t, t, 0), 3);
        assert_eq!(a.get(t, t, t), 0);
        assert_eq!(a.get(t, t, r), 3);
        assert_eq!((a.get(t, r, 0), a.get(t, r, t), a.get(t, r, r)), (0, 2, 0));
        let m1 = class_matrix(&a, t);
        assert_eq!(m1, IntMatrix::from_rows(&[vec![0, 3, 0], vec![1, 0, 2], vec![0, 3, 0]]));
        assert_eq!(class_matrix(&a, 0), IntMatrix::identity(3));
    }

    #[test]
    fn abelian_constants_are_the_multiplication_table() {
        let g = group(Family::Cyc, 6);
        let c = conjugacy_classes(&g);
        let a = structure_constants(&g, &c);
        for i in 0..6 {
            for j in 0..6 {
                for r in 0..6 {
                    let expected = u64::from(g.mul(c.rep(i), c.rep(j)) == c.rep(r));
                    assert_eq!(a.get(i, j, r), expected);
                }
            }
        }
    }

    /// Pair enumeration over `K_i × K_j` for every `z` in `K_r`.
    fn brute_force_constant(g: &GroupTable, c: &ClassData, i: usize, j: usize, z: usize) -> u64 {
        let mut n = 0;
        for &x in c.members(i) {
            for &y in c.members(j) {
                if g.mul(x, y) == z {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn constants_match_pair_enumeration_for_every_target() {
        for (f, n) in [(Family::Sym, 4), (Family::Alt, 4), (Family::Dih, 5)] {
            let g = group(f, n);
            let c = conjugacy_classes(&g);
            let a = structure_constants(&g, &c);
            for i in 0..c.count() {
                for j in 0..c.count() {
                    for r in 0..c.count() {
                        for &z in c.members(r) {
                            assert_eq!(a.get(i, j, r), brute_force_constant(&g, &c, i, j, z));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn constant_identities() {
        for (f, n) in [(Family::Sym, 5), (Family::Alt, 5), (Family::Dih, 8), (Family::Cyc, 10)] {
            let g = group(f, n);
            let c = conjugacy_classes(&g);
            let a = structure_constants(&g, &c);
            let k = c.count();
            for i in 0..k {
                for j in 0..k {
                    let weighted: u64 = (0..k).map(|r| a.get(i, j, r) * c.size(r) as u64).sum();
                    assert_eq!(weighted, (c.size(i) * c.size(j)) as u64);
                    let expected0 = if j == c.inverse_class(i) { c.size(i) as u64 } else { 0 };
                    assert_eq!(a.get(i, j, 0), expected0);
                    assert_eq!(a.get(0, i, j), u64::from(i == j));
                    for r in 0..k {
                        assert_eq!(a.get(i, j, r), a.get(j, i, r));
                    }
                }
            }
        }
    }

    #[test]
    fn class_matrices_commute() {
        for (f, n) in [(Family::Sym, 5), (Family::Alt, 5), (Family::Dih, 7)] {
            let g = group(f, n);
            let c = conjugacy_classes(&g);
            let a = structure_constants(&g, &c);
            let ms: Vec<IntMatrix> = (0..c.count()).map(|i| class_matrix(&a, i)).collect();
            for x in &ms {
                for y in &ms {
                    assert_eq!(x.checked_mul(y).unwrap(), y.checked_mul(x).unwrap());
                }
            }
        }
    }
}
