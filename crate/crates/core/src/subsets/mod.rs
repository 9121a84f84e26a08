//! Connection sets: classification, closures and the set-spec language.

mod spec;

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::classalgebra::ClassData;
use crate::error::{Error, Result};
use crate::permgroup::GroupTable;

pub use spec::resolve_set_spec;

/// A subset of a [`GroupTable`], as element indices.
pub type ElementSet = BTreeSet<usize>;

/// Euler's totient from the prime factorization `m = Π p^α`:
/// `φ(m) = Π p^(α−1)(p−1)`.
pub fn euler_phi(m: u64) -> u64 {
    assert!(m >= 1, "euler_phi needs m >= 1");
    let mut rest = m;
    let mut phi = 1;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut pk = 1;
            while rest.is_multiple_of(p) {
                rest /= p;
                pk *= p;
            }
            phi *= pk / p * (p - 1);
        }
        p += 1;
    }
    if rest > 1 {
        phi *= rest - 1;
    }
    phi
}

/// Flags describing a candidate connection set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetAnalysis {
    pub size: usize,
    pub excludes_identity: bool,
    pub symmetric: bool,
    pub normal: bool,
    pub euler: bool,
    /// Classes whose union is the set; present iff the set is normal.
    pub class_indices: Option<Vec<usize>>,
    /// element order → number of members with that order
    pub order_profile: BTreeMap<usize, usize>,
}

/// Exponents `k ∈ [1, m)` coprime to `m`; `{1}` when `m = 1`.
fn coprime_exponents(m: usize) -> impl Iterator<Item = usize> {
    (1..m.max(2)).filter(move |k| k.gcd(&m) == 1)
}

pub fn analyze_subset(g: &GroupTable, c: &ClassData, s: &ElementSet) -> SubsetAnalysis {
    let symmetric = s.iter().all(|&x| s.contains(&g.inv(x)));
    let mut by_class: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in s {
        *by_class.entry(c.class_of(x)).or_default() += 1;
    }
    let normal = by_class.iter().all(|(&cls, &n)| c.size(cls) == n);
    let euler = s.iter().all(|&x| {
        let m = g.element_order(x);
        coprime_exponents(m).all(|k| s.contains(&g.pow(x, k as i64)))
    });
    let mut order_profile = BTreeMap::new();
    for &x in s {
        *order_profile.entry(g.element_order(x)).or_default() += 1;
    }
    SubsetAnalysis {
        size: s.len(),
        excludes_identity: !s.contains(&0),
        symmetric,
        normal,
        euler,
        class_indices: normal.then(|| by_class.keys().copied().collect()),
        order_profile,
    }
}

/// Smallest superset closed under `s ↦ s^k` for every `k` coprime to `|s|`.
pub fn euler_closure(g: &GroupTable, s: &ElementSet) -> ElementSet {
    s.iter()
        .flat_map(|&x| {
            let m = g.element_order(x);
            coprime_exponents(m).map(move |k| g.pow(x, k as i64))
        })
        .collect()
}

/// Union of the conjugacy classes meeting `s`.
pub fn normal_closure(c: &ClassData, s: &ElementSet) -> ElementSet {
    let classes: BTreeSet<usize> = s.iter().map(|&x| c.class_of(x)).collect();
    classes
        .into_iter()
        .flat_map(|cls| c.members(cls).iter().copied())
        .collect()
}

/// `s ∪ s⁻¹`.
pub fn inverse_closure(g: &GroupTable, s: &ElementSet) -> ElementSet {
    s.iter().flat_map(|&x| [x, g.inv(x)]).collect()
}

/// Union of the given classes.
pub fn class_union(c: &ClassData, classes: &[usize]) -> ElementSet {
    classes
        .iter()
        .flat_map(|&cls| c.members(cls).iter().copied())
        .collect()
}

/// Elements of `⟨s⟩`, by breadth-first closure inside `g`.
pub fn generated_subgroup(g: &GroupTable, s: &ElementSet, order_cap: usize) -> Result<ElementSet> {
    if s.is_empty() {
        return Err(Error::Invalid("cannot generate a subgroup from the empty set".into()));
    }
    let mut seen = BTreeSet::from([0usize]);
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for &t in s {
            let y = g.mul(x, t);
            if seen.insert(y) {
                if seen.len() > order_cap {
                    return Err(Error::CapExceeded {
                        what: "subgroup order",
                        value: seen.len(),
                        cap: order_cap,
                    });
                }
                queue.push(y);
            }
        }
        i += 1;
    }
    Ok(seen)
}
