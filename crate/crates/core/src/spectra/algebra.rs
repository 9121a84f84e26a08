use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::error::Result;
use crate::permgroup::{builtin_group, Family, GroupTable, Permutation};

/// Element of the integral group algebra: sparse `element index → coefficient`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupAlgebraVector {
    coeffs: BTreeMap<usize, i64>,
}

impl GroupAlgebraVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector of one element.
    pub fn basis(element: usize) -> Self {
        Self::from_terms([(element, 1)])
    }

    /// `Σ x` over `elements`, with repetition counted.
    pub fn sum_of(elements: impl IntoIterator<Item = usize>) -> Self {
        Self::from_terms(elements.into_iter().map(|x| (x, 1)))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut v = Self::zero();
        for (x, c) in terms {
            v.add_term(x, c);
        }
        v
    }

    fn add_term(&mut self, x: usize, c: i64) {
        let e = self.coeffs.entry(x).or_insert(0);
        *e = e.checked_add(c).expect("group algebra coefficient overflow");
        if *e == 0 {
            self.coeffs.remove(&x);
        }
    }

    pub fn coeff(&self, x: usize) -> i64 {
        self.coeffs.get(&x).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&x, &c)| (x, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Convolution `(u·v)(z) = Σ_{xy = z} u(x) v(y)`.
    pub fn product(&self, other: &Self, g: &GroupTable) -> Self {
        let mut out = Self::zero();
        for (&x, &a) in &self.coeffs {
            for (&y, &b) in &other.coeffs {
                out.add_term(g.mul(x, y), a.checked_mul(b).expect("coefficient overflow"));
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self, g: &GroupTable) -> Self {
        &self.product(other, g) - &other.product(self, g)
    }
}

impl Add for &GroupAlgebraVector {
    type Output = GroupAlgebraVector;

    fn add(self, rhs: Self) -> GroupAlgebraVector {
        let mut out = self.clone();
        for (x, c) in rhs.support() {
            out.add_term(x, c);
        }
        out
    }
}

impl Neg for &GroupAlgebraVector {
    type Output = GroupAlgebraVector;

    fn neg(self) -> GroupAlgebraVector {
        GroupAlgebraVector::from_terms(self.support().map(|(x, c)| (x, -c)))
    }
}

impl Sub for &GroupAlgebraVector {
    type Output = GroupAlgebraVector;

    fn sub(self, rhs: Self) -> GroupAlgebraVector {
        self + &-rhs
    }
}

/// In the group algebra of `S_n`, with `a` the sum of `(1 2 i)^{±1}` for
/// `i ≥ 3`, `b` the sum of all transpositions, `c` the sum of transpositions
/// fixing 1 and 2, and `d = (1 2)`: checks `a = d(b − c − d)` and that
/// `b`, `c`, `d` pairwise commute.
pub fn verify_cor5_identity(n: usize, order_cap: usize) -> Result<bool> {
    let g = builtin_group(Family::Sym, n, order_cap)?;
    let idx = |text: String| {
        g.index_of(&Permutation::parse(&text, n).expect("well-formed cycle"))
            .expect("element of S_n")
    };
    let transposition_sum = |lo: usize| {
        GroupAlgebraVector::sum_of(
            (lo..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).map(|(i, j)| idx(format!("({i} {j})"))),
        )
    };
    let a = GroupAlgebraVector::sum_of(
        (3..=n).flat_map(|i| [idx(format!("(1 2 {i})")), idx(format!("(2 1 {i})"))]),
    );
    let b = transposition_sum(1);
    let c = transposition_sum(3);
    let d = GroupAlgebraVector::basis(idx("(1 2)".into()));

    let rhs = d.product(&(&(&b - &c) - &d), &g);
    Ok(a == rhs
        && c.commutator(&d, &g).is_zero()
        && b.commutator(&c, &g).is_zero()
        && b.commutator(&d, &g).is_zero())
}
