use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::classalgebra::IntMatrix;

/// Monic polynomial with exact integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct CharPolyZ {
    coeffs: Vec<BigInt>,
}

impl CharPolyZ {
    /// Panics unless the leading coefficient is 1.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            coeffs.last().is_some_and(One::is_one),
            "polynomial must be monic"
        );
        CharPolyZ { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `Π (x − r)^m`.
    pub fn from_roots(roots: &[(i64, usize)]) -> Self {
        let mut p = vec![BigInt::one()];
        for &(r, m) in roots {
            for _ in 0..m {
                let mut next = vec![BigInt::zero(); p.len() + 1];
                for (i, c) in p.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * r;
                }
                p = next;
            }
        }
        CharPolyZ { coeffs: p }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i`, `i = 0..=degree`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Quotient and remainder on division by a monic `divisor`.
    pub fn div_rem(&self, divisor: &CharPolyZ) -> (Vec<BigInt>, Vec<BigInt>) {
        let d = divisor.degree();
        if self.degree() < d {
            return (vec![BigInt::zero()], self.coeffs.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - d + 1];
        for shift in (0..quot.len()).rev() {
            let lead = rem[shift + d].clone();
            if lead.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &lead * c;
            }
            quot[shift] = lead;
        }
        rem.truncate(d.max(1));
        (quot, rem)
    }

    pub fn is_divisible_by(&self, divisor: &CharPolyZ) -> bool {
        self.div_rem(divisor).1.iter().all(Zero::is_zero)
    }

    /// Exact evaluation `p(B)`, used for the Cayley–Hamilton self-check.
    pub fn eval_matrix(&self, b: &IntMatrix) -> Vec<Vec<BigInt>> {
        let n = b.dim();
        let big: Vec<Vec<BigInt>> = b
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        let mut acc = vec![vec![BigInt::zero(); n]; n];
        for c in self.coeffs.iter().rev() {
            let mut next = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    let mut s = BigInt::zero();
                    for t in 0..n {
                        s += &acc[i][t] * &big[t][j];
                    }
                    next[i][j] = s;
                }
                next[i][i] += c;
            }
            acc = next;
        }
        acc
    }
}

impl fmt::Display for CharPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CharPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for CharPolyZ {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharPolyZ {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let coeffs = strs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        if !coeffs.last().is_some_and(One::is_one) {
            return Err(serde::de::Error::custom("polynomial must be monic"));
        }
        Ok(CharPolyZ { coeffs })
    }
}

/// `det(xI − B)` by Berkowitz's division-free algorithm.
pub fn charpoly_integer(b: &IntMatrix) -> CharPolyZ {
    let n = b.dim();
    if n == 0 {
        return CharPolyZ::from_i64(&[1]);
    }
    let m: Vec<Vec<BigInt>> = b
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    // Coefficients are kept highest degree first while the recursion runs.
    let mut poly = vec![BigInt::one(), -m[0][0].clone()];
    for size in 2..=n {
        let k = size - 1;
        // Leading principal submatrix A of order k, with
        // R = row k (first k entries), C = column k (first k entries), a = m[k][k].
        let r: Vec<&BigInt> = (0..k).map(|j| &m[k][j]).collect();
        let mut v: Vec<BigInt> = (0..k).map(|i| m[i][k].clone()).collect();
        // Toeplitz column: 1, -a, -R C, -R A C, ..., -R A^{k-1} C
        let mut col = Vec::with_capacity(size + 1);
        col.push(BigInt::one());
        col.push(-m[k][k].clone());
        for step in 0..k {
            let rv: BigInt = r.iter().zip(&v).map(|(x, y)| *x * y).sum();
            col.push(-rv);
            if step + 1 < k {
                v = (0..k)
                    .map(|i| (0..k).map(|j| &m[i][j] * &v[j]).sum())
                    .collect();
            }
        }
        // new_poly = T · poly, T lower-triangular Toeplitz of shape (size+1) × size
        let mut next = vec![BigInt::zero(); size + 1];
        for (i, out) in next.iter_mut().enumerate() {
            for (j, p) in poly.iter().enumerate() {
                if i >= j {
                    *out += &col[i - j] * p;
                }
            }
        }
        poly = next;
    }
    poly.reverse();
    CharPolyZ::from_coeffs(poly)
}

/// Integer roots of a monic integer polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerRoots {
    /// `(root, multiplicity)`, descending by root.
    pub roots: Vec<(i64, usize)>,
    /// The polynomial is a product of linear integer factors.
    pub fully_split: bool,
}

impl IntegerRoots {
    pub fn multiplicity(&self, root: i64) -> usize {
        self.roots
            .iter()
            .find(|(r, _)| *r == root)
            .map_or(0, |(_, m)| *m)
    }
}

/// Divides by `x − r` if it is a factor.
fn deflate(p: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    // p is lowest degree first; synthetic division from the top
    let n = p.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (1..=n).rev() {
        carry = &carry * r + &p[i];
        q[i - 1] = carry.clone();
    }
    (&carry * r + &p[0]).is_zero().then_some(q)
}

/// Fujiwara's bound on the moduli of the roots of a monic polynomial.
fn root_bound(p: &[BigInt]) -> Option<i64> {
    let n = p.len() - 1;
    let mut best = 0f64;
    for j in 1..=n {
        let c = p[n - j].abs().to_f64()?;
        let c = if j == n { c / 2.0 } else { c };
        best = best.max(c.powf(1.0 / j as f64));
    }
    let bound = (2.0 * best).ceil() + 1.0;
    (bound < 1e15).then_some(bound as i64)
}

/// Strips the `x^m` factor, then tests every divisor of the constant term
/// within the root bound and deflates by synthetic division.
pub fn integer_roots(poly: &CharPolyZ) -> IntegerRoots {
    let mut p: Vec<BigInt> = poly.coeffs().to_vec();
    let mut roots = Vec::new();
    let zeros = p.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push((0i64, zeros));
        p.drain(..zeros);
    }
    if p.len() > 1 {
        let bound = root_bound(&p).expect("root bound overflows i64");
        for mag in 1..=bound {
            if p.len() == 1 {
                break;
            }
            for r in [mag, -mag] {
                let rb = BigInt::from(r);
                if !p[0].is_multiple_of(&rb) {
                    continue;
                }
                let mut mult = 0;
                while p.len() > 1 {
                    match deflate(&p, &rb) {
                        Some(q) => {
                            p = q;
                            mult += 1;
                        }
                        None => break,
                    }
                }
                if mult > 0 {
                    roots.push((r, mult));
                }
            }
        }
    }
    roots.sort_by_key(|r| std::cmp::Reverse(r.0));
    IntegerRoots {
        roots,
        fully_split: p.len() == 1,
    }
}
