use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection on `{1..degree}`, stored as a 0-based image table.
///
/// Products compose left to right: `a.compose(&b)` applies `a` first and
/// then `b`, so `(a·b)(i) = b(a(i))`. With this convention the edge set
/// `{(g, g·s)}` of a Cayley graph is the right regular action.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Invalid("permutation degree must be positive".into()));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::Invalid(format!(
                    "image table {:?} is not a bijection",
                    images
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Same as [`Permutation::from_images`] but with 1-based images.
    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Invalid("points are numbered from 1".into()));
        }
        Self::from_images(images.iter().map(|&v| v - 1).collect())
    }

    /// Parses disjoint-cycle notation such as `(1 2 3)(4 5)` or `()`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Parse("degree must be positive".into()));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(Error::Parse("empty cycle notation".into()));
        }
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let (inner, tail) = body.split_at(close);
            if inner.contains('(') {
                return Err(Error::Parse(format!("nested '(' in {text:?}")));
            }
            let mut cycle = Vec::new();
            for tok in inner.split_whitespace() {
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {tok:?} in {text:?}")))?;
                if p == 0 || p > degree {
                    return Err(Error::Parse(format!(
                        "point {p} out of range 1..={degree}"
                    )));
                }
                if used[p - 1] {
                    return Err(Error::Parse(format!("point {p} repeated in {text:?}")));
                }
                used[p - 1] = true;
                cycle.push(p - 1);
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()];
            }
            rest = tail[1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image table.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::Invalid(format!(
                "degree mismatch: {} vs {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths in non-increasing order, fixed points included as 1s.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Least `m ≥ 1` with `self^m = 1`.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| acc.lcm(&c.len()))
    }

    /// `self^k`; negative exponents are allowed.
    pub fn pow(&self, k: i64) -> Permutation {
        let mut images = self.images.clone();
        for cycle in self.cycles() {
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + shift) % cycle.len()];
            }
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    fn one_based(q: &Permutation) -> Vec<usize> {
        q.images().iter().map(|v| v + 1).collect()
    }

    #[test]
    fn parse_examples() {
        assert!(p("()", 4).is_identity());
        assert_eq!(p("()", 4).degree(), 4);
        assert_eq!(one_based(&p("(1 2)", 3)), vec![2, 1, 3]);
        assert_eq!(one_based(&p("(1 2 3)(4 5)", 5)), vec![2, 3, 1, 5, 4]);
        assert_eq!(one_based(&p(" ( 1 2 )  ( 3 4 ) ", 4)), vec![2, 1, 4, 3]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Permutation::parse("(1 2", 3), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("1 2)", 3), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("(1 2)(2 3)", 3), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("(1 4)", 3), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("(0 1)", 3), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("(1 x)", 3), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("", 3), Err(Error::Parse(_))));
    }

    #[test]
    fn product_convention_is_left_to_right() {
        let a = p("(1 2)", 3);
        let b = p("(2 3)", 3);
        // 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
        let ab = a.compose(&b).unwrap();
        assert_eq!(one_based(&ab), vec![3, 1, 2]);
        assert_eq!(ab, p("(1 3 2)", 3));
        assert!(a.compose(&a).unwrap().is_identity());
        assert_eq!(a.compose(&Permutation::identity(3)).unwrap(), a);
        assert!(a.compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn inverses() {
        assert!(Permutation::identity(3).inverse().is_identity());
        assert_eq!(p("(1 2 3)", 3).inverse(), p("(1 3 2)", 3));
        assert_eq!(p("(1 2)", 3).inverse(), p("(1 2)", 3));
    }

    #[test]
    fn orders_and_cycle_types() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(p("(1 2)(3 4 5)", 5).order(), 6);
        assert_eq!(p("(1 2 3 4)", 4).order(), 4);
        assert_eq!(Permutation::identity(4).cycle_type(), vec![1, 1, 1, 1]);
        assert_eq!(p("(1 2)(3 4)", 4).cycle_type(), vec![2, 2]);
        assert_eq!(p("(1 2 3)", 5).cycle_type(), vec![3, 1, 1]);
    }

    #[test]
    fn powers() {
        let c = p("(1 2 3 4)", 4);
        assert_eq!(c.pow(2), p("(1 3)(2 4)", 4));
        assert_eq!(c.pow(-1), c.inverse());
        assert!(c.pow(4).is_identity());
        assert!(c.pow(0).is_identity());
        let mut acc = Permutation::identity(4);
        for k in 1..=7 {
            acc = acc.compose(&c).unwrap();
            assert_eq!(c.pow(k), acc);
        }
    }

    #[test]
    fn display_round_trip() {
        for text in ["()", "(1 2)", "(1 3 2)(4 5)"] {
            assert_eq!(p(text, 6).to_string(), text);
        }
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
        assert!(Permutation::from_images_one_based(&[2, 1, 3]).is_ok());
    }
}
