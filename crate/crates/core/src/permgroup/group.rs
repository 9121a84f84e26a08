use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::perm::Permutation;

/// Default bound on the order of any enumerated group.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Built-in group families on the natural point set `{1..n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Sym,
    Alt,
    Dih,
    Cyc,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Sym => "sym",
            Family::Alt => "alt",
            Family::Dih => "dih",
            Family::Cyc => "cyc",
        }
    }

    /// Group order, or `None` on overflow.
    pub fn order(self, n: usize) -> Option<usize> {
        match self {
            Family::Sym => (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)),
            Family::Alt => Family::Sym.order(n).map(|o| o / 2),
            Family::Dih => n.checked_mul(2),
            Family::Cyc => Some(n),
        }
    }

    fn min_n(self) -> usize {
        match self {
            Family::Sym | Family::Cyc => 1,
            Family::Alt | Family::Dih => 3,
        }
    }

    /// Standard generators:
    /// `sym:n` → `(1 2)`, `(1 2 … n)`; `alt:n` → `(1 2 i)` for `i = 3..n`;
    /// `dih:n` → `(1 2 … n)` and the reflection `i ↦ n+1−i`; `cyc:n` → `(1 2 … n)`.
    pub fn generators(self, n: usize) -> Vec<Permutation> {
        let rotation = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())
            .expect("rotation is a bijection");
        let swap = |a: usize, b: usize| {
            let mut im: Vec<usize> = (0..n).collect();
            im.swap(a, b);
            Permutation::from_images(im).expect("transposition is a bijection")
        };
        match self {
            Family::Sym | Family::Cyc if n == 1 => vec![Permutation::identity(1)],
            Family::Sym if n == 2 => vec![swap(0, 1)],
            Family::Sym => vec![swap(0, 1), rotation],
            Family::Cyc => vec![rotation],
            Family::Alt => (2..n)
                .map(|i| {
                    let mut im: Vec<usize> = (0..n).collect();
                    im[0] = 1;
                    im[1] = i;
                    im[i] = 0;
                    Permutation::from_images(im).expect("3-cycle is a bijection")
                })
                .collect(),
            Family::Dih => {
                let reflection = Permutation::from_images((0..n).map(|i| n - 1 - i).collect())
                    .expect("reflection is a bijection");
                vec![rotation, reflection]
            }
        }
    }
}

/// How a group was specified on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Builtin { family: Family, n: usize },
    Generators { gens: Vec<Permutation> },
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// `sym:N | alt:N | dih:N | cyc:N | gens:<cycles>,<cycles>,...[@degree]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("group spec {s:?} lacks ':'")))?;
        let family = match head {
            "sym" => Family::Sym,
            "alt" => Family::Alt,
            "dih" => Family::Dih,
            "cyc" => Family::Cyc,
            "gens" => return parse_gens(body),
            _ => return Err(Error::Parse(format!("unknown group family {head:?}"))),
        };
        let n: usize = body
            .parse()
            .map_err(|_| Error::Parse(format!("bad group parameter {body:?}")))?;
        if n < family.min_n() {
            return Err(Error::Parse(format!(
                "{}:{n} requires n >= {}",
                family.name(),
                family.min_n()
            )));
        }
        Ok(GroupSpec::Builtin { family, n })
    }
}

fn parse_gens(body: &str) -> Result<GroupSpec> {
    let (list, degree) = match body.rsplit_once('@') {
        Some((list, d)) => {
            let d: usize = d
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree {d:?}")))?;
            (list, Some(d))
        }
        None => (body, None),
    };
    let pieces = split_cycle_list(list)?;
    if pieces.is_empty() {
        return Err(Error::Parse("gens: needs at least one generator".into()));
    }
    let degree = match degree {
        Some(d) => d,
        None => pieces
            .iter()
            .flat_map(|p| {
                p.split(|c: char| !c.is_ascii_digit())
                    .filter_map(|t| t.parse::<usize>().ok())
            })
            .max()
            .unwrap_or(1)
            .max(1),
    };
    let gens = pieces
        .iter()
        .map(|p| Permutation::parse(p, degree))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupSpec::Generators { gens })
}

/// Splits `(1 2),(1 2 3)(4 5)` at the commas that separate permutations.
pub(crate) fn split_cycle_list(list: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in list.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(list[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
        if !(0..=1).contains(&depth) {
            return Err(Error::Parse(format!("unbalanced parentheses in {list:?}")));
        }
    }
    out.push(list[start..].trim());
    if out.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse(format!("empty permutation in {list:?}")));
    }
    Ok(out)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Builtin { family, n } => write!(f, "{}:{n}", family.name()),
            GroupSpec::Generators { gens } => {
                f.write_str("gens:")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, "@{}", gens[0].degree())
            }
        }
    }
}

impl GroupSpec {
    pub fn build(&self, order_cap: usize) -> Result<GroupTable> {
        match self {
            GroupSpec::Builtin { family, n } => builtin_group(*family, *n, order_cap),
            GroupSpec::Generators { gens } => generate_group(gens, order_cap),
        }
    }
}

/// A fully enumerated finite permutation group.
///
/// Element 0 is the identity. Elements are stored in breadth-first order of
/// right multiplication by the generators, each layer sorted by image table.
#[derive(Clone, Debug)]
pub struct GroupTable {
    degree: usize,
    elements: Vec<Permutation>,
    index_of: HashMap<Permutation, usize>,
    generators: Vec<usize>,
    inverses: Vec<usize>,
    orders: Vec<usize>,
    family: Option<(Family, usize)>,
}

impl GroupTable {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index_of.get(p).copied()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// `(family, n)` for built-in groups on their natural point set.
    pub fn family(&self) -> Option<(Family, usize)> {
        self.family
    }

    /// Index of `elements[a] · elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].compose_unchecked(&self.elements[b]);
        self.index_of[&prod]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    /// Index of `elements[a]^k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        self.index_of[&self.elements[a].pow(k)]
    }

    /// `g⁻¹ x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverses[g], x), g)
    }
}

/// Breadth-first closure of `generators` under right multiplication.
pub fn generate_group(generators: &[Permutation], order_cap: usize) -> Result<GroupTable> {
    let first = generators
        .first()
        .ok_or_else(|| Error::Invalid("generator list is empty".into()))?;
    let degree = first.degree();
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::Invalid(format!(
            "generator {g} has degree {}, expected {degree}",
            g.degree()
        )));
    }
    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index_of = HashMap::from([(identity, 0usize)]);
    let mut layer_start = 0;
    while layer_start < elements.len() {
        let layer_end = elements.len();
        let mut fresh = BTreeSet::new();
        for x in &elements[layer_start..layer_end] {
            for g in generators {
                let y = x.compose_unchecked(g);
                if !index_of.contains_key(&y) {
                    fresh.insert(y);
                }
            }
        }
        if elements.len() + fresh.len() > order_cap {
            return Err(Error::CapExceeded {
                what: "group order",
                value: elements.len() + fresh.len(),
                cap: order_cap,
            });
        }
        for y in fresh {
            index_of.insert(y.clone(), elements.len());
            elements.push(y);
        }
        layer_start = layer_end;
    }
    let inverses = elements.iter().map(|x| index_of[&x.inverse()]).collect();
    let orders = elements.iter().map(Permutation::order).collect();
    let gen_idx = generators.iter().map(|g| index_of[g]).collect();
    Ok(GroupTable {
        degree,
        elements,
        index_of,
        generators: gen_idx,
        inverses,
        orders,
        family: None,
    })
}

/// `sym:n`, `alt:n`, `dih:n` or `cyc:n` with the standard generators.
pub fn builtin_group(family: Family, n: usize, order_cap: usize) -> Result<GroupTable> {
    if n < family.min_n() {
        return Err(Error::Invalid(format!(
            "{}:{n} requires n >= {}",
            family.name(),
            family.min_n()
        )));
    }
    match family.order(n) {
        Some(o) if o <= order_cap => {}
        o => {
            return Err(Error::CapExceeded {
                what: "group order",
                value: o.unwrap_or(usize::MAX),
                cap: order_cap,
            })
        }
    }
    let mut g = generate_group(&family.generators(n), order_cap)?;
    g.family = Some((family, n));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    #[test]
    fn small_closures() {
        let g = generate_group(&[p("(1 2)", 2)], 100).unwrap();
        assert_eq!(g.order(), 2);
        let g = generate_group(&[p("(1 2)", 3), p("(1 2 3)", 3)], 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn cap_is_enforced() {
        // (1 2)(4 5) ties the swap of 4, 5 to odd permutations of 1, 2, 3: S_3, not S_3 × C_2
        let diagonal = [p("(1 2 3)", 5), p("(1 2)(4 5)", 5)];
        assert_eq!(generate_group(&diagonal, 10).unwrap().order(), 6);
        let gens = [p("(1 2 3)", 5), p("(1 2)", 5), p("(4 5)", 5)];
        assert_eq!(generate_group(&gens, 12).unwrap().order(), 12);
        assert!(matches!(
            generate_group(&gens, 10),
            Err(Error::CapExceeded { cap: 10, .. })
        ));
        assert!(matches!(
            builtin_group(Family::Sym, 8, 10_000),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn builtin_orders() {
        let cases = [
            (Family::Sym, 1, 1),
            (Family::Sym, 2, 2),
            (Family::Sym, 3, 6),
            (Family::Sym, 5, 120),
            (Family::Alt, 3, 3),
            (Family::Alt, 4, 12),
            (Family::Alt, 5, 60),
            (Family::Dih, 3, 6),
            (Family::Dih, 5, 10),
            (Family::Dih, 8, 16),
            (Family::Cyc, 1, 1),
            (Family::Cyc, 12, 12),
        ];
        for (f, n, order) in cases {
            assert_eq!(builtin_group(f, n, 10_000).unwrap().order(), order, "{f:?}:{n}");
        }
        assert!(builtin_group(Family::Alt, 2, 100).is_err());
        assert!(builtin_group(Family::Dih, 2, 100).is_err());
    }

    #[test]
    fn group_is_closed_and_lagrange_holds() {
        for spec in ["sym:4", "alt:5", "dih:6", "cyc:7", "gens:(1 2 3),(1 2)(4 5)"] {
            let g = spec.parse::<GroupSpec>().unwrap().build(10_000).unwrap();
            let n = g.order();
            for a in 0..n {
                assert_eq!(g.mul(a, g.inv(a)), 0);
                assert_eq!(n % g.element_order(a), 0);
                for b in 0..n {
                    assert!(g.mul(a, b) < n);
                }
            }
            let fact: usize = (1..=g.degree()).product();
            assert_eq!(fact % n, 0);
        }
    }

    #[test]
    fn generator_order_does_not_change_element_set() {
        let a = generate_group(&[p("(1 2)", 4), p("(1 2 3 4)", 4)], 100).unwrap();
        let b = generate_group(&[p("(1 2 3 4)", 4), p("(1 2)", 4)], 100).unwrap();
        let sa: BTreeSet<_> = a.elements().iter().cloned().collect();
        let sb: BTreeSet<_> = b.elements().iter().cloned().collect();
        assert_eq!(sa, sb);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = builtin_group(Family::Sym, 4, 100).unwrap();
        let b = builtin_group(Family::Sym, 4, 100).unwrap();
        assert_eq!(a.elements(), b.elements());
        // layer 1 is the sorted generator set
        assert_eq!(a.element(1), &p("(1 2)", 4));
        assert_eq!(a.element(2), &p("(1 2 3 4)", 4));
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(
            "sym:4".parse::<GroupSpec>().unwrap(),
            GroupSpec::Builtin { family: Family::Sym, n: 4 }
        );
        let g: GroupSpec = "gens:(1 2 3),(1 2)(4 5)".parse().unwrap();
        assert_eq!(g.to_string(), "gens:(1 2 3),(1 2)(4 5)@5");
        let g: GroupSpec = "gens:(1 2)@4".parse().unwrap();
        assert_eq!(g.build(100).unwrap().degree(), 4);
        for bad in ["sym", "foo:3", "alt:2", "sym:x", "gens:", "gens:(1 2),,(1 3)", "gens:(1 2"] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
    }
}
