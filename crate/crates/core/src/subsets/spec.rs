//! Set-spec language:
//!
//! ```text
//! SPEC  := NAME | classof:CYCLES | elems:CYCLES(,CYCLES)* | stab:INT
//!        | COMB[SPEC;SPEC] | UNARY[SPEC]
//! NAME  := transpositions | star | cycles12
//! COMB  := union | minus
//! UNARY := eulerclose | normalclose | invclose
//! ```
//!
//! Named sets live on the natural point set of `sym:n` / `alt:n` and are
//! rejected for any other group.

use crate::classalgebra::ClassData;
use crate::error::{Error, Result};
use crate::permgroup::{split_cycle_list, Family, GroupTable, Permutation};

use super::{euler_closure, inverse_closure, normal_closure, ElementSet};

pub fn resolve_set_spec(spec: &str, g: &GroupTable, c: &ClassData) -> Result<ElementSet> {
    let spec = spec.trim();
    if let Some(body) = spec.strip_prefix("classof:") {
        let x = lookup(g, body)?;
        return Ok(c.members(c.class_of(x)).iter().copied().collect());
    }
    if let Some(body) = spec.strip_prefix("elems:") {
        return split_cycle_list(body)?
            .into_iter()
            .map(|p| lookup(g, p))
            .collect();
    }
    if let Some(body) = spec.strip_prefix("stab:") {
        let point: usize = body
            .parse()
            .map_err(|_| Error::Parse(format!("bad point in {spec:?}")))?;
        if point == 0 || point > g.degree() {
            return Err(Error::Parse(format!(
                "stab point {point} out of range 1..={}",
                g.degree()
            )));
        }
        return Ok((0..g.order())
            .filter(|&x| g.element(x).image(point - 1) == point - 1)
            .collect());
    }
    if let Some(open) = spec.find('[') {
        let head = &spec[..open];
        let inner = spec[open + 1..]
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("missing ']' in {spec:?}")))?;
        let args = split_args(inner)?;
        let one = |args: &[&str]| -> Result<ElementSet> {
            match args {
                [a] => resolve_set_spec(a, g, c),
                _ => Err(Error::Parse(format!("{head} takes one argument"))),
            }
        };
        let two = |args: &[&str]| -> Result<(ElementSet, ElementSet)> {
            match args {
                [a, b] => Ok((resolve_set_spec(a, g, c)?, resolve_set_spec(b, g, c)?)),
                _ => Err(Error::Parse(format!("{head} takes two arguments"))),
            }
        };
        return match head {
            "union" => two(&args).map(|(a, b)| &a | &b),
            "minus" => two(&args).map(|(a, b)| &a - &b),
            "eulerclose" => one(&args).map(|a| euler_closure(g, &a)),
            "normalclose" => one(&args).map(|a| normal_closure(c, &a)),
            "invclose" => one(&args).map(|a| inverse_closure(g, &a)),
            _ => Err(Error::Parse(format!("unknown combinator {head:?}"))),
        };
    }
    named_set(spec, g)
}

/// Splits at `;` not nested inside brackets.
fn split_args(inner: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in inner.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced ']' in {inner:?}")));
                }
            }
            ';' if depth == 0 => {
                out.push(&inner[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced '[' in {inner:?}")));
    }
    out.push(&inner[start..]);
    Ok(out)
}

fn lookup(g: &GroupTable, cycles: &str) -> Result<usize> {
    let p = Permutation::parse(cycles, g.degree())?;
    g.index_of(&p)
        .ok_or_else(|| Error::Invalid(format!("{p} is not an element of the group")))
}

fn named_set(name: &str, g: &GroupTable) -> Result<ElementSet> {
    let n = match g.family() {
        Some((Family::Sym | Family::Alt, n)) => n,
        _ => {
            return match name {
                "transpositions" | "star" | "cycles12" => Err(Error::Invalid(format!(
                    "named set {name:?} is only defined for sym:n and alt:n"
                ))),
                _ => Err(Error::Parse(format!("unknown set spec {name:?}"))),
            }
        }
    };
    let cycles: Vec<String> = match name {
        "transpositions" => (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| format!("({i} {j})")))
            .collect(),
        "star" => (2..=n).map(|i| format!("(1 {i})")).collect(),
        "cycles12" => (3..=n)
            .flat_map(|i| [format!("(1 2 {i})"), format!("(1 {i} 2)")])
            .collect(),
        _ => return Err(Error::Parse(format!("unknown set spec {name:?}"))),
    };
    cycles.iter().map(|t| lookup(g, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classalgebra::conjugacy_classes;
    use crate::permgroup::{builtin_group, GroupSpec};

    fn resolve(group: &str, spec: &str) -> Result<ElementSet> {
        let g = group.parse::<GroupSpec>().unwrap().build(10_000).unwrap();
        let c = conjugacy_classes(&g);
        resolve_set_spec(spec, &g, &c)
    }

    #[test]
    fn named_sets() {
        assert_eq!(resolve("sym:4", "transpositions").unwrap().len(), 6);
        let g = builtin_group(Family::Sym, 4, 100).unwrap();
        let c = conjugacy_classes(&g);
        let star = resolve_set_spec("star", &g, &c).unwrap();
        let expected: ElementSet = ["(1 2)", "(1 3)", "(1 4)"]
            .iter()
            .map(|t| lookup(&g, t).unwrap())
            .collect();
        assert_eq!(star, expected);
        assert_eq!(resolve("alt:5", "cycles12").unwrap().len(), 6);
        assert_eq!(resolve("alt:4", "cycles12").unwrap().len(), 4);
        assert_eq!(resolve("sym:5", "cycles12").unwrap().len(), 6);
    }

    #[test]
    fn named_sets_need_natural_families() {
        assert!(matches!(resolve("cyc:4", "star"), Err(Error::Invalid(_))));
        assert!(matches!(resolve("gens:(1 2),(1 2 3)", "transpositions"), Err(Error::Invalid(_))));
        // transpositions are odd
        assert!(matches!(resolve("alt:4", "transpositions"), Err(Error::Invalid(_))));
    }

    #[test]
    fn combinators() {
        assert!(resolve("sym:3", "minus[transpositions;classof:(1 2)]").unwrap().is_empty());
        assert_eq!(resolve("sym:4", "union[star;classof:(1 2 3)]").unwrap().len(), 11);
        assert_eq!(resolve("sym:4", "minus[transpositions;stab:1]").unwrap(), resolve("sym:4", "star").unwrap());
        assert_eq!(resolve("sym:4", "stab:1").unwrap().len(), 6);
        assert_eq!(resolve("sym:4", "eulerclose[elems:(1 2 3 4)]").unwrap().len(), 2);
        assert_eq!(resolve("sym:4", "invclose[elems:(1 2 3)]").unwrap().len(), 2);
        assert_eq!(resolve("alt:4", "normalclose[elems:(1 2 3)]").unwrap().len(), 4);
        assert_eq!(
            resolve("sym:5", "union[minus[transpositions;star];normalclose[elems:(1 2)(3 4)]]").unwrap().len(),
            6 + 15
        );
        assert_eq!(resolve("cyc:5", "elems:(1 2 3 4 5),(1 5 4 3 2)").unwrap().len(), 2);
    }

    #[test]
    fn identity_is_allowed_at_this_stage() {
        assert_eq!(resolve("sym:3", "elems:()").unwrap(), ElementSet::from([0]));
    }

    #[test]
    fn malformed_specs() {
        for bad in [
            "nope",
            "union[star]",
            "union[star;star",
            "frob[star]",
            "eulerclose[star;star]",
            "stab:0",
            "stab:x",
            "elems:(1 2",
            "classof:(1 9)",
        ] {
            assert!(resolve("sym:4", bad).is_err(), "{bad}");
        }
        assert!(matches!(resolve("sym:4", "elems:(1 2),(1 2 3 5)"), Err(Error::Parse(_))));
    }
}
