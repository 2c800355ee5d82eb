//! Small named spaces and maps used by tests, the harness and the CLI.
//!
//! Names resolve as `catalog:<name>`; a space name may carry a basepoint
//! suffix `@<point>`. Map names are `id:<space>`, `const:<space>:<point>`,
//! `pr1:<space>`, `pr2:<space>` and `diag:<space>` (the last three use
//! `<space> × <space>`), plus `incl-u1` and `incl-u2` for the two
//! contractible basic opens of the pseudocircle.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::map::ContinuousMap;
use crate::poset::{build_space, Product, Space, Subspace};

pub const SPACE_NAMES: &[&str] = &[
    "singleton",
    "chain-N",
    "discrete-N",
    "pseudocircle",
    "pseudocircle-squared",
    "pseudocircle-wedge",
    "diamond",
];

pub fn singleton() -> Space {
    build_space(&["*"], &[], None).unwrap().space
}

/// `c0 < c1 < … < c(n-1)`.
pub fn chain(n: usize) -> Space {
    assert!(n > 0);
    let pts: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    let rel: Vec<(String, String)> = (1..n).map(|i| (pts[i - 1].clone(), pts[i].clone())).collect();
    build_space(&pts, &rel, None).unwrap().space
}

pub fn discrete(n: usize) -> Space {
    assert!(n > 0);
    let pts: Vec<String> = (0..n).map(|i| format!("d{i}")).collect();
    build_space(&pts, &[], None).unwrap().space
}

/// Minimal finite model of the circle: `b1, b2 < a1, a2`.
pub fn pseudocircle() -> Space {
    build_space(
        &["a1", "a2", "b1", "b2"],
        &[("b1", "a1"), ("b2", "a1"), ("b1", "a2"), ("b2", "a2")],
        None,
    )
    .unwrap()
    .space
}

pub fn pseudocircle_squared() -> Space {
    let s = pseudocircle();
    Product::new(&s, &s).unwrap().space
}

/// Two pseudocircles sharing the minimal point `b2`.
pub fn pseudocircle_wedge() -> Space {
    build_space(
        &["a1", "a2", "b1", "b2", "a3", "a4", "b3"],
        &[
            ("b1", "a1"),
            ("b2", "a1"),
            ("b1", "a2"),
            ("b2", "a2"),
            ("b2", "a3"),
            ("b3", "a3"),
            ("b2", "a4"),
            ("b3", "a4"),
        ],
        None,
    )
    .unwrap()
    .space
}

/// `bot < l, r < top`.
pub fn diamond() -> Space {
    build_space(
        &["bot", "l", "r", "top"],
        &[("bot", "l"), ("bot", "r"), ("l", "top"), ("r", "top")],
        None,
    )
    .unwrap()
    .space
}

/// The same space with basepoint `name`. Panics on unknown names.
pub fn pointed(space: &Space, name: &str) -> Space {
    let b = space.point(name).expect("basepoint must be a point of the space");
    Arc::new(space.with_basepoint(Some(b)).unwrap())
}

/// Inclusion of `U_i = {a_i, b1, b2}` into the pseudocircle (`i` is 1 or 2).
pub fn incl_u(i: usize) -> ContinuousMap {
    let s = pseudocircle();
    let a = s.point(&format!("a{i}")).expect("i is 1 or 2");
    Subspace::new(&s, &s.down(a).clone()).unwrap().inclusion
}

fn strip(name: &str) -> &str {
    name.strip_prefix("catalog:").unwrap_or(name)
}

/// Resolves a catalog space name (with or without the `catalog:` prefix).
pub fn space(name: &str) -> Result<Space> {
    let name = strip(name);
    let (base, point) = match name.split_once('@') {
        Some((b, p)) => (b, Some(p)),
        None => (name, None),
    };
    let sized = |prefix: &str| -> Option<Result<usize>> {
        base.strip_prefix(prefix).map(|n| {
            n.parse::<usize>()
                .ok()
                .filter(|&n| (1..=64).contains(&n))
                .ok_or_else(|| Error::Invalid(format!("bad size in `{base}`")))
        })
    };
    let s = match base {
        "singleton" => singleton(),
        "pseudocircle" => pseudocircle(),
        "pseudocircle-squared" => pseudocircle_squared(),
        "pseudocircle-wedge" => pseudocircle_wedge(),
        "diamond" => diamond(),
        _ => {
            if let Some(n) = sized("chain-") {
                chain(n?)
            } else if let Some(n) = sized("discrete-") {
                discrete(n?)
            } else {
                return Err(Error::Invalid(format!("unknown catalog space `{base}`")));
            }
        }
    };
    match point {
        None => Ok(s),
        Some(p) => {
            let b = s.point(p).ok_or_else(|| Error::BadBasepoint(p.to_string()))?;
            Ok(Arc::new(s.with_basepoint(Some(b))?))
        }
    }
}

/// Resolves a catalog map name (with or without the `catalog:` prefix).
pub fn map(name: &str) -> Result<ContinuousMap> {
    let name = strip(name);
    match name {
        "incl-u1" => return Ok(incl_u(1)),
        "incl-u2" => return Ok(incl_u(2)),
        _ => {}
    }
    let (kind, rest) = name
        .split_once(':')
        .ok_or_else(|| Error::Invalid(format!("unknown catalog map `{name}`")))?;
    match kind {
        "id" => Ok(ContinuousMap::identity(&space(rest)?)),
        "const" => {
            let (sp, pt) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::Invalid("const needs `<space>:<point>`".into()))?;
            let s = space(sp)?;
            let p = s.require_point(pt)?;
            Ok(ContinuousMap::constant(&s, &s, p))
        }
        "pr1" | "pr2" | "diag" => {
            let s = space(rest)?;
            let p = Product::new(&s, &s)?;
            Ok(match kind {
                "pr1" => p.pr1(),
                "pr2" => p.pr2(),
                _ => ContinuousMap::identity(&s).whisker_into(&ContinuousMap::identity(&s), &p)?,
            })
        }
        _ => Err(Error::Invalid(format!("unknown catalog map `{name}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::FiniteSpace;

    #[test]
    fn names_resolve() {
        assert_eq!(space("catalog:chain-3").unwrap().len(), 3);
        assert_eq!(space("discrete-2").unwrap().len(), 2);
        assert_eq!(space("catalog:pseudocircle-squared").unwrap().len(), 16);
        assert_eq!(space("pseudocircle-wedge").unwrap().len(), 7);
        let p = space("catalog:pseudocircle@b1").unwrap();
        assert_eq!(p.basepoint(), p.point("b1"));
        assert!(space("catalog:chain-0").is_err());
        assert!(space("catalog:torus").is_err());
        assert!(space("pseudocircle@zz").is_err());
    }

    #[test]
    fn maps_resolve() {
        assert!(map("catalog:id:pseudocircle").unwrap().is_injective());
        assert!(map("const:pseudocircle:a1").unwrap().is_constant());
        assert_eq!(map("pr1:chain-2").unwrap().domain().len(), 4);
        let d = map("diag:pseudocircle").unwrap();
        assert_eq!(d.codomain().len(), 16);
        assert!(d.is_injective());
        assert_eq!(map("incl-u2").unwrap().domain().len(), 3);
        assert!(map("catalog:nope").is_err());
        assert!(map("const:pseudocircle").is_err());
    }

    #[test]
    fn json_round_trip() {
        for s in [pseudocircle(), pseudocircle_wedge(), diamond(), chain(4), pointed(&pseudocircle(), "a2")] {
            let back = FiniteSpace::from_json(&s.to_json()).unwrap();
            assert!(back.quotient.is_none());
            assert!(back.space.same_as(&s));
        }
    }
}
