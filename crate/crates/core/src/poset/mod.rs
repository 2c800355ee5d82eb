//! Finite T0 spaces as posets.
//!
//! Convention: `x <= y` iff `x` lies in every open set containing `y`. Open
//! sets are therefore the down-sets, closed sets the up-sets, and continuous
//! maps the order-preserving ones. The minimal open neighbourhood of `x` is
//! its down-set.

mod constructions;
mod core;
mod opens;
mod props;

use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::bitset::PointSet;
use crate::error::{Error, Result};

pub use self::constructions::{Power, Product, Subspace};
pub use self::core::CoreReduction;
pub use self::opens::{OpenSet, Opens};
pub use self::props::NormalityWitness;

pub type Space = Arc<FiniteSpace>;

/// The JSON exchange format for spaces. `leq` entries are generating pairs
/// `[x, y]` meaning `x <= y`; the reflexive-transitive closure is taken on
/// ingestion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub points: Vec<String>,
    #[serde(default)]
    pub leq: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<String>,
}

/// Result of [`build_space`]: the T0 space and, when points had to be
/// identified, the quotient assignment of every input point.
#[derive(Clone, Debug)]
pub struct Built {
    pub space: Space,
    /// `quotient[i]` is the index in `space` of input point `i`; `None` when
    /// no identification took place.
    pub quotient: Option<Vec<usize>>,
}

pub struct FiniteSpace {
    names: Vec<String>,
    index: FxHashMap<String, usize>,
    down: Vec<PointSet>,
    up: Vec<PointSet>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    linear_ext: Vec<usize>,
    basepoint: Option<usize>,
    /// Set when the space was built as `left × right` (pair `(x, y)` at
    /// index `x * |right| + y`); homotopy searches split along it.
    factors: Option<(Space, Space)>,
}

/// Builds a space from named points and generating relation pairs
/// `(x, y)` meaning `x <= y`. The closure is computed and mutually
/// comparable points are identified (T0 quotient).
pub fn build_space<S: AsRef<str>>(
    points: &[S],
    relations: &[(S, S)],
    basepoint: Option<&str>,
) -> Result<Built> {
    if points.is_empty() {
        return Err(Error::EmptySpace);
    }
    let n = points.len();
    let mut index = FxHashMap::default();
    for (i, p) in points.iter().enumerate() {
        if index.insert(p.as_ref().to_string(), i).is_some() {
            return Err(Error::DuplicatePoint(p.as_ref().to_string()));
        }
    }
    let lookup = |s: &str| {
        index
            .get(s)
            .copied()
            .ok_or_else(|| Error::UnknownPoint(s.to_string()))
    };
    let base = match basepoint {
        Some(b) => Some(index.get(b).copied().ok_or_else(|| Error::BadBasepoint(b.to_string()))?),
        None => None,
    };

    // down[y] = { x : x <= y }
    let mut down: Vec<PointSet> = (0..n).map(|i| PointSet::singleton(n, i)).collect();
    for (x, y) in relations {
        let (x, y) = (lookup(x.as_ref())?, lookup(y.as_ref())?);
        down[y].insert(x);
    }
    for k in 0..n {
        let dk = down[k].clone();
        for d in down.iter_mut() {
            if d.contains(k) {
                d.union_with(&dk);
            }
        }
    }

    // Identify mutually comparable points; each class is named after its
    // first member in input order.
    let mut class = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for i in 0..n {
        if class[i] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(i);
        for j in i..n {
            if down[i].contains(j) && down[j].contains(i) {
                class[j] = c;
            }
        }
    }
    let identified = reps.len() < n;
    let m = reps.len();
    let names: Vec<String> = reps.iter().map(|&i| points[i].as_ref().to_string()).collect();
    let qdown: Vec<PointSet> = reps
        .iter()
        .map(|&i| PointSet::from_indices(m, down[i].iter().map(|j| class[j])))
        .collect();
    let space = FiniteSpace::from_down_sets(names, qdown, base.map(|b| class[b]))?;
    Ok(Built {
        space: Arc::new(space),
        quotient: identified.then_some(class),
    })
}

impl FiniteSpace {
    /// Assembles a space from inclusive down-sets that already form a
    /// partial order (reflexive, transitive, antisymmetric).
    pub(crate) fn from_down_sets(
        names: Vec<String>,
        down: Vec<PointSet>,
        basepoint: Option<usize>,
    ) -> Result<FiniteSpace> {
        let n = names.len();
        if n == 0 {
            return Err(Error::EmptySpace);
        }
        let mut index = FxHashMap::default();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicatePoint(name.clone()));
            }
        }
        let mut up: Vec<PointSet> = (0..n).map(|_| PointSet::empty(n)).collect();
        for (y, d) in down.iter().enumerate() {
            for x in d {
                up[x].insert(y);
            }
        }
        // x is a lower cover of y when x < y with nothing strictly between.
        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for y in 0..n {
            for x in &down[y] {
                if x == y {
                    continue;
                }
                let between = down[y].intersection(&up[x]).count();
                if between == 2 {
                    lower_covers[y].push(x);
                    upper_covers[x].push(y);
                }
            }
        }
        // Kahn's algorithm, smallest index first.
        let mut indeg: Vec<usize> = lower_covers.iter().map(Vec::len).collect();
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut linear_ext = Vec::with_capacity(n);
        while let Some(x) = ready.pop_first() {
            linear_ext.push(x);
            for &y in &upper_covers[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    ready.insert(y);
                }
            }
        }
        if linear_ext.len() != n {
            return Err(Error::Invalid("relation is not antisymmetric".into()));
        }
        if let Some(b) = basepoint {
            if b >= n {
                return Err(Error::BadBasepoint(b.to_string()));
            }
        }
        Ok(FiniteSpace {
            names,
            index,
            down,
            up,
            lower_covers,
            upper_covers,
            linear_ext,
            basepoint,
            factors: None,
        })
    }

    pub fn from_json(json: &SpaceJson) -> Result<Built> {
        let rel: Vec<(&str, &str)> = json
            .leq
            .iter()
            .map(|[a, b]| (a.as_str(), b.as_str()))
            .collect();
        let pts: Vec<&str> = json.points.iter().map(String::as_str).collect();
        build_space(&pts, &rel, json.basepoint.as_deref())
    }

    /// Emits the Hasse diagram as generating pairs.
    pub fn to_json(&self) -> SpaceJson {
        let mut leq = Vec::new();
        for y in 0..self.len() {
            for &x in &self.lower_covers[y] {
                leq.push([self.names[x].clone(), self.names[y].clone()]);
            }
        }
        SpaceJson {
            points: self.names.clone(),
            leq,
            basepoint: self.basepoint.map(|b| self.names[b].clone()),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Inclusive down-set of `x`, the minimal open neighbourhood.
    #[inline]
    pub fn down(&self, x: usize) -> &PointSet {
        &self.down[x]
    }

    #[inline]
    pub fn up(&self, x: usize) -> &PointSet {
        &self.up[x]
    }

    #[inline]
    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    #[inline]
    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    /// Points ordered so every point comes after everything below it.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear_ext
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn point(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require_point(&self, name: &str) -> Result<usize> {
        self.point(name).ok_or_else(|| Error::UnknownPoint(name.to_string()))
    }

    pub fn basepoint(&self) -> Option<usize> {
        self.basepoint
    }

    pub fn all(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// Down-closure of a set of points.
    pub fn down_closure(&self, s: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.len());
        for x in s {
            out.union_with(&self.down[x]);
        }
        out
    }

    pub fn up_closure(&self, s: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.len());
        for x in s {
            out.union_with(&self.up[x]);
        }
        out
    }

    pub fn is_down_set(&self, s: &PointSet) -> bool {
        s.iter().all(|x| self.down[x].is_subset(s))
    }

    pub fn is_up_set(&self, s: &PointSet) -> bool {
        s.iter().all(|x| self.up[x].is_subset(s))
    }

    /// Maximal elements of `s` under the induced order.
    pub fn maximal_in(&self, s: &PointSet) -> Vec<usize> {
        s.iter()
            .filter(|&x| self.up[x].intersection(s).count() == 1)
            .collect()
    }

    pub fn minimal_in(&self, s: &PointSet) -> Vec<usize> {
        s.iter()
            .filter(|&x| self.down[x].intersection(s).count() == 1)
            .collect()
    }

    /// Same space with a different (or no) basepoint.
    pub fn with_basepoint(&self, basepoint: Option<usize>) -> Result<FiniteSpace> {
        let mut s = FiniteSpace::from_down_sets(self.names.clone(), self.down.clone(), basepoint)?;
        if let Some((l, r)) = &self.factors {
            let (bl, br) = match basepoint {
                Some(b) => (Some(b / r.len()), Some(b % r.len())),
                None => (None, None),
            };
            s.factors = Some((Arc::new(l.with_basepoint(bl)?), Arc::new(r.with_basepoint(br)?)));
        }
        Ok(s)
    }

    /// The factors when the space was built as a product.
    pub fn factors(&self) -> Option<(&Space, &Space)> {
        self.factors.as_ref().map(|(l, r)| (l, r))
    }

    pub(crate) fn set_factors(&mut self, left: &Space, right: &Space) {
        debug_assert_eq!(left.len() * right.len(), self.len());
        self.factors = Some((left.clone(), right.clone()));
    }

    /// Structural equality (names, order and basepoint).
    pub fn same_as(self: &Space, other: &Space) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    /// Equality of the underlying order on point indices, ignoring names and
    /// basepoints.
    pub fn same_order(&self, other: &FiniteSpace) -> bool {
        self.down == other.down
    }

    pub fn set_names(&self, s: &PointSet) -> Vec<String> {
        s.iter().map(|x| self.names[x].clone()).collect()
    }
}

impl PartialEq for FiniteSpace {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.down == other.down && self.basepoint == other.basepoint
    }
}

impl Eq for FiniteSpace {}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = self.to_json();
        f.debug_struct("FiniteSpace")
            .field("points", &j.points)
            .field("hasse", &j.leq)
            .field("basepoint", &j.basepoint)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pseudocircle() -> Space {
        build_space(
            &["a1", "a2", "b1", "b2"],
            &[("b1", "a1"), ("b2", "a1"), ("b1", "a2"), ("b2", "a2")],
            None,
        )
        .unwrap()
        .space
    }

    #[test]
    fn pseudocircle_order() {
        let s = pseudocircle();
        let (a1, b1, b2) = (s.point("a1").unwrap(), s.point("b1").unwrap(), s.point("b2").unwrap());
        assert!(s.leq(b1, a1));
        assert!(!s.leq(a1, b1));
        assert!(!s.comparable(b1, b2));
        assert_eq!(s.down(a1).count(), 3);
        assert_eq!(s.lower_covers(a1).len(), 2);
    }

    #[test]
    fn singleton_and_closure() {
        let one = build_space(&["*"], &[], None).unwrap();
        assert_eq!(one.space.len(), 1);
        assert!(one.quotient.is_none());

        let chain = build_space(&["0", "1", "2"], &[("0", "1"), ("1", "2")], None).unwrap();
        assert!(chain.space.leq(0, 2));
        assert_eq!(chain.space.to_json().leq.len(), 2);
    }

    #[test]
    fn t0_quotient() {
        let b = build_space(&["x", "y"], &[("x", "y"), ("y", "x")], None).unwrap();
        assert_eq!(b.space.len(), 1);
        assert_eq!(b.quotient, Some(vec![0, 0]));
        assert_eq!(b.space.name(0), "x");
    }

    #[test]
    fn input_errors() {
        assert!(matches!(
            build_space(&["x", "x"], &[], None),
            Err(Error::DuplicatePoint(_))
        ));
        assert!(matches!(
            build_space(&["x"], &[], Some("y")),
            Err(Error::BadBasepoint(_))
        ));
        assert!(matches!(
            build_space(&["x"], &[("x", "z")], None),
            Err(Error::UnknownPoint(_))
        ));
        let empty: [&str; 0] = [];
        assert!(matches!(build_space(&empty, &[], None), Err(Error::EmptySpace)));
    }

    #[test]
    fn json_round_trip() {
        let s = pseudocircle();
        let j = s.to_json();
        let text = serde_json::to_string(&j).unwrap();
        let back = FiniteSpace::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(*back.space, *s);
    }
}
