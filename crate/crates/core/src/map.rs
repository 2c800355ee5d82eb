use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{FiniteSpace, Product, Space, SpaceJson};

/// An order-preserving function between finite spaces.
#[derive(Clone)]
pub struct ContinuousMap {
    domain: Space,
    codomain: Space,
    values: Vec<u32>,
}

/// JSON exchange format for maps: both spaces inline plus a point-value
/// table keyed by point name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub domain: SpaceJson,
    pub codomain: SpaceJson,
    pub values: BTreeMap<String, String>,
}

pub(crate) fn is_order_preserving(domain: &FiniteSpace, codomain: &FiniteSpace, values: &[u32]) -> bool {
    (0..domain.len()).all(|x| {
        domain
            .lower_covers(x)
            .iter()
            .all(|&y| codomain.leq(values[y] as usize, values[x] as usize))
    })
}

impl ContinuousMap {
    pub fn new(domain: Space, codomain: Space, values: Vec<u32>) -> Result<Self> {
        if values.len() != domain.len() {
            return Err(Error::Mismatch(format!(
                "{} values for a {}-point domain",
                values.len(),
                domain.len()
            )));
        }
        if let Some(&v) = values.iter().find(|&&v| v as usize >= codomain.len()) {
            return Err(Error::Invalid(format!("value {v} outside codomain")));
        }
        for x in 0..domain.len() {
            for &y in domain.lower_covers(x) {
                if !codomain.leq(values[y] as usize, values[x] as usize) {
                    return Err(Error::NotContinuous(format!(
                        "{} <= {} but {} !<= {}",
                        domain.name(y),
                        domain.name(x),
                        codomain.name(values[y] as usize),
                        codomain.name(values[x] as usize)
                    )));
                }
            }
        }
        Ok(ContinuousMap {
            domain,
            codomain,
            values,
        })
    }

    pub(crate) fn new_unchecked(domain: Space, codomain: Space, values: Vec<u32>) -> Self {
        debug_assert!(is_order_preserving(&domain, &codomain, &values));
        ContinuousMap {
            domain,
            codomain,
            values,
        }
    }

    pub fn identity(space: &Space) -> Self {
        let values = (0..space.len() as u32).collect();
        ContinuousMap::new_unchecked(space.clone(), space.clone(), values)
    }

    pub fn constant(domain: &Space, codomain: &Space, value: usize) -> Self {
        ContinuousMap::new_unchecked(
            domain.clone(),
            codomain.clone(),
            vec![value as u32; domain.len()],
        )
    }

    /// The constant map from a one-point space picking `value`.
    pub fn point(codomain: &Space, value: usize) -> Self {
        let star = crate::catalog::singleton();
        ContinuousMap::constant(&star, codomain, value)
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    #[inline]
    pub fn at(&self, x: usize) -> usize {
        self.values[x] as usize
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &ContinuousMap) -> Result<ContinuousMap> {
        if !inner.codomain.same_as(&self.domain) {
            return Err(Error::Mismatch("composition: codomain/domain differ".into()));
        }
        Ok(self.after_unchecked(inner))
    }

    pub(crate) fn after_unchecked(&self, inner: &ContinuousMap) -> ContinuousMap {
        let values = inner.values.iter().map(|&v| self.values[v as usize]).collect();
        ContinuousMap::new_unchecked(inner.domain.clone(), self.codomain.clone(), values)
    }

    /// Restriction along an inclusion (or any map into the domain).
    pub fn restrict(&self, inclusion: &ContinuousMap) -> Result<ContinuousMap> {
        self.after(inclusion)
    }

    /// `f × g : X × X' → Y × Y'`.
    pub fn times(&self, other: &ContinuousMap) -> Result<ContinuousMap> {
        let dom = Product::new(&self.domain, &other.domain)?;
        let cod = Product::new(&self.codomain, &other.codomain)?;
        let mut values = Vec::with_capacity(dom.space.len());
        for x in 0..self.domain.len() {
            for y in 0..other.domain.len() {
                values.push(cod.pair(self.at(x), other.at(y)) as u32);
            }
        }
        Ok(ContinuousMap::new_unchecked(dom.space, cod.space, values))
    }

    /// Whisker map `(f, g) : X → Y × Y'` into a freshly built product.
    pub fn whisker(&self, other: &ContinuousMap) -> Result<ContinuousMap> {
        let cod = Product::new(&self.codomain, &other.codomain)?;
        self.whisker_into(other, &cod)
    }

    /// Whisker map into a given product of the two codomains.
    pub fn whisker_into(&self, other: &ContinuousMap, cod: &Product) -> Result<ContinuousMap> {
        if !self.domain.same_as(&other.domain) {
            return Err(Error::Mismatch("whisker map: domains differ".into()));
        }
        if !cod.left.same_as(&self.codomain) || !cod.right.same_as(&other.codomain) {
            return Err(Error::Mismatch("whisker map: product factors differ".into()));
        }
        let values = (0..self.domain.len())
            .map(|x| cod.pair(self.at(x), other.at(x)) as u32)
            .collect();
        Ok(ContinuousMap::new_unchecked(self.domain.clone(), cod.space.clone(), values))
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_pointed(&self) -> bool {
        match (self.domain.basepoint(), self.codomain.basepoint()) {
            (Some(x), Some(y)) => self.at(x) == y,
            _ => false,
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain.len()];
        self.values.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true))
    }

    /// Pointwise `self <= other`.
    pub fn leq(&self, other: &ContinuousMap) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| self.codomain.leq(a as usize, b as usize))
    }

    pub fn comparable(&self, other: &ContinuousMap) -> bool {
        self.leq(other) || other.leq(self)
    }

    pub fn same_spaces(&self, other: &ContinuousMap) -> bool {
        self.domain.same_as(&other.domain) && self.codomain.same_as(&other.codomain)
    }

    /// Replace the domain and codomain by structurally equal spaces (for
    /// example after re-parsing), keeping the values.
    pub fn rebase(&self, domain: &Space, codomain: &Space) -> Result<ContinuousMap> {
        if !self.domain.same_order(domain) || !self.codomain.same_order(codomain) {
            return Err(Error::Mismatch("rebase: orders differ".into()));
        }
        Ok(ContinuousMap::new_unchecked(domain.clone(), codomain.clone(), self.values.clone()))
    }

    pub fn preimage(&self, target: &crate::bitset::PointSet) -> crate::bitset::PointSet {
        crate::bitset::PointSet::from_indices(
            self.domain.len(),
            (0..self.domain.len()).filter(|&x| target.contains(self.at(x))),
        )
    }

    pub fn image(&self) -> crate::bitset::PointSet {
        crate::bitset::PointSet::from_indices(self.codomain.len(), self.values.iter().map(|&v| v as usize))
    }

    pub fn table(&self) -> BTreeMap<String, String> {
        (0..self.domain.len())
            .map(|x| (self.domain.name(x).to_string(), self.codomain.name(self.at(x)).to_string()))
            .collect()
    }

    pub fn to_json(&self) -> MapJson {
        MapJson {
            domain: self.domain.to_json(),
            codomain: self.codomain.to_json(),
            values: self.table(),
        }
    }

    pub fn from_json(json: &MapJson) -> Result<ContinuousMap> {
        let dom = FiniteSpace::from_json(&json.domain)?;
        let cod = FiniteSpace::from_json(&json.codomain)?;
        Self::from_table(&dom, &cod, &json.domain.points, &json.codomain.points, &json.values)
    }

    /// Builds a map from a name table, given the spaces as built from their
    /// JSON (so quotiented points resolve through the quotient assignment).
    pub fn from_table(
        dom: &crate::poset::Built,
        cod: &crate::poset::Built,
        dom_points: &[String],
        cod_points: &[String],
        table: &BTreeMap<String, String>,
    ) -> Result<ContinuousMap> {
        let resolve = |b: &crate::poset::Built, pts: &[String], name: &str| -> Result<usize> {
            match &b.quotient {
                None => b.space.require_point(name),
                Some(q) => pts
                    .iter()
                    .position(|p| p == name)
                    .map(|i| q[i])
                    .ok_or_else(|| Error::UnknownPoint(name.to_string())),
            }
        };
        let mut values = vec![u32::MAX; dom.space.len()];
        for (k, v) in table {
            let x = resolve(dom, dom_points, k)?;
            let y = resolve(cod, cod_points, v)? as u32;
            if values[x] != u32::MAX && values[x] != y {
                return Err(Error::Invalid(format!("identified points disagree at `{k}`")));
            }
            values[x] = y;
        }
        if let Some(x) = values.iter().position(|&v| v == u32::MAX) {
            return Err(Error::Invalid(format!("no value for `{}`", dom.space.name(x))));
        }
        ContinuousMap::new(dom.space.clone(), cod.space.clone(), values)
    }
}

impl PartialEq for ContinuousMap {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && self.same_spaces(other)
    }
}

impl Eq for ContinuousMap {}

impl fmt::Debug for ContinuousMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.table()).finish()
    }
}

pub fn same_space(a: &Space, b: &Space) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn continuity_is_checked() {
        let c = catalog::chain(2);
        assert!(ContinuousMap::new(c.clone(), c.clone(), vec![1, 0]).is_err());
        assert!(ContinuousMap::new(c.clone(), c.clone(), vec![0, 0]).is_ok());
        assert!(ContinuousMap::new(c.clone(), c.clone(), vec![0]).is_err());
    }

    #[test]
    fn composition_and_products() {
        let s = catalog::pseudocircle();
        let id = ContinuousMap::identity(&s);
        let c = ContinuousMap::constant(&s, &s, 2);
        assert_eq!(c.after(&id).unwrap(), c);
        let p = id.times(&c).unwrap();
        assert_eq!(p.domain().len(), 16);
        let w = id.whisker(&id).unwrap();
        assert_eq!(w.codomain().len(), 16);
        assert!(w.is_injective());
        assert!(c.is_constant());
    }

    #[test]
    fn json_round_trip() {
        let s = catalog::pseudocircle();
        let id = ContinuousMap::identity(&s);
        let j = serde_json::to_string(&id.to_json()).unwrap();
        let back = ContinuousMap::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, id);
    }
}
