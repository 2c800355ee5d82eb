use std::sync::Arc;

use super::{FiniteSpace, Space};
use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::map::ContinuousMap;

/// `X × Y` with the componentwise order; the pair `(x, y)` has index
/// `x * |Y| + y`.
#[derive(Clone, Debug)]
pub struct Product {
    pub space: Space,
    pub left: Space,
    pub right: Space,
}

impl Product {
    pub fn new(left: &Space, right: &Space) -> Result<Product> {
        let (n, m) = (left.len(), right.len());
        let size = n * m;
        let mut names = Vec::with_capacity(size);
        let mut down = Vec::with_capacity(size);
        for x in 0..n {
            for y in 0..m {
                names.push(format!("({},{})", left.name(x), right.name(y)));
                let mut d = PointSet::empty(size);
                for x2 in left.down(x) {
                    for y2 in right.down(y) {
                        d.insert(x2 * m + y2);
                    }
                }
                down.push(d);
            }
        }
        let base = match (left.basepoint(), right.basepoint()) {
            (Some(a), Some(b)) => Some(a * m + b),
            _ => None,
        };
        let mut space = FiniteSpace::from_down_sets(names, down, base)?;
        space.set_factors(left, right);
        Ok(Product {
            space: Arc::new(space),
            left: left.clone(),
            right: right.clone(),
        })
    }

    #[inline]
    pub fn pair(&self, x: usize, y: usize) -> usize {
        x * self.right.len() + y
    }

    #[inline]
    pub fn split(&self, p: usize) -> (usize, usize) {
        (p / self.right.len(), p % self.right.len())
    }

    pub fn pr1(&self) -> ContinuousMap {
        let values = (0..self.space.len()).map(|p| self.split(p).0 as u32).collect();
        ContinuousMap::new_unchecked(self.space.clone(), self.left.clone(), values)
    }

    pub fn pr2(&self) -> ContinuousMap {
        let values = (0..self.space.len()).map(|p| self.split(p).1 as u32).collect();
        ContinuousMap::new_unchecked(self.space.clone(), self.right.clone(), values)
    }

    /// Section `x ↦ (x, y0)` of the first projection.
    pub fn section_left(&self, y0: usize) -> ContinuousMap {
        let values = (0..self.left.len()).map(|x| self.pair(x, y0) as u32).collect();
        ContinuousMap::new_unchecked(self.left.clone(), self.space.clone(), values)
    }

    pub fn section_right(&self, x0: usize) -> ContinuousMap {
        let values = (0..self.right.len()).map(|y| self.pair(x0, y) as u32).collect();
        ContinuousMap::new_unchecked(self.right.clone(), self.space.clone(), values)
    }
}

/// The `k`-fold power `Y^k` with tuples indexed in base `|Y|`, first
/// coordinate most significant.
#[derive(Clone, Debug)]
pub struct Power {
    pub space: Space,
    pub base: Space,
    pub factors: usize,
}

impl Power {
    pub fn new(base: &Space, factors: usize, max_points: usize) -> Result<Power> {
        assert!(factors >= 1);
        let n = base.len();
        let size = n
            .checked_pow(factors as u32)
            .filter(|&s| s <= max_points)
            .ok_or(Error::Budget(crate::error::BudgetKind::Points, max_points))?;
        let mut names = Vec::with_capacity(size);
        let mut down = Vec::with_capacity(size);
        let mut tuple = vec![0usize; factors];
        for idx in 0..size {
            decode(idx, n, &mut tuple);
            let parts: Vec<&str> = tuple.iter().map(|&c| base.name(c)).collect();
            names.push(format!("({})", parts.join(",")));
            // down-set of a tuple is the product of coordinate down-sets
            let mut d = PointSet::from_indices(size, [0usize; 0]);
            let mut acc: Vec<usize> = vec![0];
            for &c in &tuple {
                let mut next = Vec::with_capacity(acc.len() * 2);
                for &a in &acc {
                    for z in base.down(c) {
                        next.push(a * n + z);
                    }
                }
                acc = next;
            }
            for a in acc {
                d.insert(a);
            }
            down.push(d);
        }
        let bp = base.basepoint().map(|b| (0..factors).fold(0, |acc, _| acc * n + b));
        let mut space = FiniteSpace::from_down_sets(names, down, bp)?;
        if factors > 1 {
            space.set_factors(base, &Power::new(base, factors - 1, max_points)?.space);
        }
        Ok(Power {
            space: Arc::new(space),
            base: base.clone(),
            factors,
        })
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &c| acc * self.base.len() + c)
    }

    pub fn decode(&self, idx: usize) -> Vec<usize> {
        let mut t = vec![0; self.factors];
        decode(idx, self.base.len(), &mut t);
        t
    }

    /// Iterated diagonal `Y → Y^k`.
    pub fn diagonal(&self) -> ContinuousMap {
        let values = (0..self.base.len())
            .map(|y| self.encode(&vec![y; self.factors]) as u32)
            .collect();
        ContinuousMap::new_unchecked(self.base.clone(), self.space.clone(), values)
    }
}

fn decode(mut idx: usize, n: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
}

/// A subspace with the induced order, together with its inclusion.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub space: Space,
    pub inclusion: ContinuousMap,
    pub members: PointSet,
}

impl Subspace {
    pub fn new(parent: &Space, members: &PointSet) -> Result<Subspace> {
        if members.is_empty() {
            return Err(Error::EmptySpace);
        }
        let idx: Vec<usize> = members.iter().collect();
        let mut pos = vec![usize::MAX; parent.len()];
        for (i, &x) in idx.iter().enumerate() {
            pos[x] = i;
        }
        let m = idx.len();
        let names = idx.iter().map(|&x| parent.name(x).to_string()).collect();
        let down = idx
            .iter()
            .map(|&x| PointSet::from_indices(m, parent.down(x).iter().filter(|&y| members.contains(y)).map(|y| pos[y])))
            .collect();
        let base = parent.basepoint().filter(|&b| members.contains(b)).map(|b| pos[b]);
        let space: Space = Arc::new(FiniteSpace::from_down_sets(names, down, base)?);
        let inclusion = ContinuousMap::new_unchecked(
            space.clone(),
            parent.clone(),
            idx.iter().map(|&x| x as u32).collect(),
        );
        Ok(Subspace {
            space,
            inclusion,
            members: members.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn chain_squared_is_a_diamond() {
        let c = catalog::chain(2);
        let p = Product::new(&c, &c).unwrap();
        let s = &p.space;
        assert_eq!(s.len(), 4);
        let (a, b, c2, d) = (p.pair(0, 0), p.pair(0, 1), p.pair(1, 0), p.pair(1, 1));
        assert!(s.leq(a, b) && s.leq(a, c2) && s.leq(b, d) && s.leq(c2, d));
        assert!(!s.comparable(b, c2));
    }

    #[test]
    fn unit_law() {
        let s = catalog::pseudocircle();
        let p = Product::new(&s, &catalog::singleton()).unwrap();
        assert!(p.space.same_order(&s));
    }

    #[test]
    fn pseudocircle_squared_size() {
        let s = catalog::pseudocircle();
        assert_eq!(Product::new(&s, &s).unwrap().space.len(), 16);
    }

    #[test]
    fn power_matches_iterated_product() {
        let s = catalog::pseudocircle();
        let pow = Power::new(&s, 2, 100).unwrap();
        let prod = Product::new(&s, &s).unwrap();
        assert!(pow.space.same_order(&prod.space));
        assert!(Power::new(&s, 5, 100).is_err());
        let d = pow.diagonal();
        assert_eq!(d.at(1), pow.encode(&[1, 1]));
    }

    #[test]
    fn subspace_inclusion() {
        let s = catalog::pseudocircle();
        let u = PointSet::from_indices(4, [0, 2, 3]);
        let sub = Subspace::new(&s, &u).unwrap();
        assert_eq!(sub.space.len(), 3);
        assert!(sub.inclusion.is_injective());
        assert!(Subspace::new(&s, &PointSet::empty(4)).is_err());
    }
}
