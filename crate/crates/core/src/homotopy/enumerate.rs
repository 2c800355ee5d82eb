use crate::error::{BudgetKind, Error, Result};
use crate::map::ContinuousMap;
use crate::poset::Space;

/// Streams every order-preserving map `X → Y` by backtracking along a
/// linear extension of `X`: a point's candidates are the common upper
/// bounds of the values already given to its lower covers.
pub struct MapEnumerator {
    domain: Space,
    codomain: Space,
    order: Vec<usize>,
    fixed: Option<(usize, u32)>,
    values: Vec<u32>,
    cands: Vec<Vec<u32>>,
    next: Vec<usize>,
    depth: usize,
    produced: usize,
    cap: usize,
    done: bool,
}

impl MapEnumerator {
    /// With `pointed`, only basepoint-preserving maps are produced; both
    /// spaces must then carry basepoints.
    pub fn new(domain: &Space, codomain: &Space, pointed: bool, cap: usize) -> Result<Self> {
        let fixed = if pointed {
            let x0 = domain.basepoint().ok_or(Error::MissingBasepoint("domain"))?;
            let y0 = codomain.basepoint().ok_or(Error::MissingBasepoint("codomain"))?;
            Some((x0, y0 as u32))
        } else {
            None
        };
        let n = domain.len();
        let mut e = MapEnumerator {
            domain: domain.clone(),
            codomain: codomain.clone(),
            order: domain.linear_extension().to_vec(),
            fixed,
            values: vec![0; n],
            cands: vec![Vec::new(); n],
            next: vec![0; n],
            depth: 0,
            produced: 0,
            cap,
            done: false,
        };
        e.fill(0);
        Ok(e)
    }

    fn fill(&mut self, d: usize) {
        let x = self.order[d];
        let mut allowed = self.codomain.all();
        for &y in self.domain.lower_covers(x) {
            allowed.intersect_with(self.codomain.up(self.values[y] as usize));
        }
        let c = &mut self.cands[d];
        c.clear();
        match self.fixed {
            Some((x0, y0)) if x0 == x => {
                if allowed.contains(y0 as usize) {
                    c.push(y0);
                }
            }
            _ => c.extend(allowed.iter().map(|v| v as u32)),
        }
        self.next[d] = 0;
    }

    /// Next map as a raw value table.
    pub fn next_values(&mut self) -> Option<Result<Vec<u32>>> {
        if self.done {
            return None;
        }
        let n = self.order.len();
        loop {
            if self.depth == n {
                self.depth -= 1;
                self.produced += 1;
                if self.produced > self.cap {
                    self.done = true;
                    return Some(Err(Error::Budget(BudgetKind::Maps, self.cap)));
                }
                return Some(Ok(self.values.clone()));
            }
            let d = self.depth;
            if self.next[d] < self.cands[d].len() {
                let v = self.cands[d][self.next[d]];
                self.next[d] += 1;
                self.values[self.order[d]] = v;
                if d + 1 == n {
                    self.depth = n;
                } else {
                    self.fill(d + 1);
                    self.depth = d + 1;
                }
            } else if d == 0 {
                self.done = true;
                return None;
            } else {
                self.depth = d - 1;
            }
        }
    }
}

impl Iterator for MapEnumerator {
    type Item = Result<ContinuousMap>;

    fn next(&mut self) -> Option<Result<ContinuousMap>> {
        let v = self.next_values()?;
        Some(v.map(|v| ContinuousMap::new_unchecked(self.domain.clone(), self.codomain.clone(), v)))
    }
}

/// All order-preserving maps `X → Y` (pointed ones only when asked).
pub fn enumerate_maps(domain: &Space, codomain: &Space, pointed: bool, cap: usize) -> Result<Vec<ContinuousMap>> {
    MapEnumerator::new(domain, codomain, pointed, cap)?.collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::map::is_order_preserving;

    /// Brute force over all |Y|^|X| functions.
    fn brute_count(domain: &Space, codomain: &Space) -> usize {
        let (n, m) = (domain.len(), codomain.len());
        let mut count = 0;
        let mut vals = vec![0u32; n];
        for mut code in 0..m.pow(n as u32) {
            for v in vals.iter_mut() {
                *v = (code % m) as u32;
                code /= m;
            }
            if is_order_preserving(domain, codomain, &vals) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn maps_from_point() {
        let s = catalog::pseudocircle();
        assert_eq!(enumerate_maps(&catalog::singleton(), &s, false, 100).unwrap().len(), 4);
    }

    #[test]
    fn chain_into_pseudocircle() {
        let (c, s) = (catalog::chain(2), catalog::pseudocircle());
        assert_eq!(brute_count(&c, &s), 8);
        assert_eq!(enumerate_maps(&c, &s, false, 100).unwrap().len(), 8);
    }

    #[test]
    fn pointed_maps_to_point() {
        let s = catalog::pointed(&catalog::pseudocircle(), "b1");
        let star = catalog::pointed(&catalog::singleton(), "*");
        assert_eq!(enumerate_maps(&s, &star, true, 100).unwrap().len(), 1);
    }

    #[test]
    fn agrees_with_brute_force() {
        let spaces = [
            catalog::pseudocircle(),
            catalog::chain(3),
            catalog::discrete(2),
            catalog::diamond(),
        ];
        for x in &spaces {
            for y in &spaces {
                let got = enumerate_maps(x, y, false, 1 << 20).unwrap();
                assert_eq!(got.len(), brute_count(x, y));
                let mut uniq: Vec<_> = got.iter().map(|m| m.values().to_vec()).collect();
                uniq.sort();
                uniq.dedup();
                assert_eq!(uniq.len(), got.len());
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let d = catalog::discrete(4);
        let r = enumerate_maps(&d, &d, false, 10);
        assert!(matches!(r, Err(Error::Budget(BudgetKind::Maps, 10))));
    }
}
