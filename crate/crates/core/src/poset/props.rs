use super::FiniteSpace;
use crate::bitset::PointSet;
use crate::error::{BudgetKind, Error, Result};

/// Two disjoint closed sets without disjoint open neighbourhoods.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityWitness {
    pub first: PointSet,
    pub second: PointSet,
}

impl FiniteSpace {
    /// Normality: disjoint closed sets have disjoint open neighbourhoods.
    ///
    /// The smallest open set containing a closed set `C` is its down-closure,
    /// so `X` fails to be normal exactly when two points `c, d` with
    /// disjoint up-sets share a lower bound. Checking point pairs is then
    /// exhaustive; the witness is the pair of principal closed sets.
    pub fn is_normal(&self) -> (bool, Option<NormalityWitness>) {
        let n = self.len();
        for c in 0..n {
            for d in (c + 1)..n {
                if self.up(c).is_disjoint(self.up(d)) && self.down(c).intersects(self.down(d)) {
                    return (
                        false,
                        Some(NormalityWitness {
                            first: self.up(c).clone(),
                            second: self.up(d).clone(),
                        }),
                    );
                }
            }
        }
        (true, None)
    }

    /// Normality by brute force over all pairs of disjoint closed sets.
    /// Fails with a budget error once more than `cap` pairs are examined.
    pub fn is_normal_exhaustive(&self, cap: usize) -> Result<(bool, Option<NormalityWitness>)> {
        let closed: Vec<PointSet> = self
            .opens(cap)
            .map(|o| o.map(|o| o.complement()))
            .collect::<Result<_>>()?;
        let mut pairs = 0usize;
        for (i, c1) in closed.iter().enumerate() {
            for c2 in &closed[i + 1..] {
                pairs += 1;
                if pairs > cap {
                    return Err(Error::Budget(BudgetKind::NormalPairs, cap));
                }
                if c1.is_empty() || c2.is_empty() || !c1.is_disjoint(c2) {
                    continue;
                }
                if self.down_closure(c1).intersects(&self.down_closure(c2)) {
                    return Ok((
                        false,
                        Some(NormalityWitness {
                            first: c1.clone(),
                            second: c2.clone(),
                        }),
                    ));
                }
            }
        }
        Ok((true, None))
    }

    /// Connected components of the comparability graph, ordered by their
    /// smallest point.
    pub fn components(&self) -> Vec<PointSet> {
        let n = self.len();
        let mut seen = PointSet::empty(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = PointSet::singleton(n, start);
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(x) = stack.pop() {
                for &y in self.lower_covers(x).iter().chain(self.upper_covers(x)) {
                    if !seen.contains(y) {
                        seen.insert(y);
                        comp.insert(y);
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// For finite spaces path-connectivity is order-connectivity.
    pub fn is_path_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Components of the subspace `s`.
    pub fn components_of(&self, s: &PointSet) -> Vec<PointSet> {
        let n = self.len();
        let mut seen = PointSet::empty(n);
        let mut out = Vec::new();
        for start in s {
            if seen.contains(start) {
                continue;
            }
            let mut comp = PointSet::singleton(n, start);
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(x) = stack.pop() {
                // Hasse edges of X are not enough: comparabilities inside s
                // may pass through points outside s.
                for y in self.down(x).union(self.up(x)).intersection(s).iter() {
                    if !seen.contains(y) {
                        seen.insert(y);
                        comp.insert(y);
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::catalog;

    #[test]
    fn pseudocircle_is_not_normal() {
        let s = catalog::pseudocircle();
        let (normal, w) = s.is_normal();
        assert!(!normal);
        let w = w.unwrap();
        assert_eq!(s.set_names(&w.first), vec!["a1"]);
        assert_eq!(s.set_names(&w.second), vec!["a2"]);
    }

    #[test]
    fn discrete_and_chains_are_normal() {
        assert!(catalog::discrete(4).is_normal().0);
        assert!(catalog::chain(5).is_normal().0);
        assert!(catalog::diamond().is_normal().0);
    }

    #[test]
    fn exhaustive_agrees_on_catalog() {
        for s in [
            catalog::pseudocircle(),
            catalog::discrete(3),
            catalog::chain(3),
            catalog::diamond(),
            catalog::pseudocircle_wedge(),
        ] {
            assert_eq!(s.is_normal().0, s.is_normal_exhaustive(1 << 22).unwrap().0);
        }
        assert!(catalog::discrete(6).is_normal_exhaustive(100).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(catalog::pseudocircle().is_path_connected());
        assert!(!catalog::discrete(2).is_path_connected());
        assert!(catalog::singleton().is_path_connected());
        assert_eq!(catalog::discrete(3).components().len(), 3);
    }
}
