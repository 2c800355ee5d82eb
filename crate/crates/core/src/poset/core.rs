use super::{Space, Subspace};
use crate::bitset::PointSet;
use crate::homotopy::Fence;
use crate::map::ContinuousMap;

/// Reduction of a space to its core by repeated beat-point removal.
#[derive(Clone, Debug)]
pub struct CoreReduction {
    pub original: Space,
    pub core: Space,
    /// `core → original`
    pub inclusion: ContinuousMap,
    /// `original → core`; `retraction ∘ inclusion = id`.
    pub retraction: ContinuousMap,
    /// Removed beat points, as indices of `original`, in removal order.
    pub removal_trace: Vec<usize>,
    /// Fence from `id` to `inclusion ∘ retraction`.
    pub fence: Fence,
}

impl CoreReduction {
    /// Removes beat points (lowest index first) until none remain. A
    /// `protected` point is never removed, so all structure maps and fence
    /// steps fix it.
    pub fn compute(space: &Space, protected: Option<usize>) -> CoreReduction {
        let n = space.len();
        let mut alive = PointSet::full(n);
        let mut rho: Vec<u32> = (0..n as u32).collect();
        let mut steps = vec![ContinuousMap::identity(space)];
        let mut trace = Vec::new();
        'outer: loop {
            for x in alive.iter() {
                if Some(x) == protected {
                    continue;
                }
                if let Some(target) = beat_target(space, &alive, x) {
                    alive.remove(x);
                    for v in rho.iter_mut() {
                        if *v as usize == x {
                            *v = target as u32;
                        }
                    }
                    trace.push(x);
                    steps.push(ContinuousMap::new_unchecked(space.clone(), space.clone(), rho.clone()));
                    continue 'outer;
                }
            }
            break;
        }
        let sub = Subspace::new(space, &alive).expect("core is non-empty");
        let mut pos = vec![u32::MAX; n];
        for (i, x) in alive.iter().enumerate() {
            pos[x] = i as u32;
        }
        let retraction = ContinuousMap::new_unchecked(
            space.clone(),
            sub.space.clone(),
            rho.iter().map(|&v| pos[v as usize]).collect(),
        );
        CoreReduction {
            original: space.clone(),
            core: sub.space,
            inclusion: sub.inclusion,
            retraction,
            removal_trace: trace,
            fence: Fence::from_steps_unchecked(steps),
        }
    }

    /// The trivial reduction (no points removed).
    pub fn identity(space: &Space) -> CoreReduction {
        let id = ContinuousMap::identity(space);
        CoreReduction {
            original: space.clone(),
            core: space.clone(),
            inclusion: id.clone(),
            retraction: id.clone(),
            removal_trace: Vec::new(),
            fence: Fence::from_steps_unchecked(vec![id]),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.removal_trace.is_empty()
    }
}

/// If `x` is a beat point of the subspace `alive`, the point it retracts to.
fn beat_target(space: &Space, alive: &PointSet, x: usize) -> Option<usize> {
    let mut below = space.down(x).intersection(alive);
    below.remove(x);
    if let Some(m) = unique_extreme(&below, |y| space.down(y)) {
        return Some(m);
    }
    let mut above = space.up(x).intersection(alive);
    above.remove(x);
    unique_extreme(&above, |y| space.up(y))
}

/// The element `m` of `s` with `s ⊆ cone(m)`, if any.
fn unique_extreme<'a>(s: &PointSet, cone: impl Fn(usize) -> &'a PointSet) -> Option<usize> {
    s.iter().find(|&m| s.is_subset(cone(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::poset::Product;

    fn check(red: &CoreReduction) {
        let ri = red.retraction.after(&red.inclusion).unwrap();
        assert_eq!(ri, ContinuousMap::identity(&red.core));
        assert!(red.fence.is_valid());
        assert_eq!(red.fence.start(), &ContinuousMap::identity(&red.original));
        assert_eq!(red.fence.end(), &red.inclusion.after(&red.retraction).unwrap());
        // no beat points remain
        let again = CoreReduction::compute(&red.core, None);
        assert!(again.is_trivial());
    }

    #[test]
    fn chain_is_contractible() {
        let red = CoreReduction::compute(&catalog::chain(3), None);
        assert_eq!(red.core.len(), 1);
        check(&red);
    }

    #[test]
    fn pseudocircle_is_its_own_core() {
        let red = CoreReduction::compute(&catalog::pseudocircle(), None);
        assert!(red.is_trivial());
        check(&red);
    }

    #[test]
    fn product_with_point_and_protected_basepoint() {
        let s = catalog::pseudocircle();
        let p = Product::new(&catalog::chain(2), &s).unwrap();
        let red = CoreReduction::compute(&p.space, None);
        assert_eq!(red.core.len(), 4);
        check(&red);

        let c = catalog::chain(4);
        let red = CoreReduction::compute(&c, Some(2));
        assert_eq!(red.core.len(), 1);
        assert_eq!(red.inclusion.at(0), 2);
        assert!(red.fence.steps().iter().all(|f| f.at(2) == 2));
    }
}
