use rustc_hash::FxHashSet;

use super::search::{component, MapGraph, SearchStats};
use super::{enumerate_maps, Reduction};
use crate::error::Result;
use crate::map::ContinuousMap;
use crate::poset::Space;
use crate::settings::Settings;

/// One representative per homotopy class of maps `X → Y`, in enumeration
/// order of the first member met. Classes are found on the cores (where
/// they correspond bijectively) and representatives are lifted as
/// `j ∘ l ∘ r`.
pub fn homotopy_classes(
    domain: &Space,
    codomain: &Space,
    pointed: bool,
    settings: &Settings,
) -> Result<Vec<ContinuousMap>> {
    let red = Reduction::new(domain, codomain, pointed, settings)?;
    let (dc, cc) = (&red.domain.core, &red.codomain.core);
    let graph = MapGraph {
        dom: dc,
        cod: cc,
        fixed: if pointed { dc.basepoint() } else { None },
    };
    let mut seen: FxHashSet<Box<[u32]>> = FxHashSet::default();
    let mut reps = Vec::new();
    let mut stats = SearchStats::default();
    for l in enumerate_maps(dc, cc, pointed, settings.budget.max_maps)? {
        let v: Box<[u32]> = l.values().into();
        if seen.contains(&v) {
            continue;
        }
        for m in component(&graph, v, settings.budget.max_maps, &mut stats)? {
            seen.insert(m);
        }
        reps.push(
            red.codomain
                .inclusion
                .after_unchecked(&l)
                .after_unchecked(&red.domain.retraction),
        );
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::homotopy::Fence;

    /// Classes by union-find over all pairs of comparable maps.
    fn brute_classes(x: &Space, y: &Space) -> usize {
        let maps = enumerate_maps(x, y, false, 1 << 20).unwrap();
        let mut parent: Vec<usize> = (0..maps.len()).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            if p[i] != i {
                let r = find(p, p[i]);
                p[i] = r;
            }
            p[i]
        }
        for i in 0..maps.len() {
            for j in 0..i {
                if Fence::new(vec![maps[i].clone(), maps[j].clone()]).is_ok() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        (0..maps.len()).filter(|&i| find(&mut parent, i) == i).count()
    }

    #[test]
    fn self_maps_of_pseudocircle() {
        let s = catalog::pseudocircle();
        assert_eq!(brute_classes(&s, &s), 5);
        for cores in [true, false] {
            let st = Settings {
                use_cores: cores,
                ..Settings::default()
            };
            assert_eq!(homotopy_classes(&s, &s, false, &st).unwrap().len(), 5);
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        let spaces = [
            catalog::pseudocircle(),
            catalog::chain(3),
            catalog::discrete(2),
            catalog::diamond(),
            catalog::singleton(),
        ];
        for x in &spaces {
            for y in &spaces {
                let got = homotopy_classes(x, y, false, &Settings::default()).unwrap();
                assert_eq!(got.len(), brute_classes(x, y), "{:?} -> {:?}", x.names(), y.names());
            }
        }
    }

    #[test]
    fn contractible_targets_have_one_class() {
        let st = Settings::default();
        let s = catalog::pseudocircle();
        assert_eq!(homotopy_classes(&catalog::singleton(), &s, false, &st).unwrap().len(), 1);
        assert_eq!(homotopy_classes(&catalog::chain(3), &catalog::chain(2), false, &st).unwrap().len(), 1);
    }
}
