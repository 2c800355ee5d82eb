//! Deciding homotopy of maps between finite spaces.
//!
//! Maps `f, g : X → Y` are homotopic iff they are joined by a fence of
//! continuous maps with consecutive members pointwise comparable. Searches
//! run on cores (`X₀ → Y₀`) when enabled and the resulting fence is
//! conjugated back through the stored inclusions, retractions and their
//! fences.

mod classes;
mod enumerate;
mod fence;
mod plan;
mod search;

use crate::error::{Error, Result};
use crate::map::ContinuousMap;
use crate::poset::{CoreReduction, Space};
use crate::settings::Settings;

pub use self::classes::homotopy_classes;
pub use self::enumerate::{enumerate_maps, MapEnumerator};
pub use self::fence::{Fence, FenceJson};
pub use self::search::SearchStats;
pub(crate) use self::plan::Plan;
pub(crate) use self::search::{component, connect, explore, MapGraph, Values};

#[derive(Clone, Debug)]
pub struct HomotopyVerdict {
    pub homotopic: bool,
    /// Present exactly when `homotopic` is true.
    pub certificate: Option<Fence>,
    pub stats: SearchStats,
}

/// Domain and codomain reductions used to run a search on cores.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub domain: CoreReduction,
    pub codomain: CoreReduction,
    pointed: bool,
}

impl Reduction {
    pub fn new(domain: &Space, codomain: &Space, pointed: bool, settings: &Settings) -> Result<Reduction> {
        Ok(Reduction {
            domain: reduce(domain, pointed, settings)?,
            codomain: reduce(codomain, pointed, settings)?,
            pointed,
        })
    }

    pub(crate) fn from_parts(domain: CoreReduction, codomain: CoreReduction, pointed: bool) -> Reduction {
        Reduction {
            domain,
            codomain,
            pointed,
        }
    }

    pub(crate) fn graph(&self) -> MapGraph<'_> {
        MapGraph {
            dom: &self.domain.core,
            cod: &self.codomain.core,
            fixed: if self.pointed { self.domain.core.basepoint() } else { None },
        }
    }

    /// `s ∘ f ∘ i` as a raw value table on the cores.
    pub(crate) fn reduce_values(&self, f: &ContinuousMap) -> Values {
        let s = self.codomain.retraction.values();
        self.domain
            .inclusion
            .values()
            .iter()
            .map(|&x| s[f.values()[x as usize] as usize])
            .collect()
    }

    /// Lifts a fence between reduced maps `s F i` and `s G i` to a fence
    /// from `F` to `G`.
    pub(crate) fn lift_fence(&self, f: &ContinuousMap, g: &ContinuousMap, reduced: &[Values]) -> Fence {
        let dom = &self.domain;
        let cod = &self.codomain;
        let js = cod.inclusion.after_unchecked(&cod.retraction);
        let to_core = |h: &ContinuousMap| -> Fence {
            // h → j s h → j s h i r
            let first = cod.fence.pre_compose(h);
            let jsh = js.after_unchecked(h);
            first.then_unchecked(dom.fence.post_compose(&jsh))
        };
        let middle: Vec<ContinuousMap> = reduced
            .iter()
            .map(|v| {
                let core_map = ContinuousMap::new_unchecked(dom.core.clone(), cod.core.clone(), v.to_vec());
                cod.inclusion
                    .after_unchecked(&core_map)
                    .after_unchecked(&dom.retraction)
            })
            .collect();
        to_core(f)
            .then_unchecked(Fence::from_steps_unchecked(middle))
            .then_unchecked(to_core(g).reversed())
            .dedup()
    }
}

pub(crate) fn reduce(space: &Space, pointed: bool, settings: &Settings) -> Result<CoreReduction> {
    if !settings.use_cores {
        return Ok(CoreReduction::identity(space));
    }
    let protected = if pointed {
        Some(space.basepoint().ok_or(Error::MissingBasepoint("space"))?)
    } else {
        None
    };
    Ok(CoreReduction::compute(space, protected))
}

pub(crate) fn check_pair(f: &ContinuousMap, g: &ContinuousMap, pointed: bool) -> Result<()> {
    if !f.same_spaces(g) {
        return Err(Error::Mismatch("maps have different domains or codomains".into()));
    }
    if pointed && !(f.is_pointed() && g.is_pointed()) {
        return Err(Error::NotPointed);
    }
    Ok(())
}

/// Decides `f ≃ g` (pointed: through basepoint-preserving maps).
pub fn is_homotopic(f: &ContinuousMap, g: &ContinuousMap, pointed: bool, settings: &Settings) -> Result<HomotopyVerdict> {
    check_pair(f, g, pointed)?;
    let dom = reduce(f.domain(), pointed, settings)?;
    let plan = Plan::new(f.codomain(), pointed, settings)?;
    let mut stats = SearchStats::default();
    let hit = plan.connect(&dom, pointed, std::slice::from_ref(f), g, settings, &mut stats)?;
    Ok(HomotopyVerdict {
        homotopic: hit.is_some(),
        certificate: hit.map(|(_, fence)| fence),
        stats,
    })
}

/// Finds the first of `sources` homotopic to some member of `targets`, with
/// a fence from that source to that target. All maps share domain and
/// codomain with the reduction.
pub(crate) fn connect_any(
    red: &Reduction,
    sources: &[ContinuousMap],
    targets: &[ContinuousMap],
    settings: &Settings,
    stats: &mut SearchStats,
) -> Result<Option<(usize, usize, Fence)>> {
    if sources.is_empty() || targets.is_empty() {
        return Ok(None);
    }
    let a: Vec<Values> = sources.iter().map(|f| red.reduce_values(f)).collect();
    let b: Vec<Values> = targets.iter().map(|f| red.reduce_values(f)).collect();
    let hit = connect(&red.graph(), &a, &b, settings.budget.max_maps, stats)?;
    Ok(hit.map(|c| {
        let fence = red.lift_fence(&sources[c.source], &targets[c.target], &c.path);
        (c.source, c.target, fence)
    }))
}

/// Decides whether `f` is homotopic to a constant map (pointed: to the
/// constant at the codomain basepoint).
pub fn is_nullhomotopic(f: &ContinuousMap, pointed: bool, settings: &Settings) -> Result<HomotopyVerdict> {
    if pointed {
        let y0 = f.codomain().basepoint().ok_or(Error::MissingBasepoint("codomain"))?;
        let c = ContinuousMap::constant(f.domain(), f.codomain(), y0);
        return is_homotopic(f, &c, true, settings);
    }
    let red = Reduction::new(f.domain(), f.codomain(), false, settings)?;
    let mut stats = SearchStats::default();
    let start = red.reduce_values(f);
    let path = explore(&red.graph(), start, settings.budget.max_maps, &mut stats, |v| {
        v.windows(2).all(|w| w[0] == w[1])
    })?;
    Ok(match path {
        Some(path) => {
            let y = red.codomain.inclusion.at(path.last().unwrap()[0] as usize);
            let c = ContinuousMap::constant(f.domain(), f.codomain(), y);
            HomotopyVerdict {
                homotopic: true,
                certificate: Some(red.lift_fence(f, &c, &path)),
                stats,
            }
        }
        None => HomotopyVerdict {
            homotopic: false,
            certificate: None,
            stats,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::PointSet;
    use crate::catalog;
    use crate::poset::{Product, Subspace};

    fn verify(v: &HomotopyVerdict, f: &ContinuousMap, g: Option<&ContinuousMap>) {
        let cert = v.certificate.as_ref().unwrap();
        assert!(cert.is_valid());
        assert_eq!(cert.start(), f);
        if let Some(g) = g {
            assert_eq!(cert.end(), g);
        } else {
            assert!(cert.end().is_constant());
        }
    }

    #[test]
    fn identity_of_chain_vs_top() {
        let c = catalog::chain(2);
        let id = ContinuousMap::identity(&c);
        let top = ContinuousMap::constant(&c, &c, 1);
        for cores in [true, false] {
            let st = Settings {
                use_cores: cores,
                ..Settings::default()
            };
            let v = is_homotopic(&id, &top, false, &st).unwrap();
            assert!(v.homotopic);
            verify(&v, &id, Some(&top));
            if !cores {
                assert_eq!(v.certificate.unwrap().len(), 2);
            }
        }
    }

    #[test]
    fn pseudocircle_identity_not_nullhomotopic() {
        let s = catalog::pseudocircle();
        let id = ContinuousMap::identity(&s);
        for p in 0..4 {
            let c = ContinuousMap::constant(&s, &s, p);
            assert!(!is_homotopic(&id, &c, false, &Settings::default()).unwrap().homotopic);
        }
        assert!(!is_nullhomotopic(&id, false, &Settings::default()).unwrap().homotopic);
    }

    #[test]
    fn inclusion_of_half_is_nullhomotopic() {
        let s = catalog::pseudocircle();
        let u = catalog::incl_u(1);
        let v = is_nullhomotopic(&u, false, &Settings::default()).unwrap();
        assert!(v.homotopic);
        verify(&v, &u, None);
        let c = ContinuousMap::constant(u.domain(), &s, s.point("b1").unwrap());
        let v = is_homotopic(&u, &c, false, &Settings::default()).unwrap();
        assert!(v.homotopic);
        verify(&v, &u, Some(&c));
    }

    #[test]
    fn maps_into_chain_are_nullhomotopic() {
        let s = catalog::pseudocircle();
        let c = catalog::chain(3);
        for f in enumerate_maps(&s, &c, false, 1000).unwrap() {
            let v = is_nullhomotopic(&f, false, &Settings::default()).unwrap();
            assert!(v.homotopic);
            verify(&v, &f, None);
        }
    }

    #[test]
    fn diagonal_pair_inclusion_not_nullhomotopic() {
        let s = catalog::pseudocircle();
        let p = Product::new(&s, &s).unwrap();
        let (a1, a2) = (s.point("a1").unwrap(), s.point("a2").unwrap());
        let members = p
            .space
            .down_closure(&PointSet::from_indices(16, [p.pair(a1, a1), p.pair(a2, a2)]));
        let v = Subspace::new(&p.space, &members).unwrap();
        assert!(!is_nullhomotopic(&v.inclusion, false, &Settings::default()).unwrap().homotopic);
    }

    #[test]
    fn pointed_requires_pointed_maps() {
        let s = catalog::pseudocircle();
        let id = ContinuousMap::identity(&s);
        assert!(is_homotopic(&id, &id, true, &Settings::default()).is_err());
        let sp = catalog::pointed(&s, "b1");
        let id = ContinuousMap::identity(&sp);
        let v = is_homotopic(&id, &id, true, &Settings::default()).unwrap();
        assert!(v.homotopic && v.certificate.unwrap().is_pointed());
    }

    #[test]
    fn budget_is_a_distinct_outcome() {
        let d = catalog::discrete(1);
        let c = catalog::chain(6);
        let f = ContinuousMap::constant(&d, &c, 0);
        let g = ContinuousMap::constant(&d, &c, 5);
        let st = Settings {
            use_cores: false,
            ..Settings::default()
        }
        .with_map_cap(3);
        assert!(matches!(is_homotopic(&f, &g, false, &st), Err(Error::Budget(..))));
    }
}
