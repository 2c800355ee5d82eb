//! Random finite spaces and maps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::homotopy::enumerate_maps;
use crate::map::ContinuousMap;
use crate::poset::{build_space, CoreReduction, Space, Subspace};
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GeneratorConfig {
    pub max_points: usize,
    /// Probability of each relation `p_i < p_j` (`i < j`) before closure.
    pub edge_density: f64,
    pub pointed: bool,
    pub normal_only: bool,
    /// Probability of drawing from height-2 spaces with a non-contractible
    /// component instead. Uniform small posets are almost always
    /// contractible (about 1% are not at five points).
    pub noncontractible: f64,
    /// Size cap for those draws. Five-point cores such as `K(3,2)` push
    /// `cat(X × X)` and `TC` into minutes.
    pub noncontractible_points: usize,
    pub seed: u64,
    /// Attempts before a filtered generation gives up.
    pub retries: usize,
    /// Cap on maps enumerated when sampling a map uniformly.
    pub map_sample_cap: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            max_points: 5,
            edge_density: 0.4,
            pointed: false,
            normal_only: false,
            noncontractible: 0.25,
            noncontractible_points: 4,
            seed: 0,
            retries: 200,
            map_sample_cap: 200_000,
        }
    }
}

impl GeneratorConfig {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// A random DAG on `1..=max_points` points, closed transitively. Point
/// names are `p0, p1, …`; pointed spaces get a maximal basepoint.
pub fn gen_space<R: Rng>(rng: &mut R, cfg: &GeneratorConfig) -> Result<Space> {
    // non-contractible spaces are never normal
    if cfg.max_points.min(cfg.noncontractible_points) >= 4 && !cfg.normal_only && rng.gen_bool(cfg.noncontractible.clamp(0.0, 1.0)) {
        return gen_noncontractible(rng, cfg);
    }
    for _ in 0..cfg.retries.max(1) {
        let n = rng.gen_range(1..=cfg.max_points.max(1));
        let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        // random labelling so low indices are not always minimal
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let mut rel = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen_bool(cfg.edge_density.clamp(0.0, 1.0)) {
                    rel.push((names[perm[i]].clone(), names[perm[j]].clone()));
                }
            }
        }
        let mut space = build_space(&names, &rel, None)?.space;
        if cfg.pointed {
            // a closed basepoint, i.e. a maximal point
            let top = space.maximal_in(&space.all());
            space = Arc::new(space.with_basepoint(Some(*top.choose(rng).unwrap()))?);
        }
        if cfg.normal_only && !space.is_normal().0 {
            continue;
        }
        return Ok(space);
    }
    Err(Error::Invalid("no space passed the generation filter".into()))
}

/// Minimal points below maximal points, kept once the core has a component
/// of at least two points.
fn gen_noncontractible<R: Rng>(rng: &mut R, cfg: &GeneratorConfig) -> Result<Space> {
    for _ in 0..cfg.retries.max(1) {
        let n = rng.gen_range(4..=cfg.max_points.min(cfg.noncontractible_points));
        let low = rng.gen_range(2..=n - 2);
        let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let mut rel = Vec::new();
        for i in 0..low {
            for j in low..n {
                if rng.gen_bool(0.7) {
                    rel.push((names[perm[i]].clone(), names[perm[j]].clone()));
                }
            }
        }
        let mut space = build_space(&names, &rel, None)?.space;
        let core = CoreReduction::compute(&space, None).core;
        if core.components().iter().all(|c| c.count() < 2) {
            continue;
        }
        if cfg.pointed {
            let top = space.maximal_in(&space.all());
            space = Arc::new(space.with_basepoint(Some(*top.choose(rng).unwrap()))?);
        }
        return Ok(space);
    }
    Err(Error::Invalid("no non-contractible space generated".into()))
}

/// A path-connected random space (retrying).
pub fn gen_connected<R: Rng>(rng: &mut R, cfg: &GeneratorConfig) -> Result<Space> {
    for _ in 0..cfg.retries.max(1) {
        let s = gen_space(rng, cfg)?;
        if s.is_path_connected() {
            return Ok(s);
        }
    }
    Err(Error::Invalid("no connected space generated".into()))
}

/// A map `X → Y` drawn uniformly from all continuous maps. Pointed spaces
/// give pointed maps.
pub fn gen_map<R: Rng>(rng: &mut R, x: &Space, y: &Space, cfg: &GeneratorConfig) -> Result<ContinuousMap> {
    let pointed = x.basepoint().is_some() && y.basepoint().is_some();
    let maps = enumerate_maps(x, y, pointed, cfg.map_sample_cap)?;
    maps.choose(rng)
        .cloned()
        .ok_or_else(|| Error::Invalid("no map between the given spaces".into()))
}

/// Inclusion of a random non-empty subspace of `Y` (containing the
/// basepoint when there is one).
pub fn gen_inclusion<R: Rng>(rng: &mut R, y: &Space) -> Result<ContinuousMap> {
    let n = y.len();
    let mut members = PointSet::empty(n);
    for p in 0..n {
        if rng.gen_bool(0.5) {
            members.insert(p);
        }
    }
    if let Some(b) = y.basepoint() {
        members.insert(b);
    }
    if members.is_empty() {
        members.insert(rng.gen_range(0..n));
    }
    Ok(Subspace::new(y, &members)?.inclusion)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn biased_draws_are_not_contractible() {
        let cfg = GeneratorConfig {
            noncontractible: 1.0,
            ..GeneratorConfig::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let s = gen_space(&mut rng, &cfg).unwrap();
            assert!(!s.is_normal().0);
            assert!(CoreReduction::compute(&s, None).core.len() >= 4);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let cfg = GeneratorConfig::default();
        let a = gen_space(&mut ChaCha8Rng::seed_from_u64(5), &cfg).unwrap();
        let b = gen_space(&mut ChaCha8Rng::seed_from_u64(5), &cfg).unwrap();
        assert!(a.same_as(&b));
    }

    #[test]
    fn one_point_bound() {
        let cfg = GeneratorConfig {
            max_points: 1,
            ..GeneratorConfig::default()
        };
        let s = gen_space(&mut ChaCha8Rng::seed_from_u64(0), &cfg).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn normal_filter_holds() {
        let cfg = GeneratorConfig {
            normal_only: true,
            ..GeneratorConfig::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            assert!(gen_space(&mut rng, &cfg).unwrap().is_normal().0);
        }
    }

    #[test]
    fn maps_are_continuous_and_pointed() {
        let cfg = GeneratorConfig {
            pointed: true,
            ..GeneratorConfig::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let x = gen_space(&mut rng, &cfg).unwrap();
            let y = gen_space(&mut rng, &cfg).unwrap();
            let f = gen_map(&mut rng, &x, &y, &cfg).unwrap();
            assert!(f.is_pointed());
            let b = x.basepoint().unwrap();
            assert_eq!(x.up(b).count(), 1);
            let i = gen_inclusion(&mut rng, &y).unwrap();
            assert!(i.is_pointed());
        }
    }
}
