//! The Whitehead construction on finite spaces: mapping cylinders, fat
//! wedges and the lifting category `liftcat^WG`.
//!
//! For a closed subspace `A ⊆ Y` the fat wedge `Tⁿ` is the subspace of
//! `Y^{n+1}` of tuples with some coordinate in `A`. A map `L : X → Tⁿ` with
//! `tₙ ∘ L ≃ Δ ∘ f` is the same as `n + 1` maps `l_i ≃ f` (homotopy in a
//! product is coordinatewise) whose preimages `l_i⁻¹(A)` cover `X`. So
//! `liftcat^WG` is a minimum cover of `X` by the sets `l⁻¹(A)` as `l` runs
//! over the homotopy class of `f`. Maps whose source is not a closed
//! subspace are first replaced by their mapping cylinder.

use serde::{Deserialize, Serialize};

use crate::bitset::PointSet;
use crate::cover::{min_cover, InvariantValue};
use crate::error::{Error, Result};
use crate::homotopy::{component, is_homotopic, Fence, MapGraph, SearchStats};
use crate::map::{ContinuousMap, MapJson};
use crate::poset::{FiniteSpace, Power, Space, Subspace};
use crate::settings::Settings;
use std::collections::BTreeMap;
use std::sync::Arc;

/// `M = A ⊔ Y` with `y <= a` iff `y <= ι(a)`; `A` sits in `M` as a closed
/// subspace and `M` deformation retracts onto `Y`.
#[derive(Clone, Debug)]
pub struct MappingCylinder {
    pub source_map: ContinuousMap,
    pub space: Space,
    /// `A → M`
    pub mu: ContinuousMap,
    /// `Y → M`
    pub j: ContinuousMap,
    /// `M → Y`
    pub r: ContinuousMap,
    /// Fence from `j ∘ r` to `id_M`.
    pub rel_fence: Fence,
}

/// Points of `A` are named `A.<name>` in the cylinder, points of `Y`
/// `Y.<name>`.
pub fn mapping_cylinder(iota: &ContinuousMap) -> Result<MappingCylinder> {
    let a = iota.domain();
    let y = iota.codomain();
    let (na, ny) = (a.len(), y.len());
    let n = na + ny;
    let names: Vec<String> = (0..na)
        .map(|p| format!("A.{}", a.name(p)))
        .chain((0..ny).map(|p| format!("Y.{}", y.name(p))))
        .collect();
    let mut down = Vec::with_capacity(n);
    for p in 0..na {
        let mut d = PointSet::from_indices(n, a.down(p).iter());
        for q in y.down(iota.at(p)) {
            d.insert(na + q);
        }
        down.push(d);
    }
    for q in 0..ny {
        down.push(PointSet::from_indices(n, y.down(q).iter().map(|v| na + v)));
    }
    let base = y.basepoint().map(|b| na + b);
    let space: Space = Arc::new(FiniteSpace::from_down_sets(names, down, base)?);
    let mu = ContinuousMap::new(a.clone(), space.clone(), (0..na as u32).collect())?;
    let j = ContinuousMap::new(y.clone(), space.clone(), (0..ny).map(|q| (na + q) as u32).collect())?;
    let r_values = (0..na).map(|p| iota.at(p) as u32).chain(0..ny as u32).collect();
    let r = ContinuousMap::new(space.clone(), y.clone(), r_values)?;
    let rel_fence = Fence::new(vec![j.after(&r)?, ContinuousMap::identity(&space)])?;
    Ok(MappingCylinder {
        source_map: iota.clone(),
        space,
        mu,
        j,
        r,
        rel_fence,
    })
}

/// Whether `ι` is a subspace inclusion: injective and reflecting the order.
pub fn is_subspace_inclusion(iota: &ContinuousMap) -> bool {
    let a = iota.domain();
    let y = iota.codomain();
    iota.is_injective()
        && (0..a.len()).all(|p| (0..a.len()).all(|q| a.leq(p, q) == y.leq(iota.at(p), iota.at(q))))
}

/// The fat wedge `Tⁿ(ι) ⊆ Y^{n+1}`.
#[derive(Clone, Debug)]
pub struct FatWedge {
    pub base: ContinuousMap,
    pub level: usize,
    pub space: Space,
    /// `tₙ : Tⁿ → Y^{n+1}`; for `n = 0` this is `ι` itself.
    pub t: ContinuousMap,
    /// `Y^{n+1}` (for `n >= 1`).
    pub power: Option<Power>,
}

pub fn fat_wedge(iota: &ContinuousMap, n: usize, settings: &Settings) -> Result<FatWedge> {
    if !is_subspace_inclusion(iota) {
        return Err(Error::Invalid("fat wedges need a subspace inclusion".into()));
    }
    if n == 0 {
        return Ok(FatWedge {
            base: iota.clone(),
            level: 0,
            space: iota.domain().clone(),
            t: iota.clone(),
            power: None,
        });
    }
    let y = iota.codomain();
    let power = Power::new(y, n + 1, settings.budget.max_points)?;
    let image = iota.image();
    let members = PointSet::from_indices(
        power.space.len(),
        (0..power.space.len()).filter(|&p| power.decode(p).iter().any(|&c| image.contains(c))),
    );
    let sub = Subspace::new(&power.space, &members)?;
    Ok(FatWedge {
        base: iota.clone(),
        level: n,
        space: sub.space,
        t: sub.inclusion,
        power: Some(power),
    })
}

/// A Whitehead witness: maps `l_0, …, l_n : X → Y'` homotopic to `f'`
/// whose preimages of `A'` cover `X`. `Y'`, `A'` and `f'` are `Y`, the image
/// of `ι` and `f`, or their mapping-cylinder replacements.
#[derive(Clone, Debug)]
pub struct WgWitness {
    pub cylinder: bool,
    /// `f' : X → Y'`
    pub target: ContinuousMap,
    /// `A'` as points of `Y'`.
    pub closed_part: PointSet,
    pub maps: Vec<ContinuousMap>,
    /// Fence from `l_i` to `f'`.
    pub fences: Vec<Fence>,
}

/// A Whitehead witness in exchange form, with the problem it answers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WgWitnessJson {
    pub f: MapJson,
    pub iota: MapJson,
    pub cylinder: bool,
    pub target: MapJson,
    pub closed_part: Vec<String>,
    pub maps: Vec<BTreeMap<String, String>>,
    pub fences: Vec<Vec<BTreeMap<String, String>>>,
}

impl WgWitness {
    pub fn to_json(&self, f: &ContinuousMap, iota: &ContinuousMap) -> WgWitnessJson {
        let cod = self.target.codomain();
        WgWitnessJson {
            f: f.to_json(),
            iota: iota.to_json(),
            cylinder: self.cylinder,
            target: self.target.to_json(),
            closed_part: self.closed_part.iter().map(|p| cod.name(p).to_string()).collect(),
            maps: self.maps.iter().map(ContinuousMap::table).collect(),
            fences: self.fences.iter().map(|fc| fc.steps().iter().map(ContinuousMap::table).collect()).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WgStats {
    pub class_size: usize,
    pub distinct_preimages: usize,
    pub cover_nodes: usize,
}

#[derive(Clone, Debug)]
pub struct WgResult {
    pub value: InvariantValue,
    pub witness: Option<WgWitness>,
    pub stats: WgStats,
}

/// `liftcat^WG_f(ι)`: least `n` with `L : X → Tⁿ(ι)`, `tₙ ∘ L ≃ Δ ∘ f`.
pub fn liftcat_wg(f: &ContinuousMap, iota: &ContinuousMap, settings: &Settings) -> Result<WgResult> {
    if !f.codomain().same_as(iota.codomain()) {
        return Err(Error::Mismatch("f and ι must share a codomain".into()));
    }
    match wg_inner(f, iota, settings) {
        Err(Error::Budget(kind, cap)) => Ok(WgResult {
            value: InvariantValue::BudgetExceeded { kind, cap },
            witness: None,
            stats: WgStats::default(),
        }),
        other => other,
    }
}

fn wg_inner(f: &ContinuousMap, iota: &ContinuousMap, settings: &Settings) -> Result<WgResult> {
    let closed = is_subspace_inclusion(iota) && iota.codomain().is_up_set(&iota.image());
    let (target, a_part) = if closed {
        (f.clone(), iota.image())
    } else {
        let cyl = mapping_cylinder(iota)?;
        (cyl.j.after(f)?, cyl.mu.image())
    };
    let x = f.domain();
    let graph = MapGraph {
        dom: x,
        cod: target.codomain(),
        fixed: None,
    };
    let mut sstats = SearchStats::default();
    let class = component(&graph, target.values().into(), settings.budget.max_maps, &mut sstats)?;
    let mut stats = WgStats {
        class_size: class.len(),
        ..WgStats::default()
    };
    // Distinct preimages, each with its first map in search order.
    let mut pre: Vec<(PointSet, usize)> = Vec::new();
    let mut seen = rustc_hash::FxHashSet::default();
    for (i, l) in class.iter().enumerate() {
        let p = PointSet::from_indices(x.len(), (0..x.len()).filter(|&q| a_part.contains(l[q] as usize)));
        if seen.insert(p.clone()) {
            pre.push((p, i));
        }
    }
    stats.distinct_preimages = pre.len();
    let maximal: Vec<(PointSet, usize)> = pre
        .iter()
        .filter(|(p, _)| !pre.iter().any(|(q, _)| p != q && p.is_subset(q)))
        .cloned()
        .collect();
    let sets: Vec<PointSet> = maximal.iter().map(|(p, _)| p.clone()).collect();
    let Some(sol) = min_cover(&sets, &x.all(), settings.budget.max_cover_nodes)? else {
        return Ok(WgResult {
            value: InvariantValue::Infinite,
            witness: None,
            stats,
        });
    };
    stats.cover_nodes = sol.nodes;
    let mut maps = Vec::new();
    let mut fences = Vec::new();
    for &k in &sol.chosen {
        let l = ContinuousMap::new(x.clone(), target.codomain().clone(), class[maximal[k].1].to_vec())?;
        let v = is_homotopic(&l, &target, false, settings)?;
        fences.push(v.certificate.ok_or_else(|| Error::Invalid("class member not homotopic".into()))?);
        maps.push(l);
    }
    Ok(WgResult {
        value: InvariantValue::Finite(sol.chosen.len() - 1),
        witness: Some(WgWitness {
            cylinder: !closed,
            target,
            closed_part: a_part,
            maps,
            fences,
        }),
        stats,
    })
}
