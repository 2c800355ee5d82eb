//! Homotopy searches split along product codomains.
//!
//! Maps into `Y₁ × Y₂` are pairs of maps, and a fence in the product
//! projects to fences in the factors. Conversely fences `F` from `f₁` to
//! `g₁` and `G` from `f₂` to `g₂` give the fence `(F_t, f₂)` followed by
//! `(g₁, G_t)`. So `f ≃ g` iff both coordinates are homotopic, and the
//! search runs in the much smaller factor map spaces.

use rustc_hash::FxHashSet;

use super::search::{component, SearchStats, Values};
use super::{connect_any, reduce, Fence, Reduction};
use crate::error::Result;
use crate::map::ContinuousMap;
use crate::poset::{CoreReduction, Space};
use crate::settings::Settings;

pub(crate) enum Plan {
    Leaf(CoreReduction),
    Product {
        space: Space,
        right_len: usize,
        pr1: ContinuousMap,
        pr2: ContinuousMap,
        left: Box<Plan>,
        right: Box<Plan>,
    },
}

impl Plan {
    pub fn new(codomain: &Space, pointed: bool, settings: &Settings) -> Result<Plan> {
        match codomain.factors() {
            Some((l, r)) => {
                let right_len = r.len();
                let proj = |k: usize| {
                    let values = (0..codomain.len())
                        .map(|p| if k == 0 { p / right_len } else { p % right_len } as u32)
                        .collect();
                    ContinuousMap::new_unchecked(codomain.clone(), if k == 0 { l.clone() } else { r.clone() }, values)
                };
                Ok(Plan::Product {
                    space: codomain.clone(),
                    right_len,
                    pr1: proj(0),
                    pr2: proj(1),
                    left: Box::new(Plan::new(l, pointed, settings)?),
                    right: Box::new(Plan::new(r, pointed, settings)?),
                })
            }
            None => Ok(Plan::Leaf(reduce(codomain, pointed, settings)?)),
        }
    }

    /// The first source homotopic to `target`, with a fence from it to
    /// `target`. `dom` is the reduction of the common domain.
    pub fn connect(
        &self,
        dom: &CoreReduction,
        pointed: bool,
        sources: &[ContinuousMap],
        target: &ContinuousMap,
        settings: &Settings,
        stats: &mut SearchStats,
    ) -> Result<Option<(usize, Fence)>> {
        match self {
            Plan::Leaf(cod) => {
                let red = Reduction::from_parts(dom.clone(), cod.clone(), pointed);
                let hit = connect_any(&red, sources, std::slice::from_ref(target), settings, stats)?;
                Ok(hit.map(|(k, _, fence)| (k, fence)))
            }
            Plan::Product {
                space,
                right_len,
                pr1,
                pr2,
                left,
                right,
            } => {
                let k = if sources.len() == 1 {
                    0
                } else {
                    let ok = self.reachable(dom, pointed, sources, target, settings, stats)?;
                    match ok.iter().position(|&b| b) {
                        Some(k) => k,
                        None => return Ok(None),
                    }
                };
                let s = &sources[k];
                let Some((_, fl)) = left.connect(
                    dom,
                    pointed,
                    &[pr1.after_unchecked(s)],
                    &pr1.after_unchecked(target),
                    settings,
                    stats,
                )?
                else {
                    return Ok(None);
                };
                let Some((_, fr)) = right.connect(
                    dom,
                    pointed,
                    &[pr2.after_unchecked(s)],
                    &pr2.after_unchecked(target),
                    settings,
                    stats,
                )?
                else {
                    return Ok(None);
                };
                let u = s.domain();
                let pair = |a: &ContinuousMap, b: &ContinuousMap| {
                    let values = (0..u.len()).map(|x| (a.at(x) * right_len + b.at(x)) as u32).collect();
                    ContinuousMap::new_unchecked(u.clone(), space.clone(), values)
                };
                let start_r = fr.start();
                let end_l = fl.end();
                let mut steps: Vec<ContinuousMap> = fl.steps().iter().map(|a| pair(a, start_r)).collect();
                steps.extend(fr.steps()[1..].iter().map(|b| pair(end_l, b)));
                Ok(Some((k, Fence::from_steps_unchecked(steps))))
            }
        }
    }

    /// For every source, whether it is homotopic to `target`.
    fn reachable(
        &self,
        dom: &CoreReduction,
        pointed: bool,
        sources: &[ContinuousMap],
        target: &ContinuousMap,
        settings: &Settings,
        stats: &mut SearchStats,
    ) -> Result<Vec<bool>> {
        match self {
            Plan::Leaf(cod) => {
                let red = Reduction::from_parts(dom.clone(), cod.clone(), pointed);
                let members: FxHashSet<Values> =
                    component(&red.graph(), red.reduce_values(target), settings.budget.max_maps, stats)?
                        .into_iter()
                        .collect();
                Ok(sources.iter().map(|s| members.contains(&red.reduce_values(s))).collect())
            }
            Plan::Product {
                pr1, pr2, left, right, ..
            } => {
                let proj = |p: &ContinuousMap| -> Vec<ContinuousMap> { sources.iter().map(|s| p.after_unchecked(s)).collect() };
                let a = left.reachable(dom, pointed, &proj(pr1), &pr1.after_unchecked(target), settings, stats)?;
                if !a.iter().any(|&b| b) {
                    return Ok(a);
                }
                let b = right.reachable(dom, pointed, &proj(pr2), &pr2.after_unchecked(target), settings, stats)?;
                Ok(a.into_iter().zip(b).map(|(x, y)| x && y).collect())
            }
        }
    }
}
