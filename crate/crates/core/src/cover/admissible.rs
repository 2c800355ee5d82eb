//! Admissible open sets and the search for the maximal ones.
//!
//! Admissibility is closed under passing to smaller opens (restrict the
//! lift and every fence step), so the maximal admissible opens are found by
//! descending from `X`, removing one maximal point at a time, and never
//! descending below an admissible set.

use rustc_hash::FxHashSet;

use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::homotopy::{component, enumerate_maps, reduce, Fence, MapGraph, Plan, SearchStats, Values};
use crate::map::ContinuousMap;
use crate::par;
use crate::poset::{CoreReduction, Space, Subspace};
use crate::settings::Settings;

/// What an open set must admit.
#[derive(Clone, Debug)]
pub enum Problem {
    /// Some `l : U → A` with `ι ∘ l ≃ f|U`.
    Lift { f: ContinuousMap, iota: ContinuousMap },
    /// `f|U ≃ g|U`.
    Distance { f: ContinuousMap, g: ContinuousMap },
}

impl Problem {
    pub fn f(&self) -> &ContinuousMap {
        match self {
            Problem::Lift { f, .. } | Problem::Distance { f, .. } => f,
        }
    }

    pub fn domain(&self) -> &Space {
        self.f().domain()
    }

    pub fn codomain(&self) -> &Space {
        self.f().codomain()
    }

    /// The same problem with `f` (and `g`) precomposed with `h`.
    pub fn pull_back(&self, h: &ContinuousMap) -> Problem {
        match self {
            Problem::Lift { f, iota } => Problem::Lift {
                f: f.after_unchecked(h),
                iota: iota.clone(),
            },
            Problem::Distance { f, g } => Problem::Distance {
                f: f.after_unchecked(h),
                g: g.after_unchecked(h),
            },
        }
    }

    pub(crate) fn validate(&self, pointed: bool) -> Result<()> {
        let (a, b) = match self {
            Problem::Lift { f, iota } => {
                if !f.codomain().same_as(iota.codomain()) {
                    return Err(Error::Mismatch("f and ι must share a codomain".into()));
                }
                (f, iota)
            }
            Problem::Distance { f, g } => {
                if !f.same_spaces(g) {
                    return Err(Error::Mismatch("f and g must share domain and codomain".into()));
                }
                (f, g)
            }
        };
        if pointed {
            for m in [a, b] {
                if m.domain().basepoint().is_none() {
                    return Err(Error::MissingBasepoint("domain"));
                }
                if m.codomain().basepoint().is_none() {
                    return Err(Error::MissingBasepoint("codomain"));
                }
                if !m.is_pointed() {
                    return Err(Error::NotPointed);
                }
            }
        }
        Ok(())
    }
}

/// An admissible open set with its certificate.
#[derive(Clone, Debug)]
pub struct CoverPart {
    /// Members as points of `X`.
    pub members: PointSet,
    /// `U` as a subspace (points keep their names).
    pub subspace: Space,
    /// `l : U → A` for lifting problems.
    pub lift: Option<ContinuousMap>,
    /// Lifting problems: from `ι ∘ l` to `f|U`. Distance problems: from
    /// `f|U` to `g|U`.
    pub fence: Fence,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CheckStats {
    pub opens_evaluated: usize,
    pub maps_visited: usize,
}

impl CheckStats {
    pub fn add(&mut self, other: CheckStats) {
        self.opens_evaluated += other.opens_evaluated;
        self.maps_visited += other.maps_visited;
    }
}

/// Decides admissibility of single opens for a fixed problem.
pub(crate) struct Checker<'a> {
    problem: &'a Problem,
    pointed: bool,
    settings: &'a Settings,
    plan: Plan,
    /// For lifting problems: the reduction of `A` and `ι ∘ j_A : A₀ → Y`.
    source: Option<(CoreReduction, ContinuousMap)>,
    /// `ι⁻¹` on the points of `Y`, when `ι` is an order embedding.
    inverse: Option<Vec<Option<u32>>>,
    /// `(k, (pr_k ∘ ι)⁻¹)` when `Y = Y₁ × Y₂` and `pr_k ∘ ι` is a homeomorphism.
    /// Then `ι` is the graph of `h = pr_{3-k} ∘ ι ∘ (pr_k ∘ ι)⁻¹`, and `f|U`
    /// lifts iff `h ∘ pr_k ∘ f|U ≃ pr_{3-k} ∘ f|U`.
    graph: Option<(usize, Vec<u32>)>,
}

fn graph_inverse(iota: &ContinuousMap) -> Option<(usize, Vec<u32>)> {
    let (a, y) = (iota.domain(), iota.codomain());
    let (y1, y2) = y.factors()?;
    let n2 = y2.len();
    [(0, y1), (1, y2)].into_iter().find_map(|(k, yk)| {
        if yk.len() != a.len() {
            return None;
        }
        let pr = |p: usize| if k == 0 { iota.at(p) / n2 } else { iota.at(p) % n2 };
        let mut inv = vec![u32::MAX; a.len()];
        for p in 0..a.len() {
            if inv[pr(p)] != u32::MAX {
                return None;
            }
            inv[pr(p)] = p as u32;
        }
        let reflects = (0..a.len()).all(|p| (0..a.len()).all(|q| !yk.leq(pr(p), pr(q)) || a.leq(p, q)));
        reflects.then_some((k, inv))
    })
}

/// Candidate lifts enumerated before switching to a walk through the
/// homotopy class of `f|U` (order embeddings only).
const FIRST_ENUMERATION: usize = if cfg!(test) { 2 } else { 20_000 };

fn embedding_inverse(iota: &ContinuousMap) -> Option<Vec<Option<u32>>> {
    let (a, y) = (iota.domain(), iota.codomain());
    let mut inv = vec![None; y.len()];
    for p in 0..a.len() {
        if inv[iota.at(p)].replace(p as u32).is_some() {
            return None;
        }
    }
    let reflects = (0..a.len()).all(|p| (0..a.len()).all(|q| !y.leq(iota.at(p), iota.at(q)) || a.leq(p, q)));
    reflects.then_some(inv)
}

impl<'a> Checker<'a> {
    pub fn new(problem: &'a Problem, pointed: bool, settings: &'a Settings) -> Result<Checker<'a>> {
        let plan = Plan::new(problem.codomain(), pointed, settings)?;
        let (source, inverse, graph) = match problem {
            Problem::Lift { iota, .. } => {
                let red = reduce(iota.domain(), pointed, settings)?;
                let through = iota.after_unchecked(&red.inclusion);
                (Some((red, through)), embedding_inverse(iota), graph_inverse(iota))
            }
            Problem::Distance { .. } => (None, None, None),
        };
        Ok(Checker {
            problem,
            pointed,
            settings,
            plan,
            source,
            inverse,
            graph,
        })
    }

    /// The certificate for `members`, or `None` when it is not admissible.
    pub fn check(&self, members: &PointSet) -> Result<(Option<CoverPart>, CheckStats)> {
        let x = self.problem.domain();
        let sub = Subspace::new(x, members)?;
        let dom = reduce(&sub.space, self.pointed, self.settings)?;
        let mut stats = SearchStats::default();
        let part = match self.problem {
            Problem::Distance { f, g } => {
                let fu = f.after_unchecked(&sub.inclusion);
                let gu = g.after_unchecked(&sub.inclusion);
                self.plan
                    .connect(&dom, self.pointed, &[fu], &gu, self.settings, &mut stats)?
                    .map(|(_, fence)| (None, fence))
            }
            Problem::Lift { f, iota } => {
                let (ared, through) = self.source.as_ref().unwrap();
                let fu = f.after_unchecked(&sub.inclusion);
                if let Some((k, inv)) = self.graph.as_ref().filter(|_| self.settings.lift_shortcuts) {
                    let n2 = iota.codomain().factors().unwrap().1.len() as u32;
                    let l = fu.values().iter().map(|&v| inv[(if *k == 0 { v / n2 } else { v % n2 }) as usize]).collect();
                    let lift = ContinuousMap::new_unchecked(sub.space.clone(), iota.domain().clone(), l);
                    let part = self
                        .plan
                        .connect(&dom, self.pointed, &[iota.after_unchecked(&lift)], &fu, self.settings, &mut stats)?
                        .map(|(_, fence)| (Some(lift), fence));
                    return self.finish(members, &sub.space, part, stats);
                }
                let cap = self.settings.budget.max_maps;
                let first = if self.inverse.is_some() && self.settings.lift_shortcuts { cap.min(FIRST_ENUMERATION) } else { cap };
                let cands = match enumerate_maps(&dom.core, &ared.core, self.pointed, first) {
                    Err(e) if e.is_budget() && first < cap => {
                        let lift = self.lift_in_class(&dom, &fu, iota, &mut stats)?;
                        return self.finish(members, &sub.space, lift, stats);
                    }
                    other => other?,
                };
                let r = &dom.retraction;
                let sources: Vec<ContinuousMap> =
                    cands.iter().map(|l0| through.after_unchecked(l0).after_unchecked(r)).collect();
                self.plan
                    .connect(&dom, self.pointed, &sources, &fu, self.settings, &mut stats)?
                    .map(|(k, fence)| {
                        let lift = ared.inclusion.after_unchecked(&cands[k]).after_unchecked(r);
                        (Some(lift), fence)
                    })
            }
        };
        self.finish(members, &sub.space, part, stats)
    }

    fn finish(
        &self,
        members: &PointSet,
        subspace: &Space,
        part: Option<(Option<ContinuousMap>, Fence)>,
        stats: SearchStats,
    ) -> Result<(Option<CoverPart>, CheckStats)> {
        let cs = CheckStats {
            opens_evaluated: 1,
            maps_visited: stats.maps_visited,
        };
        Ok((
            part.map(|(lift, fence)| CoverPart {
                members: members.clone(),
                subspace: subspace.clone(),
                lift,
                fence,
            }),
            cs,
        ))
    }

    /// Lifting through an order embedding `ι`: a lift exists iff the class
    /// of `f|U₀` contains a map landing in `ι(A)`. The class is walked on
    /// the reduced domain, one factor at a time for product codomains.
    fn lift_in_class(
        &self,
        dom: &CoreReduction,
        fu: &ContinuousMap,
        iota: &ContinuousMap,
        stats: &mut SearchStats,
    ) -> Result<Option<(Option<ContinuousMap>, Fence)>> {
        let inv = self.inverse.as_ref().unwrap();
        let u0 = &dom.core;
        let f0 = fu.after_unchecked(&dom.inclusion);
        let fixed = if self.pointed { u0.basepoint() } else { None };
        let cap = self.settings.budget.max_maps;
        let y = iota.codomain();
        let hit: Option<Vec<u32>> = match y.factors() {
            Some((y1, y2)) => {
                let n2 = y2.len() as u32;
                let split = |k: u32| -> Values {
                    f0.values().iter().map(|&v| if k == 0 { v / n2 } else { v % n2 }).collect()
                };
                let c1 = component(&MapGraph { dom: u0, cod: y1, fixed }, split(0), cap, stats)?;
                let c2: FxHashSet<Values> = component(&MapGraph { dom: u0, cod: y2, fixed }, split(1), cap, stats)?
                    .into_iter()
                    .collect();
                // for each point of Y₁, the points of Y₂ it is paired with in ι(A)
                let mut fibres = vec![Vec::new(); y1.len()];
                for (p, a) in inv.iter().enumerate() {
                    if a.is_some() {
                        fibres[p / n2 as usize].push(p as u32 % n2);
                    }
                }
                let pair = |g1: &[u32], g2: &[u32]| g1.iter().zip(g2).map(|(&a, &b)| a * n2 + b).collect::<Vec<u32>>();
                let mut hit = None;
                for g1 in &c1 {
                    let fib: Vec<&Vec<u32>> = g1.iter().map(|&v| &fibres[v as usize]).collect();
                    if fib.iter().any(|f| f.is_empty()) {
                        continue;
                    }
                    if fib.iter().all(|f| f.len() == 1) {
                        let g2: Values = fib.iter().map(|f| f[0]).collect();
                        if c2.contains(&g2) {
                            hit = Some(pair(g1, &g2));
                            break;
                        }
                    } else if let Some(g2) = c2.iter().find(|g2| pair(g1, g2).iter().all(|&p| inv[p as usize].is_some())) {
                        hit = Some(pair(g1, g2));
                        break;
                    }
                }
                hit
            }
            None => component(&MapGraph { dom: u0, cod: y, fixed }, f0.values().into(), cap, stats)?
                .into_iter()
                .find(|g| g.iter().all(|&v| inv[v as usize].is_some()))
                .map(|g| g.to_vec()),
        };
        let Some(g) = hit else {
            return Ok(None);
        };
        let l0 = g.iter().map(|&v| inv[v as usize].unwrap()).collect();
        let l0 = ContinuousMap::new_unchecked(u0.clone(), iota.domain().clone(), l0);
        let lift = l0.after_unchecked(&dom.retraction);
        let source = iota.after_unchecked(&lift);
        let fence = self
            .plan
            .connect(dom, self.pointed, &[source], fu, self.settings, stats)?
            .map(|(_, fence)| fence)
            .ok_or_else(|| Error::Invalid("lift found in the class of f|U but no fence".into()))?;
        Ok(Some((Some(lift), fence)))
    }

    /// Checks many opens, in parallel when enabled; results in input order.
    pub fn check_all(&self, sets: Vec<PointSet>) -> Result<(Vec<Option<CoverPart>>, CheckStats)> {
        let results = par::map_vec(sets, self.settings.parallel, |s| self.check(&s));
        let mut total = CheckStats::default();
        let mut out = Vec::with_capacity(results.len());
        for r in results {
            let (p, st) = r?;
            total.add(st);
            out.push(p);
        }
        Ok((out, total))
    }

    /// The smallest open set a part containing `x` can be: `U_x`, joined
    /// with `U_{x₀}` in the pointed flavor.
    pub fn minimal_open(&self, x: usize) -> PointSet {
        let space = self.problem.domain();
        let mut u = space.down(x).clone();
        if self.pointed {
            if let Some(b) = space.basepoint() {
                u.union_with(space.down(b));
            }
        }
        u
    }

    /// All maximal admissible opens, in canonical order. Budget:
    /// `max_opens` evaluations in total.
    pub fn maximal_opens(&self, stats: &mut CheckStats) -> Result<Vec<CoverPart>> {
        let space = self.problem.domain();
        let protected = if self.pointed { space.basepoint() } else { None };
        let cap = self.settings.budget.max_opens;
        let mut found: Vec<CoverPart> = Vec::new();
        let mut seen: FxHashSet<PointSet> = FxHashSet::default();
        let mut level = vec![space.all()];
        seen.insert(space.all());
        while !level.is_empty() {
            level.sort();
            if stats.opens_evaluated + level.len() > cap {
                return Err(Error::Budget(crate::error::BudgetKind::Opens, cap));
            }
            let (results, st) = self.check_all(level.clone())?;
            stats.add(st);
            let mut next = Vec::new();
            for (set, res) in level.into_iter().zip(results) {
                if let Some(part) = res {
                    found.push(part);
                    continue;
                }
                for m in space.maximal_in(&set) {
                    if Some(m) == protected {
                        continue;
                    }
                    let mut child = set.clone();
                    child.remove(m);
                    if child.is_empty() || !seen.insert(child.clone()) {
                        continue;
                    }
                    next.push(child);
                }
            }
            // Subsets of an admissible set are admissible but not maximal.
            next.retain(|c| !found.iter().any(|p| c.is_subset(&p.members)));
            level = next;
        }
        let keep: Vec<bool> = (0..found.len())
            .map(|i| {
                !found
                    .iter()
                    .enumerate()
                    .any(|(j, q)| j != i && found[i].members.is_subset(&q.members) && found[i].members != q.members)
            })
            .collect();
        let mut out: Vec<CoverPart> = found.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect();
        out.sort_by(|a, b| a.members.cmp(&b.members));
        out.dedup_by(|a, b| a.members == b.members);
        Ok(out)
    }
}
