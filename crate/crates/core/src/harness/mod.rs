//! Randomized checks of the algebraic properties of the invariants.
//!
//! A property is a function over a [`Case`], which hands out random spaces
//! and maps and records them. Recorded draws are stored with every failure
//! and replay the instance exactly, without the generator.

pub mod config;
pub mod gen;
mod properties;
pub mod report;

use std::hash::{Hash, Hasher};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHasher;

pub use config::SuiteConfig;
pub use properties::{Property, CATALOG};
pub use report::{Draw, Failure, Instance, Outcome, PropertyReport, SuiteReport, SCHEMA_VERSION};

use crate::bitset::PointSet;
use crate::catalog;
use crate::certcheck;
use crate::cover::{InvariantResult, InvariantValue};
use crate::error::{Error, Result};
use crate::homotopy::{is_homotopic, is_nullhomotopic};
use crate::map::ContinuousMap;
use crate::par;
use crate::poset::{FiniteSpace, Space, Subspace};
use crate::whitehead::liftcat_wg;
use gen::GeneratorConfig;

/// `None` is infinity.
pub(crate) type Val = Option<usize>;

pub(crate) enum Stop {
    /// The drawn objects miss a hypothesis; draw again.
    Reject(String),
    Budget(String),
    Fail(String),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Stop {
        if e.is_budget() {
            Stop::Budget(e.to_string())
        } else {
            Stop::Fail(format!("error: {e}"))
        }
    }
}

pub(crate) type Check<T = ()> = std::result::Result<T, Stop>;

enum Source<'a> {
    Random {
        rng: &'a mut ChaCha8Rng,
        inject: Option<Space>,
    },
    Replay {
        draws: &'a [Draw],
        next: usize,
    },
}

pub(crate) struct Case<'a> {
    cfg: &'a SuiteConfig,
    pub pointed: bool,
    normality_filter: bool,
    source: Source<'a>,
    draws: Vec<Draw>,
    certificates: usize,
}

impl<'a> Case<'a> {
    fn next(&mut self) -> Check<Draw> {
        match &mut self.source {
            Source::Replay { draws, next } => {
                let d = draws.get(*next).cloned().ok_or(Stop::Fail("replay ran out of draws".into()))?;
                *next += 1;
                Ok(d)
            }
            Source::Random { .. } => unreachable!(),
        }
    }

    fn gen_config(&self, max_points: usize, pointed: bool) -> GeneratorConfig {
        GeneratorConfig {
            max_points,
            pointed,
            ..self.cfg.generator
        }
    }

    fn space_with(&mut self, max_points: usize, pointed: bool) -> Check<Space> {
        let cfg = self.gen_config(max_points, pointed);
        let s = match &mut self.source {
            Source::Random { inject: Some(s), .. } => {
                if pointed && s.basepoint().is_none() {
                    let top = s.maximal_in(&s.all())[0];
                    std::sync::Arc::new(s.with_basepoint(Some(top))?)
                } else {
                    s.clone()
                }
            }
            Source::Random { rng, inject: None } => {
                gen::gen_space(*rng, &cfg).map_err(|e| Stop::Reject(e.to_string()))?
            }
            Source::Replay { .. } => match self.next()? {
                Draw::Space(j) => FiniteSpace::from_json(&j)?.space,
                _ => return Err(Stop::Fail("replay out of step: expected a space".into())),
            },
        };
        self.draws.push(Draw::Space(s.to_json()));
        Ok(s)
    }

    pub fn space(&mut self) -> Check<Space> {
        self.space_with(self.cfg.generator.max_points, self.pointed)
    }

    /// A space for properties that square products.
    pub fn small_space(&mut self) -> Check<Space> {
        self.space_with(self.cfg.small_points.min(self.cfg.generator.max_points), self.pointed)
    }

    /// A space of at most four points, for properties whose plain route is
    /// exhaustive over maps into `Y × Y`.
    pub fn tiny_space(&mut self) -> Check<Space> {
        self.space_with(self.cfg.generator.max_points.min(4), self.pointed)
    }

    pub fn pointed_space(&mut self) -> Check<Space> {
        self.space_with(self.cfg.generator.max_points, true)
    }

    /// A uniformly random map; pointed when both spaces are.
    pub fn map(&mut self, x: &Space, y: &Space) -> Check<ContinuousMap> {
        let cfg = self.cfg.generator;
        let f = match &mut self.source {
            Source::Random { rng, .. } => gen::gen_map(*rng, x, y, &cfg)?,
            Source::Replay { .. } => self.replay_map(x, y)?,
        };
        self.draws.push(Draw::Map(f.table()));
        Ok(f)
    }

    fn replay_map(&mut self, x: &Space, y: &Space) -> Check<ContinuousMap> {
        let Draw::Map(t) = self.next()? else {
            return Err(Stop::Fail("replay out of step: expected a map".into()));
        };
        if t.len() != x.len() {
            return Err(Stop::Fail("replayed map has the wrong domain".into()));
        }
        let mut values = vec![0u32; x.len()];
        for (k, v) in &t {
            values[x.require_point(k)?] = y.require_point(v)? as u32;
        }
        Ok(ContinuousMap::new(x.clone(), y.clone(), values)?)
    }

    /// Inclusion of a random subspace of `y`.
    pub fn inclusion(&mut self, y: &Space) -> Check<ContinuousMap> {
        let i = match &mut self.source {
            Source::Random { rng, .. } => gen::gen_inclusion(*rng, y)?,
            Source::Replay { .. } => {
                let Draw::Members(names) = self.next()? else {
                    return Err(Stop::Fail("replay out of step: expected a subspace".into()));
                };
                let mut m = PointSet::empty(y.len());
                for n in &names {
                    m.insert(y.require_point(n)?);
                }
                Subspace::new(y, &m)?.inclusion
            }
        };
        self.draws.push(Draw::Members(y.set_names(&i.image())));
        Ok(i)
    }

    /// A map homotopic to `f`: a random walk of single-point cover moves,
    /// each comparable with the last. Pointed cases keep the basepoint.
    pub fn walk(&mut self, f: &ContinuousMap) -> Check<ContinuousMap> {
        let (x, y) = (f.domain(), f.codomain());
        let g = match &mut self.source {
            Source::Random { rng, .. } => {
                let fixed = if self.pointed { x.basepoint() } else { None };
                let mut v = f.values().to_vec();
                for _ in 0..rng.gen_range(1..=8) {
                    let mut moves = Vec::new();
                    for p in (0..x.len()).filter(|&p| Some(p) != fixed) {
                        let cur = v[p] as usize;
                        for &w in y.lower_covers(cur).iter().chain(y.upper_covers(cur)) {
                            if x.lower_covers(p).iter().all(|&q| y.leq(v[q] as usize, w))
                                && x.upper_covers(p).iter().all(|&q| y.leq(w, v[q] as usize))
                            {
                                moves.push((p, w));
                            }
                        }
                    }
                    if let Some(&(p, w)) = moves.choose(*rng) {
                        v[p] = w as u32;
                    }
                }
                ContinuousMap::new(x.clone(), y.clone(), v)?
            }
            Source::Replay { .. } => self.replay_map(x, y)?,
        };
        self.draws.push(Draw::Map(g.table()));
        Ok(g)
    }

    pub fn need_normal(&self, s: &Space, what: &str) -> Check {
        if self.normality_filter && !s.is_normal().0 {
            return Err(Stop::Reject(format!("{what} is not normal")));
        }
        Ok(())
    }

    /// Free category needs path-connected spaces; pointed does not.
    pub fn need_connected(&self, s: &Space, what: &str) -> Check {
        if !self.pointed && !s.is_path_connected() {
            return Err(Stop::Reject(format!("{what} is not path-connected")));
        }
        Ok(())
    }

    /// Constant map at the basepoint of `y`, or at its first point.
    pub fn constant(&self, x: &Space, y: &Space) -> ContinuousMap {
        ContinuousMap::constant(x, y, y.basepoint().unwrap_or(0))
    }

    fn value(&mut self, r: InvariantResult, what: &str) -> Check<Val> {
        match r.value {
            InvariantValue::BudgetExceeded { kind, cap } => Err(Stop::Budget(format!("{what}: {kind} budget {cap}"))),
            InvariantValue::Infinite => Ok(None),
            InvariantValue::Finite(n) => {
                if self.cfg.verify_certificates {
                    let cert = r.certificate.ok_or_else(|| Stop::Fail(format!("{what}: no certificate")))?;
                    certcheck::check_cover(&cert.to_json(), Some(n + 1))
                        .map_err(|e| Stop::Fail(format!("{what}: certificate rejected: {e}")))?;
                    self.certificates += 1;
                }
                Ok(Some(n))
            }
        }
    }

    pub fn liftcat_in(&mut self, pointed: bool, f: &ContinuousMap, iota: &ContinuousMap) -> Check<Val> {
        let r = crate::cover::liftcat_op(f, iota, pointed, &self.cfg.settings)?;
        self.value(r, "liftcat")
    }

    pub fn liftcat(&mut self, f: &ContinuousMap, iota: &ContinuousMap) -> Check<Val> {
        self.liftcat_in(self.pointed, f, iota)
    }

    pub fn secat(&mut self, iota: &ContinuousMap) -> Check<Val> {
        let r = crate::cover::secat_op(iota, self.pointed, &self.cfg.settings)?;
        self.value(r, "secat")
    }

    pub fn distance(&mut self, f: &ContinuousMap, g: &ContinuousMap) -> Check<Val> {
        let r = crate::cover::homotopic_distance(f, g, self.pointed, &self.cfg.settings)?;
        self.value(r, "distance")
    }

    /// `D` by lifting through the diagonal, every candidate lift enumerated.
    pub fn distance_direct(&mut self, f: &ContinuousMap, g: &ContinuousMap) -> Check<Val> {
        let r = crate::cover::homotopic_distance_direct(f, g, self.pointed, &self.plain())?;
        self.value(r, "diagonal distance")
    }

    pub fn tc(&mut self, y: &Space) -> Check<Val> {
        let r = crate::cover::topological_complexity(y, self.pointed, &self.cfg.settings)?;
        self.value(r, "TC")
    }

    /// `TC` as `secat` of the diagonal, every candidate lift enumerated.
    pub fn tc_plain(&mut self, y: &Space) -> Check<Val> {
        let r = crate::cover::topological_complexity(y, self.pointed, &self.plain())?;
        self.value(r, "TC")
    }

    fn plain(&self) -> crate::settings::Settings {
        crate::settings::Settings {
            lift_shortcuts: false,
            ..self.cfg.settings
        }
    }

    pub fn cat(&mut self, x: &Space) -> Check<Val> {
        let r = crate::cover::ls_category_space(x, self.pointed, &self.cfg.settings)?;
        self.value(r, "cat")
    }

    pub fn cat_map(&mut self, f: &ContinuousMap) -> Check<Val> {
        let r = crate::cover::ls_category(f, self.pointed, &self.cfg.settings)?;
        self.value(r, "cat of a map")
    }

    /// Free Whitehead lifting category, witness re-checked.
    pub fn wg(&mut self, f: &ContinuousMap, iota: &ContinuousMap) -> Check<Val> {
        let r = liftcat_wg(f, iota, &self.cfg.settings)?;
        match r.value {
            InvariantValue::BudgetExceeded { kind, cap } => Err(Stop::Budget(format!("WG: {kind} budget {cap}"))),
            InvariantValue::Infinite => Ok(None),
            InvariantValue::Finite(n) => {
                if self.cfg.verify_certificates {
                    let w = r.witness.ok_or_else(|| Stop::Fail("WG: no witness".into()))?;
                    certcheck::check_wg(&w.to_json(f, iota), Some(n + 1))
                        .map_err(|e| Stop::Fail(format!("WG: witness rejected: {e}")))?;
                    self.certificates += 1;
                }
                Ok(Some(n))
            }
        }
    }

    /// `f ≃ g` in the current flavor; `cores` selects the core-reduced
    /// search.
    pub fn homotopic(&mut self, f: &ContinuousMap, g: &ContinuousMap, cores: bool) -> Check<bool> {
        let settings = crate::settings::Settings {
            use_cores: cores,
            ..self.cfg.settings
        };
        let v = is_homotopic(f, g, self.pointed, &settings)?;
        if v.homotopic && self.cfg.verify_certificates {
            let fence = v.certificate.ok_or_else(|| Stop::Fail("homotopy: no fence".into()))?;
            certcheck::check_fence(&fence.to_json(), Some(&f.to_json()), Some(&g.to_json()))
                .map_err(|e| Stop::Fail(format!("homotopy: fence rejected: {e}")))?;
            self.certificates += 1;
        }
        Ok(v.homotopic)
    }

    pub fn nullhomotopic(&mut self, f: &ContinuousMap) -> Check<bool> {
        let v = is_nullhomotopic(f, self.pointed, &self.cfg.settings)?;
        if v.homotopic && self.cfg.verify_certificates {
            let fence = v.certificate.ok_or_else(|| Stop::Fail("nullhomotopy: no fence".into()))?.to_json();
            certcheck::check_fence(&fence, Some(&f.to_json()), None)
                .map_err(|e| Stop::Fail(format!("nullhomotopy: fence rejected: {e}")))?;
            let last = fence.steps.last().unwrap();
            let mut vals = last.values();
            let first = vals.next();
            if !vals.all(|v| Some(v) == first) {
                return Err(Stop::Fail("nullhomotopy: fence does not end at a constant".into()));
            }
            self.certificates += 1;
        }
        Ok(v.homotopic)
    }
}

pub fn property_ids() -> Vec<&'static str> {
    CATALOG.iter().map(|p| p.id).collect()
}

pub fn property(id: &str) -> Option<&'static Property> {
    CATALOG.iter().find(|p| p.id == id)
}

fn instance_seed(seed: u64, id: &str, index: usize) -> u64 {
    let mut h = FxHasher::default();
    (seed, id, index).hash(&mut h);
    h.finish()
}

struct Run {
    outcome: Outcome,
    instance: Instance,
    rejected: usize,
    certificates: usize,
}

fn run_instance(p: &Property, cfg: &SuiteConfig, inject: &[Space], index: usize) -> Run {
    let seed = instance_seed(cfg.generator.seed, p.id, index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inject = inject.get(index).cloned();
    let mut rejected = 0;
    let mut reason = String::new();
    let mut draws = Vec::new();
    for _ in 0..cfg.generator.retries.max(1) {
        let mut case = Case {
            cfg,
            pointed: cfg.generator.pointed,
            normality_filter: cfg.normality_filter,
            source: Source::Random {
                rng: &mut rng,
                inject: inject.clone(),
            },
            draws: Vec::new(),
            certificates: 0,
        };
        let r = (p.run)(&mut case);
        let certificates = case.certificates;
        draws = case.draws;
        let outcome = match r {
            Err(Stop::Reject(why)) => {
                rejected += 1;
                reason = why;
                continue;
            }
            Ok(()) => Outcome::Pass,
            Err(Stop::Fail(d)) => Outcome::Fail(d),
            Err(Stop::Budget(d)) => Outcome::BudgetExceeded(d),
        };
        return Run {
            outcome,
            instance: Instance {
                property: p.id.to_string(),
                index,
                seed,
                pointed: cfg.generator.pointed,
                normality_filter: cfg.normality_filter,
                draws,
            },
            rejected,
            certificates,
        };
    }
    Run {
        outcome: Outcome::Filtered(reason),
        instance: Instance {
            property: p.id.to_string(),
            index,
            seed,
            pointed: cfg.generator.pointed,
            normality_filter: cfg.normality_filter,
            draws,
        },
        rejected,
        certificates: 0,
    }
}

pub fn run_property(p: &Property, cfg: &SuiteConfig) -> Result<PropertyReport> {
    let inject = cfg.inject.iter().map(|n| catalog::space(n)).collect::<Result<Vec<_>>>()?;
    let start = Instant::now();
    let n = if p.deterministic { cfg.instances.min(1) } else { cfg.instances };
    let runs = par::map_range(n, cfg.settings.parallel, |i| run_instance(p, cfg, &inject, i));
    let mut rep = PropertyReport {
        id: p.id.to_string(),
        statement: p.statement.to_string(),
        instances: n,
        ..PropertyReport::default()
    };
    for r in runs {
        rep.rejected += r.rejected;
        rep.certificates_checked += r.certificates;
        match r.outcome {
            Outcome::Pass => rep.passed += 1,
            Outcome::BudgetExceeded(_) => rep.budget_exceeded += 1,
            Outcome::Filtered(_) => rep.filtered += 1,
            Outcome::Fail(detail) => {
                rep.failed += 1;
                if rep.failures.len() < cfg.max_failures {
                    rep.failures.push(Failure {
                        detail,
                        instance: r.instance,
                    });
                }
            }
        }
    }
    rep.millis = start.elapsed().as_millis();
    Ok(rep)
}

/// Runs the selected properties (all by default) in catalog order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let start = Instant::now();
    let selected: Vec<&Property> = match &cfg.properties {
        None => CATALOG.iter().collect(),
        Some(ids) => CATALOG.iter().filter(|p| ids.iter().any(|i| i == p.id)).collect(),
    };
    let properties = selected
        .into_iter()
        .map(|p| run_property(p, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION,
        seed: cfg.generator.seed,
        pointed: cfg.generator.pointed,
        instances_per_property: cfg.instances,
        properties,
        millis: start.elapsed().as_millis(),
    })
}

/// Re-runs a stored instance from its recorded draws.
pub fn replay(instance: &Instance, cfg: &SuiteConfig) -> Result<Outcome> {
    let p = property(&instance.property).ok_or_else(|| Error::Invalid(format!("unknown property `{}`", instance.property)))?;
    let mut case = Case {
        cfg,
        pointed: instance.pointed,
        normality_filter: instance.normality_filter,
        source: Source::Replay {
            draws: &instance.draws,
            next: 0,
        },
        draws: Vec::new(),
        certificates: 0,
    };
    Ok(match (p.run)(&mut case) {
        Ok(()) => Outcome::Pass,
        Err(Stop::Fail(d)) => Outcome::Fail(d),
        Err(Stop::Budget(d)) => Outcome::BudgetExceeded(d),
        Err(Stop::Reject(d)) => Outcome::Filtered(d),
    })
}
