//! Open-cover invariants: lifting category, sectional category, homotopic
//! distance, topological complexity and Lusternik–Schnirelmann category,
//! each with a certificate cover and search statistics for the lower bound.
//!
//! The value of a lifting-type invariant is the least `n` such that `X`
//! has an open cover by `n + 1` admissible opens. It is computed as an exact
//! minimum set cover of `X` by the maximal admissible opens. The domain is
//! first replaced by its core, which changes nothing up to homotopy, and
//! covers of the core are pulled back along the retraction. A space that
//! splits into path components is solved one component at a time and the
//! covers are merged part by part.

mod admissible;
mod json;
mod setcover;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::PointSet;
use crate::catalog;
use crate::error::{BudgetKind, Error, Result};
use crate::homotopy::Fence;
use crate::map::ContinuousMap;
use crate::poset::{CoreReduction, Product, Space, Subspace};
use crate::settings::Settings;

pub use self::admissible::{CheckStats, CoverPart, Problem};
pub(crate) use self::admissible::Checker;
pub use self::json::{BudgetJson, CoverJson, PartJson, ResultJson, ValueJson};
pub use self::setcover::{min_cover, CoverSolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantValue {
    Finite(usize),
    Infinite,
    BudgetExceeded { kind: BudgetKind, cap: usize },
}

impl InvariantValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            InvariantValue::Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_budget(self) -> bool {
        matches!(self, InvariantValue::BudgetExceeded { .. })
    }

    /// Order on computed values with `∞` on top; `None` if either side
    /// ran out of budget.
    pub fn le(self, other: InvariantValue) -> Option<bool> {
        use InvariantValue::*;
        match (self, other) {
            (BudgetExceeded { .. }, _) | (_, BudgetExceeded { .. }) => None,
            (_, Infinite) => Some(true),
            (Infinite, Finite(_)) => Some(false),
            (Finite(a), Finite(b)) => Some(a <= b),
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Finite(n) => write!(f, "{n}"),
            InvariantValue::Infinite => f.write_str("infinite"),
            InvariantValue::BudgetExceeded { .. } => f.write_str("budget-exceeded"),
        }
    }
}

/// Search statistics backing the lower bound of a result.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exhaustion {
    pub components: usize,
    pub opens_evaluated: usize,
    pub maps_visited: usize,
    pub maximal_opens: usize,
    pub cover_nodes: usize,
    pub greedy_parts: usize,
    /// Every candidate cover with at most this many parts was refuted.
    pub refuted_parts: usize,
    /// A point no admissible open contains (for infinite values).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uncoverable: Option<String>,
}

impl Exhaustion {
    fn absorb(&mut self, other: &Exhaustion) {
        self.components += other.components;
        self.opens_evaluated += other.opens_evaluated;
        self.maps_visited += other.maps_visited;
        self.maximal_opens += other.maximal_opens;
        self.cover_nodes += other.cover_nodes;
        self.greedy_parts = self.greedy_parts.max(other.greedy_parts);
        self.refuted_parts = self.refuted_parts.max(other.refuted_parts);
        if self.uncoverable.is_none() {
            self.uncoverable = other.uncoverable.clone();
        }
    }

    fn record(&mut self, st: CheckStats) {
        self.opens_evaluated += st.opens_evaluated;
        self.maps_visited += st.maps_visited;
    }
}

/// A categorical cover of `X` for a problem.
#[derive(Clone, Debug)]
pub struct OpenCover {
    pub problem: Problem,
    pub pointed: bool,
    pub parts: Vec<CoverPart>,
}

impl OpenCover {
    pub fn target(&self) -> &Space {
        self.problem.domain()
    }

    /// Union of the parts is `X`.
    pub fn covers(&self) -> bool {
        let mut u = PointSet::empty(self.target().len());
        for p in &self.parts {
            u.union_with(&p.members);
        }
        u.is_full()
    }
}

#[derive(Clone, Debug)]
pub struct InvariantResult {
    pub value: InvariantValue,
    /// Present for finite values.
    pub certificate: Option<OpenCover>,
    pub exhaustion: Exhaustion,
}

impl InvariantResult {
    fn budget(kind: BudgetKind, cap: usize) -> InvariantResult {
        InvariantResult {
            value: InvariantValue::BudgetExceeded { kind, cap },
            certificate: None,
            exhaustion: Exhaustion::default(),
        }
    }
}

/// Solution on one path component: `None` value means infinite.
struct Piece {
    value: Option<usize>,
    parts: Vec<CoverPart>,
    stats: Exhaustion,
}

/// The general entry point: least `n` with an `(n+1)`-part cover by opens
/// admissible for `problem`. Budget exhaustion becomes a
/// `BudgetExceeded` value; malformed input is an error.
pub fn solve(problem: &Problem, pointed: bool, settings: &Settings) -> Result<InvariantResult> {
    problem.validate(pointed)?;
    match solve_inner(problem, pointed, settings) {
        Err(Error::Budget(kind, cap)) => Ok(InvariantResult::budget(kind, cap)),
        other => other,
    }
}

fn solve_inner(problem: &Problem, pointed: bool, settings: &Settings) -> Result<InvariantResult> {
    let x = problem.domain();
    let red = if settings.use_cores {
        CoreReduction::compute(x, if pointed { x.basepoint() } else { None })
    } else {
        CoreReduction::identity(x)
    };
    let (value, parts, stats) = if red.is_trivial() {
        solve_split(problem, pointed, settings)?
    } else {
        let (value, parts, stats) = solve_split(&problem.pull_back(&red.inclusion), pointed, settings)?;
        let parts = parts.iter().map(|p| expand(problem, &red, p)).collect::<Result<_>>()?;
        (value, parts, stats)
    };
    Ok(InvariantResult {
        value: value.map_or(InvariantValue::Infinite, InvariantValue::Finite),
        certificate: value.map(|_| OpenCover {
            problem: problem.clone(),
            pointed,
            parts,
        }),
        exhaustion: stats,
    })
}

fn solve_split(problem: &Problem, pointed: bool, settings: &Settings) -> Result<Merged> {
    let x = problem.domain();
    let comps = x.components();
    if comps.len() == 1 {
        let p = solve_connected(problem, pointed, settings)?;
        return Ok((p.value, p.parts, p.stats));
    }
    let base = if pointed { x.basepoint() } else { None };
    let mut pieces = Vec::new();
    for comp in &comps {
        let sub = Subspace::new(x, comp)?;
        let here = base.is_some_and(|b| comp.contains(b));
        let piece = solve_connected(&problem.pull_back(&sub.inclusion), here, settings)?;
        pieces.push((sub, here, piece));
    }
    merge(problem, &pieces)
}

/// Pulls a part of a cover of the core back to `U = r⁻¹(V)`. With `h` the
/// fence from the inclusion of `U` to `i ∘ r` on `U`, the new fence runs
/// through the old one precomposed with `r` and closes up with `f ∘ h`.
fn expand(problem: &Problem, red: &CoreReduction, part: &CoverPart) -> Result<CoverPart> {
    let x = problem.domain();
    let members = red.retraction.preimage(&part.members);
    let sub = Subspace::new(x, &members)?;
    let u = &sub.space;
    let v = &part.subspace;
    let r_u = (0..u.len())
        .map(|p| v.require_point(red.core.name(red.retraction.at(sub.inclusion.at(p)))).map(|q| q as u32))
        .collect::<Result<Vec<_>>>()?;
    let r_u = ContinuousMap::new(u.clone(), v.clone(), r_u)?;
    let h = red.fence.pre_compose(&sub.inclusion);
    let mid = part.fence.pre_compose(&r_u);
    let (lift, fence) = match problem {
        Problem::Lift { f, .. } => {
            let lift = part.lift.as_ref().map(|l| l.after_unchecked(&r_u));
            (lift, mid.then(h.post_compose(f).reversed())?)
        }
        Problem::Distance { f, g } => (None, h.post_compose(f).then(mid)?.then(h.post_compose(g).reversed())?),
    };
    Ok(CoverPart {
        members,
        subspace: sub.space,
        lift,
        fence: fence.dedup(),
    })
}

fn solve_connected(problem: &Problem, pointed: bool, settings: &Settings) -> Result<Piece> {
    let x = problem.domain();
    let checker = Checker::new(problem, pointed, settings)?;
    let mut stats = Exhaustion {
        components: 1,
        ..Exhaustion::default()
    };
    let (whole, st) = checker.check(&x.all())?;
    stats.record(st);
    if let Some(p) = whole {
        stats.greedy_parts = 1;
        return Ok(Piece {
            value: Some(0),
            parts: vec![p],
            stats,
        });
    }
    stats.refuted_parts = 1;

    // An inadmissible minimal open around x means no part can contain x.
    let mut mins: Vec<PointSet> = (0..x.len()).map(|p| checker.minimal_open(p)).collect();
    mins.sort();
    mins.dedup();
    let (res, st) = checker.check_all(mins.clone())?;
    stats.record(st);
    if let Some(i) = res.iter().position(Option::is_none) {
        let p = (0..x.len()).find(|&p| checker.minimal_open(p) == mins[i]).unwrap();
        stats.uncoverable = Some(x.name(p).to_string());
        return Ok(Piece {
            value: None,
            parts: Vec::new(),
            stats,
        });
    }

    let mut st = CheckStats::default();
    let maximal = checker.maximal_opens(&mut st)?;
    stats.record(st);
    stats.maximal_opens = maximal.len();
    let sets: Vec<PointSet> = maximal.iter().map(|p| p.members.clone()).collect();
    let sol = min_cover(&sets, &x.all(), settings.budget.max_cover_nodes)?
        .ok_or_else(|| Error::Invalid("admissible opens fail to cover X".into()))?;
    stats.cover_nodes = sol.nodes;
    stats.greedy_parts = sol.greedy_size;
    stats.refuted_parts = sol.chosen.len() - 1;
    let parts = sol.chosen.iter().map(|&i| maximal[i].clone()).collect();
    Ok(Piece {
        value: Some(sol.chosen.len() - 1),
        parts,
        stats,
    })
}

type Merged = (Option<usize>, Vec<CoverPart>, Exhaustion);

/// Joins per-component covers: part `i` of the result is the union of the
/// components' parts `i`; the basepoint component repeats its last part
/// in the pointed flavor.
fn merge(problem: &Problem, pieces: &[(Subspace, bool, Piece)]) -> Result<Merged> {
    let mut stats = Exhaustion::default();
    for (_, _, p) in pieces {
        stats.absorb(&p.stats);
    }
    if pieces.iter().any(|(_, _, p)| p.value.is_none()) {
        return Ok((None, Vec::new(), stats));
    }
    let n = pieces.iter().map(|(_, _, p)| p.value.unwrap()).max().unwrap();
    let mut parts = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let chosen: Vec<(&Subspace, &CoverPart)> = pieces
            .iter()
            .filter_map(|(sub, based, p)| {
                let k = p.value.unwrap();
                if *based {
                    Some((sub, &p.parts[i.min(k)]))
                } else {
                    p.parts.get(i).map(|part| (sub, part))
                }
            })
            .collect();
        parts.push(join_parts(problem, &chosen)?);
    }
    Ok((Some(n), parts, stats))
}

fn join_parts(problem: &Problem, chosen: &[(&Subspace, &CoverPart)]) -> Result<CoverPart> {
    let x = problem.domain();
    let mut members = PointSet::empty(x.len());
    for (sub, part) in chosen {
        for p in part.members.iter() {
            members.insert(sub.inclusion.at(p));
        }
    }
    let u = Subspace::new(x, &members)?.space;
    // For each point of U: which chosen part holds it, and where.
    let loc: Vec<(usize, usize)> = (0..u.len())
        .map(|p| {
            let name = u.name(p);
            chosen
                .iter()
                .enumerate()
                .find_map(|(j, (_, part))| part.subspace.point(name).map(|q| (j, q)))
                .expect("every point lies in one component part")
        })
        .collect();
    let y = problem.codomain();
    let lift = match problem {
        Problem::Lift { iota, .. } => {
            let values = loc
                .iter()
                .map(|&(j, q)| chosen[j].1.lift.as_ref().unwrap().at(q) as u32)
                .collect();
            Some(ContinuousMap::new(u.clone(), iota.domain().clone(), values)?)
        }
        Problem::Distance { .. } => None,
    };
    // Move one component at a time so consecutive steps stay comparable.
    let mut cur: Vec<u32> = loc
        .iter()
        .map(|&(j, q)| chosen[j].1.fence.start().at(q) as u32)
        .collect();
    let mut steps = vec![ContinuousMap::new(u.clone(), y.clone(), cur.clone())?];
    for (j, (_, part)) in chosen.iter().enumerate() {
        for step in &part.fence.steps()[1..] {
            for (p, &(jj, q)) in loc.iter().enumerate() {
                if jj == j {
                    cur[p] = step.at(q) as u32;
                }
            }
            steps.push(ContinuousMap::new(u.clone(), y.clone(), cur.clone())?);
        }
    }
    Ok(CoverPart {
        members,
        subspace: u,
        lift,
        fence: Fence::new(steps)?.dedup(),
    })
}

/// The maximal admissible opens for lifting `f` through `ι`, each with its
/// certificate, in canonical order.
pub fn admissible_opens(
    f: &ContinuousMap,
    iota: &ContinuousMap,
    pointed: bool,
    settings: &Settings,
) -> Result<Vec<CoverPart>> {
    let problem = Problem::Lift {
        f: f.clone(),
        iota: iota.clone(),
    };
    problem.validate(pointed)?;
    let checker = Checker::new(&problem, pointed, settings)?;
    checker.maximal_opens(&mut CheckStats::default())
}

/// `liftcat_f(ι)`: least `n` such that `X` has an `(n+1)`-part open cover
/// on whose parts `f` lifts through `ι` up to homotopy.
pub fn liftcat_op(f: &ContinuousMap, iota: &ContinuousMap, pointed: bool, settings: &Settings) -> Result<InvariantResult> {
    solve(
        &Problem::Lift {
            f: f.clone(),
            iota: iota.clone(),
        },
        pointed,
        settings,
    )
}

/// `secat(ι) = liftcat_{id}(ι)`.
pub fn secat_op(iota: &ContinuousMap, pointed: bool, settings: &Settings) -> Result<InvariantResult> {
    liftcat_op(&ContinuousMap::identity(iota.codomain()), iota, pointed, settings)
}

/// `D(f, g)`: least `n` with an `(n+1)`-part open cover on whose parts the
/// restrictions of `f` and `g` are homotopic.
pub fn homotopic_distance(f: &ContinuousMap, g: &ContinuousMap, pointed: bool, settings: &Settings) -> Result<InvariantResult> {
    solve(
        &Problem::Distance {
            f: f.clone(),
            g: g.clone(),
        },
        pointed,
        settings,
    )
}

/// `D(f, g)` as the lifting category of `(f, g) : X → Y × Y` through the
/// diagonal. An independent route to [`homotopic_distance`].
pub fn homotopic_distance_direct(
    f: &ContinuousMap,
    g: &ContinuousMap,
    pointed: bool,
    settings: &Settings,
) -> Result<InvariantResult> {
    if !f.same_spaces(g) {
        return Err(Error::Mismatch("f and g must share domain and codomain".into()));
    }
    let y = f.codomain();
    let p = Product::new(y, y)?;
    let fg = f.whisker_into(g, &p)?;
    let diag = ContinuousMap::identity(y).whisker_into(&ContinuousMap::identity(y), &p)?;
    liftcat_op(&fg, &diag, pointed, settings)
}

/// `TC(Y) = secat(Δ : Y → Y × Y)`.
pub fn topological_complexity(y: &Space, pointed: bool, settings: &Settings) -> Result<InvariantResult> {
    let p = Product::new(y, y)?;
    let id = ContinuousMap::identity(y);
    let diag = id.whisker_into(&id, &p)?;
    secat_op(&diag, pointed, settings)
}

/// The constant map `∗ → Y` used for category: at the basepoint when there
/// is one, otherwise at the first point.
pub fn base_inclusion(y: &Space, pointed: bool) -> Result<ContinuousMap> {
    match y.basepoint() {
        Some(b) => {
            let star = if pointed {
                catalog::pointed(&catalog::singleton(), "*")
            } else {
                catalog::singleton()
            };
            Ok(ContinuousMap::constant(&star, y, b))
        }
        None if pointed => Err(Error::MissingBasepoint("codomain")),
        None => Ok(ContinuousMap::point(y, 0)),
    }
}

/// `cat(f) = liftcat_f(c)` for a constant `c : ∗ → Y`. The free flavor
/// needs a path-connected codomain, where the choice of `c` is immaterial.
pub fn ls_category(f: &ContinuousMap, pointed: bool, settings: &Settings) -> Result<InvariantResult> {
    let y = f.codomain();
    if !pointed && !y.is_path_connected() {
        return Err(Error::NotPathConnected);
    }
    let c = base_inclusion(y, pointed)?;
    liftcat_op(f, &c, pointed, settings)
}

/// `cat(X) = cat(id_X)`.
pub fn ls_category_space(x: &Space, pointed: bool, settings: &Settings) -> Result<InvariantResult> {
    ls_category(&ContinuousMap::identity(x), pointed, settings)
}

/// Whether `ι : A → Y` has a homotopy section.
#[derive(Clone, Debug)]
pub struct BooleanSecat {
    /// 0 with a section, 1 without.
    pub value: u8,
    /// `s : Y → A` with a fence from `ι ∘ s` to `id_Y`.
    pub section: Option<(ContinuousMap, Fence)>,
}

/// Boolean sectional category: searches `s : Y → A` with `ι ∘ s ≃ id_Y`.
pub fn boolean_secat(iota: &ContinuousMap, pointed: bool, settings: &Settings) -> Result<BooleanSecat> {
    let y = iota.codomain();
    let problem = Problem::Lift {
        f: ContinuousMap::identity(y),
        iota: iota.clone(),
    };
    problem.validate(pointed)?;
    let checker = Checker::new(&problem, pointed, settings)?;
    let (part, _) = checker.check(&y.all())?;
    Ok(match part {
        Some(p) => {
            let lift = p.lift.unwrap().rebase(y, iota.domain())?;
            let fence = Fence::new(p.fence.steps().iter().map(|s| s.rebase(y, y)).collect::<Result<_>>()?)?;
            BooleanSecat {
                value: 0,
                section: Some((lift, fence)),
            }
        }
        None => BooleanSecat {
            value: 1,
            section: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::homotopy::is_homotopic;

    fn value(r: Result<InvariantResult>) -> InvariantValue {
        r.unwrap().value
    }

    fn check_cover(r: &InvariantResult) {
        let cover = r.certificate.as_ref().unwrap();
        assert!(cover.covers());
        assert_eq!(cover.parts.len(), r.value.finite().unwrap() + 1);
        for part in &cover.parts {
            assert!(part.fence.is_valid());
            assert!(cover.target().is_down_set(&part.members));
            assert_eq!(part.subspace.len(), part.members.count());
        }
    }

    #[test]
    fn category_of_pseudocircle() {
        let s = catalog::pseudocircle();
        let r = ls_category_space(&s, false, &Settings::default()).unwrap();
        assert_eq!(r.value, InvariantValue::Finite(1));
        check_cover(&r);
        let mut parts: Vec<Vec<String>> = r
            .certificate
            .unwrap()
            .parts
            .iter()
            .map(|p| s.set_names(&p.members))
            .collect();
        parts.sort();
        assert_eq!(parts, vec![vec!["a1", "b1", "b2"], vec!["a2", "b1", "b2"]]);
        assert_eq!(r.exhaustion.refuted_parts, 1);
    }

    #[test]
    fn contractible_and_trivial_cases() {
        let st = Settings::default();
        assert_eq!(value(ls_category_space(&catalog::chain(4), false, &st)), InvariantValue::Finite(0));
        assert_eq!(value(topological_complexity(&catalog::chain(3), false, &st)), InvariantValue::Finite(0));
        assert_eq!(value(topological_complexity(&catalog::singleton(), false, &st)), InvariantValue::Finite(0));
        let s = catalog::pseudocircle();
        let id = ContinuousMap::identity(&s);
        assert_eq!(value(liftcat_op(&id, &id, false, &st)), InvariantValue::Finite(0));
        assert_eq!(value(homotopic_distance(&id, &id, false, &st)), InvariantValue::Finite(0));
        assert_eq!(value(homotopic_distance_direct(&id, &id, false, &st)), InvariantValue::Finite(0));
    }

    #[test]
    fn secat_of_open_point() {
        let s = catalog::pseudocircle();
        let b1 = ContinuousMap::point(&s, s.point("b1").unwrap());
        let st = Settings::default();
        assert!(is_homotopic(
            &b1,
            &ContinuousMap::point(&s, s.point("a1").unwrap()),
            false,
            &st
        )
        .unwrap()
        .homotopic);
        let r = secat_op(&b1, false, &st).unwrap();
        assert_eq!(r.value, InvariantValue::Finite(1));
        check_cover(&r);
        assert_eq!(boolean_secat(&b1, false, &st).unwrap().value, 1);
        let id = ContinuousMap::identity(&s);
        let b = boolean_secat(&id, false, &st).unwrap();
        assert_eq!(b.value, 0);
        assert!(b.section.unwrap().1.is_valid());
    }

    #[test]
    fn distance_identity_constant_is_category() {
        let s = catalog::pseudocircle();
        let st = Settings::default();
        let id = ContinuousMap::identity(&s);
        let c = ContinuousMap::constant(&s, &s, 0);
        let r = homotopic_distance(&id, &c, false, &st).unwrap();
        assert_eq!(r.value, InvariantValue::Finite(1));
        check_cover(&r);
        assert_eq!(value(homotopic_distance_direct(&id, &c, false, &st)), InvariantValue::Finite(1));
    }

    #[test]
    fn disconnected_domains_merge() {
        let st = Settings::default();
        let s = catalog::pseudocircle();
        // X = S ⊔ S mapped onto S by folding, against a point.
        let pts = ["a1", "a2", "b1", "b2", "a1'", "a2'", "b1'", "b2'"];
        let rel = [
            ("b1", "a1"),
            ("b2", "a1"),
            ("b1", "a2"),
            ("b2", "a2"),
            ("b1'", "a1'"),
            ("b2'", "a1'"),
            ("b1'", "a2'"),
            ("b2'", "a2'"),
        ];
        let x = crate::poset::build_space(&pts, &rel, None).unwrap().space;
        let fold = ContinuousMap::new(x.clone(), s.clone(), (0..8).map(|i| i % 4).collect()).unwrap();
        let r = ls_category(&fold, false, &st).unwrap();
        assert_eq!(r.value, InvariantValue::Finite(1));
        check_cover(&r);
        let cover = r.certificate.unwrap();
        for part in &cover.parts {
            let iota = match &cover.problem {
                Problem::Lift { iota, .. } => iota,
                _ => unreachable!(),
            };
            let l = part.lift.as_ref().unwrap();
            assert_eq!(part.fence.start().values(), iota.after(l).unwrap().values());
        }
        // discrete domain: every point is its own component
        let d = catalog::discrete(3);
        let f = ContinuousMap::constant(&d, &s, 0);
        assert_eq!(value(ls_category(&f, false, &st)), InvariantValue::Finite(0));
    }

    #[test]
    fn infinite_when_a_point_cannot_lift() {
        // ι : ∗ → discrete-2 at d0 and f = id: the point d1 never lifts.
        let d = catalog::discrete(2);
        let iota = ContinuousMap::point(&d, 0);
        let r = secat_op(&iota, false, &Settings::default()).unwrap();
        assert_eq!(r.value, InvariantValue::Infinite);
        assert_eq!(r.exhaustion.uncoverable.as_deref(), Some("d1"));
        assert!(matches!(
            ls_category_space(&d, false, &Settings::default()),
            Err(Error::NotPathConnected)
        ));
    }

    #[test]
    fn budget_is_reported_not_guessed() {
        let s = catalog::pseudocircle_squared();
        let st = Settings::default().with_map_cap(2);
        let r = ls_category_space(&s, false, &st).unwrap();
        assert!(r.value.is_budget());
        assert!(r.certificate.is_none());
    }

    #[test]
    fn pointed_category_of_pseudocircle() {
        let s = catalog::pointed(&catalog::pseudocircle(), "b1");
        let r = ls_category_space(&s, true, &Settings::default()).unwrap();
        assert_eq!(r.value, InvariantValue::Finite(1));
        check_cover(&r);
        let b = s.basepoint().unwrap();
        for part in &r.certificate.unwrap().parts {
            assert!(part.members.contains(b));
            assert!(part.fence.is_pointed());
        }
        let free = catalog::pseudocircle();
        assert!(matches!(
            ls_category_space(&free, true, &Settings::default()),
            Err(Error::MissingBasepoint(_))
        ));
    }
}
