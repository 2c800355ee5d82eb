//! Independent re-verification of certificates from their JSON form.
//!
//! Nothing here uses the search code or the space and map types: orders
//! are rebuilt from the generating pairs with a boolean Warshall closure
//! and every claim is checked pointwise by name.

use std::collections::{BTreeMap, HashMap};

use crate::cover::CoverJson;
use crate::homotopy::FenceJson;
use crate::map::MapJson;
use crate::poset::SpaceJson;
use crate::whitehead::WgWitnessJson;

type Table = BTreeMap<String, String>;
pub type Verdict = Result<(), String>;

struct Order {
    names: Vec<String>,
    index: HashMap<String, usize>,
    leq: Vec<Vec<bool>>,
    base: Option<usize>,
}

impl Order {
    fn parse(json: &SpaceJson) -> Result<Order, String> {
        let n = json.points.len();
        if n == 0 {
            return Err("empty space".into());
        }
        let mut index = HashMap::new();
        for (i, p) in json.points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(format!("duplicate point {p}"));
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for [a, b] in &json.leq {
            let (Some(&i), Some(&j)) = (index.get(a), index.get(b)) else {
                return Err(format!("relation on unknown point {a} or {b}"));
            };
            leq[i][j] = true;
        }
        for k in 0..n {
            let row_k = leq[k].clone();
            for row in leq.iter_mut().filter(|r| r[k]) {
                for (cell, &via) in row.iter_mut().zip(&row_k) {
                    *cell |= via;
                }
            }
        }
        for (i, row) in leq.iter().enumerate() {
            if let Some(j) = (0..i).find(|&j| row[j] && leq[j][i]) {
                return Err(format!("points {} and {} are identified", json.points[i], json.points[j]));
            }
        }
        let base = match &json.basepoint {
            Some(b) => Some(*index.get(b).ok_or(format!("unknown basepoint {b}"))?),
            None => None,
        };
        Ok(Order {
            names: json.points.clone(),
            index,
            leq,
            base,
        })
    }

    fn len(&self) -> usize {
        self.names.len()
    }

    fn at(&self, name: &str) -> Result<usize, String> {
        self.index.get(name).copied().ok_or(format!("unknown point {name}"))
    }

    /// Same points and same order, by name.
    fn same(&self, other: &Order) -> bool {
        self.len() == other.len()
            && self.names.iter().all(|a| {
                other.index.get(a).is_some_and(|&ia| {
                    let i = self.index[a];
                    self.names.iter().all(|b| self.leq[i][self.index[b]] == other.leq[ia][other.index[b]])
                })
            })
            && self.base.map(|b| &self.names[b]) == other.base.map(|b| &other.names[b])
    }
}

/// A function on `domain` points (restricted to `members` when given),
/// resolved to codomain indices and checked order-preserving for the
/// induced order.
fn function(dom: &Order, members: &[usize], cod: &Order, table: &Table) -> Result<Vec<Option<usize>>, String> {
    let mut vals = vec![None; dom.len()];
    for &p in members {
        let name = &dom.names[p];
        let v = table.get(name).ok_or(format!("no value at {name}"))?;
        vals[p] = Some(cod.at(v)?);
    }
    if table.len() != members.len() {
        return Err("table has entries outside its domain".into());
    }
    for &p in members {
        for &q in members {
            if dom.leq[p][q] && !cod.leq[vals[p].unwrap()][vals[q].unwrap()] {
                return Err(format!("not order-preserving at {} <= {}", dom.names[p], dom.names[q]));
            }
        }
    }
    Ok(vals)
}

fn leq_pointwise(cod: &Order, members: &[usize], a: &[Option<usize>], b: &[Option<usize>]) -> bool {
    members.iter().all(|&p| cod.leq[a[p].unwrap()][b[p].unwrap()])
}

/// Checks a fence of functions on `members` (all points when `None`);
/// returns its first and last steps.
fn fence_steps(
    dom: &Order,
    members: &[usize],
    cod: &Order,
    steps: &[Table],
    pointed: bool,
) -> Result<Vec<Vec<Option<usize>>>, String> {
    if steps.is_empty() {
        return Err("empty fence".into());
    }
    let mut out = Vec::with_capacity(steps.len());
    for (t, s) in steps.iter().enumerate() {
        let v = function(dom, members, cod, s).map_err(|e| format!("fence step {t}: {e}"))?;
        if pointed {
            let (Some(x0), Some(y0)) = (dom.base, cod.base) else {
                return Err("pointed fence without basepoints".into());
            };
            if members.contains(&x0) && v[x0] != Some(y0) {
                return Err(format!("fence step {t} moves the basepoint"));
            }
        }
        out.push(v);
    }
    for t in 1..out.len() {
        if !leq_pointwise(cod, members, &out[t - 1], &out[t]) && !leq_pointwise(cod, members, &out[t], &out[t - 1]) {
            return Err(format!("fence steps {} and {t} are not comparable", t - 1));
        }
    }
    Ok(out)
}

fn same_on(members: &[usize], a: &[Option<usize>], b: &[Option<usize>]) -> bool {
    members.iter().all(|&p| a[p] == b[p])
}

/// A standalone fence, optionally with its required endpoints.
pub fn check_fence(fence: &FenceJson, start: Option<&MapJson>, end: Option<&MapJson>) -> Verdict {
    let dom = Order::parse(&fence.domain)?;
    let cod = Order::parse(&fence.codomain)?;
    let all: Vec<usize> = (0..dom.len()).collect();
    let steps = fence_steps(&dom, &all, &cod, &fence.steps, false)?;
    for (which, m, step) in [("start", start, steps.first().unwrap()), ("end", end, steps.last().unwrap())] {
        if let Some(m) = m {
            if !Order::parse(&m.domain)?.same(&dom) || !Order::parse(&m.codomain)?.same(&cod) {
                return Err(format!("{which} map lives on different spaces"));
            }
            let v = function(&dom, &all, &cod, &m.values)?;
            if !same_on(&all, &v, step) {
                return Err(format!("fence {which} differs from the given map"));
            }
        }
    }
    Ok(())
}

/// A categorical cover: parts open, union `X`, lifts continuous and every
/// fence valid with the right endpoints. With `parts`, also checks the
/// number of parts.
pub fn check_cover(cover: &CoverJson, parts: Option<usize>) -> Verdict {
    let x = Order::parse(&cover.f.domain)?;
    let y = Order::parse(&cover.f.codomain)?;
    let all: Vec<usize> = (0..x.len()).collect();
    let f = function(&x, &all, &y, &cover.f.values).map_err(|e| format!("f: {e}"))?;
    if cover.pointed && (x.base.is_none() || y.base.is_none() || f[x.base.unwrap()] != y.base) {
        return Err("f is not pointed".into());
    }
    enum Other {
        Lift(Order, Vec<Option<usize>>),
        Dist(Vec<Option<usize>>),
    }
    let other = match (cover.kind.as_str(), &cover.iota, &cover.g) {
        ("lift", Some(iota), None) => {
            let a = Order::parse(&iota.domain)?;
            if !Order::parse(&iota.codomain)?.same(&y) {
                return Err("ι and f have different codomains".into());
            }
            let all_a: Vec<usize> = (0..a.len()).collect();
            let i = function(&a, &all_a, &y, &iota.values).map_err(|e| format!("ι: {e}"))?;
            if cover.pointed && (a.base.is_none() || i[a.base.unwrap()] != y.base) {
                return Err("ι is not pointed".into());
            }
            Other::Lift(a, i)
        }
        ("distance", None, Some(g)) => {
            if !Order::parse(&g.domain)?.same(&x) || !Order::parse(&g.codomain)?.same(&y) {
                return Err("f and g live on different spaces".into());
            }
            let gv = function(&x, &all, &y, &g.values).map_err(|e| format!("g: {e}"))?;
            if cover.pointed && gv[x.base.unwrap()] != y.base {
                return Err("g is not pointed".into());
            }
            Other::Dist(gv)
        }
        _ => return Err(format!("malformed cover of kind {}", cover.kind)),
    };
    if let Some(n) = parts {
        if cover.parts.len() != n {
            return Err(format!("{} parts, expected {n}", cover.parts.len()));
        }
    }
    let mut covered = vec![false; x.len()];
    for (k, part) in cover.parts.iter().enumerate() {
        let err = |e: String| format!("part {k}: {e}");
        let mut members = Vec::new();
        for m in &part.members {
            members.push(x.at(m).map_err(err)?);
        }
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(err("empty".into()));
        }
        for &p in &members {
            covered[p] = true;
            if let Some(q) = (0..x.len()).find(|&q| x.leq[q][p] && !members.contains(&q)) {
                return Err(err(format!("not open: {} <= {} is missing", x.names[q], x.names[p])));
            }
        }
        if cover.pointed && !members.contains(&x.base.unwrap()) {
            return Err(err("misses the basepoint".into()));
        }
        let steps = fence_steps(&x, &members, &y, &part.fence, cover.pointed).map_err(err)?;
        let (first, last) = (steps.first().unwrap(), steps.last().unwrap());
        match &other {
            Other::Lift(a, iota) => {
                let table = part.lift.as_ref().ok_or_else(|| err("no lift".into()))?;
                let l = function(&x, &members, a, table).map_err(|e| err(format!("lift: {e}")))?;
                if cover.pointed && l[x.base.unwrap()] != a.base {
                    return Err(err("lift is not pointed".into()));
                }
                let il: Vec<Option<usize>> = l.iter().map(|v| v.map(|v| iota[v].unwrap())).collect();
                if !same_on(&members, first, &il) {
                    return Err(err("fence does not start at ι ∘ l".into()));
                }
                if !same_on(&members, last, &f) {
                    return Err(err("fence does not end at f".into()));
                }
            }
            Other::Dist(g) => {
                if !same_on(&members, first, &f) || !same_on(&members, last, g) {
                    return Err(err("fence does not run from f to g".into()));
                }
            }
        }
    }
    if let Some(p) = covered.iter().position(|c| !c) {
        return Err(format!("point {} is not covered", x.names[p]));
    }
    Ok(())
}

/// `n + 1` maps homotopic to `f'` whose preimages of the closed set `A'`
/// cover `X`; `Y'`, `A'` and `f'` are rebuilt from `f` and `ι`.
pub fn check_wg(w: &WgWitnessJson, parts: Option<usize>) -> Verdict {
    let x = Order::parse(&w.f.domain)?;
    let y = Order::parse(&w.f.codomain)?;
    let a = Order::parse(&w.iota.domain)?;
    if !Order::parse(&w.iota.codomain)?.same(&y) {
        return Err("ι and f have different codomains".into());
    }
    let all_x: Vec<usize> = (0..x.len()).collect();
    let all_a: Vec<usize> = (0..a.len()).collect();
    let f = function(&x, &all_x, &y, &w.f.values)?;
    let iota = function(&a, &all_a, &y, &w.iota.values)?;
    if !Order::parse(&w.target.domain)?.same(&x) {
        return Err("f' has the wrong domain".into());
    }
    let yp = Order::parse(&w.target.codomain)?;
    let target = function(&x, &all_x, &yp, &w.target.values)?;
    // expected Y', A' and f'
    let mut closed = vec![false; yp.len()];
    for n in &w.closed_part {
        closed[yp.at(n)?] = true;
    }
    if w.cylinder {
        if yp.len() != a.len() + y.len() {
            return Err("cylinder has the wrong size".into());
        }
        let ya = |p: usize| yp.at(&format!("A.{}", a.names[p]));
        let yy = |q: usize| yp.at(&format!("Y.{}", y.names[q]));
        for p in 0..a.len() {
            if !closed[ya(p)?] {
                return Err("A' is not the copy of A".into());
            }
            for p2 in 0..a.len() {
                if yp.leq[ya(p)?][ya(p2)?] != a.leq[p][p2] {
                    return Err("cylinder order differs on A".into());
                }
            }
            for q in 0..y.len() {
                if yp.leq[ya(p)?][yy(q)?] {
                    return Err("cylinder has a point of A below Y".into());
                }
                if yp.leq[yy(q)?][ya(p)?] != y.leq[q][iota[p].unwrap()] {
                    return Err("cylinder order differs between Y and A".into());
                }
            }
        }
        for q in 0..y.len() {
            if closed[yy(q)?] {
                return Err("A' meets Y".into());
            }
            for q2 in 0..y.len() {
                if yp.leq[yy(q)?][yy(q2)?] != y.leq[q][q2] {
                    return Err("cylinder order differs on Y".into());
                }
            }
        }
        for &p in &all_x {
            if target[p] != Some(yy(f[p].unwrap())?) {
                return Err("f' is not j ∘ f".into());
            }
        }
    } else {
        if !yp.same(&y) {
            return Err("target codomain is not Y".into());
        }
        let image: Vec<bool> = (0..y.len()).map(|q| iota.contains(&Some(q))).collect();
        if image != closed {
            return Err("A' is not the image of ι".into());
        }
        if (0..a.len()).any(|p| (0..a.len()).any(|p2| a.leq[p][p2] != y.leq[iota[p].unwrap()][iota[p2].unwrap()]))
            || (0..a.len()).any(|p| (0..p).any(|p2| iota[p] == iota[p2]))
        {
            return Err("ι is not a subspace inclusion".into());
        }
        if target != f {
            return Err("f' differs from f".into());
        }
    }
    for q in 0..yp.len() {
        if closed[q] && (0..yp.len()).any(|r| yp.leq[q][r] && !closed[r]) {
            return Err("A' is not closed".into());
        }
    }
    if let Some(n) = parts {
        if w.maps.len() != n {
            return Err(format!("{} maps, expected {n}", w.maps.len()));
        }
    }
    if w.maps.len() != w.fences.len() {
        return Err("one fence per map expected".into());
    }
    let mut covered = vec![false; x.len()];
    for (k, (m, fence)) in w.maps.iter().zip(&w.fences).enumerate() {
        let l = function(&x, &all_x, &yp, m).map_err(|e| format!("map {k}: {e}"))?;
        let steps = fence_steps(&x, &all_x, &yp, fence, false).map_err(|e| format!("map {k}: {e}"))?;
        if steps.first().unwrap() != &l || steps.last().unwrap() != &target {
            return Err(format!("fence {k} does not run from l to f'"));
        }
        for p in 0..x.len() {
            if closed[l[p].unwrap()] {
                covered[p] = true;
            }
        }
    }
    if let Some(p) = covered.iter().position(|c| !c) {
        return Err(format!("point {} is in no preimage of A'", x.names[p]));
    }
    Ok(())
}
