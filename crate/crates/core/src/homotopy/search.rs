//! Breadth-first search in the graph of continuous maps `X → Y`.
//!
//! Two maps are adjacent when they differ at a single point whose values
//! are related by a cover relation of `Y`. If `f <= g` pointwise, moving a
//! maximal point of disagreement one cover step up keeps the map
//! continuous and stays between `f` and `g`, so these edges generate the
//! same connected components as pointwise comparability. Components are
//! the homotopy classes.

use rustc_hash::FxHashMap;

use crate::error::{BudgetKind, Error, Result};
use crate::poset::FiniteSpace;

pub(crate) type Values = Box<[u32]>;

pub(crate) struct MapGraph<'a> {
    pub dom: &'a FiniteSpace,
    pub cod: &'a FiniteSpace,
    /// Domain point whose value never changes (pointed searches).
    pub fixed: Option<usize>,
}

impl MapGraph<'_> {
    pub fn for_each_neighbor(&self, f: &[u32], mut visit: impl FnMut(Values) -> bool) -> bool {
        for x in 0..self.dom.len() {
            if Some(x) == self.fixed {
                continue;
            }
            let v = f[x] as usize;
            let lows = self.dom.lower_covers(x);
            let highs = self.dom.upper_covers(x);
            for &w in self.cod.lower_covers(v).iter().chain(self.cod.upper_covers(v)) {
                let ok = lows.iter().all(|&y| self.cod.leq(f[y] as usize, w))
                    && highs.iter().all(|&y| self.cod.leq(w, f[y] as usize));
                if ok {
                    let mut g: Values = f.into();
                    g[x] = w as u32;
                    if visit(g) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub maps_visited: usize,
    pub components_touched: usize,
}

/// Result of a bidirectional search: indices of the source and target that
/// were connected and the path between them (source first).
pub(crate) struct Connection {
    pub source: usize,
    pub target: usize,
    pub path: Vec<Values>,
}

const SOURCE: u8 = 0;
const TARGET: u8 = 1;

struct Node {
    values: Values,
    parent: u32,
    root: u32,
    side: u8,
}

/// Multi-source, multi-target bidirectional BFS. Returns the first meeting
/// found, expanding the smaller frontier first; deterministic for fixed
/// inputs.
pub(crate) fn connect(
    graph: &MapGraph<'_>,
    sources: &[Values],
    targets: &[Values],
    cap: usize,
    stats: &mut SearchStats,
) -> Result<Option<Connection>> {
    let mut nodes: Vec<Node> = Vec::new();
    let mut index: FxHashMap<Values, u32> = FxHashMap::default();
    let mut frontiers: [Vec<u32>; 2] = [Vec::new(), Vec::new()];

    for (side, list) in [(SOURCE, sources), (TARGET, targets)] {
        for (i, v) in list.iter().enumerate() {
            if let Some(&other) = index.get(v) {
                let o = &nodes[other as usize];
                if o.side != side {
                    stats.components_touched += 1;
                    return Ok(Some(Connection {
                        source: o.root as usize,
                        target: i,
                        path: vec![v.clone()],
                    }));
                }
                continue;
            }
            let id = nodes.len() as u32;
            nodes.push(Node {
                values: v.clone(),
                parent: u32::MAX,
                root: i as u32,
                side,
            });
            index.insert(v.clone(), id);
            frontiers[side as usize].push(id);
        }
    }
    stats.maps_visited += nodes.len();

    loop {
        let side = if frontiers[0].len() <= frontiers[1].len() { 0 } else { 1 };
        if frontiers[side].is_empty() {
            stats.components_touched += 1;
            return Ok(None);
        }
        let layer = std::mem::take(&mut frontiers[side]);
        let mut next = Vec::new();
        let mut meeting: Option<(u32, u32)> = None;
        for &id in &layer {
            let cur = nodes[id as usize].values.clone();
            let root = nodes[id as usize].root;
            let mut overflow = false;
            let found = graph.for_each_neighbor(&cur, |g| {
                if let Some(&other) = index.get(&g) {
                    if nodes[other as usize].side != side as u8 {
                        meeting = Some((id, other));
                        return true;
                    }
                    return false;
                }
                let nid = nodes.len() as u32;
                nodes.push(Node {
                    values: g.clone(),
                    parent: id,
                    root,
                    side: side as u8,
                });
                index.insert(g, nid);
                next.push(nid);
                if nodes.len() > cap {
                    overflow = true;
                    return true;
                }
                false
            });
            if overflow {
                stats.maps_visited = stats.maps_visited.max(nodes.len());
                return Err(Error::Budget(BudgetKind::Maps, cap));
            }
            if found {
                break;
            }
        }
        stats.maps_visited = nodes.len();
        if let Some((a, b)) = meeting {
            stats.components_touched += 1;
            let (s_end, t_end) = if side == 0 { (a, b) } else { (b, a) };
            let mut path = chain(&nodes, s_end);
            path.reverse();
            path.extend(chain(&nodes, t_end));
            return Ok(Some(Connection {
                source: nodes[s_end as usize].root as usize,
                target: nodes[t_end as usize].root as usize,
                path,
            }));
        }
        frontiers[side] = next;
    }
}

fn chain(nodes: &[Node], mut id: u32) -> Vec<Values> {
    let mut out = Vec::new();
    loop {
        let n = &nodes[id as usize];
        out.push(n.values.clone());
        if n.parent == u32::MAX {
            return out;
        }
        id = n.parent;
    }
}

/// One-sided BFS from `start` until `stop` accepts a map (returning the
/// path to it) or the component is exhausted (`visit` sees every member).
pub(crate) fn explore(
    graph: &MapGraph<'_>,
    start: Values,
    cap: usize,
    stats: &mut SearchStats,
    mut stop: impl FnMut(&[u32]) -> bool,
) -> Result<Option<Vec<Values>>> {
    let mut nodes: Vec<(Values, u32)> = vec![(start.clone(), u32::MAX)];
    let mut index: FxHashMap<Values, u32> = FxHashMap::default();
    index.insert(start, 0);
    let mut head = 0usize;
    let path_to = |nodes: &[(Values, u32)], mut id: u32| {
        let mut out = Vec::new();
        loop {
            out.push(nodes[id as usize].0.clone());
            if nodes[id as usize].1 == u32::MAX {
                out.reverse();
                return out;
            }
            id = nodes[id as usize].1;
        }
    };
    if stop(&nodes[0].0) {
        stats.maps_visited += 1;
        stats.components_touched += 1;
        return Ok(Some(path_to(&nodes, 0)));
    }
    while head < nodes.len() {
        let cur = nodes[head].0.clone();
        let id = head as u32;
        head += 1;
        let mut hit = None;
        let mut overflow = false;
        graph.for_each_neighbor(&cur, |g| {
            if index.contains_key(&g) {
                return false;
            }
            let nid = nodes.len() as u32;
            let accept = stop(&g);
            index.insert(g.clone(), nid);
            nodes.push((g, id));
            if accept {
                hit = Some(nid);
                return true;
            }
            if nodes.len() > cap {
                overflow = true;
                return true;
            }
            false
        });
        if overflow {
            stats.maps_visited += nodes.len();
            return Err(Error::Budget(BudgetKind::Maps, cap));
        }
        if let Some(h) = hit {
            stats.maps_visited += nodes.len();
            stats.components_touched += 1;
            return Ok(Some(path_to(&nodes, h)));
        }
    }
    stats.maps_visited += nodes.len();
    stats.components_touched += 1;
    Ok(None)
}

/// Every member of the component of `start`, in BFS order.
pub(crate) fn component(
    graph: &MapGraph<'_>,
    start: Values,
    cap: usize,
    stats: &mut SearchStats,
) -> Result<Vec<Values>> {
    let mut members = Vec::new();
    explore(graph, start, cap, stats, |v| {
        members.push(v.into());
        false
    })?;
    Ok(members)
}
