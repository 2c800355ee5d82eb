//! Exact minimum set cover by branch and bound.

use crate::bitset::PointSet;
use crate::error::{BudgetKind, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSolution {
    /// Indices into the input sets, ascending.
    pub chosen: Vec<usize>,
    /// Search nodes visited; every cover smaller than `chosen` was refuted.
    pub nodes: usize,
    pub greedy_size: usize,
}

/// Smallest subfamily of `sets` covering `universe`, or `None` when even
/// the union of all sets misses a point. Branches on the uncovered point
/// with the fewest covering sets and prunes with the bound
/// `ceil(uncovered / largest set)`. The result depends only on the input
/// order.
pub fn min_cover(sets: &[PointSet], universe: &PointSet, cap: usize) -> Result<Option<CoverSolution>> {
    let mut all = PointSet::empty(universe.capacity());
    for s in sets {
        all.union_with(s);
    }
    if !universe.is_subset(&all) {
        return Ok(None);
    }
    let greedy = greedy(sets, universe);
    let mut search = Search {
        sets,
        containing: (0..universe.capacity())
            .map(|p| (0..sets.len()).filter(|&i| sets[i].contains(p)).collect())
            .collect(),
        largest: sets.iter().map(PointSet::count).max().unwrap_or(0),
        best: greedy.clone(),
        nodes: 0,
        cap,
    };
    let mut chosen = Vec::new();
    search.go(universe.clone(), &mut chosen)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(Some(CoverSolution {
        chosen: best,
        nodes: search.nodes,
        greedy_size: greedy.len(),
    }))
}

fn greedy(sets: &[PointSet], universe: &PointSet) -> Vec<usize> {
    let mut left = universe.clone();
    let mut out = Vec::new();
    while !left.is_empty() {
        let (i, _) = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.intersection(&left).count()))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("coverable");
        out.push(i);
        left.difference_with(&sets[i]);
    }
    out
}

struct Search<'a> {
    sets: &'a [PointSet],
    containing: Vec<Vec<usize>>,
    largest: usize,
    best: Vec<usize>,
    nodes: usize,
    cap: usize,
}

impl Search<'_> {
    fn go(&mut self, left: PointSet, chosen: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::Budget(BudgetKind::CoverNodes, self.cap));
        }
        if left.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return Ok(());
        }
        let bound = left.count().div_ceil(self.largest.max(1));
        if chosen.len() + bound >= self.best.len() {
            return Ok(());
        }
        let p = left
            .iter()
            .min_by_key(|&p| (self.containing[p].len(), p))
            .unwrap();
        let mut options: Vec<(usize, usize)> = self.containing[p]
            .iter()
            .map(|&i| (i, self.sets[i].intersection(&left).count()))
            .collect();
        options.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        for (i, _) in options {
            chosen.push(i);
            let next = left.difference(&self.sets[i]);
            self.go(next, chosen)?;
            chosen.pop();
            if chosen.len() + 1 >= self.best.len() {
                break;
            }
        }
        Ok(())
    }
}
