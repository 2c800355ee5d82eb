use super::{FiniteSpace, Space};
use crate::bitset::PointSet;
use crate::error::{BudgetKind, Error, Result};

/// An open (down-closed) subset of a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenSet {
    pub space: Space,
    pub members: PointSet,
}

impl OpenSet {
    pub fn new(space: &Space, members: PointSet) -> Result<OpenSet> {
        if !space.is_down_set(&members) {
            return Err(Error::Invalid("set is not open (not down-closed)".into()));
        }
        Ok(OpenSet {
            space: space.clone(),
            members,
        })
    }

    pub fn names(&self) -> Vec<String> {
        self.space.set_names(&self.members)
    }
}

/// Stream of all open sets of a space, each exactly once, in a fixed
/// order: points are decided along the linear extension, "include" before
/// "exclude".
pub struct Opens<'a> {
    space: &'a FiniteSpace,
    forced: PointSet,
    stack: Vec<(usize, PointSet)>,
    produced: usize,
    cap: usize,
    failed: bool,
}

impl<'a> Opens<'a> {
    pub fn new(space: &'a FiniteSpace, cap: usize) -> Self {
        Self::containing(space, None, cap)
    }

    /// Only opens containing `point` (and hence its whole down-set).
    pub fn containing(space: &'a FiniteSpace, point: Option<usize>, cap: usize) -> Self {
        let forced = match point {
            Some(p) => space.down(p).clone(),
            None => PointSet::empty(space.len()),
        };
        Opens {
            space,
            stack: vec![(0, forced.clone())],
            forced,
            produced: 0,
            cap,
            failed: false,
        }
    }
}

impl Iterator for Opens<'_> {
    type Item = Result<PointSet>;

    fn next(&mut self) -> Option<Result<PointSet>> {
        if self.failed {
            return None;
        }
        let lin = self.space.linear_extension();
        while let Some((pos, set)) = self.stack.pop() {
            if pos == lin.len() {
                self.produced += 1;
                if self.produced > self.cap {
                    self.failed = true;
                    return Some(Err(Error::Budget(BudgetKind::Opens, self.cap)));
                }
                return Some(Ok(set));
            }
            let x = lin[pos];
            if self.forced.contains(x) {
                self.stack.push((pos + 1, set));
                continue;
            }
            self.stack.push((pos + 1, set.clone()));
            if self.space.lower_covers(x).iter().all(|&y| set.contains(y)) {
                let mut with = set;
                with.insert(x);
                self.stack.push((pos + 1, with));
            }
        }
        None
    }
}

impl FiniteSpace {
    pub fn opens(&self, cap: usize) -> Opens<'_> {
        Opens::new(self, cap)
    }

    pub fn count_opens(&self, cap: usize) -> Result<usize> {
        let mut n = 0;
        for o in self.opens(cap) {
            o?;
            n += 1;
        }
        Ok(n)
    }
}
