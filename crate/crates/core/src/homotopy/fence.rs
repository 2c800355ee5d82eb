use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::ContinuousMap;
use crate::poset::SpaceJson;

/// A homotopy certificate: maps sharing domain and codomain in which each
/// consecutive pair is pointwise comparable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fence {
    steps: Vec<ContinuousMap>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FenceJson {
    pub domain: SpaceJson,
    pub codomain: SpaceJson,
    pub steps: Vec<BTreeMap<String, String>>,
}

impl Fence {
    pub fn new(steps: Vec<ContinuousMap>) -> Result<Fence> {
        let f = Fence { steps };
        if f.steps.is_empty() {
            return Err(Error::Invalid("empty fence".into()));
        }
        if !f.is_valid() {
            return Err(Error::Invalid("consecutive fence steps are not comparable".into()));
        }
        Ok(f)
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<ContinuousMap>) -> Fence {
        debug_assert!(!steps.is_empty());
        let f = Fence { steps };
        debug_assert!(f.is_valid());
        f
    }

    pub fn single(f: ContinuousMap) -> Fence {
        Fence { steps: vec![f] }
    }

    pub fn start(&self) -> &ContinuousMap {
        &self.steps[0]
    }

    pub fn end(&self) -> &ContinuousMap {
        self.steps.last().unwrap()
    }

    pub fn steps(&self) -> &[ContinuousMap] {
        &self.steps
    }

    /// Number of maps in the fence (a fence between comparable maps has
    /// length 2).
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        let first = &self.steps[0];
        self.steps.iter().all(|s| s.same_spaces(first))
            && self.steps.windows(2).all(|w| w[0].comparable(&w[1]))
    }

    pub fn is_pointed(&self) -> bool {
        self.steps.iter().all(ContinuousMap::is_pointed)
    }

    pub fn reversed(mut self) -> Fence {
        self.steps.reverse();
        self
    }

    /// Concatenation; the end of `self` must equal the start of `other`.
    pub fn then(mut self, other: Fence) -> Result<Fence> {
        if self.end() != other.start() {
            return Err(Error::Mismatch("fence endpoints do not meet".into()));
        }
        self.steps.extend(other.steps.into_iter().skip(1));
        Ok(self)
    }

    pub(crate) fn then_unchecked(mut self, other: Fence) -> Fence {
        debug_assert_eq!(self.end().values(), other.start().values());
        self.steps.extend(other.steps.into_iter().skip(1));
        self
    }

    /// `g ∘ step` for every step.
    pub fn post_compose(&self, g: &ContinuousMap) -> Fence {
        Fence {
            steps: self.steps.iter().map(|s| g.after_unchecked(s)).collect(),
        }
    }

    /// `step ∘ h` for every step.
    pub fn pre_compose(&self, h: &ContinuousMap) -> Fence {
        Fence {
            steps: self.steps.iter().map(|s| s.after_unchecked(h)).collect(),
        }
    }

    /// Drops consecutive repeats.
    pub fn dedup(mut self) -> Fence {
        self.steps.dedup_by(|a, b| a.values() == b.values());
        self
    }

    pub fn to_json(&self) -> FenceJson {
        FenceJson {
            domain: self.start().domain().to_json(),
            codomain: self.start().codomain().to_json(),
            steps: self.steps.iter().map(ContinuousMap::table).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn comparable_pair_is_a_fence() {
        let c = catalog::chain(2);
        let id = ContinuousMap::identity(&c);
        let top = ContinuousMap::constant(&c, &c, 1);
        let f = Fence::new(vec![id.clone(), top.clone()]).unwrap();
        assert_eq!(f.len(), 2);
        let back = f.clone().reversed();
        assert_eq!(back.start(), &top);
        let loop_ = f.then(back).unwrap();
        assert_eq!(loop_.len(), 3);
        assert_eq!(loop_.clone().dedup().len(), 3);
    }

    #[test]
    fn incomparable_steps_rejected() {
        let s = catalog::pseudocircle();
        let b1 = ContinuousMap::constant(&s, &s, s.point("b1").unwrap());
        let b2 = ContinuousMap::constant(&s, &s, s.point("b2").unwrap());
        assert!(Fence::new(vec![b1, b2]).is_err());
        assert!(Fence::new(vec![]).is_err());
    }
}
