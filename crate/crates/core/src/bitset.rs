use std::fmt;

/// A fixed-capacity set of point indices, stored as 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    words: Vec<u64>,
    len: usize,
}

impl PointSet {
    pub fn empty(len: usize) -> Self {
        PointSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    pub fn singleton(len: usize, i: usize) -> Self {
        let mut s = Self::empty(len);
        s.insert(i);
        s
    }

    pub fn from_indices(len: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(len);
        for i in it {
            s.insert(i);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Capacity (number of possible members), not the member count.
    #[inline]
    pub fn capacity(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] &= !(1 << (i & 63));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn union_with(&mut self, other: &PointSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &PointSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &PointSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &PointSet) -> PointSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> PointSet {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &PointSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
