use std::cmp::Ordering;
use std::fmt;

/// Strictly increasing set of coordinate indices, stored as a bitmask.
///
/// Ordered by size first, then lexicographically on the sorted indices, so
/// `{} < {0} < {1} < {0,1} < {0,2} < {1,2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u32);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn single(index: usize) -> Self {
        assert!(index < super::MAX_DIM);
        IndexSet(1 << index)
    }

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= super::MAX_DIM);
        if n == 32 {
            IndexSet(u32::MAX)
        } else {
            IndexSet((1u32 << n) - 1)
        }
    }

    /// Builds a key from distinct indices in any order; `None` on repeats.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut bits = 0u32;
        for &i in indices {
            assert!(i < super::MAX_DIM);
            if bits & (1 << i) != 0 {
                return None;
            }
            bits |= 1 << i;
        }
        Some(IndexSet(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 & (1 << index) != 0
    }

    /// Indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    pub fn min_index(self) -> usize {
        self.0.trailing_zeros() as usize
    }

    /// Largest index, or `-1` for the empty set.
    pub fn max_index(self) -> i32 {
        31 - self.0.leading_zeros() as i32
    }

    /// The two indices `(j, k)`, `j < k`, of a size-two key.
    pub fn pair(self) -> (usize, usize) {
        debug_assert_eq!(self.len(), 2);
        let j = self.min_index();
        (j, self.max_index() as usize)
    }

    pub fn complement(self, n: usize) -> Self {
        IndexSet(!self.0 & Self::full(n).0)
    }

    /// Union of disjoint keys together with whether sorting `self ++ other`
    /// takes an odd permutation. `None` when the keys overlap.
    pub fn merge(self, other: IndexSet) -> Option<(IndexSet, bool)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0u32;
        for b in other.iter() {
            let above = if b >= 31 { 0 } else { self.0 >> (b + 1) };
            inversions += above.count_ones();
        }
        Some((IndexSet(self.0 | other.0), inversions % 2 == 1))
    }

    /// Removes `index` and reports the left-derivative sign
    /// `(-1)^{#{j in self : j < index}}` as "negative".
    pub fn remove(self, index: usize) -> Option<(IndexSet, bool)> {
        if !self.contains(index) {
            return None;
        }
        let below = (self.0 & ((1u32 << index) - 1)).count_ones();
        Some((IndexSet(self.0 & !(1 << index)), below % 2 == 1))
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the lowest differing index belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ix: &[usize]) -> IndexSet {
        IndexSet::from_indices(ix).unwrap()
    }

    #[test]
    fn ordering_is_grade_then_lex() {
        let mut keys = vec![set(&[1, 2]), set(&[0, 2]), set(&[]), set(&[1]), set(&[0, 1]), set(&[0])];
        keys.sort();
        assert_eq!(
            keys,
            vec![set(&[]), set(&[0]), set(&[1]), set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]
        );
    }

    #[test]
    fn merge_signs() {
        assert_eq!(set(&[0]).merge(set(&[1])), Some((set(&[0, 1]), false)));
        assert_eq!(set(&[1]).merge(set(&[0])), Some((set(&[0, 1]), true)));
        assert_eq!(set(&[1, 2]).merge(set(&[0])), Some((set(&[0, 1, 2]), false)));
        assert_eq!(set(&[0, 2]).merge(set(&[1])), Some((set(&[0, 1, 2]), true)));
        assert_eq!(set(&[0]).merge(set(&[0, 1])), None);
    }

    #[test]
    fn remove_signs() {
        assert_eq!(set(&[0, 1]).remove(0), Some((set(&[1]), false)));
        assert_eq!(set(&[0, 1]).remove(1), Some((set(&[0]), true)));
        assert_eq!(set(&[0, 1, 3]).remove(3), Some((set(&[0, 1]), false)));
        assert_eq!(set(&[0]).remove(2), None);
    }

    #[test]
    fn bounds() {
        assert_eq!(IndexSet::EMPTY.max_index(), -1);
        assert_eq!(set(&[2, 5]).pair(), (2, 5));
        assert_eq!(set(&[1]).complement(3), set(&[0, 2]));
        assert_eq!(IndexSet::full(32).len(), 32);
    }
}
