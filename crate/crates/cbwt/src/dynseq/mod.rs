//! Dynamic integer sequences with rank/select and range queries.
//!
//! Public methods use 1-based positions and validate their arguments. The
//! `*_unchecked` variants share the same semantics without the checks and
//! are what the index and builder call on hot paths.

mod bits;
mod values;
mod wavelet;

use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use values::ValueSeq;
use wavelet::WaveletMatrix;

/// A sequence of values in `[0..=alphabet_bound]`.
///
/// Values live in a min-augmented chunk array (access, range minima, `mi`)
/// and, from the first rank-style query on, also in a wavelet matrix (rank,
/// select, rangecount, rnv) that is then kept up to date.
pub struct DynSeq {
    bound: u32,
    values: ValueSeq,
    wavelet: OnceLock<WaveletMatrix>,
    ops: AtomicU64,
}

impl Clone for DynSeq {
    fn clone(&self) -> Self {
        DynSeq {
            bound: self.bound,
            values: self.values.clone(),
            wavelet: self.wavelet.clone(),
            ops: AtomicU64::new(self.ops.load(Ordering::Relaxed)),
        }
    }
}

impl std::fmt::Debug for DynSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DynSeq")
            .field("alphabet_bound", &self.bound)
            .field("values", &self.to_vec())
            .finish()
    }
}

impl PartialEq for DynSeq {
    fn eq(&self, other: &Self) -> bool {
        self.bound == other.bound && self.len() == other.len() && self.values.iter().eq(other.values.iter())
    }
}

impl Eq for DynSeq {}

impl DynSeq {
    pub fn new(alphabet_bound: u32) -> Self {
        Self::with_values(alphabet_bound, &[])
    }

    pub fn from_values(alphabet_bound: u32, vals: &[u32]) -> Result<Self> {
        if let Some(&v) = vals.iter().find(|&&v| v > alphabet_bound) {
            return Err(Error::Alphabet { value: v, bound: alphabet_bound });
        }
        Ok(Self::with_values(alphabet_bound, vals))
    }

    fn with_values(bound: u32, vals: &[u32]) -> Self {
        DynSeq { bound, values: ValueSeq::from_values(vals), wavelet: OnceLock::new(), ops: AtomicU64::new(0) }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn alphabet_bound(&self) -> u32 {
        self.bound
    }

    /// Raises the bound; lowering it is ignored.
    pub fn raise_alphabet_bound(&mut self, bound: u32) {
        self.bound = self.bound.max(bound);
    }

    /// Number of operations performed since creation or the last reset.
    pub fn op_count(&self) -> u64 {
        self.ops.load(Ordering::Relaxed)
    }

    pub fn reset_op_count(&self) {
        self.ops.store(0, Ordering::Relaxed);
    }

    #[inline]
    fn tick(&self) {
        self.ops.fetch_add(1, Ordering::Relaxed);
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.values.iter().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.values.iter()
    }

    /// One decimal value per line.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for v in self.values.iter() {
            writeln!(s, "{v}").unwrap();
        }
        s
    }

    fn check_pos(&self, pos: usize, max: usize) -> Result<()> {
        if pos == 0 || pos > max {
            Err(Error::Range { pos, max })
        } else {
            Ok(())
        }
    }

    fn check_end(&self, j: usize) -> Result<()> {
        if j > self.len() {
            Err(Error::Range { pos: j, max: self.len() })
        } else {
            Ok(())
        }
    }

    // ---- checked API --------------------------------------------------

    pub fn insert(&mut self, i: usize, c: u32) -> Result<()> {
        self.check_pos(i, self.len() + 1)?;
        if c > self.bound {
            return Err(Error::Alphabet { value: c, bound: self.bound });
        }
        self.insert_unchecked(i, c);
        Ok(())
    }

    pub fn delete(&mut self, k: usize) -> Result<u32> {
        self.check_pos(k, self.len())?;
        Ok(self.delete_unchecked(k))
    }

    pub fn set(&mut self, i: usize, c: u32) -> Result<()> {
        self.check_pos(i, self.len())?;
        if c > self.bound {
            return Err(Error::Alphabet { value: c, bound: self.bound });
        }
        self.set_unchecked(i, c);
        Ok(())
    }

    pub fn access(&self, i: usize) -> Result<u32> {
        self.check_pos(i, self.len())?;
        Ok(self.access_unchecked(i))
    }

    /// Occurrences of `c` in positions `1..=j`.
    pub fn rank(&self, c: u32, j: usize) -> Result<usize> {
        self.check_end(j)?;
        Ok(self.rank_unchecked(c, j))
    }

    /// Position of the `i`-th occurrence of `c`.
    pub fn select(&self, c: u32, i: usize) -> Result<usize> {
        if i == 0 || i > self.rank_unchecked(c, self.len()) {
            return Err(Error::NotFound { symbol: c, occurrence: i });
        }
        Ok(self.select_unchecked(c, i))
    }

    /// Positions `x` in `i..=j` with `c <= V[x] <= d`; 0 when `i > j`.
    pub fn rangecount(&self, i: usize, j: usize, c: u32, d: u32) -> Result<usize> {
        self.check_end(j)?;
        if i == 0 {
            return Err(Error::Range { pos: i, max: self.len() });
        }
        Ok(self.rangecount_unchecked(i, j, c, d))
    }

    /// Smallest value in `i..=j` strictly larger than `c`.
    pub fn rnv(&self, i: usize, j: usize, c: u32) -> Result<Option<u32>> {
        self.check_pos(i, self.len())?;
        self.check_pos(j, self.len())?;
        if i > j {
            return Err(Error::Range { pos: i, max: j });
        }
        Ok(self.rnv_unchecked(i, j, c))
    }

    /// Smallest value in `i..=j`, i.e. rnv with threshold −1.
    pub fn range_min(&self, i: usize, j: usize) -> Result<Option<u32>> {
        self.check_end(j)?;
        if i == 0 {
            return Err(Error::Range { pos: i, max: self.len() });
        }
        Ok(self.range_min_unchecked(i, j))
    }

    /// Maximal interval `[l..r]` around `j` whose positions `l+1..=r` all hold
    /// values `>= c`.
    pub fn mi(&self, j: usize, c: u32) -> Result<(usize, usize)> {
        self.check_pos(j, self.len())?;
        Ok(self.mi_unchecked(j, c))
    }

    // ---- unchecked API ------------------------------------------------

    /// The wavelet matrix, built from the values on first use.
    #[inline]
    fn wm(&self) -> &WaveletMatrix {
        self.wavelet.get_or_init(|| WaveletMatrix::build(&self.to_vec()))
    }

    pub(crate) fn insert_unchecked(&mut self, i: usize, c: u32) {
        self.tick();
        debug_assert!(c <= self.bound);
        self.values.insert(i - 1, c);
        if let Some(w) = self.wavelet.get_mut() {
            w.insert(i - 1, c);
        }
    }

    pub(crate) fn delete_unchecked(&mut self, k: usize) -> u32 {
        self.tick();
        if let Some(w) = self.wavelet.get_mut() {
            w.remove(k - 1);
        }
        self.values.remove(k - 1)
    }

    pub(crate) fn set_unchecked(&mut self, i: usize, c: u32) {
        self.tick();
        debug_assert!(c <= self.bound);
        let old = self.values.get(i - 1);
        if old != c {
            if let Some(w) = self.wavelet.get_mut() {
                w.set(i - 1, old, c);
            }
            self.values.set(i - 1, c);
        }
    }

    #[inline]
    pub(crate) fn access_unchecked(&self, i: usize) -> u32 {
        self.tick();
        self.values.get(i - 1)
    }

    pub(crate) fn rank_unchecked(&self, c: u32, j: usize) -> usize {
        self.tick();
        self.wm().rank(c, j)
    }

    pub(crate) fn select_unchecked(&self, c: u32, i: usize) -> usize {
        self.tick();
        self.wm().select(c, i) + 1
    }

    pub(crate) fn rangecount_unchecked(&self, i: usize, j: usize, c: u32, d: u32) -> usize {
        self.tick();
        if i > j || c > d {
            return 0;
        }
        let (s, e) = (i - 1, j);
        let w = self.wm();
        w.count_less(s, e, d as u64 + 1) - w.count_less(s, e, c as u64)
    }

    pub(crate) fn rnv_unchecked(&self, i: usize, j: usize, c: u32) -> Option<u32> {
        self.tick();
        if i > j {
            return None;
        }
        let (s, e) = (i - 1, j);
        let w = self.wm();
        let below = w.count_less(s, e, c as u64 + 1);
        if below == e - s {
            None
        } else {
            Some(w.quantile(s, e, below))
        }
    }

    pub(crate) fn range_min_unchecked(&self, i: usize, j: usize) -> Option<u32> {
        self.tick();
        if i > j {
            None
        } else {
            Some(self.values.range_min(i - 1, j))
        }
    }

    pub(crate) fn mi_unchecked(&self, j: usize, c: u32) -> (usize, usize) {
        self.tick();
        let l = self.values.prev_less(j, c).map_or(0, |x| x + 1);
        let r = self.values.next_less(j, c).unwrap_or(self.len());
        (l, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> DynSeq {
        DynSeq::from_values(30, &[7, 14, 5, 1, 11, 27, 11, 7]).unwrap()
    }

    #[test]
    fn insert_grows_levels_without_disturbing_order() {
        let mut s = DynSeq::new(1000);
        for (i, v) in [1u32, 0, 1, 3, 900, 2].into_iter().enumerate() {
            s.insert(i + 1, v).unwrap();
        }
        assert_eq!(s.to_vec(), vec![1, 0, 1, 3, 900, 2]);
        assert_eq!(s.rank(1, 6).unwrap(), 2);
        assert_eq!(s.select(900, 1).unwrap(), 5);
        assert_eq!(s.rangecount(1, 6, 1, 3).unwrap(), 4);
    }

    #[test]
    fn rejects_bad_arguments() {
        let mut s = sample();
        assert_eq!(s.insert(10, 1), Err(Error::Range { pos: 10, max: 9 }));
        assert_eq!(s.insert(1, 31), Err(Error::Alphabet { value: 31, bound: 30 }));
        assert!(s.access(0).is_err());
        assert!(s.select(11, 3).is_err());
        assert!(s.rank(7, 9).is_err());
    }

    #[test]
    fn rnv_and_range_min() {
        let s = sample();
        assert_eq!(s.rnv(1, 5, 8).unwrap(), Some(11));
        assert_eq!(s.rnv(2, 7, 0).unwrap(), Some(1));
        assert_eq!(s.range_min(2, 3).unwrap(), Some(5));
        assert_eq!(s.range_min(3, 2).unwrap(), None);
    }
}
