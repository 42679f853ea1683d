//! Dynamic wavelet matrix over 0-based positions. The number of levels
//! follows the largest value stored so far.

use super::bits::BitVec;

#[derive(Clone)]
struct Level {
    bits: BitVec,
    zeros: usize,
}

#[derive(Clone)]
pub(crate) struct WaveletMatrix {
    levels: Vec<Level>,
}

pub(crate) fn width_for(v: u32) -> usize {
    (32 - v.leading_zeros()).max(1) as usize
}

impl WaveletMatrix {
    pub(crate) fn build(vals: &[u32]) -> Self {
        let width = width_for(vals.iter().copied().max().unwrap_or(0));
        let mut levels = Vec::with_capacity(width);
        let mut cur: Vec<u32> = vals.to_vec();
        for l in 0..width {
            let shift = width - 1 - l;
            let bits = BitVec::from_bits(cur.iter().map(|&v| (v >> shift) & 1 == 1));
            let zeros = bits.len() - bits.ones();
            levels.push(Level { bits, zeros });
            let (mut lo, hi): (Vec<u32>, Vec<u32>) = cur.iter().partition(|&&v| (v >> shift) & 1 == 0);
            lo.extend(hi);
            cur = lo;
        }
        WaveletMatrix { levels }
    }

    #[inline]
    fn width(&self) -> usize {
        self.levels.len()
    }

    /// Prepends all-zero levels until `c` fits; lower levels keep their order.
    fn widen_to(&mut self, c: u32) {
        let need = width_for(c);
        while self.levels.len() < need {
            let n = self.levels[0].bits.len();
            self.levels.insert(0, Level { bits: BitVec::from_bits(std::iter::repeat_n(false, n)), zeros: n });
        }
    }

    pub(crate) fn insert(&mut self, p: usize, c: u32) {
        self.widen_to(c);
        self.insert_from(0, p, c);
    }

    fn insert_from(&mut self, from: usize, mut p: usize, c: u32) {
        let width = self.width();
        for (l, level) in self.levels.iter_mut().enumerate().skip(from) {
            let bit = (c >> (width - 1 - l)) & 1 == 1;
            let r1 = level.bits.insert(p, bit);
            if bit {
                p = level.zeros + r1;
            } else {
                level.zeros += 1;
                p -= r1;
            }
        }
    }

    pub(crate) fn remove(&mut self, p: usize) {
        self.remove_from(0, p);
    }

    fn remove_from(&mut self, from: usize, mut p: usize) {
        for level in self.levels.iter_mut().skip(from) {
            let (bit, r1) = level.bits.remove(p);
            if bit {
                p = level.zeros + r1;
            } else {
                level.zeros -= 1;
                p -= r1;
            }
        }
    }

    /// Replaces the value `old` at `p` by `new`. Levels above the first
    /// differing bit are untouched; that level flips one bit and only the
    /// levels below it move the entry.
    pub(crate) fn set(&mut self, mut p: usize, old: u32, new: u32) {
        self.widen_to(new);
        let width = self.width();
        let bit = |v: u32, l: usize| (v >> (width - 1 - l)) & 1 == 1;
        let mut l = 0;
        while l < width && bit(old, l) == bit(new, l) {
            let level = &self.levels[l];
            p = if bit(new, l) { level.zeros + level.bits.rank1(p) } else { level.bits.rank0(p) };
            l += 1;
        }
        if l == width {
            return;
        }
        let level = &mut self.levels[l];
        let r1 = level.bits.rank1(p);
        level.bits.set(p, bit(new, l));
        let (from, to) = if bit(new, l) {
            level.zeros -= 1;
            (p - r1, level.zeros + r1)
        } else {
            let from = level.zeros + r1;
            level.zeros += 1;
            (from, p - r1)
        };
        self.remove_from(l + 1, from);
        self.insert_from(l + 1, to, new);
    }

    /// Occurrences of `c` in `[0, j)`.
    pub(crate) fn rank(&self, c: u32, j: usize) -> usize {
        let width = self.width();
        if width_for(c) > width {
            return 0;
        }
        let (mut s, mut e) = (0, j);
        for (l, level) in self.levels.iter().enumerate() {
            if (c >> (width - 1 - l)) & 1 == 1 {
                s = level.zeros + level.bits.rank1(s);
                e = level.zeros + level.bits.rank1(e);
            } else {
                s = level.bits.rank0(s);
                e = level.bits.rank0(e);
            }
        }
        e - s
    }

    /// 0-based position of the `i`-th (1-based) occurrence of `c`.
    pub(crate) fn select(&self, c: u32, i: usize) -> usize {
        let width = self.width();
        let mut p = 0;
        for (l, level) in self.levels.iter().enumerate() {
            p = if (c >> (width - 1 - l)) & 1 == 1 {
                level.zeros + level.bits.rank1(p)
            } else {
                level.bits.rank0(p)
            };
        }
        let mut pos = p + i - 1;
        for (l, level) in self.levels.iter().enumerate().rev() {
            pos = if (c >> (width - 1 - l)) & 1 == 1 {
                level.bits.select(pos - level.zeros + 1, true)
            } else {
                level.bits.select(pos + 1, false)
            };
        }
        pos
    }

    /// Values `< c` among positions `[s, e)`.
    pub(crate) fn count_less(&self, mut s: usize, mut e: usize, c: u64) -> usize {
        let width = self.width();
        if c >= 1u64 << width {
            return e - s;
        }
        let mut res = 0;
        for (l, level) in self.levels.iter().enumerate() {
            let s0 = level.bits.rank0(s);
            let e0 = level.bits.rank0(e);
            if (c >> (width - 1 - l)) & 1 == 1 {
                res += e0 - s0;
                s = level.zeros + (s - s0);
                e = level.zeros + (e - e0);
            } else {
                s = s0;
                e = e0;
            }
        }
        res
    }

    /// k-th smallest (0-based) value among positions `[s, e)`.
    pub(crate) fn quantile(&self, mut s: usize, mut e: usize, mut k: usize) -> u32 {
        let width = self.width();
        let mut v = 0u32;
        for (l, level) in self.levels.iter().enumerate() {
            let s0 = level.bits.rank0(s);
            let e0 = level.bits.rank0(e);
            if k < e0 - s0 {
                s = s0;
                e = e0;
            } else {
                k -= e0 - s0;
                s = level.zeros + (s - s0);
                e = level.zeros + (e - e0);
                v |= 1 << (width - 1 - l);
            }
        }
        v
    }
}
