//! Dynamic bitvector: fixed-capacity leaves under an array segment tree of
//! (length, popcount) sums. All positions here are 0-based.

const WORDS: usize = 16;
const CAP: usize = WORDS * 64;
const FILL: usize = CAP / 2;

/// `pre[k]` counts the ones in words `0..k`; entries past the last used
/// word are stale.
#[derive(Clone)]
struct Leaf {
    w: [u64; WORDS],
    pre: [u16; WORDS],
    len: usize,
    ones: usize,
}

impl Leaf {
    fn empty() -> Self {
        Leaf { w: [0; WORDS], pre: [0; WORDS], len: 0, ones: 0 }
    }

    #[inline]
    fn get(&self, off: usize) -> bool {
        (self.w[off / 64] >> (off % 64)) & 1 == 1
    }

    fn refresh_pre(&mut self, from: usize) {
        let last = self.len.saturating_sub(1) / 64;
        for k in from + 1..=last {
            self.pre[k] = self.pre[k - 1] + self.w[k - 1].count_ones() as u16;
        }
    }

    #[inline]
    fn rank1(&self, off: usize) -> usize {
        let wi = off / 64;
        let low = self.w[wi] & ((1u64 << (off % 64)) - 1);
        self.pre[wi] as usize + low.count_ones() as usize
    }

    fn select(&self, k: usize, one: bool) -> usize {
        let before = |wi: usize| if one { self.pre[wi] as usize } else { wi * 64 - self.pre[wi] as usize };
        let mut wi = 0;
        let last = self.len.saturating_sub(1) / 64;
        while wi < last && before(wi + 1) < k {
            wi += 1;
        }
        let word = if one { self.w[wi] } else { !self.w[wi] };
        wi * 64 + select_in_word(word, k - before(wi))
    }

    fn insert(&mut self, off: usize, bit: bool) {
        debug_assert!(self.len < CAP && off <= self.len);
        let wi = off / 64;
        let bi = off % 64;
        let last = self.len / 64;
        for w in (wi + 1..=last).rev() {
            self.w[w] = (self.w[w] << 1) | (self.w[w - 1] >> 63);
        }
        let word = self.w[wi];
        let low_mask = (1u64 << bi) - 1;
        self.w[wi] = (word & low_mask) | ((word & !low_mask) << 1) | ((bit as u64) << bi);
        self.len += 1;
        self.ones += bit as usize;
        // `wi` may be a word that just came into use.
        self.refresh_pre(wi.saturating_sub(1));
    }

    fn remove(&mut self, off: usize) -> bool {
        debug_assert!(off < self.len);
        let wi = off / 64;
        let bi = off % 64;
        let bit = self.get(off);
        let last = (self.len - 1) / 64;
        let word = self.w[wi];
        let low_mask = (1u64 << bi) - 1;
        let carry = |w: &[u64; WORDS], i: usize| if i + 1 < WORDS { w[i + 1] << 63 } else { 0 };
        self.w[wi] = (word & low_mask) | ((word >> 1) & !low_mask) | carry(&self.w, wi);
        for w in wi + 1..=last {
            self.w[w] = (self.w[w] >> 1) | carry(&self.w, w);
        }
        self.len -= 1;
        self.ones -= bit as usize;
        self.refresh_pre(wi);
        bit
    }

    /// Appends without maintaining `pre`; call `refresh_pre(0)` afterwards.
    fn push(&mut self, bit: bool) {
        let off = self.len;
        if bit {
            self.w[off / 64] |= 1 << (off % 64);
        }
        self.len += 1;
        self.ones += bit as usize;
    }

    fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |o| self.get(o))
    }
}

#[inline]
fn select_in_word(word: u64, mut k: usize) -> usize {
    let mut shift = 0;
    loop {
        let c = ((word >> shift) & 0xff).count_ones() as usize;
        if k <= c {
            break;
        }
        k -= c;
        shift += 8;
    }
    let mut byte = (word >> shift) & 0xff;
    for _ in 1..k {
        byte &= byte - 1;
    }
    shift + byte.trailing_zeros() as usize
}

#[derive(Clone, Copy, Default)]
struct Sum {
    len: usize,
    ones: usize,
}

#[derive(Clone)]
pub(crate) struct BitVec {
    leaves: Vec<Leaf>,
    tree: Vec<Sum>,
    cap: usize,
}

impl BitVec {
    pub(crate) fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut leaves = vec![Leaf::empty()];
        for b in bits {
            if leaves.last().unwrap().len == FILL {
                leaves.push(Leaf::empty());
            }
            leaves.last_mut().unwrap().push(b);
        }
        for l in &mut leaves {
            l.refresh_pre(0);
        }
        Self::from_leaves(leaves)
    }

    fn from_leaves(leaves: Vec<Leaf>) -> Self {
        let mut bv = BitVec { leaves, tree: Vec::new(), cap: 0 };
        bv.rebuild();
        bv
    }

    fn rebuild(&mut self) {
        self.cap = self.leaves.len().next_power_of_two();
        self.tree = vec![Sum::default(); 2 * self.cap];
        for (i, l) in self.leaves.iter().enumerate() {
            self.tree[self.cap + i] = Sum { len: l.len, ones: l.ones };
        }
        for i in (1..self.cap).rev() {
            self.tree[i] = join(self.tree[2 * i], self.tree[2 * i + 1]);
        }
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.tree[1].len
    }

    #[inline]
    pub(crate) fn ones(&self) -> usize {
        self.tree[1].ones
    }

    /// Leaf holding position `pos < len`, with the offset inside it and the
    /// number of ones before the leaf.
    #[inline]
    fn find(&self, mut pos: usize) -> (usize, usize, usize) {
        let mut node = 1;
        let mut ones = 0;
        while node < self.cap {
            let left = self.tree[2 * node];
            if pos < left.len {
                node *= 2;
            } else {
                pos -= left.len;
                ones += left.ones;
                node = 2 * node + 1;
            }
        }
        (node - self.cap, pos, ones)
    }

    /// Ones in `[0, pos)`.
    #[inline]
    pub(crate) fn rank1(&self, pos: usize) -> usize {
        if pos >= self.len() {
            return self.ones();
        }
        let (leaf, off, ones) = self.find(pos);
        ones + self.leaves[leaf].rank1(off)
    }

    #[inline]
    pub(crate) fn rank0(&self, pos: usize) -> usize {
        pos - self.rank1(pos)
    }

    /// Position of the `k`-th (1-based) one or zero.
    pub(crate) fn select(&self, mut k: usize, one: bool) -> usize {
        let count = |s: Sum| if one { s.ones } else { s.len - s.ones };
        debug_assert!(k >= 1 && k <= count(self.tree[1]));
        let mut node = 1;
        let mut pos = 0;
        while node < self.cap {
            let left = self.tree[2 * node];
            if k <= count(left) {
                node *= 2;
            } else {
                k -= count(left);
                pos += left.len;
                node = 2 * node + 1;
            }
        }
        pos + self.leaves[node - self.cap].select(k, one)
    }

    /// Inserts `bit` at `pos`; returns the ones before `pos`.
    pub(crate) fn insert(&mut self, pos: usize, bit: bool) -> usize {
        let (leaf, off, r1) = if pos == self.len() {
            let last = self.leaves.len() - 1;
            (last, self.leaves[last].len, self.ones())
        } else {
            let (leaf, off, before) = self.find(pos);
            (leaf, off, before + self.leaves[leaf].rank1(off))
        };
        self.leaves[leaf].insert(off, bit);
        if self.leaves[leaf].len == CAP {
            let right = split(&mut self.leaves[leaf]);
            self.leaves.insert(leaf + 1, right);
            self.rebuild();
        } else {
            self.bump(leaf, 1, bit as usize, true);
        }
        r1
    }

    /// Adds (or subtracts) `len` and `ones` along the path above `leaf`.
    #[inline]
    fn bump(&mut self, leaf: usize, len: usize, ones: usize, add: bool) {
        let mut i = self.cap + leaf;
        while i >= 1 {
            let t = &mut self.tree[i];
            if add {
                t.len += len;
                t.ones += ones;
            } else {
                t.len -= len;
                t.ones -= ones;
            }
            i /= 2;
        }
    }

    pub(crate) fn set(&mut self, pos: usize, bit: bool) {
        let (leaf, off, _) = self.find(pos);
        let l = &mut self.leaves[leaf];
        let mask = 1u64 << (off % 64);
        if (l.w[off / 64] & mask != 0) != bit {
            l.w[off / 64] ^= mask;
            l.refresh_pre(off / 64);
            if bit {
                l.ones += 1;
                self.bump(leaf, 0, 1, true);
            } else {
                l.ones -= 1;
                self.bump(leaf, 0, 1, false);
            }
        }
    }

    /// Removes the bit at `pos`; returns it with the ones before `pos`.
    pub(crate) fn remove(&mut self, pos: usize) -> (bool, usize) {
        let (leaf, off, before) = self.find(pos);
        let r1 = before + self.leaves[leaf].rank1(off);
        let bit = self.leaves[leaf].remove(off);
        if self.leaves[leaf].len < CAP / 4 && self.leaves.len() > 1 {
            let (a, b) = if leaf + 1 < self.leaves.len() { (leaf, leaf + 1) } else { (leaf - 1, leaf) };
            let right = self.leaves.remove(b);
            let total = self.leaves[a].len + right.len;
            let merged: Vec<bool> = self.leaves[a].bits().chain(right.bits()).collect();
            let mut first = Leaf::empty();
            let mut second = Leaf::empty();
            let cut = if total < CAP { total } else { total / 2 };
            for (i, b) in merged.into_iter().enumerate() {
                if i < cut { first.push(b) } else { second.push(b) }
            }
            first.refresh_pre(0);
            second.refresh_pre(0);
            self.leaves[a] = first;
            if second.len > 0 {
                self.leaves.insert(b, second);
            }
            self.rebuild();
        } else {
            self.bump(leaf, 1, bit as usize, false);
        }
        (bit, r1)
    }

    #[cfg(test)]
    pub(crate) fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.leaves.iter().flat_map(|l| l.bits())
    }
}

fn split(leaf: &mut Leaf) -> Leaf {
    let half = leaf.len / 2;
    let mut right = Leaf::empty();
    for o in half..leaf.len {
        right.push(leaf.get(o));
    }
    let mut left = Leaf::empty();
    for o in 0..half {
        left.push(leaf.get(o));
    }
    left.refresh_pre(0);
    right.refresh_pre(0);
    *leaf = left;
    right
}

#[inline]
fn join(a: Sum, b: Sum) -> Sum {
    Sum { len: a.len + b.len, ones: a.ones + b.ones }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn matches_vec_under_random_edits() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let mut bv = BitVec::from_bits([]);
        let mut naive: Vec<bool> = Vec::new();
        for step in 0..40_000 {
            let grow = naive.len() < 200 || rng.gen_bool(0.55);
            if grow {
                let p = if rng.gen_bool(0.3) { naive.len() } else { rng.gen_range(0..=naive.len()) };
                let b = rng.gen_bool(0.4);
                bv.insert(p, b);
                naive.insert(p, b);
            } else {
                let p = if rng.gen_bool(0.3) { naive.len() - 1 } else { rng.gen_range(0..naive.len()) };
                assert_eq!(bv.remove(p).0, naive.remove(p));
            }
            if step % 97 == 0 {
                assert_eq!(bv.iter().collect::<Vec<_>>(), naive);
                let p = rng.gen_range(0..=naive.len());
                assert_eq!(bv.rank1(p), naive[..p].iter().filter(|&&b| b).count());
                let ones = bv.ones();
                if ones > 0 {
                    let k = rng.gen_range(1..=ones);
                    let want = naive.iter().enumerate().filter(|(_, &b)| b).nth(k - 1).unwrap().0;
                    assert_eq!(bv.select(k, true), want);
                }
                let zeros = bv.len() - ones;
                if zeros > 0 {
                    let k = rng.gen_range(1..=zeros);
                    let want = naive.iter().enumerate().filter(|(_, &b)| !b).nth(k - 1).unwrap().0;
                    assert_eq!(bv.select(k, false), want);
                }
            }
        }
    }
}
