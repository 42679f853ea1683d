//! Chunked value array with subtree minima, for access, range minimum and
//! nearest-smaller searches. Positions are 0-based.

const CAP: usize = 512;
const FILL: usize = CAP / 2;

#[derive(Clone, Copy)]
struct Sum {
    len: usize,
    min: u32,
}

const EMPTY: Sum = Sum { len: 0, min: u32::MAX };

#[derive(Clone)]
pub(crate) struct ValueSeq {
    leaves: Vec<Vec<u32>>,
    tree: Vec<Sum>,
    cap: usize,
}

impl ValueSeq {
    pub(crate) fn from_values(values: &[u32]) -> Self {
        let mut leaves: Vec<Vec<u32>> = values.chunks(FILL).map(|c| {
            let mut v = Vec::with_capacity(CAP);
            v.extend_from_slice(c);
            v
        }).collect();
        if leaves.is_empty() {
            leaves.push(Vec::with_capacity(CAP));
        }
        let mut s = ValueSeq { leaves, tree: Vec::new(), cap: 0 };
        s.rebuild();
        s
    }

    fn rebuild(&mut self) {
        self.cap = self.leaves.len().next_power_of_two();
        self.tree = vec![EMPTY; 2 * self.cap];
        for i in 0..self.leaves.len() {
            self.tree[self.cap + i] = leaf_sum(&self.leaves[i]);
        }
        for i in (1..self.cap).rev() {
            self.tree[i] = join(self.tree[2 * i], self.tree[2 * i + 1]);
        }
    }

    /// Splits `leaf` in half, shifting the summaries of later leaves instead
    /// of rescanning them.
    fn split(&mut self, leaf: usize, at: usize) {
        let mut right = Vec::with_capacity(CAP);
        right.extend(self.leaves[leaf].drain(at..));
        self.leaves.insert(leaf + 1, right);
        let used = self.leaves.len();
        if used > self.cap {
            self.rebuild();
            return;
        }
        let base = self.cap;
        self.tree.copy_within(base + leaf + 1..base + used - 1, base + leaf + 2);
        self.tree[base + leaf] = leaf_sum(&self.leaves[leaf]);
        self.tree[base + leaf + 1] = leaf_sum(&self.leaves[leaf + 1]);
        for i in (1..base).rev() {
            self.tree[i] = join(self.tree[2 * i], self.tree[2 * i + 1]);
        }
    }

    fn refresh(&mut self, leaf: usize) {
        self.refresh_to(leaf, leaf_sum(&self.leaves[leaf]));
    }

    fn refresh_to(&mut self, leaf: usize, sum: Sum) {
        let mut i = self.cap + leaf;
        self.tree[i] = sum;
        while i > 1 {
            i /= 2;
            self.tree[i] = join(self.tree[2 * i], self.tree[2 * i + 1]);
        }
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.tree[1].len
    }

    #[inline]
    fn find(&self, mut pos: usize) -> (usize, usize) {
        let mut node = 1;
        while node < self.cap {
            let left = self.tree[2 * node].len;
            if pos < left {
                node *= 2;
            } else {
                pos -= left;
                node = 2 * node + 1;
            }
        }
        (node - self.cap, pos)
    }

    /// Number of values stored in leaves before `leaf`.
    fn leaf_start(&self, leaf: usize) -> usize {
        let mut i = self.cap + leaf;
        let mut before = 0;
        while i > 1 {
            if i % 2 == 1 {
                before += self.tree[i - 1].len;
            }
            i /= 2;
        }
        before
    }

    #[inline]
    pub(crate) fn get(&self, pos: usize) -> u32 {
        let (leaf, off) = self.find(pos);
        self.leaves[leaf][off]
    }

    pub(crate) fn set(&mut self, pos: usize, v: u32) {
        let (leaf, off) = self.find(pos);
        let old = std::mem::replace(&mut self.leaves[leaf][off], v);
        let cur = self.tree[self.cap + leaf];
        if old > cur.min {
            self.refresh_to(leaf, Sum { len: cur.len, min: cur.min.min(v) });
        } else {
            self.refresh(leaf);
        }
    }

    pub(crate) fn insert(&mut self, pos: usize, v: u32) {
        let (leaf, off) = if pos == self.len() {
            let last = self.leaves.len() - 1;
            (last, self.leaves[last].len())
        } else {
            self.find(pos)
        };
        self.leaves[leaf].insert(off, v);
        if self.leaves[leaf].len() >= CAP {
            self.split(leaf, CAP / 2);
        } else {
            let cur = self.tree[self.cap + leaf];
            self.refresh_to(leaf, Sum { len: cur.len + 1, min: cur.min.min(v) });
        }
    }

    pub(crate) fn remove(&mut self, pos: usize) -> u32 {
        let (leaf, off) = self.find(pos);
        let v = self.leaves[leaf].remove(off);
        if self.leaves[leaf].len() < CAP / 4 && self.leaves.len() > 1 {
            let (a, b) = if leaf + 1 < self.leaves.len() { (leaf, leaf + 1) } else { (leaf - 1, leaf) };
            let right = self.leaves.remove(b);
            self.leaves[a].extend(right);
            if self.leaves[a].len() >= CAP {
                let half = self.leaves[a].len() / 2;
                let mut second = Vec::with_capacity(CAP);
                second.extend(self.leaves[a].drain(half..));
                self.leaves.insert(b, second);
            }
            self.rebuild();
        } else {
            let cur = self.tree[self.cap + leaf];
            if v > cur.min {
                self.refresh_to(leaf, Sum { len: cur.len - 1, min: cur.min });
            } else {
                self.refresh(leaf);
            }
        }
        v
    }

    /// Minimum over `[i, j)`; `u32::MAX` when empty.
    pub(crate) fn range_min(&self, i: usize, j: usize) -> u32 {
        if i >= j {
            return u32::MAX;
        }
        let (li, oi) = self.find(i);
        let (lj, oj) = self.find(j - 1);
        if li == lj {
            return *self.leaves[li][oi..=oj].iter().min().unwrap();
        }
        let mut m = *self.leaves[li][oi..].iter().min().unwrap();
        m = m.min(*self.leaves[lj][..=oj].iter().min().unwrap());
        let (mut lo, mut hi) = (self.cap + li + 1, self.cap + lj);
        while lo < hi {
            if lo % 2 == 1 {
                m = m.min(self.tree[lo].min);
                lo += 1;
            }
            if hi % 2 == 1 {
                hi -= 1;
                m = m.min(self.tree[hi].min);
            }
            lo /= 2;
            hi /= 2;
        }
        m
    }

    /// Largest position `x < j` with `value(x) < c`.
    pub(crate) fn prev_less(&self, j: usize, c: u32) -> Option<usize> {
        if j == 0 {
            return None;
        }
        let (leaf, off) = self.find(j - 1);
        if let Some(k) = last_less(&self.leaves[leaf][..=off], c) {
            return Some(self.leaf_start(leaf) + k);
        }
        let mut node = self.cap + leaf;
        while node > 1 {
            if node % 2 == 1 && self.tree[node - 1].min < c {
                let mut n = node - 1;
                while n < self.cap {
                    n = if self.tree[2 * n + 1].min < c { 2 * n + 1 } else { 2 * n };
                }
                let leaf = n - self.cap;
                let k = last_less(&self.leaves[leaf], c).unwrap();
                return Some(self.leaf_start(leaf) + k);
            }
            node /= 2;
        }
        None
    }

    /// Smallest position `x >= j` with `value(x) < c`.
    pub(crate) fn next_less(&self, j: usize, c: u32) -> Option<usize> {
        if j >= self.len() {
            return None;
        }
        let (leaf, off) = self.find(j);
        if let Some(k) = first_less(&self.leaves[leaf][off..], c) {
            return Some(j + k);
        }
        let mut node = self.cap + leaf;
        while node > 1 {
            if node.is_multiple_of(2) && self.tree[node + 1].min < c {
                let mut n = node + 1;
                while n < self.cap {
                    n = if self.tree[2 * n].min < c { 2 * n } else { 2 * n + 1 };
                }
                let leaf = n - self.cap;
                let k = first_less(&self.leaves[leaf], c).unwrap();
                return Some(self.leaf_start(leaf) + k);
            }
            node /= 2;
        }
        None
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.leaves.iter().flat_map(|l| l.iter().copied())
    }
}

const SCAN: usize = 32;

fn chunk_min(s: &[u32]) -> u32 {
    s.iter().fold(u32::MAX, |m, &v| m.min(v))
}

fn last_less(s: &[u32], c: u32) -> Option<usize> {
    let mut end = s.len();
    while end > 0 {
        let start = end.saturating_sub(SCAN);
        if chunk_min(&s[start..end]) < c {
            return s[start..end].iter().rposition(|&v| v < c).map(|k| start + k);
        }
        end = start;
    }
    None
}

fn first_less(s: &[u32], c: u32) -> Option<usize> {
    let mut start = 0;
    while start < s.len() {
        let end = (start + SCAN).min(s.len());
        if chunk_min(&s[start..end]) < c {
            return s[start..end].iter().position(|&v| v < c).map(|k| start + k);
        }
        start = end;
    }
    None
}

fn leaf_sum(l: &[u32]) -> Sum {
    Sum { len: l.len(), min: l.iter().copied().min().unwrap_or(u32::MAX) }
}

#[inline]
fn join(a: Sum, b: Sum) -> Sum {
    Sum { len: a.len + b.len, min: a.min.min(b.min) }
}
