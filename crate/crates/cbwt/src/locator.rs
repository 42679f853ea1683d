//! Occurrence reporting through a sampled conjugate array.

use std::collections::HashMap;

use crate::dynseq::DynSeq;
use crate::error::{Error, Result};
use crate::index::CbwtIndex;
use crate::scalar::Scalar;

/// Sampled conjugate starts, stored at the lexicographic rows they occupy.
///
/// Conjugate starts are 1-based positions in the concatenation of the texts
/// in id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleStore {
    rate: usize,
    marked: DynSeq,
    values: Vec<usize>,
    /// Per inserted text: 0-based start in the id-order concatenation, and
    /// the length of one LF cycle.
    layout: Vec<(usize, usize)>,
    /// `(start, inserted index)` sorted by start.
    by_start: Vec<(usize, usize)>,
}

/// `⌈lg n⌉`, at least 1.
pub fn default_rate(n: usize) -> usize {
    if n <= 2 {
        1
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

fn starts_by_id(index: &CbwtIndex) -> Vec<usize> {
    let mut order: Vec<usize> = (0..index.d()).collect();
    order.sort_by_key(|&k| index.texts[k].id);
    let mut starts = vec![0; index.d()];
    let mut acc = 0;
    for k in order {
        starts[k] = acc;
        acc += index.texts[k].len;
    }
    starts
}

/// Rows visited by the LF cycle through `anchor`, starting with `anchor`.
fn lf_cycle(index: &CbwtIndex, anchor: usize, len: usize) -> Result<Vec<usize>> {
    let mut rows = vec![anchor];
    let mut cur = index.lf_unchecked(anchor);
    while cur != anchor {
        rows.push(cur);
        if rows.len() > len {
            return Err(Error::ConstructionOrder);
        }
        cur = index.lf_unchecked(cur);
    }
    if !len.is_multiple_of(rows.len()) {
        return Err(Error::ConstructionOrder);
    }
    Ok(rows)
}

type Pairs = Vec<(usize, usize)>;

fn layout_for(index: &CbwtIndex, starts: &[usize], cycles: &[Vec<usize>]) -> (Pairs, Pairs) {
    let layout: Vec<(usize, usize)> = starts.iter().zip(cycles).map(|(&s, c)| (s, c.len())).collect();
    let mut by_start: Vec<(usize, usize)> = starts.iter().copied().zip(0..index.d()).collect();
    by_start.sort_unstable();
    (layout, by_start)
}

/// Samples every `rate`-th conjugate along each LF cycle, cycle starts
/// included.
pub fn attach_samples(index: &CbwtIndex, rate: usize) -> Result<SampleStore> {
    if index.anchors.len() != index.d() || index.d() == 0 {
        return Err(Error::ConstructionOrder);
    }
    let rate = rate.max(1);
    let starts = starts_by_id(index);
    let mut cycles = Vec::with_capacity(index.d());
    let mut samples: Vec<(usize, usize)> = Vec::new();
    for (k, meta) in index.texts.iter().enumerate() {
        let cycle = lf_cycle(index, index.anchors[k], meta.len)?;
        let p = cycle.len();
        for block in 0..meta.len / p {
            for off in (0..p).step_by(rate) {
                let class_row = if off == 0 { cycle[0] } else { cycle[p - off] };
                samples.push((class_row + block, starts[k] + block * p + off + 1));
            }
        }
        cycles.push(cycle);
    }
    samples.sort_unstable();
    let (layout, by_start) = layout_for(index, &starts, &cycles);
    build_store(index.n(), rate, &samples, layout, by_start)
}

fn build_store(
    n: usize,
    rate: usize,
    samples: &[(usize, usize)],
    layout: Vec<(usize, usize)>,
    by_start: Vec<(usize, usize)>,
) -> Result<SampleStore> {
    let mut bits = vec![0u32; n];
    for &(row, _) in samples {
        bits[row - 1] = 1;
    }
    Ok(SampleStore {
        rate,
        marked: DynSeq::from_values(1, &bits)?,
        values: samples.iter().map(|&(_, v)| v).collect(),
        layout,
        by_start,
    })
}

impl SampleStore {
    pub fn rate(&self) -> usize {
        self.rate
    }

    /// `(row, conjugate start)` pairs in row order.
    pub fn samples(&self) -> Vec<(usize, usize)> {
        let mut rows = Vec::with_capacity(self.values.len());
        for (k, bit) in self.marked.iter().enumerate() {
            if bit == 1 {
                rows.push(k + 1);
            }
        }
        rows.into_iter().zip(self.values.iter().copied()).collect()
    }

    /// Rebuilds a store from serialized samples and restores the index's
    /// anchors from them.
    pub fn restore(index: &mut CbwtIndex, rate: usize, samples: &[(usize, usize)]) -> Result<SampleStore> {
        let starts = starts_by_id(index);
        let n = index.n();
        if samples.windows(2).any(|w| w[0].0 >= w[1].0) || samples.iter().any(|&(r, v)| r == 0 || r > n || v == 0 || v > n) {
            return Err(Error::ConstructionOrder);
        }
        let row_of: HashMap<usize, usize> = samples.iter().map(|&(r, v)| (v, r)).collect();
        index.anchors = starts
            .iter()
            .map(|s| row_of.get(&(s + 1)).copied().ok_or(Error::ConstructionOrder))
            .collect::<Result<_>>()?;
        let cycles = index
            .texts
            .iter()
            .enumerate()
            .map(|(k, meta)| lf_cycle(index, index.anchors[k], meta.len))
            .collect::<Result<Vec<_>>>()?;
        let (layout, by_start) = layout_for(index, &starts, &cycles);
        build_store(n, rate.max(1), samples, layout, by_start)
    }

    /// Inserted-text index and 0-based offset of a conjugate start.
    fn owner(&self, start: usize) -> (usize, usize) {
        let pos = start - 1;
        let k = self.by_start.partition_point(|&(s, _)| s <= pos) - 1;
        let (s, text) = self.by_start[k];
        (text, pos - s)
    }
}

/// Conjugate starts (1-based, ascending) of all matches of `p`.
pub fn locate_ids<T: Scalar>(index: &CbwtIndex, store: &SampleStore, p: &[T]) -> Result<Vec<usize>> {
    let range = index.backward_search(p)?;
    let cap = store.rate.saturating_mul(index.n()).max(1);
    let mut out = Vec::with_capacity(range.len());
    if range.is_empty() {
        return Ok(out);
    }
    for row in range.lo..=range.hi {
        let mut cur = row;
        let mut steps = 0;
        while store.marked.access_unchecked(cur) == 0 {
            cur = index.lf_unchecked(cur);
            steps += 1;
            if steps > cap {
                return Err(Error::WalkLimit(cap));
            }
        }
        let sampled = store.values[store.marked.rank_unchecked(1, cur) - 1];
        let (text, off) = store.owner(sampled);
        let (start, cycle) = store.layout[text];
        let block = off - off % cycle;
        let target = block + (off - block + steps) % cycle;
        out.push(start + target + 1);
    }
    out.sort_unstable();
    Ok(out)
}

/// Matches of `p` as `(text id, 1-based offset)` pairs, sorted.
pub fn locate<T: Scalar>(index: &CbwtIndex, store: &SampleStore, p: &[T]) -> Result<Vec<(usize, usize)>> {
    let ids = locate_ids(index, store, p)?;
    let mut out: Vec<(usize, usize)> = ids
        .into_iter()
        .map(|g| {
            let (text, off) = store.owner(g);
            (index.texts[text].id, off + 1)
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}
