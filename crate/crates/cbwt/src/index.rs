//! The index: FT, LT and LCP∞ as dynamic sequences, LF/FL, and backward
//! search for counting.

use crate::dynseq::DynSeq;
use crate::encodings::{preprocess_plain, RtsSymbol};
use crate::error::{Error, Result};
use crate::scalar::{check_symbols, Scalar};

/// An interval `[lo..hi]` of lexicographic ranks; empty when `hi < lo`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjRange {
    pub lo: usize,
    pub hi: usize,
}

impl ConjRange {
    pub const EMPTY: ConjRange = ConjRange { lo: 1, hi: 0 };

    pub fn new(lo: usize, hi: usize) -> Self {
        ConjRange { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.hi - self.lo + 1
        }
    }
}

/// Identifier and length of one indexed text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TextMeta {
    pub id: usize,
    pub len: usize,
}

/// Index of a collection of circular texts. Texts are kept in insertion
/// order; `anchors[k]` is the row of rotation 0 of the k-th inserted text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbwtIndex {
    pub(crate) ft: DynSeq,
    pub(crate) lt: DynSeq,
    pub(crate) lcp: DynSeq,
    pub(crate) e_marks: DynSeq,
    pub(crate) texts: Vec<TextMeta>,
    pub(crate) anchors: Vec<usize>,
}

impl CbwtIndex {
    /// Assembles an index from FT/LT codes (`$` = 0, count `v` = `v + 1`)
    /// and LCP∞ values. Anchors may be empty if locate is not needed.
    pub(crate) fn from_parts(
        ft: &[u32],
        lt: &[u32],
        lcp: &[u32],
        texts: Vec<TextMeta>,
        anchors: Vec<usize>,
    ) -> Result<Self> {
        let n = ft.len();
        if lt.len() != n || lcp.len() != n {
            return Err(Error::Argument("FT, LT and LCP∞ differ in length"));
        }
        let bound = n as u32 + 1;
        Ok(CbwtIndex {
            ft: DynSeq::from_values(bound, ft)?,
            lt: DynSeq::from_values(bound, lt)?,
            lcp: DynSeq::from_values(bound, lcp)?,
            e_marks: DynSeq::from_values(1, &vec![0; n])?,
            texts,
            anchors,
        })
    }

    pub fn n(&self) -> usize {
        self.ft.len()
    }

    pub fn d(&self) -> usize {
        self.texts.len()
    }

    /// Texts in insertion order.
    pub fn texts(&self) -> &[TextMeta] {
        &self.texts
    }

    pub fn anchors(&self) -> &[usize] {
        &self.anchors
    }

    pub fn max_text_len(&self) -> usize {
        self.texts.iter().map(|t| t.len).max().unwrap_or(0)
    }

    pub fn ft(&self) -> Vec<RtsSymbol> {
        self.ft.iter().map(RtsSymbol::from_code).collect()
    }

    pub fn lt(&self) -> Vec<RtsSymbol> {
        self.lt.iter().map(RtsSymbol::from_code).collect()
    }

    pub fn lcp(&self) -> Vec<usize> {
        self.lcp.iter().map(|v| v as usize).collect()
    }

    pub fn e_marks(&self) -> Vec<u32> {
        self.e_marks.to_vec()
    }

    pub fn ft_seq(&self) -> &DynSeq {
        &self.ft
    }

    pub fn lt_seq(&self) -> &DynSeq {
        &self.lt
    }

    pub fn lcp_seq(&self) -> &DynSeq {
        &self.lcp
    }

    /// Total operation count over FT, LT and LCP∞.
    pub fn op_count(&self) -> u64 {
        self.ft.op_count() + self.lt.op_count() + self.lcp.op_count()
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            Err(Error::Range { pos: i, max: self.n() })
        } else {
            Ok(())
        }
    }

    pub fn lf(&self, i: usize) -> Result<usize> {
        self.check_row(i)?;
        Ok(self.lf_unchecked(i))
    }

    pub fn fl(&self, i: usize) -> Result<usize> {
        self.check_row(i)?;
        Ok(self.fl_unchecked(i))
    }

    #[inline]
    pub(crate) fn lf_unchecked(&self, i: usize) -> usize {
        let c = self.lt.access_unchecked(i);
        self.ft.select_unchecked(c, self.lt.rank_unchecked(c, i))
    }

    #[inline]
    pub(crate) fn fl_unchecked(&self, i: usize) -> usize {
        let c = self.ft.access_unchecked(i);
        self.lt.select_unchecked(c, self.ft.rank_unchecked(c, i))
    }

    pub fn lf_array(&self) -> Vec<usize> {
        (1..=self.n()).map(|i| self.lf_unchecked(i)).collect()
    }

    pub fn fl_array(&self) -> Vec<usize> {
        (1..=self.n()).map(|i| self.fl_unchecked(i)).collect()
    }

    /// One backward step: from the range of `P[i+1..]` to that of `P[i..]`,
    /// given `e = e[i]` and `h = h[i]` of the pattern.
    pub fn crange_update(&self, e: usize, h: usize, range: ConjRange) -> ConjRange {
        if range.is_empty() {
            return ConjRange::EMPTY;
        }
        let (l, r) = (range.lo, range.hi);
        let hc = h as u32 + 1;
        let lt = &self.lt;
        let (c, rp) = if e > 1 {
            let c = lt.rangecount_unchecked(l, r, hc, hc);
            if c == 0 {
                return ConjRange::EMPTY;
            }
            let last = lt.select_unchecked(hc, lt.rank_unchecked(hc, r));
            (c, self.lf_unchecked(last))
        } else {
            let c = lt.rangecount_unchecked(l, r, hc, u32::MAX);
            if c == 0 {
                return ConjRange::EMPTY;
            }
            let vc = lt.rnv_unchecked(l, r, h as u32).expect("counted symbols >= h");
            let x = lt.select_unchecked(vc, lt.rank_unchecked(vc, r));
            let (_, r2) = self.lcp.mi_unchecked(x, vc);
            let y = lt.rangecount_unchecked(l, x - 1, hc, u32::MAX)
                + lt.rangecount_unchecked(x + 1, r2, hc, u32::MAX);
            (c, self.lf_unchecked(x) + c - (y + 1))
        };
        ConjRange { lo: rp + 1 - c, hi: rp }
    }

    /// Range of rows whose conjugates' infinite powers ct-match `p`.
    pub fn backward_search<T: Scalar>(&self, p: &[T]) -> Result<ConjRange> {
        check_symbols(p)?;
        let ctx = preprocess_plain(p);
        let mut range = ConjRange { lo: 1, hi: self.n() };
        for i in (1..=p.len()).rev() {
            range = self.crange_update(ctx.e(i), ctx.h(i), range);
            if range.is_empty() {
                return Ok(ConjRange::EMPTY);
            }
        }
        Ok(range)
    }

    pub fn count<T: Scalar>(&self, p: &[T]) -> Result<usize> {
        Ok(self.backward_search(p)?.len())
    }
}
