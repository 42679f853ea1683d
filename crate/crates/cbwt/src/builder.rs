//! Construction: front extension of a `$`-terminated text, the `T⁴$`
//! reduction for a single circular text, and merging a new text into an
//! existing index.

use crate::dynseq::DynSeq;
use crate::encodings::{
    omega_prefix, preprocess_plain, primitive_root_length, rotational_pd, RtsSymbol, Symbol,
};
use crate::error::{Error, Result};
use crate::index::{CbwtIndex, TextMeta};
use crate::scalar::{check_symbols, Scalar};

/// Insertion rank of a conjugate among the indexed ones (`cnt`), and its
/// ∞-lcp with the lexicographic predecessor (`plcp`) and successor (`slcp`);
/// −1 where that neighbour does not exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtHelpers {
    pub cnt: usize,
    pub plcp: i64,
    pub slcp: i64,
}

impl ExtHelpers {
    /// Helpers of a rotation starting with `$`.
    pub const SEED: ExtHelpers = ExtHelpers { cnt: 0, plcp: -1, slcp: 0 };

    pub fn new(cnt: usize, plcp: i64, slcp: i64) -> Self {
        ExtHelpers { cnt, plcp, slcp }
    }
}

/// One row of the helper fold over `S^ω[..4z]·$`: rotation `i`, its π, and
/// its helpers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HelperRow {
    pub i: usize,
    pub pi: RtsSymbol,
    pub helpers: ExtHelpers,
}

#[inline]
fn code(v: usize) -> u32 {
    v as u32 + 1
}

/// Values `>= v` in `LT[i..=j]`, with `i` clamped to 1.
#[inline]
fn count_at_least(lt: &DynSeq, i: usize, j: usize, v: usize) -> usize {
    lt.rangecount_unchecked(i.max(1), j, code(v), u32::MAX)
}

/// Extends the index of `{R}` to `{bR}` given `π(bR)` and the rank `y` of `R`.
/// Returns the rank of `bR`.
pub fn extend_front(index: &mut CbwtIndex, pi_br: RtsSymbol, y: usize) -> usize {
    let pv = match pi_br {
        RtsSymbol::Count(v) => v,
        RtsSymbol::Dollar => panic!("π of a front-extended text is never $"),
    };
    let rho = index.n();
    let (ft, lt, lcp) = (&index.ft, &index.lt, &index.lcp);

    let (mut l, r) = lcp.mi_unchecked(y, pv as u32 + 1);
    let mut c = count_at_least(lt, l, y - 1, pv) + if y != 1 { 2 } else { 1 } + count_at_least(lt, y + 1, r, pv + 1);
    for i in (1..=pv).rev() {
        if l == 0 {
            break;
        }
        let rp = l - 1;
        l = lcp.mi_unchecked(y, i as u32).0;
        c += count_at_least(lt, l, rp, i);
    }

    let mut p: i64 = 1;
    let mut s: i64 = 1;
    let ftc = ft.access_unchecked(c);
    if ftc == 0 {
        p = 0;
    } else {
        let f = index.fl_unchecked(c);
        if f < y && ftc == code(pv) {
            let m = lcp.range_min_unchecked(f + 1, y).unwrap() as i64;
            p = (m - pv as i64 + 1).max(1);
        }
    }
    if c < rho {
        let f = index.fl_unchecked(c + 1);
        if f > y && ft.access_unchecked(c + 1) == code(pv) {
            let m = lcp.range_min_unchecked(y + 1, f).unwrap() as i64;
            s = (m - pv as i64 + 1).max(1);
        }
    }

    let bound = rho as u32 + 2;
    for seq in [&mut index.ft, &mut index.lt, &mut index.lcp] {
        seq.raise_alphabet_bound(bound);
    }
    index.lcp.insert_unchecked(c + 1, p as u32);
    if c < rho {
        index.lcp.set_unchecked(c + 2, s as u32);
    }
    index.ft.insert_unchecked(c + 1, code(pv));
    index.lt.set_unchecked(y, code(pv));
    index.lt.insert_unchecked(c + 1, 0);
    c + 1
}

/// Index of the one-symbol text `$`, the start of every front extension.
pub fn dollar_index() -> CbwtIndex {
    CbwtIndex::from_parts(&[0], &[0], &[0], vec![TextMeta { id: 1, len: 1 }], vec![1]).unwrap()
}

/// Index of the single text `R`, which must end in its only `$`.
pub fn build_single_dollar<T: Scalar>(r: &[Symbol<T>]) -> Result<CbwtIndex> {
    let (last, body) = r.split_last().ok_or(Error::Argument("empty text"))?;
    if *last != Symbol::Dollar {
        return Err(Error::Argument("text must end with $"));
    }
    let plain: Vec<T> = body
        .iter()
        .map(|s| match s {
            Symbol::Dollar => Err(Error::Argument("text contains more than one $")),
            Symbol::Plain(x) => Ok(*x),
        })
        .collect::<Result<_>>()?;
    check_symbols(&plain)?;
    let ctx = preprocess_plain(&plain);
    let mut index = dollar_index();
    let mut y = 1;
    for i in (1..=plain.len()).rev() {
        y = extend_front(&mut index, RtsSymbol::Count(ctx.h(i)), y);
    }
    index.texts = vec![TextMeta { id: 1, len: r.len() }];
    index.anchors = vec![y];
    Ok(index)
}

/// Index of the single circular text `t`.
pub fn build_single<T: Scalar>(t: &[T]) -> Result<CbwtIndex> {
    Ok(build_single_with_ops(t)?.0)
}

/// As [`build_single`], also returning the number of sequence operations
/// spent in the internal `T⁴$` pass.
pub fn build_single_with_ops<T: Scalar>(t: &[T]) -> Result<(CbwtIndex, u64)> {
    if t.is_empty() {
        return Err(Error::Argument("empty text"));
    }
    check_symbols(t)?;
    let n = t.len();
    let x = omega_prefix(t, 4 * n);
    let ctx = preprocess_plain(&x);
    let mut r_index = dollar_index();
    let mut marks = DynSeq::new(1);
    marks.insert_unchecked(1, 0);
    let mut y = 1;
    let mut anchor = 0;
    for i in (1..=4 * n).rev() {
        y = extend_front(&mut r_index, RtsSymbol::Count(ctx.h(i)), y);
        marks.insert_unchecked(y, (2..=n + 1).contains(&i) as u32);
        if i == n + 1 {
            anchor = y;
        } else if anchor != 0 && y <= anchor {
            anchor += 1;
        }
    }
    let ops = r_index.op_count() + marks.op_count();

    let ft_r = r_index.ft.to_vec();
    let lt_r = r_index.lt.to_vec();
    let lcp_r = r_index.lcp.to_vec();
    let (mut ft, mut lt, mut lcp) = (Vec::with_capacity(n), Vec::with_capacity(n), Vec::with_capacity(n));
    let mut run_min = u32::MAX;
    let mut t_anchor = 0;
    for (k, bit) in marks.iter().enumerate() {
        run_min = run_min.min(lcp_r[k]);
        if bit == 1 {
            ft.push(ft_r[k]);
            lt.push(lt_r[k]);
            lcp.push(if lcp.is_empty() { 0 } else { run_min });
            run_min = u32::MAX;
            if k + 1 == anchor {
                t_anchor = ft.len();
            }
        }
    }
    let index = CbwtIndex::from_parts(&ft, &lt, &lcp, vec![TextMeta { id: 1, len: n }], vec![t_anchor])?;
    Ok((index, ops))
}

/// Helpers of `V` from those of `rot(V,1)`, for `V` with no rotation
/// ω-equal to an indexed conjugate.
pub fn next_helper(index: &CbwtIndex, pi_v: RtsSymbol, prev: ExtHelpers) -> ExtHelpers {
    let pv = match pi_v {
        RtsSymbol::Dollar => return ExtHelpers::SEED,
        RtsSymbol::Count(v) => v,
    };
    let rho = index.n();
    let (ft, lt, lcp) = (&index.ft, &index.lt, &index.lcp);
    let (y, pl, sl) = (prev.cnt, prev.plcp, prev.slcp);
    let pvi = pv as i64;

    let (mut l, r) = if sl > pvi {
        lcp.mi_unchecked(y + 1, pv as u32 + 1)
    } else if pl > pvi {
        lcp.mi_unchecked(y, pv as u32 + 1)
    } else {
        (y + 1, y)
    };
    let mut c = count_at_least(lt, y + 1, r, pv + 1) + count_at_least(lt, l, y, pv);
    let top = pl.min(pvi);
    let mut i = top;
    while i >= 1 && l > 0 {
        let rp = l - 1;
        l = lcp.mi_unchecked(y, i as u32).0;
        c += count_at_least(lt, l, rp, i as usize);
        i -= 1;
    }

    let plcp = if c == 0 {
        -1
    } else {
        let f = index.fl_unchecked(c);
        if f > y || ft.access_unchecked(c) != code(pv) {
            1
        } else if f == y {
            (pl - pvi + 1).max(1)
        } else {
            let m = lcp.range_min_unchecked(f + 1, y).unwrap() as i64;
            (pl.min(m) - pvi + 1).max(1)
        }
    };
    let slcp = if c == rho {
        -1
    } else {
        let f = index.fl_unchecked(c + 1);
        if f < y + 1 || ft.access_unchecked(c + 1) != code(pv) {
            1
        } else if f == y + 1 {
            (sl - pvi + 1).max(1)
        } else {
            let m = lcp.range_min_unchecked(y + 2, f).unwrap() as i64;
            (sl.min(m) - pvi + 1).max(1)
        }
    };
    ExtHelpers { cnt: c, plcp, slcp }
}

/// The helper fold over `V = S^ω[..4z]·$` for rotations `i = 4z..1`, where
/// `z` is the longest text length including `s`.
pub fn helper_rows<T: Scalar>(index: &CbwtIndex, s: &[T]) -> Result<Vec<HelperRow>> {
    check_symbols(s)?;
    if s.is_empty() {
        return Err(Error::Argument("empty text"));
    }
    let z = index.max_text_len().max(s.len());
    let x = omega_prefix(s, 4 * z);
    let ctx = preprocess_plain(&x);
    let mut rows = vec![HelperRow { i: 4 * z, pi: RtsSymbol::Dollar, helpers: ExtHelpers::SEED }];
    let mut cur = ExtHelpers::SEED;
    for j in (1..4 * z).rev() {
        let pi = RtsSymbol::Count(ctx.h(j + 1));
        cur = next_helper(index, pi, cur);
        rows.push(HelperRow { i: j, pi, helpers: cur });
    }
    Ok(rows)
}

/// Calls `f(i, helpers)` for rotations `i = λ..1` of `s` (rotation `λ` is `s`
/// itself).
fn for_each_rotation_helpers<T: Scalar>(
    index: &CbwtIndex,
    s: &[T],
    z: usize,
    mut f: impl FnMut(usize, ExtHelpers),
) {
    let lambda = s.len();
    let rho = index.n();
    let probe = omega_prefix(s, 3 * z);
    let case_one = !index.backward_search(&probe).expect("checked symbols").is_empty();
    if case_one {
        let p = omega_prefix(s, 4 * z);
        let p = &p[1..];
        let ctx = preprocess_plain(p);
        let mut range = crate::index::ConjRange { lo: 1, hi: rho };
        for k in (1..=p.len()).rev() {
            range = index.crange_update(ctx.e(k), ctx.h(k), range);
            debug_assert!(!range.is_empty());
            if k <= lambda {
                let r = range.hi;
                let slcp = if r < rho { index.lcp.access_unchecked(r + 1) as i64 } else { -1 };
                f(k, ExtHelpers { cnt: r, plcp: ctx.e(k) as i64, slcp });
            }
        }
    } else {
        let x = omega_prefix(s, 4 * z);
        let ctx = preprocess_plain(&x);
        let mut cur = ExtHelpers::SEED;
        for j in (1..4 * z).rev() {
            cur = next_helper(index, RtsSymbol::Count(ctx.h(j + 1)), cur);
            if j <= lambda {
                f(j, cur);
            }
        }
    }
}

/// Adds `s` as a new text with the next free id.
pub fn extend_with_text<T: Scalar>(index: &mut CbwtIndex, s: &[T]) -> Result<()> {
    let id = index.texts.iter().map(|t| t.id).max().unwrap_or(0) + 1;
    extend_inner(index, s, id, |_| {})
}

/// As [`extend_with_text`], calling `observe` on the merged index while the
/// marks of the new rows are still set.
pub fn extend_with_text_observed<T: Scalar>(
    index: &mut CbwtIndex,
    s: &[T],
    observe: impl FnOnce(&CbwtIndex),
) -> Result<()> {
    let id = index.texts.iter().map(|t| t.id).max().unwrap_or(0) + 1;
    extend_inner(index, s, id, observe)
}

fn extend_inner<T: Scalar>(
    index: &mut CbwtIndex,
    s: &[T],
    id: usize,
    observe: impl FnOnce(&CbwtIndex),
) -> Result<()> {
    if s.is_empty() {
        return Err(Error::Argument("empty text"));
    }
    check_symbols(s)?;
    assert!(index.e_marks.iter().all(|b| b == 0), "helper marks not cleared");
    let lambda = s.len();
    let z = index.max_text_len().max(lambda);
    let rho = index.n();

    let single = build_single(s)?;
    let root = primitive_root_length(&rotational_pd(&Symbol::plain(s))?);

    #[cfg(debug_assertions)]
    if lambda * z <= 4096 {
        let hits: Vec<bool> = (0..lambda)
            .map(|k| {
                let rot = crate::encodings::rotate(s, k);
                !index.backward_search(&omega_prefix(&rot, 3 * z)).unwrap().is_empty()
            })
            .collect();
        assert!(hits.iter().all(|&h| h == hits[0]), "rotations split between ω-classes");
    }

    let mut class_helpers = vec![ExtHelpers::SEED; root];
    let mut marks = std::mem::replace(&mut index.e_marks, DynSeq::new(1));
    for_each_rotation_helpers(index, s, z, |i, h| {
        let pos = if h.cnt == 0 { 0 } else { marks.select_unchecked(0, h.cnt) };
        marks.insert_unchecked(pos + 1, 1);
        if i <= root {
            class_helpers[i % root] = h;
        }
    });

    // Rows of the standalone index per ω-class of rotations: one LF cycle
    // from rotation 0 visits classes 0, root-1, ..., 1; each class owns
    // lambda/root consecutive rows.
    let mut class_row = vec![0; root];
    let mut cur = single.anchors[0];
    class_row[0] = cur;
    for t in 1..root {
        cur = single.lf_unchecked(cur);
        class_row[root - t] = cur;
    }
    let per_class = lambda / root;
    let mut row_helpers = vec![ExtHelpers::SEED; lambda];
    for (r, &row) in class_row.iter().enumerate() {
        for t in 0..per_class {
            row_helpers[row - 1 + t] = class_helpers[r];
        }
    }

    let new_n = rho + lambda;
    let bound = new_n as u32 + 1;
    for seq in [&mut index.ft, &mut index.lt, &mut index.lcp] {
        seq.raise_alphabet_bound(bound);
    }
    let positions: Vec<usize> = (1..=lambda).map(|j| marks.select_unchecked(1, j)).collect();
    for (j, &q) in positions.iter().enumerate() {
        index.ft.insert_unchecked(q, single.ft.access_unchecked(j + 1));
        index.lt.insert_unchecked(q, single.lt.access_unchecked(j + 1));
        index.lcp.insert_unchecked(q, 0);
    }
    for (j, &q) in positions.iter().enumerate() {
        let h = row_helpers[j];
        let value = if q == 1 {
            0
        } else if j > 0 && positions[j - 1] == q - 1 {
            single.lcp.access_unchecked(j + 1)
        } else {
            debug_assert!(h.plcp >= 0);
            h.plcp as u32
        };
        index.lcp.set_unchecked(q, value);
        let next_is_old = q < new_n && positions.get(j + 1) != Some(&(q + 1));
        if next_is_old {
            debug_assert!(h.slcp >= 0);
            index.lcp.set_unchecked(q + 1, h.slcp as u32);
        }
    }

    for a in index.anchors.iter_mut() {
        *a = marks.select_unchecked(0, *a);
    }
    index.anchors.push(positions[single.anchors[0] - 1]);
    index.texts.push(TextMeta { id, len: lambda });
    index.e_marks = marks;
    observe(index);
    for &q in &positions {
        index.e_marks.set_unchecked(q, 0);
    }
    Ok(())
}

/// Index of all `texts`, inserted in ascending length order (stable). Text
/// ids are 1-based positions in `texts`.
pub fn build_collection<T: Scalar>(texts: &[Vec<T>]) -> Result<CbwtIndex> {
    build_collection_observed(texts, |_| {})
}

/// As [`build_collection`], calling `after_step` with the partial index after
/// each inserted text.
pub fn build_collection_observed<T: Scalar>(
    texts: &[Vec<T>],
    mut after_step: impl FnMut(&CbwtIndex),
) -> Result<CbwtIndex> {
    if texts.is_empty() {
        return Err(Error::Argument("empty collection"));
    }
    if texts.iter().any(|t| t.is_empty()) {
        return Err(Error::Argument("empty text"));
    }
    let mut order: Vec<usize> = (0..texts.len()).collect();
    order.sort_by_key(|&k| texts[k].len());
    let mut index = build_single(&texts[order[0]])?;
    index.texts[0].id = order[0] + 1;
    after_step(&index);
    for &k in &order[1..] {
        extend_inner(&mut index, &texts[k], k + 1, |_| {})?;
        after_step(&index);
    }
    Ok(index)
}
