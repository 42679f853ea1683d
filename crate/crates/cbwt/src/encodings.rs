//! Parent-distance style encodings of strings under Cartesian tree matching.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A text symbol, or the terminator `$` that sorts below every symbol.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Symbol<T> {
    Dollar,
    Plain(T),
}

impl<T: Scalar> Symbol<T> {
    /// `self <= other` with `$` below everything.
    #[inline]
    pub fn le(&self, other: &Self) -> bool {
        match (self, other) {
            (Symbol::Dollar, _) => true,
            (_, Symbol::Dollar) => false,
            (Symbol::Plain(a), Symbol::Plain(b)) => a <= b,
        }
    }

    pub fn plain(text: &[T]) -> Vec<Symbol<T>> {
        text.iter().map(|&x| Symbol::Plain(x)).collect()
    }
}

impl<T: Scalar> PartialOrd for Symbol<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Symbol::Dollar, Symbol::Dollar) => Some(Ordering::Equal),
            (Symbol::Dollar, _) => Some(Ordering::Less),
            (_, Symbol::Dollar) => Some(Ordering::Greater),
            (Symbol::Plain(a), Symbol::Plain(b)) => a.partial_cmp(b),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PdSymbol {
    Dollar,
    Dist(usize),
    Infinity,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PdString(pub Vec<PdSymbol>);

impl PdString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `∞` among the first `k` symbols.
    pub fn rank_inf(&self, k: usize) -> usize {
        self.0[..k.min(self.0.len())].iter().filter(|&&s| s == PdSymbol::Infinity).count()
    }

    /// Length of the longest common prefix with `other`.
    pub fn lcp(&self, other: &PdString) -> usize {
        self.0.iter().zip(&other.0).take_while(|(a, b)| a == b).count()
    }
}

impl std::ops::Deref for PdString {
    type Target = [PdSymbol];
    fn deref(&self) -> &[PdSymbol] {
        &self.0
    }
}

impl fmt::Display for PdString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            match s {
                PdSymbol::Dollar => f.write_str("$")?,
                PdSymbol::Infinity => f.write_str("∞")?,
                PdSymbol::Dist(k) => write!(f, "{k}")?,
            }
        }
        Ok(())
    }
}

/// One symbol of the rotational signature encoding; also the type of π.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RtsSymbol {
    Dollar,
    Count(usize),
}

impl RtsSymbol {
    /// Rank used inside FT/LT: `$` is 0, a count `v` is `v + 1`.
    #[inline]
    pub fn code(self) -> u32 {
        match self {
            RtsSymbol::Dollar => 0,
            RtsSymbol::Count(v) => v as u32 + 1,
        }
    }

    #[inline]
    pub fn from_code(c: u32) -> Self {
        if c == 0 {
            RtsSymbol::Dollar
        } else {
            RtsSymbol::Count(c as usize - 1)
        }
    }
}

impl fmt::Display for RtsSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RtsSymbol::Dollar => f.write_str("$"),
            RtsSymbol::Count(v) => write!(f, "{v}"),
        }
    }
}

pub fn rotate<X: Clone>(v: &[X], k: usize) -> Vec<X> {
    if v.is_empty() {
        return Vec::new();
    }
    let k = k % v.len();
    v[k..].iter().chain(&v[..k]).cloned().collect()
}

/// The first `len` symbols of `v v v ...`.
pub fn omega_prefix<X: Clone>(v: &[X], len: usize) -> Vec<X> {
    v.iter().cycle().take(len).cloned().collect()
}

pub fn parent_distance<T: Scalar>(v: &[Symbol<T>]) -> PdString {
    let mut out = Vec::with_capacity(v.len());
    let mut stack: Vec<usize> = Vec::new();
    for (i, x) in v.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if v[top].le(x) {
                break;
            }
            stack.pop();
        }
        out.push(match (x, stack.last()) {
            (Symbol::Dollar, _) => PdSymbol::Dollar,
            (_, None) => PdSymbol::Infinity,
            (_, Some(&j)) => PdSymbol::Dist(i - j),
        });
        stack.push(i);
    }
    PdString(out)
}

pub fn parent_distance_plain<T: Scalar>(v: &[T]) -> PdString {
    parent_distance(&Symbol::plain(v))
}

pub fn rotational_pd<T: Scalar>(v: &[Symbol<T>]) -> Result<PdString> {
    if v.is_empty() {
        return Err(Error::Argument("rotational encoding of an empty string"));
    }
    let doubled: Vec<Symbol<T>> = v.iter().chain(v).copied().collect();
    Ok(PdString(parent_distance(&doubled).0.split_off(v.len())))
}

/// Rotational signature, evaluated position by position from its definition.
pub fn rts_encode<T: Scalar>(v: &[Symbol<T>]) -> Result<Vec<RtsSymbol>> {
    if v.is_empty() {
        return Err(Error::Argument("signature encoding of an empty string"));
    }
    let n = v.len();
    Ok((1..=n)
        .map(|i| match v[i - 1] {
            Symbol::Dollar => RtsSymbol::Dollar,
            vi => {
                let r = rotate(v, i);
                let with_head: Vec<Symbol<T>> = std::iter::once(vi).chain(r.iter().copied()).collect();
                let a = parent_distance(&r).rank_inf(n);
                let b = PdString(parent_distance(&with_head).0[1..].to_vec()).rank_inf(n);
                RtsSymbol::Count(a - b)
            }
        })
        .collect())
}

/// π(V): strict prefix minima of `rot(V,1)` that are `>= V[1]`, stopping at `$`.
pub fn pi_head<T: Scalar>(v: &[Symbol<T>]) -> Result<RtsSymbol> {
    let head = match v.first() {
        None => return Err(Error::Argument("π of an empty string")),
        Some(Symbol::Dollar) => return Ok(RtsSymbol::Dollar),
        Some(Symbol::Plain(x)) => *x,
    };
    let mut min: Option<T> = None;
    let mut count = 0;
    for s in v[1..].iter().chain(&v[..1]) {
        let x = match s {
            Symbol::Dollar => break,
            Symbol::Plain(x) => *x,
        };
        if min.is_none_or(|m| x < m) {
            min = Some(x);
            if x >= head {
                count += 1;
            }
        }
    }
    Ok(RtsSymbol::Count(count))
}

/// ∞ symbols of PD(U) inside the common prefix of PD(U) and PD(W).
pub fn lcp_count<T: Scalar>(u: &[Symbol<T>], w: &[Symbol<T>]) -> usize {
    let pu = parent_distance(u);
    let pw = parent_distance(w);
    pu.rank_inf(pu.lcp(&pw))
}

/// Per-suffix data of a pattern, for the backward search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternContext {
    h: Vec<usize>,
    e: Vec<usize>,
}

impl PatternContext {
    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    /// π(P[i..]·$), 1-based.
    pub fn h(&self, i: usize) -> usize {
        self.h[i - 1]
    }

    /// Number of ∞ in PD(P[i..]), 1-based.
    pub fn e(&self, i: usize) -> usize {
        self.e[i - 1]
    }
}

pub fn preprocess_pattern<T: Scalar>(p: &[Symbol<T>]) -> Result<PatternContext> {
    let plain: Vec<T> = p
        .iter()
        .map(|s| match s {
            Symbol::Dollar => Err(Error::Argument("pattern contains $")),
            Symbol::Plain(x) => Ok(*x),
        })
        .collect::<Result<_>>()?;
    Ok(preprocess_plain(&plain))
}

/// Right-to-left monotone stack over the strict prefix minima of each suffix.
pub fn preprocess_plain<T: Scalar>(p: &[T]) -> PatternContext {
    let m = p.len();
    let mut h = vec![0; m];
    let mut e = vec![0; m];
    let mut stack: Vec<T> = Vec::new();
    for i in (0..m).rev() {
        let x = p[i];
        let mut popped = 0;
        while stack.last().is_some_and(|&t| t >= x) {
            stack.pop();
            popped += 1;
        }
        stack.push(x);
        h[i] = popped;
        e[i] = stack.len();
    }
    PatternContext { h, e }
}

/// Smallest period `p` dividing `|x|` with `x` a power of `x[..p]`.
pub fn primitive_root_length<X: PartialEq>(x: &[X]) -> usize {
    let n = x.len();
    if n == 0 {
        return 0;
    }
    let mut fail = vec![0usize; n + 1];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && x[i] != x[k] {
            k = fail[k];
        }
        if x[i] == x[k] {
            k += 1;
        }
        fail[i + 1] = k;
    }
    let p = n - fail[n];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> Vec<Symbol<u32>> {
        s.chars()
            .map(|c| if c == '$' { Symbol::Dollar } else { Symbol::Plain(c.to_digit(10).unwrap()) })
            .collect()
    }

    #[test]
    fn pd_handles_ties_and_dollar() {
        assert_eq!(parent_distance(&sym("44")).to_string(), "∞1");
        assert_eq!(parent_distance(&sym("$1")).to_string(), "$1");
        assert_eq!(parent_distance(&sym("21$0")).to_string(), "∞∞$1");
    }

    #[test]
    fn pi_stops_at_dollar() {
        assert_eq!(pi_head(&sym("3$12")).unwrap(), RtsSymbol::Count(0));
        assert_eq!(pi_head(&sym("7")).unwrap(), RtsSymbol::Count(1));
    }

    #[test]
    fn root_length_of_non_divisor_period() {
        assert_eq!(primitive_root_length(&[1, 2, 1]), 3);
        assert_eq!(primitive_root_length(&[1, 1, 1, 1]), 1);
    }
}
