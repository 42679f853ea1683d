//! Brute-force reference implementations, used to check the index.
//!
//! Everything here expands conjugates explicitly and sorts them, so it is
//! quadratic or worse and refuses collections longer than [`ORACLE_LIMIT`].

use std::cmp::Ordering;

use crate::encodings::{
    omega_prefix, parent_distance, pi_head, primitive_root_length, rotate, rotational_pd, PdString,
    RtsSymbol, Symbol,
};
use crate::error::{Error, Result};
use crate::index::ConjRange;
use crate::scalar::{check_symbols, Scalar};

pub const ORACLE_LIMIT: usize = 64;

/// Shape of a Cartesian tree; two strings ct-match iff their shapes agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CartesianTree {
    Empty,
    Node(Box<CartesianTree>, Box<CartesianTree>),
}

pub fn build_cartesian_tree<T: Scalar>(v: &[T]) -> CartesianTree {
    if v.is_empty() {
        return CartesianTree::Empty;
    }
    let mut m = 0;
    for i in 1..v.len() {
        if v[i] < v[m] {
            m = i;
        }
    }
    CartesianTree::Node(Box::new(build_cartesian_tree(&v[..m])), Box::new(build_cartesian_tree(&v[m + 1..])))
}

/// Compares `V^ω` and `U^ω` through the PD of their `3·max(|V|,|U|)` prefixes.
pub fn omega_compare<T: Scalar>(v: &[Symbol<T>], u: &[Symbol<T>]) -> Ordering {
    let z = v.len().max(u.len());
    omega_key(v, 3 * z).cmp(&omega_key(u, 3 * z))
}

fn omega_key<T: Scalar>(v: &[Symbol<T>], len: usize) -> PdString {
    parent_distance(&omega_prefix(v, len))
}

/// Texts `T_1..T_d`; conjugates are numbered by start position in `T_1⋯T_d`.
#[derive(Clone, Debug, PartialEq)]
pub struct TextCollection<T> {
    texts: Vec<Vec<Symbol<T>>>,
}

impl<T: Scalar> TextCollection<T> {
    pub fn new(texts: Vec<Vec<T>>) -> Result<Self> {
        for t in &texts {
            check_symbols(t)?;
        }
        Self::with_terminators(texts.iter().map(|t| Symbol::plain(t)).collect())
    }

    /// Texts that may contain `$`.
    pub fn with_terminators(texts: Vec<Vec<Symbol<T>>>) -> Result<Self> {
        if texts.is_empty() {
            return Err(Error::Argument("empty collection"));
        }
        if texts.iter().any(|t| t.is_empty()) {
            return Err(Error::Argument("empty text"));
        }
        Ok(TextCollection { texts })
    }

    pub fn texts(&self) -> &[Vec<Symbol<T>>] {
        &self.texts
    }

    pub fn d(&self) -> usize {
        self.texts.len()
    }

    pub fn n(&self) -> usize {
        self.texts.iter().map(Vec::len).sum()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.texts.iter().map(Vec::len).collect()
    }

    pub fn max_len(&self) -> usize {
        self.texts.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Largest plain symbol.
    pub fn sigma(&self) -> Option<T> {
        let mut best: Option<T> = None;
        for s in self.texts.iter().flatten() {
            if let Symbol::Plain(x) = s {
                if best.is_none_or(|b| *x > b) {
                    best = Some(*x);
                }
            }
        }
        best
    }

    /// Text (1-based) and rotation offset (0-based) of conjugate `i` (1-based).
    pub fn conj(&self, i: usize) -> (usize, usize) {
        let mut rest = i - 1;
        for (k, t) in self.texts.iter().enumerate() {
            if rest < t.len() {
                return (k + 1, rest);
            }
            rest -= t.len();
        }
        panic!("conjugate {i} out of range")
    }

    pub fn conj_string(&self, i: usize) -> Vec<Symbol<T>> {
        let (k, r) = self.conj(i);
        rotate(&self.texts[k - 1], r)
    }

    fn check_limit(&self) -> Result<()> {
        if self.n() > ORACLE_LIMIT {
            Err(Error::OracleLimit { n: self.n(), limit: ORACLE_LIMIT })
        } else {
            Ok(())
        }
    }

    fn keys(&self) -> Vec<PdString> {
        let len = 3 * self.max_len();
        (1..=self.n()).map(|i| omega_key(&self.conj_string(i), len)).collect()
    }
}

/// Conjugate array and its inverse, both with 1-based entries.
pub fn brute_conjugate_array<T: Scalar>(tc: &TextCollection<T>) -> Result<(Vec<usize>, Vec<usize>)> {
    tc.check_limit()?;
    let keys = tc.keys();
    let mut ca: Vec<usize> = (1..=tc.n()).collect();
    ca.sort_by(|&a, &b| keys[a - 1].cmp(&keys[b - 1]).then(a.cmp(&b)));
    let mut ica = vec![0; ca.len()];
    for (r, &i) in ca.iter().enumerate() {
        ica[i - 1] = r + 1;
    }
    Ok((ca, ica))
}

pub fn brute_prev<T: Scalar>(tc: &TextCollection<T>) -> Result<Vec<usize>> {
    tc.check_limit()?;
    let keys = tc.keys();
    let mut prev = Vec::with_capacity(tc.n());
    let mut start = 1;
    for t in tc.texts() {
        let root = primitive_root_length(&rotational_pd(t)?);
        for i in start..start + t.len() {
            prev.push(if keys[i - 1] == keys[start - 1] { i - 1 + root } else { i - 1 });
        }
        start += t.len();
    }
    Ok(prev)
}

/// Every index array, computed from the definitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteIndex {
    pub ca: Vec<usize>,
    pub ica: Vec<usize>,
    pub prev: Vec<usize>,
    pub lf: Vec<usize>,
    pub fl: Vec<usize>,
    pub ft: Vec<RtsSymbol>,
    pub lt: Vec<RtsSymbol>,
    pub lcp: Vec<usize>,
}

pub fn brute_index<T: Scalar>(tc: &TextCollection<T>) -> Result<BruteIndex> {
    let (ca, ica) = brute_conjugate_array(tc)?;
    let prev = brute_prev(tc)?;
    let keys = tc.keys();
    let n = tc.n();
    let lf: Vec<usize> = (0..n).map(|r| ica[prev[ca[r] - 1] - 1]).collect();
    let mut fl = vec![0; n];
    for (r, &x) in lf.iter().enumerate() {
        fl[x - 1] = r + 1;
    }
    let pi_of = |i: usize| pi_head(&tc.conj_string(i));
    let ft = ca.iter().map(|&i| pi_of(i)).collect::<Result<Vec<_>>>()?;
    let lt = lf.iter().map(|&r| pi_of(ca[r - 1])).collect::<Result<Vec<_>>>()?;
    let mut lcp = vec![0; n];
    for r in 1..n {
        let a = &keys[ca[r] - 1];
        lcp[r] = a.rank_inf(a.lcp(&keys[ca[r - 1] - 1]));
    }
    Ok(BruteIndex { ca, ica, prev, lf, fl, ft, lt, lcp })
}

fn matching_rows<T: Scalar>(tc: &TextCollection<T>, p: &[T]) -> Result<Vec<usize>> {
    check_symbols(p)?;
    let (ca, _) = brute_conjugate_array(tc)?;
    let target = parent_distance(&Symbol::plain(p));
    Ok((1..=tc.n()).filter(|&r| omega_key(&tc.conj_string(ca[r - 1]), p.len()) == target).collect())
}

/// Lexicographic rows whose conjugates ct-match `p` on their infinite power.
pub fn brute_crange<T: Scalar>(tc: &TextCollection<T>, p: &[T]) -> Result<ConjRange> {
    let rows = matching_rows(tc, p)?;
    Ok(match (rows.first(), rows.last()) {
        (Some(&lo), Some(&hi)) => {
            debug_assert_eq!(hi - lo + 1, rows.len());
            ConjRange { lo, hi }
        }
        _ => ConjRange::EMPTY,
    })
}

pub fn brute_count<T: Scalar>(tc: &TextCollection<T>, p: &[T]) -> Result<usize> {
    Ok(matching_rows(tc, p)?.len())
}

/// Conjugate start positions (1-based, ascending) matching `p`.
pub fn brute_locate<T: Scalar>(tc: &TextCollection<T>, p: &[T]) -> Result<Vec<usize>> {
    let (ca, _) = brute_conjugate_array(tc)?;
    let mut ids: Vec<usize> = matching_rows(tc, p)?.into_iter().map(|r| ca[r - 1]).collect();
    ids.sort_unstable();
    Ok(ids)
}
