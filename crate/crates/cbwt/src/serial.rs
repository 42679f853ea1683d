//! Text serialization of an index together with its samples.
//!
//! ```text
//! CBWT 1
//! <n> <d>
//! <id> <length>          one line per text, in insertion order
//! <FT tokens>            `$` or a decimal count
//! <LT tokens>
//! <LCP∞ tokens>
//! SAMPLES <rate> <k>
//! <row> <conjugate start>   k lines
//! ```

use std::fmt::Write as _;

use crate::encodings::RtsSymbol;
use crate::error::{Error, Result};
use crate::index::{CbwtIndex, TextMeta};
use crate::locator::SampleStore;

pub fn to_string(index: &CbwtIndex, samples: &SampleStore) -> String {
    let mut s = String::new();
    writeln!(s, "CBWT 1").unwrap();
    writeln!(s, "{} {}", index.n(), index.d()).unwrap();
    for t in index.texts() {
        writeln!(s, "{} {}", t.id, t.len).unwrap();
    }
    let line = |syms: Vec<String>| syms.join(" ");
    writeln!(s, "{}", line(index.ft().iter().map(RtsSymbol::to_string).collect())).unwrap();
    writeln!(s, "{}", line(index.lt().iter().map(RtsSymbol::to_string).collect())).unwrap();
    writeln!(s, "{}", line(index.lcp().iter().map(usize::to_string).collect())).unwrap();
    let pairs = samples.samples();
    writeln!(s, "SAMPLES {} {}", samples.rate(), pairs.len()).unwrap();
    for (row, start) in pairs {
        writeln!(s, "{row} {start}").unwrap();
    }
    s
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    line: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Result<&'a str> {
        match self.inner.next() {
            Some((k, l)) => {
                self.line = k + 1;
                Ok(l)
            }
            None => Err(Error::Format { line: self.line + 1, msg: "unexpected end of file".into() }),
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Format { line: self.line, msg: msg.into() }
    }

    fn numbers(&mut self, expect: usize) -> Result<Vec<usize>> {
        let l = self.next()?;
        let v = l
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| self.err(format!("bad number {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if v.len() != expect {
            return Err(self.err(format!("expected {expect} numbers, found {}", v.len())));
        }
        Ok(v)
    }

    fn codes(&mut self, n: usize, dollar: bool) -> Result<Vec<u32>> {
        let l = self.next()?;
        let v = l
            .split_whitespace()
            .map(|t| match t {
                "$" if dollar => Ok(0),
                _ => t
                    .parse::<u32>()
                    .ok()
                    .and_then(|x| if dollar { x.checked_add(1) } else { Some(x) })
                    .ok_or_else(|| self.err(format!("bad token {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if v.len() != n {
            return Err(self.err(format!("expected {n} tokens, found {}", v.len())));
        }
        Ok(v)
    }
}

pub fn from_str(src: &str) -> Result<(CbwtIndex, SampleStore)> {
    let mut lines = Lines { inner: src.lines().enumerate(), line: 0 };
    if lines.next()? != "CBWT 1" {
        return Err(lines.err("expected header `CBWT 1`"));
    }
    let nd = lines.numbers(2)?;
    let (n, d) = (nd[0], nd[1]);
    let mut texts = Vec::with_capacity(d);
    for _ in 0..d {
        let t = lines.numbers(2)?;
        if t[1] == 0 {
            return Err(lines.err("empty text"));
        }
        texts.push(TextMeta { id: t[0], len: t[1] });
    }
    if texts.iter().map(|t| t.len).sum::<usize>() != n {
        return Err(lines.err("text lengths do not sum to n"));
    }
    let mut ids: Vec<usize> = texts.iter().map(|t| t.id).collect();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != d {
        return Err(lines.err("duplicate text id"));
    }
    let ft = lines.codes(n, true)?;
    let lt = lines.codes(n, true)?;
    let lcp = lines.codes(n, false)?;
    let head = lines.next()?;
    let parts: Vec<&str> = head.split_whitespace().collect();
    let (rate, k) = match parts.as_slice() {
        ["SAMPLES", r, k] => match (r.parse::<usize>(), k.parse::<usize>()) {
            (Ok(r), Ok(k)) => (r, k),
            _ => return Err(lines.err("bad SAMPLES line")),
        },
        _ => return Err(lines.err("expected SAMPLES line")),
    };
    let mut samples = Vec::with_capacity(k);
    for _ in 0..k {
        let p = lines.numbers(2)?;
        samples.push((p[0], p[1]));
    }
    let line = lines.line;
    let mut index = CbwtIndex::from_parts(&ft, &lt, &lcp, texts, Vec::new())
        .map_err(|e| Error::Format { line, msg: e.to_string() })?;
    let store = SampleStore::restore(&mut index, rate, &samples)
        .map_err(|e| Error::Format { line, msg: e.to_string() })?;
    Ok((index, store))
}
