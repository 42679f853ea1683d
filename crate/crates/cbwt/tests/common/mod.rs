#![allow(dead_code)]

use cbwt::oracle::{brute_index, BruteIndex};
use cbwt::{CbwtIndex, TextCollection};
use rand::rngs::StdRng;
use rand::Rng;

pub fn running_example() -> Vec<Vec<u32>> {
    vec![vec![5, 1, 2], vec![5, 3, 6, 3], vec![4, 4, 7, 8]]
}

pub fn digits(s: &str) -> Vec<u32> {
    s.bytes().map(|b| u32::from(b - b'0')).collect()
}

/// Random collection with `d <= 4`, lengths `<= 8`, symbols in `0..sigma`,
/// biased towards duplicates and periodic texts.
pub fn random_collection(rng: &mut StdRng, sigma: u32) -> Vec<Vec<u32>> {
    let d = rng.gen_range(1..=4);
    let mut texts: Vec<Vec<u32>> = Vec::with_capacity(d);
    for _ in 0..d {
        let t = match rng.gen_range(0..10) {
            0 if !texts.is_empty() => texts[rng.gen_range(0..texts.len())].clone(),
            1 if !texts.is_empty() => {
                let src = texts[rng.gen_range(0..texts.len())].clone();
                let k = rng.gen_range(0..src.len());
                let mut r = src[k..].to_vec();
                r.extend_from_slice(&src[..k]);
                r
            }
            2 | 3 => {
                let root_len = rng.gen_range(1..=4);
                let root: Vec<u32> = (0..root_len).map(|_| rng.gen_range(0..sigma)).collect();
                let reps = rng.gen_range(1..=8 / root_len);
                root.iter().copied().cycle().take(root_len * reps).collect()
            }
            _ => {
                let len = rng.gen_range(1..=8);
                (0..len).map(|_| rng.gen_range(0..sigma)).collect()
            }
        };
        texts.push(t);
    }
    texts
}

pub fn brute(texts: &[Vec<u32>]) -> BruteIndex {
    brute_index(&TextCollection::new(texts.to_vec()).unwrap()).unwrap()
}

/// First array where `index` and the brute index disagree.
pub fn diff_against_brute(index: &CbwtIndex, b: &BruteIndex) -> Option<String> {
    if index.ft() != b.ft {
        return Some(format!("FT {:?} vs {:?}", index.ft(), b.ft));
    }
    if index.lt() != b.lt {
        return Some(format!("LT {:?} vs {:?}", index.lt(), b.lt));
    }
    if index.lcp() != b.lcp {
        return Some(format!("LCP {:?} vs {:?}", index.lcp(), b.lcp));
    }
    if index.lf_array() != b.lf {
        return Some(format!("LF {:?} vs {:?}", index.lf_array(), b.lf));
    }
    if index.fl_array() != b.fl {
        return Some(format!("FL {:?} vs {:?}", index.fl_array(), b.fl));
    }
    None
}

/// All patterns over `0..alpha` of length `0..=max_len`.
pub fn all_patterns(alpha: u32, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &layer {
            for c in 0..alpha {
                let mut q: Vec<u32> = p.clone();
                q.push(c);
                next.push(q);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
