//! Reference implementations on plain digit vectors, sharing nothing with the
//! packed library code beyond the function tables they are fed.

#![allow(dead_code)]

use std::collections::BTreeMap;

use tercode_core::function::{FamilyKind, SpreadFunction};
use tercode_core::report::RunConfig;

pub fn digits(mut i: usize, n: usize) -> Vec<u8> {
    let mut d = vec![0u8; n];
    for slot in d.iter_mut() {
        *slot = (i % 3) as u8;
        i /= 3;
    }
    d
}

pub fn pow3(k: usize) -> usize {
    3usize.pow(k as u32)
}

pub fn table_digits(f: &SpreadFunction) -> Vec<u8> {
    f.table().iter().map(|v| v.value()).collect()
}

/// Codewords `(a f(x) + w.x)_{x=1..3^n-1}` for message `k = a 3^n + index(w)`.
pub fn naive_codewords(table: &[u8], n: usize) -> Vec<Vec<u8>> {
    let q = pow3(n);
    let points: Vec<Vec<u8>> = (0..q).map(|i| digits(i, n)).collect();
    let mut words = Vec::with_capacity(3 * q);
    for a in 0..3u32 {
        for w in &points {
            let c = (1..q)
                .map(|x| {
                    let lin: u32 = w
                        .iter()
                        .zip(&points[x])
                        .map(|(&p, &q)| p as u32 * q as u32)
                        .sum();
                    ((a * table[x] as u32 + lin) % 3) as u8
                })
                .collect();
            words.push(c);
        }
    }
    words
}

pub fn weight(c: &[u8]) -> usize {
    c.iter().filter(|&&v| v != 0).count()
}

pub fn naive_distribution(words: &[Vec<u8>]) -> BTreeMap<usize, u64> {
    let mut d = BTreeMap::new();
    for c in words {
        *d.entry(weight(c)).or_insert(0) += 1;
    }
    d
}

/// `f̂(w)` as `(a, b)` with `f̂ = a + bω`, from exponent counts.
pub fn naive_walsh(table: &[u8], n: usize) -> Vec<(i64, i64)> {
    let q = pow3(n);
    let points: Vec<Vec<u8>> = (0..q).map(|i| digits(i, n)).collect();
    points
        .iter()
        .map(|w| {
            let mut counts = [0i64; 3];
            for (x, p) in points.iter().enumerate() {
                let dot: u32 = w.iter().zip(p).map(|(&a, &b)| a as u32 * b as u32).sum();
                let e = (table[x] as u32 + 3 * 3 - dot % 3) % 3;
                counts[e as usize] += 1;
            }
            (counts[0] - counts[2], counts[1] - counts[2])
        })
        .collect()
}

fn support_mask(c: &[u8]) -> Vec<u64> {
    let mut m = vec![0u64; c.len().div_ceil(64)];
    for (i, &v) in c.iter().enumerate() {
        if v != 0 {
            m[i / 64] |= 1 << (i % 64);
        }
    }
    m
}

fn negate(c: &[u8]) -> Vec<u8> {
    c.iter().map(|&v| (3 - v) % 3).collect()
}

/// True when no nonzero codeword covers another one that is not a multiple of it.
pub fn naive_minimal(words: &[Vec<u8>]) -> bool {
    let masks: Vec<Vec<u64>> = words.iter().map(|c| support_mask(c)).collect();
    for (i, c2) in words.iter().enumerate() {
        if weight(c2) == 0 {
            continue;
        }
        let neg = negate(c2);
        for (j, c1) in words.iter().enumerate() {
            if weight(c1) == 0 || c1 == c2 || *c1 == neg {
                continue;
            }
            if masks[j].iter().zip(&masks[i]).all(|(a, b)| a & !b == 0) {
                return false;
            }
        }
    }
    true
}

/// Every admissible `(family, s)` at dimension `n` with default indices.
pub fn all_configs(n: usize) -> Vec<RunConfig> {
    let t = n / 2;
    let mut out = Vec::new();
    for kind in [FamilyKind::Characteristic, FamilyKind::Ternary] {
        for s in 1..=kind.max_s(t) {
            out.push(RunConfig::new(n, kind, s, None).unwrap());
        }
    }
    out
}
