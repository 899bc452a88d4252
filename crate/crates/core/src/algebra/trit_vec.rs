use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Serialize, Serializer};

use super::Gf3;
use crate::error::{Error, Result};

const WORD: usize = 64;

/// `3^n` as a `usize`.
pub const fn pow3(n: usize) -> usize {
    let mut acc = 1usize;
    let mut i = 0;
    while i < n {
        acc *= 3;
        i += 1;
    }
    acc
}

/// A fixed-length vector over `F_3`.
///
/// Digits are packed into two bit planes: bit `i` of `ones` is set when
/// digit `i` is 1 and bit `i` of `twos` when it is 2. Bits past `len` are
/// always clear, so derived equality and hashing are structural. Weight,
/// support inclusion, addition and the inner product all run word-at-a-time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TritVec {
    len: usize,
    ones: Vec<u64>,
    twos: Vec<u64>,
}

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

impl TritVec {
    pub fn zeros(len: usize) -> Self {
        let words = words_for(len);
        TritVec {
            len,
            ones: vec![0; words],
            twos: vec![0; words],
        }
    }

    pub fn from_digits(digits: &[u8]) -> Result<Self> {
        let mut v = TritVec::zeros(digits.len());
        for (i, &d) in digits.iter().enumerate() {
            v.set(i, Gf3::new(d)?);
        }
        Ok(v)
    }

    pub fn from_elems<I: IntoIterator<Item = Gf3>>(elems: I) -> Self {
        let elems: Vec<Gf3> = elems.into_iter().collect();
        let mut v = TritVec::zeros(elems.len());
        for (i, e) in elems.into_iter().enumerate() {
            v.set(i, e);
        }
        v
    }

    /// The unit vector `e_k` of length `len`.
    pub fn unit(len: usize, k: usize) -> Self {
        let mut v = TritVec::zeros(len);
        v.set(k, Gf3::ONE);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Panics if `i >= len`.
    pub fn get(&self, i: usize) -> Gf3 {
        assert!(
            i < self.len,
            "trit index {i} out of range for length {}",
            self.len
        );
        let (w, b) = (i / WORD, i % WORD);
        if (self.ones[w] >> b) & 1 == 1 {
            Gf3::ONE
        } else if (self.twos[w] >> b) & 1 == 1 {
            Gf3::TWO
        } else {
            Gf3::ZERO
        }
    }

    /// Panics if `i >= len`.
    pub fn set(&mut self, i: usize, value: Gf3) {
        assert!(
            i < self.len,
            "trit index {i} out of range for length {}",
            self.len
        );
        let (w, b) = (i / WORD, i % WORD);
        let mask = 1u64 << b;
        self.ones[w] &= !mask;
        self.twos[w] &= !mask;
        match value.value() {
            1 => self.ones[w] |= mask,
            2 => self.twos[w] |= mask,
            _ => {}
        }
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Gf3> + ExactSizeIterator + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_elems(&self) -> Vec<Gf3> {
        self.iter().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.ones.iter().chain(&self.twos).all(|&w| w == 0)
    }

    /// Hamming weight, `|Supp(v)|`.
    pub fn weight(&self) -> usize {
        self.ones
            .iter()
            .zip(&self.twos)
            .map(|(o, t)| (o | t).count_ones() as usize)
            .sum()
    }

    /// Support bitmap, one bit per coordinate.
    pub fn support_words(&self) -> Vec<u64> {
        self.ones
            .iter()
            .zip(&self.twos)
            .map(|(o, t)| o | t)
            .collect()
    }

    /// `Supp(self) ⊆ Supp(other)`; lengths must already agree.
    pub(crate) fn support_within(&self, other: &TritVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.ones
            .iter()
            .zip(&self.twos)
            .zip(other.ones.iter().zip(&other.twos))
            .all(|((o1, t1), (o2, t2))| (o1 | t1) & !(o2 | t2) == 0)
    }

    fn check_len(&self, other: &TritVec) -> Result<()> {
        if self.len == other.len {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            })
        }
    }

    pub fn checked_add(&self, other: &TritVec) -> Result<TritVec> {
        self.check_len(other)?;
        Ok(self.add_packed(other))
    }

    pub(crate) fn add_packed(&self, other: &TritVec) -> TritVec {
        let mut out = TritVec::zeros(self.len);
        for k in 0..self.ones.len() {
            let (a1, b1) = (self.ones[k], self.twos[k]);
            let (a2, b2) = (other.ones[k], other.twos[k]);
            let z1 = !(a1 | b1);
            let z2 = !(a2 | b2);
            out.ones[k] = (z1 & a2) | (a1 & z2) | (b1 & b2);
            out.twos[k] = (z1 & b2) | (b1 & z2) | (a1 & a2);
        }
        out
    }

    /// In-place `self += c * other`.
    pub(crate) fn add_scaled_assign(&mut self, c: Gf3, other: &TritVec) {
        match c.value() {
            0 => {}
            1 => *self = self.add_packed(other),
            _ => *self = self.add_packed(&other.neg_packed()),
        }
    }

    fn neg_packed(&self) -> TritVec {
        TritVec {
            len: self.len,
            ones: self.twos.clone(),
            twos: self.ones.clone(),
        }
    }

    pub fn scale(&self, c: Gf3) -> TritVec {
        match c.value() {
            0 => TritVec::zeros(self.len),
            1 => self.clone(),
            _ => self.neg_packed(),
        }
    }

    /// Standard inner product `Σ u_i v_i mod 3`.
    pub fn dot(&self, other: &TritVec) -> Result<Gf3> {
        self.check_len(other)?;
        Ok(self.dot_packed(other))
    }

    pub(crate) fn dot_packed(&self, other: &TritVec) -> Gf3 {
        let mut plus = 0u64;
        let mut minus = 0u64;
        for k in 0..self.ones.len() {
            let (a1, b1) = (self.ones[k], self.twos[k]);
            let (a2, b2) = (other.ones[k], other.twos[k]);
            plus += ((a1 & a2) | (b1 & b2)).count_ones() as u64;
            minus += ((a1 & b2) | (b1 & a2)).count_ones() as u64;
        }
        Gf3::from_int(plus as i64 + 2 * minus as i64)
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &TritVec) -> TritVec {
        TritVec::from_elems(self.iter().chain(other.iter()))
    }
}

impl Add for &TritVec {
    type Output = TritVec;

    /// Panics on length mismatch; use [`TritVec::checked_add`] otherwise.
    fn add(self, rhs: &TritVec) -> TritVec {
        self.checked_add(rhs).expect("TritVec addition")
    }
}

impl Sub for &TritVec {
    type Output = TritVec;

    fn sub(self, rhs: &TritVec) -> TritVec {
        self.checked_add(&rhs.neg_packed())
            .expect("TritVec subtraction")
    }
}

impl Neg for &TritVec {
    type Output = TritVec;

    fn neg(self) -> TritVec {
        self.neg_packed()
    }
}

impl fmt::Debug for TritVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TritVec({self})")
    }
}

impl fmt::Display for TritVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.iter() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl Serialize for TritVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn dot(u: &TritVec, v: &TritVec) -> Result<Gf3> {
    u.dot(v)
}

/// Little-endian base-3 index: `Σ v_k 3^k`.
pub fn vec_index(v: &TritVec) -> usize {
    v.iter()
        .rev()
        .fold(0usize, |acc, d| acc * 3 + d.value() as usize)
}

/// Inverse of [`vec_index`] for vectors of length `n`.
pub fn index_vec(i: usize, n: usize) -> Result<TritVec> {
    let bound = pow3(n);
    if i >= bound {
        return Err(Error::IndexOutOfRange { index: i, bound });
    }
    let mut v = TritVec::zeros(n);
    let mut rest = i;
    for k in 0..n {
        v.set(k, Gf3::from_int((rest % 3) as i64));
        rest /= 3;
    }
    Ok(v)
}

/// Index of `-(x_i + x_j)` where `x_i = index_vec(i, n)`, computed digitwise.
pub fn neg_sum_index(i: usize, j: usize, n: usize) -> usize {
    let (mut i, mut j) = (i, j);
    let mut out = 0;
    let mut place = 1;
    for _ in 0..n {
        let d = (6 - i % 3 - j % 3) % 3;
        out += d * place;
        place *= 3;
        i /= 3;
        j /= 3;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(d: &[u8]) -> TritVec {
        TritVec::from_digits(d).unwrap()
    }

    fn all_vecs(n: usize) -> Vec<TritVec> {
        (0..pow3(n)).map(|i| index_vec(i, n).unwrap()).collect()
    }

    #[test]
    fn dot_examples() {
        assert_eq!(
            dot(&tv(&[1, 2, 0, 1]), &tv(&[2, 2, 1, 0])).unwrap(),
            Gf3::ZERO
        );
        assert_eq!(dot(&tv(&[2, 1, 1]), &TritVec::zeros(3)).unwrap(), Gf3::ZERO);
        assert_eq!(dot(&tv(&[1, 1]), &tv(&[1, 2])).unwrap(), Gf3::ZERO);
        assert_eq!(dot(&tv(&[1, 1]), &tv(&[1, 1])).unwrap(), Gf3::TWO);
        assert!(matches!(
            dot(&tv(&[1]), &tv(&[1, 1])),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn index_examples() {
        assert_eq!(index_vec(5, 2).unwrap(), tv(&[2, 1]));
        assert_eq!(vec_index(&TritVec::zeros(5)), 0);
        assert!(matches!(
            index_vec(9, 2),
            Err(Error::IndexOutOfRange { index: 9, bound: 9 })
        ));
        for n in 0..=4 {
            for (i, v) in all_vecs(n).iter().enumerate() {
                assert_eq!(vec_index(v), i);
                assert_eq!(index_vec(vec_index(v), n).unwrap(), *v);
            }
        }
    }

    #[test]
    fn packed_ops_match_digitwise_n3() {
        let vecs = all_vecs(3);
        for u in &vecs {
            assert_eq!(u.weight(), u.iter().filter(|d| !d.is_zero()).count());
            assert_eq!(u.weight(), u.scale(Gf3::TWO).weight());
            for v in &vecs {
                let sum = u + v;
                let diff = u - v;
                for k in 0..3 {
                    assert_eq!(sum.get(k), u.get(k) + v.get(k));
                    assert_eq!(diff.get(k), u.get(k) - v.get(k));
                }
                let naive = u
                    .iter()
                    .zip(v.iter())
                    .fold(Gf3::ZERO, |acc, (a, b)| acc + a * b);
                assert_eq!(u.dot(v).unwrap(), naive);
                assert_eq!(u.dot(v).unwrap(), v.dot(u).unwrap());
                assert!((u + v).weight() <= u.weight() + v.weight());
                assert_eq!(
                    neg_sum_index(vec_index(u), vec_index(v), 3),
                    vec_index(&-&(u + v))
                );
            }
        }
    }

    #[test]
    fn dot_bilinear_n3() {
        let vecs = all_vecs(3);
        for u in &vecs {
            for v in &vecs {
                for w in &vecs {
                    assert_eq!(
                        u.dot(&(v + w)).unwrap(),
                        u.dot(v).unwrap() + u.dot(w).unwrap()
                    );
                }
                for c in Gf3::ALL {
                    assert_eq!(u.scale(c).dot(v).unwrap(), c * u.dot(v).unwrap());
                }
            }
        }
    }

    #[test]
    fn long_vectors_cross_word_boundaries() {
        let mut v = TritVec::zeros(130);
        v.set(0, Gf3::ONE);
        v.set(63, Gf3::TWO);
        v.set(64, Gf3::TWO);
        v.set(129, Gf3::ONE);
        assert_eq!(v.weight(), 4);
        assert_eq!(v.get(63), Gf3::TWO);
        let doubled = &v + &v;
        assert_eq!(doubled, v.scale(Gf3::TWO));
        assert!((&v - &v).is_zero());
        assert_eq!(v.dot(&v).unwrap(), Gf3::ONE); // 1+4+4+1 = 10
        let mut w = v.clone();
        w.set(5, Gf3::ONE);
        assert!(v.support_within(&w));
        assert!(!w.support_within(&v));
        assert_eq!(v.to_string().len(), 130);
    }
}
