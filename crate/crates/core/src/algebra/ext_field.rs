use std::sync::OnceLock;

use super::{index_vec, pow3, vec_index, Gf3, TritVec};
use crate::error::{Error, Result};

const MAX_DEGREE: usize = 8;

fn trim(mut p: Vec<Gf3>) -> Vec<Gf3> {
    while p.last() == Some(&Gf3::ZERO) {
        p.pop();
    }
    p
}

/// Remainder of `a` modulo a monic `m` (coefficients low-degree first).
fn poly_rem(a: &[Gf3], m: &[Gf3]) -> Vec<Gf3> {
    let deg_m = m.len() - 1;
    let mut r = trim(a.to_vec());
    while r.len() > deg_m {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - deg_m;
        for (k, &c) in m.iter().enumerate() {
            r[shift + k] = r[shift + k] - lead * c;
        }
        r = trim(r);
    }
    r
}

fn monic_with_low(low: &TritVec) -> Vec<Gf3> {
    let mut p = low.to_elems();
    p.push(Gf3::ONE);
    p
}

fn is_irreducible(p: &[Gf3]) -> bool {
    let deg = p.len() - 1;
    for d in 1..=deg / 2 {
        for i in 0..pow3(d) {
            let divisor = monic_with_low(&index_vec(i, d).expect("in range"));
            if poly_rem(p, &divisor).is_empty() {
                return false;
            }
        }
    }
    true
}

fn search_irreducible(t: usize) -> Vec<Gf3> {
    // Candidate order is lexicographic with c_0 as the most significant key,
    // which is big-endian in the low coefficients.
    (0..pow3(t))
        .map(|k| {
            let little = index_vec(k, t).expect("in range");
            let low = TritVec::from_elems((0..t).rev().map(|i| little.get(i)));
            monic_with_low(&low)
        })
        .find(|p| is_irreducible(p))
        .expect("irreducible polynomials exist in every degree")
}

/// The lexicographically smallest monic irreducible polynomial of degree `t`
/// over `F_3`, coefficients low-degree first (length `t + 1`, last entry 1).
/// Coefficient sequences are compared starting from the constant term.
pub fn irreducible_poly(t: usize) -> Result<Vec<Gf3>> {
    static CACHE: [OnceLock<Vec<Gf3>>; MAX_DEGREE] = [const { OnceLock::new() }; MAX_DEGREE];
    if !(1..=MAX_DEGREE).contains(&t) {
        return Err(Error::UnsupportedDegree(t));
    }
    Ok(CACHE[t - 1].get_or_init(|| search_irreducible(t)).clone())
}

/// An element of `GF(3^t) = F_3[x] / (irreducible_poly(t))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtFieldElem {
    coeffs: TritVec,
}

impl ExtFieldElem {
    pub fn new(coeffs: TritVec) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&coeffs.len()) {
            return Err(Error::UnsupportedDegree(coeffs.len()));
        }
        Ok(ExtFieldElem { coeffs })
    }

    pub fn zero(t: usize) -> Result<Self> {
        Self::new(TritVec::zeros(t))
    }

    pub fn one(t: usize) -> Result<Self> {
        Self::from_index(1, t)
    }

    /// Element whose coefficient vector has the given [`vec_index`].
    pub fn from_index(i: usize, t: usize) -> Result<Self> {
        Self::new(index_vec(i, t)?)
    }

    /// All `3^t` elements in index order.
    pub fn all(t: usize) -> Result<Vec<Self>> {
        (0..pow3(t)).map(|i| Self::from_index(i, t)).collect()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &TritVec {
        &self.coeffs
    }

    pub fn index(&self) -> usize {
        vec_index(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() == other.degree() {
            Ok(())
        } else {
            Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(ExtFieldElem {
            coeffs: &self.coeffs + &other.coeffs,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let t = self.degree();
        let modulus = irreducible_poly(t)?;
        let a = self.coeffs.to_elems();
        let b = other.coeffs.to_elems();
        let mut prod = vec![Gf3::ZERO; 2 * t - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let mut rem = poly_rem(&prod, &modulus);
        rem.resize(t, Gf3::ZERO);
        Ok(ExtFieldElem {
            coeffs: TritVec::from_elems(rem),
        })
    }

    pub fn pow(&self, mut e: u64) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one(self.degree())?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }
}

pub fn ext_mul(a: &ExtFieldElem, b: &ExtFieldElem) -> Result<ExtFieldElem> {
    a.mul(b)
}
