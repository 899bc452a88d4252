//! The code `C_f = {(a f(x) + w.x)_{x != 0} : a in F_3, w in F_3^n}` and its
//! weight distribution.
//!
//! Coordinates are ordered by `vec_index(x)` for `x = 1 .. 3^n - 1`. Messages
//! are enumerated by a single index `k < 3^{n+1}` whose low `n` base-3 digits
//! are `w` and whose top digit is `a`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::algebra::{index_vec, matrix, pow3, Gf3, TritVec};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::function::{is_linear, FamilyKind, SpreadFunction};
use crate::walsh::WalshTable;

/// Generator matrix and rank of `C_f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryLinearCode {
    n: usize,
    generator: Vec<TritVec>,
    rank: usize,
}

impl TernaryLinearCode {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `3^n - 1`.
    pub fn length(&self) -> usize {
        pow3(self.n) - 1
    }

    /// Rank of the generator over `F_3`.
    pub fn dimension(&self) -> usize {
        self.rank
    }

    /// Row 0 is `(f(x))_x`; row `j >= 1` is the coordinate `x_{j-1}`.
    pub fn generator(&self) -> &[TritVec] {
        &self.generator
    }

    /// Number of messages, `3^{n+1}`.
    pub fn message_count(&self) -> usize {
        pow3(self.n + 1)
    }

    /// `(a, w)` for message index `k`.
    pub fn message(&self, k: usize) -> (Gf3, TritVec) {
        let q = pow3(self.n);
        let alpha = Gf3::from_int((k / q) as i64);
        (alpha, index_vec(k % q, self.n).expect("in range"))
    }

    pub fn codeword_at(&self, k: usize) -> TritVec {
        let (alpha, w) = self.message(k);
        let mut c = self.generator[0].scale(alpha);
        for (j, wj) in w.iter().enumerate() {
            c.add_scaled_assign(wj, &self.generator[j + 1]);
        }
        c
    }

    /// Every codeword in message order.
    pub fn codewords(&self, exec: Execution) -> Vec<TritVec> {
        exec.map(self.message_count(), |k| self.codeword_at(k))
    }

    /// `n+1` lines of `3^n - 1` digits, `f` row first.
    pub fn to_gmatrix(&self) -> String {
        let mut out = String::new();
        for row in &self.generator {
            writeln!(out, "{row}").expect("write to string");
        }
        out
    }
}

/// The codeword for message `(alpha, w)`, computed straight from `f`.
pub fn codeword(f: &SpreadFunction, alpha: Gf3, w: &TritVec) -> Result<TritVec> {
    if w.len() != f.n() {
        return Err(Error::LengthMismatch {
            left: w.len(),
            right: f.n(),
        });
    }
    let n = f.n();
    Ok(TritVec::from_elems((1..pow3(n)).map(|j| {
        let x = index_vec(j, n).expect("in range");
        alpha * f.at_index(j) + w.dot_packed(&x)
    })))
}

/// Builds the generator of `C_f`; `f` must not be linear.
pub fn build_code(f: &SpreadFunction) -> Result<TernaryLinearCode> {
    if let Some(w) = is_linear(f) {
        return Err(Error::LinearFunction(w));
    }
    let n = f.n();
    let q = pow3(n);
    let points: Vec<TritVec> = (1..q).map(|j| index_vec(j, n).expect("in range")).collect();
    let mut generator = Vec::with_capacity(n + 1);
    generator.push(TritVec::from_elems((1..q).map(|j| f.at_index(j))));
    for k in 0..n {
        generator.push(TritVec::from_elems(points.iter().map(|x| x.get(k))));
    }
    let rank = matrix::rank(&generator);
    Ok(TernaryLinearCode { n, generator, rank })
}

/// Weight of the codeword with `a = alpha != 0` from `2 Re f̂`, namely
/// `(2·3^n - twice_re) / 3`. For `alpha = 2` pass `2 Re f̂(w)`, for
/// `alpha = 1` pass `2 Re f̂(-w)`.
pub fn weight_from_walsh(alpha: Gf3, twice_re: i64, n: usize) -> Result<usize> {
    if alpha.is_zero() {
        return Err(Error::InvalidConfig(
            "weight_from_walsh needs a nonzero scalar".into(),
        ));
    }
    let q = pow3(n) as i64;
    let num = 2 * q - twice_re;
    if num % 3 != 0 || num < 0 || num / 3 > q - 1 {
        return Err(Error::NonIntegralWeight { twice_re, n });
    }
    Ok((num / 3) as usize)
}

/// Map from Hamming weight to the number of codewords of that weight.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightDistribution(BTreeMap<usize, u64>);

impl WeightDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, u64)>>(pairs: I) -> Self {
        let mut d = Self::new();
        for (w, m) in pairs {
            d.add(w, m);
        }
        d
    }

    /// Adds `count` codewords of `weight`, merging with existing rows.
    pub fn add(&mut self, weight: usize, count: u64) {
        if count > 0 {
            *self.0.entry(weight).or_insert(0) += count;
        }
    }

    pub fn merge(mut self, other: WeightDistribution) -> Self {
        for (w, m) in other.0 {
            self.add(w, m);
        }
        self
    }

    pub fn multiplicity(&self, weight: usize) -> u64 {
        self.0.get(&weight).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.0.iter().map(|(&w, &m)| (w, m))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ A_w`.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// `Σ w · A_w`.
    pub fn total_weight(&self) -> u64 {
        self.0.iter().map(|(&w, &m)| w as u64 * m).sum()
    }

    /// Smallest nonzero weight.
    pub fn wt_min(&self) -> Option<usize> {
        self.0.keys().copied().find(|&w| w > 0)
    }

    pub fn wt_max(&self) -> Option<usize> {
        self.0.keys().copied().next_back().filter(|&w| w > 0)
    }

    /// `weight,multiplicity` rows in increasing weight, with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,multiplicity\n");
        for (w, m) in self.iter() {
            writeln!(out, "{w},{m}").expect("write to string");
        }
        out
    }
}

impl Serialize for WeightDistribution {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row {
            weight: usize,
            multiplicity: u64,
        }
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (weight, multiplicity) in self.iter() {
            seq.serialize_element(&Row {
                weight,
                multiplicity,
            })?;
        }
        seq.end()
    }
}

pub fn weight_distribution_bruteforce(code: &TernaryLinearCode) -> WeightDistribution {
    weight_distribution_bruteforce_with(code, Execution::default())
}

/// Streams every codeword weight into per-range histograms.
pub fn weight_distribution_bruteforce_with(
    code: &TernaryLinearCode,
    exec: Execution,
) -> WeightDistribution {
    exec.fold(
        code.message_count(),
        WeightDistribution::new,
        |mut acc, k| {
            acc.add(code.codeword_at(k).weight(), 1);
            acc
        },
        WeightDistribution::merge,
    )
}

/// The multiset of weights read off the spectrum: `a = 0` gives the zero
/// word and `3^n - 3^{n-1}` otherwise, `a = 2` uses `f̂(w)` and `a = 1`
/// uses `f̂(-w)`.
pub fn weight_distribution_from_spectrum(table: &WalshTable) -> Result<WeightDistribution> {
    let n = table.n();
    let q = pow3(n);
    let mut dist = WeightDistribution::new();
    dist.add(0, 1);
    dist.add(q - q / 3, q as u64 - 1);
    for i in 0..q {
        let neg = crate::algebra::neg_sum_index(i, 0, n);
        dist.add(weight_from_walsh(Gf3::TWO, table.twice_re(i), n)?, 1);
        dist.add(weight_from_walsh(Gf3::ONE, table.twice_re(neg), n)?, 1);
    }
    Ok(dist)
}

/// Weight distribution of `C_f` for a full spread, from `n` and `s` alone.
pub fn weight_distribution_closed(
    kind: FamilyKind,
    n: usize,
    s: usize,
) -> Result<WeightDistribution> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let t = n / 2;
    kind.check_s(t, s)?;
    let q = pow3(n);
    let qt = pow3(t);
    let base = q - q / 3;
    // members used by f
    let m = kind.index_count(s);
    let mut dist = WeightDistribution::new();
    dist.add(0, 1);
    dist.add(m * (qt - 1), 2);
    dist.add(base, q as u64 - 1);
    dist.add(base - m, 2 * ((qt + 1 - m) * (qt - 1)) as u64);
    dist.add(base + qt - m, (2 * m * (qt - 1)) as u64);
    Ok(dist)
}
