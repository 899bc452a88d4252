//! Exact Walsh spectra `f̂(w) = Σ_x ω^{f(x) - w.x}` over the Eisenstein integers.

mod closed_form;
mod eisenstein;

pub use closed_form::{
    classify, closed_form_table, full_closed_form, twice_re_closed_form, Side, SpectrumCase,
    SpectrumClassifier,
};
pub use eisenstein::Eisenstein;

use crate::algebra::{index_vec, pow3, TritVec};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::function::SpreadFunction;

/// Direct character sum at a single point.
pub fn walsh_transform(f: &SpreadFunction, w: &TritVec) -> Result<Eisenstein> {
    if w.len() != f.n() {
        return Err(Error::LengthMismatch {
            left: w.len(),
            right: f.n(),
        });
    }
    let points = all_points(f.n());
    Ok(direct_sum(f, w, &points))
}

fn all_points(n: usize) -> Vec<TritVec> {
    (0..pow3(n))
        .map(|i| index_vec(i, n).expect("in range"))
        .collect()
}

fn direct_sum(f: &SpreadFunction, w: &TritVec, points: &[TritVec]) -> Eisenstein {
    let mut counts = [0i64; 3];
    for (i, x) in points.iter().enumerate() {
        let e = f.at_index(i) - w.dot_packed(x);
        counts[e.value() as usize] += 1;
    }
    // ω^0 = (1,0), ω^1 = (0,1), ω^2 = (-1,-1)
    Eisenstein::new(counts[0] - counts[2], counts[1] - counts[2])
}

/// The full spectrum of a function, indexed by `vec_index(w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshTable {
    n: usize,
    values: Vec<Eisenstein>,
}

impl WalshTable {
    pub fn from_values(n: usize, values: Vec<Eisenstein>) -> Result<Self> {
        if values.len() != pow3(n) {
            return Err(Error::LengthMismatch {
                left: values.len(),
                right: pow3(n),
            });
        }
        Ok(WalshTable { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Eisenstein] {
        &self.values
    }

    pub fn get(&self, w_index: usize) -> Eisenstein {
        self.values[w_index]
    }

    pub fn twice_re(&self, w_index: usize) -> i64 {
        self.values[w_index].twice_re()
    }

    pub fn twice_re_values(&self) -> Vec<i64> {
        self.values.iter().map(|v| v.twice_re()).collect()
    }

    /// `Σ_w |f̂(w)|²`; equals `3^{2n}` for every function.
    pub fn energy(&self) -> i64 {
        self.values.iter().map(|v| v.norm()).sum()
    }

    /// `Σ_w f̂(w) = 3^n ω^{f(0)}`.
    pub fn sum(&self) -> Eisenstein {
        self.values.iter().fold(Eisenstein::ZERO, |acc, &v| acc + v)
    }
}

/// Spectrum by the per-coordinate radix-3 transform, `O(n 3^n)`.
pub fn walsh_table(f: &SpreadFunction) -> WalshTable {
    let n = f.n();
    let mut values: Vec<Eisenstein> = f
        .table()
        .iter()
        .map(|v| Eisenstein::omega_pow(v.value()))
        .collect();
    let mut stride = 1;
    for _ in 0..n {
        for block in values.chunks_mut(3 * stride) {
            for k in 0..stride {
                let v0 = block[k];
                let v1 = block[k + stride];
                let v2 = block[k + 2 * stride];
                // out_j = Σ_d v_d ω^{-jd}
                block[k] = v0 + v1 + v2;
                block[k + stride] = v0 + v1.mul_omega_pow(2) + v2.mul_omega_pow(1);
                block[k + 2 * stride] = v0 + v1.mul_omega_pow(1) + v2.mul_omega_pow(2);
            }
        }
        stride *= 3;
    }
    WalshTable { n, values }
}

/// Spectrum by `3^n` independent direct sums, split across `exec`.
pub fn walsh_table_direct(f: &SpreadFunction, exec: Execution) -> WalshTable {
    let n = f.n();
    let points = all_points(n);
    let values = exec.map(points.len(), |i| direct_sum(f, &points[i], &points));
    WalshTable { n, values }
}
