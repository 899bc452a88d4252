//! Minimality of `C_f`: exhaustive covering checks, the weight identity for
//! support inclusion, the Walsh spectrum criterion, and the
//! Ashikhmin–Barg ratio test.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::algebra::{index_vec, neg_sum_index, pow3, Gf3, TritVec};
use crate::code::{weight_distribution_from_spectrum, TernaryLinearCode, WeightDistribution};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::function::{is_linear, SpreadFunction};
use crate::walsh::{closed_form_table, walsh_table, WalshTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Minimal,
    NotMinimal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    #[serde(rename = "brute")]
    BruteForce,
    #[serde(rename = "walsh")]
    WalshCriterion,
    WeightIdentity,
}

/// Which spectrum inequality a triple violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Inequality {
    /// `Re f̂(w1) + Re f̂(w2) + Re f̂(w3) = 3^n`
    Sum,
    /// `Re f̂(w1) + Re f̂(w2) - 2 Re f̂(w3) = 3^n`
    Difference,
}

/// Evidence that a code is not minimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `covering` covers `covered`, which is not a scalar multiple of it.
    Covering {
        covered_index: usize,
        covering_index: usize,
        covered: TritVec,
        covering: TritVec,
    },
    /// Pairwise distinct `w1 + w2 + w3 = 0` violating an inequality.
    Triple {
        w1: TritVec,
        w2: TritVec,
        w3: TritVec,
        inequality: Inequality,
    },
}

fn ratio_string<S: Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&format_args!("{}/{}", r.numer(), r.denom()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub verdict: Verdict,
    pub method: Method,
    pub witness: Option<Witness>,
    pub wt_min: usize,
    pub wt_max: usize,
    #[serde(serialize_with = "ratio_string")]
    pub ratio: Ratio<u64>,
    pub ab_satisfied: bool,
}

impl MinimalityReport {
    fn new(method: Method, witness: Option<Witness>, dist: &WeightDistribution) -> Result<Self> {
        let (ratio, ab_satisfied) = ab_check(dist)?;
        Ok(MinimalityReport {
            verdict: if witness.is_some() {
                Verdict::NotMinimal
            } else {
                Verdict::Minimal
            },
            method,
            witness,
            wt_min: dist.wt_min().ok_or(Error::EmptyDistribution)?,
            wt_max: dist.wt_max().ok_or(Error::EmptyDistribution)?,
            ratio,
            ab_satisfied,
        })
    }

    pub fn is_minimal(&self) -> bool {
        self.verdict == Verdict::Minimal
    }
}

fn check_len(c1: &TritVec, c2: &TritVec) -> Result<()> {
    if c1.len() == c2.len() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            left: c1.len(),
            right: c2.len(),
        })
    }
}

/// `Supp(c1) ⊆ Supp(c2)`, i.e. `c2` covers `c1`.
pub fn covers(c1: &TritVec, c2: &TritVec) -> Result<bool> {
    check_len(c1, c2)?;
    Ok(c1.support_within(c2))
}

/// Support inclusion decided through weights only:
/// `wt(c2 + c1) + wt(c2 + 2 c1) = 2 wt(c2) - wt(c1)`.
pub fn covers_via_weight_identity(c1: &TritVec, c2: &TritVec) -> Result<bool> {
    check_len(c1, c2)?;
    Ok(weight_identity_holds(c1, c2))
}

fn weight_identity_holds(c1: &TritVec, c2: &TritVec) -> bool {
    let lhs = c2.add_packed(c1).weight() + c2.add_packed(&c1.scale(Gf3::TWO)).weight();
    lhs + c1.weight() == 2 * c2.weight()
}

pub fn is_minimal_bruteforce(code: &TernaryLinearCode) -> Result<MinimalityReport> {
    is_minimal_bruteforce_with(code, Execution::default())
}

/// Checks every ordered pair of nonzero codewords. The witness is the
/// covering codeword with the lowest message index, paired with the lowest
/// indexed codeword it covers.
pub fn is_minimal_bruteforce_with(
    code: &TernaryLinearCode,
    exec: Execution,
) -> Result<MinimalityReport> {
    sweep_codewords(code, exec, Method::BruteForce, |c1, c2| {
        c1.support_within(c2)
    })
}

/// Same sweep as [`is_minimal_bruteforce_with`], deciding inclusion by the
/// weight identity instead of comparing supports.
pub fn is_minimal_weight_identity(
    code: &TernaryLinearCode,
    exec: Execution,
) -> Result<MinimalityReport> {
    sweep_codewords(code, exec, Method::WeightIdentity, weight_identity_holds)
}

fn sweep_codewords<P>(
    code: &TernaryLinearCode,
    exec: Execution,
    method: Method,
    covered_by: P,
) -> Result<MinimalityReport>
where
    P: Fn(&TritVec, &TritVec) -> bool + Sync + Send,
{
    let words = code.codewords(exec);
    let weights: Vec<usize> = words.iter().map(TritVec::weight).collect();
    let witness = exec.find_first(words.len(), |k2| {
        let c2 = &words[k2];
        if weights[k2] == 0 {
            return None;
        }
        let neg_c2 = c2.scale(Gf3::TWO);
        (0..words.len())
            .find(|&k1| {
                let c1 = &words[k1];
                weights[k1] > 0
                    && weights[k1] <= weights[k2]
                    && covered_by(c1, c2)
                    && *c1 != *c2
                    && *c1 != neg_c2
            })
            .map(|k1| Witness::Covering {
                covered_index: k1,
                covering_index: k2,
                covered: words[k1].clone(),
                covering: c2.clone(),
            })
    });
    let mut dist = WeightDistribution::new();
    for &w in &weights {
        dist.add(w, 1);
    }
    MinimalityReport::new(method, witness, &dist)
}

/// Where the spectrum for the Walsh criterion comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalshSource {
    /// Computed from the function table.
    Computed,
    /// Assembled from the per-case closed forms (spread families only).
    ClosedForm,
}

pub fn check_walsh_conditions(f: &SpreadFunction) -> Result<MinimalityReport> {
    check_walsh_conditions_with(f, WalshSource::Computed, Execution::default())
}

pub fn check_walsh_conditions_with(
    f: &SpreadFunction,
    source: WalshSource,
    exec: Execution,
) -> Result<MinimalityReport> {
    if let Some(w) = is_linear(f) {
        return Err(Error::LinearFunction(w));
    }
    let table = match source {
        WalshSource::Computed => walsh_table(f),
        WalshSource::ClosedForm => closed_form_table(f)?,
    };
    walsh_criterion_report(&table, exec)
}

/// Minimality verdict from a precomputed spectrum.
pub fn walsh_criterion_report(table: &WalshTable, exec: Execution) -> Result<MinimalityReport> {
    let witness = find_violating_triple(table, exec);
    let dist = weight_distribution_from_spectrum(table)?;
    MinimalityReport::new(Method::WalshCriterion, witness, &dist)
}

/// First `(w1, w2)` in index order, with `w3 = -w1 - w2` and all three
/// distinct, where either spectrum sum hits `3^n`. Sums are compared as
/// `2 Re` against `2·3^n`.
pub fn find_violating_triple(table: &WalshTable, exec: Execution) -> Option<Witness> {
    let n = table.n();
    let q = pow3(n);
    let target = 2 * q as i64;
    let re2 = table.twice_re_values();
    let found = exec.find_first(q, |i1| {
        (0..q).find_map(|i2| {
            let i3 = neg_sum_index(i1, i2, n);
            if i1 == i2 || i3 == i1 || i3 == i2 {
                return None;
            }
            if re2[i1] + re2[i2] + re2[i3] == target {
                Some((i1, i2, i3, Inequality::Sum))
            } else if re2[i1] + re2[i2] - 2 * re2[i3] == target {
                Some((i1, i2, i3, Inequality::Difference))
            } else {
                None
            }
        })
    });
    found.map(|(i1, i2, i3, inequality)| Witness::Triple {
        w1: index_vec(i1, n).expect("in range"),
        w2: index_vec(i2, n).expect("in range"),
        w3: index_vec(i3, n).expect("in range"),
        inequality,
    })
}

/// `wt_min / wt_max` over nonzero weights and whether it exceeds `2/3`.
pub fn ab_check(dist: &WeightDistribution) -> Result<(Ratio<u64>, bool)> {
    let min = dist.wt_min().ok_or(Error::EmptyDistribution)?;
    let max = dist.wt_max().ok_or(Error::EmptyDistribution)?;
    let ratio = Ratio::new(min as u64, max as u64);
    Ok((ratio, ratio > Ratio::new(2, 3)))
}
