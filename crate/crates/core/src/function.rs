//! Tabulated functions `F_3^n -> F_3` built from spread members.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{index_vec, pow3, vec_index, Gf3, TritVec};
use crate::error::{Error, Result};
use crate::subspace::PartialSpread;

/// The two spread-function families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    #[serde(rename = "char")]
    Characteristic,
    Ternary,
}

impl FamilyKind {
    /// Largest admissible `s` for spread parameter `t`.
    pub fn max_s(self, t: usize) -> usize {
        match self {
            FamilyKind::Characteristic => pow3(t) + 1,
            FamilyKind::Ternary => pow3(t).div_ceil(2),
        }
    }

    /// Number of spread members a function with parameter `s` uses.
    pub fn index_count(self, s: usize) -> usize {
        match self {
            FamilyKind::Characteristic => s,
            FamilyKind::Ternary => 2 * s,
        }
    }

    pub fn check_s(self, t: usize, s: usize) -> Result<()> {
        let max = self.max_s(t);
        if (1..=max).contains(&s) {
            Ok(())
        } else {
            Err(Error::InadmissibleS { s, max })
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Characteristic => "char",
            FamilyKind::Ternary => "ternary",
        })
    }
}

/// How a [`SpreadFunction`] was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Sum of indicators of `W_i \ {0}` over the listed members.
    Characteristic {
        indices: Vec<usize>,
    },
    /// Value 1 on the first half of `indices`, 2 on the second half.
    Ternary {
        indices: Vec<usize>,
    },
    Custom,
}

impl Family {
    pub fn kind(&self) -> Option<FamilyKind> {
        match self {
            Family::Characteristic { .. } => Some(FamilyKind::Characteristic),
            Family::Ternary { .. } => Some(FamilyKind::Ternary),
            Family::Custom => None,
        }
    }

    pub fn indices(&self) -> &[usize] {
        match self {
            Family::Characteristic { indices } | Family::Ternary { indices } => indices,
            Family::Custom => &[],
        }
    }

    /// The family parameter `s`; `None` for custom functions.
    pub fn s(&self) -> Option<usize> {
        match self {
            Family::Characteristic { indices } => Some(indices.len()),
            Family::Ternary { indices } => Some(indices.len() / 2),
            Family::Custom => None,
        }
    }
}

/// A function `F_3^n -> F_3` stored as a table in [`vec_index`] order.
#[derive(Debug, Clone)]
pub struct SpreadFunction {
    n: usize,
    table: Vec<Gf3>,
    family: Family,
    spread: Option<Arc<PartialSpread>>,
}

impl SpreadFunction {
    /// Wraps an arbitrary table of length `3^n`.
    pub fn custom(n: usize, table: Vec<Gf3>) -> Result<Self> {
        if table.len() != pow3(n) {
            return Err(Error::LengthMismatch {
                left: table.len(),
                right: pow3(n),
            });
        }
        Ok(SpreadFunction {
            n,
            table,
            family: Family::Custom,
            spread: None,
        })
    }

    pub fn from_fn(n: usize, f: impl Fn(&TritVec) -> Gf3) -> Self {
        let table = (0..pow3(n))
            .map(|i| f(&index_vec(i, n).expect("in range")))
            .collect();
        SpreadFunction {
            n,
            table,
            family: Family::Custom,
            spread: None,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[Gf3] {
        &self.table
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn spread(&self) -> Option<&PartialSpread> {
        self.spread.as_deref()
    }

    pub fn at_index(&self, i: usize) -> Gf3 {
        self.table[i]
    }

    pub fn eval(&self, x: &TritVec) -> Result<Gf3> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: self.n,
            });
        }
        Ok(self.table[vec_index(x)])
    }

    pub fn support_size(&self) -> usize {
        self.table.iter().filter(|v| !v.is_zero()).count()
    }

    /// Number of points where the function takes `value`.
    pub fn preimage_size(&self, value: Gf3) -> usize {
        self.table.iter().filter(|&&v| v == value).count()
    }

    /// Pointwise `c * f`, keeping the family metadata of `self`.
    pub fn scaled(&self, c: Gf3) -> SpreadFunction {
        SpreadFunction {
            table: self.table.iter().map(|&v| c * v).collect(),
            ..self.clone()
        }
    }
}

fn check_indices(spread: &PartialSpread, indices: &[usize]) -> Result<()> {
    let mut seen = HashSet::new();
    for &i in indices {
        if i >= spread.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: spread.len(),
            });
        }
        if !seen.insert(i) {
            return Err(Error::DuplicateIndex(i));
        }
    }
    Ok(())
}

/// Writes `value` on `W_i \ {0}` for each listed member.
fn paint(spread: &PartialSpread, table: &mut [Gf3], members: &[usize], value: Gf3) {
    for &i in members {
        for x in spread.members()[i].elements().filter(|x| !x.is_zero()) {
            table[vec_index(&x)] = value;
        }
    }
}

fn tabulate(
    spread: &Arc<PartialSpread>,
    family: Family,
    ones: &[usize],
    twos: &[usize],
) -> SpreadFunction {
    let n = spread.n();
    let mut table = vec![Gf3::ZERO; pow3(n)];
    paint(spread, &mut table, ones, Gf3::ONE);
    paint(spread, &mut table, twos, Gf3::TWO);
    SpreadFunction {
        n,
        table,
        family,
        spread: Some(Arc::clone(spread)),
    }
}

/// `f_i`: 1 on `W_i \ {0}`, 0 elsewhere.
pub fn char_indicator(spread: &Arc<PartialSpread>, i: usize) -> Result<SpreadFunction> {
    char_sum(spread, &[i])
}

/// `f_ij`: 1 on `W_i \ {0}`, 2 on `W_j \ {0}`, 0 elsewhere.
pub fn pair_indicator(spread: &Arc<PartialSpread>, i: usize, j: usize) -> Result<SpreadFunction> {
    if i == j {
        return Err(Error::SameIndex(i));
    }
    ternary_sum(spread, &[i, j])
}

/// Sum of `f_i` over `indices`. Supports are disjoint, so the result is the
/// 0/1 indicator of the union of the punctured members.
pub fn char_sum(spread: &Arc<PartialSpread>, indices: &[usize]) -> Result<SpreadFunction> {
    check_indices(spread, indices)?;
    if indices.is_empty() {
        return Err(Error::InadmissibleS {
            s: 0,
            max: spread.len(),
        });
    }
    let family = Family::Characteristic {
        indices: indices.to_vec(),
    };
    Ok(tabulate(spread, family, indices, &[]))
}

/// `Σ_k f_{i_k i_{s+k}}` for `indices = (i_1, …, i_{2s})`.
pub fn ternary_sum(spread: &Arc<PartialSpread>, indices: &[usize]) -> Result<SpreadFunction> {
    if indices.is_empty() || indices.len() % 2 == 1 {
        return Err(Error::OddIndexCount(indices.len()));
    }
    check_indices(spread, indices)?;
    let s = indices.len() / 2;
    let family = Family::Ternary {
        indices: indices.to_vec(),
    };
    Ok(tabulate(spread, family, &indices[..s], &indices[s..]))
}

/// The `w` with `f(x) = w.x` for all `x`, if `f` is linear.
pub fn is_linear(f: &SpreadFunction) -> Option<TritVec> {
    let n = f.n();
    // A linear form is pinned down by its values on the unit vectors.
    let w = TritVec::from_elems((0..n).map(|k| f.at_index(pow3(k))));
    let linear = (0..pow3(n)).all(|i| {
        let x = index_vec(i, n).expect("in range");
        w.dot_packed(&x) == f.at_index(i)
    });
    linear.then_some(w)
}
