//! Spectrum values of the two spread families, case by case.
//!
//! For a full spread the duals `W_i^⊥ \ {0}` partition the nonzero vectors,
//! so every `w != 0` lies in the dual of exactly one member. The value of
//! `f̂(w)` depends only on whether that member is used by `f`, and for the
//! ternary family on which half of the index list it sits in.

use serde::Serialize;

use super::{Eisenstein, WalshTable};
use crate::algebra::{pow3, vec_index, TritVec};
use crate::error::{Error, Result};
use crate::function::{Family, FamilyKind, SpreadFunction};

/// Which half of a ternary index list a member belongs to: `First` members
/// carry the value 1, `Second` members the value 2. Characteristic members
/// are always `First`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumCase {
    ZeroVector,
    /// `w` lies in the dual of a member that `f` does not use.
    OutsideAllDuals,
    /// `w` lies in the dual of member `member`, which `f` uses.
    InDualOf {
        member: usize,
        side: Side,
    },
}

impl SpectrumCase {
    /// Short label used in CSV output.
    pub fn label(&self) -> String {
        match self {
            SpectrumCase::ZeroVector => "zero".to_string(),
            SpectrumCase::OutsideAllDuals => "outside".to_string(),
            SpectrumCase::InDualOf { member, side } => match side {
                Side::First => format!("dual:{member}:first"),
                Side::Second => format!("dual:{member}:second"),
            },
        }
    }
}

/// Precomputed dual ownership for one function, for classifying many `w`.
#[derive(Debug, Clone)]
pub struct SpectrumClassifier {
    n: usize,
    owner: Vec<Option<usize>>,
    side_of_member: Vec<Option<Side>>,
}

impl SpectrumClassifier {
    pub fn new(f: &SpreadFunction) -> Result<Self> {
        let (kind, indices) = match f.family() {
            Family::Custom => return Err(Error::CustomFamily),
            family => (family.kind().expect("not custom"), family.indices()),
        };
        let spread = f.spread().ok_or(Error::CustomFamily)?;
        if !spread.is_full() {
            return Err(Error::PartialSpreadOnly);
        }
        let mut side_of_member = vec![None; spread.len()];
        let first_half = match kind {
            FamilyKind::Characteristic => indices.len(),
            FamilyKind::Ternary => indices.len() / 2,
        };
        for (pos, &i) in indices.iter().enumerate() {
            side_of_member[i] = Some(if pos < first_half {
                Side::First
            } else {
                Side::Second
            });
        }
        Ok(SpectrumClassifier {
            n: f.n(),
            owner: spread.dual_owner_table(),
            side_of_member,
        })
    }

    pub fn classify_index(&self, w_index: usize) -> SpectrumCase {
        match self.owner[w_index] {
            None => SpectrumCase::ZeroVector,
            Some(member) => match self.side_of_member[member] {
                Some(side) => SpectrumCase::InDualOf { member, side },
                None => SpectrumCase::OutsideAllDuals,
            },
        }
    }

    pub fn classify(&self, w: &TritVec) -> Result<SpectrumCase> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch {
                left: w.len(),
                right: self.n,
            });
        }
        Ok(self.classify_index(vec_index(w)))
    }
}

pub fn classify(f: &SpreadFunction, w: &TritVec) -> Result<SpectrumCase> {
    SpectrumClassifier::new(f)?.classify(w)
}

/// `2 Re f̂(w)` from the family, `n`, `s` and the case of `w` alone.
pub fn twice_re_closed_form(kind: FamilyKind, n: usize, s: usize, case: SpectrumCase) -> i64 {
    let q = pow3(n) as i64;
    let qt = pow3(n / 2) as i64;
    let s = s as i64;
    match (kind, case) {
        (FamilyKind::Characteristic, SpectrumCase::ZeroVector) => 2 * q - 3 * s * (qt - 1),
        (FamilyKind::Characteristic, SpectrumCase::OutsideAllDuals) => 3 * s,
        (FamilyKind::Characteristic, SpectrumCase::InDualOf { .. }) => -3 * qt + 3 * s,
        (FamilyKind::Ternary, SpectrumCase::ZeroVector) => 2 * q - 6 * s * (qt - 1),
        (FamilyKind::Ternary, SpectrumCase::OutsideAllDuals) => 6 * s,
        (FamilyKind::Ternary, SpectrumCase::InDualOf { .. }) => -3 * qt + 6 * s,
    }
}

/// Exact `f̂(w)` from the family, `n`, `s` and the case of `w`.
///
/// Each punctured member `W_j \ {0}` whose dual misses `w` contributes
/// `-ω^{c}` (its character sum over all of `W_j` vanishes), while the member
/// whose dual holds `w` contributes `(3^t - 1) ω^{c}`, with `c` the value
/// `f` takes on that member.
pub fn full_closed_form(kind: FamilyKind, n: usize, s: usize, case: SpectrumCase) -> Eisenstein {
    let q = pow3(n) as i64;
    let qt = pow3(n / 2) as i64;
    let s = s as i64;
    match (kind, case) {
        (FamilyKind::Characteristic, SpectrumCase::ZeroVector) => {
            Eisenstein::new(q - qt * s + s, s * (qt - 1))
        }
        (FamilyKind::Characteristic, SpectrumCase::OutsideAllDuals) => Eisenstein::new(s, -s),
        (FamilyKind::Characteristic, SpectrumCase::InDualOf { .. }) => {
            Eisenstein::new(s - qt, qt - s)
        }
        (FamilyKind::Ternary, SpectrumCase::ZeroVector) => Eisenstein::real(q - 3 * s * (qt - 1)),
        (FamilyKind::Ternary, SpectrumCase::OutsideAllDuals) => Eisenstein::real(3 * s),
        // 3^t (ω - 1) + 3s
        (
            FamilyKind::Ternary,
            SpectrumCase::InDualOf {
                side: Side::First, ..
            },
        ) => Eisenstein::new(3 * s - qt, qt),
        // 3^t (ω² - 1) + 3s
        (
            FamilyKind::Ternary,
            SpectrumCase::InDualOf {
                side: Side::Second, ..
            },
        ) => Eisenstein::new(3 * s - 2 * qt, -qt),
    }
}

/// The spectrum assembled from [`full_closed_form`] for every `w`.
pub fn closed_form_table(f: &SpreadFunction) -> Result<WalshTable> {
    let classifier = SpectrumClassifier::new(f)?;
    let kind = f.family().kind().ok_or(Error::CustomFamily)?;
    let s = f.family().s().ok_or(Error::CustomFamily)?;
    let values = (0..pow3(f.n()))
        .map(|i| full_closed_form(kind, f.n(), s, classifier.classify_index(i)))
        .collect();
    WalshTable::from_values(f.n(), values)
}
