//! Subspaces of `F_3^n` in canonical form and partial spreads built from them.

use crate::algebra::matrix::rref;
use crate::algebra::{pow3, vec_index, ExtFieldElem, Gf3, TritVec};
use crate::error::{Error, Result};

/// A subspace of `F_3^n` stored by its reduced row-echelon basis.
///
/// The basis is canonical, so two equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    basis: Vec<TritVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of `generators` inside `F_3^n`.
    pub fn span(n: usize, generators: &[TritVec]) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::LengthMismatch {
                left: g.len(),
                right: n,
            });
        }
        let mut rows: Vec<Vec<Gf3>> = generators.iter().map(TritVec::to_elems).collect();
        let pivots = rref(&mut rows);
        Ok(Subspace {
            n,
            basis: rows.into_iter().map(TritVec::from_elems).collect(),
            pivots,
        })
    }

    pub fn zero(n: usize) -> Self {
        Subspace {
            n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            n,
            basis: (0..n).map(|k| TritVec::unit(n, k)).collect(),
            pivots: (0..n).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[TritVec] {
        &self.basis
    }

    /// Number of vectors, `3^dim`.
    pub fn size(&self) -> usize {
        pow3(self.dim())
    }

    pub fn contains(&self, v: &TritVec) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                left: v.len(),
                right: self.n,
            });
        }
        // Clearing each pivot coordinate leaves zero iff v is in the row space.
        let mut rest = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = rest.get(p);
            rest.add_scaled_assign(-c, row);
        }
        Ok(rest.is_zero())
    }

    /// `W^⊥ = {u : u.x = 0 for all x in W}`.
    pub fn dual(&self) -> Subspace {
        let free: Vec<usize> = (0..self.n).filter(|c| !self.pivots.contains(c)).collect();
        let generators: Vec<TritVec> = free
            .iter()
            .map(|&f| {
                let mut u = TritVec::zeros(self.n);
                u.set(f, Gf3::ONE);
                for (row, &p) in self.basis.iter().zip(&self.pivots) {
                    u.set(p, -row.get(f));
                }
                u
            })
            .collect();
        Subspace::span(self.n, &generators).expect("generators have ambient length")
    }

    /// All `3^dim` vectors, ordered by the base-3 index of their coordinates
    /// in the basis.
    pub fn elements(&self) -> impl Iterator<Item = TritVec> + '_ {
        (0..self.size()).map(move |mut k| {
            let mut v = TritVec::zeros(self.n);
            for row in &self.basis {
                v.add_scaled_assign(Gf3::from_int((k % 3) as i64), row);
                k /= 3;
            }
            v
        })
    }

    /// `self ∩ other = {0}`, decided by the rank of the stacked bases.
    pub fn meets_trivially(&self, other: &Subspace) -> bool {
        let stacked: Vec<TritVec> = self.basis.iter().chain(&other.basis).cloned().collect();
        crate::algebra::matrix::rank(&stacked) == self.dim() + other.dim()
    }

    /// Sizes of the sections `{x in W : y.x = k}` for `k = 0, 1, 2`.
    ///
    /// When `y` is not in the dual all three equal `3^(dim-1)`; otherwise the
    /// whole subspace lands in section 0.
    pub fn section_count(&self, y: &TritVec) -> Result<[usize; 3]> {
        if y.len() != self.n {
            return Err(Error::LengthMismatch {
                left: y.len(),
                right: self.n,
            });
        }
        let mut counts = [0usize; 3];
        for x in self.elements() {
            counts[y.dot_packed(&x).value() as usize] += 1;
        }
        Ok(counts)
    }
}

/// An ordered collection of pairwise disjoint `t`-dimensional subspaces of
/// `F_3^{2t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSpread {
    n: usize,
    t: usize,
    members: Vec<Subspace>,
}

impl PartialSpread {
    /// Validates dimensions and pairwise disjointness.
    pub fn new(n: usize, members: Vec<Subspace>) -> Result<Self> {
        if n == 0 || n % 2 == 1 {
            return Err(Error::OddDimension(n));
        }
        let t = n / 2;
        if members.len() > pow3(t) + 1 {
            return Err(Error::InvalidSpread(format!(
                "{} members exceed the maximum 3^{t}+1",
                members.len()
            )));
        }
        for (i, w) in members.iter().enumerate() {
            if w.ambient_dim() != n || w.dim() != t {
                return Err(Error::InvalidSpread(format!(
                    "member {i} has dimension {} in F_3^{}, expected {t} in F_3^{n}",
                    w.dim(),
                    w.ambient_dim()
                )));
            }
        }
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if !members[i].meets_trivially(&members[j]) {
                    return Err(Error::InvalidSpread(format!(
                        "members {i} and {j} intersect nontrivially"
                    )));
                }
            }
        }
        Ok(PartialSpread { n, t, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn member(&self, i: usize) -> Result<&Subspace> {
        self.members.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            bound: self.members.len(),
        })
    }

    /// A full spread has `3^t + 1` members and partitions the nonzero vectors.
    pub fn is_full(&self) -> bool {
        self.members.len() == pow3(self.t) + 1
    }

    /// For each vector index, the member whose dual contains it (index 0,
    /// the zero vector, maps to `None`). Only meaningful for full spreads,
    /// where the duals partition the nonzero vectors.
    pub fn dual_owner_table(&self) -> Vec<Option<usize>> {
        let mut owner = vec![None; pow3(self.n)];
        for (i, w) in self.members.iter().enumerate() {
            for u in w.dual().elements().filter(|u| !u.is_zero()) {
                owner[vec_index(&u)] = Some(i);
            }
        }
        owner
    }
}

/// The full spread of `F_3^{2t}` from the model `F_3^{2t} ≅ GF(3^t)^2`.
///
/// Members are `W_a = {(x, a x)}` for every `a` in `GF(3^t)`, ordered by the
/// index of `a`'s coefficient vector, followed by `W_∞ = {(0, y)}`.
pub fn spread_construct(t: usize) -> Result<PartialSpread> {
    if !(1..=4).contains(&t) {
        return Err(Error::SpreadOutOfRange(t));
    }
    let n = 2 * t;
    let monomials: Vec<ExtFieldElem> = (0..t)
        .map(|k| ExtFieldElem::new(TritVec::unit(t, k)))
        .collect::<Result<_>>()?;
    let mut members = Vec::with_capacity(pow3(t) + 1);
    for a in ExtFieldElem::all(t)? {
        let generators = monomials
            .iter()
            .map(|x| Ok(x.coeffs().concat(a.mul(x)?.coeffs())))
            .collect::<Result<Vec<_>>>()?;
        members.push(Subspace::span(n, &generators)?);
    }
    let infinity: Vec<TritVec> = (0..t)
        .map(|k| TritVec::zeros(t).concat(&TritVec::unit(t, k)))
        .collect();
    members.push(Subspace::span(n, &infinity)?);
    PartialSpread::new(n, members)
}
