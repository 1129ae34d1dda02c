//! Sublattices of Z^m in canonical form.
//!
//! For a diagonal action with character support chi_1, ..., chi_m, the
//! exponent vectors of invariant Laurent monomials form the lattice
//!
//! ```text
//! L = { a in Z^m : a_1 chi_1 + ... + a_m chi_m = 0 in the character group }
//! ```
//!
//! Everything downstream (degree bounds, extension indices, generator
//! witnesses) is a statement about L and its sublattices, so this module is
//! the semantic core. Bases are stored in row Hermite normal form, which is
//! unique per lattice: equality of lattices is equality of bases.

use crate::error::{Error, Result};
use crate::group::{AbelianGroup, CharSupport, Character};
use crate::linalg;

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    ambient: usize,
    /// Canonical Hermite basis rows; length is the rank.
    basis: Vec<Vec<i64>>,
}

impl Lattice {
    /// The lattice generated by the given vectors inside Z^ambient.
    pub fn from_generators(ambient: usize, generators: &[Vec<i64>]) -> Result<Self> {
        for g in generators {
            if g.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: g.len(),
                });
            }
        }
        let basis = linalg::hermite(generators.to_vec())?;
        Ok(Self { ambient, basis })
    }

    /// The lattice of exponent vectors with trivial weight against an
    /// arbitrary character list (duplicates and trivial characters allowed).
    ///
    /// Solves the relation system [C^T | diag(n_1, ..., n_k)] * (a, b)^T = 0
    /// over Z by Smith normal form and projects the kernel onto the exponent
    /// coordinates. Always full rank: n_j * e_i is a solution for every i.
    pub fn congruence_kernel(group: &AbelianGroup, chars: &[Character]) -> Result<Self> {
        let m = chars.len();
        let k = group.factors().len();
        for c in chars {
            if c.residues().len() != k {
                return Err(Error::CharacterShape {
                    expected: k,
                    got: c.residues().len(),
                });
            }
        }
        if k == 0 {
            // No congruence conditions at all.
            return Ok(Self {
                ambient: m,
                basis: linalg::identity(m),
            });
        }
        let mut relation = Vec::with_capacity(k);
        for (j, &n) in group.factors().iter().enumerate() {
            let mut row: Vec<i64> = chars.iter().map(|c| c.residues()[j]).collect();
            row.extend((0..k).map(|jj| if jj == j { n } else { 0 }));
            relation.push(row);
        }
        let kernel = linalg::smith(relation)?.kernel_basis(m + k);
        let projected: Vec<Vec<i64>> = kernel.into_iter().map(|v| v[..m].to_vec()).collect();
        let lattice = Self::from_generators(m, &projected)?;
        debug_assert_eq!(lattice.rank(), m, "congruence kernels are full rank");
        Ok(lattice)
    }

    /// The invariant lattice L of a reduced support. Errors when the support
    /// is empty, since a trivial action has no meaningful degree bounds.
    pub fn invariant(support: &CharSupport) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::TrivialSupport);
        }
        Self::congruence_kernel(support.group(), support.chars())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient
    }

    /// Canonical Hermite basis rows.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Index of the lattice in Z^ambient, defined only at full rank. The
    /// Hermite basis is triangular, so this is the product of its pivots.
    pub fn determinant(&self) -> Option<i64> {
        if !self.is_full_rank() {
            return None;
        }
        let mut det: i64 = 1;
        for (i, row) in self.basis.iter().enumerate() {
            det = det.checked_mul(row[i])?;
        }
        Some(det)
    }

    /// Coefficients of `v` in the canonical basis, or None when v is outside
    /// the lattice. Back-substitution along the triangular basis.
    pub fn coordinates(&self, v: &[i64]) -> Result<Option<Vec<i64>>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        coords_in_echelon(&self.basis, v)
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }
}

/// Solve v = sum coords_i * basis_i for an echelon basis with positive
/// pivots. Works for any rank; None when there is no integer solution.
fn coords_in_echelon(basis: &[Vec<i64>], v: &[i64]) -> Result<Option<Vec<i64>>> {
    let mut rem = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for row in basis {
        let p = row
            .iter()
            .position(|&x| x != 0)
            .expect("no zero basis rows");
        if rem[p] % row[p] != 0 {
            return Ok(None);
        }
        let q = rem[p] / row[p];
        if q != 0 {
            for (r, &x) in rem.iter_mut().zip(row) {
                *r = crate::arith::sub(*r, crate::arith::mul(q, x)?)?;
            }
        }
        coords.push(q);
    }
    if rem.iter().any(|&x| x != 0) {
        return Ok(None);
    }
    Ok(Some(coords))
}

/// A span grown point by point or shell by shell, kept in canonical Hermite
/// form throughout. Shared plumbing for the degree searches and the greedy
/// witness selection.
#[derive(Debug, Clone)]
pub(crate) struct SpanAccumulator {
    ambient: usize,
    basis: Vec<Vec<i64>>,
}

impl SpanAccumulator {
    pub(crate) fn new(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.basis.len()
    }

    pub(crate) fn absorb_rows(&mut self, rows: &[Vec<i64>]) -> Result<()> {
        if rows.is_empty() {
            return Ok(());
        }
        let mut stacked = std::mem::take(&mut self.basis);
        stacked.extend(rows.iter().cloned());
        self.basis = linalg::hermite(stacked)?;
        Ok(())
    }

    pub(crate) fn contains(&self, v: &[i64]) -> Result<bool> {
        debug_assert_eq!(v.len(), self.ambient);
        Ok(coords_in_echelon(&self.basis, v)?.is_some())
    }

    pub(crate) fn as_lattice(&self) -> Lattice {
        Lattice {
            ambient: self.ambient,
            basis: self.basis.clone(),
        }
    }

    /// Exact equality with a target lattice, via canonical bases.
    pub(crate) fn spans(&self, target: &Lattice) -> bool {
        self.ambient == target.ambient && self.basis == target.basis
    }

    pub(crate) fn determinant(&self) -> Option<i64> {
        self.as_lattice().determinant()
    }
}

/// Index of a sublattice: the order of the quotient when finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(i64),
    Infinite,
}

impl LatticeIndex {
    pub fn finite(self) -> Option<i64> {
        match self {
            LatticeIndex::Finite(n) => Some(n),
            LatticeIndex::Infinite => None,
        }
    }
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(n) => write!(f, "{n}"),
            LatticeIndex::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for LatticeIndex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LatticeIndex::Finite(n) => serializer.serialize_i64(*n),
            LatticeIndex::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for LatticeIndex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(i64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Number(n) => Ok(LatticeIndex::Finite(n)),
            Raw::Text(s) if s == "infinite" => Ok(LatticeIndex::Infinite),
            Raw::Text(s) => Err(D::Error::custom(format!("bad index value {s:?}"))),
        }
    }
}

/// The group index [sup : sub]. Errors with a witness vector when `sub` is
/// not contained in `sup`; infinite when the ranks differ.
///
/// At equal rank the sub basis is rewritten in the coordinates of the sup
/// basis and the index is the determinant of that square integer matrix,
/// read off its Smith normal form.
pub fn index_of(sub: &Lattice, sup: &Lattice) -> Result<LatticeIndex> {
    if sub.ambient_dim() != sup.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: sup.ambient_dim(),
            got: sub.ambient_dim(),
        });
    }
    let mut coeffs = Vec::with_capacity(sub.rank());
    for row in sub.basis() {
        match sup.coordinates(row)? {
            Some(c) => coeffs.push(c),
            None => {
                return Err(Error::NotSublattice {
                    witness: row.clone(),
                })
            }
        }
    }
    if sub.rank() < sup.rank() {
        return Ok(LatticeIndex::Infinite);
    }
    debug_assert_eq!(sub.rank(), sup.rank());
    let form = linalg::smith(coeffs.clone())?;
    if cfg!(debug_assertions) {
        // The diagonal is only trustworthy if the factorization is exact.
        let left = linalg::mat_mul(&form.row_transform, &coeffs)?;
        let product = linalg::mat_mul(&left, &form.col_transform)?;
        for (i, row) in product.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let expect = if i == j {
                    form.diagonal.get(i).copied().unwrap_or(0)
                } else {
                    0
                };
                debug_assert_eq!(x, expect, "Smith factorization mismatch at ({i}, {j})");
            }
        }
    }
    let mut index: i64 = 1;
    for d in form.diagonal {
        index = crate::arith::mul(index, d)?;
    }
    Ok(LatticeIndex::Finite(index))
}
