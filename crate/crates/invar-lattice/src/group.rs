//! Finite abelian groups and their characters, in residue form.
//!
//! A group is a product of cyclic factors Z/n_1 x ... x Z/n_k. A character of
//! such a group is determined by one residue per factor: the tuple
//! (c_1, ..., c_k) sends (g_1, ..., g_k) to zeta_1^(c_1 g_1) ... zeta_k^(c_k g_k)
//! with zeta_j a fixed primitive n_j-th root of unity. Characters add
//! componentwise mod the factor orders, so all downstream computation stays in
//! integer arithmetic.
//!
//! A diagonal action on m coordinate lines is described by the list of the m
//! characters acting on them. [`CharSupport`] holds that list after dropping
//! trivial characters and duplicates; the degree bound machinery only ever
//! depends on this reduced support.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    factors: Vec<i64>,
    order: i64,
}

impl AbelianGroup {
    /// Builds a group from its cyclic factor orders. Every factor must be at
    /// least 2; the empty product is the trivial group of order 1.
    pub fn new(factors: Vec<i64>) -> Result<Self> {
        let mut order: i64 = 1;
        for &n in &factors {
            if n < 2 {
                return Err(Error::InvalidFactorOrder(n));
            }
            order = arith::mul(order, n)?;
        }
        Ok(Self { factors, order })
    }

    pub fn cyclic(n: i64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Builds a character from raw integers, reducing each one into
    /// [0, n_j) so that negative inputs mean inverses.
    pub fn character(&self, residues: &[i64]) -> Result<Character> {
        if residues.len() != self.factors.len() {
            return Err(Error::CharacterShape {
                expected: self.factors.len(),
                got: residues.len(),
            });
        }
        let reduced = residues
            .iter()
            .zip(&self.factors)
            .map(|(&r, &n)| r.rem_euclid(n))
            .collect();
        Ok(Character { residues: reduced })
    }

    pub fn trivial_character(&self) -> Character {
        Character {
            residues: vec![0; self.factors.len()],
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial group");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// A character stored as one reduced residue per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character {
    residues: Vec<i64>,
}

impl Character {
    pub fn residues(&self) -> &[i64] {
        &self.residues
    }

    pub fn is_trivial(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }

    /// True when the character has order exactly two.
    pub fn is_involution(&self, group: &AbelianGroup) -> bool {
        debug_assert_eq!(self.residues.len(), group.factors.len());
        !self.is_trivial()
            && self
                .residues
                .iter()
                .zip(group.factors())
                .all(|(&r, &n)| (2 * r) % n == 0)
    }
}

/// The weight of an exponent vector: the character sum of a_i * chi_i.
/// Trivial weight means the corresponding Laurent monomial is invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    residues: Vec<i64>,
}

impl Weight {
    pub fn residues(&self) -> &[i64] {
        &self.residues
    }

    pub fn is_trivial(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

/// Weight of `exponents` against an arbitrary character list, which may
/// contain duplicates or trivial entries.
pub fn weight_of(group: &AbelianGroup, chars: &[Character], exponents: &[i64]) -> Result<Weight> {
    if exponents.len() != chars.len() {
        return Err(Error::DimensionMismatch {
            expected: chars.len(),
            got: exponents.len(),
        });
    }
    let mut residues = Vec::with_capacity(group.factors().len());
    for (j, &n) in group.factors().iter().enumerate() {
        let mut acc: i64 = 0;
        for (c, &a) in chars.iter().zip(exponents) {
            debug_assert_eq!(c.residues.len(), group.factors().len());
            // Reduce the exponent first so the product stays below n^2.
            let term = arith::mul(a.rem_euclid(n), c.residues[j])?;
            acc = arith::add(acc, term)? % n;
        }
        residues.push(acc.rem_euclid(n));
    }
    Ok(Weight { residues })
}

/// The reduced character support of a diagonal action: trivial characters
/// dropped, duplicates merged to their first occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharSupport {
    group: AbelianGroup,
    chars: Vec<Character>,
}

impl CharSupport {
    pub fn new(group: AbelianGroup, raw_chars: &[Vec<i64>]) -> Result<Self> {
        let mut chars: Vec<Character> = Vec::new();
        for raw in raw_chars {
            let c = group.character(raw)?;
            if !c.is_trivial() && !chars.contains(&c) {
                chars.push(c);
            }
        }
        Ok(Self { group, chars })
    }

    pub fn cyclic(n: i64, raw_chars: &[i64]) -> Result<Self> {
        let tuples: Vec<Vec<i64>> = raw_chars.iter().map(|&c| vec![c]).collect();
        Self::new(AbelianGroup::cyclic(n)?, &tuples)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn chars(&self) -> &[Character] {
        &self.chars
    }

    /// Number of distinct nontrivial characters, the ambient dimension of the
    /// invariant lattice.
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn weight(&self, exponents: &[i64]) -> Result<Weight> {
        weight_of(&self.group, &self.chars, exponents)
    }

    /// Order of the subgroup of the character group generated by the support,
    /// i.e. the order of the quotient of the group that acts faithfully.
    /// Computed by plain subgroup closure.
    pub fn effective_order(&self) -> i64 {
        let zero: Vec<i64> = vec![0; self.group.factors().len()];
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        seen.insert(zero.clone());
        let mut frontier = vec![zero];
        while let Some(x) = frontier.pop() {
            for c in &self.chars {
                let y: Vec<i64> = x
                    .iter()
                    .zip(&c.residues)
                    .zip(self.group.factors())
                    .map(|((&a, &b), &n)| (a + b) % n)
                    .collect();
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.len() as i64
    }

    pub fn all_involutions(&self) -> bool {
        self.chars.iter().all(|c| c.is_involution(&self.group))
    }
}
