//! Lattice point enumeration by L1 degree.
//!
//! The degree of a Laurent monomial x^a is |a_1| + ... + |a_m|, the total
//! degree of numerator plus denominator. Rational invariants live on the
//! whole lattice, so their degree-d points fill the cross-polytope ball
//! |a|_1 <= d; polynomial invariants are confined to the non-negative
//! orthant, the simplex a >= 0, sum a_i <= d.
//!
//! Enumeration walks coordinates left to right against the triangular
//! Hermite basis of the (full-rank) lattice. Fixing a prefix a_1..a_j forces
//! the basis coefficients c_1..c_j one by one; whenever the forced division
//! fails there is no lattice point under that prefix at all, so whole
//! subtrees are pruned without being visited. In particular the final
//! coordinate is solved directly from a congruence instead of scanned.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// Which degree-d body the enumeration fills.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Geometry {
    /// All integer points with |a|_1 <= d: Laurent monomials, rational case.
    CrossPolytope,
    /// Non-negative points with sum <= d: ordinary monomials, polynomial case.
    Simplex,
}

impl std::fmt::Display for Geometry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Geometry::CrossPolytope => write!(f, "cross"),
            Geometry::Simplex => write!(f, "simplex"),
        }
    }
}

/// Default cap on points produced by a single enumeration call.
pub const DEFAULT_POINT_BUDGET: u64 = 10_000_000;

/// An ordered list of exponent vectors with cached degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    ambient: usize,
    points: Vec<Vec<i64>>,
    degrees: Vec<i64>,
}

impl PointSet {
    pub fn new(ambient: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(points.len());
        for p in &points {
            if p.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: p.len(),
                });
            }
            degrees.push(degree(p)?);
        }
        Ok(Self {
            ambient,
            points,
            degrees,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.points.iter()
    }
}

/// L1 norm, checked.
pub fn degree(v: &[i64]) -> Result<i64> {
    let mut acc: i64 = 0;
    for &x in v {
        acc = arith::add(acc, arith::abs(x)?)?;
    }
    Ok(acc)
}

/// All lattice points of degree exactly `d`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shell {
    pub degree: i64,
    pub points: PointSet,
}

pub fn shell_points(lattice: &Lattice, degree: i64, geometry: Geometry) -> Result<Shell> {
    shell_points_budgeted(lattice, degree, geometry, DEFAULT_POINT_BUDGET)
}

pub fn shell_points_budgeted(
    lattice: &Lattice,
    degree: i64,
    geometry: Geometry,
    budget: u64,
) -> Result<Shell> {
    let mut walker = Walker::new(lattice, geometry, budget)?;
    walker.walk_shell(degree)?;
    Ok(Shell {
        degree,
        points: PointSet::new(lattice.ambient_dim(), walker.out)?,
    })
}

/// Union of shells 0..=d, ordered by degree and lexicographically within
/// each degree. The budget caps the total point count of the call.
pub fn ball_points(lattice: &Lattice, degree: i64, geometry: Geometry) -> Result<PointSet> {
    ball_points_budgeted(lattice, degree, geometry, DEFAULT_POINT_BUDGET)
}

pub fn ball_points_budgeted(
    lattice: &Lattice,
    degree: i64,
    geometry: Geometry,
    budget: u64,
) -> Result<PointSet> {
    if degree < 0 {
        return Err(Error::NegativeDegree(degree));
    }
    let mut walker = Walker::new(lattice, geometry, budget)?;
    for d in 0..=degree {
        walker.walk_shell(d)?;
    }
    PointSet::new(lattice.ambient_dim(), walker.out)
}

struct Walker<'a> {
    basis: &'a [Vec<i64>],
    m: usize,
    geometry: Geometry,
    budget: u64,
    emitted: u64,
    shell_degree: i64,
    /// sums[j] = contribution of the already fixed coefficients to column j.
    sums: Vec<i64>,
    prefix: Vec<i64>,
    out: Vec<Vec<i64>>,
}

impl<'a> Walker<'a> {
    fn new(lattice: &'a Lattice, geometry: Geometry, budget: u64) -> Result<Self> {
        if !lattice.is_full_rank() {
            return Err(Error::NotFullRank {
                rank: lattice.rank(),
                dim: lattice.ambient_dim(),
            });
        }
        Ok(Self {
            basis: lattice.basis(),
            m: lattice.ambient_dim(),
            geometry,
            budget,
            emitted: 0,
            shell_degree: 0,
            sums: vec![0; lattice.ambient_dim()],
            prefix: Vec::with_capacity(lattice.ambient_dim()),
            out: Vec::new(),
        })
    }

    fn walk_shell(&mut self, degree: i64) -> Result<()> {
        if degree < 0 {
            return Err(Error::NegativeDegree(degree));
        }
        self.shell_degree = degree;
        if self.m == 0 {
            if degree == 0 {
                self.emit()?;
            }
            return Ok(());
        }
        self.descend(0, degree)
    }

    fn emit(&mut self) -> Result<()> {
        if self.emitted == self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
                degree: self.shell_degree,
            });
        }
        self.emitted += 1;
        self.out.push(self.prefix.clone());
        Ok(())
    }

    /// Whether fixing coordinate `j` to `value` admits a basis coefficient;
    /// pushes the coordinate and updates column contributions when it does.
    fn try_fix(&mut self, j: usize, value: i64) -> Result<bool> {
        let pivot = self.basis[j][j];
        let num = arith::sub(value, self.sums[j])?;
        if num % pivot != 0 {
            return Ok(false);
        }
        let c = num / pivot;
        if c != 0 {
            for col in j + 1..self.m {
                let t = arith::mul(c, self.basis[j][col])?;
                self.sums[col] = arith::add(self.sums[col], t)?;
            }
        }
        self.prefix.push(value);
        Ok(true)
    }

    fn unfix(&mut self, j: usize, value: i64) -> Result<()> {
        self.prefix.pop();
        let pivot = self.basis[j][j];
        let c = (value - self.sums[j]) / pivot;
        if c != 0 {
            for col in j + 1..self.m {
                let t = arith::mul(c, self.basis[j][col])?;
                self.sums[col] = arith::sub(self.sums[col], t)?;
            }
        }
        Ok(())
    }

    fn descend(&mut self, j: usize, remaining: i64) -> Result<()> {
        if j == self.m - 1 {
            // Last coordinate: degree must land exactly, so at most two
            // candidates, checked against the forced congruence.
            let candidates: &[i64] = match (self.geometry, remaining) {
                (_, 0) => &[0],
                (Geometry::CrossPolytope, r) => &[-r, r],
                (Geometry::Simplex, r) => &[r],
            };
            for &value in candidates {
                if self.try_fix(j, value)? {
                    let emitted = self.emit();
                    self.unfix(j, value)?;
                    emitted?;
                }
            }
            return Ok(());
        }
        let lo = match self.geometry {
            Geometry::CrossPolytope => -remaining,
            Geometry::Simplex => 0,
        };
        for value in lo..=remaining {
            if self.try_fix(j, value)? {
                let result = self.descend(j + 1, remaining - value.abs());
                self.unfix(j, value)?;
                result?;
            }
        }
        Ok(())
    }
}
