//! Human-auditable evidence for computed bounds.
//!
//! A lattice point a is the exponent vector of the Laurent monomial x^a;
//! rendering it as text makes certificates readable. A generation claim
//! "the degree-d points span the lattice" is backed by an explicit
//! certificate: a small generator set plus an integer matrix rewriting the
//! canonical basis in terms of the generators, verified by re-multiplying.
//!
//! The ratio decomposition covers the other direction of the reduction:
//! any invariant ratio of polynomials gives rise to semi-invariant
//! monomials of one common weight, and all their pairwise quotients are
//! invariant Laurent monomials, with controlled degree.

use crate::arith;
use crate::enumerate::{
    ball_points_budgeted, degree as l1_degree, Geometry, PointSet, DEFAULT_POINT_BUDGET,
};
use crate::error::{Error, Result};
use crate::group::{weight_of, AbelianGroup, CharSupport, Character, Weight};
use crate::lattice::{Lattice, SpanAccumulator};
use crate::linalg;

/// Renders the Laurent monomial x^a with the given variable names.
///
/// Positive exponents form the numerator, negative ones the denominator,
/// both in variable order; the denominator is parenthesized when it has
/// more than one factor. The origin renders as "1".
pub fn monomial_string(a: &[i64], names: &[String]) -> Result<String> {
    if a.len() != names.len() {
        return Err(Error::DimensionMismatch {
            expected: names.len(),
            got: a.len(),
        });
    }
    let side = |sign: i64| -> (usize, String) {
        let mut factors = Vec::new();
        for (x, name) in a.iter().zip(names) {
            let e = x * sign;
            if e == 1 {
                factors.push(name.clone());
            } else if e > 1 {
                factors.push(format!("{name}^{e}"));
            }
        }
        (factors.len(), factors.join("*"))
    };
    let (num_count, num) = side(1);
    let (den_count, den) = side(-1);
    Ok(match (num_count, den_count) {
        (0, 0) => "1".to_string(),
        (_, 0) => num,
        (0, 1) => format!("1/{den}"),
        (_, 1) if num_count > 0 => format!("{num}/{den}"),
        (0, _) => format!("1/({den})"),
        _ => format!("{num}/({den})"),
    })
}

/// Default variable names for a support: `x{residue}` over a single cyclic
/// factor (so Z/7 with characters 1,2,4 gets x1, x2, x4), positional
/// `x{i}` otherwise.
pub fn default_names(support: &CharSupport) -> Vec<String> {
    if support.group().factors().len() == 1 {
        support
            .chars()
            .iter()
            .map(|c| format!("x{}", c.residues()[0]))
            .collect()
    } else {
        (1..=support.len()).map(|i| format!("x{i}")).collect()
    }
}

/// Proof that the degree-bounded ball generates the lattice.
///
/// The identity `coefficients * generators = target_basis` holds exactly
/// and is re-verified on construction, so holding a certificate means the
/// generation claim has been checked, not merely computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCertificate {
    pub degree: i64,
    pub geometry: Geometry,
    pub generators: PointSet,
    pub coefficients: Vec<Vec<i64>>,
    pub target_basis: Vec<Vec<i64>>,
}

impl GeneratorCertificate {
    /// Monomial renderings of the generators, one per point.
    pub fn monomials(&self, names: &[String]) -> Result<Vec<String>> {
        self.generators
            .iter()
            .map(|p| monomial_string(p, names))
            .collect()
    }
}

pub fn generator_witness(
    support: &CharSupport,
    degree: i64,
    geometry: Geometry,
) -> Result<GeneratorCertificate> {
    generator_witness_budgeted(support, degree, geometry, DEFAULT_POINT_BUDGET)
}

/// Greedy sweep of the ball in (degree, lexicographic) order, keeping each
/// point that strictly enlarges the span so far, until the span is the
/// whole lattice. Then the canonical basis is rewritten over the kept
/// generators and the product is checked exactly.
pub fn generator_witness_budgeted(
    support: &CharSupport,
    degree: i64,
    geometry: Geometry,
    budget: u64,
) -> Result<GeneratorCertificate> {
    let lattice = Lattice::invariant(support)?;
    let m = lattice.ambient_dim();
    let ball = ball_points_budgeted(&lattice, degree, geometry, budget)?;
    let mut acc = SpanAccumulator::new(m);
    let mut generators: Vec<Vec<i64>> = Vec::new();
    for p in ball.iter() {
        if !acc.contains(p)? {
            acc.absorb_rows(std::slice::from_ref(p))?;
            generators.push(p.clone());
            if acc.spans(&lattice) {
                break;
            }
        }
    }
    if !acc.spans(&lattice) {
        return Err(Error::InsufficientDegree { degree });
    }

    let form = linalg::hermite_with_transform(generators.clone())?;
    let target_basis = lattice.basis().to_vec();
    if form.rank != m || form.rows != target_basis {
        return Err(Error::Internal(
            "canonical form of the witness span disagrees with the lattice basis".into(),
        ));
    }
    let coefficients: Vec<Vec<i64>> = form.transform[..form.rank].to_vec();
    let product = linalg::mat_mul(&coefficients, &generators)?;
    if product != target_basis {
        return Err(Error::Internal(
            "witness coefficient matrix does not reproduce the basis".into(),
        ));
    }
    Ok(GeneratorCertificate {
        degree,
        geometry,
        generators: PointSet::new(m, generators)?,
        coefficients,
        target_basis,
    })
}

/// The exponent-level content of writing one invariant as a ratio of sums
/// of monomials: all monomials share a weight, and every pairwise quotient
/// is an invariant Laurent monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioDecomposition {
    pub numerators: PointSet,
    pub denominators: PointSet,
    pub common_weight: Weight,
    pub invariant_ratios: PointSet,
}

/// `chars` lists the character of every variable of the representation,
/// duplicates and trivial entries included, since the monomials live in
/// the full variable set rather than the reduced support.
pub fn ratio_decomposition(
    group: &AbelianGroup,
    chars: &[Character],
    numerators: &[Vec<i64>],
    denominators: &[Vec<i64>],
) -> Result<RatioDecomposition> {
    if numerators.is_empty() || denominators.is_empty() {
        return Err(Error::EmptyMonomialList);
    }
    let dim = chars.len();
    let mut common: Option<Weight> = None;
    for v in numerators.iter().chain(denominators) {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
        if let Some(&bad) = v.iter().find(|&&x| x < 0) {
            return Err(Error::NegativeExponent(bad));
        }
        let w = weight_of(group, chars, v)?;
        match &common {
            None => common = Some(w),
            Some(c) if *c != w => {
                return Err(Error::WeightMismatch(
                    c.residues().to_vec(),
                    w.residues().to_vec(),
                ))
            }
            Some(_) => {}
        }
    }
    let common_weight = common.expect("both lists verified non-empty");

    let lattice = Lattice::congruence_kernel(group, chars)?;
    let mut ratios = Vec::with_capacity(numerators.len() * denominators.len());
    for n in numerators {
        for d in denominators {
            let mut diff = Vec::with_capacity(dim);
            for (a, b) in n.iter().zip(d) {
                diff.push(arith::sub(*a, *b)?);
            }
            if !lattice.contains(&diff)? {
                return Err(Error::Internal(format!(
                    "equal-weight quotient {diff:?} is not in the invariant lattice"
                )));
            }
            debug_assert!(
                l1_degree(&diff)? <= arith::add(l1_degree(n)?, l1_degree(d)?)?,
                "quotient degree exceeds the degree sum"
            );
            ratios.push(diff);
        }
    }
    Ok(RatioDecomposition {
        numerators: PointSet::new(dim, numerators.to_vec())?,
        denominators: PointSet::new(dim, denominators.to_vec())?,
        common_weight,
        invariant_ratios: PointSet::new(dim, ratios)?,
    })
}
