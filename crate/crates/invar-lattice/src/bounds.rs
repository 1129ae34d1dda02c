//! Degree bounds for rational and polynomial invariants.
//!
//! For a support S of m distinct nontrivial characters, the functions here
//! compute four numbers on the invariant lattice L = L(G,S):
//!
//! * gamma_rational: least d with m independent lattice points of degree
//!   at most d (cross-polytope); degree-d rational invariants contain a
//!   transcendence basis. Equals the largest successive minimum of the
//!   L1 ball with respect to L.
//! * beta_rational: least d with the degree-at-most-d points generating L
//!   as a group; degree-d rational invariants generate the invariant field.
//! * gamma_poly, beta_poly: the same searches over the simplex (ordinary
//!   monomials only).
//!
//! Every search is capped at the effective group order, which bounds
//! beta_poly (the invariant ring is generated in degree at most the group
//! order in coprime characteristic), so exhausting the cap is reported as
//! an internal error rather than an answer.
//!
//! [`verify_all`] assembles the full report and then re-checks every
//! closed-form inequality the theory guarantees. A failed check is a
//! loud, structured error: it means the code or the theory is wrong, and
//! either way it must not pass silently.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::enumerate::{shell_points_budgeted, Geometry, DEFAULT_POINT_BUDGET};
use crate::error::{Error, Result};
use crate::group::CharSupport;
use crate::lattice::{Lattice, LatticeIndex, SpanAccumulator};
use crate::witness::{default_names, generator_witness_budgeted};

/// Version tag carried by every serialized report.
pub const REPORT_SCHEMA: &str = "invar-lattice/1";

/// An exact non-negative rational, reduced, with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    numerator: i64,
    denominator: i64,
}

impl Rational {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator <= 0 || numerator < 0 {
            return Err(Error::Internal(format!(
                "rational {numerator}/{denominator} out of the supported range"
            )));
        }
        let g = arith::gcd(numerator, denominator).max(1);
        Ok(Self {
            numerator: numerator / g,
            denominator: denominator / g,
        })
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn is_integer(&self) -> bool {
        self.denominator == 1
    }

    /// Whether the integer k is less than or equal to this rational.
    pub fn at_least(&self, k: i64) -> Result<bool> {
        Ok(arith::mul(k, self.denominator)? <= self.numerator)
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Minima, thresholds, and extension indices collected in one degree scan.
struct DegreeProfile {
    /// minima[i] = least d with i+1 independent points of degree <= d.
    minima: Vec<i64>,
    gamma: i64,
    /// Present when the scan ran to full generation.
    beta: Option<i64>,
    /// Extension index per degree, gamma..=beta, when beta was computed.
    indices: BTreeMap<i64, i64>,
}

/// Accumulate shells degree by degree until the span has full rank
/// (`to_span` false) or is the whole lattice (`to_span` true).
fn scan_profile(
    lattice: &Lattice,
    geometry: Geometry,
    cap: i64,
    budget: u64,
    to_span: bool,
) -> Result<DegreeProfile> {
    let m = lattice.ambient_dim();
    let det_lattice = lattice
        .determinant()
        .ok_or_else(|| Error::Internal("degree scan requires a full-rank lattice".into()))?;
    let mut acc = SpanAccumulator::new(m);
    let mut minima: Vec<i64> = Vec::with_capacity(m);
    let mut gamma = None;
    let mut indices = BTreeMap::new();
    for d in 1..=cap {
        let shell = shell_points_budgeted(lattice, d, geometry, budget)?;
        if !shell.points.is_empty() {
            acc.absorb_rows(shell.points.points())?;
        }
        let rank = acc.rank();
        while minima.len() < rank {
            minima.push(d);
        }
        if rank < m {
            continue;
        }
        if gamma.is_none() {
            gamma = Some(d);
            if !to_span {
                break;
            }
        }
        let det_span = acc
            .determinant()
            .ok_or_else(|| Error::Internal("full-rank span lost its determinant".into()))?;
        if det_span % det_lattice != 0 {
            return Err(Error::Internal(format!(
                "span determinant {det_span} is not a multiple of the lattice determinant {det_lattice}"
            )));
        }
        let index = det_span / det_lattice;
        indices.insert(d, index);
        if index == 1 {
            debug_assert!(acc.spans(lattice));
            return Ok(DegreeProfile {
                minima,
                gamma: gamma.expect("set at full rank"),
                beta: Some(d),
                indices,
            });
        }
    }
    match (gamma, to_span) {
        (Some(g), false) => Ok(DegreeProfile {
            minima,
            gamma: g,
            beta: None,
            indices,
        }),
        _ => Err(Error::Internal(format!(
            "degree search for {geometry} geometry exhausted the cap {cap} without finishing; \
             this contradicts the group-order generation bound"
        ))),
    }
}

fn invariant_lattice_checked(support: &CharSupport) -> Result<Lattice> {
    let lattice = Lattice::invariant(support)?;
    let eff = support.effective_order();
    if lattice.determinant() != Some(eff) {
        return Err(Error::Internal(format!(
            "lattice determinant {:?} disagrees with the effective order {eff}",
            lattice.determinant()
        )));
    }
    Ok(lattice)
}

pub fn gamma_rational(support: &CharSupport) -> Result<i64> {
    gamma_rational_budgeted(support, DEFAULT_POINT_BUDGET)
}

pub fn gamma_rational_budgeted(support: &CharSupport, budget: u64) -> Result<i64> {
    let lattice = invariant_lattice_checked(support)?;
    let cap = support.effective_order();
    Ok(scan_profile(&lattice, Geometry::CrossPolytope, cap, budget, false)?.gamma)
}

pub fn beta_rational(support: &CharSupport) -> Result<i64> {
    beta_rational_budgeted(support, DEFAULT_POINT_BUDGET)
}

pub fn beta_rational_budgeted(support: &CharSupport, budget: u64) -> Result<i64> {
    let lattice = invariant_lattice_checked(support)?;
    let cap = support.effective_order();
    let profile = scan_profile(&lattice, Geometry::CrossPolytope, cap, budget, true)?;
    Ok(profile.beta.expect("full scan always sets beta"))
}

pub fn gamma_poly(support: &CharSupport) -> Result<i64> {
    let lattice = invariant_lattice_checked(support)?;
    let cap = support.effective_order();
    let profile = scan_profile(
        &lattice,
        Geometry::Simplex,
        cap,
        DEFAULT_POINT_BUDGET,
        false,
    )?;
    Ok(profile.gamma)
}

pub fn beta_poly(support: &CharSupport) -> Result<i64> {
    let lattice = invariant_lattice_checked(support)?;
    let cap = support.effective_order();
    let profile = scan_profile(&lattice, Geometry::Simplex, cap, DEFAULT_POINT_BUDGET, true)?;
    Ok(profile.beta.expect("full scan always sets beta"))
}

/// Successive minima of the L1 ball with respect to L(G,S); the last entry
/// is gamma_rational.
pub fn successive_minima(support: &CharSupport) -> Result<Vec<i64>> {
    successive_minima_budgeted(support, DEFAULT_POINT_BUDGET)
}

pub fn successive_minima_budgeted(support: &CharSupport, budget: u64) -> Result<Vec<i64>> {
    let lattice = invariant_lattice_checked(support)?;
    let cap = support.effective_order();
    Ok(scan_profile(&lattice, Geometry::CrossPolytope, cap, budget, false)?.minima)
}

/// The index of the span of the degree-at-most-d points inside L(G,S):
/// the degree of the invariant field over the subfield generated in
/// degree at most d. Infinite while the span has deficient rank.
pub fn extension_index(
    support: &CharSupport,
    degree: i64,
    geometry: Geometry,
) -> Result<LatticeIndex> {
    extension_index_budgeted(support, degree, geometry, DEFAULT_POINT_BUDGET)
}

pub fn extension_index_budgeted(
    support: &CharSupport,
    degree: i64,
    geometry: Geometry,
    budget: u64,
) -> Result<LatticeIndex> {
    if degree < 0 {
        return Err(Error::NegativeDegree(degree));
    }
    let lattice = invariant_lattice_checked(support)?;
    let m = lattice.ambient_dim();
    let det_lattice = lattice
        .determinant()
        .expect("invariant lattices are full rank");
    let mut acc = SpanAccumulator::new(m);
    for d in 1..=degree {
        let shell = shell_points_budgeted(&lattice, d, geometry, budget)?;
        if !shell.points.is_empty() {
            acc.absorb_rows(shell.points.points())?;
        }
    }
    if acc.rank() < m {
        return Ok(LatticeIndex::Infinite);
    }
    let det_span = acc
        .determinant()
        .ok_or_else(|| Error::Internal("full-rank span lost its determinant".into()))?;
    if det_span % det_lattice != 0 {
        return Err(Error::Internal(format!(
            "span determinant {det_span} is not a multiple of the lattice determinant {det_lattice}"
        )));
    }
    Ok(LatticeIndex::Finite(det_span / det_lattice))
}

/// Smallest integer d with d^m at least `effective_order`: the integer form
/// of the m-th-root lower bound on gamma_rational.
pub fn root_lower_bound(effective_order: i64, m: usize) -> Result<i64> {
    if m == 0 || effective_order < 1 {
        return Err(Error::Internal(format!(
            "root_lower_bound needs m >= 1 and a positive order, got m={m}, order={effective_order}"
        )));
    }
    let mut lo = 1i64;
    let mut hi = effective_order;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if arith::pow_at_least(mid, m, effective_order) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

/// 2 when every support character is an involution, else 3: the
/// unconditional floor under gamma_rational.
pub fn hard_floor(support: &CharSupport) -> Result<i64> {
    if support.is_empty() {
        return Err(Error::TrivialSupport);
    }
    Ok(if support.all_involutions() { 2 } else { 3 })
}

/// Whether the instance meets the m-th-root bound with equality. Equality
/// forces L = gamma * Z^m, equivalently the effective group is (Z/gamma)^m
/// with the support characters a basis; that structure is re-verified and
/// a failure is an internal error.
pub fn check_extremal(support: &CharSupport, gamma_r: i64) -> Result<bool> {
    let m = support.len();
    if m == 0 {
        return Err(Error::TrivialSupport);
    }
    let eff = support.effective_order();
    let reaches = arith::pow_at_least(gamma_r, m, eff);
    let exceeds = arith::pow_at_least(gamma_r, m, arith::add(eff, 1)?);
    let extremal = reaches && !exceeds;
    if extremal {
        let lattice = invariant_lattice_checked(support)?;
        let scaled_identity = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| if i == j { gamma_r } else { 0 })
                    .collect::<Vec<i64>>()
            })
            .collect::<Vec<_>>();
        if lattice.basis() != scaled_identity {
            return Err(Error::Internal(format!(
                "extremal instance does not have lattice {gamma_r}*Z^{m}; basis {:?}",
                lattice.basis()
            )));
        }
    }
    Ok(extremal)
}

/// The support S_m of Z/n: paired characters one and minus one, two and
/// minus two, and so on; an odd m tops the pairs up with (m+1)/2.
pub fn family_support(n: i64, m: i64) -> Result<CharSupport> {
    if n < 3 {
        return Err(Error::InvalidFamily {
            n,
            m,
            reason: "n must be at least 3".into(),
        });
    }
    if m < 1 || m >= n {
        return Err(Error::InvalidFamily {
            n,
            m,
            reason: "m must satisfy 1 <= m < n".into(),
        });
    }
    let mut residues = Vec::with_capacity(m as usize);
    for i in 1..=m / 2 {
        residues.push(i);
        residues.push(n - i);
    }
    if m % 2 == 1 {
        residues.push((m + 1) / 2);
    }
    let support = CharSupport::cyclic(n, &residues)?;
    if support.len() != m as usize {
        return Err(Error::InvalidFamily {
            n,
            m,
            reason: format!(
                "the construction yields only {} distinct nontrivial characters",
                support.len()
            ),
        });
    }
    Ok(support)
}

/// The sharp value of both rational bounds on the family instance:
/// max(3, ceil(n / ceil(m/2))).
pub fn family_value(n: i64, m: i64) -> Result<i64> {
    if n < 3 || m < 1 || m >= n {
        return Err(Error::InvalidFamily {
            n,
            m,
            reason: "need n >= 3 and 1 <= m < n".into(),
        });
    }
    let half = (m + 1) / 2;
    Ok(3.max((n + half - 1) / half))
}

/// Right side of the successive-minima upper bound for a prime effective
/// order p: m! p / (2^floor(m/2) * 3^(ceil(m/2) - 1)), as an exact rational.
pub fn minkowski_rhs(m: usize, p: i64) -> Result<Rational> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::Internal("minkowski_rhs needs m >= 1".into()));
    }
    let numerator = arith::mul(arith::factorial(m)?, p)?;
    let mut denominator = 1i64;
    for _ in 0..m / 2 {
        denominator = arith::mul(denominator, 2)?;
    }
    for _ in 0..m.div_ceil(2) - 1 {
        denominator = arith::mul(denominator, 3)?;
    }
    Rational::new(numerator, denominator)
}

/// Closed-form reference values re-checked against the computed bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoreticalChecks {
    pub root_lower_bound: i64,
    pub hard_floor: i64,
    pub involution_only: bool,
    /// Sharp value when the instance is a family instance of Z/n.
    pub family_value: Option<i64>,
    /// Successive-minima upper bound when the effective order is prime.
    pub minkowski_rhs: Option<Rational>,
    pub noether_cap: i64,
    pub extremal: bool,
}

/// A generator witness in report form: the chosen points, their monomial
/// renderings, and the exact rewrite of the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessData {
    pub geometry: Geometry,
    pub degree: i64,
    pub generators: Vec<Vec<i64>>,
    pub monomials: Vec<String>,
    pub coefficients: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportWitnesses {
    pub rational: WitnessData,
    pub polynomial: WitnessData,
}

/// Everything computed for one (G, S) instance, cross-validated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub schema: String,
    pub group: String,
    pub factors: Vec<i64>,
    pub support: Vec<Vec<i64>>,
    pub effective_order: i64,
    pub beta_r: i64,
    pub gamma_r: i64,
    pub beta_poly: i64,
    pub gamma_poly: i64,
    pub successive_minima: Vec<i64>,
    /// Cross-polytope extension index per degree, gamma_r..=beta_r.
    pub extension_indices: BTreeMap<i64, i64>,
    pub theoretical: TheoreticalChecks,
    pub witnesses: ReportWitnesses,
    /// Standing caveat: the rational bounds assume scalars with enough
    /// roots of unity. Over a field whose only roots of unity are 1 and
    /// minus 1, rational generators cannot beat polynomial ones, so
    /// beta_r coincides with beta_poly there.
    pub real_field_note: bool,
}

/// When the instance is a cyclic-group family instance, its sharp value.
fn family_value_if_applicable(support: &CharSupport) -> Result<Option<i64>> {
    let group = support.group();
    if group.factors().len() != 1 {
        return Ok(None);
    }
    let n = group.order();
    let m = support.len() as i64;
    if n < 3 || m < 1 || m >= n {
        return Ok(None);
    }
    let family = match family_support(n, m) {
        Ok(f) => f,
        Err(Error::InvalidFamily { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut ours: Vec<i64> = support.chars().iter().map(|c| c.residues()[0]).collect();
    let mut theirs: Vec<i64> = family.chars().iter().map(|c| c.residues()[0]).collect();
    ours.sort_unstable();
    theirs.sort_unstable();
    if ours == theirs {
        Ok(Some(family_value(n, m)?))
    } else {
        Ok(None)
    }
}

/// Whether the support is exactly two characters that are mutually
/// inverse, the single configuration exempt from the prime upper bound.
fn inverse_pair(support: &CharSupport) -> bool {
    if support.len() != 2 {
        return false;
    }
    let group = support.group();
    let a = support.chars()[0].residues();
    let b = support.chars()[1].residues();
    a.iter()
        .zip(b)
        .zip(group.factors())
        .all(|((x, y), n)| (x + y) % n == 0)
}

pub fn verify_all(support: &CharSupport) -> Result<BoundsReport> {
    verify_all_budgeted(support, DEFAULT_POINT_BUDGET)
}

/// Full computation plus the complete battery of theoretical checks.
/// Any violated inequality aborts with a structured error carrying the
/// serialized instance; such an error always signals a bug.
pub fn verify_all_budgeted(support: &CharSupport, budget: u64) -> Result<BoundsReport> {
    let m = support.len();
    if m == 0 {
        return Err(Error::TrivialSupport);
    }
    let lattice = invariant_lattice_checked(support)?;
    let eff = support.effective_order();
    let cap = eff;

    let cross = scan_profile(&lattice, Geometry::CrossPolytope, cap, budget, true)?;
    let simplex = scan_profile(&lattice, Geometry::Simplex, cap, budget, true)?;
    let gamma_r = cross.gamma;
    let beta_r = cross.beta.expect("full scan always sets beta");
    let gamma_p = simplex.gamma;
    let beta_p = simplex.beta.expect("full scan always sets beta");
    let minima = cross.minima.clone();

    let rational_witness =
        generator_witness_budgeted(support, beta_r, Geometry::CrossPolytope, budget)?;
    let polynomial_witness =
        generator_witness_budgeted(support, beta_p, Geometry::Simplex, budget)?;
    let names = default_names(support);

    let involution_only = support.all_involutions();
    let floor = hard_floor(support)?;
    let rlb = root_lower_bound(eff, m)?;
    let extremal = check_extremal(support, gamma_r)?;
    let family = family_value_if_applicable(support)?;
    let mink = if arith::is_prime(eff) {
        Some(minkowski_rhs(m, eff)?)
    } else {
        None
    };

    let mut violations: Vec<String> = Vec::new();
    let mut require = |ok: bool, what: String| {
        if !ok {
            violations.push(what);
        }
    };

    require(
        gamma_r <= beta_r,
        format!("gamma_r {gamma_r} > beta_r {beta_r}"),
    );
    require(
        gamma_r <= gamma_p,
        format!("gamma_r {gamma_r} > gamma_poly {gamma_p}"),
    );
    require(
        gamma_p <= beta_p,
        format!("gamma_poly {gamma_p} > beta_poly {beta_p}"),
    );
    require(
        beta_r <= beta_p,
        format!("beta_r {beta_r} > beta_poly {beta_p}"),
    );
    require(
        minima.last() == Some(&gamma_r),
        format!(
            "largest successive minimum {:?} is not gamma_r {gamma_r}",
            minima.last()
        ),
    );
    require(
        arith::pow_at_least(gamma_r, m, eff),
        format!("gamma_r {gamma_r} fails the m-th-root bound for order {eff}"),
    );
    require(
        gamma_r >= floor,
        format!("gamma_r {gamma_r} is below the hard floor {floor}"),
    );
    require(
        involution_only == (gamma_r == 2),
        format!("gamma_r {gamma_r} disagrees with the involution criterion {involution_only}"),
    );
    require(
        minima.len() == m,
        format!("{} minima for m = {m}", minima.len()),
    );
    require(
        minima.windows(2).all(|w| w[0] <= w[1]),
        format!("successive minima {minima:?} are not non-decreasing"),
    );
    require(
        minima.first().is_some_and(|&l| l >= 2),
        format!("first successive minimum {:?} is below 2", minima.first()),
    );
    if eff % 2 == 1 {
        for (i, &l) in minima.iter().enumerate() {
            if i + 1 > m / 2 {
                require(
                    l >= 3,
                    format!("odd effective order {eff} but minimum {} is {l}", i + 1),
                );
            }
        }
    }
    match minima
        .iter()
        .try_fold(1i64, |acc, &l| arith::mul(acc, l))
        .and_then(|prod| Ok((prod, arith::mul(arith::factorial(m)?, eff)?)))
    {
        Ok((prod, limit)) => require(
            prod <= limit,
            format!("minima product {prod} exceeds m! times the determinant {limit}"),
        ),
        Err(_) => require(
            false,
            "minima product overflows the Minkowski budget".into(),
        ),
    }
    if let Some(rhs) = &mink {
        match rhs.at_least(gamma_r) {
            Ok(ok) => require(
                ok,
                format!("gamma_r {gamma_r} exceeds the successive-minima bound {rhs}"),
            ),
            Err(_) => require(
                false,
                "successive-minima bound comparison overflowed".into(),
            ),
        }
    }
    if arith::is_prime(eff) && (m >= 3 || (m == 2 && !inverse_pair(support))) {
        require(
            2 * beta_r <= eff + 3,
            format!("beta_r {beta_r} exceeds (p+3)/2 for p = {eff}"),
        );
    }
    if let Some(value) = family {
        require(
            beta_r == value && gamma_r == value,
            format!(
                "family instance predicts {value}, computed beta_r {beta_r}, gamma_r {gamma_r}"
            ),
        );
    }
    require(
        beta_p <= eff,
        format!("beta_poly {beta_p} exceeds the cap {eff}"),
    );
    require(
        cross.indices.get(&beta_r) == Some(&1),
        format!(
            "extension index at beta_r is {:?}",
            cross.indices.get(&beta_r)
        ),
    );
    for (d, idx) in &cross.indices {
        require(
            *d >= beta_r || *idx > 1,
            format!("extension index {idx} at degree {d} below beta_r {beta_r}"),
        );
    }
    require(
        cross
            .indices
            .values()
            .zip(cross.indices.values().skip(1))
            .all(|(a, b)| a >= b),
        format!(
            "extension indices {:?} are not non-increasing",
            cross.indices
        ),
    );

    if !violations.is_empty() {
        let factors = support.group().factors().to_vec();
        let chars: Vec<Vec<i64>> = support
            .chars()
            .iter()
            .map(|c| c.residues().to_vec())
            .collect();
        return Err(Error::TheoryViolation(format!(
            "{} (instance: factors={factors:?}, chars={chars:?})",
            violations.join("; ")
        )));
    }

    Ok(BoundsReport {
        schema: REPORT_SCHEMA.to_string(),
        group: support.group().to_string(),
        factors: support.group().factors().to_vec(),
        support: support
            .chars()
            .iter()
            .map(|c| c.residues().to_vec())
            .collect(),
        effective_order: eff,
        beta_r,
        gamma_r,
        beta_poly: beta_p,
        gamma_poly: gamma_p,
        successive_minima: minima,
        extension_indices: cross.indices,
        theoretical: TheoreticalChecks {
            root_lower_bound: rlb,
            hard_floor: floor,
            involution_only,
            family_value: family,
            minkowski_rhs: mink,
            noether_cap: cap,
            extremal,
        },
        witnesses: ReportWitnesses {
            rational: WitnessData {
                geometry: Geometry::CrossPolytope,
                degree: rational_witness.degree,
                monomials: rational_witness.monomials(&names)?,
                generators: rational_witness.generators.points().to_vec(),
                coefficients: rational_witness.coefficients,
            },
            polynomial: WitnessData {
                geometry: Geometry::Simplex,
                degree: polynomial_witness.degree,
                monomials: polynomial_witness.monomials(&names)?,
                generators: polynomial_witness.generators.points().to_vec(),
                coefficients: polynomial_witness.coefficients,
            },
        },
        real_field_note: true,
    })
}

/// One cell of the family sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub n: i64,
    pub m: i64,
    pub predicted: i64,
    pub beta_r: i64,
    pub gamma_r: i64,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Rational bounds across the family grid, one row per valid (n, m) cell,
/// computed on a small worker pool. Cells whose construction collapses
/// (duplicate characters) are skipped; rows come back sorted by (n, m)
/// regardless of worker count.
pub fn family_sweep(
    n_range: (i64, i64),
    m_range: (i64, i64),
    workers: usize,
    budget: u64,
) -> Result<Vec<FamilyRow>> {
    let (n_lo, n_hi) = n_range;
    let (m_lo, m_hi) = m_range;
    if n_lo < 3 || n_hi < n_lo || m_lo < 1 || m_hi < m_lo {
        return Err(Error::InvalidFamily {
            n: n_lo,
            m: m_lo,
            reason: format!("bad sweep ranges n={n_lo}:{n_hi}, m={m_lo}:{m_hi}"),
        });
    }
    let mut cells: Vec<(i64, i64, CharSupport)> = Vec::new();
    for n in n_lo..=n_hi {
        for m in m_lo..=m_hi.min(n - 1) {
            match family_support(n, m) {
                Ok(support) => cells.push((n, m, support)),
                Err(Error::InvalidFamily { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
    }

    let next = AtomicUsize::new(0);
    let collected: Mutex<Vec<(usize, Result<FamilyRow>)>> =
        Mutex::new(Vec::with_capacity(cells.len()));
    let pool = workers.max(1).min(cells.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..pool {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some((n, m, support)) = cells.get(i) else {
                    break;
                };
                let row = family_cell(*n, *m, support, budget);
                collected
                    .lock()
                    .expect("family sweep collector poisoned")
                    .push((i, row));
            });
        }
    });
    let mut slots = collected
        .into_inner()
        .expect("family sweep collector poisoned");
    slots.sort_by_key(|(i, _)| *i);
    slots.into_iter().map(|(_, row)| row).collect()
}

fn family_cell(n: i64, m: i64, support: &CharSupport, budget: u64) -> Result<FamilyRow> {
    let lattice = invariant_lattice_checked(support)?;
    let cap = support.effective_order();
    let profile = scan_profile(&lattice, Geometry::CrossPolytope, cap, budget, true)?;
    let beta_r = profile.beta.expect("full scan always sets beta");
    let gamma_r = profile.gamma;
    let predicted = family_value(n, m)?;
    Ok(FamilyRow {
        n,
        m,
        predicted,
        beta_r,
        gamma_r,
        matches: beta_r == predicted && gamma_r == predicted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z7() -> CharSupport {
        CharSupport::cyclic(7, &[1, 2, 4]).unwrap()
    }

    #[test]
    fn z7_bounds() {
        let s = z7();
        assert_eq!(gamma_rational(&s).unwrap(), 3);
        assert_eq!(beta_rational(&s).unwrap(), 3);
        assert_eq!(gamma_poly(&s).unwrap(), 4);
        assert_eq!(beta_poly(&s).unwrap(), 4);
        assert_eq!(successive_minima(&s).unwrap(), vec![3, 3, 3]);
    }

    #[test]
    fn z7_extension_indices() {
        let s = z7();
        assert_eq!(
            extension_index(&s, 3, Geometry::Simplex).unwrap(),
            LatticeIndex::Infinite
        );
        assert_eq!(
            extension_index(&s, 4, Geometry::Simplex).unwrap(),
            LatticeIndex::Finite(1)
        );
        assert_eq!(
            extension_index(&s, 3, Geometry::CrossPolytope).unwrap(),
            LatticeIndex::Finite(1)
        );
        assert_eq!(
            extension_index(&s, 0, Geometry::CrossPolytope).unwrap(),
            LatticeIndex::Infinite
        );
    }

    #[test]
    fn small_instance_bounds() {
        let z2 = CharSupport::cyclic(2, &[1]).unwrap();
        assert_eq!(gamma_rational(&z2).unwrap(), 2);
        assert_eq!(beta_rational(&z2).unwrap(), 2);
        assert_eq!(successive_minima(&z2).unwrap(), vec![2]);

        let z4 = CharSupport::cyclic(4, &[1, 2]).unwrap();
        assert_eq!(gamma_rational(&z4).unwrap(), 3);
        assert_eq!(beta_rational(&z4).unwrap(), 3);
        assert_eq!(successive_minima(&z4).unwrap(), vec![2, 3]);

        let z3 = CharSupport::cyclic(3, &[1, 2]).unwrap();
        assert_eq!(gamma_poly(&z3).unwrap(), 3);
        assert_eq!(beta_poly(&z3).unwrap(), 3);
        assert_eq!(gamma_rational(&z3).unwrap(), 3);
        assert_eq!(beta_rational(&z3).unwrap(), 3);

        let z9 = CharSupport::cyclic(9, &[1, 8]).unwrap();
        assert_eq!(beta_rational(&z9).unwrap(), 9);
        assert_eq!(gamma_rational(&z9).unwrap(), 9);
    }

    #[test]
    fn root_lower_bound_values() {
        assert_eq!(root_lower_bound(7, 3).unwrap(), 2);
        assert_eq!(root_lower_bound(9, 2).unwrap(), 3);
        assert_eq!(root_lower_bound(7, 1).unwrap(), 7);
        assert_eq!(root_lower_bound(8, 3).unwrap(), 2);
        assert_eq!(root_lower_bound(9, 3).unwrap(), 3);
        assert_eq!(root_lower_bound(1, 5).unwrap(), 1);
        assert_eq!(root_lower_bound(1_000_000, 2).unwrap(), 1000);
        assert!(root_lower_bound(7, 0).is_err());
    }

    #[test]
    fn hard_floor_values() {
        assert_eq!(
            hard_floor(&CharSupport::cyclic(2, &[1]).unwrap()).unwrap(),
            2
        );
        let klein = CharSupport::new(
            crate::group::AbelianGroup::new(vec![2, 2]).unwrap(),
            &[vec![1, 0], vec![0, 1], vec![1, 1]],
        )
        .unwrap();
        assert_eq!(hard_floor(&klein).unwrap(), 2);
        assert_eq!(hard_floor(&z7()).unwrap(), 3);
        assert_eq!(
            hard_floor(&CharSupport::cyclic(4, &[1, 2]).unwrap()).unwrap(),
            3
        );
    }

    #[test]
    fn minkowski_rhs_values() {
        let cases = [
            (1, 7, 7, 1),
            (2, 7, 7, 1),
            (3, 7, 7, 1),
            (4, 7, 14, 1),
            (5, 7, 70, 3),
            (1, 2, 2, 1),
        ];
        for (m, p, num, den) in cases {
            let r = minkowski_rhs(m, p).unwrap();
            assert_eq!((r.numerator(), r.denominator()), (num, den), "m={m} p={p}");
        }
        assert_eq!(minkowski_rhs(2, 6), Err(Error::NotPrime(6)));
        assert_eq!(minkowski_rhs(3, 7).unwrap().to_string(), "7");
        assert_eq!(minkowski_rhs(5, 7).unwrap().to_string(), "70/3");
        assert!(minkowski_rhs(2, 7).unwrap().at_least(7).unwrap());
        assert!(!minkowski_rhs(2, 7).unwrap().at_least(8).unwrap());
    }

    #[test]
    fn extremal_instances() {
        let basis33 = CharSupport::new(
            crate::group::AbelianGroup::new(vec![3, 3]).unwrap(),
            &[vec![1, 0], vec![0, 1]],
        )
        .unwrap();
        let gamma = gamma_rational(&basis33).unwrap();
        assert_eq!(gamma, 3);
        assert!(check_extremal(&basis33, gamma).unwrap());

        assert!(!check_extremal(&z7(), 3).unwrap());

        let z2 = CharSupport::cyclic(2, &[1]).unwrap();
        assert!(check_extremal(&z2, 2).unwrap());
    }

    #[test]
    fn family_construction() {
        let residues = |support: &CharSupport| -> Vec<i64> {
            support.chars().iter().map(|c| c.residues()[0]).collect()
        };
        assert_eq!(residues(&family_support(7, 4).unwrap()), vec![1, 6, 2, 5]);
        assert_eq!(residues(&family_support(7, 3).unwrap()), vec![1, 6, 2]);
        assert_eq!(
            residues(&family_support(12, 6).unwrap()),
            vec![1, 11, 2, 10, 3, 9]
        );
        assert_eq!(residues(&family_support(9, 2).unwrap()), vec![1, 8]);
        assert_eq!(residues(&family_support(3, 1).unwrap()), vec![1]);
        assert!(matches!(
            family_support(2, 1),
            Err(Error::InvalidFamily { .. })
        ));
        assert!(matches!(
            family_support(7, 7),
            Err(Error::InvalidFamily { .. })
        ));
    }

    #[test]
    fn family_values() {
        assert_eq!(family_value(7, 4).unwrap(), 4);
        assert_eq!(family_value(7, 3).unwrap(), 4);
        assert_eq!(family_value(12, 6).unwrap(), 4);
        assert_eq!(family_value(9, 2).unwrap(), 9);
        assert_eq!(family_value(3, 1).unwrap(), 3);
        assert_eq!(family_value(3, 2).unwrap(), 3);
        assert_eq!(family_value(50, 6).unwrap(), 17);
    }

    #[test]
    fn z7_report() {
        let report = verify_all(&z7()).unwrap();
        assert_eq!(report.schema, REPORT_SCHEMA);
        assert_eq!(report.group, "Z/7");
        assert_eq!(report.beta_r, 3);
        assert_eq!(report.gamma_r, 3);
        assert_eq!(report.beta_poly, 4);
        assert_eq!(report.gamma_poly, 4);
        assert_eq!(report.successive_minima, vec![3, 3, 3]);
        assert_eq!(report.extension_indices, BTreeMap::from([(3, 1)]));
        assert_eq!(report.theoretical.root_lower_bound, 2);
        assert_eq!(report.theoretical.hard_floor, 3);
        assert!(!report.theoretical.involution_only);
        assert_eq!(report.theoretical.family_value, None);
        assert_eq!(
            report.theoretical.minkowski_rhs,
            Some(Rational::new(7, 1).unwrap())
        );
        assert_eq!(report.theoretical.noether_cap, 7);
        assert!(!report.theoretical.extremal);
        assert_eq!(report.witnesses.rational.degree, 3);
        assert_eq!(report.witnesses.polynomial.degree, 4);
        assert_eq!(
            report.witnesses.polynomial.generators,
            vec![vec![1, 1, 1], vec![0, 1, 3], vec![1, 3, 0]]
        );
        assert!(report
            .witnesses
            .polynomial
            .monomials
            .contains(&"x1*x2*x4".to_string()));
        assert!(report.real_field_note);
    }

    #[test]
    fn family_instance_report_carries_the_sharp_value() {
        let report = verify_all(&CharSupport::cyclic(9, &[1, 8]).unwrap()).unwrap();
        assert_eq!(report.theoretical.family_value, Some(9));
        assert_eq!(report.beta_r, 9);
        assert_eq!(report.gamma_r, 9);
        // The same characters in a different input order are still S_2.
        let report = verify_all(&CharSupport::cyclic(9, &[8, 1]).unwrap()).unwrap();
        assert_eq!(report.theoretical.family_value, Some(9));
    }

    #[test]
    fn report_round_trips_through_json() {
        let report = verify_all(&z7()).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: BoundsReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn sweep_is_deterministic_across_worker_counts() {
        let one = family_sweep((3, 10), (1, 3), 1, DEFAULT_POINT_BUDGET).unwrap();
        let four = family_sweep((3, 10), (1, 3), 4, DEFAULT_POINT_BUDGET).unwrap();
        assert_eq!(one, four);
        assert!(!one.is_empty());
        assert!(one.iter().all(|row| row.matches));
        let cell = one.iter().find(|r| (r.n, r.m) == (9, 2)).unwrap();
        assert_eq!(cell.predicted, 9);
        assert_eq!(cell.beta_r, 9);
    }

    #[test]
    fn sweep_rejects_bad_ranges() {
        assert!(matches!(
            family_sweep((2, 5), (1, 2), 1, DEFAULT_POINT_BUDGET),
            Err(Error::InvalidFamily { .. })
        ));
        assert!(matches!(
            family_sweep((5, 3), (1, 2), 1, DEFAULT_POINT_BUDGET),
            Err(Error::InvalidFamily { .. })
        ));
    }

    #[test]
    fn trivial_support_is_rejected() {
        let trivial = CharSupport::cyclic(5, &[0]).unwrap();
        assert_eq!(verify_all(&trivial), Err(Error::TrivialSupport));
        assert_eq!(hard_floor(&trivial), Err(Error::TrivialSupport));
    }

    #[test]
    fn inverse_pair_detection() {
        assert!(inverse_pair(&CharSupport::cyclic(9, &[1, 8]).unwrap()));
        assert!(!inverse_pair(&CharSupport::cyclic(9, &[1, 2]).unwrap()));
        assert!(!inverse_pair(&z7()));
        // 2 + 2 = 4 is zero mod 4, so the pair {1, 2} of Z/4 is not inverse
        // but {2} alone cannot form a pair; the involution pair {2, 2}
        // collapses to one character.
        assert!(!inverse_pair(&CharSupport::cyclic(4, &[2]).unwrap()));
    }

    #[test]
    fn rational_reduction() {
        let r = Rational::new(168, 12).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (14, 1));
        assert!(r.is_integer());
        assert!(Rational::new(5, 0).is_err());
        assert!(Rational::new(-1, 2).is_err());
    }
}
