//! Naive reference implementations for cross-checking the library.
//!
//! Everything here recomputes results from first principles with different
//! algorithms and a different integer width than the crate: membership is
//! a direct character-sum congruence, enumeration is a full box scan, rank
//! is fraction-free elimination over i128, and determinants come from an
//! unnormalized gcd-style row echelon. Slow on purpose, and only suitable
//! for the small instances the test suites feed it.

// Each test target compiles its own copy and none of them uses all of it.
#![allow(dead_code)]

/// Componentwise character sum of `a` against `chars`, reduced per factor.
pub fn char_sum(factors: &[i64], chars: &[Vec<i64>], a: &[i64]) -> Vec<i64> {
    let mut acc = vec![0i64; factors.len()];
    for (coeff, ch) in a.iter().zip(chars) {
        for (j, (slot, &c)) in acc.iter_mut().zip(ch).enumerate() {
            *slot = (*slot + (coeff.rem_euclid(factors[j]) * c.rem_euclid(factors[j])))
                .rem_euclid(factors[j]);
        }
    }
    acc
}

pub fn in_lattice(factors: &[i64], chars: &[Vec<i64>], a: &[i64]) -> bool {
    char_sum(factors, chars, a).iter().all(|&x| x == 0)
}

/// Order of the subgroup generated by the characters: iterative closure
/// over residue tuples.
pub fn closure_order(factors: &[i64], chars: &[Vec<i64>]) -> i64 {
    let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
    seen.insert(vec![0; factors.len()]);
    loop {
        let mut grew = false;
        let snapshot: Vec<Vec<i64>> = seen.iter().cloned().collect();
        for base in &snapshot {
            for ch in chars {
                let next: Vec<i64> = base
                    .iter()
                    .zip(ch)
                    .zip(factors)
                    .map(|((b, c), n)| (b + c.rem_euclid(*n)).rem_euclid(*n))
                    .collect();
                if seen.insert(next) {
                    grew = true;
                }
            }
        }
        if !grew {
            return seen.len() as i64;
        }
    }
}

/// Every lattice point of the degree-d ball, by scanning the whole integer
/// box and filtering; sorted by (degree, lex) like the library's output.
pub fn box_ball(factors: &[i64], chars: &[Vec<i64>], d: i64, simplex: bool) -> Vec<Vec<i64>> {
    let m = chars.len();
    let lo = if simplex { 0 } else { -d };
    let mut current = vec![lo; m];
    let mut out = Vec::new();
    'scan: loop {
        let norm: i64 = current.iter().map(|x| x.abs()).sum();
        if norm <= d && in_lattice(factors, chars, &current) {
            out.push(current.clone());
        }
        for i in (0..m).rev() {
            if current[i] < d {
                current[i] += 1;
                continue 'scan;
            }
            current[i] = lo;
        }
        break;
    }
    out.sort_by_key(|p| (p.iter().map(|x| x.abs()).sum::<i64>(), p.clone()));
    out
}

/// The points of the ball with degree exactly d, in lexicographic order.
pub fn box_shell(factors: &[i64], chars: &[Vec<i64>], d: i64, simplex: bool) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = box_ball(factors, chars, d, simplex)
        .into_iter()
        .filter(|p| p.iter().map(|x| x.abs()).sum::<i64>() == d)
        .collect();
    out.sort();
    out
}

/// Rank over the rationals by fraction-free elimination in i128.
pub fn naive_rank(points: &[Vec<i64>]) -> usize {
    let mut mat: Vec<Vec<i128>> = points
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = mat.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..mat.len()).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot_row);
        let pivot = mat[rank][col];
        let pivot_values = mat[rank].clone();
        for row in mat.iter_mut().skip(rank + 1) {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for (x, &p) in row.iter_mut().zip(&pivot_values) {
                *x = *x * pivot - p * factor;
            }
            let g = row.iter().fold(0i128, |g, &x| gcd128(g, x));
            if g > 1 {
                for x in row.iter_mut() {
                    *x /= g;
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Absolute determinant of the span of `points` when it has full rank m,
/// via an unnormalized Euclidean row echelon; None on deficient rank.
pub fn naive_span_det(points: &[Vec<i64>], m: usize) -> Option<i128> {
    let mut rows: Vec<Vec<i128>> = points
        .iter()
        .filter(|p| p.iter().any(|&x| x != 0))
        .map(|p| p.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0usize;
    for col in 0..m {
        loop {
            let mut candidates: Vec<usize> =
                (rank..rows.len()).filter(|&r| rows[r][col] != 0).collect();
            match candidates.len() {
                0 => break,
                1 => {
                    rows.swap(rank, candidates[0]);
                    rank += 1;
                    break;
                }
                _ => {
                    candidates.sort_by_key(|&r| rows[r][col].abs());
                    let (small, big) = (candidates[0], candidates[1]);
                    let q = rows[big][col] / rows[small][col];
                    let small_values = rows[small].clone();
                    for (x, &s) in rows[big].iter_mut().zip(&small_values) {
                        *x -= q * s;
                    }
                }
            }
        }
    }
    if rank < m {
        return None;
    }
    let mut det: i128 = 1;
    for (i, row) in rows.iter().take(m).enumerate() {
        det *= row[i];
    }
    Some(det.abs())
}

/// Every lattice point of the box [-cap, cap]^m from one scan, bucketed
/// by degree, with the nonnegative points bucketed separately.
pub struct BoxSnapshot {
    pub cap: i64,
    pub cross_shells: Vec<Vec<Vec<i64>>>,
    pub simplex_shells: Vec<Vec<Vec<i64>>>,
}

pub fn box_snapshot(factors: &[i64], chars: &[Vec<i64>], cap: i64) -> BoxSnapshot {
    let m = chars.len();
    let mut cross: Vec<Vec<Vec<i64>>> = vec![Vec::new(); cap as usize + 1];
    let mut simplex = cross.clone();
    let mut current = vec![-cap; m];
    'scan: loop {
        let norm: i64 = current.iter().map(|x| x.abs()).sum();
        if norm <= cap && in_lattice(factors, chars, &current) {
            cross[norm as usize].push(current.clone());
            if current.iter().all(|&x| x >= 0) {
                simplex[norm as usize].push(current.clone());
            }
        }
        for i in (0..m).rev() {
            if current[i] < cap {
                current[i] += 1;
                continue 'scan;
            }
            current[i] = -cap;
        }
        break;
    }
    for shell in cross.iter_mut().chain(simplex.iter_mut()) {
        shell.sort();
    }
    BoxSnapshot {
        cap,
        cross_shells: cross,
        simplex_shells: simplex,
    }
}

/// Reference bounds profile: gamma, beta, minima, and per-degree indices,
/// derived from a snapshot by cumulative rank and determinant. Panics when
/// the snapshot cap is exhausted before the span closes up.
pub struct OracleProfile {
    pub gamma: i64,
    pub beta: i64,
    pub minima: Vec<i64>,
    pub indices: Vec<(i64, i128)>,
}

pub fn snapshot_profile(snap: &BoxSnapshot, m: usize, eff: i128, simplex: bool) -> OracleProfile {
    let shells = if simplex {
        &snap.simplex_shells
    } else {
        &snap.cross_shells
    };
    let mut cumulative: Vec<Vec<i64>> = Vec::new();
    let mut minima = Vec::with_capacity(m);
    let mut gamma = None;
    let mut indices = Vec::new();
    for d in 1..=snap.cap {
        cumulative.extend(shells[d as usize].iter().cloned());
        let rank = naive_rank(&cumulative);
        while minima.len() < rank {
            minima.push(d);
        }
        if rank < m {
            continue;
        }
        if gamma.is_none() {
            gamma = Some(d);
        }
        let det = naive_span_det(&cumulative, m).expect("rank says full");
        assert_eq!(
            det % eff,
            0,
            "span det must be a multiple of the lattice det"
        );
        indices.push((d, det / eff));
        if det == eff {
            return OracleProfile {
                gamma: gamma.unwrap(),
                beta: d,
                minima,
                indices,
            };
        }
    }
    panic!("oracle search exhausted the cap {}", snap.cap);
}

/// Closed-form count of integer points with L1 norm at most d in Z^m:
/// sum over k of 2^k C(m,k) C(d,k).
pub fn cross_ball_count(m: u64, d: u64) -> u128 {
    let choose = |n: u64, k: u64| -> u128 {
        if k > n {
            return 0;
        }
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
        }
        acc
    };
    (0..=m)
        .map(|k| (1u128 << k) * choose(m, k) * choose(d, k))
        .sum()
}
