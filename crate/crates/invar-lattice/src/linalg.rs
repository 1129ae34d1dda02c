//! Exact integer linear algebra on small dense matrices.
//!
//! Provides the row-style Hermite normal form (the canonical basis used by
//! [`crate::lattice::Lattice`]) and the Smith normal form with transform
//! tracking (used for kernel extraction and lattice indices). Everything is
//! checked 64-bit arithmetic; no floating point, no modular shortcuts.

use crate::arith;
use crate::error::{Error, Result};

pub(crate) type Mat = Vec<Vec<i64>>;

pub(crate) fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub(crate) fn transpose(a: &[Vec<i64>], cols: usize) -> Mat {
    (0..cols)
        .map(|j| a.iter().map(|row| row[j]).collect())
        .collect()
}

pub(crate) fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Result<Mat> {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = Vec::with_capacity(a.len());
    for row in a {
        debug_assert_eq!(row.len(), b.len());
        let mut acc = vec![0i64; cols];
        for (coef, brow) in row.iter().zip(b) {
            for (o, &x) in acc.iter_mut().zip(brow) {
                *o = arith::add(*o, arith::mul(*coef, x)?)?;
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// row_i -= q * row_r, checked.
fn row_sub_scaled(rows: &mut Mat, i: usize, r: usize, q: i64) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for k in 0..rows[i].len() {
        let t = arith::mul(q, rows[r][k])?;
        rows[i][k] = arith::sub(rows[i][k], t)?;
    }
    Ok(())
}

fn row_negate(rows: &mut Mat, i: usize) -> Result<()> {
    for x in rows[i].iter_mut() {
        *x = arith::neg(*x)?;
    }
    Ok(())
}

/// The output of [`hermite_with_transform`].
pub(crate) struct HermiteForm {
    /// Canonical nonzero rows: echelon shape, positive pivots at strictly
    /// increasing columns, entries above each pivot reduced into [0, pivot).
    pub rows: Mat,
    /// Unimodular row transform of the input; rows [0, rank) produce `rows`,
    /// rows [rank, n) span the left kernel of the input.
    pub transform: Mat,
    pub rank: usize,
}

fn hermite_inner(a: &mut Mat, mut u: Option<&mut Mat>) -> Result<usize> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0usize;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        loop {
            let pivot = (r..nrows)
                .filter(|&i| a[i][col] != 0)
                .min_by_key(|&i| a[i][col].unsigned_abs());
            let Some(p) = pivot else { break };
            a.swap(r, p);
            if let Some(u) = u.as_deref_mut() {
                u.swap(r, p);
            }
            let mut cleared = true;
            for i in r + 1..nrows {
                if a[i][col] != 0 {
                    let q = a[i][col].checked_div(a[r][col]).ok_or(Error::Overflow)?;
                    row_sub_scaled(a, i, r, q)?;
                    if let Some(u) = u.as_deref_mut() {
                        row_sub_scaled(u, i, r, q)?;
                    }
                    if a[i][col] != 0 {
                        cleared = false;
                    }
                }
            }
            if cleared {
                break;
            }
        }
        if a[r][col] != 0 {
            if a[r][col] < 0 {
                row_negate(a, r)?;
                if let Some(u) = u.as_deref_mut() {
                    row_negate(u, r)?;
                }
            }
            let p = a[r][col];
            for k in 0..r {
                let q = a[k][col].div_euclid(p);
                row_sub_scaled(a, k, r, q)?;
                if let Some(u) = u.as_deref_mut() {
                    row_sub_scaled(u, k, r, q)?;
                }
            }
            r += 1;
        }
    }
    Ok(r)
}

/// Row Hermite normal form with zero rows dropped. The result is canonical:
/// two generating sets span the same lattice exactly when their forms match.
pub(crate) fn hermite(mut rows: Mat) -> Result<Mat> {
    let rank = hermite_inner(&mut rows, None)?;
    rows.truncate(rank);
    Ok(rows)
}

pub(crate) fn hermite_with_transform(mut rows: Mat) -> Result<HermiteForm> {
    let mut u = identity(rows.len());
    let rank = hermite_inner(&mut rows, Some(&mut u))?;
    rows.truncate(rank);
    Ok(HermiteForm {
        rows,
        transform: u,
        rank,
    })
}

/// The output of [`smith`]: transforms with u * a * v = diag(entries).
pub(crate) struct SmithForm {
    pub row_transform: Mat,
    /// Positive invariant factors, each dividing the next; length is the rank.
    pub diagonal: Vec<i64>,
    pub col_transform: Mat,
}

impl SmithForm {
    /// Basis of the right kernel of the original matrix: one vector per
    /// column of the transform beyond the rank.
    pub fn kernel_basis(&self, cols: usize) -> Mat {
        let rank = self.diagonal.len();
        (rank..cols)
            .map(|j| self.col_transform.iter().map(|row| row[j]).collect())
            .collect()
    }
}

/// Smith normal form by alternating row and column reduction.
pub(crate) fn smith(mut a: Mat) -> Result<SmithForm> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut u = identity(nrows);
    // Column operations are row operations on the transpose; track v that way.
    let mut vt = identity(ncols);
    let mut t = 0usize;
    'outer: while t < nrows.min(ncols) {
        // Move a minimal nonzero entry of the remaining block to (t, t).
        let Some((pi, pj)) = ({
            let mut best: Option<(usize, usize)> = None;
            for i in t..nrows {
                for j in t..ncols {
                    if a[i][j] != 0
                        && best.is_none_or(|(bi, bj)| {
                            a[i][j].unsigned_abs() < a[bi][bj].unsigned_abs()
                        })
                    {
                        best = Some((i, j));
                    }
                }
            }
            best
        }) else {
            break 'outer;
        };
        a.swap(t, pi);
        u.swap(t, pi);
        col_swap(&mut a, t, pj);
        vt.swap(t, pj);
        loop {
            // Clear column t below the pivot.
            let mut dirty = false;
            for i in t + 1..nrows {
                if a[i][t] != 0 {
                    if a[i][t].unsigned_abs() < a[t][t].unsigned_abs() {
                        a.swap(t, i);
                        u.swap(t, i);
                    }
                    let q = a[i][t].checked_div(a[t][t]).ok_or(Error::Overflow)?;
                    row_sub_scaled(&mut a, i, t, q)?;
                    row_sub_scaled(&mut u, i, t, q)?;
                    if a[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Clear row t to the right of the pivot.
            for j in t + 1..ncols {
                if a[t][j] != 0 {
                    if a[t][j].unsigned_abs() < a[t][t].unsigned_abs() {
                        col_swap(&mut a, t, j);
                        vt.swap(t, j);
                    }
                    let q = a[t][j].checked_div(a[t][t]).ok_or(Error::Overflow)?;
                    col_sub_scaled(&mut a, j, t, q)?;
                    row_sub_scaled(&mut vt, j, t, q)?;
                    if a[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            if (t + 1..nrows).any(|i| a[i][t] != 0) {
                continue;
            }
            // Pivot now isolated; enforce divisibility against the rest.
            let p = a[t][t];
            let offender = (t + 1..nrows)
                .flat_map(|i| (t + 1..ncols).map(move |j| (i, j)))
                .find(|&(i, j)| a[i][j] % p != 0);
            match offender {
                Some((i, _)) => {
                    // Fold the offending row in and keep reducing.
                    row_sub_scaled(&mut a, t, i, -1)?;
                    row_sub_scaled(&mut u, t, i, -1)?;
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            row_negate(&mut a, t)?;
            row_negate(&mut u, t)?;
        }
        t += 1;
    }
    let diagonal: Vec<i64> = (0..t).map(|i| a[i][i]).collect();
    debug_assert!(diagonal.iter().all(|&d| d > 0));
    debug_assert!(diagonal.windows(2).all(|w| w[1] % w[0] == 0));
    Ok(SmithForm {
        row_transform: u,
        diagonal,
        col_transform: transpose(&vt, ncols),
    })
}

fn col_swap(a: &mut Mat, i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// col_j -= q * col_t, checked.
fn col_sub_scaled(a: &mut Mat, j: usize, t: usize, q: i64) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for row in a.iter_mut() {
        let s = arith::mul(q, row[t])?;
        row[j] = arith::sub(row[j], s)?;
    }
    Ok(())
}
