//! Exact integer kernels.
//!
//! Kernels are found with unimodular column operations (column Hermite
//! reduction) and returned in row Hermite normal form, so equal lattices give
//! identical bases. Arithmetic is checked `i128`.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("integer overflow during lattice reduction")]
    Overflow,
    #[error("row {row} has length {got}, expected {expected}")]
    RaggedMatrix { row: usize, got: usize, expected: usize },
    #[error("lattice basis entry does not fit in i64")]
    OutOfRange,
}

fn sub_mul(x: i128, k: i128, y: i128) -> Result<i128, LatticeError> {
    k.checked_mul(y).and_then(|ky| x.checked_sub(ky)).ok_or(LatticeError::Overflow)
}

/// `{ a ∈ ℤ^ncols : M a = 0 }` as a basis in row Hermite normal form.
pub fn integer_kernel(rows: &[Vec<i64>], ncols: usize) -> Result<Vec<Vec<i64>>, LatticeError> {
    for (r, row) in rows.iter().enumerate() {
        if row.len() != ncols {
            return Err(LatticeError::RaggedMatrix { row: r, got: row.len(), expected: ncols });
        }
    }
    // columns of `m` and `u` are modified together, keeping m = M·u.
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..ncols).map(|i| (0..ncols).map(|j| i128::from(i == j)).collect()).collect();
    let mut k = 0;
    for r in 0..m.len() {
        if k == ncols {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (k..ncols).filter(|&c| m[r][c] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&c) = nonzero.first() {
                    swap_cols(&mut m, &mut u, k, c);
                    k += 1;
                }
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&c| m[r][c].unsigned_abs()).unwrap();
            for &c in &nonzero {
                if c != p {
                    let quot = m[r][c] / m[r][p];
                    col_sub_mul(&mut m, &mut u, c, p, quot)?;
                }
            }
        }
    }
    let basis: Vec<Vec<i128>> = (k..ncols).map(|c| u.iter().map(|row| row[c]).collect()).collect();
    let hnf = row_hnf(basis)?;
    hnf.into_iter()
        .map(|v| v.into_iter().map(|x| i64::try_from(x).map_err(|_| LatticeError::OutOfRange)).collect())
        .collect()
}

fn swap_cols(m: &mut [Vec<i128>], u: &mut [Vec<i128>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut().chain(u.iter_mut()) {
            row.swap(a, b);
        }
    }
}

/// column `c` -= k · column `p`.
fn col_sub_mul(m: &mut [Vec<i128>], u: &mut [Vec<i128>], c: usize, p: usize, k: i128) -> Result<(), LatticeError> {
    for row in m.iter_mut().chain(u.iter_mut()) {
        row[c] = sub_mul(row[c], k, row[p])?;
    }
    Ok(())
}

/// Row Hermite normal form of a set of linearly independent rows: echelon,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`.
pub fn row_hnf(mut rows: Vec<Vec<i128>>) -> Result<Vec<Vec<i128>>, LatticeError> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut top = 0;
    for c in 0..ncols {
        if top == rows.len() {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (top..rows.len()).filter(|&r| rows[r][c] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&r) = nonzero.first() {
                    rows.swap(top, r);
                    if rows[top][c] < 0 {
                        for x in rows[top].iter_mut() {
                            *x = x.checked_neg().ok_or(LatticeError::Overflow)?;
                        }
                    }
                    let pivot = rows[top][c];
                    for r in 0..top {
                        let quot = rows[r][c].div_euclid(pivot);
                        if quot != 0 {
                            for j in 0..ncols {
                                rows[r][j] = sub_mul(rows[r][j], quot, rows[top][j])?;
                            }
                        }
                    }
                    top += 1;
                }
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&r| rows[r][c].unsigned_abs()).unwrap();
            for &r in &nonzero {
                if r != p {
                    let quot = rows[r][c] / rows[p][c];
                    for j in 0..ncols {
                        rows[r][j] = sub_mul(rows[r][j], quot, rows[p][j])?;
                    }
                }
            }
        }
    }
    rows.truncate(top);
    Ok(rows)
}

/// Membership of `v` in the lattice spanned by a row-HNF basis.
pub fn in_lattice(hnf: &[Vec<i64>], v: &[i64]) -> bool {
    let mut rest: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    for row in hnf {
        let Some(c) = row.iter().position(|&x| x != 0) else { continue };
        let pivot = row[c] as i128;
        if rest[c] % pivot != 0 {
            return false;
        }
        let k = rest[c] / pivot;
        for (x, &y) in rest.iter_mut().zip(row) {
            *x -= k * y as i128;
        }
    }
    rest.iter().all(|&x| x == 0)
}
