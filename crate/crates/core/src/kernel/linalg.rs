//! Small dense linear algebra over a [`Scalar`] field.

use super::scalar::Scalar;

/// Reduced row echelon form and the pivot columns.
///
/// Float rows are first scaled to unit max-norm and taken as fresh data,
/// and pivots are chosen by magnitude, so the zero tests inside the
/// elimination are relative to the matrix itself.
pub fn rref<F: Scalar>(rows: &[Vec<F>]) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut m: Vec<Vec<F>> = if F::EXACT {
        rows.to_vec()
    } else {
        rows.iter().map(|r| scale_row(r)).collect()
    };
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = pick_pivot(&m, row, col) else {
            continue;
        };
        m.swap(row, p);
        let inv = F::one() / m[row][col].clone();
        m[row] = m[row].iter().map(|x| x.clone() * inv.clone()).collect();
        m[row][col] = F::one();
        for r in 0..m.len() {
            if r == row || m[r][col].is_zero() {
                if r != row {
                    m[r][col] = F::zero();
                }
                continue;
            }
            let k = m[r][col].clone();
            let pivot_row = m[row].clone();
            for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                *x = x.clone() - k.clone() * p.clone();
            }
            m[r][col] = F::zero();
        }
        pivots.push(col);
        row += 1;
    }
    if !F::EXACT {
        for r in m.iter_mut() {
            for x in r.iter_mut() {
                if x.is_zero() {
                    *x = F::zero();
                }
            }
        }
    }
    (m, pivots)
}

fn scale_row<F: Scalar>(row: &[F]) -> Vec<F> {
    let biggest = row.iter().max_by(|a, b| {
        a.to_f64()
            .abs()
            .partial_cmp(&b.to_f64().abs())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    match biggest {
        Some(b) if b.to_f64() != 0.0 => {
            let k = F::one() / b.abs();
            row.iter().map(|x| (x.clone() * k.clone()).fresh()).collect()
        }
        _ => row.iter().map(Scalar::fresh).collect(),
    }
}

fn pick_pivot<F: Scalar>(m: &[Vec<F>], start: usize, col: usize) -> Option<usize> {
    if F::EXACT {
        return (start..m.len()).find(|&r| !m[r][col].is_zero());
    }
    (start..m.len())
        .filter(|&r| !m[r][col].is_zero())
        .max_by(|&a, &b| {
            let x = m[a][col].to_f64().abs();
            let y = m[b][col].to_f64().abs();
            x.partial_cmp(&y).unwrap_or(std::cmp::Ordering::Equal)
        })
}

pub fn rank<F: Scalar>(rows: &[Vec<F>]) -> usize {
    rref(&equilibrate(rows).0).1.len()
}

/// Float matrices get their columns scaled to unit max-norm as well, so
/// badly scaled unknowns do not produce tiny cancelled pivots. Returns the
/// scaled rows and the factor applied to each column.
fn equilibrate<F: Scalar>(rows: &[Vec<F>]) -> (Vec<Vec<F>>, Vec<F>) {
    let ncols = rows.first().map_or(0, Vec::len);
    if F::EXACT {
        return (rows.to_vec(), vec![F::one(); ncols]);
    }
    let rows: Vec<Vec<F>> = rows.iter().map(|r| scale_row(r)).collect();
    let factors: Vec<F> = (0..ncols)
        .map(|c| {
            let biggest = rows
                .iter()
                .map(|r| &r[c])
                .max_by(|a, b| a.to_f64().abs().total_cmp(&b.to_f64().abs()));
            match biggest {
                Some(b) if b.to_f64() != 0.0 => F::one() / b.abs().fresh(),
                _ => F::one(),
            }
        })
        .collect();
    let scaled = rows
        .iter()
        .map(|r| r.iter().zip(&factors).map(|(x, k)| (x.clone() * k.clone()).fresh()).collect())
        .collect();
    (scaled, factors)
}

/// A basis of `{x : M·x = 0}` where `M` has `ncols` columns.
pub fn null_space<F: Scalar>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    if rows.is_empty() {
        return (0..ncols)
            .map(|i| (0..ncols).map(|j| if i == j { F::one() } else { F::zero() }).collect())
            .collect();
    }
    let (scaled, factors) = equilibrate(rows);
    let (m, pivots) = rref(&scaled);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v.iter().zip(&factors).map(|(x, k)| x.clone() * k.clone()).collect()
        })
        .collect()
}

pub type Mat3<F> = [[F; 3]; 3];

/// Adjugate (transposed cofactor matrix) of a 3×3 matrix.
pub fn adjugate3<F: Scalar>(m: &Mat3<F>) -> Mat3<F> {
    let c = |r0: usize, r1: usize, c0: usize, c1: usize| {
        m[r0][c0].clone() * m[r1][c1].clone() - m[r0][c1].clone() * m[r1][c0].clone()
    };
    [
        [c(1, 2, 1, 2), -c(0, 2, 1, 2), c(0, 1, 1, 2)],
        [-c(1, 2, 0, 2), c(0, 2, 0, 2), -c(0, 1, 0, 2)],
        [c(1, 2, 0, 1), -c(0, 2, 0, 1), c(0, 1, 0, 1)],
    ]
}

pub fn mat3_vec<F: Scalar>(m: &Mat3<F>, v: &[F; 3]) -> [F; 3] {
    std::array::from_fn(|i| {
        (0..3).fold(F::zero(), |acc, j| acc + m[i][j].clone() * v[j].clone())
    })
}

/// `uᵀ·M·v`.
pub fn bilinear3<F: Scalar>(m: &Mat3<F>, u: &[F; 3], v: &[F; 3]) -> F {
    let mv = mat3_vec(m, v);
    (0..3).fold(F::zero(), |acc, i| acc + u[i].clone() * mv[i].clone())
}

/// The individual products of `uᵀ·M·v`, for [`Scalar::vanishes`].
pub fn bilinear3_terms<F: Scalar>(m: &Mat3<F>, u: &[F; 3], v: &[F; 3]) -> Vec<F> {
    let mut out = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            out.push(u[i].clone() * m[i][j].clone() * v[j].clone());
        }
    }
    out
}

/// Whether two vectors are proportional (including the zero vector).
pub fn proportional<F: Scalar>(u: &[F], v: &[F]) -> bool {
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            if !F::vanishes(&[
                u[i].clone() * v[j].clone(),
                -(u[j].clone() * v[i].clone()),
            ]) {
                return false;
            }
        }
    }
    true
}
