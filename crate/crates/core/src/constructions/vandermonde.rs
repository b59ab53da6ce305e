//! Expansion of a representation whose entries are `n`-th roots of unity
//! into one that is conjugate to permutation-or-zero matrices.

use setreal_ff::{Elem, FieldSpec, Matrix};

use crate::error::{CoreError, Result};
use crate::linrep::LinRep;

#[derive(Clone, Debug)]
pub struct Expansion {
    /// `(+)_{i<n} R_i`, where `R_i` raises every entry to the `i`-th power.
    /// Index `b*n + i` is basis vector `b` of copy `i`.
    pub hat: LinRep,
    /// Block-diagonal Vandermonde matrices `Z_v`.
    pub base_change: Vec<Matrix>,
    /// `Z_w M Z_v^-1` for every arrow; 0/1 with at most one 1 per column.
    pub permuted: LinRep,
}

/// `Z[i][j] = zeta^(i*j)`.
pub fn vandermonde_matrix(f: &FieldSpec, zeta: Elem, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| f.pow(zeta, (i * j) as u64))
}

pub fn vandermonde_expand(r: &LinRep, n: usize) -> Result<Expansion> {
    let f = &r.field;
    if n == 0 {
        return Err(CoreError::Invalid("n must be positive".into()));
    }
    let zeta = f.root_of_unity(n as u64)?;
    for (a, m) in r.shape.arrows().iter().zip(&r.mats) {
        for j in 0..m.cols() {
            let col = m.col(j);
            if col.iter().filter(|&&x| x != 0).count() > 1 {
                return Err(CoreError::Invalid(format!("arrow {}: column {j} has several nonzero entries", a.name)));
            }
            if let Some(&x) = col.iter().find(|&&x| x != 0) {
                if f.pow(x, n as u64) != 1 {
                    return Err(CoreError::Invalid(format!("arrow {}: entry {x} is not an {n}-th root of unity", a.name)));
                }
            }
        }
    }
    let mats = r
        .mats
        .iter()
        .map(|m| {
            let mut out = Matrix::zeros(m.rows() * n, m.cols() * n);
            for row in 0..m.rows() {
                for col in 0..m.cols() {
                    let x = m.get(row, col);
                    if x != 0 {
                        for i in 0..n {
                            out.set(row * n + i, col * n + i, f.pow(x, i as u64));
                        }
                    }
                }
            }
            out
        })
        .collect();
    let hat = LinRep { field: f.clone(), shape: r.shape.clone(), dims: r.dims.iter().map(|d| d * n).collect(), mats };
    let z = vandermonde_matrix(f, zeta, n);
    let base_change: Vec<Matrix> = r.dims.iter().map(|&d| Matrix::block_diag(&vec![z.clone(); d])).collect();
    let permuted = hat.conjugate(&base_change)?;
    Ok(Expansion { hat, base_change, permuted })
}

/// The copy `i` inside an expansion of `n` copies.
pub fn expansion_copy(hat: &LinRep, n: usize, i: usize) -> LinRep {
    let pick = |d: usize| (0..d / n).map(|b| b * n + i).collect::<Vec<_>>();
    let mats = hat
        .shape
        .arrows()
        .iter()
        .zip(&hat.mats)
        .map(|(a, m)| m.select_rows(&pick(hat.dims[a.dst])).select_cols(&pick(hat.dims[a.src])))
        .collect();
    LinRep {
        field: hat.field.clone(),
        shape: hat.shape.clone(),
        dims: hat.dims.iter().map(|d| d / n).collect(),
        mats,
    }
}

/// Every column has at most one nonzero entry, and that entry is 1.
pub fn is_permutation_or_zero(m: &Matrix) -> bool {
    (0..m.cols()).all(|j| {
        let col = m.col(j);
        col.iter().all(|&x| x <= 1) && col.iter().filter(|&&x| x == 1).count() <= 1
    })
}
