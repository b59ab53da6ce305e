//! Bit-packed elimination over GF(2). Produces exactly the same reduced form
//! and pivot list as the generic path; it only changes the speed.

use crate::field::Elem;
use crate::matrix::Matrix;

const W: usize = 64;

pub(crate) fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let (rows, cols) = m.shape();
    let words = cols.div_ceil(W);
    let mut bits: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            let mut r = vec![0u64; words];
            for (j, &x) in m.row(i).iter().enumerate() {
                if x & 1 == 1 {
                    r[j / W] |= 1 << (j % W);
                }
            }
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let (w, b) = (c / W, 1u64 << (c % W));
        let Some(p) = (r..rows).find(|&i| bits[i][w] & b != 0) else { continue };
        bits.swap(r, p);
        let pivot = std::mem::take(&mut bits[r]);
        for (i, row) in bits.iter_mut().enumerate() {
            if i != r && row[w] & b != 0 {
                for (x, y) in row[w..].iter_mut().zip(&pivot[w..]) {
                    *x ^= *y;
                }
            }
        }
        bits[r] = pivot;
        pivots.push(c);
        r += 1;
    }
    let out = Matrix::from_fn(rows, cols, |i, j| ((bits[i][j / W] >> (j % W)) & 1) as Elem);
    (out, pivots)
}
