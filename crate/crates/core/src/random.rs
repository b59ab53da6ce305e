//! Seeded random representations for property checks and benchmarks.

use rand::Rng;
use setreal_ff::{FieldSpec, Matrix};

use crate::linrep::LinRep;
use crate::setrep::SetRep;
use crate::shape::DiagramShape;

/// Dimensions drawn from `0..=max_dim` and uniform matrices. Relations are
/// not enforced; use shapes without relations.
pub fn random_linrep<R: Rng + ?Sized>(field: &FieldSpec, shape: &DiagramShape, max_dim: usize, rng: &mut R) -> LinRep {
    let dims: Vec<usize> = (0..shape.num_objects()).map(|_| rng.gen_range(0..=max_dim)).collect();
    random_linrep_with_dims(field, shape, &dims, rng)
}

pub fn random_linrep_with_dims<R: Rng + ?Sized>(
    field: &FieldSpec,
    shape: &DiagramShape,
    dims: &[usize],
    rng: &mut R,
) -> LinRep {
    let mats = shape.arrows().iter().map(|a| Matrix::random(field, dims[a.dst], dims[a.src], rng)).collect();
    LinRep { field: field.clone(), shape: shape.clone(), dims: dims.to_vec(), mats }
}

/// Sizes drawn from `0..=max_size` and uniform tables, redrawn until the
/// relations hold. With `basepoint_free` no element is sent to the basepoint
/// (an object of size 0 then forces its in-arrows' sources to size 0).
pub fn random_setrep<R: Rng + ?Sized>(
    shape: &DiagramShape,
    max_size: usize,
    basepoint_free: bool,
    rng: &mut R,
) -> SetRep {
    loop {
        let mut sizes: Vec<usize> = (0..shape.num_objects()).map(|_| rng.gen_range(0..=max_size)).collect();
        if basepoint_free {
            // Sizes must be nonzero wherever an arrow from a nonempty set lands.
            for v in 0..sizes.len() {
                if shape.in_arrows(v).iter().any(|&a| sizes[shape.arrows()[a].src] > 0) && sizes[v] == 0 {
                    sizes[v] = 1;
                }
            }
            if shape.arrows().iter().any(|a| sizes[a.src] > 0 && sizes[a.dst] == 0) {
                continue;
            }
        }
        let lo = u32::from(basepoint_free);
        let maps: Vec<Vec<u32>> = shape
            .arrows()
            .iter()
            .map(|a| (0..sizes[a.src]).map(|_| rng.gen_range(lo..=sizes[a.dst] as u32)).collect())
            .collect();
        let s = SetRep { shape: shape.clone(), sizes, maps };
        if s.validate().is_ok() {
            return s;
        }
    }
}

/// A random invertible matrix at every object.
pub fn random_base_change<R: Rng + ?Sized>(field: &FieldSpec, dims: &[usize], rng: &mut R) -> Vec<Matrix> {
    dims.iter().map(|&d| Matrix::random_invertible(field, d, rng)).collect()
}
