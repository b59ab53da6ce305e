use setreal_ff::{FieldSpec, Matrix};

use crate::error::{CoreError, Result};
use crate::linrep::LinRep;
use crate::shape::DiagramShape;

/// `F` on the support, `0` elsewhere, identities between support objects.
pub fn indicator(field: &FieldSpec, shape: &DiagramShape, support: &[usize]) -> Result<LinRep> {
    let mut dims = vec![0; shape.num_objects()];
    for &v in support {
        if v >= dims.len() {
            return Err(CoreError::Invalid(format!("no object with index {v}")));
        }
        dims[v] = 1;
    }
    let mats = shape
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.dst], dims[a.src]);
            if r == 1 && c == 1 {
                Matrix::identity(1)
            } else {
                Matrix::zeros(r, c)
            }
        })
        .collect();
    let rep = LinRep { field: field.clone(), shape: shape.clone(), dims, mats };
    rep.validate().map_err(|v| CoreError::Rep(format!("support breaks a relation: {v}")))?;
    Ok(rep)
}

pub fn indicator_by_name(field: &FieldSpec, shape: &DiagramShape, support: &[&str]) -> Result<LinRep> {
    let idx = support.iter().map(|s| shape.object(s)).collect::<Result<Vec<_>>>()?;
    indicator(field, shape, &idx)
}

/// Whether `R` is an indicator: dimension at most one everywhere and the
/// identity between any two support objects joined by an arrow.
pub fn is_indicator(r: &LinRep) -> bool {
    r.dims.iter().all(|&d| d <= 1)
        && r.mats.iter().all(|m| m.rows() == 0 || m.cols() == 0 || m.is_identity())
}
