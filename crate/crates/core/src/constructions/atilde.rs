//! Strings and bands of cyclic quivers of type Ã.

use setreal_ff::{FieldSpec, Matrix, Poly};

use crate::error::{CoreError, Result};
use crate::linrep::LinRep;
use crate::setrep::SetRep;
use crate::shape::DiagramShape;

/// Cycle `v0 - v1 - ... - vn - v0`; arrow `a_i` joins `v_i` and `v_{i+1}`
/// and points to `v_{i+1}` when `forward[i]`. One entry gives the loop quiver.
pub fn atilde_shape(forward: &[bool]) -> Result<DiagramShape> {
    let k = forward.len();
    if k == 0 {
        return Err(CoreError::Shape("a cyclic quiver needs at least one arrow".into()));
    }
    let objects: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
    let arrows: Vec<(String, String, String)> = forward
        .iter()
        .enumerate()
        .map(|(i, &fw)| {
            let (a, b) = (format!("v{i}"), format!("v{}", (i + 1) % k));
            let (s, t) = if fw { (a, b) } else { (b, a) };
            (format!("a{i}"), s, t)
        })
        .collect();
    DiagramShape::new(&objects, &arrows, &[])
}

#[derive(Clone, Debug)]
pub struct BandSpec {
    pub f: Poly,
    pub m: usize,
    pub orientation: Vec<bool>,
}

impl BandSpec {
    pub fn check(&self, field: &FieldSpec) -> Result<()> {
        if self.m == 0 {
            return Err(CoreError::Invalid("band multiplicity must be positive".into()));
        }
        if !self.f.is_monic() || !self.f.is_irreducible(field) {
            return Err(CoreError::Invalid("band polynomial must be monic irreducible".into()));
        }
        if self.f.deg() == 1 && self.f.coeff(0) == 0 {
            return Err(CoreError::Invalid("band polynomial X gives a non-invertible map".into()));
        }
        Ok(())
    }
}

/// Identities on every arrow except the last, which carries `C(f^m)`.
pub fn band_rep(field: &FieldSpec, spec: &BandSpec) -> Result<LinRep> {
    spec.check(field)?;
    let shape = atilde_shape(&spec.orientation)?;
    let phi = Matrix::companion(field, &spec.f.pow(field, spec.m as u64));
    let d = phi.rows();
    let k = spec.orientation.len();
    let mut mats = vec![Matrix::identity(d); k];
    mats[k - 1] = phi;
    LinRep::new(field.clone(), shape, vec![d; k], mats)
}

/// Band verdict: `f != X` and `m` a power of the characteristic.
pub fn band_is_realizable(field: &FieldSpec, spec: &BandSpec) -> Result<bool> {
    spec.check(field)?;
    let p = field.characteristic() as usize;
    let mut m = spec.m;
    while m % p == 0 {
        m /= p;
    }
    Ok(m == 1)
}

#[derive(Clone, Debug)]
pub struct StringSpec {
    pub orientation: Vec<bool>,
    /// Vertex of the first walk element.
    pub start: usize,
    /// Number of walk elements.
    pub length: usize,
}

/// The walk `l -> start + l - 1 (mod n+1)` as a pointed-set representation.
/// Fibers are numbered in walk order.
pub fn string_rep(spec: &StringSpec) -> Result<SetRep> {
    let shape = atilde_shape(&spec.orientation)?;
    let k = spec.orientation.len();
    if spec.length == 0 {
        return Err(CoreError::Invalid("string length must be positive".into()));
    }
    if spec.start >= k {
        return Err(CoreError::Invalid(format!("start vertex {} out of range", spec.start)));
    }
    let m = spec.length;
    let vertex = |l: usize| (spec.start + l - 1) % k;
    // Local number of walk element l inside its fiber.
    let mut sizes = vec![0usize; k];
    let mut local = vec![0u32; m + 1];
    for l in 1..=m {
        sizes[vertex(l)] += 1;
        local[l] = sizes[vertex(l)] as u32;
    }
    let mut maps: Vec<Vec<u32>> = shape.arrows().iter().map(|a| vec![0; sizes[a.src]]).collect();
    for l in 1..m {
        let j = vertex(l);
        let a = &shape.arrows()[j];
        if spec.orientation[j] {
            maps[j][local[l] as usize - 1] = local[l + 1];
        } else {
            debug_assert_eq!(a.src, vertex(l + 1));
            maps[j][local[l + 1] as usize - 1] = local[l];
        }
    }
    SetRep::new(shape, sizes, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setrep::Linearization;

    #[test]
    fn companion_of_x2_x_1() {
        let f = FieldSpec::prime(2).unwrap();
        let spec = BandSpec { f: Poly::new(&f, vec![1, 1, 1]), m: 1, orientation: vec![true; 4] };
        let r = band_rep(&f, &spec).unwrap();
        assert_eq!(r.mats[3].to_rows(), vec![vec![0, 1], vec![1, 1]]);
        assert!(r.mats[..3].iter().all(Matrix::is_identity));
    }

    #[test]
    fn band_verdicts() {
        let f = FieldSpec::prime(2).unwrap();
        let spec = |m| BandSpec { f: Poly::new(&f, vec![1, 1]), m, orientation: vec![true] };
        assert!(!band_is_realizable(&f, &spec(3)).unwrap());
        assert!(band_is_realizable(&f, &spec(4)).unwrap());
        let bad = BandSpec { f: Poly::x(), m: 1, orientation: vec![true] };
        assert!(band_rep(&f, &bad).is_err());
    }

    #[test]
    fn short_strings() {
        let f = FieldSpec::prime(3).unwrap();
        let s = string_rep(&StringSpec { orientation: vec![true, false, true], start: 1, length: 1 }).unwrap();
        assert_eq!(s.sizes, vec![0, 1, 0]);
        let s = string_rep(&StringSpec { orientation: vec![true, false], start: 0, length: 4 }).unwrap();
        // v0: walk 1, 3; v1: walk 2, 4. a0: v0 -> v1, a1: v0 -> v1.
        assert_eq!(s.sizes, vec![2, 2]);
        assert_eq!(s.maps[0], vec![1, 2]);
        assert_eq!(s.maps[1], vec![0, 1]);
        let r = s.linearize(&f, Linearization::FreeStar);
        assert!(r.validate().is_ok());
    }
}
