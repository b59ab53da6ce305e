//! Brute-force ground truth: enumerate small pointed-set representations and
//! look for one whose linearization contains `R` as a summand.

use std::collections::HashMap;

use setreal_ff::Matrix;

use crate::decomp::{decompose, DecompOptions};
use crate::error::{CoreError, Result};
use crate::linrep::{compose, find_isomorphism, hom_space, is_invertible, LinRep};
use crate::setrep::{Linearization, SetRep};
use crate::shape::DiagramShape;

#[derive(Clone, Debug)]
pub struct SearchBudget {
    /// Largest fiber size tried at each object.
    pub max_sizes: Vec<usize>,
    /// Largest number of candidates examined per indecomposable summand.
    pub max_candidates: u64,
    pub seed: u64,
}

impl SearchBudget {
    /// Fiber sizes `q^{d_v} - 1`, enough to contain the underlying pointed
    /// sets of `R` itself.
    pub fn complete(r: &LinRep) -> Self {
        let q = r.field.order() as usize;
        SearchBudget {
            max_sizes: r.dims.iter().map(|&d| q.pow(d as u32) - 1).collect(),
            max_candidates: u64::MAX,
            seed: 0,
        }
    }

    pub fn is_complete_for(&self, r: &LinRep) -> bool {
        let q = r.field.order() as usize;
        self.max_candidates == u64::MAX
            && self.max_sizes.len() == r.dims.len()
            && self.max_sizes.iter().zip(&r.dims).all(|(&b, &d)| b >= q.pow(d as u32) - 1)
    }
}

#[derive(Clone, Debug)]
pub enum OracleVerdict {
    Realizable { witness: SetRep },
    /// No witness within the budget. `definitive` when the budget is complete.
    NotFound { definitive: bool },
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub verdict: OracleVerdict,
    pub candidates: u64,
}

/// Whether every indecomposable summand of `R` occurs in `M` with at least
/// the same multiplicity.
pub fn summand_of(r: &LinRep, m: &LinRep, seed: u64) -> Result<bool> {
    let opts = DecompOptions { seed, ..DecompOptions::default() };
    let dr = decompose(r, &opts)?;
    let dm = decompose(m, &opts)?;
    for fr in &dr.factors {
        let mut found = false;
        for fm in &dm.factors {
            if fm.rep.dims == fr.rep.dims && find_isomorphism(&fr.rep, &fm.rep)?.is_some() {
                if fm.multiplicity < fr.multiplicity {
                    return Ok(false);
                }
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For indecomposable `X`: `X | M` iff some `g f` with `f: X -> M`,
/// `g: M -> X` from the hom bases is invertible (End X is local).
fn indecomposable_divides(x: &LinRep, m: &LinRep) -> Result<bool> {
    if x.dims.iter().zip(&m.dims).any(|(a, b)| a > b) {
        return Ok(false);
    }
    let fs = hom_space(x, m)?;
    if fs.is_empty() {
        return Ok(false);
    }
    let gs = hom_space(m, x)?;
    for f in &fs {
        for g in &gs {
            if is_invertible(&x.field, &compose(&x.field, g, f)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Size vectors with `lo <= n <= hi`, ordered by total size then lexicographically.
fn size_vectors(lo: &[usize], hi: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for (&a, &b) in lo.iter().zip(hi) {
        out = out.into_iter().flat_map(|v| (a..=b).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.sort_by_key(|v| (v.iter().sum::<usize>(), v.clone()));
    out
}

/// Every pointed-set representation with the given sizes, tables in
/// lexicographic order (arrow by arrow, element by element).
struct Tables<'a> {
    shape: &'a DiagramShape,
    sizes: Vec<usize>,
    radix: Vec<u32>,
    digits: Vec<u32>,
    done: bool,
}

impl<'a> Tables<'a> {
    fn new(shape: &'a DiagramShape, sizes: Vec<usize>) -> Self {
        let radix: Vec<u32> = shape
            .arrows()
            .iter()
            .flat_map(|a| std::iter::repeat(sizes[a.dst] as u32 + 1).take(sizes[a.src]))
            .collect();
        let digits = vec![0; radix.len()];
        Tables { shape, sizes, radix, digits, done: false }
    }
}

impl Iterator for Tables<'_> {
    type Item = SetRep;

    fn next(&mut self) -> Option<SetRep> {
        if self.done {
            return None;
        }
        let mut maps = Vec::with_capacity(self.shape.num_arrows());
        let mut k = 0;
        for a in self.shape.arrows() {
            let n = self.sizes[a.src];
            maps.push(self.digits[k..k + n].to_vec());
            k += n;
        }
        let s = SetRep { shape: self.shape.clone(), sizes: self.sizes.clone(), maps };
        self.done = true;
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.radix[i] {
                self.done = false;
                break;
            }
            self.digits[i] = 0;
        }
        Some(s)
    }
}

/// First candidate (in canonical order) whose linearization has `X` as a summand.
fn search_factor(x: &LinRep, budget: &SearchBudget, count: &mut u64) -> Result<Option<SetRep>> {
    let mut examined = 0u64;
    for sizes in size_vectors(&x.dims, &budget.max_sizes) {
        for s in Tables::new(&x.shape, sizes) {
            if examined == budget.max_candidates {
                return Ok(None);
            }
            examined += 1;
            *count += 1;
            if s.validate().is_err() {
                continue;
            }
            if indecomposable_divides(x, &s.linearize(&x.field, Linearization::FreeStar))? {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// Searches for a pointed-set representation `S` with `R | free*(S)`. The
/// search runs per indecomposable summand; the witness is the disjoint union
/// of the summand witnesses with multiplicity.
pub fn brute_force_realizable(r: &LinRep, budget: &SearchBudget) -> Result<OracleReport> {
    if budget.max_sizes.len() != r.dims.len() {
        return Err(CoreError::Mismatch(format!(
            "budget has {} sizes for {} objects",
            budget.max_sizes.len(),
            r.dims.len()
        )));
    }
    let dec = decompose(r, &DecompOptions { seed: budget.seed, ..DecompOptions::default() })?;
    let mut witness = SetRep::empty(r.shape.clone());
    let mut candidates = 0;
    let mut cache: HashMap<(Vec<usize>, Vec<Matrix>), Option<SetRep>> = HashMap::new();
    for fac in &dec.factors {
        let found = match cache.get(&(fac.rep.dims.clone(), fac.rep.mats.clone())) {
            Some(x) => x.clone(),
            None => {
                let x = search_factor(&fac.rep, budget, &mut candidates)?;
                cache.insert((fac.rep.dims.clone(), fac.rep.mats.clone()), x.clone());
                x
            }
        };
        let Some(s) = found else {
            return Ok(OracleReport {
                verdict: OracleVerdict::NotFound { definitive: budget.is_complete_for(r) },
                candidates,
            });
        };
        for _ in 0..fac.multiplicity {
            witness = witness.disjoint_union(&s)?;
        }
    }
    if !summand_of(r, &witness.linearize(&r.field, Linearization::FreeStar), budget.seed)? {
        return Err(CoreError::Invalid("assembled oracle witness does not contain the input".into()));
    }
    Ok(OracleReport { verdict: OracleVerdict::Realizable { witness }, candidates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use setreal_ff::FieldSpec;

    #[test]
    fn canonical_order() {
        let v = size_vectors(&[0, 1], &[1, 2]);
        assert_eq!(v, vec![vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2]]);
        let shape = DiagramShape::type_a(&[true]);
        let all: Vec<SetRep> = Tables::new(&shape, vec![2, 1]).collect();
        assert_eq!(all.len(), 4);
        assert_eq!(all[1].maps, vec![vec![0, 1]]);
    }

    #[test]
    fn identity_a2() {
        let f = FieldSpec::prime(2).unwrap();
        let r = LinRep::from_rows(f, DiagramShape::type_a(&[true]), vec![1, 1], &[vec![vec![1]]]).unwrap();
        let report = brute_force_realizable(&r, &SearchBudget::complete(&r)).unwrap();
        match report.verdict {
            OracleVerdict::Realizable { witness } => assert_eq!(witness.sizes, vec![1, 1]),
            other => panic!("{other:?}"),
        }
    }
}
