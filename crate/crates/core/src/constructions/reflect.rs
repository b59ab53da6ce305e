//! Reflection at a source: the arrows leaving `d` are reversed and the value
//! at `d` is replaced by a cokernel (linear) or pushout (pointed sets).

use petgraph::unionfind::UnionFind;
use setreal_ff::Matrix;

use crate::error::{CoreError, Result};
use crate::linrep::LinRep;
use crate::setrep::SetRep;
use crate::shape::DiagramShape;

fn reflected_shape(shape: &DiagramShape, d: usize) -> Result<(DiagramShape, Vec<usize>)> {
    if d >= shape.num_objects() {
        return Err(CoreError::Invalid(format!("no object with index {d}")));
    }
    if !shape.is_source(d) {
        return Err(CoreError::Invalid(format!("object {} is not a source", shape.objects()[d])));
    }
    if !shape.relations().is_empty() {
        return Err(CoreError::Invalid("reflection is only defined for shapes without relations".into()));
    }
    let out = shape.out_arrows(d);
    Ok((shape.with_reversed(&out), out))
}

/// The cokernel of `x -> (R(a_1)x, -R(a_2)x, ..., -R(a_r)x)`, with one
/// reversed arrow per former out-arrow `a_i` of `d`. For two arrows this is
/// the pushout, which is what linearizing a pointed-set pushout gives.
pub fn reflect_source_lin(r: &LinRep, d: usize) -> Result<LinRep> {
    let f = &r.field;
    let (shape, out) = reflected_shape(&r.shape, d)?;
    let blocks: Vec<Matrix> = out
        .iter()
        .enumerate()
        .map(|(i, &a)| if i == 0 { r.mats[a].clone() } else { r.mats[a].neg(f) })
        .collect();
    let stacked = Matrix::vstack_all(&blocks, r.dims[d])?;
    let p = stacked.left_nullspace(f);
    let c = p.rows();
    let mut dims = r.dims.clone();
    dims[d] = c;
    let mut mats = r.mats.clone();
    let mut off = 0;
    for &a in &out {
        let t = r.shape.arrows()[a].dst;
        mats[a] = p.submatrix(0, off, c, r.dims[t]);
        off += r.dims[t];
    }
    Ok(LinRep { field: f.clone(), shape, dims, mats })
}

/// The pointed-set cokernel (one out-arrow) or pushout (two out-arrows).
/// Classes are numbered by their smallest member in the order: basepoint,
/// elements of the first target, elements of the second target.
pub fn reflect_source_set(s: &SetRep, d: usize) -> Result<SetRep> {
    let (shape, out) = reflected_shape(&s.shape, d)?;
    if out.len() > 2 {
        return Err(CoreError::Invalid(format!(
            "object {} has {} outgoing arrows; pointed-set reflection needs at most two",
            s.shape.objects()[d],
            out.len()
        )));
    }
    let targets: Vec<usize> = out.iter().map(|&a| s.shape.arrows()[a].dst).collect();
    let offsets: Vec<usize> = targets
        .iter()
        .scan(1, |acc, &t| {
            let o = *acc;
            *acc += s.sizes[t];
            Some(o)
        })
        .collect();
    let total = 1 + targets.iter().map(|&t| s.sizes[t]).sum::<usize>();
    // Global index of element x at the i-th target; all basepoints are 0.
    let global = |i: usize, x: u32| if x == 0 { 0 } else { offsets[i] + x as usize - 1 };
    let mut uf = UnionFind::<usize>::new(total);
    match out.len() {
        1 => {
            for &y in &s.maps[out[0]] {
                uf.union(0, global(0, y));
            }
        }
        2 => {
            for (&y1, &y2) in s.maps[out[0]].iter().zip(&s.maps[out[1]]) {
                uf.union(global(0, y1), global(1, y2));
            }
        }
        _ => {}
    }
    let mut class = vec![u32::MAX; total];
    let mut next = 0u32;
    let base = uf.find(0);
    for g in 0..total {
        let root = uf.find(g);
        if root == base {
            class[g] = 0;
            continue;
        }
        if class[root] == u32::MAX {
            next += 1;
            class[root] = next;
        }
        class[g] = class[root];
    }
    let mut sizes = s.sizes.clone();
    sizes[d] = next as usize;
    let mut maps = s.maps.clone();
    for (i, &a) in out.iter().enumerate() {
        maps[a] = (1..=s.sizes[targets[i]] as u32).map(|x| class[global(i, x)]).collect();
    }
    SetRep::new(shape, sizes, maps)
}
