//! Left Kan extensions along inclusions that add one object.

use setreal_ff::Matrix;

use crate::error::{CoreError, Result};
use crate::linrep::LinRep;
use crate::shape::DiagramShape;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Attach {
    /// One arrow from each sink; parallel paths into `t` are identified.
    Sinks,
    /// One arrow from every object, with `[alpha, to_t(w)] = [to_t(v)]`.
    AllObjects,
}

/// `colim R` over the given objects and the arrows among them, as the
/// quotient matrix `P : (+)_v R(v) -> colim`, split into one block per object.
fn colimit(r: &LinRep, objects: &[usize]) -> Vec<Matrix> {
    let f = &r.field;
    let mut offset = vec![usize::MAX; r.dims.len()];
    let mut total = 0;
    for &v in objects {
        offset[v] = total;
        total += r.dims[v];
    }
    let mut gens: Vec<Vec<u32>> = Vec::new();
    for (a, m) in r.shape.arrows().iter().zip(&r.mats) {
        if offset[a.src] == usize::MAX || offset[a.dst] == usize::MAX {
            continue;
        }
        for j in 0..r.dims[a.src] {
            let mut g = vec![0; total];
            g[offset[a.src] + j] = f.add(g[offset[a.src] + j], 1);
            for i in 0..r.dims[a.dst] {
                let k = offset[a.dst] + i;
                g[k] = f.sub(g[k], m.get(i, j));
            }
            gens.push(g);
        }
    }
    let p = if gens.is_empty() {
        Matrix::identity(total)
    } else {
        let k = Matrix::from_fn(total, gens.len(), |i, j| gens[j][i]);
        k.left_nullspace(f)
    };
    objects.iter().map(|&v| p.submatrix(0, offset[v], p.rows(), r.dims[v])).collect()
}

/// Adds a terminal object `t` and evaluates it at `colim R`.
pub fn kan_add_terminal(r: &LinRep, t: &str, attach: Attach) -> Result<LinRep> {
    let mut shape = r.shape.clone();
    let ti = shape.push_object(t)?;
    let all: Vec<usize> = (0..r.dims.len()).collect();
    let blocks = colimit(r, &all);
    let c = blocks.first().map_or(0, |b| b.rows());
    let mut dims = r.dims.clone();
    dims.push(c);
    let mut mats = r.mats.clone();
    let from: Vec<usize> = match attach {
        Attach::Sinks => r.shape.sinks(),
        Attach::AllObjects => all.clone(),
    };
    let mut to_t = vec![usize::MAX; r.dims.len()];
    for &v in &from {
        let name = format!("{}_{}", t, r.shape.objects()[v]);
        to_t[v] = shape.push_arrow(&name, v, ti)?;
        mats.push(blocks[v].clone());
    }
    match attach {
        Attach::Sinks => {
            if shape.is_acyclic() {
                let mut full = shape.clone();
                full.add_commutativity_relations();
                for rel in full.relations().iter().filter(|rel| rel.dst == ti) {
                    shape.push_relation(rel.lhs.clone(), rel.rhs.clone())?;
                }
            }
        }
        Attach::AllObjects => {
            for (ai, a) in r.shape.arrows().iter().enumerate() {
                shape.push_relation(vec![ai, to_t[a.dst]], vec![to_t[a.src]])?;
            }
        }
    }
    let out = LinRep::new(r.field.clone(), shape, dims, mats)?;
    out.validate().map_err(|v| CoreError::Invalid(format!("extension is not a representation: {v}")))?;
    Ok(out)
}

/// Inserts an object `c` receiving arrows from `ins` and sending arrows to
/// `outs`, valued at the colimit over `ins`. Arrows of `R` from an object of
/// `ins` to one of `outs` become composites through `c` and are dropped.
pub fn kan_insert_object(r: &LinRep, c: &str, ins: &[usize], outs: &[usize]) -> Result<LinRep> {
    let f = &r.field;
    let blocks = colimit(r, ins);
    let dc = blocks.first().map_or(0, |b| b.rows());
    let old = &r.shape;
    let dropped: Vec<bool> = old.arrows().iter().map(|a| ins.contains(&a.src) && outs.contains(&a.dst)).collect();
    let mut objects: Vec<String> = old.objects().to_vec();
    objects.push(c.to_string());
    let mut arrows: Vec<(String, String, String)> = old
        .arrows()
        .iter()
        .zip(&dropped)
        .filter(|(_, &d)| !d)
        .map(|(a, _)| (a.name.clone(), old.objects()[a.src].clone(), old.objects()[a.dst].clone()))
        .collect();
    let mut mats: Vec<Matrix> = r.mats.iter().zip(&dropped).filter(|(_, &d)| !d).map(|(m, _)| m.clone()).collect();
    for (k, &u) in ins.iter().enumerate() {
        arrows.push((format!("{}_{}", old.objects()[u], c), old.objects()[u].clone(), c.to_string()));
        mats.push(blocks[k].clone());
    }
    for &o in outs {
        // The cocone R(u -> o) factors through the colimit.
        let cocone: Vec<Matrix> = ins
            .iter()
            .map(|&u| {
                old.arrows()
                    .iter()
                    .position(|a| a.src == u && a.dst == o)
                    .map(|a| r.mats[a].clone())
                    .ok_or_else(|| {
                        CoreError::Invalid(format!("no arrow from {} to {}", old.objects()[u], old.objects()[o]))
                    })
            })
            .collect::<Result<_>>()?;
        let stacked = Matrix::hstack_all(&cocone, r.dims[o])?;
        let p = Matrix::hstack_all(&blocks, dc)?;
        // Solve X P = stacked, i.e. P^T X^T = stacked^T.
        let pt = p.transpose();
        let rhs = stacked.transpose();
        let mut x = Matrix::zeros(r.dims[o], dc);
        for i in 0..r.dims[o] {
            let col = rhs.col(i);
            let sol = pt
                .solve(f, &col)?
                .ok_or_else(|| CoreError::Invalid("the maps into the new object's targets are not a cocone".into()))?;
            for (j, &v) in sol.iter().enumerate() {
                x.set(i, j, v);
            }
        }
        arrows.push((format!("{}_{}", c, old.objects()[o]), c.to_string(), old.objects()[o].clone()));
        mats.push(x);
    }
    let shape = DiagramShape::new(&objects, &arrows, &[])?;
    let mut dims = r.dims.clone();
    dims.push(dc);
    LinRep::new(f.clone(), shape, dims, mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use setreal_ff::FieldSpec;

    #[test]
    fn colimits() {
        let f = FieldSpec::prime(2).unwrap();
        // Two parallel arrows: the colimit is a coequalizer.
        let shape = DiagramShape::new(&["s", "t"], &[("a", "s", "t"), ("b", "s", "t")], &[]).unwrap();
        let r = LinRep::from_rows(f.clone(), shape, vec![1, 2], &[vec![vec![1], vec![0]], vec![vec![0], vec![1]]])
            .unwrap();
        let l = kan_add_terminal(&r, "top", Attach::Sinks).unwrap();
        assert_eq!(l.dims, vec![1, 2, 1]);
        let l = kan_add_terminal(&r, "top", Attach::AllObjects).unwrap();
        assert_eq!(l.dims[2], 1);
        // Two sources into one sink: the colimit is the sink.
        let shape = DiagramShape::new(&["s", "u", "t"], &[("a", "s", "t"), ("b", "u", "t")], &[]).unwrap();
        let r = LinRep::from_rows(f, shape, vec![1, 1, 2], &[vec![vec![1], vec![0]], vec![vec![0], vec![1]]])
            .unwrap();
        let l = kan_add_terminal(&r, "top", Attach::Sinks).unwrap();
        assert_eq!(l.dims[3], 2);
        assert!(l.mats[2].is_invertible(&l.field));
    }

    #[test]
    fn single_object() {
        let f = FieldSpec::prime(3).unwrap();
        let shape = DiagramShape::new(&["x"], &[], &[]).unwrap();
        let r = LinRep::new(f, shape, vec![1], vec![]).unwrap();
        let l = kan_add_terminal(&r, "t", Attach::Sinks).unwrap();
        assert_eq!(l.dims, vec![1, 1]);
        assert!(l.mats[0].is_identity());
    }
}
