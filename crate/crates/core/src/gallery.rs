//! Worked-example representations used by tests, the acceptance suite and
//! the command-line sample files.

use setreal_ff::{Elem, FieldSpec, Matrix};

use crate::linrep::LinRep;
use crate::shape::DiagramShape;
use crate::tda::{Graph, GraphDiagram, VertexMap};

fn rows(r: &[&[Elem]]) -> Vec<Vec<Elem>> {
    r.iter().map(|x| x.to_vec()).collect()
}

/// Three arms `a1, a2, a3` into a center `c`.
pub fn d4_inward_shape() -> DiagramShape {
    DiagramShape::new(&["a1", "a2", "a3", "c"], &[("x1", "a1", "c"), ("x2", "a2", "c"), ("x3", "a3", "c")], &[])
        .expect("static shape")
}

/// `F -> F^2` along `(1,0)`, `(0,1)`, `(1,1)`.
pub fn d4_inward(f: &FieldSpec) -> LinRep {
    LinRep::from_rows(
        f.clone(),
        d4_inward_shape(),
        vec![1, 1, 1, 2],
        &[rows(&[&[1], &[0]]), rows(&[&[0], &[1]]), rows(&[&[1], &[1]])],
    )
    .expect("static rep")
}

pub const STAR7: [[[Elem; 3]; 2]; 7] = [
    [[1, 1, 0], [0, 1, 1]],
    [[1, 0, 0], [0, 1, 0]],
    [[1, 0, 0], [0, 1, 1]],
    [[1, 0, 1], [0, 1, 0]],
    [[0, 1, 0], [0, 0, 1]],
    [[1, 0, 0], [0, 0, 1]],
    [[1, 1, 0], [0, 0, 1]],
];

/// Center `F^3` mapping to seven arms `F^2`.
pub fn star7(f: &FieldSpec) -> LinRep {
    let mut objects = vec!["c".to_string()];
    objects.extend((1..=7).map(|i| format!("x{i}")));
    let arrows: Vec<(String, String, String)> =
        (1..=7).map(|i| (format!("V{i}"), "c".to_string(), format!("x{i}"))).collect();
    let shape = DiagramShape::new(&objects, &arrows, &[]).expect("static shape");
    let mut dims = vec![3];
    dims.extend([2; 7]);
    let mats = STAR7.iter().map(|m| Matrix::from_rows(&[m[0].to_vec(), m[1].to_vec()], 3).unwrap()).collect();
    LinRep::new(f.clone(), shape, dims, mats).expect("static rep")
}

/// Builds a grid representation from per-arrow rows; arrows not listed are
/// zero (`dims` in the shape's object order).
fn grid_rep(f: &FieldSpec, r: usize, c: usize, dims: &[usize], entries: &[(&str, Vec<Vec<Elem>>)]) -> LinRep {
    let shape = DiagramShape::grid(r, c);
    let mats = shape
        .arrows()
        .iter()
        .map(|a| match entries.iter().find(|(n, _)| *n == a.name) {
            Some((_, rows)) => Matrix::from_rows(rows, dims[a.src]).expect("static rows"),
            None => Matrix::zeros(dims[a.dst], dims[a.src]),
        })
        .collect();
    LinRep::new(f.clone(), shape, dims.to_vec(), mats).expect("static rep")
}

/// The 2x5 commutative grid with `F -> F^2 -> F^3 -> F^3 -> F^2` on top.
pub fn intro_grid(f: &FieldSpec) -> LinRep {
    grid_rep(
        f,
        2,
        5,
        &[0, 0, 1, 2, 2, 1, 2, 3, 3, 2],
        &[
            ("h13", rows(&[&[1], &[0]])),
            ("h14", rows(&[&[1, 0], &[0, 1]])),
            ("h21", rows(&[&[0], &[1]])),
            ("h22", rows(&[&[1, 0], &[0, 0], &[0, 1]])),
            ("h23", rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
            ("h24", rows(&[&[1, 0, 1], &[0, 1, 1]])),
            ("v13", rows(&[&[0], &[1], &[0]])),
            ("v14", rows(&[&[0, 1], &[1, 1], &[0, 0]])),
            ("v15", rows(&[&[0, 1], &[1, 1]])),
        ],
    )
}

/// `H_0` of [`bifiltration`], written out by hand.
pub fn bifiltration_h0(f: &FieldSpec) -> LinRep {
    grid_rep(
        f,
        2,
        5,
        &[0, 0, 1, 2, 2, 1, 2, 2, 2, 1],
        &[
            ("h13", rows(&[&[1], &[0]])),
            ("h14", rows(&[&[1, 0], &[0, 1]])),
            ("h21", rows(&[&[0], &[1]])),
            ("h22", rows(&[&[1, 0], &[0, 1]])),
            ("h23", rows(&[&[1, 0], &[0, 1]])),
            ("h24", rows(&[&[1, 1]])),
            ("v13", rows(&[&[1], &[0]])),
            ("v14", rows(&[&[1, 0], &[0, 1]])),
            ("v15", rows(&[&[1, 1]])),
        ],
    )
}

/// A 2x5 bifiltration of graphs on vertices `a, b, c, u`.
pub fn bifiltration() -> GraphDiagram {
    let g = |v: &[&str], e: &[(&str, &str)]| Graph {
        vertices: v.iter().map(|s| s.to_string()).collect(),
        edges: e.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
    };
    let shape = DiagramShape::grid(2, 5);
    let graphs = vec![
        g(&[], &[]),
        g(&[], &[]),
        g(&["b"], &[]),
        g(&["b", "c"], &[]),
        g(&["b", "c"], &[]),
        g(&["u"], &[]),
        g(&["a", "u"], &[]),
        g(&["a", "b", "u"], &[("a", "b")]),
        g(&["a", "b", "c", "u"], &[("a", "b"), ("c", "u")]),
        g(&["a", "b", "c", "u"], &[("a", "b"), ("c", "u"), ("b", "c")]),
    ];
    let maps = vec![VertexMap::inclusion(); shape.num_arrows()];
    GraphDiagram { shape, graphs, maps }
}

/// Three representations of the 2x4 grid made of two-dimensional pieces.
pub fn grid_patterns(f: &FieldSpec) -> Vec<LinRep> {
    vec![
        grid_rep(
            f,
            2,
            4,
            &[1, 2, 1, 0, 1, 1, 0, 0],
            &[
                ("h11", rows(&[&[1], &[0]])),
                ("h12", rows(&[&[1, 1]])),
                ("h21", rows(&[&[1]])),
                ("v11", rows(&[&[1]])),
                ("v12", rows(&[&[1, 0]])),
            ],
        ),
        grid_rep(
            f,
            2,
            4,
            &[0, 0, 1, 1, 0, 1, 2, 1],
            &[
                ("h13", rows(&[&[1]])),
                ("h22", rows(&[&[1], &[0]])),
                ("h23", rows(&[&[1, 1]])),
                ("v13", rows(&[&[0], &[1]])),
                ("v14", rows(&[&[1]])),
            ],
        ),
        grid_rep(
            f,
            2,
            4,
            &[0, 1, 2, 1, 1, 2, 1, 0],
            &[
                ("h12", rows(&[&[1], &[0]])),
                ("h13", rows(&[&[1, 1]])),
                ("h21", rows(&[&[1], &[0]])),
                ("h22", rows(&[&[1, 1]])),
                ("v12", rows(&[&[0], &[1]])),
                ("v13", rows(&[&[1, 0]])),
            ],
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_commute() {
        for p in [2, 3] {
            let f = FieldSpec::prime(p).unwrap();
            assert!(intro_grid(&f).validate().is_ok());
            assert!(bifiltration_h0(&f).validate().is_ok());
            for (i, g) in grid_patterns(&f).iter().enumerate() {
                assert!(g.validate().is_ok(), "pattern {i} over GF({p}): {:?}", g.validate());
            }
            assert!(star7(&f).validate().is_ok());
        }
    }
}
