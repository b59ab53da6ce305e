//! The split test: `R` is additively Set-realizable iff the counit
//! `free*(forget R) -> R` has a section.
//!
//! The plain package indexes the big representation at `v` by the nonzero
//! vectors of `F^{d_v}`; the G-set package by projective points, which
//! shrinks every dimension by a factor of about `q - 1`.

use std::collections::HashMap;

use setreal_ff::{Elem, FieldSpec, LinearSystem, Matrix, SystemBuilder, Unknown};

use crate::error::{CoreError, Result};
use crate::linrep::LinRep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Variant {
    Plain,
    #[default]
    Gset,
}

impl std::str::FromStr for Variant {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Variant::Plain),
            "gset" => Ok(Variant::Gset),
            _ => Err(CoreError::Invalid(format!("unknown variant {s:?} (expected plain or gset)"))),
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::Plain => "plain",
            Variant::Gset => "gset",
        })
    }
}

/// Resource caps for package and system construction.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest admissible big dimension `D_v` at any object.
    pub max_basis: u64,
    /// Largest admissible number of coefficient-matrix entries.
    pub max_system_entries: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_basis: 1 << 20, max_system_entries: 1 << 28 }
    }
}

#[derive(Clone, Debug)]
pub struct CounitPackage {
    pub big: LinRep,
    /// `counit[v]` is `d_v x D_v`.
    pub counit: Vec<Matrix>,
    pub variant: Variant,
    /// Coordinates of the basis vector behind each big basis index.
    pub basis: Vec<Vec<Vec<Elem>>>,
}

/// A section of the counit, `G_v` of size `D_v x d_v`.
pub type Witness = Vec<Matrix>;

#[derive(Clone, Debug)]
pub struct Verdict {
    pub realizable: bool,
    pub witness: Option<Witness>,
    pub package: CounitPackage,
    pub unknowns: usize,
    pub equations: usize,
}

fn encode(q: u64, x: &[Elem]) -> u64 {
    x.iter().rev().fold(0, |acc, &c| acc * q + c as u64)
}

fn decode(q: u64, d: usize, mut e: u64) -> Vec<Elem> {
    (0..d)
        .map(|_| {
            let c = (e % q) as Elem;
            e /= q;
            c
        })
        .collect()
}

/// `D_v` for dimension `d` under a variant.
pub fn big_dim(q: u64, d: usize, variant: Variant) -> Option<u64> {
    let qd = q.checked_pow(d as u32)?;
    Some(match variant {
        Variant::Plain => qd - 1,
        Variant::Gset => (qd - 1) / (q - 1),
    })
}

fn basis_vectors(f: &FieldSpec, d: usize, variant: Variant) -> Vec<Vec<Elem>> {
    let q = f.order() as u64;
    let total = q.pow(d as u32);
    match variant {
        Variant::Plain => (1..total).map(|e| decode(q, d, e)).collect(),
        Variant::Gset => {
            // Lowest nonzero coordinate normalized to 1.
            let mut out = Vec::new();
            for i in 0..d {
                let base = q.pow(i as u32);
                let rest = q.pow((d - i - 1) as u32);
                for r in 0..rest {
                    out.push(base + r * base * q);
                }
            }
            out.sort_unstable();
            out.into_iter().map(|e| decode(q, d, e)).collect()
        }
    }
}

pub fn counit_package(r: &LinRep, variant: Variant, limits: &Limits) -> Result<CounitPackage> {
    let f = &r.field;
    let q = f.order() as u64;
    for (v, &d) in r.dims.iter().enumerate() {
        match big_dim(q, d, variant) {
            Some(n) if n <= limits.max_basis => {}
            _ => {
                return Err(CoreError::TooLarge(format!(
                    "object {} has dimension {d}; the {variant} package would exceed {} basis elements",
                    r.shape.objects()[v],
                    limits.max_basis
                )))
            }
        }
    }
    let basis: Vec<Vec<Vec<Elem>>> = r.dims.iter().map(|&d| basis_vectors(f, d, variant)).collect();
    let index: Vec<HashMap<u64, usize>> = basis
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, x)| (encode(q, x), i)).collect())
        .collect();
    let counit: Vec<Matrix> = r
        .dims
        .iter()
        .zip(&basis)
        .map(|(&d, b)| Matrix::from_fn(d, b.len(), |i, j| b[j][i]))
        .collect();
    let mats = r
        .shape
        .arrows()
        .iter()
        .zip(&r.mats)
        .map(|(a, m)| {
            let mut u = Matrix::zeros(basis[a.dst].len(), basis[a.src].len());
            for (j, x) in basis[a.src].iter().enumerate() {
                let y = m.mul_vec(f, x);
                let Some(&mu) = y.iter().find(|&&c| c != 0) else { continue };
                match variant {
                    Variant::Plain => u.set(index[a.dst][&encode(q, &y)], j, 1),
                    Variant::Gset => {
                        let inv = f.inv_nonzero(mu);
                        let yhat: Vec<Elem> = y.iter().map(|&c| f.mul(c, inv)).collect();
                        u.set(index[a.dst][&encode(q, &yhat)], j, mu);
                    }
                }
            }
            u
        })
        .collect();
    let dims = basis.iter().map(Vec::len).collect();
    let big = LinRep { field: f.clone(), shape: r.shape.clone(), dims, mats };
    Ok(CounitPackage { big, counit, variant, basis })
}

/// Closed-form `(unknowns, equations)` of the split system.
pub fn system_size(r: &LinRep, variant: Variant) -> Option<(u64, u64)> {
    let q = r.field.order() as u64;
    let big: Vec<u64> = r.dims.iter().map(|&d| big_dim(q, d, variant)).collect::<Option<_>>()?;
    let unknowns = r.dims.iter().zip(&big).map(|(&d, &n)| d as u64 * n).sum();
    let equations = r.dims.iter().map(|&d| (d * d) as u64).sum::<u64>()
        + r.shape.arrows().iter().map(|a| r.dims[a.src] as u64 * big[a.dst]).sum::<u64>();
    Some((unknowns, equations))
}

pub fn build_split_system(pkg: &CounitPackage, r: &LinRep) -> LinearSystem {
    let f = &r.field;
    let n = r.dims.len();
    let bd = &pkg.big.dims;
    let mut offsets = vec![0];
    let mut vars = Vec::new();
    for v in 0..n {
        for i in 0..bd[v] {
            for j in 0..r.dims[v] {
                vars.push(Unknown { block: v, row: i, col: j });
            }
        }
        offsets.push(vars.len());
    }
    let var = |v: usize, i: usize, j: usize| offsets[v] + i * r.dims[v] + j;
    let mut b = SystemBuilder::new(vars);
    let mut terms = Vec::new();
    for v in 0..n {
        let e = &pkg.counit[v];
        for i in 0..r.dims[v] {
            for j in 0..r.dims[v] {
                terms.clear();
                for k in 0..bd[v] {
                    let c = e.get(i, k);
                    if c != 0 {
                        terms.push((var(v, k, j), c));
                    }
                }
                b.push(f, &terms, (i == j) as Elem);
            }
        }
    }
    for (ai, a) in r.shape.arrows().iter().enumerate() {
        let (v, w) = (a.src, a.dst);
        let (l, u) = (&r.mats[ai], &pkg.big.mats[ai]);
        // Column-sparse view of U: the nonzero entries of each row.
        let mut u_rows: Vec<Vec<(usize, Elem)>> = vec![Vec::new(); bd[w]];
        for row in 0..bd[w] {
            for col in 0..bd[v] {
                let c = u.get(row, col);
                if c != 0 {
                    u_rows[row].push((col, c));
                }
            }
        }
        // (G_w L - U G_v)[i][j] = 0
        for (i, u_row) in u_rows.iter().enumerate() {
            for j in 0..r.dims[v] {
                terms.clear();
                for k in 0..r.dims[w] {
                    let c = l.get(k, j);
                    if c != 0 {
                        terms.push((var(w, i, k), c));
                    }
                }
                for &(col, c) in u_row {
                    terms.push((var(v, col, j), f.neg(c)));
                }
                b.push(f, &terms, 0);
            }
        }
    }
    b.finish()
}

/// Decides additive Set-realizability, returning a verified section when it exists.
pub fn is_add_set_realizable(r: &LinRep, variant: Variant, limits: &Limits) -> Result<Verdict> {
    let pkg = counit_package(r, variant, limits)?;
    let (unknowns, equations) = system_size(r, variant).expect("package sizes fit");
    if unknowns.saturating_mul(equations) > limits.max_system_entries {
        return Err(CoreError::TooLarge(format!(
            "split system with {unknowns} unknowns and {equations} equations exceeds {} entries",
            limits.max_system_entries
        )));
    }
    let sys = build_split_system(&pkg, r);
    let solution = sys.solve(&r.field)?;
    let witness = solution.map(|x| {
        let mut off = 0;
        r.dims
            .iter()
            .zip(&pkg.big.dims)
            .map(|(&d, &n)| {
                let m = Matrix::from_vec(n, d, x[off..off + n * d].to_vec()).expect("block size");
                off += n * d;
                m
            })
            .collect::<Witness>()
    });
    if let Some(w) = &witness {
        if !check_witness(r, &pkg, w)? {
            return Err(CoreError::Invalid("solver returned a section that fails verification".into()));
        }
    }
    Ok(Verdict {
        realizable: witness.is_some(),
        witness,
        unknowns: sys.num_unknowns(),
        equations: sys.num_equations(),
        package: pkg,
    })
}

/// Checks `E_v G_v = I` and `G_w L = U G_v` by direct multiplication.
pub fn check_witness(r: &LinRep, pkg: &CounitPackage, w: &[Matrix]) -> Result<bool> {
    let f = &r.field;
    if w.len() != r.dims.len() {
        return Err(CoreError::Mismatch(format!("{} witness blocks for {} objects", w.len(), r.dims.len())));
    }
    for (v, g) in w.iter().enumerate() {
        if g.shape() != (pkg.big.dims[v], r.dims[v]) {
            return Err(CoreError::Mismatch(format!(
                "witness block at {} is {}x{}, expected {}x{}",
                r.shape.objects()[v],
                g.rows(),
                g.cols(),
                pkg.big.dims[v],
                r.dims[v]
            )));
        }
        if !pkg.counit[v].dot(f, g).is_identity() {
            return Ok(false);
        }
    }
    Ok(r.shape.arrows().iter().enumerate().all(|(i, a)| {
        w[a.dst].dot(f, &r.mats[i]) == pkg.big.mats[i].dot(f, &w[a.src])
    }))
}

/// Whether the counit is natural: `E_w U = L E_v` on every arrow.
pub fn counit_is_natural(r: &LinRep, pkg: &CounitPackage) -> bool {
    let f = &r.field;
    r.shape.arrows().iter().enumerate().all(|(i, a)| {
        pkg.counit[a.dst].dot(f, &pkg.big.mats[i]) == r.mats[i].dot(f, &pkg.counit[a.src])
    })
}
