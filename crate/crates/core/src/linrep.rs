//! Linear representations: a vector space per object and a matrix per arrow.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use setreal_ff::{Elem, FieldSpec, Matrix, SystemBuilder, Unknown};

use crate::error::{CoreError, Result};
use crate::shape::DiagramShape;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinRep {
    pub field: FieldSpec,
    pub shape: DiagramShape,
    pub dims: Vec<usize>,
    /// Arrow `a: v -> w` carries a `dims[w] x dims[v]` matrix.
    pub mats: Vec<Matrix>,
}

/// A natural transformation, one matrix per object.
pub type Morphism = Vec<Matrix>;

/// First problem found by [`LinRep::validate`] or `SetRep::validate`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Size { arrow: String, expected: (usize, usize), found: (usize, usize) },
    Entry { arrow: String, value: u32 },
    Relation { lhs: Vec<String>, rhs: Vec<String> },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Size { arrow, expected, found } => write!(
                f,
                "arrow {arrow}: expected a {}x{} table, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Violation::Entry { arrow, value } => write!(f, "arrow {arrow}: entry {value} out of range"),
            Violation::Relation { lhs, rhs } => write!(f, "relation {lhs:?} = {rhs:?} fails"),
        }
    }
}

impl LinRep {
    /// Checks shapes and entry ranges; relations are checked by [`validate`](Self::validate).
    pub fn new(field: FieldSpec, shape: DiagramShape, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<Self> {
        if dims.len() != shape.num_objects() {
            return Err(CoreError::Rep(format!(
                "{} dimensions for {} objects",
                dims.len(),
                shape.num_objects()
            )));
        }
        if mats.len() != shape.num_arrows() {
            return Err(CoreError::Rep(format!("{} matrices for {} arrows", mats.len(), shape.num_arrows())));
        }
        let rep = LinRep { field, shape, dims, mats };
        if let Some(v) = rep.size_violation() {
            return Err(CoreError::Rep(v.to_string()));
        }
        Ok(rep)
    }

    /// Builds from row lists given in arrow order.
    pub fn from_rows(field: FieldSpec, shape: DiagramShape, dims: Vec<usize>, rows: &[Vec<Vec<Elem>>]) -> Result<Self> {
        if rows.len() != shape.num_arrows() {
            return Err(CoreError::Rep(format!("{} matrices for {} arrows", rows.len(), shape.num_arrows())));
        }
        let mats = shape
            .arrows()
            .iter()
            .zip(rows)
            .map(|(a, r)| {
                let cols = dims.get(a.src).copied().unwrap_or(0);
                if r.len() != dims.get(a.dst).copied().unwrap_or(0) {
                    return Err(CoreError::Rep(format!(
                        "arrow {}: {} rows, expected {}",
                        a.name,
                        r.len(),
                        dims.get(a.dst).copied().unwrap_or(0)
                    )));
                }
                Matrix::from_rows(r, cols).map_err(|e| CoreError::Rep(format!("arrow {}: {e}", a.name)))
            })
            .collect::<Result<Vec<_>>>()?;
        LinRep::new(field, shape, dims, mats)
    }

    pub fn zero(field: FieldSpec, shape: DiagramShape) -> Self {
        let dims = vec![0; shape.num_objects()];
        let mats = vec![Matrix::zeros(0, 0); shape.num_arrows()];
        LinRep { field, shape, dims, mats }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, arrow: &str) -> Result<&Matrix> {
        Ok(&self.mats[self.shape.arrow(arrow)?])
    }

    fn size_violation(&self) -> Option<Violation> {
        let q = self.field.order();
        for (a, m) in self.shape.arrows().iter().zip(&self.mats) {
            let expected = (self.dims[a.dst], self.dims[a.src]);
            if m.shape() != expected {
                return Some(Violation::Size { arrow: a.name.clone(), expected, found: m.shape() });
            }
            if let Some(&value) = m.data().iter().find(|&&x| x >= q) {
                return Some(Violation::Entry { arrow: a.name.clone(), value });
            }
        }
        None
    }

    /// Matrix of a path (arrows in traversal order) starting at `src`.
    pub fn path_matrix(&self, path: &[usize], src: usize) -> Matrix {
        let f = &self.field;
        let mut acc = Matrix::identity(self.dims[src]);
        for &a in path {
            acc = self.mats[a].dot(f, &acc);
        }
        acc
    }

    pub fn validate(&self) -> Result<(), Violation> {
        if let Some(v) = self.size_violation() {
            return Err(v);
        }
        for r in self.shape.relations() {
            if self.path_matrix(&r.lhs, r.src) != self.path_matrix(&r.rhs, r.src) {
                return Err(Violation::Relation {
                    lhs: self.shape.path_names(&r.lhs),
                    rhs: self.shape.path_names(&r.rhs),
                });
            }
        }
        Ok(())
    }

    fn check_compatible(&self, other: &LinRep) -> Result<()> {
        if self.field != other.field {
            return Err(CoreError::Mismatch(format!("fields {} and {}", self.field, other.field)));
        }
        if self.shape.objects() != other.shape.objects() || self.shape.arrows() != other.shape.arrows() {
            return Err(CoreError::Mismatch("different shapes".into()));
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &LinRep) -> Result<LinRep> {
        self.check_compatible(other)?;
        Ok(LinRep {
            field: self.field.clone(),
            shape: self.shape.clone(),
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            mats: self.mats.iter().zip(&other.mats).map(|(a, b)| Matrix::block_diag(&[a.clone(), b.clone()])).collect(),
        })
    }

    pub fn direct_sum_all(field: &FieldSpec, shape: &DiagramShape, reps: &[LinRep]) -> Result<LinRep> {
        let mut acc = LinRep::zero(field.clone(), shape.clone());
        for r in reps {
            acc = acc.direct_sum(r)?;
        }
        Ok(acc)
    }

    /// Re-reads every entry through the canonical embedding into `big`.
    pub fn tensor_extend(&self, big: &FieldSpec) -> Result<LinRep> {
        let table = self.field.embedding_into(big)?;
        Ok(LinRep {
            field: big.clone(),
            shape: self.shape.clone(),
            dims: self.dims.clone(),
            mats: self.mats.iter().map(|m| m.map_entries(|x| table[x as usize])).collect(),
        })
    }

    /// The representation transported along invertible `base[v]`:
    /// arrow `v -> w` becomes `base[w] M base[v]^-1`.
    pub fn conjugate(&self, base: &[Matrix]) -> Result<LinRep> {
        let f = &self.field;
        let inv = base
            .iter()
            .map(|b| b.inverse(f)?.ok_or_else(|| CoreError::Invalid("base change is not invertible".into())))
            .collect::<Result<Vec<_>>>()?;
        let mats = self
            .shape
            .arrows()
            .iter()
            .zip(&self.mats)
            .map(|(a, m)| base[a.dst].dot(f, &m.dot(f, &inv[a.src])))
            .collect();
        Ok(LinRep { field: self.field.clone(), shape: self.shape.clone(), dims: self.dims.clone(), mats })
    }

    /// Whether `phi` is a natural transformation `self -> other`.
    pub fn is_morphism_to(&self, other: &LinRep, phi: &[Matrix]) -> bool {
        let f = &self.field;
        phi.len() == self.dims.len()
            && phi.iter().enumerate().all(|(v, m)| m.shape() == (other.dims[v], self.dims[v]))
            && self.shape.arrows().iter().enumerate().all(|(i, a)| {
                phi[a.dst].dot(f, &self.mats[i]) == other.mats[i].dot(f, &phi[a.src])
            })
    }

    /// The summand cut out by a split pair with `proj[v] * incl[v] = I`;
    /// arrows become `proj_w M incl_v`.
    pub fn compress(&self, incl: &[Matrix], proj: &[Matrix]) -> LinRep {
        let f = &self.field;
        let dims: Vec<usize> = incl.iter().map(|m| m.cols()).collect();
        let mats = self
            .shape
            .arrows()
            .iter()
            .zip(&self.mats)
            .map(|(a, m)| proj[a.dst].dot(f, &m.dot(f, &incl[a.src])))
            .collect();
        LinRep { field: self.field.clone(), shape: self.shape.clone(), dims, mats }
    }
}

pub fn identity_morphism(r: &LinRep) -> Morphism {
    r.dims.iter().map(|&d| Matrix::identity(d)).collect()
}

pub fn compose(f: &FieldSpec, second: &[Matrix], first: &[Matrix]) -> Morphism {
    second.iter().zip(first).map(|(a, b)| a.dot(f, b)).collect()
}

pub fn is_invertible(f: &FieldSpec, phi: &[Matrix]) -> bool {
    phi.iter().all(|m| m.is_invertible(f))
}

fn linear_combination(f: &FieldSpec, basis: &[Morphism], coeffs: &[Elem], shapes: &[(usize, usize)]) -> Morphism {
    let mut out: Morphism = shapes.iter().map(|&(r, c)| Matrix::zeros(r, c)).collect();
    for (b, &c) in basis.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, m) in out.iter_mut().zip(b) {
            *o = o.add(f, &m.scale(f, c)).expect("same shapes");
        }
    }
    out
}

/// Basis of the space of natural transformations `R -> S`.
pub fn hom_space(r: &LinRep, s: &LinRep) -> Result<Vec<Morphism>> {
    r.check_compatible(s)?;
    let f = &r.field;
    let n = r.dims.len();
    let mut offsets = Vec::with_capacity(n + 1);
    let mut vars = Vec::new();
    offsets.push(0);
    for v in 0..n {
        for i in 0..s.dims[v] {
            for j in 0..r.dims[v] {
                vars.push(Unknown { block: v, row: i, col: j });
            }
        }
        offsets.push(vars.len());
    }
    let var = |v: usize, i: usize, j: usize| offsets[v] + i * r.dims[v] + j;
    let mut b = SystemBuilder::new(vars);
    let mut terms = Vec::new();
    for (ai, a) in r.shape.arrows().iter().enumerate() {
        let (v, w) = (a.src, a.dst);
        let (ra, sa) = (&r.mats[ai], &s.mats[ai]);
        // (phi_w R_a - S_a phi_v)[i][j] = 0 for i < dS_w, j < dR_v
        for i in 0..s.dims[w] {
            for j in 0..r.dims[v] {
                terms.clear();
                for k in 0..r.dims[w] {
                    let c = ra.get(k, j);
                    if c != 0 {
                        terms.push((var(w, i, k), c));
                    }
                }
                for l in 0..s.dims[v] {
                    let c = sa.get(i, l);
                    if c != 0 {
                        terms.push((var(v, l, j), f.neg(c)));
                    }
                }
                b.push(f, &terms, 0);
            }
        }
    }
    let sys = b.finish();
    let null = sys.coeffs.nullspace(f);
    Ok((0..null.cols())
        .map(|k| {
            (0..n)
                .map(|v| {
                    Matrix::from_fn(s.dims[v], r.dims[v], |i, j| null.get(var(v, i, j), k))
                })
                .collect()
        })
        .collect())
}

/// Number of random trials before falling back to exhaustive search.
const ISO_SAMPLES: usize = 64;
/// Exhaustive search is attempted when `q^dim` is at most this.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// Searches `span(basis)` for an element satisfying `accept`: random trials,
/// then exhaustive enumeration when small enough. `Ok(None)` is definitive.
pub(crate) fn search_span<R: Rng + ?Sized>(
    f: &FieldSpec,
    basis: &[Morphism],
    shapes: &[(usize, usize)],
    rng: &mut R,
    samples: usize,
    mut accept: impl FnMut(&Morphism) -> bool,
) -> Result<Option<Morphism>> {
    let q = f.order();
    let dim = basis.len();
    for _ in 0..samples {
        let c: Vec<Elem> = (0..dim).map(|_| rng.gen_range(0..q)).collect();
        let m = linear_combination(f, basis, &c, shapes);
        if accept(&m) {
            return Ok(Some(m));
        }
    }
    let total = (q as u64).checked_pow(dim as u32);
    match total {
        Some(t) if t <= EXHAUSTIVE_LIMIT => {
            let mut c = vec![0; dim];
            for _ in 0..t {
                let m = linear_combination(f, basis, &c, shapes);
                if accept(&m) {
                    return Ok(Some(m));
                }
                for x in c.iter_mut() {
                    *x += 1;
                    if *x < q {
                        break;
                    }
                    *x = 0;
                }
            }
            Ok(None)
        }
        _ => Err(CoreError::Inconclusive(format!(
            "no witness in {samples} samples and a search space of {q}^{dim} is too large to enumerate"
        ))),
    }
}

fn rank_profile(r: &LinRep) -> Vec<usize> {
    r.mats.iter().map(|m| m.rank(&r.field)).collect()
}

/// An isomorphism `R -> S` if one exists.
pub fn find_isomorphism(r: &LinRep, s: &LinRep) -> Result<Option<Morphism>> {
    r.check_compatible(s)?;
    if r.dims != s.dims || rank_profile(r) != rank_profile(s) {
        return Ok(None);
    }
    let f = &r.field;
    let hom = hom_space(r, s)?;
    let end = hom_space(r, r)?;
    if hom.len() != end.len() {
        return Ok(None);
    }
    let shapes: Vec<(usize, usize)> = r.dims.iter().map(|&d| (d, d)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    search_span(f, &hom, &shapes, &mut rng, ISO_SAMPLES, |m| is_invertible(f, m))
}

/// Whether `R` and `S` are isomorphic. Randomized search with an exhaustive
/// fallback; reports `Inconclusive` when neither settles the question.
pub fn is_isomorphic(r: &LinRep, s: &LinRep) -> Result<bool> {
    Ok(find_isomorphism(r, s)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kron(f: &FieldSpec, a: [u32; 2], b: [u32; 2]) -> LinRep {
        let shape = DiagramShape::new(&["s", "t"], &[("a", "s", "t"), ("b", "s", "t")], &[]).unwrap();
        LinRep::from_rows(f.clone(), shape, vec![1, 2], &[vec![vec![a[0]], vec![a[1]]], vec![vec![b[0]], vec![b[1]]]])
            .unwrap()
    }

    #[test]
    fn kronecker_base_change() {
        let f = FieldSpec::prime(2).unwrap();
        assert!(is_isomorphic(&kron(&f, [1, 0], [0, 1]), &kron(&f, [1, 0], [1, 1])).unwrap());
        assert!(!is_isomorphic(&kron(&f, [1, 0], [0, 1]), &kron(&f, [1, 0], [1, 0])).unwrap());
    }

    #[test]
    fn a2_hom_dimensions() {
        let f = FieldSpec::prime(3).unwrap();
        let shape = DiagramShape::type_a(&[true]);
        let full = LinRep::from_rows(f.clone(), shape.clone(), vec![1, 1], &[vec![vec![1]]]).unwrap();
        let sink = LinRep::from_rows(f.clone(), shape, vec![0, 1], &[vec![vec![]]]).unwrap();
        assert_eq!(hom_space(&full, &sink).unwrap().len(), 0);
        assert_eq!(hom_space(&sink, &full).unwrap().len(), 1);
        assert_eq!(hom_space(&full, &full).unwrap().len(), 1);
    }

    #[test]
    fn negated_square_violates_relation() {
        let f = FieldSpec::prime(3).unwrap();
        let shape = DiagramShape::grid(2, 2);
        let ones = vec![vec![vec![1]]; 4];
        let rep = LinRep::from_rows(f.clone(), shape.clone(), vec![1; 4], &ones).unwrap();
        assert!(rep.validate().is_ok());
        let mut bad = ones.clone();
        bad[0] = vec![vec![2]];
        let rep = LinRep::from_rows(f, shape, vec![1; 4], &bad).unwrap();
        assert!(matches!(rep.validate(), Err(Violation::Relation { .. })));
    }
}
