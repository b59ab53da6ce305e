//! Krull-Schmidt decompositions via Fitting splittings of random
//! endomorphisms, and indecomposables of Dynkin quivers.

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use setreal_ff::{min_poly, Elem, Matrix, Poly};

use crate::constructions::reflect::reflect_source_lin;
use crate::error::{CoreError, Result};
use crate::linrep::{compose, find_isomorphism, hom_space, search_span, LinRep, Morphism};
use crate::shape::DiagramShape;

/// Random endomorphisms tried before the exhaustive fallback.
const SPLIT_SAMPLES: usize = 48;

#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub basis: Vec<Morphism>,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn end_algebra(r: &LinRep) -> Result<EndAlgebra> {
    Ok(EndAlgebra { basis: hom_space(r, r)? })
}

#[derive(Clone, Debug)]
pub struct DecompOptions {
    pub seed: u64,
    /// Largest total dimension accepted by [`decompose`].
    pub max_total_dim: usize,
}

impl Default for DecompOptions {
    fn default() -> Self {
        DecompOptions { seed: 0, max_total_dim: 512 }
    }
}

/// One isomorphism class of summands. `inclusions[i]` and `projections[i]`
/// embed and extract the `i`-th copy.
#[derive(Clone, Debug)]
pub struct Factor {
    pub rep: LinRep,
    pub multiplicity: usize,
    pub inclusions: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub factors: Vec<Factor>,
}

impl Decomposition {
    pub fn num_summands(&self) -> usize {
        self.factors.iter().map(|f| f.multiplicity).sum()
    }

    /// The direct sum of all factors with multiplicity.
    pub fn reassemble(&self, like: &LinRep) -> Result<LinRep> {
        let reps: Vec<LinRep> = self
            .factors
            .iter()
            .flat_map(|f| std::iter::repeat(f.rep.clone()).take(f.multiplicity))
            .collect();
        LinRep::direct_sum_all(&like.field, &like.shape, &reps)
    }
}

/// Complementary subrepresentations `ker a(theta)` and `ker b(theta)`.
struct Split {
    incl: [Morphism; 2],
    proj: [Morphism; 2],
}

enum Outcome {
    Split(Split),
    Indecomposable,
}

fn block_min_poly(r: &LinRep, theta: &Morphism) -> Poly {
    min_poly(&r.field, theta)
}

/// A coprime factorization `mu = a * b` with both factors nonconstant.
fn coprime_split<R: Rng + ?Sized>(r: &LinRep, mu: &Poly, rng: &mut R) -> Option<(Poly, Poly)> {
    let f = &r.field;
    let factors = mu.factor(f, rng);
    if factors.len() < 2 {
        return None;
    }
    let (g, e) = &factors[0];
    let a = g.pow(f, *e as u64);
    let b = mu.div_exact(f, &a);
    Some((a, b))
}

fn fitting_split(r: &LinRep, theta: &Morphism, a: &Poly, b: &Poly) -> Result<Split> {
    let f = &r.field;
    let mut incl = [Vec::new(), Vec::new()];
    let mut proj = [Vec::new(), Vec::new()];
    for (v, t) in theta.iter().enumerate() {
        let k1 = t.eval_poly(f, a).nullspace(f);
        let k2 = t.eval_poly(f, b).nullspace(f);
        let basis = k1.hstack(&k2)?;
        let inv = basis
            .inverse(f)?
            .ok_or_else(|| CoreError::Invalid("generalized eigenspaces are not complementary".into()))?;
        let n1 = k1.cols();
        let d = r.dims[v];
        proj[0].push(inv.submatrix(0, 0, n1, d));
        proj[1].push(inv.submatrix(n1, 0, d - n1, d));
        incl[0].push(k1);
        incl[1].push(k2);
    }
    Ok(Split { incl, proj })
}

fn try_split(r: &LinRep, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    if r.total_dim() == 0 {
        return Err(CoreError::Invalid("the zero representation has no indecomposable summands".into()));
    }
    let end = end_algebra(r)?;
    if end.dim() == 1 {
        return Ok(Outcome::Indecomposable);
    }
    let shapes: Vec<(usize, usize)> = r.dims.iter().map(|&d| (d, d)).collect();
    let mut certified = false;
    let mut split = None;
    let mut poly_rng = ChaCha8Rng::seed_from_u64(rng.gen());
    let found = search_span(&r.field, &end.basis, &shapes, rng, SPLIT_SAMPLES, |theta| {
        if certified {
            return true;
        }
        let mu = block_min_poly(r, theta);
        match coprime_split(r, &mu, &mut poly_rng) {
            Some(ab) => {
                split = Some(ab);
                true
            }
            None => {
                // F[theta] = End and End local: no idempotents.
                if mu.deg() == end.dim() {
                    certified = true;
                }
                certified
            }
        }
    });
    let found = match found {
        Ok(x) => x,
        Err(CoreError::Inconclusive(_)) => {
            return Err(CoreError::Inconclusive(format!(
                "endomorphism algebra of dimension {} over GF({}) neither split nor certified local",
                end.dim(),
                r.field.order()
            )))
        }
        Err(e) => return Err(e),
    };
    match (found, split) {
        (Some(theta), Some((a, b))) => Ok(Outcome::Split(fitting_split(r, &theta, &a, &b)?)),
        _ => Ok(Outcome::Indecomposable),
    }
}

/// Whether `R` is nonzero with no idempotent endomorphisms besides 0 and 1.
pub fn is_indecomposable(r: &LinRep, seed: u64) -> Result<bool> {
    if r.total_dim() == 0 {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(matches!(try_split(r, &mut rng)?, Outcome::Indecomposable))
}

struct Piece {
    rep: LinRep,
    incl: Morphism,
    proj: Morphism,
}

fn split_all(r: &LinRep, rng: &mut ChaCha8Rng) -> Result<Vec<Piece>> {
    let mut done = Vec::new();
    let mut todo = vec![Piece {
        rep: r.clone(),
        incl: crate::linrep::identity_morphism(r),
        proj: crate::linrep::identity_morphism(r),
    }];
    let f = &r.field;
    while let Some(p) = todo.pop() {
        if p.rep.total_dim() == 0 {
            continue;
        }
        match try_split(&p.rep, rng)? {
            Outcome::Indecomposable => done.push(p),
            Outcome::Split(s) => {
                for i in 0..2 {
                    let rep = p.rep.compress(&s.incl[i], &s.proj[i]);
                    todo.push(Piece {
                        rep,
                        incl: compose(f, &p.incl, &s.incl[i]),
                        proj: compose(f, &s.proj[i], &p.proj),
                    });
                }
            }
        }
    }
    Ok(done)
}

fn sort_key(r: &LinRep) -> (usize, Vec<usize>, Vec<Vec<Elem>>) {
    (r.total_dim(), r.dims.clone(), r.mats.iter().map(|m| m.data().to_vec()).collect())
}

pub fn decompose(r: &LinRep, opts: &DecompOptions) -> Result<Decomposition> {
    if r.total_dim() > opts.max_total_dim {
        return Err(CoreError::TooLarge(format!(
            "total dimension {} exceeds the decomposition cap {}",
            r.total_dim(),
            opts.max_total_dim
        )));
    }
    let f = &r.field;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut pieces = split_all(r, &mut rng)?;
    pieces.sort_by_cached_key(|p| sort_key(&p.rep));
    let mut factors: Vec<Factor> = Vec::new();
    'next: for p in pieces {
        for fac in factors.iter_mut() {
            if fac.rep.dims != p.rep.dims {
                continue;
            }
            if let Some(phi) = find_isomorphism(&p.rep, &fac.rep)? {
                let inv: Morphism = phi
                    .iter()
                    .map(|m| m.inverse(f).map(|x| x.expect("isomorphism")))
                    .collect::<std::result::Result<_, _>>()?;
                fac.inclusions.push(compose(f, &p.incl, &inv));
                fac.projections.push(compose(f, &phi, &p.proj));
                fac.multiplicity += 1;
                continue 'next;
            }
        }
        factors.push(Factor { rep: p.rep, multiplicity: 1, inclusions: vec![p.incl], projections: vec![p.proj] });
    }
    Ok(Decomposition { factors })
}

/// Tits form `sum d_v^2 - sum_arrows d_src d_dst`.
pub fn tits_form(shape: &DiagramShape, d: &[usize]) -> i64 {
    let sq: i64 = d.iter().map(|&x| (x * x) as i64).sum();
    sq - shape.arrows().iter().map(|a| (d[a.src] * d[a.dst]) as i64).sum::<i64>()
}

/// The Dynkin type (`"A5"`, `"D4"`, `"E6"`, ...) of a connected quiver
/// whose underlying graph is simply laced of finite type.
pub fn dynkin_type(shape: &DiagramShape) -> Option<String> {
    let n = shape.num_objects();
    if n == 0 || shape.components().len() != 1 || shape.num_arrows() != n - 1 {
        return None;
    }
    let mut edges = BTreeSet::new();
    for a in shape.arrows() {
        if a.src == a.dst || !edges.insert((a.src.min(a.dst), a.src.max(a.dst))) {
            return None;
        }
    }
    let mut deg = vec![0usize; n];
    for &(u, v) in &edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    if branch.is_empty() {
        return Some(format!("A{n}"));
    }
    if branch.len() > 1 || deg[branch[0]] > 3 {
        return None;
    }
    let c = branch[0];
    // Arm lengths counted without the branch point.
    let mut arms: Vec<usize> = edges
        .iter()
        .filter_map(|&(u, v)| if u == c { Some(v) } else if v == c { Some(u) } else { None })
        .map(|start| {
            let (mut prev, mut cur, mut len) = (c, start, 1);
            loop {
                let next = edges
                    .iter()
                    .filter_map(|&(u, v)| if u == cur { Some(v) } else if v == cur { Some(u) } else { None })
                    .find(|&x| x != prev);
                match next {
                    Some(x) => {
                        prev = cur;
                        cur = x;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms[..] {
        [1, 1, _] => Some(format!("D{n}")),
        [1, 2, 2] => Some("E6".into()),
        [1, 2, 3] => Some("E7".into()),
        [1, 2, 4] => Some("E8".into()),
        _ => None,
    }
}

/// All positive roots of a Dynkin quiver, sorted by (height, vector).
pub fn positive_roots(shape: &DiagramShape) -> Result<Vec<Vec<usize>>> {
    if dynkin_type(shape).is_none() {
        return Err(CoreError::Shape("positive roots are only enumerated for Dynkin quivers".into()));
    }
    let n = shape.num_objects();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    for k in 0..n {
        let mut e = vec![0; n];
        e[k] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(d) = queue.pop_front() {
        for k in 0..n {
            let mut e = d.clone();
            e[k] += 1;
            if tits_form(shape, &e) == 1 && seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
    }
    let mut roots: Vec<Vec<usize>> = seen.into_iter().collect();
    roots.sort_by_key(|d| (d.iter().sum::<usize>(), d.clone()));
    Ok(roots)
}

fn simple_rep(shape: &DiagramShape, field: &setreal_ff::FieldSpec, k: usize) -> LinRep {
    let mut dims = vec![0; shape.num_objects()];
    dims[k] = 1;
    let mats = shape.arrows().iter().map(|a| Matrix::zeros(dims[a.dst], dims[a.src])).collect();
    LinRep { field: field.clone(), shape: shape.clone(), dims, mats }
}

/// The indecomposable of a Dynkin quiver with dimension vector `d`, built by
/// reflecting `d` down to a simple root at sinks and reflecting back up.
pub fn root_indecomposable(field: &setreal_ff::FieldSpec, shape: &DiagramShape, d: &[usize]) -> Result<LinRep> {
    if dynkin_type(shape).is_none() {
        return Err(CoreError::Shape("root_indecomposable needs a Dynkin quiver".into()));
    }
    if d.len() != shape.num_objects() {
        return Err(CoreError::Mismatch(format!("{} entries for {} objects", d.len(), shape.num_objects())));
    }
    if tits_form(shape, d) != 1 {
        return Err(CoreError::Invalid(format!("{d:?} is not a positive root")));
    }
    let mut cur = shape.clone();
    let mut dims: Vec<i64> = d.iter().map(|&x| x as i64).collect();
    let mut steps: Vec<(DiagramShape, usize)> = Vec::new();
    let bottom = loop {
        if steps.len() > 10_000 {
            return Err(CoreError::Invalid("reflection sequence did not terminate".into()));
        }
        let k = *cur.sinks().first().expect("acyclic quivers have sinks");
        let simple = dims.iter().enumerate().all(|(v, &x)| x == (v == k) as i64);
        if simple {
            break k;
        }
        let flip = cur.in_arrows(k);
        let sum: i64 = flip.iter().map(|&a| dims[cur.arrows()[a].src]).sum();
        dims[k] = sum - dims[k];
        if dims[k] < 0 {
            return Err(CoreError::Invalid(format!("{d:?} is not a positive root")));
        }
        let next = cur.with_reversed(&flip);
        steps.push((cur, k));
        cur = next;
    };
    let mut rep = simple_rep(&cur, field, bottom);
    while let Some((prev, k)) = steps.pop() {
        rep = reflect_source_lin(&rep, k)?;
        debug_assert_eq!(rep.shape, prev);
        rep.shape = prev;
    }
    if end_algebra(&rep)?.dim() != 1 {
        return Err(CoreError::Invalid(format!("reflected representation for {d:?} is not a brick")));
    }
    Ok(rep)
}
