//! Seeded property checks shared by the property tests and the acceptance run.
//! Each check returns how many instances it examined, or a description of the
//! first counterexample.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use setreal_core::constructions::indicator::indicator;
use setreal_core::constructions::kan::{kan_add_terminal, Attach};
use setreal_core::constructions::reflect::{reflect_source_lin, reflect_source_set};
use setreal_core::constructions::vandermonde::{expansion_copy, is_permutation_or_zero, vandermonde_expand};
use setreal_core::decomp::{decompose, DecompOptions};
use setreal_core::io::linrep_to_json;
use setreal_core::linrep::is_isomorphic;
use setreal_core::random::{random_base_change, random_linrep, random_setrep};
use setreal_core::tda::{h0_setrep, setrep_to_graphs, cylinder_vertex, GraphDiagram};
use setreal_core::{is_add_set_realizable, DiagramShape, LinRep, Limits, Linearization, SetRep, Variant};
use setreal_ff::{Elem, FieldSpec, Matrix};

pub type Check = Result<usize, String>;

pub fn gf(p: u32, k: u32) -> FieldSpec {
    FieldSpec::new(p, k, None).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn verdict(r: &LinRep, variant: Variant) -> bool {
    is_add_set_realizable(r, variant, &Limits::default()).unwrap().realizable
}

pub fn d4_inward_shape() -> DiagramShape {
    DiagramShape::new(&["a1", "a2", "a3", "c"], &[("x1", "a1", "c"), ("x2", "a2", "c"), ("x3", "a3", "c")], &[]).unwrap()
}

pub fn kronecker() -> DiagramShape {
    DiagramShape::new(&["s", "t"], &[("a", "s", "t"), ("b", "s", "t")], &[]).unwrap()
}

/// Small connected quivers without relations.
pub fn quivers() -> Vec<DiagramShape> {
    vec![
        DiagramShape::type_a(&[true]),
        DiagramShape::type_a(&[true, true]),
        DiagramShape::type_a(&[true, false]),
        DiagramShape::type_a(&[false, true]),
        d4_inward_shape(),
        DiagramShape::one_loop(),
        kronecker(),
    ]
}

fn pick<'a, T, R: Rng>(xs: &'a [T], rng: &mut R) -> &'a T {
    &xs[rng.gen_range(0..xs.len())]
}

fn describe(r: &LinRep) -> String {
    linrep_to_json(r)
}

/// Tallies realizable and non-realizable instances so a suite can insist on
/// seeing both.
#[derive(Default)]
struct Tally {
    yes: usize,
    no: usize,
}

impl Tally {
    fn add(&mut self, v: bool) {
        if v {
            self.yes += 1
        } else {
            self.no += 1
        }
    }

    fn finish(&self) -> Check {
        if self.yes == 0 || self.no == 0 {
            return Err(format!("degenerate sample: {} realizable, {} not", self.yes, self.no));
        }
        Ok(self.yes + self.no)
    }
}

/// Arms of dimension at most one around a two-dimensional center.
fn sample_d4<R: Rng>(f: &FieldSpec, rng: &mut R) -> LinRep {
    let full = rng.gen_bool(0.6);
    let mut dims: Vec<usize> = (0..3).map(|_| if full { 1 } else { rng.gen_range(0..=1) }).collect();
    dims.push(2);
    let mut r = setreal_core::random::random_linrep_with_dims(f, &d4_inward_shape(), &dims, rng);
    // Nonzero arm images make three distinct lines, the non-realizable case, likely.
    for m in r.mats.iter_mut().filter(|m| m.cols() == 1) {
        while m.is_zero() {
            *m = Matrix::random(f, 2, 1, rng);
        }
    }
    r
}

/// Random representation biased towards the D4 star, where non-realizable
/// inputs are common.
fn sample<R: Rng>(f: &FieldSpec, rng: &mut R) -> LinRep {
    let shapes = quivers();
    if rng.gen_bool(0.4) {
        sample_d4(f, rng)
    } else {
        random_linrep(f, pick(&shapes, rng), 2, rng)
    }
}

pub fn plain_gset_agree(n: usize, seed: u64) -> Check {
    let mut t = Tally::default();
    let mut rng = rng(seed);
    for i in 0..n {
        let f = if i % 2 == 0 { gf(2, 1) } else { gf(3, 1) };
        let r = sample(&f, &mut rng);
        let (p, g) = (verdict(&r, Variant::Plain), verdict(&r, Variant::Gset));
        if p != g {
            return Err(format!("plain {p} vs gset {g} on {}", describe(&r)));
        }
        t.add(g);
    }
    t.finish()
}

pub fn isomorphism_invariant(n: usize, seed: u64) -> Check {
    let mut t = Tally::default();
    let mut rng = rng(seed);
    for i in 0..n {
        let f = if i % 2 == 0 { gf(2, 1) } else { gf(3, 1) };
        let r = sample(&f, &mut rng);
        let b = random_base_change(&f, &r.dims, &mut rng);
        let s = r.conjugate(&b).unwrap();
        let (v, w) = (verdict(&r, Variant::Gset), verdict(&s, Variant::Gset));
        if v != w {
            return Err(format!("verdict changed under base change of {}", describe(&r)));
        }
        t.add(v);
    }
    t.finish()
}

pub fn extension_invariant(n: usize, seed: u64) -> Check {
    let mut t = Tally::default();
    let mut rng = rng(seed);
    let (small, big) = (gf(2, 1), gf(2, 2));
    for _ in 0..n {
        let r = sample(&small, &mut rng);
        let e = r.tensor_extend(&big).unwrap();
        let (v, w) = (verdict(&r, Variant::Gset), verdict(&e, Variant::Gset));
        if v != w {
            return Err(format!("GF(2) {v} vs GF(4) {w} on {}", describe(&r)));
        }
        t.add(v);
    }
    t.finish()
}

pub fn kan_preserves_verdict(n: usize, seed: u64) -> Check {
    let mut t = Tally::default();
    let mut rng = rng(seed);
    for i in 0..n {
        let f = if i % 2 == 0 { gf(2, 1) } else { gf(3, 1) };
        let r = sample(&f, &mut rng);
        let attach = if r.shape.is_acyclic() && rng.gen_bool(0.5) { Attach::Sinks } else { Attach::AllObjects };
        let k = kan_add_terminal(&r, "top", attach).unwrap();
        if k.validate().is_err() {
            return Err(format!("extension is not a representation: {}", describe(&r)));
        }
        let (v, w) = (verdict(&r, Variant::Gset), verdict(&k, Variant::Gset));
        if v != w {
            return Err(format!("{attach:?}: {v} before, {w} after extending {}", describe(&r)));
        }
        t.add(v);
    }
    t.finish()
}

/// Quivers with a source of out-degree at most two, and that source.
fn reflectable() -> Vec<(DiagramShape, usize)> {
    let y = DiagramShape::new(&["d", "x", "y", "z"], &[("a", "d", "x"), ("b", "d", "y"), ("c", "y", "z")], &[]).unwrap();
    vec![
        (DiagramShape::type_a(&[true]), 0),
        (DiagramShape::type_a(&[true, true]), 0),
        (DiagramShape::type_a(&[false, true]), 1),
        (kronecker(), 0),
        (y, 0),
    ]
}

/// `free*(sigma_d S)` and `sigma_d free*(S)` agree away from `d`, have the
/// same dimension at `d`, and their maps out of `(+) S(targets)` have the
/// same kernel, so they differ only by a basis change at `d`.
pub fn reflection_commutes(n: usize, seed: u64) -> Check {
    let mut rng = rng(seed);
    let cases = reflectable();
    for i in 0..n {
        let f = if i % 2 == 0 { gf(2, 1) } else { gf(3, 1) };
        let (shape, d) = pick(&cases, &mut rng);
        let s = random_setrep(shape, 3, false, &mut rng);
        let a = reflect_source_set(&s, *d).unwrap().linearize(&f, Linearization::FreeStar);
        let b = reflect_source_lin(&s.linearize(&f, Linearization::FreeStar), *d).unwrap();
        let fail = || Err(format!("square does not commute for {s:?}"));
        if a.shape != b.shape || a.dims != b.dims {
            return fail();
        }
        let out = shape.out_arrows(*d);
        for k in 0..shape.num_arrows() {
            if !out.contains(&k) && a.mats[k] != b.mats[k] {
                return fail();
            }
        }
        let c = a.dims[*d];
        let p = Matrix::hstack_all(&out.iter().map(|&k| a.mats[k].clone()).collect::<Vec<_>>(), c).unwrap();
        let q = Matrix::hstack_all(&out.iter().map(|&k| b.mats[k].clone()).collect::<Vec<_>>(), c).unwrap();
        if p.rank(&f) != c || q.rank(&f) != c || p.vstack(&q).unwrap().rank(&f) != c {
            return fail();
        }
    }
    Ok(n)
}

/// Shapes with a terminal object, and its index.
fn with_terminal() -> Vec<(DiagramShape, usize)> {
    vec![
        (DiagramShape::type_a(&[true]), 1),
        (DiagramShape::type_a(&[true, true]), 2),
        (d4_inward_shape(), 3),
    ]
}

pub fn terminal_dim_bound(n: usize, seed: u64) -> Check {
    let mut t = Tally::default();
    let mut rng = rng(seed);
    let cases = with_terminal();
    for i in 0..n {
        let f = if i % 2 == 0 { gf(2, 1) } else { gf(3, 1) };
        let (shape, term) = pick(&cases, &mut rng);
        let mut r = random_linrep(&f, shape, 3, &mut rng);
        if *term == 3 && rng.gen_bool(0.5) {
            r = sample_d4(&f, &mut rng);
        }
        let dec = decompose(&r, &DecompOptions { seed: i as u64, ..Default::default() }).unwrap();
        for fac in &dec.factors {
            let v = verdict(&fac.rep, Variant::Gset);
            if v && fac.rep.dims[*term] > 1 {
                return Err(format!("realizable indecomposable with terminal dim > 1: {}", describe(&fac.rep)));
            }
            t.add(v);
        }
    }
    t.finish().map(|_| n)
}

/// Random representation whose nonzero entries are `n`-th roots of unity,
/// at most one per column.
fn monomial_rep<R: Rng>(f: &FieldSpec, shape: &DiagramShape, roots: &[Elem], rng: &mut R) -> LinRep {
    let dims: Vec<usize> = (0..shape.num_objects()).map(|_| rng.gen_range(0..=2)).collect();
    let mats = shape
        .arrows()
        .iter()
        .map(|a| {
            let mut m = Matrix::zeros(dims[a.dst], dims[a.src]);
            for j in 0..dims[a.src] {
                if dims[a.dst] > 0 && rng.gen_bool(0.8) {
                    m.set(rng.gen_range(0..dims[a.dst]), j, *pick(roots, rng));
                }
            }
            m
        })
        .collect();
    LinRep::new(f.clone(), shape.clone(), dims, mats).unwrap()
}

pub fn vandermonde_permutes(n: usize, seed: u64) -> Check {
    let mut rng = rng(seed);
    let cases = [(gf(5, 1), 4usize), (gf(7, 1), 3), (gf(7, 1), 6), (gf(2, 2), 3), (gf(3, 1), 2)];
    let shapes = quivers();
    for _ in 0..n {
        let (f, order) = pick(&cases, &mut rng);
        let roots: Vec<Elem> = f.elements().filter(|&x| x != 0 && f.pow(x, *order as u64) == 1).collect();
        let r = monomial_rep(f, pick(&shapes, &mut rng), &roots, &mut rng);
        let e = vandermonde_expand(&r, *order).unwrap();
        let fail = |why: &str| Err(format!("{why} for {}", describe(&r)));
        if !e.permuted.mats.iter().all(is_permutation_or_zero) {
            return fail("expanded matrix is not permutation-or-zero");
        }
        for (a, (h, p)) in r.shape.arrows().iter().zip(e.hat.mats.iter().zip(&e.permuted.mats)) {
            if e.base_change[a.dst].dot(f, h) != p.dot(f, &e.base_change[a.src]) {
                return fail("base change does not conjugate");
            }
        }
        if expansion_copy(&e.hat, *order, 1) != r {
            return fail("copy 1 differs from the input");
        }
        if r.total_dim() <= 4 && !verdict(&r, Variant::Gset) {
            return fail("root-of-unity representation judged not realizable");
        }
    }
    Ok(n)
}

/// Connected components by depth-first search, labelled 1.. in order of the
/// smallest vertex name.
fn component_labels(g: &setreal_core::tda::Graph) -> BTreeMap<String, u32> {
    let mut adj: BTreeMap<&str, Vec<&str>> = g.vertices.iter().map(|v| (v.as_str(), Vec::new())).collect();
    for (a, b) in &g.edges {
        adj.get_mut(a.as_str()).unwrap().push(b);
        adj.get_mut(b.as_str()).unwrap().push(a);
    }
    let mut label = BTreeMap::new();
    let mut next = 0;
    for &v in adj.keys() {
        if label.contains_key(v) {
            continue;
        }
        next += 1;
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            if label.insert(x.to_string(), next).is_none() {
                stack.extend(adj[x].iter().copied());
            }
        }
    }
    label
}

fn round_trip(s: &SetRep, g: &GraphDiagram) -> Result<(), String> {
    let h = h0_setrep(g).map_err(|e| e.to_string())?;
    if h.sizes != s.sizes {
        return Err(format!("H0 sizes {:?}, expected {:?}", h.sizes, s.sizes));
    }
    // phi_v(i) = component of vertex v:i in G(v).
    let phi: Vec<Vec<u32>> = (0..s.sizes.len())
        .map(|v| {
            let labels = component_labels(&g.graphs[v]);
            (1..=s.sizes[v]).map(|i| labels[&cylinder_vertex(&s.shape, v, i)]).collect()
        })
        .collect();
    for (v, p) in phi.iter().enumerate() {
        let mut seen = p.clone();
        seen.sort_unstable();
        if seen != (1..=s.sizes[v] as u32).collect::<Vec<_>>() {
            return Err(format!("object {v}: elements do not biject with components"));
        }
    }
    for (k, a) in s.shape.arrows().iter().enumerate() {
        for i in 1..=s.sizes[a.src] {
            let lhs = phi[a.dst][s.maps[k][i - 1] as usize - 1];
            let rhs = h.maps[k][phi[a.src][i - 1] as usize - 1];
            if lhs != rhs {
                return Err(format!("arrow {} does not commute with the bijection", a.name));
            }
        }
    }
    Ok(())
}

pub fn h0_round_trip(n: usize, seed: u64) -> Check {
    let mut rng = rng(seed);
    let shapes = [
        DiagramShape::type_a(&[true, true]),
        DiagramShape::type_a(&[true, false]),
        d4_inward_shape(),
        DiagramShape::grid(2, 2),
        DiagramShape::grid(2, 3),
    ];
    for _ in 0..n {
        let s = random_setrep(pick(&shapes, &mut rng), 3, true, &mut rng);
        let g = setrep_to_graphs(&s).map_err(|e| e.to_string())?;
        round_trip(&s, &g).map_err(|e| format!("{e} for {s:?}"))?;
    }
    Ok(n)
}

fn full_indicator_multiplicity(r: &LinRep, seed: u64) -> usize {
    let all: Vec<usize> = (0..r.dims.len()).collect();
    let full = indicator(&r.field, &r.shape, &all).unwrap();
    let dec = decompose(r, &DecompOptions { seed, ..Default::default() }).unwrap();
    dec.factors
        .iter()
        .filter(|fac| fac.rep.dims == full.dims && is_isomorphic(&fac.rep, &full).unwrap())
        .map(|fac| fac.multiplicity)
        .sum()
}

pub fn free_splits_full_indicator(n: usize, seed: u64) -> Check {
    let mut rng = rng(seed);
    let mut shapes = quivers();
    shapes.push(DiagramShape::grid(2, 2));
    for i in 0..n {
        let f = if i % 2 == 0 { gf(2, 1) } else { gf(3, 1) };
        let s = random_setrep(pick(&shapes, &mut rng), 3, false, &mut rng);
        let free = full_indicator_multiplicity(&s.linearize(&f, Linearization::Free), i as u64);
        let star = full_indicator_multiplicity(&s.linearize(&f, Linearization::FreeStar), i as u64);
        if free != star + 1 {
            return Err(format!("full indicator {free} times in free, {star} in free* for {s:?}"));
        }
    }
    Ok(n)
}
