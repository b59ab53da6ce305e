//! End-to-end acceptance run. Prints one line per criterion and exits with a
//! failure status if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::Rng;
use setreal_core::constructions::atilde::{band_is_realizable, band_rep, BandSpec};
use setreal_core::constructions::d4tilde::{d4tilde_family, d4tilde_family_dims, FamilyKind};
use setreal_core::constructions::indicator::is_indicator;
use setreal_core::decomp::{decompose, end_algebra, DecompOptions};
use setreal_core::experiment::{sweep, Exceptional};
use setreal_core::gallery::{d4_inward, grid_patterns, intro_grid, star7};
use setreal_core::oracle::{brute_force_realizable, OracleVerdict, SearchBudget};
use setreal_core::random::random_linrep;
use setreal_core::realize::{build_split_system, check_witness, counit_package};
use setreal_core::{is_add_set_realizable, DiagramShape, LinRep, Limits, Linearization, Variant};
use setreal_ff::{Matrix, Poly};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn d4_inward_case() -> Outcome {
    let start = Instant::now();
    for (p, k) in [(2, 1), (3, 1), (2, 2)] {
        let f = gf(p, k);
        let r = d4_inward(&f);
        for v in [Variant::Plain, Variant::Gset] {
            ensure(!verdict(&r, v), || format!("{v} realizable over GF({})", f.order()))?;
        }
        // The gset image of the underlying sets splits into indicators and
        // has q + 1 dimensions at the center.
        let pkg = counit_package(&r, Variant::Gset, &Limits::default()).map_err(|e| e.to_string())?;
        let dec = decompose(&pkg.big, &DecompOptions::default()).map_err(|e| e.to_string())?;
        ensure(dec.factors.iter().all(|fac| is_indicator(&fac.rep)), || "gset image has a non-indicator".into())?;
        ensure(pkg.big.dims[3] as u32 == f.order() + 1, || format!("gset center {}", pkg.big.dims[3]))?;
    }
    let f = gf(2, 1);
    let pkg = counit_package(&d4_inward(&f), Variant::Plain, &Limits::default()).map_err(|e| e.to_string())?;
    let dec = decompose(&pkg.big, &DecompOptions::default()).map_err(|e| e.to_string())?;
    ensure(dec.num_summands() == 3 && dec.factors.iter().all(|fac| is_indicator(&fac.rep)), || {
        format!("free*(forget R) over GF(2) has {} summands", dec.num_summands())
    })?;
    within(start, Duration::from_secs(1))?;
    Ok("not realizable over GF(2), GF(3), GF(4); image splits into 3 indicators".into())
}

fn star7_case() -> Outcome {
    let start = Instant::now();
    ensure(!verdict(&star7(&gf(2, 1)), Variant::Gset), || "realizable over GF(2)".into())?;
    let f = gf(3, 1);
    let r = star7(&f);
    let v = is_add_set_realizable(&r, Variant::Gset, &Limits::default()).map_err(|e| e.to_string())?;
    let w = v.witness.as_ref().ok_or("no witness over GF(3)")?;
    ensure(check_witness(&r, &v.package, w).map_err(|e| e.to_string())?, || "witness fails".into())?;
    within(start, Duration::from_secs(30))?;
    Ok("not realizable over GF(2); GF(3) witness verified".into())
}

fn band_case() -> Outcome {
    let start = Instant::now();
    let a3 = vec![true, false, true, false];
    for (p, top, solver_max, expected) in [(2u32, 5, 5usize, vec![1usize, 2, 4]), (3, 9, 5, vec![1, 3, 9])] {
        let f = gf(p, 1);
        let x1 = Poly::new(&f, vec![1, 1]);
        for m in 1..=top {
            let want = expected.contains(&m);
            for orientation in [vec![true], a3.clone()] {
                let spec = BandSpec { f: x1.clone(), m, orientation: orientation.clone() };
                let closed = band_is_realizable(&f, &spec).map_err(|e| e.to_string())?;
                ensure(closed == want, || format!("closed form wrong at GF({p}) m={m}"))?;
                let limit = if orientation.len() == 1 { solver_max } else { solver_max.min(4) };
                if m <= limit {
                    let r = band_rep(&f, &spec).map_err(|e| e.to_string())?;
                    ensure(verdict(&r, Variant::Gset) == want, || {
                        format!("solver disagrees at GF({p}) m={m}, {} arrows", orientation.len())
                    })?;
                }
            }
        }
    }
    Ok(format!("GF(2) m<=5 gives {{1,2,4}}, GF(3) m<=9 gives {{1,3,9}}; solver up to m=5 ({:.2?})", start.elapsed()))
}

fn e6_case() -> Outcome {
    let start = Instant::now();
    let report = sweep(&gf(2, 1), Exceptional::E6).map_err(|e| e.to_string())?;
    ensure(report.orientations.len() == 32 && report.roots_per_orientation == 36, || "wrong sweep size".into())?;
    ensure(report.matches_prediction(), || "sweep differs from the predicted list".into())?;
    within(start, Duration::from_secs(600))?;
    let n = report.orientations.iter().filter(|o| o.surjective).count();
    Ok(format!("32 orientations x 36 roots; {n} surjective, all as predicted"))
}

fn intro_grid_case() -> Outcome {
    let start = Instant::now();
    let r = intro_grid(&gf(2, 1));
    ensure(!verdict(&r, Variant::Gset), || "realizable".into())?;
    within(start, Duration::from_secs(60))?;
    Ok("2x5 grid not realizable over GF(2)".into())
}

fn grid_patterns_case() -> Outcome {
    for p in [2, 3] {
        for (i, r) in grid_patterns(&gf(p, 1)).iter().enumerate() {
            ensure(verdict(r, Variant::Gset), || format!("pattern {i} not realizable over GF({p})"))?;
        }
    }
    Ok("3 patterns realizable over GF(2) and GF(3)".into())
}

fn d4tilde_case() -> Outcome {
    let mut count = 0;
    for p in [2, 3] {
        let f = gf(p, 1);
        for kind in [FamilyKind::Preprojective, FamilyKind::Preinjective] {
            for v in 1..=5 {
                for n in 1..=3 {
                    let tag = || format!("{kind:?} {v} n={n} GF({p})");
                    let r = d4tilde_family(kind, v, n).map_err(|e| e.to_string())?.linearize(&f, Linearization::FreeStar);
                    let dims = d4tilde_family_dims(kind, v, n).map_err(|e| e.to_string())?;
                    ensure(r.dims == dims, || format!("{}: dims {:?}", tag(), r.dims))?;
                    ensure(end_algebra(&r).map_err(|e| e.to_string())?.dim() == 1, || format!("{}: not a brick", tag()))?;
                    if p == 2 {
                        ensure(verdict(&r, Variant::Gset), || format!("{}: not realizable", tag()))?;
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} members are bricks with the listed dimensions; solver confirms over GF(2)"))
}

/// Every representation with dimensions at most 2 over GF(2).
fn all_small_reps(shape: &DiagramShape) -> Vec<LinRep> {
    let f = gf(2, 1);
    let n = shape.num_objects();
    let mut out = Vec::new();
    for code in 0..3usize.pow(n as u32) {
        let dims: Vec<usize> = (0..n).map(|i| code / 3usize.pow(i as u32) % 3).collect();
        let sizes: Vec<(usize, usize)> = shape.arrows().iter().map(|a| (dims[a.dst], dims[a.src])).collect();
        let bits: usize = sizes.iter().map(|(r, c)| r * c).sum();
        for word in 0..1u64 << bits {
            let mut k = 0;
            let mats = sizes
                .iter()
                .map(|&(r, c)| {
                    Matrix::from_fn(r, c, |_, _| {
                        k += 1;
                        (word >> (k - 1) & 1) as u32
                    })
                })
                .collect();
            out.push(LinRep::new(f.clone(), shape.clone(), dims.clone(), mats).unwrap());
        }
    }
    out
}

fn oracle_case() -> Outcome {
    let start = Instant::now();
    let mut shapes = vec![DiagramShape::type_a(&[true]), DiagramShape::one_loop()];
    for o in [[true, true], [true, false], [false, true], [false, false]] {
        shapes.push(DiagramShape::type_a(&o));
    }
    let mut total = 0;
    for shape in &shapes {
        for r in all_small_reps(shape) {
            let solver = verdict(&r, Variant::Gset);
            let report = brute_force_realizable(&r, &SearchBudget::complete(&r)).map_err(|e| e.to_string())?;
            let oracle = match report.verdict {
                OracleVerdict::Realizable { .. } => true,
                OracleVerdict::NotFound { definitive: true } => false,
                OracleVerdict::NotFound { definitive: false } => return Err("oracle budget incomplete".into()),
            };
            ensure(solver == oracle, || format!("solver {solver}, oracle {oracle} on {:?}", r.mats))?;
            total += 1;
        }
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!("{total} representations agree"))
}

fn property_case() -> Outcome {
    const N: usize = 200;
    let suites: [(&str, fn(usize, u64) -> Check); 9] = [
        ("plain/gset", plain_gset_agree),
        ("isomorphism", isomorphism_invariant),
        ("GF(2)->GF(4)", extension_invariant),
        ("Kan", kan_preserves_verdict),
        ("reflection", reflection_commutes),
        ("terminal", terminal_dim_bound),
        ("Vandermonde", vandermonde_permutes),
        ("H0", h0_round_trip),
        ("free/free*", free_splits_full_indicator),
    ];
    let mut parts = Vec::new();
    for (i, (name, check)) in suites.iter().enumerate() {
        let n = check(N, 1000 + i as u64).map_err(|e| format!("{name}: {e}"))?;
        ensure(n >= N, || format!("{name}: only {n} instances"))?;
        parts.push(format!("{name} {n}"));
    }
    Ok(parts.join(", "))
}

fn closed_form(r: &LinRep, variant: Variant) -> (u64, u64) {
    let q = r.field.order() as u64;
    let big = |d: usize| {
        let n = q.pow(d as u32) - 1;
        if variant == Variant::Gset { n / (q - 1) } else { n }
    };
    let unknowns = r.dims.iter().map(|&d| d as u64 * big(d)).sum();
    let equations = r.dims.iter().map(|&d| (d * d) as u64).sum::<u64>()
        + r.shape.arrows().iter().map(|a| r.dims[a.src] as u64 * big(r.dims[a.dst])).sum::<u64>();
    (unknowns, equations)
}

fn system_size_case() -> Outcome {
    let mut g = rng(77);
    let shapes = quivers();
    let fields = [gf(2, 1), gf(3, 1), gf(2, 2)];
    for _ in 0..10 {
        let f = &fields[g.gen_range(0..fields.len())];
        let r = random_linrep(f, &shapes[g.gen_range(0..shapes.len())], 3, &mut g);
        for variant in [Variant::Plain, Variant::Gset] {
            let pkg = counit_package(&r, variant, &Limits::default()).map_err(|e| e.to_string())?;
            let sys = build_split_system(&pkg, &r);
            let got = (sys.num_unknowns() as u64, sys.num_equations() as u64);
            ensure(got == closed_form(&r, variant), || format!("{variant}: {got:?} for dims {:?}", r.dims))?;
        }
    }
    Ok("10 inputs match in both variants".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("D4 inward star", d4_inward_case),
        ("7-star", star7_case),
        ("bands with f = X+1", band_case),
        ("E6 orientation sweep", e6_case),
        ("2x5 intro grid", intro_grid_case),
        ("2x4 grid patterns", grid_patterns_case),
        ("D~4 families", d4tilde_case),
        ("oracle agreement", oracle_case),
        ("property suites", property_case),
        ("system size formulas", system_size_case),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} [{t:.2?}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{t:.2?}]: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
