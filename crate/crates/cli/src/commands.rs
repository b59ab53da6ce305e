//! Subcommands. Each returns the outcome that decides the exit status and
//! prints its report on stdout and a short summary on stderr.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use setreal_core::constructions::atilde::{band_is_realizable, band_rep, string_rep, BandSpec, StringSpec};
use setreal_core::constructions::classify::shape_is_indicator_only;
use setreal_core::constructions::d4tilde::{d4tilde_family, FamilyKind};
use setreal_core::constructions::indicator::{indicator_by_name, is_indicator};
use setreal_core::decomp::{decompose, DecompOptions};
use setreal_core::experiment::{sweep, Exceptional};
use setreal_core::gallery;
use setreal_core::io::{shape_from_json, FieldJson, LinRepJson, SetRepJson};
use setreal_core::oracle::{brute_force_realizable, OracleVerdict, SearchBudget};
use setreal_core::realize::{check_witness, counit_package, CounitPackage};
use setreal_core::tda::{h0_setrep, GraphDiagram, GraphDiagramJson};
use setreal_core::{is_add_set_realizable, LinRep, Limits, Linearization, Variant};
use setreal_ff::{FieldSpec, Matrix, Poly};

use crate::report::{digest, RunReport};

pub enum Outcome {
    Yes,
    No,
}

#[derive(Parser)]
#[command(name = "setreal", version, about = "Additive Set-realizability of quiver representations")]
pub struct Cli {
    /// Seed for every randomized step
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Decide realizability with the split test (exit 0 yes, 1 no)
    Check(CheckArgs),
    /// Split a representation into indecomposables
    Decompose { rep: PathBuf },
    /// Build a representation
    Make {
        #[command(subcommand)]
        kind: MakeKind,
        /// Write the representation here as well as into the report
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Search small pointed-set representations (exit 0 found, 1 not found)
    Oracle(OracleArgs),
    /// Whether every indecomposable over a poset shape is an indicator
    ShapeClassify { shape: PathBuf },
    /// Zeroth homology of a diagram of graphs
    H0 {
        graphs: PathBuf,
        #[arg(long, num_args = 2, value_names = ["P", "K"], default_values_t = [2, 1])]
        field: Vec<u32>,
    },
    /// Test every indecomposable of every orientation of E6
    E6Experiment(ExperimentArgs),
}

#[derive(Args)]
pub struct CheckArgs {
    rep: PathBuf,
    #[arg(long, value_enum, default_value_t = VariantArg::Gset)]
    variant: VariantArg,
    /// Write the section of the counit here when one exists
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Largest number of coefficient-matrix entries to build
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Args)]
pub struct OracleArgs {
    rep: PathBuf,
    /// Largest number of candidates per indecomposable summand
    #[arg(long)]
    budget: Option<u64>,
    /// Largest set size tried at every object (default: q^d - 1)
    #[arg(long)]
    max_size: Option<usize>,
}

#[derive(Args)]
pub struct ExperimentArgs {
    #[arg(long, num_args = 2, value_names = ["P", "K"], default_values_t = [2, 1])]
    field: Vec<u32>,
    #[arg(long, value_enum, default_value_t = KindArg::E6)]
    kind: KindArg,
    /// Needed for E7 and E8
    #[arg(long)]
    i_have_time: bool,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum VariantArg {
    Plain,
    Gset,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum KindArg {
    E6,
    E7,
    E8,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum GalleryName {
    D4Inward,
    Star7,
    IntroGrid,
    GridPattern1,
    GridPattern2,
    GridPattern3,
    BifiltrationH0,
}

#[derive(Subcommand)]
pub enum MakeKind {
    /// Band on a cyclic quiver: identities and the companion matrix of f^m
    Band {
        /// `loop`, `aNtilde` (N+1 arrows, cyclic), or arrow directions like `1,0,1,1`
        #[arg(long)]
        shape: String,
        /// Coefficients of f, constant term first
        #[arg(long)]
        f: String,
        #[arg(long)]
        m: usize,
        #[arg(long, num_args = 2, value_names = ["P", "K"], default_values_t = [2, 1])]
        field: Vec<u32>,
    },
    /// String on a cyclic quiver
    String {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        start: usize,
        #[arg(long)]
        length: usize,
        #[arg(long, num_args = 2, value_names = ["P", "K"], default_values_t = [2, 1])]
        field: Vec<u32>,
    },
    /// One member of the D~4 preprojective or preinjective families
    D4tilde {
        #[arg(long)]
        family: String,
        #[arg(long)]
        variant: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, num_args = 2, value_names = ["P", "K"], default_values_t = [2, 1])]
        field: Vec<u32>,
    },
    /// Indicator of a set of objects of a shape file
    Indicator {
        #[arg(long)]
        shape: PathBuf,
        /// Comma-separated object names
        #[arg(long)]
        support: String,
        #[arg(long, num_args = 2, value_names = ["P", "K"], default_values_t = [2, 1])]
        field: Vec<u32>,
    },
    /// A named worked example
    Gallery {
        #[arg(value_enum)]
        name: GalleryName,
        #[arg(long, num_args = 2, value_names = ["P", "K"], default_values_t = [2, 1])]
        field: Vec<u32>,
    },
}

/// Section of the counit: `sections[v]` has one row per big basis vector.
#[derive(Serialize, Deserialize)]
struct WitnessJson {
    variant: String,
    field: FieldJson,
    sections: IndexMap<String, Vec<Vec<u32>>>,
}

fn field(pk: &[u32]) -> Result<FieldSpec> {
    Ok(FieldSpec::new(pk[0], pk[1], None)?)
}

fn read(path: &Path) -> Result<(String, String)> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let d = digest(&bytes);
    let text = String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
    Ok((text, d))
}

fn load_rep(path: &Path) -> Result<(LinRep, String)> {
    let (text, d) = read(path)?;
    let j: LinRepJson = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let r = j.to_rep().with_context(|| format!("validating {}", path.display()))?;
    Ok((r, d))
}

fn rep_json(r: &LinRep) -> Value {
    serde_json::to_value(LinRepJson::from_rep(r)).expect("serializable")
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn witness_json(r: &LinRep, pkg: &CounitPackage, w: &[Matrix]) -> WitnessJson {
    WitnessJson {
        variant: pkg.variant.to_string(),
        field: FieldJson::from_field(&r.field),
        sections: r.shape.objects().iter().cloned().zip(w.iter().map(Matrix::to_rows)).collect(),
    }
}

fn load_witness(path: &Path, r: &LinRep, pkg: &CounitPackage) -> Result<Vec<Matrix>> {
    let (text, _) = read(path)?;
    let j: WitnessJson = serde_json::from_str(&text)?;
    r.shape
        .objects()
        .iter()
        .enumerate()
        .map(|(v, name)| {
            let rows = j.sections.get(name).ok_or_else(|| anyhow!("witness has no section at {name}"))?;
            Ok(Matrix::from_rows(rows, r.dims[v]).map_err(|_| anyhow!("bad section shape at {name}"))?)
                .and_then(|m| {
                    if m.rows() == pkg.big.dims[v] {
                        Ok(m)
                    } else {
                        bail!("section at {name} has {} rows, expected {}", m.rows(), pkg.big.dims[v])
                    }
                })
        })
        .collect()
}

fn cyclic_orientation(spec: &str) -> Result<Vec<bool>> {
    if spec == "loop" {
        return Ok(vec![true]);
    }
    if let Some(n) = spec.strip_prefix('a').and_then(|s| s.strip_suffix("tilde")) {
        let n: usize = n.parse().with_context(|| format!("bad shape {spec:?}"))?;
        return Ok(vec![true; n + 1]);
    }
    spec.split(',')
        .map(|s| match s.trim() {
            "1" | "f" => Ok(true),
            "0" | "b" => Ok(false),
            other => bail!("bad arrow direction {other:?} (use 1/f or 0/b)"),
        })
        .collect()
}

fn poly(f: &FieldSpec, coeffs: &str) -> Result<Poly> {
    let c = coeffs
        .split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|e| anyhow!("bad coefficient {s:?}: {e}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(f, c.into_iter().map(|x| f.check(x)).collect::<Result<Vec<_>, _>>()?))
}

pub fn run(cli: Cli, argv: Vec<String>) -> Result<Outcome> {
    let seed = cli.seed;
    let mut report = RunReport { command: argv, input_digest: None, seed, outputs: Value::Null, witness_paths: vec![] };
    let outcome = match cli.command {
        Command::Check(a) => check(a, &mut report)?,
        Command::Decompose { rep } => {
            let (r, d) = load_rep(&rep)?;
            report.input_digest = Some(d);
            let dec = decompose(&r, &DecompOptions { seed, ..DecompOptions::default() })?;
            let factors: Vec<Value> = dec
                .factors
                .iter()
                .map(|f| {
                    json!({
                        "dims": f.rep.dims,
                        "multiplicity": f.multiplicity,
                        "indicator": is_indicator(&f.rep),
                        "rep": rep_json(&f.rep),
                    })
                })
                .collect();
            eprintln!("{} summands in {} isomorphism classes", dec.num_summands(), dec.factors.len());
            for f in &dec.factors {
                eprintln!("  {:?} x{}", f.rep.dims, f.multiplicity);
            }
            report.outputs = json!({ "summands": dec.num_summands(), "factors": factors });
            Outcome::Yes
        }
        Command::Make { kind, out } => {
            let (value, summary) = make(kind)?;
            if let Some(path) = &out {
                write_json(path, &value)?;
                report.witness_paths.push(path.display().to_string());
            }
            eprintln!("{summary}");
            report.outputs = json!({ "representation": value, "summary": summary });
            Outcome::Yes
        }
        Command::Oracle(a) => oracle(a, &mut report)?,
        Command::ShapeClassify { shape } => {
            let (text, d) = read(&shape)?;
            report.input_digest = Some(d);
            let s = shape_from_json(&text).with_context(|| format!("parsing {}", shape.display()))?;
            let only = shape_is_indicator_only(&s)?;
            eprintln!("{}", if only { "indicator-only" } else { "not indicator-only" });
            report.outputs = json!({ "indicator_only": only });
            Outcome::Yes
        }
        Command::H0 { graphs, field: pk } => {
            let f = field(&pk)?;
            let (text, d) = read(&graphs)?;
            report.input_digest = Some(d);
            let j: GraphDiagramJson =
                serde_json::from_str(&text).with_context(|| format!("parsing {}", graphs.display()))?;
            let g = GraphDiagram::from_json(&j)?;
            let s = h0_setrep(&g)?;
            let r = s.linearize(&f, Linearization::FreeStar);
            eprintln!("H0 dimensions {:?}", r.dims);
            report.outputs = json!({
                "components": SetRepJson::from_rep(&s, None),
                "representation": rep_json(&r),
            });
            Outcome::Yes
        }
        Command::E6Experiment(a) => experiment(a, &mut report)?,
    };
    report.print();
    Ok(outcome)
}

fn check(a: CheckArgs, report: &mut RunReport) -> Result<Outcome> {
    let (r, d) = load_rep(&a.rep)?;
    report.input_digest = Some(d);
    let variant = match a.variant {
        VariantArg::Plain => Variant::Plain,
        VariantArg::Gset => Variant::Gset,
    };
    let mut limits = Limits::default();
    if let Some(cap) = a.cap {
        limits.max_system_entries = cap;
    }
    let v = is_add_set_realizable(&r, variant, &limits)?;
    eprintln!(
        "{}: {} over GF({}) ({} unknowns, {} equations)",
        a.rep.display(),
        if v.realizable { "realizable" } else { "not realizable" },
        r.field.order(),
        v.unknowns,
        v.equations
    );
    if let (Some(path), Some(w)) = (&a.witness, &v.witness) {
        write_json(path, &witness_json(&r, &v.package, w))?;
        // Re-read what was written and check it against a fresh package.
        let pkg = counit_package(&r, variant, &limits)?;
        let back = load_witness(path, &r, &pkg)?;
        if !check_witness(&r, &pkg, &back)? {
            bail!("witness written to {} does not verify", path.display());
        }
        report.witness_paths.push(path.display().to_string());
    }
    report.outputs = json!({
        "realizable": v.realizable,
        "variant": variant.to_string(),
        "field": FieldJson::from_field(&r.field),
        "unknowns": v.unknowns,
        "equations": v.equations,
    });
    Ok(if v.realizable { Outcome::Yes } else { Outcome::No })
}

fn oracle(a: OracleArgs, report: &mut RunReport) -> Result<Outcome> {
    let (r, d) = load_rep(&a.rep)?;
    report.input_digest = Some(d);
    let mut budget = SearchBudget::complete(&r);
    budget.seed = report.seed;
    if let Some(n) = a.budget {
        budget.max_candidates = n;
    }
    if let Some(k) = a.max_size {
        budget.max_sizes = vec![k; r.dims.len()];
    }
    let rep = brute_force_realizable(&r, &budget)?;
    let (found, outputs) = match &rep.verdict {
        OracleVerdict::Realizable { witness } => {
            (true, json!({ "found": true, "witness": SetRepJson::from_rep(witness, None), "candidates": rep.candidates }))
        }
        OracleVerdict::NotFound { definitive } => {
            (false, json!({ "found": false, "definitive": definitive, "candidates": rep.candidates }))
        }
    };
    eprintln!(
        "{} after {} candidates",
        match &rep.verdict {
            OracleVerdict::Realizable { .. } => "witness found",
            OracleVerdict::NotFound { definitive: true } => "no witness exists",
            OracleVerdict::NotFound { definitive: false } => "no witness within the budget",
        },
        rep.candidates
    );
    report.outputs = outputs;
    Ok(if found { Outcome::Yes } else { Outcome::No })
}

fn make(kind: MakeKind) -> Result<(Value, String)> {
    Ok(match kind {
        MakeKind::Band { shape, f, m, field: pk } => {
            let fld = field(&pk)?;
            let spec = BandSpec { f: poly(&fld, &f)?, m, orientation: cyclic_orientation(&shape)? };
            let r = band_rep(&fld, &spec)?;
            let yes = band_is_realizable(&fld, &spec)?;
            (rep_json(&r), format!("band of dimension {}; closed form says {}realizable", r.dims[0], if yes { "" } else { "not " }))
        }
        MakeKind::String { shape, start, length, field: pk } => {
            let fld = field(&pk)?;
            let s = string_rep(&StringSpec { orientation: cyclic_orientation(&shape)?, start, length })?;
            let r = s.linearize(&fld, Linearization::FreeStar);
            (rep_json(&r), format!("string with dimensions {:?}", r.dims))
        }
        MakeKind::D4tilde { family, variant, n, field: pk } => {
            let fld = field(&pk)?;
            let kind: FamilyKind = family.parse()?;
            let r = d4tilde_family(kind, variant, n)?.linearize(&fld, Linearization::FreeStar);
            (rep_json(&r), format!("{family} family {variant}, n = {n}, dimensions {:?}", r.dims))
        }
        MakeKind::Indicator { shape, support, field: pk } => {
            let fld = field(&pk)?;
            let (text, _) = read(&shape)?;
            let s = shape_from_json(&text).with_context(|| format!("parsing {}", shape.display()))?;
            let names: Vec<&str> = support.split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
            let r = indicator_by_name(&fld, &s, &names)?;
            (rep_json(&r), format!("indicator on {} objects", names.len()))
        }
        MakeKind::Gallery { name, field: pk } => {
            let fld = field(&pk)?;
            let r = match name {
                GalleryName::D4Inward => gallery::d4_inward(&fld),
                GalleryName::Star7 => gallery::star7(&fld),
                GalleryName::IntroGrid => gallery::intro_grid(&fld),
                GalleryName::GridPattern1 => gallery::grid_patterns(&fld).swap_remove(0),
                GalleryName::GridPattern2 => gallery::grid_patterns(&fld).swap_remove(1),
                GalleryName::GridPattern3 => gallery::grid_patterns(&fld).swap_remove(2),
                GalleryName::BifiltrationH0 => gallery::bifiltration_h0(&fld),
            };
            (rep_json(&r), format!("dimensions {:?}", r.dims))
        }
    })
}

fn experiment(a: ExperimentArgs, report: &mut RunReport) -> Result<Outcome> {
    let kind = match a.kind {
        KindArg::E6 => Exceptional::E6,
        KindArg::E7 => Exceptional::E7,
        KindArg::E8 => Exceptional::E8,
    };
    if kind != Exceptional::E6 && !a.i_have_time {
        bail!("{kind:?} sweeps are long; pass --i-have-time to run them");
    }
    let f = field(&a.field)?;
    let sweep = sweep(&f, kind)?;
    eprintln!("{kind:?} over GF({}), {} roots per orientation", f.order(), sweep.roots_per_orientation);
    let edges: Vec<String> = ["a", "b", "d"]
        .iter()
        .zip(kind.arms())
        .flat_map(|(arm, len)| {
            (1..=len).map(move |i| if i == 1 { format!("c-{arm}1") } else { format!("{arm}{}-{arm}{i}", i - 1) })
        })
        .collect();
    eprintln!("edges in order ('>' points away from c): {}", edges.join(" "));
    for o in &sweep.orientations {
        let arrows: String = o.outward.iter().map(|&b| if b { '>' } else { '<' }).collect();
        match &o.failing_root {
            None => eprintln!("{:>3} {arrows}  additively surjective: yes", o.index),
            Some(root) => eprintln!("{:>3} {arrows}  additively surjective: no  (fails at {root:?})", o.index),
        }
    }
    let n = sweep.orientations.iter().filter(|o| o.surjective).count();
    eprintln!("{n} of {} orientations are additively surjective", sweep.orientations.len());
    report.outputs = json!({
        "matches_prediction": sweep.matches_prediction(),
        "surjective": n,
        "sweep": serde_json::to_value(&sweep)?,
    });
    Ok(Outcome::Yes)
}
