//! Orientation sweeps over the exceptional Dynkin quivers: for every
//! orientation, test every indecomposable for additive realizability.

use serde::Serialize;
use setreal_ff::FieldSpec;

use crate::decomp::{positive_roots, root_indecomposable};
use crate::error::Result;
use crate::realize::{is_add_set_realizable, Limits, Variant};
use crate::shape::DiagramShape;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Exceptional {
    E6,
    E7,
    E8,
}

impl Exceptional {
    /// Arm lengths, longest first; the last arm has length one.
    pub fn arms(self) -> [usize; 3] {
        match self {
            Exceptional::E6 => [2, 2, 1],
            Exceptional::E7 => [3, 2, 1],
            Exceptional::E8 => [4, 2, 1],
        }
    }

    pub fn num_edges(self) -> usize {
        self.arms().iter().sum()
    }
}

const ARM_NAMES: [&str; 3] = ["a", "b", "d"];

/// Edges in order: arm `a` from the center outwards, then `b`, then `d`.
/// Edge `k` is oriented away from the center `c` when `outward[k]`.
pub fn star_shape(kind: Exceptional, outward: &[bool]) -> DiagramShape {
    let arms = kind.arms();
    let mut objects = Vec::new();
    for i in (1..=arms[0]).rev() {
        objects.push(format!("a{i}"));
    }
    objects.push("c".to_string());
    for (k, &len) in arms.iter().enumerate().skip(1) {
        for i in 1..=len {
            objects.push(format!("{}{i}", ARM_NAMES[k]));
        }
    }
    let mut arrows = Vec::new();
    let mut e = 0;
    for (k, &len) in arms.iter().enumerate() {
        for i in 1..=len {
            let inner = if i == 1 { "c".to_string() } else { format!("{}{}", ARM_NAMES[k], i - 1) };
            let outer = format!("{}{i}", ARM_NAMES[k]);
            let (s, t) = if outward[e] { (inner, outer) } else { (outer, inner) };
            arrows.push((format!("e{}{i}", ARM_NAMES[k]), s, t));
            e += 1;
        }
    }
    DiagramShape::new(&objects, &arrows, &[]).expect("static shape")
}

/// Outward counts per arm.
fn outward_counts(kind: Exceptional, outward: &[bool]) -> [usize; 3] {
    let arms = kind.arms();
    let mut out = [0; 3];
    let mut e = 0;
    for (k, &len) in arms.iter().enumerate() {
        out[k] = outward[e..e + len].iter().filter(|&&b| b).count();
        e += len;
    }
    out
}

/// The published list of orientations for which `free` is additively surjective.
pub fn predicted_surjective(kind: Exceptional, outward: &[bool]) -> bool {
    let arms = kind.arms();
    let c = outward_counts(kind, outward);
    let full = |k: usize| c[k] == arms[k];
    let total: usize = c.iter().sum();
    match kind {
        Exceptional::E6 => full(0) || full(1) || (full(2) && total >= 2),
        Exceptional::E7 => {
            full(0) || (full(1) && total > arms[1]) || (full(2) && (c[0] + 1 >= arms[0] || c[1] + 1 >= arms[1]))
        }
        Exceptional::E8 => {
            (full(0) && total > arms[0])
                || (full(1) && c[0] >= 2)
                || (full(2) && c[0] + c[1] >= 2 && c[1] >= 1)
                || (full(2) && c[0] >= 3)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrientationResult {
    pub index: usize,
    pub outward: Vec<bool>,
    pub surjective: bool,
    /// Dimension vector of the first indecomposable that is not realizable.
    pub failing_root: Option<Vec<usize>>,
    pub predicted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub kind: Exceptional,
    pub objects: Vec<String>,
    pub roots_per_orientation: usize,
    pub orientations: Vec<OrientationResult>,
}

impl SweepReport {
    pub fn matches_prediction(&self) -> bool {
        self.orientations.iter().all(|o| o.surjective == o.predicted)
    }
}

pub fn orientation_bits(kind: Exceptional, index: usize) -> Vec<bool> {
    (0..kind.num_edges()).map(|k| index >> k & 1 == 1).collect()
}

pub fn sweep_orientation(field: &FieldSpec, kind: Exceptional, index: usize) -> Result<(usize, OrientationResult)> {
    let outward = orientation_bits(kind, index);
    let shape = star_shape(kind, &outward);
    let roots = positive_roots(&shape)?;
    let mut failing_root = None;
    for d in &roots {
        let r = root_indecomposable(field, &shape, d)?;
        if !is_add_set_realizable(&r, Variant::Gset, &Limits::default())?.realizable {
            failing_root = Some(d.clone());
            break;
        }
    }
    let result = OrientationResult {
        index,
        surjective: failing_root.is_none(),
        failing_root,
        predicted: predicted_surjective(kind, &outward),
        outward,
    };
    Ok((roots.len(), result))
}

/// Runs all `2^edges` orientations, one thread per orientation chunk; the
/// report is ordered by orientation index.
pub fn sweep(field: &FieldSpec, kind: Exceptional) -> Result<SweepReport> {
    let count = 1usize << kind.num_edges();
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(count);
    let results: Vec<Result<(usize, OrientationResult)>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                s.spawn(move || {
                    (t..count).step_by(threads).map(|i| sweep_orientation(field, kind, i)).collect::<Vec<_>>()
                })
            })
            .collect();
        let mut all: Vec<Result<(usize, OrientationResult)>> =
            handles.into_iter().flat_map(|h| h.join().expect("sweep thread panicked")).collect();
        all.sort_by_key(|r| r.as_ref().map_or(0, |(_, o)| o.index));
        all
    });
    let mut orientations = Vec::with_capacity(count);
    let mut roots_per_orientation = 0;
    for r in results {
        let (n, o) = r?;
        roots_per_orientation = n;
        orientations.push(o);
    }
    let objects = star_shape(kind, &orientation_bits(kind, 0)).objects().to_vec();
    Ok(SweepReport { kind, objects, roots_per_orientation, orientations })
}
