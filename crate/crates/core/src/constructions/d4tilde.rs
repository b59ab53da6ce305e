//! The D̃₄ quiver with two incoming and two outgoing arrows at the center,
//! its preprojective and preinjective pointed-set families, and the band
//! representation obtained from Ã₃ by inserting the center.

use setreal_ff::{FieldSpec, Matrix, Poly};

use crate::constructions::kan::kan_insert_object;
use crate::error::{CoreError, Result};
use crate::linrep::LinRep;
use crate::setrep::SetRep;
use crate::shape::DiagramShape;

/// Objects `tl, bl, c, tr, br`; arrows `tl_c, bl_c, c_tr, c_br`.
pub fn d4tilde_shape() -> DiagramShape {
    DiagramShape::new(
        &["tl", "bl", "c", "tr", "br"],
        &[("tl_c", "tl", "c"), ("bl_c", "bl", "c"), ("c_tr", "c", "tr"), ("c_br", "c", "br")],
        &[],
    )
    .expect("static shape")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Preprojective,
    Preinjective,
}

impl std::str::FromStr for FamilyKind {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "preprojective" => Ok(FamilyKind::Preprojective),
            "preinjective" => Ok(FamilyKind::Preinjective),
            _ => Err(CoreError::Invalid(format!("unknown family {s:?}"))),
        }
    }
}

/// An element of the center: `U(i)` is `i`, `P(i)` is `i'`, `X` is `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Lab {
    U(usize),
    P(usize),
    X,
}

struct Center {
    unprimed: usize,
    primed: usize,
    x: bool,
}

impl Center {
    fn size(&self) -> usize {
        self.unprimed + self.primed + self.x as usize
    }

    fn labels(&self) -> Vec<Lab> {
        (1..=self.unprimed)
            .map(Lab::U)
            .chain((1..=self.primed).map(Lab::P))
            .chain(self.x.then_some(Lab::X))
            .collect()
    }

    fn index(&self, l: Lab) -> u32 {
        match l {
            Lab::U(i) => {
                assert!((1..=self.unprimed).contains(&i));
                i as u32
            }
            Lab::P(i) => {
                assert!((1..=self.primed).contains(&i));
                (self.unprimed + i) as u32
            }
            Lab::X => {
                assert!(self.x);
                (self.unprimed + self.primed + 1) as u32
            }
        }
    }
}

/// Images of `1..=size` under `g`; `None` is the basepoint. Panics when an
/// image is out of range, which would mean a malformed table.
fn table(size: usize, target: usize, g: impl Fn(usize) -> Option<usize>) -> Vec<u32> {
    (1..=size)
        .map(|i| match g(i) {
            None => 0,
            Some(y) => {
                assert!((1..=target).contains(&y), "image {y} outside 1..={target}");
                y as u32
            }
        })
        .collect()
}

struct Spec {
    tl: usize,
    bl: usize,
    center: Center,
    tr: usize,
    br: usize,
    tl_c: Box<dyn Fn(usize) -> Lab>,
    tr_map: Box<dyn Fn(Lab) -> Option<usize>>,
    br_map: Box<dyn Fn(Lab) -> Option<usize>>,
}

impl Spec {
    fn build(self) -> SetRep {
        let c = &self.center;
        let labels = c.labels();
        let maps = vec![
            (1..=self.tl).map(|i| c.index((self.tl_c)(i))).collect(),
            (1..=self.bl).map(|i| c.index(Lab::P(i))).collect(),
            table(c.size(), self.tr, |k| (self.tr_map)(labels[k - 1])),
            table(c.size(), self.br, |k| (self.br_map)(labels[k - 1])),
        ];
        SetRep::new(d4tilde_shape(), vec![self.tl, self.bl, c.size(), self.tr, self.br], maps)
            .expect("family tables are well formed")
    }
}

fn incl() -> Box<dyn Fn(usize) -> Lab> {
    Box::new(Lab::U)
}

fn preprojective(variant: usize, n: usize) -> Result<Spec> {
    let s = match variant {
        1 | 2 => Spec {
            tl: n,
            bl: n,
            center: Center { unprimed: n, primed: n, x: variant == 2 },
            tr: n,
            br: n + 1,
            tl_c: incl(),
            tr_map: Box::new(|l| match l {
                Lab::U(i) | Lab::P(i) => Some(i),
                Lab::X => None,
            }),
            br_map: Box::new(|l| match l {
                Lab::U(i) => Some(i),
                Lab::P(i) => Some(i + 1),
                Lab::X => Some(1),
            }),
        },
        3 | 4 => Spec {
            tl: n,
            bl: n + 1,
            center: Center { unprimed: n, primed: n + 1, x: variant == 4 },
            tr: n + 1,
            br: n + 1,
            tl_c: incl(),
            tr_map: Box::new(|l| match l {
                Lab::U(i) | Lab::P(i) => Some(i),
                Lab::X => None,
            }),
            br_map: Box::new(|l| match l {
                Lab::U(i) => Some(i + 1),
                Lab::P(i) => Some(i),
                Lab::X => Some(1),
            }),
        },
        5 => Spec {
            tl: n,
            bl: n,
            center: Center { unprimed: n, primed: n, x: true },
            tr: n + 1,
            br: n + 1,
            tl_c: incl(),
            tr_map: Box::new(move |l| match l {
                Lab::U(i) => Some(i),
                Lab::P(i) => Some(i + 1),
                Lab::X => Some(n + 1),
            }),
            br_map: Box::new(move |l| match l {
                Lab::U(i) => Some(i + 1),
                Lab::P(i) => Some(i),
                Lab::X => Some(n + 1),
            }),
        },
        _ => return Err(CoreError::Invalid(format!("no preprojective variant {variant}"))),
    };
    Ok(s)
}

fn preinjective(variant: usize, n: usize) -> Result<Spec> {
    let s = match variant {
        // The printed `i' -> i+1` would send n' outside the target; the
        // primed elements go to `i` instead.
        1 => Spec {
            tl: n + 1,
            bl: n,
            center: Center { unprimed: n + 1, primed: n, x: false },
            tr: n,
            br: n,
            tl_c: incl(),
            tr_map: Box::new(move |l| match l {
                Lab::U(i) if i <= n => Some(i),
                Lab::U(_) => None,
                Lab::P(i) => Some(i),
                Lab::X => unreachable!(),
            }),
            br_map: Box::new(move |l| match l {
                Lab::U(1) => None,
                Lab::U(i) => Some(i - 1),
                Lab::P(i) => Some(i),
                Lab::X => unreachable!(),
            }),
        },
        2 => Spec {
            tl: n + 1,
            bl: n,
            center: Center { unprimed: n, primed: n, x: false },
            tr: n,
            br: n,
            tl_c: Box::new(move |i| if i <= n { Lab::U(i) } else { Lab::P(1) }),
            tr_map: Box::new(|l| match l {
                Lab::U(i) | Lab::P(i) => Some(i),
                Lab::X => unreachable!(),
            }),
            br_map: Box::new(move |l| match l {
                Lab::U(i) if i < n => Some(i + 1),
                Lab::U(_) => None,
                Lab::P(i) => Some(i),
                Lab::X => unreachable!(),
            }),
        },
        // The printed bottom-right set {1..n} is never hit by n; it is
        // {1..n-1} here, matching the maps.
        3 => Spec {
            tl: n,
            bl: n,
            center: Center { unprimed: n, primed: n, x: false },
            tr: n,
            br: n - 1,
            tl_c: incl(),
            tr_map: Box::new(|l| match l {
                Lab::U(i) | Lab::P(i) => Some(i),
                Lab::X => unreachable!(),
            }),
            br_map: Box::new(move |l| match l {
                Lab::U(1) => None,
                Lab::U(i) => Some(i - 1),
                Lab::P(i) if i < n => Some(i),
                Lab::P(_) => None,
                Lab::X => unreachable!(),
            }),
        },
        4 => Spec {
            tl: n,
            bl: n,
            center: Center { unprimed: n - 1, primed: n, x: false },
            tr: n,
            br: n - 1,
            tl_c: Box::new(move |i| if i < n { Lab::U(i) } else { Lab::P(1) }),
            tr_map: Box::new(|l| match l {
                Lab::U(i) => Some(i + 1),
                Lab::P(i) => Some(i),
                Lab::X => unreachable!(),
            }),
            br_map: Box::new(move |l| match l {
                Lab::U(i) => Some(i),
                Lab::P(i) if i < n => Some(i),
                Lab::P(_) => None,
                Lab::X => unreachable!(),
            }),
        },
        // The printed top-left map leaves n+1 unassigned; it is sent like
        // the second preinjective family: i -> i (i <= n), n+1 -> 1'.
        5 => Spec {
            tl: n + 1,
            bl: n + 1,
            center: Center { unprimed: n, primed: n + 1, x: false },
            tr: n,
            br: n,
            tl_c: Box::new(move |i| if i <= n { Lab::U(i) } else { Lab::P(1) }),
            tr_map: Box::new(move |l| match l {
                Lab::U(i) => Some(i),
                Lab::P(i) if i <= n => Some(i),
                Lab::P(_) => None,
                Lab::X => unreachable!(),
            }),
            br_map: Box::new(move |l| match l {
                Lab::U(i) if i < n => Some(i + 1),
                Lab::U(_) => None,
                Lab::P(1) => Some(1),
                Lab::P(i) => Some(i - 1),
                Lab::X => unreachable!(),
            }),
        },
        _ => return Err(CoreError::Invalid(format!("no preinjective variant {variant}"))),
    };
    Ok(s)
}

/// One member of the five preprojective or five preinjective families.
pub fn d4tilde_family(kind: FamilyKind, variant: usize, n: usize) -> Result<SetRep> {
    if n == 0 {
        return Err(CoreError::Invalid("family index n must be at least 1".into()));
    }
    let spec = match kind {
        FamilyKind::Preprojective => preprojective(variant, n)?,
        FamilyKind::Preinjective => preinjective(variant, n)?,
    };
    Ok(spec.build())
}

/// Dimension vectors `(tl, bl, c, tr, br)` of the families.
pub fn d4tilde_family_dims(kind: FamilyKind, variant: usize, n: usize) -> Result<[usize; 5]> {
    use FamilyKind::*;
    Ok(match (kind, variant) {
        (Preprojective, 1) => [n, n, 2 * n, n, n + 1],
        (Preprojective, 2) => [n, n, 2 * n + 1, n, n + 1],
        (Preprojective, 3) => [n, n + 1, 2 * n + 1, n + 1, n + 1],
        (Preprojective, 4) => [n, n + 1, 2 * n + 2, n + 1, n + 1],
        (Preprojective, 5) => [n, n, 2 * n + 1, n + 1, n + 1],
        (Preinjective, 1) => [n + 1, n, 2 * n + 1, n, n],
        (Preinjective, 2) => [n + 1, n, 2 * n, n, n],
        (Preinjective, 3) => [n, n, 2 * n, n, n - 1],
        (Preinjective, 4) => [n, n, 2 * n - 1, n, n - 1],
        (Preinjective, 5) => [n + 1, n + 1, 2 * n + 1, n, n],
        _ => return Err(CoreError::Invalid(format!("no variant {variant}"))),
    })
}

/// Ã₃ with objects `tl, bl, tr, br` and arrows `tl_tr, tl_br, bl_br, bl_tr`:
/// identities except `bl_tr`, which carries the companion matrix of `p^s`.
pub fn a3tilde_band(field: &FieldSpec, p: &Poly, s: usize) -> Result<LinRep> {
    let a = Matrix::companion(field, &p.pow(field, s as u64));
    let m = a.rows();
    let shape = DiagramShape::new(
        &["tl", "bl", "tr", "br"],
        &[("tl_tr", "tl", "tr"), ("tl_br", "tl", "br"), ("bl_br", "bl", "br"), ("bl_tr", "bl", "tr")],
        &[],
    )?;
    let i = Matrix::identity(m);
    LinRep::new(field.clone(), shape, vec![m; 4], vec![i.clone(), i.clone(), i, a])
}

/// The D̃₄ representation with center `F^{2m}`: `[I;0]`, `[0;I]` in and
/// `[I A]`, `[I I]` out.
pub fn d4tilde_band(field: &FieldSpec, p: &Poly, s: usize) -> Result<LinRep> {
    let a = Matrix::companion(field, &p.pow(field, s as u64));
    let m = a.rows();
    let i = Matrix::identity(m);
    let z = Matrix::zeros(m, m);
    let mats = vec![
        i.vstack(&z)?,
        z.vstack(&i)?,
        i.hstack(&a)?,
        i.hstack(&i)?,
    ];
    LinRep::new(field.clone(), d4tilde_shape(), vec![m, m, 2 * m, m, m], mats)
}

/// Inserts the center into [`a3tilde_band`] by a left Kan extension and
/// reorders objects and arrows to match [`d4tilde_shape`].
pub fn d4tilde_from_a3tilde(r: &LinRep) -> Result<LinRep> {
    let sh = &r.shape;
    let ins = [sh.object("tl")?, sh.object("bl")?];
    let outs = [sh.object("tr")?, sh.object("br")?];
    let ext = kan_insert_object(r, "c", &ins, &outs)?;
    let target = d4tilde_shape();
    let obj: Vec<usize> = target.objects().iter().map(|o| ext.shape.object(o)).collect::<Result<_>>()?;
    let mats = target
        .arrows()
        .iter()
        .map(|a| {
            let (s, t) = (&target.objects()[a.src], &target.objects()[a.dst]);
            let idx = ext.shape.arrow(&format!("{s}_{t}"))?;
            Ok(ext.mats[idx].clone())
        })
        .collect::<Result<Vec<_>>>()?;
    LinRep::new(r.field.clone(), target, obj.iter().map(|&o| ext.dims[o]).collect(), mats)
}
