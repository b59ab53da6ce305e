//! Pointed-set representations. Elements of the set at `v` are `1..=sizes[v]`
//! and `0` is the basepoint, which every map fixes.

use setreal_ff::{FieldSpec, Matrix};

use crate::error::{CoreError, Result};
use crate::linrep::{LinRep, Violation};
use crate::shape::DiagramShape;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetRep {
    pub shape: DiagramShape,
    pub sizes: Vec<usize>,
    /// `maps[a][i - 1]` is the image of element `i` under arrow `a`.
    pub maps: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Linearization {
    /// The basepoint becomes an ordinary basis vector.
    Free,
    /// The basepoint is sent to zero.
    FreeStar,
}

impl SetRep {
    pub fn new(shape: DiagramShape, sizes: Vec<usize>, maps: Vec<Vec<u32>>) -> Result<Self> {
        if sizes.len() != shape.num_objects() || maps.len() != shape.num_arrows() {
            return Err(CoreError::Rep("sizes or maps do not match the shape".into()));
        }
        let s = SetRep { shape, sizes, maps };
        if let Some(v) = s.table_violation() {
            return Err(CoreError::Rep(v.to_string()));
        }
        Ok(s)
    }

    fn table_violation(&self) -> Option<Violation> {
        for (a, table) in self.shape.arrows().iter().zip(&self.maps) {
            if table.len() != self.sizes[a.src] {
                return Some(Violation::Size {
                    arrow: a.name.clone(),
                    expected: (1, self.sizes[a.src]),
                    found: (1, table.len()),
                });
            }
            if let Some(&value) = table.iter().find(|&&x| x as usize > self.sizes[a.dst]) {
                return Some(Violation::Entry { arrow: a.name.clone(), value });
            }
        }
        None
    }

    /// Image of element `x` (0 = basepoint) along a path.
    pub fn apply_path(&self, path: &[usize], mut x: u32) -> u32 {
        for &a in path {
            if x == 0 {
                return 0;
            }
            x = self.maps[a][x as usize - 1];
        }
        x
    }

    pub fn validate(&self) -> Result<(), Violation> {
        if let Some(v) = self.table_violation() {
            return Err(v);
        }
        for r in self.shape.relations() {
            for x in 1..=self.sizes[r.src] as u32 {
                if self.apply_path(&r.lhs, x) != self.apply_path(&r.rhs, x) {
                    return Err(Violation::Relation {
                        lhs: self.shape.path_names(&r.lhs),
                        rhs: self.shape.path_names(&r.rhs),
                    });
                }
            }
        }
        Ok(())
    }

    /// Adjoins a fresh basepoint, turning the old basepoint into element 1.
    pub fn augment(&self) -> SetRep {
        SetRep {
            shape: self.shape.clone(),
            sizes: self.sizes.iter().map(|n| n + 1).collect(),
            maps: self.maps.iter().map(|t| std::iter::once(1).chain(t.iter().map(|&x| x + 1)).collect()).collect(),
        }
    }

    /// Whether no element is ever sent to the basepoint.
    pub fn is_basepoint_free(&self) -> bool {
        self.maps.iter().all(|t| t.iter().all(|&x| x != 0))
    }

    pub fn linearize(&self, field: &FieldSpec, variant: Linearization) -> LinRep {
        match variant {
            Linearization::Free => self.augment().linearize(field, Linearization::FreeStar),
            Linearization::FreeStar => {
                let mats = self
                    .shape
                    .arrows()
                    .iter()
                    .zip(&self.maps)
                    .map(|(a, t)| {
                        let mut m = Matrix::zeros(self.sizes[a.dst], self.sizes[a.src]);
                        for (j, &x) in t.iter().enumerate() {
                            if x != 0 {
                                m.set(x as usize - 1, j, 1);
                            }
                        }
                        m
                    })
                    .collect();
                LinRep {
                    field: field.clone(),
                    shape: self.shape.clone(),
                    dims: self.sizes.clone(),
                    mats,
                }
            }
        }
    }

    /// Disjoint union (wedge at the basepoint); elements of `other` follow ours.
    pub fn disjoint_union(&self, other: &SetRep) -> Result<SetRep> {
        if self.shape != other.shape {
            return Err(CoreError::Mismatch("different shapes".into()));
        }
        let maps = self
            .shape
            .arrows()
            .iter()
            .zip(self.maps.iter().zip(&other.maps))
            .map(|(a, (s, t))| {
                let shift = self.sizes[a.dst] as u32;
                s.iter().copied().chain(t.iter().map(|&x| if x == 0 { 0 } else { x + shift })).collect()
            })
            .collect();
        Ok(SetRep {
            shape: self.shape.clone(),
            sizes: self.sizes.iter().zip(&other.sizes).map(|(a, b)| a + b).collect(),
            maps,
        })
    }

    pub fn empty(shape: DiagramShape) -> SetRep {
        let sizes = vec![0; shape.num_objects()];
        let maps = vec![Vec::new(); shape.num_arrows()];
        SetRep { shape, sizes, maps }
    }
}
