//! JSON file formats for fields, shapes, linear and pointed-set representations.
//!
//! ```json
//! {"field": {"p": 2, "k": 1, "modulus": [0, 1]},
//!  "shape": {"objects": ["a", "b"], "arrows": [{"name": "f", "src": "a", "dst": "b"}], "relations": []},
//!  "dims": {"a": 1, "b": 1},
//!  "mats": {"f": [[1]]}}
//! ```
//!
//! Set representations use `"sizes"` and `"maps"` (function tables, 0 = basepoint)
//! instead of `"dims"` and `"mats"`; their `"field"` is optional.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use setreal_ff::{FieldSpec, Matrix};

use crate::error::{CoreError, Result};
use crate::linrep::LinRep;
use crate::setrep::SetRep;
use crate::shape::DiagramShape;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldJson {
    pub p: u32,
    #[serde(default = "one")]
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowJson {
    pub name: String,
    pub src: String,
    pub dst: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ShapeJson {
    pub objects: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<(Vec<String>, Vec<String>)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LinRepJson {
    pub field: FieldJson,
    pub shape: ShapeJson,
    pub dims: IndexMap<String, usize>,
    pub mats: IndexMap<String, Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SetRepJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldJson>,
    pub shape: ShapeJson,
    pub sizes: IndexMap<String, usize>,
    pub maps: IndexMap<String, Vec<u32>>,
}

impl FieldJson {
    pub fn to_field(&self) -> Result<FieldSpec> {
        Ok(FieldSpec::new(self.p, self.k, self.modulus.as_deref())?)
    }

    pub fn from_field(f: &FieldSpec) -> Self {
        FieldJson { p: f.characteristic(), k: f.degree(), modulus: Some(f.modulus().to_vec()) }
    }
}

impl ShapeJson {
    pub fn to_shape(&self) -> Result<DiagramShape> {
        let arrows: Vec<(&str, &str, &str)> =
            self.arrows.iter().map(|a| (a.name.as_str(), a.src.as_str(), a.dst.as_str())).collect();
        let objects: Vec<&str> = self.objects.iter().map(String::as_str).collect();
        let relations: Vec<(Vec<&str>, Vec<&str>)> = self
            .relations
            .iter()
            .map(|(l, r)| (l.iter().map(String::as_str).collect(), r.iter().map(String::as_str).collect()))
            .collect();
        DiagramShape::new(&objects, &arrows, &relations)
    }

    pub fn from_shape(s: &DiagramShape) -> Self {
        ShapeJson {
            objects: s.objects().to_vec(),
            arrows: s
                .arrows()
                .iter()
                .map(|a| ArrowJson {
                    name: a.name.clone(),
                    src: s.objects()[a.src].clone(),
                    dst: s.objects()[a.dst].clone(),
                })
                .collect(),
            relations: s.relations().iter().map(|r| (s.path_names(&r.lhs), s.path_names(&r.rhs))).collect(),
        }
    }
}

fn per_object<T: Copy>(shape: &DiagramShape, map: &IndexMap<String, T>, what: &str) -> Result<Vec<T>> {
    if let Some(k) = map.keys().find(|k| shape.object(k).is_err()) {
        return Err(CoreError::Parse(format!("{what}: unknown object {k:?}")));
    }
    shape
        .objects()
        .iter()
        .map(|o| map.get(o).copied().ok_or_else(|| CoreError::Parse(format!("{what}: missing object {o:?}"))))
        .collect()
}

fn per_arrow<'a, T>(shape: &DiagramShape, map: &'a IndexMap<String, T>, what: &str) -> Result<Vec<&'a T>> {
    if let Some(k) = map.keys().find(|k| shape.arrow(k).is_err()) {
        return Err(CoreError::Parse(format!("{what}: unknown arrow {k:?}")));
    }
    shape
        .arrows()
        .iter()
        .map(|a| map.get(&a.name).ok_or_else(|| CoreError::Parse(format!("{what}: missing arrow {:?}", a.name))))
        .collect()
}

impl LinRepJson {
    pub fn to_rep(&self) -> Result<LinRep> {
        let field = self.field.to_field()?;
        let shape = self.shape.to_shape()?;
        let dims = per_object(&shape, &self.dims, "dims")?;
        let rows: Vec<Vec<Vec<u32>>> = per_arrow(&shape, &self.mats, "mats")?.into_iter().cloned().collect();
        LinRep::from_rows(field, shape, dims, &rows)
    }

    pub fn from_rep(r: &LinRep) -> Self {
        let s = &r.shape;
        LinRepJson {
            field: FieldJson::from_field(&r.field),
            shape: ShapeJson::from_shape(s),
            dims: s.objects().iter().cloned().zip(r.dims.iter().copied()).collect(),
            mats: s.arrows().iter().map(|a| a.name.clone()).zip(r.mats.iter().map(Matrix::to_rows)).collect(),
        }
    }
}

impl SetRepJson {
    pub fn to_rep(&self) -> Result<SetRep> {
        let shape = self.shape.to_shape()?;
        let sizes = per_object(&shape, &self.sizes, "sizes")?;
        let maps: Vec<Vec<u32>> = per_arrow(&shape, &self.maps, "maps")?.into_iter().cloned().collect();
        SetRep::new(shape, sizes, maps)
    }

    pub fn from_rep(s: &SetRep, field: Option<&FieldSpec>) -> Self {
        let sh = &s.shape;
        SetRepJson {
            field: field.map(FieldJson::from_field),
            shape: ShapeJson::from_shape(sh),
            sizes: sh.objects().iter().cloned().zip(s.sizes.iter().copied()).collect(),
            maps: sh.arrows().iter().map(|a| a.name.clone()).zip(s.maps.iter().cloned()).collect(),
        }
    }
}

pub fn linrep_from_json(text: &str) -> Result<LinRep> {
    let j: LinRepJson = serde_json::from_str(text).map_err(|e| CoreError::Parse(e.to_string()))?;
    j.to_rep()
}

pub fn linrep_to_json(r: &LinRep) -> String {
    serde_json::to_string_pretty(&LinRepJson::from_rep(r)).expect("serializable")
}

pub fn setrep_from_json(text: &str) -> Result<SetRep> {
    let j: SetRepJson = serde_json::from_str(text).map_err(|e| CoreError::Parse(e.to_string()))?;
    j.to_rep()
}

pub fn setrep_to_json(s: &SetRep, field: Option<&FieldSpec>) -> String {
    serde_json::to_string_pretty(&SetRepJson::from_rep(s, field)).expect("serializable")
}

pub fn shape_from_json(text: &str) -> Result<DiagramShape> {
    let j: ShapeJson = serde_json::from_str(text).map_err(|e| CoreError::Parse(e.to_string()))?;
    j.to_shape()
}
