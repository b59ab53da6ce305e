//! Diagrams of graphs over posets, their path components, and graph
//! diagrams realizing a given pointed-set representation.

use std::collections::BTreeMap;

use indexmap::IndexMap;
use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};
use setreal_ff::FieldSpec;

use crate::error::{CoreError, Result};
use crate::io::ShapeJson;
use crate::linrep::LinRep;
use crate::setrep::{Linearization, SetRep};
use crate::shape::DiagramShape;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Graph {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexMap {
    /// `"inclusion"`: every vertex goes to the vertex of the same name.
    Named(String),
    Explicit(IndexMap<String, String>),
}

impl VertexMap {
    pub fn inclusion() -> Self {
        VertexMap::Named("inclusion".into())
    }
}

#[derive(Clone, Debug)]
pub struct GraphDiagram {
    pub shape: DiagramShape,
    pub graphs: Vec<Graph>,
    pub maps: Vec<VertexMap>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDiagramJson {
    pub shape: ShapeJson,
    pub graphs: IndexMap<String, Graph>,
    pub maps: IndexMap<String, VertexMap>,
}

impl GraphDiagram {
    pub fn from_json(j: &GraphDiagramJson) -> Result<Self> {
        let shape = j.shape.to_shape()?;
        let graphs = shape
            .objects()
            .iter()
            .map(|o| j.graphs.get(o).cloned().ok_or_else(|| CoreError::Parse(format!("no graph for object {o:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let maps = shape
            .arrows()
            .iter()
            .map(|a| j.maps.get(&a.name).cloned().unwrap_or_else(VertexMap::inclusion))
            .collect();
        let g = GraphDiagram { shape, graphs, maps };
        g.check()?;
        Ok(g)
    }

    pub fn to_json(&self) -> GraphDiagramJson {
        GraphDiagramJson {
            shape: ShapeJson::from_shape(&self.shape),
            graphs: self.shape.objects().iter().cloned().zip(self.graphs.iter().cloned()).collect(),
            maps: self.shape.arrows().iter().map(|a| a.name.clone()).zip(self.maps.iter().cloned()).collect(),
        }
    }

    fn vertex_index(&self, v: usize) -> Result<BTreeMap<&str, usize>> {
        let mut idx = BTreeMap::new();
        for (i, name) in self.graphs[v].vertices.iter().enumerate() {
            if idx.insert(name.as_str(), i).is_some() {
                return Err(CoreError::Invalid(format!("duplicate vertex {name:?} at {}", self.shape.objects()[v])));
            }
        }
        Ok(idx)
    }

    /// Image of each vertex of the source graph under arrow `a`.
    fn vertex_images(&self, a: usize) -> Result<Vec<usize>> {
        let arrow = &self.shape.arrows()[a];
        let target = self.vertex_index(arrow.dst)?;
        self.graphs[arrow.src]
            .vertices
            .iter()
            .map(|u| {
                let image = match &self.maps[a] {
                    VertexMap::Named(s) if s == "inclusion" => u.as_str(),
                    VertexMap::Named(s) => return Err(CoreError::Parse(format!("unknown vertex map {s:?}"))),
                    VertexMap::Explicit(m) => m
                        .get(u)
                        .map(String::as_str)
                        .ok_or_else(|| CoreError::Invalid(format!("arrow {}: vertex {u:?} has no image", arrow.name)))?,
                };
                target.get(image).copied().ok_or_else(|| {
                    CoreError::Invalid(format!("arrow {}: image {image:?} of {u:?} is not a vertex", arrow.name))
                })
            })
            .collect()
    }

    fn edge_indices(&self, v: usize) -> Result<Vec<(usize, usize)>> {
        let idx = self.vertex_index(v)?;
        self.graphs[v]
            .edges
            .iter()
            .map(|(a, b)| match (idx.get(a.as_str()), idx.get(b.as_str())) {
                (Some(&x), Some(&y)) => Ok((x, y)),
                _ => Err(CoreError::Invalid(format!(
                    "edge ({a}, {b}) at {} uses an unknown vertex",
                    self.shape.objects()[v]
                ))),
            })
            .collect()
    }

    /// Checks the poset shape, edges, and that every map is a graph morphism.
    pub fn check(&self) -> Result<()> {
        if !self.shape.is_acyclic() {
            return Err(CoreError::Shape("graph diagrams need a poset shape".into()));
        }
        if self.graphs.len() != self.shape.num_objects() || self.maps.len() != self.shape.num_arrows() {
            return Err(CoreError::Invalid("graph or map count does not match the shape".into()));
        }
        for (a, arrow) in self.shape.arrows().iter().enumerate() {
            let img = self.vertex_images(a)?;
            let target: Vec<(usize, usize)> = self.edge_indices(arrow.dst)?;
            for (x, y) in self.edge_indices(arrow.src)? {
                let (u, w) = (img[x], img[y]);
                if u != w && !target.iter().any(|&(s, t)| (s, t) == (u, w) || (s, t) == (w, u)) {
                    return Err(CoreError::Invalid(format!("arrow {}: an edge is not mapped to an edge", arrow.name)));
                }
            }
        }
        Ok(())
    }
}

/// Component label of every vertex, numbered from 1 by smallest vertex name.
fn components(g: &Graph, edges: &[(usize, usize)]) -> (usize, Vec<u32>) {
    let n = g.vertices.len();
    let mut uf = UnionFind::<usize>::new(n);
    for &(a, b) in edges {
        uf.union(a, b);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.vertices[a].cmp(&g.vertices[b]));
    let mut label = vec![0u32; n];
    let mut by_root: BTreeMap<usize, u32> = BTreeMap::new();
    for v in order {
        let next = by_root.len() as u32 + 1;
        label[v] = *by_root.entry(uf.find(v)).or_insert(next);
    }
    (by_root.len(), label)
}

/// `H_0` as a set-valued representation. The basepoint is never used.
pub fn h0_setrep(g: &GraphDiagram) -> Result<SetRep> {
    g.check()?;
    let mut sizes = Vec::new();
    let mut labels = Vec::new();
    for v in 0..g.shape.num_objects() {
        let (n, l) = components(&g.graphs[v], &g.edge_indices(v)?);
        sizes.push(n);
        labels.push(l);
    }
    let mut maps = Vec::new();
    for (a, arrow) in g.shape.arrows().iter().enumerate() {
        let img = g.vertex_images(a)?;
        let mut table = vec![0u32; sizes[arrow.src]];
        for (x, &y) in img.iter().enumerate() {
            table[labels[arrow.src][x] as usize - 1] = labels[arrow.dst][y];
        }
        maps.push(table);
    }
    let s = SetRep::new(g.shape.clone(), sizes, maps)?;
    s.validate().map_err(|v| CoreError::Invalid(format!("components do not form a representation: {v}")))?;
    Ok(s)
}

/// `H_0(G; F)`: the linearization with one basis vector per component.
pub fn h0_linrep(g: &GraphDiagram, field: &FieldSpec) -> Result<LinRep> {
    Ok(h0_setrep(g)?.linearize(field, Linearization::FreeStar))
}

/// Vertex name used by [`setrep_to_graphs`] for element `i` of object `r`.
pub fn cylinder_vertex(shape: &DiagramShape, r: usize, i: usize) -> String {
    format!("{}:{i}", shape.objects()[r])
}

/// The mapping-cylinder graph diagram: `G(p)` has a vertex for every element
/// of every `S(r)` with `r <= p`, and an edge from `i` at `r` to its image at
/// `r'` for every arrow `r -> r'` with `r' <= p`. Maps are inclusions.
pub fn setrep_to_graphs(s: &SetRep) -> Result<GraphDiagram> {
    let shape = &s.shape;
    if !shape.is_acyclic() {
        return Err(CoreError::Shape("graph realization needs a poset shape".into()));
    }
    if !s.is_basepoint_free() {
        return Err(CoreError::Invalid("a map hits the basepoint, which has no graph counterpart".into()));
    }
    let reach = shape.reachability();
    let n = shape.num_objects();
    let graphs = (0..n)
        .map(|p| {
            let below: Vec<usize> = (0..n).filter(|&r| reach[r][p]).collect();
            let vertices =
                below.iter().flat_map(|&r| (1..=s.sizes[r]).map(move |i| cylinder_vertex(shape, r, i))).collect();
            let edges = shape
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| reach[a.dst][p])
                .flat_map(|(ai, a)| {
                    (1..=s.sizes[a.src]).map(move |i| {
                        let j = s.maps[ai][i - 1] as usize;
                        (cylinder_vertex(shape, a.src, i), cylinder_vertex(shape, a.dst, j))
                    })
                })
                .collect();
            Graph { vertices, edges }
        })
        .collect();
    let maps = vec![VertexMap::inclusion(); shape.num_arrows()];
    Ok(GraphDiagram { shape: shape.clone(), graphs, maps })
}
