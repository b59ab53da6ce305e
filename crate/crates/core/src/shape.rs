//! Finite presented categories: objects, generating arrows and optional
//! path relations.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{CoreError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

/// Two parallel paths asserted equal. Paths list arrows in the order they are
/// traversed; an empty path is the identity at `src` (which then equals `dst`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
    pub src: usize,
    pub dst: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DiagramShape {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
}

impl DiagramShape {
    /// Builds a shape from names. Relations are pairs of arrow-name paths.
    pub fn new<S: AsRef<str>>(
        objects: &[S],
        arrows: &[(S, S, S)],
        relations: &[(Vec<S>, Vec<S>)],
    ) -> Result<Self> {
        let mut shape = DiagramShape {
            objects: objects.iter().map(|o| o.as_ref().to_string()).collect(),
            arrows: Vec::new(),
            relations: Vec::new(),
        };
        let mut seen = BTreeSet::new();
        for o in &shape.objects {
            if !seen.insert(o.clone()) {
                return Err(CoreError::Shape(format!("duplicate object name {o:?}")));
            }
        }
        for (name, src, dst) in arrows {
            let src = shape.object(src.as_ref())?;
            let dst = shape.object(dst.as_ref())?;
            shape.push_arrow(name.as_ref(), src, dst)?;
        }
        for (lhs, rhs) in relations {
            let lhs = lhs.iter().map(|a| shape.arrow(a.as_ref())).collect::<Result<Vec<_>>>()?;
            let rhs = rhs.iter().map(|a| shape.arrow(a.as_ref())).collect::<Result<Vec<_>>>()?;
            shape.push_relation(lhs, rhs)?;
        }
        Ok(shape)
    }

    /// A poset given by its cover relations (Hasse diagram), with all
    /// parallel paths declared equal.
    pub fn poset<S: AsRef<str>>(objects: &[S], covers: &[(S, S, S)]) -> Result<Self> {
        let mut shape = DiagramShape::new(objects, covers, &[])?;
        if !shape.is_acyclic() {
            return Err(CoreError::Shape("cover relation has a cycle".into()));
        }
        shape.add_commutativity_relations();
        Ok(shape)
    }

    /// Adds relations making all parallel paths equal: every path from `u`
    /// to `w` is related to the first such path found.
    pub fn add_commutativity_relations(&mut self) {
        let n = self.objects.len();
        let mut new = Vec::new();
        for u in 0..n {
            let paths = self.paths_from(u);
            for w in 0..n {
                let to_w: Vec<&Vec<usize>> = paths.iter().filter(|(t, _)| *t == w).map(|(_, p)| p).collect();
                for p in to_w.iter().skip(1) {
                    new.push((to_w[0].clone(), (*p).clone()));
                }
            }
        }
        for (l, r) in new {
            self.push_relation(l, r).expect("parallel paths");
        }
    }

    /// All nonempty paths starting at `u` in an acyclic shape, as (end, arrows).
    fn paths_from(&self, u: usize) -> Vec<(usize, Vec<usize>)> {
        let mut out = Vec::new();
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(u, Vec::new())];
        while let Some((v, path)) = stack.pop() {
            for a in self.out_arrows(v).into_iter().rev() {
                let mut p = path.clone();
                p.push(a);
                out.push((self.arrows[a].dst, p.clone()));
                stack.push((self.arrows[a].dst, p));
            }
        }
        out.sort_by(|a, b| (a.0, a.1.len(), &a.1).cmp(&(b.0, b.1.len(), &b.1)));
        out
    }

    pub fn push_object(&mut self, name: &str) -> Result<usize> {
        if self.objects.iter().any(|o| o == name) {
            return Err(CoreError::Shape(format!("duplicate object name {name:?}")));
        }
        self.objects.push(name.to_string());
        Ok(self.objects.len() - 1)
    }

    pub fn push_arrow(&mut self, name: &str, src: usize, dst: usize) -> Result<usize> {
        if self.arrows.iter().any(|a| a.name == name) {
            return Err(CoreError::Shape(format!("duplicate arrow name {name:?}")));
        }
        if src >= self.objects.len() || dst >= self.objects.len() {
            return Err(CoreError::Shape(format!("arrow {name:?} has an endpoint out of range")));
        }
        self.arrows.push(Arrow { name: name.to_string(), src, dst });
        Ok(self.arrows.len() - 1)
    }

    pub fn push_relation(&mut self, lhs: Vec<usize>, rhs: Vec<usize>) -> Result<()> {
        let l = self.path_ends(&lhs)?;
        let r = self.path_ends(&rhs)?;
        let (src, dst) = match (l, r) {
            (Some(a), Some(b)) if a == b => a,
            (Some((s, d)), None) | (None, Some((s, d))) if s == d => (s, d),
            (None, None) => return Err(CoreError::Shape("relation between two empty paths".into())),
            _ => return Err(CoreError::Shape("relation paths are not parallel".into())),
        };
        self.relations.push(Relation { lhs, rhs, src, dst });
        Ok(())
    }

    /// Source and target of a nonempty composable path.
    fn path_ends(&self, path: &[usize]) -> Result<Option<(usize, usize)>> {
        let Some(&first) = path.first() else { return Ok(None) };
        for w in path.windows(2) {
            if self.arrows[w[0]].dst != self.arrows[w[1]].src {
                return Err(CoreError::Shape(format!(
                    "path {:?} is not composable",
                    path.iter().map(|&a| &self.arrows[a].name).collect::<Vec<_>>()
                )));
            }
        }
        Ok(Some((self.arrows[first].src, self.arrows[*path.last().unwrap()].dst)))
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn object(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| CoreError::Shape(format!("unknown object {name:?}")))
    }

    pub fn arrow(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| CoreError::Shape(format!("unknown arrow {name:?}")))
    }

    pub fn path_names(&self, path: &[usize]) -> Vec<String> {
        path.iter().map(|&a| self.arrows[a].name.clone()).collect()
    }

    pub fn out_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].src == v).collect()
    }

    pub fn in_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].dst == v).collect()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.dst != v)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.src != v)
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.objects.len()).filter(|&v| self.is_sink(v)).collect()
    }

    /// `reach[u][w]`: there is a path (possibly empty) from `u` to `w`.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.objects.len();
        let mut reach = vec![vec![false; n]; n];
        for (u, row) in reach.iter_mut().enumerate() {
            let mut queue = VecDeque::from([u]);
            row[u] = true;
            while let Some(v) = queue.pop_front() {
                for a in &self.arrows {
                    if a.src == v && !row[a.dst] {
                        row[a.dst] = true;
                        queue.push_back(a.dst);
                    }
                }
            }
        }
        reach
    }

    /// No directed cycles (including loops).
    pub fn is_acyclic(&self) -> bool {
        if self.arrows.iter().any(|a| a.src == a.dst) {
            return false;
        }
        let reach = self.reachability();
        self.arrows.iter().all(|a| !reach[a.dst][a.src])
    }

    /// Objects in weakly connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.objects.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for a in &self.arrows {
                    for (x, y) in [(a.src, a.dst), (a.dst, a.src)] {
                        if x == v && comp[y] == usize::MAX {
                            comp[y] = id;
                            members.push(y);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Copy with the arrows in `flip` reversed (names and order kept).
    /// Relations are dropped.
    pub fn with_reversed(&self, flip: &[usize]) -> DiagramShape {
        let mut s = self.clone();
        for &a in flip {
            let arr = &mut s.arrows[a];
            std::mem::swap(&mut arr.src, &mut arr.dst);
        }
        s.relations.clear();
        s
    }

    /// The linearly oriented or zigzag quiver of type A_n: `forward[i]` says
    /// whether the arrow between objects `i` and `i+1` points to `i+1`.
    pub fn type_a(forward: &[bool]) -> DiagramShape {
        let n = forward.len() + 1;
        let objects: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut s = DiagramShape { objects, arrows: Vec::new(), relations: Vec::new() };
        for (i, &f) in forward.iter().enumerate() {
            let (a, b) = if f { (i, i + 1) } else { (i + 1, i) };
            s.push_arrow(&format!("a{}", i + 1), a, b).unwrap();
        }
        s
    }

    /// The quiver with one object and one loop.
    pub fn one_loop() -> DiagramShape {
        let mut s = DiagramShape { objects: vec!["v".into()], arrows: Vec::new(), relations: Vec::new() };
        s.push_arrow("phi", 0, 0).unwrap();
        s
    }

    /// The commutative grid `{1..rows} x {1..cols}` with arrows pointing
    /// right (`h{r}{c}`) and up (`v{r}{c}`). Objects are named `r,c`, row 1 at the bottom.
    pub fn grid(rows: usize, cols: usize) -> DiagramShape {
        let mut objects = Vec::new();
        for r in 1..=rows {
            for c in 1..=cols {
                objects.push(format!("{r},{c}"));
            }
        }
        let mut covers = Vec::new();
        for r in 1..=rows {
            for c in 1..=cols {
                if c < cols {
                    covers.push((format!("h{r}{c}"), format!("{r},{c}"), format!("{r},{}", c + 1)));
                }
                if r < rows {
                    covers.push((format!("v{r}{c}"), format!("{r},{c}"), format!("{},{c}", r + 1)));
                }
            }
        }
        DiagramShape::poset(&objects, &covers).unwrap()
    }
}
