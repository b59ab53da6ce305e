//! Posets over which every additively Set-realizable representation is a
//! sum of indicators.

use crate::error::{CoreError, Result};
use crate::shape::DiagramShape;

/// Strict order and covering relation of an acyclic shape.
struct Poset {
    less: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
}

fn poset_of(shape: &DiagramShape) -> Result<Poset> {
    if !shape.is_acyclic() {
        return Err(CoreError::Shape("not a poset: the shape has a directed cycle".into()));
    }
    let reach = shape.reachability();
    let n = reach.len();
    let less: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|w| u != w && reach[u][w]).collect()).collect();
    let mut covers = Vec::new();
    for u in 0..n {
        for w in 0..n {
            if less[u][w] && !(0..n).any(|z| less[u][z] && less[z][w]) {
                covers.push((u, w));
            }
        }
    }
    Ok(Poset { less, covers })
}

/// Connected components of the Hasse diagram restricted to `members`.
fn hasse_components(p: &Poset, members: &[usize]) -> Vec<Vec<usize>> {
    let mut comp: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; p.less.len()];
    for &s in members {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut c = vec![s];
        let mut i = 0;
        while i < c.len() {
            let v = c[i];
            i += 1;
            for &(a, b) in &p.covers {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && members.contains(&y) && !seen[y] {
                        seen[y] = true;
                        c.push(y);
                    }
                }
            }
        }
        c.sort_unstable();
        comp.push(c);
    }
    comp
}

/// Connected `members` whose Hasse diagram is a path.
fn is_type_a(p: &Poset, members: &[usize]) -> bool {
    let edges: Vec<&(usize, usize)> =
        p.covers.iter().filter(|(a, b)| members.contains(a) && members.contains(b)).collect();
    if edges.len() + 1 != members.len() {
        return false;
    }
    members.iter().all(|&v| edges.iter().filter(|(a, b)| *a == v || *b == v).count() <= 2)
}

fn extremes(p: &Poset, members: &[usize], top: bool) -> Vec<usize> {
    members
        .iter()
        .copied()
        .filter(|&v| !members.iter().any(|&w| if top { p.less[v][w] } else { p.less[w][v] }))
        .collect()
}

/// True when every component is of type A, or has a unique maximum whose
/// removal leaves type-A pieces each with a unique minimum.
pub fn shape_is_indicator_only(shape: &DiagramShape) -> Result<bool> {
    let p = poset_of(shape)?;
    let all: Vec<usize> = (0..shape.num_objects()).collect();
    for comp in hasse_components(&p, &all) {
        if is_type_a(&p, &comp) {
            continue;
        }
        let maxima = extremes(&p, &comp, true);
        if maxima.len() != 1 {
            return Ok(false);
        }
        let rest: Vec<usize> = comp.iter().copied().filter(|&v| v != maxima[0]).collect();
        for piece in hasse_components(&p, &rest) {
            if !is_type_a(&p, &piece) || extremes(&p, &piece, false).len() != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
