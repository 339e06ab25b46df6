//! Distances, eccentricities, radius, diameter and center.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, Vertex};

/// Sources at or above this order are processed in parallel.
const PARALLEL_ORDER: usize = 96;

/// All-pairs hop counts. `None` marks an unreachable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    entries: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn from_rows(rows: Vec<Vec<Option<u32>>>) -> Self {
        let order = rows.len();
        let entries: Vec<_> = rows.into_iter().flatten().collect();
        assert_eq!(
            entries.len(),
            order * order,
            "distance matrix must be square"
        );
        DistanceMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.entries[u * self.order + v]
    }

    pub fn row(&self, u: Vertex) -> &[Option<u32>] {
        &self.entries[u * self.order..(u + 1) * self.order]
    }

    pub fn is_connected(&self) -> bool {
        self.order > 0 && self.entries.iter().all(Option::is_some)
    }

    /// Sorted multiset of finite distances in row `u`, excluding `u` itself.
    pub fn distance_profile(&self, u: Vertex) -> Vec<u32> {
        let mut d: Vec<u32> = self
            .row(u)
            .iter()
            .flatten()
            .copied()
            .filter(|&x| x > 0)
            .collect();
        d.sort_unstable();
        d
    }
}

/// Hop distances from `source`, by level-synchronous BFS over bitset rows.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Vec<Option<u32>> {
    let words = g.row_words();
    let mut dist = vec![None; g.order()];
    let mut visited = vec![0u64; words];
    let mut frontier = vec![source];
    visited[source / 64] |= 1 << (source % 64);
    dist[source] = Some(0);
    let mut level = 0;
    let mut next = vec![0u64; words];
    while !frontier.is_empty() {
        level += 1;
        next.iter_mut().for_each(|w| *w = 0);
        for &v in &frontier {
            for (n, r) in next.iter_mut().zip(g.row(v)) {
                *n |= r;
            }
        }
        frontier.clear();
        for (w, (n, seen)) in next.iter().zip(visited.iter_mut()).enumerate() {
            let fresh = n & !*seen;
            *seen |= fresh;
            for b in BitIter(fresh) {
                let v = w * 64 + b;
                dist[v] = Some(level);
                frontier.push(v);
            }
        }
    }
    dist
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let rows: Vec<Vec<Option<u32>>> = if g.order() >= PARALLEL_ORDER {
        (0..g.order())
            .into_par_iter()
            .map(|s| bfs_distances(g, s))
            .collect()
    } else {
        (0..g.order()).map(|s| bfs_distances(g, s)).collect()
    };
    DistanceMatrix::from_rows(rows)
}

/// Eccentricity of every vertex, radius, diameter and the central vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccentricityProfile {
    pub ecc: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    /// Vertices of minimum eccentricity, ascending.
    pub center_vertices: Vec<Vertex>,
}

impl EccentricityProfile {
    pub fn from_distances(dm: &DistanceMatrix) -> Result<Self> {
        if dm.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        let ecc = (0..dm.order())
            .map(|u| {
                dm.row(u)
                    .iter()
                    .try_fold(0, |m, d| d.map(|d| m.max(d)))
                    .ok_or(Error::DisconnectedGraph)
            })
            .collect::<Result<Vec<u32>>>()?;
        let radius = *ecc.iter().min().expect("nonempty");
        let diameter = *ecc.iter().max().expect("nonempty");
        let center_vertices = (0..ecc.len()).filter(|&v| ecc[v] == radius).collect();
        Ok(EccentricityProfile {
            ecc,
            radius,
            diameter,
            center_vertices,
        })
    }

    pub fn is_self_centered(&self) -> bool {
        self.radius == self.diameter
    }

    /// The central vertex, when there is exactly one.
    pub fn unique_center(&self) -> Option<Vertex> {
        match self.center_vertices.as_slice() {
            [h] => Some(*h),
            _ => None,
        }
    }
}

pub fn metric_profile(g: &Graph) -> Result<EccentricityProfile> {
    if g.is_null() {
        return Err(Error::EmptyGraph);
    }
    EccentricityProfile::from_distances(&all_pairs_distances(g))
}

/// The center `C(G)`: the subgraph induced by the central vertices, with the
/// central vertex ids it was taken from.
pub fn center(g: &Graph) -> Result<(Graph, Vec<Vertex>)> {
    let profile = metric_profile(g)?;
    let (c, _) = g.induced_subgraph(&profile.center_vertices)?;
    Ok((c, profile.center_vertices))
}
