//! Exact isomorphism testing for small graphs.
//!
//! The matcher colors vertices with isomorphism-invariant keys, refines the
//! coloring jointly over both graphs, then backtracks over same-colored
//! candidates. Disconnected graphs are matched component by component.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::metric::{all_pairs_distances, center, DistanceMatrix};

/// Default bound on the order accepted by [`are_isomorphic`].
pub const DEFAULT_ISO_LIMIT: usize = 64;
/// Largest order the permutation oracle will try.
pub const BRUTE_FORCE_LIMIT: usize = 8;

/// A bijection between the vertex sets of two graphs: `self[v]` is the image
/// of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap(Vec<Vertex>);

impl VertexMap {
    pub fn new(images: Vec<Vertex>) -> Self {
        VertexMap(images)
    }

    pub fn image(&self, v: Vertex) -> Vertex {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    /// True iff this map is a bijection sending `E(a)` onto `E(b)`.
    pub fn is_isomorphism(&self, a: &Graph, b: &Graph) -> bool {
        if a.order() != b.order() || a.size() != b.size() || self.0.len() != a.order() {
            return false;
        }
        let mut hit = vec![false; b.order()];
        for &w in &self.0 {
            if w >= b.order() || std::mem::replace(&mut hit[w], true) {
                return false;
            }
        }
        a.edges().all(|(u, v)| b.has_edge(self.0[u], self.0[v]))
    }
}

/// Isomorphism-invariant fingerprint of a whole graph, used to bucket
/// candidates before pairwise testing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphKey {
    pub order: usize,
    pub size: usize,
    pub degrees: Vec<usize>,
    /// Sorted eccentricities; unreachable pairs are ignored.
    pub eccentricities: Vec<u32>,
    /// Sorted per-vertex distance profiles.
    pub distance_distribution: Vec<Vec<u32>>,
}

pub fn invariant_key(g: &Graph) -> GraphKey {
    key_with_distances(g, &all_pairs_distances(g))
}

fn key_with_distances(g: &Graph, dm: &DistanceMatrix) -> GraphKey {
    let mut profiles: Vec<Vec<u32>> = (0..g.order()).map(|v| dm.distance_profile(v)).collect();
    let mut eccentricities: Vec<u32> = profiles
        .iter()
        .map(|p| p.last().copied().unwrap_or(0))
        .collect();
    eccentricities.sort_unstable();
    profiles.sort();
    GraphKey {
        order: g.order(),
        size: g.size(),
        degrees: g.degree_sequence(),
        eccentricities,
        distance_distribution: profiles,
    }
}

/// Returns a certifying map when `a ≅ b`.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<Option<VertexMap>> {
    are_isomorphic_with_limit(a, b, DEFAULT_ISO_LIMIT)
}

pub fn are_isomorphic_with_limit(a: &Graph, b: &Graph, limit: usize) -> Result<Option<VertexMap>> {
    for g in [a, b] {
        if g.order() > limit {
            return Err(Error::OrderTooLarge {
                order: g.order(),
                limit,
            });
        }
    }
    if a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(None);
    }
    if a.order() == 0 {
        return Ok(Some(VertexMap(Vec::new())));
    }
    let found = if a.is_connected() && b.is_connected() {
        match_connected(a, b)
    } else {
        match_components(a, b)?
    };
    debug_assert!(found.as_ref().is_none_or(|m| m.is_isomorphism(a, b)));
    Ok(found)
}

fn match_components(a: &Graph, b: &Graph) -> Result<Option<VertexMap>> {
    let split = |g: &Graph| -> Result<Vec<(GraphKey, Graph, Vec<Vertex>)>> {
        let mut parts = g
            .components()
            .into_iter()
            .map(|vs| {
                let (sub, _) = g.induced_subgraph(&vs)?;
                Ok((invariant_key(&sub), sub, vs))
            })
            .collect::<Result<Vec<_>>>()?;
        parts.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.2.cmp(&y.2)));
        Ok(parts)
    };
    let pa = split(a)?;
    let pb = split(b)?;
    if pa.len() != pb.len() || pa.iter().zip(&pb).any(|(x, y)| x.0 != y.0) {
        return Ok(None);
    }
    let mut images = vec![usize::MAX; a.order()];
    let mut used = vec![false; pb.len()];
    for (key, sub, verts) in &pa {
        // Isomorphism is an equivalence, so taking the first unused match is safe.
        let hit = pb.iter().enumerate().find_map(|(j, (kb, sb, vb))| {
            if used[j] || kb != key {
                return None;
            }
            match_connected(sub, sb).map(|m| (j, m, vb))
        });
        let Some((j, m, vb)) = hit else {
            return Ok(None);
        };
        used[j] = true;
        for (i, &v) in verts.iter().enumerate() {
            images[v] = vb[m.image(i)];
        }
    }
    Ok(Some(VertexMap(images)))
}

/// Per-vertex starting colors: degree, neighbor degrees, distance to the
/// nearest minimum-degree vertex, and the distance profile.
type VertexKey = (usize, Vec<usize>, Option<u32>, Vec<u32>);

fn vertex_keys(g: &Graph, dm: &DistanceMatrix) -> Vec<VertexKey> {
    let min_deg = (0..g.order()).map(|v| g.degree(v)).min().unwrap_or(0);
    let anchors: Vec<Vertex> = (0..g.order()).filter(|&v| g.degree(v) == min_deg).collect();
    (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            let to_anchor = anchors.iter().filter_map(|&x| dm.get(v, x)).min();
            (g.degree(v), nd, to_anchor, dm.distance_profile(v))
        })
        .collect()
}

/// Joint color refinement. Returns `None` if the color histograms diverge.
fn refine(a: &Graph, b: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let da = all_pairs_distances(a);
    let db = all_pairs_distances(b);
    let ka = vertex_keys(a, &da);
    let kb = vertex_keys(b, &db);
    let mut palette = BTreeMap::new();
    for k in ka.iter().chain(&kb) {
        let next = palette.len();
        palette.entry(k.clone()).or_insert(next);
    }
    let mut ca: Vec<usize> = ka.iter().map(|k| palette[k]).collect();
    let mut cb: Vec<usize> = kb.iter().map(|k| palette[k]).collect();
    let mut classes = class_count(&ca, &cb)?;
    loop {
        let signature = |g: &Graph, c: &[usize], v: Vertex| {
            let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&w| c[w]).collect();
            ns.sort_unstable();
            (c[v], ns)
        };
        let mut palette = BTreeMap::new();
        let sa: Vec<_> = (0..a.order()).map(|v| signature(a, &ca, v)).collect();
        let sb: Vec<_> = (0..b.order()).map(|v| signature(b, &cb, v)).collect();
        for s in sa.iter().chain(&sb) {
            palette.entry(s.clone()).or_insert(0usize);
        }
        for (i, v) in palette.values_mut().enumerate() {
            *v = i;
        }
        ca = sa.iter().map(|s| palette[s]).collect();
        cb = sb.iter().map(|s| palette[s]).collect();
        let refined = class_count(&ca, &cb)?;
        if refined == classes {
            return Some((ca, cb));
        }
        classes = refined;
    }
}

/// Checks that both colorings have the same histogram; returns the class count.
fn class_count(ca: &[usize], cb: &[usize]) -> Option<usize> {
    let count = |c: &[usize]| {
        let mut h = BTreeMap::new();
        for &x in c {
            *h.entry(x).or_insert(0usize) += 1;
        }
        h
    };
    let ha = count(ca);
    (ha == count(cb)).then_some(ha.len())
}

fn match_connected(a: &Graph, b: &Graph) -> Option<VertexMap> {
    let n = a.order();
    let (ca, cb) = refine(a, b)?;
    let mut class_size = vec![0usize; ca.iter().chain(&cb).copied().max().unwrap_or(0) + 1];
    for &c in &ca {
        class_size[c] += 1;
    }

    // Search order: grow from the rarest-colored vertex, always taking the
    // unplaced vertex with the most placed neighbors.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (usize::MAX - links[v], class_size[ca[v]], v))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for &w in a.neighbors(v) {
            links[w] += 1;
        }
    }

    let mut candidates: Vec<Vec<Vertex>> = vec![Vec::new(); class_size.len()];
    for w in 0..n {
        candidates[cb[w]].push(w);
    }

    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &order, 0, &ca, &candidates, &mut images, &mut used) {
        Some(VertexMap(images))
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    order: &[Vertex],
    depth: usize,
    ca: &[usize],
    candidates: &[Vec<Vertex>],
    images: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for &w in &candidates[ca[v]] {
        if used[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(images[u], w));
        if !consistent {
            continue;
        }
        images[v] = w;
        used[w] = true;
        if extend(a, b, order, depth + 1, ca, candidates, images, used) {
            return true;
        }
        used[w] = false;
    }
    images[v] = usize::MAX;
    false
}

/// Ground-truth isomorphism test trying every vertex bijection.
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    for g in [a, b] {
        if g.order() > BRUTE_FORCE_LIMIT {
            return Err(Error::OrderTooLarge {
                order: g.order(),
                limit: BRUTE_FORCE_LIMIT,
            });
        }
    }
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    let n = a.order();
    let edges: Vec<_> = a.edges().collect();
    let mut perm: Vec<Vertex> = (0..n).collect();
    let maps_edges = |p: &[Vertex]| edges.iter().all(|&(u, v)| b.has_edge(p[u], p[v]));
    if maps_edges(&perm) {
        return Ok(true);
    }
    // Heap's algorithm, iterative form.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            perm.swap(j, i);
            if maps_edges(&perm) {
                return Ok(true);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(false)
}

/// Compares `C(g)` against `h`. The returned map is indexed by position in
/// the ascending list of central vertices of `g`.
pub fn center_matches(g: &Graph, h: &Graph) -> Result<Option<VertexMap>> {
    let (c, _) = center(g)?;
    are_isomorphic(&c, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iso(a: &Graph, b: &Graph) -> bool {
        are_isomorphic(a, b).unwrap().is_some()
    }

    #[test]
    fn small_named_pairs() {
        assert!(iso(&Graph::cycle(4), &Graph::complete_bipartite(2, 2)));
        assert!(!iso(&Graph::path(4), &Graph::star(3)));
        assert!(brute_force_isomorphic(&Graph::complete(3), &Graph::cycle(3)).unwrap());
        assert!(!brute_force_isomorphic(&Graph::complete(3), &Graph::path(3)).unwrap());
    }

    #[test]
    fn witness_is_valid() {
        let a = Graph::petersen();
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        let b = a.relabel(&perm).unwrap();
        let m = are_isomorphic(&a, &b).unwrap().unwrap();
        assert!(m.is_isomorphism(&a, &b));
    }

    #[test]
    fn disconnected_graphs_match_by_component() {
        let a = Graph::disjoint_union(&Graph::complete(3), &Graph::path(2)).unwrap();
        let b = Graph::disjoint_union(&Graph::path(2), &Graph::cycle(3)).unwrap();
        let m = are_isomorphic(&a, &b).unwrap().unwrap();
        assert!(m.is_isomorphism(&a, &b));
        // Same degree sequence, different component structure.
        let c6 = Graph::cycle(6);
        let two_k3 = Graph::disjoint_union(&Graph::complete(3), &Graph::complete(3)).unwrap();
        assert!(!iso(&c6, &two_k3));
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // K_{3,3} and the triangular prism are both 3-regular on 6 vertices.
        let prism = Graph::from_edge_list(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(!iso(&prism, &Graph::complete_bipartite(3, 3)));
        assert!(!brute_force_isomorphic(&prism, &Graph::complete_bipartite(3, 3)).unwrap());
    }

    #[test]
    fn limits() {
        let big = Graph::path(65);
        assert!(matches!(
            are_isomorphic(&big, &big),
            Err(Error::OrderTooLarge { limit: 64, .. })
        ));
        assert!(matches!(
            brute_force_isomorphic(&Graph::path(9), &Graph::path(9)),
            Err(Error::OrderTooLarge { .. })
        ));
        let null = Graph::empty(0).unwrap();
        assert!(iso(&null, &null));
    }

    #[test]
    fn centers() {
        assert!(center_matches(&Graph::path(5), &Graph::complete(1))
            .unwrap()
            .is_some());
        assert!(center_matches(&Graph::cycle(6), &Graph::cycle(6))
            .unwrap()
            .is_some());
        assert!(center_matches(&Graph::path(4), &Graph::complete(1))
            .unwrap()
            .is_none());
        assert_eq!(
            center_matches(&Graph::empty(2).unwrap(), &Graph::complete(1)),
            Err(Error::DisconnectedGraph)
        );
    }
}
