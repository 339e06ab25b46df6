//! Shared fixtures and brute-force oracles for the integration suites.
#![allow(dead_code, clippy::needless_range_loop)]

use centerkit::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const RANDOM_H_SEED: u64 = 0x5eed_c0de;

/// The center graphs every sweep runs over.
pub fn h_corpus() -> Vec<(&'static str, Graph)> {
    let mut rng = StdRng::seed_from_u64(RANDOM_H_SEED);
    vec![
        ("K1", Graph::complete(1)),
        ("K2", Graph::complete(2)),
        ("co-K2", Graph::empty(2).unwrap()),
        ("P4", Graph::path(4)),
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        ("Petersen", Graph::petersen()),
        (
            "K3+K2",
            Graph::disjoint_union(&Graph::complete(3), &Graph::complete(2)).unwrap(),
        ),
        ("G(8,1/2)", random_graph(8, 0.5, &mut rng)),
    ]
}

/// Self-centered graphs used for path attachment.
pub fn self_centered_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", Graph::complete(2)),
        ("K5", Graph::complete(5)),
        ("C5", Graph::cycle(5)),
        ("C6", Graph::cycle(6)),
        ("Petersen", Graph::petersen()),
    ]
}

pub fn random_graph(n: usize, p: f64, rng: &mut StdRng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

/// Random spanning tree plus independent extra edges.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut StdRng) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

/// Floyd–Warshall over adjacency queries only.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for i in 0..n {
        d[i][i] = Some(0);
        for j in 0..n {
            if g.has_edge(i, j) {
                d[i][j] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Radius, diameter and central vertices straight from Floyd–Warshall.
pub fn oracle_profile(g: &Graph) -> (u32, u32, Vec<usize>) {
    let d = floyd_warshall(g);
    let ecc: Vec<u32> = d
        .iter()
        .map(|row| row.iter().map(|x| x.expect("connected")).max().unwrap())
        .collect();
    let r = *ecc.iter().min().unwrap();
    let diam = *ecc.iter().max().unwrap();
    (r, diam, (0..ecc.len()).filter(|&v| ecc[v] == r).collect())
}

/// Upper-triangle pair list in the order used for edge masks.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Connectivity of a labeled graph given as an edge mask over `pairs(n)`.
pub fn mask_connected(n: usize, mask: u64, pairs: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut adj = vec![0u32; n];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        for (v, row) in adj.iter().enumerate() {
            if frontier >> v & 1 == 1 {
                next |= row;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Number of connected graphs on `n` unlabeled vertices, by taking the least
/// edge mask over all relabelings of every labeled connected graph.
pub fn brute_force_class_count(n: usize) -> usize {
    let pairs = pairs(n);
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms = permutations(n);
    // Where pair k lands under each permutation.
    let moved: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut canon = std::collections::HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        if !mask_connected(n, mask, &pairs) {
            continue;
        }
        let least = moved
            .iter()
            .map(|m| {
                let mut out = 0u64;
                for (k, &to) in m.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        out |= 1 << to;
                    }
                }
                out
            })
            .min()
            .unwrap();
        canon.insert(least);
    }
    canon.len()
}

/// Number of labeled connected graphs on `n` vertices.
pub fn labeled_connected_count(n: usize) -> u64 {
    let pairs = pairs(n);
    (0u64..1 << pairs.len())
        .filter(|&m| mask_connected(n, m, &pairs))
        .count() as u64
}

/// |Aut(g)| by trying every permutation.
pub fn automorphism_count(g: &Graph) -> u64 {
    let edges: Vec<_> = g.edges().collect();
    permutations(g.order())
        .iter()
        .filter(|p| edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v])))
        .count() as u64
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Relabels `g` by a seeded random permutation.
pub fn shuffled(g: &Graph, rng: &mut StdRng) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    for i in (1..perm.len()).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    g.relabel(&perm).unwrap()
}
