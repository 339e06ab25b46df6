//! Immutable simple undirected graphs on dense vertex ids `0..order`.
//!
//! Every vertex keeps a sorted neighbor list and a bitset row. The rows let
//! breadth-first search expand a whole frontier with word-wide ORs.

use std::fmt;

use crate::error::{Error, Result, MAX_ORDER};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    neighbors: Vec<Vec<Vertex>>,
    rows: Vec<u64>,
    size: usize,
}

fn words_for(order: usize) -> usize {
    order.div_ceil(64).max(1)
}

impl Graph {
    /// Graph on `order` isolated vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                limit: MAX_ORDER,
            });
        }
        let words = words_for(order);
        Ok(Graph {
            order,
            words,
            neighbors: vec![Vec::new(); order],
            rows: vec![0; order * words],
            size: 0,
        })
    }

    /// Builds a graph from an edge list. Repeated edges, in either
    /// orientation, collapse to a single edge.
    pub fn from_edge_list<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut builder = GraphBuilder::new(order)?;
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_null(&self) -> bool {
        self.order == 0
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order && v < self.order && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Bitset row of `v`; bit `w` is set iff `vw` is an edge.
    pub fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Number of `u64` words in each bitset row.
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        seq.sort_unstable();
        seq
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    /// Vertex-disjoint union; `b`'s ids are shifted up by `a.order()`.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph> {
        let shift = a.order;
        let mut builder = GraphBuilder::new(a.order + b.order)?;
        for (u, v) in a.edges() {
            builder.add_edge(u, v)?;
        }
        for (u, v) in b.edges() {
            builder.add_edge(u + shift, v + shift)?;
        }
        Ok(builder.build())
    }

    /// Join `a ∨ b`: the disjoint union plus every edge between the parts.
    pub fn join(a: &Graph, b: &Graph) -> Result<Graph> {
        let shift = a.order;
        let mut builder = GraphBuilder::from_graph(&Graph::disjoint_union(a, b)?);
        for x in 0..a.order {
            for y in 0..b.order {
                builder.add_edge(x, y + shift)?;
            }
        }
        Ok(builder.build())
    }

    /// Adds a pendant path with `len` new vertices hanging off `at`.
    /// The new vertices get ids `order..order+len`, nearest to `at` first.
    pub fn attach_path(&self, at: Vertex, len: usize) -> Result<Graph> {
        self.check_vertex(at)?;
        let mut builder = GraphBuilder::from_graph(self).grow(len)?;
        let mut prev = at;
        for k in 0..len {
            let next = self.order + k;
            builder.add_edge(prev, next)?;
            prev = next;
        }
        Ok(builder.build())
    }

    /// Subgraph induced by `keep`. New ids follow the order of `keep`; the
    /// returned map sends each old id in `keep` to its new id.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Result<(Graph, Vec<Option<Vertex>>)> {
        let mut map = vec![None; self.order];
        let mut kept = 0;
        for &v in keep {
            self.check_vertex(v)?;
            if map[v].is_none() {
                map[v] = Some(kept);
                kept += 1;
            }
        }
        let mut builder = GraphBuilder::new(kept)?;
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (map[u], map[v]) {
                builder.add_edge(a, b)?;
            }
        }
        Ok((builder.build(), map))
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        assert_eq!(
            perm.len(),
            self.order,
            "permutation length must equal order"
        );
        Graph::from_edge_list(self.order, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn complement(&self) -> Graph {
        let mut builder = GraphBuilder::new(self.order).expect("order already validated");
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.has_edge(u, v) {
                    builder.add_edge(u, v).expect("ids in range");
                }
            }
        }
        builder.build()
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.neighbors[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with exactly one component. The null graph is not
    /// connected.
    pub fn is_connected(&self) -> bool {
        self.order > 0 && self.components().len() == 1
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("complete graph")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v))).expect("path graph")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::from_edge_list(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle graph")
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edge_list(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edge_list(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))))
            .expect("complete bipartite graph")
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edge_list(10, outer.chain(spokes).chain(inner)).expect("Petersen graph")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Mutable edge accumulator that produces an immutable [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    order: usize,
    words: usize,
    rows: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                limit: MAX_ORDER,
            });
        }
        let words = words_for(order);
        Ok(GraphBuilder {
            order,
            words,
            rows: vec![0; order * words],
        })
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder {
            order: g.order,
            words: g.words,
            rows: g.rows.clone(),
        }
    }

    /// Adds `extra` isolated vertices.
    pub fn grow(self, extra: usize) -> Result<Self> {
        let mut grown = GraphBuilder::new(self.order + extra)?;
        for u in 0..self.order {
            let src = &self.rows[u * self.words..(u + 1) * self.words];
            grown.rows[u * grown.words..u * grown.words + self.words].copy_from_slice(src);
        }
        Ok(grown)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        for x in [u, v] {
            if x >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
        Ok(())
    }

    pub fn build(self) -> Graph {
        let mut neighbors = Vec::with_capacity(self.order);
        let mut degree_sum = 0;
        for u in 0..self.order {
            let row = &self.rows[u * self.words..(u + 1) * self.words];
            let ns: Vec<Vertex> = row
                .iter()
                .enumerate()
                .flat_map(|(w, &bits)| BitIter(bits).map(move |b| w * 64 + b))
                .collect();
            degree_sum += ns.len();
            neighbors.push(ns);
        }
        Graph {
            order: self.order,
            words: self.words,
            neighbors,
            rows: self.rows,
            size: degree_sum / 2,
        }
    }
}

/// Iterates set bit positions of a word, lowest first.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
