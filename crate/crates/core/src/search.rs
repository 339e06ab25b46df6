//! Exhaustive search over small connected graphs for single-center graphs
//! with a given radius and diameter.
//!
//! Orders up to [`BUILTIN_MAX_ORDER`] are generated in-process: every
//! connected graph on `n` vertices has a vertex whose removal leaves it
//! connected, so extending each class representative on `n - 1` vertices by
//! a new vertex with every nonempty neighborhood reaches every class.
//! Candidates are bucketed by [`GraphKey`] and deduplicated with exact
//! isomorphism tests. Orders 9 and 10 come from an external graph6 corpus.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::Path;
use std::sync::OnceLock;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::check_radius_diameter;
use crate::error::{Error, Result};
use crate::format::{encode_graph6, parse_graph6_lines};
use crate::graph::{Graph, GraphBuilder};
use crate::iso::{are_isomorphic, invariant_key, GraphKey};
use crate::metric::metric_profile;

/// Largest order generated without a corpus.
pub const BUILTIN_MAX_ORDER: usize = 8;
/// Largest order any search may reach.
pub const SEARCH_MAX_ORDER: usize = 10;
/// Largest order [`classify_d_equals_2r`] accepts.
pub const CLASSIFY_MAX_ORDER: usize = 9;

static LEVELS: [OnceLock<Vec<Graph>>; BUILTIN_MAX_ORDER + 1] =
    [const { OnceLock::new() }; BUILTIN_MAX_ORDER + 1];

/// One representative per isomorphism class of connected graphs of order
/// `n`, in a fixed order.
pub fn enumerate_connected_graphs(n: usize) -> Result<&'static [Graph]> {
    if n > BUILTIN_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: BUILTIN_MAX_ORDER,
        });
    }
    Ok(LEVELS[n].get_or_init(|| generate_level(n)))
}

fn generate_level(n: usize) -> Vec<Graph> {
    match n {
        0 => Vec::new(),
        1 => vec![Graph::complete(1)],
        _ => {
            let parents = enumerate_connected_graphs(n - 1).expect("smaller order in range");
            let candidates: Vec<Graph> = parents
                .par_iter()
                .flat_map_iter(|p| (1u32..1 << (n - 1)).map(move |mask| extend_by_vertex(p, mask)))
                .collect();
            let keyed: Vec<(GraphKey, Graph)> = candidates
                .into_par_iter()
                .map(|g| (invariant_key(&g), g))
                .collect();
            dedup_by_isomorphism(keyed)
        }
    }
}

/// Adds vertex `p.order()` adjacent to the vertices selected by `mask`.
fn extend_by_vertex(p: &Graph, mask: u32) -> Graph {
    let n = p.order();
    let mut b = GraphBuilder::from_graph(p).grow(1).expect("small order");
    for v in (0..n).filter(|v| mask >> v & 1 == 1) {
        b.add_edge(v, n).expect("ids in range");
    }
    b.build()
}

/// Keeps the first graph of each isomorphism class, preserving input order.
fn dedup_by_isomorphism(keyed: Vec<(GraphKey, Graph)>) -> Vec<Graph> {
    let mut buckets: HashMap<GraphKey, Vec<usize>> = HashMap::new();
    let mut kept: Vec<Graph> = Vec::new();
    for (key, g) in keyed {
        let bucket = buckets.entry(key).or_default();
        let seen = bucket.iter().any(|&i| {
            are_isomorphic(&kept[i], &g)
                .expect("order within limit")
                .is_some()
        });
        if !seen {
            bucket.push(kept.len());
            kept.push(g);
        }
    }
    kept
}

/// Where connected graphs of each order come from.
#[derive(Clone, Debug, Default)]
pub struct GraphSource {
    corpus: BTreeMap<usize, Vec<Graph>>,
}

impl GraphSource {
    /// In-process generation only.
    pub fn builtin() -> Self {
        GraphSource::default()
    }

    /// Adds graphs read from graph6 lines; disconnected graphs and orders the
    /// builtin generator already covers are dropped.
    pub fn with_corpus_text(mut self, text: &str) -> Result<Self> {
        for g in parse_graph6_lines(text)? {
            if g.order() > BUILTIN_MAX_ORDER && g.order() <= SEARCH_MAX_ORDER && g.is_connected() {
                self.corpus.entry(g.order()).or_default().push(g);
            }
        }
        Ok(self)
    }

    pub fn with_corpus_file(self, path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::Format(crate::error::FormatError::MalformedHeader(format!(
                "cannot read corpus {}: {e}",
                path.display()
            )))
        })?;
        self.with_corpus_text(&text)
    }

    pub fn connected_graphs(&self, n: usize) -> Result<&[Graph]> {
        if n <= BUILTIN_MAX_ORDER {
            return enumerate_connected_graphs(n);
        }
        match self.corpus.get(&n) {
            Some(gs) if n <= SEARCH_MAX_ORDER => Ok(gs),
            _ => Err(Error::OrderTooLarge {
                order: n,
                limit: BUILTIN_MAX_ORDER,
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Stop at the first witness of the smallest order.
    FirstMinimal,
    /// Every witness of the smallest order.
    AllMinimal,
    /// Every witness up to the order bound.
    AllUpToBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchQuery {
    pub r: u32,
    pub d: u32,
    pub max_order: usize,
    pub mode: SearchMode,
}

impl SearchQuery {
    pub fn new(r: u32, d: u32, max_order: usize, mode: SearchMode) -> Result<Self> {
        check_radius_diameter(r, d)?;
        if max_order > SEARCH_MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: max_order,
                limit: SEARCH_MAX_ORDER,
            });
        }
        Ok(SearchQuery {
            r,
            d,
            max_order,
            mode,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub minimal_order: Option<usize>,
    /// Pairwise non-isomorphic witnesses, by order then enumeration position.
    pub witnesses: Vec<Graph>,
    /// Every order below the reported minimum (or up to the bound, when
    /// nothing was found) was scanned completely.
    pub exhausted: bool,
}

#[derive(Serialize)]
struct SearchResultJson {
    minimal_order: Option<usize>,
    exhausted: bool,
    witnesses: Vec<String>,
}

impl SearchResult {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match self.minimal_order {
            Some(m) => {
                let _ = writeln!(s, "minimal_order={m}");
            }
            None => s.push_str("minimal_order=not_found\n"),
        }
        let _ = writeln!(s, "exhausted={}", self.exhausted);
        let _ = writeln!(s, "witnesses={}", self.witnesses.len());
        for w in &self.witnesses {
            let _ = writeln!(s, "{}", encode_graph6(w));
        }
        s
    }

    pub fn to_json(&self) -> String {
        let doc = SearchResultJson {
            minimal_order: self.minimal_order,
            exhausted: self.exhausted,
            witnesses: self.witnesses.iter().map(encode_graph6).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("search result serializes")
    }
}

/// True iff `g` is connected with radius `r`, diameter `d` and exactly one
/// central vertex.
pub fn is_single_center_witness(g: &Graph, r: u32, d: u32) -> bool {
    metric_profile(g)
        .map(|p| p.radius == r && p.diameter == d && p.center_vertices.len() == 1)
        .unwrap_or(false)
}

pub fn find_single_center_graphs(q: &SearchQuery) -> Result<SearchResult> {
    find_single_center_graphs_in(q, &GraphSource::builtin())
}

pub fn find_single_center_graphs_in(q: &SearchQuery, source: &GraphSource) -> Result<SearchResult> {
    let mut witnesses = Vec::new();
    let mut minimal_order = None;
    // A diameter-d graph has at least d + 1 vertices.
    let first = q.d as usize + 1;
    for n in first..=q.max_order {
        let hits: Vec<Graph> = source
            .connected_graphs(n)?
            .par_iter()
            .filter(|g| is_single_center_witness(g, q.r, q.d))
            .cloned()
            .collect();
        if hits.is_empty() {
            continue;
        }
        minimal_order.get_or_insert(n);
        let keyed = hits.into_iter().map(|g| (invariant_key(&g), g)).collect();
        let hits = dedup_by_isomorphism(keyed);
        match q.mode {
            SearchMode::FirstMinimal => {
                witnesses.extend(hits.into_iter().take(1));
                break;
            }
            SearchMode::AllMinimal => {
                witnesses.extend(hits);
                break;
            }
            SearchMode::AllUpToBound => witnesses.extend(hits),
        }
    }
    Ok(SearchResult {
        minimal_order,
        witnesses,
        exhausted: true,
    })
}

/// One single-center graph found during classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub graph6: String,
    pub r: u32,
    pub d: u32,
    pub order: usize,
    pub d_is_2r: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassificationTable {
    pub rows: Vec<ClassRow>,
    /// Count of single-center graphs per `(r, d, order)`.
    pub cells: BTreeMap<(u32, u32, usize), usize>,
}

impl ClassificationTable {
    /// One line per cell: `r d order d_is_2r count`.
    pub fn cells_text(&self) -> String {
        let mut s = String::from("# r d order d_is_2r count\n");
        for (&(r, d, order), count) in &self.cells {
            let flag = if d == 2 * r { "yes" } else { "no" };
            let _ = writeln!(s, "{r} {d} {order} {flag} {count}");
        }
        s
    }
}

/// Tabulates every single-center connected graph up to `max_order`.
pub fn classify_d_equals_2r(max_order: usize, source: &GraphSource) -> Result<ClassificationTable> {
    if max_order > CLASSIFY_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: max_order,
            limit: CLASSIFY_MAX_ORDER,
        });
    }
    let mut table = ClassificationTable::default();
    for n in 1..=max_order {
        let rows: Vec<ClassRow> = source
            .connected_graphs(n)?
            .par_iter()
            .filter_map(|g| {
                let p = metric_profile(g).ok()?;
                (p.center_vertices.len() == 1).then(|| ClassRow {
                    graph6: encode_graph6(g),
                    r: p.radius,
                    d: p.diameter,
                    order: n,
                    d_is_2r: p.diameter == 2 * p.radius,
                })
            })
            .collect();
        for row in rows {
            *table.cells.entry((row.r, row.d, row.order)).or_default() += 1;
            table.rows.push(row);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| enumerate_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![0, 1, 1, 2, 6, 21]);
        assert!(enumerate_connected_graphs(9).is_err());
    }

    #[test]
    fn enumeration_is_connected_and_ordered() {
        let graphs = enumerate_connected_graphs(5).unwrap();
        assert!(graphs.iter().all(|g| g.is_connected() && g.order() == 5));
        assert_eq!(graphs, generate_level(5).as_slice());
    }

    #[test]
    fn path_is_the_smallest_radius2_diameter4_witness() {
        let q = SearchQuery::new(2, 4, 8, SearchMode::FirstMinimal).unwrap();
        let res = find_single_center_graphs(&q).unwrap();
        assert_eq!(res.minimal_order, Some(5));
        assert_eq!(res.witnesses.len(), 1);
        assert!(are_isomorphic(&res.witnesses[0], &Graph::path(5))
            .unwrap()
            .is_some());
    }

    #[test]
    fn query_validation() {
        assert!(SearchQuery::new(2, 5, 8, SearchMode::FirstMinimal).is_err());
        assert!(SearchQuery::new(2, 4, 11, SearchMode::FirstMinimal).is_err());
    }

    #[test]
    fn orders_past_builtin_need_a_corpus() {
        let q = SearchQuery::new(4, 8, 9, SearchMode::FirstMinimal).unwrap();
        assert!(matches!(
            find_single_center_graphs(&q),
            Err(Error::OrderTooLarge { .. })
        ));
        let source = GraphSource::builtin()
            .with_corpus_text(&encode_graph6(&Graph::path(9)))
            .unwrap();
        let res = find_single_center_graphs_in(&q, &source).unwrap();
        assert_eq!(res.minimal_order, Some(9));
        assert_eq!(res.witnesses, vec![Graph::path(9)]);
    }

    #[test]
    fn result_text() {
        let res = SearchResult {
            minimal_order: Some(5),
            witnesses: vec![Graph::path(5)],
            exhausted: true,
        };
        assert_eq!(
            res.to_text(),
            "minimal_order=5\nexhausted=true\nwitnesses=1\nDhC\n"
        );
        let json: serde_json::Value = serde_json::from_str(&res.to_json()).unwrap();
        assert_eq!(json["witnesses"][0], "DhC");
    }
}
