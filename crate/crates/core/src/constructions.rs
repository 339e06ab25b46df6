//! Builders for graphs with a prescribed radius, diameter and center.
//!
//! Every builder returns a [`LabeledGraph`] that records which vertices the
//! center was installed on. Layouts are deterministic: gadget vertices come
//! first and the copy of `H`, when there is one, occupies the last ids.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::metric::metric_profile;

/// Target radius `r`, diameter `d` and center `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prescription {
    r: u32,
    d: u32,
    h: Graph,
}

impl Prescription {
    pub fn new(r: u32, d: u32, h: Graph) -> Result<Self> {
        check_radius_diameter(r, d)?;
        if h.is_null() {
            return Err(Error::EmptyH);
        }
        Ok(Prescription { r, d, h })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }
}

/// Checks `1 <= r <= d <= 2r`.
pub fn check_radius_diameter(r: u32, d: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::PrescriptionOutOfRange("r must be at least 1".into()));
    }
    if d < r {
        return Err(Error::PrescriptionOutOfRange("d is less than r".into()));
    }
    if d > 2 * r {
        return Err(Error::PrescriptionOutOfRange("d exceeds 2r".into()));
    }
    Ok(())
}

/// Which builder produced a graph, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstructionRecipe {
    /// Hubs `u`, `v` joined to all of `H`, each with a pendant arm of length `t`.
    Hedetniemi { t: u32, u: Vertex, v: Vertex },
    /// Six-cycle gadget with diameter `2r - 1`; `h` is the unique center.
    Fig2 { r: u32, h: Vertex },
    /// Six-cycle gadget with diameter `2r`; `h` is the unique center.
    Fig3 { r: u32, h: Vertex },
    /// The unique central vertex `h` of a graph of order `base_order` was
    /// replaced by a copy of `H`.
    SubstituteCenter { h: Vertex, base_order: usize },
    /// Paths on `t` vertices hung off every vertex of a self-centered `H`
    /// with radius and diameter `z`.
    AttachPaths { t: u32, z: u32 },
    /// Single-center graph with radius `r` and diameter `r + n + 1`.
    SingleCenterTemplate {
        r: u32,
        n: u32,
        h: Vertex,
        family: TemplateFamily,
    },
    /// Template for `(r, d)` with its center `h` replaced by `H`.
    Theorem4 { r: u32, d: u32, n: u32, h: Vertex },
    /// `K_t ∨ Y` with `|V(Y)| = y_order`.
    JoinSolution { t: u32, y_order: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TemplateFamily {
    /// `C_{2r}` with leaves and a long arm at the hub; used when `n >= 1`.
    EvenCycle,
    /// `C_{2r+1}` with one vertex over each far edge; used when `n = 0`.
    OddCycle,
}

/// A built graph plus the vertex set its center should occupy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// Ascending ids of the installed center.
    pub center_image: Vec<Vertex>,
    pub recipe: ConstructionRecipe,
}

impl LabeledGraph {
    /// The designated unique central vertex, for single-center builders.
    pub fn designated_center(&self) -> Option<Vertex> {
        match self.center_image.as_slice() {
            [h] => Some(*h),
            _ => None,
        }
    }
}

fn require_radius_at_least_two(r: u32) -> Result<()> {
    if r < 2 {
        Err(Error::RadiusTooSmall { radius: r })
    } else {
        Ok(())
    }
}

/// Appends a path of `len` fresh vertices hanging off `at`; returns the next
/// free id.
fn hang_path(b: &mut GraphBuilder, at: Vertex, len: usize, next: Vertex) -> Result<Vertex> {
    let mut prev = at;
    for id in next..next + len {
        b.add_edge(prev, id)?;
        prev = id;
    }
    Ok(next + len)
}

/// Two hubs adjacent to every vertex of `H`, each carrying a pendant path of
/// length `r - 1`. Radius `r`, diameter `2r`, center `H`.
///
/// Layout: `u = 0`, `v = 1`, then `u`'s arm, `v`'s arm, then `H`.
pub fn hedetniemi(h: &Graph, r: u32) -> Result<LabeledGraph> {
    if h.is_null() {
        return Err(Error::EmptyH);
    }
    require_radius_at_least_two(r)?;
    let t = (r - 1) as usize;
    let (u, v) = (0, 1);
    let base = 2 + 2 * t;
    let mut b = GraphBuilder::new(base + h.order())?;
    let next = hang_path(&mut b, u, t, 2)?;
    hang_path(&mut b, v, t, next)?;
    for x in 0..h.order() {
        b.add_edge(u, base + x)?;
        b.add_edge(v, base + x)?;
    }
    for (x, y) in h.edges() {
        b.add_edge(base + x, base + y)?;
    }
    Ok(LabeledGraph {
        graph: b.build(),
        center_image: (base..base + h.order()).collect(),
        recipe: ConstructionRecipe::Hedetniemi { t: r - 1, u, v },
    })
}

/// `C_6` on ids `0..6` plus a hub `h = 6` adjacent to ids 0, 2 and 4.
fn hexagon_with_hub() -> Result<GraphBuilder> {
    let mut b = GraphBuilder::new(7)?;
    for i in 0..6 {
        b.add_edge(i, (i + 1) % 6)?;
    }
    for i in [0, 2, 4] {
        b.add_edge(6, i)?;
    }
    Ok(b)
}

/// Single-center graph with radius `r` and diameter `2r - 1`: a hexagon whose
/// alternate vertices meet a hub, with `r - 2` pendant vertices on every
/// hexagon vertex.
pub fn fig2_gadget(r: u32) -> Result<LabeledGraph> {
    require_radius_at_least_two(r)?;
    let arm = (r - 2) as usize;
    let mut b = hexagon_with_hub()?.grow(6 * arm)?;
    let mut next = 7;
    for c in 0..6 {
        next = hang_path(&mut b, c, arm, next)?;
    }
    Ok(LabeledGraph {
        graph: b.build(),
        center_image: vec![6],
        recipe: ConstructionRecipe::Fig2 { r, h: 6 },
    })
}

/// Single-center graph with radius `r` and diameter `2r`: the same hexagon
/// and hub, with arms of length `r - 1` only on the hub's neighbors.
pub fn fig3_gadget(r: u32) -> Result<LabeledGraph> {
    require_radius_at_least_two(r)?;
    let arm = (r - 1) as usize;
    let mut b = hexagon_with_hub()?.grow(3 * arm)?;
    let mut next = 7;
    for c in [0, 2, 4] {
        next = hang_path(&mut b, c, arm, next)?;
    }
    Ok(LabeledGraph {
        graph: b.build(),
        center_image: vec![6],
        recipe: ConstructionRecipe::Fig3 { r, h: 6 },
    })
}

/// Replaces the unique central vertex of `x` by a copy of `h`, joining every
/// vertex of the copy to every former neighbor of the removed vertex.
///
/// Radius and diameter are preserved and the center becomes exactly the
/// copy, provided `rad(x) >= 2`. The remaining vertices of `x` keep their
/// relative order; the copy of `h` takes the last ids.
pub fn substitute_center(x: &Graph, h: &Graph) -> Result<LabeledGraph> {
    if h.is_null() {
        return Err(Error::EmptyH);
    }
    if x.order() <= 1 {
        return Err(Error::RadiusTooSmall { radius: 0 });
    }
    let profile = metric_profile(x)?;
    let hub = profile.unique_center().ok_or(Error::NotSingleCenter {
        count: profile.center_vertices.len(),
    })?;
    if profile.radius < 2 {
        return Err(Error::RadiusTooSmall {
            radius: profile.radius,
        });
    }

    let shift = |v: Vertex| if v > hub { v - 1 } else { v };
    let base = x.order() - 1;
    let mut b = GraphBuilder::new(base + h.order())?;
    for (u, v) in x.edges().filter(|&(u, v)| u != hub && v != hub) {
        b.add_edge(shift(u), shift(v))?;
    }
    for &w in x.neighbors(hub) {
        for y in 0..h.order() {
            b.add_edge(shift(w), base + y)?;
        }
    }
    for (p, q) in h.edges() {
        b.add_edge(base + p, base + q)?;
    }
    Ok(LabeledGraph {
        graph: b.build(),
        center_image: (base..base + h.order()).collect(),
        recipe: ConstructionRecipe::SubstituteCenter {
            h: hub,
            base_order: x.order(),
        },
    })
}

/// Hangs a path on `t` vertices off every vertex of a connected
/// self-centered `h` (each vertex of `h` is an end of its path).
///
/// With `z = rad(h) = diam(h)` the result has radius `z + t - 1`, diameter
/// `2(t - 1) + z` and center `h`. Layout: path vertices first, grouped by
/// the vertex of `h` they hang from, then `h` itself.
pub fn attach_paths_uniform(h: &Graph, t: u32) -> Result<LabeledGraph> {
    if h.is_null() {
        return Err(Error::EmptyH);
    }
    if t == 0 {
        return Err(Error::PrescriptionOutOfRange(
            "path order t must be at least 1".into(),
        ));
    }
    let profile = metric_profile(h)?;
    if !profile.is_self_centered() {
        return Err(Error::NotSelfCentered {
            radius: profile.radius,
            diameter: profile.diameter,
        });
    }
    let arm = (t - 1) as usize;
    let base = arm * h.order();
    let mut b = GraphBuilder::new(base + h.order())?;
    for (p, q) in h.edges() {
        b.add_edge(base + p, base + q)?;
    }
    for v in 0..h.order() {
        let first = v * arm;
        if arm > 0 {
            b.add_edge(base + v, first)?;
        }
        for k in 1..arm {
            b.add_edge(first + k - 1, first + k)?;
        }
    }
    Ok(LabeledGraph {
        graph: b.build(),
        center_image: (base..base + h.order()).collect(),
        recipe: ConstructionRecipe::AttachPaths {
            t,
            z: profile.radius,
        },
    })
}

/// Path attachment tuned to radius `r`: uses `t = r - z + 1`, which gives
/// diameter `2r - z`.
pub fn attach_paths_for_radius(h: &Graph, r: u32) -> Result<LabeledGraph> {
    let profile = metric_profile(h)?;
    if r < profile.radius {
        return Err(Error::PrescriptionOutOfRange(format!(
            "r = {r} is below the radius {} of H",
            profile.radius
        )));
    }
    attach_paths_uniform(h, r - profile.radius + 1)
}

/// Connected graph with unique central vertex `h = 0`, radius `r` and
/// diameter `d`, for `r >= 2` and `r < d <= 2r`.
///
/// With `n = d - r - 1`:
/// * `n >= 1`: a cycle `C_{2r}` on ids `0..2r`, a pendant leaf on every
///   cycle vertex other than `0` and its antipode `r`, and a pendant path of
///   length `n + 1` at vertex 0.
/// * `n = 0`: a cycle `C_{2r+1}`, and for each `k = 1..=2r` one vertex
///   adjacent to both antipodes `k + r` and `k + r + 1` of cycle vertex `k`.
pub fn single_center_template(r: u32, d: u32) -> Result<LabeledGraph> {
    if r < 2 || d <= r || d > 2 * r {
        return Err(Error::PrescriptionOutOfRange(format!(
            "single-center template needs r >= 2 and r < d <= 2r, got r = {r}, d = {d}"
        )));
    }
    let n = d - r - 1;
    let rr = r as usize;
    let (graph, family) = if n == 0 {
        let m = 2 * rr + 1;
        let mut b = GraphBuilder::new(m + 2 * rr)?;
        for i in 0..m {
            b.add_edge(i, (i + 1) % m)?;
        }
        for k in 1..=2 * rr {
            let x = m + k - 1;
            b.add_edge(x, (k + rr) % m)?;
            b.add_edge(x, (k + rr + 1) % m)?;
        }
        (b.build(), TemplateFamily::OddCycle)
    } else {
        let m = 2 * rr;
        let leaves = m - 2;
        let arm = n as usize + 1;
        let mut b = GraphBuilder::new(m + leaves + arm)?;
        for i in 0..m {
            b.add_edge(i, (i + 1) % m)?;
        }
        let mut next = m;
        for c in (1..m).filter(|&c| c != rr) {
            b.add_edge(c, next)?;
            next += 1;
        }
        hang_path(&mut b, 0, arm, next)?;
        (b.build(), TemplateFamily::EvenCycle)
    };
    Ok(LabeledGraph {
        graph,
        center_image: vec![0],
        recipe: ConstructionRecipe::SingleCenterTemplate { r, n, h: 0, family },
    })
}

/// Radius `r`, diameter `d` and center `H` for any `r >= 2`, `r < d <= 2r`
/// and nonempty `H`: the single-center template with its hub replaced by `H`.
pub fn theorem4_build(p: &Prescription) -> Result<LabeledGraph> {
    let template = single_center_template(p.r, p.d)?;
    let hub = template
        .designated_center()
        .expect("template has a designated center");
    let mut out = substitute_center(&template.graph, &p.h)?;
    out.recipe = ConstructionRecipe::Theorem4 {
        r: p.r,
        d: p.d,
        n: p.d - p.r - 1,
        h: hub,
    };
    Ok(out)
}

/// `K_t ∨ Y`, which has radius 1, diameter 2 and center `K_t` whenever no
/// vertex of `Y` is adjacent to all the others. `Y` takes ids `0..|Y|`.
pub fn join_solution(t: u32, y: &Graph) -> Result<LabeledGraph> {
    if t == 0 {
        return Err(Error::PrescriptionOutOfRange(
            "clique size t must be at least 1".into(),
        ));
    }
    if let Some(vertex) = (0..y.order()).find(|&v| y.degree(v) + 1 >= y.order()) {
        return Err(Error::UniversalVertexInY { vertex });
    }
    if y.order() < 2 {
        return Err(Error::PrescriptionOutOfRange(
            "Y needs at least two vertices".into(),
        ));
    }
    let graph = Graph::join(y, &Graph::complete(t as usize))?;
    Ok(LabeledGraph {
        center_image: (y.order()..graph.order()).collect(),
        graph,
        recipe: ConstructionRecipe::JoinSolution {
            t,
            y_order: y.order(),
        },
    })
}
