//! Certification of built graphs against their targets.

use std::fmt::Write as _;

use serde::Serialize;

use crate::constructions::Prescription;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::iso::are_isomorphic;
use crate::metric::{all_pairs_distances, metric_profile, DistanceMatrix, EccentricityProfile};

/// Largest order accepted by [`oracle_crosscheck`].
pub const CROSSCHECK_LIMIT: usize = 12;

/// Outcome of a verification, with both the found values and the targets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "radius")]
    pub radius_found: u32,
    #[serde(rename = "diameter")]
    pub diameter_found: u32,
    pub center_vertices: Vec<Vertex>,
    pub center_order: usize,
    pub expected_radius: u32,
    pub expected_diameter: u32,
    /// `None` when no center comparison was requested.
    pub center_iso_ok: Option<bool>,
    /// `None` when no exact center set was supplied.
    pub center_image_ok: Option<bool>,
    pub unique_center: bool,
    pub pass: bool,
    pub failure_reason: Option<String>,
}

impl VerificationReport {
    fn new(profile: &EccentricityProfile, r: u32, d: u32) -> Self {
        VerificationReport {
            radius_found: profile.radius,
            diameter_found: profile.diameter,
            center_vertices: profile.center_vertices.clone(),
            center_order: profile.center_vertices.len(),
            expected_radius: r,
            expected_diameter: d,
            center_iso_ok: None,
            center_image_ok: None,
            unique_center: profile.center_vertices.len() == 1,
            pass: true,
            failure_reason: None,
        }
    }

    /// Records a failed check. The first failure wins the reason slot; later
    /// ones are appended.
    fn fail(&mut self, why: impl Into<String>) {
        let why = why.into();
        self.pass = false;
        match &mut self.failure_reason {
            Some(reason) => {
                reason.push_str("; ");
                reason.push_str(&why);
            }
            None => self.failure_reason = Some(why),
        }
    }

    fn check_metrics(&mut self) {
        if self.radius_found != self.expected_radius {
            self.fail(format!(
                "radius {} != expected {}",
                self.radius_found, self.expected_radius
            ));
        }
        if self.diameter_found != self.expected_diameter {
            self.fail(format!(
                "diameter {} != expected {}",
                self.diameter_found, self.expected_diameter
            ));
        }
    }

    /// One `key=value` pair per line.
    pub fn to_key_value(&self) -> String {
        let opt = |b: Option<bool>| b.map_or("unchecked".to_string(), |b| b.to_string());
        let list = |vs: &[Vertex]| {
            let items: Vec<String> = vs.iter().map(ToString::to_string).collect();
            format!("[{}]", items.join(","))
        };
        let mut out = String::new();
        let _ = writeln!(out, "pass={}", self.pass);
        let _ = writeln!(out, "radius={}", self.radius_found);
        let _ = writeln!(out, "diameter={}", self.diameter_found);
        let _ = writeln!(out, "expected_radius={}", self.expected_radius);
        let _ = writeln!(out, "expected_diameter={}", self.expected_diameter);
        let _ = writeln!(out, "center_vertices={}", list(&self.center_vertices));
        let _ = writeln!(out, "center_order={}", self.center_order);
        let _ = writeln!(out, "unique_center={}", self.unique_center);
        let _ = writeln!(out, "center_iso_ok={}", opt(self.center_iso_ok));
        let _ = writeln!(out, "center_image_ok={}", opt(self.center_image_ok));
        let _ = writeln!(
            out,
            "failure_reason={}",
            self.failure_reason.as_deref().unwrap_or("")
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Checks `rad(g) = r`, `diam(g) = d` and `C(g) ≅ H`; when
/// `expected_center_image` is given, also that the central vertices are
/// exactly that set.
pub fn verify_prescription(
    g: &Graph,
    p: &Prescription,
    expected_center_image: Option<&[Vertex]>,
) -> Result<VerificationReport> {
    let profile = metric_profile(g)?;
    let mut report = VerificationReport::new(&profile, p.r(), p.d());
    report.check_metrics();

    let (center, _) = g.induced_subgraph(&profile.center_vertices)?;
    let iso_ok = are_isomorphic(&center, p.h())?.is_some();
    report.center_iso_ok = Some(iso_ok);
    if !iso_ok {
        report.fail(format!(
            "center (order {}, size {}) is not isomorphic to H (order {}, size {})",
            center.order(),
            center.size(),
            p.h().order(),
            p.h().size()
        ));
    }

    if let Some(expected) = expected_center_image {
        let mut want = expected.to_vec();
        want.sort_unstable();
        want.dedup();
        let ok = want == profile.center_vertices;
        report.center_image_ok = Some(ok);
        if !ok {
            report.fail(format!(
                "central vertices {:?} differ from installed image {:?}",
                profile.center_vertices, want
            ));
        }
    }
    Ok(report)
}

/// Checks that `h` is the unique central vertex, with `ecc(h) = r`, every
/// other eccentricity above `r`, and diameter `d`.
pub fn verify_single_center(g: &Graph, r: u32, d: u32, h: Vertex) -> Result<VerificationReport> {
    if h >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: h,
            order: g.order(),
        });
    }
    let profile = metric_profile(g)?;
    let mut report = VerificationReport::new(&profile, r, d);
    if profile.ecc[h] != r {
        report.fail(format!("ecc({h}) = {} != expected {r}", profile.ecc[h]));
    }
    let rivals: Vec<Vertex> = (0..g.order())
        .filter(|&v| v != h && profile.ecc[v] <= r)
        .collect();
    if !rivals.is_empty() {
        report.fail(format!("vertices {rivals:?} also have eccentricity <= {r}"));
    }
    if profile.diameter != d {
        report.fail(format!("diameter {} != expected {d}", profile.diameter));
    }
    Ok(report)
}

/// A split of `G` as `K_t ∨ Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinDecomposition {
    pub t: usize,
    pub clique: Vec<Vertex>,
    pub y_vertices: Vec<Vertex>,
    pub y: Graph,
}

/// Splits `g` into its universal vertices (the `K_t` part) and the rest `Y`,
/// and accepts the split only if `t >= 1`, `Y` is nonempty, no vertex of `Y`
/// is universal, and `C(g) ≅ K_t`. Uses no radius or diameter information.
pub fn decompose_join(g: &Graph) -> Result<Option<JoinDecomposition>> {
    let n = g.order();
    let (clique, y_vertices): (Vec<Vertex>, Vec<Vertex>) =
        (0..n).partition(|&v| g.degree(v) + 1 == n);
    if clique.is_empty() || y_vertices.is_empty() {
        return Ok(None);
    }
    let (y, _) = g.induced_subgraph(&y_vertices)?;
    // Every vertex of Y sees the whole clique, so universality in G is
    // universality within Y.
    if (0..y.order()).any(|v| y.degree(v) + 1 >= y.order()) {
        return Ok(None);
    }
    let (c, _) = crate::metric::center(g)?;
    if are_isomorphic(&c, &Graph::complete(clique.len()))?.is_none() {
        return Ok(None);
    }
    Ok(Some(JoinDecomposition {
        t: clique.len(),
        clique,
        y_vertices,
        y,
    }))
}

/// For `rad(g) = 1` and `diam(g) = 2`, returns the `K_t ∨ Y` split;
/// otherwise nothing.
pub fn check_join_characterization(g: &Graph) -> Result<Option<JoinDecomposition>> {
    let profile = metric_profile(g)?;
    if profile.radius != 1 || profile.diameter != 2 {
        return Ok(None);
    }
    decompose_join(g)
}

pub fn is_self_centered(g: &Graph) -> Result<bool> {
    Ok(metric_profile(g)?.is_self_centered())
}

/// All-pairs distances by min-plus squaring of the adjacency matrix until
/// it stops changing. Shares no code with the BFS engine.
pub fn relaxation_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d: Vec<Vec<Option<u32>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i == j, g.has_edge(i, j)) {
                    (true, _) => Some(0),
                    (false, true) => Some(1),
                    (false, false) => None,
                })
                .collect()
        })
        .collect();
    loop {
        let mut next = d.clone();
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                for (k, via) in d.iter().enumerate() {
                    if let (Some(a), Some(b)) = (d[i][k], via[j]) {
                        if next[i][j].is_none_or(|cur| a + b < cur) {
                            next[i][j] = Some(a + b);
                            changed = true;
                        }
                    }
                }
            }
        }
        d = next;
        if !changed {
            return DistanceMatrix::from_rows(d);
        }
    }
}

/// Compares the BFS distance engine with [`relaxation_distances`].
pub fn oracle_crosscheck(g: &Graph) -> Result<bool> {
    if g.order() > CROSSCHECK_LIMIT {
        return Err(Error::OrderTooLarge {
            order: g.order(),
            limit: CROSSCHECK_LIMIT,
        });
    }
    Ok(all_pairs_distances(g) == relaxation_distances(g))
}
