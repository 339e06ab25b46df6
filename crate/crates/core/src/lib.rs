//! Construction and certification of connected graphs with a prescribed
//! radius, diameter and center.
//!
//! * [`graph`] and [`metric`]: simple graphs and their exact distance metrics.
//! * [`iso`]: isomorphism testing, used to certify `C(G) ≅ H`.
//! * [`constructions`]: the builders.
//! * [`verify`]: independent checks of built graphs.
//! * [`search`]: exhaustive search for small single-center graphs.
//! * [`format`] and [`cli`]: graph6, edge lists, DOT and the command line.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod format;
pub mod graph;
pub mod iso;
pub mod metric;
pub mod search;
pub mod verify;

pub use constructions::{LabeledGraph, Prescription};
pub use error::{Error, FormatError, Result};
pub use graph::{Graph, Vertex};
pub use metric::{all_pairs_distances, metric_profile, DistanceMatrix, EccentricityProfile};
