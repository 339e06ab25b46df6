//! Command-line front end.
//!
//! Exit codes: 0 on success or a passing verification, 1 when a verification
//! fails, 2 on usage, parse or construction errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::constructions::{
    attach_paths_for_radius, attach_paths_uniform, fig2_gadget, fig3_gadget, hedetniemi,
    join_solution, single_center_template, theorem4_build, ConstructionRecipe, LabeledGraph,
    Prescription,
};
use crate::error::Error;
use crate::format::{emit_graph_output, parse_graph_input, GraphFormat, InputFormat};
use crate::graph::{Graph, Vertex};
use crate::metric::metric_profile;
use crate::search::{
    classify_d_equals_2r, find_single_center_graphs_in, GraphSource, SearchMode, SearchQuery,
};
use crate::verify::verify_prescription;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "centerkit",
    version,
    about = "Build and certify graphs with a prescribed radius, diameter and center"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Hedetniemi,
    Fig2,
    Fig3,
    Prop2,
    Lemma3,
    Theorem4,
    Join,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph and write it with a recipe sidecar (`OUT.recipe.json`).
    Build {
        #[arg(long, value_enum)]
        construction: Construction,
        #[arg(long = "r")]
        r: Option<u32>,
        #[arg(long = "d")]
        d: Option<u32>,
        /// Path order for prop2, clique size for join.
        #[arg(long = "t")]
        t: Option<u32>,
        /// The center graph H (Y for join). Defaults to K_1.
        #[arg(long = "h")]
        h: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Print radius, diameter and central vertices.
    Analyze {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check a graph against radius, diameter and center targets.
    Verify {
        #[arg(long = "r")]
        r: u32,
        #[arg(long = "d")]
        d: u32,
        #[arg(long = "h")]
        h: PathBuf,
        /// Recipe sidecar; defaults to `INPUT.recipe.json` when present.
        #[arg(long)]
        recipe: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        input: PathBuf,
    },
    /// Exhaustive search for single-center graphs.
    Search {
        #[arg(long = "r", required_unless_present = "classify")]
        r: Option<u32>,
        #[arg(long = "d", required_unless_present = "classify")]
        d: Option<u32>,
        #[arg(long = "max-order")]
        max_order: usize,
        #[arg(long, value_enum, default_value = "first-minimal")]
        mode: SearchMode,
        /// graph6 file supplying connected graphs of order 9 and 10.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Tabulate every single-center graph by (r, d, order) instead.
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Transcode a graph between formats.
    Convert {
        #[arg(long, value_enum)]
        to: GraphFormat,
        input: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
}

/// Contents of the recipe sidecar written next to every built graph.
#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RecipeSidecar {
    pub recipe: ConstructionRecipe,
    pub order: usize,
    pub center_image: Vec<Vertex>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, stdout: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        Command::Build {
            construction,
            r,
            d,
            t,
            h,
            format,
            out,
        } => {
            let h = match h {
                Some(path) => read_graph(&path)?,
                None => Graph::complete(1),
            };
            let built = build(construction, r, d, t, &h)?;
            let format = format.unwrap_or_else(|| format_for_path(&out));
            write_file(&out, &emit_graph_output(&built.graph, format))?;
            let sidecar = RecipeSidecar {
                recipe: built.recipe,
                order: built.graph.order(),
                center_image: built.center_image,
            };
            let json = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");
            write_file(&sidecar_path(&out), &(json + "\n"))?;
            Ok(EXIT_OK)
        }
        Command::Analyze { input, json } => {
            let g = read_graph(&input)?;
            let p = metric_profile(&g)?;
            let text = if json {
                let doc = serde_json::json!({
                    "radius": p.radius,
                    "diameter": p.diameter,
                    "center_vertices": p.center_vertices,
                });
                serde_json::to_string_pretty(&doc).expect("json") + "\n"
            } else {
                let ids: Vec<String> = p.center_vertices.iter().map(ToString::to_string).collect();
                format!(
                    "radius={} diameter={} center=[{}]\n",
                    p.radius,
                    p.diameter,
                    ids.join(",")
                )
            };
            emit(stdout, &text)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            r,
            d,
            h,
            recipe,
            json,
            input,
        } => {
            let g = read_graph(&input)?;
            let p = Prescription::new(r, d, read_graph(&h)?)?;
            let sidecar_file = recipe.or_else(|| Some(sidecar_path(&input)).filter(|p| p.exists()));
            let image = match sidecar_file {
                Some(path) => {
                    let text = fs::read_to_string(&path).map_err(|e| {
                        CliError::Usage(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let sidecar: RecipeSidecar = serde_json::from_str(&text).map_err(|e| {
                        CliError::Usage(format!("bad recipe {}: {e}", path.display()))
                    })?;
                    Some(sidecar.center_image)
                }
                None => None,
            };
            let report = verify_prescription(&g, &p, image.as_deref())?;
            let text = if json {
                report.to_json() + "\n"
            } else {
                report.to_key_value()
            };
            emit(stdout, &text)?;
            Ok(if report.pass { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Search {
            r,
            d,
            max_order,
            mode,
            corpus,
            classify,
            json,
        } => {
            let mut source = GraphSource::builtin();
            if let Some(path) = corpus {
                source = source.with_corpus_file(&path)?;
            }
            if classify {
                let table = classify_d_equals_2r(max_order, &source)?;
                let text = if json {
                    serde_json::to_string_pretty(&table.rows).expect("json") + "\n"
                } else {
                    table.cells_text()
                };
                emit(stdout, &text)?;
                return Ok(EXIT_OK);
            }
            let (r, d) = r
                .zip(d)
                .ok_or_else(|| CliError::Usage("--r and --d are required".into()))?;
            let q = SearchQuery::new(r, d, max_order, mode)?;
            let res = find_single_center_graphs_in(&q, &source)?;
            let text = if json {
                res.to_json() + "\n"
            } else {
                res.to_text()
            };
            emit(stdout, &text)?;
            Ok(EXIT_OK)
        }
        Command::Convert { to, input, out } => {
            let g = read_graph(&input)?;
            let text = emit_graph_output(&g, to);
            match out {
                Some(path) => write_file(&path, &text)?,
                None => emit(stdout, &text)?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn require(value: Option<u32>, flag: &str, construction: &str) -> CliResult<u32> {
    value.ok_or_else(|| CliError::Usage(format!("{construction} needs {flag}")))
}

/// `d` when given must equal the diameter the construction produces.
fn check_d(d: Option<u32>, produced: u32, what: &str) -> CliResult<()> {
    match d {
        Some(d) if d != produced => Err(CliError::Usage(format!(
            "{what} has diameter {produced}, not the requested {d}"
        ))),
        _ => Ok(()),
    }
}

fn build(
    kind: Construction,
    r: Option<u32>,
    d: Option<u32>,
    t: Option<u32>,
    h: &Graph,
) -> CliResult<LabeledGraph> {
    let built = match kind {
        Construction::Hedetniemi => {
            let r = require(r, "--r", "hedetniemi")?;
            let g = hedetniemi(h, r)?;
            check_d(d, 2 * r, "the hedetniemi construction")?;
            g
        }
        Construction::Fig2 => {
            let r = require(r, "--r", "fig2")?;
            let g = fig2_gadget(r)?;
            check_d(d, 2 * r - 1, "the fig2 gadget")?;
            g
        }
        Construction::Fig3 => {
            let r = require(r, "--r", "fig3")?;
            let g = fig3_gadget(r)?;
            check_d(d, 2 * r, "the fig3 gadget")?;
            g
        }
        Construction::Prop2 => {
            let g = match (t, r) {
                (Some(t), _) => attach_paths_uniform(h, t)?,
                (None, Some(r)) => attach_paths_for_radius(h, r)?,
                (None, None) => return Err(CliError::Usage("prop2 needs --t or --r".into())),
            };
            let ConstructionRecipe::AttachPaths { t, z } = g.recipe else {
                unreachable!("attach_paths builds an AttachPaths recipe")
            };
            if let Some(r) = r {
                if r != z + t - 1 {
                    return Err(CliError::Usage(format!(
                        "path attachment gives radius {}, not {r}",
                        z + t - 1
                    )));
                }
            }
            check_d(d, 2 * (t - 1) + z, "the path attachment")?;
            g
        }
        Construction::Lemma3 => {
            let r = require(r, "--r", "lemma3")?;
            let d = require(d, "--d", "lemma3")?;
            crate::constructions::check_radius_diameter(r, d)?;
            single_center_template(r, d)?
        }
        Construction::Theorem4 => {
            let r = require(r, "--r", "theorem4")?;
            let d = require(d, "--d", "theorem4")?;
            theorem4_build(&Prescription::new(r, d, h.clone())?)?
        }
        Construction::Join => {
            let t = require(t, "--t", "join")?;
            if r.is_some_and(|r| r != 1) {
                return Err(CliError::Usage("join solutions have radius 1".into()));
            }
            check_d(d, 2, "a join solution")?;
            join_solution(t, h)?
        }
    };
    Ok(built)
}

fn read_graph(path: &Path) -> CliResult<Graph> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_graph_input(&bytes, InputFormat::detect(&bytes))?)
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn emit(stdout: &mut dyn Write, text: &str) -> CliResult<()> {
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Usage(format!("cannot write output: {e}")))
}

pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".recipe.json");
    PathBuf::from(name)
}

/// Output format implied by a file extension; graph6 unless it says otherwise.
pub fn format_for_path(path: &Path) -> GraphFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("dot" | "gv") => GraphFormat::Dot,
        Some("el" | "edges" | "txt") => GraphFormat::Edgelist,
        _ => GraphFormat::Graph6,
    }
}
