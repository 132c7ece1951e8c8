//! `gainline`: command-line front end for the gain-graph toolkit.
//!
//! Exit status 0 means a result was computed, including negative verdicts.
//! Any input or validation error exits non-zero.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use gainline::gain::{gain_adjacency, is_balanced, s_laplacian, switching_equivalent, SwitchingFunction};
use gainline::phase::{gain_line, recognize_gain_line};
use gainline::repr::{builtin_representation, fourier};
use gainline::spectral::{gainline_obstruction, DEFAULT_TOL};
use gainline::{
    hermitian_spectrum, io, line_graph, FiniteGroup, GainFunction, Orientation, PhaseContext, RepresentationKind,
    UnitaryRepresentation,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "gainline", version, about = "Gain graphs, G-phases and gain-line graphs over finite groups")]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a group: order, labels, center and central weak involutions.
    Group { file: PathBuf },
    /// Line graph of a graph, with the shared vertex behind each line-edge.
    Line { file: PathBuf },
    /// Gain-line lift of a gain graph, emitted as a gain file on the line graph.
    Gainline {
        file: PathBuf,
        #[command(flatten)]
        inv: Involutions,
        /// `default` (lower to higher vertex), `reversed`, or a JSON file of 1-based arcs.
        #[arg(long, default_value = "default")]
        orientation: String,
    },
    /// Decide a property and print a JSON verdict.
    Check {
        #[command(subcommand)]
        check: Check,
    },
    /// Sorted π-spectrum as CSV (index, eigenvalue, multiplicity_group).
    Spectrum {
        file: PathBuf,
        /// Built-in name (trivial, sign, root_of_unity, q8_2dim, regular) or representation file.
        #[arg(long, default_value = "regular")]
        rep: String,
        #[arg(long, value_enum, default_value_t = MatrixKind::Adjacency)]
        matrix: MatrixKind,
        /// Central weak involution for the Laplacian.
        #[arg(long, default_value = "identity", allow_hyphen_values = true)]
        s: String,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Is the gain graph balanced? Witness: f with ψ^f ≡ 1.
    Balance { file: PathBuf },
    /// Are two gain graphs switching equivalent? Witness: f with ψ₁^f = ψ₂.
    SwitchEquiv { first: PathBuf, second: PathBuf },
    /// Is a gain function on L(Γ) induced by some G-phase of Γ? Witness: the phase.
    Gainline {
        file: PathBuf,
        /// Graph file of the root graph Γ.
        #[arg(long)]
        root: PathBuf,
        #[command(flatten)]
        inv: Involutions,
    },
    /// Spectral necessary conditions for being a gain-line graph.
    Obstruction {
        file: PathBuf,
        /// Repeatable; each representation gets its own verdict.
        #[arg(long, default_values_t = vec!["regular".to_string()])]
        rep: Vec<String>,
        #[arg(long, default_value = "identity", allow_hyphen_values = true)]
        s2: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

#[derive(clap::Args)]
struct Involutions {
    /// Central weak involution s₁, by label.
    #[arg(long, default_value = "identity", allow_hyphen_values = true)]
    s1: String,
    /// Central weak involution s₂, by label.
    #[arg(long, default_value = "identity", allow_hyphen_values = true)]
    s2: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    Adjacency,
    Laplacian,
}

fn read(path: &Path) -> Result<Value> {
    Ok(io::read_json(path)?)
}

fn base(path: &Path) -> Option<&Path> {
    path.parent()
}

fn load_gain(path: &Path) -> Result<GainFunction> {
    io::parse_gain(read(path)?, base(path)).with_context(|| format!("reading gain file {}", path.display()))
}

fn involution(group: &FiniteGroup, label: &str) -> Result<gainline::CentralWeakInvolution> {
    let g = if label == "identity" { group.identity() } else { group.by_label(label)? };
    Ok(group.central_weak_involution(g)?)
}

fn context(group: &FiniteGroup, inv: &Involutions) -> Result<PhaseContext> {
    Ok(PhaseContext {
        s1: involution(group, &inv.s1).context("--s1")?,
        s2: involution(group, &inv.s2).context("--s2")?,
    })
}

/// A built-in name unless a file by that name exists.
fn load_rep(spec: &str, group: &Arc<FiniteGroup>) -> Result<UnitaryRepresentation> {
    let path = Path::new(spec);
    if !path.exists() {
        if let Ok(kind) = spec.parse::<RepresentationKind>() {
            return Ok(builtin_representation(group, kind)?);
        }
    }
    io::parse_representation(read(path)?, base(path), group)
        .with_context(|| format!("reading representation {spec}"))
}

fn switching_labels(group: &FiniteGroup, f: &SwitchingFunction) -> Vec<String> {
    f.values().iter().map(|&x| group.label(x).to_string()).collect()
}

enum Output {
    Json(Value),
    Text(String),
}

fn run(cli: Cli) -> Result<Output> {
    Ok(match cli.command {
        Command::Group { file } => {
            let g = io::parse_group(read(&file)?, base(&file))?;
            let names = |xs: Vec<gainline::GroupElement>| xs.into_iter().map(|x| g.label(x).to_string()).collect::<Vec<_>>();
            Output::Json(json!({
                "name": g.name(),
                "order": g.order(),
                "abelian": g.is_abelian(),
                "labels": g.labels(),
                "center": names(g.center()),
                "central_weak_involutions": names(g.central_weak_involutions().into_iter().map(|s| s.element()).collect()),
            }))
        }
        Command::Line { file } => {
            let graph = io::parse_graph(read(&file)?, base(&file))?;
            let lg = line_graph(&graph);
            let root_edges: Vec<_> = graph.edges().iter().map(|&(a, b)| (a + 1, b + 1)).collect();
            Output::Json(json!({
                "line": io::graph_to_json(&lg.line),
                "vertices_are_edges": root_edges,
                "shared_vertex": lg.shared_vertex.iter().map(|v| v + 1).collect::<Vec<_>>(),
            }))
        }
        Command::Gainline { file, inv, orientation } => {
            let gain = load_gain(&file)?;
            let ctx = context(gain.group(), &inv)?;
            let o = match orientation.as_str() {
                "default" => Orientation::default_for(gain.graph()),
                "reversed" => Orientation::default_for(gain.graph()).reversed(),
                path => {
                    let p = Path::new(path);
                    io::parse_orientation(read(p)?, base(p), gain.graph())?
                }
            };
            Output::Json(io::gain_to_json(&gain_line(&gain, &o, &ctx)?))
        }
        Command::Check { check } => Output::Json(run_check(check)?),
        Command::Spectrum { file, rep, matrix, s } => {
            let gain = load_gain(&file)?;
            let pi = load_rep(&rep, gain.group())?;
            let m = match matrix {
                MatrixKind::Adjacency => gain_adjacency(&gain),
                MatrixKind::Laplacian => s_laplacian(&gain, involution(gain.group(), &s).context("--s")?)?,
            };
            Output::Text(io::spectrum_to_csv(&hermitian_spectrum(&fourier(&m, &pi)?)?))
        }
    })
}

fn run_check(check: Check) -> Result<Value> {
    Ok(match check {
        Check::Balance { file } => {
            let gain = load_gain(&file)?;
            let w = is_balanced(&gain);
            json!({
                "check": "balance",
                "balanced": w.is_some(),
                "witness": w.map(|f| switching_labels(gain.group(), &f)),
            })
        }
        Check::SwitchEquiv { first, second } => {
            let a = load_gain(&first)?;
            let b = load_gain(&second)?;
            if **a.group() != **b.group() {
                bail!("the two gain files use different groups");
            }
            // re-home b onto a's group so the comparison is structural
            let b = GainFunction::new(b.graph().clone(), a.group().clone(), b.forward().to_vec())?;
            let w = switching_equivalent(&a, &b)?;
            json!({
                "check": "switch_equiv",
                "equivalent": w.is_some(),
                "witness": w.map(|f| switching_labels(a.group(), &f)),
            })
        }
        Check::Gainline { file, root, inv } => {
            let zeta = load_gain(&file)?;
            let root = io::parse_graph(read(&root)?, base(&root))?;
            let ctx = context(zeta.group(), &inv)?;
            let found = recognize_gain_line(&zeta, &root, &ctx)?;
            json!({
                "check": "gainline",
                "gain_line": found.is_some(),
                "witness": found.as_ref().map(io::phase_to_json),
            })
        }
        Check::Obstruction { file, rep, s2, tol } => {
            let zeta = load_gain(&file)?;
            let s2 = involution(zeta.group(), &s2).context("--s2")?;
            let verdicts = rep
                .iter()
                .map(|r| {
                    let pi = load_rep(r, zeta.group())?;
                    let v = gainline_obstruction(&zeta, &pi, s2, tol)?;
                    let mut obj = serde_json::to_value(&v)?;
                    obj["representation"] = json!(r);
                    Ok(obj)
                })
                .collect::<Result<Vec<_>>>()?;
            let violated = verdicts.iter().any(|v| !v["violated"].is_null());
            json!({
                "check": "obstruction",
                "s2": zeta.group().label(s2.element()),
                "not_gain_line": violated,
                "verdicts": verdicts,
            })
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    let text = match run(cli) {
        Ok(Output::Json(v)) => io::to_pretty(&v),
        Ok(Output::Text(t)) => t,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    match output {
        Some(path) => {
            if let Err(e) = fs::write(&path, text) {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}
