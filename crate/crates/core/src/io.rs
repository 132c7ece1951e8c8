//! JSON and CSV file formats.
//!
//! * group: a [`GroupSpec`], e.g. `{"family": "quaternion8"}`;
//! * graph: `{"n": 4, "edges": [[1, 2], [2, 3]]}` with 1-based vertices;
//! * gain: `{"graph": …, "group": …, "gains": ["-i", …]}` where `gains[k]`
//!   is the gain from the first to the second listed endpoint of edge `k`;
//! * phase: `{"graph": …, "group": …, "phase": [["-i", "0", …], …]}`, an
//!   `n × m` grid of labels with `"0"` at non-incident positions;
//! * representation: `{"degree": 2, "images": {"i": [[[re, im], …], …], …},
//!   "irreducible": true}`.
//!
//! Nested `graph` and `group` values may be inline objects or paths, resolved
//! against the directory of the enclosing file.
//!
//! Incident positions of a phase grid are always read as labels, so `"0"`
//! there is the identity of `Zn`; elsewhere it must be the structural zero.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::eigen::Spectrum;
use crate::error::{Error, Result};
use crate::gain::GainFunction;
use crate::graph::{Orientation, SimpleGraph};
use crate::group::{normalize_label, FiniteGroup, GroupElement, GroupSpec};
use crate::phase::GPhase;
use crate::repr::{CMatrix, UnitaryRepresentation};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn from_value<T: for<'de> Deserialize<'de>>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| parse_err(format!("{what}: {e}")))
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| parse_err(format!("{}: {e}", path.display())))
}

pub fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize") + "\n"
}

/// Follows a string value as a path relative to `base`.
fn resolve(v: Value, base: Option<&Path>) -> Result<(Value, Option<PathBuf>)> {
    match v {
        Value::String(p) => {
            let path = match base {
                Some(dir) => dir.join(&p),
                None => PathBuf::from(&p),
            };
            let dir = path.parent().map(Path::to_path_buf);
            Ok((read_json(&path)?, dir))
        }
        other => Ok((other, base.map(Path::to_path_buf))),
    }
}

fn take(obj: &mut Value, key: &str, what: &str) -> Result<Value> {
    obj.get_mut(key)
        .map(Value::take)
        .ok_or_else(|| parse_err(format!("{what}: missing field {key:?}")))
}

// ---- group ----

pub fn parse_group(v: Value, base: Option<&Path>) -> Result<Arc<FiniteGroup>> {
    let (v, _) = resolve(v, base)?;
    let spec: GroupSpec = from_value(v, "group")?;
    Ok(Arc::new(FiniteGroup::build(&spec)?))
}

pub fn group_to_json(group: &FiniteGroup) -> Value {
    serde_json::to_value(group.spec()).expect("spec serializes")
}

// ---- graph ----

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// A graph plus its edge pairs exactly as listed (0-based).
pub type ListedGraph = (Arc<SimpleGraph>, Vec<(usize, usize)>);

/// The listing fixes the direction in which gain labels are read.
pub fn parse_graph_listed(v: Value, base: Option<&Path>) -> Result<ListedGraph> {
    let (v, _) = resolve(v, base)?;
    let file: GraphFile = from_value(v, "graph")?;
    let graph = SimpleGraph::from_one_based(file.n, &file.edges)?;
    let listed = file.edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Ok((Arc::new(graph), listed))
}

pub fn parse_graph(v: Value, base: Option<&Path>) -> Result<Arc<SimpleGraph>> {
    parse_graph_listed(v, base).map(|(g, _)| g)
}

pub fn graph_to_json(graph: &SimpleGraph) -> Value {
    let edges: Vec<_> = graph.edges().iter().map(|&(a, b)| (a + 1, b + 1)).collect();
    json!({ "n": graph.vertex_count(), "edges": edges })
}

// ---- gain ----

pub fn parse_gain(v: Value, base: Option<&Path>) -> Result<GainFunction> {
    let (mut obj, base) = resolve(v, base)?;
    let base = base.as_deref();
    let (graph, listed) = parse_graph_listed(take(&mut obj, "graph", "gain")?, base)?;
    let group = parse_group(take(&mut obj, "group", "gain")?, base)?;
    let labels: Vec<String> = from_value(take(&mut obj, "gains", "gain")?, "gain.gains")?;
    if labels.len() != graph.edge_count() {
        return Err(parse_err(format!(
            "gain: {} labels for {} edges",
            labels.len(),
            graph.edge_count()
        )));
    }
    let forward = labels
        .iter()
        .zip(&listed)
        .map(|(label, &(u, v))| {
            let g = group.by_label(label)?;
            Ok(if u < v { g } else { group.inv(g) })
        })
        .collect::<Result<Vec<_>>>()?;
    GainFunction::new(graph, group, forward)
}

pub fn gain_to_json(gain: &GainFunction) -> Value {
    json!({
        "graph": graph_to_json(gain.graph()),
        "group": group_to_json(gain.group()),
        "gains": gain.labels(),
    })
}

// ---- phase ----

pub fn parse_phase(v: Value, base: Option<&Path>) -> Result<GPhase> {
    let (mut obj, base) = resolve(v, base)?;
    let base = base.as_deref();
    let graph = parse_graph(take(&mut obj, "graph", "phase")?, base)?;
    let group = parse_group(take(&mut obj, "group", "phase")?, base)?;
    let grid: Vec<Vec<String>> = from_value(take(&mut obj, "phase", "phase")?, "phase.phase")?;
    let (n, m) = (graph.vertex_count(), graph.edge_count());
    if grid.len() != n || grid.iter().any(|row| row.len() != m) {
        return Err(Error::InvalidPhase(format!("phase grid must be {n}x{m}")));
    }
    let mut columns = Vec::with_capacity(m);
    for (k, &(a, b)) in graph.edges().iter().enumerate() {
        for (i, row) in grid.iter().enumerate() {
            if i != a && i != b && normalize_label(&row[k]) != "0" {
                return Err(Error::InvalidPhase(format!(
                    "entry ({}, {}) must be 0: vertex is not on the edge",
                    i + 1,
                    k + 1
                )));
            }
        }
        columns.push([group.by_label(&grid[a][k])?, group.by_label(&grid[b][k])?]);
    }
    GPhase::new(graph, group, columns)
}

pub fn phase_to_json(h: &GPhase) -> Value {
    let g = h.group();
    let grid: Vec<Vec<String>> = (0..h.graph().vertex_count())
        .map(|i| {
            (0..h.graph().edge_count())
                .map(|k| h.entry(i, k).map_or_else(|| "0".to_string(), |x| g.label(x).to_string()))
                .collect()
        })
        .collect();
    json!({
        "graph": graph_to_json(h.graph()),
        "group": group_to_json(g),
        "phase": grid,
    })
}

// ---- representation ----

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationFile {
    degree: usize,
    images: BTreeMap<String, Vec<Vec<[f64; 2]>>>,
    #[serde(default)]
    irreducible: bool,
}

/// Reads a representation of `group`; every element needs an image.
pub fn parse_representation(v: Value, base: Option<&Path>, group: &Arc<FiniteGroup>) -> Result<UnitaryRepresentation> {
    let (v, _) = resolve(v, base)?;
    let file: RepresentationFile = from_value(v, "representation")?;
    let k = file.degree;
    let mut images: Vec<Option<CMatrix>> = vec![None; group.order()];
    for (label, rows) in &file.images {
        let g = group.by_label(label)?;
        if rows.len() != k || rows.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidRepresentation(format!("image of {label} is not {k}x{k}")));
        }
        let m = CMatrix::from_fn(k, k, |r, c| Complex64::new(rows[r][c][0], rows[r][c][1]));
        if images[g.index()].replace(m).is_some() {
            return Err(Error::InvalidRepresentation(format!("duplicate image for {label}")));
        }
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            m.ok_or_else(|| {
                Error::InvalidRepresentation(format!(
                    "missing image for {}",
                    group.label(GroupElement::from_index(i))
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    UnitaryRepresentation::new(group.clone(), images, file.irreducible)
}

pub fn representation_to_json(pi: &UnitaryRepresentation) -> Value {
    let group = pi.group();
    let images: BTreeMap<String, Vec<Vec<[f64; 2]>>> = group
        .elements()
        .map(|g| {
            let m = pi.image(g);
            let rows = (0..m.nrows())
                .map(|r| (0..m.ncols()).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect())
                .collect();
            (group.label(g).to_string(), rows)
        })
        .collect();
    serde_json::to_value(RepresentationFile {
        degree: pi.degree(),
        images,
        irreducible: pi.is_irreducible(),
    })
    .expect("representation serializes")
}

// ---- orientation ----

/// A list of 1-based `[tail, head]` arcs, one per edge in edge order.
pub fn parse_orientation(v: Value, base: Option<&Path>, graph: &SimpleGraph) -> Result<Orientation> {
    let (v, _) = resolve(v, base)?;
    let arcs: Vec<(usize, usize)> = from_value(v, "orientation")?;
    let arcs = arcs
        .into_iter()
        .map(|(t, h)| match (t.checked_sub(1), h.checked_sub(1)) {
            (Some(t), Some(h)) => Ok((t, h)),
            _ => Err(parse_err("orientation: vertex labels are 1-based")),
        })
        .collect::<Result<Vec<_>>>()?;
    Orientation::new(graph, arcs)
}

pub fn orientation_to_json(o: &Orientation) -> Value {
    let arcs: Vec<_> = o.arcs().iter().map(|&(t, h)| (t + 1, h + 1)).collect();
    json!(arcs)
}

// ---- spectrum CSV ----

/// Consecutive eigenvalues closer than this share a multiplicity group.
pub const MULTIPLICITY_TOL: f64 = 1e-8;

#[derive(Serialize, Deserialize)]
struct SpectrumRow {
    index: usize,
    eigenvalue: f64,
    multiplicity_group: usize,
}

pub fn spectrum_to_csv(spectrum: &Spectrum) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let groups = spectrum.multiplicity_groups(MULTIPLICITY_TOL);
    if spectrum.is_empty() {
        w.write_record(["index", "eigenvalue", "multiplicity_group"]).expect("in-memory write");
    }
    for (index, (&eigenvalue, multiplicity_group)) in spectrum.eigenvalues.iter().zip(groups).enumerate() {
        w.serialize(SpectrumRow {
            index,
            eigenvalue,
            multiplicity_group,
        })
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}

pub fn parse_spectrum_csv(text: &str) -> Result<Spectrum> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let headers = r.headers().map_err(|e| parse_err(format!("spectrum: {e}")))?;
    if headers != vec!["index", "eigenvalue", "multiplicity_group"] {
        return Err(parse_err("spectrum: unexpected header"));
    }
    let mut eigenvalues = Vec::new();
    for (i, row) in r.deserialize::<SpectrumRow>().enumerate() {
        let row = row.map_err(|e| parse_err(format!("spectrum: {e}")))?;
        if row.index != i {
            return Err(parse_err(format!("spectrum: row {i} has index {}", row.index)));
        }
        eigenvalues.push(row.eigenvalue);
    }
    Ok(Spectrum { eigenvalues })
}
