//! Ordered simple graphs, orientations, incidence matrices and line graphs.
//!
//! Vertices are `0..n` and edges keep the order in which they were given.
//! Each edge is stored as `(lower, higher)`, which is also its direction
//! under the default orientation.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Debug)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    index: BTreeMap<(usize, usize), usize>,
    // (neighbor, edge index), in edge order
    adj: Vec<Vec<(usize, usize)>>,
}

impl PartialEq for SimpleGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for SimpleGraph {}

impl SimpleGraph {
    /// Builds a connected simple graph from 0-based edge pairs.
    ///
    /// A single vertex with no edges is accepted: it is the line graph of a
    /// single edge. Every other graph needs at least one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        if edges.is_empty() && n > 1 {
            return Err(Error::InvalidGraph("graph has no edges".into()));
        }
        let mut index = BTreeMap::new();
        let mut adj = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for (k, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {k} references a missing vertex")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("edge {k} is a loop")));
            }
            let key = (u.min(v), u.max(v));
            if index.insert(key, k).is_some() {
                return Err(Error::InvalidGraph(format!("edge {k} is a duplicate")));
            }
            adj[key.0].push((key.1, k));
            adj[key.1].push((key.0, k));
            normalized.push(key);
        }
        let g = SimpleGraph {
            n,
            edges: normalized,
            index,
            adj,
        };
        if !g.is_connected() {
            return Err(Error::InvalidGraph("graph is not connected".into()));
        }
        Ok(g)
    }

    /// Same as [`SimpleGraph::new`] but with 1-based vertex labels.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let shifted = edges
            .iter()
            .map(|&(u, v)| {
                if u == 0 || v == 0 {
                    Err(Error::InvalidGraph("vertex labels are 1-based".into()))
                } else {
                    Ok((u - 1, v - 1))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, &shifted)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph("a cycle needs at least 3 vertices".into()));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    /// The star with `leaves` edges, centred at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::new(leaves + 1, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Self::new(n, &edges)
    }

    /// Triangle with a pendant edge: `{1,2},{2,3},{3,4},{2,4}` in 1-based labels.
    pub fn paw() -> Self {
        Self::new(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]).expect("paw is a valid graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, k: usize) -> (usize, usize) {
        self.edges[k]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `(neighbor, edge index)` pairs around `v`.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn is_incident(&self, v: usize, k: usize) -> bool {
        let (a, b) = self.edges[k];
        v == a || v == b
    }

    /// The common endpoint of two distinct edges, if any.
    pub fn shared_vertex(&self, i: usize, j: usize) -> Option<usize> {
        if i == j {
            return None;
        }
        let (a, b) = self.edges[i];
        let (c, d) = self.edges[j];
        [a, b].into_iter().find(|&x| x == c || x == d)
    }

    fn is_connected(&self) -> bool {
        let (order, _) = self.bfs_tree();
        order.len() == self.n
    }

    /// BFS from vertex 0. Returns the visiting order and, per vertex, the
    /// `(parent, edge index)` through which it was reached.
    pub fn bfs_tree(&self) -> (Vec<usize>, Vec<Option<(usize, usize)>>) {
        let mut parent = vec![None; self.n];
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &(v, k) in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some((u, k));
                    queue.push_back(v);
                }
            }
        }
        (order, parent)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }
}

/// A choice of direction for every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// `arcs[k]` must be edge `k` of `graph`, in either direction.
    pub fn new(graph: &SimpleGraph, arcs: Vec<(usize, usize)>) -> Result<Self> {
        if arcs.len() != graph.edge_count() {
            return Err(Error::InvalidOrientation(format!(
                "{} arcs for {} edges",
                arcs.len(),
                graph.edge_count()
            )));
        }
        for (k, &(t, h)) in arcs.iter().enumerate() {
            if graph.edge_index(t, h) != Some(k) || t == h {
                return Err(Error::InvalidOrientation(format!(
                    "arc {k} ({t},{h}) does not orient edge {k}"
                )));
            }
        }
        Ok(Orientation { arcs })
    }

    /// Every edge from its lower to its higher vertex.
    pub fn default_for(graph: &SimpleGraph) -> Self {
        Orientation {
            arcs: graph.edges().to_vec(),
        }
    }

    pub fn reversed(&self) -> Self {
        Orientation {
            arcs: self.arcs.iter().map(|&(t, h)| (h, t)).collect(),
        }
    }

    /// Flips the edges whose bit is set in `mask`.
    pub fn flipped(&self, mask: &[bool]) -> Self {
        Orientation {
            arcs: self
                .arcs
                .iter()
                .zip(mask)
                .map(|(&(t, h), &flip)| if flip { (h, t) } else { (t, h) })
                .collect(),
        }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// `(tail, head)` of edge `k`.
    pub fn arc(&self, k: usize) -> (usize, usize) {
        self.arcs[k]
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

pub fn default_orientation(graph: &SimpleGraph) -> Orientation {
    Orientation::default_for(graph)
}

/// `L(Γ)` together with the vertex `v(E_k) = e_i ∩ e_j` behind each line-edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraphData {
    pub line: SimpleGraph,
    pub shared_vertex: Vec<usize>,
}

/// Vertices of the line graph are the edges of `graph` in their given order;
/// line-edges are listed lexicographically by edge-index pair.
pub fn line_graph(graph: &SimpleGraph) -> LineGraphData {
    let m = graph.edge_count();
    let mut edges = Vec::new();
    let mut shared = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if let Some(v) = graph.shared_vertex(i, j) {
                edges.push((i, j));
                shared.push(v);
            }
        }
    }
    let line = SimpleGraph::new(m.max(1), &edges).expect("line graph of a connected graph is connected");
    LineGraphData {
        line,
        shared_vertex: shared,
    }
}

/// `N_{i,j} = 1` iff `v_i ∈ e_j`.
pub fn incidence_matrix(graph: &SimpleGraph) -> IntMatrix {
    let mut n = vec![vec![0; graph.edge_count()]; graph.vertex_count()];
    for (k, &(a, b)) in graph.edges().iter().enumerate() {
        n[a][k] = 1;
        n[b][k] = 1;
    }
    n
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalMatrices {
    pub adjacency: IntMatrix,
    pub degree: IntMatrix,
    pub laplacian: IntMatrix,
    pub signless_laplacian: IntMatrix,
}

pub fn classical_matrices(graph: &SimpleGraph) -> ClassicalMatrices {
    let n = graph.vertex_count();
    let mut adjacency = vec![vec![0; n]; n];
    for &(a, b) in graph.edges() {
        adjacency[a][b] = 1;
        adjacency[b][a] = 1;
    }
    let mut degree = vec![vec![0; n]; n];
    for (v, row) in degree.iter_mut().enumerate() {
        row[v] = graph.degree(v) as i64;
    }
    let combine = |sign: i64| -> IntMatrix {
        (0..n)
            .map(|i| (0..n).map(|j| degree[i][j] + sign * adjacency[i][j]).collect())
            .collect()
    };
    let laplacian = combine(-1);
    let signless_laplacian = combine(1);
    ClassicalMatrices {
        adjacency,
        degree,
        laplacian,
        signless_laplacian,
    }
}
