//! Gain functions, their ℂG-valued matrices, switching and balance.

use std::sync::Arc;

use crate::algebra::{same_group, AlgebraElement, CGMatrix};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::group::{CentralWeakInvolution, FiniteGroup, GroupElement};

/// A gain function `ψ` on a simple graph.
///
/// Only the gain along the default orientation (lower vertex to higher
/// vertex) is stored for each edge; the opposite direction is its inverse.
#[derive(Clone, Debug)]
pub struct GainFunction {
    graph: Arc<SimpleGraph>,
    group: Arc<FiniteGroup>,
    forward: Vec<GroupElement>,
}

impl PartialEq for GainFunction {
    fn eq(&self, other: &Self) -> bool {
        self.forward == other.forward
            && same_group(&self.group, &other.group)
            && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
    }
}

impl GainFunction {
    /// `forward[k]` is `ψ(u, v)` for edge `k = {u, v}` with `u < v`.
    pub fn new(graph: Arc<SimpleGraph>, group: Arc<FiniteGroup>, forward: Vec<GroupElement>) -> Result<Self> {
        if forward.len() != graph.edge_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} gains for {} edges",
                forward.len(),
                graph.edge_count()
            )));
        }
        for &g in &forward {
            group.element(g.index())?;
        }
        Ok(GainFunction {
            graph,
            group,
            forward,
        })
    }

    /// The constant gain function `s`. Requires `s² = 1` so that both
    /// directions of every edge carry `s`.
    pub fn constant(graph: Arc<SimpleGraph>, group: Arc<FiniteGroup>, s: GroupElement) -> Result<Self> {
        group.element(s.index())?;
        if !group.mul(s, s).is_identity() {
            return Err(Error::NotCentralInvolution(format!(
                "{} (a constant gain must satisfy s² = 1)",
                group.label(s)
            )));
        }
        let m = graph.edge_count();
        Self::new(graph, group, vec![s; m])
    }

    pub fn trivial(graph: Arc<SimpleGraph>, group: Arc<FiniteGroup>) -> Self {
        let m = graph.edge_count();
        GainFunction {
            graph,
            group,
            forward: vec![GroupElement::IDENTITY; m],
        }
    }

    pub fn graph(&self) -> &Arc<SimpleGraph> {
        &self.graph
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn forward(&self) -> &[GroupElement] {
        &self.forward
    }

    pub fn edge_gain(&self, k: usize) -> GroupElement {
        self.forward[k]
    }

    /// `ψ(u, v)`, or `None` when `u` and `v` are not adjacent.
    pub fn gain(&self, u: usize, v: usize) -> Option<GroupElement> {
        let k = self.graph.edge_index(u, v)?;
        let g = self.forward[k];
        Some(if u < v { g } else { self.group.inv(g) })
    }

    pub fn gain_checked(&self, u: usize, v: usize) -> Result<GroupElement> {
        self.gain(u, v).ok_or(Error::NotAdjacent(u, v))
    }

    /// Copy with the forward gain of edge `k` replaced.
    pub fn with_edge_gain(&self, k: usize, g: GroupElement) -> Self {
        let mut out = self.clone();
        out.forward[k] = g;
        out
    }

    /// Left-multiplies every gain by the central element `s` (`sψ`).
    pub fn scaled_by_central(&self, s: GroupElement) -> Self {
        GainFunction {
            forward: self.forward.iter().map(|&g| self.group.mul(s, g)).collect(),
            ..self.clone()
        }
    }

    pub fn labels(&self) -> Vec<String> {
        self.forward
            .iter()
            .map(|&g| self.group.label(g).to_string())
            .collect()
    }

    fn check_compatible(&self, other: &GainFunction) -> Result<()> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        if *self.graph != *other.graph {
            return Err(Error::GraphMismatch);
        }
        Ok(())
    }
}

/// A vertex function `f: V → G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingFunction(pub Vec<GroupElement>);

impl SwitchingFunction {
    pub fn identity(n: usize) -> Self {
        SwitchingFunction(vec![GroupElement::IDENTITY; n])
    }

    pub fn values(&self) -> &[GroupElement] {
        &self.0
    }

    pub fn inverse(&self, group: &FiniteGroup) -> Self {
        SwitchingFunction(self.0.iter().map(|&g| group.inv(g)).collect())
    }
}

/// `(A_{Γ,ψ})_{i,j} = ψ(v_i, v_j)` on edges, zero elsewhere.
pub fn gain_adjacency(psi: &GainFunction) -> CGMatrix {
    let n = psi.graph.vertex_count();
    let mut a = CGMatrix::zeros(psi.group.clone(), n, n);
    for (k, &(u, v)) in psi.graph.edges().iter().enumerate() {
        let g = psi.forward[k];
        a.set(u, v, AlgebraElement::element(g)).expect("in range");
        a.set(v, u, AlgebraElement::element(psi.group.inv(g)))
            .expect("in range");
    }
    a
}

/// `Δ^s = deg(Γ, G) + s·A_{Γ,ψ}`.
pub fn s_laplacian(psi: &GainFunction, s: CentralWeakInvolution) -> Result<CGMatrix> {
    let s = psi.group.check_involution(s)?;
    let degrees: Vec<AlgebraElement> = psi
        .graph
        .degrees()
        .into_iter()
        .map(|d| AlgebraElement::term((d as f64).into(), GroupElement::IDENTITY))
        .collect();
    let deg = CGMatrix::diagonal(psi.group.clone(), &degrees)?;
    let scaled = gain_adjacency(psi).scalar_mul(&AlgebraElement::element(s), crate::algebra::Side::Left)?;
    deg.add(&scaled)
}

/// `ψ^f(u, v) = f(u)⁻¹ ψ(u, v) f(v)`.
pub fn switch(psi: &GainFunction, f: &SwitchingFunction) -> Result<GainFunction> {
    if f.0.len() != psi.graph.vertex_count() {
        return Err(Error::DimensionMismatch(format!(
            "switching function has {} values for {} vertices",
            f.0.len(),
            psi.graph.vertex_count()
        )));
    }
    for &g in &f.0 {
        psi.group.element(g.index())?;
    }
    let group = &psi.group;
    let forward = psi
        .graph
        .edges()
        .iter()
        .zip(&psi.forward)
        .map(|(&(u, v), &g)| group.mul(group.mul(group.inv(f.0[u]), g), f.0[v]))
        .collect();
    Ok(GainFunction {
        forward,
        ..psi.clone()
    })
}

/// `ψ(W) = ψ(v₁,v₂)ψ(v₂,v₃)⋯ψ(v_{k−1},v_k)`.
pub fn walk_gain(psi: &GainFunction, walk: &[usize]) -> Result<GroupElement> {
    walk.windows(2).try_fold(GroupElement::IDENTITY, |acc, w| {
        if w[0] >= psi.graph.vertex_count() || w[1] >= psi.graph.vertex_count() {
            return Err(Error::NotAdjacent(w[0], w[1]));
        }
        Ok(psi.group.mul(acc, psi.gain_checked(w[0], w[1])?))
    })
}

// Propagates f along the BFS tree with f(root) = seed so that
// f(u)⁻¹ψ₁(u,v)f(v) = ψ₂(u,v) on tree edges, then checks every edge.
fn propagate(psi1: &GainFunction, psi2: &GainFunction, seed: GroupElement) -> Option<SwitchingFunction> {
    let graph = &psi1.graph;
    let group = &psi1.group;
    let (order, parent) = graph.bfs_tree();
    let mut f = vec![GroupElement::IDENTITY; graph.vertex_count()];
    f[0] = seed;
    for &v in order.iter().skip(1) {
        let (u, _) = parent[v].expect("non-root vertices have a parent");
        let g1 = psi1.gain(u, v).expect("tree edge");
        let g2 = psi2.gain(u, v).expect("tree edge");
        f[v] = group.mul(group.mul(group.inv(g1), f[u]), g2);
    }
    let consistent = graph.edges().iter().enumerate().all(|(k, &(u, v))| {
        group.mul(group.mul(group.inv(f[u]), psi1.forward[k]), f[v]) == psi2.forward[k]
    });
    consistent.then_some(SwitchingFunction(f))
}

/// Some `f` with `ψ₂ = ψ₁^f`, or `None` if the two are not switching
/// equivalent. Tries every value of `f` at vertex 0.
pub fn switching_equivalent(psi1: &GainFunction, psi2: &GainFunction) -> Result<Option<SwitchingFunction>> {
    psi1.check_compatible(psi2)?;
    Ok(psi1.group.elements().find_map(|seed| propagate(psi1, psi2, seed)))
}

/// Returns a witness `f` with `ψ^f = 1` when `ψ` is balanced.
pub fn is_balanced(psi: &GainFunction) -> Option<SwitchingFunction> {
    let trivial = GainFunction::trivial(psi.graph.clone(), psi.group.clone());
    // Any solution can be right-multiplied by a constant, so seed 1 suffices.
    propagate(psi, &trivial, GroupElement::IDENTITY)
}

/// Antibalance (`ψ ∼ −1`). Only defined when the group has an element
/// labelled `-1` of order two.
pub fn is_antibalanced(psi: &GainFunction) -> Result<Option<SwitchingFunction>> {
    let minus = psi.group.by_label("-1")?;
    let target = GainFunction::constant(psi.graph.clone(), psi.group.clone(), minus)?;
    switching_equivalent(psi, &target)
}
