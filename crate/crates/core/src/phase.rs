//! G-phases and the gain functions they induce on a graph and on its line graph.
//!
//! A G-phase `H` of a graph with `n` vertices and `m` edges is an `n × m`
//! matrix over `ℂG` with a group element at every incidence `v_i ∈ e_k` and
//! zero elsewhere. It induces
//!
//! * a gain `Ψ(H)(v_i, v_j) = s₁ H_{i,k} H_{j,k}⁻¹` on `Γ`, with `HH* = Δ^{s₁}`;
//! * a gain `Ψ_L(H)(e_i, e_j) = s₂ H_{k,i}⁻¹ H_{k,j}` on `L(Γ)`, with
//!   `H*H = 2·1 + s₂ A_{L(Γ)}`.
//!
//! The right action `H ↦ H·diag(g)` moves within fibres of `Ψ`, the left action
//! `H ↦ diag(f)*·H` within fibres of `Ψ_L`, and the two together within
//! switching classes of either. [`same_orbit`] decides orbit membership
//! through these correspondences.

use std::sync::Arc;

use crate::algebra::{same_group, AlgebraElement, CGMatrix};
use crate::error::{Error, Result};
use crate::gain::{switching_equivalent, GainFunction};
use crate::graph::{line_graph, LineGraphData, Orientation, SimpleGraph};
use crate::group::{CentralWeakInvolution, FiniteGroup, GroupElement};

/// A G-phase, stored column by column: for edge `k = {a, b}` with `a < b`,
/// `columns[k] = [H_{a,k}, H_{b,k}]`. All other entries are zero.
#[derive(Clone, Debug)]
pub struct GPhase {
    graph: Arc<SimpleGraph>,
    group: Arc<FiniteGroup>,
    columns: Vec<[GroupElement; 2]>,
}

impl PartialEq for GPhase {
    fn eq(&self, other: &Self) -> bool {
        self.columns == other.columns
            && same_group(&self.group, &other.group)
            && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
    }
}

impl Eq for GPhase {}

impl GPhase {
    pub fn new(graph: Arc<SimpleGraph>, group: Arc<FiniteGroup>, columns: Vec<[GroupElement; 2]>) -> Result<Self> {
        if columns.len() != graph.edge_count() {
            return Err(Error::InvalidPhase(format!(
                "{} columns for {} edges",
                columns.len(),
                graph.edge_count()
            )));
        }
        for g in columns.iter().flatten() {
            group.element(g.index())?;
        }
        Ok(GPhase {
            graph,
            group,
            columns,
        })
    }

    /// `N_Γ(G)`: the identity at every incidence.
    pub fn incidence(graph: Arc<SimpleGraph>, group: Arc<FiniteGroup>) -> Self {
        let m = graph.edge_count();
        GPhase {
            graph,
            group,
            columns: vec![[GroupElement::IDENTITY; 2]; m],
        }
    }

    /// Reads a G-phase out of a ℂG-matrix, checking the incidence pattern.
    pub fn from_matrix(graph: Arc<SimpleGraph>, matrix: &CGMatrix) -> Result<Self> {
        let (n, m) = (graph.vertex_count(), graph.edge_count());
        if matrix.rows() != n || matrix.cols() != m {
            return Err(Error::InvalidPhase(format!(
                "expected {n}x{m}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let mut columns = Vec::with_capacity(m);
        for (k, &(a, b)) in graph.edges().iter().enumerate() {
            for i in 0..n {
                let e = matrix.get(i, k);
                let incident = i == a || i == b;
                if incident && e.as_group_element().is_none() {
                    return Err(Error::InvalidPhase(format!(
                        "entry ({i},{k}) must be a group element"
                    )));
                }
                if !incident && !e.is_zero() {
                    return Err(Error::InvalidPhase(format!("entry ({i},{k}) must be zero")));
                }
            }
            columns.push([
                matrix.get(a, k).as_group_element().expect("checked"),
                matrix.get(b, k).as_group_element().expect("checked"),
            ]);
        }
        Ok(GPhase {
            graph,
            group: matrix.group().clone(),
            columns,
        })
    }

    pub fn to_matrix(&self) -> CGMatrix {
        let mut h = CGMatrix::zeros(self.group.clone(), self.graph.vertex_count(), self.graph.edge_count());
        for (k, (&(a, b), col)) in self.graph.edges().iter().zip(&self.columns).enumerate() {
            h.set(a, k, AlgebraElement::element(col[0])).expect("in range");
            h.set(b, k, AlgebraElement::element(col[1])).expect("in range");
        }
        h
    }

    pub fn graph(&self) -> &Arc<SimpleGraph> {
        &self.graph
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn columns(&self) -> &[[GroupElement; 2]] {
        &self.columns
    }

    /// `H_{i,k}`, or `None` for a structural zero.
    pub fn entry(&self, i: usize, k: usize) -> Option<GroupElement> {
        let (a, b) = self.graph.edge(k);
        if i == a {
            Some(self.columns[k][0])
        } else if i == b {
            Some(self.columns[k][1])
        } else {
            None
        }
    }

    fn incident_entry(&self, i: usize, k: usize) -> GroupElement {
        self.entry(i, k).expect("vertex is incident to edge")
    }

    fn check_compatible(&self, other: &GPhase) -> Result<()> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        if *self.graph != *other.graph {
            return Err(Error::GraphMismatch);
        }
        Ok(())
    }
}

/// The pair of central weak involutions `(s₁, s₂)` used by `Ψ` and `Ψ_L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhaseContext {
    pub s1: CentralWeakInvolution,
    pub s2: CentralWeakInvolution,
}

impl PhaseContext {
    pub fn new(group: &FiniteGroup, s1: GroupElement, s2: GroupElement) -> Result<Self> {
        Ok(PhaseContext {
            s1: group.central_weak_involution(s1)?,
            s2: group.central_weak_involution(s2)?,
        })
    }

    /// `s₁ = s₂ = 1_G`.
    pub fn identity() -> Self {
        PhaseContext {
            s1: CentralWeakInvolution::identity(),
            s2: CentralWeakInvolution::identity(),
        }
    }

    fn resolve(&self, group: &FiniteGroup) -> Result<(GroupElement, GroupElement)> {
        Ok((group.check_involution(self.s1)?, group.check_involution(self.s2)?))
    }
}

/// `Ψ(H)(v_i, v_j) = s₁ H_{i,k} H_{j,k}⁻¹` for `e_k = {v_i, v_j}`.
pub fn psi(h: &GPhase, ctx: &PhaseContext) -> Result<GainFunction> {
    let (s1, _) = ctx.resolve(&h.group)?;
    let g = &h.group;
    let forward = h
        .columns
        .iter()
        .map(|&[lo, hi]| g.mul(s1, g.mul(lo, g.inv(hi))))
        .collect();
    GainFunction::new(h.graph.clone(), h.group.clone(), forward)
}

/// `Ψ_L(H)` on a precomputed line graph of `H`'s graph.
pub fn psi_line_on(h: &GPhase, ctx: &PhaseContext, line: &LineGraphData) -> Result<GainFunction> {
    let (_, s2) = ctx.resolve(&h.group)?;
    let g = &h.group;
    let forward = line
        .line
        .edges()
        .iter()
        .zip(&line.shared_vertex)
        .map(|(&(i, j), &v)| {
            g.mul(s2, g.mul(g.inv(h.incident_entry(v, i)), h.incident_entry(v, j)))
        })
        .collect();
    GainFunction::new(Arc::new(line.line.clone()), h.group.clone(), forward)
}

/// `Ψ_L(H)(e_i, e_j) = s₂ H_{k,i}⁻¹ H_{k,j}` for `v_k = e_i ∩ e_j`.
pub fn psi_line(h: &GPhase, ctx: &PhaseContext) -> Result<GainFunction> {
    psi_line_on(h, ctx, &line_graph(&h.graph))
}

fn check_orientation(graph: &SimpleGraph, o: &Orientation) -> Result<()> {
    Orientation::new(graph, o.arcs().to_vec()).map(|_| ())
}

/// `H_𝔬(ψ)`: `ψ(tail, head)` at the tail of each arc and `s₁` at its head.
/// A section of [`psi`]: `Ψ(H_𝔬(ψ)) = ψ`.
pub fn phase_from_orientation(gain: &GainFunction, o: &Orientation, ctx: &PhaseContext) -> Result<GPhase> {
    let (s1, _) = ctx.resolve(gain.group())?;
    let graph = gain.graph();
    check_orientation(graph, o)?;
    let columns = o
        .arcs()
        .iter()
        .map(|&(t, h)| {
            let at_tail = gain.gain(t, h).expect("arc is an edge");
            if t < h {
                [at_tail, s1]
            } else {
                [s1, at_tail]
            }
        })
        .collect();
    GPhase::new(graph.clone(), gain.group().clone(), columns)
}

/// `diag(f)*·H·diag(g)`; either side may be omitted.
pub fn act(h: &GPhase, f: Option<&[GroupElement]>, g: Option<&[GroupElement]>) -> Result<GPhase> {
    let (n, m) = (h.graph.vertex_count(), h.graph.edge_count());
    if f.is_some_and(|f| f.len() != n) {
        return Err(Error::DimensionMismatch(format!("left factor must have length {n}")));
    }
    if g.is_some_and(|g| g.len() != m) {
        return Err(Error::DimensionMismatch(format!("right factor must have length {m}")));
    }
    let grp = &h.group;
    for x in f.into_iter().flatten().chain(g.into_iter().flatten()) {
        grp.element(x.index())?;
    }
    let columns = h
        .graph
        .edges()
        .iter()
        .zip(&h.columns)
        .enumerate()
        .map(|(k, (&(a, b), &[ha, hb]))| {
            let gk = g.map_or(GroupElement::IDENTITY, |g| g[k]);
            let left = |v: usize| f.map_or(GroupElement::IDENTITY, |f| grp.inv(f[v]));
            [
                grp.mul(grp.mul(left(a), ha), gk),
                grp.mul(grp.mul(left(b), hb), gk),
            ]
        })
        .collect();
    Ok(GPhase {
        columns,
        ..h.clone()
    })
}

/// The equivalence relations on G-phases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitKind {
    /// Right action `H ↦ H·diag(g)`.
    Right,
    /// Left action `H ↦ diag(f)*·H`.
    Left,
    /// Both actions together.
    LeftRight,
    /// Same right orbit and same left orbit.
    LeftAndRight,
}

/// Orbit membership decided through the induced gain functions: right orbits
/// are fibres of `Ψ`, left orbits are fibres of `Ψ_L`, and joint orbits are
/// preimages of switching classes.
pub fn same_orbit(h1: &GPhase, h2: &GPhase, kind: OrbitKind, ctx: &PhaseContext) -> Result<bool> {
    h1.check_compatible(h2)?;
    let line = || line_graph(&h1.graph);
    Ok(match kind {
        OrbitKind::Right => psi(h1, ctx)? == psi(h2, ctx)?,
        OrbitKind::Left => {
            let l = line();
            psi_line_on(h1, ctx, &l)? == psi_line_on(h2, ctx, &l)?
        }
        OrbitKind::LeftRight => switching_equivalent(&psi(h1, ctx)?, &psi(h2, ctx)?)?.is_some(),
        OrbitKind::LeftAndRight => {
            let l = line();
            psi(h1, ctx)? == psi(h2, ctx)? && psi_line_on(h1, ctx, &l)? == psi_line_on(h2, ctx, &l)?
        }
    })
}

/// The gain-line lift `𝓛_𝔬(ψ) = Ψ_L(H_𝔬(ψ))`, computed edge by edge.
///
/// For line-edge `{e_a, e_b}` meeting at `v`, with `x` the gain of `e_a`
/// towards `v` and `y` the gain of `e_b` away from `v`:
///
/// | `e_a` at `v` | `e_b` at `v` | gain        |
/// |--------------|--------------|-------------|
/// | head         | tail         | `s₁s₂·y`    |
/// | head         | head         | `s₂`        |
/// | tail         | tail         | `s₂·x·y`    |
/// | tail         | head         | `s₁s₂·x`    |
pub fn gain_line(gain: &GainFunction, o: &Orientation, ctx: &PhaseContext) -> Result<GainFunction> {
    let grp = gain.group();
    let (s1, s2) = ctx.resolve(grp)?;
    let graph = gain.graph();
    check_orientation(graph, o)?;
    let s1s2 = grp.mul(s1, s2);
    let other_end = |k: usize, v: usize| {
        let (a, b) = graph.edge(k);
        if a == v {
            b
        } else {
            a
        }
    };
    let lg = line_graph(graph);
    let forward = lg
        .line
        .edges()
        .iter()
        .zip(&lg.shared_vertex)
        .map(|(&(ea, eb), &v)| {
            let a_into_v = o.arc(ea).1 == v;
            let b_into_v = o.arc(eb).1 == v;
            let x = gain.gain(other_end(ea, v), v).expect("edge");
            let y = gain.gain(v, other_end(eb, v)).expect("edge");
            match (a_into_v, b_into_v) {
                (true, false) => grp.mul(s1s2, y),
                (true, true) => s2,
                (false, false) => grp.product([s2, x, y]),
                (false, true) => grp.mul(s1s2, x),
            }
        })
        .collect();
    GainFunction::new(Arc::new(lg.line), grp.clone(), forward)
}

/// The line phase `L(H)` of `L(Γ)`: for line-edge `E_k = {e_i, e_j}` meeting
/// at `v_l`, column `k` carries `H_{l,i}⁻¹` and `H_{l,j}⁻¹`.
pub fn reff_line_phase(h: &GPhase) -> GPhase {
    let lg = line_graph(&h.graph);
    let g = &h.group;
    let columns = lg
        .line
        .edges()
        .iter()
        .zip(&lg.shared_vertex)
        .map(|(&(i, j), &v)| [g.inv(h.incident_entry(v, i)), g.inv(h.incident_entry(v, j))])
        .collect();
    GPhase {
        graph: Arc::new(lg.line),
        group: h.group.clone(),
        columns,
    }
}

/// Finds `H` with `Ψ_L(H) = ζ`, or `None` if `ζ` is not a gain-line function
/// of `root`.
///
/// Rows of `H` are independent: every line-edge has one shared vertex. For
/// each vertex the first incident edge gets `1_G` and the rest are solved from
/// it, then all incident pairs are checked.
pub fn recognize_gain_line(zeta: &GainFunction, root: &SimpleGraph, ctx: &PhaseContext) -> Result<Option<GPhase>> {
    let grp = zeta.group();
    let (_, s2) = ctx.resolve(grp)?;
    let lg = line_graph(root);
    if **zeta.graph() != lg.line {
        return Err(Error::GraphMismatch);
    }
    let n = root.vertex_count();
    let mut rows: Vec<Vec<(usize, GroupElement)>> = vec![Vec::new(); n];
    for (v, slot) in rows.iter_mut().enumerate() {
        let mut incident: Vec<usize> = root.neighbors(v).iter().map(|&(_, k)| k).collect();
        incident.sort_unstable();
        let Some(&base) = incident.first() else {
            continue;
        };
        let row: Vec<(usize, GroupElement)> = incident
            .iter()
            .map(|&k| {
                let x = if k == base {
                    GroupElement::IDENTITY
                } else {
                    grp.mul(s2, zeta.gain(base, k).expect("edges sharing a vertex are adjacent in L"))
                };
                (k, x)
            })
            .collect();
        for (p, &(i, hi)) in row.iter().enumerate() {
            for &(j, hj) in &row[p + 1..] {
                let induced = grp.mul(s2, grp.mul(grp.inv(hi), hj));
                if zeta.gain(i, j) != Some(induced) {
                    return Ok(None);
                }
            }
        }
        *slot = row;
    }
    let lookup = |v: usize, k: usize| {
        rows[v]
            .iter()
            .find(|&&(e, _)| e == k)
            .map(|&(_, x)| x)
            .expect("every endpoint row covers its edges")
    };
    let columns = root
        .edges()
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| [lookup(a, k), lookup(b, k)])
        .collect();
    GPhase::new(Arc::new(root.clone()), grp.clone(), columns).map(Some)
}

/// A phase inducing both `ψ` on `Γ` and `ζ` on `L(Γ)`, if the pair is
/// compatible.
pub fn compatible_phase(gain: &GainFunction, zeta: &GainFunction, ctx: &PhaseContext) -> Result<Option<GPhase>> {
    let base = phase_from_orientation(gain, &Orientation::default_for(gain.graph()), ctx)?;
    let induced = psi_line(&base, ctx)?;
    if **induced.graph() != **zeta.graph() {
        return Err(Error::GraphMismatch);
    }
    match switching_equivalent(&induced, zeta)? {
        Some(g) => act(&base, None, Some(g.values())).map(Some),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::gain_adjacency;
    use crate::group::GroupSpec;

    fn q8() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::build(&GroupSpec::Quaternion8).unwrap())
    }

    fn minus_ctx(g: &FiniteGroup) -> PhaseContext {
        let m = g.by_label("-1").unwrap();
        PhaseContext::new(g, m, m).unwrap()
    }

    fn paw_q8() -> GainFunction {
        let g = q8();
        let forward = ["-i", "-j", "-k", "-i"].iter().map(|l| g.by_label(l).unwrap()).collect();
        GainFunction::new(Arc::new(SimpleGraph::paw()), g, forward).unwrap()
    }

    fn phase_labels(h: &GPhase) -> Vec<Vec<String>> {
        let g = h.group();
        (0..h.graph().vertex_count())
            .map(|i| {
                (0..h.graph().edge_count())
                    .map(|k| h.entry(i, k).map_or("0".to_string(), |x| g.label(x).to_string()))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn phase_from_default_orientation_on_the_paw() {
        let psi_paw = paw_q8();
        let ctx = minus_ctx(psi_paw.group());
        let h = phase_from_orientation(&psi_paw, &Orientation::default_for(psi_paw.graph()), &ctx).unwrap();
        let expected = [
            ["-i", "0", "0", "0"],
            ["-1", "-j", "0", "-i"],
            ["0", "-1", "-k", "0"],
            ["0", "0", "-1", "-1"],
        ];
        assert_eq!(phase_labels(&h), expected.map(|r| r.map(String::from).to_vec()).to_vec());
        assert_eq!(psi(&h, &ctx).unwrap(), psi_paw);
    }

    #[test]
    fn incidence_phase_induces_constant_gains() {
        let g = q8();
        let ctx = minus_ctx(&g);
        let n = GPhase::incidence(Arc::new(SimpleGraph::paw()), g.clone());
        let minus = g.by_label("-1").unwrap();
        assert!(psi(&n, &ctx).unwrap().forward().iter().all(|&x| x == minus));
        assert!(psi_line(&n, &ctx).unwrap().forward().iter().all(|&x| x == minus));
    }

    #[test]
    fn single_edge_phase() {
        let g = q8();
        let ctx = minus_ctx(&g);
        let (a, b) = (g.by_label("j").unwrap(), g.by_label("k").unwrap());
        let h = GPhase::new(Arc::new(SimpleGraph::path(2).unwrap()), g.clone(), vec![[a, b]]).unwrap();
        let expected = g.product([g.by_label("-1").unwrap(), a, g.inv(b)]);
        assert_eq!(psi(&h, &ctx).unwrap().forward(), &[expected]);
        let line = psi_line(&h, &ctx).unwrap();
        assert_eq!(line.graph().vertex_count(), 1);
        assert!(line.forward().is_empty());
        let l = reff_line_phase(&h);
        assert_eq!((l.graph().vertex_count(), l.graph().edge_count()), (1, 0));
    }

    #[test]
    fn paw_gain_line_golden_values() {
        let psi_paw = paw_q8();
        let ctx = minus_ctx(psi_paw.group());
        let o = Orientation::default_for(psi_paw.graph());
        let zeta = gain_line(&psi_paw, &o, &ctx).unwrap();
        // line edges: e1e2, e1e4, e2e3, e2e4, e3e4
        assert_eq!(zeta.labels(), ["-j", "-i", "-k", "-k", "-1"]);
        let h = phase_from_orientation(&psi_paw, &o, &ctx).unwrap();
        assert_eq!(psi_line(&h, &ctx).unwrap(), zeta);
    }

    #[test]
    fn closed_form_agrees_with_composition_for_every_orientation() {
        let psi_paw = paw_q8();
        let g = psi_paw.group().clone();
        for s1 in g.central_weak_involutions() {
            for s2 in g.central_weak_involutions() {
                let ctx = PhaseContext { s1, s2 };
                for mask in 0..16u32 {
                    let flips: Vec<bool> = (0..4).map(|b| mask >> b & 1 == 1).collect();
                    let o = Orientation::default_for(psi_paw.graph()).flipped(&flips);
                    let direct = gain_line(&psi_paw, &o, &ctx).unwrap();
                    let composed = psi_line(&phase_from_orientation(&psi_paw, &o, &ctx).unwrap(), &ctx).unwrap();
                    assert_eq!(direct, composed);
                }
            }
        }
    }

    #[test]
    fn structural_identities_on_the_paw() {
        let psi_paw = paw_q8();
        let ctx = minus_ctx(psi_paw.group());
        let h = phase_from_orientation(&psi_paw, &Orientation::default_for(psi_paw.graph()), &ctx).unwrap();
        let hm = h.to_matrix();
        let lap = crate::gain::s_laplacian(&psi_paw, ctx.s1).unwrap();
        assert_eq!(hm.matmul(&hm.star()).unwrap(), lap);

        let g = h.group();
        let zeta = psi_line(&h, &ctx).unwrap();
        let two = CGMatrix::identity(g.clone(), 4).scale(2.0.into());
        let s2a = gain_adjacency(&zeta)
            .scalar_mul(&AlgebraElement::element(ctx.s2.element()), crate::algebra::Side::Left)
            .unwrap();
        assert_eq!(hm.star().matmul(&hm).unwrap(), two.add(&s2a).unwrap());
    }

    #[test]
    fn matrix_round_trip_and_support_validation() {
        let psi_paw = paw_q8();
        let ctx = minus_ctx(psi_paw.group());
        let h = phase_from_orientation(&psi_paw, &Orientation::default_for(psi_paw.graph()), &ctx).unwrap();
        let m = h.to_matrix();
        assert_eq!(GPhase::from_matrix(h.graph().clone(), &m).unwrap(), h);

        let mut bad = m.clone();
        bad.set(0, 1, AlgebraElement::element(GroupElement::IDENTITY)).unwrap();
        assert!(GPhase::from_matrix(h.graph().clone(), &bad).is_err());
        let mut bad = m;
        bad.set(0, 0, AlgebraElement::zero()).unwrap();
        assert!(GPhase::from_matrix(h.graph().clone(), &bad).is_err());
    }

    #[test]
    fn actions() {
        let psi_paw = paw_q8();
        let g = psi_paw.group().clone();
        let ctx = minus_ctx(&g);
        let h = phase_from_orientation(&psi_paw, &Orientation::default_for(psi_paw.graph()), &ctx).unwrap();
        let ids_n = vec![GroupElement::IDENTITY; 4];
        assert_eq!(act(&h, Some(&ids_n), Some(&ids_n)).unwrap(), h);

        let f: Vec<_> = ["i", "k", "-j", "-1"].iter().map(|l| g.by_label(l).unwrap()).collect();
        let gg: Vec<_> = ["j", "-i", "1", "k"].iter().map(|l| g.by_label(l).unwrap()).collect();
        let moved = act(&h, Some(&f), Some(&gg)).unwrap();
        // left action takes f*, so undoing it takes f⁻¹ on that side
        let finv: Vec<_> = f.iter().map(|&x| g.inv(x)).collect();
        let ginv: Vec<_> = gg.iter().map(|&x| g.inv(x)).collect();
        assert_eq!(act(&moved, Some(&finv), Some(&ginv)).unwrap(), h);

        let sw_f = crate::gain::SwitchingFunction(f.clone());
        let sw_g = crate::gain::SwitchingFunction(gg.clone());
        assert_eq!(psi(&moved, &ctx).unwrap(), crate::gain::switch(&psi(&h, &ctx).unwrap(), &sw_f).unwrap());
        assert_eq!(
            psi_line(&moved, &ctx).unwrap(),
            crate::gain::switch(&psi_line(&h, &ctx).unwrap(), &sw_g).unwrap()
        );
        assert!(same_orbit(&h, &act(&h, None, Some(&gg)).unwrap(), OrbitKind::Right, &ctx).unwrap());
        assert!(act(&h, Some(&f[..3]), None).is_err());
    }

    #[test]
    fn scalar_multiples_share_both_gains_in_abelian_groups() {
        let z4 = Arc::new(FiniteGroup::build(&GroupSpec::cyclic(4)).unwrap());
        let ctx = PhaseContext::new(&z4, GroupElement::IDENTITY, z4.element(2).unwrap()).unwrap();
        let graph = Arc::new(SimpleGraph::paw());
        let cols = vec![[z4.element(1).unwrap(), z4.element(3).unwrap()]; 4];
        let h = GPhase::new(graph, z4.clone(), cols).unwrap();
        let c = z4.element(1).unwrap();
        let scaled = act(&h, None, Some(&[c; 4])).unwrap();
        assert!(same_orbit(&h, &scaled, OrbitKind::LeftAndRight, &ctx).unwrap());
    }

    #[test]
    fn recognition_on_the_star() {
        let z2 = Arc::new(FiniteGroup::build(&GroupSpec::cyclic(2)).unwrap());
        let s = z2.element(1).unwrap();
        let star = SimpleGraph::star(3).unwrap();
        let k3 = Arc::new(line_graph(&star).line);
        for s2 in [GroupElement::IDENTITY, s] {
            let ctx = PhaseContext::new(&z2, GroupElement::IDENTITY, s2).unwrap();
            for mask in 0..8usize {
                let forward = (0..3).map(|b| GroupElement::from_index(mask >> b & 1)).collect();
                let zeta = GainFunction::new(k3.clone(), z2.clone(), forward).unwrap();
                let triangle = crate::gain::walk_gain(&zeta, &[0, 1, 2, 0]).unwrap();
                let found = recognize_gain_line(&zeta, &star, &ctx).unwrap();
                assert_eq!(found.is_some(), triangle == s2);
                if let Some(h) = found {
                    assert_eq!(psi_line(&h, &ctx).unwrap(), zeta);
                }
            }
        }
    }

    #[test]
    fn recognition_rejects_wrong_graph() {
        let z2 = Arc::new(FiniteGroup::build(&GroupSpec::cyclic(2)).unwrap());
        let zeta = GainFunction::trivial(Arc::new(SimpleGraph::path(3).unwrap()), z2);
        let ctx = PhaseContext::identity();
        assert_eq!(recognize_gain_line(&zeta, &SimpleGraph::paw(), &ctx), Err(Error::GraphMismatch));
    }

    #[test]
    fn compatible_phase_reproduces_both_gains() {
        let psi_paw = paw_q8();
        let g = psi_paw.group().clone();
        let ctx = minus_ctx(&g);
        let o = Orientation::default_for(psi_paw.graph()).flipped(&[true, false, true, false]);
        let zeta = gain_line(&psi_paw, &o, &ctx).unwrap();
        let h = compatible_phase(&psi_paw, &zeta, &ctx).unwrap().unwrap();
        assert_eq!(psi(&h, &ctx).unwrap(), psi_paw);
        assert_eq!(psi_line(&h, &ctx).unwrap(), zeta);
    }
}
