//! The represented line identity and the spectral necessary conditions for
//! a gain function on a line graph to be gain-line.

use serde::{Deserialize, Serialize};

use crate::algebra::same_group;
use crate::eigen::hermitian_spectrum;
use crate::error::{Error, Result};
use crate::gain::{gain_adjacency, GainFunction};
use crate::phase::{psi_line, GPhase, PhaseContext};
use crate::repr::{block_scalar, fourier, max_abs_diff, CMatrix, UnitaryRepresentation};
use crate::group::CentralWeakInvolution;

/// Default slack between the closed bounds `±2` and computed eigenvalues.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Both sides of `Â_{L,Ψ_L(H)}(π) = (I_m ⊗ π(s₂))(Ĥ(π)*Ĥ(π) − 2I)`, assembled
/// independently. Returns the largest entrywise deviation.
pub fn verify_line_identity(h: &GPhase, pi: &UnitaryRepresentation, ctx: &PhaseContext) -> Result<f64> {
    let group = h.group();
    if !same_group(group, pi.group()) {
        return Err(Error::GroupMismatch);
    }
    let s2 = group.check_involution(ctx.s2)?;
    let lhs = fourier(&gain_adjacency(&psi_line(h, ctx)?), pi)?.data;

    let hh = fourier(&h.to_matrix(), pi)?.data;
    let km = hh.ncols();
    let gram = hh.adjoint() * &hh - CMatrix::identity(km, km) * num_complex::Complex64::new(2.0, 0.0);
    let rhs = block_scalar(h.graph().edge_count(), pi, s2) * gram;
    Ok(max_abs_diff(&lhs, &rhs))
}

/// How `π(s₂)` sits relative to `±I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum S2Class {
    PlusIdentity,
    MinusIdentity,
    Other,
}

/// Which necessary condition was breached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionRule {
    /// `π(s₂) = I` but the spectrum reaches below `−2`.
    Cor1,
    /// `π(s₂) = −I` but the spectrum reaches above `2`.
    Cor2,
    /// `π` irreducible and the spectrum leaves `[−2, 2]` on both sides.
    Gainline,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObstructionVerdict {
    pub s2_class: S2Class,
    pub irreducible: bool,
    pub min_eig: f64,
    pub max_eig: f64,
    pub violated: Option<ObstructionRule>,
    /// Signed excess past the bound of the governing rule: positive when
    /// violated, otherwise the (non-positive up to `tol`) slack. Zero when no
    /// rule applies.
    pub margin: f64,
    pub tol: f64,
    pub spectrum: Vec<f64>,
}

impl ObstructionVerdict {
    pub fn is_violated(&self) -> bool {
        self.violated.is_some()
    }
}

/// Applies the spectral necessary conditions to the `π`-spectrum of `ζ`.
///
/// A verdict without violation proves nothing; use
/// [`crate::phase::recognize_gain_line`] for an exact answer.
pub fn gainline_obstruction(
    zeta: &GainFunction,
    pi: &UnitaryRepresentation,
    s2: CentralWeakInvolution,
    tol: f64,
) -> Result<ObstructionVerdict> {
    let group = zeta.group();
    if !same_group(group, pi.group()) {
        return Err(Error::GroupMismatch);
    }
    let s2 = group.check_involution(s2)?;
    let s2_class = match pi.scalar_sign(s2, tol) {
        Some(1) => S2Class::PlusIdentity,
        Some(_) => S2Class::MinusIdentity,
        None => S2Class::Other,
    };
    let spectrum = hermitian_spectrum(&fourier(&gain_adjacency(zeta), pi)?)?;
    let min_eig = spectrum.min().unwrap_or(0.0);
    let max_eig = spectrum.max().unwrap_or(0.0);
    let below = -2.0 - min_eig;
    let above = max_eig - 2.0;
    let irreducible = pi.is_irreducible();

    let (violated, margin) = if irreducible && below > tol && above > tol {
        (Some(ObstructionRule::Gainline), below.min(above))
    } else if s2_class == S2Class::PlusIdentity {
        ((below > tol).then_some(ObstructionRule::Cor1), below)
    } else if s2_class == S2Class::MinusIdentity {
        ((above > tol).then_some(ObstructionRule::Cor2), above)
    } else if irreducible {
        (None, below.min(above))
    } else {
        (None, 0.0)
    };
    Ok(ObstructionVerdict {
        s2_class,
        irreducible,
        min_eig,
        max_eig,
        violated,
        margin,
        tol,
        spectrum: spectrum.eigenvalues,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::graph::{Orientation, SimpleGraph};
    use crate::group::{FiniteGroup, GroupSpec};
    use crate::phase::phase_from_orientation;
    use crate::repr::{builtin_representation, RepresentationKind};

    fn q8() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::build(&GroupSpec::Quaternion8).unwrap())
    }

    #[test]
    fn line_identity_on_the_paw() {
        let g = q8();
        let forward = ["-i", "-j", "-k", "-i"].iter().map(|l| g.by_label(l).unwrap()).collect();
        let psi = GainFunction::new(Arc::new(SimpleGraph::paw()), g.clone(), forward).unwrap();
        let m = g.by_label("-1").unwrap();
        let ctx = PhaseContext::new(&g, m, m).unwrap();
        let h = phase_from_orientation(&psi, &Orientation::default_for(psi.graph()), &ctx).unwrap();
        for kind in [RepresentationKind::Q8TwoDim, RepresentationKind::Regular, RepresentationKind::Trivial] {
            let pi = builtin_representation(&g, kind).unwrap();
            assert!(verify_line_identity(&h, &pi, &ctx).unwrap() <= 1e-10);
        }
    }

    #[test]
    fn classical_line_graph_is_not_flagged() {
        let g = Arc::new(FiniteGroup::build(&GroupSpec::trivial()).unwrap());
        let pi = builtin_representation(&g, RepresentationKind::Trivial).unwrap();
        let line = crate::graph::line_graph(&SimpleGraph::complete(5).unwrap()).line;
        let zeta = GainFunction::trivial(Arc::new(line), g);
        let v = gainline_obstruction(&zeta, &pi, CentralWeakInvolution::identity(), DEFAULT_TOL).unwrap();
        assert_eq!(v.s2_class, S2Class::PlusIdentity);
        assert!(v.violated.is_none());
        // L(K5) has least eigenvalue exactly −2
        assert!((v.min_eig + 2.0).abs() < 1e-9);
        assert!(v.margin <= DEFAULT_TOL);
    }

    #[test]
    fn negated_complete_graph_breaks_cor1() {
        // K4 with all gains −1 over {±1}: spectrum {−3, 1, 1, 1}
        let g = Arc::new(FiniteGroup::build(&GroupSpec::Sign).unwrap());
        let m = g.by_label("-1").unwrap();
        let zeta = GainFunction::constant(Arc::new(SimpleGraph::complete(4).unwrap()), g.clone(), m).unwrap();
        let pi = builtin_representation(&g, RepresentationKind::RootOfUnity).unwrap();
        let v = gainline_obstruction(&zeta, &pi, CentralWeakInvolution::identity(), DEFAULT_TOL).unwrap();
        assert_eq!(v.violated, Some(ObstructionRule::Cor1));
        assert!((v.margin - 1.0).abs() < 1e-12);
        let v = gainline_obstruction(&zeta, &pi, g.central_weak_involution(m).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(v.s2_class, S2Class::MinusIdentity);
        assert_eq!(v.violated, None);
    }

    #[test]
    fn mismatched_representation() {
        let g = Arc::new(FiniteGroup::build(&GroupSpec::Sign).unwrap());
        let zeta = GainFunction::trivial(Arc::new(SimpleGraph::path(3).unwrap()), g);
        let pi = builtin_representation(&q8(), RepresentationKind::Trivial).unwrap();
        assert_eq!(
            gainline_obstruction(&zeta, &pi, CentralWeakInvolution::identity(), DEFAULT_TOL).unwrap_err(),
            Error::GroupMismatch
        );
    }
}
