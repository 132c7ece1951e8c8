//! Unitary representations and the blockwise Fourier transform of ℂG-matrices.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::algebra::{same_group, AlgebraElement, CGMatrix};
use crate::error::{Error, Result};
use crate::gain::{gain_adjacency, s_laplacian, GainFunction};
use crate::group::{CentralWeakInvolution, FiniteGroup, GroupElement, GroupSpec};

/// Tolerance for the homomorphism and unitarity checks.
pub const VALIDATION_TOL: f64 = 1e-10;

pub type CMatrix = DMatrix<Complex64>;

/// A unitary representation `π: G → U(k)`, stored as one matrix per element.
#[derive(Clone, Debug)]
pub struct UnitaryRepresentation {
    group: Arc<FiniteGroup>,
    degree: usize,
    images: Vec<CMatrix>,
    irreducible: bool,
}

impl UnitaryRepresentation {
    /// Validates identity, multiplicativity over the whole table, and
    /// unitarity, each within [`VALIDATION_TOL`].
    pub fn new(group: Arc<FiniteGroup>, images: Vec<CMatrix>, irreducible: bool) -> Result<Self> {
        Self::with_tolerance(group, images, irreducible, VALIDATION_TOL)
    }

    pub fn with_tolerance(group: Arc<FiniteGroup>, images: Vec<CMatrix>, irreducible: bool, tol: f64) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidRepresentation(msg));
        if images.len() != group.order() {
            return bad(format!("{} images for a group of order {}", images.len(), group.order()));
        }
        let k = images[0].nrows();
        if k == 0 {
            return bad("degree must be positive".into());
        }
        if let Some(g) = images.iter().position(|m| m.nrows() != k || m.ncols() != k) {
            return bad(format!("image of {} is not {k}x{k}", group.label(GroupElement::from_index(g))));
        }
        let id = CMatrix::identity(k, k);
        if max_abs_diff(&images[0], &id) > tol {
            return bad("identity must map to the identity matrix".into());
        }
        for g in group.elements() {
            let pg = &images[g.index()];
            if max_abs_diff(&(pg.adjoint() * pg), &id) > tol {
                return bad(format!("image of {} is not unitary", group.label(g)));
            }
            for h in group.elements() {
                let lhs = pg * &images[h.index()];
                if max_abs_diff(&lhs, &images[group.mul(g, h).index()]) > tol {
                    return bad(format!(
                        "pi({})pi({}) != pi({})",
                        group.label(g),
                        group.label(h),
                        group.label(group.mul(g, h))
                    ));
                }
            }
        }
        Ok(UnitaryRepresentation {
            group,
            degree: k,
            images,
            irreducible,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// User-declared; never verified.
    pub fn is_irreducible(&self) -> bool {
        self.irreducible
    }

    pub fn image(&self, g: GroupElement) -> &CMatrix {
        &self.images[g.index()]
    }

    pub fn images(&self) -> &[CMatrix] {
        &self.images
    }

    /// `π(a) = Σ a_x π(x)`.
    pub fn apply(&self, a: &AlgebraElement) -> CMatrix {
        let mut out = CMatrix::zeros(self.degree, self.degree);
        for (x, c) in a.terms() {
            out += self.image(x) * c;
        }
        out
    }

    /// `+1` or `-1` if `π(g) = ±I` within `tol`, otherwise `None`.
    pub fn scalar_sign(&self, g: GroupElement, tol: f64) -> Option<i8> {
        let id = CMatrix::identity(self.degree, self.degree);
        let pg = self.image(g);
        if max_abs_diff(pg, &id) <= tol {
            Some(1)
        } else if max_abs_diff(pg, &(-id)) <= tol {
            Some(-1)
        } else {
            None
        }
    }
}

/// Built-in representation families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepresentationKind {
    Trivial,
    /// A ±1 character with kernel of index two.
    SignCharacter,
    /// `a ↦ e^{2πia/n}` on a cyclic group.
    RootOfUnity,
    /// The two-dimensional irreducible representation of Q8.
    Q8TwoDim,
    Regular,
}

impl RepresentationKind {
    pub const ALL: [RepresentationKind; 5] = [
        RepresentationKind::Trivial,
        RepresentationKind::SignCharacter,
        RepresentationKind::RootOfUnity,
        RepresentationKind::Q8TwoDim,
        RepresentationKind::Regular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RepresentationKind::Trivial => "trivial",
            RepresentationKind::SignCharacter => "sign",
            RepresentationKind::RootOfUnity => "root_of_unity",
            RepresentationKind::Q8TwoDim => "q8_2dim",
            RepresentationKind::Regular => "regular",
        }
    }
}

impl fmt::Display for RepresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RepresentationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace('-', "_");
        RepresentationKind::ALL
            .into_iter()
            .find(|k| k.name() == s || (s == "sign_character" && *k == RepresentationKind::SignCharacter))
            .ok_or_else(|| Error::Parse(format!("unknown representation kind {s:?}")))
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn scalar(z: Complex64) -> CMatrix {
    CMatrix::from_element(1, 1, z)
}

pub fn builtin_representation(group: &Arc<FiniteGroup>, kind: RepresentationKind) -> Result<UnitaryRepresentation> {
    let not_applicable = || Error::RepresentationNotApplicable {
        kind: kind.name().into(),
        group: group.name().into(),
    };
    let n = group.order();
    let (images, irreducible) = match kind {
        RepresentationKind::Trivial => (vec![scalar(c(1.0, 0.0)); n], true),
        RepresentationKind::SignCharacter => {
            let kernel = index_two_subgroup(group).ok_or_else(not_applicable)?;
            let images = group
                .elements()
                .map(|g| scalar(c(if kernel.contains(&g) { 1.0 } else { -1.0 }, 0.0)))
                .collect();
            (images, true)
        }
        RepresentationKind::RootOfUnity => {
            if !matches!(group.spec(), GroupSpec::Cyclic { .. } | GroupSpec::Sign | GroupSpec::T4) {
                return Err(not_applicable());
            }
            let images = (0..n)
                .map(|a| scalar(Complex64::from_polar(1.0, std::f64::consts::TAU * a as f64 / n as f64)))
                .collect();
            (images, true)
        }
        RepresentationKind::Q8TwoDim => {
            if !matches!(group.spec(), GroupSpec::Quaternion8) {
                return Err(not_applicable());
            }
            let (o, l) = (c(0.0, 0.0), c(1.0, 0.0));
            let (i, ni) = (c(0.0, 1.0), c(0.0, -1.0));
            let units = [
                ("1", CMatrix::identity(2, 2)),
                ("i", CMatrix::from_row_slice(2, 2, &[o, -l, l, o])),
                ("j", CMatrix::from_row_slice(2, 2, &[o, i, i, o])),
                ("k", CMatrix::from_row_slice(2, 2, &[ni, o, o, i])),
            ];
            let mut images = vec![CMatrix::zeros(2, 2); n];
            for (label, m) in units {
                images[group.by_label(label)?.index()] = m.clone();
                images[group.by_label(&format!("-{label}"))?.index()] = -m;
            }
            (images, true)
        }
        RepresentationKind::Regular => {
            // π(g) e_h = e_{gh}
            let images = group
                .elements()
                .map(|g| {
                    let mut m = CMatrix::zeros(n, n);
                    for h in group.elements() {
                        m[(group.mul(g, h).index(), h.index())] = c(1.0, 0.0);
                    }
                    m
                })
                .collect();
            (images, n == 1)
        }
    };
    UnitaryRepresentation::new(group.clone(), images, irreducible)
}

/// A subgroup of index two, if one exists. Every such subgroup contains all
/// squares, and the quotient by the square subgroup is an elementary abelian
/// 2-group, so a maximal subgroup avoiding one outside element is a
/// hyperplane there.
fn index_two_subgroup(group: &FiniteGroup) -> Option<Vec<GroupElement>> {
    let squares: Vec<_> = group.elements().map(|g| group.mul(g, g)).collect();
    let mut gens = squares.clone();
    let mut m = group.subgroup_generated(&gens);
    let avoid = group.elements().find(|g| !m.contains(g))?;
    for g in group.elements() {
        if m.contains(&g) {
            continue;
        }
        gens.push(g);
        let candidate = group.subgroup_generated(&gens);
        if candidate.contains(&avoid) {
            gens.pop();
        } else {
            m = candidate;
        }
    }
    debug_assert_eq!(m.len() * 2, group.order());
    Some(m)
}

/// A complex matrix made of `k × k` blocks.
#[derive(Clone, Debug, PartialEq)]
pub struct RepresentedMatrix {
    pub block_rows: usize,
    pub block_cols: usize,
    pub degree: usize,
    pub data: CMatrix,
}

impl RepresentedMatrix {
    pub fn block(&self, i: usize, j: usize) -> CMatrix {
        let k = self.degree;
        self.data.view((i * k, j * k), (k, k)).into_owned()
    }

    pub fn is_square(&self) -> bool {
        self.data.nrows() == self.data.ncols()
    }

    /// `max |M − M*|`.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        max_abs_diff(&self.data, &self.data.adjoint())
    }
}

/// `Â(π)`: block `(i, j)` is `Σ a_x π(x)` for the entry `a = A_{i,j}`.
pub fn fourier(a: &CGMatrix, pi: &UnitaryRepresentation) -> Result<RepresentedMatrix> {
    if !same_group(a.group(), &pi.group) {
        return Err(Error::GroupMismatch);
    }
    let k = pi.degree;
    let mut data = CMatrix::zeros(a.rows() * k, a.cols() * k);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let entry = a.get(i, j);
            if !entry.is_zero() {
                data.view_mut((i * k, j * k), (k, k)).copy_from(&pi.apply(entry));
            }
        }
    }
    Ok(RepresentedMatrix {
        block_rows: a.rows(),
        block_cols: a.cols(),
        degree: k,
        data,
    })
}

/// `I_n ⊗ π(g)`.
pub fn block_scalar(n: usize, pi: &UnitaryRepresentation, g: GroupElement) -> CMatrix {
    let k = pi.degree;
    let mut out = CMatrix::zeros(n * k, n * k);
    for i in 0..n {
        out.view_mut((i * k, i * k), (k, k)).copy_from(pi.image(g));
    }
    out
}

/// Represented adjacency and `s`-Laplacian of a gain graph.
#[derive(Clone, Debug)]
pub struct RepresentedGainMatrices {
    pub adjacency: RepresentedMatrix,
    pub laplacian: RepresentedMatrix,
}

pub fn represented_gain_matrices(
    psi: &GainFunction,
    s: CentralWeakInvolution,
    pi: &UnitaryRepresentation,
) -> Result<RepresentedGainMatrices> {
    Ok(RepresentedGainMatrices {
        adjacency: fourier(&gain_adjacency(psi), pi)?,
        laplacian: fourier(&s_laplacian(psi, s)?, pi)?,
    })
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}
