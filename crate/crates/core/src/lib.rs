//! Gain graphs over finite groups, G-phases, and gain-line graphs.
//!
//! A gain graph labels each oriented edge of a simple graph with an element
//! of a finite group `G`, with the reverse orientation carrying the inverse.
//! A G-phase is an incidence-shaped matrix over `G` that induces a gain
//! function on the graph and another on its line graph; this crate builds
//! those functions, decides balance, switching equivalence and orbit
//! membership, recognizes gain-line functions, and computes represented
//! spectra through unitary representations of `G`.

pub mod algebra;
pub mod eigen;
pub mod error;
pub mod gain;
pub mod graph;
pub mod group;
pub mod io;
pub mod phase;
pub mod repr;
pub mod spectral;

pub use algebra::{AlgebraElement, CGMatrix, Side};
pub use eigen::{hermitian_spectrum, Spectrum};
pub use error::{Error, Result};
pub use gain::{GainFunction, SwitchingFunction};
pub use graph::{line_graph, LineGraphData, Orientation, SimpleGraph};
pub use group::{CentralWeakInvolution, FiniteGroup, GroupElement, GroupSpec};
pub use phase::{GPhase, OrbitKind, PhaseContext};
pub use repr::{builtin_representation, RepresentationKind, RepresentedMatrix, UnitaryRepresentation};
pub use spectral::{gainline_obstruction, ObstructionRule, ObstructionVerdict, S2Class};
