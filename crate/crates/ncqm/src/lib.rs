//! Rotationally invariant noncommutative coordinate algebra, two-particle
//! composition rules and hydrogen-atom energy-level corrections.
//!
//! The crate has four layers:
//!
//! * [`algebra`] — exact symbolic commutator calculus over the canonical
//!   generators; verifies every commutation relation and operator identity.
//! * [`twobody`] — effective noncommutativity tensors for the center of mass
//!   and the relative motion of a two-particle system.
//! * [`hydrogen`] — special functions, wavefunctions and the perturbative
//!   energy corrections, with an independent quadrature oracle.
//! * [`quadrature`] — non-perturbative spectral evaluation of the s-level
//!   operator integral and extraction of its universal slope constant.
//!
//! Everything works in reduced units ħ = e = μ = 1 (so the reduced Bohr
//! radius is 1); the noncommutativity strength enters through a single
//! dimensionless constant.

pub mod algebra;
pub mod cli;
pub mod coeff;
pub mod hydrogen;
pub mod integrate;
pub mod quadrature;
pub mod report;
pub mod twobody;
