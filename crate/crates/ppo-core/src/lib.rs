//! Discrete Wigner machinery for odd prime dimensions N.
//!
//! The crate builds the full chain from exact Z_N arithmetic up to the
//! spectral census of phase point operators:
//!
//! - [`field`]: Z_N arithmetic and quadratic residue structure.
//! - [`matgroup`]: SL(2,Z_N) / ESL(2,Z_N) enumeration, conjugacy classes,
//!   constructive conjugation, element orders.
//! - [`hilbert`]: displacement operators, Clifford unitaries, mutually
//!   unbiased bases, phase point operators, Wigner distributions.
//! - [`coords`]: the exact vector-space labelling of quantum nets and
//!   affine planes, group actions as matrices over Z_N, and the invariant
//!   symplectic form.
//! - [`orbits`]: fixed-point counting and Burnside / explicit orbit counts
//!   of the group actions on nets and planes.
//! - [`spectra`]: Hermitian eigensolving and the census of distinct phase
//!   point operator spectra per affine plane.
//! - [`catalog`]: the JSON catalog documents emitted by the CLI.
//! - [`verify`]: the runnable invariant suites behind `ppo verify`.
//!
//! # Example
//!
//! Count the group orbits on affine planes for a qutrit and census the
//! phase-point-operator spectra:
//!
//! ```
//! use ppo_core::coords::NetSpace;
//! use ppo_core::hilbert::Hilbert;
//! use ppo_core::orbits::{burnside_orbit_count, ActionSpace};
//! use ppo_core::spectra::{spectra_census, DEFAULT_SPECTRUM_TOL};
//! use ppo_core::{Field, GroupKind};
//!
//! let field = Field::new(3).unwrap();
//! let nets = NetSpace::new(field);
//!
//! let orbits = burnside_orbit_count(&nets, GroupKind::Esl, ActionSpace::Planes);
//! assert_eq!(orbits, 2);
//!
//! let census = spectra_census(&Hilbert::new(field), &nets, DEFAULT_SPECTRUM_TOL).unwrap();
//! assert_eq!(census.classes.len(), 2);
//! let counts: Vec<u64> = census.classes.iter().map(|c| c.count).collect();
//! assert_eq!(counts, vec![1, 8]);
//! ```

pub mod catalog;
pub mod cmatrix;
pub mod coords;
pub mod eigen;
pub mod field;
pub mod hilbert;
pub mod matgroup;
pub mod modmat;
pub mod orbits;
pub mod reference;
pub mod rng;
pub mod spectra;
pub mod verify;

pub use field::{Field, FieldElem, FieldError, ResidueSets};
pub use matgroup::{ConjClass, GroupElem, GroupError, GroupKind};
