//! Exact finite-field algebra for the Steinberg representation of `GL_n(F_q)`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: field
//! elements live in `F_{p^e}` with `p^e <= 2^16`, linear algebra is dense
//! Gaussian elimination, and every group is finite and enumerated.
//!
//! Layout follows the objects involved:
//!
//! * [`field`] and [`linalg`]: the arithmetic substrate.
//! * [`matgroup`]: `GL_n`, its Borel/unipotent/torus subgroups, positive
//!   one-parameter actions and finite group structure (closure, series,
//!   census, word sets).
//! * [`building`]: the flag complex of `F_q^n`, its reduced chain complex and
//!   the top homology.
//! * [`steinberg`]: apartment classes, the coordinate isomorphism onto the
//!   group ring of `U`, the augmentation gate and irreducibility testing.
//! * [`grpring`]: group rings, left ideals, augmentation powers, coinvariants.
//! * [`symidentity`]: Laurent polynomials and the power-sum identity behind the
//!   `m_1 + ... + m_n` membership lemma.
//! * [`cwsolver`]: additive polynomials and Chevalley–Warning zero search.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod building;
pub mod cwsolver;
mod error;
pub mod field;
pub mod grpring;
pub mod linalg;
pub mod matgroup;
pub mod rng;
pub mod steinberg;
pub mod symidentity;

pub use error::{Error, Result};
pub use field::{AdditiveMap, Elem, Field, FieldElement};
pub use linalg::{Matrix, Subspace};
