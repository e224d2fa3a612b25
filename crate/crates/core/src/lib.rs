//! Exact-arithmetic kernel for constructive projective plane geometry.
//!
//! Everything here works over the rationals: points and lines are primitive
//! integer triples in canonical form, so equality, incidence and apartness are
//! all decidable and every construction is reproducible bit for bit.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the construction
//! script language and the command line live in the `pgeo` companion crate.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod axioms;
pub mod conic;
mod error;
pub mod extension;
pub mod harmonic;
pub mod linalg;
pub mod plane;
pub mod projectivity;
pub mod sample;
pub mod scalar;
pub mod spiral;

pub use error::{Error, Result};
pub use plane::{HomLine, HomPoint, Triangle};
pub use scalar::Scalar;
