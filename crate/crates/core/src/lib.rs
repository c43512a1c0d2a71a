//! Numerical core for the Fourier–Borel functional calculus `F(-uA)` of
//! analytic semigroups on sectors.
//!
//! The crate is `no_std` (with `alloc`) when built without the default `std`
//! feature; enable `libm` in that configuration for the float intrinsics.
//!
//! Layout:
//! - [`geometry`]: sectors, rays and polylines in the complex plane;
//! - [`measure`]: compactly supported complex measures made of atoms and
//!   Cauchy-kernel contour components;
//! - [`transform`]: evaluation of Fourier–Borel transforms and their maxima
//!   along rays and sectors;
//! - [`linalg`]: dense and diagonal complex operators, `expm`, norms,
//!   spectral radii and resolvents;
//! - [`operator`]: finite-dimensional semigroup models;
//! - [`calculus`]: the functional calculus itself together with the identity,
//!   bound and lower-bound probes built on it;
//! - [`jordan`]: constructive Jordan-curve certificates for real-on-the-axis
//!   transforms.

#![cfg_attr(not(feature = "std"), no_std)]
// `!(x > 0.0)` is used deliberately so that NaN is rejected
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod calculus;
pub mod error;
pub mod geometry;
pub mod jordan;
pub mod linalg;
pub mod measure;
pub mod operator;
pub mod optimize;
pub mod quadrature;
pub mod transform;

mod prelude;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
