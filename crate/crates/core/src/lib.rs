//! Exact commutative algebra over GF(2).
//!
//! The crate provides multivariate polynomial arithmetic over the two-element
//! field, Buchberger's algorithm for submodules of graded free modules,
//! minimal free resolutions with Betti tables and Hilbert series, Ext
//! modules, and syzygy-order certification, together with the specific
//! graded rings and module maps arising from 2-torus equivariant cohomology
//! and big polygon spaces.

pub mod bigpolygon;
pub mod borel;
pub mod cache;
pub mod certificate;
pub mod error;
pub mod groebner;
pub mod homalg;
pub mod koszul;
pub mod module;
pub mod oracle;
pub mod order;
pub mod poly;
pub mod ring;
pub mod sample;
pub mod selftest;
pub mod series;
pub mod syzygy;
pub mod text;

pub use error::{Error, Result};
pub use module::{FreeModule, ModuleElement, ModuleMap, PresentedModule};
pub use poly::{HomogeneousDegree, Polynomial, RingMap};
pub use ring::{GradedRing, Monomial, MAX_VARS};
