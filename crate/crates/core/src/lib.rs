//! Combinatorics of Bott-Samelson-Demazure-Hansen varieties.
//!
//! Everything here is exact integer arithmetic on the weight lattice of a
//! finite root system:
//!
//! * [`rootsys`]: Cartan types, weights, roots and the highest root.
//! * [`weyl`]: Weyl group elements, reduced words, Bruhat order.
//! * [`character`]: formal characters and Demazure operators.
//! * [`bsdh`]: the sets `J'(w,i)`, `J(w,i)`, `supp(w)` and tangent-bundle
//!   characters of `Z(w,i)`.
//! * [`autcls`]: classification of the connected automorphism group as a
//!   parabolic subgroup.
//!
//! Simple-root indices are 0-based throughout this crate. Front ends that
//! talk to people convert to 1-based at their boundary.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod autcls;
pub mod bsdh;
pub mod character;
mod error;
mod linalg;
pub mod rootsys;
pub mod weyl;

pub use autcls::{classify, classify_all_w0, AutReport, AutStatus};
pub use bsdh::{BsdhWord, KernelReport, TangentMode, TangentReport};
pub use character::Character;
pub use error::{Error, Result};
pub use rootsys::{CartanType, Family, Root, RootSystem, Weight};
pub use weyl::{ReducedWords, WeylElement, Word};
