//! Exact combinatorics of affine type-A highest-weight crystals.
//!
//! The crate implements, in exact integer/Laurent-polynomial arithmetic:
//!
//! * crystal operators on multipartitions with a multicharge
//!   ([`partitions`]);
//! * weight-lattice bookkeeping — contents, hubs, defects, Weyl reflections
//!   ([`weights`]);
//! * block-reduced crystal graphs, their finite faces, the lowest vertex ρ,
//!   and the face involution τ ([`crystal`]);
//! * a q-Fock-space engine with divided powers and path evaluation
//!   ([`fock`]);
//! * canonical basis elements via the recursive bar-symmetrization
//!   algorithm, stripping of path vectors, shapes, and wedges
//!   ([`canonical`]);
//! * non-recursive closed forms for two-residue faces — classification and
//!   counts of the reachable regular multipartitions, the explicit Fock
//!   expansion of two-step paths, and shape products ([`closedform`]) — each
//!   verified against the brute-force engines;
//! * the verification suites wiring the two sides together ([`verify`]).
//!
//! Everything is deterministic: vectors iterate in a canonical order, graph
//! construction is breadth-first with sorted frontiers, and randomized suites
//! take explicit seeds.

pub mod canonical;
pub mod closedform;
pub mod crystal;
pub mod error;
pub mod fock;
pub mod partitions;
pub mod qpoly;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
