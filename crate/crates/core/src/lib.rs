//! Computations with Nielsen classes of branched covers of the sphere.
//!
//! The crate builds admissible permutation tuples, decomposes Nielsen
//! classes into braid orbits, and computes the lifting invariant of 3-cycle
//! tuples through the spin double cover of the symmetric group.
//!
//! Permutations compose left to right: `σ·τ` applies `σ` first.

pub mod braid;
pub mod construct;
pub mod nielsen;
pub mod perm;
pub mod spin;
pub mod verify;

pub use nielsen::{make_tuple, NielsenTuple, Shape, TupleRecord};
pub use perm::{parse_perm, Perm};
