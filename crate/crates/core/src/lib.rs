//! Exact autocommuting probability `Pr(H, Aut(G))` for finite groups given
//! by Cayley tables, together with the bounds, equality cases and
//! autoisoclinism invariance that relate it to the structure of `H`.
//!
//! Elements are indices into a table with the identity at `0`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod action;
pub mod aut;
pub mod bounds;
pub mod catalog;
pub mod degree;
pub mod error;
pub mod group;
pub mod hom;
pub mod isoclinism;
pub mod primes;
pub mod rational;
pub mod subgroup;

pub use aut::{compute_aut, compute_aut_capped, AutGroup, Automorphism};
pub use degree::{degree_report, DegreeReport, Instance};
pub use error::{Error, Result};
pub use group::{Elem, GroupTable, IDENTITY};
pub use hom::GroupHom;
pub use rational::Rational;
pub use subgroup::SubgroupSet;
