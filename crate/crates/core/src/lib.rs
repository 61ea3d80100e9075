//! Finite p-group engine.
//!
//! The crate is organised bottom-up:
//!
//! * [`pc`] parses power-commutator presentations (`.pcg` files), collects
//!   words into normal form, checks consistency and expands a presentation
//!   into a [`GroupTable`].
//! * [`group`] works on expanded tables: subgroups as bitsets, the
//!   characteristic series, subgroup lattices, quotients, products,
//!   automorphism actions and isomorphism testing.
//! * [`dmax`] decides d-maximality (optionally relative to an operator group),
//!   finds the subgroups guaranteed by the existence results and checks the
//!   structural theorems on concrete groups.
//! * [`constructions`] holds the named groups.
//! * [`corpus`] ingests catalogs of presentations and writes census reports.

#![forbid(unsafe_code)]

pub mod constructions;
pub mod corpus;
pub mod dmax;
pub mod error;
pub mod group;
pub mod limits;
pub mod pc;

pub use error::{Error, Result};
pub use group::{
    ActionSet, Automorphism, Bitset, GroupTable, Isomorphism, Quotient, SeriesReport, Subgroup,
};
pub use pc::{ConsistencyReport, ElementVec, PcPresentation, Word};
