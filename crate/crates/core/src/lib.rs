//! Independence spectra of finite simple graphs.
//!
//! The spectrum of a graph is the set of sizes of its maximal independent
//! sets; a graph with exactly `t` sizes is in the class `M_t`. This crate
//! provides:
//!
//! * [`Graph`] and [`VertexSet`], with structural queries in [`structure`]
//!   and the families used for experiments in [`families`];
//! * maximal independent set enumeration and spectra in [`mis`];
//! * the [`graph6`] codec;
//! * canonical labelling ([`canon`]) and isomorph-free generation under
//!   degree and girth constraints ([`search`]);
//! * executable checks of spectrum identities and the large-girth witness
//!   in [`verify`].
//!
//! The crate is `no_std` and needs only `alloc`. Enable the `serde` feature
//! for serialisable reports.

#![no_std]

extern crate alloc;

pub mod canon;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod mis;
pub mod search;
pub mod structure;
pub mod verify;
mod vertex_set;

#[cfg(feature = "serde")]
mod serde_support;

pub use error::{Graph6Error, GraphError, MisError, SearchError, VerifyError};
pub use graph::{Graph, GraphBuilder};
pub use mis::{enumerate_mis, m_class, spectrum, ClassReport, Spectrum};
pub use structure::Girth;
pub use vertex_set::VertexSet;
