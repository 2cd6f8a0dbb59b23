//! Casson and Milnor invariants of bottom tangles, and decision procedures
//! for clasp-pass, band-pass, band-# and band-p# equivalence of links.

pub mod braid;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod codec;
pub mod error;
pub mod magnus;
pub mod polyengine;
pub mod suites;
pub mod tangle_ops;

pub use codec::{Diagram, Kind, Passage, Role, Sign};
pub use error::{Error, Result};
pub use tangle_ops::StrandTemplate;
