//! File formats, JSON reporting and the validation harness around
//! [`hexlap_core`].

pub mod edgelist;
pub mod report;
pub mod tables;
pub mod validate;

pub use hexlap_core as core;
