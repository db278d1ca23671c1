//! Certification toolkit for weak expansion, isoperimetric inequalities and
//! ghost-operator profiles on families of finite graphs and metric spaces.

pub mod catalog;
pub mod embedding;
pub mod eigen;
pub mod error;
pub mod spectral;
pub mod generate;
pub mod metric;
pub mod par;
pub mod graph;
pub mod isoperimetry;
pub mod rat;

pub use error::{Error, Result};
pub use graph::{FiniteGraph, Girth};
pub use rat::Rat;
