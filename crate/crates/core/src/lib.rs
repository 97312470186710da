//! Spectral laboratory for the Dirichlet Laplacian on double-periodic
//! perforated planes with semi-infinite row inclusions.

pub mod geometry;

pub use geometry::{CellSpec, DomainMask, GridSpec, StripSpec, WindowSpec};
