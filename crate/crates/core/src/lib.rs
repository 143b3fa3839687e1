//! Exact verification engine for mirror arrangements of the Eisenstein
//! lattice of signature (13,1) and the braid-type presentations built on it.

pub mod exactnum;
pub mod lattice;
pub mod coxbraid;
pub mod dump;
pub mod geometry;
pub mod isometries;
pub mod model;
pub mod report;
pub mod suites;
