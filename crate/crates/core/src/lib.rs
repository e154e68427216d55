pub mod cli;
pub mod code_latroids;
pub mod codes;
pub mod config;
pub mod enumerators;
pub mod error;
pub mod fq;
pub mod latroid;
pub mod isometries;
pub mod lattice;
pub mod limits;
pub mod report;
pub mod selftest;
pub mod ring;
pub mod supports;

pub use error::{Error, Result};
