#![no_std]

extern crate alloc;

pub mod error;
pub mod poly;
pub mod rootsys;
pub mod weylgroup;
pub mod klpoly;
pub mod blocks;
pub mod dirac;
pub mod verify;

pub use error::{Error, Result};
pub use blocks::{Block, LinkageMode};
pub use dirac::{ParabolicBlock, ParamReport, WeightMultiset};
pub use klpoly::{KlEngine, ParabolicType};
pub use poly::IntPoly;
pub use rootsys::{CartanType, Family, GenSet, ParabolicSubset, Root, RootSystem, Weight, Q};
pub use weylgroup::{CoxeterSystem, DescentData, Elem};
