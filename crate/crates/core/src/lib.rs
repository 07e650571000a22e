#![allow(clippy::needless_range_loop)]

pub mod cumulants;
pub mod gallery;
pub mod maps;
pub mod polycore;
pub mod posets;
pub mod varieties;
