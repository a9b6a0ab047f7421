#![allow(dead_code, clippy::needless_range_loop)]

pub mod bivariate;
pub mod linalg;
