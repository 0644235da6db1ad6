//! Odd reflections, star actions and inclusions of primitive ideals for
//! basic classical Lie superalgebras and q(n), in exact rational arithmetic.

pub mod borel;
pub mod chars;
pub mod error;
pub mod generic;
pub mod kl;
pub mod linalg;
pub mod primposet;
pub mod rootdata;
pub mod star;
pub mod typicality;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
pub use rootdata::{Family, Kind, RootSystem};
pub use weight::{Weight, Q};
