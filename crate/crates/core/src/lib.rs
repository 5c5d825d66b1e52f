//! Quaternary linear codes over ℤ₄: the Gray map, Galois rings GR(4^m),
//! Kerdock and Preparata codes and their relatives, weight enumerators,
//! decoders and verification tools.

pub mod error;
pub mod code;
pub mod decode;
pub mod enumerator;
pub mod galois;
pub mod linearity;
pub mod analysis;
pub mod xform;
pub mod z4;

pub use error::{Error, Result};
