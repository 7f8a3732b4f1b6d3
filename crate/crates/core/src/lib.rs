//! Endomorphism monoids of finite directed paths.
//!
//! The directed path on `n` vertices has vertex set `{1, .., n}` and the
//! arcs `(1,2), (2,3), .., (n-1,n)`. This crate models its self-maps as
//! [`PathTransformation`] values and answers the structural questions:
//! which maps respect arcs ([`wend`] has the five membership predicates),
//! how many there are ([`wend::count`]), how to enumerate them
//! ([`wend::enumerate`]), which are idempotent or regular, and how every
//! weak endomorphism factors over a smallest generating set
//! ([`generators::factorize`], [`generators::certify_rank`]).
//!
//! ```
//! use dipath::{generators, wend, PathTransformation};
//!
//! let f: PathTransformation = "[1,2,2]".parse()?;
//! assert!(f.is_weak_endomorphism());
//!
//! let word = generators::factorize(&f)?;
//! assert_eq!(word.to_string(), "b2 a1");
//! assert_eq!(word.evaluate(), f);
//!
//! assert_eq!(wend::count(3), 8u32.into());
//! # Ok::<(), dipath::Error>(())
//! ```
#![forbid(unsafe_code)]

mod error;
pub mod generators;
pub mod transform;
pub mod wend;

pub use error::Error;
pub use generators::{GeneratorKind, GeneratorSymbol, GeneratorWord, RankCertificate};
pub use transform::{KernelPartition, PathTransformation};
pub use wend::{ClassificationReport, WendEncoding};
