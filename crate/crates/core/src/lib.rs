//! Binary linear codes with complementary duals (LCD codes).
//!
//! - [`gf2`]: bit-packed vectors and matrices over GF(2)
//! - [`code`]: linear codes, standard form, duals, minimum distance
//! - [`lcd`]: the `det(G Gᵀ)` test, hull dimension, pr-sequences, LCD subcodes
//! - [`constructions`]: closed-form witnesses and parameter bounds
//! - [`search`]: exhaustive search for `LCD[n,k]` and `LCK[n,d]`
//! - [`tabulate`]: table assembly, caching and emission

pub mod code;
pub mod constructions;
pub mod error;
pub mod gf2;
pub mod lcd;
pub mod search;
pub mod tabulate;

pub use code::{CodeParams, LinearCode};
pub use error::{Error, Result};
pub use gf2::{Gf2Matrix, Gf2Vector};
pub use lcd::{PrSequence, SubcodeCertificate};
pub use search::{SearchOptions, SearchResult, SearchSpec};
