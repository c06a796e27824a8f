//! Generalized binomial edge ideals `J_{K_m,G}` of complete multipartite
//! graphs `G`.
//!
//! The crate has two halves that never share code paths:
//!
//! * [`formulas`] predicts dimension, depth, regularity, Hilbert series,
//!   multiplicity, cohomological dimension and height from the part sizes
//!   alone, using closed formulas.
//! * [`algebra`], [`monomial`] and [`graph`] form an exact oracle: reduced
//!   Gröbner bases over `GF(p)`, Hilbert series of monomial ideals by pivot
//!   recursion, Betti numbers of squarefree ideals by Hochster's formula, and
//!   brute-force cut-set enumeration.
//!
//! [`verify`] runs both and compares them invariant by invariant.
//!
//! ```
//! use bei::graph::PartiteSpec;
//! use bei::formulas::predict;
//!
//! let spec = PartiteSpec::new(3, vec![2, 2]).unwrap();
//! let p = predict(&spec, false);
//! assert_eq!((p.dim, p.depth, p.reg, p.mult), (6, 5, 2, 12));
//! ```

pub mod algebra;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod monomial;
pub mod verify;

pub use error::{Error, Result};

/// Default coefficient field characteristic.
pub const DEFAULT_PRIME: u32 = 32003;
