//! Exact polynomial arithmetic over `GF(p)` on the `m × n` variable grid,
//! lexicographic term orders, Buchberger's algorithm and ideal intersection.

mod field;
mod groebner;
mod ideal;
mod monomial;
mod order;
mod poly;

pub use field::Fp;
pub use groebner::{buchberger, normal_form, s_polynomial};
pub use ideal::{ideals_equal, initial_ideal, intersect, Ideal};
pub use monomial::{Monomial, MAX_VARS};
pub use order::TermOrder;
pub use poly::{PolyRing, Polynomial, RingDescriptor, Term};
