//! Exact computer algebra for weighted-graded (skew-)commutative polynomial
//! rings over the rationals.
//!
//! The kernel covers sparse polynomial arithmetic with even and odd
//! variables, exact linear rank, Buchberger's algorithm, Hilbert series of
//! graded quotients, rational generating functions, and a rewriting calculus
//! for twisted-kappa classes on the moduli stack of rank-two bundles over
//! genus-two curves. [`suite`] reproduces the ring-level computations that
//! underlie the known presentations of these Chow rings.

pub mod error;
pub mod expr;
pub mod groebner;
pub mod hilbert;
pub mod kappa;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod series;
pub mod specfile;
pub mod suite;
pub mod upoly;

pub use error::{Error, Result};
pub use expr::{parse_poly, parse_poly_with};
pub use groebner::{groebner_basis, is_member, normal_form, GroebnerBasis, Ideal};
pub use hilbert::hilbert_series;
pub use linalg::rank_of_span;
pub use monomial::{Monomial, MonomialOrdering};
pub use poly::{print_poly, Degree, Polynomial};
pub use rational::ExactRational;
pub use ring::{make_ring, Parity, Ring, RingSpec, VarSpec};
pub use series::RationalSeries;
