//! Exact arithmetic on the norm-one conic `x^2 + D y^2 = z^2`.
//!
//! Rational points `(a + b sqrt(-D)) / c` with `a^2 + D b^2 = c^2` form an
//! abelian group under multiplication. When `D` is squarefree, congruent to
//! 1 or 2 mod 4, and the form class group of discriminant `-4D` is an
//! elementary abelian 2-group, that group is `{+1, -1}` times a free abelian
//! group generated by one element `zeta_p` per prime `p` with `(-D/p) = 1`.
//! This crate builds those generators, factors points over them, and
//! enumerates every primitive positive solution for a given `z`.
//!
//! Modules:
//! - [`arith`]: gcd, integer square roots, primality, factorization, Kronecker symbol.
//! - [`quadform`]: reduced binary quadratic forms and the class-group verdict.
//! - [`conic`]: group elements, generators, factorization, enumeration.
//! - [`oracle`]: brute-force solver used to cross-check enumeration.

pub mod arith;
pub mod conic;
pub mod error;
pub mod oracle;
pub mod quadform;

pub use conic::{
    Conic, FactorizationResult, GroupElement, Guarantee, Solution, SolutionSet, Triple,
    ZetaGenerator,
};
pub use error::{Error, Result};
pub use quadform::{Applicability, ClassGroupReport, QuadraticForm, Reason};
