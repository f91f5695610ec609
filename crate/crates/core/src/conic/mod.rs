//! The group `G_D(Q)` of rational points on `x^2 + D y^2 = 1`.
//!
//! [`Conic`] carries `D` together with a record of whether `D` satisfies the
//! hypotheses of the structure theorem. Under those hypotheses every element
//! factors uniquely as `± prod zeta_p^{e_p}`, where `zeta_p = (x + y sqrt(-D)) / p`
//! is built from the unique primitive positive solution of `x^2 + D y^2 = p^2`,
//! and the normalized solutions with a given `c` are in bijection with the
//! sign patterns `zeta_{p_1}^{n_1} zeta_{p_2}^{±n_2} ... zeta_{p_k}^{±n_k}`.

mod element;
mod enumerate;
mod factor;
mod zeta;

use std::collections::BTreeMap;

use serde::Serialize;

pub use element::{GroupElement, Triple};
pub use enumerate::{Solution, SolutionSet};
pub use factor::FactorizationResult;
pub use zeta::{unique_prime_solution, ZetaGenerator};

use crate::arith::{gcd, is_prime, kronecker};
use crate::error::{Error, Result};
use crate::quadform::is_theorem_applicable;

/// Whether results are backed by the structure theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Guarantee {
    /// `D` passed the applicability check.
    Theorem,
    /// The caller overrode the check; results are computed the same way but
    /// carry no guarantee.
    Unverified,
}

#[derive(Debug, Clone)]
pub struct Conic {
    d: u64,
    guarantee: Guarantee,
    generators: BTreeMap<u64, (i128, i128)>,
}

impl Conic {
    /// Fails with [`Error::NotApplicable`] unless `D` is squarefree,
    /// `1` or `2 mod 4`, and `C(-4D)` is elementary abelian of exponent 2.
    pub fn new(d: u64) -> Result<Self> {
        let verdict = is_theorem_applicable(d)?;
        if !verdict.is_applicable() {
            return Err(Error::NotApplicable {
                d,
                reasons: verdict.reasons,
            });
        }
        Ok(Conic {
            d,
            guarantee: Guarantee::Theorem,
            generators: BTreeMap::new(),
        })
    }

    /// Skips the applicability check. Use [`Conic::guarantee`] to tell the
    /// two apart downstream.
    pub fn unverified(d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroD);
        }
        let guarantee = match is_theorem_applicable(d) {
            Ok(v) if v.is_applicable() => Guarantee::Theorem,
            _ => Guarantee::Unverified,
        };
        Ok(Conic {
            d,
            guarantee,
            generators: BTreeMap::new(),
        })
    }

    /// Seeds known generators `(p, a, b)`. Each entry is revalidated: `p` an
    /// odd prime with `(-D/p) = 1`, `a, b > 0`, `gcd(a, b) = 1` and
    /// `a^2 + D b^2 = p^2`.
    pub fn with_generators<I>(mut self, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, i128, i128)>,
    {
        for (p, a, b) in entries {
            let bad = || Error::BadGenerator { d: self.d, p, a, b };
            if !self.is_admissible_prime(p) || a < 1 || b < 1 || gcd(a, b) != 1 {
                return Err(bad());
            }
            if self.d == 1 && a > b {
                return Err(bad());
            }
            GroupElement::new(self.d, a, b, p as i128).map_err(|_| bad())?;
            self.generators.insert(p, (a, b));
        }
        Ok(self)
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn guarantee(&self) -> Guarantee {
        self.guarantee
    }

    /// `(-D / p)`.
    pub fn symbol(&self, p: u64) -> i8 {
        kronecker(-(self.d as i128), p)
    }

    /// Odd prime with `(-D/p) = 1`, i.e. a prime that splits and carries a
    /// generator.
    pub fn is_admissible_prime(&self, p: u64) -> bool {
        p > 2 && is_prime(p) && self.symbol(p) == 1
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.d)
    }

    pub fn element(&self, a: i128, b: i128, c: i128) -> Result<GroupElement> {
        GroupElement::new(self.d, a, b, c)
    }

    pub fn zeta(&self, p: u64) -> Result<ZetaGenerator> {
        if let Some(&(a, b)) = self.generators.get(&p) {
            return ZetaGenerator::from_parts(self.d, p, a, b);
        }
        ZetaGenerator::compute(self.d, p)
    }
}
