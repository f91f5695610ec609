use std::collections::HashSet;

use serde::Serialize;

use super::{Conic, FactorizationResult, GroupElement, Guarantee, Triple};
use crate::arith::{factorize, PrimeFactorization};
use crate::error::{Error, Result};

/// One normalized solution with the factorization of its positive point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub triple: Triple,
    /// The positive-component point that `representative` factors. For
    /// `D = 1` this is `(a + bi)/c` or `(b + ai)/c`, whichever avoids the
    /// unit `i`.
    pub element: GroupElement,
    pub representative: FactorizationResult,
}

impl Solution {
    /// Sign pattern in `T_2 / Gamma`: first exponent positive.
    pub fn gamma_class(&self) -> FactorizationResult {
        self.representative.gamma_class()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionSet {
    pub d: u64,
    pub c: u64,
    pub primes: Vec<(u64, u32)>,
    /// `2^(k-1)` when every prime of `c` is admissible, else `0`.
    pub expected: u64,
    pub guarantee: Guarantee,
    pub solutions: Vec<Solution>,
}

impl SolutionSet {
    pub fn triples(&self) -> impl Iterator<Item = &Triple> {
        self.solutions.iter().map(|s| &s.triple)
    }
}

/// Sign vectors over `k` primes, first prime toggling fastest.
fn sign_vectors(k: usize) -> impl Iterator<Item = Vec<i64>> {
    (0u64..1 << k).map(move |mask| {
        (0..k)
            .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
            .collect()
    })
}

impl Conic {
    fn checked_denominator(&self, c: u64) -> Result<(PrimeFactorization, bool)> {
        if c <= 1 {
            return Err(Error::InvalidDenominator(c));
        }
        let primes = factorize(c);
        let admissible = primes.primes().all(|p| self.is_admissible_prime(p));
        Ok((primes, admissible))
    }

    /// Number of normalized solutions with hypotenuse-like term `c`:
    /// `2^(k-1)` for `k` distinct primes when every prime of `c` is
    /// admissible, `0` otherwise.
    pub fn count_normalized(&self, c: u64) -> Result<u64> {
        let (primes, admissible) = self.checked_denominator(c)?;
        Ok(if admissible {
            1 << (primes.len() - 1)
        } else {
            0
        })
    }

    /// All `2^k` products `prod zeta_{p_i}^{±n_i}` for `c = prod p_i^{n_i}`,
    /// first prime's sign toggling fastest. Empty when some prime of `c` is
    /// not admissible.
    pub fn sign_products(&self, c: u64) -> Result<Vec<(FactorizationResult, GroupElement)>> {
        let (primes, admissible) = self.checked_denominator(c)?;
        if !admissible {
            return Ok(Vec::new());
        }
        let mut out = Vec::with_capacity(1 << primes.len());
        for signs in sign_vectors(primes.len()) {
            let f = FactorizationResult {
                sign: 1,
                factors: primes
                    .factors()
                    .iter()
                    .zip(&signs)
                    .map(|(&(p, n), s)| (p, s * n as i64))
                    .collect(),
            };
            let z = self.reconstruct(&f)?;
            out.push((f, z));
        }
        Ok(out)
    }

    /// Every normalized solution `(a, b, c)`, sorted by `a`.
    ///
    /// Evaluates `zeta_{p_1}^{n_1} prod_{i >= 2} zeta_{p_i}^{±n_i}` for each of
    /// the `2^(k-1)` sign patterns and maps each to its triple. Each triple is
    /// then paired with the factorization of its positive point, which lies
    /// in the same orbit under negation and conjugation.
    pub fn enumerate_normalized(&self, c: u64) -> Result<SolutionSet> {
        let (primes, admissible) = self.checked_denominator(c)?;
        let mut set = SolutionSet {
            d: self.d(),
            c,
            primes: primes.factors().to_vec(),
            expected: 0,
            guarantee: self.guarantee(),
            solutions: Vec::new(),
        };
        if !admissible {
            return Ok(set);
        }
        let k = primes.len();
        set.expected = 1 << (k - 1);

        let mut seen = HashSet::new();
        for tail in sign_vectors(k - 1) {
            let class = FactorizationResult {
                sign: 1,
                factors: primes
                    .factors()
                    .iter()
                    .zip(std::iter::once(1).chain(tail))
                    .map(|(&(p, n), s)| (p, s * n as i64))
                    .collect(),
            };
            let z = self.reconstruct(&class)?;
            if z.c() != c as i128 {
                return Err(Error::InvariantViolation(format!(
                    "{class} has denominator {}, expected {c}",
                    z.c()
                )));
            }
            let triple = z.to_triple()?;
            if !seen.insert(triple) {
                return Err(Error::InvariantViolation(format!(
                    "sign patterns collide on {triple}"
                )));
            }
            let (element, representative) = self.positive_representative(&triple)?;
            if representative.gamma_class() != class {
                return Err(Error::InvariantViolation(format!(
                    "{triple} factors as {representative}, outside the class of {class}"
                )));
            }
            set.solutions.push(Solution {
                triple,
                element,
                representative,
            });
        }
        set.solutions.sort_by_key(|s| s.triple);
        Ok(set)
    }

    fn positive_representative(
        &self,
        triple: &Triple,
    ) -> Result<(GroupElement, FactorizationResult)> {
        let element = triple.element();
        match self.factor_element(&element) {
            Err(Error::ImaginaryUnit) => {
                let swapped = self.element(triple.b(), triple.a(), triple.c())?;
                Ok((swapped, self.factor_element(&swapped)?))
            }
            other => Ok((element, other?)),
        }
    }
}
