use serde::Serialize;

use super::GroupElement;
use crate::arith::{gcd, integer_sqrt, is_perfect_square, is_prime, kronecker};
use crate::error::{Error, Result};

/// The unique `(a, b)` with `a, b > 0`, `gcd(a, b) = 1` and
/// `a^2 + D b^2 = p^2`, for an odd prime `p` with `(-D/p) = 1`.
///
/// For `D = 1` the unordered pair is returned with `a <= b`.
///
/// The search scans every `b` up to `sqrt((p^2 - 1) / D)` and keeps going
/// after the first hit so that a second solution is reported rather than
/// silently ignored.
pub fn unique_prime_solution(d: u64, p: u64) -> Result<(i128, i128)> {
    if d == 0 {
        return Err(Error::ZeroD);
    }
    if p <= 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let symbol = kronecker(-(d as i128), p);
    if symbol != 1 {
        return Err(Error::OutsideHypotheses { d, p, symbol });
    }

    let pp = (p as u128) * (p as u128);
    let d = d as u128;
    let b_max = integer_sqrt((pp - 1) / d);
    let mut found = Vec::new();
    for b in 1..=b_max {
        let Some(a) = is_perfect_square(pp - d * b * b) else {
            continue;
        };
        let (a, b) = (a as i128, b as i128);
        if a == 0 || gcd(a, b) != 1 || (d == 1 && a > b) {
            continue;
        }
        found.push((a, b));
    }
    match found.as_slice() {
        [pair] => Ok(*pair),
        _ => Err(Error::LemmaViolated {
            d: d as u64,
            p,
            found: found.len(),
        }),
    }
}

/// `zeta_p = (a + b sqrt(-D)) / p` with `a, b > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZetaGenerator {
    p: u64,
    element: GroupElement,
}

impl ZetaGenerator {
    pub(crate) fn compute(d: u64, p: u64) -> Result<Self> {
        let (a, b) = unique_prime_solution(d, p)?;
        Self::from_parts(d, p, a, b)
    }

    pub(crate) fn from_parts(d: u64, p: u64, a: i128, b: i128) -> Result<Self> {
        let element = GroupElement::new(d, a, b, p as i128)?;
        Ok(ZetaGenerator { p, element })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn element(&self) -> &GroupElement {
        &self.element
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_solutions() {
        assert_eq!(unique_prime_solution(105, 11), Ok((4, 1)));
        assert_eq!(unique_prime_solution(105, 13), Ok((8, 1)));
        assert_eq!(unique_prime_solution(105, 19), Ok((16, 1)));
        assert_eq!(unique_prime_solution(1, 5), Ok((3, 4)));
        assert_eq!(unique_prime_solution(1, 13), Ok((5, 12)));
        assert_eq!(unique_prime_solution(2, 3), Ok((1, 2)));
    }

    #[test]
    fn prime_solution_preconditions() {
        assert_eq!(
            unique_prime_solution(105, 5),
            Err(Error::OutsideHypotheses { d: 105, p: 5, symbol: 0 })
        );
        assert_eq!(
            unique_prime_solution(1, 3),
            Err(Error::OutsideHypotheses { d: 1, p: 3, symbol: -1 })
        );
        assert_eq!(unique_prime_solution(105, 2), Err(Error::NotOddPrime(2)));
        assert_eq!(unique_prime_solution(105, 143), Err(Error::NotOddPrime(143)));
    }

    #[test]
    fn lemma_violation_is_reported() {
        // C(-56) is cyclic of order 4. p = 3 is represented by [3,2,5], so
        // p^2 lies in the class of [2,0,7] and x^2 + 14y^2 = 9 has no
        // primitive solution.
        let mut violations = 0;
        for p in (3..400u64).filter(|&p| is_prime(p)) {
            match unique_prime_solution(14, p) {
                Err(Error::LemmaViolated { found, .. }) => {
                    assert_ne!(found, 1);
                    violations += 1;
                }
                Ok(_) | Err(Error::OutsideHypotheses { .. }) => {}
                Err(e) => panic!("unexpected error {e}"),
            }
        }
        assert!(violations > 0);
    }

    #[test]
    fn zeta_examples() {
        let z = ZetaGenerator::compute(105, 13).unwrap();
        assert_eq!((z.element().a(), z.element().b(), z.element().c()), (8, 1, 13));
        let z = ZetaGenerator::compute(105, 11).unwrap();
        assert_eq!((z.element().a(), z.element().b(), z.element().c()), (4, 1, 11));
        let z = ZetaGenerator::compute(1, 13).unwrap();
        assert_eq!((z.element().a(), z.element().b(), z.element().c()), (5, 12, 13));
    }
}
