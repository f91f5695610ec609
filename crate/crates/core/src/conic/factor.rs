use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Conic, GroupElement};
use crate::arith::{factorize, valuation};
use crate::error::{Error, Result};

/// `sign * prod zeta_p^e` with primes ascending and every `e != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactorizationResult {
    pub sign: i8,
    pub factors: Vec<(u64, i64)>,
}

impl FactorizationResult {
    pub fn identity() -> Self {
        FactorizationResult {
            sign: 1,
            factors: Vec::new(),
        }
    }

    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.factors.iter().map(|&(_, e)| e)
    }

    /// The representative of the class modulo negation and conjugation whose
    /// smallest prime carries a positive exponent and whose sign is `+1`.
    pub fn gamma_class(&self) -> FactorizationResult {
        let flip = self.factors.first().is_some_and(|&(_, e)| e < 0);
        FactorizationResult {
            sign: 1,
            factors: self
                .factors
                .iter()
                .map(|&(p, e)| (p, if flip { -e } else { e }))
                .collect(),
        }
    }
}

/// `zeta_11^-1 zeta_13`-style ASCII rendering; `1` for the empty product.
impl fmt::Display for FactorizationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            f.write_str("-")?;
        }
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "zeta_{p}")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Conic {
    /// Checks that `p` may appear in a factorization over this conic.
    pub(crate) fn require_admissible(&self, p: u64) -> Result<()> {
        if self.is_admissible_prime(p) {
            Ok(())
        } else {
            Err(Error::OutsideHypotheses {
                d: self.d(),
                p,
                symbol: self.symbol(p),
            })
        }
    }

    /// `sign * prod zeta_p^e`.
    pub fn reconstruct(&self, f: &FactorizationResult) -> Result<GroupElement> {
        let mut acc = self.identity();
        for &(p, e) in &f.factors {
            let zp = self.zeta(p)?;
            acc = acc.multiply(&zp.element().power(e)?)?;
        }
        Ok(if f.sign < 0 { acc.negate() } else { acc })
    }

    /// Writes `z` as `± prod zeta_p^{±alpha_p}` over the primes of its
    /// denominator.
    ///
    /// Each prime is peeled off one power at a time: multiplying by
    /// `conj(zeta_p)` lowers the `p`-adic exponent of the denominator exactly
    /// when `zeta_p` divides `z`; otherwise multiplying by `zeta_p` must.
    pub fn factor_element(&self, z: &GroupElement) -> Result<FactorizationResult> {
        if z.d() != self.d() {
            return Err(Error::MismatchedD(self.d(), z.d()));
        }
        let c = u64::try_from(z.c())
            .map_err(|_| Error::OutOfRange(format!("denominator {} exceeds u64", z.c())))?;
        let primes = factorize(c);
        for p in primes.primes() {
            self.require_admissible(p)?;
        }

        let mut rest = *z;
        let mut factors = Vec::with_capacity(primes.len());
        for &(p, alpha) in primes.factors() {
            let zp = *self.zeta(p)?.element();
            let zp_inv = zp.conjugate();
            let mut e = 0i64;
            for remaining in (0..alpha).rev() {
                let down = rest.multiply(&zp_inv)?;
                if valuation(down.c() as u128, p as u128) == remaining {
                    rest = down;
                    e += 1;
                    continue;
                }
                let up = rest.multiply(&zp)?;
                if valuation(up.c() as u128, p as u128) == remaining {
                    rest = up;
                    e -= 1;
                    continue;
                }
                return Err(Error::FactorizationFailed { p });
            }
            if e.unsigned_abs() != alpha as u64 {
                return Err(Error::InvariantViolation(format!(
                    "exponent of zeta_{p} in {z} is {e}, expected ±{alpha}"
                )));
            }
            factors.push((p, e));
        }

        if self.d() == 1 && rest.a() == 0 {
            return Err(Error::ImaginaryUnit);
        }
        if !rest.is_sign() {
            return Err(Error::InvariantViolation(format!(
                "stripping {z} left the non-unit {rest}"
            )));
        }
        let result = FactorizationResult {
            sign: if rest.a() > 0 { 1 } else { -1 },
            factors,
        };
        if self.reconstruct(&result)? != *z {
            return Err(Error::InvariantViolation(format!(
                "{result} does not reconstruct {z}"
            )));
        }
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conic() -> Conic {
        Conic::new(105).unwrap()
    }

    #[test]
    fn factor_examples() {
        let k = conic();
        let f = k.factor_element(&k.element(137, 4, 143).unwrap()).unwrap();
        assert_eq!(f.sign, 1);
        assert_eq!(f.factors, vec![(11, 1), (13, -1)]);

        let f = k
            .factor_element(&k.element(251_792, 8321, 265_837).unwrap())
            .unwrap();
        assert_eq!(f.sign, 1);
        assert_eq!(f.factors, vec![(11, -2), (13, 3)]);

        let f = k.factor_element(&k.identity()).unwrap();
        assert_eq!(f, FactorizationResult::identity());

        let f = k.factor_element(&k.identity().negate()).unwrap();
        assert_eq!(f.sign, -1);
        assert!(f.factors.is_empty());

        let f = k.factor_element(&k.element(73, 12, 143).unwrap()).unwrap();
        assert_eq!(f.sign, -1);
        assert_eq!(f.factors, vec![(11, -1), (13, -1)]);
    }

    #[test]
    fn factor_outside_hypotheses() {
        // (1 + sqrt(-3)) / 2 has norm one but 2 carries no generator.
        let k = Conic::unverified(3).unwrap();
        let z = k.element(1, 1, 2).unwrap();
        assert_eq!(
            k.factor_element(&z),
            Err(Error::OutsideHypotheses { d: 3, p: 2, symbol: -1 })
        );

        // 5^2 + 14 * 2^2 = 9^2, but 3 has no generator for D = 14.
        let k = Conic::unverified(14).unwrap();
        let z = k.element(5, 2, 9).unwrap();
        assert!(matches!(
            k.factor_element(&z),
            Err(Error::LemmaViolated { d: 14, p: 3, .. })
        ));
    }

    #[test]
    fn gaussian_unit_is_reported() {
        let k = Conic::new(1).unwrap();
        // (16 + 63i) / 65 = i * zeta_5 * conj(zeta_13)
        let z = k.element(16, 63, 65).unwrap();
        assert_eq!(k.factor_element(&z), Err(Error::ImaginaryUnit));
        let f = k.factor_element(&k.element(63, -16, 65).unwrap()).unwrap();
        assert_eq!(f.sign, 1);
        assert_eq!(f.factors, vec![(5, 1), (13, -1)]);
    }

    #[test]
    fn gamma_class_normalizes_first_exponent() {
        let f = FactorizationResult {
            sign: -1,
            factors: vec![(11, -1), (13, -1)],
        };
        assert_eq!(f.gamma_class().factors, vec![(11, 1), (13, 1)]);
        assert_eq!(f.gamma_class().sign, 1);
        assert_eq!(f.to_string(), "-zeta_11^-1 zeta_13^-1");
        assert_eq!(FactorizationResult::identity().to_string(), "1");
    }

    #[test]
    fn reconstruct_round_trip() {
        let k = conic();
        let f = FactorizationResult {
            sign: -1,
            factors: vec![(11, 2), (13, -1), (19, 3)],
        };
        let z = k.reconstruct(&f).unwrap();
        assert_eq!(z.c(), 11 * 11 * 13 * 19 * 19 * 19);
        assert_eq!(k.factor_element(&z).unwrap(), f);
    }
}
