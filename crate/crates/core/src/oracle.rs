//! Brute-force solver for `x^2 + D y^2 = z^2`, independent of the group
//! machinery, and a sweep that cross-checks the two.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{gcd, integer_sqrt, is_perfect_square};
use crate::conic::{Conic, Triple};
use crate::error::{Error, Result};

/// Every `(a, b, c)` with `a, b >= 1`, `a^2 + D b^2 = c^2` and
/// `gcd(a, b, c) = 1`, found by scanning `b`. For `D = 1` each unordered
/// pair appears once with `a <= b`. Sorted by `a`.
pub fn brute_force_solutions(d: u64, c: u64) -> Result<Vec<Triple>> {
    if d == 0 {
        return Err(Error::ZeroD);
    }
    let cc = (c as u128) * (c as u128);
    let dd = d as u128;
    let b_max = if cc == 0 { 0 } else { integer_sqrt((cc - 1) / dd) };
    let mut out = Vec::new();
    for b in 1..=b_max {
        let rest = cc - dd * b * b;
        let Some(a) = is_perfect_square(rest) else {
            continue;
        };
        if a == 0 || (d == 1 && a > b) {
            continue;
        }
        let (a, b, c) = (a as i128, b as i128, c as i128);
        if gcd(gcd(a, b), c) != 1 {
            continue;
        }
        out.push(Triple::new(d, a, b, c)?);
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub c: u64,
    pub enumerated: Vec<Triple>,
    pub brute_force: Vec<Triple>,
    pub expected_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub d: u64,
    pub c_max: u64,
    pub checked: u64,
    pub nonempty: u64,
    pub solutions: u64,
    pub mismatches: Vec<Mismatch>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares [`Conic::enumerate_normalized`] with [`brute_force_solutions`]
/// and the `2^(k-1)` count law for every `c` in `2..=c_max`.
pub fn sweep_verify(d: u64, c_max: u64) -> Result<SweepReport> {
    sweep_with(&Conic::new(d)?, c_max)
}

/// As [`sweep_verify`] over an already constructed conic, which may be
/// unverified.
pub fn sweep_with(conic: &Conic, c_max: u64) -> Result<SweepReport> {
    let d = conic.d();
    let mut report = SweepReport {
        d,
        c_max,
        checked: 0,
        nonempty: 0,
        solutions: 0,
        mismatches: Vec::new(),
    };
    for c in 2..=c_max {
        let set = conic.enumerate_normalized(c)?;
        let expected_count = conic.count_normalized(c)?;
        let enumerated: Vec<Triple> = set.triples().copied().collect();
        let brute_force = brute_force_solutions(d, c)?;

        let same_set = enumerated.iter().collect::<BTreeSet<_>>()
            == brute_force.iter().collect::<BTreeSet<_>>();
        let count_ok = enumerated.len() as u64 == expected_count
            && brute_force.len() as u64 == expected_count;
        report.checked += 1;
        if !brute_force.is_empty() {
            report.nonempty += 1;
        }
        report.solutions += brute_force.len() as u64;
        if !(same_set && count_ok) {
            report.mismatches.push(Mismatch {
                c,
                enumerated,
                brute_force,
                expected_count,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc(v: &[Triple]) -> Vec<(i128, i128, i128)> {
        v.iter().map(|t| (t.a(), t.b(), t.c())).collect()
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(abc(&brute_force_solutions(105, 11).unwrap()), vec![(4, 1, 11)]);
        assert_eq!(
            abc(&brute_force_solutions(105, 247).unwrap()),
            vec![(23, 24, 247), (233, 8, 247)]
        );
        assert_eq!(
            abc(&brute_force_solutions(1, 65).unwrap()),
            vec![(16, 63, 65), (33, 56, 65)]
        );
        assert!(brute_force_solutions(1, 1).unwrap().is_empty());
        assert!(brute_force_solutions(1, 10).unwrap().is_empty());
    }

    #[test]
    fn brute_force_keeps_only_primitive() {
        // (6, 8, 10) and (9, 12, 15) are imprimitive.
        assert!(brute_force_solutions(1, 15).unwrap().is_empty());
        assert_eq!(abc(&brute_force_solutions(1, 25).unwrap()), vec![(7, 24, 25)]);
    }

    #[test]
    fn small_sweeps_are_clean() {
        for d in [1, 2, 5, 6, 105] {
            let r = sweep_verify(d, 300).unwrap();
            assert!(r.is_clean(), "D = {d}: {:?}", r.mismatches);
            assert_eq!(r.checked, 299);
        }
    }

    #[test]
    fn sweep_detects_failure_outside_hypotheses() {
        // C(-56) has order-4 elements, so the count law breaks for D = 14.
        let r = sweep_with(&Conic::unverified(14).unwrap(), 30);
        assert!(r.is_err() || !r.unwrap().is_clean());
        assert!(matches!(sweep_verify(14, 30), Err(Error::NotApplicable { .. })));
    }
}
