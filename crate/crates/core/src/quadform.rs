//! Reduced binary quadratic forms of negative discriminant.
//!
//! Only what is needed to decide whether the form class group of
//! discriminant `-4D` is an elementary abelian 2-group: enumeration of the
//! reduced representatives (one per class) and the order-at-most-two test for
//! a reduced form. No composition is implemented; a finite abelian group in
//! which every element has order at most two is `(Z/2)^k`, so the verdict and
//! the rank follow from the class list alone.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::arith::{factorize, integer_sqrt};
use crate::error::{Error, Result};

/// The form `a x^2 + b xy + c y^2`, primitive and positive definite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct QuadraticForm {
    a: i64,
    b: i64,
    c: i64,
}

impl QuadraticForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let f = QuadraticForm { a, b, c };
        let primitive = a.gcd(&b).gcd(&c) == 1;
        match f.checked_discriminant() {
            Some(disc) if a > 0 && disc < 0 && primitive => Ok(f),
            _ => Err(Error::InvalidForm { a, b, c }),
        }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    fn checked_discriminant(&self) -> Option<i64> {
        let bb = self.b.checked_mul(self.b)?;
        let ac4 = self.a.checked_mul(self.c)?.checked_mul(4)?;
        bb.checked_sub(ac4)
    }

    /// `b^2 - 4ac`.
    pub fn discriminant(&self) -> i64 {
        self.checked_discriminant()
            .expect("discriminant of a validated form fits in i64")
    }

    /// `|b| <= a <= c`, with `b >= 0` whenever `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
    }

    /// For a reduced form, whether its class has order at most two: `b = 0`,
    /// `a = b` or `a = c`.
    pub fn order_at_most_two(&self) -> Result<bool> {
        if !self.is_reduced() {
            return Err(Error::NotReduced {
                a: self.a,
                b: self.b,
                c: self.c,
            });
        }
        Ok(self.b == 0 || self.a == self.b || self.a == self.c)
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.a, self.b, self.c)
    }
}

/// Every reduced primitive positive definite form of discriminant `disc`,
/// ordered by `a` then `b`.
///
/// When `0 < b < a < c` both `[a, b, c]` and `[a, -b, c]` are reduced and
/// lie in distinct (mutually inverse) classes; both are returned.
pub fn enumerate_reduced_forms(disc: i64) -> Result<Vec<QuadraticForm>> {
    if disc >= 0 || !matches!(disc.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidDiscriminant(disc));
    }
    let abs_disc = disc.unsigned_abs();
    let b_max = integer_sqrt((abs_disc / 3) as u128) as i64;
    let mut forms = Vec::new();
    let mut b = disc.rem_euclid(2);
    while b <= b_max {
        // 4ac = b^2 - disc
        let ac = (b * b - disc) / 4;
        let a_min = b.max(1);
        let a_max = integer_sqrt(ac as u128) as i64;
        for a in a_min..=a_max {
            if ac % a != 0 {
                continue;
            }
            let c = ac / a;
            if a.gcd(&b).gcd(&c) != 1 {
                continue;
            }
            forms.push(QuadraticForm { a, b, c });
            if 0 < b && b < a && a < c {
                forms.push(QuadraticForm { a, b: -b, c });
            }
        }
        b += 2;
    }
    forms.sort_unstable();
    Ok(forms)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassGroupReport {
    pub d: u64,
    pub discriminant: i64,
    pub forms: Vec<QuadraticForm>,
    pub class_number: usize,
    pub is_elementary_two: bool,
    pub two_rank: Option<u32>,
}

impl ClassGroupReport {
    /// Representatives with `b >= 0` only: one per class up to inversion.
    pub fn display_forms(&self) -> Vec<QuadraticForm> {
        self.forms.iter().copied().filter(|f| f.b >= 0).collect()
    }
}

/// Class group report for discriminant `-4D`.
pub fn class_group_report(d: u64) -> Result<ClassGroupReport> {
    if d == 0 {
        return Err(Error::ZeroD);
    }
    let discriminant = i64::try_from(d)
        .ok()
        .and_then(|d| d.checked_mul(-4))
        .ok_or(Error::Overflow("class_group_report"))?;
    let forms = enumerate_reduced_forms(discriminant)?;
    let mut is_elementary_two = true;
    for f in &forms {
        is_elementary_two &= f.order_at_most_two()?;
    }
    let class_number = forms.len();
    let two_rank = if is_elementary_two {
        if !class_number.is_power_of_two() {
            return Err(Error::InvariantViolation(format!(
                "elementary abelian 2-group of order {class_number}"
            )));
        }
        Some(class_number.trailing_zeros())
    } else {
        None
    };
    Ok(ClassGroupReport {
        d,
        discriminant,
        forms,
        class_number,
        is_elementary_two,
        two_rank,
    })
}

/// Why a `D` falls outside the hypotheses of the structure theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    NotSquarefree,
    WrongResidue,
    NotElementaryTwo,
}

impl Reason {
    pub fn code(&self) -> &'static str {
        match self {
            Reason::NotSquarefree => "not_squarefree",
            Reason::WrongResidue => "wrong_residue",
            Reason::NotElementaryTwo => "not_elementary_two",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::NotSquarefree => "D is not squarefree",
            Reason::WrongResidue => "D is not congruent to 1 or 2 mod 4",
            Reason::NotElementaryTwo => "C(-4D) is not an elementary abelian 2-group",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Applicability {
    pub d: u64,
    pub squarefree: bool,
    pub residue_ok: bool,
    pub elementary_two: bool,
    pub reasons: Vec<Reason>,
}

impl Applicability {
    pub fn is_applicable(&self) -> bool {
        self.reasons.is_empty()
    }
}

/// Whether `D` is squarefree, `D = 1, 2 (mod 4)`, and `C(-4D)` is an
/// elementary abelian 2-group. `D = 1` qualifies.
pub fn is_theorem_applicable(d: u64) -> Result<Applicability> {
    let report = class_group_report(d)?;
    let squarefree = factorize(d).is_squarefree();
    let residue_ok = matches!(d % 4, 1 | 2);
    let elementary_two = report.is_elementary_two;
    let reasons = [
        (squarefree, Reason::NotSquarefree),
        (residue_ok, Reason::WrongResidue),
        (elementary_two, Reason::NotElementaryTwo),
    ]
    .into_iter()
    .filter(|&(ok, _)| !ok)
    .map(|(_, r)| r)
    .collect();
    Ok(Applicability {
        d,
        squarefree,
        residue_ok,
        elementary_two,
        reasons,
    })
}

/// Applicability verdicts for `D = 1..=max`.
pub fn convenient_sweep(max: u64) -> Result<Vec<Applicability>> {
    (1..=max).map(is_theorem_applicable).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(a: i64, b: i64, c: i64) -> QuadraticForm {
        QuadraticForm::new(a, b, c).unwrap()
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(form(1, 0, 105).discriminant(), -420);
        assert_eq!(form(11, 8, 11).discriminant(), -420);
        assert_eq!(form(1, 0, 1).discriminant(), -4);
    }

    #[test]
    fn rejects_invalid_forms() {
        assert!(QuadraticForm::new(2, 0, 4).is_err()); // imprimitive
        assert!(QuadraticForm::new(1, 3, 1).is_err()); // indefinite
        assert!(QuadraticForm::new(-1, 0, -1).is_err()); // negative definite
    }

    #[test]
    fn reduced_examples() {
        assert!(form(10, 10, 13).is_reduced());
        assert!(form(1, 0, 105).is_reduced());
        assert!(!form(105, 0, 1).is_reduced());
        assert!(!form(2, -2, 53).is_reduced());
        assert!(!form(11, -8, 11).is_reduced());
        assert!(form(3, -2, 5).is_reduced());
    }

    #[test]
    fn enumerate_420() {
        let got: Vec<_> = enumerate_reduced_forms(-420)
            .unwrap()
            .iter()
            .map(|f| (f.a, f.b, f.c))
            .collect();
        assert_eq!(
            got,
            vec![
                (1, 0, 105),
                (2, 2, 53),
                (3, 0, 35),
                (5, 0, 21),
                (6, 6, 19),
                (7, 0, 15),
                (10, 10, 13),
                (11, 8, 11)
            ]
        );
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_reduced_forms(-4).unwrap(), vec![form(1, 0, 1)]);
        assert_eq!(
            enumerate_reduced_forms(-24).unwrap(),
            vec![form(1, 0, 6), form(2, 0, 3)]
        );
        assert_eq!(
            enumerate_reduced_forms(-56).unwrap(),
            vec![form(1, 0, 14), form(2, 0, 7), form(3, -2, 5), form(3, 2, 5)]
        );
        assert_eq!(enumerate_reduced_forms(-3).unwrap(), vec![form(1, 1, 1)]);
    }

    #[test]
    fn enumerate_rejects_bad_discriminants() {
        assert_eq!(
            enumerate_reduced_forms(-6),
            Err(Error::InvalidDiscriminant(-6))
        );
        assert!(enumerate_reduced_forms(0).is_err());
        assert!(enumerate_reduced_forms(5).is_err());
    }

    #[test]
    fn order_two_examples() {
        assert_eq!(form(11, 8, 11).order_at_most_two(), Ok(true));
        assert_eq!(form(2, 2, 53).order_at_most_two(), Ok(true));
        assert_eq!(form(1, 0, 1).order_at_most_two(), Ok(true));
        assert_eq!(form(3, 2, 5).order_at_most_two(), Ok(false));
        assert!(matches!(
            form(105, 0, 1).order_at_most_two(),
            Err(Error::NotReduced { .. })
        ));
    }

    #[test]
    fn report_examples() {
        let r = class_group_report(105).unwrap();
        assert_eq!(r.discriminant, -420);
        assert_eq!(r.class_number, 8);
        assert!(r.is_elementary_two);
        assert_eq!(r.two_rank, Some(3));
        assert_eq!(r.display_forms(), r.forms);

        let r = class_group_report(1).unwrap();
        assert_eq!(r.class_number, 1);
        assert_eq!(r.two_rank, Some(0));

        let r = class_group_report(14).unwrap();
        assert!(!r.is_elementary_two);
        assert_eq!(r.two_rank, None);
        assert_eq!(r.display_forms().len(), 3);

        assert_eq!(class_group_report(0), Err(Error::ZeroD));
    }

    #[test]
    fn applicability_examples() {
        assert!(is_theorem_applicable(105).unwrap().is_applicable());
        assert!(is_theorem_applicable(1).unwrap().is_applicable());
        assert_eq!(
            is_theorem_applicable(3).unwrap().reasons,
            vec![Reason::WrongResidue]
        );
        assert_eq!(
            is_theorem_applicable(12).unwrap().reasons,
            vec![Reason::NotSquarefree, Reason::WrongResidue]
        );
        assert_eq!(
            is_theorem_applicable(14).unwrap().reasons,
            vec![Reason::NotElementaryTwo]
        );
        let eight = is_theorem_applicable(8).unwrap();
        assert!(eight.elementary_two);
        assert!(!eight.is_applicable());
    }
}
