use std::fmt;

use serde::Serialize;

use crate::arith::gcd;
use crate::error::{Error, Result};

/// A point `(a + b sqrt(-D)) / c` of norm one, in lowest terms.
///
/// Components are kept as `i128` and every product is overflow-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GroupElement {
    d: u64,
    a: i128,
    b: i128,
    c: i128,
}

fn norm(d: u64, a: i128, b: i128) -> Option<i128> {
    let aa = a.checked_mul(a)?;
    let bb = b.checked_mul(b)?.checked_mul(d as i128)?;
    aa.checked_add(bb)
}

impl GroupElement {
    /// Validates `a^2 + D b^2 = c^2`, `gcd(a, b) = 1` and `c >= 1`.
    pub fn new(d: u64, a: i128, b: i128, c: i128) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroD);
        }
        let bad = || Error::NotOnConic { d, a, b, c };
        if c < 1 || gcd(a, b) != 1 {
            return Err(bad());
        }
        let cc = c.checked_mul(c).ok_or(Error::Overflow("GroupElement::new"))?;
        match norm(d, a, b) {
            Some(n) if n == cc => Ok(GroupElement { d, a, b, c }),
            Some(_) => Err(bad()),
            None => Err(Error::Overflow("GroupElement::new")),
        }
    }

    pub fn identity(d: u64) -> Self {
        GroupElement { d, a: 1, b: 0, c: 1 }
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn a(&self) -> i128 {
        self.a
    }

    pub fn b(&self) -> i128 {
        self.b
    }

    pub fn c(&self) -> i128 {
        self.c
    }

    pub fn is_identity(&self) -> bool {
        self.a == 1 && self.b == 0
    }

    /// `+1` or `-1`.
    pub fn is_sign(&self) -> bool {
        self.b == 0
    }

    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.d != other.d {
            return Err(Error::MismatchedD(self.d, other.d));
        }
        let of = || Error::Overflow("GroupElement::multiply");
        let d = self.d as i128;
        let aa = self.a.checked_mul(other.a).ok_or_else(of)?;
        let bb = self
            .b
            .checked_mul(other.b)
            .and_then(|x| x.checked_mul(d))
            .ok_or_else(of)?;
        let ab = self.a.checked_mul(other.b).ok_or_else(of)?;
        let ba = other.a.checked_mul(self.b).ok_or_else(of)?;
        let num_a = aa.checked_sub(bb).ok_or_else(of)?;
        let num_b = ab.checked_add(ba).ok_or_else(of)?;
        let den = self.c.checked_mul(other.c).ok_or_else(of)?;

        let g = gcd(num_a, num_b);
        if g == 0 || den % g != 0 {
            return Err(Error::InvariantViolation(format!(
                "numerator gcd {g} does not divide denominator {den}"
            )));
        }
        GroupElement::new(self.d, num_a / g, num_b / g, den / g)
    }

    /// `(a - b sqrt(-D)) / c`, which is also the inverse.
    pub fn conjugate(&self) -> GroupElement {
        GroupElement { b: -self.b, ..*self }
    }

    pub fn negate(&self) -> GroupElement {
        GroupElement {
            a: -self.a,
            b: -self.b,
            ..*self
        }
    }

    /// `self^n`; negative exponents go through the conjugate.
    pub fn power(&self, n: i64) -> Result<GroupElement> {
        let mut base = if n < 0 { self.conjugate() } else { *self };
        let mut exp = n.unsigned_abs();
        let mut acc = GroupElement::identity(self.d);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.multiply(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.multiply(&base)?;
            }
        }
        Ok(acc)
    }

    /// The four images under negation and conjugation.
    pub fn gamma_orbit(&self) -> [GroupElement; 4] {
        [
            *self,
            self.negate(),
            self.conjugate(),
            self.negate().conjugate(),
        ]
    }

    /// The normalized positive triple this point represents.
    ///
    /// For `D = 1` the legs are ordered `a <= b`, which also identifies the
    /// point with its images under multiplication by `i`.
    pub fn to_triple(&self) -> Result<Triple> {
        if self.a == 0 || self.b == 0 {
            return Err(Error::TrivialPoint);
        }
        let (mut a, mut b) = (self.a.abs(), self.b.abs());
        if self.d == 1 && a > b {
            std::mem::swap(&mut a, &mut b);
        }
        Triple::new(self.d, a, b, self.c)
    }
}

/// ASCII rendering `(a+bsqrt(-D))/c`.
impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b < 0 { '-' } else { '+' };
        let coeff = self.b.unsigned_abs();
        f.write_str("(")?;
        if self.a != 0 {
            write!(f, "{}{sign}", self.a)?;
        } else if self.b < 0 {
            f.write_str("-")?;
        }
        if coeff != 1 {
            write!(f, "{coeff}")?;
        }
        write!(f, "sqrt(-{}))/{}", self.d, self.c)
    }
}

/// A normalized solution of `x^2 + D y^2 = z^2`: positive, primitive, and
/// for `D = 1` with `a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triple {
    #[serde(skip)]
    d: u64,
    a: i128,
    b: i128,
    c: i128,
}

impl Triple {
    pub fn new(d: u64, a: i128, b: i128, c: i128) -> Result<Self> {
        let bad = || Error::InvalidTriple { d, a, b, c };
        if d == 0 {
            return Err(Error::ZeroD);
        }
        if a < 1 || b < 1 || c < 1 || gcd(gcd(a, b), c) != 1 || (d == 1 && a > b) {
            return Err(bad());
        }
        let cc = c.checked_mul(c).ok_or(Error::Overflow("Triple::new"))?;
        match norm(d, a, b) {
            Some(n) if n == cc => Ok(Triple { d, a, b, c }),
            Some(_) => Err(bad()),
            None => Err(Error::Overflow("Triple::new")),
        }
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn a(&self) -> i128 {
        self.a
    }

    pub fn b(&self) -> i128 {
        self.b
    }

    pub fn c(&self) -> i128 {
        self.c
    }

    /// The point `(a + b sqrt(-D)) / c` with both components positive.
    pub fn element(&self) -> GroupElement {
        GroupElement {
            d: self.d,
            a: self.a,
            b: self.b,
            c: self.c,
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}
