//! Exact integer utilities.
//!
//! Everything here is a pure function. Primality and factorization are exact
//! over the whole `u64` range: Miller-Rabin with a fixed witness set that is
//! known to be deterministic below 2^64, and Pollard's rho (Brent variant)
//! above a trial-division bound.

use num_integer::{Integer, Roots};
use serde::Serialize;

/// Greatest common divisor, always nonnegative. `gcd(0, 0) == 0`.
///
/// Panics only for `gcd(i128::MIN, 0)` and `gcd(i128::MIN, i128::MIN)`, whose
/// result 2^127 is not representable.
pub fn gcd(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

/// Largest `s` with `s * s <= n`.
pub fn integer_sqrt(n: u128) -> u128 {
    n.sqrt()
}

pub fn is_perfect_square(n: u128) -> Option<u128> {
    let s = integer_sqrt(n);
    (s * s == n).then_some(s)
}

/// Ascending prime factorization. `1` factors as the empty product.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct PrimeFactorization {
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Number of distinct primes.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Multiplies the factorization back out. `None` on overflow.
    pub fn expand(&self) -> Option<u64> {
        self.factors.iter().try_fold(1u64, |acc, &(p, e)| {
            p.checked_pow(e).and_then(|pe| acc.checked_mul(pe))
        })
    }
}

const TRIAL_DIVISION_BOUND: u64 = 1 << 10;

// Deterministic for every n < 2^64 (the first twelve primes suffice up to 3.3e24).
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Finds a nontrivial factor of an odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    const BATCH: u64 = 128;
    for c in 1..n {
        let f = |x: u64| ((x as u128 * x as u128 + c as u128) % n as u128) as u64;
        let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            // The batched product hit zero mod n; replay one step at a time.
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("pollard_brent called on a prime")
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_into(d, out);
    split_into(n / d, out);
}

pub fn factorize(n: u64) -> PrimeFactorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut rest = n;
    let mut primes = Vec::new();
    while rest % 2 == 0 {
        primes.push(2);
        rest /= 2;
    }
    let mut p = 3;
    while p < TRIAL_DIVISION_BOUND && p * p <= rest {
        while rest % p == 0 {
            primes.push(p);
            rest /= p;
        }
        p += 2;
    }
    if rest > 1 {
        split_into(rest, &mut primes);
    }
    primes.sort_unstable();

    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    PrimeFactorization { factors }
}

/// Exponent of the prime `p` in `n` (`n > 0`).
pub fn valuation(mut n: u128, p: u128) -> u32 {
    let mut v = 0;
    while n != 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Kronecker symbol `(a | n)` for `n >= 1`.
///
/// Equals the Legendre symbol for odd prime `n`, the Jacobi symbol for odd
/// `n`, and uses `(a | 2) = 0, 1, -1` for `a` even, `a = ±1 mod 8`,
/// `a = ±3 mod 8` respectively.
pub fn kronecker(a: i128, n: u64) -> i8 {
    assert!(n >= 1, "kronecker requires n >= 1");
    let twos = n.trailing_zeros();
    let mut n = n >> twos;
    let mut result = 1i8;
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    // Jacobi symbol for odd n.
    let mut a = a.rem_euclid(n as i128) as u64;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}
