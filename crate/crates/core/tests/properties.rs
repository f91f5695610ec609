use std::collections::BTreeSet;

use conicgroup::arith::{is_prime, kronecker};
use conicgroup::oracle::brute_force_solutions;
use conicgroup::quadform::{enumerate_reduced_forms, QuadraticForm};
use conicgroup::{Conic, FactorizationResult, GroupElement};
use proptest::prelude::*;

const DS: [u64; 5] = [1, 2, 5, 6, 105];

fn admissible_primes(d: u64, below: u64) -> Vec<u64> {
    (3..below)
        .filter(|&p| is_prime(p) && kronecker(-(d as i128), p) == 1)
        .collect()
}

/// A random product of at most six generators or their inverses:
/// (index into DS, [(prime index, ±1)], negate).
fn product_strategy() -> impl Strategy<Value = (usize, Vec<(usize, i64)>, bool)> {
    (0..DS.len(), picks(6), any::<bool>())
}

fn picks(max_len: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..12, prop_oneof![Just(-1i64), Just(1i64)]), 0..=max_len)
}

fn build(d_idx: usize, picks: &[(usize, i64)], negate: bool) -> (Conic, GroupElement, Vec<GroupElement>) {
    let d = DS[d_idx];
    let conic = Conic::new(d).unwrap();
    let primes = admissible_primes(d, 200);
    let mut z = conic.identity();
    let mut trail = vec![z];
    for &(i, e) in picks {
        let p = primes[i % primes.len()];
        let step = conic.zeta(p).unwrap().element().power(e).unwrap();
        z = z.multiply(&step).unwrap();
        trail.push(z);
    }
    if negate {
        z = z.negate();
    }
    (conic, z, trail)
}

fn norm_holds(z: &GroupElement) -> bool {
    let d = z.d() as i128;
    z.a() * z.a() + d * z.b() * z.b() == z.c() * z.c()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn products_stay_on_the_conic((d_idx, picks, negate) in product_strategy()) {
        let (_, z, trail) = build(d_idx, &picks, negate);
        prop_assert!(norm_holds(&z));
        for w in &trail {
            prop_assert!(norm_holds(w));
            prop_assert_eq!(conicgroup::arith::gcd(w.a(), w.b()), 1);
        }
    }

    #[test]
    fn factor_then_reconstruct((d_idx, picks, negate) in product_strategy()) {
        let (conic, z, _) = build(d_idx, &picks, negate);
        let f = conic.factor_element(&z).unwrap();
        prop_assert_eq!(conic.reconstruct(&f).unwrap(), z);
        // Exponent magnitudes are the prime exponents of the denominator.
        let c = z.c() as u64;
        let primes = conicgroup::arith::factorize(c);
        prop_assert_eq!(f.factors.len(), primes.len());
        for (&(p, e), &(q, alpha)) in f.factors.iter().zip(primes.factors()) {
            prop_assert_eq!(p, q);
            prop_assert_eq!(e.unsigned_abs(), alpha as u64);
        }
    }

    #[test]
    fn group_laws(d_idx in 0..DS.len(), x in picks(2), y in picks(2), w in picks(2)) {
        let (_, x, _) = build(d_idx, &x, false);
        let (_, y, _) = build(d_idx, &y, false);
        let (conic, w, _) = build(d_idx, &w, true);
        let xy = x.multiply(&y).unwrap();
        prop_assert_eq!(xy, y.multiply(&x).unwrap());
        prop_assert_eq!(
            xy.multiply(&w).unwrap(),
            x.multiply(&y.multiply(&w).unwrap()).unwrap()
        );
        prop_assert_eq!(x.multiply(&x.conjugate()).unwrap(), conic.identity());
        prop_assert_eq!(x.conjugate().multiply(&x).unwrap(), conic.identity());
        prop_assert_eq!(x.multiply(&conic.identity()).unwrap(), x);
    }

    #[test]
    fn triples_collapse_gamma_orbits((d_idx, picks, negate) in product_strategy()) {
        let (_, z, _) = build(d_idx, &picks, negate);
        prop_assume!(z.b() != 0);
        let t = z.to_triple().unwrap();
        for image in z.gamma_orbit() {
            prop_assert_eq!(image.to_triple().unwrap(), t);
        }
        if z.d() == 1 {
            let i = GroupElement::new(1, 0, 1, 1).unwrap();
            let iz = z.multiply(&i).unwrap();
            prop_assert_eq!(iz.to_triple().unwrap(), t);
            prop_assert_eq!(iz.conjugate().to_triple().unwrap(), t);
        }
    }

    #[test]
    fn power_agrees_with_repeated_multiply(d_idx in 0..DS.len(), pi in 0usize..12, n in -6i64..=6) {
        let d = DS[d_idx];
        let conic = Conic::new(d).unwrap();
        let primes = admissible_primes(d, 200);
        let z = *conic.zeta(primes[pi % primes.len()]).unwrap().element();
        let step = if n < 0 { z.conjugate() } else { z };
        let mut acc = conic.identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.multiply(&step).unwrap();
        }
        prop_assert_eq!(z.power(n).unwrap(), acc);
    }
}

#[test]
fn denominator_is_product_of_prime_powers() {
    let conic = Conic::new(105).unwrap();
    let primes = [11u64, 13, 19];
    for subset in 1..8u32 {
        let chosen: Vec<u64> = (0..3).filter(|i| subset >> i & 1 == 1).map(|i| primes[i]).collect();
        let k = chosen.len() as u32;
        for alphas in 0..3u32.pow(k) {
            let exps: Vec<u32> = (0..k).map(|i| alphas / 3u32.pow(i) % 3 + 1).collect();
            for signs in 0..1u32 << k {
                for sign in [1i8, -1] {
                    let f = FactorizationResult {
                        sign,
                        factors: chosen
                            .iter()
                            .zip(&exps)
                            .enumerate()
                            .map(|(i, (&p, &a))| {
                                (p, if signs >> i & 1 == 1 { -(a as i64) } else { a as i64 })
                            })
                            .collect(),
                    };
                    let z = conic.reconstruct(&f).unwrap();
                    let expected: i128 = chosen
                        .iter()
                        .zip(&exps)
                        .map(|(&p, &a)| (p as i128).pow(a))
                        .product();
                    assert_eq!(z.c(), expected, "{f}");
                    assert_eq!(conic.factor_element(&z).unwrap(), f);
                }
            }
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for d in DS {
        let conic = Conic::new(d).unwrap();
        for c in 2..=3000u64 {
            let set = conic.enumerate_normalized(c).unwrap();
            let got: BTreeSet<_> = set.triples().copied().collect();
            let want: BTreeSet<_> = brute_force_solutions(d, c).unwrap().into_iter().collect();
            assert_eq!(got, want, "D = {d}, c = {c}");
            assert_eq!(set.solutions.len() as u64, conic.count_normalized(c).unwrap());
            assert_eq!(set.expected, set.solutions.len() as u64);
        }
    }
}

#[test]
fn prime_denominators_have_one_solution() {
    for d in DS {
        for p in admissible_primes(d, 2000) {
            assert_eq!(brute_force_solutions(d, p).unwrap().len(), 1, "D = {d}, p = {p}");
        }
    }
}

/// Reduces a positive definite form by the classical translate-and-swap
/// steps, independent of the enumeration code.
fn reduce(mut a: i64, mut b: i64, mut c: i64) -> (i64, i64, i64) {
    let disc = b * b - 4 * a * c;
    loop {
        if b.abs() > a || b == -a {
            // translate x -> x + ky so that -a < b <= a
            let k = (a - b).div_euclid(2 * a);
            b += 2 * a * k;
            c = (b * b - disc) / (4 * a);
        } else if a > c {
            (a, b, c) = (c, -b, a);
        } else {
            break;
        }
    }
    if a == c && b < 0 {
        b = -b;
    }
    (a, b, c)
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    fn g(x: i64, y: i64) -> i64 {
        if y == 0 { x.abs() } else { g(y, x % y) }
    }
    g(g(a, b), c)
}

#[test]
fn reduced_forms_match_exhaustive_reduction() {
    for n in 3..=200i64 {
        let disc = -n;
        if !matches!(disc.rem_euclid(4), 0 | 1) {
            continue;
        }
        let bound = n;
        let mut classes = BTreeSet::new();
        for a in 1..=bound {
            for b in -bound..=bound {
                let num = b * b - disc;
                if num % (4 * a) != 0 {
                    continue;
                }
                let c = num / (4 * a);
                if gcd3(a, b, c) != 1 {
                    continue;
                }
                classes.insert(reduce(a, b, c));
            }
        }
        let forms = enumerate_reduced_forms(disc).unwrap();
        let got: BTreeSet<_> = forms.iter().map(|f| (f.a(), f.b(), f.c())).collect();
        assert_eq!(got.len(), forms.len(), "duplicates for {disc}");
        assert_eq!(got, classes, "disc {disc}");
        for f in &forms {
            assert!(f.is_reduced());
            assert_eq!(f.discriminant(), disc);
        }
    }
}

#[test]
fn principal_form_always_present() {
    for d in 1..=500u64 {
        let forms = enumerate_reduced_forms(-4 * d as i64).unwrap();
        assert!(!forms.is_empty());
        assert_eq!(forms[0], QuadraticForm::new(1, 0, d as i64).unwrap());
    }
}
