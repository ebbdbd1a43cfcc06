mod common;

use common::{brute_force_dim, colon_in_degree, random_poly, rng};
use proptest::prelude::*;
use rand::Rng;
use spreadlab::ideal_ops::*;
use spreadlab::newton::monomial_integral_closure;
use spreadlab::{ideal_equal, Ideal, Monomial, MonomialOrder, Polynomial, Ring, RingRef};

fn r3() -> RingRef {
    Ring::standard(32003, &["x", "y", "z"]).unwrap()
}

fn random_monomial_ideal(r: &mut rand_chacha::ChaCha8Rng, ring: &RingRef) -> Ideal {
    let k = r.gen_range(1..=4);
    let gens = (0..k)
        .map(|_| {
            let e: Vec<u16> = (0..ring.nvars()).map(|_| r.gen_range(0..3)).collect();
            Polynomial::monomial(ring, Monomial::from_exponents(&e), 1)
        })
        .collect();
    Ideal::new(ring, gens).unwrap()
}

#[test]
fn krull_dim_matches_brute_force() {
    let mut r = rng(11);
    for n in [2usize, 3, 4, 5] {
        let names = ["a", "b", "c", "d", "e"];
        let ring = Ring::standard(32003, &names[..n]).unwrap();
        for _ in 0..10 {
            let i = random_monomial_ideal(&mut r, &ring);
            let lms = i.gb().leading_monomials();
            assert_eq!(krull_dim(&i), brute_force_dim(n, &lms), "{i}");
        }
    }
}

#[test]
fn colon_matches_linear_algebra() {
    let ring = r3();
    let cases = [
        ("x^2*y, x*y^2, z^3", "x, y"),
        ("x^2, x*y", "x"),
        ("y^2 - x*z, x*y - z^2", "x, y, z"),
        ("x*y*z, x^3", "x*y, z^2"),
    ];
    for (a, b) in cases {
        let (a, b) = (Ideal::parse(&ring, a).unwrap(), Ideal::parse(&ring, b).unwrap());
        let q = quotient(&a, &b).unwrap();
        for d in 0..=4 {
            for f in colon_in_degree(&a, &b, d) {
                assert!(q.contains(&f).unwrap(), "{f} in ({a}):({b})");
            }
        }
        for g in q.gens() {
            for h in b.gens() {
                assert!(a.contains(&(g * h)).unwrap());
            }
        }
    }
}

#[test]
fn saturation_two_ways() {
    let mut r = rng(3);
    let ring = r3();
    for _ in 0..12 {
        let gens: Vec<Polynomial> = (0..2).map(|_| random_poly(&mut r, &ring, 3, 2)).collect();
        let a = Ideal::new(&ring, gens).unwrap();
        let b = Ideal::new(&ring, vec![random_poly(&mut r, &ring, 1, 2)]).unwrap();
        if b.is_zero() {
            continue;
        }
        let (s, _) = saturate(&a, &b).unwrap();
        assert!(ideal_equal(&s, &saturate_by_extra_variable(&a, &b).unwrap()).unwrap());
    }
}

#[test]
fn elimination_examples() {
    let ring = Ring::new(32003, &["t", "x", "y"], MonomialOrder::Grevlex, None).unwrap();
    // twisted parametrization x = t^2, y = t^3
    let i = Ideal::parse(&ring, "x - t^2, y - t^3").unwrap();
    let e = eliminate(&i, &[0]).unwrap();
    assert!(ideal_equal(&e, &Ideal::parse(&ring, "x^3 - y^2").unwrap()).unwrap());
    assert!(eliminate(&i, &[]).is_err());
    assert!(eliminate(&i, &[0, 1, 2]).is_err());
}

#[test]
fn height_and_dimension() {
    let ring = r3();
    assert_eq!(krull_dim(&Ideal::zero(&ring)), 3);
    assert_eq!(krull_dim(&Ideal::unit(&ring)), -1);
    assert_eq!(height(&Ideal::parse(&ring, "x, y").unwrap()).unwrap(), 2);
    assert!(height(&Ideal::zero(&ring)).is_err());
    assert!(height(&Ideal::unit(&ring)).is_err());
}

#[test]
fn closure_matches_power_membership() {
    // u is integral over a monomial ideal iff u^k ∈ I^k for some k; k ≤ 6 suffices here
    let ring = Ring::standard(32003, &["x", "y"]).unwrap();
    for src in ["x^2, y^3", "x^3, x*y, y^4", "x^4, y^4", "x^2*y, y^3"] {
        let i = Ideal::parse(&ring, src).unwrap();
        let closure = monomial_integral_closure(&i).unwrap();
        let powers: Vec<Ideal> = (1..=6).map(|k| power(&i, k)).collect();
        for a in 0..6u16 {
            for b in 0..6u16 {
                let u = Polynomial::monomial(&ring, Monomial::from_exponents(&[a, b]), 1);
                let integral = (1..=6).any(|k| powers[k - 1].contains(&u.pow(k as u32)).unwrap());
                assert_eq!(closure.contains(&u).unwrap(), integral, "x^{a} y^{b} over ({src})");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn intersection_and_sum_laws(seed in 0u64..10_000) {
        let ring = r3();
        let mut r = rng(seed);
        let a = random_monomial_ideal(&mut r, &ring);
        let b = random_monomial_ideal(&mut r, &ring);
        let meet = intersect(&a, &b).unwrap();
        let join = sum(&a, &b).unwrap();
        let prod = product(&a, &b).unwrap();
        prop_assert!(a.contains_ideal(&meet).unwrap() && b.contains_ideal(&meet).unwrap());
        prop_assert!(join.contains_ideal(&a).unwrap() && join.contains_ideal(&b).unwrap());
        prop_assert!(meet.contains_ideal(&prod).unwrap());
        prop_assert!(ideal_equal(&intersect(&b, &a).unwrap(), &meet).unwrap());
        // A ⊆ A : B and (A : B)·B ⊆ A
        let q = quotient(&a, &b).unwrap();
        prop_assert!(q.contains_ideal(&a).unwrap());
        prop_assert!(a.contains_ideal(&product(&q, &b).unwrap()).unwrap());
        let (s, k) = saturate(&a, &b).unwrap();
        prop_assert!(s.contains_ideal(&q).unwrap());
        let again = quotient(&s, &b).unwrap();
        prop_assert!(ideal_equal(&again, &s).unwrap());
        prop_assert!(k <= 8);
    }

    #[test]
    fn height_plus_dim_is_n(seed in 0u64..10_000) {
        let ring = r3();
        let mut r = rng(seed);
        let a = random_monomial_ideal(&mut r, &ring);
        if !a.is_unit() {
            prop_assert_eq!(height(&a).unwrap() + krull_dim(&a), 3);
        }
    }
}
