//! End-to-end acceptance checks. Runs without the libtest harness so each
//! criterion reports one line; exits nonzero if any fails.

mod common;

use common::{brute_force_dim, naive_groebner, random_homogeneous_ideal, random_poly, rng};
use rand::Rng;
use spreadlab::fatpoints::*;
use spreadlab::filtration::*;
use spreadlab::ideal_ops::*;
use spreadlab::newton::max_ideal_associated_to_closed_power;
use spreadlab::{groebner_basis, ideal_equal, Ideal, Monomial, MonomialOrder, Polynomial, Ring, RingRef};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

const P: u32 = 32003;
const SEEDS: [u64; 3] = [1, 2, 3];

type Outcome = Result<String, String>;
type Criterion = (u32, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn r3() -> RingRef {
    Ring::standard(P, &["x", "y", "z"]).unwrap()
}

fn id(r: &RingRef, s: &str) -> Ideal {
    Ideal::parse(r, s).unwrap()
}

fn c1() -> Outcome {
    let ring = r3();
    let e = equimultiple_check(&id(&ring, "x, y")).map_err(|e| e.to_string())?;
    ensure!(e.ell == 2 && e.ht == 2 && e.equimultiple, "got ell {} ht {}", e.ell, e.ht);
    Ok("ell = ht = 2".into())
}

fn c2() -> Outcome {
    let ring = r3();
    for src in ["x, y, z", "x^2, y^3, z^5"] {
        let ell = analytic_spread(&id(&ring, src)).map_err(|e| e.to_string())?.ell;
        ensure!(ell == 3, "ell({src}) = {ell}");
    }
    Ok("ell = 3 for both".into())
}

fn c3() -> Outcome {
    let mut r = rng(2024);
    let mut checked = 0;
    for k in 0..50 {
        let i = random_homogeneous_ideal(&mut r);
        let n = i.ring().nvars() as i64;
        let s = analytic_spread(&i).map_err(|e| format!("ideal {k}: {e}"))?;
        ensure!(s.ht <= s.ell && s.ell <= n && n <= 3, "ideal {k} ({i}): ht {} ell {}", s.ht, s.ell);
        checked += 1;
    }
    Ok(format!("{checked} ideals"))
}

fn c4() -> Outcome {
    let ring = r3();
    let triv = Filtration::trivial_m(&ring);
    for n in 1..=3 {
        for v in 0..3 {
            let g = Polynomial::var(&ring, v);
            let w = sp0_witness(&triv, n, &g, 4).map_err(|e| e.to_string())?;
            ensure!(w.is_some(), "no witness for var {v} at n = {n}");
        }
    }
    for a in 1..=3 {
        let ell = analytic_spread_truncated(&triv, a, None).map_err(|e| e.to_string())?.ell;
        ensure!(ell == 3, "truncation {a} has ell {ell}");
    }
    Ok("witnesses at n <= 3, truncations all 3".into())
}

fn c5() -> Outcome {
    let r = Ring::new(P, &["x", "y", "z"], MonomialOrder::Grevlex, Some(vec![3, 4, 5])).unwrap();
    let p = id(&r, "y^2 - x*z, x^3 - y*z, x^2*y - z^2");
    let err = |e: spreadlab::Error| e.to_string();
    let p2 = power(&p, 2);
    let s2 = symbolic_power(&p, 2, None).map_err(err)?;
    ensure!(s2.contains_ideal(&p2).map_err(err)? && !ideal_equal(&s2, &p2).map_err(err)?, "p^(2) = p^2");
    ensure!(is_max_ideal_associated(&p2).map_err(err)?, "m not associated to p^2");
    let sym: Vec<Ideal> = (0..=6).map(|n| symbolic_power(&p, n.max(1), None)).collect::<Result<_, _>>().map_err(err)?;
    for a in 1..=5 {
        for b in 1..=6 - a {
            let prod = product(&sym[a], &sym[b]).map_err(err)?;
            ensure!(sym[a + b].contains_ideal(&prod).map_err(err)?, "p^({a}) p^({b}) not in p^({})", a + b);
        }
    }
    let rep = fingen_probe(&p, None, 4, 6).map_err(err)?;
    let a = rep.stabilization.ok_or("no stabilization up to a = 4")?;
    ensure!(a <= 4, "stabilized at {a}");
    ensure!(rep.truncations.iter().all(|t| t.ell <= 3), "some truncation has ell > 3");
    ensure!(rep.truncations.iter().all(|t| t.witness.is_some()), "missing witness");
    let ells: Vec<i64> = rep.truncations.iter().map(|t| t.ell).collect();
    Ok(format!("stabilizes at a = {a}, truncation spreads {ells:?}"))
}

fn c6() -> Outcome {
    let r2 = Ring::standard(P, &["x", "y"]).unwrap();
    let err = |e: spreadlab::Error| e.to_string();
    let i = id(&r2, "x^2, x*y");
    let ell = analytic_spread(&i).map_err(err)?.ell;
    ensure!(ell == 2, "ell(x^2, xy) = {ell}");
    let k = max_ideal_associated_to_closed_power(&i, 4).map_err(err)?;
    ensure!(k.is_some(), "m never associated for (x^2, xy)");
    let x = id(&r2, "x");
    let k2 = max_ideal_associated_to_closed_power(&x, 6).map_err(err)?;
    ensure!(k2.is_none(), "m associated to closure of (x)^{}", k2.unwrap());
    ensure!(equimultiple_check(&x).map_err(err)?.equimultiple, "(x) not equimultiple");
    Ok(format!("(x^2, xy) at power {}, (x) never up to 6", k.unwrap()))
}

fn c7() -> Outcome {
    let err = |e: spreadlab::Error| e.to_string();
    for seed in SEEDS {
        let base = sample_scheme(P, 16, Constraint::None, seed).map_err(err)?;
        for m in 1..=3 {
            let h = h0(&base.uniform(m), 4 * m).h0;
            ensure!(h == 0, "seed {seed}: h0({}, {m}) = {h}", 4 * m);
        }
        for m in 1..=2 {
            for d in 4 * m + 4..=4 * m + 6 {
                let rep = mult_map_surjective(&base.uniform(m), d).map_err(err)?;
                ensure!(rep.surjective, "seed {seed}: not surjective at d {d}, m {m}");
            }
        }
        let rep = graded_power_containment(&base, 1, 4, 24).map_err(err)?;
        ensure!(!rep.empty && rep.mixed_all_contained, "seed {seed}: containment fails");
        ensure!(rep.per_piece.iter().all(|p| p.contained), "seed {seed}: per-piece containment fails");
    }
    Ok(format!("seeds {SEEDS:?} unanimous"))
}

fn c8() -> Outcome {
    let err = |e: spreadlab::Error| e.to_string();
    for seed in SEEDS {
        let base = sample_scheme(P, 12, Constraint::Elliptic, seed).map_err(err)?;
        for m in 1..=3 {
            let s = base.uniform(m);
            let top = h0(&s, 3 * m).h0;
            ensure!(top == 1, "seed {seed}: h0({}, {m}) = {top}", 3 * m);
            for d in 0..3 * m {
                ensure!(h0(&s, d).h0 == 0, "seed {seed}: h0({d}, {m}) nonzero");
            }
        }
        ensure!(h0(&base, 4).h0 == 3, "seed {seed}: h0(4, 1) = {}", h0(&base, 4).h0);
        for m in 1..=2 {
            for d in 4 * m + 4..=4 * m + 6 {
                ensure!(mult_map_surjective(&base.uniform(m), d).map_err(err)?.surjective, "seed {seed}: d {d} m {m}");
            }
        }
        let census = fiber_generator_census(&base, 2, 8, 4).map_err(err)?;
        for level in &census.levels {
            let expect = vec![(3 * level.n, 1)];
            ensure!(level.survivors == expect, "seed {seed}: n {} survivors {:?}", level.n, level.survivors);
        }
        let nagata = sample_scheme(P, 16, Constraint::None, seed).map_err(err)?;
        let nc = fiber_generator_census(&nagata, 1, 8, 4).map_err(err)?;
        ensure!(nc.total_survivors == 0, "seed {seed}: nagata census has {} survivors", nc.total_survivors);
    }
    Ok(format!("seeds {SEEDS:?} unanimous"))
}

fn c9() -> Outcome {
    let mut r = rng(909);
    let orders = [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::block(vec![0], MonomialOrder::Grevlex)];
    for case in 0..20 {
        let ring = Ring::new(P, &["x", "y", "z"], orders[case % 3].clone(), None).unwrap();
        let gens: Vec<Polynomial> = (0..2 + case % 2).map(|_| random_poly(&mut r, &ring, 2, 3)).collect();
        let fast = groebner_basis(&gens, &ring).map_err(|e| e.to_string())?;
        ensure!(fast.basis() == naive_groebner(&gens, &ring).as_slice(), "groebner case {case}");
    }
    let names = ["a", "b", "c", "d"];
    for case in 0..20 {
        let n = 2 + case % 3;
        let ring = Ring::standard(P, &names[..n]).unwrap();
        let gens: Vec<Polynomial> = (0..r.gen_range(1..=4))
            .map(|_| {
                let e: Vec<u16> = (0..n).map(|_| r.gen_range(0..3)).collect();
                Polynomial::monomial(&ring, Monomial::from_exponents(&e), 1)
            })
            .collect();
        let i = Ideal::new(&ring, gens).unwrap();
        let expect = brute_force_dim(n, &i.gb().leading_monomials());
        ensure!(krull_dim(&i) == expect, "dimension case {case}");
    }
    let ring = r3();
    let mut done = 0;
    while done < 20 {
        let a = Ideal::new(&ring, (0..2).map(|_| random_poly(&mut r, &ring, 3, 2)).collect()).unwrap();
        let b = Ideal::new(&ring, vec![random_poly(&mut r, &ring, 1, 2)]).unwrap();
        if b.is_zero() {
            continue;
        }
        let (s, _) = saturate(&a, &b).map_err(|e| e.to_string())?;
        let t = saturate_by_extra_variable(&a, &b).map_err(|e| e.to_string())?;
        ensure!(ideal_equal(&s, &t).unwrap(), "saturation case {done}");
        done += 1;
    }
    Ok("20 + 20 + 20 cases".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, Duration::from_secs(1), c1),
        (2, Duration::from_secs(5), c2),
        (3, Duration::from_secs(120), c3),
        (4, Duration::from_secs(30), c4),
        (5, Duration::from_secs(180), c5),
        (6, Duration::from_secs(10), c6),
        (7, Duration::from_secs(180), c7),
        (8, Duration::from_secs(180), c8),
        (9, Duration::from_secs(120), c9),
    ];
    let mut failed = 0;
    for (k, limit, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > limit => Err(format!("exceeded {:?}", limit)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {k}: PASS ({detail}, {:.2}s)", took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {k}: FAIL ({why}, {:.2}s)", took.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
