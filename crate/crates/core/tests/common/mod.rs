//! Independent reference implementations used by the integration and
//! acceptance tests. They only touch the public API and favour plainness
//! over speed.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spreadlab::fatpoints::{form_to_poly, FatPointScheme};
use spreadlab::{Ideal, Monomial, MonomialOrder, Polynomial, Ring, RingRef};
use std::cmp::Ordering;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Multivariate division: remainder of `f` by `divisors`, first divisor wins.
pub fn remainder(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let field = *ring.field();
    let mut p = f.clone();
    let mut r = Polynomial::zero(&ring);
    while let Some((m, c)) = p.leading_term().cloned() {
        let hit = divisors.iter().find(|g| g.leading_monomial().is_some_and(|lg| lg.divides(&m)));
        match hit {
            Some(g) => {
                let (lg, lc) = g.leading_term().unwrap();
                let q = m.div(lg).unwrap();
                let coef = field.mul(c, field.inv(*lc).unwrap());
                p = &p - &(&Polynomial::monomial(&ring, q, coef) * g);
            }
            None => {
                let lt = Polynomial::monomial(&ring, m, c);
                p = &p - &lt;
                r = &r + &lt;
            }
        }
    }
    r
}

fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring();
    let field = *ring.field();
    let (lf, cf) = f.leading_term().unwrap();
    let (lg, cg) = g.leading_term().unwrap();
    let l = lf.lcm(lg);
    let a = Polynomial::monomial(ring, l.div(lf).unwrap(), field.inv(*cf).unwrap());
    let b = Polynomial::monomial(ring, l.div(lg).unwrap(), field.inv(*cg).unwrap());
    &(&a * f) - &(&b * g)
}

/// Textbook Buchberger without any criteria, followed by reduction.
pub fn naive_groebner(gens: &[Polynomial], ring: &RingRef) -> Vec<Polynomial> {
    let mut g: Vec<Polynomial> = gens.iter().filter(|f| !f.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let r = remainder(&spoly(&g[i], &g[j]), &g);
        if !r.is_zero() {
            let k = g.len();
            g.push(r);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // minimal basis, then reduce each element by the others
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, f) in g.iter().enumerate() {
        let lf = f.leading_monomial().unwrap();
        let redundant = g.iter().enumerate().any(|(k, h)| {
            let lh = h.leading_monomial().unwrap();
            k != i && lh.divides(lf) && (lh != lf || k < i)
        });
        if !redundant {
            minimal.push(f.monic());
        }
    }
    let mut out: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> =
                minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, h)| h.clone()).collect();
            remainder(&minimal[i], &others).monic()
        })
        .collect();
    let order = ring.order().clone();
    out.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}

/// Dimension of `k[x]/(monomials)` by checking every subset of variables.
pub fn brute_force_dim(nvars: usize, gens: &[Monomial]) -> i64 {
    if gens.iter().any(|m| m.is_one()) {
        return -1;
    }
    let mut best = 0;
    for set in 0u32..(1 << nvars) {
        let independent = gens.iter().all(|m| {
            m.exponents().iter().enumerate().any(|(i, &e)| e > 0 && set >> i & 1 == 0)
        });
        if independent {
            best = best.max(set.count_ones() as i64);
        }
    }
    best
}

pub fn random_poly(rng: &mut ChaCha8Rng, ring: &RingRef, max_deg: u32, terms: usize) -> Polynomial {
    let n = ring.nvars();
    let p = ring.p();
    let mut f = Polynomial::zero(ring);
    for _ in 0..terms {
        // total degree at most max_deg
        let mut e = vec![0u16; n];
        for _ in 0..rng.gen_range(0..=max_deg) {
            e[rng.gen_range(0..n)] += 1;
        }
        let c = rng.gen_range(1..p);
        f = &f + &Polynomial::monomial(ring, Monomial::from_exponents(&e), c);
    }
    f
}

/// All monomials of weighted degree `d`.
pub fn monomials_of_weight(nvars: usize, w: &[u32], d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; nvars];
    fn go(i: usize, left: u32, w: &[u32], cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            if left == 0 {
                out.push(Monomial::from_exponents(cur));
            }
            return;
        }
        let mut e = 0;
        while e * w[i] <= left {
            cur[i] = e as u16;
            go(i + 1, left - e * w[i], w, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    go(0, d, w, &mut cur, &mut out);
    out
}

/// A random weighted-homogeneous proper ideal in at most three variables.
pub fn random_homogeneous_ideal(rng: &mut ChaCha8Rng) -> Ideal {
    let n = rng.gen_range(2..=3);
    let names = ["x", "y", "z"];
    let w: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let ring = Ring::new(32003, &names[..n], MonomialOrder::Grevlex, Some(w.clone())).unwrap();
    loop {
        let k = rng.gen_range(1..=3);
        let mut gens = Vec::new();
        for _ in 0..k {
            let d = rng.gen_range(1..=6);
            let monos = monomials_of_weight(n, &w, d);
            if monos.is_empty() {
                continue;
            }
            let t = rng.gen_range(1..=monos.len().min(3));
            let mut f = Polynomial::zero(&ring);
            for _ in 0..t {
                let m = monos[rng.gen_range(0..monos.len())].clone();
                f = &f + &Polynomial::monomial(&ring, m, rng.gen_range(1..32003));
            }
            if !f.is_zero() {
                gens.push(f);
            }
        }
        if !gens.is_empty() {
            return Ideal::new(&ring, gens).unwrap();
        }
    }
}

/// Checks by direct substitution that `f` (degree `d`) vanishes to order
/// `m` at `pt`: after moving to the point, every local term of degree `< m`
/// must cancel.
pub fn vanishes_to_order(scheme: &FatPointScheme, f: &[u32], d: u32, pt: [u32; 3], m: u32) -> bool {
    let ring = Ring::standard(scheme.p, &["x", "y", "z"]).unwrap();
    let local = Ring::standard(scheme.p, &["u", "v"]).unwrap();
    let i = pt.iter().position(|&c| c != 0).unwrap();
    let others: Vec<usize> = (0..3).filter(|&k| k != i).collect();
    let mut images = vec![Polynomial::zero(&local); 3];
    images[i] = Polynomial::constant(&local, pt[i] as i64);
    for (slot, &k) in others.iter().enumerate() {
        images[k] = &Polynomial::constant(&local, pt[k] as i64) + &Polynomial::var(&local, slot);
    }
    let g = form_to_poly(&ring, f, d).substitute(&images).unwrap();
    g.terms().iter().all(|(mono, _)| mono.degree() >= m as u64)
}

/// Generators of `A : B` in degree `d`, by linear algebra on normal forms,
/// for homogeneous `A` and `B` in a standard-graded ring.
pub fn colon_in_degree(a: &Ideal, b: &Ideal, d: u32) -> Vec<Polynomial> {
    let ring = a.ring().clone();
    let field = *ring.field();
    let w = vec![1; ring.nvars()];
    let monos = monomials_of_weight(ring.nvars(), &w, d);
    // columns: coefficients of NF(m * b) for each b, stacked
    let mut images: Vec<Vec<Polynomial>> = Vec::new();
    for m in &monos {
        let mp = Polynomial::monomial(&ring, m.clone(), 1);
        images.push(b.gens().iter().map(|g| a.gb().normal_form(&(&mp * g)).unwrap()).collect());
    }
    let mut keys: Vec<(usize, Monomial)> = Vec::new();
    for img in &images {
        for (k, p) in img.iter().enumerate() {
            for (mono, _) in p.terms() {
                if !keys.contains(&(k, mono.clone())) {
                    keys.push((k, mono.clone()));
                }
            }
        }
    }
    // rows are keys, columns are monomials of degree d
    let rows: Vec<Vec<u32>> = keys
        .iter()
        .map(|(k, key)| {
            images
                .iter()
                .map(|img| img[*k].terms().iter().find(|(mm, _)| mm == key).map_or(0, |t| t.1))
                .collect()
        })
        .collect();
    let kernel = if rows.is_empty() {
        (0..monos.len()).map(|i| (0..monos.len()).map(|j| (i == j) as u32).collect()).collect()
    } else {
        spreadlab::linalg::nullspace(&field, &rows, monos.len())
    };
    kernel
        .into_iter()
        .map(|v| {
            let terms = monos.iter().cloned().zip(v).filter(|(_, c)| *c != 0).collect();
            Polynomial::from_terms(&ring, terms)
        })
        .collect()
}

pub fn cmp_lm(order: &MonomialOrder, a: &Polynomial, b: &Polynomial) -> Ordering {
    order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
}

/// Ideal of the fat point scheme as `∩ P_i^{m_i}`, computed with Gröbner bases.
pub fn fat_point_ideal(scheme: &FatPointScheme) -> Ideal {
    let ring = Ring::standard(scheme.p, &["x", "y", "z"]).unwrap();
    let v: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&ring, i)).collect();
    let mut acc = Ideal::unit(&ring);
    for (pt, &m) in scheme.points.iter().zip(&scheme.multiplicities) {
        let c: Vec<Polynomial> = pt.iter().map(|&a| Polynomial::constant(&ring, a as i64)).collect();
        // 2x2 minors of [x y z; a b c]
        let gens = vec![
            &(&c[1] * &v[0]) - &(&c[0] * &v[1]),
            &(&c[2] * &v[0]) - &(&c[0] * &v[2]),
            &(&c[2] * &v[1]) - &(&c[1] * &v[2]),
        ];
        let p = spreadlab::ideal_ops::power(&Ideal::new(&ring, gens).unwrap(), m);
        acc = spreadlab::ideal_ops::intersect(&acc, &p).unwrap();
    }
    acc
}

/// `dim I_d` from the leading monomials of a homogeneous ideal.
pub fn degree_piece_dim(i: &Ideal, d: u32) -> usize {
    let lead = i.gb().leading_monomials();
    monomials_of_weight(i.ring().nvars(), &vec![1; i.ring().nvars()], d)
        .into_iter()
        .filter(|m| lead.iter().any(|l| l.divides(m)))
        .count()
}
