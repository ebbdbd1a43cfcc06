//! Buchberger's algorithm with the normal selection strategy and the
//! coprimality and chain criteria, producing reduced Gröbner bases.

use crate::error::Result;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef};
use std::cmp::Ordering;
use std::collections::HashSet;

/// A reduced Gröbner basis: monic, inter-reduced, sorted ascending by
/// leading monomial. It is the canonical representative of its ideal for the
/// ring's order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: RingRef,
    basis: Vec<Polynomial>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.basis == other.basis
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    /// Always true for values produced by [`groebner_basis`].
    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Basis of the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Remainder of `f` on division by `g`; zero exactly when `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    if !Ring::same(f.ring(), &g.ring) {
        return Err(crate::error::Error::Context(
            "polynomial and basis belong to different rings".into(),
        ));
    }
    Ok(reduce_full(f, &g.basis))
}

/// Index of the first divisor whose leading monomial divides `m`.
#[inline]
fn find_divisor(m: &Monomial, divisors: &[Polynomial]) -> Option<usize> {
    divisors
        .iter()
        .position(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
}

/// Reduces until the leading term is irreducible (or the result is zero).
/// Divisors must be monic.
fn reduce_top(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let mut f = f.clone();
    while let Some((m, c)) = f.leading_term() {
        let Some(k) = find_divisor(m, divisors) else { break };
        let g = &divisors[k];
        let q = m.div(g.leading_monomial().unwrap()).unwrap();
        let c = *c;
        f = f.sub_scaled_shift(c, &q, g);
    }
    f
}

/// Reduces every term of `f`. Divisors must be monic; ties go to the lowest index.
pub(crate) fn reduce_full(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let mut f = f.clone();
    let mut start = 0;
    loop {
        let hit = f.terms()[start..]
            .iter()
            .enumerate()
            .find_map(|(off, (m, c))| find_divisor(m, divisors).map(|k| (start + off, k, m.clone(), *c)));
        let Some((idx, k, m, c)) = hit else { return f };
        let g = &divisors[k];
        let q = m.div(g.leading_monomial().unwrap()).unwrap();
        f = f.sub_scaled_shift(c, &q, g);
        start = idx;
    }
}

/// S-polynomial of two monic polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let f = f.monic();
    let g = g.monic();
    let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = lf.lcm(lg);
    let a = f.mul_term(&l.div(lf).unwrap(), 1);
    a.sub_scaled_shift(1, &l.div(lg).unwrap(), &g)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    wdeg: u64,
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`.
///
/// Zero generators are ignored; an empty or all-zero list yields the empty
/// basis of the zero ideal.
pub fn groebner_basis(gens: &[Polynomial], ring: &RingRef) -> Result<GroebnerBasis> {
    for g in gens {
        if !Ring::same(g.ring(), ring) {
            return Err(crate::error::Error::Context(
                "generator does not belong to the target ring".into(),
            ));
        }
    }
    let order = ring.order();
    let weights = ring.weights().to_vec();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |h: Polynomial, basis: &mut Vec<Polynomial>, pairs: &mut Vec<Pair>, pending: &mut HashSet<(usize, usize)>| {
        let j = basis.len();
        let lh = h.leading_monomial().unwrap().clone();
        basis.push(h);
        for (i, b) in basis[..j].iter().enumerate() {
            let lcm = b.leading_monomial().unwrap().lcm(&lh);
            let wdeg = lcm.weighted_degree(&weights);
            pairs.push(Pair { i, j, lcm, wdeg });
            pending.insert((i, j));
        }
    };

    let mut inputs: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    if inputs.iter().any(|g| g.is_constant()) {
        return Ok(GroebnerBasis {
            ring: ring.clone(),
            basis: vec![Polynomial::one(ring)],
        });
    }
    // Deterministic processing order, independent of how the caller listed generators.
    inputs.sort_by(|a, b| cmp_poly(order, a, b));
    inputs.dedup();
    for g in inputs {
        let h = reduce_top(&g, &basis);
        if !h.is_zero() {
            push(h.monic(), &mut basis, &mut pairs, &mut pending);
        }
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.wdeg
                    .cmp(&q.wdeg)
                    .then_with(|| order.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        pending.remove(&(pair.i, pair.j));

        let (li, lj) = (
            basis[pair.i].leading_monomial().unwrap(),
            basis[pair.j].leading_monomial().unwrap(),
        );
        if li.is_coprime(lj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].leading_monomial().unwrap().divides(&pair.lcm)
                && !pending.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[pair.i], &basis[pair.j]);
        let h = reduce_top(&s, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(GroebnerBasis {
                ring: ring.clone(),
                basis: vec![Polynomial::one(ring)],
            });
        }
        push(h.monic(), &mut basis, &mut pairs, &mut pending);
    }

    Ok(GroebnerBasis {
        ring: ring.clone(),
        basis: interreduce(basis, order),
    })
}

fn cmp_poly(order: &MonomialOrder, a: &Polynomial, b: &Polynomial) -> Ordering {
    for (s, t) in a.terms().iter().zip(b.terms()) {
        let c = order.cmp(&s.0, &t.0).then_with(|| s.1.cmp(&t.1));
        if c != Ordering::Equal {
            return c;
        }
    }
    a.num_terms().cmp(&b.num_terms())
}

/// Turns any Gröbner basis into the reduced one.
pub(crate) fn interreduce(basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    let mut keep: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lg = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let lh = h.leading_monomial().unwrap();
            k != i && lh.divides(lg) && (lh != lg || k < i)
        });
        if !redundant {
            keep.push(g.monic());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Polynomial> = keep
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, h)| h.clone())
            .collect();
        out.push(reduce_full(&keep[i], &others).monic());
    }
    out.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}
