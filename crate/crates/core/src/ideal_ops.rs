//! Ideal calculus: sums, products, powers, intersections, colon ideals,
//! saturation, elimination, dimension and height.

use crate::error::{Error, Result};
use crate::groebner::groebner_basis;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    Sum,
    Product,
    Power(i64),
}

fn same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if Ring::same(a.ring(), b.ring()) {
        Ok(())
    } else {
        Err(Error::Context("ideals belong to different rings".into()))
    }
}

/// Sum, product, or power (`B` is ignored for powers).
pub fn ideal_combine(a: &Ideal, b: &Ideal, op: Combine) -> Result<Ideal> {
    match op {
        Combine::Sum => sum(a, b),
        Combine::Product => product(a, b),
        Combine::Power(k) => {
            if k < 0 {
                return Err(Error::arg("negative ideal power"));
            }
            Ok(power(a, k as u32))
        }
    }
}

pub fn sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    let mut gens = a.gens().to_vec();
    gens.extend(b.gens().iter().cloned());
    Ideal::new(a.ring(), gens)
}

/// Generators are all pairwise products of the operands' generators.
pub fn product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    let mut gens = Vec::with_capacity(a.gens().len() * b.gens().len());
    for f in a.gens().iter().filter(|f| !f.is_zero()) {
        for g in b.gens().iter().filter(|g| !g.is_zero()) {
            let h = f * g;
            if !gens.contains(&h) {
                gens.push(h);
            }
        }
    }
    Ideal::new(a.ring(), gens)
}

/// `A^k`; `A^0` is the unit ideal. Intermediate powers are replaced by their
/// reduced bases to keep generator lists short.
pub fn power(a: &Ideal, k: u32) -> Ideal {
    if k == 0 {
        return Ideal::unit(a.ring());
    }
    let base = a.canonical();
    let mut acc = base.clone();
    for _ in 1..k {
        acc = product(&acc, &base).expect("same ring").canonical();
    }
    acc
}

/// `A ∩ B`, computed as `(t·A + (1-t)·B) ∩ R` by eliminating `t`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let ext = ring.with_leading_block(&[("t".to_string(), 1)])?;
    let shift: Vec<usize> = (1..=ring.nvars()).collect();
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::new();
    for f in a.gens() {
        gens.push(&t * &f.map_vars(&ext, &shift));
    }
    for g in b.gens() {
        gens.push(&one_minus_t * &g.map_vars(&ext, &shift));
    }
    Ok(Ideal::new(ring, drop_leading(&ext, &gens, 1, ring)?)?.canonical())
}

/// Computes a basis in `ext` (block order on its first `k` variables) and
/// returns the elements free of those variables, moved back into `target`.
fn drop_leading(ext: &RingRef, gens: &[Polynomial], k: usize, target: &RingRef) -> Result<Vec<Polynomial>> {
    let gb = groebner_basis(gens, ext)?;
    let mask: u64 = (1u64 << k) - 1;
    let back: Vec<usize> = (0..ext.nvars()).map(|i| i.saturating_sub(k)).collect();
    Ok(gb
        .basis()
        .iter()
        .filter(|g| g.support_mask() & mask == 0)
        .map(|g| g.map_vars(target, &back))
        .collect())
}

/// `A : (f)` for a single nonzero `f`, via `(A ∩ (f)) / f`.
fn quotient_principal(a: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let meet = intersect(a, &Ideal::principal(f.clone()))?;
    let gens = meet
        .gens()
        .iter()
        .map(|g| g.exact_div(f).ok_or_else(|| Error::Degenerate("intersection element not divisible".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(a.ring(), gens)?.canonical())
}

/// `A : B = {f | f·B ⊆ A}`, as the intersection of `A : (b)` over generators of `B`.
pub fn quotient(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    let bs: Vec<&Polynomial> = b.gens().iter().filter(|g| !g.is_zero()).collect();
    if bs.is_empty() {
        return Err(Error::arg("quotient by the zero ideal"));
    }
    let mut acc: Option<Ideal> = None;
    for f in bs {
        let q = if a.contains(f)? {
            Ideal::unit(a.ring())
        } else {
            quotient_principal(a, f)?
        };
        acc = Some(match acc {
            None => q,
            Some(prev) => intersect(&prev, &q)?,
        });
    }
    Ok(acc.unwrap())
}

/// `A : B^∞` by iterated colon, together with the least `k` such that
/// `A : B^k = A : B^(k+1)`.
pub fn saturate(a: &Ideal, b: &Ideal) -> Result<(Ideal, usize)> {
    same_ring(a, b)?;
    if b.is_zero() {
        return Err(Error::arg("saturation by the zero ideal"));
    }
    let mut current = a.canonical();
    let mut k = 0;
    loop {
        let next = quotient(&current, b)?;
        if next.equals(&current)? {
            return Ok((current, k));
        }
        current = next;
        k += 1;
    }
}

/// `A : B^∞` via an extra variable: for each generator `g` of `B`,
/// `A : g^∞ = (A + (1 - y·g)) ∩ R`; the results are intersected.
pub fn saturate_by_extra_variable(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    let ring = a.ring();
    let bs: Vec<&Polynomial> = b.gens().iter().filter(|g| !g.is_zero()).collect();
    if bs.is_empty() {
        return Err(Error::arg("saturation by the zero ideal"));
    }
    let ext = ring.with_leading_block(&[("y".to_string(), 1)])?;
    let shift: Vec<usize> = (1..=ring.nvars()).collect();
    let y = Polynomial::var(&ext, 0);
    let mut acc: Option<Ideal> = None;
    for g in bs {
        let mut gens: Vec<Polynomial> = a.gens().iter().map(|f| f.map_vars(&ext, &shift)).collect();
        gens.push(&Polynomial::one(&ext) - &(&y * &g.map_vars(&ext, &shift)));
        let part = Ideal::new(ring, drop_leading(&ext, &gens, 1, ring)?)?;
        acc = Some(match acc {
            None => part.canonical(),
            Some(prev) => intersect(&prev, &part)?,
        });
    }
    Ok(acc.unwrap())
}

/// `A ∩ k[remaining variables]`, as an ideal of the same ring.
pub fn eliminate(a: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let ring = a.ring();
    let n = ring.nvars();
    if vars.is_empty() {
        return Err(Error::arg("no variables to eliminate"));
    }
    if vars.iter().any(|&v| v >= n) {
        return Err(Error::arg("variable index out of range"));
    }
    let mut vs = vars.to_vec();
    vs.sort_unstable();
    vs.dedup();
    if vs.len() == n {
        return Err(Error::arg("cannot eliminate every variable"));
    }
    let mask = vs.iter().fold(0u64, |acc, &i| acc | (1u64 << i));
    let block = ring.with_order(MonomialOrder::block(
        vs,
        MonomialOrder::WeightedGrevlex(ring.weights().to_vec()),
    ))?;
    let ident: Vec<usize> = (0..n).collect();
    let gens: Vec<Polynomial> = a.gens().iter().map(|g| g.map_vars(&block, &ident)).collect();
    let gb = groebner_basis(&gens, &block)?;
    let kept: Vec<Polynomial> = gb
        .basis()
        .iter()
        .filter(|g| g.support_mask() & mask == 0)
        .map(|g| g.map_vars(ring, &ident))
        .collect();
    Ok(Ideal::new(ring, kept)?.canonical())
}

/// Krull dimension of `R/A` from the leading-term ideal; `-1` for the unit ideal.
pub fn krull_dim(a: &Ideal) -> i64 {
    let gb = a.gb();
    if gb.is_unit() {
        return -1;
    }
    krull_dim_monomial(a.ring().nvars(), &gb.leading_monomials())
}

/// Dimension of `k[x_1..x_n]/(monomials)`: the largest set of variables
/// containing the support of no generator. Supports at most 64 variables.
pub fn krull_dim_monomial(nvars: usize, gens: &[Monomial]) -> i64 {
    assert!(nvars <= 64, "dimension search supports at most 64 variables");
    if gens.iter().any(|m| m.is_one()) {
        return -1;
    }
    let mut supports: Vec<u64> = gens.iter().map(|m| m.support_mask()).collect();
    supports.sort_unstable();
    supports.dedup();
    let mut best = 0usize;
    search_independent(0, nvars, 0, 0, &supports, &mut best);
    best as i64
}

fn search_independent(i: usize, n: usize, set: u64, size: usize, supports: &[u64], best: &mut usize) {
    if size > *best {
        *best = size;
    }
    if i == n || size + (n - i) <= *best {
        return;
    }
    let with = set | (1u64 << i);
    if supports.iter().all(|&s| s & !with != 0) {
        search_independent(i + 1, n, with, size + 1, supports, best);
    }
    search_independent(i + 1, n, set, size, supports, best);
}

/// `n - dim(R/A)` for proper nonzero `A`.
pub fn height(a: &Ideal) -> Result<i64> {
    if a.is_zero() || a.gb().is_empty() {
        return Err(Error::arg("height of the zero ideal"));
    }
    if a.is_unit() {
        return Err(Error::arg("height of the unit ideal"));
    }
    Ok(a.ring().nvars() as i64 - krull_dim(a))
}

/// Whether the ideal of all variables is an associated prime of `R/A`,
/// i.e. whether saturating by it strictly enlarges `A`. One colon step
/// decides this: `A : m ≠ A` exactly when the saturation grows.
pub fn is_max_ideal_associated(a: &Ideal) -> Result<bool> {
    if a.is_unit() {
        return Err(Error::Precondition("the unit ideal has no associated primes".into()));
    }
    let m = Ideal::maximal(a.ring());
    Ok(!quotient(a, &m)?.equals(a)?)
}
