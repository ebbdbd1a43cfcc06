//! Newton polyhedra and integral closure of monomial ideals.
//!
//! Hull membership is decided by Fourier–Motzkin elimination over an exact
//! ordered field. The elimination is generic over the scalar type; the
//! closure routine instantiates it with [`crate::Rational`].

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ideal_ops::{is_max_ideal_associated, power};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use num_traits::{FromPrimitive, Signed};
use std::fmt::Debug;

/// Exact ordered field usable by the elimination.
pub trait ExactScalar: Clone + Ord + Signed + FromPrimitive + Debug {}

impl<T: Clone + Ord + Signed + FromPrimitive + Debug> ExactScalar for T {}

/// One inequality `coeffs · x <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality<T> {
    pub coeffs: Vec<T>,
    pub rhs: T,
}

impl<T: ExactScalar> Inequality<T> {
    pub fn new(coeffs: Vec<T>, rhs: T) -> Self {
        Inequality { coeffs, rhs }
    }

    /// Scales so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).cloned() {
            let s = lead.abs();
            for c in self.coeffs.iter_mut() {
                *c = c.clone() / s.clone();
            }
            self.rhs = self.rhs / s;
        }
        self
    }
}

/// Whether the system has a real solution, by eliminating every variable.
pub fn fourier_motzkin_feasible<T: ExactScalar>(system: &[Inequality<T>], nvars: usize) -> bool {
    let mut rows: Vec<Inequality<T>> = system.to_vec();
    for k in 0..nvars {
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            if r.coeffs[k].is_positive() {
                pos.push(r);
            } else if r.coeffs[k].is_negative() {
                neg.push(r);
            } else {
                keep.push(r);
            }
        }
        for p in &pos {
            for q in &neg {
                let (a, b) = (p.coeffs[k].clone(), q.coeffs[k].abs());
                // b*p + a*q cancels variable k
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(x, y)| b.clone() * x.clone() + a.clone() * y.clone())
                    .collect();
                let rhs = b.clone() * p.rhs.clone() + a.clone() * q.rhs.clone();
                keep.push(Inequality::new(coeffs, rhs));
            }
        }
        rows = prune(keep);
    }
    rows.iter().all(|r| !r.rhs.is_negative())
}

/// Normalizes rows and keeps, for each coefficient vector, the tightest bound.
fn prune<T: ExactScalar>(rows: Vec<Inequality<T>>) -> Vec<Inequality<T>> {
    let mut out: Vec<Inequality<T>> = Vec::new();
    for r in rows.into_iter().map(Inequality::normalized) {
        if let Some(existing) = out.iter_mut().find(|e| e.coeffs == r.coeffs) {
            if r.rhs < existing.rhs {
                existing.rhs = r.rhs;
            }
        } else {
            out.push(r);
        }
    }
    out
}

/// Whether `point` lies in `conv(gens) + R^n_{>=0}`.
pub fn in_newton_polyhedron<T: ExactScalar>(gens: &[Vec<i64>], point: &[i64]) -> bool {
    let k = gens.len();
    if k == 0 {
        return false;
    }
    let c = |v: i64| T::from_i64(v).expect("integer fits the scalar type");
    let mut rows = Vec::new();
    // sum_i lambda_i g_i[j] <= point[j]
    for (j, &pj) in point.iter().enumerate() {
        rows.push(Inequality::new(gens.iter().map(|g| c(g[j])).collect(), c(pj)));
    }
    rows.push(Inequality::new(vec![c(1); k], c(1)));
    rows.push(Inequality::new(vec![c(-1); k], c(-1)));
    for i in 0..k {
        let mut v = vec![c(0); k];
        v[i] = c(-1);
        rows.push(Inequality::new(v, c(0)));
    }
    fourier_motzkin_feasible(&rows, k)
}

/// Drops monomials divisible by another one in the list; sorts the rest.
pub fn minimize_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let keep: Vec<Monomial> = gens
        .iter()
        .filter(|m| !gens.iter().any(|d| d != *m && d.divides(m)))
        .cloned()
        .collect();
    keep
}

/// Integral closure of a monomial ideal: the monomials whose exponents lie in
/// the Newton polyhedron. Candidates are bounded by the componentwise maximum
/// of the generator exponents, which contains every minimal generator.
pub fn monomial_integral_closure(a: &Ideal) -> Result<Ideal> {
    let ring = a.ring();
    let gens = a
        .monomial_gens()
        .ok_or_else(|| Error::arg("integral closure is implemented for monomial ideals only"))?;
    if gens.is_empty() {
        return Ok(Ideal::zero(ring));
    }
    let gens = minimize_monomials(gens);
    if gens.iter().any(|m| m.is_one()) {
        return Ok(Ideal::unit(ring));
    }
    let n = ring.nvars();
    let exps: Vec<Vec<i64>> = gens.iter().map(|m| m.exponents().iter().map(|&e| e as i64).collect()).collect();
    let bound: Vec<u16> = (0..n).map(|j| gens.iter().map(|m| m.exponents()[j]).max().unwrap()).collect();

    let mut found: Vec<Monomial> = Vec::new();
    let mut cur = vec![0u16; n];
    loop {
        let m = Monomial::from_exponents(&cur);
        // skip points already covered by a found element
        if !found.iter().any(|f| f.divides(&m)) {
            let pt: Vec<i64> = cur.iter().map(|&e| e as i64).collect();
            if in_newton_polyhedron::<crate::Rational>(&exps, &pt) {
                found.push(m);
            }
        }
        // odometer increment, first coordinate fastest
        let mut j = 0;
        loop {
            if j == n {
                let gens = minimize_monomials(found)
                    .into_iter()
                    .map(|m| Polynomial::monomial(ring, m, 1))
                    .collect();
                return Ideal::new(ring, gens);
            }
            if cur[j] < bound[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = 0;
            j += 1;
        }
    }
}

/// Least `k <= max_power` such that the maximal ideal is associated to the
/// integral closure of `A^k`, for monomial `A`.
pub fn max_ideal_associated_to_closed_power(a: &Ideal, max_power: u32) -> Result<Option<u32>> {
    if !a.is_monomial() {
        return Err(Error::arg("closure of powers is implemented for monomial ideals only"));
    }
    for k in 1..=max_power {
        let closed = monomial_integral_closure(&power(a, k))?;
        if is_max_ideal_associated(&closed)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}
