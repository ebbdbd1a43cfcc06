//! Sparse multivariate polynomials over a prime field.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::Monomial;
use crate::ring::{Ring, RingRef};
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

pub type Term = (Monomial, FieldElement);

/// Terms are kept strictly descending in the ring's order, with no zero
/// coefficients; the zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Homogeneity {
    Homogeneous(u64),
    Inhomogeneous,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic entry point.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    f.check_ring(g)?;
    Ok(match op {
        ArithOp::Add => f.add_unchecked(g),
        ArithOp::Sub => f.sub_unchecked(g),
        ArithOp::Mul => f.mul_unchecked(g),
    })
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), 1)
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: FieldElement) -> Self {
        let c = c % ring.p();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zero coefficients.
    pub fn from_terms(ring: &RingRef, mut terms: Vec<Term>) -> Self {
        let order = ring.order();
        let field = ring.field();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % field.p();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.1 == 0 {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    #[inline]
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    #[inline]
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    #[inline]
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.terms.first().map(|t| t.1)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Largest weighted degree of a term under the ring's weights.
    pub fn weighted_degree(&self) -> Option<u64> {
        let w = self.ring.weights();
        self.terms.iter().map(|(m, _)| m.weighted_degree(w)).max()
    }

    pub fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if Ring::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::Context("polynomials belong to different rings".into()))
        }
    }

    /// Common `w`-degree of all terms, if there is one.
    pub fn weighted_homogeneity(&self, w: &[u32]) -> Result<Homogeneity> {
        if w.len() != self.ring.nvars() {
            return Err(Error::arg("weight vector length does not match the ring"));
        }
        let mut degs = self.terms.iter().map(|(m, _)| m.weighted_degree(w));
        let Some(d) = degs.next() else {
            return Err(Error::Degenerate("the zero polynomial has no degree".into()));
        };
        if degs.all(|e| e == d) {
            Ok(Homogeneity::Homogeneous(d))
        } else {
            Ok(Homogeneity::Inhomogeneous)
        }
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.p();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(*a, c))).collect(),
        }
    }

    /// Rescales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c).expect("nonzero leading coefficient")),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: FieldElement) -> Polynomial {
        let f = self.ring.field();
        if c.is_multiple_of(f.p()) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), f.mul(*a, c))).collect(),
        }
    }

    /// Merges `a` with `mult * shift * b`, consuming `a`.
    fn merge(ring: &RingRef, a: Vec<Term>, b: &[Term], mult: FieldElement, shift: Option<&Monomial>) -> Vec<Term> {
        let order = ring.order();
        let f = ring.field();
        let mut out: Vec<Term> = Vec::with_capacity(a.len() + b.len());
        let shifted = |k: usize| -> Term {
            let (m, c) = &b[k];
            let m = match shift {
                Some(s) => m.mul(s),
                None => m.clone(),
            };
            (m, f.mul(*c, mult))
        };
        let mut a = a.into_iter().peekable();
        let mut j = 0;
        let mut pending: Option<Term> = (!b.is_empty()).then(|| shifted(0));
        loop {
            let Some(bt) = pending.as_mut() else {
                out.extend(a);
                break;
            };
            let Some(at) = a.peek() else {
                out.push(pending.take().unwrap());
                for k in j + 1..b.len() {
                    out.push(shifted(k));
                }
                break;
            };
            match order.cmp(&at.0, &bt.0) {
                Ordering::Greater => out.push(a.next().unwrap()),
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = (j < b.len()).then(|| shifted(j));
                }
                Ordering::Equal => {
                    let (m, c) = a.next().unwrap();
                    let c = f.add(c, bt.1);
                    if c != 0 {
                        out.push((m, c));
                    }
                    j += 1;
                    pending = (j < b.len()).then(|| shifted(j));
                }
            }
        }
        out
    }

    fn merged(&self, other: &Polynomial, mult: FieldElement) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: Self::merge(&self.ring, self.terms.clone(), &other.terms, mult, None),
        }
    }

    pub(crate) fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        self.merged(other, 1)
    }

    pub(crate) fn sub_unchecked(&self, other: &Polynomial) -> Polynomial {
        self.merged(other, self.ring.field().neg(1))
    }

    /// `self - c * m * g`, the elementary reduction step.
    pub(crate) fn sub_scaled_shift(self, c: FieldElement, m: &Monomial, g: &Polynomial) -> Polynomial {
        let mult = self.ring.field().neg(c);
        let terms = Self::merge(&self.ring, self.terms, &g.terms, mult, Some(m));
        Polynomial { ring: self.ring, terms }
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, big) = if self.num_terms() <= other.num_terms() { (self, other) } else { (other, self) };
        let f = self.ring.field();
        let mut terms = Vec::with_capacity(small.num_terms() * big.num_terms());
        for (m, c) in &small.terms {
            for (n, d) in &big.terms {
                terms.push((m.mul(n), f.mul(*c, *d)));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(self, other, ArithOp::Add)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(self, other, ArithOp::Sub)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(self, other, ArithOp::Mul)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Moves the polynomial into `target`, sending variable `i` to variable
    /// `map[i]` of the target ring.
    pub fn map_vars(&self, target: &RingRef, map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = Monomial::one(n);
                for (i, &x) in m.exponents().iter().enumerate() {
                    e.exponents_mut()[map[i]] += x;
                }
                (e, *c)
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Substitutes `images[i]` for variable `i`; the result lives in the
    /// images' ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        let Some(first) = images.first() else {
            return Err(Error::arg("no images given"));
        };
        if images.len() != self.ring.nvars() {
            return Err(Error::arg("one image per variable required"));
        }
        for g in images {
            first.check_ring(g)?;
        }
        let target = first.ring.clone();
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, *c as i64);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul_unchecked(&images[i].pow(e as u32));
                }
            }
            acc = acc.add_unchecked(&t);
        }
        Ok(acc)
    }

    /// Drops every term involving one of the variables flagged in `mask`,
    /// i.e. sets those variables to zero.
    pub fn set_zero(&self, mask: &[bool]) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponents().iter().zip(mask).all(|(&e, &z)| e == 0 || !z))
                .cloned()
                .collect(),
        }
    }

    /// Evaluates at a point of `F_p^n`.
    pub fn eval(&self, point: &[FieldElement]) -> FieldElement {
        let f = self.ring.field();
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v = f.mul(v, f.pow(point[i], e as u64));
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    /// Exact quotient `self / g`; `None` if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = g.leading_term()?;
        let field = self.ring.field();
        let lc_inv = field.inv(*lc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term().cloned() {
            let q = m.div(lm)?;
            let qc = field.mul(c, lc_inv);
            rem = rem.sub_scaled_shift(qc, &q, g);
            quot.push((q, qc));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Variables that occur in some term.
    pub fn support_mask(&self) -> u64 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support_mask())
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

macro_rules! op_impl {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl std::ops::$tr for &Polynomial {
            type Output = Polynomial;
            /// Panics if the operands live in different rings; use the
            /// checked methods for fallible arithmetic.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.check_ring(rhs).expect("ring mismatch");
                self.$inner(rhs)
            }
        }
    };
}

op_impl!(Add, add, add_unchecked);
op_impl!(Sub, sub, sub_unchecked);
op_impl!(Mul, mul, mul_unchecked);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let c = field.symmetric(*c);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.vars()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.vars()[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if abs != 1 {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
