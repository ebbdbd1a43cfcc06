//! Ideals with a lazily cached reduced Gröbner basis.

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, GroebnerBasis};
use crate::monomial::Monomial;
use crate::parse::parse_poly_list;
use crate::poly::{Homogeneity, Polynomial};
use crate::ring::{Ring, RingRef};
use std::fmt;
use std::sync::OnceLock;

#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if !Ring::same(g.ring(), ring) {
                return Err(Error::Context("generator from another ring".into()));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        })
    }

    pub fn parse(ring: &RingRef, src: &str) -> Result<Self> {
        Self::new(ring, parse_poly_list(ring, src)?)
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
            gb: OnceLock::new(),
        }
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &RingRef) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect(),
            gb: OnceLock::new(),
        }
    }

    pub fn principal(f: Polynomial) -> Self {
        Ideal {
            ring: f.ring().clone(),
            gens: vec![f],
            gb: OnceLock::new(),
        }
    }

    /// Ideal generated by a reduced basis, with the basis pre-seeded.
    pub(crate) fn from_basis(gb: GroebnerBasis) -> Self {
        let cell = OnceLock::new();
        let ideal = Ideal {
            ring: gb.ring().clone(),
            gens: gb.basis().to_vec(),
            gb: cell,
        };
        let _ = ideal.gb.set(gb);
        ideal
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The reduced Gröbner basis, computed on first use.
    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| groebner_basis(&self.gens, &self.ring).expect("generators checked at construction"))
    }

    /// Same ideal with the reduced basis as generators.
    pub fn canonical(&self) -> Ideal {
        Ideal::from_basis(self.gb().clone())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.gb().contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff the reduced bases coincide.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        ideal_equal(self, other)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.num_terms() <= 1)
    }

    /// Nonzero generators as monomials, if the ideal is given by monomials.
    pub fn monomial_gens(&self) -> Option<Vec<Monomial>> {
        if !self.is_monomial() {
            return None;
        }
        Some(self.gens.iter().filter_map(|g| g.leading_monomial().cloned()).collect())
    }

    /// Fails unless every nonzero generator is homogeneous for the ring weights.
    pub fn validate_homogeneous(&self) -> Result<()> {
        let w = self.ring.weights();
        for g in self.gens.iter().filter(|g| !g.is_zero()) {
            if g.weighted_homogeneity(w)? == Homogeneity::Inhomogeneous {
                return Err(Error::Validation(format!(
                    "generator {g} is not homogeneous for weights {w:?}"
                )));
            }
        }
        Ok(())
    }

    /// True when every generator lies in the ideal of all variables.
    pub fn inside_maximal(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.terms().iter().all(|(m, _)| !m.is_one()))
    }

    /// A minimal generating set drawn from the reduced basis (for homogeneous
    /// ideals; otherwise just a non-redundant generating set).
    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        relative_generators(self, &Ideal::zero(&self.ring))
    }
}

/// Elements of the reduced basis of `target`, in ascending weighted degree and
/// canonical order, kept greedily when not already in `base` plus the
/// previously kept ones. Together with `base` they generate `target + base`.
pub fn relative_generators(target: &Ideal, base: &Ideal) -> Vec<Polynomial> {
    let ring = target.ring();
    let mut cands: Vec<Polynomial> = target.gb().basis().to_vec();
    let order = ring.order();
    cands.sort_by(|a, b| {
        a.weighted_degree()
            .cmp(&b.weighted_degree())
            .then_with(|| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()))
    });
    let mut kept: Vec<Polynomial> = Vec::new();
    let base_gens: Vec<Polynomial> = base.gb().basis().to_vec();
    let mut current = base.gb().clone();
    for f in cands {
        if current.contains(&f).expect("same ring") {
            continue;
        }
        kept.push(f);
        let mut all = base_gens.clone();
        all.extend(kept.iter().cloned());
        current = groebner_basis(&all, ring).expect("same ring");
    }
    kept
}

/// Equality of ideals via their reduced bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if !Ring::same(&a.ring, &b.ring) {
        return Err(Error::Context("ideals belong to different rings".into()));
    }
    Ok(a.gb() == b.gb())
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}
