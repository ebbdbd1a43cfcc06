use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::order::MonomialOrder;
use std::sync::Arc;

/// A polynomial ring `F_p[x_1..x_n]` with a monomial order and a positive
/// weight vector.
///
/// The weights model the graded-local convention: ideals handed to the spread
/// machinery must be homogeneous for them, so computations in the polynomial
/// ring agree with the local ring at the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
    weights: Vec<u32>,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(p: u32, vars: &[&str], order: MonomialOrder, weights: Option<Vec<u32>>) -> Result<RingRef> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        Self::from_parts(PrimeField::new(p)?, vars, order, weights)
    }

    /// Standard-graded ring under grevlex.
    pub fn standard(p: u32, vars: &[&str]) -> Result<RingRef> {
        Self::new(p, vars, MonomialOrder::Grevlex, None)
    }

    pub fn from_parts(
        field: PrimeField,
        vars: Vec<String>,
        order: MonomialOrder,
        weights: Option<Vec<u32>>,
    ) -> Result<RingRef> {
        let n = vars.len();
        if n == 0 {
            return Err(Error::arg("a ring needs at least one variable"));
        }
        for (i, v) in vars.iter().enumerate() {
            let ok = v.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::arg(format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::arg(format!("duplicate variable {v}")));
            }
        }
        let weights = weights.unwrap_or_else(|| vec![1; n]);
        if weights.len() != n {
            return Err(Error::arg(format!("{} weights for {n} variables", weights.len())));
        }
        if weights.contains(&0) {
            return Err(Error::arg("weights must be strictly positive"));
        }
        order.validate(n)?;
        Ok(Arc::new(Ring {
            field,
            vars,
            order,
            weights,
        }))
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    #[inline]
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Same variables and weights under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef> {
        Self::from_parts(self.field, self.vars.clone(), order, Some(self.weights.clone()))
    }

    /// Prepends `extra` variables (with their weights) to this ring's, under a
    /// block order eliminating the new ones first. Existing variable `i`
    /// becomes `extra.len() + i`.
    pub fn with_leading_block(&self, extra: &[(String, u32)]) -> Result<RingRef> {
        let k = extra.len();
        let mut vars: Vec<String> = extra.iter().map(|(v, _)| v.clone()).collect();
        let mut weights: Vec<u32> = extra.iter().map(|(_, w)| *w).collect();
        for (v, w) in self.vars.iter().zip(&self.weights) {
            let mut name = v.clone();
            while vars.contains(&name) {
                name.push('_');
            }
            vars.push(name);
            weights.push(*w);
        }
        let inner = MonomialOrder::WeightedGrevlex(weights.clone());
        Self::from_parts(
            self.field,
            vars,
            MonomialOrder::block((0..k).collect(), inner),
            Some(weights),
        )
    }

    /// Whether two ring handles denote the same ring.
    pub fn same(a: &RingRef, b: &RingRef) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}
