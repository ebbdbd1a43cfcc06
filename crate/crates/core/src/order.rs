//! Monomial orders.
//!
//! Every order compares exponent vectors, optionally restricted to a subset
//! of the variables; block orders compare their two blocks that way.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Weighted degree first, ties broken by grevlex.
    WeightedGrevlex(Vec<u32>),
    /// Any monomial involving an eliminated variable is larger than every
    /// monomial free of them. Within each block the inner order decides.
    Block {
        eliminate: Vec<usize>,
        inner: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn block(eliminate: Vec<usize>, inner: MonomialOrder) -> Self {
        MonomialOrder::Block {
            eliminate,
            inner: Box::new(inner),
        }
    }

    /// Checks the order against a ring with `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        match self {
            MonomialOrder::Grevlex | MonomialOrder::Lex => Ok(()),
            MonomialOrder::WeightedGrevlex(w) => {
                if w.len() != nvars {
                    return Err(Error::arg(format!(
                        "weight vector has {} entries for {nvars} variables",
                        w.len()
                    )));
                }
                if w.contains(&0) {
                    return Err(Error::arg("order weights must be positive"));
                }
                Ok(())
            }
            MonomialOrder::Block { eliminate, inner } => {
                if matches!(**inner, MonomialOrder::Block { .. }) {
                    return Err(Error::arg("nested block orders are not supported"));
                }
                if eliminate.iter().any(|&i| i >= nvars) || nvars > 64 {
                    return Err(Error::arg("block order names a variable out of range"));
                }
                inner.validate(nvars)
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::WeightedGrevlex(w) => format!(
                "wgrevlex({})",
                w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
            MonomialOrder::Block { eliminate, inner } => format!(
                "block({};{})",
                eliminate.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                inner.name()
            ),
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Block { eliminate, inner } => {
                let elim = eliminate.iter().fold(0u64, |acc, &i| acc | (1u64 << i));
                let w = match &**inner {
                    MonomialOrder::WeightedGrevlex(w) => Some(w.as_slice()),
                    MonomialOrder::Grevlex => None,
                    _ => {
                        return inner
                            .cmp_sel(a, b, |i| elim >> i & 1 == 1)
                            .then_with(|| inner.cmp_sel(a, b, |i| elim >> i & 1 == 0))
                    }
                };
                // one pass for the (weighted) degrees of both blocks
                let mut deg = [0u64; 4];
                for i in 0..a.len() {
                    let wi = w.map_or(1, |w| w[i] as u64);
                    let k = if elim >> i & 1 == 1 { 0 } else { 2 };
                    deg[k] += a[i] as u64 * wi;
                    deg[k + 1] += b[i] as u64 * wi;
                }
                if deg[0] != deg[1] {
                    return deg[0].cmp(&deg[1]);
                }
                let tie = grevlex(a, b, &|i| elim >> i & 1 == 1);
                if tie != Ordering::Equal {
                    return tie;
                }
                deg[2].cmp(&deg[3]).then_with(|| grevlex(a, b, &|i| elim >> i & 1 == 0))
            }
            _ => self.cmp_sel(a, b, |_| true),
        }
    }

    /// Block comparison without the single-pass shortcut.
    #[cfg(test)]
    fn cmp_block_generic(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            MonomialOrder::Block { eliminate, inner } => {
                let elim = eliminate.iter().fold(0u64, |acc, &i| acc | (1u64 << i));
                inner
                    .cmp_sel(a, b, |i| elim >> i & 1 == 1)
                    .then_with(|| inner.cmp_sel(a, b, |i| elim >> i & 1 == 0))
            }
            _ => self.cmp_sel(a, b, |_| true),
        }
    }

    /// Compares on the variables selected by `sel`; never called on a block order.
    #[inline]
    fn cmp_sel<F: Fn(usize) -> bool>(&self, a: &[u16], b: &[u16], sel: F) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(a, b, &sel),
            MonomialOrder::Lex => lex(a, b, &sel),
            MonomialOrder::WeightedGrevlex(w) => {
                let wa = weighted(a, w, &sel);
                let wb = weighted(b, w, &sel);
                wa.cmp(&wb).then_with(|| grevlex(a, b, &sel))
            }
            MonomialOrder::Block { .. } => unreachable!("nested block order"),
        }
    }
}

fn weighted<F: Fn(usize) -> bool>(a: &[u16], w: &[u32], sel: &F) -> u64 {
    a.iter()
        .enumerate()
        .filter(|(i, _)| sel(*i))
        .map(|(i, &e)| e as u64 * w[i] as u64)
        .sum()
}

fn grevlex<F: Fn(usize) -> bool>(a: &[u16], b: &[u16], sel: &F) -> Ordering {
    let (mut da, mut db) = (0u64, 0u64);
    for i in 0..a.len() {
        if sel(i) {
            da += a[i] as u64;
            db += b[i] as u64;
        }
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if sel(i) && a[i] != b[i] {
            // smaller exponent in the last differing variable wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn lex<F: Fn(usize) -> bool>(a: &[u16], b: &[u16], sel: &F) -> Ordering {
    for i in 0..a.len() {
        if sel(i) && a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}
