//! Filtrations of ideals, their truncations, Rees-algebra presentations and
//! analytic spreads.
//!
//! The Rees algebra of a truncated filtration is presented as a quotient of
//! `k[T, x]`, where each `T_{n,j}` maps to `f_{n,j} t^n` for a chosen
//! generator `f_{n,j}` of `I_n` not already produced in lower degrees. The
//! fiber cone is `k[T]/Q₀` with `Q₀ = (Q + (x)) ∩ k[T]`, and its Krull
//! dimension is the analytic spread.

use crate::error::{Error, Result};
use crate::groebner::groebner_basis;
use crate::ideal::{ideal_equal, relative_generators, Ideal};
use crate::ideal_ops::{height, krull_dim, power, product, saturate, sum};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef};
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Mutex;

#[derive(Clone, Debug)]
pub enum FiltrationKind {
    /// `I_n = I^n`.
    Adic(Ideal),
    /// `I_n = I^n : J^∞`.
    Symbolic { ideal: Ideal, j: Ideal },
    /// Generated by `I_1..I_a`: `I_n = Σ I_i I_{n-i}` beyond `a`.
    Truncated(Vec<Ideal>),
    /// `I_n = m` for every `n ≥ 1`.
    TrivialM,
}

/// A descending multiplicative chain of ideals, materialized on demand.
/// Members are cached, so repeated requests are cheap.
#[derive(Debug)]
pub struct Filtration {
    ring: RingRef,
    kind: FiltrationKind,
    cache: Mutex<BTreeMap<u32, Ideal>>,
}

impl Filtration {
    pub fn adic(i: &Ideal) -> Self {
        Self::with_kind(i.ring(), FiltrationKind::Adic(i.clone()))
    }

    /// Symbolic filtration of `i` saturated at `j` (the maximal ideal when `None`).
    pub fn symbolic(i: &Ideal, j: Option<&Ideal>) -> Result<Self> {
        let j = match j {
            Some(j) => {
                if !Ring::same(i.ring(), j.ring()) {
                    return Err(Error::Context("saturating ideal from another ring".into()));
                }
                j.clone()
            }
            None => Ideal::maximal(i.ring()),
        };
        if i.is_unit() {
            return Err(Error::arg("symbolic powers need a proper ideal"));
        }
        if j.is_zero() || j.is_unit() {
            return Err(Error::arg("the saturating ideal must be proper and nonzero"));
        }
        Ok(Self::with_kind(i.ring(), FiltrationKind::Symbolic { ideal: i.clone(), j }))
    }

    /// The filtration generated by `members = [I_1, ..., I_a]`.
    pub fn truncated(members: Vec<Ideal>) -> Result<Self> {
        let Some(first) = members.first() else {
            return Err(Error::arg("a truncated filtration needs at least one member"));
        };
        let ring = first.ring().clone();
        if members.iter().any(|m| !Ring::same(m.ring(), &ring)) {
            return Err(Error::Context("filtration members from different rings".into()));
        }
        Ok(Self::with_kind(&ring, FiltrationKind::Truncated(members)))
    }

    pub fn trivial_m(ring: &RingRef) -> Self {
        Self::with_kind(ring, FiltrationKind::TrivialM)
    }

    fn with_kind(ring: &RingRef, kind: FiltrationKind) -> Self {
        Filtration { ring: ring.clone(), kind, cache: Mutex::new(BTreeMap::new()) }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn kind(&self) -> &FiltrationKind {
        &self.kind
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            FiltrationKind::Adic(_) => "adic",
            FiltrationKind::Symbolic { .. } => "symbolic",
            FiltrationKind::Truncated(_) => "truncated",
            FiltrationKind::TrivialM => "trivial-m",
        }
    }

    /// The member `I_n`; `I_0` is the unit ideal.
    pub fn materialize(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        if let Some(hit) = self.cache.lock().unwrap().get(&n) {
            return Ok(hit.clone());
        }
        let member = match &self.kind {
            FiltrationKind::Adic(i) => power(i, n),
            FiltrationKind::Symbolic { ideal, j } => saturate(&power(ideal, n), j)?.0,
            FiltrationKind::TrivialM => Ideal::maximal(&self.ring),
            FiltrationKind::Truncated(members) => {
                let a = members.len() as u32;
                if n <= a {
                    members[n as usize - 1].canonical()
                } else {
                    // every partition of n into parts <= a has some first part i
                    let mut acc = Ideal::zero(&self.ring);
                    for i in 1..=a {
                        let part = product(&members[i as usize - 1], &self.materialize(n - i)?)?;
                        acc = sum(&acc, &part)?;
                    }
                    acc.canonical()
                }
            }
        };
        self.cache.lock().unwrap().insert(n, member.clone());
        Ok(member)
    }
}

/// The `a`-th truncation: generated by the first `a` members of `f`.
pub fn truncate(f: &Filtration, a: u32) -> Result<Filtration> {
    if a < 1 {
        return Err(Error::arg("truncation degree must be at least 1"));
    }
    let members = (1..=a).map(|n| f.materialize(n)).collect::<Result<Vec<_>>>()?;
    Filtration::truncated(members)
}

/// `I^n : J^∞`, with `J` the maximal ideal by default.
pub fn symbolic_power(i: &Ideal, n: u32, j: Option<&Ideal>) -> Result<Ideal> {
    if n < 1 {
        return Err(Error::arg("symbolic power exponent must be at least 1"));
    }
    Filtration::symbolic(i, j)?.materialize(n)
}

/// Presentation of the Rees algebra of a truncated filtration.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    /// Ring `k[T, x]`, with the `T` variables first.
    pub ring: RingRef,
    /// Ring `k[T]`.
    pub fiber_ring: RingRef,
    /// `(n, f)` for each fiber variable `T`, in variable order.
    pub generators: Vec<(u32, Polynomial)>,
    /// Weight of each `T`: `wdeg(f) + n`.
    pub t_weights: Vec<u32>,
    /// Kernel `Q` of `T_{n,j} ↦ f_{n,j} t^n`, in `ring`.
    pub kernel: Ideal,
    /// `Q₀ = (Q + (x)) ∩ k[T]`, in `fiber_ring`.
    pub fiber_kernel: Ideal,
}

impl ReesPresentation {
    pub fn num_fiber_vars(&self) -> usize {
        self.t_weights.len()
    }

    /// Sends `T_{n,j}` to `f_{n,j} t^n` in `k[t, x]` (with `t` first).
    pub fn evaluate(&self, g: &Polynomial, base_with_t: &RingRef) -> Result<Polynomial> {
        let k = self.num_fiber_vars();
        let nx = self.ring.nvars() - k;
        let shift: Vec<usize> = (1..=nx).collect();
        let t = Polynomial::var(base_with_t, 0);
        let mut images: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|(n, f)| &f.map_vars(base_with_t, &shift) * &t.pow(*n))
            .collect();
        images.extend((0..nx).map(|i| Polynomial::var(base_with_t, i + 1)));
        g.substitute(&images)
    }
}

fn fresh_name(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('_');
    }
    name
}

/// Presents the Rees algebra of the truncation of `f` at `a`.
///
/// In degree `n` the chosen generators are elements of the reduced basis of
/// `I_n`, taken in ascending degree, that are not already in
/// `Σ_{0<i<n} I_i I_{n-i}` plus the previously chosen ones.
pub fn rees_presentation(f: &Filtration, a: u32) -> Result<ReesPresentation> {
    if a < 1 {
        return Err(Error::arg("presentation degree must be at least 1"));
    }
    let base = f.ring();
    let members = (1..=a).map(|n| f.materialize(n)).collect::<Result<Vec<_>>>()?;
    for m in &members {
        m.validate_homogeneous()?;
    }
    let mut generators: Vec<(u32, Polynomial)> = Vec::new();
    for n in 1..=a {
        let mut lower = Ideal::zero(base);
        for i in 1..n {
            lower = sum(&lower, &product(&members[i as usize - 1], &members[(n - i) as usize - 1])?)?;
        }
        for g in relative_generators(&members[n as usize - 1], &lower) {
            generators.push((n, g));
        }
    }
    if generators.is_empty() {
        return Err(Error::Degenerate("the filtration has no nonzero members".into()));
    }

    let k = generators.len();
    let nx = base.nvars();
    let mut names: Vec<String> = base.vars().to_vec();
    let mut t_names = Vec::with_capacity(k);
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for (n, _) in &generators {
        let j = counts.entry(*n).or_insert(0);
        *j += 1;
        let name = fresh_name(&format!("T{n}_{j}"), &names);
        names.push(name.clone());
        t_names.push(name);
    }
    let t_name = fresh_name("t", &names);
    let t_weights: Vec<u32> = generators
        .iter()
        .map(|(n, g)| g.weighted_degree().unwrap() as u32 + n)
        .collect();

    // elimination ring k[t, T, x] with t in its own block
    let mut e_vars = vec![t_name];
    e_vars.extend(t_names.iter().cloned());
    e_vars.extend(base.vars().iter().cloned());
    let mut e_weights = vec![1];
    e_weights.extend(&t_weights);
    e_weights.extend(base.weights());
    let elim = Ring::from_parts(
        *base.field(),
        e_vars,
        MonomialOrder::block(vec![0], MonomialOrder::WeightedGrevlex(e_weights.clone())),
        Some(e_weights.clone()),
    )?;
    let s_weights = e_weights[1..].to_vec();
    let mut s_vars = t_names.clone();
    s_vars.extend(base.vars().iter().cloned());
    let ring = Ring::from_parts(
        *base.field(),
        s_vars,
        MonomialOrder::WeightedGrevlex(s_weights.clone()),
        Some(s_weights),
    )?;
    let fiber_ring = Ring::from_parts(
        *base.field(),
        t_names,
        MonomialOrder::WeightedGrevlex(t_weights.clone()),
        Some(t_weights.clone()),
    )?;

    let x_shift: Vec<usize> = (0..nx).map(|i| 1 + k + i).collect();
    let t = Polynomial::var(&elim, 0);
    let rels: Vec<Polynomial> = generators
        .iter()
        .enumerate()
        .map(|(j, (n, g))| &Polynomial::var(&elim, 1 + j) - &(&g.map_vars(&elim, &x_shift) * &t.pow(*n)))
        .collect();
    let gb = groebner_basis(&rels, &elim)?;
    let back: Vec<usize> = (0..elim.nvars()).map(|i| i.saturating_sub(1)).collect();
    let q_gens: Vec<Polynomial> = gb
        .basis()
        .iter()
        .filter(|g| g.support_mask() & 1 == 0)
        .map(|g| g.map_vars(&ring, &back))
        .collect();
    let kernel = Ideal::new(&ring, q_gens)?.canonical();

    let x_mask: Vec<bool> = (0..ring.nvars()).map(|i| i >= k).collect();
    let to_fiber: Vec<usize> = (0..ring.nvars()).map(|i| i.min(k - 1)).collect();
    let q0: Vec<Polynomial> = kernel
        .gens()
        .iter()
        .map(|g| g.set_zero(&x_mask).map_vars(&fiber_ring, &to_fiber))
        .filter(|g| !g.is_zero())
        .collect();
    let fiber_kernel = Ideal::new(&fiber_ring, q0)?.canonical();

    Ok(ReesPresentation { ring, fiber_ring, generators, t_weights, kernel, fiber_kernel })
}

/// Printable summary of a presentation.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PresentationSummary {
    pub fiber_vars: Vec<String>,
    pub generator_degrees: Vec<u32>,
    pub generators: Vec<String>,
    pub t_weights: Vec<u32>,
    pub kernel: Vec<String>,
    pub fiber_kernel: Vec<String>,
}

impl From<&ReesPresentation> for PresentationSummary {
    fn from(p: &ReesPresentation) -> Self {
        PresentationSummary {
            fiber_vars: p.fiber_ring.vars().to_vec(),
            generator_degrees: p.generators.iter().map(|(n, _)| *n).collect(),
            generators: p.generators.iter().map(|(_, g)| g.to_string()).collect(),
            t_weights: p.t_weights.clone(),
            kernel: p.kernel.gens().iter().map(|g| g.to_string()).collect(),
            fiber_kernel: p.fiber_kernel.gens().iter().map(|g| g.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpreadReport {
    pub ell: i64,
    pub ht: i64,
    pub nvars: usize,
    /// `ht ≤ ell ≤ nvars`.
    pub bounds_ok: bool,
    /// Krull dimension of the Rees algebra `k[T, x]/Q`.
    pub rees_dim: i64,
    /// Least `e` with `ℓ(I_e) = ell`, for truncated filtrations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_bound: Option<u32>,
    pub presentation: PresentationSummary,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub rees: ReesPresentation,
}

fn check_spread_input(i: &Ideal) -> Result<()> {
    if i.is_zero() || i.is_unit() {
        return Err(Error::arg("analytic spread needs a proper nonzero ideal"));
    }
    if !i.inside_maximal() {
        return Err(Error::Precondition("the ideal is not contained in the maximal ideal".into()));
    }
    i.validate_homogeneous()
}

fn spread_from(rees: ReesPresentation, ht: i64, nvars: usize) -> SpreadReport {
    let ell = krull_dim(&rees.fiber_kernel);
    let rees_dim = krull_dim(&rees.kernel);
    SpreadReport {
        ell,
        ht,
        nvars,
        bounds_ok: ht <= ell && ell <= nvars as i64,
        rees_dim,
        witness: None,
        witness_bound: None,
        presentation: PresentationSummary::from(&rees),
        notes: Vec::new(),
        rees,
    }
}

/// `ℓ(I)`: the dimension of the fiber cone of the adic filtration.
pub fn analytic_spread(i: &Ideal) -> Result<SpreadReport> {
    check_spread_input(i)?;
    let rees = rees_presentation(&Filtration::adic(i), 1)?;
    Ok(spread_from(rees, height(i)?, i.ring().nvars()))
}

/// `ℓ(𝓘_a)` for the `a`-th truncation of `f`, plus a search over
/// `e ≤ bound` (default `3a`) for a member with `ℓ(I_{a,e}) = ℓ(𝓘_a)`.
pub fn analytic_spread_truncated(f: &Filtration, a: u32, bound: Option<u32>) -> Result<SpreadReport> {
    let trunc = truncate(f, a)?;
    let first = trunc.materialize(1)?;
    check_spread_input(&first)?;
    let rees = rees_presentation(&trunc, a)?;
    let mut report = spread_from(rees, height(&first)?, f.ring().nvars());
    let bound = bound.unwrap_or(3 * a);
    report.witness_bound = Some(bound);
    for e in 1..=bound {
        if analytic_spread(&trunc.materialize(e)?)?.ell == report.ell {
            report.witness = Some(e);
            break;
        }
    }
    if report.witness.is_none() {
        report.notes.push(format!("no member I_e with the same spread for e <= {bound}"));
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EquimultipleReport {
    pub equimultiple: bool,
    pub ht: i64,
    pub ell: i64,
}

/// Compares `ht(I)` with `ℓ(I)`.
pub fn equimultiple_check(i: &Ideal) -> Result<EquimultipleReport> {
    let s = analytic_spread(i)?;
    Ok(EquimultipleReport { equimultiple: s.ht == s.ell, ht: s.ht, ell: s.ell })
}

/// Least `m ≤ max_m` with `g^m ∈ m_R · I_{mn}`.
pub fn sp0_witness(f: &Filtration, n: u32, g: &Polynomial, max_m: u32) -> Result<Option<u32>> {
    if max_m < 1 || n < 1 {
        return Err(Error::arg("bounds must be at least 1"));
    }
    if !f.materialize(n)?.contains(g)? {
        return Err(Error::Precondition(format!("{g} is not in I_{n}")));
    }
    if g.is_zero() {
        return Ok(Some(1));
    }
    let m_r = Ideal::maximal(f.ring());
    for m in 1..=max_m {
        let target = product(&m_r, &f.materialize(m * n)?)?;
        if target.contains(&g.pow(m))? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct TruncationRow {
    pub a: u32,
    /// `I^(n) = I_{a,n}` for every `n ≤ N`.
    pub stable: bool,
    pub ell: i64,
    pub witness: Option<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymbolicSpreadRow {
    pub n: u32,
    pub ell: i64,
    /// `ℓ(I^(n)) < dim R`, the finite-generation criterion at the maximal ideal.
    pub below_dim: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FingenReport {
    pub max_a: u32,
    pub max_n: u32,
    pub nvars: usize,
    /// Least `a` whose truncation agrees with the symbolic filtration through `N`.
    pub stabilization: Option<u32>,
    pub truncations: Vec<TruncationRow>,
    pub some_spread_below_dim: bool,
    pub all_spreads_equal_dim: bool,
    pub symbolic_spreads: Vec<SymbolicSpreadRow>,
    pub label: String,
}

/// Finite-generation evidence for the symbolic algebra of `i` saturated at `j`.
pub fn fingen_probe(i: &Ideal, j: Option<&Ideal>, max_a: u32, max_n: u32) -> Result<FingenReport> {
    if max_a < 1 || max_n < 1 {
        return Err(Error::arg("bounds must be at least 1"));
    }
    if max_n < max_a {
        return Err(Error::arg("N must be at least A"));
    }
    let sym = Filtration::symbolic(i, j)?;
    probe_filtration(&sym, max_a, max_n)
}

/// The probe on an arbitrary filtration.
pub fn probe_filtration(f: &Filtration, max_a: u32, max_n: u32) -> Result<FingenReport> {
    let nvars = f.ring().nvars();
    let mut truncations = Vec::new();
    let mut stabilization = None;
    for a in 1..=max_a {
        let trunc = truncate(f, a)?;
        let mut stable = true;
        for n in (a + 1)..=max_n {
            if !ideal_equal(&f.materialize(n)?, &trunc.materialize(n)?)? {
                stable = false;
                break;
            }
        }
        if stable && stabilization.is_none() {
            stabilization = Some(a);
        }
        let s = analytic_spread_truncated(f, a, None)?;
        truncations.push(TruncationRow { a, stable, ell: s.ell, witness: s.witness });
    }
    let mut symbolic_spreads = Vec::new();
    for n in 1..=max_a {
        let ell = analytic_spread(&f.materialize(n)?)?.ell;
        symbolic_spreads.push(SymbolicSpreadRow { n, ell, below_dim: ell < nvars as i64 });
    }
    Ok(FingenReport {
        max_a,
        max_n,
        nvars,
        stabilization,
        some_spread_below_dim: truncations.iter().any(|t| t.ell < nvars as i64),
        all_spreads_equal_dim: truncations.iter().all(|t| t.ell == nvars as i64),
        truncations,
        symbolic_spreads,
        label: format!("evidence up to bound a = {max_a}, n = {max_n}"),
    })
}
