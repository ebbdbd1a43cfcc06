//! Plane curves through fat points over F_p.
//!
//! Forms of degree `d` in `x, y, z` are coefficient vectors indexed by
//! [`mono_index`]. Vanishing to order `m` at a point is imposed by moving the
//! point's first nonzero coordinate to 1, expanding in the other two
//! coordinates around the point, and zeroing every local coefficient of
//! total degree below `m`.

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::ideal::Ideal;
use crate::ideal_ops::krull_dim;
use crate::linalg::{nullspace, EchelonBasis};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashMap;

/// Number of degree-`d` monomials in three variables.
pub fn num_monomials(d: u32) -> usize {
    ((d + 1) * (d + 2) / 2) as usize
}

/// Position of `x^a y^b z^c` among degree-`a+b+c` monomials.
#[inline]
pub fn mono_index(e: [u32; 3]) -> usize {
    let s = (e[1] + e[2]) as usize;
    s * (s + 1) / 2 + e[2] as usize
}

/// Exponent triples of degree `d` in index order.
pub fn monomials(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(num_monomials(d));
    for s in 0..=d {
        for c in 0..=s {
            out.push([d - s, s - c, c]);
        }
    }
    out
}

/// Product of two forms given by coefficient vectors.
pub fn mul_forms(field: &PrimeField, f: &[FieldElement], df: u32, g: &[FieldElement], dg: u32) -> Vec<FieldElement> {
    let (mf, mg) = (monomials(df), monomials(dg));
    let mut out = vec![0u64; num_monomials(df + dg)];
    let p = field.p() as u64;
    for (ea, &ca) in mf.iter().zip(f) {
        if ca == 0 {
            continue;
        }
        for (eb, &cb) in mg.iter().zip(g) {
            if cb == 0 {
                continue;
            }
            let k = mono_index([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]]);
            out[k] = (out[k] + ca as u64 * cb as u64) % p;
        }
    }
    out.into_iter().map(|v| v as u32).collect()
}

/// `x_k · f`.
pub fn mul_var(f: &[FieldElement], d: u32, k: usize) -> Vec<FieldElement> {
    let mut out = vec![0; num_monomials(d + 1)];
    for (e, &c) in monomials(d).iter().zip(f) {
        let mut e = *e;
        e[k] += 1;
        out[mono_index(e)] = c;
    }
    out
}

/// Converts a coefficient vector to a polynomial in a three-variable ring.
pub fn form_to_poly(ring: &RingRef, f: &[FieldElement], d: u32) -> Polynomial {
    let terms = monomials(d)
        .iter()
        .zip(f)
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| (Monomial::from_exponents(&[e[0] as u16, e[1] as u16, e[2] as u16]), c))
        .collect();
    Polynomial::from_terms(ring, terms)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Constraint {
    None,
    Elliptic,
}

/// Points of the projective plane with multiplicities, optionally on a cubic.
#[derive(Clone, Debug, Serialize)]
pub struct FatPointScheme {
    #[serde(skip)]
    pub field: PrimeField,
    pub p: u32,
    pub seed: u64,
    pub constraint: Constraint,
    /// Representatives with first nonzero coordinate equal to 1.
    pub points: Vec<[FieldElement; 3]>,
    pub multiplicities: Vec<u32>,
    /// Coefficients of the cubic in the elliptic case.
    pub cubic: Option<Vec<FieldElement>>,
}

fn normalize(field: &PrimeField, v: [FieldElement; 3]) -> Option<[FieldElement; 3]> {
    let lead = *v.iter().find(|&&c| c != 0)?;
    let inv = field.inv(lead)?;
    Some(v.map(|c| field.mul(c, inv)))
}

fn eval_form(field: &PrimeField, f: &[FieldElement], d: u32, pt: [FieldElement; 3]) -> FieldElement {
    monomials(d).iter().zip(f).fold(0, |acc, (e, &c)| {
        let t = (0..3).fold(c, |t, i| field.mul(t, field.pow(pt[i], e[i] as u64)));
        field.add(acc, t)
    })
}

fn cubic_is_smooth(field: &PrimeField, g: &[FieldElement]) -> Result<bool> {
    let ring = Ring::standard(field.p(), &["x", "y", "z"])?;
    let gp = form_to_poly(&ring, g, 3);
    let mut gens = vec![gp.clone()];
    for k in 0..3 {
        let terms = gp
            .terms()
            .iter()
            .filter(|(m, _)| m.exponents()[k] > 0)
            .map(|(m, c)| {
                let e = m.exponents()[k];
                let mut ex = m.exponents().to_vec();
                ex[k] -= 1;
                (Monomial::from_exponents(&ex), field.mul(*c, e as u32 % field.p()))
            })
            .collect();
        gens.push(Polynomial::from_terms(&ring, terms));
    }
    // no projective common zero: the affine cone is just the origin
    Ok(krull_dim(&Ideal::new(&ring, gens)?) <= 0)
}

/// Samples `r` distinct points, uniformly at random or on a random smooth
/// cubic, deterministically from `seed`. All multiplicities start at 1.
pub fn sample_scheme(p: u32, r: usize, constraint: Constraint, seed: u64) -> Result<FatPointScheme> {
    let field = PrimeField::new(p)?;
    if r < 1 {
        return Err(Error::arg("at least one point is required"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<[FieldElement; 3]> = Vec::with_capacity(r);
    let mut cubic = None;
    match constraint {
        Constraint::None => {
            let capacity = p as u64 * p as u64 + p as u64 + 1;
            if r as u64 > capacity {
                return Err(Error::Seed(format!("the plane over F_{p} has only {capacity} points")));
            }
            let mut attempts = 0;
            while points.len() < r {
                attempts += 1;
                if attempts > 100 * r + 1000 {
                    return Err(Error::Seed("could not sample distinct points".into()));
                }
                let v = [rng.gen_range(0..p), rng.gen_range(0..p), rng.gen_range(0..p)];
                if let Some(pt) = normalize(&field, v) {
                    if !points.contains(&pt) {
                        points.push(pt);
                    }
                }
            }
        }
        Constraint::Elliptic => {
            let mut g = None;
            for _ in 0..100 {
                let cand: Vec<FieldElement> = (0..10).map(|_| rng.gen_range(0..p)).collect();
                if cubic_is_smooth(&field, &cand)? {
                    g = Some(cand);
                    break;
                }
            }
            let g = g.ok_or_else(|| Error::Seed("no smooth cubic found".into()))?;
            let mut attempts = 0;
            while points.len() < r {
                attempts += 1;
                if attempts > 50 * r + 200 {
                    return Err(Error::Seed("could not find enough points on the cubic".into()));
                }
                let a = rng.gen_range(0..p);
                let roots: Vec<FieldElement> =
                    (0..p).filter(|&z| eval_form(&field, &g, 3, [1, a, z]) == 0).collect();
                if roots.is_empty() {
                    continue;
                }
                let pt = [1, a, roots[rng.gen_range(0..roots.len())]];
                if !points.contains(&pt) {
                    points.push(pt);
                }
            }
            cubic = Some(g);
        }
    }
    Ok(FatPointScheme {
        field,
        p,
        seed,
        constraint,
        multiplicities: vec![1; r],
        points,
        cubic,
    })
}

/// Binomial coefficients mod p up to `n`, as rows of Pascal's triangle.
fn binomials(field: &PrimeField, n: usize) -> Vec<Vec<FieldElement>> {
    let mut rows: Vec<Vec<FieldElement>> = vec![vec![1]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![1; i + 1];
        for k in 1..i {
            row[k] = field.add(prev[k - 1], prev[k]);
        }
        rows.push(row);
    }
    rows
}

/// A linear system of degree-`d` forms with prescribed multiplicities.
#[derive(Clone, Debug, Serialize)]
pub struct LinearSystem {
    pub degree: u32,
    pub multiplicities: Vec<u32>,
    pub h0: usize,
    pub rank: usize,
    pub conditions: usize,
    #[serde(skip)]
    pub basis: Vec<Vec<FieldElement>>,
}

impl FatPointScheme {
    pub fn r(&self) -> usize {
        self.points.len()
    }

    /// Same points, multiplicity `m` everywhere.
    pub fn uniform(&self, m: u32) -> FatPointScheme {
        FatPointScheme { multiplicities: vec![m; self.r()], ..self.clone() }
    }

    /// Same points, multiplicities scaled by `k`.
    pub fn scaled(&self, k: u32) -> FatPointScheme {
        FatPointScheme { multiplicities: self.multiplicities.iter().map(|m| m * k).collect(), ..self.clone() }
    }

    pub fn notes(&self) -> Vec<String> {
        let mut notes = Vec::new();
        if self.constraint == Constraint::Elliptic && self.multiplicities.iter().any(|&m| m > 3) {
            notes.push("multiplicities above 3 on the cubic are outside the tested range".into());
        }
        notes
    }

    /// Rows of the vanishing conditions in degree `d`.
    pub fn condition_matrix(&self, d: u32) -> Vec<Vec<FieldElement>> {
        let field = &self.field;
        let monos = monomials(d);
        let binom = binomials(field, d as usize);
        let mut rows = Vec::new();
        for (pt, &m) in self.points.iter().zip(&self.multiplicities) {
            let i = pt.iter().position(|&c| c != 0).unwrap();
            let (j, k) = match i {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            // powers of the two shifted coordinates
            let pj: Vec<FieldElement> = (0..=d).map(|e| field.pow(pt[j], e as u64)).collect();
            let pk: Vec<FieldElement> = (0..=d).map(|e| field.pow(pt[k], e as u64)).collect();
            for total in 0..m {
                for alpha in 0..=total {
                    let beta = total - alpha;
                    let row = monos
                        .iter()
                        .map(|e| {
                            let (ej, ek) = (e[j], e[k]);
                            if ej < alpha || ek < beta {
                                return 0;
                            }
                            let a = field.mul(binom[ej as usize][alpha as usize], pj[(ej - alpha) as usize]);
                            let b = field.mul(binom[ek as usize][beta as usize], pk[(ek - beta) as usize]);
                            field.mul(a, b)
                        })
                        .collect();
                    rows.push(row);
                }
            }
        }
        rows
    }
}

/// Degree-`d` forms vanishing to the scheme's orders at its points.
pub fn h0(scheme: &FatPointScheme, d: u32) -> LinearSystem {
    let rows = scheme.condition_matrix(d);
    let n = num_monomials(d);
    let basis = if rows.is_empty() {
        (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect()
    } else {
        nullspace(&scheme.field, &rows, n)
    };
    LinearSystem {
        degree: d,
        multiplicities: scheme.multiplicities.clone(),
        h0: basis.len(),
        rank: n - basis.len(),
        conditions: rows.len(),
        basis,
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MultMapReport {
    pub degree: u32,
    pub surjective: bool,
    pub image_dim: usize,
    pub target_dim: usize,
}

/// Whether linear forms times the degree `d-1` system fill the degree `d` system.
pub fn mult_map_surjective(scheme: &FatPointScheme, d: u32) -> Result<MultMapReport> {
    if d < 1 {
        return Err(Error::arg("degree must be at least 1"));
    }
    let image = times_linear_forms(scheme, &h0(scheme, d - 1).basis, d - 1);
    let target = h0(scheme, d).h0;
    Ok(MultMapReport { degree: d, surjective: image.dim() == target, image_dim: image.dim(), target_dim: target })
}

fn times_linear_forms(scheme: &FatPointScheme, basis: &[Vec<FieldElement>], d: u32) -> EchelonBasis {
    let mut span = EchelonBasis::new(scheme.field, num_monomials(d + 1));
    for g in basis {
        for k in 0..3 {
            span.insert(mul_var(g, d, k));
        }
    }
    span
}

/// Cached pieces of the systems `k·m` for the multiplicities `m` of a scheme.
struct Systems<'a> {
    scheme: &'a FatPointScheme,
    cache: HashMap<(u32, u32), LinearSystem>,
    comparison: HashMap<(u32, u32), EchelonBasis>,
}

impl<'a> Systems<'a> {
    fn new(scheme: &'a FatPointScheme) -> Self {
        Systems { scheme, cache: HashMap::new(), comparison: HashMap::new() }
    }

    fn piece(&mut self, d: u32, k: u32) -> &LinearSystem {
        let scheme = self.scheme;
        self.cache.entry((d, k)).or_insert_with(|| h0(&scheme.scaled(k), d))
    }

    /// `m · (k-system)` in degree `d`.
    fn comparison(&mut self, d: u32, k: u32) -> &EchelonBasis {
        if !self.comparison.contains_key(&(d, k)) {
            let span = if d == 0 {
                EchelonBasis::new(self.scheme.field, 1)
            } else {
                let basis = self.piece(d - 1, k).basis.clone();
                times_linear_forms(self.scheme, &basis, d - 1)
            };
            self.comparison.insert((d, k), span);
        }
        &self.comparison[&(d, k)]
    }

    /// Span of `s`-fold products of the degree-`d` piece of the `n`-system.
    fn piece_power(&mut self, d: u32, n: u32, s: u32) -> EchelonBasis {
        let field = self.scheme.field;
        let base = self.piece(d, n).basis.clone();
        let mut cur = EchelonBasis::from_rows(field, num_monomials(d), base.iter().cloned());
        for k in 2..=s {
            let cap = self.piece(k * d, k * n).h0;
            let mut next = EchelonBasis::new(field, num_monomials(k * d));
            'fill: for f in cur.rows() {
                for g in &base {
                    if next.dim() == cap {
                        break 'fill;
                    }
                    next.insert(mul_forms(&field, f, (k - 1) * d, g, d));
                }
            }
            cur = next;
        }
        cur
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: u32,
    pub product_dim: usize,
    pub comparison_dim: usize,
    pub contained: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PieceRow {
    pub piece_degree: u32,
    pub piece_dim: usize,
    pub power_dim: usize,
    pub comparison_dim: usize,
    pub contained: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BottomException {
    /// Degree `3n`: the piece spanned by `G^n`.
    pub piece_degree: u32,
    pub piece_dim: usize,
    /// Dimension of `m·(sn-system)` in degree `3sn`.
    pub comparison_dim: usize,
    /// The piece is one-dimensional and its powers escape the comparison space.
    pub survives: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ContainmentReport {
    pub n: u32,
    pub s: u32,
    pub d_max: u32,
    pub empty: bool,
    /// All `s`-fold products of `n`-system pieces, by total degree.
    pub mixed: Vec<DegreeRow>,
    pub mixed_all_contained: bool,
    /// `s`-th powers within a single piece, for `s·d ≤ d_max`.
    pub per_piece: Vec<PieceRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bottom_exception: Option<BottomException>,
    pub notes: Vec<String>,
}

/// Checks `(n-system)^s ⊆ m·(sn-system)` degree by degree up to `d_max`.
pub fn graded_power_containment(scheme: &FatPointScheme, n: u32, s: u32, d_max: u32) -> Result<ContainmentReport> {
    if n < 1 || s < 1 {
        return Err(Error::arg("n and s must be at least 1"));
    }
    let field = scheme.field;
    let mut sys = Systems::new(scheme);
    // prod[k-1][D]: span of k-fold products landing in degree D
    let mut prod: Vec<Vec<Option<EchelonBasis>>> = Vec::new();
    let first: Vec<Option<EchelonBasis>> = (0..=d_max)
        .map(|d| {
            let b = &sys.piece(d, n).basis;
            (!b.is_empty()).then(|| EchelonBasis::from_rows(field, num_monomials(d), b.iter().cloned()))
        })
        .collect();
    let d_min = first.iter().position(|b| b.is_some());
    prod.push(first);
    for k in 2..=s {
        let mut layer: Vec<Option<EchelonBasis>> = vec![None; d_max as usize + 1];
        if let Some(d_min) = d_min {
            let hi = d_max.saturating_sub((s - k) * d_min as u32);
            for big_d in (k * d_min as u32)..=hi {
                let cap = sys.piece(big_d, k * n).h0;
                let mut span = EchelonBasis::new(field, num_monomials(big_d));
                'fill: for d in d_min as u32..=big_d {
                    let (Some(left), Some(right)) = (&prod[k as usize - 2][(big_d - d) as usize], &prod[0][d as usize]) else {
                        continue;
                    };
                    for f in left.rows() {
                        for g in right.rows() {
                            if span.dim() == cap {
                                break 'fill;
                            }
                            span.insert(mul_forms(&field, f, big_d - d, g, d));
                        }
                    }
                }
                if span.dim() > 0 {
                    layer[big_d as usize] = Some(span);
                }
            }
        }
        prod.push(layer);
    }
    let mut mixed = Vec::new();
    for (big_d, span) in prod[s as usize - 1].iter().enumerate() {
        let Some(span) = span else { continue };
        let cmp = sys.comparison(big_d as u32, s * n);
        mixed.push(DegreeRow {
            degree: big_d as u32,
            product_dim: span.dim(),
            comparison_dim: cmp.dim(),
            contained: cmp.contains_all(span),
        });
    }
    let mut per_piece = Vec::new();
    for d in 1..=d_max / s {
        let dim = sys.piece(d, n).h0;
        if dim == 0 {
            continue;
        }
        per_piece.push(piece_row(&mut sys, d, n, s, dim));
    }
    let bottom_exception = (scheme.constraint == Constraint::Elliptic).then(|| {
        let d = 3 * n;
        let piece_dim = sys.piece(d, n).h0;
        let comparison_dim = sys.comparison(s * d, s * n).dim();
        let power = sys.piece_power(d, n, s);
        let survives = piece_dim == 1 && !sys.comparison(s * d, s * n).contains_all(&power);
        BottomException { piece_degree: d, piece_dim, comparison_dim, survives }
    });
    let mut notes = scheme.scaled(s * n).notes();
    let empty = mixed.is_empty() && per_piece.is_empty();
    if empty {
        notes.push(format!("no products land in degrees <= {d_max}"));
    }
    Ok(ContainmentReport {
        n,
        s,
        d_max,
        empty,
        mixed_all_contained: mixed.iter().all(|r| r.contained),
        mixed,
        per_piece,
        bottom_exception,
        notes,
    })
}

fn piece_row(sys: &mut Systems, d: u32, n: u32, s: u32, dim: usize) -> PieceRow {
    let power = sys.piece_power(d, n, s);
    let cmp = sys.comparison(s * d, s * n);
    PieceRow {
        piece_degree: d,
        piece_dim: dim,
        power_dim: power.dim(),
        comparison_dim: cmp.dim(),
        contained: cmp.contains_all(&power),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CensusLevel {
    pub n: u32,
    pub pieces: Vec<PieceRow>,
    /// `(degree, dim)` of pieces whose powers are not all contained.
    pub survivors: Vec<(u32, usize)>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CensusReport {
    pub s: u32,
    pub n_max: u32,
    pub d_max: u32,
    pub levels: Vec<CensusLevel>,
    pub total_survivors: usize,
    pub notes: Vec<String>,
}

/// For each `n ≤ n_max`, which nonzero pieces of degree `≤ d_max` have
/// `s`-th powers inside `m·(sn-system)`.
pub fn fiber_generator_census(scheme: &FatPointScheme, n_max: u32, d_max: u32, s: u32) -> Result<CensusReport> {
    if s < 1 {
        return Err(Error::arg("s must be at least 1"));
    }
    let mut sys = Systems::new(scheme);
    let mut levels = Vec::new();
    for n in 1..=n_max {
        let mut pieces = Vec::new();
        for d in 1..=d_max {
            let dim = sys.piece(d, n).h0;
            if dim > 0 {
                pieces.push(piece_row(&mut sys, d, n, s, dim));
            }
        }
        let survivors = pieces.iter().filter(|p| !p.contained).map(|p| (p.piece_degree, p.piece_dim)).collect();
        levels.push(CensusLevel { n, pieces, survivors });
    }
    Ok(CensusReport {
        s,
        n_max,
        d_max,
        total_survivors: levels.iter().map(|l| l.survivors.len()).sum(),
        levels,
        notes: scheme.scaled(s * n_max.max(1)).notes(),
    })
}
