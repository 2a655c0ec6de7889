//! Direct summands `(X, π)[i]` of motives of split varieties.
//!
//! The projector is stored with both twists equal to the summand twist, so
//! morphisms between summands compose without further bookkeeping.
//!
//! Coefficients of `π` are kept in the product basis, `π = Σ P[a][b] x_a × x_b`.
//! The mixed expansion `π = Σ M[a][c] x_a × x*_c` has `M = P·G`. For degree
//! zero endomorphisms `M` is block diagonal by dimension and
//! `M(β ∘ α) = M(α)·M(β)`.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chow::VarietyExpression;
use crate::correspondence::{compose, diagonal, homogeneous_basis, transpose, Correspondence};
use crate::error::{Error, Result};
use crate::ff::{FpMatrix, FpSubspace};

#[derive(Clone, PartialEq, Eq)]
pub struct MotiveSummand {
    expr: VarietyExpression,
    projector: Correspondence,
    twist: i64,
}

impl fmt::Debug for MotiveSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})[{}]", self.expr, self.projector.to_cycle().display_terms(), self.twist)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummandProfile {
    pub base: BTreeSet<i64>,
    pub bottom: i64,
    pub top: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub upper: bool,
    pub lower: bool,
    pub outer: bool,
}

/// True iff `α ∘ α = α`. Endomorphisms with unequal twists are never
/// projectors; correspondences between different varieties are an error.
pub fn is_projector(alpha: &Correspondence) -> Result<bool> {
    alpha.source().check_same(alpha.target()).map_err(|_| {
        Error::Shape(format!("{} ⇝ {} is not an endomorphism", alpha.source(), alpha.target()))
    })?;
    if alpha.degree() != 0 {
        return Ok(false);
    }
    Ok(compose(alpha, alpha)? == *alpha)
}

/// `M = P·G`, the coefficients of `π` against `x_a × x*_c`.
pub fn mixed_coefficients(alpha: &Correspondence) -> Result<FpMatrix> {
    alpha.coeffs().mul(&alpha.source().gram())
}

impl MotiveSummand {
    /// `(X, π)[twist]`; the twists on `projector` are replaced by `twist`.
    pub fn new(projector: Correspondence, twist: i64) -> Result<Self> {
        if projector.source() != projector.target() || projector.degree() != 0 {
            return Err(Error::NotProjector(format!("{projector:?} is not a degree-0 endomorphism")));
        }
        let projector = projector.with_twists(twist, twist)?;
        if !is_projector(&projector)? {
            return Err(Error::NotProjector(format!("{projector:?} ∘ itself differs from itself")));
        }
        Ok(MotiveSummand { expr: projector.source().clone(), projector, twist })
    }

    /// The whole motive `(X, Δ)[twist]`.
    pub fn whole(expr: &VarietyExpression, twist: i64) -> Result<Self> {
        Self::new(diagonal(expr, twist)?, twist)
    }

    pub fn zero(expr: &VarietyExpression, twist: i64) -> Self {
        MotiveSummand { expr: expr.clone(), projector: Correspondence::zero(expr, expr, twist, twist), twist }
    }

    pub fn expr(&self) -> &VarietyExpression {
        &self.expr
    }
    pub fn projector(&self) -> &Correspondence {
        &self.projector
    }
    pub fn twist(&self) -> i64 {
        self.twist
    }
    pub fn is_zero(&self) -> bool {
        self.projector.is_zero()
    }

    pub fn shifted(&self, d: i64) -> Self {
        MotiveSummand { expr: self.expr.clone(), projector: self.projector.shift_twist(d), twist: self.twist + d }
    }

    /// Rank of the projector acting on `Ch(X̄)`.
    pub fn rank(&self) -> usize {
        mixed_coefficients(&self.projector).expect("square").rank()
    }

    fn check_comparable(&self, other: &Self) -> Result<()> {
        self.expr.check_same(&other.expr)?;
        if self.twist != other.twist {
            return Err(Error::Twist(format!("summands twisted by {} and {}", self.twist, other.twist)));
        }
        Ok(())
    }

    /// `self` is a summand of `outer` iff `π ∘ ρ ∘ π = ρ`.
    pub fn is_summand_of(&self, outer: &MotiveSummand) -> Result<bool> {
        self.check_comparable(outer)?;
        let pi = &outer.projector;
        Ok(compose(pi, &compose(&self.projector, pi)?)? == self.projector)
    }

    /// `Ch_i` of the summand inside `Ch(X̄)`: the image of the dimension
    /// `i - twist` piece under `v ↦ M·v`.
    pub fn chow_group(&self, i: i64) -> Result<FpSubspace> {
        let n = self.expr.basis_len();
        let f = self.expr.field();
        let k = i - self.twist;
        let m = mixed_coefficients(&self.projector)?;
        let mut out = FpSubspace::zero(f, n);
        if k < 0 {
            return Ok(out);
        }
        for (c, &d) in self.expr.basis_dims().iter().enumerate() {
            if d as i64 == k {
                out.insert(&m.column(c));
            }
        }
        Ok(out)
    }

    /// Base, bottom and top, read off the nonzero rows of `M` and checked
    /// against the support of the Chow groups.
    pub fn profile(&self) -> Result<SummandProfile> {
        if self.is_zero() {
            return Err(Error::ZeroProjector);
        }
        let m = mixed_coefficients(&self.projector)?;
        let dims = self.expr.basis_dims();
        let base: BTreeSet<i64> = (0..m.rows())
            .filter(|&a| m.row(a).iter().any(|&x| x != 0))
            .map(|a| dims[a] as i64 + self.twist)
            .collect();
        let mut support = BTreeSet::new();
        for k in 0..=self.expr.dim() as i64 {
            if !self.chow_group(k + self.twist)?.is_zero() {
                support.insert(k + self.twist);
            }
        }
        if support != base {
            return Err(Error::Verification(format!(
                "profile rows give {base:?} but Chow groups are supported in {support:?}"
            )));
        }
        Ok(SummandProfile {
            bottom: *base.first().expect("nonzero projector"),
            top: *base.last().expect("nonzero projector"),
            base,
        })
    }

    /// Upper, lower and outer flags of `self` inside `outer`.
    pub fn classify_in(&self, outer: &MotiveSummand) -> Result<Classification> {
        if !self.is_summand_of(outer)? {
            return Err(Error::NotSummand(format!("{self:?} is not a summand of {outer:?}")));
        }
        let pm = self.profile()?;
        let pn = outer.profile()?;
        let upper = pm.bottom == pn.bottom;
        let lower = pm.top == pn.top;
        Ok(Classification { upper, lower, outer: upper && lower })
    }

    /// `(X, ᵗπ)[-dim X - i]`.
    pub fn dual(&self) -> MotiveSummand {
        let projector = transpose(&self.projector);
        MotiveSummand { expr: self.expr.clone(), twist: projector.source_twist(), projector }
    }
}

pub fn classify(m: &MotiveSummand, n: &MotiveSummand) -> Result<Classification> {
    m.classify_in(n)
}

pub fn dual_summand(n: &MotiveSummand) -> MotiveSummand {
    n.dual()
}

/// Basis of `Hom(a, b) = π_b ∘ Corr ∘ π_a`.
pub fn hom_basis(a: &MotiveSummand, b: &MotiveSummand) -> Result<Vec<Correspondence>> {
    let f = a.expr.field();
    let ncols = b.expr.basis_len();
    let mut span = FpSubspace::zero(f, a.expr.basis_len() * ncols);
    for e in homogeneous_basis(&a.expr, &b.expr, a.twist, b.twist) {
        let h = compose(&b.projector, &compose(&e, &a.projector)?)?;
        span.insert(h.coeffs().data());
    }
    span.basis_vectors()
        .map(|v| {
            let m = FpMatrix::from_data(f, a.expr.basis_len(), ncols, v.to_vec())?;
            Correspondence::new(a.expr.clone(), b.expr.clone(), a.twist, b.twist, m)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessSearch {
    /// Largest `|Hom(a, b)|` that is enumerated exhaustively.
    pub enum_bound: u64,
    /// Number of random candidates tried above the bound.
    pub samples: u64,
    pub seed: u64,
}

impl Default for WitnessSearch {
    fn default() -> Self {
        WitnessSearch { enum_bound: 1 << 20, samples: 4096, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `v ∘ u = π_a` and `u ∘ v = π_b`.
    Found { u: Correspondence, v: Correspondence },
    /// Every `u` in `Hom(a, b)` was tried.
    ProvablyNone { candidates: u64 },
    /// Random search gave up; the seed reproduces it.
    NotFound { samples: u64, seed: u64 },
}

impl Witness {
    pub fn is_found(&self) -> bool {
        matches!(self, Witness::Found { .. })
    }
}

fn p_pow(p: u64, e: usize) -> Option<u64> {
    let mut r: u64 = 1;
    for _ in 0..e {
        r = r.checked_mul(p)?;
    }
    Some(r)
}

/// Searches for mutually inverse `u : a → b`, `v : b → a`. For fixed `u` the
/// conditions are linear in `v`, so only `u` is enumerated or sampled.
pub fn summand_isomorphism_witness(a: &MotiveSummand, b: &MotiveSummand, cfg: WitnessSearch) -> Result<Witness> {
    witness_search(a, b, cfg, true)
}

/// Searches for `u : a → b`, `v : b → a` with `v ∘ u = π_a`, i.e. `a` is
/// isomorphic to a summand of `b`. `Found` then only certifies `v ∘ u = π_a`.
pub fn summand_embedding_witness(a: &MotiveSummand, b: &MotiveSummand, cfg: WitnessSearch) -> Result<Witness> {
    witness_search(a, b, cfg, false)
}

fn witness_search(a: &MotiveSummand, b: &MotiveSummand, cfg: WitnessSearch, mutual: bool) -> Result<Witness> {
    if a == b {
        return Ok(Witness::Found { u: a.projector.clone(), v: a.projector.clone() });
    }
    let hab = hom_basis(a, b)?;
    let hba = hom_basis(b, a)?;
    if a.is_zero() && (b.is_zero() || !mutual) {
        return Ok(Witness::Found {
            u: Correspondence::zero(&a.expr, &b.expr, a.twist, b.twist),
            v: Correspondence::zero(&b.expr, &a.expr, b.twist, a.twist),
        });
    }
    let rank_ok = if mutual { a.rank() == b.rank() } else { a.rank() <= b.rank() };
    if !rank_ok || hab.is_empty() || hba.is_empty() {
        return Ok(Witness::ProvablyNone { candidates: 0 });
    }
    let f = a.expr.field();
    let p = f.p() as u64;
    let ga = a.expr.gram();
    let gb = b.expr.gram();
    let mut target: Vec<u32> = a.projector.coeffs().data().to_vec();
    if mutual {
        target.extend_from_slice(b.projector.coeffs().data());
    }
    let target = FpMatrix::column_vector(f, &target);

    let try_u = |coefs: &[u32]| -> Result<Option<Witness>> {
        let mut u = Correspondence::zero(&a.expr, &b.expr, a.twist, b.twist);
        for (c, h) in coefs.iter().zip(&hab) {
            if *c != 0 {
                u = u.add(&h.scale(*c))?;
            }
        }
        let um = u.coeffs();
        // coeffs(v ∘ u) = U·G_b·V, coeffs(u ∘ v) = V·G_a·U.
        let left = um.mul(&gb)?;
        let right = ga.mul(um)?;
        let mut cols: Vec<Vec<u32>> = Vec::with_capacity(hba.len());
        for h in &hba {
            let mut col = left.mul(h.coeffs())?.data().to_vec();
            if mutual {
                col.extend_from_slice(h.coeffs().mul(&right)?.data());
            }
            cols.push(col);
        }
        let rows = cols[0].len();
        let mut sys = FpMatrix::zeros(f, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                sys.set(i, j, x);
            }
        }
        let Some(sol) = sys.solve(&target)? else { return Ok(None) };
        let mut v = Correspondence::zero(&b.expr, &a.expr, b.twist, a.twist);
        for (j, h) in hba.iter().enumerate() {
            let c = sol.particular.get(j, 0);
            if c != 0 {
                v = v.add(&h.scale(c))?;
            }
        }
        Ok(Some(Witness::Found { u, v }))
    };

    match p_pow(p, hab.len()) {
        Some(total) if total <= cfg.enum_bound => {
            let mut coefs = vec![0u32; hab.len()];
            for _ in 0..total {
                if let Some(w) = try_u(&coefs)? {
                    return Ok(w);
                }
                for c in coefs.iter_mut() {
                    *c += 1;
                    if (*c as u64) < p {
                        break;
                    }
                    *c = 0;
                }
            }
            Ok(Witness::ProvablyNone { candidates: total })
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            for _ in 0..cfg.samples {
                let coefs: Vec<u32> = (0..hab.len()).map(|_| rng.gen_range(0..f.p())).collect();
                if let Some(w) = try_u(&coefs)? {
                    return Ok(w);
                }
            }
            Ok(Witness::NotFound { samples: cfg.samples, seed: cfg.seed })
        }
    }
}
