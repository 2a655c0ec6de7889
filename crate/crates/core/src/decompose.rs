//! Endomorphism algebras of summands and their Krull-Schmidt decompositions.

use crate::algebra::{FiniteAlgebra, PowerCycle};
use crate::correspondence::{compose, Correspondence};
use crate::error::{Error, Result};
use crate::ff::{FpMatrix, FpSubspace};
use crate::motive::MotiveSummand;

/// `End(N) = π ∘ V_0 ∘ π` for a space `V` of cycles on `X × X` (the rational
/// ones over some field). The product is composition, `a·b = a ∘ b`.
#[derive(Debug, Clone)]
pub struct EndAlgebra {
    summand: MotiveSummand,
    space: FpSubspace,
    algebra: FiniteAlgebra,
}

fn degree_zero_part(n: &MotiveSummand, cycles: &FpSubspace) -> Result<FpSubspace> {
    let e = n.expr();
    let len = e.basis_len();
    if cycles.ambient() != len * len {
        return Err(Error::Dimension(format!("cycle space of length {} on {e}×{e}", cycles.ambient())));
    }
    let dims = e.basis_dims();
    let d = e.dim();
    let coords: Vec<Vec<u32>> = (0..len * len)
        .filter(|&k| dims[k / len] + dims[k % len] == d)
        .map(|k| {
            let mut v = vec![0; len * len];
            v[k] = 1;
            v
        })
        .collect();
    let graded = FpSubspace::span_vectors(e.field(), len * len, &coords)?;
    cycles.intersection(&graded)
}

impl EndAlgebra {
    pub fn new(n: &MotiveSummand, cycles: &FpSubspace) -> Result<Self> {
        let pi = n.projector();
        if !cycles.contains(pi.coeffs().data()) {
            return Err(Error::Hypothesis(format!("projector of {n:?} is not rational")));
        }
        let v0 = degree_zero_part(n, cycles)?;
        let f = n.expr().field();
        let mut space = FpSubspace::zero(f, v0.ambient());
        for v in v0.basis_vectors() {
            let c = self_corr(n, v)?;
            space.insert(compose(pi, &compose(&c, pi)?)?.coeffs().data());
        }
        let mul = |x: &[u32], y: &[u32]| -> Result<Vec<u32>> {
            Ok(compose(&self_corr(n, x)?, &self_corr(n, y)?)?.coeffs().data().to_vec())
        };
        let algebra = FiniteAlgebra::from_subspace(&space, pi.coeffs().data(), mul)?;
        Ok(EndAlgebra { summand: n.clone(), space, algebra })
    }

    /// Endomorphisms over a splitting field: every cycle is rational.
    pub fn split(n: &MotiveSummand) -> Result<Self> {
        let len = n.expr().basis_len();
        Self::new(n, &FpSubspace::full(n.expr().field(), len * len))
    }

    pub fn summand(&self) -> &MotiveSummand {
        &self.summand
    }
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }
    pub fn space(&self) -> &FpSubspace {
        &self.space
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn element(&self, coords: &[u32]) -> Result<Correspondence> {
        let f = self.algebra.field();
        let b = FpMatrix::from_data(f, self.space.dim(), self.space.ambient(), self.space.basis().data().to_vec())?;
        let v = FpMatrix::row_vector(f, coords).mul(&b)?;
        self_corr(&self.summand, v.data())
    }

    pub fn coordinates(&self, c: &Correspondence) -> Option<Vec<u32>> {
        self.space.coordinates(c.coeffs().data())
    }

    /// Eventual idempotent power of an endomorphism.
    pub fn idempotent_power(&self, c: &Correspondence) -> Result<PowerCycle<Correspondence>> {
        let x = self
            .coordinates(c)
            .ok_or_else(|| Error::Shape(format!("{c:?} is not an endomorphism of the summand")))?;
        let pc = crate::algebra::idempotent_power(&x, |a, b| self.algebra.mul(a, b));
        Ok(PowerCycle { m: pc.m, r: pc.r, n: pc.n, e: self.element(&pc.e)? })
    }
}

fn self_corr(n: &MotiveSummand, v: &[u32]) -> Result<Correspondence> {
    let e = n.expr();
    let m = FpMatrix::from_data(e.field(), e.basis_len(), e.basis_len(), v.to_vec())?;
    Correspondence::new(e.clone(), e.clone(), n.twist(), n.twist(), m)
}

#[derive(Debug, Clone)]
pub struct KrullSchmidt {
    pub summands: Vec<MotiveSummand>,
    pub end_dim: usize,
    pub radical_dim: usize,
    pub seed: u64,
}

/// Complete decomposition of `n` into indecomposables whose projectors lie
/// in `cycles`. The output is verified: the projectors are orthogonal,
/// primitive in `End(N)` and sum to `π`.
pub fn krull_schmidt(n: &MotiveSummand, cycles: &FpSubspace, seed: u64) -> Result<KrullSchmidt> {
    if n.is_zero() {
        return Ok(KrullSchmidt { summands: vec![], end_dim: 0, radical_dim: 0, seed });
    }
    let end = EndAlgebra::new(n, cycles)?;
    let d = end.algebra.primitive_idempotents(seed)?;
    let mut summands = Vec::with_capacity(d.idempotents.len());
    let mut total = Correspondence::zero(n.expr(), n.expr(), n.twist(), n.twist());
    for e in &d.idempotents {
        let c = end.element(e)?;
        total = total.add(&c)?;
        let m = MotiveSummand::new(c, n.twist())?;
        if !m.is_summand_of(n)? {
            return Err(Error::Verification(format!("{m:?} is not a summand of {n:?}")));
        }
        summands.push(m);
    }
    if total != *n.projector() {
        return Err(Error::Verification("projectors do not sum to π".into()));
    }
    Ok(KrullSchmidt { summands, end_dim: end.dim(), radical_dim: d.radical_dim, seed })
}

pub fn is_indecomposable(n: &MotiveSummand, cycles: &FpSubspace, seed: u64) -> Result<bool> {
    Ok(krull_schmidt(n, cycles, seed)?.summands.len() == 1)
}
