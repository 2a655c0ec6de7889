//! Seeded random cycles, correspondences and projectors.

use rand::Rng;

use crate::chow::{Cycle, VarietyExpression};
use crate::correspondence::Correspondence;
use crate::error::Result;
use crate::ff::{Fp, FpMatrix};

pub fn random_matrix<R: Rng>(field: Fp, rows: usize, cols: usize, rng: &mut R) -> FpMatrix {
    let data = (0..rows * cols).map(|_| rng.gen_range(0..field.p())).collect();
    FpMatrix::from_data(field, rows, cols, data).expect("sizes agree")
}

pub fn random_invertible<R: Rng>(field: Fp, n: usize, rng: &mut R) -> (FpMatrix, FpMatrix) {
    loop {
        let m = random_matrix(field, n, n, rng);
        if let Some(inv) = m.inverse() {
            return (m, inv);
        }
    }
}

pub fn random_cycle<R: Rng>(expr: &VarietyExpression, rng: &mut R) -> Cycle {
    let p = expr.field().p();
    let coeffs = (0..expr.basis_len()).map(|_| rng.gen_range(0..p)).collect();
    Cycle::from_coeffs(expr, coeffs).expect("sizes agree")
}

/// Uniform element of `Hom(X[i], Y[j])`.
pub fn random_correspondence<R: Rng>(
    source: &VarietyExpression,
    target: &VarietyExpression,
    source_twist: i64,
    target_twist: i64,
    rng: &mut R,
) -> Correspondence {
    let f = source.field();
    let d = source.dim() as i64 + source_twist - target_twist;
    let mut m = FpMatrix::zeros(f, source.basis_len(), target.basis_len());
    for (a, &da) in source.basis_dims().iter().enumerate() {
        for (b, &db) in target.basis_dims().iter().enumerate() {
            if (da + db) as i64 == d {
                m.set(a, b, rng.gen_range(0..f.p()));
            }
        }
    }
    Correspondence::new(source.clone(), target.clone(), source_twist, target_twist, m).expect("homogeneous")
}

fn projector_from_mixed(expr: &VarietyExpression, twist: i64, m: &FpMatrix) -> Result<Correspondence> {
    let ginv = expr.ante_dual()?;
    Correspondence::new(expr.clone(), expr.clone(), twist, twist, m.mul(&ginv)?)
}

/// Random projector on `expr[twist]` together with a random sub-projector.
/// Each graded block gets a random change of basis `S`, and the mixed
/// matrices are `S·diag(1..1, 0..0)·S⁻¹` with nested diagonals.
pub fn random_projector_pair<R: Rng>(
    expr: &VarietyExpression,
    twist: i64,
    rng: &mut R,
) -> Result<(Correspondence, Correspondence)> {
    let f = expr.field();
    let n = expr.basis_len();
    let dims = expr.basis_dims();
    let mut outer = FpMatrix::zeros(f, n, n);
    let mut inner = FpMatrix::zeros(f, n, n);
    for k in 0..=expr.dim() {
        let idx: Vec<usize> = (0..n).filter(|&a| dims[a] == k).collect();
        if idx.is_empty() {
            continue;
        }
        let r = rng.gen_range(0..=idx.len());
        let s = rng.gen_range(0..=r);
        let (sm, si) = random_invertible(f, idx.len(), rng);
        for (target, rank) in [(&mut outer, r), (&mut inner, s)] {
            let mut diag = FpMatrix::zeros(f, idx.len(), idx.len());
            for q in 0..rank {
                diag.set(q, q, 1);
            }
            let block = sm.mul(&diag)?.mul(&si)?;
            for (bi, &a) in idx.iter().enumerate() {
                for (bj, &c) in idx.iter().enumerate() {
                    target.set(a, c, block.get(bi, bj));
                }
            }
        }
    }
    Ok((projector_from_mixed(expr, twist, &outer)?, projector_from_mixed(expr, twist, &inner)?))
}

pub fn random_projector<R: Rng>(expr: &VarietyExpression, twist: i64, rng: &mut R) -> Result<Correspondence> {
    Ok(random_projector_pair(expr, twist, rng)?.0)
}
