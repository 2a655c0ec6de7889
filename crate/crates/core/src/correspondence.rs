//! Correspondences between twisted split varieties.
//!
//! A correspondence `α : X[i] ⇝ Y[j]` is stored by its coefficient matrix in
//! the product basis, `α = Σ coeffs[a][b] · (x_a × y_b)`. It is homogeneous:
//! every nonzero coefficient satisfies `dim x_a + dim y_b = dim X + i - j`.
//!
//! Composition contracts the middle factor with its Gram matrix,
//! `coeffs(β ∘ α) = A · G_Y · B`, which is the bilinear extension of
//! `(x_i × y) ∘ (y' × x*_j) = δ_ij (y' × y)`.

use std::fmt;

use crate::chow::{check_permutation, Cycle, VarietyExpression};
use crate::error::{Error, Result};
use crate::ff::{Fp, FpMatrix};

#[derive(Clone, PartialEq, Eq)]
pub struct Correspondence {
    source: VarietyExpression,
    target: VarietyExpression,
    source_twist: i64,
    target_twist: i64,
    coeffs: FpMatrix,
}

impl fmt::Debug for Correspondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}] ⇝ {}[{}]: {}",
            self.source,
            self.source_twist,
            self.target,
            self.target_twist,
            self.to_cycle().display_terms()
        )
    }
}

impl Correspondence {
    pub fn new(
        source: VarietyExpression,
        target: VarietyExpression,
        source_twist: i64,
        target_twist: i64,
        coeffs: FpMatrix,
    ) -> Result<Self> {
        if source.field() != target.field() || coeffs.field() != source.field() {
            return Err(Error::Modulus(source.field().p(), coeffs.field().p()));
        }
        if coeffs.rows() != source.basis_len() || coeffs.cols() != target.basis_len() {
            return Err(Error::Dimension(format!(
                "{}x{} coefficients for {} ⇝ {}",
                coeffs.rows(),
                coeffs.cols(),
                source,
                target
            )));
        }
        let c = Correspondence { source, target, source_twist, target_twist, coeffs };
        c.check_homogeneous()?;
        Ok(c)
    }

    pub fn zero(source: &VarietyExpression, target: &VarietyExpression, source_twist: i64, target_twist: i64) -> Self {
        let coeffs = FpMatrix::zeros(source.field(), source.basis_len(), target.basis_len());
        Correspondence { source: source.clone(), target: target.clone(), source_twist, target_twist, coeffs }
    }

    /// Reads a cycle on `source × target` as a correspondence.
    pub fn from_cycle(
        cycle: &Cycle,
        split: usize,
        source_twist: i64,
        target_twist: i64,
    ) -> Result<Self> {
        let e = cycle.expr();
        if split > e.num_factors() {
            return Err(Error::Shape(format!("split {split} beyond {} factors", e.num_factors())));
        }
        let source = e.slice(0..split);
        let target = e.slice(split..e.num_factors());
        let coeffs = FpMatrix::from_data(
            e.field(),
            source.basis_len(),
            target.basis_len(),
            cycle.coeffs().to_vec(),
        )?;
        Self::new(source, target, source_twist, target_twist, coeffs)
    }

    /// Like [`Correspondence::from_cycle`], choosing the target twist so that
    /// the cycle is homogeneous of the right degree. Fails for inhomogeneous
    /// cycles. Zero cycles get target twist equal to the source twist.
    pub fn from_homogeneous_cycle(cycle: &Cycle, split: usize, source_twist: i64) -> Result<Self> {
        let source_dim: usize = cycle.expr().factors()[..split].iter().map(|s| s.dim()).sum();
        let target_twist = match cycle.homogeneous_dim() {
            Some(d) => source_dim as i64 + source_twist - d as i64,
            None if cycle.is_zero() => source_twist,
            None => return Err(Error::Inhomogeneous(cycle.display_terms())),
        };
        Self::from_cycle(cycle, split, source_twist, target_twist)
    }

    pub fn source(&self) -> &VarietyExpression {
        &self.source
    }
    pub fn target(&self) -> &VarietyExpression {
        &self.target
    }
    pub fn source_twist(&self) -> i64 {
        self.source_twist
    }
    pub fn target_twist(&self) -> i64 {
        self.target_twist
    }
    pub fn coeffs(&self) -> &FpMatrix {
        &self.coeffs
    }
    pub fn field(&self) -> Fp {
        self.source.field()
    }

    /// Dimension of the underlying cycle on `source × target`.
    pub fn cycle_dim(&self) -> i64 {
        self.source.dim() as i64 + self.source_twist - self.target_twist
    }

    /// Degree `i - j` of the correspondence, as in `Corr_{i-j}(X, Y)`.
    pub fn degree(&self) -> i64 {
        self.source_twist - self.target_twist
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn is_endo(&self) -> bool {
        self.source == self.target && self.source_twist == self.target_twist
    }

    pub fn check_homogeneous(&self) -> Result<()> {
        let d = self.cycle_dim();
        let sd = self.source.basis_dims();
        let td = self.target.basis_dims();
        for a in 0..self.coeffs.rows() {
            for b in 0..self.coeffs.cols() {
                if self.coeffs.get(a, b) != 0 && (sd[a] + td[b]) as i64 != d {
                    return Err(Error::Inhomogeneous(format!(
                        "term {}×{} has dimension {} but {}[{}] ⇝ {}[{}] needs {}",
                        self.source.label(a),
                        self.target.label(b),
                        sd[a] + td[b],
                        self.source,
                        self.source_twist,
                        self.target,
                        self.target_twist,
                        d
                    )));
                }
            }
        }
        Ok(())
    }

    /// The underlying cycle on `source × target`.
    pub fn to_cycle(&self) -> Cycle {
        let e = self.source.concat(&self.target).expect("same field");
        Cycle::from_coeffs(&e, self.coeffs.data().to_vec()).expect("sizes agree")
    }

    fn check_parallel(&self, other: &Self) -> Result<()> {
        self.source.check_same(&other.source)?;
        self.target.check_same(&other.target)?;
        if self.source_twist != other.source_twist || self.target_twist != other.target_twist {
            return Err(Error::Twist(format!(
                "[{}]⇝[{}] vs [{}]⇝[{}]",
                self.source_twist, self.target_twist, other.source_twist, other.target_twist
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_parallel(other)?;
        Ok(Correspondence { coeffs: self.coeffs.add(&other.coeffs)?, ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_parallel(other)?;
        Ok(Correspondence { coeffs: self.coeffs.sub(&other.coeffs)?, ..self.clone() })
    }

    pub fn scale(&self, k: u32) -> Self {
        Correspondence { coeffs: self.coeffs.scale(k), ..self.clone() }
    }

    /// Same cycle, both twists shifted by `d`.
    pub fn shift_twist(&self, d: i64) -> Self {
        Correspondence {
            source_twist: self.source_twist + d,
            target_twist: self.target_twist + d,
            ..self.clone()
        }
    }

    /// Same coefficients with new twists, keeping the degree `i - j`.
    pub fn with_twists(&self, source_twist: i64, target_twist: i64) -> Result<Self> {
        if source_twist - target_twist != self.degree() {
            return Err(Error::Twist(format!(
                "degree {} cannot be re-twisted to [{}]⇝[{}]",
                self.degree(),
                source_twist,
                target_twist
            )));
        }
        Ok(Correspondence { source_twist, target_twist, ..self.clone() })
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &Correspondence) -> Result<Self> {
        compose(self, inner)
    }

    /// `self ∘ self ∘ ... ∘ self` (`n >= 1` factors).
    pub fn power(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("zeroth power needs a unit".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = compose(self, &acc)?;
        }
        Ok(acc)
    }
}

/// Basis of `Hom(X[i], Y[j])`: the elementary correspondences `x_a × y_b`
/// of the right dimension.
pub fn homogeneous_basis(
    source: &VarietyExpression,
    target: &VarietyExpression,
    source_twist: i64,
    target_twist: i64,
) -> Vec<Correspondence> {
    let d = source.dim() as i64 + source_twist - target_twist;
    let sd = source.basis_dims();
    let td = target.basis_dims();
    let mut out = Vec::new();
    for (a, &da) in sd.iter().enumerate() {
        for (b, &db) in td.iter().enumerate() {
            if (da + db) as i64 == d {
                let mut c = Correspondence::zero(source, target, source_twist, target_twist);
                c.coeffs.set(a, b, 1);
                out.push(c);
            }
        }
    }
    out
}

/// `outer ∘ inner`; `inner : X[i] ⇝ Y[j]`, `outer : Y[j] ⇝ Z[k]`.
pub fn compose(outer: &Correspondence, inner: &Correspondence) -> Result<Correspondence> {
    if inner.target != outer.source {
        return Err(Error::Expression(format!(
            "cannot compose {} ⇝ {} after {} ⇝ {}",
            outer.source, outer.target, inner.source, inner.target
        )));
    }
    if inner.target_twist != outer.source_twist {
        return Err(Error::Twist(format!(
            "inner lands in twist {} but outer starts at twist {}",
            inner.target_twist, outer.source_twist
        )));
    }
    let g = inner.target.gram();
    let coeffs = inner.coeffs.mul(&g)?.mul(&outer.coeffs)?;
    Ok(Correspondence {
        source: inner.source.clone(),
        target: outer.target.clone(),
        source_twist: inner.source_twist,
        target_twist: outer.target_twist,
        coeffs,
    })
}

/// Exchange of factors: `α : X[i] ⇝ Y[j]` becomes
/// `ᵗα : Y[-dim Y - j] ⇝ X[-dim X - i]`, matching the duality functor.
pub fn transpose(alpha: &Correspondence) -> Correspondence {
    Correspondence {
        source: alpha.target.clone(),
        target: alpha.source.clone(),
        source_twist: -(alpha.target.dim() as i64) - alpha.target_twist,
        target_twist: -(alpha.source.dim() as i64) - alpha.source_twist,
        coeffs: alpha.coeffs.transpose(),
    }
}

/// `α ⊗ β : (X × X')[i + i'] ⇝ (Y × Y')[j + j']`.
pub fn external_product(alpha: &Correspondence, beta: &Correspondence) -> Result<Correspondence> {
    Ok(Correspondence {
        source: alpha.source.concat(&beta.source)?,
        target: alpha.target.concat(&beta.target)?,
        source_twist: alpha.source_twist + beta.source_twist,
        target_twist: alpha.target_twist + beta.target_twist,
        coeffs: alpha.coeffs.kron(&beta.coeffs)?,
    })
}

/// Reorders the factors of the underlying cycle and re-reads it as a
/// correspondence. Factor `q` of the new list is factor `perm[q]` of
/// `source ++ target`; the first `split` factors form the new source.
/// The target twist is recomputed so the cycle dimension is unchanged.
pub fn regroup(alpha: &Correspondence, perm: &[usize], split: usize, source_twist: i64) -> Result<Correspondence> {
    let cycle = alpha.to_cycle();
    let n = cycle.expr().num_factors();
    check_permutation(perm, n)?;
    if split > n {
        return Err(Error::Permutation(format!("split {split} beyond {n} factors")));
    }
    let permuted = permute_cycle(&cycle, perm)?;
    let new_source_dim: usize = permuted.expr().factors()[..split].iter().map(|s| s.dim()).sum();
    let target_twist = source_twist + new_source_dim as i64 - alpha.cycle_dim();
    Correspondence::from_cycle(&permuted, split, source_twist, target_twist)
}

/// Reorders the factors of a cycle: factor `q` of the result is factor
/// `perm[q]` of the input.
pub fn permute_cycle(cycle: &Cycle, perm: &[usize]) -> Result<Cycle> {
    let e = cycle.expr();
    let new_expr = e.permuted(perm)?;
    let mut out = vec![0u32; e.basis_len()];
    for (i, &c) in cycle.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let t = e.tuple_of(i);
        let nt: Vec<usize> = perm.iter().map(|&k| t[k]).collect();
        out[new_expr.index_of(&nt)] = c;
    }
    Cycle::from_coeffs(&new_expr, out)
}

/// Class of the diagonal, `Δ = Σ (G⁻¹)[a][b] x_a × x_b`, as an endomorphism
/// of `expr[twist]`.
pub fn diagonal(expr: &VarietyExpression, twist: i64) -> Result<Correspondence> {
    let d = expr.ante_dual()?;
    Correspondence::new(expr.clone(), expr.clone(), twist, twist, d)
}

fn split_xyx(expr: &VarietyExpression, x: &VarietyExpression) -> Result<VarietyExpression> {
    let n = expr.num_factors();
    let k = x.num_factors();
    if n < 2 * k || k == 0 {
        return Err(Error::Shape(format!("{expr} is not of the form {x}×Y×{x}")));
    }
    if expr.slice(0..k) != *x || expr.slice(n - k..n) != *x {
        return Err(Error::Shape(format!("{expr} is not of the form {x}×Y×{x}")));
    }
    Ok(expr.slice(k..n - k))
}

/// Pull-back along `X × Y → X × Y × X`, `(x, y) ↦ (x, y, x)`:
/// `a × b × c ↦ (a · c) × b`.
pub fn diag_pullback(cycle: &Cycle, x: &VarietyExpression) -> Result<Cycle> {
    let e = cycle.expr();
    let y = split_xyx(e, x)?;
    let f = e.field();
    let out_expr = x.concat(&y)?;
    let (nx, ny) = (x.basis_len(), y.basis_len());
    let mut out = vec![0u32; out_expr.basis_len()];
    for (i, &coef) in cycle.coeffs().iter().enumerate() {
        if coef == 0 {
            continue;
        }
        let c = i % nx;
        let b = (i / nx) % ny;
        let a = i / (nx * ny);
        for (ac, k) in x.product_terms(a, c) {
            let idx = ac * ny + b;
            out[idx] = f.add(out[idx], f.mul(coef, k));
        }
    }
    Cycle::from_coeffs(&out_expr, out)
}

/// Generic-fibre map ε*: keeps the terms whose last factor group is the
/// fundamental class of `x`, dropping that group.
pub fn generic_fiber(cycle: &Cycle, x: &VarietyExpression) -> Result<Cycle> {
    let e = cycle.expr();
    let n = e.num_factors();
    let k = x.num_factors();
    if n < k || e.slice(n - k..n) != *x {
        return Err(Error::Shape(format!("{e} does not end with {x}")));
    }
    let rest = e.slice(0..n - k);
    let nx = x.basis_len();
    let fund = x.fundamental_index();
    let coeffs = (0..rest.basis_len()).map(|i| cycle.coeffs()[i * nx + fund]).collect();
    Cycle::from_coeffs(&rest, coeffs)
}

/// Push-forward of a cycle on the source along `α`: the cycle is read as a
/// correspondence from the point and composed with `α`.
pub fn act_on_cycle(alpha: &Correspondence, v: &Cycle) -> Result<Cycle> {
    alpha.source.check_same(v.expr())?;
    let row = FpMatrix::row_vector(v.expr().field(), v.coeffs());
    let out = row.mul(&alpha.source.gram())?.mul(&alpha.coeffs)?;
    Cycle::from_coeffs(&alpha.target, out.data().to_vec())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::zoo;

    fn gf(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    fn ex(f: Fp, s: &[crate::chow::SplitChowStructure]) -> VarietyExpression {
        VarietyExpression::new(f, s.iter().cloned().map(Arc::new).collect()).unwrap()
    }

    fn corr(e: &VarietyExpression, split: usize, twist: i64, terms: &[(i64, &str)]) -> Correspondence {
        Correspondence::from_homogeneous_cycle(&Cycle::from_terms(e, terms).unwrap(), split, twist).unwrap()
    }

    #[test]
    fn formula_one_on_p2() {
        for p in [2, 3, 5] {
            let f = gf(p);
            let p2 = ex(f, &[zoo::projective_space(f, 2)]);
            let pt = VarietyExpression::point(f);
            let d = p2.ante_dual().unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    // inner = 1 × x*_j : pt ⇝ P2, outer = x_i × 1 : P2 ⇝ pt.
                    let dual: Vec<u32> = (0..3).map(|b| d.get(b, j)).collect();
                    let inner = Correspondence::from_homogeneous_cycle(
                        &Cycle::from_coeffs(&p2, dual).unwrap(),
                        0,
                        0,
                    )
                    .unwrap();
                    let outer = Correspondence::from_homogeneous_cycle(
                        &Cycle::basis(&p2, i),
                        1,
                        inner.target_twist(),
                    )
                    .unwrap();
                    let c = compose(&outer, &inner).unwrap();
                    assert_eq!(c.coeffs().get(0, 0), u32::from(i == j), "i={i} j={j}");
                    assert!(c.source().is_point() && c.target().is_point());
                    let _ = &pt;
                }
            }
        }
    }

    #[test]
    fn p1_projector_is_idempotent() {
        let f = gf(3);
        let p1 = ex(f, &[zoo::projective_space(f, 1)]);
        let pp = p1.concat(&p1).unwrap();
        let a = corr(&pp, 1, 0, &[(1, "e0×e1")]);
        assert_eq!(compose(&a, &a).unwrap(), a);
        let delta = diagonal(&p1, 0).unwrap();
        assert_eq!(delta, corr(&pp, 1, 0, &[(1, "e0×e1"), (1, "e1×e0")]));
        assert_eq!(compose(&delta, &a).unwrap(), a);
        assert_eq!(compose(&a, &delta).unwrap(), a);
        assert_eq!(compose(&delta, &delta).unwrap(), delta);
    }

    #[test]
    fn compose_rejects_mismatches() {
        let f = gf(2);
        let p1 = ex(f, &[zoo::projective_space(f, 1)]);
        let p2 = ex(f, &[zoo::projective_space(f, 2)]);
        let a = diagonal(&p1, 0).unwrap();
        let b = diagonal(&p2, 0).unwrap();
        assert!(matches!(compose(&a, &b), Err(Error::Expression(_))));
        let c = diagonal(&p1, 1).unwrap();
        assert!(matches!(compose(&a, &c), Err(Error::Twist(_))));
    }

    #[test]
    fn transpose_examples() {
        let f = gf(2);
        let p1 = ex(f, &[zoo::projective_space(f, 1)]);
        let pp = p1.concat(&p1).unwrap();
        let delta = diagonal(&p1, 0).unwrap();
        let td = transpose(&delta);
        assert_eq!(td.coeffs(), delta.coeffs());
        assert_eq!((td.source_twist(), td.target_twist()), (-1, -1));
        let a = corr(&pp, 1, 0, &[(1, "e0×e1")]);
        assert_eq!(transpose(&a).to_cycle(), Cycle::from_terms(&pp, &[(1, "e1×e0")]).unwrap());
        assert_eq!(transpose(&transpose(&a)), a);
    }

    #[test]
    fn external_product_examples() {
        let f = gf(5);
        let p1 = ex(f, &[zoo::projective_space(f, 1)]);
        let pt = VarietyExpression::point(f);
        let pp = p1.concat(&p1).unwrap();
        let a = corr(&pp, 1, 0, &[(1, "e0×e1")]);
        let unit = diagonal(&pt, 0).unwrap();
        let au = external_product(&a, &unit).unwrap();
        assert_eq!(au.coeffs(), a.coeffs());
        // Δ_X ⊗ Δ_Y regrouped from (X×Y) ⇝ (X×Y) is Δ_{X×Y}.
        let dd = external_product(&diagonal(&p1, 0).unwrap(), &diagonal(&p1, 0).unwrap()).unwrap();
        assert_eq!(dd, diagonal(&pp, 0).unwrap());
        let aa = external_product(&a, &a).unwrap();
        assert_eq!(compose(&aa, &aa).unwrap(), aa);
        assert_eq!(aa.coeffs().rank(), 1);
    }

    #[test]
    fn regroup_examples() {
        let f = gf(3);
        let p1 = ex(f, &[zoo::projective_space(f, 1)]);
        let delta = diagonal(&p1, 0).unwrap();
        assert_eq!(regroup(&delta, &[0, 1], 1, 0).unwrap(), delta);
        let from_point = regroup(&delta, &[0, 1], 0, 0).unwrap();
        assert!(from_point.source().is_point());
        assert_eq!(regroup(&from_point, &[0, 1], 1, 0).unwrap(), delta);
        // x_a×y_b×x_c read as X ⇝ Y×X, then as (X×Y) ⇝ X.
        let p2 = ex(f, &[zoo::projective_space(f, 2)]);
        let xyx = p1.concat(&p2).unwrap().concat(&p1).unwrap();
        let cyc = Cycle::from_terms(&xyx, &[(2, "e0×e1×e1")]).unwrap();
        let a = Correspondence::from_homogeneous_cycle(&cyc, 1, 0).unwrap();
        let b = regroup(&a, &[0, 1, 2], 2, 0).unwrap();
        assert_eq!(b.to_cycle(), cyc);
        assert_eq!(b.source().name(), "P1×P2");
        assert!(matches!(regroup(&a, &[0, 0, 1], 1, 0), Err(Error::Permutation(_))));
    }

    #[test]
    fn diag_pullback_examples() {
        let f = gf(2);
        let c = zoo::conic(f);
        let x = ex(f, &[c.clone()]);
        let ccc = ex(f, &[c.clone(), c.clone(), c.clone()]);
        let h1 = Cycle::from_terms(&ccc, &[(1, "e0×e1×e1"), (1, "e1×e0×e1")]).unwrap();
        let h3 = diag_pullback(&h1, &x).unwrap();
        let cc = ex(f, &[c.clone(), c]);
        assert_eq!(h3, Cycle::from_terms(&cc, &[(1, "e0×e1"), (1, "e1×e0")]).unwrap());
        let unit = Cycle::from_terms(&ccc, &[(1, "e1×e0×e1")]).unwrap();
        assert_eq!(diag_pullback(&unit, &x).unwrap(), Cycle::from_terms(&cc, &[(1, "e1×e0")]).unwrap());
        let p1 = ex(f, &[zoo::projective_space(f, 1)]);
        let ppp = p1.concat(&p1).unwrap().concat(&p1).unwrap();
        let z = Cycle::from_terms(&ppp, &[(1, "e0×e1×e0")]).unwrap();
        assert!(diag_pullback(&z, &p1).unwrap().is_zero());
        assert!(matches!(diag_pullback(&z, &x), Err(Error::Shape(_))));
    }

    #[test]
    fn generic_fiber_examples() {
        let f = gf(2);
        let c = zoo::conic(f);
        let x = ex(f, &[c.clone()]);
        let ccc = ex(f, &[c.clone(), c.clone(), c.clone()]);
        let cc = ex(f, &[c.clone(), c]);
        let delta = Cycle::from_terms(&cc, &[(1, "e0×e1"), (1, "e1×e0")]).unwrap();
        let with_fund = delta.external(&Cycle::fundamental(&x)).unwrap();
        assert_eq!(generic_fiber(&with_fund, &x).unwrap(), delta);
        let with_pt = delta.external(&Cycle::basis(&x, 0)).unwrap();
        assert!(generic_fiber(&with_pt, &x).unwrap().is_zero());
        let mixed = with_fund.add(&Cycle::from_terms(&ccc, &[(1, "e1×e1×e0")]).unwrap()).unwrap();
        assert_eq!(generic_fiber(&mixed, &x).unwrap(), delta);
    }

    #[test]
    fn act_on_cycle_examples() {
        let f = gf(2);
        let p1 = ex(f, &[zoo::projective_space(f, 1)]);
        let pp = p1.concat(&p1).unwrap();
        let delta = diagonal(&p1, 0).unwrap();
        let v = Cycle::from_terms(&p1, &[(1, "e0"), (1, "e1")]).unwrap();
        assert_eq!(act_on_cycle(&delta, &v).unwrap(), v);
        // Push-forward along pt×[P1]: deg(pt·v)·[P1].
        let a = corr(&pp, 1, 0, &[(1, "e0×e1")]);
        assert!(act_on_cycle(&a, &Cycle::basis(&p1, 0)).unwrap().is_zero());
        assert_eq!(act_on_cycle(&a, &Cycle::basis(&p1, 1)).unwrap(), Cycle::basis(&p1, 1));
        let z = Correspondence::zero(&p1, &p1, 0, 0);
        assert!(act_on_cycle(&z, &v).unwrap().is_zero());
    }
}
