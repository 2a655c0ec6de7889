//! Finite-dimensional associative GF(p)-algebras given by structure
//! constants: radical, quotients, idempotent powers, lifting and primitive
//! decompositions of the unit.

use std::collections::HashMap;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ff::{Fp, FpMatrix, FpSubspace};
use crate::poly::Poly;

/// A unital algebra with basis `b_0..b_{n-1}`; elements are coordinate
/// vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    field: Fp,
    dim: usize,
    /// `table[i * dim + j]` = coordinates of `b_i · b_j`.
    table: Vec<Vec<u32>>,
    one: Vec<u32>,
}

impl FiniteAlgebra {
    pub fn from_table(field: Fp, dim: usize, table: Vec<Vec<u32>>, one: Vec<u32>) -> Result<Self> {
        if table.len() != dim * dim || table.iter().any(|v| v.len() != dim) || one.len() != dim {
            return Err(Error::Dimension(format!("structure table for a {dim}-dimensional algebra")));
        }
        let a = FiniteAlgebra { field, dim, table, one };
        for i in 0..dim {
            let e = a.basis_element(i);
            if a.mul(&a.one, &e) != e || a.mul(&e, &a.one) != e {
                return Err(Error::Verification(format!("unit fails on basis element {i}")));
            }
        }
        Ok(a)
    }

    /// The subalgebra spanned by `space` inside an ambient algebra with
    /// product `mul`, in the coordinates of the canonical basis of `space`.
    pub fn from_subspace(
        space: &FpSubspace,
        one: &[u32],
        mul: impl Fn(&[u32], &[u32]) -> Result<Vec<u32>>,
    ) -> Result<Self> {
        let basis: Vec<Vec<u32>> = space.basis_vectors().map(|v| v.to_vec()).collect();
        let dim = basis.len();
        let coords = |v: &[u32]| {
            space
                .coordinates(v)
                .ok_or_else(|| Error::Verification("product leaves the subspace".into()))
        };
        let mut table = Vec::with_capacity(dim * dim);
        for x in &basis {
            for y in &basis {
                table.push(coords(&mul(x, y)?)?);
            }
        }
        let one = coords(one)?;
        Self::from_table(space.field(), dim, table, one)
    }

    /// `GF(p)[t]/(f)`.
    pub fn polynomial_quotient(field: Fp, f: &Poly) -> Result<Self> {
        let n = f.degree().filter(|&d| d > 0).ok_or_else(|| Error::Shape("modulus of degree 0".into()))?;
        let f = f.monic(field);
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut mono = vec![0u32; i + j + 1];
                mono[i + j] = 1;
                let r = Poly::new(field, &mono).rem(&f, field);
                let mut v = r.coeffs().to_vec();
                v.resize(n, 0);
                table.push(v);
            }
        }
        let mut one = vec![0; n];
        one[0] = 1;
        Self::from_table(field, n, table, one)
    }

    /// Full matrix algebra `M_n(GF(p))` with basis `E_ij` in row-major order.
    pub fn matrix_algebra(field: Fp, n: usize) -> Self {
        let d = n * n;
        let mut table = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut v = vec![0; d];
                let (a, b) = (i / n, i % n);
                let (c, e) = (j / n, j % n);
                if b == c {
                    v[a * n + e] = 1;
                }
                table.push(v);
            }
        }
        let mut one = vec![0; d];
        for k in 0..n {
            one[k * n + k] = 1;
        }
        FiniteAlgebra { field, dim: d, table, one }
    }

    pub fn field(&self) -> Fp {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn one(&self) -> &[u32] {
        &self.one
    }
    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.dim]
    }
    pub fn basis_element(&self, i: usize) -> Vec<u32> {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = self.zero();
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                for (o, &t) in out.iter_mut().zip(&self.table[i * self.dim + j]) {
                    if t != 0 {
                        *o = f.add(*o, f.mul(ab, t));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| self.field.add(a, b)).collect()
    }
    pub fn sub(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| self.field.sub(a, b)).collect()
    }
    pub fn scale(&self, x: &[u32], c: u32) -> Vec<u32> {
        x.iter().map(|&a| self.field.mul(a, c)).collect()
    }

    pub fn pow(&self, x: &[u32], mut e: u64) -> Vec<u32> {
        let mut base = x.to_vec();
        let mut acc = self.one.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_idempotent(&self, x: &[u32]) -> bool {
        self.mul(x, x) == x
    }

    pub fn is_nilpotent(&self, x: &[u32]) -> bool {
        self.pow(x, self.dim as u64 + 1).iter().all(|&c| c == 0)
    }

    pub fn eval(&self, poly: &Poly, x: &[u32], unit: &[u32]) -> Vec<u32> {
        poly.eval_in(
            &x.to_vec(),
            &unit.to_vec(),
            &self.zero(),
            |a, b| self.add(a, b),
            |a, c| self.scale(a, c),
            |a, b| self.mul(a, b),
        )
    }

    /// Minimal polynomial of `x` with respect to `unit` (an idempotent with
    /// `unit·x = x·unit = x`).
    pub fn min_poly(&self, x: &[u32], unit: &[u32]) -> Poly {
        let c = crate::ff::min_poly_of(self.field, unit.to_vec(), x.to_vec(), |a, b| self.mul(a, b));
        Poly::new(self.field, &c)
    }

    /// Trace of left multiplication by `x`.
    pub fn trace(&self, x: &[u32]) -> u32 {
        let f = self.field;
        (0..self.dim).fold(0, |acc, j| f.add(acc, self.mul(x, &self.basis_element(j))[j]))
    }

    /// Matrix of `y ↦ x·y`; column `j` holds `x·b_j`.
    pub fn left_matrix(&self, x: &[u32]) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            for (i, c) in self.mul(x, &self.basis_element(j)).into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    fn span(&self, vectors: &[Vec<u32>]) -> FpSubspace {
        FpSubspace::span_vectors(self.field, self.dim, vectors).expect("same ambient")
    }

    /// Two-sided ideal generated by `gens`.
    pub fn ideal(&self, gens: &[Vec<u32>]) -> FpSubspace {
        let mut s = self.span(gens);
        loop {
            let mut grew = false;
            let current: Vec<Vec<u32>> = s.basis_vectors().map(|v| v.to_vec()).collect();
            for v in &current {
                for i in 0..self.dim {
                    let b = self.basis_element(i);
                    grew |= s.insert(&self.mul(&b, v));
                    grew |= s.insert(&self.mul(v, &b));
                }
            }
            if !grew {
                return s;
            }
        }
    }

    /// Span of all products `u·v` with `u ∈ s`, `v ∈ t`.
    pub fn product_space(&self, s: &FpSubspace, t: &FpSubspace) -> FpSubspace {
        let mut out = FpSubspace::zero(self.field, self.dim);
        for u in s.basis_vectors() {
            for v in t.basis_vectors() {
                out.insert(&self.mul(u, v));
            }
        }
        out
    }

    /// Least `k` with `I^k = 0`, if any.
    pub fn nilpotency_index(&self, ideal: &FpSubspace) -> Option<usize> {
        let mut power = ideal.clone();
        for k in 1..=self.dim + 1 {
            if power.is_zero() {
                return Some(k);
            }
            let next = self.product_space(&power, ideal);
            if next == power {
                return None;
            }
            power = next;
        }
        power.is_zero().then_some(self.dim + 1)
    }

    fn is_two_sided_ideal(&self, s: &FpSubspace) -> bool {
        s.basis_vectors().all(|v| {
            (0..self.dim).all(|i| {
                let b = self.basis_element(i);
                s.contains(&self.mul(&b, v)) && s.contains(&self.mul(v, &b))
            })
        })
    }

    /// The radical by iterated p-trace kernels. For `A` acting faithfully on
    /// itself, `I_{-1} = A` and
    /// `I_i = { x ∈ I_{i-1} : g_i(x·y) = 0 for all y }` with
    /// `g_i(z) = (Tr(z̃^{p^i}) mod p^{i+1}) / p^i` for an integer lift `z̃`
    /// of the left multiplication matrix; the radical is `I_l`,
    /// `l = ⌊log_p dim⌋`.
    pub fn radical_ptrace(&self) -> FpSubspace {
        let p = self.field.p() as u64;
        let n = self.dim;
        let mut l = 0u32;
        while p.pow(l + 1) <= n as u64 {
            l += 1;
        }
        let mut current: Vec<Vec<u32>> = (0..n).map(|i| self.basis_element(i)).collect();
        for i in 0..=l {
            if current.is_empty() {
                break;
            }
            let modulus = p.pow(i + 1);
            let g = |z: &[u32]| -> u32 {
                let m = self.left_matrix(z);
                let t = int_trace_of_power(&m, p.pow(i), modulus);
                (t / p.pow(i)) as u32
            };
            // Rows: elements of the current ideal; columns: test elements.
            let mut sys = FpMatrix::zeros(self.field, current.len(), n);
            for (k, x) in current.iter().enumerate() {
                for j in 0..n {
                    sys.set(k, j, g(&self.mul(x, &self.basis_element(j))));
                }
            }
            let kernel = sys.transpose().kernel();
            let mut next = Vec::with_capacity(kernel.rows());
            for r in 0..kernel.rows() {
                let mut v = self.zero();
                for (k, x) in current.iter().enumerate() {
                    let c = kernel.get(r, k);
                    if c != 0 {
                        v = self.add(&v, &self.scale(x, c));
                    }
                }
                next.push(v);
            }
            current = self.span(&next).basis_vectors().map(|v| v.to_vec()).collect();
        }
        self.span(&current)
    }

    /// The largest nilpotent ideal by saturation: every element whose
    /// generated ideal together with the current candidate stays nilpotent
    /// is absorbed. Returns `None` when `p^dim` exceeds `limit`.
    pub fn radical_bruteforce(&self, limit: u64) -> Option<FpSubspace> {
        let p = self.field.p() as u64;
        let total = (0..self.dim).try_fold(1u64, |acc, _| acc.checked_mul(p).filter(|&t| t <= limit))?;
        let mut j = FpSubspace::zero(self.field, self.dim);
        let mut x = self.zero();
        for _ in 0..total {
            if !j.contains(&x) {
                let mut gens: Vec<Vec<u32>> = j.basis_vectors().map(|v| v.to_vec()).collect();
                gens.push(x.clone());
                let cand = self.ideal(&gens);
                if self.nilpotency_index(&cand).is_some() {
                    j = cand;
                }
            }
            for c in x.iter_mut() {
                *c += 1;
                if (*c as u64) < p {
                    break;
                }
                *c = 0;
            }
        }
        Some(j)
    }

    /// Checks that `j` is a nilpotent two-sided ideal whose quotient has
    /// trivial p-trace radical.
    pub fn verify_radical(&self, j: &FpSubspace) -> Result<()> {
        if !self.is_two_sided_ideal(j) {
            return Err(Error::Verification("radical candidate is not an ideal".into()));
        }
        if self.nilpotency_index(j).is_none() {
            return Err(Error::Verification("radical candidate is not nilpotent".into()));
        }
        let q = self.quotient(j)?;
        if !q.algebra.radical_ptrace().is_zero() {
            return Err(Error::Verification("quotient by radical candidate is not semisimple".into()));
        }
        Ok(())
    }

    /// Jacobson radical: p-trace method, verified, with the brute-force
    /// saturation as fallback for small algebras.
    pub fn radical(&self) -> Result<FpSubspace> {
        let j = self.radical_ptrace();
        match self.verify_radical(&j) {
            Ok(()) => Ok(j),
            Err(e) if self.dim <= 12 => {
                let j = self.radical_bruteforce(1 << 20).ok_or(e)?;
                self.verify_radical(&j)?;
                Ok(j)
            }
            Err(e) => Err(e),
        }
    }

    /// `A / I` for a two-sided ideal `I`, with a linear section.
    pub fn quotient(&self, ideal: &FpSubspace) -> Result<Quotient> {
        let full = FpSubspace::full(self.field, self.dim);
        let section = ideal.complement_in(&full)?;
        let m = section.len();
        let mut rows: Vec<Vec<u32>> = section.clone();
        rows.extend(ideal.basis_vectors().map(|v| v.to_vec()));
        let stacked = FpMatrix::from_data(self.field, self.dim, self.dim, rows.concat())?;
        let inv = stacked
            .inverse()
            .ok_or_else(|| Error::Verification("section and ideal do not span".into()))?;
        let project = |v: &[u32]| -> Vec<u32> {
            let c = FpMatrix::row_vector(self.field, v).mul(&inv).expect("shapes agree");
            c.data()[..m].to_vec()
        };
        let mut table = Vec::with_capacity(m * m);
        for x in &section {
            for y in &section {
                table.push(project(&self.mul(x, y)));
            }
        }
        let one = project(&self.one);
        let algebra = FiniteAlgebra::from_table(self.field, m, table, one)?;
        Ok(Quotient { algebra, section, inverse: inv })
    }

    /// Repeats `e ← 3e² − 2e³` until `e² = e`. Requires `e² − e` nilpotent.
    pub fn lift_idempotent(&self, e: &[u32]) -> Result<Vec<u32>> {
        let f = self.field;
        let mut e = e.to_vec();
        for _ in 0..64 {
            let e2 = self.mul(&e, &e);
            if e2 == e {
                return Ok(e);
            }
            let e3 = self.mul(&e2, &e);
            e = self.sub(&self.scale(&e2, f.reduce(3)), &self.scale(&e3, f.reduce(2)));
        }
        Err(Error::Verification("idempotent lifting did not converge".into()))
    }

    /// The corner `e·A·e` as a subspace.
    pub fn corner(&self, e: &[u32]) -> FpSubspace {
        let v: Vec<Vec<u32>> = (0..self.dim)
            .map(|i| self.mul(&self.mul(e, &self.basis_element(i)), e))
            .collect();
        self.span(&v)
    }

    /// Centre of a subalgebra given as a subspace.
    pub fn center_of(&self, s: &FpSubspace) -> FpSubspace {
        let basis: Vec<Vec<u32>> = s.basis_vectors().map(|v| v.to_vec()).collect();
        let k = basis.len();
        if k == 0 {
            return s.clone();
        }
        // Σ c_a [s_a, s_b] = 0 for all b.
        let mut sys = FpMatrix::zeros(self.field, k, k * self.dim);
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate() {
                let c = self.sub(&self.mul(x, y), &self.mul(y, x));
                for (t, v) in c.into_iter().enumerate() {
                    sys.set(a, b * self.dim + t, v);
                }
            }
        }
        let ker = sys.transpose().kernel();
        let vectors: Vec<Vec<u32>> = (0..ker.rows())
            .map(|r| {
                let row = FpMatrix::row_vector(self.field, ker.row(r));
                let b = FpMatrix::from_data(self.field, k, self.dim, basis.concat()).expect("sizes agree");
                row.mul(&b).expect("shapes agree").data().to_vec()
            })
            .collect();
        self.span(&vectors)
    }

    /// Fixed points of `z ↦ z^p` on a commutative subalgebra.
    pub fn frobenius_fixed(&self, z: &FpSubspace) -> FpSubspace {
        let p = self.field.p() as u64;
        let basis: Vec<Vec<u32>> = z.basis_vectors().map(|v| v.to_vec()).collect();
        let k = basis.len();
        let mut sys = FpMatrix::zeros(self.field, k, self.dim);
        for (a, x) in basis.iter().enumerate() {
            for (t, v) in self.sub(&self.pow(x, p), x).into_iter().enumerate() {
                sys.set(a, t, v);
            }
        }
        let ker = sys.transpose().kernel();
        let vectors: Vec<Vec<u32>> = (0..ker.rows())
            .map(|r| {
                let mut v = self.zero();
                for (a, x) in basis.iter().enumerate() {
                    v = self.add(&v, &self.scale(x, ker.get(r, a)));
                }
                v
            })
            .collect();
        self.span(&vectors)
    }

    /// In a semisimple algebra: `e·A·e` is a field (so `e` is primitive).
    pub fn corner_is_field(&self, e: &[u32]) -> bool {
        let s = self.corner(e);
        let z = self.center_of(&s);
        z.dim() == s.dim() && self.frobenius_fixed(&z).dim() == 1
    }

    /// Splits the idempotent `e` of a semisimple algebra into primitive
    /// orthogonal idempotents.
    pub fn split_semisimple<R: Rng>(&self, e: &[u32], rng: &mut R, tries: usize) -> Result<Vec<Vec<u32>>> {
        if e.iter().all(|&c| c == 0) {
            return Ok(vec![]);
        }
        let s = self.corner(e);
        if s.dim() == 1 {
            return Ok(vec![e.to_vec()]);
        }
        let z = self.center_of(&s);
        let fixed = self.frobenius_fixed(&z);
        let split_with = |x: &[u32]| -> Option<Vec<u32>> {
            let mu = self.min_poly(x, e);
            let factors = mu.factor(self.field);
            if factors.len() < 2 {
                return None;
            }
            let (g0, m0) = &factors[0];
            let head = g0.pow(*m0, self.field);
            let (rest, _) = mu.divrem(&head, self.field);
            // u ≡ 1 mod head, u ≡ 0 mod rest.
            let (_, _, inv) = head.ext_gcd(&rest, self.field);
            let u = inv.mul(&rest, self.field).rem(&mu, self.field);
            Some(self.eval(&u, x, e))
        };
        let u = if fixed.dim() > 1 {
            let x = fixed
                .basis_vectors()
                .find(|v| !self.span(&[e.to_vec()]).contains(v))
                .expect("fixed space larger than the scalars")
                .to_vec();
            split_with(&x).ok_or_else(|| Error::Verification("central element did not split".into()))?
        } else if z.dim() == s.dim() {
            return Ok(vec![e.to_vec()]);
        } else {
            let basis: Vec<Vec<u32>> = s.basis_vectors().map(|v| v.to_vec()).collect();
            let mut found = None;
            for _ in 0..tries {
                let mut x = self.zero();
                for b in &basis {
                    x = self.add(&x, &self.scale(b, rng.gen_range(0..self.field.p())));
                }
                if let Some(u) = split_with(&x) {
                    found = Some(u);
                    break;
                }
            }
            found.ok_or_else(|| Error::Verification(format!("no splitting element in {tries} random draws")))?
        };
        let v = self.sub(e, &u);
        let mut out = self.split_semisimple(&u, rng, tries)?;
        out.extend(self.split_semisimple(&v, rng, tries)?);
        Ok(out)
    }

    /// Complete set of primitive orthogonal idempotents summing to one:
    /// split modulo the radical, lift one idempotent at a time into the
    /// remaining corner, then verify.
    pub fn primitive_idempotents(&self, seed: u64) -> Result<Decomposition> {
        let j = self.radical()?;
        let q = self.quotient(&j)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bars = q.algebra.split_semisimple(q.algebra.one(), &mut rng, 10_000)?;
        let mut rest = self.one.clone();
        let mut lifted = Vec::with_capacity(bars.len());
        for (k, bar) in bars.iter().enumerate() {
            if k + 1 == bars.len() {
                lifted.push(rest.clone());
                break;
            }
            let y = q.lift(bar);
            let y = self.mul(&self.mul(&rest, &y), &rest);
            let e = self.lift_idempotent(&y)?;
            rest = self.sub(&rest, &e);
            lifted.push(e);
        }
        let d = Decomposition { idempotents: lifted, radical_dim: j.dim(), seed };
        self.verify_decomposition(&d, &j)?;
        Ok(d)
    }

    /// Orthogonality, idempotence, sum one, and primitivity through the
    /// quotient by the radical.
    pub fn verify_decomposition(&self, d: &Decomposition, j: &FpSubspace) -> Result<()> {
        let mut sum = self.zero();
        for (a, e) in d.idempotents.iter().enumerate() {
            if e.iter().all(|&c| c == 0) {
                return Err(Error::Verification(format!("idempotent {a} is zero")));
            }
            for (b, f) in d.idempotents.iter().enumerate() {
                let ef = self.mul(e, f);
                let expected = if a == b { e.clone() } else { self.zero() };
                if ef != expected {
                    return Err(Error::Verification(format!("e{a}·e{b} has the wrong value")));
                }
            }
            sum = self.add(&sum, e);
        }
        if sum != self.one {
            return Err(Error::Verification("idempotents do not sum to one".into()));
        }
        let q = self.quotient(j)?;
        for (a, e) in d.idempotents.iter().enumerate() {
            if !q.algebra.corner_is_field(&q.project(e)) {
                return Err(Error::Verification(format!("idempotent {a} is not primitive")));
            }
        }
        Ok(())
    }

    /// Exhaustive primitivity check: no idempotent of `e·A·e` other than
    /// `0` and `e`. `None` when the corner has more than `limit` elements.
    pub fn is_primitive_by_enumeration(&self, e: &[u32], limit: u64) -> Option<bool> {
        let s = self.corner(e);
        let p = self.field.p() as u64;
        let total = (0..s.dim()).try_fold(1u64, |acc, _| acc.checked_mul(p).filter(|&t| t <= limit))?;
        let basis: Vec<Vec<u32>> = s.basis_vectors().map(|v| v.to_vec()).collect();
        let mut c = vec![0u32; basis.len()];
        for _ in 0..total {
            let mut x = self.zero();
            for (k, b) in basis.iter().enumerate() {
                x = self.add(&x, &self.scale(b, c[k]));
            }
            if self.is_idempotent(&x) && x.iter().any(|&v| v != 0) && x != e {
                return Some(false);
            }
            for v in c.iter_mut() {
                *v += 1;
                if (*v as u64) < p {
                    break;
                }
                *v = 0;
            }
        }
        Some(true)
    }
}

#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: FiniteAlgebra,
    /// Preimages of the quotient basis.
    pub section: Vec<Vec<u32>>,
    inverse: FpMatrix,
}

impl Quotient {
    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        let f = self.algebra.field();
        let c = FpMatrix::row_vector(f, v).mul(&self.inverse).expect("shapes agree");
        c.data()[..self.section.len()].to_vec()
    }

    pub fn lift(&self, w: &[u32]) -> Vec<u32> {
        let f = self.algebra.field();
        let n = self.inverse.rows();
        let mut out = vec![0u32; n];
        for (c, s) in w.iter().zip(&self.section) {
            for (o, &x) in out.iter_mut().zip(s) {
                *o = f.add(*o, f.mul(*c, x));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub idempotents: Vec<Vec<u32>>,
    pub radical_dim: usize,
    pub seed: u64,
}

/// Trace of `m̃^e mod modulus`, with `m̃` the lift of `m` to `[0, p)`.
fn int_trace_of_power(m: &FpMatrix, mut e: u64, modulus: u64) -> u64 {
    let n = m.rows();
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + x * b[k * n + j]) % modulus;
                }
            }
        }
        out
    };
    let mut base: Vec<u64> = m.data().iter().map(|&x| x as u64 % modulus).collect();
    let mut acc: Vec<u64> = (0..n * n).map(|k| u64::from(k / n == k % n)).collect();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    (0..n).map(|i| acc[i * n + i]).sum::<u64>() % modulus
}

/// Eventual period of the powers of `x`: the least `m`, `r` with
/// `x^m = x^{m+r}`, and `e = x^n` for the least multiple `n` of `r` with
/// `n >= m`. The powers of `x` must form a finite set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerCycle<T> {
    pub m: u64,
    pub r: u64,
    pub n: u64,
    pub e: T,
}

pub fn idempotent_power<T: Clone + Eq + Hash>(x: &T, mul: impl Fn(&T, &T) -> T) -> PowerCycle<T> {
    let mut seen: HashMap<T, u64> = HashMap::new();
    let mut powers: Vec<T> = Vec::new();
    let mut current = x.clone();
    let mut k = 1u64;
    loop {
        if let Some(&m) = seen.get(&current) {
            let r = k - m;
            let n = m.div_ceil(r) * r;
            let e = powers[(n - 1) as usize].clone();
            return PowerCycle { m, r, n, e };
        }
        seen.insert(current.clone(), k);
        powers.push(current.clone());
        current = mul(&current, x);
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    fn poly(p: u64, c: &[u32]) -> Poly {
        Poly::new(gf(p), c)
    }

    #[test]
    fn idempotent_powers() {
        let f = gf(2);
        let a = FiniteAlgebra::matrix_algebra(f, 2);
        let e = vec![1, 0, 0, 0];
        let pc = idempotent_power(&e, |x, y| a.mul(x, y));
        assert_eq!((pc.n, pc.e.clone()), (1, e));
        let nil = vec![0, 1, 0, 0];
        assert!(idempotent_power(&nil, |x, y| a.mul(x, y)).e.iter().all(|&c| c == 0));
        let swap = vec![0, 1, 1, 0];
        let pc = idempotent_power(&swap, |x, y| a.mul(x, y));
        assert_eq!((pc.m, pc.r, pc.n), (1, 2, 2));
        assert_eq!(pc.e, a.one());
    }

    #[test]
    fn radicals() {
        // GF(2)[s]/(s^2 - 1): radical spanned by 1 + s.
        let a = FiniteAlgebra::polynomial_quotient(gf(2), &poly(2, &[1, 0, 1])).unwrap();
        let j = a.radical().unwrap();
        assert_eq!(j, FpSubspace::span_vectors(gf(2), 2, &[vec![1, 1]]).unwrap());
        assert_eq!(a.nilpotency_index(&j), Some(2));
        assert!(FiniteAlgebra::matrix_algebra(gf(2), 2).radical().unwrap().is_zero());
        assert!(FiniteAlgebra::matrix_algebra(gf(3), 3).radical().unwrap().is_zero());
        let k = FiniteAlgebra::polynomial_quotient(gf(5), &poly(5, &[0, 1])).unwrap();
        assert!(k.radical().unwrap().is_zero());
    }

    #[test]
    fn upper_triangular_radical() {
        for p in [2, 3] {
            let f = gf(p);
            let m3 = FiniteAlgebra::matrix_algebra(f, 3);
            // Upper triangular 3x3 matrices.
            let gens: Vec<Vec<u32>> = [0, 1, 2, 4, 5, 8].iter().map(|&i| m3.basis_element(i)).collect();
            let s = FpSubspace::span_vectors(f, 9, &gens).unwrap();
            let t = FiniteAlgebra::from_subspace(&s, m3.one(), |x, y| Ok(m3.mul(x, y))).unwrap();
            let j = t.radical().unwrap();
            assert_eq!(j.dim(), 3);
            assert_eq!(t.radical_bruteforce(1 << 16).unwrap(), j);
            assert_eq!(t.nilpotency_index(&j), Some(3));
            assert_eq!(t.primitive_idempotents(1).unwrap().idempotents.len(), 3);
        }
    }

    #[test]
    fn ptrace_matches_bruteforce() {
        for p in [2u64, 3] {
            let f = gf(p);
            // Products of small factors give radicals of several shapes.
            for c in [vec![0, 0, 0, 1], vec![1, 0, 1, 0, 1], vec![0, 0, 1, 1], vec![1, 1, 0, 1]] {
                let m = poly(p, &c);
                if m.degree().unwrap_or(0) == 0 {
                    continue;
                }
                let a = FiniteAlgebra::polynomial_quotient(f, &m).unwrap();
                assert_eq!(a.radical_ptrace(), a.radical_bruteforce(1 << 16).unwrap(), "p={p} {c:?}");
            }
        }
    }

    #[test]
    fn lifting() {
        let f = gf(3);
        let a = FiniteAlgebra::polynomial_quotient(f, &poly(3, &[0, 0, 1])).unwrap();
        assert_eq!(a.lift_idempotent(&[1, 1]).unwrap(), vec![1, 0]);
        assert_eq!(a.lift_idempotent(&[0, 0]).unwrap(), vec![0, 0]);
        assert_eq!(a.lift_idempotent(&[1, 0]).unwrap(), vec![1, 0]);
    }

    #[test]
    fn primitive_decompositions() {
        for p in [2, 3] {
            let f = gf(p);
            let m3 = FiniteAlgebra::matrix_algebra(f, 3);
            let d = m3.primitive_idempotents(5).unwrap();
            assert_eq!(d.idempotents.len(), 3);
            for e in &d.idempotents {
                assert_eq!(m3.is_primitive_by_enumeration(e, 1 << 12), Some(true));
            }
            // GF(p)[t]/(t^2 (t+1)) = local ⊕ field.
            let a = FiniteAlgebra::polynomial_quotient(f, &poly(p, &[0, 0, 1, 1])).unwrap();
            assert_eq!(a.primitive_idempotents(0).unwrap().idempotents.len(), 2);
            let local = FiniteAlgebra::polynomial_quotient(f, &poly(p, &[1, 0, 1])).unwrap();
            let n = local.primitive_idempotents(0).unwrap().idempotents.len();
            // t^2 + 1 splits mod 2 as (t+1)^2 and is irreducible mod 3.
            assert_eq!(n, 1);
        }
    }
}
