//! Exact dense linear algebra over a prime field GF(p).
//!
//! Matrices are row-major. Subspaces are stored as the rows of a matrix in
//! reduced row-echelon form, so two subspaces are equal exactly when their
//! stored bases are equal.

use std::fmt;

use crate::error::{Error, Result};

/// The prime field GF(p). Elements are `u32` residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p: p as u32 })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a % self.p != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, self.p as u64 - 2)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense matrix over GF(p).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix[GF({}); {}x{}](", self.field.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "{:?}", self.row(r))?;
        }
        write!(f, ")")
    }
}

impl FpMatrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        FpMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows(field: Fp, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| field.reduce(v)).collect();
        Ok(FpMatrix { field, rows: rows.len(), cols, data })
    }

    /// Builds a matrix from already reduced data.
    pub fn from_data(field: Fp, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        let data = data.into_iter().map(|v| v % field.p).collect();
        Ok(FpMatrix { field, rows, cols, data })
    }

    pub fn row_vector(field: Fp, v: &[u32]) -> Self {
        FpMatrix { field, rows: 1, cols: v.len(), data: v.iter().map(|&x| x % field.p).collect() }
    }

    pub fn column_vector(field: Fp, v: &[u32]) -> Self {
        FpMatrix { field, rows: v.len(), cols: 1, data: v.iter().map(|&x| x % field.p).collect() }
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::Modulus(self.field.p, other.field.p));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.field.p as u64;
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let acc = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (slot, &b) in acc.iter_mut().zip(brow) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
        }
        Ok(FpMatrix {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data: out.into_iter().map(|v| v as u32).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(Fp, u32, u32) -> u32) -> Result<Self> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| op(f, a, b)).collect();
        Ok(FpMatrix { field: f, rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        FpMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// Kronecker product; row index of the result is `i * other.rows + k`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let f = self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.data[(i * other.rows + k) * c + j * other.cols + l] =
                            f.mul(a, other.get(k, l));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::Dimension("vstack column mismatch".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FpMatrix { field: self.field, rows: self.rows + other.rows, cols, data })
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..m.cols {
                    m.data.swap(piv * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let v = m.get(r, j);
                m.data[r * m.cols + j] = f.mul(v, inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.data[i * m.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j);
            }
            aug.data[i * 2 * n + n + i] = 1 % self.field.p;
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = red.get(i, n + j);
            }
        }
        Some(inv)
    }

    /// Basis of the right kernel `{x : self * x = 0}`, returned as the rows of
    /// a matrix (each row is one kernel vector).
    pub fn kernel(&self) -> FpMatrix {
        let f = self.field;
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(f, free.len(), self.cols);
        for (idx, &fc) in free.iter().enumerate() {
            k.data[idx * self.cols + fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                k.data[idx * self.cols + pc] = f.neg(red.get(r, fc));
            }
        }
        k
    }

    /// Solves `self * x = target`. Returns `None` when the system is
    /// inconsistent. The particular solution sets all free variables to zero.
    pub fn solve(&self, target: &FpMatrix) -> Result<Option<Solution>> {
        self.check_field(target)?;
        if self.rows != target.rows {
            return Err(Error::Dimension(format!(
                "system has {} equations but target has {} rows",
                self.rows, target.rows
            )));
        }
        let f = self.field;
        let (n, m, t) = (self.rows, self.cols, target.cols);
        let mut aug = Self::zeros(f, n, m + t);
        for i in 0..n {
            for j in 0..m {
                aug.data[i * (m + t) + j] = self.get(i, j);
            }
            for j in 0..t {
                aug.data[i * (m + t) + m + j] = target.get(i, j);
            }
        }
        let (red, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= m) {
            return Ok(None);
        }
        let mut x = Self::zeros(f, m, t);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..t {
                x.data[pc * t + j] = red.get(r, m + j);
            }
        }
        Ok(Some(Solution { particular: x, kernel: self.kernel() }))
    }

    /// Monic minimal polynomial, coefficients from the constant term upwards.
    pub fn min_poly(&self) -> Result<Vec<u32>> {
        if !self.is_square() {
            return Err(Error::Dimension("minimal polynomial of a non-square matrix".into()));
        }
        let id = Self::identity(self.field, self.rows);
        Ok(min_poly_of(self.field, id.data.clone(), self.data.clone(), |a, b| {
            let a = FpMatrix { field: self.field, rows: self.rows, cols: self.cols, data: a.to_vec() };
            let b = FpMatrix { field: self.field, rows: self.rows, cols: self.cols, data: b.to_vec() };
            a.mul(&b).expect("square").data
        }))
    }

    pub fn pow(&self, mut e: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("power of a non-square matrix".into()));
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }
}

/// Output of [`FpMatrix::solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: FpMatrix,
    /// Rows span the kernel of the coefficient matrix.
    pub kernel: FpMatrix,
}

/// Minimal polynomial of `x` in an associative algebra whose elements are
/// flattened into vectors. `unit` is the identity element and `mul` the
/// product. Returns monic coefficients, constant term first.
pub fn min_poly_of(
    field: Fp,
    unit: Vec<u32>,
    x: Vec<u32>,
    mul: impl Fn(&[u32], &[u32]) -> Vec<u32>,
) -> Vec<u32> {
    let len = unit.len();
    let mut powers: Vec<Vec<u32>> = vec![unit];
    let mut current = powers[0].clone();
    loop {
        let next = if powers.len() == 1 { x.clone() } else { mul(&current, &x) };
        // Columns are the previous powers.
        let k = powers.len();
        let mut a = FpMatrix::zeros(field, len, k);
        for (j, v) in powers.iter().enumerate() {
            for i in 0..len {
                a.data[i * k + j] = v[i];
            }
        }
        let target = FpMatrix::column_vector(field, &next);
        if let Some(sol) = a.solve(&target).expect("shapes agree") {
            let mut poly: Vec<u32> = sol.particular.data.iter().map(|&c| field.neg(c)).collect();
            poly.push(1 % field.p);
            return poly;
        }
        current = next.clone();
        powers.push(next);
    }
}

/// A subspace of GF(p)^n stored by its reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpSubspace {
    field: Fp,
    ambient: usize,
    basis: FpMatrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for FpSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpSubspace(dim {} in {}, {:?})", self.dim(), self.ambient, self.basis)
    }
}

impl FpSubspace {
    pub fn zero(field: Fp, ambient: usize) -> Self {
        FpSubspace { field, ambient, basis: FpMatrix::zeros(field, 0, ambient), pivots: vec![] }
    }

    pub fn full(field: Fp, ambient: usize) -> Self {
        Self::span(&FpMatrix::identity(field, ambient))
    }

    /// The row space of `generators`.
    pub fn span(generators: &FpMatrix) -> Self {
        let (red, pivots) = generators.rref();
        let r = pivots.len();
        let basis = FpMatrix {
            field: red.field,
            rows: r,
            cols: red.cols,
            data: red.data[..r * red.cols].to_vec(),
        };
        FpSubspace { field: generators.field, ambient: generators.cols, basis, pivots }
    }

    pub fn span_vectors(field: Fp, ambient: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::Dimension("vector length differs from ambient dimension".into()));
        }
        let data: Vec<u32> = vectors.iter().flatten().copied().collect();
        Ok(Self::span(&FpMatrix::from_data(field, vectors.len(), ambient, data)?))
    }

    pub fn field(&self) -> Fp {
        self.field
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.rows
    }
    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }
    pub fn basis_vectors(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.dim()).map(move |r| self.basis.row(r))
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::Modulus(self.field.p, other.field.p));
        }
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Reduces `v` modulo the subspace; the result is zero iff `v` lies in it.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out: Vec<u32> = v.iter().map(|&x| x % f.p).collect();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            for (slot, &b) in out.iter_mut().zip(self.basis.row(r)) {
                *slot = f.sub(*slot, f.mul(c, b));
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(other.basis_vectors().all(|v| self.contains(v)))
    }

    /// Coordinates of `v` with respect to the stored basis, if `v` lies in the
    /// subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc] % self.field.p).collect())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::span(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field, self.ambient));
        }
        // c = (a, b) with a*U + b*W = 0 gives the common vector a*U.
        let stacked = self.basis.vstack(&other.basis)?;
        let left_kernel = stacked.transpose().kernel();
        let d = self.dim();
        let mut vectors = Vec::with_capacity(left_kernel.rows);
        for r in 0..left_kernel.rows {
            let a = FpMatrix::row_vector(self.field, &left_kernel.row(r)[..d]);
            vectors.push(a.mul(&self.basis)?.data);
        }
        Self::span_vectors(self.field, self.ambient, &vectors)
    }

    /// Adds one vector; returns whether the subspace grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        if self.contains(v) {
            return false;
        }
        let row = FpMatrix::row_vector(self.field, v);
        *self = Self::span(&self.basis.vstack(&row).expect("same ambient"));
        true
    }

    /// Vectors completing the basis of `self` to a basis of `other`, chosen as
    /// reduced representatives (useful as coset witnesses).
    pub fn complement_in(&self, other: &Self) -> Result<Vec<Vec<u32>>> {
        self.check(other)?;
        let mut acc = self.clone();
        let mut out = Vec::new();
        for v in other.basis_vectors() {
            let red = acc.reduce(v);
            if red.iter().any(|&x| x != 0) {
                acc.insert(&red);
                out.push(red);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    fn m(p: u64, rows: &[&[i64]]) -> FpMatrix {
        FpMatrix::from_rows(gf(p), &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(Fp::new(4), Err(Error::NotPrime(4)));
        assert_eq!(Fp::new(1), Err(Error::NotPrime(1)));
        assert!(Fp::new(7).is_ok());
    }

    #[test]
    fn mat_mul_examples() {
        let a = m(2, &[&[1, 1], &[0, 1]]);
        let b = m(2, &[&[1, 0], &[1, 1]]);
        assert_eq!(a.mul(&b).unwrap(), m(2, &[&[0, 1], &[1, 1]]));
        let id = FpMatrix::identity(gf(2), 2);
        assert_eq!(id.mul(&b).unwrap(), b);
        let z = FpMatrix::zeros(gf(2), 2, 2);
        assert!(z.mul(&b).unwrap().is_zero());
        assert!(matches!(a.mul(&FpMatrix::zeros(gf(2), 3, 1)), Err(Error::Dimension(_))));
    }

    #[test]
    fn solve_examples() {
        let f = gf(5);
        let v = FpMatrix::column_vector(f, &[3, 1, 4]);
        let s = FpMatrix::identity(f, 3).solve(&v).unwrap().unwrap();
        assert_eq!(s.particular, v);
        assert_eq!(s.kernel.rows(), 0);

        let none = FpMatrix::zeros(f, 2, 2).solve(&FpMatrix::column_vector(f, &[1, 0])).unwrap();
        assert!(none.is_none());

        // Over GF(3): x + 2y = 0. Enumerating all nine vectors gives the line
        // spanned by (1, 1).
        let a = m(3, &[&[1, 2]]);
        let s = a.solve(&m(3, &[&[0]])).unwrap().unwrap();
        assert_eq!(s.kernel.rows(), 1);
        let mut brute = vec![];
        for x in 0..3 {
            for y in 0..3 {
                if (x + 2 * y) % 3 == 0 {
                    brute.push(vec![x as u32, y as u32]);
                }
            }
        }
        assert_eq!(brute.len(), 3);
        let ker = FpSubspace::span(&s.kernel);
        assert!(ker.contains(&[1, 1]));
        for v in &brute {
            assert!(ker.contains(v));
        }
    }

    #[test]
    fn subspace_examples() {
        let f = gf(2);
        let v = FpSubspace::span_vectors(f, 2, &[vec![1, 1]]).unwrap();
        assert_eq!(v.intersection(&v).unwrap(), v);
        let a = FpSubspace::span_vectors(f, 2, &[vec![1, 0]]).unwrap();
        let b = FpSubspace::span_vectors(f, 2, &[vec![0, 1]]).unwrap();
        assert!(a.sum(&b).unwrap().is_full());
        assert!(a.sum(&b).unwrap().contains(&[1, 1]));
        assert!(a.intersection(&b).unwrap().is_zero());
        assert!(matches!(
            a.sum(&FpSubspace::zero(f, 3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn min_poly_examples() {
        let f = gf(2);
        assert_eq!(FpMatrix::identity(f, 3).min_poly().unwrap(), vec![1, 1]); // t - 1 = t + 1
        let nil = m(5, &[&[0, 1], &[0, 0]]);
        assert_eq!(nil.min_poly().unwrap(), vec![0, 0, 1]);
        // Swap over GF(2): t^2 - 1 = t^2 + 1.
        let swap = m(2, &[&[0, 1], &[1, 0]]);
        let mp = swap.min_poly().unwrap();
        assert_eq!(mp, vec![1, 0, 1]);
        // Substitution check.
        let sq = swap.mul(&swap).unwrap();
        assert_eq!(sq.add(&FpMatrix::identity(f, 2)).unwrap(), FpMatrix::zeros(f, 2, 2));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(7, &[&[2, 3], &[1, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), FpMatrix::identity(gf(7), 2));
        assert!(m(7, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
