//! Split Chow rings given as data: graded basis, structure constants and a
//! degree functional, plus formal products of such rings.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::{Fp, FpMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisElement {
    pub label: String,
    pub dim: usize,
}

impl BasisElement {
    pub fn new(label: impl Into<String>, dim: usize) -> Self {
        BasisElement { label: label.into(), dim }
    }
}

/// Chow ring of a geometrically split, geometrically irreducible variety over
/// a splitting field, reduced mod p.
#[derive(Clone, PartialEq, Eq)]
pub struct SplitChowStructure {
    name: String,
    field: Fp,
    dim: usize,
    basis: Vec<BasisElement>,
    /// `products[a][b]` lists `(c, coeff)` with `x_a * x_b = sum coeff * x_c`.
    products: Vec<Vec<Vec<(usize, u32)>>>,
    degree: Vec<u32>,
    fundamental: usize,
    gram: FpMatrix,
    gram_inv: Option<FpMatrix>,
}

impl fmt::Debug for SplitChowStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.basis.iter().map(|b| format!("{}:{}", b.label, b.dim)).collect();
        write!(f, "SplitChowStructure({} over GF({}), dim {}, [{}])", self.name, self.field.p(), self.dim, labels.join(", "))
    }
}

/// One structure constant `x_a * x_b = coeff * x_c`, with an integer
/// coefficient that is reduced mod p on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureConstant {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub coeff: i64,
}

impl SplitChowStructure {
    /// Builds a structure from integer data. Products are assumed commutative:
    /// when only `x_a * x_b` is listed the mirrored product is filled in.
    /// Invariants are not checked here; see [`SplitChowStructure::validate`].
    pub fn from_integer_data(
        name: impl Into<String>,
        field: Fp,
        dim: usize,
        basis: Vec<BasisElement>,
        constants: &[StructureConstant],
        degree: &[(usize, i64)],
        fundamental: usize,
    ) -> Result<Self> {
        let name = name.into();
        let n = basis.len();
        if fundamental >= n {
            return Err(Error::Model(format!("{name}: fundamental index {fundamental} out of range")));
        }
        let mut raw = vec![vec![vec![0i64; n]; n]; n];
        let mut listed = vec![vec![false; n]; n];
        for sc in constants {
            if sc.a >= n || sc.b >= n || sc.c >= n {
                return Err(Error::Model(format!("{name}: structure constant index out of range")));
            }
            raw[sc.a][sc.b][sc.c] += sc.coeff;
            listed[sc.a][sc.b] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if !listed[a][b] && listed[b][a] {
                    raw[a][b] = raw[b][a].clone();
                }
            }
        }
        let products = raw
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cs| {
                        cs.iter()
                            .enumerate()
                            .map(|(c, &v)| (c, field.reduce(v)))
                            .filter(|&(_, v)| v != 0)
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut deg = vec![0u32; n];
        for &(i, v) in degree {
            if i >= n {
                return Err(Error::Model(format!("{name}: degree index out of range")));
            }
            deg[i] = field.add(deg[i], field.reduce(v));
        }
        let mut s = SplitChowStructure {
            name,
            field,
            dim,
            basis,
            products,
            degree: deg,
            fundamental,
            gram: FpMatrix::zeros(field, 0, 0),
            gram_inv: None,
        };
        s.gram = s.compute_gram();
        s.gram_inv = s.gram.inverse();
        Ok(s)
    }

    fn compute_gram(&self) -> FpMatrix {
        let f = self.field;
        let n = self.basis.len();
        let mut g = FpMatrix::zeros(f, n, n);
        for a in 0..n {
            for b in 0..n {
                let v = self.products[a][b]
                    .iter()
                    .fold(0, |acc, &(c, k)| f.add(acc, f.mul(k, self.degree[c])));
                g.set(a, b, v);
            }
        }
        g
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub(crate) fn set_name(&mut self, name: String) {
        self.name = name;
    }
    pub fn field(&self) -> Fp {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }
    pub fn len(&self) -> usize {
        self.basis.len()
    }
    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn fundamental_index(&self) -> usize {
        self.fundamental
    }
    pub fn degree_functional(&self) -> &[u32] {
        &self.degree
    }
    pub fn product_terms(&self, a: usize, b: usize) -> &[(usize, u32)] {
        &self.products[a][b]
    }
    pub fn gram(&self) -> &FpMatrix {
        &self.gram
    }
    pub fn gram_inverse(&self) -> Option<&FpMatrix> {
        self.gram_inv.as_ref()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    /// Checks every structural invariant exhaustively and returns the list of
    /// violations (empty when the structure is valid).
    pub fn validate(&self) -> ValidationReport {
        let f = self.field;
        let n = self.basis.len();
        let mut v = Vec::new();
        if let Some(b) = self.basis.iter().find(|b| b.dim > self.dim) {
            v.push(format!("class {} has dimension {} > {}", b.label, b.dim, self.dim));
        }
        let tops: Vec<usize> = (0..n).filter(|&i| self.basis[i].dim == self.dim).collect();
        if tops.len() > 1 {
            v.push(format!("multiple top classes ({})", tops.len()));
        } else if tops.is_empty() {
            v.push("no top-dimensional class".into());
        }
        if self.basis[self.fundamental].dim != self.dim {
            v.push("fundamental class is not top-dimensional".into());
        }
        for (i, &d) in self.degree.iter().enumerate() {
            if d != 0 && self.basis[i].dim != 0 {
                v.push(format!("degree functional nonzero on {} of positive dimension", self.basis[i].label));
            }
        }
        let mut graded = true;
        let mut commutative = true;
        for a in 0..n {
            for b in 0..n {
                for &(c, _) in &self.products[a][b] {
                    let expected = self.basis[a].dim as i64 + self.basis[b].dim as i64 - self.dim as i64;
                    if self.basis[c].dim as i64 != expected {
                        graded = false;
                    }
                }
                if self.products[a][b] != self.products[b][a] {
                    commutative = false;
                }
            }
        }
        if !graded {
            v.push("product is not graded".into());
        }
        if !commutative {
            v.push("product is not commutative".into());
        }
        let unit_ok = (0..n).all(|b| self.products[self.fundamental][b] == vec![(b, 1 % f.p())]);
        if !unit_ok {
            v.push("fundamental class is not the unit".into());
        }
        let mut assoc = true;
        'outer: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = self.mul_vec(&self.mul_basis(a, b), &unit_vec(n, c));
                    let right = self.mul_vec(&unit_vec(n, a), &self.mul_basis(b, c));
                    if left != right {
                        assoc = false;
                        break 'outer;
                    }
                }
            }
        }
        if !assoc {
            v.push("product is not associative".into());
        }
        if self.gram_inv.is_none() {
            v.push("Ψ degenerate (Gram matrix singular)".into());
        }
        ValidationReport { name: self.name.clone(), violations: v }
    }

    /// Validates, converting violations into an error.
    pub fn validated(self) -> Result<Self> {
        let report = self.validate();
        if report.passed() {
            Ok(self)
        } else {
            Err(Error::InvalidStructure { name: self.name, violations: report.violations })
        }
    }

    fn mul_basis(&self, a: usize, b: usize) -> Vec<u32> {
        let mut out = vec![0u32; self.basis.len()];
        for &(c, k) in &self.products[a][b] {
            out[c] = self.field.add(out[c], k);
        }
        out
    }

    fn mul_vec(&self, u: &[u32], w: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.basis.len()];
        for (a, &ua) in u.iter().enumerate() {
            if ua == 0 {
                continue;
            }
            for (b, &wb) in w.iter().enumerate() {
                if wb == 0 {
                    continue;
                }
                let s = f.mul(ua, wb);
                for &(c, k) in &self.products[a][b] {
                    out[c] = f.add(out[c], f.mul(s, k));
                }
            }
        }
        out
    }
}

fn unit_vec(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub name: String,
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Künneth product of two split structures. Basis pairs are ordered with the
/// first factor most significant.
pub fn tensor_product(a: &SplitChowStructure, b: &SplitChowStructure) -> Result<SplitChowStructure> {
    if a.field != b.field {
        return Err(Error::Modulus(a.field.p(), b.field.p()));
    }
    let f = a.field;
    let nb = b.len();
    let mut basis = Vec::with_capacity(a.len() * nb);
    for x in a.basis() {
        for y in b.basis() {
            basis.push(BasisElement::new(format!("{}×{}", x.label, y.label), x.dim + y.dim));
        }
    }
    let mut constants = Vec::new();
    for i in 0..a.len() {
        for j in 0..nb {
            for k in 0..a.len() {
                for l in 0..nb {
                    for &(c, u) in a.product_terms(i, k) {
                        for &(d, w) in b.product_terms(j, l) {
                            constants.push(StructureConstant {
                                a: i * nb + j,
                                b: k * nb + l,
                                c: c * nb + d,
                                coeff: f.mul(u, w) as i64,
                            });
                        }
                    }
                }
            }
        }
    }
    let mut degree = Vec::new();
    for (i, &u) in a.degree_functional().iter().enumerate() {
        for (j, &w) in b.degree_functional().iter().enumerate() {
            if u != 0 && w != 0 {
                degree.push((i * nb + j, f.mul(u, w) as i64));
            }
        }
    }
    SplitChowStructure::from_integer_data(
        format!("{}⊗{}", a.name(), b.name()),
        f,
        a.dim() + b.dim(),
        basis,
        &constants,
        &degree,
        a.fundamental_index() * nb + b.fundamental_index(),
    )
}

/// A formal product `X_1 × ... × X_k` of atomic structures; the empty product
/// is the point.
#[derive(Clone)]
pub struct VarietyExpression {
    field: Fp,
    factors: Vec<Arc<SplitChowStructure>>,
    dims: Arc<Vec<usize>>,
}

impl PartialEq for VarietyExpression {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.factors.len() == other.factors.len()
            && self.factors.iter().zip(&other.factors).all(|(a, b)| a.name == b.name)
    }
}

impl Eq for VarietyExpression {}

impl std::hash::Hash for VarietyExpression {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        for x in &self.factors {
            x.name.hash(state);
        }
    }
}

impl fmt::Debug for VarietyExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for VarietyExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl VarietyExpression {
    pub fn point(field: Fp) -> Self {
        Self::new(field, vec![]).expect("empty product")
    }

    pub fn atomic(s: Arc<SplitChowStructure>) -> Self {
        let field = s.field;
        Self::new(field, vec![s]).expect("single factor")
    }

    pub fn new(field: Fp, factors: Vec<Arc<SplitChowStructure>>) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|s| s.field != field) {
            return Err(Error::Modulus(field.p(), bad.field.p()));
        }
        let mut dims = vec![0usize];
        for s in &factors {
            let mut next = Vec::with_capacity(dims.len() * s.len());
            for &d in &dims {
                for b in s.basis() {
                    next.push(d + b.dim);
                }
            }
            dims = next;
        }
        Ok(VarietyExpression { field, factors, dims: Arc::new(dims) })
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn factors(&self) -> &[Arc<SplitChowStructure>] {
        &self.factors
    }

    pub fn factor_names(&self) -> Vec<String> {
        self.factors.iter().map(|s| s.name.clone()).collect()
    }

    pub fn name(&self) -> String {
        if self.factors.is_empty() {
            "pt".into()
        } else {
            self.factor_names().join("×")
        }
    }

    pub fn is_point(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|s| s.dim).sum()
    }

    pub fn basis_len(&self) -> usize {
        self.dims.len()
    }

    /// Dimension of every product basis element.
    pub fn basis_dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::Modulus(self.field.p(), other.field.p()));
        }
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().cloned());
        Self::new(self.field, f)
    }

    /// Sub-product of the factors in `range`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Self {
        Self::new(self.field, self.factors[range].to_vec()).expect("same field")
    }

    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.factors.len())?;
        Self::new(self.field, perm.iter().map(|&i| self.factors[i].clone()).collect())
    }

    /// Splits a product index into per-factor indices.
    pub fn tuple_of(&self, mut index: usize) -> Vec<usize> {
        let mut t = vec![0; self.factors.len()];
        for (k, s) in self.factors.iter().enumerate().rev() {
            t[k] = index % s.len();
            index /= s.len();
        }
        t
    }

    pub fn index_of(&self, tuple: &[usize]) -> usize {
        tuple.iter().zip(&self.factors).fold(0, |acc, (&i, s)| acc * s.len() + i)
    }

    pub fn fundamental_index(&self) -> usize {
        let t: Vec<usize> = self.factors.iter().map(|s| s.fundamental).collect();
        self.index_of(&t)
    }

    pub fn label(&self, index: usize) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.tuple_of(index)
            .iter()
            .zip(&self.factors)
            .map(|(&i, s)| s.basis[i].label.clone())
            .collect::<Vec<_>>()
            .join("×")
    }

    /// Parses `a×b×c` (or `a*b*c`) into a product index.
    pub fn parse_label(&self, label: &str) -> Result<usize> {
        let parts: Vec<&str> = if self.factors.is_empty() {
            vec![]
        } else {
            label.split(['×', '*']).map(str::trim).collect()
        };
        if parts.len() != self.factors.len() {
            return Err(Error::Parse(format!("`{label}` does not have {} factors", self.factors.len())));
        }
        let mut t = Vec::with_capacity(parts.len());
        for (part, s) in parts.iter().zip(&self.factors) {
            let i = s
                .index_of(part)
                .ok_or_else(|| Error::Parse(format!("unknown basis label `{part}` on {}", s.name)))?;
            t.push(i);
        }
        Ok(self.index_of(&t))
    }

    /// Gram matrix of the degree pairing on the product basis.
    pub fn gram(&self) -> FpMatrix {
        self.factors
            .iter()
            .fold(FpMatrix::identity(self.field, 1), |acc, s| acc.kron(&s.gram).expect("same field"))
    }

    /// Matrix `D` with `x*_j = sum_b D[b][j] x_b`; satisfies `G * D = I`.
    pub fn ante_dual(&self) -> Result<FpMatrix> {
        let mut acc = FpMatrix::identity(self.field, 1);
        for s in &self.factors {
            let inv = s.gram_inv.as_ref().ok_or_else(|| Error::InvalidStructure {
                name: s.name.clone(),
                violations: vec!["Ψ degenerate (Gram matrix singular)".into()],
            })?;
            acc = acc.kron(inv)?;
        }
        Ok(acc)
    }

    /// Product of two product-basis elements, factor by factor.
    pub fn product_terms(&self, a: usize, b: usize) -> Vec<(usize, u32)> {
        let f = self.field;
        let ta = self.tuple_of(a);
        let tb = self.tuple_of(b);
        let mut acc: Vec<(Vec<usize>, u32)> = vec![(vec![], 1 % f.p())];
        for (k, s) in self.factors.iter().enumerate() {
            let terms = s.product_terms(ta[k], tb[k]);
            let mut next = Vec::with_capacity(acc.len() * terms.len());
            for (t, c) in &acc {
                for &(d, w) in terms {
                    let mut t2 = t.clone();
                    t2.push(d);
                    next.push((t2, f.mul(*c, w)));
                }
            }
            acc = next;
            if acc.is_empty() {
                break;
            }
        }
        acc.into_iter().map(|(t, c)| (self.index_of(&t), c)).collect()
    }

    /// Degree functional on the product basis.
    pub fn degree_vector(&self) -> Vec<u32> {
        let f = self.field;
        let mut acc = vec![1 % f.p()];
        for s in &self.factors {
            let mut next = Vec::with_capacity(acc.len() * s.len());
            for &c in &acc {
                for &d in &s.degree {
                    next.push(f.mul(c, d));
                }
            }
            acc = next;
        }
        acc
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        if self != other {
            return Err(Error::Expression(format!("{} vs {}", self.name(), other.name())));
        }
        Ok(())
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::Permutation(format!("{perm:?} is not a permutation of {n} factors")));
    }
    for &i in perm {
        if i >= n || seen[i] {
            return Err(Error::Permutation(format!("{perm:?} is not a permutation of {n} factors")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// A cycle on the split form of a product, not necessarily homogeneous.
#[derive(Clone, PartialEq, Eq)]
pub struct Cycle {
    expr: VarietyExpression,
    coeffs: Vec<u32>,
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle[{}]({})", self.expr, self.display_terms())
    }
}

impl Cycle {
    pub fn zero(expr: &VarietyExpression) -> Self {
        Cycle { coeffs: vec![0; expr.basis_len()], expr: expr.clone() }
    }

    pub fn basis(expr: &VarietyExpression, index: usize) -> Self {
        let mut c = Self::zero(expr);
        c.coeffs[index] = 1 % expr.field.p();
        c
    }

    pub fn fundamental(expr: &VarietyExpression) -> Self {
        Self::basis(expr, expr.fundamental_index())
    }

    pub fn from_coeffs(expr: &VarietyExpression, coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.len() != expr.basis_len() {
            return Err(Error::Dimension(format!(
                "{} coefficients for a basis of size {}",
                coeffs.len(),
                expr.basis_len()
            )));
        }
        let p = expr.field.p();
        Ok(Cycle { coeffs: coeffs.into_iter().map(|c| c % p).collect(), expr: expr.clone() })
    }

    /// Builds `sum coeff * label` from integer coefficients and `a×b` labels.
    pub fn from_terms(expr: &VarietyExpression, terms: &[(i64, &str)]) -> Result<Self> {
        let f = expr.field;
        let mut c = Self::zero(expr);
        for &(k, label) in terms {
            let i = expr.parse_label(label)?;
            c.coeffs[i] = f.add(c.coeffs[i], f.reduce(k));
        }
        Ok(c)
    }

    pub fn expr(&self) -> &VarietyExpression {
        &self.expr
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Dimension of the support when it lies in one graded piece; `None` for
    /// inhomogeneous cycles and for zero.
    pub fn homogeneous_dim(&self) -> Option<usize> {
        let dims = self.expr.basis_dims();
        let mut found = None;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            match found {
                None => found = Some(dims[i]),
                Some(d) if d != dims[i] => return None,
                _ => {}
            }
        }
        found
    }

    /// The component of dimension `d`.
    pub fn component(&self, d: usize) -> Cycle {
        let dims = self.expr.basis_dims();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| if dims[i] == d { c } else { 0 })
            .collect();
        Cycle { expr: self.expr.clone(), coeffs }
    }

    pub fn add(&self, other: &Cycle) -> Result<Cycle> {
        self.expr.check_same(&other.expr)?;
        let f = self.expr.field;
        Ok(Cycle {
            expr: self.expr.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect(),
        })
    }

    pub fn scale(&self, k: u32) -> Cycle {
        let f = self.expr.field;
        Cycle { expr: self.expr.clone(), coeffs: self.coeffs.iter().map(|&a| f.mul(a, k)).collect() }
    }

    /// Intersection product on the common product variety.
    pub fn intersect(&self, other: &Cycle) -> Result<Cycle> {
        self.expr.check_same(&other.expr)?;
        let f = self.expr.field;
        let mut out = vec![0u32; self.coeffs.len()];
        for (a, &u) in self.coeffs.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for (b, &w) in other.coeffs.iter().enumerate() {
                if w == 0 {
                    continue;
                }
                let s = f.mul(u, w);
                for (c, k) in self.expr.product_terms(a, b) {
                    out[c] = f.add(out[c], f.mul(s, k));
                }
            }
        }
        Ok(Cycle { expr: self.expr.clone(), coeffs: out })
    }

    /// Degree of the zero-dimensional component.
    pub fn degree(&self) -> u32 {
        let f = self.expr.field;
        self.expr
            .degree_vector()
            .iter()
            .zip(&self.coeffs)
            .fold(0, |acc, (&d, &c)| f.add(acc, f.mul(d, c)))
    }

    /// External product `self × other` on the concatenated expression.
    pub fn external(&self, other: &Cycle) -> Result<Cycle> {
        let expr = self.expr.concat(&other.expr)?;
        let f = expr.field;
        let mut coeffs = Vec::with_capacity(expr.basis_len());
        for &a in &self.coeffs {
            for &b in &other.coeffs {
                coeffs.push(f.mul(a, b));
            }
        }
        Ok(Cycle { expr, coeffs })
    }

    pub fn display_terms(&self) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    self.expr.label(i)
                } else {
                    format!("{}·{}", c, self.expr.label(i))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Pairing matrix of an expression: `G[a][b] = deg(x_a · x_b)`.
pub fn gram_matrix(expr: &VarietyExpression) -> FpMatrix {
    expr.gram()
}

pub fn ante_dual_basis(expr: &VarietyExpression) -> Result<FpMatrix> {
    expr.ante_dual()
}

pub fn intersection_product(u: &Cycle, v: &Cycle) -> Result<Cycle> {
    u.intersect(v)
}
