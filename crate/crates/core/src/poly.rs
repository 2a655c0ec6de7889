//! Univariate polynomials over GF(p) and their factorization.
//!
//! Coefficients are stored from the constant term upwards with no trailing
//! zeros; the zero polynomial is the empty vector.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ff::Fp;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(field: Fp, coeffs: &[u32]) -> Self {
        let mut c: Vec<u32> = coeffs.iter().map(|&x| x % field.p()).collect();
        trim(&mut c);
        Poly { coeffs: c }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    /// The monomial `t`.
    pub fn x() -> Self {
        Poly { coeffs: vec![0, 1] }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> u32 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn add(&self, other: &Self, f: Fp) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c: Vec<u32> = (0..n)
            .map(|i| f.add(*self.coeffs.get(i).unwrap_or(&0), *other.coeffs.get(i).unwrap_or(&0)))
            .collect();
        trim(&mut c);
        Poly { coeffs: c }
    }

    pub fn sub(&self, other: &Self, f: Fp) -> Self {
        self.add(&other.neg(f), f)
    }

    pub fn neg(&self, f: Fp) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }

    pub fn scale(&self, c: u32, f: Fp) -> Self {
        let mut v: Vec<u32> = self.coeffs.iter().map(|&a| f.mul(a, c)).collect();
        trim(&mut v);
        Poly { coeffs: v }
    }

    pub fn mul(&self, other: &Self, f: Fp) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        trim(&mut c);
        Poly { coeffs: c }
    }

    pub fn monic(&self, f: Fp) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f.inv(self.lead()), f)
    }

    /// Euclidean division. Panics on division by zero.
    pub fn divrem(&self, d: &Self, f: Fp) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let inv = f.inv(d.lead());
        let mut q = vec![0u32; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = f.mul(r[i + dd], inv);
            q[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in d.coeffs.iter().enumerate() {
                r[i + j] = f.sub(r[i + j], f.mul(c, b));
            }
        }
        trim(&mut q);
        trim(&mut r);
        (Poly { coeffs: q }, Poly { coeffs: r })
    }

    pub fn rem(&self, d: &Self, f: Fp) -> Self {
        self.divrem(d, f).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self, f: Fp) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self, f: Fp) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1, f);
            r0 = r1;
            r1 = r;
            let s = s0.sub(&q.mul(&s1, f), f);
            s0 = s1;
            s1 = s;
            let t = t0.sub(&q.mul(&t1, f), f);
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.lead());
        (r0.scale(inv, f), s0.scale(inv, f), t0.scale(inv, f))
    }

    pub fn derivative(&self, f: Fp) -> Self {
        let mut c: Vec<u32> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(a, (i as u64 % f.p() as u64) as u32))
            .collect();
        trim(&mut c);
        Poly { coeffs: c }
    }

    pub fn pow_mod(&self, mut e: u128, m: &Self, f: Fp) -> Self {
        let mut base = self.rem(m, f);
        let mut acc = Poly::one().rem(m, f);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f).rem(m, f);
            }
            base = base.mul(&base, f).rem(m, f);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, e: usize, f: Fp) -> Self {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self, f))
    }

    /// Evaluates the polynomial at an element of an algebra by Horner's rule.
    pub fn eval_in<T: Clone>(
        &self,
        x: &T,
        unit: &T,
        zero: &T,
        add: impl Fn(&T, &T) -> T,
        scale: impl Fn(&T, u32) -> T,
        mul: impl Fn(&T, &T) -> T,
    ) -> T {
        let mut acc = zero.clone();
        for &c in self.coeffs.iter().rev() {
            acc = add(&mul(&acc, x), &scale(unit, c));
        }
        acc
    }

    /// Irreducible monic factors with multiplicities, sorted.
    pub fn factor(&self, f: Fp) -> Vec<(Poly, usize)> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let mut out = Vec::new();
        for (sqf, mult) in squarefree_decomposition(&self.monic(f), f) {
            for (g, d) in distinct_degree(&sqf, f) {
                for irr in equal_degree(&g, d, f) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort();
        // Merge equal factors coming from different squarefree parts.
        let mut merged: Vec<(Poly, usize)> = Vec::new();
        for (g, m) in out {
            match merged.last_mut() {
                Some((h, k)) if *h == g => *k += m,
                _ => merged.push((g, m)),
            }
        }
        merged
    }

    /// Product of the distinct irreducible factors.
    pub fn radical(&self, f: Fp) -> Self {
        self.factor(f).iter().fold(Poly::one(), |acc, (g, _)| acc.mul(g, f))
    }

    pub fn is_irreducible(&self, f: Fp) -> bool {
        match self.degree() {
            None | Some(0) => false,
            _ => {
                let fac = self.factor(f);
                fac.len() == 1 && fac[0].1 == 1
            }
        }
    }
}

fn trim(c: &mut Vec<u32>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

/// Square-free factorization: returns `(g_i, i)` with `self = prod g_i^i`.
fn squarefree_decomposition(a: &Poly, f: Fp) -> Vec<(Poly, usize)> {
    let p = f.p() as usize;
    let mut out = Vec::new();
    if a.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = a.derivative(f);
    if d.is_zero() {
        // a(t) = b(t^p); in GF(p) the p-th root of a coefficient is itself.
        let root = Poly {
            coeffs: a.coeffs.iter().step_by(p).copied().collect(),
        };
        for (g, m) in squarefree_decomposition(&root, f) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = a.gcd(&d, f);
    let mut w = a.divrem(&c, f).0;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c, f);
        let z = w.divrem(&y, f).0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z.monic(f), i));
        }
        i += 1;
        w = y;
        c = c.divrem(&w, f).0;
    }
    if c.degree().unwrap_or(0) > 0 {
        let root = Poly {
            coeffs: c.coeffs.iter().step_by(p).copied().collect(),
        };
        for (g, m) in squarefree_decomposition(&root, f) {
            out.push((g, m * p));
        }
    }
    out
}

/// Distinct-degree factorization of a monic square-free polynomial.
fn distinct_degree(a: &Poly, f: Fp) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = a.clone();
    let x = Poly::x();
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(f.p() as u128, &rest, f);
        let g = rest.gcd(&h.sub(&x, f), f);
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), d));
            rest = rest.divrem(&g, f).0;
            h = h.rem(&rest, f);
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest, deg));
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of distinct degree-`d` irreducibles.
fn equal_degree(a: &Poly, d: usize, f: Fp) -> Vec<Poly> {
    let n = a.degree().unwrap_or(0);
    if n == d {
        return vec![a.monic(f)];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 ^ n as u64);
    let p = f.p() as u128;
    loop {
        let r = Poly::new(f, &(0..n).map(|_| rng.gen_range(0..f.p())).collect::<Vec<_>>());
        if r.degree().unwrap_or(0) == 0 {
            continue;
        }
        let candidate = if p == 2 {
            // Absolute trace map t + t^2 + ... + t^(2^(d-1)).
            let mut acc = r.clone();
            let mut cur = r.clone();
            for _ in 1..d {
                cur = cur.mul(&cur, f).rem(a, f);
                acc = acc.add(&cur, f);
            }
            acc
        } else {
            let e = (p.pow(d as u32) - 1) / 2;
            r.pow_mod(e, a, f).sub(&Poly::one(), f)
        };
        let g = a.gcd(&candidate, f);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let mut out = equal_degree(&g, d, f);
            out.extend(equal_degree(&a.divrem(&g, f).0, d, f));
            return out;
        }
    }
}
