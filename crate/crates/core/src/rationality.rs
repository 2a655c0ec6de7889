//! Rational cycles over a finite poset of fields.
//!
//! Every tracked pair (field, expression) carries a subspace of the split
//! Chow group. Generators are closed under the operations that preserve
//! rationality until nothing changes. Function fields are not nodes: the
//! `L(X)`-rational cycles on `X × Y` are defined as the generic-fibre image of
//! the `L`-rational cycles on `X × Y × X`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::chow::{Cycle, SplitChowStructure, VarietyExpression};
use crate::correspondence::{diag_pullback, generic_fiber, permute_cycle, Correspondence};
use crate::error::{Error, Result};
use crate::ff::{Fp, FpMatrix, FpSubspace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct FieldNode {
    pub name: String,
    /// Over a split node every cycle is rational.
    pub split: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldPoset {
    nodes: Vec<FieldNode>,
    leq: Vec<Vec<bool>>,
    minimum: usize,
}

impl FieldPoset {
    /// Builds the order generated by `relations` (pairs `a ≤ b`), rejecting
    /// cycles and posets without a unique minimum.
    pub fn new(nodes: Vec<FieldNode>, relations: &[(String, String)]) -> Result<Self> {
        let n = nodes.len();
        if n == 0 {
            return Err(Error::Poset("no fields".into()));
        }
        let mut names = BTreeSet::new();
        for node in &nodes {
            if !names.insert(node.name.clone()) {
                return Err(Error::Poset(format!("duplicate field `{}`", node.name)));
            }
        }
        let index = |s: &str| {
            nodes.iter().position(|x| x.name == s).ok_or_else(|| Error::UnknownField(s.to_string()))
        };
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in relations {
            leq[index(a)?][index(b)?] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && leq[j][i] {
                    return Err(Error::Poset(format!(
                        "`{}` and `{}` are mutually below each other",
                        nodes[i].name, nodes[j].name
                    )));
                }
            }
        }
        let minima: Vec<usize> = (0..n).filter(|&i| (0..n).all(|j| leq[i][j])).collect();
        let [minimum] = minima[..] else {
            return Err(Error::Poset("no unique minimum field".into()));
        };
        Ok(FieldPoset { nodes, leq, minimum })
    }

    /// A chain `names[0] ≤ names[1] ≤ ...`; the last node is split.
    pub fn chain(names: &[&str]) -> Result<Self> {
        let nodes = names
            .iter()
            .enumerate()
            .map(|(i, s)| FieldNode { name: s.to_string(), split: i + 1 == names.len() })
            .collect();
        let rel: Vec<(String, String)> = names.windows(2).map(|w| (w[0].to_string(), w[1].to_string())).collect();
        Self::new(nodes, &rel)
    }

    pub fn nodes(&self) -> &[FieldNode] {
        &self.nodes
    }
    pub fn index(&self, name: &str) -> Result<usize> {
        self.nodes.iter().position(|x| x.name == name).ok_or_else(|| Error::UnknownField(name.to_string()))
    }
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }
    pub fn minimum(&self) -> &str {
        &self.nodes[self.minimum].name
    }
    pub fn relations(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (i, a) in self.nodes.iter().enumerate() {
            for (j, b) in self.nodes.iter().enumerate() {
                if i != j && self.leq[i][j] {
                    out.push((a.name.clone(), b.name.clone()));
                }
            }
        }
        out
    }
}

type Key = (usize, Vec<String>);

#[derive(Debug, Clone)]
pub struct RationalityModel {
    field: Fp,
    poset: FieldPoset,
    varieties: BTreeMap<String, Arc<SplitChowStructure>>,
    exprs: BTreeMap<Vec<String>, VarietyExpression>,
    generators: Vec<(usize, Cycle)>,
    spaces: BTreeMap<Key, FpSubspace>,
    closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceSummary {
    pub field: String,
    pub expr: String,
    pub dim: usize,
    pub ambient: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub rounds: usize,
    pub spaces: Vec<SpaceSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis1Report {
    pub holds: bool,
    /// Coset representatives of the larger space modulo the smaller one.
    pub witnesses: Vec<Cycle>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionReport {
    pub from: String,
    pub to: String,
    pub expr: String,
    pub kernel_dim: usize,
    pub note: String,
}

impl RationalityModel {
    pub fn new(field: Fp, poset: FieldPoset, varieties: Vec<SplitChowStructure>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for v in varieties {
            if v.field() != field {
                return Err(Error::Modulus(field.p(), v.field().p()));
            }
            let v = v.validated()?;
            map.insert(v.name().to_string(), Arc::new(v));
        }
        Ok(RationalityModel {
            field,
            poset,
            varieties: map,
            exprs: BTreeMap::new(),
            generators: Vec::new(),
            spaces: BTreeMap::new(),
            closed: false,
        })
    }

    pub fn field(&self) -> Fp {
        self.field
    }
    pub fn poset(&self) -> &FieldPoset {
        &self.poset
    }
    pub fn variety(&self, name: &str) -> Result<&Arc<SplitChowStructure>> {
        self.varieties.get(name).ok_or_else(|| Error::UnknownVariety(name.to_string()))
    }
    pub fn varieties(&self) -> impl Iterator<Item = &Arc<SplitChowStructure>> {
        self.varieties.values()
    }
    pub fn generators(&self) -> impl Iterator<Item = (&str, &Cycle)> {
        self.generators.iter().map(|(i, c)| (self.poset.nodes[*i].name.as_str(), c))
    }
    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn expr<S: AsRef<str>>(&self, names: &[S]) -> Result<VarietyExpression> {
        let factors = names.iter().map(|n| self.variety(n.as_ref()).cloned()).collect::<Result<Vec<_>>>()?;
        VarietyExpression::new(self.field, factors)
    }

    /// Parses `A×B×C` (or `A*B*C`); `pt` is the point.
    pub fn parse_expr(&self, s: &str) -> Result<VarietyExpression> {
        let s = s.trim();
        if s.is_empty() || s == "pt" {
            return Ok(VarietyExpression::point(self.field));
        }
        let names: Vec<&str> = s.split(['×', '*']).map(str::trim).collect();
        self.expr(&names)
    }

    fn own(&self, e: &VarietyExpression) -> Result<()> {
        for (name, s) in e.factor_names().iter().zip(e.factors()) {
            if !Arc::ptr_eq(self.variety(name)?, s) && **self.variety(name)? != **s {
                return Err(Error::Expression(format!("`{name}` differs from the model's structure")));
            }
        }
        Ok(())
    }

    /// Registers `e` and all its factor subsequences for closure.
    pub fn track(&mut self, e: &VarietyExpression) -> Result<()> {
        self.own(e)?;
        let n = e.num_factors();
        let names = e.factor_names();
        for mask in 1u32..(1 << n) {
            let sub: Vec<String> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| names[i].clone()).collect();
            if !self.exprs.contains_key(&sub) {
                let ex = self.expr(&sub)?;
                self.exprs.insert(sub.clone(), ex);
                self.closed = false;
            }
        }
        Ok(())
    }

    pub fn add_generator(&mut self, field: &str, cycle: Cycle) -> Result<()> {
        let i = self.poset.index(field)?;
        self.track(cycle.expr())?;
        self.generators.push((i, cycle));
        self.closed = false;
        Ok(())
    }

    fn key(&self, field: usize, e: &VarietyExpression) -> Key {
        (field, e.factor_names())
    }

    fn insert(&mut self, key: &Key, v: &[u32]) -> bool {
        let space = self.spaces.get_mut(key).expect("tracked");
        if v.iter().all(|&x| x == 0) || space.contains(v) {
            return false;
        }
        space.insert(v)
    }

    fn basis_of(&self, key: &Key) -> Vec<Vec<u32>> {
        self.spaces[key].basis_vectors().map(|v| v.to_vec()).collect()
    }

    /// Least fixpoint of the closure rules.
    pub fn close(&mut self) -> Result<ClosureReport> {
        let nf = self.poset.nodes.len();
        let exprs: Vec<VarietyExpression> = self.exprs.values().cloned().collect();
        for l in 0..nf {
            for e in &exprs {
                let key = self.key(l, e);
                let ambient = e.basis_len();
                let space = if self.poset.nodes[l].split {
                    FpSubspace::full(self.field, ambient)
                } else {
                    FpSubspace::zero(self.field, ambient)
                };
                self.spaces.entry(key).or_insert(space);
            }
        }
        for (l, c) in self.generators.clone() {
            let key = self.key(l, c.expr());
            self.insert(&key, c.coeffs());
        }
        let mut rounds = 0;
        loop {
            rounds += 1;
            let mut grew = false;
            for l in 0..nf {
                for e in &exprs {
                    grew |= self.base_content(l, e)?;
                    grew |= self.graded(l, e)?;
                    grew |= self.products(l, e)?;
                    grew |= self.externals(l, e)?;
                    grew |= self.permutations(l, e)?;
                    grew |= self.diagonal_pullbacks(l, e)?;
                }
                for e1 in &exprs {
                    for e2 in &exprs {
                        grew |= self.compositions(l, e1, e2)?;
                    }
                }
            }
            grew |= self.monotone(&exprs);
            if !grew {
                break;
            }
        }
        self.closed = true;
        Ok(self.report(rounds))
    }

    fn report(&self, rounds: usize) -> ClosureReport {
        let spaces = self
            .spaces
            .iter()
            .map(|((l, names), s)| SpaceSummary {
                field: self.poset.nodes[*l].name.clone(),
                expr: names.join("×"),
                dim: s.dim(),
                ambient: s.ambient(),
            })
            .collect();
        ClosureReport { rounds, spaces }
    }

    fn base_content(&mut self, l: usize, e: &VarietyExpression) -> Result<bool> {
        let key = self.key(l, e);
        let mut grew = self.insert(&key, Cycle::fundamental(e).coeffs());
        let n = e.num_factors();
        if n == 2 && e.factors()[0].name() == e.factors()[1].name() {
            let d = crate::correspondence::diagonal(&e.slice(0..1), 0)?;
            grew |= self.insert(&key, d.coeffs().data());
        }
        Ok(grew)
    }

    fn graded(&mut self, l: usize, e: &VarietyExpression) -> Result<bool> {
        let key = self.key(l, e);
        let mut grew = false;
        for v in self.basis_of(&key) {
            let c = Cycle::from_coeffs(e, v)?;
            if c.homogeneous_dim().is_none() {
                for d in 0..=e.dim() {
                    grew |= self.insert(&key, c.component(d).coeffs());
                }
            }
        }
        Ok(grew)
    }

    fn products(&mut self, l: usize, e: &VarietyExpression) -> Result<bool> {
        let key = self.key(l, e);
        let basis = self.basis_of(&key);
        let mut grew = false;
        for (i, u) in basis.iter().enumerate() {
            for w in &basis[i..] {
                let c = Cycle::from_coeffs(e, u.clone())?.intersect(&Cycle::from_coeffs(e, w.clone())?)?;
                grew |= self.insert(&key, c.coeffs());
            }
        }
        Ok(grew)
    }

    /// External products of cycles on complementary factor subsets.
    fn externals(&mut self, l: usize, e: &VarietyExpression) -> Result<bool> {
        let n = e.num_factors();
        if n < 2 {
            return Ok(false);
        }
        let key = self.key(l, e);
        let names = e.factor_names();
        let mut grew = false;
        // Position 0 always goes to the first part.
        for mask in 1u32..(1 << n) - 1 {
            if mask & 1 == 0 {
                continue;
            }
            let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let t: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
            let es = self.exprs[&s.iter().map(|&i| names[i].clone()).collect::<Vec<_>>()].clone();
            let et = self.exprs[&t.iter().map(|&i| names[i].clone()).collect::<Vec<_>>()].clone();
            let order: Vec<usize> = s.iter().chain(&t).copied().collect();
            // Factor q of e is factor position(order == q) of es × et.
            let perm: Vec<usize> = (0..n).map(|q| order.iter().position(|&o| o == q).expect("partition")).collect();
            let bs = self.basis_of(&self.key(l, &es));
            let bt = self.basis_of(&self.key(l, &et));
            for u in &bs {
                for w in &bt {
                    let c = Cycle::from_coeffs(&es, u.clone())?.external(&Cycle::from_coeffs(&et, w.clone())?)?;
                    let c = permute_cycle(&c, &perm)?;
                    grew |= self.insert(&key, c.coeffs());
                }
            }
        }
        Ok(grew)
    }

    fn permutations(&mut self, l: usize, e: &VarietyExpression) -> Result<bool> {
        let n = e.num_factors();
        if n < 2 {
            return Ok(false);
        }
        let key = self.key(l, e);
        let names = e.factor_names();
        let mut grew = false;
        for perm in permutations(n) {
            let permuted: Vec<String> = perm.iter().map(|&k| names[k].clone()).collect();
            let Some(target) = self.exprs.get(&permuted).cloned() else { continue };
            let tkey = self.key(l, &target);
            for v in self.basis_of(&key) {
                let c = permute_cycle(&Cycle::from_coeffs(e, v)?, &perm)?;
                grew |= self.insert(&tkey, c.coeffs());
            }
        }
        Ok(grew)
    }

    fn diagonal_pullbacks(&mut self, l: usize, e: &VarietyExpression) -> Result<bool> {
        let n = e.num_factors();
        let key = self.key(l, e);
        let mut grew = false;
        for k in 1..=n / 2 {
            let x = e.slice(0..k);
            if e.slice(n - k..n) != x {
                continue;
            }
            let out_names: Vec<String> = e.factor_names()[..n - k].to_vec();
            let Some(out) = self.exprs.get(&out_names).cloned() else { continue };
            let okey = self.key(l, &out);
            for v in self.basis_of(&key) {
                let c = diag_pullback(&Cycle::from_coeffs(e, v)?, &x)?;
                grew |= self.insert(&okey, c.coeffs());
            }
        }
        Ok(grew)
    }

    /// `e1 = A×B`, `e2 = B×C` compose to a cycle on `A×C`.
    fn compositions(&mut self, l: usize, e1: &VarietyExpression, e2: &VarietyExpression) -> Result<bool> {
        let (n1, n2) = (e1.num_factors(), e2.num_factors());
        let names1 = e1.factor_names();
        let names2 = e2.factor_names();
        let mut grew = false;
        for b in 1..=n1.min(n2) {
            if names1[n1 - b..] != names2[..b] {
                continue;
            }
            let mut out_names = names1[..n1 - b].to_vec();
            out_names.extend_from_slice(&names2[b..]);
            if out_names.is_empty() {
                continue;
            }
            let Some(out) = self.exprs.get(&out_names).cloned() else { continue };
            let a = e1.slice(0..n1 - b);
            let mid = e1.slice(n1 - b..n1);
            let c = e2.slice(b..n2);
            let g = mid.gram();
            let okey = self.key(l, &out);
            let b1 = self.basis_of(&self.key(l, e1));
            let b2 = self.basis_of(&self.key(l, e2));
            let (la, lm, lc) = (a.basis_len(), mid.basis_len(), c.basis_len());
            let left: Vec<FpMatrix> = b1
                .iter()
                .map(|u| FpMatrix::from_data(self.field, la, lm, u.clone())?.mul(&g))
                .collect::<Result<_>>()?;
            for w in &b2 {
                let wm = FpMatrix::from_data(self.field, lm, lc, w.clone())?;
                for u in &left {
                    grew |= self.insert(&okey, u.mul(&wm)?.data());
                }
            }
        }
        Ok(grew)
    }

    fn monotone(&mut self, exprs: &[VarietyExpression]) -> bool {
        let nf = self.poset.nodes.len();
        let mut grew = false;
        for a in 0..nf {
            for b in 0..nf {
                if a == b || !self.poset.leq(a, b) {
                    continue;
                }
                for e in exprs {
                    let from = self.key(a, e);
                    let to = self.key(b, e);
                    for v in self.basis_of(&from) {
                        grew |= self.insert(&to, &v);
                    }
                }
            }
        }
        grew
    }

    fn require_closed(&self) -> Result<()> {
        if self.closed {
            Ok(())
        } else {
            Err(Error::Model("rationality model used before closing".into()))
        }
    }

    /// The `L`-rational cycles on `e`.
    pub fn space(&self, field: &str, e: &VarietyExpression) -> Result<FpSubspace> {
        self.require_closed()?;
        let l = self.poset.index(field)?;
        if e.is_point() {
            return Ok(FpSubspace::full(self.field, 1));
        }
        self.spaces.get(&self.key(l, e)).cloned().ok_or_else(|| Error::UnknownSpace {
            field: field.to_string(),
            expr: e.to_string(),
        })
    }

    pub fn is_rational(&self, field: &str, c: &Cycle) -> Result<bool> {
        Ok(self.space(field, c.expr())?.contains(c.coeffs()))
    }

    pub fn is_rational_corr(&self, field: &str, c: &Correspondence) -> Result<bool> {
        self.is_rational(field, &c.to_cycle())
    }

    /// `L(X)`-rational cycles on `X × Y`: the generic-fibre image of the
    /// `L`-rational cycles on `X × Y × X`.
    pub fn function_field_space(&self, field: &str, x: &VarietyExpression, y: &VarietyExpression) -> Result<FpSubspace> {
        let l = self.poset.index(field)?;
        let xy = x.concat(y)?;
        if self.poset.nodes[l].split {
            return Ok(FpSubspace::full(self.field, xy.basis_len()));
        }
        let xyx = xy.concat(x)?;
        let s = self.space(field, &xyx)?;
        let mut out = FpSubspace::zero(self.field, xy.basis_len());
        for v in s.basis_vectors() {
            out.insert(generic_fiber(&Cycle::from_coeffs(&xyx, v.to_vec())?, x)?.coeffs());
        }
        Ok(out)
    }

    /// Every `E(X)`-rational cycle on `X × Y` is `F(X)`-rational.
    pub fn check_hypothesis1(
        &self,
        e: &str,
        f: &str,
        x: &VarietyExpression,
        y: &VarietyExpression,
    ) -> Result<Hypothesis1Report> {
        let big = self.function_field_space(e, x, y)?;
        let small = self.function_field_space(f, x, y)?;
        let xy = x.concat(y)?;
        let witnesses = small
            .complement_in(&small.sum(&big)?)?
            .into_iter()
            .map(|v| Cycle::from_coeffs(&xy, v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Hypothesis1Report { holds: witnesses.is_empty(), witnesses })
    }

    /// Restriction from `L` to `L' ≥ L` is an inclusion of subspaces of the
    /// split Chow group, so its kernel is zero.
    pub fn restriction_kernel_check(&self, from: &str, to: &str, e: &VarietyExpression) -> Result<RestrictionReport> {
        let (a, b) = (self.poset.index(from)?, self.poset.index(to)?);
        if !self.poset.leq(a, b) {
            return Err(Error::Poset(format!("`{from}` is not below `{to}`")));
        }
        let s = self.space(from, e)?;
        let t = self.space(to, e)?;
        if !t.contains_subspace(&s)? {
            return Err(Error::Verification(format!("{from}-rational cycles on {e} are not {to}-rational")));
        }
        // Restriction is the identity on representatives in Ch(X̄).
        let kernel_dim = s.dim() - s.intersection(&t)?.dim();
        Ok(RestrictionReport {
            from: from.to_string(),
            to: to.to_string(),
            expr: e.to_string(),
            kernel_dim,
            note: "nilpotence principle holds trivially (faithful model): restriction is injective".into(),
        })
    }

    /// Dimensions of all closed spaces.
    pub fn summary(&self) -> Vec<SpaceSummary> {
        self.report(0).spaces
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::{compose, transpose};
    use crate::zoo;

    fn conic_model() -> RationalityModel {
        let f = Fp::new(2).unwrap();
        let poset = FieldPoset::chain(&["F", "E"]).unwrap();
        let mut m = RationalityModel::new(f, poset, vec![zoo::conic(f)]).unwrap();
        let cc = m.expr(&["C", "C"]).unwrap();
        let delta = Cycle::from_terms(&cc, &[(1, "e0×e1"), (1, "e1×e0")]).unwrap();
        m.add_generator("F", delta).unwrap();
        m.close().unwrap();
        m
    }

    #[test]
    fn poset_validation() {
        let nodes = |names: &[&str]| {
            names.iter().map(|s| FieldNode { name: s.to_string(), split: false }).collect::<Vec<_>>()
        };
        let r = |a: &str, b: &str| (a.to_string(), b.to_string());
        assert!(FieldPoset::new(nodes(&["F", "K", "E"]), &[r("F", "K"), r("K", "E")]).is_ok());
        assert!(matches!(
            FieldPoset::new(nodes(&["F", "K"]), &[r("F", "K"), r("K", "F")]),
            Err(Error::Poset(_))
        ));
        assert!(matches!(FieldPoset::new(nodes(&["F", "K"]), &[]), Err(Error::Poset(_))));
        let p = FieldPoset::new(nodes(&["F", "K", "E"]), &[r("F", "K"), r("K", "E")]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.minimum(), "F");
    }

    #[test]
    fn conic_closure() {
        let m = conic_model();
        let cc = m.expr(&["C", "C"]).unwrap();
        let s = m.space("F", &cc).unwrap();
        assert_eq!(s.dim(), 2);
        let pt = Cycle::from_terms(&cc, &[(1, "e0×e0")]).unwrap();
        assert!(!m.is_rational("F", &pt).unwrap());
        assert!(m.is_rational("E", &pt).unwrap());
        let delta = Cycle::from_terms(&cc, &[(1, "e0×e1"), (1, "e1×e0")]).unwrap();
        assert!(m.is_rational("F", &delta).unwrap());
        let c = m.expr(&["C"]).unwrap();
        assert_eq!(m.space("F", &c).unwrap().dim(), 1);
        // Closing again changes nothing.
        let before = m.summary();
        let mut again = m.clone();
        again.close().unwrap();
        assert_eq!(again.summary(), before);
    }

    #[test]
    fn closed_spaces_are_stable_under_the_calculus() {
        let m = conic_model();
        let cc = m.expr(&["C", "C"]).unwrap();
        let s = m.space("F", &cc).unwrap();
        let corrs: Vec<Correspondence> = s
            .basis_vectors()
            .map(|v| Correspondence::from_homogeneous_cycle(&Cycle::from_coeffs(&cc, v.to_vec()).unwrap(), 1, 0).unwrap())
            .collect();
        for a in &corrs {
            assert!(m.is_rational_corr("F", &transpose(a)).unwrap());
            for b in &corrs {
                let b = b.with_twists(a.target_twist(), a.target_twist() - b.degree()).unwrap();
                assert!(m.is_rational_corr("F", &compose(&b, a).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn restriction_is_injective() {
        let m = conic_model();
        let cc = m.expr(&["C", "C"]).unwrap();
        let r = m.restriction_kernel_check("F", "E", &cc).unwrap();
        assert_eq!(r.kernel_dim, 0);
        assert!(r.note.contains("nilpotence principle"));
    }

    #[test]
    fn hypothesis_one_trivial_cases() {
        let mut m = conic_model();
        let c = m.expr(&["C"]).unwrap();
        let ccc = m.expr(&["C", "C", "C"]).unwrap();
        m.track(&ccc).unwrap();
        m.close().unwrap();
        assert!(m.check_hypothesis1("F", "F", &c, &c).unwrap().holds);
        let split = m.function_field_space("E", &c, &c).unwrap();
        assert!(split.is_full());
    }
}
