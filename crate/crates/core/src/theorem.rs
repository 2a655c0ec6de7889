//! The lifting lemma and the outer-summand theorem, executed step by step.
//!
//! Every intermediate claim is re-checked and written to a [`Transcript`];
//! nothing leaves this module unverified.

use serde::Serialize;

use crate::chow::{Cycle, VarietyExpression};
use crate::correspondence::{compose, diag_pullback, generic_fiber, transpose, Correspondence};
use crate::decompose::krull_schmidt;
use crate::error::{Error, Result};
use crate::ff::FpMatrix;
use crate::motive::{is_projector, summand_embedding_witness, MotiveSummand, Witness, WitnessSearch};
use crate::rationality::RationalityModel;
use crate::report::Transcript;

/// Input of the lifting lemma. `h : N_E ⇝ M_E` and `k : M_E ⇝ N_E` must be
/// morphisms of summands (`h = ρ∘h∘π`, `k = π∘k∘ρ`) with `k∘h` a lower
/// summand of `N`. Only `k∘h` is required to be idempotent.
#[derive(Debug, Clone)]
pub struct LemmaInstance {
    pub n: MotiveSummand,
    pub m: MotiveSummand,
    /// The field over which `h` and `k` are rational.
    pub e: String,
    /// The base field; `π` and `ρ` are rational over it.
    pub f: String,
    pub h: Correspondence,
    pub k: Correspondence,
}

#[derive(Debug, Clone)]
pub struct LemmaOutput {
    pub h1: Cycle,
    pub h2: Correspondence,
    pub h3: Correspondence,
    pub f: Correspondence,
    pub g: Correspondence,
    pub p: Correspondence,
    /// Tail length and period of the powers of `π∘k∘h₃∘π`.
    pub tail: u64,
    pub period: u64,
    pub n1: u64,
    pub transcript: Transcript,
}

#[derive(Debug, Clone)]
pub struct TheoremCertificate {
    pub theta: Correspondence,
    pub r: Correspondence,
    pub s: Correspondence,
    pub e: Correspondence,
    /// Output of the second lemma application; `θ = ᵗf ∘ ᵗg` up to the twist.
    pub f: Correspondence,
    pub g: Correspondence,
    pub first: LemmaOutput,
    pub second: LemmaOutput,
    pub transcript: Transcript,
}

/// Printable form of a correspondence for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceView {
    pub source: String,
    pub target: String,
    pub source_twist: i64,
    pub target_twist: i64,
    pub cycle: String,
}

impl From<&Correspondence> for CorrespondenceView {
    fn from(c: &Correspondence) -> Self {
        CorrespondenceView {
            source: c.source().to_string(),
            target: c.target().to_string(),
            source_twist: c.source_twist(),
            target_twist: c.target_twist(),
            cycle: terms(c),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaView {
    pub h1: String,
    pub h2: CorrespondenceView,
    pub h3: CorrespondenceView,
    pub f: CorrespondenceView,
    pub g: CorrespondenceView,
    pub p: CorrespondenceView,
    pub tail: u64,
    pub period: u64,
    pub n1: u64,
    pub transcript: Transcript,
}

impl From<&LemmaOutput> for LemmaView {
    fn from(o: &LemmaOutput) -> Self {
        LemmaView {
            h1: o.h1.display_terms(),
            h2: (&o.h2).into(),
            h3: (&o.h3).into(),
            f: (&o.f).into(),
            g: (&o.g).into(),
            p: (&o.p).into(),
            tail: o.tail,
            period: o.period,
            n1: o.n1,
            transcript: o.transcript.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateView {
    pub theta: CorrespondenceView,
    pub r: CorrespondenceView,
    pub s: CorrespondenceView,
    pub e: CorrespondenceView,
    pub first: LemmaView,
    pub second: LemmaView,
    pub transcript: Transcript,
}

impl From<&TheoremCertificate> for CertificateView {
    fn from(c: &TheoremCertificate) -> Self {
        CertificateView {
            theta: (&c.theta).into(),
            r: (&c.r).into(),
            s: (&c.s).into(),
            e: (&c.e).into(),
            first: (&c.first).into(),
            second: (&c.second).into(),
            transcript: c.transcript.clone(),
        }
    }
}

fn terms(c: &Correspondence) -> String {
    c.to_cycle().display_terms()
}

fn c3(a: &Correspondence, b: &Correspondence, c: &Correspondence) -> Result<Correspondence> {
    compose(a, &compose(b, c)?)
}

/// Registers everything the lemma and the theorem read from the model.
pub fn prepare_model(model: &mut RationalityModel, x: &VarietyExpression, y: &VarietyExpression) -> Result<()> {
    model.track(&x.concat(y)?.concat(x)?)?;
    model.track(&y.concat(y)?)?;
    if !model.is_closed() {
        model.close()?;
    }
    Ok(())
}

fn require(cond: bool, err: impl FnOnce() -> Error) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(err())
    }
}

fn check_shapes(inst: &LemmaInstance) -> Result<()> {
    let (n, m) = (&inst.n, &inst.m);
    let ok_h = inst.h.source() == n.expr()
        && inst.h.target() == m.expr()
        && inst.h.source_twist() == n.twist()
        && inst.h.target_twist() == m.twist();
    let ok_k = inst.k.source() == m.expr()
        && inst.k.target() == n.expr()
        && inst.k.source_twist() == m.twist()
        && inst.k.target_twist() == n.twist();
    require(ok_h, || Error::Shape(format!("h is not a correspondence {n:?} ⇝ {m:?}")))?;
    require(ok_k, || Error::Shape(format!("k is not a correspondence {m:?} ⇝ {n:?}")))
}

fn validate(model: &RationalityModel, inst: &LemmaInstance, t: &mut Transcript) -> Result<()> {
    check_shapes(inst)?;
    let (e, f) = (inst.e.as_str(), inst.f.as_str());
    let poset = model.poset();
    require(poset.leq(poset.index(f)?, poset.index(e)?), || {
        Error::Hypothesis(format!("`{f}` is not below `{e}`"))
    })?;
    let pi = inst.n.projector();
    let rho = inst.m.projector();
    require(model.is_rational_corr(f, pi)?, || Error::Hypothesis(format!("π is not {f}-rational")))?;
    require(model.is_rational_corr(f, rho)?, || Error::Hypothesis(format!("ρ is not {f}-rational")))?;
    require(model.is_rational_corr(e, &inst.h)?, || Error::Hypothesis(format!("h is not {e}-rational")))?;
    require(model.is_rational_corr(e, &inst.k)?, || Error::Hypothesis(format!("k is not {e}-rational")))?;
    require(c3(rho, &inst.h, pi)? == inst.h, || Error::Hypothesis("h is not a morphism N ⇝ M".into()))?;
    require(c3(pi, &inst.k, rho)? == inst.k, || Error::Hypothesis("k is not a morphism M ⇝ N".into()))?;
    let kh = compose(&inst.k, &inst.h)?;
    require(is_projector(&kh)?, || Error::Hypothesis("k∘h is not a projector".into()))?;
    let o = MotiveSummand::new(kh.clone(), inst.n.twist())?;
    require(o.is_summand_of(&inst.n)?, || Error::NotSummand("(X, k∘h) is not a summand of N".into()))?;
    t.step("k∘h", terms(&kh));
    if kh.is_zero() {
        t.note("k∘h = 0; the powering step decides");
    } else {
        let c = o.classify_in(&inst.n)?;
        require(c.lower, || Error::LowerNess(format!("(X, k∘h) has top {} below the top of N", o.profile().map(|p| p.top).unwrap_or(0))))?;
        t.check("(X, k∘h) lower in N", true, "");
    }
    let x = inst.n.expr();
    let y = inst.m.expr();
    let h1 = model.check_hypothesis1(e, f, x, y)?;
    if !h1.holds {
        let w = h1.witnesses[0].display_terms();
        return Err(Error::Hypothesis1(format!("{e}({x})-rational cycle {w} on {x}×{y} is not {f}({x})-rational")));
    }
    t.check("hypothesis 1", true, format!("{e}({x})-rational cycles on {x}×{y} are {f}({x})-rational"));
    Ok(())
}

/// Lifts `h` to an `F`-rational cycle on `X × Y × X` with generic fibre `h`,
/// keeping only the component of the expected dimension.
fn lift(model: &RationalityModel, inst: &LemmaInstance) -> Result<Cycle> {
    let x = inst.n.expr();
    let y = inst.m.expr();
    let xyx = x.concat(y)?.concat(x)?;
    let space = model.space(&inst.f, &xyx)?;
    let target = inst.h.to_cycle();
    let field = model.field();
    let basis: Vec<&[u32]> = space.basis_vectors().collect();
    let no_lift = || Error::Hypothesis1(format!("{} has no {}-rational lift to {xyx}", target.display_terms(), inst.f));
    if basis.is_empty() {
        return if target.is_zero() { Ok(Cycle::zero(&xyx)) } else { Err(no_lift()) };
    }
    let rows = target.coeffs().len();
    let mut a = FpMatrix::zeros(field, rows, basis.len());
    for (j, v) in basis.iter().enumerate() {
        let fib = generic_fiber(&Cycle::from_coeffs(&xyx, v.to_vec())?, x)?;
        for (i, &c) in fib.coeffs().iter().enumerate() {
            a.set(i, j, c);
        }
    }
    let sol = a.solve(&FpMatrix::column_vector(field, target.coeffs()))?.ok_or_else(no_lift)?;
    let mut coeffs = vec![0u32; xyx.basis_len()];
    for (j, v) in basis.iter().enumerate() {
        let c = sol.particular.get(j, 0);
        for (acc, &x) in coeffs.iter_mut().zip(v.iter()) {
            *acc = field.add(*acc, field.mul(c, x));
        }
    }
    let h1 = Cycle::from_coeffs(&xyx, coeffs)?;
    let d = inst.h.cycle_dim() + x.dim() as i64;
    Ok(if d < 0 { Cycle::zero(&xyx) } else { h1.component(d as usize) })
}

/// Runs the lifting lemma. On success `P = g∘f` is an `F`-rational summand
/// of `N` with the same top as `(X, k∘h)`.
pub fn lemma3_construct(model: &RationalityModel, inst: &LemmaInstance, cfg: WitnessSearch) -> Result<LemmaOutput> {
    let mut t = Transcript::new();
    validate(model, inst, &mut t)?;
    let (ef, ff) = (inst.e.as_str(), inst.f.as_str());
    let x = inst.n.expr();
    let (a, b) = (inst.n.twist(), inst.m.twist());
    let dx = x.dim() as i64;
    let pi = inst.n.projector();
    let rho = inst.m.projector();

    let h1 = lift(model, inst)?;
    t.step("h₁", h1.display_terms());
    let fib = generic_fiber(&h1, x)?;
    if !t.check("ε*(h₁) = h", fib == inst.h.to_cycle(), fib.display_terms()) {
        return Err(Error::Verification("ε*(h₁) = h".into()));
    }
    if !t.check("h₁ F-rational", model.is_rational(ff, &h1)?, "") {
        return Err(Error::Verification("h₁ F-rational".into()));
    }

    let h1c = Correspondence::from_cycle(&h1, x.num_factors(), a, b - dx)?;
    let h2 = compose(&h1c, pi)?;
    t.step("h₂ = h₁∘π", terms(&h2));
    let h3c = diag_pullback(&h2.to_cycle(), x)?;
    let h3 = Correspondence::from_cycle(&h3c, x.num_factors(), a, b)?;
    t.step("h₃ = Δ*(h₂)", terms(&h3));
    let h_pi = compose(&inst.h, pi)?;
    if h3 != h_pi {
        t.note(format!("h₃ differs from h∘π = {}", terms(&h_pi)));
    }
    let f = c3(rho, &h3, pi)?;
    t.step("f = h₃∘π", terms(&f));

    let core = c3(pi, &inst.k, &compose(&h3, pi)?)?;
    t.step("π∘k∘h₃∘π", terms(&core));
    let endo = |v: &Vec<u32>| {
        let m = FpMatrix::from_data(core.field(), core.coeffs().rows(), core.coeffs().cols(), v.clone())?;
        Correspondence::new(x.clone(), x.clone(), a, a, m)
    };
    let power = crate::algebra::idempotent_power(&core.coeffs().data().to_vec(), |u, v| {
        let uv = compose(&endo(u).expect("same shape"), &endo(v).expect("same shape")).expect("endomorphisms compose");
        uv.coeffs().data().to_vec()
    });
    let power = crate::algebra::PowerCycle { m: power.m, r: power.r, n: power.n, e: endo(&power.e)? };
    t.step("powers", format!("tail {}, period {}, n₁ = {}", power.m, power.r, power.n));
    t.note("restriction is injective in this model, so the split-level and E-level powering exponents coincide");
    if power.e.is_zero() {
        return Err(Error::LowerNess(format!(
            "P₀ = (π∘k∘h₃∘π)^{} = 0, so (X, k∘h) contributes no lower summand",
            power.n
        )));
    }
    let pk = compose(pi, &inst.k)?;
    // The zeroth power of an endomorphism of N is π.
    let g = if power.n == 1 { pk } else { compose(&core.power(power.n - 1)?, &pk)? };
    t.step("g", terms(&g));
    let p = compose(&g, &f)?;
    t.step("P = g∘f", terms(&p));

    let mut checks: Vec<(&str, bool, String)> = vec![
        ("P = (π∘k∘h₃∘π)^n₁", p == power.e, String::new()),
        ("P projector", is_projector(&p)?, String::new()),
        ("π∘P∘π = P", c3(pi, &p, pi)? == p, String::new()),
        ("f F-rational", model.is_rational_corr(ff, &f)?, String::new()),
        ("g E-rational", model.is_rational_corr(ef, &g)?, String::new()),
    ];
    let pm = MotiveSummand::new(p.clone(), a)?;
    checks.push(("(X, P) summand of N", pm.is_summand_of(&inst.n)?, String::new()));
    let kh = MotiveSummand::new(compose(&inst.k, &inst.h)?, a)?;
    let (tp, tkh) = (pm.profile()?.top, kh.profile()?.top);
    checks.push(("t(X, P) = t(X, k∘h)", tp == tkh, format!("{tp} vs {tkh}")));
    if model.is_rational_corr(ff, &inst.k)? {
        checks.push(("g F-rational", model.is_rational_corr(ff, &g)?, "k is F-rational".into()));
    }
    for (name, ok, detail) in checks {
        if !t.check(name, ok, detail) {
            return Err(Error::Verification(name.into()));
        }
    }
    embeddings(model, inst, &kh, &pm, cfg, &mut t)?;
    Ok(LemmaOutput {
        h1,
        h2,
        h3,
        f,
        g,
        p,
        tail: power.m,
        period: power.r,
        n1: power.n,
        transcript: t,
    })
}

/// Each lower indecomposable factor of `(X, k∘h)` over `E` should embed into
/// `(X, P)`. Runs only when the witness search can be exhaustive.
fn embeddings(
    model: &RationalityModel,
    inst: &LemmaInstance,
    kh: &MotiveSummand,
    pm: &MotiveSummand,
    cfg: WitnessSearch,
    t: &mut Transcript,
) -> Result<()> {
    let x = inst.n.expr();
    let space = model.space(&inst.e, &x.concat(x)?)?;
    let top = inst.n.profile()?.top;
    let ks = krull_schmidt(kh, &space, cfg.seed)?;
    for (i, o) in ks.summands.iter().enumerate() {
        if o.profile()?.top != top {
            continue;
        }
        let search = WitnessSearch { samples: 0, ..cfg };
        match summand_embedding_witness(o, pm, search)? {
            Witness::Found { .. } => {
                t.check(format!("lower factor {i} embeds into (X, P)"), true, "");
            }
            Witness::ProvablyNone { candidates } => {
                t.check(format!("lower factor {i} embeds into (X, P)"), false, format!("none among {candidates}"));
                return Err(Error::Verification(format!("lower factor {i} embeds into (X, P)")));
            }
            Witness::NotFound { .. } => t.note(format!("lower factor {i}: Hom too large to enumerate")),
        }
    }
    Ok(())
}

/// The outer-summand theorem: given an outer indecomposable `O = (X, κ)` of
/// `N_E` with `k∘h = κ` through `M_E`, produce an `F`-rational outer summand
/// `(X, θ)` of `N` that is also a summand of `M`.
#[allow(clippy::too_many_arguments)]
pub fn main_theorem(
    model: &RationalityModel,
    n: &MotiveSummand,
    m: &MotiveSummand,
    e: &str,
    f: &str,
    o: &MotiveSummand,
    h: &Correspondence,
    k: &Correspondence,
    cfg: WitnessSearch,
) -> Result<TheoremCertificate> {
    let mut t = Transcript::new();
    let x = n.expr();
    require(o.expr() == x && o.twist() == n.twist(), || Error::Shape("O does not live on N's variety".into()))?;
    let kh = compose(k, h)?;
    require(kh == *o.projector(), || Error::Hypothesis("k∘h differs from the projector of O".into()))?;
    let ks = krull_schmidt(o, &model.space(e, &x.concat(x)?)?, cfg.seed)?;
    require(ks.summands.len() == 1, || Error::Hypothesis(format!("O not indecomposable over {e}")))?;
    t.check("O indecomposable", true, format!("End has dimension {}", ks.end_dim));
    require(o.classify_in(n)?.outer, || Error::Hypothesis("O not outer in N".into()))?;
    t.check("O outer in N", true, "");

    let inst = LemmaInstance { n: n.clone(), m: m.clone(), e: e.into(), f: f.into(), h: h.clone(), k: k.clone() };
    let first = lemma3_construct(model, &inst, cfg)?;
    let o2 = MotiveSummand::new(first.p.clone(), n.twist())?;
    let outer = o2.classify_in(n)?.outer;
    if !t.check("O₂ outer in N", outer, "") {
        return Err(Error::Verification("O₂ outer in N".into()));
    }

    let dx = x.dim() as i64;
    let o2d = o2.dual();
    let (p2, pd) = (o2.profile()?, o2d.profile()?);
    let dag = pd.bottom == -p2.top && pd.top == -p2.bottom;
    if !t.check("b(O₂†) = −t(O₂), t(O₂†) = −b(O₂)", dag, format!("[{}, {}]", pd.bottom, pd.top)) {
        return Err(Error::Verification("dual profile".into()));
    }
    let nd = n.dual().shifted(dx);
    let md = m.dual().shifted(dx);
    let inst2 = LemmaInstance {
        n: nd,
        m: md,
        e: e.into(),
        f: f.into(),
        h: transpose(&first.g).shift_twist(dx),
        k: transpose(&first.f).shift_twist(dx),
    };
    let second = lemma3_construct(model, &inst2, cfg)?;

    let s = transpose(&second.f).shift_twist(dx);
    let r = transpose(&second.g).shift_twist(dx);
    let theta = compose(&s, &r)?;
    let idem = c3(&r, &theta, &s)?;
    t.step("θ = ᵗf∘ᵗg", terms(&theta));
    t.step("r", terms(&r));
    t.step("s", terms(&s));
    t.step("e = r∘θ∘s", terms(&idem));
    let mut cert = TheoremCertificate {
        theta,
        r,
        s,
        e: idem,
        f: second.f.clone(),
        g: second.g.clone(),
        first,
        second,
        transcript: Transcript::new(),
    };
    let v = verify_certificate(&cert, n, m, model, f)?;
    let failures: Vec<String> = v.failures().into_iter().map(String::from).collect();
    t.extend("", v);
    cert.transcript = t;
    if let Some(first_failure) = failures.first() {
        return Err(Error::Verification(first_failure.clone()));
    }
    Ok(cert)
}

/// Re-checks the conclusions of the theorem. Failed assertions are recorded
/// by name; errors are returned only for malformed input.
pub fn verify_certificate(
    c: &TheoremCertificate,
    n: &MotiveSummand,
    m: &MotiveSummand,
    model: &RationalityModel,
    f: &str,
) -> Result<Transcript> {
    let mut t = Transcript::new();
    let theta = &c.theta;
    let tw = n.twist();
    let mut check = |name: &str, r: Result<bool>| match r {
        Ok(ok) => t.check(name, ok, ""),
        Err(err) => t.check(name, false, err.to_string()),
    };
    check("θ∘θ = θ", compose(theta, theta).map(|x| x == *theta));
    check("θ F-rational", model.is_rational_corr(f, theta));
    let summand = MotiveSummand::new(theta.clone(), tw);
    check("(X, θ) summand of N", summand.clone().and_then(|s| s.is_summand_of(n)));
    check("outer", summand.clone().and_then(|s| Ok(s.classify_in(n)?.outer)));
    check("s∘r = θ", compose(&c.s, &c.r).map(|x| x == *theta));
    check("r F-rational", model.is_rational_corr(f, &c.r));
    check("s F-rational", model.is_rational_corr(f, &c.s));
    let idem = c3(&c.r, theta, &c.s);
    check("e = r∘θ∘s", idem.as_ref().map(|x| x == &c.e).map_err(Clone::clone));
    check("e∘e = e", compose(&c.e, &c.e).map(|x| x == c.e));
    check("e F-rational", model.is_rational_corr(f, &c.e));
    check("(Y, e) summand of M", MotiveSummand::new(c.e.clone(), m.twist()).and_then(|s| s.is_summand_of(m)));
    // u = r∘θ : (X, θ) → (Y, e) and v = θ∘s back.
    let u = compose(&c.r, theta);
    let v = compose(theta, &c.s);
    check("v∘u = θ", u.clone().and_then(|u| v.clone().and_then(|v| compose(&v, &u))).map(|x| x == *theta));
    check("u∘v = e", u.and_then(|u| v.and_then(|v| compose(&u, &v))).map(|x| x == c.e));
    Ok(t)
}
