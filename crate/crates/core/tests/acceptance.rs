//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one verdict line, including on success.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use motkit_core::chow::{Cycle, SplitChowStructure, VarietyExpression};
use motkit_core::correspondence::{act_on_cycle, compose, diagonal, transpose, Correspondence};
use motkit_core::decompose::krull_schmidt;
use motkit_core::ff::Fp;
use motkit_core::model;
use motkit_core::motive::{is_projector, summand_isomorphism_witness, MotiveSummand, WitnessSearch};
use motkit_core::run::{execute, Status};
use motkit_core::sampling::{random_correspondence, random_projector_pair};
use motkit_core::theorem::{lemma3_construct, main_theorem, prepare_model, verify_certificate, LemmaInstance};
use motkit_core::zoo;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

const PRIMES: [u64; 3] = [2, 3, 5];

fn gf(p: u64) -> Fp {
    Fp::new(p).unwrap()
}

fn ex(f: Fp, s: &[SplitChowStructure]) -> VarietyExpression {
    VarietyExpression::new(f, s.iter().cloned().map(Arc::new).collect()).unwrap()
}

fn search() -> WitnessSearch {
    WitnessSearch::default()
}

/// Expressions the random criteria draw from.
fn zoo_expressions(f: Fp) -> Vec<VarietyExpression> {
    let p1 = zoo::projective_space(f, 1);
    vec![
        VarietyExpression::point(f),
        ex(f, &[p1.clone()]),
        ex(f, &[zoo::projective_space(f, 2)]),
        ex(f, &[zoo::conic(f)]),
        ex(f, &[zoo::split_quadric_odd(f, 3).unwrap()]),
        ex(f, &[p1.clone(), p1]),
    ]
}

/// The unique `k` with `m ≅ 𝔽[k]`, searched in a window around the twist.
fn tate_index(m: &MotiveSummand) -> Result<Option<i64>, String> {
    let d = m.expr().dim() as i64;
    let mut found = None;
    for k in (m.twist() - d)..=(m.twist() + 2 * d) {
        let pt = ok(MotiveSummand::whole(&VarietyExpression::point(m.expr().field()), k))?;
        if ok(summand_isomorphism_witness(m, &pt, search()))?.is_found() {
            ensure!(found.is_none(), "{m:?} isomorphic to two Tate motives");
            found = Some(k);
        }
    }
    Ok(found)
}

// 1. x_i × y composed after y' × x*_j is δ_ij · y' × y.
fn formula_one() -> Outcome {
    let mut checked = 0;
    for p in PRIMES {
        let f = gf(p);
        let p1 = zoo::projective_space(f, 1);
        let xs = [
            ex(f, &[zoo::projective_space(f, 2)]),
            ex(f, &[p1.clone(), p1.clone()]),
            ex(f, &[zoo::split_quadric_odd(f, 3).unwrap()]),
        ];
        let ys = [VarietyExpression::point(f), ex(f, &[p1.clone()])];
        for x in &xs {
            let d = ok(x.ante_dual())?;
            let nx = x.basis_len();
            for y in &ys {
                for y2 in &ys {
                    let (ny, ny2) = (y.basis_len(), y2.basis_len());
                    let xy = ok(x.concat(y))?;
                    let y2x = ok(y2.concat(x))?;
                    for i in 0..nx {
                        for j in 0..nx {
                            for b in 0..ny {
                                for b2 in 0..ny2 {
                                    let mut outer = vec![0; nx * ny];
                                    outer[i * ny + b] = 1;
                                    let mut inner = vec![0; ny2 * nx];
                                    for a in 0..nx {
                                        inner[b2 * nx + a] = d.get(a, j);
                                    }
                                    let inner = ok(Correspondence::from_homogeneous_cycle(
                                        &ok(Cycle::from_coeffs(&y2x, inner))?,
                                        y2.num_factors(),
                                        0,
                                    ))?;
                                    let outer = ok(Correspondence::from_homogeneous_cycle(
                                        &ok(Cycle::from_coeffs(&xy, outer))?,
                                        x.num_factors(),
                                        inner.target_twist(),
                                    ))?;
                                    let c = ok(compose(&outer, &inner))?;
                                    ensure!(c.source() == y2 && c.target() == y, "wrong shape");
                                    for r in 0..ny2 {
                                        for s in 0..ny {
                                            let want = u32::from(i == j && r == b2 && s == b);
                                            ensure!(
                                                c.coeffs().get(r, s) == want,
                                                "p={p} X={x} i={i} j={j} y={b} y'={b2}"
                                            );
                                        }
                                    }
                                    checked += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{checked} compositions"))
}

// 2. Associativity, identities, transpose anti-homomorphism and involution.
fn category_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut sampled, mut nonzero) = (0, 0);
    for p in PRIMES {
        let f = gf(p);
        let exprs = zoo_expressions(f);
        for _ in 0..400 {
            let pick = |rng: &mut ChaCha8Rng| exprs[rng.gen_range(0..exprs.len())].clone();
            let (a, b, c, d) = (pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let tw: Vec<i64> = (0..4).map(|_| rng.gen_range(-2..=2)).collect();
            let alpha = random_correspondence(&a, &b, tw[0], tw[1], &mut rng);
            let beta = random_correspondence(&b, &c, tw[1], tw[2], &mut rng);
            let gamma = random_correspondence(&c, &d, tw[2], tw[3], &mut rng);
            sampled += 3;
            nonzero += [&alpha, &beta, &gamma].iter().filter(|x| !x.is_zero()).count();
            let left = ok(compose(&gamma, &ok(compose(&beta, &alpha))?))?;
            let right = ok(compose(&ok(compose(&gamma, &beta))?, &alpha))?;
            ensure!(left == right, "associativity fails on {a} → {b} → {c} → {d}");
            let da = ok(diagonal(&a, tw[0]))?;
            let db = ok(diagonal(&b, tw[1]))?;
            ensure!(ok(compose(&alpha, &da))? == alpha, "right identity on {a}");
            ensure!(ok(compose(&db, &alpha))? == alpha, "left identity on {b}");
            let t = transpose(&ok(compose(&beta, &alpha))?);
            ensure!(t == ok(compose(&transpose(&alpha), &transpose(&beta)))?, "transpose of a composite");
            ensure!(transpose(&transpose(&alpha)) == alpha, "transpose involution");
        }
    }
    ensure!(nonzero >= 1000, "only {nonzero} nonzero samples");
    Ok(format!("{sampled} correspondences, {nonzero} nonzero"))
}

// 3. Ψ(x_i, x*_j) = δ_ij, with Ψ evaluated factor by factor from the raw
// product tables and degree functionals.
fn ante_dual() -> Outcome {
    let mut exprs_checked = 0;
    let mut pairs = 0u64;
    for p in PRIMES {
        let f = gf(p);
        let mut structures = vec![zoo::point(f), zoo::conic(f)];
        for n in 1..=3 {
            structures.push(zoo::projective_space(f, n));
        }
        for d in [1, 3, 5] {
            structures.push(zoo::split_quadric_odd(f, d).unwrap());
        }
        let tables: Vec<Vec<Vec<u32>>> = structures
            .iter()
            .map(|s| {
                let deg = s.degree_functional();
                (0..s.len())
                    .map(|a| {
                        (0..s.len())
                            .map(|b| s.product_terms(a, b).iter().fold(0, |acc, &(c, w)| f.add(acc, f.mul(w, deg[c]))))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        // Multisets of up to four factors.
        let mut combos: Vec<Vec<usize>> = (0..structures.len()).map(|i| vec![i]).collect();
        let mut frontier = combos.clone();
        for _ in 1..4 {
            let mut next = Vec::new();
            for c in &frontier {
                for i in *c.last().unwrap()..structures.len() {
                    let mut c2 = c.clone();
                    c2.push(i);
                    next.push(c2);
                }
            }
            combos.extend(next.iter().cloned());
            frontier = next;
        }
        for combo in &combos {
            let e = ex(f, &combo.iter().map(|&i| structures[i].clone()).collect::<Vec<_>>());
            let n = e.basis_len();
            let d = ok(e.ante_dual())?;
            let tuples: Vec<Vec<usize>> = (0..n).map(|i| e.tuple_of(i)).collect();
            let psi = |a: usize, b: usize| {
                combo.iter().enumerate().fold(1 % f.p(), |acc, (k, &s)| f.mul(acc, tables[s][tuples[a][k]][tuples[b][k]]))
            };
            for j in 0..n {
                let col: Vec<(usize, u32)> = (0..n).map(|b| (b, d.get(b, j))).filter(|&(_, v)| v != 0).collect();
                for i in 0..n {
                    let v = col.iter().fold(0, |acc, &(b, w)| f.add(acc, f.mul(w, psi(i, b))));
                    ensure!(v == u32::from(i == j), "p={p} {e}: Ψ(x_{i}, x*_{j}) = {v}");
                    pairs += 1;
                }
            }
            exprs_checked += 1;
        }
    }
    Ok(format!("{exprs_checked} expressions, {pairs} pairs"))
}

// 4. Duality negates and swaps bottom and top, and swaps upper and lower.
fn lemma_dag() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0;
    let mut flips = 0;
    while checked < 240 {
        let f = gf(PRIMES[rng.gen_range(0..3)]);
        let exprs = zoo_expressions(f);
        let e = &exprs[rng.gen_range(1..exprs.len())];
        let twist = rng.gen_range(-2..=2);
        let (outer, inner) = ok(random_projector_pair(e, twist, &mut rng))?;
        if inner.is_zero() {
            continue;
        }
        let n = ok(MotiveSummand::new(outer, twist))?;
        let m = ok(MotiveSummand::new(inner, twist))?;
        let (nd, md) = (n.dual(), m.dual());
        for (a, b) in [(&m, &md), (&n, &nd)] {
            let (pa, pb) = (ok(a.profile())?, ok(b.profile())?);
            ensure!(pb.bottom == -pa.top && pb.top == -pa.bottom, "{a:?}: dual profile [{}, {}]", pb.bottom, pb.top);
        }
        let c = ok(m.classify_in(&n))?;
        let cd = ok(md.classify_in(&nd))?;
        ensure!(c.upper == cd.lower && c.lower == cd.upper, "{m:?} in {n:?}: flags do not swap");
        flips += usize::from(c.upper != c.lower);
        checked += 1;
    }
    Ok(format!("{checked} projector pairs, {flips} with upper ≠ lower"))
}

// 5. M(Pⁿ) = 𝔽 ⊕ 𝔽[1] ⊕ ... ⊕ 𝔽[n].
fn krull_schmidt_projective() -> Outcome {
    let mut runs = 0;
    for p in PRIMES {
        for n in 0..=5usize {
            let rm = ok(model::preset_projective(n, p).build())?;
            let x = ok(rm.parse_expr(&format!("P{n}")))?;
            let whole = ok(MotiveSummand::whole(&x, 0))?;
            let ks = ok(krull_schmidt(&whole, &ok(rm.space("F", &ok(x.concat(&x))?))?, 11))?;
            ensure!(ks.summands.len() == n + 1, "P{n} over GF({p}): {} summands", ks.summands.len());
            let mut total = Correspondence::zero(&x, &x, 0, 0);
            for (a, s) in ks.summands.iter().enumerate() {
                total = ok(total.add(s.projector()))?;
                ensure!(ok(is_projector(s.projector()))?, "not idempotent");
                for (b, t) in ks.summands.iter().enumerate() {
                    if a != b {
                        ensure!(ok(compose(s.projector(), t.projector()))?.is_zero(), "P{n}: {a}, {b} not orthogonal");
                    }
                }
            }
            ensure!(total == ok(diagonal(&x, 0))?, "P{n}: projectors do not sum to Δ");
            let mut ks_sorted: Vec<(i64, &MotiveSummand)> = Vec::new();
            for s in &ks.summands {
                let k = tate_index(s)?.ok_or_else(|| format!("P{n}: {s:?} not Tate"))?;
                ks_sorted.push((k, s));
            }
            ks_sorted.sort_by_key(|(k, _)| *k);
            let indices: Vec<i64> = ks_sorted.iter().map(|(k, _)| *k).collect();
            ensure!(indices == (0..=n as i64).collect::<Vec<_>>(), "P{n}: Tate twists {indices:?}");
            runs += 1;
        }
    }
    Ok(format!("{runs} decompositions"))
}

// 6. The conic preset.
fn conic_preset() -> Outcome {
    let rm = ok(model::preset_conic().build())?;
    let c = ok(rm.parse_expr("C"))?;
    let cc = ok(c.concat(&c))?;
    let dim = ok(rm.space("F", &cc))?.dim();
    ensure!(dim == 2, "space(F, C×C) has dimension {dim}");
    let whole = ok(MotiveSummand::whole(&c, 0))?;
    let over_f = ok(krull_schmidt(&whole, &ok(rm.space("F", &cc))?, 1))?;
    ensure!(over_f.summands.len() == 1, "M(C) splits over F");
    let over_e = ok(krull_schmidt(&whole, &ok(rm.space("E", &cc))?, 1))?;
    let mut twists = Vec::new();
    for s in &over_e.summands {
        twists.push(tate_index(s)?.ok_or_else(|| format!("{s:?} not Tate"))?);
    }
    twists.sort();
    ensure!(twists == vec![0, 1], "M(C) over E has Tate twists {twists:?}");
    Ok("dim 2, indecomposable over F, 𝔽 ⊕ 𝔽[1] over E".into())
}

fn lemma_run(file: &model::ModelFile, cfg: &model::RunConfig) -> Result<(motkit_core::rationality::RationalityModel, LemmaInstance), String> {
    let mut rm = ok(file.build())?;
    let (ns, ms) = (cfg.n.as_ref().unwrap(), cfg.m.as_ref().unwrap());
    let (x, y) = (ok(rm.parse_expr(&ns.expr))?, ok(rm.parse_expr(&ms.expr))?);
    ok(prepare_model(&mut rm, &x, &y))?;
    let n = ok(model::summand(&rm, ns))?;
    let m = ok(model::summand(&rm, ms))?;
    let h = ok(model::morphism(&n, &m, cfg.h.as_ref().unwrap()))?;
    let k = ok(model::morphism(&m, &n, cfg.k.as_ref().unwrap()))?;
    let inst = LemmaInstance { n, m, e: cfg.extension.clone().unwrap(), f: cfg.field.clone().unwrap(), h, k };
    Ok((rm, inst))
}

fn cycle(e: &VarietyExpression, terms: &[(i64, &str)]) -> Result<Cycle, String> {
    ok(Cycle::from_terms(e, terms))
}

// 7. The smoke run against the hand computation.
fn lemma_smoke() -> Outcome {
    let (rm, inst) = lemma_run(&model::preset_conic(), &model::run_conic_lemma3())?;
    let out = ok(lemma3_construct(&rm, &inst, search()))?;
    let c = ok(rm.parse_expr("C"))?;
    let delta = ok(diagonal(&c, 0))?;
    let h1 = cycle(&ok(ok(c.concat(&c))?.concat(&c))?, &[(1, "e0×e1×e1"), (1, "e1×e0×e1")])?;
    ensure!(out.h1 == h1, "h₁ = {}", out.h1.display_terms());
    ensure!(out.h2.to_cycle() == h1, "h₂ = {}", out.h2.to_cycle().display_terms());
    ensure!(out.h3 == delta, "h₃ differs from Δ_C");
    ensure!(out.n1 == 1, "n₁ = {}", out.n1);
    ensure!(out.f == delta && out.g == delta && out.p == delta, "f, g or P differs from Δ_C");
    ensure!(out.transcript.passed(), "failed: {:?}", out.transcript.failures());
    ensure!(out.transcript.checks() >= 10, "only {} checks", out.transcript.checks());
    Ok(format!("{} postconditions", out.transcript.checks()))
}

// 8. The theorem on the conic and C×P¹.
fn theorem_conic() -> Outcome {
    let cfg = model::run_conic_theorem();
    let (rm, inst) = lemma_run(&model::preset_conic(), &cfg)?;
    let o = ok(model::summand(&rm, cfg.o.as_ref().unwrap()))?;
    let cert = ok(main_theorem(&rm, &inst.n, &inst.m, &inst.e, &inst.f, &o, &inst.h, &inst.k, search()))?;
    ensure!(cert.theta == ok(diagonal(inst.n.expr(), 0))?, "θ differs from Δ_C");
    let v = ok(verify_certificate(&cert, &inst.n, &inst.m, &rm, &inst.f))?;
    ensure!(v.passed(), "failed: {:?}", v.failures());
    ensure!(ok(is_projector(&cert.e))?, "e not idempotent");
    let report = execute(&model::preset_conic(), &cfg, 0, 1 << 20);
    ensure!(report.status == Status::Ok, "{}", report.to_text());
    Ok(format!("{} certificate checks", v.checks()))
}

/// Matches two lists of summands up to isomorphism.
fn same_multiset(a: &[MotiveSummand], b: &[MotiveSummand]) -> Result<bool, String> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = vec![false; b.len()];
    for s in a {
        let mut matched = false;
        for (i, t) in b.iter().enumerate() {
            if !used[i] && ok(summand_isomorphism_witness(s, t, search()))?.is_found() {
                used[i] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(false);
        }
    }
    Ok(true)
}

// 9. synth1: n₁ > 1, the power table, and seed-independent decompositions.
fn synth1() -> Outcome {
    let (rm, inst) = lemma_run(&model::preset_synth1(), &model::run_synth1_lemma3())?;
    let out = ok(lemma3_construct(&rm, &inst, search()))?;
    ensure!(out.n1 > 1, "n₁ = {}", out.n1);
    ensure!(out.transcript.passed(), "failed: {:?}", out.transcript.failures());
    ensure!(out.h3 != ok(compose(&inst.h, inst.n.projector()))?, "h₃ = h∘π");

    // Power table: every power of π∘k∘h₃∘π until it repeats.
    let pi = inst.n.projector();
    let core = ok(compose(pi, &ok(compose(&inst.k, &ok(compose(&out.h3, pi))?))?))?;
    let mut powers = vec![core.clone()];
    loop {
        let next = ok(compose(&core, powers.last().unwrap()))?;
        if powers.contains(&next) {
            break;
        }
        powers.push(next);
        ensure!(powers.len() < 10_000, "no repetition");
    }
    let first_idem = powers.iter().position(|c| compose(c, c).as_ref() == Ok(c)).ok_or("no idempotent power")?;
    ensure!(first_idem as u64 + 1 == out.n1, "table gives n₁ = {}, pipeline {}", first_idem + 1, out.n1);
    ensure!(powers[first_idem] == out.p, "P differs from the idempotent power");

    let cycles = ok(rm.space(&inst.e, &ok(inst.n.expr().concat(inst.n.expr()))?))?;
    let p_summand = ok(MotiveSummand::new(out.p.clone(), inst.n.twist()))?;
    let mut sizes = Vec::new();
    for target in [&inst.n, &p_summand] {
        let a = ok(krull_schmidt(target, &cycles, 1))?;
        let b = ok(krull_schmidt(target, &cycles, 987_654_321))?;
        ensure!(same_multiset(&a.summands, &b.summands)?, "decompositions of {target:?} differ between seeds");
        sizes.push(a.summands.len());
    }

    let cfg = model::run_synth1_theorem();
    let report = execute(&model::preset_synth1(), &cfg, 3, 1 << 20);
    ensure!(report.status == Status::Ok, "{}", report.to_text());
    Ok(format!("n₁ = {}, {} powers, decompositions of sizes {sizes:?} agree", out.n1, powers.len()))
}

// 10. Negative instances.
fn negatives() -> Outcome {
    let two = execute(&model::preset_two_point(), &model::RunConfig::new(model::Task::Validate), 0, 1 << 20);
    ensure!(two.exit_code() == 2, "two-point model: exit {}", two.exit_code());
    ensure!(two.error.as_deref().unwrap_or("").contains("multiple top classes"), "{:?}", two.error);

    let cfg = model::run_adversarial();
    let (rm, inst) = lemma_run(&model::preset_adversarial(), &cfg)?;
    let h1 = ok(rm.check_hypothesis1(&inst.e, &inst.f, inst.n.expr(), inst.m.expr()))?;
    ensure!(!h1.holds && !h1.witnesses.is_empty(), "hypothesis 1 holds on the adversarial model");
    let w = &h1.witnesses[0];
    let adv = execute(&model::preset_adversarial(), &cfg, 0, 1 << 20);
    ensure!(adv.exit_code() == 2, "adversarial run: exit {}", adv.exit_code());

    let zero = execute(&model::preset_conic(), &model::run_zero_h(), 0, 1 << 20);
    ensure!(zero.exit_code() == 2, "zero-h run: exit {}", zero.exit_code());
    ensure!(zero.error.as_deref().unwrap_or("").contains("lower-ness violated"), "{:?}", zero.error);
    Ok(format!("witness cycle {}", w.display_terms()))
}

// 11. Base read off the mixed coefficient rows agrees with the dimensions in
// which the pull-back ᵗπ_* is nonzero.
fn profile_consistency() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 600 {
        let f = gf(PRIMES[rng.gen_range(0..3)]);
        let exprs = zoo_expressions(f);
        let e = &exprs[rng.gen_range(1..exprs.len())];
        let twist = rng.gen_range(-2..=2);
        let (pi, _) = ok(random_projector_pair(e, twist, &mut rng))?;
        if pi.is_zero() {
            continue;
        }
        let m = ok(MotiveSummand::new(pi.clone(), twist))?;
        let profile = ok(m.profile())?;
        let t = transpose(&pi);
        let mut support = BTreeSet::new();
        for (i, &d) in e.basis_dims().iter().enumerate() {
            if !ok(act_on_cycle(&t, &Cycle::basis(e, i)))?.is_zero() {
                support.insert(d as i64 + twist);
            }
        }
        ensure!(support == profile.base, "{m:?}: rows {:?}, Chow support {support:?}", profile.base);
        checked += 1;
    }
    Ok(format!("{checked} projectors"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 11] = [
        ("composition against dual bases", formula_one, 5),
        ("category laws", category_laws, 30),
        ("ante-dual bases", ante_dual, 5),
        ("duality of profiles", lemma_dag, 30),
        ("Krull-Schmidt of projective spaces", krull_schmidt_projective, 60),
        ("conic preset", conic_preset, 10),
        ("lifting lemma smoke run", lemma_smoke, 5),
        ("outer-summand theorem on the conic", theorem_conic, 10),
        ("synth1 powering and uniqueness", synth1, 60),
        ("negative instances", negatives, 5),
        ("profile consistency", profile_consistency, 30),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > Duration::from_secs(*limit) => Err(format!("took {elapsed:.2?}, limit {limit} s")),
            r => r,
        };
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
