//! Executes a [`RunConfig`] against a [`ModelFile`] and collects a report.
//!
//! The report is the single document behind both the text and the machine
//! output of the command-line tool, so it contains no timings or other
//! non-deterministic data.

use serde::Serialize;

use crate::decompose::krull_schmidt;
use crate::error::{Error, Result};
use crate::model::{self, missing, ModelFile, RunConfig, Task};
use crate::motive::{summand_isomorphism_witness, Classification, MotiveSummand, SummandProfile, WitnessSearch};
use crate::rationality::{RationalityModel, SpaceSummary};
use crate::report::Transcript;
use crate::theorem::{lemma3_construct, main_theorem, prepare_model, CertificateView, CorrespondenceView, LemmaInstance, LemmaView};
use crate::VarietyExpression;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    HypothesisViolated,
    Failed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::HypothesisViolated => 2,
            Status::Failed => 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureView {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SummandView {
    pub projector: CorrespondenceView,
    pub twist: i64,
    pub rank: usize,
    pub profile: Option<SummandProfile>,
    /// `Some(k)` when an explicit isomorphism with `𝔽[k]` was found.
    pub tate: Option<i64>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "task", rename_all = "lowercase")]
pub enum Outcome {
    Validate { structures: Vec<StructureView> },
    Decompose { field: String, end_dim: usize, radical_dim: usize, summands: Vec<SummandView> },
    Classify { inner: SummandView, outer: SummandView, classification: Classification },
    Lemma3(LemmaView),
    Theorem(CertificateView),
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub status: Status,
    pub error: Option<String>,
    pub seed: u64,
    pub enum_bound: u64,
    pub model: ModelFile,
    pub config: RunConfig,
    pub spaces: Vec<SpaceSummary>,
    pub outcome: Option<Outcome>,
    pub transcript: Transcript,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(s, "task: {}", task_name(self.config.task));
        let _ = writeln!(s, "seed: {}", self.seed);
        for sp in &self.spaces {
            let _ = writeln!(s, "space({}, {}) = {}/{}", sp.field, sp.expr, sp.dim, sp.ambient);
        }
        match &self.outcome {
            Some(Outcome::Validate { structures }) => {
                for v in structures {
                    let verdict = if v.violations.is_empty() { "ok".to_string() } else { v.violations.join("; ") };
                    let _ = writeln!(s, "structure {} (dim {}, rank {}): {verdict}", v.name, v.dim, v.rank);
                }
            }
            Some(Outcome::Decompose { field, end_dim, radical_dim, summands }) => {
                let _ = writeln!(s, "over {field}: End dim {end_dim}, radical dim {radical_dim}, {} summands", summands.len());
                for (i, m) in summands.iter().enumerate() {
                    let _ = writeln!(s, "  [{i}] {}", summand_line(m));
                }
            }
            Some(Outcome::Classify { inner, outer, classification: c }) => {
                let _ = writeln!(s, "inner: {}", summand_line(inner));
                let _ = writeln!(s, "outer ambient: {}", summand_line(outer));
                let _ = writeln!(s, "upper: {}, lower: {}, outer: {}", c.upper, c.lower, c.outer);
            }
            Some(Outcome::Lemma3(l)) => {
                let _ = writeln!(s, "n₁ = {} (tail {}, period {})", l.n1, l.tail, l.period);
            }
            Some(Outcome::Theorem(c)) => {
                let _ = writeln!(s, "θ = {}", c.theta.cycle);
                let _ = writeln!(s, "n₁ = {} / {}", c.first.n1, c.second.n1);
            }
            None => {}
        }
        if !self.transcript.entries.is_empty() {
            let _ = writeln!(s, "transcript:");
            let _ = write!(s, "{}", self.transcript);
        }
        let status = match self.status {
            Status::Ok => "ok",
            Status::HypothesisViolated => "hypothesis violated",
            Status::Failed => "FAILED",
        };
        match &self.error {
            Some(e) => {
                let _ = writeln!(s, "status: {status}: {e}");
            }
            None => {
                let _ = writeln!(s, "status: {status}");
            }
        }
        s
    }
}

fn task_name(t: Task) -> &'static str {
    match t {
        Task::Validate => "validate",
        Task::Decompose => "decompose",
        Task::Classify => "classify",
        Task::Lemma3 => "lemma3",
        Task::Theorem => "theorem",
    }
}

fn summand_line(m: &SummandView) -> String {
    let mut s = format!("({}, {})[{}] rank {}", m.projector.source, m.projector.cycle, m.twist, m.rank);
    if let Some(p) = &m.profile {
        s += &format!(", base {:?}, b = {}, t = {}", p.base, p.bottom, p.top);
    }
    if let Some(k) = m.tate {
        s += &format!(", ≅ 𝔽[{k}]");
    }
    s
}

/// Runs `cfg` with the given seed and enumeration bound. Errors become part of
/// the report; only a hypothesis violation yields [`Status::HypothesisViolated`].
pub fn execute(file: &ModelFile, cfg: &RunConfig, seed: u64, enum_bound: u64) -> Report {
    let mut report = Report {
        status: Status::Ok,
        error: None,
        seed,
        enum_bound,
        model: file.clone(),
        config: cfg.clone(),
        spaces: vec![],
        outcome: None,
        transcript: Transcript::new(),
    };
    let search = WitnessSearch { enum_bound, seed, ..WitnessSearch::default() };
    match dispatch(file, cfg, search, &mut report) {
        Ok(()) if report.transcript.passed() => {}
        Ok(()) => {
            report.status = Status::Failed;
            report.error = Some(format!("failed checks: {}", report.transcript.failures().join(", ")));
        }
        Err(e) => {
            report.status = if e.is_hypothesis_violation() { Status::HypothesisViolated } else { Status::Failed };
            report.error = Some(e.to_string());
        }
    }
    report
}

fn dispatch(file: &ModelFile, cfg: &RunConfig, search: WitnessSearch, report: &mut Report) -> Result<()> {
    if cfg.task == Task::Validate {
        let structures = structures(file, &mut report.transcript)?;
        let bad = structures.iter().find(|s| !s.violations.is_empty()).cloned();
        report.outcome = Some(Outcome::Validate { structures });
        if let Some(s) = bad {
            return Err(Error::InvalidStructure { name: s.name, violations: s.violations });
        }
    }
    let mut rm = file.build()?;
    if let (Some(n), Some(m)) = (&cfg.n, &cfg.m) {
        if matches!(cfg.task, Task::Lemma3 | Task::Theorem) {
            let (x, y) = (rm.parse_expr(&n.expr)?, rm.parse_expr(&m.expr)?);
            prepare_model(&mut rm, &x, &y)?;
        }
    }
    if let (Some(n), Task::Decompose | Task::Classify) = (&cfg.n, cfg.task) {
        let x = rm.parse_expr(&n.expr)?;
        rm.track(&x.concat(&x)?)?;
        rm.close()?;
    }
    report.spaces = rm.summary();
    let t = &mut report.transcript;
    let outcome = match cfg.task {
        Task::Validate => {
            restrictions(&rm, t)?;
            report.outcome.take().expect("structures were checked")
        }
        Task::Decompose => {
            let field = cfg.field.as_deref().unwrap_or(rm.poset().minimum()).to_string();
            let n = model::summand(&rm, cfg.n.as_ref().ok_or_else(|| missing("n"))?)?;
            let cycles = rm.space(&field, &n.expr().concat(n.expr())?)?;
            let ks = krull_schmidt(&n, &cycles, search.seed)?;
            t.check("projectors orthogonal, primitive, summing to π", true, format!("{} summands", ks.summands.len()));
            let summands = ks.summands.iter().map(|m| view(m, search)).collect::<Result<Vec<_>>>()?;
            Outcome::Decompose { field, end_dim: ks.end_dim, radical_dim: ks.radical_dim, summands }
        }
        Task::Classify => {
            let outer = model::summand(&rm, cfg.n.as_ref().ok_or_else(|| missing("n"))?)?;
            let inner = model::summand(&rm, cfg.m.as_ref().ok_or_else(|| missing("m"))?)?;
            let c = inner.classify_in(&outer)?;
            t.check("inner is a summand of the outer ambient", true, "");
            Outcome::Classify { inner: view(&inner, search)?, outer: view(&outer, search)?, classification: c }
        }
        Task::Lemma3 => {
            let (inst, _) = instance(&rm, cfg)?;
            let out = lemma3_construct(&rm, &inst, search)?;
            t.extend("", out.transcript.clone());
            Outcome::Lemma3((&out).into())
        }
        Task::Theorem => {
            let (inst, o) = instance(&rm, cfg)?;
            let o = o.ok_or_else(|| missing("o"))?;
            let cert = main_theorem(&rm, &inst.n, &inst.m, &inst.e, &inst.f, &o, &inst.h, &inst.k, search)?;
            t.extend("", cert.transcript.clone());
            Outcome::Theorem((&cert).into())
        }
    };
    report.outcome = Some(outcome);
    Ok(())
}

fn structures(file: &ModelFile, t: &mut Transcript) -> Result<Vec<StructureView>> {
    let field = file.field()?;
    let mut out = Vec::new();
    for v in &file.varieties {
        let s = v.build(field)?;
        let r = s.validate();
        t.check(format!("structure {} valid", s.name()), r.passed(), r.violations.join("; "));
        out.push(StructureView { name: s.name().into(), dim: s.dim(), rank: s.len(), violations: r.violations });
    }
    Ok(out)
}

fn restrictions(rm: &RationalityModel, t: &mut Transcript) -> Result<()> {
    let spaces = rm.summary();
    for (a, b) in rm.poset().relations() {
        for sp in spaces.iter().filter(|sp| sp.field == a) {
            let e = rm.parse_expr(&sp.expr)?;
            let r = rm.restriction_kernel_check(&a, &b, &e)?;
            t.check(format!("restriction {a} → {b} injective on {}", sp.expr), r.kernel_dim == 0, "");
        }
    }
    Ok(())
}

fn instance(rm: &RationalityModel, cfg: &RunConfig) -> Result<(LemmaInstance, Option<MotiveSummand>)> {
    let n = model::summand(rm, cfg.n.as_ref().ok_or_else(|| missing("n"))?)?;
    let m = model::summand(rm, cfg.m.as_ref().ok_or_else(|| missing("m"))?)?;
    let h = model::morphism(&n, &m, cfg.h.as_ref().ok_or_else(|| missing("h"))?)?;
    let k = model::morphism(&m, &n, cfg.k.as_ref().ok_or_else(|| missing("k"))?)?;
    let f = cfg.field.clone().unwrap_or_else(|| rm.poset().minimum().to_string());
    let e = cfg.extension.clone().ok_or_else(|| missing("extension"))?;
    let o = cfg.o.as_ref().map(|o| model::summand(rm, o)).transpose()?;
    Ok((LemmaInstance { n, m, e, f, h, k }, o))
}

fn view(m: &MotiveSummand, search: WitnessSearch) -> Result<SummandView> {
    let profile = if m.is_zero() { None } else { Some(m.profile()?) };
    let mut tate = None;
    if m.rank() == 1 {
        // Hom into a Tate motive vanishes unless the twists match, so at most
        // one k in the window can succeed.
        let d = m.expr().dim() as i64;
        for k in (m.twist() - d)..=(m.twist() + 2 * d) {
            let pt = MotiveSummand::whole(&VarietyExpression::point(m.expr().field()), k)?;
            if summand_isomorphism_witness(m, &pt, search)?.is_found() {
                tate = Some(k);
                break;
            }
        }
    }
    Ok(SummandView { projector: m.projector().into(), twist: m.twist(), rank: m.rank(), profile, tate })
}

/// Parses a model argument: a file path, or `preset:<name>`.
pub fn load_model(arg: &str) -> Result<ModelFile> {
    match arg.strip_prefix("preset:") {
        Some(name) => model::preset_model(name),
        None => ModelFile::parse(&read(arg)?),
    }
}

/// Parses a run-configuration argument: a file path, or `preset:<name>`.
pub fn load_config(arg: &str) -> Result<RunConfig> {
    match arg.strip_prefix("preset:") {
        Some(name) => model::preset_run(name),
        None => RunConfig::parse(&read(arg)?),
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conic_lemma_report_is_ok_and_stable() {
        let a = execute(&model::preset_conic(), &model::run_conic_lemma3(), 7, 1 << 20);
        assert_eq!(a.status, Status::Ok, "{}", a.to_text());
        let b = execute(&model::preset_conic(), &model::run_conic_lemma3(), 7, 1 << 20);
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn two_point_model_is_a_hypothesis_violation() {
        let r = execute(&model::preset_two_point(), &model::run_conic_theorem(), 0, 1 << 20);
        assert_eq!(r.exit_code(), 2);
        assert!(r.error.unwrap().contains("multiple top classes"));
    }
}
