//! Model files, run configurations and the built-in presets.
//!
//! Both are JSON. A model names the prime, the split structures, the field
//! poset and the rational generators; a run configuration names a task and
//! the summands and correspondences it acts on.

use serde::{Deserialize, Serialize};

use crate::chow::{BasisElement, Cycle, SplitChowStructure, StructureConstant, VarietyExpression};
use crate::correspondence::Correspondence;
use crate::error::{Error, Result};
use crate::ff::Fp;
use crate::motive::MotiveSummand;
use crate::rationality::{FieldNode, FieldPoset, RationalityModel};
use crate::zoo;

pub const FORMAT_MAJOR: u32 = 1;
pub const FORMAT_VERSION: &str = "1.0";

/// `(coefficient, "a×b×...")` terms of a cycle.
pub type Terms = Vec<(i64, String)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub format_version: String,
    pub p: u64,
    pub varieties: Vec<VarietySpec>,
    pub fields: FieldsSpec,
    #[serde(default)]
    pub rational: Vec<RationalSpec>,
    /// Extra expressions to close over, e.g. `C×C×C`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub track: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VarietySpec {
    Builtin(BuiltinSpec),
    Data(StructureData),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuiltinSpec {
    pub name: String,
    /// `projective_space`, `quadric`, `conic`, `point` or `two_point`.
    pub builder: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

/// Integer structure constants; reduced mod p when the model is built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureData {
    pub name: String,
    pub dim: usize,
    /// `(label, dimension)` per basis class.
    pub basis: Vec<(String, usize)>,
    /// `[a, b, c, coeff]`: `x_a · x_b` has `coeff · x_c`.
    pub products: Vec<[i64; 4]>,
    /// `[index, value]` pairs of the degree functional.
    pub degree: Vec<[i64; 2]>,
    pub fundamental: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldsSpec {
    pub nodes: Vec<FieldNode>,
    /// `[a, b]` means `a ≤ b`.
    #[serde(default)]
    pub relations: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalSpec {
    pub field: String,
    pub expr: String,
    pub generators: Vec<Terms>,
}

/// Parses JSON, reporting the failing field path and position.
fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Parse(format!("{what}: line {}, column {}, at `{path}`: {inner}", inner.line(), inner.column()))
    })
}

fn check_version(v: &str) -> Result<()> {
    let major = v.split('.').next().and_then(|m| m.parse::<u32>().ok());
    match major {
        Some(FORMAT_MAJOR) => Ok(()),
        Some(m) => Err(Error::Parse(format!("unsupported format_version {v} (major {m}, expected {FORMAT_MAJOR})"))),
        None => Err(Error::Parse(format!("malformed format_version `{v}`"))),
    }
}

impl VarietySpec {
    pub fn name(&self) -> &str {
        match self {
            VarietySpec::Builtin(b) => &b.name,
            VarietySpec::Data(d) => &d.name,
        }
    }

    /// The structure, not yet validated.
    pub fn build(&self, field: Fp) -> Result<SplitChowStructure> {
        match self {
            VarietySpec::Builtin(b) => {
                let need_n = || b.n.ok_or_else(|| Error::Model(format!("`{}`: builder {} needs `n`", b.name, b.builder)));
                let s = match b.builder.as_str() {
                    "projective_space" => zoo::projective_space(field, need_n()?),
                    "quadric" => zoo::split_quadric_odd(field, need_n()?)?,
                    "conic" => zoo::conic(field),
                    "point" => zoo::point(field),
                    "two_point" => zoo::two_point(field),
                    other => return Err(Error::Model(format!("`{}`: unknown builder `{other}`", b.name))),
                };
                Ok(s.renamed(b.name.clone()))
            }
            VarietySpec::Data(d) => {
                let basis = d.basis.iter().map(|(l, k)| BasisElement::new(l.clone(), *k)).collect();
                let index = |v: i64| {
                    usize::try_from(v).map_err(|_| Error::Model(format!("`{}`: negative index {v}", d.name)))
                };
                let constants = d
                    .products
                    .iter()
                    .map(|&[a, b, c, coeff]| Ok(StructureConstant { a: index(a)?, b: index(b)?, c: index(c)?, coeff }))
                    .collect::<Result<Vec<_>>>()?;
                let degree = d.degree.iter().map(|&[i, v]| Ok((index(i)?, v))).collect::<Result<Vec<_>>>()?;
                SplitChowStructure::from_integer_data(d.name.clone(), field, d.dim, basis, &constants, &degree, d.fundamental)
            }
        }
    }
}

/// Writes a structure back as integer data (constants in `0..p`).
pub fn structure_data(s: &SplitChowStructure) -> StructureData {
    let n = s.len();
    let mut products = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for &(c, k) in s.product_terms(a, b) {
                products.push([a as i64, b as i64, c as i64, k as i64]);
            }
        }
    }
    let degree = s
        .degree_functional()
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(i, &v)| [i as i64, v as i64])
        .collect();
    StructureData {
        name: s.name().to_string(),
        dim: s.dim(),
        basis: s.basis().iter().map(|b| (b.label.clone(), b.dim)).collect(),
        products,
        degree,
        fundamental: s.fundamental_index(),
    }
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<Self> {
        let m: ModelFile = parse_json(text, "model")?;
        check_version(&m.format_version)?;
        Ok(m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model serializes")
    }

    pub fn field(&self) -> Result<Fp> {
        Fp::new(self.p)
    }

    /// Validates every structure and closes the rationality spaces.
    pub fn build(&self) -> Result<RationalityModel> {
        let field = self.field()?;
        let varieties = self.varieties.iter().map(|v| v.build(field)).collect::<Result<Vec<_>>>()?;
        let poset = FieldPoset::new(self.fields.nodes.clone(), &self.fields.relations)?;
        let mut model = RationalityModel::new(field, poset, varieties)?;
        for r in &self.rational {
            let e = model.parse_expr(&r.expr)?;
            for g in &r.generators {
                model.add_generator(&r.field, cycle_from_terms(&e, g)?)?;
            }
        }
        for t in &self.track {
            let e = model.parse_expr(t)?;
            model.track(&e)?;
        }
        model.close()?;
        Ok(model)
    }

    /// The same model with every builder replaced by explicit data.
    pub fn explicit(&self) -> Result<ModelFile> {
        let field = self.field()?;
        let varieties = self
            .varieties
            .iter()
            .map(|v| Ok(VarietySpec::Data(structure_data(&v.build(field)?))))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModelFile { varieties, ..self.clone() })
    }
}

pub fn cycle_from_terms(e: &VarietyExpression, terms: &Terms) -> Result<Cycle> {
    let t: Vec<(i64, &str)> = terms.iter().map(|(c, s)| (*c, s.as_str())).collect();
    Cycle::from_terms(e, &t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    Validate,
    Decompose,
    Classify,
    Lemma3,
    Theorem,
}

/// `(X, π)[twist]`; a missing projector means the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandSpec {
    pub expr: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projector: Option<Terms>,
    #[serde(default)]
    pub twist: i64,
}

impl SummandSpec {
    /// Command-line form: JSON, or `EXPR[@twist][:terms]` with terms such as
    /// `e0×e1+e1×e0` or `2*e0×e2-e2×e0`.
    pub fn parse_arg(arg: &str) -> Result<Self> {
        let arg = arg.trim();
        if arg.starts_with('{') {
            return parse_json(arg, "summand");
        }
        let (head, projector) = match arg.split_once(':') {
            Some((h, t)) => (h, Some(parse_terms(t)?)),
            None => (arg, None),
        };
        let (expr, twist) = match head.split_once('@') {
            Some((e, t)) => (e, t.trim().parse().map_err(|_| Error::Parse(format!("bad twist in `{arg}`")))?),
            None => (head, 0),
        };
        Ok(SummandSpec { expr: expr.trim().into(), projector, twist })
    }
}

/// Parses `2*e0×e2-e2×e0 + e1×e1`.
pub fn parse_terms(s: &str) -> Result<Terms> {
    let mut out = Vec::new();
    let mut sign = 1;
    let mut cur = String::new();
    let mut flush = |cur: &mut String, sign: i64| -> Result<()> {
        let t = cur.trim();
        if t.is_empty() {
            return Ok(());
        }
        let (c, label) = match t.split_once('*') {
            Some((c, l)) => (c.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad coefficient in `{t}`")))?, l),
            None => (1, t),
        };
        out.push((sign * c, label.trim().to_string()));
        cur.clear();
        Ok(())
    };
    for ch in s.chars() {
        match ch {
            '+' | '-' => {
                flush(&mut cur, sign)?;
                sign = if ch == '-' { -1 } else { 1 };
            }
            _ => cur.push(ch),
        }
    }
    flush(&mut cur, sign)?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub task: Task,
    /// Field for `decompose` and `classify`; the base field `F` otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    /// The larger field `E` of the lemma and the theorem.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<SummandSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<SummandSpec>,
    /// The outer summand of the theorem.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub o: Option<SummandSpec>,
    /// Cycles on `X×Y` and `Y×X`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Terms>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Terms>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enum_bound: Option<u64>,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text, "run configuration")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn new(task: Task) -> Self {
        RunConfig {
            task,
            field: None,
            extension: None,
            n: None,
            m: None,
            o: None,
            h: None,
            k: None,
            seed: None,
            enum_bound: None,
        }
    }
}

pub fn missing(what: &str) -> Error {
    Error::Parse(format!("run configuration: missing `{what}`"))
}

pub fn summand(model: &RationalityModel, spec: &SummandSpec) -> Result<MotiveSummand> {
    let e = model.parse_expr(&spec.expr)?;
    match &spec.projector {
        None => MotiveSummand::whole(&e, spec.twist),
        Some(terms) => {
            let c = cycle_from_terms(&e.concat(&e)?, terms)?;
            let pi = Correspondence::from_cycle(&c, e.num_factors(), spec.twist, spec.twist)?;
            MotiveSummand::new(pi, spec.twist)
        }
    }
}

/// A correspondence `a ⇝ b` between two summands, from terms on `A × B`.
pub fn morphism(a: &MotiveSummand, b: &MotiveSummand, terms: &Terms) -> Result<Correspondence> {
    let c = cycle_from_terms(&a.expr().concat(b.expr())?, terms)?;
    Correspondence::from_cycle(&c, a.expr().num_factors(), a.twist(), b.twist())
}

fn builtin(name: &str, builder: &str, n: Option<usize>) -> VarietySpec {
    VarietySpec::Builtin(BuiltinSpec { name: name.into(), builder: builder.into(), n })
}

fn node(name: &str, split: bool) -> FieldNode {
    FieldNode { name: name.into(), split }
}

fn terms(t: &[(i64, &str)]) -> Terms {
    t.iter().map(|(c, s)| (*c, s.to_string())).collect()
}

fn rational(field: &str, expr: &str, gens: &[&[(i64, &str)]]) -> RationalSpec {
    RationalSpec { field: field.into(), expr: expr.into(), generators: gens.iter().map(|g| terms(g)).collect() }
}

const DELTA_C: &[(i64, &str)] = &[(1, "e0×e1"), (1, "e1×e0")];

/// A conic without rational points over `F`, split over `E`, next to a `P¹`.
pub fn preset_conic() -> ModelFile {
    ModelFile {
        format_version: FORMAT_VERSION.into(),
        p: 2,
        varieties: vec![builtin("C", "conic", None), builtin("P1", "projective_space", Some(1))],
        fields: FieldsSpec {
            nodes: vec![node("F", false), node("E", true)],
            relations: vec![("F".into(), "E".into())],
        },
        rational: vec![
            rational("F", "C×C", &[DELTA_C]),
            // Δ on the outer factors times [C] in the middle.
            rational("F", "C×C×C", &[&[(1, "e0×e1×e1"), (1, "e1×e1×e0")]]),
            rational("F", "P1", &[&[(1, "e0")]]),
        ],
        track: vec!["C×C×C".into()],
    }
}

/// Full rationality on `P^n` over a single split field.
pub fn preset_projective(n: usize, p: u64) -> ModelFile {
    let name = format!("P{n}");
    ModelFile {
        format_version: FORMAT_VERSION.into(),
        p,
        varieties: vec![builtin(&name, "projective_space", Some(n))],
        fields: FieldsSpec { nodes: vec![node("F", true)], relations: vec![] },
        rational: vec![],
        track: vec![format!("{name}×{name}")],
    }
}

/// A zero-dimensional structure with two top classes; fails validation.
pub fn preset_two_point() -> ModelFile {
    ModelFile {
        format_version: FORMAT_VERSION.into(),
        p: 2,
        varieties: vec![builtin("X", "two_point", None)],
        fields: FieldsSpec { nodes: vec![node("F", false), node("E", true)], relations: vec![("F".into(), "E".into())] },
        rational: vec![],
        track: vec![],
    }
}

/// The conic preset with a second, unrelated conic `D`. Over `E` the two
/// become isomorphic, but `[C] × pt_D` is not `F(C)`-rational.
pub fn preset_adversarial() -> ModelFile {
    let mut m = preset_conic();
    m.varieties.push(builtin("D", "conic", None));
    m
}

pub fn preset_model(name: &str) -> Result<ModelFile> {
    match name {
        "conic" => Ok(preset_conic()),
        "synth1" => Ok(preset_synth1()),
        "two-point" => Ok(preset_two_point()),
        "adversarial" => Ok(preset_adversarial()),
        _ => {
            if let Some(n) = name.strip_prefix('P').and_then(|n| n.parse::<usize>().ok()) {
                return Ok(preset_projective(n, 2));
            }
            Err(Error::Model(format!("unknown preset `{name}`")))
        }
    }
}

fn whole(expr: &str, twist: i64) -> SummandSpec {
    SummandSpec { expr: expr.into(), projector: None, twist }
}

/// `X = Y = C`, `E = F`, `h = k = Δ`.
pub fn run_conic_lemma3() -> RunConfig {
    RunConfig {
        field: Some("F".into()),
        extension: Some("F".into()),
        n: Some(whole("C", 0)),
        m: Some(whole("C", 0)),
        h: Some(terms(DELTA_C)),
        k: Some(terms(DELTA_C)),
        ..RunConfig::new(Task::Lemma3)
    }
}

/// The lemma with `h = 0`.
pub fn run_zero_h() -> RunConfig {
    RunConfig { h: Some(vec![]), ..run_conic_lemma3() }
}

/// `M(C)` through the summand `Δ_C ⊗ (pt × [P¹])` of `C × P¹`.
pub fn run_conic_theorem() -> RunConfig {
    let rho = terms(&[(1, "e0×e0×e1×e1"), (1, "e1×e0×e0×e1")]);
    RunConfig {
        field: Some("F".into()),
        extension: Some("F".into()),
        n: Some(whole("C", 0)),
        m: Some(SummandSpec { expr: "C×P1".into(), projector: Some(rho), twist: -1 }),
        o: Some(whole("C", 0)),
        h: Some(terms(&[(1, "e0×e1×e1"), (1, "e1×e0×e1")])),
        k: Some(terms(&[(1, "e0×e0×e1"), (1, "e1×e0×e0")])),
        ..RunConfig::new(Task::Theorem)
    }
}

/// Hypothesis 1 fails for `X = C`, `Y = D`.
pub fn run_adversarial() -> RunConfig {
    RunConfig {
        field: Some("F".into()),
        extension: Some("E".into()),
        n: Some(whole("C", 0)),
        m: Some(whole("D", 0)),
        h: Some(terms(DELTA_C)),
        k: Some(terms(DELTA_C)),
        ..RunConfig::new(Task::Lemma3)
    }
}

const XI_MINUS: &[(i64, &str)] = &[(1, "e1×e2"), (-1, "e2×e1")];

/// Three P²-shaped surfaces over GF(3), modelled on Severi-Brauer surfaces:
/// `S` and `T` of mutually opposite algebras of index 3, and `R` of an
/// unrelated one. `h⊗1 - 1⊗h` is rational on `S×S`, `T×T`, `R×R`, and
/// `h⊗1 + 1⊗h` on `S×T`. The middle field `K` splits `R` only; `E` splits
/// everything.
pub fn preset_synth1() -> ModelFile {
    ModelFile {
        format_version: FORMAT_VERSION.into(),
        p: 3,
        varieties: vec![
            builtin("S", "projective_space", Some(2)),
            builtin("T", "projective_space", Some(2)),
            builtin("R", "projective_space", Some(2)),
        ],
        fields: FieldsSpec {
            nodes: vec![node("F", false), node("K", false), node("E", true)],
            relations: vec![("F".into(), "K".into()), ("K".into(), "E".into())],
        },
        rational: vec![
            rational("F", "S×S", &[XI_MINUS]),
            rational("F", "T×T", &[XI_MINUS]),
            rational("F", "R×R", &[XI_MINUS]),
            rational("F", "S×T", &[&[(1, "e1×e2"), (1, "e2×e1")]]),
            rational("K", "R", &[&[(1, "e0")]]),
        ],
        track: vec!["S×S×S".into(), "S×T×S".into(), "S×R".into()],
    }
}

/// `X = Y = S`: `h = [S]×pt` and `k = 2·pt×[S] + [S]×pt` over the split
/// field. The unique lift forces `h₃ = Δ`, so `π∘k∘h₃∘π = k` has order two.
pub fn run_synth1_lemma3() -> RunConfig {
    RunConfig {
        field: Some("F".into()),
        extension: Some("E".into()),
        n: Some(whole("S", 0)),
        m: Some(whole("S", 0)),
        h: Some(terms(&[(1, "e2×e0")])),
        k: Some(terms(&[(2, "e0×e2"), (1, "e2×e0")])),
        ..RunConfig::new(Task::Lemma3)
    }
}

/// `M(S)` through `M(T)` over `K`, with `h = (h⊗1 + 1⊗h)²` and its transpose.
pub fn run_synth1_theorem() -> RunConfig {
    let iso: &[(i64, &str)] = &[(1, "e0×e2"), (2, "e1×e1"), (1, "e2×e0")];
    RunConfig {
        field: Some("F".into()),
        extension: Some("K".into()),
        n: Some(whole("S", 0)),
        m: Some(whole("T", 0)),
        o: Some(whole("S", 0)),
        h: Some(terms(iso)),
        k: Some(terms(iso)),
        ..RunConfig::new(Task::Theorem)
    }
}

pub fn preset_run(name: &str) -> Result<RunConfig> {
    match name {
        "conic-lemma3" => Ok(run_conic_lemma3()),
        "conic-theorem" => Ok(run_conic_theorem()),
        "zero-h" => Ok(run_zero_h()),
        "adversarial" => Ok(run_adversarial()),
        "synth1-lemma3" => Ok(run_synth1_lemma3()),
        "synth1-theorem" => Ok(run_synth1_theorem()),
        _ => Err(Error::Model(format!("unknown run preset `{name}`"))),
    }
}
