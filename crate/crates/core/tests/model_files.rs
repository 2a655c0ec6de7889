use motkit_core::model::{self, ModelFile, RunConfig};
use motkit_core::run::execute;
use motkit_core::zoo;
use motkit_core::Fp;

const MODELS: [&str; 5] = ["conic", "synth1", "adversarial", "P3", "two-point"];

#[test]
fn models_round_trip() {
    for name in MODELS {
        let m = model::preset_model(name).unwrap();
        let back = ModelFile::parse(&m.to_json()).unwrap();
        assert_eq!(back, m, "{name}");
    }
}

#[test]
fn explicit_models_close_to_the_same_spaces() {
    for name in ["conic", "synth1", "adversarial", "P3"] {
        let m = model::preset_model(name).unwrap();
        let explicit = ModelFile::parse(&m.explicit().unwrap().to_json()).unwrap();
        let a = m.build().unwrap();
        let b = explicit.build().unwrap();
        assert_eq!(a.summary(), b.summary(), "{name}");
        for (x, y) in a.varieties().zip(b.varieties()) {
            assert_eq!(x, y, "{name}: structure {}", x.name());
        }
    }
}

#[test]
fn configs_round_trip() {
    for name in ["conic-lemma3", "conic-theorem", "zero-h", "adversarial", "synth1-lemma3", "synth1-theorem"] {
        let c = model::preset_run(name).unwrap();
        assert_eq!(RunConfig::parse(&c.to_json()).unwrap(), c, "{name}");
    }
}

#[test]
fn reports_are_byte_stable() {
    let runs = [("synth1", "synth1-lemma3"), ("conic", "conic-theorem"), ("adversarial", "adversarial")];
    for (m, c) in runs {
        let (m, c) = (model::preset_model(m).unwrap(), model::preset_run(c).unwrap());
        assert_eq!(execute(&m, &c, 9, 1 << 16).to_json(), execute(&m, &c, 9, 1 << 16).to_json());
    }
}

#[test]
fn zoo_builders_validate() {
    for p in [2, 3, 5] {
        let f = Fp::new(p).unwrap();
        let mut all = vec![zoo::point(f), zoo::conic(f)];
        all.extend((1..=5).map(|n| zoo::projective_space(f, n)));
        all.extend([1, 3, 5, 7].map(|d| zoo::split_quadric_odd(f, d).unwrap()));
        for s in all {
            assert!(s.validate().passed(), "{} over GF({p}): {:?}", s.name(), s.validate().violations);
        }
        assert!(!zoo::two_point(f).validate().passed());
    }
}

#[test]
fn unknown_fields_are_rejected() {
    let mut v: serde_json::Value = serde_json::from_str(&model::preset_conic().to_json()).unwrap();
    v["colour"] = serde_json::json!("blue");
    let err = ModelFile::parse(&v.to_string()).unwrap_err();
    assert!(err.to_string().contains("colour"), "{err}");
}
