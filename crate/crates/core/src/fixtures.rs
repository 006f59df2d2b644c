//! The worked examples, as values. The same data ships as JSON under
//! `fixtures/` in this crate.

use crate::fan::Fan;
use crate::ground::GroundSet;
use crate::multimatroid::RankFunction;
use crate::rational::rat;

/// `{1, 1bar} ⊔ {2, 2bar}`.
pub fn b2() -> GroundSet {
    GroundSet::from_labels(&[&["1", "1bar"], &["2", "2bar"]]).expect("valid")
}

/// `{a, b, c} ⊔ {1, 2}`.
pub fn abc12() -> GroundSet {
    GroundSet::from_labels(&[&["a", "b", "c"], &["1", "2"]]).expect("valid")
}

/// `{1} ⊔ {2}`.
pub fn two_points() -> GroundSet {
    GroundSet::from_labels(&[&["1"], &["2"]]).expect("valid")
}

/// On `b2`: rank 2 on `{1,2}` and `{1bar,2bar}`, rank 1 on every other
/// nonempty set. A multimatroid that is pseudo-cubical but not cubical.
pub fn example_multimatroid() -> RankFunction {
    let g = b2();
    RankFunction::from_fn(&g, |s| {
        let labels = g.labels_of(s);
        let two = labels == ["1", "2"] || labels == ["1bar", "2bar"];
        rat(if two { 2 } else { 1 })
    })
}

/// On `b2`: 5 on `{1}`, `{1bar}`; 4 on `{2}`, `{2bar}`; 6 on every pair. An
/// ℝ-multimatroid violating the boundedness part of BR2.
pub fn example_5544() -> RankFunction {
    RankFunction::from_fn(&b2(), |s| match (s.len(), s.get(0).is_some()) {
        (1, true) => rat(5),
        (1, false) => rat(4),
        _ => rat(6),
    })
}

/// On `two_points`: `rk(1) = 2`, `rk(2) = 1`, `rk(12) = 3`. Not
/// pseudo-cubical, and its normal complex differs from its IPC.
pub fn counterexample() -> RankFunction {
    RankFunction::from_fn(&two_points(), |s| {
        rat(match (s.get(0), s.get(1)) {
            (Some(_), None) => 2,
            (None, Some(_)) => 1,
            _ => 3,
        })
    })
}

/// The fan of `b2` with one generator of its first maximal cone doubled.
pub fn corrupted_fan() -> Fan {
    Fan::build(&b2())
        .expect("b2 has no singleton blocks")
        .with_doubled_generator(0, 1)
}

/// Raw JSON of the shipped fixture files, by file name.
pub const FILES: &[(&str, &str)] = &[
    ("b2.json", include_str!("../fixtures/b2.json")),
    ("abc12.json", include_str!("../fixtures/abc12.json")),
    ("two_points.json", include_str!("../fixtures/two_points.json")),
    (
        "example_multimatroid.json",
        include_str!("../fixtures/example_multimatroid.json"),
    ),
    ("example_5544.json", include_str!("../fixtures/example_5544.json")),
    ("counterexample.json", include_str!("../fixtures/counterexample.json")),
    ("boolean_b2.json", include_str!("../fixtures/boolean_b2.json")),
    ("quadratic_b2.json", include_str!("../fixtures/quadratic_b2.json")),
    ("sum_h_b2.json", include_str!("../fixtures/sum_h_b2.json")),
    (
        "sum_h_divisor_b2.json",
        include_str!("../fixtures/sum_h_divisor_b2.json"),
    ),
    ("sets_b2.json", include_str!("../fixtures/sets_b2.json")),
];

pub fn file(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}
