//! Small named frameworks used throughout the tests, benches and docs.

use crate::framework::Framework;

fn build(names: &[&str], attacks: &[(&str, &str)]) -> Framework {
    Framework::new(names.iter().copied(), attacks.iter().copied())
        .expect("fixture frameworks are well-formed")
}

/// `A → B → C`.
pub fn chain() -> Framework {
    build(&["A", "B", "C"], &[("A", "B"), ("B", "C")])
}

/// `A → B → C → A`.
pub fn three_cycle() -> Framework {
    build(&["A", "B", "C"], &[("A", "B"), ("B", "C"), ("C", "A")])
}

/// `A → B → C ⇄ D`.
pub fn simple4() -> Framework {
    build(
        &["A", "B", "C", "D"],
        &[("A", "B"), ("B", "C"), ("C", "D"), ("D", "C")],
    )
}

/// `A ⇄ B`, both attacking `C`, and `C → D`: `D` is accepted in every
/// preferred extension without being grounded.
pub fn floating() -> Framework {
    build(
        &["A", "B", "C", "D"],
        &[("A", "B"), ("B", "A"), ("A", "C"), ("B", "C"), ("C", "D")],
    )
}

pub fn empty() -> Framework {
    build(&[], &[])
}

/// A single self-attacking argument.
pub fn self_attack() -> Framework {
    build(&["A"], &[("A", "A")])
}

/// Every fixture, in a fixed order.
pub fn all() -> Vec<Framework> {
    vec![
        chain(),
        three_cycle(),
        simple4(),
        floating(),
        empty(),
        self_attack(),
    ]
}

/// Fixtures paired with short file-friendly names.
pub fn named() -> Vec<(&'static str, Framework)> {
    vec![
        ("chain", chain()),
        ("cycle3", three_cycle()),
        ("simple4", simple4()),
        ("float", floating()),
        ("empty", empty()),
        ("self", self_attack()),
    ]
}
