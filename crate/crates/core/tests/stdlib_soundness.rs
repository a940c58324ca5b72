//! Typed validation of the whole registry: every typing rule's generic
//! instance typechecks, every equation has well-typed sides of equal sort,
//! and every oriented equation holds on its schematic instance.

use intt_core::stdlib::TheoryRegistry;
use intt_core::theory::generic::{validate_equation_typed, validate_rule_typed};

const FUEL: u64 = 10_000;

#[test]
fn every_rule_of_every_registered_theory_typechecks_generically() {
    let reg = TheoryRegistry::standard().unwrap();
    let mut checked = 0;
    for (name, theory) in reg.iter() {
        for rule in &theory.rules {
            validate_rule_typed(theory, rule, FUEL)
                .unwrap_or_else(|e| panic!("{}: {}", name, e));
            checked += 1;
        }
    }
    assert!(checked > 100, "expected many rules, saw {}", checked);
}

#[test]
fn every_equation_of_every_registered_theory_holds_schematically() {
    let reg = TheoryRegistry::standard().unwrap();
    let mut checked = 0;
    for (name, theory) in reg.iter() {
        for eq in &theory.equations {
            validate_equation_typed(theory, eq, FUEL)
                .unwrap_or_else(|e| panic!("{}: {}", name, e));
            checked += 1;
        }
    }
    assert!(checked > 60, "expected many equations, saw {}", checked);
}
