//! Pointwise examples: inference shapes, theory-file imports, free
//! extension, and the equality verdict on endpoint constants.

use intt_core::kernel::{Arg, Kind, Telescope, Term};
use intt_core::models::{present, Generator, Presentation};
use intt_core::stdlib::builtin;
use intt_core::surface::{parse_term, parse_theory};
use intt_core::theory::{equal, Checker, EqualityVerdict};

const FUEL: u64 = 10_000;

#[test]
fn left_infers_at_the_interval() {
    let t = builtin("I").unwrap();
    let checker = Checker::with_fuel(&t, FUEL);
    let j = checker
        .infer(&Telescope::empty(), &Term::sym("left", vec![]))
        .unwrap();
    assert_eq!(j.kind, Kind::Tm);
    assert_eq!(j.ty, Some(Term::sym("I", vec![])));
}

#[test]
fn refl_candidate_infers_a_path_between_the_variable_and_itself() {
    // in context (A type gen, a : A): path(A, \x. a) : a ~> a
    let base = builtin("coe1+HPath").unwrap();
    let t = intt_core::constructions::interval::with_ty_gens(&base, &["Ag"]);
    let ctx = Telescope::new(vec![Term::sym("Ag", vec![])]);
    let refl_candidate = parse_term("path(Ag, \\x. a)", &["a"]).unwrap();
    let checker = Checker::with_fuel(&t, FUEL);
    let j = checker.infer(&ctx, &refl_candidate).unwrap();
    let want = Term::sym(
        "~>",
        vec![Arg::plain(Term::var(0)), Arg::plain(Term::var(0))],
    );
    match equal(&t, &j.ty.unwrap(), &want, FUEL) {
        EqualityVerdict::Yes { .. } => {}
        v => panic!("{:?}", v),
    }
}

#[test]
fn ill_arity_terms_are_rejected() {
    let t = builtin("sq").unwrap();
    let checker = Checker::with_fuel(&t, FUEL);
    let bad = Term::sym("sq", vec![Arg::plain(Term::sym("left", vec![]))]);
    assert!(checker.infer(&Telescope::empty(), &bad).is_err());
}

#[test]
fn check_rejects_a_wrong_constructor_type() {
    let t = builtin("coe1+HPath").unwrap();
    let checker = Checker::with_fuel(&t, FUEL);
    // left : I, not left ~> left
    let want = Term::sym(
        "~>",
        vec![
            Arg::plain(Term::sym("left", vec![])),
            Arg::plain(Term::sym("left", vec![])),
        ],
    );
    assert!(checker
        .check(&Telescope::empty(), &Term::sym("left", vec![]), &want)
        .is_err());
    assert!(checker
        .check(&Telescope::empty(), &Term::sym("left", vec![]), &Term::sym("I", vec![]))
        .is_ok());
}

#[test]
fn importing_two_theories_equals_their_combination() {
    let file = "theory both\nimport coe1\nimport sq";
    let parsed = parse_theory(file).unwrap();
    let combined = builtin("coe1+sq").unwrap();
    assert_eq!(parsed.symbols, combined.symbols);
    assert_eq!(parsed.rules.len(), combined.rules.len());
    assert_eq!(parsed.equations.len(), combined.equations.len());
}

#[test]
fn empty_theory_file_parses() {
    let parsed = parse_theory("theory nothing").unwrap();
    assert!(parsed.symbols.is_empty());
}

#[test]
fn free_extension_rereads_generators_over_a_larger_base() {
    let small = builtin("I").unwrap();
    let big = builtin("coe1+HPath").unwrap();
    let p = present(
        "pts",
        small,
        vec![
            Generator {
                name: "Pt".into(),
                kind: Kind::Ty,
                context: vec![],
                ty: None,
            },
            Generator {
                name: "pt".into(),
                kind: Kind::Tm,
                context: vec![],
                ty: Some(Term::sym("Pt", vec![])),
            },
        ],
        vec![],
        FUEL,
    )
    .unwrap();
    let q = p.free_extension(&big).unwrap();
    assert_eq!(q.generators.len(), p.generators.len());
    q.validate(FUEL).unwrap();
    // identity extension
    let same = p.free_extension(&builtin("I").unwrap()).unwrap();
    assert_eq!(same.generators, p.generators);
    // symbol clash is rejected
    let clash = Presentation {
        name: "clash".into(),
        base: builtin("I").unwrap(),
        generators: vec![Generator {
            name: "coe1".into(),
            kind: Kind::Ty,
            context: vec![Term::sym("I", vec![]), Term::sym("I", vec![]), Term::sym("I", vec![])],
            ty: None,
        }],
        relations: vec![],
    };
    assert!(clash.free_extension(&big).is_err());
}

#[test]
fn distinct_endpoints_are_definitely_unequal() {
    let t = builtin("I").unwrap();
    match equal(
        &t,
        &Term::sym("left", vec![]),
        &Term::sym("right", vec![]),
        FUEL,
    ) {
        EqualityVerdict::No { .. } => {}
        v => panic!("{:?}", v),
    }
}
