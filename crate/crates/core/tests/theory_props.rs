//! Engine-level properties: subject reduction on schematic instances,
//! determinism of normalization, local confluence sampling over the
//! one-step reducts, and the equivalence laws of the equality verdict.

use intt_core::kernel::{Telescope, Term};
use intt_core::stdlib::{builtin, TheoryRegistry};
use intt_core::theory::generic::{generify_metas, identity_translate, subject_reduction_probe};
use intt_core::theory::pat::{instantiate, match_pat};
use intt_core::theory::rewrite::{equal, normalize, rewrite_once};
use intt_core::theory::EqualityVerdict;
use intt_core::Theory;

const FUEL: u64 = 10_000;

/// All one-step reducts at every position, the oracle for confluence
/// sampling.
fn all_reducts(theory: &Theory, t: &Term) -> Vec<Term> {
    let mut out = Vec::new();
    if let Term::App(..) = t {
        for eq in &theory.equations {
            let mut b = vec![None; eq.metas.len()];
            if match_pat(t, &eq.lhs, 0, &mut b) {
                if let Ok(next) = instantiate(&eq.rhs, &b, &vec![None; eq.metas.len()], 0) {
                    out.push(next);
                }
            }
        }
    }
    if let Term::App(s, args) = t {
        for (j, a) in args.iter().enumerate() {
            for inner in all_reducts(theory, &a.term) {
                let mut next = args.clone();
                next[j].term = inner;
                out.push(Term::App(*s, next));
            }
        }
    }
    out
}

/// Generic instances of every equation's left side, per theory.
fn schematic_instances(theory: &Theory) -> Vec<Term> {
    let mut out = Vec::new();
    for eq in &theory.equations {
        let mut scratch = theory.clone();
        if let Ok(inst) = generify_metas(&eq.metas, None, "sr", &identity_translate, &mut scratch) {
            if let Ok(lhs) = instantiate(&eq.lhs, &inst.bindings, &inst.tys, 0) {
                out.push(lhs);
            }
        }
    }
    out
}

#[test]
fn subject_reduction_on_schematic_instances() {
    let reg = TheoryRegistry::standard().unwrap();
    for (name, theory) in reg.iter() {
        for eq in &theory.equations {
            let mut scratch = theory.clone();
            let inst =
                generify_metas(&eq.metas, None, "sr", &identity_translate, &mut scratch).unwrap();
            // assumed premises enter as rewrites
            for (k, ep) in eq.eq_premises.iter().enumerate() {
                let (tele, lhs, rhs) =
                    intt_core::theory::generic::instantiate_eq_premise(ep, &inst).unwrap();
                intt_core::theory::generic::add_premise_equation(
                    &mut scratch,
                    &format!("sr{}", k),
                    ep.binders,
                    &tele,
                    &lhs,
                    &rhs,
                )
                .unwrap();
            }
            let lhs = instantiate(&eq.lhs, &inst.bindings, &inst.tys, 0).unwrap();
            subject_reduction_probe(&scratch, &Telescope::empty(), &lhs, FUEL)
                .unwrap_or_else(|e| panic!("{}/{}: {}", name, eq.name, e));
        }
    }
}

#[test]
fn normalization_is_deterministic() {
    let theory = builtin("coe1+sigma+sq+HPath+Path").unwrap();
    for t in schematic_instances(&theory) {
        let a = normalize(&theory, &t, FUEL);
        let b = normalize(&theory, &t, FUEL);
        assert_eq!(a.term, b.term);
        assert_eq!(a.steps, b.steps);
    }
}

#[test]
fn local_confluence_sampling() {
    // every one-step reduct of every schematic equation instance rejoins
    // the chosen normal form within the sampling budget
    let reg = TheoryRegistry::standard().unwrap();
    for (name, theory) in reg.iter() {
        // the schematic instances live in extended scratch theories
        for eq in &theory.equations {
            let mut scratch = theory.clone();
            let inst =
                generify_metas(&eq.metas, None, "cf", &identity_translate, &mut scratch).unwrap();
            for (k, ep) in eq.eq_premises.iter().enumerate() {
                let (tele, lhs, rhs) =
                    intt_core::theory::generic::instantiate_eq_premise(ep, &inst).unwrap();
                intt_core::theory::generic::add_premise_equation(
                    &mut scratch,
                    &format!("cf{}", k),
                    ep.binders,
                    &tele,
                    &lhs,
                    &rhs,
                )
                .unwrap();
            }
            let lhs = instantiate(&eq.lhs, &inst.bindings, &inst.tys, 0).unwrap();
            let canonical = normalize(&scratch, &lhs, 200);
            if canonical.exhausted {
                continue;
            }
            for reduct in all_reducts(&scratch, &lhs) {
                let other = normalize(&scratch, &reduct, 200);
                assert!(
                    !other.exhausted && other.term == canonical.term,
                    "{}/{}: reduct diverges:\n{}\nvs\n{}",
                    name,
                    eq.name,
                    other.term,
                    canonical.term
                );
            }
        }
    }
}

#[test]
fn sq_right_left_joins_from_both_rules() {
    let theory = builtin("sq").unwrap();
    let t = Term::sym(
        "sq",
        vec![
            intt_core::kernel::Arg::plain(Term::sym("right", vec![])),
            intt_core::kernel::Arg::plain(Term::sym("left", vec![])),
        ],
    );
    let reducts = all_reducts(&theory, &t);
    assert!(reducts.len() >= 2, "both sq rules apply");
    let nf = normalize(&theory, &t, 100).term;
    for r in reducts {
        assert_eq!(normalize(&theory, &r, 100).term, nf);
    }
    assert_eq!(nf, Term::sym("left", vec![]));
}

#[test]
fn equality_verdict_is_an_equivalence_on_yes() {
    let theory = builtin("coe1+sigma+sq+HPath+Path").unwrap();
    let instances = schematic_instances(&theory);
    for t in &instances {
        // reflexive with zero steps
        match equal(&theory, t, t, FUEL) {
            EqualityVerdict::Yes { steps } => assert_eq!(steps, 0),
            v => panic!("not reflexive: {:?}", v),
        }
    }
    // symmetric and transitive through normal forms
    for t in instances.iter().take(8) {
        let nf = normalize(&theory, t, FUEL).term;
        assert!(matches!(
            equal(&theory, t, &nf, FUEL),
            EqualityVerdict::Yes { .. }
        ));
        assert!(matches!(
            equal(&theory, &nf, t, FUEL),
            EqualityVerdict::Yes { .. }
        ));
        // transitivity: t = nf and nf = nf' implies t = nf'
        let nf2 = normalize(&theory, &nf, FUEL).term;
        assert!(matches!(
            equal(&theory, t, &nf2, FUEL),
            EqualityVerdict::Yes { .. }
        ));
    }
}

#[test]
fn rewrite_once_restarts_at_the_root() {
    // the constant-family rule fires only after the inner connection
    // reduces, exercising the outermost-retry strategy
    let theory = builtin("coe0+sigma+sq").unwrap();
    let t = {
        use intt_core::kernel::Arg;
        let a = Term::sym("gA", vec![]);
        let mut th = theory.clone();
        th.declare("gA", vec![], intt_core::kernel::Kind::Ty);
        th.declare("ga", vec![], intt_core::kernel::Kind::Tm);
        let _ = th;
        // coe0(\i. D(sq(i, left)), d) with D a one-binder family standing
        // for dependence that disappears
        let fam = Term::sym(
            "sq",
            vec![Arg::plain(Term::var(0)), Arg::plain(Term::sym("left", vec![]))],
        );
        let _ = a;
        Term::sym("coe0", vec![Arg::new(1, fam), Arg::plain(Term::sym("left", vec![]))])
    };
    // first applicable step is the inner sq reduction, after which the
    // sigma rule fires at the root
    let (after_one, rule1) = rewrite_once(&theory, &t).unwrap();
    assert_eq!(rule1, "sq-i-left");
    let (after_two, rule2) = rewrite_once(&theory, &after_one).unwrap();
    assert_eq!(rule2, "sigma-coe0");
    assert_eq!(after_two, Term::sym("left", vec![]));
}
