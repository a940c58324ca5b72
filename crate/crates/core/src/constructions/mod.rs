//! Derived terms and theory morphisms: the generic morphism checker, the
//! arrows of the theory diagram, connections and fillers, square algebra,
//! and the weak-univalence retraction.

pub mod diagram;
pub mod interval;
pub mod univalence;

pub use diagram::diagram;
pub use interval::{
    derive_interval_op, fill_from_coe, path_algebra, square_type, squares_eq, CoeKit,
    EquivalenceData, IntervalOp, PathOp,
};
pub use univalence::{homotopy_family, psi, univalence_maps, UnivalenceData};

use crate::kernel::{Arg, Telescope, Term};
use crate::theory::generic::{add_premise_equation, instantiate_eq_premise, generify_metas};
use crate::theory::pat::{instantiate, Binding, Pat};
use crate::theory::rewrite::{equal, EqualityVerdict};
use crate::theory::{Checker, SymKey, Theory};
use std::collections::BTreeMap;

/// A symbol-to-derived-term assignment between theories, with definitional
/// and propositional obligations.
#[derive(Debug, Clone)]
pub struct TheoryMorphism {
    pub name: String,
    pub source: Theory,
    pub target: Theory,
    /// Image of each translated symbol: a schematic term over the symbol's
    /// argument metas. Symbols shared with the target map to themselves.
    pub assignment: BTreeMap<SymKey, Pat>,
    /// Witness terms for propositional obligations, keyed by source
    /// equation name. Witnesses are target-side schematic terms over the
    /// equation's metas.
    pub witnesses: BTreeMap<String, Pat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObligationKind {
    Typing,
    Definitional,
    Propositional,
}

impl ObligationKind {
    pub fn word(&self) -> &'static str {
        match self {
            ObligationKind::Typing => "typing",
            ObligationKind::Definitional => "definitional",
            ObligationKind::Propositional => "propositional",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
    Error,
}

impl Verdict {
    pub fn word(&self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
            Verdict::Error => "error",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Obligation {
    pub id: String,
    pub kind: ObligationKind,
    pub verdict: Verdict,
    pub steps: u64,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct MorphismReport {
    pub morphism: String,
    pub obligations: Vec<Obligation>,
}

impl MorphismReport {
    pub fn ok(&self) -> bool {
        self.obligations.iter().all(|o| o.verdict == Verdict::Yes)
    }

    pub fn has_unknown(&self) -> bool {
        self.obligations
            .iter()
            .any(|o| o.verdict == Verdict::Unknown)
    }
}

impl TheoryMorphism {
    pub fn new(name: &str, source: Theory, target: Theory) -> TheoryMorphism {
        TheoryMorphism {
            name: name.into(),
            source,
            target,
            assignment: BTreeMap::new(),
            witnesses: BTreeMap::new(),
        }
    }

    pub fn identity(theory: &Theory) -> TheoryMorphism {
        TheoryMorphism::new(
            &format!("id_{}", theory.name),
            theory.clone(),
            theory.clone(),
        )
    }

    /// Map a symbol to a schematic image over its argument metas.
    pub fn map(&mut self, name: &str, arity: usize, image: Pat) -> &mut Self {
        self.assignment
            .insert((crate::kernel::SymbolId::intern(name), arity), image);
        self
    }

    pub fn witness(&mut self, rule: &str, term: Pat) -> &mut Self {
        self.witnesses.insert(rule.into(), term);
        self
    }

    /// Translate a term symbol-wise. `scratch` provides typing for the
    /// inference needed by `ty(..)` positions in assignment images; `ctx`
    /// is the target-side context of `t`.
    pub fn translate(
        &self,
        scratch: &Theory,
        ctx: &Telescope,
        t: &Term,
        fuel: u64,
    ) -> Result<Term, String> {
        match t {
            Term::Var(i) => Ok(Term::Var(*i)),
            Term::App(s, args) => {
                let key = (*s, args.len());
                // Translate arguments first, tracking their contexts via
                // the source typing rule when there is one. Bindings hold
                // translated values; instantiating source schemas with
                // them yields mixed terms that a further translation pass
                // normalizes (remaining source symbols get mapped, target
                // symbols pass through).
                let rule = self.source.rule_for(key);
                let n = args.len();
                let mut targs: Vec<Arg> = vec![Arg::plain(Term::Var(0)); n];
                let mut bindings: Vec<Option<Binding>> = vec![None; n];
                let mut tys: Vec<Option<Term>> = vec![None; n];
                let order: Vec<usize> = rule
                    .and_then(|r| r.order.clone())
                    .unwrap_or_else(|| (0..n).collect());
                for j in order {
                    let arg = &args[j];
                    let mut ext = ctx.clone();
                    if let Some(r) = rule {
                        let meta = &r.metas[j];
                        for (d, entry) in meta.telescope.iter().enumerate() {
                            let src_entry =
                                instantiate(entry, &bindings, &tys, d).map_err(|e| e.to_string())?;
                            let tgt_entry = self.translate(scratch, &ext, &src_entry, fuel)?;
                            ext.push(tgt_entry);
                        }
                    }
                    let translated = self.translate(scratch, &ext, &arg.term, fuel)?;
                    if let Some(r) = rule {
                        let meta = &r.metas[j];
                        tys[j] = match &meta.expected {
                            Some(exp) => {
                                let src = instantiate(exp, &bindings, &tys, meta.binders)
                                    .map_err(|e| e.to_string())?;
                                Some(self.translate(scratch, &ext, &src, fuel)?)
                            }
                            None if meta.kind == crate::kernel::Kind::Tm => {
                                let checker = Checker::with_fuel(scratch, fuel);
                                match checker.infer(&ext, &translated) {
                                    Ok(j2) => j2.ty,
                                    Err(_) => None,
                                }
                            }
                            None => None,
                        };
                    }
                    bindings[j] = Some(Binding {
                        binders: arg.binders,
                        value: translated.clone(),
                    });
                    targs[j] = Arg::new(arg.binders, translated);
                }
                match self.assignment.get(&key) {
                    None => Ok(Term::App(*s, targs)),
                    Some(image) => {
                        instantiate(image, &bindings, &tys, 0).map_err(|e| e.to_string())
                    }
                }
            }
        }
    }
}

/// Verify every rule and equation of the source under the morphism:
/// typing rules translate to derivable judgments, equations to
/// definitional equalities (or witnessed propositional ones).
pub fn check_theory_morphism(m: &TheoryMorphism, fuel: u64) -> MorphismReport {
    let mut obligations = Vec::new();

    for rule in &m.source.rules {
        let id = format!("{}/rule/{}", m.name, rule.symbol);
        obligations.push(check_rule_obligation(m, rule, &id, fuel));
    }
    for eq in &m.source.equations {
        let id = format!("{}/eq/{}", m.name, eq.name);
        obligations.push(check_equation_obligation(m, eq, &id, fuel));
    }

    MorphismReport {
        morphism: m.name.clone(),
        obligations,
    }
}

fn check_rule_obligation(
    m: &TheoryMorphism,
    rule: &crate::theory::TypingRule,
    id: &str,
    fuel: u64,
) -> Obligation {
    let fail = |detail: String| Obligation {
        id: id.into(),
        kind: ObligationKind::Typing,
        verdict: Verdict::Error,
        steps: 0,
        detail,
    };
    let mut scratch = m.target.clone();
    let hook = |scratch: &Theory, ctx: &Telescope, t: &Term| m.translate(scratch, ctx, t, fuel);
    let inst = match generify_metas(
        &rule.metas,
        rule.order.as_deref(),
        &format!("m_{}", rule.symbol),
        &hook,
        &mut scratch,
    ) {
        Ok(i) => i,
        Err(e) => return fail(e),
    };
    for (k, ep) in rule.eq_premises.iter().enumerate() {
        let (tele_src, lhs_src, rhs_src) = match instantiate_eq_premise(ep, &inst) {
            Ok(x) => x,
            Err(e) => return fail(e),
        };
        let mut tele_tgt: Vec<Term> = Vec::new();
        for e in &tele_src {
            let ctx = Telescope::new(tele_tgt.clone());
            match m.translate(&scratch, &ctx, e, fuel) {
                Ok(t) => tele_tgt.push(t),
                Err(e) => return fail(e),
            }
        }
        let ctx = Telescope::new(tele_tgt.clone());
        let lhs = match m.translate(&scratch, &ctx, &lhs_src, fuel) {
            Ok(t) => t,
            Err(e) => return fail(e),
        };
        let rhs = match m.translate(&scratch, &ctx, &rhs_src, fuel) {
            Ok(t) => t,
            Err(e) => return fail(e),
        };
        if let Err(e) = add_premise_equation(
            &mut scratch,
            &format!("{}$pre{}", id, k),
            ep.binders,
            &tele_tgt,
            &lhs,
            &rhs,
        ) {
            return fail(e);
        }
    }
    // translated conclusion must typecheck at the translated result type
    let args: Vec<Arg> = rule
        .metas
        .iter()
        .zip(inst.bindings.iter())
        .map(|(md, b)| Arg::new(md.binders, b.as_ref().unwrap().value.clone()))
        .collect();
    let conclusion_src = Term::App(rule.symbol, args);
    let ctx = Telescope::empty();
    let conclusion = match m.translate(&scratch, &ctx, &conclusion_src, fuel) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    let checker = Checker::with_fuel(&scratch, fuel);
    let result = match &rule.result_ty {
        None => checker.check_is_type(&ctx, &conclusion).map_err(|e| e.to_string()),
        Some(rt) => {
            let want_src = match instantiate(rt, &inst.bindings, &inst.tys, 0) {
                Ok(t) => t,
                Err(e) => return fail(e.to_string()),
            };
            match m.translate(&scratch, &ctx, &want_src, fuel) {
                Ok(want) => checker
                    .check(&ctx, &conclusion, &want)
                    .map_err(|e| e.to_string()),
                Err(e) => Err(e),
            }
        }
    };
    match result {
        Ok(()) => Obligation {
            id: id.into(),
            kind: ObligationKind::Typing,
            verdict: Verdict::Yes,
            steps: 0,
            detail: String::new(),
        },
        Err(e) => Obligation {
            id: id.into(),
            kind: ObligationKind::Typing,
            verdict: Verdict::No,
            steps: 0,
            detail: e,
        },
    }
}

fn check_equation_obligation(
    m: &TheoryMorphism,
    eq: &crate::theory::RewriteRule,
    id: &str,
    fuel: u64,
) -> Obligation {
    let witness = m.witnesses.get(&eq.name);
    let kind = if witness.is_some() {
        ObligationKind::Propositional
    } else {
        ObligationKind::Definitional
    };
    let fail = |detail: String| Obligation {
        id: id.into(),
        kind,
        verdict: Verdict::Error,
        steps: 0,
        detail,
    };
    let mut scratch = m.target.clone();
    let hook = |scratch: &Theory, ctx: &Telescope, t: &Term| m.translate(scratch, ctx, t, fuel);
    let inst = match generify_metas(&eq.metas, None, &format!("m_{}", eq.name), &hook, &mut scratch)
    {
        Ok(i) => i,
        Err(e) => return fail(e),
    };
    for (k, ep) in eq.eq_premises.iter().enumerate() {
        let (tele_src, lhs_src, rhs_src) = match instantiate_eq_premise(ep, &inst) {
            Ok(x) => x,
            Err(e) => return fail(e),
        };
        let mut tele_tgt: Vec<Term> = Vec::new();
        for e in &tele_src {
            let ctx = Telescope::new(tele_tgt.clone());
            match m.translate(&scratch, &ctx, e, fuel) {
                Ok(t) => tele_tgt.push(t),
                Err(e) => return fail(e),
            }
        }
        let ctx = Telescope::new(tele_tgt.clone());
        let lhs = match m.translate(&scratch, &ctx, &lhs_src, fuel) {
            Ok(t) => t,
            Err(e) => return fail(e),
        };
        let rhs = match m.translate(&scratch, &ctx, &rhs_src, fuel) {
            Ok(t) => t,
            Err(e) => return fail(e),
        };
        if let Err(e) = add_premise_equation(
            &mut scratch,
            &format!("{}$pre{}", id, k),
            ep.binders,
            &tele_tgt,
            &lhs,
            &rhs,
        ) {
            return fail(e);
        }
    }
    let ctx = Telescope::empty();
    let lhs_src = match instantiate(&eq.lhs, &inst.bindings, &inst.tys, 0) {
        Ok(t) => t,
        Err(e) => return fail(e.to_string()),
    };
    let rhs_src = match instantiate(&eq.rhs, &inst.bindings, &inst.tys, 0) {
        Ok(t) => t,
        Err(e) => return fail(e.to_string()),
    };
    let lhs = match m.translate(&scratch, &ctx, &lhs_src, fuel) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    let rhs = match m.translate(&scratch, &ctx, &rhs_src, fuel) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };

    match witness {
        None => match equal(&scratch, &lhs, &rhs, fuel) {
            EqualityVerdict::Yes { steps } => Obligation {
                id: id.into(),
                kind,
                verdict: Verdict::Yes,
                steps,
                detail: String::new(),
            },
            EqualityVerdict::No { left_nf, right_nf } => Obligation {
                id: id.into(),
                kind,
                verdict: Verdict::No,
                steps: 0,
                detail: format!("{} != {}", left_nf, right_nf),
            },
            EqualityVerdict::Unknown { spent } => Obligation {
                id: id.into(),
                kind,
                verdict: Verdict::Unknown,
                steps: spent,
                detail: "fuel exhausted".into(),
            },
        },
        Some(wpat) => {
            // the witness must typecheck at the path (or Id) statement of
            // the source equation
            let stmt = if m.target.has_symbol("~>", 2) {
                Term::sym("~>", vec![Arg::plain(lhs), Arg::plain(rhs)])
            } else if m.target.has_symbol("Id", 2) {
                Term::sym("Id", vec![Arg::plain(lhs), Arg::plain(rhs)])
            } else {
                return fail("target has no path or Id type for a propositional witness".into());
            };
            let w = match instantiate(wpat, &inst.bindings, &inst.tys, 0) {
                Ok(t) => t,
                Err(e) => return fail(e.to_string()),
            };
            let checker = Checker::with_fuel(&scratch, fuel);
            match checker.check(&ctx, &w, &stmt) {
                Ok(()) => Obligation {
                    id: id.into(),
                    kind,
                    verdict: Verdict::Yes,
                    steps: 0,
                    detail: String::new(),
                },
                Err(e) => Obligation {
                    id: id.into(),
                    kind,
                    verdict: Verdict::No,
                    steps: 0,
                    detail: e.to_string(),
                },
            }
        }
    }
}

/// Check that translating a generic instance of each `symbols` entry
/// forward along `there` and back along `back` reduces to the instance
/// itself. Used for the isomorphism pairs of the diagram.
pub fn check_roundtrip(
    there: &TheoryMorphism,
    back: &TheoryMorphism,
    symbols: &[(&str, usize)],
    fuel: u64,
) -> MorphismReport {
    let mut obligations = Vec::new();
    for (name, arity) in symbols {
        let id = format!("roundtrip/{}<->{}/{}", there.name, back.name, name);
        let fail = |detail: String| Obligation {
            id: id.clone(),
            kind: ObligationKind::Definitional,
            verdict: Verdict::Error,
            steps: 0,
            detail,
        };
        let key = (crate::kernel::SymbolId::intern(name), *arity);
        let rule = match there.source.rule_for(key) {
            Some(r) => r.clone(),
            None => {
                obligations.push(fail("no rule".into()));
                continue;
            }
        };
        let mut scratch = there.source.clone();
        let inst = match generify_metas(
            &rule.metas,
            rule.order.as_deref(),
            &format!("rt_{}", name),
            &generic::identity_translate,
            &mut scratch,
        ) {
            Ok(i) => i,
            Err(e) => {
                obligations.push(fail(e));
                continue;
            }
        };
        let args: Vec<Arg> = rule
            .metas
            .iter()
            .zip(inst.bindings.iter())
            .map(|(md, b)| Arg::new(md.binders, b.as_ref().unwrap().value.clone()))
            .collect();
        let instance = Term::App(rule.symbol, args);
        let ctx = Telescope::empty();
        // scratch theories for translation carry the generators so image
        // inference can see them
        let mut scratch_there = there.target.clone();
        let mut scratch_back = back.target.clone();
        for gname in &inst.gens {
            let gid = crate::kernel::SymbolId::intern(gname);
            for ((s2, a2), d) in scratch.symbols.iter() {
                if *s2 == gid {
                    scratch_there.symbols.insert((*s2, *a2), d.clone());
                    scratch_back.symbols.insert((*s2, *a2), d.clone());
                }
            }
            for r in &scratch.rules {
                if r.symbol == gid {
                    scratch_there.add_rule(r.clone());
                    scratch_back.add_rule(r.clone());
                }
            }
        }
        let once = match there.translate(&scratch_there, &ctx, &instance, fuel) {
            Ok(t) => t,
            Err(e) => {
                obligations.push(fail(e));
                continue;
            }
        };
        let twice = match back.translate(&scratch_back, &ctx, &once, fuel) {
            Ok(t) => t,
            Err(e) => {
                obligations.push(fail(e));
                continue;
            }
        };
        match equal(&scratch, &twice, &instance, fuel) {
            EqualityVerdict::Yes { steps } => obligations.push(Obligation {
                id,
                kind: ObligationKind::Definitional,
                verdict: Verdict::Yes,
                steps,
                detail: String::new(),
            }),
            EqualityVerdict::No { left_nf, right_nf } => obligations.push(Obligation {
                id,
                kind: ObligationKind::Definitional,
                verdict: Verdict::No,
                steps: 0,
                detail: format!("{} != {}", left_nf, right_nf),
            }),
            EqualityVerdict::Unknown { spent } => obligations.push(Obligation {
                id,
                kind: ObligationKind::Definitional,
                verdict: Verdict::Unknown,
                steps: spent,
                detail: "fuel exhausted".into(),
            }),
        }
    }
    MorphismReport {
        morphism: format!("roundtrip {} / {}", there.name, back.name),
        obligations,
    }
}

use crate::theory::generic;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stdlib::builtin;

    #[test]
    fn identity_morphism_passes_trivially() {
        for name in ["I", "coe1", "sq", "HPath", "coe2+beta2"] {
            let t = builtin(name).unwrap();
            let m = TheoryMorphism::identity(&t);
            let report = check_theory_morphism(&m, 10_000);
            assert!(report.ok(), "{}: {:?}", name, report.obligations);
        }
    }
}
