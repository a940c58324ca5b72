//! Schematic checking: instantiate a rule's premises with fresh generator
//! symbols over a generic telescope. Rules are uniform in the ambient
//! context, so generators are declared as ordinary (context-polymorphic)
//! symbols and one generic instance per rule suffices.

use super::infer::{Checker, TypeError};
use super::pat::{concrete_to_pat, instantiate, Binding, MetaDecl, Pat};
use super::rewrite::{equal, EqualityVerdict};
use super::{EqPremise, RewriteRule, SymbolDecl, Theory, TheoryError, TypingRule};
use crate::kernel::{Arg, Kind, SymbolId, Term};

/// Build the declaration and typing rule of a generator symbol from
/// concrete data: `coord_tys[j]` is the type of coordinate `j`, scoped over
/// the `j` earlier coordinates; `result_ty` (for term generators) is scoped
/// over all of them.
pub fn generator_rule(
    name: &str,
    kind: Kind,
    coord_tys: &[Term],
    result_ty: Option<&Term>,
) -> (SymbolDecl, TypingRule) {
    let n = coord_tys.len();
    let decl = SymbolDecl {
        args: vec![(0, Kind::Tm); n],
        result: kind,
    };
    let metas = coord_tys
        .iter()
        .enumerate()
        .map(|(j, ty)| {
            MetaDecl::tm(
                &format!("x{}", j),
                0,
                vec![],
                Some(concrete_to_pat(ty, j)),
            )
        })
        .collect();
    let rule = TypingRule {
        symbol: SymbolId::intern(name),
        metas,
        eq_premises: vec![],
        result_ty: result_ty.map(|t| concrete_to_pat(t, n)),
        order: None,
    };
    (decl, rule)
}

/// Result of generifying a rule's metavariables.
pub struct GenericInstance {
    /// Eta-expanded bindings: meta j is bound to its generator applied to
    /// the identity spine.
    pub bindings: Vec<Option<Binding>>,
    /// Source-side instantiated expected types (for TyOf resolution).
    pub tys: Vec<Option<Term>>,
    /// Names of the generator symbols introduced.
    pub gens: Vec<String>,
}

/// Translation hook applied to every instantiated premise before it enters
/// the scratch theory; the identity for plain validation, the morphism
/// image for `check_theory_morphism`. The hook receives the scratch theory
/// built so far and the target-side context of the term, so images that
/// need type inference (`ty(a)` positions) can resolve it.
pub type Translate<'a> = &'a dyn Fn(&Theory, &crate::kernel::Telescope, &Term) -> Result<Term, String>;

pub fn identity_translate(
    _scratch: &Theory,
    _ctx: &crate::kernel::Telescope,
    t: &Term,
) -> Result<Term, String> {
    Ok(t.clone())
}

/// Instantiate `metas` with fresh generators inside `scratch`. Generator
/// typing data is passed through `translate`, so the scratch theory stays
/// internally coherent when checking a morphism.
pub fn generify_metas(
    metas: &[MetaDecl],
    order: Option<&[usize]>,
    prefix: &str,
    translate: Translate,
    scratch: &mut Theory,
) -> Result<GenericInstance, String> {
    let mut bindings: Vec<Option<Binding>> = vec![None; metas.len()];
    let mut tys: Vec<Option<Term>> = vec![None; metas.len()];
    let mut gens = Vec::new();

    let sequence: Vec<usize> = match order {
        Some(o) => o.to_vec(),
        None => (0..metas.len()).collect(),
    };
    for j in sequence {
        let m = &metas[j];
        // Coordinate types of this generator, instantiated through the
        // earlier generators and translated.
        let mut coord_src = Vec::with_capacity(m.binders);
        let mut coord_tgt: Vec<Term> = Vec::with_capacity(m.binders);
        for (t, entry) in m.telescope.iter().enumerate() {
            let src = instantiate(entry, &bindings, &tys, t).map_err(|e| e.to_string())?;
            let ctx = crate::kernel::Telescope::new(coord_tgt.clone());
            coord_tgt.push(translate(scratch, &ctx, &src)?);
            coord_src.push(src);
        }

        let eta: Vec<Arg> = (0..m.binders)
            .rev()
            .map(|i| Arg::plain(Term::Var(i)))
            .collect();

        // Determined metas take their stated value instead of a fresh
        // generator; patterns still treat them as free.
        if let Some(gpat) = &m.generic {
            let value = instantiate(gpat, &bindings, &tys, m.binders).map_err(|e| e.to_string())?;
            let src_ty = match &m.expected {
                Some(exp) => {
                    Some(instantiate(exp, &bindings, &tys, m.binders).map_err(|e| e.to_string())?)
                }
                None => None,
            };
            bindings[j] = Some(Binding {
                binders: m.binders,
                value,
            });
            tys[j] = src_ty;
            continue;
        }

        let (src_ty, tgt_ty) = match (&m.kind, &m.expected) {
            (Kind::Ty, _) => (None, None),
            (Kind::Tm, Some(exp)) => {
                let src = instantiate(exp, &bindings, &tys, m.binders).map_err(|e| e.to_string())?;
                let ctx = crate::kernel::Telescope::new(coord_tgt.clone());
                let tgt = translate(scratch, &ctx, &src)?;
                (Some(src), Some(tgt))
            }
            (Kind::Tm, None) => {
                // Inference-directed slot: invent a fresh type generator
                // over the same coordinates.
                let ty_name = format!("{}${}_ty", prefix, m.name);
                let (d, r) = generator_rule(&ty_name, Kind::Ty, &coord_tgt, None);
                scratch.declare(&ty_name, d.args, d.result);
                scratch.add_rule(r);
                gens.push(ty_name.clone());
                let ty_app = Term::sym(&ty_name, eta.clone());
                (Some(ty_app.clone()), Some(ty_app))
            }
            (Kind::Ctx, _) => return Err(format!("context meta {} cannot be generified", m.name)),
        };

        let name = format!("{}${}", prefix, m.name);
        let (decl, rule) = generator_rule(&name, m.kind, &coord_tgt, tgt_ty.as_ref());
        scratch.declare(&name, decl.args, decl.result);
        scratch.add_rule(rule);
        gens.push(name.clone());

        bindings[j] = Some(Binding {
            binders: m.binders,
            value: Term::sym(&name, eta),
        });
        tys[j] = src_ty;
    }

    Ok(GenericInstance { bindings, tys, gens })
}

/// Turn an instantiated equational premise into an oriented rewrite rule on
/// the generators and add it to the scratch theory.
pub fn add_premise_equation(
    scratch: &mut Theory,
    name: &str,
    binders: usize,
    telescope: &[Term],
    lhs: &Term,
    rhs: &Term,
) -> Result<(), String> {
    let metas: Vec<MetaDecl> = (0..binders)
        .map(|t| MetaDecl::tm(&format!("v{}", t), 0, vec![], Some(concrete_to_pat(&telescope[t], t))))
        .collect();
    let lhs_pat = concrete_to_pat(lhs, binders);
    let rhs_pat = concrete_to_pat(rhs, binders);
    let oriented = match (&lhs_pat, &rhs_pat) {
        (Pat::App(..), _) => RewriteRule {
            name: name.into(),
            metas,
            eq_premises: vec![],
            lhs: lhs_pat,
            rhs: rhs_pat,
        },
        (_, Pat::App(..)) => RewriteRule {
            name: name.into(),
            metas,
            eq_premises: vec![],
            lhs: rhs_pat,
            rhs: lhs_pat,
        },
        _ => return Err(format!("premise {} has no rigid side", name)),
    };
    scratch.validate_equation(&oriented).map_err(|e| e.to_string())?;
    scratch.add_equation(oriented);
    Ok(())
}

/// Generify a typing rule over its own theory and check that the generic
/// conclusion typechecks; also checks equational premises are well-typed.
pub fn validate_rule_typed(theory: &Theory, rule: &TypingRule, fuel: u64) -> Result<(), TheoryError> {
    let mut scratch = theory.clone();
    let inst = generify_metas(
        &rule.metas,
        rule.order.as_deref(),
        &format!("v_{}", rule.symbol),
        &identity_translate,
        &mut scratch,
    )
    .map_err(|e| TheoryError::InvalidRule(rule.symbol.name(), e))?;

    for (k, ep) in rule.eq_premises.iter().enumerate() {
        let (tele, lhs, rhs) = instantiate_eq_premise(ep, &inst)
            .map_err(|e| TheoryError::InvalidRule(rule.symbol.name(), e))?;
        add_premise_equation(
            &mut scratch,
            &format!("v_{}$pre{}", rule.symbol, k),
            ep.binders,
            &tele,
            &lhs,
            &rhs,
        )
        .map_err(|e| TheoryError::InvalidRule(rule.symbol.name(), e))?;
    }

    let args: Vec<Arg> = rule
        .metas
        .iter()
        .zip(inst.bindings.iter())
        .map(|(m, b)| Arg::new(m.binders, b.as_ref().unwrap().value.clone()))
        .collect();
    let conclusion = Term::App(rule.symbol, args);
    let checker = Checker::with_fuel(&scratch, fuel);
    let ctx = Default::default();
    match checker.infer(&ctx, &conclusion) {
        Ok(_) => Ok(()),
        Err(e) => Err(TheoryError::InvalidRule(rule.symbol.name(), e.to_string())),
    }
}

pub fn instantiate_eq_premise(
    ep: &EqPremise,
    inst: &GenericInstance,
) -> Result<(Vec<Term>, Term, Term), String> {
    let mut tele = Vec::with_capacity(ep.binders);
    for (t, entry) in ep.telescope.iter().enumerate() {
        tele.push(instantiate(entry, &inst.bindings, &inst.tys, t).map_err(|e| e.to_string())?);
    }
    let lhs = instantiate(&ep.lhs, &inst.bindings, &inst.tys, ep.binders).map_err(|e| e.to_string())?;
    let rhs = instantiate(&ep.rhs, &inst.bindings, &inst.tys, ep.binders).map_err(|e| e.to_string())?;
    Ok((tele, lhs, rhs))
}

/// Generify an equation over its own theory, check both sides are
/// well-typed at the same sort, and check the oriented equality holds.
pub fn validate_equation_typed(
    theory: &Theory,
    eq: &RewriteRule,
    fuel: u64,
) -> Result<(), TheoryError> {
    let mut scratch = theory.clone();
    let inst = generify_metas(&eq.metas, None, &format!("e_{}", eq.name), &identity_translate, &mut scratch)
        .map_err(|e| TheoryError::InvalidEquation(eq.name.clone(), e))?;
    for (k, ep) in eq.eq_premises.iter().enumerate() {
        let (tele, lhs, rhs) = instantiate_eq_premise(ep, &inst)
            .map_err(|e| TheoryError::InvalidEquation(eq.name.clone(), e))?;
        add_premise_equation(
            &mut scratch,
            &format!("e_{}$pre{}", eq.name, k),
            ep.binders,
            &tele,
            &lhs,
            &rhs,
        )
        .map_err(|e| TheoryError::InvalidEquation(eq.name.clone(), e))?;
    }
    let lhs = instantiate(&eq.lhs, &inst.bindings, &inst.tys, 0)
        .map_err(|e| TheoryError::InvalidEquation(eq.name.clone(), e.to_string()))?;
    let rhs = instantiate(&eq.rhs, &inst.bindings, &inst.tys, 0)
        .map_err(|e| TheoryError::InvalidEquation(eq.name.clone(), e.to_string()))?;

    let checker = Checker::with_fuel(&scratch, fuel);
    let ctx = Default::default();
    let jl = checker
        .infer(&ctx, &lhs)
        .map_err(|e| TheoryError::InvalidEquation(eq.name.clone(), format!("lhs: {}", e)))?;
    let jr = checker
        .infer(&ctx, &rhs)
        .map_err(|e| TheoryError::InvalidEquation(eq.name.clone(), format!("rhs: {}", e)))?;
    if jl.kind != jr.kind {
        return Err(TheoryError::InvalidEquation(
            eq.name.clone(),
            format!("sides have different sorts: {} vs {}", jl.kind, jr.kind),
        ));
    }
    if let (Some(tl), Some(tr)) = (&jl.ty, &jr.ty) {
        match equal(&scratch, tl, tr, fuel) {
            EqualityVerdict::Yes { .. } => {}
            v => {
                return Err(TheoryError::InvalidEquation(
                    eq.name.clone(),
                    format!("side types disagree ({})", v.word()),
                ))
            }
        }
    }
    match equal(&scratch, &lhs, &rhs, fuel) {
        EqualityVerdict::Yes { .. } => Ok(()),
        v => Err(TheoryError::InvalidEquation(
            eq.name.clone(),
            format!("schematic instance not equal ({})", v.word()),
        )),
    }
}

/// Subject reduction probe used by the test suites: every rewrite step out
/// of a well-typed generic instance preserves the inferred type.
pub fn subject_reduction_probe(
    theory: &Theory,
    ctx: &crate::kernel::Telescope,
    t: &Term,
    fuel: u64,
) -> Result<(), TypeError> {
    let checker = Checker::with_fuel(theory, fuel);
    let mut current = t.clone();
    let mut j = checker.infer(ctx, &current)?;
    let mut budget = fuel;
    while budget > 0 {
        match super::rewrite::rewrite_once(theory, &current) {
            None => return Ok(()),
            Some((next, _)) => {
                let j2 = checker.infer(ctx, &next)?;
                if let (Some(a), Some(b)) = (&j.ty, &j2.ty) {
                    match equal(theory, a, b, fuel) {
                        EqualityVerdict::Yes { .. } => {}
                        _ => {
                            return Err(TypeError::Mismatch {
                                expected: a.clone(),
                                inferred: b.clone(),
                            })
                        }
                    }
                }
                current = next;
                j = j2;
                budget -= 1;
            }
        }
    }
    Ok(())
}
