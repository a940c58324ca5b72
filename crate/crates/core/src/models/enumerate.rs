//! Bounded enumeration of the closed elements of a presented model:
//! well-typed application trees up to a depth, deduplicated by normal
//! form. The result is an explicit under-approximation of element
//! equality; two listed terms are distinct normal forms, never provably
//! equal within the bound.

use super::Presentation;
use crate::kernel::{Arg, Kind, Telescope, Term};
use crate::theory::rewrite::normalize;
use crate::theory::{Checker, EqualityVerdict, Theory};

/// Enumerate closed terms of the given kind in a context, keeping those
/// whose type matches `want_ty` (for terms) up to definitional equality.
pub fn enumerate_elements(
    p: &Presentation,
    kind: Kind,
    ctx: &Telescope,
    want_ty: Option<&Term>,
    depth: usize,
    fuel: u64,
) -> Vec<Term> {
    let lang = p.lang();
    let candidates = raw_terms(&lang, ctx.len(), depth);
    let checker = Checker::with_fuel(&lang, fuel);
    let mut seen: Vec<Term> = Vec::new();
    for c in candidates {
        let j = match checker.infer(ctx, &c) {
            Ok(j) => j,
            Err(_) => continue,
        };
        if j.kind != kind {
            continue;
        }
        if let Some(want) = want_ty {
            match &j.ty {
                Some(ty) => match crate::theory::equal(&lang, ty, want, fuel) {
                    EqualityVerdict::Yes { .. } => {}
                    _ => continue,
                },
                None => continue,
            }
        }
        let nf = normalize(&lang, &c, fuel);
        if nf.exhausted {
            continue;
        }
        if !seen.contains(&nf.term) {
            seen.push(nf.term);
        }
    }
    seen
}

/// All application trees over the signature up to `depth`, with variables
/// from a context of length `ctx_len`. Binder arguments reuse the same
/// pool one level down.
fn raw_terms(theory: &Theory, ctx_len: usize, depth: usize) -> Vec<Term> {
    let mut pool: Vec<Vec<Term>> = Vec::new(); // by depth
    let mut level0: Vec<Term> = (0..ctx_len).map(Term::Var).collect();
    for ((sym, _arity), decl) in &theory.symbols {
        if decl.args.is_empty() {
            level0.push(Term::App(*sym, vec![]));
        }
    }
    pool.push(level0);
    for d in 1..=depth {
        let mut next = pool[d - 1].clone();
        let prev = &pool[d - 1];
        for ((sym, arity), decl) in &theory.symbols {
            if *arity == 0 {
                continue;
            }
            // cartesian products get big fast; cap the fan-out
            let mut combos: Vec<Vec<Arg>> = vec![vec![]];
            for (binders, _kind) in &decl.args {
                let mut slot: Vec<Term> = prev.iter().map(|c| lift_into(c, *binders)).collect();
                for v in 0..*binders {
                    slot.push(Term::Var(v));
                }
                let mut grown = Vec::new();
                for c in &combos {
                    for cand in &slot {
                        let mut c2 = c.clone();
                        c2.push(Arg::new(*binders, cand.clone()));
                        grown.push(c2);
                        if grown.len() > 4096 {
                            break;
                        }
                    }
                    if grown.len() > 4096 {
                        break;
                    }
                }
                combos = grown;
            }
            for c in combos {
                next.push(Term::App(*sym, c));
                if next.len() > 20_000 {
                    break;
                }
            }
        }
        next.sort_by_key(|t| format!("{}", t));
        next.dedup();
        pool.push(next);
    }
    pool.pop().unwrap()
}

fn lift_into(t: &Term, binders: usize) -> Term {
    // candidates built over the ambient may also be used under binders;
    // additionally expose the innermost new variable
    if binders == 0 {
        t.clone()
    } else {
        crate::kernel::lift(t, binders, 0)
    }
}

/// Variants of a candidate that use the binder variables: for enumeration
/// under binders we also try the bound variables themselves.
pub fn binder_variants(binders: usize) -> Vec<Term> {
    (0..binders).map(Term::Var).collect()
}
