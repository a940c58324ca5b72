//! Bidirectional typechecking against a theory's typing rules. Types are
//! compared by bounded normalization; an exhausted budget is reported
//! separately from a genuine mismatch.

use super::pat::{instantiate, Binding, PatError};
use super::rewrite::{equal, EqualityVerdict, DEFAULT_FUEL};
use super::Theory;
use crate::kernel::{Kind, Telescope, Term};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Judgment {
    pub kind: Kind,
    pub level: usize,
    /// Present exactly for term judgments.
    pub ty: Option<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("unbound variable v{0} in context of length {1}")]
    UnboundVar(usize, usize),
    #[error("symbol {0}/{1} is not declared")]
    UnknownSymbol(String, usize),
    #[error("symbol {0} has no typing rule")]
    NoRule(String),
    #[error("argument {arg} of {symbol}: expected {want} binders, found {got}")]
    BinderMismatch {
        symbol: String,
        arg: usize,
        want: usize,
        got: usize,
    },
    #[error("argument {arg} of {symbol}: expected a {want}, found a {got}")]
    KindMismatch {
        symbol: String,
        arg: usize,
        want: Kind,
        got: Kind,
    },
    #[error("type mismatch: expected {expected}, inferred {inferred}")]
    Mismatch { expected: Term, inferred: Term },
    #[error("equality undecided within fuel: {0} vs {1}")]
    UnknownEquality(Term, Term),
    #[error("equational premise of {symbol} failed: {lhs} != {rhs}")]
    PremiseFailed { symbol: String, lhs: Term, rhs: Term },
    #[error("equational premise of {symbol} undecided within fuel")]
    PremiseUnknown { symbol: String },
    #[error("a term was used where a type is required: {0}")]
    TermWhereType(Term),
    #[error("a type was used where a term is required: {0}")]
    TypeWhereTerm(Term),
    #[error("schema instantiation failed: {0}")]
    Schema(#[from] PatError),
}

pub struct Checker<'t> {
    pub theory: &'t Theory,
    pub fuel: u64,
}

impl<'t> Checker<'t> {
    pub fn new(theory: &'t Theory) -> Self {
        Checker {
            theory,
            fuel: DEFAULT_FUEL,
        }
    }

    pub fn with_fuel(theory: &'t Theory, fuel: u64) -> Self {
        Checker { theory, fuel }
    }

    /// Infer the judgment of a term. Returns the unique type up to
    /// definitional equality for term-formers.
    pub fn infer(&self, ctx: &Telescope, t: &Term) -> Result<Judgment, TypeError> {
        match t {
            Term::Var(i) => {
                let ty = ctx
                    .lookup(*i)
                    .ok_or(TypeError::UnboundVar(*i, ctx.len()))?;
                Ok(Judgment {
                    kind: Kind::Tm,
                    level: ctx.len(),
                    ty: Some(ty),
                })
            }
            Term::App(s, args) => {
                let key = (*s, args.len());
                let decl = self
                    .theory
                    .decl(key)
                    .ok_or_else(|| TypeError::UnknownSymbol(s.name(), args.len()))?;
                let rule = self
                    .theory
                    .rule_for(key)
                    .ok_or_else(|| TypeError::NoRule(s.name()))?;

                let n = rule.metas.len();
                let mut bindings: Vec<Option<Binding>> = vec![None; n];
                let mut tys: Vec<Option<Term>> = vec![None; n];

                let order: Vec<usize> = match &rule.order {
                    Some(o) => o.clone(),
                    None => (0..n).collect(),
                };
                for j in order {
                    let meta = &rule.metas[j];
                    let arg = &args[j];
                    if arg.binders != meta.binders {
                        return Err(TypeError::BinderMismatch {
                            symbol: s.name(),
                            arg: j,
                            want: meta.binders,
                            got: arg.binders,
                        });
                    }
                    // Context extension from the meta's binder telescope.
                    let mut ext = ctx.clone();
                    for (d, entry) in meta.telescope.iter().enumerate() {
                        let entry_ty = instantiate(entry, &bindings, &tys, d)?;
                        self.check_is_type_shape(&ext, &entry_ty)?;
                        ext.push(entry_ty);
                    }
                    match meta.kind {
                        Kind::Ty => {
                            let j2 = self.infer(&ext, &arg.term)?;
                            if j2.kind != Kind::Ty {
                                return Err(TypeError::TermWhereType(arg.term.clone()));
                            }
                            bindings[j] = Some(Binding {
                                binders: meta.binders,
                                value: arg.term.clone(),
                            });
                        }
                        Kind::Tm => {
                            match &meta.expected {
                                Some(exp) => {
                                    let want = instantiate(exp, &bindings, &tys, meta.binders)?;
                                    self.check(&ext, &arg.term, &want)?;
                                    tys[j] = Some(want);
                                }
                                None => {
                                    let j2 = self.infer(&ext, &arg.term)?;
                                    let ty = j2.ty.ok_or_else(|| {
                                        TypeError::TypeWhereTerm(arg.term.clone())
                                    })?;
                                    tys[j] = Some(ty);
                                }
                            }
                            bindings[j] = Some(Binding {
                                binders: meta.binders,
                                value: arg.term.clone(),
                            });
                        }
                        Kind::Ctx => {
                            return Err(TypeError::NoRule(s.name()));
                        }
                    }
                }

                for ep in &rule.eq_premises {
                    let lhs = instantiate(&ep.lhs, &bindings, &tys, ep.binders)?;
                    let rhs = instantiate(&ep.rhs, &bindings, &tys, ep.binders)?;
                    match equal(self.theory, &lhs, &rhs, self.fuel) {
                        EqualityVerdict::Yes { .. } => {}
                        EqualityVerdict::No { left_nf, right_nf } => {
                            return Err(TypeError::PremiseFailed {
                                symbol: s.name(),
                                lhs: left_nf,
                                rhs: right_nf,
                            })
                        }
                        EqualityVerdict::Unknown { .. } => {
                            return Err(TypeError::PremiseUnknown { symbol: s.name() })
                        }
                    }
                }

                let ty = match (&decl.result, &rule.result_ty) {
                    (Kind::Tm, Some(rt)) => Some(instantiate(rt, &bindings, &tys, 0)?),
                    (Kind::Tm, None) => {
                        return Err(TypeError::NoRule(s.name()));
                    }
                    _ => None,
                };
                Ok(Judgment {
                    kind: decl.result,
                    level: ctx.len(),
                    ty,
                })
            }
        }
    }

    /// Check a term against an expected type up to definitional equality.
    pub fn check(&self, ctx: &Telescope, t: &Term, expected: &Term) -> Result<(), TypeError> {
        let j = self.infer(ctx, t)?;
        let inferred = j.ty.ok_or_else(|| TypeError::TypeWhereTerm(t.clone()))?;
        match equal(self.theory, &inferred, expected, self.fuel) {
            EqualityVerdict::Yes { .. } => Ok(()),
            EqualityVerdict::No { .. } => Err(TypeError::Mismatch {
                expected: expected.clone(),
                inferred,
            }),
            EqualityVerdict::Unknown { .. } => {
                Err(TypeError::UnknownEquality(inferred, expected.clone()))
            }
        }
    }

    /// Check that a term is a well-formed type in the context.
    pub fn check_is_type(&self, ctx: &Telescope, t: &Term) -> Result<(), TypeError> {
        let j = self.infer(ctx, t)?;
        if j.kind != Kind::Ty {
            return Err(TypeError::TermWhereType(t.clone()));
        }
        Ok(())
    }

    fn check_is_type_shape(&self, ctx: &Telescope, t: &Term) -> Result<(), TypeError> {
        self.check_is_type(ctx, t)
    }

    /// Check a full telescope.
    pub fn check_telescope(&self, tele: &Telescope) -> Result<(), TypeError> {
        let mut ctx = Telescope::empty();
        for entry in &tele.entries {
            self.check_is_type(&ctx, entry)?;
            ctx.push(entry.clone());
        }
        Ok(())
    }
}
