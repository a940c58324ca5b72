//! Schematic terms: the shared language of typing premises, rewrite rules
//! and theory-morphism assignments. A `Pat` is a term skeleton over a set
//! of metavariables; rigid patterns double as rewrite left-hand sides.

use crate::kernel::{lift, substitute, Arg, Kind, SymbolId, Term};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pat {
    /// Rule-local bound variable (innermost = 0).
    Bound(usize),
    /// Metavariable with an explicit spine: one entry per declared binder,
    /// outermost binder first.
    Meta(usize, Vec<Pat>),
    /// Rigid application.
    App(SymbolId, Vec<PatArg>),
    /// The inferred type of a metavariable, evaluated at the spine.
    /// Only meaningful inside typing rules.
    TyOf(usize, Vec<Pat>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatArg {
    pub binders: usize,
    pub pat: Pat,
}

impl PatArg {
    pub fn new(binders: usize, pat: Pat) -> Self {
        PatArg { binders, pat }
    }

    pub fn plain(pat: Pat) -> Self {
        PatArg { binders: 0, pat }
    }
}

impl Pat {
    pub fn sym(name: &str, args: Vec<PatArg>) -> Pat {
        Pat::App(SymbolId::intern(name), args)
    }

    pub fn sym0(name: &str) -> Pat {
        Pat::App(SymbolId::intern(name), Vec::new())
    }

    pub fn meta(i: usize) -> Pat {
        Pat::Meta(i, Vec::new())
    }

    /// Metavariable indices used anywhere in the pattern.
    pub fn metas_used(&self, out: &mut Vec<usize>) {
        match self {
            Pat::Bound(_) => {}
            Pat::Meta(m, spine) | Pat::TyOf(m, spine) => {
                if !out.contains(m) {
                    out.push(*m);
                }
                for p in spine {
                    p.metas_used(out);
                }
            }
            Pat::App(_, args) => {
                for a in args {
                    a.pat.metas_used(out);
                }
            }
        }
    }
}

/// Declaration of one metavariable of a rule: its binder telescope (entry
/// `t` is a pattern at depth `t`) and, for term metas, the expected type
/// (a pattern at depth `binders`). `expected == None` means the slot is
/// inference-directed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetaDecl {
    pub name: String,
    pub binders: usize,
    pub kind: Kind,
    pub telescope: Vec<Pat>,
    pub expected: Option<Pat>,
    /// Value this meta takes in the schematic (generic) instance, when it
    /// is determined by the other metas rather than free. Patterns keep
    /// such positions as free metas so matching stays syntactic.
    pub generic: Option<Pat>,
}

impl MetaDecl {
    pub fn ty(name: &str, binders: usize, telescope: Vec<Pat>) -> Self {
        MetaDecl {
            name: name.into(),
            binders,
            kind: Kind::Ty,
            telescope,
            expected: None,
            generic: None,
        }
    }

    pub fn tm(name: &str, binders: usize, telescope: Vec<Pat>, expected: Option<Pat>) -> Self {
        MetaDecl {
            name: name.into(),
            binders,
            kind: Kind::Tm,
            telescope,
            expected,
            generic: None,
        }
    }

    pub fn with_generic(mut self, pat: Pat) -> Self {
        self.generic = Some(pat);
        self
    }
}

/// Value bound to a metavariable: a term scoped over the ambient context
/// extended by `binders` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binding {
    pub binders: usize,
    pub value: Term,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatError {
    #[error("metavariable #{0} not bound")]
    UnboundMeta(usize),
    #[error("spine length {got} does not match {want} binders of metavariable #{meta}")]
    SpineArity { meta: usize, want: usize, got: usize },
    #[error("type of metavariable #{0} is not available")]
    NoMetaType(usize),
    #[error("bound variable #{0} escapes rule scope")]
    BoundEscapes(usize),
}

/// Instantiate a pattern at local depth `depth`, given bindings for all
/// metavariables it mentions. `tys[m]`, when supplied, is the inferred type
/// of binding `m` (scoped like the binding itself) and resolves `TyOf`.
pub fn instantiate(
    pat: &Pat,
    bindings: &[Option<Binding>],
    tys: &[Option<Term>],
    depth: usize,
) -> Result<Term, PatError> {
    match pat {
        Pat::Bound(i) => {
            if *i >= depth {
                return Err(PatError::BoundEscapes(*i));
            }
            Ok(Term::Var(*i))
        }
        Pat::Meta(m, spine) => {
            let b = bindings
                .get(*m)
                .and_then(|x| x.as_ref())
                .ok_or(PatError::UnboundMeta(*m))?;
            apply_spine(&b.value, b.binders, *m, spine, bindings, tys, depth)
        }
        Pat::TyOf(m, spine) => {
            let b = bindings
                .get(*m)
                .and_then(|x| x.as_ref())
                .ok_or(PatError::UnboundMeta(*m))?;
            let ty = tys
                .get(*m)
                .and_then(|x| x.as_ref())
                .ok_or(PatError::NoMetaType(*m))?;
            apply_spine(ty, b.binders, *m, spine, bindings, tys, depth)
        }
        Pat::App(s, args) => {
            let mut out = Vec::with_capacity(args.len());
            for a in args {
                out.push(Arg::new(
                    a.binders,
                    instantiate(&a.pat, bindings, tys, depth + a.binders)?,
                ));
            }
            Ok(Term::App(*s, out))
        }
    }
}

fn apply_spine(
    value: &Term,
    binders: usize,
    meta: usize,
    spine: &[Pat],
    bindings: &[Option<Binding>],
    tys: &[Option<Term>],
    depth: usize,
) -> Result<Term, PatError> {
    if spine.len() != binders {
        return Err(PatError::SpineArity {
            meta,
            want: binders,
            got: spine.len(),
        });
    }
    let mut spine_terms = Vec::with_capacity(spine.len());
    for p in spine {
        spine_terms.push(instantiate(p, bindings, tys, depth)?);
    }
    // value is scoped over ambient + binders; re-base the ambient part to
    // ambient + depth, then fill the binder block with the spine.
    let lifted = lift(value, depth, binders);
    Ok(substitute(&lifted, &spine_terms, 0))
}

/// Outcome of a pattern match: bindings for the rule metas.
pub type MatchBindings = Vec<Option<Binding>>;

/// Match `subject` against a rigid pattern at rule depth `depth`.
/// Metavariable spines in patterns must be distinct bound variables; an
/// occurrence of a local variable not on the spine makes the match fail
/// (this is the non-occurrence side condition).
pub fn match_pat(
    subject: &Term,
    pat: &Pat,
    depth: usize,
    bindings: &mut MatchBindings,
) -> bool {
    match pat {
        Pat::Bound(i) => matches!(subject, Term::Var(j) if j == i),
        Pat::App(s, pargs) => match subject {
            Term::App(t, targs) if t == s && targs.len() == pargs.len() => pargs
                .iter()
                .zip(targs.iter())
                .all(|(p, a)| p.binders == a.binders && {
                    match_pat(&a.term, &p.pat, depth + p.binders, bindings)
                }),
            _ => false,
        },
        Pat::Meta(m, spine) => {
            let mut spine_vars = Vec::with_capacity(spine.len());
            for p in spine {
                match p {
                    Pat::Bound(i) if *i < depth && !spine_vars.contains(i) => {
                        spine_vars.push(*i)
                    }
                    _ => return false,
                }
            }
            let value = match extract(subject, &spine_vars, depth, 0) {
                Some(v) => v,
                None => return false,
            };
            let b = Binding {
                binders: spine_vars.len(),
                value,
            };
            match &bindings[*m] {
                Some(prev) => prev == &b,
                None => {
                    bindings[*m] = Some(b);
                    true
                }
            }
        }
        Pat::TyOf(..) => false,
    }
}

/// Rename a matched subterm into the metavariable's own scope. Local
/// variables on the spine become the meta's binder variables; other local
/// variables are occurrences and abort the match.
fn extract(subject: &Term, spine_vars: &[usize], depth: usize, inner: usize) -> Option<Term> {
    let binders = spine_vars.len();
    match subject {
        Term::Var(x) => {
            if *x < inner {
                Some(Term::Var(*x))
            } else if *x < inner + depth {
                let local = *x - inner;
                let j = spine_vars.iter().position(|v| *v == local)?;
                Some(Term::Var(inner + (binders - 1 - j)))
            } else {
                Some(Term::Var(*x - depth + binders))
            }
        }
        Term::App(s, args) => {
            let mut out = Vec::with_capacity(args.len());
            for a in args {
                out.push(Arg::new(
                    a.binders,
                    extract(&a.term, spine_vars, depth, inner + a.binders)?,
                ));
            }
            Some(Term::App(*s, out))
        }
    }
}

/// Convert a concrete term over `nvars` context variables into a pattern
/// whose metavariables are those variables (outermost variable = meta 0).
/// Used to turn presentation data and instantiated premises into rules.
pub fn concrete_to_pat(t: &Term, nvars: usize) -> Pat {
    fn go(t: &Term, nvars: usize, local: usize) -> Pat {
        match t {
            Term::Var(i) => {
                if *i < local {
                    Pat::Bound(*i)
                } else {
                    let ctx_index = *i - local;
                    debug_assert!(ctx_index < nvars);
                    Pat::Meta(nvars - 1 - ctx_index, Vec::new())
                }
            }
            Term::App(s, args) => Pat::App(
                *s,
                args.iter()
                    .map(|a| PatArg::new(a.binders, go(&a.term, nvars, local + a.binders)))
                    .collect(),
            ),
        }
    }
    go(t, nvars, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn left() -> Pat {
        Pat::sym0("left")
    }

    #[test]
    fn instantiate_meta_with_spine() {
        // pattern D(i) where D has one binder; bind D := sq(v0, v1) over
        // ambient v0 with one binder, i := left.
        let d = Binding {
            binders: 1,
            value: Term::sym(
                "sq",
                vec![Arg::plain(Term::var(0)), Arg::plain(Term::var(1))],
            ),
        };
        let pat = Pat::Meta(0, vec![left()]);
        let got = instantiate(&pat, &[Some(d)], &[None], 0).unwrap();
        assert_eq!(
            got,
            Term::sym(
                "sq",
                vec![
                    Arg::plain(Term::sym("left", vec![])),
                    Arg::plain(Term::var(0))
                ]
            )
        );
    }

    #[test]
    fn match_binds_meta_under_binder() {
        // pattern coe0(\x. D(x), d): D spine = [x]
        let pat = Pat::sym(
            "coe0",
            vec![
                PatArg::new(1, Pat::Meta(0, vec![Pat::Bound(0)])),
                PatArg::plain(Pat::meta(1)),
            ],
        );
        let subject = Term::sym(
            "coe0",
            vec![
                Arg::new(1, Term::sym("sq", vec![Arg::plain(Term::var(0)), Arg::plain(Term::var(1))])),
                Arg::plain(Term::var(0)),
            ],
        );
        let mut b = vec![None, None];
        assert!(match_pat(&subject, &pat, 0, &mut b));
        let d = b[0].clone().unwrap();
        assert_eq!(d.binders, 1);
        // inside D's own scope: binder var 0, ambient var 1
        assert_eq!(
            d.value,
            Term::sym("sq", vec![Arg::plain(Term::var(0)), Arg::plain(Term::var(1))])
        );
    }

    #[test]
    fn match_fails_on_occurrence() {
        // sigma-style: coe0(\x. A, a) with A not allowed to use x
        let pat = Pat::sym(
            "coe0",
            vec![
                PatArg::new(1, Pat::Meta(0, vec![])),
                PatArg::plain(Pat::meta(1)),
            ],
        );
        let bad = Term::sym(
            "coe0",
            vec![Arg::new(1, Term::var(0)), Arg::plain(Term::var(0))],
        );
        let good = Term::sym(
            "coe0",
            vec![Arg::new(1, Term::var(1)), Arg::plain(Term::var(0))],
        );
        let mut b = vec![None, None];
        assert!(!match_pat(&bad, &pat, 0, &mut b));
        let mut b = vec![None, None];
        assert!(match_pat(&good, &pat, 0, &mut b));
        assert_eq!(b[0].as_ref().unwrap().value, Term::var(0));
    }

    #[test]
    fn nonlinear_match_requires_equal_bindings() {
        // dc(i, i, k)
        let pat = Pat::sym(
            "dc",
            vec![
                PatArg::plain(Pat::meta(0)),
                PatArg::plain(Pat::meta(0)),
                PatArg::plain(Pat::meta(1)),
            ],
        );
        let yes = Term::sym(
            "dc",
            vec![
                Arg::plain(Term::var(1)),
                Arg::plain(Term::var(1)),
                Arg::plain(Term::var(0)),
            ],
        );
        let no = Term::sym(
            "dc",
            vec![
                Arg::plain(Term::var(1)),
                Arg::plain(Term::var(0)),
                Arg::plain(Term::var(0)),
            ],
        );
        let mut b = vec![None, None];
        assert!(match_pat(&yes, &pat, 0, &mut b));
        let mut b = vec![None, None];
        assert!(!match_pat(&no, &pat, 0, &mut b));
    }

    #[test]
    fn concrete_to_pat_roundtrip() {
        // term over context of 2 vars
        let t = Term::sym(
            "sq",
            vec![Arg::plain(Term::var(1)), Arg::plain(Term::var(0))],
        );
        let p = concrete_to_pat(&t, 2);
        let b0 = Some(Binding { binders: 0, value: Term::var(1) });
        let b1 = Some(Binding { binders: 0, value: Term::var(0) });
        let back = instantiate(&p, &[b0, b1], &[None, None], 0).unwrap();
        assert_eq!(back, t);
    }
}
