//! Surface syntax: the named notation for terms (`symbol(arg, ...)`,
//! binders `\x y. body`, infix `~>`), a printer producing it, hole
//! elaboration, and the `.thy` theory file format.
//!
//! `~>`, `I`, `left`, `right` are reserved; comments run from `--` to the
//! end of the line.

mod files;
mod lexer;
mod print;
mod theory_file;

pub use files::{
    parse_model_file, parse_morphism_file, parse_term_file, parse_witness_file, ModelFile,
    MorphismFile, TermFile, WitnessFile,
};
pub use lexer::{Lexer, Token, TokenKind};
pub use print::{print_telescope, print_term, print_theory};
pub use theory_file::{parse_theory, parse_theory_with_imports, TheoryLoader};

use crate::kernel::{Arg, SymbolId, Telescope, Term};
use crate::theory::{Checker, Theory};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unbound name `{0}`")]
    Unbound(String),
    #[error("hole cannot be elaborated: {0}")]
    Hole(String),
}

impl ParseError {
    pub fn at(tok: &Token, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: tok.line,
            col: tok.col,
            msg: msg.into(),
        }
    }
}

/// Named term tree, the parser's output before scope resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedTerm {
    Var(String),
    Hole,
    App(String, Vec<(Vec<String>, NamedTerm)>),
}

/// Parse a term and resolve names against `scope` (outermost first).
/// Holes are rejected; use [`elaborate_term`] for hole-filling.
pub fn parse_term(text: &str, scope: &[&str]) -> Result<Term, ParseError> {
    let named = parse_named(text)?;
    let scope: Vec<String> = scope.iter().map(|s| s.to_string()).collect();
    resolve(&named, &scope)
}

/// Parse a term into the named tree without resolving.
pub fn parse_named(text: &str) -> Result<NamedTerm, ParseError> {
    let mut lx = Lexer::new(text);
    let t = parse_named_inner(&mut lx)?;
    lx.expect_eof()?;
    Ok(t)
}

pub(crate) fn parse_named_inner(lx: &mut Lexer) -> Result<NamedTerm, ParseError> {
    if lx.peek_kind() == TokenKind::Lambda {
        lx.bump();
        let mut names = Vec::new();
        while lx.peek_kind() == TokenKind::Ident {
            names.push(lx.bump().text);
        }
        if names.is_empty() {
            return Err(ParseError::at(&lx.peek(), "expected binder name after \\"));
        }
        lx.expect(TokenKind::Dot)?;
        let body = parse_named_inner(lx)?;
        // binder lists attach to the enclosing argument position; a bare
        // lambda at top level is represented as a 0-ary marker app
        return Ok(NamedTerm::App(
            "\\".into(),
            vec![(names, body)],
        ));
    }
    let lhs = parse_atom(lx)?;
    if lx.peek_kind() == TokenKind::SquigArrow {
        lx.bump();
        let rhs = parse_named_inner(lx)?;
        return Ok(NamedTerm::App(
            "~>".into(),
            vec![(vec![], lhs), (vec![], rhs)],
        ));
    }
    Ok(lhs)
}

fn parse_atom(lx: &mut Lexer) -> Result<NamedTerm, ParseError> {
    if lx.peek_kind() == TokenKind::SquigArrow && lx.peek2_kind() == TokenKind::LParen {
        lx.bump();
        lx.bump();
        let mut args = Vec::new();
        if lx.peek_kind() != TokenKind::RParen {
            loop {
                let arg = parse_named_inner(lx)?;
                args.push(flatten_lambda(arg));
                match lx.peek_kind() {
                    TokenKind::Comma => {
                        lx.bump();
                    }
                    TokenKind::RParen => break,
                    _ => return Err(ParseError::at(&lx.peek(), "expected , or )")),
                }
            }
        }
        lx.expect(TokenKind::RParen)?;
        return Ok(NamedTerm::App("~>".into(), args));
    }
    match lx.peek_kind() {
        TokenKind::LParen => {
            lx.bump();
            let t = parse_named_inner(lx)?;
            lx.expect(TokenKind::RParen)?;
            Ok(t)
        }
        TokenKind::Underscore => {
            lx.bump();
            Ok(NamedTerm::Hole)
        }
        TokenKind::Ident => {
            let name = lx.bump().text;
            if lx.peek_kind() == TokenKind::LParen {
                lx.bump();
                let mut args = Vec::new();
                loop {
                    let arg = parse_named_inner(lx)?;
                    args.push(flatten_lambda(arg));
                    match lx.peek_kind() {
                        TokenKind::Comma => {
                            lx.bump();
                        }
                        TokenKind::RParen => {
                            lx.bump();
                            break;
                        }
                        _ => return Err(ParseError::at(&lx.peek(), "expected , or )")),
                    }
                }
                Ok(NamedTerm::App(name, args))
            } else {
                Ok(NamedTerm::Var(name))
            }
        }
        _ => Err(ParseError::at(&lx.peek(), "expected a term")),
    }
}

fn flatten_lambda(t: NamedTerm) -> (Vec<String>, NamedTerm) {
    match t {
        NamedTerm::App(head, mut args) if head == "\\" && args.len() == 1 => {
            let (names, body) = args.remove(0);
            let (mut inner_names, inner) = flatten_lambda(body);
            let mut all = names;
            all.append(&mut inner_names);
            (all, inner)
        }
        other => (vec![], other),
    }
}

/// Resolve a named tree against a scope (outermost first); innermost
/// binding wins on shadowing.
pub fn resolve(t: &NamedTerm, scope: &[String]) -> Result<Term, ParseError> {
    match t {
        NamedTerm::Hole => Err(ParseError::Hole("hole outside elaboration".into())),
        NamedTerm::Var(name) => {
            // innermost occurrence wins
            if let Some(pos) = scope.iter().rposition(|s| s == name) {
                Ok(Term::Var(scope.len() - 1 - pos))
            } else {
                // a bare name that is not in scope denotes a 0-ary symbol
                Ok(Term::App(SymbolId::intern(name), vec![]))
            }
        }
        NamedTerm::App(head, args) => {
            if head == "\\" {
                return Err(ParseError::Hole("bare binder outside argument".into()));
            }
            let mut out = Vec::with_capacity(args.len());
            for (names, body) in args {
                let mut inner = scope.to_vec();
                inner.extend(names.iter().cloned());
                out.push(Arg::new(names.len(), resolve(body, &inner)?));
            }
            Ok(Term::App(SymbolId::intern(head), out))
        }
    }
}

/// Elaborate a named term in context, filling `_` holes in the first
/// three arguments of `at` (and the annotations of `pi1`/`pi2`) from the
/// inferred type of the path/pair argument.
pub fn elaborate_term(
    theory: &Theory,
    ctx: &Telescope,
    scope: &[String],
    t: &NamedTerm,
    fuel: u64,
) -> Result<Term, ParseError> {
    match t {
        NamedTerm::Hole => Err(ParseError::Hole(
            "hole in a position that cannot be inferred".into(),
        )),
        NamedTerm::Var(_) => resolve(t, scope),
        NamedTerm::App(head, args) => {
            let has_hole = args.iter().any(|(_, a)| matches!(a, NamedTerm::Hole));
            if !has_hole {
                let mut out = Vec::with_capacity(args.len());
                for (names, body) in args {
                    let mut inner = scope.to_vec();
                    inner.extend(names.iter().cloned());
                    // context extension types are unknown here; holes under
                    // binders are not supported, plain resolution is.
                    out.push(Arg::new(names.len(), elaborate_arg(theory, ctx, &inner, body, fuel)?));
                }
                return Ok(Term::App(SymbolId::intern(head), out));
            }
            match (head.as_str(), args.len()) {
                ("at", 4) => {
                    let p = elaborate_arg(theory, ctx, scope, &args[2].1, fuel)?;
                    let ty = infer_ty(theory, ctx, &p, fuel)?;
                    match &ty {
                        Term::App(s, targs) if *s == SymbolId::intern("~>") && targs.len() == 2 => {
                            let i = elaborate_arg(theory, ctx, scope, &args[3].1, fuel)?;
                            Ok(Term::sym(
                                "at",
                                vec![
                                    Arg::plain(targs[0].term.clone()),
                                    Arg::plain(targs[1].term.clone()),
                                    Arg::plain(p),
                                    Arg::plain(i),
                                ],
                            ))
                        }
                        _ => Err(ParseError::Hole(format!(
                            "at-holes need a homogeneous path, got type {}",
                            ty
                        ))),
                    }
                }
                ("at", 5) => {
                    let p = elaborate_arg(theory, ctx, scope, &args[3].1, fuel)?;
                    let ty = infer_ty(theory, ctx, &p, fuel)?;
                    match &ty {
                        Term::App(s, targs) if *s == SymbolId::intern("Path") && targs.len() == 3 => {
                            let i = elaborate_arg(theory, ctx, scope, &args[4].1, fuel)?;
                            Ok(Term::sym(
                                "at",
                                vec![
                                    targs[0].clone(),
                                    Arg::plain(targs[1].term.clone()),
                                    Arg::plain(targs[2].term.clone()),
                                    Arg::plain(p),
                                    Arg::plain(i),
                                ],
                            ))
                        }
                        _ => Err(ParseError::Hole(format!(
                            "at-holes need a heterogeneous path, got type {}",
                            ty
                        ))),
                    }
                }
                ("pi1", 3) | ("pi2", 3) => {
                    let p = elaborate_arg(theory, ctx, scope, &args[2].1, fuel)?;
                    let ty = infer_ty(theory, ctx, &p, fuel)?;
                    match &ty {
                        Term::App(s, targs) if *s == SymbolId::intern("Sigma") && targs.len() == 2 => {
                            Ok(Term::sym(
                                head,
                                vec![targs[0].clone(), targs[1].clone(), Arg::plain(p)],
                            ))
                        }
                        _ => Err(ParseError::Hole(format!(
                            "projection holes need a Sigma type, got {}",
                            ty
                        ))),
                    }
                }
                _ => Err(ParseError::Hole(format!(
                    "holes are only filled in at/pi1/pi2, not {}",
                    head
                ))),
            }
        }
    }
}

fn elaborate_arg(
    theory: &Theory,
    ctx: &Telescope,
    scope: &[String],
    t: &NamedTerm,
    fuel: u64,
) -> Result<Term, ParseError> {
    match t {
        NamedTerm::App(..) => elaborate_term(theory, ctx, scope, t, fuel),
        _ => resolve(t, scope),
    }
}

fn infer_ty(theory: &Theory, ctx: &Telescope, t: &Term, fuel: u64) -> Result<Term, ParseError> {
    let checker = Checker::with_fuel(theory, fuel);
    let j = checker
        .infer(ctx, t)
        .map_err(|e| ParseError::Hole(e.to_string()))?;
    let ty = j.ty.ok_or_else(|| ParseError::Hole("not a term".into()))?;
    let nf = crate::theory::normalize(theory, &ty, fuel);
    Ok(nf.term)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Arg;

    #[test]
    fn parses_constructor_application() {
        let t = parse_term("coe0(\\x. D, d)", &["D", "d"]).unwrap();
        assert_eq!(
            t,
            Term::sym(
                "coe0",
                vec![Arg::new(1, Term::var(2)), Arg::plain(Term::var(0))]
            )
        );
    }

    #[test]
    fn innermost_binding_wins() {
        let t = parse_term("path(I, \\x x. x)", &["x"]).unwrap();
        assert_eq!(
            t,
            Term::sym(
                "path",
                vec![
                    Arg::plain(Term::sym("I", vec![])),
                    Arg::new(2, Term::var(0))
                ]
            )
        );
    }

    #[test]
    fn squig_arrow_is_infix() {
        let t = parse_term("a ~> b", &["a", "b"]).unwrap();
        assert_eq!(
            t,
            Term::sym(
                "~>",
                vec![Arg::plain(Term::var(1)), Arg::plain(Term::var(0))]
            )
        );
    }

    #[test]
    fn sq_with_variable() {
        let t = parse_term("sq(right, j)", &["j"]).unwrap();
        assert_eq!(
            t,
            Term::sym(
                "sq",
                vec![
                    Arg::plain(Term::sym("right", vec![])),
                    Arg::plain(Term::var(0))
                ]
            )
        );
    }

    #[test]
    fn whitespace_and_comments_ignored(){
        let a = parse_term("sq( right,\n  -- a comment\n j )", &["j"]).unwrap();
        let b = parse_term("sq(right, j)", &["j"]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unbound_name_is_a_constant() {
        // names not in scope denote 0-ary symbols; scope names become vars
        let t = parse_term("sq(i, left)", &["i"]).unwrap();
        assert_eq!(
            t,
            Term::sym(
                "sq",
                vec![
                    Arg::plain(Term::var(0)),
                    Arg::plain(Term::sym("left", vec![]))
                ]
            )
        );
    }
}
