//! The batch file formats: `.trm` term files, `.mor` morphism files,
//! `.mod` presentation files and `.wit` homotopy witness bundles. These
//! parse to raw named data; the checker modules interpret them.

use super::lexer::{Lexer, TokenKind};
use super::{parse_named_inner, NamedTerm, ParseError};
use crate::kernel::Kind;

#[derive(Debug, Clone)]
pub struct TermFile {
    pub theory: Option<String>,
    pub ctx: Vec<(String, NamedTerm)>,
    pub term: NamedTerm,
    pub expect: Option<NamedTerm>,
}

#[derive(Debug, Clone)]
pub struct MorphismFile {
    pub name: String,
    pub source: String,
    pub target: String,
    /// symbol name, argument names (binders appear inside the images), image
    pub maps: Vec<(String, Vec<String>, NamedTerm)>,
    /// witness terms for propositional obligations, keyed by rule name
    pub witnesses: Vec<(String, NamedTerm)>,
}

#[derive(Debug, Clone)]
pub struct GenDecl {
    pub name: String,
    pub ctx: Vec<(String, NamedTerm)>,
    pub kind: Kind,
    pub ty: Option<NamedTerm>,
}

#[derive(Debug, Clone)]
pub struct RelDecl {
    pub name: String,
    pub ctx: Vec<(String, NamedTerm)>,
    pub lhs: NamedTerm,
    pub rhs: NamedTerm,
}

#[derive(Debug, Clone)]
pub struct ModelFile {
    pub name: String,
    pub theory: String,
    pub gens: Vec<GenDecl>,
    pub rels: Vec<RelDecl>,
}

#[derive(Debug, Clone)]
pub struct WitnessFile {
    pub name: String,
    pub source: String,
    pub target: String,
    pub f: Vec<(String, Vec<String>, NamedTerm)>,
    pub g: Vec<(String, Vec<String>, NamedTerm)>,
    pub h: Vec<(String, Vec<String>, NamedTerm)>,
}

fn theory_name(lx: &mut Lexer) -> Result<String, ParseError> {
    let mut name = lx.expect_ident()?;
    loop {
        let t = lx.peek();
        if t.kind == TokenKind::Ident && t.text == "+" {
            lx.bump();
            name.push('+');
            name.push_str(&lx.expect_ident()?);
        } else {
            break;
        }
    }
    Ok(name)
}

fn parse_ctx(lx: &mut Lexer) -> Result<Vec<(String, NamedTerm)>, ParseError> {
    let mut out = Vec::new();
    lx.expect(TokenKind::LParen)?;
    if lx.peek_kind() != TokenKind::RParen {
        loop {
            let n = lx.expect_ident()?;
            lx.expect(TokenKind::Colon)?;
            let t = parse_named_inner(lx)?;
            out.push((n, t));
            if lx.peek_kind() == TokenKind::Comma {
                lx.bump();
            } else {
                break;
            }
        }
    }
    lx.expect(TokenKind::RParen)?;
    Ok(out)
}

pub fn parse_term_file(text: &str) -> Result<TermFile, ParseError> {
    let mut lx = Lexer::new(text);
    let mut theory = None;
    let mut ctx = Vec::new();
    if lx.at_kw("theory") {
        lx.bump();
        theory = Some(theory_name(&mut lx)?);
    }
    if lx.at_kw("ctx") {
        lx.bump();
        ctx = parse_ctx(&mut lx)?;
    }
    lx.expect_kw("term")?;
    let term = parse_named_inner(&mut lx)?;
    let expect = if lx.at_kw("expect") {
        lx.bump();
        Some(parse_named_inner(&mut lx)?)
    } else {
        None
    };
    lx.expect_eof()?;
    Ok(TermFile {
        theory,
        ctx,
        term,
        expect,
    })
}

/// `map NAME(arg, ...) = term` — the image of a symbol as a term over the
/// named arguments (binder arguments written `\x. D` inside the image use
/// the same names).
fn parse_map_line(lx: &mut Lexer) -> Result<(String, Vec<String>, NamedTerm), ParseError> {
    let sym = match lx.peek_kind() {
        TokenKind::SquigArrow => {
            lx.bump();
            "~>".to_string()
        }
        _ => lx.expect_ident()?,
    };
    let mut args = Vec::new();
    if lx.peek_kind() == TokenKind::LParen {
        lx.bump();
        if lx.peek_kind() != TokenKind::RParen {
            loop {
                args.push(lx.expect_ident()?);
                if lx.peek_kind() == TokenKind::Comma {
                    lx.bump();
                } else {
                    break;
                }
            }
        }
        lx.expect(TokenKind::RParen)?;
    }
    lx.expect(TokenKind::Equals)?;
    let image = parse_named_inner(lx)?;
    Ok((sym, args, image))
}

pub fn parse_morphism_file(text: &str) -> Result<MorphismFile, ParseError> {
    let mut lx = Lexer::new(text);
    lx.expect_kw("morphism")?;
    let name = lx.expect_ident()?;
    lx.expect_kw("source")?;
    let source = theory_name(&mut lx)?;
    lx.expect_kw("target")?;
    let target = theory_name(&mut lx)?;
    let mut maps = Vec::new();
    let mut witnesses = Vec::new();
    while !lx.is_eof() {
        if lx.at_kw("map") {
            lx.bump();
            maps.push(parse_map_line(&mut lx)?);
        } else if lx.at_kw("wit") {
            lx.bump();
            let rule = lx.expect_ident()?;
            lx.expect(TokenKind::Equals)?;
            let term = parse_named_inner(&mut lx)?;
            witnesses.push((rule, term));
        } else {
            return Err(ParseError::at(&lx.peek(), "expected map or wit"));
        }
    }
    Ok(MorphismFile {
        name,
        source,
        target,
        maps,
        witnesses,
    })
}

pub fn parse_model_file(text: &str) -> Result<ModelFile, ParseError> {
    let mut lx = Lexer::new(text);
    lx.expect_kw("model")?;
    let name = lx.expect_ident()?;
    lx.expect_kw("theory")?;
    let theory = theory_name(&mut lx)?;
    let mut gens = Vec::new();
    let mut rels = Vec::new();
    while !lx.is_eof() {
        if lx.at_kw("gen") {
            lx.bump();
            let gname = lx.expect_ident()?;
            let ctx = if lx.peek_kind() == TokenKind::LParen {
                parse_ctx(&mut lx)?
            } else {
                vec![]
            };
            if lx.at_kw("type") {
                lx.bump();
                gens.push(GenDecl {
                    name: gname,
                    ctx,
                    kind: Kind::Ty,
                    ty: None,
                });
            } else {
                lx.expect(TokenKind::Colon)?;
                let ty = parse_named_inner(&mut lx)?;
                gens.push(GenDecl {
                    name: gname,
                    ctx,
                    kind: Kind::Tm,
                    ty: Some(ty),
                });
            }
        } else if lx.at_kw("rel") {
            lx.bump();
            let rname = lx.expect_ident()?;
            let ctx = if lx.peek_kind() == TokenKind::LParen {
                parse_ctx(&mut lx)?
            } else {
                vec![]
            };
            lx.expect(TokenKind::Colon)?;
            let lhs = parse_named_inner(&mut lx)?;
            lx.expect(TokenKind::EqEq)?;
            let rhs = parse_named_inner(&mut lx)?;
            rels.push(RelDecl {
                name: rname,
                ctx,
                lhs,
                rhs,
            });
        } else {
            return Err(ParseError::at(&lx.peek(), "expected gen or rel"));
        }
    }
    Ok(ModelFile {
        name,
        theory,
        gens,
        rels,
    })
}

pub fn parse_witness_file(text: &str) -> Result<WitnessFile, ParseError> {
    let mut lx = Lexer::new(text);
    lx.expect_kw("witness")?;
    let name = lx.expect_ident()?;
    lx.expect_kw("source")?;
    let source = lx.expect_ident()?;
    lx.expect_kw("target")?;
    let target = lx.expect_ident()?;
    let mut f = Vec::new();
    let mut g = Vec::new();
    let mut h = Vec::new();
    while !lx.is_eof() {
        if lx.at_kw("f") {
            lx.bump();
            f.push(parse_map_line(&mut lx)?);
        } else if lx.at_kw("g") {
            lx.bump();
            g.push(parse_map_line(&mut lx)?);
        } else if lx.at_kw("h") {
            lx.bump();
            h.push(parse_map_line(&mut lx)?);
        } else {
            return Err(ParseError::at(&lx.peek(), "expected f/g/h line"));
        }
    }
    Ok(WitnessFile {
        name,
        source,
        target,
        f,
        g,
        h,
    })
}
