//! Parser for `.thy` theory files. Files are either self-contained
//! (symbols + rules + equations) or built from imports plus extras;
//! `builtin` theories are the default import resolver.

use super::lexer::{Lexer, Token, TokenKind};
use super::ParseError;
use crate::kernel::{Kind, SymbolId};
use crate::theory::pat::{MetaDecl, Pat, PatArg};
use crate::theory::{EqPremise, RewriteRule, Theory, TypingRule};

pub type TheoryLoader<'a> = &'a dyn Fn(&str) -> Result<Theory, String>;

pub fn default_loader(name: &str) -> Result<Theory, String> {
    crate::stdlib::builtin(name).map_err(|e| e.to_string())
}

pub fn parse_theory(text: &str) -> Result<Theory, ParseError> {
    parse_theory_with_imports(text, &default_loader)
}

pub fn parse_theory_with_imports(text: &str, loader: TheoryLoader) -> Result<Theory, ParseError> {
    let mut lx = Lexer::new(text);
    lx.expect_kw("theory")?;
    let name = theory_name(&mut lx)?;
    let mut t = Theory::new(&name);

    while !lx.is_eof() {
        if lx.at_kw("import") {
            lx.bump();
            let import = theory_name(&mut lx)?;
            let imported = loader(&import).map_err(|e| ParseError::Hole(e))?;
            t = t
                .combine(&imported)
                .map_err(|e| ParseError::Hole(e.to_string()))?
                .renamed(&name);
            t.parents.insert(import);
        } else if lx.at_kw("symbol") {
            lx.bump();
            parse_symbol_decl(&mut lx, &mut t)?;
        } else if lx.at_kw("rule") {
            lx.bump();
            parse_rule(&mut lx, &mut t)?;
        } else if lx.at_kw("eq") {
            lx.bump();
            parse_equation(&mut lx, &mut t)?;
        } else {
            return Err(ParseError::at(&lx.peek(), "expected import/symbol/rule/eq"));
        }
    }
    Ok(t)
}

fn theory_name(lx: &mut Lexer) -> Result<String, ParseError> {
    // names may contain '+' compositions
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

fn parse_kind(tok: &Token) -> Result<Kind, ParseError> {
    match tok.text.as_str() {
        "ty" => Ok(Kind::Ty),
        "tm" => Ok(Kind::Tm),
        "ctx" => Ok(Kind::Ctx),
        _ => Err(ParseError::at(tok, "expected ty/tm/ctx")),
    }
}

fn parse_symbol_decl(lx: &mut Lexer, t: &mut Theory) -> Result<(), ParseError> {
    let name = symbolish(lx)?;
    lx.expect(TokenKind::LParen)?;
    let mut args = Vec::new();
    if lx.peek_kind() != TokenKind::RParen {
        loop {
            let ktok = lx.expect(TokenKind::Ident)?;
            let kind = parse_kind(&ktok)?;
            let mut binders = 0usize;
            if lx.peek_kind() == TokenKind::Slash {
                lx.bump();
                let n = lx.expect_ident()?;
                binders = n
                    .parse()
                    .map_err(|_| ParseError::Hole(format!("bad binder count {}", n)))?;
            }
            args.push((binders, kind));
            if lx.peek_kind() == TokenKind::Comma {
                lx.bump();
            } else {
                break;
            }
        }
    }
    lx.expect(TokenKind::RParen)?;
    lx.expect(TokenKind::Colon)?;
    let rtok = lx.expect(TokenKind::Ident)?;
    let result = parse_kind(&rtok)?;
    t.declare(&name, args, result);
    Ok(())
}

/// Symbol names include identifiers and the reserved arrow.
fn symbolish(lx: &mut Lexer) -> Result<String, ParseError> {
    let t = lx.peek();
    match t.kind {
        TokenKind::Ident => Ok(lx.bump().text),
        TokenKind::SquigArrow => {
            lx.bump();
            Ok("~>".into())
        }
        _ => Err(ParseError::at(&t, "expected a symbol name")),
    }
}

// ---------------------------------------------------------------------
// pattern terms

/// Named pattern tree prior to meta/bound resolution.
enum PTerm {
    Name(String, Option<Vec<(Vec<String>, PTerm)>>),
    TyOf(Box<PTerm>),
    Arrow(Box<PTerm>, Box<PTerm>),
}

fn parse_pterm(lx: &mut Lexer) -> Result<(Vec<String>, PTerm), ParseError> {
    if lx.peek_kind() == TokenKind::Lambda {
        lx.bump();
        let mut names = Vec::new();
        while lx.peek_kind() == TokenKind::Ident {
            names.push(lx.bump().text);
        }
        lx.expect(TokenKind::Dot)?;
        let (mut inner, body) = parse_pterm(lx)?;
        let mut all = names;
        all.append(&mut inner);
        return Ok((all, body));
    }
    let lhs = parse_pterm_atom(lx)?;
    if lx.peek_kind() == TokenKind::SquigArrow {
        lx.bump();
        let (binders, rhs) = parse_pterm(lx)?;
        if !binders.is_empty() {
            return Err(ParseError::at(&lx.peek(), "binder after ~> must be parenthesized"));
        }
        return Ok((vec![], PTerm::Arrow(Box::new(lhs), Box::new(rhs))));
    }
    Ok((vec![], lhs))
}

fn parse_pterm_atom(lx: &mut Lexer) -> Result<PTerm, ParseError> {
    // the reserved arrow may head an application in printed form
    if lx.peek_kind() == TokenKind::SquigArrow && lx.peek2_kind() == TokenKind::LParen {
        lx.bump();
        lx.bump();
        let mut args = Vec::new();
        if lx.peek_kind() != TokenKind::RParen {
            loop {
                args.push(parse_pterm(lx)?);
                if lx.peek_kind() == TokenKind::Comma {
                    lx.bump();
                } else {
                    break;
                }
            }
        }
        lx.expect(TokenKind::RParen)?;
        return Ok(PTerm::Name("~>".into(), Some(args)));
    }
    match lx.peek_kind() {
        TokenKind::LParen => {
            lx.bump();
            let (binders, t) = parse_pterm(lx)?;
            if !binders.is_empty() {
                return Err(ParseError::at(&lx.peek(), "stray binder"));
            }
            lx.expect(TokenKind::RParen)?;
            Ok(t)
        }
        TokenKind::Ident => {
            let name = lx.bump().text;
            if lx.peek_kind() == TokenKind::LParen {
                lx.bump();
                let mut args = Vec::new();
                if lx.peek_kind() != TokenKind::RParen {
                    loop {
                        args.push(parse_pterm(lx)?);
                        if lx.peek_kind() == TokenKind::Comma {
                            lx.bump();
                        } else {
                            break;
                        }
                    }
                }
                lx.expect(TokenKind::RParen)?;
                if name == "ty" && args.len() == 1 && args[0].0.is_empty() {
                    let inner = args.remove(0).1;
                    return Ok(PTerm::TyOf(Box::new(inner)));
                }
                Ok(PTerm::Name(name, Some(args)))
            } else {
                Ok(PTerm::Name(name, None))
            }
        }
        _ => Err(ParseError::at(&lx.peek(), "expected a pattern term")),
    }
}

/// Convert a named pattern tree to a `Pat` over the metas declared so far.
fn to_pat(
    t: &PTerm,
    metas: &[MetaDecl],
    binders: &[String],
) -> Result<Pat, ParseError> {
    match t {
        PTerm::Arrow(a, bx) => Ok(Pat::App(
            SymbolId::intern("~>"),
            vec![
                PatArg::plain(to_pat(a, metas, binders)?),
                PatArg::plain(to_pat(bx, metas, binders)?),
            ],
        )),
        PTerm::TyOf(inner) => match inner.as_ref() {
            PTerm::Name(n, spine) => {
                let mi = metas
                    .iter()
                    .position(|mdd| &mdd.name == n)
                    .ok_or_else(|| ParseError::Unbound(format!("ty({}) of non-meta", n)))?;
                let spine_pats = spine_for(&metas[mi], spine, metas, binders)?;
                Ok(Pat::TyOf(mi, spine_pats))
            }
            _ => Err(ParseError::Hole("ty(...) takes a metavariable".into())),
        },
        PTerm::Name(n, args) => {
            // innermost binder wins, then metas, then symbols
            if args.is_none() {
                if let Some(pos) = binders.iter().rposition(|x| x == n) {
                    return Ok(Pat::Bound(binders.len() - 1 - pos));
                }
            }
            if let Some(mi) = metas.iter().position(|mdd| &mdd.name == n) {
                let spine = spine_for(&metas[mi], args, metas, binders)?;
                return Ok(Pat::Meta(mi, spine));
            }
            let args = match args {
                None => vec![],
                Some(list) => {
                    let mut out = Vec::new();
                    for (names, body) in list {
                        let mut inner = binders.to_vec();
                        inner.extend(names.iter().cloned());
                        out.push(PatArg::new(names.len(), to_pat(body, metas, &inner)?));
                    }
                    out
                }
            };
            Ok(Pat::App(SymbolId::intern(n), args))
        }
    }
}

/// Spine for a meta occurrence: explicit arguments, or the identity spine
/// over the enclosing binders when written bare.
fn spine_for(
    md: &MetaDecl,
    args: &Option<Vec<(Vec<String>, PTerm)>>,
    metas: &[MetaDecl],
    binders: &[String],
) -> Result<Vec<Pat>, ParseError> {
    match args {
        None => {
            if md.binders == binders.len() {
                Ok((0..md.binders).rev().map(Pat::Bound).collect())
            } else if md.binders == 0 {
                Ok(vec![])
            } else {
                Err(ParseError::Hole(format!(
                    "meta {} needs an explicit spine here",
                    md.name
                )))
            }
        }
        Some(list) => {
            let mut out = Vec::new();
            for (names, body) in list {
                if !names.is_empty() {
                    return Err(ParseError::Hole("meta spine entries bind nothing".into()));
                }
                out.push(to_pat(body, metas, binders)?);
            }
            Ok(out)
        }
    }
}

// ---------------------------------------------------------------------
// premises

enum Premise {
    Meta(MetaDecl),
    Eq(EqPremise),
}

/// A premise is `(tele |- rest)` or `(rest)`; `rest` declares a meta
/// (`name type`, `name : T`, `name : _`, optional `:= generic`) or states
/// an equation `t == t`.
fn parse_premise(lx: &mut Lexer, metas: &[MetaDecl]) -> Result<Premise, ParseError> {
    lx.expect(TokenKind::LParen)?;
    // scan for a top-level turnstile to split the telescope
    let mut tele_names: Vec<String> = Vec::new();
    let mut tele_pats: Vec<Pat> = Vec::new();
    let has_tele = scan_for_turnstile(lx);
    if has_tele {
        loop {
            let n = lx.expect_ident()?;
            lx.expect(TokenKind::Colon)?;
            let (bs, body) = parse_pterm(lx)?;
            if !bs.is_empty() {
                return Err(ParseError::Hole("telescope entries bind nothing".into()));
            }
            tele_pats.push(to_pat(&body, metas, &tele_names)?);
            tele_names.push(n);
            if lx.peek_kind() == TokenKind::Comma {
                lx.bump();
            } else {
                break;
            }
        }
        lx.expect(TokenKind::Turnstile)?;
    }

    // rest: meta decl or equation
    let save = lx.clone_state();
    if lx.peek_kind() == TokenKind::Ident {
        let name = lx.bump().text;
        match lx.peek_kind() {
            TokenKind::Ident if lx.peek().text == "type" => {
                lx.bump();
                let generic = parse_generic(lx, metas, &tele_names)?;
                lx.expect(TokenKind::RParen)?;
                let mut md = MetaDecl::ty(&name, tele_names.len(), tele_pats);
                md.generic = generic;
                return Ok(Premise::Meta(md));
            }
            TokenKind::Colon => {
                lx.bump();
                let expected = if lx.peek_kind() == TokenKind::Underscore {
                    lx.bump();
                    None
                } else {
                    let (bs, body) = parse_pterm(lx)?;
                    if !bs.is_empty() {
                        return Err(ParseError::Hole("expected type binds nothing".into()));
                    }
                    Some(to_pat(&body, metas, &tele_names)?)
                };
                let generic = parse_generic(lx, metas, &tele_names)?;
                lx.expect(TokenKind::RParen)?;
                let mut md = MetaDecl::tm(&name, tele_names.len(), tele_pats, expected);
                md.generic = generic;
                return Ok(Premise::Meta(md));
            }
            _ => lx.restore(save),
        }
    }
    // equation premise
    let (bs, lhs) = parse_pterm(lx)?;
    if !bs.is_empty() {
        return Err(ParseError::Hole("equation sides bind nothing".into()));
    }
    lx.expect(TokenKind::EqEq)?;
    let (bs2, rhs) = parse_pterm(lx)?;
    if !bs2.is_empty() {
        return Err(ParseError::Hole("equation sides bind nothing".into()));
    }
    lx.expect(TokenKind::RParen)?;
    Ok(Premise::Eq(EqPremise {
        binders: tele_names.len(),
        telescope: tele_pats,
        lhs: to_pat(&lhs, metas, &tele_names)?,
        rhs: to_pat(&rhs, metas, &tele_names)?,
    }))
}

fn parse_generic(
    lx: &mut Lexer,
    metas: &[MetaDecl],
    tele_names: &[String],
) -> Result<Option<Pat>, ParseError> {
    if lx.peek_kind() == TokenKind::ColonEq {
        lx.bump();
        let (bs, body) = parse_pterm(lx)?;
        if !bs.is_empty() {
            return Err(ParseError::Hole("generic values bind nothing".into()));
        }
        Ok(Some(to_pat(&body, metas, tele_names)?))
    } else {
        Ok(None)
    }
}

fn scan_for_turnstile(lx: &Lexer) -> bool {
    lx.scan_depth_zero(|k| k == TokenKind::Turnstile, |k| k == TokenKind::RParen)
}

// ---------------------------------------------------------------------
// rules and equations

fn parse_rule(lx: &mut Lexer, t: &mut Theory) -> Result<(), ParseError> {
    let _label = symbolish(lx)?;
    lx.expect(TokenKind::Colon)?;
    let mut metas: Vec<MetaDecl> = Vec::new();
    let mut eq_premises: Vec<EqPremise> = Vec::new();
    while lx.peek_kind() == TokenKind::LParen {
        match parse_premise(lx, &metas)? {
            Premise::Meta(md) => metas.push(md),
            Premise::Eq(ep) => eq_premises.push(ep),
        }
    }
    lx.expect(TokenKind::FatArrow)?;
    let (bs, conclusion) = parse_pterm(lx)?;
    if !bs.is_empty() {
        return Err(ParseError::Hole("conclusion binds nothing".into()));
    }
    // conclusion must be head(m1, ..., mk); derive the argument order
    let (head, _concl_args) = match &conclusion {
        PTerm::Name(h, Some(args)) => (h.clone(), args.len()),
        PTerm::Name(h, None) => (h.clone(), 0),
        PTerm::Arrow(..) => ("~>".to_string(), 2),
        _ => return Err(ParseError::Hole("conclusion must be an application".into())),
    };
    let mut written_to_arg: Vec<usize> = Vec::new(); // arg j -> written meta index
    match &conclusion {
        PTerm::Name(_, Some(args)) => {
            for (names, body) in args {
                if !names.is_empty() {
                    return Err(ParseError::Hole("conclusion args are bare metas".into()));
                }
                match body {
                    PTerm::Name(n, None) => {
                        let w = metas
                            .iter()
                            .position(|mdd| &mdd.name == n)
                            .ok_or_else(|| ParseError::Unbound(n.clone()))?;
                        written_to_arg.push(w);
                    }
                    _ => return Err(ParseError::Hole("conclusion args are bare metas".into())),
                }
            }
        }
        PTerm::Arrow(a, bx) => {
            for side in [a.as_ref(), bx.as_ref()] {
                match side {
                    PTerm::Name(n, None) => {
                        let w = metas
                            .iter()
                            .position(|mdd| &mdd.name == n)
                            .ok_or_else(|| ParseError::Unbound(n.clone()))?;
                        written_to_arg.push(w);
                    }
                    _ => return Err(ParseError::Hole("conclusion args are bare metas".into())),
                }
            }
        }
        _ => {}
    }
    if written_to_arg.len() != metas.len() {
        return Err(ParseError::Hole(format!(
            "rule for {}: conclusion must mention every premise meta exactly once",
            head
        )));
    }

    // result type / kind
    let result_ty_pat;
    if lx.at_kw("type") {
        lx.bump();
        result_ty_pat = None;
    } else {
        lx.expect(TokenKind::Colon)?;
        let (bs, body) = parse_pterm(lx)?;
        if !bs.is_empty() {
            return Err(ParseError::Hole("result type binds nothing".into()));
        }
        result_ty_pat = Some(body);
    }

    // permute metas from written order to argument order
    let n = metas.len();
    let mut remap = vec![0usize; n]; // written index -> arg index
    for (arg_j, &w) in written_to_arg.iter().enumerate() {
        remap[w] = arg_j;
    }
    let reorder_pat = |p: &Pat| remap_pat(p, &remap);
    let mut new_metas: Vec<MetaDecl> = vec![MetaDecl::ty("?", 0, vec![]); n];
    for (w, md) in metas.iter().enumerate() {
        let mut md2 = md.clone();
        md2.telescope = md2.telescope.iter().map(reorder_pat).collect();
        md2.expected = md2.expected.as_ref().map(reorder_pat);
        md2.generic = md2.generic.as_ref().map(reorder_pat);
        new_metas[remap[w]] = md2;
    }
    let eq_premises = eq_premises
        .into_iter()
        .map(|ep| EqPremise {
            binders: ep.binders,
            telescope: ep.telescope.iter().map(reorder_pat).collect(),
            lhs: reorder_pat(&ep.lhs),
            rhs: reorder_pat(&ep.rhs),
        })
        .collect();
    let result_ty = match result_ty_pat {
        None => None,
        Some(body) => Some(reorder_pat(&to_pat(&body, &metas, &[])?)),
    };
    let order: Vec<usize> = written_to_arg.clone();
    let order = if order.iter().enumerate().all(|(a, bq)| a == *bq) {
        None
    } else {
        // processing order in argument indexing: the t-th processed meta
        // is written index t, which sits at arg position remap[t]
        Some((0..n).map(|w| remap[w]).collect())
    };

    t.add_rule(TypingRule {
        symbol: SymbolId::intern(&head),
        metas: new_metas,
        eq_premises,
        result_ty,
        order,
    });
    Ok(())
}

fn remap_pat(p: &Pat, remap: &[usize]) -> Pat {
    match p {
        Pat::Bound(i) => Pat::Bound(*i),
        Pat::Meta(mi, spine) => Pat::Meta(remap[*mi], spine.iter().map(|s| remap_pat(s, remap)).collect()),
        Pat::TyOf(mi, spine) => Pat::TyOf(remap[*mi], spine.iter().map(|s| remap_pat(s, remap)).collect()),
        Pat::App(s, args) => Pat::App(
            *s,
            args.iter()
                .map(|a| PatArg::new(a.binders, remap_pat(&a.pat, remap)))
                .collect(),
        ),
    }
}

fn parse_equation(lx: &mut Lexer, t: &mut Theory) -> Result<(), ParseError> {
    let name = symbolish(lx)?;
    lx.expect(TokenKind::Colon)?;
    let mut metas: Vec<MetaDecl> = Vec::new();
    let mut eq_premises: Vec<EqPremise> = Vec::new();
    while lx.peek_kind() == TokenKind::LParen {
        match parse_premise(lx, &metas)? {
            Premise::Meta(md) => metas.push(md),
            Premise::Eq(ep) => eq_premises.push(ep),
        }
    }
    lx.expect(TokenKind::FatArrow)?;
    let (bs, lhs) = parse_pterm(lx)?;
    if !bs.is_empty() {
        return Err(ParseError::Hole("equation sides bind nothing".into()));
    }
    lx.expect(TokenKind::RewriteArrow)?;
    let (bs2, rhs) = parse_pterm(lx)?;
    if !bs2.is_empty() {
        return Err(ParseError::Hole("equation sides bind nothing".into()));
    }
    let lhs = to_pat(&lhs, &metas, &[])?;
    let rhs = to_pat(&rhs, &metas, &[])?;
    t.add_equation(RewriteRule {
        name,
        metas,
        eq_premises,
        lhs,
        rhs,
    });
    Ok(())
}
