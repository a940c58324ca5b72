//! Printer from kernel terms and theories back to the surface notation.
//! Printing then parsing is the identity on well-formed input; binder
//! names are generated fresh (x0, x1, ...) avoiding every symbol name in
//! the term.

use crate::kernel::{Kind, Telescope, Term};
use crate::theory::pat::{MetaDecl, Pat};
use crate::theory::{EqPremise, RewriteRule, Theory, TypingRule};
use std::collections::BTreeSet;
use std::fmt::Write;

fn collect_symbol_names(t: &Term, out: &mut BTreeSet<String>) {
    if let Term::App(s, args) = t {
        out.insert(s.name());
        for a in &args[..] {
            collect_symbol_names(&a.term, out);
        }
    }
}

struct Namer {
    used: BTreeSet<String>,
    next: usize,
}

impl Namer {
    fn new(used: BTreeSet<String>) -> Namer {
        Namer { used, next: 0 }
    }

    fn fresh(&mut self) -> String {
        loop {
            let cand = format!("x{}", self.next);
            self.next += 1;
            if !self.used.contains(&cand) {
                self.used.insert(cand.clone());
                return cand;
            }
        }
    }
}

/// Render a term using `scope` (outermost first) for free variables.
pub fn print_term(t: &Term, scope: &[String]) -> String {
    let mut used: BTreeSet<String> = scope.iter().cloned().collect();
    collect_symbol_names(t, &mut used);
    let mut namer = Namer::new(used);
    let mut scope: Vec<String> = scope.to_vec();
    let mut out = String::new();
    go(t, &mut scope, &mut namer, false, &mut out);
    out
}

fn go(t: &Term, scope: &mut Vec<String>, namer: &mut Namer, parens_arrow: bool, out: &mut String) {
    match t {
        Term::Var(i) => {
            if *i < scope.len() {
                out.push_str(&scope[scope.len() - 1 - i]);
            } else {
                let _ = write!(out, "v{}", i);
            }
        }
        Term::App(s, args) => {
            let name = s.name();
            if name == "~>" && args.len() == 2 && args[0].binders == 0 && args[1].binders == 0 {
                if parens_arrow {
                    out.push('(');
                }
                go(&args[0].term, scope, namer, true, out);
                out.push_str(" ~> ");
                go(&args[1].term, scope, namer, false, out);
                if parens_arrow {
                    out.push(')');
                }
                return;
            }
            out.push_str(&name);
            if !args.is_empty() {
                out.push('(');
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        out.push_str(", ");
                    }
                    let mut names = Vec::new();
                    if a.binders > 0 {
                        out.push('\\');
                        for j in 0..a.binders {
                            if j > 0 {
                                out.push(' ');
                            }
                            let n = namer.fresh();
                            out.push_str(&n);
                            names.push(n);
                        }
                        out.push_str(". ");
                    }
                    scope.extend(names.iter().cloned());
                    go(&a.term, scope, namer, false, out);
                    for _ in 0..a.binders {
                        scope.pop();
                    }
                }
                out.push(')');
            }
        }
    }
}

pub fn print_telescope(tele: &Telescope) -> (String, Vec<String>) {
    let mut used = BTreeSet::new();
    for e in &tele.entries {
        collect_symbol_names(e, &mut used);
    }
    let mut namer = Namer::new(used);
    let mut names: Vec<String> = Vec::new();
    let mut out = String::new();
    for (k, e) in tele.entries.iter().enumerate() {
        if k > 0 {
            out.push_str(", ");
        }
        let n = namer.fresh();
        let rendered = print_term(e, &names);
        let _ = write!(out, "{} : {}", n, rendered);
        names.push(n);
    }
    (out, names)
}

// ---------------------------------------------------------------------
// theory files

fn kind_word(k: Kind) -> &'static str {
    match k {
        Kind::Ty => "ty",
        Kind::Tm => "tm",
        Kind::Ctx => "ctx",
    }
}

fn print_pat(p: &Pat, metas: &[MetaDecl], binders: &[String], out: &mut String) {
    match p {
        Pat::Bound(i) => {
            if *i < binders.len() {
                out.push_str(&binders[binders.len() - 1 - i]);
            } else {
                let _ = write!(out, "b{}", i);
            }
        }
        Pat::Meta(mi, spine) => {
            let md = &metas[*mi];
            out.push_str(&md.name);
            let identity = spine.len() == binders.len()
                && spine
                    .iter()
                    .enumerate()
                    .all(|(k, s)| *s == Pat::Bound(spine.len() - 1 - k));
            if identity && !spine.is_empty() {
                return; // eta-printed
            }
            if spine.is_empty() && binders.is_empty() {
                return;
            }
            out.push('(');
            for (k, s) in spine.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                print_pat(s, metas, binders, out);
            }
            out.push(')');
        }
        Pat::TyOf(mi, spine) => {
            out.push_str("ty(");
            print_pat(&Pat::Meta(*mi, spine.clone()), metas, binders, out);
            out.push(')');
        }
        Pat::App(s, args) => {
            let name = s.name();
            if name == "~>" && args.len() == 2 && args[0].binders == 0 && args[1].binders == 0 {
                out.push('(');
                print_pat(&args[0].pat, metas, binders, out);
                out.push_str(" ~> ");
                print_pat(&args[1].pat, metas, binders, out);
                out.push(')');
                return;
            }
            out.push_str(&name);
            if !args.is_empty() {
                out.push('(');
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        out.push_str(", ");
                    }
                    let mut names = binders.to_vec();
                    if a.binders > 0 {
                        out.push('\\');
                        for j in 0..a.binders {
                            if j > 0 {
                                out.push(' ');
                            }
                            let n = format!("y{}", binders.len() + j);
                            out.push_str(&n);
                            names.push(n);
                        }
                        out.push_str(". ");
                    }
                    print_pat(&a.pat, metas, &names, out);
                }
                out.push(')');
            } else if name.chars().next().is_some_and(|c| !c.is_alphanumeric() && c != '_') {
                // operator-named constants never appear; keep plain
            }
        }
    }
}

fn meta_binder_names(md: &MetaDecl) -> Vec<String> {
    (0..md.binders).map(|j| format!("y{}", j)).collect()
}

fn print_meta_premise(md: &MetaDecl, metas: &[MetaDecl], out: &mut String) {
    out.push_str("  (");
    let names = meta_binder_names(md);
    for (j, entry) in md.telescope.iter().enumerate() {
        if j > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{} : ", names[j]);
        print_pat(entry, metas, &names[..j].to_vec(), out);
    }
    if md.binders > 0 {
        out.push_str(" |- ");
    }
    out.push_str(&md.name);
    match (&md.kind, &md.expected) {
        (Kind::Ty, _) => out.push_str(" type"),
        (Kind::Tm, Some(exp)) => {
            out.push_str(" : ");
            print_pat(exp, metas, &names, out);
        }
        (Kind::Tm, None) => out.push_str(" : _"),
        (Kind::Ctx, _) => out.push_str(" ctx"),
    }
    if let Some(g) = &md.generic {
        out.push_str(" := ");
        print_pat(g, metas, &names, out);
    }
    out.push_str(")\n");
}

fn print_eq_premise(ep: &EqPremise, metas: &[MetaDecl], out: &mut String) {
    out.push_str("  (");
    let names: Vec<String> = (0..ep.binders).map(|j| format!("y{}", j)).collect();
    for (j, entry) in ep.telescope.iter().enumerate() {
        if j > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{} : ", names[j]);
        print_pat(entry, metas, &names[..j].to_vec(), out);
    }
    if ep.binders > 0 {
        out.push_str(" |- ");
    }
    print_pat(&ep.lhs, metas, &names, out);
    out.push_str(" == ");
    print_pat(&ep.rhs, metas, &names, out);
    out.push_str(")\n");
}

fn print_rule(rule: &TypingRule, arity: usize, out: &mut String) {
    let _ = write!(out, "rule {} :\n", rule.symbol);
    let order: Vec<usize> = rule
        .order
        .clone()
        .unwrap_or_else(|| (0..rule.metas.len()).collect());
    for &j in &order {
        print_meta_premise(&rule.metas[j], &rule.metas, out);
    }
    for ep in &rule.eq_premises {
        print_eq_premise(ep, &rule.metas, out);
    }
    out.push_str("  => ");
    let _ = write!(out, "{}", rule.symbol);
    if arity > 0 {
        out.push('(');
        for (j, md) in rule.metas.iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            out.push_str(&md.name);
        }
        out.push(')');
    }
    match &rule.result_ty {
        Some(rt) => {
            out.push_str(" : ");
            print_pat(rt, &rule.metas, &[], out);
        }
        None => out.push_str(" type"),
    }
    out.push('\n');
}

fn print_equation(eq: &RewriteRule, out: &mut String) {
    let _ = write!(out, "eq {} :\n", eq.name);
    for md in &eq.metas {
        print_meta_premise(md, &eq.metas, out);
    }
    for ep in &eq.eq_premises {
        print_eq_premise(ep, &eq.metas, out);
    }
    out.push_str("  => ");
    print_pat(&eq.lhs, &eq.metas, &[], out);
    out.push_str(" ~~> ");
    print_pat(&eq.rhs, &eq.metas, &[], out);
    out.push('\n');
}

/// Render a whole theory as a self-contained `.thy` file.
pub fn print_theory(t: &Theory) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "theory {}", t.name);
    out.push('\n');
    for ((sym, _arity), decl) in &t.symbols {
        let _ = write!(out, "symbol {} (", sym);
        for (j, (b, k)) in decl.args.iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            out.push_str(kind_word(*k));
            if *b > 0 {
                let _ = write!(out, "/{}", b);
            }
        }
        let _ = writeln!(out, ") : {}", kind_word(decl.result));
    }
    out.push('\n');
    for rule in &t.rules {
        let arity = rule.metas.len();
        print_rule(rule, arity, &mut out);
        out.push('\n');
    }
    for eq in &t.equations {
        print_equation(eq, &mut out);
        out.push('\n');
    }
    out
}
