//! Theories as data: signatures, typing rules, oriented equations, and
//! theory combination.

pub mod generic;
pub mod infer;
pub mod pat;
pub mod rewrite;

pub use generic::{generator_rule, GenericInstance};
pub use infer::{Checker, Judgment, TypeError};
pub use pat::{concrete_to_pat, instantiate, match_pat, Binding, MetaDecl, Pat, PatArg};
pub use rewrite::{equal, normalize, EqualityVerdict, NormalizeOutcome};

use crate::kernel::{Kind, SymbolId, Term};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

/// Symbols are keyed by name and argument count, so distinct theories can
/// overload a name at different arities (`path`, `at`).
pub type SymKey = (SymbolId, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolDecl {
    /// Binder count and kind of each argument.
    pub args: Vec<(usize, Kind)>,
    pub result: Kind,
}

impl SymbolDecl {
    pub fn arity(&self) -> usize {
        self.args.len()
    }
}

/// The typing rule of a symbol: one metavariable per argument, optional
/// equational premises, and the result type for term-formers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypingRule {
    pub symbol: SymbolId,
    pub metas: Vec<MetaDecl>,
    pub eq_premises: Vec<EqPremise>,
    pub result_ty: Option<Pat>,
    /// Order in which argument slots are processed during inference, when
    /// a premise refers to the type of a later argument (as in J). `None`
    /// means left to right.
    pub order: Option<Vec<usize>>,
}

/// Equational premise of a typing rule, stated under `binders` extra
/// variables typed by `telescope`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqPremise {
    pub binders: usize,
    pub telescope: Vec<Pat>,
    pub lhs: Pat,
    pub rhs: Pat,
}

/// Oriented equation. The left side is a rigid pattern; non-occurrence
/// side conditions are expressed by metavariable spines that omit binders.
/// Equational premises are hypotheses of the rule (assumed during
/// schematic validation, never matched on).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub name: String,
    pub metas: Vec<MetaDecl>,
    pub eq_premises: Vec<EqPremise>,
    pub lhs: Pat,
    pub rhs: Pat,
}

impl RewriteRule {
    /// (meta, missing binder depth) pairs implied by the pattern spines.
    pub fn non_occurrence_conditions(&self) -> Vec<(usize, usize)> {
        fn go(pat: &Pat, depth: usize, out: &mut Vec<(usize, usize)>) {
            match pat {
                Pat::Bound(_) => {}
                Pat::Meta(m, spine) => {
                    let omitted = depth.saturating_sub(spine.len());
                    if omitted > 0 {
                        out.push((*m, omitted));
                    }
                }
                Pat::App(_, args) => {
                    for a in args {
                        go(&a.pat, depth + a.binders, out);
                    }
                }
                Pat::TyOf(..) => {}
            }
        }
        let mut out = Vec::new();
        go(&self.lhs, 0, &mut out);
        out
    }
}

#[derive(Debug, Clone, Default)]
pub struct Theory {
    pub name: String,
    pub symbols: BTreeMap<SymKey, SymbolDecl>,
    pub rules: Vec<TypingRule>,
    rule_index: HashMap<SymKey, usize>,
    pub equations: Vec<RewriteRule>,
    pub parents: BTreeSet<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("symbol {0} redeclared with a different arity shape")]
    ConflictingSymbol(String),
    #[error("symbol {0} used but not declared")]
    UndeclaredSymbol(String),
    #[error("rule {0}: {1}")]
    InvalidRule(String, String),
    #[error("equation {0}: {1}")]
    InvalidEquation(String, String),
}

impl Theory {
    pub fn new(name: &str) -> Theory {
        Theory {
            name: name.to_string(),
            ..Theory::default()
        }
    }

    pub fn declare(&mut self, name: &str, args: Vec<(usize, Kind)>, result: Kind) -> SymbolId {
        let id = SymbolId::intern(name);
        self.symbols.insert((id, args.len()), SymbolDecl { args, result });
        id
    }

    pub fn decl(&self, key: SymKey) -> Option<&SymbolDecl> {
        self.symbols.get(&key)
    }

    pub fn decl_of(&self, t: &Term) -> Option<(SymKey, &SymbolDecl)> {
        match t {
            Term::App(s, args) => {
                let key = (*s, args.len());
                self.symbols.get(&key).map(|d| (key, d))
            }
            Term::Var(_) => None,
        }
    }

    pub fn add_rule(&mut self, rule: TypingRule) {
        let key = (rule.symbol, rule.metas.len());
        self.rule_index.insert(key, self.rules.len());
        self.rules.push(rule);
    }

    pub fn rule_for(&self, key: SymKey) -> Option<&TypingRule> {
        self.rule_index.get(&key).map(|&i| &self.rules[i])
    }

    pub fn add_equation(&mut self, eq: RewriteRule) {
        self.equations.push(eq);
    }

    pub fn has_symbol(&self, name: &str, arity: usize) -> bool {
        self.symbols.contains_key(&(SymbolId::intern(name), arity))
    }

    /// Resolve a display name + arity to a symbol id (used by the parser).
    pub fn resolve(&self, name: &str, arity: usize) -> Option<SymbolId> {
        let id = SymbolId::intern(name);
        if self.symbols.contains_key(&(id, arity)) {
            Some(id)
        } else {
            None
        }
    }

    /// Union of two theories, deduplicating rules and equations shared by
    /// the common subtheory. Conflicting redeclarations are errors.
    pub fn combine(&self, other: &Theory) -> Result<Theory, TheoryError> {
        let mut out = self.clone();
        out.name = format!("{}+{}", self.name, other.name);
        for (key, decl) in &other.symbols {
            match out.symbols.get(key) {
                Some(existing) if existing != decl => {
                    return Err(TheoryError::ConflictingSymbol(key.0.name()));
                }
                Some(_) => {}
                None => {
                    out.symbols.insert(*key, decl.clone());
                }
            }
        }
        for rule in &other.rules {
            let key = (rule.symbol, rule.metas.len());
            match out.rule_for(key) {
                Some(existing) if existing == rule => {}
                Some(_) => {
                    return Err(TheoryError::ConflictingSymbol(rule.symbol.name()));
                }
                None => out.add_rule(rule.clone()),
            }
        }
        for eq in &other.equations {
            if !out.equations.iter().any(|e| e.lhs == eq.lhs && e.rhs == eq.rhs) {
                out.add_equation(eq.clone());
            }
        }
        out.parents.insert(self.name.clone());
        out.parents.insert(other.name.clone());
        for p in &other.parents {
            out.parents.insert(p.clone());
        }
        Ok(out)
    }

    pub fn renamed(mut self, name: &str) -> Theory {
        self.name = name.to_string();
        self
    }

    /// Structural check of every rule and equation: declared symbols,
    /// matching arities, scoped patterns, rigid left-hand sides, and
    /// right-hand metas contained in the left.
    pub fn validate(&self) -> Result<(), TheoryError> {
        for rule in &self.rules {
            let key = (rule.symbol, rule.metas.len());
            let decl = self
                .symbols
                .get(&key)
                .ok_or_else(|| TheoryError::UndeclaredSymbol(rule.symbol.name()))?;
            for (j, m) in rule.metas.iter().enumerate() {
                let (bc, kc) = decl.args[j];
                if m.binders != bc || m.kind != kc {
                    return Err(TheoryError::InvalidRule(
                        rule.symbol.name(),
                        format!("meta {} disagrees with declared arity", m.name),
                    ));
                }
                if m.telescope.len() != m.binders {
                    return Err(TheoryError::InvalidRule(
                        rule.symbol.name(),
                        format!("meta {} telescope length mismatch", m.name),
                    ));
                }
                for (t, entry) in m.telescope.iter().enumerate() {
                    self.check_pat_scope(entry, &rule.metas, t).map_err(|e| {
                        TheoryError::InvalidRule(rule.symbol.name(), e)
                    })?;
                }
                if let Some(exp) = &m.expected {
                    self.check_pat_scope(exp, &rule.metas, m.binders)
                        .map_err(|e| TheoryError::InvalidRule(rule.symbol.name(), e))?;
                }
            }
            if let Some(rt) = &rule.result_ty {
                self.check_pat_scope(rt, &rule.metas, 0)
                    .map_err(|e| TheoryError::InvalidRule(rule.symbol.name(), e))?;
            }
            for ep in &rule.eq_premises {
                self.check_pat_scope(&ep.lhs, &rule.metas, ep.binders)
                    .map_err(|e| TheoryError::InvalidRule(rule.symbol.name(), e))?;
                self.check_pat_scope(&ep.rhs, &rule.metas, ep.binders)
                    .map_err(|e| TheoryError::InvalidRule(rule.symbol.name(), e))?;
            }
        }
        for eq in &self.equations {
            self.validate_equation(eq)?;
        }
        Ok(())
    }

    pub fn validate_equation(&self, eq: &RewriteRule) -> Result<(), TheoryError> {
        // lhs must be symbol-headed and a pattern
        match &eq.lhs {
            Pat::App(..) => {}
            _ => {
                return Err(TheoryError::InvalidEquation(
                    eq.name.clone(),
                    "left-hand side is not symbol-headed".into(),
                ))
            }
        }
        self.check_lhs_pattern(&eq.lhs, eq)
            .map_err(|e| TheoryError::InvalidEquation(eq.name.clone(), e))?;
        self.check_pat_scope(&eq.rhs, &eq.metas, 0)
            .map_err(|e| TheoryError::InvalidEquation(eq.name.clone(), e))?;
        let mut lhs_metas = Vec::new();
        eq.lhs.metas_used(&mut lhs_metas);
        let mut rhs_metas = Vec::new();
        eq.rhs.metas_used(&mut rhs_metas);
        for m in rhs_metas {
            if !lhs_metas.contains(&m) {
                return Err(TheoryError::InvalidEquation(
                    eq.name.clone(),
                    format!("right-hand meta {} not bound on the left", eq.metas[m].name),
                ));
            }
        }
        Ok(())
    }

    fn check_lhs_pattern(&self, pat: &Pat, eq: &RewriteRule) -> Result<(), String> {
        fn go(theory: &Theory, pat: &Pat, metas: &[MetaDecl], depth: usize) -> Result<(), String> {
            match pat {
                Pat::Bound(i) => {
                    if *i >= depth {
                        return Err(format!("bound variable {} out of scope", i));
                    }
                    Ok(())
                }
                Pat::Meta(m, spine) => {
                    let decl = metas.get(*m).ok_or("meta out of range")?;
                    if spine.len() != decl.binders {
                        return Err(format!("meta {} spine/arity mismatch", decl.name));
                    }
                    let mut seen = Vec::new();
                    for p in spine {
                        match p {
                            Pat::Bound(i) if *i < depth && !seen.contains(i) => seen.push(*i),
                            _ => {
                                return Err(format!(
                                    "meta {} spine is not distinct bound variables",
                                    decl.name
                                ))
                            }
                        }
                    }
                    Ok(())
                }
                Pat::App(s, args) => {
                    if !theory.symbols.contains_key(&(*s, args.len())) {
                        return Err(format!("undeclared symbol {}/{}", s, args.len()));
                    }
                    for a in args {
                        go(theory, &a.pat, metas, depth + a.binders)?;
                    }
                    Ok(())
                }
                Pat::TyOf(..) => Err("TyOf not allowed in rewrite patterns".into()),
            }
        }
        go(self, pat, &eq.metas, 0)
    }

    fn check_pat_scope(&self, pat: &Pat, metas: &[MetaDecl], depth: usize) -> Result<(), String> {
        match pat {
            Pat::Bound(i) => {
                if *i >= depth {
                    Err(format!("bound variable {} out of scope", i))
                } else {
                    Ok(())
                }
            }
            Pat::Meta(m, spine) | Pat::TyOf(m, spine) => {
                let decl = metas
                    .get(*m)
                    .ok_or_else(|| format!("meta #{} out of range", m))?;
                if spine.len() != decl.binders {
                    return Err(format!("meta {} spine length mismatch", decl.name));
                }
                for p in spine {
                    self.check_pat_scope(p, metas, depth)?;
                }
                Ok(())
            }
            Pat::App(s, args) => {
                if !self.symbols.contains_key(&(*s, args.len())) {
                    return Err(format!("undeclared symbol {}/{}", s, args.len()));
                }
                for a in args {
                    self.check_pat_scope(&a.pat, metas, depth + a.binders)?;
                }
                Ok(())
            }
        }
    }
}
