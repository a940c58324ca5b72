//! Raw term calculus: De Bruijn terms over a signature, sorts, telescopes,
//! and the substitution/lifting/face/degeneracy operators everything else
//! is built from.

mod ops;

pub use ops::{degenerate, face, lift, strengthen, substitute, OccursError};

use std::fmt;
use std::sync::{OnceLock, RwLock};

/// Judgment kinds. A context is a telescope, a type lives in a context,
/// a term has a type in a context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Ctx,
    Ty,
    Tm,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Ctx => write!(f, "ctx"),
            Kind::Ty => write!(f, "ty"),
            Kind::Tm => write!(f, "tm"),
        }
    }
}

/// A sort is a kind together with the length of the ambient context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sort {
    pub kind: Kind,
    pub level: usize,
}

impl Sort {
    pub fn new(kind: Kind, level: usize) -> Self {
        Sort { kind, level }
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.kind, self.level)
    }
}

/// Interned symbol name. Symbols are disambiguated by name *and* argument
/// count, so `path(A, \x. a)` and `path(\x. a)` may coexist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolId(u32);

struct Interner {
    names: Vec<String>,
    index: std::collections::HashMap<String, u32>,
}

static INTERNER: OnceLock<RwLock<Interner>> = OnceLock::new();

fn interner() -> &'static RwLock<Interner> {
    INTERNER.get_or_init(|| {
        RwLock::new(Interner {
            names: Vec::new(),
            index: std::collections::HashMap::new(),
        })
    })
}

impl SymbolId {
    pub fn intern(name: &str) -> SymbolId {
        {
            let guard = interner().read().unwrap();
            if let Some(&i) = guard.index.get(name) {
                return SymbolId(i);
            }
        }
        let mut guard = interner().write().unwrap();
        if let Some(&i) = guard.index.get(name) {
            return SymbolId(i);
        }
        let i = guard.names.len() as u32;
        guard.names.push(name.to_string());
        guard.index.insert(name.to_string(), i);
        SymbolId(i)
    }

    pub fn name(&self) -> String {
        interner().read().unwrap().names[self.0 as usize].clone()
    }
}

impl fmt::Display for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Interval endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Endpoint {
    Left,
    Right,
}

impl Endpoint {
    pub fn other(self) -> Endpoint {
        match self {
            Endpoint::Left => Endpoint::Right,
            Endpoint::Right => Endpoint::Left,
        }
    }

    pub fn term(self) -> Term {
        match self {
            Endpoint::Left => Term::app0(SymbolId::intern("left")),
            Endpoint::Right => Term::app0(SymbolId::intern("right")),
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Left => write!(f, "left"),
            Endpoint::Right => write!(f, "right"),
        }
    }
}

/// One argument of a symbol application: the body is scoped over the ambient
/// context extended by `binders` fresh variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arg {
    pub binders: usize,
    pub term: Term,
}

impl Arg {
    pub fn new(binders: usize, term: Term) -> Self {
        Arg { binders, term }
    }

    pub fn plain(term: Term) -> Self {
        Arg { binders: 0, term }
    }
}

/// De Bruijn term. `Var(0)` is the innermost context entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    App(SymbolId, Vec<Arg>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn app(sym: SymbolId, args: Vec<Arg>) -> Term {
        Term::App(sym, args)
    }

    pub fn app0(sym: SymbolId) -> Term {
        Term::App(sym, Vec::new())
    }

    pub fn sym(name: &str, args: Vec<Arg>) -> Term {
        Term::App(SymbolId::intern(name), args)
    }

    pub fn is_endpoint(&self) -> Option<Endpoint> {
        match self {
            Term::App(s, args) if args.is_empty() => {
                if *s == SymbolId::intern("left") {
                    Some(Endpoint::Left)
                } else if *s == SymbolId::intern("right") {
                    Some(Endpoint::Right)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Largest free index plus one; 0 for closed terms.
    pub fn max_free(&self) -> usize {
        fn go(t: &Term, depth: usize, acc: &mut usize) {
            match t {
                Term::Var(i) => {
                    if *i >= depth {
                        *acc = (*acc).max(*i - depth + 1);
                    }
                }
                Term::App(_, args) => {
                    for a in args {
                        go(&a.term, depth + a.binders, acc);
                    }
                }
            }
        }
        let mut acc = 0;
        go(self, 0, &mut acc);
        acc
    }

    /// True if the term is well-scoped in a context of length `len`.
    pub fn scoped_under(&self, len: usize) -> bool {
        self.max_free() <= len
    }

    pub fn occurs_free(&self, index: usize) -> bool {
        fn go(t: &Term, target: usize) -> bool {
            match t {
                Term::Var(i) => *i == target,
                Term::App(_, args) => args.iter().any(|a| go(&a.term, target + a.binders)),
            }
        }
        go(self, index)
    }

    /// Number of nodes, used to keep enumeration and fuzz depths honest.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(|a| a.term.size()).sum::<usize>(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "v{}", i),
            Term::App(s, args) => {
                write!(f, "{}", s)?;
                if !args.is_empty() {
                    write!(f, "(")?;
                    for (k, a) in args.iter().enumerate() {
                        if k > 0 {
                            write!(f, ", ")?;
                        }
                        if a.binders > 0 {
                            write!(f, "\\{}. ", a.binders)?;
                        }
                        write!(f, "{}", a.term)?;
                    }
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

/// A telescope: entry `k` is a type well-scoped over the preceding `k`
/// entries. Entry 0 is outermost; the empty telescope is the unit context.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Telescope {
    pub entries: Vec<Term>,
}

impl Telescope {
    pub fn empty() -> Self {
        Telescope { entries: Vec::new() }
    }

    pub fn new(entries: Vec<Term>) -> Self {
        Telescope { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn push(&mut self, ty: Term) {
        self.entries.push(ty);
    }

    pub fn extended(&self, ty: Term) -> Telescope {
        let mut t = self.clone();
        t.push(ty);
        t
    }

    /// Type of `Var(i)` in this context, lifted so it is scoped over the
    /// whole telescope.
    pub fn lookup(&self, i: usize) -> Option<Term> {
        let n = self.len();
        if i >= n {
            return None;
        }
        let pos = n - 1 - i;
        Some(lift(&self.entries[pos], i + 1, 0))
    }

    /// Entries are well-scoped relative to their prefixes.
    pub fn well_scoped(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(k, e)| e.scoped_under(k))
    }
}

impl fmt::Display for Telescope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intern_is_stable() {
        let a = SymbolId::intern("coe0");
        let b = SymbolId::intern("coe0");
        assert_eq!(a, b);
        assert_eq!(a.name(), "coe0");
    }

    #[test]
    fn endpoint_terms_are_recognized() {
        assert_eq!(Endpoint::Left.term().is_endpoint(), Some(Endpoint::Left));
        assert_eq!(Endpoint::Right.term().is_endpoint(), Some(Endpoint::Right));
        assert_eq!(Term::var(0).is_endpoint(), None);
    }

    #[test]
    fn max_free_tracks_binders() {
        // sq(\. v1, v0) : under one binder v1 refers to ambient v0
        let t = Term::sym(
            "sq",
            vec![Arg::new(1, Term::var(1)), Arg::plain(Term::var(0))],
        );
        assert_eq!(t.max_free(), 1);
        assert!(t.scoped_under(1));
        assert!(!t.scoped_under(0));
    }

    #[test]
    fn telescope_lookup_lifts() {
        // (A, B) with B scoped over A; looking up v1 (= A) lifts by 2.
        let a = Term::sym("A", vec![]);
        let b = Term::var(0); // silly but scoped
        let tele = Telescope::new(vec![a.clone(), b]);
        assert!(tele.well_scoped());
        assert_eq!(tele.lookup(1), Some(a));
        assert_eq!(tele.lookup(0), Some(Term::var(1)));
        assert_eq!(tele.lookup(2), None);
    }
}
