//! Elements of the path object: judgments one level up whose outermost
//! context entry is the interval, with face projections, the degenerate
//! inclusion, and the swap.

use super::Presentation;
use crate::constructions::interval::inv;
use crate::kernel::{degenerate, substitute, Telescope, Term};
use crate::theory::rewrite::{equal, EqualityVerdict};

/// A judgment of a presented model: a term over an explicit context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub ctx: Telescope,
    pub term: Term,
}

impl Element {
    pub fn new(ctx: Telescope, term: Term) -> Element {
        Element { ctx, term }
    }

    pub fn level(&self) -> usize {
        self.ctx.len()
    }

    /// Membership in the path object: the outermost context entry is the
    /// interval.
    pub fn in_path_object(&self, p: &Presentation, fuel: u64) -> bool {
        match self.ctx.entries.first() {
            None => false,
            Some(first) => matches!(
                equal(&p.lang(), first, &Term::sym("I", vec![]), fuel),
                EqualityVerdict::Yes { .. }
            ),
        }
    }

    fn strip_interval(&self) -> Telescope {
        Telescope::new(self.ctx.entries[1..].to_vec())
    }

    /// Left face: substitute the outermost interval variable by left.
    pub fn p0(&self) -> Element {
        let n = self.level() - 1;
        Element {
            ctx: self.strip_interval(),
            term: substitute(&self.term, &[Term::sym("left", vec![])], n),
        }
    }

    /// Right face.
    pub fn p1(&self) -> Element {
        let n = self.level() - 1;
        Element {
            ctx: self.strip_interval(),
            term: substitute(&self.term, &[Term::sym("right", vec![])], n),
        }
    }

    /// Degenerate inclusion: prepend an unused interval entry.
    pub fn t_op(&self) -> Element {
        let mut entries = vec![Term::sym("I", vec![])];
        entries.extend(self.ctx.entries.iter().cloned());
        Element {
            ctx: Telescope::new(entries),
            term: degenerate(&self.term, self.level()),
        }
    }

    /// Swap: reparametrize the leading interval by its reversal.
    pub fn s_op(&self) -> Element {
        let n = self.level() - 1;
        Element {
            ctx: self.ctx.clone(),
            term: substitute(&self.term, &[inv(Term::var(0))], n),
        }
    }
}
