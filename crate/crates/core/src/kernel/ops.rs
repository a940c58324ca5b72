//! Lifting, simultaneous substitution, cubical face and degeneracy maps,
//! and strengthening. All operations are pure structural recursions.

use super::{Arg, Endpoint, Term};
use thiserror::Error;

/// Reported when strengthening hits an occurrence of the removed variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("variable v{index} occurs free")]
pub struct OccursError {
    pub index: usize,
}

/// Shift all free indices `>= cut` up by `by`. Total.
pub fn lift(t: &Term, by: usize, cut: usize) -> Term {
    if by == 0 {
        return t.clone();
    }
    match t {
        Term::Var(i) => {
            if *i >= cut {
                Term::Var(i + by)
            } else {
                Term::Var(*i)
            }
        }
        Term::App(s, args) => Term::App(
            *s,
            args.iter()
                .map(|a| Arg::new(a.binders, lift(&a.term, by, cut + a.binders)))
                .collect(),
        ),
    }
}

/// Simultaneous substitution. `t` is scoped over `target ++ E ++ B` where
/// `|E| = args.len()` and `|B| = at`; the `E` block is replaced by `args`
/// (listed outermost-first, each scoped over `target`), and indices above
/// the block are shifted down.
pub fn substitute(t: &Term, args: &[Term], at: usize) -> Term {
    let k = args.len();
    if k == 0 {
        return t.clone();
    }
    match t {
        Term::Var(i) => {
            if *i < at {
                Term::Var(*i)
            } else if *i < at + k {
                // position `at + m` counts inward: at -> innermost of E,
                // which is the last of `args`.
                let m = *i - at;
                let chosen = &args[k - 1 - m];
                lift(chosen, at, 0)
            } else {
                Term::Var(*i - k)
            }
        }
        Term::App(s, aps) => Term::App(
            *s,
            aps.iter()
                .map(|a| Arg::new(a.binders, substitute(&a.term, args, at + a.binders)))
                .collect(),
        ),
    }
}

/// Face map: substitute the single context entry at position `i` by the
/// endpoint constant `c`. Indices below `i` are untouched, indices above
/// shift down by one.
pub fn face(t: &Term, i: usize, c: Endpoint) -> Term {
    substitute(t, &[c.term()], i)
}

/// Degeneracy: insert an unused variable at position `i` (counting from the
/// innermost end). `degenerate(t, level(t))` prepends an outermost entry,
/// which is the `I x -` operation when the new entry is the interval.
pub fn degenerate(t: &Term, i: usize) -> Term {
    lift(t, 1, i)
}

/// Remove the context entry at position `i` if it does not occur, shifting
/// higher indices down. An occurrence is a regular outcome, not a panic.
pub fn strengthen(t: &Term, i: usize) -> Result<Term, OccursError> {
    fn go(t: &Term, i: usize) -> Result<Term, OccursError> {
        match t {
            Term::Var(j) => {
                if *j == i {
                    Err(OccursError { index: i })
                } else if *j > i {
                    Ok(Term::Var(*j - 1))
                } else {
                    Ok(Term::Var(*j))
                }
            }
            Term::App(s, args) => {
                let mut out = Vec::with_capacity(args.len());
                for a in args {
                    out.push(Arg::new(a.binders, go(&a.term, i + a.binders)?));
                }
                Ok(Term::App(*s, out))
            }
        }
    }
    go(t, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::SymbolId;

    fn at(args: Vec<Arg>) -> Term {
        Term::App(SymbolId::intern("at"), args)
    }

    #[test]
    fn lift_shifts_free_variable() {
        assert_eq!(lift(&Term::var(0), 1, 0), Term::var(1));
    }

    #[test]
    fn lift_below_cut_unchanged() {
        assert_eq!(lift(&Term::var(0), 1, 1), Term::var(0));
    }

    #[test]
    fn lift_pushes_under_binders() {
        // lift(at(p, v2), 2, 1) where p = \x. v0 x-bound stays, ambient shifts
        let p = Arg::new(1, Term::var(2)); // under binder, v2 = ambient v1
        let t = at(vec![p, Arg::plain(Term::var(2))]);
        let lifted = at(vec![Arg::new(1, Term::var(4)), Arg::plain(Term::var(4))]);
        assert_eq!(lift(&t, 2, 1), lifted);
    }

    #[test]
    fn substitute_identity_on_target_var() {
        let a = Term::sym("left", vec![]);
        assert_eq!(substitute(&Term::var(0), &[a.clone()], 0), a);
    }

    #[test]
    fn substitute_after_lift_is_identity() {
        let t = at(vec![Arg::new(1, Term::var(0)), Arg::plain(Term::var(1))]);
        let a = Term::sym("right", vec![]);
        assert_eq!(substitute(&lift(&t, 1, 0), &[a], 0), t);
    }

    #[test]
    fn substitute_block_order_is_outermost_first() {
        // context ... , e1, e0 ; v1 is the outer block entry -> args[0]
        let a1 = Term::sym("left", vec![]);
        let a0 = Term::sym("right", vec![]);
        assert_eq!(substitute(&Term::var(1), &[a1.clone(), a0.clone()], 0), a1);
        assert_eq!(substitute(&Term::var(0), &[a1, a0.clone()], 0), a0);
    }

    #[test]
    fn face_of_degeneracy_is_identity() {
        let t = at(vec![Arg::new(1, Term::var(3)), Arg::plain(Term::var(0))]);
        for c in [Endpoint::Left, Endpoint::Right] {
            for i in 0..3 {
                assert_eq!(face(&degenerate(&t, i), i, c), t);
            }
        }
    }

    #[test]
    fn strengthen_inverts_lift() {
        let t = at(vec![Arg::new(2, Term::var(2)), Arg::plain(Term::var(1))]);
        assert_eq!(strengthen(&lift(&t, 1, 0), 0), Ok(t));
    }

    #[test]
    fn strengthen_reports_occurrence() {
        assert_eq!(strengthen(&Term::var(0), 0), Err(OccursError { index: 0 }));
    }

    #[test]
    fn degenerate_at_var_zero() {
        assert_eq!(degenerate(&Term::var(0), 0), Term::var(1));
    }
}
