//! Compression of a context to length one by nested sigma types, with the
//! two context morphisms whose composites are definitional identities.

use super::ModelError;
use crate::kernel::{lift, substitute, Arg, Telescope, Term};

pub struct SigmaCompression {
    /// the compressed type (closed over the presentation)
    pub sigma: Term,
    /// pack : Gamma -> (Sigma Gamma), one term over the full context
    pub pack: Term,
    /// unpack : (Sigma Gamma) -> Gamma, `n` terms over the single entry,
    /// outermost first
    pub unpack: Vec<Term>,
}

/// Right-nested sigma of a telescope: entry k is scoped over the k
/// earlier entries, which inside the nest are exactly the k enclosing
/// binders, so the bodies embed unchanged.
pub fn sigma_of(entries: &[Term]) -> Term {
    match entries {
        [] => panic!("empty context has no compression"),
        [only] => only.clone(),
        [head, rest @ ..] => Term::sym(
            "Sigma",
            vec![Arg::plain(head.clone()), Arg::new(1, sigma_of(rest))],
        ),
    }
}

/// Build the compression of a telescope of length >= 1.
pub fn sigma_compress(ctx: &Telescope) -> Result<SigmaCompression, ModelError> {
    let n = ctx.len();
    if n == 0 {
        return Err(ModelError::Other("empty context".into()));
    }
    let sigma = sigma_of(&ctx.entries);
    let pack = pack_from(&ctx.entries, 0, n);
    let unpack = (0..n).map(|i| project(&ctx.entries, i)).collect();
    Ok(SigmaCompression { sigma, pack, unpack })
}

/// The nested pair over the ambient context of length n:
/// pair(E_k~, \z. Sigma(tail~), v_{n-1-k}, pack(k+1)).
///
/// Entry types are re-based: seen from the ambient with j binders already
/// opened, the entry's innermost j variables are those binders and the
/// remaining ones point into the ambient prefix, a shift by n - k.
fn pack_from(entries: &[Term], k: usize, n: usize) -> Term {
    let remaining = &entries[k..];
    if remaining.len() == 1 {
        return Term::Var(n - 1 - k);
    }
    let head_ty = lift(&entries[k], n - k, 0);
    let tail_ty = {
        let rebased: Vec<Term> = remaining[1..]
            .iter()
            .enumerate()
            .map(|(j, e)| lift(e, n - k, j + 1))
            .collect();
        sigma_of(&rebased)
    };
    Term::sym(
        "pair",
        vec![
            Arg::plain(head_ty),
            Arg::new(1, tail_ty),
            Arg::plain(Term::Var(n - 1 - k)),
            Arg::plain(pack_from(entries, k + 1, n)),
        ],
    )
}

/// The i-th unpack component (outermost first) over the single-entry
/// context: pi1 applied to i-fold pi2, except the last which is the bare
/// iterated pi2.
fn project(entries: &[Term], i: usize) -> Term {
    let n = entries.len();
    let mut term = Term::Var(0);
    for level in 0..i {
        term = proj(entries, level, term, false);
    }
    if i < n - 1 {
        proj(entries, i, term, true)
    } else {
        term
    }
}

/// One projection at `level` peeled entries; `first` selects pi1.
fn proj(entries: &[Term], level: usize, p: Term, first: bool) -> Term {
    let (head, tail) = split_tys(entries, level);
    Term::sym(
        if first { "pi1" } else { "pi2" },
        vec![Arg::plain(head), Arg::new(1, tail), Arg::plain(p)],
    )
}

/// The head type and tail family of the sigma with `level` entries
/// peeled, expressed over the single-entry context by substituting the
/// earlier projections for the peeled variables.
fn split_tys(entries: &[Term], level: usize) -> (Term, Term) {
    let remaining = &entries[level..];
    debug_assert!(remaining.len() >= 2);
    let prefix: Vec<Term> = (0..level).map(|j| project(entries, j)).collect();
    let head = substitute(&remaining[0], &prefix, 0);
    let tail = {
        let rebased: Vec<Term> = remaining[1..]
            .iter()
            .enumerate()
            .map(|(j, e)| {
                let shifted: Vec<Term> = prefix.iter().map(|t| lift(t, j + 1, 0)).collect();
                substitute(e, &shifted, j + 1)
            })
            .collect();
        sigma_of(&rebased)
    };
    (head, tail)
}
