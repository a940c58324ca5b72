//! The homotopy category of a presented model: closed types as objects,
//! homotopy classes of one-variable terms as morphisms, with a
//! witness-certified semi-decision of morphism equality.

use super::{enumerate_elements, ModelError, ModelMorphism, Presentation};
use crate::kernel::{lift, substitute, Arg, Kind, Telescope, Term};
use crate::theory::Checker;

pub struct Ho<'p> {
    pub model: &'p Presentation,
    pub fuel: u64,
}

impl<'p> Ho<'p> {
    pub fn new(model: &'p Presentation, fuel: u64) -> Ho<'p> {
        Ho { model, fuel }
    }

    /// Closed types up to the enumeration depth.
    pub fn objects(&self, depth: usize) -> Vec<Term> {
        enumerate_elements(
            self.model,
            Kind::Ty,
            &Telescope::empty(),
            None,
            depth,
            self.fuel,
        )
    }

    /// The identity morphism on any object.
    pub fn id(&self) -> Term {
        Term::Var(0)
    }

    /// Composition is substitution: (b : A -> B, c : B -> C) |-> c[b].
    pub fn compose(&self, b: &Term, c: &Term) -> Term {
        substitute(c, &[b.clone()], 0)
    }

    /// A morphism A -> B is a term over the one-entry context (A) typed at
    /// the weakening of B.
    pub fn check_hom(&self, a: &Term, b: &Term, body: &Term) -> Result<(), ModelError> {
        let lang = self.model.lang();
        let checker = Checker::with_fuel(&lang, self.fuel);
        let ctx = Telescope::new(vec![a.clone()]);
        checker
            .check(&ctx, body, &lift(b, 1, 0))
            .map_err(|e| ModelError::Other(e.to_string()))
    }

    /// Morphism equality certified by a path witness over (A):
    /// w : b ~> b'.
    pub fn hom_eq(&self, a: &Term, b_ty: &Term, f: &Term, g: &Term, witness: &Term) -> Result<(), ModelError> {
        let _ = b_ty;
        let lang = self.model.lang();
        let checker = Checker::with_fuel(&lang, self.fuel);
        let ctx = Telescope::new(vec![a.clone()]);
        let want = Term::sym("~>", vec![Arg::plain(f.clone()), Arg::plain(g.clone())]);
        checker
            .check(&ctx, witness, &want)
            .map_err(|e| ModelError::Other(e.to_string()))
    }

    /// The composite witness: from p : b ~> b' over (A) and q : c ~> c'
    /// over (B), the square diagonal path(\i. at(c, c', q, i)[y := at(b, b', p, i)]).
    pub fn compose_witness(
        &self,
        a_ty: &Term,
        b_ty: &Term,
        c_ty: &Term,
        b: &Term,
        b2: &Term,
        p: &Term,
        c: &Term,
        c2: &Term,
        q: &Term,
    ) -> Term {
        let _ = (a_ty, b_ty);
        // body over (A, i): at(c, c', q, i)[y := at(b, b', p, i)], where
        // the c-side data lives over (B) and the b-side over (A)
        let b_at = Term::sym(
            "at",
            vec![
                Arg::plain(lift(b, 1, 0)),
                Arg::plain(lift(b2, 1, 0)),
                Arg::plain(lift(p, 1, 0)),
                Arg::plain(Term::var(0)),
            ],
        );
        // re-base a (B)-term to (A, i) with the B-variable substituted
        let into = |t: &Term| substitute(&lift(t, 2, 1), &[b_at.clone()], 0);
        let body = Term::sym(
            "at",
            vec![
                Arg::plain(into(c)),
                Arg::plain(into(c2)),
                Arg::plain(into(q)),
                Arg::plain(Term::var(0)),
            ],
        );
        Term::sym(
            "path",
            vec![Arg::plain(lift(c_ty, 1, 0)), Arg::new(1, body)],
        )
    }

    /// Transport the whole structure along a morphism of models.
    pub fn map_object(&self, f: &ModelMorphism, a: &Term) -> Result<Term, ModelError> {
        f.apply(a)
    }

    pub fn map_hom(&self, f: &ModelMorphism, body: &Term) -> Result<Term, ModelError> {
        f.apply(body)
    }
}
