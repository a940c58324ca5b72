//! Weak-equivalence certificates: finite query sets with supplied lifts
//! and homotopy witnesses. Certification is explicitly over the supplied
//! queries only; the report never claims the universal property.

use super::{ModelError, ModelMorphism};
use crate::constructions::interval::CoeKit;
use crate::kernel::{lift, substitute, Arg, Telescope, Term};
use crate::theory::rewrite::{equal, EqualityVerdict};
use crate::theory::Checker;

/// One lifting query against the map: either a closed type of the target
/// to be lifted, or a term over the image of a source type.
#[derive(Debug, Clone)]
pub enum WeqQuery {
    /// target type `ty` (closed), lift `lifted` (closed source type),
    /// wall: a target type over (I) with faces f(lifted) and ty
    Ty { id: String, ty: Term, lifted: Term, wall: Term },
    /// source type `over` (closed), target term `tm : f(over)`, lift
    /// `lifted : over`, homotopy over (I) with faces f(lifted) and tm
    Tm {
        id: String,
        over: Term,
        tm: Term,
        lifted: Term,
        homotopy: Term,
    },
}

impl WeqQuery {
    pub fn id(&self) -> &str {
        match self {
            WeqQuery::Ty { id, .. } | WeqQuery::Tm { id, .. } => id,
        }
    }
}

#[derive(Debug, Clone)]
pub struct WeakEqCertificate {
    pub queries: Vec<WeqQuery>,
}

#[derive(Debug, Clone)]
pub struct WeqReport {
    /// (query id, check, ok, detail)
    pub entries: Vec<(String, String, bool, String)>,
    /// certification is over the supplied query set only
    pub finite_query_note: &'static str,
}

impl WeqReport {
    pub fn ok(&self) -> bool {
        self.entries.iter().all(|e| e.2)
    }
}

pub fn certify_weak_equivalence(
    f: &ModelMorphism,
    cert: &WeakEqCertificate,
    fuel: u64,
) -> Result<WeqReport, ModelError> {
    let src_lang = f.source.lang();
    let tgt_lang = f.target.lang();
    let src_checker = Checker::with_fuel(&src_lang, fuel);
    let tgt_checker = Checker::with_fuel(&tgt_lang, fuel);
    let mut entries = Vec::new();
    let interval_ctx = Telescope::new(vec![Term::sym("I", vec![])]);
    for q in &cert.queries {
        match q {
            WeqQuery::Ty { id, ty, lifted, wall } => {
                let mut push = |check: &str, r: Result<(), String>| match r {
                    Ok(()) => entries.push((id.clone(), check.into(), true, String::new())),
                    Err(e) => entries.push((id.clone(), check.into(), false, e)),
                };
                push(
                    "lift is a source type",
                    src_checker
                        .check_is_type(&Telescope::empty(), lifted)
                        .map_err(|e| e.to_string()),
                );
                push(
                    "wall is a target family",
                    tgt_checker
                        .check_is_type(&interval_ctx, wall)
                        .map_err(|e| e.to_string()),
                );
                let f_lifted = f.apply(lifted)?;
                let left = substitute(wall, &[Term::sym("left", vec![])], 0);
                let right = substitute(wall, &[Term::sym("right", vec![])], 0);
                push(
                    "left face is the image of the lift",
                    eq_check(&tgt_lang, &left, &f_lifted, fuel),
                );
                push("right face is the query type", eq_check(&tgt_lang, &right, ty, fuel));
            }
            WeqQuery::Tm {
                id,
                over,
                tm,
                lifted,
                homotopy,
            } => {
                let mut push = |check: &str, r: Result<(), String>| match r {
                    Ok(()) => entries.push((id.clone(), check.into(), true, String::new())),
                    Err(e) => entries.push((id.clone(), check.into(), false, e)),
                };
                push(
                    "lift inhabits the source type",
                    src_checker
                        .check(&Telescope::empty(), lifted, over)
                        .map_err(|e| e.to_string()),
                );
                let f_over = f.apply(over)?;
                push(
                    "query term inhabits the image type",
                    tgt_checker
                        .check(&Telescope::empty(), tm, &f_over)
                        .map_err(|e| e.to_string()),
                );
                push(
                    "homotopy is typed over the interval",
                    tgt_checker
                        .check(&interval_ctx, homotopy, &lift(&f_over, 1, 0))
                        .map_err(|e| e.to_string()),
                );
                let f_lifted = f.apply(lifted)?;
                let left = substitute(homotopy, &[Term::sym("left", vec![])], 0);
                let right = substitute(homotopy, &[Term::sym("right", vec![])], 0);
                push(
                    "left face is the image of the lift",
                    eq_check(&tgt_lang, &left, &f_lifted, fuel),
                );
                push("right face is the query term", eq_check(&tgt_lang, &right, tm, fuel));
            }
        }
    }
    Ok(WeqReport {
        entries,
        finite_query_note:
            "certified over the supplied query set only; no universal claim",
    })
}

fn eq_check(theory: &crate::theory::Theory, a: &Term, b: &Term, fuel: u64) -> Result<(), String> {
    match equal(theory, a, b, fuel) {
        EqualityVerdict::Yes { .. } => Ok(()),
        EqualityVerdict::No { left_nf, right_nf } => Err(format!("{} != {}", left_nf, right_nf)),
        EqualityVerdict::Unknown { .. } => Err("unknown (fuel)".into()),
    }
}

/// The graph-equivalence helper terms of the sigma reduction: over a base
/// type `B` and a family `C` (a type over one B-variable),
///   g  : (y : B, w : Sigma(x : Sigma(z : B, C z), pi1 x ~> y)) |- C y
///   g' : (y : B, c : C y) |- Sigma(x : Sigma(z : B, C z), pi1 x ~> y)
/// with g[g'] == c definitionally.
pub struct GraphEquivalence {
    pub g: Term,
    pub g_prime: Term,
    /// the type of w, over (y : B)
    pub w_ty: Term,
}

pub fn graph_equivalence_terms(kit: CoeKit, b_ty: &Term, c_fam: &Term) -> GraphEquivalence {
    let sig = |a: Term, fam: Term| Term::sym("Sigma", vec![Arg::plain(a), Arg::new(1, fam)]);
    let pair = |a: Term, fam: Term, x: Term, y: Term| {
        Term::sym(
            "pair",
            vec![Arg::plain(a), Arg::new(1, fam), Arg::plain(x), Arg::plain(y)],
        )
    };
    let pi1 = |a: Term, fam: Term, p: Term| {
        Term::sym("pi1", vec![Arg::plain(a), Arg::new(1, fam), Arg::plain(p)])
    };
    let pi2 = |a: Term, fam: Term, p: Term| {
        Term::sym("pi2", vec![Arg::plain(a), Arg::new(1, fam), Arg::plain(p)])
    };
    // heterogeneous path type at a constant family
    let hpath = |a_ty: Term, x: Term, y: Term| {
        Term::sym(
            "Path",
            vec![Arg::new(1, lift(&a_ty, 1, 0)), Arg::plain(x), Arg::plain(y)],
        )
    };
    let dat = |a_ty: Term, x: Term, y: Term, pth: Term, i: Term| {
        Term::sym(
            "at",
            vec![
                Arg::new(1, lift(&a_ty, 1, 0)),
                Arg::plain(x),
                Arg::plain(y),
                Arg::plain(pth),
                Arg::plain(i),
            ],
        )
    };
    // inner pair type P = Sigma(z : B, C z), closed
    let p_ty = sig(b_ty.clone(), c_fam.clone());
    // w-type over (y : B): Sigma(x : P, pi1(x) ~> y)
    let pi1_of = |p: Term, d: usize| {
        pi1(lift(b_ty, d, 0), lift(c_fam, d, 1), p)
    };
    let w_ty = {
        let fam = hpath(lift(b_ty, 2, 0), pi1_of(Term::var(0), 2), Term::var(1));
        sig(lift(&p_ty, 1, 0), fam)
    };
    // over (y : B, w : W): t(i) = coe1(\i. C(at(pi2 w, i)), pi2(pi1 w), i)
    let over2 = |t: &Term| lift(t, 2, 0);
    let p_ty2 = over2(&p_ty);
    let w_var = Term::var(0);
    let y_var = Term::var(1);
    let hom_fam = hpath(lift(b_ty, 3, 0), pi1_of(Term::var(0), 3), Term::var(2));
    let pi1_w = pi1(p_ty2.clone(), hom_fam.clone(), w_var.clone());
    let pi2_w = pi2(p_ty2, hom_fam, w_var);
    let pi2_pi1_w = pi2(over2(b_ty), lift(c_fam, 2, 1), pi1_w.clone());
    // inside the transport family (one more binder):
    // at(B, pi1(pi1 w), y, pi2 w, i)
    let at_i = dat(
        lift(b_ty, 3, 0),
        pi1_of(lift(&pi1_w, 1, 0), 3),
        lift(&y_var, 1, 0),
        lift(&pi2_w, 1, 0),
        Term::var(0),
    );
    let trans_fam = substitute(&lift(c_fam, 3, 1), &[at_i], 0);
    let g = kit.coe1(trans_fam, pi2_pi1_w, Term::sym("right", vec![]));
    // over (y : B, c : C y): g' = pair(pair(y, c), refl(y))
    let inner_pair = pair(over2(b_ty), lift(c_fam, 2, 1), Term::var(1), Term::var(0));
    let refl_y = Term::sym("path", vec![Arg::new(1, Term::var(2))]);
    let hom_fam2 = hpath(lift(b_ty, 3, 0), pi1_of(Term::var(0), 3), Term::var(2));
    let g_prime = pair(over2(&p_ty), hom_fam2, inner_pair, refl_y);
    GraphEquivalence { g, g_prime, w_ty }
}
