//! Generating cofibrations, their cylinders, the interval-wall
//! translation of the type cylinder comparison, and the explicit lifts
//! against the trivial cofibrations.

use super::{ModelError, ModelMorphism, Presentation};
use crate::constructions::interval::CoeKit;
use crate::kernel::{lift, substitute, Arg, Endpoint, Kind, Term};
use crate::theory::Theory;
use std::collections::BTreeMap;

/// Materialize a generic context of length n as type generators
/// G0 : (ty,0), ..., G{n-1} : (ty,n-1).
pub fn context_generators(n: usize) -> Vec<super::Generator> {
    (0..n)
        .map(|j| super::Generator {
            name: format!("G{}", j),
            kind: Kind::Ty,
            context: (0..j).map(|t| ctx_entry(t)).collect(),
            ty: None,
        })
        .collect()
}

fn ctx_entry(t: usize) -> Term {
    Term::sym(
        &format!("G{}", t),
        (0..t).rev().map(|i| Arg::plain(Term::Var(i))).collect(),
    )
}

fn gen_app(name: &str, coords: usize) -> Term {
    Term::sym(
        name,
        (0..coords).rev().map(|i| Arg::plain(Term::Var(i))).collect(),
    )
}

/// The inclusion adding one term generator (kind tm) or one type
/// generator (kind ty) over a generic context of length n.
pub fn generating_cofibration(kind: Kind, n: usize, base: &Theory) -> ModelMorphism {
    let mut dom = Presentation::new(&format!("i_{}_{},dom", kind, n), base.clone());
    let mut cod; // extended presentation
    match kind {
        Kind::Tm => {
            dom.generators = context_generators(n);
            dom.generators.push(super::Generator {
                name: "A".into(),
                kind: Kind::Ty,
                context: (0..n).map(ctx_entry).collect(),
                ty: None,
            });
            cod = dom.clone();
            cod.name = format!("i_tm_{},cod", n);
            cod.generators.push(super::Generator {
                name: "a".into(),
                kind: Kind::Tm,
                context: (0..n).map(ctx_entry).collect(),
                ty: Some(gen_app("A", n)),
            });
        }
        _ => {
            dom.generators = context_generators(n);
            cod = dom.clone();
            cod.name = format!("i_ty_{},cod", n);
            cod.generators.push(super::Generator {
                name: "A".into(),
                kind: Kind::Ty,
                context: (0..n).map(ctx_entry).collect(),
                ty: None,
            });
        }
    }
    let images = dom
        .generators
        .iter()
        .map(|g| (g.name.clone(), g.applied()))
        .collect();
    ModelMorphism {
        name: format!("i_({},{})", kind, n),
        source: dom,
        target: cod,
        images,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CylinderKind {
    Tm,
    Ty,
    TyWall,
}

/// Cylinder data: the cylinder presentation, the two end inclusions, and
/// the collapse section.
pub struct CylinderData {
    pub cylinder: Presentation,
    pub i0: ModelMorphism,
    pub i1: ModelMorphism,
    pub s: ModelMorphism,
}

/// The relative cylinder of a generating cofibration.
///
/// For the term inclusion it freely adds an interval-indexed element h
/// over A with the ends as its faces. For the type inclusion it is the
/// equivalence-data presentation; the wall variant replaces it by a
/// single interval-indexed type.
pub fn cylinder(kind: CylinderKind, n: usize, base: &Theory) -> Result<CylinderData, ModelError> {
    let ctx: Vec<Term> = (0..n).map(ctx_entry).collect();
    let gens_gamma = context_generators(n);
    let interval = Term::sym("I", vec![]);

    match kind {
        CylinderKind::Tm => {
            // V = F(Gamma |- a : A), C = F((Gamma |- A), (Gamma, I |- h : A^))
            let mut v = Presentation::new(&format!("cyl_tm_{},end", n), base.clone());
            v.generators = gens_gamma.clone();
            v.generators.push(super::Generator {
                name: "A".into(),
                kind: Kind::Ty,
                context: ctx.clone(),
                ty: None,
            });
            v.generators.push(super::Generator {
                name: "a".into(),
                kind: Kind::Tm,
                context: ctx.clone(),
                ty: Some(gen_app("A", n)),
            });
            let mut c = Presentation::new(&format!("cyl_tm_{}", n), base.clone());
            c.generators = gens_gamma.clone();
            c.generators.push(super::Generator {
                name: "A".into(),
                kind: Kind::Ty,
                context: ctx.clone(),
                ty: None,
            });
            let mut hctx = ctx.clone();
            hctx.push(interval.clone());
            c.generators.push(super::Generator {
                name: "h".into(),
                kind: Kind::Tm,
                context: hctx,
                // A over Gamma, weakened across the interval entry
                ty: Some(lift(&gen_app("A", n), 1, 0)),
            });
            let end = |e: Endpoint| -> ModelMorphism {
                let mut images: BTreeMap<String, Term> = v
                    .generators
                    .iter()
                    .map(|g| (g.name.clone(), g.applied()))
                    .collect();
                // a |-> h(gamma, end)
                let mut args: Vec<Arg> = (1..=n).rev().map(|i| Arg::plain(Term::Var(i - 1))).collect();
                args.push(Arg::plain(e.term()));
                images.insert("a".into(), Term::sym("h", args));
                ModelMorphism {
                    name: format!("i_{}", e),
                    source: v.clone(),
                    target: c.clone(),
                    images,
                }
            };
            let i0 = end(Endpoint::Left);
            let i1 = end(Endpoint::Right);
            let mut s_images: BTreeMap<String, Term> = c
                .generators
                .iter()
                .filter(|g| g.name != "h")
                .map(|g| (g.name.clone(), g.applied()))
                .collect();
            // h(gamma, i) |-> a(gamma): drop the interval coordinate
            let a_up: Vec<Arg> = (1..=n).rev().map(|i| Arg::plain(Term::Var(i))).collect();
            s_images.insert("h".into(), Term::sym("a", a_up));
            let s = ModelMorphism {
                name: "s".into(),
                source: c.clone(),
                target: v.clone(),
                images: s_images,
            };
            Ok(CylinderData { cylinder: c, i0, i1, s })
        }
        CylinderKind::Ty => {
            // V = F(Gamma |- A type); C carries equivalence data over Gamma
            let mut v = Presentation::new(&format!("cyl_ty_{},end", n), base.clone());
            v.generators = gens_gamma.clone();
            v.generators.push(super::Generator {
                name: "A".into(),
                kind: Kind::Ty,
                context: ctx.clone(),
                ty: None,
            });
            let mut c = Presentation::new(&format!("cyl_ty_{}", n), base.clone());
            c.generators = gens_gamma.clone();
            let ty_gen = |name: &str| super::Generator {
                name: name.into(),
                kind: Kind::Ty,
                context: ctx.clone(),
                ty: None,
            };
            c.generators.push(ty_gen("A"));
            c.generators.push(ty_gen("B"));
            let over = |entry: &str| {
                let mut cx = ctx.clone();
                cx.push(gen_app(entry, n));
                cx
            };
            let shifted = |name: &str| lift(&gen_app(name, n), 1, 0);
            c.generators.push(super::Generator {
                name: "b".into(),
                kind: Kind::Tm,
                context: over("A"),
                ty: Some(shifted("B")),
            });
            for a in ["a1", "a2"] {
                c.generators.push(super::Generator {
                    name: a.into(),
                    kind: Kind::Tm,
                    context: over("B"),
                    ty: Some(shifted("A")),
                });
            }
            // p : a1(gamma, b(gamma, x)) ~> x over (Gamma, x : A)
            let coords_up: Vec<Arg> = (1..=n).rev().map(|i| Arg::plain(Term::Var(i))).collect();
            let b_x = Term::sym("b", {
                let mut v2 = coords_up.clone();
                v2.push(Arg::plain(Term::var(0)));
                v2
            });
            let a1_bx = Term::sym("a1", {
                let mut v2 = coords_up.clone();
                v2.push(Arg::plain(b_x.clone()));
                v2
            });
            c.generators.push(super::Generator {
                name: "p".into(),
                kind: Kind::Tm,
                context: over("A"),
                ty: Some(Term::sym(
                    "~>",
                    vec![Arg::plain(a1_bx), Arg::plain(Term::var(0))],
                )),
            });
            let a2_y = Term::sym("a2", {
                let mut v2 = coords_up.clone();
                v2.push(Arg::plain(Term::var(0)));
                v2
            });
            let b_a2y = Term::sym("b", {
                let mut v2 = coords_up.clone();
                v2.push(Arg::plain(a2_y));
                v2
            });
            c.generators.push(super::Generator {
                name: "q".into(),
                kind: Kind::Tm,
                context: over("B"),
                ty: Some(Term::sym(
                    "~>",
                    vec![Arg::plain(b_a2y), Arg::plain(Term::var(0))],
                )),
            });
            let mk_end = |img: &str| {
                let mut images: BTreeMap<String, Term> = gens_gamma
                    .iter()
                    .map(|g| (g.name.clone(), g.applied()))
                    .collect();
                images.insert("A".into(), gen_app(img, n));
                ModelMorphism {
                    name: format!("i_{}", img),
                    source: v.clone(),
                    target: c.clone(),
                    images,
                }
            };
            let i0 = mk_end("A");
            let i1 = mk_end("B");
            // collapse: everything onto A with identities and refl
            let mut s_images: BTreeMap<String, Term> = gens_gamma
                .iter()
                .map(|g| (g.name.clone(), g.applied()))
                .collect();
            s_images.insert("A".into(), gen_app("A", n));
            s_images.insert("B".into(), gen_app("A", n));
            s_images.insert("b".into(), Term::var(0));
            s_images.insert("a1".into(), Term::var(0));
            s_images.insert("a2".into(), Term::var(0));
            let refl_x = Term::sym(
                "path",
                vec![
                    Arg::plain(lift(&gen_app("A", n), 1, 0)),
                    Arg::new(1, Term::var(1)),
                ],
            );
            s_images.insert("p".into(), refl_x.clone());
            s_images.insert("q".into(), refl_x);
            let s = ModelMorphism {
                name: "s".into(),
                source: c.clone(),
                target: v.clone(),
                images: s_images,
            };
            Ok(CylinderData { cylinder: c, i0, i1, s })
        }
        CylinderKind::TyWall => {
            let mut v = Presentation::new(&format!("cylw_ty_{},end", n), base.clone());
            v.generators = gens_gamma.clone();
            v.generators.push(super::Generator {
                name: "A".into(),
                kind: Kind::Ty,
                context: ctx.clone(),
                ty: None,
            });
            let mut c = Presentation::new(&format!("cylw_ty_{}", n), base.clone());
            c.generators = gens_gamma.clone();
            let mut hctx = ctx.clone();
            hctx.push(interval);
            c.generators.push(super::Generator {
                name: "H".into(),
                kind: Kind::Ty,
                context: hctx,
                ty: None,
            });
            let mk_end = |e: Endpoint| {
                let mut images: BTreeMap<String, Term> = gens_gamma
                    .iter()
                    .map(|g| (g.name.clone(), g.applied()))
                    .collect();
                let mut args: Vec<Arg> = (1..=n).rev().map(|i| Arg::plain(Term::Var(i - 1))).collect();
                args.push(Arg::plain(e.term()));
                images.insert("A".into(), Term::sym("H", args));
                ModelMorphism {
                    name: format!("i_{}", e),
                    source: v.clone(),
                    target: c.clone(),
                    images,
                }
            };
            let i0 = mk_end(Endpoint::Left);
            let i1 = mk_end(Endpoint::Right);
            let mut s_images: BTreeMap<String, Term> = gens_gamma
                .iter()
                .map(|g| (g.name.clone(), g.applied()))
                .collect();
            s_images.insert("H".into(), lift(&gen_app("A", n), 1, 0));
            let s = ModelMorphism {
                name: "s".into(),
                source: c.clone(),
                target: v.clone(),
                images: s_images,
            };
            Ok(CylinderData { cylinder: c, i0, i1, s })
        }
    }
}

/// The interval-wall translation of the type-cylinder comparison: lifts a
/// term of the wall pushout one interval dimension, twisting the wall's
/// coordinate by the connection. `n` is the term's level, `wall` the name
/// of the interval-indexed type generator.
pub fn jty_translation(t: &Term, wall: &str, n: usize) -> Term {
    let lifted = lift(t, 1, n);
    twist(&lifted, wall, n, 0)
}

fn twist(t: &Term, wall: &str, n: usize, depth: usize) -> Term {
    match t {
        Term::Var(i) => Term::Var(*i),
        Term::App(s, args) => {
            let mut out: Vec<Arg> = args
                .iter()
                .map(|a| Arg::new(a.binders, twist(&a.term, wall, n, depth + a.binders)))
                .collect();
            if s.name() == wall && !out.is_empty() {
                let last = out.len() - 1;
                let coord = out[last].term.clone();
                out[last].term = Term::sym(
                    "sq",
                    vec![Arg::plain(Term::Var(n + depth)), Arg::plain(coord)],
                );
            }
            Term::App(*s, out)
        }
    }
}

/// The explicit lifts of the path-object projection against the
/// generating cofibrations, for context extensions of length 0 and 1.
///
/// Term case: a family H over (I, Delta) and a section over the left face
/// produce an interval-indexed section whose left face is the given one.
/// Type case: a type over the left face extends to a family over (I,
/// Delta) by coercing the context entries back to the face.
pub enum LiftProblem {
    /// delta entries (over I), the family H over (I, Delta), the section a
    /// over left*(Delta)
    Term {
        delta: Vec<Term>,
        family: Term,
        section: Term,
    },
    /// delta entries (over I), the type A over left*(Delta)
    Type { delta: Vec<Term>, face: Term },
}

pub fn lift_trivial_cofibration(kit: CoeKit, problem: &LiftProblem) -> Result<Term, ModelError> {
    match problem {
        LiftProblem::Term {
            delta,
            family,
            section,
        } => match delta.len() {
            0 => {
                // h(i) = coe1(\x. H(x), a, i) over context (I)
                Ok(kit.coe1(lift(family, 1, 1), lift(section, 1, 0), Term::var(0)))
            }
            1 => {
                // working context (I, z) with i = Var(1), z = Var(0);
                // b'(w) = coe2(\x. B(x), i, z, w)
                let b_entry = &delta[0]; // over its own interval variable
                // family for the outer transport, binder x innermost:
                // \x. H(x, coe2(\x2. B(x2), i, z, x))
                let fam = {
                    let bp = kit.coe2(
                        b_entry.clone(),
                        Term::var(2),
                        Term::var(1),
                        Term::var(0),
                    );
                    substitute(&family.clone(), &[Term::var(0), bp], 0)
                };
                // base over (I, z): a[z' := b'(left)]
                let base = {
                    let bp_left = kit.coe2(
                        b_entry.clone(),
                        Term::var(1),
                        Term::var(0),
                        Endpoint::Left.term(),
                    );
                    substitute(&section.clone(), &[bp_left], 0)
                };
                Ok(kit.coe1(fam, base, Term::var(1)))
            }
            _ => Err(ModelError::Other(
                "term lifts are provided for contexts of length 0 and 1".into(),
            )),
        },
        LiftProblem::Type { delta, face } => match delta.len() {
            0 => Ok(lift(face, 1, 0)),
            1 => {
                // context (I, z): b1 = coe2(\x. B(x), i, z, left); H = A[b1]
                let b1 = kit.coe2(
                    lift(&delta[0], 2, 1),
                    Term::var(1),
                    Term::var(0),
                    Endpoint::Left.term(),
                );
                Ok(substitute(&lift(face, 2, 1), &[b1], 0))
            }
            _ => Err(ModelError::Other(
                "type lifts are provided for contexts of length 0 and 1".into(),
            )),
        },
    }
}
