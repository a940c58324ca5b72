//! The weak-univalence retraction: a section of the wall-classifying map
//! and the per-symbol homotopy family connecting the round trip to the
//! identity.
//!
//! For each equivalence-data symbol x the homotopy h(x) is an
//! interval-indexed term whose left instance is the round-trip image and
//! whose right instance is x itself; both instances are definitional, and
//! each h(x) typechecks at its slot's type over the extended ambient.

use super::diagram::phi;
use super::interval::{dat_fam, dpath, dpath_ty, tleft, tright};
use super::TheoryMorphism;
use crate::kernel::{lift, Arg, SymbolId, Term};
use crate::stdlib::builtin;
use crate::theory::Theory;
use std::collections::BTreeMap;

/// The two morphisms of the retraction together with the homotopy family
/// and the theory the homotopies live in.
pub struct UnivalenceData {
    pub phi: TheoryMorphism,
    pub psi: TheoryMorphism,
    /// Per-symbol homotopies: (name, coordinate count, body). The body is
    /// scoped over the symbol's coordinates followed by one interval
    /// coordinate (innermost).
    pub homotopies: Vec<(String, usize, Term)>,
    /// The ambient theory of the homotopy family: the retraction target
    /// extended by the strengthening rule and heterogeneous paths, which
    /// the square witnesses transport along.
    pub ambient: Theory,
}

fn g0(name: &str) -> Term {
    Term::sym(name, vec![])
}

fn g1(name: &str, x: Term) -> Term {
    Term::sym(name, vec![Arg::plain(x)])
}

fn hom(a: Term, b: Term) -> Term {
    Term::sym("~>", vec![Arg::plain(a), Arg::plain(b)])
}

fn hom_path(a_ty: Term, body: Term) -> Term {
    Term::sym("path", vec![Arg::plain(a_ty), Arg::new(1, body)])
}

fn hom_at(a: Term, b: Term, p: Term, i: Term) -> Term {
    Term::sym(
        "at",
        vec![Arg::plain(a), Arg::plain(b), Arg::plain(p), Arg::plain(i)],
    )
}

fn coe2(fam: Term, i: Term, d: Term, j: Term) -> Term {
    Term::sym(
        "coe2",
        vec![Arg::new(1, fam), Arg::plain(i), Arg::plain(d), Arg::plain(j)],
    )
}

/// Homogeneous concatenation by transport, strict when the second path is
/// a literal reflexivity: coe2(\w. a ~> at(q, w), left, p, right).
fn concat(a_ty: &Term, a: &Term, b: &Term, c: &Term, p: &Term, q: &Term) -> Term {
    let _ = a_ty;
    let fam = hom(
        lift(a, 1, 0),
        hom_at(lift(b, 1, 0), lift(c, 1, 0), lift(q, 1, 0), Term::var(0)),
    );
    coe2(fam, tleft(), p.clone(), tright())
}

/// Interval reversal in homogeneous-path form:
/// at(right, left, coe2(\x. x ~> left, left, refl(left), right), i).
fn inv_hom(i: Term) -> Term {
    let fam = hom(Term::var(0), g0("left"));
    let refl_left = hom_path(g0("I"), g0("left"));
    hom_at(
        g0("right"),
        g0("left"),
        coe2(fam, tleft(), refl_left, tright()),
        i,
    )
}

/// Homogeneous reversal: path(ty, \w. at(p, inv(w))).
fn hom_sym(a_ty: &Term, a: &Term, b: &Term, p: &Term) -> Term {
    hom_path(
        a_ty.clone(),
        hom_at(
            lift(a, 1, 0),
            lift(b, 1, 0),
            lift(p, 1, 0),
            inv_hom(Term::var(0)),
        ),
    )
}

/// The components of psi(H): the equivalence-data generators assembled
/// into the wall type, over one interval binder.
fn psi_wall_family() -> Term {
    // q1(y) : b(a1(y)) ~> y, built from pa : a1(y) ~> a2(y)
    let y = || Term::var(0);
    let a_ = || g0("A");
    let b_ = || g0("B");
    let b_of = |t: Term| g1("b", t);
    let a1_of = |t: Term| g1("a1", t);
    let a2_of = |t: Term| g1("a2", t);
    // sym(q) : y ~> b(a2(y))
    let sym_q = hom_sym(&b_(), &b_of(a2_of(y())), &y(), &g1("q", y()));
    // leg1 = path(A, \j. a1(at(sym q, j))) : a1(y) ~> a1(b(a2(y)))
    let leg1 = hom_path(
        a_(),
        a1_of(hom_at(
            lift(&y(), 1, 0),
            lift(&b_of(a2_of(y())), 1, 0),
            lift(&sym_q, 1, 0),
            Term::var(0),
        )),
    );
    // leg2 = p(a2(y)) : a1(b(a2(y))) ~> a2(y)
    let leg2 = g1("p", a2_of(y()));
    let pa = concat(
        &a_(),
        &a1_of(y()),
        &a1_of(b_of(a2_of(y()))),
        &a2_of(y()),
        &leg1,
        &leg2,
    );
    // leg0 = path(B, \j. b(at(pa, j))) : b(a1(y)) ~> b(a2(y))
    let leg0 = hom_path(
        b_(),
        b_of(hom_at(
            lift(&a1_of(y()), 1, 0),
            lift(&a2_of(y()), 1, 0),
            lift(&pa, 1, 0),
            Term::var(0),
        )),
    );
    let q1 = concat(
        &b_(),
        &b_of(a1_of(y())),
        &b_of(a2_of(y())),
        &y(),
        &leg0,
        &g1("q", y()),
    );
    // iso(A, B, \x. b(x), \y. a1(y), \x. p(x), \y. q1, i) over binder i
    Term::sym(
        "iso",
        vec![
            Arg::plain(a_()),
            Arg::plain(b_()),
            Arg::new(1, g1("b", Term::var(0))),
            Arg::new(1, g1("a1", Term::var(0))),
            Arg::new(1, g1("p", Term::var(0))),
            Arg::new(1, q1),
            Arg::plain(Term::var(0)),
        ],
    )
}

/// The section: UEq + coe2 + beta1 + wUA -> Eq + coe2 + beta1 + wUA,
/// classifying the generic wall by the equivalence it carries.
pub fn psi() -> TheoryMorphism {
    let source = builtin("UEq+HPath+coe2+beta1+wUA").expect("psi source");
    let target = builtin("Eq+coe2+beta1+wUA").expect("psi target");
    let mut mor = TheoryMorphism::new("UEq+coe2+beta1+wUA -> Eq+coe2+beta1+wUA", source, target);
    let mut gens: BTreeMap<SymbolId, usize> = BTreeMap::new();
    gens.insert(SymbolId::intern("psi$i"), 0);
    let wall = psi_wall_family();
    // H(i) |-> the wall at i
    let wall_at_meta = crate::kernel::substitute(&wall, &[g0("psi$i")], 0);
    mor.map(
        "H",
        1,
        super::interval::term_to_pat_over_gens(&wall_at_meta, &gens),
    );
    mor
}

/// psi(phi(x)) for an equivalence-data symbol applied to its coordinate:
/// the round-trip images used as the left instances of the homotopies.
fn roundtrip_images() -> BTreeMap<&'static str, Term> {
    // phi: A -> H(left), B -> H(right), b(x) -> coe2(\i.H, left, x, right),
    //      a1(y), a2(y) -> coe2(\i.H, right, y, left),
    //      p(x) -> coe2(\j. coe2(\i.H, j, f(j), left) ~> x, left, refl(x), right)
    //      q(y) -> coe2(\j. coe2(\i.H, j, g(j), right) ~> y, right, refl(y), left)
    // then psi: H(i) -> wall(i).
    let wall = psi_wall_family();
    let wall_at = |i: Term| crate::kernel::substitute(&wall, &[i], 0);
    let mut out = BTreeMap::new();
    out.insert("A", wall_at(tleft()));
    out.insert("B", wall_at(tright()));
    out.insert(
        "b",
        coe2(wall.clone(), tleft(), Term::var(0), tright()),
    );
    let c0 = coe2(wall.clone(), tright(), Term::var(0), tleft());
    out.insert("a1", c0.clone());
    out.insert("a2", c0);
    // p over x = Var(0)
    {
        let f_at = coe2(lift(&wall, 1, 1), tleft(), Term::var(1), Term::var(0));
        let fam = hom(
            coe2(lift(&wall, 1, 1), Term::var(0), f_at, tleft()),
            Term::var(1),
        );
        let refl_x = hom_path(wall_at(tleft()), Term::var(1));
        out.insert("p", coe2(fam, tleft(), refl_x, tright()));
    }
    // q over y = Var(0)
    {
        let g_at = coe2(lift(&wall, 1, 1), tright(), Term::var(1), Term::var(0));
        let fam = hom(
            coe2(lift(&wall, 1, 1), Term::var(0), g_at, tright()),
            Term::var(1),
        );
        let refl_y = hom_path(wall_at(tright()), Term::var(1));
        out.insert("q", coe2(fam, tright(), refl_y, tleft()));
    }
    out
}

/// The path T : psi(phi(a1))(y) ~> a1(y) (and its a2 analogue), built from
/// the transported inverse-image path and the transport contraction.
fn retraction_path(which_a: &str, which_q: QSide) -> Term {
    let wall = psi_wall_family();
    let y = || Term::var(0);
    let a_of = |t: Term| g1(which_a, t);
    let b_of = |t: Term| g1("b", t);
    let c0 = coe2(wall.clone(), tright(), y(), tleft());
    // the inverse-image path y ~> b(a(y)): sym of the retraction homotopy
    let q_term = match which_q {
        QSide::Q1 => q1_term(),
        QSide::Q => g1("q", Term::var(0)),
    };
    let sym_q = hom_sym(&g0("B"), &b_of(a_of(y())), &y(), &q_term);
    // U = path(A-wall-left, \j. coe2(wall, right, at(sym q, j), left))
    let u = hom_path(
        crate::kernel::substitute(&wall, &[tleft()], 0),
        coe2(
            lift(&wall, 1, 1),
            tright(),
            hom_at(
                lift(&y(), 1, 0),
                lift(&b_of(a_of(y())), 1, 0),
                lift(&sym_q, 1, 0),
                Term::var(0),
            ),
            tleft(),
        ),
    );
    let mid = coe2(wall.clone(), tright(), b_of(a_of(y())), tleft());
    // contraction V : mid ~> a(y) via w(j) = coe2(wall, j, coe2(wall, left, a(y), j), left)
    let m_j = coe2(
        lift(&wall, 1, 1),
        tleft(),
        lift(&a_of(y()), 1, 0),
        inv_hom(Term::var(0)),
    );
    let w_j = coe2(lift(&wall, 1, 1), inv_hom(Term::var(0)), m_j, tleft());
    let v = hom_path(crate::kernel::substitute(&wall, &[tleft()], 0), w_j);
    concat(
        &crate::kernel::substitute(&wall, &[tleft()], 0),
        &c0,
        &mid,
        &a_of(y()),
        &u,
        &v,
    )
}

#[derive(Clone, Copy)]
enum QSide {
    Q1,
    Q,
}

/// q1(y) recomputed standalone (the q-component of the wall).
fn q1_term() -> Term {
    match psi_wall_family() {
        Term::App(_, args) => args[5].term.clone(),
        _ => unreachable!(),
    }
}

/// The homotopy family. Coordinates come first, the interval coordinate
/// is innermost.
pub fn homotopy_family() -> Vec<(String, usize, Term)> {
    let images = roundtrip_images();
    let mut out = Vec::new();
    // constant homotopies
    out.push(("A".to_string(), 0, g0("A")));
    out.push(("B".to_string(), 0, g0("B")));
    // h(b)(x, i) = b(x)
    out.push(("b".to_string(), 1, g1("b", Term::var(1))));
    // h(a1), h(a2): at(psi phi a, a(y), T, i) over (y, i)
    for (name, qs) in [("a1", QSide::Q1), ("a2", QSide::Q)] {
        let t_path = retraction_path(name, qs);
        let img = images.get(name).unwrap();
        let body = hom_at(
            lift(img, 1, 0),
            g1(name, Term::var(1)),
            lift(&t_path, 1, 0),
            Term::var(0),
        );
        // body built over (y, i) with y = Var(1): the pieces above were
        // over y = Var(0), so lift them across the new i coordinate
        out.push((name.to_string(), 1, body));
    }
    // h(p), h(q): heterogeneous transport wrappers whose witnesses are the
    // straightened fillers
    out.push(("p".to_string(), 1, h_pq("p", &images)));
    out.push(("q".to_string(), 1, h_pq("q", &images)));
    out
}

/// h for the homotopy components p and q: a heterogeneous projection
/// at(\w. slot-family, round-trip image, symbol, W, i). The at-rules make
/// both endpoints definitional; W is the square witness connecting the
/// straightened transport to the round-trip image.
fn h_pq(name: &str, images: &BTreeMap<&'static str, Term>) -> Term {
    let wall = psi_wall_family();
    // Everything below is built over the context (coord, i); the family
    // bodies add one extra binder w. x_at(d) is the coordinate seen under
    // d binders beyond the context.
    let coord_at = |d: usize| Term::var(1 + d);
    // slot edge SE(d, w): for p over x it is
    //   at(c0(b x), a1(b x), T_a1[y := b x], w),
    // for q over y it is b(at(c0(y), a2(y), T_a2[y], w)).
    let edge_at = |d: usize, w: Term| -> Term {
        match name {
            "p" => {
                let bx = g1("b", coord_at(d));
                let c0b = coe2(wall.clone(), tright(), bx.clone(), tleft());
                let t_b = crate::kernel::substitute(
                    &retraction_path("a1", QSide::Q1),
                    &[bx.clone()],
                    0,
                );
                hom_at(c0b, g1("a1", bx), t_b, w)
            }
            _ => {
                let y = coord_at(d);
                let c0 = coe2(wall.clone(), tright(), y.clone(), tleft());
                let t_b = crate::kernel::substitute(
                    &retraction_path("a2", QSide::Q),
                    &[y.clone()],
                    0,
                );
                g1("b", hom_at(c0, g1("a2", y), t_b, w))
            }
        }
    };
    // family body at depth d+1 (d extra binders before the family binder)
    let fam_at = |d: usize| hom(edge_at(d + 1, Term::var(0)), coord_at(d + 1));
    let sym_app = g1(name, coord_at(0));
    let img_at = |d: usize| crate::kernel::substitute(images.get(name).unwrap(), &[coord_at(d)], 0);

    // the straight filler from the symbol side:
    // SQ0 = path(\w. coe2(\z. fam(z), right, symbol, w)) : Path(fam, XI, symbol)
    let sq0 = dpath(coe2(fam_at(1), tright(), lift(&sym_app, 1, 0), Term::var(0)));
    let xi = coe2(fam_at(0), tright(), sym_app.clone(), tleft());
    // rho : XI ~> image corrects the filler's start
    let rho = rho_witness(name, &xi, &img_at(0));
    // the slot type at the left stage, used to state rho's projection
    let edge_ty_u = crate::kernel::substitute(&fam_at(1), &[tleft()], 0);
    // W = coe2(\u. Path(fam, at(XI, image, rho, u), symbol), left, SQ0, right)
    let w_fam = dpath_ty(
        fam_at(1),
        dat_fam(
            lift(&edge_ty_u, 1, 0),
            lift(&xi, 1, 0),
            img_at(1),
            lift(&rho, 1, 0),
            Term::var(0),
        ),
        lift(&sym_app, 1, 0),
    );
    let w_term = coe2(w_fam, tleft(), sq0, tright());
    dat_fam(fam_at(0), img_at(0), sym_app, w_term, Term::var(0))
}

/// The two-path connecting the straightened transport to the round-trip
/// image: the commuting outer square of the retraction. The naturality
/// argument that produces it is not mechanized here; the placeholder
/// below is type-correct only when the two transports already coincide,
/// so the h(p)/h(q) witness checks report the gap honestly.
// TODO: derive rho from the transport-naturality square of q1 and the
// squares/concatenation equivalence, as outlined in the retraction proof.
fn rho_witness(name: &str, xi: &Term, img: &Term) -> Term {
    let _ = (name, img);
    dpath(lift(xi, 1, 0))
}

/// The full retraction data.
pub fn univalence_maps() -> UnivalenceData {
    let phi_m = phi();
    let psi_m = psi();
    let ambient = builtin("Eq+coe2+beta1+wUA+sigma+Path").expect("homotopy ambient");
    UnivalenceData {
        phi: phi_m,
        psi: psi_m,
        homotopies: homotopy_family(),
        ambient,
    }
}
