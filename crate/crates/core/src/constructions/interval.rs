//! Derived interval operations: path reversal, connections, the diagonal
//! correction, n-dimensional fillers built from coercion and path types,
//! path concatenation with strict units, square types, and the equivalence
//! between squares and boundary concatenations.

use crate::kernel::{lift, substitute, Arg, Endpoint, Kind, SymbolId, Term};
use crate::stdlib::{builtin, fill_faces, fill_symbol_name};
use crate::theory::pat::{Pat, PatArg};
use crate::theory::Theory;
use std::collections::BTreeMap;

// ---------------------------------------------------------------------
// term builders

pub fn tleft() -> Term {
    Term::sym("left", vec![])
}

pub fn tright() -> Term {
    Term::sym("right", vec![])
}

pub fn ti() -> Term {
    Term::sym("I", vec![])
}

/// Heterogeneous path type over a constant family.
pub fn hp(a_ty: &Term, a: Term, b: Term) -> Term {
    Term::sym(
        "Path",
        vec![Arg::new(1, lift(a_ty, 1, 0)), Arg::plain(a), Arg::plain(b)],
    )
}

/// Heterogeneous path literal.
pub fn dpath(body: Term) -> Term {
    Term::sym("path", vec![Arg::new(1, body)])
}

pub fn drefl(a: &Term) -> Term {
    dpath(lift(a, 1, 0))
}

/// Heterogeneous application at a constant family.
pub fn dat(a_ty: &Term, a: Term, b: Term, p: Term, i: Term) -> Term {
    Term::sym(
        "at",
        vec![
            Arg::new(1, lift(a_ty, 1, 0)),
            Arg::plain(a),
            Arg::plain(b),
            Arg::plain(p),
            Arg::plain(i),
        ],
    )
}

/// Heterogeneous application at an explicit family (body over one binder).
pub fn dat_fam(fam: Term, a: Term, b: Term, p: Term, i: Term) -> Term {
    Term::sym(
        "at",
        vec![
            Arg::new(1, fam),
            Arg::plain(a),
            Arg::plain(b),
            Arg::plain(p),
            Arg::plain(i),
        ],
    )
}

pub fn dpath_ty(fam: Term, a: Term, b: Term) -> Term {
    Term::sym(
        "Path",
        vec![Arg::new(1, fam), Arg::plain(a), Arg::plain(b)],
    )
}

// ---------------------------------------------------------------------
// coercion kit

/// Term builders for the three coercion operators over an ambient theory
/// that primitively has either coe1 or coe2. The derived forms follow the
/// diagonal-correction route when a genuine coe2 is requested over a
/// coe1-based ambient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeKit {
    /// coe1 is primitive; coe0 specializes it, coe2 reparametrizes by dc'.
    Coe1Based,
    /// coe2 is primitive; coe0 and coe1 start at the left face.
    Coe2Based,
    /// only coe0 is primitive; coe1 reparametrizes by sq, coe2 by dc'.
    Coe0SqBased,
}

impl CoeKit {
    pub fn for_theory(t: &Theory) -> CoeKit {
        if t.has_symbol("coe1", 3) {
            CoeKit::Coe1Based
        } else if t.has_symbol("coe2", 4) {
            CoeKit::Coe2Based
        } else {
            CoeKit::Coe0SqBased
        }
    }

    /// coe from the left face to the right face.
    pub fn coe0(&self, fam: Term, d: Term) -> Term {
        match self {
            CoeKit::Coe1Based => self.coe1(fam, d, tright()),
            CoeKit::Coe2Based => self.coe2(fam, tleft(), d, tright()),
            CoeKit::Coe0SqBased => Term::sym("coe0", vec![Arg::new(1, fam), Arg::plain(d)]),
        }
    }

    /// coe from the left face to an arbitrary index.
    pub fn coe1(&self, fam: Term, d: Term, i: Term) -> Term {
        match self {
            CoeKit::Coe1Based => Term::sym(
                "coe1",
                vec![Arg::new(1, fam), Arg::plain(d), Arg::plain(i)],
            ),
            CoeKit::Coe2Based => self.coe2(fam, tleft(), d, i),
            CoeKit::Coe0SqBased => {
                // coe0(\v. fam[sq(v, i)], d)
                let sq = Term::sym(
                    "sq",
                    vec![Arg::plain(Term::var(0)), Arg::plain(lift(&i, 1, 0))],
                );
                let fam2 = substitute(&lift(&fam, 1, 1), &[sq], 0);
                self.coe0(fam2, d)
            }
        }
    }

    /// coe between arbitrary indices; over a coe1- or coe0-based ambient
    /// this goes through the diagonal correction dc'.
    pub fn coe2(&self, fam: Term, i: Term, d: Term, j: Term) -> Term {
        match self {
            CoeKit::Coe2Based => Term::sym(
                "coe2",
                vec![
                    Arg::new(1, fam),
                    Arg::plain(i),
                    Arg::plain(d),
                    Arg::plain(j),
                ],
            ),
            CoeKit::Coe1Based | CoeKit::Coe0SqBased => {
                // coe0(\x. fam[dc'(i, j, x)], d)
                let dc = dc_prime_kit(*self, lift(&i, 1, 0), lift(&j, 1, 0), Term::var(0));
                let fam2 = substitute(&lift(&fam, 1, 1), &[dc], 0);
                self.coe0(fam2, d)
            }
        }
    }
}

// ---------------------------------------------------------------------
// basic derived operations

/// Path reversal on the interval: at(right, left, coe0(\x. x ~> left as a
/// heterogeneous type, refl(left)), i).
pub fn inv(i: Term) -> Term {
    inv_kit(CoeKit::Coe1Based, i)
}

pub fn inv_kit(kit: CoeKit, i: Term) -> Term {
    let fam = hp(&ti(), Term::var(0), tleft());
    let coe = kit.coe0(fam, drefl(&tleft()));
    dat(&ti(), tright(), tleft(), coe, i)
}

/// sq with the extra law sq_l(i, right) == i, built by transporting the
/// degenerate square along the family Path(\x2. left ~> sq(x1, x2), ...).
pub fn sq_l(i: Term, j: Term) -> Term {
    sq_l_kit(CoeKit::Coe1Based, i, j)
}

pub fn sq_l_kit(kit: CoeKit, i: Term, j: Term) -> Term {
    let sq = |a: Term, b: Term| Term::sym("sq", vec![Arg::plain(a), Arg::plain(b)]);
    // p1(x1) = path(\x3. sq(x1, x3)), over one ambient binder x1
    let p1 = |x1: Term| dpath(sq(lift(&x1, 1, 0), Term::var(0)));
    // H(x1) = Path(\x2. left ~> sq(x1, x2), refl(left), p1(x1)), over binder x1
    let h_fam = {
        // body over binders (x1, x2): hp(I, left, sq(v1, v0))
        let inner = hp(&ti(), tleft(), sq(Term::var(1), Term::var(0)));
        dpath_ty(inner, drefl(&tleft()), p1(Term::var(0)))
    };
    let p2 = dpath(lift(&drefl(&tleft()), 1, 0));
    let transported = kit.coe0(h_fam, p2);
    // inner application: at(\x2. left ~> sq(right, x2), refl(left), p1(right), transported, i)
    let fam_right = hp(&ti(), tleft(), sq(tright(), Term::var(0)));
    let line = dat_fam(
        fam_right,
        drefl(&tleft()),
        p1(tright()),
        transported,
        i.clone(),
    );
    dat(&ti(), tleft(), i, line, j)
}

/// An n-dimensional filler term over coe1 + Path. `fam` is the type family
/// over the n cube dimensions (dimension 0 innermost); `faces[(p, c)]` are
/// the box faces over the remaining n-1 dimensions; `coords` are the
/// evaluation coordinates, outermost dimension first.
pub fn fill_term(
    n: usize,
    fam: Term,
    faces: &BTreeMap<(usize, bool), Term>,
    coords: &[Term],
) -> Term {
    fill_term_kit(CoeKit::Coe1Based, n, fam, faces, coords)
}

pub fn fill_term_kit(
    kit: CoeKit,
    n: usize,
    fam: Term,
    faces: &BTreeMap<(usize, bool), Term>,
    coords: &[Term],
) -> Term {
    assert_eq!(coords.len(), n);
    let face = |p: usize, left_face: bool| faces.get(&(p, left_face)).unwrap().clone();
    if n == 1 {
        return kit.coe1(fam, face(0, true), coords[0].clone());
    }
    // Path family over the remaining n-1 dimensions; bodies keep their
    // De Bruijn layout (dimension 0 becomes the Path binder).
    let path_fam = dpath_ty(fam.clone(), face(0, true), face(0, false));
    let mut inner_faces = BTreeMap::new();
    for p in 1..n {
        inner_faces.insert((p - 1, true), dpath(face(p, true)));
        if p != n - 1 {
            inner_faces.insert((p - 1, false), dpath(face(p, false)));
        }
    }
    let inner = fill_term_kit(kit, n - 1, path_fam, &inner_faces, &coords[..n - 1]);
    let outer = &coords[..n - 1];
    let fam_line = Arg::new(1, substitute(&fam, outer, 1));
    let a = substitute(&face(0, true), outer, 0);
    let b = substitute(&face(0, false), outer, 0);
    Term::App(
        SymbolId::intern("at"),
        vec![
            fam_line,
            Arg::plain(a),
            Arg::plain(b),
            Arg::plain(inner),
            Arg::plain(coords[n - 1].clone()),
        ],
    )
}

/// sq with the laws of a right connection, built by filling a 3-cube whose
/// given faces are sq_l squares, projection squares and a constant square.
pub fn sq_r(i: Term, j: Term) -> Term {
    sq_r_kit(CoeKit::Coe1Based, i, j)
}

pub fn sq_r_kit(kit: CoeKit, i: Term, j: Term) -> Term {
    let mut faces = BTreeMap::new();
    // dims: 2 = depth (missing face right), 1 = first argument, 0 = second
    faces.insert((0, true), sq_l_kit(kit, Term::var(0), Term::var(1)));
    faces.insert((0, false), Term::var(1));
    faces.insert((1, true), sq_l_kit(kit, Term::var(0), Term::var(1)));
    faces.insert((1, false), Term::var(1));
    faces.insert((2, true), tleft());
    fill_term_kit(kit, 3, ti(), &faces, &[tright(), i, j])
}

/// The diagonal correction: dc'(i, j, left) == i, dc'(i, j, right) == j,
/// dc'(left, left, k) == left, dc'(right, right, k) == right.
pub fn dc_prime(i: Term, j: Term, k: Term) -> Term {
    dc_prime_kit(CoeKit::Coe1Based, i, j, k)
}

pub fn dc_prime_kit(kit: CoeKit, i: Term, j: Term, k: Term) -> Term {
    // left face of the horn (underspecified in general; produced by the
    // two-dimensional filler applied to the stated boundary)
    let left_square = {
        let mut faces = BTreeMap::new();
        faces.insert((0, true), Term::var(0));
        faces.insert((0, false), tleft());
        faces.insert((1, true), tleft());
        fill_term_kit(kit, 2, ti(), &faces, &[Term::var(1), Term::var(0)])
    };
    let mut faces = BTreeMap::new();
    // dims: 2 = i, 1 = j, 0 = k
    faces.insert((0, true), Term::var(1)); // k = left: value i
    faces.insert((0, false), Term::var(0)); // k = right: value j
    faces.insert((1, true), left_square); // j = left
    faces.insert((1, false), sq_r_kit(kit, Term::var(1), Term::var(0))); // j = right
    faces.insert((2, true), sq_l_kit(kit, Term::var(1), Term::var(0))); // i = left
    fill_term_kit(kit, 3, ti(), &faces, &[i, j, k])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalOp {
    Inv,
    SqL,
    SqR,
    DcPrime,
}

/// The derived interval operations as closed schematic terms; arguments
/// are supplied as terms. The ambient theory must contain coe1 + Path (+ sq
/// for the connections).
pub fn derive_interval_op(op: IntervalOp, args: &[Term]) -> Term {
    match op {
        IntervalOp::Inv => inv(args[0].clone()),
        IntervalOp::SqL => sq_l(args[0].clone(), args[1].clone()),
        IntervalOp::SqR => sq_r(args[0].clone(), args[1].clone()),
        IntervalOp::DcPrime => dc_prime(args[0].clone(), args[1].clone(), args[2].clone()),
    }
}

/// The connections ambient: coercion, strengthening, connections and both
/// path types.
pub fn connections_theory() -> Theory {
    builtin("coe1+sigma+sq+HPath+Path").expect("connections ambient")
}

// ---------------------------------------------------------------------
// path algebra over a flavor of path types

/// Which path-type presentation an algebra term should use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Hom,
    Het,
}

/// Flavor-indexed builders: path type, literal, refl, application.
pub struct Paths {
    pub flavor: Flavor,
}

impl Paths {
    pub fn ty(&self, a_ty: &Term, a: Term, b: Term) -> Term {
        match self.flavor {
            Flavor::Hom => Term::sym("~>", vec![Arg::plain(a), Arg::plain(b)]),
            Flavor::Het => hp(a_ty, a, b),
        }
    }

    pub fn refl(&self, a_ty: &Term, a: &Term) -> Term {
        match self.flavor {
            Flavor::Hom => Term::sym(
                "path",
                vec![Arg::plain(a_ty.clone()), Arg::new(1, lift(a, 1, 0))],
            ),
            Flavor::Het => drefl(a),
        }
    }

    pub fn mk(&self, a_ty: &Term, body: Term) -> Term {
        match self.flavor {
            Flavor::Hom => Term::sym(
                "path",
                vec![Arg::plain(a_ty.clone()), Arg::new(1, body)],
            ),
            Flavor::Het => dpath(body),
        }
    }

    pub fn at(&self, a_ty: &Term, a: Term, b: Term, p: Term, i: Term) -> Term {
        match self.flavor {
            Flavor::Hom => Term::sym(
                "at",
                vec![Arg::plain(a), Arg::plain(b), Arg::plain(p), Arg::plain(i)],
            ),
            Flavor::Het => dat(a_ty, a, b, p, i),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathOp {
    Sym,
    ConcatL,
    ConcatR,
}

/// Endpoint-annotated path algebra. `sym` reverses; `concat_l` has a
/// strict left unit (refl * p == p via the constant-family rule),
/// `concat_r` a strict right unit. Transport is by coe1 or coe2 depending
/// on the kit.
pub struct PathAlgebra {
    pub kit: CoeKit,
    pub paths: Paths,
}

impl PathAlgebra {
    pub fn new(theory: &Theory, flavor: Flavor) -> PathAlgebra {
        PathAlgebra {
            kit: CoeKit::for_theory(theory),
            paths: Paths { flavor },
        }
    }

    /// sym(p) : b ~> a for p : a ~> b.
    pub fn sym(&self, a_ty: &Term, a: &Term, b: &Term, p: &Term) -> Term {
        let body = self.paths.at(
            &lift(a_ty, 1, 0),
            lift(a, 1, 0),
            lift(b, 1, 0),
            lift(p, 1, 0),
            inv(Term::var(0)),
        );
        self.paths.mk(a_ty, body)
    }

    /// p *_l q : a ~> c for p : a ~> b, q : b ~> c; refl *_l q == q.
    pub fn concat_l(&self, a_ty: &Term, a: &Term, b: &Term, c: &Term, p: &Term, q: &Term) -> Term {
        // coe(\w. at(p, inv(w)) ~> c, q, right)
        let fam = self.paths.ty(
            &lift(a_ty, 1, 0),
            self.paths.at(
                &lift(a_ty, 1, 0),
                lift(a, 1, 0),
                lift(b, 1, 0),
                lift(p, 1, 0),
                inv(Term::var(0)),
            ),
            lift(c, 1, 0),
        );
        self.kit.coe1(fam, q.clone(), tright())
    }

    /// p *_r q : a ~> c for p : a ~> b, q : b ~> c; p *_r refl == p.
    pub fn concat_r(&self, a_ty: &Term, a: &Term, b: &Term, c: &Term, p: &Term, q: &Term) -> Term {
        // coe(\w. a ~> at(q, w), p, right)
        let fam = self.paths.ty(
            &lift(a_ty, 1, 0),
            lift(a, 1, 0),
            self.paths.at(
                &lift(a_ty, 1, 0),
                lift(b, 1, 0),
                lift(c, 1, 0),
                lift(q, 1, 0),
                Term::var(0),
            ),
        );
        self.kit.coe1(fam, p.clone(), tright())
    }
}

pub fn path_algebra(theory: &Theory, op: PathOp, flavor: Flavor, a_ty: &Term, ends: &[Term], ps: &[Term]) -> Term {
    let alg = PathAlgebra::new(theory, flavor);
    match op {
        PathOp::Sym => alg.sym(a_ty, &ends[0], &ends[1], &ps[0]),
        PathOp::ConcatL => alg.concat_l(a_ty, &ends[0], &ends[1], &ends[2], &ps[0], &ps[1]),
        PathOp::ConcatR => alg.concat_r(a_ty, &ends[0], &ends[1], &ends[2], &ps[0], &ps[1]),
    }
}

// ---------------------------------------------------------------------
// squares

/// Boundary data of a square in a type `a_ty`: edge bodies over one
/// interval binder.
#[derive(Debug, Clone)]
pub struct SquareBoundary {
    pub a_ty: Term,
    /// top edge p-0 over x
    pub pm0: Term,
    /// bottom edge p-1 over x
    pub pm1: Term,
    /// left edge p0- over y
    pub p0m: Term,
    /// right edge p1- over y
    pub p1m: Term,
}

impl SquareBoundary {
    pub fn corners(&self) -> [(Term, Term); 4] {
        let f = |body: &Term, c: Endpoint| substitute(body, &[c.term()], 0);
        [
            (f(&self.pm0, Endpoint::Left), f(&self.p0m, Endpoint::Left)),
            (f(&self.pm0, Endpoint::Right), f(&self.p1m, Endpoint::Left)),
            (f(&self.p0m, Endpoint::Right), f(&self.pm1, Endpoint::Left)),
            (f(&self.p1m, Endpoint::Right), f(&self.pm1, Endpoint::Right)),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SquareError {
    #[error("corner {0} of the boundary does not match: {1} vs {2}")]
    Corner(usize, Term, Term),
}

/// The type of squares with the given boundary:
/// Path(\x. pm0 ~> pm1, path(\y. p0m), path(\y. p1m)).
pub fn square_type(theory: &Theory, b: &SquareBoundary, fuel: u64) -> Result<Term, SquareError> {
    for (k, (x, y)) in b.corners().iter().enumerate() {
        match crate::theory::rewrite::equal(theory, x, y, fuel) {
            crate::theory::rewrite::EqualityVerdict::Yes { .. } => {}
            _ => return Err(SquareError::Corner(k, x.clone(), y.clone())),
        }
    }
    Ok(square_type_unchecked(b))
}

pub fn square_type_unchecked(b: &SquareBoundary) -> Term {
    let fam = hp(&lift(&b.a_ty, 1, 0), b.pm0.clone(), b.pm1.clone());
    dpath_ty(fam, dpath(b.p0m.clone()), dpath(b.p1m.clone()))
}

/// Equivalence data between two types: maps back and forth plus both
/// round-trip homotopies.
#[derive(Debug, Clone)]
pub struct EquivalenceData {
    /// the interval-indexed type interpolating the two sides, over one binder
    pub wall: Term,
    pub forward: Term,
    pub backward: Term,
    /// backward(forward(s)) ~> s, over one binder s... supplied as closed
    /// terms over the generator element
    pub homotopy_fwd: Term,
    pub homotopy_bwd: Term,
}

/// The interpolating type of the squares-vs-concatenation equivalence.
///
/// The wall is a type over one interval binder whose left face is the
/// square type and whose right face is the concatenation type
/// `p0m ~> pm0 *_l p1m *_r sym(pm1)`. Forward/backward transport along the
/// wall; the round trips contract through the diagonal correction, whose
/// endpoint laws make both homotopy endpoints definitional.
pub fn squares_eq(
    theory: &Theory,
    b: &SquareBoundary,
    elem_sq: &Term,
    elem_cc: &Term,
) -> EquivalenceData {
    let alg = PathAlgebra::new(theory, Flavor::Het);
    let kit = alg.kit;
    let f = |body: &Term, c: Endpoint| substitute(body, &[c.term()], 0);
    let a00 = f(&b.pm0, Endpoint::Left);
    let a10 = f(&b.pm0, Endpoint::Right);
    let a01 = f(&b.pm1, Endpoint::Left);
    let a11 = f(&b.pm1, Endpoint::Right);

    // Family of the wall, over two binders (i outer, x inner):
    //   at(pm0, sq_l(x, inv(i))) ~> at(pm1, sq_l(x, inv(i)))
    // At i = left the reparametrization collapses to x (square family);
    // at i = right it collapses to left (constant family).
    let reparam = sq_l(Term::var(0), inv(Term::var(1)));
    let edge2 = |pbody: &Term, pa: &Term, pb: &Term| {
        dat(
            &lift(&b.a_ty, 2, 0),
            lift(pa, 2, 0),
            lift(pb, 2, 0),
            lift(&dpath(pbody.clone()), 2, 0),
            reparam.clone(),
        )
    };
    let fam_body = hp(
        &lift(&b.a_ty, 2, 0),
        edge2(&b.pm0, &a00, &a10),
        edge2(&b.pm1, &a01, &a11),
    );

    // t(i), the right endpoint of the wall at depth 1 (i = Var(0)):
    // seg0 = path(\j. at(pm0, sq_r(inv(i), j)))  : at(pm0, inv(i)) ~> a10
    // p1m-path                                   : a10 ~> a11
    // seg2 = path(\j. at(pm1, sq_r(inv(i), j)))  : at(pm1, inv(i)) ~> a11
    // t(i) = (seg0 *_l p1m) *_r sym(seg2)
    let a_ty1 = lift(&b.a_ty, 1, 0);
    let seg = |pbody: &Term, pa: &Term, pb: &Term| {
        // body over (i, j); j innermost
        dpath(dat(
            &lift(&b.a_ty, 2, 0),
            lift(pa, 2, 0),
            lift(pb, 2, 0),
            lift(&dpath(pbody.clone()), 2, 0),
            sq_r(inv(Term::var(1)), Term::var(0)),
        ))
    };
    let seg_end = |pbody: &Term, pa: &Term, pb: &Term| {
        // at(p, inv(i)) at depth 1
        dat(
            &a_ty1,
            lift(pa, 1, 0),
            lift(pb, 1, 0),
            lift(&dpath(pbody.clone()), 1, 0),
            inv(Term::var(0)),
        )
    };
    let e_start = seg_end(&b.pm0, &a00, &a10);
    let e_end = seg_end(&b.pm1, &a01, &a11);
    let seg0 = seg(&b.pm0, &a00, &a10);
    let seg2 = seg(&b.pm1, &a01, &a11);
    let t_of_i = {
        let mid1 = lift(&a10, 1, 0);
        let mid2 = lift(&a11, 1, 0);
        let p1m_path = lift(&dpath(b.p1m.clone()), 1, 0);
        let inner = alg.concat_l(&a_ty1, &e_start, &mid1, &mid2, &seg0, &p1m_path);
        let rev = alg.sym(&a_ty1, &e_end, &mid2, &seg2);
        alg.concat_r(&a_ty1, &e_start, &mid2, &e_end, &inner, &rev)
    };

    // wall body at depth 1
    let wall = dpath_ty(fam_body, lift(&dpath(b.p0m.clone()), 1, 0), t_of_i);

    let forward = kit.coe2(wall.clone(), tleft(), elem_sq.clone(), tright());
    let backward = kit.coe2(wall.clone(), tright(), elem_cc.clone(), tleft());

    // h_fwd : backward(forward(s)) ~> s, as path(\z. w(inv(z))) with
    // w(j) = coe2(wall, j, coe2(wall, left, s, j), left)
    let wall1 = lift(&wall, 1, 1);
    let s1 = lift(elem_sq, 1, 0);
    let u = kit.coe2(wall1.clone(), tleft(), s1, inv(Term::var(0)));
    let w = kit.coe2(wall1.clone(), inv(Term::var(0)), u, tleft());
    let homotopy_fwd = dpath(w);

    // h_bwd : forward(backward(t)) ~> t, as path(\z. z(z)) with
    // z(j) = coe2(wall, j, coe2(wall, right, t, j), right)
    let t1 = lift(elem_cc, 1, 0);
    let v = kit.coe2(wall1.clone(), tright(), t1, Term::var(0));
    let z = kit.coe2(wall1, Term::var(0), v, tright());
    let homotopy_bwd = dpath(z);

    EquivalenceData {
        wall,
        forward,
        backward,
        homotopy_fwd,
        homotopy_bwd,
    }
}

impl EquivalenceData {
    /// The wall's left face.
    pub fn left_face(&self) -> Term {
        substitute(&self.wall, &[tleft()], 0)
    }

    /// The wall's right face.
    pub fn right_face(&self) -> Term {
        substitute(&self.wall, &[tright()], 0)
    }
}

// ---------------------------------------------------------------------
// the filler morphism

/// Convert a term over generator symbols into a schematic pattern: each
/// generator application becomes a metavariable occurrence.
pub fn term_to_pat_over_gens(t: &Term, gens: &BTreeMap<SymbolId, usize>) -> Pat {
    match t {
        Term::Var(i) => Pat::Bound(*i),
        Term::App(s, args) => {
            if let Some(&mi) = gens.get(s) {
                let spine = args
                    .iter()
                    .map(|a| {
                        debug_assert_eq!(a.binders, 0);
                        term_to_pat_over_gens(&a.term, gens)
                    })
                    .collect();
                Pat::Meta(mi, spine)
            } else {
                Pat::App(
                    *s,
                    args.iter()
                        .map(|a| PatArg::new(a.binders, term_to_pat_over_gens(&a.term, gens)))
                        .collect(),
                )
            }
        }
    }
}

/// The schematic image of the dimension-n filler in coe1 + Path, as a
/// pattern over the filler symbol's argument metas.
pub fn fill_image_pat(n: usize) -> Pat {
    // generator names stand for the metas
    let gen = |name: &str, vars: usize| -> Term {
        Term::sym(
            name,
            (0..vars).rev().map(|i| Arg::plain(Term::Var(i))).collect(),
        )
    };
    let mut gens: BTreeMap<SymbolId, usize> = BTreeMap::new();
    let faces_list = fill_faces(n);
    gens.insert(SymbolId::intern("fp$D"), 0);
    let mut faces = BTreeMap::new();
    for (idx, (p, c)) in faces_list.iter().enumerate() {
        let name = format!("fp$d{}{}", p, if *c == Endpoint::Left { "l" } else { "r" });
        gens.insert(SymbolId::intern(&name), 1 + idx);
        faces.insert((*p, *c == Endpoint::Left), gen(&name, n - 1));
    }
    let nf = faces_list.len();
    let mut coords = Vec::new();
    for q in (0..n).rev() {
        let name = format!("fp$i{}", q);
        gens.insert(SymbolId::intern(&name), 1 + nf + (n - 1 - q));
        coords.push(gen(&name, 0));
    }
    let term = fill_term(n, gen("fp$D", n), &faces, &coords);
    term_to_pat_over_gens(&term, &gens)
}

/// The theory morphism sending each global filler symbol to its coe1+Path
/// implementation.
pub fn fill_from_coe() -> super::TheoryMorphism {
    let source = builtin("Fill_tm").expect("Fill_tm");
    let target = builtin("coe1+Path").expect("coe1+Path");
    let mut m = super::TheoryMorphism::new("Fill_tm->coe1+Path", source, target);
    for n in 1..=3 {
        let arity = 1 + (2 * n - 1) + n;
        m.map(&fill_symbol_name(n, 0), arity, fill_image_pat(n));
    }
    m
}

/// Generators standing for free interval variables (and other typed
/// constants) during boundary checks.
pub fn with_gens(theory: &Theory, gens: &[(&str, Term)]) -> Theory {
    let mut t = theory.clone();
    for (name, ty) in gens {
        t.declare(name, vec![], Kind::Tm);
        let (_, rule) = crate::theory::generic::generator_rule(name, Kind::Tm, &[], Some(ty));
        t.add_rule(rule);
    }
    t
}

pub fn with_ty_gens(theory: &Theory, names: &[&str]) -> Theory {
    let mut t = theory.clone();
    for name in names {
        t.declare(name, vec![], Kind::Ty);
        let (_, rule) = crate::theory::generic::generator_rule(name, Kind::Ty, &[], None);
        t.add_rule(rule);
    }
    t
}

// ---------------------------------------------------------------------
// two-cell toolkit: literal squares over homogeneous path types

/// A triangle over an edge family: a heterogeneous path through the
/// family  w |-> (e(w) ~> apex). Flattening produces the homogeneous
/// two-cell  s ~> (E *_l t)  where E = path(\z. e(z)), by concatenating
/// the partial edge with the projected slice at every stage:
///   comp(u) = path(\z. e(sq_l(z, u))) *_l S@u.
/// At u = left the prefix collapses to refl and the slice to s; at
/// u = right it is the full edge against t.
pub struct Triangle {
    pub a_ty: Term,
    /// edge body over one binder
    pub edge: Term,
    pub apex: Term,
    /// element over the left edge face
    pub start: Term,
    /// element over the right edge face
    pub end: Term,
    /// the heterogeneous square: Path(\w. e(w) ~> apex, start, end)
    pub square: Term,
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

impl Triangle {
    fn edge_at(&self, v: Term) -> Term {
        substitute(&self.edge, &[v], 0)
    }

    /// The full edge as a homogeneous path.
    pub fn edge_path(&self) -> Term {
        hom_path(self.a_ty.clone(), self.edge.clone())
    }

    /// The slice at a stage: at(\w. e(w) ~> apex, start, end, square, u).
    pub fn slice(&self, u: Term, depth: usize) -> Term {
        let fam = hom(lift(&self.edge, depth, 1), lift(&self.apex, depth + 1, 0));
        Term::sym(
            "at",
            vec![
                Arg::new(1, fam),
                Arg::plain(lift(&self.start, depth, 0)),
                Arg::plain(lift(&self.end, depth, 0)),
                Arg::plain(lift(&self.square, depth, 0)),
                Arg::plain(u),
            ],
        )
    }

    /// Flatten to the homogeneous two-cell  start ~> edge *_l end.
    pub fn flatten(&self, kit: CoeKit) -> Term {
        // comp(u) at depth 1
        let prefix = {
            // path(A, \z. e(sq_l(z, u)))
            let reparam = sq_l_kit(kit, Term::var(0), Term::var(1));
            let body = substitute(&lift(&self.edge, 2, 1), &[reparam], 0);
            hom_path(lift(&self.a_ty, 1, 0), body)
        };
        let alg = PathAlgebra { kit, paths: Paths { flavor: Flavor::Hom } };
        let comp = alg.concat_l(
            &lift(&self.a_ty, 1, 0),
            &lift(&self.edge_at(tleft()), 1, 0),
            &self.edge_at(Term::var(0)),
            &lift(&self.apex, 1, 0),
            &prefix,
            &self.slice(Term::var(0), 1),
        );
        hom_path(hom(self.edge_at(tleft()), self.apex.clone()), comp)
    }

    /// Flatten from the right: the two-cell  end ~> rev(edge) *_l start,
    /// using the suffix reparametrization sq_r(u, inv(z)).
    pub fn flatten_rev(&self, kit: CoeKit) -> Term {
        let suffix = {
            let reparam = sq_r_kit(kit, Term::var(1), inv_kit(kit, Term::var(0)));
            let body = substitute(&lift(&self.edge, 2, 1), &[reparam], 0);
            hom_path(lift(&self.a_ty, 1, 0), body)
        };
        let alg = PathAlgebra { kit, paths: Paths { flavor: Flavor::Hom } };
        let comp = alg.concat_l(
            &lift(&self.a_ty, 1, 0),
            &lift(&self.edge_at(tright()), 1, 0),
            &self.edge_at(Term::var(0)),
            &lift(&self.apex, 1, 0),
            &suffix,
            &self.slice(Term::var(0), 1),
        );
        // reverse the stage so the cell starts at `end`
        let comp_rev = substitute(&lift(&comp, 1, 1), &[inv_kit(kit, Term::var(0))], 0);
        hom_path(hom(self.edge_at(tright()), self.apex.clone()), comp_rev)
    }
}

/// The reparametrization cell: for a family F, base d, and an interval
/// reparametrization r with r(left) == left and r(right) == right, the
/// literal  path(\u. coe(\w. F(dc'(r(w), w, u)), d))  connects the
/// transport along F o r to the transport along F, using the diagonal
/// correction's endpoint laws.
pub fn reparam_cell(kit: CoeKit, fam: &Term, d: &Term, r_body: &Term) -> Term {
    // body at depth 2 (u, w): dc'(r(w), w, u)
    let mix = dc_prime_kit(
        kit,
        substitute(&lift(r_body, 2, 1), &[Term::var(0)], 0),
        Term::var(0),
        Term::var(1),
    );
    let fam_mixed = substitute(&lift(fam, 2, 1), &[mix], 0);
    let body = kit.coe2(fam_mixed, tleft(), lift(d, 1, 0), tright());
    dpath(body)
}

/// The transport contraction cell: path(\u. coe(F, u, coe(F, left, d, u), left))
/// connects d to its left-right-left round trip.
pub fn contract_cell(kit: CoeKit, fam: &Term, d: &Term) -> Term {
    let inner = kit.coe2(
        lift(fam, 1, 1),
        tleft(),
        lift(d, 1, 0),
        Term::var(0),
    );
    let body = kit.coe2(lift(fam, 1, 1), Term::var(0), inner, tleft());
    dpath(body)
}
