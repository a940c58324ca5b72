//! The equivalence between squares and boundary concatenations: the
//! interpolating wall's faces are definitionally the square type and the
//! concatenation type, and the four transport terms typecheck.

use intt_core::constructions::interval::{
    connections_theory, dat, dpath, hp, square_type, with_gens, with_ty_gens, PathAlgebra,
    Flavor, SquareBoundary,
};
use intt_core::constructions::interval::{squares_eq, tleft, tright};
use intt_core::kernel::{Telescope, Term};
use intt_core::theory::{equal, Checker, EqualityVerdict};

const FUEL: u64 = 60_000;

fn g(name: &str) -> Term {
    Term::sym(name, vec![])
}

/// Ambient with a generic type, four corners, and four boundary paths.
fn setup() -> (intt_core::Theory, SquareBoundary) {
    let base = with_ty_gens(&connections_theory(), &["Aty"]);
    let a = g("Aty");
    let t = with_gens(
        &base,
        &[
            ("a00", a.clone()),
            ("a10", a.clone()),
            ("a01", a.clone()),
            ("a11", a.clone()),
        ],
    );
    let t = with_gens(
        &t,
        &[
            ("pm0g", hp(&a, g("a00"), g("a10"))),
            ("pm1g", hp(&a, g("a01"), g("a11"))),
            ("p0mg", hp(&a, g("a00"), g("a01"))),
            ("p1mg", hp(&a, g("a10"), g("a11"))),
        ],
    );
    let a2 = a.clone();
    let edge = move |p: &str, x: &str, y: &str| dat(&a2, g(x), g(y), g(p), Term::var(0));
    let b = SquareBoundary {
        a_ty: a,
        pm0: edge("pm0g", "a00", "a10"),
        pm1: edge("pm1g", "a01", "a11"),
        p0m: edge("p0mg", "a00", "a01"),
        p1m: edge("p1mg", "a10", "a11"),
    };
    (t, b)
}

#[test]
fn wall_left_face_is_the_square_type() {
    let (t, b) = setup();
    let data = squares_eq(&t, &b, &g("s_dummy"), &g("c_dummy"));
    let square = square_type(&t, &b, FUEL).expect("corners match");
    match equal(&t, &data.left_face(), &square, FUEL) {
        EqualityVerdict::Yes { .. } => {}
        v => panic!("left face is not the square type: {:?}", v),
    }
}

#[test]
fn wall_right_face_is_the_concatenation_type() {
    let (t, b) = setup();
    let data = squares_eq(&t, &b, &g("s_dummy"), &g("c_dummy"));
    // expected: Path(\_. a00 ~> a01, path(p0m), (pm0 *_l p1m) *_r sym(pm1))
    let a = b.a_ty.clone();
    let alg = PathAlgebra::new(&t, Flavor::Het);
    let inner = alg.concat_l(&a, &g("a00"), &g("a10"), &g("a11"), &g("pm0g"), &g("p1mg"));
    let rev = alg.sym(&a, &g("a01"), &g("a11"), &g("pm1g"));
    let cc = alg.concat_r(&a, &g("a00"), &g("a11"), &g("a01"), &inner, &rev);
    let expected = hp(&hp(&a, g("a00"), g("a01")), dpath(b.p0m.clone()), cc);
    match equal(&t, &data.right_face(), &expected, FUEL) {
        EqualityVerdict::Yes { .. } => {}
        EqualityVerdict::No { left_nf, right_nf } => {
            panic!("right face mismatch:\n{}\nvs\n{}", left_nf, right_nf)
        }
        v => panic!("right face: {:?}", v),
    }
}

#[test]
fn transports_and_round_trip_homotopies_typecheck() {
    let (t0, b) = setup();
    let probe = squares_eq(&t0, &b, &g("sq_elem"), &g("cc_elem"));
    let t = with_gens(
        &t0,
        &[
            ("sq_elem", probe.left_face()),
            ("cc_elem", probe.right_face()),
        ],
    );
    let data = squares_eq(&t, &b, &g("sq_elem"), &g("cc_elem"));
    let checker = Checker::with_fuel(&t, FUEL);
    let ctx = Telescope::empty();
    checker
        .check(&ctx, &data.forward, &data.right_face())
        .unwrap_or_else(|e| panic!("forward: {}", e));
    checker
        .check(&ctx, &data.backward, &data.left_face())
        .unwrap_or_else(|e| panic!("backward: {}", e));
    // homotopy endpoints
    let kit = intt_core::constructions::interval::CoeKit::for_theory(&t);
    let bwd_of_fwd = kit.coe2(data.wall.clone(), tright(), data.forward.clone(), tleft());
    let fwd_of_bwd = kit.coe2(data.wall.clone(), tleft(), data.backward.clone(), tright());
    checker
        .check(
            &ctx,
            &data.homotopy_fwd,
            &hp(&data.left_face(), bwd_of_fwd, g("sq_elem")),
        )
        .unwrap_or_else(|e| panic!("homotopy_fwd: {}", e));
    checker
        .check(
            &ctx,
            &data.homotopy_bwd,
            &hp(&data.right_face(), fwd_of_bwd, g("cc_elem")),
        )
        .unwrap_or_else(|e| panic!("homotopy_bwd: {}", e));
}

/// All four sides degenerate at a point: the square face is inhabited by
/// refl(refl(a)) and its forward transport typechecks at the
/// concatenation face.
#[test]
fn degenerate_boundary_transports_refl_refl() {
    let base = with_ty_gens(&connections_theory(), &["Aty"]);
    let t = with_gens(&base, &[("pt", g("Aty"))]);
    let a = g("Aty");
    let refl_body = intt_core::kernel::lift(&g("pt"), 1, 0);
    let b = SquareBoundary {
        a_ty: a.clone(),
        pm0: refl_body.clone(),
        pm1: refl_body.clone(),
        p0m: refl_body.clone(),
        p1m: refl_body.clone(),
    };
    let refl_refl = dpath(intt_core::kernel::lift(&dpath(refl_body.clone()), 1, 0));
    let data = squares_eq(&t, &b, &refl_refl, &g("unused"));
    let checker = Checker::with_fuel(&t, FUEL);
    let ctx = Telescope::empty();
    checker
        .check(&ctx, &refl_refl, &data.left_face())
        .unwrap_or_else(|e| panic!("refl refl at square face: {}", e));
    checker
        .check(&ctx, &data.forward, &data.right_face())
        .unwrap_or_else(|e| panic!("forward of refl refl: {}", e));
}
