//! Boundary laws of the derived interval operations, checked by the
//! rewrite engine over the connections ambient with free interval
//! generators.

use intt_core::constructions::interval::{
    connections_theory, dc_prime, fill_term, inv, sq_l, sq_r, ti, tleft, tright, with_gens,
};
use intt_core::kernel::Term;
use intt_core::theory::{equal, EqualityVerdict};
use std::collections::BTreeMap;

const FUEL: u64 = 10_000;

fn i_gen() -> Term {
    Term::sym("gi", vec![])
}

fn j_gen() -> Term {
    Term::sym("gj", vec![])
}

fn k_gen() -> Term {
    Term::sym("gk", vec![])
}

fn ambient() -> intt_core::Theory {
    with_gens(
        &connections_theory(),
        &[("gi", ti()), ("gj", ti()), ("gk", ti())],
    )
}

fn assert_eq_def(theory: &intt_core::Theory, lhs: &Term, rhs: &Term, what: &str) {
    match equal(theory, lhs, rhs, FUEL) {
        EqualityVerdict::Yes { .. } => {}
        EqualityVerdict::No { left_nf, right_nf } => {
            panic!("{}: {} != {}", what, left_nf, right_nf)
        }
        EqualityVerdict::Unknown { spent } => panic!("{}: unknown after {} steps", what, spent),
    }
}

#[test]
fn inv_swaps_endpoints() {
    let t = ambient();
    assert_eq_def(&t, &inv(tleft()), &tright(), "inv(left)");
    assert_eq_def(&t, &inv(tright()), &tleft(), "inv(right)");
}

#[test]
fn sq_l_satisfies_all_four_boundary_laws() {
    let t = ambient();
    assert_eq_def(&t, &sq_l(i_gen(), tleft()), &tleft(), "sq_l(i,left)");
    assert_eq_def(&t, &sq_l(tleft(), j_gen()), &tleft(), "sq_l(left,j)");
    assert_eq_def(&t, &sq_l(tright(), j_gen()), &j_gen(), "sq_l(right,j)");
    assert_eq_def(&t, &sq_l(i_gen(), tright()), &i_gen(), "sq_l(i,right)");
}

#[test]
fn sq_r_satisfies_all_four_boundary_laws() {
    let t = ambient();
    assert_eq_def(&t, &sq_r(tleft(), j_gen()), &j_gen(), "sq_r(left,j)");
    assert_eq_def(&t, &sq_r(tright(), j_gen()), &tright(), "sq_r(right,j)");
    assert_eq_def(&t, &sq_r(i_gen(), tleft()), &i_gen(), "sq_r(i,left)");
    assert_eq_def(&t, &sq_r(i_gen(), tright()), &tright(), "sq_r(i,right)");
}

#[test]
fn dc_prime_satisfies_all_four_laws() {
    let t = ambient();
    assert_eq_def(
        &t,
        &dc_prime(i_gen(), j_gen(), tleft()),
        &i_gen(),
        "dc'(i,j,left)",
    );
    assert_eq_def(
        &t,
        &dc_prime(i_gen(), j_gen(), tright()),
        &j_gen(),
        "dc'(i,j,right)",
    );
    assert_eq_def(
        &t,
        &dc_prime(tleft(), tleft(), k_gen()),
        &tleft(),
        "dc'(left,left,k)",
    );
    assert_eq_def(
        &t,
        &dc_prime(tright(), tright(), k_gen()),
        &tright(),
        "dc'(right,right,k)",
    );
}

/// Boundary equations of the filler built from coe1 + Path, with generic
/// face data: a constant interval-valued box of each dimension.
#[test]
fn fill_boundaries_reduce_to_faces() {
    let t = ambient();
    // dimension 1: 1 equation
    {
        let mut faces = BTreeMap::new();
        faces.insert((0, true), i_gen());
        let filled = fill_term(1, ti(), &faces, &[tleft()]);
        assert_eq_def(&t, &filled, &i_gen(), "fill1 left face");
    }
    // dimension 2: 3 equations, with free coordinates elsewhere
    {
        let mk = |coords: &[Term]| {
            let mut faces = BTreeMap::new();
            faces.insert((0, true), Term::var(0));
            faces.insert((0, false), tleft());
            faces.insert((1, true), tleft());
            fill_term(2, ti(), &faces, coords)
        };
        assert_eq_def(
            &t,
            &mk(&[i_gen(), tleft()]),
            &i_gen(),
            "fill2 face 0 left",
        );
        assert_eq_def(&t, &mk(&[i_gen(), tright()]), &tleft(), "fill2 face 0 right");
        assert_eq_def(&t, &mk(&[tleft(), k_gen()]), &tleft(), "fill2 face 1 left");
    }
    // dimension 3: 5 equations on the connection-style box
    {
        let mk = |coords: &[Term]| {
            let mut faces = BTreeMap::new();
            faces.insert((0, true), sq_l(Term::var(0), Term::var(1)));
            faces.insert((0, false), Term::var(1));
            faces.insert((1, true), sq_l(Term::var(0), Term::var(1)));
            faces.insert((1, false), Term::var(1));
            faces.insert((2, true), tleft());
            fill_term(3, ti(), &faces, coords)
        };
        assert_eq_def(
            &t,
            &mk(&[i_gen(), j_gen(), tleft()]),
            &sq_l(j_gen(), i_gen()),
            "fill3 face 0 left",
        );
        assert_eq_def(
            &t,
            &mk(&[i_gen(), j_gen(), tright()]),
            &i_gen(),
            "fill3 face 0 right",
        );
        assert_eq_def(
            &t,
            &mk(&[i_gen(), tleft(), k_gen()]),
            &sq_l(k_gen(), i_gen()),
            "fill3 face 1 left",
        );
        assert_eq_def(
            &t,
            &mk(&[i_gen(), tright(), k_gen()]),
            &i_gen(),
            "fill3 face 1 right",
        );
        assert_eq_def(
            &t,
            &mk(&[tleft(), j_gen(), k_gen()]),
            &tleft(),
            "fill3 face 2 left",
        );
    }
}
