//! The registry of built-in theories: the interval, identity types, the
//! three coercion operators and their strengthenings, connections,
//! diagonal correction, homogeneous and heterogeneous path types, fillers,
//! weak univalence, equivalence data, and sigma types, together with the
//! named sums of these.

use crate::kernel::Kind;
use crate::theory::pat::{MetaDecl, Pat, PatArg};
use crate::theory::{EqPremise, RewriteRule, Theory, TypingRule};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StdlibError {
    #[error("unknown theory `{0}`")]
    Unknown(String),
    #[error("cannot combine: {0}")]
    Combine(String),
}

// ---------------------------------------------------------------------
// pattern helpers

fn m(i: usize) -> Pat {
    Pat::Meta(i, Vec::new())
}

fn msp(i: usize, spine: Vec<Pat>) -> Pat {
    Pat::Meta(i, spine)
}

fn b(i: usize) -> Pat {
    Pat::Bound(i)
}

fn app(name: &str, args: Vec<PatArg>) -> Pat {
    Pat::sym(name, args)
}

fn pl(p: Pat) -> PatArg {
    PatArg::plain(p)
}

fn bn(binders: usize, p: Pat) -> PatArg {
    PatArg::new(binders, p)
}

fn i_ty() -> Pat {
    Pat::sym0("I")
}

fn left() -> Pat {
    Pat::sym0("left")
}

fn right() -> Pat {
    Pat::sym0("right")
}

fn tm_i(name: &str) -> MetaDecl {
    MetaDecl::tm(name, 0, vec![], Some(i_ty()))
}

/// Identity spine [Bound(b-1), ..., Bound(0)] (outermost first).
fn ident_spine(binders: usize) -> Vec<Pat> {
    (0..binders).rev().map(Pat::Bound).collect()
}

fn rule(symbol: &str, metas: Vec<MetaDecl>, result_ty: Option<Pat>) -> TypingRule {
    TypingRule {
        symbol: crate::kernel::SymbolId::intern(symbol),
        metas,
        eq_premises: vec![],
        result_ty,
        order: None,
    }
}

fn eq(name: &str, metas: Vec<MetaDecl>, lhs: Pat, rhs: Pat) -> RewriteRule {
    RewriteRule {
        name: name.into(),
        metas,
        eq_premises: vec![],
        lhs,
        rhs,
    }
}

// ---------------------------------------------------------------------
// basic theories

/// The interval: a base type with two point constructors and no eliminator.
pub fn theory_interval() -> Theory {
    let mut t = Theory::new("I");
    t.declare("I", vec![], Kind::Ty);
    t.declare("left", vec![], Kind::Tm);
    t.declare("right", vec![], Kind::Tm);
    t.add_rule(rule("I", vec![], None));
    t.add_rule(rule("left", vec![], Some(i_ty())));
    t.add_rule(rule("right", vec![], Some(i_ty())));
    t
}

/// Identity types with J; `minus` replaces the J computation rule by the
/// propositional witness Jeq.
fn theory_id(minus: bool) -> Theory {
    let mut t = Theory::new(if minus { "Id-" } else { "Id" });
    t.declare("Id", vec![(0, Kind::Tm), (0, Kind::Tm)], Kind::Ty);
    t.declare("refl", vec![(0, Kind::Tm)], Kind::Tm);
    t.declare(
        "J",
        vec![
            (3, Kind::Ty),
            (1, Kind::Tm),
            (0, Kind::Tm),
            (0, Kind::Tm),
            (0, Kind::Tm),
        ],
        Kind::Tm,
    );

    t.add_rule(rule(
        "Id",
        vec![
            MetaDecl::tm("a", 0, vec![], None),
            MetaDecl::tm("a'", 0, vec![], Some(Pat::TyOf(0, vec![]))),
        ],
        None,
    ));
    t.add_rule(rule(
        "refl",
        vec![MetaDecl::tm("a", 0, vec![], None)],
        Some(app("Id", vec![pl(m(0)), pl(m(0))])),
    ));

    // J(D, d, a, a', p) with D over (x:A, y:A, z:Id(x,y)), A = ty(a).
    let d_tele = vec![
        Pat::TyOf(2, vec![]),
        Pat::TyOf(2, vec![]),
        app("Id", vec![pl(b(1)), pl(b(0))]),
    ];
    let mut j_rule = TypingRule {
        symbol: crate::kernel::SymbolId::intern("J"),
        metas: vec![
            MetaDecl::ty("D", 3, d_tele.clone()),
            MetaDecl::tm(
                "d",
                1,
                vec![Pat::TyOf(2, vec![])],
                Some(msp(0, vec![b(0), b(0), app("refl", vec![pl(b(0))])])),
            ),
            MetaDecl::tm("a", 0, vec![], None),
            MetaDecl::tm("a'", 0, vec![], Some(Pat::TyOf(2, vec![]))),
            MetaDecl::tm("p", 0, vec![], Some(app("Id", vec![pl(m(2)), pl(m(3))]))),
        ],
        eq_premises: vec![],
        result_ty: Some(msp(0, vec![m(2), m(3), m(4)])),
        order: Some(vec![2, 3, 4, 0, 1]),
    };

    if !minus {
        // J(D, d, a, a, refl(a)) == d(a)
        t.add_equation(eq(
            "J-refl",
            vec![
                MetaDecl::tm("a", 0, vec![], None),
                MetaDecl::ty(
                    "D",
                    3,
                    vec![
                        Pat::TyOf(0, vec![]),
                        Pat::TyOf(0, vec![]),
                        app("Id", vec![pl(b(1)), pl(b(0))]),
                    ],
                ),
                MetaDecl::tm(
                    "d",
                    1,
                    vec![Pat::TyOf(0, vec![])],
                    Some(msp(1, vec![b(0), b(0), app("refl", vec![pl(b(0))])])),
                ),
            ],
            app(
                "J",
                vec![
                    bn(3, msp(1, ident_spine(3))),
                    bn(1, msp(2, ident_spine(1))),
                    pl(m(0)),
                    pl(m(0)),
                    pl(app("refl", vec![pl(m(0))])),
                ],
            ),
            msp(2, vec![m(0)]),
        ));
    } else {
        t.declare(
            "Jeq",
            vec![(3, Kind::Ty), (1, Kind::Tm), (0, Kind::Tm)],
            Kind::Tm,
        );
        // Jeq(D, d, a) : Id(J(D, d, a, a, refl(a)), d(a))
        j_rule.order = Some(vec![2, 3, 4, 0, 1]);
        let jeq = TypingRule {
            symbol: crate::kernel::SymbolId::intern("Jeq"),
            metas: vec![
                MetaDecl::ty("D", 3, d_tele.clone()),
                MetaDecl::tm(
                    "d",
                    1,
                    vec![Pat::TyOf(2, vec![])],
                    Some(msp(0, vec![b(0), b(0), app("refl", vec![pl(b(0))])])),
                ),
                MetaDecl::tm("a", 0, vec![], None),
            ],
            eq_premises: vec![],
            result_ty: Some(app(
                "Id",
                vec![
                    pl(app(
                        "J",
                        vec![
                            bn(3, msp(0, ident_spine(3))),
                            bn(1, msp(1, ident_spine(1))),
                            pl(m(2)),
                            pl(m(2)),
                            pl(app("refl", vec![pl(m(2))])),
                        ],
                    )),
                    pl(msp(1, vec![m(2)])),
                ],
            )),
            order: Some(vec![2, 0, 1]),
        };
        t.add_rule(jeq);
    }
    t.add_rule(j_rule);
    t
}

/// coe0(D, d) : D(right), no computation rule.
fn theory_coe0() -> Theory {
    let mut t = theory_interval().renamed("coe0");
    t.declare("coe0", vec![(1, Kind::Ty), (0, Kind::Tm)], Kind::Tm);
    t.add_rule(rule(
        "coe0",
        vec![
            MetaDecl::ty("D", 1, vec![i_ty()]),
            MetaDecl::tm("d", 0, vec![], Some(msp(0, vec![left()]))),
        ],
        Some(msp(0, vec![right()])),
    ));
    t
}

/// coe1(D, d, i) : D(i) with coe1(D, d, left) == d.
fn theory_coe1() -> Theory {
    let mut t = theory_interval().renamed("coe1");
    t.declare(
        "coe1",
        vec![(1, Kind::Ty), (0, Kind::Tm), (0, Kind::Tm)],
        Kind::Tm,
    );
    t.add_rule(rule(
        "coe1",
        vec![
            MetaDecl::ty("D", 1, vec![i_ty()]),
            MetaDecl::tm("d", 0, vec![], Some(msp(0, vec![left()]))),
            tm_i("i"),
        ],
        Some(msp(0, vec![m(2)])),
    ));
    t.add_equation(eq(
        "coe1-left",
        vec![
            MetaDecl::ty("D", 1, vec![i_ty()]),
            MetaDecl::tm("d", 0, vec![], Some(msp(0, vec![left()]))),
        ],
        app(
            "coe1",
            vec![bn(1, msp(0, ident_spine(1))), pl(m(1)), pl(left())],
        ),
        m(1),
    ));
    t
}

/// coe2(D, i, d, j) : D(j) with coe2(D, left, d, left) == d.
fn theory_coe2() -> Theory {
    let mut t = theory_interval().renamed("coe2");
    t.declare(
        "coe2",
        vec![(1, Kind::Ty), (0, Kind::Tm), (0, Kind::Tm), (0, Kind::Tm)],
        Kind::Tm,
    );
    t.add_rule(rule(
        "coe2",
        vec![
            MetaDecl::ty("D", 1, vec![i_ty()]),
            tm_i("i"),
            MetaDecl::tm("d", 0, vec![], Some(msp(0, vec![m(1)]))),
            tm_i("j"),
        ],
        Some(msp(0, vec![m(3)])),
    ));
    t.add_equation(eq(
        "coe2-left-left",
        vec![
            MetaDecl::ty("D", 1, vec![i_ty()]),
            MetaDecl::tm("d", 0, vec![], Some(msp(0, vec![left()]))),
        ],
        app(
            "coe2",
            vec![
                bn(1, msp(0, ident_spine(1))),
                pl(left()),
                pl(m(1)),
                pl(left()),
            ],
        ),
        m(1),
    ));
    t
}

/// sq(i, j) : I with sq(i,left) == left, sq(left,j) == left, sq(right,j) == j.
fn theory_sq() -> Theory {
    let mut t = theory_interval().renamed("sq");
    t.declare("sq", vec![(0, Kind::Tm), (0, Kind::Tm)], Kind::Tm);
    t.add_rule(rule("sq", vec![tm_i("i"), tm_i("j")], Some(i_ty())));
    t.add_equation(eq(
        "sq-i-left",
        vec![tm_i("i")],
        app("sq", vec![pl(m(0)), pl(left())]),
        left(),
    ));
    t.add_equation(eq(
        "sq-left-j",
        vec![tm_i("j")],
        app("sq", vec![pl(left()), pl(m(0))]),
        left(),
    ));
    t.add_equation(eq(
        "sq-right-j",
        vec![tm_i("j")],
        app("sq", vec![pl(right()), pl(m(0))]),
        m(0),
    ));
    t
}

/// dc(i, j, k) : I with endpoint laws and the diagonal law dc(i,i,k) == i.
fn theory_dc() -> Theory {
    let mut t = theory_interval().renamed("dc");
    t.declare(
        "dc",
        vec![(0, Kind::Tm), (0, Kind::Tm), (0, Kind::Tm)],
        Kind::Tm,
    );
    t.add_rule(rule("dc", vec![tm_i("i"), tm_i("j"), tm_i("k")], Some(i_ty())));
    t.add_equation(eq(
        "dc-left",
        vec![tm_i("i"), tm_i("j")],
        app("dc", vec![pl(m(0)), pl(m(1)), pl(left())]),
        m(0),
    ));
    t.add_equation(eq(
        "dc-right",
        vec![tm_i("i"), tm_i("j")],
        app("dc", vec![pl(m(0)), pl(m(1)), pl(right())]),
        m(1),
    ));
    t.add_equation(eq(
        "dc-diag",
        vec![tm_i("i"), tm_i("k")],
        app("dc", vec![pl(m(0)), pl(m(0)), pl(m(1))]),
        m(0),
    ));
    t
}

/// Homogeneous path types: a ~> a', path(A, \x.a), at(a, a', p, i).
fn theory_hpath() -> Theory {
    let mut t = theory_interval().renamed("HPath");
    t.declare("~>", vec![(0, Kind::Tm), (0, Kind::Tm)], Kind::Ty);
    t.declare("path", vec![(0, Kind::Ty), (1, Kind::Tm)], Kind::Tm);
    t.declare(
        "at",
        vec![(0, Kind::Tm), (0, Kind::Tm), (0, Kind::Tm), (0, Kind::Tm)],
        Kind::Tm,
    );

    t.add_rule(rule(
        "~>",
        vec![
            MetaDecl::tm("a", 0, vec![], None),
            MetaDecl::tm("a'", 0, vec![], Some(Pat::TyOf(0, vec![]))),
        ],
        None,
    ));
    t.add_rule(rule(
        "path",
        vec![
            MetaDecl::ty("A", 0, vec![]),
            MetaDecl::tm("a", 1, vec![i_ty()], Some(m(0))),
        ],
        Some(app("~>", vec![pl(msp(1, vec![left()])), pl(msp(1, vec![right()]))])),
    ));
    t.add_rule(rule(
        "at",
        vec![
            MetaDecl::tm("a", 0, vec![], None),
            MetaDecl::tm("a'", 0, vec![], Some(Pat::TyOf(0, vec![]))),
            MetaDecl::tm("p", 0, vec![], Some(app("~>", vec![pl(m(0)), pl(m(1))]))),
            tm_i("i"),
        ],
        Some(Pat::TyOf(0, vec![])),
    ));

    // at(a0, a1, path(A, \x.a), i) == a(i)
    t.add_equation(eq(
        "at-beta",
        vec![
            MetaDecl::ty("A", 0, vec![]),
            MetaDecl::tm("a", 1, vec![i_ty()], Some(m(0))),
            MetaDecl::tm("a0", 0, vec![], Some(m(0))).with_generic(msp(1, vec![left()])),
            MetaDecl::tm("a1", 0, vec![], Some(m(0))).with_generic(msp(1, vec![right()])),
            tm_i("i"),
        ],
        app(
            "at",
            vec![
                pl(m(2)),
                pl(m(3)),
                pl(app("path", vec![pl(m(0)), bn(1, msp(1, ident_spine(1)))])),
                pl(m(4)),
            ],
        ),
        msp(1, vec![m(4)]),
    ));
    let endpoint_metas = || {
        vec![
            MetaDecl::tm("a", 0, vec![], None),
            MetaDecl::tm("a'", 0, vec![], Some(Pat::TyOf(0, vec![]))),
            MetaDecl::tm("p", 0, vec![], Some(app("~>", vec![pl(m(0)), pl(m(1))]))),
        ]
    };
    t.add_equation(eq(
        "at-left",
        endpoint_metas(),
        app("at", vec![pl(m(0)), pl(m(1)), pl(m(2)), pl(left())]),
        m(0),
    ));
    t.add_equation(eq(
        "at-right",
        endpoint_metas(),
        app("at", vec![pl(m(0)), pl(m(1)), pl(m(2)), pl(right())]),
        m(1),
    ));
    // path(A, \x. at(a, a', p, x)) == p, with A = ty(a) in the instance
    t.add_equation(eq(
        "path-eta",
        vec![
            MetaDecl::tm("a", 0, vec![], None),
            MetaDecl::tm("a'", 0, vec![], Some(Pat::TyOf(0, vec![]))),
            MetaDecl::tm("p", 0, vec![], Some(app("~>", vec![pl(m(0)), pl(m(1))]))),
            MetaDecl::ty("A", 0, vec![]).with_generic(Pat::TyOf(0, vec![])),
        ],
        app(
            "path",
            vec![
                pl(m(3)),
                bn(
                    1,
                    app(
                        "at",
                        vec![
                            pl(msp(0, vec![])),
                            pl(msp(1, vec![])),
                            pl(msp(2, vec![])),
                            pl(b(0)),
                        ],
                    ),
                ),
            ],
        ),
        m(2),
    ));
    t
}

/// Heterogeneous path types: Path(\x.A, a, a'), path(\x.a), at(\x.A, a, a', p, i).
fn theory_path() -> Theory {
    let mut t = theory_interval().renamed("Path");
    t.declare(
        "Path",
        vec![(1, Kind::Ty), (0, Kind::Tm), (0, Kind::Tm)],
        Kind::Ty,
    );
    t.declare("path", vec![(1, Kind::Tm)], Kind::Tm);
    t.declare(
        "at",
        vec![
            (1, Kind::Ty),
            (0, Kind::Tm),
            (0, Kind::Tm),
            (0, Kind::Tm),
            (0, Kind::Tm),
        ],
        Kind::Tm,
    );

    t.add_rule(rule(
        "Path",
        vec![
            MetaDecl::ty("A", 1, vec![i_ty()]),
            MetaDecl::tm("a", 0, vec![], Some(msp(0, vec![left()]))),
            MetaDecl::tm("a'", 0, vec![], Some(msp(0, vec![right()]))),
        ],
        None,
    ));
    t.add_rule(rule(
        "path",
        vec![MetaDecl::tm("a", 1, vec![i_ty()], None)],
        Some(app(
            "Path",
            vec![
                bn(1, Pat::TyOf(0, vec![b(0)])),
                pl(msp(0, vec![left()])),
                pl(msp(0, vec![right()])),
            ],
        )),
    ));
    t.add_rule(rule(
        "at",
        vec![
            MetaDecl::ty("A", 1, vec![i_ty()]),
            MetaDecl::tm("a", 0, vec![], Some(msp(0, vec![left()]))),
            MetaDecl::tm("a'", 0, vec![], Some(msp(0, vec![right()]))),
            MetaDecl::tm(
                "p",
                0,
                vec![],
                Some(app(
                    "Path",
                    vec![bn(1, msp(0, ident_spine(1))), pl(m(1)), pl(m(2))],
                )),
            ),
            tm_i("i"),
        ],
        Some(msp(0, vec![m(4)])),
    ));

    // at(\x.A, a0, a1, path(\x.a), i) == a(i)
    t.add_equation(eq(
        "at-beta",
        vec![
            MetaDecl::tm("a", 1, vec![i_ty()], None),
            MetaDecl::ty("A", 1, vec![i_ty()]).with_generic(Pat::TyOf(0, vec![b(0)])),
            MetaDecl::tm("a0", 0, vec![], Some(msp(1, vec![left()])))
                .with_generic(msp(0, vec![left()])),
            MetaDecl::tm("a1", 0, vec![], Some(msp(1, vec![right()])))
                .with_generic(msp(0, vec![right()])),
            tm_i("i"),
        ],
        app(
            "at",
            vec![
                bn(1, msp(1, ident_spine(1))),
                pl(m(2)),
                pl(m(3)),
                pl(app("path", vec![bn(1, msp(0, ident_spine(1)))])),
                pl(m(4)),
            ],
        ),
        msp(0, vec![m(4)]),
    ));
    let het_metas = || {
        vec![
            MetaDecl::ty("A", 1, vec![i_ty()]),
            MetaDecl::tm("a", 0, vec![], Some(msp(0, vec![left()]))),
            MetaDecl::tm("a'", 0, vec![], Some(msp(0, vec![right()]))),
            MetaDecl::tm(
                "p",
                0,
                vec![],
                Some(app(
                    "Path",
                    vec![bn(1, msp(0, ident_spine(1))), pl(m(1)), pl(m(2))],
                )),
            ),
        ]
    };
    t.add_equation(eq(
        "at-left",
        het_metas(),
        app(
            "at",
            vec![
                bn(1, msp(0, ident_spine(1))),
                pl(m(1)),
                pl(m(2)),
                pl(m(3)),
                pl(left()),
            ],
        ),
        m(1),
    ));
    t.add_equation(eq(
        "at-right",
        het_metas(),
        app(
            "at",
            vec![
                bn(1, msp(0, ident_spine(1))),
                pl(m(1)),
                pl(m(2)),
                pl(m(3)),
                pl(right()),
            ],
        ),
        m(2),
    ));
    // path(\y. at(\x.A, a, a', p, y)) == p
    t.add_equation(eq(
        "path-eta",
        het_metas(),
        app(
            "path",
            vec![bn(
                1,
                app(
                    "at",
                    vec![
                        bn(1, msp(0, vec![b(0)])),
                        pl(msp(1, vec![])),
                        pl(msp(2, vec![])),
                        pl(msp(3, vec![])),
                        pl(b(0)),
                    ],
                ),
            )],
        ),
        m(3),
    ));
    t
}

/// Sigma types with surjective pairing.
fn theory_sigma_types() -> Theory {
    let mut t = Theory::new("Sigma");
    t.declare("Sigma", vec![(0, Kind::Ty), (1, Kind::Ty)], Kind::Ty);
    t.declare(
        "pair",
        vec![(0, Kind::Ty), (1, Kind::Ty), (0, Kind::Tm), (0, Kind::Tm)],
        Kind::Tm,
    );
    t.declare(
        "pi1",
        vec![(0, Kind::Ty), (1, Kind::Ty), (0, Kind::Tm)],
        Kind::Tm,
    );
    t.declare(
        "pi2",
        vec![(0, Kind::Ty), (1, Kind::Ty), (0, Kind::Tm)],
        Kind::Tm,
    );

    let sig = |a: Pat, bb: Pat| app("Sigma", vec![pl(a), bn(1, bb)]);
    t.add_rule(rule(
        "Sigma",
        vec![MetaDecl::ty("A", 0, vec![]), MetaDecl::ty("B", 1, vec![m(0)])],
        None,
    ));
    t.add_rule(rule(
        "pair",
        vec![
            MetaDecl::ty("A", 0, vec![]),
            MetaDecl::ty("B", 1, vec![m(0)]),
            MetaDecl::tm("a", 0, vec![], Some(m(0))),
            MetaDecl::tm("b", 0, vec![], Some(msp(1, vec![m(2)]))),
        ],
        Some(sig(m(0), msp(1, ident_spine(1)))),
    ));
    t.add_rule(rule(
        "pi1",
        vec![
            MetaDecl::ty("A", 0, vec![]),
            MetaDecl::ty("B", 1, vec![m(0)]),
            MetaDecl::tm("p", 0, vec![], Some(sig(m(0), msp(1, ident_spine(1))))),
        ],
        Some(m(0)),
    ));
    t.add_rule(rule(
        "pi2",
        vec![
            MetaDecl::ty("A", 0, vec![]),
            MetaDecl::ty("B", 1, vec![m(0)]),
            MetaDecl::tm("p", 0, vec![], Some(sig(m(0), msp(1, ident_spine(1))))),
        ],
        Some(msp(
            1,
            vec![app("pi1", vec![pl(m(0)), bn(1, msp(1, ident_spine(1))), pl(m(2))])],
        )),
    ));

    // pi1(A, B, pair(A2, B2, a, b)) == a; annotations matched loosely.
    let proj_metas = |extra: MetaDecl| {
        vec![
            MetaDecl::ty("A", 0, vec![]),
            MetaDecl::ty("B", 1, vec![m(0)]),
            MetaDecl::ty("A2", 0, vec![]).with_generic(m(0)),
            MetaDecl::ty("B2", 1, vec![m(0)]).with_generic(msp(1, ident_spine(1))),
            MetaDecl::tm("a", 0, vec![], Some(m(0))),
            extra,
        ]
    };
    let pair_pat = app(
        "pair",
        vec![
            pl(m(2)),
            bn(1, msp(3, ident_spine(1))),
            pl(m(4)),
            pl(m(5)),
        ],
    );
    t.add_equation(eq(
        "pi1-beta",
        proj_metas(MetaDecl::tm("b", 0, vec![], Some(msp(1, vec![m(4)])))),
        app(
            "pi1",
            vec![pl(m(0)), bn(1, msp(1, ident_spine(1))), pl(pair_pat.clone())],
        ),
        m(4),
    ));
    t.add_equation(eq(
        "pi2-beta",
        proj_metas(MetaDecl::tm("b", 0, vec![], Some(msp(1, vec![m(4)])))),
        app(
            "pi2",
            vec![pl(m(0)), bn(1, msp(1, ident_spine(1))), pl(pair_pat)],
        ),
        m(5),
    ));
    // pair(A, B, pi1(A2, B2, p), pi2(A3, B3, p)) == p
    t.add_equation(eq(
        "sigma-eta",
        vec![
            MetaDecl::ty("A", 0, vec![]),
            MetaDecl::ty("B", 1, vec![m(0)]),
            MetaDecl::ty("A2", 0, vec![]).with_generic(m(0)),
            MetaDecl::ty("B2", 1, vec![m(0)]).with_generic(msp(1, ident_spine(1))),
            MetaDecl::ty("A3", 0, vec![]).with_generic(m(0)),
            MetaDecl::ty("B3", 1, vec![m(0)]).with_generic(msp(1, ident_spine(1))),
            MetaDecl::tm("p", 0, vec![], Some(sig(m(0), msp(1, ident_spine(1))))),
        ],
        app(
            "pair",
            vec![
                pl(m(0)),
                bn(1, msp(1, ident_spine(1))),
                pl(app(
                    "pi1",
                    vec![pl(m(2)), bn(1, msp(3, ident_spine(1))), pl(m(6))],
                )),
                pl(app(
                    "pi2",
                    vec![pl(m(4)), bn(1, msp(5, ident_spine(1))), pl(m(6))],
                )),
            ],
        ),
        m(6),
    ));
    t
}

/// Equivalence data: two types with maps back and forth and both round-trip
/// homotopies, presented as generator symbols over homogeneous paths.
fn theory_eq() -> Theory {
    let mut t = theory_hpath().renamed("Eq");
    t.declare("A", vec![], Kind::Ty);
    t.declare("B", vec![], Kind::Ty);
    t.declare("b", vec![(0, Kind::Tm)], Kind::Tm);
    t.declare("a1", vec![(0, Kind::Tm)], Kind::Tm);
    t.declare("a2", vec![(0, Kind::Tm)], Kind::Tm);
    t.declare("p", vec![(0, Kind::Tm)], Kind::Tm);
    t.declare("q", vec![(0, Kind::Tm)], Kind::Tm);
    t.add_rule(rule("A", vec![], None));
    t.add_rule(rule("B", vec![], None));
    t.add_rule(rule(
        "b",
        vec![MetaDecl::tm("x", 0, vec![], Some(Pat::sym0("A")))],
        Some(Pat::sym0("B")),
    ));
    t.add_rule(rule(
        "a1",
        vec![MetaDecl::tm("y", 0, vec![], Some(Pat::sym0("B")))],
        Some(Pat::sym0("A")),
    ));
    t.add_rule(rule(
        "a2",
        vec![MetaDecl::tm("y", 0, vec![], Some(Pat::sym0("B")))],
        Some(Pat::sym0("A")),
    ));
    // p(x) : a1(b(x)) ~> x
    t.add_rule(rule(
        "p",
        vec![MetaDecl::tm("x", 0, vec![], Some(Pat::sym0("A")))],
        Some(app(
            "~>",
            vec![pl(app("a1", vec![pl(app("b", vec![pl(m(0))]))])), pl(m(0))],
        )),
    ));
    // q(y) : b(a2(y)) ~> y
    t.add_rule(rule(
        "q",
        vec![MetaDecl::tm("y", 0, vec![], Some(Pat::sym0("B")))],
        Some(app(
            "~>",
            vec![pl(app("b", vec![pl(app("a2", vec![pl(m(0))]))])), pl(m(0))],
        )),
    ));
    t
}

/// One interval-indexed type: the wall of the primed type cylinder.
fn theory_ueq() -> Theory {
    let mut t = theory_interval().renamed("UEq");
    t.declare("H", vec![(0, Kind::Tm)], Kind::Ty);
    t.add_rule(rule("H", vec![tm_i("i")], None));
    t
}

// ---------------------------------------------------------------------
// modifiers: sigma, beta, weak univalence

/// Constant-family coercion rules for every coercion present.
fn add_sigma_rules(t: &mut Theory) {
    let a_meta = || MetaDecl::ty("A", 0, vec![]);
    let tm_a = || MetaDecl::tm("a", 0, vec![], Some(m(0)));
    if t.has_symbol("coe0", 2) {
        t.add_equation(eq(
            "sigma-coe0",
            vec![a_meta(), tm_a()],
            app("coe0", vec![bn(1, msp(0, vec![])), pl(m(1))]),
            m(1),
        ));
    }
    if t.has_symbol("coe1", 3) {
        t.add_equation(eq(
            "sigma-coe1",
            vec![a_meta(), tm_a()],
            app(
                "coe1",
                vec![bn(1, msp(0, vec![])), pl(m(1)), pl(right())],
            ),
            m(1),
        ));
    }
    if t.has_symbol("coe2", 4) {
        t.add_equation(eq(
            "sigma-coe2",
            vec![a_meta(), tm_a()],
            app(
                "coe2",
                vec![bn(1, msp(0, vec![])), pl(left()), pl(m(1)), pl(right())],
            ),
            m(1),
        ));
    }
}

fn add_beta1(t: &mut Theory) {
    t.add_equation(eq(
        "beta1",
        vec![
            MetaDecl::ty("D", 1, vec![i_ty()]),
            MetaDecl::tm("d", 0, vec![], Some(msp(0, vec![right()]))),
        ],
        app(
            "coe2",
            vec![
                bn(1, msp(0, ident_spine(1))),
                pl(right()),
                pl(m(1)),
                pl(right()),
            ],
        ),
        m(1),
    ));
}

fn add_beta2(t: &mut Theory) {
    t.add_equation(eq(
        "beta2",
        vec![
            MetaDecl::ty("D", 1, vec![i_ty()]),
            tm_i("i"),
            MetaDecl::tm("d", 0, vec![], Some(msp(0, vec![m(1)]))),
        ],
        app(
            "coe2",
            vec![bn(1, msp(0, ident_spine(1))), pl(m(1)), pl(m(2)), pl(m(1))],
        ),
        m(2),
    ));
}

/// Weak univalence. With homogeneous paths present, the retraction data is
/// two typed path premises; otherwise it is the six-equation form with
/// two-dimensional p and q. The coercion computation rule is instantiated
/// for every coercion operator the ambient theory has.
fn add_wua(t: &mut Theory) {
    let hpath = t.has_symbol("~>", 2);
    let (pq_binders, iso_metas, premises): (usize, Vec<MetaDecl>, Vec<EqPremise>) = if hpath {
        let metas = vec![
            MetaDecl::ty("A", 0, vec![]),
            MetaDecl::ty("B", 0, vec![]),
            MetaDecl::tm("f", 1, vec![m(0)], Some(m(1))),
            MetaDecl::tm("g", 1, vec![m(1)], Some(m(0))),
            MetaDecl::tm(
                "p",
                1,
                vec![m(0)],
                Some(app(
                    "~>",
                    vec![pl(msp(3, vec![msp(2, vec![b(0)])])), pl(b(0))],
                )),
            ),
            MetaDecl::tm(
                "q",
                1,
                vec![m(1)],
                Some(app(
                    "~>",
                    vec![pl(msp(2, vec![msp(3, vec![b(0)])])), pl(b(0))],
                )),
            ),
            tm_i("j"),
        ];
        (1, metas, vec![])
    } else {
        let metas = vec![
            MetaDecl::ty("A", 0, vec![]),
            MetaDecl::ty("B", 0, vec![]),
            MetaDecl::tm("f", 1, vec![m(0)], Some(m(1))),
            MetaDecl::tm("g", 1, vec![m(1)], Some(m(0))),
            MetaDecl::tm("p", 2, vec![m(0), i_ty()], Some(m(0))),
            MetaDecl::tm("q", 2, vec![m(1), i_ty()], Some(m(1))),
            tm_i("j"),
        ];
        let premises = vec![
            EqPremise {
                binders: 1,
                telescope: vec![m(0)],
                lhs: msp(4, vec![b(0), left()]),
                rhs: msp(3, vec![msp(2, vec![b(0)])]),
            },
            EqPremise {
                binders: 1,
                telescope: vec![m(0)],
                lhs: msp(4, vec![b(0), right()]),
                rhs: b(0),
            },
            EqPremise {
                binders: 1,
                telescope: vec![m(1)],
                lhs: msp(5, vec![b(0), left()]),
                rhs: msp(2, vec![msp(3, vec![b(0)])]),
            },
            EqPremise {
                binders: 1,
                telescope: vec![m(1)],
                lhs: msp(5, vec![b(0), right()]),
                rhs: b(0),
            },
        ];
        (2, metas, premises)
    };

    t.declare(
        "iso",
        vec![
            (0, Kind::Ty),
            (0, Kind::Ty),
            (1, Kind::Tm),
            (1, Kind::Tm),
            (pq_binders, Kind::Tm),
            (pq_binders, Kind::Tm),
            (0, Kind::Tm),
        ],
        Kind::Ty,
    );
    t.add_rule(TypingRule {
        symbol: crate::kernel::SymbolId::intern("iso"),
        metas: iso_metas.clone(),
        eq_premises: premises.clone(),
        result_ty: None,
        order: None,
    });

    // iso(..., left) == A and iso(..., right) == B
    let iso_pat = |endpoint: Pat| {
        app(
            "iso",
            vec![
                pl(m(0)),
                pl(m(1)),
                bn(1, msp(2, ident_spine(1))),
                bn(1, msp(3, ident_spine(1))),
                bn(pq_binders, msp(4, ident_spine(pq_binders))),
                bn(pq_binders, msp(5, ident_spine(pq_binders))),
                pl(endpoint),
            ],
        )
    };
    let mut iso_eq_metas = iso_metas.clone();
    iso_eq_metas.truncate(6);
    let mut left_eq = eq("iso-left", iso_eq_metas.clone(), iso_pat(left()), m(0));
    left_eq.eq_premises = premises.clone();
    t.add_equation(left_eq);
    let mut right_eq = eq("iso-right", iso_eq_metas.clone(), iso_pat(right()), m(1));
    right_eq.eq_premises = premises.clone();
    t.add_equation(right_eq);

    // Coercion across the iso wall computes to the forward map. The rule
    // family covers whichever coercion operators exist.
    let iso_inside = |extra: usize| {
        // iso applied under `extra` more binders; metas omit those binders.
        app(
            "iso",
            vec![
                pl(msp(0, vec![])),
                pl(msp(1, vec![])),
                bn(1, msp(2, ident_spine(1))),
                bn(1, msp(3, ident_spine(1))),
                bn(pq_binders, msp(4, ident_spine(pq_binders))),
                bn(pq_binders, msp(5, ident_spine(pq_binders))),
                pl(b(extra - 1)),
            ],
        )
    };
    let mut coe_metas = iso_eq_metas.clone();
    coe_metas.push(MetaDecl::tm("a", 0, vec![], Some(m(0))));
    let rhs = msp(2, vec![m(6)]);
    if t.has_symbol("coe0", 2) {
        let mut e = eq(
            "wua-coe0",
            coe_metas.clone(),
            app("coe0", vec![bn(1, iso_inside(1)), pl(m(6))]),
            rhs.clone(),
        );
        e.eq_premises = premises.clone();
        t.add_equation(e);
    }
    if t.has_symbol("coe1", 3) {
        let mut e = eq(
            "wua-coe1",
            coe_metas.clone(),
            app(
                "coe1",
                vec![bn(1, iso_inside(1)), pl(m(6)), pl(right())],
            ),
            rhs.clone(),
        );
        e.eq_premises = premises.clone();
        t.add_equation(e);
    }
    if t.has_symbol("coe2", 4) {
        let mut e = eq(
            "wua-coe2",
            coe_metas,
            app(
                "coe2",
                vec![bn(1, iso_inside(1)), pl(left()), pl(m(6)), pl(right())],
            ),
            rhs,
        );
        e.eq_premises = premises;
        t.add_equation(e);
    }
}

// ---------------------------------------------------------------------
// filler symbols

/// Endpoint for a face index.
fn ep(c: crate::kernel::Endpoint) -> Pat {
    match c {
        crate::kernel::Endpoint::Left => left(),
        crate::kernel::Endpoint::Right => right(),
    }
}

/// The faces of an n-dimensional open box, in argument order: dimension 0
/// left/right, dimension 1 left/right, ..., dimension n-1 left only.
pub fn fill_faces(n: usize) -> Vec<(usize, crate::kernel::Endpoint)> {
    use crate::kernel::Endpoint::*;
    let mut out = Vec::new();
    for p in 0..n {
        out.push((p, Left));
        if p != n - 1 {
            out.push((p, Right));
        }
    }
    out
}

pub fn fill_symbol_name(n: usize, k: usize) -> String {
    if k == 0 {
        format!("fill{}", n)
    } else {
        format!("fill{}_{}", n, k)
    }
}

/// Declare the filler symbol of dimension `n` over a context extension of
/// length `k`, with its typing rule (including face compatibility
/// premises) and the 2n-1 boundary equations.
fn add_fill_symbol(t: &mut Theory, n: usize, k: usize) {
    use crate::kernel::Endpoint;
    let faces = fill_faces(n);
    let nf = faces.len();
    let name = fill_symbol_name(n, k);

    // meta indices
    let mi_b = |mm: usize| mm - 1; // B_m for m in 1..=k
    let mi_d = k;
    let face_pos = |p: usize, c: Endpoint| -> usize {
        k + 1 + faces.iter().position(|f| *f == (p, c)).unwrap()
    };
    let mi_coord = |q: usize| k + 1 + nf + (n - 1 - q); // dim q, outermost first
    let mi_block = |mm: usize| k + 1 + nf + n + (mm - 1);

    // Spine over the dims (optionally with one or two dims faced) followed
    // by `ys` identity entries; used at depth dims_left + ys.
    let dim_spine = |faced: &[(usize, Endpoint)], ys: usize| -> Vec<Pat> {
        let dims_left = n - faced.len();
        let mut out = Vec::new();
        for q in (0..n).rev() {
            if let Some((_, c)) = faced.iter().find(|(p, _)| *p == q) {
                out.push(ep(*c));
            } else {
                // rank among remaining dims, innermost first
                let r = (0..q).filter(|x| !faced.iter().any(|(p, _)| p == x)).count();
                debug_assert!(r < dims_left);
                out.push(b(ys + r));
            }
        }
        for y in 0..ys {
            out.push(b(ys - 1 - y));
        }
        out
    };

    let mut metas: Vec<MetaDecl> = Vec::new();
    // B_m : ty over (I^n, B_1 .. B_{m-1})
    for mm in 1..=k {
        let mut tele: Vec<Pat> = vec![i_ty(); n];
        for e in 1..mm {
            tele.push(msp(mi_b(e), dim_spine(&[], e - 1)));
        }
        metas.push(MetaDecl::ty(&format!("B{}", mm), n + mm - 1, tele));
    }
    // D : ty over (I^n, B_1 .. B_k)
    {
        let mut tele: Vec<Pat> = vec![i_ty(); n];
        for e in 1..=k {
            tele.push(msp(mi_b(e), dim_spine(&[], e - 1)));
        }
        metas.push(MetaDecl::ty("D", n + k, tele));
    }
    // faces
    for (p, c) in &faces {
        let mut tele: Vec<Pat> = vec![i_ty(); n - 1];
        for e in 1..=k {
            tele.push(msp(mi_b(e), dim_spine(&[(*p, *c)], e - 1)));
        }
        let expected = msp(mi_d, dim_spine(&[(*p, *c)], k));
        metas.push(MetaDecl::tm(
            &format!("d{}{}", p, if *c == Endpoint::Left { "l" } else { "r" }),
            n - 1 + k,
            tele,
            Some(expected),
        ));
    }
    // coordinates, outermost dim first
    for q in (0..n).rev() {
        metas.push(tm_i(&format!("i{}", q)));
        let _ = q;
    }
    // block entries b_m : B_m(coords, b_1 .. b_{m-1})
    for mm in 1..=k {
        let mut spine: Vec<Pat> = (0..n).rev().map(|q| m(mi_coord(q))).collect();
        for e in 1..mm {
            spine.push(m(mi_block(e)));
        }
        metas.push(MetaDecl::tm(
            &format!("b{}", mm),
            0,
            vec![],
            Some(msp(mi_b(mm), spine)),
        ));
    }

    // result: D(coords, block)
    let mut result_spine: Vec<Pat> = (0..n).rev().map(|q| m(mi_coord(q))).collect();
    for mm in 1..=k {
        result_spine.push(m(mi_block(mm)));
    }
    let result_ty = msp(mi_d, result_spine);

    // Face compatibility premises: the (p1,c1)-face of d_{p2,c2} agrees
    // with the (p2-1,c2)-face of d_{p1,c1}. The premise is stated over the
    // dims with both p1 and p2 removed, then the faced context extension.
    let mut eq_premises = Vec::new();
    for (p1, c1) in &faces {
        for (p2, c2) in &faces {
            if p1 >= p2 {
                continue;
            }
            let rank = |q: usize| (0..q).filter(|x| x != p1 && x != p2).count();
            let spine_skipping = |skip: usize, set: usize, val: Pat| -> Vec<Pat> {
                let mut s = Vec::new();
                for q in (0..n).rev() {
                    if q == skip {
                        continue;
                    }
                    if q == set {
                        s.push(val.clone());
                    } else {
                        s.push(b(k + rank(q)));
                    }
                }
                for y in 0..k {
                    s.push(b(k - 1 - y));
                }
                s
            };
            let lhs = msp(face_pos(*p2, *c2), spine_skipping(*p2, *p1, ep(*c1)));
            let rhs = msp(face_pos(*p1, *c1), spine_skipping(*p1, *p2, ep(*c2)));
            let mut tele: Vec<Pat> = vec![i_ty(); n - 2];
            for e in 1..=k {
                tele.push(msp(mi_b(e), dim_spine(&[(*p1, *c1), (*p2, *c2)], e - 1)));
            }
            eq_premises.push(EqPremise {
                binders: n - 2 + k,
                telescope: tele,
                lhs,
                rhs,
            });
        }
    }

    let mut args: Vec<(usize, Kind)> = Vec::new();
    for mm in metas.iter() {
        args.push((mm.binders, mm.kind));
    }
    t.declare(&name, args, Kind::Tm);
    t.add_rule(TypingRule {
        symbol: crate::kernel::SymbolId::intern(&name),
        metas: metas.clone(),
        eq_premises: eq_premises.clone(),
        result_ty: Some(result_ty),
        order: None,
    });

    // boundary equations: setting coordinate p to c projects the face
    for (p, c) in &faces {
        let mut eq_metas = metas.clone();
        eq_metas[mi_coord(*p)] = tm_i(&format!("i{}", p)).with_generic(ep(*c));
        let mut lhs_args: Vec<PatArg> = Vec::new();
        for (mj, md) in metas.iter().enumerate() {
            let pat = if mj == mi_coord(*p) {
                ep(*c)
            } else {
                msp(mj, ident_spine(md.binders))
            };
            lhs_args.push(PatArg::new(md.binders, pat));
        }
        let mut rhs_spine: Vec<Pat> = Vec::new();
        for q in (0..n).rev() {
            if q != *p {
                rhs_spine.push(m(mi_coord(q)));
            }
        }
        for mm in 1..=k {
            rhs_spine.push(m(mi_block(mm)));
        }
        let mut e = eq(
            &format!(
                "{}-face-{}{}",
                name,
                p,
                if *c == crate::kernel::Endpoint::Left { "l" } else { "r" }
            ),
            eq_metas,
            app(&name, lhs_args),
            msp(face_pos(*p, *c), rhs_spine),
        );
        e.eq_premises = eq_premises.clone();
        t.add_equation(e);
    }
}

/// Global fillers (context extension k = 0) for dimensions 1..=3.
fn theory_fill_tm() -> Theory {
    let mut t = theory_interval().renamed("Fill_tm");
    for n in 1..=3 {
        add_fill_symbol(&mut t, n, 0);
    }
    t
}

/// Local fillers: dimensions 1..=3, context extensions 0..=2.
fn theory_fill_l_tm() -> Theory {
    let mut t = theory_interval().renamed("Fill_l_tm");
    for n in 1..=3 {
        for k in 0..=2 {
            add_fill_symbol(&mut t, n, k);
        }
    }
    t
}

// ---------------------------------------------------------------------
// local coercion families (globalized: explicit context-morphism arguments)

pub fn local_coe_name(alpha: usize, primed: bool, k: usize) -> String {
    format!("coe{}l{}_{}", alpha, if primed { "p" } else { "" }, k)
}

/// Declare one globalized local coercion symbol.
///
/// coe2 layout: B_1..B_k, D, i, d, j, b_1..b_k  -> D(j, bs)
/// coe1 layout: B_1..B_k, D, d, i, b_1..b_k     -> D(i, bs)
/// coe0 layout: B_1..B_k, D, d, b_1..b_k        -> D(right, bs)
fn add_local_coe(t: &mut Theory, alpha: usize, primed: bool, k: usize) {
    let name = local_coe_name(alpha, primed, k);
    let mi_b = |mm: usize| mm - 1;
    let mi_d = k;
    // index of i / d / j depend on alpha
    let (mi_i, mi_dd, mi_j, pre_block) = match alpha {
        0 => (usize::MAX, k + 1, usize::MAX, k + 2),
        1 => (k + 2, k + 1, usize::MAX, k + 3),
        2 => (k + 1, k + 2, k + 3, k + 4),
        _ => unreachable!(),
    };
    let mi_block = |mm: usize| pre_block + (mm - 1);

    // spine over x := xval followed by y identities at depth ys
    let sub_spine = |xval: Pat, ys: usize| -> Vec<Pat> {
        let mut s = vec![xval];
        for y in 0..ys {
            s.push(b(ys - 1 - y));
        }
        s
    };

    let mut metas: Vec<MetaDecl> = Vec::new();
    for mm in 1..=k {
        let mut tele: Vec<Pat> = vec![i_ty()];
        for e in 1..mm {
            tele.push(msp(mi_b(e), sub_spine(b(e - 1), e - 1)));
        }
        metas.push(MetaDecl::ty(&format!("B{}", mm), mm, tele));
    }
    {
        let mut tele: Vec<Pat> = vec![i_ty()];
        for e in 1..=k {
            tele.push(msp(mi_b(e), sub_spine(b(e - 1), e - 1)));
        }
        metas.push(MetaDecl::ty("D", 1 + k, tele));
    }
    // source index of d: left for coe0/coe1, i for coe2
    let d_src = |mi_i: usize| -> Pat {
        if alpha == 2 {
            m(mi_i)
        } else {
            left()
        }
    };
    match alpha {
        0 | 1 => {
            // d over Delta[x := left]
            let mut tele: Vec<Pat> = Vec::new();
            for e in 1..=k {
                tele.push(msp(mi_b(e), sub_spine(left(), e - 1)));
            }
            let mut dspine = vec![left()];
            dspine.extend(ident_spine(k));
            metas.push(MetaDecl::tm("d", k, tele, Some(msp(mi_d, dspine))));
            if alpha == 1 {
                metas.push(tm_i("i"));
            }
        }
        2 => {
            metas.push(tm_i("i"));
            let mut tele: Vec<Pat> = Vec::new();
            for e in 1..=k {
                tele.push(msp(mi_b(e), sub_spine(d_src(mi_i), e - 1)));
            }
            let mut dspine = vec![d_src(mi_i)];
            dspine.extend(ident_spine(k));
            metas.push(MetaDecl::tm("d", k, tele, Some(msp(mi_d, dspine))));
            metas.push(tm_i("j"));
        }
        _ => unreachable!(),
    }
    // target index
    let target: Pat = match alpha {
        0 => right(),
        1 => m(mi_i),
        2 => m(mi_j),
        _ => unreachable!(),
    };
    for mm in 1..=k {
        let mut spine = vec![target.clone()];
        for e in 1..mm {
            spine.push(m(mi_block(e)));
        }
        metas.push(MetaDecl::tm(
            &format!("b{}", mm),
            0,
            vec![],
            Some(msp(mi_b(mm), spine)),
        ));
    }
    let mut result_spine = vec![target];
    for mm in 1..=k {
        result_spine.push(m(mi_block(mm)));
    }

    let args: Vec<(usize, Kind)> = metas.iter().map(|mm| (mm.binders, mm.kind)).collect();
    t.declare(&name, args, Kind::Tm);
    t.add_rule(TypingRule {
        symbol: crate::kernel::SymbolId::intern(&name),
        metas: metas.clone(),
        eq_premises: vec![],
        result_ty: Some(msp(mi_d, result_spine)),
        order: None,
    });

    // base computation rules
    let lhs_with = |coords: Vec<(usize, Pat)>| -> Pat {
        let mut lhs_args: Vec<PatArg> = Vec::new();
        for (mj, md) in metas.iter().enumerate() {
            let mut pat = msp(mj, ident_spine(md.binders));
            for (at, val) in &coords {
                if mj == *at {
                    pat = val.clone();
                }
            }
            lhs_args.push(PatArg::new(md.binders, pat));
        }
        app(&name, lhs_args)
    };
    let mut d_of_bs = Vec::new();
    for mm in 1..=k {
        d_of_bs.push(m(mi_block(mm)));
    }
    let rhs = msp(mi_dd, d_of_bs);
    let pin = |metas: &[MetaDecl], coords: &[usize]| -> Vec<MetaDecl> {
        let mut out = metas.to_vec();
        for &at in coords {
            out[at] = out[at].clone().with_generic(left());
        }
        out
    };
    match alpha {
        1 => {
            t.add_equation(eq(
                &format!("{}-left", name),
                pin(&metas, &[mi_i]),
                lhs_with(vec![(mi_i, left())]),
                rhs,
            ));
        }
        2 => {
            t.add_equation(eq(
                &format!("{}-left-left", name),
                pin(&metas, &[mi_i, mi_j]),
                lhs_with(vec![(mi_i, left()), (mi_j, left())]),
                rhs,
            ));
        }
        _ => {}
    }
}

/// The strengthened diagonal rule for the primed local coe2 family.
fn add_beta_l2(t: &mut Theory, primed: bool) {
    for k in 1..=2 {
        let name = local_coe_name(2, primed, k);
        if !t.has_symbol(&name, 2 * k + 4) {
            continue;
        }
        // coe2l?(Bs, D, i, d, i, bs) == d(bs), i non-linear
        let mi_d = k;
        let mi_i = k + 1;
        let mi_dd = k + 2;
        let mi_block = |mm: usize| k + 4 + (mm - 1);
        let mut metas: Vec<MetaDecl> = Vec::new();
        let sub_spine = |xval: Pat, ys: usize| -> Vec<Pat> {
            let mut s = vec![xval];
            for y in 0..ys {
                s.push(b(ys - 1 - y));
            }
            s
        };
        for mm in 1..=k {
            let mut tele: Vec<Pat> = vec![i_ty()];
            for e in 1..mm {
                tele.push(msp(e - 1, sub_spine(b(e - 1), e - 1)));
            }
            metas.push(MetaDecl::ty(&format!("B{}", mm), mm, tele));
        }
        {
            let mut tele: Vec<Pat> = vec![i_ty()];
            for e in 1..=k {
                tele.push(msp(e - 1, sub_spine(b(e - 1), e - 1)));
            }
            metas.push(MetaDecl::ty("D", 1 + k, tele));
        }
        metas.push(tm_i("i"));
        {
            let mut tele: Vec<Pat> = Vec::new();
            for e in 1..=k {
                tele.push(msp(e - 1, sub_spine(m(mi_i), e - 1)));
            }
            let mut dspine = vec![m(mi_i)];
            dspine.extend(ident_spine(k));
            metas.push(MetaDecl::tm("d", k, tele, Some(msp(mi_d, dspine))));
        }
        metas.push(tm_i("j").with_generic(m(mi_i)));
        for mm in 1..=k {
            let mut spine = vec![m(mi_i)];
            for e in 1..mm {
                spine.push(m(mi_block(e)));
            }
            metas.push(MetaDecl::tm(
                &format!("b{}", mm),
                0,
                vec![],
                Some(msp(mm - 1, spine)),
            ));
        }
        let mut lhs_args: Vec<PatArg> = Vec::new();
        for (mj, md) in metas.iter().enumerate() {
            let pat = if mj == k + 3 {
                m(mi_i) // the j slot repeats i
            } else {
                msp(mj, ident_spine(md.binders))
            };
            lhs_args.push(PatArg::new(md.binders, pat));
        }
        let mut d_of_bs = Vec::new();
        for mm in 1..=k {
            d_of_bs.push(m(mi_block(mm)));
        }
        t.add_equation(eq(
            &format!("{}-diag", name),
            metas,
            app(&name, lhs_args),
            msp(mi_dd, d_of_bs),
        ));
    }
}

/// sigma^l: the primed local coercions collapse on families that do not
/// use the interval variable.
fn add_sigma_l(t: &mut Theory) {
    for k in 1..=2 {
        let name = local_coe_name(0, true, k);
        if !t.has_symbol(&name, 2 * k + 2) {
            continue;
        }
        // coe0lp(Bs, D, d, bs) == d(bs) when nothing mentions x.
        // metas: B_m (m-1 binders, x omitted), D (k), d (k), b_1..b_k
        let mi_d = k;
        let mi_dd = k + 1;
        let mi_block = |mm: usize| k + 2 + (mm - 1);
        let mut metas: Vec<MetaDecl> = Vec::new();
        for mm in 1..=k {
            let mut tele: Vec<Pat> = Vec::new();
            for e in 1..mm {
                tele.push(msp(e - 1, ident_spine(e - 1)));
            }
            metas.push(MetaDecl::ty(&format!("B{}", mm), mm - 1, tele));
        }
        {
            let mut tele: Vec<Pat> = Vec::new();
            for e in 1..=k {
                tele.push(msp(e - 1, ident_spine(e - 1)));
            }
            metas.push(MetaDecl::ty("D", k, tele));
        }
        {
            let mut tele: Vec<Pat> = Vec::new();
            for e in 1..=k {
                tele.push(msp(e - 1, ident_spine(e - 1)));
            }
            metas.push(MetaDecl::tm("d", k, tele, Some(msp(mi_d, ident_spine(k)))));
        }
        for mm in 1..=k {
            let mut spine = Vec::new();
            for e in 1..mm {
                spine.push(m(mi_block(e)));
            }
            metas.push(MetaDecl::tm(
                &format!("b{}", mm),
                0,
                vec![],
                Some(msp(mm - 1, spine)),
            ));
        }
        let mut lhs_args: Vec<PatArg> = Vec::new();
        for mm in 1..=k {
            lhs_args.push(PatArg::new(mm, msp(mm - 1, ident_spine(mm - 1))));
        }
        lhs_args.push(PatArg::new(1 + k, msp(mi_d, ident_spine(k))));
        lhs_args.push(PatArg::new(k, msp(mi_dd, ident_spine(k))));
        for mm in 1..=k {
            lhs_args.push(PatArg::plain(m(mi_block(mm))));
        }
        let mut d_of_bs = Vec::new();
        for mm in 1..=k {
            d_of_bs.push(m(mi_block(mm)));
        }
        t.add_equation(eq(
            &format!("{}-sigma", name),
            metas,
            app(&name, lhs_args),
            msp(mi_dd, d_of_bs),
        ));
    }
    for k in 1..=2 {
        let name = local_coe_name(1, true, k);
        if !t.has_symbol(&name, 2 * k + 3) {
            continue;
        }
        // metas: B_m with m-1 binders (x omitted), D with k binders,
        // d with k binders, i, b_1..b_k
        let mi_d = k;
        let mi_dd = k + 1;
        let mi_block = |mm: usize| k + 3 + (mm - 1);
        let mut metas: Vec<MetaDecl> = Vec::new();
        for mm in 1..=k {
            let mut tele: Vec<Pat> = Vec::new();
            for e in 1..mm {
                tele.push(msp(e - 1, ident_spine(e - 1)));
            }
            metas.push(MetaDecl::ty(&format!("B{}", mm), mm - 1, tele));
        }
        {
            let mut tele: Vec<Pat> = Vec::new();
            for e in 1..=k {
                tele.push(msp(e - 1, ident_spine(e - 1)));
            }
            metas.push(MetaDecl::ty("D", k, tele));
        }
        {
            let mut tele: Vec<Pat> = Vec::new();
            for e in 1..=k {
                tele.push(msp(e - 1, ident_spine(e - 1)));
            }
            metas.push(MetaDecl::tm("d", k, tele, Some(msp(mi_d, ident_spine(k)))));
        }
        metas.push(tm_i("i"));
        for mm in 1..=k {
            let mut spine = Vec::new();
            for e in 1..mm {
                spine.push(m(mi_block(e)));
            }
            metas.push(MetaDecl::tm(
                &format!("b{}", mm),
                0,
                vec![],
                Some(msp(mm - 1, spine)),
            ));
        }
        // lhs: spines omit the x binder
        let mut lhs_args: Vec<PatArg> = Vec::new();
        for mm in 1..=k {
            lhs_args.push(PatArg::new(mm, msp(mm - 1, ident_spine(mm - 1))));
        }
        lhs_args.push(PatArg::new(1 + k, msp(mi_d, ident_spine(k))));
        lhs_args.push(PatArg::new(k, msp(mi_dd, ident_spine(k))));
        lhs_args.push(PatArg::plain(m(k + 2)));
        for mm in 1..=k {
            lhs_args.push(PatArg::plain(m(mi_block(mm))));
        }
        let mut d_of_bs = Vec::new();
        for mm in 1..=k {
            d_of_bs.push(m(mi_block(mm)));
        }
        t.add_equation(eq(
            &format!("{}-sigma", name),
            metas,
            app(&name, lhs_args),
            msp(mi_dd, d_of_bs),
        ));
    }
}

fn theory_local_coe(alpha: usize, primed: bool) -> Theory {
    let mut t = theory_interval().renamed(&format!(
        "coe{}{}_l",
        alpha,
        if primed { "p" } else { "" }
    ));
    for k in 1..=2 {
        add_local_coe(&mut t, alpha, primed, k);
    }
    t
}

// ---------------------------------------------------------------------
// registry

/// Canonical names of the registered theories.
pub fn registry_names() -> Vec<&'static str> {
    vec![
        "I",
        "Id",
        "Id-",
        "coe0",
        "coe1",
        "coe2",
        "sq",
        "dc",
        "HPath",
        "Path",
        "Sigma",
        "Eq",
        "UEq",
        "wUA",
        "coe0'",
        "coe1'",
        "coe2'",
        "coe0+sigma",
        "coe1+sigma",
        "coe2+sigma",
        "coe2+beta1",
        "coe2+beta2",
        "Fill_tm",
        "Fill_l_tm",
        "coe_l1",
        "coe_l2",
        "coe_lp0",
        "coe_lp1",
        "coe_lp2",
        "T_Sigma",
    ]
}

/// Resolve a `+`-composed theory name. Component tokens are the primitive
/// theories; `sigma`, `beta1`, `beta2`, `beta_l2`, `sigma_l` and `wUA` are
/// modifiers applied after the union is formed.
pub fn builtin(name: &str) -> Result<Theory, StdlibError> {
    let name = name.trim();
    // aliases
    match name {
        "coe0'" => return builtin("coe0+HPath"),
        "coe1'" => return builtin("coe1+HPath"),
        "coe2'" => return builtin("coe2+HPath"),
        "T_Sigma" => return builtin("coe1+sigma+Path+wUA+Sigma"),
        _ => {}
    }

    let mut base: Option<Theory> = None;
    let mut sigma = false;
    let mut sigma_l = false;
    let mut beta1 = false;
    let mut beta2 = false;
    let mut beta_l2 = false;
    let mut wua = false;

    let push = |acc: &mut Option<Theory>, t: Theory| -> Result<(), StdlibError> {
        *acc = Some(match acc.take() {
            None => t,
            Some(prev) => prev
                .combine(&t)
                .map_err(|e| StdlibError::Combine(e.to_string()))?,
        });
        Ok(())
    };

    for tok in name.split('+').map(str::trim) {
        match tok {
            "I" => push(&mut base, theory_interval())?,
            "Id" => push(&mut base, theory_id(false))?,
            "Id-" => push(&mut base, theory_id(true))?,
            "coe0" => push(&mut base, theory_coe0())?,
            "coe1" => push(&mut base, theory_coe1())?,
            "coe2" => push(&mut base, theory_coe2())?,
            "sq" => push(&mut base, theory_sq())?,
            "dc" => push(&mut base, theory_dc())?,
            "HPath" => push(&mut base, theory_hpath())?,
            "Path" => push(&mut base, theory_path())?,
            "Sigma" => push(&mut base, theory_sigma_types())?,
            "Eq" => push(&mut base, theory_eq())?,
            "UEq" => push(&mut base, theory_ueq())?,
            "Fill_tm" => push(&mut base, theory_fill_tm())?,
            "Fill_l_tm" => push(&mut base, theory_fill_l_tm())?,
            "coe_l1" => push(&mut base, theory_local_coe(1, false))?,
            "coe_l2" => push(&mut base, theory_local_coe(2, false))?,
            "coe_lp0" => push(&mut base, theory_local_coe(0, true))?,
            "coe_lp1" => push(&mut base, theory_local_coe(1, true))?,
            "coe_lp2" => push(&mut base, theory_local_coe(2, true))?,
            "coe0'" => push(&mut base, builtin("coe0'")?)?,
            "coe1'" => push(&mut base, builtin("coe1'")?)?,
            "coe2'" => push(&mut base, builtin("coe2'")?)?,
            "sigma" => sigma = true,
            "sigma_l" => sigma_l = true,
            "beta1" => beta1 = true,
            "beta2" => beta2 = true,
            "beta_l2" => beta_l2 = true,
            "wUA" => wua = true,
            other => return Err(StdlibError::Unknown(other.to_string())),
        }
    }

    let mut t = match base {
        Some(t) => t,
        None => {
            // pure-modifier names like "wUA" carry their own base
            if wua {
                theory_coe0()
            } else {
                return Err(StdlibError::Unknown(name.to_string()));
            }
        }
    };
    if wua && !t.has_symbol("coe0", 2) && !t.has_symbol("coe1", 3) && !t.has_symbol("coe2", 4) {
        t = t
            .combine(&theory_coe0())
            .map_err(|e| StdlibError::Combine(e.to_string()))?;
    }
    if beta1 {
        add_beta1(&mut t);
    }
    if beta2 {
        add_beta2(&mut t);
    }
    if beta_l2 {
        add_beta_l2(&mut t, true);
        add_beta_l2(&mut t, false);
    }
    if sigma {
        add_sigma_rules(&mut t);
    }
    if sigma_l {
        add_sigma_l(&mut t);
    }
    if wua {
        add_wua(&mut t);
    }
    Ok(t.renamed(name))
}

/// Name -> theory map for the full registry.
pub struct TheoryRegistry {
    entries: std::collections::BTreeMap<String, Theory>,
}

impl TheoryRegistry {
    pub fn standard() -> Result<TheoryRegistry, StdlibError> {
        let mut entries = std::collections::BTreeMap::new();
        for name in registry_names() {
            entries.insert(name.to_string(), builtin(name)?);
        }
        Ok(TheoryRegistry { entries })
    }

    pub fn get(&self, name: &str) -> Option<&Theory> {
        self.entries.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Theory)> {
        self.entries.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_has_three_symbols_three_rules_no_equations() {
        let t = builtin("I").unwrap();
        assert_eq!(t.symbols.len(), 3);
        assert_eq!(t.rules.len(), 3);
        assert_eq!(t.equations.len(), 0);
    }

    #[test]
    fn coe2_beta2_has_two_equations() {
        let t = builtin("coe2+beta2").unwrap();
        assert_eq!(t.equations.len(), 2);
    }

    #[test]
    fn t_sigma_is_the_named_sum() {
        let t = builtin("T_Sigma").unwrap();
        assert!(t.has_symbol("coe1", 3));
        assert!(t.has_symbol("Path", 3));
        assert!(t.has_symbol("iso", 7));
        assert!(t.has_symbol("Sigma", 2));
        assert!(t
            .equations
            .iter()
            .any(|e| e.name == "sigma-coe1"));
    }

    #[test]
    fn combine_associates_on_signatures() {
        let a = builtin("I+HPath").unwrap();
        let b = builtin("HPath+Path").unwrap();
        let ab = a.combine(&builtin("Path").unwrap()).unwrap();
        let ba = builtin("I").unwrap().combine(&b).unwrap();
        assert_eq!(ab.symbols, ba.symbols);
        assert_eq!(ab.rules.len(), ba.rules.len());
    }

    #[test]
    fn registry_builds_and_validates_structurally() {
        let reg = TheoryRegistry::standard().unwrap();
        for (name, t) in reg.iter() {
            t.validate().unwrap_or_else(|e| panic!("{}: {}", name, e));
        }
    }

    #[test]
    fn wua_switches_premise_form() {
        let six = builtin("wUA").unwrap();
        let two = builtin("HPath+wUA").unwrap();
        let iso6 = six.decl((crate::kernel::SymbolId::intern("iso"), 7)).unwrap();
        let iso2 = two.decl((crate::kernel::SymbolId::intern("iso"), 7)).unwrap();
        assert_eq!(iso6.args[4].0, 2);
        assert_eq!(iso2.args[4].0, 1);
    }
}
