//! The arrows between the built-in theories: identity-type eliminators
//! from coercion, connections from transport, the bottom-row diagonal
//! maps, the local/global coercion comparisons, fillers from coercion,
//! homogeneous into heterogeneous paths, and the wall-classifying map of
//! equivalence data.

use super::interval::fill_from_coe;
use super::TheoryMorphism;
use crate::kernel::SymbolId;
use crate::stdlib::{builtin, fill_symbol_name, local_coe_name};
use crate::theory::pat::{Pat, PatArg};
use crate::theory::Theory;

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

fn left() -> Pat {
    Pat::sym0("left")
}

fn right() -> Pat {
    Pat::sym0("right")
}

fn arrow(a: Pat, bb: Pat) -> Pat {
    app("~>", vec![pl(a), pl(bb)])
}

fn at4(a: Pat, a1: Pat, p: Pat, i: Pat) -> Pat {
    app("at", vec![pl(a), pl(a1), pl(p), pl(i)])
}

fn hpath_lit(a_ty: Pat, body: Pat) -> Pat {
    app("path", vec![pl(a_ty), bn(1, body)])
}

fn ident_spine(n: usize) -> Vec<Pat> {
    (0..n).rev().map(Pat::Bound).collect()
}

/// sq(i, j) as a derived term of coe1 + HPath:
/// at(left, j, coe1(\x. left ~> x, refl(left), j), i).
fn sq_image(i: Pat, j: Pat) -> Pat {
    let refl_left = hpath_lit(Pat::sym0("I"), left());
    at4(
        left(),
        j.clone(),
        app(
            "coe1",
            vec![bn(1, arrow(left(), b(0))), pl(refl_left), pl(j)],
        ),
        i,
    )
}

/// The family transported by the identity eliminator:
/// D(a, at(a, a', p, sq(i, right)), path(ty a, \j. at(a, a', p, sq(i, j))))
/// over one binder i; meta indices D=0, d=1, a=2, a'=3, p=4. The
/// connection is the primitive sq when the target has one, and its
/// transport image otherwise.
fn j_family(has_sq: bool) -> Pat {
    let sq = |i: Pat, j: Pat| {
        if has_sq {
            app("sq", vec![pl(i), pl(j)])
        } else {
            sq_image(i, j)
        }
    };
    let at_p = |idx: Pat| at4(m(2), m(3), m(4), idx);
    msp(
        0,
        vec![
            m(2),
            at_p(sq(b(0), right())),
            hpath_lit(Pat::TyOf(2, vec![]), at_p(sq(b(1), b(0)))),
        ],
    )
}

/// Which coercion the target theory provides.
#[derive(Clone, Copy)]
enum Coe {
    Zero,
    One,
}

impl Coe {
    fn coe0(&self, fam: Pat, d: Pat) -> Pat {
        match self {
            Coe::Zero => app("coe0", vec![bn(1, fam), pl(d)]),
            Coe::One => app("coe1", vec![bn(1, fam), pl(d), pl(right())]),
        }
    }

    fn coe1(&self, fam: Pat, d: Pat, i: Pat) -> Pat {
        match self {
            Coe::Zero => unreachable!("coe1 is not expressible from coe0 alone"),
            Coe::One => app("coe1", vec![bn(1, fam), pl(d), pl(i)]),
        }
    }
}

fn id_like_assignment(mor: &mut TheoryMorphism, coe: Coe) {
    let has_sq = mor.target.has_symbol("sq", 2);
    mor.map("Id", 2, arrow(m(0), m(1)));
    mor.map("refl", 1, hpath_lit(Pat::TyOf(0, vec![]), m(0)));
    mor.map("J", 5, coe.coe0(j_family(has_sq), msp(1, vec![m(2)])));
    if mor.source.has_symbol("Jeq", 3) {
        // Jeq(D, d, a) with metas D=0, d=1, a=2:
        // coe0(\j. coe1(\i. D(a, a, refl(a)), d(a), j) ~> d(a), refl(d(a)))
        let d_of_a = msp(1, vec![m(2)]);
        let refl_a = hpath_lit(Pat::TyOf(2, vec![]), m(2));
        let dpp = msp(0, vec![m(2), m(2), refl_a]);
        let fam = arrow(coe.coe1(dpp, d_of_a.clone(), b(0)), d_of_a.clone());
        let refl_da = hpath_lit(Pat::TyOf(1, vec![m(2)]), d_of_a);
        mor.map("Jeq", 3, coe.coe0(fam, refl_da));
    }
}

fn mk(name: &str, source: &str, target: &str) -> TheoryMorphism {
    TheoryMorphism::new(
        name,
        builtin(source).unwrap_or_else(|e| panic!("{}: {}", source, e)),
        builtin(target).unwrap_or_else(|e| panic!("{}: {}", target, e)),
    )
}

/// Map every symbol of one family to the same-layout symbol of another.
fn relabel(mor: &mut TheoryMorphism, from: &str, to: &str, arity: usize) {
    let decl = mor
        .source
        .decl((SymbolId::intern(from), arity))
        .unwrap_or_else(|| panic!("{} missing {}/{}", mor.name, from, arity))
        .clone();
    let args = decl
        .args
        .iter()
        .enumerate()
        .map(|(j, (binders, _))| PatArg::new(*binders, msp(j, ident_spine(*binders))))
        .collect();
    mor.map(from, arity, Pat::sym(to, args));
}

/// All arrows of the diagram with their defining assignments.
pub fn diagram() -> Vec<TheoryMorphism> {
    let mut out = Vec::new();

    // Id- -> Id : Jeq becomes refl at the computed J value
    {
        let mut mor = mk("Id- -> Id", "Id-", "Id");
        mor.map("Jeq", 3, app("refl", vec![pl(msp(1, vec![m(2)]))]));
        out.push(mor);
    }
    // vertical maps from the identity theories
    {
        let mut mor = mk("Id- -> coe1'", "Id-", "coe1'");
        id_like_assignment(&mut mor, Coe::One);
        out.push(mor);
    }
    {
        let mut mor = mk("Id -> coe0'+sigma+sq", "Id", "coe0'+sigma+sq");
        id_like_assignment(&mut mor, Coe::Zero);
        out.push(mor);
    }
    {
        let mut mor = mk("Id -> coe1'+sigma", "Id", "coe1'+sigma");
        id_like_assignment(&mut mor, Coe::One);
        out.push(mor);
    }
    // coe0' + sq -> coe1'
    {
        let mut mor = mk("coe0'+sq -> coe1'", "coe0'+sq", "coe1'");
        mor.map(
            "coe0",
            2,
            app(
                "coe1",
                vec![bn(1, msp(0, ident_spine(1))), pl(m(1)), pl(right())],
            ),
        );
        mor.map("sq", 2, sq_image(m(0), m(1)));
        out.push(mor);
    }
    // coe1' -> coe2'
    {
        let mut mor = mk("coe1' -> coe2'", "coe1'", "coe2'");
        mor.map(
            "coe1",
            3,
            app(
                "coe2",
                vec![
                    bn(1, msp(0, ident_spine(1))),
                    pl(left()),
                    pl(m(1)),
                    pl(m(2)),
                ],
            ),
        );
        out.push(mor);
    }
    // sq -> coe1'
    {
        let mut mor = mk("sq -> coe1'", "sq", "coe1'");
        mor.map("sq", 2, sq_image(m(0), m(1)));
        out.push(mor);
    }
    // coe2 -> coe0' + sigma + sq, through Ic and a two-argument diagonal
    {
        let mut mor = mk("coe2 -> coe0'+sigma+sq", "coe2", "coe0'+sigma+sq");
        // Ic(x) = path(I, \j. sq(j, x)) : left ~> x
        let ic = |x: Pat| hpath_lit(Pat::sym0("I"), app("sq", vec![pl(b(0)), pl(x)]));
        // coe1 over coe0 + sq: coe1(E, e, w) = coe0(\v. E[sq(v, w)], e)
        // dc2(i, j) : i ~> j, transporting Ic(j) along x |-> (at(Ic(i), x) ~> j)
        let dc2 = |i: Pat, j: Pat| {
            let fam_at = |x: Pat| arrow(at4(left(), i.clone(), ic(i.clone()), x), j.clone());
            app(
                "coe0",
                vec![
                    bn(1, fam_at(app("sq", vec![pl(b(0)), pl(right())]))),
                    pl(ic(j.clone())),
                ],
            )
        };
        let fam = msp(0, vec![at4(m(1), m(3), dc2(m(1), m(3)), b(0))]);
        mor.map("coe2", 4, app("coe0", vec![bn(1, fam), pl(m(2))]));
        out.push(mor);
    }
    // bottom row: sq -> dc
    {
        let mut mor = mk("sq -> dc", "sq", "dc");
        mor.map("sq", 2, app("dc", vec![pl(left()), pl(m(1)), pl(m(0))]));
        out.push(mor);
    }
    // dc -> coe2' + beta2
    {
        let mut mor = mk("dc -> coe2'+beta2", "dc", "coe2'+beta2");
        let inner = app(
            "coe2",
            vec![
                bn(1, arrow(m(0), b(0))),
                pl(m(0)),
                pl(hpath_lit(Pat::sym0("I"), m(0))),
                pl(m(1)),
            ],
        );
        mor.map("dc", 3, at4(m(0), m(1), inner, m(2)));
        out.push(mor);
    }
    // coe2' + beta2 -> coe0' + sigma + dc
    {
        let mut mor = mk(
            "coe2'+beta2 -> coe0'+sigma+dc",
            "coe2'+beta2",
            "coe0'+sigma+dc",
        );
        let fam = msp(0, vec![app("dc", vec![pl(m(1)), pl(m(3)), pl(b(0))])]);
        mor.map("coe2", 4, app("coe0", vec![bn(1, fam), pl(m(2))]));
        out.push(mor);
    }
    // coe0' + sigma + sq <-> coe1' + sigma
    {
        let mut mor = mk(
            "coe0'+sigma+sq -> coe1'+sigma",
            "coe0'+sigma+sq",
            "coe1'+sigma",
        );
        mor.map(
            "coe0",
            2,
            app(
                "coe1",
                vec![bn(1, msp(0, ident_spine(1))), pl(m(1)), pl(right())],
            ),
        );
        mor.map("sq", 2, sq_image(m(0), m(1)));
        out.push(mor);
    }
    {
        let mut mor = mk(
            "coe1'+sigma -> coe0'+sigma+sq",
            "coe1'+sigma",
            "coe0'+sigma+sq",
        );
        let fam = msp(0, vec![app("sq", vec![pl(b(0)), pl(m(2))])]);
        mor.map("coe1", 3, app("coe0", vec![bn(1, fam), pl(m(1))]));
        out.push(mor);
    }
    // local/global coercion comparisons
    out.push(local_iso(false));
    out.push(local_iso(true));
    out.push(local_to_global());
    out.push(lp1_to_lp0());
    out.push(lp0_to_global());
    out.push(coe1_fill_iso(false));
    out.push(coe1_fill_iso(true));
    // fillers from coercion
    out.push(fill_from_coe());
    // homogeneous into heterogeneous paths
    {
        let mut mor = mk("HPath -> Path", "HPath", "Path");
        mor.map(
            "~>",
            2,
            app(
                "Path",
                vec![bn(1, Pat::TyOf(0, vec![])), pl(m(0)), pl(m(1))],
            ),
        );
        mor.map("path", 2, app("path", vec![bn(1, msp(1, ident_spine(1)))]));
        mor.map(
            "at",
            4,
            app(
                "at",
                vec![
                    bn(1, Pat::TyOf(0, vec![])),
                    pl(m(0)),
                    pl(m(1)),
                    pl(m(2)),
                    pl(m(3)),
                ],
            ),
        );
        out.push(mor);
    }
    // the wall-classifying map of equivalence data
    out.push(phi());

    out
}

/// The globalized local coe2 and its primed form are isomorphic; with
/// explicit context-morphism arguments the maps are relabelings and the
/// round trips are definitional identities on generators.
fn local_iso(back: bool) -> TheoryMorphism {
    let (src, tgt, name) = if back {
        ("coe_lp2", "coe_l2", "coe_lp2 -> coe_l2")
    } else {
        ("coe_l2", "coe_lp2", "coe_l2 -> coe_lp2")
    };
    let mut mor = mk(name, src, tgt);
    for k in 1..=2 {
        let from = local_coe_name(2, back, k);
        let to = local_coe_name(2, !back, k);
        relabel(&mut mor, &from, &to, 2 * k + 4);
    }
    mor
}

/// coe_lp2 + beta_l2 -> coe2 + beta2 via the transport chains b'_m.
fn local_to_global() -> TheoryMorphism {
    let mut mor = mk(
        "coe_lp2+beta_l2 -> coe2+beta2",
        "coe_lp2+beta_l2",
        "coe2+beta2",
    );
    for k in 1..=2usize {
        // metas: B_1..B_k, D, i, d, j, b_1..b_k
        let mi_d = k;
        let mi_i = k + 1;
        let mi_dd = k + 2;
        let mi_j = k + 3;
        // b'_m(z) = coe2(\x. B_m(x, b'_1(x), ..), j, b_m, z)
        fn bprime(mm: usize, z: Pat, k: usize) -> Pat {
            let mi_j = k + 3;
            let mi_b = |m2: usize| k + 4 + (m2 - 1);
            let mut spine = vec![b(0)];
            for e in 1..mm {
                spine.push(bprime(e, b(0), k));
            }
            app(
                "coe2",
                vec![
                    bn(1, msp(mm - 1, spine)),
                    pl(m(mi_j)),
                    pl(m(mi_b(mm))),
                    pl(z),
                ],
            )
        }
        let mut d_spine = vec![b(0)];
        for e in 1..=k {
            d_spine.push(bprime(e, b(0), k));
        }
        let mut dd_spine = Vec::new();
        for e in 1..=k {
            dd_spine.push(bprime(e, m(mi_i), k));
        }
        let image = app(
            "coe2",
            vec![
                bn(1, msp(mi_d, d_spine)),
                pl(m(mi_i)),
                pl(msp(mi_dd, dd_spine)),
                pl(m(mi_j)),
            ],
        );
        mor.map(&local_coe_name(2, true, k), 2 * k + 4, image);
    }
    mor
}

/// coe_lp1 -> coe_lp0 + sigma_l + sq: reparametrize the family by sq.
fn lp1_to_lp0() -> TheoryMorphism {
    let mut mor = mk("coe_lp1 -> coe_lp0+sigma_l+sq", "coe_lp1", "coe_lp0+sigma_l+sq");
    for k in 1..=2usize {
        // coe1lp metas: B_1..B_k, D, d, i, b_1..b_k
        let mi_d = k;
        let mi_dd = k + 1;
        let mi_i = k + 2;
        let mi_b = |mm: usize| k + 3 + (mm - 1);
        let mut args: Vec<PatArg> = Vec::new();
        for mm in 1..=k {
            // B_m has binders m (x outermost at Bound(m-1))
            let mut sp = vec![app("sq", vec![pl(b(mm - 1)), pl(m(mi_i))])];
            for e in 1..mm {
                sp.push(b(mm - 1 - e));
            }
            args.push(PatArg::new(mm, msp(mm - 1, sp)));
        }
        {
            let mut sp = vec![app("sq", vec![pl(b(k)), pl(m(mi_i))])];
            for e in 1..=k {
                sp.push(b(k - e));
            }
            args.push(PatArg::new(1 + k, msp(mi_d, sp)));
        }
        args.push(PatArg::new(k, msp(mi_dd, ident_spine(k))));
        for mm in 1..=k {
            args.push(PatArg::plain(m(mi_b(mm))));
        }
        mor.map(
            &local_coe_name(1, true, k),
            2 * k + 3,
            Pat::sym(&local_coe_name(0, true, k), args),
        );
    }
    mor
}

/// coe_lp0 + sigma_l + sq + Path -> coe0 + sigma + sq + Path, through the
/// derived diagonal correction.
fn lp0_to_global() -> TheoryMorphism {
    let mut mor = mk(
        "coe_lp0+sigma_l+sq+Path -> coe0+sigma+sq+Path",
        "coe_lp0+sigma_l+sq+Path",
        "coe0+sigma+sq+Path",
    );
    for k in 1..=2usize {
        mor.map(&local_coe_name(0, true, k), 2 * k + 2, lp0_image(k));
    }
    mor
}

/// The image of the globalized local coe0: built at the term level over
/// generator symbols standing for the metas, then abstracted.
fn lp0_image(k: usize) -> Pat {
    use super::interval::{dc_prime_kit, term_to_pat_over_gens, tleft, tright, CoeKit};
    use crate::kernel::{lift, substitute, Arg, Term};
    use std::collections::BTreeMap;

    let gen = |name: &str, vars: usize| -> Term {
        Term::sym(
            name,
            (0..vars).rev().map(|i| Arg::plain(Term::Var(i))).collect(),
        )
    };
    let mut gens: BTreeMap<SymbolId, usize> = BTreeMap::new();
    for mm in 1..=k {
        gens.insert(SymbolId::intern(&format!("lp0$B{}", mm)), mm - 1);
    }
    gens.insert(SymbolId::intern("lp0$D"), k);
    gens.insert(SymbolId::intern("lp0$d"), k + 1);
    for mm in 1..=k {
        gens.insert(SymbolId::intern(&format!("lp0$b{}", mm)), k + 1 + mm);
    }

    // coe2 image over coe0 + sq + Path: coe2(E, i, e, j) = coe0(\x. E[dc'(i,j,x)], e)
    fn coe2_img(fam: Term, i: Term, e: Term, j: Term) -> Term {
        let dc = dc_prime_kit(CoeKit::Coe0SqBased, lift(&i, 1, 0), lift(&j, 1, 0), Term::var(0));
        let fam2 = substitute(&lift(&fam, 1, 1), &[dc], 0);
        Term::sym("coe0", vec![Arg::new(1, fam2), Arg::plain(e)])
    }
    // b'_m(z) = coe2(\x. B_m(x, b'_1(x)..), right, b_m, z)
    fn bprime(mm: usize, z: Term, k: usize) -> Term {
        let gen0 = |name: &str| Term::sym(name, vec![]);
        let mut args = vec![Arg::plain(Term::var(0))];
        for e in 1..mm {
            args.push(Arg::plain(bprime(e, Term::var(0), k)));
        }
        let fam = Term::App(SymbolId::intern(&format!("lp0$B{}", mm)), args);
        coe2_img(fam, tright(), gen0(&format!("lp0$b{}", mm)), z)
    }

    let mut d_args = vec![Arg::plain(Term::var(0))];
    for e in 1..=k {
        d_args.push(Arg::plain(bprime(e, Term::var(0), k)));
    }
    let fam = Term::App(SymbolId::intern("lp0$D"), d_args);
    let mut d_of = Vec::new();
    for e in 1..=k {
        d_of.push(Arg::plain(bprime(e, tleft(), k)));
    }
    let base = Term::App(SymbolId::intern("lp0$d"), d_of);
    let image = Term::sym("coe0", vec![Arg::new(1, fam), Arg::plain(base)]);
    let _ = gen;
    term_to_pat_over_gens(&image, &gens)
}

/// The dimension-1 subtheory of the local fillers.
fn fill1_subtheory() -> Theory {
    let full = builtin("Fill_l_tm").unwrap();
    let mut sub = builtin("I").unwrap().renamed("Fill1_l");
    for k in 0..=2usize {
        let name = fill_symbol_name(1, k);
        let key = (SymbolId::intern(&name), 2 * k + 3);
        if let Some(d) = full.decl(key) {
            sub.symbols.insert(key, d.clone());
        }
        if let Some(r) = full.rule_for(key) {
            sub.add_rule(r.clone());
        }
        for eq in &full.equations {
            if eq.name.starts_with(&format!("{}-", name)) {
                sub.add_equation(eq.clone());
            }
        }
    }
    sub
}

/// coe1 and its local forms correspond to the dimension-1 fillers: the
/// layouts agree argument for argument, so the maps are relabelings.
fn coe1_fill_iso(back: bool) -> TheoryMorphism {
    let coe_side = builtin("coe1+coe_l1").unwrap();
    let fill_side = fill1_subtheory();
    let (source, target, name) = if back {
        (fill_side, coe_side, "Fill1_l -> coe1+coe_l1")
    } else {
        (coe_side, fill_side, "coe1+coe_l1 -> Fill1_l")
    };
    let mut mor = TheoryMorphism::new(name, source, target);
    for k in 0..=2usize {
        let coe_name = if k == 0 {
            "coe1".to_string()
        } else {
            local_coe_name(1, false, k)
        };
        let fill_name = fill_symbol_name(1, k);
        let arity = 2 * k + 3;
        let (from, to) = if back {
            (fill_name, coe_name)
        } else {
            (coe_name, fill_name)
        };
        relabel(&mut mor, &from, &to, arity);
    }
    mor
}

/// The canonical map classifying equivalence data by an interval-indexed
/// wall.
pub fn phi() -> TheoryMorphism {
    let mut mor = mk(
        "Eq+coe2+beta1 -> UEq+coe2+beta2",
        "Eq+coe2+beta1",
        "UEq+coe2+beta2+HPath",
    );
    let h_at = |i: Pat| app("H", vec![pl(i)]);
    let f = |kk: Pat| {
        app(
            "coe2",
            vec![bn(1, h_at(b(0))), pl(left()), pl(m(0)), pl(kk)],
        )
    };
    let g = |kk: Pat| {
        app(
            "coe2",
            vec![bn(1, h_at(b(0))), pl(right()), pl(m(0)), pl(kk)],
        )
    };
    mor.map("A", 0, h_at(left()));
    mor.map("B", 0, h_at(right()));
    mor.map("b", 1, f(right()));
    mor.map("a1", 1, g(left()));
    mor.map("a2", 1, g(left()));
    // p(x) -> coe2(\j. coe2(\i. H, j, f(j), left) ~> x, left, refl(x), right)
    {
        let f_at_j = app(
            "coe2",
            vec![bn(1, h_at(b(0))), pl(left()), pl(m(0)), pl(b(0))],
        );
        let fam = arrow(
            app(
                "coe2",
                vec![bn(1, h_at(b(0))), pl(b(0)), pl(f_at_j), pl(left())],
            ),
            m(0),
        );
        let refl_x = hpath_lit(h_at(left()), m(0));
        mor.map(
            "p",
            1,
            app(
                "coe2",
                vec![bn(1, fam), pl(left()), pl(refl_x), pl(right())],
            ),
        );
    }
    // q(y) -> coe2(\j. coe2(\i. H, j, g(j), right) ~> y, right, refl(y), left)
    {
        let g_at_j = app(
            "coe2",
            vec![bn(1, h_at(b(0))), pl(right()), pl(m(0)), pl(b(0))],
        );
        let fam = arrow(
            app(
                "coe2",
                vec![bn(1, h_at(b(0))), pl(b(0)), pl(g_at_j), pl(right())],
            ),
            m(0),
        );
        let refl_y = hpath_lit(h_at(right()), m(0));
        mor.map(
            "q",
            1,
            app(
                "coe2",
                vec![bn(1, fam), pl(right()), pl(refl_y), pl(left())],
            ),
        );
    }
    mor
}
