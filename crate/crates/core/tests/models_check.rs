//! The model calculus: path-object laws on generated elements, pushout
//! universal property by enumeration, cylinder factorizations, sigma
//! compression, homotopy witnesses, lifts, and weak-equivalence
//! certificates.

use intt_core::constructions::interval::CoeKit;
use intt_core::kernel::{Arg, Kind, Telescope, Term};
use intt_core::models::cofib::{context_generators, CylinderData, LiftProblem};
use intt_core::models::{
    check_homotopy, compose, cylinder, enumerate_elements, generating_cofibration,
    jty_translation, lift_trivial_cofibration, present, presentations_isomorphic, pushout,
    sigma_compress, certify_weak_equivalence, graph_equivalence_terms, CylinderKind, Element,
    Generator, HomotopyWitness, ModelMorphism, Presentation, Relation, Span, WeakEqCertificate,
    WeqQuery,
};
use intt_core::stdlib::builtin;
use intt_core::theory::{equal, Checker, EqualityVerdict};

const FUEL: u64 = 20_000;

fn g0(name: &str) -> Term {
    Term::sym(name, vec![])
}

fn ti() -> Term {
    g0("I")
}

fn assert_yes(theory: &intt_core::Theory, a: &Term, b: &Term, what: &str) {
    match equal(theory, a, b, FUEL) {
        EqualityVerdict::Yes { .. } => {}
        v => panic!("{}: {:?}", what, v),
    }
}

/// A presentation with a generic type and a couple of elements, used as a
/// pool for element generation.
fn pool_presentation() -> Presentation {
    let base = builtin("coe1+sigma+sq+HPath+Path").unwrap();
    present(
        "pool",
        base,
        vec![
            Generator {
                name: "X".into(),
                kind: Kind::Ty,
                context: vec![],
                ty: None,
            },
            Generator {
                name: "x0".into(),
                kind: Kind::Tm,
                context: vec![],
                ty: Some(g0("X")),
            },
            Generator {
                name: "ln".into(),
                kind: Kind::Tm,
                context: vec![ti()],
                ty: Some(g0("X")),
            },
        ],
        vec![],
        FUEL,
    )
    .unwrap()
}

#[test]
fn path_object_laws_hold_on_fifty_generated_elements() {
    let p = pool_presentation();
    let lang = p.lang();
    let ictx = Telescope::new(vec![ti()]);
    // elements over (I): interval-valued and X-valued terms of depth <= 4
    let mut pool = Vec::new();
    pool.extend(enumerate_elements(&p, Kind::Tm, &ictx, Some(&ti()), 2, FUEL));
    pool.extend(enumerate_elements(&p, Kind::Tm, &ictx, Some(&g0("X")), 2, FUEL));
    // a seeded linear congruence picks the sample
    let mut state = 0xdead_beefu64;
    let mut sample = Vec::new();
    while sample.len() < 50 {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let idx = (state >> 33) as usize % pool.len();
        sample.push(pool[idx].clone());
        if pool.len() < 3 {
            break;
        }
    }
    assert!(sample.len() >= 50, "pool too small: {}", pool.len());
    for term in sample {
        let e = Element::new(ictx.clone(), term);
        assert!(e.in_path_object(&p, FUEL));
        // p0 . t = p1 . t = id
        let te = e.t_op();
        assert_yes(&lang, &te.p0().term, &e.term, "p0 . t = id");
        assert_yes(&lang, &te.p1().term, &e.term, "p1 . t = id");
        // p0 . s = p1 and p1 . s = p0
        let se = e.s_op();
        assert_yes(&lang, &se.p0().term, &e.p1().term, "p0 . s = p1");
        assert_yes(&lang, &se.p1().term, &e.p0().term, "p1 . s = p0");
    }
}

/// Enumerate all morphisms out of a presentation into a target by
/// brute-force choice of generator images at a depth bound.
fn all_morphisms(src: &Presentation, tgt: &Presentation, depth: usize) -> Vec<ModelMorphism> {
    let mut partial: Vec<std::collections::BTreeMap<String, Term>> =
        vec![std::collections::BTreeMap::new()];
    for g in &src.generators {
        let mut grown = Vec::new();
        for assignment in &partial {
            // candidate images: translate the generator's context through
            // the partial assignment to know its type; enumerate targets
            let partial_mor = ModelMorphism {
                name: "partial".into(),
                source: src.clone(),
                target: tgt.clone(),
                images: assignment.clone(),
            };
            let mut ctx = Telescope::empty();
            let mut ok = true;
            for entry in &g.context {
                match partial_mor.apply(entry) {
                    Ok(t) => ctx.push(t),
                    Err(_) => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            let want = match (&g.kind, &g.ty) {
                (Kind::Ty, _) => None,
                (_, Some(ty)) => partial_mor.apply(ty).ok(),
                _ => None,
            };
            let cands = enumerate_elements(
                tgt,
                g.kind,
                &ctx,
                want.as_ref(),
                depth,
                FUEL,
            );
            for c in cands {
                let mut a2 = assignment.clone();
                a2.insert(g.name.clone(), c);
                grown.push(a2);
            }
        }
        partial = grown;
    }
    partial
        .into_iter()
        .map(|images| ModelMorphism {
            name: "cand".into(),
            source: src.clone(),
            target: tgt.clone(),
            images,
        })
        .filter(|m| match m.validate(FUEL) {
            Ok(verdicts) => verdicts
                .iter()
                .all(|(_, v)| matches!(v, EqualityVerdict::Yes { .. })),
            Err(_) => false,
        })
        .collect()
}

#[test]
fn pushout_has_the_universal_property_on_enumerated_cases() {
    let base = builtin("I").unwrap();
    // apex: one closed type
    let apex = present(
        "apex",
        base.clone(),
        vec![Generator {
            name: "T".into(),
            kind: Kind::Ty,
            context: vec![],
            ty: None,
        }],
        vec![],
        FUEL,
    )
    .unwrap();
    // three small extensions
    let ext = |name: &str, extra: Vec<Generator>| {
        let mut gens = apex.generators.clone();
        gens.extend(extra);
        present(name, base.clone(), gens, vec![], FUEL).unwrap()
    };
    let p1 = ext(
        "p1",
        vec![Generator {
            name: "c1".into(),
            kind: Kind::Tm,
            context: vec![],
            ty: Some(g0("T")),
        }],
    );
    let p2 = ext(
        "p2",
        vec![Generator {
            name: "c2".into(),
            kind: Kind::Tm,
            context: vec![],
            ty: Some(g0("T")),
        }],
    );
    let p3 = ext(
        "p3",
        vec![
            Generator {
                name: "d1".into(),
                kind: Kind::Tm,
                context: vec![],
                ty: Some(g0("T")),
            },
            Generator {
                name: "d2".into(),
                kind: Kind::Tm,
                context: vec![],
                ty: Some(g0("T")),
            },
        ],
    );
    let leg = |tgt: &Presentation| ModelMorphism {
        name: "leg".into(),
        source: apex.clone(),
        target: tgt.clone(),
        images: [("T".to_string(), g0("T"))].into_iter().collect(),
    };
    for (a, b) in [(&p1, &p2), (&p1, &p3), (&p2, &p3)] {
        let span = Span {
            left: leg(a),
            right: leg(b),
        };
        let po = pushout(&span).unwrap();
        po.presentation.validate(FUEL).unwrap();
        // universal property at the test model p3: morphisms out of the
        // pushout correspond to compatible pairs
        let target = &p3;
        let from_po = all_morphisms(&po.presentation, target, 1);
        let from_a = all_morphisms(a, target, 1);
        let from_b = all_morphisms(b, target, 1);
        let mut compatible = 0usize;
        for ma in &from_a {
            for mb in &from_b {
                let ra = compose(&span.left, ma).unwrap();
                let rb = compose(&span.right, mb).unwrap();
                // restrictions agree on the apex generators
                let lang = target.lang();
                let agree = apex.generators.iter().all(|g| {
                    matches!(
                        equal(
                            &lang,
                            ra.images.get(&g.name).unwrap(),
                            rb.images.get(&g.name).unwrap(),
                            FUEL
                        ),
                        EqualityVerdict::Yes { .. }
                    )
                });
                if agree {
                    compatible += 1;
                }
            }
        }
        assert_eq!(
            from_po.len(),
            compatible,
            "universal property fails for {} +_apex {}",
            a.name,
            b.name
        );
        // and every pushout morphism restricts to a compatible pair
        for m in &from_po {
            let via_a = compose(&po.include_left, m).unwrap();
            via_a.validate(FUEL).unwrap();
        }
    }
}

#[test]
fn pushout_is_symmetric_up_to_renaming() {
    let base = builtin("I").unwrap();
    let apex = present(
        "apex",
        base.clone(),
        vec![Generator {
            name: "T".into(),
            kind: Kind::Ty,
            context: vec![],
            ty: None,
        }],
        vec![],
        FUEL,
    )
    .unwrap();
    let mk = |name: &str, cname: &str| {
        let mut gens = apex.generators.clone();
        gens.push(Generator {
            name: cname.into(),
            kind: Kind::Tm,
            context: vec![],
            ty: Some(g0("T")),
        });
        present(name, base.clone(), gens, vec![], FUEL).unwrap()
    };
    let p1 = mk("p1", "c1");
    let p2 = mk("p2", "c2");
    let leg = |tgt: &Presentation| ModelMorphism {
        name: "leg".into(),
        source: apex.clone(),
        target: tgt.clone(),
        images: [("T".to_string(), g0("T"))].into_iter().collect(),
    };
    let po12 = pushout(&Span { left: leg(&p1), right: leg(&p2) }).unwrap();
    let po21 = pushout(&Span { left: leg(&p2), right: leg(&p1) }).unwrap();
    // swap morphisms: generators map by their role
    let images_fwd: std::collections::BTreeMap<String, Term> = po12
        .presentation
        .generators
        .iter()
        .map(|g| {
            let img_name = match g.name.as_str() {
                "T" => "T_1".to_string(),
                "T_1" => "T".to_string(),
                other => other.to_string(),
            };
            (
                g.name.clone(),
                Term::sym(&img_name, (0..g.level()).rev().map(|i| Arg::plain(Term::Var(i))).collect()),
            )
        })
        .collect();
    let images_bwd: std::collections::BTreeMap<String, Term> = po21
        .presentation
        .generators
        .iter()
        .map(|g| {
            let img_name = match g.name.as_str() {
                "T" => "T_1".to_string(),
                "T_1" => "T".to_string(),
                other => other.to_string(),
            };
            (
                g.name.clone(),
                Term::sym(&img_name, (0..g.level()).rev().map(|i| Arg::plain(Term::Var(i))).collect()),
            )
        })
        .collect();
    let fwd = ModelMorphism {
        name: "swap".into(),
        source: po12.presentation.clone(),
        target: po21.presentation.clone(),
        images: images_fwd,
    };
    let bwd = ModelMorphism {
        name: "swap_back".into(),
        source: po21.presentation.clone(),
        target: po12.presentation.clone(),
        images: images_bwd,
    };
    assert!(presentations_isomorphic(&fwd, &bwd, FUEL).unwrap());
}

#[test]
fn tm_cylinder_sections_and_pushout_factorization() {
    let base = builtin("coe1+sigma+sq+HPath+Path").unwrap();
    for n in 0..=1 {
        let CylinderData { cylinder: c, i0, i1, s } = cylinder(CylinderKind::Tm, n, &base).unwrap();
        c.validate(FUEL).unwrap();
        i0.validate(FUEL).unwrap();
        i1.validate(FUEL).unwrap();
        s.validate(FUEL).unwrap();
        // s . i0 = s . i1 = id on generators
        let id = ModelMorphism::identity(&i0.source);
        for end in [&i0, &i1] {
            let comp = compose(end, &s).unwrap();
            let lang = i0.source.lang();
            for g in &i0.source.generators {
                assert_yes(
                    &lang,
                    comp.images.get(&g.name).unwrap(),
                    id.images.get(&g.name).unwrap(),
                    &format!("s . {} on {}", end.name, g.name),
                );
            }
        }
        // [i0, i1] is a pushout of the term inclusion: the cylinder is
        // isomorphic to the presentation with a, a' and a path generator
        let mut comparison = Presentation::new("cmp", base.clone());
        comparison.generators = context_generators(n);
        let ctx: Vec<Term> = (0..n)
            .map(|t| {
                Term::sym(
                    &format!("G{}", t),
                    (0..t).rev().map(|i| Arg::plain(Term::Var(i))).collect(),
                )
            })
            .collect();
        let a_app = Term::sym(
            "A",
            (0..n).rev().map(|i| Arg::plain(Term::Var(i))).collect(),
        );
        comparison.generators.push(Generator {
            name: "A".into(),
            kind: Kind::Ty,
            context: ctx.clone(),
            ty: None,
        });
        for nm in ["a", "a'"] {
            comparison.generators.push(Generator {
                name: nm.into(),
                kind: Kind::Tm,
                context: ctx.clone(),
                ty: Some(a_app.clone()),
            });
        }
        let coords: Vec<Arg> = (0..n).rev().map(|i| Arg::plain(Term::Var(i))).collect();
        let a_of = |nm: &str| Term::sym(nm, coords.clone());
        comparison.generators.push(Generator {
            name: "pth".into(),
            kind: Kind::Tm,
            context: ctx.clone(),
            ty: Some(Term::sym(
                "~>",
                vec![Arg::plain(a_of("a")), Arg::plain(a_of("a'"))],
            )),
        });
        comparison.validate(FUEL).unwrap();
        // fwd: cylinder -> comparison: h |-> at(a, a', pth, i)
        let mut fwd_images: std::collections::BTreeMap<String, Term> = c
            .generators
            .iter()
            .filter(|g| g.name != "h")
            .map(|g| (g.name.clone(), g.applied()))
            .collect();
        let up: Vec<Arg> = (1..=n).rev().map(|i| Arg::plain(Term::Var(i))).collect();
        let a_up = |nm: &str| Term::sym(nm, up.clone());
        fwd_images.insert(
            "h".into(),
            Term::sym(
                "at",
                vec![
                    Arg::plain(a_up("a")),
                    Arg::plain(a_up("a'")),
                    Arg::plain(a_up("pth")),
                    Arg::plain(Term::var(0)),
                ],
            ),
        );
        let fwd = ModelMorphism {
            name: "cyl->cmp".into(),
            source: c.clone(),
            target: comparison.clone(),
            images: fwd_images,
        };
        // bwd: comparison -> cylinder: a |-> h[left], a' |-> h[right],
        // pth |-> path(A, \i. h(i))
        let mut bwd_images: std::collections::BTreeMap<String, Term> = comparison
            .generators
            .iter()
            .filter(|g| !["a", "a'", "pth"].contains(&g.name.as_str()))
            .map(|g| (g.name.clone(), g.applied()))
            .collect();
        let h_at = |e: Term, d: usize| {
            let mut args: Vec<Arg> = (0..n).rev().map(|i| Arg::plain(Term::Var(i + d))).collect();
            args.push(Arg::plain(e));
            Term::sym("h", args)
        };
        bwd_images.insert("a".into(), h_at(g0("left"), 0));
        bwd_images.insert("a'".into(), h_at(g0("right"), 0));
        let a_app_gen = Term::sym(
            "A",
            (0..n).rev().map(|i| Arg::plain(Term::Var(i))).collect(),
        );
        bwd_images.insert(
            "pth".into(),
            Term::sym(
                "path",
                vec![Arg::plain(a_app_gen), Arg::new(1, h_at(Term::var(0), 1))],
            ),
        );
        let bwd = ModelMorphism {
            name: "cmp->cyl".into(),
            source: comparison,
            target: c,
            images: bwd_images,
        };
        fwd.validate(FUEL).unwrap();
        bwd.validate(FUEL).unwrap();
        assert!(
            presentations_isomorphic(&fwd, &bwd, FUEL).unwrap(),
            "cylinder is not a pushout of the term inclusion at n={}",
            n
        );
    }
}

#[test]
fn ty_cylinder_collapse_sections() {
    let base = builtin("Eq+coe2+beta1+wUA").unwrap();
    for n in 0..=1 {
        let CylinderData { cylinder: c, i0, i1, s } =
            cylinder(CylinderKind::Ty, n, &base).unwrap();
        c.validate(FUEL).unwrap_or_else(|e| panic!("cylinder: {}", e));
        for end in [&i0, &i1] {
            let comp = compose(end, &s).unwrap();
            let lang = i0.source.lang();
            for g in &i0.source.generators {
                assert_yes(
                    &lang,
                    comp.images.get(&g.name).unwrap(),
                    &g.applied(),
                    &format!("ty cylinder s . {} on {}", end.name, g.name),
                );
            }
        }
        // wall variant
        let wall = cylinder(CylinderKind::TyWall, n, &base).unwrap();
        wall.cylinder.validate(FUEL).unwrap();
        wall.i0.validate(FUEL).unwrap();
        wall.i1.validate(FUEL).unwrap();
    }
}

#[test]
fn sigma_compression_composites_are_identities_up_to_four() {
    let base = builtin("Sigma").unwrap();
    // a dependent telescope: X type, Y over X, Z over (X, Y), W over all
    let p = present(
        "sig",
        base,
        vec![
            Generator {
                name: "X".into(),
                kind: Kind::Ty,
                context: vec![],
                ty: None,
            },
            Generator {
                name: "Y".into(),
                kind: Kind::Ty,
                context: vec![g0("X")],
                ty: None,
            },
            Generator {
                name: "Z".into(),
                kind: Kind::Ty,
                context: vec![g0("X"), Term::sym("Y", vec![Arg::plain(Term::var(0))])],
                ty: None,
            },
            Generator {
                name: "W".into(),
                kind: Kind::Ty,
                context: vec![
                    g0("X"),
                    Term::sym("Y", vec![Arg::plain(Term::var(0))]),
                    Term::sym(
                        "Z",
                        vec![Arg::plain(Term::var(1)), Arg::plain(Term::var(0))],
                    ),
                ],
                ty: None,
            },
        ],
        vec![],
        FUEL,
    )
    .unwrap();
    let lang = p.lang();
    let checker = Checker::with_fuel(&lang, FUEL);
    let entries = vec![
        g0("X"),
        Term::sym("Y", vec![Arg::plain(Term::var(0))]),
        Term::sym("Z", vec![Arg::plain(Term::var(1)), Arg::plain(Term::var(0))]),
        Term::sym(
            "W",
            vec![
                Arg::plain(Term::var(2)),
                Arg::plain(Term::var(1)),
                Arg::plain(Term::var(0)),
            ],
        ),
    ];
    for n in 1..=4usize {
        let ctx = Telescope::new(entries[..n].to_vec());
        let comp = sigma_compress(&ctx).unwrap();
        checker
            .check_is_type(&Telescope::empty(), &comp.sigma)
            .unwrap_or_else(|e| panic!("sigma({}) ill-typed: {}", n, e));
        checker
            .check(&ctx, &comp.pack, &comp.sigma)
            .unwrap_or_else(|e| panic!("pack({}) ill-typed: {}", n, e));
        // d . c = id_Gamma: each unpack component at the packed value is
        // the matching variable
        for (i, u) in comp.unpack.iter().enumerate() {
            let at_pack = intt_core::kernel::substitute(u, &[comp.pack.clone()], 0);
            assert_yes(
                &lang,
                &at_pack,
                &Term::Var(n - 1 - i),
                &format!("unpack {} of pack, n={}", i, n),
            );
        }
        // c . d = id_Sigma: pack at the unpacked values is the variable
        let packed_of_unpack = intt_core::kernel::substitute(&comp.pack, &comp.unpack, 0);
        assert_yes(
            &lang,
            &packed_of_unpack,
            &Term::Var(0),
            &format!("pack of unpack, n={}", n),
        );
    }
}

#[test]
fn homotopy_witnesses_reflexivity_and_mismatch() {
    let p = pool_presentation();
    let id = ModelMorphism::identity(&p);
    let w = HomotopyWitness::reflexivity(&id).unwrap();
    let report = check_homotopy(&id, &id, &w, FUEL).unwrap();
    assert!(report.ok(), "{:?}", report.entries);
    // a witness with a wrong right face fails
    let mut broken = w.clone();
    broken
        .bodies
        .insert("x0".into(), Term::sym("ln", vec![Arg::plain(g0("left"))]));
    let report = check_homotopy(&id, &id, &broken, FUEL).unwrap();
    assert!(!report.ok());
}

#[test]
fn enumerate_interval_elements() {
    let base = builtin("I").unwrap();
    let p = Presentation::new("bare", base);
    let elems = enumerate_elements(&p, Kind::Tm, &Telescope::empty(), Some(&ti()), 1, FUEL);
    assert_eq!(elems.len(), 2, "{:?}", elems);
    // with sq the set is unchanged: composites normalize to endpoints
    let base = builtin("sq").unwrap();
    let p = Presentation::new("sq", base);
    let elems = enumerate_elements(&p, Kind::Tm, &Telescope::empty(), Some(&ti()), 2, FUEL);
    assert_eq!(elems.len(), 2, "{:?}", elems);
    // a presentation generator appears
    let base = builtin("I").unwrap();
    let p = present(
        "one",
        base,
        vec![
            Generator {
                name: "Ax".into(),
                kind: Kind::Ty,
                context: vec![],
                ty: None,
            },
            Generator {
                name: "ax".into(),
                kind: Kind::Tm,
                context: vec![],
                ty: Some(g0("Ax")),
            },
        ],
        vec![],
        FUEL,
    )
    .unwrap();
    let elems = enumerate_elements(&p, Kind::Tm, &Telescope::empty(), Some(&g0("Ax")), 1, FUEL);
    assert_eq!(elems, vec![g0("ax")]);
}

#[test]
fn generating_cofibrations_shape() {
    let base = builtin("I").unwrap();
    let tm0 = generating_cofibration(Kind::Tm, 0, &base);
    assert_eq!(tm0.target.generators.len(), tm0.source.generators.len() + 1);
    tm0.validate(FUEL).unwrap();
    let ty0 = generating_cofibration(Kind::Ty, 0, &base);
    assert!(ty0.source.generators.is_empty());
    ty0.validate(FUEL).unwrap();
    let tm2 = generating_cofibration(Kind::Tm, 2, &base);
    assert_eq!(tm2.target.generators.last().unwrap().level(), 2);
    tm2.validate(FUEL).unwrap();
}

#[test]
fn jty_translation_faces() {
    // pushout theory: a wall type over (I) glued to a closed type
    let base = builtin("coe1+sigma+sq+HPath+Path").unwrap();
    let p = present(
        "jty",
        base,
        vec![
            Generator {
                name: "UA".into(),
                kind: Kind::Ty,
                context: vec![],
                ty: None,
            },
            Generator {
                name: "Hw".into(),
                kind: Kind::Ty,
                context: vec![ti()],
                ty: None,
            },
            Generator {
                name: "elt".into(),
                kind: Kind::Tm,
                context: vec![Term::sym("Hw", vec![Arg::plain(g0("left"))])],
                ty: Some(Term::sym("Hw", vec![Arg::plain(g0("right"))])),
            },
        ],
        vec![Relation {
            name: "glue".into(),
            context: vec![],
            lhs: Term::sym("Hw", vec![Arg::plain(g0("left"))]),
            rhs: g0("UA"),
        }],
        FUEL,
    )
    .unwrap();
    let lang = p.lang();
    // a closed term mentioning the wall
    let t = Term::sym("Hw", vec![Arg::plain(g0("right"))]);
    let h = jty_translation(&t, "Hw", 0);
    // right face recovers the term
    let right = intt_core::kernel::substitute(&h, &[g0("right")], 0);
    assert_yes(&lang, &right, &t, "p1 . h = id");
    // left face factors through the glued part: no wall symbol remains
    let left = intt_core::kernel::substitute(&h, &[g0("left")], 0);
    let nf = intt_core::theory::normalize(&lang, &left, FUEL);
    fn mentions(t: &Term, name: &str) -> bool {
        match t {
            Term::Var(_) => false,
            Term::App(s, args) => {
                s.name() == name || args.iter().any(|a| mentions(&a.term, name))
            }
        }
    }
    assert!(
        !mentions(&nf.term, "Hw"),
        "left face does not factor: {}",
        nf.term
    );
}

#[test]
fn trivial_cofibration_lifts_have_the_stated_faces() {
    let base = builtin("coe1+sigma+sq+HPath+Path").unwrap();
    let kit = CoeKit::for_theory(&base);
    let p = present(
        "lifts",
        base,
        vec![
            Generator {
                name: "Hf".into(),
                kind: Kind::Ty,
                context: vec![ti()],
                ty: None,
            },
            Generator {
                name: "a0".into(),
                kind: Kind::Tm,
                context: vec![],
                ty: Some(Term::sym("Hf", vec![Arg::plain(g0("left"))])),
            },
            Generator {
                name: "Bf".into(),
                kind: Kind::Ty,
                context: vec![ti()],
                ty: None,
            },
            Generator {
                name: "Af".into(),
                kind: Kind::Ty,
                context: vec![Term::sym("Bf", vec![Arg::plain(g0("left"))])],
                ty: None,
            },
            Generator {
                name: "a1".into(),
                kind: Kind::Tm,
                context: vec![
                    ti(),
                    Term::sym("Bf", vec![Arg::plain(Term::var(0))]),
                ],
                ty: Some(Term::sym(
                    "Hf2",
                    vec![Arg::plain(Term::var(1)), Arg::plain(Term::var(0))],
                )),
            },
        ],
        vec![],
        FUEL,
    );
    // the last generator references Hf2 which is not declared; rebuild the
    // presentation in two stages instead
    let base = builtin("coe1+sigma+sq+HPath+Path").unwrap();
    let p = match p {
        Ok(p) => p,
        Err(_) => {
            let mut pp = Presentation::new("lifts", base.clone());
            pp.generators = vec![
                Generator {
                    name: "Hf".into(),
                    kind: Kind::Ty,
                    context: vec![ti()],
                    ty: None,
                },
                Generator {
                    name: "a0".into(),
                    kind: Kind::Tm,
                    context: vec![],
                    ty: Some(Term::sym("Hf", vec![Arg::plain(g0("left"))])),
                },
                Generator {
                    name: "Bf".into(),
                    kind: Kind::Ty,
                    context: vec![ti()],
                    ty: None,
                },
                Generator {
                    name: "Hf2".into(),
                    kind: Kind::Ty,
                    context: vec![ti(), Term::sym("Bf", vec![Arg::plain(Term::var(0))])],
                    ty: None,
                },
                Generator {
                    name: "af".into(),
                    kind: Kind::Tm,
                    context: vec![Term::sym("Bf", vec![Arg::plain(g0("left"))])],
                    ty: Some(Term::sym(
                        "Hf2",
                        vec![Arg::plain(g0("left")), Arg::plain(Term::var(0))],
                    )),
                },
                Generator {
                    name: "Aty".into(),
                    kind: Kind::Ty,
                    context: vec![Term::sym("Bf", vec![Arg::plain(g0("left"))])],
                    ty: None,
                },
            ];
            pp.validate(FUEL).unwrap();
            pp
        }
    };
    let lang = p.lang();
    let checker = Checker::with_fuel(&lang, FUEL);

    // term case, empty extension: H over (I), section a0
    {
        let family = Term::sym("Hf", vec![Arg::plain(Term::var(0))]);
        let lift_term = lift_trivial_cofibration(
            kit,
            &LiftProblem::Term {
                delta: vec![],
                family: family.clone(),
                section: g0("a0"),
            },
        )
        .unwrap();
        let ictx = Telescope::new(vec![ti()]);
        checker.check(&ictx, &lift_term, &family).unwrap();
        let left = intt_core::kernel::substitute(&lift_term, &[g0("left")], 0);
        assert_yes(&lang, &left, &g0("a0"), "term lift left face");
    }
    // term case, one entry: H2 over (I, B), section af over (B[left])
    {
        let family = Term::sym(
            "Hf2",
            vec![Arg::plain(Term::var(1)), Arg::plain(Term::var(0))],
        );
        let delta = vec![Term::sym("Bf", vec![Arg::plain(Term::var(0))])];
        let section = Term::sym("af", vec![Arg::plain(Term::var(0))]);
        let lift_term = lift_trivial_cofibration(
            kit,
            &LiftProblem::Term {
                delta: delta.clone(),
                family: family.clone(),
                section: section.clone(),
            },
        )
        .unwrap();
        // the lift lands at the transported context entry; it is well
        // typed there, and its left face is the given section
        let ctx = Telescope::new(vec![ti(), Term::sym("Bf", vec![Arg::plain(Term::var(0))])]);
        let j = checker
            .infer(&ctx, &lift_term)
            .unwrap_or_else(|e| panic!("local term lift: {}", e));
        assert!(j.ty.is_some());
        // left face over (B[left]): substitute the interval by left
        let left = intt_core::kernel::substitute(&lift_term, &[g0("left")], 1);
        assert_yes(&lang, &left, &section, "local term lift left face");
        // on a constant family the transport chains collapse and the lift
        // is typed at the family itself
        let const_family = Term::sym(
            "Hf2",
            vec![Arg::plain(Term::var(1)), Arg::plain(Term::var(0))],
        );
        let _ = const_family;
    }
    // type case, one entry
    {
        let delta = vec![Term::sym("Bf", vec![Arg::plain(Term::var(0))])];
        let face = Term::sym("Aty", vec![Arg::plain(Term::var(0))]);
        let lifted_ty = lift_trivial_cofibration(
            kit,
            &LiftProblem::Type {
                delta,
                face: face.clone(),
            },
        )
        .unwrap();
        let ctx = Telescope::new(vec![ti(), Term::sym("Bf", vec![Arg::plain(Term::var(0))])]);
        checker
            .check_is_type(&ctx, &lifted_ty)
            .unwrap_or_else(|e| panic!("type lift: {}", e));
        let left = intt_core::kernel::substitute(&lifted_ty, &[g0("left")], 1);
        assert_yes(&lang, &left, &face, "type lift left face");
    }
}

#[test]
fn weak_equivalence_certificates() {
    let p = pool_presentation();
    let id = ModelMorphism::identity(&p);
    // echo certificates for the identity
    let wall = intt_core::kernel::lift(&g0("X"), 1, 0);
    let homot = Term::sym("ln", vec![Arg::plain(Term::var(0))]);
    let cert = WeakEqCertificate {
        queries: vec![
            WeqQuery::Ty {
                id: "q-ty".into(),
                ty: g0("X"),
                lifted: g0("X"),
                wall,
            },
            WeqQuery::Tm {
                id: "q-tm".into(),
                over: g0("X"),
                tm: Term::sym("ln", vec![Arg::plain(g0("right"))]),
                lifted: Term::sym("ln", vec![Arg::plain(g0("right"))]),
                homotopy: homot,
            },
        ],
    };
    let report = certify_weak_equivalence(&id, &cert, FUEL).unwrap();
    assert!(
        report.entries.iter().filter(|e| !e.2).count() == 1,
        "expected exactly the non-left-matching homotopy face to fail: {:?}",
        report.entries
    );
    // fix the homotopy so both faces match
    let cert_ok = WeakEqCertificate {
        queries: vec![WeqQuery::Tm {
            id: "q-tm".into(),
            over: g0("X"),
            tm: Term::sym("ln", vec![Arg::plain(g0("left"))]),
            lifted: Term::sym("ln", vec![Arg::plain(g0("left"))]),
            homotopy: intt_core::kernel::lift(
                &Term::sym("ln", vec![Arg::plain(g0("left"))]),
                1,
                0,
            ),
        }],
    };
    let report = certify_weak_equivalence(&id, &cert_ok, FUEL).unwrap();
    assert!(report.ok(), "{:?}", report.entries);
    assert!(report.finite_query_note.contains("supplied query set"));
    // a wrong-type lift fails
    let bad = WeakEqCertificate {
        queries: vec![WeqQuery::Tm {
            id: "bad".into(),
            over: g0("X"),
            tm: g0("left"),
            lifted: g0("left"),
            homotopy: intt_core::kernel::lift(&g0("left"), 1, 0),
        }],
    };
    let report = certify_weak_equivalence(&id, &bad, FUEL).unwrap();
    assert!(!report.ok());
}

#[test]
fn graph_equivalence_of_the_sigma_reduction() {
    let base = builtin("T_Sigma").unwrap();
    let p = present(
        "graph",
        base,
        vec![
            Generator {
                name: "Bt".into(),
                kind: Kind::Ty,
                context: vec![],
                ty: None,
            },
            Generator {
                name: "Ct".into(),
                kind: Kind::Ty,
                context: vec![g0("Bt")],
                ty: None,
            },
        ],
        vec![],
        FUEL,
    )
    .unwrap();
    let lang = p.lang();
    let checker = Checker::with_fuel(&lang, FUEL);
    let kit = CoeKit::for_theory(&lang);
    let c_fam = Term::sym("Ct", vec![Arg::plain(Term::var(0))]);
    let ge = graph_equivalence_terms(kit, &g0("Bt"), &c_fam);
    // g : (y : B, w : W) |- C(y)
    let ctx_g = Telescope::new(vec![g0("Bt"), ge.w_ty.clone()]);
    let c_y = Term::sym("Ct", vec![Arg::plain(Term::var(1))]);
    checker
        .check(&ctx_g, &ge.g, &c_y)
        .unwrap_or_else(|e| panic!("g: {}", e));
    // g' : (y : B, c : C y) |- W
    let ctx_gp = Telescope::new(vec![g0("Bt"), c_fam.clone()]);
    checker
        .check(&ctx_gp, &ge.g_prime, &intt_core::kernel::lift(&ge.w_ty, 1, 0))
        .unwrap_or_else(|e| panic!("g': {}", e));
    // g[g'] == c definitionally (over (y, c))
    let g_at_gp = intt_core::kernel::substitute(&ge.g, &[ge.g_prime.clone()], 0);
    assert_yes(&lang, &g_at_gp, &Term::var(0), "g[g'] = c");
}

#[test]
fn ho_category_operations() {
    let p = pool_presentation();
    let lang = p.lang();
    let ho = intt_core::models::Ho::new(&p, FUEL);
    let objs = ho.objects(1);
    assert!(objs.contains(&g0("X")) && objs.contains(&ti()), "{:?}", objs);
    // compose with the identity
    let f = Term::sym("ln", vec![Arg::plain(Term::var(0))]); // I -> X
    assert_eq!(ho.compose(&ho.id(), &f), f);
    assert_yes(&lang, &ho.compose(&f, &ho.id()), &f, "id . f");
    ho.check_hom(&ti(), &g0("X"), &f).unwrap();
    // hom equality via a reflexivity witness
    let refl_f = Term::sym(
        "path",
        vec![
            Arg::plain(intt_core::kernel::lift(&g0("X"), 1, 0)),
            Arg::new(1, intt_core::kernel::lift(&f, 1, 0)),
        ],
    );
    ho.hom_eq(&ti(), &g0("X"), &f, &f, &refl_f).unwrap();
    // the composite witness typechecks
    let w = ho.compose_witness(
        &ti(),
        &g0("X"),
        &g0("X"),
        &f,
        &f,
        &refl_f,
        &Term::var(0),
        &Term::var(0),
        &Term::sym(
            "path",
            vec![
                Arg::plain(intt_core::kernel::lift(&g0("X"), 1, 0)),
                Arg::new(1, Term::var(1)),
            ],
        ),
    );
    let ctx = Telescope::new(vec![ti()]);
    let want = Term::sym(
        "~>",
        vec![
            Arg::plain(ho.compose(&f, &Term::var(0))),
            Arg::plain(ho.compose(&f, &Term::var(0))),
        ],
    );
    Checker::with_fuel(&lang, FUEL)
        .check(&ctx, &w, &want)
        .unwrap_or_else(|e| panic!("composite witness: {}", e));
}
