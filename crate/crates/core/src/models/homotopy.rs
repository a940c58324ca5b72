//! Right homotopies of presentation morphisms: per-generator
//! interval-indexed elements whose faces are the two morphisms and which
//! preserve the relations.

use super::{ModelError, ModelMorphism};
use crate::kernel::{lift, substitute, Telescope, Term};
use crate::theory::rewrite::{equal, EqualityVerdict};
use crate::theory::Checker;
use std::collections::BTreeMap;

/// Interval-indexed elements, one per source generator: the body lives
/// over (I, translated generator context).
#[derive(Debug, Clone)]
pub struct HomotopyWitness {
    pub name: String,
    pub bodies: BTreeMap<String, Term>,
}

impl HomotopyWitness {
    /// The reflexivity witness for f ~ f: every generator degenerates.
    pub fn reflexivity(f: &ModelMorphism) -> Result<HomotopyWitness, ModelError> {
        let mut bodies = BTreeMap::new();
        for g in &f.source.generators {
            let img = f
                .images
                .get(&g.name)
                .ok_or_else(|| ModelError::Image(g.name.clone(), "missing".into()))?;
            bodies.insert(g.name.clone(), lift(img, 1, g.level()));
        }
        Ok(HomotopyWitness {
            name: format!("refl_{}", f.name),
            bodies,
        })
    }
}

#[derive(Debug, Clone)]
pub struct HomotopyReport {
    pub entries: Vec<(String, String, bool, String)>, // (generator/relation, check, ok, detail)
}

impl HomotopyReport {
    pub fn ok(&self) -> bool {
        self.entries.iter().all(|e| e.2)
    }
}

/// Translate a Lang(source) term by the witness: each generator
/// application becomes its witness body with the shared interval variable
/// threaded through. `n` is the term's level; the result lives one level
/// up with the interval outermost.
pub fn witness_apply(
    w: &HomotopyWitness,
    f: &ModelMorphism,
    t: &Term,
    n: usize,
) -> Result<Term, ModelError> {
    let lifted = lift(t, 1, n);
    go(w, f, &lifted, n, 0)
}

fn go(
    w: &HomotopyWitness,
    f: &ModelMorphism,
    t: &Term,
    n: usize,
    depth: usize,
) -> Result<Term, ModelError> {
    match t {
        Term::Var(i) => Ok(Term::Var(*i)),
        Term::App(s, args) => {
            let name = s.name();
            let mut targs = Vec::with_capacity(args.len());
            for a in args {
                targs.push(crate::kernel::Arg::new(
                    a.binders,
                    go(w, f, &a.term, n, depth + a.binders)?,
                ));
            }
            if let Some(g) = f.source.generator(&name) {
                if args.len() == g.level() {
                    let body = w
                        .bodies
                        .get(&name)
                        .ok_or_else(|| ModelError::Image(name.clone(), "no witness body".into()))?;
                    // body over (I, ctx): values outermost-first: the shared
                    // interval variable, then the translated coordinates
                    let mut values = vec![Term::Var(n + depth)];
                    values.extend(targs.iter().map(|a| a.term.clone()));
                    return Ok(substitute(body, &values, 0));
                }
            }
            Ok(Term::App(*s, targs))
        }
    }
}

/// Verify a homotopy witness between parallel morphisms: each body
/// typechecks over (I, translated context), its faces are the two images,
/// and every relation is preserved by the witness translation.
pub fn check_homotopy(
    f: &ModelMorphism,
    g: &ModelMorphism,
    w: &HomotopyWitness,
    fuel: u64,
) -> Result<HomotopyReport, ModelError> {
    let mut entries = Vec::new();
    let lang = f.target.lang();
    let checker = Checker::with_fuel(&lang, fuel);
    for gener in &f.source.generators {
        let body = match w.bodies.get(&gener.name) {
            Some(b) => b,
            None => {
                entries.push((
                    gener.name.clone(),
                    "body".into(),
                    false,
                    "missing witness body".into(),
                ));
                continue;
            }
        };
        // context (I, f(ctx))
        let mut ctx = Telescope::new(vec![Term::sym("I", vec![])]);
        for entry in &gener.context {
            ctx.push(f.apply(entry)?);
        }
        let k = gener.level();
        // typing: for type generators a type, for term generators the
        // translated type with the interval threaded by the witness
        let typing = match (&gener.kind, &gener.ty) {
            (crate::kernel::Kind::Ty, _) => {
                checker.check_is_type(&ctx, body).map_err(|e| e.to_string())
            }
            (_, Some(ty)) => {
                let want = witness_apply(w, f, ty, k)?;
                checker.check(&ctx, body, &want).map_err(|e| e.to_string())
            }
            _ => Ok(()),
        };
        match typing {
            Ok(()) => entries.push((gener.name.clone(), "typing".into(), true, String::new())),
            Err(e) => entries.push((gener.name.clone(), "typing".into(), false, e)),
        }
        // faces: the interval entry is outermost, position k
        let left_face = substitute(body, &[Term::sym("left", vec![])], k);
        let right_face = substitute(body, &[Term::sym("right", vec![])], k);
        let f_img = f
            .images
            .get(&gener.name)
            .ok_or_else(|| ModelError::Image(gener.name.clone(), "missing".into()))?;
        let g_img = g
            .images
            .get(&gener.name)
            .ok_or_else(|| ModelError::Image(gener.name.clone(), "missing".into()))?;
        for (tag, face, img) in [("left face", left_face, f_img), ("right face", right_face, g_img)] {
            match equal(&lang, &face, img, fuel) {
                EqualityVerdict::Yes { .. } => {
                    entries.push((gener.name.clone(), tag.into(), true, String::new()))
                }
                v => entries.push((
                    gener.name.clone(),
                    tag.into(),
                    false,
                    format!("{}", v.word()),
                )),
            }
        }
    }
    for rel in &f.source.relations {
        let n = rel.context.len();
        let lhs = witness_apply(w, f, &rel.lhs, n)?;
        let rhs = witness_apply(w, f, &rel.rhs, n)?;
        match equal(&lang, &lhs, &rhs, fuel) {
            EqualityVerdict::Yes { .. } => {
                entries.push((rel.name.clone(), "relation".into(), true, String::new()))
            }
            v => entries.push((rel.name.clone(), "relation".into(), false, v.word().into())),
        }
    }
    Ok(HomotopyReport { entries })
}
