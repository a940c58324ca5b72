//! Colimits of presented models: the pushout of a span is the disjoint
//! union of generators with identification relations along the legs, and
//! presentation isomorphism is checked by normalization of the round
//! trips on generators.

use super::{compose, fresh_name, ModelError, ModelMorphism, Presentation};
use crate::kernel::Term;
use crate::theory::EqualityVerdict;
use std::collections::{BTreeMap, BTreeSet};

/// A span of presentations: left <- apex -> right.
pub struct Span {
    pub left: ModelMorphism,
    pub right: ModelMorphism,
}

/// The pushout presentation with its two inclusion morphisms.
pub struct PushoutData {
    pub presentation: Presentation,
    pub include_left: ModelMorphism,
    pub include_right: ModelMorphism,
}

/// Pushout of presentations over the common base theory. Generators of
/// both sides are kept (renamed on clashes); the apex identifications
/// become relations equating the two leg images.
pub fn pushout(span: &Span) -> Result<PushoutData, ModelError> {
    let left = &span.left.target;
    let right = &span.right.target;
    let apex = &span.left.source;
    if span.right.source.name != apex.name {
        return Err(ModelError::Other("span legs have different apexes".into()));
    }

    let mut taken: BTreeSet<String> = BTreeSet::new();
    for (key, _) in &left.base.symbols {
        taken.insert(key.0.name());
    }
    let mut out = Presentation::new(&format!("{}+_{}+{}", left.name, apex.name, right.name), left.base.clone());

    let mut left_renames: BTreeMap<String, String> = BTreeMap::new();
    for g in &left.generators {
        let n = fresh_name(&g.name, &mut taken);
        left_renames.insert(g.name.clone(), n.clone());
        out.generators.push(super::Generator {
            name: n,
            kind: g.kind,
            context: g.context.iter().map(|t| rename(t, &left_renames)).collect(),
            ty: g.ty.as_ref().map(|t| rename(t, &left_renames)),
        });
    }
    let mut right_renames: BTreeMap<String, String> = BTreeMap::new();
    for g in &right.generators {
        let n = fresh_name(&g.name, &mut taken);
        right_renames.insert(g.name.clone(), n.clone());
        out.generators.push(super::Generator {
            name: n,
            kind: g.kind,
            context: g.context.iter().map(|t| rename(t, &right_renames)).collect(),
            ty: g.ty.as_ref().map(|t| rename(t, &right_renames)),
        });
    }
    for r in &left.relations {
        out.relations.push(super::Relation {
            name: format!("l_{}", r.name),
            context: r.context.iter().map(|t| rename(t, &left_renames)).collect(),
            lhs: rename(&r.lhs, &left_renames),
            rhs: rename(&r.rhs, &left_renames),
        });
    }
    for r in &right.relations {
        out.relations.push(super::Relation {
            name: format!("r_{}", r.name),
            context: r.context.iter().map(|t| rename(t, &right_renames)).collect(),
            lhs: rename(&r.lhs, &right_renames),
            rhs: rename(&r.rhs, &right_renames),
        });
    }
    // identifications along the apex
    for g in &apex.generators {
        let li = span
            .left
            .images
            .get(&g.name)
            .ok_or_else(|| ModelError::Image(g.name.clone(), "missing in left leg".into()))?;
        let ri = span
            .right
            .images
            .get(&g.name)
            .ok_or_else(|| ModelError::Image(g.name.clone(), "missing in right leg".into()))?;
        let ctx: Vec<Term> = g
            .context
            .iter()
            .map(|t| rename(&span.left.apply(t).unwrap_or_else(|_| t.clone()), &left_renames))
            .collect();
        out.relations.push(super::Relation {
            name: format!("glue_{}", g.name),
            context: ctx,
            lhs: rename(li, &left_renames),
            rhs: rename(ri, &right_renames),
        });
    }

    let include_left = ModelMorphism {
        name: format!("inl_{}", out.name),
        source: left.clone(),
        target: out.clone(),
        images: left
            .generators
            .iter()
            .map(|g| {
                let renamed = left_renames.get(&g.name).unwrap().clone();
                let mut img = g.applied();
                if let Term::App(_, args) = &img {
                    img = Term::sym(&renamed, args.clone());
                }
                (g.name.clone(), img)
            })
            .collect(),
    };
    let include_right = ModelMorphism {
        name: format!("inr_{}", out.name),
        source: right.clone(),
        target: out.clone(),
        images: right
            .generators
            .iter()
            .map(|g| {
                let renamed = right_renames.get(&g.name).unwrap().clone();
                let mut img = g.applied();
                if let Term::App(_, args) = &img {
                    img = Term::sym(&renamed, args.clone());
                }
                (g.name.clone(), img)
            })
            .collect(),
    };
    Ok(PushoutData {
        presentation: out,
        include_left,
        include_right,
    })
}

fn rename(t: &Term, renames: &BTreeMap<String, String>) -> Term {
    match t {
        Term::Var(i) => Term::Var(*i),
        Term::App(s, args) => {
            let name = s.name();
            let new_args = args
                .iter()
                .map(|a| crate::kernel::Arg::new(a.binders, rename(&a.term, renames)))
                .collect();
            match renames.get(&name) {
                Some(n) => Term::sym(n, new_args),
                None => Term::App(*s, new_args),
            }
        }
    }
}

/// Presentation isomorphism up to generator renaming: both round trips of
/// the given mutually inverse morphisms normalize to the identity on
/// every generator.
pub fn presentations_isomorphic(
    fwd: &ModelMorphism,
    bwd: &ModelMorphism,
    fuel: u64,
) -> Result<bool, ModelError> {
    let there_back = compose(fwd, bwd)?;
    let back_there = compose(bwd, fwd)?;
    for (mor, pres) in [(&there_back, &fwd.source), (&back_there, &bwd.source)] {
        let lang = pres.lang();
        for g in &pres.generators {
            let img = mor
                .images
                .get(&g.name)
                .ok_or_else(|| ModelError::Image(g.name.clone(), "missing".into()))?;
            match crate::theory::equal(&lang, img, &g.applied(), fuel) {
                EqualityVerdict::Yes { .. } => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}
