//! Finitely presented models: generators and relations over a base
//! theory, the induced language, element enumeration, pushouts, the
//! generating cofibrations and their cylinders, path objects, homotopy
//! witnesses, lifts, sigma compression, homotopy categories, and
//! weak-equivalence certificates.

pub mod cofib;
pub mod colimit;
pub mod enumerate;
pub mod ho;
pub mod homotopy;
pub mod path_object;
pub mod sigma;
pub mod weq;

pub use cofib::{cylinder, generating_cofibration, jty_translation, lift_trivial_cofibration, CylinderKind};
pub use colimit::{pushout, presentations_isomorphic, Span};
pub use enumerate::enumerate_elements;
pub use ho::Ho;
pub use homotopy::{check_homotopy, HomotopyWitness};
pub use path_object::Element;
pub use sigma::sigma_compress;
pub use weq::{certify_weak_equivalence, graph_equivalence_terms, WeakEqCertificate, WeqQuery};

use crate::kernel::{Kind, Telescope, Term};
use crate::theory::generic::generator_rule;
use crate::theory::pat::concrete_to_pat;
use crate::theory::{Checker, RewriteRule, Theory};
use thiserror::Error;

/// A typed generator: its context telescope (entries over the earlier
/// entries), its kind, and for term generators its type over the context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub kind: Kind,
    pub context: Vec<Term>,
    pub ty: Option<Term>,
}

impl Generator {
    pub fn level(&self) -> usize {
        self.context.len()
    }

    /// The generator applied to its identity coordinates.
    pub fn applied(&self) -> Term {
        Term::sym(
            &self.name,
            (0..self.level())
                .rev()
                .map(|i| crate::kernel::Arg::plain(Term::Var(i)))
                .collect(),
        )
    }
}

/// An oriented relation between terms over a context of Lang-syntax.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub context: Vec<Term>,
    pub lhs: Term,
    pub rhs: Term,
}

/// A model presented by generators and relations over a base theory.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub name: String,
    pub base: Theory,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("generator {0}: {1}")]
    Generator(String, String),
    #[error("relation {0}: {1}")]
    Relation(String, String),
    #[error("morphism image for {0}: {1}")]
    Image(String, String),
    #[error("{0}")]
    Other(String),
}

impl Presentation {
    pub fn new(name: &str, base: Theory) -> Presentation {
        Presentation {
            name: name.into(),
            base,
            generators: Vec::new(),
            relations: Vec::new(),
        }
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name == name)
    }

    /// The theory of the presented model: the base theory extended by one
    /// symbol per generator (coordinates made explicit) and one oriented
    /// rewrite per relation.
    pub fn lang(&self) -> Theory {
        let mut t = self.base.clone().renamed(&format!("Lang({})", self.name));
        for g in &self.generators {
            let (decl, rule) = generator_rule(&g.name, g.kind, &g.context, g.ty.as_ref());
            t.declare(&g.name, decl.args, decl.result);
            t.add_rule(rule);
        }
        for r in &self.relations {
            let n = r.context.len();
            let metas = (0..n)
                .map(|j| {
                    crate::theory::pat::MetaDecl::tm(
                        &format!("v{}", j),
                        0,
                        vec![],
                        Some(concrete_to_pat(&r.context[j], j)),
                    )
                })
                .collect();
            t.add_equation(RewriteRule {
                name: r.name.clone(),
                metas,
                eq_premises: vec![],
                lhs: concrete_to_pat(&r.lhs, n),
                rhs: concrete_to_pat(&r.rhs, n),
            });
        }
        t
    }

    /// Scoping and typing validation of generators and relations.
    pub fn validate(&self, fuel: u64) -> Result<(), ModelError> {
        let mut lang = self.base.clone();
        for g in &self.generators {
            let checker = Checker::with_fuel(&lang, fuel);
            let mut ctx = Telescope::empty();
            for entry in &g.context {
                checker
                    .check_is_type(&ctx, entry)
                    .map_err(|e| ModelError::Generator(g.name.clone(), e.to_string()))?;
                ctx.push(entry.clone());
            }
            match (&g.kind, &g.ty) {
                (Kind::Ty, None) => {}
                (Kind::Tm, Some(ty)) => {
                    checker
                        .check_is_type(&ctx, ty)
                        .map_err(|e| ModelError::Generator(g.name.clone(), e.to_string()))?;
                }
                _ => {
                    return Err(ModelError::Generator(
                        g.name.clone(),
                        "term generators need a type, type generators none".into(),
                    ))
                }
            }
            let (decl, rule) = generator_rule(&g.name, g.kind, &g.context, g.ty.as_ref());
            lang.declare(&g.name, decl.args, decl.result);
            lang.add_rule(rule);
        }
        for r in &self.relations {
            let checker = Checker::with_fuel(&lang, fuel);
            let mut ctx = Telescope::empty();
            for entry in &r.context {
                checker
                    .check_is_type(&ctx, entry)
                    .map_err(|e| ModelError::Relation(r.name.clone(), e.to_string()))?;
                ctx.push(entry.clone());
            }
            let jl = checker
                .infer(&ctx, &r.lhs)
                .map_err(|e| ModelError::Relation(r.name.clone(), e.to_string()))?;
            let jr = checker
                .infer(&ctx, &r.rhs)
                .map_err(|e| ModelError::Relation(r.name.clone(), e.to_string()))?;
            if jl.kind != jr.kind {
                return Err(ModelError::Relation(
                    r.name.clone(),
                    "sides have different kinds".into(),
                ));
            }
        }
        Ok(())
    }

    /// Reread the presentation over a larger base theory.
    pub fn free_extension(&self, larger: &Theory) -> Result<Presentation, ModelError> {
        for (key, decl) in &self.base.symbols {
            match larger.symbols.get(key) {
                Some(d) if d == decl => {}
                Some(_) => {
                    return Err(ModelError::Other(format!(
                        "symbol {} changes declaration in the extension",
                        key.0
                    )))
                }
                None => {
                    return Err(ModelError::Other(format!(
                        "extension misses base symbol {}",
                        key.0
                    )))
                }
            }
        }
        for g in &self.generators {
            if larger.has_symbol(&g.name, g.level()) {
                return Err(ModelError::Other(format!(
                    "generator {} clashes with a symbol of the extension",
                    g.name
                )));
            }
        }
        Ok(Presentation {
            name: self.name.clone(),
            base: larger.clone(),
            generators: self.generators.clone(),
            relations: self.relations.clone(),
        })
    }
}

/// Build a presentation from typed data, validating it.
pub fn present(
    name: &str,
    base: Theory,
    generators: Vec<Generator>,
    relations: Vec<Relation>,
    fuel: u64,
) -> Result<Presentation, ModelError> {
    let p = Presentation {
        name: name.into(),
        base,
        generators,
        relations,
    };
    p.validate(fuel)?;
    Ok(p)
}

/// A morphism of presentations: an image for each generator, given as a
/// term over the image of its context.
#[derive(Debug, Clone)]
pub struct ModelMorphism {
    pub name: String,
    pub source: Presentation,
    pub target: Presentation,
    /// generator name -> image term over the translated context
    pub images: std::collections::BTreeMap<String, Term>,
}

impl ModelMorphism {
    pub fn identity(p: &Presentation) -> ModelMorphism {
        let images = p
            .generators
            .iter()
            .map(|g| (g.name.clone(), g.applied()))
            .collect();
        ModelMorphism {
            name: format!("id_{}", p.name),
            source: p.clone(),
            target: p.clone(),
            images,
        }
    }

    /// Translate a Lang(source) term into Lang(target): generator
    /// applications become their images with the coordinates substituted.
    pub fn apply(&self, t: &Term) -> Result<Term, ModelError> {
        match t {
            Term::Var(i) => Ok(Term::Var(*i)),
            Term::App(s, args) => {
                let name = s.name();
                let mut targs = Vec::with_capacity(args.len());
                for a in args {
                    targs.push(crate::kernel::Arg::new(a.binders, self.apply(&a.term)?));
                }
                if let Some(g) = self.source.generator(&name) {
                    if args.len() == g.level() {
                        let image = self
                            .images
                            .get(&name)
                            .ok_or_else(|| ModelError::Image(name.clone(), "missing".into()))?;
                        let coords: Vec<Term> = targs.iter().map(|a| a.term.clone()).collect();
                        return Ok(crate::kernel::substitute(image, &coords, 0));
                    }
                }
                Ok(Term::App(*s, targs))
            }
        }
    }

    /// Typecheck the images and verify the relations are preserved.
    pub fn validate(&self, fuel: u64) -> Result<Vec<(String, crate::theory::EqualityVerdict)>, ModelError> {
        let tgt_lang = self.target.lang();
        let checker = Checker::with_fuel(&tgt_lang, fuel);
        for g in &self.source.generators {
            let image = self
                .images
                .get(&g.name)
                .ok_or_else(|| ModelError::Image(g.name.clone(), "missing".into()))?;
            // translated context
            let mut ctx = Telescope::empty();
            for entry in &g.context {
                ctx.push(self.apply(entry)?);
            }
            match (&g.kind, &g.ty) {
                (Kind::Ty, _) => checker
                    .check_is_type(&ctx, image)
                    .map_err(|e| ModelError::Image(g.name.clone(), e.to_string()))?,
                (Kind::Tm, Some(ty)) => {
                    let want = self.apply(ty)?;
                    checker
                        .check(&ctx, image, &want)
                        .map_err(|e| ModelError::Image(g.name.clone(), e.to_string()))?
                }
                _ => unreachable!(),
            }
        }
        let mut verdicts = Vec::new();
        for r in &self.source.relations {
            let lhs = self.apply(&r.lhs)?;
            let rhs = self.apply(&r.rhs)?;
            let v = crate::theory::equal(&tgt_lang, &lhs, &rhs, fuel);
            verdicts.push((r.name.clone(), v));
        }
        Ok(verdicts)
    }
}

/// Composition of presentation morphisms.
pub fn compose(f: &ModelMorphism, g: &ModelMorphism) -> Result<ModelMorphism, ModelError> {
    let mut images = std::collections::BTreeMap::new();
    for gen in &f.source.generators {
        let mid = f
            .images
            .get(&gen.name)
            .ok_or_else(|| ModelError::Image(gen.name.clone(), "missing".into()))?;
        images.insert(gen.name.clone(), g.apply(mid)?);
    }
    Ok(ModelMorphism {
        name: format!("{};{}", f.name, g.name),
        source: f.source.clone(),
        target: g.target.clone(),
        images,
    })
}

/// Fresh symbol id helper for generated presentations.
pub(crate) fn fresh_name(base: &str, taken: &mut std::collections::BTreeSet<String>) -> String {
    if !taken.contains(base) {
        taken.insert(base.to_string());
        return base.to_string();
    }
    let mut k = 1;
    loop {
        let cand = format!("{}_{}", base, k);
        if !taken.contains(&cand) {
            taken.insert(cand.clone());
            return cand;
        }
        k += 1;
    }
}
