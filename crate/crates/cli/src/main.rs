//! Batch driver: parsing, checking, normalization, morphism verification
//! and the model calculus, with JSON-lines reports.
//!
//! Exit codes: 0 all obligations hold, 1 any failure, 2 fuel exhausted
//! somewhere, 3 usage or parse errors.

use intt_core::kernel::{Telescope, Term};
use intt_core::report::Report;
use intt_core::stdlib::builtin;
use intt_core::surface;
use intt_core::theory::Checker;
use std::process::ExitCode;

struct Config {
    fuel: u64,
    depth: usize,
    report_path: Option<String>,
    trace: bool,
    inputs: Vec<String>,
}

fn usage() -> &'static str {
    "usage: intt <command> [--fuel N] [--depth N] [--report PATH] [--trace] [inputs...]\n\
     commands:\n\
       check FILE.trm [--theory NAME]   typecheck a term file\n\
       norm FILE.trm [--theory NAME]    print the normal form\n\
       morph FILE.mor                   verify a theory morphism\n\
       diagram                          verify every built-in arrow\n\
       model FILE.mod                   validate a presentation and enumerate\n\
       homotopy FILE.wit                check a homotopy witness bundle\n\
       weq FILE.wit                     check a weak-equivalence certificate\n\
       suite                            run the full acceptance battery\n\
       theories                         list the registered theories"
}

fn parse_args(mut args: Vec<String>) -> Result<(String, Config, Option<String>), String> {
    if args.is_empty() {
        return Err("missing command".into());
    }
    let command = args.remove(0);
    let mut cfg = Config {
        fuel: 10_000,
        depth: 2,
        report_path: None,
        trace: false,
        inputs: Vec::new(),
    };
    let mut theory = None;
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        match a.as_str() {
            "--fuel" => {
                let v = it.next().ok_or("--fuel needs a value")?;
                cfg.fuel = v.parse().map_err(|_| "bad --fuel value")?;
                if cfg.fuel == 0 {
                    return Err("--fuel must be positive".into());
                }
            }
            "--depth" => {
                let v = it.next().ok_or("--depth needs a value")?;
                cfg.depth = v.parse().map_err(|_| "bad --depth value")?;
                if cfg.depth == 0 {
                    return Err("--depth must be positive".into());
                }
            }
            "--report" => {
                cfg.report_path = Some(it.next().ok_or("--report needs a path")?);
            }
            "--theory" => {
                theory = Some(it.next().ok_or("--theory needs a name")?);
            }
            "--trace" => cfg.trace = true,
            other if other.starts_with("--") => {
                return Err(format!("unknown flag {}", other));
            }
            other => cfg.inputs.push(other.to_string()),
        }
    }
    Ok((command, cfg, theory))
}

fn finish(report: Report, cfg: &Config) -> ExitCode {
    let rendered = report.to_jsonl();
    match &cfg.report_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                eprintln!("cannot write report: {}", e);
                return ExitCode::from(3);
            }
        }
        None => print!("{}", rendered),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn read_input(cfg: &Config) -> Result<String, String> {
    let path = cfg
        .inputs
        .first()
        .ok_or_else(|| "missing input file".to_string())?;
    std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path, e))
}

fn load_term_file(
    cfg: &Config,
    theory_flag: Option<String>,
) -> Result<(intt_core::Theory, Telescope, Term, Option<Term>), String> {
    let text = read_input(cfg)?;
    let tf = surface::parse_term_file(&text).map_err(|e| e.to_string())?;
    let theory_name = tf
        .theory
        .clone()
        .or(theory_flag)
        .ok_or("no theory given (header or --theory)")?;
    let theory = builtin(&theory_name).map_err(|e| e.to_string())?;
    let mut ctx = Telescope::empty();
    let mut scope: Vec<String> = Vec::new();
    for (name, ty) in &tf.ctx {
        let t = surface::elaborate_term(&theory, &ctx, &scope, ty, cfg.fuel)
            .map_err(|e| e.to_string())?;
        ctx.push(t);
        scope.push(name.clone());
    }
    let term = surface::elaborate_term(&theory, &ctx, &scope, &tf.term, cfg.fuel)
        .map_err(|e| e.to_string())?;
    let expect = match &tf.expect {
        None => None,
        Some(e) => Some(
            surface::elaborate_term(&theory, &ctx, &scope, e, cfg.fuel)
                .map_err(|e| e.to_string())?,
        ),
    };
    Ok((theory, ctx, term, expect))
}

fn cmd_check(cfg: &Config, theory_flag: Option<String>) -> Result<Report, String> {
    let (theory, ctx, term, expect) = load_term_file(cfg, theory_flag)?;
    let checker = Checker::with_fuel(&theory, cfg.fuel);
    let mut report = Report::default();
    match expect {
        Some(want) => match checker.check(&ctx, &term, &want) {
            Ok(()) => report.push("check", "yes", 0, ""),
            Err(e) => report.push("check", "no", 0, e.to_string()),
        },
        None => match checker.infer(&ctx, &term) {
            Ok(j) => {
                let detail = match j.ty {
                    Some(ty) => surface::print_term(&ty, &[]),
                    None => "type".into(),
                };
                report.push("check", "yes", 0, detail)
            }
            Err(e) => report.push("check", "no", 0, e.to_string()),
        },
    }
    Ok(report)
}

fn cmd_norm(cfg: &Config, theory_flag: Option<String>) -> Result<Report, String> {
    let (theory, _ctx, term, _expect) = load_term_file(cfg, theory_flag)?;
    let out = intt_core::theory::rewrite::normalize_traced(&theory, &term, cfg.fuel, cfg.trace);
    let mut report = Report::default();
    let rendered = surface::print_term(&out.term, &[]);
    println!("{}", rendered);
    if let Some(trace) = &out.trace {
        for rule in trace {
            eprintln!("  ~~> {}", rule);
        }
    }
    let mut record = intt_core::report::Record {
        id: "norm".into(),
        verdict: if out.exhausted { "unknown" } else { "yes" }.into(),
        steps: out.steps,
        detail: rendered,
        trace: out.trace,
    };
    if !cfg.trace {
        record.trace = None;
    }
    report.records.push(record);
    Ok(report)
}

fn cmd_morph(cfg: &Config) -> Result<Report, String> {
    use intt_core::constructions::{check_theory_morphism, TheoryMorphism};
    use intt_core::theory::pat::concrete_to_pat;
    let text = read_input(cfg)?;
    let mf = surface::parse_morphism_file(&text).map_err(|e| e.to_string())?;
    let source = builtin(&mf.source).map_err(|e| e.to_string())?;
    let target = builtin(&mf.target).map_err(|e| e.to_string())?;
    let mut mor = TheoryMorphism::new(&mf.name, source, target);
    for (sym, argnames, image) in &mf.maps {
        // the image is a term over the named arguments; convert it to a
        // schematic pattern over the argument metas
        let scope: Vec<String> = argnames.clone();
        let term = surface::resolve(image, &scope).map_err(|e| e.to_string())?;
        let pat = concrete_to_pat(&term, argnames.len());
        mor.map(sym, argnames.len(), pat);
    }
    for (rule, witness) in &mf.witnesses {
        let term = surface::resolve(witness, &[]).map_err(|e| e.to_string())?;
        mor.witness(rule, concrete_to_pat(&term, 0));
    }
    let out = check_theory_morphism(&mor, cfg.fuel);
    Ok(Report::from(&out))
}

fn cmd_diagram(cfg: &Config) -> Result<Report, String> {
    use intt_core::constructions::{check_theory_morphism, diagram};
    let mut report = Report::default();
    for mor in diagram() {
        let out = check_theory_morphism(&mor, cfg.fuel);
        report.extend_morphism(&out);
    }
    Ok(report)
}

fn load_model(text: &str, fuel: u64) -> Result<intt_core::models::Presentation, String> {
    let mf = surface::parse_model_file(text).map_err(|e| e.to_string())?;
    let base = builtin(&mf.theory).map_err(|e| e.to_string())?;
    let mut gens = Vec::new();
    for g in &mf.gens {
        let mut context = Vec::new();
        let mut scope: Vec<String> = Vec::new();
        for (n, ty) in &g.ctx {
            let t = surface::resolve(ty, &scope_refs(&scope)).map_err(|e| e.to_string())?;
            context.push(t);
            scope.push(n.clone());
        }
        let ty = match &g.ty {
            None => None,
            Some(t) => Some(surface::resolve(t, &scope_refs(&scope)).map_err(|e| e.to_string())?),
        };
        gens.push(intt_core::models::Generator {
            name: g.name.clone(),
            kind: g.kind,
            context,
            ty,
        });
    }
    let mut rels = Vec::new();
    for r in &mf.rels {
        let mut context = Vec::new();
        let mut scope: Vec<String> = Vec::new();
        for (n, ty) in &r.ctx {
            let t = surface::resolve(ty, &scope_refs(&scope)).map_err(|e| e.to_string())?;
            context.push(t);
            scope.push(n.clone());
        }
        rels.push(intt_core::models::Relation {
            name: r.name.clone(),
            context,
            lhs: surface::resolve(&r.lhs, &scope_refs(&scope)).map_err(|e| e.to_string())?,
            rhs: surface::resolve(&r.rhs, &scope_refs(&scope)).map_err(|e| e.to_string())?,
        });
    }
    intt_core::models::present(&mf.name, base, gens, rels, fuel).map_err(|e| e.to_string())
}

fn scope_refs(scope: &[String]) -> Vec<String> {
    scope.to_vec()
}

fn cmd_model(cfg: &Config) -> Result<Report, String> {
    let text = read_input(cfg)?;
    let mut report = Report::default();
    match load_model(&text, cfg.fuel) {
        Ok(p) => {
            report.push(format!("model/{}/validate", p.name), "yes", 0, "");
            let tys = intt_core::models::enumerate_elements(
                &p,
                intt_core::kernel::Kind::Ty,
                &Telescope::empty(),
                None,
                cfg.depth,
                cfg.fuel,
            );
            report.push(
                format!("model/{}/closed-types", p.name),
                "yes",
                0,
                format!("{} at depth {}", tys.len(), cfg.depth),
            );
        }
        Err(e) => report.push("model/validate", "no", 0, e),
    }
    Ok(report)
}

/// Witness bundles name source and target model files next to the bundle.
fn load_bundle(
    cfg: &Config,
) -> Result<
    (
        intt_core::models::Presentation,
        intt_core::models::Presentation,
        surface::WitnessFile,
    ),
    String,
> {
    let path = cfg.inputs.first().ok_or("missing input file")?;
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path, e))?;
    let wf = surface::parse_witness_file(&text).map_err(|e| e.to_string())?;
    let dir = std::path::Path::new(path)
        .parent()
        .unwrap_or_else(|| std::path::Path::new("."));
    let read_model = |name: &str| -> Result<intt_core::models::Presentation, String> {
        let p = dir.join(format!("{}.mod", name));
        let text = std::fs::read_to_string(&p).map_err(|e| format!("{}: {}", p.display(), e))?;
        load_model(&text, cfg.fuel)
    };
    let src = read_model(&wf.source)?;
    let tgt = read_model(&wf.target)?;
    Ok((src, tgt, wf))
}

fn morphism_from_lines(
    name: &str,
    src: &intt_core::models::Presentation,
    tgt: &intt_core::models::Presentation,
    lines: &[(String, Vec<String>, surface::NamedTerm)],
) -> Result<intt_core::models::ModelMorphism, String> {
    let mut images = std::collections::BTreeMap::new();
    for (gen, args, img) in lines {
        let term = surface::resolve(img, args).map_err(|e| e.to_string())?;
        images.insert(gen.clone(), term);
    }
    Ok(intt_core::models::ModelMorphism {
        name: name.into(),
        source: src.clone(),
        target: tgt.clone(),
        images,
    })
}

fn cmd_homotopy(cfg: &Config) -> Result<Report, String> {
    let (src, tgt, wf) = load_bundle(cfg)?;
    let f = morphism_from_lines("f", &src, &tgt, &wf.f)?;
    let g = morphism_from_lines("g", &src, &tgt, &wf.g)?;
    let mut bodies = std::collections::BTreeMap::new();
    for (gen, args, body) in &wf.h {
        let term = surface::resolve(body, args).map_err(|e| e.to_string())?;
        bodies.insert(gen.clone(), term);
    }
    let w = intt_core::models::HomotopyWitness {
        name: wf.name.clone(),
        bodies,
    };
    let out =
        intt_core::models::check_homotopy(&f, &g, &w, cfg.fuel).map_err(|e| e.to_string())?;
    let mut report = Report::default();
    for (gen, check, ok, detail) in out.entries {
        report.push(
            format!("homotopy/{}/{}/{}", wf.name, gen, check),
            if ok { "yes" } else { "no" },
            0,
            detail,
        );
    }
    Ok(report)
}

fn cmd_weq(cfg: &Config) -> Result<Report, String> {
    // the bundle's f-lines give the morphism, g-lines the lifts, h-lines
    // the homotopies; each g/h pair is one term query against f
    let (src, tgt, wf) = load_bundle(cfg)?;
    let f = morphism_from_lines("f", &src, &tgt, &wf.f)?;
    let mut queries = Vec::new();
    for ((gen, gargs, lifted), (hgen, hargs, hterm)) in wf.g.iter().zip(wf.h.iter()) {
        if gen != hgen {
            return Err(format!("lift/homotopy mismatch: {} vs {}", gen, hgen));
        }
        let gsrc = src
            .generator(gen)
            .ok_or_else(|| format!("unknown generator {}", gen))?;
        if gsrc.level() != 0 {
            return Err("weak-equivalence queries are stated for closed generators".into());
        }
        let over = gsrc
            .ty
            .clone()
            .ok_or_else(|| format!("generator {} is not a term", gen))?;
        let lifted = surface::resolve(lifted, gargs).map_err(|e| e.to_string())?;
        let homotopy = surface::resolve(hterm, hargs).map_err(|e| e.to_string())?;
        queries.push(intt_core::models::WeqQuery::Tm {
            id: gen.clone(),
            over: over.clone(),
            tm: f.apply(&gsrc.applied()).map_err(|e| e.to_string())?,
            lifted,
            homotopy,
        });
    }
    let cert = intt_core::models::WeakEqCertificate { queries };
    let out = intt_core::models::certify_weak_equivalence(&f, &cert, cfg.fuel)
        .map_err(|e| e.to_string())?;
    let mut report = Report::default();
    for (id, check, ok, detail) in out.entries {
        report.push(
            format!("weq/{}/{}", id, check),
            if ok { "yes" } else { "no" },
            0,
            detail,
        );
    }
    report.push("weq/note", "yes", 0, out.finite_query_note);
    Ok(report)
}

fn cmd_theories() -> Result<Report, String> {
    let mut report = Report::default();
    for name in intt_core::stdlib::registry_names() {
        let t = builtin(name).map_err(|e| e.to_string())?;
        report.push(
            format!("theory/{}", name),
            "yes",
            0,
            format!(
                "{} symbols, {} rules, {} equations",
                t.symbols.len(),
                t.rules.len(),
                t.equations.len()
            ),
        );
    }
    Ok(report)
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (command, cfg, theory_flag) = match parse_args(args) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("{}\n\n{}", e, usage());
            return ExitCode::from(3);
        }
    };
    let result = match command.as_str() {
        "check" => cmd_check(&cfg, theory_flag),
        "norm" => cmd_norm(&cfg, theory_flag),
        "morph" => cmd_morph(&cfg),
        "diagram" => cmd_diagram(&cfg),
        "model" => cmd_model(&cfg),
        "homotopy" => cmd_homotopy(&cfg),
        "weq" => cmd_weq(&cfg),
        "suite" => {
            let (report, lines) = intt_core::acceptance::run_all(cfg.fuel);
            for line in lines {
                println!("{}", line);
            }
            Ok(report)
        }
        "theories" => cmd_theories(),
        _ => {
            eprintln!("unknown command `{}`\n\n{}", command, usage());
            return ExitCode::from(3);
        }
    };
    match result {
        Ok(report) => finish(report, &cfg),
        Err(e) => {
            eprintln!("{}", e);
            ExitCode::from(3)
        }
    }
}
