//! Round-trip tests: printing a theory and parsing it back is the
//! identity, and printed terms re-parse to the same tree.

use intt_core::stdlib::TheoryRegistry;
use intt_core::surface::{parse_term, parse_theory, print_term, print_theory};
use intt_core::theory::generic::generify_metas;
use intt_core::theory::generic::identity_translate;
use intt_core::theory::pat::instantiate;
use intt_core::Theory;

fn theories_equal(a: &Theory, b: &Theory) -> Result<(), String> {
    if a.symbols != b.symbols {
        for (k, v) in &a.symbols {
            if b.symbols.get(k) != Some(v) {
                return Err(format!("symbol {}/{} differs", k.0, k.1));
            }
        }
        for (k, _) in &b.symbols {
            if !a.symbols.contains_key(k) {
                return Err(format!("extra symbol {}/{}", k.0, k.1));
            }
        }
    }
    if a.rules.len() != b.rules.len() {
        return Err(format!("rule count {} vs {}", a.rules.len(), b.rules.len()));
    }
    for (ra, rb) in a.rules.iter().zip(&b.rules) {
        if ra != rb {
            return Err(format!("rule {} differs:\n{:?}\nvs\n{:?}", ra.symbol, ra, rb));
        }
    }
    if a.equations != b.equations {
        for (ea, eb) in a.equations.iter().zip(&b.equations) {
            if ea != eb {
                return Err(format!("equation {} differs:\n{:?}\nvs\n{:?}", ea.name, ea, eb));
            }
        }
        return Err(format!(
            "equation count {} vs {}",
            a.equations.len(),
            b.equations.len()
        ));
    }
    Ok(())
}

#[test]
fn print_then_parse_is_identity_on_every_registry_theory() {
    let reg = TheoryRegistry::standard().unwrap();
    for (name, theory) in reg.iter() {
        let text = print_theory(theory);
        let parsed = parse_theory(&text)
            .unwrap_or_else(|e| panic!("{}: parse failed: {}\n{}", name, e, text));
        theories_equal(theory, &parsed)
            .unwrap_or_else(|e| panic!("{}: {}", name, e));
    }
}

#[test]
fn printed_generic_instances_reparse() {
    // For every equation of every theory, print the schematic left side's
    // generic instance and re-parse it.
    let reg = TheoryRegistry::standard().unwrap();
    for (name, theory) in reg.iter() {
        for eq in &theory.equations {
            let mut scratch = theory.clone();
            let inst = generify_metas(&eq.metas, None, "r", &identity_translate, &mut scratch)
                .unwrap_or_else(|e| panic!("{}/{}: {}", name, eq.name, e));
            let lhs = instantiate(&eq.lhs, &inst.bindings, &inst.tys, 0)
                .unwrap_or_else(|e| panic!("{}/{}: {}", name, eq.name, e));
            let text = print_term(&lhs, &[]);
            let back = parse_term(&text, &[])
                .unwrap_or_else(|e| panic!("{}/{}: reparse failed: {} in `{}`", name, eq.name, e, text));
            assert_eq!(back, lhs, "{}/{}: `{}`", name, eq.name, text);
        }
    }
}

/// Regenerates the shipped theory files when REGEN_STDLIB=1; otherwise
/// asserts every shipped file parses back to its registry theory.
#[test]
fn shipped_theory_files_agree_with_the_registry() {
    let assets = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("assets/stdlib");
    let reg = TheoryRegistry::standard().unwrap();
    if std::env::var("REGEN_STDLIB").as_deref() == Ok("1") {
        std::fs::create_dir_all(&assets).unwrap();
        for (name, theory) in reg.iter() {
            let fname = name
                .replace('+', "_plus_")
                .replace('\'', "_prime")
                .replace('-', "_minus");
            std::fs::write(assets.join(format!("{}.thy", fname)), print_theory(theory)).unwrap();
        }
    }
    let mut count = 0;
    for entry in std::fs::read_dir(&assets).expect("assets/stdlib exists").flatten() {
        let path = entry.path();
        if path.extension().and_then(|e| e.to_str()) != Some("thy") {
            continue;
        }
        count += 1;
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = parse_theory(&text)
            .unwrap_or_else(|e| panic!("{}: {}", path.display(), e));
        let matched = reg.iter().any(|(_, t)| {
            t.symbols == parsed.symbols
                && t.rules == parsed.rules
                && t.equations == parsed.equations
        });
        assert!(matched, "{} does not match any registry theory", path.display());
    }
    assert_eq!(count, intt_core::stdlib::registry_names().len());
}
