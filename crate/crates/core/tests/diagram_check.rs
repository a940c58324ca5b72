//! Every arrow of the theory diagram verifies: typing rules translate to
//! derivable judgments and equations to definitional equalities.

use intt_core::constructions::{check_theory_morphism, diagram};

const FUEL: u64 = 20_000;

#[test]
fn the_diagram_has_at_least_eighteen_arrows() {
    assert!(diagram().len() >= 18, "only {} arrows", diagram().len());
}

#[test]
fn every_diagram_arrow_verifies() {
    let mut failures = Vec::new();
    for mor in diagram() {
        let report = check_theory_morphism(&mor, FUEL);
        for ob in &report.obligations {
            if ob.verdict != intt_core::constructions::Verdict::Yes {
                failures.push(format!(
                    "{} [{}]: {} ({})",
                    ob.id,
                    ob.kind.word(),
                    ob.verdict.word(),
                    ob.detail
                ));
            }
        }
    }
    assert!(failures.is_empty(), "failing obligations:\n{}", failures.join("\n"));
}

#[test]
fn iso_roundtrips_are_identities_on_generators() {
    use intt_core::constructions::check_roundtrip;
    let arrows = diagram();
    let by_name = |n: &str| {
        arrows
            .iter()
            .find(|m| m.name == n)
            .unwrap_or_else(|| panic!("arrow {} missing", n))
    };
    let mut reports = Vec::new();
    // local/primed coe2
    {
        let there = by_name("coe_l2 -> coe_lp2");
        let back = by_name("coe_lp2 -> coe_l2");
        reports.push(check_roundtrip(
            there,
            back,
            &[("coe2l_1", 6), ("coe2l_2", 8)],
            FUEL,
        ));
        reports.push(check_roundtrip(
            back,
            there,
            &[("coe2lp_1", 6), ("coe2lp_2", 8)],
            FUEL,
        ));
    }
    // coe1 family vs dimension-1 fillers
    {
        let there = by_name("coe1+coe_l1 -> Fill1_l");
        let back = by_name("Fill1_l -> coe1+coe_l1");
        reports.push(check_roundtrip(
            there,
            back,
            &[("coe1", 3), ("coe1l_1", 5), ("coe1l_2", 7)],
            FUEL,
        ));
        reports.push(check_roundtrip(
            back,
            there,
            &[("fill1", 3), ("fill1_1", 5), ("fill1_2", 7)],
            FUEL,
        ));
    }
    let mut failures = Vec::new();
    for r in reports {
        for ob in &r.obligations {
            if ob.verdict != intt_core::constructions::Verdict::Yes {
                failures.push(format!("{}: {} ({})", ob.id, ob.verdict.word(), ob.detail));
            }
        }
    }
    assert!(failures.is_empty(), "round trips failed:\n{}", failures.join("\n"));
}
