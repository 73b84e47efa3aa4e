//! Full ring classification of the bundled fixtures: per-index Frobenius
//! verdicts, purity, anti-nilpotency certificates, and the numeric
//! invariants.
//!
//! Run with: cargo run --release --example classify_fixtures

use fsing::classify::Classifier;
use fsing::fixtures::parse_fixture;
use fsing::groebner::Budget;

fn main() -> fsing::Result<()> {
    let budget = Budget::default();
    for name in ["zero-ideal", "stanley-reisner-p2", "semigroup", "segre-p2", "fedder-singh"] {
        let input = parse_fixture(name)?;
        let classifier = Classifier::new(&input.ideal, budget)?;
        let rep = classifier.classify()?;
        println!("fixture {}:", name);
        println!(
            "  dim {}  depth {}  f_m {}  CM {}  gCM {}",
            rep.dim,
            rep.depth,
            rep.f_m.map_or("infinity".into(), |v| v.to_string()),
            rep.is_cm,
            rep.is_gcm
        );
        println!("  F-pure: {:?}  F-injective: {:?}  F-full: {:?}", rep.f_pure.status, rep.f_injective.status, rep.f_full.status);
        println!(
            "  strongly F-injective: {:?}  F-anti-nilpotent: {:?}",
            rep.strongly_f_injective.status, rep.f_anti_nilpotent.status
        );
        if let Some(cert) = &rep.anti_nilpotent_certificate {
            println!("  certificate: {}", cert.join("; "));
        }
        for idx in &rep.per_index {
            println!(
                "    i = {}: injective {:?}, full {:?}, nilpotent {:?}",
                idx.i, idx.f_injective.status, idx.f_full.status, idx.f_nilpotent.status
            );
        }
        assert!(rep.coherent());
        println!();
    }
    Ok(())
}
