//! The deformation inference engine end to end: purity fails to deform on
//! the classical fixture, yet anti-nilpotency (hence F-fullness and
//! F-injectivity) deforms with a machine-checked certificate. Also shows
//! an unprovable target and the metamorphic cross-check.
//!
//! Run with: cargo run --release --example deformation_certificate

use fsing::deform::{CertifyOutcome, DeformationContext, TargetProperty};
use fsing::fixtures::parse_fixture;
use fsing::groebner::Budget;

fn main() -> fsing::Result<()> {
    let budget = Budget::default();
    let input = parse_fixture("fedder-singh")?;
    let y = input.element("y").expect("fixture declares y").clone();
    let ctx = DeformationContext::new(&input.ideal, &y, budget)?;

    println!("R = A/(UV, UZ, Z(V - Y^2)) over F_5, x = Y");
    let q = ctx.quotient_report()?;
    println!("R/(y) F-pure: {:?} (witness {:?})", q.f_pure.status, q.f_pure.witness);
    let base = ctx.base_report()?;
    println!("R F-pure: {:?}  (purity does not deform)", base.f_pure.status);

    for target in [
        TargetProperty::FAntiNilpotent,
        TargetProperty::FFull,
        TargetProperty::FInjective,
        TargetProperty::StronglyFInjective,
    ] {
        match ctx.certify(target)? {
            CertifyOutcome::Certified(cert) => {
                println!("\ntarget {}: CERTIFIED", cert.target);
                for step in &cert.chain {
                    println!("  [{}] {}", step.rule, step.statement);
                    for p in &step.premises {
                        println!("      {} [{:?}]", p.description, p.status);
                    }
                }
            }
            CertifyOutcome::Unprovable { target, blocked } => {
                println!("\ntarget {}: UNPROVABLE", target);
                for p in &blocked {
                    println!("  blocked: {} [{:?}]", p.description, p.status);
                }
            }
        }
    }

    // every rule whose premises verify has its conclusion verified too
    let violations = ctx.crosscheck()?;
    println!("\nmetamorphic cross-check violations: {}", violations.len());
    assert!(violations.is_empty());

    // a target that cannot be certified: F-fullness of the Segre fixture
    let segre = parse_fixture("segre-p2")?;
    let x = segre.element("x").unwrap().clone();
    let sctx = DeformationContext::new(&segre.ideal, &x, budget)?;
    match sctx.certify(TargetProperty::FFull)? {
        CertifyOutcome::Unprovable { blocked, .. } => {
            println!("\nSegre fixture, target F-full: UNPROVABLE ({} blocking premises)", blocked.len());
        }
        CertifyOutcome::Certified(_) => unreachable!("the Segre fixture is not F-full"),
    }
    Ok(())
}
