//! Minimal graded free resolutions and Ext modules into the ambient ring:
//! Betti numbers, depth by Auslander-Buchsbaum, and the Ext presentations
//! that drive the graded duality with local cohomology.
//!
//! Run with: cargo run --release --example resolutions_and_ext

use fsing::ext::{depth_via_ab, ext_modules};
use fsing::fixtures::parse_fixture;
use fsing::groebner::Budget;
use fsing::resolution::resolve_quotient;

fn main() -> fsing::Result<()> {
    let budget = Budget::default();
    for name in ["stanley-reisner-p2", "semigroup", "segre-p2", "fedder-singh"] {
        let input = parse_fixture(name)?;
        let ring = &input.ring;
        let res = resolve_quotient(&input.ideal, budget)?;
        println!("fixture {}:", name);
        println!("  Betti numbers: {:?}", res.betti_numbers());
        println!("  projective dimension: {}", res.projective_dimension());
        println!("  d o d = 0: {}", res.dd_is_zero()?);
        println!("  minimal: {}", res.is_minimal());
        let exts = ext_modules(&res, budget)?;
        println!("  depth (Auslander-Buchsbaum, cross-checked): {}", depth_via_ab(&res, &exts)?);
        for e in &exts {
            if !e.is_zero() {
                let len = e.pres.finite_length(budget)?;
                println!(
                    "  Ext^{}: {} generators in degrees {:?}, finite length: {:?}",
                    e.j,
                    e.pres.num_gens(),
                    e.pres.gen_degrees(),
                    len
                );
            }
        }
        println!("  dualizing twist D = {}", ring.total_weight());
        println!();
    }
    Ok(())
}
