//! Degreewise local cohomology two ways: the graded-duality materialization
//! (through the Cartier operator on Ext) against the independent Koszul
//! oracle, with exact agreement of dimensions and Frobenius data.
//!
//! Run with: cargo run --release --example local_cohomology_window

use fsing::cartier::{cartier_untwisted, FrobeniusData};
use fsing::cohomology::{compare_windows, materialize_h};
use fsing::fixtures::parse_fixture;
use fsing::groebner::Budget;
use fsing::koszul::koszul_oracle;

fn main() -> fsing::Result<()> {
    let budget = Budget::default();
    let input = parse_fixture("semigroup")?;
    let n = input.ring.n();
    let data = FrobeniusData::new(&input.ideal, budget)?;

    let i = 1;
    let theta = cartier_untwisted(&data, n - i, budget)?;
    let window = materialize_h(&data, &theta, i, -1, 2, budget)?;
    println!("H^{} of the semigroup ring over degrees [-1, 2] (duality route):", i);
    println!("  dims: {:?}", window.dims);
    println!("  socle degrees: {:?}", window.socle_degrees);
    for (k, d) in (window.lo..=window.hi).enumerate() {
        let m = &window.frobenius[k];
        println!("  F: H_{} -> H_{}: {}x{} matrix, zero: {}", d, 5 * d, m.rows, m.cols, m.is_zero());
    }

    let oracle = koszul_oracle(&input.ideal, i, 8, -1, 2, budget)?;
    println!("\nKoszul oracle (stage {}):", oracle.stage);
    println!("  dims: {:?}", oracle.dims);

    let agreement = compare_windows(&window, &oracle.dims, &oracle.frobenius, input.ring.p());
    println!("\nexact agreement: {}", agreement.agrees());
    for row in &agreement.detail {
        println!(
            "  d = {:>2}: dim {}/{}  F-rank {}/{}  F-zero {}/{}",
            row.d,
            row.dim_duality,
            row.dim_koszul,
            row.frobenius_rank_duality,
            row.frobenius_rank_koszul,
            row.frobenius_zero_duality,
            row.frobenius_zero_koszul,
        );
    }
    Ok(())
}
