//! Groebner bases and ideal arithmetic: reduced bases, normal forms with
//! division records, colon ideals, bracket powers, Hilbert samples and
//! Krull dimension.
//!
//! Run with: cargo run --release --example groebner_and_ideals

use fsing::groebner::{Budget, GbEngine};
use fsing::ideal::Ideal;
use fsing::poly::Polynomial;
use fsing::ring::PolyRing;
use fsing::PrimeField;
use std::sync::Arc;

fn main() -> fsing::Result<()> {
    let budget = Budget::default();
    let field = PrimeField::new(2)?;
    let ring = Arc::new(PolyRing::standard(field, &["u", "v", "z"])?);
    let v = |i: usize| Polynomial::variable(3, i);
    let (u, vv, z) = (v(0), v(1), v(2));

    // the Stanley-Reisner ideal of three coordinate lines
    let ideal = Ideal::new(
        ring.clone(),
        vec![u.mul(&vv, field)?, u.mul(&z, field)?, vv.mul(&z, field)?],
    )?;
    let gb = ideal.gb(budget)?;
    println!("reduced Groebner basis of (uv, uz, vz):");
    for g in gb.iter() {
        println!("  {}", ring.poly_string(g));
    }

    // normal forms and the division record
    let eng = GbEngine::grevlex(&ring);
    let probe = u.mul(&vv, field)?.mul(&z, field)?.add(&u.pow(3, field, 3)?, field);
    let (rem, quotients) = eng.ideal_nf_with_quotients(&probe, &gb)?;
    println!("\nnormal form of uvz + u^3: {}", ring.poly_string(&rem));
    for (q, g) in quotients.iter().zip(gb.iter()) {
        if !q.is_zero() {
            println!("  quotient {} * ({})", ring.poly_string(q), ring.poly_string(g));
        }
    }

    // bracket powers and the Fedder colon
    let bracket = ideal.bracket_power(1)?;
    println!("\nI^[2] = ({})", bracket.gens().iter().map(|g| ring.poly_string(g)).collect::<Vec<_>>().join(", "));
    let colon = bracket.colon(&ideal, budget)?;
    let uvz = u.mul(&vv, field)?.mul(&z, field)?;
    println!("(I^[2] : I) contains uvz: {}", colon.contains(&uvz, budget)?);

    // Hilbert samples and dimension
    println!("\nHilbert function of A/I in degrees 0..4: {:?}", ideal.hilbert_sample(0, 4, budget)?);
    println!("Krull dimension: {}", ideal.krull_dim(budget)?);
    Ok(())
}
