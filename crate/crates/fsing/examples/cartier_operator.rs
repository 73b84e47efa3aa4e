//! The Cartier operator: the p^{-1}-linear trace, the comparison map on
//! Ext induced by the bracket-power quotient, the operator Theta dual to
//! the Frobenius action on local cohomology, its image, and the
//! stabilizing chain of iterated images.
//!
//! Run with: cargo run --release --example cartier_operator

use fsing::cartier::{cartier_untwisted, comparison_delta, trace, FrobeniusData};
use fsing::fixtures::parse_fixture;
use fsing::groebner::Budget;
use fsing::ideal::Ideal;
use fsing::poly::Polynomial;
use fsing::ring::PolyRing;
use fsing::PrimeField;
use std::sync::Arc;

fn main() -> fsing::Result<()> {
    let budget = Budget::default();

    // the trace on F_5[x]: tau(x^4) = 1, tau(x^9) = x, tau(x^3) = 0
    let r1 = Arc::new(PolyRing::standard(PrimeField::new(5)?, &["x"])?);
    let x = Polynomial::variable(1, 0);
    for e in [3u64, 4, 9] {
        let m = x.pow(e, r1.field(), 1)?;
        println!("tau(x^{}) = {}", e, r1.poly_string(&trace(&m, 5)));
    }

    // on a hypersurface A/(f), the comparison map is multiplication by
    // f^{p-1} and Theta(v) = tau(f^{p-1} v)
    let r2 = Arc::new(PolyRing::standard(PrimeField::new(3)?, &["x", "y"])?);
    let f = Polynomial::variable(2, 0).mul(&Polynomial::variable(2, 1), r2.field())?;
    let hyp = Ideal::new(r2.clone(), vec![f.clone()])?;
    let data = FrobeniusData::new(&hyp, budget)?;
    let (_, delta) = comparison_delta(&data, 1, 1, budget)?;
    println!("\ndelta on Ext^1 of A/(xy) at p = 3: multiplication by {}", r2.poly_string(&delta[0][0]));

    // the Frobenius action on H^1 of the semigroup ring is nilpotent: the
    // descending image chain of Theta stabilizes at zero
    let input = parse_fixture("semigroup")?;
    let sdata = FrobeniusData::new(&input.ideal, budget)?;
    let theta = cartier_untwisted(&sdata, 3, budget)?;
    let image = theta.theta_image(budget)?;
    println!("\nsemigroup fixture, dual of H^1:");
    println!("  Theta image is zero: {}", image.is_zero(budget)?);
    let (e, stable) = theta.hsl_iterate(30, budget)?;
    println!("  image chain stabilizes at e = {}, stable image zero: {}", e, stable.is_zero(budget)?);

    // on the F-pure Stanley-Reisner ring, Theta is surjective instead
    let sr = parse_fixture("stanley-reisner-p2")?;
    let srdata = FrobeniusData::new(&sr.ideal, budget)?;
    let sr_theta = cartier_untwisted(&srdata, 2, budget)?;
    println!("\nStanley-Reisner fixture, dual of H^1:");
    println!("  Theta surjective: {}", sr_theta.is_surjective(budget)?);

    // semilinearity spot check: Theta(f^p v) = f Theta(v)
    let field = sr.ring.field();
    let g = Polynomial::variable(3, 0).add(&Polynomial::variable(3, 1), field);
    let v: Vec<Polynomial> = (0..sr_theta.num_gens())
        .map(|i| Polynomial::variable(3, i % 3))
        .collect();
    let gp = g.pow(2, field, 3)?;
    let lhs = sr_theta.theta_of_coeffs(&v.iter().map(|c| c.mul(&gp, field).unwrap()).collect::<Vec<_>>())?;
    let rhs: Vec<Polynomial> = sr_theta
        .theta_of_coeffs(&v)?
        .iter()
        .map(|c| c.mul(&g, field).unwrap())
        .collect();
    let eng = fsing::groebner::GbEngine::grevlex(&sr.ring);
    let l = srdata.exts[2].pres.reduce(&eng.mp_from_columns(&lhs), budget)?;
    let r = srdata.exts[2].pres.reduce(&eng.mp_from_columns(&rhs), budget)?;
    println!("  Theta(g^p v) = g Theta(v): {}", l == r);
    Ok(())
}
