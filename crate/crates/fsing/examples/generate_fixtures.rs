//! Regenerates the derived fixture ideals by elimination and checks them
//! against the committed `.fring` files, so the provenance of the bundled
//! generators stays auditable.
//!
//!  - the toric ideal of k[s^4, s^3 t, s t^3, t^4]: kernel of the monomial
//!    map, eliminated from F_p[s, t, a, b, c, d]
//!  - the Segre-product ideal: kernel of the bilinear map onto the
//!    (x, y, z) x (s, t) coordinates modulo x^3 + y^3 + z^3, eliminated
//!    from an 11-variable ring
//!
//! Run with: cargo run --release --example generate_fixtures

use fsing::fixtures::parse_fixture;
use fsing::groebner::Budget;
use fsing::ideal::{eliminate, Ideal};
use fsing::poly::Polynomial;
use fsing::ring::PolyRing;
use fsing::PrimeField;

fn project(g: &Polynomial, drop: usize, field: PrimeField) -> Polynomial {
    Polynomial::from_terms(
        field,
        g.terms()
            .iter()
            .map(|(e, c)| (e.iter().skip(drop).copied().collect(), *c))
            .collect(),
    )
}

fn toric_semigroup(p: u64) -> fsing::Result<Vec<Polynomial>> {
    let f = PrimeField::new(p)?;
    let ext = PolyRing::new(
        f,
        vec!["s".into(), "t".into(), "a".into(), "b".into(), "c".into(), "d".into()],
        vec![1, 1, 4, 4, 4, 4],
    )?;
    let n = 6;
    let v = |i: usize| Polynomial::variable(n, i);
    let s = v(0);
    let t = v(1);
    let images = [
        s.pow(4, f, n)?,
        s.pow(3, f, n)?.mul(&t, f)?,
        s.mul(&t.pow(3, f, n)?, f)?,
        t.pow(4, f, n)?,
    ];
    let mut gens = Vec::new();
    for (k, img) in images.iter().enumerate() {
        gens.push(v(2 + k).sub(img, f));
    }
    let elim = eliminate(&ext, &gens, 2, Budget::default())?;
    Ok(elim.iter().map(|g| project(g, 2, f)).collect())
}

fn segre_ideal(p: u64) -> fsing::Result<Vec<Polynomial>> {
    let f = PrimeField::new(p)?;
    let mut vars: Vec<String> = ["x", "y", "z", "s", "t"].iter().map(|s| s.to_string()).collect();
    let mut weights = vec![1u32; 5];
    for name in ["a0", "a1", "b0", "b1", "c0", "c1"] {
        vars.push(name.to_string());
        weights.push(2);
    }
    let ring = PolyRing::new(f, vars, weights)?;
    let n = 11;
    let v = |i: usize| Polynomial::variable(n, i);
    let cubic = v(0).pow(3, f, n)?.add(&v(1).pow(3, f, n)?, f).add(&v(2).pow(3, f, n)?, f);
    // a0 = x s, a1 = x t, b0 = y s, b1 = y t, c0 = z s, c1 = z t
    let pairs = [(0usize, 5usize), (0, 6), (1, 7), (1, 8), (2, 9), (2, 10)];
    let mut gens = vec![cubic];
    for (k, (xi, ui)) in pairs.iter().enumerate() {
        let st = if k % 2 == 0 { v(3) } else { v(4) };
        gens.push(v(*ui).sub(&v(*xi).mul(&st, f)?, f));
    }
    let elim = eliminate(&ring, &gens, 5, Budget::default())?;
    Ok(elim.iter().map(|g| project(g, 5, f)).collect())
}

fn main() -> fsing::Result<()> {
    let budget = Budget::default();

    let toric = toric_semigroup(5)?;
    let committed = parse_fixture("semigroup")?;
    let ring = committed.ring.clone();
    println!("toric ideal of k[s^4, s^3 t, s t^3, t^4] over F_5:");
    for g in &toric {
        println!("  {}", ring.poly_string(g));
    }
    let fresh = Ideal::new(ring.clone(), toric)?;
    println!("matches the committed semigroup.fring: {}", fresh.equals(&committed.ideal, budget)?);

    for (p, name) in [(2u64, "segre-p2"), (7, "segre-p7")] {
        let gens = segre_ideal(p)?;
        let committed = parse_fixture(name)?;
        println!("\nSegre ideal at p = {} ({} generators):", p, gens.len());
        for g in &gens {
            println!("  {}", committed.ring.poly_string(g));
        }
        let fresh = Ideal::new(committed.ring.clone(), gens)?;
        println!("matches the committed {}.fring: {}", name, fresh.equals(&committed.ideal, budget)?);
    }
    Ok(())
}
