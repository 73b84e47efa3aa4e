//! The finite-length Frobenius laboratory: enumeration of F-stable
//! submodules, anti-nilpotency by fullness versus quotient-injectivity,
//! and the failure of the quotient lemma without a perfect field.
//!
//! Run with: cargo run --release --example finite_length_lab

use fsing::finlen::{nonperfect_counterexample, Fq, FinLenModule, KMat, LabField};

fn main() -> fsing::Result<()> {
    // M = k^2 over F_2 with F(a, b) = (a^p, 0): not anti-nilpotent
    let k = Fq::new(2, 1)?;
    let mut mf = KMat::zero(&k, 2, 2);
    mf.set(0, 0, k.one());
    let m = FinLenModule::new(k.clone(), 2, Vec::new(), mf)?;
    let stables = m.enumerate_fstable(8)?;
    println!("F(a,b) = (a^p, 0) on k^2 over F_2:");
    println!("  F-stable submodules: {}", stables.len());
    for n in &stables {
        println!("    dim {}: full = {}", n.dim(), m.is_full(n));
    }
    let (anil, witness) = m.is_anti_nilpotent(8)?;
    println!("  anti-nilpotent: {}", anil);
    if let Some((n, y)) = witness {
        println!(
            "  witness: N of dim {}, y = {:?} with F(y) in N but y outside N",
            n.dim(),
            y
        );
    }
    println!("  nilpotent part dimension: {}", m.nilpotent_part().dim());
    // the two definitions agree
    assert_eq!(anil, m.is_anti_nilpotent_via_quotients(8)?);

    // an anti-nilpotent example: any bijective Frobenius on k
    let one = FinLenModule::new(k.clone(), 1, Vec::new(), KMat::identity(&k, 1))?;
    println!("\nF = Frobenius on k itself: anti-nilpotent = {}", one.is_anti_nilpotent(8)?.0);

    // the non-perfect counterexample: F(f, g) = (f^p + t g^p, 0) over
    // F_p(t) is injective, L = span{e1} is F-stable of finite length, yet
    // the induced action on M/L is not injective
    let (module, l) = nonperfect_counterexample(5)?;
    println!("\nover F_5(t), F(f,g) = (f^5 + t g^5, 0):");
    println!("  F injective on M: {}", module.injective());
    println!("  L = span(e1) F-stable: {}", module.is_fstable(&l));
    println!(
        "  induced action on M/L injective: {}",
        module.finite_length_quotient_injective(&l)?
    );

    // over the perfect field F_4 the quotient lemma holds for every
    // F-stable submodule
    let f4 = Fq::new(2, 2)?;
    let elems = f4.enumerate_all().unwrap();
    let mut mf4 = KMat::identity(&f4, 2);
    mf4.set(0, 1, elems[2].clone());
    let m4 = FinLenModule::new(f4.clone(), 2, Vec::new(), mf4)?;
    println!("\nover the perfect field F_4 (F injective): quotient actions all injective:");
    for n in m4.enumerate_fstable(8)? {
        println!("  L of dim {}: {}", n.dim(), m4.finite_length_quotient_injective(&n)?);
    }
    Ok(())
}
