//! Bundled fixtures and their assertion bundles for `fsing reproduce`.
//!
//! Each bundle re-runs the fixture's expected verdicts and cross-checks
//! and reports pass/fail per assertion. Fixture files whose construction
//! is nontrivial (the toric semigroup ideal, the Segre product ideal) were
//! generated once by the elimination script in
//! `examples/generate_fixtures.rs` and committed; the script stays in the
//! repository so the provenance is auditable.

use crate::cartier::cartier_untwisted;
use crate::classify::Classifier;
use crate::cohomology::materialize_h;
use crate::deform::{CertifyOutcome, DeformationContext, TargetProperty};
use crate::error::{Error, Result};
use crate::finlen::{nonperfect_counterexample, Fq, FinLenModule, KMat, LabField};
use crate::groebner::Budget;
use crate::input::{parse_input, RingInput};

pub const FIXTURE_IDS: [&str; 5] =
    ["ex-semigroup", "ex-segre-p2", "ex-segre-p7", "ex-fedder-singh", "ex-nonperfect"];

/// Source text of a bundled `.fring` fixture by file stem.
pub fn fixture_source(name: &str) -> Option<&'static str> {
    Some(match name {
        "fedder-singh" => include_str!("../fixtures/fedder-singh.fring"),
        "semigroup" => include_str!("../fixtures/semigroup.fring"),
        "segre-p2" => include_str!("../fixtures/segre-p2.fring"),
        "segre-p7" => include_str!("../fixtures/segre-p7.fring"),
        "stanley-reisner-p2" => include_str!("../fixtures/stanley-reisner-p2.fring"),
        "stanley-reisner-p3" => include_str!("../fixtures/stanley-reisner-p3.fring"),
        "stanley-reisner-p5" => include_str!("../fixtures/stanley-reisner-p5.fring"),
        "zero-ideal" => include_str!("../fixtures/zero-ideal.fring"),
        _ => return None,
    })
}

pub fn parse_fixture(name: &str) -> Result<RingInput> {
    let src = fixture_source(name).ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    parse_input(src)
}

#[derive(Debug, Clone)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct ReproduceOutcome {
    pub fixture: String,
    pub assertions: Vec<Assertion>,
}

impl ReproduceOutcome {
    pub fn all_passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }
}

struct Recorder {
    assertions: Vec<Assertion>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { assertions: Vec::new() }
    }

    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.assertions.push(Assertion { name: name.to_string(), passed, detail: detail.into() });
    }

    fn skip(&mut self, name: &str, detail: impl Into<String>) {
        self.assertions.push(Assertion { name: name.to_string(), passed: true, detail: detail.into() });
    }
}

/// Runs a fixture's assertion bundle. `slow` gates the p = 7 Segre purity
/// computation (the heaviest run in the suite).
pub fn reproduce(id: &str, slow: bool, budget: Budget) -> Result<ReproduceOutcome> {
    let mut rec = Recorder::new();
    match id {
        "ex-semigroup" => reproduce_semigroup(&mut rec, budget)?,
        "ex-segre-p2" => reproduce_segre_p2(&mut rec, budget)?,
        "ex-segre-p7" => reproduce_segre_p7(&mut rec, slow, budget)?,
        "ex-fedder-singh" => reproduce_fedder_singh(&mut rec, budget)?,
        "ex-nonperfect" => reproduce_nonperfect(&mut rec)?,
        other => return Err(Error::UnknownFixture(other.to_string())),
    }
    Ok(ReproduceOutcome { fixture: id.to_string(), assertions: rec.assertions })
}

fn reproduce_semigroup(rec: &mut Recorder, budget: Budget) -> Result<()> {
    let input = parse_fixture("semigroup")?;
    let classifier = Classifier::new(&input.ideal, budget)?;
    let report = classifier.classify()?;
    rec.check("dim = 2", report.dim == 2, format!("dim = {}", report.dim));
    rec.check("depth = 1", report.depth == 1, format!("depth = {}", report.depth));
    rec.check("f_m = 2", report.f_m == Some(2), format!("f_m = {:?}", report.f_m));
    rec.check("generalized CM", report.is_gcm, format!("gCM = {}", report.is_gcm));
    // H^1 is one-dimensional, concentrated in one positive degree
    let n3 = &classifier.data.exts[3];
    let len = n3.pres.finite_length(budget)?;
    rec.check("dim_k H^1 = 1", len == Some(1), format!("length of the H^1 dual = {:?}", len));
    let degs = n3.pres.finite_support_degrees(budget)?;
    let dd = input.ring.total_weight();
    let h_degs: Vec<i64> = degs.iter().map(|d| -d - dd).collect();
    rec.check(
        "H^1 concentrated in one positive degree",
        h_degs.len() == 1 && h_degs[0] > 0,
        format!("H^1 degrees: {:?}", h_degs),
    );
    // the natural Frobenius kills H^1
    let theta = cartier_untwisted(&classifier.data, 3, budget)?;
    let img = theta.theta_image(budget)?;
    rec.check("Frobenius kills H^1", img.is_zero(budget)?, "Cartier image of the H^1 dual is zero");
    rec.check(
        "not F-full",
        report.f_full.status.is_false(),
        format!("F_full = {:?} (witness {:?})", report.f_full.status, report.f_full.witness),
    );
    rec.check(
        "not F-injective",
        report.f_injective.status.is_false(),
        format!("F_injective = {:?}", report.f_injective.status),
    );
    // the verdicts are witnessed at i = 1
    rec.check(
        "witnessed at i = 1",
        report.per_index[1].f_injective.status.is_false() && report.per_index[1].f_full.status.is_false(),
        "per-index verdicts at i = 1 are false",
    );
    Ok(())
}

fn reproduce_segre_p2(rec: &mut Recorder, budget: Budget) -> Result<()> {
    let input = parse_fixture("segre-p2")?;
    let classifier = Classifier::new(&input.ideal, budget)?;
    let report = classifier.classify()?;
    rec.check("dim = 3", report.dim == 3, format!("dim = {}", report.dim));
    rec.check("depth = 2", report.depth == 2, format!("depth = {}", report.depth));
    // H^2 over [-2, 2]: dimension 1 at degree 0, zero elsewhere
    let theta = cartier_untwisted(&classifier.data, 4, budget)?;
    let w = materialize_h(&classifier.data, &theta, 2, -2, 2, budget)?;
    rec.check(
        "H^2 dims over [-2,2] are [0,0,1,0,0]",
        w.dims == vec![0, 0, 1, 0, 0],
        format!("dims = {:?}", w.dims),
    );
    let f0 = w.frobenius_at(0).expect("window covers 0");
    rec.check(
        "Frobenius matrix on [H^2]_0 is zero",
        f0.is_zero() && f0.cols == 1,
        "the 1x1 Frobenius block at degree 0 vanishes",
    );
    rec.check(
        "not F-full",
        report.f_full.status.is_false(),
        format!("F_full = {:?}", report.f_full.status),
    );
    rec.check(
        "not F-injective",
        report.f_injective.status.is_false(),
        format!("F_injective = {:?}", report.f_injective.status),
    );
    Ok(())
}

fn reproduce_segre_p7(rec: &mut Recorder, slow: bool, budget: Budget) -> Result<()> {
    let input = parse_fixture("segre-p7")?;
    if !slow {
        rec.skip(
            "F-pure at p = 7",
            "skipped: bracket-power colon at p = 7 in six variables; rerun with --slow",
        );
        return Ok(());
    }
    let (pure, witness) = crate::classify::fedder_test(&input.ideal, budget)?;
    rec.check(
        "F-pure at p = 7",
        pure,
        format!(
            "Fedder witness with {} terms",
            witness.map(|w| w.num_terms()).unwrap_or(0)
        ),
    );
    Ok(())
}

fn reproduce_fedder_singh(rec: &mut Recorder, budget: Budget) -> Result<()> {
    let input = parse_fixture("fedder-singh")?;
    let y = input.element("y").expect("fixture declares y").clone();
    rec.check(
        "y is a regular element",
        crate::classify::regular_element(&input.ideal, &y, budget)?,
        "colon (I : y) = I",
    );
    let ctx = DeformationContext::new(&input.ideal, &y, budget)?;
    let q = ctx.quotient_report()?;
    rec.check(
        "R/(y) is F-pure",
        q.f_pure.status.is_true(),
        format!("Fedder witness: {:?}", q.f_pure.witness),
    );
    let base = ctx.base_report()?;
    rec.check(
        "R is not F-pure",
        base.f_pure.status.is_false(),
        "purity does not deform on this fixture",
    );
    let out = ctx.certify(TargetProperty::FAntiNilpotent)?;
    let chain_ok = match &out {
        CertifyOutcome::Certified(cert) => {
            let rules: Vec<&str> = cert.chain.iter().map(|s| s.rule.as_str()).collect();
            rules == ["R9", "R1"]
        }
        CertifyOutcome::Unprovable { .. } => false,
    };
    rec.check("deformation chain [R9; R1] certifies F-anti-nilpotency", chain_ok, format!("{:?}", out));
    rec.check(
        "R is F-full (direct computation)",
        base.f_full.status.is_true(),
        format!("F_full = {:?}", base.f_full.status),
    );
    rec.check(
        "R is F-injective (direct computation)",
        base.f_injective.status.is_true(),
        format!("F_injective = {:?}", base.f_injective.status),
    );
    rec.check(
        "depth R = f_m(R)",
        base.f_m == Some(base.depth),
        format!("depth = {}, f_m = {:?}", base.depth, base.f_m),
    );
    Ok(())
}

fn reproduce_nonperfect(rec: &mut Recorder) -> Result<()> {
    let (m, l) = nonperfect_counterexample(5)?;
    rec.check("F is injective on M over F_p(t)", m.injective(), "kernel of F is zero");
    rec.check("L = span{e1} is F-stable", m.is_fstable(&l), "F(L) and the ring actions stay in L");
    rec.check(
        "induced action on M/L is not injective",
        !m.finite_length_quotient_injective(&l)?,
        "the quotient action vanishes on the class of e2",
    );
    // over perfect fields the quotient lemma holds: check F_4 and F_9
    for (p, e) in [(2u64, 2usize), (3, 2)] {
        let k = Fq::new(p, e)?;
        let elems = k.enumerate_all().expect("finite field");
        // an injective p-linear operator with a nontrivial mixing entry
        let mut mf = KMat::identity(&k, 2);
        mf.set(0, 1, elems[elems.len() - 1].clone());
        let module = FinLenModule::new(k.clone(), 2, Vec::new(), mf)?;
        let mut all_ok = module.injective();
        for n in module.enumerate_fstable(8)? {
            all_ok &= module.finite_length_quotient_injective(&n)?;
        }
        rec.check(
            &format!("quotient lemma over F_{}", p.pow(e as u32)),
            all_ok,
            "every F-stable submodule gives an injective quotient action",
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixture_files_parse_and_round_trip() {
        for name in [
            "fedder-singh",
            "semigroup",
            "segre-p2",
            "segre-p7",
            "stanley-reisner-p2",
            "stanley-reisner-p3",
            "stanley-reisner-p5",
            "zero-ideal",
        ] {
            let input = parse_fixture(name).unwrap_or_else(|e| panic!("{}: {:?}", name, e));
            let printed = crate::input::print_input(&input);
            let again = parse_input(&printed).unwrap();
            assert_eq!(again.ideal.gens(), input.ideal.gens(), "{}", name);
            assert_eq!(again.elements, input.elements, "{}", name);
        }
    }

    #[test]
    fn unknown_fixture_rejected() {
        assert!(matches!(
            reproduce("ex-nope", false, Budget::default()),
            Err(Error::UnknownFixture(_))
        ));
    }

    #[test]
    fn semigroup_bundle_passes() {
        let out = reproduce("ex-semigroup", false, Budget::default()).unwrap();
        assert!(out.all_passed(), "{:?}", out.assertions);
        assert_eq!(out.assertions.len(), 10);
    }

    #[test]
    fn fedder_singh_bundle_passes() {
        let out = reproduce("ex-fedder-singh", false, Budget::default()).unwrap();
        assert!(out.all_passed(), "{:?}", out.assertions);
    }

    #[test]
    fn segre_p2_bundle_passes() {
        let out = reproduce("ex-segre-p2", false, Budget::default()).unwrap();
        assert!(out.all_passed(), "{:?}", out.assertions);
    }

    #[test]
    fn nonperfect_bundle_passes() {
        let out = reproduce("ex-nonperfect", false, Budget::default()).unwrap();
        assert!(out.all_passed(), "{:?}", out.assertions);
    }
}
