//! Deformation rules as a certificate-producing inference engine.
//!
//! Each rule instance carries its premises together with the computational
//! verdicts that verify them; a certificate is a minimal rule chain whose
//! premises all verified. Unknown premises block a chain — they are never
//! assumed. The cross-check harness re-verifies every rule whose premises
//! hold: a violation would be a bug or a counterexample to a theorem, and
//! is flagged loudly either way.

use crate::classify::{Classifier, ClassificationReport, Verdict};
use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use serde::Serialize;
use std::cell::OnceCell;

/// Properties the engine can certify for the base ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetProperty {
    FFull,
    FInjective,
    StronglyFInjective,
    FAntiNilpotent,
}

impl TargetProperty {
    pub fn parse(s: &str) -> Option<TargetProperty> {
        match s.to_ascii_lowercase().as_str() {
            "f-full" | "full" => Some(TargetProperty::FFull),
            "f-injective" | "injective" => Some(TargetProperty::FInjective),
            "strongly-f-injective" | "strongly-injective" => Some(TargetProperty::StronglyFInjective),
            "f-anti-nilpotent" | "anti-nilpotent" => Some(TargetProperty::FAntiNilpotent),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            TargetProperty::FFull => "F-full",
            TargetProperty::FInjective => "F-injective",
            TargetProperty::StronglyFInjective => "strongly F-injective",
            TargetProperty::FAntiNilpotent => "F-anti-nilpotent",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Premise {
    pub description: String,
    pub status: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct RuleStep {
    pub rule: String,
    pub statement: String,
    pub premises: Vec<Premise>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeformationCertificate {
    pub target: String,
    pub element: String,
    pub chain: Vec<RuleStep>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum CertifyOutcome {
    Certified(DeformationCertificate),
    Unprovable { target: String, blocked: Vec<Premise> },
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub rule: String,
    pub detail: String,
}

/// Base ring `A/I`, a regular element `x`, and the quotient `A/(I + (x))`.
pub struct DeformationContext {
    pub base: Classifier,
    pub quotient: Classifier,
    pub x: Polynomial,
    budget: Budget,
    base_report: OnceCell<ClassificationReport>,
    quotient_report: OnceCell<ClassificationReport>,
}

impl DeformationContext {
    pub fn new(ideal: &Ideal, x: &Polynomial, budget: Budget) -> Result<Self> {
        if !crate::classify::regular_element(ideal, x, budget)? {
            return Err(Error::NotRegular(ideal.ring().poly_string(x)));
        }
        let base = Classifier::new(ideal, budget)?;
        let quotient = Classifier::new(&ideal.plus(std::slice::from_ref(x))?, budget)?;
        Ok(DeformationContext {
            base,
            quotient,
            x: x.clone(),
            budget,
            base_report: OnceCell::new(),
            quotient_report: OnceCell::new(),
        })
    }

    pub fn base_report(&self) -> Result<&ClassificationReport> {
        if self.base_report.get().is_none() {
            let r = self.base.classify()?;
            let _ = self.base_report.set(r);
        }
        Ok(self.base_report.get().expect("just set"))
    }

    pub fn quotient_report(&self) -> Result<&ClassificationReport> {
        if self.quotient_report.get().is_none() {
            let r = self.quotient.classify()?;
            let _ = self.quotient_report.set(r);
        }
        Ok(self.quotient_report.get().expect("just set"))
    }

    fn x_str(&self) -> String {
        self.base.ideal().ring().poly_string(&self.x)
    }

    // -- premise evaluators -------------------------------------------------

    fn prem_quotient_pure(&self) -> Result<Premise> {
        let q = self.quotient_report()?;
        let w = q.f_pure.witness.clone().unwrap_or_default();
        Ok(Premise {
            description: format!("R/(x) is F-pure (Fedder witness: {})", w),
            status: q.f_pure.status,
        })
    }

    fn prem_quotient_full(&self) -> Result<Premise> {
        Ok(Premise {
            description: "R/(x) is F-full".into(),
            status: self.quotient_report()?.f_full.status,
        })
    }

    fn prem_quotient_injective(&self) -> Result<Premise> {
        Ok(Premise {
            description: "R/(x) is F-injective".into(),
            status: self.quotient_report()?.f_injective.status,
        })
    }

    fn prem_quotient_gcm(&self) -> Result<Premise> {
        Ok(Premise {
            description: "R/(x) is generalized Cohen-Macaulay".into(),
            status: Verdict::from_bool(self.quotient_report()?.is_gcm),
        })
    }

    fn prem_perfect_residue_field(&self) -> Premise {
        // coefficients are a prime field, which is perfect
        Premise { description: "the residue field is perfect".into(), status: Verdict::True }
    }

    fn prem_strictly_filter_regular(&self) -> Result<Premise> {
        let ok = self.base.strictly_filter_regular(&self.x)?;
        Ok(Premise {
            description: format!("{} is strictly filter regular", self.x_str()),
            status: Verdict::from_bool(ok),
        })
    }

    fn prem_quotient_anti_nilpotent_via_r9(&self) -> Result<(Premise, Option<RuleStep>)> {
        let pure = self.prem_quotient_pure()?;
        if pure.status.is_true() {
            let step = RuleStep {
                rule: "R9".into(),
                statement: "F-pure rings are F-anti-nilpotent".into(),
                premises: vec![pure],
            };
            Ok((
                Premise {
                    description: "R/(x) is F-anti-nilpotent (certified by R9)".into(),
                    status: Verdict::True,
                },
                Some(step),
            ))
        } else {
            let q = self.quotient_report()?;
            Ok((
                Premise {
                    description: "R/(x) is F-anti-nilpotent".into(),
                    status: q.f_anti_nilpotent.status,
                },
                None,
            ))
        }
    }

    // -- certification ------------------------------------------------------

    /// Minimal rule chain proving the target, with premise verdicts
    /// attached; Unprovable when no chain's premises all verify.
    pub fn certify(&self, target: TargetProperty) -> Result<CertifyOutcome> {
        let mut blocked: Vec<Premise> = Vec::new();
        let outcome: Option<Vec<RuleStep>> = match target {
            TargetProperty::FFull => {
                // direct: R2
                let p = self.prem_quotient_full()?;
                if p.status.is_true() {
                    Some(vec![RuleStep {
                        rule: "R2".into(),
                        statement: "If R/(x) is F-full, then so is R".into(),
                        premises: vec![p],
                    }])
                } else {
                    blocked.push(p);
                    // via anti-nilpotency
                    let (anil, r9) = self.prem_quotient_anti_nilpotent_via_r9()?;
                    if anil.status.is_true() {
                        let mut chain = Vec::new();
                        if let Some(step) = r9 {
                            chain.push(step);
                        }
                        chain.push(RuleStep {
                            rule: "R1".into(),
                            statement: "If R/(x) is F-anti-nilpotent, then so is R".into(),
                            premises: vec![anil],
                        });
                        chain.push(RuleStep {
                            rule: "L1".into(),
                            statement: "F-anti-nilpotent implies F-full".into(),
                            premises: vec![Premise {
                                description: "R is F-anti-nilpotent (previous step)".into(),
                                status: Verdict::True,
                            }],
                        });
                        Some(chain)
                    } else {
                        blocked.push(anil);
                        None
                    }
                }
            }
            TargetProperty::FInjective => {
                // R4: R/(x) F-full and F-injective
                let pf = self.prem_quotient_full()?;
                let pi = self.prem_quotient_injective()?;
                if pf.status.is_true() && pi.status.is_true() {
                    Some(vec![RuleStep {
                        rule: "R4".into(),
                        statement: "If R/(x) is F-full and F-injective, then R is F-injective".into(),
                        premises: vec![pf, pi],
                    }])
                } else {
                    // R7: perfect field + strictly filter regular + quotient F-injective
                    let pp = self.prem_perfect_residue_field();
                    let ps = self.prem_strictly_filter_regular()?;
                    if pi.status.is_true() && ps.status.is_true() {
                        Some(vec![RuleStep {
                            rule: "R7".into(),
                            statement:
                                "For perfect residue field and strictly filter regular x, if R/(x) is F-injective then x^{p-1}F is injective on every H^i, in particular R is F-injective"
                                    .into(),
                            premises: vec![pp, ps, pi.clone()],
                        }])
                    } else {
                        // R8: quotient F-injective and generalized CM
                        let pg = self.prem_quotient_gcm()?;
                        if pi.status.is_true() && pg.status.is_true() {
                            Some(vec![RuleStep {
                                rule: "R8".into(),
                                statement:
                                    "If R/(x) is F-injective and generalized Cohen-Macaulay, then R is F-injective"
                                        .into(),
                                premises: vec![pi.clone(), pg],
                            }])
                        } else {
                            blocked.push(pf);
                            blocked.push(pi);
                            blocked.push(ps);
                            blocked.push(pg);
                            None
                        }
                    }
                }
            }
            TargetProperty::StronglyFInjective => {
                let pf = self.prem_quotient_full()?;
                let pi = self.prem_quotient_injective()?;
                if pf.status.is_true() && pi.status.is_true() {
                    Some(vec![RuleStep {
                        rule: "R3".into(),
                        statement: "If R/(x) is strongly F-injective, then R is strongly F-injective".into(),
                        premises: vec![
                            Premise {
                                description: "R/(x) is strongly F-injective (F-injective and F-full)".into(),
                                status: Verdict::True,
                            },
                            pf,
                            pi,
                        ],
                    }])
                } else {
                    let (anil, r9) = self.prem_quotient_anti_nilpotent_via_r9()?;
                    if anil.status.is_true() {
                        let mut chain = Vec::new();
                        if let Some(step) = r9 {
                            chain.push(step);
                        }
                        chain.push(RuleStep {
                            rule: "R1".into(),
                            statement: "If R/(x) is F-anti-nilpotent, then so is R".into(),
                            premises: vec![anil],
                        });
                        chain.push(RuleStep {
                            rule: "L3".into(),
                            statement: "F-anti-nilpotent implies strongly F-injective".into(),
                            premises: vec![Premise {
                                description: "R is F-anti-nilpotent (previous step)".into(),
                                status: Verdict::True,
                            }],
                        });
                        Some(chain)
                    } else {
                        blocked.push(pf);
                        blocked.push(pi);
                        blocked.push(anil);
                        None
                    }
                }
            }
            TargetProperty::FAntiNilpotent => {
                let (anil, r9) = self.prem_quotient_anti_nilpotent_via_r9()?;
                if anil.status.is_true() {
                    let mut chain = Vec::new();
                    if let Some(step) = r9 {
                        chain.push(step);
                    }
                    chain.push(RuleStep {
                        rule: "R1".into(),
                        statement: "If R/(x) is F-anti-nilpotent, then so is R".into(),
                        premises: vec![anil],
                    });
                    Some(chain)
                } else {
                    blocked.push(anil);
                    None
                }
            }
        };
        match outcome {
            Some(chain) => Ok(CertifyOutcome::Certified(DeformationCertificate {
                target: target.label().to_string(),
                element: self.x_str(),
                chain,
            })),
            None => Ok(CertifyOutcome::Unprovable { target: target.label().to_string(), blocked }),
        }
    }

    // -- metamorphic cross-checks -------------------------------------------

    /// For every rule whose premises verify computationally, checks the
    /// conclusion computationally. Unknown verdicts are excluded. A
    /// violation is a bug or a counterexample of publishable interest.
    pub fn crosscheck(&self) -> Result<Vec<Violation>> {
        let mut violations = Vec::new();
        let q = self.quotient_report()?.clone();
        let base = self.base_report()?.clone();
        let mut record = |rule: &str, detail: String| {
            violations.push(Violation { rule: rule.into(), detail });
        };

        let q_anil = q.f_anti_nilpotent.status;
        let q_full = q.f_full.status;
        let q_inj = q.f_injective.status;

        // R1: quotient anti-nilpotent => base anti-nilpotent
        if q_anil.is_true() && base.f_anti_nilpotent.status.is_false() {
            record("R1", "quotient certified F-anti-nilpotent but the base ring fails a necessary condition".into());
        }
        // R2: quotient F-full => base F-full
        if q_full.is_true() && base.f_full.status.is_false() {
            record("R2", "quotient F-full but base not F-full".into());
        }
        // R3: quotient strongly F-injective => base strongly F-injective
        if q_inj.is_true() && q_full.is_true() && base.strongly_f_injective.status.is_false() {
            record("R3", "quotient strongly F-injective but base not".into());
        }
        // R4: quotient F-full and F-injective => base F-injective
        if q_inj.is_true() && q_full.is_true() && base.f_injective.status.is_false() {
            record("R4", "quotient F-full and F-injective but base not F-injective".into());
        }
        // R5: quotient F-full => x surjective element
        if q_full.is_true() {
            let (ok, w) = self.base.surjective_element(&self.x)?;
            if !ok {
                record("R5", format!("quotient F-full but x is not a surjective element: {:?}", w));
            }
        }
        // R6: quotient F-injective => depth R = f_m(R)
        if q_inj.is_true() {
            let depth = base.depth;
            match base.f_m {
                Some(f) if f == depth => {}
                other => record("R6", format!("depth {} but f_m {:?}", depth, other)),
            }
        }
        // R7: perfect + strictly filter regular + quotient F-injective =>
        //     x^{p-1}F injective on every H^i (and base F-injective)
        if q_inj.is_true() && self.base.strictly_filter_regular(&self.x)? {
            for i in 0..=base.dim {
                if !self.base.twisted_injectivity(&self.x, i)? {
                    record("R7", format!("x^(p-1)F not injective on H^{}", i));
                }
            }
            if base.f_injective.status.is_false() {
                record("R7", "base ring not F-injective".into());
            }
        }
        // R8: quotient F-injective and gCM => base F-injective
        if q_inj.is_true() && q.is_gcm && base.f_injective.status.is_false() {
            record("R8", "quotient F-injective and gCM but base not F-injective".into());
        }
        // R9: base F-pure => base anti-nilpotent (necessary conditions)
        if base.f_pure.status.is_true()
            && (base.f_injective.status.is_false() || base.f_full.status.is_false())
        {
            record("R9", "F-pure base ring fails F-injectivity or F-fullness".into());
        }
        // R10: quotient F-injective => x^{p-1}F injective on H^t, t = depth
        if q_inj.is_true() && !self.base.twisted_injectivity(&self.x, base.depth)? {
            record("R10", format!("x^(p-1)F not injective on H^{} (depth index)", base.depth));
        }
        Ok(violations)
    }

    /// Budget in use (handy for callers piping through caps).
    pub fn budget(&self) -> Budget {
        self.budget
    }
}

/// Full classification with the deformation route folded in: when the
/// purity route leaves anti-nilpotency unknown, try to certify it through
/// each declared regular element (the quotient's purity plus the
/// deformation theorem), attaching the rule chain on success.
pub fn classify_with_deformation(
    ideal: &Ideal,
    elements: &[(String, Polynomial)],
    budget: Budget,
) -> Result<ClassificationReport> {
    let classifier = Classifier::new(ideal, budget)?;
    let mut report = classifier.classify()?;
    if report.f_anti_nilpotent.status != Verdict::Unknown {
        return Ok(report);
    }
    for (name, x) in elements {
        let ctx = match DeformationContext::new(ideal, x, budget) {
            Ok(ctx) => ctx,
            Err(Error::NotRegular(_)) => continue,
            Err(e) if e.is_cap() => continue,
            Err(e) => return Err(e),
        };
        match ctx.certify(TargetProperty::FAntiNilpotent) {
            Ok(CertifyOutcome::Certified(cert)) => {
                let chain: Vec<String> = cert
                    .chain
                    .iter()
                    .map(|s| format!("{} (along {}): {}", s.rule, name, s.statement))
                    .collect();
                report.f_anti_nilpotent = crate::classify::VerdictW::with_witness(
                    Verdict::True,
                    format!("certified by deformation along {}", name),
                );
                report.anti_nilpotent_certificate = Some(chain);
                break;
            }
            Ok(CertifyOutcome::Unprovable { .. }) => continue,
            Err(e) if e.is_cap() => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ring::PolyRing;
    use std::sync::Arc;

    fn b() -> Budget {
        Budget::default()
    }

    fn var(n: usize, i: usize) -> Polynomial {
        Polynomial::variable(n, i)
    }

    fn fedder_singh_ideal() -> Ideal {
        let r = Arc::new(
            PolyRing::new(
                PrimeField::new(5).unwrap(),
                vec!["u".into(), "v".into(), "y".into(), "z".into()],
                vec![2, 2, 1, 2],
            )
            .unwrap(),
        );
        let f = r.field();
        let (u, v, y, z) = (var(4, 0), var(4, 1), var(4, 2), var(4, 3));
        let y2 = y.mul(&y, f).unwrap();
        Ideal::new(
            r.clone(),
            vec![
                u.mul(&v, f).unwrap(),
                u.mul(&z, f).unwrap(),
                z.mul(&v.sub(&y2, f), f).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn fedder_singh_anti_nilpotent_chain() {
        let i = fedder_singh_ideal();
        let y = var(4, 2);
        let ctx = DeformationContext::new(&i, &y, b()).unwrap();
        let out = ctx.certify(TargetProperty::FAntiNilpotent).unwrap();
        let CertifyOutcome::Certified(cert) = out else {
            panic!("expected a certificate");
        };
        let rules: Vec<&str> = cert.chain.iter().map(|s| s.rule.as_str()).collect();
        assert_eq!(rules, vec!["R9", "R1"]);
        // and the base ring is genuinely not F-pure (purity does not deform)
        let base = ctx.base_report().unwrap();
        assert!(base.f_pure.status.is_false());
        assert!(base.f_anti_nilpotent.status.is_true() || base.f_anti_nilpotent.status == Verdict::Unknown);
    }

    #[test]
    fn extended_sr_prefers_direct_rule() {
        // (uv, uz, vz) in F_2[u,v,z,w], x = w: the quotient is the F-pure
        // Stanley-Reisner ring; target F-full should use R2 directly
        let r = Arc::new(PolyRing::standard(PrimeField::new(2).unwrap(), &["u", "v", "z", "w"]).unwrap());
        let f = r.field();
        let i = Ideal::new(
            r.clone(),
            vec![
                var(4, 0).mul(&var(4, 1), f).unwrap(),
                var(4, 0).mul(&var(4, 2), f).unwrap(),
                var(4, 1).mul(&var(4, 2), f).unwrap(),
            ],
        )
        .unwrap();
        let w = var(4, 3);
        let ctx = DeformationContext::new(&i, &w, b()).unwrap();
        let out = ctx.certify(TargetProperty::FFull).unwrap();
        let CertifyOutcome::Certified(cert) = out else { panic!("expected certificate") };
        assert_eq!(cert.chain.len(), 1);
        assert_eq!(cert.chain[0].rule, "R2");
        // crosscheck: no violations on this instance
        assert!(ctx.crosscheck().unwrap().is_empty());
    }

    #[test]
    fn zero_ideal_deform_f_full() {
        let r = Arc::new(PolyRing::standard(PrimeField::new(3).unwrap(), &["x", "y"]).unwrap());
        let i = Ideal::zero(r);
        let x = var(2, 0);
        let ctx = DeformationContext::new(&i, &x, b()).unwrap();
        let out = ctx.certify(TargetProperty::FFull).unwrap();
        let CertifyOutcome::Certified(cert) = out else { panic!("expected certificate") };
        assert_eq!(cert.chain[0].rule, "R2");
        assert!(ctx.crosscheck().unwrap().is_empty());
    }

    #[test]
    fn classify_upgrades_anti_nilpotency_through_elements() {
        let i = fedder_singh_ideal();
        let y = var(4, 2);
        // without elements: unknown (not F-pure, necessary conditions hold)
        let plain = Classifier::new(&i, b()).unwrap().classify().unwrap();
        assert_eq!(plain.f_anti_nilpotent.status, Verdict::Unknown);
        // with the declared element: certified true via [R9; R1]
        let upgraded =
            classify_with_deformation(&i, &[("y".to_string(), y)], b()).unwrap();
        assert!(upgraded.f_anti_nilpotent.status.is_true());
        let cert = upgraded.anti_nilpotent_certificate.unwrap();
        assert_eq!(cert.len(), 2);
        assert!(cert[0].starts_with("R9"));
        assert!(cert[1].starts_with("R1"));
    }

    #[test]
    fn non_regular_element_rejected() {
        let r = Arc::new(PolyRing::standard(PrimeField::new(2).unwrap(), &["u", "v", "z"]).unwrap());
        let f = r.field();
        let i = Ideal::new(
            r.clone(),
            vec![
                var(3, 0).mul(&var(3, 1), f).unwrap(),
                var(3, 0).mul(&var(3, 2), f).unwrap(),
                var(3, 1).mul(&var(3, 2), f).unwrap(),
            ],
        )
        .unwrap();
        let err = match DeformationContext::new(&i, &var(3, 0), b()) {
            Err(e) => e,
            Ok(_) => panic!("non-regular element must be rejected"),
        };
        assert!(matches!(err, Error::NotRegular(_)));
    }
}
