//! Ring-level classification: per-index Frobenius verdicts through the
//! Cartier operator and the comparison map, Fedder's purity criterion,
//! element tests (regular, surjective, strictly filter regular), and the
//! numeric invariants (depth, dim, finiteness dimension, CM/gCM).
//!
//! Anti-nilpotency is certified, never decided directly: true only with a
//! certificate (the purity route here, or a deformation chain), false when
//! a necessary condition fails, otherwise unknown.

use crate::cartier::{cartier_theta, cartier_untwisted, comparison_delta, FrobeniusData};
use crate::error::{Error, Result};
use crate::ext::depth_via_ab;
use crate::groebner::{Budget, GbEngine};
use crate::ideal::Ideal;
use crate::modules::ModuleMap;
use crate::poly::Polynomial;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    pub fn is_false(self) -> bool {
        self == Verdict::False
    }

    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::True, Verdict::True) => Verdict::True,
            _ => Verdict::Unknown,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictW {
    pub status: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl VerdictW {
    pub fn new(v: Verdict) -> Self {
        VerdictW { status: v, witness: None }
    }

    pub fn with_witness(v: Verdict, w: impl Into<String>) -> Self {
        VerdictW { status: v, witness: Some(w.into()) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IndexReport {
    pub i: usize,
    pub f_injective: VerdictW,
    pub f_full: VerdictW,
    pub f_nilpotent: VerdictW,
    /// HSL stabilization index when it was reached.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hsl_index: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub dim: usize,
    pub depth: usize,
    /// Finiteness dimension; None encodes infinity (zero-dimensional case).
    pub f_m: Option<usize>,
    pub is_cm: bool,
    pub is_gcm: bool,
    pub f_pure: VerdictW,
    pub f_injective: VerdictW,
    pub f_full: VerdictW,
    pub strongly_f_injective: VerdictW,
    pub f_anti_nilpotent: VerdictW,
    /// Rule-chain labels certifying anti-nilpotency, when status is true.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anti_nilpotent_certificate: Option<Vec<String>>,
    pub per_index: Vec<IndexReport>,
    pub betti: Vec<usize>,
}

impl ClassificationReport {
    /// The implication lattice every emitted report must satisfy. Unknown
    /// verdicts (cap aborts) are not contradictions; only a definite
    /// false on the consequent of a verified implication is.
    pub fn coherent(&self) -> bool {
        let anil = self.f_anti_nilpotent.status;
        let fi = self.f_injective.status;
        let ff = self.f_full.status;
        if anil.is_true() && (fi.is_false() || ff.is_false()) {
            return false;
        }
        if self.f_pure.status.is_true() && anil.is_false() {
            return false;
        }
        if self.is_cm && ff.is_false() {
            return false;
        }
        if self.strongly_f_injective.status != fi.and(ff) {
            return false;
        }
        true
    }
}

fn cap_to_none<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_cap() => Ok(None),
        Err(e) => Err(e),
    }
}

pub struct Classifier {
    pub data: FrobeniusData,
    pub budget: Budget,
}

impl Classifier {
    pub fn new(ideal: &Ideal, budget: Budget) -> Result<Self> {
        if ideal.is_unit_ideal(budget)? {
            return Err(Error::UnitIdeal);
        }
        let data = FrobeniusData::new(ideal, budget)?;
        Ok(Classifier { data, budget })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.data.ideal
    }

    pub fn dim(&self) -> Result<usize> {
        self.data.ideal.krull_dim(self.budget)
    }

    pub fn depth(&self) -> Result<usize> {
        depth_via_ab(&self.data.res, &self.data.exts)
    }

    /// Finiteness dimension: least `i` with `H^i` not finitely generated,
    /// decided by infinite length of the dual Ext module. None = infinity.
    pub fn finiteness_dimension(&self) -> Result<Option<usize>> {
        let n = self.data.ring().n();
        let dim = self.dim()?;
        for i in 0..=dim {
            let next = &self.data.exts[n - i];
            if next.pres.finite_length(self.budget)?.is_none() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    fn full_verdict(&self, j: usize) -> Result<VerdictW> {
        let (dmap, _) = comparison_delta(&self.data, j, 1, self.budget)?;
        let ker = dmap.kernel(self.budget)?;
        if ker.is_zero(self.budget)? {
            Ok(VerdictW::new(Verdict::True))
        } else {
            let eng = GbEngine::grevlex(self.data.ring());
            let w = render_vector(&eng, self.data.ring(), &ker.gens[0], dmap.source.num_gens());
            Ok(VerdictW::with_witness(Verdict::False, format!("ker delta_{} contains {}", j, w)))
        }
    }

    fn injective_verdict(&self, j: usize, theta: &crate::cartier::CartierOperator) -> Result<VerdictW> {
        let img = theta.theta_image(self.budget)?;
        for s in 0..self.data.exts[j].pres.num_gens() {
            let eng = GbEngine::grevlex(self.data.ring());
            let gen = eng.mp_from_poly(&Polynomial::one(self.data.ring().n()), s as u32);
            if !img.contains(&gen, self.budget)? {
                return Ok(VerdictW::with_witness(
                    Verdict::False,
                    format!("generator {} of Ext^{} lies outside the Cartier image", s, j),
                ));
            }
        }
        Ok(VerdictW::new(Verdict::True))
    }

    fn nilpotent_verdict(&self, theta: &crate::cartier::CartierOperator) -> Result<(VerdictW, Option<usize>)> {
        let (e, stable) = theta.hsl_iterate(self.budget.hsl_cap, self.budget)?;
        let nil = stable.is_zero(self.budget)?;
        Ok((
            VerdictW::with_witness(
                Verdict::from_bool(nil),
                format!("image chain stabilizes at e = {}", e),
            ),
            Some(e),
        ))
    }

    /// Per-index verdicts at cohomological index `i`; budget-cap aborts in
    /// any sub-computation degrade the affected verdicts to unknown.
    pub fn classify_index(&self, i: usize) -> Result<IndexReport> {
        let n = self.data.ring().n();
        let j = n - i;
        let unknown = || VerdictW::new(Verdict::Unknown);
        // F-full at i: the comparison map on Ext^j is injective
        let f_full = cap_to_none(self.full_verdict(j))?.unwrap_or_else(unknown);
        // F-injective at i: the Cartier operator is surjective;
        // F-nilpotent at i: the HSL image chain stabilizes at zero
        let (f_injective, f_nilpotent, hsl_index) =
            match cap_to_none(cartier_untwisted(&self.data, j, self.budget))? {
                None => (unknown(), unknown(), None),
                Some(theta) => {
                    let fi = cap_to_none(self.injective_verdict(j, &theta))?.unwrap_or_else(unknown);
                    let (fnil, idx) = cap_to_none(self.nilpotent_verdict(&theta))?
                        .unwrap_or_else(|| (unknown(), None));
                    (fi, fnil, idx)
                }
            };
        Ok(IndexReport { i, f_injective, f_full, f_nilpotent, hsl_index })
    }

    /// Full classification report.
    pub fn classify(&self) -> Result<ClassificationReport> {
        let dim = self.dim()?;
        let depth = self.depth()?;
        let f_m = self.finiteness_dimension()?;
        let is_cm = depth == dim;
        let is_gcm = f_m.map_or(true, |f| f == dim);

        // fan out over cohomological indices; results joined in order
        let per_index: Vec<IndexReport> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..=dim).map(|i| scope.spawn(move || self.classify_index(i))).collect();
            handles.into_iter().map(|h| h.join().expect("index task panicked")).collect::<Result<Vec<_>>>()
        })?;

        let fold = |pick: fn(&IndexReport) -> &VerdictW| -> VerdictW {
            let mut acc = Verdict::True;
            let mut witness = None;
            for r in &per_index {
                let v = pick(r);
                if v.status.is_false() && witness.is_none() {
                    witness = Some(format!("i = {}", r.i));
                }
                acc = acc.and(v.status);
            }
            VerdictW { status: acc, witness }
        };
        let f_injective = fold(|r| &r.f_injective);
        let f_full = fold(|r| &r.f_full);
        let strongly_f_injective = VerdictW::new(f_injective.status.and(f_full.status));

        let f_pure = match cap_to_none(self.fedder())? {
            None => VerdictW::new(Verdict::Unknown),
            Some((true, w)) => VerdictW::with_witness(
                Verdict::True,
                self.data.ring().poly_string(&w.expect("witness accompanies a positive Fedder test")),
            ),
            Some((false, _)) => VerdictW::new(Verdict::False),
        };

        let (f_anti_nilpotent, cert) = if f_pure.status.is_true() {
            (
                VerdictW::with_witness(Verdict::True, "certified: F-pure implies F-anti-nilpotent"),
                Some(vec!["R9: F-pure => F-anti-nilpotent".to_string()]),
            )
        } else if f_injective.status.is_false() || f_full.status.is_false() {
            (
                VerdictW::with_witness(Verdict::False, "a necessary condition (F-injective or F-full) fails"),
                None,
            )
        } else {
            (VerdictW::new(Verdict::Unknown), None)
        };

        let report = ClassificationReport {
            dim,
            depth,
            f_m,
            is_cm,
            is_gcm,
            f_pure,
            f_injective,
            f_full,
            strongly_f_injective,
            f_anti_nilpotent,
            anti_nilpotent_certificate: cert,
            per_index,
            betti: self.data.res.betti_numbers(),
        };
        if !report.coherent() {
            return Err(Error::PreconditionViolated(
                "classification report violates the implication lattice".into(),
            ));
        }
        Ok(report)
    }

    /// Fedder's criterion: F-pure iff `(I^[p] : I)` is not contained in
    /// `m^[p]`. Returns the witness element when pure.
    pub fn fedder(&self) -> Result<(bool, Option<Polynomial>)> {
        fedder_test(&self.data.ideal, self.budget)
    }

    /// `x` is regular on `A/I` iff `(I : x) = I`.
    pub fn regular_element(&self, x: &Polynomial) -> Result<bool> {
        regular_element(&self.data.ideal, x, self.budget)
    }

    /// Multiplication by `x` is surjective on every `H^i` iff it is
    /// injective on every Ext dual.
    pub fn surjective_element(&self, x: &Polynomial) -> Result<(bool, Option<String>)> {
        if !self.regular_element(x)? {
            return Err(Error::NotRegular(self.data.ring().poly_string(x)));
        }
        for next in &self.data.exts {
            if next.is_zero() {
                continue;
            }
            let mul = ModuleMap::multiplication(&next.pres, x)?;
            let ker = mul.kernel(self.budget)?;
            if !ker.is_zero(self.budget)? {
                let eng = GbEngine::grevlex(self.data.ring());
                let w = render_vector(&eng, self.data.ring(), &ker.gens[0], next.pres.num_gens());
                return Ok((false, Some(format!("x-torsion in Ext^{}: {}", next.j, w))));
            }
        }
        Ok((true, None))
    }

    /// Strict filter regularity: the x-torsion of every Ext dual has finite
    /// length (equivalently every multiplication cokernel on `H^i` does).
    pub fn strictly_filter_regular(&self, x: &Polynomial) -> Result<bool> {
        if !self.regular_element(x)? {
            return Err(Error::NotRegular(self.data.ring().poly_string(x)));
        }
        for next in &self.data.exts {
            if next.is_zero() {
                continue;
            }
            let mul = ModuleMap::multiplication(&next.pres, x)?;
            let ker = mul.kernel(self.budget)?;
            let pres = ker.presentation(self.budget)?;
            if pres.finite_length(self.budget)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Injectivity of the twisted action `x^{p-1} F` on `H^i`, decided by
    /// surjectivity of the twisted Cartier operator.
    pub fn twisted_injectivity(&self, x: &Polynomial, i: usize) -> Result<bool> {
        if !self.regular_element(x)? {
            return Err(Error::NotRegular(self.data.ring().poly_string(x)));
        }
        let ring = self.data.ring();
        let n = ring.n();
        let j = n - i;
        let r = x.pow(ring.p() as u64 - 1, ring.field(), n)?;
        let theta = cartier_theta(&self.data, j, r, self.budget)?;
        theta.is_surjective(self.budget)
    }
}

pub fn fedder_test(ideal: &Ideal, budget: Budget) -> Result<(bool, Option<Polynomial>)> {
    let ring = ideal.ring();
    let n = ring.n();
    if ideal.is_zero_ideal() {
        return Ok((true, Some(Polynomial::one(n))));
    }
    let bracket = ideal.bracket_power(1)?;
    let colon = bracket.colon(ideal, budget)?;
    let frobenius_max: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::monomial(crate::ring::expo_unit(n, i, ring.p() as u16), 1))
        .collect();
    let mq = Ideal::new(ring.clone(), frobenius_max)?;
    for g in colon.gb(budget)?.iter() {
        if !mq.contains(g, budget)? {
            return Ok((true, Some(g.clone())));
        }
    }
    Ok((false, None))
}

pub fn regular_element(ideal: &Ideal, x: &Polynomial, budget: Budget) -> Result<bool> {
    match x.weighted_degree(ideal.ring())? {
        crate::poly::WDegree::Homogeneous(d) if d > 0 => {}
        _ => return Err(Error::NonHomogeneous(ideal.ring().poly_string(x))),
    }
    let colon = ideal.colon_poly(x, budget)?;
    colon.equals(ideal, budget)
}

fn render_vector(
    eng: &GbEngine<'_>,
    ring: &crate::ring::PolyRing,
    v: &crate::groebner::ModPoly,
    ncomp: usize,
) -> String {
    let cols = eng.mp_to_columns(v, ncomp);
    let parts: Vec<String> = cols.iter().map(|p| ring.poly_string(p)).collect();
    format!("({})", parts.join(", "))
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

    fn ring(p: u64, vars: &[&str]) -> Arc<PolyRing> {
        Arc::new(PolyRing::standard(PrimeField::new(p).unwrap(), vars).unwrap())
    }

    fn var(n: usize, i: usize) -> Polynomial {
        Polynomial::variable(n, i)
    }

    fn sr_ideal(p: u64) -> Ideal {
        let r = ring(p, &["u", "v", "z"]);
        let f = r.field();
        Ideal::new(
            r.clone(),
            vec![
                var(3, 0).mul(&var(3, 1), f).unwrap(),
                var(3, 0).mul(&var(3, 2), f).unwrap(),
                var(3, 1).mul(&var(3, 2), f).unwrap(),
            ],
        )
        .unwrap()
    }

    fn fedder_singh_ideal(p: u64) -> Ideal {
        let r = Arc::new(
            PolyRing::new(
                PrimeField::new(p).unwrap(),
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
    fn fedder_examples() {
        // zero ideal: pure with witness 1
        let r = ring(5, &["x", "y"]);
        let (pure, w) = fedder_test(&Ideal::zero(r.clone()), b()).unwrap();
        assert!(pure);
        assert_eq!(w.unwrap(), Polynomial::one(2));
        // Stanley-Reisner at p = 2: pure, witness uvz
        let i = sr_ideal(2);
        let (pure, w) = fedder_test(&i, b()).unwrap();
        assert!(pure);
        let f = i.ring().field();
        let uvz = var(3, 0).mul(&var(3, 1), f).unwrap().mul(&var(3, 2), f).unwrap();
        assert_eq!(w.unwrap(), uvz);
        // (x^2) in F_p[x]: not pure
        let r1 = ring(3, &["x"]);
        let x2 = var(1, 0).mul(&var(1, 0), r1.field()).unwrap();
        let i2 = Ideal::new(r1, vec![x2]).unwrap();
        let (pure, _) = fedder_test(&i2, b()).unwrap();
        assert!(!pure);
    }

    #[test]
    fn regular_element_examples() {
        let i = sr_ideal(5);
        let f = i.ring().field();
        // u is not regular on A/(uv,uz,vz)
        assert!(!regular_element(&i, &var(3, 0), b()).unwrap());
        // u+v+z is regular
        let s = var(3, 0).add(&var(3, 1), f).add(&var(3, 2), f);
        assert!(regular_element(&i, &s, b()).unwrap());
        // anything nonzero is regular on the zero ideal
        let z = Ideal::zero(i.ring().clone());
        assert!(regular_element(&z, &var(3, 0), b()).unwrap());
        // y is regular on the Fedder-Singh quotient
        let fs = fedder_singh_ideal(5);
        assert!(regular_element(&fs, &var(4, 2), b()).unwrap());
    }

    #[test]
    fn classify_zero_ideal_all_true() {
        let r = ring(5, &["x", "y"]);
        let c = Classifier::new(&Ideal::zero(r), b()).unwrap();
        let rep = c.classify().unwrap();
        assert_eq!(rep.dim, 2);
        assert_eq!(rep.depth, 2);
        assert!(rep.is_cm);
        assert!(rep.f_pure.status.is_true());
        assert!(rep.f_injective.status.is_true());
        assert!(rep.f_full.status.is_true());
        assert!(rep.f_anti_nilpotent.status.is_true());
        assert!(rep.coherent());
        // the top local cohomology of a 2-dimensional ring is never
        // finitely generated, so f_m = dim here
        assert_eq!(rep.f_m, Some(2));
        assert!(rep.is_gcm);
    }

    #[test]
    fn classify_stanley_reisner() {
        for p in [2u64, 3, 5] {
            let c = Classifier::new(&sr_ideal(p), b()).unwrap();
            let rep = c.classify().unwrap();
            assert_eq!(rep.dim, 1, "p={}", p);
            assert_eq!(rep.depth, 1);
            assert!(rep.is_cm);
            assert!(rep.f_pure.status.is_true());
            assert!(rep.f_anti_nilpotent.status.is_true());
            assert!(rep.f_injective.status.is_true());
            assert!(rep.f_full.status.is_true());
            assert!(rep.strongly_f_injective.status.is_true());
            assert_eq!(rep.f_m, Some(1));
            assert!(rep.is_gcm);
            assert!(rep.coherent());
        }
    }

    #[test]
    fn surjective_element_examples() {
        // zero ideal in F_p[x,y]: x is a surjective element
        let r = ring(5, &["x", "y"]);
        let c = Classifier::new(&Ideal::zero(r), b()).unwrap();
        let (ok, _) = c.surjective_element(&var(2, 0)).unwrap();
        assert!(ok);
        // SR quotient: u+v+z is surjective (CM, torsion-free canonical dual)
        let c2 = Classifier::new(&sr_ideal(5), b()).unwrap();
        let f = c2.ideal().ring().field();
        let s = var(3, 0).add(&var(3, 1), f).add(&var(3, 2), f);
        let (ok2, _) = c2.surjective_element(&s).unwrap();
        assert!(ok2);
        // surjective implies strictly filter regular
        assert!(c2.strictly_filter_regular(&s).unwrap());
        // non-regular element errors
        assert!(matches!(c2.surjective_element(&var(3, 0)), Err(Error::NotRegular(_))));
    }

    #[test]
    fn filter_regular_on_nonequidimensional_union() {
        // I = (u) ∩ (v,z) = (uv, uz): plane and line through the origin;
        // x = u + v is regular, and every x-torsion module is finite here
        // (the non-CM defect is concentrated at the vertex)
        let r = ring(3, &["u", "v", "z"]);
        let f = r.field();
        let i = Ideal::new(
            r.clone(),
            vec![var(3, 0).mul(&var(3, 1), f).unwrap(), var(3, 0).mul(&var(3, 2), f).unwrap()],
        )
        .unwrap();
        let c = Classifier::new(&i, b()).unwrap();
        let x = var(3, 0).add(&var(3, 1), f);
        assert!(c.regular_element(&x).unwrap());
        assert!(c.strictly_filter_regular(&x).unwrap());
        // but x is not a surjective element: H^1 is not finitely generated
        // and the ring is not CM, so some Ext dual carries x-torsion-free
        // failure elsewhere; here surjectivity actually holds degreewise
        // for this x, so just pin the finiteness dimension instead
        let rep = c.classify().unwrap();
        assert_eq!(rep.dim, 2);
        assert_eq!(rep.depth, 1);
        assert_eq!(rep.f_m, Some(1));
        assert!(!rep.is_gcm);
    }

    #[test]
    fn caps_yield_unknown_not_errors() {
        // precompute the foundational data with a generous budget, then
        // shrink the per-index budget: verdicts degrade to unknown and the
        // report stays coherent
        let i = sr_ideal(2);
        let mut c = Classifier::new(&i, b()).unwrap();
        // warm the caches so construction-time work is done
        let _ = c.classify().unwrap();
        c.budget = Budget { pair_cap: 0, hsl_cap: 30 };
        let rep = c.classify().unwrap();
        assert!(rep.coherent());
        assert_eq!(rep.f_pure.status, Verdict::Unknown);
        // per-index theta work is also capped
        assert!(rep
            .per_index
            .iter()
            .any(|r| r.f_injective.status == Verdict::Unknown || r.f_full.status == Verdict::Unknown));
    }

    #[test]
    fn cusp_is_cm_full_but_not_injective() {
        // k[x,y]/(x^3 - y^2) with weights (2,3) at p = 5: Gorenstein and
        // Cohen-Macaulay (so F-full), but Fedder fails, and for a
        // Gorenstein ring purity and injectivity agree: F-injective false,
        // witnessed at the single index i = dim = 1
        let r = Arc::new(
            PolyRing::new(
                PrimeField::new(5).unwrap(),
                vec!["x".into(), "y".into()],
                vec![2, 3],
            )
            .unwrap(),
        );
        let f = r.field();
        let cusp = var(2, 0)
            .pow(3, f, 2)
            .unwrap()
            .sub(&var(2, 1).pow(2, f, 2).unwrap(), f);
        let i = Ideal::new(r, vec![cusp]).unwrap();
        let c = Classifier::new(&i, b()).unwrap();
        let rep = c.classify().unwrap();
        assert!(rep.is_cm);
        assert!(rep.f_full.status.is_true());
        assert!(rep.f_pure.status.is_false());
        assert!(rep.f_injective.status.is_false());
        // the ring-level verdict equals the single-index test at i = dim
        assert_eq!(rep.per_index[rep.dim].f_injective.status, rep.f_injective.status);
        assert!(rep.f_anti_nilpotent.status.is_false());
        assert!(rep.coherent());
    }

    #[test]
    fn twisted_injectivity_zero_ideal_top() {
        let r = ring(3, &["x", "y"]);
        let c = Classifier::new(&Ideal::zero(r), b()).unwrap();
        assert!(c.twisted_injectivity(&var(2, 0), 2).unwrap());
    }
}
