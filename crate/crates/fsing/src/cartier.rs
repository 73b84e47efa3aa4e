//! The Cartier operator: the p^{-1}-linear operator on an Ext module that
//! is graded-dual to the Frobenius action on the corresponding local
//! cohomology module.
//!
//! Construction: `delta` is the functorial map
//! `Ext^j(A/I, A) -> Ext^j(A/I^[p], A) ≅ F_A(Ext^j(A/I, A))` induced by the
//! quotient `A/I^[p] ->> A/I` (computed by a chain lift over the powered
//! resolution); `epsilon` is the contraction `F_A(N) -> N` applying the
//! monomial trace coefficientwise. The composite `Θ = ε∘δ` satisfies
//! `Θ(f^p v) = f Θ(v)`; a multiplier `r` gives the twisted operator
//! `v -> Θ(r v)`, dual to the twisted Frobenius action `r F`.

use crate::error::{Error, Result};
use crate::ext::{chain_lift, ExtModule, SpanCerts};
use crate::groebner::{Budget, GbEngine, ModPoly};
use crate::ideal::Ideal;
use crate::modules::{ModuleMap, Submodule};
use crate::poly::Polynomial;
use crate::resolution::{frobenius_presentation, frobenius_resolution, resolve_quotient, FreeResolution};
use crate::ring::{expo_zero, Expo, PolyRing};
use std::collections::BTreeMap;
use std::sync::Arc;

/// The p^{-1}-linear monomial trace on `A`: `x^b` maps to
/// `x^{(b - (p-1)·1)/p}` when every exponent is ≡ p-1 mod p, else to 0.
/// Coefficients ride along unchanged since `c^{1/p} = c` over the prime
/// field. The exponent rule uses the all-ones vector regardless of weights;
/// the degree ledger absorbs the weights.
pub fn trace(f: &Polynomial, p: u32) -> Polynomial {
    let field = crate::field::PrimeField::new(p as u64).expect("ring characteristic is prime");
    let mut terms = Vec::new();
    'term: for (b, c) in f.terms() {
        let mut e = Expo::new();
        for &bi in b.iter() {
            if bi as u32 % p != p - 1 {
                continue 'term;
            }
            e.push(((bi as u32 - (p - 1)) / p) as u16);
        }
        terms.push((e, *c));
    }
    Polynomial::from_terms(field, terms)
}

/// Everything the Frobenius side needs about one quotient ring `A/I`.
#[derive(Debug, Clone)]
pub struct FrobeniusData {
    pub ideal: Ideal,
    pub res: FreeResolution,
    pub exts: Vec<ExtModule>,
    /// chain lift of `A/I^[p] ->> A/I` over the once-powered resolution
    pub chain: Vec<Vec<ModPoly>>,
}

impl FrobeniusData {
    pub fn new(ideal: &Ideal, budget: Budget) -> Result<FrobeniusData> {
        let res = resolve_quotient(ideal, budget)?;
        let exts = crate::ext::ext_modules(&res, budget)?;
        let fres = frobenius_resolution(&res, 1)?;
        let eng = GbEngine::grevlex(ideal.ring());
        let id0 = vec![eng.mp_from_poly(&Polynomial::one(ideal.ring().n()), 0)];
        let chain = chain_lift(id0, &fres, &res, budget)?;
        Ok(FrobeniusData { ideal: ideal.clone(), res, exts, chain })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.ideal.ring()
    }
}

/// The comparison map `delta_j : N -> F_A^e(N)` in matched generator sets:
/// returns the target presentation, the coefficient matrix
/// (`delta[i][s]` = coefficient of the s-th powered generator in the image
/// of the i-th generator) and the map object whose kernel decides
/// F-fullness at `i = n - j`.
pub fn comparison_delta(
    data: &FrobeniusData,
    j: usize,
    e: u32,
    budget: Budget,
) -> Result<(ModuleMap, Vec<Vec<Polynomial>>)> {
    let ring = data.ring().clone();
    let eng = GbEngine::new(&ring, crate::order::MonomialOrder::Grevlex, budget);
    let n_ext = &data.exts[j];
    let target_pres = frobenius_presentation(&n_ext.pres, e)?;
    let q = (ring.p() as u64).pow(e);
    if n_ext.is_zero() {
        return Ok((
            ModuleMap::new(n_ext.pres.clone(), target_pres, Vec::new()),
            Vec::new(),
        ));
    }
    // chain lift over the e-powered resolution (reuse the cached one at e=1)
    let chain_storage;
    let chain: &[Vec<ModPoly>] = if e == 1 {
        &data.chain
    } else {
        let fres = frobenius_resolution(&data.res, e)?;
        let id0 = vec![eng.mp_from_poly(&Polynomial::one(ring.n()), 0)];
        chain_storage = chain_lift(id0, &fres, &data.res, budget)?;
        &chain_storage
    };
    // powered cocycles and coboundaries span the Ext of the powered quotient
    let mut span_vectors = Vec::new();
    for k in &n_ext.cocycles {
        span_vectors.push(power_modpoly(k, q)?);
    }
    let r = n_ext.cocycles.len();
    for bdy in &n_ext.coboundaries {
        span_vectors.push(power_modpoly(bdy, q)?);
    }
    let span = SpanCerts::new(&eng, &span_vectors, n_ext.dual_shifts.len())?;
    let mut delta: Vec<Vec<Polynomial>> = Vec::new();
    let mut columns: Vec<ModPoly> = Vec::new();
    for cocycle in &n_ext.cocycles {
        // pull the cocycle back along phi_j
        let pullback = if j < chain.len() {
            let y = eng.mp_to_columns(cocycle, n_ext.dual_shifts.len());
            let mut parts = vec![Polynomial::zero(); n_ext.dual_shifts.len()];
            for (c, col) in chain[j].iter().enumerate() {
                let entries = eng.mp_to_columns(col, n_ext.dual_shifts.len());
                let mut acc = Polynomial::zero();
                for (i, yi) in y.iter().enumerate() {
                    if !yi.is_zero() && !entries[i].is_zero() {
                        acc = acc.add(&yi.mul(&entries[i], ring.field())?, ring.field());
                    }
                }
                parts[c] = acc;
            }
            eng.mp_from_columns(&parts)
        } else {
            ModPoly::zero()
        };
        let coeffs = if pullback.is_zero() {
            vec![Polynomial::zero(); r]
        } else {
            let Some(all) = span.express(&eng, &pullback)? else {
                return Err(Error::LiftFailure);
            };
            all[..r].to_vec()
        };
        columns.push(eng.mp_from_columns(&coeffs));
        delta.push(coeffs);
    }
    Ok((ModuleMap::new(n_ext.pres.clone(), target_pres, columns), delta))
}

fn power_modpoly(m: &ModPoly, q: u64) -> Result<ModPoly> {
    let mut terms = Vec::with_capacity(m.terms.len());
    for (c, e, a) in &m.terms {
        terms.push((*c, crate::ring::expo_scale(e, q)?, *a));
    }
    Ok(ModPoly { terms })
}

/// The Cartier operator `Θ_r` on `N = Ext^j(A/I, A)`.
#[derive(Debug, Clone)]
pub struct CartierOperator {
    pub ring: Arc<PolyRing>,
    pub ext: ExtModule,
    /// `delta[i][s]`: coefficient matrix of the comparison map at e = 1.
    pub delta: Vec<Vec<Polynomial>>,
    /// Twist: the operator computed is `v -> Θ(r·v)`.
    pub multiplier: Polynomial,
}

pub fn cartier_theta(
    data: &FrobeniusData,
    j: usize,
    multiplier: Polynomial,
    budget: Budget,
) -> Result<CartierOperator> {
    if !multiplier.is_homogeneous(data.ring()) {
        return Err(Error::NonHomogeneous(data.ring().poly_string(&multiplier)));
    }
    let (_, delta) = comparison_delta(data, j, 1, budget)?;
    Ok(CartierOperator {
        ring: data.ring().clone(),
        ext: data.exts[j].clone(),
        delta,
        multiplier,
    })
}

impl CartierOperator {
    pub fn num_gens(&self) -> usize {
        self.ext.cocycles.len()
    }

    /// All values `Θ_r(x^c · v)` for `c` in `{0..p-1}^n`, computed in one
    /// pass over the terms of `r · delta(v)`: the term `x^b` contributes to
    /// the unique `c` with `b + c ≡ (p-1)·1 mod p`.
    pub fn theta_table_for(&self, coeffs: &[Polynomial]) -> Result<BTreeMap<Expo, Vec<Polynomial>>> {
        let field = self.ring.field();
        let p = self.ring.p();
        let r = self.num_gens();
        let mut acc: BTreeMap<Expo, Vec<Vec<(Expo, u32)>>> = BTreeMap::new();
        for s in 0..r {
            let mut t = Polynomial::zero();
            for (i, a) in coeffs.iter().enumerate() {
                if !a.is_zero() && !self.delta[i][s].is_zero() {
                    t = t.add(&a.mul(&self.delta[i][s], field)?, field);
                }
            }
            if t.is_zero() {
                continue;
            }
            let t = t.mul(&self.multiplier, field)?;
            for (b, a) in t.terms() {
                let mut c = Expo::new();
                let mut e = Expo::new();
                for &bi in b.iter() {
                    let ci = (p - 1 + p - (bi as u32 % p)) % p;
                    c.push(ci as u16);
                    e.push(((bi as u32 + ci - (p - 1)) / p) as u16);
                }
                let slot = acc.entry(c).or_insert_with(|| vec![Vec::new(); r]);
                slot[s].push((e, *a));
            }
        }
        let mut out = BTreeMap::new();
        for (c, cols) in acc {
            let polys: Vec<Polynomial> =
                cols.into_iter().map(|ts| Polynomial::from_terms(field, ts)).collect();
            if polys.iter().any(|q| !q.is_zero()) {
                out.insert(c, polys);
            }
        }
        Ok(out)
    }

    /// `Θ_r(v)` for `v` given by generator coefficients.
    pub fn theta_of_coeffs(&self, coeffs: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let table = self.theta_table_for(coeffs)?;
        Ok(table
            .get(&expo_zero(self.ring.n()))
            .cloned()
            .unwrap_or_else(|| vec![Polynomial::zero(); self.num_gens()]))
    }

    pub fn theta_of(&self, v: &ModPoly) -> Result<ModPoly> {
        let eng = GbEngine::grevlex(&self.ring);
        let coeffs = eng.mp_to_columns(v, self.num_gens());
        let out = self.theta_of_coeffs(&coeffs)?;
        Ok(eng.mp_from_columns(&out))
    }

    /// Generators of `Θ_r(S)` where `S` is spanned by the given coefficient
    /// vectors: the values `Θ_r(x^c w)` over the table exponents.
    fn image_generators(&self, span_gens: &[Vec<Polynomial>], budget: Budget) -> Result<Vec<ModPoly>> {
        let eng = GbEngine::grevlex(&self.ring);
        let mut out = Vec::new();
        for w in span_gens {
            for (_, vec) in self.theta_table_for(w)? {
                let m = eng.mp_from_columns(&vec);
                let reduced = self.ext.pres.reduce(&m, budget)?;
                if !reduced.is_zero() && !out.contains(&reduced) {
                    out.push(reduced);
                }
            }
        }
        Ok(out)
    }

    fn generator_coeff_vectors(&self) -> Vec<Vec<Polynomial>> {
        let n = self.ring.n();
        (0..self.num_gens())
            .map(|i| {
                (0..self.num_gens())
                    .map(|s| if s == i { Polynomial::one(n) } else { Polynomial::zero() })
                    .collect()
            })
            .collect()
    }

    /// The submodule `Θ_r(N) ⊆ N`; equality with `N` decides injectivity of
    /// the (twisted) Frobenius action on the dual local cohomology module.
    pub fn theta_image(&self, budget: Budget) -> Result<Submodule> {
        let gens = self.image_generators(&self.generator_coeff_vectors(), budget)?;
        Ok(Submodule::new(self.ext.pres.clone(), gens))
    }

    pub fn is_surjective(&self, budget: Budget) -> Result<bool> {
        self.theta_image(budget)?.is_whole(budget)
    }

    /// Descending chain `N ⊇ Θ(N) ⊇ Θ²(N) ⊇ ...` until stabilization or
    /// cap. Returns `(e, stable image)` with `Θ^{e+1}(N) = Θ^e(N)`; the
    /// Frobenius action is nilpotent iff the stable image is zero.
    pub fn hsl_iterate(&self, cap: usize, budget: Budget) -> Result<(usize, Submodule)> {
        if cap < 1 {
            return Err(Error::CapExceeded(cap));
        }
        let eng = GbEngine::grevlex(&self.ring);
        let mut current = Submodule::new(
            self.ext.pres.clone(),
            self.generator_coeff_vectors()
                .iter()
                .map(|c| eng.mp_from_columns(c))
                .collect(),
        );
        for e in 1..=cap {
            let span: Vec<Vec<Polynomial>> = current
                .gens
                .iter()
                .map(|g| eng.mp_to_columns(g, self.num_gens()))
                .collect();
            let next = Submodule::new(self.ext.pres.clone(), self.image_generators(&span, budget)?);
            if next.equals(&current, budget)? {
                return Ok((e, next));
            }
            current = next;
        }
        Err(Error::CapExceeded(cap))
    }
}

/// Convenience: the untwisted Cartier operator on `Ext^j(A/I, A)`.
pub fn cartier_untwisted(data: &FrobeniusData, j: usize, budget: Budget) -> Result<CartierOperator> {
    cartier_theta(data, j, Polynomial::one(data.ring().n()), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

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

    #[test]
    fn trace_monomial_rule() {
        let r = ring(5, &["x"]);
        let f = r.field();
        let x = var(1, 0);
        // tau(x^4) = 1, tau(x^3) = 0, tau(x^9) = x
        assert_eq!(trace(&x.pow(4, f, 1).unwrap(), 5), Polynomial::one(1));
        assert!(trace(&x.pow(3, f, 1).unwrap(), 5).is_zero());
        assert_eq!(trace(&x.pow(9, f, 1).unwrap(), 5), x);
        // p^{-1}-linearity: tau(f^p a) = f tau(a)
        let a = x.pow(4, f, 1).unwrap().add(&x.pow(9, f, 1).unwrap(), f);
        let g = x.add(&Polynomial::one(1), f);
        let lhs = trace(&g.pow(5, f, 1).unwrap().mul(&a, f).unwrap(), 5);
        let rhs = g.mul(&trace(&a, 5), f).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_on_zero_ideal_is_identity() {
        let r = ring(5, &["x", "y"]);
        let i = Ideal::zero(r.clone());
        let data = FrobeniusData::new(&i, b()).unwrap();
        let (map, delta) = comparison_delta(&data, 0, 1, b()).unwrap();
        assert_eq!(delta.len(), 1);
        assert_eq!(delta[0][0], Polynomial::one(2));
        assert!(map.kernel(b()).unwrap().is_zero(b()).unwrap());
    }

    #[test]
    fn delta_on_principal_ideal_is_power_multiplication() {
        // I = (f): delta on Ext^1 is multiplication by f^{p-1}
        let r = ring(3, &["x", "y"]);
        let f = r.field();
        let fp = var(2, 0).mul(&var(2, 1), f).unwrap();
        let i = Ideal::new(r.clone(), vec![fp.clone()]).unwrap();
        let data = FrobeniusData::new(&i, b()).unwrap();
        let (_, delta) = comparison_delta(&data, 1, 1, b()).unwrap();
        assert_eq!(delta.len(), 1);
        let expect = fp.pow(2, f, 2).unwrap();
        assert_eq!(delta[0][0], expect);
    }

    #[test]
    fn theta_on_regular_ring_is_trace() {
        // I = (0), n = 1: theta on A is the trace itself
        let r = ring(5, &["x"]);
        let i = Ideal::zero(r.clone());
        let data = FrobeniusData::new(&i, b()).unwrap();
        let theta = cartier_untwisted(&data, 0, b()).unwrap();
        let f = r.field();
        let x = var(1, 0);
        let probe = x.pow(9, f, 1).unwrap(); // tau = x
        let out = theta.theta_of_coeffs(&[probe]).unwrap();
        assert_eq!(out[0], x);
        // surjective: 1 = tau(x^{p-1}) lies in the image
        assert!(theta.is_surjective(b()).unwrap());
        // the HSL chain stabilizes immediately with the whole module as
        // image: the action is not nilpotent
        let (e, stable) = theta.hsl_iterate(30, b()).unwrap();
        assert_eq!(e, 1);
        assert!(stable.is_whole(b()).unwrap());
    }

    #[test]
    fn theta_semilinear_on_principal_quotient() {
        // Theta(v) = tau(f^{p-1} v) on A/(f); check p^{-1}-linearity
        let r = ring(3, &["x", "y"]);
        let f = r.field();
        let fp = var(2, 0).mul(&var(2, 1), f).unwrap();
        let i = Ideal::new(r.clone(), vec![fp.clone()]).unwrap();
        let data = FrobeniusData::new(&i, b()).unwrap();
        let theta = cartier_untwisted(&data, 1, b()).unwrap();
        // direct formula check on a sample
        let v = var(2, 0).pow(5, f, 2).unwrap();
        let direct = trace(&fp.pow(2, f, 2).unwrap().mul(&v, f).unwrap(), 3);
        assert_eq!(theta.theta_of_coeffs(&[v.clone()]).unwrap()[0], direct);
        // semilinearity on a handful of pairs
        for k in 1..6u64 {
            let g = var(2, 0).pow(k, f, 2).unwrap().add(&var(2, 1), f);
            let gp = g.pow(3, f, 2).unwrap();
            let lhs = theta.theta_of_coeffs(&[gp.mul(&v, f).unwrap()]).unwrap();
            let rhs_inner = theta.theta_of_coeffs(&[v.clone()]).unwrap();
            let rhs = g.mul(&rhs_inner[0], f).unwrap();
            assert_eq!(lhs[0], rhs);
        }
    }

    #[test]
    fn stanley_reisner_theta_surjective_and_hsl() {
        // F-pure quotient: the Frobenius acts injectively on H^1, so theta
        // on Ext^2 is surjective and the HSL chain stabilizes at N
        let i = sr_ideal(2);
        let data = FrobeniusData::new(&i, b()).unwrap();
        let theta = cartier_untwisted(&data, 2, b()).unwrap();
        assert!(theta.is_surjective(b()).unwrap());
        let (e, stable) = theta.hsl_iterate(30, b()).unwrap();
        assert_eq!(e, 1);
        assert!(stable.is_whole(b()).unwrap());
        // theta image is theta-stable
        let img = theta.theta_image(b()).unwrap();
        for g in &img.gens {
            let tg = theta.theta_of(g).unwrap();
            assert!(img.contains(&tg, b()).unwrap());
        }
    }

    #[test]
    fn zero_ext_has_trivial_theta() {
        let i = sr_ideal(2);
        let data = FrobeniusData::new(&i, b()).unwrap();
        let theta = cartier_untwisted(&data, 3, b()).unwrap();
        assert_eq!(theta.num_gens(), 0);
        assert!(theta.is_surjective(b()).unwrap()); // vacuous on the zero module
        let (e, stable) = theta.hsl_iterate(30, b()).unwrap();
        assert_eq!(e, 1);
        assert!(stable.is_zero(b()).unwrap());
    }
}
