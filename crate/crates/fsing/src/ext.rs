//! Ext modules into the ambient ring, computed as cohomology of the
//! dualized resolution, with chain-map lifting and the induced maps on Ext.
//!
//! Each `ExtModule` keeps explicit cocycle representatives for its minimal
//! generators, so functorial maps can be evaluated by pulling cocycles back
//! along a chain map and re-expressing them modulo coboundaries.

use crate::error::{Error, Result};
use crate::groebner::{Budget, GbEngine, ModPoly};
use crate::modules::{ModuleMap, Presentation, Submodule};
use crate::poly::Polynomial;
use crate::resolution::FreeResolution;
use std::sync::{Arc, OnceLock};

/// A span of vectors in a free module, with membership certificates: each
/// basis element of the span knows its expression in the original vectors.
#[derive(Debug, Clone)]
pub struct SpanCerts {
    fronts: Vec<ModPoly>,
    certs: Vec<Vec<Polynomial>>,
    nvec: usize,
}

impl SpanCerts {
    pub fn new(eng: &GbEngine<'_>, vectors: &[ModPoly], ncomp: usize) -> Result<Self> {
        let (gb, _) = eng.gb_with_syzygies(vectors, ncomp)?;
        let mut fronts = Vec::new();
        let mut certs = Vec::new();
        for (f, c) in gb {
            fronts.push(f);
            certs.push(c);
        }
        Ok(SpanCerts { fronts, certs, nvec: vectors.len() })
    }

    /// Expresses `w` as a combination of the original vectors, or None when
    /// `w` is outside the span.
    pub fn express(&self, eng: &GbEngine<'_>, w: &ModPoly) -> Result<Option<Vec<Polynomial>>> {
        let field = eng.ring.field();
        let mut recs = Vec::new();
        let rem = eng.reduce_full(w, &self.fronts, Some(&mut recs))?;
        if !rem.is_zero() {
            return Ok(None);
        }
        let mut coeffs = vec![Polynomial::zero(); self.nvec];
        for (l, q) in recs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (v, cert) in self.certs[l].iter().enumerate() {
                if !cert.is_zero() {
                    coeffs[v] = coeffs[v].add(&q.mul(cert, field)?, field);
                }
            }
        }
        Ok(Some(coeffs))
    }

    pub fn contains(&self, eng: &GbEngine<'_>, w: &ModPoly) -> Result<bool> {
        Ok(eng.reduce_full(w, &self.fronts, None)?.is_zero())
    }
}

/// `Ext^j(M, A)` presented on minimal generators with explicit cocycles.
#[derive(Debug, Clone)]
pub struct ExtModule {
    pub j: usize,
    /// Minimal presentation; zero module iff no generators.
    pub pres: Presentation,
    /// Cocycle representative in `F_j^*` for each generator.
    pub cocycles: Vec<ModPoly>,
    /// Columns of `d_j^T` (empty for j = 0).
    pub coboundaries: Vec<ModPoly>,
    /// Generator degrees of `F_j^*` (negated resolution shifts).
    pub dual_shifts: Vec<i64>,
    span: Arc<OnceLock<SpanCerts>>,
}

impl ExtModule {
    pub fn is_zero(&self) -> bool {
        self.pres.num_gens() == 0
    }

    /// Span of cocycle generators and coboundaries, used to express an
    /// arbitrary cocycle in the generators modulo coboundaries.
    fn span(&self, eng: &GbEngine<'_>) -> Result<&SpanCerts> {
        if self.span.get().is_none() {
            let mut vectors = self.cocycles.clone();
            vectors.extend(self.coboundaries.iter().cloned());
            let s = SpanCerts::new(eng, &vectors, self.dual_shifts.len())?;
            let _ = self.span.set(s);
        }
        Ok(self.span.get().expect("just set"))
    }

    /// Coefficients of (the class of) `w` over the Ext generators; None if
    /// `w` is not a combination of cocycles and coboundaries.
    pub fn express(&self, eng: &GbEngine<'_>, w: &ModPoly) -> Result<Option<Vec<Polynomial>>> {
        let span = self.span(eng)?;
        let Some(all) = span.express(eng, w)? else {
            return Ok(None);
        };
        Ok(Some(all[..self.cocycles.len()].to_vec()))
    }
}

/// Columns of the transposed differential `d_{j+1}^T : F_j^* -> F_{j+1}^*`.
fn transpose_columns(eng: &GbEngine<'_>, res: &FreeResolution, j: usize) -> Vec<ModPoly> {
    let rank_j = res.rank(j);
    let rank_j1 = res.rank(j + 1);
    let mut cols = Vec::with_capacity(rank_j);
    for i in 0..rank_j {
        // row i of d_{j+1} becomes column i of the transpose
        let mut parts = vec![Polynomial::zero(); rank_j1];
        for (c, col) in res.diffs[j].iter().enumerate() {
            let entries = eng.mp_to_columns(col, rank_j);
            parts[c] = entries[i].clone();
        }
        cols.push(eng.mp_from_columns(&parts));
    }
    cols
}

/// All `Ext^j(M, A)` for `j = 0..=n`, from a minimal free resolution of M.
pub fn ext_modules(res: &FreeResolution, budget: Budget) -> Result<Vec<ExtModule>> {
    let ring = res.ring.clone();
    let eng = GbEngine::new(&ring, crate::order::MonomialOrder::Grevlex, budget);
    let n = ring.n();
    let mut out = Vec::new();
    for j in 0..=n {
        if j > res.length() {
            out.push(ExtModule {
                j,
                pres: Presentation::zero_module(ring.clone()),
                cocycles: Vec::new(),
                coboundaries: Vec::new(),
                dual_shifts: Vec::new(),
                span: Arc::new(OnceLock::new()),
            });
            continue;
        }
        let dual_shifts: Vec<i64> = res.shifts[j].iter().map(|s| -s).collect();
        // kernel of d_{j+1}^T
        let kernel_gens: Vec<ModPoly> = if j == res.length() {
            (0..res.rank(j))
                .map(|i| eng.mp_from_poly(&Polynomial::one(ring.n()), i as u32))
                .collect()
        } else {
            let cols = transpose_columns(&eng, res, j);
            let target_shifts: Vec<i64> = res.shifts[j + 1].iter().map(|s| -s).collect();
            let map = ModuleMap::new(
                Presentation::free(ring.clone(), dual_shifts.clone()),
                Presentation::free(ring.clone(), target_shifts),
                cols,
            );
            map.kernel(budget)?.gens
        };
        // image of d_j^T
        let coboundaries: Vec<ModPoly> = if j == 0 {
            Vec::new()
        } else {
            transpose_columns(&eng, res, j - 1)
                .into_iter()
                .filter(|c| !c.is_zero())
                .collect()
        };
        let ambient = Presentation::new(ring.clone(), dual_shifts.clone(), coboundaries.clone())?;
        let sub = Submodule::new(ambient, kernel_gens.clone());
        let raw = sub.presentation(budget)?;
        let (pres, kept) = raw.minimize()?;
        let cocycles: Vec<ModPoly> = kept.iter().map(|&i| sub.gens[i].clone()).collect();
        out.push(ExtModule {
            j,
            pres,
            cocycles,
            coboundaries,
            dual_shifts,
            span: Arc::new(OnceLock::new()),
        });
    }
    Ok(out)
}

/// Lifts a map of augmented modules to a chain map of resolutions.
///
/// `phi0[s]` is the image in `A^{rank target F_0}` of the s-th generator of
/// the source's `F_0`. Returns `maps[k]`: columns of `phi_k`. Every square
/// is verified to commute before returning.
pub fn chain_lift(
    phi0: Vec<ModPoly>,
    source: &FreeResolution,
    target: &FreeResolution,
    budget: Budget,
) -> Result<Vec<Vec<ModPoly>>> {
    let ring = source.ring.clone();
    let eng = GbEngine::new(&ring, crate::order::MonomialOrder::Grevlex, budget);
    let mut maps: Vec<Vec<ModPoly>> = vec![phi0];
    for k in 1..=source.length() {
        let prev = &maps[k - 1];
        let apply_prev = |v: &ModPoly| -> Result<ModPoly> {
            let coeffs = eng.mp_to_columns(v, source.rank(k - 1));
            let mut acc = ModPoly::zero();
            for (i, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    acc = eng.mp_add(&acc, &eng.mp_poly_mul(&prev[i], c)?);
                }
            }
            Ok(acc)
        };
        if target.rank(k) == 0 {
            // the image of every source differential column must vanish
            for col in &source.diffs[k - 1] {
                if !apply_prev(col)?.is_zero() {
                    return Err(Error::LiftFailure);
                }
            }
            maps.push(vec![ModPoly::zero(); source.rank(k)]);
            continue;
        }
        let span = SpanCerts::new(&eng, &target.diffs[k - 1], target.rank(k - 1))?;
        let mut cols = Vec::new();
        for col in &source.diffs[k - 1] {
            let w = apply_prev(col)?;
            if w.is_zero() {
                cols.push(ModPoly::zero());
                continue;
            }
            let Some(coeffs) = span.express(&eng, &w)? else {
                return Err(Error::LiftFailure);
            };
            let v = eng.mp_from_columns(&coeffs);
            // verify the square entrywise: d_k^tgt(v) = w
            let dcols = eng.mp_to_columns(&v, target.rank(k));
            let mut img = ModPoly::zero();
            for (i, c) in dcols.iter().enumerate() {
                if !c.is_zero() {
                    img = eng.mp_add(&img, &eng.mp_poly_mul(&target.diffs[k - 1][i], c)?);
                }
            }
            if eng.mp_sub(&img, &w) != ModPoly::zero() {
                return Err(Error::LiftFailure);
            }
            cols.push(v);
        }
        maps.push(cols);
    }
    Ok(maps)
}

/// Functorial map on Ext induced by `phi: M -> M'`: the contravariant image
/// `Ext^j(M', A) -> Ext^j(M, A)` as a map of Ext presentations.
///
/// `chain` lifts `phi` over `source_res` (of M) into `target_res` (of M');
/// `ext_source`/`ext_target` are the Ext modules of M and M'.
pub fn induced_ext_map(
    chain: &[Vec<ModPoly>],
    ring: &Arc<crate::ring::PolyRing>,
    ext_of_m: &ExtModule,
    ext_of_mprime: &ExtModule,
    budget: Budget,
) -> Result<ModuleMap> {
    let eng = GbEngine::new(ring, crate::order::MonomialOrder::Grevlex, budget);
    let j = ext_of_m.j;
    let mut columns = Vec::new();
    for cocycle in &ext_of_mprime.cocycles {
        // pull back along phi_j: coordinate c of the pullback is
        // sum_i y_i * (phi_j column c)_i
        let pullback = if j < chain.len() {
            let y = eng.mp_to_columns(cocycle, ext_of_mprime.dual_shifts.len());
            let mut parts = vec![Polynomial::zero(); ext_of_m.dual_shifts.len()];
            for (c, col) in chain[j].iter().enumerate() {
                let entries = eng.mp_to_columns(col, ext_of_mprime.dual_shifts.len());
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
        if pullback.is_zero() {
            columns.push(ModPoly::zero());
            continue;
        }
        let Some(coeffs) = ext_of_m.express(&eng, &pullback)? else {
            return Err(Error::LiftFailure);
        };
        columns.push(eng.mp_from_columns(&coeffs));
    }
    Ok(ModuleMap::new(ext_of_mprime.pres.clone(), ext_of_m.pres.clone(), columns))
}

/// Depth from the minimal resolution (Auslander–Buchsbaum) cross-checked
/// against the complementary Ext nonvanishing.
pub fn depth_via_ab(res: &FreeResolution, exts: &[ExtModule]) -> Result<usize> {
    let n = res.ring.n();
    let by_ab = res.depth();
    let max_nonzero = exts.iter().rev().find(|e| !e.is_zero()).map(|e| e.j);
    match max_nonzero {
        Some(j) if n - j == by_ab => Ok(by_ab),
        None if res.length() == 0 && n == by_ab => Ok(by_ab),
        _ => Err(Error::PreconditionViolated(format!(
            "Auslander-Buchsbaum mismatch: n - pd = {} but Ext nonvanishing gives {:?}",
            by_ab, max_nonzero
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ideal::Ideal;
    use crate::resolution::{frobenius_resolution, resolve_quotient};
    use crate::ring::PolyRing;

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
    fn ext_of_zero_ideal() {
        let r = ring(5, &["x", "y"]);
        let i = Ideal::zero(r.clone());
        let res = resolve_quotient(&i, b()).unwrap();
        let exts = ext_modules(&res, b()).unwrap();
        assert!(!exts[0].is_zero());
        assert_eq!(exts[0].pres.num_gens(), 1);
        assert_eq!(exts[0].pres.gen_degrees(), &[0]);
        assert!(exts[1].is_zero());
        assert!(exts[2].is_zero());
    }

    #[test]
    fn ext_of_principal_ideal() {
        // I = (xy): Ext^1 = A/(xy) generated in degree -2, Ext^0 = 0
        let r = ring(5, &["x", "y"]);
        let f = r.field();
        let xy = var(2, 0).mul(&var(2, 1), f).unwrap();
        let i = Ideal::new(r.clone(), vec![xy]).unwrap();
        let res = resolve_quotient(&i, b()).unwrap();
        let exts = ext_modules(&res, b()).unwrap();
        assert!(exts[0].is_zero());
        assert!(!exts[1].is_zero());
        assert_eq!(exts[1].pres.num_gens(), 1);
        assert_eq!(exts[1].pres.gen_degrees(), &[-2]);
        assert_eq!(exts[1].pres.relations().len(), 1);
    }

    #[test]
    fn ext_of_stanley_reisner() {
        // depth 1, dim 1 CM: only Ext^2 survives
        let i = sr_ideal(2);
        let res = resolve_quotient(&i, b()).unwrap();
        let exts = ext_modules(&res, b()).unwrap();
        assert!(exts[0].is_zero());
        assert!(exts[1].is_zero());
        assert!(!exts[2].is_zero());
        assert!(exts[3].is_zero());
        assert_eq!(depth_via_ab(&res, &exts).unwrap(), 1);
    }

    #[test]
    fn chain_lift_identity() {
        let i = sr_ideal(2);
        let res = resolve_quotient(&i, b()).unwrap();
        let eng = GbEngine::grevlex(i.ring());
        let id0 = vec![eng.mp_from_poly(&Polynomial::one(3), 0)];
        let chain = chain_lift(id0, &res, &res, b()).unwrap();
        assert_eq!(chain.len(), res.length() + 1);
        // the identity lift on level 1 must be upper-triangular-equivalent
        // to the identity; verify it maps each column to itself up to the
        // relations: d(phi_1 e_j) = d(e_j)
        for (j, col) in res.diffs[0].iter().enumerate() {
            let coeffs = eng.mp_to_columns(&chain[1][j], res.rank(1));
            let mut img = ModPoly::zero();
            for (i2, c) in coeffs.iter().enumerate() {
                img = eng.mp_add(&img, &eng.mp_poly_mul(&res.diffs[0][i2], c).unwrap());
            }
            assert_eq!(img, col.clone());
        }
    }

    #[test]
    fn chain_lift_koszul_power() {
        // A/(f^p) -> A/(f): phi_0 = 1, phi_1 = f^{p-1}
        let r = ring(3, &["x", "y"]);
        let f = r.field();
        let fp = var(2, 0).mul(&var(2, 1), f).unwrap(); // f = xy
        let i1 = Ideal::new(r.clone(), vec![fp.clone()]).unwrap();
        let i3 = i1.bracket_power(1).unwrap();
        let res1 = resolve_quotient(&i1, b()).unwrap();
        let res3 = resolve_quotient(&i3, b()).unwrap();
        let eng = GbEngine::grevlex(&r);
        let chain =
            chain_lift(vec![eng.mp_from_poly(&Polynomial::one(2), 0)], &res3, &res1, b()).unwrap();
        let phi1 = eng.mp_to_columns(&chain[1][0], 1).pop().unwrap();
        let expect = fp.pow(2, f, 2).unwrap(); // f^{p-1} = f^2
        assert_eq!(phi1, expect);
    }

    #[test]
    fn chain_lift_frobenius_of_sr() {
        let i = sr_ideal(2);
        let res = resolve_quotient(&i, b()).unwrap();
        let fres = frobenius_resolution(&res, 1).unwrap();
        let eng = GbEngine::grevlex(i.ring());
        // lift of A/I^[2] ->> A/I over the powered resolution
        let chain =
            chain_lift(vec![eng.mp_from_poly(&Polynomial::one(3), 0)], &fres, &res, b()).unwrap();
        assert_eq!(chain.len(), 3);
        // commutation is verified inside chain_lift; spot-check level 2 size
        assert_eq!(chain[2].len(), fres.rank(2));
    }

    #[test]
    fn induced_map_multiplication_kernel() {
        // multiplication by u on A/(uv,uz,vz): induced map on Ext^2 has
        // nonzero kernel (u kills the socle of the canonical module dual)
        let i = sr_ideal(5);
        let res = resolve_quotient(&i, b()).unwrap();
        let exts = ext_modules(&res, b()).unwrap();
        let eng = GbEngine::grevlex(i.ring());
        let u = var(3, 0);
        let phi0 = vec![eng.mp_from_poly(&u, 0)];
        let chain = chain_lift(phi0, &res, &res, b()).unwrap();
        let map = induced_ext_map(&chain, i.ring(), &exts[2], &exts[2], b()).unwrap();
        assert!(map.validate(b()).unwrap());
        let ker = map.kernel(b()).unwrap();
        assert!(!ker.is_zero(b()).unwrap());
    }
}
