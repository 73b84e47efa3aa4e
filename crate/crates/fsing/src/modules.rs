//! Finitely presented graded modules `M = coker(Phi)` over the ambient
//! polynomial ring, together with the submodule/kernel machinery the
//! homological layer is built from.
//!
//! Elements of a free module `A^r` are `ModPoly` values whose component
//! indices refer to the generators; everything is kept under the grevlex +
//! position-over-term order.

use crate::error::{Error, Result};
use crate::groebner::{Budget, GbEngine, ModPoly};
use crate::poly::Polynomial;
use crate::ring::{expo_divides, expo_zero, Expo, PolyRing};
use std::sync::{Arc, OnceLock};

/// Degree of a homogeneous module element with respect to generator degrees.
pub fn element_degree(ring: &PolyRing, v: &ModPoly, gen_degrees: &[i64]) -> Result<i64> {
    let mut deg: Option<i64> = None;
    for (c, e, _) in &v.terms {
        let d = ring.wdeg(e) + gen_degrees[*c as usize];
        match deg {
            None => deg = Some(d),
            Some(d0) if d0 == d => {}
            _ => {
                return Err(Error::NonHomogeneous(format!(
                    "module element mixes degrees {} and {}",
                    deg.unwrap(),
                    d
                )))
            }
        }
    }
    deg.ok_or(Error::ZeroPolynomial)
}

#[derive(Debug, Clone)]
pub struct Presentation {
    ring: Arc<PolyRing>,
    gen_degrees: Vec<i64>,
    relations: Vec<ModPoly>,
    rel_gb: Arc<OnceLock<Arc<Vec<ModPoly>>>>,
}

impl Presentation {
    pub fn new(ring: Arc<PolyRing>, gen_degrees: Vec<i64>, relations: Vec<ModPoly>) -> Result<Self> {
        let relations: Vec<ModPoly> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        for r in &relations {
            element_degree(&ring, r, &gen_degrees)?;
        }
        Ok(Presentation { ring, gen_degrees, relations, rel_gb: Arc::new(OnceLock::new()) })
    }

    /// The free module `⊕ A(-g_s)`.
    pub fn free(ring: Arc<PolyRing>, gen_degrees: Vec<i64>) -> Self {
        Presentation { ring, gen_degrees, relations: Vec::new(), rel_gb: Arc::new(OnceLock::new()) }
    }

    pub fn zero_module(ring: Arc<PolyRing>) -> Self {
        Self::free(ring, Vec::new())
    }

    /// `A/I` as a one-generator module.
    pub fn cyclic(ideal: &crate::ideal::Ideal) -> Self {
        let ring = ideal.ring().clone();
        let eng = GbEngine::grevlex(&ring);
        let rels = ideal.gens().iter().map(|g| eng.mp_from_poly(g, 0)).collect();
        Presentation {
            ring,
            gen_degrees: vec![0],
            relations: rels,
            rel_gb: Arc::new(OnceLock::new()),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn num_gens(&self) -> usize {
        self.gen_degrees.len()
    }

    pub fn gen_degrees(&self) -> &[i64] {
        &self.gen_degrees
    }

    pub fn relations(&self) -> &[ModPoly] {
        &self.relations
    }

    pub fn rel_gb(&self, budget: Budget) -> Result<Arc<Vec<ModPoly>>> {
        if let Some(g) = self.rel_gb.get() {
            return Ok(g.clone());
        }
        let eng = GbEngine::new(&self.ring, crate::order::MonomialOrder::Grevlex, budget);
        let gb = Arc::new(eng.module_reduced_gb(&self.relations)?);
        let _ = self.rel_gb.set(gb);
        Ok(self.rel_gb.get().expect("just set").clone())
    }

    /// Normal form of a free-module element modulo the relations.
    pub fn reduce(&self, v: &ModPoly, budget: Budget) -> Result<ModPoly> {
        let gb = self.rel_gb(budget)?;
        let eng = GbEngine::new(&self.ring, crate::order::MonomialOrder::Grevlex, budget);
        eng.reduce_full(v, &gb, None)
    }

    /// A module is zero iff every generator reduces to zero.
    pub fn is_zero(&self, budget: Budget) -> Result<bool> {
        let eng = GbEngine::new(&self.ring, crate::order::MonomialOrder::Grevlex, budget);
        for s in 0..self.num_gens() {
            let gen = eng.mp_from_poly(&Polynomial::one(self.ring.n()), s as u32);
            if !self.reduce(&gen, budget)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Standard module monomials of weighted degree `d`, in a fixed order.
    pub fn piece_basis(&self, d: i64, budget: Budget) -> Result<Vec<(u32, Expo)>> {
        let gb = self.rel_gb(budget)?;
        let leads: Vec<(u32, Expo)> = gb
            .iter()
            .filter_map(|g| g.lead().map(|(c, e, _)| (c, e.clone())))
            .collect();
        let mut out = Vec::new();
        for (s, &gdeg) in self.gen_degrees.iter().enumerate() {
            for m in self.ring.monomials_of_wdeg(d - gdeg) {
                let divisible = leads
                    .iter()
                    .any(|(c, l)| *c as usize == s && expo_divides(l, &m));
                if !divisible {
                    out.push((s as u32, m));
                }
            }
        }
        Ok(out)
    }

    pub fn piece_dim(&self, d: i64, budget: Budget) -> Result<usize> {
        Ok(self.piece_basis(d, budget)?.len())
    }

    /// Coordinates of (the class of) `v` in the standard-monomial basis of
    /// its degree piece. `v` must be homogeneous of degree `d`.
    pub fn piece_coords(&self, v: &ModPoly, d: i64, budget: Budget) -> Result<Vec<u32>> {
        let basis = self.piece_basis(d, budget)?;
        let nf = self.reduce(v, budget)?;
        let mut coords = vec![0u32; basis.len()];
        for (c, e, a) in &nf.terms {
            let pos = basis
                .iter()
                .position(|(bc, be)| bc == c && be == e)
                .ok_or_else(|| Error::RingMismatch("normal form is outside the sampled piece".into()))?;
            coords[pos] = *a;
        }
        Ok(coords)
    }

    /// Finite length test via pure-power lead terms, with the total length
    /// (count of standard module monomials) when finite.
    pub fn finite_length(&self, budget: Budget) -> Result<Option<u64>> {
        if self.num_gens() == 0 {
            return Ok(Some(0));
        }
        let gb = self.rel_gb(budget)?;
        let n = self.ring.n();
        let leads: Vec<(u32, Expo)> = gb
            .iter()
            .filter_map(|g| g.lead().map(|(c, e, _)| (c, e.clone())))
            .collect();
        // bounds[s][i]: least k with x_i^k e_s a lead term, if any
        let mut bounds = vec![vec![None::<u16>; n]; self.num_gens()];
        for (c, e) in &leads {
            let support: Vec<usize> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, _)| i)
                .collect();
            if support.is_empty() {
                // generator killed outright
                for i in 0..n {
                    bounds[*c as usize][i] = Some(0);
                }
            } else if support.len() == 1 {
                let i = support[0];
                let k = e[i];
                let slot = &mut bounds[*c as usize][i];
                *slot = Some(slot.map_or(k, |old| old.min(k)));
            }
        }
        if bounds.iter().any(|bs| bs.iter().any(|b| b.is_none())) {
            return Ok(None);
        }
        // enumerate the finite boxes and count standard monomials
        let mut total = 0u64;
        for s in 0..self.num_gens() {
            let bs: Vec<u16> = bounds[s].iter().map(|b| b.unwrap()).collect();
            let mut cur = expo_zero(n);
            total += count_standard(&leads, s as u32, &bs, 0, &mut cur);
        }
        Ok(Some(total))
    }

    /// All degrees `d` with a nonzero piece, when the module is finite
    /// length; scans the standard monomials.
    pub fn finite_support_degrees(&self, budget: Budget) -> Result<Vec<i64>> {
        if self.finite_length(budget)?.is_none() {
            return Err(Error::PreconditionViolated("module has infinite length".into()));
        }
        let gb = self.rel_gb(budget)?;
        let n = self.ring.n();
        let leads: Vec<(u32, Expo)> = gb
            .iter()
            .filter_map(|g| g.lead().map(|(c, e, _)| (c, e.clone())))
            .collect();
        let mut degrees = std::collections::BTreeSet::new();
        for s in 0..self.num_gens() {
            let mut bs = vec![0u16; n];
            for i in 0..n {
                let b = leads
                    .iter()
                    .filter(|(c, e)| {
                        *c as usize == s && e.iter().enumerate().all(|(j, &a)| a == 0 || j == i)
                    })
                    .map(|(_, e)| e[i])
                    .min()
                    .unwrap_or(0);
                bs[i] = b;
            }
            let mut cur = expo_zero(n);
            collect_standard_degrees(
                &self.ring,
                &leads,
                s as u32,
                self.gen_degrees[s],
                &bs,
                0,
                &mut cur,
                &mut degrees,
            );
        }
        Ok(degrees.into_iter().collect())
    }

    /// Cancels unit entries in the relation matrix, yielding a minimal
    /// presentation. Returns the surviving generator indices of `self`.
    pub fn minimize(&self) -> Result<(Presentation, Vec<usize>)> {
        let eng = GbEngine::grevlex(&self.ring);
        let field = self.ring.field();
        // matrix[l][s] = entry of relation l at generator s
        let mut cols: Vec<Vec<Polynomial>> = self
            .relations
            .iter()
            .map(|r| eng.mp_to_columns(r, self.num_gens()))
            .collect();
        let mut live_gens: Vec<usize> = (0..self.num_gens()).collect();
        let mut live_cols: Vec<usize> = (0..cols.len()).collect();
        loop {
            let mut found: Option<(usize, usize, u32)> = None;
            'search: for (ci, &l) in live_cols.iter().enumerate() {
                for (ri, &s) in live_gens.iter().enumerate() {
                    if let Some(u) = cols[l][s].unit_constant() {
                        found = Some((ci, ri, u));
                        break 'search;
                    }
                }
            }
            let Some((ci, ri, u)) = found else { break };
            let l = live_cols[ci];
            let s = live_gens[ri];
            let uinv = field.inv(u)?;
            let pivot_col = cols[l].clone();
            for &c in &live_cols {
                if c == l {
                    continue;
                }
                let factor = cols[c][s].scale(uinv, field);
                if factor.is_zero() {
                    continue;
                }
                for &r in &live_gens {
                    let delta = factor.mul(&pivot_col[r], field)?;
                    cols[c][r] = cols[c][r].sub(&delta, field);
                }
            }
            live_cols.remove(ci);
            live_gens.remove(ri);
        }
        let new_degrees: Vec<i64> = live_gens.iter().map(|&s| self.gen_degrees[s]).collect();
        let mut new_rels = Vec::new();
        for &l in &live_cols {
            let col: Vec<Polynomial> = live_gens.iter().map(|&s| cols[l][s].clone()).collect();
            let mp = eng.mp_from_columns(&col);
            if !mp.is_zero() {
                new_rels.push(mp);
            }
        }
        Ok((Presentation::new(self.ring.clone(), new_degrees, new_rels)?, live_gens))
    }
}

fn count_standard(leads: &[(u32, Expo)], comp: u32, bounds: &[u16], i: usize, cur: &mut Expo) -> u64 {
    if i == bounds.len() {
        let divisible = leads
            .iter()
            .any(|(c, l)| *c == comp && expo_divides(l, cur));
        return if divisible { 0 } else { 1 };
    }
    let mut acc = 0;
    for a in 0..bounds[i].max(1) {
        cur[i] = a;
        acc += count_standard(leads, comp, bounds, i + 1, cur);
    }
    cur[i] = 0;
    acc
}

#[allow(clippy::too_many_arguments)]
fn collect_standard_degrees(
    ring: &PolyRing,
    leads: &[(u32, Expo)],
    comp: u32,
    gdeg: i64,
    bounds: &[u16],
    i: usize,
    cur: &mut Expo,
    out: &mut std::collections::BTreeSet<i64>,
) {
    if i == bounds.len() {
        let divisible = leads
            .iter()
            .any(|(c, l)| *c == comp && expo_divides(l, cur));
        if !divisible {
            out.insert(ring.wdeg(cur) + gdeg);
        }
        return;
    }
    for a in 0..bounds[i].max(1) {
        cur[i] = a;
        collect_standard_degrees(ring, leads, comp, gdeg, bounds, i + 1, cur, out);
    }
    cur[i] = 0;
}

/// A submodule of (the free cover of) a presented module, given by vectors
/// in the generators' coordinates, with its own induced presentation.
#[derive(Debug, Clone)]
pub struct Submodule {
    pub ambient: Presentation,
    pub gens: Vec<ModPoly>,
    membership_gb: Arc<OnceLock<Arc<Vec<ModPoly>>>>,
}

impl Submodule {
    pub fn new(ambient: Presentation, gens: Vec<ModPoly>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Submodule { ambient, gens, membership_gb: Arc::new(OnceLock::new()) }
    }

    /// GB of `span(gens) + relations`, deciding membership in the image of
    /// the submodule inside the ambient module.
    pub fn membership_gb(&self, budget: Budget) -> Result<Arc<Vec<ModPoly>>> {
        if let Some(g) = self.membership_gb.get() {
            return Ok(g.clone());
        }
        let eng = GbEngine::new(&self.ambient.ring, crate::order::MonomialOrder::Grevlex, budget);
        let mut all = self.gens.clone();
        all.extend(self.ambient.relations.iter().cloned());
        let gb = Arc::new(eng.module_reduced_gb(&all)?);
        let _ = self.membership_gb.set(gb);
        Ok(self.membership_gb.get().expect("just set").clone())
    }

    /// Does the class of `v` lie in the submodule?
    pub fn contains(&self, v: &ModPoly, budget: Budget) -> Result<bool> {
        let gb = self.membership_gb(budget)?;
        let eng = GbEngine::new(&self.ambient.ring, crate::order::MonomialOrder::Grevlex, budget);
        Ok(eng.reduce_full(v, &gb, None)?.is_zero())
    }

    /// Is the submodule all of the ambient module?
    pub fn is_whole(&self, budget: Budget) -> Result<bool> {
        let eng = GbEngine::new(&self.ambient.ring, crate::order::MonomialOrder::Grevlex, budget);
        for s in 0..self.ambient.num_gens() {
            let gen = eng.mp_from_poly(&Polynomial::one(self.ambient.ring.n()), s as u32);
            if !self.contains(&gen, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Is the submodule zero inside the ambient module?
    pub fn is_zero(&self, budget: Budget) -> Result<bool> {
        for g in &self.gens {
            if !self.ambient.reduce(g, budget)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Two submodules of the same ambient module are equal iff each
    /// generator of one lies in the other.
    pub fn equals(&self, other: &Submodule, budget: Budget) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g, budget)? {
                return Ok(false);
            }
        }
        for g in &self.gens {
            if !other.contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Presentation of the submodule on its own generators: relations are
    /// coefficient vectors `a` with `sum a_t gens_t` in the ambient
    /// relations.
    pub fn presentation(&self, budget: Budget) -> Result<Presentation> {
        let ring = self.ambient.ring.clone();
        if self.gens.is_empty() {
            return Ok(Presentation::zero_module(ring));
        }
        let eng = GbEngine::new(&ring, crate::order::MonomialOrder::Grevlex, budget);
        let mut degrees = Vec::new();
        for g in &self.gens {
            degrees.push(element_degree(&ring, g, self.ambient.gen_degrees())?);
        }
        let mut vectors = self.gens.clone();
        let t = vectors.len();
        vectors.extend(self.ambient.relations.iter().cloned());
        let (_, syz) = eng.gb_with_syzygies(&vectors, self.ambient.num_gens())?;
        let mut rels = Vec::new();
        for s in &syz {
            let first: Vec<(u32, Expo, u32)> = s
                .terms
                .iter()
                .filter(|(c, _, _)| (*c as usize) < t)
                .cloned()
                .collect();
            if !first.is_empty() {
                rels.push(ModPoly { terms: first });
            }
        }
        Presentation::new(ring, degrees, rels)
    }
}

/// A homogeneous map of presented modules, given on generators.
#[derive(Debug, Clone)]
pub struct ModuleMap {
    pub source: Presentation,
    pub target: Presentation,
    /// `columns[j]` = image of source generator `j`, in target coordinates.
    pub columns: Vec<ModPoly>,
}

impl ModuleMap {
    pub fn new(source: Presentation, target: Presentation, columns: Vec<ModPoly>) -> Self {
        ModuleMap { source, target, columns }
    }

    /// Multiplication by a homogeneous polynomial as a self-map.
    pub fn multiplication(m: &Presentation, f: &Polynomial) -> Result<ModuleMap> {
        let eng = GbEngine::grevlex(m.ring());
        let mut columns = Vec::new();
        for s in 0..m.num_gens() {
            columns.push(eng.mp_from_poly(f, s as u32));
        }
        Ok(ModuleMap { source: m.clone(), target: m.clone(), columns })
    }

    pub fn apply(&self, v: &ModPoly) -> Result<ModPoly> {
        let eng = GbEngine::grevlex(self.source.ring());
        let cols = eng.mp_to_columns(v, self.source.num_gens());
        let mut acc = ModPoly::zero();
        for (j, c) in cols.iter().enumerate() {
            if !c.is_zero() {
                acc = eng.mp_add(&acc, &eng.mp_poly_mul(&self.columns[j], c)?);
            }
        }
        Ok(acc)
    }

    /// Checks that relations map into relations.
    pub fn validate(&self, budget: Budget) -> Result<bool> {
        for r in self.source.relations() {
            let img = self.apply(r)?;
            if !self.target.reduce(&img, budget)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Kernel as a submodule of the source: coefficient vectors `a` with
    /// `sum a_j columns_j` in the target relations.
    pub fn kernel(&self, budget: Budget) -> Result<Submodule> {
        let ring = self.source.ring().clone();
        let eng = GbEngine::new(&ring, crate::order::MonomialOrder::Grevlex, budget);
        let t = self.columns.len();
        let mut vectors = self.columns.clone();
        vectors.extend(self.target.relations().iter().cloned());
        let (_, syz) = eng.gb_with_syzygies(&vectors, self.target.num_gens())?;
        let mut gens = Vec::new();
        for s in &syz {
            let first: Vec<(u32, Expo, u32)> = s
                .terms
                .iter()
                .filter(|(c, _, _)| (*c as usize) < t)
                .cloned()
                .collect();
            if !first.is_empty() {
                let v = ModPoly { terms: first };
                // discard vectors that are already zero in the source
                if !self.source.reduce(&v, budget)?.is_zero() {
                    gens.push(v);
                }
            }
        }
        Ok(Submodule::new(self.source.clone(), gens))
    }

    /// Surjectivity: every target generator lies in the image + relations.
    pub fn is_surjective(&self, budget: Budget) -> Result<bool> {
        let image = Submodule::new(self.target.clone(), self.columns.clone());
        image.is_whole(budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ideal::Ideal;

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
    fn finite_length_examples() {
        let r = ring(5, &["x", "y"]);
        let f = r.field();
        let max = Ideal::new(r.clone(), vec![var(2, 0), var(2, 1)]).unwrap();
        let m = Presentation::cyclic(&max);
        assert_eq!(m.finite_length(b()).unwrap(), Some(1));
        let sr = Presentation::cyclic(&sr_ideal(2));
        assert_eq!(sr.finite_length(b()).unwrap(), None);
        let zero = Presentation::zero_module(r.clone());
        assert_eq!(zero.finite_length(b()).unwrap(), Some(0));
        let _ = f;
    }

    #[test]
    fn piece_dims_match_hilbert() {
        let sr = sr_ideal(3);
        let m = Presentation::cyclic(&sr);
        let h = sr.hilbert_sample(0, 4, b()).unwrap();
        for (k, d) in (0..=4).enumerate() {
            assert_eq!(m.piece_dim(d, b()).unwrap(), h[k]);
        }
    }

    #[test]
    fn multiplication_kernel_on_quotient() {
        // kernel of ·u on A/(uv,uz,vz) is generated by the classes of v, z
        let i = sr_ideal(5);
        let m = Presentation::cyclic(&i);
        let mul_u = ModuleMap::multiplication(&m, &var(3, 0)).unwrap();
        assert!(mul_u.validate(b()).unwrap());
        let ker = mul_u.kernel(b()).unwrap();
        assert!(!ker.is_zero(b()).unwrap());
        let eng = GbEngine::grevlex(m.ring());
        let v = eng.mp_from_poly(&var(3, 1), 0);
        let z = eng.mp_from_poly(&var(3, 2), 0);
        assert!(ker.contains(&v, b()).unwrap());
        assert!(ker.contains(&z, b()).unwrap());
        // and the kernel is exactly (v, z) mod I: (I : u) = (v, z) + I
        let colon = i.colon_poly(&var(3, 0), b()).unwrap();
        for g in colon.gens() {
            assert!(ker.contains(&eng.mp_from_poly(g, 0), b()).unwrap());
        }
        // kernel of multiplication by x on the free module A is zero
        let r = ring(5, &["x", "y"]);
        let free = Presentation::free(r.clone(), vec![0]);
        let mul_x = ModuleMap::multiplication(&free, &Polynomial::variable(2, 0)).unwrap();
        assert!(mul_x.kernel(b()).unwrap().is_zero(b()).unwrap());
    }

    #[test]
    fn identity_map_kernel_zero() {
        let m = Presentation::cyclic(&sr_ideal(2));
        let id = ModuleMap::multiplication(&m, &Polynomial::one(3)).unwrap();
        assert!(id.kernel(b()).unwrap().is_zero(b()).unwrap());
        assert!(id.is_surjective(b()).unwrap());
    }

    #[test]
    fn minimize_cancels_units() {
        // presentation of A^2 / span{(1, x)}: minimizes to a free module A
        let r = ring(5, &["x", "y"]);
        let eng = GbEngine::grevlex(&r);
        let rel = eng.mp_from_columns(&[Polynomial::one(2), var(2, 0)]);
        // degrees: gen0 deg 0, gen1 deg... (1, x): deg(1)+g0 = deg(x)+g1 => g0 = 1 + g1; take g0=1, g1=0
        let p = Presentation::new(r.clone(), vec![1, 0], vec![rel]).unwrap();
        let (min, kept) = p.minimize().unwrap();
        assert_eq!(min.num_gens(), 1);
        assert_eq!(kept, vec![1]);
        assert!(min.relations().is_empty());
    }

    #[test]
    fn submodule_presentation_relations() {
        // submodule (u) of A/(uv, uz): relations v, z on the generator
        let r = ring(5, &["u", "v", "z"]);
        let f = r.field();
        let i = Ideal::new(
            r.clone(),
            vec![
                var(3, 0).mul(&var(3, 1), f).unwrap(),
                var(3, 0).mul(&var(3, 2), f).unwrap(),
            ],
        )
        .unwrap();
        let m = Presentation::cyclic(&i);
        let eng = GbEngine::grevlex(&r);
        let u = eng.mp_from_poly(&var(3, 0), 0);
        let sub = Submodule::new(m, vec![u]);
        let pres = sub.presentation(b()).unwrap();
        assert_eq!(pres.num_gens(), 1);
        assert_eq!(pres.gen_degrees(), &[1]);
        // v and z are relations of the class of u
        let v = eng.mp_from_poly(&var(3, 1), 0);
        let z = eng.mp_from_poly(&var(3, 2), 0);
        let rel_sub = Submodule::new(Presentation::free(r.clone(), vec![1]), pres.relations().to_vec());
        assert!(rel_sub.contains(&v, b()).unwrap());
        assert!(rel_sub.contains(&z, b()).unwrap());
    }

    #[test]
    fn finite_support_degrees_of_skyscraper() {
        let r = ring(3, &["x", "y"]);
        let f = r.field();
        // A/(x^2, y): pieces at degrees 0 and 1
        let i = Ideal::new(r.clone(), vec![var(2, 0).mul(&var(2, 0), f).unwrap(), var(2, 1)]).unwrap();
        let m = Presentation::cyclic(&i);
        assert_eq!(m.finite_length(b()).unwrap(), Some(2));
        assert_eq!(m.finite_support_degrees(b()).unwrap(), vec![0, 1]);
    }
}
