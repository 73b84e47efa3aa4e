//! Buchberger engine over free modules; ideals are the one-component case.
//!
//! Elements carry their terms sorted descending under the active order with
//! position-over-term component priority, so lead terms are O(1). S-pairs
//! are scheduled by ascending lcm degree with ties broken by creation index,
//! which makes every run fully deterministic. Syzygies come out of the same
//! engine through tracker components: a Groebner basis of
//! `span{(v_i, e_i)}` splits into basis elements of `span{v_i}` (each with
//! its certificate of membership) and generators of the syzygy module.

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{expo_div, expo_divides, expo_lcm, expo_coprime, expo_mul, expo_zero, Expo, PolyRing};
use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};

#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Abort threshold on reduced S-pairs; hitting it yields an explicit
    /// "unknown" upstream, never a wrong verdict.
    pub pair_cap: usize,
    /// Iteration cap for the descending image chain of the Cartier operator.
    pub hsl_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { pair_cap: 200_000, hsl_cap: 30 }
    }
}

/// Element of a free module `A^ncomp`: `(component, exponent, coefficient)`
/// triples sorted descending under the engine's module order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModPoly {
    pub terms: Vec<(u32, Expo, u32)>,
}

impl ModPoly {
    pub fn zero() -> Self {
        ModPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<(u32, &Expo, u32)> {
        self.terms.first().map(|(c, e, a)| (*c, e, *a))
    }

    /// Largest component index appearing (for sizing), if any.
    pub fn max_comp(&self) -> Option<u32> {
        self.terms.iter().map(|(c, _, _)| *c).max()
    }
}

pub struct GbEngine<'r> {
    pub ring: &'r PolyRing,
    pub order: MonomialOrder,
    pub budget: Budget,
    spairs: Cell<usize>,
}

impl<'r> GbEngine<'r> {
    pub fn new(ring: &'r PolyRing, order: MonomialOrder, budget: Budget) -> Self {
        GbEngine { ring, order, budget, spairs: Cell::new(0) }
    }

    pub fn grevlex(ring: &'r PolyRing) -> Self {
        Self::new(ring, MonomialOrder::Grevlex, Budget::default())
    }

    /// Number of S-pair reductions performed so far (deterministic).
    pub fn spairs_processed(&self) -> usize {
        self.spairs.get()
    }

    fn cmp_mm(&self, a: (u32, &Expo), b: (u32, &Expo)) -> Ordering {
        self.order.cmp_module(self.ring, a, b)
    }

    // ---- ModPoly construction & arithmetic -------------------------------

    /// Builds a module element from its component polynomials.
    pub fn mp_from_columns(&self, cols: &[Polynomial]) -> ModPoly {
        let mut terms = Vec::new();
        for (c, p) in cols.iter().enumerate() {
            for (e, a) in p.terms() {
                terms.push((c as u32, e.clone(), *a));
            }
        }
        self.mp_sorted(terms)
    }

    pub fn mp_from_poly(&self, p: &Polynomial, comp: u32) -> ModPoly {
        let terms = p.terms().iter().map(|(e, a)| (comp, e.clone(), *a)).collect();
        self.mp_sorted(terms)
    }

    fn mp_sorted(&self, mut terms: Vec<(u32, Expo, u32)>) -> ModPoly {
        terms.sort_by(|(ca, ea, _), (cb, eb, _)| self.cmp_mm((*cb, eb), (*ca, ea)));
        ModPoly { terms }
    }

    pub fn mp_to_columns(&self, m: &ModPoly, ncomp: usize) -> Vec<Polynomial> {
        let mut cols: Vec<Vec<(Expo, u32)>> = vec![Vec::new(); ncomp];
        for (c, e, a) in &m.terms {
            cols[*c as usize].push((e.clone(), *a));
        }
        cols.into_iter().map(|t| Polynomial::from_terms(self.ring.field(), t)).collect()
    }

    pub fn mp_add(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let f = self.ring.field();
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let ta = &a.terms[i];
            let tb = &b.terms[j];
            match self.cmp_mm((ta.0, &ta.1), (tb.0, &tb.1)) {
                Ordering::Greater => {
                    out.push(ta.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(tb.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(ta.2, tb.2);
                    if c != 0 {
                        out.push((ta.0, ta.1.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        ModPoly { terms: out }
    }

    pub fn mp_neg(&self, a: &ModPoly) -> ModPoly {
        let f = self.ring.field();
        ModPoly { terms: a.terms.iter().map(|(c, e, x)| (*c, e.clone(), f.neg(*x))).collect() }
    }

    pub fn mp_sub(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        self.mp_add(a, &self.mp_neg(b))
    }

    /// Multiplies by the term `c * x^e`; the sort order is preserved.
    pub fn mp_term_mul(&self, m: &ModPoly, e: &Expo, c: u32) -> Result<ModPoly> {
        let f = self.ring.field();
        let c = c % f.p();
        if c == 0 {
            return Ok(ModPoly::zero());
        }
        let mut terms = Vec::with_capacity(m.terms.len());
        for (comp, a, x) in &m.terms {
            terms.push((*comp, expo_mul(a, e)?, f.mul(*x, c)));
        }
        Ok(ModPoly { terms })
    }

    /// Multiplies by a full polynomial.
    pub fn mp_poly_mul(&self, m: &ModPoly, p: &Polynomial) -> Result<ModPoly> {
        let mut acc = ModPoly::zero();
        for (e, c) in p.terms() {
            acc = self.mp_add(&acc, &self.mp_term_mul(m, e, *c)?);
        }
        Ok(acc)
    }

    pub fn mp_monic(&self, m: &ModPoly) -> Result<ModPoly> {
        let Some((_, _, lc)) = m.lead() else { return Ok(m.clone()) };
        let inv = self.ring.field().inv(lc)?;
        let f = self.ring.field();
        Ok(ModPoly { terms: m.terms.iter().map(|(c, e, x)| (*c, e.clone(), f.mul(*x, inv))).collect() })
    }

    // ---- Division --------------------------------------------------------

    /// Full normal form of `f` against `basis` (assumed monic). When
    /// `records` is given it accumulates quotients: on return
    /// `f = sum records[i] * basis[i] + remainder` exactly.
    pub fn reduce_full(
        &self,
        f: &ModPoly,
        basis: &[ModPoly],
        records: Option<&mut Vec<Polynomial>>,
    ) -> Result<ModPoly> {
        let index = self.component_index(basis);
        self.reduce_full_indexed(f, basis, &index, records)
    }

    fn component_index(&self, basis: &[ModPoly]) -> Vec<Vec<usize>> {
        let ncomp = basis
            .iter()
            .filter_map(|g| g.lead().map(|(c, _, _)| c as usize + 1))
            .max()
            .unwrap_or(0);
        let mut index: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
        for (i, g) in basis.iter().enumerate() {
            if let Some((c, _, _)) = g.lead() {
                index[c as usize].push(i);
            }
        }
        index
    }

    fn reduce_full_indexed(
        &self,
        f: &ModPoly,
        basis: &[ModPoly],
        index: &[Vec<usize>],
        mut records: Option<&mut Vec<Polynomial>>,
    ) -> Result<ModPoly> {
        let field = self.ring.field();
        let mut rec_terms: Vec<Vec<(Expo, u32)>> = if records.is_some() {
            vec![Vec::new(); basis.len()]
        } else {
            Vec::new()
        };
        let mut remainder: Vec<(u32, Expo, u32)> = Vec::new();
        let mut work = f.clone();
        'outer: while let Some((c, e, co)) = work.lead().map(|(c, e, a)| (c, e.clone(), a)) {
            if let Some(comp_list) = index.get(c as usize) {
                for &gi in comp_list {
                    let (_, ge, _) = basis[gi].lead().expect("basis element nonzero");
                    if let Some(q) = expo_div(&e, ge) {
                        let sub = self.mp_term_mul(&basis[gi], &q, co)?;
                        work = self.mp_sub(&work, &sub);
                        if records.is_some() {
                            rec_terms[gi].push((q, co));
                        }
                        continue 'outer;
                    }
                }
            }
            remainder.push(work.terms.remove(0));
        }
        if let Some(recs) = records.as_deref_mut() {
            recs.clear();
            for t in rec_terms {
                recs.push(Polynomial::from_terms(field, t));
            }
        }
        Ok(ModPoly { terms: remainder })
    }

    // ---- Buchberger ------------------------------------------------------

    /// Groebner basis of the module generated by `gens`, interreduced to the
    /// unique reduced basis for the engine's order.
    pub fn module_reduced_gb(&self, gens: &[ModPoly]) -> Result<Vec<ModPoly>> {
        let gb = self.buchberger(gens)?;
        self.interreduce(gb)
    }

    fn spair_degree(&self, gi: &ModPoly, gj: &ModPoly) -> i64 {
        let (_, ei, _) = gi.lead().unwrap();
        let (_, ej, _) = gj.lead().unwrap();
        self.ring.wdeg(&expo_lcm(ei, ej))
    }

    pub fn buchberger(&self, gens: &[ModPoly]) -> Result<Vec<ModPoly>> {
        let mut basis: Vec<ModPoly> = Vec::new();
        for g in gens {
            if !g.is_zero() {
                basis.push(self.mp_monic(g)?);
            }
        }
        let mut index = self.component_index(&basis);
        let grow_index = |index: &mut Vec<Vec<usize>>, basis: &[ModPoly], i: usize| {
            let (c, _, _) = basis[i].lead().unwrap();
            if index.len() <= c as usize {
                index.resize(c as usize + 1, Vec::new());
            }
            index[c as usize].push(i);
        };

        // queue keyed by (lcm degree, creation id) for the normal strategy
        let mut queue: BinaryHeap<std::cmp::Reverse<(i64, u64, u32, u32)>> = BinaryHeap::new();
        let mut next_id = 0u64;
        let push_pairs = |queue: &mut BinaryHeap<_>, basis: &[ModPoly], j: usize, next_id: &mut u64| {
            let (cj, _, _) = basis[j].lead().unwrap();
            for i in 0..j {
                let (ci, _, _) = basis[i].lead().unwrap();
                if ci == cj {
                    let d = self.spair_degree(&basis[i], &basis[j]);
                    queue.push(std::cmp::Reverse((d, *next_id, i as u32, j as u32)));
                    *next_id += 1;
                }
            }
        };
        for j in 0..basis.len() {
            push_pairs(&mut queue, &basis, j, &mut next_id);
        }

        let single_component = basis.iter().all(|g| g.terms.iter().all(|(c, _, _)| *c == 0));
        let mut treated: HashSet<(u32, u32)> = HashSet::new();

        while let Some(std::cmp::Reverse((_, _, i, j))) = queue.pop() {
            treated.insert((i, j));
            let (i, j) = (i as usize, j as usize);
            let (ci, ei, _) = basis[i].lead().unwrap();
            let (_, ej, _) = basis[j].lead().unwrap();

            // product criterion: sound only in the one-component case
            if single_component && expo_coprime(ei, ej) {
                continue;
            }
            // chain criterion: an already-treated intermediate divisor makes
            // this pair redundant
            let lcm = expo_lcm(ei, ej);
            let mut skip = false;
            for &k in &index[ci as usize] {
                if k == i || k == j {
                    continue;
                }
                let (_, ek, _) = basis[k].lead().unwrap();
                if expo_divides(ek, &lcm) {
                    let a = (i.min(k) as u32, i.max(k) as u32);
                    let b = (j.min(k) as u32, j.max(k) as u32);
                    if treated.contains(&a) && treated.contains(&b) {
                        skip = true;
                        break;
                    }
                }
            }
            if skip {
                continue;
            }

            let done = self.spairs.get() + 1;
            if done > self.budget.pair_cap {
                return Err(Error::PairCapExceeded { cap: self.budget.pair_cap, processed: done });
            }
            self.spairs.set(done);

            let gi = &basis[i];
            let gj = &basis[j];
            let qi = expo_div(&lcm, gi.lead().unwrap().1).unwrap();
            let qj = expo_div(&lcm, gj.lead().unwrap().1).unwrap();
            let s = self.mp_sub(&self.mp_term_mul(gi, &qi, 1)?, &self.mp_term_mul(gj, &qj, 1)?);
            let r = self.reduce_full_indexed(&s, &basis, &index, None)?;
            if !r.is_zero() {
                basis.push(self.mp_monic(&r)?);
                let new = basis.len() - 1;
                grow_index(&mut index, &basis, new);
                push_pairs(&mut queue, &basis, new, &mut next_id);
            }
        }
        Ok(basis)
    }

    /// Minimalizes and tail-reduces a Groebner basis; the result is the
    /// unique reduced basis, sorted ascending by lead term.
    pub fn interreduce(&self, basis: Vec<ModPoly>) -> Result<Vec<ModPoly>> {
        let mut sorted: Vec<ModPoly> = basis.into_iter().filter(|g| !g.is_zero()).collect();
        sorted.sort_by(|a, b| {
            let (ca, ea, _) = a.lead().unwrap();
            let (cb, eb, _) = b.lead().unwrap();
            self.cmp_mm((ca, ea), (cb, eb))
        });
        // minimal set: drop any element whose lead is a multiple of a kept lead
        let mut kept: Vec<ModPoly> = Vec::new();
        for g in sorted {
            let (c, e, _) = g.lead().unwrap();
            let redundant = kept.iter().any(|h| {
                let (hc, he, _) = h.lead().unwrap();
                hc == c && expo_divides(he, e)
            });
            if !redundant {
                kept.push(g);
            }
        }
        // tail reduction to the unique reduced basis
        for i in 0..kept.len() {
            let g = kept[i].clone();
            let others: Vec<ModPoly> =
                kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
            let r = self.reduce_full(&g, &others, None)?;
            kept[i] = self.mp_monic(&r)?;
        }
        kept.retain(|g| !g.is_zero());
        kept.sort_by(|a, b| {
            let (ca, ea, _) = a.lead().unwrap();
            let (cb, eb, _) = b.lead().unwrap();
            self.cmp_mm((ca, ea), (cb, eb))
        });
        Ok(kept)
    }

    // ---- Syzygies via tracker components ----------------------------------

    /// Given vectors `v_1..v_m` inside `A^ncomp`, computes a reduced
    /// Groebner basis of their span together with generators of the syzygy
    /// module `{ a in A^m : sum a_i v_i = 0 }`.
    ///
    /// Returned basis elements carry certificates: `basis[k].1` expresses
    /// `basis[k].0` as a combination of the input vectors.
    pub fn gb_with_syzygies(
        &self,
        vectors: &[ModPoly],
        ncomp: usize,
    ) -> Result<(Vec<(ModPoly, Vec<Polynomial>)>, Vec<ModPoly>)> {
        let m = vectors.len();
        let mut augmented = Vec::with_capacity(m);
        for (i, v) in vectors.iter().enumerate() {
            let mut terms = v.terms.clone();
            terms.push(((ncomp + i) as u32, expo_zero(self.ring.n()), 1));
            augmented.push(self.mp_sorted(terms));
        }
        let gb = self.module_reduced_gb(&augmented)?;
        let mut span_gb = Vec::new();
        let mut syz = Vec::new();
        for g in gb {
            let front: Vec<(u32, Expo, u32)> =
                g.terms.iter().filter(|(c, _, _)| (*c as usize) < ncomp).cloned().collect();
            let back: Vec<(u32, Expo, u32)> = g
                .terms
                .iter()
                .filter(|(c, _, _)| (*c as usize) >= ncomp)
                .map(|(c, e, a)| (c - ncomp as u32, e.clone(), *a))
                .collect();
            if front.is_empty() {
                syz.push(self.mp_sorted(back));
            } else {
                let cert = self.mp_to_columns(&self.mp_sorted(back), m);
                span_gb.push((ModPoly { terms: front }, cert));
            }
        }
        Ok((span_gb, syz))
    }

    // ---- Ideal-level conveniences ----------------------------------------

    pub fn ideal_reduced_gb(&self, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let mods: Vec<ModPoly> = gens.iter().map(|g| self.mp_from_poly(g, 0)).collect();
        let gb = self.module_reduced_gb(&mods)?;
        Ok(gb.into_iter().map(|g| self.mp_to_columns(&g, 1).pop().unwrap()).collect())
    }

    pub fn ideal_normal_form(&self, f: &Polynomial, gb: &[Polynomial]) -> Result<Polynomial> {
        let basis: Vec<ModPoly> = gb.iter().map(|g| self.mp_from_poly(g, 0)).collect();
        let r = self.reduce_full(&self.mp_from_poly(f, 0), &basis, None)?;
        Ok(self.mp_to_columns(&r, 1).pop().unwrap())
    }

    /// Division with memory: `f = sum q_i gb_i + r`.
    pub fn ideal_nf_with_quotients(
        &self,
        f: &Polynomial,
        gb: &[Polynomial],
    ) -> Result<(Polynomial, Vec<Polynomial>)> {
        let basis: Vec<ModPoly> = gb.iter().map(|g| self.mp_from_poly(g, 0)).collect();
        let mut records = Vec::new();
        let r = self.reduce_full(&self.mp_from_poly(f, 0), &basis, Some(&mut records))?;
        Ok((self.mp_to_columns(&r, 1).pop().unwrap(), records))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring(p: u64, vars: &[&str]) -> PolyRing {
        PolyRing::standard(PrimeField::new(p).unwrap(), vars).unwrap()
    }

    fn var(n: usize, i: usize) -> Polynomial {
        Polynomial::variable(n, i)
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(2, &["u", "v", "z"]);
        let eng = GbEngine::grevlex(&r);
        let f = r.field();
        let (u, v, z) = (var(3, 0), var(3, 1), var(3, 2));
        let gens = vec![
            u.mul(&v, f).unwrap(),
            u.mul(&z, f).unwrap(),
            v.mul(&z, f).unwrap(),
        ];
        let gb = eng.ideal_reduced_gb(&gens).unwrap();
        assert_eq!(gb.len(), 3);
        for g in &gens {
            assert!(gb.contains(g));
        }
    }

    #[test]
    fn principal_ideal() {
        let r = ring(5, &["x", "y"]);
        let eng = GbEngine::grevlex(&r);
        let gb = eng.ideal_reduced_gb(&[var(2, 0)]).unwrap();
        assert_eq!(gb, vec![var(2, 0)]);
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(2, &["u", "v", "z"]);
        let eng = GbEngine::grevlex(&r);
        let f = r.field();
        let (u, v, z) = (var(3, 0), var(3, 1), var(3, 2));
        let gb = eng
            .ideal_reduced_gb(&[
                u.mul(&v, f).unwrap(),
                u.mul(&z, f).unwrap(),
                v.mul(&z, f).unwrap(),
            ])
            .unwrap();
        let uvz = u.mul(&v, f).unwrap().mul(&z, f).unwrap();
        assert!(eng.ideal_normal_form(&uvz, &gb).unwrap().is_zero());
        let u3 = u.pow(3, f, 3).unwrap();
        assert_eq!(eng.ideal_normal_form(&u3, &gb).unwrap(), u3);
    }

    #[test]
    fn nf_quotient_record_reconstructs() {
        let r = ring(5, &["x", "y"]);
        let eng = GbEngine::grevlex(&r);
        let f = r.field();
        let x = var(2, 0);
        let y = var(2, 1);
        let g1 = x.mul(&x, f).unwrap().add(&y, f); // x^2 + y
        let g2 = x.mul(&y, f).unwrap().sub(&x, f); // xy - x
        let gb = eng.ideal_reduced_gb(&[g1, g2]).unwrap();
        let probe = x.pow(3, f, 2).unwrap().add(&y.pow(2, f, 2).unwrap(), f);
        let (rem, quots) = eng.ideal_nf_with_quotients(&probe, &gb).unwrap();
        // rebuild: sum q_i g_i + rem == probe
        let mut acc = rem.clone();
        for (q, g) in quots.iter().zip(&gb) {
            acc = acc.add(&q.mul(g, f).unwrap(), f);
        }
        assert_eq!(acc, probe);
        // no remainder term is divisible by a basis lead term
        let basis: Vec<ModPoly> = gb.iter().map(|g| eng.mp_from_poly(g, 0)).collect();
        for (e, _) in rem.terms() {
            for g in &basis {
                let (_, le, _) = g.lead().unwrap();
                assert!(!crate::ring::expo_divides(le, e));
            }
        }
    }

    #[test]
    fn grevlex_toric_relation_reduces() {
        // bc - ad with grevlex: NF(bc) = ad
        let r = ring(5, &["a", "b", "c", "d"]);
        let eng = GbEngine::grevlex(&r);
        let f = r.field();
        let (a, b, c, d) = (var(4, 0), var(4, 1), var(4, 2), var(4, 3));
        let bc = b.mul(&c, f).unwrap();
        let ad = a.mul(&d, f).unwrap();
        let g = bc.sub(&ad, f);
        let gb = eng.ideal_reduced_gb(&[g]).unwrap();
        let nf = eng.ideal_normal_form(&bc, &gb).unwrap();
        assert_eq!(nf, ad);
    }

    #[test]
    fn syzygies_of_koszul_pair() {
        // syzygies of (x, y) in A: spanned by (y, -x)
        let r = ring(5, &["x", "y"]);
        let eng = GbEngine::grevlex(&r);
        let f = r.field();
        let x = eng.mp_from_poly(&var(2, 0), 0);
        let y = eng.mp_from_poly(&var(2, 1), 0);
        let (gb, syz) = eng.gb_with_syzygies(&[x, y], 1).unwrap();
        assert_eq!(gb.len(), 2);
        assert_eq!(syz.len(), 1);
        let cols = eng.mp_to_columns(&syz[0], 2);
        // a*x + b*y = 0 with (a,b) = c*(y,-x)
        let combo = cols[0]
            .mul(&var(2, 0), f)
            .unwrap()
            .add(&cols[1].mul(&var(2, 1), f).unwrap(), f);
        assert!(combo.is_zero());
        assert!(!cols[0].is_zero());
    }

    #[test]
    fn certificates_express_gb_elements() {
        let r = ring(3, &["x", "y"]);
        let eng = GbEngine::grevlex(&r);
        let f = r.field();
        let g1 = var(2, 0).pow(2, f, 2).unwrap().sub(&var(2, 1), f); // x^2 - y
        let g2 = var(2, 0).mul(&var(2, 1), f).unwrap(); // xy
        let vecs = vec![eng.mp_from_poly(&g1, 0), eng.mp_from_poly(&g2, 0)];
        let (gb, _) = eng.gb_with_syzygies(&vecs, 1).unwrap();
        for (g, cert) in &gb {
            let gp = eng.mp_to_columns(g, 1).pop().unwrap();
            let mut acc = Polynomial::zero();
            for (q, orig) in cert.iter().zip([&g1, &g2]) {
                acc = acc.add(&q.mul(orig, f).unwrap(), f);
            }
            assert_eq!(acc, gp);
        }
    }

    #[test]
    fn pair_cap_aborts() {
        let r = ring(5, &["x", "y", "z"]);
        let eng = GbEngine::new(&r, MonomialOrder::Grevlex, Budget { pair_cap: 0, hsl_cap: 30 });
        let f = r.field();
        // lead terms x^2 and xy are not coprime, so the pair must be reduced
        let g1 = var(3, 0).pow(2, f, 3).unwrap().add(&var(3, 1).pow(2, f, 3).unwrap(), f);
        let g2 = var(3, 0).mul(&var(3, 1), f).unwrap().add(&var(3, 2).pow(2, f, 3).unwrap(), f);
        let err = eng.ideal_reduced_gb(&[g1, g2]).unwrap_err();
        assert!(matches!(err, Error::PairCapExceeded { .. }));
    }
}
