//! Homogeneous ideal presentations and ideal-theoretic operations: colon,
//! bracket powers, intersection by the one-extra-variable trick, Hilbert
//! samples and Krull dimension.

use crate::error::{Error, Result};
use crate::groebner::{Budget, GbEngine, ModPoly};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{expo_divides, Expo, PolyRing};
use std::sync::{Arc, OnceLock};

/// A homogeneous ideal of a weighted polynomial ring, with a lazily
/// computed, write-once reduced Groebner basis for grevlex.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    gb: Arc<OnceLock<Arc<Vec<Polynomial>>>>,
}

impl Ideal {
    pub fn new(ring: Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Self> {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            if !g.is_homogeneous(&ring) {
                return Err(Error::NonHomogeneous(ring.poly_string(g)));
            }
        }
        Ok(Ideal { ring, gens, gb: Arc::new(OnceLock::new()) })
    }

    pub fn zero(ring: Arc<PolyRing>) -> Self {
        Ideal { ring, gens: Vec::new(), gb: Arc::new(OnceLock::new()) }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced grevlex Groebner basis; cached after first success.
    pub fn gb(&self, budget: Budget) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(g) = self.gb.get() {
            return Ok(g.clone());
        }
        let eng = GbEngine::new(&self.ring, MonomialOrder::Grevlex, budget);
        let basis = Arc::new(eng.ideal_reduced_gb(&self.gens)?);
        let _ = self.gb.set(basis.clone());
        Ok(self.gb.get().expect("just set").clone())
    }

    pub fn normal_form(&self, f: &Polynomial, budget: Budget) -> Result<Polynomial> {
        let gb = self.gb(budget)?;
        let eng = GbEngine::new(&self.ring, MonomialOrder::Grevlex, budget);
        eng.ideal_normal_form(f, &gb)
    }

    pub fn contains(&self, f: &Polynomial, budget: Budget) -> Result<bool> {
        Ok(self.normal_form(f, budget)?.is_zero())
    }

    pub fn is_unit_ideal(&self, budget: Budget) -> Result<bool> {
        let gb = self.gb(budget)?;
        Ok(gb.iter().any(|g| g.unit_constant().is_some()))
    }

    pub fn equals(&self, other: &Ideal, budget: Budget) -> Result<bool> {
        for g in other.gens() {
            if !self.contains(g, budget)? {
                return Ok(false);
            }
        }
        for g in self.gens() {
            if !other.contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `I + (extra)`, e.g. the quotient ideal for a deformation step.
    pub fn plus(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    /// Bracket power `I^[q]`, `q = p^e`: generator exponents scale by `q`.
    pub fn bracket_power(&self, e: u32) -> Result<Ideal> {
        let q = (self.ring.p() as u64)
            .checked_pow(e)
            .ok_or(Error::ExponentOverflow)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.frobenius_power(q))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.ring.clone(), gens)
    }

    /// Colon ideal `(I : J) = { f : f J ⊆ I }`, computed in one syzygy run:
    /// `f` ranges over first coordinates of syzygies of the columns
    /// `(g_1,...,g_m)` and `h e_i` for `h` in a basis of `I`.
    pub fn colon(&self, other: &Ideal, budget: Budget) -> Result<Ideal> {
        let j_gens: Vec<&Polynomial> = other.gens.iter().filter(|g| !g.is_zero()).collect();
        if j_gens.is_empty() {
            // (I : 0) = (1)
            return Ideal::new(self.ring.clone(), vec![Polynomial::one(self.ring.n())]);
        }
        let m = j_gens.len();
        let eng = GbEngine::new(&self.ring, MonomialOrder::Grevlex, budget);
        let mut vectors: Vec<ModPoly> = Vec::new();
        let cols: Vec<Polynomial> = j_gens.iter().map(|g| (*g).clone()).collect();
        vectors.push(eng.mp_from_columns(&cols));
        let i_basis = self.gb(budget)?;
        for h in i_basis.iter() {
            for comp in 0..m {
                vectors.push(eng.mp_from_poly(h, comp as u32));
            }
        }
        let (_, syz) = eng.gb_with_syzygies(&vectors, m)?;
        let mut gens = Vec::new();
        for s in &syz {
            let coeffs = eng.mp_to_columns(s, vectors.len());
            if !coeffs[0].is_zero() {
                gens.push(coeffs[0].clone());
            }
        }
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn colon_poly(&self, g: &Polynomial, budget: Budget) -> Result<Ideal> {
        let j = Ideal::new(self.ring.clone(), vec![g.clone()])?;
        self.colon(&j, budget)
    }

    /// Intersection via elimination of `t` from `t I + (1 - t) J`.
    pub fn intersect(&self, other: &Ideal, budget: Budget) -> Result<Ideal> {
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        let ext = Arc::new(self.ring.extend_front(&[("@t", 1)])?);
        let lift = |f: &Polynomial| -> Polynomial {
            let terms = f
                .terms()
                .iter()
                .map(|(e, c)| {
                    let mut le = Expo::new();
                    le.push(0);
                    le.extend(e.iter().copied());
                    (le, *c)
                })
                .collect();
            Polynomial::from_terms(self.ring.field(), terms)
        };
        let t = Polynomial::variable(ext.n(), 0);
        let one_minus_t = Polynomial::one(ext.n()).sub(&t, ext.field());
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(t.mul(&lift(f), ext.field())?);
        }
        for g in &other.gens {
            gens.push(one_minus_t.mul(&lift(g), ext.field())?);
        }
        let back = eliminate(&ext, &gens, 1, budget)?;
        let proj: Vec<Polynomial> = back
            .iter()
            .map(|f| {
                let terms = f
                    .terms()
                    .iter()
                    .map(|(e, c)| (e.iter().skip(1).copied().collect(), *c))
                    .collect();
                Polynomial::from_terms(self.ring.field(), terms)
            })
            .collect();
        Ideal::new(self.ring.clone(), proj)
    }

    /// Lead exponents of the reduced basis — the lead-term ideal.
    pub fn lead_exponents(&self, budget: Budget) -> Result<Vec<Expo>> {
        let gb = self.gb(budget)?;
        let eng = GbEngine::new(&self.ring, MonomialOrder::Grevlex, budget);
        let mut leads = Vec::new();
        for g in gb.iter() {
            let m = eng.mp_from_poly(g, 0);
            if let Some((_, e, _)) = m.lead() {
                leads.push(e.clone());
            }
        }
        Ok(leads)
    }

    /// Counts standard monomials of each weighted degree in the range —
    /// the Hilbert function of `A/I` sampled degreewise.
    pub fn hilbert_sample(&self, lo: i64, hi: i64, budget: Budget) -> Result<Vec<usize>> {
        let leads = self.lead_exponents(budget)?;
        let mut out = Vec::new();
        for d in lo..=hi {
            let count = self
                .ring
                .monomials_of_wdeg(d)
                .iter()
                .filter(|m| !leads.iter().any(|l| expo_divides(l, m)))
                .count();
            out.push(count);
        }
        Ok(out)
    }

    /// Krull dimension of `A/I` via maximal independent variable sets
    /// modulo the lead-term ideal.
    pub fn krull_dim(&self, budget: Budget) -> Result<usize> {
        if self.is_unit_ideal(budget)? {
            return Err(Error::UnitIdeal);
        }
        let leads = self.lead_exponents(budget)?;
        let n = self.ring.n();
        let mut best = 0usize;
        for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            // S independent iff no lead monomial is supported inside S
            let independent = !leads.iter().any(|l| {
                l.iter().enumerate().all(|(i, &a)| a == 0 || (mask >> i) & 1 == 1)
            });
            if independent {
                best = size;
            }
        }
        Ok(best)
    }
}

/// Elements of the reduced basis free of the first `front` variables —
/// the elimination ideal, still expressed in the extended ring.
pub fn eliminate(
    ring: &PolyRing,
    gens: &[Polynomial],
    front: usize,
    budget: Budget,
) -> Result<Vec<Polynomial>> {
    let eng = GbEngine::new(ring, MonomialOrder::Elim { front }, budget);
    let gb = eng.ideal_reduced_gb(gens)?;
    Ok(gb
        .into_iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(e, _)| e.iter().take(front).all(|&a| a == 0))
        })
        .collect())
}
