//! Multivariate polynomials over a prime field.
//!
//! Terms are stored sorted in descending plain-lex order of the exponent
//! vector with no zero coefficients; this canonical layout is independent of
//! any monomial order, so equality and hashing are structural. The Groebner
//! engine re-sorts terms under its active order internally.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::ring::{expo_mul, expo_scale, expo_zero, Expo, PolyRing};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    /// `(exponent, coefficient)` pairs, lex-descending, coefficients nonzero.
    terms: Vec<(Expo, u32)>,
}

/// Weighted degree of a nonzero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WDegree {
    Homogeneous(i64),
    NonHomogeneous,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one(n: usize) -> Self {
        Polynomial { terms: vec![(expo_zero(n), 1)] }
    }

    pub fn constant(n: usize, field: PrimeField, c: u32) -> Self {
        let c = c % field.p();
        if c == 0 {
            Self::zero()
        } else {
            Polynomial { terms: vec![(expo_zero(n), c)] }
        }
    }

    pub fn variable(n: usize, i: usize) -> Self {
        Polynomial { terms: vec![(crate::ring::expo_unit(n, i, 1), 1)] }
    }

    pub fn monomial(e: Expo, c: u32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Polynomial { terms: vec![(e, c)] }
        }
    }

    /// Canonicalizes an arbitrary term list: merges duplicates, drops zeros.
    pub fn from_terms(field: PrimeField, terms: Vec<(Expo, u32)>) -> Self {
        let mut map: BTreeMap<Expo, u32> = BTreeMap::new();
        for (e, c) in terms {
            let c = c % field.p();
            if c == 0 {
                continue;
            }
            let slot = map.entry(e).or_insert(0);
            *slot = field.add(*slot, c);
        }
        let mut out: Vec<(Expo, u32)> = map.into_iter().filter(|(_, c)| *c != 0).collect();
        out.reverse();
        Polynomial { terms: out }
    }

    pub fn terms(&self) -> &[(Expo, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|&a| a == 0)
    }

    /// Nonzero constant (degree-0 unit) coefficient, if this is one.
    pub fn unit_constant(&self) -> Option<u32> {
        if self.is_constant() {
            Some(self.terms[0].1)
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Polynomial, field: PrimeField) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(self.terms[i].1, other.terms[j].1);
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self, field: PrimeField) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), field.neg(*c))).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial, field: PrimeField) -> Polynomial {
        self.add(&other.neg(field), field)
    }

    pub fn scale(&self, c: u32, field: PrimeField) -> Polynomial {
        let c = c % field.p();
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(e, a)| (e.clone(), field.mul(*a, c))).collect(),
        }
    }

    /// Multiplies by the single term `c * x^e`.
    pub fn term_mul(&self, e: &Expo, c: u32, field: PrimeField) -> Result<Polynomial> {
        let c = c % field.p();
        if c == 0 {
            return Ok(Polynomial::zero());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (a, b) in &self.terms {
            terms.push((expo_mul(a, e)?, field.mul(*b, c)));
        }
        // multiplying every exponent by the same monomial preserves lex order
        Ok(Polynomial { terms })
    }

    pub fn mul(&self, other: &Polynomial, field: PrimeField) -> Result<Polynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero());
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: BTreeMap<Expo, u32> = BTreeMap::new();
        for (e, c) in &small.terms {
            for (a, b) in &large.terms {
                let key = expo_mul(e, a)?;
                let slot = acc.entry(key).or_insert(0);
                *slot = field.add(*slot, field.mul(*c, *b));
            }
        }
        let mut out: Vec<(Expo, u32)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        out.reverse();
        Ok(Polynomial { terms: out })
    }

    pub fn pow(&self, mut e: u64, field: PrimeField, n: usize) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = Polynomial::one(n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, field)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, field)?;
            }
        }
        Ok(acc)
    }

    /// `f^(p^e)` computed through the Frobenius: exponents scale by `q`,
    /// coefficients are fixed by `c^q = c` over the prime field.
    pub fn frobenius_power(&self, q: u64) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            terms.push((expo_scale(e, q)?, *c));
        }
        Ok(Polynomial { terms })
    }

    /// Weighted degree, or the non-homogeneity marker; zero is an error.
    pub fn weighted_degree(&self, ring: &PolyRing) -> Result<WDegree> {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Err(Error::ZeroPolynomial);
        };
        let d = ring.wdeg(first);
        for (e, _) in it {
            if ring.wdeg(e) != d {
                return Ok(WDegree::NonHomogeneous);
            }
        }
        Ok(WDegree::Homogeneous(d))
    }

    pub fn is_homogeneous(&self, ring: &PolyRing) -> bool {
        matches!(self.weighted_degree(ring), Ok(WDegree::Homogeneous(_)) | Err(Error::ZeroPolynomial))
    }

    /// Degree of a homogeneous polynomial; errors on zero or mixed input.
    pub fn homogeneous_degree(&self, ring: &PolyRing) -> Result<i64> {
        match self.weighted_degree(ring)? {
            WDegree::Homogeneous(d) => Ok(d),
            WDegree::NonHomogeneous => Err(Error::NonHomogeneous(ring.poly_string(self))),
        }
    }

    pub fn max_wdeg(&self, ring: &PolyRing) -> i64 {
        self.terms.iter().map(|(e, _)| ring.wdeg(e)).max().unwrap_or(0)
    }
}

impl PolyRing {
    /// Deterministic human-readable rendering; terms in storage order.
    pub fn poly_string(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let p = self.p();
        let mut out = String::new();
        for (idx, (e, c)) in f.terms().iter().enumerate() {
            // render large residues as subtraction for readability
            let (sign_neg, mag) = if *c > p / 2 { (true, p - *c) } else { (false, *c) };
            if idx == 0 {
                if sign_neg {
                    out.push_str("-");
                }
            } else if sign_neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = self.monomial_string(e);
            if mono == "1" {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", mag, mono));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn fedder_singh_ring() -> PolyRing {
        PolyRing::new(
            f5(),
            vec!["u".into(), "v".into(), "y".into(), "z".into()],
            vec![2, 2, 1, 2],
        )
        .unwrap()
    }

    #[test]
    fn weighted_degree_examples() {
        let r = fedder_singh_ring();
        let u = Polynomial::variable(4, 0);
        let v = Polynomial::variable(4, 1);
        let y = Polynomial::variable(4, 2);
        let z = Polynomial::variable(4, 3);
        let uv = u.mul(&v, r.field()).unwrap();
        assert_eq!(uv.weighted_degree(&r).unwrap(), WDegree::Homogeneous(4));
        // z*(v - y^2): deg zv = 2+2, deg z y^2 = 2+1+1
        let y2 = y.mul(&y, r.field()).unwrap();
        let g = z.mul(&v.sub(&y2, r.field()), r.field()).unwrap();
        assert_eq!(g.weighted_degree(&r).unwrap(), WDegree::Homogeneous(4));

        let std = PolyRing::standard(f5(), &["x", "y"]).unwrap();
        let x = Polynomial::variable(2, 0);
        let yy = Polynomial::variable(2, 1);
        let mixed = x.add(&yy.mul(&yy, std.field()).unwrap(), std.field());
        assert_eq!(mixed.weighted_degree(&std).unwrap(), WDegree::NonHomogeneous);
        assert_eq!(Polynomial::zero().weighted_degree(&std).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn frobenius_power_squares_char2() {
        let f2 = PrimeField::new(2).unwrap();
        let r = PolyRing::standard(f2, &["x", "y"]).unwrap();
        let x = Polynomial::variable(2, 0);
        let y = Polynomial::variable(2, 1);
        let s = x.add(&y, f2);
        let sq = s.frobenius_power(2).unwrap();
        assert_eq!(sq, s.mul(&s, f2).unwrap());
        assert_eq!(r.poly_string(&sq), "x^2 + y^2");
    }

    #[test]
    fn arithmetic_identities() {
        let field = f5();
        let x = Polynomial::variable(2, 0);
        let y = Polynomial::variable(2, 1);
        let a = x.add(&y.scale(3, field), field);
        let b = y.sub(&x, field);
        let c = x.mul(&y, field).unwrap().add(&Polynomial::one(2), field);
        // commutativity and distributivity
        assert_eq!(a.mul(&b, field).unwrap(), b.mul(&a, field).unwrap());
        let lhs = a.mul(&b.add(&c, field), field).unwrap();
        let rhs = a.mul(&b, field).unwrap().add(&a.mul(&c, field).unwrap(), field);
        assert_eq!(lhs, rhs);
        // cancellation
        assert!(a.sub(&a, field).is_zero());
        // pow
        let a3 = a.pow(3, field, 2).unwrap();
        assert_eq!(a3, a.mul(&a, field).unwrap().mul(&a, field).unwrap());
    }

    #[test]
    fn rendering() {
        let r = fedder_singh_ring();
        let v = Polynomial::variable(4, 1);
        let y = Polynomial::variable(4, 2);
        let y2 = y.mul(&y, r.field()).unwrap();
        let g = v.sub(&y2, r.field());
        assert_eq!(r.poly_string(&g), "v - y^2");
        assert_eq!(r.poly_string(&Polynomial::zero()), "0");
        assert_eq!(r.poly_string(&Polynomial::one(4)), "1");
    }
}
