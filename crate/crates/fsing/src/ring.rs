//! Weighted polynomial ring descriptors and exponent-vector arithmetic.
//!
//! A ring is `F_p[x_1..x_n]` with positive integer weights `w_i`; the total
//! weight `D = sum w_i` drives all graded-duality degree bookkeeping
//! downstream. Exponent vectors are fixed-length inline arrays with checked
//! arithmetic, since bracket powers multiply exponents by `p^e`.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use arrayvec::ArrayVec;

pub const MAX_VARS: usize = 16;

/// Dense exponent vector of a monomial.
pub type Expo = ArrayVec<u16, MAX_VARS>;

pub fn expo_zero(n: usize) -> Expo {
    let mut e = Expo::new();
    for _ in 0..n {
        e.push(0);
    }
    e
}

pub fn expo_unit(n: usize, i: usize, k: u16) -> Expo {
    let mut e = expo_zero(n);
    e[i] = k;
    e
}

pub fn expo_mul(a: &Expo, b: &Expo) -> Result<Expo> {
    let mut out = Expo::new();
    for (x, y) in a.iter().zip(b.iter()) {
        out.push(x.checked_add(*y).ok_or(Error::ExponentOverflow)?);
    }
    Ok(out)
}

/// `a / b` when `b` divides `a`.
pub fn expo_div(a: &Expo, b: &Expo) -> Option<Expo> {
    let mut out = Expo::new();
    for (x, y) in a.iter().zip(b.iter()) {
        if x < y {
            return None;
        }
        out.push(x - y);
    }
    Some(out)
}

pub fn expo_divides(b: &Expo, a: &Expo) -> bool {
    b.iter().zip(a.iter()).all(|(y, x)| y <= x)
}

pub fn expo_lcm(a: &Expo, b: &Expo) -> Expo {
    a.iter().zip(b.iter()).map(|(x, y)| *x.max(y)).collect()
}

pub fn expo_coprime(a: &Expo, b: &Expo) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| *x == 0 || *y == 0)
}

pub fn expo_scale(a: &Expo, q: u64) -> Result<Expo> {
    let mut out = Expo::new();
    for x in a.iter() {
        let v = (*x as u64).checked_mul(q).ok_or(Error::ExponentOverflow)?;
        if v > u16::MAX as u64 {
            return Err(Error::ExponentOverflow);
        }
        out.push(v as u16);
    }
    Ok(out)
}

/// A weighted polynomial ring over a prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    weights: Vec<u32>,
}

impl PolyRing {
    pub fn new(field: PrimeField, vars: Vec<String>, weights: Vec<u32>) -> Result<Self> {
        if vars.is_empty() || vars.len() != weights.len() {
            return Err(Error::RingMismatch(
                "need at least one variable, with one weight per variable".into(),
            ));
        }
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables(MAX_VARS));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::RingMismatch("weights must be positive".into()));
        }
        Ok(PolyRing { field, vars, weights })
    }

    /// Standard grading: every variable has weight 1.
    pub fn standard(field: PrimeField, vars: &[&str]) -> Result<Self> {
        Self::new(field, vars.iter().map(|s| s.to_string()).collect(), vec![1; vars.len()])
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Total weight `D = sum w_i`, the graded dualizing twist.
    pub fn total_weight(&self) -> i64 {
        self.weights.iter().map(|&w| w as i64).sum()
    }

    pub fn wdeg(&self, e: &Expo) -> i64 {
        e.iter().zip(&self.weights).map(|(a, w)| *a as i64 * *w as i64).sum()
    }

    /// Extends the ring by fresh lead variables (used for elimination tricks).
    pub fn extend_front(&self, names: &[(&str, u32)]) -> Result<PolyRing> {
        let mut vars: Vec<String> = names.iter().map(|(n, _)| n.to_string()).collect();
        let mut weights: Vec<u32> = names.iter().map(|(_, w)| *w).collect();
        vars.extend(self.vars.iter().cloned());
        weights.extend(self.weights.iter().cloned());
        PolyRing::new(self.field, vars, weights)
    }

    /// All exponent vectors of weighted degree exactly `d`, in a fixed
    /// deterministic order (descending in the first variable, recursively).
    pub fn monomials_of_wdeg(&self, d: i64) -> Vec<Expo> {
        let mut out = Vec::new();
        if d < 0 {
            return out;
        }
        let mut cur = expo_zero(self.n());
        self.enumerate_rec(0, d, &mut cur, &mut out);
        out
    }

    fn enumerate_rec(&self, i: usize, rem: i64, cur: &mut Expo, out: &mut Vec<Expo>) {
        if i == self.n() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = self.weights[i] as i64;
        let max = rem / w;
        for a in (0..=max).rev() {
            if a > u16::MAX as i64 {
                continue;
            }
            cur[i] = a as u16;
            self.enumerate_rec(i + 1, rem - a * w, cur, out);
        }
        cur[i] = 0;
    }

    pub fn monomial_string(&self, e: &Expo) -> String {
        let mut parts = Vec::new();
        for (i, &a) in e.iter().enumerate() {
            if a == 1 {
                parts.push(self.vars[i].clone());
            } else if a > 1 {
                parts.push(format!("{}^{}", self.vars[i], a));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::standard(PrimeField::new(5).unwrap(), &["x", "y"]).unwrap()
    }

    #[test]
    fn expo_arithmetic() {
        let a: Expo = [2u16, 1].iter().copied().collect();
        let b: Expo = [1u16, 3].iter().copied().collect();
        assert_eq!(expo_mul(&a, &b).unwrap().as_slice(), &[3, 4]);
        assert_eq!(expo_lcm(&a, &b).as_slice(), &[2, 3]);
        assert!(expo_div(&a, &b).is_none());
        assert!(expo_divides(&a, &expo_lcm(&a, &b)));
        assert!(!expo_coprime(&a, &b));
        let e1 = expo_unit(2, 0, 1);
        let e2 = expo_unit(2, 1, 2);
        assert!(expo_coprime(&e1, &e2));
    }

    #[test]
    fn scale_overflow_checked() {
        let a: Expo = [40000u16, 0].iter().copied().collect();
        assert_eq!(expo_scale(&a, 2).unwrap_err(), Error::ExponentOverflow);
        assert_eq!(expo_scale(&a, 1).unwrap().as_slice(), &[40000, 0]);
    }

    #[test]
    fn weighted_degree_respects_weights() {
        let r = PolyRing::new(
            PrimeField::new(5).unwrap(),
            vec!["u".into(), "v".into(), "y".into(), "z".into()],
            vec![2, 2, 1, 2],
        )
        .unwrap();
        let uv: Expo = [1u16, 1, 0, 0].iter().copied().collect();
        assert_eq!(r.wdeg(&uv), 4);
        assert_eq!(r.total_weight(), 7);
    }

    #[test]
    fn monomial_enumeration_counts() {
        let r = ring();
        assert_eq!(r.monomials_of_wdeg(0).len(), 1);
        assert_eq!(r.monomials_of_wdeg(1).len(), 2);
        assert_eq!(r.monomials_of_wdeg(2).len(), 3);
        assert_eq!(r.monomials_of_wdeg(-1).len(), 0);
        let w = PolyRing::new(
            PrimeField::new(3).unwrap(),
            vec!["a".into(), "b".into()],
            vec![2, 3],
        )
        .unwrap();
        // degree 6: a^3, b^2
        assert_eq!(w.monomials_of_wdeg(6).len(), 2);
        // degree 1: none
        assert_eq!(w.monomials_of_wdeg(1).len(), 0);
    }
}
