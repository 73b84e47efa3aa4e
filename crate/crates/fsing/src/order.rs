//! Monomial orders: weighted grevlex and block elimination orders, plus the
//! position-over-term extension to free modules.
//!
//! Both orders are total, multiplicative and have 1 as the minimal monomial;
//! the elimination order with front block `k` has the property that a lead
//! term free of the first `k` variables forces the whole element into the
//! back subring.

use crate::ring::{Expo, PolyRing};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Weighted degree first, ties by reverse lexicography.
    Grevlex,
    /// Grevlex on the first `front` variables, ties by grevlex on the rest.
    Elim { front: usize },
}

fn grevlex_slice(ring: &PolyRing, a: &[u16], b: &[u16], lo: usize, hi: usize) -> Ordering {
    let w = ring.weights();
    let mut da = 0i64;
    let mut db = 0i64;
    for i in lo..hi {
        da += a[i] as i64 * w[i] as i64;
        db += b[i] as i64 * w[i] as i64;
    }
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // reverse lex: the last variable where they differ decides, with the
    // smaller exponent winning
    for i in (lo..hi).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, ring: &PolyRing, a: &Expo, b: &Expo) -> Ordering {
        let n = ring.n();
        match self {
            MonomialOrder::Grevlex => grevlex_slice(ring, a, b, 0, n),
            MonomialOrder::Elim { front } => {
                let k = (*front).min(n);
                match grevlex_slice(ring, a, b, 0, k) {
                    Ordering::Equal => grevlex_slice(ring, a, b, k, n),
                    other => other,
                }
            }
        }
    }

    /// Position-over-term order on module monomials `x^a e_c`: smaller
    /// component index dominates, ties decided by the monomial order.
    pub fn cmp_module(&self, ring: &PolyRing, (ca, ea): (u32, &Expo), (cb, eb): (u32, &Expo)) -> Ordering {
        match cb.cmp(&ca) {
            Ordering::Equal => self.cmp(ring, ea, eb),
            other => other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ring::{expo_mul, expo_zero};

    fn ring4() -> PolyRing {
        PolyRing::standard(PrimeField::new(5).unwrap(), &["a", "b", "c", "d"]).unwrap()
    }

    fn e(v: &[u16]) -> Expo {
        v.iter().copied().collect()
    }

    #[test]
    fn grevlex_basics() {
        let r = ring4();
        let o = MonomialOrder::Grevlex;
        // degree decides first
        assert_eq!(o.cmp(&r, &e(&[2, 0, 0, 0]), &e(&[1, 0, 0, 0])), Ordering::Greater);
        // bc > ad: difference (-1,1,1,-1), last nonzero negative
        assert_eq!(o.cmp(&r, &e(&[0, 1, 1, 0]), &e(&[1, 0, 0, 1])), Ordering::Greater);
        // 1 is minimal
        assert_eq!(o.cmp(&r, &expo_zero(4), &e(&[0, 0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn grevlex_multiplicative() {
        let r = ring4();
        let o = MonomialOrder::Grevlex;
        let a = e(&[0, 1, 1, 0]);
        let b = e(&[1, 0, 0, 1]);
        let m = e(&[1, 2, 0, 3]);
        let am = expo_mul(&a, &m).unwrap();
        let bm = expo_mul(&b, &m).unwrap();
        assert_eq!(o.cmp(&r, &a, &b), o.cmp(&r, &am, &bm));
    }

    #[test]
    fn elimination_front_dominates() {
        let r = ring4();
        let o = MonomialOrder::Elim { front: 1 };
        // any power of a beats anything a-free
        assert_eq!(o.cmp(&r, &e(&[1, 0, 0, 0]), &e(&[0, 9, 9, 9])), Ordering::Greater);
        // a-free monomials fall back to grevlex on the rest
        assert_eq!(o.cmp(&r, &e(&[0, 1, 1, 0]), &e(&[0, 0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn module_pot_order() {
        let r = ring4();
        let o = MonomialOrder::Grevlex;
        let x = e(&[1, 0, 0, 0]);
        let one = expo_zero(4);
        // lower component dominates regardless of monomial
        assert_eq!(o.cmp_module(&r, (0, &one), (1, &x)), Ordering::Greater);
        assert_eq!(o.cmp_module(&r, (2, &x), (2, &one)), Ordering::Greater);
    }
}
