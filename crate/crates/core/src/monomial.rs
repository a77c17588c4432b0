//! Squarefree monomials of the boolean ring and the graded reverse
//! lexicographic order.
//!
//! A monomial is a set of variables. Because `x^2 = x` in the boolean ring,
//! multiplication is set union and divisibility is set inclusion. Variables
//! are 0-based internally; `x1` (index 0) is the largest variable.

use std::cmp::Ordering;
use std::fmt;

#[cfg(not(feature = "vars-256"))]
const WORDS: usize = 2;
#[cfg(feature = "vars-256")]
const WORDS: usize = 4;

/// Largest number of variables a [`Monomial`] can hold.
pub const MAX_VARS: usize = WORDS * 64;

/// A squarefree monomial, stored as a fixed-width bitset over the variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    bits: [u64; WORDS],
}

impl Monomial {
    /// The unit monomial `1`.
    pub const ONE: Monomial = Monomial { bits: [0; WORDS] };

    pub fn one() -> Self {
        Self::ONE
    }

    /// The monomial consisting of the single variable `v` (0-based).
    pub fn var(v: usize) -> Self {
        assert!(
            v < MAX_VARS,
            "variable index {v} exceeds MAX_VARS = {MAX_VARS}"
        );
        let mut m = Self::ONE;
        m.bits[v / 64] |= 1 << (v % 64);
        m
    }

    /// Builds a monomial from 0-based variable indices. Repeats collapse.
    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        vars.into_iter()
            .fold(Self::ONE, |m, v| m.mul(&Self::var(v)))
    }

    pub fn is_one(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn degree(&self) -> u32 {
        self.bits.iter().map(|w| w.count_ones()).sum()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VARS && self.bits[v / 64] >> (v % 64) & 1 == 1
    }

    /// Variables in ascending index order.
    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Largest variable index present, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.bits
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(wi, &w)| wi * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Product in the boolean ring (variable union).
    #[must_use]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut bits = self.bits;
        for (b, o) in bits.iter_mut().zip(other.bits.iter()) {
            *b |= o;
        }
        Monomial { bits }
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.bits
            .iter()
            .zip(other.bits.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[must_use]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.mul(other)
    }

    /// Set difference `self \ other`, regardless of divisibility.
    #[must_use]
    pub fn without(&self, other: &Monomial) -> Monomial {
        let mut bits = self.bits;
        for (b, o) in bits.iter_mut().zip(other.bits.iter()) {
            *b &= !o;
        }
        Monomial { bits }
    }

    /// Exact quotient `self / divisor`; `None` when `divisor` does not divide `self`.
    pub fn quot(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor.divides(self).then(|| self.without(divisor))
    }

    /// True when no variable occurs in both.
    pub fn is_disjoint(&self, other: &Monomial) -> bool {
        self.bits
            .iter()
            .zip(other.bits.iter())
            .all(|(a, b)| a & b == 0)
    }
}

/// Graded reverse lexicographic comparison.
///
/// Higher degree wins; on equal degree the monomial that lacks the
/// highest-indexed differing variable is the larger one.
pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for w in (0..WORDS).rev() {
            let diff = a.bits[w] ^ b.bits[w];
            if diff != 0 {
                let top = 63 - diff.leading_zeros();
                return if a.bits[w] >> top & 1 == 1 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    })
}

/// Compares the products `a1*b1` and `a2*b2` taken in the full polynomial
/// ring, where a variable shared by both factors appears squared.
///
/// This is the order the boolean computation inherits from the ring with
/// explicit field polynomials; it decides between sides of a product when
/// one of them is not squarefree.
pub fn cmp_products(a1: &Monomial, b1: &Monomial, a2: &Monomial, b2: &Monomial) -> Ordering {
    let d1 = a1.degree() + b1.degree();
    let d2 = a2.degree() + b2.degree();
    d1.cmp(&d2).then_with(|| {
        for w in (0..WORDS).rev() {
            let lo1 = a1.bits[w] ^ b1.bits[w];
            let hi1 = a1.bits[w] & b1.bits[w];
            let lo2 = a2.bits[w] ^ b2.bits[w];
            let hi2 = a2.bits[w] & b2.bits[w];
            let diff = (lo1 ^ lo2) | (hi1 ^ hi2);
            if diff != 0 {
                let top = 63 - diff.leading_zeros();
                let e1 = (lo1 >> top & 1) + 2 * (hi1 >> top & 1);
                let e2 = (lo2 >> top & 1) + 2 * (hi2 >> top & 1);
                // smaller exponent at the last differing variable is larger
                return e2.cmp(&e1);
            }
        }
        Ordering::Equal
    })
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, v) in self.vars().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{}", v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
pub(crate) fn m(vars: &[usize]) -> Monomial {
    // 1-based helper for tests, matching the printed form
    Monomial::from_vars(vars.iter().map(|v| v - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn mul_examples() {
        assert_eq!(m(&[8]).mul(&m(&[1, 2, 6, 8])), m(&[1, 2, 6, 8]));
        assert_eq!(Monomial::ONE.mul(&m(&[3, 4])), m(&[3, 4]));
        assert_eq!(m(&[2]).mul(&m(&[7])), m(&[2, 7]));
    }

    #[test]
    fn divisibility_lcm_quotient() {
        let a = m(&[1, 2, 5, 6]);
        let b = m(&[1, 2, 6, 8]);
        let l = a.lcm(&b);
        assert_eq!(l, m(&[1, 2, 5, 6, 8]));
        assert_eq!(l.quot(&a), Some(m(&[8])));
        assert_eq!(l.quot(&b), Some(m(&[5])));
        assert!(a.divides(&a));
        assert_eq!(a.quot(&a), Some(Monomial::ONE));
        assert!(m(&[2, 3, 4]).divides(&m(&[1, 2, 3, 4, 9])));
        assert_eq!(m(&[2, 3]).quot(&m(&[4])), None);
    }

    #[test]
    fn grevlex_examples() {
        assert_eq!(
            grevlex_cmp(&m(&[1, 2, 5, 6]), &m(&[2, 3, 7, 9])),
            Ordering::Greater
        );
        assert_eq!(grevlex_cmp(&m(&[3, 4]), &m(&[3, 4])), Ordering::Equal);
        assert_eq!(grevlex_cmp(&m(&[7]), &m(&[2, 7])), Ordering::Less);
        // x1 is the largest variable
        assert!(m(&[1]) > m(&[2]));
        assert!(Monomial::ONE < m(&[9]));
    }

    #[test]
    fn products_with_squares() {
        // x2x3x4x5x9 vs x2x3x8x9^2: same degree, x9 exponent 1 < 2
        let lhs = (m(&[4]), m(&[2, 3, 5, 9]));
        let rhs = (m(&[9]), m(&[2, 3, 8, 9]));
        assert_eq!(
            cmp_products(&lhs.0, &lhs.1, &rhs.0, &rhs.1),
            Ordering::Greater
        );
        // on disjoint factors it agrees with the boolean product
        assert_eq!(
            cmp_products(&m(&[1]), &m(&[2]), &m(&[3]), &Monomial::ONE),
            grevlex_cmp(&m(&[1, 2]), &m(&[3]))
        );
    }

    #[test]
    fn display() {
        assert_eq!(m(&[3, 4, 7]).to_string(), "x3*x4*x7");
        assert_eq!(Monomial::ONE.to_string(), "1");
        assert_eq!(m(&[100]).max_var(), Some(99));
    }

    fn arb_mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0..n, 0..n).prop_map(Monomial::from_vars)
    }

    /// Brute force grevlex on exponent vectors, straight from the definition.
    fn grevlex_vec(a: &[u8], b: &[u8]) -> Ordering {
        let da: u32 = a.iter().map(|&x| x as u32).sum();
        let db: u32 = b.iter().map(|&x| x as u32).sum();
        if da != db {
            return da.cmp(&db);
        }
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    }

    fn expo(x: &Monomial, y: &Monomial, n: usize) -> Vec<u8> {
        (0..n)
            .map(|v| x.contains(v) as u8 + y.contains(v) as u8)
            .collect()
    }

    proptest! {
        #[test]
        fn mul_laws(a in arb_mono(70), b in arb_mono(70), c in arb_mono(70)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&a), a);
            prop_assert_eq!(a.mul(&Monomial::ONE), a);
        }

        #[test]
        fn divides_iff_quotient(a in arb_mono(12), b in arb_mono(12)) {
            match b.quot(&a) {
                Some(q) => prop_assert_eq!(q.mul(&a), b),
                None => prop_assert!(!a.divides(&b)),
            }
        }

        #[test]
        fn grevlex_matches_definition(a in arb_mono(MAX_VARS), b in arb_mono(MAX_VARS)) {
            let n = MAX_VARS;
            let ea = expo(&a, &Monomial::ONE, n);
            let eb = expo(&b, &Monomial::ONE, n);
            prop_assert_eq!(grevlex_cmp(&a, &b), grevlex_vec(&ea, &eb));
            prop_assert_eq!(grevlex_cmp(&b, &a), grevlex_cmp(&a, &b).reverse());
        }

        #[test]
        fn products_match_definition(a1 in arb_mono(20), b1 in arb_mono(20), a2 in arb_mono(20), b2 in arb_mono(20)) {
            let e1 = expo(&a1, &b1, 20);
            let e2 = expo(&a2, &b2, 20);
            prop_assert_eq!(cmp_products(&a1, &b1, &a2, &b2), grevlex_vec(&e1, &e2));
        }

        #[test]
        fn grevlex_multiplicative_on_disjoint(a in arb_mono(16), b in arb_mono(16), t in arb_mono(16)) {
            let t = t.without(&a).without(&b);
            if a < b {
                prop_assert!(t.mul(&a) < t.mul(&b));
            }
        }
    }
}
