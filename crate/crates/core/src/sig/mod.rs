//! Signatures, labeled polynomials and J-pairs.
//!
//! A signature is a module monomial `x^a e_i`. Signatures are ordered
//! position over term: a smaller generator index means a larger signature,
//! and within one index the monomials are compared by grevlex.
//!
//! Field polynomials `x_v^2 + x_v` are never stored. Their generators are
//! treated as having the smallest signatures of all, so every Koszul syzygy
//! against one of them has leading monomial `x_v^2 * x^a e_i`. Any signature
//! product that would contain a square is therefore rejected outright.

mod reduce;
mod rules;
mod syzygy;

pub use reduce::{is_mutant, regular_top_reduce, super_top_reducible};
pub use rules::{RuleEntry, RuleTable};
pub use syzygy::SyzygySet;

use std::cmp::Ordering;
use std::fmt;

use crate::monomial::{cmp_products, Monomial};
use crate::poly::BoolPoly;

/// Module monomial `mono * e_index`, with `index >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub index: u32,
    pub mono: Monomial,
}

impl Signature {
    pub fn new(index: u32, mono: Monomial) -> Self {
        debug_assert!(index >= 1);
        Signature { index, mono }
    }

    /// The unit signature `e_index`.
    pub fn unit(index: u32) -> Self {
        Self::new(index, Monomial::ONE)
    }
}

impl Ord for Signature {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .index
            .cmp(&self.index)
            .then_with(|| self.mono.cmp(&other.mono))
    }
}

impl PartialOrd for Signature {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            write!(f, "e{}", self.index)
        } else {
            write!(f, "{}*e{}", self.mono, self.index)
        }
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `t * s`, or `None` when the product is not squarefree (rejected as a
/// multiple of a field-polynomial syzygy).
pub fn sig_mul(t: &Monomial, s: &Signature) -> Option<Signature> {
    t.is_disjoint(&s.mono)
        .then(|| Signature::new(s.index, t.mul(&s.mono)))
}

/// Compares `t1 * s1` with `t2 * s2` in the unreduced module, so that a
/// product containing a square still has a well defined position.
pub fn cmp_scaled(t1: &Monomial, s1: &Signature, t2: &Monomial, s2: &Signature) -> Ordering {
    s2.index
        .cmp(&s1.index)
        .then_with(|| cmp_products(t1, &s1.mono, t2, &s2.mono))
}

/// A basis element `(signature, polynomial)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoly {
    pub sig: Signature,
    pub poly: BoolPoly,
    /// Degree of the generator `f_{sig.index}`, used by the mutant test.
    pub src_deg: u32,
}

impl LabeledPoly {
    pub fn lm(&self) -> Option<&Monomial> {
        self.poly.lm()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    Ordinary,
    /// J-pair against the implicit field polynomial of one variable.
    Field,
}

/// The larger-signature side `mult * basis[src]` of a would-be S-polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JPair {
    pub mult: Monomial,
    pub src: usize,
    pub sig: Signature,
    /// `deg(mult) + deg(lm(src))`, counting the doubled variable of field pairs.
    pub degree: u32,
    pub kind: PairKind,
    /// `lm(src)`; the pair's leading monomial is `mult * src_lm` with any
    /// square kept.
    pub src_lm: Monomial,
}

impl JPair {
    /// Compares leading monomials in the unreduced ring.
    pub fn lead_cmp(&self, other: &JPair) -> Ordering {
        cmp_products(&self.mult, &self.src_lm, &other.mult, &other.src_lm)
    }

    /// Leading monomial with squares collapsed, for display.
    pub fn lead_reduced(&self) -> Monomial {
        self.mult.mul(&self.src_lm)
    }

    /// The pair as an element `(signature, polynomial)`.
    pub fn realize(&self, basis: &[LabeledPoly]) -> (Signature, BoolPoly) {
        (self.sig, basis[self.src].poly.mul_monomial(&self.mult))
    }
}

/// J-pair of `basis[i]` and `basis[j]`, if defined and not square-rejected.
pub fn make_jpair(basis: &[LabeledPoly], i: usize, j: usize) -> Option<JPair> {
    let (p, q) = (&basis[i], &basis[j]);
    let (lp, lq) = (p.lm()?, q.lm()?);
    let lcm = lp.lcm(lq);
    let tp = lcm.without(lp);
    let tq = lcm.without(lq);
    let (mult, src, side) = match cmp_scaled(&tp, &p.sig, &tq, &q.sig) {
        Ordering::Equal => return None,
        Ordering::Greater => (tp, i, p),
        Ordering::Less => (tq, j, q),
    };
    let sig = sig_mul(&mult, &side.sig)?;
    Some(JPair {
        mult,
        src,
        sig,
        degree: lcm.degree(),
        kind: PairKind::Ordinary,
        src_lm: *side.lm()?,
    })
}

/// J-pairs of `basis[i]` against the field polynomials of the variables in
/// its leading monomial.
pub fn field_jpairs(basis: &[LabeledPoly], i: usize) -> Vec<JPair> {
    let p = &basis[i];
    let Some(lm) = p.lm() else {
        return Vec::new();
    };
    lm.vars()
        .filter_map(|v| {
            let mult = Monomial::var(v);
            let sig = sig_mul(&mult, &p.sig)?;
            Some(JPair {
                mult,
                src: i,
                sig,
                degree: lm.degree() + 1,
                kind: PairKind::Field,
                src_lm: *lm,
            })
        })
        .collect()
}


#[cfg(test)]
mod tests {
    use super::testing::*;
    use super::*;
    use crate::monomial::m;
    use crate::poly::testing::p;

    #[test]
    fn pot_order() {
        assert!(sig(1, &[8]) > sig(2, &[5]));
        assert_eq!(sig(3, &[7]).cmp(&sig(3, &[7])), Ordering::Equal);
        assert!(sig(3, &[7]) < sig(3, &[1, 2]));
        assert_eq!(sig(2, &[2, 3]).to_string(), "x2*x3*e2");
        assert_eq!(sig(1, &[]).to_string(), "e1");
    }

    #[test]
    fn sig_mul_examples() {
        assert_eq!(sig_mul(&m(&[3]), &sig(1, &[1, 2, 3, 9])), None);
        assert_eq!(
            sig_mul(&m(&[4]), &sig(1, &[2, 3, 5, 9])),
            Some(sig(1, &[2, 3, 4, 5, 9]))
        );
        let s = sig(4, &[1, 6]);
        assert_eq!(sig_mul(&Monomial::ONE, &s), Some(s));
    }

    #[test]
    fn jpair_of_generators() {
        let g = example1_basis();
        let jp = make_jpair(&g, 0, 1).unwrap();
        assert_eq!(jp.mult, m(&[8]));
        assert_eq!(jp.src, 0);
        assert_eq!(jp.sig, sig(1, &[8]));
        assert_eq!(jp.degree, 5);
        assert_eq!(make_jpair(&g, 1, 0), Some(jp));
        assert_eq!(make_jpair(&g, 0, 0), None);
    }

    #[test]
    fn jpair_prefers_squarefree_side_when_larger() {
        // f23-like and f21-like elements: the x4 side wins over x9*(..x9..)
        let g = vec![
            lp(
                sig(1, &[2, 3, 5, 9]),
                p(&[&[3, 5, 7, 9], &[3, 7, 9], &[5, 7], &[7]]),
                4,
            ),
            lp(
                sig(1, &[2, 3, 8, 9]),
                p(&[&[3, 4, 5, 7], &[3, 7, 8, 9], &[7, 8]]),
                4,
            ),
        ];
        let jp = make_jpair(&g, 0, 1).unwrap();
        assert_eq!(jp.sig, sig(1, &[2, 3, 4, 5, 9]));
        assert_eq!(jp.mult, m(&[4]));
    }

    #[test]
    fn jpair_none_when_larger_side_squares() {
        // t on the larger side collides with its signature
        let g = vec![
            lp(sig(1, &[2]), p(&[&[1]]), 1),
            lp(sig(2, &[]), p(&[&[2]]), 1),
        ];
        assert_eq!(make_jpair(&g, 0, 1), None);
    }

    #[test]
    fn field_pairs_of_f1() {
        let g = example1_basis();
        let mults: Vec<Monomial> = field_jpairs(&g, 0).into_iter().map(|j| j.mult).collect();
        assert_eq!(mults, vec![m(&[1]), m(&[2]), m(&[5]), m(&[6])]);
        let constant = vec![lp(sig(1, &[]), BoolPoly::one(), 0)];
        assert!(field_jpairs(&constant, 0).is_empty());
    }

    #[test]
    fn field_pairs_skip_square_signatures() {
        let f21 = p(&[&[3, 4, 5, 7], &[3, 7, 8, 9], &[7, 8]]);
        let g = vec![lp(sig(1, &[2, 3, 8, 9]), f21, 4)];
        let mults: Vec<Monomial> = field_jpairs(&g, 0).into_iter().map(|j| j.mult).collect();
        assert_eq!(mults, vec![m(&[4]), m(&[5]), m(&[7])]);
        assert!(field_jpairs(&g, 0).iter().all(|j| j.degree == 5));
    }
}
