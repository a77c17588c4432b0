//! Boolean polynomials: GF(2) sums of squarefree monomials, plus division
//! and reduced-basis canonicalisation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign};

use crate::monomial::Monomial;

/// A polynomial over GF(2) modulo the field polynomials.
///
/// Terms are distinct and kept in strictly descending grevlex order, so the
/// first term is the leading monomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BoolPoly {
    terms: Vec<Monomial>,
}

/// Symmetric difference of two strictly descending term lists.
fn merge_xor(a: &[Monomial], b: &[Monomial], out: &mut Vec<Monomial>) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

impl BoolPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::ONE)
    }

    pub fn from_monomial(m: Monomial) -> Self {
        BoolPoly { terms: vec![m] }
    }

    /// Sums the given monomials mod 2; equal monomials cancel in pairs.
    pub fn from_terms<I: IntoIterator<Item = Monomial>>(terms: I) -> Self {
        let mut v: Vec<Monomial> = terms.into_iter().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        let mut out: Vec<Monomial> = Vec::with_capacity(v.len());
        for t in v {
            if out.last() == Some(&t) {
                out.pop();
            } else {
                out.push(t);
            }
        }
        BoolPoly { terms: out }
    }

    /// Wraps a list that is already strictly descending.
    pub(crate) fn from_sorted_unchecked(terms: Vec<Monomial>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] > w[1]));
        BoolPoly { terms }
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Monomial> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading monomial, `None` for the zero polynomial.
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first()
    }

    /// Degree of the leading monomial (which is also the total degree).
    pub fn degree(&self) -> Option<u32> {
        self.lm().map(Monomial::degree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.binary_search_by(|t| m.cmp(t)).is_ok()
    }

    #[must_use]
    pub fn tail(&self) -> BoolPoly {
        BoolPoly {
            terms: self.terms.iter().skip(1).copied().collect(),
        }
    }

    /// Multiplies every term by `t` and collapses coinciding products mod 2.
    #[must_use]
    pub fn mul_monomial(&self, t: &Monomial) -> BoolPoly {
        if t.is_one() {
            return self.clone();
        }
        BoolPoly::from_terms(self.terms.iter().map(|m| m.mul(t)))
    }

    pub fn add_assign_ref(&mut self, other: &BoolPoly) {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        merge_xor(&self.terms, &other.terms, &mut out);
        self.terms = out;
    }
}

impl Add for &BoolPoly {
    type Output = BoolPoly;
    fn add(self, rhs: &BoolPoly) -> BoolPoly {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        merge_xor(&self.terms, &rhs.terms, &mut out);
        BoolPoly { terms: out }
    }
}

impl Add for BoolPoly {
    type Output = BoolPoly;
    fn add(self, rhs: BoolPoly) -> BoolPoly {
        &self + &rhs
    }
}

impl AddAssign<&BoolPoly> for BoolPoly {
    fn add_assign(&mut self, rhs: &BoolPoly) {
        self.add_assign_ref(rhs);
    }
}

impl fmt::Display for BoolPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BoolPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Full normal form of `h` with respect to `divisors`.
///
/// The largest reducible term is rewritten first, using the first divisor in
/// list order whose leading monomial divides it. Zero divisors are ignored.
pub fn rem(h: &BoolPoly, divisors: &[BoolPoly]) -> BoolPoly {
    let leads: Vec<(&Monomial, &BoolPoly)> = divisors
        .iter()
        .filter_map(|f| f.lm().map(|lm| (lm, f)))
        .collect();
    let mut rest = h.terms.clone();
    let mut pos = 0;
    let mut done: Vec<Monomial> = Vec::new();
    let mut scratch = Vec::new();
    while pos < rest.len() {
        let lt = rest[pos];
        match leads.iter().find(|(lm, _)| lm.divides(&lt)) {
            Some((lm, f)) => {
                let t = lt.without(lm);
                let prod = f.mul_monomial(&t);
                scratch.clear();
                merge_xor(&rest[pos..], prod.terms(), &mut scratch);
                rest.truncate(pos);
                rest.extend_from_slice(&scratch);
            }
            None => {
                done.push(lt);
                pos += 1;
            }
        }
    }
    BoolPoly::from_sorted_unchecked(done)
}

/// The reduced Groebner basis of the ideal generated by `basis`, sorted by
/// descending leading monomial. `basis` must already be a Groebner basis.
pub fn reduce_basis(basis: &[BoolPoly]) -> Vec<BoolPoly> {
    let mut polys: Vec<BoolPoly> = basis.iter().filter(|p| !p.is_zero()).cloned().collect();
    if polys.iter().any(|p| p.lm().is_some_and(Monomial::is_one)) {
        return vec![BoolPoly::one()];
    }
    loop {
        let mut changed = false;
        for i in 0..polys.len() {
            let others: Vec<BoolPoly> = polys
                .iter()
                .enumerate()
                .filter(|&(j, q)| j != i && !q.is_zero())
                .map(|(_, q)| q.clone())
                .collect();
            let r = rem(&polys[i], &others);
            if r != polys[i] {
                polys[i] = r;
                changed = true;
            }
        }
        polys.retain(|p| !p.is_zero());
        if !changed {
            break;
        }
    }
    polys.sort_by(|a, b| b.lm().cmp(&a.lm()));
    polys
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;
    use crate::monomial::m;

    pub fn p(terms: &[&[usize]]) -> BoolPoly {
        BoolPoly::from_terms(terms.iter().map(|t| m(t)))
    }

    /// x1x2x5x6 + x2x3x7x9 + x7
    pub fn f1() -> BoolPoly {
        p(&[&[1, 2, 5, 6], &[2, 3, 7, 9], &[7]])
    }

    /// x1x2x6x8 + x3x4x7
    pub fn f2() -> BoolPoly {
        p(&[&[1, 2, 6, 8], &[3, 4, 7]])
    }
}
