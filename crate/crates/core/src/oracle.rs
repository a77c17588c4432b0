//! Reference Groebner bases from a signature-free Buchberger algorithm.
//!
//! This module only shares monomial and polynomial arithmetic with the
//! engine.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomial::Monomial;
use crate::poly::{reduce_basis, rem, BoolPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pair {
    Ordinary(usize, usize),
    /// `f_i` against the field polynomial of variable `v`.
    Field(usize, usize),
}

fn pair_lcm(g: &[BoolPoly], p: Pair) -> (u32, Monomial) {
    match p {
        Pair::Ordinary(i, j) => {
            let l = g[i].lm().unwrap().lcm(g[j].lm().unwrap());
            (l.degree(), l)
        }
        Pair::Field(i, _) => {
            let l = *g[i].lm().unwrap();
            (l.degree() + 1, l)
        }
    }
}

fn s_poly(g: &[BoolPoly], p: Pair) -> BoolPoly {
    match p {
        Pair::Ordinary(i, j) => {
            let (li, lj) = (g[i].lm().unwrap(), g[j].lm().unwrap());
            let l = li.lcm(lj);
            &g[i].mul_monomial(&l.without(li)) + &g[j].mul_monomial(&l.without(lj))
        }
        Pair::Field(i, v) => {
            let lm = BoolPoly::from_monomial(*g[i].lm().unwrap());
            &g[i].tail().mul_monomial(&Monomial::var(v)) + &lm
        }
    }
}

fn add(
    h: BoolPoly,
    g: &mut Vec<BoolPoly>,
    pending: &mut Vec<Pair>,
    open: &mut HashSet<(usize, usize)>,
) {
    let k = g.len();
    for v in h.lm().unwrap().vars() {
        pending.push(Pair::Field(k, v));
    }
    for i in 0..k {
        pending.push(Pair::Ordinary(i, k));
        open.insert((i, k));
    }
    g.push(h);
}

fn key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

/// Groebner basis of `⟨F⟩` in the boolean ring, not reduced.
pub fn buchberger(system: &[BoolPoly]) -> Vec<BoolPoly> {
    run(system, None)
}

/// As [`buchberger`], but pairs are taken in a random order drawn from `seed`.
pub fn buchberger_shuffled(system: &[BoolPoly], seed: u64) -> Vec<BoolPoly> {
    run(system, Some(ChaCha8Rng::seed_from_u64(seed)))
}

fn run(system: &[BoolPoly], mut rng: Option<ChaCha8Rng>) -> Vec<BoolPoly> {
    let mut g: Vec<BoolPoly> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();
    let mut open: HashSet<(usize, usize)> = HashSet::new();

    for f in system {
        let h = rem(f, &g);
        if h.is_one() {
            return vec![BoolPoly::one()];
        }
        if !h.is_zero() {
            add(h, &mut g, &mut pending, &mut open);
        }
    }

    while !pending.is_empty() {
        let at = match rng.as_mut() {
            Some(r) => r.gen_range(0..pending.len()),
            None => (0..pending.len())
                .min_by_key(|&i| pair_lcm(&g, pending[i]))
                .unwrap(),
        };
        let p = pending.swap_remove(at);
        if let Pair::Ordinary(i, j) = p {
            open.remove(&(i, j));
            let (li, lj) = (*g[i].lm().unwrap(), *g[j].lm().unwrap());
            if li.is_disjoint(&lj) {
                continue;
            }
            let l = li.lcm(&lj);
            let chain = (0..g.len()).any(|k| {
                k != i
                    && k != j
                    && g[k].lm().unwrap().divides(&l)
                    && !open.contains(&key(i, k))
                    && !open.contains(&key(j, k))
            });
            if chain {
                continue;
            }
        }
        let h = rem(&s_poly(&g, p), &g);
        if h.is_one() {
            return vec![BoolPoly::one()];
        }
        if !h.is_zero() {
            add(h, &mut g, &mut pending, &mut open);
        }
    }
    g
}

/// Whether two Groebner bases have the same reduced basis.
pub fn gb_equal(a: &[BoolPoly], b: &[BoolPoly]) -> bool {
    reduce_basis(a) == reduce_basis(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::testing::{f1, f2, p};

    /// Every S-polynomial, field ones included, reduces to zero.
    fn is_groebner(g: &[BoolPoly]) -> bool {
        let n = g
            .iter()
            .flat_map(|f| f.terms())
            .filter_map(Monomial::max_var)
            .max()
            .map_or(0, |v| v + 1);
        for i in 0..g.len() {
            for v in 0..n {
                let s = g[i].mul_monomial(&Monomial::var(v));
                if !rem(&s, g).is_zero() {
                    return false;
                }
            }
            for j in 0..i {
                if !rem(&s_poly(g, Pair::Ordinary(j, i)), g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn unit_ideal() {
        let x1 = p(&[&[1]]);
        let x1p1 = p(&[&[1], &[]]);
        assert_eq!(
            reduce_basis(&buchberger(&[x1.clone(), x1p1.clone()])),
            vec![BoolPoly::one()]
        );
        assert!(!gb_equal(std::slice::from_ref(&x1), &[x1p1]));
        assert!(gb_equal(
            std::slice::from_ref(&x1),
            std::slice::from_ref(&x1)
        ));
    }

    #[test]
    fn example1_contains_x2x7_plus_x7() {
        let g = buchberger(&[f1(), f2()]);
        assert!(is_groebner(&g));
        let f19 = p(&[&[2, 7], &[7]]);
        assert!(rem(&f19, &g).is_zero());
        assert!(rem(&f1(), &g).is_zero() && rem(&f2(), &g).is_zero());
    }

    #[test]
    fn field_s_poly_is_the_product() {
        let g = vec![f1()];
        for v in f1().lm().unwrap().vars() {
            assert_eq!(
                s_poly(&g, Pair::Field(0, v)),
                f1().mul_monomial(&Monomial::var(v))
            );
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_system() -> impl Strategy<Value = Vec<BoolPoly>> {
            let poly = proptest::collection::vec(proptest::collection::vec(0usize..5, 0..4), 1..5)
                .prop_map(|ts| BoolPoly::from_terms(ts.into_iter().map(Monomial::from_vars)));
            proptest::collection::vec(poly, 1..4)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn output_is_groebner_and_order_free(sys in arb_system(), seed in 0u64..1000) {
                let g = buchberger(&sys);
                prop_assert!(is_groebner(&g));
                for f in &sys {
                    prop_assert!(rem(f, &g).is_zero());
                }
                prop_assert!(gb_equal(&g, &buchberger_shuffled(&sys, seed)));
            }
        }
    }
}
