use crate::monomial::Monomial;
use crate::poly::BoolPoly;

use super::{sig_mul, LabeledPoly, Signature};

/// Best regular reducer of `lm` below signature `s`: the element whose
/// scaled signature is smallest, ties going to the lower basis index.
fn regular_reducer<'a>(
    s: &Signature,
    lm: &Monomial,
    basis: &'a [LabeledPoly],
) -> Option<(Monomial, &'a LabeledPoly)> {
    let mut best: Option<(Signature, Monomial, &LabeledPoly)> = None;
    for g in basis {
        let Some(lg) = g.lm() else { continue };
        if !lg.divides(lm) {
            continue;
        }
        let t = lm.without(lg);
        let Some(ts) = sig_mul(&t, &g.sig) else {
            continue;
        };
        if ts >= *s {
            continue;
        }
        if best.as_ref().is_none_or(|(b, _, _)| ts < *b) {
            best = Some((ts, t, g));
        }
    }
    best.map(|(_, t, g)| (t, g))
}

/// Regular top-reduction of `(s, f)` by `basis` until no reducer with a
/// strictly smaller scaled signature divides the leading monomial.
pub fn regular_top_reduce(s: &Signature, f: &BoolPoly, basis: &[LabeledPoly]) -> BoolPoly {
    let mut f = f.clone();
    while let Some(&lm) = f.lm() {
        match regular_reducer(s, &lm, basis) {
            Some((t, g)) => f += &g.poly.mul_monomial(&t),
            None => break,
        }
    }
    f
}

/// True when some `t * (sig g, g)` has exactly signature `s` and leading
/// monomial `lm(h)`.
pub fn super_top_reducible(s: &Signature, h: &BoolPoly, basis: &[LabeledPoly]) -> bool {
    let Some(lm) = h.lm() else { return false };
    basis.iter().any(|g| {
        g.lm().is_some_and(|lg| {
            lg.divides(lm) && sig_mul(&lm.without(lg), &g.sig).is_some_and(|ts| ts == *s)
        })
    })
}

/// Mutant test: `deg(sig monomial) + deg(generator) > deg(h)`.
pub fn is_mutant(s: &Signature, h: &BoolPoly, src_deg: u32) -> bool {
    h.degree().is_some_and(|d| s.mono.degree() + src_deg > d)
}
