use crate::monomial::Monomial;

use super::{cmp_scaled, LabeledPoly, Signature};

/// Known leading monomials of syzygies, kept inclusion-minimal per index.
///
/// Non-squarefree signatures are never stored; they are rejected before
/// they reach this set.
#[derive(Clone, Debug, Default)]
pub struct SyzygySet {
    by_index: Vec<Vec<Monomial>>,
}

impl SyzygySet {
    pub fn new() -> Self {
        Self::default()
    }

    /// True when some stored `m * e_i` divides `s`.
    pub fn rejects(&self, s: &Signature) -> bool {
        self.by_index
            .get(s.index as usize)
            .is_some_and(|ms| ms.iter().any(|m| m.divides(&s.mono)))
    }

    /// Inserts `s`, dropping stored entries it divides. Returns false if `s`
    /// was already implied.
    pub fn insert(&mut self, s: Signature) -> bool {
        if self.rejects(&s) {
            return false;
        }
        let idx = s.index as usize;
        if self.by_index.len() <= idx {
            self.by_index.resize_with(idx + 1, Vec::new);
        }
        let ms = &mut self.by_index[idx];
        ms.retain(|m| !s.mono.divides(m));
        ms.push(s.mono);
        true
    }

    /// Adds the Koszul syzygy leads of `new` against every element of
    /// `basis`: the larger of `lm(g) * sig(new)` and `lm(new) * sig(g)`,
    /// when it is squarefree.
    pub fn koszul_update(&mut self, new: &LabeledPoly, basis: &[LabeledPoly]) {
        let Some(lm_new) = new.lm() else { return };
        for g in basis {
            let Some(lm_g) = g.lm() else { continue };
            let (t, s) = match cmp_scaled(lm_g, &new.sig, lm_new, &g.sig) {
                std::cmp::Ordering::Equal => continue,
                std::cmp::Ordering::Greater => (lm_g, &new.sig),
                std::cmp::Ordering::Less => (lm_new, &g.sig),
            };
            if let Some(lead) = super::sig_mul(t, s) {
                self.insert(lead);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.by_index.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All stored signatures, by index then insertion order.
    pub fn iter(&self) -> impl Iterator<Item = Signature> + '_ {
        self.by_index
            .iter()
            .enumerate()
            .flat_map(|(i, ms)| ms.iter().map(move |&m| Signature::new(i as u32, m)))
    }
}
