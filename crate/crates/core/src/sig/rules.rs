use std::cmp::Ordering;

use crate::monomial::{cmp_products, Monomial};

use super::{LabeledPoly, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleEntry {
    pub sig_mono: Monomial,
    pub lm: Monomial,
    pub basis_idx: usize,
}

impl RuleEntry {
    /// Ratio order `sig/lm` compared as `s1 * l2` against `s2 * l1`.
    fn ratio_cmp(&self, other: &RuleEntry) -> Ordering {
        cmp_products(&self.sig_mono, &other.lm, &other.sig_mono, &self.lm)
    }
}

/// Rewriting rules for the cover test: one entry per basis element, grouped
/// by signature index and sorted by descending signature/lm ratio.
///
/// A larger ratio gives a smaller `t * lm(g)` for a fixed target signature,
/// so covering entries tend to be met early in the scan.
#[derive(Clone, Debug, Default)]
pub struct RuleTable {
    by_index: Vec<Vec<RuleEntry>>,
}

impl RuleTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, basis_idx: usize, lp: &LabeledPoly) {
        let Some(&lm) = lp.lm() else { return };
        let entry = RuleEntry {
            sig_mono: lp.sig.mono,
            lm,
            basis_idx,
        };
        let idx = lp.sig.index as usize;
        if self.by_index.len() <= idx {
            self.by_index.resize_with(idx + 1, Vec::new);
        }
        let list = &mut self.by_index[idx];
        let at = list.partition_point(|e| e.ratio_cmp(&entry) != Ordering::Less);
        list.insert(at, entry);
    }

    /// True when some entry `(x^b e_i, lm g)` has `x^b | s` and
    /// `(s / x^b) * lm g` strictly below `lmf`. A zero `lmf` is never covered.
    pub fn is_covered(&self, s: &Signature, lmf: Option<&Monomial>) -> bool {
        lmf.is_some_and(|lmf| self.is_covered_product(s, &Monomial::ONE, lmf))
    }

    /// Cover test against the leading monomial `a * b` of an unreduced
    /// product. Both sides are compared with squares kept.
    pub fn is_covered_product(&self, s: &Signature, a: &Monomial, b: &Monomial) -> bool {
        self.by_index.get(s.index as usize).is_some_and(|list| {
            list.iter().any(|e| {
                e.sig_mono.divides(&s.mono)
                    && cmp_products(&s.mono.without(&e.sig_mono), &e.lm, a, b) == Ordering::Less
            })
        })
    }

    pub fn entries(&self, index: u32) -> &[RuleEntry] {
        self.by_index
            .get(index as usize)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
}
