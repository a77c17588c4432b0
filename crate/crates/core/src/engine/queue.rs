use std::collections::BTreeMap;

use crate::sig::{JPair, Signature};

/// Pending J-pairs keyed by `(degree, signature)`, popped smallest first.
///
/// Two pairs with the same key are merged, keeping the one with the smaller
/// unreduced leading monomial (the earlier one on a tie).
#[derive(Clone, Debug, Default)]
pub struct PairQueue {
    pairs: BTreeMap<(u32, Signature), JPair>,
}

impl PairQueue {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, jp: JPair) {
        let key = (jp.degree, jp.sig);
        match self.pairs.get_mut(&key) {
            Some(old) => {
                if jp.lead_cmp(old) == std::cmp::Ordering::Less {
                    *old = jp;
                }
            }
            None => {
                self.pairs.insert(key, jp);
            }
        }
    }

    pub fn pop(&mut self) -> Option<JPair> {
        self.pairs.pop_first().map(|(_, jp)| jp)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.pairs.keys().next().map(|k| k.0)
    }

    /// Removes every pair of the minimal degree, ascending by signature.
    pub fn take_min_degree(&mut self) -> Vec<JPair> {
        let Some(d) = self.min_degree() else {
            return Vec::new();
        };
        let rest = self
            .pairs
            .split_off(&(d + 1, Signature::new(u32::MAX, Default::default())));
        let batch = std::mem::replace(&mut self.pairs, rest);
        batch.into_values().collect()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::m;
    use crate::sig::testing::sig;
    use crate::sig::PairKind;

    fn jp(degree: u32, s: Signature, lm: &[usize]) -> JPair {
        JPair {
            mult: m(&[]),
            src: 0,
            sig: s,
            degree,
            kind: PairKind::Ordinary,
            src_lm: m(lm),
        }
    }

    #[test]
    fn degree_then_signature() {
        let mut q = PairQueue::new();
        q.push(jp(5, sig(2, &[8]), &[1]));
        q.push(jp(4, sig(1, &[1, 2]), &[1]));
        q.push(jp(5, sig(1, &[8]), &[1]));
        q.push(jp(4, sig(3, &[1]), &[1]));
        let b = q.take_min_degree();
        assert_eq!(
            b.iter().map(|j| j.sig).collect::<Vec<_>>(),
            vec![sig(3, &[1]), sig(1, &[1, 2])]
        );
        assert_eq!(q.pop().unwrap().sig, sig(2, &[8]));
        assert_eq!(q.pop().unwrap().sig, sig(1, &[8]));
        assert!(q.pop().is_none());
    }

    #[test]
    fn duplicate_keeps_smaller_lm() {
        let mut q = PairQueue::new();
        q.push(jp(3, sig(1, &[2]), &[1, 2, 3]));
        q.push(jp(3, sig(1, &[2]), &[2, 3, 4]));
        q.push(jp(3, sig(1, &[2]), &[1, 2, 4]));
        assert_eq!(q.len(), 1);
        assert_eq!(q.pop().unwrap().src_lm, m(&[2, 3, 4]));
    }
}
