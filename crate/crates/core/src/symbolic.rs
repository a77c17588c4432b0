//! Symbolic preprocessing of a J-pair batch and its signature-respecting
//! elimination.

use std::collections::{BTreeSet, HashSet};

use crate::matrix::{sig_ple, SigMatrix};
use crate::monomial::Monomial;
use crate::poly::BoolPoly;
use crate::sig::{
    sig_mul, super_top_reducible, JPair, LabeledPoly, RuleTable, Signature, SyzygySet,
};

/// Rows of one Macaulay matrix, ascending by signature with no repeats.
#[derive(Clone, Debug, Default)]
pub struct MacaulayBatch {
    pub rows: Vec<(Signature, BoolPoly)>,
    pub reducers: usize,
}

/// Result of eliminating a batch.
#[derive(Clone, Debug, Default)]
pub struct Eliminated {
    /// Nonzero rows that are not super top-reducible by the basis.
    pub new_rows: Vec<(Signature, BoolPoly)>,
    pub zero_sigs: Vec<Signature>,
    pub rows: usize,
    pub cols: usize,
}

/// Reducer for monomial `m`: the multiple `t * g` passing both criteria
/// with the smallest signature, ties going to the smaller `lm(g)`.
fn find_reducer(
    m: &Monomial,
    basis: &[LabeledPoly],
    syz: &SyzygySet,
    rules: &RuleTable,
) -> Option<(Signature, Monomial, usize)> {
    let mut best: Option<(Signature, Monomial, usize)> = None;
    for (i, g) in basis.iter().enumerate() {
        let Some(lg) = g.lm() else { continue };
        if !lg.divides(m) {
            continue;
        }
        let t = m.without(lg);
        let Some(ts) = sig_mul(&t, &g.sig) else {
            continue;
        };
        if syz.rejects(&ts) || rules.is_covered(&ts, Some(m)) {
            continue;
        }
        let better = best.as_ref().is_none_or(|(bs, _, bi)| {
            ts < *bs || (ts == *bs && lg < basis[*bi].lm().expect("nonzero"))
        });
        if better {
            best = Some((ts, t, i));
        }
    }
    best
}

/// Realises the batch and closes it under reducers from `basis`.
///
/// Every monomial of every row is searched once, largest first, leading
/// monomials included. Rows are then sorted by signature and, among equal
/// signatures, only the one with the smallest leading monomial is kept.
pub fn symbolic_process(
    batch: &[JPair],
    basis: &[LabeledPoly],
    syz: &SyzygySet,
    rules: &RuleTable,
) -> MacaulayBatch {
    let mut rows: Vec<(Signature, BoolPoly)> = batch.iter().map(|jp| jp.realize(basis)).collect();
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut todo: BTreeSet<Monomial> = BTreeSet::new();
    for (_, p) in &rows {
        for t in p.terms() {
            if seen.insert(*t) {
                todo.insert(*t);
            }
        }
    }
    let mut reducers = 0;
    while let Some(m) = todo.pop_last() {
        let Some((ts, t, i)) = find_reducer(&m, basis, syz, rules) else {
            continue;
        };
        let poly = basis[i].poly.mul_monomial(&t);
        for term in poly.terms() {
            if seen.insert(*term) {
                todo.insert(*term);
            }
        }
        rows.push((ts, poly));
        reducers += 1;
    }
    dedup_signatures(&mut rows);
    MacaulayBatch { rows, reducers }
}

/// Sorts by signature and keeps one row per signature: the smallest
/// leading monomial, then the earliest created.
fn dedup_signatures(rows: &mut Vec<(Signature, BoolPoly)>) {
    rows.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.lm().cmp(&b.1.lm())));
    rows.dedup_by(|later, earlier| later.0 == earlier.0);
}

/// Eliminates the batch; zero rows give their signatures, and rows that are
/// super top-reducible by `basis` are dropped.
pub fn eliminate_batch(p: &MacaulayBatch, basis: &[LabeledPoly]) -> Eliminated {
    if p.rows.is_empty() {
        return Eliminated::default();
    }
    let m = SigMatrix::from_rows(&p.rows);
    let res = sig_ple(&m);
    let mut out = Eliminated {
        rows: m.bits.nrows(),
        cols: m.bits.ncols(),
        ..Default::default()
    };
    let mut rows: Vec<(Signature, BoolPoly)> = (0..res.sigs.len())
        .map(|r| (res.sigs[r], m.cols.row_to_poly(res.bits.row(r))))
        .collect();
    rows.sort_by_key(|r| r.0);
    for (s, h) in rows {
        if h.is_zero() {
            out.zero_sigs.push(s);
        } else if !super_top_reducible(&s, &h, basis) {
            out.new_rows.push((s, h));
        }
    }
    out
}
