use super::{BitMatrix, EliminationResult, SigMatrix};
use crate::sig::Signature;

/// How a block elimination picks and places its pivot rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotRule {
    /// Smallest-signature candidate, rotated to the top of the unpivoted
    /// rows so that those keep their ascending order.
    Signature,
    /// First candidate in current storage order, exchanged with the top
    /// unpivoted row. Rows may then be reduced by larger signatures; this is
    /// only a speed baseline.
    Unconstrained,
}

/// Pivots per lookup table.
const TABLE_BITS: usize = 8;

/// Signature-respecting elimination, blocked over 64-column strips.
pub fn sig_ple(m: &SigMatrix) -> EliminationResult {
    blocked_eliminate(&m.bits, &m.row_sigs, PivotRule::Signature)
}

/// Strip-wise elimination in the style of the method of four Russians.
///
/// Within one 64-column strip, pivots are searched on the strip word alone:
/// each unpivoted row keeps its strip pattern reduced by the strip pivots
/// chosen so far, together with the set of pivots that reduction used.
/// Pivot rows are completed as they are chosen. Once the strip is done,
/// every remaining row receives its whole combination of pivot rows through
/// lookup tables of `2^8` precomputed sums.
///
/// With [`PivotRule::Signature`] a row only ever receives pivots of smaller
/// signature, and the result is the same as [`super::naive_sig_gauss`].
pub fn blocked_eliminate(
    input: &BitMatrix,
    sigs: &[Signature],
    rule: PivotRule,
) -> EliminationResult {
    assert_eq!(input.nrows(), sigs.len());
    let mut bits = input.clone();
    let nrows = bits.nrows();
    let ncols = bits.ncols();
    let stride = bits.stride();
    let mut order: Vec<usize> = (0..nrows).collect();
    let mut lead = vec![None; nrows];
    let mut done = 0;
    let mut pat = vec![0u64; nrows];
    let mut used = vec![0u64; nrows];
    let mut table: Vec<u64> = Vec::new();

    for w in 0..stride {
        if done == nrows {
            break;
        }
        for &r in &order[done..] {
            pat[r] = bits.row(r)[w];
            used[r] = 0;
        }
        let mut strip_pivots: Vec<usize> = Vec::with_capacity(64);
        let width = (ncols - w * 64).min(64);
        for b in 0..width {
            if done == nrows {
                break;
            }
            let Some(pos) = (done..nrows).find(|&i| pat[order[i]] >> b & 1 == 1) else {
                continue;
            };
            let piv = order[pos];
            match rule {
                PivotRule::Signature => {
                    order.copy_within(done..pos, done + 1);
                    order[done] = piv;
                }
                PivotRule::Unconstrained => order.swap(done, pos),
            }
            lead[done] = Some(w * 64 + b);
            done += 1;

            let mut earlier = used[piv];
            while earlier != 0 {
                let k = earlier.trailing_zeros() as usize;
                earlier &= earlier - 1;
                bits.xor_rows(piv, strip_pivots[k], w);
            }
            let k = strip_pivots.len();
            strip_pivots.push(piv);
            let pp = pat[piv];
            for &r in &order[done..] {
                if pat[r] >> b & 1 == 1 {
                    pat[r] ^= pp;
                    used[r] |= 1 << k;
                }
            }
        }
        if strip_pivots.is_empty() || done == nrows {
            continue;
        }

        let span = stride - w;
        for (g, group) in strip_pivots.chunks(TABLE_BITS).enumerate() {
            let size = 1usize << group.len();
            table.clear();
            table.resize(size * span, 0);
            for idx in 1..size {
                let low = idx.trailing_zeros() as usize;
                let prev = idx & (idx - 1);
                let src = &bits.row(group[low])[w..];
                let (head, tail) = table.split_at_mut(idx * span);
                let dst = &mut tail[..span];
                let base = &head[prev * span..prev * span + span];
                for ((d, a), s) in dst.iter_mut().zip(base).zip(src) {
                    *d = a ^ s;
                }
            }
            let shift = g * TABLE_BITS;
            for &r in &order[done..] {
                let idx = (used[r] >> shift) as usize & (size - 1);
                if idx == 0 {
                    continue;
                }
                let entry = &table[idx * span..(idx + 1) * span];
                for (d, s) in bits.row_mut(r)[w..].iter_mut().zip(entry) {
                    *d ^= s;
                }
            }
        }
    }

    EliminationResult {
        bits: bits.permuted(&order),
        sigs: order.iter().map(|&r| sigs[r]).collect(),
        lead,
    }
}
