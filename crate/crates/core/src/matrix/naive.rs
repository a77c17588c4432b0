use super::{EliminationResult, SigMatrix};

/// Column-by-column elimination with the signature pivot rule.
///
/// For each column the pivot is the not-yet-pivoted row of smallest
/// signature with a one there. It is rotated to the end of the pivoted
/// block (the rows it passes keep their ascending order) and then added to
/// every remaining row with a one in that column.
pub fn naive_sig_gauss(m: &SigMatrix) -> EliminationResult {
    let mut bits = m.bits.clone();
    let nrows = bits.nrows();
    // logical position -> physical row; [0, done) are pivot rows
    let mut order: Vec<usize> = (0..nrows).collect();
    let mut lead = vec![None; nrows];
    let mut done = 0;
    for col in 0..bits.ncols() {
        if done == nrows {
            break;
        }
        let (w, b) = (col / 64, col % 64);
        let Some(pos) = (done..nrows).find(|&i| bits.row(order[i])[w] >> b & 1 == 1) else {
            continue;
        };
        let piv = order[pos];
        order.copy_within(done..pos, done + 1);
        order[done] = piv;
        lead[done] = Some(col);
        done += 1;
        for &r in &order[done..] {
            if bits.row(r)[w] >> b & 1 == 1 {
                bits.xor_rows(r, piv, w);
            }
        }
    }
    EliminationResult {
        bits: bits.permuted(&order),
        sigs: order.iter().map(|&r| m.row_sigs[r]).collect(),
        lead,
    }
}
