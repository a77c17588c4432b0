//! Bit-packed GF(2) matrices whose rows carry signatures, and elimination
//! that only ever adds a row into rows of strictly larger signature.

mod naive;
mod ple;

pub use naive::naive_sig_gauss;
pub use ple::{blocked_eliminate, sig_ple, PivotRule};

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::monomial::Monomial;
use crate::poly::BoolPoly;
use crate::sig::Signature;

/// Dense row-major bit matrix; each row is padded to whole 64-bit words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    nrows: usize,
    ncols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        let stride = ncols.div_ceil(64);
        BitMatrix {
            nrows,
            ncols,
            stride,
            data: vec![0; nrows * stride],
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.stride + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    /// `row[dst] ^= row[src]` over words `from..`.
    pub(crate) fn xor_rows(&mut self, dst: usize, src: usize, from: usize) {
        debug_assert_ne!(dst, src);
        let s = self.stride;
        let (d, o) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&mut lo[dst * s..dst * s + s], &hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&mut hi[..s], &lo[src * s..src * s + s])
        };
        for (a, b) in d[from..].iter_mut().zip(o[from..].iter()) {
            *a ^= b;
        }
    }

    /// First set column of row `r`.
    pub fn leading_col(&self, r: usize) -> Option<usize> {
        self.row(r)
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Copy of the rows in the given order.
    pub fn permuted(&self, order: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(order.len(), self.ncols);
        for (i, &r) in order.iter().enumerate() {
            out.row_mut(i).copy_from_slice(self.row(r));
        }
        out
    }

    /// Uniformly random entries with the given probability of a one.
    pub fn random<R: rand::Rng>(nrows: usize, ncols: usize, density: f64, rng: &mut R) -> Self {
        let mut m = BitMatrix::zeros(nrows, ncols);
        if (density - 0.5).abs() < f64::EPSILON {
            for r in 0..nrows {
                for w in m.row_mut(r).iter_mut() {
                    *w = rng.gen();
                }
                let tail = ncols % 64;
                if tail != 0 {
                    let last = m.stride - 1;
                    m.row_mut(r)[last] &= (1u64 << tail) - 1;
                }
            }
        } else {
            for r in 0..nrows {
                for c in 0..ncols {
                    if rng.gen_bool(density) {
                        m.set(r, c, true);
                    }
                }
            }
        }
        m
    }
}

/// A bit matrix with one signature per row (strictly ascending) and the
/// monomial of each column (strictly descending).
#[derive(Clone, Debug)]
pub struct SigMatrix {
    pub bits: BitMatrix,
    pub row_sigs: Vec<Signature>,
    pub cols: ColumnMap,
}

impl SigMatrix {
    /// Panics when the signatures are not strictly ascending.
    pub fn new(bits: BitMatrix, row_sigs: Vec<Signature>, cols: ColumnMap) -> Self {
        assert_eq!(bits.nrows(), row_sigs.len());
        assert!(
            row_sigs.windows(2).all(|w| w[0] < w[1]),
            "row signatures must be strictly ascending"
        );
        SigMatrix {
            bits,
            row_sigs,
            cols,
        }
    }

    /// Builds a matrix from `(signature, polynomial)` rows, with a column for
    /// every monomial that occurs. Rows must already be sorted by signature.
    pub fn from_rows(rows: &[(Signature, BoolPoly)]) -> Self {
        let cols = ColumnMap::new(rows.iter().flat_map(|(_, p)| p.terms().iter().copied()));
        let mut bits = BitMatrix::zeros(rows.len(), cols.len());
        for (i, (_, p)) in rows.iter().enumerate() {
            cols.write_row(p, bits.row_mut(i));
        }
        SigMatrix::new(bits, rows.iter().map(|(s, _)| *s).collect(), cols)
    }

    /// Matrix with plain ascending signatures `e_n, ..., e_1`, for elimination
    /// experiments that carry no polynomial meaning.
    pub fn with_unit_sigs(bits: BitMatrix) -> Self {
        let n = bits.nrows() as u32;
        let sigs = (0..n).map(|i| Signature::unit(n - i)).collect();
        let cols = ColumnMap::anonymous(bits.ncols());
        SigMatrix::new(bits, sigs, cols)
    }

    /// `sig<TAB>bits` per row, column 0 leftmost.
    pub fn dump(&self) -> String {
        dump_rows(&self.bits, &self.row_sigs)
    }
}

fn dump_rows(bits: &BitMatrix, sigs: &[Signature]) -> String {
    let mut out = String::new();
    for (r, s) in sigs.iter().enumerate() {
        let _ = write!(out, "{s}\t");
        for c in 0..bits.ncols() {
            out.push(if bits.get(r, c) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

/// Column index <-> monomial. Column 0 holds the largest monomial.
#[derive(Clone, Debug, Default)]
pub struct ColumnMap {
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl ColumnMap {
    pub fn new<I: IntoIterator<Item = Monomial>>(monos: I) -> Self {
        let mut monos: Vec<Monomial> = monos.into_iter().collect();
        monos.sort_unstable_by(|a, b| b.cmp(a));
        monos.dedup();
        let index = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        ColumnMap { monos, index }
    }

    fn anonymous(ncols: usize) -> Self {
        ColumnMap {
            monos: vec![Monomial::ONE; ncols],
            index: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomial(&self, col: usize) -> &Monomial {
        &self.monos[col]
    }

    pub fn column(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    fn write_row(&self, p: &BoolPoly, row: &mut [u64]) {
        for t in p.terms() {
            let c = self
                .column(t)
                .unwrap_or_else(|| panic!("monomial {t} has no column"));
            row[c / 64] |= 1 << (c % 64);
        }
    }

    /// Encodes `p`; panics when a term has no column.
    pub fn poly_to_row(&self, p: &BoolPoly) -> Vec<u64> {
        let mut row = vec![0; self.len().div_ceil(64)];
        self.write_row(p, &mut row);
        row
    }

    pub fn row_to_poly(&self, row: &[u64]) -> BoolPoly {
        let mut terms = Vec::new();
        for (wi, &w) in row.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                terms.push(self.monos[wi * 64 + b]);
            }
        }
        // columns are descending, so terms already are
        BoolPoly::from_sorted_unchecked(terms)
    }
}

/// Rows after elimination: pivot rows in the order their pivots were chosen,
/// followed by the rows that became zero.
#[derive(Clone, Debug)]
pub struct EliminationResult {
    pub bits: BitMatrix,
    pub sigs: Vec<Signature>,
    pub lead: Vec<Option<usize>>,
}

impl EliminationResult {
    /// Signature -> leading column for every row.
    pub fn lead_map(&self) -> Vec<(Signature, Option<usize>)> {
        let mut v: Vec<_> = self
            .sigs
            .iter()
            .copied()
            .zip(self.lead.iter().copied())
            .collect();
        v.sort_by_key(|x| x.0);
        v
    }

    pub fn dump(&self) -> String {
        dump_rows(&self.bits, &self.sigs)
    }
}
