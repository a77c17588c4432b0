#![allow(dead_code)]

use boolgb::engine::{Action, TraceEvent};
use boolgb::io::{gen_random, parse_system, RandomSpec};
use boolgb::matrix::{BitMatrix, EliminationResult};
use boolgb::BoolPoly;

pub const EXAMPLE1: &str = "\
name: worked example
vars: 9
x1*x2*x5*x6 + x2*x3*x7*x9 + x7
x1*x2*x6*x8 + x3*x4*x7
";

/// The labeled polynomials listed for the worked example, in order.
pub const LISTED: [(&str, &str); 13] = [
    ("x8*e2", "x3*x4*x7*x8 + x3*x4*x7"),
    ("x6*e2", "x3*x4*x6*x7 + x1*x2*x6*x8"),
    ("x2*e2", "x2*x3*x4*x7 + x1*x2*x6*x8"),
    ("x1*e2", "x1*x3*x4*x7 + x1*x2*x6*x8"),
    ("x8*e1", "x2*x3*x7*x8*x9 + x3*x4*x5*x7 + x7*x8"),
    ("x6*e1", "x2*x3*x6*x7*x9 + x1*x2*x5*x6 + x6*x7"),
    ("x5*e1", "x2*x3*x5*x7*x9 + x1*x2*x5*x6 + x5*x7"),
    ("x2*e1", "x2*x7 + x7"),
    ("x1*e1", "x1*x2*x3*x7*x9 + x1*x2*x5*x6 + x1*x7"),
    ("x2*x3*x8*x9*e1", "x3*x4*x5*x7 + x3*x7*x8*x9 + x7*x8"),
    ("x2*x3*x6*x9*e1", "x3*x6*x7*x9 + x3*x7*x9 + x6*x7 + x7"),
    ("x2*x3*x5*x9*e1", "x3*x5*x7*x9 + x3*x7*x9 + x5*x7 + x7"),
    ("x1*x2*x3*x9*e1", "x1*x3*x7*x9 + x2*x3*x7*x9 + x1*x7 + x7"),
];

pub fn example1() -> (Vec<BoolPoly>, usize) {
    let sys = parse_system(EXAMPLE1).unwrap();
    (sys.polys, sys.n_vars)
}

/// Events before the first one of degree 6 or more.
pub fn before_degree6(trace: &[TraceEvent]) -> &[TraceEvent] {
    let end = trace
        .iter()
        .position(|e| e.degree >= 6)
        .unwrap_or(trace.len());
    &trace[..end]
}

pub fn insertions(trace: &[TraceEvent]) -> Vec<(String, String)> {
    trace
        .iter()
        .filter(|e| e.action == Action::Inserted)
        .map(|e| (e.sig.to_string(), e.poly.as_ref().unwrap().to_string()))
        .collect()
}

pub fn listed() -> Vec<(String, String)> {
    LISTED
        .iter()
        .map(|(s, p)| (s.to_string(), p.to_string()))
        .collect()
}

pub fn random_system(
    n_vars: usize,
    n_polys: usize,
    max_degree: u32,
    seed: u64,
    homogeneous: bool,
) -> Vec<BoolPoly> {
    gen_random(&RandomSpec {
        n_vars,
        n_polys,
        max_degree,
        density: 0.3,
        seed,
        homogeneous,
    })
    .polys
}

/// Row echelon basis kept by pivot column, for span membership tests.
#[derive(Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<u64>)>,
}

fn first_one(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

impl Echelon {
    fn reduce(&self, mut row: Vec<u64>) -> Vec<u64> {
        for (c, r) in &self.rows {
            if row[c / 64] >> (c % 64) & 1 == 1 {
                for (a, b) in row.iter_mut().zip(r) {
                    *a ^= b;
                }
            }
        }
        row
    }

    pub fn contains(&self, row: &[u64]) -> bool {
        first_one(&self.reduce(row.to_vec())).is_none()
    }

    pub fn insert(&mut self, row: &[u64]) {
        let row = self.reduce(row.to_vec());
        let Some(c) = first_one(&row) else { return };
        for (_, r) in self.rows.iter_mut() {
            if r[c / 64] >> (c % 64) & 1 == 1 {
                for (a, b) in r.iter_mut().zip(&row) {
                    *a ^= b;
                }
            }
        }
        self.rows.push((c, row));
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn rows_of(m: &BitMatrix) -> Vec<Vec<u64>> {
    (0..m.nrows()).map(|r| m.row(r).to_vec()).collect()
}

/// Result rows reordered by ascending signature.
pub fn rows_by_sig(res: &EliminationResult) -> Vec<Vec<u64>> {
    let mut idx: Vec<usize> = (0..res.sigs.len()).collect();
    idx.sort_by(|&a, &b| res.sigs[a].cmp(&res.sigs[b]));
    idx.into_iter().map(|r| res.bits.row(r).to_vec()).collect()
}

/// True when `span(a[..k]) == span(b[..k])` for every `k`.
pub fn prefix_spans_equal(a: &[Vec<u64>], b: &[Vec<u64>]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let (mut ea, mut eb) = (Echelon::default(), Echelon::default());
    for (ra, rb) in a.iter().zip(b) {
        ea.insert(ra);
        eb.insert(rb);
        if !ea.contains(rb) || !eb.contains(ra) {
            return false;
        }
    }
    true
}

/// Leading column of every row by signature, computed directly from the bits.
pub fn lead_columns(res: &EliminationResult) -> Vec<Option<usize>> {
    rows_by_sig(res).iter().map(|r| first_one(r)).collect()
}
