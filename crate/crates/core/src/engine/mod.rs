//! The GVW and M-GVW main loops.
//!
//! Pairs are selected by minimal degree, then minimal signature. The matrix
//! path takes a whole degree at a time through symbolic preprocessing and
//! signature-respecting elimination; the polynomial path reduces one pair
//! at a time and is kept for debugging and traces.

mod queue;
mod state;
mod stats;

pub use queue::PairQueue;
pub use stats::{MatrixDims, RoundStats, RunStats};

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::error::Result;
use crate::monomial::Monomial;
use crate::poly::{reduce_basis, BoolPoly};
use crate::sig::{LabeledPoly, Signature};

use state::State;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algo {
    Gvw,
    Mgvw,
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::Gvw => "gvw",
            Algo::Mgvw => "mgvw",
        })
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "gvw" => Ok(Algo::Gvw),
            "mgvw" => Ok(Algo::Mgvw),
            _ => Err(format!("unknown algorithm `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionPath {
    Matrix,
    Polynomial,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub algo: Algo,
    /// Mutants are only appended when their degree is below this.
    pub deg_limit: u32,
    pub path: ReductionPath,
    /// Cap on selection rounds (batches, or single pairs on the polynomial path).
    pub max_rounds: usize,
    /// Cap on pair degree; `None` means twice the variable count.
    pub max_degree: Option<u32>,
    pub trace: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            algo: Algo::Mgvw,
            deg_limit: 4,
            path: ReductionPath::Matrix,
            max_rounds: 1_000_000,
            max_degree: None,
            trace: false,
        }
    }
}

impl Config {
    pub fn new(algo: Algo) -> Self {
        Config {
            algo,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    RejectedSyzygy,
    RejectedRewrite,
    /// Reduced to zero; the signature went into the syzygy set.
    Zero,
    SuperReducible,
    Inserted,
    /// Replaced by the new generator of this index.
    Mutant(u32),
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::RejectedSyzygy => f.write_str("rejected-syz"),
            Action::RejectedRewrite => f.write_str("rejected-rew"),
            Action::Zero => f.write_str("zero"),
            Action::SuperReducible => f.write_str("super"),
            Action::Inserted => f.write_str("insert"),
            Action::Mutant(k) => write!(f, "mutant e{k}"),
        }
    }
}

/// One processed pair or matrix row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEvent {
    pub degree: u32,
    pub sig: Signature,
    pub lm: Option<Monomial>,
    pub action: Action,
    pub poly: Option<BoolPoly>,
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t", self.degree, self.sig)?;
        match &self.lm {
            Some(m) => write!(f, "{m}")?,
            None => f.write_str("0")?,
        }
        write!(f, "\t{}", self.action)?;
        if let Some(p) = &self.poly {
            write!(f, "\t{p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct RunOutput {
    pub basis: Vec<BoolPoly>,
    pub labeled: Vec<LabeledPoly>,
    /// Nonzero input generators followed by appended mutants; just `1` when
    /// an input is constant.
    pub generators: Vec<BoolPoly>,
    pub syzygies: Vec<Signature>,
    pub stats: RunStats,
    pub trace: Vec<TraceEvent>,
}

/// Computes a Groebner basis of `⟨F⟩` in the boolean ring on `n_vars` variables.
pub fn run(system: &[BoolPoly], n_vars: usize, cfg: &Config) -> Result<RunOutput> {
    let start = Instant::now();
    let mut st = State::new(system, n_vars, cfg);
    match cfg.path {
        ReductionPath::Matrix => st.run_matrix()?,
        ReductionPath::Polynomial => st.run_polynomial()?,
    }
    Ok(st.finish(start))
}

pub fn gvw_run(system: &[BoolPoly], n_vars: usize) -> Result<RunOutput> {
    run(system, n_vars, &Config::new(Algo::Gvw))
}

pub fn mgvw_run(system: &[BoolPoly], n_vars: usize) -> Result<RunOutput> {
    run(system, n_vars, &Config::new(Algo::Mgvw))
}

pub(crate) fn reduced_size(basis: &[BoolPoly]) -> usize {
    reduce_basis(basis).len()
}
