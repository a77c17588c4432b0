use std::time::Instant;

use super::{reduced_size, Action, Algo, Config, RoundStats, RunOutput, RunStats, TraceEvent};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{rem, BoolPoly};
use crate::sig::{
    field_jpairs, is_mutant, make_jpair, regular_top_reduce, super_top_reducible, JPair,
    LabeledPoly, RuleTable, Signature, SyzygySet,
};
use crate::symbolic::{eliminate_batch, symbolic_process};

use super::PairQueue;

pub(super) struct State<'c> {
    cfg: &'c Config,
    gens: Vec<BoolPoly>,
    basis: Vec<LabeledPoly>,
    syz: SyzygySet,
    rules: RuleTable,
    queue: PairQueue,
    stats: RunStats,
    trace: Vec<TraceEvent>,
    /// Set once a constant enters the basis.
    unit_ideal: bool,
    rounds: usize,
    max_degree: u32,
}

impl<'c> State<'c> {
    pub(super) fn new(system: &[BoolPoly], n_vars: usize, cfg: &'c Config) -> Self {
        let mut st = State {
            cfg,
            gens: Vec::new(),
            basis: Vec::new(),
            syz: SyzygySet::new(),
            rules: RuleTable::new(),
            queue: PairQueue::new(),
            stats: RunStats::new(cfg.algo, n_vars, cfg.deg_limit),
            trace: Vec::new(),
            unit_ideal: false,
            rounds: 0,
            max_degree: cfg.max_degree.unwrap_or(2 * n_vars as u32).max(2),
        };
        let nonzero: Vec<BoolPoly> = system.iter().filter(|f| !f.is_zero()).cloned().collect();
        if nonzero.iter().any(BoolPoly::is_one) {
            st.gens.push(BoolPoly::one());
            st.insert(LabeledPoly {
                sig: Signature::unit(1),
                poly: BoolPoly::one(),
                src_deg: 0,
            });
            return st;
        }
        for (i, f) in nonzero.into_iter().enumerate() {
            let src_deg = f.degree().expect("nonzero");
            st.gens.push(f.clone());
            st.insert(LabeledPoly {
                sig: Signature::unit(i as u32 + 1),
                poly: f,
                src_deg,
            });
        }
        st
    }

    fn insert(&mut self, lp: LabeledPoly) {
        if lp.poly.is_one() {
            self.unit_ideal = true;
        }
        let idx = self.basis.len();
        self.syz.koszul_update(&lp, &self.basis);
        self.basis.push(lp);
        self.rules.insert(idx, &self.basis[idx]);
        for j in 0..idx {
            if let Some(jp) = make_jpair(&self.basis, idx, j) {
                self.queue.push(jp);
            }
        }
        for jp in field_jpairs(&self.basis, idx) {
            self.queue.push(jp);
        }
    }

    fn log(
        &mut self,
        degree: u32,
        sig: Signature,
        lm: Option<Monomial>,
        action: Action,
        poly: Option<&BoolPoly>,
    ) {
        if self.cfg.trace {
            self.trace.push(TraceEvent {
                degree,
                sig,
                lm,
                action,
                poly: poly.cloned(),
            });
        }
    }

    fn next_round(&mut self, degree: u32) -> Result<()> {
        self.rounds += 1;
        if self.rounds > self.cfg.max_rounds {
            return Err(Error::SafetyCap(format!(
                "more than {} rounds",
                self.cfg.max_rounds
            )));
        }
        if degree > self.max_degree {
            return Err(Error::SafetyCap(format!(
                "pair degree {degree} exceeds the cap {}",
                self.max_degree
            )));
        }
        Ok(())
    }

    /// Syzygy and rewriting criteria; true if the pair survives.
    fn screen(&mut self, jp: &JPair, round: &mut RoundStats) -> bool {
        let action = if self.syz.rejects(&jp.sig) {
            round.rejected_syz += 1;
            Action::RejectedSyzygy
        } else if self.rules.is_covered_product(&jp.sig, &jp.mult, &jp.src_lm) {
            round.rejected_rew += 1;
            Action::RejectedRewrite
        } else {
            self.stats.max_degree = self.stats.max_degree.max(jp.degree);
            return true;
        };
        self.log(jp.degree, jp.sig, Some(jp.lead_reduced()), action, None);
        false
    }

    fn add_syzygy(&mut self, degree: u32, s: Signature, round: &mut RoundStats) {
        self.syz.insert(s);
        round.zero += 1;
        self.log(degree, s, None, Action::Zero, None);
    }

    /// Brings `(s, h)` to a regular top-reduced form and either records a
    /// syzygy, drops it as redundant, or inserts it (or its mutant generator).
    fn settle(&mut self, degree: u32, s: Signature, h: BoolPoly, round: &mut RoundStats) {
        let h = regular_top_reduce(&s, &h, &self.basis);
        if h.is_zero() {
            self.add_syzygy(degree, s, round);
            return;
        }
        if super_top_reducible(&s, &h, &self.basis) {
            self.log(degree, s, h.lm().copied(), Action::SuperReducible, None);
            return;
        }
        round.new += 1;
        let src_deg = self.gens[s.index as usize - 1].degree().unwrap_or(0);
        let hdeg = h.degree().expect("nonzero");
        if self.cfg.algo == Algo::Mgvw && is_mutant(&s, &h, src_deg) && hdeg < self.cfg.deg_limit {
            let r = rem(&h, &self.gens);
            if !r.is_zero() {
                self.gens.push(r.clone());
                let k = self.gens.len() as u32;
                self.stats.mutants_appended += 1;
                self.log(degree, s, h.lm().copied(), Action::Mutant(k), Some(&r));
                let src_deg = r.degree().expect("nonzero");
                self.insert(LabeledPoly {
                    sig: Signature::unit(k),
                    poly: r,
                    src_deg,
                });
                return;
            }
        }
        self.log(degree, s, h.lm().copied(), Action::Inserted, Some(&h));
        self.insert(LabeledPoly {
            sig: s,
            poly: h,
            src_deg,
        });
    }

    pub(super) fn run_polynomial(&mut self) -> Result<()> {
        let mut round: Option<RoundStats> = None;
        while !self.unit_ideal {
            let Some(jp) = self.queue.pop() else { break };
            self.next_round(jp.degree)?;
            if round.as_ref().is_some_and(|r| r.degree != jp.degree) {
                self.stats.rounds.extend(round.take());
            }
            let mut r = round.take().unwrap_or_else(|| RoundStats {
                degree: jp.degree,
                ..Default::default()
            });
            r.pairs += 1;
            if self.screen(&jp, &mut r) {
                let (s, f) = jp.realize(&self.basis);
                self.settle(jp.degree, s, f, &mut r);
            }
            round = Some(r);
        }
        self.stats.rounds.extend(round);
        Ok(())
    }

    pub(super) fn run_matrix(&mut self) -> Result<()> {
        while !self.unit_ideal {
            let batch = self.queue.take_min_degree();
            let Some(degree) = batch.first().map(|jp| jp.degree) else {
                break;
            };
            self.next_round(degree)?;
            let mut round = RoundStats {
                degree,
                pairs: batch.len(),
                ..Default::default()
            };
            let kept: Vec<JPair> = batch
                .into_iter()
                .filter(|jp| self.screen(jp, &mut round))
                .collect();
            if !kept.is_empty() {
                let p = symbolic_process(&kept, &self.basis, &self.syz, &self.rules);
                let out = eliminate_batch(&p, &self.basis);
                round.rows = out.rows;
                round.cols = out.cols;
                self.stats.note_matrix(out.rows, out.cols, degree);
                for s in out.zero_sigs {
                    self.add_syzygy(degree, s, &mut round);
                }
                for (s, h) in out.new_rows {
                    if self.unit_ideal {
                        break;
                    }
                    self.settle(degree, s, h, &mut round);
                }
            }
            self.stats.rounds.push(round);
        }
        Ok(())
    }

    pub(super) fn finish(self, start: Instant) -> RunOutput {
        let mut stats = self.stats;
        let basis: Vec<BoolPoly> = self.basis.iter().map(|g| g.poly.clone()).collect();
        stats.basis_size = basis.len();
        stats.reduced_basis_size = reduced_size(&basis);
        stats.wall_ms = start.elapsed().as_millis();
        RunOutput {
            basis,
            labeled: self.basis,
            generators: self.gens,
            syzygies: self.syz.iter().collect(),
            stats,
            trace: self.trace,
        }
    }
}
