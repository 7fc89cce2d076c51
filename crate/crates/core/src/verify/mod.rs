//! Exhaustive verification of the extremal and spectral claims over all
//! trees of a given order.
//!
//! Each [`TheoremId`] names one claim. [`check`] sweeps every non-star tree
//! for each order in the range, evaluates the relevant statistic on a worker
//! pool and assembles a [`TheoremReport`] in canonical-code order, so output
//! does not depend on scheduling.

mod appendix;
mod checks;
mod stats;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::canon::CanonicalCode;
use crate::error::{Error, Result};
use crate::graph::Tree;

pub use appendix::{appendix_rows, appendix_table_crosscheck, AppendixRow, TABLE_TOLERANCE};
pub use stats::{rank, sweep, ExtremalStatistic, RankedTree, TreeRecord, RANK_TIE_TOL};

/// Smallest order covered by the exhaustive checks.
pub const MIN_ORDER: usize = 4;
/// Largest order covered by the exhaustive checks.
pub const MAX_ORDER: usize = 12;
/// Default upper end of the range; 11 and 12 are opt-in.
pub const DEFAULT_MAX_ORDER: usize = 10;
/// Equality window for numeric comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;
/// A unique extremum must beat the runner-up by more than this.
pub const SEPARATION: f64 = 1e-6;
/// Equality window for the Nordhaus–Gaddum attainer.
pub const NG_EQUALITY_TOL: f64 = 1e-6;

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal: $desc:literal,)*) => {
        /// The verifiable claims.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
        pub enum TheoremId {
            $(#[serde(rename = $name)] $variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self { $(TheoremId::$variant => $name,)* }
            }

            /// One-line statement of the claim.
            pub fn description(self) -> &'static str {
                match self { $(TheoremId::$variant => $desc,)* }
            }
        }
    };
}

theorem_ids! {
    SpecSym => "SPEC_SYM": "the spectrum of E(T^c) is symmetric about the origin",
    Xi1Min => "XI1_MIN": "xi1(T^c) >= xi1(P_n^c), uniquely at P_n",
    Xi1Max => "XI1_MAX": "xi1(T^c) <= xi1((T_{n,3}^{0,n-4})^c), uniquely at T_{n,3}^{0,n-4}",
    Xi1OrderD3 => "XI1_ORDER_D3": "xi1((T_{n,3}^{a,b})^c) strictly decreases in a",
    Xi2OrderD3 => "XI2_ORDER_D3": "xi2((T_{n,3}^{a,b})^c) strictly increases in a",
    Xi2Min => "XI2_MIN": "xi2(T^c) >= xi2((T_{n,3}^{0,n-4})^c), uniquely at T_{n,3}^{0,n-4}",
    Xi2Max => "XI2_MAX": "xi2(T^c) <= sqrt(2(n-3)) for diameter >= 4, except T_{n,5}^{s-1,s-1} at n = 2s+4",
    XinMin => "XIN_MIN": "xi_n(T^c) >= xi_n((T_{n,3}^{0,n-4})^c), uniquely at T_{n,3}^{0,n-4}",
    XinMax => "XIN_MAX": "xi_n(T^c) <= xi_n(P_n^c), uniquely at P_n",
    EnergyOrderD3 => "ENERGY_ORDER_D3": "E((T_{n,3}^{a,b})^c) strictly increases in a",
    EnergyMin => "ENERGY_MIN": "E(T^c) >= E((T_{n,3}^{0,n-4})^c), uniquely at T_{n,3}^{0,n-4}",
    EnergyMax => "ENERGY_MAX": "E(T^c) <= E(P_n^c), uniquely at P_n",
    NgXi2 => "NG_XI2": "xi2(T) + xi2(T^c) is bounded below, with equality only at T_{n,3}^{0,n-4}",
    NgEnergy => "NG_ENERGY": "E(T) + E(T^c) is bounded below, with equality only at T_{n,3}^{0,n-4}",
    LemmaT3 => "LEMMA_T3": "explicit spectrum of E((T_{n,3}^{a,b})^c)",
    LemmaT4 => "LEMMA_T4": "explicit spectrum of E((T_{n,4}^{0,n-5})^c)",
    QuotientContainment => "QUOTIENT_CONTAINMENT": "equitable quotient eigenvalues lie in the full spectrum",
    EccVs2a => "ECC_VS_2A": "E(T^c) = 2A(T) for diameter >= 4; one extra entry 3 at the central edge for diameter 3",
    AppendixTable => "APPENDIX_TABLE": "tabulated E(T^c) for the seven trees on 5 and 6 vertices",
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase().replace('-', "_");
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == upper)
            .ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!("unknown theorem id `{s}`"),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    /// Nothing in the range is asserted; data only.
    Informational,
}

/// A tree singled out by a check, with the value that earned it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub n: usize,
    pub role: String,
    pub code: CanonicalCode,
    pub edges: Vec<(usize, usize)>,
    pub value: f64,
}

/// A tree whose observed value disagrees with the claim.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discrepancy {
    pub n: usize,
    pub code: CanonicalCode,
    pub edges: Vec<(usize, usize)>,
    pub observed: f64,
    pub claimed: f64,
    pub note: String,
}

/// Outcome of one check over an order range.
///
/// `counterexamples` only ever holds asserted failures, so the verdict is
/// `Fails` exactly when it is nonempty. Deviations in orders the claim does
/// not cover go to `informational`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub n_range: [usize; 2],
    pub verdict: Verdict,
    pub tolerance: f64,
    pub witnesses: Vec<Witness>,
    pub counterexamples: Vec<Discrepancy>,
    pub informational: Vec<Discrepancy>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<AppendixRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
}

impl TheoremReport {
    fn new(id: TheoremId, lo: usize, hi: usize, tolerance: f64) -> Self {
        TheoremReport {
            id,
            n_range: [lo, hi],
            verdict: Verdict::Informational,
            tolerance,
            witnesses: Vec::new(),
            counterexamples: Vec::new(),
            informational: Vec::new(),
            notes: Vec::new(),
            table: None,
            wall_time_s: None,
        }
    }

    /// Drops the wall time so that repeated runs serialize identically.
    pub fn without_timing(mut self) -> Self {
        self.wall_time_s = None;
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict != Verdict::Fails
    }

    fn finish(&mut self, asserted_any: bool) {
        self.verdict = if !self.counterexamples.is_empty() {
            Verdict::Fails
        } else if asserted_any {
            Verdict::Holds
        } else {
            Verdict::Informational
        };
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheckOptions {
    /// Worker threads; `None` lets rayon decide.
    pub jobs: Option<usize>,
    pub tolerance: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            jobs: None,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

/// Shared state for a run: the worker pool and one sweep per order.
pub struct Verifier {
    pool: rayon::ThreadPool,
    opts: CheckOptions,
    sweeps: BTreeMap<usize, Vec<TreeRecord>>,
}

impl Verifier {
    pub fn new(opts: CheckOptions) -> Result<Self> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(j) = opts.jobs {
            if j == 0 {
                return Err(Error::WorkerPool("jobs must be at least 1".into()));
            }
            builder = builder.num_threads(j);
        }
        let pool = builder
            .build()
            .map_err(|e| Error::WorkerPool(e.to_string()))?;
        Ok(Verifier {
            pool,
            opts,
            sweeps: BTreeMap::new(),
        })
    }

    pub fn options(&self) -> CheckOptions {
        self.opts
    }

    /// Non-star trees of order `n` with spectra, computed once per order.
    pub fn records(&mut self, n: usize) -> Result<&[TreeRecord]> {
        if !self.sweeps.contains_key(&n) {
            let records = self.pool.install(|| sweep(n))?;
            self.sweeps.insert(n, records);
        }
        Ok(&self.sweeps[&n])
    }

    pub fn check(&mut self, id: TheoremId, lo: usize, hi: usize) -> Result<TheoremReport> {
        check_range(lo, hi)?;
        let start = Instant::now();
        let mut report = if id == TheoremId::AppendixTable {
            appendix_table_crosscheck()?
        } else {
            let mut report = TheoremReport::new(id, lo, hi, self.opts.tolerance);
            let asserted = checks::run(self, id, lo, hi, &mut report)?;
            report.finish(asserted);
            report
        };
        report.wall_time_s = Some(start.elapsed().as_secs_f64());
        Ok(report)
    }

    pub fn check_all(&mut self, lo: usize, hi: usize) -> Result<Vec<TheoremReport>> {
        TheoremId::ALL
            .iter()
            .map(|&id| self.check(id, lo, hi))
            .collect()
    }

    /// All non-star trees of order `n` ranked by `stat`, descending.
    pub fn extremal_table(&mut self, stat: ExtremalStatistic, n: usize) -> Result<Vec<RankedTree>> {
        check_range(n, n)?;
        Ok(rank(self.records(n)?, stat))
    }
}

fn check_range(lo: usize, hi: usize) -> Result<()> {
    if lo < MIN_ORDER || hi > MAX_ORDER || lo > hi {
        return Err(Error::RangeUnsupported {
            lo,
            hi,
            min: MIN_ORDER,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

/// Runs one check with a fresh [`Verifier`].
pub fn check(id: TheoremId, lo: usize, hi: usize, opts: CheckOptions) -> Result<TheoremReport> {
    Verifier::new(opts)?.check(id, lo, hi)
}

/// Runs every check over `lo..=hi`, sharing sweeps between them.
pub fn check_all(lo: usize, hi: usize, opts: CheckOptions) -> Result<Vec<TheoremReport>> {
    Verifier::new(opts)?.check_all(lo, hi)
}

/// Ranks every non-star tree of order `n` by `stat`.
pub fn extremal_table(stat: ExtremalStatistic, n: usize, opts: CheckOptions) -> Result<Vec<RankedTree>> {
    Verifier::new(opts)?.extremal_table(stat, n)
}

fn witness(n: usize, role: impl Into<String>, code: &CanonicalCode, tree: &Tree, value: f64) -> Witness {
    Witness {
        n,
        role: role.into(),
        code: code.clone(),
        edges: tree.edges(),
        value,
    }
}

fn discrepancy(
    code: &CanonicalCode,
    tree: &Tree,
    observed: f64,
    claimed: f64,
    note: impl Into<String>,
) -> Discrepancy {
    Discrepancy {
        n: tree.order(),
        code: code.clone(),
        edges: tree.edges(),
        observed,
        claimed,
        note: note.into(),
    }
}
