//! Per-tree statistics and the exhaustive sweep that feeds them.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::canon::CanonicalCode;
use crate::eigen::{eigenvalues, Spectrum};
use crate::enumerate::enumerate_with_connected_complement;
use crate::error::{Error, Result};
use crate::graph::Tree;
use crate::matrix::eccentricity_matrix;

/// A scalar evaluated on a tree `T` with connected complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtremalStatistic {
    Xi1Complement,
    Xi2Complement,
    XinComplement,
    EnergyComplement,
    Xi2Tree,
    EnergyTree,
    /// `xi_2(T) + xi_2(T^c)`.
    NgXi2,
    /// `E(T) + E(T^c)`.
    NgEnergy,
}

impl ExtremalStatistic {
    pub const ALL: [ExtremalStatistic; 8] = [
        ExtremalStatistic::Xi1Complement,
        ExtremalStatistic::Xi2Complement,
        ExtremalStatistic::XinComplement,
        ExtremalStatistic::EnergyComplement,
        ExtremalStatistic::Xi2Tree,
        ExtremalStatistic::EnergyTree,
        ExtremalStatistic::NgXi2,
        ExtremalStatistic::NgEnergy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExtremalStatistic::Xi1Complement => "xi1-complement",
            ExtremalStatistic::Xi2Complement => "xi2-complement",
            ExtremalStatistic::XinComplement => "xin-complement",
            ExtremalStatistic::EnergyComplement => "energy-complement",
            ExtremalStatistic::Xi2Tree => "xi2-tree",
            ExtremalStatistic::EnergyTree => "energy-tree",
            ExtremalStatistic::NgXi2 => "ng-xi2",
            ExtremalStatistic::NgEnergy => "ng-energy",
        }
    }

    /// Evaluates the statistic from scratch.
    pub fn evaluate(self, tree: &Tree) -> Result<f64> {
        Ok(self.of(&TreeRecord::new(tree.clone())?))
    }

    /// Reads the statistic off precomputed spectra.
    pub fn of(self, r: &TreeRecord) -> f64 {
        match self {
            ExtremalStatistic::Xi1Complement => r.complement.spectral_radius(),
            ExtremalStatistic::Xi2Complement => r.complement.second_largest(),
            ExtremalStatistic::XinComplement => r.complement.least(),
            ExtremalStatistic::EnergyComplement => r.complement.energy(),
            ExtremalStatistic::Xi2Tree => r.tree_spectrum.second_largest(),
            ExtremalStatistic::EnergyTree => r.tree_spectrum.energy(),
            ExtremalStatistic::NgXi2 => {
                r.tree_spectrum.second_largest() + r.complement.second_largest()
            }
            ExtremalStatistic::NgEnergy => r.tree_spectrum.energy() + r.complement.energy(),
        }
    }
}

impl fmt::Display for ExtremalStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExtremalStatistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExtremalStatistic::ALL
            .into_iter()
            .find(|stat| stat.name() == s)
            .ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!(
                    "unknown statistic `{s}`; expected one of {}",
                    ExtremalStatistic::ALL.map(|x| x.name()).join(", ")
                ),
            })
    }
}

impl Serialize for ExtremalStatistic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A tree together with the spectra of `E(T)` and `E(T^c)`.
#[derive(Clone, Debug)]
pub struct TreeRecord {
    pub code: CanonicalCode,
    pub tree: Tree,
    pub diameter: u32,
    pub tree_spectrum: Spectrum,
    pub complement: Spectrum,
}

impl TreeRecord {
    pub fn new(tree: Tree) -> Result<Self> {
        let diameter = tree.ecc_info()?.diameter;
        let tree_spectrum = eigenvalues(&eccentricity_matrix(&tree)?)?;
        let complement = eigenvalues(&eccentricity_matrix(&tree.complement())?)?;
        Ok(TreeRecord {
            code: CanonicalCode::of(&tree),
            tree,
            diameter,
            tree_spectrum,
            complement,
        })
    }

    pub fn order(&self) -> usize {
        self.tree.order()
    }
}

/// Every non-star tree on `n` vertices with both spectra, in canonical-code
/// order. Runs on the current rayon pool.
pub fn sweep(n: usize) -> Result<Vec<TreeRecord>> {
    let trees: Vec<Tree> = enumerate_with_connected_complement(n)?
        .into_iter()
        .map(|(_, t)| t)
        .collect();
    trees.into_par_iter().map(TreeRecord::new).collect()
}

/// One row of an extremal table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankedTree {
    pub n: usize,
    pub rank: usize,
    pub code: CanonicalCode,
    pub statistic: ExtremalStatistic,
    pub value: f64,
    pub edges: Vec<(usize, usize)>,
}

/// Values closer than this are ranked as ties and ordered by code.
pub const RANK_TIE_TOL: f64 = 1e-9;

/// Ranks records by `stat`, descending. Ties (within [`RANK_TIE_TOL`] of
/// the first tree of their run) share a rank and are ordered by code.
pub fn rank(records: &[TreeRecord], stat: ExtremalStatistic) -> Vec<RankedTree> {
    let mut rows: Vec<(f64, &TreeRecord)> = records.iter().map(|r| (stat.of(r), r)).collect();
    rows.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.code.cmp(&b.1.code)));
    // regroup runs of near-equal values so that code order decides within them
    let mut out: Vec<RankedTree> = Vec::with_capacity(rows.len());
    let mut start = 0;
    while start < rows.len() {
        let head = rows[start].0;
        let end = start
            + rows[start..]
                .iter()
                .take_while(|(v, _)| head - v <= RANK_TIE_TOL)
                .count();
        let run = &mut rows[start..end];
        run.sort_by(|a, b| a.1.code.cmp(&b.1.code));
        for &(value, r) in run.iter() {
            out.push(RankedTree {
                n: r.order(),
                rank: start + 1,
                code: r.code.clone(),
                statistic: stat,
                value,
                edges: r.tree.edges(),
            });
        }
        start = end;
    }
    out
}
