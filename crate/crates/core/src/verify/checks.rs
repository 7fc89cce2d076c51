//! The individual checks behind [`super::TheoremId`].

use std::collections::BTreeSet;

use super::{
    discrepancy, witness, Discrepancy, ExtremalStatistic, TheoremId, TheoremReport, TreeRecord,
    Verifier, NG_EQUALITY_TOL, SEPARATION,
};
use crate::canon::CanonicalCode;
use crate::closed_form::{
    bounds_diam3, energy_bounds_diam3, energy_t3_complement, nordhaus_gaddum_bounds,
    path_complement_energy, spec_t3_complement, spec_t4_complement, xi1_path_complement,
    CubicForm,
};
use crate::eigen::{eigenvalues, Spectrum};
use crate::error::Result;
use crate::families::{build_dnd, build_t3, path};
use crate::graph::Tree;
use crate::matrix::{eccentricity_matrix, quotient, t3_partition, t4_partition, Partition};

/// Runs `id` over `lo..=hi`, filling `report`. Returns whether any order in
/// the range was asserted.
pub(super) fn run(
    v: &mut Verifier,
    id: TheoremId,
    lo: usize,
    hi: usize,
    report: &mut TheoremReport,
) -> Result<bool> {
    let mut asserted_any = false;
    for n in lo..=hi {
        asserted_any |= match id {
            TheoremId::SpecSym => spec_sym(v, n, report)?,
            TheoremId::Xi1Min => extremum(v, n, report, xi1_min(n)?)?,
            TheoremId::Xi1Max => extremum(v, n, report, xi1_max(n)?)?,
            TheoremId::XinMin => extremum(v, n, report, xin_min(n)?)?,
            TheoremId::XinMax => extremum(v, n, report, xin_max(n)?)?,
            TheoremId::Xi2Min => extremum(v, n, report, xi2_min(n)?)?,
            TheoremId::EnergyMin => extremum(v, n, report, energy_min(n)?)?,
            TheoremId::EnergyMax => extremum(v, n, report, energy_max(n)?)?,
            TheoremId::Xi2Max => xi2_max(v, n, report)?,
            TheoremId::Xi1OrderD3 => ordering(v, n, report, Ordering::Xi1)?,
            TheoremId::Xi2OrderD3 => ordering(v, n, report, Ordering::Xi2)?,
            TheoremId::EnergyOrderD3 => ordering(v, n, report, Ordering::Energy)?,
            TheoremId::NgXi2 => nordhaus_gaddum(v, n, report, ExtremalStatistic::NgXi2)?,
            TheoremId::NgEnergy => nordhaus_gaddum(v, n, report, ExtremalStatistic::NgEnergy)?,
            TheoremId::LemmaT3 => lemma_t3(n, report)?,
            TheoremId::LemmaT4 => lemma_t4(n, report)?,
            TheoremId::QuotientContainment => quotient_containment(n, report)?,
            TheoremId::EccVs2a => ecc_vs_2a(v, n, report)?,
            TheoremId::AppendixTable => unreachable!("handled by the caller"),
        };
    }
    match id {
        TheoremId::Xi2Max => report
            .notes
            .push("statistic: xi2 of the complement, over trees of diameter >= 4".into()),
        TheoremId::EnergyMin | TheoremId::EnergyMax | TheoremId::NgEnergy => report.notes.push(
            "asserted for n = 4 and n >= 7; n = 5, 6 are reported without assertion".into(),
        ),
        TheoremId::LemmaT4 => report
            .notes
            .push("asserted for n >= 6; n = 5 is reported without assertion".into()),
        _ => {}
    }
    Ok(asserted_any)
}

fn t3_name(n: usize, a: usize, b: usize) -> String {
    format!("T_{{{n},3}}^{{{a},{b}}}")
}

fn dnd_name(n: usize, d: usize, a: usize, b: usize) -> String {
    format!("T_{{{n},{d}}}^{{{a},{b}}}")
}

fn skew_t3(n: usize) -> Result<(Tree, String)> {
    Ok((build_t3(n, 0, n - 4)?, t3_name(n, 0, n - 4)))
}

fn path_attainer(n: usize) -> Result<(Tree, String)> {
    Ok((path(n)?, format!("P_{n}")))
}

/// `xi_1(P_n^c)`. P4 has diameter 3, so its value comes from the double
/// broom spectrum rather than the cosine form.
fn xi1_of_path_complement(n: usize) -> Result<f64> {
    if n == 4 {
        return Ok(spec_t3_complement(4, 0, 0)?.values_desc()[0]);
    }
    xi1_path_complement(n)
}

fn energy_of_path_complement(n: usize) -> Result<f64> {
    if n == 4 {
        return energy_t3_complement(4, 0, 0);
    }
    path_complement_energy(n)
}

/// Orders where the energy claims are asserted.
fn energy_asserted(n: usize) -> bool {
    n == 4 || n >= 7
}

#[derive(Clone, Copy, PartialEq)]
enum Direction {
    Min,
    Max,
}

struct ExtremumClaim {
    stat: ExtremalStatistic,
    dir: Direction,
    attainer: Tree,
    attainer_name: String,
    claimed: f64,
    asserted: bool,
}

fn claim(
    stat: ExtremalStatistic,
    dir: Direction,
    (attainer, attainer_name): (Tree, String),
    claimed: f64,
    asserted: bool,
) -> ExtremumClaim {
    ExtremumClaim {
        stat,
        dir,
        attainer,
        attainer_name,
        claimed,
        asserted,
    }
}

fn xi1_min(n: usize) -> Result<ExtremumClaim> {
    let value = xi1_of_path_complement(n)?;
    Ok(claim(ExtremalStatistic::Xi1Complement, Direction::Min, path_attainer(n)?, value, true))
}

fn xi1_max(n: usize) -> Result<ExtremumClaim> {
    let value = bounds_diam3(n)?.xi1_max.value;
    Ok(claim(ExtremalStatistic::Xi1Complement, Direction::Max, skew_t3(n)?, value, true))
}

fn xin_min(n: usize) -> Result<ExtremumClaim> {
    let value = -bounds_diam3(n)?.xi1_max.value;
    Ok(claim(ExtremalStatistic::XinComplement, Direction::Min, skew_t3(n)?, value, true))
}

fn xin_max(n: usize) -> Result<ExtremumClaim> {
    let value = -xi1_of_path_complement(n)?;
    Ok(claim(ExtremalStatistic::XinComplement, Direction::Max, path_attainer(n)?, value, true))
}

fn xi2_min(n: usize) -> Result<ExtremumClaim> {
    let value = bounds_diam3(n)?.xi2_min.value;
    Ok(claim(ExtremalStatistic::Xi2Complement, Direction::Min, skew_t3(n)?, value, true))
}

fn energy_min(n: usize) -> Result<ExtremumClaim> {
    let value = energy_bounds_diam3(n)?.0.value;
    Ok(claim(
        ExtremalStatistic::EnergyComplement,
        Direction::Min,
        skew_t3(n)?,
        value,
        energy_asserted(n),
    ))
}

fn energy_max(n: usize) -> Result<ExtremumClaim> {
    let value = energy_of_path_complement(n)?;
    Ok(claim(
        ExtremalStatistic::EnergyComplement,
        Direction::Max,
        path_attainer(n)?,
        value,
        energy_asserted(n),
    ))
}

fn file(report: &mut TheoremReport, asserted: bool, d: Discrepancy) {
    if asserted {
        report.counterexamples.push(d);
    } else {
        report.informational.push(d);
    }
}

/// Shared min/max logic: bound, attainer value and uniqueness.
fn extremum(v: &mut Verifier, n: usize, report: &mut TheoremReport, c: ExtremumClaim) -> Result<bool> {
    let tol = v.options().tolerance;
    let records = v.records(n)?;
    let values: Vec<(f64, &TreeRecord)> = records.iter().map(|r| (c.stat.of(r), r)).collect();
    // signed so that "better" always means smaller
    let sign = if c.dir == Direction::Min { 1.0 } else { -1.0 };
    let best = values
        .iter()
        .map(|(x, _)| sign * x)
        .fold(f64::INFINITY, f64::min);
    let (ties, rest): (Vec<_>, Vec<_>) = values
        .iter()
        .partition(|(x, _)| sign * x - best <= tol);
    let runner_up = rest.iter().map(|(x, _)| sign * x).fold(f64::INFINITY, f64::min);
    let gap = runner_up - best;
    let claimed_code = CanonicalCode::of(&c.attainer);
    let role = if c.dir == Direction::Min { "minimizer" } else { "maximizer" };

    for (x, r) in &ties {
        report.witnesses.push(witness(n, role, &r.code, &r.tree, *x));
    }
    let attainer_value = match values.iter().find(|(_, r)| r.code == claimed_code) {
        Some(&(x, _)) => x,
        None => c.stat.evaluate(&c.attainer)?,
    };
    if !ties.iter().any(|(_, r)| r.code == claimed_code) {
        report.witnesses.push(witness(
            n,
            format!("claimed {}", c.attainer_name),
            &claimed_code,
            &c.attainer,
            attainer_value,
        ));
    }

    if (attainer_value - c.claimed).abs() > tol {
        file(
            report,
            c.asserted,
            discrepancy(
                &claimed_code,
                &c.attainer,
                attainer_value,
                c.claimed,
                format!("{} does not attain the closed-form value", c.attainer_name),
            ),
        );
    }
    for &(x, r) in &values {
        if sign * x < sign * c.claimed - tol {
            let side = if c.dir == Direction::Min { "below the claimed minimum" } else { "above the claimed maximum" };
            file(report, c.asserted, discrepancy(&r.code, &r.tree, x, c.claimed, side));
        } else if r.code != claimed_code && (x - c.claimed).abs() <= tol {
            file(
                report,
                c.asserted,
                discrepancy(&r.code, &r.tree, x, c.claimed, format!("ties {}", c.attainer_name)),
            );
        }
    }
    if gap.is_finite() && gap > tol && gap <= SEPARATION {
        report.notes.push(format!(
            "n = {n}: numerically ambiguous, runner-up within {gap:.1e} of the extremum"
        ));
    }
    if !c.asserted && !report.informational.iter().any(|d| d.n == n) {
        report.notes.push(format!(
            "n = {n}: not asserted; {} is the {role} as claimed",
            c.attainer_name
        ));
    }
    Ok(c.asserted)
}

fn spec_sym(v: &mut Verifier, n: usize, report: &mut TheoremReport) -> Result<bool> {
    let tol = v.options().tolerance;
    let records = v.records(n)?;
    let mut worst: Option<(f64, &TreeRecord)> = None;
    for r in records {
        let dev = asymmetry(&r.complement);
        if dev > tol {
            report
                .counterexamples
                .push(discrepancy(&r.code, &r.tree, dev, 0.0, "spectrum not symmetric"));
        }
        if worst.is_none_or(|(w, _)| dev > w) {
            worst = Some((dev, r));
        }
    }
    if let Some((dev, r)) = worst {
        report
            .witnesses
            .push(witness(n, "largest asymmetry", &r.code, &r.tree, dev));
    }
    report.notes.push(format!("n = {n}: {} trees checked", records.len()));
    Ok(true)
}

/// `max_i |xi_i + xi_{n+1-i}|`.
fn asymmetry(s: &Spectrum) -> f64 {
    let v = s.values();
    v.iter()
        .zip(v.iter().rev())
        .map(|(a, b)| (a + b).abs())
        .fold(0.0, f64::max)
}

/// Maximizers of `xi_2(T^c)` over trees of diameter at least 4.
fn xi2_max(v: &mut Verifier, n: usize, report: &mut TheoremReport) -> Result<bool> {
    let tol = v.options().tolerance;
    let bound = (2.0 * (n as f64 - 3.0)).sqrt();
    let records: Vec<&TreeRecord> = v.records(n)?.iter().filter(|r| r.diameter >= 4).collect();
    if records.is_empty() {
        report.notes.push(format!("n = {n}: no trees of diameter >= 4"));
        return Ok(true);
    }
    let stat = ExtremalStatistic::Xi2Complement;

    if n.is_multiple_of(2) {
        let s = (n - 4) / 2;
        let name = dnd_name(n, 5, s - 1, s - 1);
        let exceptional = build_dnd(n, 5, s - 1, s - 1)?;
        let ex_code = CanonicalCode::of(&exceptional);
        let mut others_max: Option<(f64, &TreeRecord)> = None;
        for &r in &records {
            let x = stat.of(r);
            if r.code == ex_code {
                continue;
            }
            if x > bound + tol {
                report.counterexamples.push(discrepancy(&r.code, &r.tree, x, bound, "exceeds sqrt(2(n-3))"));
            }
            if others_max.is_none_or(|(m, _)| x > m) {
                others_max = Some((x, r));
            }
        }
        let observed = match records.iter().find(|r| r.code == ex_code) {
            Some(r) => stat.of(r),
            None => stat.evaluate(&exceptional)?,
        };
        report
            .witnesses
            .push(witness(n, format!("exceptional {name}"), &ex_code, &exceptional, observed));
        if let Some((x, r)) = others_max {
            report
                .witnesses
                .push(witness(n, "largest other", &r.code, &r.tree, x));
        }
        if observed <= bound + tol {
            report.counterexamples.push(discrepancy(
                &ex_code,
                &exceptional,
                observed,
                bound,
                format!("{name} does not exceed sqrt(2(n-3))"),
            ));
        }
        let mut matched = Vec::new();
        for form in CubicForm::ALL {
            let predicted = 2.0 * form.positive_root(s)?;
            let diff = (predicted - observed).abs();
            let ok = diff <= tol;
            if ok {
                matched.push(form);
            }
            report.notes.push(format!(
                "n = {n} (s = {s}): 2 x root of {form} = {predicted:.10}, solver {observed:.10}, |diff| = {diff:.1e}: {}",
                if ok { "match" } else { "no match" }
            ));
        }
        if !matched.contains(&CubicForm::Resolved) {
            report.counterexamples.push(discrepancy(
                &ex_code,
                &exceptional,
                observed,
                2.0 * CubicForm::Resolved.positive_root(s)?,
                format!("{name} does not match the cubic {}", CubicForm::Resolved),
            ));
        }
        return Ok(true);
    }

    // odd n = 2s + 3: the bound is attained by up to three trees
    let s = (n - 3) / 2;
    let mut claimed: Vec<(Tree, String)> = vec![(build_dnd(n, 4, s - 1, s - 1)?, dnd_name(n, 4, s - 1, s - 1))];
    if s >= 2 {
        claimed.push((build_dnd(n, 5, s - 2, s - 1)?, dnd_name(n, 5, s - 2, s - 1)));
        claimed.push((build_dnd(n, 6, s - 2, s - 2)?, dnd_name(n, 6, s - 2, s - 2)));
    }
    let claimed_codes: BTreeSet<CanonicalCode> = claimed.iter().map(|(t, _)| CanonicalCode::of(t)).collect();
    let mut runner_up = f64::NEG_INFINITY;
    for &r in &records {
        let x = stat.of(r);
        let is_claimed = claimed_codes.contains(&r.code);
        if x > bound + tol {
            report
                .counterexamples
                .push(discrepancy(&r.code, &r.tree, x, bound, "exceeds sqrt(2(n-3))"));
        } else if is_claimed {
            if (x - bound).abs() > tol {
                report
                    .counterexamples
                    .push(discrepancy(&r.code, &r.tree, x, bound, "claimed maximizer misses the bound"));
            } else {
                report.witnesses.push(witness(n, "maximizer", &r.code, &r.tree, x));
            }
        } else if (x - bound).abs() <= tol {
            report
                .counterexamples
                .push(discrepancy(&r.code, &r.tree, x, bound, "unexpected maximizer"));
        } else {
            runner_up = runner_up.max(x);
        }
    }
    let gap = bound - runner_up;
    if gap.is_finite() && gap <= SEPARATION {
        report.notes.push(format!(
            "n = {n}: numerically ambiguous, runner-up within {gap:.1e} of the bound"
        ));
    }
    report.notes.push(format!(
        "n = {n}: claimed maximizers {}",
        claimed.iter().map(|(_, name)| name.as_str()).collect::<Vec<_>>().join(", ")
    ));
    Ok(true)
}

#[derive(Clone, Copy)]
enum Ordering {
    Xi1,
    Xi2,
    Energy,
}

/// Monotonicity of the double broom family in the split `a`, and agreement
/// with the closed forms. Also confirms the brooms are every diameter-3 tree.
fn ordering(v: &mut Verifier, n: usize, report: &mut TheoremReport, which: Ordering) -> Result<bool> {
    let tol = v.options().tolerance;
    let (stat, increasing) = match which {
        Ordering::Xi1 => (ExtremalStatistic::Xi1Complement, false),
        Ordering::Xi2 => (ExtremalStatistic::Xi2Complement, true),
        Ordering::Energy => (ExtremalStatistic::EnergyComplement, true),
    };
    let mut prev: Option<f64> = None;
    let mut family_codes = BTreeSet::new();
    for a in 0..=(n - 4) / 2 {
        let b = n - 4 - a;
        let t = build_t3(n, a, b)?;
        let r = TreeRecord::new(t)?;
        let x = stat.of(&r);
        let closed = match which {
            Ordering::Xi1 => spec_t3_complement(n, a, b)?.values_desc()[0],
            Ordering::Xi2 => spec_t3_complement(n, a, b)?.values_desc()[1],
            Ordering::Energy => energy_t3_complement(n, a, b)?,
        };
        if (x - closed).abs() > tol {
            report.counterexamples.push(discrepancy(
                &r.code,
                &r.tree,
                x,
                closed,
                format!("{} disagrees with its closed form", t3_name(n, a, b)),
            ));
        }
        if let Some(p) = prev {
            let step = if increasing { x - p } else { p - x };
            if step <= tol {
                report.counterexamples.push(discrepancy(
                    &r.code,
                    &r.tree,
                    x,
                    p,
                    format!("not strictly {} at a = {a}", if increasing { "increasing" } else { "decreasing" }),
                ));
            }
        }
        prev = Some(x);
        report
            .witnesses
            .push(witness(n, t3_name(n, a, b), &r.code, &r.tree, x));
        family_codes.insert(r.code);
    }
    let diam3: BTreeSet<CanonicalCode> = v
        .records(n)?
        .iter()
        .filter(|r| r.diameter == 3)
        .map(|r| r.code.clone())
        .collect();
    if diam3 != family_codes {
        report.notes.push(format!(
            "n = {n}: the diameter-3 trees are not exactly the double brooms ({} vs {})",
            diam3.len(),
            family_codes.len()
        ));
    }
    Ok(true)
}

fn nordhaus_gaddum(
    v: &mut Verifier,
    n: usize,
    report: &mut TheoremReport,
    stat: ExtremalStatistic,
) -> Result<bool> {
    let tol = v.options().tolerance;
    let (xi2, energy) = nordhaus_gaddum_bounds(n)?;
    let (bound, asserted) = match stat {
        ExtremalStatistic::NgXi2 => (xi2.value, true),
        _ => (energy.value, energy_asserted(n)),
    };
    let (attainer, name) = skew_t3(n)?;
    let attainer_code = CanonicalCode::of(&attainer);
    let mut equality = BTreeSet::new();
    let records = v.records(n)?;
    for r in records {
        let x = stat.of(r);
        if x < bound - tol {
            file(report, asserted, discrepancy(&r.code, &r.tree, x, bound, "below the lower bound"));
        }
        if (x - bound).abs() <= NG_EQUALITY_TOL {
            equality.insert(r.code.clone());
            report.witnesses.push(witness(n, "equality", &r.code, &r.tree, x));
        }
    }
    if !equality.contains(&attainer_code) {
        let x = stat.evaluate(&attainer)?;
        file(
            report,
            asserted,
            discrepancy(&attainer_code, &attainer, x, bound, format!("{name} does not attain the bound")),
        );
    }
    for r in records.iter().filter(|r| r.code != attainer_code && equality.contains(&r.code)) {
        let x = stat.of(r);
        file(report, asserted, discrepancy(&r.code, &r.tree, x, bound, format!("attains the bound besides {name}")));
    }
    Ok(asserted)
}

fn max_deviation(observed: &[f64], expected: &[f64]) -> f64 {
    if observed.len() != expected.len() {
        return f64::INFINITY;
    }
    observed
        .iter()
        .zip(expected)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

fn lemma_t3(n: usize, report: &mut TheoremReport) -> Result<bool> {
    let tol = report.tolerance;
    let mut worst = 0.0f64;
    for a in 0..=(n - 4) / 2 {
        let b = n - 4 - a;
        let t = build_t3(n, a, b)?;
        let code = CanonicalCode::of(&t);
        let solved = eigenvalues(&eccentricity_matrix(&t.complement())?)?;
        let closed = spec_t3_complement(n, a, b)?;
        let dev = max_deviation(solved.values(), &closed.values_desc());
        worst = worst.max(dev);
        if dev > tol {
            report.counterexamples.push(discrepancy(
                &code,
                &t,
                dev,
                0.0,
                format!("{}: spectrum deviates from the closed form", t3_name(n, a, b)),
            ));
        }
        report
            .witnesses
            .push(witness(n, t3_name(n, a, b), &code, &t, solved.energy()));
    }
    report
        .notes
        .push(format!("n = {n}: max eigenvalue deviation {worst:.1e}"));
    Ok(true)
}

fn lemma_t4(n: usize, report: &mut TheoremReport) -> Result<bool> {
    if n < 5 {
        report.notes.push(format!("n = {n}: T_{{n,4}}^{{0,n-5}} needs n >= 5"));
        return Ok(false);
    }
    let tol = report.tolerance;
    let asserted = n >= 6;
    let t = build_dnd(n, 4, 0, n - 5)?;
    let code = CanonicalCode::of(&t);
    let solved = eigenvalues(&eccentricity_matrix(&t.complement())?)?;
    let closed = spec_t4_complement(n)?;
    let dev = max_deviation(solved.values(), &closed.values_desc());
    if dev > tol {
        file(
            report,
            asserted,
            discrepancy(&code, &t, dev, 0.0, "spectrum deviates from the closed form"),
        );
    }
    report
        .witnesses
        .push(witness(n, dnd_name(n, 4, 0, n - 5), &code, &t, solved.energy()));
    let suffix = if asserted { "" } else { " (not asserted; T_{5,4}^{0,0} is P5)" };
    report
        .notes
        .push(format!("n = {n}: max eigenvalue deviation {dev:.1e}{suffix}"));
    Ok(asserted)
}

/// Largest distance from a quotient eigenvalue to the nearest full one.
fn containment_gap(full: &Spectrum, part: &Spectrum) -> f64 {
    part.values()
        .iter()
        .map(|q| {
            full.values()
                .iter()
                .map(|x| (x - q).abs())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

fn quotient_containment(n: usize, report: &mut TheoremReport) -> Result<bool> {
    let tol = report.tolerance;
    let mut cases: Vec<(Tree, Partition, String)> = Vec::new();
    for a in 0..=(n - 4) / 2 {
        let b = n - 4 - a;
        cases.push((build_t3(n, a, b)?, t3_partition(n, a, b)?, format!("Q1 on {}", t3_name(n, a, b))));
    }
    if n >= 5 {
        cases.push((build_dnd(n, 4, 0, n - 5)?, t4_partition(n)?, format!("Q2 on {}", dnd_name(n, 4, 0, n - 5))));
    }
    for (t, p, label) in cases {
        let code = CanonicalCode::of(&t);
        let m = eccentricity_matrix(&t.complement())?;
        let full = eigenvalues(&m)?;
        let q = quotient(&m, &p)?;
        if !q.equitable {
            report
                .counterexamples
                .push(discrepancy(&code, &t, 0.0, 1.0, format!("{label}: partition is not equitable")));
            continue;
        }
        let gap = containment_gap(&full, &eigenvalues(&q.symmetrized())?);
        if gap > tol {
            report.counterexamples.push(discrepancy(
                &code,
                &t,
                gap,
                0.0,
                format!("{label}: quotient eigenvalue outside the spectrum"),
            ));
        }
        report.witnesses.push(witness(n, label, &code, &t, gap));
    }
    Ok(true)
}

fn ecc_vs_2a(v: &mut Verifier, n: usize, report: &mut TheoremReport) -> Result<bool> {
    let records = v.records(n)?;
    let (mut equal, mut central) = (0, 0);
    for r in records {
        let cmp = crate::matrix::complement_ecc_vs_2a(&r.tree)?;
        let extra = cmp.exceeding_entries.len() as f64;
        if r.diameter >= 4 {
            if cmp.equal {
                equal += 1;
            } else {
                report.counterexamples.push(discrepancy(
                    &r.code,
                    &r.tree,
                    extra,
                    0.0,
                    "diameter >= 4 but E(T^c) differs from 2A(T)",
                ));
            }
            continue;
        }
        let ok = cmp.dominates
            && cmp.exceeding_entries.len() == 1
            && cmp.exceeding_entries.iter().all(|e| {
                e.ecc_entry == 3.0
                    && r.tree.adjacent(e.row, e.col)
                    && r.tree.degree(e.row) >= 2
                    && r.tree.degree(e.col) >= 2
            });
        if ok {
            central += 1;
            if central == 1 {
                let e = &cmp.exceeding_entries[0];
                report.witnesses.push(witness(
                    n,
                    format!("diameter 3: entry 3 at ({}, {})", e.row, e.col),
                    &r.code,
                    &r.tree,
                    e.ecc_entry,
                ));
            }
        } else {
            report.counterexamples.push(discrepancy(
                &r.code,
                &r.tree,
                extra,
                1.0,
                "diameter 3 but the excess over 2A(T) is not a single 3 at the central edge",
            ));
        }
    }
    report.notes.push(format!(
        "n = {n}: {equal} trees with E(T^c) = 2A(T), {central} diameter-3 trees with one central entry 3"
    ));
    Ok(true)
}
