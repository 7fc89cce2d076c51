//! Explicit spectra, energies and extremal bounds for the tree families.
//!
//! Everything here is a pure function of the order (and split parameters)
//! evaluated in double precision. These are the oracle side of the
//! verification harness: the solver side builds the matrix and
//! diagonalizes it.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Eigenvalues with multiplicities, produced by a formula.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosedFormSpectrum {
    pub pairs: Vec<(f64, usize)>,
}

impl ClosedFormSpectrum {
    /// Builds from `±x` pairs plus a zero of the given multiplicity.
    fn symmetric(positive: &[f64], zeros: usize) -> Self {
        let mut pairs: Vec<(f64, usize)> = positive.iter().map(|&x| (x, 1)).collect();
        if zeros > 0 {
            pairs.push((0.0, zeros));
        }
        pairs.extend(positive.iter().rev().map(|&x| (-x, 1)));
        ClosedFormSpectrum { pairs }
    }

    pub fn dimension(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    /// All values with multiplicity, descending.
    pub fn values_desc(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .pairs
            .iter()
            .flat_map(|&(x, m)| std::iter::repeat_n(x, m))
            .collect();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    pub fn energy(&self) -> f64 {
        self.pairs.iter().map(|&(x, m)| x.abs() * m as f64).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

/// A closed-form bound together with the family that attains it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundValue {
    pub quantity: String,
    pub kind: BoundKind,
    pub value: f64,
    pub attainer: String,
}

impl BoundValue {
    fn new(quantity: &str, kind: BoundKind, value: f64, attainer: impl Into<String>) -> Self {
        BoundValue {
            quantity: quantity.to_owned(),
            kind,
            value,
            attainer: attainer.into(),
        }
    }
}

fn check_t3(n: usize, a: usize, b: usize) -> Result<()> {
    if n < 4 || a + b + 4 != n || a > b {
        return Err(Error::InconsistentParameters(format!(
            "need n >= 4, a + b = n - 4, b >= a; got n = {n}, a = {a}, b = {b}"
        )));
    }
    Ok(())
}

fn balanced_split(n: usize) -> (usize, usize) {
    let a = (n - 4) / 2;
    (a, n - 4 - a)
}

/// `(xi_1, xi_2)` of `E((T_{n,3}^{a,b})^c)`:
/// `sqrt((4n+1 ± sqrt((4n+1)^2 - 64(a+1)(b+1))) / 2)`.
fn t3_pair(n: usize, a: usize, b: usize) -> (f64, f64) {
    let s = 4.0 * n as f64 + 1.0;
    let disc = (s * s - 64.0 * ((a + 1) * (b + 1)) as f64).sqrt();
    (((s + disc) / 2.0).sqrt(), ((s - disc) / 2.0).sqrt())
}

/// Spectrum of `E((T_{n,3}^{a,b})^c)`: two `±` pairs and `0^(n-4)`.
pub fn spec_t3_complement(n: usize, a: usize, b: usize) -> Result<ClosedFormSpectrum> {
    check_t3(n, a, b)?;
    let (x1, x2) = t3_pair(n, a, b);
    Ok(ClosedFormSpectrum::symmetric(&[x1, x2], n - 4))
}

/// `2 sqrt(4n + 1 + 8 sqrt((a+1)(b+1)))`.
pub fn energy_t3_complement(n: usize, a: usize, b: usize) -> Result<f64> {
    check_t3(n, a, b)?;
    let prod = ((a + 1) * (b + 1)) as f64;
    Ok(2.0 * (4.0 * n as f64 + 1.0 + 8.0 * prod.sqrt()).sqrt())
}

/// Spectrum of `E((T_{n,4}^{0,n-5})^c)`:
/// `±sqrt(2n - 2 ± 2 sqrt(n^2 - 10n + 29))` and `0^(n-4)`.
pub fn spec_t4_complement(n: usize) -> Result<ClosedFormSpectrum> {
    if n < 5 {
        return Err(Error::invalid_order(n, "T_{n,4}^{0,n-5} needs n >= 5"));
    }
    let nf = n as f64;
    let inner = 2.0 * (nf * nf - 10.0 * nf + 29.0).sqrt();
    let base = 2.0 * nf - 2.0;
    Ok(ClosedFormSpectrum::symmetric(
        &[(base + inner).sqrt(), (base - inner).sqrt()],
        n - 4,
    ))
}

/// `2 sqrt(4(n-1) + 8 sqrt(2n-7))`.
pub fn energy_t4_complement(n: usize) -> Result<f64> {
    if n < 5 {
        return Err(Error::invalid_order(n, "T_{n,4}^{0,n-5} needs n >= 5"));
    }
    let nf = n as f64;
    Ok(2.0 * (4.0 * (nf - 1.0) + 8.0 * (2.0 * nf - 7.0).sqrt()).sqrt())
}

/// Adjacency energy of `P_n`: `2(cot(pi/(2(n+1))) - 1)` for odd `n`,
/// `2(csc(pi/(2(n+1))) - 1)` for even `n`.
pub fn path_adjacency_energy(n: usize) -> f64 {
    if n <= 1 {
        return 0.0;
    }
    let x = PI / (2.0 * (n as f64 + 1.0));
    if n % 2 == 1 {
        2.0 * (1.0 / x.tan() - 1.0)
    } else {
        2.0 * (1.0 / x.sin() - 1.0)
    }
}

/// `E_E(P_n^c) = 2 E_A(P_n)`, valid once `P_n` has diameter at least 4.
pub fn path_complement_energy(n: usize) -> Result<f64> {
    if n <= 4 {
        return Err(Error::invalid_order(
            n,
            "P_n^c has E = 2A only for n >= 5; P4 has diameter 3, use spec_t3_complement(4, 0, 0)",
        ));
    }
    Ok(2.0 * path_adjacency_energy(n))
}

/// `xi_1(P_n^c) = 4 cos(pi/(n+1))`.
pub fn xi1_path_complement(n: usize) -> Result<f64> {
    if n <= 4 {
        return Err(Error::invalid_order(
            n,
            "the cosine form needs n >= 5; P4 has diameter 3, use spec_t3_complement(4, 0, 0)",
        ));
    }
    Ok(4.0 * (PI / (n as f64 + 1.0)).cos())
}

/// Extremal `xi_1` and `xi_2` over complements of diameter-3 trees.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Diam3Bounds {
    pub xi1_max: BoundValue,
    pub xi1_min: BoundValue,
    pub xi2_min: BoundValue,
    pub xi2_max: BoundValue,
}

pub fn bounds_diam3(n: usize) -> Result<Diam3Bounds> {
    if n < 4 {
        return Err(Error::invalid_order(n, "diameter-3 trees need n >= 4"));
    }
    let nf = n as f64;
    let s = 4.0 * nf + 1.0;
    let skewed = (s * s - 64.0 * (nf - 3.0)).sqrt();
    let balanced = if n.is_multiple_of(2) {
        (72.0 * nf - 63.0).sqrt()
    } else {
        (72.0 * nf - 47.0).sqrt()
    };
    let (a, b) = balanced_split(n);
    let skew_name = format!("T_{{{n},3}}^{{0,{}}}", n - 4);
    let bal_name = format!("T_{{{n},3}}^{{{a},{b}}}");
    Ok(Diam3Bounds {
        xi1_max: BoundValue::new("xi1(T^c), diam 3", BoundKind::Upper, ((s + skewed) / 2.0).sqrt(), &skew_name),
        xi1_min: BoundValue::new("xi1(T^c), diam 3", BoundKind::Lower, ((s + balanced) / 2.0).sqrt(), &bal_name),
        xi2_min: BoundValue::new("xi2(T^c), diam 3", BoundKind::Lower, ((s - skewed) / 2.0).sqrt(), &skew_name),
        xi2_max: BoundValue::new("xi2(T^c), diam 3", BoundKind::Upper, ((s - balanced) / 2.0).sqrt(), &bal_name),
    })
}

/// Extremal energies over complements of diameter-3 trees: `(min, max)`.
pub fn energy_bounds_diam3(n: usize) -> Result<(BoundValue, BoundValue)> {
    if n < 4 {
        return Err(Error::invalid_order(n, "diameter-3 trees need n >= 4"));
    }
    let nf = n as f64;
    let min = 2.0 * (4.0 * nf + 1.0 + 8.0 * (nf - 3.0).sqrt()).sqrt();
    let max = if n.is_multiple_of(2) {
        2.0 * (8.0 * nf - 7.0).sqrt()
    } else {
        2.0 * (4.0 * nf + 1.0 + 4.0 * (nf * nf - 4.0 * nf + 3.0).sqrt()).sqrt()
    };
    let (a, b) = balanced_split(n);
    Ok((
        BoundValue::new(
            "E(T^c), diam 3",
            BoundKind::Lower,
            min,
            format!("T_{{{n},3}}^{{0,{}}}", n - 4),
        ),
        BoundValue::new(
            "E(T^c), diam 3",
            BoundKind::Upper,
            max,
            format!("T_{{{n},3}}^{{{a},{b}}}"),
        ),
    ))
}

/// Readings of the cubic whose positive root gives `lambda_2` of the
/// exceptional tree `T_{2s+4,5}^{s-1,s-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CubicForm {
    /// `x^3 + x^2 - (s+1)x - s`.
    Resolved,
    /// `x^3 + x^2 - (2s+1)`, the printed expression taken at face value.
    Literal,
}

impl CubicForm {
    pub const ALL: [CubicForm; 2] = [CubicForm::Resolved, CubicForm::Literal];

    pub fn eval(self, s: usize, x: f64) -> f64 {
        let s = s as f64;
        match self {
            CubicForm::Resolved => x * x * x + x * x - (s + 1.0) * x - s,
            CubicForm::Literal => x * x * x + x * x - (2.0 * s + 1.0),
        }
    }

    /// The unique positive root, by bisection on `(0, s + 2)` to 1e-12.
    pub fn positive_root(self, s: usize) -> Result<f64> {
        if s == 0 {
            return Err(Error::InconsistentParameters(
                "the exceptional family needs s >= 1".into(),
            ));
        }
        let (mut lo, mut hi) = (0.0, s as f64 + 2.0);
        debug_assert!(self.eval(s, lo) < 0.0 && self.eval(s, hi) > 0.0);
        while hi - lo > 1e-12 {
            let mid = 0.5 * (lo + hi);
            if self.eval(s, mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

impl fmt::Display for CubicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CubicForm::Resolved => "x^3 + x^2 - (s+1)x - s",
            CubicForm::Literal => "x^3 + x^2 - (2s+1)",
        })
    }
}

/// Classical adjacency bounds for trees on `n >= 4` vertices. With
/// `Some(s)`, `n` must equal `2s + 4` and the record for the exceptional
/// tree `T_{n,5}^{s-1,s-1}` is appended.
pub fn adjacency_tree_bounds(n: usize, s: Option<usize>) -> Result<Vec<BoundValue>> {
    if n < 4 {
        return Err(Error::invalid_order(n, "tree bounds need n >= 4"));
    }
    let nf = n as f64;
    let mut out = vec![
        BoundValue::new(
            "lambda1(T)",
            BoundKind::Lower,
            2.0 * (PI / (nf + 1.0)).cos(),
            format!("P_{n}"),
        ),
        BoundValue::new(
            "lambda1(T), T not a star",
            BoundKind::Upper,
            ((nf - 1.0 + (nf * nf - 6.0 * nf + 13.0).sqrt()) / 2.0).sqrt(),
            format!("T_{{{n},3}}^{{0,{}}}", n - 4),
        ),
        BoundValue::new(
            "lambda2(T), T not a star nor T_{n,3}^{0,n-4}",
            BoundKind::Lower,
            1.0,
            "",
        ),
        BoundValue::new(
            "lambda2(T), T not T_{n,5}^{s-1,s-1}",
            BoundKind::Upper,
            ((nf - 3.0) / 2.0).sqrt(),
            if n % 2 == 1 && n >= 7 {
                let s = (n - 3) / 2;
                format!(
                    "T_{{{n},4}}^{{{a},{a}}}, T_{{{n},5}}^{{{b},{a}}}, T_{{{n},6}}^{{{b},{b}}}",
                    a = s - 1,
                    b = s - 2
                )
            } else {
                "none (strict for even n)".into()
            },
        ),
    ];
    if let Some(s) = s {
        if n != 2 * s + 4 || s == 0 {
            return Err(Error::InconsistentParameters(format!(
                "the exceptional family needs n = 2s + 4 with s >= 1; got n = {n}, s = {s}"
            )));
        }
        out.push(BoundValue::new(
            "lambda2(T_{n,5}^{s-1,s-1})",
            BoundKind::Lower,
            CubicForm::Resolved.positive_root(s)?,
            format!("T_{{{n},5}}^{{{0},{0}}}", s - 1),
        ));
    }
    Ok(out)
}

/// `sqrt((13n - 35 - sqrt(169n^2 - 974n + 1417)) / 2)`, the least `xi_2(T)`
/// over trees on `n >= 4` vertices other than the star.
pub fn tree_xi2_lower_bound(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(Error::invalid_order(n, "needs n >= 4"));
    }
    let nf = n as f64;
    let disc = (169.0 * nf * nf - 974.0 * nf + 1417.0).sqrt();
    Ok(((13.0 * nf - 35.0 - disc) / 2.0).sqrt())
}

/// `2 sqrt(13n - 35 + 8 sqrt(n - 3))`, the least `E(T)` over trees on `n`
/// vertices. Meaningful for `n >= 5`; at `n = 4` it still evaluates `P4`.
pub fn tree_energy_lower_bound(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(Error::invalid_order(n, "needs n >= 4"));
    }
    let nf = n as f64;
    Ok(2.0 * (13.0 * nf - 35.0 + 8.0 * (nf - 3.0).sqrt()).sqrt())
}

/// Minimal `xi_2(T)` (n >= 4) and minimal `E(T)` (n >= 5) over trees.
pub fn tree_ecc_minima(n: usize) -> Result<Vec<BoundValue>> {
    let attainer = format!("T_{{{n},3}}^{{0,{}}}", n.saturating_sub(4));
    let mut out = vec![BoundValue::new(
        "xi2(T), T not a star",
        BoundKind::Lower,
        tree_xi2_lower_bound(n)?,
        &attainer,
    )];
    if n >= 5 {
        out.push(BoundValue::new(
            "E(T)",
            BoundKind::Lower,
            tree_energy_lower_bound(n)?,
            &attainer,
        ));
    }
    Ok(out)
}

/// Nordhaus–Gaddum lower bounds `(xi_2(T) + xi_2(T^c), E(T) + E(T^c))`.
pub fn nordhaus_gaddum_bounds(n: usize) -> Result<(BoundValue, BoundValue)> {
    if n < 4 {
        return Err(Error::invalid_order(n, "needs n >= 4"));
    }
    let nf = n as f64;
    let s = 4.0 * nf + 1.0;
    let complement_xi2 = ((s - (16.0 * nf * nf - 56.0 * nf + 193.0).sqrt()) / 2.0).sqrt();
    let complement_energy = 2.0 * (s + 8.0 * (nf - 3.0).sqrt()).sqrt();
    let attainer = format!("T_{{{n},3}}^{{0,{}}}", n - 4);
    Ok((
        BoundValue::new(
            "xi2(T) + xi2(T^c)",
            BoundKind::Lower,
            tree_xi2_lower_bound(n)? + complement_xi2,
            &attainer,
        ),
        BoundValue::new(
            "E(T) + E(T^c)",
            BoundKind::Lower,
            tree_energy_lower_bound(n)? + complement_energy,
            &attainer,
        ),
    ))
}
