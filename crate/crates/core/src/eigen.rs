//! Cyclic Jacobi eigenvalues for dense symmetric matrices, and the spectral
//! statistics built on them.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;

/// Absolute tolerance used to merge eigenvalues into multiplicity groups.
pub const DEFAULT_GROUP_TOL: f64 = 1e-7;

/// Sweeps are stopped once the off-diagonal Frobenius norm falls below
/// `OFF_DIAGONAL_RTOL * (1 + ||A||_F)`.
pub const OFF_DIAGONAL_RTOL: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix, sorted in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

impl Spectrum {
    /// Wraps arbitrary values, sorting them in descending order.
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `k`-th largest eigenvalue, 1-based.
    pub fn xi(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.values.len() {
            return Err(Error::IndexOutOfRange {
                k,
                n: self.values.len(),
            });
        }
        Ok(self.values[k - 1])
    }

    pub fn spectral_radius(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    /// Second largest eigenvalue (`xi_2`). Zero for 1x1 matrices.
    pub fn second_largest(&self) -> f64 {
        self.values.get(1).copied().unwrap_or(0.0)
    }

    pub fn least(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// Sum of absolute values.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }

    /// Merges runs of consecutive eigenvalues that lie within `tol` of their
    /// neighbour; each group is represented by its mean.
    pub fn group(&self, tol: f64) -> GroupedSpectrum {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut run: Vec<f64> = Vec::new();
        for &x in &self.values {
            if let Some(&prev) = run.last() {
                if prev - x > tol {
                    groups.push(mean_group(&run));
                    run.clear();
                }
            }
            run.push(x);
        }
        if !run.is_empty() {
            groups.push(mean_group(&run));
        }
        GroupedSpectrum { groups }
    }

    /// True iff the multiset of eigenvalues equals its negation within `tol`.
    pub fn is_symmetric_about_origin(&self, tol: f64) -> bool {
        let v = &self.values;
        v.iter()
            .zip(v.iter().rev())
            .all(|(hi, lo)| (hi + lo).abs() <= tol)
    }
}

fn mean_group(run: &[f64]) -> (f64, usize) {
    (run.iter().sum::<f64>() / run.len() as f64, run.len())
}

/// Distinct eigenvalues (strictly decreasing) with multiplicities.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupedSpectrum {
    pub groups: Vec<(f64, usize)>,
}

impl GroupedSpectrum {
    pub fn dimension(&self) -> usize {
        self.groups.iter().map(|g| g.1).sum()
    }

    /// Multiplicity of the group whose representative is within `tol` of
    /// `value`, or 0.
    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.groups
            .iter()
            .find(|g| (g.0 - value).abs() <= tol)
            .map_or(0, |g| g.1)
    }
}

/// All eigenvalues of `m` by cyclic Jacobi rotations.
pub fn eigenvalues(m: &SymMatrix) -> Result<Spectrum> {
    let n = m.dim();
    for i in 0..n {
        for j in i + 1..n {
            if m.get(i, j) != m.get(j, i) {
                return Err(Error::Asymmetric { row: i, col: j });
            }
        }
    }
    let mut a = m.as_slice().to_vec();
    let tol = OFF_DIAGONAL_RTOL * (1.0 + m.frobenius_sq().sqrt());

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += a[i * n + j] * a[i * n + j];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&a) >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
    }
    Ok(Spectrum::from_values((0..n).map(|i| a[i * n + i]).collect()))
}

/// One Jacobi rotation annihilating `a[p][q]`, applied to both triangles.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // smaller root of t^2 + 2 theta t - 1 = 0
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
}
