//! Dense symmetric matrices built from graphs, and quotient matrices of
//! vertex partitions.

use std::fmt::Write as _;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, Tree};

/// A dense real symmetric `n x n` matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Builds from a function of `(i, j)`; only `i <= j` is evaluated and
    /// mirrored, so the result is symmetric by construction.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let x = f(i, j);
                m.data[i * n + j] = x;
                m.data[j * n + i] = x;
            }
        }
        m
    }

    /// Builds from explicit rows; the input must be square and exactly
    /// symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InconsistentParameters(format!(
                "row {bad} has length {}, expected {n}",
                rows[bad].len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if let Some(j) = (i + 1..n).find(|&j| row[j] != rows[j][i]) {
                return Err(Error::Asymmetric { row: i, col: j });
            }
        }
        Ok(SymMatrix {
            n,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Sum of squared entries.
    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum()
    }

    pub fn scaled(&self, k: f64) -> SymMatrix {
        SymMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    /// Connectivity of the graph on `0..n` whose edges are the nonzero
    /// off-diagonal entries. For a nonnegative symmetric matrix this is
    /// irreducibility.
    pub fn is_irreducible(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let support = Graph::from_edges(
            self.n,
            (0..self.n)
                .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
                .filter(|&(i, j)| self.get(i, j) != 0.0),
        );
        support.is_ok_and(|g| g.is_connected())
    }

    /// Row-major text: one row per line, entries separated by single spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let mut first = true;
            for x in row {
                if !first {
                    out.push(' ');
                }
                first = false;
                let _ = write!(out, "{x}");
            }
            out.push('\n');
        }
        out
    }
}

/// Serializes as a JSON array of arrays.
impl Serialize for SymMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.n))?;
        for row in self.rows() {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}

/// The 0/1 adjacency matrix `A(G)`.
pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    SymMatrix::from_fn(g.order(), |i, j| if g.adjacent(i, j) { 1.0 } else { 0.0 })
}

/// The distance matrix `D(G)` of a connected graph.
pub fn distance_matrix(g: &Graph) -> Result<SymMatrix> {
    let d = g.distances()?;
    Ok(SymMatrix::from_fn(g.order(), |i, j| f64::from(d.get(i, j))))
}

/// The eccentricity matrix: `d(u,v)` where `d(u,v) = min(e(u), e(v))`, else 0.
pub fn eccentricity_matrix(g: &Graph) -> Result<SymMatrix> {
    let d = g.distances()?;
    let ecc = d.ecc_info().ecc;
    Ok(SymMatrix::from_fn(g.order(), |u, v| {
        let duv = d.get(u, v);
        if u != v && duv == ecc[u].min(ecc[v]) {
            f64::from(duv)
        } else {
            0.0
        }
    }))
}

/// Entry of `E(T^c)` that strictly exceeds the corresponding entry of `2A(T)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExceedingEntry {
    pub row: usize,
    pub col: usize,
    pub ecc_entry: f64,
    pub twice_adjacency: f64,
}

/// Outcome of comparing `E(T^c)` against `2A(T)` entrywise.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EccComparison {
    pub equal: bool,
    /// `E(T^c) >= 2A(T)` holds at every position.
    pub dominates: bool,
    /// Positions (upper triangle) where `E(T^c) > 2A(T)`.
    pub exceeding_entries: Vec<ExceedingEntry>,
}

/// Compares `E(T^c)` with `2A(T)` entrywise.
pub fn complement_ecc_vs_2a(t: &Tree) -> Result<EccComparison> {
    if t.order() < 4 {
        return Err(Error::invalid_order(t.order(), "comparison needs n >= 4"));
    }
    if t.is_star() {
        return Err(Error::Disconnected);
    }
    let ecc = eccentricity_matrix(&t.complement())?;
    let two_a = adjacency_matrix(t).scaled(2.0);
    let n = t.order();
    let mut exceeding_entries = Vec::new();
    let mut dominates = true;
    for i in 0..n {
        for j in i + 1..n {
            let (e, a) = (ecc.get(i, j), two_a.get(i, j));
            if e > a {
                exceeding_entries.push(ExceedingEntry {
                    row: i,
                    col: j,
                    ecc_entry: e,
                    twice_adjacency: a,
                });
            } else if e < a {
                dominates = false;
            }
        }
    }
    Ok(EccComparison {
        equal: dominates && exceeding_entries.is_empty(),
        dominates,
        exceeding_entries,
    })
}

/// An ordered partition of `0..n` into nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::MalformedPartition(format!("block {b} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::MalformedPartition(format!(
                        "vertex {v} out of range for order {n}"
                    )));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::MalformedPartition(format!(
                        "vertex {v} appears in blocks {} and {b}",
                        owner[v]
                    )));
                }
                owner[v] = b;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::MalformedPartition(format!("vertex {v} is not covered")));
        }
        Ok(Partition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

/// Quotient matrix of average block row sums, with the equitability verdict.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientResult {
    /// `q[i][j]` = (sum of block `A_ij`) / `|X_i|`. Not symmetric in general.
    pub q: Vec<Vec<f64>>,
    pub block_sizes: Vec<usize>,
    pub equitable: bool,
}

impl QuotientResult {
    /// `D^{1/2} Q D^{-1/2}` with `D = diag(|X_i|)`. For a symmetric source
    /// matrix this is symmetric and similar to `Q`, so it has the same
    /// eigenvalues.
    pub fn symmetrized(&self) -> SymMatrix {
        let s: Vec<f64> = self.block_sizes.iter().map(|&k| (k as f64).sqrt()).collect();
        SymMatrix::from_fn(self.q.len(), |i, j| s[i] * self.q[i][j] / s[j])
    }
}

fn is_small_integer(x: f64) -> bool {
    x.fract() == 0.0 && x.abs() < 9.0e15
}

/// Quotient of `m` over `p`. Equitability is decided exactly: in integer
/// arithmetic when every entry is an integer, otherwise by exact float
/// equality of the block row sums.
pub fn quotient(m: &SymMatrix, p: &Partition) -> Result<QuotientResult> {
    if p.order() != m.dim() {
        return Err(Error::MalformedPartition(format!(
            "partition covers {} vertices, matrix has dimension {}",
            p.order(),
            m.dim()
        )));
    }
    let integral = m.as_slice().iter().all(|&x| is_small_integer(x));
    let k = p.len();
    let mut q = vec![vec![0.0; k]; k];
    let mut equitable = true;
    for (bi, rows) in p.blocks().iter().enumerate() {
        for (bj, cols) in p.blocks().iter().enumerate() {
            let row_sum = |r: usize| cols.iter().map(move |&c| m.get(r, c));
            if integral {
                let sums: Vec<i64> = rows.iter().map(|&r| row_sum(r).map(|x| x as i64).sum()).collect();
                equitable &= sums.iter().all(|&s| s == sums[0]);
                q[bi][bj] = sums.iter().sum::<i64>() as f64 / rows.len() as f64;
            } else {
                let sums: Vec<f64> = rows.iter().map(|&r| row_sum(r).sum()).collect();
                equitable &= sums.iter().all(|&s| s == sums[0]);
                q[bi][bj] = sums.iter().sum::<f64>() / rows.len() as f64;
            }
        }
    }
    Ok(QuotientResult {
        q,
        block_sizes: p.blocks().iter().map(Vec::len).collect(),
        equitable,
    })
}

/// The partition `{u_1..u_a, v0}, {v1}, {v2}, {v3, w_1..w_b}` of
/// `T_{n,3}^{a,b}` under the labeling of [`crate::families::build_t3`].
pub fn t3_partition(n: usize, a: usize, b: usize) -> Result<Partition> {
    if n < 4 || a + b + 4 != n {
        return Err(Error::InconsistentParameters(format!(
            "a + b = n - 4 violated: n = {n}, a = {a}, b = {b}"
        )));
    }
    let left: Vec<usize> = (4..4 + a).chain(std::iter::once(0)).collect();
    let right: Vec<usize> = std::iter::once(3).chain(4 + a..n).collect();
    Partition::new(n, vec![left, vec![1], vec![2], right])
}

/// The partition `{v0}, {v1}, {v2}, {v3}, {v4, w_1..w_{n-5}}` of
/// `T_{n,4}^{0,n-5}` under the labeling of [`crate::families::build_dnd`].
pub fn t4_partition(n: usize) -> Result<Partition> {
    if n < 5 {
        return Err(Error::invalid_order(n, "T_{n,4}^{0,n-5} needs n >= 5"));
    }
    Partition::new(n, vec![vec![0], vec![1], vec![2], vec![3], (4..n).collect()])
}
