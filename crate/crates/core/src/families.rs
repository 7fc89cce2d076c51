//! Constructors for the named tree families.
//!
//! Labels follow one fixed convention so that matrix printouts line up with
//! the block structure used in the spectral lemmas: the spine `v0..vd` takes
//! indices `0..=d`, then the pendants hung on `v1`, then the pendants hung on
//! `v_{d-1}`.

use crate::error::{Error, Result};
use crate::graph::Tree;

/// The path `P_n` with edges `(i, i + 1)`.
pub fn path(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(Error::invalid_order(0, "a path needs at least one vertex"));
    }
    Tree::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// The star `K_{1,n-1}` centred at vertex 0.
pub fn star(n: usize) -> Result<Tree> {
    if n < 2 {
        return Err(Error::invalid_order(n, "a star needs at least two vertices"));
    }
    Tree::from_edges(n, (1..n).map(|i| (0, i)))
}

/// The double broom `T_{n,3}^{a,b}`: `P4 = v0 v1 v2 v3` with `a` pendants on
/// `v1` and `b` pendants on `v2`, `a + b = n - 4`, `b >= a`.
pub fn build_t3(n: usize, a: usize, b: usize) -> Result<Tree> {
    if n < 4 {
        return Err(Error::invalid_order(n, "T_{n,3}^{a,b} needs n >= 4"));
    }
    check_split(n - 4, a, b, "a + b = n - 4")?;
    spine_with_pendants(n, 3, a, b)
}

/// `D_{n,d}^{a,b}`: the path `v0 .. vd` with `a` pendants on `v1` and `b`
/// pendants on `v_{d-1}`, `a + b = n - d - 1`, `b >= a`, `d >= 4`.
pub fn build_dnd(n: usize, d: usize, a: usize, b: usize) -> Result<Tree> {
    if d < 4 {
        return Err(Error::InconsistentParameters(format!(
            "diameter {d} < 4; use build_t3 for diameter 3"
        )));
    }
    if n < d + 1 {
        return Err(Error::InconsistentParameters(format!(
            "order {n} is too small for diameter {d}"
        )));
    }
    check_split(n - d - 1, a, b, "a + b = n - d - 1")?;
    spine_with_pendants(n, d, a, b)
}

fn check_split(total: usize, a: usize, b: usize, rule: &str) -> Result<()> {
    if a + b != total {
        return Err(Error::InconsistentParameters(format!(
            "{rule} violated: a = {a}, b = {b}, expected sum {total}"
        )));
    }
    if a > b {
        return Err(Error::InconsistentParameters(format!(
            "b >= a required, got a = {a}, b = {b}"
        )));
    }
    Ok(())
}

fn spine_with_pendants(n: usize, d: usize, a: usize, b: usize) -> Result<Tree> {
    let spine = (1..=d).map(|i| (i - 1, i));
    let left = (0..a).map(|k| (1, d + 1 + k));
    let right = (0..b).map(|k| (d - 1, d + 1 + a + k));
    Tree::from_edges(n, spine.chain(left).chain(right))
}

/// A spider: centre 0 with legs of the given lengths, laid out leg by leg.
pub fn spider(legs: &[usize]) -> Result<Tree> {
    if legs.contains(&0) {
        return Err(Error::InconsistentParameters("spider legs must be non-empty".into()));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::from_edges(n, edges)
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n`.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Tree> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Linear-time decode: `ptr` scans for the smallest leaf, `leaf` may jump
    // back to a freshly exposed smaller leaf.
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap_or(0);
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    let last = (0..n).rev().find(|&v| v != leaf && degree[v] == 1).unwrap_or(n - 1);
    edges.push((leaf, last));
    Tree::from_edges(n, edges)
}

/// Prüfer sequence of a labeled tree on `n >= 2` vertices; inverse of
/// [`tree_from_pruefer`].
pub fn tree_to_pruefer(t: &Tree) -> Result<Vec<usize>> {
    let n = t.order();
    if n < 2 {
        return Err(Error::invalid_order(n, "Prüfer sequences need n >= 2"));
    }
    // parent pointers with n - 1 as the root
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![n - 1];
    parent[n - 1] = n - 1;
    while let Some(v) = stack.pop() {
        for w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut degree = t.degrees();
    let mut seq = Vec::with_capacity(n - 2);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap_or(0);
    let mut leaf = ptr;
    while seq.len() < n - 2 {
        let next = parent[leaf];
        seq.push(next);
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    Ok(seq)
}
