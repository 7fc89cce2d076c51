//! Free-tree enumeration.
//!
//! [`FreeTrees`] is the constant-amortized-time generator of Wright,
//! Richmond, Odlyzko and McKay, which walks canonical level sequences of
//! trees rooted at their centre. [`enumerate_free_trees`] buffers its output
//! and sorts it by canonical code so that downstream reports are
//! reproducible. [`pruefer_free_trees`] is the slow labeled oracle used to
//! cross-check the generator.

use std::collections::BTreeMap;

use crate::canon::CanonicalCode;
use crate::error::{Error, Result};
use crate::families::tree_from_pruefer;
use crate::graph::{Tree, MAX_ORDER};

/// Largest order the Prüfer oracle will attempt (`n^(n-2)` decodes).
pub const PRUEFER_ORACLE_MAX: usize = 9;

/// A buffered stream of free trees of one order, sorted by canonical code.
#[derive(Clone, Debug)]
pub struct TreeStream {
    n: usize,
    trees: Vec<(CanonicalCode, Tree)>,
}

impl TreeStream {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(CanonicalCode, Tree)> {
        self.trees.iter()
    }

    pub fn codes(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.trees.iter().map(|(c, _)| c)
    }

    pub fn trees(&self) -> impl Iterator<Item = &Tree> {
        self.trees.iter().map(|(_, t)| t)
    }

    pub fn into_vec(self) -> Vec<(CanonicalCode, Tree)> {
        self.trees
    }
}

impl IntoIterator for TreeStream {
    type Item = (CanonicalCode, Tree);
    type IntoIter = std::vec::IntoIter<(CanonicalCode, Tree)>;

    fn into_iter(self) -> Self::IntoIter {
        self.trees.into_iter()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::invalid_order(
            n,
            format!("enumeration supports 1..={MAX_ORDER}"),
        ));
    }
    Ok(())
}

/// All free trees on `n` vertices, one per isomorphism class, in ascending
/// canonical-code order.
pub fn enumerate_free_trees(n: usize) -> Result<TreeStream> {
    let mut trees: Vec<(CanonicalCode, Tree)> = FreeTrees::new(n)?
        .map(|t| (CanonicalCode::of(&t), t))
        .collect();
    trees.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(TreeStream { n, trees })
}

/// The free-tree stream with the star removed: for `n >= 4` these are
/// exactly the trees whose complement is connected.
pub fn enumerate_with_connected_complement(n: usize) -> Result<TreeStream> {
    if n < 4 {
        return Err(Error::invalid_order(n, "connected complements need n >= 4"));
    }
    let mut stream = enumerate_free_trees(n)?;
    stream.trees.retain(|(_, t)| !t.is_star());
    Ok(stream)
}

/// Independent oracle: decode every Prüfer sequence of length `n - 2` and
/// keep one tree per canonical code.
pub fn pruefer_free_trees(n: usize) -> Result<TreeStream> {
    check_order(n)?;
    if n > PRUEFER_ORACLE_MAX {
        return Err(Error::invalid_order(
            n,
            format!("the Prüfer oracle is limited to n <= {PRUEFER_ORACLE_MAX}"),
        ));
    }
    let mut classes: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
    if n == 1 {
        let t = Tree::from_edges(1, [])?;
        classes.insert(CanonicalCode::of(&t), t);
    } else {
        let len = n - 2;
        let mut seq = vec![0usize; len];
        loop {
            let t = tree_from_pruefer(&seq)?;
            classes.entry(CanonicalCode::of(&t)).or_insert(t);
            // odometer increment
            let mut i = 0;
            while i < len {
                seq[i] += 1;
                if seq[i] < n {
                    break;
                }
                seq[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
        }
    }
    Ok(TreeStream {
        n,
        trees: classes.into_iter().collect(),
    })
}

/// Lazy WROM generator over canonical level sequences. Yields one tree per
/// isomorphism class, in generation (not canonical-code) order.
#[derive(Clone, Debug)]
pub struct FreeTrees {
    n: usize,
    layout: Option<Vec<usize>>,
    first: bool,
}

impl FreeTrees {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        // Start from the path rooted at its centre.
        let layout: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
        Ok(FreeTrees {
            n,
            layout: Some(layout),
            first: true,
        })
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.n == 1 {
            return self.layout.take().map(|_| level_sequence_to_tree(&[0]));
        }
        let current = self.layout.take()?;
        let candidate = if self.first {
            self.first = false;
            Some(current)
        } else {
            next_rooted_tree(&current, None)
        };
        let tree_layout = candidate.and_then(next_free_tree)?;
        let tree = level_sequence_to_tree(&tree_layout);
        self.layout = Some(tree_layout);
        Some(tree)
    }
}

/// Splits a level sequence into the first principal subtree (levels shifted
/// down by one) and the remainder still rooted at level 0.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &l)| l == 1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// Successor of a rooted level sequence, modifying from position `p`
/// (default: the last position with level > 1).
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                if p == 0 {
                    return None;
                }
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Advances `candidate` to the next level sequence that is canonical for a
/// centre-rooted free tree.
fn next_free_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let valid = rest_height > left_height
        || (rest_height == left_height
            && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let new_left_height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        let k = new_left_height + 1;
        for (j, slot) in next[len - k..].iter_mut().enumerate() {
            *slot = j + 1;
        }
    }
    Some(next)
}

fn level_sequence_to_tree(layout: &[usize]) -> Tree {
    let n = layout.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    // stack[l] = most recent vertex at level l
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    for (v, &level) in layout.iter().enumerate() {
        stack.truncate(level);
        if let Some(&parent) = stack.last() {
            edges.push((parent, v));
        }
        stack.push(v);
    }
    Tree::from_edges(n, edges).expect("level sequences encode trees")
}
