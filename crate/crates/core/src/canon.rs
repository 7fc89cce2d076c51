//! AHU canonical codes for free trees.
//!
//! A tree is rooted at its centre (or at each vertex of its bicentre), each
//! vertex is encoded as `(` followed by its children's codes in sorted order
//! and a closing `)`, and the lexicographically smallest rooting wins.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, Tree};

/// Isomorphism-invariant encoding of a tree. Two trees have equal codes iff
/// they are isomorphic; codes are totally ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn of(tree: &Tree) -> CanonicalCode {
        let centers = centers(tree);
        centers
            .into_iter()
            .map(|c| CanonicalCode(rooted_code(tree, c)))
            .min()
            .expect("a tree has one or two centres")
    }

    pub fn of_graph(g: &Graph) -> Result<CanonicalCode> {
        Ok(CanonicalCode::of(&Tree::try_from(g.clone())?))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of vertices encoded.
    pub fn order(&self) -> usize {
        self.0.len() / 2
    }

    /// Rebuilds a tree from the code; the root gets label 0 and the rest
    /// follow in preorder.
    pub fn to_tree(&self) -> Result<Tree> {
        let n = self.order();
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        let mut stack: Vec<usize> = Vec::new();
        let mut next = 0;
        for ch in self.0.bytes() {
            match ch {
                b'(' => {
                    if let Some(&parent) = stack.last() {
                        edges.push((parent, next));
                    }
                    stack.push(next);
                    next += 1;
                }
                _ => {
                    stack.pop();
                }
            }
        }
        Tree::from_edges(n, edges)
    }
}

impl FromStr for CanonicalCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut depth = 0i64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("unexpected character {other:?} at offset {i}"),
                    })
                }
            }
            if depth < 0 || (depth == 0 && i + 1 != s.len()) {
                return Err(Error::Parse {
                    line: 1,
                    msg: "unbalanced or multi-rooted code".into(),
                });
            }
        }
        if depth != 0 || s.is_empty() {
            return Err(Error::Parse {
                line: 1,
                msg: "unbalanced code".into(),
            });
        }
        let code = CanonicalCode(s.to_owned());
        // Only canonical strings are accepted.
        let canon = CanonicalCode::of(&code.to_tree()?);
        if canon != code {
            return Err(Error::Parse {
                line: 1,
                msg: format!("not canonical; canonical form is {canon}"),
            });
        }
        Ok(code)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.0)
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

/// Centre or bicentre, found by peeling leaves layer by layer.
fn centers(tree: &Tree) -> Vec<usize> {
    let n = tree.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = tree.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for w in tree.neighbors(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(tree: &Tree, root: usize) -> String {
    fn encode(tree: &Tree, v: usize, parent: Option<usize>) -> String {
        let mut children: Vec<String> = tree
            .neighbors(v)
            .filter(|&w| Some(w) != parent)
            .map(|w| encode(tree, w, Some(v)))
            .collect();
        children.sort_unstable();
        let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
        s.push('(');
        for c in &children {
            s.push_str(c);
        }
        s.push(')');
        s
    }
    encode(tree, root, None)
}
