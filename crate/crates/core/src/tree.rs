//! The finite tree of MANS-semigroups with fixed multiplicity `m` and ratio
//! `r`. The root is `⟨m, r⟩`; the parent of a vertex is obtained by removing
//! its greatest minimal generator, and the children of a vertex are obtained
//! by adjoining each suitably monotone element.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::mans::is_mans;
use crate::semigroup::{apery_at_multiplicity, frobenius, Generators};

fn require_mans(s: &Generators) -> Result<()> {
    if s.embedding_dimension() < 2 || !is_mans(s)?.is_mans {
        return Err(Error::NotMans);
    }
    Ok(())
}

/// All `n` that may be adjoined to `s` as a new greatest generator while
/// keeping the Apery set monotone, ascending.
pub fn suitably_monotone_elements(s: &Generators) -> Result<Vec<u64>> {
    require_mans(s)?;
    let ap = apery_at_multiplicity(s)?;
    let m = s.multiplicity();
    let top_residue = (s.max_generator() % m) as usize;
    let mut out = Vec::new();
    for j in top_residue + 1..m as usize {
        let (lo, hi) = (ap.get(j - 1), ap.get(j));
        // values ≡ j (mod m) strictly between w(j-1) and w(j)
        let start = out.len();
        let mut x = hi;
        while x > lo.saturating_add(m) {
            x -= m;
            out.push(x);
        }
        out[start..].reverse();
    }
    Ok(out)
}

/// Children of `s` in its tree, ordered by the adjoined generator.
pub fn children(s: &Generators) -> Result<Vec<Generators>> {
    suitably_monotone_elements(s)?
        .into_iter()
        .map(|n| {
            let child = s.adjoin_unchecked(n);
            if !is_mans(&child)?.is_mans {
                return Err(Error::InternalFormulaMismatch {
                    what: "adjoining a suitably monotone element broke monotonicity",
                });
            }
            Ok(child)
        })
        .collect()
}

/// `⌊(F(S) - M(S)) / m⌋ + 1`, floored toward negative infinity and clamped at 0.
pub fn child_count(s: &Generators) -> Result<u64> {
    require_mans(s)?;
    let f = frobenius(s)?;
    let top = i64::try_from(s.max_generator()).map_err(|_| Error::Overflow)?;
    let m = s.multiplicity() as i64;
    let count = (f - top).div_euclid(m) + 1;
    Ok(count.max(0) as u64)
}

/// `⟨msg(S) ∖ {M(S)}⟩`.
pub fn parent(s: &Generators) -> Result<Generators> {
    require_mans(s)?;
    if s.embedding_dimension() <= 2 {
        return Err(Error::IsRoot);
    }
    s.without_max().ok_or(Error::InternalFormulaMismatch {
        what: "prefix of a MANS system does not generate a numerical semigroup",
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub semigroup: Generators,
    /// 0 at the root; always `e(semigroup) - 2`.
    pub depth: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// `G(MA(m, r))` materialized in level order. Siblings are ordered by the
/// generator adjoined to their common parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MansTree {
    m: u64,
    r: u64,
    nodes: Vec<TreeNode>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TreeOptions {
    /// Stop expanding below this depth.
    pub max_depth: Option<usize>,
}

impl MansTree {
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn node(&self, index: usize) -> &TreeNode {
        &self.nodes[index]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// True when `MA(m, r)` is empty (the ratio is not `1 mod m`).
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> Option<&TreeNode> {
        self.nodes.first()
    }

    /// `(parent, child)` index pairs in level order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .filter_map(|(i, n)| n.parent.map(|p| (p, i)))
    }

    pub fn find(&self, s: &Generators) -> Option<usize> {
        self.nodes.iter().position(|n| &n.semigroup == s)
    }

    pub fn max_depth(&self) -> Option<usize> {
        self.nodes.iter().map(|n| n.depth).max()
    }

    /// Reassembles a tree from its nodes, checking the structural invariants:
    /// root `⟨m, r⟩` at index 0, depth `= e - 2`, parent/child links agree,
    /// every child extends its parent by one larger generator, and every
    /// vertex is MANS.
    pub fn from_nodes(m: u64, r: u64, nodes: Vec<TreeNode>) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument("multiplicity must be at least 2"));
        }
        if nodes.is_empty() {
            return Ok(MansTree { m, r, nodes });
        }
        let root = &nodes[0];
        if root.parent.is_some() || root.depth != 0 || root.semigroup.as_slice() != [m, r] {
            return Err(Error::InvalidArgument("node 0 must be the root ⟨m, r⟩"));
        }
        for (i, node) in nodes.iter().enumerate() {
            if node.depth + 2 != node.semigroup.embedding_dimension() {
                return Err(Error::InvalidArgument(
                    "depth must equal embedding dimension - 2",
                ));
            }
            require_mans(&node.semigroup)?;
            if let Some(p) = node.parent {
                let parent = nodes
                    .get(p)
                    .filter(|_| p < i)
                    .ok_or(Error::InvalidArgument("parent index out of order"))?;
                if !parent.children.contains(&i) {
                    return Err(Error::InvalidArgument("parent does not list child"));
                }
                let g = node.semigroup.as_slice();
                if &g[..g.len() - 1] != parent.semigroup.as_slice() {
                    return Err(Error::InvalidArgument("child must extend its parent"));
                }
            } else if i != 0 {
                return Err(Error::InvalidArgument("only the root may lack a parent"));
            }
            for &c in &node.children {
                if nodes.get(c).and_then(|n| n.parent) != Some(i) {
                    return Err(Error::InvalidArgument(
                        "child does not point back to parent",
                    ));
                }
            }
        }
        Ok(MansTree { m, r, nodes })
    }
}

pub fn build_tree(m: u64, r: u64) -> Result<MansTree> {
    build_tree_with(m, r, &TreeOptions::default())
}

/// Breadth-first construction of `G(MA(m, r))`. A ratio that is not
/// `1 mod m` (or not above `m`) yields the empty family.
pub fn build_tree_with(m: u64, r: u64, options: &TreeOptions) -> Result<MansTree> {
    if m < 2 {
        return Err(Error::InvalidArgument("multiplicity must be at least 2"));
    }
    let mut nodes = Vec::new();
    if r <= m || r % m != 1 {
        return Ok(MansTree { m, r, nodes });
    }
    nodes.push(TreeNode {
        semigroup: Generators::from_minimal_unchecked(vec![m, r]),
        depth: 0,
        parent: None,
        children: Vec::new(),
    });
    let mut next = 0;
    while next < nodes.len() {
        let depth = nodes[next].depth;
        if options.max_depth.is_none_or(|cap| depth < cap) {
            for child in children(&nodes[next].semigroup)? {
                let index = nodes.len();
                nodes.push(TreeNode {
                    semigroup: child,
                    depth: depth + 1,
                    parent: Some(next),
                    children: Vec::new(),
                });
                nodes[next].children.push(index);
            }
        }
        next += 1;
    }
    Ok(MansTree { m, r, nodes })
}
