//! Graphviz and JSON renderings of a [`MansTree`].
//!
//! DOT edges run from parent to child, the reverse of the "child points to
//! parent" convention of the edge relation itself. Each edge is labelled
//! with the residue of the adjoined generator modulo the multiplicity.

use std::fmt::Write;

use mans_core::{frobenius, genus, Generators, MansTree, TreeNode};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn node_id(s: &Generators) -> String {
    s.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn export_dot(tree: &MansTree) -> String {
    let mut out = String::new();
    out.push_str("digraph mans_tree {\n");
    out.push_str("  // edges point from parent to child\n");
    out.push_str("  rankdir=LR;\n");
    for node in tree.nodes() {
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{}\"];",
            node_id(&node.semigroup),
            node.semigroup
        );
    }
    for (p, c) in tree.edges() {
        let child = &tree.node(c).semigroup;
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            node_id(&tree.node(p).semigroup),
            node_id(child),
            child.max_generator() % tree.m()
        );
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDocument {
    pub m: u64,
    pub r: u64,
    pub vertex_count: usize,
    pub nodes: Vec<NodeDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDocument {
    pub id: usize,
    pub gens: Vec<u64>,
    pub parent: Option<usize>,
    pub frobenius: i64,
    pub genus: u64,
    pub children: Vec<usize>,
}

impl TreeDocument {
    pub fn from_tree(tree: &MansTree) -> Result<Self> {
        let nodes = tree
            .nodes()
            .iter()
            .enumerate()
            .map(|(id, n)| {
                Ok(NodeDocument {
                    id,
                    gens: n.semigroup.as_slice().to_vec(),
                    parent: n.parent,
                    frobenius: frobenius(&n.semigroup)?,
                    genus: genus(&n.semigroup)?,
                    children: n.children.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TreeDocument {
            m: tree.m(),
            r: tree.r(),
            vertex_count: nodes.len(),
            nodes,
        })
    }

    /// Rebuilds the tree, rejecting documents whose generator lists are not
    /// minimal or whose stored invariants disagree with a recomputation.
    pub fn into_tree(self) -> Result<MansTree> {
        if self.vertex_count != self.nodes.len() {
            return Err(Error::InvalidDocument(
                "vertex_count does not match nodes".into(),
            ));
        }
        let mut nodes = Vec::with_capacity(self.nodes.len());
        for (i, doc) in self.nodes.into_iter().enumerate() {
            if doc.id != i {
                return Err(Error::InvalidDocument(format!(
                    "node {i} has id {}",
                    doc.id
                )));
            }
            let semigroup = Generators::new(&doc.gens)?;
            if semigroup.as_slice() != doc.gens {
                return Err(Error::InvalidDocument(format!(
                    "node {i}: generators are not a sorted minimal system"
                )));
            }
            if frobenius(&semigroup)? != doc.frobenius || genus(&semigroup)? != doc.genus {
                return Err(Error::InvalidDocument(format!(
                    "node {i}: stale invariants"
                )));
            }
            nodes.push(TreeNode {
                depth: semigroup.embedding_dimension().saturating_sub(2),
                semigroup,
                parent: doc.parent,
                children: doc.children,
            });
        }
        Ok(MansTree::from_nodes(self.m, self.r, nodes)?)
    }
}

/// Pretty-printed, newline-terminated JSON document for the tree.
pub fn export_json(tree: &MansTree) -> Result<String> {
    let mut text = serde_json::to_string_pretty(&TreeDocument::from_tree(tree)?)?;
    text.push('\n');
    Ok(text)
}

pub fn load_json(text: &str) -> Result<MansTree> {
    serde_json::from_str::<TreeDocument>(text)?.into_tree()
}
