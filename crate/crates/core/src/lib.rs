//! Numerical semigroups with a monotone Apery set.
//!
//! A numerical semigroup `S` with multiplicity `m` is a MANS-semigroup when
//! the least elements of `S` in the residue classes `1, 2, ..., m-1` modulo
//! `m` increase with the residue. This crate computes the generic invariants
//! (Apery sets, Frobenius number, genus, pseudo-Frobenius numbers,
//! irreducibility), detects the MANS property both directly and
//! recursively, evaluates the closed forms available in embedding dimension
//! three, and enumerates the tree `G(MA(m, r))` of all MANS-semigroups with
//! fixed multiplicity and ratio.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is checked;
//! overflow is reported as [`Error::Overflow`].
//!
//! ```
//! use mans_core::{Generators, frobenius, genus, is_mans};
//!
//! let s = Generators::new(&[5, 6, 13, 11]).unwrap();
//! assert_eq!(s.as_slice(), &[5, 6, 13]);
//! assert_eq!(frobenius(&s).unwrap(), 14);
//! assert_eq!(genus(&s).unwrap(), 8);
//! assert!(is_mans(&s).unwrap().is_mans);
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod mans;
pub mod oracle;
mod profile;
pub mod semigroup;
pub mod tree;

pub use error::{Error, Result};
pub use mans::{
    extend_apery, is_mans, is_mans_dim2, is_mans_recursive, is_suitably_monotone, mans3_apery,
    mans3_family, mans3_frobenius, mans3_from_params, mans3_genus, mans3_is_pseudo_symmetric,
    mans3_is_symmetric, mans3_params, mans3_pseudo_frobenius, residues_monotone, Mans3Params,
    MansCheckReport, MansViolation,
};
pub use profile::Profile;
pub use semigroup::{
    apery_at_multiplicity, apery_set, classify_irreducible, compare_under_order, contains,
    frobenius, frobenius_from_apery, genus, genus_from_apery, maximals_under_order,
    pseudo_frobenius, pseudo_frobenius_via, reduce_to_minimal_generators, type_of, AperyTable,
    Generators, Irreducibility, PartialOrderWitness,
};
pub use tree::{
    build_tree, build_tree_with, child_count, children, parent, suitably_monotone_elements,
    MansTree, TreeNode, TreeOptions,
};
