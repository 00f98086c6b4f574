//! Bundle of invariants for one semigroup.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::mans::is_mans;
use crate::semigroup::{
    apery_at_multiplicity, classify_from_invariants, frobenius_from_apery, genus_from_apery,
    pseudo_frobenius, Generators, Irreducibility,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub generators: Generators,
    pub frobenius: i64,
    pub genus: u64,
    pub pf: Vec<u64>,
    /// `|pf|`; 0 for `⟨1⟩`, where the type is undefined.
    pub type_count: usize,
    pub is_mans: bool,
    /// `None` for `⟨1⟩`.
    pub irreducibility: Option<Irreducibility>,
}

impl Profile {
    pub fn compute(s: &Generators) -> Result<Self> {
        let ap = apery_at_multiplicity(s)?;
        let frobenius = frobenius_from_apery(&ap)?;
        let genus = genus_from_apery(&ap)?;
        let pf = pseudo_frobenius(s)?;
        let irreducibility = if s.is_naturals() {
            None
        } else {
            let g = i64::try_from(genus).map_err(|_| Error::Overflow)?;
            Some(classify_from_invariants(frobenius, g, &pf)?)
        };
        Ok(Profile {
            generators: s.clone(),
            frobenius,
            genus,
            type_count: pf.len(),
            pf,
            is_mans: is_mans(s)?.is_mans,
            irreducibility,
        })
    }
}
