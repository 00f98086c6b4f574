//! Brute-force reference computations, written straight from the
//! definitions and sharing no formula code with the rest of the crate.
//! Used by property tests and the verification sweeps.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::semigroup::{gcd_all, Generators};

/// Largest table the oracle will allocate.
pub const MAX_TABLE_BOUND: u64 = 1 << 28;

/// Default cap on the number of candidate semigroups visited by
/// [`oracle_enumerate_ma`].
pub const DEFAULT_MAX_CANDIDATES: usize = 1 << 24;

/// Membership of `0..=bound` in the monoid spanned by some generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipTable {
    bound: u64,
    bits: Vec<bool>,
}

impl MembershipTable {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Membership of `x`; panics if `x` exceeds the bound.
    pub fn get(&self, x: u64) -> bool {
        self.bits[x as usize]
    }

    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(x, _)| x as u64)
    }
}

fn check_generators(gens: &[u64]) -> Result<()> {
    if gens.is_empty() {
        return Err(Error::EmptyInput);
    }
    if gens.contains(&0) {
        return Err(Error::ZeroGenerator);
    }
    Ok(())
}

/// Forward reachability: `x` is a member iff `x = 0` or `x - g` is a member
/// for some generator `g <= x`.
pub fn oracle_membership(gens: &[u64], bound: u64) -> Result<MembershipTable> {
    check_generators(gens)?;
    if bound < gens.iter().copied().max().unwrap_or(0) {
        return Err(Error::InvalidArgument(
            "bound must be at least the largest generator",
        ));
    }
    if bound > MAX_TABLE_BOUND {
        return Err(Error::Overflow);
    }
    let mut bits = vec![false; bound as usize + 1];
    bits[0] = true;
    for x in 1..=bound as usize {
        bits[x] = gens
            .iter()
            .any(|&g| g as usize <= x && bits[x - g as usize]);
    }
    Ok(MembershipTable { bound, bits })
}

/// Membership table long enough to show the conductor, and the conductor
/// itself (least `c` with every integer `>= c` a member).
fn table_past_conductor(gens: &[u64]) -> Result<(MembershipTable, u64)> {
    check_generators(gens)?;
    let g = gcd_all(gens);
    if g != 1 {
        return Err(Error::GcdNotOne { gcd: g });
    }
    let least = gens.iter().copied().min().unwrap();
    let mut bound = gens.iter().copied().max().unwrap().saturating_mul(4).max(8);
    loop {
        let table = oracle_membership(gens, bound)?;
        // A run of `least` consecutive members means everything beyond is a member.
        let mut run = 0u64;
        for x in 0..=bound {
            if table.get(x) {
                run += 1;
                if run == least {
                    let conductor = (0..=x).rev().find(|&y| !table.get(y)).map_or(0, |y| y + 1);
                    return Ok((table, conductor));
                }
            } else {
                run = 0;
            }
        }
        bound = bound.checked_mul(2).ok_or(Error::Overflow)?;
    }
}

/// All non-members, ascending.
pub fn oracle_gaps(gens: &[u64]) -> Result<Vec<u64>> {
    let (table, conductor) = table_past_conductor(gens)?;
    Ok((0..conductor).filter(|&x| !table.get(x)).collect())
}

/// Gaps `x` with `x + s` a member for every nonzero member `s`; checking the
/// generators is enough.
pub fn oracle_pf(gens: &[u64]) -> Result<Vec<u64>> {
    let (table, conductor) = table_past_conductor(gens)?;
    let member = |x: u64| x >= conductor || table.get(x);
    Ok((0..conductor)
        .filter(|&x| !member(x) && gens.iter().all(|&g| member(x + g)))
        .collect())
}

/// Every MANS semigroup with multiplicity `m` and ratio `r`, found by
/// exhaustive search over the semigroups containing `⟨m, r⟩`.
pub fn oracle_enumerate_ma(m: u64, r: u64) -> Result<Vec<Generators>> {
    oracle_enumerate_ma_with_limit(m, r, DEFAULT_MAX_CANDIDATES)
}

/// As [`oracle_enumerate_ma`], failing once more than `max_candidates`
/// oversemigroups have been visited.
///
/// Each gap of `⟨m, r⟩` above `r` is decided in increasing order: it is
/// forced in when it is a sum of two smaller members, otherwise both choices
/// are explored. Every leaf is therefore an additively closed set, and every
/// numerical semigroup with multiplicity `m` and ratio `r` is reached once.
pub fn oracle_enumerate_ma_with_limit(
    m: u64,
    r: u64,
    max_candidates: usize,
) -> Result<Vec<Generators>> {
    if m < 2 || r <= m {
        return Err(Error::InvalidArgument("need 2 <= m < r"));
    }
    let (base, conductor) = table_past_conductor(&[m, r])?;
    let mut member: Vec<bool> = (0..conductor).map(|x| base.get(x)).collect();
    let candidates: Vec<u64> = (r + 1..conductor)
        .filter(|&x| !member[x as usize])
        .collect();

    let mut search = Search {
        m,
        r,
        conductor,
        candidates,
        visited: 0,
        limit: max_candidates,
        found: Vec::new(),
    };
    search.descend(0, &mut member)?;
    let mut found = search.found;
    found.sort();
    Ok(found)
}

struct Search {
    m: u64,
    r: u64,
    conductor: u64,
    candidates: Vec<u64>,
    visited: usize,
    limit: usize,
    found: Vec<Generators>,
}

impl Search {
    fn descend(&mut self, k: usize, member: &mut Vec<bool>) -> Result<()> {
        let Some(&x) = self.candidates.get(k) else {
            self.visited += 1;
            if self.visited > self.limit {
                return Err(Error::SearchSpaceTooLarge { limit: self.limit });
            }
            self.visit_leaf(member);
            return Ok(());
        };
        let xi = x as usize;
        let forced = (1..=xi / 2).any(|y| member[y] && member[xi - y]);
        if forced {
            member[xi] = true;
            self.descend(k + 1, member)?;
            member[xi] = false;
        } else {
            self.descend(k + 1, member)?;
            member[xi] = true;
            self.descend(k + 1, member)?;
            member[xi] = false;
        }
        Ok(())
    }

    fn visit_leaf(&mut self, member: &[bool]) {
        let c = self.conductor;
        let is_member = |x: u64| x >= c || member[x as usize];

        // least member in each residue class modulo m, straight from the table
        let apery: Vec<u64> = (0..self.m)
            .map(|i| {
                (0..)
                    .map(|k| i + k * self.m)
                    .find(|&x| is_member(x))
                    .unwrap()
            })
            .collect();
        if !apery.windows(2).all(|p| p[0] < p[1]) {
            return;
        }

        let minimal: Vec<u64> = (1..c + self.m)
            .filter(|&x| is_member(x))
            .filter(|&x| !(1..=x / 2).any(|y| is_member(y) && is_member(x - y)))
            .collect();
        if minimal.first() != Some(&self.m) || minimal.get(1) != Some(&self.r) {
            return;
        }
        self.found.push(Generators::from_minimal_unchecked(minimal));
    }
}
