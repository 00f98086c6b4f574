//! Numerical semigroups given by their minimal system of generators, and the
//! generic invariants computed from an Apery set.
//!
//! Apery sets are computed as shortest paths over the residue classes modulo
//! `n`: residue `i` is reached from residue `j` by adding a generator `g`
//! with `j + g ≡ i (mod n)`. Membership, Frobenius number, genus and
//! pseudo-Frobenius numbers all derive from that table.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::error::{Error, Result};

/// Largest modulus for which an Apery table will be materialized.
pub const MAX_MODULUS: u64 = 1 << 26;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Greatest common divisor of all values (0 for an empty slice).
pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

/// Minimal system of generators of a numerical semigroup, sorted ascending.
///
/// The only way to obtain a value is through [`Generators::new`] (or the
/// tree and parameter constructors, which produce minimal systems by
/// construction), so every instance generates a numerical semigroup and no
/// element is redundant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generators(Vec<u64>);

impl Generators {
    /// Reduces an arbitrary generating set to the minimal one.
    pub fn new(raw: &[u64]) -> Result<Self> {
        reduce_to_minimal_generators(raw)
    }

    /// The semigroup of all non-negative integers, `⟨1⟩`.
    pub fn naturals() -> Self {
        Generators(vec![1])
    }

    pub(crate) fn from_minimal_unchecked(elems: Vec<u64>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(gcd_all(&elems), 1);
        Generators(elems)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, u64> {
        self.0.iter()
    }

    /// m(S), the least nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.0[0]
    }

    /// r(S), the second smallest minimal generator (absent for `⟨1⟩`).
    pub fn ratio(&self) -> Option<u64> {
        self.0.get(1).copied()
    }

    /// M(S), the greatest minimal generator.
    pub fn max_generator(&self) -> u64 {
        *self.0.last().expect("generators are never empty")
    }

    /// e(S).
    pub fn embedding_dimension(&self) -> usize {
        self.0.len()
    }

    pub fn is_naturals(&self) -> bool {
        self.0 == [1]
    }

    /// The semigroup generated by all minimal generators except the largest.
    /// `None` when that would leave fewer than one generator or a proper
    /// submonoid (i.e. for embedding dimension below 3).
    pub fn without_max(&self) -> Option<Self> {
        if self.0.len() < 3 {
            return None;
        }
        let prefix = self.0[..self.0.len() - 1].to_vec();
        // A prefix of a minimal system stays minimal; the gcd may not stay 1.
        if gcd_all(&prefix) != 1 {
            return None;
        }
        Some(Generators(prefix))
    }

    /// Minimal generators followed by `n`, which the caller guarantees is
    /// larger than every generator and not in the semigroup.
    pub(crate) fn adjoin_unchecked(&self, n: u64) -> Self {
        let mut elems = self.0.clone();
        debug_assert!(n > self.max_generator());
        elems.push(n);
        Generators(elems)
    }

    /// Whether `x` is an element of the semigroup.
    pub fn contains(&self, x: i64) -> Result<bool> {
        contains(self, x)
    }
}

impl fmt::Display for Generators {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("⟩")
    }
}

impl<'a> IntoIterator for &'a Generators {
    type Item = &'a u64;
    type IntoIter = core::slice::Iter<'a, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Shortest representable value in each residue class modulo `modulus`,
/// or `None` for classes the generators never reach within 64 bits.
fn residue_minima(gens: &[u64], modulus: u64) -> Result<Vec<Option<u64>>> {
    if modulus == 0 {
        return Err(Error::InvalidArgument("modulus must be positive"));
    }
    if modulus > MAX_MODULUS {
        return Err(Error::InvalidArgument("modulus too large to tabulate"));
    }
    let n = modulus as usize;
    let mut dist: Vec<Option<u64>> = vec![None; n];
    dist[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, res))) = heap.pop() {
        if dist[res] != Some(d) {
            continue;
        }
        for &g in gens {
            let step = (g % modulus) as usize;
            if step == 0 {
                continue;
            }
            let next = (res + step) % n;
            // a sum past u64::MAX is never a shortest path we can represent
            let Some(nd) = d.checked_add(g) else { continue };
            if dist[next].is_none_or(|cur| nd < cur) {
                dist[next] = Some(nd);
                heap.push(Reverse((nd, next)));
            }
        }
    }
    Ok(dist)
}

/// Apery set of a numerical semigroup with respect to one of its elements:
/// `w[i]` is the least element congruent to `i` modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AperyTable {
    modulus: u64,
    w: Vec<u64>,
}

impl AperyTable {
    pub(crate) fn from_values_unchecked(modulus: u64, w: Vec<u64>) -> Self {
        debug_assert_eq!(w.len() as u64, modulus);
        AperyTable { modulus, w }
    }

    /// Builds a table from explicit values, checking the shape invariants
    /// that do not need the semigroup itself: `w[0] = 0` and `w[i] ≡ i`.
    pub fn from_values(modulus: u64, w: Vec<u64>) -> Result<Self> {
        if modulus == 0 || w.len() as u64 != modulus {
            return Err(Error::InvalidArgument(
                "table length must equal its modulus",
            ));
        }
        if w[0] != 0 {
            return Err(Error::InvalidArgument("w(0) must be 0"));
        }
        if w.iter().enumerate().any(|(i, &v)| v % modulus != i as u64) {
            return Err(Error::InvalidArgument("w(i) must be congruent to i"));
        }
        Ok(AperyTable { modulus, w })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.w
    }

    pub fn into_values(self) -> Vec<u64> {
        self.w
    }

    /// `w(i)`.
    pub fn get(&self, residue: usize) -> u64 {
        self.w[residue]
    }

    pub fn max(&self) -> u64 {
        self.w.iter().copied().max().unwrap_or(0)
    }

    /// Membership in the semigroup the table was computed for.
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        x >= self.w[(x % self.modulus) as usize]
    }

    /// `w(0) < w(1) < ... < w(n-1)`.
    pub fn is_strictly_increasing(&self) -> bool {
        self.w.windows(2).all(|p| p[0] < p[1])
    }

    /// Least `i >= 1` with `w(i) >= w(i+1)`.
    pub fn first_descent(&self) -> Option<usize> {
        self.w
            .windows(2)
            .enumerate()
            .skip(1)
            .find(|(_, p)| p[0] >= p[1])
            .map(|(i, _)| i)
    }
}

/// Minimal generating set of the monoid spanned by `raw`.
///
/// Values are sorted and processed in increasing order; a value is kept iff
/// it lies below the Apery bound of the monoid spanned by the values already
/// kept.
pub fn reduce_to_minimal_generators(raw: &[u64]) -> Result<Generators> {
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }
    if raw.contains(&0) {
        return Err(Error::ZeroGenerator);
    }
    let g = gcd_all(raw);
    if g != 1 {
        return Err(Error::GcdNotOne { gcd: g });
    }
    let mut sorted = raw.to_vec();
    sorted.sort_unstable();
    sorted.dedup();

    let m = sorted[0];
    let mut kept = vec![m];
    let mut minima = residue_minima(&kept, m)?;
    for &x in &sorted[1..] {
        let class = (x % m) as usize;
        let representable = minima[class].is_some_and(|w| x >= w);
        if !representable {
            kept.push(x);
            minima = residue_minima(&kept, m)?;
        }
    }
    Ok(Generators(kept))
}

fn apery_unchecked(s: &Generators, n: u64) -> Result<AperyTable> {
    let minima = residue_minima(s.as_slice(), n)?;
    let w = minima
        .into_iter()
        .map(|v| v.ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    Ok(AperyTable::from_values_unchecked(n, w))
}

/// `Ap(S, n)` for `n ∈ S`, `n >= 1`.
pub fn apery_set(s: &Generators, n: u64) -> Result<AperyTable> {
    if n == 0 || !contains(s, n as i64)? {
        return Err(Error::ModulusNotInSemigroup { modulus: n });
    }
    apery_unchecked(s, n)
}

/// `Ap(S, m(S))`.
pub fn apery_at_multiplicity(s: &Generators) -> Result<AperyTable> {
    apery_unchecked(s, s.multiplicity())
}

/// Whether `x ∈ S`. Negative numbers are never members.
pub fn contains(s: &Generators, x: i64) -> Result<bool> {
    if x < 0 {
        return Ok(false);
    }
    if x > i64::MAX / 2 {
        return Err(Error::Overflow);
    }
    Ok(apery_at_multiplicity(s)?.contains(x))
}

/// Frobenius number, `max(Ap(S, m)) - m`; `-1` for `⟨1⟩`.
pub fn frobenius(s: &Generators) -> Result<i64> {
    frobenius_from_apery(&apery_at_multiplicity(s)?)
}

/// Frobenius number from an Apery table with respect to any nonzero element.
pub fn frobenius_from_apery(ap: &AperyTable) -> Result<i64> {
    let max = i64::try_from(ap.max()).map_err(|_| Error::Overflow)?;
    let n = i64::try_from(ap.modulus()).map_err(|_| Error::Overflow)?;
    Ok(max - n)
}

/// Number of gaps, `(Σ w(i))/n - (n-1)/2` at `n = m(S)`.
pub fn genus(s: &Generators) -> Result<u64> {
    genus_from_apery(&apery_at_multiplicity(s)?)
}

/// Genus from an Apery table with respect to any nonzero element.
pub fn genus_from_apery(ap: &AperyTable) -> Result<u64> {
    let n = ap.modulus();
    let sum = ap
        .values()
        .iter()
        .try_fold(0u64, |acc, &w| acc.checked_add(w))
        .ok_or(Error::Overflow)?;
    let triangle = n.checked_mul(n - 1).map(|v| v / 2).ok_or(Error::Overflow)?;
    let excess = sum
        .checked_sub(triangle)
        .ok_or(Error::InternalFormulaMismatch {
            what: "Apery sum below n(n-1)/2",
        })?;
    if excess % n != 0 {
        return Err(Error::InternalFormulaMismatch {
            what: "Apery sum not exactly divisible",
        });
    }
    Ok(excess / n)
}

/// Elements of `ap` that are maximal for the order `x ≤_S y ⇔ y - x ∈ S`.
///
/// `ap` must be the Apery table of `s` for some `n ∈ S`; a table that does
/// not match `s` is rejected.
pub fn maximals_under_order(s: &Generators, ap: &AperyTable) -> Result<Vec<u64>> {
    let expected = apery_set(s, ap.modulus())?;
    if &expected != ap {
        return Err(Error::AperyMismatch);
    }
    Ok(maximals_of(ap))
}

fn maximals_of(ap: &AperyTable) -> Vec<u64> {
    let values = ap.values();
    let mut out: Vec<u64> = values
        .iter()
        .copied()
        .filter(|&w| {
            !values
                .iter()
                .any(|&other| other > w && ap.contains((other - w) as i64))
        })
        .collect();
    out.sort_unstable();
    out
}

/// Pseudo-Frobenius numbers, sorted ascending. Empty for `⟨1⟩`.
pub fn pseudo_frobenius(s: &Generators) -> Result<Vec<u64>> {
    if s.is_naturals() {
        return Ok(Vec::new());
    }
    pseudo_frobenius_via(s, s.multiplicity())
}

/// Pseudo-Frobenius numbers computed from `Ap(S, n)` for a chosen `n ∈ S∖{0}`.
pub fn pseudo_frobenius_via(s: &Generators, n: u64) -> Result<Vec<u64>> {
    if s.is_naturals() {
        return Ok(Vec::new());
    }
    let ap = apery_set(s, n)?;
    Ok(maximals_of(&ap).into_iter().map(|w| w - n).collect())
}

/// Type of the semigroup, `|PF(S)|`.
pub fn type_of(s: &Generators) -> Result<usize> {
    if s.is_naturals() {
        return Err(Error::UndefinedForN);
    }
    Ok(pseudo_frobenius(s)?.len())
}

/// Irreducibility class of a numerical semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Irreducibility {
    Symmetric,
    PseudoSymmetric,
    Neither,
}

impl Irreducibility {
    pub fn as_str(self) -> &'static str {
        match self {
            Irreducibility::Symmetric => "symmetric",
            Irreducibility::PseudoSymmetric => "pseudo_symmetric",
            Irreducibility::Neither => "neither",
        }
    }
}

impl fmt::Display for Irreducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies by the Frobenius/genus criteria and cross-checks the result
/// against the pseudo-Frobenius characterizations.
pub fn classify_irreducible(s: &Generators) -> Result<Irreducibility> {
    if s.is_naturals() {
        return Err(Error::UndefinedForN);
    }
    let ap = apery_at_multiplicity(s)?;
    let f = frobenius_from_apery(&ap)?;
    let g = i64::try_from(genus_from_apery(&ap)?).map_err(|_| Error::Overflow)?;
    let pf = pseudo_frobenius(s)?;
    classify_from_invariants(f, g, &pf)
}

pub(crate) fn classify_from_invariants(f: i64, g: i64, pf: &[u64]) -> Result<Irreducibility> {
    let symmetric_by_genus = f == 2 * g - 1;
    let pseudo_by_genus = f == 2 * g - 2;
    let symmetric_by_pf = pf.len() == 1 && pf[0] as i64 == f;
    let pseudo_by_pf = f % 2 == 0 && pf.len() == 2 && pf[0] as i64 == f / 2 && pf[1] as i64 == f;
    if symmetric_by_genus != symmetric_by_pf {
        return Err(Error::InternalFormulaMismatch {
            what: "symmetric criteria disagree",
        });
    }
    if pseudo_by_genus != pseudo_by_pf {
        return Err(Error::InternalFormulaMismatch {
            what: "pseudo-symmetric criteria disagree",
        });
    }
    Ok(if symmetric_by_genus {
        Irreducibility::Symmetric
    } else if pseudo_by_genus && pseudo_by_pf {
        Irreducibility::PseudoSymmetric
    } else {
        Irreducibility::Neither
    })
}

/// Outcome of comparing two integers under `≤_S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartialOrderWitness {
    pub a: i64,
    pub b: i64,
    /// `b - a ∈ S`, i.e. `a ≤_S b`.
    pub difference_in_s: bool,
}

pub fn compare_under_order(s: &Generators, a: i64, b: i64) -> Result<PartialOrderWitness> {
    let diff = b.checked_sub(a).ok_or(Error::Overflow)?;
    Ok(PartialOrderWitness {
        a,
        b,
        difference_in_s: contains(s, diff)?,
    })
}
