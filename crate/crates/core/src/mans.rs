//! Semigroups whose Apery set with respect to the multiplicity is strictly
//! increasing in the residue index (MANS-semigroups).
//!
//! Besides the definition-level check this module carries the recursive
//! characterization (peel the greatest generator, check the sandwich
//! condition), the closed forms for embedding dimension three, and the
//! incremental Apery update used when a generator is adjoined.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::semigroup::{
    apery_at_multiplicity, apery_set, gcd, reduce_to_minimal_generators, AperyTable, Generators,
};

/// Result of the definition-level MANS check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MansCheckReport {
    pub is_mans: bool,
    /// Least `i >= 1` with `w(i) >= w(i+1)`, when the ratio has the form
    /// `a·m + 1` but the table still fails to increase.
    pub failing_index: Option<usize>,
    /// `a` with `r(S) = a·m(S) + 1`, if the ratio has that form.
    pub ratio_coefficient: Option<u64>,
}

/// Why a semigroup failed the MANS check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MansViolation {
    /// The ratio is not congruent to 1 modulo the multiplicity.
    RatioForm,
    /// The Apery table descends at this index.
    Descent(usize),
}

impl MansCheckReport {
    pub fn violation(&self) -> Option<MansViolation> {
        match (self.is_mans, self.failing_index) {
            (true, _) => None,
            (false, Some(i)) => Some(MansViolation::Descent(i)),
            (false, None) => Some(MansViolation::RatioForm),
        }
    }
}

fn ratio_coefficient(s: &Generators) -> Option<u64> {
    let m = s.multiplicity();
    let r = s.ratio()?;
    (r % m == 1).then(|| (r - 1) / m)
}

/// Checks `w(1) < w(2) < ... < w(m-1)` on `Ap(S, m(S))`. `⟨1⟩` passes vacuously.
pub fn is_mans(s: &Generators) -> Result<MansCheckReport> {
    let ap = apery_at_multiplicity(s)?;
    let is_mans = ap.is_strictly_increasing();
    let coefficient = ratio_coefficient(s);
    let failing_index = if is_mans || (coefficient.is_none() && !s.is_naturals()) {
        None
    } else {
        ap.first_descent()
    };
    debug_assert!(is_mans || coefficient.is_none() || failing_index.is_some());
    Ok(MansCheckReport {
        is_mans,
        failing_index,
        ratio_coefficient: coefficient,
    })
}

/// Residues of the minimal generators modulo the multiplicity strictly
/// increase. Necessary for MANS, not sufficient.
pub fn residues_monotone(s: &Generators) -> bool {
    let m = s.multiplicity();
    s.as_slice()[1..].windows(2).all(|p| p[0] % m < p[1] % m)
}

/// `⟨n1, n2⟩` is MANS iff `n2 ≡ 1 (mod n1)`.
pub fn is_mans_dim2(n1: u64, n2: u64) -> Result<bool> {
    if n1 < 2 || n2 <= n1 {
        return Err(Error::InvalidArgument("need 2 <= n1 < n2"));
    }
    let g = gcd(n1, n2);
    if g != 1 {
        return Err(Error::GcdNotOne { gcd: g });
    }
    Ok(n2 % n1 == 1)
}

/// Parameters `(m, a, b, t)` of the embedding-dimension-3 MANS semigroup
/// `⟨m, am+1, bm+t⟩`, with `q = ⌊(m-1)/t⌋` and `r = (m-1) mod t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mans3Params {
    m: u64,
    a: u64,
    b: u64,
    t: u64,
    q: u64,
    r: u64,
}

impl Mans3Params {
    /// Validates `m >= 3`, `a, b >= 1`, `2 <= t <= m-1` and
    /// `(t-1)(am+1) < bm+t < t(am+1)`.
    pub fn new(m: u64, a: u64, b: u64, t: u64) -> Result<Self> {
        let invalid = Error::InvalidParams { m, a, b, t };
        if m < 3 || a < 1 || b < 1 || t < 2 || t > m - 1 {
            return Err(invalid);
        }
        let ratio = mul_add(a, m, 1)?;
        let max_gen = mul_add(b, m, t)?;
        let lower = (t - 1).checked_mul(ratio).ok_or(Error::Overflow)?;
        let upper = t.checked_mul(ratio).ok_or(Error::Overflow)?;
        if !(lower < max_gen && max_gen < upper) {
            return Err(invalid);
        }
        Ok(Mans3Params {
            m,
            a,
            b,
            t,
            q: (m - 1) / t,
            r: (m - 1) % t,
        })
    }

    pub fn m(&self) -> u64 {
        self.m
    }
    pub fn a(&self) -> u64 {
        self.a
    }
    pub fn b(&self) -> u64 {
        self.b
    }
    pub fn t(&self) -> u64 {
        self.t
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn r(&self) -> u64 {
        self.r
    }

    /// `am + 1`.
    pub fn ratio(&self) -> u64 {
        self.a * self.m + 1
    }

    /// `bm + t`.
    pub fn max_generator(&self) -> u64 {
        self.b * self.m + self.t
    }
}

fn mul_add(x: u64, y: u64, z: u64) -> Result<u64> {
    x.checked_mul(y)
        .and_then(|v| v.checked_add(z))
        .ok_or(Error::Overflow)
}

/// Every admissible parameter tuple with the given `m` and `a`, ordered by
/// `t` and then `b`.
pub fn mans3_family(m: u64, a: u64) -> Result<Vec<Mans3Params>> {
    let mut out = Vec::new();
    if m < 3 || a < 1 {
        return Ok(out);
    }
    let ratio = mul_add(a, m, 1)?;
    for t in 2..m {
        // (t-1)(am+1) - t < bm < t(am+1) - t
        let lo = (t - 1).checked_mul(ratio).ok_or(Error::Overflow)? - t;
        let hi = t.checked_mul(ratio).ok_or(Error::Overflow)? - t;
        let b_min = (lo / m + 1).max(1);
        let b_max = (hi - 1) / m;
        for b in b_min..=b_max {
            out.push(Mans3Params::new(m, a, b, t)?);
        }
    }
    Ok(out)
}

/// Recovers `(m, a, b, t)` from a MANS semigroup of embedding dimension 3.
pub fn mans3_params(s: &Generators) -> Result<Mans3Params> {
    let g = s.as_slice();
    if g.len() != 3 {
        return Err(Error::NotEmbeddingDim3 {
            embedding_dimension: g.len(),
        });
    }
    let m = g[0];
    if g[1] % m != 1 {
        return Err(Error::NotMans);
    }
    let a = (g[1] - 1) / m;
    let (b, t) = (g[2] / m, g[2] % m);
    Mans3Params::new(m, a, b, t).map_err(|e| match e {
        Error::InvalidParams { .. } => Error::NotMans,
        other => other,
    })
}

/// `⟨m, am+1, bm+t⟩`. Minimal and MANS for every admissible tuple.
pub fn mans3_from_params(p: &Mans3Params) -> Generators {
    Generators::from_minimal_unchecked(vec![p.m, p.ratio(), p.max_generator()])
}

/// `w(i) = ⌊i/t⌋(bm+t) + (i mod t)(am+1)`.
pub fn mans3_apery(p: &Mans3Params) -> Result<AperyTable> {
    let w = (0..p.m)
        .map(|i| {
            let high = (i / p.t).checked_mul(p.max_generator());
            let low = (i % p.t).checked_mul(p.ratio());
            high.zip(low)
                .and_then(|(h, l)| h.checked_add(l))
                .ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AperyTable::from_values_unchecked(p.m, w))
}

/// `F(S) = r(am+1) + q(bm+t) - m`.
pub fn mans3_frobenius(p: &Mans3Params) -> Result<i64> {
    let top =
        p.r.checked_mul(p.ratio())
            .zip(p.q.checked_mul(p.max_generator()))
            .and_then(|(x, y)| x.checked_add(y))
            .ok_or(Error::Overflow)?;
    let top = i64::try_from(top).map_err(|_| Error::Overflow)?;
    Ok(top - p.m as i64)
}

/// Genus by the Apery-sum closed form, cross-checked against the rewrite
/// `(qt(t-1) + r(r+1))a/2 + (qt(q-1) + 2q(r+1))b/2`.
pub fn mans3_genus(p: &Mans3Params) -> Result<u64> {
    let (m, q, r, t) = (p.m as u128, p.q as u128, p.r as u128, p.t as u128);
    let ratio_weight = q * t * (t - 1) + r * (r + 1);
    let max_weight = q * t * (q - 1) + 2 * q * (r + 1);

    let numerator = ratio_weight * p.ratio() as u128 + max_weight * p.max_generator() as u128;
    let shifted = numerator
        .checked_sub(m * (m - 1))
        .ok_or(Error::InternalFormulaMismatch {
            what: "genus numerator below m(m-1)",
        })?;
    if shifted % (2 * m) != 0 {
        return Err(Error::InternalFormulaMismatch {
            what: "genus not an integer",
        });
    }
    let by_apery_sum = shifted / (2 * m);

    if ratio_weight % 2 != 0 || max_weight % 2 != 0 {
        return Err(Error::InternalFormulaMismatch {
            what: "odd genus weights",
        });
    }
    let by_rewrite = ratio_weight / 2 * p.a as u128 + max_weight / 2 * p.b as u128;
    if by_apery_sum != by_rewrite {
        return Err(Error::InternalFormulaMismatch {
            what: "genus forms disagree",
        });
    }
    u64::try_from(by_apery_sum).map_err(|_| Error::Overflow)
}

/// `PF(S)`: one element when `t | m`, otherwise two.
pub fn mans3_pseudo_frobenius(p: &Mans3Params) -> Result<Vec<u64>> {
    let frob = u64::try_from(mans3_frobenius(p)?).map_err(|_| Error::Overflow)?;
    if p.m.is_multiple_of(p.t) {
        return Ok(vec![frob]);
    }
    let other = ((p.q - 1) as u128 * p.max_generator() as u128
        + (p.t - 1) as u128 * p.ratio() as u128)
        .checked_sub(p.m as u128)
        .ok_or(Error::Overflow)?;
    let other = u64::try_from(other).map_err(|_| Error::Overflow)?;
    let mut pf = vec![other, frob];
    pf.sort_unstable();
    Ok(pf)
}

/// Type one, i.e. symmetric, iff `t | m`.
pub fn mans3_is_symmetric(p: &Mans3Params) -> bool {
    p.m.is_multiple_of(p.t)
}

/// Pseudo-symmetric iff `2t = m + 1` and `ta - b = 1`.
pub fn mans3_is_pseudo_symmetric(p: &Mans3Params) -> bool {
    2 * p.t as u128 == p.m as u128 + 1 && p.t as u128 * p.a as u128 == p.b as u128 + 1
}

/// The three growth conditions for adjoining `n` to `s` given `ap = Ap(S, m)`:
/// `n > M(S)`, `M(S) mod m < n mod m`, `w(n mod m - 1) < n < w(n mod m)`.
pub fn is_suitably_monotone(s: &Generators, ap: &AperyTable, n: u64) -> bool {
    let m = s.multiplicity();
    let top = s.max_generator();
    let residue = n % m;
    n > top && top % m < residue && ap.get(residue as usize - 1) < n && n < ap.get(residue as usize)
}

/// Recursive MANS test: `⟨n1, n2⟩` must have `n2 ≡ 1 (mod n1)`, and each
/// further generator must have a larger residue than the previous one and
/// sit strictly between the neighbouring Apery values of the semigroup
/// generated by the smaller generators.
pub fn is_mans_recursive(s: &Generators) -> Result<bool> {
    let g = s.as_slice();
    if g.len() <= 1 {
        return Ok(true);
    }
    recursive_prefix(g, g.len())
}

fn recursive_prefix(g: &[u64], len: usize) -> Result<bool> {
    let n1 = g[0];
    if len == 2 {
        // gcd(n1, n2) > 1 rules out n2 ≡ 1 as well
        return Ok(g[1] % n1 == 1);
    }
    if !recursive_prefix(g, len - 1)? {
        return Ok(false);
    }
    // The prefix generates a numerical semigroup because n2 ≡ 1 (mod n1).
    let prefix = reduce_to_minimal_generators(&g[..len - 1])?;
    if prefix.as_slice() != &g[..len - 1] {
        return Err(Error::InvalidArgument("generator prefix is not minimal"));
    }
    let next = g[len - 1];
    let previous = g[len - 2];
    if previous % n1 >= next % n1 {
        return Ok(false);
    }
    let ap = apery_set(&prefix, n1)?;
    let residue = (next % n1) as usize;
    Ok(ap.get(residue - 1) < next && next < ap.get(residue))
}

/// `Ap(⟨S ∪ {n_new}⟩, m)` from `ap = Ap(S, m)` by layered minima:
/// `w'(i) = min_h { h·n_new + w(i - h·t) }` over `0 <= h <= min(K, i/t)`,
/// where `t = n_new mod m` and `K = ⌊(m-1)/t⌋`.
pub fn extend_apery(s: &Generators, ap: &AperyTable, n_new: u64) -> Result<AperyTable> {
    let m = s.multiplicity();
    if ap.modulus() != m {
        return Err(Error::AperyMismatch);
    }
    if s.embedding_dimension() < 2 || !ap.is_strictly_increasing() {
        return Err(Error::NotMans);
    }
    if !is_suitably_monotone(s, ap, n_new) {
        return Err(Error::NotSuitablyMonotone { candidate: n_new });
    }
    let t = (n_new % m) as usize;
    let levels = (m as usize - 1) / t;
    let w = (0..m as usize)
        .map(|i| {
            let mut best = ap.get(i);
            for h in 1..=levels.min(i / t) {
                let shifted = (h as u64)
                    .checked_mul(n_new)
                    .and_then(|v| v.checked_add(ap.get(i - h * t)))
                    .ok_or(Error::Overflow)?;
                best = best.min(shifted);
            }
            Ok(best)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AperyTable::from_values_unchecked(m, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{frobenius, genus, pseudo_frobenius};

    fn gens(v: &[u64]) -> Generators {
        Generators::new(v).unwrap()
    }

    fn params(m: u64, a: u64, b: u64, t: u64) -> Mans3Params {
        Mans3Params::new(m, a, b, t).unwrap()
    }

    #[test]
    fn definition_check() {
        assert!(is_mans(&gens(&[5, 6, 13])).unwrap().is_mans);
        assert!(is_mans(&gens(&[10, 11, 23])).unwrap().is_mans);
        assert!(is_mans(&Generators::naturals()).unwrap().is_mans);

        let bad = is_mans(&gens(&[5, 7, 9])).unwrap();
        assert!(!bad.is_mans);
        assert_eq!(bad.violation(), Some(MansViolation::RatioForm));

        // ratio has the right form but 14 lands below w(3) = 18 of ⟨5,6⟩
        let bad = is_mans(&gens(&[5, 6, 14])).unwrap();
        assert_eq!(bad.ratio_coefficient, Some(1));
        assert_eq!(bad.violation(), Some(MansViolation::Descent(3)));
    }

    #[test]
    fn residue_condition() {
        assert!(residues_monotone(&gens(&[5, 6, 13])));
        assert!(residues_monotone(&gens(&[5, 11, 17])));
        assert!(!residues_monotone(&gens(&[5, 7, 11])));
    }

    #[test]
    fn dim2() {
        assert!(is_mans_dim2(5, 6).unwrap());
        assert!(is_mans_dim2(5, 11).unwrap());
        assert!(!is_mans_dim2(3, 5).unwrap());
        assert_eq!(is_mans_dim2(4, 6), Err(Error::GcdNotOne { gcd: 2 }));
    }

    #[test]
    fn params_round_trip() {
        let p = mans3_params(&gens(&[5, 6, 13])).unwrap();
        assert_eq!(
            (p.m(), p.a(), p.b(), p.t(), p.q(), p.r()),
            (5, 1, 2, 3, 1, 1)
        );
        let p = mans3_params(&gens(&[10, 11, 23])).unwrap();
        assert_eq!((p.m(), p.a(), p.b(), p.t()), (10, 1, 2, 3));
        let p = mans3_params(&gens(&[5, 11, 28])).unwrap();
        assert_eq!((p.m(), p.a(), p.b(), p.t()), (5, 2, 5, 3));

        assert_eq!(
            mans3_params(&gens(&[5, 6])),
            Err(Error::NotEmbeddingDim3 {
                embedding_dimension: 2
            })
        );
        assert_eq!(mans3_params(&gens(&[5, 7, 9])), Err(Error::NotMans));
        assert_eq!(mans3_params(&gens(&[5, 6, 14])), Err(Error::NotMans));

        assert_eq!(
            mans3_from_params(&params(5, 1, 2, 3)).as_slice(),
            &[5, 6, 13]
        );
        assert_eq!(
            mans3_from_params(&params(6, 1, 2, 3)).as_slice(),
            &[6, 7, 15]
        );
        assert!(matches!(
            Mans3Params::new(5, 1, 1, 4),
            Err(Error::InvalidParams { .. })
        ));
        assert!(matches!(
            Mans3Params::new(5, 1, 2, 5),
            Err(Error::InvalidParams { .. })
        ));
        assert!(matches!(
            Mans3Params::new(2, 1, 1, 1),
            Err(Error::InvalidParams { .. })
        ));
    }

    #[test]
    fn closed_form_apery() {
        assert_eq!(
            mans3_apery(&params(5, 1, 2, 3)).unwrap().values(),
            &[0, 6, 12, 13, 19]
        );
        assert_eq!(
            mans3_apery(&params(10, 1, 2, 3)).unwrap().values(),
            &[0, 11, 22, 23, 34, 45, 46, 57, 68, 69]
        );
        assert_eq!(
            mans3_apery(&params(13, 2, 4, 3)).unwrap().values(),
            &[0, 27, 54, 55, 82, 109, 110, 137, 164, 165, 192, 219, 220]
        );
    }

    #[test]
    fn closed_form_invariants() {
        assert_eq!(mans3_frobenius(&params(5, 1, 2, 3)).unwrap(), 14);
        assert_eq!(mans3_frobenius(&params(7, 2, 2, 2)).unwrap(), 41);
        assert_eq!(mans3_frobenius(&params(3, 1, 1, 2)).unwrap(), 2);

        assert_eq!(mans3_genus(&params(5, 1, 2, 3)).unwrap(), 8);
        assert_eq!(mans3_genus(&params(10, 1, 2, 3)).unwrap(), 33);
        assert_eq!(mans3_genus(&params(7, 2, 2, 2)).unwrap(), 24);

        assert_eq!(mans3_pseudo_frobenius(&params(6, 1, 2, 3)).unwrap(), [23]);
        assert_eq!(
            mans3_pseudo_frobenius(&params(5, 1, 2, 3)).unwrap(),
            [7, 14]
        );
        assert_eq!(
            mans3_pseudo_frobenius(&params(5, 2, 3, 2)).unwrap(),
            [23, 29]
        );
    }

    #[test]
    fn closed_forms_match_generic_on_examples() {
        for p in [params(5, 1, 2, 3), params(7, 2, 2, 2), params(3, 1, 1, 2)] {
            let s = mans3_from_params(&p);
            assert_eq!(mans3_frobenius(&p).unwrap(), frobenius(&s).unwrap());
            assert_eq!(mans3_genus(&p).unwrap(), genus(&s).unwrap());
            assert_eq!(
                mans3_pseudo_frobenius(&p).unwrap(),
                pseudo_frobenius(&s).unwrap()
            );
        }
    }

    #[test]
    fn irreducibility_flags() {
        assert!(mans3_is_symmetric(&params(6, 1, 2, 3)));
        assert!(!mans3_is_symmetric(&params(5, 1, 2, 3)));
        assert!(!mans3_is_symmetric(&params(5, 2, 3, 2)));

        assert!(mans3_is_pseudo_symmetric(&params(5, 2, 5, 3)));
        assert!(!mans3_is_pseudo_symmetric(&params(5, 1, 3, 4)));
        assert!(!mans3_is_pseudo_symmetric(&params(5, 2, 4, 3)));
    }

    #[test]
    fn family_enumeration() {
        // b ranges over [(t-1)a, ta-1] for each t
        let fam = mans3_family(5, 1).unwrap();
        let tuples: Vec<(u64, u64)> = fam.iter().map(|p| (p.t(), p.b())).collect();
        assert_eq!(tuples, [(2, 1), (3, 2), (4, 3)]);
        assert_eq!(mans3_family(5, 2).unwrap().len(), 6);
        assert!(mans3_family(2, 1).unwrap().is_empty());
    }

    #[test]
    fn recursive_check() {
        assert!(is_mans_recursive(&gens(&[13, 27, 55, 96])).unwrap());
        assert!(is_mans_recursive(&gens(&[5, 6, 13])).unwrap());
        assert!(!is_mans_recursive(&gens(&[5, 6, 14])).unwrap());
        assert!(!is_mans(&gens(&[5, 6, 14])).unwrap().is_mans);
        assert!(is_mans_recursive(&Generators::naturals()).unwrap());
        assert!(!is_mans_recursive(&gens(&[4, 6, 7])).unwrap());
    }

    #[test]
    fn incremental_apery() {
        let s3 = gens(&[13, 27, 55]);
        let ap3 = apery_set(&s3, 13).unwrap();
        assert_eq!(
            extend_apery(&s3, &ap3, 96).unwrap().values(),
            &[0, 27, 54, 55, 82, 96, 110, 137, 151, 165, 192, 206, 220]
        );

        let s2 = gens(&[5, 6]);
        let ap2 = apery_set(&s2, 5).unwrap();
        assert_eq!(ap2.values(), &[0, 6, 12, 18, 24]);
        assert_eq!(
            extend_apery(&s2, &ap2, 13).unwrap().values(),
            &[0, 6, 12, 13, 19]
        );

        let s = gens(&[5, 6, 13]);
        let ap = apery_set(&s, 5).unwrap();
        let extended = extend_apery(&s, &ap, 14).unwrap();
        assert_eq!(extended.values(), &[0, 6, 12, 13, 14]);
        assert_eq!(extended, apery_set(&gens(&[5, 6, 13, 14]), 5).unwrap());

        assert_eq!(
            extend_apery(&s2, &ap2, 14),
            Err(Error::NotSuitablyMonotone { candidate: 14 })
        );
        assert_eq!(extend_apery(&s2, &ap3, 7), Err(Error::AperyMismatch));
    }
}
