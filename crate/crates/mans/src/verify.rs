//! Oracle-versus-formula sweeps driven by `mans verify`.

use std::fmt;

use mans_core::oracle::{oracle_enumerate_ma, oracle_gaps, oracle_membership, oracle_pf};
use mans_core::{
    apery_set, build_tree, child_count, children, extend_apery, mans3_apery, mans3_family,
    mans3_frobenius, mans3_from_params, mans3_genus, mans3_pseudo_frobenius, Generators,
};
use serde::Serialize;

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Closed-form Apery set, Frobenius number, genus and PF for e = 3
    E3Formulas,
    /// Tree of MA(m, am+1) against exhaustive enumeration
    Tree,
    /// Closed-form pseudo-Frobenius numbers for e = 3
    Pf,
    /// Incremental Apery update along every tree edge
    AperyExtend,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::E3Formulas => "e3-formulas",
            Suite::Tree => "tree",
            Suite::Pf => "pf",
            Suite::AperyExtend => "apery-extend",
        }
    }

    /// `(max_m, max_a)` used when the flags are omitted.
    pub fn default_bounds(self) -> (u64, u64) {
        match self {
            Suite::E3Formulas => (10, 3),
            Suite::Tree => (6, 1),
            Suite::Pf => (8, 2),
            Suite::AperyExtend => (6, 1),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub max_m: u64,
    pub max_a: u64,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_counterexample: Option<String>,
}

impl VerifyReport {
    fn new(suite: Suite, max_m: u64, max_a: u64) -> Self {
        VerifyReport {
            suite,
            max_m,
            max_a,
            checked: 0,
            passed: 0,
            failed: 0,
            first_counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(describe());
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Least element of each residue class modulo `n`, read off a brute-force
/// membership table.
pub fn brute_force_apery(gens: &[u64], n: u64) -> Result<Vec<u64>> {
    let max = gens.iter().copied().max().unwrap_or(1);
    let mut bound = max.saturating_mul(n).max(max);
    loop {
        let table = oracle_membership(gens, bound)?;
        let found: Option<Vec<u64>> = (0..n)
            .map(|i| (i..=bound).step_by(n as usize).find(|&x| table.get(x)))
            .collect();
        if let Some(w) = found {
            return Ok(w);
        }
        bound *= 2;
    }
}

pub fn run_suite(suite: Suite, max_m: u64, max_a: u64) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(suite, max_m, max_a);
    match suite {
        Suite::E3Formulas => e3_formulas(&mut report)?,
        Suite::Pf => pf(&mut report)?,
        Suite::Tree => tree(&mut report)?,
        Suite::AperyExtend => apery_extend(&mut report)?,
    }
    Ok(report)
}

fn e3_formulas(report: &mut VerifyReport) -> Result<()> {
    for m in 3..=report.max_m {
        for a in 1..=report.max_a {
            for p in mans3_family(m, a)? {
                let s = mans3_from_params(&p);
                let gaps = oracle_gaps(s.as_slice())?;
                let apery_ok = mans3_apery(&p)?.values() == brute_force_apery(s.as_slice(), m)?;
                let frob_ok = mans3_frobenius(&p)? == gaps.last().map_or(-1, |&g| g as i64);
                let genus_ok = mans3_genus(&p)? == gaps.len() as u64;
                let pf_ok = mans3_pseudo_frobenius(&p)? == oracle_pf(s.as_slice())?;
                report.record(apery_ok && frob_ok && genus_ok && pf_ok, || {
                    format!("{s}: apery={apery_ok} frobenius={frob_ok} genus={genus_ok} pf={pf_ok}")
                });
            }
        }
    }
    Ok(())
}

fn pf(report: &mut VerifyReport) -> Result<()> {
    for m in 3..=report.max_m {
        for a in 1..=report.max_a {
            for p in mans3_family(m, a)? {
                let s = mans3_from_params(&p);
                let closed = mans3_pseudo_frobenius(&p)?;
                let brute = oracle_pf(s.as_slice())?;
                report.record(closed == brute, || {
                    format!("{s}: closed form {closed:?}, oracle {brute:?}")
                });
            }
        }
    }
    Ok(())
}

fn families(report: &VerifyReport) -> Vec<(u64, u64)> {
    (2..=report.max_m)
        .flat_map(|m| (1..=report.max_a).map(move |a| (m, a * m + 1)))
        .collect()
}

fn tree(report: &mut VerifyReport) -> Result<()> {
    for (m, r) in families(report) {
        let tree = build_tree(m, r)?;
        let mut built: Vec<Generators> = tree.nodes().iter().map(|n| n.semigroup.clone()).collect();
        built.sort();
        let brute = oracle_enumerate_ma(m, r)?;
        let same = built == brute;
        report.record(same, || {
            format!(
                "MA({m},{r}): tree has {} vertices, oracle {}",
                built.len(),
                brute.len()
            )
        });
        for node in tree.nodes() {
            let s = &node.semigroup;
            let direct = children(s)?.len() as u64;
            let formula = child_count(s)?;
            report.record(direct == formula, || {
                format!("{s}: {direct} children, formula gives {formula}")
            });
        }
    }
    Ok(())
}

fn apery_extend(report: &mut VerifyReport) -> Result<()> {
    for (m, r) in families(report) {
        let tree = build_tree(m, r)?;
        for (p, c) in tree.edges() {
            let parent = &tree.node(p).semigroup;
            let child = &tree.node(c).semigroup;
            let incremental = extend_apery(parent, &apery_set(parent, m)?, child.max_generator())?;
            let direct = apery_set(child, m)?;
            report.record(incremental == direct, || {
                format!(
                    "{parent} + {}: incremental {:?}, direct {:?}",
                    child.max_generator(),
                    incremental.values(),
                    direct.values()
                )
            });
        }
    }
    Ok(())
}
