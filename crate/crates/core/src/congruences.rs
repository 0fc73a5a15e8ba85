//! Congruences of Catalan and k-angulation numbers, checked by sweeping.
//!
//! - `ODD_CHARACTERIZATION`: `C_n` is odd iff `n = 2^a - 1`.
//! - `MOD4_CLASSIFICATION`: `C_n mod 4` is 1 when `n + 1` has binary weight 1,
//!   2 when it has weight 2, and 0 otherwise.
//! - `MODP_CATALAN`: for a prime `p >= 5`, `n ≡ -2 (mod p)` implies `p | C_n`.
//! - `MODP_KANGULATION`: for a prime `p >= 3` with `p ∤ k`, `p | n` implies
//!   `p | f_{n,k}`.
//!
//! The last two are one-way implications; indices they say nothing about are
//! skipped.

use serde::Serialize;

use crate::error::ArgumentError;
use crate::numbers::{admits_kangulation, catalan_mod, kangulation_count, reduce};

/// `C_n mod 2` as predicted by the odd-characterization theorem.
pub fn predict_mod2(n: u64) -> u64 {
    u64::from((n + 1).is_power_of_two())
}

/// `C_n mod 4` as predicted by the binary weight of `n + 1`.
pub fn predict_mod4(n: u64) -> u64 {
    match (n + 1).count_ones() {
        1 => 1,
        2 => 2,
        _ => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremId {
    OddCharacterization,
    Mod4Classification,
    ModpCatalan,
    ModpKangulation,
}

/// A theorem together with the parameters of the sweep that checks it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CongruenceCheck {
    OddCharacterization { max_n: u64 },
    Mod4Classification { max_n: u64 },
    ModpCatalan { p: u64, max_n: u64 },
    ModpKangulation { p: u64, k: u64, max_n: u64 },
}

impl CongruenceCheck {
    pub fn theorem(&self) -> TheoremId {
        match self {
            CongruenceCheck::OddCharacterization { .. } => TheoremId::OddCharacterization,
            CongruenceCheck::Mod4Classification { .. } => TheoremId::Mod4Classification,
            CongruenceCheck::ModpCatalan { .. } => TheoremId::ModpCatalan,
            CongruenceCheck::ModpKangulation { .. } => TheoremId::ModpKangulation,
        }
    }

    fn range(&self) -> SweepRange {
        match *self {
            CongruenceCheck::OddCharacterization { max_n }
            | CongruenceCheck::Mod4Classification { max_n } => SweepRange {
                max_n,
                p: None,
                k: None,
            },
            CongruenceCheck::ModpCatalan { p, max_n } => SweepRange {
                max_n,
                p: Some(p),
                k: None,
            },
            CongruenceCheck::ModpKangulation { p, k, max_n } => SweepRange {
                max_n,
                p: Some(p),
                k: Some(k),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRange {
    pub max_n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
}

/// First index where the observed residue differs from the prediction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    pub modulus: u64,
    pub expected: u64,
    pub actual: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub range: SweepRange,
    /// Indices the theorem constrains within the range.
    #[serde(skip)]
    pub checked: Vec<u64>,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Combines reports of the same theorem over disjoint index shards,
    /// keeping the smallest counterexample.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        assert_eq!(self.theorem, other.theorem, "cannot merge different theorems");
        self.range.max_n = self.range.max_n.max(other.range.max_n);
        self.checked.extend(other.checked);
        self.checked.sort_unstable();
        self.counterexample = match (self.counterexample, other.counterexample) {
            (Some(a), Some(b)) => Some(if a.n <= b.n { a } else { b }),
            (a, b) => a.or(b),
        };
        self.passed = self.counterexample.is_none();
        self
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn validate(check: &CongruenceCheck) -> Result<(), ArgumentError> {
    match *check {
        CongruenceCheck::ModpCatalan { p, .. } => {
            if !is_prime(p) {
                return Err(ArgumentError::NotPrime { p });
            }
            if p < 5 {
                return Err(ArgumentError::PrimeTooSmall { p, min: 5 });
            }
        }
        CongruenceCheck::ModpKangulation { p, k, .. } => {
            if k < 3 {
                return Err(ArgumentError::CellSize { k });
            }
            if !is_prime(p) {
                return Err(ArgumentError::NotPrime { p });
            }
            if p < 3 {
                return Err(ArgumentError::PrimeTooSmall { p, min: 3 });
            }
            if k % p == 0 {
                return Err(ArgumentError::PrimeDividesK { p, k });
            }
        }
        _ => {}
    }
    Ok(())
}

/// Sweeps `0..=max_n`, comparing observed residues with the theorem.
pub fn verify_congruence(check: CongruenceCheck) -> Result<VerificationReport, ArgumentError> {
    validate(&check)?;
    let mut checked = Vec::new();
    let mut counterexample = None;
    let mut record = |n: u64, k: Option<u64>, modulus: u64, expected: u64, actual: u64| {
        checked.push(n);
        if expected != actual && counterexample.is_none() {
            counterexample = Some(Counterexample {
                n,
                k,
                modulus,
                expected,
                actual,
            });
        }
    };
    match check {
        CongruenceCheck::OddCharacterization { max_n } => {
            for n in 0..=max_n {
                record(n, None, 2, predict_mod2(n), catalan_mod(n, 2));
            }
        }
        CongruenceCheck::Mod4Classification { max_n } => {
            for n in 0..=max_n {
                record(n, None, 4, predict_mod4(n), catalan_mod(n, 4));
            }
        }
        CongruenceCheck::ModpCatalan { p, max_n } => {
            for n in (p - 2..=max_n).step_by(p as usize) {
                record(n, None, p, 0, catalan_mod(n, p));
            }
        }
        CongruenceCheck::ModpKangulation { p, k, max_n } => {
            for n in (p..=max_n).step_by(p as usize) {
                if admits_kangulation(n, k) {
                    record(n, Some(k), p, 0, reduce(&kangulation_count(n as i64, k), p));
                }
            }
        }
    }
    Ok(VerificationReport {
        theorem: check.theorem(),
        range: check.range(),
        checked,
        passed: counterexample.is_none(),
        counterexample,
    })
}
