//! Exact closed forms: binomials, Catalan, Fuss-Catalan, quadrangulation and
//! k-angulation counts, ballot numbers, and Catalan residues.
//!
//! Every function is total. Indices outside a sequence's natural domain
//! (negative, or non-integral when given as a fraction) map to zero.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

/// An index that may be a non-integral rational, such as `n/2` or `(i-1)/2`.
///
/// Sequences evaluated at a non-integral index are zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Index {
    num: i64,
    den: i64,
}

impl Index {
    /// `num / den`. Panics if `den` is zero.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        if den < 0 {
            Index { num: -num, den: -den }
        } else {
            Index { num, den }
        }
    }

    pub fn int(value: i64) -> Self {
        Index { num: value, den: 1 }
    }

    /// The index as an integer, if it is one.
    pub fn integral(self) -> Option<i64> {
        (self.num % self.den == 0).then(|| self.num / self.den)
    }
}

impl From<i64> for Index {
    fn from(value: i64) -> Self {
        Index::int(value)
    }
}

/// Divides `num` by `den`, asserting the division is exact.
fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division in closed form");
    q
}

/// `n` choose `k`; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigCount {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    // acc = C(n-k+i, i) after step i; each intermediate division is exact.
    for i in 1..=k {
        acc *= n - k + i;
        acc = exact_div(acc, &BigUint::from(i));
    }
    acc
}

/// The Catalan number `C_n`, zero for negative `n`.
pub fn catalan(n: i64) -> BigCount {
    if n < 0 {
        return BigUint::zero();
    }
    let n = n as u64;
    exact_div(binomial(2 * n, n as i64), &BigUint::from(n + 1))
}

/// `C_x` with the convention that non-integral `x` gives zero.
pub fn catalan_at(x: Index) -> BigCount {
    x.integral().map_or_else(BigUint::zero, catalan)
}

/// First `len` Catalan numbers, built by the ratio recurrence.
pub fn catalan_table(len: usize) -> Vec<BigCount> {
    let mut out = Vec::with_capacity(len);
    let mut c = BigUint::one();
    for n in 0..len as u64 {
        out.push(c.clone());
        c *= 2 * (2 * n + 1);
        c = exact_div(c, &BigUint::from(n + 2));
    }
    out
}

/// Fuss-Catalan number `C_{n,k} = binomial(kn, n) / ((k-1)n + 1)`.
///
/// Counts the (k+1)-angulations of a ((k-1)n+2)-gon.
pub fn fuss_catalan(n: u64, k: u64) -> BigCount {
    assert!(k >= 2, "fuss_catalan requires k >= 2");
    exact_div(binomial(k * n, n as i64), &BigUint::from((k - 1) * n + 1))
}

/// `Q_n`, the number of quadrangulations of a (2n+2)-gon.
pub fn quadrangulation_count(n: i64) -> BigCount {
    if n < 0 {
        return BigUint::zero();
    }
    fuss_catalan(n as u64, 3)
}

/// `Q_x` with non-integral or negative `x` giving zero.
pub fn quadrangulation_count_at(x: Index) -> BigCount {
    x.integral().map_or_else(BigUint::zero, quadrangulation_count)
}

/// `f_{n,k}`, the number of k-angulations of an n-gon.
///
/// Nonzero only when `n = (k-2)m + 2` for some `m >= 0`; the 2-gon (a single
/// edge) has exactly one, empty, k-angulation.
pub fn kangulation_count(n: i64, k: u64) -> BigCount {
    assert!(k >= 3, "kangulation_count requires k >= 3");
    if n < 2 {
        return BigUint::zero();
    }
    let (m, r) = (n as u64 - 2).div_rem(&(k - 2));
    if r != 0 {
        return BigUint::zero();
    }
    fuss_catalan(m, k - 1)
}

/// Whether an n-gon admits k-angulations at all.
pub fn admits_kangulation(n: u64, k: u64) -> bool {
    k >= 3 && n >= 2 && (n - 2).is_multiple_of(k - 2)
}

/// Ballot number `T(n,k) = (n-2k+1)/(n-k+1) * binomial(n,k)`.
///
/// Zero when `k < 0` or `n - 2k + 1 <= 0`.
pub fn ballot_t(n: u64, k: i64) -> BigCount {
    if k < 0 || 2 * k > n as i64 {
        return BigUint::zero();
    }
    let k_u = k as u64;
    let numer = n - 2 * k_u + 1;
    let denom = n - k_u + 1;
    exact_div(binomial(n, k) * numer, &BigUint::from(denom))
}

/// Catalan residues `C_0 .. C_max` modulo `m`, built by the convolution
/// `C_{n+1} = sum C_i C_{n-i}` in `O(max^2)` residue operations.
#[derive(Debug, Clone)]
pub struct CatalanModTable {
    modulus: u64,
    residues: Vec<u64>,
}

impl CatalanModTable {
    pub fn new(max: u64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let mut table = CatalanModTable {
            modulus,
            residues: vec![1 % modulus],
        };
        table.extend_to(max);
        table
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn max(&self) -> u64 {
        self.residues.len() as u64 - 1
    }

    /// Grows the table so that it covers index `max`.
    pub fn extend_to(&mut self, max: u64) {
        let m = self.modulus as u128;
        while (self.residues.len() as u64) <= max {
            let n = self.residues.len() - 1;
            let mut acc: u128 = 0;
            for i in 0..=n {
                acc += self.residues[i] as u128 * self.residues[n - i] as u128 % m;
                if acc >= m {
                    acc -= m;
                }
            }
            self.residues.push(acc as u64);
        }
    }

    /// `C_n mod m`. Panics if `n` lies beyond the table.
    pub fn get(&self, n: u64) -> u64 {
        self.residues[n as usize]
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }
}

fn shared_tables() -> &'static Mutex<HashMap<u64, CatalanModTable>> {
    static TABLES: OnceLock<Mutex<HashMap<u64, CatalanModTable>>> = OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `C_n mod m`.
///
/// Backed by one convolution table per modulus, shared across calls and
/// threads, so a sweep over `0..=N` costs `O(N^2)` residue operations in total.
pub fn catalan_mod(n: u64, m: u64) -> u64 {
    assert!(m >= 2, "modulus must be at least 2");
    let mut tables = shared_tables().lock().unwrap_or_else(|e| e.into_inner());
    let table = tables
        .entry(m)
        .or_insert_with(|| CatalanModTable::new(0, m));
    table.extend_to(n);
    table.get(n)
}

/// `x mod m` for a big count.
pub fn reduce(x: &BigCount, m: u64) -> u64 {
    let r = x % m;
    r.iter_u64_digits().next().unwrap_or(0)
}
