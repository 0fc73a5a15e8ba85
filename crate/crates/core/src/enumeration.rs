//! Exhaustive generation of triangulations and k-angulations.
//!
//! This is the ground truth that every closed form is checked against, so it
//! never consults the counting formulas. Generation fixes the base side
//! `0-(n-1)`, chooses the cell resting on it (for triangulations: its apex,
//! ascending), and recurses into the regions cut off by that cell's other
//! sides. Output is lazy.

use std::collections::{BTreeMap, BTreeSet};
use std::thread;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::numbers::BigCount;
use crate::polygon::{Diagonal, Dissection, ShapeKey};

type DiagonalStream = Box<dyn Iterator<Item = Vec<Diagonal>> + Send>;

/// Every way to pick the cell on base side `lo-hi`: increasing vertex lists
/// from `lo` to `hi` with `k` entries, such that every gap region can itself
/// be k-angulated (a gap of one is a side).
fn base_cells(lo: usize, hi: usize, k: usize) -> Vec<Vec<usize>> {
    fn fill(
        cur: &mut Vec<usize>,
        hi: usize,
        k: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *cur.last().unwrap();
        if cur.len() == k - 1 {
            if region_ok(hi - last, k) {
                let mut cell = cur.clone();
                cell.push(hi);
                out.push(cell);
            }
            return;
        }
        let remaining = k - 1 - cur.len();
        for v in last + 1..=hi - remaining {
            if region_ok(v - last, k) {
                cur.push(v);
                fill(cur, hi, k, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    fill(&mut vec![lo], hi, k, &mut out);
    out
}

/// A region bounded by a chord spanning `gap` sides has `gap + 1` vertices.
fn region_ok(gap: usize, k: usize) -> bool {
    (gap - 1).is_multiple_of(k - 2)
}

/// Diagonal sets of all k-angulations of the region `lo..=hi`, whose closing
/// edge `lo-hi` is supplied by the caller.
fn region_stream(lo: usize, hi: usize, k: usize) -> DiagonalStream {
    if hi - lo == 1 {
        return Box::new(std::iter::once(Vec::new()));
    }
    Box::new(
        base_cells(lo, hi, k)
            .into_iter()
            .flat_map(move |cell| cell_stream(cell, k)),
    )
}

/// All completions once the cell `cell` (first and last entries on the base
/// edge) has been placed.
fn cell_stream(cell: Vec<usize>, k: usize) -> DiagonalStream {
    let own: Vec<Diagonal> = cell
        .windows(2)
        .filter(|w| w[1] - w[0] > 1)
        .map(|w| Diagonal { x: w[0], y: w[1] })
        .collect();
    let mut acc: DiagonalStream = Box::new(std::iter::once(own));
    for w in cell.windows(2) {
        let (a, b) = (w[0], w[1]);
        acc = Box::new(acc.flat_map(move |prefix| {
            region_stream(a, b, k).map(move |sub| {
                let mut all = prefix.clone();
                all.extend(sub);
                all
            })
        }));
    }
    acc
}

/// Lazy stream of k-angulations.
pub struct Dissections {
    n: usize,
    k: usize,
    inner: DiagonalStream,
}

impl Iterator for Dissections {
    type Item = Dissection;

    fn next(&mut self) -> Option<Dissection> {
        let diagonals = self.inner.next()?;
        let set: BTreeSet<Diagonal> = diagonals.into_iter().collect();
        Some(Dissection::from_parts(self.n, self.k, set))
    }
}

fn valid_size(n: usize, k: usize) -> bool {
    k >= 3 && n >= k && (n - 2).is_multiple_of(k - 2)
}

/// Every k-angulation of an n-gon exactly once; empty when none exist.
pub fn enumerate_kangulations(n: usize, k: usize) -> Dissections {
    let inner: DiagonalStream = if valid_size(n, k) {
        region_stream(0, n - 1, k)
    } else {
        Box::new(std::iter::empty())
    };
    Dissections { n, k, inner }
}

/// Every triangulation of an n-gon exactly once.
pub fn enumerate_triangulations(n: usize) -> Dissections {
    assert!(n >= 3, "a polygon has at least three vertices");
    enumerate_kangulations(n, 3)
}

/// The k-angulations split by the cell on the base side, one stream per
/// choice. Shards are disjoint and together cover every k-angulation.
pub fn kangulation_shards(n: usize, k: usize) -> Vec<Dissections> {
    if !valid_size(n, k) {
        return Vec::new();
    }
    base_cells(0, n - 1, k)
        .into_iter()
        .map(|cell| Dissections {
            n,
            k,
            inner: cell_stream(cell, k),
        })
        .collect()
}

/// Dissection count for one central shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub key: ShapeKey,
    pub count: BigCount,
}

/// Central-component census of all k-angulations of an n-gon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub k: usize,
    /// Diameter first, then cell shapes in lexicographic order.
    pub entries: Vec<CensusEntry>,
}

impl Census {
    pub fn total(&self) -> BigCount {
        self.entries.iter().map(|e| &e.count).sum()
    }

    pub fn get(&self, key: &ShapeKey) -> BigCount {
        self.entries
            .iter()
            .find(|e| &e.key == key)
            .map_or_else(BigUint::zero, |e| e.count.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("census serializes")
    }
}

impl Serialize for ShapeKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ShapeKey::Diameter => s.serialize_str("diameter"),
            ShapeKey::Cell(lengths) => {
                let mut seq = s.serialize_seq(Some(lengths.len()))?;
                for l in lengths {
                    seq.serialize_element(l)?;
                }
                seq.end()
            }
        }
    }
}

impl Serialize for CensusEntry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("shape", &self.key)?;
        map.serialize_entry("count", &self.count.to_string())?;
        map.end()
    }
}

impl Serialize for Census {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("k", &self.k)?;
        map.serialize_entry("entries", &self.entries)?;
        map.end()
    }
}

fn tally(stream: Dissections) -> BTreeMap<ShapeKey, u64> {
    let mut counts = BTreeMap::new();
    for d in stream {
        *counts
            .entry(d.central_component().shape_key(d.n()))
            .or_insert(0) += 1;
    }
    counts
}

/// Tallies every k-angulation of an n-gon by the shape of its central
/// component. Work is sharded across threads by the base-side cell.
pub fn central_census(n: usize, k: usize) -> Census {
    let shards = kangulation_shards(n, k);
    let partials: Vec<BTreeMap<ShapeKey, u64>> = thread::scope(|scope| {
        let handles: Vec<_> = shards
            .into_iter()
            .map(|shard| scope.spawn(move || tally(shard)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census shard panicked"))
            .collect()
    });
    let mut merged: BTreeMap<ShapeKey, BigCount> = BTreeMap::new();
    for part in partials {
        for (key, c) in part {
            *merged.entry(key).or_default() += c;
        }
    }
    Census {
        n,
        k,
        entries: merged
            .into_iter()
            .map(|(key, count)| CensusEntry { key, count })
            .collect(),
    }
}

/// Number of triangulations of an n-gon whose central component avoids vertex 0.
pub fn count_vertex0_outside(n: usize) -> BigCount {
    let outside = enumerate_triangulations(n)
        .filter(|d| !d.central_component().contains_vertex(0))
        .count();
    BigUint::from(outside)
}
