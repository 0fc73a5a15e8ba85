//! Labeled convex-polygon dissections.
//!
//! Vertices of an n-gon are labeled `0..n` in cyclic order. Everything here is
//! combinatorial: the center of the regular embedding lies inside a cell iff
//! every arc between consecutive cell vertices is shorter than `n/2`, and on an
//! edge iff that edge spans exactly `n/2`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::ModelError;
use crate::numbers::BigCount;

/// Cyclic length of the edge `xy` of an n-gon: `min(y - x, n + x - y)`.
pub fn cyclic_length(x: usize, y: usize, n: usize) -> Result<usize, ModelError> {
    if x >= y || y >= n {
        return Err(ModelError::BadEdge { x, y, n });
    }
    Ok((y - x).min(n + x - y))
}

/// A diagonal in normal form `x < y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    pub x: usize,
    pub y: usize,
}

impl Diagonal {
    /// Normalizes the endpoint order and rejects sides and out-of-range labels.
    pub fn new(a: usize, b: usize, n: usize) -> Result<Self, ModelError> {
        let (x, y) = (a.min(b), a.max(b));
        if y >= n || y - x < 2 || (x == 0 && y == n - 1) {
            return Err(ModelError::NotADiagonal { x: a, y: b, n });
        }
        Ok(Diagonal { x, y })
    }

    pub fn crosses(&self, other: &Diagonal) -> bool {
        let (a, b, c, d) = (self.x, self.y, other.x, other.y);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    pub fn cyclic_length(&self, n: usize) -> usize {
        (self.y - self.x).min(n + self.x - self.y)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.x, self.y)
    }
}

/// Parses `"x-y,x-y,..."`. Whitespace around items is ignored; an empty string
/// is the empty list. Endpoints are validated later against a polygon size.
pub fn parse_diagonal_list(s: &str) -> Result<Vec<(usize, usize)>, ModelError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|item| {
            let item = item.trim();
            let bad = || ModelError::Parse(item.to_string());
            let (a, b) = item.split_once('-').ok_or_else(bad)?;
            let a = usize::from_str(a.trim()).map_err(|_| bad())?;
            let b = usize::from_str(b.trim()).map_err(|_| bad())?;
            Ok((a, b))
        })
        .collect()
}

/// Formats diagonals in the `"x-y,..."` notation.
pub fn format_diagonal_list<'a>(diagonals: impl IntoIterator<Item = &'a Diagonal>) -> String {
    diagonals
        .into_iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// A cell of a dissection, vertices in increasing label order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    pub vertices: Vec<usize>,
}

impl Face {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        Face { vertices }
    }

    /// Gaps between cyclically consecutive vertices; they sum to `n`.
    pub fn arcs(&self, n: usize) -> Vec<usize> {
        let v = &self.vertices;
        (0..v.len())
            .map(|i| {
                let next = v[(i + 1) % v.len()];
                (next + n - v[i]) % n
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// An n-gon cut into k-gons by pairwise non-crossing diagonals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dissection {
    n: usize,
    k: usize,
    diagonals: BTreeSet<Diagonal>,
}

impl Dissection {
    /// Validates labels, crossings, the size constraint `n ≡ 2 (mod k-2)`, and
    /// that every cell is a k-gon.
    pub fn new(
        n: usize,
        k: usize,
        diagonals: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ModelError> {
        if k < 3 || n < k || !(n - 2).is_multiple_of(k - 2) {
            return Err(ModelError::BadSize { n, k });
        }
        let mut set = BTreeSet::new();
        for (a, b) in diagonals {
            let d = Diagonal::new(a, b, n)?;
            if !set.insert(d) {
                return Err(ModelError::Duplicate(d));
            }
        }
        let list: Vec<_> = set.iter().collect();
        for (i, a) in list.iter().enumerate() {
            if let Some(b) = list[i + 1..].iter().find(|b| a.crosses(b)) {
                return Err(ModelError::Crossing(**a, **b));
            }
        }
        let d = Dissection {
            n,
            k,
            diagonals: set,
        };
        if let Some(face) = d.faces().into_iter().find(|f| f.len() != k) {
            return Err(ModelError::WrongCellSize {
                vertices: face.vertices,
                k,
            });
        }
        Ok(d)
    }

    pub fn triangulation(
        n: usize,
        diagonals: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ModelError> {
        Self::new(n, 3, diagonals)
    }

    /// Trusted constructor for generators that produce valid dissections.
    pub(crate) fn from_parts(n: usize, k: usize, diagonals: BTreeSet<Diagonal>) -> Self {
        Dissection { n, k, diagonals }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn diagonals(&self) -> &BTreeSet<Diagonal> {
        &self.diagonals
    }

    /// All cells, sorted by vertex list.
    pub fn faces(&self) -> Vec<Face> {
        // Cutting along diagonals in order of increasing span peels off the
        // innermost cell each time: nested diagonals have smaller spans and
        // have already removed their interior vertices.
        let mut by_span: Vec<&Diagonal> = self.diagonals.iter().collect();
        by_span.sort_by_key(|d| (d.y - d.x, d.x));
        let mut alive = vec![true; self.n];
        let mut faces = Vec::with_capacity(by_span.len() + 1);
        for d in by_span {
            let mut cell = vec![d.x];
            for (v, live) in alive.iter_mut().enumerate().take(d.y).skip(d.x + 1) {
                if *live {
                    cell.push(v);
                    *live = false;
                }
            }
            cell.push(d.y);
            faces.push(Face { vertices: cell });
        }
        faces.push(Face {
            vertices: (0..self.n).filter(|&v| alive[v]).collect(),
        });
        faces.sort();
        faces
    }

    /// The diameter or cell containing the center of the regular embedding.
    pub fn central_component(&self) -> CentralComponent {
        let n = self.n;
        if n.is_multiple_of(2) {
            let mut diameters = self.diagonals.iter().filter(|d| 2 * (d.y - d.x) == n);
            if let Some(&d) = diameters.next() {
                assert!(diameters.next().is_none(), "two diameters cannot coexist");
                return CentralComponent::Diameter(d);
            }
        }
        let mut central = self
            .faces()
            .into_iter()
            .filter(|f| f.arcs(n).iter().all(|&a| 2 * a < n));
        let face = central.next().expect("some cell contains the center");
        assert!(central.next().is_none(), "central cell is unique");
        CentralComponent::Cell(face)
    }
}

/// The diameter or cell that contains the center of the polygon.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CentralComponent {
    Diameter(Diagonal),
    Cell(Face),
}

impl CentralComponent {
    pub fn contains_vertex(&self, v: usize) -> bool {
        match self {
            CentralComponent::Diameter(d) => d.x == v || d.y == v,
            CentralComponent::Cell(f) => f.contains(v),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            CentralComponent::Diameter(_) => 2,
            CentralComponent::Cell(f) => f.len(),
        }
    }

    pub fn shape_key(&self, n: usize) -> ShapeKey {
        match self {
            CentralComponent::Diameter(_) => ShapeKey::Diameter,
            CentralComponent::Cell(f) => {
                let mut arcs = f.arcs(n);
                arcs.sort_unstable();
                ShapeKey::Cell(arcs)
            }
        }
    }
}

/// Census key of a central component. `Diameter` orders before every cell
/// shape; cell shapes order lexicographically by sorted side lengths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShapeKey {
    Diameter,
    Cell(Vec<usize>),
}

impl fmt::Display for ShapeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeKey::Diameter => f.write_str("diameter"),
            ShapeKey::Cell(l) => {
                let parts: Vec<_> = l.iter().map(ToString::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// Number of ways to inscribe a cell with the given cyclic side lengths in an
/// n-gon, i.e. the number of vertex subsets whose gap multiset is `lengths`.
///
/// Each subset corresponds to `k` (start vertex, gap sequence) pairs, so the
/// count is `n * P / k` with `P` the number of distinct orderings of the
/// multiset.
pub fn placement_count(lengths: &[usize], n: usize) -> Result<BigCount, ModelError> {
    let k = lengths.len();
    let sum: usize = lengths.iter().sum();
    if k < 3 || sum != n || lengths.iter().any(|&l| l == 0 || 2 * l >= n) {
        return Err(ModelError::BadPlacement {
            lengths: lengths.to_vec(),
            n,
        });
    }
    let mut sorted = lengths.to_vec();
    sorted.sort_unstable();
    let mut arrangements = factorial(k);
    for run in sorted.chunk_by(|a, b| a == b) {
        arrangements /= factorial(run.len());
    }
    let (q, r) = (arrangements * n).div_rem(&BigUint::from(k));
    assert!(r == BigUint::ZERO, "placement count must be integral");
    Ok(q)
}

fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}
