use thiserror::Error;

use crate::polygon::Diagonal;

/// Invalid polygon, diagonal, or cell input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("edge {x}-{y} is not a valid edge of a {n}-gon (need 0 <= x < y < n)")]
    BadEdge { x: usize, y: usize, n: usize },
    #[error("{x}-{y} is not a diagonal of a {n}-gon")]
    NotADiagonal { x: usize, y: usize, n: usize },
    #[error("malformed diagonal {0:?}, expected \"x-y\"")]
    Parse(String),
    #[error("diagonal {0} listed twice")]
    Duplicate(Diagonal),
    #[error("diagonals {0} and {1} cross")]
    Crossing(Diagonal, Diagonal),
    #[error("a {n}-gon cannot be cut into {k}-gons")]
    BadSize { n: usize, k: usize },
    #[error("cell {vertices:?} is not a {k}-gon")]
    WrongCellSize { vertices: Vec<usize>, k: usize },
    #[error("side lengths {lengths:?} do not describe a central cell of a {n}-gon")]
    BadPlacement { lengths: Vec<usize>, n: usize },
}

/// Invalid arguments to a recursion or congruence check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArgumentError {
    #[error("the recursion needs k >= 3 and n > k with n = 2 (mod k-2); got n = {n}, k = {k}")]
    RecursionDomain { n: u64, k: u64 },
    #[error("{p} is not a prime")]
    NotPrime { p: u64 },
    #[error("this theorem requires p >= {min}, got {p}")]
    PrimeTooSmall { p: u64, min: u64 },
    #[error("p = {p} divides k = {k}")]
    PrimeDividesK { p: u64, k: u64 },
    #[error("k must be at least 3, got {k}")]
    CellSize { k: u64 },
}
