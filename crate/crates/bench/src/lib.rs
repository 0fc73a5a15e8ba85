//! Criterion benchmarks for `polycenter`; see `benches/`.
