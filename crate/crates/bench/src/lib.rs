//! Criterion benchmarks for genent-core; see `benches/`.
