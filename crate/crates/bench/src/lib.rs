//! Criterion benchmarks for `genocchi-core`; see `benches/`.
