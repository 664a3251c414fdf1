//! Criterion benchmarks for nestdim live in `benches/`.
