//! Criterion benchmarks for the invariant engine. See `benches/engine.rs`.
