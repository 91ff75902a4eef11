//! Benchmarks for the modvir engine; see `benches/engine.rs`.
