//! Benchmark-only crate; see `benches/routes.rs` for the measurements.
