//! Benchmark-only crate; see `benches/pipeline.rs`.
//!
//! Kept as a separate workspace member so heavy criterion builds never
//! slow down `cargo test` on the core and CLI crates.
