//! Shared fixtures for the criterion benchmarks.

use std::sync::Arc;

use tcw_core::{CyclicCode, FieldSpec, WeightPair};

pub fn field(q: u32, m: u32) -> Arc<FieldSpec> {
    Arc::new(FieldSpec::new(q, m).expect("tabulated field"))
}

pub fn family(q: u32, m: u32, i1: u8, i2: u8) -> CyclicCode {
    CyclicCode::from_pair(field(q, m), WeightPair::new(i1, i2).unwrap()).unwrap()
}
