// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use thiserror::Error;

use crate::Chirality;

/// Errors raised by the walk, entropy and limit evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum WalkError {
    #[error("matrix is not unitary: {what} residual {residual:e}")]
    NonUnitary { what: &'static str, residual: f64 },

    #[error("{what} = {value} is out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("coin is degenerate: vanishing factor {factor} (|abcd| = {abcd:e})")]
    DegenerateCoin { factor: String, abcd: f64 },

    #[error("outside the domain of the formula: {0}")]
    OutOfDomain(String),

    #[error("{what} = {requested} exceeds the configured cap {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("numerically invalid result: {0}")]
    NumericallyInvalid(String),

    #[error("quadrature did not converge with {nodes} nodes (last change {residual:e})")]
    NoConvergence { nodes: usize, residual: f64 },

    #[error("the {0:?} component has zero norm")]
    ZeroComponent(Chirality),
}

pub type Result<T, E = WalkError> = std::result::Result<T, E>;
