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

//! Asymptotic entanglement and Shannon constants across the real coin
//! family U(theta), evaluated in parallel.

use qwalk::cli::{cmd_sweep, Format, ThetaGrid};
use qwalk::coin::QubitState;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid: ThetaGrid = "0.05:1.5207963267948966:25".parse()?;
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let table = cmd_sweep(&grid, &QubitState::symmetric(), Some(512), threads)?;
    print!("{}", String::from_utf8(table.to_bytes(Format::Csv))?);
    Ok(())
}
