// Copyright 2026 The finphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "finphase/types.hpp"

namespace finphase {

Matrix kron(const Matrix& a, const Matrix& b);

Matrix kron_all(const std::vector<Matrix>& factors);

// Trace over the first (keep_second) or second subsystem of a dA x dB bipartite matrix.
Matrix partial_trace_first(const Matrix& rho, long long dA, long long dB);
Matrix partial_trace_second(const Matrix& rho, long long dA, long long dB);

// Transposes the second tensor factor.
Matrix partial_transpose_second(const Matrix& rho, long long dA, long long dB);

double hermiticity_error(const Matrix& a);

void require_square(const Matrix& a, const char* what);

}  // namespace finphase
