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

#include <random>

#include "finphase/index_vector.hpp"
#include "finphase/types.hpp"

namespace finphase {

using Rng = std::mt19937_64;

Vector random_state_vector(long long d, Rng& rng);

Matrix random_pure_state(long long d, Rng& rng);

// G G^dagger / tr(G G^dagger) with complex Gaussian G.
Matrix random_density(long long d, Rng& rng);

Matrix random_hermitian(long long d, Rng& rng);

IndexVector random_index_vector(int p, int n, Rng& rng);

}  // namespace finphase
