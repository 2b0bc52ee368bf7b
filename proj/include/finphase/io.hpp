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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "finphase/dynamics.hpp"
#include "finphase/mub.hpp"
#include "finphase/wigner.hpp"

namespace finphase {

using json = nlohmann::json;

json field_to_json(const GaloisField& field);
GaloisField field_from_json(const json& j);

// Array of rows, each entry [re, im]. Plain numbers are accepted as real entries on input.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// Keys are comma-joined index components, e.g. "0,1,0,0".
json spin_coeffs_to_json(const SpinCoefficients& s, double threshold = 0.0);

// [a0, ..., a_{n-1}] for field labels, "inf" for the vertical class.
json label_to_json(const GaloisField& field, long long alpha);
long long label_from_json(const GaloisField& field, const json& j);

json generator_set_to_json(const GaloisField& field, const GeneratorSet& gs);

json mub_to_json(const PhaseSpace& space, const std::vector<MubBasis>& bases);
json mub_compact_to_json(const PhaseSpace& space);
json mub_report_to_json(const MubReport& rep);

json wigner_to_json(const WignerTable& w);
WignerTable wigner_from_json(const json& j);

json char_to_json(const CharTable& chi);
CharTable char_from_json(const json& j);

// n = 1: p x p grid, rows v1 and columns v0. n = 2: one grid per (x0, y0) slice.
std::string wigner_to_csv(const WignerTable& w);

// Binary-free plain PGM (P2) heatmap with linear min-max scaling to 0..255.
std::string wigner_to_pgm(const WignerTable& w);

// Matrix array, or {"alpha": ..., "s": [...]} naming a MUB projector of the given space.
Matrix state_from_json(const json& j, const std::optional<PhaseSpace>& space);

json trajectory_point_to_json(const TrajectoryPoint& pt);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace finphase
