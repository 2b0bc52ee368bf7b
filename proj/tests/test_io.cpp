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

#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "finphase/io.hpp"
#include "finphase/random_states.hpp"

using namespace finphase;

TEST_SUITE("io") {
  TEST_CASE("field and label round trips") {
    const auto f = GaloisField::make(3, 2);
    const auto g = field_from_json(field_to_json(f));
    CHECK(g == f);
    CHECK(field_from_json(json::parse(R"({"p":2,"n":3,"poly":[1,1,0]})")).poly() == std::vector<int>{1, 1, 0});
    CHECK_THROWS_AS(field_from_json(json::parse(R"({"p":2,"n":2,"poly":[0,1]})")), ValidationError);
    for (long long a = 0; a <= f.order(); ++a) CHECK(label_from_json(f, label_to_json(f, a)) == a);
    CHECK(label_to_json(f, 9) == "inf");
    CHECK(label_from_json(f, json(4)) == 4);
    CHECK_THROWS_AS(label_from_json(f, json::parse("[1]")), ValidationError);
    CHECK_THROWS_AS(label_from_json(f, json::parse("[3,0]")), ValidationError);
    CHECK_THROWS_AS(label_from_json(f, json("vertical")), ValidationError);
  }

  TEST_CASE("matrix round trip and real shorthand") {
    Rng rng(101);
    const Matrix m = random_density(4, rng);
    CHECK((matrix_from_json(matrix_to_json(m)) - m).norm() == 0.0);
    const Matrix r = matrix_from_json(json::parse("[[0.5, [0, 0.5]], [[0, -0.5], 0.5]]"));
    CHECK(r(0, 1) == cplx(0, 0.5));
    CHECK(r(1, 1) == cplx(0.5));
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[1, 2], [3]]")), ValidationError);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), ValidationError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["a"]])")), ValidationError);
  }

  TEST_CASE("table round trips keep the convention") {
    Rng rng(103);
    const PhaseSpace space(3, 2);
    std::vector<std::vector<int>> extra(space.num_labels(), std::vector<int>{1, 2});
    const WignerFrame frame(space, Convention::with_extra_shifts(ConventionKind::Separable, extra));
    const auto w = wigner_function(frame, random_density(9, rng));
    const auto w2 = wigner_from_json(json::parse(wigner_to_json(w).dump()));
    CHECK(w2.p == 3);
    CHECK(w2.n == 2);
    CHECK(w2.convention == w.convention);
    for (std::size_t k = 0; k < w.values.size(); ++k) CHECK(w2.values[k] == w.values[k]);

    const auto chi = char_function(WignerFrame(3, 1, Convention(ConventionKind::Dynamics)), random_density(3, rng));
    const auto chi2 = char_from_json(char_to_json(chi));
    CHECK(chi2.convention.kind() == ConventionKind::Dynamics);
    for (std::size_t k = 0; k < chi.values.size(); ++k) CHECK(chi2.values[k] == chi.values[k]);

    auto j = wigner_to_json(w);
    j["values"].erase(j["values"].begin());
    CHECK_THROWS_AS(wigner_from_json(j), ValidationError);
  }

  TEST_CASE("grid exports") {
    const auto w = wigner_function(Matrix::Identity(3, 3) / 3.0, Convention(ConventionKind::Plain));
    const std::string csv = wigner_to_csv(w);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(std::count(csv.begin(), csv.end(), ',') == 6);

    const PhaseSpace space(3, 1);
    const auto line = wigner_function(WignerFrame(space, Convention()), mub_projector_matrix(space, 0, {0}));
    std::istringstream pgm(wigner_to_pgm(line));
    std::string magic;
    pgm >> magic;
    CHECK(magic == "P2");
    std::string tok;
    std::vector<int> nums;
    while (pgm >> tok) {
      if (tok[0] == '#') {
        std::getline(pgm, tok);
        continue;
      }
      nums.push_back(std::stoi(tok));
    }
    REQUIRE(nums.size() == 3 + 9);
    CHECK(nums[0] == 3);
    CHECK(nums[1] == 3);
    CHECK(nums[2] == 255);
    CHECK(std::count(nums.begin() + 3, nums.end(), 255) == 3);
    CHECK(std::count(nums.begin() + 3, nums.end(), 0) == 6);

    const auto w2 = wigner_function(Matrix::Identity(9, 9) / 9.0, Convention(ConventionKind::Separable));
    const std::string csv2 = wigner_to_csv(w2);
    CHECK(std::count(csv2.begin(), csv2.end(), '#') == 9);
    CHECK(wigner_to_pgm(w2).find("9 9\n255\n") != std::string::npos);
    const auto w3 = wigner_function(Matrix::Identity(8, 8) / 8.0, Convention());
    CHECK_THROWS_AS(wigner_to_csv(w3), UnsupportedError);
  }

  TEST_CASE("state shorthand") {
    const PhaseSpace space(2, 2);
    const Matrix p = state_from_json(json::parse(R"({"alpha":"inf","s":[0,1]})"), space);
    CHECK((p - mub_projector_matrix(space, 4, {0, 1})).norm() < 1e-15);
    const Matrix q = state_from_json(json::parse(R"({"alpha":[1,1],"s":[1,1]})"), space);
    CHECK((q - mub_projector_matrix(space, 3, {1, 1})).norm() < 1e-15);
    CHECK_THROWS_AS(state_from_json(json::parse(R"({"alpha":0,"s":[0,0]})"), std::nullopt), ValidationError);
    CHECK_THROWS_AS(state_from_json(json::parse(R"({"beta":0})"), space), ValidationError);
  }

  TEST_CASE("files") {
    const std::string path = "io_test_tmp.json";
    write_text_file(path, R"({"a": 1})");
    CHECK(load_json_file(path).at("a") == 1);
    write_text_file(path, "{not json");
    CHECK_THROWS_AS(load_json_file(path), ValidationError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_json_file("does/not/exist.json"), ValidationError);
  }
}
