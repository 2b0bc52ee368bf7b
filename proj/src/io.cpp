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

#include "finphase/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "finphase/finite_field.hpp"

namespace finphase {

json field_to_json(const GaloisField& field) {
  return {{"p", field.p()}, {"n", field.n()}, {"poly", field.poly()}};
}

GaloisField field_from_json(const json& j) {
  const int p = j.at("p").get<int>();
  const int n = j.at("n").get<int>();
  if (j.contains("poly")) return GaloisField::make(p, n, j.at("poly").get<std::vector<int>>());
  return GaloisField::make(p, n);
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ValidationError("matrix rows must have equal length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto& e = row[k];
      if (e.is_number()) {
        m(i, k) = e.get<double>();
      } else if (e.is_array() && e.size() == 2) {
        m(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
      } else {
        throw ValidationError("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

json spin_coeffs_to_json(const SpinCoefficients& s, double threshold) {
  json out = json::object();
  for (long long c = 0; c < static_cast<long long>(s.values.size()); ++c) {
    if (std::abs(s.values[c]) <= threshold && threshold > 0) continue;
    out[IndexVector::from_code(s.p, s.n, c).to_string()] = {s.values[c].real(), s.values[c].imag()};
  }
  return out;
}

json label_to_json(const GaloisField& field, long long alpha) {
  if (is_vertical(field, alpha)) return "inf";
  return field.from_code(alpha).coeffs();
}

long long label_from_json(const GaloisField& field, const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return field.order();
    throw ValidationError("label string must be \"inf\"");
  }
  if (j.is_number_integer()) {
    const long long a = j.get<long long>();
    check_label(field, a);
    return a;
  }
  if (j.is_array()) {
    const auto c = j.get<std::vector<int>>();
    if (static_cast<int>(c.size()) != field.n()) throw ValidationError("label needs n coefficients");
    for (int v : c) {
      if (v < 0 || v >= field.p()) throw ValidationError("label coefficients must lie in Z_p");
    }
    return field.element(c).code();
  }
  throw ValidationError("label must be an integer, a coefficient array or \"inf\"");
}

json generator_set_to_json(const GaloisField& field, const GeneratorSet& gs) {
  json gens = json::array();
  for (const auto& g : gs.gens) gens.push_back(g.comps());
  return {{"alpha", label_to_json(field, gs.alpha)}, {"gens", gens}};
}

json mub_to_json(const PhaseSpace& space, const std::vector<MubBasis>& bases) {
  json out = json::array();
  for (const auto& basis : bases) {
    json b = json::array();
    for (const auto& proj : basis) {
      b.push_back({{"alpha", label_to_json(space.field(), proj.alpha)},
                   {"s", proj.s},
                   {"matrix", matrix_to_json(proj.matrix)}});
    }
    out.push_back(std::move(b));
  }
  return out;
}

json mub_compact_to_json(const PhaseSpace& space) {
  json out = json::array();
  for (long long a = 0; a < space.num_labels(); ++a) {
    const auto cc = commuting_class(space, a);
    json members = json::array();
    for (std::size_t k = 0; k < cc.members.size(); ++k) {
      members.push_back({{"b", cc.b[k]},
                         {"index", cc.members[k].index().comps()},
                         {"eta_exp", cc.members[k].eta_exp()},
                         {"i_exp", cc.members[k].i_exp()}});
    }
    json entry = generator_set_to_json(space.field(), space.generators(a));
    entry["members"] = std::move(members);
    out.push_back(std::move(entry));
  }
  return out;
}

json mub_report_to_json(const MubReport& rep) {
  return {{"bases", rep.bases},
          {"projectors_per_basis", rep.projectors_per_basis},
          {"max_cross_deviation", rep.max_cross_deviation},
          {"max_within_deviation", rep.max_within_deviation},
          {"max_completeness_error", rep.max_completeness_error},
          {"max_projector_error", rep.max_projector_error}};
}

namespace {

json convention_to_json(json& out, const Convention& c) {
  out["convention"] = convention_name(c.kind());
  if (!c.extra_shifts().empty()) out["extra_shifts"] = c.extra_shifts();
  return out;
}

Convention convention_from_json(const json& j) {
  Convention c = Convention::parse(j.at("convention").get<std::string>());
  if (j.contains("extra_shifts")) {
    c = Convention::with_extra_shifts(c.kind(), j.at("extra_shifts").get<std::vector<std::vector<int>>>());
  }
  return c;
}

json table_to_json(int p, int n, const Convention& c, const std::vector<cplx>& values, const char* key) {
  json out = {{"p", p}, {"n", n}};
  convention_to_json(out, c);
  json vals = json::array();
  for (long long k = 0; k < static_cast<long long>(values.size()); ++k) {
    json e = {{"v", IndexVector::from_code(p, n, k).comps()}, {key, values[k].real()}};
    if (values[k].imag() != 0.0) e[std::string(key) + "_im"] = values[k].imag();
    vals.push_back(std::move(e));
  }
  out["values"] = std::move(vals);
  return out;
}

std::vector<cplx> table_from_json(const json& j, int& p, int& n, Convention& c, const char* key) {
  p = j.at("p").get<int>();
  n = j.at("n").get<int>();
  c = convention_from_json(j);
  const long long total = num_points(p, n);
  std::vector<cplx> values(total, 0.0);
  std::vector<bool> seen(total, false);
  for (const auto& e : j.at("values")) {
    const IndexVector v(p, e.at("v").get<std::vector<int>>());
    if (v.n() != n) throw ValidationError("table entry has the wrong length");
    const std::string im = std::string(key) + "_im";
    values[v.code()] = cplx(e.at(key).get<double>(), e.contains(im) ? e.at(im).get<double>() : 0.0);
    seen[v.code()] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw ValidationError("table is incomplete");
  return values;
}

void require_grid(const WignerTable& w) {
  if (w.n > 2) throw UnsupportedError("grid export is available for n = 1 and n = 2");
}

// Pixel (row, col) of the n = 1 grid or the tiled n = 2 grid.
double grid_value(const WignerTable& w, int row, int col) {
  const int p = w.p;
  if (w.n == 1) return w.real_at(IndexVector(p, {col, row}));
  return w.real_at(IndexVector(p, {col / p, row / p, col % p, row % p}));
}

}  // namespace

json wigner_to_json(const WignerTable& w) { return table_to_json(w.p, w.n, w.convention, w.values, "w"); }

WignerTable wigner_from_json(const json& j) {
  WignerTable w;
  w.values = table_from_json(j, w.p, w.n, w.convention, "w");
  return w;
}

json char_to_json(const CharTable& chi) { return table_to_json(chi.p, chi.n, chi.convention, chi.values, "chi"); }

CharTable char_from_json(const json& j) {
  CharTable chi;
  chi.values = table_from_json(j, chi.p, chi.n, chi.convention, "chi");
  return chi;
}

std::string wigner_to_csv(const WignerTable& w) {
  require_grid(w);
  std::ostringstream os;
  os << std::setprecision(17);
  const int p = w.p;
  if (w.n == 1) {
    for (int v1 = 0; v1 < p; ++v1) {
      for (int v0 = 0; v0 < p; ++v0) os << (v0 ? "," : "") << w.real_at(IndexVector(p, {v0, v1}));
      os << "\n";
    }
    return os.str();
  }
  for (int x0 = 0; x0 < p; ++x0) {
    for (int y0 = 0; y0 < p; ++y0) {
      os << "# slice x0=" << x0 << " y0=" << y0 << "; rows y1, columns x1\n";
      for (int y1 = 0; y1 < p; ++y1) {
        for (int x1 = 0; x1 < p; ++x1) os << (x1 ? "," : "") << w.real_at(IndexVector(p, {x0, y0, x1, y1}));
        os << "\n";
      }
    }
  }
  return os.str();
}

std::string wigner_to_pgm(const WignerTable& w) {
  require_grid(w);
  const int side = w.n == 1 ? w.p : w.p * w.p;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      lo = std::min(lo, grid_value(w, r, c));
      hi = std::max(hi, grid_value(w, r, c));
    }
  }
  std::ostringstream os;
  os << "P2\n";
  os << "# Wigner function p=" << w.p << " n=" << w.n << " convention=" << w.convention.name() << "\n";
  os << "# gray = round(255 * (W - min) / (max - min)), min=" << lo << " max=" << hi
     << "; constant tables map to 128\n";
  if (w.n == 1) {
    os << "# row = v1, column = v0\n";
  } else {
    os << "# tile row = y0, tile column = x0; inside a tile row = y1, column = x1\n";
  }
  os << side << " " << side << "\n255\n";
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      const double v = grid_value(w, r, c);
      const int g = hi > lo ? static_cast<int>(std::lround(255.0 * (v - lo) / (hi - lo))) : 128;
      os << (c ? " " : "") << g;
    }
    os << "\n";
  }
  return os.str();
}

Matrix state_from_json(const json& j, const std::optional<PhaseSpace>& space) {
  if (j.is_array()) return matrix_from_json(j);
  if (j.is_object() && j.contains("alpha") && j.contains("s")) {
    if (!space) throw ValidationError("projector shorthand needs --p and --n");
    const long long alpha = label_from_json(space->field(), j.at("alpha"));
    return mub_projector_matrix(*space, alpha, j.at("s").get<std::vector<int>>());
  }
  throw ValidationError("state must be a matrix or a {\"alpha\", \"s\"} projector shorthand");
}

json trajectory_point_to_json(const TrajectoryPoint& pt) {
  json out = {{"t", pt.t}};
  json chi = json::array();
  for (const auto& v : pt.chi.values) chi.push_back({v.real(), v.imag()});
  out["chi"] = std::move(chi);
  if (pt.wigner) {
    json w = json::array();
    for (const auto& v : pt.wigner->values) w.push_back(v.real());
    out["wigner"] = std::move(w);
  }
  out["density"] = matrix_to_json(pt.rho);
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("cannot parse " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

}  // namespace finphase
