// Copyright 2026 The qdilate Authors
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

#include "qdilate/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qdilate/errors.hpp"

namespace qdilate::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorCode::ParseError, what); }

Index read_count(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 0) {
    parse_fail(std::string("missing or invalid non-negative integer \"") + key + "\"");
  }
  return static_cast<Index>(j.at(key).get<long long>());
}

double read_number(const Json& j) {
  if (!j.is_number()) parse_fail("expected a number, got " + j.dump());
  return j.get<double>();
}

std::vector<ComplexMatrix> matrix_list(const Json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array of matrices");
  std::vector<ComplexMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    parse_fail(e.what());
  }
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) entries.push_back({m(r, c).real(), m(r, c).imag()});
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object()) parse_fail("matrix must be an object");
    const Index rows = read_count(j, "rows");
    const Index cols = read_count(j, "cols");
    if (!j.contains("entries") || !j.at("entries").is_array()) parse_fail("matrix needs an \"entries\" array");
    const Json& e = j.at("entries");
    if (static_cast<Index>(e.size()) != rows * cols) {
      parse_fail("matrix has " + std::to_string(e.size()) + " entries, expected rows*cols = " +
                 std::to_string(rows * cols));
    }
    ComplexMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
      for (Index c = 0; c < cols; ++c) {
        const Json& pair = e.at(static_cast<std::size_t>(r * cols + c));
        if (!pair.is_array() || pair.size() != 2) parse_fail("matrix entry must be a [re, im] pair");
        m(r, c) = Complex(read_number(pair.at(0)), read_number(pair.at(1)));
      }
    }
    if (!all_finite(m)) parse_fail("matrix has non-finite entries");
    return m;
  });
}

Json channel_to_json(const ChannelRep& rep) {
  Json out{{"dim", channel_dim(rep)}};
  if (const auto* k = std::get_if<KrausDecomposition>(&rep)) {
    Json ops = Json::array();
    for (const auto& a : k->operators) ops.push_back(matrix_to_json(a));
    out["kraus"] = std::move(ops);
  } else if (const auto* c = std::get_if<ChoiMatrix>(&rep)) {
    out["choi"] = matrix_to_json(c->matrix);
  } else {
    const auto& m = std::get<MixedUnitaryDecomposition>(rep);
    Json units = Json::array();
    for (const auto& u : m.unitaries) units.push_back(matrix_to_json(u));
    out["mixed_unitary"] = Json{{"weights", m.weights}, {"unitaries", std::move(units)}};
  }
  return out;
}

ChannelRep channel_from_json(const Json& j) {
  return guarded([&]() -> ChannelRep {
    if (!j.is_object()) parse_fail("channel must be an object");
    const Index dim = read_count(j, "dim");
    if (dim == 0) parse_fail("channel dimension must be positive");
    const int present = static_cast<int>(j.contains("kraus")) + static_cast<int>(j.contains("mixed_unitary")) +
                        static_cast<int>(j.contains("choi"));
    if (present != 1) parse_fail("channel needs exactly one of \"kraus\", \"mixed_unitary\", \"choi\"");

    auto check_dims = [&](const ComplexMatrix& m, Index side) {
      if (m.rows() != side || m.cols() != side) {
        parse_fail("operator is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                   ", expected " + std::to_string(side) + "x" + std::to_string(side));
      }
    };

    if (j.contains("kraus")) {
      KrausDecomposition k{dim, matrix_list(j.at("kraus"), "\"kraus\"")};
      if (k.operators.empty()) parse_fail("\"kraus\" must not be empty");
      for (const auto& a : k.operators) check_dims(a, dim);
      return k;
    }
    if (j.contains("choi")) {
      ChoiMatrix c{dim, matrix_from_json(j.at("choi"))};
      check_dims(c.matrix, dim * dim);
      return c;
    }
    const Json& mu = j.at("mixed_unitary");
    if (!mu.is_object() || !mu.contains("weights") || !mu.contains("unitaries") || !mu.at("weights").is_array()) {
      parse_fail("\"mixed_unitary\" needs \"weights\" and \"unitaries\"");
    }
    MixedUnitaryDecomposition m;
    for (const auto& w : mu.at("weights")) m.weights.push_back(read_number(w));
    m.unitaries = matrix_list(mu.at("unitaries"), "\"unitaries\"");
    if (m.weights.size() != m.unitaries.size() || m.weights.empty()) {
      parse_fail("\"weights\" and \"unitaries\" must be non-empty and of equal length");
    }
    for (const auto& u : m.unitaries) check_dims(u, dim);
    return m;
  });
}

Json dilation_to_json(const DilationUnitary& u) {
  return Json{{"env_dim", u.env_dim}, {"matrix", matrix_to_json(u.matrix)}};
}

DilationUnitary dilation_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object() || !j.contains("matrix")) parse_fail("dilation needs \"env_dim\" and \"matrix\"");
    DilationUnitary u{read_count(j, "env_dim"), matrix_from_json(j.at("matrix"))};
    if (u.env_dim == 0 || u.matrix.rows() != u.matrix.cols() || u.matrix.rows() % u.env_dim != 0) {
      parse_fail("dilation matrix side must be a multiple of env_dim");
    }
    return u;
  });
}

Json steps_to_json(const std::vector<TTransformStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) {
    out.push_back(Json{{"n", s.n},
                       {"m", s.m},
                       {"delta", s.delta},
                       {"replaced", Json::array({matrix_to_json(s.v), matrix_to_json(s.w)})}});
  }
  return out;
}

Json census_to_json(const RankHistogram& h) {
  Json counts = Json::object();
  for (const auto& [rank, count] : h.counts) counts[std::to_string(rank)] = count;
  return Json{{"counts", std::move(counts)}, {"trials", h.trials}, {"seed", h.seed}, {"min_gap", h.min_gap}};
}

std::string census_to_csv(const RankHistogram& h) {
  std::ostringstream os;
  os << "rank,count\n";
  for (const auto& [rank, count] : h.counts) os << rank << ',' << count << '\n';
  return os.str();
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    parse_fail(e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace qdilate::io
