/*
 *   Copyright 2026 The hopfcoh Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "job.hpp"

#include <algorithm>
#include <iterator>

#include "json.hpp"

#include "hopfcoh/error.hpp"

namespace hopfcoh::cli {

  using nlohmann::json;

  namespace {

    [[noreturn]] void fail(const std::string& path, const std::string& what) {
      throw ParseError(path + ": " + what);
    }

    const json& field(const json& obj, const std::string& key, const std::string& path) {
      auto it = obj.find(key);
      if (it == obj.end()) fail(path, "missing field \"" + key + "\"");
      return *it;
    }

    std::string get_string(const json& j, const std::string& path) {
      if (!j.is_string()) fail(path, "expected a string");
      return j.get<std::string>();
    }

    std::size_t get_index(const json& j, const std::string& path) {
      if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        fail(path, "expected a non-negative integer");
      }
      return j.get<std::size_t>();
    }

    Scalar get_scalar(const json& j, const std::string& path) {
      if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
      if (!j.is_string()) fail(path, "expected an integer or a scalar string");
      try {
        return Scalar::parse(j.get<std::string>());
      } catch (const ParseError& e) {
        fail(path, e.what());
      }
    }

    Vector get_vector(const json& j, const std::string& path) {
      if (!j.is_array()) fail(path, "expected a list of scalars");
      Vector v;
      for (std::size_t i = 0; i < j.size(); ++i) v.push_back(get_scalar(j[i], path + "[" + std::to_string(i) + "]"));
      return v;
    }

    Matrix get_matrix(const json& j, const std::string& path) {
      if (!j.is_array() || j.empty()) fail(path, "expected a non-empty list of rows");
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back(get_vector(j[i], path + "[" + std::to_string(i) + "]"));
        if (rows.back().size() != rows.front().size()) fail(path, "rows have different lengths");
      }
      return Matrix::from_rows(rows.front().size(), rows);
    }

    json render_scalar(const Scalar& s) { return s.to_string(); }

    json render_vector(const Vector& v) {
      json out = json::array();
      for (const auto& s : v) out.push_back(render_scalar(s));
      return out;
    }

    json render_matrix(const Matrix& m) {
      json out = json::array();
      for (const auto& row : m.to_dense_rows()) out.push_back(render_vector(row));
      return out;
    }

    AlgebraSource parse_algebra(const json& j) {
      AlgebraSource a;
      if (j.is_string()) {
        a.kind = AlgebraSource::Kind::builtin;
        a.name = j.get<std::string>();
        return a;
      }
      if (!j.is_object()) fail("algebra", "expected a catalog name or an object");
      if (j.contains("monoid")) {
        a.kind   = AlgebraSource::Kind::cayley;
        a.family = get_string(field(j, "family", "algebra"), "algebra.family");
        if (a.family != "function_algebra" && a.family != "group_algebra") {
          fail("algebra.family", "expected \"function_algebra\" or \"group_algebra\"");
        }
        const json& m = j["monoid"];
        a.name        = get_string(field(m, "name", "algebra.monoid"), "algebra.monoid.name");
        const json& t = field(m, "table", "algebra.monoid");
        if (!t.is_array()) fail("algebra.monoid.table", "expected a list of rows");
        for (std::size_t i = 0; i < t.size(); ++i) {
          const std::string p = "algebra.monoid.table[" + std::to_string(i) + "]";
          if (!t[i].is_array()) fail(p, "expected a row");
          std::vector<std::size_t> row;
          for (std::size_t k = 0; k < t[i].size(); ++k) row.push_back(get_index(t[i][k], p + "[" + std::to_string(k) + "]"));
          a.table.push_back(std::move(row));
        }
        if (m.contains("labels")) {
          for (std::size_t i = 0; i < m["labels"].size(); ++i) {
            a.labels.push_back(get_string(m["labels"][i], "algebra.monoid.labels[" + std::to_string(i) + "]"));
          }
        }
        return a;
      }
      a.kind   = AlgebraSource::Kind::constants;
      a.name   = get_string(field(j, "name", "algebra"), "algebra.name");
      a.dim    = get_index(field(j, "dim", "algebra"), "algebra.dim");
      a.mult   = get_matrix(field(j, "mult", "algebra"), "algebra.mult");
      a.comult = get_matrix(field(j, "comult", "algebra"), "algebra.comult");
      if (j.contains("unit")) a.unit = get_vector(j["unit"], "algebra.unit");
      if (j.contains("counit")) a.counit = get_vector(j["counit"], "algebra.counit");
      if (j.contains("star")) a.star = get_matrix(j["star"], "algebra.star");
      return a;
    }

    json render_algebra(const AlgebraSource& a) {
      switch (a.kind) {
        case AlgebraSource::Kind::builtin: return a.name;
        case AlgebraSource::Kind::cayley: {
          json m = {{"name", a.name}, {"table", a.table}};
          if (!a.labels.empty()) m["labels"] = a.labels;
          return {{"family", a.family}, {"monoid", m}};
        }
        case AlgebraSource::Kind::constants: {
          json j = {{"name", a.name},
                    {"dim", a.dim},
                    {"mult", render_matrix(a.mult)},
                    {"comult", render_matrix(a.comult)}};
          if (a.unit) j["unit"] = render_vector(*a.unit);
          if (a.counit) j["counit"] = render_vector(*a.counit);
          if (a.star) j["star"] = render_matrix(*a.star);
          return j;
        }
      }
      return nullptr;
    }

    TaskSpec parse_task(const json& j, const std::string& path) {
      TaskSpec t;
      if (j.is_string()) {
        t.name = j.get<std::string>();
      } else if (j.is_object()) {
        t.name = get_string(field(j, "task", path), path + ".task");
        if (j.contains("kind")) {
          try {
            t.kind = parse_complex_kind(get_string(j["kind"], path + ".kind"));
          } catch (const ParseError& e) {
            fail(path + ".kind", e.what());
          }
        }
        if (j.contains("degrees")) {
          const json& d = j["degrees"];
          if (!d.is_array()) fail(path + ".degrees", "expected a list of degrees");
          for (std::size_t i = 0; i < d.size(); ++i) t.degrees.push_back(get_index(d[i], path + ".degrees[" + std::to_string(i) + "]"));
        }
      } else {
        fail(path, "expected a task name or an object");
      }
      if (std::find_if(std::begin(task_names), std::end(task_names),
                       [&](const char* n) { return t.name == n; }) == std::end(task_names)) {
        fail(path, "unknown task \"" + t.name + "\"");
      }
      if (t.name != "cohomology" && (!t.degrees.empty() || t.kind != ComplexKind::dual)) {
        fail(path, "only the cohomology task takes a kind or degrees");
      }
      return t;
    }

  }  // namespace

  ComplexKind parse_complex_kind(const std::string& s) {
    for (auto k : {ComplexKind::natural, ComplexKind::dual, ComplexKind::bar, ComplexKind::restricted}) {
      if (s == to_string(k)) return k;
    }
    throw ParseError("unknown complex kind \"" + s + "\"");
  }

  JobSpec parse_job(std::string_view text) {
    json j;
    try {
      j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      std::size_t line = 1 + static_cast<std::size_t>(
                                 std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(
                                                                             std::min(e.byte, text.size())),
                                            '\n'));
      throw ParseError("line " + std::to_string(line) + ": " + e.what());
    }
    if (!j.is_object()) fail("job", "expected an object");
    for (const auto& [key, value] : j.items()) {
      if (key != "algebra" && key != "comodules" && key != "tasks" && key != "degree_cap") {
        fail(key, "unknown field");
      }
    }
    JobSpec job;
    job.algebra = parse_algebra(field(j, "algebra", "job"));
    if (j.contains("degree_cap")) job.degree_cap = get_index(j["degree_cap"], "degree_cap");
    if (j.contains("comodules")) {
      const json& cs = j["comodules"];
      if (!cs.is_array()) fail("comodules", "expected a list");
      for (std::size_t i = 0; i < cs.size(); ++i) {
        const std::string p = "comodules[" + std::to_string(i) + "]";
        if (!cs[i].is_object()) fail(p, "expected an object");
        ComoduleSource c;
        if (cs[i].contains("catalog")) {
          c.catalog = get_string(cs[i]["catalog"], p + ".catalog");
          c.label   = cs[i].contains("label") ? get_string(cs[i]["label"], p + ".label") : *c.catalog;
        } else {
          c.label = get_string(field(cs[i], "label", p), p + ".label");
          c.beta  = get_matrix(field(cs[i], "beta", p), p + ".beta");
          c.gamma = get_matrix(field(cs[i], "gamma", p), p + ".gamma");
        }
        job.comodules.push_back(std::move(c));
      }
    }
    if (j.contains("tasks")) {
      const json& ts = j["tasks"];
      if (!ts.is_array()) fail("tasks", "expected a list");
      for (std::size_t i = 0; i < ts.size(); ++i) job.tasks.push_back(parse_task(ts[i], "tasks[" + std::to_string(i) + "]"));
    }
    return job;
  }

  std::string render_job(const JobSpec& job) {
    json j;
    j["algebra"]    = render_algebra(job.algebra);
    j["degree_cap"] = job.degree_cap;
    if (!job.comodules.empty()) {
      json cs = json::array();
      for (const auto& c : job.comodules) {
        if (c.catalog) {
          cs.push_back({{"catalog", *c.catalog}, {"label", c.label}});
        } else {
          cs.push_back({{"label", c.label}, {"beta", render_matrix(c.beta)}, {"gamma", render_matrix(c.gamma)}});
        }
      }
      j["comodules"] = cs;
    }
    json ts = json::array();
    for (const auto& t : job.tasks) {
      if (t.name == "cohomology") {
        json o = {{"task", t.name}, {"kind", to_string(t.kind)}};
        if (!t.degrees.empty()) o["degrees"] = t.degrees;
        ts.push_back(o);
      } else {
        ts.push_back(t.name);
      }
    }
    j["tasks"] = ts;
    return j.dump(2) + "\n";
  }

  HopfStarAlgebra build_algebra(const AlgebraSource& src) {
    switch (src.kind) {
      case AlgebraSource::Kind::builtin: return builtin_algebra(src.name);
      case AlgebraSource::Kind::cayley: {
        FiniteMonoid m(src.name, src.table, src.labels);
        if (src.family == "group_algebra") return group_algebra(FiniteGroup(std::move(m)));
        return function_algebra(m);
      }
      case AlgebraSource::Kind::constants: {
        HopfStarAlgebra h;
        h.name   = src.name;
        h.dim    = src.dim;
        h.mult   = src.mult;
        h.unit   = src.unit;
        h.comult = src.comult;
        h.counit = src.counit;
        h.star   = src.star;
        h.family = AlgebraFamily::custom;
        for (std::size_t i = 0; i < src.dim; ++i) h.labels.push_back("e" + std::to_string(i));
        validate_shapes(h);
        return h;
      }
    }
    throw ParseError("unknown algebra source");
  }

  void check_comodule_shapes(std::size_t dim_s, const std::vector<ComoduleSource>& src) {
    for (const auto& c : src) {
      if (c.catalog) continue;
      if (c.beta.cols() != c.gamma.cols() || c.beta.rows() != c.beta.cols() * dim_s ||
          c.gamma.rows() != c.gamma.cols() * dim_s) {
        throw DimensionError("comodule \"" + c.label + "\": beta must be (dim X * " + std::to_string(dim_s) +
                             ") x dim X and gamma the same");
      }
    }
  }

  std::vector<Bicomodule> build_comodules(const HopfPtr& h, const std::vector<ComoduleSource>& src) {
    check_comodule_shapes(h->dim, src);
    auto catalog = catalog_bicomodules(h);
    if (src.empty()) return catalog;
    std::vector<Bicomodule> out;
    for (const auto& c : src) {
      if (c.catalog) {
        auto it = std::find_if(catalog.begin(), catalog.end(), [&](const Bicomodule& b) { return b.label() == *c.catalog; });
        if (it == catalog.end()) throw ParseError("comodule \"" + *c.catalog + "\" is not in the catalog of " + h->name);
        out.emplace_back(c.label, it->right(), it->left());
        continue;
      }
      out.emplace_back(c.label, RightCoaction(h, c.beta), LeftCoaction(h, c.gamma));
    }
    return out;
  }

}  // namespace hopfcoh::cli
