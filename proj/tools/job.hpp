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

/**
 * @file
 *
 * Job files for the command-line tool: what algebra to build, which
 * bicomodules to attach and which tasks to run.
 *
 * A job is a JSON object:
 *
 *   {
 *     "algebra": "group_algebra:S3",
 *     "comodules": [{"catalog": "regular"}, {"label": "x", "beta": [[...]], "gamma": [[...]]}],
 *     "tasks": ["axioms", {"task": "cohomology", "kind": "dual", "degrees": [0, 1, 2]}],
 *     "degree_cap": 3
 *   }
 *
 * "algebra" may also be {"family": "function_algebra", "monoid": {"name":
 * ..., "table": [[...]], "labels": [...]}} or explicit structure constants
 * {"name", "dim", "mult", "unit", "comult", "counit", "star"}. Matrices are
 * lists of rows; scalars are integers or strings such as "3/4" or "1/2+2 i".
 * Without "comodules" every catalog bicomodule of the algebra is used.
 */

#ifndef HOPFCOH_TOOLS_JOB_HPP
#define HOPFCOH_TOOLS_JOB_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfcoh/cochain.hpp"
#include "hopfcoh/monoid.hpp"

namespace hopfcoh::cli {

  struct AlgebraSource {
    enum class Kind { builtin, cayley, constants };
    Kind kind = Kind::builtin;

    std::string name;  ///< builtin catalog name, or the name of the table / constants

    // cayley
    std::string              family;  ///< "function_algebra" or "group_algebra"
    CayleyTable              table;
    std::vector<std::string> labels;

    // constants
    std::size_t           dim = 0;
    Matrix                mult;
    std::optional<Vector> unit;
    Matrix                comult;
    std::optional<Vector> counit;
    std::optional<Matrix> star;

    friend bool operator==(const AlgebraSource&, const AlgebraSource&) = default;
  };

  struct ComoduleSource {
    std::string                label;
    std::optional<std::string> catalog;  ///< a catalog label; otherwise beta and gamma are given
    Matrix                     beta;
    Matrix                     gamma;

    friend bool operator==(const ComoduleSource&, const ComoduleSource&) = default;
  };

  inline constexpr const char* task_names[] = {
      "axioms",          "saturation",           "counit",          "haar",
      "cohomology",      "codiagonal",           "mean",            "codiagonal-vanishing",
      "graded-cocycles", "mean-cohomology",      "dual-natural",    "dual-bar",
  };

  struct TaskSpec {
    std::string              name;
    ComplexKind              kind = ComplexKind::dual;  ///< cohomology only
    std::vector<std::size_t> degrees;                   ///< cohomology only; empty = 0 .. cap-1

    friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
  };

  struct JobSpec {
    AlgebraSource               algebra;
    std::vector<ComoduleSource> comodules;  ///< empty = the whole catalog
    std::vector<TaskSpec>       tasks;
    std::size_t                 degree_cap = default_degree_cap;

    friend bool operator==(const JobSpec&, const JobSpec&) = default;
  };

  /// Throws ParseError naming the line (for syntax errors) or the field path.
  JobSpec parse_job(std::string_view text);

  /// Canonical JSON text; parse_job(render_job(j)) == j.
  std::string render_job(const JobSpec& job);

  ComplexKind parse_complex_kind(const std::string& s);

  /// Builds and shape-checks the algebra. Throws ParseError / DimensionError / StructureError.
  HopfStarAlgebra build_algebra(const AlgebraSource& src);

  /// Shape check of explicit coaction matrices against dim S. Throws DimensionError.
  void check_comodule_shapes(std::size_t dim_s, const std::vector<ComoduleSource>& src);

  /// Builds every requested bicomodule; all matrices are dimension-checked here.
  std::vector<Bicomodule> build_comodules(const HopfPtr& h, const std::vector<ComoduleSource>& src);

}  // namespace hopfcoh::cli

#endif  // HOPFCOH_TOOLS_JOB_HPP
