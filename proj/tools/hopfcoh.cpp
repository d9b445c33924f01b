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

// hopfcoh: command-line front end.
//
//   hopfcoh <check|cohomology|codiagonal|mean|verify|report>
//           (--input FILE | --catalog NAME|all) [--degree-cap N]
//           [--output FILE] [--format json|markdown]
//
// Exit status: 0 when every check is consistent, 1 when a cross-check
// failed, 2 for input errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hopfcoh/error.hpp"
#include "job.hpp"
#include "run.hpp"

using namespace hopfcoh;
using namespace hopfcoh::cli;

namespace {

  int input_error(const std::string& what) {
    std::cerr << "hopfcoh: " << what << "\n";
    return static_cast<int>(Status::invalid_input);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology of finite-dimensional Hopf *-algebras and their bicomodules"};
  app.require_subcommand(1, 1);

  std::string input;
  std::string catalog;
  std::string output;
  std::string format = "json";
  std::size_t cap    = default_degree_cap;

  for (const char* verb : {"check", "cohomology", "codiagonal", "mean", "verify", "report"}) {
    auto* sub = app.add_subcommand(verb);
    auto* in  = sub->add_option("--input", input, "job file");
    auto* cat = sub->add_option("--catalog", catalog, "catalog algebra name, or \"all\"");
    in->excludes(cat);
    sub->add_option("--degree-cap", cap, "largest tensor degree S^n that may be built")->check(CLI::Range(1, 8));
    sub->add_option("--output", output, "write the report here instead of stdout");
    sub->add_option("--format", format)->check(CLI::IsMember({"json", "markdown"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(Status::invalid_input);
  }
  const std::string verb        = app.get_subcommands().front()->get_name();
  const bool        cap_given   = app.get_subcommands().front()->count("--degree-cap") > 0;
  const auto        verb_tasks  = tasks_for_verb(verb);

  std::vector<JobSpec>     jobs;
  std::vector<std::string> digests;
  try {
    if (!input.empty()) {
      std::ifstream in(input, std::ios::binary);
      if (!in) return input_error("cannot read " + input);
      std::stringstream buf;
      buf << in.rdbuf();
      JobSpec job = parse_job(buf.str());
      if (cap_given) job.degree_cap = cap;
      if (verb != "report" || job.tasks.empty()) job.tasks = verb_tasks;
      jobs.push_back(std::move(job));
      digests.push_back(sha256_hex(buf.str()));
    } else if (!catalog.empty()) {
      std::vector<std::string> names = catalog == "all" ? catalog_algebra_names() : std::vector<std::string>{catalog};
      for (const auto& name : names) {
        JobSpec job;
        job.algebra.kind = AlgebraSource::Kind::builtin;
        job.algebra.name = name;
        job.degree_cap   = cap;
        job.tasks        = verb_tasks;
        digests.push_back(sha256_hex(render_job(job)));
        jobs.push_back(std::move(job));
      }
    } else {
      return input_error("one of --input or --catalog is required");
    }
  } catch (const Error& e) {
    return input_error(e.what());
  }

  auto        outcomes = run_jobs(jobs, digests);
  auto        document = report_document(outcomes);
  std::string text     = format == "json" ? render_json(document) : render_markdown(document);

  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) return input_error("cannot write " + output);
    out << text;
  }
  for (const auto& o : outcomes) {
    if (o.report.contains("error")) std::cerr << "hopfcoh: " << o.report["error"].get<std::string>() << "\n";
  }
  return static_cast<int>(combined_status(outcomes));
}
