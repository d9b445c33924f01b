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
 * Executes jobs and renders reports. Reports contain only exact values and
 * canonical bases, so the same job always produces the same bytes.
 */

#ifndef HOPFCOH_TOOLS_RUN_HPP
#define HOPFCOH_TOOLS_RUN_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "job.hpp"

namespace hopfcoh::cli {

  enum class Status { consistent = 0, inconsistent = 1, invalid_input = 2 };

  struct RunOutcome {
    nlohmann::json report;
    Status         status = Status::consistent;
  };

  /// Task list for a CLI verb, in execution order.
  std::vector<TaskSpec> tasks_for_verb(const std::string& verb);
  bool                  is_verb(const std::string& verb);

  /// Runs the tasks of a job. Input problems give Status::invalid_input with an "error" entry.
  RunOutcome run_job(const JobSpec& job, const std::string& digest);

  /// Runs several jobs concurrently and assembles the reports in order.
  std::vector<RunOutcome> run_jobs(const std::vector<JobSpec>& jobs, const std::vector<std::string>& digests);

  /// The worst status of a set of outcomes.
  Status combined_status(const std::vector<RunOutcome>& outcomes);

  nlohmann::json report_document(const std::vector<RunOutcome>& outcomes);
  std::string    render_json(const nlohmann::json& document);
  std::string    render_markdown(const nlohmann::json& document);

  std::string sha256_hex(std::string_view data);

}  // namespace hopfcoh::cli

#endif  // HOPFCOH_TOOLS_RUN_HPP
