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

#include "run.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "hopfcoh/amenability.hpp"
#include "hopfcoh/error.hpp"

namespace hopfcoh::cli {

  using nlohmann::json;

  namespace {

    json scalars(const Vector& v) {
      json out = json::array();
      for (const auto& s : v) out.push_back(s.to_string());
      return out;
    }

    json rationals(const RationalVector& v) {
      json out = json::array();
      for (const auto& q : v) out.push_back(q.get_str());
      return out;
    }

    // Nonzero entries as [index, value] pairs.
    json sparse(const Vector& v) {
      json out = json::array();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) out.push_back({i, v[i].to_string()});
      }
      return out;
    }

    const char* positivity_name(Positivity p) {
      switch (p) {
        case Positivity::positive: return "positive";
        case Positivity::not_positive: return "not_positive";
        case Positivity::unknown: return "unknown";
      }
      return "unknown";
    }

    std::size_t task_rank(const std::string& name) {
      auto it = std::find_if(std::begin(task_names), std::end(task_names),
                             [&](const char* n) { return name == n; });
      return static_cast<std::size_t>(it - std::begin(task_names));
    }

    struct Context {
      const JobSpec&          job;
      HopfPtr                 hopf;
      std::vector<Bicomodule> comodules;
      bool                    consistent = true;
    };

    std::vector<std::size_t> degrees_of(const TaskSpec& t, std::size_t cap) {
      if (!t.degrees.empty()) return t.degrees;
      std::vector<std::size_t> out;
      for (std::size_t n = 0; n + 1 <= cap; ++n) out.push_back(n);
      return out;
    }

    std::vector<std::size_t> cap_degrees(std::size_t cap) {
      std::vector<std::size_t> out;
      for (std::size_t n = 0; n + 1 <= cap; ++n) out.push_back(n);
      return out;
    }

    json not_applicable(const std::string& task, const std::string& why) {
      return {{"task", task}, {"applicable", false}, {"reason", why}};
    }

    json run_axioms(Context& cx) {
      auto rep    = check_axioms(*cx.hopf);
      json checks = json::array();
      for (const auto& c : rep.checks) {
        json o = {{"name", c.name}, {"passed", c.passed}, {"applicable", c.applicable}};
        if (c.witness) o["witness"] = *c.witness;
        if (!c.detail.empty()) o["detail"] = c.detail;
        checks.push_back(o);
      }
      return {{"task", "axioms"}, {"passed", rep.all_passed()}, {"checks", checks}};
    }

    json run_saturation(Context& cx) {
      auto s = check_saturated(*cx.hopf);
      return {{"task", "saturation"}, {"left", s.left},           {"right", s.right},
              {"left_rank", s.left_rank}, {"right_rank", s.right_rank}, {"saturated", s.left && s.right}};
    }

    json run_counit(Context& cx) {
      auto r = counit_find(*cx.hopf);
      json o = {{"task", "counit"}, {"found", r.counit.has_value()}};
      if (r.counit) {
        o["counit"]    = scalars(*r.counit);
        o["unique"]    = r.unique;
        o["two_sided"] = r.two_sided;
      } else {
        o["certificate"] = {{"kind", "inconsistency of the left counit system"}, {"vector", sparse(r.certificate)}};
      }
      return o;
    }

    json run_haar(Context& cx) {
      auto r = haar_state(*cx.hopf);
      json o = {{"task", "haar"}, {"found", r.state.has_value()}, {"positivity", positivity_name(r.positivity)}};
      if (r.state) {
        o["state"]  = scalars(*r.state);
        o["unique"] = r.unique;
      } else if (r.non_positive_solution) {
        o["non_positive_solution"] = scalars(*r.non_positive_solution);
      } else {
        o["certificate"] = {{"kind", "inconsistency of the invariance system"}, {"vector", sparse(r.certificate)}};
      }
      return o;
    }

    json run_cohomology(Context& cx, const TaskSpec& t) {
      const auto degrees = degrees_of(t, cx.job.degree_cap);
      const auto top     = *std::max_element(degrees.begin(), degrees.end());
      json       rows    = json::array();
      for (const auto& b : cx.comodules) {
        if (t.kind == ComplexKind::restricted && !cx.hopf->unit) continue;
        auto complex = build_complex(b, t.kind, top, cx.job.degree_cap);
        for (auto n : degrees) {
          auto r = cohomology(complex, n);
          json reps = json::array();
          for (const auto& v : r.representatives) reps.push_back(sparse(v));
          rows.push_back({{"bicomodule", b.label()},
                          {"degree", n},
                          {"dim_cochains", r.dim_cochains},
                          {"dim_kernel", r.dim_kernel},
                          {"dim_image", r.dim_image_prev},
                          {"dim_h", r.dim_h},
                          {"certified_coboundaries", r.certified_coboundaries},
                          {"representatives", reps}});
        }
      }
      return {{"task", "cohomology"}, {"kind", to_string(t.kind)}, {"results", rows}};
    }

    json run_codiagonal(Context& cx) {
      auto s = find_codiagonal(*cx.hopf);
      json o = {{"task", "codiagonal"}, {"has_counit", s.has_counit}, {"found", s.codiagonal.has_value()}};
      if (s.codiagonal) {
        o["functional"]   = sparse(s.codiagonal->functional);
        o["solution_dim"] = s.solution_dim;
        o["exact"]        = s.codiagonal->exact();
        o["provenance"]   = "canonical solution of the codiagonal linear system";
        if (s.codiagonal->positive) o["positive"] = *s.codiagonal->positive;
      } else if (s.has_counit) {
        o["certificate"] = {{"kind", "inconsistency of the codiagonal system"}, {"vector", sparse(s.certificate)}};
      }
      return o;
    }

    json run_mean(Context& cx) {
      if (!cx.hopf->source) return not_applicable("mean", "the algebra was not built from a monoid");
      const auto& m = *cx.hopf->source;
      auto        s = find_invariant_mean(m);
      json        o = {{"task", "mean"}, {"monoid", m.name()}, {"feasible", s.mean.has_value()}, {"pivots", s.pivots}};
      if (s.mean) {
        o["weights"]    = rationals(s.mean->weights);
        o["invariant"]  = s.mean->invariant;
        o["provenance"] = "simplex vertex (Bland's rule)";
      } else {
        o["farkas"]          = rationals(s.farkas);
        o["farkas_verified"] = s.farkas_verified;
      }
      if (s.vertex_checked) {
        o["vertex_search_agrees"] = s.vertex_agrees;
        cx.consistent             = cx.consistent && s.vertex_agrees;
      }
      return o;
    }

    json failures_json(const std::vector<std::string>& f) { return f; }

    json run_codiagonal_vanishing(Context& cx) {
      auto r       = check_codiagonal_vanishing(cx.hopf, cx.job.degree_cap);
      json entries = json::array();
      for (const auto& e : r.entries) {
        json o = {{"bicomodule", e.bicomodule}, {"degree", e.degree}, {"dim_h", e.dim_h}};
        if (e.route) o["route"] = *e.route == CodiagonalRoute::beta ? "beta" : "gamma";
        if (e.homotopy_sign) o["homotopy_sign"] = *e.homotopy_sign;
        entries.push_back(o);
      }
      cx.consistent = cx.consistent && r.passed();
      return {{"task", "codiagonal-vanishing"},
              {"has_counit", r.has_counit},
              {"has_codiagonal", r.has_codiagonal},
              {"entries", entries},
              {"passed", r.passed()},
              {"failures", failures_json(r.failures)}};
    }

    json run_graded_cocycles(Context& cx) {
      const auto& h = *cx.hopf;
      if (h.family != AlgebraFamily::group || !h.source || !h.source->is_group()) {
        return not_applicable("graded-cocycles", "needs the group algebra of a finite group");
      }
      auto r        = check_graded_cocycles(FiniteGroup(*h.source));
      cx.consistent = cx.consistent && r.passed();
      return {{"task", "graded-cocycles"}, {"group", r.group},       {"cocycles", r.cocycles},
              {"dim_h1", r.dim_h1},       {"diagonal_zero", r.diagonal_zero}, {"passed", r.passed()},
              {"failures", failures_json(r.failures)}};
    }

    json run_mean_cohomology(Context& cx) {
      const auto& h = *cx.hopf;
      if (!h.source || !h.source->has_identity()) {
        return not_applicable("mean-cohomology", "needs a monoid with identity");
      }
      auto r        = check_mean_cohomology(*h.source);
      cx.consistent = cx.consistent && r.passed();
      return {{"task", "mean-cohomology"},
              {"monoid", r.monoid},
              {"quotient_dim", r.quotient_dim},
              {"cocycle_verified", r.cocycle_verified},
              {"mean_exists", r.mean_exists},
              {"is_coboundary", r.is_coboundary},
              {"rank_increase", r.rank_increase},
              {"all_h1_vanish", r.all_h1_vanish},
              {"explicit_primitive", r.explicit_primitive},
              {"passed", r.passed()},
              {"failures", failures_json(r.failures)}};
    }

    template <class F>
    json run_identification(Context& cx, const std::string& task, F identify) {
      json rows   = json::array();
      bool passed = true;
      for (const auto& b : cx.comodules) {
        for (auto n : cap_degrees(cx.job.degree_cap)) {
          auto r = identify(b, n, cx.job.degree_cap);
          json o = {{"bicomodule", b.label()}, {"degree", n}, {"holds", r.holds},
                    {"dim_h_left", r.dim_h_left}, {"dim_h_right", r.dim_h_right}};
          if (r.mismatch) o["mismatch"] = {r.mismatch->first, r.mismatch->second};
          passed = passed && r.holds;
          rows.push_back(o);
        }
      }
      cx.consistent = cx.consistent && passed;
      return {{"task", task}, {"passed", passed}, {"results", rows}};
    }

    json run_task(Context& cx, const TaskSpec& t) {
      if (t.name == "axioms") return run_axioms(cx);
      if (t.name == "saturation") return run_saturation(cx);
      if (t.name == "counit") return run_counit(cx);
      if (t.name == "haar") return run_haar(cx);
      if (t.name == "cohomology") return run_cohomology(cx, t);
      if (t.name == "codiagonal") return run_codiagonal(cx);
      if (t.name == "mean") return run_mean(cx);
      if (t.name == "codiagonal-vanishing") return run_codiagonal_vanishing(cx);
      if (t.name == "graded-cocycles") return run_graded_cocycles(cx);
      if (t.name == "mean-cohomology") return run_mean_cohomology(cx);
      if (t.name == "dual-natural") {
        return run_identification(cx, t.name, [](const Bicomodule& b, std::size_t n, std::size_t cap) {
          return identify_dual_natural(b, n, cap);
        });
      }
      if (t.name == "dual-bar") {
        return run_identification(cx, t.name, [](const Bicomodule& b, std::size_t n, std::size_t cap) {
          return identify_dual_bar(b, n, cap);
        });
      }
      throw ParseError("unknown task \"" + t.name + "\"");
    }

    TaskSpec plain(const char* name) { return TaskSpec{name, ComplexKind::dual, {}}; }

    TaskSpec cohomology_task(ComplexKind k) { return TaskSpec{"cohomology", k, {}}; }

  }  // namespace

  bool is_verb(const std::string& verb) {
    return verb == "check" || verb == "cohomology" || verb == "codiagonal" || verb == "mean" ||
           verb == "verify" || verb == "report";
  }

  std::vector<TaskSpec> tasks_for_verb(const std::string& verb) {
    if (verb == "check") return {plain("axioms"), plain("saturation"), plain("counit"), plain("haar")};
    if (verb == "cohomology") {
      return {plain("axioms"), cohomology_task(ComplexKind::natural), cohomology_task(ComplexKind::dual)};
    }
    if (verb == "codiagonal") return {plain("axioms"), plain("counit"), plain("codiagonal")};
    if (verb == "mean") return {plain("mean")};
    if (verb == "verify") {
      return {plain("axioms"),          plain("codiagonal-vanishing"), plain("graded-cocycles"),
              plain("mean-cohomology"), plain("dual-natural"),         plain("dual-bar")};
    }
    if (verb == "report") {
      return {plain("axioms"),
              plain("saturation"),
              plain("counit"),
              plain("haar"),
              cohomology_task(ComplexKind::natural),
              cohomology_task(ComplexKind::dual),
              plain("codiagonal"),
              plain("mean"),
              plain("codiagonal-vanishing"),
              plain("graded-cocycles"),
              plain("mean-cohomology"),
              plain("dual-natural"),
              plain("dual-bar")};
    }
    throw ParseError("unknown verb \"" + verb + "\"");
  }

  RunOutcome run_job(const JobSpec& job, const std::string& digest) {
    RunOutcome out;
    json&      rep = out.report;
    rep["input_digest"] = digest;
    rep["degree_cap"]   = job.degree_cap;
    rep["algebra"]      = job.algebra.name;

    std::vector<TaskSpec> tasks = job.tasks;
    std::stable_sort(tasks.begin(), tasks.end(),
                     [](const TaskSpec& a, const TaskSpec& b) { return task_rank(a.name) < task_rank(b.name); });

    std::optional<Context> cx;
    json                   results = json::array();
    try {
      auto hopf = share(build_algebra(job.algebra));
      cx.emplace(Context{job, hopf, {}});
      rep["dim"]    = hopf->dim;
      rep["family"] = to_string(hopf->family);
      check_comodule_shapes(hopf->dim, job.comodules);
      for (const auto& t : tasks) {
        if (t.name == "cohomology") {
          for (auto n : t.degrees) check_degree_cap(n, job.degree_cap);
        }
      }
      // A broken algebra would make the catalog coactions fail their own checks,
      // so the axioms run before any bicomodule is built.
      if (!tasks.empty() && tasks.front().name == "axioms") {
        json r = run_axioms(*cx);
        results.push_back(r);
        if (!r["passed"].get<bool>()) {
          rep["results"] = results;
          rep["error"]   = "axiom check failed; remaining tasks skipped";
          out.status     = Status::invalid_input;
          return out;
        }
        tasks.erase(tasks.begin());
      }
      cx->comodules = build_comodules(hopf, job.comodules);
      json labels   = json::array();
      for (const auto& b : cx->comodules) labels.push_back({{"label", b.label()}, {"dim", b.dim()}});
      rep["bicomodules"] = labels;
    } catch (const Error& e) {
      if (!results.empty()) rep["results"] = results;
      rep["error"] = e.what();
      out.status   = Status::invalid_input;
      return out;
    }

    for (const auto& t : tasks) {
      try {
        results.push_back(run_task(*cx, t));
      } catch (const ConsistencyError& e) {
        results.push_back({{"task", t.name}, {"passed", false}, {"failures", json::array({e.what()})}});
        cx->consistent = false;
      } catch (const Error& e) {
        results.push_back({{"task", t.name}, {"error", e.what()}});
        rep["results"] = results;
        rep["error"]   = e.what();
        out.status     = Status::invalid_input;
        return out;
      }
    }
    rep["results"]    = results;
    rep["consistent"] = cx->consistent;
    out.status        = cx->consistent ? Status::consistent : Status::inconsistent;
    return out;
  }

  std::vector<RunOutcome> run_jobs(const std::vector<JobSpec>& jobs, const std::vector<std::string>& digests) {
    std::vector<std::future<RunOutcome>> pending;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      pending.push_back(std::async(std::launch::async, [&, i] { return run_job(jobs[i], digests[i]); }));
    }
    std::vector<RunOutcome> out;
    for (auto& f : pending) out.push_back(f.get());
    return out;
  }

  Status combined_status(const std::vector<RunOutcome>& outcomes) {
    Status s = Status::consistent;
    for (const auto& o : outcomes) s = std::max(s, o.status);
    return s;
  }

  json report_document(const std::vector<RunOutcome>& outcomes) {
    json jobs = json::array();
    for (const auto& o : outcomes) jobs.push_back(o.report);
    const Status s = combined_status(outcomes);
    return {{"tool", "hopfcoh"},
            {"format_version", 1},
            {"status", s == Status::consistent ? "consistent" : s == Status::inconsistent ? "inconsistent" : "invalid_input"},
            {"jobs", jobs}};
  }

  std::string render_json(const json& document) { return document.dump(2) + "\n"; }

  std::string render_markdown(const json& document) {
    std::ostringstream md;
    md << "# hopfcoh report\n\nStatus: " << document["status"].get<std::string>() << "\n";
    for (const auto& job : document["jobs"]) {
      md << "\n## " << job["algebra"].get<std::string>() << "\n\n";
      if (job.contains("error")) md << "Error: " << job["error"].get<std::string>() << "\n\n";
      if (!job.contains("results")) continue;
      md << "| task | outcome |\n|---|---|\n";
      std::vector<std::string> hrows;
      for (const auto& r : job["results"]) {
        const std::string task = r["task"].get<std::string>();
        std::string       outcome;
        if (r.contains("error")) outcome = "error: " + r["error"].get<std::string>();
        else if (r.contains("applicable") && !r["applicable"].get<bool>()) outcome = "n/a (" + r["reason"].get<std::string>() + ")";
        else if (r.contains("passed")) outcome = r["passed"].get<bool>() ? "pass" : "FAIL";
        else if (r.contains("found")) outcome = r["found"].get<bool>() ? "found" : "none";
        else if (r.contains("feasible")) outcome = r["feasible"].get<bool>() ? "mean exists" : "infeasible (Farkas)";
        else if (r.contains("saturated")) outcome = r["saturated"].get<bool>() ? "saturated" : "not saturated";
        else if (task == "cohomology") outcome = std::string(r["kind"].get<std::string>()) + " complex";
        md << "| " << task << " | " << outcome << " |\n";
        if (task == "cohomology") {
          for (const auto& row : r["results"]) {
            std::ostringstream line;
            line << "| " << r["kind"].get<std::string>() << " | " << row["bicomodule"].get<std::string>() << " | "
                 << row["degree"].get<std::size_t>() << " | " << row["dim_cochains"].get<std::size_t>() << " | "
                 << row["dim_h"].get<std::size_t>() << " |";
            hrows.push_back(line.str());
          }
        }
      }
      if (!hrows.empty()) {
        md << "\n| complex | bicomodule | n | dim C^n | dim H^n |\n|---|---|---|---|---|\n";
        for (const auto& l : hrows) md << l << "\n";
      }
    }
    return md.str();
  }

  std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
      throw Error("SHA-256 failed");
    }
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return out.str();
  }

}  // namespace hopfcoh::cli
