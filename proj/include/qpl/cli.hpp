// Copyright 2026 The qpl Authors
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

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpl/classes.hpp"
#include "qpl/enumeration.hpp"
#include "qpl/identities.hpp"
#include "qpl/overpartition.hpp"
#include "qpl/separable.hpp"
#include "qpl/series.hpp"

namespace qpl::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

inline constexpr int kDefaultTrunc = 25;

/// QPL_TRUNC if set and numeric, else 25.
inline int default_trunc() {
  if (const char* env = std::getenv("QPL_TRUNC")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("QPL_TRUNC is not an integer: ") + env);
  }
  return kDefaultTrunc;
}

/// Overpartitions of n in table order: partitions in
/// decreasing lexicographic order, then overline choices counted in binary
/// with the largest size as the low bit.
inline std::vector<Overpartition> table_order(int n) {
  std::vector<std::pair<std::vector<int>, Overpartition>> rows;
  for_each_overpartition(n, Convention::LastOccurrence, [&](const Overpartition& pi) {
    std::vector<int> sizes;
    for (const Part& p : pi.parts()) sizes.push_back(p.size);
    rows.emplace_back(std::move(sizes), pi);
  });
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Overpartition> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.push_back(std::move(row.second));
  return out;
}

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string params_text(const Params& p, char sep) {
  std::string out;
  for (const auto& [name, value] : p) {
    if (!out.empty()) out += sep;
    out += name + "=" + std::to_string(value);
  }
  return out;
}

inline void write_report_text(std::ostream& out, const VerificationReport& r) {
  out << r.identity;
  if (!r.params.empty()) out << ' ' << params_text(r.params, ' ');
  out << " trunc=" << r.trunc << ' ' << (r.pass ? "PASS" : "FAIL");
  if (!r.pass) {
    const Mismatch& m = r.mismatches.front();
    out << " (" << r.mismatches.size() << " mismatches; first at q^" << m.q;
    if (m.z) out << " z^" << *m.z;
    out << ": " << m.lhs << " vs " << m.rhs << ")";
  }
  out << '\n';
}

inline void write_report_tsv(std::ostream& out, const VerificationReport& r) {
  out << r.identity << '\t' << params_text(r.params, ',') << '\t' << r.trunc << '\t' << (r.pass ? "pass" : "fail") << '\t'
      << r.mismatches.size() << '\n';
}

inline Convention parse_convention(const std::string& text) {
  if (text == "last") return Convention::LastOccurrence;
  if (text == "first") return Convention::FirstOccurrence;
  throw UsageError("unknown convention '" + text + "'");
}

inline Family parse_family(const std::string& text) {
  if (text == "BL") return Family::BL;
  if (text == "BF") return Family::BF;
  throw UsageError("unknown family '" + text + "'");
}

struct Job {
  std::optional<IdentityId> id;
  std::optional<Theorem> theorem;
  Params params;
};

inline VerificationReport run_job(const Job& job, int trunc, Readings readings) {
  if (job.theorem) return theorem_count_check(*job.theorem, job.params.at("n"), job.params.at("r"));
  return verify(*job.id, job.params, trunc, readings);
}

}  // namespace detail

/// Runs one invocation (args excludes the program name). Returns 0 on
/// success, 1 when a verification fails, 2 on usage errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Overpartition statistics and q-series identity checker", "qpl"};
  app.require_subcommand(1, 1);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check identities by series expansion and enumeration");
  std::string identity;
  bool all = false;
  std::optional<int> trunc_opt;
  std::string format = "text";
  std::string maes_factor = "omega";
  std::string repeat_tail = "printed";
  bool dump_series = false;
  std::map<std::string, std::optional<int>> param_opts;
  for (const char* name : {"r", "k", "n", "m", "s", "j", "A", "zmax", "prime"}) param_opts[name];
  auto* identity_opt = verify_cmd->add_option("--identity", identity, "I1..I19, Thm2_1 or Thm2_2");
  auto* all_flag = verify_cmd->add_flag("--all", all, "Run the whole catalog on its default grid");
  identity_opt->excludes(all_flag);
  for (auto& [name, slot] : param_opts) verify_cmd->add_option("--" + name, slot, "Identity parameter " + name);
  verify_cmd->add_option("--trunc", trunc_opt, "Truncation order N (default QPL_TRUNC or 25)");
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "tsv"}));
  verify_cmd->add_option("--maes-factor", maes_factor, "Reading of w(n)")->check(CLI::IsMember({"omega", "omega-first"}));
  verify_cmd->add_option("--repeat-tail", repeat_tail, "Reading of the largest-repeat bracket")
      ->check(CLI::IsMember({"printed", "corrected"}));
  verify_cmd->add_flag("--dump", dump_series, "Also print both sides");

  // enum
  auto* enum_cmd = app.add_subcommand("enum", "List overpartitions of n");
  int enum_n = 0;
  std::string enum_class = "all";
  int enum_k = 1;
  std::string enum_convention = "last";
  enum_cmd->add_option("--n", enum_n)->required()->check(CLI::Range(0, kBruteForceGuard));
  enum_cmd->add_option("--class", enum_class)->check(CLI::IsMember({"all", "L", "F"}));
  enum_cmd->add_option("--k", enum_k)->check(CLI::PositiveNumber);
  enum_cmd->add_option("--convention", enum_convention)->check(CLI::IsMember({"last", "first"}));

  // stat
  auto* stat_cmd = app.add_subcommand("stat", "Statistic of one overpartition");
  std::string stat_parts;
  int stat_r = 1;
  std::string stat_name = "mes";
  stat_cmd->add_option("--parts", stat_parts, "e.g. \"3~,1\"")->required();
  stat_cmd->add_option("--r", stat_r)->check(CLI::PositiveNumber);
  stat_cmd->add_option("--stat", stat_name)->check(CLI::IsMember({"mes", "maes", "conjugate", "lrs", "sprs"}));

  // basis
  auto* basis_cmd = app.add_subcommand("basis", "List basis elements with m parts");
  std::string basis_family = "BL";
  int basis_k = 1, basis_m = 1;
  bool basis_count = false;
  basis_cmd->add_option("--family", basis_family)->check(CLI::IsMember({"BL", "BF"}));
  basis_cmd->add_option("--k", basis_k)->check(CLI::PositiveNumber);
  basis_cmd->add_option("--m", basis_m)->required()->check(CLI::Range(1, 24));
  basis_cmd->add_flag("--count", basis_count, "Print only the number of elements");

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "Split into basis element plus padding");
  std::string decompose_parts;
  std::string decompose_family = "BL";
  int decompose_k = 1;
  decompose_cmd->add_option("--parts", decompose_parts)->required();
  decompose_cmd->add_option("--family", decompose_family)->check(CLI::IsMember({"BL", "BF"}));
  decompose_cmd->add_option("--k", decompose_k)->check(CLI::PositiveNumber);

  // table
  auto* table_cmd = app.add_subcommand("table", "Statistic of every overpartition of n");
  std::string table_stat = "mes";
  int table_r = 1, table_n = 0;
  bool table_nonzero = false;
  table_cmd->add_option("--stat", table_stat)->check(CLI::IsMember({"mes", "maes"}));
  table_cmd->add_option("--r", table_r)->check(CLI::PositiveNumber);
  table_cmd->add_option("--n", table_n)->required()->check(CLI::Range(0, kBruteForceGuard));
  table_cmd->add_flag("--nonzero", table_nonzero, "Skip rows whose value is 0");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (verify_cmd->parsed()) {
      if (identity.empty() == !all) throw detail::UsageError("verify needs exactly one of --identity or --all");
      const int trunc = trunc_opt ? *trunc_opt : default_trunc();
      const Readings readings{maes_factor == "omega" ? MaesFactor::Omega : MaesFactor::OmegaFirst,
                              repeat_tail == "printed" ? LargestRepeatTail::AsPrinted : LargestRepeatTail::Corrected};
      Params given;
      for (const auto& [name, slot] : param_opts)
        if (slot) given[name] = *slot;

      std::vector<detail::Job> jobs;
      if (all) {
        if (!given.empty()) throw detail::UsageError("--all takes no identity parameters");
        for (auto& [id, p] : default_grid()) jobs.push_back({id, std::nullopt, std::move(p)});
      } else if (identity == "Thm2_1" || identity == "Thm2_2") {
        Params p{{"n", given.count("n") ? given.at("n") : 4}, {"r", given.count("r") ? given.at("r") : 2}};
        for (const auto& [name, value] : given)
          if (name != "n" && name != "r") throw detail::UsageError(identity + ": unknown parameter '" + name + "'");
        jobs.push_back({std::nullopt, identity == "Thm2_1" ? Theorem::Thm2_1 : Theorem::Thm2_2, std::move(p)});
      } else {
        const auto id = parse_identity_id(identity);
        if (!id) throw detail::UsageError("unknown identity '" + identity + "'");
        jobs.push_back({*id, std::nullopt, normalize_params(*id, given)});
      }
      for (const auto& job : jobs) {
        if (job.theorem) continue;
        const int guard = identity_info(*job.id).max_trunc;
        if (trunc < 0 || trunc > guard)
          throw detail::UsageError(to_string(*job.id) + ": truncation " + std::to_string(trunc) + " outside [0, " +
                                   std::to_string(guard) + "]");
        normalize_params(*job.id, job.params);
      }

      // Independent checks fan out; results are collected in catalog order.
      std::vector<std::future<VerificationReport>> pending;
      pending.reserve(jobs.size());
      for (const auto& job : jobs)
        pending.push_back(std::async(std::launch::async, detail::run_job, job, trunc, readings));
      std::vector<VerificationReport> reports;
      reports.reserve(jobs.size());
      for (auto& f : pending) reports.push_back(f.get());

      const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
      if (format == "json") {
        if (all) {
          nlohmann::ordered_json arr = nlohmann::ordered_json::array();
          for (const auto& r : reports) arr.push_back(to_json(r));
          out << arr.dump(2) << '\n';
        } else {
          out << to_json(reports.front()).dump(2) << '\n';
        }
      } else if (format == "tsv") {
        out << "identity\tparams\ttrunc\tstatus\tmismatches\n";
        for (const auto& r : reports) detail::write_report_tsv(out, r);
      } else {
        for (const auto& r : reports) detail::write_report_text(out, r);
        if (all) {
          const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
          out << passed << '/' << reports.size() << " passed\n";
        }
      }
      if (dump_series && !all && jobs.front().id) {
        const Sides sides = closed_form(*jobs.front().id, jobs.front().params, trunc, readings);
        if (sides.lhs) {
          out << "## lhs\n";
          dump(out, *sides.lhs);
        }
        out << "## rhs\n";
        dump(out, sides.rhs);
        if (const auto brute = brute_force(*jobs.front().id, jobs.front().params, trunc)) {
          out << "## brute force\n";
          dump(out, *brute);
        }
      }
      return ok ? kSuccess : kFailure;
    }

    if (enum_cmd->parsed()) {
      ClassTag tag = ClassTag::all();
      if (enum_class == "L") tag = ClassTag::L(enum_k);
      if (enum_class == "F") tag = ClassTag::F(enum_k);
      for (const Overpartition& pi : enumerate_class(enum_n, tag, detail::parse_convention(enum_convention)))
        out << to_string(pi) << '\n';
      return kSuccess;
    }

    if (stat_cmd->parsed()) {
      const Overpartition pi = parse_overpartition(stat_parts, Convention::LastOccurrence);
      if (stat_name == "mes") out << mes(pi, stat_r) << '\n';
      else if (stat_name == "maes") out << maes(pi, stat_r) << '\n';
      else if (stat_name == "conjugate") out << to_string(conjugate(pi)) << '\n';
      else if (stat_name == "lrs") out << largest_repeating_size(pi, stat_r) << '\n';
      else if (const auto j = smallest_positive_repeating_size(pi, stat_r)) out << *j << '\n';
      else out << "none\n";
      return kSuccess;
    }

    if (basis_cmd->parsed()) {
      const Family family = detail::parse_family(basis_family);
      const auto elements = basis_elements(family, basis_k, basis_m);
      if (basis_count) {
        out << elements.size() << '\n';
      } else {
        for (const Overpartition& lam : elements) out << to_string(lam) << '\n';
      }
      return kSuccess;
    }

    if (decompose_cmd->parsed()) {
      const Family family = detail::parse_family(decompose_family);
      const Overpartition pi = parse_overpartition(decompose_parts, convention_of(family));
      const DecompositionWitness w = decompose(pi, family, decompose_k);
      std::vector<int> padding;
      std::copy_if(w.padding.begin(), w.padding.end(), std::back_inserter(padding), [](int x) { return x > 0; });
      out << to_string(w.basis) << '\n' << to_string(Partition(padding)) << '\n';
      return kSuccess;
    }

    if (table_cmd->parsed()) {
      for (const Overpartition& pi : table_order(table_n)) {
        const int value = table_stat == "mes" ? mes(pi, table_r) : maes(pi, table_r);
        if (table_nonzero && value == 0) continue;
        out << to_string(pi) << '\t' << value << '\n';
      }
      return kSuccess;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace qpl::cli
