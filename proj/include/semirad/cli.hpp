#ifndef SEMIRAD_CLI_HPP
#define SEMIRAD_CLI_HPP

// Command dispatch for the `semirad` tool. Every command renders either a
// human-readable report or a structured (JSON, sorted keys) one.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semirad/bounds.hpp"
#include "semirad/instance.hpp"
#include "semirad/json_io.hpp"
#include "semirad/predicates.hpp"
#include "semirad/radical.hpp"
#include "semirad/verify.hpp"

namespace semirad::cli {

enum class Format { Text, Structured };

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimsFailed = 1;
inline constexpr int kExitInputError = 2;

inline const std::vector<std::string>& instance_commands() {
  static const std::vector<std::string> names = {"check-semiprime", "check-prime", "check-dauns", "check-cimpric",
                                                 "compare",         "radical",     "radical-trace", "primes"};
  return names;
}

struct CommandRequest {
  std::string command;
  std::string target;  // submodule name; optional for compare and primes
  Format format = Format::Text;
  Bounds bounds;
};

struct CommandResult {
  std::string output;
  std::string error;
  int exit_code = kExitOk;
};

namespace detail {

using nlohmann::json;

inline std::string dump(const json& j) { return json_io::render(j); }

inline std::string members_text(const Submodule& N) { return semirad::detail::members_text(N); }

inline std::string elements_text(const ModulePresentation& M, const std::vector<ElementId>& es) {
  std::string s = "{";
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) s += ", ";
    s += format_element(M, es[i]);
  }
  return s + "}";
}

inline std::string module_text(const ModulePresentation& M) {
  return semirad::detail::module_text(M) + " (" + std::to_string(M.size()) + " elements)";
}

inline json submodule_json(const std::string& name, const Submodule& N) {
  return {{"name", name}, {"members", json_io::members(N)}};
}

inline std::string witness_text(const ModulePresentation& M, const PredicateWitness& w) {
  if (w.not_proper) return "the submodule is the whole module";
  const auto& R = M.ring();
  const std::string m = format_element(M, w.element);
  switch (w.notion) {
    case Notion::Prime:
      return "r = " + format_scalar(R, *w.scalar) + ", m = " + m + ": r m is in N, m is not, and r M is not inside N";
    case Notion::Semiprime: {
      std::string colon = "{";
      for (std::size_t i = 0; i < w.colon.size(); ++i) colon += (i ? ", " : "") + format_scalar(R, w.colon[i]);
      colon += "}";
      return "m = " + m + ": (N:m) = " + colon + ", (N:m)M = " + elements_text(M, w.colon_times_module) +
             " contains m, but N does not";
    }
    case Notion::Dauns:
      return "r = " + format_scalar(R, *w.scalar) + ", m = " + m + ": r^2 m is in N, r m is not";
    case Notion::Cimpric:
      return "m = " + m + ": every coordinate multiple r_i m is in N, m is not";
  }
  return {};
}

inline Notion notion_of(const std::string& command) {
  if (command == "check-prime") return Notion::Prime;
  if (command == "check-semiprime") return Notion::Semiprime;
  if (command == "check-dauns") return Notion::Dauns;
  return Notion::Cimpric;
}

inline CommandResult check(const LoadedInstance& inst, const CommandRequest& req) {
  const auto& N = inst.submodule(req.target);
  const auto& M = inst.module;
  const Notion notion = notion_of(req.command);
  const auto v = check_notion(notion, N);
  if (req.format == Format::Structured) {
    json j = {{"command", req.command},
              {"module", json_io::module(M)},
              {"notion", std::string(to_string(notion))},
              {"submodule", submodule_json(req.target, N)},
              {"verdict", v.holds},
              {"witness", v.witness ? json_io::witness(M, *v.witness) : json(nullptr)}};
    return {dump(j), {}, kExitOk};
  }
  std::string s = "module: " + module_text(M) + "\n";
  s += req.target + " = " + members_text(N) + "\n";
  s += std::string(to_string(notion)) + ": " + (v.holds ? "true" : "false") + "\n";
  if (v.witness) s += "witness: " + witness_text(M, *v.witness) + "\n";
  return {s, {}, kExitOk};
}

inline CommandResult compare(const LoadedInstance& inst, const CommandRequest& req) {
  const auto& M = inst.module;
  auto rows = compare_notions(M, req.bounds.lattice_bound);
  if (!req.target.empty()) {
    const auto& N = inst.submodule(req.target);
    std::erase_if(rows, [&](const NotionRow& r) { return !(r.submodule == N); });
  }
  std::size_t contradictions = 0;
  for (const auto& r : rows) contradictions += r.contradicts;

  if (req.format == Format::Structured) {
    json list = json::array();
    for (const auto& r : rows) {
      json row = {{"members", json_io::members(r.submodule)},
                  {"prime", r.prime.holds},
                  {"semiprime", r.semiprime.holds},
                  {"dauns", r.dauns.holds},
                  {"cimpric", r.cimpric ? json(r.cimpric->holds) : json(nullptr)}};
      if (r.contradicts) row["flag"] = "CONTRADICTION";
      list.push_back(std::move(row));
    }
    json j = {{"command", req.command},
              {"module", json_io::module(M)},
              {"rows", std::move(list)},
              {"contradictions", contradictions}};
    return {dump(j), {}, kExitOk};
  }
  std::string s = "module: " + module_text(M) + "\n";
  s += "prime semiprime dauns cimpric  submodule\n";
  auto mark = [](bool b) { return std::string(b ? "  yes" : "   no"); };
  for (const auto& r : rows) {
    s += mark(r.prime.holds) + "     " + mark(r.semiprime.holds) + " " + mark(r.dauns.holds) + "    " +
         (r.cimpric ? mark(r.cimpric->holds) : std::string("    -")) + "  " + members_text(r.submodule);
    if (r.contradicts) s += "  CONTRADICTION";
    s += "\n";
  }
  s += std::to_string(rows.size()) + " submodules, " + std::to_string(contradictions) + " contradictions\n";
  return {s, {}, kExitOk};
}

inline CommandResult radical(const LoadedInstance& inst, const CommandRequest& req) {
  const auto& N = inst.submodule(req.target);
  const auto& M = inst.module;
  const auto [by_iteration, trace] = radical_by_iteration(N);

  std::optional<Submodule> by_primes, smallest;
  if (M.size() <= req.bounds.lattice_bound) {
    by_primes = radical_by_primes(N, req.bounds.lattice_bound);
    smallest = smallest_semiprime_over(N, req.bounds.lattice_bound);
  }
  const bool agree = !by_primes || (*by_primes == by_iteration && *smallest == by_iteration);
  const bool semiprime = is_semiprime_submodule(N).holds;

  if (req.format == Format::Structured) {
    json methods = {{"iteration", json_io::members(by_iteration)}};
    if (by_primes) {
      methods["primes"] = json_io::members(*by_primes);
      methods["smallest_semiprime"] = json_io::members(*smallest);
    } else {
      methods["skipped"] = "module exceeds the lattice bound (--lattice-bound)";
    }
    json j = {{"command", req.command},
              {"module", json_io::module(M)},
              {"submodule", submodule_json(req.target, N)},
              {"radical", json_io::members(by_iteration)},
              {"methods", std::move(methods)},
              {"methods_agree", agree},
              {"fixpoint_index", trace.fixpoint_index},
              {"proper", N.is_proper()},
              {"semiprime", semiprime},
              {"radical_submodule", by_iteration == N}};
    return {dump(j), {}, kExitOk};
  }
  std::string s = "module: " + module_text(M) + "\n";
  s += req.target + " = " + members_text(N) + "\n";
  s += "radical = " + members_text(by_iteration) + "\n";
  if (by_primes) {
    s += "  by primes:              " + members_text(*by_primes) + "\n";
    s += "  by iteration:           " + members_text(by_iteration) + " (fixpoint at step " +
         std::to_string(trace.fixpoint_index) + ")\n";
    s += "  smallest semiprime over: " + members_text(*smallest) + "\n";
    s += std::string("methods agree: ") + (agree ? "true" : "false") + "\n";
  } else {
    s += "  by iteration only; the module exceeds the lattice bound (--lattice-bound)\n";
  }
  s += std::string(req.target) + " is " + (semiprime ? "" : "not ") + "semiprime\n";
  return {s, {}, kExitOk};
}

inline CommandResult radical_trace(const LoadedInstance& inst, const CommandRequest& req) {
  const auto& N = inst.submodule(req.target);
  const auto& M = inst.module;
  const auto [rad, trace] = radical_by_iteration(N);

  if (req.format == Format::Structured) {
    json steps = json::array();
    for (const auto& st : trace.steps) {
      json witnesses = json::array();
      for (const auto& q : st.witnesses)
        witnesses.push_back({{"element", json_io::element(M, q.element)},
                             {"colon", q.colon.members()},
                             {"colon_times_module", json_io::members(q.colon_times_module)}});
      steps.push_back({{"index", st.index},
                       {"members", json_io::members(st.submodule)},
                       {"new_elements", json_io::elements(M, st.new_elements)},
                       {"witnesses", std::move(witnesses)}});
    }
    json j = {{"command", req.command},
              {"module", json_io::module(M)},
              {"submodule", submodule_json(req.target, N)},
              {"steps", std::move(steps)},
              {"fixpoint_index", trace.fixpoint_index},
              {"radical", json_io::members(rad)}};
    return {dump(j), {}, kExitOk};
  }
  std::string s = "module: " + module_text(M) + "\n";
  s += "N^(0) = " + members_text(N) + "\n";
  for (const auto& st : trace.steps) {
    s += "N^(" + std::to_string(st.index) + ") = " + members_text(st.submodule);
    s += st.new_elements.empty() ? "  (no change)\n" : "  new " + elements_text(M, st.new_elements) + "\n";
    for (const auto& q : st.witnesses) {
      s += "    " + format_element(M, q.element) + " lies in (N:m)M = " + members_text(q.colon_times_module) + "\n";
    }
  }
  s += "fixpoint at step " + std::to_string(trace.fixpoint_index) + ": radical = " + members_text(rad) + "\n";
  return {s, {}, kExitOk};
}

inline CommandResult primes(const LoadedInstance& inst, const CommandRequest& req) {
  const auto& M = inst.module;
  auto ps = prime_submodules(M, req.bounds.lattice_bound);
  if (!req.target.empty()) {
    const auto& N = inst.submodule(req.target);
    std::erase_if(ps, [&](const Submodule& P) { return !N.subset_of(P); });
  }
  if (req.format == Format::Structured) {
    json list = json::array();
    for (const auto& P : ps) list.push_back(json_io::members(P));
    json j = {{"command", req.command}, {"module", json_io::module(M)}, {"primes", std::move(list)},
              {"count", ps.size()}};
    if (!req.target.empty()) j["containing"] = submodule_json(req.target, inst.submodule(req.target));
    return {dump(j), {}, kExitOk};
  }
  std::string s = "module: " + module_text(M) + "\n";
  s += std::to_string(ps.size()) + " prime submodule" + (ps.size() == 1 ? "" : "s");
  if (!req.target.empty()) s += " containing " + req.target;
  s += "\n";
  for (const auto& P : ps) s += "  " + members_text(P) + "\n";
  return {s, {}, kExitOk};
}

}  // namespace detail

/// Runs one of instance_commands() against a parsed instance. Input and bound
/// errors become exit code 2 with a message; they are never thrown.
inline CommandResult run_command(const InstanceFile& instance, const CommandRequest& req) {
  const auto& known = instance_commands();
  if (std::find(known.begin(), known.end(), req.command) == known.end())
    return {{}, "unknown command '" + req.command + "'", kExitInputError};
  try {
    const bool needs_target = req.command.rfind("check-", 0) == 0 || req.command == "radical" ||
                              req.command == "radical-trace";
    if (needs_target && req.target.empty())
      return {{}, "command '" + req.command + "' needs a submodule name", kExitInputError};
    const auto inst = load_instance(instance, req.bounds);
    if (req.command.rfind("check-", 0) == 0) return detail::check(inst, req);
    if (req.command == "compare") return detail::compare(inst, req);
    if (req.command == "radical") return detail::radical(inst, req);
    if (req.command == "radical-trace") return detail::radical_trace(inst, req);
    return detail::primes(inst, req);
  } catch (const BoundExceeded& e) {
    return {{}, e.what(), kExitInputError};
  } catch (const ParseError& e) {
    return {{}, e.what(), kExitInputError};
  } catch (const std::invalid_argument& e) {
    return {{}, e.what(), kExitInputError};
  }
}

/// `verify`: exit 0 when every claim holds on the corpus, 1 otherwise.
inline CommandResult run_verify(const CorpusSpec& spec, Format format, bool timing = true) {
  try {
    const auto report = verify_all(spec);
    std::string out = format == Format::Structured ? detail::dump(to_json(report, timing)) : render_text(report, timing);
    return {std::move(out), {}, report.all_pass() ? kExitOk : kExitClaimsFailed};
  } catch (const BoundExceeded& e) {
    return {{}, e.what(), kExitInputError};
  } catch (const std::invalid_argument& e) {
    return {{}, e.what(), kExitInputError};
  }
}

}  // namespace semirad::cli

#endif  // SEMIRAD_CLI_HPP
