#ifndef SEMIRAD_JSON_IO_HPP
#define SEMIRAD_JSON_IO_HPP

// Structured output. Objects use nlohmann::json's default std::map storage, so
// keys are always emitted in sorted order; member sets are arrays of canonical
// representative vectors in ascending order.

#include <algorithm>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semirad/instance.hpp"
#include "semirad/module.hpp"
#include "semirad/predicates.hpp"

namespace semirad::json_io {

using nlohmann::json;

namespace detail {

inline bool is_flat(const json& j) {
  if (!j.is_array()) return false;
  return std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
}

inline void render(const json& j, std::string& out, std::size_t depth) {
  const std::string pad(2 * depth + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + json(it.key()).dump() + ": ";
      render(it.value(), out, depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * depth, ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      render(j[i], out, depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * depth, ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace detail

/// Indented JSON with sorted keys; arrays of scalars (vectors, ideals) stay on one line.
inline std::string render(const json& j) {
  std::string out;
  detail::render(j, out, 0);
  return out + "\n";
}

inline json element(const ModulePresentation& M, ElementId e) {
  const auto v = M.representative(e);
  return json(std::vector<Scalar>(v.begin(), v.end()));
}

inline json elements(const ModulePresentation& M, const std::vector<ElementId>& es) {
  json out = json::array();
  for (auto e : es) out.push_back(element(M, e));
  return out;
}

inline json members(const Submodule& N) { return elements(N.module(), N.members()); }

inline json vectors(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

inline std::vector<Vector> vectors_from(const json& j) {
  std::vector<Vector> out;
  for (const auto& v : j) out.push_back(v.get<Vector>());
  return out;
}

/// Generators of N as representative vectors.
inline std::vector<Vector> generator_vectors(const Submodule& N) {
  std::vector<Vector> out;
  for (auto g : N.generators()) {
    const auto v = N.module().representative(g);
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

inline json module(const ModulePresentation& M) {
  return {{"ring", M.ring().name()}, {"rank", M.rank()}, {"relations", vectors(M.relations())}, {"size", M.size()}};
}

inline json witness(const ModulePresentation& M, const PredicateWitness& w) {
  json j = {{"notion", std::string(to_string(w.notion))}};
  if (w.not_proper) {
    j["not_proper"] = true;
    return j;
  }
  j["element"] = element(M, w.element);
  if (w.scalar) j["scalar"] = *w.scalar;
  if (w.notion == Notion::Semiprime) {
    j["colon"] = w.colon;
    j["colon_times_module"] = elements(M, w.colon_times_module);
  }
  if (w.notion == Notion::Cimpric) j["coordinates"] = w.colon;
  return j;
}

inline PredicateWitness witness_from(const ModulePresentation& M, const json& j) {
  PredicateWitness w;
  const auto notion = j.at("notion").get<std::string>();
  if (notion == "prime") w.notion = Notion::Prime;
  else if (notion == "semiprime") w.notion = Notion::Semiprime;
  else if (notion == "dauns") w.notion = Notion::Dauns;
  else if (notion == "cimpric") w.notion = Notion::Cimpric;
  else throw std::invalid_argument("unknown notion '" + notion + "'");
  if (j.value("not_proper", false)) {
    w.not_proper = true;
    return w;
  }
  w.element = M.reduce(j.at("element").get<Vector>());
  if (j.contains("scalar")) w.scalar = j.at("scalar").get<Scalar>();
  if (j.contains("colon")) w.colon = j.at("colon").get<std::vector<Scalar>>();
  if (j.contains("coordinates")) w.colon = j.at("coordinates").get<std::vector<Scalar>>();
  if (j.contains("colon_times_module"))
    for (const auto& v : j.at("colon_times_module")) w.colon_times_module.push_back(M.reduce(v.get<Vector>()));
  return w;
}

}  // namespace semirad::json_io

#endif  // SEMIRAD_JSON_IO_HPP
