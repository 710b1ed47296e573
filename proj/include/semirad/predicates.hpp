#ifndef SEMIRAD_PREDICATES_HPP
#define SEMIRAD_PREDICATES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "semirad/module.hpp"
#include "semirad/ring.hpp"

// Throughout, "r m subset of N" for a single element m is read as r m in N.

namespace semirad {

enum class Notion { Prime, Semiprime, Dauns, Cimpric };

inline std::string_view to_string(Notion n) {
  switch (n) {
    case Notion::Prime: return "prime";
    case Notion::Semiprime: return "semiprime";
    case Notion::Dauns: return "dauns";
    case Notion::Cimpric: return "cimpric";
  }
  return "?";
}

/// The lexicographically first tuple violating a predicate, with the
/// intermediate sets needed to replay it.
struct PredicateWitness {
  Notion notion = Notion::Semiprime;
  bool not_proper = false;           // prime: P = M
  std::optional<Scalar> scalar;      // r, for prime and dauns
  ElementId element = 0;             // m
  std::vector<Scalar> colon;         // semiprime: (N:m).  cimpric: the coordinates of m.
  std::vector<ElementId> colon_times_module;  // semiprime: (N:m)M

  bool operator==(const PredicateWitness&) const = default;
};

struct Verdict {
  bool holds = true;
  std::optional<PredicateWitness> witness;

  explicit operator bool() const noexcept { return holds; }

  static Verdict pass() { return {}; }
  static Verdict fail(PredicateWitness w) { return {false, std::move(w)}; }
};

namespace detail {

// Memoizes I -> IM for one module; the number of distinct colon ideals is small.
class IdealAction {
 public:
  explicit IdealAction(ModulePresentation M) : module_(std::move(M)) {}

  const Submodule& operator()(const Ideal& I) {
    auto it = cache_.find(I.members());
    if (it == cache_.end()) it = cache_.emplace(I.members(), ideal_times_module(I, module_)).first;
    return it->second;
  }

 private:
  ModulePresentation module_;
  std::map<std::vector<Scalar>, Submodule> cache_;
};

// r M subset of P, for every r.
inline std::vector<bool> annihilates_into(const Submodule& P) {
  const auto& M = P.module();
  std::vector<bool> out(M.ring().size(), true);
  for (Scalar r = 0; r < M.ring().size(); ++r)
    for (ElementId x = 0; x < M.size(); ++x)
      if (!P.contains(M.scale(r, x))) {
        out[r] = false;
        break;
      }
  return out;
}

}  // namespace detail

/// P proper, and r m in P implies r M subset of P or m in P.
inline Verdict is_prime_submodule(const Submodule& P) {
  if (!P.is_proper()) {
    PredicateWitness w;
    w.notion = Notion::Prime;
    w.not_proper = true;
    return Verdict::fail(std::move(w));
  }
  const auto& M = P.module();
  const auto kills = detail::annihilates_into(P);
  for (Scalar r = 0; r < M.ring().size(); ++r) {
    if (kills[r]) continue;
    for (ElementId m = 0; m < M.size(); ++m) {
      if (P.contains(M.scale(r, m)) && !P.contains(m)) {
        PredicateWitness w;
        w.notion = Notion::Prime;
        w.scalar = r;
        w.element = m;
        return Verdict::fail(std::move(w));
      }
    }
  }
  return Verdict::pass();
}

/// m in (N:m)M implies m in N, for every m in M.
inline Verdict is_semiprime_submodule(const Submodule& N) {
  const auto& M = N.module();
  detail::IdealAction action(M);
  for (ElementId m = 0; m < M.size(); ++m) {
    if (N.contains(m)) continue;
    const Ideal colon = colon_ideal(N, m);
    const Submodule& spread = action(colon);
    if (spread.contains(m)) {
      PredicateWitness w;
      w.notion = Notion::Semiprime;
      w.element = m;
      w.colon = colon.members();
      w.colon_times_module = spread.members();
      return Verdict::fail(std::move(w));
    }
  }
  return Verdict::pass();
}

/// r^2 m in N implies r m in N.
inline Verdict is_dauns_semiprime(const Submodule& N) {
  const auto& M = N.module();
  const auto& R = M.ring();
  for (Scalar r = 0; r < R.size(); ++r) {
    const Scalar rr = R.mul(r, r);
    for (ElementId m = 0; m < M.size(); ++m) {
      if (N.contains(M.scale(rr, m)) && !N.contains(M.scale(r, m))) {
        PredicateWitness w;
        w.notion = Notion::Dauns;
        w.scalar = r;
        w.element = m;
        return Verdict::fail(std::move(w));
      }
    }
  }
  return Verdict::pass();
}

/// On R^g: for m = (r_1,...,r_g), r_i m in N for all i implies m in N.
inline Verdict is_cimpric_semiprime(const Submodule& N) {
  const auto& M = N.module();
  if (!M.is_free()) throw std::invalid_argument("the coordinate condition needs a free module (no relations)");
  for (ElementId m = 0; m < M.size(); ++m) {
    if (N.contains(m)) continue;
    const auto coords = M.representative(m);
    const bool all_in = std::all_of(coords.begin(), coords.end(), [&](Scalar r) { return N.contains(M.scale(r, m)); });
    if (all_in) {
      PredicateWitness w;
      w.notion = Notion::Cimpric;
      w.element = m;
      w.colon.assign(coords.begin(), coords.end());
      return Verdict::fail(std::move(w));
    }
  }
  return Verdict::pass();
}

inline Verdict check_notion(Notion notion, const Submodule& N) {
  switch (notion) {
    case Notion::Prime: return is_prime_submodule(N);
    case Notion::Semiprime: return is_semiprime_submodule(N);
    case Notion::Dauns: return is_dauns_semiprime(N);
    case Notion::Cimpric: return is_cimpric_semiprime(N);
  }
  throw std::invalid_argument("unknown notion");
}

/// True when the witness, evaluated against the literal definition on N,
/// exhibits a violation (and its recorded intermediate sets are exact).
inline bool witness_replays(const PredicateWitness& w, const Submodule& N) {
  const auto& M = N.module();
  const auto& R = M.ring();
  if (w.element >= M.size()) return false;
  const ElementId m = w.element;
  switch (w.notion) {
    case Notion::Prime: {
      if (w.not_proper) return !N.is_proper();
      if (!w.scalar || *w.scalar >= R.size()) return false;
      const Scalar r = *w.scalar;
      bool r_kills = true;
      for (ElementId x = 0; x < M.size() && r_kills; ++x) r_kills = N.contains(M.scale(r, x));
      return N.contains(M.scale(r, m)) && !r_kills && !N.contains(m);
    }
    case Notion::Semiprime: {
      std::vector<Scalar> colon;
      for (Scalar r = 0; r < R.size(); ++r)
        if (N.contains(M.scale(r, m))) colon.push_back(r);
      if (colon != w.colon) return false;
      const auto spread = ideal_times_module(Ideal::from_members(R, colon), M);
      return spread.members() == w.colon_times_module && spread.contains(m) && !N.contains(m);
    }
    case Notion::Dauns: {
      if (!w.scalar || *w.scalar >= R.size()) return false;
      const Scalar r = *w.scalar;
      return N.contains(M.scale(R.mul(r, r), m)) && !N.contains(M.scale(r, m));
    }
    case Notion::Cimpric: {
      if (!M.is_free()) return false;
      const auto coords = M.representative(m);
      if (!std::equal(coords.begin(), coords.end(), w.colon.begin(), w.colon.end())) return false;
      const bool all_in = std::all_of(coords.begin(), coords.end(), [&](Scalar r) { return N.contains(M.scale(r, m)); });
      return all_in && !N.contains(m);
    }
  }
  return false;
}

struct NotionRow {
  Submodule submodule;
  Verdict prime;
  Verdict semiprime;
  Verdict dauns;
  std::optional<Verdict> cimpric;  // free modules only
  bool contradicts = false;
};

/// All notions on every submodule of M. A row contradicts when prime does not
/// imply semiprime, semiprime does not imply dauns, or (free case) semiprime
/// and the coordinate condition disagree.
inline std::vector<NotionRow> compare_notions(const ModulePresentation& M,
                                              std::size_t lattice_bound = kDefaultLatticeBound) {
  std::vector<NotionRow> rows;
  for (auto& N : enumerate_submodules(M, lattice_bound)) {
    NotionRow row{N, is_prime_submodule(N), is_semiprime_submodule(N), is_dauns_semiprime(N), std::nullopt, false};
    if (M.is_free()) row.cimpric = is_cimpric_semiprime(N);
    row.contradicts = (row.prime.holds && !row.semiprime.holds) || (row.semiprime.holds && !row.dauns.holds) ||
                      (row.cimpric && row.cimpric->holds != row.semiprime.holds);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace semirad

#endif  // SEMIRAD_PREDICATES_HPP
