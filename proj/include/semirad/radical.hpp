#ifndef SEMIRAD_RADICAL_HPP
#define SEMIRAD_RADICAL_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "semirad/module.hpp"
#include "semirad/predicates.hpp"

namespace semirad {

/// An element m with m in (N:m)M, together with the two sets that show it.
struct QualifyingElement {
  ElementId element;
  Ideal colon;
  Submodule colon_times_module;
};

struct RadicalStep {
  std::size_t index = 0;                     // i, for N^(i)
  Submodule submodule;                       // N^(i)
  std::vector<ElementId> new_elements;       // N^(i) \ N^(i-1)
  std::vector<QualifyingElement> witnesses;  // qualifying m outside N^(i-1)
};

/// N = N^(0) <= N^(1) <= ... <= N^(k), where k is the first index with
/// N^(k) = N^(k-1).
struct RadicalTrace {
  Submodule start;
  std::vector<RadicalStep> steps;
  std::size_t fixpoint_index = 0;
};

struct IterationResult {
  Submodule radical;
  RadicalTrace trace;
};

namespace detail {

inline std::vector<QualifyingElement> qualifying_elements(const Submodule& N, IdealAction& action) {
  const auto& M = N.module();
  std::vector<QualifyingElement> out;
  for (ElementId m = 0; m < M.size(); ++m) {
    Ideal colon = colon_ideal(N, m);
    const Submodule& spread = action(colon);
    if (spread.contains(m)) out.push_back({m, std::move(colon), spread});
  }
  return out;
}

inline Submodule generated_by(const Submodule& N, const std::vector<QualifyingElement>& qualifying) {
  std::vector<ElementId> gens;
  gens.reserve(qualifying.size());
  for (const auto& q : qualifying) gens.push_back(q.element);
  return Submodule::generate(N.module(), gens);
}

}  // namespace detail

/// N^(1): the submodule generated by every m with m in (N:m)M.
inline Submodule first_radical(const Submodule& N) {
  detail::IdealAction action(N.module());
  return detail::generated_by(N, detail::qualifying_elements(N, action));
}

/// Iterates the first radical to its fixpoint, recording each step. The
/// fixpoint is asserted to be semiprime.
inline IterationResult radical_by_iteration(const Submodule& N) {
  const auto& M = N.module();
  detail::IdealAction action(M);
  RadicalTrace trace{N, {}, 0};
  Submodule current = N;
  for (std::size_t i = 1;; ++i) {
    auto qualifying = detail::qualifying_elements(current, action);
    Submodule next = detail::generated_by(current, qualifying);

    RadicalStep step{i, next, {}, {}};
    for (ElementId e : next.members())
      if (!current.contains(e)) step.new_elements.push_back(e);
    for (auto& q : qualifying)
      if (!current.contains(q.element)) step.witnesses.push_back(std::move(q));
    trace.steps.push_back(std::move(step));

    if (next == current) {
      trace.fixpoint_index = i;
      break;
    }
    if (!current.subset_of(next)) throw std::logic_error("first radical chain is not increasing");
    current = std::move(next);
  }
  if (!is_semiprime_submodule(current)) throw std::logic_error("first radical fixpoint is not semiprime");
  return {std::move(current), std::move(trace)};
}

/// The prime members of a lattice.
inline std::vector<Submodule> prime_submodules(std::span<const Submodule> lattice) {
  std::vector<Submodule> out;
  for (const auto& P : lattice)
    if (is_prime_submodule(P)) out.push_back(P);
  return out;
}

inline std::vector<Submodule> prime_submodules(const ModulePresentation& M,
                                               std::size_t lattice_bound = kDefaultLatticeBound) {
  const auto lattice = enumerate_submodules(M, lattice_bound);
  return prime_submodules(lattice);
}

/// Intersection of the members of `family` containing N; M when none does.
inline Submodule intersection_over(const Submodule& N, std::span<const Submodule> family) {
  std::vector<Submodule> above;
  for (const auto& P : family)
    if (N.subset_of(P)) above.push_back(P);
  return intersect_all(N.module(), above);
}

/// Intersection of all prime submodules containing N, given the primes of M.
inline Submodule radical_by_primes(const Submodule& N, std::span<const Submodule> primes) {
  return intersection_over(N, primes);
}

inline Submodule radical_by_primes(const Submodule& N, std::size_t lattice_bound = kDefaultLatticeBound) {
  const auto primes = prime_submodules(N.module(), lattice_bound);
  return radical_by_primes(N, primes);
}

/// Intersection of all semiprime submodules containing N, given the semiprime
/// submodules of M (M itself is always among them).
inline Submodule smallest_semiprime_over(const Submodule& N, std::span<const Submodule> semiprimes) {
  Submodule result = intersection_over(N, semiprimes);
  if (!is_semiprime_submodule(result)) throw std::logic_error("intersection of semiprime submodules is not semiprime");
  return result;
}

inline Submodule smallest_semiprime_over(const Submodule& N, std::size_t lattice_bound = kDefaultLatticeBound) {
  std::vector<Submodule> semiprimes;
  for (auto& S : enumerate_submodules(N.module(), lattice_bound))
    if (is_semiprime_submodule(S)) semiprimes.push_back(std::move(S));
  return smallest_semiprime_over(N, semiprimes);
}

/// True when every recorded step witness satisfies m in (N^(i-1):m)M on the
/// member sets, the chain increases, and the last step repeats its predecessor.
inline bool trace_replays(const RadicalTrace& trace) {
  if (trace.steps.empty() || trace.fixpoint_index != trace.steps.size()) return false;
  const auto& M = trace.start.module();
  if (trace.fixpoint_index > M.size()) return false;
  const Submodule* previous = &trace.start;
  for (const auto& step : trace.steps) {
    if (!previous->subset_of(step.submodule)) return false;
    for (const auto& q : step.witnesses) {
      if (!(colon_ideal(*previous, q.element) == q.colon)) return false;
      if (!(ideal_times_module(q.colon, M) == q.colon_times_module)) return false;
      if (!q.colon_times_module.contains(q.element) || !step.submodule.contains(q.element)) return false;
    }
    previous = &step.submodule;
  }
  const auto& last = trace.steps.back().submodule;
  const auto& before = trace.steps.size() > 1 ? trace.steps[trace.steps.size() - 2].submodule : trace.start;
  return last == before;
}

}  // namespace semirad

#endif  // SEMIRAD_RADICAL_HPP
