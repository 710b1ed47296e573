#ifndef SEMIRAD_TESTS_TEST_CORPUS_HPP
#define SEMIRAD_TESTS_TEST_CORPUS_HPP

#include <vector>

#include "semirad/module.hpp"

namespace testing_corpus {

using namespace semirad;

inline ElementId el(const ModulePresentation& M, std::initializer_list<Scalar> v) { return M.reduce(Vector(v)); }

inline Submodule span_of(const ModulePresentation& M, std::initializer_list<Vector> gens) {
  std::vector<ElementId> ids;
  for (const auto& v : gens) ids.push_back(M.reduce(v));
  return Submodule::generate(M, ids);
}

inline std::vector<Vector> vectors_of(const Submodule& N) {
  std::vector<Vector> out;
  for (auto e : N.members()) {
    const auto v = N.module().representative(e);
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

// A spread of free modules and quotients, all small enough for literal oracles.
inline std::vector<ModulePresentation> modules() {
  const auto z2 = make_zn(2), z3 = make_zn(3), z4 = make_zn(4), z6 = make_zn(6), z8 = make_zn(8),
             z9 = make_zn(9), z12 = make_zn(12);
  const auto gf4 = make_gf(2, 2, {1, 1, 1});
  const std::vector<FiniteRing> parts{make_zn(2), make_zn(4)};
  const auto z2z4 = make_product(parts);
  return {
      free_module(z2, 0),  free_module(z2, 1),  free_module(z2, 2),  free_module(z3, 2),
      free_module(z4, 1),  free_module(z4, 2),  free_module(z6, 1),  free_module(z6, 2),
      free_module(z8, 1),  free_module(z9, 1),  free_module(z12, 1), free_module(gf4, 2),
      free_module(z2z4, 1),
      ModulePresentation(z4, 2, {{2, 0}}),
      ModulePresentation(z4, 2, {{1, 2}}),
      ModulePresentation(z8, 2, {{2, 4}}),
      ModulePresentation(z8, 2, {{0, 4}, {2, 2}}),
      ModulePresentation(z12, 2, {{2, 4}}),
      ModulePresentation(z12, 2, {{3, 0}, {0, 4}}),
      ModulePresentation(z9, 2, {{3, 3}}),
      ModulePresentation(z2z4, 2, {{1, 2}}),
  };
}

}  // namespace testing_corpus

#endif  // SEMIRAD_TESTS_TEST_CORPUS_HPP
