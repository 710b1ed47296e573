#ifndef SEMIRAD_MODULE_HPP
#define SEMIRAD_MODULE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semirad/bounds.hpp"
#include "semirad/detail/span.hpp"
#include "semirad/ring.hpp"

namespace semirad {

/// A coordinate vector in R^g.
using Vector = std::vector<Scalar>;
/// Index of a module element; elements are numbered in ascending order of
/// their canonical representatives, so the zero element is always 0.
using ElementId = std::uint32_t;

namespace detail {

// Operation tables are materialized only below this many entries.
inline constexpr std::size_t kTableEntryLimit = std::size_t{1} << 20;

struct ModuleData {
  FiniteRing ring;
  std::size_t rank = 0;
  std::vector<Vector> relations;

  std::size_t ambient = 1;                    // |R|^g
  std::size_t relation_count = 1;             // |K|
  std::vector<ElementId> class_of;            // ambient code -> element
  std::vector<std::uint32_t> rep;             // element -> ambient code of its representative
  std::vector<Scalar> digits;                 // element * rank + i
  std::vector<ElementId> basis;               // images of the coordinate vectors
  std::vector<ElementId> add_table;           // optional, a * count + b
  std::vector<ElementId> scale_table;         // optional, r * count + a
  std::vector<ElementId> neg;

  explicit ModuleData(FiniteRing r) : ring(std::move(r)) {}

  // Ambient codes are base-|R| with the first coordinate most significant, so
  // numeric order on codes is lexicographic order on vectors.
  std::uint32_t encode(std::span<const Scalar> v) const {
    std::uint32_t code = 0;
    for (Scalar c : v) code = static_cast<std::uint32_t>(code * ring.size() + c);
    return code;
  }
  void decode(std::uint32_t code, std::span<Scalar> out) const {
    for (std::size_t i = rank; i-- > 0;) {
      out[i] = static_cast<Scalar>(code % ring.size());
      code /= static_cast<std::uint32_t>(ring.size());
    }
  }
  std::uint32_t ambient_add(std::uint32_t u, std::uint32_t v) const {
    std::uint32_t code = 0, place = 1;
    const auto n = static_cast<std::uint32_t>(ring.size());
    for (std::size_t i = 0; i < rank; ++i) {
      code += ring.add(u % n, v % n) * place;
      u /= n;
      v /= n;
      place *= n;
    }
    return code;
  }
  std::uint32_t ambient_scale(Scalar r, std::uint32_t u) const {
    std::uint32_t code = 0, place = 1;
    const auto n = static_cast<std::uint32_t>(ring.size());
    for (std::size_t i = 0; i < rank; ++i) {
      code += ring.mul(r, u % n) * place;
      u /= n;
      place *= n;
    }
    return code;
  }
};

}  // namespace detail

/// A finitely presented module M = R^g / K, where K is generated by `relations`.
/// Every element is enumerated up front together with its lexicographically
/// least coset representative. Copies share the same data; two presentations
/// are the same module only if one is a copy of the other.
class ModulePresentation {
 public:
  ModulePresentation(FiniteRing ring, std::size_t rank, std::vector<Vector> relations = {},
                     std::size_t element_bound = kDefaultElementBound) {
    auto d = std::make_shared<detail::ModuleData>(std::move(ring));
    d->rank = rank;
    const std::size_t n = d->ring.size();

    std::size_t ambient = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      if (ambient > std::numeric_limits<std::uint32_t>::max() / n) {
        ambient = std::numeric_limits<std::size_t>::max();
        break;
      }
      ambient *= n;
    }
    if (ambient > element_bound) throw BoundExceeded("element bound", "--element-bound", element_bound, ambient);
    d->ambient = ambient;

    for (const auto& v : relations) {
      if (v.size() != rank)
        throw std::invalid_argument("relation has " + std::to_string(v.size()) + " coordinates, module rank is " +
                                    std::to_string(rank));
      for (Scalar c : v)
        if (!d->ring.contains(c))
          throw std::invalid_argument("scalar " + std::to_string(c) + " is not an element of " + d->ring.name());
    }
    d->relations = std::move(relations);

    const detail::ModuleData& cd = *d;
    detail::SpanBuilder k_span(
        ambient, n, [&cd](std::uint32_t u, std::uint32_t v) { return cd.ambient_add(u, v); },
        [&cd](Scalar r, std::uint32_t u) { return cd.ambient_scale(r, u); });
    for (const auto& v : d->relations) k_span.absorb(d->encode(v));
    const auto k_members = k_span.sorted_members();
    d->relation_count = k_members.size();

    constexpr ElementId unset = std::numeric_limits<ElementId>::max();
    d->class_of.assign(ambient, unset);
    for (std::uint32_t v = 0; v < ambient; ++v) {
      if (d->class_of[v] != unset) continue;
      const auto id = static_cast<ElementId>(d->rep.size());
      d->rep.push_back(v);
      for (auto k : k_members) d->class_of[d->ambient_add(v, k)] = id;
    }

    const std::size_t count = d->rep.size();
    d->digits.resize(count * rank);
    for (std::size_t e = 0; e < count; ++e)
      d->decode(d->rep[e], std::span<Scalar>(d->digits.data() + e * rank, rank));

    Vector unit(rank, 0);
    for (std::size_t i = 0; i < rank; ++i) {
      unit.assign(rank, 0);
      unit[i] = d->ring.one();
      d->basis.push_back(d->class_of[d->encode(unit)]);
    }

    d->neg.resize(count);
    const Scalar minus_one = d->ring.neg(d->ring.one());
    for (std::size_t e = 0; e < count; ++e) d->neg[e] = d->class_of[d->ambient_scale(minus_one, d->rep[e])];

    if (count * count <= detail::kTableEntryLimit) {
      d->add_table.resize(count * count);
      for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b)
          d->add_table[a * count + b] = d->class_of[d->ambient_add(d->rep[a], d->rep[b])];
    }
    if (count * n <= detail::kTableEntryLimit) {
      d->scale_table.resize(count * n);
      for (Scalar r = 0; r < n; ++r)
        for (std::size_t a = 0; a < count; ++a)
          d->scale_table[r * count + a] = d->class_of[d->ambient_scale(r, d->rep[a])];
    }
    d_ = std::move(d);
  }

  const FiniteRing& ring() const noexcept { return d_->ring; }
  std::size_t rank() const noexcept { return d_->rank; }
  const std::vector<Vector>& relations() const noexcept { return d_->relations; }
  /// |M|
  std::size_t size() const noexcept { return d_->rep.size(); }
  /// |R|^g
  std::size_t ambient_size() const noexcept { return d_->ambient; }
  /// |K|
  std::size_t relation_size() const noexcept { return d_->relation_count; }
  /// K = 0, i.e. M is literally R^g.
  bool is_free() const noexcept { return d_->relation_count == 1; }

  ElementId zero() const noexcept { return 0; }

  ElementId add(ElementId a, ElementId b) const {
    if (!d_->add_table.empty()) return d_->add_table[a * size() + b];
    return d_->class_of[d_->ambient_add(d_->rep[a], d_->rep[b])];
  }
  ElementId neg(ElementId a) const { return d_->neg[a]; }
  ElementId sub(ElementId a, ElementId b) const { return add(a, neg(b)); }
  ElementId scale(Scalar r, ElementId a) const {
    if (!d_->scale_table.empty()) return d_->scale_table[r * size() + a];
    return d_->class_of[d_->ambient_scale(r, d_->rep[a])];
  }

  /// Canonical representative vector of an element.
  std::span<const Scalar> representative(ElementId e) const {
    return {d_->digits.data() + std::size_t{e} * d_->rank, d_->rank};
  }

  /// The element whose coset contains v.
  ElementId reduce(std::span<const Scalar> v) const {
    if (v.size() != rank())
      throw std::invalid_argument("vector has " + std::to_string(v.size()) + " coordinates, module rank is " +
                                  std::to_string(rank()));
    for (Scalar c : v)
      if (!ring().contains(c))
        throw std::invalid_argument("scalar " + std::to_string(c) + " is not an element of " + ring().name());
    return d_->class_of[d_->encode(v)];
  }

  /// v in K.
  bool in_relations(std::span<const Scalar> v) const { return reduce(v) == 0; }

  /// Images of the coordinate vectors e_1..e_g; they generate M.
  const std::vector<ElementId>& basis() const noexcept { return d_->basis; }

  friend bool operator==(const ModulePresentation& a, const ModulePresentation& b) { return a.d_ == b.d_; }

 private:
  std::shared_ptr<const detail::ModuleData> d_;
};

/// R^g with no relations.
inline ModulePresentation free_module(const FiniteRing& ring, std::size_t rank,
                                      std::size_t element_bound = kDefaultElementBound) {
  return ModulePresentation(ring, rank, {}, element_bound);
}

/// `(0,2)`, with GF scalars shown as coefficient tuples.
inline std::string format_element(const ModulePresentation& M, ElementId e) {
  std::string s = "(";
  const auto v = M.representative(e);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_scalar(M.ring(), v[i]);
  }
  return s + ")";
}

namespace detail {
inline auto submodule_span(const ModulePresentation& M) {
  return SpanBuilder(
      M.size(), M.ring().size(), [&M](ElementId a, ElementId b) { return M.add(a, b); },
      [&M](Scalar r, ElementId a) { return M.scale(r, a); });
}
}  // namespace detail

/// A submodule stored by its full member set plus the generators that produced it.
class Submodule {
 public:
  /// Closure of `gens` and zero under addition and scalar action.
  static Submodule generate(const ModulePresentation& M, std::span<const ElementId> gens) {
    auto span = detail::submodule_span(M);
    for (ElementId g : gens) {
      check_element(M, g);
      span.absorb(g);
    }
    return Submodule(M, span.sorted_members(), std::vector<ElementId>(gens.begin(), gens.end()));
  }

  /// Wraps a member set that must already be a submodule, choosing generators
  /// greedily in ascending order. Throws std::logic_error otherwise.
  static Submodule from_members(const ModulePresentation& M, std::vector<ElementId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto span = detail::submodule_span(M);
    std::vector<ElementId> gens;
    for (ElementId x : members) {
      check_element(M, x);
      if (span.absorb(x)) gens.push_back(x);
    }
    auto closed = span.sorted_members();
    if (closed != members) throw std::logic_error("member set is not a submodule");
    return Submodule(M, std::move(closed), std::move(gens));
  }

  static Submodule zero(const ModulePresentation& M) { return generate(M, {}); }
  static Submodule whole(const ModulePresentation& M) { return generate(M, M.basis()); }

  const ModulePresentation& module() const noexcept { return module_; }
  const std::vector<ElementId>& members() const noexcept { return members_; }
  const std::vector<ElementId>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(ElementId e) const { return e < mask_.size() && mask_[e]; }
  bool is_proper() const noexcept { return members_.size() < module_.size(); }
  bool is_zero() const noexcept { return members_.size() == 1; }

  bool subset_of(const Submodule& other) const {
    if (size() > other.size()) return false;
    return std::all_of(members_.begin(), members_.end(), [&](ElementId e) { return other.contains(e); });
  }

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.module_ == b.module_ && a.members_ == b.members_;
  }

 private:
  Submodule(ModulePresentation M, std::vector<ElementId> members, std::vector<ElementId> gens)
      : module_(std::move(M)), members_(std::move(members)), generators_(std::move(gens)), mask_(module_.size(), false) {
    for (ElementId e : members_) mask_[e] = true;
  }

  static void check_element(const ModulePresentation& M, ElementId e) {
    if (e >= M.size())
      throw std::invalid_argument("element " + std::to_string(e) + " is not in a module of size " +
                                  std::to_string(M.size()));
  }

  ModulePresentation module_;
  std::vector<ElementId> members_;
  std::vector<ElementId> generators_;
  std::vector<bool> mask_;
};

/// Lattice order used for listings: by size, then by member list.
inline bool listing_order(const Submodule& a, const Submodule& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

inline Submodule submodule_generate(const ModulePresentation& M, std::span<const ElementId> gens) {
  return Submodule::generate(M, gens);
}

inline bool contains(const Submodule& N, ElementId m) { return N.contains(m); }

namespace detail {
inline void require_same_module(const Submodule& a, const Submodule& b) {
  if (!(a.module() == b.module())) throw std::invalid_argument("submodules belong to different modules");
}
}  // namespace detail

inline Submodule intersect(const Submodule& a, const Submodule& b) {
  detail::require_same_module(a, b);
  std::vector<ElementId> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(common));
  return Submodule::from_members(a.module(), std::move(common));
}

/// Intersection of a family; the whole module for an empty family.
inline Submodule intersect_all(const ModulePresentation& M, std::span<const Submodule> family) {
  if (family.empty()) return Submodule::whole(M);
  Submodule acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = intersect(acc, family[i]);
  return acc;
}

/// Smallest submodule containing both.
inline Submodule join(const Submodule& a, const Submodule& b) {
  detail::require_same_module(a, b);
  std::vector<ElementId> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Submodule::generate(a.module(), gens);
}

/// (N:m) = {r in R : r m in N}.
inline Ideal colon_ideal(const Submodule& N, ElementId m) {
  const auto& M = N.module();
  std::vector<Scalar> members;
  for (Scalar r = 0; r < M.ring().size(); ++r)
    if (N.contains(M.scale(r, m))) members.push_back(r);
  return Ideal::from_members(M.ring(), std::move(members));
}

/// (N:M) = {r in R : r M subset of N}. Checked on the coordinate generators,
/// which suffices because N is closed under the module operations.
inline Ideal colon_module(const Submodule& N) {
  const auto& M = N.module();
  std::vector<Scalar> members;
  for (Scalar r = 0; r < M.ring().size(); ++r) {
    const bool kills = std::all_of(M.basis().begin(), M.basis().end(),
                                   [&](ElementId e) { return N.contains(M.scale(r, e)); });
    if (kills) members.push_back(r);
  }
  return Ideal::from_members(M.ring(), std::move(members));
}

/// IM, generated by r e_i for the generators r of I.
inline Submodule ideal_times_module(const Ideal& I, const ModulePresentation& M) {
  if (!(I.ring() == M.ring())) throw std::invalid_argument("ideal and module are over different rings");
  std::vector<ElementId> gens;
  for (Scalar r : I.generators())
    for (ElementId e : M.basis()) gens.push_back(M.scale(r, e));
  return Submodule::generate(M, gens);
}

/// Every submodule of M exactly once, in listing order. Built by closing the
/// zero submodule under joins with cyclic submodules.
inline std::vector<Submodule> enumerate_submodules(const ModulePresentation& M,
                                                   std::size_t lattice_bound = kDefaultLatticeBound) {
  if (M.size() > lattice_bound) throw BoundExceeded("lattice bound", "--lattice-bound", lattice_bound, M.size());

  std::vector<Submodule> cyclic;
  std::set<std::vector<ElementId>> seen_cyclic;
  for (ElementId x = 1; x < M.size(); ++x) {
    auto C = Submodule::generate(M, std::span<const ElementId>(&x, 1));
    if (seen_cyclic.insert(C.members()).second) cyclic.push_back(std::move(C));
  }

  std::vector<Submodule> found{Submodule::zero(M)};
  std::set<std::vector<ElementId>> seen{found.front().members()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& C : cyclic) {
      if (C.subset_of(found[i])) continue;
      auto T = join(found[i], C);
      if (seen.insert(T.members()).second) found.push_back(std::move(T));
    }
  }
  std::sort(found.begin(), found.end(), listing_order);
  return found;
}

/// M / M' together with the maps relating the two lattices.
class QuotientModule {
 public:
  explicit QuotientModule(const Submodule& sub, std::size_t element_bound = kDefaultElementBound)
      : source_(sub.module()), quotient_(make_quotient(sub, element_bound)) {
    forward_.resize(source_.size());
    for (ElementId e = 0; e < source_.size(); ++e) forward_[e] = quotient_.reduce(source_.representative(e));
  }

  const ModulePresentation& source() const noexcept { return source_; }
  const ModulePresentation& quotient() const noexcept { return quotient_; }

  /// Coset of an element of M.
  ElementId forward(ElementId e) const { return forward_[e]; }

  /// N / M' (for N containing M'; in general the image N + M' / M').
  Submodule image(const Submodule& N) const {
    if (!(N.module() == source_)) throw std::invalid_argument("submodule is not in the source module");
    std::vector<ElementId> members;
    members.reserve(N.size());
    for (ElementId e : N.members()) members.push_back(forward_[e]);
    return Submodule::from_members(quotient_, std::move(members));
  }

  /// Full preimage in M of a submodule of M/M'.
  Submodule preimage(const Submodule& S) const {
    if (!(S.module() == quotient_)) throw std::invalid_argument("submodule is not in the quotient module");
    std::vector<ElementId> members;
    for (ElementId e = 0; e < source_.size(); ++e)
      if (S.contains(forward_[e])) members.push_back(e);
    return Submodule::from_members(source_, std::move(members));
  }

 private:
  static ModulePresentation make_quotient(const Submodule& sub, std::size_t element_bound) {
    const auto& M = sub.module();
    std::vector<Vector> relations = M.relations();
    for (ElementId g : sub.generators()) {
      const auto v = M.representative(g);
      relations.emplace_back(v.begin(), v.end());
    }
    return ModulePresentation(M.ring(), M.rank(), std::move(relations), element_bound);
  }

  ModulePresentation source_;
  ModulePresentation quotient_;
  std::vector<ElementId> forward_;
};

inline QuotientModule quotient_module(const Submodule& sub, std::size_t element_bound = kDefaultElementBound) {
  return QuotientModule(sub, element_bound);
}

}  // namespace semirad

#endif  // SEMIRAD_MODULE_HPP
