#ifndef SEMIRAD_RING_HPP
#define SEMIRAD_RING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semirad/detail/span.hpp"

namespace semirad {

/// Canonical encoding of a ring element, 0..size-1. Zero is always 0.
using Scalar = std::uint32_t;

/// Rings above this size are rejected; their tables would not be "desk scale".
inline constexpr std::size_t kMaxRingSize = 1024;
/// Ring axioms are verified exhaustively at construction up to this size.
inline constexpr std::size_t kAxiomCheckLimit = 256;

/// Construction recipe of a finite ring. Doubles as its canonical name.
struct RingDescriptor {
  enum class Kind { Modular, Galois, Product };

  Kind kind = Kind::Modular;
  std::uint32_t modulus = 0;  // Z/n: n.  GF: the characteristic p.
  std::uint32_t degree = 0;   // GF: k, so the field has p^k elements.
  // GF: monic reduction polynomial, leading coefficient first.
  std::vector<std::uint32_t> poly;
  std::vector<RingDescriptor> factors;  // product(...)

  static RingDescriptor modular(std::uint32_t n) {
    RingDescriptor d;
    d.kind = Kind::Modular;
    d.modulus = n;
    return d;
  }
  static RingDescriptor galois(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> poly) {
    RingDescriptor d;
    d.kind = Kind::Galois;
    d.modulus = p;
    d.degree = k;
    d.poly = std::move(poly);
    return d;
  }
  static RingDescriptor product(std::vector<RingDescriptor> factors) {
    RingDescriptor d;
    d.kind = Kind::Product;
    d.factors = std::move(factors);
    return d;
  }

  bool operator==(const RingDescriptor&) const = default;

  /// `Z/12`, `GF(4) poly=[1,1,1]`, `product(Z/2, Z/4)`.
  std::string to_string() const {
    switch (kind) {
      case Kind::Modular:
        return "Z/" + std::to_string(modulus);
      case Kind::Galois: {
        std::size_t q = 1;
        for (std::uint32_t i = 0; i < degree; ++i) q *= modulus;
        std::string s = "GF(" + std::to_string(q) + ") poly=[";
        for (std::size_t i = 0; i < poly.size(); ++i) {
          if (i) s += ',';
          s += std::to_string(poly[i]);
        }
        return s + "]";
      }
      case Kind::Product: {
        std::string s = "product(";
        for (std::size_t i = 0; i < factors.size(); ++i) {
          if (i) s += ", ";
          s += factors[i].to_string();
        }
        return s + ")";
      }
    }
    return {};
  }
};

namespace detail {

struct RingTables {
  RingDescriptor descriptor;
  std::size_t size = 0;
  Scalar one = 0;
  std::vector<Scalar> add;  // size*size
  std::vector<Scalar> mul;  // size*size
  std::vector<Scalar> neg;  // size
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Coefficients low degree first.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b over Z/p.
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..k/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

inline std::shared_ptr<detail::RingTables> blank_tables(RingDescriptor desc, std::size_t n) {
  auto t = std::make_shared<RingTables>();
  t->descriptor = std::move(desc);
  t->size = n;
  t->add.resize(n * n);
  t->mul.resize(n * n);
  t->neg.resize(n);
  return t;
}

inline void fill_negation(RingTables& t) {
  for (std::size_t a = 0; a < t.size; ++a)
    for (std::size_t b = 0; b < t.size; ++b)
      if (t.add[a * t.size + b] == 0) {
        t.neg[a] = static_cast<Scalar>(b);
        break;
      }
}

}  // namespace detail

class FiniteRing;
std::optional<std::string> ring_axiom_violation(const FiniteRing& ring);

/// An explicit finite commutative unital ring with materialized tables.
/// Copies share the same immutable tables.
class FiniteRing {
 public:
  static FiniteRing from_descriptor(const RingDescriptor& desc);

  std::size_t size() const noexcept { return t_->size; }
  Scalar zero() const noexcept { return 0; }
  Scalar one() const noexcept { return t_->one; }
  bool contains(Scalar a) const noexcept { return a < t_->size; }

  Scalar add(Scalar a, Scalar b) const { return t_->add[a * t_->size + b]; }
  Scalar mul(Scalar a, Scalar b) const { return t_->mul[a * t_->size + b]; }
  Scalar neg(Scalar a) const { return t_->neg[a]; }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar pow(Scalar a, std::size_t k) const {
    Scalar r = one();
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  const RingDescriptor& descriptor() const noexcept { return t_->descriptor; }
  std::string name() const { return t_->descriptor.to_string(); }

  // Equal descriptors build equal tables.
  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.t_ == b.t_ || a.t_->descriptor == b.t_->descriptor;
  }

 private:
  explicit FiniteRing(std::shared_ptr<const detail::RingTables> t) : t_(std::move(t)) {
    if (size() <= kAxiomCheckLimit) {
      if (auto bad = ring_axiom_violation(*this))
        throw std::logic_error("ring tables for " + name() + " violate " + *bad);
    }
  }

  friend FiniteRing make_zn(std::uint32_t n);
  friend FiniteRing make_gf(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> poly);
  friend FiniteRing make_product(std::span<const FiniteRing> rings);

  std::shared_ptr<const detail::RingTables> t_;
};

/// Z/n.
inline FiniteRing make_zn(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("Z/n needs n >= 2, got " + std::to_string(n));
  if (n > kMaxRingSize)
    throw std::invalid_argument("Z/" + std::to_string(n) + " exceeds the ring size limit " +
                                std::to_string(kMaxRingSize));
  auto t = detail::blank_tables(RingDescriptor::modular(n), n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      t->add[a * n + b] = (a + b) % n;
      t->mul[a * n + b] = static_cast<Scalar>((std::uint64_t{a} * b) % n);
    }
  t->one = 1;
  detail::fill_negation(*t);
  return FiniteRing(std::move(t));
}

/// GF(p^k) as Z/p[x]/(poly); `poly` is monic of degree k, leading coefficient first.
/// Element codes are sum a_i p^i for the residue a_0 + a_1 x + ... .
inline FiniteRing make_gf(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> poly) {
  if (!detail::is_prime(p)) throw std::invalid_argument("GF characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("GF degree must be at least 1");
  if (poly.size() != k + 1 || poly.front() != 1)
    throw std::invalid_argument("GF reduction polynomial must be monic of degree " + std::to_string(k));
  for (auto c : poly)
    if (c >= p) throw std::invalid_argument("GF polynomial coefficient " + std::to_string(c) + " is not below " + std::to_string(p));
  std::size_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxRingSize) throw std::invalid_argument("GF field exceeds the ring size limit " + std::to_string(kMaxRingSize));
  }
  const detail::Poly f(poly.rbegin(), poly.rend());
  if (!detail::is_irreducible(f, p)) throw std::invalid_argument("GF reduction polynomial is reducible over Z/" + std::to_string(p));

  auto digits = [&](std::size_t code) {
    detail::Poly a(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      a[i] = static_cast<std::uint32_t>(code % p);
      code /= p;
    }
    return a;
  };
  auto encode = [&](const detail::Poly& a) {
    Scalar code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
  };

  auto t = detail::blank_tables(RingDescriptor::galois(p, k, std::move(poly)), q);
  for (std::size_t a = 0; a < q; ++a) {
    const auto da = digits(a);
    for (std::size_t b = 0; b < q; ++b) {
      const auto db = digits(b);
      detail::Poly sum(k);
      for (std::size_t i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      detail::Poly prod(2 * k - 1, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      prod = detail::poly_mod(std::move(prod), f, p);
      prod.resize(k, 0);
      t->add[a * q + b] = encode(sum);
      t->mul[a * q + b] = encode(prod);
    }
  }
  t->one = 1;
  detail::fill_negation(*t);
  return FiniteRing(std::move(t));
}

/// Componentwise product. Codes are mixed radix with the first factor most significant.
inline FiniteRing make_product(std::span<const FiniteRing> rings) {
  if (rings.empty()) throw std::invalid_argument("product of rings needs at least one factor");
  std::size_t n = 1;
  std::vector<RingDescriptor> descs;
  for (const auto& r : rings) {
    n *= r.size();
    if (n > kMaxRingSize) throw std::invalid_argument("product ring exceeds the ring size limit " + std::to_string(kMaxRingSize));
    descs.push_back(r.descriptor());
  }
  auto split = [&](std::size_t code) {
    std::vector<Scalar> parts(rings.size());
    for (std::size_t i = rings.size(); i-- > 0;) {
      parts[i] = static_cast<Scalar>(code % rings[i].size());
      code /= rings[i].size();
    }
    return parts;
  };
  auto join = [&](const std::vector<Scalar>& parts) {
    Scalar code = 0;
    for (std::size_t i = 0; i < rings.size(); ++i) code = static_cast<Scalar>(code * rings[i].size() + parts[i]);
    return code;
  };

  auto t = detail::blank_tables(RingDescriptor::product(std::move(descs)), n);
  std::vector<Scalar> s(rings.size()), m(rings.size()), one(rings.size());
  for (std::size_t a = 0; a < n; ++a) {
    const auto pa = split(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto pb = split(b);
      for (std::size_t i = 0; i < rings.size(); ++i) {
        s[i] = rings[i].add(pa[i], pb[i]);
        m[i] = rings[i].mul(pa[i], pb[i]);
      }
      t->add[a * n + b] = join(s);
      t->mul[a * n + b] = join(m);
    }
  }
  for (std::size_t i = 0; i < rings.size(); ++i) one[i] = rings[i].one();
  t->one = join(one);
  detail::fill_negation(*t);
  return FiniteRing(std::move(t));
}

inline FiniteRing FiniteRing::from_descriptor(const RingDescriptor& desc) {
  switch (desc.kind) {
    case RingDescriptor::Kind::Modular:
      return make_zn(desc.modulus);
    case RingDescriptor::Kind::Galois:
      return make_gf(desc.modulus, desc.degree, desc.poly);
    case RingDescriptor::Kind::Product: {
      std::vector<FiniteRing> parts;
      for (const auto& f : desc.factors) parts.push_back(from_descriptor(f));
      return make_product(parts);
    }
  }
  throw std::invalid_argument("unknown ring descriptor kind");
}

/// Lexicographically least irreducible monic polynomial of degree k over Z/p
/// (leading coefficient first), used when a GF descriptor omits `poly=`.
inline std::vector<std::uint32_t> default_gf_polynomial(std::uint32_t p, std::uint32_t k) {
  if (!detail::is_prime(p)) throw std::invalid_argument("GF characteristic " + std::to_string(p) + " is not prime");
  std::size_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    count *= p;
    if (count > kMaxRingSize) throw std::invalid_argument("GF field exceeds the ring size limit " + std::to_string(kMaxRingSize));
  }
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> poly(k + 1, 0);
    poly[0] = 1;
    std::size_t c = code;
    for (std::size_t i = k; i >= 1; --i) {
      poly[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    const detail::Poly f(poly.rbegin(), poly.rend());
    if (detail::is_irreducible(f, p)) return poly;
  }
  throw std::logic_error("no irreducible polynomial found");
}

/// GF scalars are shown as coefficient tuples `[a_{k-1},...,a_0]`; every
/// other ring uses the canonical integer.
inline std::string format_scalar(const FiniteRing& ring, Scalar a) {
  const auto& d = ring.descriptor();
  if (d.kind != RingDescriptor::Kind::Galois) return std::to_string(a);
  std::vector<std::uint32_t> digits(d.degree);
  for (std::size_t i = 0; i < d.degree; ++i) {
    digits[i] = a % d.modulus;
    a /= d.modulus;
  }
  std::string s = "[";
  for (std::size_t i = d.degree; i-- > 0;) {
    s += std::to_string(digits[i]);
    if (i) s += ',';
  }
  return s + "]";
}

/// Exhaustive check of the commutative unital ring axioms. Returns the name
/// of the first violated law.
inline std::optional<std::string> ring_axiom_violation(const FiniteRing& r) {
  const std::size_t n = r.size();
  if (r.one() >= n) return "one out of range";
  for (Scalar a = 0; a < n; ++a) {
    if (r.add(a, 0) != a) return "additive identity";
    if (r.add(a, r.neg(a)) != 0) return "additive inverse";
    if (r.mul(a, r.one()) != a) return "multiplicative identity";
    for (Scalar b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return "additive commutativity";
      if (r.mul(a, b) != r.mul(b, a)) return "multiplicative commutativity";
      for (Scalar c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "additive associativity";
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplicative associativity";
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "distributivity";
      }
    }
  }
  return std::nullopt;
}

namespace detail {
inline auto ideal_span(const FiniteRing& ring) {
  return SpanBuilder(
      ring.size(), ring.size(), [&ring](Scalar a, Scalar b) { return ring.add(a, b); },
      [&ring](Scalar r, Scalar a) { return ring.mul(r, a); });
}
}  // namespace detail

/// An ideal stored by its full member set (sorted) plus the generators that produced it.
class Ideal {
 public:
  /// Smallest ideal containing `gens`.
  static Ideal generate(const FiniteRing& ring, std::span<const Scalar> gens) {
    auto span = detail::ideal_span(ring);
    for (Scalar g : gens) {
      check_scalar(ring, g);
      span.absorb(g);
    }
    return Ideal(ring, span.sorted_members(), std::vector<Scalar>(gens.begin(), gens.end()));
  }

  /// Wraps a member set that must already be an ideal; a generating set is
  /// chosen greedily in ascending order. Throws std::logic_error otherwise.
  static Ideal from_members(const FiniteRing& ring, std::vector<Scalar> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto span = detail::ideal_span(ring);
    std::vector<Scalar> gens;
    for (Scalar x : members) {
      check_scalar(ring, x);
      if (span.absorb(x)) gens.push_back(x);
    }
    auto closed = span.sorted_members();
    if (closed != members) throw std::logic_error("member set is not an ideal of " + ring.name());
    return Ideal(ring, std::move(closed), std::move(gens));
  }

  static Ideal zero(const FiniteRing& ring) { return generate(ring, {}); }
  static Ideal whole(const FiniteRing& ring) {
    const Scalar one = ring.one();
    return generate(ring, std::span<const Scalar>(&one, 1));
  }

  const FiniteRing& ring() const noexcept { return ring_; }
  const std::vector<Scalar>& members() const noexcept { return members_; }
  const std::vector<Scalar>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Scalar a) const { return a < mask_.size() && mask_[a]; }
  bool is_whole() const noexcept { return members_.size() == ring_.size(); }
  bool subset_of(const Ideal& other) const {
    return std::all_of(members_.begin(), members_.end(), [&](Scalar a) { return other.contains(a); });
  }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  Ideal(FiniteRing ring, std::vector<Scalar> members, std::vector<Scalar> gens)
      : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(gens)), mask_(ring_.size(), false) {
    for (Scalar a : members_) mask_[a] = true;
  }

  static void check_scalar(const FiniteRing& ring, Scalar a) {
    if (!ring.contains(a))
      throw std::invalid_argument("scalar " + std::to_string(a) + " is not an element of " + ring.name());
  }

  FiniteRing ring_;
  std::vector<Scalar> members_;
  std::vector<Scalar> generators_;
  std::vector<bool> mask_;
};

/// r*r in I implies r in I.
inline bool is_semiprime_ideal(const Ideal& I) {
  const auto& R = I.ring();
  for (Scalar r = 0; r < R.size(); ++r)
    if (I.contains(R.mul(r, r)) && !I.contains(r)) return false;
  return true;
}

/// Proper, and ab in I implies a in I or b in I.
inline bool is_prime_ideal(const Ideal& I) {
  if (I.is_whole()) return false;
  const auto& R = I.ring();
  for (Scalar a = 0; a < R.size(); ++a) {
    if (I.contains(a)) continue;
    for (Scalar b = 0; b < R.size(); ++b)
      if (!I.contains(b) && I.contains(R.mul(a, b))) return false;
  }
  return true;
}

/// {r : r^k in I for some 1 <= k <= |R|}.
inline Ideal nilpotent_radical_of_ideal(const Ideal& I) {
  const auto& R = I.ring();
  std::vector<Scalar> members;
  for (Scalar r = 0; r < R.size(); ++r) {
    Scalar power = r;
    for (std::size_t k = 1; k <= R.size(); ++k) {
      if (I.contains(power)) {
        members.push_back(r);
        break;
      }
      power = R.mul(power, r);
    }
  }
  return Ideal::from_members(R, std::move(members));
}

/// Every ideal of `ring`, ordered by (size, members).
inline std::vector<Ideal> enumerate_ideals(const FiniteRing& ring) {
  std::vector<Ideal> principal;
  for (Scalar a = 0; a < ring.size(); ++a) {
    auto I = Ideal::generate(ring, std::span<const Scalar>(&a, 1));
    if (std::find(principal.begin(), principal.end(), I) == principal.end()) principal.push_back(std::move(I));
  }
  std::vector<Ideal> found{Ideal::zero(ring)};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& P : principal) {
      if (P.subset_of(found[i])) continue;
      std::vector<Scalar> gens = found[i].generators();
      gens.insert(gens.end(), P.generators().begin(), P.generators().end());
      auto J = Ideal::generate(ring, gens);
      if (std::find(found.begin(), found.end(), J) == found.end()) found.push_back(std::move(J));
    }
  }
  std::sort(found.begin(), found.end(), [](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return found;
}

}  // namespace semirad

#endif  // SEMIRAD_RING_HPP
