#ifndef SEMIRAD_INSTANCE_HPP
#define SEMIRAD_INSTANCE_HPP

// Plain-text instance files:
//
//   file       := { line }                      one declaration per line, '#' starts a comment
//   line       := ring | module | submodule | element
//   ring       := "ring" descriptor
//   descriptor := "Z/" uint
//               | "GF(" uint ")" [ "poly=" "[" uint { "," uint } "]" ]
//               | "product(" descriptor { "," descriptor } ")"
//   module     := "module" "rank=" uint [ "relations=" vectors ]
//   submodule  := "submodule" name "gens=" vectors
//   element    := "element" name "=" vector
//   vectors    := "[" [ vector { "," vector } ] "]"
//   vector     := "(" [ scalar { "," scalar } ] ")"
//   scalar     := uint | "[" uint { "," uint } "]"   (GF coefficient tuple, leading first)
//
// Whitespace between tokens is ignored. Exactly one ring line and one module
// line are required, in that order, before any submodule or element.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semirad/bounds.hpp"
#include "semirad/module.hpp"
#include "semirad/ring.hpp"

namespace semirad {

/// Malformed input, addressed by 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct NamedVectors {
  std::string name;
  std::vector<Vector> vectors;
  bool operator==(const NamedVectors&) const = default;
};

struct NamedElement {
  std::string name;
  Vector vector;
  bool operator==(const NamedElement&) const = default;
};

struct InstanceFile {
  RingDescriptor ring;
  std::size_t rank = 0;
  std::vector<Vector> relations;
  std::vector<NamedVectors> submodules;
  std::vector<NamedElement> elements;
  bool operator==(const InstanceFile&) const = default;
};

namespace detail {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() const { return pos_ + 1; }
  // Column of the next token.
  std::size_t mark() {
    skip_ws();
    return column();
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column(), message); }
  [[noreturn]] void fail_at(std::size_t column, const std::string& message) const {
    throw ParseError(line_, column, message);
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("expected '" + std::string(w) + "'" + found());
  }

  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > 0xffffffffu) fail_at(start + 1, "number is too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number" + found());
    return value;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    auto ok = [&](char c, bool first) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
             (!first && (std::isdigit(static_cast<unsigned char>(c)) || c == '\''));
    };
    while (pos_ < text_.size() && ok(text_[pos_], pos_ == start)) ++pos_;
    if (pos_ == start) fail("expected a name" + found());
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string found() {
    skip_ws();
    if (pos_ >= text_.size()) return ", found end of line";
    return std::string(", found '") + text_[pos_] + "'";
  }

  void expect_end() {
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline RingDescriptor parse_descriptor(Cursor& c) {
  const std::size_t start = c.mark();
  if (c.accept_word("Z/")) {
    const auto n = c.number();
    if (n < 2) c.fail_at(start, "Z/n needs n >= 2");
    return RingDescriptor::modular(static_cast<std::uint32_t>(n));
  }
  if (c.accept_word("GF(")) {
    const auto q = c.number();
    c.expect(')');
    std::uint64_t p = 2;
    while (p <= q && q % p != 0) ++p;
    std::uint32_t k = 0;
    std::uint64_t rest = q;
    while (rest > 1 && rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (q < 2 || rest != 1) c.fail_at(start, "GF(" + std::to_string(q) + "): order is not a prime power");
    if (q > kMaxRingSize) c.fail_at(start, "GF(" + std::to_string(q) + ") exceeds the ring size limit");
    std::vector<std::uint32_t> poly;
    if (c.accept_word("poly=")) {
      c.expect('[');
      do poly.push_back(static_cast<std::uint32_t>(c.number()));
      while (c.accept(','));
      c.expect(']');
    } else {
      poly = default_gf_polynomial(static_cast<std::uint32_t>(p), k);
    }
    return RingDescriptor::galois(static_cast<std::uint32_t>(p), k, std::move(poly));
  }
  if (c.accept_word("product(")) {
    std::vector<RingDescriptor> factors;
    do factors.push_back(parse_descriptor(c));
    while (c.accept(','));
    c.expect(')');
    return RingDescriptor::product(std::move(factors));
  }
  c.fail("unknown ring descriptor" + c.found());
}

inline Scalar parse_scalar(Cursor& c, const FiniteRing& ring) {
  const std::size_t start = c.mark();
  const auto& d = ring.descriptor();
  if (c.accept('[')) {
    if (d.kind != RingDescriptor::Kind::Galois) c.fail_at(start, "coefficient tuples are only valid for GF rings");
    std::vector<std::uint64_t> coeffs;
    do coeffs.push_back(c.number());
    while (c.accept(','));
    c.expect(']');
    if (coeffs.size() != d.degree)
      c.fail_at(start, "coefficient tuple has " + std::to_string(coeffs.size()) + " entries, expected " +
                           std::to_string(d.degree));
    std::uint64_t code = 0;
    for (auto a : coeffs) {
      if (a >= d.modulus) c.fail_at(start, "coefficient " + std::to_string(a) + " is not below " + std::to_string(d.modulus));
      code = code * d.modulus + a;
    }
    return static_cast<Scalar>(code);
  }
  const auto v = c.number();
  if (v >= ring.size())
    c.fail_at(start, "scalar " + std::to_string(v) + " is out of range for " + ring.name());
  return static_cast<Scalar>(v);
}

inline Vector parse_vector(Cursor& c, const FiniteRing& ring, std::size_t rank) {
  const std::size_t start = c.mark();
  c.expect('(');
  Vector v;
  if (!c.accept(')')) {
    do v.push_back(parse_scalar(c, ring));
    while (c.accept(','));
    c.expect(')');
  }
  if (v.size() != rank)
    c.fail_at(start, "vector has " + std::to_string(v.size()) + " coordinates, module rank is " + std::to_string(rank));
  return v;
}

inline std::vector<Vector> parse_vectors(Cursor& c, const FiniteRing& ring, std::size_t rank) {
  c.expect('[');
  std::vector<Vector> out;
  if (c.accept(']')) return out;
  do out.push_back(parse_vector(c, ring, rank));
  while (c.accept(','));
  c.expect(']');
  return out;
}

inline std::string render_vector(const FiniteRing& ring, const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_scalar(ring, v[i]);
  }
  return s + ")";
}

inline std::string render_vectors(const FiniteRing& ring, const std::vector<Vector>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += render_vector(ring, vs[i]);
  }
  return s + "]";
}

}  // namespace detail

/// Parses a single ring descriptor such as `product(Z/2, GF(4))`.
inline RingDescriptor parse_ring_descriptor(std::string_view text, std::size_t line = 1) {
  detail::Cursor c(text, line);
  auto d = detail::parse_descriptor(c);
  c.expect_end();
  return d;
}

inline InstanceFile parse_instance(std::string_view text) {
  InstanceFile out;
  std::optional<FiniteRing> ring;
  bool have_module = false;
  std::vector<std::string> names;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    detail::Cursor c(line, line_no);
    if (c.at_end()) continue;
    const std::size_t start = c.column();
    const std::string keyword = c.identifier();

    if (keyword == "ring") {
      if (ring) c.fail_at(start, "duplicate ring declaration");
      out.ring = detail::parse_descriptor(c);
      c.expect_end();
      try {
        ring = FiniteRing::from_descriptor(out.ring);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, start, e.what());
      }
    } else if (keyword == "module") {
      if (!ring) c.fail_at(start, "module declared before ring");
      if (have_module) c.fail_at(start, "duplicate module declaration");
      c.expect_word("rank");
      c.expect('=');
      out.rank = static_cast<std::size_t>(c.number());
      if (c.accept_word("relations")) {
        c.expect('=');
        out.relations = detail::parse_vectors(c, *ring, out.rank);
      }
      c.expect_end();
      have_module = true;
    } else if (keyword == "submodule" || keyword == "element") {
      if (!have_module) c.fail_at(start, keyword + " declared before module");
      const std::size_t name_col = c.mark();
      std::string name = c.identifier();
      if (std::find(names.begin(), names.end(), name) != names.end())
        c.fail_at(name_col, "duplicate name '" + name + "'");
      names.push_back(name);
      if (keyword == "submodule") {
        c.expect_word("gens");
        c.expect('=');
        out.submodules.push_back({std::move(name), detail::parse_vectors(c, *ring, out.rank)});
      } else {
        c.expect('=');
        out.elements.push_back({std::move(name), detail::parse_vector(c, *ring, out.rank)});
      }
      c.expect_end();
    } else {
      c.fail_at(start, "unknown declaration '" + keyword + "'");
    }
  }
  if (!ring) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing ring declaration");
  if (!have_module) throw ParseError(line_no, 1, "missing module declaration");
  return out;
}

inline std::string render_instance(const InstanceFile& inst) {
  const auto ring = FiniteRing::from_descriptor(inst.ring);
  std::string s = "ring " + inst.ring.to_string() + "\n";
  s += "module rank=" + std::to_string(inst.rank) + " relations=" + detail::render_vectors(ring, inst.relations) + "\n";
  for (const auto& sub : inst.submodules)
    s += "submodule " + sub.name + " gens=" + detail::render_vectors(ring, sub.vectors) + "\n";
  for (const auto& e : inst.elements) s += "element " + e.name + " = " + detail::render_vector(ring, e.vector) + "\n";
  return s;
}

/// An instance file materialized into library objects.
struct LoadedInstance {
  FiniteRing ring;
  ModulePresentation module;
  std::vector<std::pair<std::string, Submodule>> submodules;
  std::vector<std::pair<std::string, ElementId>> elements;

  const Submodule& submodule(const std::string& name) const {
    for (const auto& [n, s] : submodules)
      if (n == name) return s;
    throw std::invalid_argument("no submodule named '" + name + "'");
  }
};

inline LoadedInstance load_instance(const InstanceFile& inst, const Bounds& bounds = {}) {
  auto ring = FiniteRing::from_descriptor(inst.ring);
  ModulePresentation M(ring, inst.rank, inst.relations, bounds.element_bound);
  LoadedInstance out{ring, M, {}, {}};
  for (const auto& sub : inst.submodules) {
    std::vector<ElementId> gens;
    for (const auto& v : sub.vectors) gens.push_back(M.reduce(v));
    out.submodules.emplace_back(sub.name, Submodule::generate(M, gens));
  }
  for (const auto& e : inst.elements) out.elements.emplace_back(e.name, M.reduce(e.vector));
  return out;
}

}  // namespace semirad

#endif  // SEMIRAD_INSTANCE_HPP
