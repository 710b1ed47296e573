#ifndef SEMIRAD_VERIFY_HPP
#define SEMIRAD_VERIFY_HPP

// Exhaustive certification of the radical theorems over generated corpora.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "semirad/bounds.hpp"
#include "semirad/instance.hpp"
#include "semirad/json_io.hpp"
#include "semirad/module.hpp"
#include "semirad/predicates.hpp"
#include "semirad/radical.hpp"
#include "semirad/ring.hpp"

namespace semirad {

enum class Claim {
  RadicalEqualsSemiprime,    // radical = smallest semiprime over N; N semiprime iff radical
  Iteration,                 // radical = union of iterated first radicals
  PrimeImpliesSemiprime,
  Intersection,              // semiprime submodules are closed under intersection
  FreeEquivalence,           // on free modules, semiprime iff the coordinate condition
  ColonSemiprime,            // N semiprime implies every (N:m) is a semiprime ideal
  QuotientCorrespondence,    // semiprimes above M' correspond to semiprimes of M/M'
};

inline constexpr std::array<Claim, 7> kAllClaims = {
    Claim::RadicalEqualsSemiprime, Claim::Iteration,       Claim::PrimeImpliesSemiprime, Claim::Intersection,
    Claim::FreeEquivalence,        Claim::ColonSemiprime, Claim::QuotientCorrespondence,
};

inline std::string_view claim_id(Claim c) {
  switch (c) {
    case Claim::RadicalEqualsSemiprime: return "THM-RADICAL-EQ-SEMIPRIME";
    case Claim::Iteration: return "THM-ITERATION";
    case Claim::PrimeImpliesSemiprime: return "PROP-PRIME-IMPLIES-SP";
    case Claim::Intersection: return "PROP-INTERSECTION";
    case Claim::FreeEquivalence: return "PROP-FREE-EQUIV";
    case Claim::ColonSemiprime: return "PROP-COLON-SEMIPRIME";
    case Claim::QuotientCorrespondence: return "PROP-QUOTIENT-CORRESPONDENCE";
  }
  return "?";
}

inline std::optional<Claim> claim_from_id(std::string_view id) {
  for (Claim c : kAllClaims)
    if (claim_id(c) == id) return c;
  return std::nullopt;
}

/// Claims that need the full submodule lattice of a module.
inline bool needs_lattice(Claim c) {
  return c == Claim::RadicalEqualsSemiprime || c == Claim::QuotientCorrespondence;
}

struct CorpusSpec {
  std::vector<RingDescriptor> rings;
  std::size_t max_rank = 1;
  bool free_modules = true;
  bool cyclic_relations = false;
  std::size_t random_relations = 0;  // extra quotients per (ring, rank), 1..2 random relation vectors each
  std::size_t max_module_size = 64;
  std::size_t element_bound = kDefaultElementBound;
  std::size_t lattice_bound = kDefaultLatticeBound;
  std::size_t submodule_samples = 16;  // random submodules per module beyond the lattice bound
  std::uint64_t seed = 1;

  bool operator==(const CorpusSpec&) const = default;
};

inline CorpusSpec default_corpus_spec() {
  CorpusSpec s;
  for (std::uint32_t n : {2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u}) s.rings.push_back(RingDescriptor::modular(n));
  s.rings.push_back(RingDescriptor::galois(2, 2, {1, 1, 1}));
  s.rings.push_back(RingDescriptor::product({RingDescriptor::modular(2), RingDescriptor::modular(4)}));
  s.max_rank = 2;
  s.cyclic_relations = true;
  return s;
}

/// Corpus spec files hold one setting per line; `ring` lines accumulate.
///
///   ring Z/4
///   ring GF(4) poly=[1,1,1]
///   max_rank 2
///   relations free cyclic
///   random_relations 0
///   max_module_size 64
///   element_bound 65536
///   lattice_bound 256
///   submodule_samples 16
///   seed 1
inline CorpusSpec parse_corpus_spec(std::string_view text) {
  CorpusSpec s;
  s.free_modules = false;
  bool saw_relations = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string line(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);

    std::istringstream in(line);
    std::string key;
    if (!(in >> key)) continue;
    const std::size_t col = line.find(key) + 1;
    if (key == "ring") {
      const std::size_t at = line.find("ring") + 4;
      try {
        s.rings.push_back(parse_ring_descriptor(std::string_view(line).substr(at), line_no));
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.column() + at, e.message());
      }
      continue;
    }
    if (key == "relations") {
      saw_relations = true;
      std::string word;
      while (in >> word) {
        if (word == "free") s.free_modules = true;
        else if (word == "cyclic") s.cyclic_relations = true;
        else throw ParseError(line_no, line.find(word) + 1, "unknown relation strategy '" + word + "'");
      }
      continue;
    }
    std::uint64_t value = 0;
    std::string extra;
    if (!(in >> value) || (in >> extra)) throw ParseError(line_no, col, "expected a single non-negative integer after '" + key + "'");
    if (key == "max_rank") s.max_rank = value;
    else if (key == "random_relations") s.random_relations = value;
    else if (key == "max_module_size") s.max_module_size = value;
    else if (key == "element_bound") s.element_bound = value;
    else if (key == "lattice_bound") s.lattice_bound = value;
    else if (key == "submodule_samples") s.submodule_samples = value;
    else if (key == "seed") s.seed = value;
    else throw ParseError(line_no, col, "unknown setting '" + key + "'");
  }
  if (!saw_relations) s.free_modules = true;
  return s;
}

inline std::string render_corpus_spec(const CorpusSpec& s) {
  std::string out;
  for (const auto& r : s.rings) out += "ring " + r.to_string() + "\n";
  out += "max_rank " + std::to_string(s.max_rank) + "\n";
  out += "relations";
  if (s.free_modules) out += " free";
  if (s.cyclic_relations) out += " cyclic";
  out += "\n";
  out += "random_relations " + std::to_string(s.random_relations) + "\n";
  out += "max_module_size " + std::to_string(s.max_module_size) + "\n";
  out += "element_bound " + std::to_string(s.element_bound) + "\n";
  out += "lattice_bound " + std::to_string(s.lattice_bound) + "\n";
  out += "submodule_samples " + std::to_string(s.submodule_samples) + "\n";
  out += "seed " + std::to_string(s.seed) + "\n";
  return out;
}

struct CorpusEntry {
  std::string id;  // "M001", in expansion order
  ModulePresentation module;
  std::vector<Submodule> submodules;  // listing order
  bool full_lattice = true;
};

namespace detail {

inline std::string entry_id(std::size_t index) {
  std::string digits = std::to_string(index + 1);
  if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
  return "M" + digits;
}

inline std::vector<Submodule> sample_submodules(const ModulePresentation& M, std::size_t samples, std::mt19937_64& rng) {
  std::vector<Submodule> out{Submodule::zero(M)};
  std::set<std::vector<ElementId>> seen{out[0].members()};
  if (auto W = Submodule::whole(M); seen.insert(W.members()).second) out.push_back(std::move(W));
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t count = 1 + rng() % 3;
    std::vector<ElementId> gens;
    for (std::size_t j = 0; j < count; ++j) gens.push_back(static_cast<ElementId>(rng() % M.size()));
    auto N = Submodule::generate(M, gens);
    if (seen.insert(N.members()).second) out.push_back(std::move(N));
  }
  std::sort(out.begin(), out.end(), listing_order);
  return out;
}

}  // namespace detail

/// Modules R^g / K for every ring, 1 <= g <= max_rank and each relation
/// strategy, skipping duplicates (same ring, rank and K) and modules over the
/// size limits. Each comes with its full lattice when |M| <= lattice_bound and
/// otherwise a seeded sample of generated submodules.
inline std::vector<CorpusEntry> expand_corpus(const CorpusSpec& spec) {
  std::vector<CorpusEntry> out;
  std::mt19937_64 rng(spec.seed);

  for (const auto& desc : spec.rings) {
    const auto R = FiniteRing::from_descriptor(desc);
    for (std::size_t g = 1; g <= spec.max_rank; ++g) {
      std::size_t ambient = 1;
      for (std::size_t i = 0; i < g && ambient <= spec.element_bound; ++i) ambient *= R.size();
      if (ambient > spec.element_bound) continue;
      const auto F = free_module(R, g, spec.element_bound);

      std::vector<std::vector<Vector>> presentations;
      std::set<std::vector<ElementId>> seen_k;
      auto offer = [&](std::vector<Vector> rels) {
        std::vector<ElementId> gens;
        for (const auto& v : rels) gens.push_back(F.reduce(v));
        if (seen_k.insert(Submodule::generate(F, gens).members()).second) presentations.push_back(std::move(rels));
      };
      if (spec.free_modules) offer({});
      if (spec.cyclic_relations)
        for (ElementId x = 1; x < F.size(); ++x) {
          const auto v = F.representative(x);
          offer({Vector(v.begin(), v.end())});
        }
      for (std::size_t i = 0; i < spec.random_relations; ++i) {
        std::vector<Vector> rels;
        const std::size_t count = 1 + rng() % 2;
        for (std::size_t j = 0; j < count; ++j) {
          const auto v = F.representative(static_cast<ElementId>(rng() % F.size()));
          rels.emplace_back(v.begin(), v.end());
        }
        offer(std::move(rels));
      }

      for (auto& rels : presentations) {
        ModulePresentation M(R, g, std::move(rels), spec.element_bound);
        if (M.size() > spec.max_module_size) continue;
        CorpusEntry entry{detail::entry_id(out.size()), M, {}, M.size() <= spec.lattice_bound};
        entry.submodules = entry.full_lattice ? enumerate_submodules(M, spec.lattice_bound)
                                              : detail::sample_submodules(M, spec.submodule_samples, rng);
        out.push_back(std::move(entry));
      }
    }
  }
  return out;
}

/// A failed check, serialized with everything needed to rebuild and re-run it.
struct Counterexample {
  Claim claim = Claim::RadicalEqualsSemiprime;
  std::string instance;  // corpus entry id
  RingDescriptor ring;
  std::size_t rank = 0;
  std::vector<Vector> relations;
  std::vector<Vector> submodule;             // generators of N
  std::optional<std::vector<Vector>> other;  // second submodule: B in A∩B, M' in the quotient claim
  std::optional<Vector> element;             // m, for the colon claim
  std::string detail;

  bool operator==(const Counterexample&) const = default;
};

inline nlohmann::json to_json(const Counterexample& c) {
  nlohmann::json j = {
      {"claim", std::string(claim_id(c.claim))},
      {"instance", c.instance},
      {"module", {{"ring", c.ring.to_string()}, {"rank", c.rank}, {"relations", json_io::vectors(c.relations)}}},
      {"submodule", json_io::vectors(c.submodule)},
      {"detail", c.detail},
  };
  if (c.other) j["other"] = json_io::vectors(*c.other);
  if (c.element) j["element"] = *c.element;
  return j;
}

inline Counterexample counterexample_from_json(const nlohmann::json& j) {
  Counterexample c;
  const auto id = j.at("claim").get<std::string>();
  const auto claim = claim_from_id(id);
  if (!claim) throw std::invalid_argument("unknown claim '" + id + "'");
  c.claim = *claim;
  c.instance = j.at("instance").get<std::string>();
  const auto& m = j.at("module");
  c.ring = parse_ring_descriptor(m.at("ring").get<std::string>());
  c.rank = m.at("rank").get<std::size_t>();
  c.relations = json_io::vectors_from(m.at("relations"));
  c.submodule = json_io::vectors_from(j.at("submodule"));
  if (j.contains("other")) c.other = json_io::vectors_from(j.at("other"));
  if (j.contains("element")) c.element = j.at("element").get<Vector>();
  c.detail = j.at("detail").get<std::string>();
  return c;
}

namespace detail {

/// Per-module caches shared by all claim checks on that module.
class ModuleContext {
 public:
  ModuleContext(const CorpusEntry& entry, const CorpusSpec& spec) : entry_(entry), spec_(spec) {
    if (entry.full_lattice) {
      lattice_ = entry.submodules;
      primes_ = prime_submodules(*lattice_);
      std::vector<Submodule> sp;
      for (const auto& S : *lattice_)
        if (semiprime(S)) sp.push_back(S);
      semiprimes_ = std::move(sp);
    }
  }

  const ModulePresentation& module() const { return entry_.module; }
  const CorpusEntry& entry() const { return entry_; }
  const CorpusSpec& spec() const { return spec_; }
  bool has_lattice() const { return lattice_.has_value(); }
  const std::vector<Submodule>& lattice() const { return *lattice_; }
  const std::vector<Submodule>& primes() const { return *primes_; }
  const std::vector<Submodule>& semiprimes() const { return *semiprimes_; }

  bool semiprime(const Submodule& N) {
    auto [it, inserted] = semiprime_.try_emplace(N.members(), false);
    if (inserted) it->second = is_semiprime_submodule(N).holds;
    return it->second;
  }

 private:
  const CorpusEntry& entry_;
  const CorpusSpec& spec_;
  std::optional<std::vector<Submodule>> lattice_;
  std::optional<std::vector<Submodule>> primes_;
  std::optional<std::vector<Submodule>> semiprimes_;
  std::map<std::vector<ElementId>, bool> semiprime_;
};

/// `Z/4^2 / <(2,0)>`
inline std::string module_text(const ModulePresentation& M) {
  std::string s = M.ring().name() + "^" + std::to_string(M.rank());
  if (!M.relations().empty()) {
    s += " / <";
    for (std::size_t i = 0; i < M.relations().size(); ++i) {
      if (i) s += ", ";
      s += render_vector(M.ring(), M.relations()[i]);
    }
    s += ">";
  }
  return s;
}

inline std::string members_text(const Submodule& N) {
  std::string s = "{";
  for (std::size_t i = 0; i < N.members().size(); ++i) {
    if (i) s += ", ";
    s += format_element(N.module(), N.members()[i]);
  }
  return s + "}";
}

using Failure = std::optional<std::string>;

inline Failure check_radical_equals_semiprime(ModuleContext& ctx, const Submodule& N) {
  const auto by_primes = radical_by_primes(N, ctx.primes());
  const auto smallest = smallest_semiprime_over(N, ctx.semiprimes());
  if (!(by_primes == smallest))
    return "radical " + members_text(by_primes) + " differs from smallest semiprime " + members_text(smallest);
  if (N.is_proper() && ctx.semiprime(N) != (by_primes == N))
    return std::string(ctx.semiprime(N) ? "semiprime but not radical" : "radical but not semiprime");
  return std::nullopt;
}

inline Failure check_iteration(ModuleContext& ctx, const Submodule& N) {
  std::optional<IterationResult> run;
  try {
    run = radical_by_iteration(N);
  } catch (const std::logic_error& e) {
    return std::string(e.what());
  }
  const auto& result = *run;
  if (!trace_replays(result.trace)) return std::string("iteration trace does not replay");
  if (!ctx.has_lattice()) return std::nullopt;
  const auto by_primes = radical_by_primes(N, ctx.primes());
  if (!(result.radical == by_primes))
    return "iterated radical " + members_text(result.radical) + " differs from radical " + members_text(by_primes);
  const auto first = first_radical(N);
  for (const auto& P : ctx.primes())
    if (N.subset_of(P) && !first.subset_of(P)) return "first radical is not inside prime " + members_text(P);
  return std::nullopt;
}

inline Failure check_prime_implies_semiprime(ModuleContext& ctx, const Submodule& N) {
  if (is_prime_submodule(N).holds && !ctx.semiprime(N)) return std::string("prime but not semiprime");
  return std::nullopt;
}

inline Failure check_intersection(ModuleContext& ctx, const Submodule& A, const Submodule& B) {
  const auto C = intersect(A, B);
  if (!ctx.semiprime(C)) return "intersection " + members_text(C) + " is not semiprime";
  return std::nullopt;
}

inline Failure check_free_equivalence(ModuleContext& ctx, const Submodule& N) {
  const bool sp = ctx.semiprime(N);
  if (is_cimpric_semiprime(N).holds != sp)
    return std::string(sp ? "semiprime but fails the coordinate condition" : "coordinate condition holds but not semiprime");
  return std::nullopt;
}

inline Failure check_colon(const Submodule& N, ElementId m) {
  const auto I = colon_ideal(N, m);
  if (!is_semiprime_ideal(I)) return "(N:" + format_element(N.module(), m) + ") is not a semiprime ideal";
  return std::nullopt;
}

/// Compares semiprimes of M above `sub` with semiprimes of M/sub, both by
/// count and under the two lattice maps.
inline Failure check_quotient(ModuleContext& ctx, const Submodule& sub, const std::vector<Submodule>& lattice) {
  const QuotientModule q(sub, ctx.spec().element_bound);
  std::size_t up = 0;
  for (const auto& N : lattice) {
    if (!sub.subset_of(N)) continue;
    const bool sp = ctx.semiprime(N);
    up += sp;
    if (sp != is_semiprime_submodule(q.image(N)).holds)
      return "semiprimeness of " + members_text(N) + " is not preserved in the quotient";
  }
  std::size_t down = 0;
  for (const auto& S : enumerate_submodules(q.quotient(), ctx.spec().lattice_bound)) {
    const bool sp = is_semiprime_submodule(S).holds;
    down += sp;
    if (sp != ctx.semiprime(q.preimage(S)))
      return "semiprimeness of quotient submodule " + members_text(S) + " is not preserved by its preimage";
  }
  if (up != down)
    return std::to_string(up) + " semiprime submodules above, " + std::to_string(down) + " in the quotient";
  return std::nullopt;
}

}  // namespace detail

struct ClaimResult {
  Claim claim;
  bool skipped = false;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<Counterexample> counterexamples;
};

/// A proper submodule where a weaker notion holds and a stronger one fails.
struct SeparationExample {
  std::string instance;
  ModulePresentation module;
  Submodule submodule;
  PredicateWitness witness;  // against the stronger notion
};

enum class NotionPair { DaunsVsSemiprime, SemiprimeVsPrime };

inline std::string_view to_string(NotionPair p) {
  return p == NotionPair::DaunsVsSemiprime ? "dauns-vs-semiprime" : "semiprime-vs-prime";
}

inline std::vector<SeparationExample> find_separation(const std::vector<CorpusEntry>& corpus, NotionPair pair) {
  const Notion weaker = pair == NotionPair::DaunsVsSemiprime ? Notion::Dauns : Notion::Semiprime;
  const Notion stronger = pair == NotionPair::DaunsVsSemiprime ? Notion::Semiprime : Notion::Prime;
  std::vector<SeparationExample> out;
  for (const auto& entry : corpus)
    for (const auto& N : entry.submodules) {
      if (!N.is_proper() || !check_notion(weaker, N).holds) continue;
      auto v = check_notion(stronger, N);
      if (!v.holds) out.push_back({entry.id, entry.module, N, std::move(*v.witness)});
    }
  return out;
}

inline std::vector<SeparationExample> find_separation(const CorpusSpec& spec, NotionPair pair) {
  return find_separation(expand_corpus(spec), pair);
}

struct VerificationReport {
  CorpusSpec spec;
  std::size_t modules = 0;
  std::size_t submodules = 0;
  std::vector<std::string> sampled;  // entries checked on a sample instead of the full lattice
  std::vector<ClaimResult> claims;   // in kAllClaims order
  std::map<std::string, std::vector<SeparationExample>> separations;
  double wall_time_ms = 0;

  std::size_t total_failed() const {
    std::size_t n = 0;
    for (const auto& c : claims) n += c.failed;
    return n;
  }
  bool all_pass() const { return total_failed() == 0; }
};

namespace detail {

inline Counterexample make_counterexample(Claim claim, const CorpusEntry& entry, const Submodule& N, std::string what) {
  const auto& M = entry.module;
  return {claim, entry.id, M.ring().descriptor(), M.rank(), M.relations(), json_io::generator_vectors(N),
          std::nullopt, std::nullopt, std::move(what)};
}

inline void record(ClaimResult& result, Failure failure, const std::function<Counterexample(std::string)>& make) {
  ++result.checked;
  if (!failure) {
    ++result.passed;
    return;
  }
  ++result.failed;
  result.counterexamples.push_back(make(std::move(*failure)));
}

}  // namespace detail

inline VerificationReport verify_corpus(const CorpusSpec& spec, const std::vector<CorpusEntry>& corpus) {
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.spec = spec;
  for (Claim c : kAllClaims) report.claims.push_back({c, false, 0, 0, 0, {}});
  auto result = [&](Claim c) -> ClaimResult& { return report.claims[static_cast<std::size_t>(c)]; };

  for (const auto& entry : corpus) {
    ++report.modules;
    report.submodules += entry.submodules.size();
    if (!entry.full_lattice) report.sampled.push_back(entry.id);
    detail::ModuleContext ctx(entry, spec);
    const auto& M = entry.module;

    for (const auto& N : entry.submodules) {
      auto single = [&](Claim c) {
        return [&, c](std::string what) { return detail::make_counterexample(c, entry, N, std::move(what)); };
      };
      if (ctx.has_lattice())
        detail::record(result(Claim::RadicalEqualsSemiprime), detail::check_radical_equals_semiprime(ctx, N),
                       single(Claim::RadicalEqualsSemiprime));
      detail::record(result(Claim::Iteration), detail::check_iteration(ctx, N), single(Claim::Iteration));
      detail::record(result(Claim::PrimeImpliesSemiprime), detail::check_prime_implies_semiprime(ctx, N),
                     single(Claim::PrimeImpliesSemiprime));
      if (M.is_free())
        detail::record(result(Claim::FreeEquivalence), detail::check_free_equivalence(ctx, N),
                       single(Claim::FreeEquivalence));
      if (ctx.semiprime(N))
        for (ElementId m = 0; m < M.size(); ++m)
          detail::record(result(Claim::ColonSemiprime), detail::check_colon(N, m), [&](std::string what) {
            auto c = detail::make_counterexample(Claim::ColonSemiprime, entry, N, std::move(what));
            const auto v = M.representative(m);
            c.element = Vector(v.begin(), v.end());
            return c;
          });
      if (ctx.has_lattice())
        detail::record(result(Claim::QuotientCorrespondence), detail::check_quotient(ctx, N, ctx.lattice()),
                       single(Claim::QuotientCorrespondence));
    }

    std::vector<const Submodule*> semiprimes;
    for (const auto& N : entry.submodules)
      if (ctx.semiprime(N)) semiprimes.push_back(&N);
    for (std::size_t i = 0; i < semiprimes.size(); ++i)
      for (std::size_t j = i + 1; j < semiprimes.size(); ++j) {
        const auto& A = *semiprimes[i];
        const auto& B = *semiprimes[j];
        detail::record(result(Claim::Intersection), detail::check_intersection(ctx, A, B), [&](std::string what) {
          auto c = detail::make_counterexample(Claim::Intersection, entry, A, std::move(what));
          c.other = json_io::generator_vectors(B);
          return c;
        });
      }
  }

  for (auto& c : report.claims) c.skipped = needs_lattice(c.claim) && c.checked == 0 && !report.sampled.empty();
  for (NotionPair p : {NotionPair::DaunsVsSemiprime, NotionPair::SemiprimeVsPrime})
    report.separations[std::string(to_string(p))] = find_separation(corpus, p);

  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

inline VerificationReport verify_all(const CorpusSpec& spec) { return verify_corpus(spec, expand_corpus(spec)); }

/// Rebuilds the instance and re-runs the claim; true when it fails again.
inline bool counterexample_replays(const Counterexample& c, const Bounds& bounds = {}) {
  const auto R = FiniteRing::from_descriptor(c.ring);
  ModulePresentation M(R, c.rank, c.relations, bounds.element_bound);
  auto build = [&M](const std::vector<Vector>& gens) {
    std::vector<ElementId> ids;
    for (const auto& v : gens) ids.push_back(M.reduce(v));
    return Submodule::generate(M, ids);
  };
  const auto N = build(c.submodule);

  CorpusSpec spec;
  spec.element_bound = bounds.element_bound;
  spec.lattice_bound = bounds.lattice_bound;
  const bool lattice = M.size() <= bounds.lattice_bound;
  CorpusEntry entry{c.instance, M, lattice ? enumerate_submodules(M, bounds.lattice_bound) : std::vector<Submodule>{N},
                    lattice};
  detail::ModuleContext ctx(entry, spec);

  switch (c.claim) {
    case Claim::RadicalEqualsSemiprime:
      return lattice && detail::check_radical_equals_semiprime(ctx, N).has_value();
    case Claim::Iteration: return detail::check_iteration(ctx, N).has_value();
    case Claim::PrimeImpliesSemiprime: return detail::check_prime_implies_semiprime(ctx, N).has_value();
    case Claim::Intersection:
      return c.other && ctx.semiprime(N) && ctx.semiprime(build(*c.other)) &&
             detail::check_intersection(ctx, N, build(*c.other)).has_value();
    case Claim::FreeEquivalence: return M.is_free() && detail::check_free_equivalence(ctx, N).has_value();
    case Claim::ColonSemiprime:
      return c.element && ctx.semiprime(N) && detail::check_colon(N, M.reduce(*c.element)).has_value();
    case Claim::QuotientCorrespondence:
      return lattice && detail::check_quotient(ctx, N, ctx.lattice()).has_value();
  }
  return false;
}

/// Separation examples listed per pair in reports; counts are always complete.
inline constexpr std::size_t kSeparationExamples = 10;

inline nlohmann::json to_json(const VerificationReport& r, bool timing = true) {
  using nlohmann::json;
  json claims = json::array();
  for (const auto& c : r.claims) {
    json cx = json::array();
    for (const auto& x : c.counterexamples) cx.push_back(to_json(x));
    claims.push_back({{"id", std::string(claim_id(c.claim))},
                      {"status", c.skipped ? "SKIPPED" : (c.failed ? "FAIL" : "PASS")},
                      {"checked", c.checked},
                      {"passed", c.passed},
                      {"failed", c.failed},
                      {"counterexamples", std::move(cx)}});
  }
  json separations = json::object();
  for (const auto& [name, examples] : r.separations) {
    json list = json::array();
    for (std::size_t i = 0; i < examples.size() && i < kSeparationExamples; ++i) {
      const auto& ex = examples[i];
      list.push_back({{"instance", ex.instance},
                      {"module", json_io::module(ex.module)},
                      {"submodule", json_io::members(ex.submodule)},
                      {"witness", json_io::witness(ex.module, ex.witness)}});
    }
    separations[name] = {{"count", examples.size()}, {"examples", std::move(list)}};
  }
  std::size_t checked = 0;
  for (const auto& c : r.claims) checked += c.checked;
  json summary = {{"checked", checked},
                  {"failed", r.total_failed()},
                  {"modules", r.modules},
                  {"submodules", r.submodules},
                  {"status", r.all_pass() ? "PASS" : "FAIL"}};
  if (timing) summary["wall_time_ms"] = static_cast<std::int64_t>(r.wall_time_ms);
  std::vector<std::string> rings;
  for (const auto& d : r.spec.rings) rings.push_back(d.to_string());
  json corpus = {{"rings", rings},
                 {"max_rank", r.spec.max_rank},
                 {"free", r.spec.free_modules},
                 {"cyclic_relations", r.spec.cyclic_relations},
                 {"random_relations", r.spec.random_relations},
                 {"max_module_size", r.spec.max_module_size},
                 {"element_bound", r.spec.element_bound},
                 {"lattice_bound", r.spec.lattice_bound},
                 {"submodule_samples", r.spec.submodule_samples},
                 {"seed", r.spec.seed},
                 {"sampled_modules", r.sampled}};
  return {{"claims", std::move(claims)},
          {"corpus", std::move(corpus)},
          {"separations", std::move(separations)},
          {"summary", std::move(summary)}};
}

inline std::string render_text(const VerificationReport& r, bool timing = true) {
  std::ostringstream out;
  out << "corpus: " << r.modules << " modules, " << r.submodules << " submodules";
  if (!r.sampled.empty()) out << " (" << r.sampled.size() << " modules sampled)";
  out << "\n";
  for (const auto& c : r.claims) {
    out << claim_id(c.claim) << ": ";
    if (c.skipped) {
      out << "SKIPPED (no module within the lattice bound)\n";
      continue;
    }
    out << (c.failed ? "FAIL" : "PASS") << "  checked " << c.checked << ", failed " << c.failed << "\n";
    for (const auto& x : c.counterexamples)
      out << "  " << x.instance << " " << x.ring.to_string() << " rank " << x.rank << ": " << x.detail << "\n";
  }
  for (const auto& [name, examples] : r.separations) {
    out << "separation " << name << ": " << examples.size() << " instance" << (examples.size() == 1 ? "" : "s") << "\n";
    for (std::size_t i = 0; i < examples.size() && i < kSeparationExamples; ++i) {
      const auto& ex = examples[i];
      out << "  " << ex.instance << " " << detail::module_text(ex.module) << ": N = " << detail::members_text(ex.submodule)
          << "\n";
    }
  }
  out << "summary: " << (r.all_pass() ? "PASS" : "FAIL") << ", " << r.total_failed() << " failures";
  if (timing) out << ", " << static_cast<std::int64_t>(r.wall_time_ms) << " ms";
  out << "\n";
  return out.str();
}

}  // namespace semirad

#endif  // SEMIRAD_VERIFY_HPP
