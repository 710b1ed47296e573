#include <gtest/gtest.h>

#include "semirad/instance.hpp"

using namespace semirad;

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ParseError(0, 0, "");
}

}  // namespace

TEST(ParseInstance, FreeZ4WithZeroSubmodule) {
  const auto inst = parse_instance("ring Z/4\nmodule rank=1 relations=[]\nsubmodule N gens=[]");
  EXPECT_EQ(inst.ring, RingDescriptor::modular(4));
  EXPECT_EQ(inst.rank, 1u);
  EXPECT_TRUE(inst.relations.empty());
  ASSERT_EQ(inst.submodules.size(), 1u);
  EXPECT_EQ(inst.submodules[0].name, "N");

  const auto loaded = load_instance(inst);
  EXPECT_TRUE(loaded.module.is_free());
  EXPECT_EQ(loaded.module.size(), 4u);
  EXPECT_TRUE(loaded.submodule("N").is_zero());
}

TEST(ParseInstance, RankTwo) {
  const auto inst = parse_instance("ring Z/4\nmodule rank=2 relations=[]\nsubmodule N gens=[(2,0)]");
  EXPECT_EQ(inst.submodules[0].vectors, (std::vector<Vector>{{2, 0}}));
  const auto loaded = load_instance(inst);
  EXPECT_EQ(loaded.module.size(), 16u);
  EXPECT_EQ(loaded.submodule("N").size(), 2u);
}

TEST(ParseInstance, CommentsWhitespaceAndElements) {
  const auto inst = parse_instance(
      "# header\n"
      "  ring   product( Z/2 ,Z/4 )   # trailing\n"
      "\n"
      "module rank = 2 relations = [ (1, 2) ]\n"
      "submodule A gens=[(1,0), (0,1)]\n"
      "element x = (3, 1)\n");
  EXPECT_EQ(inst.ring.kind, RingDescriptor::Kind::Product);
  EXPECT_EQ(inst.relations, (std::vector<Vector>{{1, 2}}));
  ASSERT_EQ(inst.elements.size(), 1u);
  EXPECT_EQ(inst.elements[0].vector, (Vector{3, 1}));
  const auto loaded = load_instance(inst);
  EXPECT_FALSE(loaded.module.is_free());
  EXPECT_EQ(loaded.elements[0].first, "x");
}

TEST(ParseInstance, GaloisScalarsAsTuples) {
  const auto inst = parse_instance("ring GF(4) poly=[1,1,1]\nmodule rank=2\nsubmodule N gens=[([1,0], 1)]");
  EXPECT_EQ(inst.ring, RingDescriptor::galois(2, 2, {1, 1, 1}));
  // u = [1,0] is code 2; the constant 1 is code 1.
  EXPECT_EQ(inst.submodules[0].vectors, (std::vector<Vector>{{2, 1}}));
  // Omitting the polynomial picks the default one.
  EXPECT_EQ(parse_instance("ring GF(4)\nmodule rank=1").ring, inst.ring);
}

TEST(ParseInstance, LengthMismatchIsReportedAtItsLine) {
  const auto e = parse_error("ring Z/4\nmodule rank=2 relations=[]\nsubmodule N gens=[(1,2,3)]");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_GT(e.column(), 1u);
  EXPECT_NE(e.message().find("rank is 2"), std::string::npos) << e.message();
}

TEST(ParseInstance, Errors) {
  auto at = [](std::string_view text, std::size_t line, std::size_t column) {
    const auto e = parse_error(text);
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  };
  at("ring Z/1\nmodule rank=1", 1, 6);                     // ring rejected by the library
  at("ring Q\nmodule rank=1", 1, 6);                       // unknown descriptor
  at("ring GF(6)\nmodule rank=1", 1, 6);                    // not a prime power
  at("ring Z/4\nmodule rank=1\nsubmodule N gens=[(4)]", 3, 20);  // scalar out of range
  at("ring Z/4\nmodule rank=1\nsubmodule N gens=[]\nelement N = (1)", 4, 9);  // duplicate name
  at("ring Z/4\nmodule rank=1\nsubmodul N gens=[]", 3, 1);
  at("module rank=1", 1, 1);
  at("ring Z/4\n", 1, 1);
  at("ring Z/4\nring Z/2\nmodule rank=1", 2, 1);
  at("ring Z/4\nmodule rank=1 relations=[(1)] extra", 2, 31);
}

TEST(ParseInstance, RoundTrip) {
  const std::vector<std::string> texts = {
      "ring Z/4\nmodule rank=1 relations=[]\nsubmodule N gens=[]",
      "ring Z/12\nmodule rank=2 relations=[(3,0),(0,4)]\nsubmodule N gens=[(1,1)]\nelement e = (2,3)",
      "ring GF(4) poly=[1,1,1]\nmodule rank=2\nsubmodule N gens=[([1,1],[1,0])]",
      "ring product(Z/2, product(Z/3, GF(4)))\nmodule rank=1\nsubmodule A gens=[(5)]\nsubmodule B gens=[]",
  };
  for (const auto& t : texts) {
    const auto once = parse_instance(t);
    const auto rendered = render_instance(once);
    EXPECT_EQ(parse_instance(rendered), once) << rendered;
    EXPECT_EQ(render_instance(parse_instance(rendered)), rendered);
  }
}

TEST(LoadInstance, ElementBound) {
  const auto inst = parse_instance("ring Z/12\nmodule rank=3");
  EXPECT_THROW(load_instance(inst, {1000, 256}), BoundExceeded);
  EXPECT_NO_THROW(load_instance(inst, {2000, 256}));
  EXPECT_THROW(load_instance(parse_instance("ring Z/4\nmodule rank=1\nsubmodule N gens=[]")).submodule("M"),
               std::invalid_argument);
}
