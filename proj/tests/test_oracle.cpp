#include <gtest/gtest.h>

#include <map>
#include <random>
#include <tuple>

#include "hammock/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace hammock {
namespace {

using testing::fixture_category;

struct Expected {
  const char* file;
  const char* from;
  const char* to;
  std::size_t classes;
};

// Hom-set sizes of the localizations, worked out by hand: inverting w in
// X -> Y makes X and Y isomorphic; ARR, ISO and PT have no non-identity weak
// equivalences, so localization changes nothing.
const Expected kSaturated[] = {
    {"pt.spec", "*", "*", 1},   {"arr.spec", "X", "X", 1},  {"arr.spec", "X", "Y", 1},
    {"arr.spec", "Y", "X", 0},  {"arr.spec", "Y", "Y", 1},  {"weq.spec", "X", "X", 1},
    {"weq.spec", "X", "Y", 1},  {"weq.spec", "Y", "X", 1},  {"weq.spec", "Y", "Y", 1},
    {"iso.spec", "X", "X", 1},  {"iso.spec", "X", "Y", 1},  {"iso.spec", "Y", "X", 1},
    {"iso.spec", "Y", "Y", 1},  {"free3.spec", "Y", "X", 1}, {"free3.spec", "Z", "X", 0},
    {"free3.spec", "X", "Z", 1}, {"free3.spec", "Z", "Y", 0}, {"free3.spec", "Y", "Z", 1},
};

TEST(Oracle, SaturatesOnFixtures) {
  for (const auto& e : kSaturated) {
    auto r = fixture_category(e.file);
    auto rep = localize_hom(*r, r->cat().object(e.from), r->cat().object(e.to), 8);
    EXPECT_EQ(rep.verdict, Saturation::saturated) << e.file << " " << e.from << "->" << e.to << ": " << rep.reason;
    EXPECT_EQ(rep.classes.size(), e.classes) << e.file << " " << e.from << "->" << e.to;
  }
}

TEST(Oracle, ParallelPairStaysUnknown) {
  auto r = fixture_category("para.spec");
  const auto& c = r->cat();
  for (auto [x, y] : {std::pair{"A", "A"}, {"B", "A"}, {"A", "B"}}) {
    auto rep = localize_hom(*r, c.object(x), c.object(y), 8);
    EXPECT_EQ(rep.verdict, Saturation::unknown) << x << "->" << y;
    EXPECT_FALSE(rep.reason.empty());
  }
  auto bb = localize_hom(*r, c.object("B"), c.object("B"), 8);
  EXPECT_EQ(bb.verdict, Saturation::unknown);
}

TEST(Oracle, ClassesGrowWithTheBoundOnParallelPair) {
  auto r = fixture_category("para.spec");
  const auto& c = r->cat();
  auto small = localize_hom(*r, c.object("A"), c.object("A"), 4);
  auto large = localize_hom(*r, c.object("A"), c.object("A"), 8);
  EXPECT_LT(small.classes.size(), large.classes.size());
}

TEST(Oracle, InverseCancels) {
  auto r = fixture_category("weq.spec");
  const auto& c = r->cat();
  auto w = c.morphism("w");
  auto round = then(word_of(c, w), formal_inverse(*r, w));
  EXPECT_EQ(equal_in_localization(*r, round, empty_word(c.object("X")), 8), Equality::yes);
  EXPECT_THROW(formal_inverse(*fixture_category("arr.spec"), fixture_category("arr.spec")->cat().morphism("f")),
               std::invalid_argument);
}

TEST(Oracle, DistinctParallelMapsStayDistinct) {
  auto r = fixture_category("para.spec");
  const auto& c = r->cat();
  EXPECT_NE(equal_in_localization(*r, word_of(c, c.morphism("f")), word_of(c, c.morphism("w")), 8),
            Equality::yes);
}

TEST(Oracle, WordBasics) {
  auto r = fixture_category("free3.spec");
  const auto& c = r->cat();
  auto a = word_of(c, c.morphism("a"));
  auto b = word_of(c, c.morphism("b"));
  auto ba = then(a, b);
  EXPECT_FALSE(check_word(*r, ba));
  EXPECT_EQ(to_string(c, ba), "b . a");
  EXPECT_THROW(then(b, a), std::invalid_argument);
  EXPECT_EQ(to_string(c, empty_word(c.object("X"))), "id_X");
  auto rewrites = one_step_rewrites(*r, ba);
  ASSERT_EQ(rewrites.size(), 1u);
  EXPECT_EQ(rewrites[0].size(), 1u);
  EXPECT_TRUE(word_of(c, c.identity(c.object("Y"))).letters.empty());
}

TEST(Oracle, CancellationRewrite) {
  auto r = fixture_category("weq.spec");
  const auto& c = r->cat();
  auto w = c.morphism("w");
  auto word = then(formal_inverse(*r, w), word_of(c, w));
  auto rewrites = one_step_rewrites(*r, word);
  ASSERT_EQ(rewrites.size(), 1u);
  EXPECT_TRUE(rewrites[0].letters.empty());
}

TEST(Oracle, MergesAreSoundOnRandomInstances) {
  // Without weak equivalences beyond identities the localization is the
  // category itself, so saturation must reproduce every hom-set exactly.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    auto c = testing::random_table_category(rng);
    std::vector<MorphismId> ids;
    for (auto o : c->objects()) ids.push_back(c->identity(o));
    auto r = RelCat::validate(c, ids);
    for (auto x : c->objects()) {
      for (auto y : c->objects()) {
        auto rep = localize_hom(r, x, y, 6);
        ASSERT_EQ(rep.verdict, Saturation::saturated);
        EXPECT_EQ(rep.classes.size(), c->hom(x, y).size());
      }
    }
  }
}

TEST(Oracle, Deterministic) {
  auto r = fixture_category("para.spec");
  const auto& c = r->cat();
  auto a = localize_hom(*r, c.object("A"), c.object("B"), 6);
  auto b = localize_hom(*r, c.object("A"), c.object("B"), 6);
  ASSERT_EQ(a.classes.size(), b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) EXPECT_EQ(a.classes[i], b.classes[i]);
  EXPECT_EQ(a.words_explored, b.words_explored);
}

}  // namespace
}  // namespace hammock
