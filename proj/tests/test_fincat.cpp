#include <gtest/gtest.h>

#include <random>

#include "hammock/fincat.hpp"
#include "hammock/relcat.hpp"
#include "support/generators.hpp"

namespace hammock {
namespace {

RawCategory arrow_category() {
  RawCategory raw{"ARR", {"X", "Y"}, {{"id_X", "X", "X"}, {"id_Y", "Y", "Y"}, {"f", "X", "Y"}}, {}, {}};
  raw.identities = {{"X", "id_X"}, {"Y", "id_Y"}};
  raw.compositions = {{"id_X", "id_X", "id_X"}, {"id_Y", "id_Y", "id_Y"}, {"f", "id_X", "f"}, {"id_Y", "f", "f"}};
  return raw;
}

std::string law_of(const RawCategory& raw) {
  try {
    FinCat::validate(raw);
  } catch (const ValidationError& e) {
    return e.violation().law;
  }
  return "";
}

TEST(FinCat, ArrowCategoryValidates) {
  auto c = FinCat::validate(arrow_category());
  EXPECT_EQ(c.object_count(), 2u);
  EXPECT_EQ(c.morphism_count(), 3u);
  auto f = c.morphism("f");
  EXPECT_EQ(c.compose(c.identity(c.object("Y")), f), f);
  EXPECT_EQ(c.compose(f, f), std::nullopt);
  EXPECT_EQ(c.comp(f, f), FinCat::no_morphism());
  EXPECT_EQ(c.hom(c.object("X"), c.object("Y")).size(), 1u);
  EXPECT_TRUE(c.hom(c.object("Y"), c.object("X")).empty());
}

TEST(FinCat, RejectsMissingComposite) {
  auto raw = arrow_category();
  raw.compositions.pop_back();
  EXPECT_EQ(law_of(raw), "missing-composite");
}

TEST(FinCat, RejectsIdentityLaw) {
  auto raw = arrow_category();
  raw.morphisms.push_back({"g", "X", "Y"});
  raw.compositions = {{"id_X", "id_X", "id_X"}, {"id_Y", "id_Y", "id_Y"}, {"f", "id_X", "g"},
                      {"id_Y", "f", "f"},       {"g", "id_X", "g"},       {"id_Y", "g", "g"}};
  EXPECT_EQ(law_of(raw), "identity");
}

TEST(FinCat, RejectsNonAssociativeTable) {
  // Idempotents e, u on X with inconsistent products.
  RawCategory raw{"BAD", {"X"}, {{"id_X", "X", "X"}, {"e", "X", "X"}, {"u", "X", "X"}}, {{"X", "id_X"}}, {}};
  for (auto a : {"id_X", "e", "u"}) {
    raw.compositions.push_back({"id_X", a, a});
    if (std::string(a) != "id_X") raw.compositions.push_back({a, "id_X", a});
  }
  raw.compositions.push_back({"e", "e", "e"});
  raw.compositions.push_back({"u", "u", "u"});
  raw.compositions.push_back({"e", "u", "e"});
  raw.compositions.push_back({"u", "e", "e"});
  EXPECT_EQ(law_of(raw), "");
  // x∘y = x for non-identities: a left-zero semigroup.
  raw.compositions.back() = {"u", "e", "u"};
  EXPECT_EQ(law_of(raw), "");
  raw.compositions.back() = {"u", "e", "id_X"};
  EXPECT_EQ(law_of(raw), "associativity");
}

TEST(FinCat, RejectsUndeclaredObject) {
  auto raw = arrow_category();
  raw.morphisms.push_back({"g", "X", "Z"});
  EXPECT_EQ(law_of(raw), "unknown-object");
}

TEST(FinCat, FreeAcyclicCountsPaths) {
  FreeGraph g{"F", {"X", "Y", "Z"}, {{"a", "X", "Y"}, {"b", "Y", "Z"}, {"c", "X", "Z"}}};
  auto c = free_acyclic(g);
  EXPECT_EQ(c.morphism_count(), 3u + 3u + 1u);
  auto ba = c.morphism("b.a");
  EXPECT_EQ(c.compose(c.morphism("b"), c.morphism("a")), ba);
  EXPECT_EQ(c.hom(c.object("X"), c.object("Z")).size(), 2u);
}

TEST(FinCat, FreeAcyclicRejectsCycle) {
  FreeGraph g{"F", {"X", "Y"}, {{"a", "X", "Y"}, {"b", "Y", "X"}}};
  try {
    free_acyclic(g);
    FAIL() << "cycle accepted";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violation().law, "cycle");
  }
}

TEST(FinCat, RawRoundTrip) {
  FreeGraph g{"F", {"X", "Y", "Z"}, {{"a", "X", "Y"}, {"b", "Y", "Z"}}};
  auto c = free_acyclic(g);
  auto again = FinCat::validate(c.to_raw());
  ASSERT_EQ(again.morphism_count(), c.morphism_count());
  for (auto m : c.morphisms()) {
    auto n = again.morphism(c.morphism_name(m));
    EXPECT_EQ(again.object_name(again.source(n)), c.object_name(c.source(m)));
    EXPECT_EQ(again.object_name(again.target(n)), c.object_name(c.target(m)));
  }
}

TEST(FinCat, InverseOf) {
  RawCategory raw{"ISO", {"X", "Y"}, {{"id_X", "X", "X"}, {"id_Y", "Y", "Y"}, {"u", "X", "Y"}, {"v", "Y", "X"}},
                  {{"X", "id_X"}, {"Y", "id_Y"}}, {}};
  raw.compositions = {{"id_X", "id_X", "id_X"}, {"id_Y", "id_Y", "id_Y"}, {"u", "id_X", "u"}, {"id_Y", "u", "u"},
                      {"v", "id_Y", "v"},       {"id_X", "v", "v"},       {"v", "u", "id_X"}, {"u", "v", "id_Y"}};
  auto c = FinCat::validate(raw);
  EXPECT_EQ(inverse_of(c, c.morphism("u")), c.morphism("v"));
  auto arr = FinCat::validate(arrow_category());
  EXPECT_EQ(inverse_of(arr, arr.morphism("f")), std::nullopt);
}

TEST(FinCat, FunctorDataLaws) {
  auto c = std::make_shared<const FinCat>(FinCat::validate(arrow_category()));
  auto id = identity_functor_data(c);
  EXPECT_FALSE(check_functor(id));
  EXPECT_FALSE(check_functor(compose(id, id)));
  // Collapse X onto Y but send f to the identity of X: not a functor.
  FunctorData bad{"bad", c, c, {c->object("Y"), c->object("Y")},
                  {c->identity(c->object("X")), c->identity(c->object("Y")), c->identity(c->object("X"))}};
  bad.morphism_map[c->morphism("id_X").value] = c->identity(c->object("Y"));
  bad.morphism_map[c->morphism("f").value] = c->identity(c->object("X"));
  EXPECT_TRUE(check_functor(bad));
  EXPECT_FALSE(check_nat_trans(identity_nat_trans_data(id)));
}

TEST(FinCat, ComponentsOfDisconnectedCategory) {
  FreeGraph g{"F", {"X", "Y", "Z"}, {{"a", "X", "Y"}}};
  auto c = free_acyclic(g);
  auto comps = connected_components(c);
  EXPECT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps.class_of[c.object("X").value], comps.class_of[c.object("Y").value]);
}

TEST(RelCat, ValidateRequiresIdentitiesAndClosure) {
  FreeGraph g{"F", {"X", "Y", "Z"}, {{"a", "X", "Y"}, {"b", "Y", "Z"}}};
  auto c = std::make_shared<const FinCat>(free_acyclic(g));
  std::vector<MorphismId> ids;
  for (auto o : c->objects()) ids.push_back(c->identity(o));
  auto with = [&](std::vector<MorphismId> extra) {
    auto w = ids;
    w.insert(w.end(), extra.begin(), extra.end());
    return w;
  };
  EXPECT_NO_THROW(RelCat::validate(c, with({c->morphism("a")})));
  try {
    RelCat::validate(c, with({c->morphism("a"), c->morphism("b")}));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violation().law, "weq-closure");
  }
  try {
    RelCat::validate(c, {c->morphism("a")});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violation().law, "weq-identity");
  }
  auto closed = weq_closure(*c, {c->morphism("a"), c->morphism("b")});
  EXPECT_EQ(closed.size(), ids.size() + 3);
  EXPECT_NO_THROW(RelCat::validate(c, closed));
}

TEST(RelCat, TwoOutOfThreeDiagnostic) {
  FreeGraph g{"F", {"X", "Y", "Z"}, {{"a", "X", "Y"}, {"b", "Y", "Z"}}};
  auto c = std::make_shared<const FinCat>(free_acyclic(g));
  auto r = RelCat::validate(c, weq_closure(*c, {c->morphism("b.a"), c->morphism("b")}));
  auto v = check_two_out_of_three(r);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->law, "two-out-of-three");
  auto all = RelCat::validate(c, c->morphisms());
  EXPECT_FALSE(check_two_out_of_three(all));
}

TEST(RelCat, RandomInstancesValidate) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto r = testing::random_relcat(rng);
    EXPECT_LE(r->cat().object_count(), 4u);
    EXPECT_LE(r->cat().morphism_count(), 12u);
    for (auto o : r->cat().objects()) EXPECT_TRUE(r->is_weq(r->cat().identity(o)));
  }
}

}  // namespace
}  // namespace hammock
