#include <gtest/gtest.h>

#include "hammock/relcat.hpp"
#include "hammock/spec_file.hpp"
#include "support/fixtures.hpp"

namespace hammock {
namespace {

using testing::load_fixture;

TEST(Cylinder, FixtureCylinderAndHomotopyValidate) {
  auto m = load_fixture("cylfix.spec");
  auto r = m.primary();
  const auto& cyl = m.cylinders.at("CYLFIX").at("A");
  EXPECT_FALSE(validate_cylinder(*r, cyl));
  const auto& h = m.homotopies.at("H");
  EXPECT_FALSE(validate_left_homotopy(*r, h));
  EXPECT_EQ(r->cat().morphism_name(h.f), "f");
  EXPECT_EQ(r->cat().morphism_name(h.g), "g");
}

TEST(Cylinder, SwappedEndsAreRejected) {
  auto m = load_fixture("cylfix.spec");
  auto r = m.primary();
  auto h = m.homotopies.at("H");
  std::swap(h.f, h.g);
  auto v = validate_left_homotopy(*r, h);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->law, "left-homotopy");
}

TEST(Cylinder, NonWeqProjectionIsRejected) {
  auto m = load_fixture("cylfix.spec");
  auto r = m.primary();
  auto cyl = m.cylinders.at("CYLFIX").at("A");
  cyl.p = r->cat().morphism("fp");  // wrong type as well
  EXPECT_TRUE(validate_cylinder(*r, cyl));
}

TEST(Cylinder, DegenerateAndConstant) {
  auto r = load_fixture("cylfix.spec").primary();
  const auto& c = r->cat();
  auto d = degenerate_cylinder(c, c.object("B"));
  EXPECT_FALSE(validate_cylinder(*r, d));
  auto h = constant_homotopy(c, c.morphism("f"));
  EXPECT_FALSE(validate_left_homotopy(*r, h));
  EXPECT_EQ(h.f, h.g);
}

TEST(Witness, StrictAndHomotopy) {
  auto m = load_fixture("cylfix.spec");
  auto r = m.primary();
  const auto& c = r->cat();
  EXPECT_FALSE(validate_witness(*r, Strict{}, c.morphism("f"), c.morphism("f")));
  EXPECT_TRUE(validate_witness(*r, Strict{}, c.morphism("f"), c.morphism("g")));
  HomotopyWitness h = m.homotopies.at("H");
  EXPECT_FALSE(validate_witness(*r, h, c.morphism("f"), c.morphism("g")));
  EXPECT_TRUE(validate_witness(*r, h, c.morphism("g"), c.morphism("f")));
  auto realized = realize(c, Strict{}, c.morphism("g"));
  EXPECT_EQ(realized.f, c.morphism("g"));
  EXPECT_FALSE(validate_left_homotopy(*r, realized));
}

TEST(Monad, IdemfixMonadAndAlgebra) {
  auto m = load_fixture("idemfix.spec");
  auto r = m.primary();
  EXPECT_FALSE(validate_monad(*r, m.monads.at("T")));
  EXPECT_FALSE(validate_hoalgebra(*r, m.algebras.at("alg")));
  auto alg = m.algebras.at("alg");
  alg.carrier = r->cat().object("X");
  alg.action = r->cat().morphism("w");  // T X = Y, so a : Y -> X is needed
  EXPECT_TRUE(validate_hoalgebra(*r, alg));
}

TEST(Idempotent, IdemfixIsHomotopyIdempotent) {
  auto m = load_fixture("idemfix.spec");
  auto r = m.primary();
  auto rep = validate_idempotent(*r, m.idems.at("I"), 8);
  EXPECT_EQ(rep.verdict, Verdict::pass);
  EXPECT_FALSE(rep.failure);
}

TEST(Idempotent, IdentityWithNonWeqCoaugmentationFails) {
  auto m = load_fixture("idemp.spec");
  auto r = m.primary();
  auto rep = validate_idempotent(*r, m.idems.at("I"), 8);
  EXPECT_EQ(rep.verdict, Verdict::fail);
  ASSERT_TRUE(rep.failure);
}

}  // namespace
}  // namespace hammock
