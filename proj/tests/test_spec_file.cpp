#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "hammock/spec_file.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace hammock {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SourcePos error_position(std::string_view text) {
  try {
    load_model_text(text);
  } catch (const ParseError& e) {
    return e.pos();
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return {};
}

std::string error_message(std::string_view text) {
  try {
    load_model_text(text);
  } catch (const ParseError& e) {
    return e.message();
  }
  return "";
}

TEST(SpecFile, WeqFixture) {
  auto m = testing::load_fixture("weq.spec");
  auto r = m.primary();
  const auto& c = r->cat();
  EXPECT_EQ(c.object_count(), 2u);
  EXPECT_EQ(c.morphism_count(), 3u);
  ASSERT_EQ(r->weqs().size(), 3u);
  EXPECT_TRUE(r->is_weq(c.morphism("id_X")));
  EXPECT_TRUE(r->is_weq(c.morphism("id_Y")));
  EXPECT_TRUE(r->is_weq(c.morphism("w")));
}

TEST(SpecFile, EmptyFile) {
  auto pos = error_position("");
  EXPECT_EQ(pos.line, 1u);
  EXPECT_EQ(pos.column, 1u);
  EXPECT_EQ(error_message(""), "expected 'category'");
  EXPECT_EQ(error_message("# only a comment\n"), "expected 'category'");
}

TEST(SpecFile, UnknownObjectIsPositioned) {
  auto pos = error_position("category C\nobject X\narrow f : X -> Q\n");
  EXPECT_EQ(pos.line, 3u);
  EXPECT_EQ(pos.column, 16u);
}

TEST(SpecFile, UnknownKeywordIsPositioned) {
  auto pos = error_position("category C\n  objekt X\n");
  EXPECT_EQ(pos.line, 2u);
  EXPECT_EQ(pos.column, 3u);
}

TEST(SpecFile, MissingBraceAndDuplicates) {
  EXPECT_NE(error_message("category C\nobject X\nfunctor F { obj X => X;\n"), "");
  EXPECT_NE(error_message("category C\nobject X\nobject X\n").find("duplicate"), std::string::npos);
}

TEST(SpecFile, CompositionLawsAreValidated) {
  // f and g compose in table mode but no composite is declared.
  EXPECT_THROW(load_model_text("category C\nobject X Y Z\narrow f : X -> Y\narrow g : Y -> Z\n"), ValidationError);
  EXPECT_NO_THROW(load_model_text("category C\nmode free-acyclic\nobject X Y Z\narrow f : X -> Y\narrow g : Y -> Z\n"));
  EXPECT_THROW(load_model_text("category C\nobject X Y\narrow f : X -> Y\nweq g\n"), ParseError);
}

TEST(SpecFile, WeqClosureIsChecked) {
  auto text = "category C\nmode free-acyclic\nobject X Y Z\narrow f : X -> Y\narrow g : Y -> Z\nweq f g\n";
  EXPECT_THROW(load_model_text(text), ValidationError);
}

TEST(SpecFile, FixturesRoundTrip) {
  for (const char* file : {"pt.spec", "arr.spec", "weq.spec", "para.spec", "iso.spec", "free3.spec", "cylfix.spec",
                           "idemfix.spec", "pt_arr.spec", "idemp.spec"}) {
    auto parsed = parse_spec(read_file(testing::fixture_path(file)));
    auto text = serialize_spec(parsed);
    EXPECT_EQ(parse_spec(text), parsed) << file;
    EXPECT_EQ(serialize_spec(parse_spec(text)), text) << file;
    EXPECT_NO_THROW(load_model(parsed)) << file;
  }
}

TEST(SpecFile, RandomCategoriesRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) {
    auto r = testing::random_relcat(rng);
    SpecFile s{{to_decl(*r)}};
    auto text = serialize_spec(s);
    auto again = parse_spec(text);
    ASSERT_EQ(again, s) << text;
    auto loaded = load_model(again).primary();
    const auto& a = r->cat();
    const auto& b = loaded->cat();
    ASSERT_EQ(a.morphism_count(), b.morphism_count());
    for (auto g : a.morphisms()) {
      auto gb = b.morphism(a.morphism_name(g));
      EXPECT_EQ(r->is_weq(g), loaded->is_weq(gb));
      for (auto f : a.morphisms_to(a.source(g))) {
        EXPECT_EQ(a.morphism_name(a.comp(g, f)), b.morphism_name(b.comp(gb, b.morphism(a.morphism_name(f)))));
      }
    }
  }
}

TEST(SpecFile, PayloadsResolve) {
  auto m = testing::load_fixture("idemfix.spec");
  ASSERT_TRUE(m.functors.contains("L"));
  ASSERT_TRUE(m.nats.contains("mu"));
  const auto& c = m.primary()->cat();
  EXPECT_EQ(m.functors.at("L")(c.object("X")), c.object("Y"));
  EXPECT_EQ(m.nats.at("ell")(c.object("X")), c.morphism("w"));
  EXPECT_EQ(m.monads.at("T").endofunctor.object_map, m.functors.at("L").object_map);
  EXPECT_EQ(m.algebras.at("alg").carrier, c.object("Y"));
  EXPECT_EQ(m.idem_category.at("I"), "IDEMFIX");
  EXPECT_EQ(m.idems.at("I").witnesses.size(), 2u);
}

TEST(SpecFile, FunctorsBetweenCategories) {
  auto m = testing::load_fixture("pt_arr.spec");
  EXPECT_EQ(m.order, (std::vector<std::string>{"PT", "ARR"}));
  const auto& f = m.functors.at("F");
  EXPECT_EQ(f.source->name(), "PT");
  EXPECT_EQ(f.target->name(), "ARR");
  EXPECT_EQ(m.nats.at("eta").components.size(), 1u);
}

TEST(SpecFile, CommentsAndOptionalSemicolons) {
  auto a = parse_spec("category C # trailing\nobject X;\n;;object Y\narrow f : X -> Y;\n");
  auto b = parse_spec("category C\nobject X\nobject Y\narrow f : X -> Y\n");
  EXPECT_EQ(a, b);
  auto multi = parse_spec("category C\nobject X Y\n");
  EXPECT_EQ(multi, parse_spec("category C\nobject X\nobject Y\n"));
}

TEST(SpecFile, MissingFile) { EXPECT_THROW(load_model_file("/nonexistent/file.spec"), std::runtime_error); }

}  // namespace
}  // namespace hammock
