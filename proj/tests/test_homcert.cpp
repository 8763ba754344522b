#include <gtest/gtest.h>

#include "hammock/certificate_io.hpp"
#include "hammock/homcert.hpp"
#include "hammock/theorems.hpp"
#include "support/fixtures.hpp"

namespace hammock {
namespace {

using testing::fixture_category;
using testing::load_fixture;

HomotopyCertificate without_column_maps(HomotopyCertificate cert) {
  for (auto& f : cert.functors) f.annotation.reset();
  for (auto& s : cert.steps) {
    s.transformation.from.annotation.reset();
    s.transformation.to.annotation.reset();
  }
  return cert;
}

/// The exhaustive functor-by-functor check, bypassing column maps.
std::optional<CertificateFailure> generic_check(const HomotopyCertificate& cert) {
  return verify_certificate<HammockStage, HammockStage>(without_column_maps(cert));
}

/// Same functors and steps, with one component altered at zig-zag `victim`.
HomotopyCertificate tamper(HomotopyCertificate cert, const ZigZag& victim, std::size_t column, MorphismId with) {
  auto& eta = cert.steps.front().transformation;
  auto original = eta.component;
  eta.component = [original, victim, column, with](const ZigZag& z) {
    auto l = original(z);
    if (z == victim) l.columns[column] = with;
    return l;
  };
  return cert;
}

struct Thm31Case {
  std::shared_ptr<const RelCat> r;
  LeftHomotopyData h;
  StagePtr s;
};

Thm31Case thm31_case(std::size_t n) {
  auto m = load_fixture("cylfix.spec");
  auto r = m.primary();
  auto a = r->cat().object("A");
  return {r, m.homotopies.at("H"), make_stage(r, a, a, n)};
}

TEST(Certificate, FastAndGenericVerifiersAgreeOnValidCertificate) {
  auto c = thm31_case(3);
  auto cert = thm31_certificate(c.s, c.h);
  EXPECT_FALSE(verify_certificate(cert));
  EXPECT_FALSE(generic_check(cert));
}

TEST(Certificate, TamperedComponentIsCaughtByBothVerifiers) {
  auto c = thm31_case(3);
  auto cert = thm31_certificate(c.s, c.h);
  const FinCat& base = c.r->cat();
  // Find a zig-zag whose first-step component has a column we can break.
  const auto& eta = cert.steps.front().transformation;
  for (const auto& z : c.s->objects()) {
    auto l = eta(z);
    for (std::size_t k = 1; k + 1 < l.columns.size(); ++k) {
      for (auto other : base.hom(base.source(l.columns[k]), base.target(l.columns[k]))) {
        if (other == l.columns[k]) continue;
        auto broken = tamper(cert, z, k, other);
        if (!check_ladder(*c.r, broken.steps.front().transformation(z))) continue;
        EXPECT_TRUE(verify_certificate(broken));
        EXPECT_TRUE(generic_check(broken));
        return;
      }
    }
  }
  GTEST_SKIP() << "no alternative column keeps the component a ladder";
}

TEST(Certificate, BrokenLadderComponentFails) {
  auto c = thm31_case(1);
  auto cert = thm31_certificate(c.s, c.h);
  const FinCat& base = c.r->cat();
  auto z = c.s->objects().front();
  auto broken = tamper(cert, z, 0, base.morphism("i0p"));
  auto result = verify_stage_certificate(broken, "broken");
  EXPECT_EQ(result.verdict, Verdict::fail);
  EXPECT_TRUE(verify_certificate(broken));
}

TEST(Certificate, ShapeMismatchFails) {
  auto c = thm31_case(1);
  auto cert = thm31_certificate(c.s, c.h);
  cert.functors.pop_back();
  auto failure = verify_certificate(cert);
  ASSERT_TRUE(failure);
  EXPECT_EQ(failure->violation.law, "certificate-shape");
}

TEST(Certificate, EmptyCertificateVerifies) {
  auto c = thm31_case(3);
  auto cert = empty_certificate(inclusion_functor(c.s, 1));
  EXPECT_EQ(cert.length(), 0u);
  EXPECT_FALSE(verify_certificate(cert));
}

TEST(Certificate, WhiskeringPreservesValidity) {
  auto c = thm31_case(3);
  auto cert = thm31_certificate(c.s, c.h);
  EXPECT_FALSE(verify_certificate(whisker_post(cert, inclusion_functor(cert.start().target, 0))));
  auto pre = whisker_pre(cert, inclusion_functor(make_stage(c.r, c.s->from(), c.s->to(), 1), 1));
  EXPECT_FALSE(verify_certificate(pre));
  EXPECT_THROW(whisker_pre(cert, inclusion_functor(c.s, 1)), std::invalid_argument);
}

TEST(Certificate, ComposeRequiresMatchingEnds) {
  auto c = thm31_case(1);
  auto cert = thm31_certificate(c.s, c.h);
  EXPECT_THROW(compose_certificates(cert, cert), std::invalid_argument);
  auto finish = empty_certificate(cert.finish());
  auto joined = compose_certificates(cert, finish);
  EXPECT_EQ(joined.length(), cert.length());
}

TEST(Replay, SerializedThm31CertificatesReplay) {
  auto m = load_fixture("cylfix.spec");
  auto r = m.primary();
  auto family = build_thm31(r, m.homotopies.at("H"), r->cat().object("A"), 5);
  EXPECT_FALSE(replay_family(*r, serialize_family(family)));
  for (const auto& cert : family.certificates) EXPECT_FALSE(replay_certificate(*r, serialize_certificate(cert)));
}

TEST(Replay, DetectsTamperedJson) {
  auto c = thm31_case(3);
  auto j = serialize_certificate(thm31_certificate(c.s, c.h));
  auto components = j["steps"][0]["components"];
  // Swap two components: typing or naturality must break somewhere.
  bool caught = false;
  for (std::size_t a = 0; a < components.size() && !caught; ++a) {
    for (std::size_t b = a + 1; b < components.size() && !caught; ++b) {
      if (components[a] == components[b]) continue;
      auto bad = j;
      std::swap(bad["steps"][0]["components"][a], bad["steps"][0]["components"][b]);
      caught = replay_certificate(*c.r, bad).has_value();
    }
  }
  EXPECT_TRUE(caught);
  auto missing = j;
  missing["zigzags"].erase(0);
  auto v = replay_certificate(*c.r, missing);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->law, "replay");
  auto garbled = j;
  garbled.erase("steps");
  v = replay_certificate(*c.r, garbled);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->law, "replay-format");
}

TEST(Replay, TransformationCertificatesAcrossCategories) {
  auto m = load_fixture("pt_arr.spec");
  auto pt = m.category("PT");
  auto arr = m.category("ARR");
  const auto& eta = m.nats.at("eta");
  TransformationInput in{pt, arr, eta.from, eta.to, eta};
  auto star = pt->cat().object("*");
  auto family = build_thm32(in, star, star, 5);
  EXPECT_FALSE(replay_family(*pt, *arr, serialize_family(family)));
}

}  // namespace
}  // namespace hammock
