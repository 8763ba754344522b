// Acceptance run: one PASS/FAIL line per criterion, each with its time budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hammock/certificate_io.hpp"
#include "hammock/hammock.hpp"
#include "hammock/oracle.hpp"
#include "hammock/theorems.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/golden.hpp"

namespace hammock {
namespace {

using testing::fixture_category;
using testing::load_fixture;

constexpr std::size_t kDefaultStage = 7;
constexpr std::size_t kDefaultBound = 8;

struct Outcome {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
  void expect_checks(const std::vector<CheckResult>& checks, const std::string& what) {
    expect(!checks.empty(), what + ": no checks");
    for (const auto& c : checks) expect(c.verdict == Verdict::pass, what + ": " + c.label + ": " + c.detail);
  }
  void expect_report(const TheoremReport& t, const std::string& what) {
    expect(t.verdict == Verdict::pass, what + ": verdict " + std::string(to_string(t.verdict)));
    expect_checks(t.checks, what);
  }
};

std::string name_of(const RelCat& r, ObjectId o) { return r.cat().object_name(o); }

Outcome oracle_agreement() {
  Outcome out;
  for (const char* file : {"pt.spec", "arr.spec", "weq.spec", "iso.spec"}) {
    auto r = fixture_category(file);
    for (auto x : r->cat().objects()) {
      for (auto y : r->cat().objects()) {
        std::string where = std::string(file) + " " + name_of(*r, x) + "," + name_of(*r, y);
        auto tower = pi0_tower(r, x, y, kDefaultStage);
        auto oracle = localize_hom(*r, x, y, kDefaultBound);
        out.expect(tower.verdict == TowerVerdict::stable, where + ": tower not stable");
        out.expect(oracle.verdict == Saturation::saturated, where + ": oracle not saturated");
        out.expect(tower.final_components && *tower.final_components == oracle.classes.size(),
                   where + ": tower and oracle disagree");
      }
    }
  }
  return out;
}

Outcome non_stabilization() {
  Outcome out;
  auto r = fixture_category("para.spec");
  const auto& c = r->cat();
  for (auto [x, y] : {std::pair{c.object("B"), c.object("A")}, std::pair{c.object("A"), c.object("A")}}) {
    std::string where = "PARA " + name_of(*r, x) + "," + name_of(*r, y);
    auto tower = pi0_tower(r, x, y, kDefaultStage);
    out.expect(tower.verdict == TowerVerdict::inconclusive, where + ": tower not inconclusive");
    out.expect(!tower.final_components, where + ": tower reported a count");
    out.expect(localize_hom(*r, x, y, kDefaultBound).verdict == Saturation::unknown,
               where + ": oracle not unknown");
  }
  return out;
}

Outcome homotopic_maps() {
  Outcome out;
  auto m = load_fixture("cylfix.spec");
  auto r = m.primary();
  auto family = build_thm31(r, m.homotopies.at("H"), r->cat().object("A"), kDefaultStage);
  out.expect(family.certificates.size() == 4, "expected stages 1, 3, 5, 7");
  out.expect_checks(verify_family(family), "family");
  auto replay = replay_family(*r, Json::parse(serialize_family(family).dump()));
  out.expect(!replay, replay ? "replay: " + replay->law + ": " + replay->message : "");
  return out;
}

Outcome transformations() {
  Outcome out;
  auto check = [&](const TransformationInput& in, ObjectId x, ObjectId y, const std::string& where) {
    out.expect_checks(verify_family(build_thm32(in, x, y, kDefaultStage)), where);
    for (std::size_t n = 1; n <= kDefaultStage; n += 2) {
      auto s = make_stage(in.source, x, y, n);
      auto p = thm32_source_functor(s, in);
      auto q = thm32_target_functor(s, in);
      auto pc = thm32_source_composite(s, in);
      auto qc = thm32_target_composite(s, in);
      for (const auto& z : s->objects()) {
        out.expect(p(z) == pc(z), where + ": source endpoint differs from composite");
        out.expect(q(z) == qc(z), where + ": target endpoint differs from composite");
      }
    }
  };
  auto pt_arr = load_fixture("pt_arr.spec");
  const auto& eta = pt_arr.nats.at("eta");
  TransformationInput arrow{pt_arr.category("PT"), pt_arr.category("ARR"), eta.from, eta.to, eta};
  auto star = arrow.source->cat().object("*");
  check(arrow, star, star, "PT->ARR");
  auto idem = load_fixture("idemfix.spec");
  auto r = idem.primary();
  const auto& ell = idem.nats.at("ell");
  TransformationInput coaug{r, r, ell.from, ell.to, ell};
  for (auto x : r->cat().objects()) {
    for (auto y : r->cat().objects()) check(coaug, x, y, "IDEMFIX " + name_of(*r, x) + "," + name_of(*r, y));
  }
  return out;
}

Outcome positions() {
  Outcome out;
  for (const char* file : {"pt.spec", "arr.spec", "weq.spec", "para.spec", "iso.spec", "free3.spec", "cylfix.spec",
                           "idemfix.spec", "idemp.spec", "pt_arr.spec"}) {
    auto m = load_fixture(file);
    for (const auto& name : m.order) {
      auto r = m.category(name);
      for (auto x : r->cat().objects()) {
        for (auto y : r->cat().objects()) {
          std::string where = std::string(file) + " " + name + " " + name_of(*r, x) + "," + name_of(*r, y);
          out.expect_report(verify_rmk33(r, x, y, 5, std::nullopt, std::nullopt), where);
          for (std::size_t n = 1; n <= 5; n += 2) {
            auto s = make_stage(r, x, y, n);
            for (std::size_t i = 0; i <= n; ++i) out.expect(build_rmk33(s, i, i).length() == 0, where + ": i = j");
          }
        }
      }
    }
  }
  return out;
}

Outcome idempotent() {
  Outcome out;
  auto m = load_fixture("idemfix.spec");
  auto r = m.primary();
  const auto& c = r->cat();
  const auto& d = m.idems.at("I");
  for (auto x : c.objects()) {
    for (auto y : c.objects()) {
      std::string where = name_of(*r, x) + "," + name_of(*r, y);
      auto part1 = build_lemma53_part1(r, d, x, y, 5);
      out.expect(part1.h.size() == 3, where + ": expected h at stages 1, 3, 5");
      out.expect_checks(verify_family(part1.unit_family), where + " unit");
      out.expect_checks(verify_family(part1.counit_family), where + " counit");
    }
  }
  auto part2 = build_lemma53_part2(r, d, c.object("X"), c.object("Y"), 5, kDefaultBound);
  out.expect_checks(verify_family(part2.thm32), "part 2 family");
  out.expect(part2.pi0.basis == Pi0Basis::oracle, "part 2: oracle did not saturate");
  out.expect(part2.pi0.source_classes == 1u && part2.pi0.target_classes == 1u, "part 2: expected 1 <-> 1");
  out.expect(part2.pi0.bijective == true, "part 2: not bijective");
  return out;
}

Outcome algebra_retract() {
  Outcome out;
  auto m = load_fixture("idemfix.spec");
  auto r = m.primary();
  out.expect_report(verify_hoalg_retract(r, m.algebras.at("alg"), r->cat().morphism("w"), 5), "retract");
  return out;
}

Outcome law_suites() {
  Outcome out;
  std::mt19937_64 rng(20261017);
  for (int instance = 0; instance < 1000; ++instance) {
    std::string where = "instance " + std::to_string(instance);
    auto r = testing::random_relcat(rng);
    const auto& c = r->cat();
    try {
      FinCat::validate(c.to_raw());
      RelCat::validate(r->cat_ptr(), std::vector<MorphismId>(r->weqs().begin(), r->weqs().end()));
      out.expect(true, where);
    } catch (const std::exception& e) {
      out.expect(false, where + ": validate: " + e.what());
      continue;
    }
    const auto& objs = c.objects();
    auto x = testing::choose(rng, objs);
    auto y = testing::choose(rng, objs);
    auto s = make_stage(r, x, y, 3);
    for (const auto& z : s->objects()) {
      for (const auto& l : s->morphisms_from(z)) {
        auto bad = check_ladder(*r, l);
        out.expect(!bad, where + ": ladder " + to_string(c, l));
      }
    }
    auto functor = [&](const StageFunctor& f) {
      auto bad = check_functor(f);
      out.expect(!bad, where + ": " + f.name + (bad ? ": " + bad->law : ""));
    };
    for (auto f : c.morphisms()) {
      if (c.target(f) == x) functor(induced_precompose(s, f));
      if (c.source(f) == y) functor(induced_postcompose(s, f));
      if (c.source(f) == x && r->is_weq(f)) functor(weq_reverse(s, f));
    }
    auto z = testing::choose(rng, objs);
    auto w = testing::choose(rng, objs);
    auto p = enumerate_zigzags(*r, x, y, 3);
    auto q = enumerate_zigzags(*r, y, z, 1);
    auto t = enumerate_zigzags(*r, z, w, 3);
    for (std::size_t k = 0; k < 4 && !p.empty() && !q.empty() && !t.empty(); ++k) {
      const auto& a = testing::choose(rng, p);
      const auto& b = testing::choose(rng, q);
      const auto& e = testing::choose(rng, t);
      out.expect(concatenate(c, concatenate(c, a, b), e) == concatenate(c, a, concatenate(c, b, e)),
                 where + ": concatenate not associative");
      out.expect(!check_zigzag(*r, concatenate(c, a, b)), where + ": concatenate left the zig-zags");
    }
    for (const auto& a : p) {
      out.expect(concatenate(c, unit_zigzag(c, x), a) == a, where + ": left unit");
      out.expect(concatenate(c, a, unit_zigzag(c, y)) == a, where + ": right unit");
    }
  }
  return out;
}

Outcome cli_contract() {
  Outcome out;
  for (const auto& c : testing::golden_cases()) {
    auto where = c.name.empty() ? c.args.front() + " (input error)" : c.name;
    auto outcome = testing::run_golden(c);
    out.expect(outcome.exit_code == c.exit_code, where + ": exit " + std::to_string(outcome.exit_code));
    if (c.name.empty()) continue;
    out.expect(outcome.out == testing::slurp(testing::golden_path(c)), where + ": report differs");
    if (!c.side_file.empty()) {
      out.expect(outcome.side == testing::slurp(testing::side_golden_path(c)), where + ": side file differs");
    }
  }
  return out;
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace hammock

int main() {
  using namespace hammock;
  const std::vector<Criterion> criteria = {
      {1, "tower equals saturated oracle count on PT, ARR, WEQ, ISO", 10, oracle_agreement},
      {2, "PARA(B,A) and PARA(A,A) stay inconclusive / unknown", 10, non_stabilization},
      {3, "homotopic maps on CYLFIX, n <= 7, with serialized replay", 30, homotopic_maps},
      {4, "transformation certificates for PT->ARR and IDEMFIX, n <= 7", 30, transformations},
      {5, "position certificates on every fixture, n <= 5", 30, positions},
      {6, "idempotent localization on IDEMFIX, n <= 5, pi0 1 <-> 1", 30, idempotent},
      {7, "homotopy algebra retract on IDEMFIX with f = w", 30, algebra_retract},
      {8, "law suites on 1000 random instances", 120, law_suites},
      {9, "CLI golden reports and exit codes", 10, cli_contract},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    std::string error;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds < c.budget_seconds;
    bool ok = error.empty() && outcome.failures.empty() && in_time;
    if (!ok) ++failed;
    std::printf("[%s] %d %s: %zu checks, %zu failed, %.2fs (budget %.0fs)\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), outcome.checked, outcome.failures.size(), seconds, c.budget_seconds);
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    if (!in_time) std::printf("    over budget\n");
    for (std::size_t i = 0; i < outcome.failures.size() && i < 10; ++i) {
      std::printf("    %s\n", outcome.failures[i].c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
