#include "hammock/theorems.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hammock {

void TheoremReport::add(CheckResult c) {
  verdict = combine(verdict, c.verdict);
  checks.push_back(std::move(c));
}

const CheckResult* TheoremReport::first_failure() const {
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail) return &c;
  }
  for (const auto& c : checks) {
    if (c.verdict == Verdict::unknown) return &c;
  }
  return nullptr;
}

namespace {

std::string stage_label(std::size_t n) { return "stage " + std::to_string(n); }

CheckResult passed(std::string label, std::string detail = "ok") {
  return {std::move(label), Verdict::pass, std::move(detail)};
}
CheckResult failed(std::string label, std::string detail) {
  return {std::move(label), Verdict::fail, std::move(detail)};
}
CheckResult from_check(std::string label, const Check& c, std::string ok = "ok") {
  if (c) return failed(std::move(label), to_string(*c));
  return passed(std::move(label), std::move(ok));
}

// Column map builders.
void add_identities(ColumnMap& m, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) m.push_back({ColumnSource::Kind::identity, 0, nullptr});
}
void add_copies(ColumnMap& m, std::size_t first, std::size_t last) {
  for (std::size_t k = first; k < last; ++k) m.push_back({ColumnSource::Kind::copy, k, nullptr});
}
void add_mapped(ColumnMap& m, const FunctorData& f, std::size_t first, std::size_t last) {
  auto data = std::make_shared<const FunctorData>(f);
  for (std::size_t k = first; k < last; ++k) m.push_back({ColumnSource::Kind::mapped, k, data});
}

/// Objectwise equality of two functors with the same source stage.
Check agree_on_objects(const StageFunctor& a, const StageFunctor& b) {
  for (const auto& z : a.source->objects()) {
    if (a(z) != b(z)) {
      return fail("objectwise-equality", a.name + " and " + b.name + " differ",
                  {a.source->describe(z), a.target->describe(a(z)), b.target->describe(b(z))});
    }
  }
  return pass();
}

LeftHomotopyData require_homotopy(const RelCat& r, const LeftHomotopyData& h) {
  if (auto v = validate_left_homotopy(r, h)) throw ValidationError(*v);
  return h;
}

Check check_data(const RelCat& source, const RelCat& target, const FunctorData& f) {
  if (f.source.get() != &source.cat() || f.target.get() != &target.cat()) {
    return fail("functor", f.name + " does not map between the given categories", {f.name});
  }
  if (auto v = check_functor(f)) return v;
  for (auto w : source.weqs()) {
    if (!target.is_weq(f(w))) {
      return fail("weq-preservation", f.name + " does not preserve weak equivalences",
                  {source.cat().morphism_name(w)});
    }
  }
  return pass();
}

}  // namespace

CheckResult verify_stage_certificate(const HomotopyCertificate& cert, const std::string& label) {
  const auto& src = *cert.start().source;
  const auto& tgt = *cert.start().target;
  std::string steps = std::to_string(cert.length()) + (cert.length() == 1 ? " step" : " steps");
  // Components are re-verified square by square first so a failure names its
  // column.
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& eta = cert.steps[i].transformation;
    for (const auto& z : src.objects()) {
      try {
        auto ladder = eta(z);
        if (auto v = check_ladder(tgt.relcat(), ladder)) {
          return failed(label, "step " + std::to_string(i) + " (" + eta.name + "), zig-zag [" + src.describe(z) +
                                   "]: " + to_string(*v));
        }
      } catch (const std::exception& e) {
        return failed(label, "step " + std::to_string(i) + ", zig-zag [" + src.describe(z) + "]: " + e.what());
      }
    }
  }
  if (auto failure = verify_certificate(cert)) {
    std::ostringstream os;
    os << *failure;
    return failed(label, os.str());
  }
  return passed(label, "certificate verified (" + steps + ")");
}

std::vector<CheckResult> verify_family(const StageWitnessFamily& family) {
  std::vector<CheckResult> out;
  const auto& certs = family.certificates;
  for (const auto& cert : certs) {
    out.push_back(verify_stage_certificate(cert, family.name + ", " + stage_label(cert.start().source->stage())));
  }
  for (std::size_t k = 0; k + 1 < certs.size(); ++k) {
    const auto& small = certs[k];
    const auto& large = certs[k + 1];
    auto n = small.start().source->stage();
    std::string label = family.name + ", stages " + std::to_string(n) + "->" + std::to_string(n + 2) +
                        ": inclusion compatibility";
    const FinCat& sc = small.start().source->base();
    const FinCat& tc = small.start().target->base();
    std::optional<std::string> problem;
    if (small.functors.size() != large.functors.size()) problem = "certificates have different lengths";
    for (const auto& z : small.start().source->objects()) {
      if (problem) break;
      auto iz = stage_inclusion(sc, z, family.source_position);
      try {
        for (std::size_t i = 0; i < small.functors.size() && !problem; ++i) {
          if (large.functors[i](iz) != stage_inclusion(tc, small.functors[i](z), family.target_position)) {
            problem = "functor " + std::to_string(i) + " (" + small.functors[i].name +
                      ") does not commute with the inclusions at [" + small.start().source->describe(z) + "]";
          }
        }
        for (std::size_t i = 0; i < small.steps.size() && !problem; ++i) {
          if (large.steps[i].transformation(iz) !=
              stage_inclusion(tc, small.steps[i].transformation(z), family.target_position)) {
            problem = "transformation " + std::to_string(i) + " (" + small.steps[i].transformation.name +
                      ") does not commute with the inclusions at [" + small.start().source->describe(z) + "]";
          }
        }
      } catch (const std::exception& e) {
        problem = e.what();
      }
    }
    out.push_back(problem ? failed(label, *problem) : passed(label, "all squares commute"));
  }
  return out;
}

Word zigzag_word(const FinCat& c, const ZigZag& z) {
  Word w{z.from, z.to, {}};
  for (std::size_t k = 0; k < z.arrows.size(); ++k) {
    if (!c.is_identity(z.arrows[k])) w.letters.push_back({z.arrows[k], is_backward(k)});
  }
  return w;
}

// ---------------------------------------------------------------------------
// Homotopic morphisms induce homotopic maps.

HomotopyCertificate thm31_certificate(const StagePtr& s, const LeftHomotopyData& h) {
  const FinCat& c = s->base();
  const auto& cyl = h.cylinder;
  if (s->to() != cyl.base) throw std::invalid_argument("stage must end at the homotopy's source");
  auto b = c.target(h.f);
  auto id_b = c.identity(b);
  auto f_star = induced_postcompose(s, h.f);
  auto g_star = induced_postcompose(s, h.g);
  auto target = f_star.target;
  const FinCat* cp = &c;
  auto h_tilde_obj = [cp, h, target, id_b](const ZigZag& z) {
    ZigZag out{z.from, target->to(), {z.arrows.begin(), z.arrows.end() - 1}};
    out.arrows.push_back(cp->comp(z.arrows.back(), h.cylinder.p));
    out.arrows.push_back(h.homotopy);
    out.arrows.push_back(id_b);
    return out;
  };
  // Columns v_0 ... v_{n-1}, then identities on Cyl(A), B, B.
  ColumnMap columns;
  add_copies(columns, 0, s->stage());
  add_identities(columns, 3);
  auto h_tilde = column_functor("H~", s, target, h_tilde_obj, std::move(columns));
  auto leg = [cp, f_star, h_tilde, id_b](MorphismId i) {
    return [cp, f_star, h_tilde, id_b, i](const ZigZag& z) {
      Ladder l{f_star(z), h_tilde(z), {}};
      auto ns = nodes(*cp, z);
      for (std::size_t k = 0; k + 1 < ns.size(); ++k) l.columns.push_back(cp->identity(ns[k]));
      l.columns.push_back(i);
      l.columns.push_back(id_b);
      l.columns.push_back(id_b);
      return l;
    };
  };
  auto psi_leg = [cp, g_star, h_tilde, id_b](MorphismId i) {
    return [cp, g_star, h_tilde, id_b, i](const ZigZag& z) {
      Ladder l{g_star(z), h_tilde(z), {}};
      auto ns = nodes(*cp, z);
      for (std::size_t k = 0; k + 1 < ns.size(); ++k) l.columns.push_back(cp->identity(ns[k]));
      l.columns.push_back(i);
      l.columns.push_back(id_b);
      l.columns.push_back(id_b);
      return l;
    };
  };
  auto cert = empty_certificate(f_star);
  push_step(cert, Direction::forward, stage_transformation("phi", f_star, h_tilde, leg(cyl.i0)));
  push_step(cert, Direction::backward, stage_transformation("psi", g_star, h_tilde, psi_leg(cyl.i1)));
  return cert;
}

HomotopyCertificate thm31_pre_certificate(const StagePtr& s, const LeftHomotopyData& h) {
  const FinCat& c = s->base();
  const auto& cyl = h.cylinder;
  auto b = c.target(h.f);
  if (s->from() != b) throw std::invalid_argument("stage must start at the homotopy's target");
  auto a = cyl.base;
  auto f_star = induced_precompose(s, h.f);
  auto g_star = induced_precompose(s, h.g);
  auto target = f_star.target;
  const FinCat* cp = &c;
  auto h_tilde_obj = [h, target](const ZigZag& z) {
    ZigZag out{target->from(), z.to, {h.cylinder.p, h.homotopy}};
    out.arrows.insert(out.arrows.end(), z.arrows.begin(), z.arrows.end());
    return out;
  };
  ColumnMap columns;
  add_identities(columns, 2);
  add_copies(columns, 0, s->stage() + 1);
  auto h_tilde = column_functor("H~", s, target, h_tilde_obj, std::move(columns));
  auto leg = [cp, h_tilde, a](const StageFunctor& from, MorphismId i) {
    return [cp, from, h_tilde, a, i](const ZigZag& z) {
      Ladder l{from(z), h_tilde(z), {cp->identity(a), i}};
      for (auto o : nodes(*cp, z)) l.columns.push_back(cp->identity(o));
      return l;
    };
  };
  auto cert = empty_certificate(f_star);
  push_step(cert, Direction::forward, stage_transformation("phi", f_star, h_tilde, leg(f_star, cyl.i0)));
  push_step(cert, Direction::backward, stage_transformation("psi", g_star, h_tilde, leg(g_star, cyl.i1)));
  return cert;
}

StageWitnessFamily build_thm31(std::shared_ptr<const RelCat> r, const LeftHomotopyData& h, ObjectId x,
                               std::size_t n_max) {
  require_homotopy(*r, h);
  StageWitnessFamily family{"f_* ~ g_*", 0, 0, {}};
  for (std::size_t n = 1; n <= n_max; n += 2) {
    family.certificates.push_back(thm31_certificate(make_stage(r, x, h.cylinder.base, n), h));
  }
  return family;
}

StageWitnessFamily build_thm31_pre(std::shared_ptr<const RelCat> r, const LeftHomotopyData& h, ObjectId y,
                                   std::size_t n_max) {
  require_homotopy(*r, h);
  StageWitnessFamily family{"f^* ~ g^*", 0, 2, {}};
  for (std::size_t n = 1; n <= n_max; n += 2) {
    family.certificates.push_back(thm31_pre_certificate(make_stage(r, r->cat().target(h.f), y, n), h));
  }
  return family;
}

TheoremReport verify_thm31(std::shared_ptr<const RelCat> r, const LeftHomotopyData& h, ObjectId x,
                           std::size_t n_max) {
  TheoremReport report{"thm31", Verdict::pass, {}, {}};
  auto valid = validate_left_homotopy(*r, h);
  report.add(from_check("left homotopy data", valid, "H∘i0 = f, H∘i1 = g"));
  if (valid) return report;
  for (auto& c : verify_family(build_thm31(r, h, x, n_max))) report.add(std::move(c));
  return report;
}

// ---------------------------------------------------------------------------
// A natural transformation induces a homotopy.

StageFunctor thm32_source_functor(const StagePtr& s, const TransformationInput& in) {
  const FinCat& d = in.target->cat();
  auto fx = in.f(s->from());
  auto gy = in.g(s->to());
  auto target = make_stage(in.target, fx, gy, s->stage() + 4);
  auto eta_y = in.eta(s->to());
  const FinCat* dp = &d;
  auto f = in.f;
  auto obj = [dp, f, fx, gy, eta_y](const ZigZag& z) {
    ZigZag out{fx, gy, {dp->identity(fx), dp->identity(fx)}};
    for (auto a : z.arrows) out.arrows.push_back(f(a));
    out.arrows.push_back(eta_y);
    out.arrows.push_back(dp->identity(gy));
    return out;
  };
  ColumnMap columns;
  add_identities(columns, 2);
  add_mapped(columns, f, 0, s->stage() + 1);
  add_identities(columns, 2);
  return column_functor("P", s, target, obj, std::move(columns));
}

StageFunctor thm32_target_functor(const StagePtr& s, const TransformationInput& in) {
  const FinCat& d = in.target->cat();
  auto fx = in.f(s->from());
  auto gy = in.g(s->to());
  auto target = make_stage(in.target, fx, gy, s->stage() + 4);
  auto eta_x = in.eta(s->from());
  const FinCat* dp = &d;
  auto g = in.g;
  auto obj = [dp, g, fx, gy, eta_x](const ZigZag& z) {
    ZigZag out{fx, gy, {dp->identity(fx), eta_x}};
    for (auto a : z.arrows) out.arrows.push_back(g(a));
    out.arrows.push_back(dp->identity(gy));
    out.arrows.push_back(dp->identity(gy));
    return out;
  };
  ColumnMap columns;
  add_identities(columns, 2);
  add_mapped(columns, g, 0, s->stage() + 1);
  add_identities(columns, 2);
  return column_functor("Q", s, target, obj, std::move(columns));
}

StageFunctor thm32_source_composite(const StagePtr& s, const TransformationInput& in) {
  auto lf = levelwise(s, in.f, in.target);
  auto post = induced_postcompose(lf.target, in.eta(s->to()));
  auto incl = inclusion_functor(post.target, 0);
  return compose(incl, compose(post, lf));
}

StageFunctor thm32_target_composite(const StagePtr& s, const TransformationInput& in) {
  auto lg = levelwise(s, in.g, in.target);
  auto pre = induced_precompose(lg.target, in.eta(s->from()));
  auto incl = inclusion_functor(pre.target, pre.target->stage());
  return compose(incl, compose(pre, lg));
}

HomotopyCertificate thm32_certificate(const StagePtr& s, const TransformationInput& in) {
  auto p = thm32_source_functor(s, in);
  auto q = thm32_target_functor(s, in);
  const FinCat* cp = &s->base();
  const FinCat* dp = &in.target->cat();
  auto eta = in.eta;
  auto fx = in.f(s->from());
  auto gy = in.g(s->to());
  auto component = [cp, dp, eta, p, q, fx, gy](const ZigZag& z) {
    Ladder l{p(z), q(z), {dp->identity(fx), dp->identity(fx)}};
    for (auto o : nodes(*cp, z)) l.columns.push_back(eta(o));
    l.columns.push_back(dp->identity(gy));
    l.columns.push_back(dp->identity(gy));
    return l;
  };
  auto cert = empty_certificate(p);
  push_step(cert, Direction::forward, stage_transformation("L" + in.eta.name, p, q, component));
  return cert;
}

StageWitnessFamily build_thm32(const TransformationInput& in, ObjectId x, ObjectId y, std::size_t n_max) {
  if (auto v = check_data(*in.source, *in.target, in.f)) throw ValidationError(*v);
  if (auto v = check_data(*in.source, *in.target, in.g)) throw ValidationError(*v);
  if (auto v = check_nat_trans(in.eta)) throw ValidationError(*v);
  if (in.eta.from.object_map != in.f.object_map || in.eta.from.morphism_map != in.f.morphism_map ||
      in.eta.to.object_map != in.g.object_map || in.eta.to.morphism_map != in.g.morphism_map) {
    throw ValidationError({"transformation", "η must be a transformation F => G", {in.eta.name}});
  }
  StageWitnessFamily family{"L" + in.eta.name, 0, 2, {}};
  for (std::size_t n = 1; n <= n_max; n += 2) {
    family.certificates.push_back(thm32_certificate(make_stage(in.source, x, y, n), in));
  }
  return family;
}

TheoremReport verify_thm32(const TransformationInput& in, ObjectId x, ObjectId y, std::size_t n_max) {
  TheoremReport report{"thm32", Verdict::pass, {}, {}};
  StageWitnessFamily family;
  try {
    family = build_thm32(in, x, y, n_max);
  } catch (const ValidationError& e) {
    report.add(failed("input data", e.what()));
    return report;
  }
  report.add(passed("input data", "F, G preserve weak equivalences; η natural"));
  for (auto& c : verify_family(family)) report.add(std::move(c));
  for (const auto& cert : family.certificates) {
    auto n = cert.start().source->stage();
    const auto& s = cert.start().source;
    report.add(from_check(stage_label(n) + ": source functor equals inclusion∘(η_Y)_*∘L F",
                          agree_on_objects(cert.start(), thm32_source_composite(s, in))));
    report.add(from_check(stage_label(n) + ": target functor equals inclusion∘η_X^*∘L G",
                          agree_on_objects(cert.finish(), thm32_target_composite(s, in))));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Inclusions at different positions.

namespace {

// Transformation between the inclusions at m and m + 1: columns d_m at the
// two inserted positions, identities elsewhere. Points from m to m + 1 when
// d_m is a forward arrow.
StageNatTrans adjacent_inclusions(const StagePtr& s, std::size_t m, const StageFunctor& im,
                                  const StageFunctor& im1) {
  const FinCat* cp = &s->base();
  bool forward = !is_backward(m);
  auto from = forward ? im : im1;
  auto to = forward ? im1 : im;
  return stage_transformation(
      "incl" + std::to_string(m) + (forward ? "=>" : "<=") + "incl" + std::to_string(m + 1), from, to,
      [cp, m, from, to](const ZigZag& z) {
        auto ns = nodes(*cp, z);
        Ladder l{from(z), to(z), {}};
        for (std::size_t j = 0; j < ns.size() + 2; ++j) {
          if (j <= m) {
            l.columns.push_back(cp->identity(ns[j]));
          } else if (j <= m + 2) {
            l.columns.push_back(z.arrows[m]);
          } else {
            l.columns.push_back(cp->identity(ns[j - 2]));
          }
        }
        return l;
      });
}

}  // namespace

HomotopyCertificate build_rmk33(const StagePtr& s, std::size_t i, std::size_t j) {
  if (i > s->stage() || j > s->stage()) throw std::out_of_range("inclusion position out of range");
  std::vector<StageFunctor> incl;
  for (std::size_t k = 0; k <= s->stage(); ++k) incl.push_back(inclusion_functor(s, k));
  auto cert = empty_certificate(incl[i]);
  auto at = i;
  while (at != j) {
    auto next = at < j ? at + 1 : at - 1;
    auto m = std::min(at, next);
    auto eta = adjacent_inclusions(s, m, incl[m], incl[m + 1]);
    bool eta_forward = !is_backward(m);  // eta : incl_m => incl_{m+1}
    bool ascending = next > at;
    push_step(cert, eta_forward == ascending ? Direction::forward : Direction::backward, std::move(eta));
    at = next;
  }
  return cert;
}

TheoremReport verify_rmk33(std::shared_ptr<const RelCat> r, ObjectId x, ObjectId y, std::size_t n_max,
                           std::optional<std::size_t> i, std::optional<std::size_t> j) {
  TheoremReport report{"rmk33", Verdict::pass, {}, {}};
  for (std::size_t n = 1; n <= n_max; n += 2) {
    auto s = make_stage(r, x, y, n);
    for (std::size_t a = 0; a <= n; ++a) {
      if (i && *i != a) continue;
      for (std::size_t b = 0; b <= n; ++b) {
        if (j && *j != b) continue;
        auto label = stage_label(n) + ", positions " + std::to_string(a) + "," + std::to_string(b);
        auto cert = build_rmk33(s, a, b);
        auto expected = a > b ? a - b : b - a;
        if (cert.length() != expected) {
          report.add(failed(label, "certificate length " + std::to_string(cert.length()) + " != " +
                                       std::to_string(expected)));
          continue;
        }
        report.add(verify_stage_certificate(cert, label));
      }
    }
  }
  if (i && j && report.checks.empty()) {
    report.add(failed("positions", "positions exceed every stage up to " + std::to_string(n_max)));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Homotopy idempotent functors.

namespace {

void require_idempotent_shape(const RelCat& r, const IdempotentData& d) {
  if (d.functor.source.get() != &r.cat() || d.functor.target.get() != &r.cat()) {
    throw ValidationError({"idempotent", "L must be an endofunctor", {d.functor.name}});
  }
  if (auto v = check_functor(d.functor)) throw ValidationError(*v);
  if (auto v = check_nat_trans(d.coaugmentation)) throw ValidationError(*v);
  for (auto w : r.weqs()) {
    if (!r.is_weq(d.functor(w))) {
      throw ValidationError({"weq-preservation", "L does not preserve weak equivalences",
                             {r.cat().morphism_name(w)}});
    }
  }
}

// Homotopy data for Lℓ_Z ≃ ℓ_{LZ}; only the shape is checked here so that
// wrong equations surface as failing squares during verification.
LeftHomotopyData idempotent_homotopy(const RelCat& r, const IdempotentData& d, ObjectId z) {
  const FinCat& c = r.cat();
  auto lhs = d.functor(d.coaugmentation(z));
  auto w = idempotent_witness(d, z);
  auto h = realize(c, w, lhs);
  if (auto v = validate_cylinder(r, h.cylinder)) throw ValidationError(*v);
  auto lz = d.functor(z);
  if (h.cylinder.base != lz || c.source(h.homotopy) != h.cylinder.cylinder ||
      c.target(h.homotopy) != d.functor(lz)) {
    throw ValidationError({"idempotent-witness", "homotopy must be a map Cyl(LZ) -> LLZ", {c.object_name(z)}});
  }
  return h;
}

}  // namespace

Lemma53Part1 build_lemma53_part1(std::shared_ptr<const RelCat> r, const IdempotentData& d, ObjectId x,
                                 ObjectId y, std::size_t n_max) {
  require_idempotent_shape(*r, d);
  const FinCat& c = r->cat();
  const FinCat* cp = &c;
  const auto& l = d.functor;
  const auto& ell = d.coaugmentation;
  auto lx = l(x);
  auto ly = l(y);
  auto lly = l(ly);
  auto hx = idempotent_homotopy(*r, d, x);   // on Cyl(LX)
  auto hly = idempotent_homotopy(*r, d, ly);  // on Cyl(LLY)

  Lemma53Part1 out;
  out.unit_family = {"id ~ h∘L", 0, 2, {}};
  out.counit_family = {"id ~ L∘h", 0, 2, {}};
  for (std::size_t n = 1; n <= n_max; n += 2) {
    auto src = make_stage(r, lx, lly, n);
    auto tgt = make_stage(r, x, ly, n + 2);
    auto ell_x = ell(x);
    auto ell_ly = ell(ly);
    auto h_obj = [cp, x, ly, ell_x, ell_ly](const ZigZag& z) {
      ZigZag out{x, ly, {cp->identity(x), ell_x}};
      out.arrows.insert(out.arrows.end(), z.arrows.begin(), z.arrows.end() - 1);
      out.arrows.push_back(cp->comp(z.arrows.back(), ell_ly));
      return out;
    };
    ColumnMap h_columns;
    add_identities(h_columns, 2);
    add_copies(h_columns, 0, n);
    add_identities(h_columns, 1);
    auto h = column_functor("h", src, tgt, h_obj, std::move(h_columns));
    out.h.push_back(h);

    // inclusion_0 => h ∘ L on L_n(X, LY)
    auto base = make_stage(r, x, ly, n);
    auto incl = inclusion_functor(base, 0);
    auto hl = compose(h, levelwise(base, l, r));
    auto unit = empty_certificate(incl);
    push_step(unit, Direction::forward,
              stage_transformation("ell", incl, hl, [cp, ell, incl, hl, x, ly](const ZigZag& z) {
                Ladder lad{incl(z), hl(z), {cp->identity(x), cp->identity(x)}};
                auto ns = nodes(*cp, z);
                for (std::size_t k = 0; k + 1 < ns.size(); ++k) lad.columns.push_back(ell(ns[k]));
                lad.columns.push_back(cp->identity(ly));
                return lad;
              }));
    out.unit_family.certificates.push_back(std::move(unit));

    // top => middle <= bottom on L_n(LX, LLY)
    auto i0 = inclusion_functor(src, 0);
    auto top = compose(inclusion_functor(i0.target, n + 2), i0);
    auto lh = levelwise(tgt, l, r);
    auto bottom = compose(inclusion_functor(lh.target, n + 2), compose(lh, h));
    auto mid_target = top.target;
    auto mid_obj = [cp, l, hx, hly, lx, lly](const ZigZag& z) {
      ZigZag out{lx, lly, {hx.cylinder.p, hx.homotopy}};
      for (std::size_t k = 0; k + 1 < z.arrows.size(); ++k) out.arrows.push_back(l(z.arrows[k]));
      out.arrows.push_back(cp->comp(l(z.arrows.back()), hly.homotopy));
      out.arrows.push_back(hly.cylinder.p);
      out.arrows.push_back(cp->identity(lly));
      return out;
    };
    ColumnMap mid_columns;
    add_identities(mid_columns, 2);
    add_mapped(mid_columns, l, 0, n);
    add_identities(mid_columns, 3);
    auto middle = column_functor("H~", src, mid_target, mid_obj, std::move(mid_columns));
    auto counit = empty_certificate(top);
    push_step(counit, Direction::forward,
              stage_transformation("top=>H~", top, middle, [cp, ell, top, middle, hx, hly, lx, lly](const ZigZag& z) {
                Ladder lad{top(z), middle(z), {cp->identity(lx), hx.cylinder.i1}};
                auto ns = nodes(*cp, z);
                for (std::size_t k = 0; k + 1 < ns.size(); ++k) lad.columns.push_back(ell(ns[k]));
                lad.columns.push_back(hly.cylinder.i1);
                lad.columns.push_back(cp->identity(lly));
                lad.columns.push_back(cp->identity(lly));
                return lad;
              }));
    push_step(counit, Direction::backward,
              stage_transformation("bottom=>H~", bottom, middle,
                                   [cp, l, bottom, middle, hx, hly, lx, lly](const ZigZag& z) {
                                     Ladder lad{bottom(z), middle(z), {cp->identity(lx), hx.cylinder.i0}};
                                     auto ns = nodes(*cp, z);
                                     for (std::size_t k = 0; k + 1 < ns.size(); ++k) {
                                       lad.columns.push_back(cp->identity(l(ns[k])));
                                     }
                                     lad.columns.push_back(hly.cylinder.i0);
                                     lad.columns.push_back(cp->identity(lly));
                                     lad.columns.push_back(cp->identity(lly));
                                     return lad;
                                   }));
    out.counit_family.certificates.push_back(std::move(counit));
  }
  return out;
}

std::string_view to_string(Pi0Basis b) {
  switch (b) {
    case Pi0Basis::oracle:
      return "oracle";
    case Pi0Basis::tower:
      return "tower";
    case Pi0Basis::none:
      return "none";
  }
  return "none";
}

namespace {

bool is_bijection(const std::vector<std::size_t>& map, std::size_t target_size) {
  std::vector<std::size_t> image = map;
  std::sort(image.begin(), image.end());
  return std::adjacent_find(image.begin(), image.end()) == image.end() && image.size() == target_size;
}

}  // namespace

Pi0MapReport pi0_precompose_map(std::shared_ptr<const RelCat> r, MorphismId g, ObjectId y, std::size_t n_max,
                                std::size_t bound) {
  const FinCat& c = r->cat();
  auto a = c.source(g);
  auto b = c.target(g);
  Pi0MapReport report;
  std::string name = c.morphism_name(g) + "^*";

  std::optional<bool> tower_bijective;
  std::optional<std::size_t> tower_src, tower_tgt;
  if (n_max >= 5) {
    auto tb = pi0_tower(r, b, y, n_max);
    auto ta = pi0_tower(r, a, y, n_max);
    if (tb.verdict == TowerVerdict::stable && ta.verdict == TowerVerdict::stable) {
      auto m = n_max - 2;
      auto sb = make_stage(r, b, y, m);
      auto sa = make_stage(r, a, y, n_max);
      auto cb = pi0_stage(*sb);
      auto ca = pi0_stage(*sa);
      auto pre = induced_precompose(sb, g);
      std::vector<std::size_t> map;
      for (const auto& cls : cb.classes) map.push_back(ca.class_of[sa->index_of(pre(sb->objects()[cls.front()]))]);
      tower_bijective = is_bijection(map, ca.size());
      tower_src = cb.size();
      tower_tgt = ca.size();
      report.notes.push_back("towers stable: " + name + " on π₀ at stage " + std::to_string(m) + " -> " +
                             std::to_string(n_max) + " is " + (*tower_bijective ? "bijective" : "not bijective") +
                             " (" + std::to_string(*tower_src) + " -> " + std::to_string(*tower_tgt) + ")");
    } else {
      report.notes.push_back("towers inconclusive up to stage " + std::to_string(n_max));
    }
  }

  Localization loc(*r, bound);
  if (loc.saturation() == Saturation::saturated) {
    auto from = loc.classes(b, y);
    auto to = loc.classes(a, y);
    std::vector<std::size_t> target_ids;
    for (const auto& w : to) target_ids.push_back(*loc.class_of(w));
    std::vector<std::size_t> map;
    for (const auto& u : from) {
      auto cls = *loc.class_of(then(word_of(c, g), u));
      map.push_back(static_cast<std::size_t>(std::find(target_ids.begin(), target_ids.end(), cls) - target_ids.begin()));
    }
    report.basis = Pi0Basis::oracle;
    report.source_classes = from.size();
    report.target_classes = to.size();
    report.bijective = is_bijection(map, to.size());
    report.notes.push_back("oracle SATURATED at bound " + std::to_string(bound) + ": " + std::to_string(from.size()) +
                           " -> " + std::to_string(to.size()) + " classes");
    if (tower_bijective && *tower_bijective != *report.bijective) {
      report.notes.push_back("warning: tower and oracle disagree");
    }
  } else if (tower_bijective) {
    report.basis = Pi0Basis::tower;
    report.source_classes = tower_src;
    report.target_classes = tower_tgt;
    report.bijective = tower_bijective;
    report.notes.push_back("oracle UNKNOWN at bound " + std::to_string(bound) + " (" + loc.reason() +
                           "); verdict read off the stabilized towers");
  } else {
    report.notes.push_back("oracle UNKNOWN at bound " + std::to_string(bound) + " (" + loc.reason() + ")");
  }
  if (report.bijective) report.verdict = *report.bijective ? Verdict::pass : Verdict::fail;
  return report;
}

Lemma53Part2 build_lemma53_part2(std::shared_ptr<const RelCat> r, const IdempotentData& d, ObjectId x,
                                 ObjectId y, std::size_t n_max, std::size_t bound) {
  require_idempotent_shape(*r, d);
  TransformationInput in{r, r, identity_functor_data(r->cat_ptr()), d.functor, d.coaugmentation};
  auto ly = d.functor(y);
  Lemma53Part2 out;
  out.thm32 = build_thm32(in, x, ly, n_max);
  out.pi0 = pi0_precompose_map(r, d.coaugmentation(x), ly, n_max, bound);
  return out;
}

TheoremReport verify_lemma53(std::shared_ptr<const RelCat> r, const IdempotentData& d, ObjectId x, ObjectId y,
                             std::size_t n_max, std::size_t bound) {
  TheoremReport report{"lemma53", Verdict::pass, {}, {}};
  auto idem = validate_idempotent(*r, d, bound);
  if (idem.verdict == Verdict::fail) {
    report.add(failed("homotopy idempotent data", to_string(*idem.failure)));
    return report;
  }
  report.add({"homotopy idempotent data", idem.verdict,
              idem.verdict == Verdict::pass ? "ℓ_L, Lℓ weak equivalences agreeing in the localization"
                                            : "agreement in the localization UNKNOWN"});
  for (auto& note : idem.notes) report.notes.push_back(note);
  try {
    auto part1 = build_lemma53_part1(r, d, x, y, n_max);
    report.add(passed("part 1: h built", std::to_string(part1.h.size()) + " stages"));
    for (auto& c : verify_family(part1.unit_family)) report.add(std::move(c));
    for (auto& c : verify_family(part1.counit_family)) report.add(std::move(c));
    auto part2 = build_lemma53_part2(r, d, x, y, n_max, bound);
    for (auto& c : verify_family(part2.thm32)) report.add(std::move(c));
    std::string detail = "basis " + std::string(to_string(part2.pi0.basis));
    if (part2.pi0.source_classes && part2.pi0.target_classes) {
      detail += ", " + std::to_string(*part2.pi0.source_classes) + " -> " + std::to_string(*part2.pi0.target_classes);
    }
    if (part2.pi0.bijective) detail += *part2.pi0.bijective ? ", bijective" : ", not bijective";
    report.add({"part 2: π₀ of ℓ_X^*", part2.pi0.verdict, detail});
    for (auto& note : part2.pi0.notes) report.notes.push_back(note);
  } catch (const ValidationError& e) {
    report.add(failed("idempotent witnesses", e.what()));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Homotopy algebras.

TheoremReport verify_hoalg_retract(std::shared_ptr<const RelCat> r, const HoAlgebraData& alg, MorphismId f,
                                   std::size_t n_max) {
  TheoremReport report{"hoalg", Verdict::pass, {}, {}};
  auto valid = validate_hoalgebra(*r, alg);
  report.add(from_check("homotopy algebra data", valid, "monad laws and algebra witnesses hold"));
  if (valid) return report;
  const FinCat& c = r->cat();
  const auto& t = alg.monad.endofunctor;
  const auto& eta = alg.monad.unit;
  auto x = alg.carrier;
  auto tx = t(x);
  auto a = alg.action;
  auto a_eta = c.comp(a, eta(x));
  auto unit_h = realize(c, alg.unit, a_eta);
  TransformationInput in{r, r, identity_functor_data(r->cat_ptr()), t, eta};

  std::vector<ObjectId> components{c.source(f)};
  if (c.target(f) != c.source(f)) components.push_back(c.target(f));
  for (auto z : components) {
    std::string comp = "component " + c.object_name(z);
    for (std::size_t n = 1; n <= n_max; n += 2) {
      std::string label = comp + ", " + stage_label(n);
      auto s = make_stage(r, z, x, n);
      try {
        // Left square: the transformation certificate for η at (Z, X), followed by a_*.
        auto left = thm32_certificate(s, in);
        auto a_star = induced_postcompose(left.start().target, a);
        auto left_a = whisker_post(left, a_star);
        report.add(verify_stage_certificate(left_a, label + ": a_*∘(ι∘(η_X)_* ≃ ι∘η_Z^*∘L T)"));

        // a_*∘(η_X)_* => incl_{n+1}∘(a∘η_X)_* ≃ incl_{n+1}∘(id_X)_*
        auto eta_star = induced_postcompose(s, eta(x));
        auto a_after = induced_postcompose(eta_star.target, a);
        auto composite = compose(a_after, eta_star);
        auto aeta_star = induced_postcompose(s, a_eta);
        auto incl = inclusion_functor(aeta_star.target, n + 1);
        auto lifted = compose(incl, aeta_star);
        const FinCat* cp = &c;
        auto unit_cert = empty_certificate(composite);
        push_step(unit_cert, Direction::forward,
                  stage_transformation("a", composite, lifted, [cp, composite, lifted, a, x](const ZigZag& zz) {
                    Ladder lad{composite(zz), lifted(zz), {}};
                    for (auto o : nodes(*cp, zz)) lad.columns.push_back(cp->identity(o));
                    lad.columns.push_back(a);
                    lad.columns.push_back(a);
                    lad.columns.push_back(cp->identity(x));
                    lad.columns.push_back(cp->identity(x));
                    return lad;
                  }));
        auto homotopic = whisker_post(thm31_certificate(s, unit_h), incl);
        unit_cert = compose_certificates(unit_cert, homotopic);
        report.add(verify_stage_certificate(unit_cert, label + ": a_*∘(η_X)_* ≃ double inclusion"));
        auto double_incl = compose(inclusion_functor(incl.source, n + 1), inclusion_functor(s, n));
        report.add(from_check(label + ": certificate ends at the double inclusion",
                              agree_on_objects(unit_cert.finish(), double_incl)));

        // The two certificates meet: a_*∘(ι_0∘(η_X)_*) = ι_0∘a_*∘(η_X)_*.
        auto joined = compose(inclusion_functor(composite.target, 0), composite);
        report.add(from_check(label + ": a_*∘ι_0 = ι_0∘a_*", agree_on_objects(left_a.start(), joined)));

        // Right square on L_n(TZ, TX).
        auto st = make_stage(r, t(z), tx, n);
        auto post_then_pre = compose(induced_precompose(induced_postcompose(st, a).target, eta(z)),
                                     induced_postcompose(st, a));
        auto pre_then_post = compose(induced_postcompose(induced_precompose(st, eta(z)).target, a),
                                     induced_precompose(st, eta(z)));
        report.add(from_check(label + ": right square η_Z^*∘a_* = a_*∘η_Z^*",
                              agree_on_objects(post_then_pre, pre_then_post)));
      } catch (const std::exception& e) {
        report.add(failed(label, e.what()));
      }
    }
  }

  // Compatibility of the two components along f^*.
  auto ta = t(c.source(f));
  (void)ta;
  auto b = c.target(f);
  for (std::size_t n = 1; n <= n_max; n += 2) {
    std::string label = "compatibility, " + stage_label(n);
    auto sx = make_stage(r, b, x, n);
    auto stx = make_stage(r, b, tx, n);
    auto f_x = induced_precompose(sx, f);
    auto lhs1 = compose(induced_postcompose(f_x.target, eta(x)), f_x);
    auto eta_b = induced_postcompose(sx, eta(x));
    auto rhs1 = compose(induced_precompose(eta_b.target, f), eta_b);
    report.add(from_check(label + ": (η_X)_*∘f^* = f^*∘(η_X)_*", agree_on_objects(lhs1, rhs1)));
    auto f_tx = induced_precompose(stx, f);
    auto lhs2 = compose(induced_postcompose(f_tx.target, a), f_tx);
    auto a_b = induced_postcompose(stx, a);
    auto rhs2 = compose(induced_precompose(a_b.target, f), a_b);
    report.add(from_check(label + ": a_*∘f^* = f^*∘a_*", agree_on_objects(lhs2, rhs2)));
    auto lhs3 = compose(levelwise(f_x.target, t, r), f_x);
    auto lt = levelwise(sx, t, r);
    auto rhs3 = compose(induced_precompose(lt.target, t(f)), lt);
    report.add(from_check(label + ": L T∘f^* = (Tf)^*∘L T", agree_on_objects(lhs3, rhs3)));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Orthogonality at π₀.

TheoremReport check_prop52_pi0(std::shared_ptr<const RelCat> r, const IdempotentData& d, MorphismId g,
                               ObjectId z, std::size_t n_max, std::size_t bound) {
  TheoremReport report{"prop52", Verdict::pass, {}, {}};
  const FinCat& c = r->cat();
  auto idem = validate_idempotent(*r, d, bound);
  if (idem.verdict == Verdict::fail) {
    report.add(failed("homotopy idempotent data", to_string(*idem.failure)));
    return report;
  }
  report.add({"homotopy idempotent data", idem.verdict, idem.verdict == Verdict::pass ? "ok" : "UNKNOWN"});
  auto lg = d.functor(g);
  bool l_equivalence = r->is_weq(lg);
  auto lz = d.functor(z);
  auto pi0 = pi0_precompose_map(r, g, lz, n_max, bound);
  for (auto& note : pi0.notes) report.notes.push_back(note);
  std::string detail = "basis " + std::string(to_string(pi0.basis));
  if (pi0.bijective) detail += *pi0.bijective ? ", bijective" : ", not bijective";
  if (l_equivalence) {
    report.add(passed("L(g) is a weak equivalence", c.morphism_name(lg)));
    report.add({"π₀ of g^* into " + c.object_name(lz), pi0.verdict, detail});
  } else {
    report.add({"L(g) is a weak equivalence", Verdict::unknown, c.morphism_name(lg) + " is not in W"});
    report.notes.push_back("converse direction: π₀ of g^* into " + c.object_name(lz) + ": " + detail);
  }
  return report;
}

}  // namespace hammock
