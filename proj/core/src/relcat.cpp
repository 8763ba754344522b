#include "hammock/relcat.hpp"

#include <algorithm>
#include <set>

#include "hammock/oracle.hpp"

namespace hammock {

RelCat RelCat::validate(std::shared_ptr<const FinCat> cat, const std::vector<MorphismId>& weq) {
  RelCat r;
  r.cat_ = std::move(cat);
  const FinCat& c = *r.cat_;
  r.weq_.assign(c.morphism_count(), false);
  for (auto m : weq) {
    if (!c.has_morphism(m)) {
      throw ValidationError({"unknown-morphism", "weak equivalence is not a morphism of the category", {}});
    }
    r.weq_[m.value] = true;
  }
  for (auto o : c.objects()) {
    if (!r.weq_[c.identity(o).value]) {
      throw ValidationError({"weq-identity", "weak equivalences must contain every identity",
                             {c.morphism_name(c.identity(o))}});
    }
  }
  for (auto f : c.morphisms()) {
    if (!r.weq_[f.value]) continue;
    for (auto g : c.morphisms_from(c.target(f))) {
      if (r.weq_[g.value] && !r.weq_[c.comp(g, f).value]) {
        throw ValidationError({"weq-closure", "weak equivalences are not closed under composition",
                               {c.morphism_name(g), c.morphism_name(f), c.morphism_name(c.comp(g, f))}});
      }
    }
  }
  r.from_.assign(c.object_count(), {});
  r.to_.assign(c.object_count(), {});
  for (auto m : c.morphisms()) {
    if (!r.weq_[m.value]) continue;
    r.weq_list_.push_back(m);
    r.from_[c.source(m).value].push_back(m);
    r.to_[c.target(m).value].push_back(m);
  }
  return r;
}

std::vector<MorphismId> weq_closure(const FinCat& cat, const std::vector<MorphismId>& seed) {
  std::vector<bool> in(cat.morphism_count(), false);
  for (auto o : cat.objects()) in[cat.identity(o).value] = true;
  for (auto m : seed) in[m.value] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto f : cat.morphisms()) {
      if (!in[f.value]) continue;
      for (auto g : cat.morphisms_from(cat.target(f))) {
        if (in[g.value] && !in[cat.comp(g, f).value]) {
          in[cat.comp(g, f).value] = true;
          changed = true;
        }
      }
    }
  }
  std::vector<MorphismId> out;
  for (auto m : cat.morphisms()) {
    if (in[m.value]) out.push_back(m);
  }
  return out;
}

Check check_two_out_of_three(const RelCat& r) {
  const FinCat& c = r.cat();
  for (auto f : c.morphisms()) {
    for (auto g : c.morphisms_from(c.target(f))) {
      auto gf = c.comp(g, f);
      int count = r.is_weq(f) + r.is_weq(g) + r.is_weq(gf);
      if (count == 2) {
        return fail("two-out-of-three", "two of f, g, g∘f are weak equivalences but the third is not",
                    {c.morphism_name(g), c.morphism_name(f), c.morphism_name(gf)});
      }
    }
  }
  return pass();
}

CylinderData degenerate_cylinder(const FinCat& c, ObjectId a) {
  auto id = c.identity(a);
  return CylinderData{a, a, id, id, id};
}

LeftHomotopyData constant_homotopy(const FinCat& c, MorphismId f) {
  return LeftHomotopyData{degenerate_cylinder(c, c.source(f)), f, f, f};
}

Check validate_cylinder(const RelCat& r, const CylinderData& cyl) {
  const FinCat& c = r.cat();
  auto name = [&](MorphismId m) { return c.morphism_name(m); };
  if (c.source(cyl.i0) != cyl.base || c.target(cyl.i0) != cyl.cylinder) {
    return fail("cylinder", "i0 must be a morphism A -> Cyl(A)", {name(cyl.i0)});
  }
  if (c.source(cyl.i1) != cyl.base || c.target(cyl.i1) != cyl.cylinder) {
    return fail("cylinder", "i1 must be a morphism A -> Cyl(A)", {name(cyl.i1)});
  }
  if (c.source(cyl.p) != cyl.cylinder || c.target(cyl.p) != cyl.base) {
    return fail("cylinder", "p must be a morphism Cyl(A) -> A", {name(cyl.p)});
  }
  auto id = c.identity(cyl.base);
  if (c.comp(cyl.p, cyl.i0) != id) return fail("cylinder", "p∘i0 != id", {name(cyl.p), name(cyl.i0)});
  if (c.comp(cyl.p, cyl.i1) != id) return fail("cylinder", "p∘i1 != id", {name(cyl.p), name(cyl.i1)});
  for (auto m : {cyl.i0, cyl.i1, cyl.p}) {
    if (!r.is_weq(m)) return fail("cylinder", "cylinder structure maps must be weak equivalences", {name(m)});
  }
  return pass();
}

Check validate_left_homotopy(const RelCat& r, const LeftHomotopyData& h) {
  if (auto v = validate_cylinder(r, h.cylinder)) return v;
  const FinCat& c = r.cat();
  auto name = [&](MorphismId m) { return c.morphism_name(m); };
  if (c.source(h.f) != h.cylinder.base || c.source(h.g) != h.cylinder.base ||
      c.target(h.f) != c.target(h.g)) {
    return fail("left-homotopy", "f and g must be parallel morphisms out of the cylinder base",
                {name(h.f), name(h.g)});
  }
  if (c.source(h.homotopy) != h.cylinder.cylinder || c.target(h.homotopy) != c.target(h.f)) {
    return fail("left-homotopy", "H must be a morphism Cyl(A) -> B", {name(h.homotopy)});
  }
  if (c.comp(h.homotopy, h.cylinder.i0) != h.f) {
    return fail("left-homotopy", "H∘i0 != f", {name(h.homotopy), name(h.cylinder.i0), name(h.f)});
  }
  if (c.comp(h.homotopy, h.cylinder.i1) != h.g) {
    return fail("left-homotopy", "H∘i1 != g", {name(h.homotopy), name(h.cylinder.i1), name(h.g)});
  }
  return pass();
}

Check validate_witness(const RelCat& r, const HomotopyWitness& w, MorphismId lhs, MorphismId rhs) {
  const FinCat& c = r.cat();
  if (std::holds_alternative<Strict>(w)) {
    if (lhs != rhs) {
      return fail("strict", "STRICT claimed but the morphisms differ",
                  {c.morphism_name(lhs), c.morphism_name(rhs)});
    }
    return pass();
  }
  const auto& h = std::get<LeftHomotopyData>(w);
  if (auto v = validate_left_homotopy(r, h)) return v;
  if (h.f != lhs || h.g != rhs) {
    return fail("witness", "homotopy does not connect the required morphisms",
                {c.morphism_name(lhs), c.morphism_name(rhs), c.morphism_name(h.f), c.morphism_name(h.g)});
  }
  return pass();
}

LeftHomotopyData realize(const FinCat& c, const HomotopyWitness& w, MorphismId lhs) {
  if (const auto* h = std::get_if<LeftHomotopyData>(&w)) return *h;
  return constant_homotopy(c, lhs);
}

namespace {

bool is_endofunctor_of(const FunctorData& f, const RelCat& r) {
  return f.source.get() == &r.cat() && f.target.get() == &r.cat();
}

Check preserves_weqs(const RelCat& r, const FunctorData& f) {
  for (auto m : r.weqs()) {
    if (!r.is_weq(f(m))) {
      return fail("weq-preservation", f.name + " does not send weak equivalences to weak equivalences",
                  {r.cat().morphism_name(m), r.cat().morphism_name(f(m))});
    }
  }
  return pass();
}

}  // namespace

Check validate_monad(const RelCat& r, const MonadData& m) {
  const FinCat& c = r.cat();
  const auto& t = m.endofunctor;
  if (!is_endofunctor_of(t, r)) return fail("monad", "T must be an endofunctor of the category", {t.name});
  if (auto v = check_functor(t)) return v;
  if (auto v = preserves_weqs(r, t)) return v;
  if (auto v = check_nat_trans(m.unit)) return v;
  if (auto v = check_nat_trans(m.multiplication)) return v;
  auto id = identity_functor_data(r.cat_ptr());
  auto tt = compose(t, t);
  if (m.unit.from.object_map != id.object_map || m.unit.from.morphism_map != id.morphism_map ||
      m.unit.to.object_map != t.object_map || m.unit.to.morphism_map != t.morphism_map) {
    return fail("monad", "unit must be a transformation Id => T", {m.unit.name});
  }
  if (m.multiplication.from.object_map != tt.object_map ||
      m.multiplication.from.morphism_map != tt.morphism_map ||
      m.multiplication.to.object_map != t.object_map ||
      m.multiplication.to.morphism_map != t.morphism_map) {
    return fail("monad", "multiplication must be a transformation T.T => T", {m.multiplication.name});
  }
  const auto& eta = m.unit;
  const auto& mu = m.multiplication;
  for (auto x : c.objects()) {
    auto ox = c.object_name(x);
    if (c.comp(mu(x), t(mu(x))) != c.comp(mu(x), mu(t(x)))) {
      return fail("monad-associativity", "μ∘Tμ != μ∘μT", {ox});
    }
    auto id_tx = c.identity(t(x));
    if (c.comp(mu(x), t(eta(x))) != id_tx) return fail("monad-unit", "μ∘Tη != id_T", {ox});
    if (c.comp(mu(x), eta(t(x))) != id_tx) return fail("monad-unit", "μ∘ηT != id_T", {ox});
  }
  return pass();
}

Check validate_hoalgebra(const RelCat& r, const HoAlgebraData& a) {
  if (auto v = validate_monad(r, a.monad)) return v;
  const FinCat& c = r.cat();
  const auto& t = a.monad.endofunctor;
  auto x = a.carrier;
  if (c.source(a.action) != t(x) || c.target(a.action) != x) {
    return fail("algebra", "action must be a morphism TX -> X", {c.morphism_name(a.action)});
  }
  auto unit_lhs = c.comp(a.action, a.monad.unit(x));
  if (auto v = validate_witness(r, a.unit, unit_lhs, c.identity(x))) {
    v->message = "unit witness: " + v->message;
    return v;
  }
  auto assoc_lhs = c.comp(a.action, a.monad.multiplication(x));
  auto assoc_rhs = c.comp(a.action, t(a.action));
  if (auto v = validate_witness(r, a.associativity, assoc_lhs, assoc_rhs)) {
    v->message = "associativity witness: " + v->message;
    return v;
  }
  return pass();
}

HomotopyWitness idempotent_witness(const IdempotentData& d, ObjectId z) {
  auto it = d.witnesses.find(z);
  if (it == d.witnesses.end()) return Strict{};
  return it->second;
}

IdempotentReport validate_idempotent(const RelCat& r, const IdempotentData& d, std::size_t bound) {
  IdempotentReport report;
  const FinCat& c = r.cat();
  const auto& l = d.functor;
  const auto& ell = d.coaugmentation;
  auto failed = [&](Violation v) {
    report.verdict = Verdict::fail;
    report.failure = std::move(v);
    return report;
  };
  if (!is_endofunctor_of(l, r)) return failed({"idempotent", "L must be an endofunctor", {l.name}});
  if (auto v = check_functor(l)) return failed(*v);
  if (auto v = check_nat_trans(ell)) return failed(*v);
  auto id = identity_functor_data(r.cat_ptr());
  if (ell.from.object_map != id.object_map || ell.from.morphism_map != id.morphism_map ||
      ell.to.object_map != l.object_map || ell.to.morphism_map != l.morphism_map) {
    return failed({"idempotent", "coaugmentation must be a transformation Id => L", {ell.name}});
  }
  if (auto v = preserves_weqs(r, l)) return failed(*v);

  for (auto x : c.objects()) {
    auto ell_lx = ell(l(x));
    auto l_ell_x = l(ell(x));
    const auto& ox = c.object_name(x);
    if (!r.is_weq(ell_lx)) {
      return failed({"idempotent-weq", "ℓ_{LX} is not a weak equivalence", {ox, c.morphism_name(ell_lx)}});
    }
    if (!r.is_weq(l_ell_x)) {
      return failed({"idempotent-weq", "Lℓ_X is not a weak equivalence", {ox, c.morphism_name(l_ell_x)}});
    }
    if (ell_lx == l_ell_x) continue;
    auto it = d.witnesses.find(x);
    if (it != d.witnesses.end()) {
      if (auto v = validate_witness(r, it->second, l_ell_x, ell_lx)) return failed(*v);
      // Both legs of a cylinder become p^{-1} after localization.
      report.notes.push_back(ox + ": Lℓ_X and ℓ_{LX} agree via the declared left homotopy");
      continue;
    }
    auto eq = equal_in_localization(r, word_of(c, l_ell_x), word_of(c, ell_lx), bound);
    if (eq == Equality::yes) {
      report.notes.push_back(ox + ": Lℓ_X and ℓ_{LX} agree in the localization (oracle)");
    } else if (eq == Equality::no_at_bound) {
      return failed({"idempotent-ho", "Lℓ_X and ℓ_{LX} differ in the localization",
                     {ox, c.morphism_name(l_ell_x), c.morphism_name(ell_lx)}});
    } else {
      report.verdict = combine(report.verdict, Verdict::unknown);
      report.notes.push_back(ox + ": equality of Lℓ_X and ℓ_{LX} in the localization is UNKNOWN at bound " +
                             std::to_string(bound));
    }
  }
  for (const auto& [z, w] : d.witnesses) {
    // Declared witnesses must be valid even where strict equality holds.
    if (auto v = validate_witness(r, w, l(ell(z)), ell(l(z)))) return failed(*v);
  }
  return report;
}

}  // namespace hammock
