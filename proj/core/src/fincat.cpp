#include "hammock/fincat.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace hammock {

namespace {

[[noreturn]] void reject(std::string law, std::string message, std::vector<std::string> witnesses) {
  throw ValidationError(Violation{std::move(law), std::move(message), std::move(witnesses)});
}

}  // namespace

FinCat FinCat::validate(const RawCategory& raw) {
  FinCat c;
  c.name_ = raw.name;

  c.object_names_ = raw.objects;
  std::sort(c.object_names_.begin(), c.object_names_.end());
  for (std::size_t i = 0; i < c.object_names_.size(); ++i) {
    if (i && c.object_names_[i] == c.object_names_[i - 1]) {
      reject("duplicate-object", "object declared twice", {c.object_names_[i]});
    }
    c.object_index_.emplace(c.object_names_[i], ObjectId{static_cast<std::uint32_t>(i)});
    c.object_ids_.push_back(ObjectId{static_cast<std::uint32_t>(i)});
  }

  auto sorted = raw.morphisms;
  std::sort(sorted.begin(), sorted.end(),
            [](const RawMorphism& a, const RawMorphism& b) { return a.name < b.name; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& m = sorted[i];
    if (i && m.name == sorted[i - 1].name) {
      reject("duplicate-morphism", "morphism declared twice", {m.name});
    }
    auto s = c.find_object(m.source);
    auto t = c.find_object(m.target);
    if (!s || !t) {
      reject("unknown-object", "morphism refers to an undeclared object",
             {m.name, s ? m.target : m.source});
    }
    MorphismId id{static_cast<std::uint32_t>(i)};
    c.morphisms_.push_back(MorphismInfo{m.name, *s, *t});
    c.morphism_ids_.push_back(id);
    c.morphism_index_.emplace(m.name, id);
  }

  const std::size_t n_obj = c.object_names_.size();
  const std::size_t n_mor = c.morphisms_.size();

  c.identities_.assign(n_obj, MorphismId{kNone});
  for (std::size_t i = 0; i < n_obj; ++i) {
    const auto& oname = c.object_names_[i];
    auto it = raw.identities.find(oname);
    if (it == raw.identities.end()) {
      reject("missing-identity", "object has no identity morphism", {oname});
    }
    auto m = c.find_morphism(it->second);
    if (!m) reject("unknown-morphism", "identity refers to an undeclared morphism", {oname, it->second});
    if (c.source(*m).value != i || c.target(*m).value != i) {
      reject("identity-type", "identity must be an endomorphism of its object", {oname, it->second});
    }
    c.identities_[i] = *m;
  }
  for (const auto& [oname, _] : raw.identities) {
    if (!c.find_object(oname)) reject("unknown-object", "identity declared for an undeclared object", {oname});
  }

  c.comp_.assign(n_mor * n_mor, kNone);
  for (const auto& entry : raw.compositions) {
    auto g = c.find_morphism(entry.second);
    auto f = c.find_morphism(entry.first);
    auto h = c.find_morphism(entry.result);
    if (!g || !f || !h) {
      reject("unknown-morphism", "composition entry refers to an undeclared morphism",
             {entry.second, entry.first, entry.result});
    }
    if (c.target(*f) != c.source(*g)) {
      reject("not-composable", "composition entry for a non-composable pair", {entry.second, entry.first});
    }
    auto& slot = c.comp_[g->value * n_mor + f->value];
    if (slot != kNone && slot != h->value) {
      reject("conflicting-composite", "two different composites declared for one pair",
             {entry.second, entry.first});
    }
    slot = h->value;
  }

  // Identity laws, on the entries that are present.
  for (std::size_t fi = 0; fi < n_mor; ++fi) {
    MorphismId f{static_cast<std::uint32_t>(fi)};
    auto left = c.identities_[c.target(f).value];
    auto right = c.identities_[c.source(f).value];
    auto l = c.comp_[left.value * n_mor + fi];
    if (l != kNone && l != fi) {
      reject("identity", "id ∘ f != f", {c.morphism_name(left), c.morphism_name(f)});
    }
    auto r = c.comp_[fi * n_mor + right.value];
    if (r != kNone && r != fi) {
      reject("identity", "f ∘ id != f", {c.morphism_name(f), c.morphism_name(right)});
    }
  }

  for (std::size_t gi = 0; gi < n_mor; ++gi) {
    for (std::size_t fi = 0; fi < n_mor; ++fi) {
      MorphismId g{static_cast<std::uint32_t>(gi)}, f{static_cast<std::uint32_t>(fi)};
      auto h = c.comp_[gi * n_mor + fi];
      if (h == kNone) continue;
      MorphismId hm{h};
      if (c.source(hm) != c.source(f) || c.target(hm) != c.target(g)) {
        reject("composite-type", "composite has the wrong source or target",
               {c.morphism_name(g), c.morphism_name(f), c.morphism_name(hm)});
      }
    }
  }

  for (std::size_t gi = 0; gi < n_mor; ++gi) {
    for (std::size_t fi = 0; fi < n_mor; ++fi) {
      MorphismId g{static_cast<std::uint32_t>(gi)}, f{static_cast<std::uint32_t>(fi)};
      if (c.target(f) == c.source(g) && c.comp_[gi * n_mor + fi] == kNone) {
        reject("missing-composite", "no composite declared for a composable pair",
               {c.morphism_name(g), c.morphism_name(f)});
      }
    }
  }

  c.hom_.assign(n_obj * n_obj, {});
  c.from_.assign(n_obj, {});
  c.to_.assign(n_obj, {});
  for (auto m : c.morphism_ids_) {
    c.hom_[c.source(m).value * n_obj + c.target(m).value].push_back(m);
    c.from_[c.source(m).value].push_back(m);
    c.to_[c.target(m).value].push_back(m);
  }

  // Associativity over every composable triple.
  for (auto f : c.morphism_ids_) {
    for (auto g : c.morphisms_from(c.target(f))) {
      auto gf = c.comp(g, f);
      for (auto h : c.morphisms_from(c.target(g))) {
        if (c.comp(h, gf) != c.comp(c.comp(h, g), f)) {
          reject("associativity", "(h∘g)∘f != h∘(g∘f)",
                 {c.morphism_name(h), c.morphism_name(g), c.morphism_name(f)});
        }
      }
    }
  }
  return c;
}

std::optional<MorphismId> FinCat::compose(MorphismId g, MorphismId f) const {
  if (!has_morphism(g) || !has_morphism(f) || target(f) != source(g)) return std::nullopt;
  return MorphismId{comp_[g.value * morphisms_.size() + f.value]};
}


std::optional<ObjectId> FinCat::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorphismId> FinCat::find_morphism(std::string_view name) const {
  auto it = morphism_index_.find(std::string(name));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

ObjectId FinCat::object(std::string_view name) const {
  if (auto o = find_object(name)) return *o;
  throw std::out_of_range("unknown object '" + std::string(name) + "' in category " + name_);
}

MorphismId FinCat::morphism(std::string_view name) const {
  if (auto m = find_morphism(name)) return *m;
  throw std::out_of_range("unknown morphism '" + std::string(name) + "' in category " + name_);
}

std::string FinCat::describe(MorphismId m) const {
  if (!has_morphism(m)) return "<invalid morphism>";
  return morphism_name(m) + ": " + object_name(source(m)) + " -> " + object_name(target(m));
}

RawCategory FinCat::to_raw() const {
  RawCategory raw;
  raw.name = name_;
  raw.objects = object_names_;
  for (const auto& m : morphisms_) {
    raw.morphisms.push_back({m.name, object_names_[m.source.value], object_names_[m.target.value]});
  }
  for (std::size_t i = 0; i < object_names_.size(); ++i) {
    raw.identities.emplace(object_names_[i], morphism_name(identities_[i]));
  }
  for (auto f : morphism_ids_) {
    for (auto g : morphisms_from(target(f))) {
      raw.compositions.push_back({morphism_name(g), morphism_name(f), morphism_name(comp(g, f))});
    }
  }
  return raw;
}

FinCat free_acyclic(const FreeGraph& graph) {
  const std::size_t nv = graph.vertices.size();
  std::map<std::string, std::size_t> vindex;
  for (std::size_t i = 0; i < nv; ++i) {
    if (!vindex.emplace(graph.vertices[i], i).second) {
      reject("duplicate-object", "vertex declared twice", {graph.vertices[i]});
    }
  }
  std::vector<std::vector<std::size_t>> out(nv);
  std::vector<std::size_t> esrc, etgt;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& edge = graph.edges[e];
    auto s = vindex.find(edge.source);
    auto t = vindex.find(edge.target);
    if (s == vindex.end() || t == vindex.end()) {
      reject("unknown-object", "edge refers to an undeclared vertex", {edge.name});
    }
    esrc.push_back(s->second);
    etgt.push_back(t->second);
    out[s->second].push_back(e);
  }

  // Cycle detection with an explicit path so the cycle can be named.
  std::vector<int> state(nv, 0);
  std::vector<std::size_t> stack_edges;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    state[v] = 1;
    for (auto e : out[v]) {
      stack_edges.push_back(e);
      auto w = etgt[e];
      if (state[w] == 1) {
        std::vector<std::string> cycle;
        auto start = std::find_if(stack_edges.begin(), stack_edges.end(),
                                  [&](std::size_t se) { return esrc[se] == w; });
        for (auto it = start; it != stack_edges.end(); ++it) cycle.push_back(graph.edges[*it].name);
        reject("cycle", "graph is not acyclic", cycle);
      }
      if (state[w] == 0) visit(w);
      stack_edges.pop_back();
    }
    state[v] = 2;
  };
  for (std::size_t v = 0; v < nv; ++v) {
    if (state[v] == 0) visit(v);
  }

  // All paths, keyed by edge sequence in application order.
  std::map<std::vector<std::size_t>, std::string> path_name;
  std::vector<std::pair<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>>> paths;
  RawCategory raw;
  raw.name = graph.name;
  raw.objects = graph.vertices;
  auto name_of = [&](const std::vector<std::size_t>& p) {
    std::string n;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
      if (!n.empty()) n += ".";
      n += graph.edges[*it].name;
    }
    return n;
  };
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> extend =
      [&](std::size_t start, std::size_t v, std::vector<std::size_t>& p) {
        for (auto e : out[v]) {
          p.push_back(e);
          auto n = name_of(p);
          path_name.emplace(p, n);
          raw.morphisms.push_back({n, graph.vertices[start], graph.vertices[etgt[e]]});
          paths.push_back({p, {start, etgt[e]}});
          extend(start, etgt[e], p);
          p.pop_back();
        }
      };
  for (std::size_t v = 0; v < nv; ++v) {
    auto id = "id_" + graph.vertices[v];
    raw.morphisms.push_back({id, graph.vertices[v], graph.vertices[v]});
    raw.identities.emplace(graph.vertices[v], id);
    std::vector<std::size_t> p;
    extend(v, v, p);
  }
  // Composition: identities act trivially, paths concatenate.
  for (std::size_t v = 0; v < nv; ++v) {
    auto id = "id_" + graph.vertices[v];
    raw.compositions.push_back({id, id, id});
  }
  for (const auto& [p, ends] : paths) {
    auto n = path_name.at(p);
    raw.compositions.push_back({"id_" + graph.vertices[ends.second], n, n});
    raw.compositions.push_back({n, "id_" + graph.vertices[ends.first], n});
    for (const auto& [q, qends] : paths) {
      if (qends.first != ends.second) continue;
      auto pq = p;
      pq.insert(pq.end(), q.begin(), q.end());
      raw.compositions.push_back({path_name.at(q), n, path_name.at(pq)});
    }
  }
  return FinCat::validate(raw);
}

Functor<FinCat, FinCat> FunctorData::as_functor() const {
  auto self = *this;
  return Functor<FinCat, FinCat>{
      name, source, target, [self](const ObjectId& o) { return self(o); },
      [self](const MorphismId& m) { return self(m); }};
}

FunctorData identity_functor_data(std::shared_ptr<const FinCat> c, std::string name) {
  FunctorData f{std::move(name), c, c, c->objects(), c->morphisms()};
  return f;
}

FunctorData compose(const FunctorData& g, const FunctorData& f) {
  FunctorData out{g.name + "." + f.name, f.source, g.target, {}, {}};
  for (auto o : f.object_map) out.object_map.push_back(g(o));
  for (auto m : f.morphism_map) out.morphism_map.push_back(g(m));
  return out;
}

NatTrans<FinCat, FinCat> NatTransData::as_nat_trans() const {
  auto comps = components;
  return NatTrans<FinCat, FinCat>{name, from.as_functor(), to.as_functor(),
                                  [comps](const ObjectId& o) { return comps[o.value]; }};
}

NatTransData identity_nat_trans_data(const FunctorData& f) {
  NatTransData eta{"id_" + f.name, f, f, {}};
  for (auto o : f.source->objects()) eta.components.push_back(f.target->identity(f(o)));
  return eta;
}

Check check_functor(const FunctorData& f) {
  if (f.object_map.size() != f.source->object_count() ||
      f.morphism_map.size() != f.source->morphism_count()) {
    return fail("functor-table", f.name + " does not map every object and morphism", {f.name});
  }
  return check_functor(f.as_functor());
}

Check check_nat_trans(const NatTransData& eta) {
  if (eta.from.source != eta.to.source || eta.from.target != eta.to.target) {
    return fail("nat-endpoints", eta.name + " relates functors with different source/target", {eta.name});
  }
  if (eta.components.size() != eta.from.source->object_count()) {
    return fail("component", eta.name + " is missing components", {eta.name});
  }
  return check_nat_trans(eta.as_nat_trans());
}

Components connected_components(const FinCat& c) { return connected_components<FinCat>(c); }

std::optional<MorphismId> inverse_of(const FinCat& c, MorphismId m) {
  for (auto n : c.hom(c.target(m), c.source(m))) {
    if (c.comp(n, m) == c.identity(c.source(m)) && c.comp(m, n) == c.identity(c.target(m))) return n;
  }
  return std::nullopt;
}

EquivalenceReport check_equivalence(const FunctorData& f) {
  EquivalenceReport report;
  const FinCat& src = *f.source;
  const FinCat& tgt = *f.target;
  for (auto b : tgt.objects()) {
    bool found = false;
    for (auto a : src.objects()) {
      for (auto m : tgt.hom(f(a), b)) {
        if (inverse_of(tgt, m)) {
          report.witnesses.emplace_back(a, m);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      report.counterexample = Violation{"essential-surjectivity",
                                        "target object is not isomorphic to any image object",
                                        {tgt.object_name(b)}};
      return report;
    }
  }
  for (auto a : src.objects()) {
    for (auto a2 : src.objects()) {
      ++report.hom_sets_checked;
      auto dom = src.hom(a, a2);
      auto cod = tgt.hom(f(a), f(a2));
      std::set<MorphismId> image;
      for (auto m : dom) image.insert(f(m));
      if (image.size() != dom.size()) {
        report.counterexample = Violation{"faithfulness", "hom map is not injective",
                                          {src.object_name(a), src.object_name(a2)}};
        return report;
      }
      if (image.size() != cod.size()) {
        report.counterexample = Violation{"fullness", "hom map is not surjective",
                                          {src.object_name(a), src.object_name(a2)}};
        return report;
      }
    }
  }
  report.equivalence = true;
  return report;
}

}  // namespace hammock
