#include "hammock/certificate_io.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hammock {

namespace {

Json names(const FinCat& c, const std::vector<MorphismId>& ms) {
  Json out = Json::array();
  for (auto m : ms) out.push_back(c.morphism_name(m));
  return out;
}

Json stage_json(const HammockStage& s) {
  Json j;
  j["from"] = s.base().object_name(s.from());
  j["to"] = s.base().object_name(s.to());
  j["stage"] = s.stage();
  return j;
}

}  // namespace

Json serialize_certificate(const HomotopyCertificate& cert) {
  const auto& src = *cert.start().source;
  const auto& tgt = *cert.start().target;
  const FinCat& sc = src.base();
  const FinCat& tc = tgt.base();
  Json j;
  j["source_category"] = sc.name();
  j["target_category"] = tc.name();
  j["source"] = stage_json(src);
  j["target"] = stage_json(tgt);
  Json zigzags = Json::array();
  for (const auto& z : src.objects()) zigzags.push_back(names(sc, z.arrows));
  j["zigzags"] = zigzags;

  Json maps = Json::array();
  std::vector<const FunctorData*> seen;
  auto map_index = [&](const std::shared_ptr<const FunctorData>& f) {
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i]->morphism_map == f->morphism_map) return i;
    }
    seen.push_back(f.get());
    Json m;
    m["name"] = f->name;
    Json table = Json::object();
    for (std::size_t k = 0; k < f->morphism_map.size(); ++k) {
      MorphismId mor{static_cast<std::uint32_t>(k)};
      table[f->source->morphism_name(mor)] = f->target->morphism_name((*f)(mor));
    }
    m["morphisms"] = table;
    maps.push_back(m);
    return seen.size() - 1;
  };

  Json functors = Json::array();
  for (const auto& f : cert.functors) {
    if (!f.annotation) throw std::invalid_argument("functor " + f.name + " has no column map");
    Json fj;
    fj["name"] = f.name;
    Json objects = Json::array();
    for (const auto& z : src.objects()) objects.push_back(names(tc, f(z).arrows));
    fj["objects"] = objects;
    Json columns = Json::array();
    for (const auto& col : *f.annotation) {
      Json cj;
      switch (col.kind) {
        case ColumnSource::Kind::copy:
          cj["copy"] = col.column;
          break;
        case ColumnSource::Kind::mapped:
          cj["map"] = map_index(col.functor);
          cj["column"] = col.column;
          break;
        case ColumnSource::Kind::identity:
          cj["identity"] = true;
          break;
      }
      columns.push_back(cj);
    }
    fj["columns"] = columns;
    functors.push_back(fj);
  }
  j["maps"] = maps;
  j["functors"] = functors;

  Json steps = Json::array();
  for (const auto& st : cert.steps) {
    Json sj;
    sj["name"] = st.transformation.name;
    sj["direction"] = std::string(to_string(st.direction));
    Json comps = Json::array();
    for (const auto& z : src.objects()) comps.push_back(names(tc, st.transformation(z).columns));
    sj["components"] = comps;
    steps.push_back(sj);
  }
  j["steps"] = steps;
  return j;
}

Json serialize_family(const StageWitnessFamily& family) {
  Json j;
  j["name"] = family.name;
  j["source_position"] = family.source_position;
  j["target_position"] = family.target_position;
  Json certs = Json::array();
  for (const auto& c : family.certificates) certs.push_back(serialize_certificate(c));
  j["certificates"] = certs;
  return j;
}

// ---------------------------------------------------------------------------
// Replay. Deliberately self-contained: nothing below calls the stage, functor
// or certificate code above.

namespace {

using Arrows = std::vector<MorphismId>;

struct ReplayFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Endpoints {
  ObjectId from;
  ObjectId to;
  std::size_t stage;
};

MorphismId morphism_named(const FinCat& c, const Json& name) {
  auto m = c.find_morphism(name.get<std::string>());
  if (!m) throw ReplayFailure("unknown morphism " + name.get<std::string>());
  return *m;
}

Arrows arrows_of(const FinCat& c, const Json& list) {
  Arrows out;
  for (const auto& n : list) out.push_back(morphism_named(c, n));
  return out;
}

Endpoints endpoints_of(const FinCat& c, const Json& j) {
  auto x = c.find_object(j.at("from").get<std::string>());
  auto y = c.find_object(j.at("to").get<std::string>());
  if (!x || !y) throw ReplayFailure("unknown endpoint object");
  auto n = j.at("stage").get<std::size_t>();
  if (n % 2 == 0) throw ReplayFailure("even stage");
  return {*x, *y, n};
}

bool backward(std::size_t k) { return k % 2 == 0; }

// Nodes of a chain of arrows starting at x; nullopt if they do not chain or
// a backward arrow is not a weak equivalence.
std::optional<std::vector<ObjectId>> chain(const RelCat& r, ObjectId x, const Arrows& a) {
  const FinCat& c = r.cat();
  std::vector<ObjectId> out{x};
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (backward(k)) {
      if (c.target(a[k]) != out.back() || !r.is_weq(a[k])) return std::nullopt;
      out.push_back(c.source(a[k]));
    } else {
      if (c.source(a[k]) != out.back()) return std::nullopt;
      out.push_back(c.target(a[k]));
    }
  }
  return out;
}

std::vector<ObjectId> zigzag_nodes(const RelCat& r, const Endpoints& e, const Arrows& a, const std::string& what) {
  auto ns = chain(r, e.from, a);
  if (a.size() != e.stage || !ns || ns->back() != e.to) throw ReplayFailure(what + " is not a zig-zag of the stage");
  return *ns;
}

std::vector<Arrows> all_zigzags(const RelCat& r, const Endpoints& e) {
  const FinCat& c = r.cat();
  std::vector<Arrows> out;
  Arrows cur;
  auto go = [&](auto&& self, ObjectId at) -> void {
    if (cur.size() == e.stage) {
      if (at == e.to) out.push_back(cur);
      return;
    }
    if (backward(cur.size())) {
      for (auto d : c.morphisms_to(at)) {
        if (!r.is_weq(d)) continue;
        cur.push_back(d);
        self(self, c.source(d));
        cur.pop_back();
      }
    } else {
      for (auto d : c.morphisms_from(at)) {
        cur.push_back(d);
        self(self, c.target(d));
        cur.pop_back();
      }
    }
  };
  go(go, e.from);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> ladder_fault(const FinCat& c, const Arrows& a, const std::vector<ObjectId>& an,
                                        const Arrows& b, const std::vector<ObjectId>& bn, const Arrows& cols) {
  if (cols.size() != an.size()) return "wrong number of columns";
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (c.source(cols[k]) != an[k] || c.target(cols[k]) != bn[k]) return "column " + std::to_string(k) + " mistyped";
  }
  if (!c.is_identity(cols.front()) || !c.is_identity(cols.back())) return "end columns are not identities";
  for (std::size_t k = 0; k < a.size(); ++k) {
    bool ok = backward(k) ? c.comp(cols[k], a[k]) == c.comp(b[k], cols[k + 1])
                          : c.comp(cols[k + 1], a[k]) == c.comp(b[k], cols[k]);
    if (!ok) return "square at column " + std::to_string(k) + " does not commute";
  }
  return std::nullopt;
}

struct Rule {
  enum { copy, mapped, identity } kind;
  std::size_t column;
  std::size_t map;
};

struct ReplayFunctor {
  std::string name;
  std::vector<Arrows> images;
  std::vector<std::vector<ObjectId>> nodes;
  std::vector<Rule> rules;
};

std::string text(const FinCat& c, const Arrows& a) {
  std::string out = "[";
  for (std::size_t k = 0; k < a.size(); ++k) out += (k ? " " : "") + c.morphism_name(a[k]);
  return out + "]";
}

// Prefix tree over the listed zig-zags, for locating ladder targets.
class Trie {
 public:
  explicit Trie(const std::vector<Arrows>& zs) : children_(1), leaf_(1, kNone) {
    for (std::size_t i = 0; i < zs.size(); ++i) {
      std::size_t node = 0;
      for (auto d : zs[i]) {
        auto next = child(node, d);
        if (next == kNone) {
          next = leaf_.size();
          children_[node].emplace_back(d, next);
          children_.emplace_back();
          leaf_.push_back(kNone);
        }
        node = next;
      }
      leaf_[node] = i;
    }
  }
  std::size_t child(std::size_t node, MorphismId d) const {
    for (const auto& [a, n] : children_[node]) {
      if (a == d) return n;
    }
    return kNone;
  }
  std::size_t leaf(std::size_t node) const { return leaf_[node]; }
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  std::vector<std::vector<std::pair<MorphismId, std::size_t>>> children_;
  std::vector<std::size_t> leaf_;
};

struct Replayed {
  Endpoints source;
  Endpoints target;
  std::vector<Arrows> zigzags;
  std::vector<ReplayFunctor> functors;
  std::vector<std::vector<Arrows>> components;  // per step, per zig-zag
};

Replayed replay(const RelCat& rs, const RelCat& r, const Json& j) {
  const FinCat& sc = rs.cat();
  const FinCat& c = r.cat();
  if (j.at("source_category").get<std::string>() != sc.name() ||
      j.at("target_category").get<std::string>() != c.name()) {
    throw ReplayFailure("certificate is for other categories");
  }
  Replayed out{endpoints_of(sc, j.at("source")), endpoints_of(c, j.at("target")), {}, {}, {}};
  for (const auto& z : j.at("zigzags")) out.zigzags.push_back(arrows_of(sc, z));
  if (out.zigzags != all_zigzags(rs, out.source)) {
    throw ReplayFailure("listed zig-zags are not exactly the zig-zags of the source stage");
  }
  const auto count = out.zigzags.size();

  std::vector<std::vector<MorphismId>> maps;
  for (const auto& m : j.at("maps")) {
    std::vector<MorphismId> table(sc.morphism_count(), FinCat::no_morphism());
    for (const auto& [from, to] : m.at("morphisms").items()) {
      table[morphism_named(sc, from).value] = morphism_named(c, to);
    }
    if (std::find(table.begin(), table.end(), FinCat::no_morphism()) != table.end()) {
      throw ReplayFailure("map " + m.at("name").get<std::string>() + " is not total");
    }
    maps.push_back(std::move(table));
  }

  const auto target_columns = out.target.stage + 1;
  for (const auto& fj : j.at("functors")) {
    ReplayFunctor f{fj.at("name").get<std::string>(), {}, {}, {}};
    if (fj.at("objects").size() != count) throw ReplayFailure(f.name + ": wrong number of object images");
    for (const auto& img : fj.at("objects")) {
      f.images.push_back(arrows_of(c, img));
      f.nodes.push_back(zigzag_nodes(r, out.target, f.images.back(), f.name + " image " + text(c, f.images.back())));
    }
    for (const auto& cj : fj.at("columns")) {
      if (cj.contains("copy")) {
        f.rules.push_back({Rule::copy, cj.at("copy").get<std::size_t>(), 0});
      } else if (cj.contains("map")) {
        f.rules.push_back({Rule::mapped, cj.at("column").get<std::size_t>(), cj.at("map").get<std::size_t>()});
        if (f.rules.back().map >= maps.size()) throw ReplayFailure(f.name + ": unknown map");
      } else {
        f.rules.push_back({Rule::identity, 0, 0});
      }
      if (f.rules.back().kind != Rule::identity && f.rules.back().column > out.source.stage) {
        throw ReplayFailure(f.name + ": column rule out of range");
      }
    }
    if (f.rules.size() != target_columns) throw ReplayFailure(f.name + ": wrong number of column rules");
    out.functors.push_back(std::move(f));
  }
  const auto& steps = j.at("steps");
  if (out.functors.size() != steps.size() + 1) throw ReplayFailure("functor list must be one longer than the steps");

  struct StepEnds {
    std::size_t from;
    std::size_t to;
  };
  std::vector<StepEnds> ends;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& sj = steps[s];
    auto dir = sj.at("direction").get<std::string>();
    if (dir != "forward" && dir != "backward") throw ReplayFailure("unknown direction " + dir);
    StepEnds e = dir == "forward" ? StepEnds{s, s + 1} : StepEnds{s + 1, s};
    ends.push_back(e);
    std::vector<Arrows> comps;
    if (sj.at("components").size() != count) throw ReplayFailure("step " + std::to_string(s) + ": wrong component count");
    for (std::size_t z = 0; z < count; ++z) {
      comps.push_back(arrows_of(c, sj.at("components")[z]));
      const auto& a = out.functors[e.from];
      const auto& b = out.functors[e.to];
      if (auto fault = ladder_fault(c, a.images[z], a.nodes[z], b.images[z], b.nodes[z], comps.back())) {
        throw ReplayFailure("step " + std::to_string(s) + ", zig-zag " + text(sc, out.zigzags[z]) +
                            ": component is not a ladder: " + *fault);
      }
    }
    out.components.push_back(std::move(comps));
  }

  // Every ladder of the source stage.
  Trie trie(out.zigzags);
  std::vector<std::vector<ObjectId>> source_nodes;
  for (const auto& z : out.zigzags) source_nodes.push_back(*chain(rs, out.source.from, z));
  std::vector<Arrows> image(out.functors.size());
  for (std::size_t i = 0; i < count; ++i) {
    const auto& z = out.zigzags[i];
    const auto& top = source_nodes[i];
    Arrows cols{sc.identity(out.source.from)};
    auto visit = [&](std::size_t t) {
      for (std::size_t f = 0; f < out.functors.size(); ++f) {
        const auto& fn = out.functors[f];
        auto& img = image[f];
        img.clear();
        for (std::size_t k = 0; k < fn.rules.size(); ++k) {
          const auto& rule = fn.rules[k];
          switch (rule.kind) {
            case Rule::copy:
              img.push_back(cols[rule.column]);
              break;
            case Rule::mapped:
              img.push_back(maps[rule.map][cols[rule.column].value]);
              break;
            case Rule::identity:
              img.push_back(c.identity(fn.nodes[i][k]));
              break;
          }
        }
        if (auto fault = ladder_fault(c, fn.images[i], fn.nodes[i], fn.images[t], fn.nodes[t], img)) {
          throw ReplayFailure(fn.name + " on the ladder " + text(sc, z) + " => " + text(sc, out.zigzags[t]) +
                              " by " + text(sc, cols) + ": " + *fault);
        }
      }
      for (std::size_t s = 0; s < ends.size(); ++s) {
        const auto& from = image[ends[s].from];
        const auto& to = image[ends[s].to];
        const auto& ci = out.components[s][i];
        const auto& ct = out.components[s][t];
        for (std::size_t k = 0; k < from.size(); ++k) {
          if (c.comp(to[k], ci[k]) != c.comp(ct[k], from[k])) {
            throw ReplayFailure("step " + std::to_string(s) + ", ladder " + text(sc, z) + " => " +
                                text(sc, out.zigzags[t]) + " by " + text(sc, cols) +
                                ": naturality square at column " + std::to_string(k) + " does not commute");
          }
        }
      }
    };
    auto go = [&](auto&& self, ObjectId at, std::size_t node) -> void {
      auto k = cols.size() - 1;
      if (k == out.source.stage) {
        if (cols.back() == sc.identity(out.source.to) && trie.leaf(node) != Trie::kNone) visit(trie.leaf(node));
        return;
      }
      auto d = z[k];
      auto v = cols[k];
      auto extend = [&](MorphismId e, ObjectId next) {
        auto child = trie.child(node, e);
        if (child == Trie::kNone) return;
        for (auto w : sc.hom(top[k + 1], next)) {
          if (backward(k) ? sc.comp(v, d) != sc.comp(e, w) : sc.comp(w, d) != sc.comp(e, v)) continue;
          cols.push_back(w);
          self(self, next, child);
          cols.pop_back();
        }
      };
      if (backward(k)) {
        for (auto e : sc.morphisms_to(at)) {
          if (rs.is_weq(e)) extend(e, sc.source(e));
        }
      } else {
        for (auto e : sc.morphisms_from(at)) extend(e, sc.target(e));
      }
    };
    go(go, out.source.from, 0);
  }
  return out;
}

Arrows insert_identities(const FinCat& c, const Arrows& a, const std::vector<ObjectId>& ns, std::size_t i) {
  Arrows out(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
  out.push_back(c.identity(ns[i]));
  out.push_back(c.identity(ns[i]));
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  return out;
}

Arrows duplicate_column(const Arrows& cols, std::size_t i) {
  Arrows out(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(i + 1));
  out.push_back(cols[i]);
  out.push_back(cols[i]);
  out.insert(out.end(), cols.begin() + static_cast<std::ptrdiff_t>(i + 1), cols.end());
  return out;
}

}  // namespace

Check replay_certificate(const RelCat& r, const Json& cert) { return replay_certificate(r, r, cert); }

Check replay_certificate(const RelCat& source, const RelCat& target, const Json& cert) {
  try {
    replay(source, target, cert);
  } catch (const ReplayFailure& e) {
    return fail("replay", e.what());
  } catch (const Json::exception& e) {
    return fail("replay-format", e.what());
  }
  return pass();
}

Check replay_family(const RelCat& r, const Json& family) { return replay_family(r, r, family); }

Check replay_family(const RelCat& source, const RelCat& r, const Json& family) {
  const FinCat& c = r.cat();
  try {
    auto sp = family.at("source_position").get<std::size_t>();
    auto tp = family.at("target_position").get<std::size_t>();
    std::vector<Replayed> certs;
    for (const auto& j : family.at("certificates")) certs.push_back(replay(source, r, j));
    for (std::size_t k = 0; k + 1 < certs.size(); ++k) {
      const auto& small = certs[k];
      const auto& large = certs[k + 1];
      auto label = "stages " + std::to_string(small.source.stage) + "->" + std::to_string(large.source.stage);
      if (large.source.stage != small.source.stage + 2 || small.functors.size() != large.functors.size()) {
        throw ReplayFailure(label + ": certificates do not line up");
      }
      std::map<Arrows, std::size_t> index;
      for (std::size_t i = 0; i < large.zigzags.size(); ++i) index.emplace(large.zigzags[i], i);
      for (std::size_t z = 0; z < small.zigzags.size(); ++z) {
        auto ns = *chain(source, small.source.from, small.zigzags[z]);
        auto it = index.find(insert_identities(source.cat(), small.zigzags[z], ns, sp));
        if (it == index.end()) throw ReplayFailure(label + ": inclusion leaves the larger stage");
        for (std::size_t f = 0; f < small.functors.size(); ++f) {
          const auto& sf = small.functors[f];
          if (large.functors[f].images[it->second] != insert_identities(c, sf.images[z], sf.nodes[z], tp)) {
            throw ReplayFailure(label + ": functor " + std::to_string(f) + " (" + sf.name +
                                ") does not commute with the inclusions at " + text(source.cat(), small.zigzags[z]));
          }
        }
        for (std::size_t s = 0; s < small.components.size(); ++s) {
          if (large.components[s][it->second] != duplicate_column(small.components[s][z], tp)) {
            throw ReplayFailure(label + ": step " + std::to_string(s) +
                                " does not commute with the inclusions at " + text(source.cat(), small.zigzags[z]));
          }
        }
      }
    }
  } catch (const ReplayFailure& e) {
    return fail("replay", e.what());
  } catch (const Json::exception& e) {
    return fail("replay-format", e.what());
  }
  return pass();
}

}  // namespace hammock
