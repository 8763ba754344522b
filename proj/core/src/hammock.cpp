#include "hammock/hammock.hpp"

#include <algorithm>
#include <stdexcept>

namespace hammock {

namespace {

// Endpoints of d_k read in zig-zag order: C_k then C_{k+1}.
ObjectId left_end(const FinCat& c, MorphismId d, std::size_t k) {
  return is_backward(k) ? c.target(d) : c.source(d);
}
ObjectId right_end(const FinCat& c, MorphismId d, std::size_t k) {
  return is_backward(k) ? c.source(d) : c.target(d);
}

std::string columns_string(const FinCat& c, const std::vector<MorphismId>& cols) {
  std::string out = "(";
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ", ";
    out += c.morphism_name(cols[i]);
  }
  return out + ")";
}

}  // namespace

std::vector<ObjectId> nodes(const FinCat& c, const ZigZag& z) {
  std::vector<ObjectId> out{z.from};
  for (std::size_t k = 0; k < z.arrows.size(); ++k) out.push_back(right_end(c, z.arrows[k], k));
  return out;
}

Check check_zigzag(const RelCat& r, const ZigZag& z) {
  const FinCat& c = r.cat();
  if (z.stage() % 2 == 0) {
    return fail("zigzag-stage", "stage must be odd", {std::to_string(z.stage())});
  }
  auto at = z.from;
  for (std::size_t k = 0; k < z.arrows.size(); ++k) {
    auto d = z.arrows[k];
    if (!c.has_morphism(d)) return fail("zigzag", "unknown arrow", {std::to_string(k)});
    if (left_end(c, d, k) != at) {
      return fail("zigzag-chain", "arrows do not chain", {std::to_string(k), c.morphism_name(d)});
    }
    if (is_backward(k) && !r.is_weq(d)) {
      return fail("zigzag-weq", "backward arrow is not a weak equivalence",
                  {std::to_string(k), c.morphism_name(d)});
    }
    at = right_end(c, d, k);
  }
  if (at != z.to) return fail("zigzag-chain", "zig-zag does not end at its target", {c.object_name(z.to)});
  return pass();
}

std::string to_string(const FinCat& c, const ZigZag& z) {
  std::string out = c.object_name(z.from);
  for (std::size_t k = 0; k < z.arrows.size(); ++k) {
    const auto& name = c.morphism_name(z.arrows[k]);
    out += is_backward(k) ? " <" + name + "- " : " -" + name + "> ";
    out += c.object_name(right_end(c, z.arrows[k], k));
  }
  return out;
}

Check check_ladder(const RelCat& r, const Ladder& l) {
  const FinCat& c = r.cat();
  if (auto v = check_zigzag(r, l.source)) return v;
  if (auto v = check_zigzag(r, l.target)) return v;
  const auto n = l.source.stage();
  if (l.target.stage() != n || l.source.from != l.target.from || l.source.to != l.target.to) {
    return fail("ladder", "source and target must share stage and endpoints");
  }
  if (l.columns.size() != n + 1) return fail("ladder", "wrong number of columns");
  auto top = nodes(c, l.source);
  auto bottom = nodes(c, l.target);
  for (std::size_t k = 0; k <= n; ++k) {
    auto v = l.columns[k];
    if (!c.has_morphism(v) || c.source(v) != top[k] || c.target(v) != bottom[k]) {
      return fail("ladder-column", "column has the wrong type", {std::to_string(k)});
    }
  }
  if (l.columns[0] != c.identity(l.source.from) || l.columns[n] != c.identity(l.source.to)) {
    return fail("ladder-column", "end columns must be identities");
  }
  for (std::size_t k = 0; k < n; ++k) {
    auto d = l.source.arrows[k];
    auto e = l.target.arrows[k];
    bool ok = is_backward(k) ? c.comp(l.columns[k], d) == c.comp(e, l.columns[k + 1])
                             : c.comp(l.columns[k + 1], d) == c.comp(e, l.columns[k]);
    if (!ok) {
      return fail("ladder-square", "square does not commute",
                  {std::to_string(k), c.morphism_name(d), c.morphism_name(e)});
    }
  }
  return pass();
}

Ladder identity_ladder(const FinCat& c, const ZigZag& z) {
  Ladder l{z, z, {}};
  for (auto o : nodes(c, z)) l.columns.push_back(c.identity(o));
  return l;
}

std::optional<Ladder> compose(const FinCat& c, const Ladder& g, const Ladder& f) {
  if (f.target != g.source) return std::nullopt;
  Ladder out{f.source, g.target, {}};
  out.columns.reserve(f.columns.size());
  for (std::size_t k = 0; k < f.columns.size(); ++k) out.columns.push_back(c.comp(g.columns[k], f.columns[k]));
  return out;
}

std::string to_string(const FinCat& c, const Ladder& l) {
  return "[" + to_string(c, l.source) + "] => [" + to_string(c, l.target) + "] by " +
         columns_string(c, l.columns);
}

std::vector<ZigZag> enumerate_zigzags(const RelCat& r, ObjectId x, ObjectId y, std::size_t n) {
  if (n % 2 == 0) throw std::invalid_argument("hammock stages must be odd");
  const FinCat& c = r.cat();
  std::vector<ZigZag> out;
  ZigZag z{x, y, {}};
  z.arrows.reserve(n);
  auto go = [&](auto&& self, ObjectId at) -> void {
    auto k = z.arrows.size();
    if (k == n) {
      if (at == y) out.push_back(z);
      return;
    }
    if (is_backward(k)) {
      for (auto d : r.weqs_to(at)) {
        z.arrows.push_back(d);
        self(self, c.source(d));
        z.arrows.pop_back();
      }
    } else {
      for (auto d : c.morphisms_from(at)) {
        z.arrows.push_back(d);
        self(self, c.target(d));
        z.arrows.pop_back();
      }
    }
  };
  go(go, x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ladder> ladders_from(const RelCat& r, const ZigZag& z) {
  const FinCat& c = r.cat();
  const auto n = z.stage();
  auto top = nodes(c, z);
  std::vector<Ladder> out;
  Ladder l{z, ZigZag{z.from, z.to, {}}, {c.identity(z.from)}};
  // Column k+1 and the bottom arrow d'_k are chosen together so that square
  // k commutes with the column already fixed.
  auto go = [&](auto&& self, ObjectId at) -> void {
    auto k = l.target.arrows.size();
    if (k == n) {
      if (at == z.to && l.columns.back() == c.identity(z.to)) out.push_back(l);
      return;
    }
    auto d = z.arrows[k];
    auto v = l.columns[k];
    auto try_column = [&](MorphismId e, ObjectId next) {
      for (auto w : c.hom(top[k + 1], next)) {
        bool ok = is_backward(k) ? c.comp(v, d) == c.comp(e, w) : c.comp(w, d) == c.comp(e, v);
        if (!ok) continue;
        l.target.arrows.push_back(e);
        l.columns.push_back(w);
        self(self, next);
        l.target.arrows.pop_back();
        l.columns.pop_back();
      }
    };
    if (is_backward(k)) {
      for (auto e : r.weqs_to(at)) try_column(e, c.source(e));
    } else {
      for (auto e : c.morphisms_from(at)) try_column(e, c.target(e));
    }
  };
  go(go, z.from);
  std::sort(out.begin(), out.end());
  return out;
}

HammockStage::HammockStage(std::shared_ptr<const RelCat> r, ObjectId x, ObjectId y, std::size_t n)
    : r_(std::move(r)), x_(x), y_(y), n_(n) {
  if (n % 2 == 0) throw std::invalid_argument("hammock stages must be odd");
  if (!r_->cat().has_object(x) || !r_->cat().has_object(y)) {
    throw std::invalid_argument("unknown endpoint object");
  }
}

bool HammockStage::same_as(const HammockStage& other) const {
  return &r_->cat() == &other.r_->cat() && x_ == other.x_ && y_ == other.y_ && n_ == other.n_;
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace

void HammockStage::ensure_enumerated() const {
  std::call_once(once_, [this] {
    objects_ = enumerate_zigzags(*r_, x_, y_, n_);
    trie_leaf_.push_back(npos);
    trie_children_.emplace_back();
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      index_.emplace(objects_[i].arrows, i);
      std::size_t node = 0;
      for (auto d : objects_[i].arrows) {
        auto next = trie_child(node, d);
        if (next == npos) {
          next = trie_leaf_.size();
          trie_children_[node].emplace_back(d, next);
          trie_leaf_.push_back(npos);
          trie_children_.emplace_back();
        }
        node = next;
      }
      trie_leaf_[node] = i;
    }
  });
}

std::size_t HammockStage::trie_child(std::size_t node, MorphismId arrow) const {
  for (const auto& [a, child] : trie_children_[node]) {
    if (a == arrow) return child;
  }
  return npos;
}

void HammockStage::for_each_ladder(std::size_t i, const LadderVisitor& visit) const {
  ensure_enumerated();
  const FinCat& c = base();
  const auto& z = objects_.at(i);
  auto top = nodes(c, z);
  std::vector<MorphismId> columns{c.identity(x_)};
  columns.reserve(n_ + 1);
  auto id_y = c.identity(y_);
  auto go = [&](auto&& self, ObjectId at, std::size_t node) -> void {
    auto k = columns.size() - 1;
    if (k == n_) {
      if (columns.back() == id_y && trie_leaf_[node] != npos) visit(trie_leaf_[node], columns);
      return;
    }
    auto d = z.arrows[k];
    auto v = columns[k];
    auto try_arrow = [&](MorphismId e, ObjectId next) {
      auto child = trie_child(node, e);
      if (child == npos) return;
      for (auto w : c.hom(top[k + 1], next)) {
        bool ok = is_backward(k) ? c.comp(v, d) == c.comp(e, w) : c.comp(w, d) == c.comp(e, v);
        if (!ok) continue;
        columns.push_back(w);
        self(self, next, child);
        columns.pop_back();
      }
    };
    if (is_backward(k)) {
      for (auto e : r_->weqs_to(at)) try_arrow(e, c.source(e));
    } else {
      for (auto e : c.morphisms_from(at)) try_arrow(e, c.target(e));
    }
  };
  go(go, x_, 0);
}

std::vector<std::size_t> HammockStage::ladder_targets(std::size_t i) const {
  ensure_enumerated();
  const FinCat& c = base();
  const auto& z = objects_.at(i);
  auto top = nodes(c, z);
  std::vector<std::size_t> out;
  // Branch on bottom arrows only, tracking every column that fits so far.
  auto go = [&](auto&& self, std::size_t k, ObjectId at, std::size_t node,
                const std::vector<MorphismId>& possible) -> void {
    if (k == n_) {
      bool closes = std::find(possible.begin(), possible.end(), c.identity(y_)) != possible.end();
      if (closes && trie_leaf_[node] != npos) out.push_back(trie_leaf_[node]);
      return;
    }
    auto d = z.arrows[k];
    auto try_arrow = [&](MorphismId e, ObjectId next) {
      auto child = trie_child(node, e);
      if (child == npos) return;
      std::vector<MorphismId> fits;
      for (auto w : c.hom(top[k + 1], next)) {
        for (auto v : possible) {
          bool ok = is_backward(k) ? c.comp(v, d) == c.comp(e, w) : c.comp(w, d) == c.comp(e, v);
          if (ok) {
            fits.push_back(w);
            break;
          }
        }
      }
      if (!fits.empty()) self(self, k + 1, next, child, fits);
    };
    if (is_backward(k)) {
      for (auto e : r_->weqs_to(at)) try_arrow(e, c.source(e));
    } else {
      for (auto e : c.morphisms_from(at)) try_arrow(e, c.target(e));
    }
  };
  go(go, 0, x_, 0, {c.identity(x_)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<ZigZag>& HammockStage::objects() const {
  ensure_enumerated();
  return objects_;
}

std::vector<Ladder> HammockStage::hom(const ZigZag& a, const ZigZag& b) const {
  auto all = morphisms_from(a);
  std::erase_if(all, [&](const Ladder& l) { return l.target != b; });
  return all;
}

std::optional<std::size_t> HammockStage::find(const ZigZag& z) const {
  ensure_enumerated();
  if (z.from != x_ || z.to != y_) return std::nullopt;
  auto it = index_.find(z.arrows);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t HammockStage::index_of(const ZigZag& z) const {
  auto i = find(z);
  if (!i) throw std::out_of_range("zig-zag is not an object of this stage: " + describe(z));
  return *i;
}

bool HammockStage::has_object(const ZigZag& z) const {
  return z.from == x_ && z.to == y_ && z.stage() == n_ && !check_zigzag(*r_, z);
}

bool HammockStage::has_morphism(const Ladder& l) const {
  return has_object(l.source) && has_object(l.target) && !check_ladder(*r_, l);
}

StagePtr make_stage(std::shared_ptr<const RelCat> r, ObjectId x, ObjectId y, std::size_t n) {
  return std::make_shared<const HammockStage>(std::move(r), x, y, n);
}

FinCat build_stage_category(const HammockStage& s, std::size_t max_morphisms) {
  const FinCat& c = s.base();
  RawCategory raw;
  raw.name = "L" + std::to_string(s.stage()) + "(" + c.object_name(s.from()) + "," + c.object_name(s.to()) + ")";
  std::vector<std::vector<Ladder>> out(s.objects().size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < s.objects().size(); ++i) {
    out[i] = s.morphisms_from(s.objects()[i]);
    total += out[i].size();
    if (total > max_morphisms) throw std::length_error("stage category too large to tabulate");
  }
  auto zname = [&](const ZigZag& z) { return to_string(c, z); };
  auto lname = [&](const Ladder& l) { return to_string(c, l); };
  for (const auto& z : s.objects()) raw.objects.push_back(zname(z));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& l : out[i]) {
      raw.morphisms.push_back({lname(l), zname(l.source), zname(l.target)});
      if (l.source == l.target && l == identity_ladder(c, l.source)) raw.identities[zname(l.source)] = lname(l);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& f : out[i]) {
      for (const auto& g : out[s.index_of(f.target)]) {
        raw.compositions.push_back({lname(g), lname(f), lname(*compose(c, g, f))});
      }
    }
  }
  return FinCat::validate(raw);
}

ZigZag stage_inclusion(const FinCat& c, const ZigZag& z, std::size_t i) {
  if (i > z.stage()) throw std::out_of_range("inclusion position out of range");
  auto at = nodes(c, z)[i];
  ZigZag out{z.from, z.to, {}};
  out.arrows.reserve(z.stage() + 2);
  out.arrows.insert(out.arrows.end(), z.arrows.begin(), z.arrows.begin() + static_cast<std::ptrdiff_t>(i));
  out.arrows.push_back(c.identity(at));
  out.arrows.push_back(c.identity(at));
  out.arrows.insert(out.arrows.end(), z.arrows.begin() + static_cast<std::ptrdiff_t>(i), z.arrows.end());
  return out;
}

Ladder stage_inclusion(const FinCat& c, const Ladder& l, std::size_t i) {
  Ladder out{stage_inclusion(c, l.source, i), stage_inclusion(c, l.target, i), {}};
  out.columns.reserve(l.columns.size() + 2);
  out.columns.insert(out.columns.end(), l.columns.begin(), l.columns.begin() + static_cast<std::ptrdiff_t>(i + 1));
  out.columns.push_back(l.columns[i]);
  out.columns.push_back(l.columns[i]);
  out.columns.insert(out.columns.end(), l.columns.begin() + static_cast<std::ptrdiff_t>(i + 1), l.columns.end());
  return out;
}

ZigZag concatenate(const FinCat& c, const ZigZag& z1, const ZigZag& z2) {
  if (z1.to != z2.from) throw std::invalid_argument("zig-zags do not share the middle endpoint");
  ZigZag out{z1.from, z2.to, {}};
  out.arrows.reserve(z1.stage() + z2.stage() - 1);
  out.arrows.insert(out.arrows.end(), z1.arrows.begin(), z1.arrows.end() - 1);
  out.arrows.push_back(c.comp(z1.arrows.back(), z2.arrows.front()));
  out.arrows.insert(out.arrows.end(), z2.arrows.begin() + 1, z2.arrows.end());
  return out;
}

ZigZag unit_zigzag(const FinCat& c, ObjectId y) { return ZigZag{y, y, {c.identity(y)}}; }

bool ColumnSource::operator==(const ColumnSource& o) const {
  if (kind != o.kind || column != o.column) return false;
  if (kind != Kind::mapped) return true;
  return functor == o.functor ||
         (functor->source == o.functor->source && functor->target == o.functor->target &&
          functor->object_map == o.functor->object_map && functor->morphism_map == o.functor->morphism_map);
}

std::optional<ColumnMap> compose_annotations(const std::optional<ColumnMap>& g, const std::optional<ColumnMap>& f) {
  if (!g || !f) return std::nullopt;
  ColumnMap out;
  out.reserve(g->size());
  for (const auto& gc : *g) {
    if (gc.kind == ColumnSource::Kind::identity) {
      out.push_back(gc);
      continue;
    }
    if (gc.column >= f->size()) return std::nullopt;
    auto fc = (*f)[gc.column];
    if (gc.kind == ColumnSource::Kind::mapped && fc.kind == ColumnSource::Kind::copy) {
      fc = {ColumnSource::Kind::mapped, fc.column, gc.functor};
    } else if (gc.kind == ColumnSource::Kind::mapped && fc.kind == ColumnSource::Kind::mapped) {
      fc.functor = std::make_shared<const FunctorData>(compose(*gc.functor, *fc.functor));
    }
    out.push_back(std::move(fc));
  }
  return out;
}

std::optional<ColumnMap> identity_annotation(const HammockStage& s) {
  ColumnMap out;
  for (std::size_t k = 0; k <= s.stage(); ++k) out.push_back({ColumnSource::Kind::copy, k, nullptr});
  return out;
}

void apply_columns(const ColumnMap& map, std::span<const MorphismId> columns, std::span<const ObjectId> image_nodes,
                   const FinCat& target, std::vector<MorphismId>& out) {
  out.clear();
  for (std::size_t j = 0; j < map.size(); ++j) {
    const auto& m = map[j];
    switch (m.kind) {
      case ColumnSource::Kind::copy:
        out.push_back(columns[m.column]);
        break;
      case ColumnSource::Kind::mapped:
        out.push_back((*m.functor)(columns[m.column]));
        break;
      case ColumnSource::Kind::identity:
        out.push_back(target.identity(image_nodes[j]));
        break;
    }
  }
}

StageFunctor column_functor(std::string name, StagePtr source, StagePtr target,
                            std::function<ZigZag(const ZigZag&)> on_object, ColumnMap columns) {
  const FinCat* tc = &target->base();
  auto keep = target;
  auto on_morphism = [tc, keep, on_object, columns](const Ladder& l) {
    Ladder out{on_object(l.source), on_object(l.target), {}};
    auto image_nodes = nodes(*tc, out.source);
    apply_columns(columns, l.columns, image_nodes, *tc, out.columns);
    return out;
  };
  return StageFunctor{std::move(name), std::move(source), std::move(target), std::move(on_object),
                      std::move(on_morphism), std::move(columns)};
}

namespace {

// Functor on stage categories defined by a prefix and suffix of arrows, with
// identity columns under them.
StageFunctor padding_functor(std::string name, const StagePtr& s, StagePtr target, std::vector<MorphismId> prefix,
                             std::vector<MorphismId> suffix) {
  auto on_object = [target, prefix, suffix](const ZigZag& z) {
    ZigZag out{target->from(), target->to(), prefix};
    out.arrows.insert(out.arrows.end(), z.arrows.begin(), z.arrows.end());
    out.arrows.insert(out.arrows.end(), suffix.begin(), suffix.end());
    return out;
  };
  ColumnMap columns(prefix.size());
  for (std::size_t k = 0; k <= s->stage(); ++k) columns.push_back({ColumnSource::Kind::copy, k, nullptr});
  columns.resize(columns.size() + suffix.size());
  return column_functor(std::move(name), s, std::move(target), on_object, std::move(columns));
}

}  // namespace

StageFunctor inclusion_functor(const StagePtr& s, std::size_t i) {
  if (i > s->stage()) throw std::out_of_range("inclusion position out of range");
  auto target = make_stage(s->relcat_ptr(), s->from(), s->to(), s->stage() + 2);
  const FinCat* c = &s->base();
  auto keep = s;
  ColumnMap columns;
  for (std::size_t j = 0; j <= s->stage() + 2; ++j) {
    std::size_t k = j <= i ? j : (j <= i + 2 ? i : j - 2);
    columns.push_back({ColumnSource::Kind::copy, k, nullptr});
  }
  return column_functor("incl" + std::to_string(i), s, target,
                        [c, i, keep](const ZigZag& z) { return stage_inclusion(*c, z, i); }, std::move(columns));
}

StageFunctor induced_precompose(const StagePtr& s, MorphismId f) {
  const FinCat& c = s->base();
  if (c.target(f) != s->from()) throw std::invalid_argument("f must end at the source endpoint");
  auto a = c.source(f);
  auto target = make_stage(s->relcat_ptr(), a, s->to(), s->stage() + 2);
  return padding_functor(c.morphism_name(f) + "^*", s, target, {c.identity(a), f}, {});
}

StageFunctor induced_postcompose(const StagePtr& s, MorphismId f) {
  const FinCat& c = s->base();
  if (c.source(f) != s->to()) throw std::invalid_argument("f must start at the target endpoint");
  auto b = c.target(f);
  auto target = make_stage(s->relcat_ptr(), s->from(), b, s->stage() + 2);
  return padding_functor(c.morphism_name(f) + "_*", s, target, {}, {f, c.identity(b)});
}

StageFunctor weq_reverse(const StagePtr& s, MorphismId f) {
  const FinCat& c = s->base();
  if (!s->relcat().is_weq(f)) throw std::invalid_argument(c.morphism_name(f) + " is not a weak equivalence");
  if (c.source(f) != s->from()) throw std::invalid_argument("f must start at the source endpoint");
  auto a = c.source(f);
  auto b = c.target(f);
  auto target = make_stage(s->relcat_ptr(), b, s->to(), s->stage() + 2);
  return padding_functor(c.morphism_name(f) + "^-1", s, target, {f, c.identity(a)}, {});
}

StageFunctor levelwise(const StagePtr& s, const FunctorData& f, std::shared_ptr<const RelCat> target) {
  if (f.source.get() != &s->base() || f.target.get() != &target->cat()) {
    throw std::invalid_argument("functor does not match the stage categories");
  }
  for (auto w : s->relcat().weqs()) {
    if (!target->is_weq(f(w))) {
      throw std::invalid_argument(f.name + " does not preserve weak equivalences");
    }
  }
  auto out = make_stage(target, f(s->from()), f(s->to()), s->stage());
  auto on_object = [f, out](const ZigZag& z) {
    ZigZag img{out->from(), out->to(), {}};
    img.arrows.reserve(z.arrows.size());
    for (auto d : z.arrows) img.arrows.push_back(f(d));
    return img;
  };
  auto data = std::make_shared<const FunctorData>(f);
  ColumnMap columns;
  for (std::size_t k = 0; k <= s->stage(); ++k) columns.push_back({ColumnSource::Kind::mapped, k, data});
  return column_functor("L" + f.name, s, out, on_object, std::move(columns));
}

Components pi0_stage(const HammockStage& s) {
  const auto& objs = s.objects();
  UnionFind uf(objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (auto j : s.ladder_targets(i)) uf.unite(i, j);
  }
  return uf.components();
}

std::string_view to_string(TowerVerdict v) { return v == TowerVerdict::stable ? "STABLE" : "INCONCLUSIVE"; }

TowerReport pi0_tower(std::shared_ptr<const RelCat> r, ObjectId x, ObjectId y, std::size_t n_max,
                      bool assume_model) {
  if (n_max % 2 == 0) throw std::invalid_argument("maximal stage must be odd");
  TowerReport report;
  report.assume_model = assume_model;
  std::vector<StagePtr> stages;
  std::vector<Components> comps;
  for (std::size_t n = 1; n <= n_max; n += 2) {
    stages.push_back(make_stage(r, x, y, n));
    comps.push_back(pi0_stage(*stages.back()));
    report.levels.push_back({n, stages.back()->objects().size(), comps.back().size(), {}, false});
  }
  for (std::size_t k = 0; k + 1 < stages.size(); ++k) {
    auto& level = report.levels[k];
    const FinCat& c = r->cat();
    level.map_to_next.assign(comps[k].size(), 0);
    for (std::size_t cls = 0; cls < comps[k].size(); ++cls) {
      const auto& z = stages[k]->objects()[comps[k].classes[cls].front()];
      level.map_to_next[cls] = comps[k + 1].class_of[stages[k + 1]->index_of(stage_inclusion(c, z, 1))];
    }
    auto image = level.map_to_next;
    std::sort(image.begin(), image.end());
    bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
    level.bijective_to_next = injective && image.size() == comps[k + 1].size();
  }
  const auto steps = stages.size() - 1;
  if (steps >= 2 && report.levels[steps - 1].bijective_to_next && report.levels[steps - 2].bijective_to_next) {
    report.verdict = TowerVerdict::stable;
    report.final_components = report.levels.back().components;
  }
  if (assume_model && report.levels.size() >= 2) report.final_components = report.levels[1].components;
  return report;
}

}  // namespace hammock
