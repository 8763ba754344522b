#pragma once

// Generic finite-category machinery shared by table categories (FinCat) and
// hammock stage categories. A category type exposes value-typed objects and
// morphisms; anything that can also enumerate itself can be checked
// exhaustively.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "hammock/common.hpp"

namespace hammock {

template <class C>
concept CategoryLike = requires(const C& c, const typename C::Object& o,
                                const typename C::Morphism& m) {
  { c.source(m) } -> std::convertible_to<typename C::Object>;
  { c.target(m) } -> std::convertible_to<typename C::Object>;
  { c.identity(o) } -> std::convertible_to<typename C::Morphism>;
  { c.compose(m, m) } -> std::convertible_to<std::optional<typename C::Morphism>>;
  { c.has_object(o) } -> std::same_as<bool>;
  { c.has_morphism(m) } -> std::same_as<bool>;
  { c.describe(o) } -> std::convertible_to<std::string>;
  { c.describe(m) } -> std::convertible_to<std::string>;
};

template <class C>
concept EnumerableCategory =
    CategoryLike<C> && requires(const C& c, const typename C::Object& o) {
      { c.objects() } -> std::convertible_to<const std::vector<typename C::Object>&>;
      { c.morphisms_from(o) };
      { c.index_of(o) } -> std::convertible_to<std::size_t>;
    };

/// Extra description a functor between C and D may carry (for instance an
/// explicit action on morphisms that verifiers can exploit). None by default.
template <class C, class D>
struct FunctorAnnotation {
  using type = std::monostate;
};
template <class C, class D>
using annotation_t = typename FunctorAnnotation<C, D>::type;

template <CategoryLike C, CategoryLike D>
struct Functor {
  using SourceObject = typename C::Object;
  using SourceMorphism = typename C::Morphism;
  using TargetObject = typename D::Object;
  using TargetMorphism = typename D::Morphism;

  std::string name;
  std::shared_ptr<const C> source;
  std::shared_ptr<const D> target;
  std::function<TargetObject(const SourceObject&)> on_object;
  std::function<TargetMorphism(const SourceMorphism&)> on_morphism;
  annotation_t<C, D> annotation{};

  TargetObject operator()(const SourceObject& o) const { return on_object(o); }
  TargetMorphism operator()(const SourceMorphism& m) const { return on_morphism(m); }
};

template <CategoryLike C, CategoryLike D>
struct NatTrans {
  std::string name;
  Functor<C, D> from;
  Functor<C, D> to;
  std::function<typename D::Morphism(const typename C::Object&)> component;

  typename D::Morphism operator()(const typename C::Object& o) const { return component(o); }
};

template <class C>
std::monostate identity_annotation(const C&) {
  return {};
}

template <CategoryLike C>
Functor<C, C> identity_functor(std::shared_ptr<const C> c, std::string name = "Id") {
  using O = typename C::Object;
  using M = typename C::Morphism;
  return Functor<C, C>{std::move(name), c, c, [](const O& o) { return o; },
                       [](const M& m) { return m; }, identity_annotation(*c)};
}

/// g ∘ f
template <CategoryLike C, CategoryLike D, CategoryLike E>
Functor<C, E> compose(const Functor<D, E>& g, const Functor<C, D>& f) {
  annotation_t<C, E> annotation{};
  if constexpr (!std::is_same_v<annotation_t<C, E>, std::monostate>) {
    annotation = compose_annotations(g.annotation, f.annotation);
  }
  return Functor<C, E>{
      g.name + "." + f.name, f.source, g.target,
      [g, f](const typename C::Object& o) { return g.on_object(f.on_object(o)); },
      [g, f](const typename C::Morphism& m) { return g.on_morphism(f.on_morphism(m)); }, std::move(annotation)};
}

template <CategoryLike C, CategoryLike D>
NatTrans<C, D> identity_transformation(const Functor<C, D>& f) {
  auto target = f.target;
  return NatTrans<C, D>{"id_" + f.name, f, f, [f, target](const typename C::Object& o) {
                          return target->identity(f.on_object(o));
                        }};
}

struct FunctorCheckOptions {
  /// Composition preservation is quadratic in hom sizes; everything else is
  /// linear in the number of morphisms.
  bool composition = true;
};

/// Exhaustive functor-law check over an enumerable source category.
template <EnumerableCategory C, CategoryLike D>
Check check_functor(const Functor<C, D>& f, FunctorCheckOptions options = {}) {
  const C& src = *f.source;
  const D& tgt = *f.target;
  for (const auto& o : src.objects()) {
    auto fo = f(o);
    if (!tgt.has_object(fo)) {
      return fail("functor-object", f.name + " sends an object outside the target",
                  {src.describe(o), tgt.describe(fo)});
    }
    auto fid = f(src.identity(o));
    if (!(fid == tgt.identity(fo))) {
      return fail("functor-identity", f.name + " does not preserve an identity",
                  {src.describe(o), tgt.describe(fid)});
    }
  }
  for (const auto& o : src.objects()) {
    for (const auto& m : src.morphisms_from(o)) {
      auto fm = f(m);
      if (!tgt.has_morphism(fm)) {
        return fail("functor-morphism", f.name + " sends a morphism outside the target",
                    {src.describe(m), tgt.describe(fm)});
      }
      if (!(tgt.source(fm) == f(src.source(m))) || !(tgt.target(fm) == f(src.target(m)))) {
        return fail("functor-endpoints", f.name + " does not preserve source/target",
                    {src.describe(m), tgt.describe(fm)});
      }
    }
  }
  if (!options.composition) return pass();
  for (const auto& o : src.objects()) {
    for (const auto& m1 : src.morphisms_from(o)) {
      auto fm1 = f(m1);
      for (const auto& m2 : src.morphisms_from(src.target(m1))) {
        auto composite = src.compose(m2, m1);
        if (!composite) {
          return fail("source-composition", "source category failed to compose a composable pair",
                      {src.describe(m2), src.describe(m1)});
        }
        auto lhs = f(*composite);
        auto rhs = tgt.compose(f(m2), fm1);
        if (!rhs || !(lhs == *rhs)) {
          return fail("functor-composition", f.name + " does not preserve composition",
                      {src.describe(m2), src.describe(m1)});
        }
      }
    }
  }
  return pass();
}

/// Exhaustive naturality check: every component is well-typed and every
/// square G(m) ∘ η_a = η_b ∘ F(m) commutes.
template <EnumerableCategory C, CategoryLike D>
Check check_nat_trans(const NatTrans<C, D>& eta) {
  const C& src = *eta.from.source;
  const D& tgt = *eta.from.target;
  for (const auto& o : src.objects()) {
    auto c = eta(o);
    if (!tgt.has_morphism(c)) {
      return fail("component", eta.name + " has a component outside the target",
                  {src.describe(o), tgt.describe(c)});
    }
    if (!(tgt.source(c) == eta.from(o)) || !(tgt.target(c) == eta.to(o))) {
      return fail("component-type", eta.name + " has a component with wrong source/target",
                  {src.describe(o), tgt.describe(c)});
    }
  }
  for (const auto& o : src.objects()) {
    for (const auto& m : src.morphisms_from(o)) {
      auto lhs = tgt.compose(eta.to(m), eta(src.source(m)));
      auto rhs = tgt.compose(eta(src.target(m)), eta.from(m));
      if (!lhs || !rhs || !(*lhs == *rhs)) {
        return fail("naturality", eta.name + " has a non-commuting naturality square",
                    {src.describe(m)});
      }
    }
  }
  return pass();
}

/// Extensional equality of two functors with the same enumerable source.
template <EnumerableCategory C, CategoryLike D>
Check functors_equal(const Functor<C, D>& a, const Functor<C, D>& b) {
  const C& src = *a.source;
  for (const auto& o : src.objects()) {
    if (!(a(o) == b(o))) {
      return fail("functor-equality", a.name + " and " + b.name + " differ on an object",
                  {src.describe(o), a.target->describe(a(o)), b.target->describe(b(o))});
    }
  }
  for (const auto& o : src.objects()) {
    for (const auto& m : src.morphisms_from(o)) {
      if (!(a(m) == b(m))) {
        return fail("functor-equality", a.name + " and " + b.name + " differ on a morphism",
                    {src.describe(m)});
      }
    }
  }
  return pass();
}

/// Partition of objects (by index) into connected components of the
/// "there exists a morphism between" relation.
struct Components {
  std::vector<std::vector<std::size_t>> classes;  // each sorted, ordered by least member
  std::vector<std::size_t> class_of;              // object index -> class index

  std::size_t size() const { return classes.size(); }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }
  std::size_t size() const { return parent_.size(); }

  /// Canonical partition: classes ordered by their least element.
  Components components();

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

template <EnumerableCategory C>
Components connected_components(const C& c) {
  const auto& objs = c.objects();
  UnionFind uf(objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (const auto& m : c.morphisms_from(objs[i])) {
      uf.unite(i, c.index_of(c.target(m)));
    }
  }
  return uf.components();
}

}  // namespace hammock
