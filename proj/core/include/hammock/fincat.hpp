#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hammock/category.hpp"
#include "hammock/common.hpp"

namespace hammock {

struct RawMorphism {
  std::string name;
  std::string source;
  std::string target;
};

/// (g, f, h) records g ∘ f = h.
struct RawComposite {
  std::string second;
  std::string first;
  std::string result;
};

/// Unvalidated category description: objects, morphisms, identities and a
/// composition table. Validation turns it into a FinCat.
struct RawCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;
  std::map<std::string, std::string> identities;  // object -> identity morphism
  std::vector<RawComposite> compositions;
};

/// A finite category given by total enumeration. Objects and morphisms are
/// indexed in lexicographic order of their identifiers, so every iteration
/// below is deterministic.
class FinCat {
 public:
  using Object = ObjectId;
  using Morphism = MorphismId;

  /// Checks the raw description and throws ValidationError naming the first
  /// violated law (missing composite, identity law, associativity).
  static FinCat validate(const RawCategory& raw);

  const std::string& name() const { return name_; }
  std::size_t object_count() const { return object_names_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  const std::vector<ObjectId>& objects() const { return object_ids_; }
  const std::vector<MorphismId>& morphisms() const { return morphism_ids_; }

  ObjectId source(MorphismId m) const { return morphisms_[m.value].source; }
  ObjectId target(MorphismId m) const { return morphisms_[m.value].target; }
  MorphismId identity(ObjectId o) const { return identities_[o.value]; }
  bool is_identity(MorphismId m) const { return identity(source(m)) == m; }

  /// g ∘ f, or nullopt when target(f) != source(g).
  std::optional<MorphismId> compose(MorphismId g, MorphismId f) const;
  /// g ∘ f for a pair known to be composable; for any other pair the result
  /// is the sentinel no_morphism().
  MorphismId comp(MorphismId g, MorphismId f) const {
    return MorphismId{comp_[g.value * morphisms_.size() + f.value]};
  }
  static constexpr MorphismId no_morphism() { return MorphismId{kNone}; }

  std::span<const MorphismId> hom(ObjectId a, ObjectId b) const { return hom_[a.value * object_names_.size() + b.value]; }
  std::span<const MorphismId> morphisms_from(ObjectId a) const { return from_[a.value]; }
  std::span<const MorphismId> morphisms_to(ObjectId b) const { return to_[b.value]; }

  const std::string& object_name(ObjectId o) const { return object_names_[o.value]; }
  const std::string& morphism_name(MorphismId m) const { return morphisms_[m.value].name; }
  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<MorphismId> find_morphism(std::string_view name) const;
  /// Lookup that throws std::out_of_range for unknown identifiers.
  ObjectId object(std::string_view name) const;
  MorphismId morphism(std::string_view name) const;

  bool has_object(ObjectId o) const { return o.value < object_names_.size(); }
  bool has_morphism(MorphismId m) const { return m.value < morphisms_.size(); }
  std::size_t index_of(ObjectId o) const { return o.value; }
  std::string describe(ObjectId o) const { return object_name(o); }
  std::string describe(MorphismId m) const;

  RawCategory to_raw() const;

 private:
  struct MorphismInfo {
    std::string name;
    ObjectId source;
    ObjectId target;
  };
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  std::string name_;
  std::vector<std::string> object_names_;
  std::vector<ObjectId> object_ids_;
  std::vector<MorphismInfo> morphisms_;
  std::vector<MorphismId> morphism_ids_;
  std::vector<MorphismId> identities_;
  std::vector<std::uint32_t> comp_;  // [g * M + f]
  std::vector<std::vector<MorphismId>> hom_;
  std::vector<std::vector<MorphismId>> from_;
  std::vector<std::vector<MorphismId>> to_;
  std::unordered_map<std::string, ObjectId> object_index_;
  std::unordered_map<std::string, MorphismId> morphism_index_;
};

/// Finite acyclic directed multigraph used to present a free category.
struct FreeGraph {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<RawMorphism> edges;
};

/// Free category on an acyclic graph: morphisms are paths, composition is
/// concatenation. Paths of length >= 2 are named by their edges in
/// composition order joined with '.', e.g. "g.f". Throws ValidationError
/// (law "cycle") naming a cycle if the graph is not acyclic.
FinCat free_acyclic(const FreeGraph& graph);

/// Functor between table categories, given by explicit object and morphism
/// maps.
struct FunctorData {
  std::string name;
  std::shared_ptr<const FinCat> source;
  std::shared_ptr<const FinCat> target;
  std::vector<ObjectId> object_map;
  std::vector<MorphismId> morphism_map;

  ObjectId operator()(ObjectId o) const { return object_map[o.value]; }
  MorphismId operator()(MorphismId m) const { return morphism_map[m.value]; }

  Functor<FinCat, FinCat> as_functor() const;
};

FunctorData identity_functor_data(std::shared_ptr<const FinCat> c, std::string name = "Id");
/// g ∘ f as table data.
FunctorData compose(const FunctorData& g, const FunctorData& f);

struct NatTransData {
  std::string name;
  FunctorData from;
  FunctorData to;
  std::vector<MorphismId> components;  // indexed by source object

  MorphismId operator()(ObjectId o) const { return components[o.value]; }
  NatTrans<FinCat, FinCat> as_nat_trans() const;
};

NatTransData identity_nat_trans_data(const FunctorData& f);

Check check_functor(const FunctorData& f);
Check check_nat_trans(const NatTransData& eta);
Components connected_components(const FinCat& c);

struct EquivalenceReport {
  bool equivalence = false;
  /// For each target object: (image source object, iso in target from F(source) to it).
  std::vector<std::pair<ObjectId, MorphismId>> witnesses;
  std::size_t hom_sets_checked = 0;
  std::optional<Violation> counterexample;
};

/// Decides essential surjectivity and full faithfulness exhaustively.
EquivalenceReport check_equivalence(const FunctorData& f);

/// Two-sided inverse of m, if any.
std::optional<MorphismId> inverse_of(const FinCat& c, MorphismId m);

}  // namespace hammock
