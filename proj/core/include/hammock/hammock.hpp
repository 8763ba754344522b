#pragma once

// Stage categories of the hammock localization. An object of L_n(X,Y) is a
// zig-zag X = C_0 - C_1 - ... - C_n = Y of odd length n whose even-indexed
// arrows point backwards and are weak equivalences:
//
//   X <-d0- C_1 -d1-> C_2 <-d2- C_3 ... C_{n-1} <-d_{n-1}- Y
//
// A morphism is a ladder of vertical maps v_0 = id_X, v_1, ..., v_n = id_Y
// making every square commute.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hammock/category.hpp"
#include "hammock/fincat.hpp"
#include "hammock/relcat.hpp"

namespace hammock {

constexpr bool is_backward(std::size_t k) { return k % 2 == 0; }

struct ZigZag {
  ObjectId from;
  ObjectId to;
  std::vector<MorphismId> arrows;  // d_0 ... d_{n-1}

  std::size_t stage() const { return arrows.size(); }
  auto operator<=>(const ZigZag&) const = default;
};

/// The objects C_0 ... C_n; assumes the arrows chain.
std::vector<ObjectId> nodes(const FinCat& c, const ZigZag& z);
Check check_zigzag(const RelCat& r, const ZigZag& z);
std::string to_string(const FinCat& c, const ZigZag& z);

struct Ladder {
  ZigZag source;
  ZigZag target;
  std::vector<MorphismId> columns;  // v_0 ... v_n

  auto operator<=>(const Ladder&) const = default;
};

/// Re-verifies both zig-zags, the fixed endpoint columns and every square.
/// Failures name the column index.
Check check_ladder(const RelCat& r, const Ladder& l);
Ladder identity_ladder(const FinCat& c, const ZigZag& z);
/// Componentwise g ∘ f, or nullopt when f.target != g.source.
std::optional<Ladder> compose(const FinCat& c, const Ladder& g, const Ladder& f);
std::string to_string(const FinCat& c, const Ladder& l);

/// All zig-zags of stage n from X to Y, sorted. Throws std::invalid_argument
/// for even n.
std::vector<ZigZag> enumerate_zigzags(const RelCat& r, ObjectId x, ObjectId y, std::size_t n);
/// All ladders out of z, sorted.
std::vector<Ladder> ladders_from(const RelCat& r, const ZigZag& z);

/// L_n(X,Y) as a category over value-typed zig-zags and ladders. Objects are
/// enumerated on first use.
class HammockStage;

/// Ladder visitor: index of the target zig-zag in the stage, and the columns.
using LadderVisitor = std::function<void(std::size_t, std::span<const MorphismId>)>;

class HammockStage {
 public:
  using Object = ZigZag;
  using Morphism = Ladder;

  HammockStage(std::shared_ptr<const RelCat> r, ObjectId x, ObjectId y, std::size_t n);

  const RelCat& relcat() const { return *r_; }
  const std::shared_ptr<const RelCat>& relcat_ptr() const { return r_; }
  const FinCat& base() const { return r_->cat(); }
  ObjectId from() const { return x_; }
  ObjectId to() const { return y_; }
  std::size_t stage() const { return n_; }
  /// Same underlying category, endpoints and stage.
  bool same_as(const HammockStage& other) const;

  const std::vector<ZigZag>& objects() const;
  std::vector<Ladder> morphisms_from(const ZigZag& z) const { return ladders_from(*r_, z); }
  std::vector<Ladder> hom(const ZigZag& a, const ZigZag& b) const;
  std::size_t index_of(const ZigZag& z) const;
  std::optional<std::size_t> find(const ZigZag& z) const;

  const ZigZag& source(const Ladder& l) const { return l.source; }
  const ZigZag& target(const Ladder& l) const { return l.target; }
  Ladder identity(const ZigZag& z) const { return identity_ladder(base(), z); }
  std::optional<Ladder> compose(const Ladder& g, const Ladder& f) const {
    return hammock::compose(base(), g, f);
  }
  bool has_object(const ZigZag& z) const;
  bool has_morphism(const Ladder& l) const;
  std::string describe(const ZigZag& z) const { return to_string(base(), z); }
  std::string describe(const Ladder& l) const { return to_string(base(), l); }

  /// Calls visit once per ladder out of objects()[i], in no particular
  /// order, without materializing ladders.
  void for_each_ladder(std::size_t i, const LadderVisitor& visit) const;
  /// Indices of the zig-zags reachable from objects()[i] by one ladder,
  /// sorted.
  std::vector<std::size_t> ladder_targets(std::size_t i) const;

 private:
  void ensure_enumerated() const;
  // Prefix tree over the arrows of all zig-zags; leaves carry object indices.
  std::size_t trie_child(std::size_t node, MorphismId arrow) const;

  std::shared_ptr<const RelCat> r_;
  ObjectId x_;
  ObjectId y_;
  std::size_t n_;
  mutable std::once_flag once_;
  mutable std::vector<ZigZag> objects_;
  mutable std::map<std::vector<MorphismId>, std::size_t> index_;
  mutable std::vector<std::vector<std::pair<MorphismId, std::size_t>>> trie_children_;
  mutable std::vector<std::size_t> trie_leaf_;  // node -> object index or npos
};

/// Ladder action of a stage functor, one entry per image column: a source
/// column, its image under a functor of base categories, or the identity on
/// the image zig-zag's node at that column.
struct ColumnSource {
  enum class Kind { copy, mapped, identity };
  Kind kind = Kind::identity;
  std::size_t column = 0;
  std::shared_ptr<const FunctorData> functor;  // mapped only

  bool operator==(const ColumnSource& o) const;
};
using ColumnMap = std::vector<ColumnSource>;

template <>
struct FunctorAnnotation<HammockStage, HammockStage> {
  using type = std::optional<ColumnMap>;
};

/// g's column map after f's; nullopt if either is missing.
std::optional<ColumnMap> compose_annotations(const std::optional<ColumnMap>& g, const std::optional<ColumnMap>& f);
std::optional<ColumnMap> identity_annotation(const HammockStage& s);

using StagePtr = std::shared_ptr<const HammockStage>;
using StageFunctor = Functor<HammockStage, HammockStage>;
using StageNatTrans = NatTrans<HammockStage, HammockStage>;

StagePtr make_stage(std::shared_ptr<const RelCat> r, ObjectId x, ObjectId y, std::size_t n);

/// A stage functor whose ladder action is given by `columns`; the image of
/// a ladder runs between the images of its ends.
StageFunctor column_functor(std::string name, StagePtr source, StagePtr target,
                            std::function<ZigZag(const ZigZag&)> on_object, ColumnMap columns);
/// Image columns of a ladder with the given columns under a column map;
/// `image_nodes` are the nodes of the image of its source.
void apply_columns(const ColumnMap& map, std::span<const MorphismId> columns, std::span<const ObjectId> image_nodes,
                   const FinCat& target, std::vector<MorphismId>& out);

/// The stage category as a validated table category (zig-zags and ladders
/// named by their arrows and columns). Throws std::length_error above
/// `max_morphisms` ladders.
FinCat build_stage_category(const HammockStage& s, std::size_t max_morphisms = 4000);

/// Two identity arrows inserted at C_i, 0 <= i <= n. Throws std::out_of_range.
ZigZag stage_inclusion(const FinCat& c, const ZigZag& z, std::size_t i);
Ladder stage_inclusion(const FinCat& c, const Ladder& l, std::size_t i);
/// Splices z1: X -> Y and z2: Y -> Z along d_{n-1} ∘ d'_0; stage n + m - 1.
/// Throws std::invalid_argument on endpoint mismatch.
ZigZag concatenate(const FinCat& c, const ZigZag& z1, const ZigZag& z2);
/// The stage-1 zig-zag (id_Y), the unit for concatenation.
ZigZag unit_zigzag(const FinCat& c, ObjectId y);

/// Inclusion functor L_n(X,Y) -> L_{n+2}(X,Y) at position i.
StageFunctor inclusion_functor(const StagePtr& s, std::size_t i = 1);
/// f^*: L_n(B,Y) -> L_{n+2}(A,Y), z |-> (A <-id- A -f-> B) z.
StageFunctor induced_precompose(const StagePtr& s, MorphismId f);
/// f_*: L_n(X,A) -> L_{n+2}(X,B), z |-> z (A -f-> B <-id- B).
StageFunctor induced_postcompose(const StagePtr& s, MorphismId f);
/// For f: A -> B in W: L_n(A,Y) -> L_{n+2}(B,Y), z |-> (B <-f- A -id-> A) z.
StageFunctor weq_reverse(const StagePtr& s, MorphismId f);
/// L_n F: L_n^C(X,Y) -> L_n^D(FX,FY) for F preserving weak equivalences.
/// Throws std::invalid_argument otherwise.
StageFunctor levelwise(const StagePtr& s, const FunctorData& f, std::shared_ptr<const RelCat> target);

/// Connected components of the stage category, indexed like objects().
Components pi0_stage(const HammockStage& s);

struct TowerLevel {
  std::size_t stage = 0;
  std::size_t zigzags = 0;
  std::size_t components = 0;
  /// Component map to the next stage along the position-1 inclusion (empty
  /// at the last level).
  std::vector<std::size_t> map_to_next;
  bool bijective_to_next = false;
};

enum class TowerVerdict { stable, inconclusive };
std::string_view to_string(TowerVerdict v);

struct TowerReport {
  std::vector<TowerLevel> levels;
  TowerVerdict verdict = TowerVerdict::inconclusive;
  bool assume_model = false;
  /// Set when STABLE (last level) or when assume_model (stage 3).
  std::optional<std::size_t> final_components;
};

/// STABLE iff there are at least two inclusion steps and the last two
/// component maps are bijections.
TowerReport pi0_tower(std::shared_ptr<const RelCat> r, ObjectId x, ObjectId y, std::size_t n_max,
                      bool assume_model = false);

}  // namespace hammock
