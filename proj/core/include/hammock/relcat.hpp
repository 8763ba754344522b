#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hammock/common.hpp"
#include "hammock/fincat.hpp"

namespace hammock {

/// A finite category with a distinguished class of weak equivalences that
/// contains every identity and is closed under composition.
class RelCat {
 public:
  /// Throws ValidationError ("weq-identity" or "weq-closure").
  static RelCat validate(std::shared_ptr<const FinCat> cat, const std::vector<MorphismId>& weq);

  const FinCat& cat() const { return *cat_; }
  const std::shared_ptr<const FinCat>& cat_ptr() const { return cat_; }
  bool is_weq(MorphismId m) const { return weq_[m.value]; }
  std::span<const MorphismId> weqs() const { return weq_list_; }
  std::span<const MorphismId> weqs_from(ObjectId o) const { return from_[o.value]; }
  std::span<const MorphismId> weqs_to(ObjectId o) const { return to_[o.value]; }

 private:
  std::shared_ptr<const FinCat> cat_;
  std::vector<bool> weq_;
  std::vector<MorphismId> weq_list_;
  std::vector<std::vector<MorphismId>> from_;
  std::vector<std::vector<MorphismId>> to_;
};

/// Smallest composition-closed class containing `seed` and all identities.
std::vector<MorphismId> weq_closure(const FinCat& cat, const std::vector<MorphismId>& seed);

/// Diagnostic: among f, g, g∘f, two in W forces the third.
Check check_two_out_of_three(const RelCat& r);

struct CylinderData {
  ObjectId base;
  ObjectId cylinder;
  MorphismId i0;
  MorphismId i1;
  MorphismId p;

  bool operator==(const CylinderData&) const = default;
};

/// Cyl(A) = A with i0 = i1 = p = id.
CylinderData degenerate_cylinder(const FinCat& c, ObjectId a);

struct LeftHomotopyData {
  CylinderData cylinder;
  MorphismId f;
  MorphismId g;
  MorphismId homotopy;  // H : Cyl(A) -> B with H∘i0 = f, H∘i1 = g

  bool operator==(const LeftHomotopyData&) const = default;
};

/// The homotopy f ≃ f carried by a degenerate cylinder.
LeftHomotopyData constant_homotopy(const FinCat& c, MorphismId f);

Check validate_cylinder(const RelCat& r, const CylinderData& c);
Check validate_left_homotopy(const RelCat& r, const LeftHomotopyData& h);

/// Marks an equality that holds on the nose.
struct Strict {
  bool operator==(const Strict&) const = default;
};
using HomotopyWitness = std::variant<Strict, LeftHomotopyData>;

/// Checks that `w` witnesses lhs ≃ rhs: STRICT needs lhs == rhs, a left
/// homotopy needs H∘i0 = lhs and H∘i1 = rhs.
Check validate_witness(const RelCat& r, const HomotopyWitness& w, MorphismId lhs, MorphismId rhs);

/// Turns a witness into explicit homotopy data (STRICT becomes the constant
/// homotopy on a degenerate cylinder).
LeftHomotopyData realize(const FinCat& c, const HomotopyWitness& w, MorphismId lhs);

struct MonadData {
  std::string name;
  FunctorData endofunctor;      // T
  NatTransData unit;            // η : Id ⇒ T
  NatTransData multiplication;  // μ : T∘T ⇒ T
};

Check validate_monad(const RelCat& r, const MonadData& m);

struct HoAlgebraData {
  std::string name;
  MonadData monad;
  ObjectId carrier;
  MorphismId action;            // a : TX -> X
  HomotopyWitness unit;         // a∘η_X ≃ id_X
  HomotopyWitness associativity;  // a∘μ_X ≃ a∘Ta
};

Check validate_hoalgebra(const RelCat& r, const HoAlgebraData& a);

struct IdempotentData {
  std::string name;
  FunctorData functor;        // L
  NatTransData coaugmentation;  // ℓ : Id ⇒ L
  /// Per object Z: witness for Lℓ_Z ≃ ℓ_{LZ} (a homotopy on a cylinder of LZ).
  std::map<ObjectId, HomotopyWitness> witnesses;
};

/// Witness for object Z, defaulting to STRICT when none was declared.
HomotopyWitness idempotent_witness(const IdempotentData& d, ObjectId z);

struct IdempotentReport {
  Verdict verdict = Verdict::pass;
  std::optional<Violation> failure;
  std::vector<std::string> notes;
};

/// Weak-equivalence conditions are checked exactly; agreement of Lℓ_X and
/// ℓ_{LX} in the localization is settled by strict equality, by a declared
/// homotopy, or by the bounded localization oracle (possibly UNKNOWN).
IdempotentReport validate_idempotent(const RelCat& r, const IdempotentData& d, std::size_t bound);

}  // namespace hammock
