#pragma once

// Explicit homotopy witnesses between induced maps of hammock stages:
// homotopic morphisms induce homotopic post/precomposition, a natural
// transformation induces a homotopy between the two induced composites,
// insertions of identities at different positions are homotopic, homotopy
// idempotent functors induce homotopy equivalences on mapping spaces, and
// mapping spaces into homotopy algebras are retracts.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hammock/hammock.hpp"
#include "hammock/homcert.hpp"
#include "hammock/oracle.hpp"
#include "hammock/relcat.hpp"

namespace hammock {

struct CheckResult {
  std::string label;
  Verdict verdict = Verdict::pass;
  std::string detail;
};

struct TheoremReport {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  void add(CheckResult c);
  /// First non-passing check, if any.
  const CheckResult* first_failure() const;
};

/// One certificate per odd stage 1, 3, ..., n_max. Consecutive stages are
/// related by the source inclusion at `source_position` and the target
/// inclusion at `target_position`.
struct StageWitnessFamily {
  std::string name;
  std::size_t source_position = 0;
  std::size_t target_position = 0;
  std::vector<HomotopyCertificate> certificates;
};

/// Verifies every certificate and every compatibility square: each functor
/// and each transformation component must commute strictly with the
/// inclusions, objectwise on all zig-zags of the smaller stage.
std::vector<CheckResult> verify_family(const StageWitnessFamily& family);
/// Verifies one stage certificate; failures carry stage and step.
CheckResult verify_stage_certificate(const HomotopyCertificate& cert, const std::string& label);

/// The word read off a zig-zag: backward arrows become formal inverses.
Word zigzag_word(const FinCat& c, const ZigZag& z);

// Homotopic morphisms. For a validated left homotopy H from f to g (A -> B):
// post version on L_n(X,A) -> L_{n+2}(X,B), certificate f_* => H~ <= g_*;
// pre version on L_n(B,Y) -> L_{n+2}(A,Y), certificate f^* => H~ <= g^*.
HomotopyCertificate thm31_certificate(const StagePtr& s, const LeftHomotopyData& h);
HomotopyCertificate thm31_pre_certificate(const StagePtr& s, const LeftHomotopyData& h);
/// Throws ValidationError if h is not a valid left homotopy.
StageWitnessFamily build_thm31(std::shared_ptr<const RelCat> r, const LeftHomotopyData& h, ObjectId x,
                               std::size_t n_max);
StageWitnessFamily build_thm31_pre(std::shared_ptr<const RelCat> r, const LeftHomotopyData& h, ObjectId y,
                                   std::size_t n_max);

/// Data of a natural transformation between functors C -> D of categories
/// with weak equivalences.
struct TransformationInput {
  std::shared_ptr<const RelCat> source;
  std::shared_ptr<const RelCat> target;
  FunctorData f;
  FunctorData g;
  NatTransData eta;  // F => G
};

/// The displayed source functor: z |-> (id, id, Fd_0, ..., Fd_{n-1}, η_Y, id).
StageFunctor thm32_source_functor(const StagePtr& s, const TransformationInput& in);
/// The displayed target functor: z |-> (id, η_X, Gd_0, ..., Gd_{n-1}, id, id).
StageFunctor thm32_target_functor(const StagePtr& s, const TransformationInput& in);
/// Library composite inclusion_0 ∘ (η_Y)_* ∘ L F.
StageFunctor thm32_source_composite(const StagePtr& s, const TransformationInput& in);
/// Library composite inclusion_{n+2} ∘ η_X^* ∘ L G.
StageFunctor thm32_target_composite(const StagePtr& s, const TransformationInput& in);
/// One forward step with ladder columns (id, id, η_{C_0}, ..., η_{C_n}, id, id).
HomotopyCertificate thm32_certificate(const StagePtr& s, const TransformationInput& in);
/// Throws ValidationError if F, G or η fail their laws or F, G do not
/// preserve weak equivalences.
StageWitnessFamily build_thm32(const TransformationInput& in, ObjectId x, ObjectId y, std::size_t n_max);

/// Certificate between the inclusions at positions i and j of L_n(X,Y),
/// one step per adjacent position. Throws std::out_of_range.
HomotopyCertificate build_rmk33(const StagePtr& s, std::size_t i, std::size_t j);

struct Lemma53Part1 {
  /// h^n : L_n(LX, LLY) -> L_{n+2}(X, LY), one per stage.
  std::vector<StageFunctor> h;
  /// inclusion ≃ h ∘ L^H L on L_n(X, LY).
  StageWitnessFamily unit_family;
  /// inclusion ≃ L^H L ∘ h on L_n(LX, LLY), through the cylinder functor.
  StageWitnessFamily counit_family;
};

/// Throws ValidationError if the idempotent data or its witnesses fail.
Lemma53Part1 build_lemma53_part1(std::shared_ptr<const RelCat> r, const IdempotentData& d, ObjectId x,
                                 ObjectId y, std::size_t n_max);

enum class Pi0Basis { oracle, tower, none };
std::string_view to_string(Pi0Basis b);

/// π₀ of g^* : map(B, Y) -> map(A, Y) for g : A -> B.
struct Pi0MapReport {
  Pi0Basis basis = Pi0Basis::none;
  std::optional<std::size_t> source_classes;
  std::optional<std::size_t> target_classes;
  std::optional<bool> bijective;
  Verdict verdict = Verdict::unknown;  // pass iff bijective, fail iff not
  std::vector<std::string> notes;
};

/// Exact through the oracle when it saturates, otherwise read off the
/// stabilized towers at stages n_max - 2 -> n_max, otherwise UNKNOWN.
Pi0MapReport pi0_precompose_map(std::shared_ptr<const RelCat> r, MorphismId g, ObjectId y, std::size_t n_max,
                                std::size_t bound);

struct Lemma53Part2 {
  StageWitnessFamily thm32;
  Pi0MapReport pi0;
};

Lemma53Part2 build_lemma53_part2(std::shared_ptr<const RelCat> r, const IdempotentData& d, ObjectId x,
                                 ObjectId y, std::size_t n_max, std::size_t bound);

/// Both parts with every check collected.
TheoremReport verify_lemma53(std::shared_ptr<const RelCat> r, const IdempotentData& d, ObjectId x, ObjectId y,
                             std::size_t n_max, std::size_t bound);

/// Componentwise retract check for a homotopy algebra and f : A -> B, over
/// the source and target of f.
TheoremReport verify_hoalg_retract(std::shared_ptr<const RelCat> r, const HoAlgebraData& alg, MorphismId f,
                                   std::size_t n_max);

/// π₀-level orthogonality of g against LZ.
TheoremReport check_prop52_pi0(std::shared_ptr<const RelCat> r, const IdempotentData& d, MorphismId g,
                               ObjectId z, std::size_t n_max, std::size_t bound);

/// Report wrappers used by the command-line verifier.
TheoremReport verify_thm31(std::shared_ptr<const RelCat> r, const LeftHomotopyData& h, ObjectId x,
                           std::size_t n_max);
TheoremReport verify_thm32(const TransformationInput& in, ObjectId x, ObjectId y, std::size_t n_max);
TheoremReport verify_rmk33(std::shared_ptr<const RelCat> r, ObjectId x, ObjectId y, std::size_t n_max,
                           std::optional<std::size_t> i, std::optional<std::size_t> j);

}  // namespace hammock
