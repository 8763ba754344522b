#pragma once

// Bounded brute-force localization C[W^-1]. Every word of length <= bound is
// enumerated and the one-step relations (composition of adjacent plain
// letters, cancellation of w and its formal inverse) are closed under with a
// union-find. Merges are always sound; inequality is only reported when the
// resulting classes carry a verified action of the localized category.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hammock/common.hpp"
#include "hammock/relcat.hpp"

namespace hammock {

struct Letter {
  MorphismId morphism;
  bool inverse = false;  // formal inverse of a weak equivalence

  auto operator<=>(const Letter&) const = default;
};

/// Letters are stored in application order: letters[0] is applied first.
struct Word {
  ObjectId from;
  ObjectId to;
  std::vector<Letter> letters;

  bool operator==(const Word&) const = default;
  std::size_t size() const { return letters.size(); }
};

Word empty_word(ObjectId x);
/// The one-letter word of m; identities give the empty word.
Word word_of(const FinCat& c, MorphismId m);
/// The formal inverse of w; throws std::invalid_argument unless w is a weak equivalence.
Word formal_inverse(const RelCat& r, MorphismId w);
/// `second` after `first`; throws std::invalid_argument on endpoint mismatch.
Word then(const Word& first, const Word& second);
Check check_word(const RelCat& r, const Word& w);
/// Composition notation, e.g. "w^-1 . f"; the empty word prints as id_X.
std::string to_string(const FinCat& c, const Word& w);

/// All words obtained from w by one relation: merging two composable plain
/// letters, or cancelling an adjacent w / w^-1 pair.
std::vector<Word> one_step_rewrites(const RelCat& r, const Word& w);

enum class Saturation { saturated, unknown };
enum class Equality { yes, no_at_bound, unknown };

std::string_view to_string(Saturation s);
std::string_view to_string(Equality e);

struct OracleLimits {
  std::size_t max_words = 2'000'000;
};

/// The closure over every word of length <= bound between any two objects.
/// Keeps a reference to `r`.
class Localization {
 public:
  Localization(const RelCat& r, std::size_t bound, OracleLimits limits = {});

  std::size_t bound() const { return bound_; }
  std::size_t word_count() const { return words_.size(); }
  std::size_t class_count() const { return class_rep_.size(); }
  Saturation saturation() const { return saturation_; }
  /// Why saturation was not certified (empty when saturated).
  const std::string& reason() const { return reason_; }
  std::size_t max_representative_length() const { return max_rep_length_; }

  /// Class index of w: direct lookup within the bound, or evaluation through
  /// the verified action when saturated; nullopt otherwise.
  std::optional<std::size_t> class_of(const Word& w) const;
  Word representative(std::size_t cls) const;
  /// Representatives of the classes of words X -> Y, shortest first.
  std::vector<Word> classes(ObjectId x, ObjectId y) const;

 private:
  using Key = std::u16string;

  std::optional<std::uint16_t> code_of(const Letter& l) const;
  std::optional<Key> encode(const Word& w) const;
  Word decode(const Key& k) const;
  void enumerate();
  void close();
  void certify();

  const RelCat* r_;
  std::size_t bound_;
  OracleLimits limits_;
  std::vector<Letter> letters_;
  std::vector<ObjectId> letter_source_;
  std::vector<ObjectId> letter_target_;
  std::vector<std::uint16_t> plain_code_;    // morphism -> code (0 for identities)
  std::vector<std::uint16_t> inverse_code_;  // morphism -> code of its formal inverse
  std::vector<std::vector<std::uint16_t>> letters_from_;
  std::vector<Key> words_;
  std::vector<ObjectId> end_;
  std::vector<std::uint32_t> parent_;
  std::unordered_map<Key, std::uint32_t> index_;
  bool truncated_ = false;
  std::vector<std::uint32_t> class_of_word_;
  std::vector<std::uint32_t> class_rep_;  // class -> word index
  std::vector<std::vector<std::uint32_t>> action_;  // [code][class] -> class, or kNone
  std::size_t max_rep_length_ = 0;
  Saturation saturation_ = Saturation::unknown;
  std::string reason_;
};

struct SaturationReport {
  ObjectId from;
  ObjectId to;
  std::size_t bound = 0;
  std::vector<Word> classes;
  Saturation verdict = Saturation::unknown;
  std::string reason;
  std::size_t words_explored = 0;
};

SaturationReport localize_hom(const RelCat& r, ObjectId x, ObjectId y, std::size_t bound,
                              OracleLimits limits = {});

/// The bound is raised to the longer word's length if necessary. Throws
/// std::invalid_argument when the endpoints differ.
Equality equal_in_localization(const RelCat& r, const Word& u, const Word& v, std::size_t bound,
                               OracleLimits limits = {});

}  // namespace hammock
