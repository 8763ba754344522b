#include "hammock/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace hammock {

namespace {
constexpr std::uint32_t kNone = ~std::uint32_t{0};
}

Word empty_word(ObjectId x) { return Word{x, x, {}}; }

Word word_of(const FinCat& c, MorphismId m) {
  Word w{c.source(m), c.target(m), {}};
  if (!c.is_identity(m)) w.letters.push_back({m, false});
  return w;
}

Word formal_inverse(const RelCat& r, MorphismId w) {
  const FinCat& c = r.cat();
  if (!r.is_weq(w)) throw std::invalid_argument(c.morphism_name(w) + " is not a weak equivalence");
  Word out{c.target(w), c.source(w), {}};
  if (!c.is_identity(w)) out.letters.push_back({w, true});
  return out;
}

Word then(const Word& first, const Word& second) {
  if (first.to != second.from) throw std::invalid_argument("words are not composable");
  Word out{first.from, second.to, first.letters};
  out.letters.insert(out.letters.end(), second.letters.begin(), second.letters.end());
  return out;
}

Check check_word(const RelCat& r, const Word& w) {
  const FinCat& c = r.cat();
  auto at = w.from;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const auto& l = w.letters[i];
    if (!c.has_morphism(l.morphism)) return fail("word", "unknown letter", {std::to_string(i)});
    const auto& name = c.morphism_name(l.morphism);
    if (l.inverse && !r.is_weq(l.morphism)) {
      return fail("word", "formal inverse of a morphism outside W", {name});
    }
    auto src = l.inverse ? c.target(l.morphism) : c.source(l.morphism);
    if (src != at) return fail("word", "letters do not chain", {name, std::to_string(i)});
    at = l.inverse ? c.source(l.morphism) : c.target(l.morphism);
  }
  if (at != w.to) return fail("word", "word does not end at its declared target", {c.object_name(w.to)});
  return pass();
}

std::string to_string(const FinCat& c, const Word& w) {
  if (w.letters.empty()) return c.morphism_name(c.identity(w.from));
  std::string out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (!out.empty()) out += " . ";
    out += c.morphism_name(it->morphism);
    if (it->inverse) out += "^-1";
  }
  return out;
}

std::vector<Word> one_step_rewrites(const RelCat& r, const Word& w) {
  const FinCat& c = r.cat();
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
    const auto& a = w.letters[i];
    const auto& b = w.letters[i + 1];
    Word next{w.from, w.to, {}};
    next.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(i));
    bool applies = false;
    if (!a.inverse && !b.inverse) {
      auto composite = c.comp(b.morphism, a.morphism);
      if (!c.is_identity(composite)) next.letters.push_back({composite, false});
      applies = true;
    } else if (a.morphism == b.morphism && a.inverse != b.inverse) {
      applies = true;
    }
    if (!applies) continue;
    next.letters.insert(next.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(i + 2),
                        w.letters.end());
    out.push_back(std::move(next));
  }
  return out;
}

std::string_view to_string(Saturation s) {
  return s == Saturation::saturated ? "SATURATED" : "UNKNOWN";
}

std::string_view to_string(Equality e) {
  switch (e) {
    case Equality::yes:
      return "yes";
    case Equality::no_at_bound:
      return "no-at-bound";
    case Equality::unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

Localization::Localization(const RelCat& r, std::size_t bound, OracleLimits limits)
    : r_(&r), bound_(bound), limits_(limits) {
  const FinCat& c = r.cat();
  plain_code_.assign(c.morphism_count(), 0);
  inverse_code_.assign(c.morphism_count(), 0);
  auto add = [&](Letter l, ObjectId s, ObjectId t) {
    letters_.push_back(l);
    letter_source_.push_back(s);
    letter_target_.push_back(t);
    return static_cast<std::uint16_t>(letters_.size());  // codes start at 1
  };
  for (auto m : c.morphisms()) {
    if (!c.is_identity(m)) plain_code_[m.value] = add({m, false}, c.source(m), c.target(m));
  }
  for (auto m : r.weqs()) {
    if (!c.is_identity(m)) inverse_code_[m.value] = add({m, true}, c.target(m), c.source(m));
  }
  if (letters_.size() >= 0xFFFF || c.object_count() >= 0xFFFF) {
    throw std::length_error("category too large for the localization oracle");
  }
  letters_from_.assign(c.object_count(), {});
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    letters_from_[letter_source_[i].value].push_back(static_cast<std::uint16_t>(i + 1));
  }
  enumerate();
  close();
  certify();
}

std::optional<std::uint16_t> Localization::code_of(const Letter& l) const {
  if (!r_->cat().has_morphism(l.morphism)) return std::nullopt;
  auto code = l.inverse ? inverse_code_[l.morphism.value] : plain_code_[l.morphism.value];
  return code;
}

std::optional<Localization::Key> Localization::encode(const Word& w) const {
  if (check_word(*r_, w)) return std::nullopt;
  Key k(1, static_cast<char16_t>(w.from.value));
  for (const auto& l : w.letters) {
    auto code = code_of(l);
    if (!code) return std::nullopt;
    if (*code != 0) k.push_back(static_cast<char16_t>(*code));  // identity letters drop out
  }
  return k;
}

Word Localization::decode(const Key& k) const {
  Word w{ObjectId{k[0]}, ObjectId{k[0]}, {}};
  for (std::size_t i = 1; i < k.size(); ++i) {
    auto code = static_cast<std::size_t>(k[i]) - 1;
    w.letters.push_back(letters_[code]);
    w.to = letter_target_[code];
  }
  return w;
}

void Localization::enumerate() {
  std::vector<std::uint32_t> frontier;
  for (auto o : r_->cat().objects()) {
    index_.emplace(Key(1, static_cast<char16_t>(o.value)), static_cast<std::uint32_t>(words_.size()));
    frontier.push_back(static_cast<std::uint32_t>(words_.size()));
    words_.emplace_back(1, static_cast<char16_t>(o.value));
    end_.push_back(o);
    parent_.push_back(kNone);
  }
  for (std::size_t len = 1; len <= bound_ && !truncated_; ++len) {
    std::vector<std::uint32_t> next;
    for (auto idx : frontier) {
      for (auto code : letters_from_[end_[idx].value]) {
        if (words_.size() >= limits_.max_words) {
          truncated_ = true;
          break;
        }
        Key k = words_[idx];
        k.push_back(static_cast<char16_t>(code));
        auto id = static_cast<std::uint32_t>(words_.size());
        index_.emplace(k, id);
        words_.push_back(std::move(k));
        end_.push_back(letter_target_[code - 1]);
        parent_.push_back(idx);
        next.push_back(id);
      }
      if (truncated_) break;
    }
    frontier = std::move(next);
  }
}

void Localization::close() {
  const FinCat& c = r_->cat();
  UnionFind uf(words_.size());
  for (std::size_t idx = 0; idx < words_.size(); ++idx) {
    const Key& k = words_[idx];
    for (std::size_t i = 1; i + 1 < k.size(); ++i) {
      const auto& a = letters_[k[i] - 1];
      const auto& b = letters_[k[i + 1] - 1];
      Key rewritten = k.substr(0, i);
      if (!a.inverse && !b.inverse) {
        auto composite = c.comp(b.morphism, a.morphism);
        if (!c.is_identity(composite)) rewritten.push_back(static_cast<char16_t>(plain_code_[composite.value]));
      } else if (!(a.morphism == b.morphism && a.inverse != b.inverse)) {
        continue;
      }
      rewritten.append(k, i + 2);
      auto it = index_.find(rewritten);
      if (it != index_.end()) uf.unite(idx, it->second);
    }
  }
  // Words are enumerated by length then lexicographically, so the least
  // member of each class is its canonical representative.
  auto comps = uf.components();
  class_of_word_.resize(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) class_of_word_[i] = static_cast<std::uint32_t>(comps.class_of[i]);
  for (const auto& cls : comps.classes) {
    class_rep_.push_back(static_cast<std::uint32_t>(cls.front()));
    max_rep_length_ = std::max(max_rep_length_, words_[cls.front()].size() - 1);
  }
}

void Localization::certify() {
  if (truncated_) {
    reason_ = "word universe exceeds " + std::to_string(limits_.max_words) + " words";
    return;
  }
  if (max_rep_length_ + 1 > bound_) {
    reason_ = "a class first appears at the bound (representative length " +
              std::to_string(max_rep_length_) + ")";
    return;
  }
  const FinCat& c = r_->cat();
  std::size_t n_classes = class_rep_.size();
  action_.assign(letters_.size() + 1, std::vector<std::uint32_t>(n_classes, kNone));
  for (std::size_t cls = 0; cls < n_classes; ++cls) {
    const Key& rep = words_[class_rep_[cls]];
    for (auto code : letters_from_[end_[class_rep_[cls]].value]) {
      Key k = rep;
      k.push_back(static_cast<char16_t>(code));
      action_[code][cls] = class_of_word_[index_.at(k)];
    }
  }
  auto act = [&](std::uint16_t code, std::uint32_t cls) { return action_[code][cls]; };
  auto ends_at = [&](std::uint32_t cls, ObjectId o) { return end_[class_rep_[cls]] == o; };
  // The action must respect every defining relation of C[W^-1].
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& a = letters_[i];
    auto ca = static_cast<std::uint16_t>(i + 1);
    for (std::uint32_t cls = 0; cls < n_classes; ++cls) {
      if (!ends_at(cls, letter_source_[i])) continue;
      auto after_a = act(ca, cls);
      if (a.inverse) {
        if (act(plain_code_[a.morphism.value], after_a) != cls) {
          reason_ = "action violates w . w^-1 = id";
          return;
        }
        continue;
      }
      if (r_->is_weq(a.morphism) && act(inverse_code_[a.morphism.value], after_a) != cls) {
        reason_ = "action violates w^-1 . w = id";
        return;
      }
      for (auto g : c.morphisms_from(c.target(a.morphism))) {
        if (c.is_identity(g)) continue;
        auto composite = c.comp(g, a.morphism);
        auto expected = c.is_identity(composite) ? cls : act(plain_code_[composite.value], cls);
        if (act(plain_code_[g.value], after_a) != expected) {
          reason_ = "action violates a composition relation";
          return;
        }
      }
    }
  }
  // Evaluating any word from the empty word must land in its own class.
  std::vector<std::uint32_t> eval(words_.size());
  for (std::size_t idx = 0; idx < words_.size(); ++idx) {
    if (parent_[idx] == kNone) {
      eval[idx] = class_of_word_[idx];
    } else {
      eval[idx] = act(static_cast<std::uint16_t>(words_[idx].back()), eval[parent_[idx]]);
    }
    if (eval[idx] != class_of_word_[idx]) {
      reason_ = "action disagrees with the closure";
      return;
    }
  }
  saturation_ = Saturation::saturated;
}

std::optional<std::size_t> Localization::class_of(const Word& w) const {
  auto key = encode(w);
  if (!key) throw std::invalid_argument("malformed word");
  if (auto it = index_.find(*key); it != index_.end()) return class_of_word_[it->second];
  if (saturation_ != Saturation::saturated) return std::nullopt;
  auto cls = class_of_word_[index_.at(key->substr(0, 1))];
  for (std::size_t i = 1; i < key->size(); ++i) cls = action_[(*key)[i]][cls];
  return cls;
}

Word Localization::representative(std::size_t cls) const { return decode(words_[class_rep_[cls]]); }

std::vector<Word> Localization::classes(ObjectId x, ObjectId y) const {
  std::vector<Word> out;
  for (auto rep : class_rep_) {
    if (ObjectId{words_[rep][0]} == x && end_[rep] == y) out.push_back(decode(words_[rep]));
  }
  return out;
}

SaturationReport localize_hom(const RelCat& r, ObjectId x, ObjectId y, std::size_t bound,
                              OracleLimits limits) {
  Localization loc(r, bound, limits);
  SaturationReport report;
  report.from = x;
  report.to = y;
  report.bound = bound;
  report.classes = loc.classes(x, y);
  report.verdict = loc.saturation();
  report.reason = loc.reason();
  report.words_explored = loc.word_count();
  return report;
}

Equality equal_in_localization(const RelCat& r, const Word& u, const Word& v, std::size_t bound,
                               OracleLimits limits) {
  if (u.from != v.from || u.to != v.to) throw std::invalid_argument("words have different endpoints");
  if (auto bad = check_word(r, u)) throw std::invalid_argument(to_string(*bad));
  if (auto bad = check_word(r, v)) throw std::invalid_argument(to_string(*bad));
  bound = std::max({bound, u.size(), v.size()});
  Localization loc(r, bound, limits);
  auto cu = loc.class_of(u);
  auto cv = loc.class_of(v);
  if (cu && cv && *cu == *cv) return Equality::yes;
  if (loc.saturation() == Saturation::saturated) return Equality::no_at_bound;
  return Equality::unknown;
}

}  // namespace hammock
