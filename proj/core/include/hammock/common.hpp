#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hammock {

struct ObjectId {
  std::uint32_t value = 0;
  auto operator<=>(const ObjectId&) const = default;
};

struct MorphismId {
  std::uint32_t value = 0;
  auto operator<=>(const MorphismId&) const = default;
};

/// A named law violation together with the identifiers that witness it.
struct Violation {
  std::string law;
  std::string message;
  std::vector<std::string> witnesses;

  bool operator==(const Violation&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Violation& v);
std::string to_string(const Violation& v);

/// Result of a decidable check: `std::nullopt` means the check passed.
using Check = std::optional<Violation>;

inline Check pass() { return std::nullopt; }
Check fail(std::string law, std::string message,
           std::vector<std::string> witnesses = {});

/// Thrown by constructors of validated values (FinCat, RelCat, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(Violation v);
  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

enum class Verdict { pass, fail, unknown };

std::string_view to_string(Verdict v);

/// Conjunction over three-valued verdicts: any FAIL wins, then any UNKNOWN.
Verdict combine(Verdict a, Verdict b);

}  // namespace hammock

template <>
struct std::hash<hammock::ObjectId> {
  std::size_t operator()(hammock::ObjectId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

template <>
struct std::hash<hammock::MorphismId> {
  std::size_t operator()(hammock::MorphismId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
