#include "hammock/common.hpp"

#include <sstream>

#include "hammock/category.hpp"

namespace hammock {

std::ostream& operator<<(std::ostream& os, const Violation& v) {
  os << v.law << ": " << v.message;
  if (!v.witnesses.empty()) {
    os << " [";
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
      if (i) os << ", ";
      os << v.witnesses[i];
    }
    os << "]";
  }
  return os;
}

std::string to_string(const Violation& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Check fail(std::string law, std::string message, std::vector<std::string> witnesses) {
  return Violation{std::move(law), std::move(message), std::move(witnesses)};
}

ValidationError::ValidationError(Violation v)
    : std::runtime_error(to_string(v)), violation_(std::move(v)) {}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::unknown || b == Verdict::unknown) return Verdict::unknown;
  return Verdict::pass;
}

Components UnionFind::components() {
  Components out;
  out.class_of.assign(parent_.size(), 0);
  std::vector<std::size_t> root_class(parent_.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    auto r = find(i);
    if (root_class[r] == static_cast<std::size_t>(-1)) {
      root_class[r] = out.classes.size();
      out.classes.emplace_back();
    }
    out.class_of[i] = root_class[r];
    out.classes[root_class[r]].push_back(i);
  }
  return out;
}

}  // namespace hammock
