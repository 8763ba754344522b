#pragma once

// Reference computations by exhaustive search over tuples of morphisms. They
// share nothing with the library beyond FinCat lookups and are only fit for
// tiny inputs.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "hammock/fincat.hpp"
#include "hammock/relcat.hpp"

namespace hammock::testing {

using Arrows = std::vector<MorphismId>;

inline bool is_zigzag(const RelCat& r, ObjectId x, ObjectId y, const Arrows& a) {
  const FinCat& c = r.cat();
  ObjectId at = x;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k % 2 == 0) {
      if (!r.is_weq(a[k]) || c.target(a[k]) != at) return false;
      at = c.source(a[k]);
    } else {
      if (c.source(a[k]) != at) return false;
      at = c.target(a[k]);
    }
  }
  return at == y;
}

/// Every n-tuple of morphisms, filtered.
inline std::vector<Arrows> brute_zigzags(const RelCat& r, ObjectId x, ObjectId y, std::size_t n) {
  const auto& ms = r.cat().morphisms();
  std::vector<Arrows> out;
  std::vector<std::size_t> idx(n, 0);
  if (ms.empty()) return out;
  for (;;) {
    Arrows a;
    for (auto i : idx) a.push_back(ms[i]);
    if (is_zigzag(r, x, y, a)) out.push_back(a);
    std::size_t k = 0;
    while (k < n && ++idx[k] == ms.size()) idx[k++] = 0;
    if (k == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ObjectId> brute_nodes(const FinCat& c, ObjectId x, const Arrows& a) {
  std::vector<ObjectId> out{x};
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(k % 2 == 0 ? c.source(a[k]) : c.target(a[k]));
  return out;
}

/// All ladders a => b as column tuples, by trying every tuple of maps.
inline std::vector<Arrows> brute_ladders(const RelCat& r, ObjectId x, const Arrows& a, const Arrows& b) {
  const FinCat& c = r.cat();
  auto an = brute_nodes(c, x, a);
  auto bn = brute_nodes(c, x, b);
  std::vector<std::vector<MorphismId>> choices;
  for (std::size_t k = 0; k < an.size(); ++k) {
    auto h = c.hom(an[k], bn[k]);
    choices.emplace_back(h.begin(), h.end());
    if (choices.back().empty()) return {};
  }
  std::vector<Arrows> out;
  std::vector<std::size_t> idx(an.size(), 0);
  for (;;) {
    Arrows cols;
    for (std::size_t k = 0; k < idx.size(); ++k) cols.push_back(choices[k][idx[k]]);
    bool ok = c.is_identity(cols.front()) && c.is_identity(cols.back());
    for (std::size_t k = 0; ok && k < a.size(); ++k) {
      auto lhs = k % 2 == 0 ? c.compose(cols[k], a[k]) : c.compose(cols[k + 1], a[k]);
      auto rhs = k % 2 == 0 ? c.compose(b[k], cols[k + 1]) : c.compose(b[k], cols[k]);
      ok = lhs && rhs && *lhs == *rhs;
    }
    if (ok) out.push_back(cols);
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

/// Number of connected components of the stage category.
inline std::size_t brute_components(const RelCat& r, ObjectId x, ObjectId y, std::size_t n) {
  auto zs = brute_zigzags(r, x, y, n);
  std::vector<std::size_t> parent(zs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = 0; j < zs.size(); ++j) {
      if (!brute_ladders(r, x, zs[i], zs[j]).empty()) parent[find(i)] = find(j);
    }
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < zs.size(); ++i) count += find(i) == i;
  return count;
}

}  // namespace hammock::testing
