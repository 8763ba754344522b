#include "hammock/dot.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace hammock {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string stage_to_dot(const HammockStage& s, DotSummary* summary) {
  const FinCat& c = s.base();
  const auto& zs = s.objects();
  std::ostringstream os;
  os << "digraph " << quoted("L" + std::to_string(s.stage()) + "(" + c.object_name(s.from()) + "," +
                             c.object_name(s.to()) + ")")
     << " {\n";
  for (std::size_t i = 0; i < zs.size(); ++i) {
    os << "  z" << i << " [label=" << quoted(to_string(c, zs[i])) << "];\n";
  }
  std::size_t edges = 0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    std::vector<std::pair<std::size_t, std::string>> out;
    s.for_each_ladder(i, [&](std::size_t t, std::span<const MorphismId> cols) {
      bool identity = t == i && std::all_of(cols.begin(), cols.end(), [&](MorphismId m) { return c.is_identity(m); });
      if (identity) return;
      std::string label;
      for (std::size_t k = 0; k < cols.size(); ++k) label += (k ? " " : "") + c.morphism_name(cols[k]);
      out.emplace_back(t, std::move(label));
    });
    std::sort(out.begin(), out.end());
    for (const auto& [t, label] : out) os << "  z" << i << " -> z" << t << " [label=" << quoted(label) << "];\n";
    edges += out.size();
  }
  os << "}\n";
  if (summary) *summary = {zs.size(), edges};
  return os.str();
}

}  // namespace hammock
