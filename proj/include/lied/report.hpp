#pragma once

#include <string>
#include <vector>

namespace lied {

// One verified identity.  label names the equation or object checked.
struct Check {
  std::string label;
  std::string subject;
  bool ok = true;
  std::string detail;  // first mismatch when !ok
};

using Report = std::vector<Check>;

inline bool all_ok(const Report& r) {
  for (const auto& c : r)
    if (!c.ok) return false;
  return true;
}

inline void append(Report& into, const Report& from) { into.insert(into.end(), from.begin(), from.end()); }

}  // namespace lied
