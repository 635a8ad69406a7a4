#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vforge/chain_io.hpp"

namespace corpus {

struct Entry {
  std::string name;
  std::string text;
};

// Valid chains over p = 2, 3, 5; the last two of each prime block include a
// tau-valued last level where noted.
inline const std::vector<Entry>& chains() {
  static const std::vector<Entry> c{
      {"C2", "p = 2\nQ0: X @ 1/2\nQ1: X^2 - 2 @ 3/2\n"},
      {"C3", "p = 2\nQ0: X @ 1/2\nQ1: X^2 - 2 @ 3/2 + 1 t\n"},
      {"C4", "p = 2\nQ0: X @ 0\nQ1: X^2 + X + 1 @ 1\n"},
      {"gauss2", "p = 2\nQ0: X @ 0\n"},
      {"cube2", "p = 2\nQ0: X @ 1/3\nQ1: X^3 - 2 @ 2\n"},
      {"C5", "p = 2\nQ0: X @ 1/2\nQ1: X^2 - 2 @ 3/2\nQ2: X^4 + 2X^3 - 4X^2 - 4X + 12 @ 4\n"},
      {"shifted2", "p = 2\nQ0: X - 1 @ 1/2\nQ1: X^2 - 2X - 1 @ 3/2\n"},
      {"ram3", "p = 3\nQ0: X @ 1/2\nQ1: X^2 - 3 @ 2\n"},
      {"inert3", "p = 3\nQ0: X @ 0\nQ1: X^2 + 1 @ 1\n"},
      {"deep3", "p = 3\nQ0: X @ 1/2\nQ1: X^2 - 3 @ 3/2\nQ2: X^4 - 6X^2 + 36 @ 4\n"},
      {"tau3", "p = 3\nQ0: X @ 0\nQ1: X^2 + 1 @ 1 + 1 t\n"},
      {"inert5", "p = 5\nQ0: X @ 0\nQ1: X^2 - 2 @ 1\n"},
      {"ram5", "p = 5\nQ0: X @ 1/2\nQ1: X^2 - 5 @ 3/2\n"},
      {"cube5", "p = 5\nQ0: X @ 1/3\nQ1: X^3 - 5 @ 5/3\n"},
      {"tau5", "p = 5\nQ0: X @ 1/2\nQ1: X^2 - 5 @ 3/2 + 1/2 t\n"},
      {"line5", "p = 5\nQ0: X - 3 @ 1\n"},
  };
  return c;
}

inline std::vector<std::pair<std::string, vforge::Chain>> built() {
  std::vector<std::pair<std::string, vforge::Chain>> out;
  for (const auto& e : chains()) out.emplace_back(e.name, vforge::parse_chain(e.text));
  return out;
}

struct MinPoly {
  std::string poly;
  long p;
  int count;  // number of extensions, checked by hand
};

inline const std::vector<MinPoly>& min_polys() {
  static const std::vector<MinPoly> m{
      {"X^2 - 2", 2, 1},  {"X^2 - 17", 2, 2}, {"X^2 + X + 1", 2, 1}, {"X^3 - 2", 2, 1},
      {"X^4 + 1", 2, 1},  {"X^2 - 7", 2, 1},  {"X^2 + 1", 2, 1},     {"X^2 - 3", 2, 1},
      {"X^2 + 7", 2, 2},  {"X^4 - 2", 2, 1},  {"X^2 - 2", 3, 1},     {"X^3 - 2", 3, 1},
      {"X^2 + X + 1", 3, 1}, {"X^4 + 1", 3, 2}, {"X^2 - 10", 3, 2},  {"X^3 - 3", 3, 1},
      {"X^3 - 2", 5, 2},  {"X^4 + 1", 5, 2},  {"X^2 - 5", 5, 1},     {"X^4 + X^3 + X^2 + X + 1", 11, 4},
      {"X^4 + X^3 + X^2 + X + 1", 5, 1},
  };
  return m;
}

}  // namespace corpus
