#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vforge/chain.hpp"

namespace vforge {

// Chain file format:
//   p = 2
//   Q0: X @ 1/2
//   Q1: X^2 - 2 @ 3/2 + 1 t
// Blank lines and lines starting with '#' are ignored.
struct ChainSpec {
  long p = 0;
  std::vector<std::pair<Poly, Value>> levels;
};

// Syntax only; throws ParseError with line and column.
ChainSpec parse_chain_spec(std::string_view text);
// Builds by successive augmentation; throws ChainError on invalid chains.
Chain build_chain(const ChainSpec& spec);
Chain parse_chain(std::string_view text);
Chain load_chain_file(const std::string& path);

std::string print_chain(const Chain& chain);

}  // namespace vforge
