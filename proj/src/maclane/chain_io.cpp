#include "vforge/chain_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "vforge/parse.hpp"

namespace vforge {

namespace {

std::size_t skip_ws(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

}  // namespace

ChainSpec parse_chain_spec(std::string_view text) {
  ChainSpec spec;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_p = false;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;
    std::size_t i = skip_ws(line, 0);
    if (i == line.size() || line[i] == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_p) {
      if (line[i] != 'p') throw ParseError(line_no, i + 1, "expected 'p = <prime>'");
      i = skip_ws(line, i + 1);
      if (i >= line.size() || line[i] != '=') throw ParseError(line_no, i + 1, "expected '='");
      i = skip_ws(line, i + 1);
      std::size_t start = i;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      if (start == i) throw ParseError(line_no, i + 1, "expected a prime");
      std::size_t after = skip_ws(line, i);
      if (after != line.size()) throw ParseError(line_no, after + 1, "trailing input after prime");
      if (i - start > 9) throw ParseError(line_no, start + 1, "prime too large");
      long p = std::stol(std::string(line.substr(start, i - start)));
      if (!is_prime(p)) throw ParseError(line_no, start + 1, std::to_string(p) + " is not prime");
      spec.p = p;
      have_p = true;
    } else {
      if (line[i] != 'Q') throw ParseError(line_no, i + 1, "expected 'Q<i>:'");
      ++i;
      std::size_t start = i;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      if (start == i) throw ParseError(line_no, i + 1, "expected a level index");
      if (i - start > 6) throw ParseError(line_no, start + 1, "level index too large");
      std::size_t idx = std::stoul(std::string(line.substr(start, i - start)));
      if (idx != spec.levels.size())
        throw ParseError(line_no, start + 1,
                         "expected level index " + std::to_string(spec.levels.size()));
      if (i >= line.size() || line[i] != ':') throw ParseError(line_no, i + 1, "expected ':'");
      ++i;
      std::size_t at = line.find('@', i);
      if (at == std::string_view::npos) throw ParseError(line_no, line.size() + 1, "expected '@ <value>'");
      Poly q = parse_poly(line.substr(i, at - i), line_no, i);
      Value b = parse_value(line.substr(at + 1), line_no, at + 1);
      spec.levels.emplace_back(std::move(q), std::move(b));
    }
    if (end == text.size()) break;
  }
  if (!have_p) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'p = <prime>' line");
  if (spec.levels.empty()) throw ParseError(line_no, 1, "chain has no levels");
  return spec;
}

Chain build_chain(const ChainSpec& spec) {
  Chain c(spec.p);
  for (const auto& [q, b] : spec.levels) c = c.augment(q, b);
  return c;
}

Chain parse_chain(std::string_view text) { return build_chain(parse_chain_spec(text)); }

Chain load_chain_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open chain file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_chain(ss.str());
}

std::string print_chain(const Chain& chain) {
  std::ostringstream os;
  os << "p = " << chain.prime() << "\n";
  for (std::size_t i = 0; i < chain.size(); ++i)
    os << "Q" << i << ": " << chain.key(i).str() << " @ " << chain.beta(i).file_str() << "\n";
  return os.str();
}

}  // namespace vforge
