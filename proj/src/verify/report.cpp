#include <json.hpp>
#include <sstream>

#include "vforge/verify.hpp"

namespace vforge {

std::string render_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "chain (p = " << r.prime << ", d(w) = " << r.d << ", " << r.classification << ")\n";
  std::istringstream chain(r.chain);
  for (std::string line; std::getline(chain, line);) os << "  " << line << "\n";
  os << "suite " << r.suite << ", seed " << r.seed << ", samples " << r.samples << "\n";
  if (!r.classes.empty()) {
    os << "common extensions: " << r.class_count << (r.class_count == 1 ? " class" : " classes") << ", bound "
       << r.class_count << " <= " << r.root_count << "\n";
    for (const auto& c : r.classes)
      os << "  extension " << c.extension << ": center " << c.center << ", delta " << c.delta << ", local degree "
         << c.local_degree << ", ball " << c.ball_size << ", classes " << c.classes << ", minimal degree "
         << c.minimal_degree << (c.passed ? "" : " FAILED") << "\n";
  }
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    passed += c.pass;
    os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    if (!c.pass) os << "     witness: " << c.witness << "\n";
  }
  os << passed << "/" << r.checks.size() << " checks passed\n";
  return os.str();
}

std::string render_json(const VerifyReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = 1;
  j["prime"] = r.prime;
  j["chain"] = r.chain;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["classification"] = r.classification;
  j["d"] = r.d;
  ordered_json classes = ordered_json::array();
  for (const auto& c : r.classes)
    classes.push_back({{"extension", c.extension},
                       {"center", c.center},
                       {"delta", c.delta},
                       {"local_degree", c.local_degree},
                       {"ball_size", c.ball_size},
                       {"classes", c.classes},
                       {"minimal_degree", c.minimal_degree},
                       {"pass", c.passed}});
  j["classes"] = classes;
  j["class_count"] = r.class_count;
  j["root_count"] = r.root_count;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"statement", c.locus},
                      {"pass", c.pass},
                      {"detail", c.detail},
                      {"witness", c.witness}});
  j["checks"] = checks;
  j["pass"] = r.pass();
  return j.dump(2) + "\n";
}

}  // namespace vforge
