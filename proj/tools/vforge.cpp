#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>

#include "vforge/chain_io.hpp"
#include "vforge/extensions.hpp"
#include "vforge/parse.hpp"
#include "vforge/verify.hpp"

using namespace vforge;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kInvalidChain = 3, kReducible = 4, kUnsupported = 5 };

struct Args {
  std::string chain;
  std::string poly;
  std::string min_poly;
  std::string beta;
  long prime = 0;
  int level = -1;
  int extension = -1;
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  int samples = 100;
  int max_degree = 6;
  int max_field_degree = FiniteField::kDefaultMaxDegree;
  std::string format = "text";
  bool serial = false;
  std::string inject;
};

Chain load(const Args& a) {
  std::ifstream in(a.chain, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open chain file " + a.chain);
  std::ostringstream ss;
  ss << in.rdbuf();
  ChainSpec spec = parse_chain_spec(ss.str());
  Chain c(spec.p, a.max_field_degree);
  for (const auto& [q, b] : spec.levels) c = c.augment(q, b);
  return c;
}

Poly poly_arg(const std::string& text) { return parse_poly(text); }

std::uint64_t seed_of(const Args& a) {
  if (a.seed) return *a.seed;
  if (const char* env = std::getenv("VFORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("VFORGE_SEED is not an unsigned integer: ") + env);
    }
  }
  return kDefaultSeed;
}

int cmd_eval(const Args& a) {
  Chain c = load(a);
  Poly f = poly_arg(a.poly);
  if (a.level >= 0) {
    if (static_cast<std::size_t>(a.level) >= c.size())
      throw std::invalid_argument("level " + std::to_string(a.level) + " out of range");
    std::cout << c.truncate(a.level, f).str() << "\n";
  } else {
    std::cout << c.eval(f).str() << "\n";
  }
  return kOk;
}

int cmd_epsilon(const Args& a) {
  Chain c = load(a);
  std::cout << c.epsilon(poly_arg(a.poly)).str() << "\n";
  return kOk;
}

int cmd_classify(const Args& a) {
  std::cout << to_string(load(a).classify()) << "\n";
  return kOk;
}

int cmd_residual(const Args& a) {
  Chain c = load(a);
  ResidualPolynomial r = c.residual_polynomial(poly_arg(a.poly));
  std::cout << r.str() << " over F_" << c.prime();
  if (r.field->degree() > 1) std::cout << "^" << r.field->degree();
  std::cout << "\n";
  return kOk;
}

int cmd_is_key(const Args& a) {
  Chain c = load(a);
  std::optional<Value> beta;
  if (!a.beta.empty()) beta = parse_value(a.beta);
  KeyCertificate k = c.is_key(poly_arg(a.poly), beta);
  std::cout << (k.is_key ? "key" : "not a key");
  if (!k.is_key) std::cout << " (" << k.failure << ": " << k.witness << ")";
  std::cout << "\n";
  if (!k.term_values.empty()) {
    std::cout << "term values {";
    for (std::size_t i = 0; i < k.term_values.size(); ++i) std::cout << (i ? "," : "") << k.term_values[i].str();
    std::cout << "}\n";
  }
  if (k.residual) std::cout << "residual " << k.residual->str() << "\n";
  if (k.epsilon) std::cout << "epsilon " << k.epsilon->str() << " (last key " << k.epsilon_last->str() << ")\n";
  return kOk;
}

int cmd_data(const Args& a) {
  Chain c = load(a);
  ChainData d = c.data();
  std::cout << "d(w) = " << d.d << "\n";
  std::cout << "value group = " << d.group_generator.get_str() << " Z" << (d.has_tau ? " + Q t component" : "")
            << "\n";
  std::cout << "residue field degree = " << d.residue_field_degree << "\n";
  std::cout << "classification = " << to_string(c.classify()) << "\n";
  for (std::size_t i = 0; i < d.levels.size(); ++i) {
    const auto& l = d.levels[i];
    std::cout << "Q" << i << ": degree " << l.degree << ", beta " << l.beta.str() << ", eps " << l.epsilon.str()
              << ", e " << l.e << ", f " << l.f << ", group " << l.group_generator.get_str() << " Z\n";
  }
  return kOk;
}

int cmd_print(const Args& a) {
  std::cout << print_chain(load(a));
  return kOk;
}

std::vector<ExtensionPtr> extensions_of(const Args& a) {
  if (!is_prime(a.prime)) throw std::invalid_argument(std::to_string(a.prime) + " is not prime");
  ExtendOptions o;
  o.max_field_degree = a.max_field_degree;
  return extend_to_number_field(poly_arg(a.min_poly), a.prime, o);
}

int cmd_extend(const Args& a) {
  auto exts = extensions_of(a);
  std::cout << exts.size() << (exts.size() == 1 ? " extension" : " extensions") << " of v_" << a.prime
            << " to Q[Y]/(" << exts.front()->min_poly().str('Y') << ")\n";
  for (const auto& e : exts) {
    std::cout << "extension " << e->index() << ": e = " << e->ramification() << ", f = " << e->residue_degree()
              << "\n";
    std::istringstream chain(e->describe());
    for (std::string line; std::getline(chain, line);) std::cout << "  " << line << "\n";
  }
  return kOk;
}

int cmd_valuation(const Args& a) {
  auto exts = extensions_of(a);
  Poly g = poly_arg(a.poly);
  for (const auto& e : exts) {
    if (a.extension >= 0 && static_cast<std::size_t>(a.extension) != e->index()) continue;
    std::cout << "extension " << e->index() << ": " << e->valuation(g).str() << "\n";
  }
  if (a.extension >= 0 && static_cast<std::size_t>(a.extension) >= exts.size())
    throw std::invalid_argument("extension index " + std::to_string(a.extension) + " out of range");
  return kOk;
}

int cmd_verify(const Args& a) {
  Chain c = load(a);
  VerifyConfig cfg;
  cfg.suite = a.suite;
  cfg.seed = seed_of(a);
  cfg.samples = a.samples;
  cfg.max_degree = a.max_degree;
  cfg.parallel = !a.serial;
  VerifyReport r = run_verify(c, cfg);
  if (!a.inject.empty()) {
    auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckResult& x) { return x.name == a.inject; });
    if (it == r.checks.end()) throw std::invalid_argument("no check named " + a.inject);
    it->pass = false;
    it->witness = "injected failure";
  }
  std::cout << (a.format == "json" ? render_json(r) : render_text(r));
  return r.pass() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vforge: MacLane valuation chains, extensions of p-adic valuations and pairs of definition"};
  app.require_subcommand(1);
  Args a;

  auto chain_opt = [&](CLI::App* s) { s->add_option("--chain", a.chain, "chain file")->required(); };
  auto poly_opt = [&](CLI::App* s) { s->add_option("--poly", a.poly, "polynomial in X")->required(); };
  auto field_opt = [&](CLI::App* s) {
    s->add_option("--max-field-degree", a.max_field_degree, "largest residue field degree k of F_p^k")
        ->check(CLI::Range(1, 16));
  };

  auto* eval = app.add_subcommand("eval", "w(f), or the truncation at --level");
  chain_opt(eval);
  poly_opt(eval);
  eval->add_option("--level", a.level, "truncation level");
  auto* eps = app.add_subcommand("epsilon", "eps(f)");
  chain_opt(eps);
  poly_opt(eps);
  auto* cls = app.add_subcommand("classify", "residue- or value-transcendental");
  chain_opt(cls);
  auto* res = app.add_subcommand("residual", "residual polynomial of f");
  chain_opt(res);
  poly_opt(res);
  auto* key = app.add_subcommand("is-key", "key polynomial test with certificate");
  chain_opt(key);
  poly_opt(key);
  key->add_option("--beta", a.beta, "value the key would be attached with");
  auto* data = app.add_subcommand("data", "d(w), value group, e and f per level");
  chain_opt(data);
  auto* print = app.add_subcommand("print", "parse and print a chain file");
  chain_opt(print);
  for (auto* s : {eval, eps, cls, res, key, data, print}) field_opt(s);

  auto* ext = app.add_subcommand("extend", "extensions of v_p to Q[Y]/(m)");
  auto* val = app.add_subcommand("valuation", "v(g(a)) for each extension");
  for (auto* s : {ext, val}) {
    s->add_option("-p,--prime", a.prime, "prime")->required();
    s->add_option("--min-poly", a.min_poly, "monic irreducible m")->required();
    field_opt(s);
  }
  poly_opt(val);
  val->add_option("--extension", a.extension, "only this extension index");

  auto* ver = app.add_subcommand("verify", "run the verification suite");
  chain_opt(ver);
  ver->add_option("--suite", a.suite, "paper | props | all")->check(CLI::IsMember({"paper", "props", "all"}));
  ver->add_option("--seed", a.seed, "random seed (default VFORGE_SEED, then a fixed seed)");
  ver->add_option("--samples", a.samples, "samples per degree")->check(CLI::Range(1, 100000));
  ver->add_option("--max-degree", a.max_degree, "degree bound for random samples")->check(CLI::Range(1, 16));
  ver->add_option("--format", a.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  ver->add_flag("--serial", a.serial, "use the serial reference kernels");
  // exercises the failure path of the report and the exit code
  ver->add_option("--inject-failure", a.inject, "mark the named check as failed")->group("");
  field_opt(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*eval) return cmd_eval(a);
    if (*eps) return cmd_epsilon(a);
    if (*cls) return cmd_classify(a);
    if (*res) return cmd_residual(a);
    if (*key) return cmd_is_key(a);
    if (*data) return cmd_data(a);
    if (*print) return cmd_print(a);
    if (*ext) return cmd_extend(a);
    if (*val) return cmd_valuation(a);
    if (*ver) return cmd_verify(a);
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.reason() << "\n";
    return kParse;
  } catch (const ChainError& e) {
    std::cerr << "invalid chain: " << e.invariant() << ": " << e.witness() << "\n";
    return kInvalidChain;
  } catch (const ReducibleError& e) {
    std::cerr << "reducible: " << e.poly().str('Y') << " has the factor " << e.factor().str('Y') << "\n";
    return kReducible;
  } catch (const FieldLimitError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsupported;
  }
  return kOk;
}
