#include <algorithm>
#include <sstream>

#include "vforge/chain_io.hpp"
#include "vforge/kernels.hpp"
#include "vforge/newton.hpp"
#include "vforge/pairs.hpp"
#include "vforge/resultant.hpp"
#include "vforge/sampler.hpp"
#include "vforge/verify.hpp"

namespace vforge {

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

struct Ctx {
  const Chain& chain;
  const VerifyConfig& cfg;
  std::vector<CheckResult>& out;
  ExtendOptions eo;

  void add(std::string name, std::string locus, bool pass, std::string detail, std::string witness = {}) {
    out.push_back({std::move(name), std::move(locus), pass, std::move(detail), pass ? std::string() : std::move(witness)});
  }
  PolySampler sampler(const std::string& stream) const { return PolySampler(chain.prime(), cfg.seed, stream); }
  std::vector<ExtensionPtr> extensions(const Poly& q) const {
    ExtendOptions o = eo;
    o.max_degree = std::max(o.max_degree, q.degree());
    return extend_to_number_field(q, chain.prime(), o);
  }
  std::vector<Value> eps(const std::vector<Poly>& fs) const {
    return cfg.parallel ? kernels::epsilon_batch(chain, fs) : kernels::epsilon_batch_serial(chain, fs);
  }
  std::vector<Value> deltas(const AlgebraicNumber& a, const Value& d, const std::vector<Poly>& fs) const {
    return cfg.parallel ? kernels::delta_batch(a, d, fs) : kernels::delta_batch_serial(a, d, fs);
  }
};

std::string count_str(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

NFPoly linear_nf(const Poly& root) { return {-root, Poly(1)}; }

// --- paper suite -----------------------------------------------------------

void check_classify(Ctx& c, VerifyReport& rep) {
  Classification k = c.chain.classify();
  rep.classification = to_string(k);
  bool tau = !c.chain.beta(c.chain.size() - 1).is_rational();
  bool ok = (k == Classification::ValueTranscendental) == tau;
  c.add("classify", "finite chains are valuation-transcendental; tau in the last value iff value-transcendental",
        ok, rep.classification + " (last value " + c.chain.beta(c.chain.size() - 1).str() + ")",
        "classification disagrees with the last value");
}

void check_common_extensions(Ctx& c, VerifyReport& rep) {
  CheckOptions co{c.cfg.samples, mix_seed(c.cfg.seed, "common_extension")};
  CommonExtensionReport ce = enumerate_common_extensions(c.chain, co);
  rep.class_count = ce.class_count;
  rep.root_count = ce.root_count;
  bool degrees_ok = true;
  std::string degree_detail;
  for (const auto& e : ce.extensions) {
    ClassRow row{e.extension_index, e.representative.center.representative().str('Y'),
                 e.representative.delta.str(), e.local_degree, e.ball_size, e.classes,
                 e.minimality.degree, e.check.ok && e.minimality.minimal};
    rep.classes.push_back(row);
    std::string name = "common_extension.ext" + std::to_string(e.extension_index);
    std::string detail = count_str(e.check.checked, "polynomials checked") + ", " +
                         count_str(e.in_field_roots.size() + 1, "roots in Q(a) checked") + ", ball " +
                         std::to_string(e.ball_size) + " of local degree " + std::to_string(e.local_degree);
    std::string witness;
    if (!e.check.ok)
      witness = e.check.family + ": " + (e.check.witness ? e.check.witness->str() : std::string()) + " " +
                e.check.detail;
    c.add(name, "w_(a, eps_last) is a common extension for every root a of the last key", e.check.ok, detail,
          witness);
    if (!e.minimality.minimal) degrees_ok = false;
    for (const auto& s : e.minimality.certificate) degree_detail += (degree_detail.empty() ? "" : "; ") + s;
  }
  c.add("common_extension.classes", "at most n common extensions, n = number of roots of the last key",
        ce.class_count >= 1 && ce.class_count <= ce.root_count,
        std::to_string(ce.class_count) + (ce.class_count == 1 ? " class" : " classes") + ", bound " +
            std::to_string(ce.class_count) + " <= " + std::to_string(ce.root_count),
        "class count " + std::to_string(ce.class_count) + " exceeds " + std::to_string(ce.root_count));
  c.add("minimal_pair.degree", "D(w) = d(w): each class has a minimal pair of degree d(w)", degrees_ok,
        degree_detail, degree_detail);
}

void check_root_lemmas(Ctx& c) {
  CheckOptions co{c.cfg.samples, mix_seed(c.cfg.seed, "root_lemmas")};
  for (std::size_t j = 0; j + 1 < c.chain.size(); ++j) {
    for (const auto& l : verify_root_lemmas(c.chain, j, co)) {
      std::string locus;
      if (l.name == "resultant_identity") locus = "prod Q_{j+1}(b) = (-1)^(n s) prod Q_j(a)";
      else if (l.name == "value_sum") locus = "sum over roots a_k of Q_{j+1} of v(Q_j(a_k)) = s beta_j";
      else if (l.name == "value_each") locus = "beta_j = v(Q_j(a)) for every root a of Q_{j+1}";
      else if (l.name == "proximity") locus = "every root of Q_{j+1} is within eps_j of a root of Q_j";
      else locus = "v(Q_j(alpha)) < beta_j away from the roots of Q_j";
      c.add("root_lemmas.L" + std::to_string(j) + "." + l.name, locus, l.ok, l.detail, l.detail);
    }
  }
}

void check_epsilon_delta(Ctx& c) {
  std::size_t last = c.chain.size() - 1;
  auto exts = c.extensions(c.chain.key(last));
  AlgebraicNumber a(exts.front());
  Value delta = c.chain.epsilon_at(last);
  PolySampler s = c.sampler("epsilon_equals_delta");
  std::vector<Poly> fs;
  for (int d = 1; d <= c.cfg.max_degree; ++d)
    for (int r = 0; r < c.cfg.samples; ++r) fs.push_back(s.monic(d));
  fs.push_back(c.chain.key(last));
  for (std::size_t i = 0; i < last; ++i) fs.push_back(c.chain.key(i));
  auto e = c.eps(fs);
  auto d = c.deltas(a, delta, fs);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (e[i] != d[i]) {
      c.add("epsilon_equals_delta", "eps(f) = max over roots b of f of min(delta, v(a - b))", false, "",
            "f = " + fs[i].str() + ": eps = " + e[i].str() + ", delta(w, f) = " + d[i].str());
      return;
    }
  }
  c.add("epsilon_equals_delta", "eps(f) = max over roots b of f of min(delta, v(a - b))", true,
        count_str(fs.size(), "polynomials") + " of degree <= " + std::to_string(c.cfg.max_degree) +
            ", center a root of " + c.chain.key(last).str() + ", delta = " + delta.str());
}

void check_max_element(Ctx& c) {
  std::size_t last = c.chain.size() - 1;
  const Poly& q = c.chain.key(last);
  auto exts = c.extensions(q);
  Value delta = c.chain.epsilon_at(last);
  PolySampler s = c.sampler("pair.max_element");
  std::size_t tested = 0;
  std::string locus = "w(X - c) <= delta with equality iff v(a - c) >= delta; max of M_w is delta";
  for (const auto& ext : exts) {
    PairOfDefinition pair{AlgebraicNumber(ext), delta};
    std::vector<Rational> cs{0, 1, -1, 2, Rational(c.chain.prime())};
    for (int r = 0; r < c.cfg.samples; ++r) cs.push_back(s.center());
    if (q.degree() == 1) cs.push_back(-q.coeff(0));
    for (const auto& x : cs) {
      ++tested;
      Value w = pair_eval(pair, Poly::linear(x)).value;
      Value dist = pair.center.valuation_at(Poly::linear(x));
      bool ok = w <= delta && ((w == delta) == (dist >= delta)) && w == c.chain.eval(Poly::linear(x));
      if (!ok) {
        c.add("pair.max_element", locus, false, "",
              "c = " + x.get_str() + ": w(X - c) = " + w.str() + ", v(a - c) = " + dist.str());
        return;
      }
    }
    for (const auto& b : small_roots_in_field(pair.center, q)) {
      ++tested;
      Value w = pair_eval(pair, linear_nf(b.representative())).value;
      Value dist = center_distance(pair.center, b);
      if (w != min(delta, dist)) {
        c.add("pair.max_element", locus, false, "",
              "b = " + b.representative().str('Y') + ": w(X - b) = " + w.str() + ", v(a - b) = " + dist.str());
        return;
      }
    }
  }
  c.add("pair.max_element", locus, true, count_str(tested, "centers tested") + ", max " + delta.str());
}

void check_value_transcendental(Ctx& c) {
  std::size_t last = c.chain.size() - 1;
  Value delta = c.chain.epsilon_at(last);
  if (c.chain.classify() != Classification::ValueTranscendental) return;
  std::string locus = "value-transcendental: max M_w has nonzero tau part and is its only non-rational element";
  PolySampler s = c.sampler("value_transcendental.unique");
  std::vector<Value> seen;
  for (int r = 0; r < c.cfg.samples; ++r) {
    Rational x = s.center();
    Value w = c.chain.eval(Poly::linear(x));
    if (!w.is_rational()) {
      c.add("value_transcendental.unique", locus, false, "",
            "c = " + x.get_str() + ": w(X - c) = " + w.str() + " is not rational");
      return;
    }
  }
  auto exts = c.extensions(c.chain.key(last));
  std::size_t nonrational = 0;
  for (const auto& ext : exts) {
    PairOfDefinition pair{AlgebraicNumber(ext), delta};
    for (const auto& b : small_roots_in_field(pair.center, c.chain.key(last))) {
      Value w = pair_eval(pair, linear_nf(b.representative())).value;
      if (!w.is_rational()) {
        ++nonrational;
        if (w != delta) {
          c.add("value_transcendental.unique", locus, false, "",
                "b = " + b.representative().str('Y') + ": w(X - b) = " + w.str() + " differs from " + delta.str());
          return;
        }
      }
    }
  }
  bool ok = !delta.is_rational() && nonrational >= 1;
  c.add("value_transcendental.unique", locus, ok,
        "max " + delta.str() + "; " + count_str(c.cfg.samples, "rational centers") + " give rational values",
        "no non-rational element found");
}

// Lemma: (a, delta) and (b, delta') define the same valuation iff delta = delta'
// and v(a - b) >= delta. The valuations are compared on X - a, X - b, the key
// and random rational polynomials.
bool same_valuation(const PairOfDefinition& p1, const PairOfDefinition& p2, const std::vector<Poly>& probes) {
  for (const NFPoly& f : {linear_nf(p1.center.representative()), linear_nf(p2.center.representative())})
    if (pair_eval(p1, f).value != pair_eval(p2, f).value) return false;
  for (const auto& g : probes)
    if (pair_eval(p1, g).value != pair_eval(p2, g).value) return false;
  return true;
}

void check_equivalence(Ctx& c) {
  std::string locus = "(a, delta) ~ (b, delta') iff delta = delta' and v(a - b) >= delta";
  PolySampler s = c.sampler("pair.equivalence");
  std::size_t positive = 0, negative = 0;
  for (std::size_t i = 0; i < c.chain.size(); ++i) {
    const Poly& q = c.chain.key(i);
    std::vector<Poly> probes{q};
    for (int r = 0; r < 10; ++r) probes.push_back(s.any(2 * q.degree() + 1));
    for (const auto& ext : c.extensions(q)) {
      AlgebraicNumber a(ext);
      for (const auto& b : small_roots_in_field(a, q)) {
        Value dist = center_distance(a, b);
        std::vector<Value> ds{c.chain.epsilon_at(i)};
        if (dist.is_finite()) {
          ds.push_back(dist);
          ds.push_back(dist + Value(Rational(1, 2)));
        }
        for (const auto& d : ds) {
          for (const auto& d2 : {d, d + Value(Rational(1, 3))}) {
            PairOfDefinition p1{a, d}, p2{b, d2};
            bool lemma = pairs_equivalent(p1, p2);
            bool actual = same_valuation(p1, p2, probes);
            (lemma ? positive : negative)++;
            if (lemma != actual) {
              c.add("pair.equivalence", locus, false, "",
                    "a = " + a.representative().str('Y') + ", b = " + b.representative().str('Y') + " in Q[Y]/(" +
                        q.str('Y') + "), delta = " + d.str() + ", delta' = " + d2.str() + ": lemma says " +
                        (lemma ? "equivalent" : "inequivalent") + ", valuations " + (actual ? "agree" : "differ"));
              return;
            }
          }
        }
      }
    }
  }
  c.add("pair.equivalence", locus, true,
        std::to_string(positive) + " equivalent and " + std::to_string(negative) +
            " inequivalent conjugate pairs, both directions");
}

// --- property suite --------------------------------------------------------

void check_laws(Ctx& c) {
  PolySampler s = c.sampler("valuation.laws");
  std::vector<std::pair<Poly, Poly>> pairs;
  int n = std::max(200, 2 * c.cfg.samples);
  for (int r = 0; r < n; ++r) pairs.emplace_back(s.any(c.cfg.max_degree), s.any(c.cfg.max_degree));
  auto res = c.cfg.parallel ? kernels::law_batch(c.chain, pairs) : kernels::law_batch_serial(c.chain, pairs);
  auto first = [&](auto pred) -> std::string {
    for (std::size_t i = 0; i < res.size(); ++i)
      if (!pred(res[i]))
        return "f = " + pairs[i].first.str() + ", g = " + pairs[i].second.str() +
               (res[i].failed_level >= 0 ? ", truncation level " + std::to_string(res[i].failed_level) : "");
    return {};
  };
  std::string detail = count_str(pairs.size(), "pairs") + ", eval and " +
                       count_str(c.chain.size(), "truncations");
  std::string w = first([](const auto& o) { return o.multiplicative; });
  c.add("valuation.multiplicative", "w(fg) = w(f) + w(g) for w and every truncation", w.empty(), detail, w);
  w = first([](const auto& o) { return o.ultrametric; });
  c.add("valuation.ultrametric", "w(f + g) >= min(w(f), w(g)) for w and every truncation", w.empty(), detail, w);
  w = first([](const auto& o) { return o.complete; });
  c.add("truncation.completeness", "w_{Q_i}(f) <= w(f) with equality for some i", w.empty(),
        count_str(2 * pairs.size(), "polynomials"), w);
}

void check_key_definitional(Ctx& c) {
  for (std::size_t i = 0; i < c.chain.size(); ++i) {
    const Poly& q = c.chain.key(i);
    if (q.degree() < 2) continue;
    Value eq = c.chain.epsilon(q);
    PolySampler s = c.sampler("key.definitional." + std::to_string(i));
    std::vector<Poly> fs;
    for (int d = 1; d < q.degree(); ++d)
      for (int r = 0; r < c.cfg.samples; ++r) fs.push_back(s.monic(d));
    auto e = c.eps(fs);
    std::string witness;
    for (std::size_t k = 0; k < fs.size() && witness.empty(); ++k)
      if (!(e[k] < eq)) witness = "f = " + fs[k].str() + ": eps(f) = " + e[k].str() + " >= eps(Q) = " + eq.str();
    c.add("key.definitional.L" + std::to_string(i), "eps(f) < eps(Q) for every monic f with deg f < deg Q",
          witness.empty(), count_str(fs.size(), "polynomials") + ", eps(Q" + std::to_string(i) + ") = " + eq.str(),
          witness);
  }
}

void check_monotonicity(Ctx& c) {
  std::string witness;
  for (std::size_t i = 1; i < c.chain.size() && witness.empty(); ++i) {
    if (!(c.chain.beta(i - 1) < c.chain.beta(i))) witness = "beta not increasing at level " + std::to_string(i);
    else if (!(c.chain.epsilon_at(i - 1) < c.chain.epsilon_at(i)))
      witness = "epsilon not increasing at level " + std::to_string(i);
    else if (c.chain.degree(i) % c.chain.degree(i - 1) != 0)
      witness = "degree " + std::to_string(c.chain.degree(i)) + " not a multiple of " +
                std::to_string(c.chain.degree(i - 1));
  }
  for (std::size_t i = 0; i < c.chain.size() && witness.empty(); ++i)
    if (c.chain.epsilon(c.chain.key(i)) != c.chain.epsilon_at(i))
      witness = "eps(Q" + std::to_string(i) + ") changed after later augmentations";
  std::string betas, epss;
  for (std::size_t i = 0; i < c.chain.size(); ++i) {
    betas += (i ? " < " : "") + c.chain.beta(i).str();
    epss += (i ? " < " : "") + c.chain.epsilon_at(i).str();
  }
  c.add("chain.monotonicity", "beta_i and eps_i strictly increase; deg Q_i divides deg Q_{i+1}", witness.empty(),
        "beta: " + betas + "; eps: " + epss, witness);
}

void check_pair_laws(Ctx& c) {
  std::size_t last = c.chain.size() - 1;
  auto exts = c.extensions(c.chain.key(last));
  PairOfDefinition pair{AlgebraicNumber(exts.front()), c.chain.epsilon_at(last)};
  PolySampler s = c.sampler("pair.valuation_law");
  std::string witness;
  int n = c.cfg.samples;
  for (int r = 0; r < n && witness.empty(); ++r) {
    Poly f = s.any(3), g = s.any(3);
    Value vf = pair_eval(pair, f).value, vg = pair_eval(pair, g).value;
    if (pair_eval(pair, f * g).value != vf + vg) witness = "product: f = " + f.str() + ", g = " + g.str();
    else if (!(f + g).is_zero() && pair_eval(pair, f + g).value < min(vf, vg)) witness = "sum: f = " + f.str() + ", g = " + g.str();
  }
  c.add("pair.valuation_law", "w_(a, delta) is a valuation", witness.empty(), count_str(n, "pairs"), witness);
}

void check_equivalence_relation(Ctx& c) {
  std::size_t last = c.chain.size() - 1;
  const Poly& q = c.chain.key(last);
  std::string witness;
  std::size_t triples = 0;
  for (const auto& ext : c.extensions(q)) {
    AlgebraicNumber a(ext);
    auto roots = small_roots_in_field(a, q);
    std::vector<Value> ds{c.chain.epsilon_at(last), c.chain.beta(last)};
    for (const auto& b : roots)
      if (b.representative() != a.representative()) ds.push_back(center_distance(a, b));
    std::vector<PairOfDefinition> ps;
    for (const auto& r : roots)
      for (const auto& d : ds) ps.push_back({r, d});
    for (std::size_t i = 0; i < ps.size() && witness.empty(); ++i) {
      if (!pairs_equivalent(ps[i], ps[i])) witness = "not reflexive";
      for (std::size_t j = 0; j < ps.size() && witness.empty(); ++j) {
        bool ij = pairs_equivalent(ps[i], ps[j]);
        if (ij != pairs_equivalent(ps[j], ps[i])) witness = "not symmetric";
        for (std::size_t k = 0; k < ps.size() && witness.empty(); ++k) {
          ++triples;
          if (ij && pairs_equivalent(ps[j], ps[k]) && !pairs_equivalent(ps[i], ps[k])) witness = "not transitive";
        }
      }
    }
  }
  c.add("pair.equivalence_relation", "pair equivalence is reflexive, symmetric and transitive", witness.empty(),
        count_str(triples, "triples"), witness);
}

void check_extension_props(Ctx& c) {
  std::string witness;
  std::string detail;
  for (std::size_t i = 0; i < c.chain.size() && witness.empty(); ++i) {
    auto exts = c.extensions(c.chain.key(i));
    int sum = 0;
    for (const auto& e : exts) sum += e->local_degree();
    detail += (i ? ", " : "") + std::to_string(sum) + "/" + std::to_string(c.chain.degree(i));
    if (sum != c.chain.degree(i)) witness = "sum e f = " + std::to_string(sum) + " for " + c.chain.key(i).str();
  }
  c.add("extensions.degree_sum", "sum of e f over the extensions equals deg m", witness.empty(),
        "per key " + detail, witness);

  std::size_t last = c.chain.size() - 1;
  const Poly& m = c.chain.key(last);
  auto exts = c.extensions(m);
  PolySampler s = c.sampler("extensions.laws");
  witness.clear();
  std::size_t n = 0;
  for (const auto& ext : exts) {
    for (int r = 0; r < c.cfg.samples && witness.empty(); ++r, ++n) {
      Poly f = s.any(2 * m.degree()), g = s.any(2 * m.degree());
      Value vf = ext->valuation(f), vg = ext->valuation(g);
      if (ext->valuation(f * g) != vf + vg) witness = "product: f = " + f.str() + ", g = " + g.str();
      else if (ext->valuation(f + g) < min(vf, vg)) witness = "sum: f = " + f.str() + ", g = " + g.str();
    }
  }
  c.add("extensions.valuation_law", "the extension is a valuation on Q[Y]/(m)", witness.empty(),
        count_str(n, "pairs"), witness);

  witness.clear();
  n = 0;
  for (int r = 0; r < c.cfg.samples && witness.empty(); ++r) {
    Poly g = s.any(std::max(0, m.degree() - 1));
    if (g.is_constant()) continue;
    ++n;
    std::vector<Value> ours;
    for (const auto& ext : exts) {
      Value v = ext->valuation(g);
      for (int k = 0; k < ext->local_degree(); ++k) ours.push_back(v);
    }
    std::sort(ours.begin(), ours.end());
    auto oracle = root_valuation_multiset(characteristic_polynomial(m, g), c.chain.prime());
    if (ours != oracle) witness = "g = " + g.str();
  }
  c.add("extensions.charpoly", "values over the extensions, with multiplicity e f, match the Newton polygon of the characteristic polynomial",
        witness.empty(), count_str(n, "elements"), witness);
}

void check_kernels(Ctx& c) {
  PolySampler s = c.sampler("kernels");
  std::vector<Poly> fs;
  for (int r = 0; r < c.cfg.samples; ++r) fs.push_back(s.monic(1 + r % c.cfg.max_degree));
  bool ok = kernels::eval_batch(c.chain, fs) == kernels::eval_batch_serial(c.chain, fs) &&
            kernels::epsilon_batch(c.chain, fs) == kernels::epsilon_batch_serial(c.chain, fs);
  c.add("kernels.parallel_matches_serial", "parallel batch kernels agree with the serial reference", ok,
        count_str(fs.size(), "polynomials") + ", " + std::to_string(kernels::parallel_threads()) + " threads",
        "parallel and serial results differ");
}

}  // namespace

VerifyReport run_verify(const Chain& chain, const VerifyConfig& config) {
  if (chain.empty()) throw std::invalid_argument("verify needs a non-empty chain");
  if (config.suite != "paper" && config.suite != "props" && config.suite != "all")
    throw std::invalid_argument("unknown suite '" + config.suite + "' (paper, props, all)");
  VerifyReport rep;
  rep.prime = chain.prime();
  rep.chain = print_chain(chain);
  rep.suite = config.suite;
  rep.seed = config.seed;
  rep.samples = config.samples;
  rep.d = chain.d();
  Ctx c{chain, config, rep.checks, {}};
  c.eo.max_field_degree = chain.max_field_degree();
  bool paper = config.suite != "props";
  bool props = config.suite != "paper";
  if (paper) {
    check_classify(c, rep);
    check_common_extensions(c, rep);
    check_root_lemmas(c);
    check_epsilon_delta(c);
    check_max_element(c);
    check_value_transcendental(c);
    check_equivalence(c);
  } else {
    rep.classification = to_string(chain.classify());
  }
  if (props) {
    check_laws(c);
    check_key_definitional(c);
    check_monotonicity(c);
    check_pair_laws(c);
    check_equivalence_relation(c);
    check_extension_props(c);
    check_kernels(c);
  }
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return rep;
}

}  // namespace vforge
