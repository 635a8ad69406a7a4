#include "vforge/kernels.hpp"

#include <omp.h>

#include <exception>
#include <mutex>

namespace vforge::kernels {

namespace {

template <class Out, class In, class Fn>
std::vector<Out> map_serial(const std::vector<In>& in, Fn fn) {
  std::vector<Out> out;
  out.reserve(in.size());
  for (const auto& x : in) out.push_back(fn(x));
  return out;
}

template <class Out, class In, class Fn>
std::vector<Out> map_parallel(const std::vector<In>& in, Fn fn) {
  std::vector<Out> out(in.size());
  std::exception_ptr error;
  std::mutex mu;
  const long n = static_cast<long>(in.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = fn(in[i]);
    } catch (...) {
      std::lock_guard lk(mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

Value delta_one(const AlgebraicNumber& center, const Value& delta, const Poly& f) {
  return delta_via_roots(center, delta, f);
}

LawOutcome law_one(const Chain& chain, const std::pair<Poly, Poly>& fg) {
  const auto& [f, g] = fg;
  LawOutcome o;
  Poly prod = f * g;
  Poly sum = f + g;
  auto check = [&](int level, auto&& w) {
    Value wf = w(f), wg = w(g);
    if (w(prod) != wf + wg) o.multiplicative = false;
    if (w(sum) < min(wf, wg)) o.ultrametric = false;
    if ((!o.multiplicative || !o.ultrametric) && o.failed_level == -1 && level >= 0) o.failed_level = level;
  };
  check(-1, [&](const Poly& h) { return chain.eval(h); });
  for (std::size_t i = 0; i < chain.size(); ++i)
    check(static_cast<int>(i), [&](const Poly& h) { return chain.truncate(i, h); });
  for (const Poly* h : {&f, &g}) {
    Value w = chain.eval(*h);
    Value best = chain.truncate(0, *h);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      Value t = chain.truncate(i, *h);
      if (t > w) o.complete = false;
      best = max(best, t);
    }
    if (best != w) o.complete = false;
  }
  return o;
}

}  // namespace

bool operator==(const LawOutcome& a, const LawOutcome& b) {
  return a.multiplicative == b.multiplicative && a.ultrametric == b.ultrametric && a.complete == b.complete &&
         a.failed_level == b.failed_level;
}

std::vector<Value> eval_batch_serial(const Chain& chain, const std::vector<Poly>& fs) {
  return map_serial<Value>(fs, [&](const Poly& f) { return chain.eval(f); });
}

std::vector<Value> eval_batch(const Chain& chain, const std::vector<Poly>& fs) {
  return map_parallel<Value>(fs, [&](const Poly& f) { return chain.eval(f); });
}

std::vector<Value> epsilon_batch_serial(const Chain& chain, const std::vector<Poly>& fs) {
  return map_serial<Value>(fs, [&](const Poly& f) { return chain.epsilon(f); });
}

std::vector<Value> epsilon_batch(const Chain& chain, const std::vector<Poly>& fs) {
  return map_parallel<Value>(fs, [&](const Poly& f) { return chain.epsilon(f); });
}

std::vector<Value> delta_batch_serial(const AlgebraicNumber& center, const Value& delta,
                                      const std::vector<Poly>& fs) {
  return map_serial<Value>(fs, [&](const Poly& f) { return delta_one(center, delta, f); });
}

std::vector<Value> delta_batch(const AlgebraicNumber& center, const Value& delta, const std::vector<Poly>& fs) {
  return map_parallel<Value>(fs, [&](const Poly& f) { return delta_one(center, delta, f); });
}

std::vector<LawOutcome> law_batch_serial(const Chain& chain, const std::vector<std::pair<Poly, Poly>>& pairs) {
  return map_serial<LawOutcome>(pairs, [&](const auto& fg) { return law_one(chain, fg); });
}

std::vector<LawOutcome> law_batch(const Chain& chain, const std::vector<std::pair<Poly, Poly>>& pairs) {
  return map_parallel<LawOutcome>(pairs, [&](const auto& fg) { return law_one(chain, fg); });
}

int parallel_threads() { return omp_get_max_threads(); }

}  // namespace vforge::kernels
