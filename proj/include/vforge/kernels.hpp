#pragma once

#include <utility>
#include <vector>

#include "vforge/chain.hpp"
#include "vforge/extensions.hpp"

namespace vforge::kernels {

// Batch kernels. Each has a serial reference; the parallel version (OpenMP)
// returns identical results in the same order. Exceptions thrown by a work
// item are rethrown after the loop.

std::vector<Value> eval_batch_serial(const Chain& chain, const std::vector<Poly>& fs);
std::vector<Value> eval_batch(const Chain& chain, const std::vector<Poly>& fs);

std::vector<Value> epsilon_batch_serial(const Chain& chain, const std::vector<Poly>& fs);
std::vector<Value> epsilon_batch(const Chain& chain, const std::vector<Poly>& fs);

// max over roots b of f of min(delta, v(center - b)).
std::vector<Value> delta_batch_serial(const AlgebraicNumber& center, const Value& delta,
                                      const std::vector<Poly>& fs);
std::vector<Value> delta_batch(const AlgebraicNumber& center, const Value& delta, const std::vector<Poly>& fs);

struct LawOutcome {
  bool multiplicative = true;  // eval and every truncation
  bool ultrametric = true;
  bool complete = true;        // max_i truncate_i(f) = eval(f) for f and g
  int failed_level = -1;       // -1: eval itself, else truncation level
};

std::vector<LawOutcome> law_batch_serial(const Chain& chain, const std::vector<std::pair<Poly, Poly>>& pairs);
std::vector<LawOutcome> law_batch(const Chain& chain, const std::vector<std::pair<Poly, Poly>>& pairs);

bool operator==(const LawOutcome& a, const LawOutcome& b);

// Worker threads the parallel kernels use (OpenMP max threads).
int parallel_threads();

}  // namespace vforge::kernels
