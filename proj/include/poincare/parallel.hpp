#pragma once

// Deterministic parallel evaluation over an index range. Work is split into
// contiguous chunks across worker threads; results are stored by index and
// reduced by pairwise summation in index order, so the outcome does not depend
// on the number of workers or on scheduling.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace poincare::parallel {

using Complex = std::complex<double>;

/// Number of workers: hardware concurrency, capped by the POINCARE_THREADS
/// environment variable when it holds a positive integer.
unsigned worker_count();

/// Evaluates f(i) for i in [0, n). If any call throws, the exception raised at
/// the smallest index is rethrown after all workers finish.
std::vector<Complex> map(std::size_t n, const std::function<Complex(std::size_t)>& f);

/// Pairwise sum in index order.
Complex pairwise_sum(const std::vector<Complex>& v);

/// pairwise_sum(map(n, f)).
Complex sum(std::size_t n, const std::function<Complex(std::size_t)>& f);

}  // namespace poincare::parallel
