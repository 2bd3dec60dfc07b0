#include "poincare/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>

namespace poincare::parallel {

namespace {

Complex pairwise(const std::vector<Complex>& v, std::size_t lo, std::size_t hi) {
    if (hi == lo) return 0.0;
    if (hi - lo == 1) return v[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise(v, lo, mid) + pairwise(v, mid, hi);
}

}  // namespace

unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("POINCARE_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

std::vector<Complex> map(std::size_t n, const std::function<Complex(std::size_t)>& f) {
    std::vector<Complex> out(n);
    const std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, n / 64));
    std::vector<std::exception_ptr> errors(workers);

    auto run = [&](std::size_t w) {
        const std::size_t lo = n * w / workers;
        const std::size_t hi = n * (w + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) {
            try {
                out[i] = f(i);
            } catch (...) {
                errors[w] = std::current_exception();
                return;
            }
        }
    };

    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers - 1);
        for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run, w);
        run(0);
        for (auto& t : pool) t.join();
    }
    // Chunks are ordered, so the first failing chunk holds the smallest index.
    for (std::size_t w = 0; w < workers; ++w)
        if (errors[w]) std::rethrow_exception(errors[w]);
    return out;
}

Complex pairwise_sum(const std::vector<Complex>& v) { return pairwise(v, 0, v.size()); }

Complex sum(std::size_t n, const std::function<Complex(std::size_t)>& f) { return pairwise_sum(map(n, f)); }

}  // namespace poincare::parallel
