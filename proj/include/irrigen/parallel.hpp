#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace irrigen {

/// Worker-count policy for ensemble reductions and multi-start optimization.
/// threads == 0 resolves to hardware concurrency capped by IRRIGEN_THREADS;
/// threads == 1 is the deterministic sequential mode.
struct ExecutionPolicy {
    unsigned threads = 0;

    unsigned resolve() const {
        if (threads > 0) return threads;
        unsigned n = std::max(1u, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("IRRIGEN_THREADS")) {
            char* end = nullptr;
            const unsigned long cap = std::strtoul(env, &end, 10);
            if (end != env && *end == '\0' && cap > 0)
                n = static_cast<unsigned>(std::min<unsigned long>(n, cap));
        }
        return n;
    }

    static ExecutionPolicy sequential() { return ExecutionPolicy{1}; }
};

/// Chunked reduction over [0, n). Each worker folds a contiguous chunk with
/// `fold(acc, i)`; chunk results are combined in chunk order, so the value
/// depends only on the chunk count, never on scheduling.
template <class Acc, class Fold, class Combine>
Acc chunked_reduce(std::size_t n, Acc init, Fold fold, Combine combine,
                   const ExecutionPolicy& policy = {}) {
    const unsigned workers = policy.resolve();
    if (workers <= 1 || n < 4096) {
        Acc acc = init;
        for (std::size_t i = 0; i < n; ++i) fold(acc, i);
        return acc;
    }
    const std::size_t chunks = std::min<std::size_t>(workers, n);
    std::vector<Acc> partial(chunks, init);
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        pool.emplace_back([&, c] {
            try {
                const std::size_t lo = n * c / chunks;
                const std::size_t hi = n * (c + 1) / chunks;
                Acc acc = init;
                for (std::size_t i = lo; i < hi; ++i) fold(acc, i);
                partial[c] = acc;
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Acc acc = init;
    for (auto& p : partial) combine(acc, p);
    return acc;
}

/// Order-stable parallel sum of term(i) for i in [0, n).
template <class Term>
double chunked_sum(std::size_t n, Term term, const ExecutionPolicy& policy = {}) {
    return chunked_reduce<double>(
        n, 0.0, [&](double& acc, std::size_t i) { acc += term(i); },
        [](double& acc, const double& p) { acc += p; }, policy);
}

}  // namespace irrigen
