#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace mayer {

// Splits [0, total) into `workers` contiguous chunks, runs fn(lo, hi) per
// chunk, and returns the results in chunk order. workers == 1 runs inline.
// Meant for associative exact reductions, so the combined result does not
// depend on the worker count.
template <class Result, class ChunkFn>
std::vector<Result> run_chunked(std::uint64_t total, int workers, ChunkFn fn) {
    if (workers < 1) workers = 1;
    const auto w = static_cast<std::uint64_t>(workers);
    std::vector<Result> results;
    if (workers == 1 || total <= 1) {
        results.push_back(fn(std::uint64_t{0}, total));
        return results;
    }
    results.resize(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::uint64_t k = 0; k < w; ++k) {
        const std::uint64_t lo = total / w * k + std::min(k, total % w);
        const std::uint64_t hi = total / w * (k + 1) + std::min(k + 1, total % w);
        threads.emplace_back([&, k, lo, hi] {
            try {
                results[k] = fn(lo, hi);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

} // namespace mayer
