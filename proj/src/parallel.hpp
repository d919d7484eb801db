#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace boxph::detail {

using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

/// Runs work(i, out) for i in [0, count) on the available hardware threads
/// and concatenates the per-thread outputs. Items are dealt round-robin so
/// triangular workloads stay balanced. Output order is unspecified.
template <class Work>
std::vector<IndexPair> collect_pairs(std::size_t count, Work work) {
    const std::size_t threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, count));
    if (threads <= 1) {
        std::vector<IndexPair> out;
        for (std::size_t i = 0; i < count; ++i) work(i, out);
        return out;
    }
    std::vector<std::vector<IndexPair>> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < count; i += threads) work(i, parts[t]);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<IndexPair> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

}  // namespace boxph::detail
