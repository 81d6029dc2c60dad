#pragma once

// Contiguous sharding of an index range over threads.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace rootnum::detail {

/// Runs work(lo', hi') on up to `jobs` disjoint chunks of [lo, hi] and folds
/// the results with merge(acc, part) in chunk order.
template <class T, class Work, class Merge>
T shard(std::int64_t lo, std::int64_t hi, unsigned jobs, Work&& work, Merge&& merge) {
    if (hi < lo) return T{};
    const std::int64_t span = hi - lo + 1;
    const std::int64_t n = std::max<std::int64_t>(1, std::min<std::int64_t>(jobs, span));
    if (n == 1) return work(lo, hi);
    std::vector<T> parts(static_cast<std::size_t>(n));
    std::vector<std::exception_ptr> errors(parts.size());
    std::vector<std::thread> threads;
    for (std::int64_t s = 0; s < n; ++s) {
        const std::int64_t a = lo + span * s / n, b = lo + span * (s + 1) / n - 1;
        threads.emplace_back([&, s, a, b] {
            try {
                parts[static_cast<std::size_t>(s)] = work(a, b);
            } catch (...) {
                errors[static_cast<std::size_t>(s)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    T total = std::move(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) merge(total, parts[i]);
    return total;
}

}  // namespace rootnum::detail
