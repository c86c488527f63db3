#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace pacman {

// Worker count: PACMAN_WORKERS if set to a positive integer, otherwise the
// hardware concurrency.
unsigned worker_count();

// Splits [0, total) into fixed chunks, evaluates fn(begin, end) for each on
// a worker pool, and returns the partials in chunk order. The chunking does
// not depend on the worker count, so ordered folds of the result are
// reproducible bit-for-bit.
template <class Fn>
auto parallel_chunks(std::uint64_t total, std::uint64_t chunk, Fn fn) {
    using Partial = decltype(fn(std::uint64_t{}, std::uint64_t{}));
    const std::uint64_t chunks = total == 0 ? 0 : (total + chunk - 1) / chunk;
    std::vector<Partial> partials(chunks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};

    auto work = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= chunks || failed.load()) return;
            try {
                const std::uint64_t begin = c * chunk;
                partials[c] = fn(begin, std::min(total, begin + chunk));
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(chunks, 1)));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return partials;
}

}  // namespace pacman
