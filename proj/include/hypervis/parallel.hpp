#ifndef HYPERVIS_PARALLEL_HPP
#define HYPERVIS_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace hypervis {

/// Worker count: explicit argument > HYPERVIS_THREADS > hardware concurrency.
int resolve_thread_count(int requested = 0);

/// Runs work(chunk_index, begin, end, partial) over [0, total) split into
/// fixed-size chunks. Workers claim chunks dynamically, but each chunk's
/// partial lands at its own index, so a sequential combine over the returned
/// vector is independent of the worker count.
template <typename Partial, typename Work>
std::vector<Partial> run_chunks(std::uint64_t total, std::uint64_t chunk_size, int threads,
                                Work work) {
    std::uint64_t nchunks = chunk_size ? (total + chunk_size - 1) / chunk_size : 0;
    std::vector<Partial> partials(nchunks);
    if (nchunks == 0) return partials;

    threads = resolve_thread_count(threads);
    if (threads < 2 || nchunks == 1) {
        for (std::uint64_t c = 0; c < nchunks; ++c)
            work(c, c * chunk_size, std::min(total, (c + 1) * chunk_size), partials[c]);
        return partials;
    }

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            work(c, c * chunk_size, std::min(total, (c + 1) * chunk_size), partials[c]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return partials;
}

} // namespace hypervis

#endif
