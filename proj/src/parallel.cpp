#include "ppf/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace ppf {

unsigned default_jobs() {
    if (const char* env = std::getenv("PPF_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void run_chunks(std::uint64_t total, std::uint64_t chunk_size, unsigned jobs,
                const std::function<bool(std::uint64_t)>& skip,
                const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& body,
                const std::function<void(std::uint64_t)>& done) {
    if (total == 0) return;
    if (jobs == 0) jobs = default_jobs();
    const std::uint64_t nchunks = (total + chunk_size - 1) / chunk_size;
    std::atomic<std::uint64_t> next{0};
    std::mutex agg;

    auto worker = [&]() {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= nchunks) return;
            if (skip && skip(i)) continue;
            const std::uint64_t lo = i * chunk_size;
            const std::uint64_t hi = std::min(total, lo + chunk_size);
            body(i, lo, hi);
            if (done) {
                std::lock_guard<std::mutex> lk(agg);
                done(i);
            }
        }
    };

    if (jobs == 1 || nchunks == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace ppf
