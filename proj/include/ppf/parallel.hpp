#ifndef PPF_PARALLEL_HPP
#define PPF_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace ppf {

// PPF_JOBS environment variable, else hardware concurrency, else 1.
unsigned default_jobs();

// Splits [0, total) into fixed chunks and processes them on `jobs`
// threads. Chunks are claimed through an atomic counter; `skip` filters
// already-done chunks, `body` does the work, and `done` runs under a
// shared mutex after each chunk (for aggregation / checkpointing).
// Aggregation must not depend on completion order.
void run_chunks(std::uint64_t total, std::uint64_t chunk_size, unsigned jobs,
                const std::function<bool(std::uint64_t)>& skip,
                const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& body,
                const std::function<void(std::uint64_t)>& done);

} // namespace ppf

#endif
