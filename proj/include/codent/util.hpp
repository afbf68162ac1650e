#pragma once

#include <chrono>
#include <cstddef>
#include <functional>

namespace codent {

/// Worker count: `requested` when positive, otherwise hardware concurrency,
/// both capped by the CODENT_THREADS environment variable.
unsigned resolve_threads(unsigned requested = 0);

/// Run fn(begin, end, thread_index) over [0, total) split into contiguous
/// chunks, one per worker.  Joins before returning; rethrows the first
/// worker exception.
void parallel_chunks(size_t total, unsigned threads,
                     const std::function<void(size_t, size_t, unsigned)>& fn);

/// Peak resident set size in kilobytes (high-water mark for the process).
long peak_rss_kb();

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace codent
