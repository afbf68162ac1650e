#include "codent/util.hpp"

#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

#include <sys/resource.h>

namespace codent {

unsigned resolve_threads(unsigned requested) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CODENT_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap > 0 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    return n;
}

void parallel_chunks(size_t total, unsigned threads,
                     const std::function<void(size_t, size_t, unsigned)>& fn) {
    if (total == 0) return;
    if (threads <= 1 || total < 2) {
        fn(0, total, 0);
        return;
    }
    if (threads > total) threads = static_cast<unsigned>(total);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        size_t begin = t * chunk;
        size_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end, t] {
            try {
                fn(begin, end, t);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

long peak_rss_kb() {
    struct rusage ru;
    getrusage(RUSAGE_SELF, &ru);
    return ru.ru_maxrss;
}

} // namespace codent
