#include "ranksyz/threading.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace ranksyz {

namespace {
std::atomic<unsigned> g_threads{0};
}

void set_thread_count(unsigned n) { g_threads.store(n); }

unsigned thread_count() {
    unsigned n = g_threads.load();
    if (n == 0) {
        n = std::thread::hardware_concurrency();
        if (n == 0) n = 1;
    }
    return n;
}

void parallel_for(size_t begin, size_t end, const std::function<void(size_t, size_t)>& fn) {
    if (begin >= end) return;
    const size_t total = end - begin;
    const unsigned workers = thread_count();
    if (workers <= 1 || total < 2) {
        fn(begin, end);
        return;
    }
    const size_t nblocks = std::min<size_t>(workers, total);
    const size_t chunk = (total + nblocks - 1) / nblocks;
    std::vector<std::thread> pool;
    pool.reserve(nblocks);
    for (size_t b = 0; b < nblocks; ++b) {
        size_t lo = begin + b * chunk;
        size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace ranksyz
