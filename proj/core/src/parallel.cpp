#include "hrx/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace hrx {

namespace {
std::atomic<int> g_threads{0};

int detect_threads() {
    if (const char* env = std::getenv("HRX_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : int(hc);
}
}  // namespace

int thread_count() {
    int n = g_threads.load(std::memory_order_relaxed);
    if (n == 0) {
        n = detect_threads();
        g_threads.store(n, std::memory_order_relaxed);
    }
    return n;
}

void set_thread_count(int n) { g_threads.store(n > 0 ? n : 0, std::memory_order_relaxed); }

void parallel_for_planes(int nz, const std::function<void(int)>& fn) {
    const int nt = std::min(thread_count(), nz);
    if (nt <= 1) {
        for (int k = 0; k < nz; ++k) fn(k);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::atomic<int> next{0};
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                int k = next.fetch_add(1, std::memory_order_relaxed);
                if (k >= nz) break;
                fn(k);
            }
        });
    }
    for (auto& th : pool) th.join();
}

double plane_sum(int nz, const std::function<double(int)>& plane_fn) {
    std::vector<double> partial(nz, 0.0);
    parallel_for_planes(nz, [&](int k) { partial[k] = plane_fn(k); });
    double s = 0.0;
    for (int k = 0; k < nz; ++k) s += partial[k];  // fixed combine order
    return s;
}

}  // namespace hrx
