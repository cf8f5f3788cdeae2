#include "obslab/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace obslab {

int thread_count() {
    static const int count = [] {
        const char* env = std::getenv("OBSLAB_THREADS");
        if (!env) return 1;
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            return 1;
        }
    }();
    return count;
}

void parallel_for(int n, const std::function<void(int, int)>& body) {
    const int workers = std::min(thread_count(), std::max(1, n));
    if (workers <= 1 || n <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int begin = w * chunk;
        const int end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(body, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace obslab
