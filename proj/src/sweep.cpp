#include "klab/sweep.hpp"

#include <mutex>

#include <json.hpp>

namespace klab {

std::string SweepRecord::to_json_line() const {
    nlohmann::json j;
    j["seed"] = seed;
    j["n"] = n;
    j["d"] = d;
    j["re"] = z.real();
    j["im"] = z.imag();
    j["metric"] = metric;
    j["values"] = values;
    if (r >= 0) j["r"] = r;
    if (alpha > 0.0) j["alpha"] = alpha;
    j["wall_s"] = wall_seconds;
    return j.dump();
}

int default_thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int n_workers = std::min(threads, count);
    pool.reserve(n_workers);
    for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace klab
