#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "klab/green_matrix.hpp"

namespace klab {

// One row of an experiment; self-describing and serializable as one JSON line.
struct SweepRecord {
    std::uint64_t seed = 0;
    int n = 0;
    int d = 0;
    Complex z;
    std::string metric;
    std::map<std::string, double> values;
    int r = -1;
    double alpha = 0.0;
    double wall_seconds = 0.0;

    std::string to_json_line() const;
};

// Runs fn(0..count-1) on a worker pool.  Work items must be independent;
// callers store results by index so the merge order never depends on the
// thread count.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

int default_thread_count();

}  // namespace klab
