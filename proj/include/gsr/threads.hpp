#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "gsr/common.hpp"

namespace gsr {

// Persistent worker pool for row-partitioned kernels. Every output row is
// written by exactly one worker with a fixed inner-loop order, so results are
// bit-identical for any worker count.
class ThreadPool {
public:
    explicit ThreadPool(int threads);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    int size() const { return static_cast<int>(workers_.size()) + 1; }

    // Runs fn(begin, end) over [0, n) in contiguous chunks. The calling
    // thread participates. Exceptions inside fn terminate (kernels do not
    // throw).
    void parallel_for(index_t n, const std::function<void(index_t, index_t)>& fn);

private:
    struct Task {
        const std::function<void(index_t, index_t)>* fn = nullptr;
        index_t begin = 0;
        index_t end = 0;
    };

    void worker_loop(int id);

    std::vector<std::thread> workers_;
    std::mutex mu_;
    std::condition_variable cv_work_;
    std::condition_variable cv_done_;
    std::vector<Task> tasks_;
    std::uint64_t generation_ = 0;
    int pending_ = 0;
    bool stop_ = false;
};

// Serial fallback used wherever no pool is supplied.
void parallel_for(ThreadPool* pool, index_t n, const std::function<void(index_t, index_t)>& fn);

}  // namespace gsr
