#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sombor {

// Number of worker threads to actually use: `requested` if nonzero
// (capped by task_count), otherwise hardware concurrency.
inline unsigned effective_jobs(unsigned requested, std::size_t task_count) {
    unsigned jobs = requested != 0 ? requested : std::thread::hardware_concurrency();
    if (jobs == 0) {
        jobs = 1;
    }
    if (task_count < jobs) {
        jobs = static_cast<unsigned>(task_count);
    }
    return jobs == 0 ? 1 : jobs;
}

// Runs fn(i) for every i in [0, count) on up to `jobs` threads.  Tasks are
// claimed through a shared counter, so the assignment of tasks to threads
// is nondeterministic -- fn must write its result into a slot addressed by
// i alone.  Any ordered reduction over the slots afterwards is then
// independent of the thread count.  The first exception thrown by fn is
// rethrown on the calling thread after all workers finish.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    const unsigned workers = effective_jobs(jobs, count);
    if (count == 0) {
        return;
    }
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back(work);
    }
    for (auto& thread : pool) {
        thread.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

} // namespace sombor
