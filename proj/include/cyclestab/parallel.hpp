#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace cyclestab {

// Applies f to every item on a small worker pool; results come back in input
// order, so output is independent of scheduling. Items must be independent.
template <class In, class F>
auto parallel_map(const std::vector<In>& items, F f)
    -> std::vector<std::invoke_result_t<F, const In&>> {
    using Out = std::invoke_result_t<F, const In&>;
    std::vector<Out> out(items.size());
    if (items.empty()) return out;

    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers > items.size()) workers = static_cast<unsigned>(items.size());

    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                try {
                    out[i] = f(items[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace cyclestab
