#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace flowcent::detail {

// Runs body(i) for i in [0, count) on up to `jobs` threads. If any call
// throws, the exception from the lowest index is rethrown so failures do not
// depend on scheduling.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
    std::vector<std::exception_ptr> errors(count);
    auto work = [&](std::atomic<std::size_t>& next) {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::atomic<std::size_t> next{0};
    const unsigned width = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (width <= 1) {
        work(next);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < width; ++t) pool.emplace_back([&] { work(next); });
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace flowcent::detail
