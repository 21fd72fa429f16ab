#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace fpp::detail {

// Splits [0, total) into at most `jobs` contiguous chunks, runs
// fn(begin, end) on each in its own thread and returns the results in chunk
// order, so merging them left to right preserves enumeration order.
template <class Result, class Fn>
std::vector<Result> run_chunks(std::uint64_t total, unsigned jobs, Fn fn)
{
    const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, total));
    std::vector<Result> results(chunks);
    if (chunks == 1) {
        results[0] = fn(std::uint64_t{0}, total);
        return results;
    }

    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = total * c / chunks;
        const std::uint64_t end = total * (c + 1) / chunks;
        workers.emplace_back([&, c, begin, end] {
            try {
                results[c] = fn(begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& w : workers)
        w.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

}  // namespace fpp::detail
