// Copyright 2026 The bellcoh Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bellcoh {

/// Worker count to use: `requested` if positive, else hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks and calls fn(chunk, begin, end)
/// for each, on up to `threads` workers. Chunk boundaries depend only on
/// `count` and the chunk count, so callers that write results by chunk get
/// the same output for any scheduling. The first exception thrown by a
/// worker is rethrown on the calling thread.
template <typename Fn>
void parallel_chunks(std::size_t count, std::size_t chunks, unsigned threads, Fn &&fn) {
    chunks = std::max<std::size_t>(1, std::min(chunks, count));
    auto bounds = [&](std::size_t c) { return c * count / chunks; };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));

    if (threads == 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            fn(c, bounds(c), bounds(c + 1));
        }
        return;
    }

    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t c = t; c < chunks; c += threads) {
                    try {
                        fn(c, bounds(c), bounds(c + 1));
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) {
                            error = std::current_exception();
                        }
                        return;
                    }
                }
            });
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace bellcoh
