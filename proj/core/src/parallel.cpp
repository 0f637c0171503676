#include "powsum/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace powsum {

unsigned parallel_block_count(uint64_t count, unsigned threads) noexcept {
    if (count == 0) return 0;
    const uint64_t t = threads == 0 ? 1 : threads;
    return static_cast<unsigned>(std::min<uint64_t>(t, count));
}

void parallel_for_blocks(uint64_t count, unsigned threads,
                         const std::function<void(unsigned, uint64_t, uint64_t)>& body) {
    const unsigned blocks = parallel_block_count(count, threads);
    if (blocks == 0) return;
    if (blocks == 1) {
        body(0, 0, count);
        return;
    }

    const uint64_t base = count / blocks;
    const uint64_t extra = count % blocks;  // first `extra` blocks take one more
    std::vector<std::exception_ptr> errors(blocks);
    std::vector<std::thread> workers;
    workers.reserve(blocks);
    uint64_t lo = 0;
    for (unsigned b = 0; b < blocks; ++b) {
        const uint64_t hi = lo + base + (b < extra ? 1 : 0);
        workers.emplace_back([&body, &errors, b, lo, hi] {
            try {
                body(b, lo, hi);
            } catch (...) {
                errors[b] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace powsum
