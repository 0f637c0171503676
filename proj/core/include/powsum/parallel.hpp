#pragma once

#include <cstdint>
#include <functional>

namespace powsum {

// Number of blocks parallel_for_blocks will use: min(threads, count),
// at least 1 unless count == 0.
unsigned parallel_block_count(uint64_t count, unsigned threads) noexcept;

// Splits [0, count) into contiguous blocks and runs body(block, lo, hi) for
// each, concurrently when more than one block. Blocks are indexed in order of
// their ranges. If workers throw, the exception from the lowest block index
// is rethrown on the calling thread.
void parallel_for_blocks(uint64_t count, unsigned threads,
                         const std::function<void(unsigned block, uint64_t lo, uint64_t hi)>& body);

}  // namespace powsum
