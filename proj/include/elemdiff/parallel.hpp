#pragma once

#include <cstddef>
#include <functional>

namespace elemdiff {

/// Worker count: ELEMDIFF_THREADS if set, else hardware concurrency.
unsigned defaultThreadCount();

/// Runs body(chunk, begin, end) over [0, count) split into contiguous chunks,
/// one per worker. Chunk boundaries depend only on (count, threads), so
/// results merged in chunk order are deterministic.
void parallelChunks(std::size_t count, unsigned threads,
                    const std::function<void(unsigned chunk, std::size_t begin, std::size_t end)>& body);

}  // namespace elemdiff
