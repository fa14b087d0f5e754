#include "elemdiff/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace elemdiff {

unsigned defaultThreadCount() {
  if (const char* env = std::getenv("ELEMDIFF_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallelChunks(std::size_t count, unsigned threads,
                    const std::function<void(unsigned, std::size_t, std::size_t)>& body) {
  threads = std::max(1u, threads);
  if (count == 0) return;
  if (threads == 1 || count == 1) {
    body(0, 0, count);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(threads, count);
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> workers;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks, end = count * (c + 1) / chunks;
    workers.emplace_back([&, c, begin, end] {
      try {
        body(static_cast<unsigned>(c), begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace elemdiff
