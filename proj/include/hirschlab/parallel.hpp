#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hirschlab {

/// Worker count from HIRSCHLAB_THREADS (0 or unset = hardware concurrency).
inline std::size_t thread_count() {
  std::size_t n = 0;
  if (const char* v = std::getenv("HIRSCHLAB_THREADS")) {
    try {
      n = static_cast<std::size_t>(std::stoul(v));
    } catch (const std::exception&) {
      n = 0;
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

/// Runs body(i) for i in [0, count). Each index must write only its own
/// output slot. If any call throws, the exception of the lowest failing
/// index is rethrown, so failures are reported deterministically.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  const auto workers = std::min(thread_count(), count);
  std::vector<std::exception_ptr> errors(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace hirschlab
