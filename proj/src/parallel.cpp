#include "fqg/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace fqg {

std::size_t worker_count() {
  if (const char* env = std::getenv("FQG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void run_chunks(std::size_t n, std::size_t chunks, const std::function<void(std::size_t, std::size_t, std::size_t)>& chunk) {
  if (chunks <= 1) {
    chunk(0, 0, n);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::size_t t = 0; t < chunks; ++t) {
      const std::size_t begin = n * t / chunks;
      const std::size_t end = n * (t + 1) / chunks;
      threads.emplace_back([&, t, begin, end] {
        try {
          chunk(t, begin, end);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t chunks = std::min(worker_count(), n);
  run_chunks(n, chunks, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) body(i);
  });
}

Check sweep(std::string name, std::size_t n, const WitnessFn& probe) {
  struct Partial {
    std::optional<std::vector<long>> first;
    std::size_t failures = 0;
  };
  const std::size_t chunks = std::max<std::size_t>(1, std::min(worker_count(), n));
  std::vector<Partial> partial(chunks);
  run_chunks(n, chunks, [&](std::size_t t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (auto w = probe(i)) {
        if (!partial[t].first) partial[t].first = std::move(w);
        ++partial[t].failures;
      }
    }
  });
  Check check{std::move(name), true, {}, {}, 0};
  for (auto& p : partial) {
    if (p.failures == 0) continue;
    if (check.pass) check.witness = std::move(*p.first);
    check.pass = false;
    check.failures += p.failures;
  }
  return check;
}

}  // namespace fqg
