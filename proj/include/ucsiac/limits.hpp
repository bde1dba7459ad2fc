#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ucs {

/// Caps on exhaustive enumerations. Every exhaustive routine checks the
/// relevant cap before starting and throws TooLargeForExhaustive (or
/// SearchSpaceTooLarge) instead of sampling.
struct Limits {
  std::uint64_t projective_points = 1'000'000;   // irreducibility / ideal scans
  std::uint64_t group_elements = 10'000'000;     // element scans in p-groups
  std::uint64_t element_pairs = 10'000'000;      // pairwise commutator scans
  std::uint64_t search_space = 1'000'000'000;    // isomorphism backtracking
  std::uint64_t central_maps = 1'000'000;        // p^(r^2) central map scan
  std::uint64_t hom_elements = 1'000'000;        // enumeration of a hom space
  unsigned jobs = 1;

  /// Same caps everywhere, as set by a single user budget.
  static Limits uniform(std::uint64_t budget, unsigned jobs = 1) {
    Limits l;
    l.projective_points = l.group_elements = l.element_pairs = budget;
    l.search_space = l.central_maps = l.hom_elements = budget;
    l.jobs = jobs;
    return l;
  }
};

/// Saturating integer power, used for size estimates only.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  constexpr std::uint64_t kMax = UINT64_MAX;
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > kMax / base) return kMax;
    out *= base;
  }
  return out;
}

/// Runs body(begin, end, worker) over disjoint chunks of [0, n).
inline void parallel_chunks(std::uint64_t n, unsigned jobs,
                            const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || n < 2 * static_cast<std::uint64_t>(jobs)) {
    body(0, n, 0);
    return;
  }
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::uint64_t chunk = (n + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ucs
